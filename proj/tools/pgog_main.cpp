#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgog/corpus.hpp"
#include "pgog/io.hpp"
#include "pgog/seeds.hpp"

namespace {

using namespace pgog;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

const char* okstr(bool b) { return b ? "ok" : "FAIL"; }

GraphOfGroups load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

OpenSubgroupSpec load_spec(const std::string& instance_path,
                           const std::string& quotient_path) {
  GraphOfGroups g = load_instance(instance_path);
  QuotientData qd = parse_quotient(read_file(quotient_path), g);
  return make_open_subgroup(std::move(qd.phi), std::move(qd.q));
}

int run_validate(const std::string& file, bool json) {
  GraphOfGroups g = load_instance(file);
  if (json) {
    std::cout << gog_report_json(GogReport{true, {}});
  } else {
    std::cout << "valid: p=" << g.p << " |V|=" << g.graph.vertices.size()
              << " |E|=" << g.graph.edges.size()
              << " chi=" << rational_str(euler_characteristic(g)) << "\n";
  }
  return 0;
}

int run_reduce(const std::string& file, const std::string& order, bool seed_set,
               uint64_t seed, const std::string& out, bool json) {
  if (order == "random" && !seed_set) {
    std::cerr << "error: --order random requires --seed\n";
    return 2;
  }
  GraphOfGroups g = load_instance(file);
  ReduceResult r =
      reduce(g, order == "random" ? ReduceOrder::Random : ReduceOrder::Canonical, seed);
  if (json) {
    std::cout << reduce_summary_json(g, r);
  } else {
    std::cout << "reduced: |V| " << g.graph.vertices.size() << " -> "
              << r.gog.graph.vertices.size() << ", |E| " << g.graph.edges.size()
              << " -> " << r.gog.graph.edges.size()
              << ", free rank " << free_rank(r.gog.graph)
              << ", chi " << rational_str(euler_characteristic(r.gog)) << "\n";
    if (!r.collapsed_edges.empty()) {
      std::cout << "collapsed edges:";
      for (int e : r.collapsed_edges) std::cout << " " << e;
      std::cout << "\n";
    }
  }
  if (!out.empty()) {
    write_file(out, emit_instance(r.gog));
    if (!json) std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int run_present(const std::string& file, bool json) {
  GraphOfGroups g = load_instance(file);
  Presentation pres = fundamental_presentation(g);
  std::cout << (json ? presentation_json(pres) : presentation_text(pres));
  return 0;
}

int run_decompose(const std::string& file, const std::string& quotient,
                  const std::string& out, bool json) {
  OpenSubgroupSpec spec = load_spec(file, quotient);
  bool source_reduced = fictitious_edges(spec.phi.gog).empty();
  InducedDecomposition dec = induced_gog(spec);
  ReduceResult red = reduce(dec.delta0);

  if (json) {
    std::cout << decompose_summary_json(dec);
  } else {
    std::cout << "index=" << dec.index << "\n"
              << "delta0: |V|=" << dec.delta0.graph.vertices.size()
              << " |E|=" << dec.delta0.graph.edges.size()
              << " chi=" << rational_str(euler_characteristic(dec.delta0)) << "\n"
              << "reduced: |V|=" << red.gog.graph.vertices.size()
              << " |E|=" << red.gog.graph.edges.size() << "\n";
  }
  if (!out.empty()) {
    write_file(out, emit_instance(dec.delta0));
    write_file(out + ".transversal.json", emit_transversal(dec));
    if (!json) std::cout << "wrote " << out << " and " << out << ".transversal.json\n";
  }
  if (source_reduced && spec.normal_in_image) {
    LimitationReport rep = check_limitation(spec);
    if (!rep.holds_lower) {
      std::cerr << "finding: |E(delta)|=" << rep.e_delta << " < |E(gamma)|="
                << rep.e_gamma << " with q normal in the image\n";
      return 1;
    }
  }
  return 0;
}

int run_verify_limitation(const std::string& file, const std::string& quotient,
                          bool json) {
  OpenSubgroupSpec spec = load_spec(file, quotient);
  LimitationReport r = check_limitation(spec);
  if (json) {
    std::cout << limitation_json(r);
  } else {
    std::cout << "index=" << r.index << " normal=" << (r.normal ? "yes" : "no") << "\n"
              << "gamma: |V|=" << r.v_gamma << " |E|=" << r.e_gamma
              << "  delta0: |V|=" << r.v_delta0 << " |E|=" << r.e_delta0
              << "  delta: |V|=" << r.v_delta << " |E|=" << r.e_delta << "\n"
              << "lower bound E_delta >= E_gamma: "
              << (r.normal ? okstr(r.holds_lower) : "not applicable") << "\n"
              << "strictness: "
              << (r.strict_expected ? okstr(r.holds_strict) : "not expected") << "\n"
              << "upper bounds: " << okstr(r.holds_upper_edges && r.holds_upper_vertices)
              << "\n"
              << "euler: chi_gamma=" << rational_str(r.chi_gamma)
              << " chi_delta0=" << rational_str(r.chi_delta0)
              << " multiplicative: " << okstr(r.euler_multiplicative) << "\n";
    for (const auto& p : r.problems) std::cout << "problem: " << p << "\n";
  }
  return r.hard_failure() ? 1 : 0;
}

int run_verify_confluence(const std::string& file, int trials, uint64_t seed,
                          bool json) {
  GraphOfGroups g = load_instance(file);
  ConfluenceReport r = check_reduction_confluence(g, trials, seed);
  if (json) {
    std::cout << confluence_json(r);
  } else {
    std::cout << "canonical: |V|=" << r.vertices << " |E|=" << r.edges << "\n"
              << "trials=" << r.trials.size() << " agree on (|V|,|E|): " << okstr(r.ok)
              << "\n"
              << "group order multisets match: " << (r.orders_match ? "yes" : "no")
              << "\n";
    for (const auto& p : r.problems) std::cout << "problem: " << p << "\n";
  }
  return r.ok ? 0 : 1;
}

int run_verify_partition(const std::string& file, const std::string& quotient,
                         bool json) {
  OpenSubgroupSpec spec = load_spec(file, quotient);
  PartitionReport r = partition_diagnostics(spec);
  if (json) {
    std::cout << partition_json(r);
  } else {
    int fixed = 0, moved = 0, mixed = 0;
    for (const auto& [e, c] : r.edge_class) {
      (void)e;
      if (c == EdgeClass::BothFixed) ++fixed;
      else if (c == EdgeClass::BothMoved) ++moved;
      else ++mixed;
    }
    std::cout << "p=" << r.p << " index=" << r.index
              << " fibres uniform: " << okstr(r.fibres_uniform) << "\n"
              << "fixed vertices=" << r.v1.size() << " moved vertices=" << r.v2.size()
              << "\n"
              << "edges: fixed=" << fixed << " moved=" << moved << " mixed=" << mixed
              << "\n"
              << "bound=" << r.bound << " E_gamma=" << r.e_gamma
              << " E_delta=" << r.e_delta << "\n"
              << "bound <= E_delta: " << okstr(r.holds_bound)
              << ", E_gamma <= bound: " << okstr(r.bound_covers_gamma) << "\n";
    if (!r.circuit_loops.empty())
      std::cout << "adjusted bound=" << r.adjusted_bound
                << " (circuit loops: " << r.circuit_loops.size()
                << "), adjusted <= E_delta: " << okstr(r.holds_adjusted) << "\n";
    for (const auto& p : r.problems) std::cout << "problem: " << p << "\n";
  }
  bool pass = r.fibres_uniform && r.holds_bound && r.bound_covers_gamma;
  return pass ? 0 : 1;
}

int run_wilkes_stage(int p, int n, bool json) {
  WilkesStage s = build_stage(p, n);
  StageReport r = verify_stage(s);
  if (json) {
    std::cout << stage_json(r);
  } else {
    std::cout << "stage p=" << r.p << " n=" << r.n << ": |H|=" << r.h_order
              << " |K|=" << r.k_order << " |G|=" << r.g_order << "\n"
              << "orders: " << okstr(r.orders_ok)
              << ", inclusions injective: " << okstr(r.inclusions_injective)
              << ", relations: " << okstr(r.relations_ok)
              << ", center: " << okstr(r.kn_central)
              << ", generators span: " << okstr(r.generated_ok)
              << ", retraction: " << okstr(r.retraction_ok)
              << ", square: " << okstr(r.square_ok) << "\n";
    for (const auto& q : r.problems) std::cout << "problem: " << q << "\n";
  }
  return r.all_ok() ? 0 : 1;
}

int run_wilkes_chain(int p, int m, const std::string& out, bool json) {
  if (out.empty()) {
    std::cerr << "error: --emit-chain requires -o FILE\n";
    return 2;
  }
  GraphOfGroups g = build_chain_gog(p, m);
  write_file(out, emit_instance(g));
  if (!json)
    std::cout << "wrote " << out << ": |V|=" << g.graph.vertices.size()
              << " |E|=" << g.graph.edges.size() << "\n";
  return 0;
}

struct CorpusRow {
  int index = 0;
  uint64_t seed = 0;
  int p = 0;
  int sub_index = 0;
  bool normal = false;
  int vg = 0, eg = 0, v0 = 0, e0 = 0, e_delta = 0;
  bool ok = false;
  std::vector<std::string> problems;
};

int run_corpus(int count, uint64_t seed, const std::string& out_dir, int jobs,
               bool json) {
  if (jobs <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    jobs = hc ? int(hc) : 1;
    if (jobs > 8) jobs = 8;
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  std::vector<CorpusRow> rows(static_cast<size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      CorpusRow& row = rows[size_t(i)];
      row.index = i;
      try {
        CorpusInstance inst = generate_instance(i, seed);
        row.seed = inst.seed;
        row.p = inst.spec.phi.gog.p;
        row.sub_index = inst.spec.index;
        row.normal = inst.spec.normal_in_image;
        row.vg = int(inst.spec.phi.gog.graph.vertices.size());
        row.eg = int(inst.spec.phi.gog.graph.edges.size());
        InstanceVerdict v = verify_instance(inst.spec);
        row.v0 = v.limitation.v_delta0;
        row.e0 = v.limitation.e_delta0;
        row.e_delta = v.limitation.e_delta;
        row.ok = v.ok();
        row.problems = v.limitation.problems;
        if (v.partition_applicable)
          row.problems.insert(row.problems.end(), v.partition.problems.begin(),
                              v.partition.problems.end());
        if (!v.accounting_ok) row.problems.push_back("index accounting failed");
        if (!v.two_sided_ok) row.problems.push_back("edge stabilizer sides disagree");
        if (!out_dir.empty()) {
          char name[32];
          std::snprintf(name, sizeof(name), "instance_%04d", i);
          std::filesystem::path base = std::filesystem::path(out_dir) / name;
          write_file(base.string() + ".json", emit_instance(inst.spec.phi.gog));
          write_file(base.string() + ".quotient.json",
                     emit_quotient(inst.spec.phi, inst.spec.q));
        }
      } catch (const std::exception& e) {
        row.ok = false;
        row.problems.push_back(e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int findings = 0;
  for (const CorpusRow& r : rows)
    if (!r.ok) ++findings;

  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CorpusRow& r : rows) {
      nlohmann::ordered_json o;
      o["index"] = r.index;
      o["seed"] = r.seed;
      o["p"] = r.p;
      o["subgroup_index"] = r.sub_index;
      o["normal"] = r.normal;
      o["gamma"] = {{"vertices", r.vg}, {"edges", r.eg}};
      o["delta0"] = {{"vertices", r.v0}, {"edges", r.e0}};
      o["e_delta"] = r.e_delta;
      o["ok"] = r.ok;
      o["problems"] = r.problems;
      arr.push_back(std::move(o));
    }
    nlohmann::ordered_json top;
    top["count"] = count;
    top["findings"] = findings;
    top["instances"] = std::move(arr);
    std::cout << top.dump(2) << "\n";
  } else {
    for (const CorpusRow& r : rows) {
      std::printf("[%4d] p=%d index=%d normal=%s |V|=%d |E|=%d -> |V0|=%d |E0|=%d E_delta=%d %s\n",
                  r.index, r.p, r.sub_index, r.normal ? "yes" : "no", r.vg, r.eg,
                  r.v0, r.e0, r.e_delta, r.ok ? "ok" : "FINDING");
      for (const auto& p : r.problems) std::printf("       problem: %s\n", p.c_str());
    }
    std::printf("%d instances, %d findings\n", count, findings);
  }
  return findings ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite graphs of finite p-groups"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable output")->configurable(false);

  std::string file, quotient, out, order = "canonical";
  uint64_t seed = 0;
  bool seed_set = false;
  int trials = 20, p = 2, stage = 0, chain = 0, count = 0, jobs = 0;

  auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
  validate->add_option("file", file)->required();
  validate->add_flag("--json", json);

  auto* red = app.add_subcommand("reduce", "collapse fictitious edges");
  red->add_option("file", file)->required();
  red->add_option("--order", order, "canonical or random")
      ->check(CLI::IsMember({"canonical", "random"}));
  red->add_option("--seed", seed)->each([&](const std::string&) { seed_set = true; });
  red->add_option("-o,--output", out, "write the reduced instance here");
  red->add_flag("--json", json);

  auto* present = app.add_subcommand("present", "fundamental group presentation");
  present->add_option("file", file)->required();
  present->add_flag("--json", json);

  auto* dec = app.add_subcommand("decompose",
                                 "decomposition induced on a finite-index subgroup");
  dec->add_option("file", file)->required();
  dec->add_option("--quotient", quotient, "quotient map file")->required();
  dec->add_option("-o,--output", out, "write the induced instance here");
  dec->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "theorem checks");
  verify->require_subcommand(1);
  auto* vlim = verify->add_subcommand("limitation", "edge count bounds");
  vlim->add_option("file", file)->required();
  vlim->add_option("--quotient", quotient)->required();
  vlim->add_flag("--json", json);
  auto* vconf = verify->add_subcommand("confluence", "reduction order independence");
  vconf->add_option("file", file)->required();
  vconf->add_option("--trials", trials);
  vconf->add_option("--seed", seed)->required();
  vconf->add_flag("--json", json);
  auto* vpart = verify->add_subcommand("partition", "index-p fixed/moved partition");
  vpart->add_option("file", file)->required();
  vpart->add_option("--quotient", quotient)->required();
  vpart->add_flag("--json", json);

  auto* wilkes = app.add_subcommand("wilkes", "inaccessible group stages and chains");
  wilkes->add_option("--p", p)->required();
  auto* stage_opt = wilkes->add_option("--stage", stage, "verify one stage");
  auto* chain_opt = wilkes->add_option("--emit-chain", chain, "write a chain of stages");
  wilkes->add_option("-o,--output", out);
  wilkes->add_flag("--json", json);
  stage_opt->excludes(chain_opt);

  auto* corpus = app.add_subcommand("corpus", "generate and verify random instances");
  corpus->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  corpus->add_option("--seed", seed)->required();
  corpus->add_option("--out", out, "directory for generated instance files");
  corpus->add_option("--jobs", jobs, "worker threads, 0 = auto");
  corpus->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(file, json);
    if (red->parsed()) return run_reduce(file, order, seed_set, seed, out, json);
    if (present->parsed()) return run_present(file, json);
    if (dec->parsed()) return run_decompose(file, quotient, out, json);
    if (verify->parsed()) {
      if (vlim->parsed()) return run_verify_limitation(file, quotient, json);
      if (vconf->parsed()) return run_verify_confluence(file, trials, seed, json);
      if (vpart->parsed()) return run_verify_partition(file, quotient, json);
    }
    if (wilkes->parsed()) {
      if (stage_opt->count() > 0) return run_wilkes_stage(p, stage, json);
      if (chain_opt->count() > 0) return run_wilkes_chain(p, chain, out, json);
      std::cerr << "error: wilkes needs --stage or --emit-chain\n";
      return 2;
    }
    if (corpus->parsed()) return run_corpus(count, seed, out, jobs, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "finding: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
