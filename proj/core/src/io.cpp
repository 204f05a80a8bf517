#include "pgog/io.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

namespace pgog {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr size_t kInlineLimit = 100;

bool is_primitive(const ojson& v) { return !v.is_object() && !v.is_array(); }

std::optional<std::string> inline_render(const ojson& v) {
  if (is_primitive(v)) return v.dump();
  std::string s;
  if (v.is_array()) {
    s = "[";
    bool first = true;
    for (const auto& e : v) {
      if (!is_primitive(e)) return std::nullopt;
      if (!first) s += ", ";
      s += e.dump();
      first = false;
    }
    s += "]";
  } else {
    s = "{";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!is_primitive(it.value())) return std::nullopt;
      if (!first) s += ", ";
      s += ojson(it.key()).dump() + ": " + it.value().dump();
      first = false;
    }
    s += "}";
  }
  if (s.size() > kInlineLimit) return std::nullopt;
  return s;
}

void render(const ojson& v, int indent, std::string& out) {
  if (auto inl = inline_render(v)) {
    out += *inl;
    return;
  }
  std::string pad(indent + 2, ' ');
  if (v.is_array()) {
    out += "[\n";
    for (size_t i = 0; i < v.size(); ++i) {
      out += pad;
      render(v[i], indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += "{\n";
    size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      out += pad + ojson(it.key()).dump() + ": ";
      render(it.value(), indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  }
}

std::string canonical(const ojson& v) {
  std::string out;
  render(v, 0, out);
  out += "\n";
  return out;
}

// object keys ordered as strings
template <typename T, typename F>
ojson keyed_object(const std::map<int, T>& m, F value_of) {
  std::vector<std::pair<std::string, ojson>> entries;
  for (const auto& [id, v] : m) entries.emplace_back(std::to_string(id), value_of(v));
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ojson out = ojson::object();
  for (auto& [k, v] : entries) out[k] = std::move(v);
  return out;
}

ojson spec_to_json(const GroupSpec& s) {
  ojson j = ojson::object();
  switch (s.kind) {
    case GroupSpec::Kind::Cyclic:
      j["kind"] = "cyclic";
      j["n"] = s.n;
      break;
    case GroupSpec::Kind::ElementaryAbelian:
      j["kind"] = "elementary_abelian";
      j["p"] = s.p;
      j["k"] = s.k;
      break;
    case GroupSpec::Kind::Product: {
      j["kind"] = "product";
      ojson f = ojson::array();
      for (const auto& sub : s.sub) f.push_back(spec_to_json(sub));
      j["factors"] = std::move(f);
      break;
    }
    case GroupSpec::Kind::Semidirect:
      j["kind"] = "semidirect";
      j["normal"] = spec_to_json(s.sub[0]);
      j["acting"] = spec_to_json(s.sub[1]);
      j["action"] = s.action;
      break;
    case GroupSpec::Kind::Table:
      j["kind"] = "table";
      j["table"] = s.table;
      break;
  }
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

GroupSpec spec_from_json(const json& j) {
  std::string kind = j.at("kind");
  GroupSpec s;
  if (kind == "cyclic") {
    s = GroupSpec::cyclic(j.at("n"));
  } else if (kind == "elementary_abelian") {
    s = GroupSpec::elementary_abelian(j.at("p"), j.at("k"));
  } else if (kind == "product") {
    std::vector<GroupSpec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(spec_from_json(f));
    s = GroupSpec::product(std::move(factors));
  } else if (kind == "semidirect") {
    s = GroupSpec::semidirect(spec_from_json(j.at("normal")),
                              spec_from_json(j.at("acting")),
                              j.at("action").get<std::vector<std::vector<Elt>>>());
  } else if (kind == "table") {
    s = GroupSpec::raw_table(j.at("table").get<std::vector<std::vector<Elt>>>());
  } else {
    throw std::invalid_argument("unknown group kind '" + kind + "'");
  }
  if (j.contains("label")) s = s.with_label(j.at("label"));
  return s;
}

ojson hom_to_json(const GroupHom& f) {
  std::vector<Elt> gens = minimal_generators(f.domain());
  std::vector<Elt> images;
  for (Elt g : gens) images.push_back(f(g));
  ojson j = ojson::object();
  j["gens"] = gens;
  j["images"] = images;
  return j;
}

GroupHom hom_from_json(const json& j, const GroupPtr& domain, const GroupPtr& codomain,
                       const std::string& where) {
  try {
    return hom_from_generator_images(domain, codomain,
                                     j.at("gens").get<std::vector<Elt>>(),
                                     j.at("images").get<std::vector<Elt>>());
  } catch (const std::exception& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

std::map<int, json> indexed_block(const json& j, const std::string& key) {
  std::map<int, json> out;
  for (const auto& [k, v] : j.at(key).items()) {
    size_t pos = 0;
    int id = std::stoi(k, &pos);
    if (pos != k.size()) throw std::invalid_argument(key + " key '" + k + "' is not an id");
    out.emplace(id, v);
  }
  return out;
}

std::string letter_name(const Letter& l) {
  if (l.kind == Letter::Kind::Stable)
    return "t" + std::to_string(l.obj) + (l.exp < 0 ? "^-1" : "");
  return "g" + std::to_string(l.obj) + "_" + std::to_string(l.elt);
}

ojson word_to_json(const Word& w) {
  ojson out = ojson::array();
  for (const Letter& l : w) {
    ojson j = ojson::object();
    if (l.kind == Letter::Kind::VGen) {
      j["kind"] = "vgen";
      j["vertex"] = l.obj;
      j["element"] = l.elt;
    } else {
      j["kind"] = "stable";
      j["edge"] = l.obj;
      j["exp"] = l.exp;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

GraphOfGroups parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance is not valid JSON: ") + e.what());
  }
  try {
    GraphOfGroups g;
    g.p = j.at("p");
    std::vector<int> vertices = j.at("graph").at("vertices").get<std::vector<int>>();
    std::vector<EdgeRec> edges;
    for (const auto& e : j.at("graph").at("edges"))
      edges.push_back(EdgeRec{e.at("id"), e.at("d0"), e.at("d1")});
    g.graph = make_graph(std::move(vertices), std::move(edges));

    for (const auto& [id, spec] : indexed_block(j, "vertex_groups"))
      g.vgroups.emplace(id, group_from_spec(spec_from_json(spec)));
    for (const auto& [id, spec] : indexed_block(j, "edge_groups"))
      g.egroups.emplace(id, group_from_spec(spec_from_json(spec)));

    for (const auto& [id, b] : indexed_block(j, "boundaries")) {
      if (!g.egroups.count(id))
        throw std::invalid_argument("boundaries name edge " + std::to_string(id) +
                                    " which has no edge group");
      const EdgeRec& e = g.graph.edge(id);
      const GroupPtr& eg = g.egroups.at(id);
      g.b0.emplace(id, hom_from_json(b.at("b0"), eg, g.vgroups.at(e.d0),
                                     "edge " + std::to_string(id) + " b0"));
      g.b1.emplace(id, hom_from_json(b.at("b1"), eg, g.vgroups.at(e.d1),
                                     "edge " + std::to_string(id) + " b1"));
    }
    require_valid_gog(g);
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

std::string emit_instance(const GraphOfGroups& g) {
  ojson j = ojson::object();
  j["p"] = g.p;
  ojson graph = ojson::object();
  graph["vertices"] = g.graph.vertices;
  ojson edges = ojson::array();
  for (const auto& e : g.graph.edges) {
    ojson rec = ojson::object();
    rec["id"] = e.id;
    rec["d0"] = e.d0;
    rec["d1"] = e.d1;
    edges.push_back(std::move(rec));
  }
  graph["edges"] = std::move(edges);
  j["graph"] = std::move(graph);
  j["vertex_groups"] =
      keyed_object(g.vgroups, [](const GroupPtr& p) { return spec_to_json(p->provenance()); });
  j["edge_groups"] =
      keyed_object(g.egroups, [](const GroupPtr& p) { return spec_to_json(p->provenance()); });

  std::map<int, ojson> bounds;
  for (const auto& e : g.graph.edges) {
    ojson b = ojson::object();
    b["b0"] = hom_to_json(g.b0.at(e.id));
    b["b1"] = hom_to_json(g.b1.at(e.id));
    bounds.emplace(e.id, std::move(b));
  }
  j["boundaries"] = keyed_object(bounds, [](const ojson& b) { return b; });
  return canonical(j);
}

QuotientData parse_quotient(const std::string& text, const GraphOfGroups& gog) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("quotient is not valid JSON: ") + e.what());
  }
  try {
    GroupPtr target = group_from_spec(spec_from_json(j.at("target")));
    if (gog.graph.vertices.empty()) throw std::invalid_argument("empty graph");
    SpanningTree tree = make_spanning_tree(
        gog.graph, j.at("tree").get<std::vector<int>>(), gog.graph.vertices.front());

    std::map<int, GroupHom> vmaps;
    for (const auto& [id, hom] : indexed_block(j, "vertex_maps")) {
      if (!gog.vgroups.count(id))
        throw std::invalid_argument("vertex_maps names unknown vertex " + std::to_string(id));
      vmaps.emplace(id, hom_from_json(hom, gog.vgroups.at(id), target,
                                      "vertex " + std::to_string(id) + " map"));
    }
    std::map<int, Elt> tau;
    for (const auto& [id, t] : indexed_block(j, "stable_letters")) tau[id] = t.get<Elt>();

    PQuotientMap phi = build_quotient_map(gog, tree, target, std::move(vmaps), std::move(tau));
    Subgroup q = make_subgroup(target, j.at("subgroup").get<std::vector<Elt>>());
    return QuotientData{std::move(phi), std::move(q)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed quotient: ") + e.what());
  }
}

std::string emit_quotient(const PQuotientMap& phi, const Subgroup& q) {
  ojson j = ojson::object();
  j["target"] = spec_to_json(phi.target->provenance());
  j["tree"] = phi.tree.tree_edges;
  j["vertex_maps"] = keyed_object(phi.vmaps, [](const GroupHom& f) { return hom_to_json(f); });
  std::map<int, Elt> letters;
  for (const auto& [e, t] : phi.tau)
    if (!phi.tree.contains(e)) letters.emplace(e, t);
  j["stable_letters"] = keyed_object(letters, [](Elt t) { return ojson(t); });
  j["subgroup"] = q.elements;
  return canonical(j);
}

std::string emit_transversal(const InducedDecomposition& dec) {
  ojson j = ojson::object();
  j["index"] = dec.index;
  j["vertices"] = keyed_object(dec.vertex_info, [](const DecompObject& o) {
    ojson v = ojson::object();
    v["source"] = o.source_id;
    v["rep"] = o.rep;
    return v;
  });
  std::map<int, ojson> edges;
  for (const auto& [id, info] : dec.edge_info) {
    ojson e = ojson::object();
    e["source"] = info.source_id;
    e["rep"] = info.rep;
    if (dec.groups_filled) {
      e["conj0"] = dec.conj0.at(id);
      e["conj1"] = dec.conj1.at(id);
    }
    edges.emplace(id, std::move(e));
  }
  j["edges"] = keyed_object(edges, [](const ojson& e) { return e; });
  return canonical(j);
}

std::string presentation_text(const Presentation& p) {
  std::string out;
  out += "basepoint: " + std::to_string(p.basepoint) + "\n";
  out += "tree edges:";
  for (int e : p.tree.tree_edges) out += " " + std::to_string(e);
  out += "\ngenerators (" + std::to_string(p.generators.size()) + "):";
  for (const Letter& l : p.generators) out += " " + letter_name(l);
  out += "\nrelators (" + std::to_string(p.relators.size()) + "):\n";
  for (const Word& w : p.relators) {
    out += "  ";
    if (w.empty()) out += "1";
    for (size_t i = 0; i < w.size(); ++i)
      out += (i ? "*" : "") + letter_name(w[i]);
    out += "\n";
  }
  return out;
}

std::string presentation_json(const Presentation& p) {
  ojson j = ojson::object();
  j["basepoint"] = p.basepoint;
  j["tree"] = p.tree.tree_edges;
  ojson gens = ojson::array();
  for (const Letter& l : p.generators) gens.push_back(word_to_json({l})[0]);
  j["generators"] = std::move(gens);
  ojson rels = ojson::array();
  for (const Word& w : p.relators) rels.push_back(word_to_json(w));
  j["relators"] = std::move(rels);
  j["stable_letters"] = p.stable_letter_count;
  return canonical(j);
}

std::string gog_report_json(const GogReport& r) {
  ojson j = ojson::object();
  j["valid"] = r.valid;
  j["problems"] = r.problems;
  return canonical(j);
}

std::string reduce_summary_json(const GraphOfGroups& input, const ReduceResult& r) {
  ojson j = ojson::object();
  j["input_vertices"] = int(input.graph.vertices.size());
  j["input_edges"] = int(input.graph.edges.size());
  j["vertices"] = int(r.gog.graph.vertices.size());
  j["edges"] = int(r.gog.graph.edges.size());
  j["collapsed_edges"] = r.collapsed_edges;
  j["vertex_merge"] = keyed_object(r.vertex_merge, [](int v) { return ojson(v); });
  return canonical(j);
}

std::string decompose_summary_json(const InducedDecomposition& dec) {
  ojson j = ojson::object();
  j["index"] = dec.index;
  j["vertices"] = int(dec.delta0.graph.vertices.size());
  j["edges"] = int(dec.delta0.graph.edges.size());
  j["euler_characteristic"] = rational_str(euler_characteristic(dec.delta0));
  return canonical(j);
}

std::string limitation_json(const LimitationReport& r) {
  ojson j = ojson::object();
  j["v_gamma"] = r.v_gamma;
  j["e_gamma"] = r.e_gamma;
  j["v_delta0"] = r.v_delta0;
  j["e_delta0"] = r.e_delta0;
  j["v_delta"] = r.v_delta;
  j["e_delta"] = r.e_delta;
  j["index"] = r.index;
  j["normal"] = r.normal;
  j["delta_matches_gamma"] = r.delta_matches_gamma;
  j["holds_lower"] = r.holds_lower;
  j["strict_expected"] = r.strict_expected;
  j["holds_strict"] = r.holds_strict;
  j["holds_upper_edges"] = r.holds_upper_edges;
  j["holds_upper_vertices"] = r.holds_upper_vertices;
  j["holds_upper_total"] = r.holds_upper_total;
  j["euler_multiplicative"] = r.euler_multiplicative;
  j["chi_gamma"] = rational_str(r.chi_gamma);
  j["chi_delta0"] = rational_str(r.chi_delta0);
  j["hard_failure"] = r.hard_failure();
  j["problems"] = r.problems;
  return canonical(j);
}

std::string partition_json(const PartitionReport& r) {
  ojson j = ojson::object();
  j["p"] = r.p;
  j["index"] = r.index;
  j["fibres_uniform"] = r.fibres_uniform;
  j["v1"] = r.v1;
  j["v2"] = r.v2;
  j["edge_classes"] = keyed_object(r.edge_class, [](EdgeClass c) {
    switch (c) {
      case EdgeClass::BothFixed: return ojson("fixed");
      case EdgeClass::BothMoved: return ojson("moved");
      default: return ojson("mixed");
    }
  });
  j["mixed_edge_index"] = keyed_object(r.mixed_edge_index, [](int i) { return ojson(i); });
  j["bound"] = r.bound;
  j["circuit_loops"] = r.circuit_loops;
  j["adjusted_bound"] = r.adjusted_bound;
  j["e_gamma"] = r.e_gamma;
  j["e_delta"] = r.e_delta;
  j["holds_bound"] = r.holds_bound;
  j["holds_adjusted"] = r.holds_adjusted;
  j["bound_covers_gamma"] = r.bound_covers_gamma;
  j["problems"] = r.problems;
  return canonical(j);
}

std::string confluence_json(const ConfluenceReport& r) {
  ojson j = ojson::object();
  j["ok"] = r.ok;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["vertex_orders"] = r.vertex_orders;
  j["edge_orders"] = r.edge_orders;
  j["orders_match"] = r.orders_match;
  ojson trials = ojson::array();
  for (const auto& t : r.trials) {
    ojson tj = ojson::object();
    tj["seed"] = t.seed;
    tj["vertices"] = t.vertices;
    tj["edges"] = t.edges;
    tj["vertex_orders"] = t.vertex_orders;
    tj["edge_orders"] = t.edge_orders;
    trials.push_back(std::move(tj));
  }
  j["trials"] = std::move(trials);
  j["problems"] = r.problems;
  return canonical(j);
}

std::string growth_json(const GrowthTable& t) {
  ojson j = ojson::object();
  ojson rows = ojson::array();
  for (const auto& r : t.rows) {
    ojson rj = ojson::object();
    rj["instance"] = r.instance;
    rj["e_gamma"] = r.e_gamma;
    rj["e_delta"] = r.e_delta;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  j["strictly_increasing"] = t.strictly_increasing;
  return canonical(j);
}

std::string stage_json(const StageReport& r) {
  ojson j = ojson::object();
  j["p"] = r.p;
  j["n"] = r.n;
  j["h_order"] = r.h_order;
  j["k_order"] = r.k_order;
  j["g_order"] = r.g_order;
  j["orders_ok"] = r.orders_ok;
  j["inclusions_injective"] = r.inclusions_injective;
  j["relations_ok"] = r.relations_ok;
  j["kn_central"] = r.kn_central;
  j["generated_ok"] = r.generated_ok;
  j["retraction_ok"] = r.retraction_ok;
  j["square_ok"] = r.square_ok;
  j["all_ok"] = r.all_ok();
  j["problems"] = r.problems;
  return canonical(j);
}

}  // namespace pgog
