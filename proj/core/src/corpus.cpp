#include "pgog/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "pgog/seeds.hpp"

namespace pgog {

namespace {

int rand_below(std::mt19937_64& rng, int n) {
  return n <= 1 ? 0 : int(rng() % uint64_t(n));
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[size_t(rand_below(rng, int(i)))]);
}

int element_order(const FiniteGroup& g, Elt x) {
  int n = 1;
  Elt y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++n;
  }
  return n;
}

// randomized backtracking extension of a partial map to a full homomorphism;
// partial entries of -1 are free
class HomSearch {
 public:
  HomSearch(const GroupPtr& dom, const GroupPtr& cod, bool injective,
            std::mt19937_64& rng)
      : dom_(dom), cod_(cod), injective_(injective), rng_(rng) {
    dorder_.resize(dom->order());
    corder_.resize(cod->order());
    for (Elt x = 0; x < dom->order(); ++x) dorder_[x] = element_order(*dom, x);
    for (Elt y = 0; y < cod->order(); ++y) corder_[y] = element_order(*cod, y);
  }

  std::optional<std::vector<Elt>> run(std::vector<Elt> partial) {
    std::vector<char> used(cod_->order(), 0);
    if (partial[dom_->identity()] == -1) partial[dom_->identity()] = cod_->identity();
    if (injective_)
      for (Elt x = 0; x < dom_->order(); ++x)
        if (partial[x] != -1) {
          if (used[partial[x]]) return std::nullopt;
          used[partial[x]] = 1;
        }
    budget_ = 200000;
    if (!close(partial, used)) return std::nullopt;
    if (!dfs(partial, used)) return std::nullopt;
    return partial;
  }

 private:
  bool compatible(Elt x, Elt y) const {
    if (injective_) return corder_[y] == dorder_[x];
    return dorder_[x] % corder_[y] == 0;
  }

  bool close(std::vector<Elt>& map, std::vector<char>& used) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elt x = 0; x < dom_->order(); ++x) {
        if (map[x] == -1) continue;
        for (Elt y = 0; y < dom_->order(); ++y) {
          if (map[y] == -1) continue;
          Elt z = dom_->mul(x, y);
          Elt im = cod_->mul(map[x], map[y]);
          if (map[z] == -1) {
            if (injective_) {
              if (used[im]) return false;
              used[im] = 1;
            }
            map[z] = im;
            changed = true;
          } else if (map[z] != im) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool dfs(std::vector<Elt>& map, std::vector<char>& used) {
    if (--budget_ < 0) return false;
    Elt next = -1;
    for (Elt x = 0; x < dom_->order(); ++x)
      if (map[x] == -1) {
        next = x;
        break;
      }
    if (next == -1) return true;

    std::vector<Elt> candidates;
    for (Elt y = 0; y < cod_->order(); ++y)
      if (compatible(next, y) && !(injective_ && used[y])) candidates.push_back(y);
    shuffle_vec(candidates, rng_);
    for (Elt y : candidates) {
      std::vector<Elt> m2 = map;
      std::vector<char> u2 = used;
      m2[next] = y;
      if (injective_) u2[y] = 1;
      if (close(m2, u2) && dfs(m2, u2)) {
        map = std::move(m2);
        used = std::move(u2);
        return true;
      }
    }
    return false;
  }

  GroupPtr dom_, cod_;
  bool injective_;
  std::mt19937_64& rng_;
  std::vector<int> dorder_, corder_;
  long long budget_ = 0;
};

std::optional<GroupHom> search_hom(const GroupPtr& dom, const GroupPtr& cod,
                                   std::vector<Elt> partial, bool injective,
                                   std::mt19937_64& rng) {
  auto found = HomSearch(dom, cod, injective, rng).run(std::move(partial));
  if (!found) return std::nullopt;
  return GroupHom(dom, cod, std::move(*found));
}

long long ipow(int b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

GroupSpec modular_p3_spec(int p) {
  // C_{p^2} : C_p with the generator acting as x -> x(1+p); D4 at p = 2
  int n = int(ipow(p, 2));
  std::vector<std::vector<Elt>> action(p, std::vector<Elt>(n));
  for (int a = 0; a < p; ++a) {
    long long mult = 1;
    for (int i = 0; i < a; ++i) mult = mult * (1 + p) % n;
    for (int x = 0; x < n; ++x) action[a][x] = Elt(x * mult % n);
  }
  return GroupSpec::semidirect(GroupSpec::cyclic(n), GroupSpec::cyclic(p),
                               std::move(action));
}

GroupSpec shear_p3_spec(int p) {
  // (C_p x C_p) : C_p shearing the second coordinate by the first
  int n = p * p;
  std::vector<std::vector<Elt>> action(p, std::vector<Elt>(n));
  for (int a = 0; a < p; ++a)
    for (int x = 0; x < n; ++x) {
      int d0 = x / p, d1 = x % p;
      action[a][x] = Elt(d0 * p + (d1 + a * d0) % p);
    }
  return GroupSpec::semidirect(GroupSpec::elementary_abelian(p, 2),
                               GroupSpec::cyclic(p), std::move(action));
}

std::vector<GroupSpec> group_menu(int p, int max_order, bool allow_trivial) {
  int emax = 0;
  long long v = 1;
  while (v * p <= max_order) {
    v *= p;
    ++emax;
  }
  std::vector<GroupSpec> menu;
  if (allow_trivial) menu.push_back(GroupSpec::cyclic(1));
  for (int a = 1; a <= emax; ++a) menu.push_back(GroupSpec::cyclic(int(ipow(p, a))));
  for (int k = 2; k <= emax; ++k) menu.push_back(GroupSpec::elementary_abelian(p, k));
  for (int a = 2; a <= emax; ++a)
    for (int b = 1; b <= a && a + b <= emax; ++b)
      menu.push_back(GroupSpec::product(
          {GroupSpec::cyclic(int(ipow(p, a))), GroupSpec::cyclic(int(ipow(p, b)))}));
  if (emax >= 3) {
    menu.push_back(modular_p3_spec(p));
    menu.push_back(shear_p3_spec(p));
  }
  return menu;
}

GroupPtr random_group(int p, int max_order, bool allow_trivial, std::mt19937_64& rng) {
  std::vector<GroupSpec> menu = group_menu(p, max_order, allow_trivial);
  // keep the trivial group rare when present
  if (allow_trivial && menu.size() > 1 && rand_below(rng, 12) != 0)
    return group_from_spec(menu[1 + size_t(rand_below(rng, int(menu.size()) - 1))]);
  return group_from_spec(menu[size_t(rand_below(rng, int(menu.size())))]);
}

OrientedGraph random_graph(int max_vertices, std::mt19937_64& rng) {
  int nv = 1 + rand_below(rng, max_vertices);
  std::vector<int> verts(nv);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<EdgeRec> edges;
  int eid = 0;
  for (int v = 1; v < nv; ++v) {
    int u = rand_below(rng, v);
    if (rand_below(rng, 2))
      edges.push_back(EdgeRec{eid++, v, u});
    else
      edges.push_back(EdgeRec{eid++, u, v});
  }
  int extra = rand_below(rng, 3);
  for (int i = 0; i < extra; ++i)
    edges.push_back(EdgeRec{eid++, rand_below(rng, nv), rand_below(rng, nv)});
  return make_graph(std::move(verts), std::move(edges));
}

std::optional<GraphOfGroups> random_gog(int p, const CorpusParams& params,
                                        std::mt19937_64& rng) {
  GraphOfGroups g;
  g.p = p;
  g.graph = random_graph(params.max_vertices, rng);
  for (int v : g.graph.vertices)
    g.vgroups.emplace(v, random_group(p, params.max_group_order, true, rng));

  for (const auto& e : g.graph.edges) {
    const GroupPtr& g0 = g.vgroups.at(e.d0);
    std::vector<Subgroup> subs = all_subgroups(g0);
    SubgroupGroup mat = subgroup_as_group(subs[size_t(rand_below(rng, int(subs.size())))]);
    std::vector<Elt> free_map(mat.group->order(), -1);
    auto b1 = search_hom(mat.group, g.vgroups.at(e.d1), free_map, true, rng);
    if (!b1) {
      mat = subgroup_as_group(trivial_subgroup(g0));
      b1 = GroupHom(mat.group, g.vgroups.at(e.d1),
                    std::vector<Elt>{g.vgroups.at(e.d1)->identity()});
    }
    g.egroups.emplace(e.id, mat.group);
    g.b0.emplace(e.id, mat.embedding);
    g.b1.emplace(e.id, *b1);
  }
  require_valid_gog(g);
  return g;
}

struct BfsStep {
  int vertex;
  int via_edge;  // -1 at the root
  int from;
};

std::vector<BfsStep> tree_order(const OrientedGraph& graph, const SpanningTree& tree) {
  std::map<int, std::vector<int>> adj;  // vertex -> tree edge ids
  for (int eid : tree.tree_edges) {
    const EdgeRec& e = graph.edge(eid);
    adj[e.d0].push_back(eid);
    adj[e.d1].push_back(eid);
  }
  std::vector<BfsStep> order;
  std::map<int, bool> seen;
  order.push_back(BfsStep{tree.root, -1, tree.root});
  seen[tree.root] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i].vertex;
    for (int eid : adj[v]) {
      const EdgeRec& e = graph.edge(eid);
      int w = e.d0 == v ? e.d1 : e.d0;
      if (seen[w]) continue;
      seen[w] = true;
      order.push_back(BfsStep{w, eid, v});
    }
  }
  return order;
}

std::optional<OpenSubgroupSpec> build_candidate(int p, const CorpusParams& params,
                                                std::mt19937_64& rng) {
  auto raw = random_gog(p, params, rng);
  if (!raw) return std::nullopt;
  GraphOfGroups gamma = reduce(*raw).gog;

  GroupPtr target = random_group(p, params.max_target_order, false, rng);
  SpanningTree tree = spanning_tree(gamma.graph, gamma.graph.vertices.front());

  std::map<int, GroupHom> vmaps;
  for (const BfsStep& step : tree_order(gamma.graph, tree)) {
    const GroupPtr& vg = gamma.vgroups.at(step.vertex);
    std::vector<Elt> partial(vg->order(), -1);
    if (step.via_edge >= 0) {
      const EdgeRec& e = gamma.graph.edge(step.via_edge);
      const GroupHom& mine = step.vertex == e.d0 ? gamma.b0.at(e.id) : gamma.b1.at(e.id);
      const GroupHom& theirs = step.vertex == e.d0 ? gamma.b1.at(e.id) : gamma.b0.at(e.id);
      const GroupHom& known = vmaps.at(step.from);
      for (Elt x = 0; x < mine.domain()->order(); ++x) {
        Elt at = mine(x), want = known(theirs(x));
        if (partial[at] != -1 && partial[at] != want) return std::nullopt;
        partial[at] = want;
      }
    }
    auto f = search_hom(vg, target, std::move(partial), false, rng);
    if (!f) return std::nullopt;
    vmaps.emplace(step.vertex, *f);
  }

  std::map<int, Elt> tau;
  for (const auto& e : gamma.graph.edges) {
    if (tree.contains(e.id)) continue;
    const GroupHom& m0 = vmaps.at(e.d0);
    const GroupHom& m1 = vmaps.at(e.d1);
    const GroupHom& b0 = gamma.b0.at(e.id);
    const GroupHom& b1 = gamma.b1.at(e.id);
    std::vector<Elt> ok;
    for (Elt t = 0; t < target->order(); ++t) {
      bool good = true;
      for (Elt x = 0; x < b0.domain()->order() && good; ++x)
        good = target->conj(t, m1(b1(x))) == m0(b0(x));
      if (good) ok.push_back(t);
    }
    if (ok.empty()) return std::nullopt;
    tau[e.id] = ok[size_t(rand_below(rng, int(ok.size())))];
  }

  PQuotientMap phi =
      build_quotient_map(std::move(gamma), tree, target, std::move(vmaps), std::move(tau));

  std::vector<OpenSubgroupSpec> cands;
  std::vector<size_t> index_p;
  for (const Subgroup& s : all_subgroups(target)) {
    OpenSubgroupSpec os = make_open_subgroup(phi, s);
    if (!os.normal_in_image || os.index > params.max_index) continue;
    if (os.index == p) index_p.push_back(cands.size());
    cands.push_back(std::move(os));
  }
  if (cands.empty()) return std::nullopt;
  if (!index_p.empty() && rand_below(rng, 2) == 0)
    return cands[index_p[size_t(rand_below(rng, int(index_p.size())))]];
  return cands[size_t(rand_below(rng, int(cands.size())))];
}

OpenSubgroupSpec fallback_instance(int p, const CorpusParams& params,
                                   std::mt19937_64& rng) {
  GraphOfGroups g;
  g.p = p;
  g.graph = random_graph(params.max_vertices, rng);
  for (int v : g.graph.vertices)
    g.vgroups.emplace(v, random_group(p, params.max_group_order, true, rng));
  for (const auto& e : g.graph.edges) {
    SubgroupGroup mat = subgroup_as_group(trivial_subgroup(g.vgroups.at(e.d0)));
    g.egroups.emplace(e.id, mat.group);
    g.b0.emplace(e.id, mat.embedding);
    g.b1.emplace(e.id, GroupHom(mat.group, g.vgroups.at(e.d1),
                                {g.vgroups.at(e.d1)->identity()}));
  }
  GraphOfGroups gamma = reduce(g).gog;

  GroupPtr target = group_from_spec(GroupSpec::cyclic(p));
  SpanningTree tree = spanning_tree(gamma.graph, gamma.graph.vertices.front());
  std::map<int, GroupHom> vmaps;
  for (int v : gamma.graph.vertices)
    vmaps.emplace(v, trivial_hom(gamma.vgroups.at(v), target));
  std::map<int, Elt> tau;
  for (const auto& e : gamma.graph.edges)
    if (!tree.contains(e.id)) tau[e.id] = target->identity();
  PQuotientMap phi =
      build_quotient_map(std::move(gamma), tree, target, std::move(vmaps), std::move(tau));
  return make_open_subgroup(std::move(phi), trivial_subgroup(target));
}

}  // namespace

CorpusInstance generate_instance(int index, uint64_t corpus_seed,
                                 const CorpusParams& params) {
  uint64_t iseed = derive_seed(corpus_seed, uint64_t(index));
  int p = index % 2 == 0 ? 2 : 3;
  for (int attempt = 0; attempt < params.retries; ++attempt) {
    std::mt19937_64 rng(derive_seed(iseed, uint64_t(attempt)));
    auto spec = build_candidate(p, params, rng);
    if (spec) return CorpusInstance{index, iseed, std::move(*spec)};
  }
  std::mt19937_64 rng(derive_seed(iseed, 0x66616c6cULL));
  return CorpusInstance{index, iseed, fallback_instance(p, params, rng)};
}

std::vector<CorpusInstance> generate_corpus(int count, uint64_t seed,
                                            const CorpusParams& params) {
  std::vector<CorpusInstance> out;
  out.reserve(size_t(count));
  for (int i = 0; i < count; ++i) out.push_back(generate_instance(i, seed, params));
  return out;
}

InstanceVerdict verify_instance(const OpenSubgroupSpec& spec) {
  InstanceVerdict v;
  v.limitation = check_limitation(spec);
  InducedDecomposition dec = induced_gog(spec);
  v.accounting_ok = index_accounting(dec).ok;
  v.two_sided_ok = edge_two_sided_check(dec);
  v.partition_applicable = spec.normal_in_image && spec.index == spec.phi.gog.p;
  if (v.partition_applicable) v.partition = partition_diagnostics(spec);
  return v;
}

}  // namespace pgog
