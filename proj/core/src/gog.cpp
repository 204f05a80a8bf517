#include "pgog/gog.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace pgog {

namespace {

std::string obj_str(const char* kind, int id) {
  std::ostringstream os;
  os << kind << " " << id;
  return os.str();
}

}  // namespace

bool gog_equal(const GraphOfGroups& a, const GraphOfGroups& b) {
  if (a.p != b.p || !(a.graph == b.graph)) return false;
  auto groups_match = [](const std::map<int, GroupPtr>& x, const std::map<int, GroupPtr>& y) {
    if (x.size() != y.size()) return false;
    for (auto it = x.begin(), jt = y.begin(); it != x.end(); ++it, ++jt)
      if (it->first != jt->first || !groups_equal(it->second, jt->second)) return false;
    return true;
  };
  if (!groups_match(a.vgroups, b.vgroups) || !groups_match(a.egroups, b.egroups)) return false;
  return a.b0 == b.b0 && a.b1 == b.b1;
}

GogReport validate_gog(const GraphOfGroups& g) {
  GogReport rep;
  auto problem = [&](const std::string& msg) { rep.problems.push_back(msg); };

  if (!is_prime(g.p)) problem("p is not prime");
  GraphReport graph_rep = validate_graph(g.graph);
  for (const auto& msg : graph_rep.problems) problem(msg);
  if (graph_rep.valid && !graph_rep.connected) problem("graph is disconnected");
  if (!rep.problems.empty()) return rep;

  for (int v : g.graph.vertices) {
    auto it = g.vgroups.find(v);
    if (it == g.vgroups.end()) {
      problem(obj_str("vertex", v) + " has no group");
      continue;
    }
    if (!is_p_group(*it->second, g.p))
      problem(obj_str("vertex", v) + " group is not a " + std::to_string(g.p) + "-group");
  }
  if (g.vgroups.size() != g.graph.vertices.size()) problem("stray vertex group entries");

  for (const auto& e : g.graph.edges) {
    auto it = g.egroups.find(e.id);
    if (it == g.egroups.end()) {
      problem(obj_str("edge", e.id) + " has no group");
      continue;
    }
    if (!is_p_group(*it->second, g.p))
      problem(obj_str("edge", e.id) + " group is not a " + std::to_string(g.p) + "-group");
    for (int end = 0; end < 2; ++end) {
      const auto& bmap = end == 0 ? g.b0 : g.b1;
      auto bit = bmap.find(e.id);
      if (bit == bmap.end()) {
        problem(obj_str("edge", e.id) + " is missing boundary b" + std::to_string(end));
        continue;
      }
      const GroupHom& h = bit->second;
      if (!groups_equal(h.domain(), it->second))
        problem(obj_str("edge", e.id) + " boundary b" + std::to_string(end) +
                " domain is not the edge group");
      int target_vertex = end == 0 ? e.d0 : e.d1;
      auto vg = g.vgroups.find(target_vertex);
      if (vg != g.vgroups.end() && !groups_equal(h.codomain(), vg->second))
        problem(obj_str("edge", e.id) + " boundary b" + std::to_string(end) +
                " codomain is not the vertex group at " + std::to_string(target_vertex));
      if (!h.injective())
        problem(obj_str("edge", e.id) + " boundary b" + std::to_string(end) +
                " is not injective");
    }
  }
  if (g.egroups.size() != g.graph.edges.size()) problem("stray edge group entries");

  rep.valid = rep.problems.empty();
  return rep;
}

void require_valid_gog(const GraphOfGroups& g) {
  GogReport rep = validate_gog(g);
  if (!rep.valid) throw std::invalid_argument("invalid graph of groups: " + rep.problems[0]);
}

std::vector<int> fictitious_edges(const GraphOfGroups& g) {
  std::vector<int> out;
  for (const auto& e : g.graph.edges) {
    if (e.d0 == e.d1) continue;
    const GroupHom& f0 = g.b0.at(e.id);
    const GroupHom& f1 = g.b1.at(e.id);
    if ((f0.injective() && f0.surjective()) || (f1.injective() && f1.surjective()))
      out.push_back(e.id);
  }
  return out;
}

CollapseResult collapse_edge(const GraphOfGroups& g, int edge_id) {
  const EdgeRec& e = g.graph.edge(edge_id);
  if (e.d0 == e.d1) throw std::invalid_argument("cannot collapse a loop");
  const GroupHom& f0 = g.b0.at(edge_id);
  const GroupHom& f1 = g.b1.at(edge_id);

  int absorbed, surviving;
  GroupHom embed = [&]() {
    if (f0.injective() && f0.surjective()) {
      // the group at d1 swallows the one at d0
      absorbed = e.d0;
      surviving = e.d1;
      return compose(f1, inverse_iso(f0));
    }
    if (f1.injective() && f1.surjective()) {
      absorbed = e.d1;
      surviving = e.d0;
      return compose(f0, inverse_iso(f1));
    }
    throw std::invalid_argument("edge is not fictitious");
  }();

  Rational chi_before = euler_characteristic(g);

  GraphOfGroups out;
  out.p = g.p;
  std::vector<int> vertices;
  for (int v : g.graph.vertices)
    if (v != absorbed) vertices.push_back(v);
  std::vector<EdgeRec> edges;
  for (const auto& f : g.graph.edges) {
    if (f.id == edge_id) continue;
    EdgeRec rec = f;
    if (rec.d0 == absorbed) rec.d0 = surviving;
    if (rec.d1 == absorbed) rec.d1 = surviving;
    edges.push_back(rec);
  }
  out.graph = make_graph(std::move(vertices), std::move(edges));
  for (int v : out.graph.vertices) out.vgroups.emplace(v, g.vgroups.at(v));
  for (const auto& f : out.graph.edges) {
    out.egroups.emplace(f.id, g.egroups.at(f.id));
    const EdgeRec& old = g.graph.edge(f.id);
    const GroupHom& h0 = g.b0.at(f.id);
    const GroupHom& h1 = g.b1.at(f.id);
    out.b0.emplace(f.id, old.d0 == absorbed ? compose(embed, h0) : h0);
    out.b1.emplace(f.id, old.d1 == absorbed ? compose(embed, h1) : h1);
  }

  if (euler_characteristic(out) != chi_before)
    throw std::logic_error("collapse changed the Euler characteristic");
  require_valid_gog(out);
  return CollapseResult{std::move(out), edge_id, absorbed, surviving};
}

ReduceResult reduce(const GraphOfGroups& g, ReduceOrder order, uint64_t seed) {
  ReduceResult res{g, {}, {}};
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<int> fict = fictitious_edges(res.gog);
    if (fict.empty()) break;
    int pick = fict.front();
    if (order == ReduceOrder::Random) {
      std::uniform_int_distribution<size_t> dist(0, fict.size() - 1);
      pick = fict[dist(rng)];
    }
    CollapseResult step = collapse_edge(res.gog, pick);
    res.collapsed_edges.push_back(pick);
    res.vertex_merge[step.absorbed_vertex] = step.surviving_vertex;
    res.gog = std::move(step.gog);
  }
  // resolve chains so the log maps every absorbed vertex to a final vertex
  for (auto& [from, to] : res.vertex_merge) {
    int t = to;
    while (res.vertex_merge.count(t)) t = res.vertex_merge.at(t);
    to = t;
  }
  return res;
}

Rational euler_characteristic(const GraphOfGroups& g) {
  Rational chi = 0;
  for (const auto& [v, grp] : g.vgroups) chi += Rational(1, grp->order());
  for (const auto& [e, grp] : g.egroups) chi -= Rational(1, grp->order());
  return chi;
}

Letter vgen(int vertex, Elt x) { return Letter{Letter::Kind::VGen, vertex, x, 1}; }
Letter stable(int edge, int exp) { return Letter{Letter::Kind::Stable, edge, 0, exp}; }

Presentation fundamental_presentation(const GraphOfGroups& g, const SpanningTree& tree) {
  require_valid_gog(g);
  Presentation pres;
  pres.basepoint = tree.root;
  pres.tree = tree;

  for (const auto& [v, grp] : g.vgroups)
    for (Elt x = 0; x < grp->order(); ++x)
      if (x != grp->identity()) pres.generators.push_back(vgen(v, x));
  for (const auto& e : g.graph.edges)
    if (!tree.contains(e.id)) {
      pres.generators.push_back(stable(e.id));
      pres.stable_letter_count++;
    }

  auto push_vgen = [&](Word& w, int v, Elt x) {
    if (x != g.vgroups.at(v)->identity()) w.push_back(vgen(v, x));
  };

  for (const auto& [v, grp] : g.vgroups) {
    for (Elt x = 0; x < grp->order(); ++x) {
      if (x == grp->identity()) continue;
      for (Elt y = 0; y < grp->order(); ++y) {
        if (y == grp->identity()) continue;
        Word w;
        push_vgen(w, v, x);
        push_vgen(w, v, y);
        push_vgen(w, v, grp->inv(grp->mul(x, y)));
        pres.relators.push_back(std::move(w));
      }
    }
  }
  for (const auto& e : g.graph.edges) {
    const GroupHom& f0 = g.b0.at(e.id);
    const GroupHom& f1 = g.b1.at(e.id);
    const GroupPtr& egrp = g.egroups.at(e.id);
    bool in_tree = tree.contains(e.id);
    for (Elt x = 0; x < egrp->order(); ++x) {
      if (x == egrp->identity()) continue;
      Word w;
      if (!in_tree) w.push_back(stable(e.id, 1));
      push_vgen(w, e.d1, f1(x));
      if (!in_tree) w.push_back(stable(e.id, -1));
      push_vgen(w, e.d0, g.vgroups.at(e.d0)->inv(f0(x)));
      pres.relators.push_back(std::move(w));
    }
  }
  return pres;
}

Presentation fundamental_presentation(const GraphOfGroups& g) {
  require_valid_gog(g);
  int root = g.graph.vertices.front();
  return fundamental_presentation(g, spanning_tree(g.graph, root));
}

GraphOfGroups amalgam_gog(int p, const GroupPtr& g1, const GroupPtr& g2,
                          const GroupHom& f1, const GroupHom& f2) {
  if (!groups_equal(f1.domain(), f2.domain()))
    throw std::invalid_argument("amalgam boundary maps need a common edge group");
  if (!groups_equal(f1.codomain(), g1) || !groups_equal(f2.codomain(), g2))
    throw std::invalid_argument("amalgam boundary maps do not land in the vertex groups");
  GraphOfGroups g;
  g.p = p;
  g.graph = make_graph({0, 1}, {EdgeRec{0, 0, 1}});
  g.vgroups = {{0, g1}, {1, g2}};
  g.egroups = {{0, f1.domain()}};
  g.b0.emplace(0, f1);
  g.b1.emplace(0, f2);
  require_valid_gog(g);
  return g;
}

GraphOfGroups hnn_gog(int p, const GroupPtr& g, const Subgroup& a, const GroupHom& f) {
  if (!groups_equal(a.parent, g))
    throw std::invalid_argument("associated subgroup does not live in the vertex group");
  SubgroupGroup mat = subgroup_as_group(a);
  if (!groups_equal(f.domain(), mat.group))
    throw std::invalid_argument("hnn map domain is not the associated subgroup");
  if (!groups_equal(f.codomain(), g))
    throw std::invalid_argument("hnn map does not land in the vertex group");
  GraphOfGroups out;
  out.p = p;
  out.graph = make_graph({0}, {EdgeRec{0, 0, 0}});
  out.vgroups = {{0, g}};
  out.egroups = {{0, mat.group}};
  out.b0.emplace(0, mat.embedding);
  out.b1.emplace(0, f);
  require_valid_gog(out);
  return out;
}

GogReport validate_morphism(const GogMorphism& m) {
  GogReport rep;
  auto problem = [&](const std::string& msg) { rep.problems.push_back(msg); };

  GogReport src = validate_gog(m.source);
  GogReport tgt = validate_gog(m.target);
  if (!src.valid) problem("source is invalid: " + src.problems[0]);
  if (!tgt.valid) problem("target is invalid: " + tgt.problems[0]);
  if (!rep.problems.empty()) return rep;

  for (int v : m.source.graph.vertices) {
    auto it = m.vertex_map.find(v);
    if (it == m.vertex_map.end()) {
      problem(obj_str("vertex", v) + " has no image");
      continue;
    }
    if (!m.target.graph.has_vertex(it->second)) {
      problem(obj_str("vertex", v) + " maps to a missing vertex");
      continue;
    }
    auto hm = m.vmaps.find(v);
    if (hm == m.vmaps.end()) {
      problem(obj_str("vertex", v) + " has no group map");
      continue;
    }
    if (!groups_equal(hm->second.domain(), m.source.vgroups.at(v)) ||
        !groups_equal(hm->second.codomain(), m.target.vgroups.at(it->second)))
      problem(obj_str("vertex", v) + " group map has wrong domain or codomain");
  }
  if (!rep.problems.empty()) return rep;

  for (const auto& e : m.source.graph.edges) {
    auto it = m.edge_map.find(e.id);
    if (it == m.edge_map.end()) {
      problem(obj_str("edge", e.id) + " has no image");
      continue;
    }
    auto hm = m.emaps.find(e.id);
    if (hm == m.emaps.end()) {
      problem(obj_str("edge", e.id) + " has no group map");
      continue;
    }
    const GroupHom& nu = hm->second;
    if (!groups_equal(nu.domain(), m.source.egroups.at(e.id))) {
      problem(obj_str("edge", e.id) + " group map has wrong domain");
      continue;
    }
    int v0 = m.vertex_map.at(e.d0), v1 = m.vertex_map.at(e.d1);
    if (it->second.to_vertex) {
      int y = it->second.id;
      if (!m.target.graph.has_vertex(y)) {
        problem(obj_str("edge", e.id) + " maps to a missing vertex");
        continue;
      }
      if (v0 != y || v1 != y) {
        problem(obj_str("edge", e.id) + " collapses but its endpoints do not map to it");
        continue;
      }
      if (!groups_equal(nu.codomain(), m.target.vgroups.at(y))) {
        problem(obj_str("edge", e.id) + " group map has wrong codomain");
        continue;
      }
      for (int end = 0; end < 2; ++end) {
        const GroupHom& bi = m.source.boundary(e.id, end);
        const GroupHom& vm = m.vmaps.at(end == 0 ? e.d0 : e.d1);
        for (Elt x = 0; x < nu.domain()->order(); ++x)
          if (vm(bi(x)) != nu(x)) {
            problem(obj_str("edge", e.id) + " group map fails the collapse identity at b" +
                    std::to_string(end));
            break;
          }
      }
    } else {
      int eid = it->second.id;
      const EdgeRec* te = nullptr;
      for (const auto& cand : m.target.graph.edges)
        if (cand.id == eid) te = &cand;
      if (!te) {
        problem(obj_str("edge", e.id) + " maps to a missing edge");
        continue;
      }
      if (v0 != te->d0 || v1 != te->d1) {
        problem(obj_str("edge", e.id) + " does not commute with the incidence maps");
        continue;
      }
      if (!groups_equal(nu.codomain(), m.target.egroups.at(eid))) {
        problem(obj_str("edge", e.id) + " group map has wrong codomain");
        continue;
      }
      for (int end = 0; end < 2; ++end) {
        const GroupHom& bi_src = m.source.boundary(e.id, end);
        const GroupHom& bi_tgt = m.target.boundary(eid, end);
        const GroupHom& vm = m.vmaps.at(end == 0 ? e.d0 : e.d1);
        for (Elt x = 0; x < nu.domain()->order(); ++x)
          if (bi_tgt(nu(x)) != vm(bi_src(x))) {
            problem(obj_str("edge", e.id) + " group map fails naturality at b" +
                    std::to_string(end));
            break;
          }
      }
    }
  }

  rep.valid = rep.problems.empty();
  return rep;
}

}  // namespace pgog
