#include "pgog/decomp.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

namespace pgog {

namespace {

struct Ambient {
  const FiniteGroup* P;
  std::vector<Elt> prime;    // im(phi), sorted
  std::vector<char> in_q;    // indicator of Q cap im(phi) over P
  std::vector<Elt> qprime;

  bool same_left_coset(Elt a, Elt b) const {  // Q'a == Q'b
    return in_q[P->mul(a, P->inv(b))];
  }
};

Ambient make_ambient(const OpenSubgroupSpec& spec) {
  Ambient amb;
  amb.P = spec.phi.target.get();
  amb.prime = spec.phi.image.elements;
  Subgroup qp = intersect(spec.q, spec.phi.image);
  amb.qprime = qp.elements;
  amb.in_q.assign(amb.P->order(), 0);
  for (Elt x : amb.qprime) amb.in_q[x] = 1;
  return amb;
}

struct ClassInfo {
  std::vector<Elt> min_reps;
  std::vector<std::vector<Elt>> members;  // sorted per class
  std::map<Elt, int> class_of;
};

ClassInfo classify(const Ambient& amb, const std::vector<Elt>& r_elements) {
  ClassInfo info;
  for (Elt x : amb.prime) {
    if (info.class_of.count(x)) continue;
    int idx = int(info.min_reps.size());
    info.min_reps.push_back(x);
    std::set<Elt> orbit;
    for (Elt q : amb.qprime) {
      Elt qx = amb.P->mul(q, x);
      for (Elt r : r_elements) orbit.insert(amb.P->mul(qx, r));
    }
    for (Elt y : orbit) info.class_of[y] = idx;
    info.members.emplace_back(orbit.begin(), orbit.end());
  }
  return info;
}

// image of the edge group inside the target, through the b0 corner
Subgroup edge_image(const PQuotientMap& phi, int edge_id) {
  const EdgeRec& e = phi.gog.graph.edge(edge_id);
  GroupHom through = compose(phi.vmaps.at(e.d0), phi.gog.b0.at(edge_id));
  return through.image();
}

std::vector<Elt> stabilizer(const Ambient& amb, const GroupHom& through, Elt rep) {
  std::vector<Elt> out;
  Elt rinv = amb.P->inv(rep);
  for (Elt x = 0; x < through.domain()->order(); ++x)
    if (amb.in_q[amb.P->mul(amb.P->mul(rep, through(x)), rinv)]) out.push_back(x);
  return out;
}

// u in the source vertex group with Q' vertex_rep phi(u) = Q' target; identity
// preferred, then the smallest element
Elt find_conjugator(const Ambient& amb, const GroupHom& vmap, Elt vertex_rep, Elt target) {
  Elt id = vmap.domain()->identity();
  if (amb.same_left_coset(amb.P->mul(vertex_rep, vmap(id)), target)) return id;
  for (Elt u = 0; u < vmap.domain()->order(); ++u)
    if (amb.same_left_coset(amb.P->mul(vertex_rep, vmap(u)), target)) return u;
  throw std::logic_error("transversal inconsistency: no conjugator exists");
}

InducedDecomposition build(const OpenSubgroupSpec& spec, bool fill_groups) {
  const PQuotientMap& phi = spec.phi;
  const GraphOfGroups& src = phi.gog;
  Ambient amb = make_ambient(spec);

  std::map<int, ClassInfo> vclasses, eclasses;
  for (int v : src.graph.vertices)
    vclasses.emplace(v, classify(amb, phi.vmaps.at(v).image().elements));
  for (const auto& e : src.graph.edges)
    eclasses.emplace(e.id, classify(amb, edge_image(phi, e.id).elements));

  InducedDecomposition dec;
  dec.spec = spec;
  dec.index = spec.index;

  std::map<int, std::vector<int>> vid;  // source vertex -> delta0 id per class
  int next_v = 0;
  std::vector<int> verts;
  for (int v : src.graph.vertices) {
    auto& ids = vid[v];
    const ClassInfo& ci = vclasses.at(v);
    for (size_t k = 0; k < ci.min_reps.size(); ++k) {
      ids.push_back(next_v);
      verts.push_back(next_v);
      dec.vertex_info[next_v] = DecompObject{v, ci.min_reps[k]};
      ++next_v;
    }
  }

  std::map<int, std::vector<int>> eid;
  int next_e = 0;
  std::vector<EdgeRec> edges;
  for (const auto& e : src.graph.edges) {
    auto& ids = eid[e.id];
    const ClassInfo& ci = eclasses.at(e.id);
    Elt t = phi.tau.at(e.id);
    for (size_t k = 0; k < ci.min_reps.size(); ++k) {
      Elt rho = ci.min_reps[k];
      int down0 = vid.at(e.d0)[vclasses.at(e.d0).class_of.at(rho)];
      int down1 = vid.at(e.d1)[vclasses.at(e.d1).class_of.at(amb.P->mul(rho, t))];
      ids.push_back(next_e);
      edges.push_back(EdgeRec{next_e, down0, down1});
      dec.edge_info[next_e] = DecompObject{e.id, rho};
      ++next_e;
    }
  }

  dec.delta0.p = src.p;
  dec.delta0.graph = make_graph(std::move(verts), std::move(edges));

  GraphReport rep = validate_graph(dec.delta0.graph);
  if (!rep.connected)
    throw std::logic_error("induced quotient graph is disconnected");

  if (!fill_groups) return dec;

  // connected transversal: breadth-first from the class of the identity over
  // the tree root, re-aligning representatives so that discovery edges carry
  // identity conjugators wherever the coset structure allows it
  std::map<int, Elt> vrep;
  int root = vid.at(phi.tree.root)[vclasses.at(phi.tree.root).class_of.at(
      phi.target->identity())];
  vrep[root] = phi.target->identity();
  std::queue<int> work;
  work.push(root);
  std::set<int> edge_done;

  auto align = [&](const std::vector<Elt>& members, Elt want_coset_of,
                   Elt right_shift) -> std::optional<Elt> {
    // smallest member with Q'(member * right_shift) = Q' want
    for (Elt y : members)
      if (amb.same_left_coset(amb.P->mul(y, right_shift), want_coset_of)) return y;
    return std::nullopt;
  };

  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    Elt rep_cur = vrep.at(cur);
    for (const auto& de : dec.delta0.graph.edges) {
      if (edge_done.count(de.id)) continue;
      if (de.d0 != cur && de.d1 != cur) continue;
      const DecompObject& info = dec.edge_info.at(de.id);
      const EdgeRec& se = src.graph.edge(info.source_id);
      const ClassInfo& ci = eclasses.at(info.source_id);
      const std::vector<Elt>& members = ci.members[ci.class_of.at(info.rep)];
      Elt t = phi.tau.at(info.source_id);

      Elt rho;
      bool aligned0 = false, aligned1 = false;
      if (de.d0 == cur) {
        if (auto y = align(members, rep_cur, phi.target->identity())) {
          rho = *y;
          aligned0 = true;
        } else {
          rho = info.rep;
        }
      } else {
        if (auto y = align(members, rep_cur, t)) {
          rho = *y;
          aligned1 = true;
        } else {
          rho = info.rep;
        }
      }
      dec.edge_info[de.id].rep = rho;
      Elt rho_t = amb.P->mul(rho, t);

      if (!vrep.count(de.d0)) {
        vrep[de.d0] = rho;
        aligned0 = true;
        work.push(de.d0);
      }
      if (!vrep.count(de.d1)) {
        vrep[de.d1] = rho_t;
        aligned1 = true;
        work.push(de.d1);
      }
      dec.conj0[de.id] = aligned0 ? src.vgroups.at(se.d0)->identity()
                                  : find_conjugator(amb, phi.vmaps.at(se.d0),
                                                    vrep.at(de.d0), rho);
      dec.conj1[de.id] = aligned1 ? src.vgroups.at(se.d1)->identity()
                                  : find_conjugator(amb, phi.vmaps.at(se.d1),
                                                    vrep.at(de.d1), rho_t);
      edge_done.insert(de.id);
    }
  }

  for (auto& [dv, info] : dec.vertex_info) info.rep = vrep.at(dv);

  // stabilizers, materialized as groups
  std::map<int, SubgroupGroup> vmat;
  std::map<int, std::vector<Elt>> vpos;  // parent element -> position
  for (const auto& [dv, info] : dec.vertex_info) {
    const GroupPtr& g = src.vgroups.at(info.source_id);
    std::vector<Elt> stab = stabilizer(amb, phi.vmaps.at(info.source_id), info.rep);
    dec.vertex_stab[dv] = stab;
    SubgroupGroup mat = subgroup_as_group(make_subgroup(g, stab));
    std::vector<Elt> pos(g->order(), -1);
    for (size_t i = 0; i < mat.to_parent.size(); ++i) pos[mat.to_parent[i]] = Elt(i);
    dec.delta0.vgroups.emplace(dv, mat.group);
    vpos.emplace(dv, std::move(pos));
    vmat.emplace(dv, std::move(mat));
  }

  for (const auto& [dei, info] : dec.edge_info) {
    const EdgeRec& se = src.graph.edge(info.source_id);
    const EdgeRec& de = dec.delta0.graph.edge(dei);
    const GroupPtr& eg = src.egroups.at(info.source_id);
    GroupHom through0 = compose(phi.vmaps.at(se.d0), src.b0.at(se.id));
    std::vector<Elt> stab = stabilizer(amb, through0, info.rep);
    dec.edge_stab[dei] = stab;
    SubgroupGroup mat = subgroup_as_group(make_subgroup(eg, stab));

    auto boundary = [&](int end, int dvertex, Elt u) {
      const GroupHom& b = src.boundary(se.id, end);
      const GroupPtr& vg = src.vgroups.at(end == 0 ? se.d0 : se.d1);
      const std::vector<Elt>& pos = vpos.at(dvertex);
      std::vector<Elt> map(mat.group->order());
      for (Elt i = 0; i < mat.group->order(); ++i) {
        Elt y = vg->conj(u, b(mat.to_parent[i]));
        if (pos[y] < 0)
          throw std::logic_error("conjugated boundary leaves the stabilizer");
        map[i] = pos[y];
      }
      return GroupHom(mat.group, dec.delta0.vgroups.at(dvertex), std::move(map));
    };
    dec.delta0.b0.emplace(dei, boundary(0, de.d0, dec.conj0.at(dei)));
    dec.delta0.b1.emplace(dei, boundary(1, de.d1, dec.conj1.at(dei)));
    dec.delta0.egroups.emplace(dei, mat.group);
  }

  require_valid_gog(dec.delta0);
  dec.groups_filled = true;
  return dec;
}

}  // namespace

InducedDecomposition standard_graph(const OpenSubgroupSpec& spec) {
  return build(spec, false);
}

InducedDecomposition induced_gog(const OpenSubgroupSpec& spec) {
  return build(spec, true);
}

IndexAccountingReport index_accounting(const InducedDecomposition& dec) {
  IndexAccountingReport rep;
  const GraphOfGroups& src = dec.spec.phi.gog;
  for (int v : src.graph.vertices) rep.vertex_sums[v] = 0;
  for (const auto& e : src.graph.edges) rep.edge_sums[e.id] = 0;
  for (const auto& [dv, info] : dec.vertex_info) {
    int full = src.vgroups.at(info.source_id)->order();
    rep.vertex_sums[info.source_id] += full / int(dec.vertex_stab.at(dv).size());
  }
  for (const auto& [de, info] : dec.edge_info) {
    int full = src.egroups.at(info.source_id)->order();
    rep.edge_sums[info.source_id] += full / int(dec.edge_stab.at(de).size());
  }
  rep.ok = true;
  for (const auto& [v, sum] : rep.vertex_sums)
    if (sum != dec.index) {
      rep.ok = false;
      rep.problems.push_back("vertex " + std::to_string(v) + " fibre accounts for " +
                             std::to_string(sum) + " instead of " +
                             std::to_string(dec.index));
    }
  for (const auto& [e, sum] : rep.edge_sums)
    if (sum != dec.index) {
      rep.ok = false;
      rep.problems.push_back("edge " + std::to_string(e) + " fibre accounts for " +
                             std::to_string(sum) + " instead of " +
                             std::to_string(dec.index));
    }
  return rep;
}

bool edge_two_sided_check(const InducedDecomposition& dec) {
  const PQuotientMap& phi = dec.spec.phi;
  const GraphOfGroups& src = phi.gog;
  Ambient amb = make_ambient(dec.spec);
  for (const auto& [de, info] : dec.edge_info) {
    const EdgeRec& se = src.graph.edge(info.source_id);
    GroupHom through1 = compose(phi.vmaps.at(se.d1), src.b1.at(se.id));
    Elt rho_t = amb.P->mul(info.rep, phi.tau.at(se.id));
    if (stabilizer(amb, through1, rho_t) != dec.edge_stab.at(de)) return false;
  }
  return true;
}

}  // namespace pgog
