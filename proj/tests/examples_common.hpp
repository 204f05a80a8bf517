#pragma once

#include "pgog/io.hpp"

// worked examples shared between the fixture generator and the tests

namespace pgog::examples {

inline GroupPtr cyc(int n) { return group_from_spec(GroupSpec::cyclic(n)); }

inline GraphOfGroups c2_amalgam() {
  GroupPtr a = cyc(2), b = cyc(2), e = cyc(1);
  return amalgam_gog(2, a, b, trivial_hom(e, a), trivial_hom(e, b));
}

inline QuotientData c2_quotient(const GraphOfGroups& g) {
  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, GroupHom(g.vgroups.at(0), target, {0, 1}));
  vmaps.emplace(1, GroupHom(g.vgroups.at(1), target, {0, 1}));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {});
  return {std::move(phi), trivial_subgroup(target)};
}

inline GraphOfGroups c3_amalgam() {
  GroupPtr a = cyc(3), b = cyc(3), e = cyc(1);
  return amalgam_gog(3, a, b, trivial_hom(e, a), trivial_hom(e, b));
}

inline QuotientData c3_quotient(const GraphOfGroups& g) {
  GroupPtr target = cyc(3);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, GroupHom(g.vgroups.at(0), target, {0, 1, 2}));
  vmaps.emplace(1, GroupHom(g.vgroups.at(1), target, {0, 1, 2}));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {});
  return {std::move(phi), trivial_subgroup(target)};
}

inline GraphOfGroups c4_amalgam() {
  GroupPtr a = cyc(4), b = cyc(4), e = cyc(2);
  return amalgam_gog(2, a, b, GroupHom(e, a, {0, 2}), GroupHom(e, b, {0, 2}));
}

inline QuotientData c4_quotient(const GraphOfGroups& g) {
  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, GroupHom(g.vgroups.at(0), target, {0, 1, 0, 1}));
  vmaps.emplace(1, GroupHom(g.vgroups.at(1), target, {0, 1, 0, 1}));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {});
  return {std::move(phi), trivial_subgroup(target)};
}

// C4 : C2 with the reflection inverting the rotation
inline GroupPtr dihedral8() {
  std::vector<std::vector<Elt>> action = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  return group_from_spec(GroupSpec::semidirect(GroupSpec::cyclic(4),
                                               GroupSpec::cyclic(2), action)
                             .with_label("D4"));
}

// HNN letter carrying the center of D4 onto a reflection
inline GraphOfGroups dihedral_hnn() {
  GroupPtr d4 = dihedral8();
  Subgroup center = subgroup_generated(d4, {4});
  SubgroupGroup mat = subgroup_as_group(center);
  return hnn_gog(2, d4, center, GroupHom(mat.group, d4, {0, 1}));
}

// two parallel edges with trivial edge groups between two C2 vertices
inline GraphOfGroups theta_over_c2() {
  GraphOfGroups g;
  g.p = 2;
  g.graph = make_graph({0, 1}, {EdgeRec{0, 0, 1}, EdgeRec{1, 0, 1}});
  GroupPtr c2a = cyc(2), c2b = cyc(2), e = cyc(1);
  g.vgroups = {{0, c2a}, {1, c2b}};
  for (int i : {0, 1}) {
    g.egroups.emplace(i, e);
    g.b0.emplace(i, trivial_hom(e, c2a));
    g.b1.emplace(i, trivial_hom(e, c2b));
  }
  require_valid_gog(g);
  return g;
}

// path of two collapsible edges ending in a C4 vertex with a trivial loop
inline GraphOfGroups collapsible_chain() {
  GraphOfGroups g;
  g.p = 2;
  g.graph = make_graph({0, 1, 2},
                       {EdgeRec{0, 0, 1}, EdgeRec{1, 1, 2}, EdgeRec{2, 2, 2}});
  GroupPtr v0 = cyc(2), v1 = cyc(2), v2 = cyc(4), e2 = cyc(1);
  GroupPtr ea = cyc(2), eb = cyc(2);
  g.vgroups = {{0, v0}, {1, v1}, {2, v2}};
  g.egroups = {{0, ea}, {1, eb}, {2, e2}};
  g.b0.emplace(0, GroupHom(ea, v0, {0, 1}));
  g.b1.emplace(0, GroupHom(ea, v1, {0, 1}));
  g.b0.emplace(1, GroupHom(eb, v1, {0, 1}));
  g.b1.emplace(1, GroupHom(eb, v2, {0, 2}));
  g.b0.emplace(2, trivial_hom(e2, v2));
  g.b1.emplace(2, trivial_hom(e2, v2));
  require_valid_gog(g);
  return g;
}

inline GraphOfGroups hnn_c2() {
  GroupPtr g = cyc(2);
  Subgroup full = full_subgroup(g);
  SubgroupGroup mat = subgroup_as_group(full);
  return hnn_gog(2, g, full, GroupHom(mat.group, g, {0, 1}));
}

}  // namespace pgog::examples
