#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "examples_common.hpp"
#include "pgog/verify.hpp"

using namespace pgog;
using namespace pgog::examples;

namespace {

OpenSubgroupSpec c3_spec() {
  GraphOfGroups g = c3_amalgam();
  QuotientData qd = c3_quotient(g);
  return make_open_subgroup(std::move(qd.phi), std::move(qd.q));
}

// trivial vertex maps with one generating stable letter; every vertex moves
OpenSubgroupSpec theta_moved_spec() {
  GraphOfGroups g = theta_over_c2();
  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, trivial_hom(g.vgroups.at(0), target));
  vmaps.emplace(1, trivial_hom(g.vgroups.at(1), target));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {{1, 1}});
  return make_open_subgroup(std::move(phi), trivial_subgroup(target));
}

// one vertex onto the target, one collapsed; the joining edge is mixed
OpenSubgroupSpec mixed_spec() {
  GraphOfGroups g;
  g.p = 2;
  g.graph = make_graph({0, 1}, {EdgeRec{0, 0, 1}});
  GroupPtr a = cyc(2), b = cyc(2), e = cyc(1);
  g.vgroups = {{0, a}, {1, b}};
  g.egroups = {{0, e}};
  g.b0.emplace(0, trivial_hom(e, a));
  g.b1.emplace(0, trivial_hom(e, b));
  require_valid_gog(g);

  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, GroupHom(a, target, {0, 1}));
  vmaps.emplace(1, trivial_hom(b, target));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {});
  return make_open_subgroup(std::move(phi), trivial_subgroup(target));
}

}  // namespace

TEST_CASE("limitation report on the C3 worked example") {
  LimitationReport r = check_limitation(c3_spec());
  CHECK(r.index == 3);
  CHECK(r.normal);
  CHECK(r.e_gamma == 1);
  CHECK(r.v_gamma == 2);
  CHECK(r.e_delta0 == 3);
  CHECK(r.v_delta0 == 2);
  CHECK(r.e_delta == 2);
  CHECK(r.v_delta == 1);
  CHECK(r.holds_lower);
  CHECK_FALSE(r.delta_matches_gamma);
  CHECK(r.strict_expected);
  CHECK(r.holds_strict);
  CHECK(r.holds_upper_edges);
  CHECK(r.holds_upper_vertices);
  CHECK(r.euler_multiplicative);
  CHECK(rational_str(r.chi_gamma) == "-1/3");
  CHECK(rational_str(r.chi_delta0) == "-1");
  CHECK_FALSE(r.hard_failure());
}

TEST_CASE("identity-shaped quotient graph is exempt from strictness") {
  // loop over C3 mapping identically onto C3: the induced graph is again a
  // single loop, so the edge count cannot grow
  GroupPtr c3 = cyc(3);
  Subgroup full = full_subgroup(c3);
  SubgroupGroup mat = subgroup_as_group(full);
  GraphOfGroups g = hnn_gog(3, c3, full, GroupHom(mat.group, c3, {0, 1, 2}));

  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, identity_hom(c3));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), c3,
                                        std::move(vmaps), {{0, 1}});
  OpenSubgroupSpec spec = make_open_subgroup(std::move(phi), trivial_subgroup(c3));
  CHECK(spec.index == 3);
  CHECK(spec.normal_in_image);

  LimitationReport r = check_limitation(spec);
  CHECK(r.e_gamma == 1);
  CHECK(r.e_delta == 1);
  CHECK(r.delta_matches_gamma);
  CHECK_FALSE(r.strict_expected);
  CHECK(r.holds_lower);
  CHECK(r.euler_multiplicative);
  CHECK_FALSE(r.hard_failure());
}

TEST_CASE("limitation check refuses unreduced sources") {
  GraphOfGroups g = collapsible_chain();
  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  for (int v : g.graph.vertices)
    vmaps.emplace(v, trivial_hom(g.vgroups.at(v), target));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {{2, 0}});
  OpenSubgroupSpec spec = make_open_subgroup(std::move(phi), trivial_subgroup(target));
  CHECK_THROWS_AS(check_limitation(spec), std::invalid_argument);
}

TEST_CASE("partition with every fibre fixed") {
  GraphOfGroups g = c2_amalgam();
  QuotientData qd = c2_quotient(g);
  OpenSubgroupSpec spec = make_open_subgroup(std::move(qd.phi), std::move(qd.q));
  PartitionReport r = partition_diagnostics(spec);
  CHECK(r.p == 2);
  CHECK(r.index == 2);
  CHECK(r.fibres_uniform);
  CHECK(r.v1.size() == 2);
  CHECK(r.v2.empty());
  CHECK(r.edge_class.at(0) == EdgeClass::BothFixed);
  CHECK(r.bound == 1);
  CHECK(r.e_gamma == 1);
  CHECK(r.e_delta == 1);
  CHECK(r.holds_bound);
  CHECK(r.bound_covers_gamma);
}

TEST_CASE("partition with every fibre moved") {
  PartitionReport r = partition_diagnostics(theta_moved_spec());
  CHECK(r.fibres_uniform);
  CHECK(r.v1.empty());
  CHECK(r.v2.size() == 4);
  CHECK(r.edge_class.at(0) == EdgeClass::BothMoved);
  CHECK(r.edge_class.at(1) == EdgeClass::BothMoved);
  CHECK(r.bound == 4);
  CHECK(r.e_gamma == 2);
  CHECK(r.e_delta == 4);
  CHECK(r.holds_bound);
  CHECK(r.bound_covers_gamma);
  // trivial edge groups never have isomorphic boundaries onto C2 vertices
  CHECK(r.circuit_loops.empty());
  CHECK(r.adjusted_bound == 4);
}

TEST_CASE("partition with a mixed edge") {
  PartitionReport r = partition_diagnostics(mixed_spec());
  CHECK(r.fibres_uniform);
  CHECK(r.v1.size() == 1);
  CHECK(r.v2.size() == 2);
  CHECK(r.edge_class.at(0) == EdgeClass::Mixed);
  CHECK(r.mixed_edge_index.at(0) == 2);
  CHECK(r.bound == 1);
  CHECK(r.e_gamma == 1);
  CHECK(r.e_delta == 1);
  CHECK(r.holds_bound);
  CHECK(r.bound_covers_gamma);
  CHECK(r.circuit_loops.empty());
  CHECK(r.adjusted_bound == r.bound);
}

TEST_CASE("a loop unrolling to a circuit beats the class count") {
  // the moved-edge coefficient p is wrong for a loop with an isomorphic
  // boundary at a moved vertex: its lifts form a circuit of fictitious edges
  // that re-collapses to a single loop. Smallest case: HNN over the identity
  // of C2 with the index-2 subgroup generated by C2 and the squared letter.
  GraphOfGroups g = hnn_c2();
  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, trivial_hom(g.vgroups.at(0), target));
  PQuotientMap phi = build_quotient_map(g, spanning_tree(g.graph, 0), target,
                                        std::move(vmaps), {{0, 1}});
  OpenSubgroupSpec spec =
      make_open_subgroup(std::move(phi), trivial_subgroup(target));
  CHECK(spec.index == 2);
  CHECK(spec.normal_in_image);

  LimitationReport lim = check_limitation(spec);
  CHECK(lim.e_delta0 == 2);
  CHECK(lim.v_delta0 == 2);
  CHECK(lim.e_delta == 1);
  CHECK(lim.holds_lower);  // the theorem survives, only the count argument breaks

  PartitionReport r = partition_diagnostics(spec);
  CHECK(r.fibres_uniform);
  CHECK(r.v1.empty());
  CHECK(r.v2.size() == 2);
  CHECK(r.edge_class.at(0) == EdgeClass::BothMoved);
  CHECK(r.bound == 2);
  CHECK(r.e_delta == 1);
  CHECK_FALSE(r.holds_bound);
  CHECK(r.circuit_loops == std::vector<int>{0});
  CHECK(r.adjusted_bound == 1);
  CHECK(r.holds_adjusted);
  CHECK(r.bound_covers_gamma);

  // a second loop whose stable letter stays in q lifts to loops, not a
  // circuit, and keeps its full coefficient
  GraphOfGroups two;
  two.p = 2;
  two.graph = make_graph({0}, {EdgeRec{0, 0, 0}, EdgeRec{1, 0, 0}});
  GroupPtr c2 = g.vgroups.at(0);
  GroupHom id = identity_hom(c2);
  two.vgroups.emplace(0, c2);
  for (int e : {0, 1}) {
    two.egroups.emplace(e, c2);
    two.b0.emplace(e, id);
    two.b1.emplace(e, id);
  }
  std::map<int, GroupHom> tv;
  tv.emplace(0, trivial_hom(c2, target));
  PQuotientMap tphi = build_quotient_map(two, spanning_tree(two.graph, 0), target,
                                         std::move(tv), {{0, 1}, {1, 0}});
  OpenSubgroupSpec tspec =
      make_open_subgroup(std::move(tphi), trivial_subgroup(target));
  CHECK(tspec.index == 2);
  PartitionReport t = partition_diagnostics(tspec);
  CHECK(t.circuit_loops == std::vector<int>{0});
  CHECK(t.bound == 4);
  CHECK(t.adjusted_bound == 3);
  CHECK(t.e_delta == 3);
  CHECK_FALSE(t.holds_bound);
  CHECK(t.holds_adjusted);
}

TEST_CASE("partition preconditions") {
  GraphOfGroups g = c3_amalgam();
  QuotientData qd = c3_quotient(g);
  OpenSubgroupSpec spec = make_open_subgroup(qd.phi, qd.q);
  // index 3 = p is fine
  CHECK(partition_diagnostics(spec).fibres_uniform);

  OpenSubgroupSpec full = make_open_subgroup(qd.phi, full_subgroup(qd.phi.target));
  CHECK_THROWS_AS(partition_diagnostics(full), std::invalid_argument);
}

TEST_CASE("reduction confluence") {
  ConfluenceReport r = check_reduction_confluence(collapsible_chain(), 20, 7);
  CHECK(r.ok);
  CHECK(r.vertices == 1);
  CHECK(r.edges == 1);
  CHECK(r.orders_match);
  CHECK(r.trials.size() == 20);
  for (const auto& t : r.trials) {
    CHECK(t.vertices == 1);
    CHECK(t.edges == 1);
  }

  // deterministic across repeat runs
  ConfluenceReport again = check_reduction_confluence(collapsible_chain(), 20, 7);
  CHECK(again.trials[5].seed == r.trials[5].seed);
}

TEST_CASE("growth table over a series") {
  std::vector<OpenSubgroupSpec> series;
  series.push_back(c3_spec());          // e_delta = 2
  series.push_back(theta_moved_spec()); // e_delta = 4
  GrowthTable t = accessibility_growth(series);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].instance == 0);
  CHECK(t.rows[0].e_gamma == 1);
  CHECK(t.rows[0].e_delta == 2);
  CHECK(t.rows[1].e_delta == 4);
  CHECK(t.strictly_increasing);

  std::vector<OpenSubgroupSpec> flat;
  flat.push_back(c3_spec());
  flat.push_back(c3_spec());
  CHECK_FALSE(accessibility_growth(flat).strictly_increasing);
}
