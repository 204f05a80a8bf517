#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "examples_common.hpp"
#include "pgog/quotient.hpp"

using namespace pgog;
using namespace pgog::examples;

TEST_CASE("building a quotient map checks compatibility") {
  GraphOfGroups g = c4_amalgam();
  GroupPtr target = cyc(2);
  SpanningTree tree = spanning_tree(g.graph, 0);

  std::map<int, GroupHom> good;
  good.emplace(0, GroupHom(g.vgroups.at(0), target, {0, 1, 0, 1}));
  good.emplace(1, GroupHom(g.vgroups.at(1), target, {0, 1, 0, 1}));
  PQuotientMap phi = build_quotient_map(g, tree, target, good, {});
  CHECK(phi.image.order() == 2);
  CHECK(phi.tau.at(0) == 0);  // tree edge

  // mod 2 maps cannot disagree on the edge generator, a C4 target can
  GroupPtr t4 = cyc(4);
  std::map<int, GroupHom> bad;
  bad.emplace(0, GroupHom(g.vgroups.at(0), t4, {0, 1, 2, 3}));
  bad.emplace(1, trivial_hom(g.vgroups.at(1), t4));
  // edge generator maps to 2 on one side and 0 on the other
  CHECK_THROWS_AS(build_quotient_map(g, tree, t4, bad, {}),
                  std::invalid_argument);

  std::map<int, Elt> bad_tau = {{0, 1}};
  CHECK_THROWS_AS(build_quotient_map(g, tree, target, good, bad_tau),
                  std::invalid_argument);
}

TEST_CASE("stable letter images must conjugate correctly") {
  // HNN letter on C4 carrying units along the identity needs any tau in an
  // abelian target, but a mismatched subgroup image rules every tau out
  GraphOfGroups g = hnn_c2();
  GroupPtr target = cyc(4);
  SpanningTree tree = spanning_tree(g.graph, 0);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, GroupHom(g.vgroups.at(0), target, {0, 2}));

  PQuotientMap phi =
      build_quotient_map(g, tree, target, vmaps, {{0, 1}});
  CHECK(phi.image.order() == 4);

  std::map<int, GroupHom> clash;
  clash.emplace(0, GroupHom(g.vgroups.at(0), target, {0, 2}));
  GraphOfGroups twisted = g;
  twisted.b1.at(0) = trivial_hom(g.egroups.at(0), g.vgroups.at(0));
  // no longer injective, fails before tau is even looked at
  CHECK_THROWS_AS(
      build_quotient_map(twisted, tree, target, clash, {{0, 1}}),
      std::invalid_argument);
}

TEST_CASE("word evaluation") {
  GraphOfGroups g = c3_amalgam();
  QuotientData qd = c3_quotient(g);

  Word w = {vgen(0, 1), vgen(1, 2)};
  CHECK(eval_word(qd.phi, w) == 0);
  CHECK(eval_word(qd.phi, {vgen(0, 1), vgen(0, 1)}) == 2);
  CHECK(eval_word(qd.phi, {}) == 0);

  SUBCASE("every presentation relator dies in the quotient") {
    Presentation pres = fundamental_presentation(g);
    for (const Word& rel : pres.relators) CHECK(eval_word(qd.phi, rel) == 0);
  }
}

TEST_CASE("stable letters act in evaluated words") {
  GraphOfGroups g = theta_over_c2();
  GroupPtr target = cyc(2);
  SpanningTree tree = spanning_tree(g.graph, 0);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, trivial_hom(g.vgroups.at(0), target));
  vmaps.emplace(1, trivial_hom(g.vgroups.at(1), target));
  PQuotientMap phi = build_quotient_map(g, tree, target, vmaps, {{1, 1}});

  CHECK(eval_word(phi, {stable(1)}) == 1);
  CHECK(eval_word(phi, {stable(1), stable(1, -1)}) == 0);
  CHECK(eval_word(phi, {stable(0)}) == 0);  // tree letter
  CHECK(phi.image.order() == 2);

  Presentation pres = fundamental_presentation(g, tree);
  for (const Word& rel : pres.relators) CHECK(eval_word(phi, rel) == 0);
}

TEST_CASE("image decomposition") {
  GraphOfGroups g = c3_amalgam();
  QuotientData qd = c3_quotient(g);
  ImageDecompositionReport r = image_decomposition_check(qd.phi);
  CHECK(r.image_order == 3);
  CHECK(r.vertex_normal_closure_order == 3);
  CHECK(r.covered_by_product);
  CHECK(r.quotient_generated_by_taus);

  // trivial vertex maps, image generated by the stable letter alone
  GraphOfGroups h = theta_over_c2();
  GroupPtr target = cyc(2);
  std::map<int, GroupHom> vmaps;
  vmaps.emplace(0, trivial_hom(h.vgroups.at(0), target));
  vmaps.emplace(1, trivial_hom(h.vgroups.at(1), target));
  PQuotientMap phi = build_quotient_map(h, spanning_tree(h.graph, 0), target,
                                        vmaps, {{1, 1}});
  ImageDecompositionReport s = image_decomposition_check(phi);
  CHECK(s.image_order == 2);
  CHECK(s.vertex_normal_closure_order == 1);
  CHECK(s.covered_by_product);
  CHECK(s.quotient_generated_by_taus);
}

TEST_CASE("open subgroup bookkeeping") {
  GraphOfGroups g = c3_amalgam();
  QuotientData qd = c3_quotient(g);

  OpenSubgroupSpec trivial_q = make_open_subgroup(qd.phi, qd.q);
  CHECK(trivial_q.index == 3);
  CHECK(trivial_q.normal_in_image);

  OpenSubgroupSpec full_q =
      make_open_subgroup(qd.phi, full_subgroup(qd.phi.target));
  CHECK(full_q.index == 1);
  CHECK(full_q.normal_in_image);

  // subgroup of the target that misses part of the image
  GroupPtr d4 = dihedral8();
  GraphOfGroups one;
  one.p = 2;
  one.graph = make_graph({0}, {});
  one.vgroups = {{0, d4}};
  PQuotientMap onto = build_quotient_map(one, spanning_tree(one.graph, 0), d4,
                                         {{0, identity_hom(d4)}}, {});
  OpenSubgroupSpec refl =
      make_open_subgroup(onto, subgroup_generated(d4, {1}));
  CHECK(refl.index == 4);
  CHECK_FALSE(refl.normal_in_image);
}
