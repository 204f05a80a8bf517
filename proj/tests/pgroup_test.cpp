#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "examples_common.hpp"
#include "pgog/pgroup.hpp"

using namespace pgog;
using pgog::examples::cyc;
using pgog::examples::dihedral8;

TEST_CASE("cyclic groups") {
  GroupPtr g = cyc(8);
  CHECK(g->order() == 8);
  CHECK(g->identity() == 0);
  CHECK(g->mul(5, 6) == 3);
  CHECK(g->inv(3) == 5);
  CHECK(g->power(3, 5) == 7);
  CHECK(g->power(3, -1) == 5);
  CHECK(g->power(3, 0) == 0);
}

TEST_CASE("elementary abelian digit layout puts the first coordinate high") {
  GroupPtr g = group_from_spec(GroupSpec::elementary_abelian(2, 3));
  CHECK(g->order() == 8);
  CHECK(g->mul(4, 1) == 5);
  CHECK(g->mul(5, 4) == 1);
  for (Elt x = 0; x < 8; ++x) CHECK(g->inv(x) == x);

  GroupPtr h = group_from_spec(GroupSpec::elementary_abelian(3, 2));
  CHECK(h->order() == 9);
  CHECK(h->mul(3, 6) == 0);  // (1,0) + (2,0)
  CHECK(h->mul(4, 5) == 6);  // (1,1) + (1,2) = (2,0)
}

TEST_CASE("product order is mixed radix, first factor high") {
  GroupPtr g = group_from_spec(
      GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(2)}));
  CHECK(g->order() == 8);
  CHECK(g->mul(3, 2) == 5);  // (1,1)(1,0) = (2,1)
  CHECK(g->inv(3) == 7);     // -(1,1) = (3,1)
}

TEST_CASE("dihedral semidirect product") {
  GroupPtr d4 = dihedral8();
  CHECK(d4->order() == 8);
  CHECK(d4->mul(1, 2) == 7);  // s r = r^-1 s
  CHECK(d4->mul(2, 1) == 3);
  CHECK(d4->conj(1, 2) == 6);
  CHECK(d4->power(2, 4) == 0);
  CHECK(d4->power(1, 2) == 0);
  CHECK(is_p_group(*d4, 2));
  CHECK_FALSE(is_p_group(*d4, 3));
}

TEST_CASE("raw tables are checked") {
  // Klein four group
  std::vector<std::vector<Elt>> klein = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  GroupPtr g = group_from_spec(GroupSpec::raw_table(klein));
  CHECK(g->order() == 4);
  CHECK(g->inv(2) == 2);

  std::vector<std::vector<Elt>> broken = klein;
  broken[3][3] = 3;  // row stops being a permutation
  CHECK_THROWS_AS(group_from_spec(GroupSpec::raw_table(broken)),
                  std::invalid_argument);

  std::vector<std::vector<Elt>> nonassoc = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(group_from_spec(GroupSpec::raw_table(nonassoc)),
                  std::invalid_argument);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(group_from_spec(GroupSpec::cyclic(8192)),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_from_spec(GroupSpec::elementary_abelian(2, 13)),
                  std::invalid_argument);
}

TEST_CASE("value equality") {
  CHECK(groups_equal(cyc(4), cyc(4)));
  CHECK_FALSE(groups_equal(cyc(4),
                           group_from_spec(GroupSpec::elementary_abelian(2, 2))));
  CHECK_FALSE(groups_equal(
      cyc(4), group_from_spec(GroupSpec::cyclic(4).with_label("other"))));
}

TEST_CASE("homomorphisms") {
  GroupPtr c4 = cyc(4), c2 = cyc(2);
  GroupHom f = hom_from_generator_images(c4, c2, {1}, {1});
  CHECK(f.map() == std::vector<Elt>{0, 1, 0, 1});
  CHECK_FALSE(f.injective());
  CHECK(f.surjective());
  CHECK(f.image().order() == 2);

  CHECK_THROWS_AS(hom_from_generator_images(c4, cyc(3), {1}, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroupHom(c4, c2, {0, 1, 1, 0}), std::invalid_argument);

  GroupHom doubled(cyc(2), c4, {0, 2});
  GroupHom through = compose(f, doubled);  // c2 -> c4 -> c2
  CHECK(through(1) == 0);

  GroupHom neg(c4, c4, {0, 3, 2, 1});
  GroupHom back = inverse_iso(neg);
  CHECK(back == neg);
  CHECK_THROWS_AS(inverse_iso(f), std::invalid_argument);

  GroupHom t = trivial_hom(c4, c2);
  CHECK(t(3) == 0);
  CHECK(identity_hom(c4)(3) == 3);
}

TEST_CASE("subgroups of the dihedral group") {
  GroupPtr d4 = dihedral8();
  Subgroup rot = subgroup_generated(d4, {2});
  CHECK(rot.elements == std::vector<Elt>{0, 2, 4, 6});
  CHECK(is_normal(d4, rot));

  Subgroup refl = subgroup_generated(d4, {1});
  CHECK(refl.order() == 2);
  CHECK_FALSE(is_normal(d4, refl));

  Subgroup center = subgroup_generated(d4, {4});
  CHECK(center.elements == std::vector<Elt>{0, 4});
  CHECK(is_normal(d4, center));

  CHECK(intersect(rot, refl).order() == 1);
  CHECK(intersect(rot, center).elements == center.elements);

  std::vector<Subgroup> all = all_subgroups(d4);
  CHECK(all.size() == 10);
  for (const Subgroup& s : all) {
    CHECK(s.contains(0));
    for (Elt x : s.elements)
      for (Elt y : s.elements) CHECK(s.contains(d4->mul(x, y)));
    CHECK(8 % s.order() == 0);
  }
}

TEST_CASE("preimage and image orders") {
  GroupPtr d4 = dihedral8();
  GroupPtr c2 = cyc(2);
  // quotient by the rotation subgroup
  GroupHom f = hom_from_generator_images(d4, c2, {1, 2}, {1, 0});
  for (const Subgroup& s : all_subgroups(c2)) {
    Subgroup pre = preimage_subgroup(f, s);
    Subgroup im = image_subgroup(f, full_subgroup(d4));
    int ker = 0;
    for (Elt x = 0; x < 8; ++x)
      if (f(x) == 0) ++ker;
    int hit = int(intersect(s, im).order());
    CHECK(pre.order() == ker * hit);
  }
}

TEST_CASE("double cosets partition the group, with minimal ascending reps") {
  GroupPtr d4 = dihedral8();
  std::vector<Subgroup> all = all_subgroups(d4);
  for (const Subgroup& q : all) {
    for (const Subgroup& r : all) {
      std::vector<Elt> reps = double_cosets(d4, q, r);
      CHECK(std::is_sorted(reps.begin(), reps.end()));
      std::set<Elt> seen;
      long long total = 0;
      for (Elt rep : reps) {
        std::set<Elt> coset;
        for (Elt a : q.elements)
          for (Elt b : r.elements) coset.insert(d4->mul(d4->mul(a, rep), b));
        CHECK(*coset.begin() == rep);
        for (Elt x : coset) {
          CHECK(seen.count(x) == 0);
          seen.insert(x);
        }
        total += static_cast<long long>(coset.size());
        // |QxR| = |Q||R| / |x^-1 Q x cap R|
        std::vector<Elt> conj_q;
        for (Elt a : q.elements) conj_q.push_back(d4->conj(d4->inv(rep), a));
        std::sort(conj_q.begin(), conj_q.end());
        Subgroup meet = intersect(make_subgroup(d4, conj_q), r);
        CHECK(static_cast<long long>(coset.size()) ==
              (static_cast<long long>(q.order()) * r.order()) / meet.order());
      }
      CHECK(total == 8);
      CHECK(seen.size() == 8);
    }
  }
}

TEST_CASE("minimal generators") {
  GroupPtr e8 = group_from_spec(GroupSpec::elementary_abelian(2, 3));
  std::vector<Elt> gens = minimal_generators(e8);
  CHECK(gens.size() == 3);
  CHECK(subgroup_generated(e8, gens).order() == 8);

  GroupPtr d4 = dihedral8();
  CHECK(minimal_generators(d4).size() == 2);
  CHECK(minimal_generators(cyc(1)).empty());
}

TEST_CASE("subgroup materialization") {
  GroupPtr d4 = dihedral8();
  SubgroupGroup mat = subgroup_as_group(subgroup_generated(d4, {2}));
  CHECK(mat.group->order() == 4);
  CHECK(mat.embedding.injective());
  for (Elt x = 0; x < 4; ++x) {
    CHECK(mat.embedding(x) == mat.to_parent[x]);
    for (Elt y = 0; y < 4; ++y)
      CHECK(mat.to_parent[mat.group->mul(x, y)] ==
            d4->mul(mat.to_parent[x], mat.to_parent[y]));
  }
}
