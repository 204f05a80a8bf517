#include "pgog/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pgog {

PQuotientMap build_quotient_map(GraphOfGroups gog, SpanningTree tree, GroupPtr target,
                                std::map<int, GroupHom> vmaps, std::map<int, Elt> tau) {
  require_valid_gog(gog);
  if (!is_p_group(*target, gog.p))
    throw std::invalid_argument("quotient target is not a p-group for the right p");
  make_spanning_tree(gog.graph, tree.tree_edges, tree.root);  // revalidate

  for (int v : gog.graph.vertices) {
    auto it = vmaps.find(v);
    if (it == vmaps.end())
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no map");
    if (!groups_equal(it->second.domain(), gog.vgroups.at(v)))
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " map does not start at its group");
    if (!groups_equal(it->second.codomain(), target))
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " map does not land in the target");
  }

  for (const auto& e : gog.graph.edges) {
    auto it = tau.find(e.id);
    if (it == tau.end()) {
      if (tree.contains(e.id)) {
        tau[e.id] = target->identity();
      } else {
        throw std::invalid_argument("edge " + std::to_string(e.id) +
                                    " has no stable letter image");
      }
    } else {
      if (it->second < 0 || it->second >= target->order())
        throw std::invalid_argument("stable letter image out of range");
      if (tree.contains(e.id) && it->second != target->identity())
        throw std::invalid_argument("tree edge " + std::to_string(e.id) +
                                    " has a non-identity stable letter");
    }
  }

  for (const auto& e : gog.graph.edges) {
    const GroupHom& f0 = gog.b0.at(e.id);
    const GroupHom& f1 = gog.b1.at(e.id);
    const GroupHom& m0 = vmaps.at(e.d0);
    const GroupHom& m1 = vmaps.at(e.d1);
    Elt t = tau.at(e.id);
    for (Elt x = 0; x < f0.domain()->order(); ++x)
      if (target->conj(t, m1(f1(x))) != m0(f0(x)))
        throw std::invalid_argument("edge " + std::to_string(e.id) +
                                    " relation is not respected by the maps");
  }

  std::vector<Elt> gens;
  for (const auto& [v, h] : vmaps)
    gens.insert(gens.end(), h.image().elements.begin(), h.image().elements.end());
  for (const auto& [e, t] : tau) gens.push_back(t);
  Subgroup image = subgroup_generated(target, gens);

  return PQuotientMap{std::move(gog), std::move(tree), std::move(target),
                      std::move(vmaps), std::move(tau), std::move(image)};
}

Elt eval_word(const PQuotientMap& phi, const Word& w) {
  const auto& target = *phi.target;
  Elt acc = target.identity();
  for (const Letter& l : w) {
    switch (l.kind) {
      case Letter::Kind::VGen: {
        auto it = phi.vmaps.find(l.obj);
        if (it == phi.vmaps.end())
          throw std::invalid_argument("word references unknown vertex " + std::to_string(l.obj));
        if (l.elt < 0 || l.elt >= it->second.domain()->order())
          throw std::invalid_argument("word references an element outside its group");
        acc = target.mul(acc, it->second(l.elt));
        break;
      }
      case Letter::Kind::Stable: {
        auto it = phi.tau.find(l.obj);
        if (it == phi.tau.end())
          throw std::invalid_argument("word references unknown edge " + std::to_string(l.obj));
        Elt t = l.exp >= 0 ? it->second : target.inv(it->second);
        acc = target.mul(acc, t);
        break;
      }
    }
  }
  return acc;
}

ImageDecompositionReport image_decomposition_check(const PQuotientMap& phi) {
  ImageDecompositionReport rep;
  const Subgroup& im = phi.image;
  rep.image_order = im.order();

  // normal closure, inside the image, of every vertex group image
  std::vector<Elt> closure_gens;
  for (const auto& [v, h] : phi.vmaps)
    for (Elt x : h.image().elements)
      for (Elt g : im.elements) closure_gens.push_back(phi.target->conj(g, x));
  Subgroup closure = subgroup_generated(phi.target, closure_gens);
  rep.vertex_normal_closure_order = closure.order();

  std::vector<Elt> taus;
  for (const auto& [e, t] : phi.tau) taus.push_back(t);
  Subgroup tsub = subgroup_generated(phi.target, taus);

  std::set<Elt> prod;
  for (Elt n : closure.elements)
    for (Elt t : tsub.elements) prod.insert(phi.target->mul(n, t));
  rep.covered_by_product =
      prod.size() == size_t(im.order()) &&
      std::equal(prod.begin(), prod.end(), im.elements.begin(), im.elements.end());

  // with the closure normal, the two statements agree; keep both observable
  std::vector<Elt> both(closure.elements);
  both.insert(both.end(), taus.begin(), taus.end());
  rep.quotient_generated_by_taus = subgroup_generated(phi.target, both).order() == im.order();
  return rep;
}

OpenSubgroupSpec make_open_subgroup(PQuotientMap phi, Subgroup q) {
  if (!groups_equal(q.parent, phi.target))
    throw std::invalid_argument("subgroup does not live in the quotient target");
  make_subgroup(q.parent, q.elements);  // revalidate closure
  Subgroup qprime = intersect(q, phi.image);
  OpenSubgroupSpec spec{std::move(phi), std::move(q), 1, false};
  spec.index = spec.phi.image.order() / qprime.order();
  // normality of the preimage reduces to normality of q cap im inside im
  bool normal = true;
  for (Elt g : spec.phi.image.elements) {
    for (Elt x : qprime.elements)
      if (!qprime.contains(spec.phi.target->conj(g, x))) {
        normal = false;
        break;
      }
    if (!normal) break;
  }
  spec.normal_in_image = normal;
  return spec;
}

}  // namespace pgog
