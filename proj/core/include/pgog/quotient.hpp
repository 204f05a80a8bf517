#pragma once

#include "pgog/gog.hpp"

// A finite shadow of a quotient of the fundamental group: compatible maps of
// the vertex groups into a finite p-group plus an image for each stable
// letter, with tree letters sent to the identity.

namespace pgog {

struct PQuotientMap {
  GraphOfGroups gog;
  SpanningTree tree;
  GroupPtr target;
  std::map<int, GroupHom> vmaps;  // per vertex
  std::map<int, Elt> tau;         // per edge; identity on tree edges
  Subgroup image;                 // subgroup of target generated by all data
};

// validates compatibility: tau_e . vmap_{d1}(b1 x) . tau_e^-1 = vmap_{d0}(b0 x)
PQuotientMap build_quotient_map(GraphOfGroups gog, SpanningTree tree, GroupPtr target,
                                std::map<int, GroupHom> vmaps, std::map<int, Elt> tau);

Elt eval_word(const PQuotientMap& phi, const Word& w);

struct ImageDecompositionReport {
  int image_order = 0;
  int vertex_normal_closure_order = 0;
  bool covered_by_product = false;          // closure times tau subgroup is the image
  bool quotient_generated_by_taus = false;  // image mod closure comes from stable letters
};
ImageDecompositionReport image_decomposition_check(const PQuotientMap& phi);

struct OpenSubgroupSpec {
  PQuotientMap phi;
  Subgroup q;            // subgroup of the target
  int index = 1;         // [im(phi) : q cap im(phi)]
  bool normal_in_image = false;
};

OpenSubgroupSpec make_open_subgroup(PQuotientMap phi, Subgroup q);

}  // namespace pgog
