#pragma once

#include "pgog/quotient.hpp"

// The decomposition a finite-index subgroup inherits from the action on the
// standard tree, computed entirely inside the finite quotient: objects of the
// quotient graph are double cosets of the images of the vertex and edge
// groups, stabilizers are pulled back along representatives, and boundary
// maps pick up a conjugator wherever the transversal fails to align.

namespace pgog {

struct DecompObject {
  int source_id = 0;  // vertex or edge of the source graph
  Elt rep = 0;        // transversal representative inside im(phi)
};

struct InducedDecomposition {
  OpenSubgroupSpec spec;
  GraphOfGroups delta0;
  int index = 1;

  std::map<int, DecompObject> vertex_info;  // delta0 vertex -> source data
  std::map<int, DecompObject> edge_info;    // delta0 edge -> source data
  std::map<int, std::vector<Elt>> vertex_stab;  // elements inside the source vertex group
  std::map<int, std::vector<Elt>> edge_stab;    // elements inside the source edge group
  std::map<int, Elt> conj0, conj1;  // per delta0 edge: conjugator in the source vertex group
  bool groups_filled = false;
};

// vertices, edges and incidence only; group data left empty
InducedDecomposition standard_graph(const OpenSubgroupSpec& spec);

// full induced graph of groups; passes validate_gog
InducedDecomposition induced_gog(const OpenSubgroupSpec& spec);

struct IndexAccountingReport {
  bool ok = false;
  std::map<int, long long> vertex_sums;  // source vertex -> sum of [G(v) : stab]
  std::map<int, long long> edge_sums;
  std::vector<std::string> problems;
};
IndexAccountingReport index_accounting(const InducedDecomposition& dec);

// every edge stabilizer computed from the b0 side must match the b1 side
bool edge_two_sided_check(const InducedDecomposition& dec);

}  // namespace pgog
