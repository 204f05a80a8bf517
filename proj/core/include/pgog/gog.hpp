#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "pgog/graph.hpp"
#include "pgog/pgroup.hpp"
#include "pgog/rational.hpp"

// Graphs of finite p-groups: a connected oriented graph with a finite p-group
// on every vertex and edge and injective boundary maps b0, b1 carrying each
// edge group into the groups at its endpoints.

namespace pgog {

struct GraphOfGroups {
  int p = 2;
  OrientedGraph graph;
  std::map<int, GroupPtr> vgroups;
  std::map<int, GroupPtr> egroups;
  std::map<int, GroupHom> b0;
  std::map<int, GroupHom> b1;

  const GroupHom& boundary(int edge_id, int end) const {
    return end == 0 ? b0.at(edge_id) : b1.at(edge_id);
  }
};

bool gog_equal(const GraphOfGroups& a, const GraphOfGroups& b);

struct GogReport {
  bool valid = false;
  std::vector<std::string> problems;
};

GogReport validate_gog(const GraphOfGroups& g);
void require_valid_gog(const GraphOfGroups& g);

// non-loop edges whose b0 or b1 is onto the incident vertex group
std::vector<int> fictitious_edges(const GraphOfGroups& g);

struct CollapseResult {
  GraphOfGroups gog;
  int collapsed_edge;
  int absorbed_vertex;
  int surviving_vertex;
};

// removes a fictitious edge, absorbing the vertex on the isomorphic side into
// the other endpoint; boundary maps of edges at the absorbed vertex are
// recomposed with the absorption embedding
CollapseResult collapse_edge(const GraphOfGroups& g, int edge_id);

enum class ReduceOrder { Canonical, Random };

struct ReduceResult {
  GraphOfGroups gog;
  std::vector<int> collapsed_edges;   // in collapse order
  std::map<int, int> vertex_merge;    // absorbed vertex -> surviving vertex
};

ReduceResult reduce(const GraphOfGroups& g, ReduceOrder order = ReduceOrder::Canonical,
                    uint64_t seed = 0);

// sum over vertices of 1/|G_v| minus sum over edges of 1/|G_e|, exact
Rational euler_characteristic(const GraphOfGroups& g);

struct Letter {
  enum class Kind { VGen, Stable };
  Kind kind;
  int obj;   // vertex id for VGen, edge id for Stable
  Elt elt;   // group element for VGen
  int exp;   // +1 or -1 for Stable
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

Letter vgen(int vertex, Elt x);
Letter stable(int edge, int exp = 1);

struct Presentation {
  int basepoint = 0;
  SpanningTree tree;
  std::vector<Letter> generators;  // vertex generators then stable letters
  std::vector<Word> relators;
  int stable_letter_count = 0;
};

// Cayley relators for every vertex group plus, per edge, relators
// t_e b1(x) t_e^-1 b0(x)^-1 with t_e dropped on tree edges
Presentation fundamental_presentation(const GraphOfGroups& g, const SpanningTree& tree);
Presentation fundamental_presentation(const GraphOfGroups& g);

GraphOfGroups amalgam_gog(int p, const GroupPtr& g1, const GroupPtr& g2,
                          const GroupHom& f1, const GroupHom& f2);
// single vertex with one loop; b0 embeds the subgroup, b1 = f
GraphOfGroups hnn_gog(int p, const GroupPtr& g, const Subgroup& a, const GroupHom& f);

struct GogMorphism {
  GraphOfGroups source;
  GraphOfGroups target;
  std::map<int, int> vertex_map;
  struct EdgeImage {
    bool to_vertex = false;
    int id = 0;
    bool operator==(const EdgeImage&) const = default;
  };
  std::map<int, EdgeImage> edge_map;
  std::map<int, GroupHom> vmaps;  // per source vertex
  std::map<int, GroupHom> emaps;  // per source edge
};

GogReport validate_morphism(const GogMorphism& m);

}  // namespace pgog
