#pragma once

#include "pgog/decomp.hpp"

// Theorem checks over induced decompositions: the reduced edge-count lower
// bound for normal subgroups, index upper bounds, the fixed/moved vertex
// partition behind the index-p case, reduction confluence, and growth tables.

namespace pgog {

struct LimitationReport {
  int v_gamma = 0, e_gamma = 0;
  int v_delta0 = 0, e_delta0 = 0;
  int v_delta = 0, e_delta = 0;
  int index = 1;
  bool normal = false;
  bool delta_matches_gamma = false;  // reduced quotient graph isomorphic to source graph
  bool holds_lower = false;          // e_delta >= e_gamma, the theorem for normal q
  bool strict_expected = false;      // p > 2, normal, index > 1, graphs differ
  bool holds_strict = false;
  bool holds_upper_edges = false;     // e_delta0 <= index * e_gamma
  bool holds_upper_vertices = false;  // v_delta0 <= index * v_gamma
  bool holds_upper_total = false;
  bool euler_multiplicative = false;  // chi(delta0) = index * chi(gamma), exact
  Rational chi_gamma, chi_delta0;
  std::vector<std::string> problems;

  bool hard_failure() const;
};

// source must be reduced
LimitationReport check_limitation(const OpenSubgroupSpec& spec);

enum class EdgeClass { BothFixed, BothMoved, Mixed };

struct PartitionReport {
  int p = 0;
  int index = 0;
  bool fibres_uniform = false;          // every fibre has size 1 or p
  std::vector<int> v1, v2;              // delta0 vertices over fixed / moved fibres
  std::map<int, EdgeClass> edge_class;  // per source edge
  std::map<int, int> mixed_edge_index;  // [G(d0 e) : G(e)] for mixed edges
  long long bound = 0;  // |fixed| + p * |moved| + (p-1) * |mixed|, counted in the source
  int e_gamma = 0;
  int e_delta = 0;
  bool holds_bound = false;         // bound <= e_delta
  bool bound_covers_gamma = false;  // e_gamma <= bound

  // A loop with an isomorphic boundary at a moved vertex whose stable letter
  // leaves q lifts to a circuit of fictitious edges, which re-collapses to a
  // single loop. Such a loop contributes 1 edge, not p, so the bound above
  // overcounts it by p - 1. The adjusted bound subtracts that deficit and is
  // a valid lower bound in all cases.
  std::vector<int> circuit_loops;
  long long adjusted_bound = 0;
  bool holds_adjusted = false;  // adjusted_bound <= e_delta
  std::vector<std::string> problems;
};

// requires index exactly p and q normal in the image
PartitionReport partition_diagnostics(const OpenSubgroupSpec& spec);

struct ConfluenceTrial {
  uint64_t seed = 0;
  int vertices = 0, edges = 0;
  std::vector<int> vertex_orders, edge_orders;  // sorted group orders
};

struct ConfluenceReport {
  bool ok = false;          // every collapse order reaches the same (|V|, |E|)
  int vertices = 0, edges = 0;
  std::vector<int> vertex_orders, edge_orders;  // canonical run
  bool orders_match = false;                    // group-order multisets also agree
  std::vector<ConfluenceTrial> trials;
  std::vector<std::string> problems;
};

ConfluenceReport check_reduction_confluence(const GraphOfGroups& g, int trials,
                                            uint64_t seed);

struct GrowthRow {
  int instance = 0;
  int e_gamma = 0;
  int e_delta = 0;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  bool strictly_increasing = false;
};

GrowthTable accessibility_growth(const std::vector<OpenSubgroupSpec>& series);

}  // namespace pgog
