#include "pgog/verify.hpp"

#include <algorithm>

#include "pgog/seeds.hpp"

namespace pgog {

namespace {

std::vector<int> sorted_orders(const std::map<int, GroupPtr>& groups) {
  std::vector<int> out;
  for (const auto& [id, g] : groups) out.push_back(g->order());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool LimitationReport::hard_failure() const {
  if (normal && !holds_lower) return true;
  if (strict_expected && !holds_strict) return true;
  if (!holds_upper_edges || !holds_upper_vertices || !holds_upper_total) return true;
  return !euler_multiplicative;
}

LimitationReport check_limitation(const OpenSubgroupSpec& spec) {
  const GraphOfGroups& src = spec.phi.gog;
  if (!fictitious_edges(src).empty())
    throw std::invalid_argument("limitation check needs a reduced source");

  LimitationReport rep;
  rep.v_gamma = int(src.graph.vertices.size());
  rep.e_gamma = int(src.graph.edges.size());
  rep.index = spec.index;
  rep.normal = spec.normal_in_image;

  InducedDecomposition dec = induced_gog(spec);
  rep.v_delta0 = int(dec.delta0.graph.vertices.size());
  rep.e_delta0 = int(dec.delta0.graph.edges.size());

  ReduceResult red = reduce(dec.delta0);
  rep.v_delta = int(red.gog.graph.vertices.size());
  rep.e_delta = int(red.gog.graph.edges.size());

  rep.delta_matches_gamma = graphs_isomorphic(red.gog.graph, src.graph);
  rep.holds_lower = rep.e_delta >= rep.e_gamma;
  rep.strict_expected =
      rep.normal && src.p > 2 && rep.index > 1 && !rep.delta_matches_gamma;
  rep.holds_strict = rep.e_delta > rep.e_gamma;

  rep.holds_upper_edges = rep.e_delta0 <= rep.index * rep.e_gamma;
  rep.holds_upper_vertices = rep.v_delta0 <= rep.index * rep.v_gamma;
  rep.holds_upper_total =
      rep.v_delta0 + rep.e_delta0 <= rep.index * (rep.v_gamma + rep.e_gamma);

  rep.chi_gamma = euler_characteristic(src);
  rep.chi_delta0 = euler_characteristic(dec.delta0);
  rep.euler_multiplicative = rep.chi_delta0 == Rational(rep.index) * rep.chi_gamma;

  if (rep.normal && !rep.holds_lower)
    rep.problems.push_back("reduced quotient has fewer edges than the source");
  if (rep.strict_expected && !rep.holds_strict)
    rep.problems.push_back("expected strict edge growth at odd p, found equality");
  if (!rep.holds_upper_edges || !rep.holds_upper_vertices || !rep.holds_upper_total)
    rep.problems.push_back("quotient exceeds index times the source size");
  if (!rep.euler_multiplicative)
    rep.problems.push_back("Euler characteristic is not multiplied by the index");
  return rep;
}

PartitionReport partition_diagnostics(const OpenSubgroupSpec& spec) {
  const GraphOfGroups& src = spec.phi.gog;
  if (spec.index != src.p)
    throw std::invalid_argument("partition diagnostics need index exactly p");
  if (!spec.normal_in_image)
    throw std::invalid_argument("partition diagnostics need a normal subgroup");

  PartitionReport rep;
  rep.p = src.p;
  rep.index = spec.index;
  rep.e_gamma = int(src.graph.edges.size());

  InducedDecomposition dec = induced_gog(spec);
  std::map<int, int> vfibre, efibre;
  for (const auto& [dv, info] : dec.vertex_info) vfibre[info.source_id]++;
  for (const auto& [de, info] : dec.edge_info) efibre[info.source_id]++;

  rep.fibres_uniform = true;
  for (const auto& [v, n] : vfibre)
    if (n != 1 && n != rep.p) {
      rep.fibres_uniform = false;
      rep.problems.push_back("vertex " + std::to_string(v) + " fibre has size " +
                             std::to_string(n));
    }
  for (const auto& [e, n] : efibre)
    if (n != 1 && n != rep.p) {
      rep.fibres_uniform = false;
      rep.problems.push_back("edge " + std::to_string(e) + " fibre has size " +
                             std::to_string(n));
    }

  for (const auto& [dv, info] : dec.vertex_info)
    (vfibre.at(info.source_id) == 1 ? rep.v1 : rep.v2).push_back(dv);

  for (const auto& e : src.graph.edges) {
    bool fixed0 = vfibre.at(e.d0) == 1, fixed1 = vfibre.at(e.d1) == 1;
    EdgeClass cls = fixed0 && fixed1 ? EdgeClass::BothFixed
                    : !fixed0 && !fixed1 ? EdgeClass::BothMoved
                                         : EdgeClass::Mixed;
    rep.edge_class[e.id] = cls;
    switch (cls) {
      case EdgeClass::BothFixed: rep.bound += 1; break;
      case EdgeClass::BothMoved: rep.bound += rep.p; break;
      case EdgeClass::Mixed:
        rep.bound += rep.p - 1;
        rep.mixed_edge_index[e.id] =
            src.vgroups.at(e.d0)->order() / src.egroups.at(e.id)->order();
        break;
    }
    // loops whose p lifts form a circuit of fictitious edges
    if (e.d0 == e.d1 && !fixed0 &&
        src.egroups.at(e.id)->order() == src.vgroups.at(e.d0)->order() &&
        !spec.q.contains(spec.phi.tau.at(e.id)))
      rep.circuit_loops.push_back(e.id);
  }
  rep.adjusted_bound =
      rep.bound - (rep.p - 1) * static_cast<long long>(rep.circuit_loops.size());

  rep.e_delta = int(reduce(dec.delta0).gog.graph.edges.size());
  rep.holds_bound = rep.bound <= rep.e_delta;
  rep.holds_adjusted = rep.adjusted_bound <= rep.e_delta;
  rep.bound_covers_gamma = rep.e_gamma <= rep.bound;
  if (!rep.holds_bound) {
    std::string msg = "partition bound exceeds the reduced edge count";
    if (!rep.circuit_loops.empty()) {
      msg += "; loop";
      for (int e : rep.circuit_loops) msg += " " + std::to_string(e);
      msg += " unrolls to a circuit that re-collapses, contributing 1 edge instead of p";
    }
    rep.problems.push_back(std::move(msg));
  }
  if (!rep.holds_adjusted)
    rep.problems.push_back("adjusted partition bound exceeds the reduced edge count");
  if (!rep.bound_covers_gamma)
    rep.problems.push_back("partition bound fails to cover the source edge count");
  return rep;
}

ConfluenceReport check_reduction_confluence(const GraphOfGroups& g, int trials,
                                            uint64_t seed) {
  ConfluenceReport rep;
  ReduceResult canon = reduce(g, ReduceOrder::Canonical);
  rep.vertices = int(canon.gog.graph.vertices.size());
  rep.edges = int(canon.gog.graph.edges.size());
  rep.vertex_orders = sorted_orders(canon.gog.vgroups);
  rep.edge_orders = sorted_orders(canon.gog.egroups);

  rep.ok = true;
  rep.orders_match = true;
  for (int i = 0; i < trials; ++i) {
    ConfluenceTrial t;
    t.seed = derive_seed(seed, uint64_t(i));
    ReduceResult r = reduce(g, ReduceOrder::Random, t.seed);
    t.vertices = int(r.gog.graph.vertices.size());
    t.edges = int(r.gog.graph.edges.size());
    t.vertex_orders = sorted_orders(r.gog.vgroups);
    t.edge_orders = sorted_orders(r.gog.egroups);
    if (t.vertices != rep.vertices || t.edges != rep.edges) {
      rep.ok = false;
      rep.problems.push_back("trial " + std::to_string(i) + " reached (" +
                             std::to_string(t.vertices) + ", " +
                             std::to_string(t.edges) + ") instead of (" +
                             std::to_string(rep.vertices) + ", " +
                             std::to_string(rep.edges) + ")");
    }
    if (t.vertex_orders != rep.vertex_orders || t.edge_orders != rep.edge_orders)
      rep.orders_match = false;
    rep.trials.push_back(std::move(t));
  }
  return rep;
}

GrowthTable accessibility_growth(const std::vector<OpenSubgroupSpec>& series) {
  GrowthTable table;
  table.strictly_increasing = true;
  for (size_t i = 0; i < series.size(); ++i) {
    GrowthRow row;
    row.instance = int(i);
    row.e_gamma = int(series[i].phi.gog.graph.edges.size());
    row.e_delta =
        int(reduce(induced_gog(series[i]).delta0).gog.graph.edges.size());
    if (!table.rows.empty() && row.e_delta <= table.rows.back().e_delta)
      table.strictly_increasing = false;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace pgog
