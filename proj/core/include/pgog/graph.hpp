#pragma once

#include <string>
#include <vector>

// Finite oriented multigraphs with integer ids. Loops and parallel edges
// are allowed; d0 is the origin of an edge and d1 its terminus.

namespace pgog {

struct EdgeRec {
  int id;
  int d0;
  int d1;
  bool operator==(const EdgeRec&) const = default;
};

struct OrientedGraph {
  std::vector<int> vertices;  // sorted, unique
  std::vector<EdgeRec> edges; // sorted by id, unique ids

  bool has_vertex(int v) const;
  const EdgeRec& edge(int id) const;
  bool operator==(const OrientedGraph&) const = default;
};

// sorts and checks ids; throws on duplicate ids or dangling endpoints
OrientedGraph make_graph(std::vector<int> vertices, std::vector<EdgeRec> edges);

struct GraphReport {
  bool valid = false;
  bool connected = false;
  std::vector<std::vector<int>> components;  // vertex ids per component
  std::vector<std::string> problems;
};
GraphReport validate_graph(const OrientedGraph& g);

struct SpanningTree {
  int root = 0;
  std::vector<int> tree_edges;  // sorted edge ids
  bool contains(int edge_id) const;
};

// breadth-first from root, lower vertex and edge ids explored first;
// throws if the graph is disconnected
SpanningTree spanning_tree(const OrientedGraph& g, int root);

// validates that the given edge ids form a spanning tree
SpanningTree make_spanning_tree(const OrientedGraph& g, std::vector<int> edge_ids, int root);

// |E| - |V| + 1 for a connected graph
int free_rank(const OrientedGraph& g);

// oriented multigraph isomorphism; intended for small graphs
bool graphs_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

}  // namespace pgog
