#include "pgog/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace pgog {

bool OrientedGraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

const EdgeRec& OrientedGraph::edge(int id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), id,
                             [](const EdgeRec& e, int v) { return e.id < v; });
  if (it == edges.end() || it->id != id) throw std::invalid_argument("no such edge");
  return *it;
}

OrientedGraph make_graph(std::vector<int> vertices, std::vector<EdgeRec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex id");
  std::sort(edges.begin(), edges.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id) throw std::invalid_argument("duplicate edge id");
  OrientedGraph g{std::move(vertices), std::move(edges)};
  for (const auto& e : g.edges)
    if (!g.has_vertex(e.d0) || !g.has_vertex(e.d1))
      throw std::invalid_argument("edge endpoint is not a vertex");
  return g;
}

GraphReport validate_graph(const OrientedGraph& g) {
  GraphReport rep;
  if (g.vertices.empty()) {
    rep.problems.push_back("graph has no vertices");
    return rep;
  }
  std::set<int> vs(g.vertices.begin(), g.vertices.end());
  if (vs.size() != g.vertices.size()) rep.problems.push_back("duplicate vertex ids");
  std::set<int> es;
  for (const auto& e : g.edges) {
    if (!es.insert(e.id).second) rep.problems.push_back("duplicate edge id");
    if (!vs.count(e.d0) || !vs.count(e.d1))
      rep.problems.push_back("edge " + std::to_string(e.id) + " has a dangling endpoint");
  }
  if (!rep.problems.empty()) return rep;
  rep.valid = true;

  std::map<int, std::vector<int>> adj;
  for (const auto& e : g.edges) {
    adj[e.d0].push_back(e.d1);
    adj[e.d1].push_back(e.d0);
  }
  std::set<int> unseen(g.vertices.begin(), g.vertices.end());
  while (!unseen.empty()) {
    int start = *unseen.begin();
    std::vector<int> comp;
    std::queue<int> work;
    work.push(start);
    unseen.erase(start);
    while (!work.empty()) {
      int v = work.front();
      work.pop();
      comp.push_back(v);
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (int w : it->second)
        if (unseen.erase(w)) work.push(w);
    }
    std::sort(comp.begin(), comp.end());
    rep.components.push_back(std::move(comp));
  }
  rep.connected = rep.components.size() == 1;
  return rep;
}

bool SpanningTree::contains(int edge_id) const {
  return std::binary_search(tree_edges.begin(), tree_edges.end(), edge_id);
}

SpanningTree spanning_tree(const OrientedGraph& g, int root) {
  if (!g.has_vertex(root)) throw std::invalid_argument("root is not a vertex");
  std::set<int> visited{root};
  std::vector<int> tree;
  std::queue<int> work;
  work.push(root);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (const auto& e : g.edges) {
      int other;
      if (e.d0 == v) other = e.d1;
      else if (e.d1 == v) other = e.d0;
      else continue;
      if (visited.count(other)) continue;
      visited.insert(other);
      tree.push_back(e.id);
      work.push(other);
    }
  }
  if (visited.size() != g.vertices.size())
    throw std::invalid_argument("graph is disconnected");
  std::sort(tree.begin(), tree.end());
  return SpanningTree{root, std::move(tree)};
}

SpanningTree make_spanning_tree(const OrientedGraph& g, std::vector<int> edge_ids, int root) {
  if (!g.has_vertex(root)) throw std::invalid_argument("root is not a vertex");
  std::sort(edge_ids.begin(), edge_ids.end());
  if (std::adjacent_find(edge_ids.begin(), edge_ids.end()) != edge_ids.end())
    throw std::invalid_argument("duplicate tree edge");
  if (edge_ids.size() + 1 != g.vertices.size())
    throw std::invalid_argument("tree edge count must be |V| - 1");
  // connectivity over tree edges only
  std::map<int, std::vector<int>> adj;
  for (int id : edge_ids) {
    const auto& e = g.edge(id);
    adj[e.d0].push_back(e.d1);
    adj[e.d1].push_back(e.d0);
  }
  std::set<int> visited{root};
  std::queue<int> work;
  work.push(root);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (int w : adj[v])
      if (visited.insert(w).second) work.push(w);
  }
  if (visited.size() != g.vertices.size())
    throw std::invalid_argument("edges do not span the graph");
  return SpanningTree{root, std::move(edge_ids)};
}

int free_rank(const OrientedGraph& g) {
  auto rep = validate_graph(g);
  if (!rep.valid || !rep.connected)
    throw std::invalid_argument("free rank needs a connected graph");
  return int(g.edges.size()) - int(g.vertices.size()) + 1;
}

namespace {

struct VertexSig {
  int out = 0, in = 0, loops = 0;
  auto operator<=>(const VertexSig&) const = default;
};

}  // namespace

bool graphs_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
    return false;
  auto sigs = [](const OrientedGraph& g) {
    std::map<int, VertexSig> s;
    for (int v : g.vertices) s[v] = VertexSig{};
    for (const auto& e : g.edges) {
      if (e.d0 == e.d1) {
        s[e.d0].loops++;
      } else {
        s[e.d0].out++;
        s[e.d1].in++;
      }
    }
    return s;
  };
  auto sa = sigs(a), sb = sigs(b);
  std::vector<VertexSig> la, lb;
  for (auto& [v, s] : sa) la.push_back(s);
  for (auto& [v, s] : sb) lb.push_back(s);
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;

  auto pair_counts = [](const OrientedGraph& g) {
    std::map<std::pair<int, int>, int> c;
    for (const auto& e : g.edges) c[{e.d0, e.d1}]++;
    return c;
  };
  auto cb = pair_counts(b);

  std::vector<int> va = a.vertices;
  std::map<int, int> image;
  std::set<int> used;
  // backtracking over signature-compatible assignments
  auto extend = [&](auto&& self, size_t i) -> bool {
    if (i == va.size()) {
      auto ca = pair_counts(a);
      for (auto& [pr, cnt] : ca) {
        auto it = cb.find({image[pr.first], image[pr.second]});
        if (it == cb.end() || it->second != cnt) return false;
      }
      return true;
    }
    int v = va[i];
    for (int w : b.vertices) {
      if (used.count(w) || !(sa[v] == sb[w])) continue;
      image[v] = w;
      used.insert(w);
      if (self(self, i + 1)) return true;
      used.erase(w);
      image.erase(v);
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace pgog
