#pragma once

#include <vector>

#include "prefcast/argument_set.hpp"

namespace prefcast {

// Simple undirected graph without self-loops (adding one throws).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);

  int size() const { return n_; }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const ArgumentSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<ArgumentSet> adj_;
};

// Conflict graph of a framework: vertices are the non-self-attacking
// arguments, two vertices are adjacent when an attack runs between them in
// either direction. Maximal independent sets of this graph are exactly the
// naive sets of the framework.
struct ConflictGraph {
  UndirectedGraph graph;
  std::vector<int> arg_of_vertex;  // vertex index -> argument index
  int framework_size = 0;

  // Maps a vertex set of `graph` back to an argument set of the framework.
  ArgumentSet to_argument_set(const ArgumentSet& vertices) const;
  // Maps an argument set (which must avoid self-attackers) to a vertex set.
  ArgumentSet to_vertex_set(const ArgumentSet& arguments) const;
};

}  // namespace prefcast
