#include "prefcast/semantics.hpp"

#include <stdexcept>

namespace prefcast {

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), ArgumentSet(n)) {
  if (n < 0) throw std::invalid_argument("UndirectedGraph: negative size");
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("UndirectedGraph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("UndirectedGraph: self-loops are not allowed");
  if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
  ++edge_count_;
}

bool UndirectedGraph::adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

ArgumentSet ConflictGraph::to_argument_set(const ArgumentSet& vertices) const {
  ArgumentSet out(framework_size);
  for (int v = vertices.first(); v >= 0; v = vertices.next(v + 1))
    out.insert(arg_of_vertex.at(static_cast<std::size_t>(v)));
  return out;
}

ArgumentSet ConflictGraph::to_vertex_set(const ArgumentSet& arguments) const {
  ArgumentSet out(graph.size());
  for (std::size_t v = 0; v < arg_of_vertex.size(); ++v)
    if (arguments.contains(arg_of_vertex[v])) out.insert(static_cast<int>(v));
  return out;
}

ArgumentSet attacked_by(const Framework& f, const ArgumentSet& s) {
  if (s.bound() != f.size())
    throw std::invalid_argument("attacked_by: set bound does not match framework");
  ArgumentSet out(f.size());
  for (int x = s.first(); x >= 0; x = s.next(x + 1)) out |= f.targets(x);
  return out;
}

ArgumentSet attackers_of(const Framework& f, const ArgumentSet& s) {
  if (s.bound() != f.size())
    throw std::invalid_argument("attackers_of: set bound does not match framework");
  ArgumentSet out(f.size());
  for (int x = s.first(); x >= 0; x = s.next(x + 1)) out |= f.attackers(x);
  return out;
}

ArgumentSet gamma(const Framework& f, const ArgumentSet& s) {
  return attacked_by(f, s) | attackers_of(f, s);
}

bool is_conflict_free(const Framework& f, const ArgumentSet& s) {
  for (int x = s.first(); x >= 0; x = s.next(x + 1))
    if (f.targets(x).intersects(s)) return false;
  return true;
}

bool is_self_defending(const Framework& f, const ArgumentSet& s) {
  return attackers_of(f, s).subset_of(attacked_by(f, s));
}

bool is_admissible(const Framework& f, const ArgumentSet& s) {
  return is_conflict_free(f, s) && is_self_defending(f, s);
}

ArgumentSet self_attacking(const Framework& f) {
  ArgumentSet out(f.size());
  for (int x = 0; x < f.size(); ++x)
    if (f.has_attack(x, x)) out.insert(x);
  return out;
}

ConflictGraph conflict_graph(const Framework& f) {
  ConflictGraph cg;
  cg.framework_size = f.size();
  ArgumentSet loops = self_attacking(f);
  std::vector<int> vertex_of_arg(static_cast<std::size_t>(f.size()), -1);
  for (int x = 0; x < f.size(); ++x) {
    if (loops.contains(x)) continue;
    vertex_of_arg[static_cast<std::size_t>(x)] = static_cast<int>(cg.arg_of_vertex.size());
    cg.arg_of_vertex.push_back(x);
  }
  cg.graph = UndirectedGraph(static_cast<int>(cg.arg_of_vertex.size()));
  for (auto [from, to] : f.attacks()) {
    if (from == to) continue;
    int u = vertex_of_arg[static_cast<std::size_t>(from)];
    int v = vertex_of_arg[static_cast<std::size_t>(to)];
    if (u < 0 || v < 0) continue;
    cg.graph.add_edge(u, v);
  }
  return cg;
}

}  // namespace prefcast
