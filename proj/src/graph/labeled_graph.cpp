#include "cgt/graph/labeled_graph.hpp"

#include "cgt/error.hpp"

namespace cgt::graph {

int LabeledGraph::add_vertex(std::string id, std::string group) {
  if (id.empty()) throw InvalidInput("vertex ids must be non-empty");
  if (index_of(id) >= 0) throw InvalidInput("duplicate vertex id '" + id + "'");
  if (mode_ == Mode::Product && group.empty()) throw InvalidInput("vertex '" + id + "' needs a group label");
  ids_.push_back(std::move(id));
  groups_.push_back(std::move(group));
  for (auto& row : adj_) row.push_back(0);
  adj_.emplace_back(ids_.size(), 0);
  return size() - 1;
}

void LabeledGraph::add_edge(int u, int v, int m) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("loops are not allowed (vertex '" + id(u) + "')");
  if (adjacent(u, v)) throw InvalidInput("duplicate edge " + id(u) + "-" + id(v));
  if (mode_ == Mode::Product) m = 2;
  if (m < 2) throw InvalidInput("edge labels must be at least 2");
  adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m;
  adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = m;
}

void LabeledGraph::add_edge(std::string_view u, std::string_view v, int m) { add_edge(require(u), require(v), m); }

int LabeledGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return static_cast<int>(i);
  return -1;
}

int LabeledGraph::require(std::string_view id) const {
  int i = index_of(id);
  if (i < 0) throw InvalidInput("unknown vertex '" + std::string(id) + "'");
  return i;
}

std::vector<int> LabeledGraph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (adjacent(u, v)) out.push_back(u);
  return out;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.push_back({u, v, label(u, v)});
  return out;
}

LabeledGraph LabeledGraph::induced(const std::vector<int>& vertices) const {
  LabeledGraph g(mode_);
  for (int v : vertices) g.add_vertex(id(v), group(v));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.add_edge(static_cast<int>(i), static_cast<int>(j), label(vertices[i], vertices[j]));
  return g;
}

bool LabeledGraph::is_clique(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!adjacent(vertices[i], vertices[j])) return false;
  return true;
}

std::string to_string(Mode m) { return m == Mode::Coxeter ? "coxeter" : "product"; }

}  // namespace cgt::graph
