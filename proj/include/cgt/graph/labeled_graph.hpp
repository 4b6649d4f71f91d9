#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgt::graph {

enum class Mode { Coxeter, Product };

struct Edge {
  int u;
  int v;
  int m;  // Coxeter label; 2 in product mode
};

/// Finite simplicial graph. In Coxeter mode edges carry labels m >= 2 (a
/// missing edge means m = infinity); in product mode vertices carry the name
/// of a finite group. Vertex order is the file order and is used wherever a
/// total order on vertices is needed.
class LabeledGraph {
 public:
  explicit LabeledGraph(Mode mode = Mode::Product) : mode_(mode) {}

  Mode mode() const { return mode_; }
  int size() const { return static_cast<int>(ids_.size()); }

  int add_vertex(std::string id, std::string group = {});
  void add_edge(int u, int v, int m = 2);
  void add_edge(std::string_view u, std::string_view v, int m = 2);

  const std::string& id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
  const std::string& group(int v) const { return groups_[static_cast<std::size_t>(v)]; }
  void set_group(int v, std::string group) { groups_[static_cast<std::size_t>(v)] = std::move(group); }
  /// Index of a vertex id, or -1.
  int index_of(std::string_view id) const;
  int require(std::string_view id) const;

  /// Edge label, 0 when there is no edge.
  int label(int u, int v) const { return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return label(u, v) != 0; }
  std::vector<int> neighbours(int v) const;
  std::vector<Edge> edges() const;

  /// Full subgraph on the given vertices, in the given order.
  LabeledGraph induced(const std::vector<int>& vertices) const;
  /// Vertices that are adjacent to every other vertex form a clique.
  bool is_clique(const std::vector<int>& vertices) const;

 private:
  Mode mode_;
  std::vector<std::string> ids_;
  std::vector<std::string> groups_;
  std::vector<std::vector<int>> adj_;
};

std::string to_string(Mode m);

}  // namespace cgt::graph
