#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgt/finite/perm_group.hpp"
#include "cgt/finite/presentation.hpp"
#include "cgt/graph/catalog.hpp"
#include "cgt/graph/labeled_graph.hpp"

namespace cgt::rw {

/// Non-trivial element `elem` (an index into the vertex group's element
/// list) of the group at `vertex`.
struct Syllable {
  int vertex;
  int elem;
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};
using ProductWord = std::vector<Syllable>;

/// Word problem in a graph product of finite groups. Vertex groups come from
/// the catalog; generator names follow graph_product_presentation.
class GraphProduct {
 public:
  explicit GraphProduct(graph::LabeledGraph g, const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

  const graph::LabeledGraph& graph() const { return g_; }
  const fin::PermGroup& vertex_group(int v) const { return groups_[static_cast<std::size_t>(v)]; }
  const fin::GroupPresentation& presentation() const { return pres_; }

  ProductWord from_free_word(const fin::FreeWord& w) const;
  fin::FreeWord to_free_word(const ProductWord& w) const;
  ProductWord parse(std::string_view text) const;
  std::string format(const ProductWord& w) const;

  /// Merges syllables of one vertex whenever everything between them commutes
  /// with it, drops trivial syllables, and then lists syllables greedily by
  /// vertex order among those that can be shuffled to the front. Two words
  /// are equal in the group exactly when their normal forms coincide.
  ProductWord normal_form(const ProductWord& w) const;
  bool equal(const ProductWord& a, const ProductWord& b) const;
  ProductWord multiply(const ProductWord& a, const ProductWord& b) const;
  ProductWord inverse(const ProductWord& w) const;

  /// p_X: kills every syllable outside X, then normalizes.
  ProductWord retraction(const std::vector<int>& x, const ProductWord& w) const;

 private:
  graph::LabeledGraph g_;
  std::vector<fin::PermGroup> groups_;
  fin::GroupPresentation pres_;
  std::vector<std::pair<int, int>> gen_owner_;  // presentation generator -> (vertex, generator position)
};

}  // namespace cgt::rw
