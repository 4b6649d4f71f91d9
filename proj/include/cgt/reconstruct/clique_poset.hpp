#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/finite/isomorphism.hpp"
#include "cgt/graph/catalog.hpp"
#include "cgt/graph/labeled_graph.hpp"

namespace cgt::recon {

/// Finite poset whose elements carry a finite group, up to isomorphism.
struct PosetNode {
  std::string name;
  std::string group;  // "1", "C2", "C2 x S3", ...
  std::shared_ptr<const fin::PermGroup> perm_group;
  fin::IsoSignature label;
};

class LabeledPoset {
 public:
  LabeledPoset() = default;
  /// leq[i][j] means node i <= node j.
  LabeledPoset(std::vector<PosetNode> nodes, std::vector<std::vector<char>> leq);

  std::size_t size() const { return nodes_.size(); }
  const PosetNode& node(std::size_t i) const { return nodes_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }
  bool is_partial_order() const;
  std::vector<std::vector<int>> upper_covers() const;
  /// Unique minimal element, if any.
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

  /// `{"nodes":[{"id","name","group","order","signature"}],"covers":[[i,j],...]}`.
  std::string to_json(int indent = 2) const;
  /// Reads the same format; node groups are rebuilt from their names
  /// ("1" or factors joined by " x ") and signatures recomputed.
  static LabeledPoset from_json(std::string_view text, const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

 private:
  std::vector<PosetNode> nodes_;
  std::vector<std::vector<char>> leq_;
};

/// Cliques of the graph (including the empty one) ordered by inclusion, each
/// labelled by the direct product of its vertex groups.
struct CliquePoset {
  LabeledPoset poset;
  std::vector<unsigned> cliques;  // vertex masks, parallel to the nodes
};

CliquePoset clique_poset(const graph::LabeledGraph& g, const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

/// Direct product of the named catalog groups with its signature, cached by
/// the sorted list of names.
std::shared_ptr<const PosetNode> product_node(std::vector<std::string> factors,
                                              const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

/// Every pair of distinct vertices is separated by a maximal clique holding
/// exactly one of them.
bool is_T0(const graph::LabeledGraph& g);

/// Rebuilds a product-mode graph from the poset alone: vertices are the atoms
/// (named after them, groups matched against the catalog by signature and,
/// when that is ambiguous, by explicit isomorphism) and two atoms are joined
/// when they have a least upper bound. Throws InvalidInput unless the poset
/// has a bottom and every element is determined by the atoms below it.
graph::LabeledGraph reconstruct_graph(const LabeledPoset& p,
                                      const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

/// Label- and order-preserving bijection a -> b, or nullopt.
std::optional<std::vector<int>> poset_isomorphism(const LabeledPoset& a, const LabeledPoset& b);

/// Meets and joins of special subgroups in the poset of conjugacy classes of
/// all subgroups of a clique product: [G_A] ^ [G_B] = [G_{A n B}] and
/// [G_A] v [G_B] = [G_{A u B}].
struct ParabolicLawReport {
  std::size_t group_order = 0;
  std::size_t classes = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};
ParabolicLawReport check_parabolic_laws(const graph::LabeledGraph& clique,
                                        const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

}  // namespace cgt::recon
