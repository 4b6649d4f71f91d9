#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cgt/finite/perm_group.hpp"

namespace cgt::fin {

/// Subset of a group's elements, indexed as in PermGroup::elements().
using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept;
};

Bits empty_bits(std::size_t size);
inline bool test_bit(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
inline void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
std::size_t count_bits(const Bits& b);
bool is_subset(const Bits& a, const Bits& b);
Bits intersect(const Bits& a, const Bits& b);
std::vector<int> members(const Bits& b);

/// Subgroup generated by the given elements.
Bits generated_subgroup(const PermGroup& g, std::span<const int> elems);
/// x^-1 A x.
Bits conjugate(const PermGroup& g, const Bits& a, int x);
/// Some x with x^-1 A x = B.
bool conjugate_subgroups(const PermGroup& g, const Bits& a, const Bits& b);
/// Greedy small generating set of the subgroup.
std::vector<int> generating_set(const PermGroup& g, const Bits& h);
/// The subgroup as a permutation group on the same points.
PermGroup subgroup_group(const PermGroup& g, const Bits& h);
Bits whole_group(const PermGroup& g);

/// Every subgroup, by cyclic extension. Throws BudgetExceeded past `limit`.
std::vector<Bits> all_subgroups(const PermGroup& g, std::size_t limit = 100'000);

/// Conjugacy classes of subgroups ordered by containment up to conjugacy:
/// [A] <= [B] when some conjugate of A lies in B.
class ClassPoset {
 public:
  struct Node {
    Bits rep;
    std::vector<Bits> conjugates;
    std::size_t order = 0;
  };

  explicit ClassPoset(std::vector<Node> nodes);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  bool leq(std::size_t a, std::size_t b) const;
  /// Index of the class containing this subgroup, or nullopt.
  std::optional<std::size_t> class_of(const Bits& subgroup) const;
  /// Greatest lower / least upper bound, or nullopt when none exists.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  /// Reflexive, antisymmetric and transitive; checked exhaustively.
  bool is_partial_order() const;

 private:
  std::vector<Node> nodes_;
  std::unordered_map<Bits, std::size_t, BitsHash> lookup_;
};

/// Classes are sorted by subgroup order, ties broken by discovery order.
ClassPoset subgroup_classes(const PermGroup& g, std::size_t limit = 100'000);

}  // namespace cgt::fin
