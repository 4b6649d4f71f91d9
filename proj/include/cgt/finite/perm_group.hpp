#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "cgt/finite/perm.hpp"

namespace cgt::fin {

/// Finite permutation group with an explicit element list. Elements are
/// numbered in breadth-first order over the generators, so element 0 is the
/// identity and every element has a shortest word in the generators.
///
/// Enumeration throws BudgetExceeded past `max_order`.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 10'000;

  PermGroup(int degree, std::vector<Perm> generators, std::size_t max_order = kDefaultMaxOrder);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  /// Index of p, or -1 when p is not in the group.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// g^-1 a g.
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }
  int generator_index(std::size_t k) const { return gen_idx_[k]; }
  int element_order(int a) const;
  bool is_abelian() const;

  /// Shortest word for element i as a list of generator positions; the
  /// element is the product of those generators from left to right.
  std::vector<int> word_of(int i) const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> parent_, parent_gen_;
  std::vector<int> gen_idx_;
  std::vector<int> inv_;
  std::vector<int> table_;  // Cayley table, only for small groups
};

/// Direct product acting on the disjoint union of the factors' points.
PermGroup direct_product(const std::vector<const PermGroup*>& factors,
                         std::size_t max_order = PermGroup::kDefaultMaxOrder);

/// Symmetric group of the given degree, generated by a transposition and a
/// full cycle.
PermGroup symmetric_group(int degree, std::size_t max_order = PermGroup::kDefaultMaxOrder);

}  // namespace cgt::fin
