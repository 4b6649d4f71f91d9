#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgt/thompson/address.hpp"

namespace cgt::vn {

/// An element of the Higman-Thompson group V_n, stored as a tree-pair
/// diagram: the leaves of the domain tree in lexicographic order and, in a
/// parallel array, the leaf each one is sent to. The range tree is implicit
/// (its leaves are the images).
///
/// Actions are on the right: compose(x, y) applies x first, then y.
/// Values are immutable once built; every factory validates that both leaf
/// sets are leaf sets of finite complete n-ary trees.
class VnElement {
 public:
  static VnElement identity(int n);

  /// Builds from (domain leaf, image leaf) pairs. Throws InvalidInput unless
  /// the domain leaves and the images each form the leaves of a complete tree.
  static VnElement from_pairs(int n, std::vector<std::pair<Address, Address>> pairs);

  /// The element of Sym(Lea(tau_k)) sending leaf i to leaf perm[i], leaves of
  /// the depth-k complete tree indexed in lexicographic order. Not reduced.
  static VnElement on_complete_tree(int n, int depth, std::span<const int> perm);

  /// Parses `n=<arity>; dom=[leaf,...]; map=[image,...]`.
  static VnElement parse(std::string_view text);

  int arity() const { return n_; }
  std::size_t leaf_count() const { return domain_.size(); }
  std::span<const Address> domain() const { return domain_; }
  std::span<const Address> images() const { return image_; }
  std::vector<Address> range_leaves() const;

  /// Image of `a` under the induced map, or nullopt when `a` lies strictly
  /// above a domain leaf (the map is only defined below the leaves).
  std::optional<Address> apply(const Address& a) const;

  /// No reducible caret remains.
  bool is_canonical() const;
  bool is_identity() const;

  /// Structural (diagram) equality; use equals() for group equality.
  bool operator==(const VnElement& other) const = default;

  std::string to_string() const;

 private:
  VnElement(int n, std::vector<Address> domain, std::vector<Address> image)
      : n_(n), domain_(std::move(domain)), image_(std::move(image)) {}

  friend VnElement compose(const VnElement&, const VnElement&);
  friend VnElement invert(const VnElement&);
  friend VnElement canonicalize(const VnElement&);
  friend VnElement expand(const VnElement&, const Address&);

  int n_ = 2;
  std::vector<Address> domain_;
  std::vector<Address> image_;
};

enum class Parity { Even, Odd };

/// Class of x-then-y, canonical. Throws InvalidInput on arity mismatch.
VnElement compose(const VnElement& x, const VnElement& y);
VnElement invert(const VnElement& x);
/// Collapses carets {a i -> b i : i < n} until none remain. The result does
/// not depend on the order of collapses.
VnElement canonicalize(const VnElement& x);
/// Replaces domain leaf `leaf` by its n children (and its image likewise).
VnElement expand(const VnElement& x, const Address& leaf);
bool equals(const VnElement& x, const VnElement& y);
/// x^k for any integer k.
VnElement power(const VnElement& x, long long k);

/// Parity of the number of lexicographic inversions of this representative.
Parity parity(const VnElement& x);
/// Parity of the canonical representative; only a class invariant for odd n.
Parity class_parity(const VnElement& x);

/// Least k <= bound with x^k = 1, or nullopt when it exceeds the bound.
std::optional<int> element_order(const VnElement& x, int bound);

/// The involution generators b1..b4 (n >= 3): b1, b2 the dihedral
/// reflections of the n^2-gon on depth-2 leaves, b3 swaps 00 and 01, b4 swaps
/// 00 and 1 on the tree with leaves {0i} and {j : j > 0}.
VnElement generator(int n, int which);

/// 00->0, 01->10, 0i->1i (i>=2), 1->11, j->j (j>=2).
VnElement pull_up(int n);
/// 00->0, 02->20, 0i->2i (i != 0,2), 2->22, j->j (j != 0,2).
VnElement pull_up2(int n);
/// Transposition of 0^(p+m) and 0^p 1 on the smallest tree holding both.
VnElement d_element(int n, int m, int p);
/// Transposition of two incomparable addresses on the smallest complete tree
/// containing both; all other leaves fixed.
VnElement transposition_element(int n, const Address& a, const Address& b);

std::string to_string(Parity p);

}  // namespace cgt::vn
