#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgt/finite/perm_group.hpp"

namespace cgt::fin {

/// Word in a free group: letter +k is generator k-1, -k its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduce(FreeWord w);
FreeWord inverse_word(const FreeWord& w);
FreeWord power_word(const FreeWord& w, int k);
FreeWord concat(const FreeWord& a, const FreeWord& b);
/// Cyclically reduced conjugate of w.
FreeWord cyclic_reduce(FreeWord w);
/// Rewrites runs x^e with |e| reduced modulo known generator orders
/// (orders[i] == 0 when unknown), choosing the exponent of least absolute
/// value, then freely reduces.
FreeWord reduce_powers(const FreeWord& w, const std::vector<int>& orders);

/// Finite presentation <generators | relators>.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  int generator_index(std::string_view name) const;  // -1 when unknown
  /// Whitespace-separated tokens "x", "x^k" (k may be negative).
  FreeWord parse_word(std::string_view text) const;
  std::string format_word(const FreeWord& w) const;
  std::string to_string() const;
  /// Throws InvalidInput when a relator uses an undeclared generator.
  void validate() const;
  /// Orders of generators read off relators of the form x^k (0 = unknown).
  std::vector<int> generator_orders() const;
};

/// Image of w when generator i is sent to images[i].
Perm evaluate_word(const std::vector<Perm>& images, const FreeWord& w, int degree);

/// A presentation of a finite permutation group on its own generators:
/// relators from a spanning tree of the Cayley graph, then (optionally) pruned
/// greedily while coset enumeration still returns the group order.
GroupPresentation presentation_of(const PermGroup& g, std::vector<std::string> names, bool prune = true);

}  // namespace cgt::fin
