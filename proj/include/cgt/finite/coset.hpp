#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cgt/finite/presentation.hpp"

namespace cgt::fin {

struct CosetOptions {
  std::size_t max_rows = 100'000;
};

/// Complete coset table: cosets 0..index-1 (0 is the subgroup itself), with
/// action on the right by each generator and inverse.
class CosetTable {
 public:
  CosetTable(std::size_t generators, std::vector<int> table);

  std::size_t index() const { return rows_; }
  std::size_t generator_count() const { return gens_; }
  /// Coset c acted on by a letter (+k / -k as in FreeWord).
  int act(int c, int letter) const;
  int trace(int c, const FreeWord& w) const;
  /// Header "coset,<g>,<g>^-1,..." then one line per coset.
  std::string to_csv(const std::vector<std::string>& names) const;

 private:
  std::size_t gens_;
  std::size_t rows_;
  std::vector<int> table_;
};

/// Todd-Coxeter enumeration (HLT strategy) of the cosets of the subgroup
/// generated by `subgroup`. Throws BudgetExceeded when more than
/// `max_rows` cosets are alive at once: the result is then unknown.
CosetTable coset_enumerate(const GroupPresentation& p, const std::vector<FreeWord>& subgroup,
                           const CosetOptions& opts = {});

/// Schreier generators of the kernel of the homomorphism sending generator i
/// to images[i], read from a spanning tree of the image's Cayley graph.
/// Words are freely reduced, power-reduced and deduplicated up to inversion;
/// trivial generators are dropped. Throws InvalidInput when some relator does
/// not map to the identity.
std::vector<FreeWord> kernel_generators(const GroupPresentation& p, const std::vector<Perm>& images, int degree,
                                        std::size_t max_order = PermGroup::kDefaultMaxOrder);

}  // namespace cgt::fin
