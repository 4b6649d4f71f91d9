#pragma once

#include <cstddef>
#include <vector>

#include "cgt/finite/perm.hpp"
#include "cgt/finite/presentation.hpp"

namespace cgt::fp {

struct HomSearchOptions {
  int degree = 4;                          // target S_K, K <= 7
  std::size_t max_image_order = 60;        // images larger than this are skipped
  std::size_t max_nodes = 500'000'000;     // search-tree nodes before giving up
  int jobs = 1;
};

struct HomSearchResult {
  /// One generator-image tuple per distinct image subgroup of S_K of order at
  /// most the bound: the least tuple (by element rank) found for it. Sorted.
  std::vector<std::vector<fin::Perm>> images;
  std::size_t homomorphisms = 0;  // tuples examined, one per conjugacy orbit
  std::size_t nodes = 0;
  bool complete = true;
};

/// Homomorphisms from the presented group to S_K, enumerated once per
/// simultaneous-conjugacy orbit: each generator image is the least element of
/// its orbit under the centralizer of the earlier images. Relators are
/// checked as soon as their generators are assigned. Work is split over the
/// first generator's image; the result does not depend on `jobs`.
HomSearchResult search_homomorphisms(const fin::GroupPresentation& p, const HomSearchOptions& opts);

/// Number of homomorphisms onto `target` (generated by the images), counted
/// without any symmetry reduction. Throws BudgetExceeded past `max_nodes`.
std::size_t epimorphism_count(const fin::GroupPresentation& p, const std::vector<fin::Perm>& target_generators,
                              int degree, std::size_t max_nodes = 100'000'000);

}  // namespace cgt::fp
