#pragma once

#include <random>

#include "cgt/thompson/vn_element.hpp"

namespace cgt::vn {

/// Random leaf set of a complete n-ary tree with `carets` internal nodes,
/// grown by splitting uniformly chosen leaves.
std::vector<Address> random_tree_leaves(int n, int carets, std::mt19937_64& rng);

/// Random element: two random trees with the same caret count and a uniform
/// leaf bijection. The result is canonicalised.
VnElement random_element(int n, int carets, std::mt19937_64& rng);

/// Expands `steps` uniformly chosen domain leaves of x.
VnElement random_expansion(const VnElement& x, int steps, std::mt19937_64& rng);

}  // namespace cgt::vn
