#include "cgt/thompson/random.hpp"

#include <algorithm>

namespace cgt::vn {

std::vector<Address> random_tree_leaves(int n, int carets, std::mt19937_64& rng) {
  std::vector<Address> leaves{Address{}};
  for (int c = 0; c < carets; ++c) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    std::size_t i = pick(rng);
    Address a = leaves[i];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
    for (int d = 0; d < n; ++d) leaves.push_back(a.child(d));
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

VnElement random_element(int n, int carets, std::mt19937_64& rng) {
  auto dom = random_tree_leaves(n, carets, rng);
  auto img = random_tree_leaves(n, carets, rng);
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<std::pair<Address, Address>> pairs;
  for (std::size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], img[i]);
  return canonicalize(VnElement::from_pairs(n, std::move(pairs)));
}

VnElement random_expansion(const VnElement& x, int steps, std::mt19937_64& rng) {
  VnElement y = x;
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, y.leaf_count() - 1);
    Address leaf = y.domain()[pick(rng)];
    y = expand(y, leaf);
  }
  return y;
}

}  // namespace cgt::vn
