#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cgt::vn {

/// Outcome of one family of element identities checked by brute force.
struct ClaimCheck {
  std::string name;
  std::string statement;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct ClaimBounds {
  int max_depth = 3;    // complete-tree depth for symmetric-group words
  int max_m = 4;
  int max_p = 3;
  int max_address = 3;  // address length for general transpositions
  int random_perms = 20;
  std::uint64_t seed = 1;
};

/// Checks, for one arity n >= 3, that every step of the four-involution
/// generation argument holds as an exact identity in V_n: synthesised words
/// for Sym of the depth-k complete trees, the pull-up elements, d_m, d_{m,p}
/// and arbitrary transpositions all evaluate to the directly built elements.
/// The last entry records that the literal conjugate (b_up)^p d_m (b_up)^-p
/// differs from d_{m,p} when p >= 1; it passes when every such case differs.
std::vector<ClaimCheck> check_generation_claims(int n, const ClaimBounds& bounds = {});

}  // namespace cgt::vn
