#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgt/finite/perm_group.hpp"
#include "cgt/finite/subgroups.hpp"

namespace cgt::fin {

/// Isomorphism invariants of a finite group. Different signatures prove
/// non-isomorphism; equal signatures are only evidence.
struct IsoSignature {
  std::size_t order = 0;
  std::vector<long long> abelian_invariants;  // elementary divisors of G/G'
  std::map<int, int> element_orders;          // order -> count
  std::vector<std::size_t> class_sizes;       // sorted
  bool subgroups_counted = false;
  std::map<std::size_t, std::size_t> subgroup_orders;  // order -> number of subgroups
  std::vector<std::size_t> derived_series;             // |G|, |G'|, |G''|, ...

  bool operator==(const IsoSignature&) const = default;
  auto operator<=>(const IsoSignature&) const = default;
  std::string to_string() const;
};

struct SignatureOptions {
  /// Subgroups are counted only for groups of at most this order.
  std::size_t subgroup_order_cap = 128;
  std::size_t subgroup_limit = 20'000;
};

IsoSignature iso_signature(const PermGroup& g, const SignatureOptions& opts = {});

/// Elements of the derived subgroup.
Bits derived_subgroup(const PermGroup& g, const Bits& h);
Bits normal_closure(const PermGroup& g, std::vector<int> elems);
/// Elementary divisors of the abelianisation.
std::vector<long long> abelian_invariants(const PermGroup& g);
/// Conjugacy class index of every element, classes numbered from 0.
std::vector<int> conjugacy_classes(const PermGroup& g, int* class_count = nullptr);

/// Images, in h, of generating_set(g, whole_group(g)) under an isomorphism,
/// or nullopt when the groups are not isomorphic.
std::optional<std::vector<int>> find_isomorphism(const PermGroup& g, const PermGroup& h);

struct IsoOptions {
  /// Equal signatures are confirmed by explicit search below this order.
  std::size_t confirm_below = 128;
  SignatureOptions signature;
};

/// true / false when decided; nullopt when the signatures agree but the order
/// is too large to confirm. Abelian groups are decided by their invariants.
std::optional<bool> are_isomorphic(const PermGroup& g, const PermGroup& h, const IsoOptions& opts = {});

}  // namespace cgt::fin
