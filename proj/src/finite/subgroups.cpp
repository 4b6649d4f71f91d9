#include "cgt/finite/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt::fin {

std::size_t BitsHash::operator()(const Bits& b) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : b) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Bits empty_bits(std::size_t size) { return Bits((size + 63) / 64, 0); }

std::size_t count_bits(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

Bits intersect(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

std::vector<int> members(const Bits& b) {
  std::vector<int> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    for (std::uint64_t x = b[w]; x; x &= x - 1) out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
  }
  return out;
}

namespace {

// Dimino step: the subgroup generated by H and z, as a union of right cosets
// H r. `h_members` lists H, `gens` generates H.
Bits extend(const PermGroup& g, const std::vector<int>& h_members, const Bits& h_bits, const std::vector<int>& gens,
            int z) {
  if (test_bit(h_bits, z)) return h_bits;
  Bits k = h_bits;
  std::vector<int> all_gens = gens;
  all_gens.push_back(z);
  std::vector<int> reps{0};
  auto add_coset = [&](int r) {
    for (int h : h_members) set_bit(k, g.mul(h, r));
    reps.push_back(r);
  };
  add_coset(z);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int s : all_gens) {
      int x = g.mul(reps[i], s);
      if (!test_bit(k, x)) add_coset(x);
    }
  }
  return k;
}

struct Found {
  Bits bits;
  std::vector<int> gens;
};

}  // namespace

Bits generated_subgroup(const PermGroup& g, std::span<const int> elems) {
  Bits h = empty_bits(g.order());
  set_bit(h, 0);
  std::vector<int> gens;
  for (int e : elems) {
    if (test_bit(h, e)) continue;
    h = extend(g, members(h), h, gens, e);
    gens.push_back(e);
  }
  return h;
}

Bits whole_group(const PermGroup& g) {
  Bits b = empty_bits(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) set_bit(b, static_cast<int>(i));
  return b;
}

Bits conjugate(const PermGroup& g, const Bits& a, int x) {
  Bits r = empty_bits(g.order());
  for (int m : members(a)) set_bit(r, g.conj(m, x));
  return r;
}

bool conjugate_subgroups(const PermGroup& g, const Bits& a, const Bits& b) {
  if (count_bits(a) != count_bits(b)) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (conjugate(g, a, static_cast<int>(x)) == b) return true;
  return false;
}

std::vector<int> generating_set(const PermGroup& g, const Bits& h) {
  // Prefer elements of large order: they cover more of the subgroup at once.
  std::vector<int> elems = members(h);
  std::vector<int> ord(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) ord[i] = g.element_order(elems[i]);
  std::vector<std::size_t> idx(elems.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ord[a] > ord[b]; });
  Bits cur = empty_bits(g.order());
  set_bit(cur, 0);
  std::vector<int> gens;
  for (std::size_t i : idx) {
    if (test_bit(cur, elems[i])) continue;
    cur = extend(g, members(cur), cur, gens, elems[i]);
    gens.push_back(elems[i]);
    if (cur == h) break;
  }
  return gens;
}

PermGroup subgroup_group(const PermGroup& g, const Bits& h) {
  std::vector<Perm> gens;
  for (int x : generating_set(g, h)) gens.push_back(g.element(x));
  return PermGroup(g.degree(), std::move(gens));
}

std::vector<Bits> all_subgroups(const PermGroup& g, std::size_t limit) {
  const std::size_t n = g.order();
  // Cyclic subgroups, one generator each.
  std::vector<int> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t x = 1; x < n; ++x) {
      int e = static_cast<int>(x);
      if (seen.insert(generated_subgroup(g, std::span<const int>(&e, 1))).second) cyclic_gens.push_back(e);
    }
  }
  std::vector<Found> found;
  std::unordered_set<Bits, BitsHash> seen;
  Bits trivial = empty_bits(n);
  set_bit(trivial, 0);
  found.push_back({trivial, {}});
  seen.insert(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::vector<int> h_members = members(found[i].bits);
    for (int z : cyclic_gens) {
      if (test_bit(found[i].bits, z)) continue;
      Bits k = extend(g, h_members, found[i].bits, found[i].gens, z);
      if (!seen.insert(k).second) continue;
      if (found.size() >= limit)
        throw BudgetExceeded("more than " + std::to_string(limit) + " subgroups");
      std::vector<int> gens = found[i].gens;
      gens.push_back(z);
      found.push_back({std::move(k), std::move(gens)});
    }
  }
  std::vector<Bits> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.bits));
  return out;
}

ClassPoset::ClassPoset(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (const auto& c : nodes_[i].conjugates) lookup_.emplace(c, i);
}

bool ClassPoset::leq(std::size_t a, std::size_t b) const {
  const Node& x = nodes_[a];
  const Node& y = nodes_[b];
  if (y.order % x.order != 0) return false;
  if (x.order == y.order) return a == b;
  for (const auto& c : x.conjugates)
    if (is_subset(c, y.rep)) return true;
  return false;
}

std::optional<std::size_t> ClassPoset::class_of(const Bits& subgroup) const {
  auto it = lookup_.find(subgroup);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ClassPoset::meet(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < nodes_.size(); ++c)
    if (leq(c, a) && leq(c, b)) lower.push_back(c);
  if (lower.empty()) return std::nullopt;
  // A greatest element of `lower` has the largest order in it.
  std::size_t top = 0;
  for (auto c : lower) top = std::max(top, nodes_[c].order);
  for (auto cand : lower) {
    if (nodes_[cand].order != top) continue;
    bool ok = std::all_of(lower.begin(), lower.end(), [&](std::size_t c) { return leq(c, cand); });
    if (ok) return cand;
  }
  return std::nullopt;
}

std::optional<std::size_t> ClassPoset::join(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> upper;
  for (std::size_t c = 0; c < nodes_.size(); ++c)
    if (leq(a, c) && leq(b, c)) upper.push_back(c);
  if (upper.empty()) return std::nullopt;
  std::size_t bottom = upper.empty() ? 0 : nodes_[upper.front()].order;
  for (auto c : upper) bottom = std::min(bottom, nodes_[c].order);
  for (auto cand : upper) {
    if (nodes_[cand].order != bottom) continue;
    bool ok = std::all_of(upper.begin(), upper.end(), [&](std::size_t c) { return leq(cand, c); });
    if (ok) return cand;
  }
  return std::nullopt;
}

bool ClassPoset::is_partial_order() const {
  const std::size_t n = nodes_.size();
  std::vector<char> rel(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = leq(a, b) ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a * n + a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel[a * n + b] && rel[b * n + a]) return false;
      if (!rel[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel[b * n + c] && !rel[a * n + c]) return false;
    }
  }
  return true;
}

ClassPoset subgroup_classes(const PermGroup& g, std::size_t limit) {
  auto subs = all_subgroups(g, limit);
  std::unordered_map<Bits, std::size_t, BitsHash> where;
  for (std::size_t i = 0; i < subs.size(); ++i) where.emplace(subs[i], i);
  std::vector<std::vector<int>> conj_maps;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<int> m(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) m[x] = g.conj(static_cast<int>(x), g.generator_index(k));
    conj_maps.push_back(std::move(m));
  }
  std::vector<char> assigned(subs.size(), 0);
  std::vector<ClassPoset::Node> nodes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (assigned[i]) continue;
    ClassPoset::Node node;
    node.rep = subs[i];
    node.order = count_bits(subs[i]);
    std::vector<std::size_t> orbit{i};
    assigned[i] = 1;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      const std::vector<int> mem = members(subs[orbit[h]]);
      for (const auto& m : conj_maps) {
        Bits c = empty_bits(g.order());
        for (int x : mem) set_bit(c, m[static_cast<std::size_t>(x)]);
        std::size_t j = where.at(c);
        if (!assigned[j]) {
          assigned[j] = 1;
          orbit.push_back(j);
        }
      }
    }
    for (auto j : orbit) node.conjugates.push_back(subs[j]);
    nodes.push_back(std::move(node));
  }
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const ClassPoset::Node& a, const ClassPoset::Node& b) { return a.order < b.order; });
  return ClassPoset(std::move(nodes));
}

}  // namespace cgt::fin
