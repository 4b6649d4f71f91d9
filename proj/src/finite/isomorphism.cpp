#include "cgt/finite/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt::fin {

Bits normal_closure(const PermGroup& g, std::vector<int> elems) {
  Bits n = generated_subgroup(g, elems);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      int y = g.conj(elems[i], g.generator_index(k));
      if (!test_bit(n, y)) {
        elems.push_back(y);
        n = generated_subgroup(g, elems);
      }
    }
  }
  return n;
}

Bits derived_subgroup(const PermGroup& g, const Bits& h) {
  // [H,H] is the normal closure in H of the commutators of generators of H.
  auto gens = generating_set(g, h);
  std::vector<int> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      int a = gens[i], b = gens[j];
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  Bits n = generated_subgroup(g, comms);
  for (std::size_t i = 0; i < comms.size(); ++i) {
    for (int x : gens) {
      int y = g.conj(comms[i], x);
      if (!test_bit(n, y)) {
        comms.push_back(y);
        n = generated_subgroup(g, comms);
      }
    }
  }
  return n;
}

std::vector<long long> abelian_invariants(const PermGroup& g) {
  const Bits d = derived_subgroup(g, whole_group(g));
  const std::vector<int> d_members = members(d);
  const std::size_t n = g.order();
  std::vector<int> reps;
  std::vector<char> covered(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    reps.push_back(static_cast<int>(x));
    for (int m : d_members) covered[static_cast<std::size_t>(g.mul(m, static_cast<int>(x)))] = 1;
  }
  const long long a_order = static_cast<long long>(reps.size());
  // Order of each coset in G/G'.
  std::vector<long long> ord;
  for (int r : reps) {
    long long k = 1;
    for (int x = r; !test_bit(d, x); x = g.mul(x, r)) ++k;
    ord.push_back(k);
  }
  std::vector<long long> out;
  long long rest = a_order;
  for (long long p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    long long pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    // s[k] = log_p #{x : x^(p^k) = 1} in the p-part; r_k = s_k - s_{k-1}
    // counts cyclic factors of exponent >= k.
    std::vector<int> s{0};
    for (long long q = p;; q *= p) {
      long long c = 0;
      for (long long o : ord)
        if (q % o == 0) ++c;
      int e = 0;
      for (long long t = c; t > 1; t /= p) ++e;
      s.push_back(e);
      if (c == pk) break;
    }
    std::vector<int> r;
    for (std::size_t k = 1; k < s.size(); ++k) r.push_back(s[k] - s[k - 1]);
    r.push_back(0);
    long long pe = 1;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      pe *= p;
      for (int t = 0; t < r[k] - r[k + 1]; ++t) out.push_back(pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> conjugacy_classes(const PermGroup& g, int* class_count) {
  const std::size_t n = g.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> orbit{static_cast<int>(x)};
    cls[x] = next;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        int y = g.conj(orbit[i], g.generator_index(k));
        if (cls[static_cast<std::size_t>(y)] < 0) {
          cls[static_cast<std::size_t>(y)] = next;
          orbit.push_back(y);
        }
      }
    }
    ++next;
  }
  if (class_count) *class_count = next;
  return cls;
}

IsoSignature iso_signature(const PermGroup& g, const SignatureOptions& opts) {
  IsoSignature s;
  s.order = g.order();
  s.abelian_invariants = abelian_invariants(g);
  for (std::size_t x = 0; x < g.order(); ++x) ++s.element_orders[g.element_order(static_cast<int>(x))];
  int count = 0;
  auto cls = conjugacy_classes(g, &count);
  s.class_sizes.assign(static_cast<std::size_t>(count), 0);
  for (int c : cls) ++s.class_sizes[static_cast<std::size_t>(c)];
  std::sort(s.class_sizes.begin(), s.class_sizes.end());
  Bits cur = whole_group(g);
  s.derived_series.push_back(count_bits(cur));
  for (;;) {
    Bits next = derived_subgroup(g, cur);
    if (next == cur) break;
    cur = std::move(next);
    s.derived_series.push_back(count_bits(cur));
  }
  if (g.order() <= opts.subgroup_order_cap) {
    try {
      for (const auto& h : all_subgroups(g, opts.subgroup_limit)) ++s.subgroup_orders[count_bits(h)];
      s.subgroups_counted = true;
    } catch (const BudgetExceeded&) {
      s.subgroup_orders.clear();
    }
  }
  return s;
}

std::string IsoSignature::to_string() const {
  std::ostringstream o;
  auto list = [&](const auto& v) {
    o << '[';
    bool first = true;
    for (const auto& x : v) {
      if (!first) o << ',';
      o << x;
      first = false;
    }
    o << ']';
  };
  auto dict = [&](const auto& m) {
    o << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
      if (!first) o << ',';
      o << k << ':' << v;
      first = false;
    }
    o << '}';
  };
  o << "order=" << order << ";ab=";
  list(abelian_invariants);
  o << ";orders=";
  dict(element_orders);
  o << ";classes=";
  list(class_sizes);
  o << ";subgroups=";
  if (subgroups_counted)
    dict(subgroup_orders);
  else
    o << '?';
  o << ";derived=";
  list(derived_series);
  return o.str();
}

std::optional<std::vector<int>> find_isomorphism(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  const std::size_t n = g.order();
  const std::vector<int> gens = generating_set(g, whole_group(g));
  auto cls_g = conjugacy_classes(g);
  auto cls_h = conjugacy_classes(h);
  std::vector<std::size_t> size_g(n, 0), size_h(n, 0);
  {
    std::vector<std::size_t> cg(n + 1, 0), ch(n + 1, 0);
    for (int c : cls_g) ++cg[static_cast<std::size_t>(c)];
    for (int c : cls_h) ++ch[static_cast<std::size_t>(c)];
    for (std::size_t x = 0; x < n; ++x) {
      size_g[x] = cg[static_cast<std::size_t>(cls_g[x])];
      size_h[x] = ch[static_cast<std::size_t>(cls_h[x])];
    }
  }
  std::vector<std::vector<int>> candidates;
  for (int x : gens) {
    std::vector<int> c;
    int ox = g.element_order(x);
    for (std::size_t y = 0; y < n; ++y)
      if (h.element_order(static_cast<int>(y)) == ox && size_h[y] == size_g[static_cast<std::size_t>(x)])
        c.push_back(static_cast<int>(y));
    if (c.empty()) return std::nullopt;
    candidates.push_back(std::move(c));
  }
  std::vector<int> images(gens.size());
  // The map on <gens[0..j]> defined by the chosen images, if it is a
  // well-defined injective homomorphism; its size otherwise 0.
  auto consistent = [&](std::size_t j) -> std::size_t {
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (std::size_t t = 0; t <= j; ++t) {
        int y = g.mul(x, gens[t]);
        int img = h.mul(map[static_cast<std::size_t>(x)], images[t]);
        int& my = map[static_cast<std::size_t>(y)];
        if (my == -1) {
          if (used[static_cast<std::size_t>(img)]) return 0;
          my = img;
          used[static_cast<std::size_t>(img)] = 1;
          queue.push_back(y);
        } else if (my != img) {
          return 0;
        }
      }
    }
    return queue.size();
  };
  std::function<bool(std::size_t)> search = [&](std::size_t j) -> bool {
    if (j == gens.size()) return true;
    for (int c : candidates[j]) {
      images[j] = c;
      std::size_t sz = consistent(j);
      if (sz == 0) continue;
      if (j + 1 == gens.size() && sz != n) continue;
      if (search(j + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) return std::vector<int>{};
  if (search(0)) return images;
  return std::nullopt;
}

std::optional<bool> are_isomorphic(const PermGroup& g, const PermGroup& h, const IsoOptions& opts) {
  if (g.order() != h.order()) return false;
  if (iso_signature(g, opts.signature) != iso_signature(h, opts.signature)) return false;
  if (g.is_abelian() && h.is_abelian()) return true;
  if (g.order() < opts.confirm_below) return find_isomorphism(g, h).has_value();
  return std::nullopt;
}

}  // namespace cgt::fin
