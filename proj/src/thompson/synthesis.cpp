#include "cgt/thompson/synthesis.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt::vn {

GenWord GenWord::parse(int n, std::string_view text) {
  GenWord w(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 2 || tok[0] != 'b' || tok[1] < '1' || tok[1] > '4')
      throw InvalidInput("unknown generator token '" + tok + "'");
    w.push(tok[1] - '0');
  }
  return w;
}

GenWord& GenWord::push(int which) {
  if (which < 1 || which > 4) throw InvalidInput("generator index must be 1..4");
  auto letter = static_cast<std::uint8_t>(which);
  if (!letters_.empty() && letters_.back() == letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
  return *this;
}

GenWord& GenWord::append(const GenWord& w) {
  if (w.n_ != n_) throw InvalidInput("arity mismatch in word concatenation");
  for (auto l : w.letters_) push(l);
  return *this;
}

GenWord GenWord::inverse() const {
  GenWord r(n_);
  r.letters_.assign(letters_.rbegin(), letters_.rend());
  return r;
}

GenWord GenWord::power(long long k) const {
  GenWord base = k < 0 ? inverse() : *this;
  GenWord r(n_);
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) r.append(base);
  return r;
}

std::string GenWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += 'b';
    s += static_cast<char>('0' + letters_[i]);
  }
  return s;
}

GenWord operator*(GenWord a, const GenWord& b) {
  a.append(b);
  return a;
}

GenWord conjugate(const GenWord& by, const GenWord& w) { return by * w * by.inverse(); }

VnElement evaluate(const GenWord& w) { return WordEvaluator(w.arity())(w); }

WordEvaluator::WordEvaluator(int n) : n_(n) {
  for (int i = 1; i <= 4; ++i) gens_.push_back(generator(n, i));
}

const VnElement& WordEvaluator::block_value(std::span<const std::uint8_t> letters) {
  // Two bits per letter plus a leading 1 so blocks of different lengths differ.
  std::uint32_t key = 1;
  for (auto l : letters) key = (key << 2) | static_cast<std::uint32_t>(l - 1);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  VnElement acc = VnElement::identity(n_);
  for (auto l : letters) acc = compose(acc, gens_[l - 1]);
  return cache_.emplace(key, std::move(acc)).first->second;
}

VnElement WordEvaluator::operator()(const GenWord& w) {
  if (w.arity() != n_) throw InvalidInput("arity mismatch in word evaluation");
  auto letters = w.letters();
  VnElement acc = VnElement::identity(n_);
  for (std::size_t pos = 0; pos < letters.size(); pos += kBlock)
    acc = compose(acc, block_value(letters.subspan(pos, std::min(kBlock, letters.size() - pos))));
  return acc;
}

namespace {

long long ipow(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

std::vector<int> identity_perm(long long size) {
  std::vector<int> p(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  return p;
}

GenWord single(int n, int which) {
  GenWord w(n);
  w.push(which);
  return w;
}

// s_t: transposition of depth-2 leaves t and t+1, as b3 conjugated by a power
// of the n^2-cycle sigma = b1 b2 (sigma sends leaf i to i+1).
GenWord adjacent_transposition(int n, int t) {
  const int big = n * n;
  GenWord sigma(n);
  sigma.push(1).push(2);
  GenWord b3 = single(n, 3);
  if (t <= big / 2) return sigma.power(-t) * b3 * sigma.power(t);
  return sigma.power(big - t) * b3 * sigma.power(-(big - t));
}

GenWord depth2_word(int n, std::span<const int> perm) {
  // Point i must end at position perm[i]; the arrangement reached is perm^-1.
  // Bubble-sort that arrangement back to the identity and replay the swaps in
  // reverse.
  std::vector<int> arrangement(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) arrangement[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  std::vector<int> swaps;
  for (std::size_t pass = 0; pass < arrangement.size(); ++pass) {
    bool moved = false;
    for (std::size_t t = 0; t + 1 < arrangement.size(); ++t) {
      if (arrangement[t] > arrangement[t + 1]) {
        std::swap(arrangement[t], arrangement[t + 1]);
        swaps.push_back(static_cast<int>(t));
        moved = true;
      }
    }
    if (!moved) break;
  }
  GenWord w(n);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) w.append(adjacent_transposition(n, *it));
  return w;
}

// Apply a depth-d leaf permutation to an address of length >= d.
Address apply_prefix_perm(int n, int depth, std::span<const int> perm, const Address& a) {
  long long idx = a.prefix(static_cast<std::size_t>(depth)).to_index(n);
  return Address::from_index(perm[static_cast<std::size_t>(idx)], n, depth)
      .concat(a.suffix_from(static_cast<std::size_t>(depth)));
}

std::vector<int> compose_perms(std::span<const int> first, std::span<const int> second) {
  std::vector<int> r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[static_cast<std::size_t>(first[i])];
  return r;
}

// A depth-d permutation sending src1 -> dst1 and src2 -> dst2, built from at
// most two transpositions.
std::vector<int> moving_perm(int n, int depth, const Address& src1, const Address& dst1, const Address& src2,
                             const Address& dst2) {
  auto t1 = transposition_perm(n, depth, src1, dst1);
  Address mid = apply_prefix_perm(n, depth, t1, src2);
  auto t2 = transposition_perm(n, depth, mid, dst2);
  return compose_perms(t1, t2);
}

void check_limits(const GenWord& w, const SynthesisLimits& lim) {
  if (w.size() > lim.max_letters)
    throw BudgetExceeded("synthesised word exceeds " + std::to_string(lim.max_letters) + " letters");
}

}  // namespace

std::vector<int> transposition_perm(int n, int depth, const Address& a, const Address& b) {
  if (a.length() != static_cast<std::size_t>(depth) || b.length() != static_cast<std::size_t>(depth))
    throw InvalidInput("transposition leaves must both have length " + std::to_string(depth));
  auto p = identity_perm(ipow(n, depth));
  auto ia = static_cast<std::size_t>(a.to_index(n));
  auto ib = static_cast<std::size_t>(b.to_index(n));
  std::swap(p[ia], p[ib]);
  return p;
}

GenWord sym_word(int n, int depth, std::span<const int> perm, const SynthesisLimits& lim) {
  if (n < 3) throw InvalidInput("word synthesis needs n >= 3");
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  if (depth > lim.max_depth)
    throw BudgetExceeded("depth " + std::to_string(depth) + " exceeds the synthesis bound " +
                         std::to_string(lim.max_depth));
  if (static_cast<long long>(perm.size()) != ipow(n, depth))
    throw InvalidInput("permutation size does not match n^depth");
  {
    std::vector<int> sorted(perm.begin(), perm.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw InvalidInput("not a permutation of the leaves");
  }
  if (depth == 0) return GenWord(n);
  if (depth == 1) {
    // b'(ij) = b(i) j represents the same element one level down.
    std::vector<int> lifted(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lifted[static_cast<std::size_t>(i * n + j)] = perm[static_cast<std::size_t>(i)] * n + j;
    return depth2_word(n, lifted);
  }
  if (depth == 2) return depth2_word(n, perm);

  // (c0 c1 ... c_{l-1}) = (c0 c1)(c0 c2)...(c0 c_{l-1}) with the left factor
  // acting first.
  GenWord w(n);
  std::vector<char> done(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    Address head = Address::from_index(static_cast<long long>(start), n, depth);
    done[start] = 1;
    for (auto cur = static_cast<std::size_t>(perm[start]); cur != start; cur = static_cast<std::size_t>(perm[cur])) {
      done[cur] = 1;
      w.append(sym_transposition_word(n, depth, head, Address::from_index(static_cast<long long>(cur), n, depth), lim));
      check_limits(w, lim);
    }
  }
  return w;
}

GenWord pull_up_word(int n) {
  // b4, then the level-1 swap of 0 and 1, then the swap of 10 and 11.
  GenWord w = single(n, 4);
  w.append(sym_word(n, 1, transposition_perm(n, 1, Address::parse("0", n), Address::parse("1", n))));
  w.append(sym_word(n, 2, transposition_perm(n, 2, Address::parse("10", n), Address::parse("11", n))));
  return w;
}

GenWord pull_up2_word(int n) {
  // c b4 c (c swaps 1 and 2) is the swap of 00 and 2; then follow the b_up
  // pattern with 2 in the role of 1.
  GenWord c = sym_word(n, 1, transposition_perm(n, 1, Address::parse("1", n), Address::parse("2", n)));
  GenWord w = c * single(n, 4) * c;
  w.append(sym_word(n, 1, transposition_perm(n, 1, Address::parse("0", n), Address::parse("2", n))));
  w.append(sym_word(n, 2, transposition_perm(n, 2, Address::parse("20", n), Address::parse("22", n))));
  return w;
}

GenWord d_word(int n, int m) {
  if (m < 1) throw InvalidInput("d_m needs m >= 1");
  if (m == 1) return sym_word(n, 1, transposition_perm(n, 1, Address::parse("0", n), Address::parse("1", n)));
  if (m == 2) return single(n, 4);
  return conjugate(pull_up2_word(n).power(m - 2), single(n, 4));
}

GenWord d_word(int n, int m, int p) {
  if (m < 1 || p < 0) throw InvalidInput("d_{m,p} needs m >= 1 and p >= 0");
  if (p == 0) return d_word(n, m);
  // b_up^p sends 0^(p+m) to 0^m and 0^p 1 to 10 (not to 1), so conjugate the
  // swap of 0^m and 10. That swap is b_upup^(m-1) (s b4 s) b_upup^-(m-1) with
  // s the level-1 swap of 0 and 1: b_upup fixes the cone at 1.
  GenWord s = sym_word(n, 1, transposition_perm(n, 1, Address::parse("0", n), Address::parse("1", n)));
  GenWord swap_0m_10 = conjugate(pull_up2_word(n).power(m - 1), s * single(n, 4) * s);
  return conjugate(pull_up_word(n).power(p), swap_0m_10);
}

GenWord literal_d_conjugate_word(int n, int m, int p) {
  return conjugate(pull_up_word(n).power(p), d_word(n, m));
}

GenWord sym_transposition_word(int n, int depth, const Address& a, const Address& b, const SynthesisLimits& lim) {
  if (a == b) throw InvalidInput("transposition of a leaf with itself");
  auto perm = transposition_perm(n, depth, a, b);
  if (depth <= 2) return sym_word(n, depth, perm, lim);
  if (depth > lim.max_depth)
    throw BudgetExceeded("depth " + std::to_string(depth) + " exceeds the synthesis bound " +
                         std::to_string(lim.max_depth));

  const int k = depth;
  const auto km1 = static_cast<std::size_t>(k - 1);
  const VnElement up = pull_up(n);
  const GenWord up_word = pull_up_word(n);
  const Address ap = a.parent(), bp = b.parent();

  auto push_through = [&](std::span<const int> c, const Address& x) {
    Address y = apply_prefix_perm(n, k - 1, c, x);
    auto z = up.apply(y);
    if (!z) throw std::logic_error("pull-up undefined on " + y.to_string());
    return *z;
  };

  GenWord conj(n);
  Address fa, fb;
  if (ap == bp || k >= 4) {
    // Move the parents (or the common parent) under 0^(k-1) / 0^(k-2)1 so that
    // b_up lifts both leaves one level up.
    std::vector<int> c;
    if (ap == bp)
      c = transposition_perm(n, k - 1, Address::repeat(0, km1), ap);
    else
      c = moving_perm(n, k - 1, ap, Address::repeat(0, km1), bp, Address::repeat(0, km1 - 1).child(1));
    fa = push_through(c, a);
    fb = push_through(c, b);
    conj = sym_word(n, k - 1, c, lim) * up_word;
  } else {
    // Depth 3 with different parents: one b_up pass leaves 01j at depth 3
    // (01 -> 10), so a second depth-2 shuffle and b_up pass is needed.
    auto c = moving_perm(n, 2, ap, Address::parse("00", n), bp, Address::parse("01", n));
    Address ya = push_through(c, a);  // 0i
    Address yb = push_through(c, b);  // 10j
    auto c2 = moving_perm(n, 2, yb.prefix(2), Address::parse("00", n), ya.prefix(2), Address::parse("01", n));
    fa = push_through(c2, ya);
    fb = push_through(c2, yb);
    conj = sym_word(n, 2, c, lim) * up_word * sym_word(n, 2, c2, lim) * up_word;
  }
  if (fa.length() != km1 || fb.length() != km1)
    throw std::logic_error("pull-up did not land both leaves at depth " + std::to_string(k - 1));
  GenWord inner = sym_word(n, k - 1, transposition_perm(n, k - 1, fa, fb), lim);
  GenWord w = conjugate(conj, inner);
  check_limits(w, lim);
  return w;
}

GenWord transposition_word(int n, const Address& a_in, const Address& b_in, const SynthesisLimits& lim) {
  if (n < 3) throw InvalidInput("word synthesis needs n >= 3");
  if (!a_in.incomparable_with(b_in))
    throw InvalidInput("transposition needs incomparable addresses, got " + a_in.to_string() + " and " +
                       b_in.to_string());
  const Address& a = a_in.length() >= b_in.length() ? a_in : b_in;
  const Address& b = a_in.length() >= b_in.length() ? b_in : a_in;
  const int la = static_cast<int>(a.length()), lb = static_cast<int>(b.length());
  if (la > lim.max_depth)
    throw BudgetExceeded("address length " + std::to_string(la) + " exceeds the synthesis bound");

  const Address target_b = Address::repeat(0, static_cast<std::size_t>(lb - 1)).child(1);
  auto c1 = transposition_perm(n, lb, target_b, b);
  if (b == target_b) c1 = identity_perm(ipow(n, lb));
  Address a1 = apply_prefix_perm(n, lb, c1, a);
  const Address target_a = Address::repeat(0, static_cast<std::size_t>(la));
  auto c2 = a1 == target_a ? identity_perm(ipow(n, la)) : transposition_perm(n, la, target_a, a1);

  GenWord outer = sym_word(n, lb, c1, lim) * sym_word(n, la, c2, lim);
  GenWord w = conjugate(outer, d_word(n, la - lb + 1, lb - 1));
  check_limits(w, lim);
  return w;
}

GenWord involution_word(const VnElement& x, const SynthesisLimits& lim) {
  VnElement c = canonicalize(x);
  if (!compose(c, c).is_identity()) throw InvalidInput("element is not an involution");
  GenWord w(x.arity());
  auto dom = c.domain();
  auto img = c.images();
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i] < img[i]) w.append(transposition_word(x.arity(), dom[i], img[i], lim));
  check_limits(w, lim);
  return w;
}

}  // namespace cgt::vn
