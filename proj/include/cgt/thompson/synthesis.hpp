#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cgt/thompson/vn_element.hpp"

namespace cgt::vn {

/// A word over the involutions b1..b4 of V_n, read left to right (the first
/// letter acts first). Appending freely cancels adjacent equal letters, so
/// the stored word never contains "bi bi".
class GenWord {
 public:
  explicit GenWord(int n) : n_(n) {}
  static GenWord parse(int n, std::string_view text);  // "b1 b2 b3"

  int arity() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const std::uint8_t> letters() const { return letters_; }

  GenWord& push(int which);
  GenWord& append(const GenWord& w);
  GenWord inverse() const;  // reversed, since every letter is an involution
  GenWord power(long long k) const;

  std::string to_string() const;
  bool operator==(const GenWord&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> letters_;
};

GenWord operator*(GenWord a, const GenWord& b);
/// w1 w2 w1^-1.
GenWord conjugate(const GenWord& by, const GenWord& w);

VnElement evaluate(const GenWord& w);

/// Evaluates many words of one arity, caching the values of fixed-length
/// letter blocks. Synthesised words repeat blocks heavily (powers of b1 b2),
/// so this is several times faster than letter-by-letter composition.
class WordEvaluator {
 public:
  explicit WordEvaluator(int n);
  VnElement operator()(const GenWord& w);
  std::size_t cached_blocks() const { return cache_.size(); }

 private:
  static constexpr std::size_t kBlock = 12;
  const VnElement& block_value(std::span<const std::uint8_t> letters);

  int n_;
  std::vector<VnElement> gens_;
  std::unordered_map<std::uint32_t, VnElement> cache_;
};

/// Bounds on synthesis. Depth is the deepest complete tree whose symmetric
/// group is factored; word length grows quickly with it.
struct SynthesisLimits {
  int max_depth = 4;
  std::size_t max_letters = 20'000'000;
};

/// Word for the element of Sym(Lea(tau_depth)) sending leaf i to perm[i]
/// (lexicographic leaf indices). Depth <= 2 uses bubble-sort factorisation
/// over adjacent transpositions conjugated by powers of the n^2-cycle b1 b2;
/// deeper levels use the pull-up conjugation induction.
GenWord sym_word(int n, int depth, std::span<const int> perm, const SynthesisLimits& lim = {});
/// Word for the transposition of two depth-`depth` leaves.
GenWord sym_transposition_word(int n, int depth, const Address& a, const Address& b,
                               const SynthesisLimits& lim = {});

GenWord pull_up_word(int n);
GenWord pull_up2_word(int n);
GenWord d_word(int n, int m);
GenWord d_word(int n, int m, int p);
/// The conjugate (b_up)^p d_m (b_up)^-p exactly as written in the
/// generation argument. It does not equal d_{m,p} for p >= 1; kept so the
/// discrepancy stays testable.
GenWord literal_d_conjugate_word(int n, int m, int p);

/// Word for transposition_element(n, a, b), assembled as
/// c1 c2 d_{m,p} c2^-1 c1^-1.
GenWord transposition_word(int n, const Address& a, const Address& b, const SynthesisLimits& lim = {});
/// Word for a canonical involution, as a product of commuting leaf
/// transpositions. Throws InvalidInput when x is not an involution.
GenWord involution_word(const VnElement& x, const SynthesisLimits& lim = {});

/// Leaf-index permutation of a transposition of depth-k leaves.
std::vector<int> transposition_perm(int n, int depth, const Address& a, const Address& b);

}  // namespace cgt::vn
