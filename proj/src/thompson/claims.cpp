#include "cgt/thompson/claims.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cgt/thompson/synthesis.hpp"

namespace cgt::vn {

namespace {

std::vector<Address> addresses_of_length(int n, int len) {
  long long count = 1;
  for (int i = 0; i < len; ++i) count *= n;
  std::vector<Address> out;
  for (long long i = 0; i < count; ++i) out.push_back(Address::from_index(i, n, len));
  return out;
}

ClaimCheck claim(std::string name, std::string statement) {
  ClaimCheck c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  return c;
}

void record(ClaimCheck& c, bool ok, const std::string& what) {
  ++c.cases;
  if (!ok && c.failures++ == 0) c.first_failure = what;
}

}  // namespace

std::vector<ClaimCheck> check_generation_claims(int n, const ClaimBounds& bounds) {
  WordEvaluator eval(n);
  std::mt19937_64 rng(bounds.seed);
  std::vector<ClaimCheck> out;

  auto sym_check = [&](ClaimCheck& c, int depth) {
    auto leaves = addresses_of_length(n, depth);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        auto perm = transposition_perm(n, depth, leaves[i], leaves[j]);
        bool ok = equals(eval(sym_word(n, depth, perm)), VnElement::on_complete_tree(n, depth, perm));
        record(c, ok, "depth " + std::to_string(depth) + " swap " + leaves[i].to_string() + " " + leaves[j].to_string());
      }
    }
    for (int r = 0; r < bounds.random_perms; ++r) {
      std::vector<int> perm(leaves.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      bool ok = equals(eval(sym_word(n, depth, perm)), VnElement::on_complete_tree(n, depth, perm));
      record(c, ok, "depth " + std::to_string(depth) + " random permutation #" + std::to_string(r));
    }
  };

  ClaimCheck base = claim("sym-depth-le-2", "Sym(Lea(tau_k)) lies in <b1,b2,b3,b4> for k <= 2");
  for (int k = 0; k <= std::min(2, bounds.max_depth); ++k) sym_check(base, k);
  out.push_back(base);

  ClaimCheck up = claim("pull-up", "b4, level-1 swap(0,1), swap(10,11) composes to b_up");
  record(up, equals(eval(pull_up_word(n)), pull_up(n)), "pull_up_word");
  out.push_back(up);

  ClaimCheck deep = claim("sym-induction", "Sym(Lea(tau_k)) lies in <b1,b2,b3,b4> for 3 <= k");
  for (int k = 3; k <= bounds.max_depth; ++k) sym_check(deep, k);
  out.push_back(deep);

  ClaimCheck up2 = claim("pull-up-2", "c b4 c, level-1 swap(0,2), swap(20,22) composes to b_upup");
  record(up2, equals(eval(pull_up2_word(n)), pull_up2(n)), "pull_up2_word");
  out.push_back(up2);

  ClaimCheck dm = claim("d_m", "d_m swaps 0^m and 1");
  for (int m = 1; m <= bounds.max_m; ++m)
    record(dm, equals(eval(d_word(n, m)), d_element(n, m, 0)), "m=" + std::to_string(m));
  out.push_back(dm);

  ClaimCheck dmp = claim("d_{m,p}", "d_{m,p} swaps 0^(p+m) and 0^p 1");
  ClaimCheck literal = claim("literal-conjugate-differs", "(b_up)^p d_m (b_up)^-p differs from d_{m,p} for p >= 1");
  for (int m = 1; m <= bounds.max_m; ++m) {
    for (int p = 0; p <= bounds.max_p; ++p) {
      std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      record(dmp, equals(eval(d_word(n, m, p)), d_element(n, m, p)), tag);
      if (p >= 1) record(literal, !equals(eval(literal_d_conjugate_word(n, m, p)), d_element(n, m, p)), tag);
    }
  }
  out.push_back(dmp);

  ClaimCheck tr = claim("transpositions", "every transposition of incomparable addresses is a word in b1..b4");
  std::vector<Address> all;
  for (int len = 1; len <= bounds.max_address; ++len) {
    auto a = addresses_of_length(n, len);
    all.insert(all.end(), a.begin(), a.end());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!all[i].incomparable_with(all[j])) continue;
      bool ok = equals(eval(transposition_word(n, all[i], all[j])), transposition_element(n, all[i], all[j]));
      record(tr, ok, all[i].to_string() + " " + all[j].to_string());
    }
  }
  out.push_back(tr);
  out.push_back(literal);
  return out;
}

}  // namespace cgt::vn
