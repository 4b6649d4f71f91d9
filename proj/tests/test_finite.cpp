#include <algorithm>
#include <map>
#include <set>

#include "cgt/error.hpp"
#include "cgt/finite/coset.hpp"
#include "cgt/finite/isomorphism.hpp"
#include "cgt/finite/subgroups.hpp"
#include "doctest.h"

using namespace cgt::fin;

namespace {

PermGroup group(int degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> g;
  for (const char* s : gens) g.push_back(Perm::parse(s, degree));
  return PermGroup(degree, std::move(g));
}

PermGroup s3() { return group(3, {"(1,2)", "(1,2,3)"}); }
PermGroup d4() { return group(4, {"(1,2,3,4)", "(1,3)"}); }
PermGroup q8() {
  // Regular representation of the quaternion group on 8 points.
  return group(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"});
}

// Oracle: subgroups of a small group by testing every subset for closure.
std::vector<std::set<int>> subgroups_by_subsets(const PermGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::set<int>> out;
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
    }
    if (!closed) continue;
    std::set<int> s;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) s.insert(a);
    out.push_back(s);
  }
  return out;
}

GroupPresentation coxeter_b3() {
  GroupPresentation p;
  p.generators = {"a", "b", "c"};
  for (const char* r : {"a^2", "b^2", "c^2", "(a b)^4", "(b c)^3", "(a c)^2"}) p.relators.push_back(p.parse_word(r));
  return p;
}

}  // namespace

TEST_CASE("permutations") {
  Perm p = Perm::parse("(1,2,3)");
  Perm q = Perm::parse("[2,1,3]");
  CHECK(p.one_line() == std::vector<int>{2, 3, 1});
  CHECK((p * q)[0] == q[p[0]]);
  CHECK(p.order() == 3);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(3).is_identity());
  CHECK(Perm::parse("(1 2)(3 4)").to_cycle_string() == "(1,2)(3,4)");
  CHECK_THROWS_AS(Perm::parse("[1,1]"), cgt::InvalidInput);
  CHECK_THROWS_AS(Perm::parse("(1,2)(2,3)"), cgt::InvalidInput);
}

TEST_CASE("enumeration") {
  CHECK(PermGroup(3, {}).order() == 1);
  CHECK(s3().order() == 6);
  CHECK(group(4, {"(1,2)", "(3,4)"}).order() == 4);
  PermGroup g = d4();
  CHECK(g.order() == 8);
  CHECK(24 % g.order() == 0);
  for (const auto& x : g.elements())
    for (const auto& s : g.generators()) {
      CHECK(g.contains(x * s));
      CHECK(g.contains(x * s.inverse()));
    }
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    Perm w = Perm::identity(4);
    for (int t : g.word_of(i)) w = w * g.generators()[static_cast<std::size_t>(t)];
    CHECK(w == g.element(i));
  }
  CHECK_THROWS_AS(PermGroup(6, {Perm::parse("(1,2)", 6), Perm::parse("(1,2,3,4,5,6)")}, 100), cgt::BudgetExceeded);
  CHECK(symmetric_group(5).order() == 120);
}

TEST_CASE("subgroups match brute force") {
  for (const PermGroup& g : {s3(), d4(), q8(), group(4, {"(1,2)", "(3,4)"})}) {
    auto fast = all_subgroups(g);
    auto slow = subgroups_by_subsets(g);
    REQUIRE(fast.size() == slow.size());
    std::set<std::set<int>> fs;
    for (const auto& b : fast) {
      auto m = members(b);
      fs.insert(std::set<int>(m.begin(), m.end()));
    }
    CHECK(fs == std::set<std::set<int>>(slow.begin(), slow.end()));
  }
}

TEST_CASE("subgroup classes") {
  CHECK(subgroup_classes(group(2, {"(1,2)"})).size() == 2);
  ClassPoset ps3 = subgroup_classes(s3());
  REQUIRE(ps3.size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& n : ps3.nodes()) orders.push_back(n.order);
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(ps3.leq(0, 1));
  CHECK(ps3.leq(1, 3));
  CHECK_FALSE(ps3.leq(1, 2));
  CHECK(ps3.is_partial_order());

  PermGroup g = d4();
  ClassPoset pd4 = subgroup_classes(g);
  CHECK(pd4.size() == 8);
  CHECK(pd4.is_partial_order());
  // Brute-force class count from the subset oracle.
  auto subs = subgroups_by_subsets(g);
  std::set<std::set<int>> reps;
  for (const auto& s : subs) {
    std::set<int> best = s;
    for (int x = 0; x < 8; ++x) {
      std::set<int> c;
      for (int a : s) c.insert(g.conj(a, x));
      best = std::min(best, c);
    }
    reps.insert(best);
  }
  CHECK(reps.size() == pd4.size());
  CHECK(subgroup_classes(q8()).size() == 6);
}

TEST_CASE("conjugacy of subgroups") {
  PermGroup g = d4();
  int s = g.index_of(Perm::parse("(1,3)", 4));
  int t = g.index_of(Perm::parse("(1,2)(3,4)", 4));
  int r = g.index_of(Perm::parse("(1,2,3,4)", 4));
  Bits a = generated_subgroup(g, std::vector<int>{s});
  Bits b = generated_subgroup(g, std::vector<int>{t});
  Bits c4 = generated_subgroup(g, std::vector<int>{r});
  CHECK(conjugate_subgroups(g, a, a));
  CHECK_FALSE(conjugate_subgroups(g, a, b));
  CHECK_FALSE(conjugate_subgroups(g, a, c4));
  int s2 = g.index_of(Perm::parse("(2,4)", 4));
  CHECK(conjugate_subgroups(g, a, generated_subgroup(g, std::vector<int>{s2})));
}

TEST_CASE("meet and join") {
  ClassPoset p = subgroup_classes(d4());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p.meet(i, i) == i);
    CHECK(p.join(i, i) == i);
  }
  // Synthetic poset with two maximal elements: no join.
  ClassPoset::Node bottom, left, right;
  bottom.rep = Bits{0b001};
  bottom.order = 1;
  left.rep = Bits{0b011};
  left.order = 2;
  right.rep = Bits{0b101};
  right.order = 2;
  for (auto* n : {&bottom, &left, &right}) n->conjugates = {n->rep};
  ClassPoset syn({bottom, left, right});
  CHECK_FALSE(syn.join(1, 2).has_value());
  CHECK(syn.meet(1, 2) == 0u);
}

TEST_CASE("signatures separate small groups") {
  PermGroup c4 = group(4, {"(1,2,3,4)"});
  PermGroup v4 = group(4, {"(1,2)", "(3,4)"});
  CHECK(iso_signature(c4) != iso_signature(v4));
  CHECK(iso_signature(d4()) != iso_signature(q8()));
  CHECK(iso_signature(q8()).element_orders.at(4) == 6);
  PermGroup c6 = group(5, {"(1,2)(3,4,5)"});
  CHECK(iso_signature(s3()) != iso_signature(c6));
  CHECK(abelian_invariants(c6) == std::vector<long long>{2, 3});
  CHECK(abelian_invariants(s3()) == std::vector<long long>{2});
  CHECK(abelian_invariants(group(8, {"(1,2,3,4)", "(5,6)", "(7,8)"})) == std::vector<long long>{2, 2, 4});
  CHECK(iso_signature(symmetric_group(4)).derived_series == std::vector<std::size_t>{24, 12, 4, 1});
}

TEST_CASE("isomorphism search") {
  PermGroup s3b = group(6, {"(1,2)(3,4)(5,6)", "(1,3,5)(2,6,4)"});
  CHECK(are_isomorphic(s3(), group(6, {"(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)"})) == false);
  CHECK(are_isomorphic(s3(), s3b) == true);
  CHECK(find_isomorphism(s3(), s3b).has_value());
  CHECK(are_isomorphic(d4(), q8()) == false);
  PermGroup d4b = group(8, {"(1,2,3,4)(5,6,7,8)", "(1,5)(2,8)(3,7)(4,6)"});
  CHECK(are_isomorphic(d4(), d4b) == true);
  CHECK_FALSE(find_isomorphism(d4(), q8()).has_value());
}

TEST_CASE("coset enumeration") {
  GroupPresentation c2;
  c2.generators = {"v"};
  c2.relators = {c2.parse_word("v^2")};
  CHECK(coset_enumerate(c2, {}).index() == 2);
  CHECK(coset_enumerate(coxeter_b3(), {}).index() == 48);

  GroupPresentation a3;
  a3.generators = {"a", "b", "c"};
  for (const char* r : {"a^2", "b^2", "c^2", "(a b)^3", "(b c)^3", "(a c)^2"}) a3.relators.push_back(a3.parse_word(r));
  CHECK(coset_enumerate(a3, {}).index() == 24);
  CHECK(coset_enumerate(a3, {a3.parse_word("a"), a3.parse_word("b")}).index() == 4);

  GroupPresentation dinf;
  dinf.generators = {"a", "b"};
  dinf.relators = {dinf.parse_word("a^2"), dinf.parse_word("b^2")};
  CHECK(coset_enumerate(dinf, {dinf.parse_word("a b")}).index() == 2);
  CosetOptions small;
  small.max_rows = 50;
  CHECK_THROWS_AS(coset_enumerate(dinf, {}, small), cgt::BudgetExceeded);

  auto t = coset_enumerate(c2, {});
  CHECK(t.to_csv(c2.generators) == "coset,v,v^-1\n0,1,1\n1,0,0\n");
}

TEST_CASE("words and presentations") {
  GroupPresentation p;
  p.generators = {"a", "b"};
  FreeWord w = p.parse_word("a b b^-1 a^2 (a b)^2");
  CHECK(p.format_word(w) == "a^4 b a b");
  CHECK(p.format_word(reduce_powers(p.parse_word("a^5 b"), {2, 0})) == "a b");
  CHECK(p.format_word(reduce_powers(p.parse_word("a^-1"), {3, 0})) == "a^-1");
  CHECK(p.format_word(reduce_powers(p.parse_word("a^2"), {3, 0})) == "a^-1");
  CHECK_THROWS_AS(p.parse_word("c"), cgt::InvalidInput);
  CHECK_THROWS_AS(p.parse_word("(a"), cgt::InvalidInput);

  for (const PermGroup& g : {s3(), d4(), q8(), symmetric_group(4)}) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.generators().size(); ++i) names.push_back("x" + std::to_string(i));
    GroupPresentation pres = presentation_of(g, names);
    CHECK(coset_enumerate(pres, {}).index() == g.order());
    for (const auto& r : pres.relators) CHECK(evaluate_word(g.generators(), r, g.degree()).is_identity());
  }
}

TEST_CASE("kernel generators") {
  GroupPresentation c2;
  c2.generators = {"v"};
  c2.relators = {c2.parse_word("v^2")};
  CHECK(kernel_generators(c2, {Perm::parse("(1,2)")}, 2).empty());

  GroupPresentation dinf;
  dinf.generators = {"a", "b"};
  dinf.relators = {dinf.parse_word("a^2"), dinf.parse_word("b^2")};
  std::vector<Perm> to_v4{Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4)};
  auto k = kernel_generators(dinf, to_v4, 4);
  REQUIRE_FALSE(k.empty());
  for (const auto& w : k) CHECK(evaluate_word(to_v4, w, 4).is_identity());
  CHECK(coset_enumerate(dinf, k).index() == 4);
  // Every generator is a conjugate of (ab)^2 or its inverse.
  for (const auto& w : k) {
    std::string s = dinf.format_word(cyclic_reduce(w));
    CHECK((s == "a b a b" || s == "b a b a"));
  }

  std::vector<Perm> to_c2{Perm::parse("(1,2)"), Perm::parse("(1,2)")};
  auto k2 = kernel_generators(dinf, to_c2, 2);
  bool has_ab = false;
  for (const auto& w : k2) {
    std::string s = dinf.format_word(w);
    has_ab = has_ab || s == "a b" || s == "b a";
  }
  CHECK(has_ab);
  CHECK(coset_enumerate(dinf, k2).index() == 2);

  CHECK_THROWS_AS(kernel_generators(dinf, {Perm::parse("(1,2,3)"), Perm::parse("(1,2)")}, 3), cgt::InvalidInput);
}
