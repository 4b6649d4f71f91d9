#include <doctest.h>

#include <random>

#include "cgt/error.hpp"
#include "cgt/fibre/fibre.hpp"

using namespace cgt;
using namespace cgt::fib;
using fin::FreeWord;
using fin::GroupPresentation;
using fin::Perm;
using fin::PermGroup;

namespace {

GroupPresentation pres(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  GroupPresentation p;
  p.generators = std::move(gens);
  for (const auto& r : rels) p.relators.push_back(p.parse_word(r));
  return p;
}

GroupPresentation dinf() { return pres({"a", "b"}, {"a^2", "b^2"}); }

Factor dinf_onto_v4() { return {dinf(), {Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4)}}; }
std::vector<Perm> v4() { return {Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4)}; }

std::size_t count_kind(const std::vector<FibreGenerator>& g, TupleKind k) {
  return static_cast<std::size_t>(std::count_if(g.begin(), g.end(), [&](const auto& x) { return x.kind == k; }));
}

}  // namespace

TEST_CASE("infinite dihedral onto the Klein four group") {
  auto s = FibreSpec::power(dinf_onto_v4(), 2, 4, v4());
  auto gens = fibre_generators(s);
  REQUIRE(count_kind(gens, TupleKind::Diagonal) == 2);
  CHECK(gens[0].words == WordTuple{{1}, {1}});
  CHECK(gens[1].words == WordTuple{{2}, {2}});
  REQUIRE(count_kind(gens, TupleKind::Kernel) >= 2);
  for (const auto& g : gens) {
    if (g.kind != TupleKind::Kernel) continue;
    const auto& w = g.words[g.coordinate];
    CHECK(g.words[1 - g.coordinate].empty());
    std::string c = s.factors[0].presentation.format_word(fin::cyclic_reduce(w));
    CHECK((c == "a b a b" || c == "b a b a"));
  }
  auto rep = verify_fibre(s, gens);
  CHECK(rep.passed());
  CHECK(rep.expected_index == 4);
  REQUIRE(rep.index);
  CHECK(*rep.index == 4);

  auto s3 = FibreSpec::power(dinf_onto_v4(), 3, 4, v4());
  auto rep3 = verify_fibre(s3, fibre_generators(s3));
  CHECK(rep3.passed());
  CHECK(rep3.index == std::optional<std::size_t>(16));
}

TEST_CASE("identity on C2 gives the diagonal") {
  Factor c2{pres({"v"}, {"v^2"}), {Perm::parse("(1,2)")}};
  auto s = FibreSpec::power(c2, 2, 2, {Perm::parse("(1,2)")});
  auto gens = fibre_generators(s);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].words == WordTuple{{1}, {1}});
  auto rep = verify_fibre(s, gens);
  CHECK(rep.passed());
  CHECK(rep.index == std::optional<std::size_t>(2));
}

TEST_CASE("trivial target gives the whole product") {
  Factor f{dinf(), {Perm::identity(1), Perm::identity(1)}};
  auto s = FibreSpec::power(f, 2, 1, {});
  auto gens = fibre_generators(s);
  auto rep = verify_fibre(s, gens);
  CHECK(rep.passed());
  CHECK(rep.expected_index == 1);
  CHECK(rep.index == std::optional<std::size_t>(1));
}

TEST_CASE("index law on small cases") {
  // D_inf onto C2, d = 2 and 3.
  Factor to_c2{dinf(), {Perm::parse("(1,2)"), Perm::parse("(1,2)")}};
  for (std::size_t d : {2u, 3u}) {
    auto s = FibreSpec::power(to_c2, d, 2, {Perm::parse("(1,2)")});
    auto rep = verify_fibre(s, fibre_generators(s));
    CHECK(rep.passed());
    CHECK(rep.index == std::optional<std::size_t>(d == 2 ? 2 : 4));
  }
  // D_inf onto D4 (order 8).
  std::vector<Perm> d4{Perm::parse("(2,4)", 4), Perm::parse("(1,2)(3,4)", 4)};
  auto s = FibreSpec::power(Factor{dinf(), d4}, 2, 4, d4);
  auto rep = verify_fibre(s, fibre_generators(s));
  CHECK(rep.passed());
  CHECK(rep.index == std::optional<std::size_t>(8));
  // Right-angled Coxeter group on the path a - b - c onto C2 x C2.
  Factor racg{pres({"a", "b", "c"}, {"a^2", "b^2", "c^2", "a^-1 b^-1 a b", "b^-1 c^-1 b c"}),
              {Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4), Perm::parse("(1,2)", 4)}};
  auto sr = FibreSpec::power(racg, 2, 4, v4());
  auto rr = verify_fibre(sr, fibre_generators(sr));
  CHECK(rr.passed());
  CHECK(rr.index == std::optional<std::size_t>(4));
}

TEST_CASE("distinct factors use lifted words") {
  Factor f1 = dinf_onto_v4();
  Factor f2{pres({"x", "y"}, {"x^2", "y^2", "x^-1 y^-1 x y"}), {Perm::parse("(3,4)", 4), Perm::parse("(1,2)", 4)}};
  FibreSpec s{{f1, f2}, 4, v4()};
  auto gens = fibre_generators(s);
  CHECK(gens[0].words == WordTuple{{1}, {2}});
  CHECK(gens[1].words == WordTuple{{2}, {1}});
  auto rep = verify_fibre(s, gens);
  CHECK(rep.passed());
  CHECK(rep.index == std::optional<std::size_t>(4));
  CHECK(product_presentation(s).generators == std::vector<std::string>{"a_1", "b_1", "x_2", "y_2"});
}

TEST_CASE("dropping kernel generators is detected") {
  auto s = FibreSpec::power(dinf_onto_v4(), 2, 4, v4());
  auto gens = fibre_generators(s);
  std::vector<FibreGenerator> diag;
  for (const auto& g : gens)
    if (g.kind == TupleKind::Diagonal) diag.push_back(g);
  VerifyOptions o;
  o.max_rows = 20'000;
  auto rep = verify_fibre(s, diag, o);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.index);
  CHECK(rep.index_lower_bound > rep.expected_index);
  CHECK(rep.checks[2].status == CheckStatus::Fail);

  // The kernel in one coordinate already follows from the other coordinate
  // and the diagonal, so only removing it everywhere changes the subgroup.
  std::vector<FibreGenerator> one_side;
  for (const auto& g : gens)
    if (g.kind == TupleKind::Diagonal || g.coordinate == 1) one_side.push_back(g);
  CHECK(verify_fibre(s, one_side).passed());
}

TEST_CASE("a bad tuple fails the fibre condition") {
  auto s = FibreSpec::power(dinf_onto_v4(), 2, 4, v4());
  auto gens = fibre_generators(s);
  gens.push_back({WordTuple{{1}, {2}}, TupleKind::Diagonal, 0, 0});
  auto rep = verify_fibre(s, gens);
  CHECK(rep.checks[0].status == CheckStatus::Fail);
}

TEST_CASE("fibre membership of random products") {
  std::mt19937 rng(7);
  auto s = FibreSpec::power(dinf_onto_v4(), 3, 4, v4());
  auto gens = fibre_generators(s);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution inv(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    WordTuple t(3);
    for (int k = 0; k < 12; ++k) {
      const auto& g = gens[pick(rng)];
      bool flip = inv(rng);
      for (std::size_t i = 0; i < 3; ++i) {
        FreeWord w = flip ? fin::inverse_word(g.words[i]) : g.words[i];
        t[i].insert(t[i].end(), w.begin(), w.end());
      }
    }
    Perm first = fin::evaluate_word(s.factors[0].images, t[0], 4);
    for (std::size_t i = 1; i < 3; ++i) CHECK(fin::evaluate_word(s.factors[i].images, t[i], 4) == first);
  }
}

TEST_CASE("swapping identical factors preserves the subgroup") {
  auto s = FibreSpec::power(dinf_onto_v4(), 2, 4, v4());
  auto gens = fibre_generators(s);
  auto rep = verify_fibre(s, gens);
  REQUIRE(rep.table);
  for (const auto& g : gens) {
    WordTuple swapped{g.words[1], g.words[0]};
    CHECK(rep.table->trace(0, product_word(s, swapped)) == 0);
  }
}

TEST_CASE("invalid fibre specs") {
  Factor bad{dinf(), {Perm::parse("(1,2,3)"), Perm::parse("(1,2)")}};
  CHECK_THROWS_AS(FibreSpec::power(bad, 2, 3, {Perm::parse("(1,2,3)"), Perm::parse("(1,2)")}).validate(),
                  InvalidInput);
  Factor not_onto{dinf(), {Perm::parse("(1,2)", 4), Perm::parse("(1,2)", 4)}};
  CHECK_THROWS_AS(fibre_generators(FibreSpec::power(not_onto, 2, 4, v4())), InvalidInput);
  CHECK_THROWS_AS(fibre_generators(FibreSpec::power(dinf_onto_v4(), 1, 4, v4())), InvalidInput);
}

TEST_CASE("abelian invariants and Schur multipliers") {
  auto inv = [](int deg, std::vector<std::string> gs) {
    std::vector<Perm> ps;
    for (const auto& g : gs) ps.push_back(Perm::parse(g, deg));
    return abelian_invariants(PermGroup(deg, ps));
  };
  using V = std::vector<std::size_t>;
  CHECK(inv(2, {"(1,2)"}) == V{2});
  CHECK(inv(5, {"(1,2)", "(3,4,5)"}) == V{2, 3});
  CHECK(inv(6, {"(1,2)", "(3,4,5,6)"}) == V{2, 4});
  CHECK(inv(6, {"(1,2)", "(3,4)", "(5,6)"}) == V{2, 2, 2});
  CHECK(inv(1, {}).empty());
  CHECK_THROWS_AS(abelian_invariants(fin::symmetric_group(3)), InvalidInput);
  // M(C_a x C_b) = C_gcd(a,b); M(C2^3) = C2^3.
  CHECK(abelian_schur_multiplier({2, 4}) == V{2});
  CHECK(abelian_schur_multiplier({2, 3}).empty());
  CHECK(abelian_schur_multiplier({2, 2, 2}) == V{2, 2, 2});
  CHECK(abelian_schur_multiplier({3, 9, 4}) == V{3});
}

TEST_CASE("hypothesis checklist") {
  auto c2 = hypothesis_checklist(PermGroup(2, {Perm::parse("(1,2)")}));
  REQUIRE(c2.hypotheses.size() == 3);
  CHECK(c2.hypotheses[0].status == CheckStatus::Pass);
  CHECK(c2.hypotheses[1].status == CheckStatus::Fail);
  CHECK(c2.hypotheses[2].status == CheckStatus::Pass);
  CHECK_FALSE(c2.all_pass());
  CHECK_FALSE(c2.degenerate);

  auto klein = hypothesis_checklist(PermGroup(4, v4()));
  CHECK(klein.hypotheses[2].status == CheckStatus::Fail);

  auto s3 = hypothesis_checklist(fin::symmetric_group(3));
  CHECK(s3.hypotheses[2].status == CheckStatus::Inconclusive);

  auto triv = hypothesis_checklist(PermGroup(1, {}));
  CHECK(triv.all_pass());
  CHECK(triv.degenerate);

  for (int n : {2, 4, 6}) {
    auto v = hypothesis_checklist_vn(n);
    CHECK(v.all_pass());
    CHECK_FALSE(v.degenerate);
    for (const auto& h : v.hypotheses) CHECK(h.source.rfind("cited:", 0) == 0);
  }
  auto v3 = hypothesis_checklist_vn(3);
  CHECK(v3.hypotheses[1].status == CheckStatus::Fail);
  CHECK(v3.hypotheses[1].source.find("odd") != std::string::npos);
  CHECK_FALSE(v3.all_pass());
  CHECK_THROWS_AS(hypothesis_checklist_vn(1), InvalidInput);
}

TEST_CASE("four involutions map onto V_n") {
  auto d3 = vn_epimorphism_data(3, 2);
  CHECK(d3.well_defined());
  CHECK(d3.transpositions == 36);
  CHECK(d3.reached == 36);
  CHECK(d3.misses.empty());
  for (int n : {4, 5}) {
    auto d = vn_epimorphism_data(n, 1);
    CHECK(d.well_defined());
    CHECK(d.reached == d.transpositions);
    CHECK(d.transpositions == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(vn_epimorphism_data(2), InvalidInput);
  CHECK_THROWS_AS(vn_epimorphism_data(3, 0), InvalidInput);
}
