#include <doctest.h>

#include <map>
#include <random>

#include "cgt/error.hpp"
#include "cgt/finite/coset.hpp"
#include "cgt/graph/graph_ops.hpp"
#include "cgt/rewriting/coxeter.hpp"
#include "cgt/rewriting/graph_product.hpp"

using namespace cgt;
using namespace cgt::graph;
using namespace cgt::rw;

namespace {

LabeledGraph coxeter_graph(std::vector<std::string> ids, std::vector<std::tuple<std::string, std::string, int>> edges) {
  LabeledGraph g(Mode::Coxeter);
  for (auto& id : ids) g.add_vertex(id);
  for (auto& [u, v, m] : edges) g.add_edge(u, v, m);
  return g;
}

std::vector<CoxeterWord> all_words(int gens, int max_len) {
  std::vector<CoxeterWord> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int v = 0; v < gens; ++v) {
        auto w = out[i];
        w.push_back(v);
        out.push_back(w);
      }
    begin = end;
  }
  return out;
}

// Normal forms separate exactly the elements found by tracing words through
// the regular coset table.
void check_against_table(const LabeledGraph& g, std::size_t order) {
  auto table = fin::coset_enumerate(coxeter_presentation(g), {});
  REQUIRE(table.index() == order);
  std::map<CoxeterWord, int> element_of_nf;
  std::map<int, CoxeterWord> nf_of_element;
  for (const auto& w : all_words(g.size(), 6)) {
    fin::FreeWord fw;
    for (int v : w) fw.push_back(v + 1);
    int elem = table.trace(0, fw);
    auto nf = coxeter_normal_form(g, w);
    CHECK(coxeter_normal_form(g, nf) == nf);
    CHECK(coxeter_reduce(g, w).size() == nf.size());
    auto [it, fresh] = element_of_nf.emplace(nf, elem);
    CHECK(it->second == elem);
    auto [jt, fresh2] = nf_of_element.emplace(elem, nf);
    CHECK(jt->second == nf);
  }
  std::mt19937 rng(11);
  auto words = all_words(g.size(), 6);
  for (int k = 0; k < 500; ++k) {
    const auto& a = words[rng() % words.size()];
    const auto& b = words[rng() % words.size()];
    fin::FreeWord fa, fb;
    for (int v : a) fa.push_back(v + 1);
    for (int v : b) fb.push_back(v + 1);
    CHECK(coxeter_equal(g, a, b) == (table.trace(0, fa) == table.trace(0, fb)));
  }
}

}  // namespace

TEST_CASE("Coxeter relators and distinct generators") {
  auto g = coxeter_graph({"v", "w"}, {{"v", "w", 5}});
  auto rel = parse_coxeter_word(g, "v w v w v w v w v w");
  CHECK(coxeter_equal(g, rel, {}));
  CHECK_FALSE(coxeter_equal(g, {0}, {1}));
  CHECK(parse_coxeter_word(g, "v^3 w^-2 1") == CoxeterWord{0});
  CHECK(format_coxeter_word(g, {}) == "1");
  CHECK_THROWS_AS(parse_coxeter_word(g, "x"), InvalidInput);
  CHECK_THROWS_AS(parse_coxeter_word(g, "v^z"), InvalidInput);
}

TEST_CASE("Coxeter normal forms agree with A3 and B3 tables") {
  check_against_table(coxeter_graph({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 2}}), 24);
  check_against_table(coxeter_graph({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 3}, {"a", "c", 2}}), 48);
}

TEST_CASE("infinite Coxeter groups") {
  auto dinf = coxeter_graph({"a", "b"}, {});
  CHECK(coxeter_reduce(dinf, {0, 1, 0, 1}).size() == 4);
  CHECK(coxeter_reduce(dinf, {0, 1, 1, 0}).empty());

  auto affine = coxeter_graph({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
  CHECK(coxeter_equal(affine, parse_coxeter_word(affine, "a b a"), parse_coxeter_word(affine, "b a b")));
  auto w = parse_coxeter_word(affine, "a b c a b c a b c");
  CHECK(coxeter_reduce(affine, w).size() == 9);
  auto a3 = coxeter_graph({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 2}});
  CHECK_THROWS_AS(coxeter_normal_form(a3, parse_coxeter_word(a3, "a b a c b a"), {.max_words = 3}), BudgetExceeded);
}

TEST_CASE("retractions of even Coxeter groups") {
  auto g = coxeter_graph({"a", "b", "c", "d"}, {{"a", "b", 4}, {"b", "c", 2}, {"c", "d", 6}});
  std::vector<int> x{0, 2};
  auto pres = coxeter_presentation(g);
  for (const auto& r : pres.relators) {
    CoxeterWord w;
    for (int l : r) w.push_back((l > 0 ? l : -l) - 1);
    CHECK(coxeter_retraction(g, x, w).empty());
    CHECK(coxeter_retraction(g, {}, w).empty());
  }
  auto inside = parse_coxeter_word(g, "a c a c");
  CHECK(coxeter_retraction(g, x, inside) == coxeter_reduce(g, inside));
  CHECK(coxeter_retraction(g, {}, parse_coxeter_word(g, "a b c d")).empty());
  CHECK(coxeter_retraction(g, x, parse_coxeter_word(g, "a b a d c")) == parse_coxeter_word(g, "c"));

  auto odd = coxeter_graph({"a", "b"}, {{"a", "b", 3}});
  CHECK_THROWS_AS(coxeter_retraction(odd, {0}, {0, 1}), InvalidInput);
}

TEST_CASE("graph product normal forms on small cases") {
  LabeledGraph g(Mode::Product);
  g.add_vertex("a", "C3");
  g.add_vertex("b", "S3");
  g.add_vertex("c", "C2");
  g.add_edge("a", "b");
  GraphProduct gp(g);
  CHECK(gp.normal_form(gp.parse("a b.1 a^-1")) == gp.parse("b.1"));
  CHECK(gp.normal_form(gp.parse("c c")).empty());
  CHECK(gp.normal_form(gp.parse("b.2 a")) == gp.parse("a b.2"));
  CHECK(gp.normal_form(gp.parse("a c a")).size() == 3);
  CHECK(gp.normal_form(gp.parse("a c c a")) == gp.normal_form(gp.parse("a^2")));
  CHECK(gp.format(gp.normal_form(gp.parse("a^4"))) == "a");
  CHECK(gp.retraction({0}, gp.parse("a c b.1 a")) == gp.normal_form(gp.parse("a^2")));
  CHECK(gp.retraction({}, gp.parse("a c b.1 a")).empty());
}

TEST_CASE("graph product normal forms of a clique match the direct product") {
  LabeledGraph g(Mode::Product);
  g.add_vertex("x", "C2");
  g.add_vertex("y", "C2");
  g.add_vertex("z", "C2");
  g.add_edge("x", "y");
  g.add_edge("y", "z");
  g.add_edge("x", "z");
  GraphProduct gp(g);
  std::mt19937 rng(5);
  std::map<std::vector<int>, ProductWord> seen;
  for (int trial = 0; trial < 400; ++trial) {
    ProductWord w;
    std::vector<int> parity(3, 0);
    int len = static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) {
      int v = static_cast<int>(rng() % 3);
      w.push_back({v, 1});
      parity[static_cast<std::size_t>(v)] ^= 1;
    }
    auto nf = gp.normal_form(w);
    CHECK(gp.normal_form(nf) == nf);
    auto [it, fresh] = seen.emplace(parity, nf);
    CHECK(it->second == nf);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("graph product normal forms are invariant under relator insertion") {
  LabeledGraph g(Mode::Product);
  g.add_vertex("a", "S3");
  g.add_vertex("b", "C4");
  g.add_vertex("c", "C2");
  g.add_vertex("d", "C3");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "d");
  GraphProduct gp(g);
  const auto& pres = gp.presentation();
  std::mt19937 rng(9);
  auto random_word = [&](int len) {
    fin::FreeWord w;
    for (int i = 0; i < len; ++i) {
      int gen = static_cast<int>(rng() % pres.generators.size()) + 1;
      w.push_back(rng() % 2 ? gen : -gen);
    }
    return w;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto u = random_word(static_cast<int>(rng() % 8));
    auto v = random_word(static_cast<int>(rng() % 8));
    const auto& r = pres.relators[rng() % pres.relators.size()];
    auto with = fin::concat(fin::concat(u, r), v);
    auto without = fin::concat(u, v);
    auto nf = gp.normal_form(gp.from_free_word(with));
    CHECK(nf == gp.normal_form(gp.from_free_word(without)));
    CHECK(gp.normal_form(gp.from_free_word(gp.to_free_word(nf))) == nf);
    CHECK(gp.multiply(nf, gp.inverse(nf)).empty());
    // Every vertex-group projection is a homomorphism, so equal elements
    // have equal projections.
    for (int x = 0; x < 4; ++x) {
      auto p = gp.retraction({x}, nf);
      CHECK(p.size() <= 1);
    }
  }
}
