#include <doctest.h>

#include <algorithm>
#include <random>

#include "cgt/error.hpp"
#include "cgt/finite/coset.hpp"
#include "cgt/graph/catalog.hpp"
#include "cgt/graph/graph_ops.hpp"
#include "cgt/io/json_io.hpp"

using namespace cgt;
using namespace cgt::graph;

namespace {

LabeledGraph product_graph(std::vector<std::pair<std::string, std::string>> verts,
                           std::vector<std::pair<std::string, std::string>> edges) {
  LabeledGraph g(Mode::Product);
  for (auto& [id, grp] : verts) g.add_vertex(id, grp);
  for (auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t order_of(const fin::GroupPresentation& p) { return fin::coset_enumerate(p, {}).index(); }

LabeledGraph random_product_graph(std::mt19937& rng, int n, double p) {
  static const char* groups[] = {"C2", "C3", "C4", "S3"};
  LabeledGraph g(Mode::Product);
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), groups[rng() % 4]);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("catalog groups have the advertised orders") {
  const auto& cat = GroupCatalog::builtin();
  CHECK(cat.group("C6").order() == 6);
  CHECK(cat.group("S3").order() == 6);
  CHECK_FALSE(cat.group("S3").is_abelian());
  CHECK(cat.group("Q8").order() == 8);
  CHECK(cat.group("A5").order() == 60);
  CHECK(cat.indecomposable("S3"));
  CHECK_FALSE(cat.indecomposable("C6"));
  CHECK_THROWS_AS(cat.at("nope"), InvalidInput);
  for (const auto& name : cat.names()) {
    auto p = cat.presentation(name, "x");
    CHECK(order_of(p) == cat.group(name).order());
  }
}

TEST_CASE("catalog JSON round trip") {
  auto cat = GroupCatalog::from_json(GroupCatalog::builtin().to_json());
  CHECK(cat.names() == GroupCatalog::builtin().names());
  CHECK(cat.at("D6").factors == std::vector<std::string>{"S3", "C2"});
}

TEST_CASE("Coxeter presentations of small spherical graphs") {
  LabeledGraph b2(Mode::Coxeter);
  b2.add_vertex("a");
  b2.add_vertex("b");
  b2.add_edge("a", "b", 4);
  CHECK(order_of(coxeter_presentation(b2)) == 8);

  LabeledGraph a3(Mode::Coxeter);
  for (auto id : {"a", "b", "c"}) a3.add_vertex(id);
  a3.add_edge("a", "b", 3);
  a3.add_edge("b", "c", 3);
  a3.add_edge("a", "c", 2);
  CHECK(order_of(coxeter_presentation(a3)) == 24);
  CHECK_FALSE(is_even(a3));
  CHECK_FALSE(is_right_angled(a3));
  CHECK_THROWS_AS(graph_product_presentation(a3), InvalidInput);

  LabeledGraph tri(Mode::Coxeter);
  for (auto id : {"a", "b", "c"}) tri.add_vertex(id);
  tri.add_edge("a", "b", 4);
  tri.add_edge("b", "c", 4);
  tri.add_edge("a", "c", 2);
  CHECK(is_even(tri));
  CHECK_FALSE(is_right_angled(tri));
}

TEST_CASE("graph product presentations of cliques are direct products") {
  auto g = product_graph({{"a", "C2"}, {"b", "C3"}}, {{"a", "b"}});
  auto p = graph_product_presentation(g);
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  CHECK(order_of(p) == 6);

  auto h = product_graph({{"a", "S3"}, {"b", "C2"}, {"c", "C2"}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(order_of(graph_product_presentation(h)) == 24);

  auto free = product_graph({{"a", "C2"}, {"b", "C2"}}, {});
  CHECK_THROWS_AS(fin::coset_enumerate(graph_product_presentation(free), {}, {.max_rows = 500}), BudgetExceeded);
}

TEST_CASE("join decomposition reads the complement of the label-2 graph") {
  auto square = product_graph({{"a", "C2"}, {"b", "C2"}, {"c", "C2"}, {"d", "C2"}},
                              {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  auto j = join_decomposition(square);
  REQUIRE(j.has_value());
  CHECK(j->first == std::vector<int>{0, 2});
  CHECK(j->second == std::vector<int>{1, 3});

  auto path = product_graph({{"a", "C2"}, {"b", "C2"}, {"c", "C2"}, {"d", "C2"}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK_FALSE(join_decomposition(path).has_value());

  LabeledGraph cox(Mode::Coxeter);
  for (auto id : {"a", "b", "c"}) cox.add_vertex(id);
  cox.add_edge("a", "b", 3);
  cox.add_edge("a", "c", 2);
  cox.add_edge("b", "c", 2);
  auto jc = join_decomposition(cox);
  REQUIRE(jc.has_value());
  CHECK(jc->first == std::vector<int>{0, 1});
  CHECK(jc->second == std::vector<int>{2});
}

TEST_CASE("amalgam splits") {
  auto path = product_graph({{"a", "C2"}, {"b", "C3"}, {"c", "C2"}}, {{"a", "b"}, {"b", "c"}});
  auto s = amalgam_split(path, 0);
  CHECK(s.star == std::vector<int>{0, 1});
  CHECK(s.link == std::vector<int>{1});
  CHECK(s.rest == std::vector<int>{1, 2});
  CHECK_THROWS_AS(amalgam_split(path, 1), InvalidInput);
}

TEST_CASE("modules agree with a direct subset check") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = random_product_graph(rng, n, 0.5);
    std::vector<std::vector<int>> expected;
    for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
      std::vector<int> omega;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) omega.push_back(v);
      if (omega.size() < 2) continue;
      bool ok = true;
      for (int x = 0; x < n; ++x) {
        if (mask >> x & 1U) continue;
        auto nb = g.neighbours(x);
        int hits = 0;
        for (int v : omega) hits += std::count(nb.begin(), nb.end(), v) ? 1 : 0;
        if (hits != 0 && hits != static_cast<int>(omega.size())) ok = false;
      }
      if (ok) expected.push_back(omega);
    }
    auto got = find_modules(g);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("Coxeter modules need equal labels") {
  LabeledGraph g(Mode::Coxeter);
  for (auto id : {"a", "b", "c"}) g.add_vertex(id);
  g.add_edge("a", "c", 3);
  g.add_edge("b", "c", 2);
  CHECK_FALSE(is_module(g, {0, 1}));
  CHECK_FALSE(is_module(g, {0, 2}));
  LabeledGraph h(Mode::Coxeter);
  for (auto id : {"a", "b", "c"}) h.add_vertex(id);
  h.add_edge("a", "c", 3);
  h.add_edge("b", "c", 3);
  CHECK(is_module(h, {0, 1}));
}

TEST_CASE("collapse and splice") {
  auto path = product_graph({{"a", "C2"}, {"b", "C2"}, {"c", "C3"}, {"d", "C2"}, {"e", "C2"}},
                            {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "e"}});
  std::vector<int> omega{2, 3};
  REQUIRE_FALSE(is_module(path, omega));
  omega = {0, 2};
  REQUIRE(is_module(path, omega));
  auto col = collapse(path, omega);
  CHECK(col.size() == 4);
  int star = col.require("*");
  CHECK(col.group(star) == "G_{a,c}");
  CHECK(col.neighbours(star) == std::vector<int>{col.require("b")});

  auto module = path.induced(omega);
  auto back = splice(col, "*", module);
  CHECK(graph_isomorphic(back, path));

  CHECK_THROWS_AS(collapse(path, {0, 4}), InvalidInput);

  LabeledGraph cox(Mode::Coxeter);
  for (auto id : {"a", "b", "c"}) cox.add_vertex(id);
  cox.add_edge("a", "b", 3);
  CHECK_THROWS_AS(collapse(cox, {0, 1}), InvalidInput);
}

TEST_CASE("splitting vertex groups into indecomposable factors") {
  auto g = product_graph({{"a", "C2xC2"}}, {});
  auto s = split_indecomposable(g);
  CHECK(s.size() == 2);
  CHECK(s.label(0, 1) == 2);
  CHECK(s.id(0) == "a_1");

  auto h = product_graph({{"a", "C6"}, {"b", "S3"}, {"c", "D6"}}, {{"a", "b"}});
  auto t = split_indecomposable(h);
  CHECK(t.size() == 5);
  CHECK(t.group(t.require("a_1")) == "C2");
  CHECK(t.group(t.require("a_2")) == "C3");
  CHECK(t.adjacent(t.require("a_1"), t.require("b")));
  CHECK(t.adjacent(t.require("c_1"), t.require("c_2")));
  CHECK_FALSE(t.adjacent(t.require("c_1"), t.require("b")));
  CHECK(graph_isomorphic(split_indecomposable(t), t));
  CHECK(order_of(graph_product_presentation(product_graph({{"a", "C6"}}, {}))) ==
        order_of(graph_product_presentation(split_indecomposable(product_graph({{"a", "C6"}}, {})))));
}

TEST_CASE("graph isomorphism respects labels") {
  auto path = product_graph({{"a", "C2"}, {"b", "C2"}, {"c", "C2"}, {"d", "C2"}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  auto star = product_graph({{"a", "C2"}, {"b", "C2"}, {"c", "C2"}, {"d", "C2"}}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
  CHECK_FALSE(graph_isomorphic(path, star));
  auto relabelled = path.induced({3, 1, 0, 2});
  auto iso = graph_isomorphism(path, relabelled);
  REQUIRE(iso.has_value());
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(path.label(u, v) == relabelled.label((*iso)[u], (*iso)[v]));
  auto other = path;
  other.set_group(0, "C3");
  CHECK_FALSE(graph_isomorphic(path, other));
}

TEST_CASE("cliques") {
  auto g = product_graph({{"a", "C2"}, {"b", "C2"}, {"c", "C2"}, {"d", "C2"}},
                         {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
  auto cl = cliques(g);
  CHECK(cl.size() == 1 + 4 + 4 + 1);
  CHECK(cl.front() == 0U);
  CHECK(maximal_cliques(g) == std::vector<unsigned>{0b1100U, 0b0111U});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = random_product_graph(rng, 7, 0.5);
    std::size_t expected = 0;
    for (unsigned mask = 0; mask < 128; ++mask) {
      std::vector<int> vs;
      for (int v = 0; v < 7; ++v)
        if (mask >> v & 1U) vs.push_back(v);
      expected += r.is_clique(vs) ? 1 : 0;
    }
    CHECK(cliques(r).size() == expected);
  }
}

TEST_CASE("graph JSON round trip and validation") {
  auto g = io::graph_from_json(R"({"mode":"coxeter","vertices":[{"id":"a"},{"id":"b"},{"id":"c"}],
    "edges":[{"u":"a","v":"b","m":4},{"u":"b","v":"c","m":4},{"u":"a","v":"c","m":2}]})");
  CHECK(g.mode() == Mode::Coxeter);
  CHECK(g.label(0, 1) == 4);
  auto back = io::graph_from_json(io::graph_to_json(g));
  CHECK(graph_isomorphic(g, back));
  CHECK(io::graph_to_json(back) == io::graph_to_json(g));

  CHECK_THROWS_AS(io::graph_from_json(R"({"mode":"coxeter","vertices":[{"id":"a"}],"edges":[{"u":"a","v":"a","m":2}]})"),
                  InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(R"({"mode":"coxeter","vertices":[{"id":"a"},{"id":"b"}],"edges":[{"u":"a","v":"b","m":1}]})"),
                  InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(R"({"mode":"product","vertices":[{"id":"a"}],"edges":[]})"), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(R"({"mode":"product","vertices":[{"id":"a","group":"C2"}],"edges":[{"u":"a","v":"z"}]})"),
                  InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json("{not json"), InvalidInput);
}
