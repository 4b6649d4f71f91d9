#include <doctest.h>

#include <random>

#include "cgt/error.hpp"
#include "cgt/graph/graph_ops.hpp"
#include "cgt/reconstruct/clique_poset.hpp"

using namespace cgt;
using namespace cgt::graph;
using namespace cgt::recon;

namespace {

LabeledGraph graph_from_mask(int n, unsigned edges, const std::vector<std::string>& groups) {
  LabeledGraph g(Mode::Product);
  for (int v = 0; v < n; ++v) g.add_vertex(std::string(1, static_cast<char>('a' + v)), groups[static_cast<std::size_t>(v)]);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (edges >> bit & 1U) g.add_edge(u, v);
  return g;
}

std::vector<LabeledGraph> unlabeled_classes(int n) {
  std::vector<LabeledGraph> reps;
  std::vector<std::string> groups(static_cast<std::size_t>(n), "C2");
  for (unsigned e = 0; e < (1U << (n * (n - 1) / 2)); ++e) {
    auto g = graph_from_mask(n, e, groups);
    bool fresh = true;
    for (const auto& r : reps)
      if (graph_isomorphic(r, g)) fresh = false;
    if (fresh) reps.push_back(g);
  }
  return reps;
}

}  // namespace

TEST_CASE("clique posets of small graphs") {
  auto single = clique_poset(graph_from_mask(1, 0, {"C2"}));
  REQUIRE(single.poset.size() == 2);
  CHECK(single.poset.node(0).group == "1");
  CHECK(single.poset.node(1).label.order == 2);
  CHECK(single.poset.leq(0, 1));

  auto edge = clique_poset(graph_from_mask(2, 1, {"C2", "C2"}));
  REQUIRE(edge.poset.size() == 4);
  CHECK(edge.poset.node(3).label == fin::iso_signature(GroupCatalog::builtin().group("C2xC2")));
  CHECK(edge.poset.node(3).name == "{a,b}");

  auto path = clique_poset(graph_from_mask(3, 0b101, {"C2", "C2", "C2"}));
  CHECK(path.poset.size() == 6);
  CHECK(path.poset.is_partial_order());
  CHECK(path.poset.bottom() == 0U);
}

TEST_CASE("meets and joins of clique nodes are intersections and unions") {
  auto cp = clique_poset(graph_from_mask(4, 0b011011, {"C2", "S3", "C3", "C4"}));
  const auto& p = cp.poset;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      auto m = p.meet(a, b);
      REQUIRE(m.has_value());
      CHECK(cp.cliques[*m] == (cp.cliques[a] & cp.cliques[b]));
      unsigned u = cp.cliques[a] | cp.cliques[b];
      auto j = p.join(a, b);
      bool is_clique = std::find(cp.cliques.begin(), cp.cliques.end(), u) != cp.cliques.end();
      CHECK(j.has_value() == is_clique);
      if (j) CHECK(cp.cliques[*j] == u);
    }
}

TEST_CASE("T0 graphs") {
  CHECK(is_T0(graph_from_mask(3, 0b101, {"C2", "C2", "C2"})));
  CHECK(is_T0(graph_from_mask(2, 0, {"C2", "C2"})));
  CHECK_FALSE(is_T0(graph_from_mask(3, 0b111, {"C2", "C2", "C2"})));
  CHECK_FALSE(is_T0(graph_from_mask(2, 1, {"C2", "C3"})));
}

TEST_CASE("reconstruction of the 4-vertex all-C2 graphs") {
  auto reps = unlabeled_classes(4);
  REQUIRE(reps.size() == 11);
  std::vector<LabeledGraph> rebuilt;
  std::vector<LabeledPoset> posets;
  for (const auto& g : reps) {
    auto cp = clique_poset(g);
    rebuilt.push_back(reconstruct_graph(cp.poset));
    posets.push_back(cp.poset);
    CHECK(graph_isomorphic(rebuilt.back(), g));
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      CHECK(graph_isomorphic(rebuilt[i], rebuilt[j]) == (i == j));
      CHECK(poset_isomorphism(posets[i], posets[j]).has_value() == (i == j));
    }
}

TEST_CASE("reconstruction round trip on random labelled graphs") {
  std::mt19937 rng(17);
  const std::vector<std::string> labels{"C2", "C3", "C4", "S3"};
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::string> groups;
    for (int v = 0; v < n; ++v) groups.push_back(labels[rng() % 4]);
    auto g = graph_from_mask(n, static_cast<unsigned>(rng()) & ((1U << (n * (n - 1) / 2)) - 1), groups);
    auto back = reconstruct_graph(clique_poset(g).poset);
    CHECK(graph_isomorphic(back, g));

    auto h = graph_from_mask(n, static_cast<unsigned>(rng()) & ((1U << (n * (n - 1) / 2)) - 1), groups);
    CHECK(poset_isomorphism(clique_poset(g).poset, clique_poset(h).poset).has_value() == graph_isomorphic(g, h));
  }
}

TEST_CASE("split vertex groups before reconstructing") {
  LabeledGraph g(Mode::Product);
  g.add_vertex("a", "C6");
  g.add_vertex("b", "S3");
  auto split = split_indecomposable(g);
  auto back = reconstruct_graph(clique_poset(split).poset);
  CHECK(back.size() == 3);
  CHECK(graph_isomorphic(back, split));
}

TEST_CASE("malformed posets are rejected") {
  auto node = *product_node({"C2"});
  auto bottom = *product_node({});
  // A chain 1 < C2 < C2: the top element is not determined by its atoms.
  LabeledPoset chain({bottom, node, node}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(chain.is_partial_order());
  CHECK_THROWS_AS(reconstruct_graph(chain), InvalidInput);
  LabeledPoset cyclic({node, node}, {{1, 1}, {1, 1}});
  CHECK_FALSE(cyclic.is_partial_order());
  CHECK_THROWS_AS(reconstruct_graph(cyclic), InvalidInput);
  LabeledPoset unknown({bottom, *product_node({"C2", "C3"})}, {{1, 1}, {0, 1}});
  CHECK_NOTHROW(reconstruct_graph(unknown));
  CHECK(reconstruct_graph(unknown).group(0) == "C6");
}

TEST_CASE("poset JSON round trip") {
  auto cp = clique_poset(graph_from_mask(4, 0b110011, {"C2", "S3", "C3", "C4"}));
  auto text = cp.poset.to_json();
  auto back = LabeledPoset::from_json(text);
  CHECK(back.size() == cp.poset.size());
  CHECK(poset_isomorphism(back, cp.poset).has_value());
  CHECK(back.to_json() == text);
  CHECK_THROWS_AS(LabeledPoset::from_json(R"({"nodes":[{"group":"Z7"}],"covers":[]})"), InvalidInput);
}

TEST_CASE("parabolic meet and join laws in clique products") {
  for (std::vector<std::string> groups :
       {std::vector<std::string>{"C2", "S3"}, {"S3", "S3"}, {"C2", "C2", "C2", "C2"}, {"C4", "C2", "S3"}}) {
    std::vector<std::string> g = groups;
    auto clique = graph_from_mask(static_cast<int>(g.size()), (1U << (g.size() * (g.size() - 1) / 2)) - 1, g);
    auto r = check_parabolic_laws(clique);
    CHECK(r.passed());
    CHECK(r.pairs == (1U << (2 * g.size())));
  }
  CHECK_THROWS_AS(check_parabolic_laws(graph_from_mask(2, 0, {"C2", "C2"})), InvalidInput);
}
