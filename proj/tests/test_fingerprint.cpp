#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cgt/error.hpp"
#include "cgt/fingerprint/fingerprint.hpp"
#include "cgt/fingerprint/homsearch.hpp"
#include "cgt/fingerprint/separate.hpp"
#include "cgt/finite/subgroups.hpp"
#include "cgt/graph/graph_ops.hpp"

using namespace cgt;
using namespace cgt::graph;

namespace {

LabeledGraph c2_graph(int n, std::vector<std::pair<int, int>> edges) {
  LabeledGraph g(Mode::Product);
  for (int v = 0; v < n; ++v) g.add_vertex(std::string(1, static_cast<char>('a' + v)), "C2");
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

fin::GroupPresentation parse_presentation(std::vector<std::string> gens, std::vector<std::string> rels) {
  fin::GroupPresentation p;
  p.generators = std::move(gens);
  for (const auto& r : rels) p.relators.push_back(p.parse_word(r));
  return p;
}

std::vector<fin::Perm> all_perms(int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  std::vector<fin::Perm> out;
  do out.push_back(fin::Perm::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::set<fin::Perm> closure(const std::vector<fin::Perm>& gens, int k) {
  std::set<fin::Perm> seen{fin::Perm::identity(k)};
  std::vector<fin::Perm> queue{fin::Perm::identity(k)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      auto y = queue[i] * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  return seen;
}

// Least conjugate of a subgroup of S_k, as a sorted element list.
std::vector<fin::Perm> conjugacy_key(const std::set<fin::Perm>& h, const std::vector<fin::Perm>& sym) {
  std::vector<fin::Perm> best;
  for (const auto& x : sym) {
    std::vector<fin::Perm> c;
    for (const auto& e : h) c.push_back(x.inverse() * e * x);
    std::sort(c.begin(), c.end());
    if (best.empty() || c < best) best = c;
  }
  return best;
}

bool relators_hold(const fin::GroupPresentation& p, const std::vector<fin::Perm>& images, int k) {
  for (const auto& r : p.relators)
    if (!fin::evaluate_word(images, r, k).is_identity()) return false;
  return true;
}

std::set<std::string> names(const fp::Fingerprint& f) {
  std::set<std::string> out;
  for (const auto& c : f.classes) out.insert(c.name);
  return out;
}

}  // namespace

TEST_CASE("orbit-reduced search finds every image up to conjugacy") {
  for (auto p : {parse_presentation({"a", "b"}, {"a^2", "b^2"}), parse_presentation({"x", "y"}, {"x^3", "y^2", "x y x y"}),
                 parse_presentation({"s", "t"}, {"s t s^-1 t^-1"})}) {
    for (int k : {3, 4}) {
      auto sym = all_perms(k);
      std::set<std::vector<fin::Perm>> expected;
      for (const auto& x : sym)
        for (const auto& y : sym) {
          if (!relators_hold(p, {x, y}, k)) continue;
          auto h = closure({x, y}, k);
          if (h.size() <= 12) expected.insert(conjugacy_key(h, sym));
        }
      fp::HomSearchOptions opts;
      opts.degree = k;
      opts.max_image_order = 12;
      auto result = fp::search_homomorphisms(p, opts);
      CHECK(result.complete);
      std::set<std::vector<fin::Perm>> got;
      for (const auto& images : result.images) {
        CHECK(relators_hold(p, images, k));
        got.insert(conjugacy_key(closure(images, k), sym));
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("epimorphism counts") {
  auto free3 = graph_product_presentation(c2_graph(3, {}));
  auto c2 = GroupCatalog::builtin().group("C2");
  CHECK(fp::epimorphism_count(free3, c2.generators(), c2.degree()) == 7);
  auto s3 = GroupCatalog::builtin().group("S3");
  auto dinf = parse_presentation({"a", "b"}, {"a^2", "b^2"});
  // Ordered pairs of distinct reflections of S3.
  CHECK(fp::epimorphism_count(dinf, s3.generators(), s3.degree()) == 6);
  auto triangle = graph_product_presentation(c2_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(fp::epimorphism_count(triangle, s3.generators(), s3.degree()) == 0);
}

TEST_CASE("small fingerprints") {
  fp::FingerprintOptions opts;
  opts.bound = 8;
  opts.degree = 4;
  auto dinf = fp::quotients_up_to(parse_presentation({"a", "b"}, {"a^2", "b^2"}), opts);
  auto n = names(dinf);
  for (auto q : {"C1", "C2", "C2xC2", "S3", "D4"}) CHECK(n.count(q) == 1);
  CHECK(n.count("C4") == 0);
  for (const auto& c : dinf.classes) CHECK(c.signature.order <= 8);

  auto c2 = fp::quotients_up_to(parse_presentation({"v"}, {"v^2"}), opts);
  CHECK(names(c2) == std::set<std::string>{"C1", "C2"});

  auto isolated = fp::quotients_up_to(graph_product_presentation(c2_graph(3, {})), opts);
  CHECK(names(isolated).count("C2") == 1);
}

TEST_CASE("fingerprint comparison") {
  fp::FingerprintOptions opts;
  opts.bound = 48;
  opts.degree = 4;
  auto path = fp::quotients_up_to(graph_product_presentation(c2_graph(3, {{0, 1}, {1, 2}})), opts);
  auto edge_point = fp::quotients_up_to(graph_product_presentation(c2_graph(3, {{0, 1}})), opts);
  CHECK(fp::compare(path, path).verdict == fp::Verdict::Equal);
  auto d = fp::compare(path, edge_point);
  CHECK(d.verdict == fp::Verdict::Differ);
  REQUIRE(d.witness.has_value());

  auto c2 = fp::quotients_up_to(parse_presentation({"v"}, {"v^2"}), opts);
  auto c3 = fp::quotients_up_to(parse_presentation({"v"}, {"v^3"}), opts);
  auto cmp = fp::compare(c2, c3);
  CHECK(cmp.verdict == fp::Verdict::Differ);
  CHECK(cmp.witness_in_first);
  CHECK(cmp.witness->name == "C2");

  auto other = opts;
  other.bound = 24;
  CHECK(fp::compare(path, fp::quotients_up_to(graph_product_presentation(c2_graph(3, {{0, 1}, {1, 2}})), other)).verdict ==
        fp::Verdict::Incomparable);
  other = opts;
  other.max_nodes = 5;
  auto partial = fp::quotients_up_to(graph_product_presentation(c2_graph(3, {{0, 1}, {1, 2}})), other);
  CHECK_FALSE(partial.complete);
  CHECK(fp::compare(path, partial).verdict == fp::Verdict::Incomparable);
}

TEST_CASE("fingerprint invariants") {
  auto g = c2_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto relabelled = g.induced({2, 0, 3, 1});
  auto p = graph_product_presentation(g);
  fp::FingerprintOptions opts;
  opts.degree = 4;
  opts.bound = 24;
  opts.count_targets = {"S3", "D4"};
  auto f = fp::quotients_up_to(p, opts);
  auto f_relabelled = fp::quotients_up_to(graph_product_presentation(relabelled), opts);
  auto same = fp::compare(f, f_relabelled);
  CHECK(same.verdict == fp::Verdict::Equal);
  CHECK(same.counts == fp::Verdict::Equal);

  auto threaded = opts;
  threaded.jobs = 3;
  CHECK(fp::quotients_up_to(p, threaded).to_json() == f.to_json());

  for (std::size_t b : {2, 6, 12}) {
    auto smaller = opts;
    smaller.bound = b;
    auto fs = fp::quotients_up_to(p, smaller);
    for (std::size_t i = 0; i < fs.classes.size(); ++i) {
      bool present = false;
      for (std::size_t j = 0; j < f.classes.size(); ++j)
        if (f.classes[j].signature == fs.classes[i].signature) present = true;
      CHECK(present);
    }
  }

  for (std::size_t i = 0; i < f.classes.size(); ++i) {
    CHECK(relators_hold(p, f.classes[i].images, f.degree));
    CHECK(fin::iso_signature(f.group(i)) == f.classes[i].signature);
  }

  auto back = fp::Fingerprint::from_json(f.to_json());
  CHECK(back.to_json() == f.to_json());
  CHECK(fp::compare(back, f).verdict == fp::Verdict::Equal);
  CHECK_THROWS_AS(fp::Fingerprint::from_json("[]"), InvalidInput);
}

namespace {

// Independent brute-force check that no element of the quotient conjugates
// one image onto the other.
bool images_non_conjugate(const fp::SeparationReport& r) {
  int k = 1;
  for (const auto& p : r.quotient_generators) k = std::max(k, p.degree());
  auto ext = [k](const std::vector<fin::Perm>& v) {
    std::vector<fin::Perm> out;
    for (const auto& p : v) out.push_back(p.extended(k));
    return out;
  };
  auto whole = closure(ext(r.quotient_generators), k);
  CHECK(whole.size() == r.quotient_order);
  auto a = closure(ext(r.images_a), k), b = closure(ext(r.images_b), k);
  for (const auto& x : a) CHECK(whole.count(x));
  for (const auto& x : b) CHECK(whole.count(x));
  for (const auto& x : whole) {
    std::set<fin::Perm> c;
    for (const auto& e : a) c.insert(x.inverse() * e * x);
    if (c == b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("separating finite subgroups by retractions") {
  auto two = c2_graph(2, {});
  auto r = fp::separating_quotient(two, {"a"}, {"b"});
  CHECK(r.verdict == fp::SeparationVerdict::Separated);
  CHECK(r.target == std::vector<std::string>{"a"});
  CHECK(r.image_order_a == 2);
  CHECK(r.image_order_b == 1);
  CHECK(images_non_conjugate(r));

  CHECK(fp::separating_quotient(two, {"a"}, {"a"}).verdict == fp::SeparationVerdict::Conjugate);
  CHECK(fp::separating_quotient(two, {"a"}, {"b a b"}).verdict == fp::SeparationVerdict::Conjugate);

  auto path = c2_graph(3, {{0, 1}, {1, 2}});
  auto rp = fp::separating_quotient(path, {"a"}, {"c"});
  CHECK(rp.verdict == fp::SeparationVerdict::Separated);
  CHECK(images_non_conjugate(rp));

  auto rc = fp::separating_quotient(path, {"c b a b c"}, {"b c"});
  CHECK(rc.verdict == fp::SeparationVerdict::Separated);
  CHECK(rc.support_a.size() == 1);
  CHECK(images_non_conjugate(rc));

  LabeledGraph cox(Mode::Coxeter);
  cox.add_vertex("a");
  cox.add_vertex("b");
  cox.add_vertex("c");
  cox.add_edge("a", "b", 4);
  CHECK(fp::separating_quotient(cox, {"a"}, {"c b a b c"}).verdict == fp::SeparationVerdict::Conjugate);
  auto rx = fp::separating_quotient(cox, {"a"}, {"c b c"});
  CHECK(rx.verdict == fp::SeparationVerdict::Separated);
  CHECK(images_non_conjugate(rx));
  CHECK(fp::separating_quotient(cox, {"b a b"}, {"a"}).verdict == fp::SeparationVerdict::Conjugate);

  LabeledGraph odd(Mode::Coxeter);
  odd.add_vertex("a");
  odd.add_vertex("b");
  odd.add_edge("a", "b", 3);
  CHECK_THROWS_AS(fp::separating_quotient(odd, {"a"}, {"b"}), InvalidInput);
}
