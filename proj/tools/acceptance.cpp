// Acceptance driver: one PASS/FAIL line per criterion. Exits non-zero when a
// criterion fails, except for the lines marked "known" (see README).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cgt/error.hpp"
#include "cgt/fibre/fibre.hpp"
#include "cgt/fingerprint/fingerprint.hpp"
#include "cgt/fingerprint/separate.hpp"
#include "cgt/finite/coset.hpp"
#include "cgt/graph/graph_ops.hpp"
#include "cgt/reconstruct/clique_poset.hpp"
#include "cgt/rewriting/coxeter.hpp"
#include "cgt/rewriting/graph_product.hpp"
#include "cgt/thompson/claims.hpp"
#include "cgt/thompson/random.hpp"
#include "cgt/thompson/synthesis.hpp"

using namespace cgt;
using graph::LabeledGraph;
using graph::Mode;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known = false;  // failure documented as unattainable
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1 ----------------------------------------------------------------------

Outcome claim_chain() {
  std::size_t checks = 0, cases = 0, failed = 0;
  std::string first;
  for (int n : {3, 4, 5})
    for (const auto& c : vn::check_generation_claims(n)) {
      ++checks;
      cases += c.cases;
      if (!c.passed()) {
        ++failed;
        if (first.empty()) first = "n=" + std::to_string(n) + " " + c.name + ": " + c.first_failure;
      }
    }
  return {failed == 0, fmt("claim chain n=3,4,5: %zu checks, %zu cases, %zu failed%s", checks, cases, failed,
                           first.empty() ? "" : (" (" + first + ")").c_str())};
}

// 2 ----------------------------------------------------------------------

std::map<std::string, std::string> leaf_map(const vn::VnElement& x) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < x.leaf_count(); ++i) m[x.domain()[i].to_string()] = x.images()[i].to_string();
  return m;
}

Outcome figures() {
  using M = std::map<std::string, std::string>;
  const M expected[4] = {
      {{"00", "22"}, {"01", "21"}, {"02", "20"}, {"10", "12"}, {"11", "11"}, {"12", "10"}, {"20", "02"}, {"21", "01"},
       {"22", "00"}},
      {{"00", "00"}, {"01", "22"}, {"02", "21"}, {"10", "20"}, {"11", "12"}, {"12", "11"}, {"20", "10"}, {"21", "02"},
       {"22", "01"}},
      {{"00", "01"}, {"01", "00"}, {"02", "02"}, {"1", "1"}, {"2", "2"}},
      {{"00", "1"}, {"01", "01"}, {"02", "02"}, {"1", "00"}, {"2", "2"}},
  };
  int ok = 0;
  for (int i = 0; i < 4; ++i) ok += leaf_map(vn::generator(3, i + 1)) == expected[i] && vn::generator(3, i + 1).is_canonical();
  auto cyc = leaf_map(vn::compose(vn::generator(3, 1), vn::generator(3, 2)));
  const char* lex[] = {"00", "01", "02", "10", "11", "12", "20", "21", "22"};
  bool nine = cyc.size() == 9;
  for (int i = 0; i < 9 && nine; ++i) nine = cyc[lex[i]] == lex[(i + 1) % 9];
  return {ok == 4 && nine, fmt("generators of V_3: %d/4 leaf maps exact; b1 b2 %s the lexicographic 9-cycle", ok,
                               nine ? "is" : "is NOT")};
}

// 3 ----------------------------------------------------------------------

// Collapses a uniformly random reducible caret until none is left, on plain
// (domain, image) pair lists.
vn::VnElement reduce_randomly(const vn::VnElement& x, std::mt19937_64& rng) {
  const int n = x.arity();
  std::vector<std::pair<vn::Address, vn::Address>> pairs;
  for (std::size_t i = 0; i < x.leaf_count(); ++i) pairs.emplace_back(x.domain()[i], x.images()[i]);
  for (;;) {
    std::map<vn::Address, std::vector<std::size_t>> by_parent;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!pairs[i].first.empty()) by_parent[pairs[i].first.parent()].push_back(i);
    std::vector<vn::Address> candidates;
    for (auto& [parent, idx] : by_parent) {
      if (static_cast<int>(idx.size()) != n) continue;
      bool ok = true;
      vn::Address target;
      for (std::size_t k = 0; k < idx.size() && ok; ++k) {
        const auto& [d, im] = pairs[idx[k]];
        if (im.empty() || im[im.length() - 1] != d[d.length() - 1]) ok = false;
        else if (k == 0) target = im.parent();
        else if (im.parent() != target) ok = false;
      }
      if (ok) candidates.push_back(parent);
    }
    if (candidates.empty()) break;
    vn::Address parent = candidates[rng() % candidates.size()];
    vn::Address target;
    std::vector<std::pair<vn::Address, vn::Address>> next;
    for (auto& pr : pairs) {
      if (!pr.first.empty() && pr.first.parent() == parent)
        target = pr.second.parent();
      else
        next.push_back(pr);
    }
    next.emplace_back(parent, target);
    pairs = std::move(next);
  }
  return vn::VnElement::from_pairs(n, std::move(pairs));
}

Outcome group_axioms(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0, elems = 0;
  for (int n = 2; n <= 5; ++n) {
    auto id = vn::VnElement::identity(n);
    for (int t = 0; t < 1000; ++t, ++elems) {
      int carets = 1 + static_cast<int>(rng() % (24 / (n - 1)));
      auto x = vn::random_element(n, carets, rng);
      auto y = vn::random_element(n, carets, rng);
      auto z = vn::random_element(n, carets, rng);
      bool ok = vn::compose(vn::compose(x, y), z) == vn::compose(x, vn::compose(y, z)) &&
                vn::compose(x, id) == x && vn::compose(id, x) == x && vn::compose(vn::invert(x), x).is_identity();
      auto big = vn::random_expansion(x, 4, rng);
      ok = ok && reduce_randomly(big, rng) == vn::canonicalize(big) && vn::canonicalize(big) == x;
      bad += !ok;
    }
  }
  std::size_t parity_bad = 0;
  for (int n : {3, 5})
    for (int t = 0; t < 200; ++t) {
      auto x = vn::random_element(n, 4, rng);
      auto y = vn::random_element(n, 4, rng);
      for (const auto& leaf : x.domain()) parity_bad += vn::parity(vn::expand(x, leaf)) != vn::parity(x);
      bool px = vn::class_parity(x) == vn::Parity::Odd, py = vn::class_parity(y) == vn::Parity::Odd;
      parity_bad += (vn::class_parity(vn::compose(x, y)) == vn::Parity::Odd) != (px != py);
    }
  std::string witness;
  for (int t = 0; t < 1000 && witness.empty(); ++t) {
    auto x = vn::random_element(4, 2, rng);
    for (const auto& leaf : x.domain())
      if (vn::parity(vn::expand(x, leaf)) != vn::parity(x)) {
        witness = x.to_string() + " expanded at " + leaf.to_string();
        break;
      }
  }
  return {bad == 0 && parity_bad == 0 && !witness.empty(),
          fmt("V_n axioms and confluence: %zu elements, %zu failures; odd-arity parity failures %zu; n=4 witness: %s",
              elems, bad, parity_bad, witness.empty() ? "none" : witness.c_str())};
}

// 4 ----------------------------------------------------------------------

const std::vector<std::string> kLabels{"C2", "C3", "C4", "S3"};
const std::map<std::string, std::size_t> kOrders{{"C2", 2}, {"C3", 3}, {"C4", 4}, {"S3", 6}};

int edge_bit(int n, int u, int v) {  // u < v, row-major upper triangle
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

// Code of the graph relabelled by perm: labels then edges, as one integer.
std::uint64_t graph_code(int n, const std::vector<int>& lab, unsigned edges, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < n; ++i) code = code * 4 + static_cast<std::uint64_t>(lab[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int a = inv[static_cast<std::size_t>(u)], b = inv[static_cast<std::size_t>(v)];
      code = code * 2 + ((edges >> edge_bit(n, std::min(a, b), std::max(a, b))) & 1u);
    }
  return code;
}

LabeledGraph make_graph(int n, const std::vector<int>& lab, unsigned edges) {
  LabeledGraph g(Mode::Product);
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), kLabels[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edges >> edge_bit(n, u, v) & 1u) g.add_edge(u, v);
  return g;
}

// Multisets of labels whose direct product has order at most `bound`.
std::vector<std::vector<std::string>> clique_label_sets(std::size_t bound) {
  std::vector<std::vector<std::string>> out;
  std::function<void(std::size_t, std::size_t, std::vector<std::string>&)> rec =
      [&](std::size_t from, std::size_t order, std::vector<std::string>& cur) {
        if (!cur.empty()) out.push_back(cur);
        for (std::size_t i = from; i < kLabels.size(); ++i) {
          std::size_t o = order * kOrders.at(kLabels[i]);
          if (o > bound) continue;
          cur.push_back(kLabels[i]);
          rec(i, o, cur);
          cur.pop_back();
        }
      };
  std::vector<std::string> cur;
  rec(0, 1, cur);
  return out;
}

LabeledGraph clique_graph(const std::vector<std::string>& labels) {
  LabeledGraph g(Mode::Product);
  for (std::size_t i = 0; i < labels.size(); ++i) g.add_vertex("v" + std::to_string(i), labels[i]);
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) g.add_edge(u, v);
  return g;
}

Outcome reconstruction() {
  std::size_t labelled = 0, orbit_total = 0, classes = 0, bad = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> perms;
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    const unsigned masks = 1u << (n * (n - 1) / 2);
    std::size_t labelings = 1;
    for (int i = 0; i < n; ++i) labelings *= 4;
    labelled += masks * labelings;
    std::vector<int> lab(static_cast<std::size_t>(n));
    for (std::size_t l = 0; l < labelings; ++l) {
      for (int i = 0, x = static_cast<int>(l); i < n; ++i, x /= 4) lab[static_cast<std::size_t>(i)] = x % 4;
      if (!std::is_sorted(lab.begin(), lab.end())) continue;  // a canonical code has sorted labels
      for (unsigned e = 0; e < masks; ++e) {
        std::uint64_t own = graph_code(n, lab, e, perms[0]);
        std::size_t stab = 0;
        bool canonical = true;
        for (const auto& p : perms) {
          std::uint64_t c = graph_code(n, lab, e, p);
          if (c < own) {
            canonical = false;
            break;
          }
          stab += c == own;
        }
        if (!canonical) continue;
        ++classes;
        orbit_total += perms.size() / stab;
        auto g = graph::split_indecomposable(make_graph(n, lab, e));
        auto cp = recon::clique_poset(g);
        bad += !graph::graph_isomorphic(g, recon::reconstruct_graph(cp.poset));
      }
    }
  }
  auto sets = clique_label_sets(200);
  std::size_t law_bad = 0, pairs = 0;
  for (const auto& s : sets) {
    auto r = recon::check_parabolic_laws(clique_graph(s));
    law_bad += !r.passed();
    pairs += r.pairs;
  }
  bool ok = bad == 0 && orbit_total == labelled && law_bad == 0;
  return {ok, fmt("reconstruction: %zu labelled graphs on <=5 vertices in %zu classes (orbit sum %zu), %zu "
                  "mismatches; meet/join laws in %zu clique products of order <=200 (%zu pairs), %zu failures",
                  labelled, classes, orbit_total, bad, sets.size(), pairs, law_bad)};
}

// 5 ----------------------------------------------------------------------

Outcome fingerprints(int jobs, std::uint64_t seed) {
  const int K = 6;
  const std::size_t B = 200;
  std::vector<LabeledGraph> reps;
  for (unsigned e = 0; e < 64; ++e) {
    auto g = make_graph(4, {0, 0, 0, 0}, e);
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const LabeledGraph& r) { return graph::graph_isomorphic(r, g); });
    if (fresh) reps.push_back(g);
  }
  fp::FingerprintOptions o;
  o.degree = K;
  o.bound = B;
  o.jobs = jobs;
  o.count_targets = {"S3", "D4", "S4"};
  std::vector<fp::Fingerprint> f;
  for (const auto& g : reps) f.push_back(fp::quotients_up_to(graph::presentation(g), o));

  std::mt19937_64 rng(seed);
  std::size_t relabel_bad = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<int> p{0, 1, 2, 3};
    std::shuffle(p.begin(), p.end(), rng);
    LabeledGraph h(Mode::Product);
    for (int v = 0; v < 4; ++v) h.add_vertex(reps[i].id(p[static_cast<std::size_t>(v)]), "C2");
    for (const auto& e : reps[i].edges()) h.add_edge(reps[i].id(e.u), reps[i].id(e.v));
    auto fh = fp::quotients_up_to(graph::presentation(h), o);
    auto c = fp::compare(f[i], fh);
    relabel_bad += c.verdict != fp::Verdict::Equal || c.counts != fp::Verdict::Equal;
  }

  std::size_t pairs = 0, set_equal = 0, count_equal = 0, incomplete = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    incomplete += !f[i].complete;
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      ++pairs;
      auto c = fp::compare(f[i], f[j]);
      set_equal += c.verdict != fp::Verdict::Differ;
      count_equal += c.counts != fp::Verdict::Differ;
    }
  }
  Outcome out;
  out.pass = reps.size() == 11 && relabel_bad == 0 && set_equal == 0 && incomplete == 0;
  // The set comparison cannot separate every pair in this range; only that
  // part is documented as unattainable.
  out.known = !out.pass && reps.size() == 11 && relabel_bad == 0 && incomplete == 0 && count_equal == 0;
  out.detail = fmt("fingerprints K=%d B=%zu: %zu classes, %zu/%zu pairs with equal quotient sets, relabelling "
                   "mismatches %zu; epimorphism counts onto S3,D4,S4 leave %zu pairs equal",
                   K, B, reps.size(), set_equal, pairs, relabel_bad, count_equal);
  return out;
}

// 6 ----------------------------------------------------------------------

std::set<fin::Perm> closure(const std::vector<fin::Perm>& gens, int k) {
  std::set<fin::Perm> seen{fin::Perm::identity(k)};
  std::vector<fin::Perm> queue{fin::Perm::identity(k)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      auto y = queue[i] * g.extended(k);
      if (seen.insert(y).second) queue.push_back(y);
    }
  return seen;
}

bool brute_non_conjugate(const fp::SeparationReport& r) {
  int k = 1;
  for (const auto& p : r.quotient_generators) k = std::max(k, p.degree());
  auto whole = closure(r.quotient_generators, k);
  if (whole.size() != r.quotient_order) return false;
  auto a = closure(r.images_a, k), b = closure(r.images_b, k);
  for (const auto& x : whole) {
    std::set<fin::Perm> c;
    for (const auto& e : a) c.insert(x.inverse() * e * x);
    if (c == b) return false;
  }
  return true;
}

struct SepCase {
  LabeledGraph g;
  std::vector<std::string> a, b;
};

LabeledGraph product(std::vector<std::pair<std::string, std::string>> vs, std::vector<std::pair<std::string, std::string>> es) {
  LabeledGraph g(Mode::Product);
  for (auto& [id, grp] : vs) g.add_vertex(id, grp);
  for (auto& [u, v] : es) g.add_edge(u, v);
  return g;
}

LabeledGraph coxeter(std::vector<std::string> vs, std::vector<std::tuple<std::string, std::string, int>> es) {
  LabeledGraph g(Mode::Coxeter);
  for (auto& id : vs) g.add_vertex(id);
  for (auto& [u, v, m] : es) g.add_edge(u, v, m);
  return g;
}

Outcome separation() {
  auto c2 = [](std::vector<std::string> ids) {
    std::vector<std::pair<std::string, std::string>> v;
    for (auto& i : ids) v.emplace_back(i, "C2");
    return v;
  };
  std::vector<SepCase> cases{
      {product(c2({"a", "b"}), {}), {"a"}, {"b"}},
      {product(c2({"a", "b", "c"}), {{"a", "b"}, {"b", "c"}}), {"a"}, {"c"}},
      {product(c2({"a", "b", "c"}), {{"a", "b"}, {"b", "c"}}), {"c b a b c"}, {"b c"}},
      {product(c2({"a", "b"}), {{"a", "b"}}), {"a"}, {"a b"}},
      {product(c2({"a", "b", "c", "d"}), {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}), {"a", "b"}, {"b", "c"}},
      {product(c2({"a", "b", "c", "d"}), {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}), {"a b"}, {"d a b a d"}},
      {product({{"x", "S3"}, {"y", "C2"}}, {}), {"x.1"}, {"y"}},
      {product({{"z", "C4"}, {"w", "C2"}}, {{"z", "w"}}), {"z^2"}, {"w"}},
      {coxeter({"a", "b", "c"}, {{"a", "b", 4}}), {"a"}, {"c b c"}},
      {coxeter({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 6}, {"a", "c", 2}}), {"a b a"}, {"c"}},
  };
  std::size_t ok = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto r = fp::separating_quotient(cases[i].g, cases[i].a, cases[i].b);
    bool good = r.verdict == fp::SeparationVerdict::Separated && brute_non_conjugate(r);
    ok += good;
    if (!good && first_bad.empty()) first_bad = "case " + std::to_string(i + 1) + ": " + fp::to_string(r.verdict);
  }
  return {ok == cases.size(), fmt("separation: %zu/%zu non-conjugate pairs separated and confirmed by brute force%s", ok,
                                  cases.size(), first_bad.empty() ? "" : ("; " + first_bad).c_str())};
}

// 7 ----------------------------------------------------------------------

Outcome fibre_mechanics() {
  fin::GroupPresentation dinf;
  dinf.generators = {"a", "b"};
  dinf.relators = {dinf.parse_word("a^2"), dinf.parse_word("b^2")};
  std::vector<fin::Perm> v4{fin::Perm::parse("(1,2)", 4), fin::Perm::parse("(3,4)", 4)};
  std::string detail;
  bool ok = true;
  for (std::size_t d : {2u, 3u}) {
    auto s = fib::FibreSpec::power({dinf, v4}, d, 4, v4);
    auto gens = fib::fibre_generators(s);
    auto rep = fib::verify_fibre(s, gens);
    std::vector<fib::FibreGenerator> mutated;
    for (const auto& g : gens)
      if (g.kind == fib::TupleKind::Diagonal) mutated.push_back(g);
    fib::VerifyOptions o;
    o.max_rows = 20'000;
    auto bad = fib::verify_fibre(s, mutated, o);
    bool detected = !bad.passed() && bad.index_lower_bound > bad.expected_index;
    ok = ok && rep.passed() && rep.index == rep.expected_index && detected;
    detail += fmt("%sd=%zu index %zu (expected %zu), mutation index >= %zu%s", detail.empty() ? "" : "; ", d,
                  rep.index.value_or(0), rep.expected_index, bad.index_lower_bound, detected ? " detected" : " MISSED");
  }
  return {ok, "fibre products of D_inf over C2 x C2: " + detail};
}

// 8 ----------------------------------------------------------------------

std::vector<rw::CoxeterWord> all_words(int gens, int max_len) {
  std::vector<rw::CoxeterWord> out{{}};
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

Outcome word_problems(std::uint64_t seed) {
  std::size_t pairs = 0, cox_bad = 0;
  for (int m : {3, 4}) {
    auto g = coxeter({"a", "b", "c"}, {{"a", "b", m}, {"b", "c", 3}, {"a", "c", 2}});
    auto table = fin::coset_enumerate(graph::coxeter_presentation(g), {});
    auto words = all_words(3, 6);
    std::vector<int> elem;
    for (const auto& w : words) {
      fin::FreeWord fw;
      for (int v : w) fw.push_back(v + 1);
      elem.push_back(table.trace(0, fw));
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i; j < words.size(); ++j, ++pairs)
        cox_bad += rw::coxeter_equal(g, words[i], words[j]) != (elem[i] == elem[j]);
  }

  std::mt19937_64 rng(seed);
  auto sets = clique_label_sets(200);
  std::size_t words_checked = 0, prod_bad = 0;
  for (const auto& s : sets) {
    auto g = clique_graph(s);
    rw::GraphProduct gp(g);
    std::vector<int> offset{0};
    for (int v = 0; v < g.size(); ++v) offset.push_back(offset.back() + gp.vertex_group(v).degree());
    const int deg = offset.back();
    auto eval = [&](const rw::ProductWord& w) {
      fin::Perm acc = fin::Perm::identity(deg);
      for (const auto& syl : w) {
        const auto& x = gp.vertex_group(syl.vertex).element(syl.elem);
        std::vector<int> img(static_cast<std::size_t>(deg));
        std::iota(img.begin(), img.end(), 0);
        for (int p = 0; p < x.degree(); ++p)
          img[static_cast<std::size_t>(offset[static_cast<std::size_t>(syl.vertex)] + p)] =
              offset[static_cast<std::size_t>(syl.vertex)] + x[p];
        acc = acc * fin::Perm::from_images(img);
      }
      return acc;
    };
    std::map<fin::Perm, rw::ProductWord> nf_of;
    std::map<rw::ProductWord, fin::Perm> elem_of;
    for (int t = 0; t < 300; ++t, ++words_checked) {
      rw::ProductWord w;
      int len = static_cast<int>(rng() % 13);
      for (int i = 0; i < len; ++i) {
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.size()));
        int e = static_cast<int>(rng() % gp.vertex_group(v).order());
        w.push_back({v, e});
      }
      auto nf = gp.normal_form(w);
      auto x = eval(w);
      bool good = eval(nf) == x && gp.normal_form(nf) == nf;
      auto [it, fresh] = nf_of.emplace(x, nf);
      good = good && it->second == nf;
      auto [jt, fresh2] = elem_of.emplace(nf, x);
      good = good && jt->second == x;
      prod_bad += !good;
    }
  }
  return {cox_bad == 0 && prod_bad == 0,
          fmt("word problems: %zu A3/B3 word pairs, %zu disagreements; %zu words in %zu clique products, %zu "
              "disagreements",
              pairs, cox_bad, words_checked, sets.size(), prod_bad)};
}

// 9 ----------------------------------------------------------------------

Outcome checklist() {
  std::vector<fin::PermGroup> finite;
  finite.emplace_back(2, std::vector<fin::Perm>{fin::Perm::parse("(1,2)")});
  finite.emplace_back(4, std::vector<fin::Perm>{fin::Perm::parse("(1,2)", 4), fin::Perm::parse("(3,4)", 4)});
  finite.push_back(fin::symmetric_group(3));
  finite.push_back(fin::symmetric_group(5));
  std::size_t honest = 0;
  for (const auto& q : finite) {
    auto l = fib::hypothesis_checklist(q);
    honest += l.hypotheses.at(1).status == fib::CheckStatus::Fail && !l.all_pass();
  }
  std::size_t vn_ok = 0;
  for (int n : {2, 4, 6}) {
    auto l = fib::hypothesis_checklist_vn(n);
    bool cited = std::all_of(l.hypotheses.begin(), l.hypotheses.end(),
                             [](const fib::Hypothesis& h) { return h.source.rfind("cited:", 0) == 0; });
    vn_ok += l.all_pass() && cited;
  }
  auto data = fib::vn_epimorphism_data(3, 2);
  bool ok = honest == finite.size() && vn_ok == 3 && data.well_defined() && data.transpositions == 36 &&
            data.reached == 36;
  return {ok, fmt("hypothesis ledger: %zu/%zu finite targets fail 'no finite quotients'; V_n (n=2,4,6) %zu/3 pass "
                  "with citations; V_3 images involutions: %s, depth-2 transpositions reached %zu/%zu",
                  honest, finite.size(), vn_ok, data.well_defined() ? "yes" : "no", data.reached, data.transpositions)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one line each"};
  std::vector<int> only;
  int jobs = static_cast<int>(std::max(1u, std::min(4u, std::thread::hardware_concurrency())));
  std::uint64_t seed = 20240601;
  app.add_option("--only", only, "Run just these criteria")->check(CLI::Range(1, 9));
  app.add_option("--jobs", jobs, "Workers for the fingerprint search")->check(CLI::Range(1, 64));
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, claim_chain},
      {2, figures},
      {3, [&] { return group_axioms(seed); }},
      {4, reconstruction},
      {5, [&] { return fingerprints(jobs, seed); }},
      {6, separation},
      {7, fibre_mechanics},
      {8, [&] { return word_problems(seed); }},
      {9, checklist},
  };
  int hard_failures = 0;
  for (const auto& [id, run] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%d] %s  %s (%.1f s)%s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                !o.pass && o.known ? "  [known unattainable]" : "");
    std::fflush(stdout);
    if (!o.pass && !o.known) ++hard_failures;
  }
  return hard_failures == 0 ? 0 : 1;
}
