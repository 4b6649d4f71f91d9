#include "cgt/fibre/fibre.hpp"

#include <algorithm>
#include <map>

#include "cgt/error.hpp"
#include "cgt/fingerprint/homsearch.hpp"
#include "cgt/thompson/synthesis.hpp"
#include "cgt/thompson/vn_element.hpp"
#include "json.hpp"

namespace cgt::fib {

using fin::FreeWord;
using fin::Perm;
using fin::PermGroup;
using nlohmann::json;

namespace {

std::vector<Perm> extended(const std::vector<Perm>& ps, int degree) {
  std::vector<Perm> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    if (p.degree() > degree) throw InvalidInput("image moves points beyond the target degree");
    out.push_back(p.extended(degree));
  }
  return out;
}

bool same_factor(const Factor& a, const Factor& b) {
  return a.presentation.generators == b.presentation.generators &&
         a.presentation.relators == b.presentation.relators && a.images == b.images;
}

std::size_t checked_pow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > SIZE_MAX / base) throw BudgetExceeded("index |Q|^(d-1) overflows");
    r *= base;
  }
  return r;
}

}  // namespace

void FibreSpec::validate(std::size_t max_order) const {
  if (factors.size() < 2) throw InvalidInput("a fibre product needs at least two factors");
  PermGroup q = target(max_order);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    f.presentation.validate();
    const std::string where = "factor " + std::to_string(i + 1);
    if (f.images.size() != f.presentation.generators.size())
      throw InvalidInput(where + ": need one image per generator");
    auto imgs = extended(f.images, degree);
    for (const auto& r : f.presentation.relators)
      if (!fin::evaluate_word(imgs, r, degree).is_identity())
        throw InvalidInput(where + ": relator " + f.presentation.format_word(r) + " does not map to 1");
    for (const auto& x : imgs)
      if (!q.contains(x)) throw InvalidInput(where + ": image " + x.to_cycle_string() + " is not in Q");
    PermGroup img(degree, imgs, max_order);
    if (img.order() != q.order())
      throw InvalidInput(where + ": map is not onto Q (image order " + std::to_string(img.order()) + " of " +
                         std::to_string(q.order()) + ")");
  }
}

PermGroup FibreSpec::target(std::size_t max_order) const {
  return PermGroup(degree, extended(target_generators, degree), max_order);
}

FibreSpec FibreSpec::power(const Factor& f, std::size_t d, int degree, std::vector<Perm> target_generators) {
  FibreSpec s;
  s.factors.assign(d, f);
  s.degree = degree;
  s.target_generators = std::move(target_generators);
  return s;
}

std::vector<FibreGenerator> fibre_generators(const FibreSpec& s, std::size_t max_order) {
  s.validate(max_order);
  const std::size_t d = s.d();
  std::vector<FibreGenerator> out;

  const auto first = extended(s.factors[0].images, s.degree);
  std::vector<std::optional<PermGroup>> lifts(d);
  for (std::size_t i = 1; i < d; ++i)
    if (!same_factor(s.factors[i], s.factors[0]))
      lifts[i].emplace(s.degree, extended(s.factors[i].images, s.degree), max_order);

  for (std::size_t j = 0; j < first.size(); ++j) {
    FibreGenerator g;
    g.kind = TupleKind::Diagonal;
    g.source = j;
    g.words.resize(d);
    g.words[0] = {static_cast<int>(j) + 1};
    for (std::size_t i = 1; i < d; ++i) {
      if (!lifts[i]) {
        g.words[i] = g.words[0];
        continue;
      }
      for (int k : lifts[i]->word_of(lifts[i]->index_of(first[j]))) g.words[i].push_back(k + 1);
    }
    out.push_back(std::move(g));
  }

  for (std::size_t i = 0; i < d; ++i) {
    const auto& f = s.factors[i];
    auto ker = fin::kernel_generators(f.presentation, extended(f.images, s.degree), s.degree, max_order);
    for (std::size_t k = 0; k < ker.size(); ++k) {
      FibreGenerator g;
      g.kind = TupleKind::Kernel;
      g.coordinate = i;
      g.source = k;
      g.words.resize(d);
      g.words[i] = ker[k];
      out.push_back(std::move(g));
    }
  }
  return out;
}

fin::GroupPresentation product_presentation(const FibreSpec& s) {
  fin::GroupPresentation p;
  std::vector<int> offset;
  for (std::size_t i = 0; i < s.d(); ++i) {
    offset.push_back(static_cast<int>(p.generators.size()));
    for (const auto& g : s.factors[i].presentation.generators) p.generators.push_back(g + "_" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < s.d(); ++i)
    for (const auto& r : s.factors[i].presentation.relators) {
      FreeWord w;
      for (int l : r) w.push_back(l > 0 ? l + offset[i] : l - offset[i]);
      p.relators.push_back(std::move(w));
    }
  for (std::size_t i = 0; i < s.d(); ++i)
    for (std::size_t j = i + 1; j < s.d(); ++j)
      for (std::size_t a = 0; a < s.factors[i].presentation.generators.size(); ++a)
        for (std::size_t b = 0; b < s.factors[j].presentation.generators.size(); ++b) {
          int x = offset[i] + static_cast<int>(a) + 1;
          int y = offset[j] + static_cast<int>(b) + 1;
          p.relators.push_back({-x, -y, x, y});
        }
  return p;
}

FreeWord product_word(const FibreSpec& s, const WordTuple& t) {
  if (t.size() != s.d()) throw InvalidInput("tuple length differs from the number of factors");
  FreeWord w;
  int offset = 0;
  for (std::size_t i = 0; i < s.d(); ++i) {
    for (int l : t[i]) w.push_back(l > 0 ? l + offset : l - offset);
    offset += static_cast<int>(s.factors[i].presentation.generators.size());
  }
  return w;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool FibreReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FibreCheck& c) { return c.status == CheckStatus::Pass; });
}

std::string FibreReport::to_json(int indent) const {
  json j;
  j["checks"] = json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["expected_index"] = expected_index;
  j["index"] = index ? json(*index) : json(nullptr);
  j["index_lower_bound"] = index_lower_bound;
  j["passed"] = passed();
  return j.dump(indent);
}

std::size_t index_lower_bound(const FibreSpec& s, const std::vector<FibreGenerator>& gens, int max_degree,
                              std::size_t max_pairs) {
  const std::size_t d = s.d();
  std::size_t best = 1;
  for (int k = 2; k <= std::min(max_degree, 7); ++k) {
    std::vector<std::vector<std::vector<Perm>>> homs(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (i > 0 && same_factor(s.factors[i], s.factors[0])) {
        homs[i] = homs[0];
        continue;
      }
      fp::HomSearchOptions o;
      o.degree = k;
      o.max_image_order = 5040;
      auto r = fp::search_homomorphisms(s.factors[i].presentation, o);
      homs[i] = std::move(r.images);
    }
    if (std::any_of(homs.begin(), homs.end(), [](const auto& h) { return h.empty(); })) continue;

    // Mixed-radix walk over one homomorphism per factor.
    std::vector<std::size_t> pick(d, 0);
    for (std::size_t visited = 0; visited < max_pairs; ++visited) {
      std::size_t product_order = 1;
      std::vector<Perm> sub;
      for (const auto& g : gens) {
        std::vector<int> img;
        for (std::size_t i = 0; i < d; ++i) {
          Perm x = fin::evaluate_word(homs[i][pick[i]], g.words[i], k);
          for (int p = 0; p < k; ++p) img.push_back(x[p] + static_cast<int>(i) * k);
        }
        sub.push_back(Perm::from_images(std::move(img)));
      }
      for (std::size_t i = 0; i < d; ++i) product_order *= PermGroup(k, homs[i][pick[i]], 5040).order();
      PermGroup h(static_cast<int>(d) * k, sub, product_order + 1);
      best = std::max(best, product_order / h.order());

      std::size_t i = 0;
      while (i < d && ++pick[i] == homs[i].size()) pick[i++] = 0;
      if (i == d) break;
    }
  }
  return best;
}

FibreReport verify_fibre(const FibreSpec& s, const std::vector<FibreGenerator>& gens, const VerifyOptions& opts) {
  s.validate(opts.max_order);
  const std::size_t d = s.d();
  FibreReport rep;
  PermGroup q = s.target(opts.max_order);
  rep.expected_index = checked_pow(q.order(), d - 1);

  {
    FibreCheck c{"fibre condition", CheckStatus::Pass, "all tuples map to the diagonal of Q^d"};
    for (std::size_t t = 0; t < gens.size() && c.status == CheckStatus::Pass; ++t) {
      if (gens[t].words.size() != d) throw InvalidInput("tuple length differs from the number of factors");
      Perm base = fin::evaluate_word(extended(s.factors[0].images, s.degree), gens[t].words[0], s.degree);
      for (std::size_t i = 1; i < d; ++i) {
        Perm x = fin::evaluate_word(extended(s.factors[i].images, s.degree), gens[t].words[i], s.degree);
        if (x != base) {
          c.status = CheckStatus::Fail;
          c.detail = "tuple " + std::to_string(t + 1) + ": coordinate " + std::to_string(i + 1) + " maps to " +
                     x.to_cycle_string() + ", coordinate 1 to " + base.to_cycle_string();
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    FibreCheck c{"projections onto factors", CheckStatus::Pass, "every projection has index 1"};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<FreeWord> sub;
      for (const auto& g : gens)
        if (!g.words[i].empty()) sub.push_back(g.words[i]);
      try {
        auto t = fin::coset_enumerate(s.factors[i].presentation, sub, {opts.max_rows});
        if (t.index() != 1) {
          c.status = CheckStatus::Fail;
          c.detail = "projection " + std::to_string(i + 1) + " has index " + std::to_string(t.index());
          break;
        }
      } catch (const BudgetExceeded&) {
        c.status = CheckStatus::Inconclusive;
        c.detail = "projection " + std::to_string(i + 1) + ": coset enumeration exceeded the row budget";
      }
    }
    rep.checks.push_back(std::move(c));
  }

  const auto pres = product_presentation(s);
  {
    FibreCheck c{"index", CheckStatus::Pass, ""};
    std::vector<FreeWord> sub;
    for (const auto& g : gens) sub.push_back(product_word(s, g.words));
    try {
      rep.table = fin::coset_enumerate(pres, sub, {opts.max_rows});
      rep.index = rep.table->index();
      rep.index_lower_bound = *rep.index;
      c.detail = "index " + std::to_string(*rep.index) + ", expected " + std::to_string(rep.expected_index);
      if (*rep.index != rep.expected_index) c.status = CheckStatus::Fail;
    } catch (const BudgetExceeded&) {
      rep.index_lower_bound = index_lower_bound(s, gens, opts.quotient_degree, opts.max_quotient_pairs);
      c.detail = "coset enumeration exceeded " + std::to_string(opts.max_rows) + " rows; finite quotients give index >= " +
                 std::to_string(rep.index_lower_bound) + ", expected " + std::to_string(rep.expected_index);
      c.status = rep.index_lower_bound > rep.expected_index ? CheckStatus::Fail : CheckStatus::Inconclusive;
    }
    rep.checks.push_back(std::move(c));
  }

  {
    FibreCheck c{"kernel of the first map", CheckStatus::Pass, ""};
    const auto& f = s.factors[0];
    auto ker = fin::kernel_generators(f.presentation, extended(f.images, s.degree), s.degree, opts.max_order);
    if (!rep.table) {
      c.status = CheckStatus::Inconclusive;
      c.detail = "no coset table";
    } else {
      c.detail = std::to_string(ker.size()) + " kernel generators in the first coordinate";
      for (const auto& k : ker) {
        WordTuple t(d);
        t[0] = k;
        if (rep.table->trace(0, product_word(s, t)) != 0) {
          c.status = CheckStatus::Fail;
          c.detail = "(" + f.presentation.format_word(k) + ", 1, ...) is not in the subgroup";
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

bool HypothesisLedger::all_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.status == CheckStatus::Pass; });
}

std::string HypothesisLedger::to_json(int indent) const {
  json j;
  j["target"] = target;
  j["degenerate"] = degenerate;
  j["all_pass"] = all_pass();
  j["hypotheses"] = json::array();
  for (const auto& h : hypotheses)
    j["hypotheses"].push_back({{"name", h.name}, {"status", to_string(h.status)}, {"source", h.source}});
  return j.dump(indent);
}

std::vector<std::size_t> abelian_invariants(const PermGroup& q) {
  if (!q.is_abelian()) throw InvalidInput("group is not abelian");
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < q.order(); ++i) orders.push_back(static_cast<std::size_t>(q.element_order(static_cast<int>(i))));
  std::vector<std::size_t> out;
  std::size_t n = q.order();
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p) continue;
    std::size_t full = 1;
    while (n % p == 0) n /= p, full *= p;
    // c[k] = log_p #{x : x^(p^k) = 1} = sum_i min(k, e_i).
    std::vector<std::size_t> c{0};
    for (std::size_t pk = p, count = 0; count < full; pk *= p) {
      count = static_cast<std::size_t>(std::count_if(orders.begin(), orders.end(),
                                                     [&](std::size_t o) { return pk % o == 0; }));
      std::size_t e = 0;
      for (std::size_t x = count; x > 1; x /= p) ++e;
      c.push_back(e);
    }
    // Number of cyclic factors of exponent >= k is c[k] - c[k-1].
    for (std::size_t k = 1; k < c.size(); ++k) {
      std::size_t ge_k = c[k] - c[k - 1];
      std::size_t ge_next = k + 1 < c.size() ? c[k + 1] - c[k] : 0;
      std::size_t pk = 1;
      for (std::size_t t = 0; t < k; ++t) pk *= p;
      for (std::size_t t = ge_next; t < ge_k; ++t) out.push_back(pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> abelian_schur_multiplier(const std::vector<std::size_t>& primary) {
  std::map<std::size_t, std::vector<std::size_t>> by_prime;
  for (std::size_t q : primary) {
    if (q < 2) continue;
    std::size_t p = 2;
    while (q % p) ++p;
    by_prime[p].push_back(q);
  }
  std::vector<std::size_t> out;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.begin(), qs.end());
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j) out.push_back(qs[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return "trivial";
  std::string s;
  for (std::size_t x : xs) s += (s.empty() ? "C" : " x C") + std::to_string(x);
  return s;
}

}  // namespace

HypothesisLedger hypothesis_checklist(const PermGroup& q) {
  HypothesisLedger l;
  const std::size_t n = q.order();
  l.target = "finite group of order " + std::to_string(n);
  l.degenerate = n == 1;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < q.generators().size(); ++i) names.push_back("g" + std::to_string(i + 1));
  auto pres = fin::presentation_of(q, names, false);
  l.hypotheses.push_back({"finitely presented", CheckStatus::Pass,
                          "computed: presentation on " + std::to_string(pres.generators.size()) + " generators with " +
                              std::to_string(pres.relators.size()) + " relators"});

  if (n == 1)
    l.hypotheses.push_back({"no non-trivial finite quotients", CheckStatus::Pass, "computed: trivial group"});
  else
    l.hypotheses.push_back({"no non-trivial finite quotients", CheckStatus::Fail,
                            "computed: Q is a non-trivial finite quotient of itself (order " + std::to_string(n) + ")"});

  if (q.is_abelian()) {
    auto inv = abelian_invariants(q);
    auto m = abelian_schur_multiplier(inv);
    l.hypotheses.push_back({"H2(Q;Z) = 0", m.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                            "computed: Q = " + join_sizes(inv) + ", Schur multiplier " + join_sizes(m)});
  } else {
    l.hypotheses.push_back({"H2(Q;Z) = 0", CheckStatus::Inconclusive, "not computed for non-abelian Q"});
  }
  return l;
}

HypothesisLedger hypothesis_checklist_vn(int n) {
  if (n < 2) throw InvalidInput("V_n needs n >= 2");
  HypothesisLedger l;
  l.target = "V_" + std::to_string(n);
  l.hypotheses.push_back(
      {"finitely presented", CheckStatus::Pass, "cited: Higman (1974), finitely presented infinite simple groups"});
  if (n % 2 == 0) {
    l.hypotheses.push_back({"no non-trivial finite quotients", CheckStatus::Pass,
                            "cited: V_n is simple for even n (Higman 1974); an infinite simple group has no "
                            "non-trivial finite quotient"});
    l.hypotheses.push_back({"H2(Q;Z) = 0", CheckStatus::Pass, "cited: Kapoudjian (2002), Theorem 0.1"});
    return l;
  }
  // For odd n the permutation parity of a tree-pair diagram is well defined
  // and gives a map onto C2.
  std::string detail = "computed: parity is a homomorphism onto C2 for odd n";
  for (int k = 1; k <= 4 && n >= 3; ++k)
    if (vn::class_parity(vn::generator(n, k)) == vn::Parity::Odd) {
      detail += "; b" + std::to_string(k) + " is odd";
      break;
    }
  l.hypotheses.push_back({"no non-trivial finite quotients", CheckStatus::Fail, detail});
  l.hypotheses.push_back(
      {"H2(Q;Z) = 0", CheckStatus::Inconclusive, "not established here: the cited vanishing is used for even n"});
  return l;
}

bool VnEpimorphismData::well_defined() const {
  return involutions.size() == 4 && std::all_of(involutions.begin(), involutions.end(), [](bool b) { return b; });
}

std::string VnEpimorphismData::to_json(int indent) const {
  json j;
  j["n"] = n;
  j["images"] = images;
  j["involutions"] = involutions;
  j["well_defined"] = well_defined();
  j["depth"] = depth;
  j["transpositions"] = transpositions;
  j["reached"] = reached;
  j["misses"] = misses;
  return j.dump(indent);
}

VnEpimorphismData vn_epimorphism_data(int n, int depth) {
  if (n < 3) throw InvalidInput("the four involutions need n >= 3");
  if (depth < 1) throw InvalidInput("evidence depth must be at least 1");
  VnEpimorphismData out;
  out.n = n;
  out.depth = depth;
  for (int k = 1; k <= 4; ++k) {
    auto b = vn::generator(n, k);
    out.images.push_back(b.to_string());
    out.involutions.push_back(vn::compose(b, b).is_identity());
  }
  long long leaves = 1;
  for (int i = 0; i < depth; ++i) leaves *= n;
  vn::WordEvaluator eval(n);
  for (long long i = 0; i < leaves; ++i)
    for (long long j = i + 1; j < leaves; ++j) {
      auto a = vn::Address::from_index(i, n, depth);
      auto b = vn::Address::from_index(j, n, depth);
      ++out.transpositions;
      if (vn::equals(eval(vn::transposition_word(n, a, b)), vn::transposition_element(n, a, b)))
        ++out.reached;
      else
        out.misses.push_back(a.to_string() + " " + b.to_string());
    }
  return out;
}

}  // namespace cgt::fib
