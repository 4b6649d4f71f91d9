#include "cgt/rewriting/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt::rw {

namespace {

using Key = std::string;

void require_coxeter(const graph::LabeledGraph& g) {
  if (g.mode() != graph::Mode::Coxeter) throw InvalidInput("Coxeter word problem needs a coxeter-mode graph");
  if (g.size() > 250) throw InvalidInput("too many vertices");
}

Key to_key(const CoxeterWord& w) {
  Key k;
  k.reserve(w.size());
  for (int v : w) k.push_back(static_cast<char>(v));
  return k;
}

CoxeterWord from_key(const Key& k) {
  CoxeterWord w;
  for (char c : k) w.push_back(static_cast<unsigned char>(c));
  return w;
}

Key cancel_pairs(const Key& k) {
  Key out;
  for (char c : k) {
    if (!out.empty() && out.back() == c) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

struct Budget {
  std::size_t used = 0;
  std::size_t limit;
  void charge() {
    if (++used > limit) throw BudgetExceeded("Coxeter rewriting exceeded its word budget");
  }
};

template <typename Visit>
void for_each_braid(const graph::LabeledGraph& g, const Key& k, Visit&& visit) {
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const char s = k[i], t = k[i + 1];
    if (s == t) continue;
    const int m = g.label(static_cast<unsigned char>(s), static_cast<unsigned char>(t));
    if (m == 0 || i + static_cast<std::size_t>(m) > k.size()) continue;
    bool alternating = true;
    for (int j = 2; j < m && alternating; ++j) alternating = k[i + static_cast<std::size_t>(j)] == (j % 2 ? t : s);
    if (!alternating) continue;
    Key y = k;
    for (int j = 0; j < m; ++j) y[i + static_cast<std::size_t>(j)] = j % 2 ? s : t;
    visit(std::move(y));
  }
}

// Explores the braid class of k; returns a shorter word as soon as some
// member has two equal adjacent letters, else k itself.
Key shorten_once(const graph::LabeledGraph& g, const Key& k, Budget& budget) {
  std::unordered_set<Key> seen{k};
  std::deque<Key> queue{k};
  while (!queue.empty()) {
    Key x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] == x[i + 1]) return cancel_pairs(x);
    for_each_braid(g, x, [&](Key y) {
      if (seen.insert(y).second) {
        budget.charge();
        queue.push_back(std::move(y));
      }
    });
  }
  return k;
}

Key reduce_key(const graph::LabeledGraph& g, Key k, Budget& budget) {
  k = cancel_pairs(k);
  for (;;) {
    Key next = shorten_once(g, k, budget);
    if (next.size() == k.size()) return k;
    k = std::move(next);
  }
}

}  // namespace

CoxeterWord parse_coxeter_word(const graph::LabeledGraph& g, std::string_view text) {
  require_coxeter(g);
  CoxeterWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    long long e = 1;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        e = std::stoll(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("exponent");
      } catch (const std::exception&) {
        throw InvalidInput("bad exponent in '" + tok + "'");
      }
    }
    int v = g.require(name);
    if (e % 2) w.push_back(v);
  }
  return w;
}

std::string format_coxeter_word(const graph::LabeledGraph& g, const CoxeterWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + g.id(w[i]);
  return out;
}

CoxeterWord coxeter_reduce(const graph::LabeledGraph& g, const CoxeterWord& w, const RewriteOptions& opts) {
  require_coxeter(g);
  Budget budget{0, opts.max_words};
  return from_key(reduce_key(g, to_key(w), budget));
}

CoxeterWord coxeter_normal_form(const graph::LabeledGraph& g, const CoxeterWord& w, const RewriteOptions& opts) {
  require_coxeter(g);
  Budget budget{0, opts.max_words};
  Key r = reduce_key(g, to_key(w), budget);
  // Reduced expressions of one element form a single braid class.
  std::unordered_set<Key> seen{r};
  std::deque<Key> queue{r};
  Key best = r;
  while (!queue.empty()) {
    Key x = std::move(queue.front());
    queue.pop_front();
    if (x < best) best = x;
    for_each_braid(g, x, [&](Key y) {
      if (seen.insert(y).second) {
        budget.charge();
        queue.push_back(std::move(y));
      }
    });
  }
  return from_key(best);
}

bool coxeter_equal(const graph::LabeledGraph& g, const CoxeterWord& a, const CoxeterWord& b,
                   const RewriteOptions& opts) {
  CoxeterWord w = a;
  w.insert(w.end(), b.rbegin(), b.rend());
  return coxeter_reduce(g, w, opts).empty();
}

CoxeterWord coxeter_retraction(const graph::LabeledGraph& g, const std::vector<int>& x, const CoxeterWord& w,
                               const RewriteOptions& opts) {
  require_coxeter(g);
  for (const auto& e : g.edges())
    if (e.m % 2) throw InvalidInput("retraction onto a vertex subset needs every edge label even");
  std::vector<char> keep(static_cast<std::size_t>(g.size()), 0);
  for (int v : x) {
    if (v < 0 || v >= g.size()) throw InvalidInput("retraction subset names a vertex out of range");
    keep[static_cast<std::size_t>(v)] = 1;
  }
  CoxeterWord out;
  for (int v : w)
    if (keep[static_cast<std::size_t>(v)]) out.push_back(v);
  return coxeter_reduce(g, out, opts);
}

}  // namespace cgt::rw
