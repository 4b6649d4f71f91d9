#include "cgt/finite/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "cgt/error.hpp"
#include "cgt/finite/coset.hpp"

namespace cgt::fin {

FreeWord free_reduce(FreeWord w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord inverse_word(const FreeWord& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

FreeWord power_word(const FreeWord& w, int k) {
  FreeWord base = k < 0 ? inverse_word(w) : w;
  FreeWord r;
  for (int i = 0; i < std::abs(k); ++i) r.insert(r.end(), base.begin(), base.end());
  return free_reduce(std::move(r));
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(std::move(r));
}

FreeWord cyclic_reduce(FreeWord w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

FreeWord reduce_powers(const FreeWord& w, const std::vector<int>& orders) {
  FreeWord cur = free_reduce(w);
  for (bool changed = true; changed;) {
    changed = false;
    FreeWord out;
    for (std::size_t i = 0; i < cur.size();) {
      int g = std::abs(cur[i]);
      long long e = 0;
      std::size_t j = i;
      while (j < cur.size() && std::abs(cur[j]) == g) {
        e += cur[j] > 0 ? 1 : -1;
        ++j;
      }
      long long len = static_cast<long long>(j - i);
      int ord = g - 1 < static_cast<int>(orders.size()) ? orders[static_cast<std::size_t>(g - 1)] : 0;
      if (ord > 0) {
        e %= ord;
        if (e > ord / 2) e -= ord;
        if (e < -(ord / 2)) e += ord;
        // For even orders keep the positive representative of ord/2.
        if (ord % 2 == 0 && e == -(ord / 2)) e = ord / 2;
      }
      if (std::llabs(e) != len) changed = true;
      for (long long t = 0; t < std::llabs(e); ++t) out.push_back(e > 0 ? g : -g);
      i = j;
    }
    FreeWord red = free_reduce(out);
    if (red.size() != out.size()) changed = true;
    cur = std::move(red);
  }
  return cur;
}

int GroupPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct WordParser {
  const GroupPresentation& p;
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  static bool name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '^';
  }
  int exponent() {
    skip();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num(s.substr(start, pos - start));
    if (num.empty() || num == "-" || num == "+") throw InvalidInput("missing exponent in word '" + std::string(s) + "'");
    return std::stoi(num);
  }
  FreeWord sequence(bool nested) {
    FreeWord w;
    for (;;) {
      skip();
      if (pos >= s.size()) {
        if (nested) throw InvalidInput("unbalanced parenthesis in word '" + std::string(s) + "'");
        return w;
      }
      if (s[pos] == ')') {
        if (!nested) throw InvalidInput("unbalanced parenthesis in word '" + std::string(s) + "'");
        ++pos;
        return w;
      }
      FreeWord atom;
      if (s[pos] == '(') {
        ++pos;
        atom = sequence(true);
      } else {
        std::size_t start = pos;
        while (pos < s.size() && name_char(s[pos])) ++pos;
        std::string name(s.substr(start, pos - start));
        if (name.empty()) throw InvalidInput("bad token in word '" + std::string(s) + "'");
        if (name == "1") {
          atom = {};
        } else {
          int g = p.generator_index(name);
          if (g < 0) throw InvalidInput("unknown generator '" + name + "'");
          atom = {g + 1};
        }
      }
      FreeWord powered = power_word(atom, exponent());
      w.insert(w.end(), powered.begin(), powered.end());
    }
  }
};

}  // namespace

FreeWord GroupPresentation::parse_word(std::string_view text) const {
  WordParser parser{*this, text};
  return free_reduce(parser.sequence(false));
}

std::string GroupPresentation::format_word(const FreeWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    int g = std::abs(w[i]);
    int e = 0;
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      e += w[j] > 0 ? 1 : -1;
      ++j;
    }
    if (!out.empty()) out += ' ';
    out += generators[static_cast<std::size_t>(g - 1)];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(relators[i]);
  }
  return out + ">";
}

void GroupPresentation::validate() const {
  std::set<std::string> names(generators.begin(), generators.end());
  if (names.size() != generators.size()) throw InvalidInput("duplicate generator names");
  for (const auto& r : relators)
    for (int l : r)
      if (l == 0 || std::abs(l) > static_cast<int>(generators.size()))
        throw InvalidInput("relator uses an undeclared generator");
}

std::vector<int> GroupPresentation::generator_orders() const {
  std::vector<int> ord(generators.size(), 0);
  for (const auto& r : relators) {
    FreeWord c = cyclic_reduce(r);
    if (c.empty()) continue;
    bool same = std::all_of(c.begin(), c.end(), [&](int l) { return l == c.front(); });
    if (!same) continue;
    auto g = static_cast<std::size_t>(std::abs(c.front()) - 1);
    int k = static_cast<int>(c.size());
    ord[g] = ord[g] == 0 ? k : std::gcd(ord[g], k);
  }
  return ord;
}

Perm evaluate_word(const std::vector<Perm>& images, const FreeWord& w, int degree) {
  Perm acc = Perm::identity(degree);
  for (int l : w) {
    const Perm& g = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    acc = acc * (l > 0 ? g : g.inverse());
  }
  return acc;
}

GroupPresentation presentation_of(const PermGroup& g, std::vector<std::string> names, bool prune) {
  const std::size_t k = g.generators().size();
  if (names.size() != k) throw InvalidInput("need one name per generator");
  GroupPresentation p;
  p.generators = std::move(names);
  std::vector<FreeWord> candidates;
  for (std::size_t i = 0; i < k; ++i) {
    int o = g.generators()[i].order();
    candidates.push_back(FreeWord(static_cast<std::size_t>(o), static_cast<int>(i) + 1));
  }
  std::vector<FreeWord> words(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (int t : g.word_of(static_cast<int>(x))) words[x].push_back(t + 1);
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t t = 0; t < k; ++t) {
      int y = g.mul(static_cast<int>(x), g.generator_index(t));
      FreeWord w = words[x];
      w.push_back(static_cast<int>(t) + 1);
      if (w == words[static_cast<std::size_t>(y)]) continue;  // spanning-tree edge
      FreeWord r = cyclic_reduce(concat(w, inverse_word(words[static_cast<std::size_t>(y)])));
      if (!r.empty()) candidates.push_back(std::move(r));
    }
  }
  {
    std::set<FreeWord> seen;
    std::vector<FreeWord> uniq;
    for (auto& r : candidates)
      if (seen.insert(r).second && !seen.count(inverse_word(r))) uniq.push_back(std::move(r));
    candidates = std::move(uniq);
  }
  std::stable_sort(candidates.begin() + static_cast<std::ptrdiff_t>(k), candidates.end(),
                   [](const FreeWord& a, const FreeWord& b) { return a.size() < b.size(); });
  if (!prune || k == 0) {
    p.relators = std::move(candidates);
    return p;
  }
  // Grow a relator set until it presents a group of the right order: add a
  // relator that fails in the current coset table, or the next shortest one
  // when enumeration does not finish.
  std::vector<char> used(candidates.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    p.relators.push_back(candidates[i]);
    used[i] = 1;
  }
  CosetOptions opts;
  opts.max_rows = std::max<std::size_t>(2000, 64 * g.order());
  for (;;) {
    std::size_t pick = candidates.size();
    try {
      CosetTable t = coset_enumerate(p, {}, opts);
      if (t.index() == g.order()) break;
      for (std::size_t i = 0; i < candidates.size() && pick == candidates.size(); ++i)
        if (!used[i] && t.trace(0, candidates[i]) != 0) pick = i;
      if (pick == candidates.size()) {
        for (std::size_t i = 0; i < candidates.size() && pick == candidates.size(); ++i) {
          if (used[i]) continue;
          for (std::size_t c = 0; c < t.index(); ++c) {
            if (t.trace(static_cast<int>(c), candidates[i]) != static_cast<int>(c)) {
              pick = i;
              break;
            }
          }
        }
      }
    } catch (const BudgetExceeded&) {
      for (std::size_t i = 0; i < candidates.size() && pick == candidates.size(); ++i)
        if (!used[i]) pick = i;
    }
    if (pick == candidates.size()) throw std::logic_error("relator search exhausted without reaching the group order");
    used[pick] = 1;
    p.relators.push_back(candidates[pick]);
  }
  return p;
}

}  // namespace cgt::fin
