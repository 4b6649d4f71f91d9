#include "cgt/finite/coset.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt::fin {

namespace {

inline std::size_t column(int letter) {
  return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
}

// HLT enumeration state. Rows are cosets; column 2i is generator i and 2i+1
// its inverse. Dead rows forward to a live representative through `fwd_`.
class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t max_rows) : cols_(2 * gens), max_rows_(max_rows) { new_row(); }

  void scan_and_fill(int c, const FreeWord& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    auto col = [&](int k) { return column(w[static_cast<std::size_t>(k)]); };
    for (;;) {
      while (i <= j && at(f, col(i)) >= 0) f = at(f, col(i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, col(j) ^ 1U) >= 0) b = at(b, col(j--) ^ 1U);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, col(i), b);
        return;
      }
      define(f, col(i));
    }
  }

  bool alive(int c) const { return fwd_[static_cast<std::size_t>(c)] == c; }
  std::size_t rows() const { return fwd_.size(); }
  std::size_t cols() const { return cols_; }
  int at(int c, std::size_t col) const { return table_[static_cast<std::size_t>(c) * cols_ + col]; }
  std::size_t live() const { return live_; }

  void define(int c, std::size_t col) {
    if (live_ >= max_rows_)
      throw BudgetExceeded("coset enumeration exceeded " + std::to_string(max_rows_) + " live cosets");
    int d = new_row();
    set(c, col, d);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int e = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        ref(f, x ^ 1U) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0)
          merge(f1, at(e1, x), queue);
        else if (at(f1, x ^ 1U) >= 0)
          merge(e1, at(f1, x ^ 1U), queue);
        else
          set(e1, x, f1);
      }
    }
  }

 private:
  int new_row() {
    int r = static_cast<int>(fwd_.size());
    fwd_.push_back(r);
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return r;
  }
  int& ref(int c, std::size_t col) { return table_[static_cast<std::size_t>(c) * cols_ + col]; }
  void set(int c, std::size_t col, int d) {
    ref(c, col) = d;
    ref(d, col ^ 1U) = c;
  }
  int rep(int c) {
    int r = c;
    while (fwd_[static_cast<std::size_t>(r)] != r) r = fwd_[static_cast<std::size_t>(r)];
    while (fwd_[static_cast<std::size_t>(c)] != r) {
      int next = fwd_[static_cast<std::size_t>(c)];
      fwd_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }
  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    fwd_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue.push_back(l);
  }

  std::size_t cols_;
  std::size_t max_rows_;
  std::vector<int> table_;
  std::vector<int> fwd_;
  std::size_t live_ = 0;
};

}  // namespace

CosetTable::CosetTable(std::size_t generators, std::vector<int> table)
    : gens_(generators), rows_(generators ? table.size() / (2 * generators) : 1), table_(std::move(table)) {}

int CosetTable::act(int c, int letter) const {
  if (gens_ == 0) return c;
  return table_[static_cast<std::size_t>(c) * 2 * gens_ + column(letter)];
}

int CosetTable::trace(int c, const FreeWord& w) const {
  for (int l : w) c = act(c, l);
  return c;
}

std::string CosetTable::to_csv(const std::vector<std::string>& names) const {
  std::ostringstream o;
  o << "coset";
  for (std::size_t g = 0; g < gens_; ++g) {
    std::string n = g < names.size() ? names[g] : "x" + std::to_string(g + 1);
    o << ',' << n << ',' << n << "^-1";
  }
  o << '\n';
  for (std::size_t c = 0; c < rows_; ++c) {
    o << c;
    for (std::size_t x = 0; x < 2 * gens_; ++x) o << ',' << table_[c * 2 * gens_ + x];
    o << '\n';
  }
  return o.str();
}

CosetTable coset_enumerate(const GroupPresentation& p, const std::vector<FreeWord>& subgroup,
                           const CosetOptions& opts) {
  p.validate();
  const std::size_t gens = p.generators.size();
  if (gens == 0) return CosetTable(0, {});
  std::vector<FreeWord> rels;
  for (const auto& r : p.relators) {
    FreeWord c = cyclic_reduce(r);
    if (!c.empty()) rels.push_back(std::move(c));
  }
  Enumerator e(gens, opts.max_rows);
  for (const auto& w : subgroup) {
    FreeWord r = free_reduce(w);
    e.scan_and_fill(0, r);
  }
  for (int c = 0; static_cast<std::size_t>(c) < e.rows(); ++c) {
    for (const auto& r : rels) {
      if (!e.alive(c)) break;
      e.scan_and_fill(c, r);
    }
    if (!e.alive(c)) continue;
    for (std::size_t x = 0; x < e.cols(); ++x) {
      if (!e.alive(c)) break;
      if (e.at(c, x) < 0) e.define(c, x);
    }
  }
  // Compact live cosets, numbering them in order of first appearance.
  std::vector<int> number(e.rows(), -1);
  std::vector<int> order;
  number[0] = 0;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < e.cols(); ++x) {
      int d = e.at(order[i], x);
      if (d < 0) throw std::logic_error("coset table incomplete after enumeration");
      if (number[static_cast<std::size_t>(d)] < 0) {
        number[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  std::vector<int> table(order.size() * e.cols());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < e.cols(); ++x)
      table[i * e.cols() + x] = number[static_cast<std::size_t>(e.at(order[i], x))];
  return CosetTable(gens, std::move(table));
}

std::vector<FreeWord> kernel_generators(const GroupPresentation& p, const std::vector<Perm>& images, int degree,
                                        std::size_t max_order) {
  p.validate();
  if (images.size() != p.generators.size()) throw InvalidInput("need one image per generator");
  for (const auto& r : p.relators)
    if (!evaluate_word(images, r, degree).is_identity())
      throw InvalidInput("relator " + p.format_word(r) + " does not map to the identity");
  PermGroup q(degree, images, max_order);
  const std::size_t k = images.size();
  std::vector<FreeWord> words(q.order());
  for (std::size_t x = 0; x < q.order(); ++x)
    for (int t : q.word_of(static_cast<int>(x))) words[x].push_back(t + 1);
  const std::vector<int> orders = p.generator_orders();
  std::vector<FreeWord> out;
  std::set<FreeWord> seen;
  for (std::size_t x = 0; x < q.order(); ++x) {
    for (std::size_t t = 0; t < k; ++t) {
      int y = q.mul(static_cast<int>(x), q.index_of(q.generators()[t]));
      FreeWord w = words[x];
      w.push_back(static_cast<int>(t) + 1);
      if (w == words[static_cast<std::size_t>(y)]) continue;
      FreeWord s = reduce_powers(concat(w, inverse_word(words[static_cast<std::size_t>(y)])), orders);
      if (s.empty() || seen.count(s) || seen.count(reduce_powers(inverse_word(s), orders))) continue;
      seen.insert(s);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace cgt::fin
