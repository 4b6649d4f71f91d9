#include "cgt/fingerprint/homsearch.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "cgt/error.hpp"
#include "cgt/finite/perm_group.hpp"
#include "cgt/finite/subgroups.hpp"

namespace cgt::fp {

namespace {

// S_K with elements numbered by lexicographic rank of their one-line form,
// so 0 is the identity.
class SymTable {
 public:
  explicit SymTable(int k) : k_(k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    n_ = perms_.size();
    inv_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      std::vector<int> q(static_cast<std::size_t>(k));
      for (int x = 0; x < k; ++x) q[static_cast<std::size_t>(perms_[a][static_cast<std::size_t>(x)])] = x;
      inv_[a] = rank(q);
    }
    if (k <= 6) {
      table_.resize(n_ * n_);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) table_[a * n_ + b] = static_cast<std::uint16_t>(compose(static_cast<int>(a), static_cast<int>(b)));
    }
  }

  std::size_t size() const { return n_; }
  int degree() const { return k_; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
    return compose(a, b);
  }
  int conj(int c, int g) const { return mul(mul(inv(g), c), g); }
  int order(int a) const {
    int o = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++o;
    return o;
  }
  fin::Perm perm(int a) const { return fin::Perm::from_images(perms_[static_cast<std::size_t>(a)]); }

 private:
  int compose(int a, int b) const {
    std::vector<int> q(static_cast<std::size_t>(k_));
    const auto& pa = perms_[static_cast<std::size_t>(a)];
    const auto& pb = perms_[static_cast<std::size_t>(b)];
    for (int x = 0; x < k_; ++x) q[static_cast<std::size_t>(x)] = pb[static_cast<std::size_t>(pa[static_cast<std::size_t>(x)])];
    return rank(q);
  }
  int rank(const std::vector<int>& p) const {
    int r = 0;
    for (int i = 0; i < k_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < k_; ++j) smaller += p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)];
      r = r * (k_ - i) + smaller;
    }
    return r;
  }

  int k_;
  std::size_t n_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<int> inv_;
  std::vector<std::uint16_t> table_;
};

using ImageMap = std::unordered_map<fin::Bits, std::vector<int>, fin::BitsHash>;

struct Shared {
  const SymTable& sym;
  std::size_t gens;
  std::vector<std::vector<int>> candidates;
  std::vector<std::vector<fin::FreeWord>> relators_at;
  std::size_t max_image;
  std::size_t max_nodes;
  std::atomic<std::size_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
};

class Worker {
 public:
  explicit Worker(Shared& s) : s_(s), x_(s.gens, 0) {}

  void run_first(int c, const std::vector<int>& centralizer) {
    x_[0] = c;
    if (!relators_hold(0)) return;
    descend(1, centralizer);
  }
  void run_empty() { leaf(); }

  ImageMap images;
  std::size_t homs = 0;

 private:
  bool relators_hold(std::size_t level) const {
    for (const auto& r : s_.relators_at[level]) {
      int acc = 0;
      for (int l : r) {
        int e = x_[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
        acc = s_.sym.mul(acc, l > 0 ? e : s_.sym.inv(e));
      }
      if (acc != 0) return false;
    }
    return true;
  }

  void descend(std::size_t level, const std::vector<int>& centralizer) {
    if (s_.out_of_budget.load(std::memory_order_relaxed)) return;
    if (level == s_.gens) {
      leaf();
      return;
    }
    std::vector<int> next;
    for (int c : s_.candidates[level]) {
      bool least = true;
      for (int g : centralizer)
        if (s_.sym.conj(c, g) < c) {
          least = false;
          break;
        }
      if (!least) continue;
      if (s_.nodes.fetch_add(1, std::memory_order_relaxed) >= s_.max_nodes) {
        s_.out_of_budget = true;
        return;
      }
      x_[level] = c;
      if (!relators_hold(level)) continue;
      next.clear();
      for (int g : centralizer)
        if (s_.sym.conj(c, g) == c) next.push_back(g);
      descend(level + 1, next);
    }
  }

  void leaf() {
    ++homs;
    fin::Bits seen = fin::empty_bits(s_.sym.size());
    std::vector<int> queue{0};
    fin::set_bit(seen, 0);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int g : x_) {
        int y = s_.sym.mul(queue[i], g);
        if (fin::test_bit(seen, y)) continue;
        if (queue.size() >= s_.max_image) return;
        fin::set_bit(seen, y);
        queue.push_back(y);
      }
    auto [it, fresh] = images.emplace(std::move(seen), x_);
    if (!fresh && x_ < it->second) it->second = x_;
  }

  Shared& s_;
  std::vector<int> x_;
};

std::vector<std::vector<fin::FreeWord>> relators_by_level(const fin::GroupPresentation& p) {
  std::vector<std::vector<fin::FreeWord>> out(std::max<std::size_t>(p.generators.size(), 1));
  for (const auto& r : p.relators) {
    if (r.empty()) continue;
    int top = 0;
    for (int l : r) top = std::max(top, (l > 0 ? l : -l) - 1);
    out[static_cast<std::size_t>(top)].push_back(r);
  }
  return out;
}

}  // namespace

HomSearchResult search_homomorphisms(const fin::GroupPresentation& p, const HomSearchOptions& opts) {
  if (opts.degree < 1 || opts.degree > 7) throw InvalidInput("target degree must be between 1 and 7");
  if (opts.max_image_order < 1) throw InvalidInput("image bound must be positive");
  p.validate();
  const SymTable sym(opts.degree);
  Shared shared{sym, p.generators.size(), {}, relators_by_level(p), opts.max_image_order, opts.max_nodes};
  auto orders = p.generator_orders();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    std::vector<int> cand;
    for (int c = 0; c < static_cast<int>(sym.size()); ++c)
      if (orders[i] == 0 || orders[i] % sym.order(c) == 0) cand.push_back(c);
    shared.candidates.push_back(std::move(cand));
  }

  std::vector<int> all(sym.size());
  std::iota(all.begin(), all.end(), 0);
  HomSearchResult result;
  ImageMap merged;
  auto merge = [&](Worker& w) {
    result.homomorphisms += w.homs;
    for (auto& [bits, tuple] : w.images) {
      auto [it, fresh] = merged.emplace(bits, tuple);
      if (!fresh && tuple < it->second) it->second = tuple;
    }
  };

  if (p.generators.empty()) {
    Worker w(shared);
    w.run_empty();
    merge(w);
  } else {
    // Conjugacy-class representatives for the first image, each with its
    // centralizer; these are the independent work items.
    std::vector<std::pair<int, std::vector<int>>> items;
    for (int c : shared.candidates[0]) {
      bool least = true;
      for (int g : all)
        if (sym.conj(c, g) < c) {
          least = false;
          break;
        }
      if (!least) continue;
      std::vector<int> cent;
      for (int g : all)
        if (sym.conj(c, g) == c) cent.push_back(g);
      items.emplace_back(c, std::move(cent));
    }
    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(items.size())));
    std::vector<Worker> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(shared);
    std::atomic<std::size_t> next{0};
    auto work = [&](Worker& w) {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();) w.run_first(items[i].first, items[i].second);
    };
    if (jobs == 1) {
      work(workers[0]);
    } else {
      std::vector<std::thread> threads;
      for (auto& w : workers) threads.emplace_back(work, std::ref(w));
      for (auto& t : threads) t.join();
    }
    for (auto& w : workers) merge(w);
  }

  std::vector<std::vector<int>> tuples;
  for (auto& [bits, tuple] : merged) tuples.push_back(tuple);
  std::sort(tuples.begin(), tuples.end());
  for (const auto& t : tuples) {
    std::vector<fin::Perm> images;
    for (int e : t) images.push_back(sym.perm(e));
    result.images.push_back(std::move(images));
  }
  result.nodes = shared.nodes.load();
  result.complete = !shared.out_of_budget.load();
  return result;
}

std::size_t epimorphism_count(const fin::GroupPresentation& p, const std::vector<fin::Perm>& target_generators,
                              int degree, std::size_t max_nodes) {
  p.validate();
  fin::PermGroup target(degree, target_generators);
  const auto relators = relators_by_level(p);
  const std::size_t r = p.generators.size();
  const int n = static_cast<int>(target.order());
  std::vector<int> x(r, 0);
  std::size_t nodes = 0, count = 0;
  auto holds = [&](std::size_t level) {
    for (const auto& rel : relators[level]) {
      int acc = 0;
      for (int l : rel) {
        int e = x[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
        acc = target.mul(acc, l > 0 ? e : target.inv(e));
      }
      if (acc != 0) return false;
    }
    return true;
  };
  auto go = [&](auto&& self, std::size_t level) -> void {
    if (level == r) {
      if (fin::count_bits(fin::generated_subgroup(target, x)) == target.order()) ++count;
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (++nodes > max_nodes) throw BudgetExceeded("epimorphism count exceeded its node budget");
      x[level] = e;
      if (holds(level)) self(self, level + 1);
    }
  };
  go(go, 0);
  return count;
}

}  // namespace cgt::fp
