#include "cgt/finite/perm_group.hpp"

#include <string>

#include "cgt/error.hpp"

namespace cgt::fin {

namespace {
constexpr std::size_t kTableLimit = 1024;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t max_order)
    : degree_(degree), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (g.degree() > degree_) throw InvalidInput("generator moves points beyond the group degree");
    if (g.degree() < degree_) g = g.extended(degree_);
  }
  Perm id = Perm::identity(degree_);
  elems_.push_back(id);
  index_.emplace(id, 0);
  parent_.push_back(-1);
  parent_gen_.push_back(-1);
  for (std::size_t head = 0; head < elems_.size(); ++head) {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      Perm x = elems_[head] * gens_[k];
      if (index_.count(x)) continue;
      if (elems_.size() >= max_order)
        throw BudgetExceeded("group order exceeds the enumeration bound " + std::to_string(max_order));
      index_.emplace(x, static_cast<int>(elems_.size()));
      elems_.push_back(std::move(x));
      parent_.push_back(static_cast<int>(head));
      parent_gen_.push_back(static_cast<int>(k));
    }
  }
  for (const auto& g : gens_) gen_idx_.push_back(index_of(g));
  const std::size_t n = elems_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elems_[a] * elems_[b]);
  }
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inv_[a] = index_.at(elems_[a].inverse());
}

int PermGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) {
    if (p.degree() > degree_) {
      for (int i = degree_; i < p.degree(); ++i)
        if (p[i] != i) return -1;
      std::vector<int> img(p.images().begin(), p.images().begin() + degree_);
      return index_of(Perm::from_images(std::move(img)));
    }
    return index_of(p.extended(degree_));
  }
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)];
  return index_.at(elems_[static_cast<std::size_t>(a)] * elems_[static_cast<std::size_t>(b)]);
}

int PermGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

std::vector<int> PermGroup::word_of(int i) const {
  std::vector<int> w;
  for (int x = i; parent_[static_cast<std::size_t>(x)] >= 0; x = parent_[static_cast<std::size_t>(x)])
    w.push_back(parent_gen_[static_cast<std::size_t>(x)]);
  return {w.rbegin(), w.rend()};
}

PermGroup direct_product(const std::vector<const PermGroup*>& factors, std::size_t max_order) {
  int degree = 0;
  for (const auto* f : factors) degree += f->degree();
  std::vector<Perm> gens;
  int offset = 0;
  for (const auto* f : factors) {
    for (const auto& g : f->generators()) {
      std::vector<int> img(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < f->degree(); ++i) img[static_cast<std::size_t>(offset + i)] = offset + g[i];
      gens.push_back(Perm::from_images(std::move(img)));
    }
    offset += f->degree();
  }
  return PermGroup(degree, std::move(gens), max_order);
}

PermGroup symmetric_group(int degree, std::size_t max_order) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<int> t(static_cast<std::size_t>(degree)), c(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
      t[static_cast<std::size_t>(i)] = i;
      c[static_cast<std::size_t>(i)] = (i + 1) % degree;
    }
    std::swap(t[0], t[1]);
    gens.push_back(Perm::from_images(std::move(t)));
    if (degree > 2) gens.push_back(Perm::from_images(std::move(c)));
  }
  return PermGroup(std::max(degree, 1), std::move(gens), max_order);
}

}  // namespace cgt::fin
