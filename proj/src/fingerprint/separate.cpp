#include "cgt/fingerprint/separate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>

#include "json.hpp"

#include "cgt/error.hpp"
#include "cgt/finite/coset.hpp"
#include "cgt/finite/subgroups.hpp"
#include "cgt/graph/graph_ops.hpp"
#include "cgt/rewriting/coxeter.hpp"
#include "cgt/rewriting/graph_product.hpp"

namespace cgt::fp {

namespace {

using fin::FreeWord;

// Finite special subgroup G_K as a permutation group, with the image of every
// presentation generator under the retraction p_K.
struct FiniteSpecial {
  unsigned mask = 0;
  int degree = 1;
  std::vector<fin::Perm> gen_images;
  std::optional<fin::PermGroup> group;
};

class Model {
 public:
  Model(const graph::LabeledGraph& g, const graph::GroupCatalog& cat, const SeparationOptions& opts)
      : g_(g), cat_(cat), opts_(opts) {
    if (g.size() > 20) throw InvalidInput("separation is limited to 20 vertices");
    if (g.mode() == graph::Mode::Product) {
      gp_.emplace(g, cat);
      pres_ = gp_->presentation();
      for (int v = 0; v < g.size(); ++v)
        for (std::size_t k = 0; k < gp_->vertex_group(v).generators().size(); ++k) gen_vertex_.push_back(v);
    } else {
      if (!graph::is_even(g)) throw InvalidInput("separation in a Coxeter group needs every edge label even");
      pres_ = graph::coxeter_presentation(g);
      for (int v = 0; v < g.size(); ++v) gen_vertex_.push_back(v);
    }
  }

  const fin::GroupPresentation& presentation() const { return pres_; }
  bool coxeter() const { return !gp_; }

  FreeWord parse(const std::string& text) const { return normal(pres_.parse_word(text)); }

  FreeWord normal(const FreeWord& w) const {
    if (gp_) return gp_->to_free_word(gp_->normal_form(gp_->from_free_word(w)));
    rw::CoxeterWord cw;
    for (int l : w) cw.push_back((l > 0 ? l : -l) - 1);
    FreeWord out;
    for (int v : rw::coxeter_normal_form(g_, cw)) out.push_back(v + 1);
    return out;
  }

  unsigned support(const FreeWord& normal_word) const {
    unsigned m = 0;
    for (int l : normal_word) m |= 1U << gen_vertex_[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    return m;
  }

  std::vector<int> letters() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < pres_.generators.size(); ++i) {
      out.push_back(static_cast<int>(i) + 1);
      if (!coxeter()) out.push_back(-static_cast<int>(i) - 1);
    }
    return out;
  }

  bool is_clique(unsigned mask) const {
    for (unsigned a = mask; a; a &= a - 1)
      for (unsigned b = a & (a - 1); b; b &= b - 1)
        if (!g_.adjacent(std::countr_zero(a), std::countr_zero(b))) return false;
    return true;
  }

  // nullptr when G_K is infinite or too large.
  const FiniteSpecial* special(unsigned mask) {
    auto it = specials_.find(mask);
    if (it != specials_.end()) return it->second ? &*it->second : nullptr;
    auto& slot = specials_[mask];
    if (!is_clique(mask)) return nullptr;
    std::vector<int> verts;
    for (unsigned a = mask; a; a &= a - 1) verts.push_back(std::countr_zero(a));
    FiniteSpecial s;
    s.mask = mask;
    std::vector<fin::Perm> vertex_gens;  // generators of G_K in presentation order
    if (gp_) {
      std::vector<const fin::PermGroup*> ptrs;
      for (int v : verts) ptrs.push_back(&gp_->vertex_group(v));
      std::size_t order = 1;
      for (auto* p : ptrs) order *= p->order();
      if (order > opts_.max_quotient_order) return nullptr;
      if (!ptrs.empty()) {
        fin::PermGroup prod = fin::direct_product(ptrs);
        s.degree = prod.degree();
        vertex_gens = prod.generators();
      }
    } else {
      auto sub = g_.induced(verts);
      try {
        fin::CosetOptions co;
        co.max_rows = 4 * opts_.max_quotient_order + 16;
        auto table = fin::coset_enumerate(graph::coxeter_presentation(sub), {}, co);
        if (table.index() > opts_.max_quotient_order) return nullptr;
        s.degree = static_cast<int>(table.index());
        for (std::size_t j = 0; j < verts.size(); ++j) {
          std::vector<int> img(table.index());
          for (std::size_t c = 0; c < table.index(); ++c) img[c] = table.act(static_cast<int>(c), static_cast<int>(j) + 1);
          vertex_gens.push_back(fin::Perm::from_images(img));
        }
      } catch (const BudgetExceeded&) {
        return nullptr;
      }
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < pres_.generators.size(); ++i) {
      int v = gen_vertex_[i];
      if (mask >> v & 1U) s.gen_images.push_back(vertex_gens[next++]);
      else s.gen_images.push_back(fin::Perm::identity(s.degree));
    }
    s.group.emplace(s.degree, vertex_gens);
    slot = std::move(s);
    return &*slot;
  }

  const graph::LabeledGraph& graph() const { return g_; }

 private:
  const graph::LabeledGraph& g_;
  const graph::GroupCatalog& cat_;
  const SeparationOptions& opts_;
  std::optional<rw::GraphProduct> gp_;
  fin::GroupPresentation pres_;
  std::vector<int> gen_vertex_;
  std::map<unsigned, std::optional<FiniteSpecial>> specials_;
};

struct Placement {
  FreeWord conjugator;
  unsigned support = 0;
  std::vector<FreeWord> conjugated;  // c^-1 a c for each generator a
};

std::optional<Placement> place(Model& m, const std::vector<FreeWord>& gens, const SeparationOptions& opts) {
  std::optional<Placement> best;
  std::size_t best_order = 0;
  std::set<FreeWord> seen{FreeWord{}};
  std::vector<FreeWord> layer{FreeWord{}};
  const auto letters = m.letters();
  for (int depth = 0; depth <= opts.conjugator_length && !layer.empty(); ++depth) {
    std::vector<FreeWord> next;
    for (const auto& c : layer) {
      Placement p{c, 0, {}};
      for (const auto& a : gens) {
        FreeWord w = m.normal(fin::concat(fin::concat(fin::inverse_word(c), a), c));
        p.support |= m.support(w);
        p.conjugated.push_back(std::move(w));
      }
      if (const FiniteSpecial* s = m.special(p.support)) {
        std::size_t order = s->group->order();
        int size = std::popcount(p.support);
        if (!best || size < std::popcount(best->support) ||
            (size == std::popcount(best->support) && order < best_order)) {
          best = std::move(p);
          best_order = order;
          if (size <= 1) return best;
        }
      }
      if (depth == opts.conjugator_length) continue;
      for (int l : letters) {
        if (seen.size() >= opts.max_conjugators) break;
        FreeWord d = m.normal(fin::concat(c, {l}));
        if (seen.insert(d).second) next.push_back(std::move(d));
      }
    }
    layer = std::move(next);
  }
  return best;
}

std::vector<std::string> ids(const graph::LabeledGraph& g, unsigned mask) {
  std::vector<std::string> out;
  for (int v = 0; v < g.size(); ++v)
    if (mask >> v & 1U) out.push_back(g.id(v));
  return out;
}

fin::Bits image_subgroup(const FiniteSpecial& s, const std::vector<FreeWord>& gens, std::vector<fin::Perm>& images) {
  images.clear();
  std::vector<int> idx;
  for (const auto& w : gens) {
    images.push_back(fin::evaluate_word(s.gen_images, w, s.degree));
    int i = s.group->index_of(images.back());
    if (i < 0) throw std::logic_error("retraction image outside the special subgroup");
    idx.push_back(i);
  }
  return fin::generated_subgroup(*s.group, idx);
}

}  // namespace

SeparationReport separating_quotient(const graph::LabeledGraph& g, const std::vector<std::string>& a_text,
                                     const std::vector<std::string>& b_text, const SeparationOptions& opts,
                                     const graph::GroupCatalog& cat) {
  Model m(g, cat, opts);
  std::vector<FreeWord> a, b;
  for (const auto& t : a_text) a.push_back(m.parse(t));
  for (const auto& t : b_text) b.push_back(m.parse(t));

  SeparationReport r;
  auto pa = place(m, a, opts);
  auto pb = place(m, b, opts);
  if (!pa || !pb) {
    r.reason = std::string("no conjugator of length <= ") + std::to_string(opts.conjugator_length) +
               " moves " + (!pa ? "A" : "B") + " into a finite special subgroup";
    return r;
  }
  const auto& pres = m.presentation();
  r.conjugator_a = pres.format_word(pa->conjugator);
  r.conjugator_b = pres.format_word(pb->conjugator);
  r.support_a = ids(g, pa->support);
  r.support_b = ids(g, pb->support);

  // Both conjugates lie in one finite special subgroup, which embeds
  // faithfully: conjugacy there is conjugacy in the whole group.
  if (pa->support == pb->support) {
    const FiniteSpecial* s = m.special(pa->support);
    std::vector<fin::Perm> ia, ib;
    auto sa = image_subgroup(*s, pa->conjugated, ia);
    auto sb = image_subgroup(*s, pb->conjugated, ib);
    if (fin::conjugate_subgroups(*s->group, sa, sb)) {
      r.verdict = SeparationVerdict::Conjugate;
      r.target = ids(g, s->mask);
      r.quotient_order = s->group->order();
      r.reason = "A and B are conjugate";
      return r;
    }
  }

  unsigned big = pa->support, small = pb->support;
  if (std::popcount(small) > std::popcount(big)) std::swap(big, small);
  std::vector<unsigned> targets{big};
  if (small != big) targets.push_back(small);
  std::vector<unsigned> rest;
  for (unsigned mask : graph::cliques(g))
    if (mask != big && mask != small && mask != 0) rest.push_back(mask);
  std::stable_sort(rest.begin(), rest.end(), [](unsigned x, unsigned y) { return std::popcount(x) > std::popcount(y); });
  targets.insert(targets.end(), rest.begin(), rest.end());

  for (unsigned mask : targets) {
    const FiniteSpecial* s = m.special(mask);
    if (!s) continue;
    r.tried.push_back(ids(g, mask));
    auto sa = image_subgroup(*s, a, r.images_a);
    auto sb = image_subgroup(*s, b, r.images_b);
    r.image_order_a = fin::count_bits(sa);
    r.image_order_b = fin::count_bits(sb);
    if (r.image_order_a != r.image_order_b || !fin::conjugate_subgroups(*s->group, sa, sb)) {
      r.verdict = SeparationVerdict::Separated;
      r.target = ids(g, mask);
      r.quotient_order = s->group->order();
      r.quotient_generators = s->group->generators();
      r.reason = "images under the retraction are not conjugate";
      return r;
    }
  }
  r.images_a.clear();
  r.images_b.clear();
  r.image_order_a = r.image_order_b = 0;
  r.reason = "every finite special retraction tried gives conjugate images";
  return r;
}

std::string SeparationReport::to_json(int indent) const {
  nlohmann::json j;
  j["verdict"] = fp::to_string(verdict);
  j["target"] = target;
  j["quotient_order"] = quotient_order;
  auto perms = [](const std::vector<fin::Perm>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.to_cycle_string());
    return out;
  };
  j["quotient_generators"] = perms(quotient_generators);
  j["images_a"] = perms(images_a);
  j["images_b"] = perms(images_b);
  j["image_order_a"] = image_order_a;
  j["image_order_b"] = image_order_b;
  j["conjugator_a"] = conjugator_a;
  j["conjugator_b"] = conjugator_b;
  j["support_a"] = support_a;
  j["support_b"] = support_b;
  j["tried"] = tried;
  j["reason"] = reason;
  return j.dump(indent);
}

std::string to_string(SeparationVerdict v) {
  switch (v) {
    case SeparationVerdict::Separated: return "separated";
    case SeparationVerdict::Conjugate: return "conjugate";
    case SeparationVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace cgt::fp
