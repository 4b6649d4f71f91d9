#include "cgt/rewriting/graph_product.hpp"

#include "cgt/error.hpp"
#include "cgt/graph/graph_ops.hpp"

namespace cgt::rw {

GraphProduct::GraphProduct(graph::LabeledGraph g, const graph::GroupCatalog& cat)
    : g_(std::move(g)), pres_(graph::graph_product_presentation(g_, cat)) {
  for (int v = 0; v < g_.size(); ++v) {
    groups_.push_back(cat.group(g_.group(v)));
    for (std::size_t k = 0; k < groups_.back().generators().size(); ++k) gen_owner_.emplace_back(v, static_cast<int>(k));
  }
}

ProductWord GraphProduct::from_free_word(const fin::FreeWord& w) const {
  ProductWord out;
  for (int letter : w) {
    int idx = (letter > 0 ? letter : -letter) - 1;
    if (idx >= static_cast<int>(gen_owner_.size())) throw InvalidInput("letter outside the presentation");
    auto [v, k] = gen_owner_[static_cast<std::size_t>(idx)];
    const auto& grp = vertex_group(v);
    int e = grp.generator_index(static_cast<std::size_t>(k));
    if (letter < 0) e = grp.inv(e);
    if (e != 0) out.push_back({v, e});
  }
  return out;
}

fin::FreeWord GraphProduct::to_free_word(const ProductWord& w) const {
  fin::FreeWord out;
  for (const Syllable& s : w) {
    int offset = 0;
    for (int v = 0; v < s.vertex; ++v) offset += static_cast<int>(vertex_group(v).generators().size());
    for (int k : vertex_group(s.vertex).word_of(s.elem)) out.push_back(offset + k + 1);
  }
  return out;
}

ProductWord GraphProduct::parse(std::string_view text) const { return from_free_word(pres_.parse_word(text)); }

std::string GraphProduct::format(const ProductWord& w) const { return pres_.format_word(to_free_word(w)); }

ProductWord GraphProduct::normal_form(const ProductWord& w) const {
  ProductWord red;
  for (Syllable s : w) {
    if (s.vertex < 0 || s.vertex >= g_.size() || s.elem < 0 ||
        s.elem >= static_cast<int>(vertex_group(s.vertex).order()))
      throw InvalidInput("syllable outside the graph product");
    if (s.elem == 0) continue;
    bool merged = false;
    for (std::size_t i = red.size(); i-- > 0;) {
      if (red[i].vertex == s.vertex) {
        int e = vertex_group(s.vertex).mul(red[i].elem, s.elem);
        if (e == 0) red.erase(red.begin() + static_cast<std::ptrdiff_t>(i));
        else red[i].elem = e;
        merged = true;
        break;
      }
      if (!g_.adjacent(red[i].vertex, s.vertex)) break;
    }
    if (!merged) red.push_back(s);
  }
  ProductWord out;
  std::vector<char> used(red.size(), 0);
  for (std::size_t round = 0; round < red.size(); ++round) {
    std::size_t best = red.size();
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (used[i]) continue;
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j)
        if (!used[j] && !g_.adjacent(red[j].vertex, red[i].vertex)) front = false;
      if (front && (best == red.size() || red[i].vertex < red[best].vertex)) best = i;
    }
    used[best] = 1;
    out.push_back(red[best]);
  }
  return out;
}

bool GraphProduct::equal(const ProductWord& a, const ProductWord& b) const { return normal_form(a) == normal_form(b); }

ProductWord GraphProduct::multiply(const ProductWord& a, const ProductWord& b) const {
  ProductWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(w);
}

ProductWord GraphProduct::inverse(const ProductWord& w) const {
  ProductWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->vertex, vertex_group(it->vertex).inv(it->elem)});
  return normal_form(out);
}

ProductWord GraphProduct::retraction(const std::vector<int>& x, const ProductWord& w) const {
  std::vector<char> keep(static_cast<std::size_t>(g_.size()), 0);
  for (int v : x) {
    if (v < 0 || v >= g_.size()) throw InvalidInput("retraction subset names a vertex out of range");
    keep[static_cast<std::size_t>(v)] = 1;
  }
  ProductWord out;
  for (const Syllable& s : w)
    if (keep[static_cast<std::size_t>(s.vertex)]) out.push_back(s);
  return normal_form(out);
}

}  // namespace cgt::rw
