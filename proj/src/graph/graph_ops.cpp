#include "cgt/graph/graph_ops.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "cgt/error.hpp"

namespace cgt::graph {

namespace {

void require_mode(const LabeledGraph& g, Mode m, const char* what) {
  if (g.mode() != m) throw InvalidInput(std::string(what) + " needs a " + to_string(m) + "-mode graph");
}

std::vector<unsigned> adjacency_masks(const LabeledGraph& g) {
  std::vector<unsigned> adj(static_cast<std::size_t>(g.size()), 0);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= 1U << v;
  return adj;
}

std::vector<int> mask_vertices(unsigned mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace

fin::GroupPresentation coxeter_presentation(const LabeledGraph& g) {
  require_mode(g, Mode::Coxeter, "coxeter_presentation");
  fin::GroupPresentation p;
  for (int v = 0; v < g.size(); ++v) p.generators.push_back(g.id(v));
  for (int v = 0; v < g.size(); ++v) p.relators.push_back({v + 1, v + 1});
  for (const Edge& e : g.edges()) p.relators.push_back(fin::power_word({e.u + 1, e.v + 1}, e.m));
  return p;
}

fin::GroupPresentation graph_product_presentation(const LabeledGraph& g, const GroupCatalog& cat) {
  require_mode(g, Mode::Product, "graph_product_presentation");
  fin::GroupPresentation p;
  std::vector<std::vector<int>> letters(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    fin::GroupPresentation pv = cat.presentation(g.group(v), g.id(v));
    const int offset = static_cast<int>(p.generators.size());
    for (std::size_t i = 0; i < pv.generators.size(); ++i) {
      p.generators.push_back(pv.generators[i]);
      letters[static_cast<std::size_t>(v)].push_back(offset + static_cast<int>(i) + 1);
    }
    for (const auto& r : pv.relators) {
      fin::FreeWord shifted;
      for (int l : r) shifted.push_back(l > 0 ? l + offset : l - offset);
      p.relators.push_back(std::move(shifted));
    }
  }
  for (const Edge& e : g.edges())
    for (int a : letters[static_cast<std::size_t>(e.u)])
      for (int b : letters[static_cast<std::size_t>(e.v)]) p.relators.push_back({-a, -b, a, b});
  p.validate();
  return p;
}

fin::GroupPresentation presentation(const LabeledGraph& g, const GroupCatalog& cat) {
  return g.mode() == Mode::Coxeter ? coxeter_presentation(g) : graph_product_presentation(g, cat);
}

bool is_even(const LabeledGraph& g) {
  require_mode(g, Mode::Coxeter, "is_even");
  for (const Edge& e : g.edges())
    if (e.m % 2) return false;
  return true;
}

bool is_right_angled(const LabeledGraph& g) {
  require_mode(g, Mode::Coxeter, "is_right_angled");
  for (const Edge& e : g.edges())
    if (e.m != 2) return false;
  return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> join_decomposition(const LabeledGraph& g) {
  const int n = g.size();
  if (n < 2) return std::nullopt;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == u || comp[static_cast<std::size_t>(v)] >= 0 || g.label(u, v) == 2) continue;
        comp[static_cast<std::size_t>(v)] = ncomp;
        stack.push_back(v);
      }
    }
    ++ncomp;
  }
  if (ncomp < 2) return std::nullopt;
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 0; v < n; ++v) (comp[static_cast<std::size_t>(v)] == 0 ? out.first : out.second).push_back(v);
  return out;
}

AmalgamSplit amalgam_split(const LabeledGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw InvalidInput("vertex out of range");
  AmalgamSplit s;
  s.link = g.neighbours(v);
  if (static_cast<int>(s.link.size()) == g.size() - 1)
    throw InvalidInput("vertex '" + g.id(v) + "' is adjacent to every other vertex; no amalgam split");
  s.star = s.link;
  s.star.push_back(v);
  std::sort(s.star.begin(), s.star.end());
  for (int u = 0; u < g.size(); ++u)
    if (u != v) s.rest.push_back(u);
  return s;
}

bool is_module(const LabeledGraph& g, const std::vector<int>& omega) {
  if (omega.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v : omega) {
    if (v < 0 || v >= g.size()) throw InvalidInput("vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (int x = 0; x < g.size(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    int first = g.label(x, omega.front());
    for (int v : omega)
      if (g.label(x, v) != first) return false;
  }
  return true;
}

std::vector<std::vector<int>> find_modules(const LabeledGraph& g) {
  const int n = g.size();
  if (n > 24) throw BudgetExceeded("module search is exhaustive and limited to 24 vertices");
  auto adj = adjacency_masks(g);
  std::vector<std::vector<int>> out;
  const unsigned full = n == 32 ? ~0U : (1U << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (mask >> x & 1U) continue;
      unsigned hit = adj[static_cast<std::size_t>(x)] & mask;
      if (hit != 0 && hit != mask) ok = false;
    }
    if (!ok) continue;
    auto verts = mask_vertices(mask);
    if (g.mode() == Mode::Coxeter && !is_module(g, verts)) continue;
    out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

LabeledGraph collapse(const LabeledGraph& g, const std::vector<int>& omega_in, const std::string& star_id) {
  std::vector<int> omega = omega_in;
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
  if (omega.size() < 2 || static_cast<int>(omega.size()) >= g.size())
    throw InvalidInput("a module must have at least 2 and fewer than |V| vertices");
  if (!is_module(g, omega)) throw InvalidInput("vertex set is not a module");
  if (g.mode() == Mode::Coxeter && !is_right_angled(g))
    throw InvalidInput("collapse of a Coxeter graph needs all labels equal to 2");
  std::string label = "G_{";
  for (std::size_t i = 0; i < omega.size(); ++i) label += (i ? "," : "") + g.id(omega[i]);
  label += "}";
  LabeledGraph out(Mode::Product);
  std::vector<int> map(static_cast<std::size_t>(g.size()), -1);
  int star = -1;
  for (int v = 0; v < g.size(); ++v) {
    bool inside = std::binary_search(omega.begin(), omega.end(), v);
    if (inside) {
      if (star < 0) star = out.add_vertex(star_id, label);
      map[static_cast<std::size_t>(v)] = star;
    } else {
      map[static_cast<std::size_t>(v)] = out.add_vertex(g.id(v), g.mode() == Mode::Coxeter ? "C2" : g.group(v));
    }
  }
  for (const Edge& e : g.edges()) {
    int a = map[static_cast<std::size_t>(e.u)], b = map[static_cast<std::size_t>(e.v)];
    if (a != b && !out.adjacent(a, b)) out.add_edge(a, b);
  }
  return out;
}

LabeledGraph splice(const LabeledGraph& collapsed, const std::string& star_id, const LabeledGraph& module) {
  const int star = collapsed.require(star_id);
  LabeledGraph out(Mode::Product);
  std::vector<int> map(static_cast<std::size_t>(collapsed.size()), -1);
  std::vector<int> inner;
  for (int v = 0; v < collapsed.size(); ++v) {
    if (v == star) {
      for (int w = 0; w < module.size(); ++w)
        inner.push_back(out.add_vertex(module.id(w), module.mode() == Mode::Coxeter ? "C2" : module.group(w)));
    } else {
      map[static_cast<std::size_t>(v)] = out.add_vertex(collapsed.id(v), collapsed.group(v));
    }
  }
  for (const Edge& e : collapsed.edges()) {
    if (e.u == star || e.v == star) {
      int other = map[static_cast<std::size_t>(e.u == star ? e.v : e.u)];
      for (int w : inner) out.add_edge(other, w);
    } else {
      out.add_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    }
  }
  for (const Edge& e : module.edges()) out.add_edge(inner[static_cast<std::size_t>(e.u)], inner[static_cast<std::size_t>(e.v)]);
  return out;
}

LabeledGraph split_indecomposable(const LabeledGraph& g, const GroupCatalog& cat) {
  require_mode(g, Mode::Product, "split_indecomposable");
  LabeledGraph out(Mode::Product);
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    const CatalogEntry& e = cat.at(g.group(v));
    if (e.factors.size() <= 1) {
      parts[static_cast<std::size_t>(v)].push_back(out.add_vertex(g.id(v), e.factors.empty() ? e.name : e.factors[0]));
      continue;
    }
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
      cat.at(e.factors[i]);
      std::string id = g.id(v) + "_" + std::to_string(i + 1);
      if (g.index_of(id) >= 0) throw InvalidInput("split would reuse existing vertex id '" + id + "'");
      parts[static_cast<std::size_t>(v)].push_back(out.add_vertex(id, e.factors[i]));
    }
    const auto& p = parts[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) out.add_edge(p[i], p[j]);
  }
  for (const Edge& e : g.edges())
    for (int a : parts[static_cast<std::size_t>(e.u)])
      for (int b : parts[static_cast<std::size_t>(e.v)]) out.add_edge(a, b);
  bool again = false;
  for (int v = 0; v < out.size(); ++v)
    if (!cat.indecomposable(out.group(v))) again = true;
  return again ? split_indecomposable(out, cat) : out;
}

std::optional<std::vector<int>> graph_isomorphism(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.mode() != b.mode() || a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  auto invariant = [](const LabeledGraph& g, int v) {
    std::vector<int> labels;
    for (int u = 0; u < g.size(); ++u)
      if (g.adjacent(u, v)) labels.push_back(g.label(u, v));
    std::sort(labels.begin(), labels.end());
    return std::make_pair(g.group(v), labels);
  };
  std::vector<decltype(invariant(a, 0))> ia, ib;
  for (int v = 0; v < n; ++v) {
    ia.push_back(invariant(a, v));
    ib.push_back(invariant(b, v));
  }
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || ia[static_cast<std::size_t>(v)] != ib[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.label(u, v) != b.label(map[static_cast<std::size_t>(u)], w)) ok = false;
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (go(v + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

std::vector<unsigned> cliques(const LabeledGraph& g) {
  if (g.size() > 31) throw BudgetExceeded("clique enumeration is limited to 31 vertices");
  auto adj = adjacency_masks(g);
  std::vector<unsigned> out;
  std::function<void(unsigned, unsigned)> grow = [&](unsigned clique, unsigned cand) {
    out.push_back(clique);
    for (unsigned c = cand; c; c &= c - 1) {
      int v = std::countr_zero(c);
      unsigned higher = ~((2U << v) - 1);
      grow(clique | (1U << v), cand & adj[static_cast<std::size_t>(v)] & higher);
    }
  };
  const unsigned all = g.size() == 0 ? 0U : (g.size() == 32 ? ~0U : (1U << g.size()) - 1);
  grow(0, all);
  std::sort(out.begin(), out.end(), [](unsigned x, unsigned y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  return out;
}

std::vector<unsigned> maximal_cliques(const LabeledGraph& g) {
  auto adj = adjacency_masks(g);
  std::vector<unsigned> out;
  for (unsigned c : cliques(g)) {
    bool maximal = true;
    for (int x = 0; x < g.size() && maximal; ++x)
      if (!(c >> x & 1U) && (adj[static_cast<std::size_t>(x)] & c) == c) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace cgt::graph
