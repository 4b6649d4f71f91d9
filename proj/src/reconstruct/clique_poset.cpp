#include "cgt/reconstruct/clique_poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>

#include "json.hpp"

#include "cgt/error.hpp"
#include "cgt/finite/subgroups.hpp"
#include "cgt/graph/graph_ops.hpp"

namespace cgt::recon {

using nlohmann::json;

namespace {

std::string entry_key(const graph::CatalogEntry& e) {
  std::string key = e.name + ":" + std::to_string(e.degree);
  for (const auto& g : e.gens) {
    key += "[";
    for (int x : g) key += std::to_string(x) + ",";
    key += "]";
  }
  return key;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::string clique_name(const graph::LabeledGraph& g, unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < g.size(); ++v)
    if (mask >> v & 1U) {
      s += (first ? "" : ",") + g.id(v);
      first = false;
    }
  return s + "}";
}

std::string vertex_name(const std::string& node_name) {
  if (node_name.size() > 2 && node_name.front() == '{' && node_name.back() == '}' &&
      node_name.find(',') == std::string::npos)
    return node_name.substr(1, node_name.size() - 2);
  return node_name;
}

std::string match_catalog(const PosetNode& atom, const graph::GroupCatalog& cat) {
  if (!atom.perm_group) throw InvalidInput("atom '" + atom.name + "' carries no group");
  static std::map<std::pair<std::shared_ptr<const fin::PermGroup>, const graph::GroupCatalog*>, std::string> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({atom.perm_group, &cat});
    if (it != cache.end()) return it->second;
  }
  auto name = cat.identify(*atom.perm_group);
  if (name) {
    std::lock_guard lock(cache_mutex());
    cache.emplace(std::make_pair(atom.perm_group, &cat), *name);
  }
  if (!name) throw InvalidInput("no catalog group matches the label of atom '" + atom.name + "'");
  return *name;
}

}  // namespace

LabeledPoset::LabeledPoset(std::vector<PosetNode> nodes, std::vector<std::vector<char>> leq)
    : nodes_(std::move(nodes)), leq_(std::move(leq)) {
  if (leq_.size() != nodes_.size()) throw InvalidInput("order relation has the wrong size");
  for (const auto& row : leq_)
    if (row.size() != nodes_.size()) throw InvalidInput("order relation has the wrong size");
}

bool LabeledPoset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq(b, c) && !leq(a, c)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> LabeledPoset::upper_covers() const {
  const std::size_t n = size();
  std::vector<std::vector<int>> out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out[a].push_back(static_cast<int>(b));
    }
  return out;
}

std::optional<std::size_t> LabeledPoset::bottom() const {
  for (std::size_t a = 0; a < size(); ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < size() && below_all; ++b) below_all = leq(a, b);
    if (below_all) return a;
  }
  return std::nullopt;
}

std::optional<std::size_t> LabeledPoset::meet(std::size_t a, std::size_t b) const {
  for (std::size_t c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < size() && greatest; ++d)
      if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> LabeledPoset::join(std::size_t a, std::size_t b) const {
  for (std::size_t c = 0; c < size(); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    bool least = true;
    for (std::size_t d = 0; d < size() && least; ++d)
      if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

std::string LabeledPoset::to_json(int indent) const {
  json j;
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < size(); ++i)
    j["nodes"].push_back({{"id", i},
                          {"name", nodes_[i].name},
                          {"group", nodes_[i].group},
                          {"order", nodes_[i].label.order},
                          {"signature", nodes_[i].label.to_string()}});
  j["covers"] = json::array();
  auto covers = upper_covers();
  for (std::size_t i = 0; i < size(); ++i)
    for (int c : covers[i]) j["covers"].push_back({i, c});
  return j.dump(indent);
}

LabeledPoset LabeledPoset::from_json(std::string_view text, const graph::GroupCatalog& cat) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("poset JSON: ") + e.what());
  }
  try {
    std::vector<PosetNode> nodes;
    for (const auto& nj : j.at("nodes")) {
      std::string group = nj.at("group").get<std::string>();
      std::vector<std::string> factors;
      if (group != "1") {
        std::size_t pos = 0;
        for (;;) {
          auto next = group.find(" x ", pos);
          factors.push_back(group.substr(pos, next == std::string::npos ? next : next - pos));
          if (next == std::string::npos) break;
          pos = next + 3;
        }
      }
      PosetNode node = *product_node(factors, cat);
      node.name = nj.value("name", std::to_string(nodes.size()));
      nodes.push_back(std::move(node));
    }
    const std::size_t n = nodes.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
    for (const auto& c : j.at("covers")) {
      auto a = c.at(0).get<std::size_t>(), b = c.at(1).get<std::size_t>();
      if (a >= n || b >= n) throw InvalidInput("poset JSON: cover names an unknown node");
      leq[a][b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        if (leq[a][k])
          for (std::size_t b = 0; b < n; ++b)
            if (leq[k][b]) leq[a][b] = 1;
    return LabeledPoset(std::move(nodes), std::move(leq));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("poset JSON: ") + e.what());
  }
}

std::shared_ptr<const PosetNode> product_node(std::vector<std::string> factors, const graph::GroupCatalog& cat) {
  static std::map<std::string, std::shared_ptr<const PosetNode>> cache;
  std::sort(factors.begin(), factors.end());
  std::string key;
  for (const auto& f : factors) key += entry_key(cat.at(f)) + ";";
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto node = std::make_shared<PosetNode>();
  if (factors.empty()) {
    node->group = "1";
    node->perm_group = std::make_shared<fin::PermGroup>(1, std::vector<fin::Perm>{});
  } else {
    std::vector<fin::PermGroup> groups;
    for (const auto& f : factors) groups.push_back(cat.group(f));
    std::vector<const fin::PermGroup*> ptrs;
    for (const auto& g : groups) ptrs.push_back(&g);
    node->perm_group = std::make_shared<fin::PermGroup>(fin::direct_product(ptrs));
    for (std::size_t i = 0; i < factors.size(); ++i) node->group += (i ? " x " : "") + factors[i];
  }
  node->label = fin::iso_signature(*node->perm_group);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(key, std::move(node)).first->second;
}

CliquePoset clique_poset(const graph::LabeledGraph& g, const graph::GroupCatalog& cat) {
  if (g.mode() != graph::Mode::Product) throw InvalidInput("clique_poset needs a product-mode graph");
  CliquePoset out;
  out.cliques = graph::cliques(g);
  std::vector<PosetNode> nodes;
  for (unsigned mask : out.cliques) {
    std::vector<std::string> factors;
    for (int v = 0; v < g.size(); ++v)
      if (mask >> v & 1U) factors.push_back(g.group(v));
    PosetNode node = *product_node(std::move(factors), cat);
    node.name = clique_name(g, mask);
    nodes.push_back(std::move(node));
  }
  const std::size_t n = nodes.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (out.cliques[a] & ~out.cliques[b]) == 0;
  out.poset = LabeledPoset(std::move(nodes), std::move(leq));
  return out;
}

bool is_T0(const graph::LabeledGraph& g) {
  auto maximal = graph::maximal_cliques(g);
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      bool separated = false;
      for (unsigned c : maximal)
        if (((c >> u) ^ (c >> v)) & 1U) separated = true;
      if (!separated) return false;
    }
  return true;
}

graph::LabeledGraph reconstruct_graph(const LabeledPoset& p, const graph::GroupCatalog& cat) {
  if (!p.is_partial_order()) throw InvalidInput("relation is not a partial order");
  auto bot = p.bottom();
  if (!bot) throw InvalidInput("poset has no least element");
  std::vector<std::size_t> atoms;
  const auto covers = p.upper_covers();
  for (int c : covers[*bot]) atoms.push_back(static_cast<std::size_t>(c));
  const std::size_t n = p.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(atoms.size(), 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < atoms.size(); ++i) below[x][i] = p.leq(atoms[i], x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool subset = true;
      for (std::size_t i = 0; i < atoms.size() && subset; ++i)
        if (below[x][i] && !below[y][i]) subset = false;
      if (subset != p.leq(x, y)) throw InvalidInput("poset is not atomistic");
    }
  graph::LabeledGraph g(graph::Mode::Product);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::string id = vertex_name(p.node(atoms[i]).name);
    if (id.empty() || g.index_of(id) >= 0) id = "v" + std::to_string(i);
    g.add_vertex(id, match_catalog(p.node(atoms[i]), cat));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (p.join(atoms[i], atoms[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

std::optional<std::vector<int>> poset_isomorphism(const LabeledPoset& a, const LabeledPoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto invariant = [](const LabeledPoset& p, std::size_t x) {
    std::size_t down = 0, up = 0;
    for (std::size_t y = 0; y < p.size(); ++y) {
      down += p.leq(y, x);
      up += p.leq(x, y);
    }
    return std::make_tuple(p.node(x).label, down, up);
  };
  std::vector<decltype(invariant(a, 0))> ia, ib;
  for (std::size_t x = 0; x < n; ++x) {
    ia.push_back(invariant(a, x));
    ib.push_back(invariant(b, x));
  }
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || ia[x] != ib[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        auto w = static_cast<std::size_t>(map[z]);
        ok = a.leq(z, x) == b.leq(w, y) && a.leq(x, z) == b.leq(y, w);
      }
      if (!ok) continue;
      map[x] = static_cast<int>(y);
      used[y] = 1;
      if (go(x + 1)) return true;
      used[y] = 0;
    }
    map[x] = -1;
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

ParabolicLawReport check_parabolic_laws(const graph::LabeledGraph& clique, const graph::GroupCatalog& cat) {
  if (clique.mode() != graph::Mode::Product) throw InvalidInput("parabolic laws need a product-mode graph");
  std::vector<int> all(static_cast<std::size_t>(clique.size()));
  for (int v = 0; v < clique.size(); ++v) all[static_cast<std::size_t>(v)] = v;
  if (!clique.is_clique(all)) throw InvalidInput("parabolic laws are checked on clique graphs only");
  if (clique.size() > 12) throw BudgetExceeded("too many vertices");

  std::vector<fin::PermGroup> groups;
  for (int v = 0; v < clique.size(); ++v) groups.push_back(cat.group(clique.group(v)));
  std::vector<const fin::PermGroup*> ptrs;
  for (const auto& g : groups) ptrs.push_back(&g);
  fin::PermGroup G = ptrs.empty() ? fin::PermGroup(1, {}) : fin::direct_product(ptrs);
  auto classes = fin::subgroup_classes(G);

  const unsigned masks = 1U << clique.size();
  std::vector<std::size_t> cls(masks);
  std::vector<fin::Bits> down(masks), up(masks);
  for (unsigned m = 0; m < masks; ++m) {
    std::vector<int> gens;
    std::size_t k = 0;
    for (int v = 0; v < clique.size(); ++v)
      for (std::size_t i = 0; i < groups[static_cast<std::size_t>(v)].generators().size(); ++i, ++k)
        if (m >> v & 1U) gens.push_back(G.generator_index(k));
    auto c = classes.class_of(fin::generated_subgroup(G, gens));
    if (!c) throw std::logic_error("special subgroup missing from the class poset");
    cls[m] = *c;
    down[m] = fin::empty_bits(classes.size());
    up[m] = fin::empty_bits(classes.size());
    for (std::size_t y = 0; y < classes.size(); ++y) {
      if (classes.leq(y, *c)) fin::set_bit(down[m], static_cast<int>(y));
      if (classes.leq(*c, y)) fin::set_bit(up[m], static_cast<int>(y));
    }
  }
  ParabolicLawReport r;
  r.group_order = G.order();
  r.classes = classes.size();
  for (unsigned a = 0; a < masks; ++a)
    for (unsigned b = 0; b < masks; ++b) {
      ++r.pairs;
      // The meet is c exactly when the common lower set is the lower set of c.
      if (fin::intersect(down[a], down[b]) != down[a & b]) ++r.failures;
      else if (fin::intersect(up[a], up[b]) != up[a | b]) ++r.failures;
    }
  return r;
}

}  // namespace cgt::recon
