#include "cgt/graph/catalog.hpp"

#include <algorithm>
#include <cstdint>

#include "json.hpp"

#include "cgt/error.hpp"

namespace cgt::graph {

namespace {

constexpr const char* kBuiltin = R"json([
  {"name": "C1", "degree": 1, "gens": [], "factors": ["C1"]},
  {"name": "C2", "degree": 2, "gens": [[2,1]], "factors": ["C2"]},
  {"name": "C3", "degree": 3, "gens": [[2,3,1]], "factors": ["C3"]},
  {"name": "C4", "degree": 4, "gens": [[2,3,4,1]], "factors": ["C4"]},
  {"name": "C5", "degree": 5, "gens": [[2,3,4,5,1]], "factors": ["C5"]},
  {"name": "C6", "degree": 5, "gens": [[2,1,4,5,3]], "factors": ["C2","C3"]},
  {"name": "C7", "degree": 7, "gens": [[2,3,4,5,6,7,1]], "factors": ["C7"]},
  {"name": "C8", "degree": 8, "gens": [[2,3,4,5,6,7,8,1]], "factors": ["C8"]},
  {"name": "C9", "degree": 9, "gens": [[2,3,4,5,6,7,8,9,1]], "factors": ["C9"]},
  {"name": "C2xC2", "degree": 4, "gens": [[2,1,3,4],[1,2,4,3]], "factors": ["C2","C2"]},
  {"name": "C2xC2xC2", "degree": 6, "gens": [[2,1,3,4,5,6],[1,2,4,3,5,6],[1,2,3,4,6,5]], "factors": ["C2","C2","C2"]},
  {"name": "C2xC4", "degree": 6, "gens": [[2,1,3,4,5,6],[1,2,4,5,6,3]], "factors": ["C2","C4"]},
  {"name": "C3xC3", "degree": 6, "gens": [[2,3,1,4,5,6],[1,2,3,5,6,4]], "factors": ["C3","C3"]},
  {"name": "S3", "degree": 3, "gens": [[2,1,3],[2,3,1]], "factors": ["S3"]},
  {"name": "D4", "degree": 4, "gens": [[2,3,4,1],[3,2,1,4]], "factors": ["D4"]},
  {"name": "Q8", "degree": 8, "gens": [[2,3,4,1,6,7,8,5],[5,8,7,6,3,2,1,4]], "factors": ["Q8"]},
  {"name": "D5", "degree": 5, "gens": [[2,3,4,5,1],[5,4,3,2,1]], "factors": ["D5"]},
  {"name": "D6", "degree": 5, "gens": [[2,1,3,4,5],[2,3,1,4,5],[1,2,3,5,4]], "factors": ["S3","C2"]},
  {"name": "A4", "degree": 4, "gens": [[2,3,1,4],[2,1,4,3]], "factors": ["A4"]},
  {"name": "S4", "degree": 4, "gens": [[2,1,3,4],[2,3,4,1]], "factors": ["S4"]},
  {"name": "A5", "degree": 5, "gens": [[2,3,1,4,5],[2,3,4,5,1]], "factors": ["A5"]}
])json";

CatalogEntry entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.degree = j.value("degree", 1);
  if (j.contains("gens")) e.gens = j.at("gens").get<std::vector<std::vector<int>>>();
  if (j.contains("factors")) e.factors = j.at("factors").get<std::vector<std::string>>();
  return e;
}

}  // namespace

GroupCatalog::GroupCatalog(const GroupCatalog& other) {
  std::lock_guard lock(other.mu_);
  entries_ = other.entries_;
  pres_cache_ = other.pres_cache_;
  sig_cache_ = other.sig_cache_;
}

GroupCatalog& GroupCatalog::operator=(const GroupCatalog& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mu_, other.mu_);
  entries_ = other.entries_;
  pres_cache_ = other.pres_cache_;
  sig_cache_ = other.sig_cache_;
  return *this;
}

const GroupCatalog& GroupCatalog::builtin() {
  static const GroupCatalog cat = from_json(kBuiltin);
  return cat;
}

GroupCatalog GroupCatalog::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("catalog JSON: ") + e.what());
  }
  const nlohmann::json& arr = j.is_object() ? j.at("entries") : j;
  if (!arr.is_array()) throw InvalidInput("catalog JSON must be an array of entries");
  GroupCatalog cat;
  try {
    for (const auto& item : arr) cat.add(entry_from_json(item));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("catalog entry: ") + e.what());
  }
  return cat;
}

std::string GroupCatalog::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_)
    arr.push_back({{"name", e.name}, {"degree", e.degree}, {"gens", e.gens}, {"factors", e.factors}});
  return arr.dump(2);
}

void GroupCatalog::add(CatalogEntry e) {
  if (e.name.empty()) throw InvalidInput("catalog entry without a name");
  for (const auto& g : e.gens) {
    if (static_cast<int>(g.size()) != e.degree)
      throw InvalidInput("generator of " + e.name + " has the wrong degree");
    fin::Perm::from_one_line(g);
  }
  if (e.factors.empty()) e.factors = {e.name};
  std::lock_guard lock(mu_);
  pres_cache_.erase(e.name);
  sig_cache_.erase(e.name);
  for (auto& old : entries_) {
    if (old.name == e.name) {
      old = std::move(e);
      return;
    }
  }
  entries_.push_back(std::move(e));
}

bool GroupCatalog::contains(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& GroupCatalog::at(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw InvalidInput("group '" + std::string(name) + "' is not in the catalog");
}

std::vector<std::string> GroupCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

fin::PermGroup GroupCatalog::group(std::string_view name) const {
  const CatalogEntry& e = at(name);
  std::vector<fin::Perm> gens;
  for (const auto& g : e.gens) gens.push_back(fin::Perm::from_one_line(g));
  return fin::PermGroup(e.degree, std::move(gens));
}

fin::GroupPresentation GroupCatalog::presentation(std::string_view name, std::string_view prefix) const {
  const CatalogEntry& e = at(name);
  fin::GroupPresentation p;
  {
    std::lock_guard lock(mu_);
    auto it = pres_cache_.find(name);
    if (it != pres_cache_.end()) p = it->second;
  }
  if (p.generators.empty() && !e.gens.empty()) {
    std::vector<std::string> tmp;
    for (std::size_t i = 0; i < e.gens.size(); ++i) tmp.push_back("x" + std::to_string(i));
    p = fin::presentation_of(group(name), tmp);
    std::lock_guard lock(mu_);
    pres_cache_.emplace(std::string(name), p);
  }
  p.generators = vertex_generator_names(prefix, e.gens.size());
  return p;
}

bool GroupCatalog::indecomposable(std::string_view name) const {
  const CatalogEntry& e = at(name);
  return e.factors.size() == 1 && e.factors.front() == e.name;
}

std::optional<std::string> GroupCatalog::identify(const fin::PermGroup& g) const {
  const fin::IsoSignature sig = fin::iso_signature(g);
  std::vector<std::string> order = names();
  std::stable_partition(order.begin(), order.end(), [&](const std::string& n) { return indecomposable(n); });
  for (const auto& name : order) {
    fin::IsoSignature entry_sig;
    bool cached = false;
    {
      std::lock_guard lock(mu_);
      auto it = sig_cache_.find(name);
      if (it != sig_cache_.end()) {
        entry_sig = it->second;
        cached = true;
      }
    }
    if (!cached) {
      entry_sig = fin::iso_signature(group(name));
      std::lock_guard lock(mu_);
      sig_cache_.emplace(name, entry_sig);
    }
    if (entry_sig != sig) continue;
    fin::IsoOptions opts;
    opts.confirm_below = SIZE_MAX;
    if (fin::are_isomorphic(g, group(name), opts).value_or(false)) return name;
  }
  return std::nullopt;
}

std::vector<std::string> vertex_generator_names(std::string_view vertex, std::size_t count) {
  std::vector<std::string> out;
  if (count == 1) {
    out.emplace_back(vertex);
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(vertex) + "." + std::to_string(i + 1));
  return out;
}

}  // namespace cgt::graph
