#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/finite/isomorphism.hpp"
#include "cgt/finite/perm_group.hpp"
#include "cgt/finite/presentation.hpp"

namespace cgt::graph {

/// Named finite group: permutation generators (1-based one-line images) and
/// its decomposition into directly indecomposable factors.
struct CatalogEntry {
  std::string name;
  int degree = 1;
  std::vector<std::vector<int>> gens;
  std::vector<std::string> factors;
};

class GroupCatalog {
 public:
  GroupCatalog() = default;
  GroupCatalog(const GroupCatalog& other);
  GroupCatalog& operator=(const GroupCatalog& other);

  /// The catalog shipped with the library.
  static const GroupCatalog& builtin();
  /// Parses a JSON array of entries (or an object with an "entries" array).
  static GroupCatalog from_json(std::string_view text);
  std::string to_json() const;

  /// Adds or replaces an entry; factors default to the entry itself.
  void add(CatalogEntry e);
  bool contains(std::string_view name) const;
  /// Throws InvalidInput for an unknown name.
  const CatalogEntry& at(std::string_view name) const;
  std::vector<std::string> names() const;

  fin::PermGroup group(std::string_view name) const;
  /// Presentation on the entry's generators, named by `prefix` ("v" for one
  /// generator, "v.1", "v.2", ... otherwise).
  fin::GroupPresentation presentation(std::string_view name, std::string_view prefix) const;
  bool indecomposable(std::string_view name) const;
  /// Name of a catalog group isomorphic to g, directly indecomposable
  /// entries first; nullopt when none is.
  std::optional<std::string> identify(const fin::PermGroup& g) const;

 private:
  std::vector<CatalogEntry> entries_;
  mutable std::mutex mu_;
  mutable std::map<std::string, fin::GroupPresentation, std::less<>> pres_cache_;
  mutable std::map<std::string, fin::IsoSignature, std::less<>> sig_cache_;
};

/// Generator names for a vertex whose group has `count` generators.
std::vector<std::string> vertex_generator_names(std::string_view vertex, std::size_t count);

}  // namespace cgt::graph
