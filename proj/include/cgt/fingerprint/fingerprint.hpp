#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/finite/isomorphism.hpp"
#include "cgt/finite/perm.hpp"
#include "cgt/finite/presentation.hpp"
#include "cgt/graph/catalog.hpp"

namespace cgt::fp {

/// One isomorphism class of finite quotients, with generator images in S_K
/// realizing it.
struct QuotientClass {
  fin::IsoSignature signature;
  std::string name;  // catalog name when one matches, else empty
  std::vector<fin::Perm> images;
};

/// The quotients of order at most `bound` that embed in S_`degree`.
struct Fingerprint {
  std::size_t bound = 0;
  int degree = 0;
  bool complete = true;
  std::vector<std::string> generators;
  std::vector<QuotientClass> classes;  // sorted by signature
  /// Number of epimorphisms onto each requested catalog group. Like the
  /// quotient set these depend only on the profinite completion, but they
  /// are not part of the set comparison.
  std::map<std::string, std::size_t> epimorphisms;
  std::size_t homomorphisms = 0;

  fin::PermGroup group(std::size_t i) const;
  /// Byte-identical for equal inputs; the search statistics are left out so
  /// that the worker count cannot show.
  std::string to_json(int indent = 2) const;
  static Fingerprint from_json(std::string_view text);
};

struct FingerprintOptions {
  std::size_t bound = 60;
  int degree = 4;
  int jobs = 1;
  std::size_t max_nodes = 500'000'000;
  std::vector<std::string> count_targets;
};

/// Image subgroups of all homomorphisms into S_K, grouped into isomorphism
/// classes (signature first, then explicit isomorphism).
Fingerprint quotients_up_to(const fin::GroupPresentation& p, const FingerprintOptions& opts,
                            const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

enum class Verdict { Equal, Differ, Incomparable };

struct Comparison {
  Verdict verdict = Verdict::Equal;
  /// Set when the verdict is Differ: a class present on one side only.
  std::optional<QuotientClass> witness;
  bool witness_in_first = false;
  std::string reason;
  /// Epimorphism counts over the targets both sides recorded.
  Verdict counts = Verdict::Incomparable;
  std::string count_witness;  // a target whose counts differ
};

/// Set equality of the classes. Incomparable when the bounds differ or
/// either side is incomplete.
Comparison compare(const Fingerprint& a, const Fingerprint& b);

std::string to_string(Verdict v);

}  // namespace cgt::fp
