#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cgt/finite/perm.hpp"
#include "cgt/graph/catalog.hpp"
#include "cgt/graph/labeled_graph.hpp"

namespace cgt::fp {

struct SeparationOptions {
  int conjugator_length = 8;            // conjugators searched breadth-first up to this length
  std::size_t max_conjugators = 200'000;
  std::size_t max_quotient_order = 5040;  // finite special subgroups larger than this are skipped
};

enum class SeparationVerdict { Separated, Conjugate, Inconclusive };

struct SeparationReport {
  SeparationVerdict verdict = SeparationVerdict::Inconclusive;
  std::vector<std::string> target;  // vertex ids of the retraction target
  std::size_t quotient_order = 0;
  std::vector<fin::Perm> quotient_generators;  // G_target, when separated
  /// Images of the given generators of A and B in the finite group G_target.
  std::vector<fin::Perm> images_a, images_b;
  std::size_t image_order_a = 0, image_order_b = 0;
  std::string conjugator_a, conjugator_b;
  std::vector<std::string> support_a, support_b;  // finite special subgroups holding the conjugates
  std::vector<std::vector<std::string>> tried;    // retraction targets in the order tried
  std::string reason;

  std::string to_json(int indent = 2) const;
};

/// Separates two finite subgroups A, B (given by generator words) by a finite
/// quotient. Each is conjugated into a finite special subgroup G_I, G_J
/// (smallest support found by bounded conjugator search), ordered so that
/// |J| <= |I|, and mapped by the retraction p_I onto the finite group G_I,
/// where conjugacy of the images is decided by brute force. Other finite
/// special subgroups are tried as targets if that fails. Works for graph
/// products of finite groups and for even Coxeter groups.
SeparationReport separating_quotient(const graph::LabeledGraph& g, const std::vector<std::string>& a,
                                     const std::vector<std::string>& b, const SeparationOptions& opts = {},
                                     const graph::GroupCatalog& cat = graph::GroupCatalog::builtin());

std::string to_string(SeparationVerdict v);

}  // namespace cgt::fp
