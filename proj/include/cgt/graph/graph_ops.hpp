#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/finite/presentation.hpp"
#include "cgt/graph/catalog.hpp"
#include "cgt/graph/labeled_graph.hpp"

namespace cgt::graph {

/// <V | v^2, (vw)^m(v,w)>.
fin::GroupPresentation coxeter_presentation(const LabeledGraph& g);
/// Vertex-group presentations (generators named by vertex_generator_names)
/// plus commutators between the generators of adjacent vertices.
fin::GroupPresentation graph_product_presentation(const LabeledGraph& g,
                                                  const GroupCatalog& cat = GroupCatalog::builtin());
/// Whichever of the two applies to the graph's mode.
fin::GroupPresentation presentation(const LabeledGraph& g, const GroupCatalog& cat = GroupCatalog::builtin());

bool is_even(const LabeledGraph& g);
bool is_right_angled(const LabeledGraph& g);

/// Split V = V1 u V2 with every cross pair joined by an edge labelled 2, read
/// off the components of the complement of the label-2 graph; nullopt when
/// the graph is irreducible (one component).
std::optional<std::pair<std::vector<int>, std::vector<int>>> join_decomposition(const LabeledGraph& g);

struct AmalgamSplit {
  std::vector<int> star;  // st(v)
  std::vector<int> link;  // lk(v)
  std::vector<int> rest;  // V - {v}
};
/// G = G_st(v) *_{G_lk(v)} G_{V-v}. Throws InvalidInput when v is adjacent to
/// every other vertex.
AmalgamSplit amalgam_split(const LabeledGraph& g, int v);

bool is_module(const LabeledGraph& g, const std::vector<int>& omega);
/// Every vertex set Omega with 2 <= |Omega| < |V| such that each outside
/// vertex is adjacent to all of Omega or to none of it (with equal labels in
/// Coxeter mode). Sorted by size, then lexicographically.
std::vector<std::vector<int>> find_modules(const LabeledGraph& g);

/// Collapses a module to one vertex "*" labelled "G_{ids}". The result is in
/// product mode; a Coxeter input must be right-angled (vertices become C2).
LabeledGraph collapse(const LabeledGraph& g, const std::vector<int>& omega, const std::string& star_id = "*");
/// Replaces vertex `star_id` by `module`, joining every neighbour of the star
/// to every module vertex.
LabeledGraph splice(const LabeledGraph& collapsed, const std::string& star_id, const LabeledGraph& module);

/// Replaces each vertex whose group decomposes by a clique of its factors
/// (ids "<v>_1", "<v>_2", ...), each joined to the old neighbours.
LabeledGraph split_indecomposable(const LabeledGraph& g, const GroupCatalog& cat = GroupCatalog::builtin());

/// Label-preserving isomorphism as a vertex map a -> b, or nullopt.
std::optional<std::vector<int>> graph_isomorphism(const LabeledGraph& a, const LabeledGraph& b);
inline bool graph_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  return graph_isomorphism(a, b).has_value();
}

/// Vertex sets of all cliques (including the empty one), as bit masks.
std::vector<unsigned> cliques(const LabeledGraph& g);
std::vector<unsigned> maximal_cliques(const LabeledGraph& g);

}  // namespace cgt::graph
