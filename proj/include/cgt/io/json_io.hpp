#pragma once

#include <string>
#include <string_view>

#include "cgt/fibre/fibre.hpp"
#include "cgt/graph/labeled_graph.hpp"

namespace cgt::io {

/// Whole file as a string; throws InvalidInput when it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// `{"mode":"coxeter"|"product","vertices":[{"id":..,"group":..}],"edges":[{"u":..,"v":..,"m":..}]}`.
/// Throws InvalidInput on malformed input (unknown ids, loops, repeated
/// edges, labels below 2, missing vertex groups in product mode).
graph::LabeledGraph graph_from_json(std::string_view text);
std::string graph_to_json(const graph::LabeledGraph& g, int indent = 2);
graph::LabeledGraph read_graph(const std::string& path);

/// `{"degree":K,"target":[perm,...],"d":D,"factors":[{"generators":[..],
/// "relators":[word,..],"images":[perm,..]}]}` with permutations in cycle
/// notation. A single factor with "d" is repeated D times.
fib::FibreSpec fibre_spec_from_json(std::string_view text);

}  // namespace cgt::io
