#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/graph/labeled_graph.hpp"

namespace cgt::rw {

/// Word in a Coxeter group: vertex indices, each letter an involution.
using CoxeterWord = std::vector<int>;

struct RewriteOptions {
  std::size_t max_words = 1'000'000;  // words visited across one call
};

/// Whitespace-separated vertex ids with optional "^k"; exponents are taken
/// mod 2.
CoxeterWord parse_coxeter_word(const graph::LabeledGraph& g, std::string_view text);
std::string format_coxeter_word(const graph::LabeledGraph& g, const CoxeterWord& w);

/// A reduced expression for w, reached by braid moves and deletions of "s s".
/// A word admits no deletion anywhere in its braid class exactly when it is
/// reduced, so the search is exact. Throws BudgetExceeded past the budget.
CoxeterWord coxeter_reduce(const graph::LabeledGraph& g, const CoxeterWord& w, const RewriteOptions& opts = {});
/// The lexicographically least reduced expression (by vertex order).
CoxeterWord coxeter_normal_form(const graph::LabeledGraph& g, const CoxeterWord& w, const RewriteOptions& opts = {});
bool coxeter_equal(const graph::LabeledGraph& g, const CoxeterWord& a, const CoxeterWord& b,
                   const RewriteOptions& opts = {});

/// p_X: keeps letters in X, deletes the others, then reduces. Only a
/// homomorphism when every label is even; throws InvalidInput otherwise.
CoxeterWord coxeter_retraction(const graph::LabeledGraph& g, const std::vector<int>& x, const CoxeterWord& w,
                               const RewriteOptions& opts = {});

}  // namespace cgt::rw
