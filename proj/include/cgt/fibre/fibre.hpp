#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgt/finite/coset.hpp"
#include "cgt/finite/perm_group.hpp"
#include "cgt/finite/presentation.hpp"

namespace cgt::fib {

/// One factor G_i with its epimorphism phi_i onto Q, given by the images of
/// G_i's generators.
struct Factor {
  fin::GroupPresentation presentation;
  std::vector<fin::Perm> images;
};

/// The d factors of a fibre product over a common finite target Q. Q is the
/// permutation group generated by `target_generators` on `degree` points.
struct FibreSpec {
  std::vector<Factor> factors;
  int degree = 1;
  std::vector<fin::Perm> target_generators;

  std::size_t d() const { return factors.size(); }
  /// Throws InvalidInput unless every phi_i respects its relators and maps
  /// onto Q.
  void validate(std::size_t max_order = fin::PermGroup::kDefaultMaxOrder) const;
  fin::PermGroup target(std::size_t max_order = fin::PermGroup::kDefaultMaxOrder) const;

  /// `d` copies of one factor.
  static FibreSpec power(const Factor& f, std::size_t d, int degree, std::vector<fin::Perm> target_generators);
};

/// Element of G_1 x ... x G_d: one word per coordinate, in that factor's
/// generators.
using WordTuple = std::vector<fin::FreeWord>;

enum class TupleKind { Diagonal, Kernel };

struct FibreGenerator {
  WordTuple words;
  TupleKind kind = TupleKind::Diagonal;
  std::size_t coordinate = 0;  // kernel tuples: the non-trivial coordinate
  std::size_t source = 0;      // generator of G_1 (diagonal) or kernel word index
};

/// Generators of P_d = {(g_1, ..., g_d) : phi_i(g_i) = phi_j(g_j)}: for each
/// generator x of G_1 the tuple (x, l_2(x), ..., l_d(x)) where l_i(x) is a
/// word in G_i with the same image (x itself when factor i equals factor 1),
/// then the Schreier generators of each ker phi_i in coordinate i.
std::vector<FibreGenerator> fibre_generators(const FibreSpec& s,
                                             std::size_t max_order = fin::PermGroup::kDefaultMaxOrder);

/// Presentation of G_1 x ... x G_d: generator g of factor i is named "g_i",
/// factor relators are kept and generators of distinct factors commute.
fin::GroupPresentation product_presentation(const FibreSpec& s);
/// The tuple as one word of product_presentation(s).
fin::FreeWord product_word(const FibreSpec& s, const WordTuple& t);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

struct FibreCheck {
  std::string name;
  CheckStatus status = CheckStatus::Inconclusive;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_rows = 200'000;
  std::size_t max_order = fin::PermGroup::kDefaultMaxOrder;
  /// Finite-quotient lower bound on the index, used when enumeration runs out
  /// of rows: homomorphisms of each factor into S_k for k up to this degree.
  int quotient_degree = 4;
  std::size_t max_quotient_pairs = 400;
};

struct FibreReport {
  std::vector<FibreCheck> checks;  // fibre condition, projections, index, kernel
  std::size_t expected_index = 0;  // |Q|^(d-1)
  std::optional<std::size_t> index;
  std::size_t index_lower_bound = 1;
  /// Coset table of <gens> in the product, when enumeration finished.
  std::optional<fin::CosetTable> table;

  bool passed() const;
  std::string to_json(int indent = 2) const;
};

/// Checks (i) each tuple satisfies the fibre condition; (ii) each coordinate
/// projection of the tuples generates its factor (index 1); (iii) the index
/// of <gens> in the product equals |Q|^(d-1); (iv) every kernel generator of
/// phi_1, placed in coordinate 1, lies in <gens>.
FibreReport verify_fibre(const FibreSpec& s, const std::vector<FibreGenerator>& gens, const VerifyOptions& opts = {});

/// Lower bound on the index of <gens> in the product from finite quotients:
/// for homomorphisms psi_i of the factors into S_k, the index of the image
/// of <gens> in the product of the psi_i(G_i).
std::size_t index_lower_bound(const FibreSpec& s, const std::vector<FibreGenerator>& gens, int max_degree,
                              std::size_t max_pairs);

/// Hypotheses of the fibre-product flexibility theorem for a target Q:
/// finitely presented, no non-trivial finite quotients, H_2(Q; Z) = 0.
struct Hypothesis {
  std::string name;
  CheckStatus status = CheckStatus::Inconclusive;
  std::string source;
};

struct HypothesisLedger {
  std::string target;
  std::vector<Hypothesis> hypotheses;
  bool degenerate = false;  // trivial target: the conclusion says nothing

  bool all_pass() const;
  std::string to_json(int indent = 2) const;
};

HypothesisLedger hypothesis_checklist(const fin::PermGroup& q);
/// Symbolic target V_n, from cited results plus the parity computation.
HypothesisLedger hypothesis_checklist_vn(int n);

/// Primary invariants of a finite abelian group: prime powers, sorted.
std::vector<std::size_t> abelian_invariants(const fin::PermGroup& q);
/// Schur multiplier of an abelian group with the given primary invariants,
/// as primary invariants (empty when trivial).
std::vector<std::size_t> abelian_schur_multiplier(const std::vector<std::size_t>& primary);

/// The map C2*C2*C2*C2 -> V_n sending the free factors to b1..b4.
struct VnEpimorphismData {
  int n = 0;
  std::vector<std::string> images;   // tree-pair text of b1..b4
  std::vector<bool> involutions;     // b_i^2 = 1
  int depth = 0;
  std::size_t transpositions = 0;    // pairs of depth-`depth` leaves checked
  std::size_t reached = 0;           // synthesised words that evaluate correctly
  std::vector<std::string> misses;   // "a b" pairs that failed

  bool well_defined() const;
  std::string to_json(int indent = 2) const;
};

/// Checks that b1..b4 are involutions and that every transposition of two
/// leaves of the depth-`depth` complete tree is reached by a word in them.
/// Throws InvalidInput for n < 3 or depth < 1.
VnEpimorphismData vn_epimorphism_data(int n, int depth = 2);

}  // namespace cgt::fib
