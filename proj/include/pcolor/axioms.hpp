#pragma once

#include "pcolor/connections.hpp"

namespace pcolor {

/// Where and how a law failed: the basis tuple, the two sides that differ
/// (empty for the grading laws, whose offense is a single misplaced entry),
/// and a human-readable note.
struct Counterexample {
  std::vector<int> indices;
  Element lhs, rhs;
  std::string detail;

  bool operator==(const Counterexample&) const = default;
};

struct LawResult {
  bool pass = true;
  std::optional<Counterexample> counterexample;

  bool operator==(const LawResult&) const = default;
};

/// Verdict of every defining law.  For each failing law the recorded
/// counterexample is the lexicographically smallest basis tuple, so serial
/// and parallel runs agree byte for byte.
struct AxiomReport {
  LawResult grading_bracket;
  LawResult grading_product;
  LawResult commutativity;
  LawResult anticommutativity;
  LawResult associativity;
  LawResult jacobi;
  LawResult leibniz;

  bool all_pass() const {
    return grading_bracket.pass && grading_product.pass && commutativity.pass &&
           anticommutativity.pass && associativity.pass && jacobi.pass && leibniz.pass;
  }

  bool operator==(const AxiomReport&) const = default;
};

/// Checks the two grading rules plus color-commutativity, bracket
/// anticommutativity, associativity, the color Jacobi identity and the color
/// Leibniz rule on all basis tuples.
AxiomReport check_axioms(const ColorAlgebra& algebra, Execution exec = Execution::parallel);

/// The annihilator center {v : {v,P} + {P,v} + vP + Pv = 0}, as the exact
/// kernel of the linear system over all basis multipliers; a global
/// subspace (graded for algebras passing the axiom check).
Subspace compute_center(const ColorAlgebra& algebra);

struct PredicateResult {
  bool holds = true;
  std::string detail;  ///< first failure witness, empty when the predicate holds
};

/// P_0 != 0 and dim P_g == 1 for every g in Sigma.
PredicateResult is_maximal_length(const ColorAlgebra& algebra);

/// -g in Sigma for every g in Sigma.
PredicateResult is_symmetric_support(const ColorAlgebra& algebra);

/// For g in Sigma and h in Sigma ∪ ({0, +-g0} with nonzero component), if
/// g + h + k lands in Sigma for a shift k then the matching product is
/// nonzero: P_g P_h for k = 0, {P_g, P_h} for k = g0, (P_g P_h) P_{-g0} for
/// k = -g0.  Shifts are deduplicated as group elements in that order.
PredicateResult is_sigma_multiplicative(const ColorAlgebra& algebra);

struct TightnessResult {
  bool tight = false;
  Subspace witness;  ///< the computed sum, a subspace of the alpha component

  TightnessResult(bool t, Subspace w) : tight(t), witness(std::move(w)) {}
};

/// Whether P_alpha equals
///   sum_{h,p in Sigma\E, p = -h-g0+alpha} {P_h, P_p}
///     + sum_{k,q in Sigma\E, q = -k+alpha} P_k P_q,     E = {+-2g0, +-3g0}.
/// alpha must be n*g0 for n in {0, +-1, +-2, +-3}; anything else throws.
TightnessResult is_tight(const ColorAlgebra& algebra, const GroupElement& alpha);

}  // namespace pcolor
