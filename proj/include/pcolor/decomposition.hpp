#pragma once

#include "pcolor/axioms.hpp"

namespace pcolor {

/// Span of op(u, w) over all pairs of generators of two global subspaces,
/// again as a global subspace.
Subspace span_of_products(const ColorAlgebra& algebra, BilinearOp op, const Subspace& u,
                          const Subspace& w);

/// True when {u,w}, {w,u}, uw and wu are all zero.
bool are_orthogonal(const ColorAlgebra& algebra, const Subspace& u, const Subspace& w);

/// Smallest subspace containing x that absorbs bracket and product
/// multiplication by the whole algebra on either side.
Subspace ideal_generated_by(const ColorAlgebra& algebra, const Element& x);

/// The subalgebra attached to one connection class [g]: its inner pieces at
/// the shift degrees, the full components over the class itself, and the
/// assembled global subspace together with verified closure flags.
struct IdealDescriptor {
  std::vector<GroupElement> class_elements;   ///< the class, sorted
  std::map<GroupElement, Subspace> p_alpha;   ///< alpha -> inner piece, alpha in {0, +-g0}
  std::map<GroupElement, Subspace> pieces;    ///< degree -> nonzero piece (class + shifts)
  Subspace total;                             ///< everything embedded, as one global subspace
  bool is_subalgebra = false;                 ///< {T,T} + TT subset of T, verified
  bool is_ideal = false;                      ///< {T,P} + {P,T} + TP + PT subset of T, verified

  IdealDescriptor(Subspace t) : total(std::move(t)) {}
};

/// The inner piece at a shift degree alpha in {0, g0, -g0}:
///   sum_{h in class, p in Sigma, p = -h-g0+alpha} {P_h, P_p}
///     + sum_{k in class, q in Sigma or q = -g0, q = -k+alpha} P_k P_q,
/// a subspace of the alpha component.
Subspace compute_p_alpha(const ColorAlgebra& algebra, const RestrictedSupport& support,
                         const std::vector<GroupElement>& class_elements,
                         const GroupElement& alpha);

IdealDescriptor compute_ideal(const ColorAlgebra& algebra, const RestrictedSupport& support,
                              const std::vector<GroupElement>& class_elements);

/// The decomposition of P into the class subalgebras plus a residual inside
/// the shift components that no inner piece reaches.
struct DecompositionReport {
  SupportPartition partition;
  std::vector<IdealDescriptor> ideals;       ///< one per class, in class order
  std::map<GroupElement, Subspace> residual; ///< shift degree -> complement of the inner sum
  int residual_dim = 0;
  bool sums_to_p = false;                    ///< ideals + residual span the whole algebra
  bool is_direct = false;                    ///< dimensions add up, so the sum is direct
  bool pairwise_orthogonal = false;          ///< distinct ideals multiply to zero
};

DecompositionReport decompose(const ColorAlgebra& algebra,
                              Execution exec = Execution::parallel);

/// Standing hypotheses for the simplicity criterion and the minimal-ideal
/// decomposition: 2-torsion-free grading group, centerless, maximal length,
/// symmetric restricted support, Sigma-multiplicative, and tightness at
/// every beta in {0, +-g0, +-2g0, -3g0}.
struct HypothesisReport {
  PredicateResult two_torsion_free;
  PredicateResult centerless;
  PredicateResult maximal_length;
  PredicateResult symmetric_support;
  PredicateResult sigma_multiplicative;
  std::map<GroupElement, bool> tight_at;

  bool all() const;
  std::vector<std::string> failures() const;
};

HypothesisReport check_simplicity_hypotheses(const ColorAlgebra& algebra);

struct SimplicityResult {
  std::string method;                         ///< "criterion" or "oracle"
  bool applicable = false;
  std::vector<std::string> failed_hypotheses; ///< criterion only
  bool simple = false;
  bool sigma_connected = false;
  bool bracket_nonzero = false;
  bool product_nonzero = false;
  std::optional<Element> witness;             ///< oracle: generator of a proper ideal
  std::string detail;
};

/// Verdict by the connectedness criterion.  Inapplicable (with the failures
/// listed) when a hypothesis fails, unless assume_hypotheses is set.
SimplicityResult is_simple_criterion(const ColorAlgebra& algebra,
                                     bool assume_hypotheses = false,
                                     Execution exec = Execution::parallel);

/// Ground-truth verdict over a prime field: both operations are nonzero and
/// the ideal generated by every homogeneous element is the whole algebra.
/// Inapplicable over the rationals.
SimplicityResult is_simple_oracle(const ColorAlgebra& algebra,
                                  Execution exec = Execution::parallel);

/// Every class subalgebra re-expressed as a standalone algebra over the same
/// group, bicharacter and degree.  Throws if the piece is not closed.
ColorAlgebra extract_component(const ColorAlgebra& algebra, const IdealDescriptor& ideal);

struct MinimalDecomposition {
  DecompositionReport report;
  std::vector<ColorAlgebra> components;  ///< extracted ideals, in class order
};

MinimalDecomposition minimal_ideal_decomposition(const ColorAlgebra& algebra,
                                                 Execution exec = Execution::parallel);

}  // namespace pcolor
