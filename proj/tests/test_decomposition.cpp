#include "doctest.h"

#include <set>

#include "support/test_support.hpp"
#include "pcolor/decomposition.hpp"
#include "pcolor/families.hpp"

using namespace pcolor;
using namespace pcolor::testing;

namespace {

Subspace shift_part(const ColorAlgebra& a) {
  const GroupSpec& grp = a.group();
  Subspace s = a.global_zero();
  for (const GroupElement& d : {grp.zero(), a.g0(), grp.neg(a.g0())}) {
    if (a.component_dim(d) > 0) s = s.sum(a.embed_in_global(a.component_full(d)));
  }
  return s;
}

}  // namespace

TEST_CASE("span of products and orthogonality") {
  const FieldSpec q = FieldSpec::rationals();
  const ColorAlgebra a = odd_line(q);
  const Subspace all = a.global_full();
  const Subspace brackets = span_of_products(a, BilinearOp::bracket, all, all);
  CHECK(brackets.dim() == 1);
  CHECK(brackets.contains(a.basis_element(0).coords));
  const Subspace products = span_of_products(a, BilinearOp::product, all, all);
  CHECK(products.dim() == 2);
  CHECK(!are_orthogonal(a, all, all));

  const ColorAlgebra sum = builtin_example("orthogonal-sum", q);
  const Subspace left = Subspace::span(
      q, sum.global_ambient(), {sum.basis_element(0).coords, sum.basis_element(1).coords});
  const Subspace right = Subspace::span(
      q, sum.global_ambient(), {sum.basis_element(2).coords, sum.basis_element(3).coords});
  CHECK(are_orthogonal(sum, left, right));
  CHECK(!are_orthogonal(sum, left, left));
}

TEST_CASE("generated ideals") {
  const ColorAlgebra torus = det_torus(3, 1, {0, 0});
  for (int i = 0; i < torus.dim(); ++i) {
    CHECK(ideal_generated_by(torus, torus.basis_element(i)).dim() == torus.dim());
  }

  const ColorAlgebra ga = group_algebra({3}, 5);
  CHECK(ideal_generated_by(ga, ga.basis_element(1)).dim() == 3);
  CHECK(ideal_generated_by(ga, ga.zero_element()).is_zero());

  // In the direct sum each summand generates only itself.
  const ColorAlgebra sum = builtin_example("orthogonal-sum", FieldSpec::prime_field(5));
  const Subspace from_xi = ideal_generated_by(sum, sum.basis_element(1));
  CHECK(from_xi.dim() == 2);
  CHECK(from_xi.contains(sum.basis_element(0).coords));
  CHECK(!from_xi.contains(sum.basis_element(2).coords));
}

TEST_CASE("inner pieces on the odd line") {
  const FieldSpec q = FieldSpec::rationals();
  const ColorAlgebra a = odd_line(q);
  const GroupSpec& z = a.group();
  const RestrictedSupport support = RestrictedSupport::of(a);
  const std::vector<GroupElement> cls = {z.element({1})};

  CHECK(compute_p_alpha(a, support, cls, z.zero()).dim() == 1);
  CHECK(compute_p_alpha(a, support, cls, z.element({-2})).dim() == 0);
  CHECK(compute_p_alpha(a, support, cls, z.element({2})).dim() == 0);

  const IdealDescriptor ideal = compute_ideal(a, support, cls);
  CHECK(ideal.class_elements == cls);
  CHECK(ideal.total.dim() == 2);
  CHECK(ideal.is_subalgebra);
  CHECK(ideal.is_ideal);
  CHECK(ideal.pieces.size() == 2);
  CHECK(ideal.p_alpha.at(z.zero()).dim() == 1);
}

TEST_CASE("decomposition of a connected group algebra") {
  const ColorAlgebra a = group_algebra({3}, 5);
  const DecompositionReport d = decompose(a);
  REQUIRE(d.ideals.size() == 1);
  CHECK(d.ideals[0].total.dim() == 3);
  CHECK(d.ideals[0].is_subalgebra);
  CHECK(d.ideals[0].is_ideal);
  CHECK(d.residual_dim == 0);
  CHECK(d.sums_to_p);
  CHECK(d.is_direct);
  CHECK(d.pairwise_orthogonal);
}

TEST_CASE("decomposition with a residual") {
  // Deleting the products e1*e2 and e2*e1 empties the inner piece at 0, so
  // P_0 survives as residual.  Structural fixture; associativity is gone.
  const ColorAlgebra base = builtin_example("zero-bracket-group-algebra", FieldSpec::rationals());
  SCMap prod = base.product_constants();
  prod.erase({1, 2});
  prod.erase({2, 1});
  const ColorAlgebra pruned = with_constants(base, SCMap{}, prod);

  const DecompositionReport d = decompose(pruned);
  REQUIRE(d.ideals.size() == 1);
  CHECK(d.ideals[0].total.dim() == 2);
  CHECK(d.ideals[0].is_ideal);
  CHECK(d.residual_dim == 1);
  CHECK(d.residual.at(base.group().zero()).dim() == 1);
  CHECK(d.sums_to_p);
  CHECK(d.is_direct);
}

TEST_CASE("two summands give two orthogonal ideals") {
  const ColorAlgebra a = direct_sum(det_torus(3, 1, {0, 0}), group_algebra({3}, 3));
  const DecompositionReport d = decompose(a);
  REQUIRE(d.ideals.size() == 2);
  std::multiset<int> dims = {d.ideals[0].total.dim(), d.ideals[1].total.dim()};
  CHECK(dims == std::multiset<int>{3, 9});
  CHECK(d.pairwise_orthogonal);
  CHECK(are_orthogonal(a, d.ideals[0].total, d.ideals[1].total));
  CHECK(d.residual_dim == 0);
  CHECK(d.is_direct);
  CHECK(d.sums_to_p);
  for (const IdealDescriptor& ideal : d.ideals) {
    CHECK(ideal.is_subalgebra);
    CHECK(ideal.is_ideal);
  }
}

TEST_CASE("hypothesis gate") {
  for (const PoolEntry& entry : hypothesis_pool()) {
    CAPTURE(entry.name);
    const HypothesisReport h = check_simplicity_hypotheses(entry.algebra);
    CHECK(h.all());
    CHECK(h.failures().empty());
  }

  const HypothesisReport shifted = check_simplicity_hypotheses(shifted_torus());
  CHECK(!shifted.all());
  REQUIRE(shifted.failures().size() == 1);
  CHECK(shifted.failures()[0] ==
        "not Sigma-multiplicative: {P_g, P_h} = 0 for g = (0,1), h = (0,0), k = (1,0)");

  const HypothesisReport odd = check_simplicity_hypotheses(odd_line(FieldSpec::rationals()));
  CHECK(!odd.all());  // Sigma = {1} is not symmetric
}

TEST_CASE("class ideals absorb same-class products") {
  // For h, k in one class, {P_h, P_k} and P_h P_k land inside that class's
  // ideal.
  for (const ColorAlgebra& a : {det_torus(3, 1, {0, 0}), twisted_torus_f7(),
                               direct_sum(det_torus(3, 1, {0, 0}), group_algebra({3}, 3))}) {
    const RestrictedSupport support = RestrictedSupport::of(a);
    const SupportPartition part = equivalence_classes(support);
    const DecompositionReport d = decompose(a);
    REQUIRE(d.ideals.size() == part.classes.size());
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
      const Subspace& total = d.ideals[c].total;
      for (const GroupElement& h : part.classes[c]) {
        for (const GroupElement& k : part.classes[c]) {
          const Subspace ph = a.embed_in_global(a.component_full(h));
          const Subspace pk = a.embed_in_global(a.component_full(k));
          CHECK(total.contains(span_of_products(a, BilinearOp::bracket, ph, pk)));
          CHECK(total.contains(span_of_products(a, BilinearOp::product, ph, pk)));
        }
      }
    }
  }
}

TEST_CASE("pool decompositions are clean") {
  for (const PoolEntry& entry : hypothesis_pool()) {
    CAPTURE(entry.name);
    const DecompositionReport d = decompose(entry.algebra);
    CHECK(d.residual_dim == 0);
    CHECK(d.sums_to_p);
    CHECK(d.is_direct);
    CHECK(d.pairwise_orthogonal);
    int total = 0;
    for (const IdealDescriptor& ideal : d.ideals) {
      CHECK(ideal.is_subalgebra);
      CHECK(ideal.is_ideal);
      total += ideal.total.dim();
    }
    CHECK(total == entry.algebra.dim());
  }
}

TEST_CASE("homogeneous generators escape the shift components") {
  // Over a prime field, under the standing hypotheses, no nonzero
  // homogeneous x with degree in Sigma generates an ideal inside
  // P_0 + P_{g0} + P_{-g0}.
  for (const ColorAlgebra& a : {group_algebra({3}, 5), twisted_torus_f7(),
                               det_torus(3, 1, {0, 0})}) {
    const Subspace shifts = shift_part(a);
    const RestrictedSupport support = RestrictedSupport::of(a);
    for (int i = 0; i < a.dim(); ++i) {
      if (!support.in_sigma(a.degree_of(i))) continue;
      const Subspace ideal = ideal_generated_by(a, a.basis_element(i));
      CHECK(!shifts.contains(ideal));
    }
  }
}

TEST_CASE("tight inclusion at -2g0") {
  // With P_{g0} tight and -2g0 in Sigma: {P_{-2g0}, P_{g0}} lands in the
  // inner piece of [-2g0] at 0, and P_{-2g0} P_{g0} in the piece at -g0.
  const ColorAlgebra a = det_torus(5, 1, {1, 0});
  REQUIRE(check_axioms(a).all_pass());
  const GroupSpec& grp = a.group();
  const GroupElement g0 = a.g0();
  const GroupElement m2g0 = grp.scale(-2, g0);

  REQUIRE(is_tight(a, g0).tight);
  const RestrictedSupport support = RestrictedSupport::of(a);
  REQUIRE(support.in_sigma(m2g0));

  const SupportPartition part = equivalence_classes(support);
  const int idx = part.class_index_of(m2g0);
  REQUIRE(idx >= 0);
  const std::vector<GroupElement>& cls = part.classes[idx];

  const Subspace p_m2g0 = a.embed_in_global(a.component_full(m2g0));
  const Subspace p_g0 = a.embed_in_global(a.component_full(g0));

  const Subspace bracket_span = span_of_products(a, BilinearOp::bracket, p_m2g0, p_g0);
  const Subspace piece_zero = a.embed_in_global(compute_p_alpha(a, support, cls, grp.zero()));
  CHECK(piece_zero.contains(bracket_span));

  const Subspace product_span = span_of_products(a, BilinearOp::product, p_m2g0, p_g0);
  const Subspace piece_minus = a.embed_in_global(compute_p_alpha(a, support, cls, grp.neg(g0)));
  CHECK(product_span.dim() == 1);  // nonvacuous on the product side
  CHECK(piece_minus.contains(product_span));
}

TEST_CASE("criterion and oracle verdicts") {
  const ColorAlgebra torus = det_torus(3, 1, {0, 0});
  const SimplicityResult crit = is_simple_criterion(torus);
  CHECK(crit.method == "criterion");
  CHECK(crit.applicable);
  CHECK(crit.failed_hypotheses.empty());
  CHECK(crit.sigma_connected);
  CHECK(crit.bracket_nonzero);
  CHECK(crit.product_nonzero);
  CHECK(crit.simple);

  const SimplicityResult orac = is_simple_oracle(torus);
  CHECK(orac.method == "oracle");
  CHECK(orac.applicable);
  CHECK(orac.simple);
  CHECK(!orac.witness.has_value());

  const ColorAlgebra ga = group_algebra({3}, 5);
  const SimplicityResult ga_crit = is_simple_criterion(ga);
  CHECK(ga_crit.applicable);
  CHECK(ga_crit.sigma_connected);
  CHECK(!ga_crit.bracket_nonzero);
  CHECK(!ga_crit.simple);
  const SimplicityResult ga_orac = is_simple_oracle(ga);
  CHECK(ga_orac.applicable);
  CHECK(!ga_orac.simple);

  // The oracle needs a prime field.
  CHECK(!is_simple_oracle(odd_line(FieldSpec::rationals())).applicable);

  // Hypothesis failure makes the criterion inapplicable and pessimistic.
  const SimplicityResult shifted = is_simple_criterion(shifted_torus());
  CHECK(!shifted.applicable);
  CHECK(!shifted.simple);
  CHECK(!shifted.failed_hypotheses.empty());
  const SimplicityResult shifted_oracle = is_simple_oracle(shifted_torus());
  CHECK(shifted_oracle.applicable);
  CHECK(shifted_oracle.simple);

  // assume_hypotheses skips the gate; on the odd line over F_5 the criterion
  // then agrees with the oracle.
  const ColorAlgebra odd5 = odd_line(FieldSpec::prime_field(5));
  const SimplicityResult assumed = is_simple_criterion(odd5, true);
  CHECK(assumed.applicable);
  CHECK(assumed.simple);
  CHECK(is_simple_oracle(odd5).simple);
}

TEST_CASE("oracle reports a witness on non-simple input") {
  const ColorAlgebra sum = builtin_example("orthogonal-sum", FieldSpec::prime_field(5));
  const SimplicityResult orac = is_simple_oracle(sum);
  CHECK(orac.applicable);
  CHECK(!orac.simple);
  REQUIRE(orac.witness.has_value());
  const Subspace proper = ideal_generated_by(sum, *orac.witness);
  CHECK(proper.dim() > 0);
  CHECK(proper.dim() < sum.dim());
}

TEST_CASE("serial and parallel decompositions agree") {
  const ColorAlgebra a = direct_sum(det_torus(3, 1, {0, 0}), group_algebra({3}, 3));
  const DecompositionReport ser = decompose(a, Execution::serial);
  const DecompositionReport par = decompose(a, Execution::parallel);
  CHECK(ser.partition.classes == par.partition.classes);
  CHECK(ser.partition.witnesses == par.partition.witnesses);
  REQUIRE(ser.ideals.size() == par.ideals.size());
  for (std::size_t i = 0; i < ser.ideals.size(); ++i) {
    CHECK(ser.ideals[i].total == par.ideals[i].total);
    CHECK(ser.ideals[i].p_alpha == par.ideals[i].p_alpha);
  }
  CHECK(ser.residual_dim == par.residual_dim);
}

TEST_CASE("component extraction") {
  const ColorAlgebra a = direct_sum(det_torus(3, 1, {0, 0}), group_algebra({3}, 3));
  const MinimalDecomposition min = minimal_ideal_decomposition(a);
  REQUIRE(min.components.size() == 2);
  const std::multiset<int> dims = {min.components[0].dim(), min.components[1].dim()};
  CHECK(dims == std::multiset<int>{3, 9});
  for (const ColorAlgebra& comp : min.components) {
    CHECK(check_axioms(comp).all_pass());
    CHECK(comp.field() == a.field());
    CHECK(comp.group() == a.group());
  }
  for (std::size_t i = 0; i < min.components.size(); ++i) {
    CHECK(min.components[i].dim() == min.report.ideals[i].total.dim());
  }
}
