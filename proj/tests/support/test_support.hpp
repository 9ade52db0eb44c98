#pragma once

// Shared fixtures for the unit and acceptance suites: an independent
// connection oracle built straight from the chain definition, random support
// generation, the hypothesis-satisfying instance pool, and the axiom-breaking
// mutation suite.  Everything here is deliberately written against the
// definitions rather than against the library's algorithms, so the two sides
// can disagree when one of them is wrong.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcolor/algebra.hpp"
#include "pcolor/connections.hpp"
#include "pcolor/families.hpp"

namespace pcolor::testing {

// ---------------------------------------------------------------------------
// Independent connection oracle.
//
// A chain g_1, g_2 + k_2, ..., g_n + k_n with g_i in +-Sigma ∪ {0, +-g0} and
// k_i in {0, +-g0} visits partial sums that must stay inside +-Sigma, so
// connectivity of g to h is reachability from g to +-h in the graph on
// +-Sigma whose edges are exactly the legal one-step increments g_i + k_i.
// The oracle enumerates chains of every length at once by computing the
// reflexive-transitive closure of that one-step relation.
class ClosureOracle {
public:
  explicit ClosureOracle(const RestrictedSupport& support)
      : group_(support.group()),
        nodes_(support.pm_sigma().begin(), support.pm_sigma().end()) {
    const int n = static_cast<int>(nodes_.size());

    std::set<GroupElement> shifts = {group_.zero(), support.g0(),
                                     group_.neg(support.g0())};
    std::set<GroupElement> step_elements = shifts;
    for (const GroupElement& g : nodes_) step_elements.insert(g);
    std::set<GroupElement> increments;
    for (const GroupElement& x : step_elements) {
      for (const GroupElement& k : shifts) increments.insert(group_.add(x, k));
    }

    reach_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      reach_[i][i] = 1;
      for (int j = 0; j < n; ++j) {
        if (increments.count(group_.sub(nodes_[j], nodes_[i]))) reach_[i][j] = 1;
      }
    }
    for (int m = 0; m < n; ++m) {
      for (int i = 0; i < n; ++i) {
        if (!reach_[i][m]) continue;
        for (int j = 0; j < n; ++j) {
          if (reach_[m][j]) reach_[i][j] = 1;
        }
      }
    }
  }

  bool connected(const GroupElement& g, const GroupElement& h) const {
    return reach_[index_of(g)][index_of(h)] ||
           reach_[index_of(g)][index_of(group_.neg(h))];
  }

  /// The partition of sigma induced by `connected`, classes sorted by
  /// smallest element, each class sorted.
  std::vector<std::vector<GroupElement>> partition(
      const std::set<GroupElement>& sigma) const {
    std::vector<std::vector<GroupElement>> classes;
    std::set<GroupElement> placed;
    for (const GroupElement& g : sigma) {
      if (placed.count(g)) continue;
      std::vector<GroupElement> cls;
      for (const GroupElement& h : sigma) {
        if (connected(g, h)) {
          cls.push_back(h);
          placed.insert(h);
        }
      }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

private:
  int index_of(const GroupElement& g) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), g);
    if (it == nodes_.end() || *it != g) throw Error("oracle: not in +-Sigma");
    return static_cast<int>(it - nodes_.begin());
  }

  GroupSpec group_;
  std::vector<GroupElement> nodes_;  // +-Sigma, sorted
  std::vector<std::vector<char>> reach_;
};

/// Literal replay of the chain conditions, written against the definition
/// and independent of verify_connection.
inline bool replay_chain(const RestrictedSupport& support, const Connection& c,
                         const GroupElement& g, const GroupElement& h) {
  const GroupSpec& grp = support.group();
  const std::set<GroupElement> shifts = {grp.zero(), support.g0(),
                                         grp.neg(support.g0())};
  if (c.steps.empty() || (c.sign != 1 && c.sign != -1)) return false;
  if (c.steps.front().g != g || c.steps.front().k != grp.zero()) return false;
  GroupElement sum = grp.zero();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& [gi, ki] = c.steps[i];
    if (!support.in_pm_sigma(gi) && !shifts.count(gi)) return false;
    if (!shifts.count(ki)) return false;
    sum = grp.add(sum, grp.add(gi, ki));
    const bool last = i + 1 == c.steps.size();
    if (!last && !support.in_pm_sigma(sum)) return false;
  }
  const GroupElement target = c.sign == 1 ? h : grp.neg(h);
  return sum == target;
}

// ---------------------------------------------------------------------------
// Random supports.

struct SupportSample {
  GroupSpec group;
  GroupElement g0;
  std::set<GroupElement> sigma;
};

inline GroupElement random_element(const GroupSpec& group, std::mt19937_64& rng) {
  std::vector<std::int64_t> coords;
  std::uniform_int_distribution<std::int64_t> free_coord(-4, 4);
  for (int i = 0; i < group.free_rank; ++i) coords.push_back(free_coord(rng));
  for (const std::int64_t m : group.torsion) {
    coords.push_back(std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng));
  }
  return group.element(std::move(coords));
}

/// A random restricted support: random group from a fixed pool, random g0
/// (zero one time in four), sigma symmetric unless asked otherwise, sized so
/// that |+-Sigma| <= 12.
inline SupportSample random_support(std::mt19937_64& rng, bool symmetric = true) {
  static const std::vector<GroupSpec> pool = {
      GroupSpec(1, {}),     GroupSpec(2, {}),     GroupSpec(0, {3}),
      GroupSpec(0, {5}),    GroupSpec(0, {7}),    GroupSpec(0, {9}),
      GroupSpec(0, {4}),    GroupSpec(0, {6}),    GroupSpec(1, {3}),
      GroupSpec(0, {3, 3})};
  const GroupSpec group = pool[std::uniform_int_distribution<std::size_t>(
      0, pool.size() - 1)(rng)];
  const GroupElement g0 = std::uniform_int_distribution<int>(0, 3)(rng) == 0
                              ? group.zero()
                              : random_element(group, rng);
  std::set<GroupElement> excluded = {group.zero(), g0, group.neg(g0)};
  const int target = std::uniform_int_distribution<int>(1, symmetric ? 5 : 6)(rng);
  std::set<GroupElement> sigma;
  for (int tries = 0; tries < 200 && static_cast<int>(sigma.size()) < target; ++tries) {
    const GroupElement g = random_element(group, rng);
    if (excluded.count(g)) continue;
    sigma.insert(g);
    if (symmetric) sigma.insert(group.neg(g));
  }
  return {group, g0, std::move(sigma)};
}

// ---------------------------------------------------------------------------
// Instance builders beyond the library families.

/// Twisted group algebra on Z_3 x Z_3 over F_7: omega = 2 is a primitive
/// cube root of unity, eps(u, v) = omega^{-det(u|v)}, the product is twisted
/// by the 2-cocycle sigma(u, v) = omega^{u_2 v_1}, and the bracket is zero.
/// A hypothesis-satisfying, connected, not-simple instance with a genuinely
/// nontrivial bicharacter.
inline ColorAlgebra twisted_torus_f7() {
  const FieldSpec field = FieldSpec::prime_field(7);
  const GroupSpec group(0, {3, 3});
  const Scalar omega = Scalar::from_integer(field, 2);
  const auto power = [&](std::int64_t exponent) {
    return omega.pow(((exponent % 3) + 3) % 3);
  };

  std::vector<BasisVector> basis;
  for (std::int64_t a = 0; a < 3; ++a) {
    for (std::int64_t b = 0; b < 3; ++b) {
      basis.push_back({"e(" + std::to_string(a) + "," + std::to_string(b) + ")",
                       group.element({a, b})});
    }
  }
  const auto index_of = [](const GroupElement& u) {
    return static_cast<int>(u.coords[0] * 3 + u.coords[1]);
  };

  Bicharacter::Matrix values(2, std::vector<Scalar>(2, Scalar::one(field)));
  values[0][1] = power(-1);
  values[1][0] = power(1);
  const Bicharacter eps = Bicharacter::create(group, field, values);

  SCMap product;
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const GroupElement& u = basis[i].degree;
      const GroupElement& v = basis[j].degree;
      product[{i, j}] = {{index_of(group.add(u, v)),
                          power(u.coords[1] * v.coords[0])}};
    }
  }
  return ColorAlgebra::create(group, field, eps, group.zero(), basis, SCMap{},
                              product);
}

/// K[G] with the zero bracket over F_p, for cyclic and bicyclic G.
inline ColorAlgebra group_algebra(const std::vector<std::int64_t>& torsion,
                                  std::uint64_t p) {
  const GroupSpec group(0, torsion);
  return zero_bracket_group_algebra(group, group.zero(), FieldSpec::prime_field(p));
}

struct PoolEntry {
  std::string name;
  ColorAlgebra algebra;
  bool simple;
};

/// The hypothesis-satisfying finite-field pool: every entry passes the full
/// hypothesis gate, so the connectedness criterion and the ideal-enumeration
/// oracle must agree on it.  Twelve entries; the two det tori are simple,
/// the rest are not.
inline std::vector<PoolEntry> hypothesis_pool() {
  std::vector<PoolEntry> pool;
  pool.push_back({"det-torus c=1 over F3", det_torus(3, 1, {0, 0}), true});
  pool.push_back({"det-torus c=2 over F3", det_torus(3, 2, {0, 0}), true});
  pool.push_back({"K[Z3] over F5", group_algebra({3}, 5), false});
  pool.push_back({"K[Z3] over F7", group_algebra({3}, 7), false});
  pool.push_back({"K[Z5] over F5", group_algebra({5}, 5), false});
  pool.push_back({"K[Z5] over F3", group_algebra({5}, 3), false});
  pool.push_back({"K[Z7] over F5", group_algebra({7}, 5), false});
  pool.push_back({"K[Z9] over F5", group_algebra({9}, 5), false});
  pool.push_back({"K[Z11] over F5", group_algebra({11}, 5), false});
  pool.push_back({"K[Z3xZ3] over F5", group_algebra({3, 3}, 5), false});
  pool.push_back({"twisted torus over F7", twisted_torus_f7(), false});
  pool.push_back({"det-torus (+) K[Z3] over F3",
                  direct_sum(det_torus(3, 1, {0, 0}), group_algebra({3}, 3)), false});
  return pool;
}

/// Axioms pass but Sigma-multiplicativity fails: the criterion must report
/// inapplicability while the oracle still reaches a verdict.
inline ColorAlgebra shifted_torus() { return det_torus(3, 1, {1, 0}); }

/// A direct sum of two simple det tori: two connection classes, two minimal
/// ideals, both extracted components simple.
inline ColorAlgebra two_torus_sum() {
  return direct_sum(det_torus(3, 1, {0, 0}), det_torus(3, 2, {0, 0}));
}

// ---------------------------------------------------------------------------
// Mutation suite.

struct Mutation {
  std::string name;
  ColorAlgebra algebra;
};

inline ColorAlgebra with_constants(const ColorAlgebra& a, SCMap bracket, SCMap product) {
  return ColorAlgebra::create_unchecked(a.group(), a.field(), a.epsilon(), a.g0(),
                                        a.basis(), std::move(bracket),
                                        std::move(product));
}

/// Hand-picked single- and double-entry corruptions of valid instances, each
/// of which provably violates at least one of the seven laws; collectively
/// they cover all seven.
inline std::vector<Mutation> mutation_suite() {
  std::vector<Mutation> out;
  const FieldSpec rat = FieldSpec::rationals();
  const auto one = [](const FieldSpec& f) { return Scalar::one(f); };
  const auto num = [](const FieldSpec& f, long long n) {
    return Scalar::from_integer(f, n);
  };

  const auto mutate = [&](const std::string& name, const ColorAlgebra& base,
                          auto edit) {
    SCMap brk = base.bracket_constants();
    SCMap prod = base.product_constants();
    edit(brk, prod);
    out.push_back({name, with_constants(base, std::move(brk), std::move(prod))});
  };

  {
    const ColorAlgebra base = odd_line(rat);
    const FieldSpec& f = base.field();
    mutate("odd-line: unit acts on xi from the left only", base,
           [&](SCMap&, SCMap& prod) { prod.erase({0, 1}); });
    mutate("odd-line: xi*xi retargeted to 1", base,
           [&](SCMap&, SCMap& prod) { prod[{1, 1}] = {{0, one(f)}}; });
    mutate("odd-line: {xi,xi} retargeted to xi", base,
           [&](SCMap& brk, SCMap&) { brk[{1, 1}] = {{1, one(f)}}; });
    mutate("odd-line: bracket entry {1,xi} = 1", base,
           [&](SCMap& brk, SCMap&) { brk[{0, 1}] = {{0, one(f)}}; });
    mutate("odd-line: bracket entry {1,1} = 1", base,
           [&](SCMap& brk, SCMap&) { brk[{0, 0}] = {{0, one(f)}}; });
    mutate("odd-line: unit square deleted", base,
           [&](SCMap&, SCMap& prod) { prod.erase({0, 0}); });
    mutate("odd-line: xi*1 doubled", base,
           [&](SCMap&, SCMap& prod) { prod[{1, 0}] = {{1, num(f, 2)}}; });

    // Same structure constants, sign character flattened to the trivial one:
    // {xi,xi} = 1 now contradicts anticommutativity.
    out.push_back(
        {"odd-line: bicharacter flattened to trivial",
         ColorAlgebra::create_unchecked(base.group(), f, Bicharacter::trivial(base.group(), f),
                                        base.g0(), base.basis(), base.bracket_constants(),
                                        base.product_constants())});
  }

  {
    const ColorAlgebra base = builtin_example("zero-bracket-group-algebra", rat);
    const FieldSpec& f = base.field();
    mutate("K[Z3]: e1*e2 retargeted to e1", base,
           [&](SCMap&, SCMap& prod) { prod[{1, 2}] = {{1, one(f)}}; });
    mutate("K[Z3]: e1*e1 doubled", base,
           [&](SCMap&, SCMap& prod) { prod[{1, 1}] = {{2, num(f, 2)}}; });
    mutate("K[Z3]: one-sided bracket {e1,e2} = e0", base,
           [&](SCMap& brk, SCMap&) { brk[{1, 2}] = {{0, one(f)}}; });
    mutate("K[Z3]: e1*e2 doubled one-sided", base,
           [&](SCMap&, SCMap& prod) { prod[{1, 2}] = {{0, num(f, 2)}}; });
    mutate("K[Z3]: skew bracket spike on (e1,e2)", base, [&](SCMap& brk, SCMap&) {
      brk[{1, 2}] = {{0, one(f)}};
      brk[{2, 1}] = {{0, num(f, -1)}};
    });
  }

  {
    const ColorAlgebra base = det_torus(3, 1, {0, 0});
    const FieldSpec& f = base.field();
    // Basis order is e(a,b) at index 3a + b; det((1,0),(0,1)) = 1.
    mutate("det-torus: bracket sign flipped one-sided", base,
           [&](SCMap& brk, SCMap&) { brk[{3, 1}] = {{4, num(f, 2)}}; });
    mutate("det-torus: bracket dropped one-sided", base,
           [&](SCMap& brk, SCMap&) { brk.erase({3, 1}); });
    mutate("det-torus: bracket retargeted to e(0,0)", base,
           [&](SCMap& brk, SCMap&) { brk[{3, 1}] = {{0, one(f)}}; });
    mutate("det-torus: product doubled one-sided", base,
           [&](SCMap&, SCMap& prod) { prod[{3, 1}] = {{4, num(f, 2)}}; });
    mutate("det-torus: product doubled both-sided", base, [&](SCMap&, SCMap& prod) {
      prod[{3, 1}] = {{4, num(f, 2)}};
      prod[{1, 3}] = {{4, num(f, 2)}};
    });
    mutate("det-torus: diagonal bracket {e(1,0),e(1,0)} = e(2,0)", base,
           [&](SCMap& brk, SCMap&) { brk[{3, 3}] = {{6, one(f)}}; });
    mutate("det-torus: skew bracket spike on (e(1,0),e(0,1))", base,
           [&](SCMap& brk, SCMap&) {
             brk[{3, 1}] = {{4, num(f, 2)}};
             brk[{1, 3}] = {{4, one(f)}};
           });
  }

  {
    const ColorAlgebra base = builtin_example("color-regrade", rat);
    const FieldSpec& f = base.field();
    mutate("color-regrade: t2*t1 deleted", base,
           [&](SCMap&, SCMap& prod) { prod.erase({2, 1}); });
    mutate("color-regrade: one-sided bracket {t1,t2} = 1", base,
           [&](SCMap& brk, SCMap&) { brk[{1, 2}] = {{0, one(f)}}; });
    mutate("color-regrade: {t1,t2} retargeted to t1", base,
           [&](SCMap& brk, SCMap&) { brk[{1, 2}] = {{1, one(f)}}; });
    mutate("color-regrade: t1*t2 doubled", base,
           [&](SCMap&, SCMap& prod) { prod[{1, 2}] = {{3, num(f, 2)}}; });
  }

  {
    const ColorAlgebra base = twisted_torus_f7();
    const FieldSpec& f = base.field();
    mutate("twisted torus: product coefficient off-cocycle", base,
           [&](SCMap&, SCMap& prod) { prod[{3, 1}] = {{4, num(f, 3)}}; });
    mutate("twisted torus: one-sided bracket spike", base,
           [&](SCMap& brk, SCMap&) { brk[{3, 1}] = {{4, one(f)}}; });
  }

  return out;
}

}  // namespace pcolor::testing
