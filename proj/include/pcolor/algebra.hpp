#pragma once

#include <map>
#include <optional>
#include <utility>

#include "pcolor/bicharacter.hpp"
#include "pcolor/subspace.hpp"

namespace pcolor {

/// One named homogeneous basis vector.
struct BasisVector {
  std::string name;
  GroupElement degree;
};

/// Sparse structure constants of one bilinear operation:
/// (i, j) -> sum_k c_k e_k, keyed by the input pair, output sorted by k.
/// Entries with empty output are never stored.
using SCMap = std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>;

/// A vector of the algebra in dense global basis coordinates.
struct Element {
  Vec coords;

  bool is_zero() const { return vec_is_zero(coords); }
  bool operator==(const Element&) const = default;
};

/// A finite-dimensional G-graded algebra with two bilinear operations, the
/// associative product and the bracket (of degree g0), over an exact field,
/// together with a skew-symmetric bicharacter.  Whether the two operations
/// actually satisfy the color-commutativity / anticommutativity / Jacobi /
/// Leibniz laws is the axiom checker's business, not the constructor's; the
/// validating factory enforces structure only (shapes, index ranges, unique
/// names, scalar fields, grading of every entry, characteristic != 2).
class ColorAlgebra {
public:
  /// Full structural validation; throws ValidationError with a JSON-pointer
  /// style path on the first offense.
  static ColorAlgebra create(GroupSpec group, FieldSpec field, Bicharacter epsilon,
                             GroupElement g0, std::vector<BasisVector> basis, SCMap bracket,
                             SCMap product);

  /// Same structural checks except the two grading rules, so that
  /// grading-broken inputs can reach the axiom checker and be diagnosed
  /// there (used by the mutation tests).
  static ColorAlgebra create_unchecked(GroupSpec group, FieldSpec field, Bicharacter epsilon,
                                       GroupElement g0, std::vector<BasisVector> basis,
                                       SCMap bracket, SCMap product);

  int dim() const { return static_cast<int>(basis_.size()); }
  const GroupSpec& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  const Bicharacter& epsilon() const { return epsilon_; }
  const GroupElement& g0() const { return g0_; }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const GroupElement& degree_of(int i) const { return basis_[i].degree; }
  const SCMap& bracket_constants() const { return bracket_; }
  const SCMap& product_constants() const { return product_; }

  /// Degrees with nonzero component, each mapped to the (increasing) global
  /// indices of its basis vectors.
  const std::map<GroupElement, std::vector<int>>& components() const { return components_; }
  int component_dim(const GroupElement& g) const;

  Element zero_element() const;
  Element basis_element(int i) const;
  Element scaled(const Element& x, const Scalar& c) const;
  Element sum(const Element& x, const Element& y) const;

  Element bracket(const Element& x, const Element& y) const;
  Element product(const Element& x, const Element& y) const;

  /// The common degree of the nonzero coordinates, nullopt when they span
  /// more than one degree or x == 0.
  std::optional<GroupElement> homogeneous_degree(const Element& x) const;

  Ambient global_ambient() const { return Ambient::global(dim()); }
  Ambient component_ambient(const GroupElement& g) const;

  Subspace component_full(const GroupElement& g) const;
  Subspace component_zero(const GroupElement& g) const;
  Subspace global_zero() const;
  Subspace global_full() const;

  /// Component-local row -> dense global coordinates, and back.  Restriction
  /// throws AmbientMismatch when the vector has support outside P_g.
  Vec embed_row(const GroupElement& g, const Vec& local) const;
  Vec restrict_to_component(const GroupElement& g, const Vec& global) const;
  Subspace embed_in_global(const Subspace& component_subspace) const;

  /// Splits a global subspace into homogeneous component subspaces; nullopt
  /// when some RREF row is not homogeneous (the subspace is not graded).
  std::optional<std::map<GroupElement, Subspace>> split_by_degree(const Subspace& global) const;

private:
  ColorAlgebra(GroupSpec group, FieldSpec field, Bicharacter epsilon, GroupElement g0,
               std::vector<BasisVector> basis, SCMap bracket, SCMap product);

  static ColorAlgebra build(GroupSpec group, FieldSpec field, Bicharacter epsilon,
                            GroupElement g0, std::vector<BasisVector> basis, SCMap bracket,
                            SCMap product, bool enforce_grading);

  Element eval(const SCMap& sc, const Element& x, const Element& y) const;

  GroupSpec group_;
  FieldSpec field_;
  Bicharacter epsilon_;
  GroupElement g0_;
  std::vector<BasisVector> basis_;
  SCMap bracket_;
  SCMap product_;
  std::map<GroupElement, std::vector<int>> components_;
};

enum class BilinearOp { product, bracket };

/// Span of {op(u, w) : u in U, w in W} for U <= P_g, W <= P_h, returned in
/// the target component P_{g+h} (product) or P_{g+h+g0} (bracket).  Requires
/// a grading-valid algebra; throws AmbientMismatch if some product escapes
/// the target component.
Subspace product_of_subspaces(const ColorAlgebra& algebra, BilinearOp op, const Subspace& u,
                              const Subspace& w);

}  // namespace pcolor
