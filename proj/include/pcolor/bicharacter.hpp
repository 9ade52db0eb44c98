#pragma once

#include <vector>

#include "pcolor/group.hpp"
#include "pcolor/scalar.hpp"

namespace pcolor {

/// A skew-symmetric bicharacter eps: G x G -> K \ {0}, stored as the matrix
/// of its values on generator pairs and evaluated multiplicatively:
///
///   eps(g, h) = prod_{i,j} B[i][j]^(g_i * h_j).
///
/// Validity (checked by validate()/create()):
///   - every entry nonzero,
///   - B[i][j] * B[j][i] == 1           (skew-symmetry),
///   - B[i][i] in {1, -1}               (forced by eps(g,g)^2 == 1),
///   - B[i][j]^m == 1 == B[j][i]^m whenever generator i has torsion order m
///     (well-definedness on torsion representatives).
class Bicharacter {
public:
  struct Violation {
    std::string code;  ///< "zero_entry" | "not_skew" | "diagonal_not_pm1" | "torsion_incompatible"
    int i = 0, j = 0;  ///< generator indices involved
    std::string message;
  };

  using Matrix = std::vector<std::vector<Scalar>>;

  /// Returns the full list of violations; empty means the matrix is valid.
  static std::vector<Violation> validate(const GroupSpec& group, const FieldSpec& field,
                                         const Matrix& values);

  /// Validating factory; throws ValidationError on the first violation.
  static Bicharacter create(GroupSpec group, FieldSpec field, Matrix values);

  /// The trivial bicharacter eps == 1.
  static Bicharacter trivial(GroupSpec group, FieldSpec field);

  const GroupSpec& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  const Matrix& values() const { return values_; }

  /// eps(g, h).  Group elements are canonicalized before exponentiation.
  Scalar eval(const GroupElement& g, const GroupElement& h) const;

  bool operator==(const Bicharacter&) const = default;

private:
  Bicharacter(GroupSpec group, FieldSpec field, Matrix values)
      : group_(std::move(group)), field_(field), values_(std::move(values)) {}

  GroupSpec group_;
  FieldSpec field_;
  Matrix values_;
};

}  // namespace pcolor
