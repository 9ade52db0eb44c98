#pragma once

#include <optional>

#include "pcolor/group.hpp"
#include "pcolor/linalg.hpp"

namespace pcolor {

/// Where a subspace lives: the whole algebra in global basis coordinates, or
/// one homogeneous component P_g in that component's local coordinates.
struct Ambient {
  enum class Kind { global, component };

  Kind kind = Kind::global;
  GroupElement degree;  ///< meaningful iff kind == component
  int dim = 0;          ///< number of coordinates

  static Ambient global(int dim) { return Ambient{Kind::global, GroupElement{}, dim}; }
  static Ambient component(GroupElement degree, int dim) {
    return Ambient{Kind::component, std::move(degree), dim};
  }

  bool operator==(const Ambient&) const = default;

  std::string to_string() const;
};

/// An exact linear subspace held as the unique RREF basis of its row span.
/// Two Subspaces are equal iff their ambients match and their rows are
/// identical, which by RREF uniqueness happens iff they are the same space.
class Subspace {
public:
  static Subspace zero(const FieldSpec& f, Ambient ambient);
  static Subspace full(const FieldSpec& f, Ambient ambient);
  static Subspace span(const FieldSpec& f, Ambient ambient, std::vector<Vec> generators);

  const Ambient& ambient() const { return ambient_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }

  /// Remainder of v after reduction by the RREF rows; zero iff v is in the
  /// subspace.
  Vec reduce(const Vec& v) const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients expressing v in the RREF row basis; nullopt when v is not
  /// in the subspace.  (Row t's coefficient is just v[pivot_t].)
  std::optional<Vec> coordinates_of(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// The coordinate complement: span of the unit vectors at non-pivot
  /// columns.  Deterministic, and satisfies dim + codim = ambient dim with
  /// complement ∩ *this = 0.
  Subspace canonical_complement() const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }

private:
  Subspace(FieldSpec f, Ambient a) : field_(f), ambient_(std::move(a)) {}

  void require_same_ambient(const Subspace& other) const;

  FieldSpec field_;
  Ambient ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace pcolor
