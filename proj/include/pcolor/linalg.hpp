#pragma once

#include <vector>

#include "pcolor/scalar.hpp"

namespace pcolor {

/// Dense coordinate vector over one field.
using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, int n);
bool vec_is_zero(const Vec& v);

/// y += a * x  (vectors must have equal length)
void vec_axpy(Vec& y, const Scalar& a, const Vec& x);

Vec vec_scaled(const Vec& x, const Scalar& a);
Vec vec_sum(const Vec& a, const Vec& b);

/// In-place reduced row echelon form with leading ones; returns the pivot
/// column indices in increasing order.  Zero rows are removed.  Pivoting is
/// deterministic (first nonzero column, topmost candidate row), and since
/// RREF is unique the output depends only on the row span.
std::vector<int> rref(std::vector<Vec>& rows);

/// Canonical basis of the right nullspace {x : M x = 0} of the matrix with
/// the given rows, each of length ncols; one basis vector per free column of
/// the RREF, in increasing free-column order.
std::vector<Vec> nullspace(std::vector<Vec> rows, const FieldSpec& f, int ncols);

}  // namespace pcolor
