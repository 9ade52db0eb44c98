#include "pcolor/subspace.hpp"

namespace pcolor {

std::string Ambient::to_string() const {
  if (kind == Kind::global) return "global[" + std::to_string(dim) + "]";
  return "P_" + degree.to_string() + "[" + std::to_string(dim) + "]";
}

Subspace Subspace::zero(const FieldSpec& f, Ambient ambient) {
  return Subspace(f, std::move(ambient));
}

Subspace Subspace::full(const FieldSpec& f, Ambient ambient) {
  Subspace s(f, std::move(ambient));
  for (int i = 0; i < s.ambient_.dim; ++i) {
    Vec e = vec_zero(f, s.ambient_.dim);
    e[i] = Scalar::one(f);
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FieldSpec& f, Ambient ambient, std::vector<Vec> generators) {
  Subspace s(f, std::move(ambient));
  for (const Vec& g : generators) {
    if (static_cast<int>(g.size()) != s.ambient_.dim) {
      throw AmbientMismatch("generator length " + std::to_string(g.size()) +
                            " does not match ambient " + s.ambient_.to_string());
    }
  }
  s.rows_ = std::move(generators);
  s.pivots_ = rref(s.rows_);
  return s;
}

void Subspace::require_same_ambient(const Subspace& other) const {
  if (!(ambient_ == other.ambient_) || field_ != other.field_) {
    throw AmbientMismatch("subspace ambients differ: " + ambient_.to_string() + " vs " +
                          other.ambient_.to_string());
  }
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r(v);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const Scalar c = r[pivots_[t]];
    if (!c.is_zero()) vec_axpy(r, -c, rows_[t]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(other);
  for (const Vec& r : other.rows_) {
    if (!contains(r)) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec coeffs;
  coeffs.reserve(rows_.size());
  for (std::size_t t = 0; t < rows_.size(); ++t) coeffs.push_back(v[pivots_[t]]);
  return coeffs;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same_ambient(other);
  std::vector<Vec> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return span(field_, ambient_, std::move(gens));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_ambient(other);
  if (is_zero() || other.is_zero()) return zero(field_, ambient_);
  // Solve sum_i a_i u_i = sum_j b_j w_j: kernel of the n x (dU + dW) system
  // whose c-th row is [u_i[c] | -w_j[c]].
  const int du = dim(), dw = other.dim();
  std::vector<Vec> system;
  system.reserve(ambient_.dim);
  for (int c = 0; c < ambient_.dim; ++c) {
    Vec row = vec_zero(field_, du + dw);
    for (int i = 0; i < du; ++i) row[i] = rows_[i][c];
    for (int j = 0; j < dw; ++j) row[du + j] = -other.rows_[j][c];
    system.push_back(std::move(row));
  }
  std::vector<Vec> kernel = nullspace(std::move(system), field_, du + dw);
  std::vector<Vec> gens;
  for (const Vec& k : kernel) {
    Vec x = vec_zero(field_, ambient_.dim);
    for (int i = 0; i < du; ++i) vec_axpy(x, k[i], rows_[i]);
    gens.push_back(std::move(x));
  }
  return span(field_, ambient_, std::move(gens));
}

Subspace Subspace::canonical_complement() const {
  std::vector<bool> is_pivot(ambient_.dim, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int c = 0; c < ambient_.dim; ++c) {
    if (is_pivot[c]) continue;
    Vec e = vec_zero(field_, ambient_.dim);
    e[c] = Scalar::one(field_);
    gens.push_back(std::move(e));
  }
  return span(field_, ambient_, std::move(gens));
}

}  // namespace pcolor
