#include "pcolor/bicharacter.hpp"

namespace pcolor {

std::vector<Bicharacter::Violation> Bicharacter::validate(const GroupSpec& group,
                                                          const FieldSpec& field,
                                                          const Matrix& values) {
  std::vector<Violation> out;
  const int n = group.generator_count();
  if (static_cast<int>(values.size()) != n) {
    out.push_back({"bad_shape", 0, 0,
                   "matrix has " + std::to_string(values.size()) + " rows, expected " +
                       std::to_string(n)});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(values[i].size()) != n) {
      out.push_back({"bad_shape", i, 0, "row " + std::to_string(i) + " has wrong length"});
      return out;
    }
  }
  const Scalar one = Scalar::one(field);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (values[i][j].field() != field) {
        out.push_back({"field_mismatch", i, j, "entry lives over " +
                                                    values[i][j].field().to_string()});
        return out;
      }
      if (values[i][j].is_zero()) {
        out.push_back({"zero_entry", i, j, "bicharacter values must be nonzero"});
      }
    }
  }
  if (!out.empty()) return out;

  for (int i = 0; i < n; ++i) {
    if (values[i][i] != one && values[i][i] != -one) {
      out.push_back({"diagonal_not_pm1", i, i,
                     "B[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                         values[i][i].str() + " is not +-1"});
    }
    for (int j = i + 1; j < n; ++j) {
      if (values[i][j] * values[j][i] != one) {
        out.push_back({"not_skew", i, j,
                       "B[i][j]*B[j][i] = " + (values[i][j] * values[j][i]).str() +
                           " != 1 at i=" + std::to_string(i) + ", j=" + std::to_string(j)});
      }
    }
  }
  for (std::size_t t = 0; t < group.torsion.size(); ++t) {
    const int i = group.free_rank + static_cast<int>(t);
    const long long m = group.torsion[t];
    for (int j = 0; j < n; ++j) {
      if (values[i][j].pow(m) != one || values[j][i].pow(m) != one) {
        out.push_back({"torsion_incompatible", i, j,
                       "generator " + std::to_string(i) + " has order " + std::to_string(m) +
                           " but B[" + std::to_string(i) + "][" + std::to_string(j) +
                           "]^m != 1 or B[j][i]^m != 1"});
      }
    }
  }
  return out;
}

Bicharacter Bicharacter::create(GroupSpec group, FieldSpec field, Matrix values) {
  auto violations = validate(group, field, values);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    throw ValidationError("/bicharacter/" + std::to_string(v.i) + "/" + std::to_string(v.j),
                          v.code + ": " + v.message);
  }
  return Bicharacter(std::move(group), field, std::move(values));
}

Bicharacter Bicharacter::trivial(GroupSpec group, FieldSpec field) {
  const int n = group.generator_count();
  Matrix m(n, std::vector<Scalar>(n, Scalar::one(field)));
  return Bicharacter(std::move(group), field, std::move(m));
}

Scalar Bicharacter::eval(const GroupElement& g, const GroupElement& h) const {
  const GroupElement gc = group_.element(g.coords);
  const GroupElement hc = group_.element(h.coords);
  Scalar r = Scalar::one(field_);
  const int n = group_.generator_count();
  for (int i = 0; i < n; ++i) {
    if (gc.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (hc.coords[j] == 0) continue;
      __int128 e = static_cast<__int128>(gc.coords[i]) * hc.coords[j];
      if (e > (__int128(1) << 62) || e < -(__int128(1) << 62)) {
        throw Error("bicharacter exponent overflow");
      }
      r = r * values_[i][j].pow(static_cast<long long>(e));
    }
  }
  return r;
}

}  // namespace pcolor
