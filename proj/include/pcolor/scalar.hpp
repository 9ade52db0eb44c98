#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pcolor/errors.hpp"

namespace pcolor {

/// Which field the scalars live in: the rationals, or a prime field F_p.
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint64_t p = 0;  ///< modulus, meaningful only when kind == prime

  static FieldSpec rationals() { return FieldSpec{Kind::rational, 0}; }

  /// Builds the spec for F_p.  Throws ValidationError unless p is prime.
  /// Characteristic 2 is legal here; algebra construction rejects it later.
  static FieldSpec prime_field(std::uint64_t p);

  bool is_prime_field() const { return kind == Kind::prime; }
  std::uint64_t characteristic() const { return is_prime_field() ? p : 0; }

  bool operator==(const FieldSpec&) const = default;

  std::string to_string() const;
};

/// Deterministic 64-bit Miller-Rabin primality test.
bool is_prime_u64(std::uint64_t n);

/// An exact field element tagged with its FieldSpec.
///
/// Rationals are GMP mpq_class values kept in canonical form (lowest terms,
/// positive denominator); prime-field elements are residues in [0, p).
/// All binary operations require both operands to carry the same FieldSpec
/// and throw FieldMismatch otherwise.
class Scalar {
public:
  /// Default-constructs rational zero; mostly for container resizing.
  Scalar() : spec_(FieldSpec::rationals()), rat_(0), res_(0) {}

  static Scalar zero(const FieldSpec& f) { return from_integer(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_integer(f, 1); }
  static Scalar from_integer(const FieldSpec& f, long long n);

  /// Parses a canonical literal: "n" or "n/d" over the rationals (arbitrary
  /// precision), a non-negative residue over F_p.  Throws ParseError on
  /// malformed input and DivisionByZero on "n/0".
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;  ///< throws DivisionByZero on zero

  /// base^e with e any signed integer; x^0 == 1 (including 0^0 by the usual
  /// empty-product convention), negative e inverts first.
  Scalar pow(long long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  /// Canonical literal, inverse of parse(): "-3/7", "42", "4".
  std::string str() const;

  /// Re-derives the canonical form from the raw representation.  A no-op on
  /// well-formed values; exists so tests can assert canonicalization is
  /// idempotent.
  Scalar canonicalized() const;

private:
  Scalar(FieldSpec spec, mpq_class rat, std::uint64_t res)
      : spec_(spec), rat_(std::move(rat)), res_(res) {}

  static void require_same_field(const Scalar& a, const Scalar& b);

  FieldSpec spec_;
  mpq_class rat_;       // used iff spec_.kind == rational
  std::uint64_t res_;   // used iff spec_.kind == prime
};

}  // namespace pcolor
