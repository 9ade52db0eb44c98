#include "pcolor/scalar.hpp"

#include <charconv>
#include <utility>

namespace pcolor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid: returns x with a*x == gcd(a,m) (mod m).
u64 invmod(u64 a, u64 m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DivisionByZero("element has no inverse mod " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<u64>(t);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(u64 p) {
  if (!is_prime_u64(p)) {
    throw ValidationError("", std::to_string(p) + " is not prime");
  }
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "F_" + std::to_string(p) : "Q";
}

Scalar Scalar::from_integer(const FieldSpec& f, long long n) {
  if (f.is_prime_field()) {
    std::int64_t r = n % static_cast<std::int64_t>(f.p);
    if (r < 0) r += static_cast<std::int64_t>(f.p);
    return Scalar(f, mpq_class(0), static_cast<u64>(r));
  }
  return Scalar(f, mpq_class(static_cast<long>(n)), 0);
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("", "empty scalar literal");
  if (f.is_prime_field()) {
    const bool negative = s[0] == '-';
    const char* begin = s.data() + (negative ? 1 : 0);
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || begin == ptr) {
      throw ParseError("", "bad residue literal '" + s + "' for " + f.to_string());
    }
    v %= f.p;
    if (negative && v != 0) v = f.p - v;
    return Scalar(f, mpq_class(0), v);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw ParseError("", "bad rational literal '" + s + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(f, q, 0);
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (a.spec_ != b.spec_) {
    throw FieldMismatch("scalar fields differ: " + a.spec_.to_string() + " vs " +
                        b.spec_.to_string());
  }
}

bool Scalar::is_zero() const {
  return spec_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return spec_.is_prime_field() ? res_ == 1 % spec_.p : rat_ == 1;
}

Scalar Scalar::operator-() const {
  if (spec_.is_prime_field()) {
    return Scalar(spec_, rat_, res_ == 0 ? 0 : spec_.p - res_);
  }
  return Scalar(spec_, mpq_class(-rat_), 0);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (spec_.is_prime_field()) return Scalar(spec_, rat_, invmod(res_, spec_.p));
  return Scalar(spec_, mpq_class(1 / rat_), 0);
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inv() : *this;
  u64 n = e < 0 ? -static_cast<u64>(e) : static_cast<u64>(e);
  if (spec_.is_prime_field()) return Scalar(spec_, rat_, powmod(base.res_, n, spec_.p));
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.rat_.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.rat_.get_den().get_mpz_t(), n);
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(spec_, q, 0);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  if (a.spec_.is_prime_field()) {
    u64 s = a.res_ + b.res_;
    if (s >= a.spec_.p) s -= a.spec_.p;
    return Scalar(a.spec_, a.rat_, s);
  }
  return Scalar(a.spec_, mpq_class(a.rat_ + b.rat_), 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  if (a.spec_.is_prime_field()) {
    return Scalar(a.spec_, a.rat_, mulmod(a.res_, b.res_, a.spec_.p));
  }
  return Scalar(a.spec_, mpq_class(a.rat_ * b.rat_), 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool Scalar::operator==(const Scalar& b) const {
  if (spec_ != b.spec_) return false;
  return spec_.is_prime_field() ? res_ == b.res_ : rat_ == b.rat_;
}

std::string Scalar::str() const {
  if (spec_.is_prime_field()) return std::to_string(res_);
  return rat_.get_str();
}

Scalar Scalar::canonicalized() const {
  if (spec_.is_prime_field()) return Scalar(spec_, rat_, res_ % spec_.p);
  mpq_class q = rat_;
  q.canonicalize();
  return Scalar(spec_, q, 0);
}

}  // namespace pcolor
