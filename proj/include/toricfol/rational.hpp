#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "toricfol/error.hpp"

namespace toricfol {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. All constructors canonicalize,
/// so equality is structural and zero is always 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(static_cast<long>(v)) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(BigInt(std::to_string(v))) {}
  Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses `p` or `p/q` with an optional leading sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      auto b = t.find_first_not_of(" \t");
      auto e = t.find_last_not_of(" \t");
      t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    auto check_int = [&](const std::string& part, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i >= part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!check_int(num, true) || !check_int(den, false))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    return Rational(BigInt(num), BigInt(den));
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& gmp() const { return v_; }

  /// `p` for integers, `p/q` otherwise.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return from(-v_); }
  Rational abs() const { return from(::abs(v_)); }
  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return from(1 / v_);
  }
  Rational pow(unsigned e) const {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    return r;
  }
  mpq_class v_{0};
};

inline BigInt big(std::int64_t v) { return BigInt(std::to_string(v)); }

/// gcd with the convention gcd(x, 0) = |x|; result is nonnegative.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// True iff `d` divides `x`; 0 divides only 0.
inline bool divides(const BigInt& d, const BigInt& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace toricfol
