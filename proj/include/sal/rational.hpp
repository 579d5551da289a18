#ifndef SAL_RATIONAL_HPP
#define SAL_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "sal/error.hpp"

namespace sal {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Thin wrapper over GMP's mpq_class whose only job is to make
// construction canonicalize (mpq_class(2, 4) would otherwise stay 2/4).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design, scalars mix with ints
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int num, int den) : v_(num, den) { normalize(); }
  Rational(long num, long den)
      : v_(mpz_class(static_cast<signed long>(num)), mpz_class(static_cast<signed long>(den))) {
    normalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { normalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { normalize(); }

  // Accepts "p", "p/q", optional sign, arbitrary precision. Rejects anything
  // else (in particular decimals).
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // Canonical "p/q" with gcd(p, q) = 1 and q > 0; integers render as "p/1".
  std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct already_canonical {};
  Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}

  void normalize() {
    if (sgn(v_.get_den()) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

}  // namespace sal

#endif
