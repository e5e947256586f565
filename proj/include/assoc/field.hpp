#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace assoc {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form. Rationals print as "n" or "n/d" with d > 0 and gcd(n,d)=1
// (gmp keeps mpq_class canonical). parse accepts both shapes.
std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

// n = squarefree * root^2, squarefree carrying the sign of n.
struct SquarefreeSplit {
  Integer squarefree;
  Integer root;
};
SquarefreeSplit squarefree_split(const Integer& n);

// Element a + b*sqrt(d) of a quadratic extension of the rationals.
// Purely rational values store b = 0, d = 0; otherwise d is squarefree, not 0 or 1.
// Values with different irrational d do not mix.
class QuadScalar {
 public:
  QuadScalar() : d_(0) {}
  QuadScalar(long n) : a_(n), d_(0) {}
  QuadScalar(const Rational& a) : a_(a), d_(0) {}
  QuadScalar(Rational a, Rational b, Integer d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  // Throws unless the value is purely rational.
  const Rational& rational() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  QuadScalar inverse() const;
  QuadScalar conjugate() const;  // a - b*sqrt(d)

 private:
  struct Raw {};
  QuadScalar(Raw, Rational a, Rational b, Integer d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  void normalize();
  // Common d for two operands, or throws on a genuine mismatch.
  static const Integer& join_d(const QuadScalar& x, const QuadScalar& y);

  Rational a_, b_;
  Integer d_;
};

using Scalar = QuadScalar;

QuadScalar quad_mul(const QuadScalar& x, const QuadScalar& y);

// Both square roots of q, first the one with positive leading coefficient.
// q = 0 yields the single root 0 twice.
std::pair<QuadScalar, QuadScalar> sqrt_in_quad(const Rational& q);

// Canonical text form "a/b+c/e*sqrt(d)" (rational values in plain rational form,
// "+" becomes "-" for negative c, integer parts printed without "/1").
std::string scalar_str(const QuadScalar& s);
QuadScalar parse_scalar(const std::string& s);

}  // namespace assoc
