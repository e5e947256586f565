#include "assoc/field.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

namespace assoc {

std::string rational_str(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("bad rational literal: " + s);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

namespace {

// Brent-cycle Pollard rho; n odd composite, not a prime power issue here.
Integer pollard_rho(const Integer& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(2463534242UL);
  while (true) {
    Integer y = rng.get_z_range(n - 3) + 2;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += m) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      do {
        ys = (ys * ys + c) % n;
        d = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(Integer m, unsigned long mult, std::map<Integer, unsigned long>& out) {
  if (m == 1) return;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    factor_rec(r, 2 * mult, out);
    return;
  }
  if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
    out[m] += mult;
    return;
  }
  Integer f = pollard_rho(m);
  factor_rec(f, mult, out);
  factor_rec(m / f, mult, out);
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n == 0) throw std::invalid_argument("squarefree_split(0)");
  Integer m = abs(n);
  std::map<Integer, unsigned long> factors;
  for (Integer p = 2; p <= (1 << 20) && p * p <= m; p += (p == 2) ? 1 : 2) {
    while (m % p == 0) {
      m /= p;
      ++factors[p];
    }
  }
  factor_rec(m, 1, factors);
  Integer s = (n < 0) ? -1 : 1;
  Integer root = 1;
  for (const auto& [p, e] : factors) {
    if (e % 2) s *= p;
    for (unsigned long i = 0; i < e / 2; ++i) root *= p;
  }
  return {s, root};
}

QuadScalar::QuadScalar(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ == 0 || d_ == 1)
    throw std::invalid_argument("quadratic part requires d other than 0 and 1");
  SquarefreeSplit sp = squarefree_split(d_);
  if (sp.squarefree != d_) throw std::invalid_argument("d must be squarefree: " + d_.get_str());
}

const Rational& QuadScalar::rational() const {
  if (!is_rational()) throw std::invalid_argument("scalar is not rational: " + scalar_str(*this));
  return a_;
}

void QuadScalar::normalize() {
  if (b_ == 0) d_ = 0;
}

const Integer& QuadScalar::join_d(const QuadScalar& x, const QuadScalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw std::invalid_argument("mixing sqrt(" + x.d_.get_str() + ") with sqrt(" +
                              y.d_.get_str() + ")");
}

QuadScalar QuadScalar::operator-() const {
  return QuadScalar(Raw{}, -a_, -b_, d_);
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  d_ = join_d(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  d_ = join_d(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  Integer d = join_d(*this, o);
  Rational a = a_ * o.a_;
  if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = std::move(d);
  normalize();
  return *this;
}

QuadScalar QuadScalar::conjugate() const {
  return QuadScalar(Raw{}, a_, -b_, d_);
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero scalar");
  if (b_ == 0) return QuadScalar(Rational(1) / a_);
  // norm a^2 - b^2 d is nonzero: d squarefree and not 1, so sqrt(d) is irrational
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  return QuadScalar(Raw{}, a_ / norm, -b_ / norm, d_);
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  return *this *= o.inverse();
}

QuadScalar quad_mul(const QuadScalar& x, const QuadScalar& y) {
  return x * y;
}

std::pair<QuadScalar, QuadScalar> sqrt_in_quad(const Rational& q) {
  if (q == 0) return {QuadScalar(), QuadScalar()};
  SquarefreeSplit sp = squarefree_split(q.get_num() * q.get_den());
  Rational coeff(sp.root, q.get_den());
  coeff.canonicalize();
  QuadScalar r = (sp.squarefree == 1) ? QuadScalar(coeff)
                                      : QuadScalar(Rational(0), coeff, sp.squarefree);
  return {r, -r};
}

std::string scalar_str(const QuadScalar& s) {
  if (s.is_rational()) return rational_str(s.a());
  std::string out = rational_str(s.a());
  out += (s.b() < 0) ? "-" : "+";
  out += rational_str(abs(s.b()));
  out += "*sqrt(" + s.d().get_str() + ")";
  return out;
}

QuadScalar parse_scalar(const std::string& s) {
  size_t at = s.find("*sqrt(");
  if (at == std::string::npos) return QuadScalar(parse_rational(s));
  if (s.back() != ')') throw std::invalid_argument("bad scalar literal: " + s);
  Integer d(s.substr(at + 6, s.size() - at - 7));
  // scan back over the b numeral to its sign
  size_t bs = at;
  while (bs > 0 && (std::isdigit(static_cast<unsigned char>(s[bs - 1])) || s[bs - 1] == '/')) --bs;
  if (bs == 0)
    return QuadScalar(Rational(0), parse_rational(s.substr(0, at)), d);
  char sign = s[bs - 1];
  if (sign != '+' && sign != '-') throw std::invalid_argument("bad scalar literal: " + s);
  Rational b = parse_rational(s.substr(bs, at - bs));
  if (sign == '-') b = -b;
  if (bs == 1) return QuadScalar(Rational(0), b, d);
  return QuadScalar(parse_rational(s.substr(0, bs - 1)), b, d);
}

}  // namespace assoc
