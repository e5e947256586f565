#pragma once

// Free Lie algebras inside their enveloping series algebras: Lyndon words and
// their bracketings, conversion between Lyndon coordinates and associative
// series, BCH, the ad-power normal form, and the derivation-twisted bracket
// <p,q> = [p,q] + D_q(p) - D_p(q) where D_p kills the second generator.

#include <map>
#include <utility>
#include <vector>

#include "assoc/series.hpp"

namespace assoc {

// All Lyndon words of the given degree in lexicographic order. Requires a
// uniform degree-1 alphabet (degree = length).
std::vector<Word> lyndon_words(const AlphabetPtr& a, int degree);

bool is_lyndon(const Word& w);

// Standard factorization w = uv of a Lyndon word of length >= 2: v is the
// lexicographically smallest (equivalently longest Lyndon) proper suffix.
std::pair<Word, Word> lyndon_factorization(const Word& w);

// Expansion of the standard bracketing of a Lyndon word as a Series.
Series lyndon_bracket_series(const AlphabetPtr& a, const Word& w, int truncation);

class LiePolynomial {
 public:
  using CoordMap = std::map<Word, Scalar, WordOrder>;

  LiePolynomial(AlphabetPtr alphabet, int truncation);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const CoordMap& coords() const { return coords_; }

  // Coordinate on the standard bracketing of a Lyndon word; words above the
  // truncation are dropped, non-Lyndon keys rejected.
  void add_coord(const Word& lyndon, const Scalar& c);
  Scalar coord(const Word& lyndon) const;

  bool is_zero() const { return coords_.empty(); }
  LiePolynomial truncated(int n) const;

  LiePolynomial operator-() const;
  LiePolynomial& operator+=(const LiePolynomial& o);
  LiePolynomial& operator-=(const LiePolynomial& o);
  friend LiePolynomial operator+(LiePolynomial a, const LiePolynomial& b) { return a += b; }
  friend LiePolynomial operator-(LiePolynomial a, const LiePolynomial& b) { return a -= b; }
  friend LiePolynomial operator*(const Scalar& c, LiePolynomial p);
  bool operator==(const LiePolynomial& o) const;
  bool operator!=(const LiePolynomial& o) const { return !(*this == o); }

 private:
  AlphabetPtr alphabet_;
  int truncation_;
  CoordMap coords_;
};

Series expand(const LiePolynomial& p);

// Inverse of expand. Checks primitivity via the coproduct and then peels
// Lyndon coordinates off the lexicographically smallest surviving word, which
// is triangular for the Lyndon basis.
LiePolynomial assoc_to_lie(const Series& f);

LiePolynomial lie_bracket(const LiePolynomial& p, const LiePolynomial& q);

// log(exp X exp Y) over {X,Y} up to degree N.
LiePolynomial bch(int N);

// R written as sum_m a_m (ad Y)^(m-1)(X) if possible; coefficients are indexed
// a[m-1] for m = 1..truncation. On failure, offending names the first Lyndon
// coordinate outside that span.
struct AdPowerForm {
  bool ok = false;
  std::vector<Scalar> a;
  Word offending;
};
AdPowerForm ad_power_form(const LiePolynomial& r);

// Derivation with D(X) = [phi, X], D(Y) = 0, applied to target (alphabet must
// have exactly two generators, in that role order).
LiePolynomial derivation_apply(const LiePolynomial& phi, const LiePolynomial& target);

LiePolynomial ihara_bracket(const LiePolynomial& p1, const LiePolynomial& p2);

}  // namespace assoc
