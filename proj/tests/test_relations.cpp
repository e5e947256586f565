#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "assoc/relations.hpp"

using namespace assoc;

namespace {

std::mt19937 rng(411828);

Series unit(int N) {
  Series f(xy_alphabet(), N);
  f.add_term(Word(), Scalar(1));
  return f;
}

Series gen(int N, int letter) { return Series::generator(xy_alphabet(), N, letter); }

// exp of a Lie element given by Lyndon coordinates at degrees >= min_deg
Series random_grouplike(int N, int min_deg, int nterms) {
  LiePolynomial L(xy_alphabet(), N);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<Word> pool;
  for (int n = min_deg; n <= N; ++n)
    for (const Word& w : lyndon_words(xy_alphabet(), n)) pool.push_back(w);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < nterms; ++t) L.add_coord(pool[pick(rng)], Scalar(Rational(coeff(rng))));
  return exp(expand(L));
}

Series exp_xy_multiple(int N, const Rational& c) {
  LiePolynomial L(xy_alphabet(), N);
  L.add_coord(Word({0, 1}), Scalar(c));
  return exp(expand(L));
}

}  // namespace

TEST_CASE("pentagon accepts the constant series and rejects abelian drift") {
  Residual ok = check_pentagon(unit(4), 4);
  CHECK(ok.holds);
  CHECK(ok.residual.is_zero());
  CHECK_FALSE(ok.first_failing_degree.has_value());

  Residual bad = check_pentagon(exp(gen(3, 0)), 3);
  CHECK_FALSE(bad.holds);
  CHECK(bad.first_failing_degree == 1);

  Series notgl(xy_alphabet(), 3);
  notgl.add_term(Word(), Scalar(1));
  notgl.add_term(Word({0, 1}), Scalar(1));
  CHECK_THROWS_AS(check_pentagon(notgl, 3), PreconditionError);
  CHECK_THROWS_AS(check_pentagon(unit(3), 9), std::invalid_argument);
  CHECK_THROWS_AS(check_pentagon(unit(3), 4), std::invalid_argument);
}

TEST_CASE("pentagon holds through degree 3 for any quadratic exponential") {
  // exp(c[X,Y]) meets the pentagon up to degree 3: the quadratic terms cancel
  // against the commuting-pair relations and there is no cubic term at all
  Residual r3 = check_pentagon(exp_xy_multiple(3, Rational(7, 5)), 3);
  CHECK(r3.holds);
  Residual r4 = check_pentagon(exp_xy_multiple(4, Rational(1)), 4);
  CHECK_FALSE(r4.holds);
  CHECK(r4.first_failing_degree == 4);
}

TEST_CASE("hexagons hold exactly when the quadratic coefficient matches mu") {
  auto [za, zb] = check_hexagons(Scalar(0), unit(3), 3);
  CHECK(za.holds);
  CHECK(zb.holds);

  auto [ba, bb] = check_hexagons(Scalar(1), unit(3), 3);
  CHECK_FALSE(ba.holds);
  CHECK_FALSE(bb.holds);
  CHECK(ba.first_failing_degree == 2);
  CHECK(bb.first_failing_degree == 2);

  // the degree-2 discrepancy of the first hexagon at phi = 1 is -[t13,t23]/8
  AlgebraPtr a4 = shared_algebra("a4", 2);
  auto t = [&](const char* name) {
    return Series::generator(a4->alphabet(), 2, a4->alphabet()->index(name));
  };
  Series expected = Scalar(Rational(-1, 8)) * (mul(t("t13"), t("t23")) - mul(t("t23"), t("t13")));
  Residual ba2 = check_hexagons(Scalar(1), unit(2), 2).first;
  CHECK(ba2.residual == a4->normal_form(expected));

  auto [fa, fb] = check_hexagons(Scalar(1), exp_xy_multiple(2, Rational(1, 24)), 2);
  CHECK(fa.holds);
  CHECK(fb.holds);

  auto [wa, wb] = check_hexagons(Scalar(1), exp_xy_multiple(2, Rational(1, 7)), 2);
  CHECK_FALSE(wa.holds);
  CHECK_FALSE(wb.holds);

  // an irrational mu is fine as long as mu^2/24 matches the coefficient
  Scalar root6(Rational(0), Rational(1), 6);
  auto [ia, ib] = check_hexagons(root6, exp_xy_multiple(2, Rational(1, 4)), 2);
  CHECK(ia.holds);
  CHECK(ib.holds);
}

TEST_CASE("three-cycle residual carries the quadratic obstruction -mu^2/8") {
  Residual r = check_3cycle(Scalar(1), unit(3), 3);
  CHECK_FALSE(r.holds);
  CHECK(r.first_failing_degree == 2);
  CHECK(r.residual.coefficient(Word({0, 1})) == Scalar(Rational(-1, 8)));

  Scalar root6(Rational(0), Rational(1), 6);
  Residual r6 = check_3cycle(root6, unit(2), 2);
  CHECK(r6.residual.coefficient(Word({0, 1})) == Scalar(Rational(-3, 4)));

  CHECK(check_3cycle(Scalar(1), exp_xy_multiple(2, Rational(1, 24)), 2).holds);
  CHECK(check_3cycle(Scalar(0), unit(4), 4).holds);

  Residual sp = check_special_3cycle(exp_xy_multiple(2, Rational(1)), 2);
  CHECK_FALSE(sp.holds);
  CHECK(sp.first_failing_degree == 2);
  CHECK(check_special_3cycle(unit(4), 4).holds);
}

TEST_CASE("three-cycle verdicts are symmetric in the sign of mu") {
  Scalar root6(Rational(0), Rational(1), 6);
  std::vector<std::pair<Scalar, Series>> family = {
      {Scalar(1), unit(3)},
      {root6, unit(3)},
      {Scalar(1), exp_xy_multiple(3, Rational(1, 24))},
      {root6, exp_xy_multiple(3, Rational(1, 4))},
  };
  for (int t = 0; t < 4; ++t) family.emplace_back(Scalar(t - 2), random_grouplike(3, 1, 3));
  for (const auto& [mu, phi] : family) {
    Residual plus = check_3cycle(mu, phi, phi.truncation());
    Residual minus = check_3cycle(-mu, phi, phi.truncation());
    CHECK(plus.holds == minus.holds);
  }
}

TEST_CASE("hexagon pair is equivalent to two-cycle plus three-cycle") {
  auto both = [](const Scalar& mu, const Series& phi, int N) {
    auto [a, b] = check_hexagons(mu, phi, N);
    return a.holds && b.holds;
  };
  auto cycles = [](const Scalar& mu, const Series& phi, int N) {
    return check_2cycle(phi, N).holds && check_3cycle(mu, phi, N).holds;
  };

  // break only the two-cycle: an even Lie exponent keeps phi(Y,X) from
  // cancelling phi(X,Y)
  LiePolynomial odd(xy_alphabet(), 3);
  odd.add_coord(Word({0, 0, 1}), Scalar(1));
  Series phi_odd = exp(expand(odd));
  CHECK_FALSE(check_2cycle(phi_odd, 3).holds);
  CHECK_FALSE(both(Scalar(1), phi_odd, 3));

  // break only the three-cycle: right coefficient shape, wrong mu
  Series fix = exp_xy_multiple(2, Rational(1, 24));
  CHECK(check_2cycle(fix, 2).holds);
  CHECK_FALSE(check_3cycle(Scalar(2), fix, 2).holds);
  CHECK_FALSE(both(Scalar(2), fix, 2));

  CHECK(both(Scalar(1), fix, 2) == cycles(Scalar(1), fix, 2));
  CHECK(both(Scalar(1), fix, 2));

  for (int t = 0; t < 8; ++t) {
    Series phi = random_grouplike(3, (t % 2) ? 1 : 2, 3);
    Scalar mu(t % 3);
    CHECK(both(mu, phi, 3) == cycles(mu, phi, 3));
  }
}

TEST_CASE("five-cycle demands commutator group-likeness and matches the pentagon") {
  Residual ok = check_5cycle(unit(4), 4);
  CHECK(ok.holds);
  CHECK(ok.residual.is_zero());

  CHECK_THROWS_AS(check_5cycle(exp(gen(3, 0)), 3), PreconditionError);
  Series notgl(xy_alphabet(), 3);
  notgl.add_term(Word(), Scalar(1));
  notgl.add_term(Word({0, 1}), Scalar(1));
  CHECK_THROWS_AS(check_5cycle(notgl, 3), PreconditionError);

  // exp([X,Y]) passes through degree 3 and first breaks at degree 4, on both
  // routes
  Series q = exp_xy_multiple(4, Rational(1));
  Residual five = check_5cycle(q, 4);
  Residual pent = check_pentagon(q, 4);
  CHECK_FALSE(five.holds);
  CHECK_FALSE(pent.holds);
  CHECK(five.first_failing_degree == 4);
  CHECK(pent.first_failing_degree == 4);
  CHECK(check_5cycle(q.truncated(3), 3).holds);

  for (int t = 0; t < 6; ++t) {
    Series phi = random_grouplike(4, 2, 2 + t % 2);
    Residual p = check_pentagon(phi, 4);
    Residual c = check_5cycle(phi, 4);
    CHECK(p.holds == c.holds);
  }
}

TEST_CASE("linear five-term, three-term and two-term checks on Lie elements") {
  LiePolynomial bracket(xy_alphabet(), 2);
  bracket.add_coord(Word({0, 1}), Scalar(1));
  CHECK(check_sda5(bracket, 2).holds);
  CHECK(check_sda2(bracket, 2).holds);

  Residual three = check_sda3(bracket, 2);
  CHECK_FALSE(three.holds);
  CHECK(three.first_failing_degree == 2);
  Series expected = Scalar(3) * (mul(gen(2, 0), gen(2, 1)) - mul(gen(2, 1), gen(2, 0)));
  CHECK(three.residual == expected);

  // the antisymmetric cubic combination passes all three linear relations
  LiePolynomial sigma3(xy_alphabet(), 3);
  sigma3.add_coord(Word({0, 0, 1}), Scalar(1));
  sigma3.add_coord(Word({0, 1, 1}), Scalar(-1));
  CHECK(check_sda5(sigma3, 3).holds);
  CHECK(check_sda3(sigma3, 3).holds);
  CHECK(check_sda2(sigma3, 3).holds);

  LiePolynomial sym(xy_alphabet(), 3);
  sym.add_coord(Word({0, 0, 1}), Scalar(1));
  sym.add_coord(Word({0, 1, 1}), Scalar(1));
  CHECK_FALSE(check_sda2(sym, 3).holds);

  LiePolynomial mixed(xy_alphabet(), 3);
  mixed.add_coord(Word({0, 1}), Scalar(1));
  mixed.add_coord(Word({0, 0, 1}), Scalar(1));
  CHECK_THROWS_AS(check_sda2(mixed, 3), std::invalid_argument);

  // degree-1 elements are allowed; X + Y + Z vanishes identically
  LiePolynomial linear(xy_alphabet(), 1);
  linear.add_coord(Word({0}), Scalar(1));
  CHECK(check_sda3(linear, 1).holds);
  CHECK_FALSE(check_sda2(linear, 1).holds);
}

TEST_CASE("scalar extraction returns both square roots") {
  auto [p1, m1] = mu_from_c2(exp_xy_multiple(2, Rational(1, 24)));
  CHECK(p1 == Scalar(1));
  CHECK(m1 == Scalar(-1));

  auto [z1, z2] = mu_from_c2(unit(2));
  CHECK(z1 == Scalar(0));
  CHECK(z2 == Scalar(0));

  auto [r1, r2] = mu_from_c2(exp_xy_multiple(2, Rational(1)));
  CHECK(r1 == Scalar(Rational(0), Rational(2), 6));
  CHECK(r2 == Scalar(Rational(0), Rational(-2), 6));

  auto [l1, l2] = lambda_from_c2(unit(2));
  CHECK(l1 == Scalar(1));
  CHECK(l2 == Scalar(-1));
  CHECK(lambda_from_c2(exp_xy_multiple(2, Rational(1))).first == Scalar(5));
  CHECK(lambda_from_c2(exp_xy_multiple(2, Rational(1, 8))).first == Scalar(2));

  Series irr(xy_alphabet(), 2);
  irr.add_term(Word(), Scalar(1));
  irr.add_term(Word({0, 1}), Scalar(Rational(0), Rational(1), 6));
  CHECK_THROWS_AS(mu_from_c2(irr), std::invalid_argument);
}

TEST_CASE("gt two-term and three-term relations at the identity") {
  CHECK(check_gt2(unit(3), 3).holds);
  CHECK(check_gt3(Scalar(1), unit(3), 3).holds);

  Residual r = check_gt3(Scalar(3), unit(3), 3);
  CHECK_FALSE(r.holds);
  CHECK(r.first_failing_degree == 2);
  CHECK(r.residual.coefficient(Word({0, 1})) == Scalar(-1));
  CHECK(r.residual.coefficient(Word({1, 0})) == Scalar(1));

  // with m = 0 the relation degenerates to the special three-cycle
  Residual sp = check_gt3(Scalar(1), exp_xy_multiple(2, Rational(1)), 2);
  CHECK_FALSE(sp.holds);
  CHECK(sp.first_failing_degree == 2);

  LiePolynomial odd(xy_alphabet(), 3);
  odd.add_coord(Word({0, 0, 1}), Scalar(1));
  CHECK_FALSE(check_gt2(exp(expand(odd)), 3).holds);

  Series notgl(xy_alphabet(), 2);
  notgl.add_term(Word(), Scalar(1));
  notgl.add_term(Word({0, 1}), Scalar(1));
  CHECK_THROWS_AS(check_gt2(notgl, 2), PreconditionError);
}

TEST_CASE("gt five-term check rides on a verified associator pair") {
  Series phi = exp_xy_multiple(2, Rational(1, 24));
  MPair pair = verify_mpair(Scalar(1), phi, 2);
  CHECK(pair.verified_at.at(kPentagon) == 2);
  CHECK(pair.verified_at.at(kHexagonA) == 2);
  CHECK(pair.verified_at.at(kHexagonB) == 2);
  CHECK(pair.verified_at.at(k2Cycle) == 2);
  CHECK(pair.verified_at.at(k3Cycle) == 2);
  CHECK(mpair_verified(pair, 2));
  CHECK_FALSE(mpair_verified(pair, 3));

  CHECK(check_gt5(unit(2), 2, pair).holds);

  Residual bad = check_gt5(exp(gen(2, 0)), 2, pair);
  CHECK_FALSE(bad.holds);
  CHECK(bad.first_failing_degree == 1);

  MPair raw{Scalar(1), phi, {}};
  CHECK_THROWS_AS(check_gt5(unit(2), 2, raw), PreconditionError);

  MPair zero{Scalar(0), unit(2), {{kPentagon, 2}, {kHexagonA, 2}, {kHexagonB, 2}}};
  CHECK_THROWS_AS(check_gt5(unit(2), 2, zero), PreconditionError);

  // a pair that fails the hexagons is recorded as such
  MPair off = verify_mpair(Scalar(2), phi, 2);
  CHECK(off.verified_at.count(kPentagon) == 1);
  CHECK(off.verified_at.count(kHexagonA) == 0);
  CHECK_FALSE(mpair_verified(off, 2));
}

TEST_CASE("shared algebra registry reuses instances") {
  AlgebraPtr a = shared_algebra("p5", 2);
  AlgebraPtr b = shared_algebra("p5", 4);
  CHECK(a.get() == b.get());
  CHECK(a->max_degree() == kMaxCheckDegree);
  CHECK_THROWS_AS(shared_algebra("a4", kMaxCheckDegree + 1), std::invalid_argument);
}
