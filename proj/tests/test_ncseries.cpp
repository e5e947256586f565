#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "assoc/series.hpp"

using namespace assoc;

namespace {

Series gen(int letter, int N = 6) { return Series::generator(xy_alphabet(), N, letter); }
Series one(int N = 6) { return Series::unit(xy_alphabet(), N); }

Word w(const std::string& s) { return xy_alphabet()->parse_word(s); }

std::mt19937 rng(987654);

Series random_series(int N, int nterms, bool zero_const = false) {
  Series s(xy_alphabet(), N);
  std::uniform_int_distribution<int> len(zero_const ? 1 : 0, N);
  std::uniform_int_distribution<int> letter(0, 1);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (int i = 0; i < nterms; ++i) {
    Word word;
    int l = len(rng);
    for (int j = 0; j < l; ++j) word.push_back(static_cast<unsigned char>(letter(rng)));
    Rational q(coeff(rng), den(rng));
    q.canonicalize();
    s.add_term(word, Scalar(q));
  }
  return s;
}

// random Lie element: combination of left-nested commutators of generators
Series random_primitive(int N, int nterms) {
  Series s(xy_alphabet(), N);
  std::uniform_int_distribution<int> len(1, N);
  std::uniform_int_distribution<int> letter(0, 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int i = 0; i < nterms; ++i) {
    int l = len(rng);
    Series acc = gen(letter(rng), N);
    for (int j = 1; j < l; ++j) acc = commutator(gen(letter(rng), N), acc);
    s += Scalar(Rational(coeff(rng))) * acc;
  }
  return s;
}

}  // namespace

TEST_CASE("alphabet and words") {
  auto a = xy_alphabet();
  CHECK(a->size() == 2);
  CHECK(a->word_str(w("XY")) == "XY");
  CHECK(a->word_str(Word()) == "1");
  CHECK(a->parse_word("1").empty());
  auto t = make_alphabet({"t12", "t13", "t23"});
  CHECK(t->word_str(t->parse_word("t12.t23")) == "t12.t23");
  CHECK_THROWS(t->parse_word("t99"));
  CHECK_THROWS(make_alphabet({"X", "X"}));
  CHECK_THROWS(make_alphabet({"1"}));
  WordOrder ord{a.get()};
  CHECK(ord(w("Y"), w("XX")));   // degree first
  CHECK(ord(w("XY"), w("YX")));  // then lex
  CHECK(!ord(w("YX"), w("XY")));
}

TEST_CASE("mul basics") {
  Series f = one() + gen(0);
  Series g = one() + gen(1);
  Series fg = mul(f, g);
  CHECK(fg == one() + gen(0) + gen(1) + mul(gen(0), gen(1)));
  CHECK(mul(gen(0), gen(1)).coefficient(w("XY")) == Scalar(1));
  CHECK(mul(gen(0), gen(1)) != mul(gen(1), gen(0)));
  CHECK(mul(exp(gen(0)), exp(-gen(0))) == one());
  Series h(xy_alphabet(), 3);
  CHECK_THROWS(mul(f, h));  // truncation mismatch
  Series other(make_alphabet({"A", "B"}), 6);
  CHECK_THROWS(mul(f, other));
}

TEST_CASE("truncation discards high terms") {
  Series x = gen(0, 2);
  Series p = mul(mul(x, x), x);
  CHECK(p.is_zero());
  Series q = mul(x, x);
  CHECK(q.coefficient(w("XX")) == Scalar(1));
}

TEST_CASE("exp and log") {
  CHECK(exp(Series(xy_alphabet(), 6)) == one());
  Series xy = gen(0) + gen(1);
  CHECK(log(exp(xy)) == xy);
  CHECK(exp(log(one() + gen(0))) == one() + gen(0));
  CHECK_THROWS(exp(one()));
  CHECK_THROWS(log(gen(0)));

  Series bch2 = log(mul(exp(gen(0, 2)), exp(gen(1, 2))));
  CHECK(bch2.coefficient(w("X")) == Scalar(1));
  CHECK(bch2.coefficient(w("Y")) == Scalar(1));
  CHECK(bch2.coefficient(w("XY")) == Scalar(Rational(1, 2)));
  CHECK(bch2.coefficient(w("YX")) == Scalar(Rational(-1, 2)));
  CHECK(bch2.coefficient(w("XX")).is_zero());
}

TEST_CASE("group inverse") {
  CHECK(group_inverse(one()) == one());
  CHECK(group_inverse(exp(gen(0))) == exp(-gen(0)));
  Series inv = group_inverse(one(3) + gen(0, 3));
  CHECK(inv.coefficient(w("X")) == Scalar(-1));
  CHECK(inv.coefficient(w("XX")) == Scalar(1));
  CHECK(inv.coefficient(w("XXX")) == Scalar(-1));
  for (const Series& f : {one() + random_series(6, 5, true), exp(random_primitive(6, 3))}) {
    CHECK(mul(f, group_inverse(f)) == one());
    CHECK(mul(group_inverse(f), f) == one());
  }
  CHECK_THROWS(group_inverse(gen(0)));
}

TEST_CASE("coproduct") {
  TensorSeries dx = coproduct(gen(0));
  TensorSeries expected(xy_alphabet(), 6);
  expected.add_term(w("X"), Word(), Scalar(1));
  expected.add_term(Word(), w("X"), Scalar(1));
  CHECK(dx == expected);

  TensorSeries dxy = coproduct(mul(gen(0), gen(1)));
  TensorSeries exy(xy_alphabet(), 6);
  exy.add_term(w("XY"), Word(), Scalar(1));
  exy.add_term(w("X"), w("Y"), Scalar(1));
  exy.add_term(w("Y"), w("X"), Scalar(1));
  exy.add_term(Word(), w("XY"), Scalar(1));
  CHECK(dxy == exy);

  CHECK(coproduct(one()) == TensorSeries::tensor(one(), one()));
}

TEST_CASE("grouplike and primitive predicates") {
  CHECK(is_grouplike(exp(gen(0))));
  CHECK(is_primitive(commutator(gen(0), gen(1))));
  Series bad = one() + mul(gen(0), gen(1));
  CHECK(!is_grouplike(bad));
  CHECK(!is_primitive(one()));

  CHECK(is_commutator_grouplike(one()));
  CHECK(!is_commutator_grouplike(exp(gen(0))));
  CHECK(is_commutator_grouplike(exp(commutator(gen(0), gen(1)))));
}

TEST_CASE("substitute") {
  Series phi = exp(commutator(gen(0), gen(1)));
  CHECK(substitute(phi, {gen(0), gen(1)}) == phi);
  Series br = commutator(gen(0), gen(1));
  CHECK(substitute(br, {gen(1), gen(0)}) == -br);
  CHECK_THROWS(substitute(phi, {one(), gen(1)}));
  CHECK_THROWS(substitute(phi, {gen(0)}));
  // into a bigger alphabet
  auto t = make_alphabet({"a", "b", "c"});
  Series ta = Series::generator(t, 6, 0), tbc = Series::generator(t, 6, 1) + Series::generator(t, 6, 2);
  Series img = substitute(br, {ta, tbc});
  CHECK(img == commutator(ta, tbc));
}

TEST_CASE("c2 and helpers") {
  CHECK(c2(commutator(gen(0), gen(1))) == Scalar(1));
  CHECK(c2(one()) == Scalar(0));
  Series short_series(xy_alphabet(), 1);
  CHECK_THROWS(c2(short_series));

  CHECK(abelianized(commutator(gen(0), gen(1))).is_zero());
  Series r = rescale(gen(0) + mul(gen(0), gen(1)), Scalar(2));
  CHECK(r.coefficient(w("X")) == Scalar(2));
  CHECK(r.coefficient(w("XY")) == Scalar(4));

  Series h = (one() + gen(0) + mul(gen(0), gen(1))).homogeneous_component(2);
  CHECK(h == mul(gen(0), gen(1)));
  CHECK(h.min_degree() == 2);
  CHECK(Series(xy_alphabet(), 6).min_degree() == -1);
  CHECK((one() + gen(0)).truncated(3).truncation() == 3);
  CHECK_THROWS(gen(0, 3).truncated(5));
}

TEST_CASE("ring laws on randomized triples") {
  for (int i = 0; i < 25; ++i) {
    Series a = random_series(5, 6), b = random_series(5, 6), c = random_series(5, 6);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
  }
}

TEST_CASE("Hopf compatibility on randomized pairs") {
  for (int i = 0; i < 10; ++i) {
    Series a = random_series(4, 5), b = random_series(4, 5);
    CHECK(coproduct(mul(a, b)) == mul(coproduct(a), coproduct(b)));
  }
}

TEST_CASE("exp of primitive is group-like, log of group-like is primitive") {
  for (int i = 0; i < 8; ++i) {
    Series p = random_primitive(5, 4);
    Series g = exp(p);
    CHECK(is_grouplike(g));
    CHECK(is_primitive(log(g)));
    CHECK(log(g) == p);
  }
}

TEST_CASE("substitute is multiplicative") {
  std::vector<Series> images = {commutator(gen(0, 5), gen(1, 5)) + gen(1, 5), gen(0, 5)};
  for (int i = 0; i < 8; ++i) {
    Series a = random_series(5, 5), b = random_series(5, 5);
    CHECK(substitute(mul(a, b), images) == mul(substitute(a, images), substitute(b, images)));
  }
}

TEST_CASE("quadratic coefficients flow through series ops") {
  Scalar r2(Rational(0), Rational(1), Integer(2));
  Series f = r2 * gen(0) + gen(1);
  Series e = exp(f);
  CHECK(e.coefficient(w("XX")) == Scalar(1));  // (sqrt2 X)^2/2 = X^2
  CHECK(e.coefficient(w("XY")) == Scalar(Rational(1, 2)) * r2);
  CHECK(is_grouplike(e));
  Scalar r3(Rational(0), Rational(1), Integer(3));
  CHECK_THROWS(mul(r2 * gen(0), r3 * gen(0)));
}
