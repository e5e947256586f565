#include "assoc/relations.hpp"

#include <mutex>
#include <stdexcept>

namespace assoc {

AlgebraPtr shared_algebra(const std::string& name, int min_degree) {
  if (min_degree > kMaxCheckDegree) throw std::invalid_argument("degree exceeds supported range");
  static std::mutex reg_mutex;
  static std::map<std::string, AlgebraPtr> registry;
  std::lock_guard<std::mutex> lk(reg_mutex);
  AlgebraPtr& slot = registry[name];
  if (!slot) slot = make_algebra(presentation_by_name(name), kMaxCheckDegree);
  return slot;
}

namespace {

Residual make_residual(Series resid) {
  bool holds = resid.is_zero();
  std::optional<int> ffd;
  if (!holds) ffd = resid.min_degree();
  return Residual{holds, std::move(resid), ffd};
}

Series minus_one(Series s) {
  s.add_term(Word(), Scalar(-1));
  return s;
}

// validated copy of a series over {X,Y} at the requested truncation
Series at_degree(const Series& phi, int N, bool grouplike_required) {
  if (N < 1 || N > kMaxCheckDegree) throw std::invalid_argument("degree out of supported range");
  if (!(*phi.alphabet() == *xy_alphabet())) throw std::invalid_argument("series must be over the X,Y alphabet");
  if (phi.truncation() < N) throw std::invalid_argument("series truncation below requested degree");
  Series p = phi.truncated(N);
  if (grouplike_required && !is_grouplike(p)) throw PreconditionError("series is not group-like");
  return p;
}

Series gen1(const AlgebraPtr& alg, const char* name, int N) {
  return Series::generator(alg->alphabet(), N, alg->alphabet()->index(name));
}

}  // namespace

Residual check_pentagon(const Series& phi, int N) {
  Series p = at_degree(phi, N, true);
  AlgebraPtr a4 = shared_algebra("a4", N);
  Series t12 = gen1(a4, "t12", N), t13 = gen1(a4, "t13", N), t14 = gen1(a4, "t14", N);
  Series t23 = gen1(a4, "t23", N), t24 = gen1(a4, "t24", N), t34 = gen1(a4, "t34", N);
  auto F = [&](const Series& a, const Series& b) { return substitute(p, {a, b}); };
  Series lhs = mul(F(t12, t23 + t24), F(t13 + t23, t34));
  Series rhs = mul(mul(F(t23, t34), F(t12 + t13, t24 + t34)), F(t12, t23));
  return make_residual(a4->normal_form(minus_one(mul(lhs, group_inverse(rhs)))));
}

std::pair<Residual, Residual> check_hexagons(const Scalar& mu, const Series& phi, int N) {
  Series p = at_degree(phi, N, true);
  AlgebraPtr a4 = shared_algebra("a4", N);
  Series t12 = gen1(a4, "t12", N), t13 = gen1(a4, "t13", N), t23 = gen1(a4, "t23", N);
  auto F = [&](const Series& a, const Series& b) { return substitute(p, {a, b}); };
  Scalar half = mu * Scalar(Rational(1, 2));
  auto E = [&](const Series& t) { return exp(half * t); };

  Series lhs_a = E(t13 + t23);
  Series rhs_a = mul(mul(mul(F(t13, t12), E(t13)), mul(group_inverse(F(t13, t23)), E(t23))), F(t12, t23));
  Residual a = make_residual(a4->normal_form(minus_one(mul(lhs_a, group_inverse(rhs_a)))));

  Series lhs_b = E(t12 + t13);
  Series rhs_b = mul(mul(mul(group_inverse(F(t23, t13)), E(t13)), mul(F(t12, t13), E(t12))),
                     group_inverse(F(t12, t23)));
  Residual b = make_residual(a4->normal_form(minus_one(mul(lhs_b, group_inverse(rhs_b)))));
  return {std::move(a), std::move(b)};
}

Residual check_5cycle(const Series& phi, int N) {
  Series p = at_degree(phi, N, true);
  if (!is_commutator_grouplike(p)) throw PreconditionError("series is not commutator group-like");
  AlgebraPtr p5 = shared_algebra("p5", N);
  auto X = [&](const char* name) { return p5->rewrite_raw(p5->raw_generator_index(name)).truncated(N); };
  Series x12 = X("X12"), x23 = X("X23"), x34 = X("X34"), x45 = X("X45"), x51 = X("X15");
  auto F = [&](const Series& a, const Series& b) { return substitute(p, {a, b}); };
  Series prod = mul(mul(mul(F(x12, x23), F(x34, x45)), mul(F(x51, x12), F(x23, x34))), F(x45, x51));
  Residual r = make_residual(p5->normal_form(minus_one(std::move(prod))));
  if (r.holds && !check_2cycle(phi, N).holds)
    throw std::logic_error("5-cycle holds but its 2-letter projection fails");
  return r;
}

Residual check_2cycle(const Series& phi, int N) {
  Series p = at_degree(phi, N, true);
  Series x = Series::generator(xy_alphabet(), N, 0), y = Series::generator(xy_alphabet(), N, 1);
  return make_residual(minus_one(mul(p, substitute(p, {y, x}))));
}

Residual check_3cycle(const Scalar& mu, const Series& phi, int N) {
  Series p = at_degree(phi, N, true);
  Series x = Series::generator(xy_alphabet(), N, 0), y = Series::generator(xy_alphabet(), N, 1);
  Series z = -x - y;
  auto F = [&](const Series& a, const Series& b) { return substitute(p, {a, b}); };
  Scalar half = mu * Scalar(Rational(1, 2));
  Series prod = mul(mul(mul(exp(half * x), F(z, x)), mul(exp(half * z), F(y, z))), mul(exp(half * y), F(x, y)));
  return make_residual(minus_one(std::move(prod)));
}

Residual check_special_3cycle(const Series& phi, int N) {
  Series p = at_degree(phi, N, true);
  Series x = Series::generator(xy_alphabet(), N, 0), y = Series::generator(xy_alphabet(), N, 1);
  Series z = -x - y;
  auto F = [&](const Series& a, const Series& b) { return substitute(p, {a, b}); };
  return make_residual(minus_one(mul(mul(F(z, x), F(y, z)), F(x, y))));
}

namespace {

// expansion of a homogeneous Lie element, validated
Series lie_component(const LiePolynomial& psi, int n) {
  if (n < 1 || n > kMaxCheckDegree) throw std::invalid_argument("degree out of supported range");
  Series f = expand(psi);
  if (f.truncation() < n) throw std::invalid_argument("truncation below requested degree");
  for (const auto& [w, c] : f.terms())
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("element must be homogeneous of the given degree");
  return f.truncated(n);
}

}  // namespace

Residual check_sda5(const LiePolynomial& psi, int n) {
  Series f = lie_component(psi, n);
  AlgebraPtr p5 = shared_algebra("p5", n);
  auto X = [&](const char* name) { return p5->rewrite_raw(p5->raw_generator_index(name)).truncated(n); };
  Series x12 = X("X12"), x23 = X("X23"), x34 = X("X34"), x45 = X("X45"), x51 = X("X15");
  auto F = [&](const Series& a, const Series& b) { return substitute(f, {a, b}); };
  Series sum = F(x12, x23) + F(x34, x45) + F(x51, x12) + F(x23, x34) + F(x45, x51);
  return make_residual(p5->normal_form(sum));
}

Residual check_sda3(const LiePolynomial& psi, int n) {
  Series f = lie_component(psi, n);
  Series x = Series::generator(xy_alphabet(), n, 0), y = Series::generator(xy_alphabet(), n, 1);
  Series z = -x - y;
  return make_residual(f + substitute(f, {y, z}) + substitute(f, {z, x}));
}

Residual check_sda2(const LiePolynomial& psi, int n) {
  Series f = lie_component(psi, n);
  Series x = Series::generator(xy_alphabet(), n, 0), y = Series::generator(xy_alphabet(), n, 1);
  return make_residual(f + substitute(f, {y, x}));
}

namespace {

std::pair<Scalar, Scalar> roots_of(const Scalar& value) {
  if (sgn(value.b()) != 0) throw std::invalid_argument("square root of a non-rational value is unsupported");
  return sqrt_in_quad(value.a());
}

}  // namespace

std::pair<Scalar, Scalar> mu_from_c2(const Series& phi) {
  if (phi.truncation() < 2) throw std::invalid_argument("truncation must be at least 2");
  Scalar c = c2(phi);
  return roots_of(Scalar(Rational(24)) * c);
}

std::pair<Scalar, Scalar> lambda_from_c2(const Series& f) {
  if (f.truncation() < 2) throw std::invalid_argument("truncation must be at least 2");
  Scalar c = c2(f);
  return roots_of(Scalar(Rational(24)) * c + Scalar(1));
}

Residual check_gt2(const Series& f, int N) {
  Series p = at_degree(f, N, true);
  Series x = Series::generator(xy_alphabet(), N, 0), y = Series::generator(xy_alphabet(), N, 1);
  return make_residual(minus_one(mul(p, substitute(p, {y, x}))));
}

Residual check_gt3(const Scalar& lambda, const Series& f, int N) {
  Series p = at_degree(f, N, true);
  Series x = Series::generator(xy_alphabet(), N, 0), y = Series::generator(xy_alphabet(), N, 1);
  Series zlog = log(group_inverse(mul(exp(x), exp(y))));  // z = (xy)^{-1}
  Scalar m = (lambda - Scalar(1)) * Scalar(Rational(1, 2));
  auto F = [&](const Series& a, const Series& b) { return substitute(p, {a, b}); };
  Series prod =
      mul(mul(mul(F(zlog, x), exp(m * zlog)), mul(F(y, zlog), exp(m * y))), mul(F(x, y), exp(m * x)));
  return make_residual(minus_one(std::move(prod)));
}

Residual check_gt5(const Series& f, int N, const MPair& assoc) {
  if (assoc.mu.is_zero()) throw PreconditionError("associator pair must have mu != 0");
  if (!mpair_verified(assoc, N))
    throw PreconditionError("associator pair lacks verified pentagon and hexagons at this degree");
  Series p = at_degree(f, N, true);
  Series phi = at_degree(assoc.phi, N, true);
  Series x = Series::generator(xy_alphabet(), N, 0), y = Series::generator(xy_alphabet(), N, 1);
  Series a = mul(mul(phi, exp(assoc.mu * x)), group_inverse(phi));
  Series phi_prime = mul(substitute(p, {log(a), assoc.mu * y}), phi);
  return check_pentagon(phi_prime, N);
}

MPair verify_mpair(const Scalar& mu, const Series& phi, int N) {
  MPair pair{mu, phi, {}};
  if (check_pentagon(phi, N).holds) pair.verified_at[kPentagon] = N;
  auto [ha, hb] = check_hexagons(mu, phi, N);
  if (ha.holds) pair.verified_at[kHexagonA] = N;
  if (hb.holds) pair.verified_at[kHexagonB] = N;
  if (check_2cycle(phi, N).holds) pair.verified_at[k2Cycle] = N;
  if (check_3cycle(mu, phi, N).holds) pair.verified_at[k3Cycle] = N;
  return pair;
}

bool mpair_verified(const MPair& p, int N) {
  for (const char* name : {kPentagon, kHexagonA, kHexagonB}) {
    auto it = p.verified_at.find(name);
    if (it == p.verified_at.end() || it->second < N) return false;
  }
  return true;
}

}  // namespace assoc
