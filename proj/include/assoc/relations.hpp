#pragma once

// Exact checkers for the defining equations of associator pairs (mu, phi) and
// Grothendieck-Teichmueller pairs (lambda, f), plus the Lie-algebra versions
// for homogeneous elements. Every checker returns a verdict together with the
// exact residual series: LHS * RHS^{-1} - 1 for group equations, LHS - RHS
// for Lie equations. holds is true iff the residual vanishes identically up
// to the truncation; there are no tolerances anywhere.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "assoc/freelie.hpp"
#include "assoc/presented.hpp"
#include "assoc/series.hpp"

namespace assoc {

// thrown when a checker's mathematical precondition (not a mere usage error)
// fails, e.g. a series that must be commutator group-like is not
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Residual {
  bool holds = false;
  Series residual;
  std::optional<int> first_failing_degree;
};

// relation names, used as CLI identifiers and as verification-record keys
inline constexpr const char* kPentagon = "pentagon";
inline constexpr const char* kHexagonA = "hexagon-a";
inline constexpr const char* kHexagonB = "hexagon-b";
inline constexpr const char* k5Cycle = "5cycle";
inline constexpr const char* k2Cycle = "2cycle";
inline constexpr const char* k3Cycle = "3cycle";
inline constexpr const char* kSpecial3Cycle = "special-3cycle";
inline constexpr const char* kSDA5 = "sda5";
inline constexpr const char* kSDA3 = "sda3";
inline constexpr const char* kSDA2 = "sda2";
inline constexpr const char* kGT2 = "gt2";
inline constexpr const char* kGT3 = "gt3";
inline constexpr const char* kGT5 = "gt5";

struct MPair {
  Scalar mu;
  Series phi;  // over {X, Y}
  // relation name -> truncation at which it was checked and held
  std::map<std::string, int> verified_at;
};

struct GTPair {
  Scalar lambda;
  Series f;  // f(e^X, e^Y), over {X, Y}
  std::map<std::string, int> verified_at;
};

// Registry of presented algebras shared between checks, keyed by presentation
// name; an algebra is rebuilt only when a larger truncation is requested.
AlgebraPtr shared_algebra(const std::string& name, int min_degree);

// largest truncation the checkers accept (the registry builds to it on demand)
inline constexpr int kMaxCheckDegree = 8;

// --- equations for (mu, phi) -----------------------------------------------

// phi(t12,t23+t24) phi(t13+t23,t34) = phi(t23,t34) phi(t12+t13,t24+t34)
// phi(t12,t23), checked in the 4-point enveloping algebra
Residual check_pentagon(const Series& phi, int N);

// exp{mu(t13+t23)/2} = phi(t13,t12) exp{mu t13/2} phi(t13,t23)^{-1}
//                      exp{mu t23/2} phi(t12,t23)
// exp{mu(t12+t13)/2} = phi(t23,t13)^{-1} exp{mu t13/2} phi(t12,t13)
//                      exp{mu t12/2} phi(t12,t23)^{-1}
std::pair<Residual, Residual> check_hexagons(const Scalar& mu, const Series& phi, int N);

// phi(X12,X23) phi(X34,X45) phi(X51,X12) phi(X23,X34) phi(X45,X51) = 1 in the
// 5-point enveloping algebra; requires phi commutator group-like, and when it
// holds the 2-cycle follows by projection (asserted internally)
Residual check_5cycle(const Series& phi, int N);

// phi(X,Y) phi(Y,X) = 1
Residual check_2cycle(const Series& phi, int N);
// e^{mu X/2} phi(Z,X) e^{mu Z/2} phi(Y,Z) e^{mu Y/2} phi(X,Y) = 1, Z = -X-Y
Residual check_3cycle(const Scalar& mu, const Series& phi, int N);
// phi(Z,X) phi(Y,Z) phi(X,Y) = 1, Z = -X-Y
Residual check_special_3cycle(const Series& phi, int N);

// --- Lie versions for a homogeneous element of degree n ---------------------

// psi(X12,X23) + psi(X34,X45) + psi(X51,X12) + psi(X23,X34) + psi(X45,X51)
// = 0 in the 5-point Lie algebra
Residual check_sda5(const LiePolynomial& psi, int n);
// psi(X,Y) + psi(Y,Z) + psi(Z,X) = 0 with Z = -X-Y
Residual check_sda3(const LiePolynomial& psi, int n);
// psi(X,Y) + psi(Y,X) = 0
Residual check_sda2(const LiePolynomial& psi, int n);

// --- scalar extraction ------------------------------------------------------

// the two roots +-sqrt(24 c2(phi)); equal when c2 = 0
std::pair<Scalar, Scalar> mu_from_c2(const Series& phi);
// the two roots +-sqrt(24 c2(f) + 1)
std::pair<Scalar, Scalar> lambda_from_c2(const Series& f);

// --- equations for (lambda, f) ----------------------------------------------

// f(x,y) f(y,x) = 1 with x = e^X, y = e^Y
Residual check_gt2(const Series& f, int N);
// f(z,x) z^m f(y,z) y^m f(x,y) x^m = 1 with xyz = 1 and m = (lambda-1)/2
Residual check_gt3(const Scalar& lambda, const Series& f, int N);
// pentagon for phi' = f(phi e^{mu X} phi^{-1}, e^{mu Y}) phi; assoc must have
// pentagon and both hexagons verified at >= N and mu != 0
Residual check_gt5(const Series& f, int N, const MPair& assoc);

// runs pentagon, both hexagons, 2-cycle and 3-cycle and records the ones that
// hold; the returned pair is "verified" for GT use when the first three hold
MPair verify_mpair(const Scalar& mu, const Series& phi, int N);
bool mpair_verified(const MPair& p, int N);

}  // namespace assoc
