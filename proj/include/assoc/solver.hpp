#pragma once

// Constructive layer on top of the relation checkers: kernels of the
// linearized cycle relations, degree-by-degree builders for group-like
// solutions, the two group actions, and certificate-producing replays of the
// rearrangement argument that turns the five-term relation into the three-
// and two-term ones.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assoc/presented.hpp"
#include "assoc/relations.hpp"

namespace assoc {

// Basis of the homogeneous degree-n solutions of a set of linear relations,
// in canonical echelon form over Lyndon coordinates.
struct SolutionSpace {
  int degree = 0;
  std::string constraints;
  std::vector<LiePolynomial> basis;
};

// Kernel of the five-term relation on degree-n Lie elements in two letters,
// computed against the five-point algebra. 2 <= n <= kMaxCheckDegree.
SolutionSpace sda5_solution_space(int n);

// Dimension of the joint kernel of the five-, three- and two-term relations.
// For n >= 3 this must coincide with the five-term kernel alone (that is the
// content of the implication theorem); the equality is asserted and a
// mismatch throws std::logic_error.
int grt1_dim(int n);

struct TheoremLieCertificate {
  int degree = 0;
  std::vector<LiePolynomial> basis;
  std::vector<Residual> three_term;  // one residual per basis vector
  std::vector<Residual> two_term;
  bool passed = false;
};

// Checks, for every degree-n solution of the five-term relation, that the
// three- and two-term relations follow. n >= 3 (degree 2 is excluded: the
// quadratic class is removed by the vanishing-c2 hypothesis). A nonzero
// residual is a falsification and throws std::logic_error.
TheoremLieCertificate theorem_lie_verify(int n);

struct ProofStep {
  std::string name;
  bool holds = false;
};

struct ProofCertificate {
  int degree = 0;
  std::vector<ProofStep> steps;
  Series r_series;       // R(X,Y) = psi(X,Y) + psi(Y,Z) + psi(Z,X), Z = -X-Y
  Scalar ad_coefficient; // a_n with R = a_n (ad Y)^(n-1)(X)
  bool r_vanishes = false;
  bool passed = false;   // every step holds
};

// Replays the rearrangement proof on a concrete homogeneous psi satisfying
// the five- and two-term relations: the permuted five-term sums, their
// rewriting into four R-sums in the star of one strand, the two projections
// onto the free two-letter algebra, and the ad-power collapse of R.
ProofCertificate proof_identity_verify(const LiePolynomial& psi, int n);

struct DegreeRecord {
  int degree = 0;
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  std::vector<Word> free_words;  // Lyndon coordinates left free, set to zero
  std::vector<std::pair<Word, Scalar>> solved;
};

struct BuildLog {
  std::string target;
  std::vector<DegreeRecord> records;
};

// Group-like series phi with log phi solved degree by degree so that the
// pentagon and both hexagons for mu hold up to degree N. Free variables are
// zeroed in Lyndon order, so the output is deterministic. mu must be nonzero;
// an inconsistent degree throws std::logic_error.
MPair build_associator(const Scalar& mu, int N, BuildLog* log = nullptr);

// Commutator group-like g = 1 + seed + (higher) satisfying the 5-cycle,
// 2-cycle and special 3-cycle relations up to degree N. The seed must be
// homogeneous and satisfy the five-, three- and two-term linear relations;
// seed = 0 gives the constant series 1.
Series build_grt1_element(const LiePolynomial& seed, int N, BuildLog* log = nullptr);

// phi2 . phi1 = phi2(phi1 X phi1^{-1}, Y) phi1, at the smaller of the two
// truncations. Both factors must be commutator group-like.
Series grt_action(const Series& phi2, const Series& phi1);

// The endomorphism of the five-point algebra determined by a commutator
// group-like phi1 satisfying the 5-cycle, 2-cycle and special 3-cycle
// relations: X12 and X45 are fixed, the strand-2 and strand-5 generators are
// conjugated. Well-definedness (relators map to zero) is verified on
// construction at phi1's truncation.
AlgebraHom p5_automorphism(const Series& phi1);

// (l1 l2, f1(f2 x^{l2} f2^{-1}, y^{l2}) f2) at the smaller truncation.
GTPair gt_product(const GTPair& p1, const GTPair& p2);

// The pair (lambda, f) with lambda = mu'/mu carrying base = (mu, phi) to
// target = (mu', phi'): f(phi e^{mu X} phi^{-1}, e^{mu Y}) phi = phi'.
// Both inputs must be verified at degree >= N; the result is checked against
// the two-, three- and five-term group relations and a failure throws.
GTPair build_gt_element(const MPair& target, const MPair& base, int N);

// Outcome of running one of the implication pipelines on a concrete input:
// the hypothesis check, the scalar(s) extracted from the quadratic
// coefficient, and the residual of every consequence relation.
struct TheoremReport {
  std::string subject;
  bool hypothesis_met = false;
  // the extracted scalar is 0 and is the unique possibility, not a +/- pair
  bool degenerate_zero = false;
  Scalar value_plus;
  Scalar value_minus;
  Integer d = 1;  // discriminant of the field the scalar lives in; 1 = rational
  std::vector<std::pair<std::string, Residual>> checks;
  bool all_hold = false;
};

// Pentagon first; if it holds, mu = +/- sqrt(24 c2) and both hexagons are
// checked for each sign. Requires N >= 2 so the quadratic coefficient exists.
TheoremReport theorem1_run(const Series& phi, int N);

// Five-term group relation against a verified associator pair first; if it
// holds, lambda = +/- sqrt(24 c2 + 1) and the three- and two-term group
// relations are checked.
TheoremReport theorem2_run(const Series& f, int N, const MPair& assoc);

}  // namespace assoc
