#pragma once

// Graded algebras given by generators and homogeneous relators: the degree-1
// relators are eliminated into the alphabet, and the two-sided ideal of the
// degree-2 relators is handled by per-degree echelon caches kept in a
// compressed coordinate system. The degree-n quotient is represented as
// (V (x) Q_{n-1}) / image(R (x) Q_{n-2}), so caches grow with the quotient
// dimension rather than with the full word space.

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "assoc/linalg.hpp"
#include "assoc/series.hpp"

namespace assoc {

struct Presentation {
  std::vector<std::string> generators;  // raw generator names
  // degree-1 relators: sparse rows over raw generator indices
  std::vector<SparseVec<Rational>> linear;
  // degree-2 relators: sums of c * g_a g_b in the free associative algebra
  struct QuadTerm {
    int a;
    int b;
    Rational c;
  };
  std::vector<std::vector<QuadTerm>> quadratic;

  std::string linear_str(int i) const;
  std::string quadratic_str(int i) const;
};

// Named presentations addressable from the CLI.
Presentation a4_presentation();
Presentation p5_presentation();
Presentation f2_presentation();
Presentation f3_in_p5_presentation();
Presentation presentation_by_name(const std::string& name);

class PresentedAlgebra {
 public:
  PresentedAlgebra(Presentation pres, int max_degree);

  const Presentation& presentation() const { return pres_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }  // reduced
  int max_degree() const { return max_degree_; }

  // degree-1 expression of a raw generator over the reduced alphabet
  const Series& rewrite_raw(int raw_index) const { return raw_rewrite_[raw_index]; }
  int raw_generator_index(const std::string& name) const;

  // quotient dimension of the degree-n component (builds caches on demand)
  long dimension(int n) const;
  // rank of the degree-n ideal cache in compressed coordinates; the invariant
  // size(V)*dim(n-1) - rank = dim(n) is asserted internally
  long ideal_rank(int n) const;

  bool is_zero(const Series& f) const;
  Series normal_form(const Series& f) const;
  // canonical-basis coordinates of the degree-n component; basis elements are
  // the normal words, in canonical order
  SparseVec<Scalar> coordinates(const Series& f, int n) const;
  const std::vector<Word>& normal_words(int n) const;

 private:
  struct DegreeData {
    long dim = 0;
    long ideal_rank = 0;
    std::vector<Word> words;  // normal words indexed by basis position
    // left multiplication by a letter, Q_{n-1} -> Q_n, one sparse column per
    // Q_{n-1} basis element
    std::vector<std::vector<SparseVec<Rational>>> mult;
  };

  void ensure_degree(int n) const;
  const DegreeData& degree(int n) const;
  // coordinates of a list of (word, coeff) terms of uniform degree n
  SparseVec<Rational> coords_terms(const std::vector<std::pair<const Word*, Rational>>& terms, std::size_t offset,
                                   int n) const;

  Presentation pres_;
  int max_degree_;
  AlphabetPtr alphabet_;
  std::vector<Series> raw_rewrite_;
  std::vector<SparseVec<Rational>> relator_rows_;  // echelonized degree-2 relators over letter pairs
  mutable std::vector<std::unique_ptr<DegreeData>> degrees_;
  mutable std::mutex cache_mutex_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

AlgebraPtr make_algebra(const Presentation& pres, int max_degree);

class AlgebraHom {
 public:
  // Verifies every relator of the source maps to zero in the target; throws
  // std::invalid_argument naming the relator and its residual otherwise.
  // raw_images are indexed by raw source generators, over the target's
  // reduced alphabet, with zero constant terms.
  AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<Series> raw_images);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Series& raw_image(int raw_index) const { return raw_images_[raw_index]; }
  bool verified() const { return true; }

  // substitute reduced-alphabet letters and return the target normal form
  Series apply(const Series& f) const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Series> raw_images_;
  std::vector<Series> reduced_images_;
};

// t_ij -> X_ij, the surjection onto the 4-point part of the 5-point algebra
AlgebraHom tau_a4_to_p5(AlgebraPtr a4, AlgebraPtr p5);
// X12 -> X, X23 -> Y, X_i5 -> 0, the rest forced by the incidence relations
AlgebraHom project_p5_to_f2(AlgebraPtr p5, AlgebraPtr f2);
// strand relabeling X_ij -> X_{s(i)s(j)}; s given as images of 1..5
AlgebraHom p5_strand_hom(AlgebraPtr p5, const std::array<int, 5>& s);

struct F3Embedding {
  AlgebraPtr f3;
  AlgebraHom embedding;  // into p5
  AlgebraHom q1;         // onto f2: X21 -> X, X23 -> Y, X24 -> X
  AlgebraHom q2;         // onto f2: X21 -> X, X23 -> X, X24 -> Y
};
F3Embedding f3_in_p5(AlgebraPtr p5, AlgebraPtr f2);

}  // namespace assoc
