#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "assoc/field.hpp"

namespace assoc {

// Letters are indices into an Alphabet; words fit comfortably in the inline
// buffer of a basic_string at the degrees this library works at.
using Word = std::basic_string<unsigned char>;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names, std::vector<int> degrees = {});

  size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;
  int letter_degree(int i) const { return degrees_.at(i); }
  int degree(const Word& w) const;
  bool uniform_degree_one() const { return uniform_; }

  // "1" for the empty word; letters joined bare when every name is one
  // character, otherwise joined with '.'.
  std::string word_str(const Word& w) const;
  Word parse_word(const std::string& s) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.degrees_ == b.degrees_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  bool uniform_ = true;
  bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees = {});
// The standard two-letter alphabet {X, Y}.
AlphabetPtr xy_alphabet();

// Degree-first, then lexicographic by letter index.
struct WordOrder {
  const Alphabet* alpha;
  bool operator()(const Word& a, const Word& b) const {
    if (alpha->uniform_degree_one()) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    }
    int da = alpha->degree(a), db = alpha->degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class TensorSeries;

// Truncated non-commutative polynomial: finite word -> Scalar map, all stored
// words of degree <= truncation, no explicit zeros.
class Series {
 public:
  using TermMap = std::map<Word, Scalar, WordOrder>;

  Series(AlphabetPtr alpha, int truncation);
  static Series unit(const AlphabetPtr& alpha, int truncation);
  static Series generator(const AlphabetPtr& alpha, int truncation, int letter);

  const AlphabetPtr& alphabet() const { return alpha_; }
  int truncation() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Word& w) const;
  Scalar constant_term() const { return coefficient(Word()); }
  // Adds c * w, dropping the term if it cancels or exceeds the truncation.
  void add_term(const Word& w, const Scalar& c);

  Series homogeneous_component(int n) const;
  // -1 when zero.
  int min_degree() const;
  Series truncated(int n) const;  // explicit precision drop; n <= truncation

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Scalar& c, Series s);
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  AlphabetPtr alpha_;
  int trunc_;
  TermMap terms_;
};

Series mul(const Series& f, const Series& g);
Series exp(const Series& f);    // constant term 0
Series log(const Series& g);    // constant term 1
Series group_inverse(const Series& f);  // constant term 1
TensorSeries coproduct(const Series& f);
bool is_grouplike(const Series& f);
bool is_primitive(const Series& f);
bool is_commutator_grouplike(const Series& f);
// images[i] substitutes letter i; every image needs zero constant term and the
// shared target alphabet/truncation.
Series substitute(const Series& f, const std::vector<Series>& images);
Scalar c2(const Series& f);
// Image in the commutative quotient, words canonicalized by sorting letters.
Series abelianized(const Series& f);
Series commutator(const Series& f, const Series& g);
// f with both letters scaled: w gets factor s^deg(w).
Series rescale(const Series& f, const Scalar& s);

// Coproduct target: finite (Word, Word) -> Scalar map with total degree capped.
class TensorSeries {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyOrder {
    const Alphabet* alpha;
    bool operator()(const Key& a, const Key& b) const {
      WordOrder w{alpha};
      if (w(a.first, b.first)) return true;
      if (w(b.first, a.first)) return false;
      return w(a.second, b.second);
    }
  };
  using TermMap = std::map<Key, Scalar, KeyOrder>;

  TensorSeries(AlphabetPtr alpha, int truncation);
  static TensorSeries tensor(const Series& f, const Series& g);

  const AlphabetPtr& alphabet() const { return alpha_; }
  int truncation() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w1, const Word& w2, const Scalar& c);

  TensorSeries& operator+=(const TensorSeries& o);
  TensorSeries& operator-=(const TensorSeries& o);
  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  friend bool operator==(const TensorSeries& a, const TensorSeries& b);
  friend bool operator!=(const TensorSeries& a, const TensorSeries& b) { return !(a == b); }

 private:
  AlphabetPtr alpha_;
  int trunc_;
  TermMap terms_;
};

TensorSeries mul(const TensorSeries& f, const TensorSeries& g);

}  // namespace assoc
