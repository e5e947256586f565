#include "assoc/freelie.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace assoc {

namespace {

void require_uniform(const AlphabetPtr& a) {
  if (!a->uniform_degree_one()) throw std::invalid_argument("alphabet must have all generators in degree 1");
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!(w < Word(w.begin() + i, w.end()))) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(const AlphabetPtr& a, int degree) {
  require_uniform(a);
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  const int k = static_cast<int>(a->size());
  const int n = degree;
  // Duval's generation of Lyndon words of length <= n in lex order
  std::vector<Word> out;
  Word w(1, 0);
  while (true) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    // extend periodically to length n, then increment
    Word t = w;
    while (static_cast<int>(t.size()) < n) t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && t.back() == k - 1) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = t;
  }
  return out;
}

std::pair<Word, Word> lyndon_factorization(const Word& w) {
  if (!is_lyndon(w) || w.size() < 2) throw std::invalid_argument("standard factorization needs a Lyndon word of length >= 2");
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (Word(w.begin() + i, w.end()) < Word(w.begin() + best, w.end())) best = i;
  }
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

Series lyndon_bracket_series(const AlphabetPtr& a, const Word& w, int truncation) {
  require_uniform(a);
  if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word: " + a->word_str(w));
  if (static_cast<int>(w.size()) > truncation) throw std::invalid_argument("Lyndon word exceeds truncation");
  for (unsigned char c : w)
    if (c >= a->size()) throw std::invalid_argument("letter outside alphabet");
  if (w.size() == 1) return Series::generator(a, truncation, w[0]);
  auto [u, v] = lyndon_factorization(w);
  return commutator(lyndon_bracket_series(a, u, truncation), lyndon_bracket_series(a, v, truncation));
}

LiePolynomial::LiePolynomial(AlphabetPtr alphabet, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation), coords_(WordOrder{alphabet_.get()}) {
  require_uniform(alphabet_);
  if (truncation_ < 1) throw std::invalid_argument("truncation must be positive");
}

void LiePolynomial::add_coord(const Word& lyndon, const Scalar& c) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("not a Lyndon word: " + alphabet_->word_str(lyndon));
  if (static_cast<int>(lyndon.size()) > truncation_) return;
  if (c.is_zero()) return;
  auto it = coords_.find(lyndon);
  if (it == coords_.end()) {
    coords_.emplace(lyndon, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

Scalar LiePolynomial::coord(const Word& lyndon) const {
  auto it = coords_.find(lyndon);
  return it == coords_.end() ? Scalar(0) : it->second;
}

LiePolynomial LiePolynomial::truncated(int n) const {
  if (n > truncation_) throw std::invalid_argument("cannot raise truncation");
  LiePolynomial out(alphabet_, n);
  for (const auto& [w, c] : coords_)
    if (static_cast<int>(w.size()) <= n) out.coords_.emplace(w, c);
  return out;
}

LiePolynomial LiePolynomial::operator-() const {
  LiePolynomial out(alphabet_, truncation_);
  for (const auto& [w, c] : coords_) out.coords_.emplace(w, -c);
  return out;
}

LiePolynomial& LiePolynomial::operator+=(const LiePolynomial& o) {
  if (!(*alphabet_ == *o.alphabet_) || truncation_ != o.truncation_)
    throw std::invalid_argument("Lie polynomial alphabet/truncation mismatch");
  for (const auto& [w, c] : o.coords_) add_coord(w, c);
  return *this;
}

LiePolynomial& LiePolynomial::operator-=(const LiePolynomial& o) { return *this += -o; }

LiePolynomial operator*(const Scalar& c, LiePolynomial p) {
  if (c.is_zero()) return LiePolynomial(p.alphabet_, p.truncation_);
  for (auto& [w, v] : p.coords_) v = c * v;
  return p;
}

bool LiePolynomial::operator==(const LiePolynomial& o) const {
  if (!(*alphabet_ == *o.alphabet_) || truncation_ != o.truncation_) return false;
  return coords_.size() == o.coords_.size() &&
         std::equal(coords_.begin(), coords_.end(), o.coords_.begin());
}

Series expand(const LiePolynomial& p) {
  Series out(p.alphabet(), p.truncation());
  for (const auto& [w, c] : p.coords()) out += c * lyndon_bracket_series(p.alphabet(), w, p.truncation());
  return out;
}

LiePolynomial assoc_to_lie(const Series& f) {
  if (!is_primitive(f)) throw std::invalid_argument("series is not primitive");
  LiePolynomial out(f.alphabet(), f.truncation());
  Series rest = f;
  while (!rest.is_zero()) {
    const auto& [w, c] = *rest.terms().begin();
    if (!is_lyndon(w)) throw std::logic_error("primitive series leads with a non-Lyndon word");
    out.add_coord(w, c);
    rest -= c * lyndon_bracket_series(f.alphabet(), w, f.truncation());
  }
  return out;
}

LiePolynomial lie_bracket(const LiePolynomial& p, const LiePolynomial& q) {
  return assoc_to_lie(commutator(expand(p), expand(q)));
}

LiePolynomial bch(int N) {
  auto a = xy_alphabet();
  Series x = Series::generator(a, N, 0), y = Series::generator(a, N, 1);
  return assoc_to_lie(log(mul(exp(x), exp(y))));
}

AdPowerForm ad_power_form(const LiePolynomial& r) {
  AdPowerForm out;
  out.a.assign(static_cast<std::size_t>(r.truncation()), Scalar(0));
  for (const auto& [w, c] : r.coords()) {
    // the span of (ad Y)^(m-1)(X) is exactly the bracketings of X Y^(m-1),
    // with bracket(X Y^(m-1)) = (-1)^(m-1) (ad Y)^(m-1)(X)
    bool power_word = w[0] == 0;
    for (std::size_t i = 1; i < w.size(); ++i) power_word = power_word && w[i] == 1;
    if (!power_word) {
      out.ok = false;
      out.offending = w;
      return out;
    }
    std::size_t m = w.size();
    out.a[m - 1] = (m % 2 == 1) ? c : -c;
  }
  out.ok = true;
  return out;
}

namespace {

void require_pair_alphabet(const LiePolynomial& p) {
  if (p.alphabet()->size() != 2) throw std::invalid_argument("derivation needs a two-generator alphabet");
}

// image of f under the derivation sending the first generator to g and the
// second to zero, computed term by term on words
Series derive_series(const Series& f, const Series& g) {
  Series out(f.alphabet(), f.truncation());
  const int N = f.truncation();
  for (const auto& [w, c] : f.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0) continue;
      for (const auto& [b, cb] : g.terms()) {
        if (static_cast<int>(w.size() - 1 + b.size()) > N) continue;
        Word spliced(w.begin(), w.begin() + i);
        spliced.append(b);
        spliced.append(w.begin() + i + 1, w.end());
        out.add_term(spliced, c * cb);
      }
    }
  }
  return out;
}

}  // namespace

LiePolynomial derivation_apply(const LiePolynomial& phi, const LiePolynomial& target) {
  require_pair_alphabet(phi);
  if (!(*phi.alphabet() == *target.alphabet()) || phi.truncation() != target.truncation())
    throw std::invalid_argument("derivation operands must share alphabet and truncation");
  Series a = expand(phi);
  Series x = Series::generator(phi.alphabet(), phi.truncation(), 0);
  Series dx = commutator(a, x);
  return assoc_to_lie(derive_series(expand(target), dx));
}

LiePolynomial ihara_bracket(const LiePolynomial& p1, const LiePolynomial& p2) {
  LiePolynomial out = lie_bracket(p1, p2);
  out += derivation_apply(p2, p1);
  out -= derivation_apply(p1, p2);
  return out;
}

}  // namespace assoc
