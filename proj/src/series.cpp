#include "assoc/series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace assoc {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.empty()) throw std::invalid_argument("empty alphabet");
  if (degrees_.empty()) degrees_.assign(names_.size(), 1);
  if (degrees_.size() != names_.size())
    throw std::invalid_argument("degree list does not match alphabet");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second)
      throw std::invalid_argument("alphabet names must be distinct and nonempty");
    if (n.size() != 1) single_char_ = false;
    if (n.find('.') != std::string::npos || n == "1")
      throw std::invalid_argument("reserved alphabet name: " + n);
  }
  for (int d : degrees_) {
    if (d < 1) throw std::invalid_argument("letter degrees must be positive");
    if (d != 1) uniform_ = false;
  }
}

int Alphabet::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator: " + name);
}

int Alphabet::degree(const Word& w) const {
  if (uniform_) return static_cast<int>(w.size());
  int d = 0;
  for (unsigned char c : w) d += degrees_.at(c);
  return d;
}

std::string Alphabet::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && !single_char_) out += '.';
    out += names_.at(w[i]);
  }
  return out;
}

Word Alphabet::parse_word(const std::string& s) const {
  if (s == "1") return Word();
  Word w;
  if (single_char_) {
    for (char c : s) w.push_back(static_cast<unsigned char>(index(std::string(1, c))));
    return w;
  }
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t dot = s.find('.', pos);
    if (dot == std::string::npos) dot = s.size();
    w.push_back(static_cast<unsigned char>(index(s.substr(pos, dot - pos))));
    pos = dot + 1;
  }
  return w;
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<Alphabet>(std::move(names), std::move(degrees));
}

AlphabetPtr xy_alphabet() {
  static AlphabetPtr a = make_alphabet({"X", "Y"});
  return a;
}

namespace {

void require_compatible(const Series& a, const Series& b) {
  if (!(*a.alphabet() == *b.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("truncation mismatch");
}

}  // namespace

Series::Series(AlphabetPtr alpha, int truncation)
    : alpha_(std::move(alpha)), trunc_(truncation), terms_(WordOrder{alpha_.get()}) {
  if (!alpha_) throw std::invalid_argument("null alphabet");
  if (trunc_ < 1) throw std::invalid_argument("truncation must be positive");
}

Series Series::unit(const AlphabetPtr& alpha, int truncation) {
  Series s(alpha, truncation);
  s.terms_.emplace(Word(), Scalar(1));
  return s;
}

Series Series::generator(const AlphabetPtr& alpha, int truncation, int letter) {
  Series s(alpha, truncation);
  s.add_term(Word(1, static_cast<unsigned char>(letter)), Scalar(1));
  return s;
}

Scalar Series::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Series::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (unsigned char l : w)
    if (l >= alpha_->size()) throw std::invalid_argument("letter outside alphabet");
  if (alpha_->degree(w) > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series Series::homogeneous_component(int n) const {
  Series out(alpha_, trunc_);
  for (const auto& [w, c] : terms_)
    if (alpha_->degree(w) == n) out.terms_.emplace(w, c);
  return out;
}

int Series::min_degree() const {
  if (terms_.empty()) return -1;
  return alpha_->degree(terms_.begin()->first);
}

Series Series::truncated(int n) const {
  if (n > trunc_) throw std::invalid_argument("cannot raise truncation");
  Series out(alpha_, n);
  for (const auto& [w, c] : terms_)
    if (alpha_->degree(w) <= n) out.terms_.emplace(w, c);
  return out;
}

Series Series::operator-() const {
  Series out(alpha_, trunc_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Series& Series::operator+=(const Series& o) {
  require_compatible(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_compatible(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Series operator*(const Scalar& c, Series s) {
  if (c.is_zero()) return Series(s.alphabet(), s.truncation());
  for (auto& [w, v] : s.terms_) v *= c;
  return s;
}

bool operator==(const Series& a, const Series& b) {
  if (!(*a.alphabet() == *b.alphabet()) || a.truncation() != b.truncation()) return false;
  return std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first && x.second == y.second;
                    });
}

Series mul(const Series& f, const Series& g) {
  require_compatible(f, g);
  int N = f.truncation();
  const Alphabet& alpha = *f.alphabet();
  // right factor bucketed by degree so truncation prunes whole blocks
  std::vector<std::vector<const std::pair<const Word, Scalar>*>> buckets(N + 1);
  for (const auto& term : g.terms()) buckets[alpha.degree(term.first)].push_back(&term);
  Series out(f.alphabet(), N);
  for (const auto& [wf, cf] : f.terms()) {
    int df = alpha.degree(wf);
    for (int dg = 0; dg + df <= N; ++dg) {
      for (const auto* term : buckets[dg]) {
        out.add_term(wf + term->first, cf * term->second);
      }
    }
  }
  return out;
}

Series exp(const Series& f) {
  if (!f.constant_term().is_zero())
    throw std::invalid_argument("exp needs zero constant term");
  Series res = Series::unit(f.alphabet(), f.truncation());
  Series inc = res;
  for (int k = 1; k <= f.truncation(); ++k) {
    inc = mul(inc, f);
    inc = Scalar(Rational(1, k)) * std::move(inc);
    if (inc.is_zero()) break;
    res += inc;
  }
  return res;
}

Series log(const Series& g) {
  if (g.constant_term() != Scalar(1))
    throw std::invalid_argument("log needs constant term 1");
  Series u = g - Series::unit(g.alphabet(), g.truncation());
  Series res(g.alphabet(), g.truncation());
  Series pw = Series::unit(g.alphabet(), g.truncation());
  for (int k = 1; k <= g.truncation(); ++k) {
    pw = mul(pw, u);
    if (pw.is_zero()) break;
    Rational coeff(k % 2 ? 1 : -1, k);
    res += Scalar(coeff) * pw;
  }
  return res;
}

Series group_inverse(const Series& f) {
  if (f.constant_term() != Scalar(1))
    throw std::invalid_argument("group_inverse needs constant term 1");
  Series u = Series::unit(f.alphabet(), f.truncation()) - f;
  Series res = Series::unit(f.alphabet(), f.truncation());
  Series pw = res;
  for (int k = 1; k <= f.truncation(); ++k) {
    pw = mul(pw, u);
    if (pw.is_zero()) break;
    res += pw;
  }
  return res;
}

TensorSeries coproduct(const Series& f) {
  TensorSeries out(f.alphabet(), f.truncation());
  for (const auto& [w, c] : f.terms()) {
    size_t n = w.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      Word left, right;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (size_t{1} << i)) left.push_back(w[i]);
        else right.push_back(w[i]);
      }
      out.add_term(left, right, c);
    }
  }
  return out;
}

bool is_grouplike(const Series& f) {
  if (f.constant_term() != Scalar(1)) return false;
  return coproduct(f) == TensorSeries::tensor(f, f);
}

bool is_primitive(const Series& f) {
  Series one = Series::unit(f.alphabet(), f.truncation());
  return coproduct(f) == TensorSeries::tensor(f, one) + TensorSeries::tensor(one, f);
}

bool is_commutator_grouplike(const Series& f) {
  if (!is_grouplike(f)) return false;
  for (size_t i = 0; i < f.alphabet()->size(); ++i)
    if (!f.coefficient(Word(1, static_cast<unsigned char>(i))).is_zero()) return false;
  return true;
}

Series substitute(const Series& f, const std::vector<Series>& images) {
  if (images.size() != f.alphabet()->size())
    throw std::invalid_argument("need one image per generator");
  for (const auto& img : images) {
    require_compatible(images.front(), img);
    if (!img.constant_term().is_zero())
      throw std::invalid_argument("substitution image has nonzero constant term");
  }
  if (images.front().truncation() != f.truncation())
    throw std::invalid_argument("truncation mismatch");
  Series out(images.front().alphabet(), images.front().truncation());
  Series one = Series::unit(out.alphabet(), out.truncation());
  // sorted term order shares leading-prefix products between consecutive words
  std::vector<Series> prefix;
  Word prev;
  for (const auto& [w, c] : f.terms()) {
    size_t common = 0;
    while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
    prefix.resize(common, out);
    for (size_t i = common; i < w.size(); ++i)
      prefix.push_back(mul(i == 0 ? one : prefix[i - 1], images[w[i]]));
    const Series& term = w.empty() ? one : prefix.back();
    out += c * term;
    prev = w;
  }
  return out;
}

Scalar c2(const Series& f) {
  if (f.alphabet()->size() < 2) throw std::invalid_argument("c2 needs two generators");
  if (f.truncation() < 2) throw std::invalid_argument("c2 needs truncation at least 2");
  return f.coefficient(Word({0, 1}));
}

Series abelianized(const Series& f) {
  Series out(f.alphabet(), f.truncation());
  for (const auto& [w, c] : f.terms()) {
    Word s = w;
    std::sort(s.begin(), s.end());
    out.add_term(s, c);
  }
  return out;
}

Series commutator(const Series& f, const Series& g) {
  return mul(f, g) - mul(g, f);
}

Series rescale(const Series& f, const Scalar& s) {
  Series out(f.alphabet(), f.truncation());
  for (const auto& [w, c] : f.terms()) {
    Scalar factor(1);
    for (int i = 0; i < f.alphabet()->degree(w); ++i) factor *= s;
    out.add_term(w, factor * c);
  }
  return out;
}

TensorSeries::TensorSeries(AlphabetPtr alpha, int truncation)
    : alpha_(std::move(alpha)), trunc_(truncation), terms_(KeyOrder{alpha_.get()}) {
  if (!alpha_) throw std::invalid_argument("null alphabet");
  if (trunc_ < 1) throw std::invalid_argument("truncation must be positive");
}

TensorSeries TensorSeries::tensor(const Series& f, const Series& g) {
  require_compatible(f, g);
  TensorSeries out(f.alphabet(), f.truncation());
  const Alphabet& alpha = *f.alphabet();
  for (const auto& [w1, c1] : f.terms()) {
    int d1 = alpha.degree(w1);
    for (const auto& [w2, c2] : g.terms()) {
      if (d1 + alpha.degree(w2) > out.trunc_) continue;
      out.add_term(w1, w2, c1 * c2);
    }
  }
  return out;
}

void TensorSeries::add_term(const Word& w1, const Word& w2, const Scalar& c) {
  if (c.is_zero()) return;
  if (alpha_->degree(w1) + alpha_->degree(w2) > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(Key(w1, w2), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
  if (!(*alpha_ == *o.alpha_) || trunc_ != o.trunc_)
    throw std::invalid_argument("tensor series mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
  if (!(*alpha_ == *o.alpha_) || trunc_ != o.trunc_)
    throw std::invalid_argument("tensor series mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

bool operator==(const TensorSeries& a, const TensorSeries& b) {
  if (!(*a.alphabet() == *b.alphabet()) || a.truncation() != b.truncation()) return false;
  return std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first && x.second == y.second;
                    });
}

TensorSeries mul(const TensorSeries& f, const TensorSeries& g) {
  if (!(*f.alphabet() == *g.alphabet()) || f.truncation() != g.truncation())
    throw std::invalid_argument("tensor series mismatch");
  TensorSeries out(f.alphabet(), f.truncation());
  for (const auto& [k1, c1] : f.terms())
    for (const auto& [k2, c2] : g.terms())
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return out;
}

}  // namespace assoc
