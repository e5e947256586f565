#include "assoc/presented.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace assoc {

std::string Presentation::linear_str(int i) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : linear[i]) {
    Rational c = e.val;
    std::string sign = sgn(c) < 0 ? "-" : (first ? "" : "+");
    if (sgn(c) < 0) c = -c;
    os << sign;
    if (c != 1) os << c.get_str() << "*";
    os << generators[e.col];
    first = false;
  }
  return os.str();
}

std::string Presentation::quadratic_str(int i) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : quadratic[i]) {
    Rational c = t.c;
    std::string sign = sgn(c) < 0 ? "-" : (first ? "" : "+");
    if (sgn(c) < 0) c = -c;
    os << sign;
    if (c != 1) os << c.get_str() << "*";
    os << generators[t.a] << "." << generators[t.b];
    first = false;
  }
  return os.str();
}

PresentedAlgebra::PresentedAlgebra(Presentation pres, int max_degree)
    : pres_(std::move(pres)), max_degree_(max_degree) {
  if (max_degree_ < 2) throw std::invalid_argument("algebra truncation must be at least 2");
  const int nraw = static_cast<int>(pres_.generators.size());
  if (nraw == 0) throw std::invalid_argument("presentation needs generators");
  for (const auto& row : pres_.linear)
    for (const auto& e : row)
      if (e.col < 0 || e.col >= nraw) throw std::invalid_argument("linear relator index out of range");
  for (const auto& rel : pres_.quadratic)
    for (const auto& t : rel)
      if (t.a < 0 || t.a >= nraw || t.b < 0 || t.b >= nraw)
        throw std::invalid_argument("quadratic relator index out of range");

  // Eliminate the degree-1 relators by substitution, pivoting on the LAST
  // generator in each relation so the earliest-listed generators survive.
  std::vector<bool> eliminated(nraw, false);
  std::vector<SparseVec<Rational>> subst(nraw);
  for (const auto& raw_row : pres_.linear) {
    SparseVec<Rational> row, scratch;
    for (const auto& e : raw_row) {
      if (eliminated[e.col])
        sv_scaled_add(row, e.val, subst[e.col], scratch);
      else
        sv_scaled_add(row, e.val, SparseVec<Rational>{{e.col, Rational(1)}}, scratch);
      row.swap(scratch);
    }
    if (row.empty()) continue;
    int pc = row.back().col;
    Rational inv = Rational(-1) / row.back().val;
    row.pop_back();
    sv_scale(row, inv);
    subst[pc] = row;
    eliminated[pc] = true;
    for (int q = 0; q < nraw; ++q) {
      if (!eliminated[q] || q == pc) continue;
      Rational c = sv_get(subst[q], pc);
      if (sgn(c) == 0) continue;
      SparseVec<Rational> cleared;
      for (const auto& e : subst[q])
        if (e.col != pc) cleared.push_back(e);
      sv_scaled_add(cleared, c, subst[pc], scratch);
      subst[q].swap(scratch);
    }
  }

  std::vector<std::string> letters;
  std::vector<int> raw_to_letter(nraw, -1);
  for (int g = 0; g < nraw; ++g) {
    if (eliminated[g]) continue;
    raw_to_letter[g] = static_cast<int>(letters.size());
    letters.push_back(pres_.generators[g]);
  }
  if (letters.empty()) throw std::invalid_argument("all generators eliminated");
  alphabet_ = make_alphabet(letters);
  const int k = static_cast<int>(letters.size());

  std::vector<SparseVec<Rational>> letter_expr(nraw);
  for (int g = 0; g < nraw; ++g) {
    if (!eliminated[g]) {
      letter_expr[g].push_back({raw_to_letter[g], Rational(1)});
    } else {
      for (const auto& e : subst[g]) {
        if (eliminated[e.col]) throw std::logic_error("substitution not closed");
        letter_expr[g].push_back({raw_to_letter[e.col], e.val});
      }
      letter_expr[g] = sv_canonical(std::move(letter_expr[g]));
    }
  }
  raw_rewrite_.reserve(nraw);
  for (int g = 0; g < nraw; ++g) {
    Series s(alphabet_, max_degree_);
    for (const auto& e : letter_expr[g]) s.add_term(Word(1, static_cast<unsigned char>(e.col)), Scalar(e.val));
    raw_rewrite_.push_back(std::move(s));
  }

  // Rewrite the degree-2 relators over the reduced alphabet and echelonize.
  SparseMatrix<Rational> rel(k * k);
  for (const auto& relator : pres_.quadratic) {
    SparseVec<Rational> row;
    for (const auto& t : relator)
      for (const auto& ea : letter_expr[t.a])
        for (const auto& eb : letter_expr[t.b]) row.push_back({ea.col * k + eb.col, t.c * ea.val * eb.val});
    rel.add_row(sv_canonical(std::move(row)));
  }
  relator_rows_ = echelonize(rel).rows();

  degrees_.reserve(static_cast<std::size_t>(max_degree_) + 1);
  auto d0 = std::make_unique<DegreeData>();
  d0->dim = 1;
  d0->words.emplace_back();
  degrees_.push_back(std::move(d0));
}

int PresentedAlgebra::raw_generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < pres_.generators.size(); ++i)
    if (pres_.generators[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator: " + name);
}

void PresentedAlgebra::ensure_degree(int n) const {
  if (n > max_degree_) throw std::invalid_argument("degree exceeds supported truncation");
  std::lock_guard<std::mutex> lk(cache_mutex_);
  const int k = static_cast<int>(alphabet_->size());
  while (static_cast<int>(degrees_.size()) <= n) {
    const int m = static_cast<int>(degrees_.size());
    const DegreeData& prev = *degrees_[m - 1];
    const long qprev = prev.dim;
    auto data = std::make_unique<DegreeData>();

    SparseMatrix<Rational> ideal(static_cast<int>(k * qprev));
    if (m >= 2) {
      const DegreeData& prev2 = *degrees_[m - 2];
      for (long j = 0; j < prev2.dim; ++j) {
        for (const auto& rel : relator_rows_) {
          SparseVec<Rational> row, scratch;
          for (const auto& e : rel) {
            int a = e.col / k, b = e.col % k;
            const SparseVec<Rational>& col = prev.mult[b][j];
            SparseVec<Rational> shifted;
            shifted.reserve(col.size());
            for (const auto& ce : col) shifted.push_back({a * static_cast<int>(qprev) + ce.col, ce.val});
            sv_scaled_add(row, e.val, shifted, scratch);
            row.swap(scratch);
          }
          ideal.add_row(std::move(row));
        }
      }
    }
    EchelonBasis<Rational> cache = echelonize(ideal);
    data->ideal_rank = cache.rank();
    data->dim = k * qprev - cache.rank();
    if (data->dim < 0) throw std::logic_error("negative quotient dimension");

    std::vector<int> basis_index(k * qprev, -1);
    long next = 0;
    for (long c = 0; c < k * qprev; ++c)
      if (!cache.is_pivot_col(static_cast<int>(c))) basis_index[c] = static_cast<int>(next++);
    data->words.reserve(data->dim);
    for (long c = 0; c < k * qprev; ++c) {
      if (basis_index[c] < 0) continue;
      Word w(1, static_cast<unsigned char>(c / qprev));
      w.append(prev.words[c % qprev]);
      data->words.push_back(std::move(w));
    }

    data->mult.assign(k, {});
    for (int l = 0; l < k; ++l) {
      data->mult[l].resize(qprev);
      for (long j = 0; j < qprev; ++j) {
        int col = static_cast<int>(l * qprev + j);
        SparseVec<Rational>& out = data->mult[l][j];
        if (basis_index[col] >= 0) {
          out.push_back({basis_index[col], Rational(1)});
        } else {
          const SparseVec<Rational>& row = cache.row(cache.row_of_pivot(col));
          for (std::size_t t = 1; t < row.size(); ++t) {
            if (basis_index[row[t].col] < 0) throw std::logic_error("cache row not fully reduced");
            out.push_back({basis_index[row[t].col], -row[t].val});
          }
        }
      }
    }
    degrees_.push_back(std::move(data));
  }
}

const PresentedAlgebra::DegreeData& PresentedAlgebra::degree(int n) const {
  ensure_degree(n);
  return *degrees_[n];
}

long PresentedAlgebra::dimension(int n) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  return degree(n).dim;
}

long PresentedAlgebra::ideal_rank(int n) const {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  return degree(n).ideal_rank;
}

const std::vector<Word>& PresentedAlgebra::normal_words(int n) const { return degree(n).words; }

SparseVec<Rational> PresentedAlgebra::coords_terms(const std::vector<std::pair<const Word*, Rational>>& terms,
                                                   std::size_t offset, int n) const {
  SparseVec<Rational> out;
  if (terms.empty()) return out;
  if (n == 0) {
    Rational acc(0);
    for (const auto& t : terms) acc += t.second;
    if (sgn(acc) != 0) out.push_back({0, std::move(acc)});
    return out;
  }
  const DegreeData& data = degree(n);
  std::vector<Rational> dense(static_cast<std::size_t>(data.dim), Rational(0));
  std::size_t i = 0;
  while (i < terms.size()) {
    unsigned char letter = (*terms[i].first)[offset];
    std::size_t j = i;
    while (j < terms.size() && (*terms[j].first)[offset] == letter) ++j;
    std::vector<std::pair<const Word*, Rational>> slice(terms.begin() + i, terms.begin() + j);
    SparseVec<Rational> sub = coords_terms(slice, offset + 1, n - 1);
    for (const auto& se : sub)
      for (const auto& me : data.mult[letter][se.col]) dense[me.col] += se.val * me.val;
    i = j;
  }
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (sgn(dense[c]) != 0) out.push_back({static_cast<int>(c), std::move(dense[c])});
  return out;
}

namespace {

struct SplitSeries {
  // degree -> (word, coeff) term lists for the rational and root parts
  std::map<int, std::vector<std::pair<const Word*, Rational>>> a, b;
  Integer d = 0;
};

SplitSeries split_series(const Series& f) {
  SplitSeries out;
  for (const auto& [w, c] : f.terms()) {
    int n = static_cast<int>(w.size());
    if (sgn(c.a()) != 0) out.a[n].push_back({&w, c.a()});
    if (sgn(c.b()) != 0) {
      out.b[n].push_back({&w, c.b()});
      out.d = c.d();
    }
  }
  return out;
}

}  // namespace

bool PresentedAlgebra::is_zero(const Series& f) const {
  if (!(*f.alphabet() == *alphabet_)) throw std::invalid_argument("series alphabet does not match algebra");
  if (f.truncation() > max_degree_) throw std::invalid_argument("series truncation exceeds supported degree");
  SplitSeries split = split_series(f);
  for (const auto& [n, terms] : split.a)
    if (!coords_terms(terms, 0, n).empty()) return false;
  for (const auto& [n, terms] : split.b)
    if (!coords_terms(terms, 0, n).empty()) return false;
  return true;
}

SparseVec<Scalar> PresentedAlgebra::coordinates(const Series& f, int n) const {
  if (!(*f.alphabet() == *alphabet_)) throw std::invalid_argument("series alphabet does not match algebra");
  if (f.truncation() > max_degree_) throw std::invalid_argument("series truncation exceeds supported degree");
  if (n < 0 || n > f.truncation()) throw std::invalid_argument("degree out of range");
  SplitSeries split = split_series(f);
  SparseVec<Rational> ca, cb;
  if (auto it = split.a.find(n); it != split.a.end()) ca = coords_terms(it->second, 0, n);
  if (auto it = split.b.find(n); it != split.b.end()) cb = coords_terms(it->second, 0, n);
  SparseVec<Scalar> out;
  std::size_t i = 0, j = 0;
  while (i < ca.size() || j < cb.size()) {
    if (j >= cb.size() || (i < ca.size() && ca[i].col < cb[j].col)) {
      out.push_back({ca[i].col, Scalar(ca[i].val)});
      ++i;
    } else if (i >= ca.size() || cb[j].col < ca[i].col) {
      out.push_back({cb[j].col, Scalar(Rational(0), cb[j].val, split.d)});
      ++j;
    } else {
      out.push_back({ca[i].col, Scalar(ca[i].val, cb[j].val, split.d)});
      ++i;
      ++j;
    }
  }
  return out;
}

Series PresentedAlgebra::normal_form(const Series& f) const {
  Series out(alphabet_, f.truncation());
  out.add_term(Word(), f.constant_term());
  for (int n = 1; n <= f.truncation(); ++n) {
    SparseVec<Scalar> c = coordinates(f, n);
    const std::vector<Word>& words = normal_words(n);
    for (const auto& e : c) out.add_term(words[e.col], e.val);
  }
  return out;
}

AlgebraPtr make_algebra(const Presentation& pres, int max_degree) {
  return std::make_shared<const PresentedAlgebra>(pres, max_degree);
}

// ---------------------------------------------------------------------------

namespace {

std::string series_brief(const Series& s, int max_terms = 6) {
  std::ostringstream os;
  int shown = 0;
  for (const auto& [w, c] : s.terms()) {
    if (shown++ == max_terms) {
      os << " ...";
      break;
    }
    os << (shown > 1 ? " + " : "") << scalar_str(c) << "*" << s.alphabet()->word_str(w);
  }
  return shown == 0 ? "0" : os.str();
}

}  // namespace

AlgebraHom::AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<Series> raw_images)
    : source_(std::move(source)), target_(std::move(target)), raw_images_(std::move(raw_images)) {
  const auto& pres = source_->presentation();
  if (raw_images_.size() != pres.generators.size())
    throw std::invalid_argument("need one image per raw generator");
  for (const auto& img : raw_images_) {
    if (!(*img.alphabet() == *target_->alphabet()))
      throw std::invalid_argument("image alphabet does not match target");
    if (img.truncation() != target_->max_degree())
      throw std::invalid_argument("images must use the target truncation");
    if (!img.constant_term().is_zero()) throw std::invalid_argument("images must have zero constant term");
  }
  for (std::size_t i = 0; i < pres.linear.size(); ++i) {
    Series img(target_->alphabet(), target_->max_degree());
    for (const auto& e : pres.linear[i]) img += Scalar(e.val) * raw_images_[e.col];
    if (!target_->is_zero(img))
      throw std::invalid_argument("relator " + pres.linear_str(static_cast<int>(i)) +
                                  " does not map to zero: residual " + series_brief(target_->normal_form(img)));
  }
  for (std::size_t i = 0; i < pres.quadratic.size(); ++i) {
    Series img(target_->alphabet(), target_->max_degree());
    for (const auto& t : pres.quadratic[i]) img += Scalar(t.c) * mul(raw_images_[t.a], raw_images_[t.b]);
    if (!target_->is_zero(img))
      throw std::invalid_argument("relator " + pres.quadratic_str(static_cast<int>(i)) +
                                  " does not map to zero: residual " + series_brief(target_->normal_form(img)));
  }
  const auto& names = source_->alphabet()->names();
  reduced_images_.reserve(names.size());
  for (const auto& name : names) reduced_images_.push_back(raw_images_[source_->raw_generator_index(name)]);
}

Series AlgebraHom::apply(const Series& f) const {
  if (!(*f.alphabet() == *source_->alphabet())) throw std::invalid_argument("series alphabet does not match source");
  if (f.truncation() > target_->max_degree()) throw std::invalid_argument("series truncation exceeds target degree");
  std::vector<Series> images;
  images.reserve(reduced_images_.size());
  for (const auto& img : reduced_images_) images.push_back(img.truncated(f.truncation()));
  return target_->normal_form(substitute(f, images));
}

// ---------------------------------------------------------------------------

namespace {

int pair_index(int i, int j, int npoints) {
  if (i > j) std::swap(i, j);
  // pairs (1,2),(1,3),...,(1,n),(2,3),... in order
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += npoints - a;
  return idx + (j - i - 1);
}

std::string pair_name(const std::string& stem, int i, int j) {
  if (i > j) std::swap(i, j);
  return stem + std::to_string(i) + std::to_string(j);
}

void add_commutator(std::vector<Presentation::QuadTerm>& rel, int a, int b, const Rational& c) {
  rel.push_back({a, b, c});
  rel.push_back({b, a, -c});
}

}  // namespace

Presentation a4_presentation() {
  Presentation p;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) p.generators.push_back(pair_name("t", i, j));
  // [t_ij, t_ik + t_jk] for each pair and each third point
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        if (k == i || k == j) continue;
        std::vector<Presentation::QuadTerm> rel;
        int ij = pair_index(i, j, 4);
        add_commutator(rel, ij, pair_index(i, k, 4), Rational(1));
        add_commutator(rel, ij, pair_index(j, k, 4), Rational(1));
        p.quadratic.push_back(std::move(rel));
      }
  // [t_ij, t_kl] for disjoint pairs
  p.quadratic.push_back({{pair_index(1, 2, 4), pair_index(3, 4, 4), Rational(1)},
                         {pair_index(3, 4, 4), pair_index(1, 2, 4), Rational(-1)}});
  p.quadratic.push_back({{pair_index(1, 3, 4), pair_index(2, 4, 4), Rational(1)},
                         {pair_index(2, 4, 4), pair_index(1, 3, 4), Rational(-1)}});
  p.quadratic.push_back({{pair_index(1, 4, 4), pair_index(2, 3, 4), Rational(1)},
                         {pair_index(2, 3, 4), pair_index(1, 4, 4), Rational(-1)}});
  return p;
}

Presentation p5_presentation() {
  Presentation p;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) p.generators.push_back(pair_name("X", i, j));
  for (int i = 1; i <= 5; ++i) {
    SparseVec<Rational> row;
    for (int j = 1; j <= 5; ++j)
      if (j != i) row.push_back({pair_index(i, j, 5), Rational(1)});
    p.linear.push_back(sv_canonical(std::move(row)));
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = i; k <= 5; ++k)
        for (int l = k + 1; l <= 5; ++l) {
          if (pair_index(k, l, 5) <= pair_index(i, j, 5)) continue;
          if (k == i || k == j || l == i || l == j) continue;
          std::vector<Presentation::QuadTerm> rel;
          add_commutator(rel, pair_index(i, j, 5), pair_index(k, l, 5), Rational(1));
          p.quadratic.push_back(std::move(rel));
        }
  return p;
}

Presentation f2_presentation() {
  Presentation p;
  p.generators = {"X", "Y"};
  return p;
}

Presentation f3_in_p5_presentation() {
  Presentation p;
  p.generators = {"X21", "X23", "X24", "X25"};
  p.linear.push_back({{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}});
  return p;
}

Presentation presentation_by_name(const std::string& name) {
  if (name == "a4") return a4_presentation();
  if (name == "p5") return p5_presentation();
  if (name == "f2") return f2_presentation();
  if (name == "f3-in-p5") return f3_in_p5_presentation();
  throw std::invalid_argument("unknown presentation: " + name);
}

AlgebraHom tau_a4_to_p5(AlgebraPtr a4, AlgebraPtr p5) {
  std::vector<Series> images;
  images.reserve(6);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) images.push_back(p5->rewrite_raw(p5->raw_generator_index(pair_name("X", i, j))));
  return AlgebraHom(std::move(a4), std::move(p5), std::move(images));
}

AlgebraHom project_p5_to_f2(AlgebraPtr p5, AlgebraPtr f2) {
  const int N = f2->max_degree();
  Series x = Series::generator(f2->alphabet(), N, 0);
  Series y = Series::generator(f2->alphabet(), N, 1);
  Series zero(f2->alphabet(), N);
  // X12 -> X, X23 -> Y, X_i5 -> 0; the rest is forced by the incidence rows
  std::vector<Series> images(10, zero);
  auto set = [&](int i, int j, const Series& s) { images[pair_index(i, j, 5)] = s; };
  set(1, 2, x);
  set(2, 3, y);
  set(1, 3, -x - y);
  set(1, 4, y);
  set(2, 4, -x - y);
  set(3, 4, x);
  return AlgebraHom(std::move(p5), std::move(f2), std::move(images));
}

AlgebraHom p5_strand_hom(AlgebraPtr p5, const std::array<int, 5>& s) {
  std::vector<Series> images;
  images.reserve(10);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      int gi = p5->raw_generator_index(pair_name("X", s[i - 1], s[j - 1]));
      images.push_back(p5->rewrite_raw(gi));
    }
  return AlgebraHom(p5, p5, std::move(images));
}

F3Embedding f3_in_p5(AlgebraPtr p5, AlgebraPtr f2) {
  AlgebraPtr f3 = make_algebra(f3_in_p5_presentation(), p5->max_degree());
  std::vector<Series> emb = {
      p5->rewrite_raw(p5->raw_generator_index("X12")), p5->rewrite_raw(p5->raw_generator_index("X23")),
      p5->rewrite_raw(p5->raw_generator_index("X24")), p5->rewrite_raw(p5->raw_generator_index("X25"))};
  const int N = f2->max_degree();
  Series x = Series::generator(f2->alphabet(), N, 0);
  Series y = Series::generator(f2->alphabet(), N, 1);
  std::vector<Series> q1 = {x, y, x, -x - x - y};
  std::vector<Series> q2 = {x, x, y, -x - x - y};
  return F3Embedding{f3, AlgebraHom(f3, p5, std::move(emb)), AlgebraHom(f3, f2, std::move(q1)),
                     AlgebraHom(f3, f2, std::move(q2))};
}

}  // namespace assoc
