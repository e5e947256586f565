#pragma once

// Exact sparse linear algebra over the coefficient field: reduced row echelon
// bases, normal-form reduction, kernel bases, and affine solves. Everything is
// deterministic: pivots are chosen as the first nonzero entry in column order,
// and free variables of a particular solution are set to zero.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "assoc/field.hpp"

namespace assoc {

inline bool entry_is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool entry_is_zero(const Scalar& v) { return v.is_zero(); }
inline Rational entry_inverse(const Rational& v) { return Rational(1) / v; }
inline Scalar entry_inverse(const Scalar& v) { return v.inverse(); }

template <typename T>
struct SVEntry {
  int col;
  T val;
  bool operator==(const SVEntry& o) const { return col == o.col && val == o.val; }
};

// Sparse vector: entries sorted by column, no zeros stored.
template <typename T>
using SparseVec = std::vector<SVEntry<T>>;

template <typename T>
T sv_get(const SparseVec<T>& v, int col) {
  std::size_t lo = 0, hi = v.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (v[mid].col < col)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < v.size() && v[lo].col == col) return v[lo].val;
  return T(0);
}

// out = a + c*b, merging sorted entries; skips the first `skip` entries of b.
template <typename T>
void sv_scaled_add(const SparseVec<T>& a, const T& c, const SparseVec<T>& b, SparseVec<T>& out,
                   std::size_t skip = 0) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = skip;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, c * b[j].val});
      ++j;
    } else {
      T v = a[i].val + c * b[j].val;
      if (!entry_is_zero(v)) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
}

template <typename T>
void sv_scale(SparseVec<T>& v, const T& c) {
  for (auto& e : v) e.val = e.val * c;
}

// Collapse an unsorted entry list into canonical form (sorted, combined, no zeros).
template <typename T>
SparseVec<T> sv_canonical(SparseVec<T> v) {
  std::sort(v.begin(), v.end(), [](const SVEntry<T>& a, const SVEntry<T>& b) { return a.col < b.col; });
  SparseVec<T> out;
  for (auto& e : v) {
    if (!out.empty() && out.back().col == e.col)
      out.back().val += e.val;
    else
      out.push_back(std::move(e));
    if (!out.empty() && entry_is_zero(out.back().val)) out.pop_back();
  }
  return out;
}

template <typename T>
class SparseMatrix {
 public:
  explicit SparseMatrix(int ncols) : ncols_(ncols) {
    if (ncols < 0) throw std::invalid_argument("negative column count");
  }

  void add_row(SparseVec<T> row) {
    row = sv_canonical(std::move(row));
    if (!row.empty() && (row.front().col < 0 || row.back().col >= ncols_))
      throw std::invalid_argument("row entry out of range");
    rows_.push_back(std::move(row));
  }

  int ncols() const { return ncols_; }
  int nrows() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<T>>& rows() const { return rows_; }

 private:
  int ncols_;
  std::vector<SparseVec<T>> rows_;
};

// Reduced row-echelon basis of a row space. Rows are kept sorted by pivot
// column; every row's first entry is its pivot with value 1, and pivot columns
// are zero in all other rows.
template <typename T>
class EchelonBasis {
 public:
  explicit EchelonBasis(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<T>>& rows() const { return rows_; }
  const SparseVec<T>& row(int i) const { return rows_[i]; }
  int pivot(int i) const { return rows_[i].front().col; }
  bool is_pivot_col(int col) const { return pivot_row_[col] >= 0; }
  int row_of_pivot(int col) const { return pivot_row_[col]; }

  // Normal form of v modulo the row space: a single left-to-right sweep works
  // because eliminating at a pivot column only disturbs later columns.
  SparseVec<T> reduce(SparseVec<T> v) const {
    if (!v.empty() && v.back().col >= ncols_) throw std::invalid_argument("vector column count mismatch");
    SparseVec<T> out, scratch;
    std::size_t i = 0;
    while (i < v.size()) {
      int r = pivot_row_[v[i].col];
      if (r < 0) {
        out.push_back(std::move(v[i]));
        ++i;
        continue;
      }
      // subtract v[i].val * rows_[r]; the pivot entries cancel
      T coef = -v[i].val;
      scratch.assign(v.begin() + i + 1, v.end());
      sv_scaled_add(scratch, coef, rows_[r], v, /*skip=*/1);
      i = 0;
      if (!out.empty() && !v.empty() && out.back().col > v.front().col)
        throw std::logic_error("echelon row not pivot-leading");
    }
    return out;
  }

  // Reduce, then insert the remainder as a new normalized row (full reduction
  // of older rows is deferred to finalize()). Returns false if v was in span.
  bool absorb(SparseVec<T> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    T inv = entry_inverse(v.front().val);
    v.front().val = T(1);
    for (std::size_t k = 1; k < v.size(); ++k) v[k].val = v[k].val * inv;
    int p = v.front().col;
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    fully_reduced_ = false;
    return true;
  }

  // Back-substitution: make every pivot column zero in all other rows, and
  // order rows by pivot column.
  void finalize() {
    if (fully_reduced_) return;
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot(a) < pivot(b); });
    std::vector<SparseVec<T>> sorted;
    sorted.reserve(rows_.size());
    for (int idx : order) sorted.push_back(std::move(rows_[idx]));
    rows_ = std::move(sorted);
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[pivot(static_cast<int>(i))] = static_cast<int>(i);
    // eliminate later pivots from earlier rows, working right to left
    SparseVec<T> scratch;
    for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
      for (int j = i - 1; j >= 0; --j) {
        T c = sv_get(rows_[j], pivot(i));
        if (entry_is_zero(c)) continue;
        T nc = -c;
        sv_scaled_add(rows_[j], nc, rows_[i], scratch);
        rows_[j].swap(scratch);
      }
    }
    fully_reduced_ = true;
  }

  bool operator==(const EchelonBasis& o) const { return ncols_ == o.ncols_ && rows_ == o.rows_; }

 private:
  int ncols_;
  std::vector<SparseVec<T>> rows_;
  std::vector<int> pivot_row_;
  bool fully_reduced_ = true;
};

template <typename T>
EchelonBasis<T> echelonize(const SparseMatrix<T>& m) {
  EchelonBasis<T> b(m.ncols());
  for (const auto& r : m.rows()) b.absorb(r);
  b.finalize();
  return b;
}

template <typename T>
SparseVec<T> reduce(const SparseVec<T>& v, const EchelonBasis<T>& b) {
  return b.reduce(v);
}

// Kernel vectors in canonical form: one per free column (ascending), built by
// setting that free variable to 1 and solving for the pivots, then scaled so
// the first nonzero entry is 1.
template <typename T>
std::vector<SparseVec<T>> kernel_from_echelon(const EchelonBasis<T>& b) {
  std::vector<SparseVec<T>> out;
  for (int f = 0; f < b.ncols(); ++f) {
    if (b.is_pivot_col(f)) continue;
    SparseVec<T> k;
    k.push_back({f, T(1)});
    for (int i = 0; i < b.rank(); ++i) {
      T a = sv_get(b.row(i), f);
      if (!entry_is_zero(a)) k.push_back({b.pivot(i), -a});
    }
    k = sv_canonical(std::move(k));
    T lead = entry_inverse(k.front().val);
    sv_scale(k, lead);
    out.push_back(std::move(k));
  }
  return out;
}

template <typename T>
std::vector<SparseVec<T>> kernel_basis(const SparseMatrix<T>& m) {
  return kernel_from_echelon(echelonize(m));
}

template <typename T>
struct AffineSolution {
  bool feasible = false;
  SparseVec<T> particular;           // free variables zero
  std::vector<SparseVec<T>> kernel;  // canonical kernel basis of m
  SparseVec<T> certificate;          // if infeasible: y with y^T m = 0, y^T rhs = 1
};

// Solve m x = rhs (rhs indexed by row). The working matrix carries the rhs as
// an extra column plus a shadow multiplier block that records how each reduced
// row was combined from the inputs; a pivot landing in the rhs column is an
// infeasibility proof and its shadow part is the certificate.
template <typename T>
AffineSolution<T> solve_affine(const SparseMatrix<T>& m, const SparseVec<T>& rhs) {
  const int n = m.ncols();
  const int rhs_col = n;
  const int shadow0 = n + 1;
  if (!rhs.empty() && rhs.back().col >= m.nrows())
    throw std::invalid_argument("rhs row index out of range");

  EchelonBasis<T> b(shadow0 + m.nrows());
  for (int i = 0; i < m.nrows(); ++i) {
    SparseVec<T> row = m.rows()[i];
    T r = sv_get(rhs, i);
    if (!entry_is_zero(r)) row.push_back({rhs_col, r});
    row.push_back({shadow0 + i, T(1)});
    b.absorb(std::move(row));
  }
  b.finalize();

  AffineSolution<T> out;
  for (int i = 0; i < b.rank(); ++i) {
    if (b.pivot(i) != rhs_col) continue;
    out.feasible = false;
    for (const auto& e : b.row(i))
      if (e.col >= shadow0) out.certificate.push_back({e.col - shadow0, e.val});
    return out;
  }
  out.feasible = true;
  for (int i = 0; i < b.rank(); ++i) {
    if (b.pivot(i) >= n) continue;  // shadow-only row: a row-space dependency
    T v = sv_get(b.row(i), rhs_col);
    if (!entry_is_zero(v)) out.particular.push_back({b.pivot(i), std::move(v)});
  }
  out.particular = sv_canonical(std::move(out.particular));

  // kernel of m from the same elimination, ignoring rhs and shadow columns
  EchelonBasis<T> plain(n);
  for (int i = 0; i < b.rank(); ++i) {
    if (b.pivot(i) >= n) continue;
    SparseVec<T> r;
    for (const auto& e : b.row(i))
      if (e.col < n) r.push_back(e);
    plain.absorb(std::move(r));
  }
  plain.finalize();
  out.kernel = kernel_from_echelon(plain);
  return out;
}

// m x, indexed by row.
template <typename T>
SparseVec<T> mat_apply(const SparseMatrix<T>& m, const SparseVec<T>& x) {
  SparseVec<T> out;
  for (int i = 0; i < m.nrows(); ++i) {
    T acc(0);
    const auto& row = m.rows()[i];
    std::size_t a = 0, b = 0;
    while (a < row.size() && b < x.size()) {
      if (row[a].col < x[b].col)
        ++a;
      else if (x[b].col < row[a].col)
        ++b;
      else {
        acc += row[a].val * x[b].val;
        ++a;
        ++b;
      }
    }
    if (!entry_is_zero(acc)) out.push_back({i, std::move(acc)});
  }
  return out;
}

}  // namespace assoc
