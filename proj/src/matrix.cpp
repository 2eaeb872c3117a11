#include "g12/matrix.hpp"

#include "g12/error.hpp"

namespace g12 {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  G12_CHECK(a.cols_ == b.rows_, "matrix product shape mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const CycNum& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  G12_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape");
  ExactMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  G12_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix diff shape");
  ExactMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const CycNum& s) const {
  ExactMatrix r = *this;
  for (CycNum& v : r.a_) v *= s;
  return r;
}

CycVec ExactMatrix::apply(const CycVec& v) const {
  G12_CHECK(v.size() == cols_, "apply: size mismatch");
  CycVec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const CycNum& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::rref(std::vector<size_t>* pivot_cols) const {
  ExactMatrix m = *this;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t p = row;
    while (p < rows_ && m.at(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(row, j));
    CycNum inv = m.at(row, col).inverse();
    for (size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col);
      for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return m;
}

size_t ExactMatrix::rank() const {
  // Forward elimination only; no need for the reduced form.
  ExactMatrix m = *this;
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t p = rank;
    while (p < rows_ && m.at(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != rank)
      for (size_t j = col; j < cols_; ++j) std::swap(m.at(p, j), m.at(rank, j));
    CycNum inv = m.at(rank, col).inverse();
    for (size_t i = rank + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col) * inv;
      for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<CycVec> ExactMatrix::nullspace(std::vector<size_t>* free_cols) const {
  std::vector<size_t> pivots;
  ExactMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<CycVec> basis;
  if (free_cols) free_cols->clear();
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    CycVec v(cols_);
    v[free] = CycNum(1);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
    for (const CycNum& x : apply(v))
      G12_CHECK(x.is_zero(), "nullspace vector fails M v = 0");
    basis.push_back(std::move(v));
    if (free_cols) free_cols->push_back(free);
  }
  G12_CHECK(pivots.size() + basis.size() == cols_, "rank-nullity violated");
  return basis;
}

namespace {
ExactMatrix stack_rows(const std::vector<CycVec>& rows, size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    G12_CHECK(rows[i].size() == cols, "stack_rows: ragged input");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}
}  // namespace

bool in_row_span(const std::vector<CycVec>& basis, const CycVec& row) {
  if (basis.empty()) {
    for (const CycNum& v : row)
      if (!v.is_zero()) return false;
    return true;
  }
  size_t cols = basis[0].size();
  ExactMatrix a = stack_rows(basis, cols);
  std::vector<CycVec> with = basis;
  with.push_back(row);
  ExactMatrix b = stack_rows(with, cols);
  return a.rank() == b.rank();
}

bool same_span(const std::vector<CycVec>& a, const std::vector<CycVec>& b) {
  if (a.empty() && b.empty()) return true;
  size_t cols = a.empty() ? b[0].size() : a[0].size();
  ExactMatrix ma = stack_rows(a, cols);
  ExactMatrix mb = stack_rows(b, cols);
  std::vector<CycVec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  ExactMatrix mab = stack_rows(both, cols);
  size_t ra = ma.rank();
  return ra == mb.rank() && ra == mab.rank();
}

}  // namespace g12
