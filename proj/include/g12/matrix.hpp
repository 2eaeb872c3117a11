// Dense exact matrices over cyclotomic scalars: rank, reduced echelon form
// and nullspace by plain Gaussian elimination with first-nonzero pivoting.
#pragma once

#include <vector>

#include "g12/cyclotomic.hpp"

namespace g12 {

using CycVec = std::vector<CycNum>;

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  CycNum& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const CycNum& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  ExactMatrix transposed() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const CycNum& s) const;
  CycVec apply(const CycVec& v) const;  // matrix * column vector

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  size_t rank() const;
  // Reduced row echelon form; pivot columns reported if requested.
  ExactMatrix rref(std::vector<size_t>* pivot_cols = nullptr) const;
  // Right nullspace basis in the standard echelon convention: each vector
  // has a 1 in "its" free column and 0 in the other free columns. Every
  // returned vector is verified to satisfy M v = 0.
  std::vector<CycVec> nullspace(std::vector<size_t>* free_cols = nullptr) const;

  bool is_zero() const;

 private:
  size_t rows_, cols_;
  std::vector<CycNum> a_;
};

// Does `row` lie in the row space of `basis` (given as a list of vectors)?
bool in_row_span(const std::vector<CycVec>& basis, const CycVec& row);

// Do two lists of vectors span the same subspace?
bool same_span(const std::vector<CycVec>& a, const std::vector<CycVec>& b);

}  // namespace g12
