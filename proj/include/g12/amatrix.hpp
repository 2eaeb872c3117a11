// The 16x8 finiteness-test matrix: rows are indexed by (conjugacy class,
// eigenvalue) pairs, columns by Irr(W); the entry is t^{h_c(sigma)}
// chi_sigma(g), where t runs over the roots of det_{h*}(1 - g t). The
// coefficient vector of any finite-dimensional simple lies in its nullspace.
#pragma once

#include <vector>

#include "g12/char_ops.hpp"
#include "g12/matrix.hpp"
#include "g12/unity_root.hpp"

namespace g12 {

struct AMatrixRow {
  int conj_class;  // canonical class index
  UnityRoot t;     // the root of det_{h*}(1 - g t) this row evaluates at
};

struct AMatrix {
  Rational c;
  std::vector<AMatrixRow> rows;  // ordered by (class index, exponent)
  ExactMatrix entries;           // 16 x 8
};

AMatrix build_a_matrix(const Rational& c);

// Primitive integer basis of the right nullspace when the space is
// rational (it is at every parameter we touch); general vectors otherwise.
struct ANullspace {
  std::vector<std::vector<long>> integer_basis;  // primitive integer vectors
  std::vector<CycVec> raw_basis;                 // reduced echelon basis
  bool rational = true;
};

ANullspace a_nullspace(const Rational& c);

// Is the integer vector v in the span of the nullspace?
bool in_a_nullspace(const Rational& c, const GrothVector& v);

}  // namespace g12
