// Class-function calculus for G12: inner products, decomposition into
// irreducibles, symmetric-power characters on h*, and branching/induction
// for the order-2 parabolic subgroup.
#pragma once

#include <array>

#include "g12/group.hpp"

namespace g12 {

struct ClassFunction {
  std::array<CycNum, kNumClasses> v{};

  ClassFunction() = default;
  static ClassFunction of_irrep(IrrepId t);

  CycNum& operator[](int k) { return v[k]; }
  const CycNum& operator[](int k) const { return v[k]; }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
    return a += b;
  }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
    return a -= b;
  }
  friend ClassFunction operator*(const ClassFunction& a,
                                 const ClassFunction& b);  // pointwise
  ClassFunction scaled(long m) const;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.v == b.v;
  }
  bool is_zero() const;

  // Dimension of the underlying space: the value on the identity class.
  Rational dim() const { return v[0].rational_value(); }
};

// <a, b> = (1/48) sum_C |C| a(C) conj(b(C)).
CycNum inner_product(const ClassFunction& a, const ClassFunction& b);

using MultVector = std::array<long, kNumIrreps>;

// Multiplicities of each irreducible in a genuine character; rejects
// non-integer or negative multiplicities.
MultVector decompose(const ClassFunction& chi);

ClassFunction from_multiplicities(const MultVector& m);

// Character of S^n h* (eigenvalue sums over each class).
ClassFunction sym_power_character(unsigned n);

// Decomposition of S^n h* (x) tau.
MultVector sym_power_decompose(unsigned n, IrrepId tau);

// Multiplicities (m+, m-) of the trivial/sign characters of the order-2
// parabolic <e> in tau restricted: (dim tau +- chi_tau(e)) / 2.
std::pair<long, long> restrict_to_parabolic(IrrepId tau);

// Integer vectors over Irr(W) in the fixed order.
using GrothVector = std::array<long, kNumIrreps>;

// Grothendieck image of Ind_a M(eps) in the M-basis (Frobenius reciprocity).
GrothVector induce_from_parabolic(bool sign);

}  // namespace g12
