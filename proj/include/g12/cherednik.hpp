// Standard modules M_c(tau) realized degree by degree as S^n h* (x) tau,
// Dunkl operator action, the contravariant form B_n as an exact matrix,
// full and isotypic ranks, and singular-vector detection.
//
// Conventions. Degree-n basis vectors are indexed mono*dim+vec where mono j
// stands for x1^{n-j} x2^j (y1^{n-j} y2^j on the dual side). The form B_n
// pairs S^n h* (x) tau against S^n h (x) tau*; B_0 is the identity in dual
// bases and B_{n+1}(u, y v) = B_n(D_y u, v). The dual module carries the
// same parameter since every reflection of G12 is an involution.
#pragma once

#include <array>
#include <deque>
#include <memory>
#include <vector>

#include "g12/char_ops.hpp"
#include "g12/group.hpp"
#include "g12/matrix.hpp"

namespace g12 {

struct ModuleContext {
  Rational c;
  IrrepId tau;
};

// h_c(tau) = 1 - c * (scalar of sum_s s on tau).
Rational lowest_weight(IrrepId tau, const Rational& c);

struct PolyVec {
  unsigned degree = 0;
  IrrepId tau = kOnePlus;
  CycVec coords;  // size (degree+1) * dim tau
};

// Symmetric power of a 2x2 matrix acting on degree-n polynomials in the
// monomial basis above; cached per (element, side, degree).
const ExactMatrix& sym_power_action(int element, bool dual_side, unsigned n);

class StandardModule {
 public:
  StandardModule(const Rational& c, IrrepId tau);

  const Rational& c() const { return c_; }
  IrrepId tau() const { return tau_; }
  int dim_tau() const { return dim_; }
  Rational h_weight() const;  // lowest h-weight h_c(tau)
  unsigned dim_at(unsigned n) const { return (n + 1) * dim_; }

  // Dunkl operator D_{y_i}, i in {0,1}, as a matrix from degree n >= 1 to
  // degree n-1.
  const ExactMatrix& dunkl_matrix(unsigned n, int i);
  PolyVec dunkl_apply(int i, const PolyVec& u);

  // Contravariant form at degree n; degrees are filled in increasing order
  // and cached.
  const ExactMatrix& b_matrix(unsigned n);
  unsigned b_rank(unsigned n);
  // Rank of B_n restricted to the sigma-isotypic component; a multiple of
  // dim sigma.
  unsigned b_rank_isotypic(unsigned n, IrrepId sigma);
  // Multiplicity of each sigma in L_c(tau)[h_c(tau)+n].
  MultVector l_multiplicities(unsigned n);

  // W-character of the joint kernel of both Dunkl operators in degree n>=1.
  ClassFunction singular_character(unsigned n);

  // W action on S^n h* (x) tau (x-side) and on S^n h (x) tau* (y-side).
  ExactMatrix group_action(unsigned n, int element) const;
  ExactMatrix dual_group_action(unsigned n, int element) const;

  // Multiplication by x_i (x-side) and y_i (y-side): degree n -> n+1.
  ExactMatrix x_mult(unsigned n, int i) const;
  ExactMatrix y_mult(unsigned n, int i) const;
  // Dunkl operator of the dual module, for contravariance checks.
  ExactMatrix dual_dunkl_matrix(unsigned n, int i) const;

 private:
  void ensure_b(unsigned n);

  Rational c_;
  IrrepId tau_;
  int dim_;
  // deques: returned references stay valid while higher degrees are filled
  std::deque<ExactMatrix> b_;  // b_[n] = B_n
  std::deque<std::array<ExactMatrix, 2>> dunkl_;  // dunkl_[n] = D at degree n
  std::vector<MultVector> lmult_;                 // cached l_multiplicities
};

// Process-wide memoized modules, one per (c, tau).
StandardModule& standard_module(const Rational& c, IrrepId tau);

}  // namespace g12
