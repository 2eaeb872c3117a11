// Cyclotomic field arithmetic: elements of Q(zeta_N) in the power basis
// modulo the N-th cyclotomic polynomial. Elements of different conductors
// combine by embedding both into Q(zeta_lcm).
#pragma once

#include <vector>

#include "g12/rational.hpp"

namespace g12 {

// Dense coefficients of Phi_n, constant term first; computed by dividing
// x^n - 1 by the product of Phi_d over proper divisors d, and cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

class CycNum {
 public:
  CycNum() : n_(1), c_(1, Rational(0)) {}
  CycNum(const Rational& r) : n_(1), c_(1, r) {}
  CycNum(long v) : n_(1), c_(1, rat(v)) {}

  // Primitive n-th root of unity zeta_n.
  static CycNum zeta(unsigned n);
  // e^{2 pi i a} for rational a, living in Q(zeta_denominator(a)).
  static CycNum root_of_unity(const Rational& a);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  // The power-basis representation is unique, so rationality is just
  // vanishing of the non-constant coefficients.
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // Embedding into Q(zeta_m); m must be a multiple of the conductor.
  CycNum promoted(unsigned m) const;

  // Field automorphism zeta_N -> zeta_N^k; rejects k not coprime to N.
  CycNum galois(long k) const;
  CycNum conj() const;  // galois(N-1)

  CycNum inverse() const;  // requires nonzero

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string str() const;

 private:
  CycNum(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void shrink();  // drop to conductor 1 when the value is rational

  unsigned n_;               // conductor
  std::vector<Rational> c_;  // deg Phi_n coefficients in the power basis
};

inline CycNum root_of_unity(const Rational& a) { return CycNum::root_of_unity(a); }
inline CycNum galois_apply(long k, const CycNum& x) { return x.galois(k); }

}  // namespace g12
