// Roots of unity as exponents: e^{2 pi i a} with a rational, reduced mod 1.
// Raising to a rational power multiplies exponents; this IS the branch
// convention used everywhere (the y = xi^c convention).
#pragma once

#include "g12/cyclotomic.hpp"
#include "g12/rational.hpp"

namespace g12 {

struct UnityRoot {
  Rational exponent;  // in [0, 1)

  UnityRoot() : exponent(0) {}
  explicit UnityRoot(const Rational& a) : exponent(mod1(a)) {}

  friend UnityRoot operator*(const UnityRoot& a, const UnityRoot& b) {
    return UnityRoot(a.exponent + b.exponent);
  }
  UnityRoot inverse() const { return UnityRoot(-exponent); }
  UnityRoot pow(const Rational& h) const { return UnityRoot(exponent * h); }

  CycNum embed() const { return CycNum::root_of_unity(exponent); }

  friend bool operator==(const UnityRoot& a, const UnityRoot& b) {
    return a.exponent == b.exponent;
  }
  friend bool operator<(const UnityRoot& a, const UnityRoot& b) {
    return a.exponent < b.exponent;
  }
};

}  // namespace g12
