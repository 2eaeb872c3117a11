// Test-only oracles, independent of the library's computation paths.
#pragma once

#include <vector>

#include "g12/rational.hpp"

namespace g12::testing {

// Fraction-free (Bareiss) elimination rank over the rationals, after
// clearing denominators row by row. Independent of ExactMatrix::rank.
inline size_t bareiss_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  // Clear denominators per row; scaling rows does not change the rank.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (size_t i = 0; i < rows; ++i) {
    Integer den(1);
    for (const Rational& q : m[i]) den = lcm(den, q.get_den());
    for (size_t j = 0; j < cols; ++j) {
      Rational scaled = m[i][j] * Rational(den);
      a[i][j] = scaled.get_num();
    }
  }
  Integer prev(1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        Integer v = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        a[i][j] = v / prev;  // exact by the Bareiss identity
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Deterministic pseudo-random small rationals for property sampling.
struct Rng {
  unsigned long state;
  explicit Rng(unsigned long seed) : state(seed) {}
  unsigned long next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long next_int(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<unsigned long>(hi - lo + 1));
  }
  Rational next_rational() {
    long num = next_int(-9, 9);
    long den = next_int(1, 7);
    return rat(num, den);
  }
};

}  // namespace g12::testing
