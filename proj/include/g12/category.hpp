// Category O orchestration: blocks by lowest weights, graded characters of
// simples from isotypic form ranks, decomposition matrices in both
// directions, finite-dimensionality and dimensions, and the parameter
// transports (sign flip, scaling permutation, character transport,
// aspherical scan).
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "g12/amatrix.hpp"
#include "g12/char_ops.hpp"
#include "g12/cherednik.hpp"

namespace g12 {

// Truncated h-weight-graded W-character: terms[k] holds the irrep
// multiplicities of the weight-(offset+k) space.
struct CharacterSeries {
  Rational offset;
  std::vector<MultVector> terms;

  unsigned depth() const {
    return terms.empty() ? 0 : static_cast<unsigned>(terms.size() - 1);
  }
  long dim_at(unsigned k) const;
  long total_dim() const;
  CharacterSeries truncated(unsigned d) const;
  friend bool operator==(const CharacterSeries& a, const CharacterSeries& b);
};

// Partition of Irr(W): tau, sigma share a block iff h_c differ by an integer.
// Blocks are sorted by their first member in the fixed irrep order.
std::vector<std::vector<IrrepId>> blocks(const Rational& c);

CharacterSeries m_character(IrrepId tau, const Rational& c, unsigned depth);
CharacterSeries graded_l_character(IrrepId tau, const Rational& c,
                                   unsigned depth);

// Character series of sum_sigma row[sigma] [M_c(sigma)] anchored at
// h_c(tau); rows supported outside integer gaps >= 0 are rejected.
CharacterSeries series_from_groth_row(IrrepId tau, const GrothVector& row,
                                      const Rational& c, unsigned depth);

using IntMatrix = std::array<std::array<long, kNumIrreps>, kNumIrreps>;

struct DecompositionMatrix {
  Rational c;
  unsigned depth;
  IntMatrix n;      // [L_c(tau)] = sum_sigma n[tau][sigma] [M_c(sigma)]
  IntMatrix n_hat;  // [M_c(tau)] = sum_sigma n_hat[tau][sigma] [L_c(sigma)]
};

// Greedy weight-by-weight peeling per block, in increasing h_c order.
// Computed from isotypic form ranks; depth must cover every integer weight
// gap inside a block.
DecompositionMatrix decomposition_matrix(const Rational& c, unsigned depth = 12);

// tau -> dimension for the finite-dimensional simples: the graded character
// must vanish on a three-degree window and the n-row must lie in the
// nullspace of the finiteness-test matrix.
std::map<IrrepId, long> finite_dimensionals(const Rational& c,
                                            unsigned depth = 12);

struct TransportMap {
  enum Kind { kSignFlip, kScaling };
  Kind kind = kScaling;
  int d = 0, r = 0;
  std::array<IrrepId, kNumIrreps> phi{};  // permutation of Irr(W)
  bool conjugate = false;                 // gamma: complex conjugation
};

TransportMap sign_flip_transport();

// The permutation realizing O_{1/d} -> O_{r/d}; d in {2,3,4,12}, r > 0
// coprime to d. For d != 2 it is computed by the Galois recipe
// (eta = zeta_{2d}^{k-r} together with the action on sqrt(-2)); d = 2 comes
// from the shift-functor chain and is the identity.
TransportMap scaling_permutation(int d, int r);

// O_c -> O_{-c}: conjugate both matrices by tau -> 1- (x) tau.
DecompositionMatrix negate_c_transport(const DecompositionMatrix& dm);

// O_{1/d} -> O_{r/d}: relabel both matrices along phi.
DecompositionMatrix scale_transport(const DecompositionMatrix& base,
                                    const TransportMap& t);

// Decomposition matrix at any rational c, routed through the base values
// 1/d and the transports; semisimple c yields the identity.
DecompositionMatrix decomposition_matrix_anywhere(const Rational& c,
                                                  unsigned depth = 12);

// Series of L_{r/d}(phi tau) from the series of L_{1/d}(tau):
// substitute t -> t^r, apply gamma, multiply by
// det_{phi(h*)}(1 - w t^r) / det_{h*}(1 - w t) * t^{1-r}.
CharacterSeries transport_character(const CharacterSeries& base, int d, int r,
                                    unsigned depth);

// Character series from a list of numerator terms chi_sigma * t^exponent
// over the Molien denominator det_{h*}(1 - w t), with the numerator twist
// det(1 - w t^r) taken on h* or on h:
//   ch(t, w) = det_side(1 - w t^r)/det_{h*}(1 - w t) * sum chi(w) t^e.
CharacterSeries rational_character_series(
    const std::vector<std::pair<IrrepId, Rational>>& numerator_terms,
    bool det_on_h, int r, unsigned depth);

// Is some L_c(tau) without any W-invariant vector? Decided exactly from the
// Grothendieck data: the trivial-isotypic Hilbert series is a rational
// function whose numerator degree is bounded by the weight spread plus the
// coinvariant top degree, so vanishing through `series_depth` terms decides
// vanishing outright for the candidates we scan.
bool is_aspherical(const Rational& c, unsigned series_depth = 48);

std::set<Rational> aspherical_scan(const std::vector<Rational>& candidates,
                                   unsigned series_depth = 48);

struct InductionReport {
  GrothVector m_coeffs;  // Ind_a L_c(eps+) in the M basis
  GrothVector l_coeffs;  // the same in the L basis
  bool nonnegative = true;
};

// Re-expresses the induced simple from the order-2 parabolic in the L basis
// and checks that every coefficient is a non-negative integer.
InductionReport induction_check(const Rational& c, unsigned depth = 12);

}  // namespace g12
