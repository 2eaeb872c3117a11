#include "g12/category.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "g12/error.hpp"
#include "g12/hecke.hpp"

namespace g12 {

namespace {

MultVector sym_decompose_cached(unsigned n, IrrepId tau) {
  static std::map<std::pair<unsigned, int>, MultVector> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<int>(tau));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, sym_power_decompose(n, tau)).first;
  return it->second;
}

std::array<Rational, kNumIrreps> all_weights(const Rational& c) {
  std::array<Rational, kNumIrreps> h;
  for (int t = 0; t < kNumIrreps; ++t) h[t] = lowest_weight(IrrepId(t), c);
  return h;
}

// Irreps sorted by (h_c, fixed irrep order).
std::vector<IrrepId> weight_order(const Rational& c) {
  auto h = all_weights(c);
  std::vector<IrrepId> order;
  for (int t = 0; t < kNumIrreps; ++t) order.push_back(IrrepId(t));
  std::stable_sort(order.begin(), order.end(),
                   [&](IrrepId a, IrrepId b) { return h[a] < h[b]; });
  return order;
}

MultVector negate(const MultVector& v) {
  MultVector r{};
  for (int i = 0; i < kNumIrreps; ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const MultVector& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

// Power-series coefficients of 1/det_{h*}(1 - w t) per class, to `depth`.
// det_{h*}(1 - w t) = 1 - chi_{h*}(w) t + det(w) t^2, and chi_{h*} = chi_{2-},
// det = chi_{1-}.
std::vector<CycNum> molien_series(int cls, unsigned depth) {
  const GroupData& g = GroupData::instance();
  CycNum b = g.chi(kTwoMinus, cls);
  CycNum c = g.chi(kOneMinus, cls);
  std::vector<CycNum> m(depth + 1);
  m[0] = CycNum(1);
  for (unsigned j = 1; j <= depth; ++j) {
    CycNum v = b * m[j - 1];
    if (j >= 2) v -= c * m[j - 2];
    m[j] = v;
  }
  return m;
}

ClassFunction class_values(const MultVector& mult) {
  return from_multiplicities(mult);
}

}  // namespace

long CharacterSeries::dim_at(unsigned k) const {
  if (k >= terms.size()) return 0;
  long d = 0;
  for (int t = 0; t < kNumIrreps; ++t)
    d += terms[k][t] * irrep_dim(IrrepId(t));
  return d;
}

long CharacterSeries::total_dim() const {
  long d = 0;
  for (unsigned k = 0; k < terms.size(); ++k) d += dim_at(k);
  return d;
}

CharacterSeries CharacterSeries::truncated(unsigned d) const {
  CharacterSeries s = *this;
  if (s.terms.size() > d + 1) s.terms.resize(d + 1);
  return s;
}

bool operator==(const CharacterSeries& a, const CharacterSeries& b) {
  if (a.offset != b.offset) return false;
  size_t n = std::max(a.terms.size(), b.terms.size());
  for (size_t k = 0; k < n; ++k) {
    MultVector va = k < a.terms.size() ? a.terms[k] : MultVector{};
    MultVector vb = k < b.terms.size() ? b.terms[k] : MultVector{};
    if (va != vb) return false;
  }
  return true;
}

std::vector<std::vector<IrrepId>> blocks(const Rational& c) {
  auto h = all_weights(c);
  std::vector<int> block_of(kNumIrreps, -1);
  std::vector<std::vector<IrrepId>> out;
  for (int t = 0; t < kNumIrreps; ++t) {
    if (block_of[t] >= 0) continue;
    std::vector<IrrepId> blk{IrrepId(t)};
    block_of[t] = static_cast<int>(out.size());
    for (int s = t + 1; s < kNumIrreps; ++s) {
      if (block_of[s] >= 0) continue;
      if (is_integer(h[s] - h[t])) {
        block_of[s] = block_of[t];
        blk.push_back(IrrepId(s));
      }
    }
    out.push_back(std::move(blk));
  }
  return out;
}

CharacterSeries m_character(IrrepId tau, const Rational& c, unsigned depth) {
  CharacterSeries s;
  s.offset = lowest_weight(tau, c);
  for (unsigned k = 0; k <= depth; ++k)
    s.terms.push_back(sym_decompose_cached(k, tau));
  return s;
}

CharacterSeries graded_l_character(IrrepId tau, const Rational& c,
                                   unsigned depth) {
  CharacterSeries s;
  s.offset = lowest_weight(tau, c);
  StandardModule& m = standard_module(c, tau);
  for (unsigned k = 0; k <= depth; ++k) s.terms.push_back(m.l_multiplicities(k));
  return s;
}

CharacterSeries series_from_groth_row(IrrepId tau, const GrothVector& row,
                                      const Rational& c, unsigned depth) {
  auto h = all_weights(c);
  CharacterSeries s;
  s.offset = h[tau];
  s.terms.assign(depth + 1, MultVector{});
  for (int sig = 0; sig < kNumIrreps; ++sig) {
    if (row[sig] == 0) continue;
    Rational gap = h[sig] - h[tau];
    G12_CHECK(is_integer(gap) && gap >= 0,
              "Grothendieck row supported outside the positive cone");
    long g = to_long(gap);
    for (unsigned k = g; k <= depth; ++k) {
      MultVector m = sym_decompose_cached(k - g, IrrepId(sig));
      for (int t = 0; t < kNumIrreps; ++t) s.terms[k][t] += row[sig] * m[t];
    }
  }
  return s;
}

namespace {
DecompositionMatrix decomposition_matrix_uncached(const Rational& c,
                                                  unsigned depth);
}  // namespace

DecompositionMatrix decomposition_matrix(const Rational& c, unsigned depth) {
  static std::map<std::pair<std::string, unsigned>, DecompositionMatrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(to_string(c), depth);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, decomposition_matrix_uncached(c, depth)).first;
  return it->second;
}

namespace {
DecompositionMatrix decomposition_matrix_uncached(const Rational& c,
                                                  unsigned depth) {
  auto h = all_weights(c);
  DecompositionMatrix dm;
  dm.c = c;
  dm.depth = depth;
  for (auto& row : dm.n) row.fill(0);
  for (auto& row : dm.n_hat) row.fill(0);

  for (const auto& blk : blocks(c)) {
    // Depth must cover the largest weight gap inside the block.
    for (IrrepId a : blk)
      for (IrrepId b : blk)
        if (h[b] - h[a] > Rational(static_cast<long>(depth)))
          domain_fail("truncation insufficient: weight gap exceeds depth");

    std::vector<IrrepId> order = blk;
    std::stable_sort(order.begin(), order.end(),
                     [&](IrrepId a, IrrepId b) { return h[a] < h[b]; });

    std::map<int, CharacterSeries> lchar;
    for (IrrepId t : order) lchar.emplace(t, graded_l_character(t, c, depth));

    for (IrrepId tau : order) {
      dm.n_hat[tau][tau] = 1;
      // deficit[k] = multiplicities of M(tau)[h+k] - L(tau)[h+k] minus the
      // peeled contributions.
      std::vector<MultVector> deficit(depth + 1);
      const CharacterSeries& lt = lchar.at(tau);
      for (unsigned k = 0; k <= depth; ++k) {
        MultVector m = sym_decompose_cached(k, tau);
        for (int t = 0; t < kNumIrreps; ++t)
          deficit[k][t] = m[t] - lt.terms[k][t];
      }
      for (IrrepId sig : order) {
        Rational gapq = h[sig] - h[tau];
        if (!(is_integer(gapq) && gapq > 0)) continue;
        long gap = to_long(gapq);
        if (gap > static_cast<long>(depth)) continue;
        long mult = deficit[gap][sig];
        if (mult < 0)
          domain_fail("truncation insufficient or data inconsistent "
                      "(negative multiplicity while peeling)");
        dm.n_hat[tau][sig] = mult;
        if (mult == 0) continue;
        const CharacterSeries& ls = lchar.at(sig);
        for (unsigned k = gap; k <= depth; ++k)
          for (int t = 0; t < kNumIrreps; ++t)
            deficit[k][t] -= mult * ls.terms[k - gap][t];
      }
      for (unsigned k = 0; k <= depth; ++k)
        if (!is_zero(deficit[k]))
          domain_fail("truncation insufficient or data inconsistent "
                      "(residual after peeling)");
    }
  }

  // n = n_hat^{-1} by forward substitution in the weight order.
  std::vector<IrrepId> order = weight_order(c);
  for (IrrepId tau : order) {
    std::array<long, kNumIrreps> row{};
    row[tau] = 1;
    // Solve sum_mu n[tau][mu] n_hat[mu][sig] = delta_{tau,sig}.
    for (IrrepId sig : order) {
      if (sig == tau) continue;
      long acc = 0;
      for (int mu = 0; mu < kNumIrreps; ++mu) acc += row[mu] * dm.n_hat[mu][sig];
      row[sig] = -acc;
    }
    dm.n[tau] = row;
  }
  for (int a = 0; a < kNumIrreps; ++a)
    for (int b = 0; b < kNumIrreps; ++b) {
      long acc = 0;
      for (int m = 0; m < kNumIrreps; ++m) acc += dm.n[a][m] * dm.n_hat[m][b];
      G12_CHECK(acc == (a == b ? 1 : 0), "n * n_hat is not the identity");
    }
  return dm;
}
}  // namespace

std::map<IrrepId, long> finite_dimensionals(const Rational& c, unsigned depth) {
  G12_CHECK(depth >= 2, "finite_dimensionals: depth too small");
  DecompositionMatrix dm = decomposition_matrix(c, depth);
  std::map<IrrepId, long> out;
  for (int t = 0; t < kNumIrreps; ++t) {
    IrrepId tau = IrrepId(t);
    CharacterSeries l = graded_l_character(tau, c, depth);
    std::optional<unsigned> window;
    for (unsigned n0 = 0; n0 + 2 <= depth; ++n0) {
      if (is_zero(l.terms[n0]) && is_zero(l.terms[n0 + 1]) &&
          is_zero(l.terms[n0 + 2])) {
        window = n0;
        break;
      }
    }
    if (!window) continue;
    GrothVector row{};
    for (int s = 0; s < kNumIrreps; ++s) row[s] = dm.n[t][s];
    if (!in_a_nullspace(c, row))
      internal_fail(std::string("graded character of ") + irrep_label(tau) +
                    " vanishes but its row misses the A-matrix nullspace");
    out[tau] = l.total_dim();
  }
  return out;
}

TransportMap sign_flip_transport() {
  TransportMap t;
  t.kind = TransportMap::kSignFlip;
  for (int i = 0; i < kNumIrreps; ++i) t.phi[i] = tensor_sign(IrrepId(i));
  t.conjugate = false;
  return t;
}

TransportMap scaling_permutation(int d, int r) {
  if (!(d == 2 || d == 3 || d == 4 || d == 12))
    domain_fail("scaling_permutation: d must be one of 2, 3, 4, 12");
  if (r <= 0 || std::gcd(r, d) != 1)
    domain_fail("scaling_permutation: r must be positive and coprime to d");
  TransportMap t;
  t.kind = TransportMap::kScaling;
  t.d = d;
  t.r = r;
  for (int i = 0; i < kNumIrreps; ++i) t.phi[i] = IrrepId(i);
  if (d == 2) return t;  // shift-functor chain: identity permutation

  int m = std::lcm(2 * d, 8);
  // Galois element g: zeta_M -> zeta_M^k with g(zeta_d) = zeta_d^r.
  int k = -1;
  for (int cand = 1; cand < m + d; ++cand) {
    if (cand % d != r % d) continue;
    if (std::gcd(cand, m) != 1) continue;
    k = cand;
    break;
  }
  G12_CHECK(k > 0, "no valid Galois element (cannot happen for coprime r)");
  // eta = zeta_{2d}^{-r} g(zeta_{2d}) = zeta_{2d}^{k-r}, a sign.
  CycNum eta = CycNum::root_of_unity(rat(k - r, 2 * d));
  bool eta_minus;
  if (eta == CycNum(1))
    eta_minus = false;
  else if (eta == CycNum(-1))
    eta_minus = true;
  else
    internal_fail("eta is not a sign");
  // Effect of g on sqrt(-2) = zeta_8 + zeta_8^3 inside Q(zeta_M).
  CycNum s2 = (CycNum::zeta(8) + CycNum::zeta(8) * CycNum::zeta(8) *
                                     CycNum::zeta(8)).promoted(m);
  CycNum gs2 = s2.galois(k);
  bool galois_swaps;
  if (gs2 == s2)
    galois_swaps = false;
  else if (gs2 == -s2)
    galois_swaps = true;
  else
    internal_fail("Galois image of sqrt(-2) is not +-sqrt(-2)");
  if (eta_minus != galois_swaps) {  // net transposition of 2+ and 2-
    t.phi[kTwoPlus] = kTwoMinus;
    t.phi[kTwoMinus] = kTwoPlus;
    t.conjugate = true;
  }
  return t;
}

DecompositionMatrix negate_c_transport(const DecompositionMatrix& dm) {
  TransportMap t = sign_flip_transport();
  DecompositionMatrix out;
  out.c = -dm.c;
  out.depth = dm.depth;
  for (int a = 0; a < kNumIrreps; ++a)
    for (int b = 0; b < kNumIrreps; ++b) {
      out.n[t.phi[a]][t.phi[b]] = dm.n[a][b];
      out.n_hat[t.phi[a]][t.phi[b]] = dm.n_hat[a][b];
    }
  return out;
}

DecompositionMatrix scale_transport(const DecompositionMatrix& base,
                                    const TransportMap& t) {
  G12_CHECK(t.kind == TransportMap::kScaling, "scale_transport: wrong kind");
  G12_CHECK(base.c == Rational(1) / Rational(t.d),
            "scale_transport: base matrix is not at 1/d");
  DecompositionMatrix out;
  out.c = Rational(t.r) / Rational(t.d);
  out.depth = base.depth;
  for (int a = 0; a < kNumIrreps; ++a)
    for (int b = 0; b < kNumIrreps; ++b) {
      out.n[t.phi[a]][t.phi[b]] = base.n[a][b];
      out.n_hat[t.phi[a]][t.phi[b]] = base.n_hat[a][b];
    }
  return out;
}

DecompositionMatrix decomposition_matrix_anywhere(const Rational& c,
                                                  unsigned depth) {
  if (is_semisimple(c)) {
    DecompositionMatrix dm;
    dm.c = c;
    dm.depth = depth;
    for (auto& row : dm.n) row.fill(0);
    for (auto& row : dm.n_hat) row.fill(0);
    for (int i = 0; i < kNumIrreps; ++i) dm.n[i][i] = dm.n_hat[i][i] = 1;
    return dm;
  }
  Rational a = abs(c);
  long r = to_long(Rational(a.get_num()));
  long d = to_long(Rational(a.get_den()));
  G12_CHECK(d == 2 || d == 3 || d == 4 || d == 12,
            "non-semisimple parameter with unexpected denominator");
  DecompositionMatrix dm = decomposition_matrix(Rational(1) / Rational(d), depth);
  if (r != 1)
    dm = scale_transport(dm, scaling_permutation(static_cast<int>(d),
                                                 static_cast<int>(r)));
  if (c < 0) dm = negate_c_transport(dm);
  return dm;
}

CharacterSeries transport_character(const CharacterSeries& base, int d, int r,
                                    unsigned depth) {
  TransportMap t = scaling_permutation(d, r);
  const GroupData& g = GroupData::instance();
  unsigned need_n = depth / r;
  G12_CHECK(base.depth() >= need_n || base.terms.size() > need_n,
            "transport_character: base series too shallow");

  CharacterSeries out;
  out.offset = Rational(r) * base.offset + Rational(1 - r);
  out.terms.assign(depth + 1, MultVector{});

  // Numerator det_{phi(h*)}(1 - w t^r): h* is 2-, so phi(h*) is 2- or 2+.
  IrrepId phi_hstar = t.phi[kTwoMinus];

  std::vector<ClassFunction> scratch(depth + 1);
  for (int cls = 0; cls < kNumClasses; ++cls) {
    std::vector<CycNum> molien = molien_series(cls, depth);
    CycNum chi_num = g.chi(phi_hstar, cls);
    CycNum det_num = g.chi(kOneMinus, cls);
    for (unsigned n = 0; n <= need_n && n < base.terms.size(); ++n) {
      CycNum a = class_values(base.terms[n]).v[cls];
      if (t.conjugate) a = a.conj();
      if (a.is_zero()) continue;
      // a * t^{rn} * (1 - chi t^r + det t^{2r}) * Molien(t)
      for (int part = 0; part < 3; ++part) {
        long shift = static_cast<long>(r) * n + part * r;
        if (shift > static_cast<long>(depth)) break;
        CycNum coef = a;
        if (part == 1) coef = -(coef * chi_num);
        if (part == 2) coef *= det_num;
        if (coef.is_zero()) continue;
        for (unsigned mdeg = 0; mdeg + shift <= depth; ++mdeg)
          scratch[mdeg + shift].v[cls] += coef * molien[mdeg];
      }
    }
  }
  for (unsigned k = 0; k <= depth; ++k) out.terms[k] = decompose(scratch[k]);
  return out;
}

CharacterSeries rational_character_series(
    const std::vector<std::pair<IrrepId, Rational>>& numerator_terms,
    bool det_on_h, int r, unsigned depth) {
  G12_CHECK(!numerator_terms.empty(), "empty character formula");
  const GroupData& g = GroupData::instance();
  Rational lowest = numerator_terms[0].second;
  for (const auto& [sig, e] : numerator_terms) lowest = std::min(lowest, e);

  CharacterSeries out;
  out.offset = lowest;
  out.terms.assign(depth + 1, MultVector{});
  IrrepId chi_side = det_on_h ? kTwoPlus : kTwoMinus;

  std::vector<ClassFunction> scratch(depth + 1);
  for (int cls = 0; cls < kNumClasses; ++cls) {
    std::vector<CycNum> molien = molien_series(cls, depth);
    CycNum chi_num = g.chi(chi_side, cls);
    CycNum det_num = g.chi(kOneMinus, cls);
    for (const auto& [sig, e] : numerator_terms) {
      Rational rel = e - lowest;
      G12_CHECK(is_integer(rel), "formula weights differ non-integrally");
      long base_shift = to_long(rel);
      CycNum a = g.chi(sig, cls);
      for (int part = 0; part < 3; ++part) {
        long shift = base_shift + static_cast<long>(part) * r;
        if (shift > static_cast<long>(depth)) break;
        CycNum coef = a;
        if (part == 1) coef = -(coef * chi_num);
        if (part == 2) coef *= det_num;
        if (coef.is_zero()) continue;
        for (unsigned mdeg = 0; mdeg + shift <= depth; ++mdeg)
          scratch[mdeg + shift].v[cls] += coef * molien[mdeg];
      }
    }
  }
  for (unsigned k = 0; k <= depth; ++k) out.terms[k] = decompose(scratch[k]);
  return out;
}

bool is_aspherical(const Rational& c, unsigned series_depth) {
  DecompositionMatrix dm = decomposition_matrix_anywhere(c, 12);
  auto h = all_weights(c);
  for (int t = 0; t < kNumIrreps; ++t) {
    bool invariant_found = false;
    for (unsigned k = 0; k <= series_depth && !invariant_found; ++k) {
      long mult = 0;
      for (int sig = 0; sig < kNumIrreps; ++sig) {
        if (dm.n[t][sig] == 0) continue;
        Rational gap = h[sig] - h[t];
        G12_CHECK(is_integer(gap) && gap >= 0, "bad decomposition row");
        long gv = to_long(gap);
        if (static_cast<long>(k) < gv) continue;
        mult += dm.n[t][sig] *
                sym_decompose_cached(k - gv, IrrepId(sig))[kOnePlus];
      }
      G12_CHECK(mult >= 0, "negative trivial-isotypic multiplicity");
      if (mult > 0) invariant_found = true;
    }
    if (!invariant_found) return true;
  }
  return false;
}

std::set<Rational> aspherical_scan(const std::vector<Rational>& candidates,
                                   unsigned series_depth) {
  std::set<Rational> out;
  for (const Rational& c : candidates)
    if (is_aspherical(c, series_depth)) out.insert(c);
  return out;
}

InductionReport induction_check(const Rational& c, unsigned depth) {
  InductionReport rep;
  GrothVector ind_plus = induce_from_parabolic(false);
  GrothVector ind_minus = induce_from_parabolic(true);
  // At the order-2 parabolic, M(eps+) has a singular vector exactly in
  // degree 2c when that is a positive odd integer; then L(eps+) =
  // M(eps+) - M(eps-), otherwise M(eps+) is simple.
  Rational twoc = c * 2;
  bool subtract = is_integer(twoc) && twoc > 0 && (to_long(twoc) % 2 == 1);
  for (int i = 0; i < kNumIrreps; ++i)
    rep.m_coeffs[i] = ind_plus[i] - (subtract ? ind_minus[i] : 0);
  DecompositionMatrix dm = decomposition_matrix_anywhere(c, depth);
  for (int sig = 0; sig < kNumIrreps; ++sig) {
    long acc = 0;
    for (int tau = 0; tau < kNumIrreps; ++tau)
      acc += rep.m_coeffs[tau] * dm.n_hat[tau][sig];
    rep.l_coeffs[sig] = acc;
    if (acc < 0) rep.nonnegative = false;
  }
  return rep;
}

}  // namespace g12
