#include "g12/amatrix.hpp"

#include <algorithm>

#include "g12/cherednik.hpp"
#include "g12/error.hpp"

namespace g12 {

AMatrix build_a_matrix(const Rational& c) {
  const GroupData& g = GroupData::instance();
  AMatrix a;
  a.c = c;
  // The roots of det_{h*}(1 - g t) are the eigenvalues of g on h.
  for (int k = 0; k < kNumClasses; ++k) {
    auto eig = g.classes()[k].eig_h;
    std::sort(eig.begin(), eig.end());
    for (const UnityRoot& t : eig) a.rows.push_back({k, t});
  }
  a.entries = ExactMatrix(a.rows.size(), kNumIrreps);
  for (size_t r = 0; r < a.rows.size(); ++r) {
    for (int s = 0; s < kNumIrreps; ++s) {
      IrrepId sigma = IrrepId(s);
      Rational h = lowest_weight(sigma, c);
      CycNum val = a.rows[r].t.pow(h).embed() * g.chi(sigma, a.rows[r].conj_class);
      a.entries.at(r, s) = val;
    }
  }
  return a;
}

ANullspace a_nullspace(const Rational& c) {
  AMatrix a = build_a_matrix(c);
  ANullspace ns;
  ns.raw_basis = a.entries.nullspace();
  for (const CycVec& v : ns.raw_basis) {
    bool rational = true;
    for (const CycNum& x : v)
      if (!x.is_rational()) rational = false;
    if (!rational) {
      ns.rational = false;
      continue;
    }
    Integer den(1), num_gcd(0);
    for (const CycNum& x : v) den = lcm(den, x.rational_value().get_den());
    std::vector<Integer> scaled;
    for (const CycNum& x : v) {
      Rational q = x.rational_value() * Rational(den);
      scaled.push_back(q.get_num());
      num_gcd = gcd(num_gcd, q.get_num());
    }
    if (num_gcd == 0) num_gcd = 1;
    // Primitive vector, first nonzero entry positive.
    int lead_sign = 0;
    for (const Integer& z : scaled)
      if (z != 0) { lead_sign = z > 0 ? 1 : -1; break; }
    if (lead_sign == 0) lead_sign = 1;
    std::vector<long> out;
    for (const Integer& z : scaled) {
      Integer q = z / num_gcd * lead_sign;
      G12_CHECK(q.fits_slong_p(), "nullspace entry out of long range");
      out.push_back(q.get_si());
    }
    ns.integer_basis.push_back(std::move(out));
  }
  return ns;
}

bool in_a_nullspace(const Rational& c, const GrothVector& v) {
  ANullspace ns = a_nullspace(c);
  CycVec row(kNumIrreps);
  for (int i = 0; i < kNumIrreps; ++i) row[i] = CycNum(v[i]);
  return in_row_span(ns.raw_basis, row);
}

}  // namespace g12
