#include "g12/char_ops.hpp"

#include <mutex>
#include <vector>

#include "g12/error.hpp"

namespace g12 {

ClassFunction ClassFunction::of_irrep(IrrepId t) {
  ClassFunction f;
  f.v = GroupData::instance().irrep(t).chi;
  return f;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  for (int k = 0; k < kNumClasses; ++k) v[k] += o.v[k];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  for (int k = 0; k < kNumClasses; ++k) v[k] -= o.v[k];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r;
  for (int k = 0; k < kNumClasses; ++k) r.v[k] = a.v[k] * b.v[k];
  return r;
}

ClassFunction ClassFunction::scaled(long m) const {
  ClassFunction r;
  for (int k = 0; k < kNumClasses; ++k) r.v[k] = v[k] * CycNum(m);
  return r;
}

bool ClassFunction::is_zero() const {
  for (const CycNum& x : v)
    if (!x.is_zero()) return false;
  return true;
}

CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& classes = GroupData::instance().classes();
  CycNum sum;
  for (int k = 0; k < kNumClasses; ++k)
    sum += CycNum(classes[k].size) * a.v[k] * b.v[k].conj();
  return sum / CycNum(kGroupOrder);
}

MultVector decompose(const ClassFunction& chi) {
  MultVector m{};
  for (int t = 0; t < kNumIrreps; ++t) {
    CycNum ip = inner_product(chi, ClassFunction::of_irrep(IrrepId(t)));
    if (!ip.is_rational())
      domain_fail("decompose: non-rational multiplicity (not a character)");
    Rational q = ip.rational_value();
    if (!is_integer(q) || q < 0)
      domain_fail("decompose: multiplicity of " +
                  std::string(irrep_label(IrrepId(t))) + " is " + to_string(q) +
                  " (not a character of a representation)");
    m[t] = to_long(q);
  }
  return m;
}

ClassFunction from_multiplicities(const MultVector& m) {
  ClassFunction f;
  for (int t = 0; t < kNumIrreps; ++t)
    if (m[t] != 0) f += ClassFunction::of_irrep(IrrepId(t)).scaled(m[t]);
  return f;
}

ClassFunction sym_power_character(unsigned n) {
  static std::vector<ClassFunction> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto& classes = GroupData::instance().classes();
  while (cache.size() <= n) {
    unsigned d = cache.size();
    ClassFunction f;
    for (int k = 0; k < kNumClasses; ++k) {
      // sum over i+j=d of mu1^i mu2^j for h*-eigenvalues mu1, mu2
      CycNum sum;
      for (unsigned i = 0; i <= d; ++i) {
        UnityRoot u = classes[k].eig_hstar[0].pow(rat(i)) *
                      classes[k].eig_hstar[1].pow(rat(d - i));
        sum += u.embed();
      }
      f.v[k] = sum;
    }
    cache.push_back(std::move(f));
  }
  return cache[n];
}

MultVector sym_power_decompose(unsigned n, IrrepId tau) {
  return decompose(sym_power_character(n) * ClassFunction::of_irrep(tau));
}

std::pair<long, long> restrict_to_parabolic(IrrepId tau) {
  const GroupData& g = GroupData::instance();
  long d = irrep_dim(tau);
  long chi_e = to_long(g.chi(tau, 2).rational_value());
  G12_CHECK((d + chi_e) % 2 == 0, "parabolic restriction parity");
  return {(d + chi_e) / 2, (d - chi_e) / 2};
}

GrothVector induce_from_parabolic(bool sign) {
  GrothVector v{};
  for (int t = 0; t < kNumIrreps; ++t) {
    auto [mp, mm] = restrict_to_parabolic(IrrepId(t));
    v[t] = sign ? mm : mp;
  }
  return v;
}

}  // namespace g12
