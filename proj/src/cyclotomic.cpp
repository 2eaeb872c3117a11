#include "g12/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "g12/error.hpp"

namespace g12 {

namespace {

// z-polynomial helpers, dense, constant term first.

std::vector<Integer> zpoly_mul(const std::vector<Integer>& a,
                               const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division of integer polynomials; remainder must vanish.
std::vector<Integer> zpoly_div_exact(std::vector<Integer> num,
                                     const std::vector<Integer>& den) {
  G12_CHECK(!den.empty() && den.back() != 0, "division by zero polynomial");
  G12_CHECK(num.size() >= den.size(), "degree mismatch in exact division");
  std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
  for (size_t k = q.size(); k-- > 0;) {
    Integer lead = num[k + den.size() - 1];
    G12_CHECK(lead % den.back() == 0, "inexact polynomial division");
    q[k] = lead / den.back();
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  for (const Integer& v : num) G12_CHECK(v == 0, "nonzero remainder");
  return q;
}

// Remainder of a rational-coefficient polynomial modulo a monic integer
// polynomial, in place.
void qpoly_mod(std::vector<Rational>& p, const std::vector<Integer>& m) {
  size_t dm = m.size() - 1;
  G12_CHECK(m.back() == 1, "modulus must be monic");
  while (p.size() > dm) {
    Rational lead = p.back();
    p.pop_back();
    if (lead != 0) {
      size_t off = p.size() - dm;
      for (size_t j = 0; j < dm; ++j) p[off + j] -= lead * Rational(m[j]);
    }
  }
  p.resize(dm, Rational(0));
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  G12_CHECK(n >= 1, "cyclotomic_polynomial: n must be positive");
  static std::map<unsigned, std::vector<Integer>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<Integer>&(unsigned)> get =
      [&](unsigned k) -> const std::vector<Integer>& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    std::vector<Integer> num(k + 1, Integer(0));  // x^k - 1
    num[0] = -1;
    num[k] = 1;
    std::vector<Integer> den{Integer(1)};
    for (unsigned d : divisors(k))
      if (d < k) den = zpoly_mul(den, get(d));
    return cache.emplace(k, zpoly_div_exact(std::move(num), den)).first->second;
  };
  return get(n);
}

CycNum CycNum::zeta(unsigned n) {
  G12_CHECK(n >= 1, "zeta: conductor must be positive");
  const auto& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;
  std::vector<Rational> c(std::max<size_t>(deg, 2), Rational(0));
  c[1] = 1;  // the polynomial "x"
  qpoly_mod(c, phi);
  CycNum z(n, std::move(c));
  z.shrink();
  return z;
}

CycNum CycNum::root_of_unity(const Rational& a) {
  Rational e = mod1(a);
  unsigned q = static_cast<unsigned>(e.get_den().get_ui());
  unsigned long p = e.get_num().get_ui();
  const auto& phi = cyclotomic_polynomial(q);
  size_t deg = phi.size() - 1;
  std::vector<Rational> c(std::max<size_t>(p + 1, deg), Rational(0));
  c[p] = 1;  // the polynomial x^p
  qpoly_mod(c, phi);
  CycNum z(q, std::move(c));
  z.shrink();
  return z;
}

bool CycNum::is_zero() const {
  for (const Rational& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  G12_CHECK(is_rational(), "rational_value: " + str() + " is irrational");
  return c_[0];
}

void CycNum::shrink() {
  if (n_ > 1 && is_rational()) {
    Rational v = c_[0];
    n_ = 1;
    c_.assign(1, v);
  }
}

CycNum CycNum::promoted(unsigned m) const {
  if (m == n_) return *this;
  G12_CHECK(m % n_ == 0, "promoted: conductor must divide target");
  unsigned step = m / n_;
  const auto& phi = cyclotomic_polynomial(m);
  size_t deg = phi.size() - 1;
  std::vector<Rational> p(std::max<size_t>((c_.size() - 1) * step + 1, deg),
                          Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] += c_[i];
  qpoly_mod(p, phi);
  return CycNum(m, std::move(p));
}

CycNum CycNum::galois(long k) const {
  if (n_ <= 2) return *this;
  long km = ((k % static_cast<long>(n_)) + n_) % n_;
  if (std::gcd(static_cast<unsigned long>(km), static_cast<unsigned long>(n_)) != 1)
    domain_fail("galois: " + std::to_string(k) + " not coprime to conductor " +
                std::to_string(n_));
  const auto& phi = cyclotomic_polynomial(n_);
  size_t deg = phi.size() - 1;
  std::vector<Rational> p(std::max<size_t>((c_.size() - 1) * km + 1, deg),
                          Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * km] += c_[i];
  qpoly_mod(p, phi);
  CycNum z(n_, std::move(p));
  z.shrink();
  return z;
}

CycNum CycNum::conj() const {
  if (n_ <= 2) return *this;
  return galois(static_cast<long>(n_) - 1);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rational& v : r.c_) v = -v;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (n_ == o.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    unsigned l = static_cast<unsigned>(std::lcm(n_, o.n_));
    *this = promoted(l);
    CycNum ob = o.promoted(l);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += ob.c_[i];
  }
  shrink();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  *this += -o;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (n_ == 1) {  // rational scalar times o
    Rational s = c_[0];
    if (s == 0) return *this;
    *this = o;
    for (Rational& v : c_) v *= s;
    shrink();
    return *this;
  }
  if (o.n_ == 1) {
    Rational s = o.c_[0];
    if (s == 0) {
      *this = CycNum();
      return *this;
    }
    for (Rational& v : c_) v *= s;
    return *this;
  }
  unsigned l = static_cast<unsigned>(std::lcm(n_, o.n_));
  CycNum a = promoted(l), b = o.promoted(l);
  std::vector<Rational> prod(2 * a.c_.size(), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  qpoly_mod(prod, cyclotomic_polynomial(l));
  *this = CycNum(l, std::move(prod));
  shrink();
  return *this;
}

CycNum CycNum::inverse() const {
  G12_CHECK(!is_zero(), "inverse of zero");
  if (n_ == 1) return CycNum(Rational(1) / c_[0]);
  // Extended Euclid in Q[x] against Phi_N; Phi_N is irreducible so the gcd
  // with any nonzero representative is a nonzero constant.
  const auto& phim = cyclotomic_polynomial(n_);
  std::vector<Rational> r0(phim.size());
  for (size_t i = 0; i < phim.size(); ++i) r0[i] = Rational(phim[i]);
  std::vector<Rational> r1 = c_;
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r1);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // s tracks x-coeff
  trim(r0);
  while (r1.size() > 1) {
    // r0 = q*r1 + rem
    std::vector<Rational> q(r0.size() - r1.size() + 1, Rational(0));
    std::vector<Rational> rem = r0;
    for (size_t k = q.size(); k-- > 0;) {
      Rational f = rem[k + r1.size() - 1] / r1.back();
      q[k] = f;
      if (f != 0)
        for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= f * r1[j];
    }
    trim(rem);
    // s_next = s0 - q*s1
    std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size() - 1),
                             Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    G12_CHECK(!r1.empty(), "inverse: gcd degenerated (zero element?)");
  }
  // r1 is a nonzero constant g with s1 * this == g (mod Phi).
  Rational g = r1[0];
  std::vector<Rational> inv(euler_phi(n_), Rational(0));
  for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / g;
  if (s1.size() > inv.size()) {
    std::vector<Rational> full(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) full[i] = s1[i] / g;
    qpoly_mod(full, phim);
    inv = std::move(full);
  }
  CycNum z(n_, std::move(inv));
  z.shrink();
  return z;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  *this *= o.inverse();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  return (a - b).is_zero();
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(c_[i]) << ")";
    if (i > 0) os << "*z" << n_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace g12
