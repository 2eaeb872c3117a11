#include "g12/rational.hpp"

#include "g12/error.hpp"

namespace g12 {

Rational parse_rational(const std::string& s) {
  if (s.empty()) domain_fail("empty fraction");
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!digits_ok(num) || !digits_ok(den))
    domain_fail("malformed fraction: '" + s + "'");
  Integer n(num), d(den);
  if (d == 0) domain_fail("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

long to_long(const Rational& q) {
  G12_CHECK(is_integer(q), "to_long: not an integer: " + to_string(q));
  G12_CHECK(q.get_num().fits_slong_p(), "to_long: out of range");
  return q.get_num().get_si();
}

Rational mod1(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace g12
