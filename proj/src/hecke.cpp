#include "g12/hecke.hpp"

#include <mutex>
#include <sstream>

#include "g12/error.hpp"
#include "g12/unity_root.hpp"

namespace g12 {

namespace {

// Verbatim transcription of the published table of Schur elements for
// H_q(G12), q = v^2, xi = e^{2 pi i/24}. A factor line "s k m" stands for
// (v - s xi^k)^m. Note the asymmetric multiplicities between 2+ and 2-
// ((v + xi^3)^2 against (v - xi^3)^3): stored as printed; the multiplicity
// does not affect the zero set.
const char* kSchurData =
    "# Schur elements for the G12 Hecke algebra, q = v^2, xi = e^{2 pi i/24}\n"
    "# sigma | unit | v_power | factors (v - s*xi^k)^m as 's k m'\n"
    "1+ | 1 | -24 | + 1 1, - 1 1, + 3 2, - 3 2, + 4 1, - 4 1, + 5 1, - 5 1, "
    "+ 6 2, - 6 2, + 7 1, - 7 1, + 8 1, - 8 1, + 9 2, - 9 2, + 11 1, - 11 1\n"
    "1- | 1 | 0 | + 1 1, - 1 1, + 3 2, - 3 2, + 4 1, - 4 1, + 5 1, - 5 1, "
    "+ 6 2, - 6 2, + 7 1, - 7 1, + 8 1, - 8 1, + 9 2, - 9 2, + 11 1, - 11 1\n"
    "2 | 2 | -4 | + 4 1, - 4 1, + 6 2, - 6 2, + 8 1, - 8 1\n"
    "2+ | -12 | -4 | + 1 1, - 3 2, - 5 1, - 7 1, - 9 2, + 11 1\n"
    "2- | -12 | -4 | - 1 1, + 3 3, + 5 1, + 7 1, + 9 2, - 11 1\n"
    "3+ | 1 | -10 | + 3 2, - 3 2, + 6 2, - 6 2, + 9 2, - 9 2\n"
    "3- | 1 | -2 | + 3 2, - 3 2, + 6 2, - 6 2, + 9 2, - 9 2\n"
    "4 | 3 | -4 | + 3 2, - 3 2, + 9 2, - 9 2\n";

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

const std::string& embedded_schur_data() {
  static const std::string data(kSchurData);
  return data;
}

std::vector<SchurElement> parse_schur_data(const std::string& text) {
  std::vector<SchurElement> elems;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::istringstream ls(line);
    std::string piece;
    while (std::getline(ls, piece, '|')) parts.push_back(trim(piece));
    if (parts.size() != 4) domain_fail("schur data: bad record: " + line);
    SchurElement e;
    e.sigma = parse_irrep_label(parts[0]);
    e.unit = parse_rational(parts[1]);
    e.v_power = static_cast<int>(to_long(parse_rational(parts[2])));
    std::istringstream fs(parts[3]);
    std::string factor;
    while (std::getline(fs, factor, ',')) {
      factor = trim(factor);
      std::istringstream ff(factor);
      std::string sign;
      SchurFactor f{};
      ff >> sign >> f.xi_exp >> f.mult;
      if (ff.fail() || (sign != "+" && sign != "-") || f.mult <= 0)
        domain_fail("schur data: bad factor '" + factor + "'");
      f.sign = sign == "+" ? 1 : -1;
      e.factors.push_back(f);
    }
    elems.push_back(std::move(e));
  }
  if (elems.size() != kNumIrreps)
    domain_fail("schur data: expected 8 records");
  return elems;
}

std::string serialize_schur_data(const std::vector<SchurElement>& elems) {
  std::ostringstream os;
  os << "# Schur elements for the G12 Hecke algebra, q = v^2, "
        "xi = e^{2 pi i/24}\n"
     << "# sigma | unit | v_power | factors (v - s*xi^k)^m as 's k m'\n";
  for (const SchurElement& e : elems) {
    os << irrep_label(e.sigma) << " | " << to_string(e.unit) << " | "
       << e.v_power << " | ";
    for (size_t i = 0; i < e.factors.size(); ++i) {
      if (i) os << ", ";
      os << (e.factors[i].sign > 0 ? "+" : "-") << " " << e.factors[i].xi_exp
         << " " << e.factors[i].mult;
    }
    os << "\n";
  }
  return os.str();
}

const std::vector<SchurElement>& schur_elements() {
  static const std::vector<SchurElement> elems =
      parse_schur_data(embedded_schur_data());
  return elems;
}

CycNum schur_evaluate(IrrepId sigma, const Rational& c) {
  const SchurElement* elem = nullptr;
  for (const SchurElement& e : schur_elements())
    if (e.sigma == sigma) elem = &e;
  G12_CHECK(elem, "missing schur element");
  UnityRoot v(c / 2);  // v = e^{pi i c}
  CycNum result = CycNum(elem->unit) * v.pow(rat(elem->v_power)).embed();
  CycNum vv = v.embed();
  for (const SchurFactor& f : elem->factors) {
    CycNum root = UnityRoot(rat(f.xi_exp, 24)).embed();
    if (f.sign < 0) root = -root;
    CycNum base = vv - root;
    for (int k = 0; k < f.mult; ++k) result *= base;
  }
  return result;
}

bool is_semisimple(const Rational& c) {
  for (int t = 0; t < kNumIrreps; ++t)
    if (schur_evaluate(IrrepId(t), c).is_zero()) return false;
  return true;
}

std::set<int> nonsemisimple_residues() {
  std::set<int> res;
  for (int m = 1; m <= 24; ++m)
    if (!is_semisimple(rat(m, 12))) res.insert(m % 12);
  return res;
}

}  // namespace g12
