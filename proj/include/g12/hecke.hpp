// Semisimplicity of O_c through the factored Schur elements of the
// G12 Hecke algebra, evaluated exactly at v = e^{pi i c}.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "g12/cyclotomic.hpp"
#include "g12/group.hpp"

namespace g12 {

// One factor (v - sign * xi^k)^mult with xi = e^{2 pi i / 24}.
struct SchurFactor {
  int sign;      // +1 or -1: the root is sign * xi^exp
  int xi_exp;    // exponent of xi
  int mult;
};

struct SchurElement {
  IrrepId sigma;
  Rational unit;      // leading rational coefficient
  int v_power;        // power of v in front
  std::vector<SchurFactor> factors;
};

// The eight stored elements, transcribed verbatim from the published table.
const std::vector<SchurElement>& schur_elements();

// Data file round-trip. The format is line-based; serialize(parse(x)) == x.
std::vector<SchurElement> parse_schur_data(const std::string& text);
std::string serialize_schur_data(const std::vector<SchurElement>& elems);
const std::string& embedded_schur_data();

// Evaluation at v = e^{pi i c}, i.e. q = v^2 = e^{2 pi i c}.
CycNum schur_evaluate(IrrepId sigma, const Rational& c);

// O_c is semisimple iff no Schur element vanishes at v = e^{pi i c}.
bool is_semisimple(const Rational& c);

// Residues m mod 12 for which c = m/12 is not semisimple (scan m = 1..24).
std::set<int> nonsemisimple_residues();

}  // namespace g12
