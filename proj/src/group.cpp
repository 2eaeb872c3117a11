#include "g12/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "g12/error.hpp"

namespace g12 {

namespace {

const char* kIrrepLabels[kNumIrreps] = {"1+", "1-", "2", "2+", "2-",
                                        "3+", "3-", "4"};
const int kIrrepDims[kNumIrreps] = {1, 1, 2, 2, 2, 3, 3, 4};

// Character table of G12 by (irrep, class); sqrt(-2) = z8 + z8^3.
CycNum sqrt_minus2() {
  CycNum z = CycNum::zeta(8);
  return z + z * z * z;
}

std::array<std::array<CycNum, kNumClasses>, kNumIrreps> character_table() {
  CycNum s = sqrt_minus2();
  auto R = [](long v) { return CycNum(v); };
  return {{
      {R(1), R(1), R(1), R(1), R(1), R(1), R(1), R(1)},
      {R(1), R(1), R(-1), R(1), R(1), R(1), R(-1), R(-1)},
      {R(2), R(2), R(0), R(-1), R(2), R(-1), R(0), R(0)},
      {R(2), R(-2), R(0), R(-1), R(0), R(1), s, -s},
      {R(2), R(-2), R(0), R(-1), R(0), R(1), -s, s},
      {R(3), R(3), R(1), R(0), R(-1), R(0), R(-1), R(-1)},
      {R(3), R(3), R(-1), R(0), R(-1), R(0), R(1), R(1)},
      {R(4), R(-4), R(0), R(1), R(0), R(-1), R(0), R(0)},
  }};
}

const int kClassSizes[kNumClasses] = {1, 1, 12, 8, 6, 8, 6, 6};
const int kClassOrders[kNumClasses] = {1, 2, 2, 3, 4, 6, 8, 8};
const char* kClassLabels[kNumClasses] = {"1",  "(efg)^4", "e",   "eg",
                                         "ef", "fg",      "efg", "egf"};

std::string matrix_key(const ExactMatrix& m) {
  std::ostringstream os;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      CycNum v = m.at(i, j).promoted(8);
      for (const Rational& c : v.coeffs()) os << to_string(c) << ",";
      os << ";";
    }
  return os.str();
}

ExactMatrix mat2(const CycNum& a, const CycNum& b, const CycNum& c,
                 const CycNum& d) {
  ExactMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

CycNum det2(const ExactMatrix& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

CycNum trace(const ExactMatrix& m) {
  CycNum t;
  for (size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// Inverse transpose of a 2x2 matrix: the action on the dual space.
ExactMatrix dual_action(const ExactMatrix& m) {
  CycNum d = det2(m);
  // inverse = adj/det; transpose of that.
  ExactMatrix r(2, 2);
  r.at(0, 0) = m.at(1, 1) / d;
  r.at(1, 0) = -m.at(0, 1) / d;
  r.at(0, 1) = -m.at(1, 0) / d;
  r.at(1, 1) = m.at(0, 0) / d;
  return r;
}

using Perm4 = std::array<int, 4>;

Perm4 compose(const Perm4& p, const Perm4& q) {
  Perm4 r;
  for (int i = 0; i < 4; ++i) r[i] = p[q[i]];
  return r;
}

// Standard (permutation minus trivial) representation of S4 on the basis
// v_i = e_i - e_4, i = 1..3.
ExactMatrix s4_standard(const Perm4& p) {
  ExactMatrix m(3, 3);
  for (int j = 0; j < 3; ++j) {
    int pj = p[j];
    if (pj < 3) m.at(pj, j) += CycNum(1);
    int p3 = p[3];
    if (p3 < 3)
      m.at(p3, j) -= CycNum(1);
  }
  return m;
}

// Image of p in S3 acting on the three pair-partitions of {1,2,3,4}:
// P0 = 12|34, P1 = 13|24, P2 = 14|23.
std::array<int, 3> partition_action(const Perm4& p) {
  const int mate[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::array<int, 3> img;
  for (int t = 0; t < 3; ++t) {
    int a = p[0], b = p[mate[t][0]];
    for (int u = 0; u < 3; ++u)
      if (mate[u][a] == b) img[t] = u;
  }
  return img;
}

// Standard 2-dim representation of S3 on u_i = e_i - e_3, i = 1..2.
ExactMatrix s3_standard(const std::array<int, 3>& p) {
  ExactMatrix m(2, 2);
  for (int j = 0; j < 2; ++j) {
    int pj = p[j];
    if (pj < 2) m.at(pj, j) += CycNum(1);
    int p2 = p[2];
    if (p2 < 2) m.at(p2, j) -= CycNum(1);
  }
  return m;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return r;
}

}  // namespace

const char* irrep_label(IrrepId t) { return kIrrepLabels[t]; }
int irrep_dim(IrrepId t) { return kIrrepDims[t]; }

IrrepId parse_irrep_label(const std::string& s) {
  for (int i = 0; i < kNumIrreps; ++i)
    if (s == kIrrepLabels[i]) return static_cast<IrrepId>(i);
  domain_fail("unknown irrep label: '" + s + "'");
}

IrrepId tensor_sign(IrrepId t) {
  switch (t) {
    case kOnePlus: return kOneMinus;
    case kOneMinus: return kOnePlus;
    case kTwoPlus: return kTwoMinus;
    case kTwoMinus: return kTwoPlus;
    case kThreePlus: return kThreeMinus;
    case kThreeMinus: return kThreePlus;
    default: return t;  // 2 and 4 are self-paired
  }
}

std::vector<ExactMatrix> matrix_closure(const std::vector<ExactMatrix>& gens,
                                        size_t limit) {
  std::vector<ExactMatrix> elems;
  std::map<std::string, int> seen;
  size_t n = gens.empty() ? 2 : gens[0].rows();
  elems.push_back(ExactMatrix::identity(n));
  seen[matrix_key(elems[0])] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const ExactMatrix& g : gens) {
      ExactMatrix prod = elems[head] * g;
      std::string key = matrix_key(prod);
      if (seen.count(key)) continue;
      if (elems.size() >= limit)
        internal_fail("group closure exceeded expected order " +
                      std::to_string(limit));
      seen[key] = static_cast<int>(elems.size());
      elems.push_back(std::move(prod));
    }
  }
  return elems;
}

const GroupData& GroupData::instance() {
  static GroupData data;
  return data;
}

GroupData::GroupData() {
  CycNum z = CycNum::zeta(8);
  CycNum z3 = z * z * z;
  CycNum half = CycNum(Rational(1, 2));
  CycNum a = (z3 - z) * half;  // (zeta^3 - zeta)/2
  ExactMatrix ge = mat2(a, -a, -a, -a);
  ExactMatrix gf = mat2(a, a, a, -a);
  ExactMatrix gg = mat2(CycNum(0), -z, z3, CycNum(0));
  const char* gen_names = "efg";
  const Perm4 gen_perms[3] = {{1, 0, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
  std::vector<ExactMatrix> gens{ge, gf, gg};

  // Breadth-first closure: by word length, then lexicographic word.
  std::map<std::string, int> seen;
  elements_.push_back({ExactMatrix::identity(2), "", 0, 0, -1, {0, 1, 2, 3}});
  seen[matrix_key(elements_[0].m)] = 0;
  for (size_t head = 0; head < elements_.size(); ++head) {
    for (int gi = 0; gi < 3; ++gi) {
      ExactMatrix prod = elements_[head].m * gens[gi];
      std::string key = matrix_key(prod);
      if (seen.count(key)) continue;
      if (elements_.size() >= kGroupOrder)
        internal_fail("G12 closure exceeded order 48: generator data corrupt");
      GroupElement el;
      el.m = std::move(prod);
      el.word = elements_[head].word + gen_names[gi];
      el.s4 = compose(elements_[head].s4, gen_perms[gi]);
      seen[key] = static_cast<int>(elements_.size());
      elements_.push_back(std::move(el));
    }
  }
  G12_CHECK(elements_.size() == kGroupOrder, "G12 closure is not 48 elements");

  // Multiplication and inverse tables.
  mult_.assign(kGroupOrder * kGroupOrder, -1);
  for (int i = 0; i < kGroupOrder; ++i)
    for (int j = 0; j < kGroupOrder; ++j) {
      auto it = seen.find(matrix_key(elements_[i].m * elements_[j].m));
      G12_CHECK(it != seen.end(), "group not closed under multiplication");
      mult_[i * kGroupOrder + j] = it->second;
    }
  for (int i = 0; i < kGroupOrder; ++i) {
    for (int j = 0; j < kGroupOrder; ++j)
      if (mult_[i * kGroupOrder + j] == 0) elements_[i].inverse = j;
    int p = i, order = 1;
    while (p != 0) {
      p = mult_[p * kGroupOrder + i];
      ++order;
      G12_CHECK(order <= kGroupOrder, "element order runaway");
    }
    elements_[i].order = (i == 0) ? 1 : order;
  }

  // Conjugacy classes.
  std::vector<int> class_of(kGroupOrder, -1);
  std::vector<std::vector<int>> raw_classes;
  for (int i = 0; i < kGroupOrder; ++i) {
    if (class_of[i] >= 0) continue;
    std::vector<int> members;
    for (int g = 0; g < kGroupOrder; ++g) {
      int c = mult_[mult_[g * kGroupOrder + i] * kGroupOrder +
                    elements_[g].inverse];
      if (class_of[c] < 0) {
        class_of[c] = static_cast<int>(raw_classes.size());
        members.push_back(c);
      }
    }
    raw_classes.push_back(std::move(members));
  }
  G12_CHECK(raw_classes.size() == kNumClasses, "expected 8 conjugacy classes");

  // Match classes to the canonical order via (size, order, trace-on-h).
  CycNum s2 = sqrt_minus2();
  std::vector<int> assigned(raw_classes.size(), -1);
  for (int k = 0; k < kNumClasses; ++k) {
    int found = -1;
    for (size_t r = 0; r < raw_classes.size(); ++r) {
      int rep = raw_classes[r][0];
      if (static_cast<int>(raw_classes[r].size()) != kClassSizes[k]) continue;
      if (elements_[rep].order != kClassOrders[k]) continue;
      if (kClassOrders[k] == 8) {
        CycNum tr = trace(elements_[rep].m);
        bool is_efg = (tr == s2);
        if ((k == 6) != is_efg) continue;
      }
      G12_CHECK(found < 0, "ambiguous class match");
      found = static_cast<int>(r);
    }
    G12_CHECK(found >= 0, "no class matches canonical class " +
                              std::string(kClassLabels[k]));
    assigned[found] = k;
    ConjClass& cc = classes_[k];
    cc.rep = raw_classes[found][0];
    cc.size = kClassSizes[k];
    cc.order = kClassOrders[k];
    cc.label = kClassLabels[k];
    cc.members = raw_classes[found];
    std::sort(cc.members.begin(), cc.members.end());
  }
  for (int k = 0; k < kNumClasses; ++k)
    for (int m : classes_[k].members) elements_[m].conj_class = k;

  // Dual (h*) action for every element.
  hstar_.reserve(kGroupOrder);
  for (const GroupElement& el : elements_) hstar_.push_back(dual_action(el.m));

  // Eigenvalue exponents per class, on h and h*, via the characteristic
  // polynomial: both roots are roots of unity of order dividing the element
  // order, found by matching trace and determinant.
  for (ConjClass& cc : classes_) {
    const ExactMatrix& m = elements_[cc.rep].m;
    CycNum tr = trace(m), dt = det2(m);
    int ord = cc.order;
    bool ok = false;
    for (int i = 0; i < ord && !ok; ++i)
      for (int j = i; j < ord && !ok; ++j) {
        CycNum li = CycNum::root_of_unity(rat(i, ord));
        CycNum lj = CycNum::root_of_unity(rat(j, ord));
        if (li + lj == tr && li * lj == dt) {
          cc.eig_h = {UnityRoot(rat(i, ord)), UnityRoot(rat(j, ord))};
          ok = true;
        }
      }
    G12_CHECK(ok, "class eigenvalues are not roots of unity");
    cc.eig_hstar = {cc.eig_h[0].inverse(), cc.eig_h[1].inverse()};
    if (cc.eig_hstar[1] < cc.eig_hstar[0])
      std::swap(cc.eig_hstar[0], cc.eig_hstar[1]);
  }

  // Reflections: order 2, fixing a line (trace 0 in dimension 2).
  for (int i = 1; i < kGroupOrder; ++i) {
    const ExactMatrix& m = elements_[i].m;
    if (elements_[i].order != 2 || !trace(m).is_zero()) continue;
    ReflectionData rd;
    rd.element = i;
    rd.lambda = CycNum(-1);
    // alpha_vee in h: eigenvector of m for -1, i.e. kernel of m + 1.
    ExactMatrix mp1 = m + ExactMatrix::identity(2);
    auto kernel_vec = [](const ExactMatrix& k) -> std::array<CycNum, 2> {
      // 2x2 rank-1 matrix; a kernel vector is (-k01, k00) or (-k11, k10).
      if (!k.at(0, 0).is_zero() || !k.at(0, 1).is_zero())
        return {-k.at(0, 1), k.at(0, 0)};
      return {-k.at(1, 1), k.at(1, 0)};
    };
    rd.alpha_vee = kernel_vec(mp1);
    // alpha in h*: eigenvector of the dual action for -1.
    ExactMatrix dp1 = dual_action(m) + ExactMatrix::identity(2);
    rd.alpha = kernel_vec(dp1);
    // Normalize: first nonzero coordinate of alpha is 1, pairing is 2.
    CycNum lead = rd.alpha[0].is_zero() ? rd.alpha[1] : rd.alpha[0];
    rd.alpha[0] /= lead;
    rd.alpha[1] /= lead;
    CycNum pairing = rd.alpha[0] * rd.alpha_vee[0] + rd.alpha[1] * rd.alpha_vee[1];
    G12_CHECK(!pairing.is_zero(), "degenerate reflection pairing");
    CycNum scale = CycNum(2) / pairing;
    rd.alpha_vee[0] *= scale;
    rd.alpha_vee[1] *= scale;
    reflections_.push_back(std::move(rd));
  }
  G12_CHECK(reflections_.size() == 12, "G12 must contain 12 reflections");

  // Irreducible representations.
  auto traces_by_class = [&](const std::vector<ExactMatrix>& mats) {
    std::array<CycNum, kNumClasses> chi;
    for (int k = 0; k < kNumClasses; ++k) chi[k] = trace(mats[classes_[k].rep]);
    return chi;
  };
  auto fill = [&](IrrepId id, std::vector<ExactMatrix> mats) {
    Irrep& ir = irreps_[id];
    ir.id = id;
    ir.dim = kIrrepDims[id];
    ir.chi = traces_by_class(mats);
    ir.mats = std::move(mats);
  };

  std::vector<ExactMatrix> m1p(kGroupOrder), m1m(kGroupOrder), m2(kGroupOrder),
      m2p(kGroupOrder), m2m(kGroupOrder), m3p(kGroupOrder), m3m(kGroupOrder),
      m4(kGroupOrder);
  for (int i = 0; i < kGroupOrder; ++i) {
    const GroupElement& el = elements_[i];
    m2p[i] = el.m;
    ExactMatrix det(1, 1);
    det.at(0, 0) = det2(el.m);
    m1m[i] = det;
    ExactMatrix one(1, 1);
    one.at(0, 0) = CycNum(1);
    m1p[i] = one;
    m2m[i] = el.m.scaled(det.at(0, 0));
    m3p[i] = s4_standard(el.s4);
    m3m[i] = m3p[i].scaled(det.at(0, 0));
    m2[i] = s3_standard(partition_action(el.s4));
    m4[i] = kronecker(m2[i], m2p[i]);
  }
  fill(kOnePlus, std::move(m1p));
  fill(kOneMinus, std::move(m1m));
  fill(kTwo, std::move(m2));
  fill(kTwoPlus, std::move(m2p));
  fill(kTwoMinus, std::move(m2m));
  fill(kThreePlus, std::move(m3p));
  fill(kThreeMinus, std::move(m3m));
  fill(kFour, std::move(m4));

  // Every built character row must equal the table, on every element.
  auto table = character_table();
  for (int t = 0; t < kNumIrreps; ++t) {
    for (int k = 0; k < kNumClasses; ++k)
      G12_CHECK(irreps_[t].chi[k] == table[t][k],
                std::string("character of ") + kIrrepLabels[t] +
                    " disagrees with the character table at class " +
                    kClassLabels[k]);
    for (int i = 0; i < kGroupOrder; ++i)
      G12_CHECK(trace(irreps_[t].mats[i]) ==
                    table[t][elements_[i].conj_class],
                "character is not a class function");
  }
}

Rational GroupData::central_reflection_sum(IrrepId tau) const {
  const CycNum& chi_e = chi(tau, 2);  // class of the reflection e
  Rational val = chi_e.rational_value();
  return Rational(12) * val / Rational(irrep_dim(tau));
}

}  // namespace g12
