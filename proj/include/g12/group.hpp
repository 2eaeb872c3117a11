// The complex reflection group G12: 48 explicit 2x2 matrices over Q(zeta_8),
// conjugacy classes, reflection data and all eight irreducible
// representations, verified against the character table at build time.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "g12/matrix.hpp"
#include "g12/unity_root.hpp"

namespace g12 {

// Fixed irrep order used everywhere: 1+, 1-, 2, 2+, 2-, 3+, 3-, 4.
enum IrrepId : int {
  kOnePlus = 0,
  kOneMinus = 1,
  kTwo = 2,
  kTwoPlus = 3,
  kTwoMinus = 4,
  kThreePlus = 5,
  kThreeMinus = 6,
  kFour = 7,
};
constexpr int kNumIrreps = 8;
constexpr int kNumClasses = 8;
constexpr int kGroupOrder = 48;

const char* irrep_label(IrrepId t);
IrrepId parse_irrep_label(const std::string& s);  // domain error if unknown
int irrep_dim(IrrepId t);
IrrepId tensor_sign(IrrepId t);  // the irrep 1- (x) t

struct GroupElement {
  ExactMatrix m;     // 2x2 action on h
  std::string word;  // reduced word in e,f,g ("" for the identity)
  int order = 0;
  int inverse = 0;       // index of the inverse element
  int conj_class = -1;   // canonical class index 0..7
  std::array<int, 4> s4; // image in S4 (i -> s4[i]) through the quotient map
};

struct ConjClass {
  int rep;    // element index of the representative
  int size;
  int order;
  std::string label;           // canonical representative word
  std::vector<int> members;
  // Eigenvalue exponents of the class on h and on h*, each sorted.
  std::array<UnityRoot, 2> eig_h;
  std::array<UnityRoot, 2> eig_hstar;
};

struct ReflectionData {
  int element;            // index into elements()
  CycNum lambda;          // nontrivial eigenvalue on h*; always -1 for G12
  std::array<CycNum, 2> alpha;       // covector in h*, first nonzero coord 1
  std::array<CycNum, 2> alpha_vee;   // vector in h, (alpha, alpha_vee) = 2
};

struct Irrep {
  IrrepId id;
  int dim;
  std::vector<ExactMatrix> mats;        // per element index
  std::array<CycNum, kNumClasses> chi;  // character by class
};

// Breadth-first closure of a generator list; throws if it exceeds `limit`.
std::vector<ExactMatrix> matrix_closure(const std::vector<ExactMatrix>& gens,
                                        size_t limit);

class GroupData {
 public:
  // Built once on first use; immutable afterwards.
  static const GroupData& instance();

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::array<ConjClass, kNumClasses>& classes() const { return classes_; }
  const std::vector<ReflectionData>& reflections() const { return reflections_; }
  const std::array<Irrep, kNumIrreps>& irreps() const { return irreps_; }
  const Irrep& irrep(IrrepId t) const { return irreps_[t]; }

  int multiply(int a, int b) const { return mult_[a * kGroupOrder + b]; }
  int inverse(int a) const { return elements_[a].inverse; }
  int class_of(int a) const { return elements_[a].conj_class; }

  // Character value chi_tau on the class of element index a.
  const CycNum& chi(IrrepId tau, int cls) const { return irreps_[tau].chi[cls]; }

  // Scalar by which sum_{s in S} s acts on tau: |S| chi_tau(e) / dim tau.
  Rational central_reflection_sum(IrrepId tau) const;

  // Action of element a on h* in the dual basis (inverse transpose).
  const ExactMatrix& hstar_matrix(int a) const { return hstar_[a]; }

 private:
  GroupData();

  std::vector<GroupElement> elements_;
  std::vector<int> mult_;
  std::array<ConjClass, kNumClasses> classes_;
  std::vector<ReflectionData> reflections_;
  std::array<Irrep, kNumIrreps> irreps_;
  std::vector<ExactMatrix> hstar_;
};

}  // namespace g12
