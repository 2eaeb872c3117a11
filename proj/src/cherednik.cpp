#include "g12/cherednik.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "g12/error.hpp"

namespace g12 {

namespace {

// ----- homogeneous 2-variable polynomial helpers ---------------------------
// A degree-n form is a coefficient vector of length n+1; entry j multiplies
// x1^{n-j} x2^j.

// (u x1 + v x2)^p as a coefficient vector.
CycVec linear_power(const CycNum& u, const CycNum& v, unsigned p) {
  CycVec r(p + 1);
  CycNum binom(1);
  CycVec upow(p + 1), vpow(p + 1);
  upow[0] = CycNum(1);
  vpow[0] = CycNum(1);
  for (unsigned k = 1; k <= p; ++k) {
    upow[k] = upow[k - 1] * u;
    vpow[k] = vpow[k - 1] * v;
  }
  for (unsigned k = 0; k <= p; ++k) {
    r[k] = binom * upow[p - k] * vpow[k];
    if (k < p) binom = binom * CycNum(static_cast<long>(p - k)) /
                       CycNum(static_cast<long>(k + 1));
  }
  return r;
}

CycVec poly_mul(const CycVec& a, const CycVec& b) {
  CycVec r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Matrix of p -> p / (a1 x1 + a2 x2) on forms of degree n (exact division;
// see division_is_exact below for the paired assertion).
ExactMatrix divide_by_linear_matrix(const CycNum& a1, const CycNum& a2,
                                    unsigned n) {
  ExactMatrix m(n, n + 1);
  if (!a1.is_zero()) {
    // q[k] = (p[k] - a2 q[k-1]) / a1
    CycNum inv = a1.inverse();
    CycNum ratio = -(a2 * inv);
    for (unsigned k = 0; k < n; ++k) {
      CycNum f = inv;
      for (unsigned j = k + 1; j-- > 0;) {
        m.at(k, j) = f;
        f *= ratio;
      }
    }
  } else {
    CycNum inv = a2.inverse();
    for (unsigned k = 0; k < n; ++k) m.at(k, k + 1) = inv;
  }
  return m;
}

// Matrix of multiplication by a1 x1 + a2 x2 from degree n-1 to degree n.
ExactMatrix linear_mult_matrix(const CycNum& a1, const CycNum& a2, unsigned n) {
  ExactMatrix m(n + 1, n);
  for (unsigned j = 0; j < n; ++j) {
    m.at(j, j) += a1;
    m.at(j + 1, j) += a2;
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

ExactMatrix sym_power_of(const ExactMatrix& c, unsigned n) {
  // Column j is the expansion of (c.x1)^{n-j} (c.x2)^j.
  std::vector<CycVec> pow1(n + 1), pow2(n + 1);
  for (unsigned p = 0; p <= n; ++p) {
    pow1[p] = linear_power(c.at(0, 0), c.at(1, 0), p);
    pow2[p] = linear_power(c.at(0, 1), c.at(1, 1), p);
  }
  ExactMatrix m(n + 1, n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    CycVec col = poly_mul(pow1[n - j], pow2[j]);
    for (unsigned i = 0; i <= n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

// ----- c-independent per-(tau, degree) data --------------------------------

struct SymData {
  // Reflection part of the two Dunkl operators, degree n -> n-1:
  // refl[i] = sum_s (alpha_s)_i (T_s (x) tau(s)), T_s = (1-s)/alpha_s.
  std::array<ExactMatrix, 2> refl;
  // Partial-derivative part, degree n -> n-1.
  std::array<ExactMatrix, 2> partial;
  // Isotypic bases of S^n h* (x) tau: iso[sigma] spans the image of the
  // projector e_sigma, with mult[sigma]*dim(sigma) vectors.
  std::array<std::vector<CycVec>, kNumIrreps> iso;
  MultVector mult;
};

ExactMatrix partial_matrix(unsigned n, int i, int dim) {
  // d/dx1 maps x1^{n-j} x2^j to (n-j) x1^{n-1-j} x2^j; d/dx2 to j * ...
  ExactMatrix p(n, n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    if (i == 0 && j < n) p.at(j, j) = CycNum(static_cast<long>(n - j));
    if (i == 1 && j > 0) p.at(j - 1, j) = CycNum(static_cast<long>(j));
  }
  ExactMatrix id = ExactMatrix::identity(dim);
  return kronecker(p, id);
}

const SymData& sym_data(IrrepId tau, unsigned n);

}  // namespace

const ExactMatrix& sym_power_action(int element, bool dual_side, unsigned n) {
  static std::map<std::tuple<int, bool, unsigned>, ExactMatrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(element, dual_side, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const GroupData& g = GroupData::instance();
  const ExactMatrix& m2 = dual_side ? g.elements()[element].m
                                    : g.hstar_matrix(element);
  return cache.emplace(key, sym_power_of(m2, n)).first->second;
}

namespace {

const SymData& sym_data(IrrepId tau, unsigned n) {
  static std::map<std::pair<int, unsigned>, std::unique_ptr<SymData>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(tau), n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  const GroupData& g = GroupData::instance();
  const Irrep& rep = g.irrep(tau);
  int dim = rep.dim;
  auto data = std::make_unique<SymData>();

  if (n >= 1) {
    data->partial[0] = partial_matrix(n, 0, dim);
    data->partial[1] = partial_matrix(n, 1, dim);
    ExactMatrix zero(n * dim, (n + 1) * dim);
    data->refl = {zero, zero};
    ExactMatrix id_n = ExactMatrix::identity(n + 1);
    for (const ReflectionData& rd : g.reflections()) {
      const ExactMatrix& sym_s = sym_power_action(rd.element, false, n);
      ExactMatrix one_minus_s(n + 1, n + 1);
      for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n; ++j) {
          one_minus_s.at(i, j) = -sym_s.at(i, j);
          if (i == j) one_minus_s.at(i, j) += CycNum(1);
        }
      ExactMatrix div = divide_by_linear_matrix(rd.alpha[0], rd.alpha[1], n);
      ExactMatrix ts = div * one_minus_s;
      // Exactness of the division: alpha_s * T_s must reproduce 1 - s.
      ExactMatrix back = linear_mult_matrix(rd.alpha[0], rd.alpha[1], n) * ts;
      G12_CHECK(back == one_minus_s,
                "alpha_s division has a remainder: bad reflection data");
      ExactMatrix term = kronecker(ts, rep.mats[rd.element]);
      for (int i = 0; i < 2; ++i) {
        if (rd.alpha[i].is_zero()) continue;
        data->refl[i] = data->refl[i] + term.scaled(rd.alpha[i]);
      }
    }
  }

  // Isotypic bases from class-sum projectors.
  ClassFunction chi_n = sym_power_character(n) * ClassFunction::of_irrep(tau);
  data->mult = decompose(chi_n);
  size_t big = (n + 1) * dim;
  std::array<ExactMatrix, kNumClasses> class_sums;
  for (int k = 0; k < kNumClasses; ++k) {
    ExactMatrix sum(big, big);
    for (int w : g.classes()[k].members)
      sum = sum + kronecker(sym_power_action(w, false, n), rep.mats[w]);
    class_sums[k] = std::move(sum);
  }
  for (int s = 0; s < kNumIrreps; ++s) {
    long want = data->mult[s] * irrep_dim(IrrepId(s));
    if (want == 0) continue;
    ExactMatrix proj(big, big);
    for (int k = 0; k < kNumClasses; ++k) {
      CycNum coef = g.chi(IrrepId(s), k).conj() *
                    CycNum(rat(irrep_dim(IrrepId(s)), kGroupOrder));
      if (coef.is_zero()) continue;
      proj = proj + class_sums[k].scaled(coef);
    }
    // Greedy maximal independent subset of the projected basis vectors.
    std::vector<CycVec> basis, reduced;
    std::vector<size_t> pivot_of;
    for (size_t col = 0; col < big && basis.size() < (size_t)want; ++col) {
      CycVec v(big), r(big);
      for (size_t row = 0; row < big; ++row) v[row] = proj.at(row, col);
      r = v;
      for (size_t b = 0; b < reduced.size(); ++b) {
        const CycNum& lead = r[pivot_of[b]];
        if (lead.is_zero()) continue;
        CycNum f = lead;
        for (size_t row = 0; row < big; ++row)
          if (!reduced[b][row].is_zero()) r[row] -= f * reduced[b][row];
      }
      size_t piv = big;
      for (size_t row = 0; row < big; ++row)
        if (!r[row].is_zero()) { piv = row; break; }
      if (piv == big) continue;
      CycNum inv = r[piv].inverse();
      for (size_t row = 0; row < big; ++row) r[row] *= inv;
      basis.push_back(std::move(v));
      reduced.push_back(std::move(r));
      pivot_of.push_back(piv);
    }
    G12_CHECK(basis.size() == (size_t)want,
              "isotypic projector rank disagrees with character count");
    data->iso[s] = std::move(basis);
  }

  return *cache.emplace(key, std::move(data)).first->second;
}

// ----- optional on-disk cache of B matrices --------------------------------

std::string cache_path(const Rational& c, IrrepId tau, unsigned n) {
  const char* dir = std::getenv("G12_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::string ctag = to_string(c);
  for (char& ch : ctag)
    if (ch == '/' || ch == '-') ch = ch == '/' ? 'q' : 'm';
  std::string ttag = irrep_label(tau);
  for (char& ch : ttag)
    if (ch == '+' || ch == '-') ch = ch == '+' ? 'p' : 'm';
  return std::string(dir) + "/b_" + ctag + "_" + ttag + "_" +
         std::to_string(n) + ".json";
}

nlohmann::json cyc_to_json(const CycNum& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& q : x.coeffs()) coeffs.push_back(to_string(q));
  return nlohmann::json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const nlohmann::json& j) {
  unsigned n = j.at("conductor").get<unsigned>();
  const auto& coeffs = j.at("coeffs");
  CycNum zeta = CycNum::zeta(n), power(1), result;
  for (const auto& item : coeffs) {
    result += power * CycNum(parse_rational(item.get<std::string>()));
    power *= zeta;
  }
  return result;
}

bool load_cached_b(const Rational& c, IrrepId tau, unsigned n, size_t dim,
                   ExactMatrix* out) {
  std::string path = cache_path(c, tau, n);
  if (path.empty()) return false;
  std::ifstream f(path);
  if (!f) return false;
  try {
    nlohmann::json j;
    f >> j;
    size_t rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
    if (rows != dim || cols != dim) return false;
    ExactMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    size_t idx = 0;
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) m.at(i, k) = cyc_from_json(entries[idx++]);
    *out = std::move(m);
    return true;
  } catch (...) {
    return false;  // corrupt cache entries are recomputed
  }
}

void store_cached_b(const Rational& c, IrrepId tau, unsigned n,
                    const ExactMatrix& m) {
  std::string path = cache_path(c, tau, n);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  nlohmann::json entries = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < m.cols(); ++k) entries.push_back(cyc_to_json(m.at(i, k)));
  nlohmann::json j{{"c", to_string(c)},
                   {"tau", irrep_label(tau)},
                   {"degree", n},
                   {"rows", m.rows()},
                   {"cols", m.cols()},
                   {"entries", entries}};
  std::ofstream f(path);
  if (f) f << j.dump();
}

}  // namespace

Rational lowest_weight(IrrepId tau, const Rational& c) {
  return Rational(1) - c * GroupData::instance().central_reflection_sum(tau);
}

StandardModule::StandardModule(const Rational& c, IrrepId tau)
    : c_(c), tau_(tau), dim_(irrep_dim(tau)) {
  b_.push_back(ExactMatrix::identity(dim_));
  dunkl_.push_back({ExactMatrix(0, dim_), ExactMatrix(0, dim_)});
}

Rational StandardModule::h_weight() const { return lowest_weight(tau_, c_); }

const ExactMatrix& StandardModule::dunkl_matrix(unsigned n, int i) {
  G12_CHECK(n >= 1, "dunkl_matrix: degree must be >= 1");
  G12_CHECK(i == 0 || i == 1, "dunkl_matrix: direction out of range");
  while (dunkl_.size() <= n) {
    unsigned m = dunkl_.size();
    const SymData& sd = sym_data(tau_, m);
    std::array<ExactMatrix, 2> d;
    for (int k = 0; k < 2; ++k)
      d[k] = sd.partial[k] - sd.refl[k].scaled(CycNum(c_));
    dunkl_.push_back(std::move(d));
  }
  return dunkl_[n][i];
}

PolyVec StandardModule::dunkl_apply(int i, const PolyVec& u) {
  G12_CHECK(u.tau == tau_, "dunkl_apply: module mismatch");
  PolyVec out;
  out.tau = tau_;
  if (u.degree == 0) {
    out.degree = 0;
    out.coords.assign(dim_, CycNum());
    return out;
  }
  out.degree = u.degree - 1;
  out.coords = dunkl_matrix(u.degree, i).apply(u.coords);
  return out;
}

void StandardModule::ensure_b(unsigned n) {
  while (b_.size() <= n) {
    unsigned m = b_.size();  // building B_m from B_{m-1}
    ExactMatrix cached;
    if (load_cached_b(c_, tau_, m, dim_at(m), &cached)) {
      b_.push_back(std::move(cached));
      continue;
    }
    const ExactMatrix& prev = b_[m - 1];
    ExactMatrix p0 = dunkl_matrix(m, 0).transposed() * prev;
    ExactMatrix p1 = dunkl_matrix(m, 1).transposed() * prev;
    size_t rows = dim_at(m);
    ExactMatrix bm(rows, rows);
    for (unsigned j = 0; j <= m; ++j) {
      for (int l = 0; l < dim_; ++l) {
        size_t col = j * dim_ + l;
        if (j < m) {  // via y1: w = mono j at degree m-1
          size_t src = j * dim_ + l;
          for (size_t r = 0; r < rows; ++r) bm.at(r, col) = p0.at(r, src);
          if (j >= 1) {  // both routes exist: they must agree
            size_t alt = (j - 1) * dim_ + l;
            for (size_t r = 0; r < rows; ++r)
              G12_CHECK(bm.at(r, col) == p1.at(r, alt),
                        "contravariant form recursion is inconsistent");
          }
        } else {  // pure y2^m column, only the y2 route
          size_t alt = (j - 1) * dim_ + l;
          for (size_t r = 0; r < rows; ++r) bm.at(r, col) = p1.at(r, alt);
        }
      }
    }
    store_cached_b(c_, tau_, m, bm);
    b_.push_back(std::move(bm));
  }
}

const ExactMatrix& StandardModule::b_matrix(unsigned n) {
  ensure_b(n);
  return b_[n];
}

unsigned StandardModule::b_rank(unsigned n) {
  return static_cast<unsigned>(b_matrix(n).rank());
}

unsigned StandardModule::b_rank_isotypic(unsigned n, IrrepId sigma) {
  const ExactMatrix& b = b_matrix(n);
  const SymData& sd = sym_data(tau_, n);
  const auto& basis = sd.iso[sigma];
  if (basis.empty()) return 0;
  size_t dim = dim_at(n);
  ExactMatrix restricted(basis.size(), dim);
  for (size_t r = 0; r < basis.size(); ++r)
    for (size_t jj = 0; jj < dim; ++jj) {
      CycNum acc;
      for (size_t k = 0; k < dim; ++k) {
        if (basis[r][k].is_zero() || b.at(k, jj).is_zero()) continue;
        acc += basis[r][k] * b.at(k, jj);
      }
      restricted.at(r, jj) = acc;
    }
  unsigned rank = static_cast<unsigned>(restricted.rank());
  G12_CHECK(rank % irrep_dim(sigma) == 0,
            "isotypic rank not divisible by dim sigma: projector bug");
  return rank;
}

MultVector StandardModule::l_multiplicities(unsigned n) {
  while (lmult_.size() <= n) {
    unsigned k = lmult_.size();
    MultVector m{};
    for (int s = 0; s < kNumIrreps; ++s)
      m[s] = b_rank_isotypic(k, IrrepId(s)) / irrep_dim(IrrepId(s));
    lmult_.push_back(m);
  }
  return lmult_[n];
}

ClassFunction StandardModule::singular_character(unsigned n) {
  G12_CHECK(n >= 1, "singular_character: degree must be >= 1");
  const ExactMatrix& d0 = dunkl_matrix(n, 0);
  const ExactMatrix& d1 = dunkl_matrix(n, 1);
  size_t dim = dim_at(n);
  ExactMatrix stacked(2 * d0.rows(), dim);
  for (size_t i = 0; i < d0.rows(); ++i)
    for (size_t j = 0; j < dim; ++j) {
      stacked.at(i, j) = d0.at(i, j);
      stacked.at(d0.rows() + i, j) = d1.at(i, j);
    }
  std::vector<size_t> free_col;
  std::vector<CycVec> kernel = stacked.nullspace(&free_col);
  ClassFunction chi;
  if (kernel.empty()) return chi;
  // Each kernel vector has a 1 in its free column and 0 in the other free
  // columns, so coordinates of any kernel vector in this basis can be read
  // off the free columns.
  const GroupData& g = GroupData::instance();
  for (int k = 0; k < kNumClasses; ++k) {
    ExactMatrix act = group_action(n, g.classes()[k].rep);
    CycNum tr;
    for (size_t b = 0; b < kernel.size(); ++b) {
      CycNum entry;
      for (size_t j = 0; j < dim; ++j) {
        if (kernel[b][j].is_zero()) continue;
        entry += act.at(free_col[b], j) * kernel[b][j];
      }
      tr += entry;
    }
    chi.v[k] = tr;
  }
  return chi;
}

ExactMatrix StandardModule::group_action(unsigned n, int element) const {
  const Irrep& rep = GroupData::instance().irrep(tau_);
  return kronecker(sym_power_action(element, false, n), rep.mats[element]);
}

ExactMatrix StandardModule::dual_group_action(unsigned n, int element) const {
  const GroupData& g = GroupData::instance();
  const Irrep& rep = g.irrep(tau_);
  ExactMatrix dual_tau = rep.mats[g.inverse(element)].transposed();
  return kronecker(sym_power_action(element, true, n), dual_tau);
}

ExactMatrix StandardModule::x_mult(unsigned n, int i) const {
  ExactMatrix m = linear_mult_matrix(i == 0 ? CycNum(1) : CycNum(0),
                                     i == 0 ? CycNum(0) : CycNum(1), n + 1);
  return kronecker(m, ExactMatrix::identity(dim_));
}

ExactMatrix StandardModule::y_mult(unsigned n, int i) const {
  return x_mult(n, i);  // same monomial bookkeeping on the y side
}

ExactMatrix StandardModule::dual_dunkl_matrix(unsigned n, int i) const {
  G12_CHECK(n >= 1, "dual_dunkl_matrix: degree must be >= 1");
  const GroupData& g = GroupData::instance();
  const Irrep& rep = g.irrep(tau_);
  ExactMatrix result = partial_matrix(n, i, dim_);
  for (const ReflectionData& rd : g.reflections()) {
    if (rd.alpha_vee[i].is_zero()) continue;
    const ExactMatrix& sym_s = sym_power_action(rd.element, true, n);
    ExactMatrix one_minus_s = ExactMatrix::identity(n + 1) - sym_s;
    ExactMatrix div =
        divide_by_linear_matrix(rd.alpha_vee[0], rd.alpha_vee[1], n);
    ExactMatrix ts = div * one_minus_s;
    ExactMatrix back =
        linear_mult_matrix(rd.alpha_vee[0], rd.alpha_vee[1], n) * ts;
    G12_CHECK(back == one_minus_s, "alpha_vee division has a remainder");
    ExactMatrix dual_tau = rep.mats[g.inverse(rd.element)].transposed();
    result = result -
             kronecker(ts, dual_tau).scaled(rd.alpha_vee[i] * CycNum(c_));
  }
  return result;
}

StandardModule& standard_module(const Rational& c, IrrepId tau) {
  static std::map<std::pair<std::string, int>, std::unique_ptr<StandardModule>>
      registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(to_string(c), static_cast<int>(tau));
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::make_unique<StandardModule>(c, tau)).first;
  return *it->second;
}

}  // namespace g12
