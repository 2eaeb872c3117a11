#include "g12/report.hpp"

#include <sstream>

#include "g12/error.hpp"

namespace g12 {

namespace {

Json groth_row_json(const std::array<long, kNumIrreps>& row) {
  Json a = Json::array();
  for (long v : row) a.push_back(v);
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(groth_row_json(row));
  return a;
}

Json mult_map_json(const MultVector& m) {
  Json o = Json::object();
  for (int t = 0; t < kNumIrreps; ++t) o[irrep_label(IrrepId(t))] = m[t];
  return o;
}

}  // namespace

Json cycnum_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const Rational& q : x.coeffs()) coeffs.push_back(to_string(q));
  return Json{{"coeffs", coeffs}, {"conductor", x.conductor()}};
}

Json series_json(const CharacterSeries& s) {
  Json terms = Json::array();
  for (const MultVector& m : s.terms) terms.push_back(groth_row_json(m));
  return Json{{"offset", to_string(s.offset)}, {"terms", terms}};
}

Json group_table_report() {
  const GroupData& g = GroupData::instance();
  Json classes = Json::array();
  for (const ConjClass& cc : g.classes())
    classes.push_back(Json{{"label", cc.label},
                           {"order", cc.order},
                           {"size", cc.size}});
  Json chars = Json::object();
  for (int t = 0; t < kNumIrreps; ++t) {
    Json row = Json::array();
    for (int k = 0; k < kNumClasses; ++k)
      row.push_back(cycnum_json(g.chi(IrrepId(t), k)));
    chars[irrep_label(IrrepId(t))] = row;
  }
  return Json{{"character_table", chars},
              {"classes", classes},
              {"order", kGroupOrder},
              {"reflections", g.reflections().size()}};
}

Json semisimple_report(const Rational& c) {
  return Json{{"c", to_string(c)}, {"semisimple", is_semisimple(c)}};
}

Json weights_report(const Rational& c) {
  Json h = Json::object();
  for (int t = 0; t < kNumIrreps; ++t)
    h[irrep_label(IrrepId(t))] = to_string(lowest_weight(IrrepId(t), c));
  return Json{{"c", to_string(c)}, {"h", h}};
}

Json blocks_report(const Rational& c) {
  Json b = Json::array();
  for (const auto& blk : blocks(c)) {
    Json one = Json::array();
    for (IrrepId t : blk) one.push_back(irrep_label(t));
    b.push_back(one);
  }
  return Json{{"blocks", b}, {"c", to_string(c)}};
}

Json decompose_sym_report(unsigned degree, IrrepId tau) {
  return Json{{"degree", degree},
              {"multiplicities", mult_map_json(sym_power_decompose(degree, tau))},
              {"tau", irrep_label(tau)}};
}

Json brank_report(const Rational& c, IrrepId tau, unsigned degree,
                  const std::optional<IrrepId>& sigma, bool dump_form) {
  StandardModule& m = standard_module(c, tau);
  Json out{{"c", to_string(c)},
           {"degree", degree},
           {"dim", m.dim_at(degree)},
           {"tau", irrep_label(tau)}};
  if (sigma) {
    out["sigma"] = irrep_label(*sigma);
    out["rank"] = m.b_rank_isotypic(degree, *sigma);
  } else {
    out["rank"] = m.b_rank(degree);
  }
  if (dump_form) {
    const ExactMatrix& b = m.b_matrix(degree);
    Json grid = Json::array();
    for (size_t i = 0; i < b.rows(); ++i) {
      Json row = Json::array();
      for (size_t j = 0; j < b.cols(); ++j) row.push_back(cycnum_json(b.at(i, j)));
      grid.push_back(row);
    }
    out["form"] = grid;
  }
  return out;
}

Json singular_report(const Rational& c, IrrepId tau, unsigned degree) {
  StandardModule& m = standard_module(c, tau);
  ClassFunction chi = m.singular_character(degree);
  MultVector mult = decompose(chi);
  long dim = 0;
  for (int t = 0; t < kNumIrreps; ++t) dim += mult[t] * irrep_dim(IrrepId(t));
  return Json{{"c", to_string(c)},
              {"degree", degree},
              {"dim", dim},
              {"multiplicities", mult_map_json(mult)},
              {"tau", irrep_label(tau)}};
}

Json amatrix_report(const Rational& c) {
  AMatrix a = build_a_matrix(c);
  Json rows = Json::array();
  for (const AMatrixRow& r : a.rows)
    rows.push_back(Json{{"class", GroupData::instance().classes()[r.conj_class].label},
                        {"t_exponent", to_string(r.t.exponent)}});
  Json entries = Json::array();
  for (size_t i = 0; i < a.entries.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < a.entries.cols(); ++j)
      row.push_back(cycnum_json(a.entries.at(i, j)));
    entries.push_back(row);
  }
  ANullspace ns = a_nullspace(c);
  Json null = Json::array();
  for (const auto& v : ns.integer_basis) {
    Json row = Json::array();
    for (long x : v) row.push_back(x);
    null.push_back(row);
  }
  return Json{{"c", to_string(c)},
              {"entries", entries},
              {"nullspace", null},
              {"nullspace_rational", ns.rational},
              {"rows", rows}};
}

Json category_report(const Rational& c, unsigned depth) {
  DecompositionMatrix dm = decomposition_matrix(c, depth);
  Json characters = Json::object();
  for (int t = 0; t < kNumIrreps; ++t)
    characters[irrep_label(IrrepId(t))] =
        series_json(graded_l_character(IrrepId(t), c, depth));
  Json fin = Json::object();
  for (const auto& [tau, dim] : finite_dimensionals(c, depth))
    fin[irrep_label(tau)] = dim;
  return Json{{"aspherical", is_aspherical(c)},
              {"blocks", blocks_report(c)["blocks"]},
              {"c", to_string(c)},
              {"characters", characters},
              {"depth", depth},
              {"finite_dimensional", fin},
              {"n", matrix_json(dm.n)},
              {"n_hat", matrix_json(dm.n_hat)},
              {"semisimple", is_semisimple(c)}};
}

Json aspherical_report(const std::vector<Rational>& candidates, unsigned depth) {
  Json cand = Json::array();
  for (const Rational& c : candidates) cand.push_back(to_string(c));
  Json asph = Json::array();
  for (const Rational& c : aspherical_scan(candidates, depth))
    asph.push_back(to_string(c));
  return Json{{"aspherical", asph}, {"candidates", cand}, {"depth", depth}};
}

Json transport_scaling_report(int d, int r, const std::optional<IrrepId>& tau,
                              unsigned depth) {
  TransportMap t = scaling_permutation(d, r);
  Json phi = Json::object();
  for (int i = 0; i < kNumIrreps; ++i)
    phi[irrep_label(IrrepId(i))] = irrep_label(t.phi[i]);
  Json out{{"d", d},
           {"gamma", t.conjugate ? "conjugate" : "identity"},
           {"phi", phi},
           {"r", r}};
  if (tau) {
    CharacterSeries base =
        graded_l_character(*tau, Rational(1) / Rational(d), depth);
    CharacterSeries moved = transport_character(base, d, r, depth);
    out["tau"] = irrep_label(*tau);
    out["target_tau"] = irrep_label(t.phi[*tau]);
    out["character"] = series_json(moved);
  }
  return out;
}

Json transport_negate_report(const Rational& c, unsigned depth) {
  DecompositionMatrix dm =
      negate_c_transport(decomposition_matrix_anywhere(c, depth));
  return Json{{"c", to_string(c)},
              {"n", matrix_json(dm.n)},
              {"n_hat", matrix_json(dm.n_hat)},
              {"target_c", to_string(dm.c)}};
}

namespace {

void render_value(const Json& j, const std::string& indent, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      os << indent << it.key() << ":";
      if (it.value().is_object() || it.value().is_array()) {
        os << "\n";
        render_value(it.value(), indent + "  ", os);
      } else {
        os << " " << (it.value().is_string()
                          ? it.value().get<std::string>()
                          : it.value().dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) flat = false;
    if (flat) {
      os << indent << "[";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      os << "]\n";
    } else {
      for (const auto& v : j) render_value(v, indent + "  ", os);
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render_value(j, "", os);
  return os.str();
}

}  // namespace g12
