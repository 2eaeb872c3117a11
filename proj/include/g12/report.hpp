// Deterministic JSON reports for every computation the CLI exposes.
// nlohmann::json objects iterate keys in sorted order, so dumps are stable.
#pragma once

#include <json.hpp>

#include "g12/category.hpp"
#include "g12/hecke.hpp"

namespace g12 {

using Json = nlohmann::json;

Json cycnum_json(const CycNum& x);
Json series_json(const CharacterSeries& s);

// Group and character table: classes with sizes, orders and representative
// words, and the character values as serialized cyclotomic numbers.
Json group_table_report();

Json semisimple_report(const Rational& c);
Json weights_report(const Rational& c);
Json blocks_report(const Rational& c);
Json decompose_sym_report(unsigned degree, IrrepId tau);
Json brank_report(const Rational& c, IrrepId tau, unsigned degree,
                  const std::optional<IrrepId>& sigma, bool dump_form = false);
Json singular_report(const Rational& c, IrrepId tau, unsigned degree);
Json amatrix_report(const Rational& c);
Json category_report(const Rational& c, unsigned depth);
Json aspherical_report(const std::vector<Rational>& candidates, unsigned depth);
Json transport_scaling_report(int d, int r, const std::optional<IrrepId>& tau,
                              unsigned depth);
Json transport_negate_report(const Rational& c, unsigned depth);

std::string render_text(const Json& j);  // plain-text rendering of a report

}  // namespace g12
