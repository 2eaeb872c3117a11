#include "g12/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "g12/error.hpp"
#include "g12/report.hpp"

namespace g12 {

namespace {

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts->out_path, "Write the report to this file");
}

int emit(const Json& report, const CommonOpts& opts, std::string* out) {
  std::string text =
      opts.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) domain_fail("cannot open output file: " + opts.out_path);
    f << text;
  } else {
    *out += text;
  }
  return 0;
}

std::vector<Rational> parse_candidates(const std::string& csv) {
  std::vector<Rational> cands;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    cands.push_back(parse_rational(item.substr(a, b - a + 1)));
  }
  if (cands.empty()) domain_fail("empty candidate list");
  return cands;
}

// Default candidate set for the aspherical scan.
const char* kDefaultCandidates =
    "1/4,-1/4,1/2,-1/2,1/3,-1/3,2/3,-2/3,3/4,-3/4,5/4,-5/4,"
    "1/12,-1/12,5/12,-5/12,7/12,-7/12,11/12,-11/12";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string* out,
            std::string* err) {
  CLI::App app{"Exact structure of category O for the rational Cherednik "
               "algebra of the reflection group G12"};
  app.require_subcommand(1);

  std::string c_str = "0", tau_str = "1+", sigma_str, candidates_str;
  long degree = 0;
  unsigned depth = 12;
  int dd = 0, rr = 0;
  bool negate = false, dump_form = false;

  CommonOpts opts;

  auto* semisimple = app.add_subcommand("semisimple", "Semisimplicity of O_c");
  semisimple->add_option("--c", c_str, "Parameter c as a fraction p/q")->required();
  add_common(semisimple, &opts);

  auto* weights = app.add_subcommand("weights", "Lowest h-weights h_c(tau)");
  weights->add_option("--c", c_str)->required();
  add_common(weights, &opts);

  auto* blocks_cmd = app.add_subcommand("blocks", "Block partition of Irr(W)");
  blocks_cmd->add_option("--c", c_str)->required();
  add_common(blocks_cmd, &opts);

  auto* dsym = app.add_subcommand("decompose-sym",
                                  "Decompose S^n h* (x) tau into irreducibles");
  dsym->add_option("--degree", degree)->required();
  dsym->add_option("--tau", tau_str)->required();
  add_common(dsym, &opts);

  auto* brank = app.add_subcommand("brank", "Rank of the contravariant form");
  brank->add_option("--c", c_str)->required();
  brank->add_option("--tau", tau_str)->required();
  brank->add_option("--degree", degree)->required();
  brank->add_option("--sigma", sigma_str, "Restrict to an isotypic component");
  brank->add_flag("--dump-form", dump_form,
                  "Include the form matrix entries in the report");
  add_common(brank, &opts);

  auto* singular = app.add_subcommand("singular", "Singular vectors in degree n");
  singular->add_option("--c", c_str)->required();
  singular->add_option("--tau", tau_str)->required();
  singular->add_option("--degree", degree)->required();
  add_common(singular, &opts);

  auto* amatrix = app.add_subcommand("amatrix", "Finiteness-test matrix and nullspace");
  amatrix->add_option("--c", c_str)->required();
  add_common(amatrix, &opts);

  auto* category = app.add_subcommand("category", "Full category O report");
  category->add_option("--c", c_str)->required();
  category->add_option("--depth", depth, "Truncation degree (default 12)");
  add_common(category, &opts);

  auto* aspherical = app.add_subcommand("aspherical", "Aspherical-value scan");
  aspherical->add_option("--candidates", candidates_str,
                         "Comma-separated fractions");
  aspherical->add_option("--depth", depth,
                         "Series depth for the invariant test (default 48)");
  add_common(aspherical, &opts);

  auto* transport = app.add_subcommand("transport", "Parameter transports");
  transport->add_option("--d", dd, "Denominator d of the scaling family");
  transport->add_option("--r", rr, "Numerator r of the target r/d");
  transport->add_option("--tau", tau_str, "Also transport this character");
  transport->add_flag("--negate", negate, "Sign-flip transport at --c");
  transport->add_option("--c", c_str, "Parameter for --negate");
  transport->add_option("--depth", depth);
  add_common(transport, &opts);

  try {
    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int code = app.exit(e, os, os);
    if (code == 0) {
      *out += os.str();
      return 0;
    }
    *err += os.str();
    return 1;
  }

  try {
    if (semisimple->parsed())
      return emit(semisimple_report(parse_rational(c_str)), opts, out);
    if (weights->parsed())
      return emit(weights_report(parse_rational(c_str)), opts, out);
    if (blocks_cmd->parsed())
      return emit(blocks_report(parse_rational(c_str)), opts, out);
    if (dsym->parsed()) {
      if (degree < 0) domain_fail("degree must be non-negative");
      return emit(decompose_sym_report(static_cast<unsigned>(degree),
                                       parse_irrep_label(tau_str)),
                  opts, out);
    }
    if (brank->parsed()) {
      if (degree < 0) domain_fail("degree must be non-negative");
      std::optional<IrrepId> sigma;
      if (!sigma_str.empty()) sigma = parse_irrep_label(sigma_str);
      return emit(brank_report(parse_rational(c_str), parse_irrep_label(tau_str),
                               static_cast<unsigned>(degree), sigma, dump_form),
                  opts, out);
    }
    if (singular->parsed()) {
      if (degree < 1) domain_fail("degree must be at least 1");
      return emit(singular_report(parse_rational(c_str),
                                  parse_irrep_label(tau_str),
                                  static_cast<unsigned>(degree)),
                  opts, out);
    }
    if (amatrix->parsed())
      return emit(amatrix_report(parse_rational(c_str)), opts, out);
    if (category->parsed())
      return emit(category_report(parse_rational(c_str), depth), opts, out);
    if (aspherical->parsed()) {
      if (!aspherical->count("--depth")) depth = 48;
      std::string csv =
          candidates_str.empty() ? kDefaultCandidates : candidates_str;
      return emit(aspherical_report(parse_candidates(csv), depth), opts, out);
    }
    if (transport->parsed()) {
      if (negate)
        return emit(transport_negate_report(parse_rational(c_str), depth),
                    opts, out);
      if (dd == 0 || rr == 0)
        domain_fail("transport needs either --negate --c or --d and --r");
      std::optional<IrrepId> tau;
      if (transport->count("--tau")) tau = parse_irrep_label(tau_str);
      return emit(transport_scaling_report(dd, rr, tau, depth), opts, out);
    }
  } catch (const std::domain_error& e) {
    *err += std::string("error: ") + e.what() + "\n";
    return 1;
  } catch (const std::exception& e) {
    *err += std::string("internal inconsistency: ") + e.what() + "\n";
    return 2;
  }
  *err += "no subcommand\n";
  return 1;
}

}  // namespace g12
