#include "mgamma/cli_app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "mgamma/checks.hpp"
#include "mgamma/hurwitz.hpp"
#include "mgamma/multigamma.hpp"
#include "mgamma/oracle.hpp"
#include "mgamma/parser.hpp"
#include "mgamma/products.hpp"
#include "mgamma/series.hpp"
#include "mgamma/stirling_poly.hpp"

namespace mgamma::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  unsigned digits = 12;
  std::string format = "text";
  unsigned long oracle_n = 1024;
  double tolerance = -1.0;  // < 0: no override
};

std::string fmt(double v, unsigned digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", static_cast<int>(digits), v);
  return buf;
}

std::vector<std::string> atom_strings(const ClosedForm& cf) {
  std::vector<std::string> out;
  for (const auto& m : cf.monomials()) {
    Monomial single = m;
    ClosedForm one;
    one.add_monomial(single);
    out.push_back(one.str());
  }
  return out;
}

void emit_value(const Config& cfg, std::ostream& out, const std::string& command,
                ordered_json inputs, double value) {
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["value"] = fmt(value, cfg.digits);
    j["closed_form_atoms"] = ordered_json::array();
    j["oracle"] = nullptr;
    j["residual"] = nullptr;
    out << j.dump(2) << "\n";
  } else {
    out << command << " = " << fmt(value, cfg.digits) << "\n";
  }
}

void emit_polynomial(const Config& cfg, std::ostream& out, const std::string& command,
                     ordered_json inputs, const std::string& label,
                     const RationalPolynomial& poly) {
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    ordered_json coeffs = ordered_json::array();
    const long deg = poly.degree();
    for (long i = 0; i <= deg; ++i) coeffs.push_back(poly.coeff(static_cast<unsigned>(i)).str());
    j["value"] = nullptr;
    j["coefficients"] = std::move(coeffs);  // ascending degree
    out << j.dump(2) << "\n";
  } else {
    out << label << " = " << poly.str() << "\n";
  }
}

int cmd_sum(const Config& cfg, std::ostream& out, std::ostream& err, const std::string& text,
            bool regularize) {
  const SeriesSpec spec = parse_series(text);
  const RegularizedResult reg = evaluate_series(spec);
  if (!reg.convergent && !regularize) {
    err << "series diverges; profile: " << reg.divergent_profile.str() << "\n"
        << "(rerun with --regularize for the zeta-regularized constant term)\n";
    return 1;
  }
  const double value = reg.constant_term.value();
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "sum";
    j["inputs"] = {{"series", unparse(spec)}, {"regularize", regularize}};
    j["value"] = fmt(value, cfg.digits);
    j["closed_form_atoms"] = atom_strings(reg.constant_term);
    j["convergent"] = reg.convergent;
    j["divergent_profile"] = reg.convergent ? ordered_json(nullptr)
                                            : ordered_json(reg.divergent_profile.str());
    j["oracle"] = nullptr;
    j["residual"] = nullptr;
    out << j.dump(2) << "\n";
  } else {
    if (!reg.convergent)
      out << "divergent; profile: " << reg.divergent_profile.str() << "\n"
          << "regularized constant term = " << fmt(value, cfg.digits) << "\n";
    else
      out << "value = " << fmt(value, cfg.digits) << "\n";
    out << "closed form: " << reg.constant_term.str() << "\n";
  }
  return 0;
}

int cmd_product(const Config& cfg, std::ostream& out, std::ostream& err,
                const std::string& text) {
  const ProductSpec spec = parse_product(text);
  const double closed = product_closed_form(spec);
  const auto rep = oracle::partial_product_extrapolated(spec, cfg.oracle_n, 3);
  const double residual = std::abs(closed - rep.extrapolated);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "product";
    j["inputs"] = {{"product", unparse(spec)}, {"oracle_N", cfg.oracle_n}};
    j["value"] = fmt(closed, cfg.digits);
    j["closed_form_atoms"] = ordered_json::array();
    j["oracle"] = {{"value", fmt(rep.extrapolated, cfg.digits)},
                   {"estimated_error", fmt(rep.estimated_error, 3)}};
    j["residual"] = fmt(residual, 3);
    out << j.dump(2) << "\n";
  } else {
    out << "closed form = " << fmt(closed, cfg.digits) << "\n"
        << "oracle      = " << fmt(rep.extrapolated, cfg.digits) << " (2N = "
        << 2 * cfg.oracle_n * 8 << " terms max, estimated error " << fmt(rep.estimated_error, 3)
        << ")\n"
        << "residual    = " << fmt(residual, 3) << "\n";
  }
  if (cfg.tolerance >= 0.0 && residual > cfg.tolerance) {
    err << "residual " << fmt(residual, 3) << " exceeds tolerance " << fmt(cfg.tolerance, 3)
        << "\n";
    return 2;
  }
  return 0;
}

int cmd_dilcher(const Config& cfg, std::ostream& out, std::ostream& err, unsigned k) {
  const ClosedForm cf = dilcher_sum(k);
  const double closed = cf.value();
  const auto rep = oracle::partial_sum_extrapolated(dilcher_spec(k), cfg.oracle_n, 4);
  const double residual = std::abs(closed - rep.extrapolated);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "dilcher";
    j["inputs"] = {{"k", k}, {"oracle_N", cfg.oracle_n}};
    j["value"] = fmt(closed, cfg.digits);
    j["closed_form_atoms"] = atom_strings(cf);
    j["oracle"] = {{"value", fmt(rep.extrapolated, cfg.digits)},
                   {"estimated_error", fmt(rep.estimated_error, 3)}};
    j["residual"] = fmt(residual, 3);
    out << j.dump(2) << "\n";
  } else {
    out << "D_" << k << " = " << fmt(closed, cfg.digits) << "\n"
        << "closed form: " << cf.str() << "\n"
        << "oracle      = " << fmt(rep.extrapolated, cfg.digits) << " (estimated error "
        << fmt(rep.estimated_error, 3) << ")\n"
        << "residual    = " << fmt(residual, 3) << "\n";
  }
  if (cfg.tolerance >= 0.0 && residual > cfg.tolerance) {
    err << "residual " << fmt(residual, 3) << " exceeds tolerance " << fmt(cfg.tolerance, 3)
        << "\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out, const std::string& suite) {
  const auto results = checks::run_suite(suite);
  unsigned failures = 0;
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      arr.push_back({{"suite", r.suite},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"residual", fmt(r.residual, 3)},
                     {"tolerance", fmt(r.tolerance, 3)}});
    }
    ordered_json j;
    j["command"] = "verify";
    j["inputs"] = {{"suite", suite}};
    j["checks"] = std::move(arr);
    j["failures"] = failures;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      out << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.name
          << "  residual=" << fmt(r.residual, 3) << " tol=" << fmt(r.tolerance, 3) << "\n";
    }
    out << results.size() - failures << "/" << results.size() << " checks passed\n";
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("MULTIGAMMA_FORMAT")) {
    const std::string v(env);
    if (v == "text" || v == "json") cfg.format = v;
  }

  CLI::App app{"multiple gamma function, zeta-regularized series and Melzak products"};
  app.get_formatter()->column_width(40);
  app.add_option("--digits", cfg.digits, "significant digits shown (<= 15)")
      ->check(CLI::Range(1u, 15u));
  app.add_option("--format", cfg.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--oracle-n", cfg.oracle_n, "oracle base N (power of two >= 64)")
      ->check([](const std::string& s) -> std::string {
        const unsigned long v = std::strtoul(s.c_str(), nullptr, 10);
        if (v < 64 || (v & (v - 1)) != 0) return "must be a power of two >= 64";
        return {};
      });
  app.add_option("--tolerance", cfg.tolerance,
                 "fail (exit 2) when an oracle residual exceeds this value");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a special function");
  eval->require_subcommand(1);
  unsigned lambda = 0, gn = 1, pk = 0, pn = 1;
  double zarg = 1.0;
  auto* zp = eval->add_subcommand("zetaprime", "zeta'(-lambda, z)");
  zp->add_option("--lambda", lambda, "derivative point -lambda")->required();
  zp->add_option("--z", zarg, "argument z > 0")->required();
  auto* gm = eval->add_subcommand("gamman", "log Gamma_n(z)");
  gm->add_option("--n", gn, "order n >= 1")->required();
  gm->add_option("--z", zarg, "argument z > 0")->required();
  auto* bg = eval->add_subcommand("barnesg", "log G(z)");
  bg->add_option("--z", zarg, "argument z > 0")->required();
  auto* pp = eval->add_subcommand("ppoly", "Stirling polynomial P_{k,n}(z)");
  pp->add_option("--k", pk)->required();
  pp->add_option("--n", pn)->required();
  auto* qp = eval->add_subcommand("qpoly", "Stirling polynomial Q_{k,n}(z)");
  qp->add_option("--k", pk)->required();
  qp->add_option("--n", pn)->required();

  // sum / product / dilcher / verify
  std::string series_text, product_text, suite = "all";
  bool regularize = false;
  unsigned dilcher_k = 1;
  auto* sum = app.add_subcommand("sum", "evaluate an infinite series");
  sum->add_option("series", series_text, "e.g. \"sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))\"")
      ->required();
  sum->add_flag("--regularize", regularize, "print the Hadamard constant term when divergent");
  auto* product = app.add_subcommand("product", "evaluate an infinite product");
  product->add_option("product", product_text, "e.g. \"melzak(x=1)\" or \"melzak2(x=1/2, start=2)\"")
      ->required();
  auto* dil = app.add_subcommand("dilcher", "Dilcher logarithmic sum D_k");
  dil->add_option("--k", dilcher_k, "1 <= k <= 4")->required();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "all | identities | oracle | acceptance");

  app.require_subcommand(1);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) {
      if (zp->parsed()) {
        emit_value(cfg, out, "zetaprime", {{"lambda", lambda}, {"z", zarg}},
                   zeta_sderiv_neg(lambda, zarg));
      } else if (gm->parsed()) {
        emit_value(cfg, out, "gamman", {{"n", gn}, {"z", zarg}}, log_multiple_gamma(gn, zarg));
      } else if (bg->parsed()) {
        emit_value(cfg, out, "barnesg", {{"z", zarg}}, log_barnes_g(zarg));
      } else if (pp->parsed()) {
        emit_polynomial(cfg, out, "ppoly", {{"k", pk}, {"n", pn}},
                        "P[" + std::to_string(pk) + "," + std::to_string(pn) + "](z)",
                        p_poly(pk, pn));
      } else if (qp->parsed()) {
        emit_polynomial(cfg, out, "qpoly", {{"k", pk}, {"n", pn}},
                        "Q[" + std::to_string(pk) + "," + std::to_string(pn) + "](z)",
                        q_poly(pk, pn));
      }
      return 0;
    }
    if (sum->parsed()) return cmd_sum(cfg, out, err, series_text, regularize);
    if (product->parsed()) return cmd_product(cfg, out, err, product_text);
    if (dil->parsed()) return cmd_dilcher(cfg, out, err, dilcher_k);
    if (verify->parsed()) return cmd_verify(cfg, out, suite);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mgamma::cli
