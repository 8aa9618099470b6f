#include "oscint/cli/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oscint/cli/reference_tables.hpp"
#include "oscint/core/errors.hpp"
#include "oscint/core/poly_io.hpp"
#include "oscint/general/complete.hpp"
#include "oscint/oracle/quadrature.hpp"
#include "oscint/power/neumann.hpp"
#include "oscint/power/power_kernel.hpp"
#include "oscint/reversion/reversion.hpp"

namespace oscint::cli {

using nlohmann::json;

namespace {

enum class Format { table, csv, json };

struct Cell {
  std::string text;
  json value;
};

Cell text_cell(const std::string& s) { return {s, s}; }
Cell int_cell(long v) { return {std::to_string(v), v}; }
Cell real_cell(double v) { return {fmt::format("{:#.17g}", v), v}; }
Cell short_cell(double v) { return {fmt::format("{:.3g}", v), v}; }
Cell bool_cell(bool v) { return {v ? "PASS" : "FAIL", v}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render(const Table& t, Format format, std::ostream& out) {
  switch (format) {
    case Format::csv: {
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_escape(t.columns[i]);
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i].text);
        out << "\n";
      }
      return;
    }
    case Format::json: {
      json arr = json::array();
      for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i].value;
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << "\n";
      return;
    }
    case Format::table: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
      auto line = [&](auto get) {
        std::string s;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
          if (i) s += "  ";
          s += fmt::format("{:<{}}", get(i), width[i]);
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << "\n";
      };
      line([&](std::size_t i) { return t.columns[i]; });
      for (const auto& row : t.rows) line([&](std::size_t i) { return row[i].text; });
      return;
    }
  }
}

// Builds rows concurrently and returns them in index order.
std::vector<std::vector<Cell>> parallel_rows(std::size_t count, const std::function<std::vector<Cell>(std::size_t)>& make) {
  std::vector<std::vector<Cell>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = make(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

double parse_limit(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return kInfinity;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse upper limit '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse upper limit '" + text + "'");
  if (std::isinf(v) && v > 0.0) return kInfinity;
  return v;
}

// Options shared by the commands that evaluate integrals.
struct EvalOptions {
  std::string p, phi;
  std::string config_file;
  std::vector<std::string> assignments;
  int K = 0, T = 0, J = 0;
  double tol = 0.0;
  CLI::Option* k_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* j_opt = nullptr;
  CLI::Option* tol_opt = nullptr;

  void attach(CLI::App* app, bool need_phase = true) {
    app->add_option("--p", p, "amplitude polynomial, e.g. \"1+2x^3\" or \"1,0,2\"")->required();
    auto* o = app->add_option("--phi", phi, "phase polynomial");
    if (need_phase) o->required();
    app->add_option("--config", config_file, "file of key=value lines overriding the defaults");
    app->add_option("--set", assignments, "key=value override (repeatable)");
    k_opt = app->add_option("--K", K, "q-iteration depth");
    t_opt = app->add_option("--T", T, "Laurent order");
    j_opt = app->add_option("--J", J, "Taylor terms of the complete integral");
    tol_opt = app->add_option("--tol", tol, "target tolerance");
  }

  EvalConfig config() const {
    EvalConfig cfg;
    auto apply = [&](const std::string& line) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + line + "'");
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
      };
      cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    };
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw std::invalid_argument("cannot open config file " + config_file);
      std::string line;
      while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        apply(line);
      }
    }
    for (const auto& a : assignments) apply(a);
    if (k_opt->count()) cfg.K = K;
    if (t_opt->count()) cfg.T = T;
    if (j_opt->count()) cfg.J = J;
    if (tol_opt->count()) cfg.tol = tol;
    cfg.validate();
    return cfg;
  }
};

void print_result(const IntegralResult& r, Format format, bool details, std::ostream& out) {
  if (format == Format::table) {
    out << format_complex(r.value) << "\n";
    if (details) {
      out << "error  " << fmt::format("{:.3g}", r.error_estimate) << "\n";
      out << "method " << to_string(r.method) << "\n";
    }
    return;
  }
  Table t{{"re", "im", "error", "method"},
          {{real_cell(r.value.real()), real_cell(r.value.imag()), short_cell(r.error_estimate),
            text_cell(to_string(r.method))}}};
  render(t, format, out);
}

// --- reference checks -------------------------------------------------------

struct Check {
  std::string table, item, computed, reference;
  double deviation;
  bool pass;
};

std::vector<Cell> check_cells(const Check& c) {
  return {text_cell(c.table), text_cell(c.item), text_cell(c.computed), text_cell(c.reference),
          short_cell(c.deviation), bool_cell(c.pass)};
}

constexpr double kInfinityTol = 1e-12;
constexpr double kPrefactorTol = 1e-12;
constexpr double kCompleteSineTol = 1e-15;
constexpr double kMatchSpotTol = 5e-3;
constexpr double kMatchTableTol = 2e-2;

std::vector<Check> infinity_checks() {
  const auto rows = ref::infinity_rows();
  std::vector<Check> out(rows.size());
  auto cells = parallel_rows(rows.size(), [&](std::size_t i) {
    const auto& r = rows[i];
    const CompleteIntegral ci = complete_general(parse_polynomial(r.p), parse_polynomial(r.phi), 200, 1e-14);
    const double dev = std::max(std::abs(ci.value.real() - r.re), std::abs(ci.value.imag() - r.im));
    out[i] = {"infinity", std::string(r.p) + " | " + r.phi, format_complex(ci.value),
              format_complex({r.re, r.im}), dev, dev <= kInfinityTol};
    return std::vector<Cell>{};
  });
  return out;
}

std::vector<Check> neumann_checks() {
  std::vector<Check> out;
  for (int n = 3; n <= 5; ++n) {
    const NeumannExpansion e = neumann_coeffs(n, 10);
    for (const auto& r : ref::neumann_rows()) {
      if (r.n != n) continue;
      const BigRational& xi = e.xi[static_cast<std::size_t>(r.s)];
      const std::string computed = xi.to_string() + " " + xi.to_decimal(26);
      const std::string reference = std::string(r.fraction) + " " + r.decimal;
      const bool exact = xi == BigRational::parse(r.fraction) && xi.to_decimal(26) == r.decimal;
      out.push_back({"neumann", fmt::format("xi[{},{}]", n, r.s), computed, reference, exact ? 0.0 : 1.0, exact});
    }
    const double ref_d = ref::neumann_prefactor_reference(n);
    const double dev = std::abs(e.d_n - ref_d) / ref_d;
    out.push_back({"neumann", fmt::format("d_{}", n), fmt::format("{:#.17g}", e.d_n), fmt::format("{:#.17g}", ref_d),
                   dev, dev <= kPrefactorTol});
  }
  return out;
}

std::vector<Check> complete_checks() {
  std::vector<Check> out;
  for (int n = 2; n <= 4; ++n) {
    const double im = complete_power({0, n, 1.0}).imag();
    const double ref_v = ref::complete_sine_reference(n);
    const double dev = std::abs(im - ref_v) / ref_v;
    out.push_back({"complete", fmt::format("sin(x^{})", n), fmt::format("{:#.17g}", im), fmt::format("{:#.17g}", ref_v),
                   dev, dev <= kCompleteSineTol});
  }
  return out;
}

std::vector<Check> reversion_checks() {
  constexpr int order = 10;
  std::vector<Check> out;
  for (RecurrenceFamily f : reversion_families()) {
    const Poly<BigRational> alpha = family_polynomial(f);
    const RationalSeries beta = revert_multinomial(alpha, order).beta;
    std::vector<BigRational> b(beta.coeffs().begin(), beta.coeffs().end());
    bool rec_ok = true;
    for (long j = recurrence_start(f); j <= order; ++j) rec_ok = rec_ok && recurrence_residual(f, b, j).is_zero();
    const RationalSeries y = RationalSeries::from_poly(alpha, order).compose(beta);
    bool comp_ok = y[1] == BigRational(1);
    for (int k = 2; k <= order; ++k) comp_ok = comp_ok && y[k].is_zero();
    std::string shown;
    for (int j = 1; j <= order; ++j) shown += (j > 1 ? " " : "") + b[static_cast<std::size_t>(j)].to_string();
    out.push_back({"reversion", format_polynomial(alpha), shown, "recurrence and y + O(y^11)",
                   rec_ok && comp_ok ? 0.0 : 1.0, rec_ok && comp_ok});
  }
  return out;
}

std::vector<Check> local_checks() {
  std::vector<Check> out;
  auto compare = [&](const std::string& name, RecurrenceFamily f, std::span<const long> expected) {
    const auto got = oracle_recurrence(f, static_cast<int>(expected.size()));
    std::string shown, want;
    bool ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      shown += (i ? " " : "") + got[i].to_string();
      want += (i ? " " : "") + std::to_string(expected[i]);
      ok = ok && got[i] == BigRational(expected[i]);
    }
    out.push_back({"local", name, shown, want, ok ? 0.0 : 1.0, ok});
  };
  compare("kappa", RecurrenceFamily::cubic_kappa, ref::kappa_reference());
  compare("lambda", RecurrenceFamily::cubic_lambda, ref::lambda_reference());
  compare("eta", RecurrenceFamily::quartic_eta, ref::eta_reference());
  return out;
}

std::vector<Check> match_checks() {
  const Polynomial p = parse_polynomial("x^2"), phi = parse_polynomial("x+x^4");
  const MatchResult m = match_infinity(p, phi, 40, 3, {1.6, 2.0, 41});
  const Complex spot{ref::kMatchSpotRe, ref::kMatchSpotIm};
  Complex table{0.0, 0.0};
  for (const auto& r : ref::infinity_rows())
    if (std::string(r.p) == "x^2" && std::string(r.phi) == "x+x^4") table = {r.re, r.im};
  const double d_spot = std::abs(m.estimate.value - spot);
  const double d_table = std::abs(m.estimate.value - table);
  return {{"match", "spot x^2 | x+x^4", format_complex(m.estimate.value), format_complex(spot), d_spot,
           d_spot <= kMatchSpotTol},
          {"match", "table x^2 | x+x^4", format_complex(m.estimate.value), format_complex(table), d_table,
           d_table <= kMatchTableTol}};
}

// --- commands ----------------------------------------------------------------

int cmd_paper_tables(const std::string& which, Format format, std::ostream& out) {
  std::vector<Check> checks;
  auto add = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  const bool all = which == "all";
  bool known = all;
  if (all || which == "infinity") add(infinity_checks()), known = true;
  if (all || which == "neumann") add(neumann_checks()), known = true;
  if (all || which == "complete") add(complete_checks()), known = true;
  if (all || which == "reversion") add(reversion_checks()), known = true;
  if (all || which == "local") add(local_checks()), known = true;
  if (all || which == "match") add(match_checks()), known = true;
  if (!known) throw std::invalid_argument("unknown table '" + which + "'");

  Table t{{"table", "item", "computed", "reference", "deviation", "status"}, {}};
  bool pass = true;
  for (const auto& c : checks) {
    t.rows.push_back(check_cells(c));
    pass = pass && c.pass;
  }
  render(t, format, out);
  return pass ? 0 : 2;
}

int cmd_neumann(int n, int terms, Format format, std::ostream& out) {
  if (terms < 1) throw std::invalid_argument("--terms must be positive");
  const NeumannExpansion e = neumann_coeffs(n, terms - 1);
  Table t{{"s", "numerator", "denominator", "decimal"}, {}};
  for (std::size_t s = 0; s < e.xi.size(); ++s) {
    t.rows.push_back({int_cell(static_cast<long>(s)), text_cell(e.xi[s].numerator_string()),
                      text_cell(e.xi[s].denominator_string()), text_cell(e.xi[s].to_decimal(26))});
  }
  if (format == Format::table) out << fmt::format("d_{} = {:#.17g}\n", n, e.d_n);
  render(t, format, out);
  return 0;
}

int cmd_reversion(const std::string& alpha_text, const std::string& family, int order, const std::string& method,
                  Format format, std::ostream& out) {
  if (alpha_text.empty() == family.empty()) throw std::invalid_argument("give exactly one of --alpha and --family");
  const Poly<BigRational> alpha =
      family.empty() ? parse_rational_polynomial(alpha_text) : family_polynomial(recurrence_family_from_string(family));
  ReversionResult r;
  if (method == "multinomial") r = revert_multinomial(alpha, order);
  else if (method == "perturbative") r = revert_perturbative(alpha, order);
  else throw std::invalid_argument("unknown reversion method '" + method + "'");
  Table t{{"index", "numerator", "denominator"}, {}};
  for (int j = 1; j <= order; ++j) {
    t.rows.push_back({int_cell(j), text_cell(r.beta[j].numerator_string()), text_cell(r.beta[j].denominator_string())});
  }
  render(t, format, out);
  return 0;
}

int cmd_curve(const EvalOptions& o, double u_max, int samples, const std::string& part_name, bool extrema,
              Format format, std::ostream& out) {
  if (!(u_max > 0.0) || std::isinf(u_max)) throw std::invalid_argument("--u-max must be a positive number");
  if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
  const EvalConfig cfg = o.config();
  const Polynomial p = parse_polynomial(o.p), phi = parse_polynomial(o.phi);
  const Part part = part_from_string(part_name);
  if (extrema) {
    Table t{{"kind", "u", "value"}, {}};
    for (const auto& e : curve_extrema(p, phi, u_max, samples, part, cfg)) {
      t.rows.push_back({text_cell(e.maximum ? "max" : "min"), real_cell(e.u), real_cell(e.value)});
    }
    render(t, format, out);
    return 0;
  }
  Table t{{"u", part_name}, {}};
  t.rows = parallel_rows(static_cast<std::size_t>(samples) + 1, [&](std::size_t k) {
    const double u = u_max * static_cast<double>(k) / samples;
    const double v = take_part(evaluate({p, phi, u}, cfg).value, part);
    return std::vector<Cell>{real_cell(u), real_cell(v)};
  });
  render(t, format, out);
  return 0;
}

int cmd_check(const EvalOptions& o, const std::vector<std::string>& limits, double oracle_tol, Format format,
              std::ostream& out) {
  const EvalConfig cfg = o.config();
  const Polynomial p = parse_polynomial(o.p), phi = parse_polynomial(o.phi);
  std::vector<double> us;
  for (const auto& s : limits) us.push_back(parse_limit(s));
  for (double u : us)
    if (std::isinf(u)) throw std::invalid_argument("check needs finite upper limits");
  bool pass = true;
  Table t{{"u", "evaluate", "oracle", "delta", "allowed", "method", "status"}, {}};
  t.rows = parallel_rows(us.size(), [&](std::size_t i) {
    const ProblemSpec spec{p, phi, us[i]};
    const IntegralResult r = evaluate(spec, cfg);
    const OracleResult q = oracle_integrate(spec, oracle_tol);
    const double delta = std::abs(r.value - q.value);
    const double allowed = std::max(1e-8, r.error_estimate + q.abs_error);
    return std::vector<Cell>{real_cell(us[i]),          text_cell(format_complex(r.value)),
                             text_cell(format_complex(q.value)), short_cell(delta),
                             short_cell(allowed),       text_cell(to_string(r.method)),
                             bool_cell(delta <= allowed && q.converged)};
  });
  for (const auto& row : t.rows) pass = pass && row.back().value.get<bool>();
  render(t, format, out);
  return pass ? 0 : 2;
}

}  // namespace

std::string format_complex(Complex v) {
  if (v == Complex{0.0, 0.0}) return "0";
  return fmt::format("{:#.17g} {:+#.17g}i", v.real(), v.imag());
}

Part part_from_string(const std::string& name) {
  if (name == "real") return Part::real;
  if (name == "imag") return Part::imag;
  if (name == "abs") return Part::abs;
  throw std::invalid_argument("unknown part '" + name + "' (real, imag, abs)");
}

double take_part(Complex v, Part part) {
  switch (part) {
    case Part::real: return v.real();
    case Part::imag: return v.imag();
    case Part::abs: return std::abs(v);
  }
  return 0.0;
}

std::vector<Extremum> curve_extrema(const Polynomial& p, const Polynomial& phi, double u_max, int samples, Part part,
                                    const EvalConfig& cfg) {
  auto f = [&](double u) { return take_part(evaluate({p, phi, u}, cfg).value, part); };
  std::vector<double> us, vs;
  for (int k = 0; k <= samples; ++k) {
    us.push_back(u_max * k / samples);
    vs.push_back(f(us.back()));
  }
  std::vector<Extremum> out;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int k = 1; k < samples; ++k) {
    const bool is_max = vs[k] > vs[k - 1] && vs[k] >= vs[k + 1];
    const bool is_min = vs[k] < vs[k - 1] && vs[k] <= vs[k + 1];
    if (!is_max && !is_min) continue;
    const double sign = is_max ? -1.0 : 1.0;
    double a = us[k - 1], b = us[k + 1];
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = sign * f(x1), f2 = sign * f(x2);
    while (b - a > 1e-12 * std::max(1.0, b)) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = sign * f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = sign * f(x2);
      }
    }
    const double u = 0.5 * (a + b);
    out.push_back({u, f(u), is_max});
  }
  return out;
}

unsigned thread_count() {
  if (const char* env = std::getenv("OSCINT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Fresnel integrals with polynomial amplitude and phase", "oscint"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "table";
  app.add_option("--format", format_name, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate the integral from 0 to u");
  EvalOptions eval_opts;
  eval_opts.attach(eval);
  std::string eval_u;
  bool eval_details = false;
  eval->add_option("--u", eval_u, "upper limit (number or inf)")->required();
  eval->add_flag("--details", eval_details, "also print error estimate and method");

  // complete
  auto* complete = app.add_subcommand("complete", "the integral from 0 to infinity");
  EvalOptions complete_opts;
  complete_opts.attach(complete);
  std::string complete_method = "series";
  bool complete_details = false;
  complete->add_option("--method", complete_method, "series or match")
      ->check(CLI::IsMember({"series", "match"}))
      ->capture_default_str();
  complete->add_flag("--details", complete_details, "also print error estimate and method");

  // neumann-table
  auto* neumann = app.add_subcommand("neumann-table", "exact Neumann coefficients of the sine integral");
  int neumann_n = 3, neumann_terms = 11;
  neumann->add_option("--n", neumann_n, "phase power, 2..5")->check(CLI::Range(2, 5))->capture_default_str();
  neumann->add_option("--terms", neumann_terms, "number of coefficients")->capture_default_str();

  // reversion-table
  auto* reversion = app.add_subcommand("reversion-table", "series reversion coefficients");
  std::string rev_alpha, rev_family, rev_method = "multinomial";
  int rev_order = 10;
  reversion->add_option("--alpha", rev_alpha, "polynomial with zero constant term, e.g. \"x+x^3\"");
  reversion->add_option("--family", rev_family, "named family, e.g. x_plus_x3");
  reversion->add_option("--order", rev_order, "highest coefficient")->check(CLI::Range(1, 60))->capture_default_str();
  reversion->add_option("--method", rev_method, "multinomial or perturbative")->capture_default_str();

  // reference tables
  auto* tables = app.add_subcommand("paper-tables", "recompute the reference tables and compare");
  std::string which = "all";
  tables->add_option("--which", which, "infinity, neumann, complete, reversion, local, match or all")
      ->capture_default_str();

  // curve
  auto* curve = app.add_subcommand("curve", "sample the integral as a function of u");
  EvalOptions curve_opts;
  curve_opts.attach(curve);
  double curve_umax = 0.0;
  int curve_samples = 200;
  std::string curve_part = "imag";
  bool curve_extrema_flag = false;
  curve->add_option("--u-max", curve_umax, "largest upper limit")->required();
  curve->add_option("--samples", curve_samples, "number of intervals")->capture_default_str();
  curve->add_option("--part", curve_part, "real, imag or abs")->capture_default_str();
  curve->add_flag("--extrema", curve_extrema_flag, "list refined extrema instead of samples");

  // check
  auto* check = app.add_subcommand("check", "compare the evaluator with adaptive quadrature");
  EvalOptions check_opts;
  check_opts.attach(check);
  std::vector<std::string> check_u;
  double oracle_tol = 1e-13;
  check->add_option("--u", check_u, "upper limit(s)")->required();
  check->add_option("--oracle-tol", oracle_tol, "quadrature tolerance")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Format format = format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::table;
  try {
    if (*eval) {
      const ProblemSpec spec{parse_polynomial(eval_opts.p), parse_polynomial(eval_opts.phi), parse_limit(eval_u)};
      print_result(evaluate(spec, eval_opts.config()), format, eval_details, out);
      return 0;
    }
    if (*complete) {
      const EvalConfig cfg = complete_opts.config();
      const Polynomial p = parse_polynomial(complete_opts.p), phi = parse_polynomial(complete_opts.phi);
      if (complete_method == "series") {
        print_result(evaluate({p, phi, kInfinity}, cfg), format, complete_details, out);
      } else {
        const MatchResult m =
            match_infinity(p, phi, cfg.K, cfg.match_terms, {cfg.window_lo, cfg.window_hi, cfg.window_points});
        IntegralResult r;
        r.value = m.estimate.value;
        r.error_estimate = m.estimate.tail_estimate;
        r.method = Method::asymptotic_match;
        print_result(r, format, complete_details, out);
        if (complete_details && format == Format::table) out << "x      " << fmt::format("{:.6g}", m.x) << "\n";
      }
      return 0;
    }
    if (*neumann) return cmd_neumann(neumann_n, neumann_terms, format, out);
    if (*reversion) return cmd_reversion(rev_alpha, rev_family, rev_order, rev_method, format, out);
    if (*tables) return cmd_paper_tables(which, format, out);
    if (*curve) return cmd_curve(curve_opts, curve_umax, curve_samples, curve_part, curve_extrema_flag, format, out);
    if (*check) return cmd_check(check_opts, check_u, oracle_tol, format, out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace oscint::cli
