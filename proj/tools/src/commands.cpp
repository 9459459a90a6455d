#include "pbt_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <pbt/bounds.hpp>
#include <pbt/density.hpp>
#include <pbt/dimension.hpp>
#include <pbt/gue.hpp>
#include <pbt/oracle.hpp>
#include <pbt/parallel.hpp>
#include <pbt/performance.hpp>
#include <pbt/schur_weyl.hpp>
#include <pbt/spectral.hpp>

namespace pbt::cli {

std::string IntRange::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

IntRange parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer range: '" + text + "'");
    }
    if (used != s.size()) throw UsageError("not an integer range: '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range: '" + text + "'");
  return r;
}

void validate(const RunConfig& c) {
  if (c.d.lo > c.d.hi || c.N.lo > c.N.hi) throw UsageError("empty range");
  if (c.d.lo < 1 || c.d.hi > 8) throw UsageError("--d must lie in [1, 8]");
  if (c.N.lo < 1 || c.N.hi > 500) throw UsageError("--N must lie in [1, 500]");
  if (c.exact_threshold < 0) throw UsageError("--exact-threshold must be >= 0");
  if (c.cd && !(std::isfinite(*c.cd) && *c.cd >= 0.0)) throw UsageError("--cd must be >= 0");
}

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(long v) const { return v; }
    nlohmann::json operator()(double v) const {
      // Keep the same 12 digits as the CSV; non-finite values become strings.
      if (!std::isfinite(v)) return format_double(v);
      return std::stod(format_double(v));
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

struct GridPoint {
  int d;
  int N;
};

std::vector<GridPoint> grid(const RunConfig& c) {
  std::vector<GridPoint> points;
  for (int d = c.d.lo; d <= c.d.hi; ++d)
    for (int N = c.N.lo; N <= c.N.hi; ++N) points.push_back({d, N});
  return points;
}

std::vector<std::string> header(const RunConfig& c, const std::string& command) {
  std::ostringstream config;
  config << "d=" << c.d.to_string() << " N=" << c.N.to_string() << " seed=" << c.seed
         << " samples=" << c.samples << " exact_threshold=" << c.exact_threshold;
  if (c.cd) config << " cd=" << format_double(*c.cd);
  if (c.optimal) config << " optimal=1";
  if (c.appendix_b) config << " appendix_b=1";
  return {std::string("pbt ") + kVersion, "command: " + command, "config: " + config.str(),
          "seed: " + std::to_string(c.seed)};
}

// Rows are computed in parallel into fixed slots, so output order is (d, N).
Table fill(Table table, const std::vector<GridPoint>& points,
           const std::function<std::vector<Cell>(const GridPoint&)>& row) {
  table.rows.resize(points.size());
  parallel_for(points.size(), [&](std::size_t i) { table.rows[i] = row(points[i]); });
  return table;
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (const auto& line : table.metadata) os << "# " << line << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::json doc;
  doc["metadata"] = table.metadata;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table, Format format) {
  if (format == Format::Json) {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

Table cmd_fidelity(const RunConfig& c) {
  validate(c);
  Table t;
  t.metadata = header(c, "fidelity");
  t.metadata.push_back("column F_std: exact (log-domain sum over diagrams)");
  t.metadata.push_back("column F_std_asym: asymptotic 1 - (d^2-1)/(4N), clamped to [0,1]");
  t.columns = {"d", "N", "F_std", "F_std_asym"};
  if (c.optimal) {
    t.metadata.push_back("column F_star_spectral: exact optimum over densities (Lanczos, tol 1e-12)");
    t.columns.push_back("F_star_spectral");
  }
  if (c.appendix_b) {
    t.metadata.push_back(
        "column F_appendix_b: exact fidelity of the ball density on appendix_b_N = d^2 floor(N/d^2) "
        "ports, empty when N < d^2");
    t.columns.push_back("F_appendix_b");
    t.columns.push_back("appendix_b_N");
  }
  return fill(std::move(t), grid(c), [&](const GridPoint& p) {
    const PerfPoint f = f_std(p.d, p.N);
    std::vector<Cell> row{long(p.d), long(p.N), f.value, *f.asymptote};
    if (c.optimal) row.emplace_back(optimal_fidelity_spectral(p.d, p.N).point.value);
    if (c.appendix_b) {
      if (p.N >= p.d * p.d) {
        const TruncatedDensity q = appendix_b_density(p.d, p.N);
        row.emplace_back(fidelity_of_density(q.density).value);
        row.emplace_back(long(q.effective_N));
      } else {
        row.emplace_back(std::monostate{});
        row.emplace_back(std::monostate{});
      }
    }
    return row;
  });
}

Table cmd_prob(const RunConfig& c) {
  validate(c);
  Table t;
  t.metadata = header(c, "prob");
  t.metadata.push_back("column p_epr: exact (sum over diagrams)");
  t.metadata.push_back("column p_star: exact rational");
  t.metadata.push_back(
      "column p_epr_asym: asymptotic 1 - sqrt(d/(N-1)) c_d, clamped, empty for N = 1");
  t.metadata.push_back("column c_d_source: exact (d <= 2), user (--cd) or monte-carlo (--seed, --samples)");
  t.columns = {"d", "N", "p_epr", "p_star", "p_epr_asym", "c_d", "c_d_source"};

  // One constant per d, fixed before the grid runs.
  std::vector<std::pair<double, std::string>> constants;
  for (int d = c.d.lo; d <= c.d.hi; ++d) {
    if (c.cd) {
      constants.emplace_back(*c.cd, "user");
    } else if (d == 1) {
      constants.emplace_back(0.0, "exact");
    } else if (d == 2) {
      constants.emplace_back(lambda_max_exact_d2(), "exact");
    } else {
      if (c.samples < 2) throw UsageError("--samples must be >= 2");
      constants.emplace_back(lambda_max_mean(d, c.seed, c.samples).mean_lambda_max, "monte-carlo");
    }
  }
  return fill(std::move(t), grid(c), [&](const GridPoint& p) {
    const auto& [cd, source] = constants[std::size_t(p.d - c.d.lo)];
    std::vector<Cell> row{long(p.d), long(p.N), p_epr(p.d, p.N).value, p_star(p.d, p.N).value};
    if (p.N >= 2) {
      row.emplace_back(p_epr_asymptote(p.d, p.N, cd));
    } else {
      row.emplace_back(std::monostate{});
    }
    row.emplace_back(cd);
    row.emplace_back(source);
    return row;
  });
}

Table cmd_bounds(const RunConfig& c) {
  validate(c);
  if (c.d.lo < 2) throw UsageError("bounds needs d >= 2");
  Table t;
  t.metadata = header(c, "bounds");
  t.metadata.push_back(
      "converse columns (upper bounds on F*): converse_full, converse_piecewise, converse_rootfid, "
      "ishizaka_asym, porttele; converse_piecewise_eps is the matching lower bound on the diamond error");
  t.metadata.push_back(
      "achievability columns (lower bounds on F*): achievability_std is exact; *_asym columns drop "
      "O(N^-3) terms and are clamped to [0,1], with the unclamped value in *_raw");
  t.metadata.push_back("diamond_error_from_F: 2(1 - achievability_std), an achievable error");
  t.columns = {"d",
               "N",
               "converse_full",
               "converse_piecewise",
               "converse_piecewise_eps",
               "piecewise_branch",
               "converse_rootfid",
               "ishizaka_asym",
               "porttele",
               "achievability_std",
               "achievability_laplacian_asym",
               "achievability_laplacian_asym_raw",
               "achievability_appB_asym",
               "achievability_appB_asym_raw",
               "diamond_error_from_F"};
  return fill(std::move(t), grid(c), [&](const GridPoint& p) {
    const BoundReport r = make_bound_report(p.d, p.N);
    const bool small = converse_piecewise(p.d, p.N).small_n_branch;
    return std::vector<Cell>{long(p.d),
                             long(p.N),
                             r.converse_full,
                             r.converse_piecewise,
                             r.converse_piecewise_eps,
                             std::string(small ? "sqrtN_over_d" : "quadratic"),
                             r.converse_rootfid,
                             r.ishizaka_converse_asym,
                             r.porttele,
                             r.achievability_std.clamped,
                             r.achievability_laplacian_asym.clamped,
                             r.achievability_laplacian_asym.raw,
                             r.achievability_appB_asym.clamped,
                             r.achievability_appB_asym.raw,
                             r.diamond_error_from_F};
  });
}

bool VerifyReport::all_passed() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

namespace {

std::string pair_name(const std::string& base, int d, int N) {
  return base + "(d=" + std::to_string(d) + ",N=" + std::to_string(N) + ")";
}

void oracle_checks(VerifyReport& report) {
  for (auto [d, N] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    CheckResult spec;
    spec.name = pair_name("spectrum_check", d, N);
    try {
      const SpectrumReport s = spectrum_check(d, N, 1e-10);
      spec.passed = true;
      spec.residual = s.max_mismatch;
      spec.detail = "norm=" + format_double(s.operator_norm);
    } catch (const SpectrumMismatch& e) {
      spec.residual = e.report().max_mismatch;
      spec.detail = e.what();
    }
    report.checks.push_back(spec);

    CheckResult pgm;
    pgm.name = pair_name("pgm_vs_f_std", d, N);
    const double oracle = pgm_fidelity(d, N).fidelity;
    const double formula = f_std(d, N).value;
    pgm.residual = std::fabs(oracle - formula);
    pgm.passed = pgm.residual <= 1e-9;
    pgm.detail = "pgm=" + format_double(oracle) + " f_std=" + format_double(formula);
    report.checks.push_back(pgm);
  }
}

void rmt_checks(VerifyReport& report, const RunConfig& c) {
  CheckResult check;
  check.name = "gue_lambda_max_mean(d=2)";
  if (c.samples < 2) throw UsageError("--samples must be >= 2");
  const GueSampleStats s = lambda_max_mean(2, c.seed, c.samples);
  const double deviation = std::fabs(s.mean_lambda_max - lambda_max_exact_d2());
  check.residual = deviation / s.standard_error;
  check.passed = deviation <= 5.0 * s.standard_error;
  check.detail = "mean=" + format_double(s.mean_lambda_max) +
                 " stderr=" + format_double(s.standard_error) + " residual in stderr units";
  report.checks.push_back(check);
}

void schur_weyl_checks(VerifyReport& report, const RunConfig& c) {
  CheckResult check;
  check.name = "schur_weyl_completeness(d<=5,n<=60)";
  check.passed = true;
  long failures = 0;
  for (int d = 1; d <= 5; ++d) {
    BigInt power = 1;
    for (int n = 0; n <= 60; ++n) {
      BigInt total = 0;
      for (const auto& alpha : enumerate_diagrams(d, n)) {
        total += specht_dim(alpha) * weyl_dim(d, alpha);
      }
      if (total != power) ++failures;
      if (n <= c.exact_threshold && n <= 20) {
        if (SchurWeylTable(d, n, c.exact_threshold).exact_total() != 1) ++failures;
      }
      power *= d;
    }
  }
  check.passed = failures == 0;
  check.residual = static_cast<double>(failures);
  check.detail = "failing (d, n) pairs counted in residual";
  report.checks.push_back(check);
}

}  // namespace

VerifyReport cmd_verify(const RunConfig& c) {
  const bool all = !c.quick && !c.rmt && !c.schurweyl;
  VerifyReport report;
  if (all || c.quick) oracle_checks(report);
  if (all || c.rmt) rmt_checks(report, c);
  if (all || c.schurweyl) schur_weyl_checks(report, c);
  return report;
}

void write_verify(std::ostream& os, const VerifyReport& report, Format format) {
  if (format == Format::Json) {
    nlohmann::json doc;
    doc["passed"] = report.all_passed();
    doc["checks"] = nlohmann::json::array();
    for (const auto& check : report.checks) {
      doc["checks"].push_back({{"name", check.name},
                               {"passed", check.passed},
                               {"residual", cell_json(check.residual)},
                               {"detail", check.detail}});
    }
    os << doc.dump(2) << '\n';
    return;
  }
  for (const auto& check : report.checks) {
    os << (check.passed ? "PASS " : "FAIL ") << check.name
       << " residual=" << format_double(check.residual) << " " << check.detail << '\n';
  }
  os << (report.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Port-based teleportation performance and bounds", "pbt"};
  app.require_subcommand(1);
  RunConfig config;
  std::string d_text = "2";
  std::string n_text = "1..10";
  std::string format_text = "csv";
  double cd = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", d_text, "local dimension, a value or a range a..b");
    sub->add_option("--N", n_text, "port count, a value or a range a..b");
    sub->add_option("--seed", config.seed, "Monte-Carlo seed");
    sub->add_option("--samples", config.samples, "Monte-Carlo sample count");
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out, "output file (default stdout)");
    sub->add_option("--exact-threshold", config.exact_threshold,
                    "largest n for exact rational Schur-Weyl tables");
  };
  CLI::App* fidelity = app.add_subcommand("fidelity", "standard and optimal entanglement fidelity");
  common(fidelity);
  fidelity->add_flag("--optimal", config.optimal, "add the optimal-density column");
  fidelity->add_flag("--appendix-b", config.appendix_b, "add the explicit ball-density column");
  CLI::App* prob = app.add_subcommand("prob", "probabilistic success probabilities");
  common(prob);
  CLI::Option* cd_option = prob->add_option("--cd", cd, "override E[lambda_max] for the asymptote");
  CLI::App* bounds = app.add_subcommand("bounds", "converse and achievability bounds");
  common(bounds);
  CLI::App* verify = app.add_subcommand("verify", "oracle, Monte-Carlo and identity checks");
  common(verify);
  verify->add_flag("--quick", config.quick, "oracle cross-checks on small cases");
  verify->add_flag("--rmt", config.rmt, "GUE Monte-Carlo self-test");
  verify->add_flag("--schurweyl", config.schurweyl, "dimension-sum identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "pbt: " << e.what() << '\n';
    return 2;
  }

  try {
    config.d = parse_range(d_text);
    config.N = parse_range(n_text);
    config.format = format_text == "json" ? Format::Json : Format::Csv;
    if (*cd_option) config.cd = cd;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) throw UsageError("cannot open --out " + config.out);
      sink = &file;
    }
    if (verify->parsed()) {
      config.command = "verify";
      const VerifyReport report = cmd_verify(config);
      write_verify(*sink, report, config.format);
      return report.all_passed() ? 0 : 1;
    }
    Table table;
    if (fidelity->parsed()) {
      config.command = "fidelity";
      table = cmd_fidelity(config);
    } else if (prob->parsed()) {
      config.command = "prob";
      table = cmd_prob(config);
    } else {
      config.command = "bounds";
      table = cmd_bounds(config);
    }
    write_table(*sink, table, config.format);
    return 0;
  } catch (const UsageError& e) {
    err << "pbt: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "pbt: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "pbt: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace pbt::cli
