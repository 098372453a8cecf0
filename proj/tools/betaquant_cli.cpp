// Copyright 2026 The betaquant authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface.  Exit codes: 0 success, 1 failed verification check,
// 2 parse/domain error, 3 convergence failure, 4 I/O failure.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betaquant/errors.hpp"
#include "betaquant/quantile.hpp"
#include "betaquant/report.hpp"
#include "betaquant/series.hpp"
#include "betaquant/tolerances.hpp"
#include "betaquant/verification.hpp"

namespace {

struct IoError {
  std::string message;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size()) {
      throw IoError{"short write to stdout"};
    }
    std::fflush(stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError{"cannot open output file: " + out_path};
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out.good()) throw IoError{"write failed: " + out_path};
}

// Symmetric relative gap; 0 when both values are exactly 0.
double rel_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

int run_cli(int argc, char** argv) {
  betaquant::ToleranceConfig tol;
  double tol_quantile = tol.quantile_abs_tol;
  double tol_series = tol.series_tail_tol;
  std::string out_path;
  bool as_json = false;

  CLI::App app{
      "betaquant: beta-distribution quantile curves q_p(a, b) in the first "
      "shape parameter -- evaluation, derivative series, figure sweeps, and "
      "property verification"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--tol-quantile", tol_quantile,
                 "absolute residual target for quantile solves")
      ->capture_default_str();
  app.add_option("--tol-series", tol_series,
                 "relative tail target for the derivative series")
      ->capture_default_str();
  app.add_option("--out", out_path,
                 "write output to this path instead of stdout");
  app.add_flag("--json", as_json,
               "emit a JSON record (quantile/derivative; verify always emits "
               "JSON, sweep always emits CSV)");

  auto* cmd_quantile =
      app.add_subcommand("quantile", "solve I(q; a, b) = p for q");
  double qa = 0.0, qb = 0.0, qp = 0.0;
  cmd_quantile->add_option("--a", qa, "first shape parameter")->required();
  cmd_quantile->add_option("--b", qb, "second shape parameter")->required();
  cmd_quantile->add_option("--p", qp, "quantile level in (0,1)")->required();

  auto* cmd_sweep =
      app.add_subcommand("sweep", "quantile curve over a, CSV output");
  double sb = 1.0, sp = 0.5, a_min = 1e-2, a_max = 1e3;
  std::size_t points = 60;
  std::string scale = "log";
  cmd_sweep->add_option("--b", sb, "second shape parameter")->required();
  cmd_sweep->add_option("--p", sp, "quantile level in (0,1)")->required();
  cmd_sweep->add_option("--a-min", a_min, "sweep start")
      ->capture_default_str();
  cmd_sweep->add_option("--a-max", a_max, "sweep end")->capture_default_str();
  cmd_sweep->add_option("--points", points, "grid size (>= 2)")
      ->capture_default_str();
  cmd_sweep->add_option("--scale", scale, "grid spacing: log or linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();

  auto* cmd_verify = app.add_subcommand(
      "verify", "run property suites and emit the JSON report");
  std::string selector = "all";
  cmd_verify
      ->add_option("suite", selector,
                   "identities|monotonicity|convexity|logconcavity|framework|"
                   "all (default all)")
      ->check(CLI::IsMember({"identities", "monotonicity", "convexity",
                             "logconcavity", "framework", "all"}));

  auto* cmd_derivative = app.add_subcommand(
      "derivative", "series derivative vs central finite differences");
  double da = 0.0, db = 0.0, dp = 0.0;
  cmd_derivative->add_option("--a", da, "first shape parameter")->required();
  cmd_derivative->add_option("--b", db, "second shape parameter")->required();
  cmd_derivative->add_option("--p", dp, "quantile level in (0,1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints help or the parse diagnostic itself; remap its exit codes
    // to the contract (0 for help, 2 for any parse failure).
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  tol.quantile_abs_tol = tol_quantile;
  tol.series_tail_tol = tol_series;
  tol.validate();

  if (*cmd_quantile) {
    const betaquant::BetaParams params{qa, qb, qp};
    const betaquant::QuantileResult result = betaquant::quantile(params, tol);
    const double phi = qa * result.psi;
    std::string text;
    if (as_json) {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["q"] = result.q;
      doc["psi"] = result.psi;
      doc["phi"] = phi;
      doc["residual"] = result.residual;
      doc["iterations"] = result.iterations;
      text = doc.dump(2) + "\n";
    } else {
      text = "q=" + format_double(result.q) + "\n" +
             "psi=" + format_double(result.psi) + "\n" +
             "phi=" + format_double(phi) + "\n" +
             "residual=" + format_double(result.residual) + "\n" +
             "iterations=" + std::to_string(result.iterations) + "\n";
    }
    emit(text, out_path);
    return 0;
  }

  if (*cmd_sweep) {
    betaquant::SweepSpec spec;
    spec.b = sb;
    spec.p = sp;
    spec.a_min = a_min;
    spec.a_max = a_max;
    spec.points = points;
    spec.scale = scale == "linear" ? betaquant::SweepScale::linear
                                   : betaquant::SweepScale::log;
    const std::vector<betaquant::SweepRow> rows =
        betaquant::run_sweep(spec, tol);
    std::string text = "a,q,log_q,phi,psi_prime_series,psi_second_fd\n";
    for (const betaquant::SweepRow& row : rows) {
      text += format_double(row.a);
      text += ',';
      text += format_double(row.q);
      text += ',';
      text += format_double(row.log_q);
      text += ',';
      text += format_double(row.phi);
      text += ',';
      text += format_double(row.psi_prime_series);
      text += ',';
      text += format_double(row.psi_second_fd);
      text += '\n';
    }
    if (sb > 1.0) {
      // Exploratory note only; never part of the CSV artifact or a gate.
      std::size_t negative = 0, nonnegative = 0;
      for (const betaquant::SweepRow& row : rows) {
        const double phi_second =
            row.a * row.psi_second_fd + 2.0 * row.psi_prime_series;
        if (phi_second < 0.0) {
          ++negative;
        } else {
          ++nonnegative;
        }
      }
      std::fprintf(stderr,
                   "conjecture (informational, b > 1): phi second-difference "
                   "sign pattern: %zu negative, %zu nonnegative of %zu\n",
                   negative, nonnegative, rows.size());
    }
    emit(text, out_path);
    return 0;
  }

  if (*cmd_verify) {
    betaquant::VerificationReport report;
    if (selector == "identities") {
      report = betaquant::run_identities(tol);
    } else if (selector == "monotonicity") {
      report = betaquant::run_monotonicity(tol);
    } else if (selector == "convexity") {
      report = betaquant::run_convexity(tol);
    } else if (selector == "logconcavity") {
      report = betaquant::run_logconcavity(tol);
    } else if (selector == "framework") {
      report = betaquant::run_framework(tol);
    } else {
      report = betaquant::run_all(tol);
    }
    emit(report.to_json_string(2), out_path);
    return report.overall_pass() ? 0 : 1;
  }

  if (*cmd_derivative) {
    const betaquant::BetaParams params{da, db, dp};
    const betaquant::QuantileResult root = betaquant::quantile(params, tol);
    const auto series = betaquant::psi_prime_series(params, tol);
    const double h = tol.fd_rel_step;
    const double psim =
        betaquant::quantile_psi({da * (1.0 - h), db, dp}, tol);
    const double psip =
        betaquant::quantile_psi({da * (1.0 + h), db, dp}, tol);
    const double fd = (psip - psim) / (2.0 * da * h);
    const double q_remark = betaquant::q_prime_series(params, tol);
    const double neg_q_psi = -root.q * series.first;
    const double neg_q_fd = -root.q * fd;
    const double gap_psi = rel_gap(series.first, fd);
    const double gap_q_psi = rel_gap(q_remark, neg_q_psi);
    const double gap_q_fd = rel_gap(q_remark, neg_q_fd);
    std::string text;
    if (as_json) {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["psi_prime_series"] = series.first;
      doc["psi_prime_fd"] = fd;
      doc["q_prime_remark"] = q_remark;
      doc["q_prime_neg_q_psi"] = neg_q_psi;
      doc["q_prime_neg_q_fd"] = neg_q_fd;
      doc["gap_psi_series_vs_fd"] = gap_psi;
      doc["gap_q_remark_vs_neg_q_psi"] = gap_q_psi;
      doc["gap_q_remark_vs_neg_q_fd"] = gap_q_fd;
      doc["terms_used"] = series.second.terms_used;
      doc["tail_estimate"] = series.second.tail_estimate;
      doc["converged"] = series.second.converged;
      text = doc.dump(2) + "\n";
    } else {
      text = "psi_prime_series=" + format_double(series.first) + "\n" +
             "psi_prime_fd=" + format_double(fd) + "\n" +
             "q_prime_remark=" + format_double(q_remark) + "\n" +
             "q_prime_neg_q_psi=" + format_double(neg_q_psi) + "\n" +
             "q_prime_neg_q_fd=" + format_double(neg_q_fd) + "\n" +
             "gap_psi_series_vs_fd=" + format_double(gap_psi) + "\n" +
             "gap_q_remark_vs_neg_q_psi=" + format_double(gap_q_psi) + "\n" +
             "gap_q_remark_vs_neg_q_fd=" + format_double(gap_q_fd) + "\n" +
             "terms_used=" + std::to_string(series.second.terms_used) + "\n" +
             "tail_estimate=" + format_double(series.second.tail_estimate) +
             "\n" +
             "converged=" + (series.second.converged ? "true" : "false") +
             "\n";
    }
    emit(text, out_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return 4;
  } catch (const betaquant::convergence_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
