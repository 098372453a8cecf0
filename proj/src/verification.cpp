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

#include "betaquant/verification.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betaquant/gamma_functions.hpp"
#include "betaquant/incomplete_beta.hpp"
#include "betaquant/quantile.hpp"
#include "betaquant/quantile_framework.hpp"
#include "betaquant/series.hpp"

namespace betaquant {
namespace {

// Pinned acceptance tolerances.  Each constant gates exactly one named check;
// they are compile-time data, not configuration.
constexpr double kDefiningResidualTol = 1e-13;
constexpr double kClosedFormB1Tol = 1e-12;
constexpr double kReflectionIdentityTol = 2e-13;
constexpr double kReflectionQuantileTol = 5e-13;
constexpr double kQuantileLimitSlack = 1e-3;
constexpr double kPhiFlatB1Tol = 1e-10;
constexpr double kPhiLimitSlack = 2e-2;
constexpr double kGammaRoundTripTol = 1e-12;
constexpr double kEtaIntegralTol = 1e-8;
constexpr double kSum1Tol = 1e-8;
constexpr double kSum2Tol = 1e-7;
constexpr double kHyperTol = 1e-9;
constexpr double kYRouteTol = 1e-9;
constexpr double kDerivRouteTol = 1e-9;
constexpr double kYMonotoneTol = 1e-10;
constexpr double kEnvelopeRootTol = 1e-12;
constexpr double kPhiConvexityMargin = 1e-10;
constexpr double kPsiSecondFloor = -1e-8;
constexpr double kSeriesFdTolWide = 1e-4;
constexpr double kSeriesFdTolCore = 1e-5;
constexpr double kSeriesTailInfo = 1e-9;
constexpr double kFrameworkQuantileTol = 1e-3;
constexpr double kFrameworkMonotoneTol = 1e-10;
constexpr double kFrameworkLimitSlack = 2e-2;

constexpr std::size_t kFrameworkNodes = 20001;

// The strict-margin window: convexity margins and the tighter series/FD
// agreement are asserted on a in [0.1, 100] (grid points 0.104 .. 96.2).
bool in_core_window(double a) { return a >= 0.099 && a <= 101.0; }

std::string describe(
    std::initializer_list<std::pair<const char*, double>> items) {
  std::string out;
  char buf[64];
  for (const auto& item : items) {
    std::snprintf(buf, sizeof buf, "%s%s=%.6g", out.empty() ? "" : ", ",
                  item.first, item.second);
    out += buf;
  }
  return out;
}

// Tracks the worst (largest or smallest) observed value and where it
// happened.
struct Extreme {
  bool set = false;
  double value = 0.0;
  std::string witness;

  void consider_max(double v, const std::string& w) {
    if (!set || v > value) {
      set = true;
      value = v;
      witness = w;
    }
  }
  void consider_min(double v, const std::string& w) {
    if (!set || v < value) {
      set = true;
      value = v;
      witness = w;
    }
  }
};

CheckRecord make_record(const char* name, const char* params,
                        const Extreme& worst, double tolerance, bool pass,
                        bool informational = false) {
  CheckRecord record;
  record.name = name;
  record.params = params;
  record.residual = worst.value;
  record.tolerance = tolerance;
  record.pass = pass && worst.set;
  record.witness = worst.set ? worst.witness : "no points evaluated";
  record.informational = informational;
  return record;
}

double solve_psi(double a, double b, double p, const ToleranceConfig& tol) {
  return quantile(BetaParams{a, b, p}, tol).psi;
}

DensityFamily beta_family(double b) {
  DensityFamily fam;
  // lo keeps log(x) finite at every node; the omitted mass is O(1e-9).
  fam.lo = 1e-9;
  fam.hi = 1.0;
  fam.density = [b](double a, double x) {
    return std::pow(x, a - 1.0) * std::pow(1.0 - x, b - 1.0);
  };
  fam.log_deriv_a = [](double, double x) { return std::log(x); };
  return fam;
}

DensityFamily exp_form_family(double b) {
  DensityFamily fam;
  fam.lo = 0.0;
  fam.hi = 60.0;
  fam.density = [b](double a, double x) { return exp_form_density(a, b, x); };
  fam.log_deriv_a = [b](double a, double x) {
    // d/da log f = -((b-1)/a) * t/(e^t - 1) with t = x/a; the ratio is 1 at
    // t = 0 and underflows to 0 once e^t overflows.
    const double t = x / a;
    double ratio = 1.0;
    if (t >= 1e-12) {
      const double em = std::expm1(t);
      ratio = std::isinf(em) ? 0.0 : t / em;
    }
    return -((b - 1.0) / a) * ratio;
  };
  return fam;
}

}  // namespace

std::vector<double> standard_a_grid() {
  std::vector<double> grid(60);
  const double lo = std::log(1e-2);
  const double hi = std::log(1e3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / 59.0);
  }
  grid.front() = 1e-2;
  grid.back() = 1e3;
  return grid;
}

std::vector<double> standard_b_grid() {
  return {0.3, 0.5, 0.9, 1.0, 1.5, 3.0, 7.0};
}

std::vector<double> standard_p_grid() { return {0.1, 0.5, 0.9}; }

std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const ToleranceConfig& tol) {
  tol.validate();
  if (!(spec.b > 0.0) || !(spec.p > 0.0 && spec.p < 1.0) ||
      !(spec.a_min > 0.0) || !(spec.a_max > spec.a_min) || spec.points < 2) {
    throw std::domain_error("run_sweep: invalid sweep spec");
  }
  std::vector<SweepRow> rows;
  rows.reserve(spec.points);
  const double llo = std::log(spec.a_min);
  const double lhi = std::log(spec.a_max);
  const double h = tol.fd_rel_step;
  for (std::size_t i = 0; i < spec.points; ++i) {
    const double frac =
        static_cast<double>(i) / static_cast<double>(spec.points - 1);
    double a = spec.scale == SweepScale::log
                   ? std::exp(llo + (lhi - llo) * frac)
                   : spec.a_min + (spec.a_max - spec.a_min) * frac;
    if (i == 0) a = spec.a_min;
    if (i + 1 == spec.points) a = spec.a_max;
    const BetaParams params{a, spec.b, spec.p};
    const QuantileResult root = quantile(params, tol);
    const double psim = solve_psi(a * (1.0 - h), spec.b, spec.p, tol);
    const double psip = solve_psi(a * (1.0 + h), spec.b, spec.p, tol);
    SweepRow row;
    row.a = a;
    row.q = root.q;
    row.log_q = -root.psi;
    row.phi = a * root.psi;
    row.psi_prime_series = psi_prime_series(params, tol).first;
    row.psi_second_fd =
        (psip - 2.0 * root.psi + psim) / ((a * h) * (a * h));
    rows.push_back(row);
  }
  return rows;
}

VerificationReport run_identities(const ToleranceConfig& tol) {
  tol.validate();
  VerificationReport report;
  report.suite = "identities";
  report.tolerances = tol;
  const std::vector<double> as = standard_a_grid();
  const std::vector<double> bs = standard_b_grid();
  const std::vector<double> ps = standard_p_grid();

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        for (double a : as) {
          const QuantileResult root = quantile(BetaParams{a, b, p}, tol);
          worst.consider_max(std::abs(root.residual),
                             describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/defining_equation",
        "|I(q;a,b) - p| over the full b x p x 60-pt log a-grid", worst,
        kDefiningResidualTol, worst.value <= kDefiningResidualTol));
  }

  {
    Extreme worst;
    for (double p : ps) {
      for (double a : as) {
        const QuantileResult root = quantile(BetaParams{a, 1.0, p}, tol);
        const double exact = std::exp(std::log(p) / a);
        worst.consider_max(std::abs(root.q - exact),
                           describe({{"a", a}, {"p", p}}));
      }
    }
    report.checks.push_back(make_record(
        "identities/closed_form_b1",
        "|q - p^{1/a}| at b = 1 over p x 60-pt log a-grid", worst,
        kClosedFormB1Tol, worst.value <= kClosedFormB1Tol));
  }

  {
    Extreme worst;
    const double xs[] = {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99};
    const double shapes[] = {0.3, 1.0, 2.0, 5.0, 20.0};
    for (double x : xs) {
      for (double sa : shapes) {
        for (double sb : shapes) {
          const double lhs = reg_inc_beta(x, BetaParams{sa, sb, 0.5});
          const double rhs = reg_inc_beta(1.0 - x, BetaParams{sb, sa, 0.5});
          worst.consider_max(std::abs(lhs + rhs - 1.0),
                             describe({{"x", x}, {"a", sa}, {"b", sb}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/reflection_function",
        "|I(x;a,b) + I(1-x;b,a) - 1| over x x shape x shape grids", worst,
        kReflectionIdentityTol, worst.value <= kReflectionIdentityTol));
  }

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        for (double a : as) {
          const QuantileResult mirrored =
              quantile_wrt_b(BetaParams{a, b, p}, tol);
          worst.consider_max(std::abs(mirrored.residual),
                             describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/reflection_quantile",
        "defining residual of the mirrored solve 1 - q_{1-p}(b,a)", worst,
        kReflectionQuantileTol, worst.value <= kReflectionQuantileTol));
  }

  {
    Extreme worst;
    const double eta_bs[] = {0.3, 0.5, 1.0, 2.0, 2.5, 3.0, 3.7, 5.0};
    for (double b : eta_bs) {
      worst.consider_max(std::abs(eta_integral_identity(b, tol)),
                         describe({{"b", b}}));
    }
    report.checks.push_back(make_record(
        "identities/eta_integral_zero",
        "|int_0^inf eta| for b in {0.3,0.5,1,2,2.5,3,3.7,5}", worst,
        kEtaIntegralTol, worst.value <= kEtaIntegralTol));
  }

  {
    Extreme worst;
    const int ns[] = {0, 1, 2, 5};
    const double sum_bs[] = {0.5, 0.7, 1.5, 2.0, 2.5, 3.0};
    for (int n : ns) {
      for (double b : sum_bs) {
        worst.consider_max(sum1_check(n, b, tol),
                           describe({{"n", static_cast<double>(n)}, {"b", b}}));
      }
    }
    report.checks.push_back(make_record(
        "identities/sum1_zero",
        "|sum_k C(b-1,k)(-1)^k/(n+b-k)| for n in {0,1,2,5}", worst, kSum1Tol,
        worst.value <= kSum1Tol));
  }

  {
    Extreme worst;
    const int ns[] = {0, 1, 2, 5};
    const double sum_bs[] = {0.5, 0.7, 1.5, 2.0, 2.5, 3.0};
    for (int n : ns) {
      for (double b : sum_bs) {
        const double rounded = std::round(b);
        const bool integer_b = std::abs(b - rounded) < 1e-12;
        if (integer_b && static_cast<double>(n) >= rounded) continue;
        worst.consider_max(sum2_check(n, b, tol),
                           describe({{"n", static_cast<double>(n)}, {"b", b}}));
      }
    }
    report.checks.push_back(make_record(
        "identities/sum2_match",
        "partial-fraction rearrangement residual, n in {0,1,2,5}", worst,
        kSum2Tol, worst.value <= kSum2Tol));
  }

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        for (double a : as) {
          worst.consider_max(hyper1_check(BetaParams{a, b, p}, tol),
                             describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/hypergeometric_expansion",
        "relative residual of q^a sum_n m_n q^n/(a+n) = p B(a,b)", worst,
        kHyperTol, worst.value <= kHyperTol));
  }

  {
    Extreme worst;
    const double psis[] = {0.07, 0.5, 2.0, 10.0, 20.0};
    const double cs[] = {0.0, 0.5, 1.0, 3.0, 7.3};
    const double ybs[] = {0.3, 0.9, 1.5, 3.0, 7.0};
    for (double psi : psis) {
      for (double c : cs) {
        for (double b : ybs) {
          const double y1 = y_ratio(c, psi, b, tol);
          const double y2 = y_ratio_alt(c, psi, b, tol);
          worst.consider_max(std::abs(y1 - y2) / std::abs(y1),
                             describe({{"c", c}, {"psi", psi}, {"b", b}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/y_route_agreement",
        "v-space vs x-space ratio integral, relative gap", worst, kYRouteTol,
        worst.value <= kYRouteTol));
  }

  {
    Extreme worst;
    const double deriv_as[] = {0.2, 1.0, 5.0};
    for (double a : deriv_as) {
      for (double b : bs) {
        for (double p : ps) {
          const BetaParams params{a, b, p};
          const QuantileResult root = quantile(params, tol);
          if (root.psi < 0.05 || root.psi > 23.0) continue;
          const double qp = q_prime_series(params, tol);
          const double pp = psi_prime_series(params, tol).first;
          worst.consider_max(std::abs(qp + root.q * pp) / std::abs(qp),
                             describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/derivative_route_agreement",
        "|q' + q psi'|/|q'| where both series routes apply", worst,
        kDerivRouteTol, worst.value <= kDerivRouteTol));
  }

  return report;
}

VerificationReport run_monotonicity(const ToleranceConfig& tol) {
  tol.validate();
  VerificationReport report;
  report.suite = "monotonicity";
  report.tolerances = tol;
  const std::vector<double> as = standard_a_grid();
  const std::vector<double> bs = standard_b_grid();
  const std::vector<double> ps = standard_p_grid();

  {
    Extreme worst;  // most positive psi step; strict decrease wants all < 0
    for (double b : bs) {
      for (double p : ps) {
        double prev = solve_psi(as[0], b, p, tol);
        for (std::size_t i = 1; i < as.size(); ++i) {
          const double cur = solve_psi(as[i], b, p, tol);
          worst.consider_max(cur - prev,
                             describe({{"a", as[i]}, {"b", b}, {"p", p}}));
          prev = cur;
        }
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/quantile_increasing",
        "psi = -log q strictly decreasing in a (so q strictly increases)",
        worst, 0.0, worst.value < 0.0));
  }

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        const double q_small = quantile(BetaParams{1e-5, b, p}, tol).q;
        worst.consider_max(q_small, describe({{"a", 1e-5}, {"b", b}, {"p", p}}));
        const double tail = -std::expm1(-solve_psi(1e5, b, p, tol));
        worst.consider_max(tail, describe({{"a", 1e5}, {"b", b}, {"p", p}}));
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/quantile_limits",
        "q(1e-5) and 1 - q(1e5) both under the limit slack", worst,
        kQuantileLimitSlack, worst.value <= kQuantileLimitSlack));
  }

  {
    Extreme worst;  // sign(b-1) * (phi_i - phi_{i+1}); strict wants all < 0
    for (double b : bs) {
      if (b == 1.0) continue;
      const double dir = b > 1.0 ? 1.0 : -1.0;
      for (double p : ps) {
        double prev = as[0] * solve_psi(as[0], b, p, tol);
        for (std::size_t i = 1; i < as.size(); ++i) {
          const double cur = as[i] * solve_psi(as[i], b, p, tol);
          worst.consider_max(dir * (prev - cur),
                             describe({{"a", as[i]}, {"b", b}, {"p", p}}));
          prev = cur;
        }
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/phi_direction",
        "phi = -a log q strictly monotone, direction sign(b-1)", worst, 0.0,
        worst.value < 0.0));
  }

  {
    Extreme worst;
    for (double p : ps) {
      for (double a : as) {
        const double phi = a * solve_psi(a, 1.0, p, tol);
        worst.consider_max(std::abs(phi + std::log(p)),
                           describe({{"a", a}, {"p", p}}));
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/phi_flat_b1", "|phi + log p| at b = 1 over the a-grid",
        worst, kPhiFlatB1Tol, worst.value <= kPhiFlatB1Tol));
  }

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        const double phi = 1e-4 * solve_psi(1e-4, b, p, tol);
        worst.consider_max(std::abs(phi + std::log(p)),
                           describe({{"b", b}, {"p", p}}));
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/phi_limit_small_a", "|phi(1e-4) + log p|", worst,
        kPhiLimitSlack, worst.value <= kPhiLimitSlack));
  }

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        const double gamma_b = gamma_quantile(GammaQuantileQuery{b, 1.0 - p}, tol);
        const double phi = 1e4 * solve_psi(1e4, b, p, tol);
        worst.consider_max(std::abs(phi - gamma_b),
                           describe({{"b", b}, {"p", p}}));
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/phi_limit_large_a",
        "|phi(1e4) - gamma_quantile(b, 1-p)|", worst, kPhiLimitSlack,
        worst.value <= kPhiLimitSlack));
  }

  {
    Extreme worst;
    for (double b : bs) {
      for (double p : ps) {
        const double gamma_b = gamma_quantile(GammaQuantileQuery{b, 1.0 - p}, tol);
        worst.consider_max(std::abs(reg_lower_gamma(b, gamma_b) - (1.0 - p)),
                           describe({{"b", b}, {"p", p}}));
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/gamma_roundtrip",
        "|P(b, gamma_quantile(b, 1-p)) - (1-p)|", worst, kGammaRoundTripTol,
        worst.value <= kGammaRoundTripTol));
  }

  {
    Extreme worst;  // Y must increase with psi when b > 1
    const double ybs[] = {1.5, 3.0, 7.0};
    const double cs[] = {0.5, 1.0, 4.0};
    for (double b : ybs) {
      for (double c : cs) {
        double prev = y_ratio(c, 0.1, b, tol);
        for (int j = 1; j < 50; ++j) {
          const double psi = 0.1 + 4.9 * static_cast<double>(j) / 49.0;
          const double cur = y_ratio(c, psi, b, tol);
          worst.consider_max(prev - cur,
                             describe({{"b", b}, {"c", c}, {"psi", psi}}));
          prev = cur;
        }
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/y_increasing_in_psi",
        "ratio integral nondecreasing in psi for b in {1.5,3,7}", worst,
        kYMonotoneTol, worst.value <= kYMonotoneTol));
  }

  {
    Extreme worst;  // Y must decrease as c grows
    const double ybs[] = {1.5, 3.0, 7.0};
    const double psis[] = {0.5, 2.0};
    const double cs[] = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
    for (double b : ybs) {
      for (double psi : psis) {
        double prev = y_ratio(cs[0], psi, b, tol);
        for (std::size_t j = 1; j < sizeof cs / sizeof cs[0]; ++j) {
          const double cur = y_ratio(cs[j], psi, b, tol);
          worst.consider_max(cur - prev,
                             describe({{"b", b}, {"c", cs[j]}, {"psi", psi}}));
          prev = cur;
        }
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/y_decreasing_in_c",
        "ratio integral nonincreasing in the exponent shift c", worst,
        kYMonotoneTol, worst.value <= kYMonotoneTol));
  }

  {
    Extreme worst_root;
    bool signs_ok = true;
    std::string sign_witness;
    for (double b : bs) {
      const WRootResult root = find_rho(b);
      const double scale =
          std::exp(root.rho) * (1.0 + root.rho) + b * root.rho + 1.0;
      worst_root.consider_max(std::abs(w_eval(root.rho, b)) / scale,
                              describe({{"b", b}}));
      if (!(root.w_max_location > 0.0 && root.w_max_location < root.rho &&
            w_eval(root.w_max_location, b) > 0.0)) {
        signs_ok = false;
        sign_witness = describe({{"b", b}, {"x", root.w_max_location}});
      }
      for (int j = 1; j <= 25; ++j) {
        const double x_left = root.rho * static_cast<double>(j) / 26.0;
        if (!(w_eval(x_left, b) > 0.0)) {
          signs_ok = false;
          sign_witness = describe({{"b", b}, {"x", x_left}});
        }
        const double x_right =
            root.rho * (1.0 + static_cast<double>(j) / 10.0);
        if (!(w_eval(x_right, b) < 0.0)) {
          signs_ok = false;
          sign_witness = describe({{"b", b}, {"x", x_right}});
        }
      }
    }
    CheckRecord record = make_record(
        "monotonicity/envelope_sign_pattern",
        "w > 0 on (0, rho), w(rho) = 0 (scaled), w < 0 past rho", worst_root,
        kEnvelopeRootTol,
        signs_ok && worst_root.value <= kEnvelopeRootTol);
    if (!signs_ok) record.witness = sign_witness;
    report.checks.push_back(record);
  }

  {
    Extreme worst;  // consecutive h0 step; strict decrease wants all < 0
    const double hbs[] = {0.5, 1.0, 3.0};
    for (double b : hbs) {
      const double rho = find_rho(b).rho;
      double prev = h0_eval(0.0, b);
      for (int j = 1; j <= 100; ++j) {
        const double s = rho * static_cast<double>(j) / 101.0;
        const double cur = h0_eval(s, b);
        worst.consider_max(cur - prev, describe({{"b", b}, {"s", s}}));
        prev = cur;
      }
    }
    report.checks.push_back(make_record(
        "monotonicity/envelope_h0_decreasing",
        "h0(s) = s w(s)/(e^s-1)^2 strictly decreasing on (0, rho)", worst,
        0.0, worst.value < 0.0));
  }

  return report;
}

VerificationReport run_convexity(const ToleranceConfig& tol) {
  tol.validate();
  VerificationReport report;
  report.suite = "convexity";
  report.tolerances = tol;
  const std::vector<double> as = standard_a_grid();
  const std::vector<double> ps = standard_p_grid();
  const double h = tol.fd_rel_step;

  const auto phi_second = [&](double a, double b, double p) {
    const double phim = a * (1.0 - h) * solve_psi(a * (1.0 - h), b, p, tol);
    const double phi0 = a * solve_psi(a, b, p, tol);
    const double phip = a * (1.0 + h) * solve_psi(a * (1.0 + h), b, p, tol);
    return (phip - 2.0 * phi0 + phim) / ((a * h) * (a * h));
  };

  {
    Extreme margin;  // minimum second difference; must stay above the margin
    const double convex_bs[] = {0.3, 0.5, 0.9};
    for (double b : convex_bs) {
      for (double p : ps) {
        for (double a : as) {
          if (!in_core_window(a)) continue;
          margin.consider_min(phi_second(a, b, p),
                              describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "convexity/phi_second_difference",
        "central second difference of phi(a), b < 1, a in [0.1, 100]", margin,
        kPhiConvexityMargin, margin.value >= kPhiConvexityMargin));
  }

  {
    Extreme top;  // maximum second difference; concavity expects all < 0
    const double concave_bs[] = {1.5, 3.0, 7.0};
    for (double b : concave_bs) {
      for (double p : ps) {
        for (double a : as) {
          if (!in_core_window(a)) continue;
          top.consider_max(phi_second(a, b, p),
                           describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "convexity/phi_concave_b_above_one",
        "exploratory: phi(a) concave for b > 1, a in [0.1, 100]", top, 0.0,
        top.value < 0.0, /*informational=*/true));
  }

  return report;
}

VerificationReport run_logconcavity(const ToleranceConfig& tol) {
  tol.validate();
  VerificationReport report;
  report.suite = "logconcavity";
  report.tolerances = tol;
  const std::vector<double> as = standard_a_grid();
  const std::vector<double> bs = standard_b_grid();
  const std::vector<double> ps = standard_p_grid();
  const double h = tol.fd_rel_step;

  Extreme floor_min;      // min psi'' over everything
  Extreme interior_min;   // min psi'' at b != 1, interior a
  Extreme prime_max;      // max psi' (series); negativity wants all < 0
  Extreme wide_rel;       // series vs FD, whole grid
  Extreme core_rel;       // series vs FD, a in [0.1, 100]
  Extreme tail_max;       // reported tail estimates

  for (double b : bs) {
    for (double p : ps) {
      for (std::size_t i = 0; i < as.size(); ++i) {
        const double a = as[i];
        const std::string where = describe({{"a", a}, {"b", b}, {"p", p}});
        const double psi0 = solve_psi(a, b, p, tol);
        const double psim = solve_psi(a * (1.0 - h), b, p, tol);
        const double psip = solve_psi(a * (1.0 + h), b, p, tol);
        const double second =
            (psip - 2.0 * psi0 + psim) / ((a * h) * (a * h));
        const double fd = (psip - psim) / (2.0 * a * h);
        const auto series = psi_prime_series(BetaParams{a, b, p}, tol);

        floor_min.consider_min(second, where);
        if (b != 1.0 && i > 0 && i + 1 < as.size()) {
          interior_min.consider_min(second, where);
        }
        prime_max.consider_max(series.first, where);
        const double rel = std::abs(series.first - fd) / std::abs(fd);
        wide_rel.consider_max(rel, where);
        if (in_core_window(a)) core_rel.consider_max(rel, where);
        tail_max.consider_max(series.second.tail_estimate, where);
      }
    }
  }

  report.checks.push_back(make_record(
      "logconcavity/psi_second_floor",
      "central second difference of psi(a) never below the noise floor",
      floor_min, kPsiSecondFloor, floor_min.value >= kPsiSecondFloor));
  report.checks.push_back(make_record(
      "logconcavity/psi_second_interior_positive",
      "psi'' > 0 strictly at interior grid points, b != 1", interior_min, 0.0,
      interior_min.value > 0.0));
  report.checks.push_back(make_record(
      "logconcavity/psi_prime_negative",
      "series derivative psi'(a) < 0 over the full grid", prime_max, 0.0,
      prime_max.value < 0.0));
  report.checks.push_back(make_record(
      "logconcavity/series_vs_fd_wide",
      "relative gap between series psi' and central FD, full grid", wide_rel,
      kSeriesFdTolWide, wide_rel.value <= kSeriesFdTolWide));
  report.checks.push_back(make_record(
      "logconcavity/series_vs_fd_core",
      "relative gap between series psi' and central FD, a in [0.1, 100]",
      core_rel, kSeriesFdTolCore, core_rel.value <= kSeriesFdTolCore));
  report.checks.push_back(make_record(
      "logconcavity/series_tail_estimate",
      "largest reported relative tail estimate of the derivative series",
      tail_max, kSeriesTailInfo, tail_max.value <= kSeriesTailInfo,
      /*informational=*/true));

  return report;
}

VerificationReport run_framework(const ToleranceConfig& tol) {
  tol.validate();
  VerificationReport report;
  report.suite = "framework";
  report.tolerances = tol;
  const std::vector<double> ps = standard_p_grid();

  {
    Extreme worst;
    const double fbs[] = {1.5, 3.0};
    const double fas[] = {1.0, 2.0, 5.0, 10.0};
    for (double b : fbs) {
      const DensityFamily fam = beta_family(b);
      for (double a : fas) {
        const DiscretizedMeasure measure = discretize(fam, a, kFrameworkNodes);
        for (double p : ps) {
          const double qd = measure_quantile(measure, p);
          const double qe = quantile(BetaParams{a, b, p}, tol).q;
          worst.consider_max(std::abs(qd - qe),
                             describe({{"a", a}, {"b", b}, {"p", p}}));
        }
      }
    }
    report.checks.push_back(make_record(
        "framework/beta_quantile_consistency",
        "discretized beta quantile vs root-solved quantile, 20001 nodes",
        worst, kFrameworkQuantileTol, worst.value <= kFrameworkQuantileTol));
  }

  {
    const DensityFamily fam = beta_family(3.0);
    const std::vector<double> avals{1.0, 2.0, 5.0, 10.0};
    const FrameworkCheckResult res = ratio_monotonicity_check(
        fam, avals, [](double x) { return x <= 0.35 ? 1.0 : 0.0; },
        [](double) { return 1.0; }, kFrameworkNodes);
    Extreme worst;
    worst.consider_max(res.worst_violation, "a in {1,2,5,10}");
    report.checks.push_back(make_record(
        "framework/ratio_indicator_decreasing",
        "E[1_{x<=0.35}] under the beta family decreases in a", worst,
        kFrameworkMonotoneTol, res.hypothesis_ok && res.conclusion_ok));
  }

  {
    const DensityFamily fam = beta_family(3.0);
    const std::vector<double> avals{1.0, 2.0, 5.0, 10.0};
    const auto weight = [](double x) { return 1.0 + x; };
    const FrameworkCheckResult res = ratio_monotonicity_check(
        fam, avals, weight, weight, kFrameworkNodes);
    Extreme worst;
    worst.consider_max(res.worst_violation, "a in {1,2,5,10}");
    report.checks.push_back(make_record(
        "framework/ratio_equal_weights_constant",
        "u = v forces the ratio of integrals to stay constant", worst,
        kFrameworkMonotoneTol, res.hypothesis_ok && res.conclusion_ok));
  }

  {
    DensityFamily fam;
    fam.lo = 0.0;
    fam.hi = 1.0;
    fam.density = [](double a, double x) { return std::exp(a * x); };
    fam.log_deriv_a = [](double, double x) { return x; };
    const std::vector<double> avals{0.5, 1.0, 2.0, 4.0};
    const FrameworkCheckResult res = ratio_monotonicity_check(
        fam, avals, [](double x) { return x; }, [](double) { return 1.0; },
        kFrameworkNodes);
    Extreme worst;
    worst.consider_max(res.worst_violation, "a in {0.5,1,2,4}");
    report.checks.push_back(make_record(
        "framework/ratio_exponential_increasing",
        "mean of x under f = e^{ax} increases in a", worst,
        kFrameworkMonotoneTol, res.hypothesis_ok && res.conclusion_ok));
  }

  {
    const DensityFamily fam = beta_family(3.0);
    const std::vector<double> avals{1.0, 2.0, 5.0, 10.0};
    const FrameworkCheckResult res =
        quantile_monotonicity_check(fam, avals, 0.5, kFrameworkNodes);
    Extreme worst;
    worst.consider_max(res.worst_violation, "a in {1,2,5,10}, p=0.5");
    report.checks.push_back(make_record(
        "framework/quantile_monotone_beta",
        "beta-family median increases with the first parameter", worst,
        kFrameworkMonotoneTol, res.hypothesis_ok && res.conclusion_ok));
  }

  {
    const DensityFamily fam = exp_form_family(3.0);
    const std::vector<double> avals{1.0, 5.0, 20.0, 100.0};
    const FrameworkCheckResult res =
        quantile_monotonicity_check(fam, avals, 0.9, kFrameworkNodes);
    Extreme worst;
    worst.consider_max(res.worst_violation, "a in {1,5,20,100}, level=0.9");
    report.checks.push_back(make_record(
        "framework/quantile_monotone_exp_form",
        "substituted-variable family quantile increases in a (b = 3)", worst,
        kFrameworkMonotoneTol, res.hypothesis_ok && res.conclusion_ok));
  }

  {
    Extreme worst;
    bool ok = true;
    const DensityFamily fam = exp_form_family(3.0);
    const std::vector<double> avals{0.01, 0.005, 0.002};
    for (double p : ps) {
      const ConvergenceResult conv = quantile_convergence_check(
          fam, avals, 1.0 - p, -std::log(p), kFrameworkLimitSlack,
          kFrameworkNodes);
      ok = ok && conv.within_slack;
      worst.consider_max(conv.worst_gap, describe({{"p", p}}));
    }
    report.checks.push_back(make_record(
        "framework/exp_form_limit_small_a",
        "(1-p)-quantile of the substituted family -> -log p as a -> 0", worst,
        kFrameworkLimitSlack, ok));
  }

  {
    Extreme worst;
    bool ok = true;
    const DensityFamily fam = exp_form_family(3.0);
    const std::vector<double> avals{500.0, 1000.0, 2000.0};
    for (double p : ps) {
      const double limit = gamma_quantile(GammaQuantileQuery{3.0, 1.0 - p}, tol);
      const ConvergenceResult conv = quantile_convergence_check(
          fam, avals, 1.0 - p, limit, kFrameworkLimitSlack, kFrameworkNodes);
      ok = ok && conv.within_slack;
      worst.consider_max(conv.worst_gap, describe({{"p", p}}));
    }
    report.checks.push_back(make_record(
        "framework/exp_form_limit_large_a",
        "(1-p)-quantile -> gamma quantile (shape b = 3) as a -> infinity",
        worst, kFrameworkLimitSlack, ok));
  }

  {
    const DensityFamily fam = beta_family(3.0);
    const double coarse =
        measure_quantile(discretize(fam, 2.0, 5001), 0.5);
    const double fine =
        measure_quantile(discretize(fam, 2.0, kFrameworkNodes), 0.5);
    Extreme worst;
    worst.consider_max(std::abs(coarse - fine), "a=2, b=3, p=0.5");
    report.checks.push_back(make_record(
        "framework/grid_refinement",
        "median shift between 5001-node and 20001-node discretizations",
        worst, 0.0, true, /*informational=*/true));
  }

  return report;
}

VerificationReport run_all(const ToleranceConfig& tol) {
  VerificationReport report;
  report.suite = "all";
  report.tolerances = tol;
  const VerificationReport parts[] = {
      run_identities(tol), run_monotonicity(tol), run_convexity(tol),
      run_logconcavity(tol), run_framework(tol)};
  for (const VerificationReport& part : parts) {
    report.checks.insert(report.checks.end(), part.checks.begin(),
                         part.checks.end());
  }
  return report;
}

}  // namespace betaquant
