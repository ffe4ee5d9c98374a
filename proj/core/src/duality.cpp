/*
   Copyright 2026 The cyclestab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cyclestab/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cyclestab/errors.hpp"

namespace cyclestab {

void validate(const AveragingSet& design) {
  if (design.a.empty()) throw std::invalid_argument("AveragingSet: coefficients must be non-empty");
  if (design.a.front() == Complex{0.0}) throw std::invalid_argument("AveragingSet: a_1 must be nonzero");
  if (design.cycle_length < 1) throw std::invalid_argument("AveragingSet: cycle length must be >= 1");
  Complex sum{0.0};
  for (auto ak : design.a) sum += ak;
  if (std::abs(sum - Complex{1.0}) > 1e-12) {
    std::ostringstream msg;
    msg << "AveragingSet: coefficients must sum to 1, got " << sum.real() << "+" << sum.imag() << "i";
    throw std::invalid_argument(msg.str());
  }
}

Poly design_polynomial(const AveragingSet& design) {
  std::vector<Complex> coeffs(design.a.rbegin(), design.a.rend());
  return Poly{std::move(coeffs)};
}

DualityBundle build_duality(const AveragingSet& design) {
  validate(design);
  const int n = design.order();
  DualityBundle bundle;
  bundle.p = design_polynomial(design);
  bundle.p_star = n_inverse(bundle.p, n - 1);
  bundle.q = multiply(monomial(1), pow(bundle.p_star, design.cycle_length));
  bundle.q_root = t_root_transform(bundle.p_star, design.cycle_length);
  return bundle;
}

Poly build_chi(const AveragingSet& design, Complex mu) {
  validate(design);
  if (mu == Complex{0.0}) {
    throw std::invalid_argument("build_chi: mu = 0 is degenerate (a cycle worth stabilizing has |mu| >= 1)");
  }
  const int n = design.order();
  const int T = design.cycle_length;
  const Poly p = design_polynomial(design);
  Poly chi = subtract(monomial((n - 1) * T + 1), scale(pow(p, T), mu));
  return chi;
}

namespace {

// Winding number of the sampled image of the unit circle under q - w.
// Returns false when a sample lands on (or numerically at) w.
bool winding_number(const Poly& q, Complex w, int samples, int* winding, double* min_dist) {
  double total = 0.0;
  double dist = std::numeric_limits<double>::infinity();
  Complex first = eval(q, Complex{1.0}) - w;
  Complex prev = first;
  dist = std::min(dist, std::abs(first));
  if (std::abs(first) < 1e-300) return false;
  for (int j = 1; j < samples; ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / samples;
    Complex v = eval(q, std::polar(1.0, angle)) - w;
    double m = std::abs(v);
    dist = std::min(dist, m);
    if (m < 1e-300) return false;
    total += std::arg(v / prev);
    prev = v;
  }
  total += std::arg(first / prev);
  *winding = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
  *min_dist = dist;
  return true;
}

double derivative_sup_bound(const Poly& q) {
  double L = 0.0;
  for (std::size_t k = 1; k < q.c.size(); ++k) L += static_cast<double>(k) * std::abs(q.c[k]);
  return L;
}

}  // namespace

OmissionVerdict omission_test(const Poly& q, Complex w, const Config& cfg) {
  if (std::abs(q.at(0)) > 1e-12 * std::max(1.0, coeff_norm1(q))) {
    throw std::invalid_argument("omission_test: q(0) must be 0");
  }

  OmissionVerdict verdict;
  const double lipschitz = derivative_sup_bound(q);

  int samples = std::max(16, cfg.winding_initial_samples);
  int stable_count = 0;
  int last_winding = 0;
  bool have_winding = false;
  double min_dist = 0.0;

  while (samples <= cfg.winding_max_samples) {
    int winding = 0;
    double dist = 0.0;
    if (!winding_number(q, w, samples, &winding, &dist)) {
      // w sits on the sampled boundary image: indeterminate by construction.
      verdict.omitted = false;
      verdict.indeterminate = true;
      verdict.min_boundary_distance = 0.0;
      verdict.samples_used = samples;
      return verdict;
    }
    min_dist = dist;
    verdict.samples_used = samples;
    if (have_winding && winding == last_winding) {
      ++stable_count;
    } else {
      stable_count = 0;
    }
    last_winding = winding;
    have_winding = true;

    const double certified_gap = min_dist - lipschitz * std::numbers::pi / samples;
    if (stable_count >= 2) {
      // Winding settled; make sure the boundary certificate is decisive too.
      if (certified_gap > cfg.omission_tolerance || min_dist <= cfg.omission_tolerance) break;
    }
    samples *= 2;
  }

  verdict.winding_zero_count = last_winding;
  verdict.min_boundary_distance = min_dist;
  const double certified_gap = min_dist - lipschitz * std::numbers::pi / verdict.samples_used;
  if (last_winding != 0) {
    // Zeros of q - w inside the disk: w is attained, full stop.
    verdict.omitted = false;
  } else if (certified_gap > cfg.omission_tolerance) {
    verdict.omitted = true;
  } else {
    // Within tolerance of the boundary image: reported not-omitted, flagged.
    verdict.omitted = false;
    verdict.indeterminate = true;
  }
  return verdict;
}

namespace {

std::vector<Complex> branch_values(Complex mu, int T) {
  // All T branches of mu^{-1/T}.
  std::vector<Complex> values(static_cast<std::size_t>(T));
  const double modulus = std::pow(std::abs(mu), -1.0 / T);
  const double base_angle = -std::arg(mu) / T;
  for (int k = 0; k < T; ++k) {
    double angle = base_angle - 2.0 * std::numbers::pi * static_cast<double>(k) / T;
    values[static_cast<std::size_t>(k)] = std::polar(modulus, angle);
  }
  return values;
}

double omission_margin(const OmissionVerdict& v) {
  return v.indeterminate ? 0.0 : v.min_boundary_distance;
}

}  // namespace

StabilityReport stability_report(const AveragingSet& design, Complex mu, const Config& cfg) {
  validate(design);
  if (mu == Complex{0.0}) throw std::invalid_argument("in_stability_domain: mu = 0");

  StabilityReport report;
  report.mu = mu;
  report.cycle_length = design.cycle_length;

  const Poly chi = build_chi(design, mu);
  report.chi_roots = find_roots(chi, cfg);
  double max_modulus = 0.0;
  for (auto r : report.chi_roots.roots) max_modulus = std::max(max_modulus, std::abs(r));
  report.schur.max_modulus = max_modulus;
  report.schur.margin = 1.0 - max_modulus;
  report.schur.stable = max_modulus < 1.0 - cfg.strictness_tolerance;
  report.schur.method = SchurMethod::roots;

  const bool recursion = schur_cohn_stable(chi);
  if (recursion != report.schur.stable && std::abs(report.schur.margin) > cfg.cross_check_margin) {
    throw CrossCheckError("in_stability_domain: Schur-Cohn and root moduli disagree");
  }

  const DualityBundle bundle = build_duality(design);
  report.q_omission = omission_test(bundle.q, Complex{1.0} / mu, cfg);

  bool all_branches_omitted = true;
  double branch_margin = std::numeric_limits<double>::infinity();
  for (auto v : branch_values(mu, design.cycle_length)) {
    OmissionVerdict branch = omission_test(bundle.q_root, v, cfg);
    all_branches_omitted = all_branches_omitted && branch.omitted;
    branch_margin = std::min(branch_margin, omission_margin(branch));
    report.branch_omissions.push_back(std::move(branch));
  }

  // Stability, omission of 1/mu by q, and omission of every branch value by
  // q_root must all agree; near-boundary cases are waived.
  const double schur_margin = std::abs(report.schur.margin);
  const double q_margin = omission_margin(report.q_omission);
  report.methods_agree = (report.schur.stable == report.q_omission.omitted) &&
                         (report.schur.stable == all_branches_omitted);
  if (!report.methods_agree) {
    const double waiver = std::min({schur_margin, q_margin, branch_margin});
    if (waiver > cfg.cross_check_margin) {
      std::ostringstream msg;
      msg << "in_stability_domain: duality cross-check failed (schur="
          << (report.schur.stable ? "stable" : "unstable")
          << ", q omitted=" << report.q_omission.omitted
          << ", branches omitted=" << all_branches_omitted
          << ", min margin=" << waiver << ")";
      throw CrossCheckError(msg.str());
    }
  }
  return report;
}

SchurVerdict in_stability_domain(const AveragingSet& design, Complex mu, const Config& cfg) {
  return stability_report(design, mu, cfg).schur;
}

}  // namespace cyclestab
