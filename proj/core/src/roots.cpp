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

#include "cyclestab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "cyclestab/errors.hpp"

namespace cyclestab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Evaluation-noise scale at z: an iterate with |p(z)| below a few ulps of
// this is an exact root of a machine perturbation of p.
double noise_scale(const std::vector<Complex>& c, double abs_z) {
  double s = 0.0;
  double zp = 1.0;
  for (const auto& ck : c) {
    s += std::abs(ck) * zp;
    zp *= abs_z;
  }
  return s;
}

struct HornerPair {
  Complex value;
  Complex deriv;
};

HornerPair horner(const std::vector<Complex>& c, Complex z) {
  Complex v{0.0};
  Complex d{0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

// Aberth-Ehrlich simultaneous iteration. Returns true when every point is
// either correction-converged or residual-converged (backward stable).
bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z, int max_iter, int& used) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (used = 0; used < max_iter; ++used) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      HornerPair h = horner(c, z[i]);
      double scale = noise_scale(c, std::abs(z[i]));
      if (std::abs(h.value) <= 8.0 * kEps * scale) {
        done[i] = true;
        continue;
      }
      Complex w = (h.deriv == Complex{0.0}) ? h.value / Complex{kEps} : h.value / h.deriv;
      Complex s{0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (std::abs(diff) < 1e-300) diff = Complex{1e-300};
        s += Complex{1.0} / diff;
      }
      Complex denom = Complex{1.0} - w * s;
      Complex corr = (std::abs(denom) < 1e-300) ? w : w / denom;
      z[i] -= corr;
      if (std::abs(corr) > 1e-14 * (1.0 + std::abs(z[i]))) all_done = false;
    }
    if (all_done) return true;
  }
  return false;
}

std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i + 1, i) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("find_roots: companion eigenvalue fallback failed");
  }
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

Complex newton_polish(const std::vector<Complex>& c, Complex z0, int iters) {
  Complex z = z0;
  Complex best = z0;
  double best_res = std::abs(horner(c, z0).value);
  for (int k = 0; k < iters; ++k) {
    HornerPair h = horner(c, z);
    if (h.deriv == Complex{0.0}) break;
    Complex step = h.value / h.deriv;
    z -= step;
    double res = std::abs(horner(c, z).value);
    if (res < best_res) {
      best_res = res;
      best = z;
    }
    if (std::abs(step) <= kEps * (1.0 + std::abs(z))) break;
  }
  return best;
}

struct Cluster {
  std::vector<std::size_t> members;
  Complex centre{};
};

// Transitive linking: a multiplicity-m root scatters its computed copies over
// a circle of radius ~ (eps * cond)^{1/m}, so the link radius must sit well
// above the plain cluster radius. A wrongly merged pair of simple roots is
// caught by the residual validation below and split back apart.
std::vector<Cluster> link_clusters(const std::vector<Complex>& roots, double radius) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double r = radius * (1.0 + std::max(std::abs(roots[i]), std::abs(roots[j])));
      if (std::abs(roots[i] - roots[j]) <= r) parent[find(i)] = find(j);
    }
  }
  std::vector<Cluster> clusters;
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    clusters[static_cast<std::size_t>(slot[r])].members.push_back(i);
  }
  for (auto& cl : clusters) {
    Complex sum{0.0};
    for (auto i : cl.members) sum += roots[i];
    cl.centre = sum / static_cast<double>(cl.members.size());
  }
  return clusters;
}

}  // namespace

RootSet find_roots(const Poly& p, const Config& cfg) {
  const Poly t = trimmed(p);
  const int deg = t.true_degree();
  if (deg < 0) throw std::invalid_argument("find_roots: zero polynomial");
  if (deg < 1) throw std::invalid_argument("find_roots: true degree must be >= 1");

  // Exact zero low-order coefficients contribute exact roots at the origin.
  std::vector<Complex> c = t.c;
  std::size_t zero_roots = 0;
  while (c.front() == Complex{0.0} && c.size() > 1) {
    c.erase(c.begin());
    ++zero_roots;
  }

  RootSet result;
  result.roots.assign(zero_roots, Complex{0.0});

  const int n = static_cast<int>(c.size()) - 1;
  if (n >= 1) {
    std::vector<Complex> roots;
    if (n == 1) {
      roots = {-c[0] / c[1]};
    } else {
      // Perturbed circle at the Cauchy bound; the angle jitter breaks the
      // symmetric stalls the plain configuration can hit.
      double bound = 0.0;
      for (int k = 0; k < n; ++k) {
        bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)] / c.back()));
      }
      bound += 1.0;
      std::vector<Complex> z(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        double jitter = 0.33988749894 * static_cast<double>(i + 1);
        double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.37) / n + jitter;
        z[static_cast<std::size_t>(i)] = std::polar(bound, angle);
      }
      int used = 0;
      bool ok = aberth(c, z, cfg.root_max_iterations, used);
      result.iterations = used;
      if (!ok) {
        z = companion_eigenvalues(c);
        result.used_fallback = true;
        for (auto& r : z) r = newton_polish(c, r, 20);
      }
      roots = std::move(z);
    }

    // Merge multiple roots. The wide link radius catches the rounding scatter
    // of clusters up to multiplicity ~5; the hypothesis is accepted only when
    // the derivative-refined centroid evaluates to noise level, otherwise the
    // members are re-clustered at the plain radius.
    const double wide_radius = std::max(cfg.cluster_radius, 4e-3);
    std::vector<Complex> final_roots;
    auto emit_cluster = [&](const std::vector<Complex>& pts) {
      for (auto cl : link_clusters(pts, cfg.cluster_radius)) {
        Complex centre = cl.centre;
        if (cl.members.size() == 1) centre = newton_polish(c, centre, 6);
        for (std::size_t k = 0; k < cl.members.size(); ++k) final_roots.push_back(centre);
      }
    };
    for (const auto& cl : link_clusters(roots, wide_radius)) {
      const std::size_t m = cl.members.size();
      std::vector<Complex> pts;
      pts.reserve(m);
      for (auto i : cl.members) pts.push_back(roots[i]);
      if (m == 1) {
        final_roots.push_back(newton_polish(c, cl.centre, 6));
        continue;
      }
      // m-fold hypothesis: the (m-1)-th derivative has a simple root there.
      Poly dp{c};
      for (std::size_t k = 0; k + 1 < m; ++k) dp = derivative(dp);
      Complex refined = newton_polish(dp.c, cl.centre, 40);
      double spread = 0.0;
      for (auto z : pts) spread = std::max(spread, std::abs(z - cl.centre));
      bool plausible = std::abs(refined - cl.centre) <= 4.0 * spread + wide_radius;
      double res = std::abs(horner(c, refined).value);
      bool tiny = res <= cfg.root_residual_tol * (1.0 + coeff_norm1(Poly{c}));
      if (plausible && tiny) {
        for (std::size_t k = 0; k < m; ++k) final_roots.push_back(refined);
      } else {
        emit_cluster(pts);
      }
    }
    for (auto r : final_roots) result.roots.push_back(r);
  }

  std::sort(result.roots.begin(), result.roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const double lead = std::abs(t.c.back());
  double worst = 0.0;
  for (auto r : result.roots) worst = std::max(worst, std::abs(eval(t, r)));
  result.residual = worst / (1.0 + lead);
  if (worst > cfg.root_residual_tol * (1.0 + coeff_norm1(t))) {
    throw ConvergenceError("find_roots: residual above tolerance after refinement");
  }
  return result;
}

}  // namespace cyclestab
