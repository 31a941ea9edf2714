#include "diracosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

#include "diracosc/kernels.hpp"
#include "diracosc/spectrum.hpp"

namespace diracosc {

std::vector<double> radial_oracle_nodes(double xi_max, int points) {
  if (points < 1 || !(xi_max > 0.0))
    throw std::domain_error("radial_oracle_nodes: bad grid spec");
  const double h = xi_max / static_cast<double>(points);
  std::vector<double> nodes(points);
  for (int i = 0; i < points; ++i)
    nodes[i] = (static_cast<double>(i) + 0.5) * h;
  return nodes;
}

std::vector<double> axial_oracle_nodes(double y_max, int points) {
  if (points < 1 || !(y_max > 0.0))
    throw std::domain_error("axial_oracle_nodes: bad grid spec");
  const double h = 2.0 * y_max / static_cast<double>(points + 1);
  std::vector<double> nodes(points);
  // y_i = (i - c) h with integer or half-integer center, bit-exact symmetric.
  const double c = 0.5 * static_cast<double>(points + 1);
  for (int i = 1; i <= points; ++i)
    nodes[i - 1] = (static_cast<double>(i) - c) * h;
  return nodes;
}

namespace {

double uniform_spacing(std::span<const double> nodes, const char* what) {
  const double h = (nodes.back() - nodes.front()) /
                   static_cast<double>(nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (std::fabs(nodes[i + 1] - nodes[i] - h) > 1e-9 * h)
      throw std::domain_error(std::string(what) + ": grid must be uniform");
  return h;
}

}  // namespace

TridiagonalOperator discretize_radial(int ml, std::span<const double> nodes) {
  if (nodes.size() < 1000)
    throw std::domain_error("discretize_radial: need at least 1000 points");
  for (double xi : nodes)
    if (!(xi > 0.0))
      throw std::domain_error(
          "discretize_radial: grid must exclude the singular origin xi = 0");
  const double h = uniform_spacing(nodes, "discretize_radial");
  if (std::fabs(nodes.front() - 0.5 * h) > 1e-9 * h)
    throw std::domain_error(
        "discretize_radial: nodes must sit at half-offsets (i - 1/2) h");

  const std::size_t m = nodes.size();
  const double ml2 = static_cast<double>(ml) * ml;
  TridiagonalOperator T;
  T.h = h;
  T.grid.assign(nodes.begin(), nodes.end());
  T.diag.resize(m);
  T.offdiag.resize(m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = nodes[i];
    T.diag[i] = 2.0 / (h * h) + xi * xi + ml2 / (xi * xi);
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double face = 0.5 * (nodes[i] + nodes[i + 1]);
    T.offdiag[i] = -face / (h * h * std::sqrt(nodes[i] * nodes[i + 1]));
  }
  return T;
}

TridiagonalOperator discretize_axial(std::span<const double> nodes) {
  if (nodes.size() < 3)
    throw std::domain_error("discretize_axial: need at least 3 points");
  const double h = uniform_spacing(nodes, "discretize_axial");
  const std::size_t m = nodes.size();
  const double span = nodes.back() - nodes.front();
  for (std::size_t i = 0; i < m; ++i)
    if (std::fabs(nodes[i] + nodes[m - 1 - i]) > 1e-9 * span)
      throw std::domain_error("discretize_axial: grid must be symmetric");

  TridiagonalOperator T;
  T.h = h;
  T.grid.assign(nodes.begin(), nodes.end());
  T.diag.resize(m);
  T.offdiag.assign(m - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < m; ++i)
    T.diag[i] = 2.0 / (h * h) + nodes[i] * nodes[i];
  return T;
}

namespace {

struct SturmContext {
  std::vector<double> offdiag_sq;
  double pivmin;
};

SturmContext make_context(const TridiagonalOperator& T) {
  SturmContext ctx;
  ctx.offdiag_sq.resize(T.offdiag.size());
  double max_e2 = 1.0;
  for (std::size_t i = 0; i < T.offdiag.size(); ++i) {
    ctx.offdiag_sq[i] = T.offdiag[i] * T.offdiag[i];
    max_e2 = std::max(max_e2, ctx.offdiag_sq[i]);
  }
  ctx.pivmin = std::numeric_limits<double>::min() * max_e2;
  return ctx;
}

}  // namespace

int sturm_count(const TridiagonalOperator& T, double x) {
  if (T.dim() == 0) throw std::domain_error("sturm_count: empty operator");
  const SturmContext ctx = make_context(T);
  int count = 0;
  kernels::sturm_counts(T.diag, ctx.offdiag_sq, ctx.pivmin,
                        std::span<const double>(&x, 1),
                        std::span<int>(&count, 1));
  return count;
}

std::vector<EigenResult> sturm_bisect(const TridiagonalOperator& T, int count,
                                      double tol) {
  const std::size_t m = T.dim();
  if (m == 0) throw std::domain_error("sturm_bisect: empty operator");
  if (count < 1 || static_cast<std::size_t>(count) > m)
    throw std::domain_error(
        "sturm_bisect: count must be in [1, dim]");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::domain_error("sturm_bisect: tol must be finite and > 0");

  const SturmContext ctx = make_context(T);

  // Gershgorin bounds, widened a hair so every eigenvalue lies strictly
  // inside.
  double lo = T.diag[0], hi = T.diag[0];
  for (std::size_t i = 0; i < m; ++i) {
    const double r = (i > 0 ? std::fabs(T.offdiag[i - 1]) : 0.0) +
                     (i + 1 < m ? std::fabs(T.offdiag[i]) : 0.0);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  const double pad = 1e-12 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> los(count, lo), his(count, hi);
  std::vector<int> iterations(count, 0);
  std::vector<double> mids;
  std::vector<int> counts;
  std::vector<int> pending;

  for (;;) {
    mids.clear();
    pending.clear();
    for (int j = 0; j < count; ++j) {
      if (his[j] - los[j] > tol) {
        pending.push_back(j);
        mids.push_back(0.5 * (los[j] + his[j]));
      }
    }
    if (pending.empty()) break;
    counts.assign(mids.size(), 0);
    kernels::sturm_counts(T.diag, ctx.offdiag_sq, ctx.pivmin, mids, counts);
    for (std::size_t p = 0; p < pending.size(); ++p) {
      const int j = pending[p];
      // Bracket at floating-point resolution: the midpoint cannot make
      // progress, so collapse it.
      if (!(mids[p] > los[j]) || !(mids[p] < his[j])) {
        los[j] = his[j] = mids[p];
        ++iterations[j];
        continue;
      }
      // counts[p] = #eigenvalues <= mid; the (j+1)-th smallest lies left of
      // mid iff that count reaches j+1.
      if (counts[p] >= j + 1)
        his[j] = mids[p];
      else
        los[j] = mids[p];
      ++iterations[j];
    }
  }

  std::vector<EigenResult> results(count);
  for (int j = 0; j < count; ++j)
    results[j] = EigenResult{j, 0.5 * (los[j] + his[j]),
                             0.5 * (his[j] - los[j]), iterations[j]};
  std::stable_sort(results.begin(), results.end(),
                   [](const EigenResult& x, const EigenResult& y) {
                     return x.value < y.value;
                   });
  for (int j = 0; j < count; ++j) results[j].index = j;
  return results;
}

namespace {

VerificationItem make_item(std::string name, double expected, double actual,
                           double tol) {
  const double rel =
      std::fabs(actual - expected) / std::max(1.0, std::fabs(expected));
  return VerificationItem{std::move(name), expected, actual, rel, rel <= tol};
}

}  // namespace

VerificationReport verify_against_closed_form(const PhysicalParams& params,
                                              Configuration config,
                                              const VerifyOptions& opts) {
  if (config == Configuration::II && !(params.a > params.b))
    throw std::domain_error(
        "verify_against_closed_form: ConfigII requires a > b");
  if (opts.max_N < 0 || opts.max_n < 0)
    throw std::domain_error("verify_against_closed_form: bad cutoffs");

  VerificationReport report;
  report.config = config;
  report.a = params.a;
  report.b = params.b;

  const std::string cfg = config == Configuration::I ? "I" : "II";

  // Radial eigenvalues per |ml|: D = 2(N+1) with N = 2k + |ml| <= max_N.
  const auto radial_nodes = radial_oracle_nodes(opts.xi_max, opts.radial_points);
  std::vector<std::vector<double>> radial_eigs(opts.ml_set.size());
  for (std::size_t mi = 0; mi < opts.ml_set.size(); ++mi) {
    const int mabs = std::abs(opts.ml_set[mi]);
    if (mabs > opts.max_N) continue;
    const int kmax = (opts.max_N - mabs) / 2;
    const TridiagonalOperator T = discretize_radial(mabs, radial_nodes);
    const auto eig = sturm_bisect(T, kmax + 1, opts.bisect_tol);
    radial_eigs[mi].resize(eig.size());
    for (int k = 0; k <= kmax; ++k) {
      radial_eigs[mi][k] = eig[k].value;
      const int N = 2 * k + mabs;
      report.items.push_back(make_item(
          "radial D |ml|=" + std::to_string(mabs) + " N=" + std::to_string(N),
          static_cast<double>(2 * (N + 1)), eig[k].value, opts.tol_eigen));
    }
  }

  // Axial eigenvalues 2n + 1.
  const auto axial_nodes = axial_oracle_nodes(opts.y_max, opts.axial_points);
  const TridiagonalOperator A = discretize_axial(axial_nodes);
  const auto axial_eig = sturm_bisect(A, opts.max_n + 1, opts.bisect_tol);
  std::vector<double> axial_vals(axial_eig.size());
  for (int n = 0; n <= opts.max_n; ++n) {
    axial_vals[n] = axial_eig[n].value;
    report.items.push_back(make_item("axial n=" + std::to_string(n),
                                     static_cast<double>(2 * n + 1),
                                     axial_eig[n].value, opts.tol_eigen));
  }

  // End-to-end E^2: numerical (D, eps) through the separation chain versus
  // the closed form, for both components and both ml signs.
  const double planar = config == Configuration::I ? params.a + params.b
                                                   : params.a - params.b;
  for (std::size_t mi = 0; mi < opts.ml_set.size(); ++mi) {
    const int mabs = std::abs(opts.ml_set[mi]);
    if (mabs > opts.max_N) continue;
    for (int sign : {1, -1}) {
      if (mabs == 0 && sign < 0) continue;
      const int ml = sign * mabs;
      for (std::size_t k = 0; k < radial_eigs[mi].size(); ++k) {
        const int N = 2 * static_cast<int>(k) + mabs;
        const double d_num = radial_eigs[mi][k];
        for (int n = 0; n <= opts.max_n; ++n) {
          const double eps_num = axial_vals[n] * params.a;
          const double lam_num = eps_num + d_num * planar;
          for (Component component : {Component::Upper, Component::Lower}) {
            const QuantumNumbers qn{config, component, N, n, ml};
            const int two_ms = qn.ms() > 0.0 ? 1 : -1;
            const int mlp = ml + two_ms;
            const int mlms2 = ml * two_ms;
            double e2_num;
            if (component == Component::Upper)
              e2_num = lam_num + 1.0 - 3.0 * params.a + 2.0 * params.b * mlp -
                       2.0 * params.a * mlms2;
            else
              e2_num = lam_num + 1.0 + 3.0 * params.a + 2.0 * params.b * mlp +
                       2.0 * params.a * mlms2;
            const double e2_closed = 1.0 + 2.0 * bracket_K(params, qn);
            report.items.push_back(make_item(
                "E2 " + cfg + "/" +
                    (component == Component::Upper ? "upper" : "lower") +
                    " N=" + std::to_string(N) + " n=" + std::to_string(n) +
                    " ml=" + std::to_string(ml),
                e2_closed, e2_num, opts.tol_e2e));
          }
        }
      }
    }
  }

  for (const VerificationItem& item : report.items)
    if (!item.pass) report.pass = false;
  return report;
}

double pauli_square_deviation(double vx, double vy, double vz) {
  using C = std::complex<double>;
  // sigma . v = [[vz, vx - i vy], [vx + i vy, -vz]]
  const C m00(vz, 0.0), m01(vx, -vy), m10(vx, vy), m11(-vz, 0.0);
  const C s00 = m00 * m00 + m01 * m10;
  const C s01 = m00 * m01 + m01 * m11;
  const C s10 = m10 * m00 + m11 * m10;
  const C s11 = m10 * m01 + m11 * m11;
  const double v2 = vx * vx + vy * vy + vz * vz;
  double worst = 0.0;
  worst = std::max(worst, std::abs(s00 - C(v2)));
  worst = std::max(worst, std::abs(s01));
  worst = std::max(worst, std::abs(s10));
  worst = std::max(worst, std::abs(s11 - C(v2)));
  return worst;
}

PauliCheck pauli_identity_check(int trials, std::uint64_t seed) {
  if (trials < 1)
    throw std::domain_error("pauli_identity_check: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    double vx, vy, vz, norm;
    do {
      vx = dist(rng);
      vy = dist(rng);
      vz = dist(rng);
      norm = std::sqrt(vx * vx + vy * vy + vz * vz);
    } while (norm < 1e-3);
    worst = std::max(
        worst, pauli_square_deviation(vx / norm, vy / norm, vz / norm));
  }
  return PauliCheck{trials, worst, worst <= 1e-12};
}

}  // namespace diracosc
