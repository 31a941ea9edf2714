#include "diracosc/spectrum.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace diracosc {

BracketCoeffs bracket_coeffs(const QuantumNumbers& qn) {
  const int s = qn.config == Configuration::I ? 1 : -1;
  const int lower = qn.component == Component::Lower ? 1 : 0;
  return BracketCoeffs{qn.N + qn.n + s * qn.ml + 3 * lower,
                       s * (qn.N + 2 * lower) + qn.ml};
}

double bracket_K(const PhysicalParams& params, const QuantumNumbers& qn) {
  validate(qn);
  const BracketCoeffs c = bracket_coeffs(qn);
  return static_cast<double>(c.ca) * params.a +
         static_cast<double>(c.cb) * params.b;
}

EnergyLevel energy(const PhysicalParams& params, const QuantumNumbers& qn) {
  const double K = bracket_K(params, qn);
  const double e2 = 1.0 + 2.0 * K;
  if (e2 < 0.0)
    throw NoRealBoundState("no real bound state: E^2/(mc^2)^2 = " +
                               std::to_string(e2) + " < 0",
                           e2, qn);
  return EnergyLevel{qn, K, e2, std::sqrt(e2)};
}

ChainCheck intermediates_consistency(const PhysicalParams& params,
                                     const QuantumNumbers& qn) {
  validate(qn);
  const double a = params.a;
  const double b = params.b;
  const int s = qn.config == Configuration::I ? 1 : -1;

  const double eps = static_cast<double>(2 * qn.n + 1) * a;
  const double D = static_cast<double>(2 * (qn.N + 1));
  const double planar = a + static_cast<double>(s) * b;
  const double lam = eps + D * planar;

  // Invert the separation identity of the branch.  For the upper component
  // the operator constant enters as +3a and the (L_z + sigma_z, L.S) pair as
  // -2b(ml + 2ms) - 4a*ml*ms; for the lower component all three flip sign.
  const int two_ms = qn.ms() > 0.0 ? 1 : -1;
  const int mlp = qn.ml + two_ms;      // ml + 2*ms
  const int mlms2 = qn.ml * two_ms;    // 2*ml*ms
  double e2;
  if (qn.component == Component::Upper)
    e2 = lam + 1.0 - 3.0 * a + 2.0 * b * mlp - 2.0 * a * mlms2;
  else
    e2 = lam + 1.0 + 3.0 * a + 2.0 * b * mlp + 2.0 * a * mlms2;
  return ChainCheck{Intermediates{eps, lam, D}, e2};
}

double zero_field_bracket(const PhysicalParams& params, int n_prime, int ml,
                          double ms) {
  if (params.b != 0.0)
    throw std::domain_error("zero_field_bracket: requires b = 0");
  if (n_prime < 0)
    throw std::domain_error("zero_field_bracket: n' must be >= 0");
  if (ms != 0.5 && ms != -0.5)
    throw std::domain_error("zero_field_bracket: ms must be +-1/2");
  // (n' + 3/2)a + (ml -+ 3/2)a grouped so the half-integers cancel exactly.
  const int c = n_prime + ml + (ms > 0.0 ? 3 : 0);
  return static_cast<double>(c) * params.a;
}

std::vector<EnergyLevel> degeneracy(std::span<const EnergyLevel> levels,
                                    double target_e2, double tol) {
  if (!std::isfinite(tol) || tol < 0.0)
    throw std::domain_error("degeneracy: tol must be finite and >= 0");
  if (!std::isfinite(target_e2))
    throw std::domain_error("degeneracy: target E^2 must be finite");
  std::vector<EnergyLevel> members;
  for (const EnergyLevel& level : levels)
    if (std::fabs(level.E2 - target_e2) <= tol) members.push_back(level);
  return members;
}

namespace {

std::string_view classify_dk(double dk, const std::array<double, 4>& canon) {
  constexpr std::string_view tags[4] = {kTagA, kTagB, kTagAPlusB, kTagAMinusB};
  for (int i = 0; i < 4; ++i) {
    const double scale =
        std::max({1.0, std::fabs(canon[i]), std::fabs(dk)});
    if (std::fabs(dk - canon[i]) <= 1e-12 * scale) return tags[i];
  }
  return kTagOther;
}

}  // namespace

TransitionCatalog transition_lines(const PhysicalParams& params,
                                   std::span<const EnergyLevel> levels) {
  for (const EnergyLevel& level : levels)
    if (level.qn.config != levels.front().qn.config)
      throw std::invalid_argument(
          "transition_lines: levels must come from a single configuration");

  TransitionCatalog catalog;
  catalog.canonical = {params.a, params.b, params.a + params.b,
                       params.a - params.b};
  if (!levels.empty())
    catalog.lines.reserve(levels.size() * (levels.size() - 1));
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = 0; j < levels.size(); ++j) {
      if (i == j) continue;
      const double dk = levels[j].K - levels[i].K;
      catalog.lines.push_back(
          TransitionLine{i, j, dk, classify_dk(dk, catalog.canonical)});
    }
  }
  return catalog;
}

std::vector<ScanRow> scan_field(const PhysicalParams& base,
                                const QuantumNumbers& qn,
                                std::span<const double> b_values) {
  validate(qn);
  for (double b : b_values)
    if (!std::isfinite(b) || b < 0.0)
      throw std::domain_error("scan_field: b values must be finite and >= 0");

  std::vector<ScanRow> rows;
  rows.reserve(b_values.size());
  const BracketCoeffs c = bracket_coeffs(qn);
  for (double b : b_values) {
    const double K =
        static_cast<double>(c.ca) * base.a + static_cast<double>(c.cb) * b;
    const double e2 = 1.0 + 2.0 * K;
    rows.push_back(ScanRow{b, K, e2,
                           e2 >= 0.0 ? std::optional<double>(std::sqrt(e2))
                                     : std::nullopt});
  }
  return rows;
}

}  // namespace diracosc
