#include "diracosc/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace diracosc {

PhysicalParams PhysicalParams::make(double a, double b, double rest_energy) {
  if (!std::isfinite(a) || a <= 0.0)
    throw std::domain_error("params: a (oscillator quantum) must be finite and > 0");
  if (!std::isfinite(b) || b < 0.0)
    throw std::domain_error("params: b (Larmor quantum) must be finite and >= 0");
  if (!std::isfinite(rest_energy) || rest_energy <= 0.0)
    throw std::domain_error("params: rest_energy must be finite and > 0");
  return PhysicalParams{a, b, rest_energy};
}

double QuantumNumbers::ms() const {
  const bool upper = component == Component::Upper;
  const bool config_one = config == Configuration::I;
  return (upper == config_one) ? -0.5 : 0.5;
}

int QuantumNumbers::k() const { return (N - std::abs(ml)) / 2; }

void validate(const QuantumNumbers& qn) {
  if (qn.N < 0) throw std::domain_error("quantum numbers: N must be >= 0");
  if (qn.n < 0) throw std::domain_error("quantum numbers: n must be >= 0");
  if (std::abs(qn.ml) > qn.N)
    throw std::domain_error("quantum numbers: |ml| must not exceed N");
  if ((qn.N - std::abs(qn.ml)) % 2 != 0)
    throw std::domain_error("quantum numbers: N - |ml| must be even");
}

QuantumNumbers QuantumNumbers::make(Configuration config, Component component,
                                    int N, int n, int ml) {
  QuantumNumbers qn{config, component, N, n, ml};
  validate(qn);
  return qn;
}

double larmor_from_field(double b_tesla, double mass_kg,
                         double charge_coulomb) {
  if (!std::isfinite(b_tesla) || b_tesla < 0.0)
    throw std::domain_error("larmor_from_field: B must be finite and >= 0");
  if (!std::isfinite(mass_kg) || mass_kg <= 0.0)
    throw std::domain_error("larmor_from_field: mass must be finite and > 0");
  if (!std::isfinite(charge_coulomb) || charge_coulomb <= 0.0)
    throw std::domain_error("larmor_from_field: charge must be finite and > 0");
  return charge_coulomb * b_tesla / (2.0 * mass_kg);
}

SpinPlanar spin_and_planar(Configuration config, Component component,
                           const PhysicalParams& params) {
  const double ms = QuantumNumbers{config, component, 0, 0, 0}.ms();
  const double planar = config == Configuration::I ? params.a + params.b
                                                   : params.a - params.b;
  return SpinPlanar{ms, planar};
}

std::vector<QuantumNumbers> enumerate_states(
    int max_N, int max_n, std::span<const Configuration> configs,
    std::span<const Component> components) {
  if (max_N < 0) throw std::domain_error("enumerate_states: max_N must be >= 0");
  if (max_n < 0) throw std::domain_error("enumerate_states: max_n must be >= 0");

  const auto wants = [](auto span, auto value) {
    return std::find(span.begin(), span.end(), value) != span.end();
  };

  std::vector<QuantumNumbers> out;
  for (Configuration config : {Configuration::I, Configuration::II}) {
    if (!wants(configs, config)) continue;
    for (Component component : {Component::Upper, Component::Lower}) {
      if (!wants(components, component)) continue;
      for (int N = 0; N <= max_N; ++N)
        for (int n = 0; n <= max_n; ++n)
          for (int ml = -N; ml <= N; ml += 2)
            out.push_back(QuantumNumbers{config, component, N, n, ml});
    }
  }
  return out;
}

}  // namespace diracosc
