#pragma once

// CSV and JSON serialization for all engine outputs.  CSV floating-point
// values carry 15 significant digits; JSON uses round-trip number formatting
// with a stable field order.  All serializers are deterministic for a fixed
// input.

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "diracosc/core.hpp"
#include "diracosc/oracle.hpp"
#include "diracosc/spectrum.hpp"
#include "diracosc/wavefunction.hpp"

namespace diracosc {

using ordered_json = nlohmann::ordered_json;

std::string_view config_name(Configuration config);
std::string_view component_name(Component component);
// Accepts "I"/"II" (std::domain_error otherwise).
Configuration parse_config(std::string_view text);
// Accepts "upper"/"lower".
Component parse_component(std::string_view text);

// 15-significant-digit formatting with trailing zeros kept
// (e.g. 1 -> "1.00000000000000").
std::string format_sig15(double value);

// Header exactly: config,component,m_s,N,n,m_l,k,K,E2,E
std::string levels_csv(std::span<const EnergyLevel> levels);
ordered_json level_record(const EnergyLevel& level);
ordered_json levels_json(std::span<const EnergyLevel> levels);
ordered_json intermediates_json(const ChainCheck& chain);

// b,K,E2,E,status with E left empty on no_real_bound_state rows.
std::string scan_csv(std::span<const ScanRow> rows);
ordered_json scan_json(std::span<const ScanRow> rows);

std::string lines_csv(const TransitionCatalog& catalog,
                      std::span<const EnergyLevel> levels);
ordered_json lines_json(const TransitionCatalog& catalog,
                        std::span<const EnergyLevel> levels);

// coordinate,amplitude
std::string profile_csv(std::span<const double> coordinates,
                        std::span<const double> amplitudes);
ordered_json wavefunction_json(const WaveComponent& component);

std::string verification_csv(const VerificationReport& report);
ordered_json verification_json(const VerificationReport& report);

}  // namespace diracosc
