#include "diracosc/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace diracosc {

std::string_view config_name(Configuration config) {
  return config == Configuration::I ? "I" : "II";
}

std::string_view component_name(Component component) {
  return component == Component::Upper ? "upper" : "lower";
}

Configuration parse_config(std::string_view text) {
  if (text == "I") return Configuration::I;
  if (text == "II") return Configuration::II;
  throw std::domain_error("configuration must be I or II");
}

Component parse_component(std::string_view text) {
  if (text == "upper") return Component::Upper;
  if (text == "lower") return Component::Lower;
  throw std::domain_error("component must be upper or lower");
}

std::string format_sig15(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.15g", value);
  return buf;
}

namespace {

void append_level_row(std::string& out, const EnergyLevel& level) {
  const QuantumNumbers& qn = level.qn;
  out += config_name(qn.config);
  out += ',';
  out += component_name(qn.component);
  out += ',';
  out += format_sig15(qn.ms());
  out += ',';
  out += std::to_string(qn.N);
  out += ',';
  out += std::to_string(qn.n);
  out += ',';
  out += std::to_string(qn.ml);
  out += ',';
  out += std::to_string(qn.k());
  out += ',';
  out += format_sig15(level.K);
  out += ',';
  out += format_sig15(level.E2);
  out += ',';
  out += format_sig15(level.E);
  out += '\n';
}

}  // namespace

std::string levels_csv(std::span<const EnergyLevel> levels) {
  std::string out = "config,component,m_s,N,n,m_l,k,K,E2,E\n";
  for (const EnergyLevel& level : levels) append_level_row(out, level);
  return out;
}

ordered_json level_record(const EnergyLevel& level) {
  const QuantumNumbers& qn = level.qn;
  return ordered_json{{"config", config_name(qn.config)},
                      {"component", component_name(qn.component)},
                      {"m_s", qn.ms()},
                      {"N", qn.N},
                      {"n", qn.n},
                      {"m_l", qn.ml},
                      {"k", qn.k()},
                      {"K", level.K},
                      {"E2", level.E2},
                      {"E", level.E}};
}

ordered_json levels_json(std::span<const EnergyLevel> levels) {
  ordered_json arr = ordered_json::array();
  for (const EnergyLevel& level : levels) arr.push_back(level_record(level));
  return arr;
}

ordered_json intermediates_json(const ChainCheck& chain) {
  return ordered_json{{"eps", chain.inter.eps},
                      {"lam", chain.inter.lam},
                      {"D", chain.inter.D},
                      {"E2_reconstructed", chain.e2_reconstructed}};
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = "b,K,E2,E,status\n";
  for (const ScanRow& row : rows) {
    out += format_sig15(row.b);
    out += ',';
    out += format_sig15(row.K);
    out += ',';
    out += format_sig15(row.E2);
    out += ',';
    if (row.E) out += format_sig15(*row.E);
    out += ',';
    out += row.E ? "ok" : "no_real_bound_state";
    out += '\n';
  }
  return out;
}

ordered_json scan_json(std::span<const ScanRow> rows) {
  ordered_json arr = ordered_json::array();
  for (const ScanRow& row : rows) {
    ordered_json rec{{"b", row.b},
                     {"K", row.K},
                     {"E2", row.E2},
                     {"status", row.E ? "ok" : "no_real_bound_state"}};
    if (row.E) rec["E"] = *row.E;
    arr.push_back(rec);
  }
  return arr;
}

namespace {

void append_state_cols(std::string& out, const EnergyLevel& level) {
  out += component_name(level.qn.component);
  out += ',';
  out += std::to_string(level.qn.N);
  out += ',';
  out += std::to_string(level.qn.n);
  out += ',';
  out += std::to_string(level.qn.ml);
}

}  // namespace

std::string lines_csv(const TransitionCatalog& catalog,
                      std::span<const EnergyLevel> levels) {
  std::string out =
      "from_component,from_N,from_n,from_ml,to_component,to_N,to_n,to_ml,dK,"
      "tag\n";
  for (const TransitionLine& line : catalog.lines) {
    append_state_cols(out, levels[line.from]);
    out += ',';
    append_state_cols(out, levels[line.to]);
    out += ',';
    out += format_sig15(line.dK);
    out += ',';
    out += line.tag;
    out += '\n';
  }
  return out;
}

ordered_json lines_json(const TransitionCatalog& catalog,
                        std::span<const EnergyLevel> levels) {
  ordered_json arr = ordered_json::array();
  for (const TransitionLine& line : catalog.lines) {
    const EnergyLevel& from = levels[line.from];
    const EnergyLevel& to = levels[line.to];
    arr.push_back(ordered_json{
        {"from", level_record(from)},
        {"to", level_record(to)},
        {"dK", line.dK},
        {"tag", line.tag},
    });
  }
  return ordered_json{{"canonical",
                       ordered_json{{"a", catalog.canonical[0]},
                                    {"b", catalog.canonical[1]},
                                    {"a+b", catalog.canonical[2]},
                                    {"a-b", catalog.canonical[3]}}},
                      {"lines", arr}};
}

std::string profile_csv(std::span<const double> coordinates,
                        std::span<const double> amplitudes) {
  std::string out = "coordinate,amplitude\n";
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    out += format_sig15(coordinates[i]);
    out += ',';
    out += format_sig15(amplitudes[i]);
    out += '\n';
  }
  return out;
}

ordered_json wavefunction_json(const WaveComponent& component) {
  const auto samples = [](std::span<const double> coord,
                          std::span<const double> amp) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < coord.size(); ++i)
      arr.push_back(ordered_json::array({coord[i], amp[i]}));
    return arr;
  };
  return ordered_json{
      {"config", config_name(component.qn.config)},
      {"component", component_name(component.qn.component)},
      {"N", component.qn.N},
      {"n", component.qn.n},
      {"m_l", component.ml},
      {"m_s", component.ms},
      {"xi_per_rho", component.xi_per_rho},
      {"radial",
       ordered_json{{"A", component.radial.A},
                    {"samples",
                     samples(component.radial.xi, component.radial.F)}}},
      {"axial",
       ordered_json{
           {"samples", samples(component.axial.y, component.axial.G)}}},
  };
}

std::string verification_csv(const VerificationReport& report) {
  std::string out = "name,expected,actual,rel_error,pass\n";
  for (const VerificationItem& item : report.items) {
    out += item.name;
    out += ',';
    out += format_sig15(item.expected);
    out += ',';
    out += format_sig15(item.actual);
    out += ',';
    out += format_sig15(item.rel_error);
    out += ',';
    out += item.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

ordered_json verification_json(const VerificationReport& report) {
  ordered_json items = ordered_json::array();
  for (const VerificationItem& item : report.items)
    items.push_back(ordered_json{{"name", item.name},
                                 {"expected", item.expected},
                                 {"actual", item.actual},
                                 {"rel_error", item.rel_error},
                                 {"pass", item.pass}});
  return ordered_json{{"config", config_name(report.config)},
                      {"a", report.a},
                      {"b", report.b},
                      {"pass", report.pass},
                      {"items", items}};
}

}  // namespace diracosc
