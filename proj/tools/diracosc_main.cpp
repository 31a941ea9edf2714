// diracosc: bound-state spectrum, wavefunctions, transition lines and
// finite-difference verification for the Dirac oscillator in a uniform axial
// magnetic field.
//
// Subcommands: spectrum, level, lines, scan, wavefunction, verify.
// Exit codes: 0 success, 1 verification failure, 2 bad input.
//
// All parameters can also be supplied through a JSON config file
// (--config-file); command-line flags override file values.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diracosc/core.hpp"
#include "diracosc/io.hpp"
#include "diracosc/oracle.hpp"
#include "diracosc/spectrum.hpp"
#include "diracosc/wavefunction.hpp"

namespace {

using nlohmann::json;
using namespace diracosc;

// CODATA 2018
constexpr double kHbar = 1.054571817e-34;       // J s
constexpr double kSpeedOfLight = 299792458.0;   // m/s
constexpr double kElectronMassKg = 9.1093837015e-31;
constexpr double kElectronChargeC = 1.602176634e-19;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
struct Opt {
  T value{};
  CLI::Option* option = nullptr;
  bool from_file = false;

  bool present() const {
    return (option != nullptr && option->count() > 0) || from_file;
  }
};

template <typename T>
void merge_file(const json& file, const char* key, Opt<T>& opt) {
  if (opt.option != nullptr && opt.option->count() > 0) return;
  if (!file.contains(key)) return;
  opt.value = file.at(key).get<T>();
  opt.from_file = true;
}

// Parameter flags shared by the physics subcommands.
struct ParamOpts {
  Opt<double> a;
  Opt<double> b;
  Opt<double> b_tesla;
  Opt<double> mass{kElectronMassKg};
  Opt<double> charge{kElectronChargeC};
  Opt<double> rest{1.0};
  bool with_field = true;  // scan supplies b through the sweep instead

  void attach(CLI::App& cmd, bool field_flags) {
    with_field = field_flags;
    a.option = cmd.add_option("--a", a.value,
                              "Oscillator quantum hbar*omega / mc^2");
    if (field_flags) {
      b.option =
          cmd.add_option("--b", b.value, "Larmor quantum hbar*omega_L / mc^2");
      b_tesla.option = cmd.add_option(
          "--B-tesla", b_tesla.value,
          "Magnetic flux density in tesla (alternative to --b)");
      mass.option = cmd.add_option("--mass-kg", mass.value,
                                   "Particle mass in kg (default electron)");
      charge.option = cmd.add_option(
          "--charge-C", charge.value, "Particle charge in C (default electron)");
    }
    rest.option = cmd.add_option("--rest-energy", rest.value,
                                 "Rest energy mc^2 in output units");
  }

  void merge(const json& file) {
    merge_file(file, "a", a);
    if (with_field) {
      merge_file(file, "b", b);
      merge_file(file, "B_tesla", b_tesla);
      merge_file(file, "mass_kg", mass);
      merge_file(file, "charge_C", charge);
    }
    merge_file(file, "rest_energy", rest);
  }

  PhysicalParams resolve() const {
    if (!a.present()) throw CliError("missing required parameter --a");
    double b_value = 0.0;
    if (with_field) {
      if (b.present() == b_tesla.present())
        throw CliError("exactly one of --b or --B-tesla must be supplied");
      if (b.present()) {
        b_value = b.value;
      } else {
        const double omega_l =
            larmor_from_field(b_tesla.value, mass.value, charge.value);
        b_value = kHbar * omega_l /
                  (mass.value * kSpeedOfLight * kSpeedOfLight);
      }
    }
    return PhysicalParams::make(a.value, b_value, rest.value);
  }
};

struct OutputOpts {
  Opt<std::string> format{"csv"};
  Opt<std::string> path{"-"};

  void attach(CLI::App& cmd) {
    format.option = cmd.add_option("--format", format.value,
                                   "Output format: csv or json");
    path.option =
        cmd.add_option("--output", path.value, "Output path ('-' for stdout)");
  }

  void merge(const json& file) {
    merge_file(file, "format", format);
    merge_file(file, "output", path);
  }

  bool json_format() const {
    if (format.value == "json") return true;
    if (format.value == "csv") return false;
    throw CliError("format must be csv or json");
  }

  void write(const std::string& text) const {
    if (path.value == "-" || path.value.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
      return;
    }
    std::ofstream out(path.value, std::ios::binary);
    if (!out) throw CliError("cannot open output file: " + path.value);
    out << text;
  }

  void write(const ordered_json& j) const { write(j.dump(2) + "\n"); }
};

struct StateOpts {
  Opt<std::string> config;
  Opt<std::string> component;
  Opt<int> N;
  Opt<int> n;
  Opt<int> ml;

  void attach(CLI::App& cmd) {
    config.option =
        cmd.add_option("--config", config.value, "Spinor configuration: I or II");
    component.option = cmd.add_option("--component", component.value,
                                      "Spinor component: upper or lower");
    N.option = cmd.add_option("--N", N.value, "Planar principal quantum number");
    n.option = cmd.add_option("--n", n.value, "Axial quantum number");
    ml.option =
        cmd.add_option("--ml", ml.value, "Orbital magnetic quantum number");
  }

  void merge(const json& file) {
    merge_file(file, "config", config);
    merge_file(file, "component", component);
    merge_file(file, "N", N);
    merge_file(file, "n", n);
    merge_file(file, "ml", ml);
  }

  QuantumNumbers resolve() const {
    if (!config.present()) throw CliError("missing required flag --config");
    if (!component.present())
      throw CliError("missing required flag --component");
    if (!N.present() || !n.present() || !ml.present())
      throw CliError("missing required quantum numbers (--N, --n, --ml)");
    return QuantumNumbers::make(parse_config(config.value),
                                parse_component(component.value), N.value,
                                n.value, ml.value);
  }
};

std::vector<Configuration> config_selection(const Opt<std::string>& config) {
  if (!config.present()) return {Configuration::I, Configuration::II};
  return {parse_config(config.value)};
}

std::vector<Component> component_selection(const Opt<std::string>& component) {
  if (!component.present()) return {Component::Upper, Component::Lower};
  return {parse_component(component.value)};
}

std::vector<EnergyLevel> levels_for(const PhysicalParams& params,
                                    std::span<const QuantumNumbers> states) {
  std::vector<EnergyLevel> levels;
  levels.reserve(states.size());
  for (const QuantumNumbers& qn : states) levels.push_back(energy(params, qn));
  return levels;
}

// ---------------------------------------------------------------------------
// Subcommand state
// ---------------------------------------------------------------------------

struct LevelCmd {
  ParamOpts params;
  StateOpts state;
  OutputOpts output;

  int run() const {
    const PhysicalParams p = params.resolve();
    const QuantumNumbers qn = state.resolve();
    const EnergyLevel level = energy(p, qn);
    const ChainCheck chain = intermediates_consistency(p, qn);
    if (output.json_format()) {
      ordered_json j = level_record(level);
      j["intermediates"] = intermediates_json(chain);
      output.write(j);
    } else {
      output.write(levels_csv(std::span<const EnergyLevel>(&level, 1)));
    }
    return 0;
  }
};

struct SpectrumCmd {
  ParamOpts params;
  OutputOpts output;
  Opt<std::string> config;
  Opt<std::string> component;
  Opt<int> max_N;
  Opt<int> max_n;

  void attach(CLI::App& cmd) {
    config.option = cmd.add_option("--config", config.value,
                                   "Configuration I or II (default both)");
    component.option = cmd.add_option(
        "--component", component.value, "upper or lower (default both)");
    max_N.option = cmd.add_option("--max-N", max_N.value, "N cutoff");
    max_n.option = cmd.add_option("--max-n", max_n.value, "n cutoff");
  }

  void merge(const json& file) {
    merge_file(file, "config", config);
    merge_file(file, "component", component);
    merge_file(file, "max_N", max_N);
    merge_file(file, "max_n", max_n);
  }

  int run() const {
    if (!max_N.present() || !max_n.present())
      throw CliError("missing required cutoffs (--max-N, --max-n)");
    const PhysicalParams p = params.resolve();
    const auto configs = config_selection(config);
    const auto components = component_selection(component);
    const auto states =
        enumerate_states(max_N.value, max_n.value, configs, components);
    const auto levels = levels_for(p, states);
    if (output.json_format())
      output.write(levels_json(levels));
    else
      output.write(levels_csv(levels));
    return 0;
  }
};

struct LinesCmd {
  ParamOpts params;
  OutputOpts output;
  Opt<std::string> config;
  Opt<std::string> component;
  Opt<int> max_N{5};
  Opt<int> max_n{5};

  void attach(CLI::App& cmd) {
    config.option =
        cmd.add_option("--config", config.value, "Configuration I or II");
    component.option = cmd.add_option(
        "--component", component.value, "upper or lower (default both)");
    max_N.option = cmd.add_option("--max-N", max_N.value, "N cutoff");
    max_n.option = cmd.add_option("--max-n", max_n.value, "n cutoff");
  }

  void merge(const json& file) {
    merge_file(file, "config", config);
    merge_file(file, "component", component);
    merge_file(file, "max_N", max_N);
    merge_file(file, "max_n", max_n);
  }

  int run() const {
    if (!config.present())
      throw CliError("lines requires --config (one configuration)");
    const PhysicalParams p = params.resolve();
    const std::vector<Configuration> configs = {parse_config(config.value)};
    const auto components = component_selection(component);
    const auto states =
        enumerate_states(max_N.value, max_n.value, configs, components);
    const auto levels = levels_for(p, states);
    const TransitionCatalog catalog = transition_lines(p, levels);
    if (output.json_format())
      output.write(lines_json(catalog, levels));
    else
      output.write(lines_csv(catalog, levels));
    return 0;
  }
};

struct ScanCmd {
  ParamOpts params;
  StateOpts state;
  OutputOpts output;
  Opt<std::vector<double>> b_list;
  Opt<double> b_min;
  Opt<double> b_max;
  Opt<int> b_steps;

  void attach(CLI::App& cmd) {
    b_list.option = cmd.add_option("--b-list", b_list.value,
                                   "Comma-separated b values to sweep")
                        ->delimiter(',');
    b_min.option = cmd.add_option("--b-min", b_min.value, "Sweep start");
    b_max.option = cmd.add_option("--b-max", b_max.value, "Sweep end");
    b_steps.option =
        cmd.add_option("--b-steps", b_steps.value, "Number of sweep rows");
  }

  void merge(const json& file) {
    merge_file(file, "b_list", b_list);
    merge_file(file, "b_min", b_min);
    merge_file(file, "b_max", b_max);
    merge_file(file, "b_steps", b_steps);
  }

  std::vector<double> resolve_sweep() const {
    const bool has_list = b_list.present() && !b_list.value.empty();
    const bool has_range =
        b_min.present() || b_max.present() || b_steps.present();
    if (has_list == has_range)
      throw CliError(
          "scan requires exactly one of --b-list or --b-min/--b-max/--b-steps");
    if (has_list) return b_list.value;
    if (!b_min.present() || !b_max.present() || !b_steps.present())
      throw CliError("scan range needs all of --b-min, --b-max, --b-steps");
    if (b_steps.value < 1) throw CliError("--b-steps must be >= 1");
    std::vector<double> values(b_steps.value);
    if (b_steps.value == 1) {
      values[0] = b_min.value;
    } else {
      const double step =
          (b_max.value - b_min.value) / static_cast<double>(b_steps.value - 1);
      for (int i = 0; i < b_steps.value; ++i)
        values[i] = b_min.value + step * static_cast<double>(i);
    }
    return values;
  }

  int run() const {
    const PhysicalParams p = params.resolve();
    const QuantumNumbers qn = state.resolve();
    const auto rows = scan_field(p, qn, resolve_sweep());
    if (output.json_format())
      output.write(scan_json(rows));
    else
      output.write(scan_csv(rows));
    return 0;
  }
};

struct WavefunctionCmd {
  ParamOpts params;
  StateOpts state;
  OutputOpts output;
  Opt<std::string> kind{"radial"};
  Opt<double> xi_max{15.0};
  Opt<int> radial_points{4000};
  Opt<double> y_max{8.0};
  Opt<int> axial_points{4001};

  void attach(CLI::App& cmd) {
    kind.option = cmd.add_option("--kind", kind.value,
                                 "Profile for CSV output: radial or axial");
    xi_max.option = cmd.add_option("--xi-max", xi_max.value, "Radial cutoff");
    radial_points.option =
        cmd.add_option("--radial-points", radial_points.value, "Radial nodes");
    y_max.option = cmd.add_option("--y-max", y_max.value, "Axial cutoff");
    axial_points.option =
        cmd.add_option("--axial-points", axial_points.value, "Axial nodes");
  }

  void merge(const json& file) {
    merge_file(file, "kind", kind);
    merge_file(file, "xi_max", xi_max);
    merge_file(file, "radial_points", radial_points);
    merge_file(file, "y_max", y_max);
    merge_file(file, "axial_points", axial_points);
  }

  int run() const {
    const PhysicalParams p = params.resolve();
    const QuantumNumbers qn = state.resolve();
    const Grids grids{RadialGrid{xi_max.value, radial_points.value},
                      AxialGrid{y_max.value, axial_points.value}};
    const WaveComponent component = assemble_component(qn, p, grids);
    if (output.json_format()) {
      output.write(wavefunction_json(component));
      return 0;
    }
    if (kind.value == "radial")
      output.write(profile_csv(component.radial.xi, component.radial.F));
    else if (kind.value == "axial")
      output.write(profile_csv(component.axial.y, component.axial.G));
    else
      throw CliError("kind must be radial or axial");
    return 0;
  }
};

struct VerifyCmd {
  OutputOpts output;
  Opt<double> a{1.0};
  Opt<std::vector<double>> b_list{{0.0, 0.25, 0.5}};
  Opt<std::string> config;
  Opt<int> max_N{6};
  Opt<int> max_n{6};
  Opt<std::vector<int>> ml_set{{0, 1, 2, 3}};
  Opt<double> xi_max{15.0};
  Opt<int> radial_points{4000};
  Opt<double> y_max{8.0};
  Opt<int> axial_points{4001};
  Opt<double> tol_eigen{1e-5};
  Opt<double> tol_e2e{1e-4};
  Opt<double> bisect_tol{1e-9};

  void attach(CLI::App& cmd) {
    a.option = cmd.add_option("--a", a.value, "Oscillator quantum");
    b_list.option =
        cmd.add_option("--b-list", b_list.value, "Larmor quanta to verify")
            ->delimiter(',');
    config.option = cmd.add_option("--config", config.value,
                                   "Configuration I or II (default both)");
    max_N.option = cmd.add_option("--max-N", max_N.value, "N cutoff");
    max_n.option = cmd.add_option("--max-n", max_n.value, "n cutoff");
    ml_set.option =
        cmd.add_option("--ml-set", ml_set.value, "|ml| values to probe")
            ->delimiter(',');
    xi_max.option = cmd.add_option("--xi-max", xi_max.value, "Radial cutoff");
    radial_points.option =
        cmd.add_option("--radial-points", radial_points.value, "Radial nodes");
    y_max.option = cmd.add_option("--y-max", y_max.value, "Axial cutoff");
    axial_points.option =
        cmd.add_option("--axial-points", axial_points.value, "Axial nodes");
    tol_eigen.option = cmd.add_option("--tol-eigen", tol_eigen.value,
                                      "Relative eigenvalue gate");
    tol_e2e.option =
        cmd.add_option("--tol-e2e", tol_e2e.value, "Relative end-to-end gate");
    bisect_tol.option = cmd.add_option("--bisect-tol", bisect_tol.value,
                                       "Eigenvalue bracket width");
  }

  void merge(const json& file) {
    merge_file(file, "a", a);
    merge_file(file, "b_list", b_list);
    merge_file(file, "config", config);
    merge_file(file, "max_N", max_N);
    merge_file(file, "max_n", max_n);
    merge_file(file, "ml_set", ml_set);
    merge_file(file, "xi_max", xi_max);
    merge_file(file, "radial_points", radial_points);
    merge_file(file, "y_max", y_max);
    merge_file(file, "axial_points", axial_points);
    merge_file(file, "tol_eigen", tol_eigen);
    merge_file(file, "tol_e2e", tol_e2e);
    merge_file(file, "bisect_tol", bisect_tol);
  }

  int run() const {
    VerifyOptions opts;
    opts.max_N = max_N.value;
    opts.max_n = max_n.value;
    opts.ml_set = ml_set.value;
    opts.xi_max = xi_max.value;
    opts.radial_points = radial_points.value;
    opts.y_max = y_max.value;
    opts.axial_points = axial_points.value;
    opts.bisect_tol = bisect_tol.value;
    opts.tol_eigen = tol_eigen.value;
    opts.tol_e2e = tol_e2e.value;

    std::vector<VerificationReport> reports;
    bool all_pass = true;
    for (Configuration cfg : config_selection(config)) {
      for (double b : b_list.value) {
        const PhysicalParams p = PhysicalParams::make(a.value, b);
        reports.push_back(verify_against_closed_form(p, cfg, opts));
        all_pass = all_pass && reports.back().pass;
      }
    }

    if (output.json_format()) {
      ordered_json arr = ordered_json::array();
      for (const VerificationReport& report : reports)
        arr.push_back(verification_json(report));
      output.write(
          ordered_json{{"pass", all_pass}, {"reports", arr}});
    } else {
      std::string text =
          "config,a,b,name,expected,actual,rel_error,pass\n";
      for (const VerificationReport& report : reports)
        for (const VerificationItem& item : report.items) {
          text += config_name(report.config);
          text += ',';
          text += format_sig15(report.a);
          text += ',';
          text += format_sig15(report.b);
          text += ',';
          text += item.name;
          text += ',';
          text += format_sig15(item.expected);
          text += ',';
          text += format_sig15(item.actual);
          text += ',';
          text += format_sig15(item.rel_error);
          text += ',';
          text += item.pass ? "true" : "false";
          text += '\n';
        }
      output.write(text);
    }
    return all_pass ? 0 : 1;
  }
};

json load_config_file(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config-file" && i + 1 < argc)
      path = argv[i + 1];
    else if (arg.rfind("--config-file=", 0) == 0)
      path = arg.substr(14);
  }
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw CliError("cannot open config file: " + path);
  return json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dirac oscillator in an axial magnetic field: closed-form spectrum, "
      "wavefunctions, transition lines and finite-difference verification"};
  app.require_subcommand(1);

  std::string config_file;  // consumed here; values pre-loaded below

  LevelCmd level_cmd;
  SpectrumCmd spectrum_cmd;
  LinesCmd lines_cmd;
  ScanCmd scan_cmd;
  WavefunctionCmd wavefunction_cmd;
  VerifyCmd verify_cmd;

  CLI::App* level = app.add_subcommand(
      "level", "Single energy level with separation-constant chain");
  level_cmd.params.attach(*level, true);
  level_cmd.state.attach(*level);
  level_cmd.output.attach(*level);
  level->add_option("--config-file", config_file, "JSON defaults file");

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Level table over the enumerated states");
  spectrum_cmd.params.attach(*spectrum, true);
  spectrum_cmd.attach(*spectrum);
  spectrum_cmd.output.attach(*spectrum);
  spectrum->add_option("--config-file", config_file, "JSON defaults file");

  CLI::App* lines =
      app.add_subcommand("lines", "Transition-line catalog for one "
                                  "configuration");
  lines_cmd.params.attach(*lines, true);
  lines_cmd.attach(*lines);
  lines_cmd.output.attach(*lines);
  lines->add_option("--config-file", config_file, "JSON defaults file");

  CLI::App* scan =
      app.add_subcommand("scan", "Field sweep of one level over b values");
  scan_cmd.params.attach(*scan, false);
  scan_cmd.state.attach(*scan);
  scan_cmd.attach(*scan);
  scan_cmd.output.attach(*scan);
  scan->add_option("--config-file", config_file, "JSON defaults file");

  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction", "Sampled radial/axial profiles for one state");
  wavefunction_cmd.params.attach(*wavefunction, true);
  wavefunction_cmd.state.attach(*wavefunction);
  wavefunction_cmd.attach(*wavefunction);
  wavefunction_cmd.output.attach(*wavefunction);
  wavefunction->add_option("--config-file", config_file, "JSON defaults file");

  CLI::App* verify = app.add_subcommand(
      "verify", "Finite-difference oracle versus the closed-form spectrum");
  verify_cmd.attach(*verify);
  verify_cmd.output.attach(*verify);
  verify->add_option("--config-file", config_file, "JSON defaults file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    const json file = load_config_file(argc, argv);
    if (level->parsed()) {
      level_cmd.params.merge(file);
      level_cmd.state.merge(file);
      level_cmd.output.merge(file);
      return level_cmd.run();
    }
    if (spectrum->parsed()) {
      spectrum_cmd.params.merge(file);
      spectrum_cmd.merge(file);
      spectrum_cmd.output.merge(file);
      return spectrum_cmd.run();
    }
    if (lines->parsed()) {
      lines_cmd.params.merge(file);
      lines_cmd.merge(file);
      lines_cmd.output.merge(file);
      return lines_cmd.run();
    }
    if (scan->parsed()) {
      scan_cmd.params.merge(file);
      scan_cmd.state.merge(file);
      scan_cmd.merge(file);
      scan_cmd.output.merge(file);
      return scan_cmd.run();
    }
    if (wavefunction->parsed()) {
      wavefunction_cmd.params.merge(file);
      wavefunction_cmd.state.merge(file);
      wavefunction_cmd.merge(file);
      wavefunction_cmd.output.merge(file);
      return wavefunction_cmd.run();
    }
    if (verify->parsed()) {
      verify_cmd.merge(file);
      verify_cmd.output.merge(file);
      return verify_cmd.run();
    }
    std::fprintf(stderr, "error: no subcommand selected\n");
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
