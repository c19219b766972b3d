#include "ringsim/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringsim/counting.hpp"
#include "ringsim/io.hpp"
#include "ringsim/problems.hpp"
#include "ringsim/version.hpp"

namespace ringsim {

namespace {

constexpr int kSolved = 0;
constexpr int kNoResonance = 1;
constexpr int kError = 2;

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

double parse_pi_value(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.substr(body.size() - 2) == "pi")
    body = body.substr(0, body.size() - 2);
  std::size_t used = 0;
  const double value = std::stod(body, &used);
  if (used != body.size())
    throw CLI::ValidationError("phase", "cannot parse \"" + text + "\"");
  return value;
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) levels.push_back(std::stod(item));
  return levels;
}

std::vector<long long> parse_primes(const std::string& text) {
  std::vector<long long> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) primes.push_back(std::stoll(item));
  return primes;
}

struct CommonOpts {
  std::string fixture;
  std::string circuit_file;
  std::string out_dir;
  bool json = false;
  double tolerance = -1.0;  // <0 = keep the circuit's own value
};

RingCircuit resolve_circuit(const CommonOpts& opts, std::ostream& err,
                            MeshProblem* problem_out = nullptr) {
  RingCircuit circuit;
  if (!opts.fixture.empty()) {
    MeshProblem problem = build_mesh_problem(opts.fixture);
    circuit = problem.circuit;
    if (problem_out != nullptr) *problem_out = std::move(problem);
  } else if (!opts.circuit_file.empty()) {
    std::vector<std::string> warnings;
    circuit = load_circuit(opts.circuit_file, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    if (problem_out != nullptr) {
      problem_out->name = opts.circuit_file;
      problem_out->circuit = circuit;
    }
  } else {
    throw CLI::ValidationError("input", "need --fixture or --circuit");
  }
  if (opts.tolerance > 0.0) circuit.phase_tolerance = opts.tolerance;
  if (problem_out != nullptr) problem_out->circuit = circuit;
  return circuit;
}

void write_bundle(const RunManifest& manifest,
                  const std::vector<std::pair<std::string, std::string>>& files) {
  if (manifest.out_dir.empty()) return;
  const fs::path dir(manifest.out_dir);
  write_file(dir / "manifest.json", manifest_json(manifest));
  for (const auto& [name, content] : files) write_file(dir / name, content);
}

void print_sensors(std::ostream& out, const SensorGrid& grid) {
  out << render_grid(grid) << grid.bits() << "\n";
}

int cmd_factorize(const CommonOpts& opts, const std::string& primes_text,
                  long long n, std::ostream& out, std::ostream& err) {
  const FactorizationDevice device =
      build_factorization_device(parse_primes(primes_text));
  RingCircuit circuit = device.circuit;
  if (opts.tolerance > 0.0) circuit.phase_tolerance = opts.tolerance;
  FactorizationDevice tuned = device;
  tuned.circuit = circuit;

  const auto factors = factorize(tuned, n);

  // Sensor view at the factorization shifter setting.
  RingCircuit at_n = tuned.circuit;
  at_n.electric.set_all_output_psi(
      PhaseAngle::pi_units(2.0 - std::log10(static_cast<double>(n))));
  const SensorGrid sensors = sensor_readout(at_n);

  RunManifest manifest = RunManifest::make("factorize", "device");
  manifest.overrides["primes"] = primes_text;
  manifest.overrides["N"] = std::to_string(n);
  manifest.out_dir = opts.out_dir;

  Json result;
  result["N"] = n;
  if (factors) {
    result["factors"] = *factors;
  } else {
    result["factors"] = nullptr;
  }
  result["sensor_bits"] = sensors.bits();
  write_bundle(manifest, {{"result.json", result.dump(2) + "\n"}});

  if (opts.json) {
    out << result.dump(2) << "\n";
  } else if (factors) {
    std::string line;
    for (long long p : *factors) {
      if (!line.empty()) line += " × ";
      line += std::to_string(p);
    }
    out << line << "\n";
    print_sensors(out, sensors);
  } else {
    out << "no factorization over device primes\n";
    print_sensors(out, sensors);
  }
  (void)err;
  return factors ? kSolved : kNoResonance;
}

int sweep_to_outputs(const SweepReport& report, const RunManifest& manifest,
                     const CommonOpts& opts, std::ostream& out) {
  write_bundle(manifest, {{"sweep.csv", sweep_csv(report)},
                          {"sweep.json", sweep_json(report)}});
  if (opts.json) {
    out << sweep_json(report);
  } else {
    out << sweep_csv(report);
  }
  for (const SweepRecord& rec : report.records)
    if (rec.path_count() > 0) return kSolved;
  return kNoResonance;
}

int cmd_sweep_phase(const CommonOpts& opts, const std::string& start,
                    const std::string& stop, const std::string& step,
                    std::ostream& out, std::ostream& err) {
  const RingCircuit circuit = resolve_circuit(opts, err);
  const SweepReport report =
      sweep_phase(circuit, parse_pi_value(start), parse_pi_value(stop),
                  parse_pi_value(step));
  RunManifest manifest = RunManifest::make(
      "sweep-phase", opts.fixture.empty() ? opts.circuit_file : opts.fixture);
  manifest.overrides["start"] = start;
  manifest.overrides["stop"] = stop;
  manifest.overrides["step"] = step;
  manifest.out_dir = opts.out_dir;
  return sweep_to_outputs(report, manifest, opts, out);
}

int cmd_sweep_gain(const CommonOpts& opts, const std::string& levels_text,
                   std::ostream& out, std::ostream& err) {
  MeshProblem problem;
  const RingCircuit circuit = resolve_circuit(opts, err, &problem);
  std::vector<double> levels = levels_text.empty()
                                   ? problem.gain_levels
                                   : parse_levels(levels_text);
  if (levels.empty())
    throw CLI::ValidationError("levels", "need --levels for this input");
  const SweepReport report = sweep_gain(circuit, levels);
  RunManifest manifest = RunManifest::make(
      "sweep-gain", opts.fixture.empty() ? opts.circuit_file : opts.fixture);
  manifest.overrides["levels"] = levels_text.empty() ? "fixture" : levels_text;
  manifest.out_dir = opts.out_dir;
  return sweep_to_outputs(report, manifest, opts, out);
}

int cmd_solve(const CommonOpts& opts, bool do_sweep_phase,
              const std::string& step, std::ostream& out, std::ostream& err) {
  MeshProblem problem;
  resolve_circuit(opts, err, &problem);

  if (do_sweep_phase) {
    const SweepReport report =
        sweep_phase(problem.circuit, 0.0, 2.0, parse_pi_value(step));
    RunManifest manifest = RunManifest::make("solve", problem.name);
    manifest.overrides["sweep-phase"] = "true";
    manifest.overrides["step"] = step;
    manifest.out_dir = opts.out_dir;
    return sweep_to_outputs(report, manifest, opts, out);
  }

  RunManifest manifest = RunManifest::make("solve", problem.name);
  manifest.out_dir = opts.out_dir;

  if (problem.objective == Objective::kPhaseMatch) {
    const auto paths = find_resonant_paths(problem.circuit);
    const SensorGrid sensors = sensor_readout(problem.circuit);
    Json result;
    result["resonant_paths"] = Json::array();
    for (const auto& rp : paths) {
      Json jp;
      jp["input"] = rp.path.input_row;
      jp["output"] = rp.path.output_row;
      jp["nodes"] = rp.path.node_ids;
      jp["total_phase_pi_units"] = rp.total_phase.in_pi_units();
      jp["required_gain_A0"] = rp.required_gain_a0;
      result["resonant_paths"].push_back(std::move(jp));
    }
    result["sensor_bits"] = sensors.bits();
    write_bundle(manifest, {{"result.json", result.dump(2) + "\n"}});
    if (opts.json) {
      out << result.dump(2) << "\n";
    } else {
      out << paths.size() << " resonant path(s)\n";
      for (const auto& rp : paths) {
        out << "  input " << rp.path.input_row << " -> output "
            << rp.path.output_row << ", length " << rp.path.length_l0()
            << " l0, nodes";
        for (int id : rp.path.node_ids) out << " " << id;
        out << "\n";
      }
      print_sensors(out, sensors);
    }
    return paths.empty() ? kNoResonance : kSolved;
  }

  const auto solution = solve_shortest(problem);
  const SweepReport report = sweep_gain(problem.circuit, problem.gain_levels);
  Json result;
  if (solution) {
    result["gain_A0"] = solution->gain_a0;
    result["length_l0"] = solution->path.length_l0();
    result["nodes"] = solution->path.node_ids;
    result["input"] = solution->path.input_row;
    result["output"] = solution->path.output_row;
  } else {
    result["path"] = nullptr;
  }
  write_bundle(manifest, {{"result.json", result.dump(2) + "\n"},
                          {"sweep.csv", sweep_csv(report)},
                          {"sweep.json", sweep_json(report)}});
  if (opts.json) {
    out << result.dump(2) << "\n";
  } else if (solution) {
    out << "shortest path at " << solution->gain_a0 << " A0, length "
        << solution->path.length_l0() << " l0, nodes";
    for (int id : solution->path.node_ids) out << " " << id;
    out << "\n";
    RingCircuit at_best = problem.circuit;
    at_best.electric.gain_a0 = solution->gain_a0;
    print_sensors(out, sensor_readout(at_best));
  } else {
    out << "no resonant path at any amplification level\n";
  }
  return solution ? kSolved : kNoResonance;
}

int cmd_dispersion(const std::string& geometry, double d0_um, double m0,
                   double h0, double gamma, double k_min, double k_max,
                   int points, const std::string& out_dir, bool json,
                   std::ostream& out) {
  SpinWaveMedium medium;
  medium.d0_m = d0_um * 1e-6;
  medium.m0_4pi_gauss = m0;
  medium.h0_oe = h0;
  medium.gamma_mhz_per_oe = gamma;
  if (geometry == "mssw")
    medium.geometry = WaveGeometry::kMssw;
  else if (geometry == "bvmsw")
    medium.geometry = WaveGeometry::kBvmsw;
  else
    throw CLI::ValidationError("geometry", "expected mssw or bvmsw");

  const auto table = dispersion_table(medium, k_min, k_max, points);
  const auto [f_low, f_high] = band_limits(medium);

  RunManifest manifest = RunManifest::make("dispersion", geometry);
  manifest.overrides["d0_um"] = std::to_string(d0_um);
  manifest.overrides["h0_oe"] = std::to_string(h0);
  manifest.out_dir = out_dir;
  write_bundle(manifest, {{"dispersion.csv", dispersion_csv(table)}});

  if (json) {
    Json root;
    root["band_ghz"] = {f_low, f_high};
    root["points"] = Json::array();
    for (const auto& p : table)
      root["points"].push_back({p.k_rad_per_m, p.f_ghz});
    out << root.dump(2) << "\n";
  } else {
    out << "band: " << f_low << " .. " << f_high << " GHz\n";
    out << dispersion_csv(table);
  }
  return kSolved;
}

int cmd_capacity(int n, double l, double vg, const std::string& out_dir,
                 bool json, std::ostream& out) {
  const CapacityReport report = functional_throughput(n, l, vg);
  Json root;
  root["n"] = report.n;
  root["corner_paths"] = report.corner_paths.str();
  root["total_paths"] = report.total_paths.str();
  root["instructions"] = report.instructions.str();
  root["area_m2"] = report.area_m2;
  root["time_s"] = report.time_s;
  root["throughput_ops_per_m2_s"] = report.throughput;
  root["note"] = report.note;

  RunManifest manifest = RunManifest::make("capacity", "n=" + std::to_string(n));
  manifest.out_dir = out_dir;
  write_bundle(manifest, {{"capacity.json", root.dump(2) + "\n"}});

  if (json) {
    out << root.dump(2) << "\n";
  } else {
    out << "n x n mesh, n = " << report.n << "\n"
        << "corner-to-corner paths : " << report.corner_paths.str() << "\n"
        << "total paths            : " << report.total_paths.str() << "\n"
        << "instructions           : " << report.instructions.str() << "\n"
        << "area                   : " << report.area_m2 << " m^2\n"
        << "time                   : " << report.time_s << " s\n"
        << "functional throughput  : " << report.throughput
        << " ops/(m^2 s)\n";
  }
  return kSolved;
}

int cmd_validate(const std::string& file, std::ostream& out,
                 std::ostream& err) {
  std::vector<std::string> warnings;
  try {
    load_circuit(file, &warnings);
  } catch (const ParseError& e) {
    err << "invalid: " << e.what() << "\n";
    return kError;
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  out << "ok\n";
  return kSolved;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"multi-path active ring circuit simulator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts common;
  long long n_value = 0;
  std::string primes_text = "3,5,7,11,13";
  std::string start = "0pi", stop = "2pi", step = "0.1pi";
  std::string levels_text;
  bool do_sweep_phase = false;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) {
      sub->add_option("--fixture", common.fixture,
                      "built-in problem: example2, example3, example4");
      sub->add_option("--circuit", common.circuit_file,
                      "circuit description file");
    }
    sub->add_option("--out", common.out_dir, "output bundle directory");
    sub->add_flag("--json", common.json, "print JSON instead of a summary");
    sub->add_option("--tolerance", common.tolerance,
                    "phase tolerance override, radians");
  };

  auto* factorize_cmd =
      app.add_subcommand("factorize", "factor N over the device primes");
  factorize_cmd->add_option("N", n_value, "number to factorize")->required();
  factorize_cmd->add_option("--primes", primes_text,
                            "comma-separated device primes");
  add_common(factorize_cmd, false);

  auto* solve_cmd = app.add_subcommand("solve", "run a problem fixture");
  solve_cmd->add_flag("--sweep-phase", do_sweep_phase,
                      "sweep the external phase instead of solving");
  solve_cmd->add_option("--step", step, "phase sweep step, e.g. 0.1pi");
  add_common(solve_cmd);

  auto* sweep_phase_cmd =
      app.add_subcommand("sweep-phase", "resonances vs external phase");
  sweep_phase_cmd->add_option("--start", start, "first grid point, e.g. 0pi");
  sweep_phase_cmd->add_option("--stop", stop, "last grid point, e.g. 2pi");
  sweep_phase_cmd->add_option("--step", step, "grid step, e.g. 0.1pi");
  add_common(sweep_phase_cmd);

  auto* sweep_gain_cmd =
      app.add_subcommand("sweep-gain", "resonances vs amplification");
  sweep_gain_cmd->add_option("--levels", levels_text,
                             "comma-separated A0 levels");
  add_common(sweep_gain_cmd);

  std::string geometry = "mssw";
  double d0_um = 9.6, m0 = 1750.0, h0 = 330.0, gamma = 2.8;
  double k_min = 0.0, k_max = 1e6;
  int points = 101;
  bool disp_json = false;
  std::string disp_out;
  auto* dispersion_cmd =
      app.add_subcommand("dispersion", "spin-wave dispersion table");
  dispersion_cmd->add_option("--geometry", geometry, "mssw or bvmsw");
  dispersion_cmd->add_option("--d0-um", d0_um, "film thickness, micrometers");
  dispersion_cmd->add_option("--m0", m0, "saturation magnetization 4*pi*M0, G");
  dispersion_cmd->add_option("--h0", h0, "bias field, Oe");
  dispersion_cmd->add_option("--gamma", gamma, "gyromagnetic ratio, MHz/Oe");
  dispersion_cmd->add_option("--k-min", k_min, "lowest wavenumber, rad/m");
  dispersion_cmd->add_option("--k-max", k_max, "highest wavenumber, rad/m");
  dispersion_cmd->add_option("--points", points, "table size");
  dispersion_cmd->add_option("--out", disp_out, "output bundle directory");
  dispersion_cmd->add_flag("--json", disp_json, "print JSON");

  int cap_n = 5;
  double cap_l = 100e-6, cap_vg = 1e4;
  bool cap_json = false;
  std::string cap_out;
  auto* capacity_cmd =
      app.add_subcommand("capacity", "closed-form capacity figures");
  capacity_cmd->add_option("--n", cap_n, "mesh side");
  capacity_cmd->add_option("--l", cap_l, "cell size, meters");
  capacity_cmd->add_option("--vg", cap_vg, "group velocity, m/s");
  capacity_cmd->add_option("--out", cap_out, "output bundle directory");
  capacity_cmd->add_flag("--json", cap_json, "print JSON");

  std::string validate_file;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a circuit description file");
  validate_cmd->add_option("--circuit", validate_file, "circuit file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSolved;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kSolved;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kError;
  }

  try {
    if (factorize_cmd->parsed())
      return cmd_factorize(common, primes_text, n_value, out, err);
    if (solve_cmd->parsed())
      return cmd_solve(common, do_sweep_phase, step, out, err);
    if (sweep_phase_cmd->parsed())
      return cmd_sweep_phase(common, start, stop, step, out, err);
    if (sweep_gain_cmd->parsed())
      return cmd_sweep_gain(common, levels_text, out, err);
    if (dispersion_cmd->parsed())
      return cmd_dispersion(geometry, d0_um, m0, h0, gamma, k_min, k_max,
                            points, disp_out, disp_json, out);
    if (capacity_cmd->parsed())
      return cmd_capacity(cap_n, cap_l, cap_vg, cap_out, cap_json, out);
    if (validate_cmd->parsed()) return cmd_validate(validate_file, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << app.help();
  return kError;
}

}  // namespace ringsim
