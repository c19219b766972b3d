// Acceptance suite: one line per criterion, nonzero exit when any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ringsim/cli.hpp"
#include "ringsim/counting.hpp"
#include "ringsim/io.hpp"
#include "ringsim/problems.hpp"

using namespace ringsim;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int failures = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int g_failed = 0;

void report(int number, const std::string& title, const Criterion& c) {
  if (c.failures == 0) {
    std::printf("PASS  criterion %2d: %s\n", number, title.c_str());
  } else {
    ++g_failed;
    std::printf("FAIL  criterion %2d: %s [%s]\n", number, title.c_str(),
                c.detail.c_str());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<oracle::PathRecord> engine_records(const RingCircuit& c) {
  std::vector<oracle::PathRecord> recs;
  for (const auto& rp : find_resonant_paths(c))
    recs.push_back({rp.path.node_ids, rp.path.input_row, rp.path.output_row});
  std::sort(recs.begin(), recs.end());
  return recs;
}

bool same_factors(const std::optional<std::set<long long>>& got,
                  const std::set<long long>& want) {
  return got.has_value() && *got == want;
}

// ---------------------------------------------------------------- criterion 1
void criterion_factorization_fixtures() {
  Criterion c;
  const auto device = build_factorization_device({3, 5, 7, 11, 13});
  const std::vector<std::pair<long long, std::set<long long>>> cases = {
      {15, {3, 5}}, {1001, {7, 11, 13}}, {15015, {3, 5, 7, 11, 13}}};
  for (const auto& [n, want] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto got = factorize(device, n);
    const double dt = seconds_since(t0);
    c.expect(same_factors(got, want), "wrong factors for " + std::to_string(n));
    c.expect(dt < 1.0, "slow factorize(" + std::to_string(n) + ")");
  }
  const auto t0 = std::chrono::steady_clock::now();
  c.expect(!factorize(device, 107).has_value(), "107 must not factorize");
  c.expect(seconds_since(t0) < 1.0, "slow factorize(107)");
  report(1, "factorization fixtures 15 / 1001 / 15015 / 107", c);
}

// ---------------------------------------------------------------- criterion 2
void criterion_factorization_exhaustive() {
  Criterion c;
  const std::vector<long long> primes = {3, 5, 7, 11, 13};
  const auto device = build_factorization_device(primes);
  const auto t0 = std::chrono::steady_clock::now();

  std::map<long long, std::set<long long>> products;  // integer oracle
  for (unsigned mask = 1; mask < 32; ++mask) {
    long long product = 1;
    std::set<long long> subset;
    for (unsigned j = 0; j < 5; ++j)
      if (mask & (1u << j)) {
        product *= primes[j];
        subset.insert(primes[j]);
      }
    products[product] = subset;
  }
  for (const auto& [n, subset] : products)
    c.expect(same_factors(factorize(device, n),  subset),
             "missed product " + std::to_string(n));

  int wrong = 0;
  for (long long n = 2; n <= 10000; ++n) {
    if (products.count(n)) continue;
    if (factorize(device, n).has_value()) ++wrong;
  }
  c.expect(wrong == 0, std::to_string(wrong) + " non-products factored");
  c.expect(seconds_since(t0) < 30.0, "exhaustive sweep too slow");
  report(2, "exhaustive soundness/completeness over N <= 10^4", c);
}

// ---------------------------------------------------------------- criterion 3
void criterion_phase_sweep() {
  Criterion c;
  const RingCircuit circuit = build_mesh_problem("example2").circuit;
  const SweepReport report_ = sweep_phase(circuit, 0.0, 2.0, 0.1);
  c.expect(report_.records.size() == 21, "expected 21 grid points");

  for (const auto& rec : report_.records) {
    // rec.param is psi; the pinned counts are indexed by 2pi - psi.
    double knob = 2.0 - rec.param;
    if (knob >= 2.0) knob -= 2.0;
    const double eps = 1e-9;

    if (knob < 0.6 - eps) {
      c.expect(rec.path_count() == 0,
               "expected 0 paths at 2pi-psi = " + std::to_string(knob) +
                   "pi, got " + std::to_string(rec.path_count()));
    } else if (std::abs(knob - 0.6) < eps) {
      c.expect(rec.path_count() == 1, "expected 1 path at 0.6pi");
      if (rec.path_count() == 1) {
        c.expect(rec.paths[0].path.input_row == 1 &&
                     rec.paths[0].path.output_row == 3,
                 "0.6pi path must run input 1 -> output 3");
      }
    } else if (std::abs(knob - 1.1) < eps || std::abs(knob - 1.8) < eps) {
      const int want = std::abs(knob - 1.1) < eps ? 2 : 4;
      c.expect(rec.path_count() == want,
               "expected " + std::to_string(want) + " paths at " +
                   std::to_string(knob) + "pi, got " +
                   std::to_string(rec.path_count()));
      std::set<int> outputs;
      for (const auto& rp : rec.paths) outputs.insert(rp.path.output_row);
      c.expect(outputs == std::set<int>{1, 3},
               "paths must reach outputs {1,3}");
    }

    // Every reported path confirmed by the independent enumerator.
    RingCircuit at_point = circuit;
    at_point.electric.set_all_output_psi(PhaseAngle::pi_units(rec.param));
    const auto expected = oracle::resonant_paths(at_point);
    std::vector<oracle::PathRecord> got;
    for (const auto& rp : rec.paths)
      got.push_back({rp.path.node_ids, rp.path.input_row, rp.path.output_row});
    std::sort(got.begin(), got.end());
    c.expect(got == expected, "engine/oracle mismatch at psi = " +
                                  std::to_string(rec.param) + "pi");
  }
  report(3, "graded-mesh phase sweep counts (0 below 0.6pi; 1/2/4 pinned)", c);
}

// ---------------------------------------------------------------- criterion 4
void criterion_gain_ladder() {
  Criterion c;
  const MeshProblem problem = build_mesh_problem("example3");
  const SweepReport report_ = sweep_gain(problem.circuit, {10, 7, 4, 3});
  const std::vector<int> want = {4, 3, 1, 0};
  for (std::size_t i = 0; i < want.size(); ++i)
    c.expect(report_.records[i].path_count() == want[static_cast<int>(i)],
             "gain " + std::to_string(report_.records[i].param) + " expected " +
                 std::to_string(want[i]) + " got " +
                 std::to_string(report_.records[i].path_count()));

  const auto solution = solve_shortest(problem);
  c.expect(solution.has_value() && solution->gain_a0 == 4.0 &&
               solution->path.length_l0() == 4,
           "surviving path at 4 A0 must have length 4 l0");
  report(4, "gain ladder 4/3/1/0 at 10/7/4/3 A0 with a 4 l0 survivor", c);
}

// ---------------------------------------------------------------- criterion 5
void criterion_via_nodes() {
  Criterion c;
  const MeshProblem problem = build_mesh_problem("example4");

  RingCircuit at10 = problem.circuit;
  at10.electric.gain_a0 = 10.0;
  c.expect(sensor_readout(at10).count_on() == 9, "10 A0 must light all 9");

  RingCircuit at8 = problem.circuit;
  at8.electric.gain_a0 = 8.0;
  const auto paths8 = find_resonant_paths(at8);
  const SensorGrid grid8 = sensor_readout(at8);
  c.expect(grid8.count_on() == 7, "8 A0 must light exactly 7 sensors");
  c.expect(paths8.size() == 1, "8 A0 must leave a unique path");
  if (paths8.size() == 1) {
    for (int id : {2, 4, 6}) {
      const auto& nodes = paths8[0].path.node_ids;
      c.expect(std::find(nodes.begin(), nodes.end(), id) != nodes.end(),
               "path must contain node " + std::to_string(id));
    }
  }

  // Below 8 A0 the engine must agree with the enumeration oracle,
  // which finds nothing.
  for (double gain : {7.0, 6.0, 5.0, 4.0, 3.0, 2.0}) {
    RingCircuit lower = problem.circuit;
    lower.electric.gain_a0 = gain;
    c.expect(engine_records(lower) == oracle::resonant_paths(lower),
             "engine/oracle mismatch at " + std::to_string(gain) + " A0");
  }
  report(5, "via-node search: 9 sensors at 10 A0, unique 7-sensor path at 8 A0", c);
}

// ---------------------------------------------------------------- criterion 6
void criterion_oracle_equivalence() {
  Criterion c;
  std::mt19937 rng(1234321);
  std::uniform_int_distribution<int> n_dist(2, 4);
  std::uniform_int_distribution<int> grid_dist(0, 19);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> gain_dist(2.0, 12.0);

  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = n_dist(rng);
    std::vector<PhaseAngle> deltas;
    for (int i = 0; i < n * n; ++i)
      deltas.push_back(PhaseAngle::pi_units(0.1 * grid_dist(rng)));
    RingCircuit circuit;
    circuit.mesh =
        build_mesh(n, coin(rng) ? Adjacency::kKing : Adjacency::kRook, deltas,
                   std::vector<std::set<int>>(
                       static_cast<std::size_t>(n * n), {1}));
    circuit.electric = ElectricPart::for_rows(n);
    for (auto& p : circuit.electric.ports) p.enabled = coin(rng) == 1;
    if (circuit.electric.enabled_input_rows().empty())
      circuit.electric.input(1 + grid_dist(rng) % n).enabled = true;
    if (circuit.electric.enabled_output_rows().empty())
      circuit.electric.output(1 + grid_dist(rng) % n).enabled = true;
    for (auto& p : circuit.electric.ports)
      if (p.side == PortSide::kOutput)
        p.psi = PhaseAngle::pi_units(0.1 * grid_dist(rng));
    circuit.electric.gain_a0 = gain_dist(rng);

    if (engine_records(circuit) != oracle::resonant_paths(circuit))
      ++mismatches;
  }
  c.expect(mismatches == 0,
           std::to_string(mismatches) + "/200 circuits mismatched");
  report(6, "engine equals the exhaustive oracle on 200 random circuits", c);
}

// ---------------------------------------------------------------- criterion 7
void criterion_counting() {
  Criterion c;
  c.expect(corner_path_count(5) == 252, "corner_path_count(5) != 252");
  for (int n = 1; n <= 8; ++n)
    c.expect(corner_path_count(n) == oracle::monotone_lattice_paths(n),
             "brute-force mismatch at n = " + std::to_string(n));
  const CapacityReport r = functional_throughput(50, 100e-6, 1e4);
  c.expect(r.time_s == 2.5e-5, "time must be exactly 25 us");
  c.expect(r.area_m2 == 2.5e-5, "area must be exactly 25 mm^2");
  c.expect(r.throughput > 1e60, "throughput must exceed 1e60");
  report(7, "path counting and functional throughput figures", c);
}

// ---------------------------------------------------------------- criterion 8
void criterion_dispersion() {
  Criterion c;
  const SpinWaveMedium mssw{9.6e-6, 1750.0, 330.0, 2.8, WaveGeometry::kMssw};
  SpinWaveMedium bvmsw = mssw;
  bvmsw.geometry = WaveGeometry::kBvmsw;

  const double f_ms0 = frequency_at(mssw, 0.0);
  const double f_bv0 = frequency_at(bvmsw, 0.0);
  c.expect(std::abs(f_ms0 - f_bv0) <= 1e-9 * f_ms0,
           "branches disagree at k -> 0");

  // Strict monotonicity on a 50-point log grid over kd0 in [1e-4, 20].
  for (int branch = 0; branch < 2; ++branch) {
    const SpinWaveMedium& m = branch == 0 ? mssw : bvmsw;
    double prev = frequency_at(m, 1e-4 / m.d0_m);
    for (int i = 1; i < 50; ++i) {
      const double kd = 1e-4 * std::pow(20.0 / 1e-4, i / 49.0);
      const double f = frequency_at(m, kd / m.d0_m);
      c.expect(branch == 0 ? f > prev : f < prev,
               "monotonicity broken at kd0 = " + std::to_string(kd));
      prev = f;
    }
  }

  // Round-trip on 100 log-spaced samples per branch.
  for (int branch = 0; branch < 2; ++branch) {
    const SpinWaveMedium& m = branch == 0 ? mssw : bvmsw;
    const double top = branch == 0 ? 10.0 : 20.0;
    for (int i = 0; i < 100; ++i) {
      const double k = 1e-4 * std::pow(top / 1e-4, i / 99.0) / m.d0_m;
      const double back = wavenumber_for(m, frequency_at(m, k));
      if (std::abs(back - k) / k > 1e-6) {
        c.expect(false, "round-trip failed at k = " + std::to_string(k));
        break;
      }
    }
  }
  report(8, "dispersion branch agreement, monotonicity, and inversion", c);
}

// ---------------------------------------------------------------- criterion 9
void criterion_amplitude() {
  Criterion c;
  const double gain = 0.97;
  const auto tuned = simulate_rounds(gain, PhaseAngle{}, 200, 1.0);
  const auto red = simulate_rounds(gain, PhaseAngle::pi_units(0.1), 200, 1.0);
  const auto blue = simulate_rounds(gain, PhaseAngle::pi_units(0.3), 200, 1.0);

  bool monotone = true;
  for (std::size_t i = 1; i < tuned.magnitudes.size(); ++i)
    monotone = monotone && tuned.magnitudes[i] >= tuned.magnitudes[i - 1];
  c.expect(monotone, "resonant trace must be non-decreasing");

  // Plateau from a long run; the 200-round trace must reach 99% of it.
  const double plateau =
      simulate_rounds(gain, PhaseAngle{}, 2000, 1.0).magnitudes.back();
  c.expect(tuned.magnitudes.back() >= 0.99 * plateau,
           "resonant trace must reach 0.99 of the plateau in 200 rounds");

  const double red_sup = *std::max_element(red.magnitudes.begin(), red.magnitudes.end());
  const double blue_sup =
      *std::max_element(blue.magnitudes.begin(), blue.magnitudes.end());
  c.expect(red_sup < 0.2 * plateau, "0.1pi detuning must stay below 20%");
  c.expect(blue_sup < 0.2 * plateau, "0.3pi detuning must stay below 20%");
  c.expect(plateau > red_sup && red_sup > blue_sup,
           "ordering must be resonant >> 0.1pi > 0.3pi");
  report(9, "round-by-round amplification: growth, saturation, detuning order", c);
}

// --------------------------------------------------------------- criterion 10
std::map<std::string, std::string> run_bundle(
    const std::vector<std::string>& args, const fs::path& dir) {
  fs::remove_all(dir);
  std::vector<std::string> full = {"ringsim"};
  full.insert(full.end(), args.begin(), args.end());
  full.push_back("--out");
  full.push_back(dir.string());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);

  std::map<std::string, std::string> files;
  files["<stdout>"] = out.str();
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    files[entry.path().filename().string()] = ss.str();
  }
  return files;
}

void criterion_determinism() {
  Criterion c;
  const fs::path base = fs::temp_directory_path() / "ringsim_acceptance";
  const std::vector<std::vector<std::string>> runs = {
      {"factorize", "15"},
      {"factorize", "107"},
      {"solve", "--fixture", "example2", "--sweep-phase"},
      {"solve", "--fixture", "example3"},
      {"solve", "--fixture", "example4"},
      {"sweep-gain", "--fixture", "example3"},
      {"dispersion", "--geometry", "bvmsw"},
      {"capacity", "--n", "50", "--l", "100e-6", "--vg", "1e4"},
  };
  for (const auto& args : runs) {
    const fs::path dir = base / args[0];
    const auto first = run_bundle(args, dir);
    const auto second = run_bundle(args, dir);
    c.expect(first == second && first.size() > 1,
             "bundle for \"" + args[0] + "\" not reproducible");
  }
  fs::remove_all(base);
  report(10, "every fixture produces byte-identical report bundles", c);
}

}  // namespace

int main() {
  criterion_factorization_fixtures();
  criterion_factorization_exhaustive();
  criterion_phase_sweep();
  criterion_gain_ladder();
  criterion_via_nodes();
  criterion_oracle_equivalence();
  criterion_counting();
  criterion_dispersion();
  criterion_amplitude();
  criterion_determinism();

  if (g_failed == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failed);
  return 1;
}
