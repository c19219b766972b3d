#include "ringsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iterator>
#include <stdexcept>

namespace ringsim {

namespace {

// Gain comparisons use a small slack so that e.g. gain 4.0 covers a length-4
// path despite decimal rounding.
constexpr double kGainSlack = 1e-9;

std::set<int> intersect(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

}  // namespace

bool SensorGrid::at(int row, int col) const {
  if (row < 1 || row > rows || col < 1 || col > cols)
    throw std::invalid_argument("sensor position out of range");
  return cells[static_cast<std::size_t>((row - 1) * cols + col - 1)] != 0;
}

int SensorGrid::count_on() const {
  int n = 0;
  for (auto c : cells) n += c != 0;
  return n;
}

std::string SensorGrid::bits() const {
  std::string s;
  s.reserve(cells.size());
  for (auto c : cells) s.push_back(c ? '1' : '0');
  return s;
}

std::vector<Path> enumerate_paths(const RingCircuit& circuit, int input_row,
                                  int output_row) {
  circuit.validate(false);
  const Mesh& mesh = circuit.mesh;
  if (input_row < 1 || input_row > mesh.rows())
    throw std::invalid_argument("input row out of range");
  if (output_row < 1 || output_row > mesh.rows())
    throw std::invalid_argument("output row out of range");
  if (!circuit.electric.input(input_row).enabled)
    throw std::invalid_argument("input port " + std::to_string(input_row) +
                                " is switched off");
  if (!circuit.electric.output(output_row).enabled)
    throw std::invalid_argument("output port " + std::to_string(output_row) +
                                " is switched off");

  const int goal = mesh.node_id(output_row, mesh.cols());
  const int start = mesh.node_id(input_row, 1);

  std::vector<Path> result;
  std::vector<int> stack{start};
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(mesh.node_count()) + 1, 0);
  std::vector<std::set<int>> channel_stack{mesh.node(start).filter};
  visited[static_cast<std::size_t>(start)] = 1;

  // Iterative DFS; prunes any branch whose channel intersection runs dry.
  struct Frame {
    std::vector<int> nbrs;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  frames.push_back({mesh.neighbors(start), 0});

  auto emit = [&]() {
    if (stack.back() != goal) return;
    Path p;
    p.input_row = input_row;
    p.output_row = output_row;
    p.node_ids = stack;
    p.channels = channel_stack.back();
    result.push_back(std::move(p));
  };
  emit();

  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next >= f.nbrs.size()) {
      visited[static_cast<std::size_t>(stack.back())] = 0;
      stack.pop_back();
      channel_stack.pop_back();
      frames.pop_back();
      continue;
    }
    const int nb = f.nbrs[f.next++];
    if (visited[static_cast<std::size_t>(nb)]) continue;
    std::set<int> ch = intersect(channel_stack.back(), mesh.node(nb).filter);
    if (ch.empty()) continue;
    visited[static_cast<std::size_t>(nb)] = 1;
    stack.push_back(nb);
    channel_stack.push_back(std::move(ch));
    frames.push_back({mesh.neighbors(nb), 0});
    emit();
  }
  std::sort(result.begin(), result.end(),
            [](const Path& a, const Path& b) { return a.node_ids < b.node_ids; });
  return result;
}

std::vector<Path> enumerate_all_paths(const RingCircuit& circuit) {
  circuit.validate();
  std::vector<Path> all;
  for (int out_row : circuit.electric.enabled_output_rows())
    for (int in_row : circuit.electric.enabled_input_rows()) {
      auto paths = enumerate_paths(circuit, in_row, out_row);
      all.insert(all.end(), std::make_move_iterator(paths.begin()),
                 std::make_move_iterator(paths.end()));
    }
  std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
    if (a.output_row != b.output_row) return a.output_row < b.output_row;
    return a.node_ids < b.node_ids;
  });
  return all;
}

std::vector<ResonantPath> find_resonant_paths(const RingCircuit& circuit) {
  circuit.validate();
  std::vector<ResonantPath> resonant;
  for (const Path& path : enumerate_all_paths(circuit)) {
    const PortConfig& out = circuit.electric.output(path.output_row);
    PhaseAngle total;
    for (int id : path.node_ids) total += circuit.mesh.node(id).delta;

    const double mismatch = (out.psi + total).distance_to_zero();
    if (mismatch > circuit.phase_tolerance) continue;

    const double required = path.length_l0() * circuit.mesh.cell_pitch_l0();
    const double net_gain = circuit.electric.gain_a0 - out.attenuation_a0;
    if (net_gain + kGainSlack < required) continue;

    resonant.push_back(ResonantPath{path, total, required, path.channel()});
  }
  return resonant;  // enumerate_all_paths already orders by (output, nodes)
}

SensorGrid sensor_readout(const RingCircuit& circuit) {
  SensorGrid grid;
  grid.rows = circuit.mesh.rows();
  grid.cols = circuit.mesh.cols();
  grid.cells.assign(static_cast<std::size_t>(circuit.mesh.node_count()), 0);
  for (const ResonantPath& rp : find_resonant_paths(circuit))
    for (int id : rp.path.node_ids)
      grid.cells[static_cast<std::size_t>(id - 1)] = 1;
  return grid;
}

AmplitudeTrace simulate_rounds(double round_gain, PhaseAngle detuning,
                               int rounds, double p_sat) {
  if (!std::isfinite(round_gain) || round_gain < 0.0)
    throw std::invalid_argument("round gain must be finite and non-negative");
  if (!std::isfinite(p_sat) || p_sat <= 0.0)
    throw std::invalid_argument("saturation power must be positive");
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");

  const double seed = 1e-3 * std::sqrt(p_sat);
  const std::complex<double> loop =
      round_gain * std::polar(1.0, detuning.rad());

  AmplitudeTrace trace;
  trace.rounds = rounds;
  trace.p_sat = p_sat;
  trace.magnitudes.reserve(static_cast<std::size_t>(rounds));
  std::complex<double> c = 0.0;
  for (int i = 0; i < rounds; ++i) {
    const std::complex<double> x = loop * c + seed;
    c = x / std::sqrt(1.0 + std::norm(x) / p_sat);
    trace.magnitudes.push_back(std::abs(c));
  }
  return trace;
}

namespace {

SweepRecord evaluate_point(const RingCircuit& circuit, double param) {
  SweepRecord rec;
  rec.param = param;
  rec.paths = find_resonant_paths(circuit);
  rec.sensors.rows = circuit.mesh.rows();
  rec.sensors.cols = circuit.mesh.cols();
  rec.sensors.cells.assign(static_cast<std::size_t>(circuit.mesh.node_count()), 0);
  for (const ResonantPath& rp : rec.paths)
    for (int id : rp.path.node_ids)
      rec.sensors.cells[static_cast<std::size_t>(id - 1)] = 1;
  return rec;
}

}  // namespace

SweepReport sweep_phase(const RingCircuit& circuit, double start_pi,
                        double stop_pi, double step_pi) {
  if (!(step_pi > 0.0)) throw std::invalid_argument("phase step must be positive");
  if (stop_pi < start_pi - 1e-12)
    throw std::invalid_argument("phase sweep grid is empty");

  SweepReport report;
  report.parameter = "psi_pi_units";
  RingCircuit working = circuit;
  const int points =
      static_cast<int>(std::floor((stop_pi - start_pi) / step_pi + 1e-9)) + 1;
  for (int i = 0; i < points; ++i) {
    const double psi_pi = start_pi + i * step_pi;
    working.electric.set_all_output_psi(PhaseAngle::pi_units(psi_pi));
    report.records.push_back(evaluate_point(working, psi_pi));
  }
  return report;
}

SweepReport sweep_gain(const RingCircuit& circuit,
                       const std::vector<double>& levels_a0) {
  if (levels_a0.empty()) throw std::invalid_argument("gain level list is empty");
  for (double g : levels_a0)
    if (!(g >= 0.0)) throw std::invalid_argument("gain level must be non-negative");

  SweepReport report;
  report.parameter = "gain_A0";
  RingCircuit working = circuit;
  for (double g : levels_a0) {
    working.electric.gain_a0 = g;
    report.records.push_back(evaluate_point(working, g));
  }
  return report;
}

}  // namespace ringsim
