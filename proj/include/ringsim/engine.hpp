#pragma once

#include <string>
#include <vector>

#include "ringsim/circuit.hpp"

namespace ringsim {

/// A path that satisfies both ring resonance conditions: accumulated phase
/// plus the output shifter setting is a multiple of 2*pi (to tolerance), and
/// the net amplifier gain covers the path's propagation loss.
struct ResonantPath {
  Path path;
  PhaseAngle total_phase;      // accumulated internal phase
  double required_gain_a0 = 0; // path length in l0 units
  int channel = 0;

  friend bool operator==(const ResonantPath&, const ResonantPath&) = default;
};

/// Row-major boolean readout of the per-node power sensors.
struct SensorGrid {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> cells;  // row-major, 1 = power above W0

  bool at(int row, int col) const;
  int count_on() const;
  /// Flat 0/1 string, row-major.
  std::string bits() const;

  friend bool operator==(const SensorGrid&, const SensorGrid&) = default;
};

/// Per-round amplitude magnitudes of the loop iteration.
struct AmplitudeTrace {
  std::vector<double> magnitudes;
  int rounds = 0;
  double p_sat = 0.0;
};

struct SweepRecord {
  double param = 0.0;  // psi in pi units, or gain in A0 units
  std::vector<ResonantPath> paths;
  SensorGrid sensors;

  int path_count() const { return static_cast<int>(paths.size()); }
};

struct SweepReport {
  std::string parameter;  // "psi_pi_units" or "gain_A0"
  std::vector<SweepRecord> records;
};

/// Every simple path between the two anchored ports, tagged with the channels
/// admitted by the intersection of the filters along it. Paths whose channel
/// intersection is empty are dropped. Throws when either port is off.
std::vector<Path> enumerate_paths(const RingCircuit& circuit, int input_row,
                                  int output_row);

/// enumerate_paths over every enabled input/output port pair, ordered by
/// (output row, node sequence).
std::vector<Path> enumerate_all_paths(const RingCircuit& circuit);

/// All paths meeting the auto-oscillation conditions, deterministically
/// ordered by output port then node sequence. Empty result means the circuit
/// does not self-oscillate.
std::vector<ResonantPath> find_resonant_paths(const RingCircuit& circuit);

/// Union of the node sets of all resonant paths.
SensorGrid sensor_readout(const RingCircuit& circuit);

/// Iterates c <- sat(g * e^(i*detuning) * c + c_seed) with
/// sat(x) = x / sqrt(1 + |x|^2 / p_sat) and c_seed = 1e-3 * sqrt(p_sat),
/// returning |c| per round.
AmplitudeTrace simulate_rounds(double round_gain, PhaseAngle detuning,
                               int rounds, double p_sat);

/// One resonance evaluation per grid point with all output shifters set to
/// the same value. Bounds and step are in pi units; the grid includes both
/// endpoints.
SweepReport sweep_phase(const RingCircuit& circuit, double start_pi,
                        double stop_pi, double step_pi);

/// One resonance evaluation per amplification level, with the phase
/// shifters left as configured.
SweepReport sweep_gain(const RingCircuit& circuit,
                       const std::vector<double>& levels_a0);

}  // namespace ringsim
