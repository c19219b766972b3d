#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringsim/dispersion.hpp"
#include "ringsim/phase.hpp"

namespace ringsim {

/// A frequency channel label. The physical value is optional; routing only
/// cares about the id.
struct FrequencyChannel {
  int id = 0;
  std::optional<double> ghz;

  friend bool operator==(const FrequencyChannel&, const FrequencyChannel&) = default;
};

enum class Adjacency { kRook, kKing };

/// One delay line: a phase shift plus a bandpass filter. The power sensor
/// state is not stored here; readouts are produced as fresh SensorGrid values.
struct MeshNode {
  int id = 0;              // 1-based, row-major
  PhaseAngle delta;        // internal phase shift
  std::set<int> filter;    // admitted channel ids, never empty

  friend bool operator==(const MeshNode&, const MeshNode&) = default;
};

/// A rectangular grid of delay lines. Square n-by-n meshes are the common
/// case; two-row grids model chains of two-path blocks.
class Mesh {
 public:
  Mesh() = default;

  static Mesh grid(int rows, int cols, Adjacency adjacency,
                   const std::vector<PhaseAngle>& deltas,
                   const std::vector<std::set<int>>& filters,
                   double cell_pitch_l0 = 1.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length for square meshes.
  int side() const;
  int node_count() const { return static_cast<int>(nodes_.size()); }

  Adjacency adjacency() const { return adjacency_; }
  double cell_pitch_l0() const { return cell_pitch_; }

  const MeshNode& node(int id) const;
  const std::vector<MeshNode>& nodes() const { return nodes_; }

  int node_id(int row, int col) const;  // 1-based row/col
  int row_of(int id) const { return (id - 1) / cols_ + 1; }
  int col_of(int id) const { return (id - 1) % cols_ + 1; }

  bool adjacent(int a, int b) const;
  std::vector<int> neighbors(int id) const;  // sorted ascending

  friend bool operator==(const Mesh&, const Mesh&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Adjacency adjacency_ = Adjacency::kRook;
  double cell_pitch_ = 1.0;
  std::vector<MeshNode> nodes_;
};

/// Builds a validated square mesh with row-major node numbering
/// (node 1 = top-left, node n*n = bottom-right).
Mesh build_mesh(int n, Adjacency adjacency,
                const std::vector<PhaseAngle>& deltas,
                const std::vector<std::set<int>>& filters);

enum class PortSide { kInput, kOutput };

/// Switchable port. Output ports carry the external phase shifter and a
/// variable attenuator; input ports carry neither.
struct PortConfig {
  PortSide side = PortSide::kInput;
  int row = 0;
  bool enabled = false;
  PhaseAngle psi;               // outputs only
  double attenuation_a0 = 0.0;  // outputs only

  friend bool operator==(const PortConfig&, const PortConfig&) = default;
};

/// The active electric loop: one amplifier plus the 2*rows port bank.
/// Amplification is measured in A0 units with the A0 * l0 = 1 convention,
/// so the gain needed by a path equals its length in l0 units.
struct ElectricPart {
  double gain_a0 = 0.0;
  std::vector<PortConfig> ports;  // inputs rows 1..R, then outputs rows 1..R

  static ElectricPart for_rows(int rows);

  PortConfig& input(int row);
  PortConfig& output(int row);
  const PortConfig& input(int row) const;
  const PortConfig& output(int row) const;

  std::vector<int> enabled_input_rows() const;
  std::vector<int> enabled_output_rows() const;

  void set_all_output_psi(PhaseAngle psi);

  friend bool operator==(const ElectricPart&, const ElectricPart&) = default;
};

/// The complete device: passive mesh plus electric loop.
struct RingCircuit {
  Mesh mesh;
  ElectricPart electric;
  double phase_tolerance = 0.01;  // radians
  double power_threshold = 1.0;   // sensor reference level W0
  std::optional<SpinWaveMedium> physical;

  /// Throws std::invalid_argument when any structural invariant is broken.
  /// `for_run` additionally requires at least one input and one output
  /// switch to be on.
  void validate(bool for_run = true) const;

  friend bool operator==(const RingCircuit&, const RingCircuit&) = default;
};

/// A simple walk from an input port to an output port. The first node lies
/// in column 1 at the input port's row, the last in the final column at the
/// output port's row. `channels` is the intersection of the filters along
/// the walk and is never empty for a viable path.
struct Path {
  int input_row = 0;
  std::vector<int> node_ids;
  int output_row = 0;
  std::set<int> channels;

  /// Canonical channel: the smallest admitted id.
  int channel() const;
  /// Length in l0 units: internal edges plus the two port links.
  int length_l0() const { return static_cast<int>(node_ids.size()) + 1; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Throws std::invalid_argument unless `path` is a valid simple, adjacent,
/// port-anchored walk on `mesh`.
void validate_path(const Mesh& mesh, const Path& path);

/// Sum of the node phase shifts along the path, wrapped mod 2*pi.
PhaseAngle accumulated_phase(const Mesh& mesh, const Path& path);

int path_length_l0(const Path& path);

}  // namespace ringsim
