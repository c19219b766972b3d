#include "ringsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ringsim {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

Mesh Mesh::grid(int rows, int cols, Adjacency adjacency,
                const std::vector<PhaseAngle>& deltas,
                const std::vector<std::set<int>>& filters,
                double cell_pitch_l0) {
  if (rows < 1 || cols < 1) fail("mesh dimensions must be positive");
  const std::size_t count = static_cast<std::size_t>(rows) * cols;
  if (deltas.size() != count)
    fail("expected " + std::to_string(count) + " deltas, got " +
         std::to_string(deltas.size()));
  if (filters.size() != count)
    fail("expected " + std::to_string(count) + " filter sets, got " +
         std::to_string(filters.size()));
  if (cell_pitch_l0 <= 0.0) fail("cell pitch must be positive");

  Mesh m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.adjacency_ = adjacency;
  m.cell_pitch_ = cell_pitch_l0;
  m.nodes_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (filters[i].empty())
      fail("node " + std::to_string(i + 1) + ": filter set must not be empty");
    m.nodes_.push_back(MeshNode{static_cast<int>(i + 1), deltas[i], filters[i]});
  }
  return m;
}

int Mesh::side() const {
  if (!is_square()) fail("mesh is not square");
  return rows_;
}

const MeshNode& Mesh::node(int id) const {
  if (id < 1 || id > node_count())
    fail("node id " + std::to_string(id) + " out of range");
  return nodes_[static_cast<std::size_t>(id - 1)];
}

int Mesh::node_id(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_)
    fail("node position out of range");
  return (row - 1) * cols_ + col;
}

bool Mesh::adjacent(int a, int b) const {
  if (a == b) return false;
  if (a < 1 || a > node_count() || b < 1 || b > node_count()) return false;
  const int dr = std::abs(row_of(a) - row_of(b));
  const int dc = std::abs(col_of(a) - col_of(b));
  if (adjacency_ == Adjacency::kRook) return dr + dc == 1;
  return dr <= 1 && dc <= 1;
}

std::vector<int> Mesh::neighbors(int id) const {
  const int r = row_of(id);
  const int c = col_of(id);
  std::vector<int> out;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      if (adjacency_ == Adjacency::kRook && dr != 0 && dc != 0) continue;
      const int rr = r + dr;
      const int cc = c + dc;
      if (rr < 1 || rr > rows_ || cc < 1 || cc > cols_) continue;
      out.push_back(node_id(rr, cc));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mesh build_mesh(int n, Adjacency adjacency,
                const std::vector<PhaseAngle>& deltas,
                const std::vector<std::set<int>>& filters) {
  return Mesh::grid(n, n, adjacency, deltas, filters);
}

ElectricPart ElectricPart::for_rows(int rows) {
  ElectricPart e;
  e.ports.reserve(static_cast<std::size_t>(rows) * 2);
  for (int r = 1; r <= rows; ++r)
    e.ports.push_back(PortConfig{PortSide::kInput, r, false, {}, 0.0});
  for (int r = 1; r <= rows; ++r)
    e.ports.push_back(PortConfig{PortSide::kOutput, r, false, {}, 0.0});
  return e;
}

namespace {

PortConfig* find_port(std::vector<PortConfig>& ports, PortSide side, int row) {
  for (auto& p : ports)
    if (p.side == side && p.row == row) return &p;
  return nullptr;
}

}  // namespace

PortConfig& ElectricPart::input(int row) {
  if (auto* p = find_port(ports, PortSide::kInput, row)) return *p;
  fail("no input port at row " + std::to_string(row));
}

PortConfig& ElectricPart::output(int row) {
  if (auto* p = find_port(ports, PortSide::kOutput, row)) return *p;
  fail("no output port at row " + std::to_string(row));
}

const PortConfig& ElectricPart::input(int row) const {
  return const_cast<ElectricPart*>(this)->input(row);
}

const PortConfig& ElectricPart::output(int row) const {
  return const_cast<ElectricPart*>(this)->output(row);
}

std::vector<int> ElectricPart::enabled_input_rows() const {
  std::vector<int> rows;
  for (const auto& p : ports)
    if (p.side == PortSide::kInput && p.enabled) rows.push_back(p.row);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<int> ElectricPart::enabled_output_rows() const {
  std::vector<int> rows;
  for (const auto& p : ports)
    if (p.side == PortSide::kOutput && p.enabled) rows.push_back(p.row);
  std::sort(rows.begin(), rows.end());
  return rows;
}

void ElectricPart::set_all_output_psi(PhaseAngle psi) {
  for (auto& p : ports)
    if (p.side == PortSide::kOutput) p.psi = psi;
}

void RingCircuit::validate(bool for_run) const {
  if (mesh.node_count() == 0) fail("circuit has no mesh");
  if (electric.gain_a0 < 0.0) fail("gain must be non-negative");
  if (!(phase_tolerance > 0.0))
    fail("phase tolerance must be positive");
  if (phase_tolerance >= 0.05 * std::numbers::pi)
    fail("phase tolerance must be below 0.05*pi");
  if (power_threshold <= 0.0) fail("power threshold must be positive");

  const int rows = mesh.rows();
  if (electric.ports.size() != static_cast<std::size_t>(rows) * 2)
    fail("expected " + std::to_string(rows * 2) + " ports, got " +
         std::to_string(electric.ports.size()));
  for (const auto& p : electric.ports) {
    if (p.row < 1 || p.row > rows)
      fail("port row " + std::to_string(p.row) + " out of range");
    if (p.side == PortSide::kInput) {
      if (p.psi != PhaseAngle{} || p.attenuation_a0 != 0.0)
        fail("input port at row " + std::to_string(p.row) +
             " must not carry psi or attenuation");
    } else if (p.attenuation_a0 < 0.0) {
      fail("output port at row " + std::to_string(p.row) +
           " has negative attenuation");
    }
  }
  if (for_run) {
    if (electric.enabled_input_rows().empty())
      fail("at least one input port must be switched on");
    if (electric.enabled_output_rows().empty())
      fail("at least one output port must be switched on");
  }
}

int Path::channel() const {
  if (channels.empty()) fail("path admits no channel");
  return *channels.begin();
}

void validate_path(const Mesh& mesh, const Path& path) {
  if (path.node_ids.empty()) fail("path has no nodes");
  for (int id : path.node_ids)
    if (id < 1 || id > mesh.node_count())
      fail("path node " + std::to_string(id) + " not on mesh");

  const int first = path.node_ids.front();
  const int last = path.node_ids.back();
  if (mesh.col_of(first) != 1 || mesh.row_of(first) != path.input_row)
    fail("path must start in column 1 at the input port's row");
  if (mesh.col_of(last) != mesh.cols() || mesh.row_of(last) != path.output_row)
    fail("path must end in the last column at the output port's row");

  std::set<int> seen;
  for (std::size_t i = 0; i < path.node_ids.size(); ++i) {
    if (!seen.insert(path.node_ids[i]).second)
      fail("path revisits node " + std::to_string(path.node_ids[i]));
    if (i > 0 && !mesh.adjacent(path.node_ids[i - 1], path.node_ids[i]))
      fail("path nodes " + std::to_string(path.node_ids[i - 1]) + " and " +
           std::to_string(path.node_ids[i]) + " are not adjacent");
  }
}

PhaseAngle accumulated_phase(const Mesh& mesh, const Path& path) {
  validate_path(mesh, path);
  PhaseAngle sum;
  for (int id : path.node_ids) sum += mesh.node(id).delta;
  return sum;
}

int path_length_l0(const Path& path) {
  return path.length_l0();
}

}  // namespace ringsim
