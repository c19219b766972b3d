#include "ringsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ringsim/version.hpp"

namespace ringsim {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& obj, const std::string& where,
                   const std::string& key) {
  if (!obj.contains(key)) bad(where, "missing field \"" + key + "\"");
  return obj.at(key);
}

double number_at(const Json& obj, const std::string& where,
                 const std::string& key) {
  const Json& v = member(obj, where, key);
  if (!v.is_number()) bad(where + "." + key, "expected a number");
  return v.get<double>();
}

int int_at(const Json& obj, const std::string& where, const std::string& key) {
  const Json& v = member(obj, where, key);
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  return v.get<int>();
}

void reject_unknown(const Json& obj, const std::string& where,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) bad(where, "unknown field \"" + key + "\"");
  }
}

PhaseAngle phase_at(const Json& obj, const std::string& where,
                    const std::string& key,
                    std::vector<std::string>* warnings) {
  const double raw = number_at(obj, where, key);
  const PhaseAngle angle = PhaseAngle::pi_units(raw);
  if ((raw < 0.0 || raw >= 2.0) && warnings != nullptr) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s.%s: %gpi wrapped to %gpi", where.c_str(),
                  key.c_str(), raw, angle.in_pi_units());
    warnings->push_back(buf);
  }
  return angle;
}

// Stable float formatting for CSV output.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Json path_to_json(const ResonantPath& rp) {
  Json j;
  j["input"] = rp.path.input_row;
  j["output"] = rp.path.output_row;
  j["nodes"] = rp.path.node_ids;
  j["total_phase_pi_units"] = rp.total_phase.in_pi_units();
  j["required_gain_A0"] = rp.required_gain_a0;
  j["channel"] = rp.channel;
  return j;
}

}  // namespace

RingCircuit parse_circuit(const std::string& json_text,
                          std::vector<std::string>* warnings) {
  Json root = Json::parse(json_text, nullptr, true, true);
  if (!root.is_object()) bad("circuit", "top level must be an object");
  reject_unknown(root, "circuit",
                 {"n", "rows", "cols", "adjacency", "cell_pitch_l0", "nodes",
                  "ports", "gain_A0", "phase_tolerance", "power_threshold_W0",
                  "physical"});

  int rows = 0;
  int cols = 0;
  if (root.contains("n")) {
    rows = cols = int_at(root, "circuit", "n");
  } else {
    rows = int_at(root, "circuit", "rows");
    cols = int_at(root, "circuit", "cols");
  }
  if (rows < 1 || cols < 1) bad("circuit", "mesh dimensions must be positive");

  const std::string adjacency_name =
      member(root, "circuit", "adjacency").get<std::string>();
  Adjacency adjacency;
  if (adjacency_name == "rook")
    adjacency = Adjacency::kRook;
  else if (adjacency_name == "king")
    adjacency = Adjacency::kKing;
  else
    bad("circuit.adjacency", "expected \"rook\" or \"king\"");

  const Json& nodes = member(root, "circuit", "nodes");
  if (!nodes.is_array() ||
      nodes.size() != static_cast<std::size_t>(rows) * cols)
    bad("circuit.nodes",
        "expected " + std::to_string(rows * cols) + " entries");

  std::vector<PhaseAngle> deltas(nodes.size());
  std::vector<std::set<int>> filters(nodes.size());
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const Json& n = nodes[i];
    if (!n.is_object()) bad(where, "expected an object");
    reject_unknown(n, where, {"id", "delta_pi_units", "filter"});
    const int id = int_at(n, where, "id");
    if (id < 1 || id > static_cast<int>(nodes.size()))
      bad(where + ".id", "out of range");
    if (seen[static_cast<std::size_t>(id - 1)])
      bad(where + ".id", "duplicate node id " + std::to_string(id));
    seen[static_cast<std::size_t>(id - 1)] = true;
    deltas[static_cast<std::size_t>(id - 1)] =
        phase_at(n, where, "delta_pi_units", warnings);
    const Json& filter = member(n, where, "filter");
    if (!filter.is_array() || filter.empty())
      bad(where + ".filter",
          "node " + std::to_string(id) + " needs a non-empty channel list");
    for (const Json& ch : filter) {
      if (!ch.is_number_integer()) bad(where + ".filter", "expected integers");
      filters[static_cast<std::size_t>(id - 1)].insert(ch.get<int>());
    }
  }

  RingCircuit circuit;
  const double pitch = root.contains("cell_pitch_l0")
                           ? number_at(root, "circuit", "cell_pitch_l0")
                           : 1.0;
  circuit.mesh = Mesh::grid(rows, cols, adjacency, deltas, filters, pitch);

  circuit.electric = ElectricPart::for_rows(rows);
  circuit.electric.gain_a0 = number_at(root, "circuit", "gain_A0");
  const Json& ports = member(root, "circuit", "ports");
  if (!ports.is_array()) bad("circuit.ports", "expected an array");
  for (std::size_t i = 0; i < ports.size(); ++i) {
    const std::string where = "ports[" + std::to_string(i) + "]";
    const Json& p = ports[i];
    if (!p.is_object()) bad(where, "expected an object");
    reject_unknown(p, where,
                   {"side", "row", "switch", "psi_pi_units", "attenuation_A0"});
    const std::string side = member(p, where, "side").get<std::string>();
    const int row = int_at(p, where, "row");
    if (row < 1 || row > rows) bad(where + ".row", "out of range");
    PortConfig* port = nullptr;
    if (side == "input") {
      if (p.contains("psi_pi_units") || p.contains("attenuation_A0"))
        bad(where, "input ports carry no psi or attenuation");
      port = &circuit.electric.input(row);
    } else if (side == "output") {
      port = &circuit.electric.output(row);
      if (p.contains("psi_pi_units"))
        port->psi = phase_at(p, where, "psi_pi_units", warnings);
      if (p.contains("attenuation_A0")) {
        port->attenuation_a0 = number_at(p, where, "attenuation_A0");
        if (port->attenuation_a0 < 0.0)
          bad(where + ".attenuation_A0", "must be non-negative");
      }
    } else {
      bad(where + ".side", "expected \"input\" or \"output\"");
    }
    const Json& sw = member(p, where, "switch");
    if (!sw.is_boolean()) bad(where + ".switch", "expected a boolean");
    port->enabled = sw.get<bool>();
  }

  if (root.contains("phase_tolerance"))
    circuit.phase_tolerance = number_at(root, "circuit", "phase_tolerance");
  if (root.contains("power_threshold_W0"))
    circuit.power_threshold = number_at(root, "circuit", "power_threshold_W0");

  if (root.contains("physical")) {
    const Json& ph = root.at("physical");
    const std::string where = "physical";
    reject_unknown(ph, where,
                   {"d0_um", "m0_4pi_gauss", "h0_oe", "gamma_mhz_per_oe",
                    "geometry"});
    SpinWaveMedium medium;
    medium.d0_m = number_at(ph, where, "d0_um") * 1e-6;
    medium.m0_4pi_gauss = number_at(ph, where, "m0_4pi_gauss");
    medium.h0_oe = number_at(ph, where, "h0_oe");
    if (ph.contains("gamma_mhz_per_oe"))
      medium.gamma_mhz_per_oe = number_at(ph, where, "gamma_mhz_per_oe");
    const std::string geo = member(ph, where, "geometry").get<std::string>();
    if (geo == "mssw")
      medium.geometry = WaveGeometry::kMssw;
    else if (geo == "bvmsw")
      medium.geometry = WaveGeometry::kBvmsw;
    else
      bad(where + ".geometry", "expected \"mssw\" or \"bvmsw\"");
    medium.validate();
    circuit.physical = medium;
  }

  try {
    circuit.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("circuit: ") + e.what());
  }
  return circuit;
}

RingCircuit load_circuit(const std::filesystem::path& file,
                         std::vector<std::string>* warnings) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_circuit(buffer.str(), warnings);
  } catch (const Json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

std::string circuit_json(const RingCircuit& circuit) {
  Json root;
  const Mesh& mesh = circuit.mesh;
  if (mesh.is_square()) {
    root["n"] = mesh.rows();
  } else {
    root["rows"] = mesh.rows();
    root["cols"] = mesh.cols();
  }
  root["adjacency"] = mesh.adjacency() == Adjacency::kRook ? "rook" : "king";
  if (mesh.cell_pitch_l0() != 1.0) root["cell_pitch_l0"] = mesh.cell_pitch_l0();

  root["nodes"] = Json::array();
  for (const MeshNode& n : mesh.nodes()) {
    Json jn;
    jn["id"] = n.id;
    jn["delta_pi_units"] = n.delta.in_pi_units();
    jn["filter"] = n.filter;
    root["nodes"].push_back(std::move(jn));
  }

  root["ports"] = Json::array();
  for (const PortConfig& p : circuit.electric.ports) {
    Json jp;
    jp["side"] = p.side == PortSide::kInput ? "input" : "output";
    jp["row"] = p.row;
    jp["switch"] = p.enabled;
    if (p.side == PortSide::kOutput) {
      jp["psi_pi_units"] = p.psi.in_pi_units();
      jp["attenuation_A0"] = p.attenuation_a0;
    }
    root["ports"].push_back(std::move(jp));
  }

  root["gain_A0"] = circuit.electric.gain_a0;
  root["phase_tolerance"] = circuit.phase_tolerance;
  root["power_threshold_W0"] = circuit.power_threshold;

  if (circuit.physical) {
    const SpinWaveMedium& m = *circuit.physical;
    Json ph;
    ph["d0_um"] = m.d0_m * 1e6;
    ph["m0_4pi_gauss"] = m.m0_4pi_gauss;
    ph["h0_oe"] = m.h0_oe;
    ph["gamma_mhz_per_oe"] = m.gamma_mhz_per_oe;
    ph["geometry"] = m.geometry == WaveGeometry::kMssw ? "mssw" : "bvmsw";
    root["physical"] = std::move(ph);
  }
  return root.dump(2) + "\n";
}

void save_circuit(const RingCircuit& circuit,
                  const std::filesystem::path& file) {
  write_file(file, circuit_json(circuit));
}

std::string sweep_csv(const SweepReport& report) {
  std::string out = report.parameter + ",path_count,sensor_bits\n";
  for (const SweepRecord& rec : report.records) {
    out += fmt(rec.param);
    out += ',';
    out += std::to_string(rec.path_count());
    out += ',';
    out += rec.sensors.bits();
    out += '\n';
  }
  return out;
}

std::string sweep_json(const SweepReport& report) {
  Json root;
  root["parameter"] = report.parameter;
  root["records"] = Json::array();
  for (const SweepRecord& rec : report.records) {
    Json jr;
    jr["param"] = rec.param;
    jr["path_count"] = rec.path_count();
    jr["sensor_bits"] = rec.sensors.bits();
    jr["paths"] = Json::array();
    for (const ResonantPath& rp : rec.paths)
      jr["paths"].push_back(path_to_json(rp));
    root["records"].push_back(std::move(jr));
  }
  return root.dump(2) + "\n";
}

std::string render_grid(const SensorGrid& grid) {
  std::string out;
  for (int r = 1; r <= grid.rows; ++r) {
    for (int c = 1; c <= grid.cols; ++c)
      out += grid.at(r, c) ? "█" : "·";
    out += '\n';
  }
  return out;
}

std::string dispersion_csv(const std::vector<DispersionPoint>& table) {
  std::string out = "k_rad_per_m,f_ghz\n";
  for (const DispersionPoint& p : table)
    out += fmt(p.k_rad_per_m) + "," + fmt(p.f_ghz) + "\n";
  return out;
}

RunManifest RunManifest::make(std::string command, std::string input) {
  RunManifest m;
  m.command = std::move(command);
  m.input = std::move(input);
  m.version = kVersion;
  if (const char* seed = std::getenv("RINGSIM_SEED")) m.seed = seed;
  return m;
}

std::string manifest_json(const RunManifest& manifest) {
  Json root;
  root["command"] = manifest.command;
  root["input"] = manifest.input;
  root["overrides"] = manifest.overrides;
  root["out_dir"] = manifest.out_dir;
  root["version"] = manifest.version;
  if (manifest.seed) root["seed"] = *manifest.seed;
  return root.dump(2) + "\n";
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  if (file.has_parent_path())
    std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
}

}  // namespace ringsim
