#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringsim/engine.hpp"

namespace ringsim {

/// Load/parse failure with the offending field spelled out, e.g.
/// "nodes[3].filter: must not be empty".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a circuit description. Phases in the file are written in pi units
/// and wrapped on load; a wrap outside [0, 2) is reported through
/// `warnings`. Unknown fields are rejected.
RingCircuit parse_circuit(const std::string& json_text,
                          std::vector<std::string>* warnings = nullptr);

RingCircuit load_circuit(const std::filesystem::path& file,
                         std::vector<std::string>* warnings = nullptr);

/// Canonical JSON form; loading it back yields an equal circuit.
std::string circuit_json(const RingCircuit& circuit);

void save_circuit(const RingCircuit& circuit, const std::filesystem::path& file);

/// CSV with one row per grid point: param value, resonant path count, and
/// the sensor readout as a flat 0/1 string.
std::string sweep_csv(const SweepReport& report);

/// JSON variant carrying the full resonant path listings.
std::string sweep_json(const SweepReport& report);

/// The sensor grid as `rows` lines of full/empty glyphs.
std::string render_grid(const SensorGrid& grid);

std::string dispersion_csv(const std::vector<DispersionPoint>& table);

/// What was run and with which inputs; recorded verbatim into every output
/// bundle.
struct RunManifest {
  std::string command;
  std::string input;  // circuit file path or fixture name
  std::map<std::string, std::string> overrides;
  std::string out_dir;
  std::string version;
  std::optional<std::string> seed;  // RINGSIM_SEED, recorded but unused

  static RunManifest make(std::string command, std::string input);
};

std::string manifest_json(const RunManifest& manifest);

void write_file(const std::filesystem::path& file, const std::string& content);

}  // namespace ringsim
