#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringsim/engine.hpp"

namespace ringsim {

/// Chain of two-path blocks, one per prime. The upper delay line of block i
/// carries pi * log10(primes[i]); every lower line carries zero phase. Each
/// of the 2^k upper/lower route combinations owns one frequency channel, so
/// a route's filter intersection is exactly its own channel.
struct FactorizationDevice {
  std::vector<long long> primes;
  RingCircuit circuit;

  int blocks() const { return static_cast<int>(primes.size()); }
  /// Channel id of the route whose upper-block choices are `mask`
  /// (bit i set = upper path in block i+1). Ids are 1-based.
  int route_channel(unsigned mask) const { return static_cast<int>(mask) + 1; }
};

FactorizationDevice build_factorization_device(
    const std::vector<long long>& primes);

/// Sets the output shifters to the complement of pi * log10(N), lets the
/// ring search for a resonant route, and decodes the surviving route's
/// upper blocks into the factor set. Returns nullopt when nothing
/// resonates or when the decoded product disagrees with N (a wrapped phase
/// can alias products differing by a factor of 10^2k).
std::optional<std::set<long long>> factorize(const FactorizationDevice& device,
                                             long long n);

enum class Objective { kPhaseMatch, kShortest, kShortestViaNodes };

/// A mesh search problem: a configured circuit plus what to extract from it.
struct MeshProblem {
  std::string name;
  RingCircuit circuit;
  Objective objective = Objective::kPhaseMatch;
  std::set<int> via_nodes;          // shortest-via-nodes only
  std::vector<double> gain_levels;  // descending sweep for shortest objectives
};

/// Canonical fixtures "example2", "example3", "example4".
/// Throws std::invalid_argument for unknown names.
MeshProblem build_mesh_problem(const std::string& name);

/// The two-path block circuit: a 2x1 mesh with per-path filters, both ports
/// on each side switched on.
RingCircuit build_two_path(PhaseAngle upper_delta, PhaseAngle lower_delta,
                           double gain_a0 = 10.0);

struct ShortestResult {
  Path path;
  double gain_a0 = 0.0;  // lowest level at which the path still oscillates
};

/// Runs the descending gain sweep and returns the path(s) surviving at the
/// last non-empty level; nullopt when no level oscillates. For the
/// via-nodes objective the surviving path must cover the requested nodes.
std::optional<ShortestResult> solve_shortest(const MeshProblem& problem);

/// Greedy conflict coloring: paths sharing a node get distinct channels.
/// Returns one channel id (1..budget) per path, or nullopt when the greedy
/// coloring needs more than `budget` channels.
std::optional<std::vector<int>> assign_channels(const Mesh& mesh,
                                                const std::vector<Path>& paths,
                                                int budget);

}  // namespace ringsim
