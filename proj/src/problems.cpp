#include "ringsim/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace ringsim {

namespace {

// Phase tolerance of the factorization device. Log-of-prime phase sums are
// separated by ~0.03 rad at worst for the five-prime device, while numeric
// accumulation error stays near 1e-15, so anything between is safe. A tight
// value keeps near-miss inputs (e.g. N = 1002 against the 1001 route) from
// resonating at all.
constexpr double kFactorizationTolerance = 1e-5;

constexpr int kMaxBlocks = 20;  // 2^k channels; keep the device practical

}  // namespace

FactorizationDevice build_factorization_device(
    const std::vector<long long>& primes) {
  if (primes.empty()) throw std::invalid_argument("need at least one prime");
  if (primes.size() > kMaxBlocks)
    throw std::invalid_argument("too many primes for one device");
  std::unordered_set<long long> seen;
  for (long long p : primes) {
    if (p < 2) throw std::invalid_argument("primes must be >= 2");
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate prime " + std::to_string(p));
  }

  const int k = static_cast<int>(primes.size());
  const unsigned routes = 1u << k;

  // 2 x k grid, king steps so a route may switch rows between blocks.
  // Row 1 = upper paths, row 2 = lower paths.
  std::vector<PhaseAngle> deltas(static_cast<std::size_t>(2 * k));
  std::vector<std::set<int>> filters(static_cast<std::size_t>(2 * k));
  for (int block = 0; block < k; ++block) {
    deltas[static_cast<std::size_t>(block)] =
        PhaseAngle::pi_units(std::log10(static_cast<double>(primes[block])));
    deltas[static_cast<std::size_t>(k + block)] = PhaseAngle{};
    for (unsigned mask = 0; mask < routes; ++mask) {
      const bool upper = (mask >> block) & 1u;
      filters[static_cast<std::size_t>(upper ? block : k + block)].insert(
          static_cast<int>(mask) + 1);
    }
  }

  FactorizationDevice device;
  device.primes = primes;
  device.circuit.mesh = Mesh::grid(2, k, Adjacency::kKing, deltas, filters);
  device.circuit.electric = ElectricPart::for_rows(2);
  for (auto& port : device.circuit.electric.ports) port.enabled = true;
  // Every route is k nodes long; cover them all.
  device.circuit.electric.gain_a0 = k + 1;
  device.circuit.phase_tolerance = kFactorizationTolerance;
  device.circuit.validate();
  return device;
}

std::optional<std::set<long long>> factorize(const FactorizationDevice& device,
                                             long long n) {
  if (n < 2) throw std::invalid_argument("N must be >= 2");

  RingCircuit circuit = device.circuit;
  const PhaseAngle psi =
      PhaseAngle::pi_units(2.0 - std::log10(static_cast<double>(n)));
  circuit.electric.set_all_output_psi(psi);

  for (const ResonantPath& rp : find_resonant_paths(circuit)) {
    std::set<long long> factors;
    long long product = 1;
    for (int id : rp.path.node_ids) {
      if (circuit.mesh.row_of(id) == 1) {
        const long long p =
            device.primes[static_cast<std::size_t>(circuit.mesh.col_of(id) - 1)];
        factors.insert(p);
        product *= p;
      }
    }
    // Wrapped phases alias products differing by an even power of ten;
    // the decode is only an answer when the arithmetic agrees.
    if (product == n) return factors;
  }
  return std::nullopt;
}

namespace {

std::vector<PhaseAngle> deltas_pi(std::initializer_list<double> values) {
  std::vector<PhaseAngle> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(PhaseAngle::pi_units(v));
  return out;
}

RingCircuit graded_3x3() {
  // 3x3 mesh: top and bottom rows 0.1pi per line, middle row graded
  // 0.2/0.4/0.6pi. Input 1 and all three outputs connected.
  RingCircuit c;
  c.mesh = build_mesh(3, Adjacency::kRook,
                      deltas_pi({0.1, 0.1, 0.1, 0.2, 0.4, 0.6, 0.1, 0.1, 0.1}),
                      std::vector<std::set<int>>(9, {1}));
  c.electric = ElectricPart::for_rows(3);
  c.electric.input(1).enabled = true;
  for (int r = 1; r <= 3; ++r) c.electric.output(r).enabled = true;
  c.electric.gain_a0 = 10.0;  // covers the longest path
  return c;
}

}  // namespace

MeshProblem build_mesh_problem(const std::string& name) {
  MeshProblem problem;
  problem.name = name;
  if (name == "example2") {
    problem.circuit = graded_3x3();
    // Default shifter position: the lowest setting with a resonance,
    // selecting the single path into output 3.
    problem.circuit.electric.set_all_output_psi(PhaseAngle::pi_units(1.4));
    problem.objective = Objective::kPhaseMatch;
    return problem;
  }
  if (name == "example3") {
    problem.circuit = graded_3x3();
    // Per-output shifter settings that put four phase-matched paths of
    // lengths 4, 5, 7 and 8 l0 in play, so the descending gain sweep
    // thins them out 4 -> 3 -> 1 -> 0 and ends on the 4 l0 path.
    problem.circuit.electric.output(1).psi = PhaseAngle::pi_units(1.7);
    problem.circuit.electric.output(2).psi = PhaseAngle::pi_units(0.8);
    problem.circuit.electric.output(3).psi = PhaseAngle::pi_units(0.9);
    problem.objective = Objective::kShortest;
    problem.gain_levels = {10, 9, 8, 7, 6, 5, 4, 3};
    return problem;
  }
  if (name == "example4") {
    RingCircuit c;
    c.mesh = build_mesh(3, Adjacency::kRook,
                        deltas_pi({0.0, 0.5, 0.0, 0.3, 0.0, 0.7, 0.0, 0.0, 0.0}),
                        std::vector<std::set<int>>(9, {1}));
    c.electric = ElectricPart::for_rows(3);
    c.electric.input(1).enabled = true;
    c.electric.output(3).enabled = true;
    // Complement of the via-node phase sum 0.5 + 0.3 + 0.7 = 1.5pi.
    c.electric.output(3).psi = PhaseAngle::pi_units(0.5);
    c.electric.gain_a0 = 10.0;
    problem.circuit = c;
    problem.objective = Objective::kShortestViaNodes;
    problem.via_nodes = {2, 4, 6};
    problem.gain_levels = {10, 9, 8, 7, 6, 5, 4};
    return problem;
  }
  throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

RingCircuit build_two_path(PhaseAngle upper_delta, PhaseAngle lower_delta,
                           double gain_a0) {
  RingCircuit c;
  c.mesh = Mesh::grid(2, 1, Adjacency::kRook, {upper_delta, lower_delta},
                      {{1}, {2}});
  c.electric = ElectricPart::for_rows(2);
  for (auto& port : c.electric.ports) port.enabled = true;
  c.electric.gain_a0 = gain_a0;
  return c;
}

std::optional<ShortestResult> solve_shortest(const MeshProblem& problem) {
  if (problem.objective == Objective::kPhaseMatch)
    throw std::invalid_argument("problem has no shortest-path objective");
  if (problem.objective == Objective::kShortestViaNodes &&
      problem.via_nodes.empty())
    throw std::invalid_argument("via-node objective needs via nodes");

  std::vector<double> levels = problem.gain_levels;
  if (levels.empty())
    throw std::invalid_argument("no gain levels to sweep");
  std::sort(levels.begin(), levels.end(), std::greater<>());

  const auto covers_vias = [&](const ResonantPath& rp) {
    if (problem.objective != Objective::kShortestViaNodes) return true;
    return std::ranges::all_of(problem.via_nodes, [&](int id) {
      return std::ranges::find(rp.path.node_ids, id) != rp.path.node_ids.end();
    });
  };

  const SweepReport report = sweep_gain(problem.circuit, levels);
  double alive_gain = 0.0;
  std::vector<const ResonantPath*> alive;
  for (const auto& rec : report.records) {
    std::vector<const ResonantPath*> here;
    for (const auto& rp : rec.paths)
      if (covers_vias(rp)) here.push_back(&rp);
    if (!here.empty()) {
      alive = std::move(here);
      alive_gain = rec.param;
    }
  }
  if (alive.empty()) return std::nullopt;

  const ResonantPath* best = *std::ranges::min_element(
      alive, [](const ResonantPath* a, const ResonantPath* b) {
        return std::pair(a->path.length_l0(), a->path.node_ids) <
               std::pair(b->path.length_l0(), b->path.node_ids);
      });
  return ShortestResult{best->path, alive_gain};
}

std::optional<std::vector<int>> assign_channels(const Mesh& mesh,
                                                const std::vector<Path>& paths,
                                                int budget) {
  if (budget < 1) throw std::invalid_argument("channel budget must be >= 1");

  std::vector<std::set<int>> node_sets;
  node_sets.reserve(paths.size());
  for (const Path& p : paths) {
    validate_path(mesh, p);
    node_sets.emplace_back(p.node_ids.begin(), p.node_ids.end());
  }

  std::vector<int> assignment(paths.size(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::set<int> taken;
    for (std::size_t j = 0; j < i; ++j) {
      const bool crossing = std::ranges::any_of(node_sets[j], [&](int id) {
        return node_sets[i].contains(id);
      });
      if (crossing) taken.insert(assignment[j]);
    }
    int channel = 1;
    while (taken.contains(channel)) ++channel;
    if (channel > budget) return std::nullopt;
    assignment[i] = channel;
  }
  return assignment;
}

}  // namespace ringsim
