#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ringsim/counting.hpp"
#include "ringsim/io.hpp"
#include "ringsim/problems.hpp"
#include "ringsim/version.hpp"

namespace py = pybind11;
using namespace ringsim;

namespace {

py::object big_to_py(const BigInt& v) {
  // Route through the decimal string so python gets an exact arbitrary
  // precision int.
  return py::int_(py::str(v.str()));
}

py::list resonant_paths_py(const std::vector<ResonantPath>& paths) {
  py::list out;
  for (const auto& rp : paths) {
    py::dict d;
    d["input"] = rp.path.input_row;
    d["output"] = rp.path.output_row;
    d["nodes"] = rp.path.node_ids;
    d["channels"] = rp.path.channels;
    d["total_phase_pi_units"] = rp.total_phase.in_pi_units();
    d["required_gain_A0"] = rp.required_gain_a0;
    d["length_l0"] = rp.path.length_l0();
    out.append(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_ringsim, m) {
  m.doc() = "multi-path active ring circuit simulator";
  m.attr("__version__") = kVersion;

  py::class_<PhaseAngle>(m, "PhaseAngle")
      .def_static("pi_units", &PhaseAngle::pi_units, py::arg("value"))
      .def_static("radians", &PhaseAngle::radians, py::arg("value"))
      .def_property_readonly("pi_units_value", &PhaseAngle::in_pi_units)
      .def_property_readonly("rad", &PhaseAngle::rad)
      .def("distance_to_zero", &PhaseAngle::distance_to_zero)
      .def("__repr__", [](const PhaseAngle& p) {
        return "PhaseAngle(" + std::to_string(p.in_pi_units()) + "pi)";
      });

  py::enum_<Adjacency>(m, "Adjacency")
      .value("ROOK", Adjacency::kRook)
      .value("KING", Adjacency::kKing);

  py::class_<Path>(m, "Path")
      .def_readonly("input_row", &Path::input_row)
      .def_readonly("output_row", &Path::output_row)
      .def_readonly("node_ids", &Path::node_ids)
      .def_readonly("channels", &Path::channels)
      .def_property_readonly("length_l0", &Path::length_l0)
      .def("__repr__", [](const Path& p) {
        std::string s = "Path(";
        for (int id : p.node_ids) s += std::to_string(id) + ",";
        if (!p.node_ids.empty()) s.pop_back();
        return s + ")";
      });

  py::class_<SensorGrid>(m, "SensorGrid")
      .def_readonly("rows", &SensorGrid::rows)
      .def_readonly("cols", &SensorGrid::cols)
      .def("bits", &SensorGrid::bits)
      .def("count_on", &SensorGrid::count_on)
      .def("at", &SensorGrid::at, py::arg("row"), py::arg("col"));

  py::class_<RingCircuit>(m, "RingCircuit")
      .def_property_readonly(
          "gain_a0", [](const RingCircuit& c) { return c.electric.gain_a0; })
      .def("with_gain",
           [](RingCircuit c, double gain) {
             c.electric.gain_a0 = gain;
             return c;
           })
      .def("with_uniform_psi",
           [](RingCircuit c, double psi_pi) {
             c.electric.set_all_output_psi(PhaseAngle::pi_units(psi_pi));
             return c;
           })
      .def("json", &circuit_json);

  py::class_<MeshProblem>(m, "MeshProblem")
      .def_readonly("name", &MeshProblem::name)
      .def_readonly("circuit", &MeshProblem::circuit)
      .def_readonly("via_nodes", &MeshProblem::via_nodes)
      .def_readonly("gain_levels", &MeshProblem::gain_levels);

  py::class_<FactorizationDevice>(m, "FactorizationDevice")
      .def_readonly("primes", &FactorizationDevice::primes)
      .def_readonly("circuit", &FactorizationDevice::circuit);

  m.def("build_mesh_problem", &build_mesh_problem, py::arg("name"));
  m.def("build_factorization_device", &build_factorization_device,
        py::arg("primes"));
  m.def(
      "factorize",
      [](const FactorizationDevice& d, long long n) -> py::object {
        const auto r = factorize(d, n);
        if (!r) return py::none();
        return py::cast(*r);
      },
      py::arg("device"), py::arg("n"));

  m.def("load_circuit",
        [](const std::filesystem::path& p) { return load_circuit(p); },
        py::arg("path"));

  m.def(
      "find_resonant_paths",
      [](const RingCircuit& c) { return resonant_paths_py(find_resonant_paths(c)); },
      py::arg("circuit"));
  m.def("sensor_readout", &sensor_readout, py::arg("circuit"));
  m.def(
      "simulate_rounds",
      [](double gain, double detuning_pi, int rounds, double p_sat) {
        return simulate_rounds(gain, PhaseAngle::pi_units(detuning_pi), rounds,
                               p_sat)
            .magnitudes;
      },
      py::arg("round_gain"), py::arg("detuning_pi"), py::arg("rounds"),
      py::arg("p_sat"));

  m.def(
      "sweep_phase",
      [](const RingCircuit& c, double start_pi, double stop_pi, double step_pi) {
        const SweepReport r = sweep_phase(c, start_pi, stop_pi, step_pi);
        py::list out;
        for (const auto& rec : r.records) {
          py::dict d;
          d["psi_pi_units"] = rec.param;
          d["path_count"] = rec.path_count();
          d["sensor_bits"] = rec.sensors.bits();
          d["paths"] = resonant_paths_py(rec.paths);
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("circuit"), py::arg("start_pi"), py::arg("stop_pi"),
      py::arg("step_pi"));
  m.def(
      "sweep_gain",
      [](const RingCircuit& c, const std::vector<double>& levels) {
        const SweepReport r = sweep_gain(c, levels);
        py::list out;
        for (const auto& rec : r.records) {
          py::dict d;
          d["gain_A0"] = rec.param;
          d["path_count"] = rec.path_count();
          d["sensor_bits"] = rec.sensors.bits();
          d["paths"] = resonant_paths_py(rec.paths);
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("circuit"), py::arg("levels"));

  m.def(
      "solve_shortest",
      [](const MeshProblem& p) -> py::object {
        const auto r = solve_shortest(p);
        if (!r) return py::none();
        py::dict d;
        d["nodes"] = r->path.node_ids;
        d["length_l0"] = r->path.length_l0();
        d["gain_A0"] = r->gain_a0;
        d["input"] = r->path.input_row;
        d["output"] = r->path.output_row;
        return std::move(d);
      },
      py::arg("problem"));

  py::enum_<WaveGeometry>(m, "WaveGeometry")
      .value("MSSW", WaveGeometry::kMssw)
      .value("BVMSW", WaveGeometry::kBvmsw);

  py::class_<SpinWaveMedium>(m, "SpinWaveMedium")
      .def(py::init([](double d0_um, double m0, double h0, double gamma,
                       WaveGeometry geometry) {
             SpinWaveMedium medium{d0_um * 1e-6, m0, h0, gamma, geometry};
             medium.validate();
             return medium;
           }),
           py::arg("d0_um"), py::arg("m0_4pi_gauss"), py::arg("h0_oe"),
           py::arg("gamma_mhz_per_oe") = 2.8,
           py::arg("geometry") = WaveGeometry::kMssw)
      .def_property_readonly("f_h_ghz", &SpinWaveMedium::f_h_ghz)
      .def_property_readonly("f_m_ghz", &SpinWaveMedium::f_m_ghz);

  m.def("frequency_at", &frequency_at, py::arg("medium"), py::arg("k_rad_per_m"));
  m.def("band_limits", &band_limits, py::arg("medium"));
  m.def("wavenumber_for", &wavenumber_for, py::arg("medium"), py::arg("f_ghz"));
  m.def(
      "phase_over_length",
      [](const SpinWaveMedium& medium, double f, double length) {
        return phase_over_length(medium, f, length).in_pi_units();
      },
      py::arg("medium"), py::arg("f_ghz"), py::arg("length_m"));

  m.def("corner_path_count",
        [](int n) { return big_to_py(corner_path_count(n)); }, py::arg("n"));
  m.def("total_path_count",
        [](int n) { return big_to_py(total_path_count(n)); }, py::arg("n"));
  m.def(
      "instruction_count",
      [](int n, int z, int levels) {
        return big_to_py(instruction_count(n, z, levels));
      },
      py::arg("n"), py::arg("z") = 180, py::arg("levels") = 20);
  m.def(
      "functional_throughput",
      [](int n, double l_m, double v_g) {
        const CapacityReport r = functional_throughput(n, l_m, v_g);
        py::dict d;
        d["n"] = r.n;
        d["corner_paths"] = big_to_py(r.corner_paths);
        d["total_paths"] = big_to_py(r.total_paths);
        d["instructions"] = big_to_py(r.instructions);
        d["throughput"] = r.throughput;
        d["area_m2"] = r.area_m2;
        d["time_s"] = r.time_s;
        d["note"] = r.note;
        return d;
      },
      py::arg("n"), py::arg("l_m"), py::arg("v_g_m_per_s"));
}
