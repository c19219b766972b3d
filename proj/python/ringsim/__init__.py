"""Deterministic simulator of multi-path active ring logic circuits."""

from ._ringsim import (  # noqa: F401
    Adjacency,
    FactorizationDevice,
    MeshProblem,
    Path,
    PhaseAngle,
    RingCircuit,
    SensorGrid,
    SpinWaveMedium,
    WaveGeometry,
    __version__,
    band_limits,
    build_factorization_device,
    build_mesh_problem,
    corner_path_count,
    factorize,
    find_resonant_paths,
    frequency_at,
    functional_throughput,
    instruction_count,
    load_circuit,
    phase_over_length,
    sensor_readout,
    simulate_rounds,
    solve_shortest,
    sweep_gain,
    sweep_phase,
    total_path_count,
    wavenumber_for,
)
