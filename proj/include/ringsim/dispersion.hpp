#pragma once

#include <utility>
#include <vector>

#include "ringsim/phase.hpp"

namespace ringsim {

/// Propagation geometry relative to the bias field: surface waves
/// (perpendicular, rising dispersion) or backward volume waves
/// (parallel, falling dispersion).
enum class WaveGeometry { kMssw, kBvmsw };

/// Film and field parameters of a spin-wave delay line.
struct SpinWaveMedium {
  double d0_m = 0.0;                 // film thickness
  double m0_4pi_gauss = 0.0;         // saturation magnetization, 4*pi*M0
  double h0_oe = 0.0;                // bias field
  double gamma_mhz_per_oe = 2.8;     // gyromagnetic ratio
  WaveGeometry geometry = WaveGeometry::kMssw;

  double f_h_ghz() const { return gamma_mhz_per_oe * h0_oe * 1e-3; }
  double f_m_ghz() const { return gamma_mhz_per_oe * m0_4pi_gauss * 1e-3; }

  void validate() const;

  friend bool operator==(const SpinWaveMedium&, const SpinWaveMedium&) = default;
};

struct DispersionPoint {
  double k_rad_per_m = 0.0;
  double f_ghz = 0.0;
};

/// Frequency of the medium's branch at wavenumber k (rad/m). The backward
/// volume factor (1 - exp(-k d0)) / (k d0) is evaluated by its series near
/// k = 0.
double frequency_at(const SpinWaveMedium& medium, double k_rad_per_m);

/// (f_low, f_high) of the propagating band in GHz.
std::pair<double, double> band_limits(const SpinWaveMedium& medium);

/// Inverts frequency_at by bisection; relative residual <= 1e-9.
/// Throws std::domain_error when f lies outside the band.
double wavenumber_for(const SpinWaveMedium& medium, double f_ghz);

/// Phase accumulated over a propagation length at frequency f, mod 2*pi.
PhaseAngle phase_over_length(const SpinWaveMedium& medium, double f_ghz,
                             double length_m);

std::vector<DispersionPoint> dispersion_table(const SpinWaveMedium& medium,
                                              double k_min, double k_max,
                                              int points);

}  // namespace ringsim
