#include "ringsim/dispersion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ringsim {

namespace {

// (1 - exp(-kd)) / kd, with the k -> 0 limit of 1 and expm1 keeping full
// precision where the direct form would cancel.
double bv_factor(double kd) {
  if (kd == 0.0) return 1.0;
  return -std::expm1(-kd) / kd;
}

}  // namespace

void SpinWaveMedium::validate() const {
  if (!(d0_m > 0.0)) throw std::invalid_argument("film thickness must be positive");
  if (!(m0_4pi_gauss > 0.0))
    throw std::invalid_argument("saturation magnetization must be positive");
  if (!(h0_oe > 0.0)) throw std::invalid_argument("bias field must be positive");
  if (!(gamma_mhz_per_oe > 0.0))
    throw std::invalid_argument("gyromagnetic ratio must be positive");
}

double frequency_at(const SpinWaveMedium& medium, double k_rad_per_m) {
  medium.validate();
  if (!(k_rad_per_m >= 0.0) || !std::isfinite(k_rad_per_m))
    throw std::invalid_argument("wavenumber must be finite and non-negative");

  const double fh = medium.f_h_ghz();
  const double fm = medium.f_m_ghz();
  const double kd = k_rad_per_m * medium.d0_m;
  if (medium.geometry == WaveGeometry::kMssw) {
    const double a = fh + fm / 2.0;
    const double b = fm / 2.0;
    return std::sqrt(a * a - b * b * std::exp(-2.0 * kd));
  }
  return std::sqrt(fh * (fh + fm * bv_factor(kd)));
}

std::pair<double, double> band_limits(const SpinWaveMedium& medium) {
  medium.validate();
  const double fh = medium.f_h_ghz();
  const double fm = medium.f_m_ghz();
  const double shared = std::sqrt(fh * (fh + fm));
  if (medium.geometry == WaveGeometry::kMssw) return {shared, fh + fm / 2.0};
  return {fh, shared};
}

double wavenumber_for(const SpinWaveMedium& medium, double f_ghz) {
  const auto [f_low, f_high] = band_limits(medium);
  if (!(f_ghz > f_low) || !(f_ghz < f_high))
    throw std::domain_error("frequency " + std::to_string(f_ghz) +
                            " GHz outside band (" + std::to_string(f_low) +
                            ", " + std::to_string(f_high) + ")");

  // The dispersion is strictly monotone in k (rising for surface waves,
  // falling for backward volume waves), so bisection suffices once the
  // target is bracketed. The backward-volume branch approaches its lower
  // edge only as k -> inf, so the upper bracket grows until it passes f.
  const bool rising = medium.geometry == WaveGeometry::kMssw;
  double lo = 0.0;
  double hi = 1.0 / medium.d0_m;
  for (int i = 0; i < 80; ++i) {
    const double f_hi = frequency_at(medium, hi);
    if (rising ? (f_hi >= f_ghz) : (f_hi <= f_ghz)) break;
    lo = hi;
    hi *= 2.0;
  }

  for (int i = 0; i < 200 && lo < hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = frequency_at(medium, mid);
    const bool go_right = rising ? (fm < f_ghz) : (fm > f_ghz);
    if (go_right)
      lo = mid;
    else
      hi = mid;
  }
  const double k = 0.5 * (lo + hi);
  if (std::abs(frequency_at(medium, k) - f_ghz) > 1e-9 * f_ghz)
    throw std::runtime_error("dispersion inversion did not converge");
  return k;
}

PhaseAngle phase_over_length(const SpinWaveMedium& medium, double f_ghz,
                             double length_m) {
  if (!(length_m > 0.0)) throw std::invalid_argument("length must be positive");
  return PhaseAngle::radians(wavenumber_for(medium, f_ghz) * length_m);
}

std::vector<DispersionPoint> dispersion_table(const SpinWaveMedium& medium,
                                              double k_min, double k_max,
                                              int points) {
  if (points < 2) throw std::invalid_argument("table needs at least 2 points");
  if (!(k_min >= 0.0) || !(k_max > k_min))
    throw std::invalid_argument("invalid wavenumber range");
  std::vector<DispersionPoint> table;
  table.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double k = k_min + (k_max - k_min) * i / (points - 1);
    table.push_back({k, frequency_at(medium, k)});
  }
  return table;
}

}  // namespace ringsim
