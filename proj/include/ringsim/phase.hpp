#pragma once

#include <numbers>

namespace ringsim {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle normalized to [0, 2*pi). All arithmetic wraps modulo 2*pi.
/// Stored in pi units, the notation phases are written in everywhere
/// (shifter settings, circuit files), so decimal settings survive
/// serialization exactly.
class PhaseAngle {
 public:
  constexpr PhaseAngle() = default;

  static PhaseAngle radians(double value);
  static PhaseAngle pi_units(double value);

  double rad() const { return units_ * std::numbers::pi; }
  double in_pi_units() const { return units_; }

  /// Distance to the nearest multiple of 2*pi, in radians, in [0, pi].
  double distance_to_zero() const;

  PhaseAngle operator+(PhaseAngle other) const {
    return pi_units(units_ + other.units_);
  }
  PhaseAngle operator-(PhaseAngle other) const {
    return pi_units(units_ - other.units_);
  }
  PhaseAngle& operator+=(PhaseAngle other) { return *this = *this + other; }

  friend bool operator==(PhaseAngle a, PhaseAngle b) = default;
  friend auto operator<=>(PhaseAngle a, PhaseAngle b) = default;

 private:
  double units_ = 0.0;  // invariant: 0 <= units_ < 2
};

}  // namespace ringsim
