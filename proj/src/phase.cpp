#include "ringsim/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace ringsim {

PhaseAngle PhaseAngle::pi_units(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("phase angle must be finite");
  }
  double wrapped = std::fmod(value, 2.0);
  if (wrapped < 0.0) wrapped += 2.0;
  if (wrapped >= 2.0) wrapped = 0.0;  // the add can land exactly on 2
  PhaseAngle p;
  p.units_ = wrapped;
  return p;
}

PhaseAngle PhaseAngle::radians(double value) {
  return pi_units(value / std::numbers::pi);
}

double PhaseAngle::distance_to_zero() const {
  return std::min(units_, 2.0 - units_) * std::numbers::pi;
}

}  // namespace ringsim
