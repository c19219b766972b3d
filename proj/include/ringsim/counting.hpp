#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ringsim {

using BigInt = boost::multiprecision::cpp_int;

/// Closed-form capacity figures for an n-by-n device.
struct CapacityReport {
  int n = 0;
  BigInt corner_paths;       // most distant port pair
  BigInt total_paths;        // across all port switch combinations
  BigInt instructions;       // phase/attenuation/switch settings
  double throughput = 0.0;   // operations / (m^2 * s)
  double area_m2 = 0.0;
  double time_s = 0.0;
  std::string note;
};

/// Monotone path count between the most distant ports: C(2n, n), exact.
BigInt corner_path_count(int n);

/// 2^(2n-2) * C(2n, n), exact. The port-combination factor treats every
/// port pair as if it had the corner pair's path count.
BigInt total_path_count(int n);

/// 2^(n-1) * z^n * levels^n settings of the output switches, phase
/// shifters, and attenuators.
BigInt instruction_count(int n, int z = 180, int levels = 20);

/// total_path_count(n) / (area * time) with area = l^2 * n^2 and
/// time = l * n^2 / v_g.
CapacityReport functional_throughput(int n, double l_m, double v_g_m_per_s);

}  // namespace ringsim
