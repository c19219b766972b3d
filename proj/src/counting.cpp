#include "ringsim/counting.hpp"

#include <stdexcept>

namespace ringsim {

BigInt corner_path_count(int n) {
  if (n < 1) throw std::invalid_argument("mesh side must be >= 1");
  // C(2n, n) via the product form; exact at every step.
  BigInt result = 1;
  for (int i = 1; i <= n; ++i) {
    result *= n + i;
    result /= i;
  }
  return result;
}

BigInt total_path_count(int n) {
  if (n < 1) throw std::invalid_argument("mesh side must be >= 1");
  return (BigInt(1) << (2 * n - 2)) * corner_path_count(n);
}

BigInt instruction_count(int n, int z, int levels) {
  if (n < 1) throw std::invalid_argument("mesh side must be >= 1");
  if (z < 1 || levels < 1)
    throw std::invalid_argument("phase and amplitude level counts must be >= 1");
  BigInt result = BigInt(1) << (n - 1);
  result *= boost::multiprecision::pow(BigInt(z), static_cast<unsigned>(n));
  result *= boost::multiprecision::pow(BigInt(levels), static_cast<unsigned>(n));
  return result;
}

CapacityReport functional_throughput(int n, double l_m, double v_g_m_per_s) {
  if (!(l_m > 0.0)) throw std::invalid_argument("cell size must be positive");
  if (!(v_g_m_per_s > 0.0))
    throw std::invalid_argument("group velocity must be positive");

  CapacityReport report;
  report.n = n;
  report.corner_paths = corner_path_count(n);
  report.total_paths = total_path_count(n);
  report.instructions = instruction_count(n);
  report.area_m2 = l_m * l_m * (static_cast<double>(n) * n);
  report.time_s = l_m * (static_cast<double>(n) * n) / v_g_m_per_s;
  report.throughput = static_cast<double>(report.total_paths) /
                      (report.area_m2 * report.time_s);
  report.note =
      "total_paths applies the corner-pair count to every port combination";
  return report;
}

}  // namespace ringsim
