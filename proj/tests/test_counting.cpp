#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "ringsim/counting.hpp"

using namespace ringsim;

TEST_CASE("corner path counts") {
  CHECK(corner_path_count(1) == 2);
  CHECK(corner_path_count(5) == 252);
  CHECK(corner_path_count(6) == 924);
  CHECK(corner_path_count(50) > BigInt("100000000000000000000000000000"));  // 1e29
  CHECK_THROWS_AS(corner_path_count(0), std::invalid_argument);
}

TEST_CASE("corner counts equal the brute-force monotone walker") {
  for (int n = 1; n <= 8; ++n)
    CHECK(corner_path_count(n) == oracle::monotone_lattice_paths(n));
}

TEST_CASE("Pascal-style recurrence holds exactly up to n = 100") {
  for (int n = 2; n <= 100; ++n) {
    const BigInt lhs = corner_path_count(n) * (BigInt(n) * n);
    const BigInt rhs = corner_path_count(n - 1) * (BigInt(2 * n) * (2 * n - 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("total path counts") {
  CHECK(total_path_count(1) == 2);
  CHECK(total_path_count(5) == 64512);  // 256 * 252
  CHECK(total_path_count(50) ==
        (BigInt(1) << 98) * corner_path_count(50));
  CHECK_THROWS_AS(total_path_count(0), std::invalid_argument);
}

TEST_CASE("instruction counts") {
  CHECK(instruction_count(1) == 3600);
  CHECK(instruction_count(2, 2, 2) == 32);
  CHECK(instruction_count(5) ==
        BigInt(16) * BigInt("188956800000") * BigInt(3200000));
  CHECK_THROWS_AS(instruction_count(0), std::invalid_argument);
  CHECK_THROWS_AS(instruction_count(3, 0, 20), std::invalid_argument);
}

TEST_CASE("functional throughput of the benchmark device") {
  const CapacityReport r = functional_throughput(50, 100e-6, 1e4);
  CHECK(r.area_m2 == 2.5e-5);   // 25 mm^2
  CHECK(r.time_s == 2.5e-5);    // 25 us
  CHECK(r.throughput > 1e60);
  CHECK(r.corner_paths == corner_path_count(50));
}

TEST_CASE("functional throughput unit case") {
  const CapacityReport r = functional_throughput(1, 1.0, 1.0);
  CHECK(r.area_m2 == 1.0);
  CHECK(r.time_s == 1.0);
  CHECK(r.throughput == 2.0);
  CHECK_THROWS_AS(functional_throughput(1, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(functional_throughput(1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("all counts are at least 1 and throughput positive") {
  for (int n : {1, 2, 3, 7, 20}) {
    const CapacityReport r = functional_throughput(n, 1e-4, 1e4);
    CHECK(r.corner_paths >= 1);
    CHECK(r.total_paths >= 1);
    CHECK(r.instructions >= 1);
    CHECK(r.throughput > 0.0);
  }
}
