#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "peaks/lattice.hpp"
#include "peaks/weighted_norms.hpp"

using namespace peaks;

namespace {
PeakConfig cfg_of(int N, int k, double eps) {
  PeakConfig c;
  c.N = N;
  c.k = k;
  c.epsilon = eps;
  return c;
}
}  // namespace

TEST_CASE("chord distances") {
  CHECK(cfg_of(5, 2, 0.5).pair_distance(1, 2) == doctest::Approx(4.0));
  CHECK(cfg_of(5, 4, 1.0).pair_distance(1, 2) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(cfg_of(5, 6, 1.0).pair_distance(1, 3) ==
        doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(cfg_of(5, 4, 1.0).pair_distance(0, 2),
                  std::invalid_argument);
}

TEST_CASE("closed-form distances match coordinate differences") {
  const auto cfg = cfg_of(5, 300, 0.7);
  for (int j : {2, 5, 77, 150, 300}) {
    const auto a = peak_point(cfg, 1);
    const auto b = peak_point(cfg, j);
    double s = 0;
    for (size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    CHECK(cfg.pair_distance(1, j) ==
          doctest::Approx(std::sqrt(s)).epsilon(1e-12));
  }
}

TEST_CASE("small lattice sums in closed form") {
  CHECK(lattice_sum(cfg_of(5, 2, 0.3), 2.0) == doctest::Approx(0.0225));
  CHECK(lattice_sum(cfg_of(5, 3, 0.3), 1.0) ==
        doctest::Approx(2.0 * 0.3 / std::sqrt(3.0)));
}

TEST_CASE("base-point relabeling invariance") {
  const auto cfg = cfg_of(6, 9, 0.2);
  double s1 = 0, s4 = 0;
  for (int j = 1; j <= cfg.k; ++j) {
    if (j != 1) s1 += std::pow(cfg.pair_distance(1, j), -2.5);
    if (j != 4) s4 += std::pow(cfg.pair_distance(4, j), -2.5);
  }
  CHECK(s1 == doctest::Approx(s4).epsilon(1e-13));
}

TEST_CASE("monotone in alpha when the minimal chord exceeds 1") {
  const auto cfg = cfg_of(5, 8, 0.1);  // min chord = 20 sin(pi/8) > 1
  CHECK(lattice_sum(cfg, 2.0) < lattice_sum(cfg, 1.0));
  CHECK(lattice_sum(cfg, 3.0) < lattice_sum(cfg, 2.0));
}

TEST_CASE("zeta against closed forms") {
  CHECK(zeta_real(2.0) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-10));
  CHECK(zeta_real(4.0) ==
        doctest::Approx(std::pow(M_PI, 4) / 90.0).epsilon(1e-12));
  CHECK(zeta_real(3.0) ==
        doctest::Approx(1.2020569031595942854).epsilon(1e-12));
  CHECK_THROWS_AS(zeta_real(1.0), std::invalid_argument);
}

TEST_CASE("Q3 closed form and Richardson-extrapolated ring sums") {
  CHECK(Q3_constant(6) == doctest::Approx(1.0 / 720.0).epsilon(1e-12));
  const double q3 = Q3_constant(5);
  // brute-force ring sums, k^{-2}-extrapolated
  const double s1 = normalized_ring_sum(1024, 3.0);
  const double s2 = normalized_ring_sum(2048, 3.0);
  const double rich = (4.0 * s2 - s1) / 3.0;
  CHECK(std::fabs(rich - q3) < 5e-6);
  CHECK(std::fabs(rich - q3) < std::fabs(s2 - q3));
  // ratio converges monotonically as k doubles
  double prev = std::fabs(normalized_ring_sum(64, 3.0) / q3 - 1.0);
  for (int k = 128; k <= 2048; k *= 2) {
    const double cur = std::fabs(normalized_ring_sum(k, 3.0) / q3 - 1.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("regime exponents of the interaction sum") {
  const auto above = regime_exponent_check(5, 2.0, 16, 2048);
  CHECK(above.expected_exponent == doctest::Approx(-1.0));
  CHECK(std::fabs(above.fitted_exponent - above.expected_exponent) < 0.02);

  // Sub-critical decay converges only like k^{-1/2}; fit over large k.
  const auto below = regime_exponent_check(5, 0.5, 1024, 65536);
  CHECK(below.expected_exponent == doctest::Approx(1.0 - 0.5 * 1.5));
  CHECK(std::fabs(below.fitted_exponent - below.expected_exponent) < 0.02);

  const auto at_one = regime_exponent_check(5, 1.0, 64, 4096);
  CHECK(at_one.log_corrected);
  CHECK(std::fabs(at_one.fitted_exponent - at_one.expected_exponent) < 0.05);
}

TEST_CASE("sweep export") {
  const std::string path = "/tmp/peaks_test_lattice.csv";
  export_lattice_sweep(path, 5, 3.0, 8, 64);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,sum,normalized,limit");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows >= 4);
  std::remove(path.c_str());
}
