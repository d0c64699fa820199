#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "peaks/params.hpp"

using namespace peaks;

TEST_CASE("critical_q diagonal cases") {
  CHECK(critical_q(6, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(critical_q(5, 7.0 / 3.0) == doctest::Approx(7.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("critical_q off-diagonal") {
  // 1/(q+1) = 3/5 - 1/3.2
  const double q = critical_q(5, 2.2);
  CHECK(q == doctest::Approx(1.0 / (0.6 - 1.0 / 3.2) - 1.0).epsilon(1e-14));
  CHECK(q == doctest::Approx(2.478260869565217).epsilon(1e-12));
}

TEST_CASE("critical_q rejects exponents off the hyperbola") {
  CHECK_THROWS_AS(critical_q(5, 0.5), std::invalid_argument);
}

TEST_CASE("condition A") {
  CHECK(check_condition_A(5, 2.1));
  CHECK_FALSE(check_condition_A(5, 2.0));  // open left endpoint
  CHECK(check_condition_A(6, 2.0));        // (6+0.75)/4 < 2 <= 2
  CHECK_THROWS_AS(check_condition_A(4, 2.0), std::invalid_argument);
  // right endpoint (N+2)/(N-2) is always admissible
  for (int N = 5; N <= 12; ++N)
    CHECK(check_condition_A(N, double(N + 2) / double(N - 2)));
}

TEST_CASE("epsilon_of_k") {
  CHECK(epsilon_of_k(5, 1) == 1.0);
  CHECK(epsilon_of_k(5, 32) == doctest::Approx(std::pow(32.0, -1.5)).epsilon(1e-15));
  CHECK(epsilon_of_k(6, 81) == doctest::Approx(std::pow(3.0, -16.0 / 3.0)).epsilon(1e-14));
  // strictly decreasing in k
  double prev = 2.0;
  for (int k = 1; k <= 64; k *= 2) {
    const double e = epsilon_of_k(6, k);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("SystemParams invariants") {
  for (double p : {2.05, 2.2, 7.0 / 3.0}) {
    const auto sp = SystemParams::make(5, p, 8, 1.0, -1.0);
    CHECK(std::fabs(1.0 / (sp.p + 1) + 1.0 / (sp.q + 1) - 3.0 / 5.0) < 1e-12);
    CHECK(sp.tau == 2.0 / 3.0);
    CHECK(sp.epsilon == epsilon_of_k(5, 8));
    CHECK(sp.p <= 7.0 / 3.0 + 1e-15);
    CHECK(sp.q >= 7.0 / 3.0 - 1e-15);
  }
  CHECK_THROWS_AS(SystemParams::make(5, 2.0, 8, 1.0, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SystemParams::make(4, 2.0, 8, 1.0, -1.0),
                  std::invalid_argument);
}

TEST_CASE("JSON round trip derives q, tau, epsilon") {
  const auto sp = SystemParams::from_json_text(
      R"({"N":6,"p":2.0,"k":16,"mu":1.5,"gamma":-0.5,"delta":0.02})");
  CHECK(sp.q == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sp.epsilon == epsilon_of_k(6, 16));
  const auto sp2 = SystemParams::from_json_text(sp.to_json_text());
  CHECK(sp2.p == sp.p);
  CHECK(sp2.k == sp.k);
  CHECK(sp2.gamma == sp.gamma);
}
