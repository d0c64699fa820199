#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>

#include "peaks/ground_state.hpp"

using namespace peaks;

namespace {

// Closed-form diagonal ground states:
//   N=6, p=q=2:    U = V = (1 + r^2/24)^{-2}
//   N=5, p=q=7/3:  U = V = (1 + r^2/15)^{-3/2}
double talenti6(double r) { return std::pow(1.0 + r * r / 24.0, -2.0); }
double talenti5(double r) { return std::pow(1.0 + r * r / 15.0, -1.5); }

const RadialProfile& profile6() {
  static RadialProfile p =
      solve_ground_state(SystemParams::make(6, 2.0, 8, 1.0, -1.0), 1e-12);
  return p;
}
const RadialProfile& profile5() {
  static RadialProfile p = solve_ground_state(
      SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0), 1e-12);
  return p;
}
const RadialProfile& profile5_offdiag() {
  static RadialProfile p =
      solve_ground_state(SystemParams::make(5, 2.2, 8, 1.0, -1.0), 1e-12);
  return p;
}

}  // namespace

TEST_CASE("shoot classification brackets the ground state") {
  const auto params = SystemParams::make(6, 2.0, 8, 1.0, -1.0);
  const auto high = shoot(params, 10.0, 200.0, 1e-11);
  CHECK(high.classification == ShootClass::U_crossed_zero);
  const auto low = shoot(params, 0.01, 200.0, 1e-11);
  CHECK(low.classification == ShootClass::V_crossed_zero);
  // exact Talenti initial datum decays
  const auto mid = shoot(params, 1.0, 20000.0, 1e-11);
  CHECK(mid.classification == ShootClass::decayed);
}

TEST_CASE("shoot classification is monotone in beta") {
  const auto params = SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0);
  int last = -1;  // 0 = V_crossed (low side), 1 = U_crossed (high side)
  for (double beta : {0.2, 0.6, 2.0, 6.0}) {
    const auto out = shoot(params, beta, 4000.0, 1e-11);
    REQUIRE(out.classification != ShootClass::undecided);
    const int side = out.classification == ShootClass::U_crossed_zero ? 1 : 0;
    CHECK(side >= last);
    last = side;
  }
}

TEST_CASE("N=6 diagonal matches the closed form") {
  const auto& prof = profile6();
  CHECK(prof.beta == doctest::Approx(1.0).epsilon(1e-6));
  double sup = 0;
  for (double r = 0; r <= 50.0; r += 0.37) {
    const auto [U, V] = prof.evaluate(r);
    sup = std::max(sup, std::fabs(U - talenti6(r)));
    sup = std::max(sup, std::fabs(V - talenti6(r)));
  }
  CHECK(sup <= 1e-5);
}

TEST_CASE("N=5 diagonal matches the closed form") {
  const auto& prof = profile5();
  CHECK(prof.beta == doctest::Approx(1.0).epsilon(1e-6));
  double sup = 0;
  for (double r = 0; r <= 50.0; r += 0.37)
    sup = std::max(sup, std::fabs(prof.evaluate(r).first - talenti5(r)));
  CHECK(sup <= 1e-5);
}

TEST_CASE("off-diagonal profile is positive, decreasing, consistent") {
  const auto& prof = profile5_offdiag();
  for (size_t i = 0; i + 1 < prof.r.size(); ++i) {
    CHECK(prof.U[i] > 0);
    CHECK(prof.V[i] > 0);
    CHECK(prof.U[i + 1] < prof.U[i]);
    CHECK(prof.V[i + 1] < prof.V[i]);
  }
  CHECK(prof.ode_residual() <= 1e-8);
  CHECK(classify_regime(5, 2.2) == DecayRegime::fast);  // 2.2 > 5/3
}

TEST_CASE("decay constants against closed forms") {
  CHECK(profile6().tail_a == doctest::Approx(576.0).epsilon(5e-3));
  CHECK(profile6().tail_b == doctest::Approx(576.0).epsilon(5e-3));
  const double c5 = std::pow(15.0, 1.5);
  CHECK(profile5().tail_a == doctest::Approx(c5).epsilon(5e-3));
  CHECK(profile5().tail_b == doctest::Approx(c5).epsilon(5e-3));
  CHECK(profile5_offdiag().tail_a > 0);
  CHECK(profile5_offdiag().tail_b > 0);
  CHECK(profile5_offdiag().regime == DecayRegime::fast);
}

TEST_CASE("evaluate at anchor points and beyond the grid") {
  const auto& prof = profile6();
  const auto [u0, v0] = prof.evaluate(0.0);
  CHECK(u0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v0 == doctest::Approx(prof.beta).epsilon(1e-12));
  const auto [u1, v1] = prof.evaluate(std::sqrt(24.0));
  CHECK(u1 == doctest::Approx(0.25).epsilon(1e-5));
  const double far = 10.0 * prof.r_max();
  CHECK(prof.evaluate(far).first ==
        doctest::Approx(prof.tail_a * std::pow(far, -4.0)).epsilon(1e-12));
}

TEST_CASE("tail-bound report: closed-form limit and corruption flag") {
  const auto rep6 = verify_tail_bounds(profile6());
  CHECK(rep6.pass);
  // r^6 |V - 576 r^{-4}| -> 2 * 24^3 = 27648
  CHECK(rep6.sup_V == doctest::Approx(27648.0).epsilon(0.05));
  // N=5 diagonal: kappa_0 = 2, U supremum finite
  const auto rep5 = verify_tail_bounds(profile5());
  CHECK(rep5.pass);
  CHECK(rep5.sup_U > 0);
  CHECK(rep5.sup_U < 1e7);

  RadialProfile bad = profile6();
  bad.tail_b *= 1.1;
  CHECK_FALSE(verify_tail_bounds(bad).pass);
}

TEST_CASE("persistence round trip") {
  const auto& prof = profile5_offdiag();
  const std::string csv = "/tmp/peaks_test_profile.csv";
  const std::string js = "/tmp/peaks_test_profile.json";
  prof.save_csv(csv, js);
  const auto back = RadialProfile::load_csv(csv, js);
  REQUIRE(back.r.size() == prof.r.size());
  for (size_t i = 0; i < prof.r.size(); i += 13) {
    const auto [u1, v1] = prof.evaluate(prof.r[i]);
    const auto [u2, v2] = back.evaluate(prof.r[i]);
    CHECK(std::fabs(u1 - u2) <= 1e-12);
    CHECK(std::fabs(v1 - v2) <= 1e-12);
  }
  std::remove(csv.c_str());
  std::remove(js.c_str());
}
