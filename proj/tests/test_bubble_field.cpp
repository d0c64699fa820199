#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "peaks/bubble_field.hpp"
#include "peaks/verify.hpp"

using namespace peaks;

namespace {
const CorrectionField& phi5() {
  static CorrectionField f(5, -1.0, 1e-8);
  return f;
}
}  // namespace

TEST_CASE("bubble scaling and translation") {
  const auto& prof = reference_profile_n6_diagonal();
  Bubble unit{&prof, 1.0, {0, 0, 0, 0, 0, 0}};
  const auto [u0, v0] = unit.eval({0, 0, 0, 0, 0, 0});
  CHECK(u0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v0 == doctest::Approx(prof.beta).epsilon(1e-12));
  // N/(q+1) = 2 on the N=6 diagonal
  Bubble two{&prof, 2.0, {0, 0, 0, 0, 0, 0}};
  CHECK(two.eval({0, 0, 0, 0, 0, 0}).first == doctest::Approx(4.0).epsilon(1e-12));

  Bubble shifted{&prof, 1.7, {1.0, -2.0, 0, 0.5, 0, 0}};
  const std::vector<double> y = {1.3, 0.4, 0.2, -0.1, 0.0, 0.8};
  std::vector<double> ymx(6);
  for (int i = 0; i < 6; ++i) ymx[i] = y[i] - shifted.center[i];
  Bubble origin{&prof, 1.7, {0, 0, 0, 0, 0, 0}};
  CHECK(shifted.eval(y).second ==
        doctest::Approx(origin.eval(ymx).second).epsilon(1e-14));
}

TEST_CASE("phi0 trivial and linear cases") {
  CorrectionField zero(5, 0.0);
  CHECK(zero.eval(2.0, 1.0) == 0.0);
  CorrectionField g1(5, -0.7, 1e-8);
  CorrectionField g2(5, -1.4, 1e-8);
  for (auto [r, z] : {std::pair{0.0, 0.5}, {2.0, 0.0}, {3.0, 4.0}})
    CHECK(g2.eval(r, z) == doctest::Approx(2.0 * g1.eval(r, z)).epsilon(1e-9));
}

TEST_CASE("cached evaluation matches the direct quadrature") {
  for (auto [r, z] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {2.0, 1.0},
                      {10.0, 3.0}, {0.5, 20.0}}) {
    const double a = phi5().eval(r, z);
    const double b = phi5().eval_exact(r, z);
    CHECK(a == doctest::Approx(b).epsilon(1e-6));
  }
}

TEST_CASE("boundary flux matches the prescribed data") {
  const double h = 0.01;
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    const double fd = (-3.0 * phi5().eval_exact(r, 0.0) +
                       4.0 * phi5().eval_exact(r, h) -
                       phi5().eval_exact(r, 2.0 * h)) /
                      (2.0 * h);
    CHECK(std::fabs(fd - phi5().flux(r)) <= 1e-4);
  }
}

TEST_CASE("interior harmonicity") {
  const double h = 0.05;
  for (auto [r, z] : {std::pair{2.0, 1.0}, {1.0, 3.0}}) {
    auto f = [&](double rr, double zz) { return phi5().eval(rr, zz); };
    const double frr =
        (f(r + h, z) - 2.0 * f(r, z) + f(r - h, z)) / (h * h);
    const double fzz =
        (f(r, z + h) - 2.0 * f(r, z) + f(r, z - h)) / (h * h);
    const double fr = (f(r + h, z) - f(r - h, z)) / (2.0 * h);
    const double lap = frr + 3.0 / r * fr + fzz;  // N-2 = 3 transverse dims
    CHECK(std::fabs(lap) <= 0.02 * (std::fabs(frr) + std::fabs(fzz)));
  }
}

TEST_CASE("decay of the field and its derivatives") {
  const std::vector<double> mags = {10.0, 30.0, 100.0};
  std::vector<double> vals, grads, hesses;
  for (double m : mags) {
    const double c = m / std::sqrt(2.0);
    vals.push_back(std::fabs(phi5().eval(c, c)));
    const double h = 0.02 * m;
    auto along = [&](double t) {
      const double cc = (m + t) / std::sqrt(2.0);
      return phi5().eval(cc, cc);
    };
    grads.push_back(std::fabs((along(h) - along(-h)) / (2.0 * h)));
    hesses.push_back(
        std::fabs((along(h) - 2.0 * along(0.0) + along(-h)) / (h * h)));
  }
  // phi0 ~ |y|^{3-N}: bounded scaled magnitude over the sweep
  for (size_t i = 0; i < mags.size(); ++i)
    CHECK(vals[i] * std::pow(1.0 + mags[i], 2.0) <=
          2.0 * vals[0] * std::pow(1.0 + mags[0], 2.0));
  auto slope = [&](const std::vector<double>& v) {
    return std::log(v.back() / v.front()) /
           std::log(mags.back() / mags.front());
  };
  CHECK(std::fabs(slope(vals) + 2.0) <= 0.15);
  CHECK(std::fabs(slope(grads) + 3.0) <= 0.15);
  CHECK(std::fabs(slope(hesses) + 4.0) <= 0.25);
}

TEST_CASE("projected bubble corrections") {
  const auto& prof = reference_profile_n5_diagonal();
  const auto params = SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0);
  const std::vector<double> xj(5, 0.0);
  const std::vector<double> y = {0.5, 0.0, 0.0, 0.0, 0.3};

  // gamma = 0: the correction vanishes identically
  CorrectionField flat(5, 0.0);
  Bubble pure{&prof, 1.0 / 0.8, xj};
  const auto pb = projected_bubble_approx(prof, params, flat, 0.8, xj, y);
  const auto bb = pure.eval(y);
  CHECK(pb.first == doctest::Approx(bb.first).epsilon(1e-14));
  CHECK(pb.second == doctest::Approx(bb.second).epsilon(1e-14));

  // composition at y = x_j with Lambda = 1
  const auto pc = projected_bubble_approx(prof, params, phi5(), 1.0, xj, xj);
  const double phi_at_0 = phi5().eval(0.0, 0.0);
  CHECK(pc.first ==
        doctest::Approx(1.0 - params.epsilon * phi_at_0).epsilon(1e-10));
  CHECK(pc.second ==
        doctest::Approx(prof.beta - params.epsilon * phi_at_0).epsilon(1e-10));

  CHECK_THROWS_AS(
      projected_bubble_approx(prof, params, phi5(), 1e-5, xj, y),
      std::invalid_argument);
}

TEST_CASE("A2-type bound report") {
  const auto& prof = reference_profile_n5_diagonal();
  const auto params = SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0);
  std::vector<std::vector<double>> samples;
  for (double r : {0.5, 2.0, 8.0, 32.0}) samples.push_back({r, 0, 0, 0, 0});

  CorrectionField flat(5, 0.0);
  const auto zero = verify_A2_bounds(prof, params, flat, 1.0, samples);
  CHECK(zero.pass);
  for (double c : zero.constants) CHECK(c == 0.0);

  const auto rep = verify_A2_bounds(prof, params, phi5(), 1.0, samples);
  CHECK(rep.pass);
  // N = 5 divides by |ln eps|: constants decrease along the sweep
  for (size_t i = 0; i + 1 < rep.constants.size(); ++i)
    CHECK(rep.constants[i + 1] < rep.constants[i]);

  // N = 6: no log factor, the reported constant is epsilon-independent
  const auto& prof6 = reference_profile_n6_diagonal();
  const auto params6 = SystemParams::make(6, 2.0, 8, 1.0, -1.0);
  CorrectionField phi6(6, -1.0, 1e-7);
  std::vector<std::vector<double>> s6;
  for (double r : {0.5, 2.0, 8.0}) s6.push_back({r, 0, 0, 0, 0, 0});
  const auto rep6 = verify_A2_bounds(prof6, params6, phi6, 1.0, s6);
  CHECK(rep6.pass);
  for (double c : rep6.constants)
    CHECK(c == doctest::Approx(rep6.constants.front()).epsilon(1e-12));
}
