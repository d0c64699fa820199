#include "peaks/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "peaks/bubble_field.hpp"
#include "peaks/energy_constants.hpp"
#include "peaks/lattice.hpp"
#include "peaks/reduced_energy.hpp"
#include "peaks/weighted_norms.hpp"

namespace peaks {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double slope_loglog(const std::vector<double>& x,
                    const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = 0, my = 0;
  std::vector<double> lx(n), ly(n);
  for (size_t i = 0; i < n; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(std::fabs(y[i]));
    mx += lx[i];
    my += ly[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  return sxy / sxx;
}

double talenti(int N, double r) {
  const double s = N == 6 ? 24.0 : 15.0;
  const double e = N == 6 ? -2.0 : -1.5;
  return std::pow(1.0 + r * r / s, e);
}

}  // namespace

const RadialProfile& reference_profile_n6_diagonal() {
  static RadialProfile p =
      solve_ground_state(SystemParams::make(6, 2.0, 8, 1.0, -1.0), 1e-12);
  return p;
}
const RadialProfile& reference_profile_n5_diagonal() {
  static RadialProfile p = solve_ground_state(
      SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0), 1e-12);
  return p;
}
const RadialProfile& reference_profile_n5_offdiagonal() {
  static RadialProfile p =
      solve_ground_state(SystemParams::make(5, 2.2, 8, 1.0, -1.0), 1e-12);
  return p;
}

CheckResult check_talenti_oracle() {
  CheckResult res;
  res.name = "talenti_oracle";
  double worst_beta = 0, worst_sup = 0;
  for (int N : {6, 5}) {
    const auto& prof = N == 6 ? reference_profile_n6_diagonal()
                              : reference_profile_n5_diagonal();
    worst_beta = std::max(worst_beta, std::fabs(prof.beta - 1.0));
    double sup = 0;
    for (double r = 0; r <= 50.0; r += 0.25) {
      const auto [U, V] = prof.evaluate(r);
      sup = std::max(sup, std::fabs(U - talenti(N, r)));
      sup = std::max(sup, std::fabs(V - talenti(N, r)));
    }
    worst_sup = std::max(worst_sup, sup);
  }
  res.pass = worst_beta <= 1e-6 && worst_sup <= 1e-5;
  res.detail = "|beta-1| = " + fmt(worst_beta) +
               "; sup deviation = " + fmt(worst_sup);
  return res;
}

CheckResult check_decay_constants() {
  CheckResult res;
  res.name = "decay_constants";
  const double c5 = std::pow(15.0, 1.5);
  const auto& p6 = reference_profile_n6_diagonal();
  const auto& p5 = reference_profile_n5_diagonal();
  double dev = std::fabs(p6.tail_a / 576.0 - 1.0);
  dev = std::max(dev, std::fabs(p6.tail_b / 576.0 - 1.0));
  dev = std::max(dev, std::fabs(p5.tail_a / c5 - 1.0));
  dev = std::max(dev, std::fabs(p5.tail_b / c5 - 1.0));
  res.pass = dev <= 5e-3;
  res.detail = "max relative deviation = " + fmt(dev) +
               " (a6 = " + fmt(p6.tail_a) + ", a5 = " + fmt(p5.tail_a) + ")";
  return res;
}

CheckResult check_tail_remainders() {
  CheckResult res;
  res.name = "tail_remainders";
  const auto rep = verify_tail_bounds(reference_profile_n5_offdiagonal());
  res.pass = rep.pass;
  res.detail = "window-doubling growth V = " + fmt(rep.growth_V) +
               ", U = " + fmt(rep.growth_U) + " (tolerance 5%)";
  return res;
}

CheckResult check_interaction_rate(bool quick) {
  CheckResult res;
  res.name = "interaction_rate";
  const auto& prof = reference_profile_n5_diagonal();
  const auto params = SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0);
  QuadratureSpec spec;
  spec.rel_tol = 1e-7;
  const std::vector<double> ds{20.0, 40.0, 80.0};
  std::vector<double> vals;
  for (double d : ds)
    vals.push_back(interaction_integral(prof, params, d, spec).first);
  // The d^{2-N} law carries a d^{-2} correction whose coefficient is set by
  // the bubble core scale; solve  ln I = c0 + s ln d + c2 / d^2  exactly on
  // the three samples so the reported slope s is the cleaned exponent.
  const double l0 = std::log(vals[0]), l1 = std::log(vals[1]),
               l2 = std::log(vals[2]);
  const double x0 = std::log(ds[0]), x1 = std::log(ds[1]),
               x2 = std::log(ds[2]);
  const double w0 = 1.0 / (ds[0] * ds[0]), w1 = 1.0 / (ds[1] * ds[1]),
               w2 = 1.0 / (ds[2] * ds[2]);
  // Eliminate c0, then solve the 2x2 system for (s, c2).
  const double a11 = x1 - x0, a12 = w1 - w0, b1 = l1 - l0;
  const double a21 = x2 - x1, a22 = w2 - w1, b2 = l2 - l1;
  const double det = a11 * a22 - a12 * a21;
  const double slope = (b1 * a22 - a12 * b2) / det;
  (void)quick;
  const auto A4 = compute_A4_B4(prof, params).first;
  const double scaled = std::pow(80.0, 3.0) * vals.back();
  const double dev = std::fabs(scaled / A4.value - 1.0);
  res.pass = std::fabs(slope + 3.0) <= 0.05 && dev <= 0.02;
  res.detail = "slope = " + fmt(slope) + " (want -3 +- 0.05); d^3 I / A4 - 1 = " +
               fmt(dev) + " at d = 80";
  return res;
}

CheckResult check_lattice_asymptotics(bool quick) {
  CheckResult res;
  res.name = "lattice_asymptotics";
  const double q3 = Q3_constant(5);
  const double r64 = std::fabs(normalized_ring_sum(64, 3.0) / q3 - 1.0);
  const double r1024 = std::fabs(normalized_ring_sum(1024, 3.0) / q3 - 1.0);
  // alpha = 1: the sum divided by eps k must grow linearly in ln k
  std::vector<int> ks = quick ? std::vector<int>{64, 1024}
                              : std::vector<int>{64, 256, 1024, 4096};
  std::vector<double> R;
  for (int k : ks) {
    PeakConfig cfg;
    cfg.N = 5;
    cfg.k = k;
    cfg.epsilon = epsilon_of_k(5, k);
    R.push_back(lattice_sum(cfg, 1.0) / (cfg.epsilon * k));
  }
  double slope_dev = 0;
  for (size_t i = 0; i + 1 < R.size(); ++i) {
    const double s = (R[i + 1] - R[i]) /
                     (std::log(double(ks[i + 1])) - std::log(double(ks[i])));
    slope_dev = std::max(slope_dev, std::fabs(s * M_PI - 1.0));
  }
  res.pass = r64 <= 0.01 && r1024 <= 0.002 && slope_dev <= 0.03;
  res.detail = "Q3 ratio deviation: " + fmt(r64) + " (k=64), " + fmt(r1024) +
               " (k=1024); ln k factor deviation " + fmt(slope_dev);
  return res;
}

CheckResult check_maximizer(unsigned seed) {
  CheckResult res;
  res.name = "maximizer";
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> lw(std::log(0.1), std::log(10.0));
  std::uniform_int_distribution<int> dn(5, 10);
  double worst_gap = 0, worst_grad = 0;
  bool concave = true;
  for (int trial = 0; trial < 100; ++trial) {
    ReducedEnergyModel m;
    m.Q0 = 1.0;
    m.Q1 = std::exp(lw(rng));
    m.Q4 = std::exp(lw(rng));
    m.gamma = -std::exp(lw(rng));
    m.N = dn(rng);
    m.epsilon = 1.0;
    m.k = 1;
    const double ls = lambda_star(m);
    const double num = maximize_numeric(m, 1e-3, 1e3, 1e-12);
    worst_gap = std::max(worst_gap,
                         std::fabs(num - ls) / std::max(1.0, ls));
    const double scale =
        m.epsilon * (m.Q1 * std::fabs(m.gamma) +
                     m.Q4 * (m.N - 2) * std::pow(ls, double(m.N - 3)));
    worst_grad = std::max(worst_grad, std::fabs(dF_leading(m, ls)) / scale);
    concave = concave && d2F_leading(m, ls) < 0;
  }
  res.pass = worst_gap <= 1e-8 && worst_grad <= 1e-10 && concave;
  res.detail = "max |numeric - closed form| = " + fmt(worst_gap) +
               "; max relative F'(L*) = " + fmt(worst_grad) +
               (concave ? "; F'' < 0 in all cases" : "; F'' >= 0 somewhere");
  return res;
}

CheckResult check_phi0(bool quick) {
  CheckResult res;
  res.name = "phi0_field";
  double worst_flux = 0, worst_slope = 0;
  for (int N : {5, 6}) {
    CorrectionField phi0(N, -1.0, 1e-8);
    const int n_pts = quick ? 12 : 50;
    const double h = 0.0025;
    for (int i = 1; i <= n_pts; ++i) {
      const double r = 8.0 * double(i) / double(n_pts);
      const double fd = (-3.0 * phi0.eval_exact(r, 0.0) +
                         4.0 * phi0.eval_exact(r, h) -
                         phi0.eval_exact(r, 2.0 * h)) /
                        (2.0 * h);
      worst_flux = std::max(worst_flux, std::fabs(fd - phi0.flux(r)));
    }
    std::vector<double> mags = {10.0, 21.5, 46.4, 100.0};
    std::vector<double> vals;
    for (double m : mags)
      vals.push_back(std::fabs(phi0.eval(m / std::sqrt(2.0),
                                         m / std::sqrt(2.0))));
    const double slope = slope_loglog(mags, vals);
    worst_slope = std::max(worst_slope, std::fabs(slope + double(N - 3)));
  }
  res.pass = worst_flux <= 1e-4 && worst_slope <= 0.15;
  res.detail = "max flux residual = " + fmt(worst_flux) +
               "; max tail-slope deviation = " + fmt(worst_slope);
  return res;
}

CheckResult check_B3_regimes() {
  CheckResult res;
  res.name = "B3_regimes";
  const double exact = 0.5 * sphere_surface(4);  // y = 0, sigma = 1, N = 5
  const double v0 = b3_convolution(5, 1.0, 0.0);
  const double dev0 = std::fabs(v0 / exact - 1.0);
  const std::vector<double> sweep = {20.0, 40.0, 80.0, 160.0};
  const auto lo = check_B3(5, 0.5, sweep);
  const auto hi = check_B3(5, 10.0, sweep);
  const double dlo = std::fabs(lo.fitted_exponent - 0.5);
  const double dhi = std::fabs(hi.fitted_exponent - 3.0);
  res.pass = dev0 <= 1e-3 && dlo <= 0.05 && dhi <= 0.05;
  res.detail = "y=0 value deviation = " + fmt(dev0) + "; exponents " +
               fmt(lo.fitted_exponent) + " (want 0.5), " +
               fmt(hi.fitted_exponent) + " (want 3)";
  return res;
}

CheckResult check_positivity() {
  CheckResult res;
  res.name = "Q_positivity";
  res.pass = true;
  std::string parts;
  try {
    for (int which : {0, 1}) {
      const auto& prof = which == 0 ? reference_profile_n6_diagonal()
                                    : reference_profile_n5_offdiagonal();
      const auto params = which == 0 ? SystemParams::make(6, 2.0, 8, 1.0, -1.0)
                                     : SystemParams::make(5, 2.2, 8, 1.0, -1.0);
      const auto c = compute_energy_constants(prof, params);
      for (const ValErr* v : {&c.Q0, &c.Q1, &c.Q2, &c.Q4})
        if (!(v->value > 0) || !(v->error < v->value)) res.pass = false;
      parts += (which == 0 ? "N=6: " : "; N=5 p=2.2: ") + std::string("Q0 = ") +
               fmt(c.Q0.value) + ", Q1 = " + fmt(c.Q1.value) +
               ", Q2 = " + fmt(c.Q2.value) + ", Q4 = " + fmt(c.Q4.value);
    }
  } catch (const std::exception& e) {
    res.pass = false;
    parts += std::string("exception: ") + e.what();
  }
  res.detail = parts;
  return res;
}

CheckResult check_invariants() {
  CheckResult res;
  res.name = "hyperbola_and_symmetry";
  double hyper = 0;
  for (auto [N, p] : std::vector<std::pair<int, double>>{
           {5, 7.0 / 3.0}, {5, 2.2}, {6, 2.0}, {7, 1.7}, {7, 1.8}}) {
    const auto params = SystemParams::make(N, p, 8, 1.0, -1.0);
    hyper = std::max(hyper,
                     std::fabs(1.0 / (params.p + 1.0) + 1.0 / (params.q + 1.0) -
                               double(params.N - 2) / double(params.N)));
  }
  const auto params6 = SystemParams::make(6, 2.0, 8, 1.0, -1.0);
  const auto c = compute_energy_constants(reference_profile_n6_diagonal(),
                                          params6);
  double diag = 0;
  diag = std::max(diag, std::fabs(c.A0.value / c.B0.value - 1.0));
  diag = std::max(diag, std::fabs(c.A1.value / c.B1.value - 1.0));
  diag = std::max(diag, std::fabs(c.A3.value / c.B3.value - 1.0));
  diag = std::max(diag, std::fabs(c.A4.value / c.B4.value - 1.0));
  res.pass = hyper <= 1e-12 && diag <= 1e-9;
  res.detail = "hyperbola residual = " + fmt(hyper) +
               "; diagonal A/B asymmetry = " + fmt(diag);
  return res;
}

CheckResult check_A2_constant() {
  CheckResult res;
  res.name = "A2_bounds";
  const auto& prof = reference_profile_n5_diagonal();
  const auto params = SystemParams::make(5, 7.0 / 3.0, 8, 1.0, -1.0);
  CorrectionField phi0(5, params.gamma, 1e-7);
  std::vector<std::vector<double>> samples;
  for (double r : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    samples.push_back({r, 0.0, 0.0, 0.0, 0.0});
    const double c = r / std::sqrt(2.0);
    samples.push_back({c, 0.0, 0.0, 0.0, c});
  }
  const auto rep = verify_A2_bounds(prof, params, phi0, 1.0, samples);
  res.pass = rep.pass;
  res.detail = "constants across eps sweep: " + fmt(rep.constants.front()) +
               " .. " + fmt(rep.constants.back());
  return res;
}

CheckResult check_B1_B2(unsigned seed) {
  CheckResult res;
  res.name = "B1_B2";
  // B1: reported constant stable in k at alpha = tau
  const double tau = 2.0 / 3.0;
  double lo = 1e300, hi = 0;
  for (int k : {8, 16, 32, 64}) {
    PeakConfig cfg;
    cfg.N = 5;
    cfg.k = k;
    cfg.epsilon = epsilon_of_k(5, k);
    const auto samples = make_sample_points(cfg, seed, 24, 32);
    const double c = check_B1(cfg, tau, samples);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  const double b1_var = hi / lo - 1.0;
  // B2: constant bounded across a center-distance sweep
  double b2_max = 0;
  for (double d = 4.0; d <= 256.0; d *= 2.0) {
    std::vector<double> xi(5, 0.0), xj(5, 0.0);
    xj[0] = d;
    std::vector<std::vector<double>> samples;
    for (int i = 0; i <= 40; ++i) {
      std::vector<double> y(5, 0.0);
      y[0] = -d + 3.0 * d * double(i) / 40.0;
      samples.push_back(y);
    }
    b2_max = std::max(b2_max, check_B2(2.0, 2.0, 2.0, xi, xj, samples));
  }
  // The sharp constant sits at the midpoint between the centers and tends
  // to 2^{sigma-1} = 2 for sigma = 2; allow 5% slack on top.
  res.pass = b1_var <= 0.10 && b2_max <= 2.1;
  res.detail = "B1 k-variation = " + fmt(b1_var) +
               "; B2 sweep constant = " + fmt(b2_max);
  return res;
}

std::vector<CheckResult> run_verification(bool quick, unsigned seed) {
  std::vector<CheckResult> out;
  out.push_back(check_talenti_oracle());
  out.push_back(check_decay_constants());
  out.push_back(check_tail_remainders());
  out.push_back(check_interaction_rate(quick));
  out.push_back(check_lattice_asymptotics(quick));
  out.push_back(check_maximizer(seed));
  out.push_back(check_phi0(quick));
  out.push_back(check_B3_regimes());
  out.push_back(check_positivity());
  out.push_back(check_invariants());
  out.push_back(check_A2_constant());
  out.push_back(check_B1_B2(seed));
  return out;
}

std::string verification_json(const std::vector<CheckResult>& results,
                              unsigned seed) {
  std::ostringstream os;
  bool all = true;
  os << "{\n  \"seed\": " << seed << ",\n  \"checks\": [\n";
  for (size_t i = 0; i < results.size(); ++i) {
    all = all && results[i].pass;
    os << "    {\"name\": \"" << results[i].name << "\", \"pass\": "
       << (results[i].pass ? "true" : "false") << ", \"detail\": \""
       << results[i].detail << "\"}" << (i + 1 < results.size() ? "," : "")
       << "\n";
  }
  os << "  ],\n  \"all_pass\": " << (all ? "true" : "false") << "\n}\n";
  return os.str();
}

}  // namespace peaks
