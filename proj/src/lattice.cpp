#include "peaks/lattice.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <vector>

namespace peaks {

namespace {

constexpr double kPi = std::numbers::pi;

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0, c = 0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

PeakConfig PeakConfig::make(const SystemParams& params) {
  PeakConfig cfg;
  cfg.N = params.N;
  cfg.k = params.k;
  cfg.epsilon = params.epsilon;
  return cfg;
}

double PeakConfig::pair_distance(int i, int j) const {
  if (i < 1 || i > k || j < 1 || j > k)
    throw std::invalid_argument("pair_distance: peak label out of range");
  if (i == j) return 0.0;
  const int m = std::abs(i - j);
  return (2.0 / epsilon) * std::sin(m * kPi / k);
}

double zeta_real(double s) {
  if (s <= 1.0) throw std::invalid_argument("zeta_real requires s > 1");
  constexpr long long M = 1'000'000;
  Kahan acc;
  for (long long n = M; n >= 1; --n) acc.add(std::pow(double(n), -s));
  // Euler-Maclaurin tail at the cutoff.
  const double Md = double(M);
  double tail = std::pow(Md, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(Md, -s);
  tail += s / 12.0 * std::pow(Md, -s - 1.0);
  tail -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(Md, -s - 3.0);
  return acc.sum + tail;
}

double Q3_constant(int N) {
  if (N < 4) throw std::invalid_argument("Q3_constant requires N >= 4");
  return 2.0 * zeta_real(double(N - 2)) / std::pow(2.0 * kPi, double(N - 2));
}

double lattice_sum(const PeakConfig& config, double alpha) {
  Kahan acc;
  for (int j = config.k; j >= 2; --j)
    acc.add(std::pow(config.pair_distance(1, j), -alpha));
  return acc.sum;
}

double normalized_ring_sum(int k, double alpha) {
  Kahan acc;
  for (int j = k; j >= 2; --j)
    acc.add(std::pow(2.0 * std::sin((j - 1) * kPi / k), -alpha));
  return acc.sum * std::pow(double(k), -alpha);
}

namespace {

std::vector<int> k_ladder(int k_lo, int k_hi) {
  if (k_lo < 3 || k_hi <= k_lo)
    throw std::invalid_argument("k ladder requires 3 <= k_lo < k_hi");
  std::vector<int> ks;
  for (double k = k_lo; k <= double(k_hi) * 1.0001; k *= 1.5)
    ks.push_back(int(std::lround(k)));
  if (ks.back() != k_hi) ks.push_back(k_hi);
  return ks;
}

double interaction_sum(int N, double alpha, int k) {
  PeakConfig cfg;
  cfg.N = N;
  cfg.k = k;
  cfg.epsilon = epsilon_of_k(N, k);
  return lattice_sum(cfg, alpha);
}

}  // namespace

RegimeFit regime_exponent_check(int N, double alpha, int k_lo, int k_hi) {
  RegimeFit fit;
  fit.alpha = alpha;
  fit.log_corrected = alpha == 1.0;
  // epsilon k = k^{-1/(N-3)}, so the three regimes of the sum are
  //   alpha > 1 : (epsilon k)^alpha            -> exponent -alpha/(N-3)
  //   alpha = 1 :  epsilon k ln k              -> exponent -1/(N-3) (mod ln)
  //   alpha < 1 :  epsilon^alpha k             -> exponent 1 - alpha(N-2)/(N-3)
  if (alpha > 1.0)
    fit.expected_exponent = -alpha / double(N - 3);
  else if (alpha == 1.0)
    fit.expected_exponent = -1.0 / double(N - 3);
  else
    fit.expected_exponent = 1.0 - alpha * double(N - 2) / double(N - 3);

  const auto ks = k_ladder(k_lo, k_hi);
  std::vector<double> x, y;
  for (int k : ks) {
    double s = interaction_sum(N, alpha, k);
    if (fit.log_corrected) s /= std::log(double(k));
    x.push_back(std::log(double(k)));
    y.push_back(std::log(s));
  }
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.fitted_exponent = sxy / sxx;
  const double icpt = my - fit.fitted_exponent * mx;
  for (size_t i = 0; i < n; ++i) {
    const double res = y[i] - (icpt + fit.fitted_exponent * x[i]);
    fit.max_rel_residual =
        std::max(fit.max_rel_residual, std::fabs(res) / std::fabs(y[i]));
  }
  return fit;
}

void export_lattice_sweep(const std::string& path, int N, double alpha,
                          int k_lo, int k_hi) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  out << "k,sum,normalized,limit\n";
  const double limit =
      alpha > 1.0 ? 2.0 * zeta_real(alpha) / std::pow(2.0 * kPi, alpha) : 0.0;
  for (int k : k_ladder(k_lo, k_hi))
    out << k << ',' << interaction_sum(N, alpha, k) << ','
        << normalized_ring_sum(k, alpha) << ',' << limit << '\n';
}

}  // namespace peaks
