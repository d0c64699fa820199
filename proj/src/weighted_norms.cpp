#include "peaks/weighted_norms.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

namespace peaks {

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double weight_sum(const std::vector<double>& y, const PeakConfig& config,
                  double exponent) {
  double s = 0;
  for (int j = 1; j <= config.k; ++j)
    s += std::pow(1.0 + dist(y, peak_point(config, j)), -exponent);
  return s;
}

double sup_ratio(const SampledField& field, double exponent) {
  if (field.points.empty() || field.points.size() != field.values.size())
    throw std::invalid_argument("SampledField: bad sample set");
  double sup = 0;
  for (size_t i = 0; i < field.points.size(); ++i) {
    const double w = weight_sum(field.points[i], field.config, exponent);
    if (!std::isfinite(w) || w <= 0)
      throw NumericError("star_norm: non-finite weight");
    sup = std::max(sup, std::fabs(field.values[i]) / w);
  }
  return sup;
}

}  // namespace

std::vector<double> peak_point(const PeakConfig& config, int j) {
  if (j < 1 || j > config.k)
    throw std::invalid_argument("peak_point: label out of range");
  std::vector<double> x(config.N, 0.0);
  const double th = 2.0 * (j - 1) * M_PI / config.k;
  x[0] = std::cos(th) / config.epsilon;
  x[1] = std::sin(th) / config.epsilon;
  return x;
}

std::vector<std::vector<double>> make_sample_points(const PeakConfig& config,
                                                    unsigned seed, int per_peak,
                                                    int background) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> pts;
  auto direction = [&] {
    std::vector<double> d(config.N);
    double n = 0;
    do {
      n = 0;
      for (auto& c : d) {
        c = gauss(rng);
        n += c * c;
      }
    } while (n == 0);
    n = std::sqrt(n);
    for (auto& c : d) c /= n;
    return d;
  };
  for (int j = 1; j <= config.k; ++j) {
    const auto x = peak_point(config, j);
    for (int s = 0; s < per_peak; ++s) {
      // log-spaced shell radii in [0.25, 25]
      const double rad =
          0.25 * std::pow(100.0, double(s % 8) / 7.0);
      auto d = direction();
      std::vector<double> y(config.N);
      for (int c = 0; c < config.N; ++c) y[c] = x[c] + rad * d[c];
      pts.push_back(std::move(y));
    }
  }
  std::uniform_real_distribution<double> unif(-2.0 / config.epsilon,
                                              2.0 / config.epsilon);
  for (int s = 0; s < background; ++s) {
    std::vector<double> y(config.N);
    for (auto& c : y) c = unif(rng);
    pts.push_back(std::move(y));
  }
  return pts;
}

double star_norm(const SampledField& field, const SystemParams& params) {
  const double e = field.u_type
                       ? double(params.N) / (params.q + 1.0) + params.tau
                       : double(params.N) / (params.p + 1.0) + params.tau;
  return sup_ratio(field, e);
}

double star_star_norm(const SampledField& field, const SystemParams& params) {
  const double e = field.u_type
                       ? double(params.N) / (params.q + 1.0) + params.tau
                       : double(params.N) / (params.p + 1.0) + params.tau;
  return sup_ratio(field, e + 2.0);
}

double check_B1(const PeakConfig& config, double alpha,
                const std::vector<std::vector<double>>& samples) {
  if (!(alpha > 0)) throw std::invalid_argument("check_B1: alpha <= 0");
  const double denom = 1.0 + lattice_sum(config, alpha);
  double sup = 0;
  for (const auto& y : samples)
    sup = std::max(sup, weight_sum(y, config, alpha) / denom);
  return sup;
}

double check_B2(double alpha, double beta, double sigma,
                const std::vector<double>& x_i, const std::vector<double>& x_j,
                const std::vector<std::vector<double>>& samples) {
  if (!(alpha > 1.0 && beta > 1.0))
    throw std::invalid_argument("check_B2: need alpha, beta > 1");
  if (sigma < 0 || sigma > std::min(alpha, beta))
    throw std::invalid_argument("check_B2: sigma outside [0, min(alpha,beta)]");
  const double dij = dist(x_i, x_j);
  if (dij == 0) throw std::invalid_argument("check_B2: coincident centers");
  double sup = 0;
  for (const auto& y : samples) {
    const double di = 1.0 + dist(y, x_i);
    const double dj = 1.0 + dist(y, x_j);
    const double lhs = std::pow(di, -alpha) * std::pow(dj, -beta);
    const double rhs = std::pow(dij, -sigma) *
                       (std::pow(di, -(alpha + beta - sigma)) +
                        std::pow(dj, -(alpha + beta - sigma)));
    sup = std::max(sup, lhs / rhs);
  }
  return sup;
}

double b3_convolution(int N, double sigma, double y_mag,
                      const QuadratureSpec& spec) {
  if (N < 3) throw std::invalid_argument("b3_convolution: N < 3");
  if (!(sigma > 0) || sigma == double(N - 2))
    throw std::invalid_argument("b3_convolution: bad sigma");
  auto shell = [&](double rho) {
    // integral of |y - z|^{2-N} over the sphere |z| = rho
    const double A = y_mag * y_mag + rho * rho;
    const double B = 2.0 * y_mag * rho;
    return sphere_surface(N - 2) *
           angular_integral(A, B, 0.5 * (2.0 - N), N - 2, spec.rel_tol);
  };
  auto f = [&](double rho) {
    return shell(rho) * std::pow(rho, double(N - 1)) *
           std::pow(1.0 + rho, -2.0 - sigma);
  };
  const double R = std::max(100.0, 10.0 * y_mag);
  double val = integrate_1d(f, 0.0, std::min(1.0, R), spec.rel_tol,
                            spec.abs_tol, spec.max_subdivisions);
  if (R > 1.0) {
    const double m = std::max(1.0, y_mag);
    val += integrate_1d(f, 1.0, std::min(2.0 * m, R), spec.rel_tol,
                        spec.abs_tol, spec.max_subdivisions);
    if (R > 2.0 * m)
      val += integrate_1d(f, 2.0 * m, R, spec.rel_tol, spec.abs_tol,
                          spec.max_subdivisions);
  }
  // Beyond R the shell integral is exactly Newtonian (the point y lies
  // inside the shell): omega_{N-1} rho^{2-N}.  The remaining
  // int_R^inf rho (1+rho)^{-2-sigma} drho has a closed form.
  const double T = 1.0 + R;
  val += sphere_surface(N - 1) * (std::pow(T, -sigma) / sigma -
                                  std::pow(T, -1.0 - sigma) / (1.0 + sigma));
  return val;
}

B3Report check_B3(int N, double sigma, const std::vector<double>& y_mags,
                  const QuadratureSpec& spec) {
  if (y_mags.size() < 2) throw std::invalid_argument("check_B3: short sweep");
  B3Report rep;
  rep.y_mags = y_mags;
  rep.expected_exponent = std::min(sigma, double(N - 2));
  for (double ym : y_mags) {
    const double v = b3_convolution(N, sigma, ym, spec);
    rep.values.push_back(v);
    rep.sup_scaled = std::max(
        rep.sup_scaled, v * std::pow(1.0 + ym, rep.expected_exponent));
  }
  // least-squares slope of log value vs log |y|
  const size_t n = y_mags.size();
  double mx = 0, my = 0;
  std::vector<double> lx(n), ly(n);
  for (size_t i = 0; i < n; ++i) {
    lx[i] = std::log(y_mags[i]);
    ly[i] = std::log(rep.values[i]);
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
  rep.fitted_exponent = -sxy / sxx;
  return rep;
}

void append_check_csv(const std::string& path, const std::string& name,
                      const std::string& param_desc, double constant,
                      bool pass) {
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  if (fresh) out << "check,params,constant,pass\n";
  out << name << ',' << param_desc << ',' << constant << ','
      << (pass ? 1 : 0) << '\n';
}

}  // namespace peaks
