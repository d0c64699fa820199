#include "peaks/bubble_field.hpp"

#include <cmath>

#include "peaks/quadrature.hpp"

namespace peaks {

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("point dimensions disagree");
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

std::pair<double, double> Bubble::eval(const std::vector<double>& y) const {
  if (profile == nullptr) throw std::invalid_argument("Bubble: no profile");
  if (!(lambda > 0)) throw std::invalid_argument("Bubble: lambda <= 0");
  const double r = lambda * dist(y, center);
  const auto [U, V] = profile->evaluate(r);
  const double Np = double(profile->N);
  return {std::pow(lambda, Np / (profile->q + 1.0)) * U,
          std::pow(lambda, Np / (profile->p + 1.0)) * V};
}

CorrectionField::CorrectionField(int N, double gamma, double quadrature_tol)
    : N_(N), gamma_(gamma), tol_(quadrature_tol) {
  if (N < 5) throw std::invalid_argument("CorrectionField: need N >= 5");
  if (!(quadrature_tol > 0))
    throw std::invalid_argument("CorrectionField: tol <= 0");
  // kappa(u) = int_0^pi (1 - u cos t)^{(2-N)/2} sin^{N-3} t dt tabulated on
  // a uniform grid in v = -ln(1-u); kappa grows only linearly in v, so the
  // stretched grid resolves the u -> 1 kernel blow-up.
  dv_ = 0.02;
  v_max_ = 30.0;
  const int n = int(v_max_ / dv_) + 1;
  table_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double u = 1.0 - std::exp(-i * dv_);
    table_[i] = angular_integral(1.0, u, 0.5 * (2.0 - N), N - 3, 1e-10);
  }
}

double CorrectionField::flux(double rho) const {
  return -0.5 * double(N_ - 2) * gamma_ * rho * rho *
         std::pow(1.0 + rho * rho, -0.5 * N_);
}

double CorrectionField::kappa_cached(double u) const {
  const double v = std::min(-std::log1p(-u), v_max_);
  const double x = v / dv_;
  const int n = int(table_.size());
  int i = std::min(int(x), n - 2);
  const double t = x - i;
  if (i < 1 || i > n - 3)  // linear at the grid ends
    return table_[i] * (1.0 - t) + table_[i + 1] * t;
  // Catmull-Rom through the four surrounding nodes.
  const double m0 = 0.5 * (table_[i + 1] - table_[i - 1]);
  const double m1 = 0.5 * (table_[i + 2] - table_[i]);
  const double d = table_[i + 1] - table_[i];
  return table_[i] + t * (m0 + t * ((3.0 * d - 2.0 * m0 - m1) +
                                    t * (m0 + m1 - 2.0 * d)));
}

double CorrectionField::eval_impl(double r_prime, double y_n, bool cached,
                                  double tol) const {
  if (y_n < 0) throw std::invalid_argument("phi0: need y_n >= 0");
  if (gamma_ == 0.0) return 0.0;
  const int N = N_;
  const double wl = sphere_surface(N - 3);  // layer-sphere surface S^{N-3}
  const double norm = -2.0 / (double(N - 2) * sphere_surface(N - 1));
  const double y2 = r_prime * r_prime + y_n * y_n;
  auto integrand = [&](double rho) {
    const double A = y2 + rho * rho;
    const double B = 2.0 * r_prime * rho;
    double kap;
    if (cached)
      kap = kappa_cached(std::min(B / A, 1.0));
    else
      kap = angular_integral(A, B, 0.5 * (2.0 - N), N - 3, 0.1 * tol);
    // the exact angular integral already carries the A-scaling
    const double kernel =
        cached ? std::pow(A, 0.5 * (2.0 - N)) * kap : kap;
    return flux(rho) * std::pow(rho, N - 2) * kernel;
  };
  // The kernel concentrates where rho ~ |y|; the flux lives on rho = O(1).
  const double R = std::max(200.0, 20.0 * std::sqrt(y2));
  const double s1 = std::min(std::max(1.0, r_prime), R);
  double val = integrate_1d(integrand, 0.0, s1, tol, 1e-300, 4000);
  if (R > s1) val += integrate_1d(integrand, s1, R, tol, 1e-300, 4000);
  // analytic power-law tail of the rho-integrand, ~ c rho^{2-N}
  const double c_tail = -0.5 * double(N - 2) * gamma_ * sphere_surface(N - 2) /
                        wl;
  val += c_tail * std::pow(R, 3 - N) / double(N - 3);
  return norm * wl * val;
}

double CorrectionField::eval(double r_prime, double y_n) const {
  return eval_impl(r_prime, y_n, true, tol_);
}

double CorrectionField::eval_exact(double r_prime, double y_n) const {
  return eval_impl(r_prime, y_n, false, std::min(tol_, 1e-9));
}

double CorrectionField::eval(const std::vector<double>& y) const {
  if (int(y.size()) != N_)
    throw std::invalid_argument("phi0: dimension mismatch");
  double rp2 = 0;
  for (int i = 0; i + 1 < N_; ++i) rp2 += y[i] * y[i];
  return eval(std::sqrt(rp2), y.back());
}

std::pair<double, double> projected_bubble_approx(
    const RadialProfile& profile, const SystemParams& params,
    const CorrectionField& phi0, double Lambda, const std::vector<double>& x_j,
    const std::vector<double>& y) {
  if (!(Lambda > params.delta && Lambda < 1.0 / params.delta))
    throw std::invalid_argument("Lambda outside the concentration window");
  // scaling exponent identity from the hyperbola
  const double Np = double(params.N);
  const double su = Np / (params.q + 1.0), sv = Np / (params.p + 1.0);
  if (std::fabs(su + sv - double(params.N - 2)) > 1e-10)
    throw std::invalid_argument("hyperbola identity violated");

  Bubble b{&profile, 1.0 / Lambda, x_j};
  auto [U, V] = b.eval(y);
  std::vector<double> z(y.size());
  for (size_t i = 0; i < y.size(); ++i) z[i] = (y[i] - x_j[i]) / Lambda;
  const double phi = phi0.eval(z);
  U -= params.epsilon * std::pow(Lambda, 1.0 - su) * phi;
  V -= params.epsilon * std::pow(Lambda, 1.0 - sv) * phi;
  return {U, V};
}

A2Report verify_A2_bounds(const RadialProfile& /*profile*/,
                          const SystemParams& params,
                          const CorrectionField& phi0, double Lambda,
                          const std::vector<std::vector<double>>& samples,
                          std::vector<double> epsilons) {
  if (samples.empty()) throw std::invalid_argument("A2: empty sample set");
  const int N = params.N;
  const int m = N == 5 ? 1 : 0;
  const double su = double(N) / (params.q + 1.0);
  // |correction| (1+|y-x_j|)^{N-3} with x_j = 0, before the eps factors
  double sup = 0;
  for (const auto& y : samples) {
    double r = 0;
    for (double c : y) r += c * c;
    r = std::sqrt(r);
    std::vector<double> z(y.size());
    for (size_t i = 0; i < y.size(); ++i) z[i] = y[i] / Lambda;
    const double corr =
        std::pow(Lambda, 1.0 - su) * std::fabs(phi0.eval(z));
    sup = std::max(sup, corr * std::pow(1.0 + r, double(N - 3)));
  }
  A2Report rep;
  rep.epsilons = std::move(epsilons);
  for (double eps : rep.epsilons)
    rep.constants.push_back(sup / std::pow(std::fabs(std::log(eps)), m));
  // Bounded means no growth as eps shrinks along the sweep; the log-divided
  // constants may legitimately decrease when the log factor is slack.
  double hi = 0;
  for (double c : rep.constants) hi = std::max(hi, c);
  rep.pass = hi <= 1.5 * rep.constants.front();
  return rep;
}

}  // namespace peaks
