#include "peaks/reduced_energy.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace peaks {

ReducedEnergyModel ReducedEnergyModel::make(double Q0, double Q1, double Q4,
                                            const SystemParams& params) {
  if (!(Q0 > 0 && Q1 > 0 && Q4 > 0))
    throw std::invalid_argument("ReducedEnergyModel: Q coefficients must be > 0");
  ReducedEnergyModel m;
  m.Q0 = Q0;
  m.Q1 = Q1;
  m.Q4 = Q4;
  m.gamma = params.gamma;
  m.epsilon = params.epsilon;
  m.k = params.k;
  m.N = params.N;
  m.delta = params.delta;
  return m;
}

double F_leading(const ReducedEnergyModel& m, double Lambda) {
  if (!(Lambda > 0)) throw std::invalid_argument("F_leading: Lambda <= 0");
  double f = m.Q0 - m.Q1 * m.gamma * Lambda * m.epsilon -
             m.Q4 * std::pow(Lambda, double(m.N - 2)) * m.epsilon;
  if (m.perturbation) f += m.perturbation(Lambda);
  return double(m.k) * f;
}

double dF_leading(const ReducedEnergyModel& m, double Lambda) {
  return double(m.k) * m.epsilon *
         (-m.Q1 * m.gamma -
          m.Q4 * double(m.N - 2) * std::pow(Lambda, double(m.N - 3)));
}

double d2F_leading(const ReducedEnergyModel& m, double Lambda) {
  return -double(m.k) * m.epsilon * m.Q4 * double(m.N - 2) *
         double(m.N - 3) * std::pow(Lambda, double(m.N - 4));
}

double lambda_star(const ReducedEnergyModel& m) {
  if (m.gamma >= 0)
    throw std::invalid_argument(
        "lambda_star: gamma >= 0 gives no interior maximum");
  return std::pow(-m.Q1 * m.gamma / (m.Q4 * double(m.N - 2)),
                  1.0 / double(m.N - 3));
}

double maximize_numeric(const ReducedEnergyModel& m, double lo, double hi,
                        double tol) {
  if (!(lo > 0) || !(hi > lo))
    throw std::invalid_argument("maximize_numeric: degenerate bracket");
  if (!(tol > 0)) throw std::invalid_argument("maximize_numeric: tol <= 0");
  // Coarse geometric scan: an interior maximum needs F to rise then fall,
  // and a wide bracket may hold the peak far from the midpoint.
  constexpr int kScan = 64;
  int best = 0;
  double fbest = -std::numeric_limits<double>::infinity();
  const double ratio = hi / lo;
  for (int i = 0; i <= kScan; ++i) {
    const double t = lo * std::pow(ratio, double(i) / kScan);
    const double ft = F_leading(m, t);
    if (ft > fbest) {
      fbest = ft;
      best = i;
    }
  }
  if (best == 0 || best == kScan)
    throw std::invalid_argument(
        "maximize_numeric: no interior maximum in the bracket");
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo * std::pow(ratio, double(best - 1) / kScan);
  double b = lo * std::pow(ratio, double(best + 1) / kScan);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = F_leading(m, x1), f2 = F_leading(m, x2);
  // Stop the golden section before F becomes flat to rounding; a parabolic
  // fit through three spaced points recovers the vertex below that scale.
  const double stop = std::max(tol, 1e-5);
  while (b - a > stop * std::max(1.0, a)) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = F_leading(m, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = F_leading(m, x1);
    }
  }
  double x = 0.5 * (a + b);
  if (tol < stop) {
    const double s = b - a;
    const double fm = F_leading(m, x - s), f0 = F_leading(m, x),
                 fp = F_leading(m, x + s);
    const double den = fm - 2.0 * f0 + fp;
    if (den < 0) {
      double v = x + 0.5 * s * (fm - fp) / den;
      x = std::min(std::max(v, a - s), b + s);
    }
  }
  return x;
}

bool existence_window(const ReducedEnergyModel& m) {
  const double ls = lambda_star(m);
  return m.delta < ls && ls < 1.0 / m.delta;
}

void export_curve_csv(const ReducedEnergyModel& m, const std::string& path,
                      int n_points) {
  if (n_points < 2) throw std::invalid_argument("export_curve_csv: n_points");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  out << "Lambda,F\n";
  const double lo = m.delta, hi = 1.0 / m.delta;
  for (int i = 0; i <= n_points; ++i) {
    const double L = lo + (hi - lo) * double(i) / double(n_points);
    out << L << ',' << F_leading(m, L) << '\n';
  }
}

std::string reduce_report_json(const ReducedEnergyModel& m) {
  const double ls = lambda_star(m);
  std::ostringstream os;
  os.precision(17);
  os << "{\n  \"lambda_star\": " << ls
     << ",\n  \"F_at_max\": " << F_leading(m, ls)
     << ",\n  \"window_ok\": " << (existence_window(m) ? "true" : "false")
     << ",\n  \"delta\": " << m.delta << ",\n  \"k\": " << m.k
     << ",\n  \"epsilon\": " << m.epsilon << "\n}\n";
  return os.str();
}

}  // namespace peaks
