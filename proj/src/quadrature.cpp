#include "peaks/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace peaks {
namespace {

// Gauss 7 / Kronrod 15 on [-1, 1].  Nodes are symmetric; only the
// nonnegative half is tabulated.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// Gauss weights for the embedded rule (nodes 1, 3, 5, 7 above).
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double kronrod;
  double err;     // |K15 - G7|
  double resabs;  // sum of |f| * weight, for round-off floors
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k = 0.0, g = 0.0, ab = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = h * kKronrodNodes[i];
    if (i == 7) {
      const double v = f(c);
      k += kKronrodWeights[i] * v;
      g += kGaussWeights[3] * v;
      ab += kKronrodWeights[i] * std::fabs(v);
    } else {
      const double vl = f(c - x), vr = f(c + x);
      k += kKronrodWeights[i] * (vl + vr);
      if (i % 2 == 1) g += kGaussWeights[i / 2] * (vl + vr);
      ab += kKronrodWeights[i] * (std::fabs(vl) + std::fabs(vr));
    }
  }
  return {a, b, k * h, std::fabs((k - g) * h), ab * h};
}

}  // namespace

double sphere_surface(int m) {
  if (m < 0) throw std::invalid_argument("sphere_surface: need m >= 0");
  const double s = 0.5 * double(m + 1);
  return 2.0 * std::pow(M_PI, s) / std::tgamma(s);
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol, double abs_tol, int max_subdivisions) {
  if (!(b > a)) return 0.0;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  // Worst-panel-first refinement: keep a heap keyed on the local error and
  // split the dominant panel until the global error meets the tolerance.
  auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::vector<Panel> heap;      // splittable panels
  std::vector<Panel> stuck;     // panels at machine width; never resplit
  heap.push_back(gk15(f, a, b));
  double total = heap[0].kronrod, total_err = heap[0].err,
         total_abs = heap[0].resabs;
  auto tol_of = [&] {
    // 50*eps*resabs is the round-off floor: below it the G7/K15 discrepancy
    // is arithmetic noise, not discretisation error.
    return std::max({abs_tol, rel_tol * std::fabs(total),
                     50.0 * kEps * total_abs});
  };
  for (int splits = 0; splits < max_subdivisions; ++splits) {
    if (total_err <= tol_of() || heap.empty()) break;
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Panel p = heap.back();
    heap.pop_back();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) {  // width at machine precision
      stuck.push_back(p);
      continue;
    }
    const Panel l = gk15(f, p.a, m), r = gk15(f, m, p.b);
    total += l.kronrod + r.kronrod - p.kronrod;
    total_err += l.err + r.err - p.err;
    total_abs += l.resabs + r.resabs - p.resabs;
    heap.push_back(l);
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(r);
    std::push_heap(heap.begin(), heap.end(), worse);
  }
  if (total_err > 10.0 * tol_of())
    throw NumericError("integrate_1d: tolerance not reached (residual " +
                       std::to_string(total_err) + ")");
  // Recompute the sum in panel order to shed heap-update cancellation noise.
  double value = 0.0, comp = 0.0;
  for (const auto* v : {&heap, &stuck})
    for (const Panel& p : *v) {
      const double y = p.kronrod - comp;
      const double t = value + y;
      comp = (t - value) - y;
      value = t;
    }
  return value;
}

double radial_integral(const std::function<double(double)>& f, int dim,
                       const QuadratureSpec& spec, double tail_coeff,
                       double tail_exp) {
  if (dim < 1) throw std::invalid_argument("radial_integral: need dim >= 1");
  const double R = spec.truncation_radius;
  double tail = 0.0;
  if (spec.analytic_tail && tail_coeff != 0.0) {
    if (tail_exp <= double(dim))
      throw NumericError("radial_integral: non-integrable tail (exponent " +
                         std::to_string(tail_exp) + " <= dim " +
                         std::to_string(dim) + ")");
    tail = tail_coeff * std::pow(R, double(dim) - tail_exp) / (tail_exp - dim);
  }
  auto g = [&](double r) { return f(r) * std::pow(r, dim - 1); };
  // Split at r = 1 so the adaptive rule resolves the short scale separately
  // from the long power-law range.
  const double split = std::min(1.0, R);
  double value = integrate_1d(g, 0.0, split, spec.rel_tol, spec.abs_tol,
                              spec.max_subdivisions);
  if (R > split)
    value += integrate_1d(g, split, R, spec.rel_tol, spec.abs_tol,
                          spec.max_subdivisions);
  return value + tail;
}

double bipolar_halfspace_integral(
    const std::function<double(double, double)>& f, double d, int N,
    const QuadratureSpec& spec) {
  if (N < 3) throw std::invalid_argument("bipolar: need N >= 3");
  if (d < 0) throw std::invalid_argument("bipolar: need d >= 0");
  const double R = spec.truncation_radius;
  const double wt = sphere_surface(N - 2);
  const int tdim = N - 1;
  auto inner = [&](double s) {
    const double s2 = s * s;
    const double sd2 = (s - d) * (s - d);
    auto g = [&](double t) {
      return f(std::sqrt(s2 + t * t), std::sqrt(sd2 + t * t)) *
             std::pow(t, tdim - 1);
    };
    return integrate_1d(g, 0.0, R, 0.1 * spec.rel_tol, spec.abs_tol,
                        spec.max_subdivisions);
  };
  // The axial integrand peaks at the two centers; integrate each side
  // separately for a stable subdivision pattern.
  const double mid = 0.5 * d;
  double value =
      integrate_1d(inner, -R, mid, spec.rel_tol, spec.abs_tol,
                   spec.max_subdivisions) +
      integrate_1d(inner, mid, d + R, spec.rel_tol, spec.abs_tol,
                   spec.max_subdivisions);
  return 0.5 * wt * value;
}

double angular_integral(double A, double B, double power, int sin_pow,
                        double rel_tol) {
  if (A <= 0 || B < 0 || B > A * (1.0 + 1e-12))
    throw std::invalid_argument("angular_integral: need A >= B >= 0, A > 0");
  B = std::min(B, A * (1.0 - 1e-13));
  // A - B cos t = (A - B) + 2 B sin^2(t/2): avoids the catastrophic
  // cancellation near t = 0 when B is close to A.
  const double gap = A - B;
  auto g = [&](double th) {
    const double s = std::sin(0.5 * th);
    return std::pow(gap + 2.0 * B * s * s, power) *
           std::pow(std::sin(th), sin_pow);
  };
  return integrate_1d(g, 0.0, M_PI, rel_tol, 1e-300, 4000);
}

}  // namespace peaks
