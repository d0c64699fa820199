// Deterministic adaptive quadrature shared by the energy and correction
// computations.  All routines use nested Gauss-Kronrod panels with a fixed
// depth-first bisection order, so identical inputs yield bit-identical
// results.
#pragma once

#include <functional>

#include "peaks/params.hpp"

namespace peaks {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  double truncation_radius = 100.0;
  bool analytic_tail = true;
};

// Surface measure of the unit sphere S^m, 2 pi^{(m+1)/2} / Gamma((m+1)/2).
double sphere_surface(int m);

// Adaptive Gauss7/Kronrod15 on [a, b].  Throws NumericError when the
// subdivision budget is exhausted before the tolerance is met.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol, double abs_tol, int max_subdivisions = 2000);

// Integral over [0, infinity) of f(r) r^{dim-1} dr.  The range is truncated
// at spec.truncation_radius and the remainder added analytically assuming
// f(r) ~ tail_coeff * r^{-tail_exp} beyond it.  A non-integrable tail
// (tail_exp <= dim with tail_coeff != 0) raises NumericError.
double radial_integral(const std::function<double(double)>& f, int dim,
                       const QuadratureSpec& spec, double tail_coeff = 0.0,
                       double tail_exp = 0.0);

// Integral over the half-space R^N_+ of f(|y|, |y - d e_1|) dy for two
// centers on the boundary hyperplane at separation d.  By reflection
// symmetry this is half the full-space bipolar integral, computed as an
// iterated 2-D quadrature in (axial coordinate, transverse radius).
double bipolar_halfspace_integral(
    const std::function<double(double, double)>& f, double d, int N,
    const QuadratureSpec& spec);

// Integral over theta in [0, pi] of (A - B cos theta)^{power} sin^{sin_pow}
// theta dtheta.  Requires A >= |B|; the near-coincidence regime A ~ B is
// integrable and resolved adaptively.
double angular_integral(double A, double B, double power, int sin_pow,
                        double rel_tol = 1e-10);

}  // namespace peaks
