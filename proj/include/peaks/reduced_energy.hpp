// Leading-order reduced energy
//   F(Lambda) = k ( Q0 - Q1 gamma Lambda eps - Q4 Lambda^{N-2} eps )
// and its maximization over the concentration parameter.
#pragma once

#include <functional>
#include <string>

#include "peaks/params.hpp"

namespace peaks {

struct ReducedEnergyModel {
  double Q0 = 0, Q1 = 0, Q4 = 0;
  double gamma = -1.0;  // must be negative for an interior maximum
  double epsilon = 1.0;
  int k = 1;
  int N = 5;
  double delta = 0.01;
  // optional o(eps) perturbation: F gets + k * perturbation(Lambda)
  std::function<double(double)> perturbation;

  static ReducedEnergyModel make(double Q0, double Q1, double Q4,
                                 const SystemParams& params);
};

double F_leading(const ReducedEnergyModel& m, double Lambda);
double dF_leading(const ReducedEnergyModel& m, double Lambda);
double d2F_leading(const ReducedEnergyModel& m, double Lambda);

// Closed-form interior maximizer (-Q1 gamma / (Q4 (N-2)))^{1/(N-3)}.
// gamma >= 0 is a hard error.
double lambda_star(const ReducedEnergyModel& m);

// Golden-section maximization on [lo, hi].  A bracket on which F is
// monotone, or a degenerate bracket, raises std::invalid_argument.
double maximize_numeric(const ReducedEnergyModel& m, double lo, double hi,
                        double tol = 1e-10);

// delta < lambda_star < 1/delta.
bool existence_window(const ReducedEnergyModel& m);

// "Lambda,F" curve on a uniform grid over (delta, 1/delta).
void export_curve_csv(const ReducedEnergyModel& m, const std::string& path,
                      int n_points = 400);

std::string reduce_report_json(const ReducedEnergyModel& m);

}  // namespace peaks
