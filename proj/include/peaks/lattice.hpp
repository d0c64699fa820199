// Circular peak configurations and the interaction sums over them.  The k
// peaks sit equally spaced on a boundary circle of radius 1/epsilon in the
// blown-up variables, so every pairwise distance is a chord
//   |x_i - x_j| = (2/epsilon) sin(|i - j| pi / k).
#pragma once

#include <string>
#include <vector>

#include "peaks/params.hpp"

namespace peaks {

struct PeakConfig {
  int N = 0;
  int k = 1;
  double epsilon = 1.0;

  static PeakConfig make(const SystemParams& params);

  // Chord distance between peaks i and j (1-based labels).
  double pair_distance(int i, int j) const;
};

// Riemann zeta for real s > 1: direct summation to the cutoff plus an
// Euler-Maclaurin tail.
double zeta_real(double s);

// 2 zeta(N-2) / (2 pi)^{N-2}, the k -> infinity limit of the normalized
// ring sum below.
double Q3_constant(int N);

// sum_{j=2}^{k} |x_1 - x_j|^{-alpha} with compensated accumulation.
double lattice_sum(const PeakConfig& config, double alpha);

// k^{-alpha} sum_{j=2}^{k} (2 sin((j-1) pi / k))^{-alpha}; converges to
// 2 zeta(alpha) / (2 pi)^alpha as k grows (alpha > 1).
double normalized_ring_sum(int k, double alpha);

// Growth-rate check of the interaction sum against its three asymptotic
// regimes in alpha.  Fits the exponent of k on a geometric ladder of peak
// counts; for alpha = 1 the ln k factor is divided out before fitting.
struct RegimeFit {
  double alpha = 0;
  double fitted_exponent = 0;
  double expected_exponent = 0;
  bool log_corrected = false;
  double max_rel_residual = 0;  // of the log-log linear fit
};
RegimeFit regime_exponent_check(int N, double alpha, int k_lo, int k_hi);

// Writes "k,sum,normalized,limit" rows for k on the geometric ladder
// between k_lo and k_hi.
void export_lattice_sweep(const std::string& path, int N, double alpha,
                          int k_lo, int k_hi);

}  // namespace peaks
