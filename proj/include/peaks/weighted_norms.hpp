// Peak-adapted weighted sup-norms and numeric harnesses for the three
// basic estimates (sum bound, product splitting, convolution decay) used
// throughout the reduction argument.
#pragma once

#include <string>
#include <vector>

#include "peaks/lattice.hpp"
#include "peaks/quadrature.hpp"

namespace peaks {

// Coordinates of peak j (1-based) in R^N: the circle of radius 1/epsilon
// in the first two coordinates.
std::vector<double> peak_point(const PeakConfig& config, int j);

struct SampledField {
  std::vector<std::vector<double>> points;
  std::vector<double> values;
  PeakConfig config;
  bool u_type = true;  // selects exponent N/(q+1)+tau vs N/(p+1)+tau
};

// Deterministic sample set: log-spaced shells of random directions around
// every peak plus a coarse background grid, reproducible from the seed.
std::vector<std::vector<double>> make_sample_points(const PeakConfig& config,
                                                    unsigned seed,
                                                    int per_peak = 48,
                                                    int background = 64);

// sup_y |u(y)| / sum_j (1+|y-x_j|)^{-e} with e = N/(q+1)+tau (u-type) or
// N/(p+1)+tau (v-type); the **-variant adds 2 to the exponent.
double star_norm(const SampledField& field, const SystemParams& params);
double star_star_norm(const SampledField& field, const SystemParams& params);

// max_y [ sum_j (1+|y-x_j|)^{-alpha} ] / [ 1 + sum_{j>=2} |x_1-x_j|^{-alpha} ].
// Stable under k-doubling when the sum bound holds uniformly.
double check_B1(const PeakConfig& config, double alpha,
                const std::vector<std::vector<double>>& samples);

// max_y of LHS/RHS (with C = 1) of the product-splitting inequality
//   (1+|y-x_i|)^{-a}(1+|y-x_j|)^{-b} <=
//     C |x_i-x_j|^{-s} [ (1+|y-x_i|)^{-(a+b-s)} + (1+|y-x_j|)^{-(a+b-s)} ].
double check_B2(double alpha, double beta, double sigma,
                const std::vector<double>& x_i, const std::vector<double>& x_j,
                const std::vector<std::vector<double>>& samples);

// Convolution int |y-z|^{2-N} (1+|z|)^{-2-sigma} dz by reduction to a
// (radius, angle) quadrature, evaluated on a sweep of |y| values.
struct B3Report {
  std::vector<double> y_mags;
  std::vector<double> values;
  double fitted_exponent = 0;   // log-log decay slope over the sweep
  double expected_exponent = 0; // min(sigma, N-2)
  double sup_scaled = 0;        // sup value * (1+|y|)^{expected}
};
B3Report check_B3(int N, double sigma, const std::vector<double>& y_mags,
                  const QuadratureSpec& spec = {});

// Single-point evaluation of the B3 convolution.
double b3_convolution(int N, double sigma, double y_mag,
                      const QuadratureSpec& spec = {});

// Appends "name,params,constant,pass" to a CSV report (creates with header
// when missing).
void append_check_csv(const std::string& path, const std::string& name,
                      const std::string& param_desc, double constant,
                      bool pass);

}  // namespace peaks
