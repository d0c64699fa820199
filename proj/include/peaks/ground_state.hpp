// Radial ground state of the limit system
//   U'' + (N-1)/r U' + V^p = 0,   V'' + (N-1)/r V' + U^q = 0,
// normalized by U(0) = 1, solved by shooting on beta = V(0) with bisection
// between the two positivity-loss events, plus extraction of the power-law
// tail constants a, b.
#pragma once

#include <string>
#include <vector>

#include "peaks/params.hpp"

namespace peaks {

enum class DecayRegime { fast, log, slow };

std::string to_string(DecayRegime r);
DecayRegime regime_from_string(const std::string& s);

// Regime from the sign of p - N/(N-2).
DecayRegime classify_regime(int N, double p);

struct RadialProfile {
  std::vector<double> r, U, V, dU, dV;
  double beta = 0;       // V(0)
  double tail_a = 0;     // Lemma-L1 constant for U
  double tail_b = 0;     // Lemma-L1 constant for V
  DecayRegime regime = DecayRegime::fast;
  double fit_lo = 0, fit_hi = 0;   // tail-fit window
  double fit_spread_a = 0, fit_spread_b = 0;  // relative spread of the fits
  int N = 0;
  double p = 0, q = 0;

  double r_max() const { return r.back(); }

  // Cubic Hermite interpolation on the grid; beyond the grid the fitted
  // power-law tail of the profile's regime is used.
  std::pair<double, double> evaluate(double rr) const;
  std::pair<double, double> evaluate_derivative(double rr) const;

  // Max scaled flux residual of both equations over interior cells.
  double ode_residual() const;

  void save_csv(const std::string& csv_path, const std::string& json_path) const;
  static RadialProfile load_csv(const std::string& csv_path,
                                const std::string& json_path);
};

enum class ShootClass { U_crossed_zero, V_crossed_zero, decayed, undecided };

struct ShootOutcome {
  ShootClass classification = ShootClass::undecided;
  double r_event = 0;
};

struct ShootOptions {
  double r_max = 200.0;
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  double decay_threshold = 1e-10;
  double beta_lo = 1e-3;
  double beta_hi = 1e3;
  int max_bisect = 200;
};

// Single shot from r = 0 with U(0) = 1, V(0) = beta.  Uses the regular
// series start near the origin and adaptive Dormand-Prince stepping.
ShootOutcome shoot(const SystemParams& params, double beta, double r_max,
                   double tol, const ShootOptions& opts = {});

// Bisection on beta between a U-crossing and a V-crossing shot.  tol is the
// width of the final beta bracket.
RadialProfile solve_ground_state(const SystemParams& params, double tol = 1e-12,
                                 const ShootOptions& opts = {});

// Fits (a, b) on the window [r_max/4, r_max/2] using the regime-matched
// weights of Lemma-L1 type and stores them on the profile.  Returns
// (a, b, regime).  A fit spread above 5% raises NumericError.
struct DecayConstants {
  double a = 0, b = 0;
  DecayRegime regime = DecayRegime::fast;
  double spread_a = 0, spread_b = 0;
};
DecayConstants extract_decay_constants(RadialProfile& profile);

// Windowed suprema of the tail remainders:
//   sup r^N |V - b r^{-(N-2)}|, sup r^{N+1} |V' + (N-2) b r^{-(N-1)}|,
// and the regime-matched U analogues.  Stabilization under window growth is
// the pass condition; a supremum that keeps growing when the window doubles
// marks the report failed.
struct TailBoundReport {
  double sup_V = 0, sup_dV = 0, sup_U = 0, sup_dU = 0;
  double growth_V = 0, growth_U = 0;  // sup(doubled window) / sup
  bool pass = false;
};
TailBoundReport verify_tail_bounds(const RadialProfile& profile);

}  // namespace peaks
