// The eight expansion constants of the single-peak energy and the assembled
// Q-coefficients of the reduced energy
//   I(PU,PV) = k ( Q0 - Q1 gamma Lambda eps - Q4 Lambda^{N-2} eps + o(eps) ).
#pragma once

#include <string>
#include <utility>

#include "peaks/ground_state.hpp"
#include "peaks/quadrature.hpp"

namespace peaks {

// A computed constant together with its propagated quadrature error
// estimate (requested relative tolerance times the value, combined
// linearly through the algebraic assembly).
struct ValErr {
  double value = 0;
  double error = 0;
};

struct EnergyConstants {
  ValErr A0, A1, A3, A4, B0, B1, B3, B4;
  ValErr Q0, Q1, Q2, Q3, Q4;
  // Q1 re-assembled term by term from the three energy pieces instead of
  // the collected formula; recorded for comparison.
  double Q1_termwise = 0;
  double quad_rel_tol = 0;

  std::string to_json_text() const;
};

// A0 = 1/2 w_{N-1} int V^{p+1} r^{N-1} dr, B0 likewise with U^{q+1}.
std::pair<ValErr, ValErr> compute_A0_B0(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec = {});

// A1 = 1/2 w_{N-2} int V^{p+1} r^N dr, B1 with U^{q+1}.  Requires
// (N-2)(p+1) > N+1, which holds under the admissibility window.
std::pair<ValErr, ValErr> compute_A1_B1(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec = {});

// A3 = (N-2)/2 w_{N-2} int U r^N (1+r^2)^{-N/2} dr, B3 with V.
std::pair<ValErr, ValErr> compute_A3_B3(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec = {});

// A4 = b * 1/2 w_{N-1} int V^p r^{N-1} dr, B4 = a * (same with U^q);
// the two-bubble separation limit fixes the tail-constant factor.
std::pair<ValErr, ValErr> compute_A4_B4(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec = {});

// (int_{R^N_+} V^p(y) V(y - d e1) dy, same with U^q, U) via the bipolar
// reduction.
std::pair<double, double> interaction_integral(const RadialProfile& profile,
                                               const SystemParams& params,
                                               double d,
                                               const QuadratureSpec& spec = {});

// Separation-limit check of A4: compares d^{N-2} * interaction_integral
// against A4 at the given d.  Deviation beyond 5% raises NumericError.
struct A4CrossCheck {
  double d = 0;
  double scaled_integral = 0;  // d^{N-2} * bipolar value
  double rel_dev = 0;
};
A4CrossCheck cross_validate_A4(const RadialProfile& profile,
                               const SystemParams& params, double A4,
                               double d = 80.0,
                               const QuadratureSpec& spec = {});

// Fills the Q-block from the eight constants and Q3.  Non-positive
// Q0/Q1/Q2/Q4 raises NumericError.
void assemble_Q(EnergyConstants& c, const SystemParams& params, ValErr Q3);

// Full pipeline: the eight constants, Q3 from the lattice module, and the
// assembled Q-block.
EnergyConstants compute_energy_constants(const RadialProfile& profile,
                                         const SystemParams& params,
                                         const QuadratureSpec& spec = {});

}  // namespace peaks
