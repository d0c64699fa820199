// Aggregate verification suite: one function per acceptance-style check,
// shared between the CLI `verify` subcommand and the acceptance binary.
// Tolerances are pinned here, next to each check.
#pragma once

#include <string>
#include <vector>

#include "peaks/ground_state.hpp"

namespace peaks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Shared, lazily solved reference profiles (expensive to compute).
const RadialProfile& reference_profile_n6_diagonal();
const RadialProfile& reference_profile_n5_diagonal();
const RadialProfile& reference_profile_n5_offdiagonal();  // p = 2.2

CheckResult check_talenti_oracle();                 // closed-form profiles
CheckResult check_decay_constants();                // tail constants a, b
CheckResult check_tail_remainders();                // windowed L2 suprema
CheckResult check_interaction_rate(bool quick);     // two-bubble d-sweep
CheckResult check_lattice_asymptotics(bool quick);  // Q3 limit + ln k case
CheckResult check_maximizer(unsigned seed);         // closed form vs search
CheckResult check_phi0(bool quick);                 // flux residual + decay
CheckResult check_B3_regimes();                     // convolution exponents
CheckResult check_positivity();                     // Q coefficients > 0
CheckResult check_invariants();                     // hyperbola + diagonal
// Additional property checks run by the CLI verify suite.
CheckResult check_A2_constant();
CheckResult check_B1_B2(unsigned seed);

std::vector<CheckResult> run_verification(bool quick, unsigned seed);
std::string verification_json(const std::vector<CheckResult>& results,
                              unsigned seed);

}  // namespace peaks
