// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Tolerances are pinned inside the individual checks.
#include <cstdio>
#include <utility>
#include <vector>

#include "peaks/verify.hpp"

int main() {
  using peaks::CheckResult;
  const unsigned seed = 20240817;
  std::vector<std::pair<const char*, CheckResult>> criteria;
  criteria.emplace_back("1 Talenti oracle", peaks::check_talenti_oracle());
  criteria.emplace_back("2 decay constants", peaks::check_decay_constants());
  criteria.emplace_back("3 tail remainders", peaks::check_tail_remainders());
  criteria.emplace_back("4 interaction rate",
                        peaks::check_interaction_rate(false));
  criteria.emplace_back("5 lattice asymptotics",
                        peaks::check_lattice_asymptotics(false));
  criteria.emplace_back("6 reduced-energy maximizer",
                        peaks::check_maximizer(seed));
  criteria.emplace_back("7 phi0 field", peaks::check_phi0(false));
  criteria.emplace_back("8 B3 regimes", peaks::check_B3_regimes());
  criteria.emplace_back("9 Q positivity", peaks::check_positivity());
  criteria.emplace_back("10 hyperbola and symmetry",
                        peaks::check_invariants());

  bool all = true;
  for (const auto& [label, result] : criteria) {
    all = all && result.pass;
    std::printf("criterion %s: %s  [%s]\n", label,
                result.pass ? "PASS" : "FAIL", result.detail.c_str());
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
