// Scalar parameters of the boundary-peak construction: the critical
// exponent hyperbola, the admissible exponent window, and the scaling
// relation between the peak count k and the concentration scale epsilon.
#pragma once

#include <stdexcept>
#include <string>

namespace peaks {

// Thrown when a numerical procedure (quadrature, ODE solve, fit) fails to
// reach its requested tolerance.  Precondition violations use
// std::invalid_argument instead.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Returns q such that 1/(p+1) + 1/(q+1) = (N-2)/N.
// Rejects p for which the conjugate exponent would be non-positive.
double critical_q(int N, double p);

// Admissibility window for p.  For N = 5 this is (2, 7/3]; for N >= 6 it is
// ((N+tau)/(N-2), (N+2)/(N-2)] with tau = (N-3)/(N-2).
bool check_condition_A(int N, double p);

// epsilon = k^{-(N-2)/(N-3)}.
double epsilon_of_k(int N, int k);

struct SystemParams {
  int N = 0;
  double p = 0;
  double q = 0;       // derived from p via the hyperbola
  double tau = 0;     // (N-3)/(N-2)
  double mu = 1.0;
  double gamma = -1.0;  // constant mean curvature along the peak circle
  int k = 1;
  double epsilon = 1.0;  // k^{-(N-2)/(N-3)}
  double delta = 0.01;   // concentration window bound

  // Validates inputs and derives q, tau, epsilon.  Throws
  // std::invalid_argument on violated preconditions.
  static SystemParams make(int N, double p, int k, double mu, double gamma,
                           double delta = 0.01);

  // Parses {"N","p","k","mu","gamma","delta"} from a JSON document.
  // q, tau, epsilon are always derived, never read.
  static SystemParams from_json_text(const std::string& text);

  std::string to_json_text() const;

  // Diagonal case p = q = (N+2)/(N-2).
  bool diagonal() const { return p == q; }
};

}  // namespace peaks
