#include "peaks/params.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace peaks {

double critical_q(int N, double p) {
  if (N < 3) throw std::invalid_argument("critical_q: need N >= 3");
  if (p <= 0) throw std::invalid_argument("critical_q: need p > 0");
  const double rhs = double(N - 2) / double(N) - 1.0 / (p + 1.0);
  if (rhs <= 0.0)
    throw std::invalid_argument(
        "critical_q: exponent pair off the hyperbola (1/(q+1) <= 0)");
  return 1.0 / rhs - 1.0;
}

bool check_condition_A(int N, double p) {
  if (N < 5) throw std::invalid_argument("check_condition_A: need N >= 5");
  if (N == 5) return p > 2.0 && p <= 7.0 / 3.0;
  const double tau = double(N - 3) / double(N - 2);
  const double lo = (double(N) + tau) / double(N - 2);
  const double hi = double(N + 2) / double(N - 2);
  return p > lo && p <= hi;
}

double epsilon_of_k(int N, int k) {
  if (N < 5) throw std::invalid_argument("epsilon_of_k: need N >= 5");
  if (k < 1) throw std::invalid_argument("epsilon_of_k: need k >= 1");
  return std::pow(double(k), -double(N - 2) / double(N - 3));
}

SystemParams SystemParams::make(int N, double p, int k, double mu,
                                double gamma, double delta) {
  if (N < 5) throw std::invalid_argument("SystemParams: need N >= 5");
  if (!check_condition_A(N, p))
    throw std::invalid_argument("SystemParams: p violates condition (A)");
  if (k < 1) throw std::invalid_argument("SystemParams: need k >= 1");
  if (mu <= 0) throw std::invalid_argument("SystemParams: need mu > 0");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("SystemParams: need delta in (0,1)");
  SystemParams sp;
  sp.N = N;
  sp.p = p;
  sp.q = critical_q(N, p);
  sp.tau = double(N - 3) / double(N - 2);
  sp.mu = mu;
  sp.gamma = gamma;
  sp.k = k;
  sp.epsilon = epsilon_of_k(N, k);
  sp.delta = delta;
  return sp;
}

SystemParams SystemParams::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return make(j.at("N").get<int>(), j.at("p").get<double>(),
              j.value("k", 1), j.value("mu", 1.0), j.value("gamma", -1.0),
              j.value("delta", 0.01));
}

std::string SystemParams::to_json_text() const {
  nlohmann::json j{{"N", N},     {"p", p},         {"q", q},
                   {"tau", tau}, {"mu", mu},       {"gamma", gamma},
                   {"k", k},     {"epsilon", epsilon}, {"delta", delta}};
  return j.dump(2);
}

}  // namespace peaks
