#include "peaks/energy_constants.hpp"

#include <cmath>
#include <sstream>

#include "peaks/lattice.hpp"

namespace peaks {

namespace {

ValErr with_tol(double value, double rel_tol) {
  return {value, std::fabs(value) * rel_tol};
}

// Tail exponent of U resp. V against r^{-e}; all admissible exponents put
// the profile in the fast regime where both components decay like
// r^{-(N-2)}.
double tail_exponent(const RadialProfile& profile) {
  if (profile.regime != DecayRegime::fast)
    throw NumericError("energy constants require the fast-decay regime");
  return double(profile.N - 2);
}

}  // namespace

std::pair<ValErr, ValErr> compute_A0_B0(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec) {
  const int N = params.N;
  const double e = tail_exponent(profile);
  const double half_wN1 = 0.5 * sphere_surface(N - 1);
  const double a0 =
      half_wN1 *
      radial_integral(
          [&](double r) { return std::pow(profile.evaluate(r).second, params.p + 1); },
          N, spec, std::pow(profile.tail_b, params.p + 1), e * (params.p + 1));
  const double b0 =
      half_wN1 *
      radial_integral(
          [&](double r) { return std::pow(profile.evaluate(r).first, params.q + 1); },
          N, spec, std::pow(profile.tail_a, params.q + 1), e * (params.q + 1));
  return {with_tol(a0, spec.rel_tol), with_tol(b0, spec.rel_tol)};
}

std::pair<ValErr, ValErr> compute_A1_B1(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec) {
  const int N = params.N;
  const double e = tail_exponent(profile);
  if (e * (params.p + 1) <= double(N + 1) || e * (params.q + 1) <= double(N + 1))
    throw std::invalid_argument("compute_A1_B1: weighted integral diverges");
  const double half_wN2 = 0.5 * sphere_surface(N - 2);
  const double a1 =
      half_wN2 *
      radial_integral(
          [&](double r) { return std::pow(profile.evaluate(r).second, params.p + 1); },
          N + 1, spec, std::pow(profile.tail_b, params.p + 1), e * (params.p + 1));
  const double b1 =
      half_wN2 *
      radial_integral(
          [&](double r) { return std::pow(profile.evaluate(r).first, params.q + 1); },
          N + 1, spec, std::pow(profile.tail_a, params.q + 1), e * (params.q + 1));
  return {with_tol(a1, spec.rel_tol), with_tol(b1, spec.rel_tol)};
}

std::pair<ValErr, ValErr> compute_A3_B3(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec) {
  const int N = params.N;
  const double e = tail_exponent(profile);
  const double c = 0.5 * double(N - 2) * sphere_surface(N - 2);
  auto weight = [N](double r) { return std::pow(1.0 + r * r, -0.5 * N); };
  const double a3 =
      c * radial_integral(
              [&](double r) { return profile.evaluate(r).first * weight(r); },
              N + 1, spec, profile.tail_a, e + N);
  const double b3 =
      c * radial_integral(
              [&](double r) { return profile.evaluate(r).second * weight(r); },
              N + 1, spec, profile.tail_b, e + N);
  return {with_tol(a3, spec.rel_tol), with_tol(b3, spec.rel_tol)};
}

std::pair<ValErr, ValErr> compute_A4_B4(const RadialProfile& profile,
                                        const SystemParams& params,
                                        const QuadratureSpec& spec) {
  const int N = params.N;
  const double e = tail_exponent(profile);
  const double half_wN1 = 0.5 * sphere_surface(N - 1);
  const double a4 =
      profile.tail_b * half_wN1 *
      radial_integral(
          [&](double r) { return std::pow(profile.evaluate(r).second, params.p); },
          N, spec, std::pow(profile.tail_b, params.p), e * params.p);
  const double b4 =
      profile.tail_a * half_wN1 *
      radial_integral(
          [&](double r) { return std::pow(profile.evaluate(r).first, params.q); },
          N, spec, std::pow(profile.tail_a, params.q), e * params.q);
  return {with_tol(a4, spec.rel_tol), with_tol(b4, spec.rel_tol)};
}

std::pair<double, double> interaction_integral(const RadialProfile& profile,
                                               const SystemParams& params,
                                               double d,
                                               const QuadratureSpec& spec) {
  if (d < 0) throw std::invalid_argument("interaction_integral: need d >= 0");
  const double vint = bipolar_halfspace_integral(
      [&](double r1, double r2) {
        return std::pow(profile.evaluate(r1).second, params.p) *
               profile.evaluate(r2).second;
      },
      d, params.N, spec);
  const double uint_ = bipolar_halfspace_integral(
      [&](double r1, double r2) {
        return std::pow(profile.evaluate(r1).first, params.q) *
               profile.evaluate(r2).first;
      },
      d, params.N, spec);
  return {vint, uint_};
}

A4CrossCheck cross_validate_A4(const RadialProfile& profile,
                               const SystemParams& params, double A4, double d,
                               const QuadratureSpec& spec) {
  A4CrossCheck chk;
  chk.d = d;
  chk.scaled_integral =
      std::pow(d, double(params.N - 2)) *
      interaction_integral(profile, params, d, spec).first;
  chk.rel_dev = std::fabs(chk.scaled_integral - A4) / A4;
  if (chk.rel_dev > 0.05)
    throw NumericError(
        "A4 separation-limit cross-check deviates by " +
        std::to_string(chk.rel_dev) + " at d = " + std::to_string(d));
  return chk;
}

void assemble_Q(EnergyConstants& c, const SystemParams& params, ValErr Q3) {
  const double p1 = params.p + 1.0;
  const double q1 = params.q + 1.0;
  c.Q3 = Q3;
  c.Q0.value = 0.5 * (c.A0.value + c.B0.value) - c.A0.value / p1 -
               c.B0.value / q1;
  c.Q0.error = 0.5 * (c.A0.error + c.B0.error) + c.A0.error / p1 +
               c.B0.error / q1;
  c.Q1.value = 0.5 * (c.A3.value + c.B3.value) +
               0.5 * (c.A1.value + c.B1.value) - c.A1.value / p1 -
               c.B1.value / q1;
  c.Q1.error = 0.5 * (c.A3.error + c.B3.error) +
               0.5 * (c.A1.error + c.B1.error) + c.A1.error / p1 +
               c.B1.error / q1;
  c.Q2.value = 0.5 * (c.A4.value + c.B4.value);
  c.Q2.error = 0.5 * (c.A4.error + c.B4.error);
  c.Q4.value = c.Q2.value * c.Q3.value;
  c.Q4.error = c.Q2.error * c.Q3.value + c.Q2.value * c.Q3.error;
  // Same coefficient assembled from the three energy pieces: the cross
  // term contributes (A3+B3)/2 - (A1+B1)/2, each potential term
  // subtracts A3 - A1/(p+1) resp. B3 - B1/(q+1).
  c.Q1_termwise = -((0.5 * (c.A3.value + c.B3.value) -
                     0.5 * (c.A1.value + c.B1.value)) -
                    (c.A3.value - c.A1.value / p1) -
                    (c.B3.value - c.B1.value / q1));
  for (const ValErr* v : {&c.Q0, &c.Q1, &c.Q2, &c.Q4})
    if (!(v->value > 0))
      throw NumericError("assemble_Q: non-positive Q coefficient");
}

EnergyConstants compute_energy_constants(const RadialProfile& profile,
                                         const SystemParams& params,
                                         const QuadratureSpec& spec) {
  EnergyConstants c;
  c.quad_rel_tol = spec.rel_tol;
  std::tie(c.A0, c.B0) = compute_A0_B0(profile, params, spec);
  std::tie(c.A1, c.B1) = compute_A1_B1(profile, params, spec);
  std::tie(c.A3, c.B3) = compute_A3_B3(profile, params, spec);
  std::tie(c.A4, c.B4) = compute_A4_B4(profile, params, spec);
  assemble_Q(c, params, {Q3_constant(params.N), 1e-12});
  return c;
}

namespace {
void emit(std::ostringstream& os, const char* name, const ValErr& v,
          bool comma = true) {
  os << "  \"" << name << "\": {\"value\": " << v.value
     << ", \"error\": " << v.error << "}" << (comma ? ",\n" : "\n");
}
}  // namespace

std::string EnergyConstants::to_json_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\n";
  emit(os, "A0", A0);
  emit(os, "A1", A1);
  emit(os, "A3", A3);
  emit(os, "A4", A4);
  emit(os, "B0", B0);
  emit(os, "B1", B1);
  emit(os, "B3", B3);
  emit(os, "B4", B4);
  emit(os, "Q0", Q0);
  emit(os, "Q1", Q1);
  emit(os, "Q2", Q2);
  emit(os, "Q3", Q3);
  emit(os, "Q4", Q4);
  os << "  \"Q1_termwise\": " << Q1_termwise << ",\n";
  os << "  \"quad_rel_tol\": " << quad_rel_tol << "\n}\n";
  return os.str();
}

}  // namespace peaks
