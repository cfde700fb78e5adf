#include "ergodyn/analytic.hpp"

#include "ergodyn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ergodyn::analytic {

namespace {

double sq(double x) { return x * x; }

}  // namespace

VacChi prob_vac_chi(double theta, double delta_e, double t) {
  const double c2 = sq(std::cos(theta));
  const double osc = sq(std::sin(std::sin(theta) * delta_e * t));
  const double p0 = c2 - c2 * osc;
  return {p0, 1.0 - p0};
}

double prob_self(double theta, double delta_e, double t) {
  return 1.0 - sq(std::cos(theta)) * sq(std::sin(std::sin(theta) * delta_e * t));
}

VacChi single_mode_pi4(int n, double omega, double e0, double t) {
  const double osc = sq(std::sin((n * omega - e0) * t / std::numbers::sqrt2));
  return {0.5 * (1.0 - osc), 0.5 * (1.0 + osc)};
}

double expected_number_single(int n, double omega, double e0, double t) {
  return 0.5 * n * (1.0 + sq(std::sin((n * omega - e0) * t / std::numbers::sqrt2)));
}

TwoMode two_mode_separable(int n, int m, double omega_a, double omega_b, double t) {
  const double sa = sq(std::sin(n * omega_a * t / std::numbers::sqrt2));
  const double sb = sq(std::sin(m * omega_b * t / std::numbers::sqrt2));
  TwoMode r;
  r.p00 = 0.25 * (1.0 - sa) * (1.0 - sb);
  r.pn0 = 0.25 * (1.0 + sa) * (1.0 - sb);
  r.p0m = 0.25 * (1.0 - sa) * (1.0 + sb);
  r.pnm = 0.25 * (1.0 + sa) * (1.0 + sb);
  r.n_mean = 0.5 * n * (1.0 + sa) + 0.5 * m * (1.0 + sb);
  return r;
}

bool multimode_periodicity(std::span<const int> occupations, std::span<const double> omegas,
                           double base_omega) {
  if (occupations.size() != omegas.size() || occupations.empty())
    throw ValidationError("periodicity check needs one occupation per frequency");
  if (!(base_omega > 0.0)) throw ValidationError("base frequency must be > 0");
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double ratio = occupations[i] * omegas[i] / (std::numbers::sqrt2 * base_omega);
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) > 1e-9) return false;
    const auto k = static_cast<long long>(nearest);
    if (k < 1 || k % 2 == 0) return false;
  }
  return true;
}

Entangled entangled_noon(int n, int m, double omega_a, double omega_b, double t) {
  const double osc = sq(std::sin((n * omega_a + m * omega_b) * t / std::numbers::sqrt2));
  return {0.5 * (1.0 - osc), 0.5 * (1.0 + osc)};
}

Moon moon_degenerate(double phi) {
  const double c2 = sq(std::cos(phi));
  return {c2, 1.0 - c2};
}

double moon_f(double phi) {
  const double s2 = sq(std::sin(phi));
  const double c2 = sq(std::cos(phi));
  return s2 * s2 * c2 * (1.0 + 2.0 * c2);
}

MoonParams::MoonParams(int m_occ, int n_occ, double phi, double omega_a, double eps)
    : m_occ_(m_occ), n_occ_(n_occ), phi_(phi), omega_a_(omega_a), eps_(eps), f_phi_(moon_f(phi)) {
  if (m_occ < 1 || n_occ < 1) throw ValidationError("M00N occupations must be >= 1");
  if (!(omega_a > 0.0)) throw ValidationError("omega_a must be > 0");
  if (!(std::abs(eps) < 0.1)) throw ValidationError("|eps| must be < 0.1 for the first-order formula");
}

Moon moon_perturbative(const MoonParams& p, double t) {
  const double shift = 4.0 * p.eps() * p.f_phi() * sq(std::sin(p.n_occ() * p.omega_a() * t / 2.0));
  const double c2 = sq(std::cos(p.phi()));
  return {c2 - shift, (1.0 - c2) + shift};
}

GravityScenario::GravityScenario(double r_s, double r_e, double separation, double omega_0, int n_occ)
    : r_s_(r_s), r_e_(r_e), l_(separation), omega_0_(omega_0), n_occ_(n_occ) {
  if (!(r_s > 0.0) || !(r_e > 0.0) || !(separation > 0.0) || !(omega_0 > 0.0))
    throw ValidationError("r_S, r_E, L and omega_0 must be > 0");
  if (!(separation < 0.1 * r_e)) throw ValidationError("path separation L must satisfy L < 0.1 r_E");
  if (n_occ < 1) throw ValidationError("photon number must be >= 1");
}

double GravityScenario::shifted_frequency() const {
  return (1.0 - 0.5 * r_s_ * l_ / (r_e_ * r_e_)) * omega_0_;
}

double GravityScenario::eps() const { return -0.5 * r_s_ * l_ / (r_e_ * r_e_); }

double GravityScenario::asymmetry_amplitude() const { return (r_s_ / r_e_) * (l_ / r_e_); }

Gravity gravitational_probs(const GravityScenario& g, double t) {
  const double osc = sq(std::sin(g.n_occ() * g.omega_0() * t / 2.0));
  const double a = g.asymmetry_amplitude();
  return {0.5 * (1.0 + a * osc), 0.5 * (1.0 - a * osc)};
}

double osc_frequency(double theta, double delta_e) { return std::sin(theta) * delta_e; }

double osc_frequency_from_coherence(double coherence, double delta_e) {
  const double inner = std::sqrt(std::max(0.0, 1.0 - coherence * coherence));
  return std::sqrt(std::max(0.0, 1.0 - inner)) * delta_e / std::numbers::sqrt2;
}

}  // namespace ergodyn::analytic
