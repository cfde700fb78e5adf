#pragma once

// Closed-form predictions of the work-driven dynamics (hbar = 1).
// These serve as user-facing results and as oracle targets for the
// numerical propagators.

#include <span>
#include <vector>

namespace ergodyn::analytic {

struct VacChi {
  double p0;
  double p_chi;
};

// theta, chi an eigenstate with gap dE:
//   p0 = cos^2 - cos^2 sin^2(sin(theta) dE t), p_chi = 1 - p0.
VacChi prob_vac_chi(double theta, double delta_e, double t);

// Survival 1 - cos^2(theta) sin^2(sin(theta) dE t).
double prob_self(double theta, double delta_e, double t);

// theta = pi/4 single mode: argument (n omega - E0) t / sqrt(2).
VacChi single_mode_pi4(int n, double omega, double e0, double t);
double expected_number_single(int n, double omega, double e0, double t);

struct TwoMode {
  double p00, pn0, p0m, pnm;
  double n_mean;
};

// Product of two theta = pi/4 single-mode superpositions, E0 = 0.
TwoMode two_mode_separable(int n, int m, double omega_a, double omega_b, double t);

// True iff every n_i omega_i / (sqrt(2) base_omega) is an odd positive integer (1e-9).
bool multimode_periodicity(std::span<const int> occupations, std::span<const double> omegas,
                           double base_omega);

struct Entangled {
  double p00, pnm;
};

// (|00> + |nm>)/sqrt(2): collective argument (n omega_a + m omega_b) t / sqrt(2).
Entangled entangled_noon(int n, int m, double omega_a, double omega_b, double t);

struct Moon {
  double p_first;   // |M0> (or |N0>)
  double p_second;  // |0N>
};

// M omega_a = N omega_b: populations stay (cos^2 phi, sin^2 phi).
Moon moon_degenerate(double phi);

class MoonParams {
 public:
  // eps = (omega_b - omega_a) / omega_a; |eps| < 0.1 enforced.
  MoonParams(int m_occ, int n_occ, double phi, double omega_a, double eps);

  int m_occ() const { return m_occ_; }
  int n_occ() const { return n_occ_; }
  double phi() const { return phi_; }
  double omega_a() const { return omega_a_; }
  double omega_b() const { return omega_a_ * (1.0 + eps_); }
  double eps() const { return eps_; }
  // sin^4 phi cos^2 phi (1 + 2 cos^2 phi)
  double f_phi() const { return f_phi_; }

 private:
  int m_occ_, n_occ_;
  double phi_, omega_a_, eps_, f_phi_;
};

double moon_f(double phi);

// First order in eps: p_N0 = cos^2 phi - 4 eps F(phi) sin^2(N omega_a t / 2).
Moon moon_perturbative(const MoonParams& p, double t);

class GravityScenario {
 public:
  // Requires L < 0.1 r_E and positive inputs.
  GravityScenario(double r_s, double r_e, double separation, double omega_0, int n_occ);

  double r_s() const { return r_s_; }
  double r_e() const { return r_e_; }
  double separation() const { return l_; }
  double omega_0() const { return omega_0_; }
  int n_occ() const { return n_occ_; }

  // (1 - (r_S/2) L / r_E^2) omega_0
  double shifted_frequency() const;
  // (omega(L) - omega_0) / omega_0
  double eps() const;
  // r_S L / r_E^2
  double asymmetry_amplitude() const;

 private:
  double r_s_, r_e_, l_, omega_0_;
  int n_occ_;
};

struct Gravity {
  double p_n0_high;
  double p_0n_low;
};

Gravity gravitational_probs(const GravityScenario& g, double t);

double osc_frequency(double theta, double delta_e);
// sqrt(1 - sqrt(1 - C^2)) dE / sqrt(2); equals sin(theta) dE only for theta <= pi/4.
double osc_frequency_from_coherence(double coherence, double delta_e);

}  // namespace ergodyn::analytic
