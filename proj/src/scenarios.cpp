#include "ergodyn/scenarios.hpp"

#include "ergodyn/analytic.hpp"
#include "ergodyn/errors.hpp"
#include "ergodyn/measures.hpp"
#include "ergodyn/passive.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

namespace ergodyn {

namespace {

struct AnalyticModel {
  std::vector<std::string> names;
  std::function<std::vector<double>(double)> eval;
  bool exact = true;  // false: first-order closed form, reported but not gated
};

struct DysonParts {
  CMatrix g0;
  CMatrix g1;
  double eps = 0.0;
};

struct Asymmetry {
  std::string high;
  std::string low;
  double rate = 0.0;  // argument of sin^2 per unit time
  double analytic_amplitude = 0.0;
};

struct Setup {
  Setup(ModeSystem s, Operator h, Ket p, Operator up)
      : sys(std::move(s)), hamiltonian(std::move(h)), psi(std::move(p)), passive_unitary(std::move(up)) {}

  ModeSystem sys;
  Operator hamiltonian;
  Ket psi;
  Operator passive_unitary;
  std::vector<NamedOperator> projectors;
  std::vector<std::string> partition;
  std::optional<AnalyticModel> analytic;
  std::optional<DysonParts> dyson;
  std::optional<Asymmetry> asymmetry;
  Summary extra;
};

std::vector<int> cutoffs_or(const ScenarioConfig& cfg, std::vector<int> needed) {
  return cfg.cutoffs.empty() ? needed : cfg.cutoffs;
}

// cos(theta)|0> + sin(theta)|n> on a single mode with the given cutoff.
CVector local_superposition(int cutoff, int n, double theta) {
  CVector v = CVector::Zero(cutoff + 1);
  v(0) = std::cos(theta);
  v(n) += std::sin(theta);
  return v;
}

CVector kron_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Operator local_passive_unitary(const CVector& local) {
  return build_passive_unitary(decompose_against_ground(Ket(local)));
}

Operator basis_projector(const ModeSystem& sys, std::vector<int> occ) {
  return projector(fock_ket(sys, occ));
}

Ket two_term_state(const ModeSystem& sys, std::vector<int> first, double c0, std::vector<int> second,
                   double c1) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(sys.dimension()));
  v(static_cast<Eigen::Index>(flat_index(sys, first))) += c0;
  v(static_cast<Eigen::Index>(flat_index(sys, second))) += c1;
  return Ket(std::move(v));
}

Operator global_passive_unitary(const Ket& psi) {
  return build_passive_unitary(decompose_against_ground(psi));
}

// ---------------------------------------------------------------------------

Setup single_mode(const ScenarioConfig& cfg, bool eigenstate) {
  const double theta = eigenstate ? std::numbers::pi / 2 : cfg.theta;
  ModeSystem sys({cfg.omega}, cutoffs_or(cfg, {cfg.n}), cfg.dim_cap);
  CMatrix h = free_hamiltonian(sys).matrix();
  h(0, 0) += cfg.E0;
  const Ket psi(local_superposition(sys.cutoff()[0], cfg.n, theta));
  Operator up = global_passive_unitary(psi);
  Setup s(std::move(sys), Operator(std::move(h), true), psi, std::move(up));

  s.projectors.push_back({"p_0", basis_projector(s.sys, {0})});
  s.projectors.push_back({"p_n", basis_projector(s.sys, {cfg.n})});
  s.partition = {"p_0", "p_n"};

  const int n = cfg.n;
  const double de = n * cfg.omega - cfg.E0;
  s.analytic = AnalyticModel{{"p_0", "p_n", "N_mean", "p_self"}, [=](double t) {
                               const auto p = analytic::prob_vac_chi(theta, de, t);
                               return std::vector<double>{p.p0, p.p_chi, n * p.p_chi,
                                                          analytic::prob_self(theta, de, t)};
                             }};
  return s;
}

Setup two_mode_separable(const ScenarioConfig& cfg) {
  ModeSystem sys({cfg.omega_a, cfg.omega_b}, cutoffs_or(cfg, {cfg.n, cfg.m}), cfg.dim_cap);
  const CVector a = local_superposition(sys.cutoff()[0], cfg.n, cfg.theta);
  const CVector b = local_superposition(sys.cutoff()[1], cfg.m, cfg.theta);
  const Ket psi(kron_vec(a, b));
  Operator up = tensor(local_passive_unitary(a), local_passive_unitary(b));
  Operator h = free_hamiltonian(sys);
  Setup s(std::move(sys), std::move(h), psi, std::move(up));

  const int n = cfg.n, m = cfg.m;
  s.projectors.push_back({"p_00", basis_projector(s.sys, {0, 0})});
  s.projectors.push_back({"p_n0", basis_projector(s.sys, {n, 0})});
  s.projectors.push_back({"p_0m", basis_projector(s.sys, {0, m})});
  s.projectors.push_back({"p_nm", basis_projector(s.sys, {n, m})});
  s.partition = {"p_00", "p_n0", "p_0m", "p_nm"};

  const double theta = cfg.theta, dea = n * cfg.omega_a, deb = m * cfg.omega_b;
  s.analytic = AnalyticModel{{"p_00", "p_n0", "p_0m", "p_nm", "N_mean", "p_self"}, [=](double t) {
                               const auto pa = analytic::prob_vac_chi(theta, dea, t);
                               const auto pb = analytic::prob_vac_chi(theta, deb, t);
                               return std::vector<double>{
                                   pa.p0 * pb.p0, pa.p_chi * pb.p0, pa.p0 * pb.p_chi, pa.p_chi * pb.p_chi,
                                   n * pa.p_chi + m * pb.p_chi,
                                   analytic::prob_self(theta, dea, t) * analytic::prob_self(theta, deb, t)};
                             }};
  s.extra["omega_osc_a"] = analytic::osc_frequency(theta, dea);
  s.extra["omega_osc_b"] = analytic::osc_frequency(theta, deb);
  return s;
}

Setup multimode_product(const ScenarioConfig& cfg) {
  ModeSystem sys(cfg.omegas, cutoffs_or(cfg, cfg.occupations), cfg.dim_cap);
  CVector psi_v = CVector::Ones(1);
  Operator up = Operator::identity(1);
  for (std::size_t i = 0; i < sys.modes(); ++i) {
    const CVector local = local_superposition(sys.cutoff()[i], cfg.occupations[i], cfg.theta);
    psi_v = kron_vec(psi_v, local);
    up = tensor(up, local_passive_unitary(local));
  }
  Operator h = free_hamiltonian(sys);
  Setup s(std::move(sys), std::move(h), Ket(psi_v), std::move(up));

  s.projectors.push_back({"p_vac", basis_projector(s.sys, std::vector<int>(s.sys.modes(), 0))});
  s.projectors.push_back({"p_top", basis_projector(s.sys, cfg.occupations)});

  const double theta = cfg.theta;
  std::vector<double> gaps;
  for (std::size_t i = 0; i < cfg.occupations.size(); ++i) gaps.push_back(cfg.occupations[i] * cfg.omegas[i]);
  const std::vector<int> occ = cfg.occupations;
  s.analytic = AnalyticModel{{"p_vac", "p_top", "N_mean", "p_self"}, [=](double t) {
                               double vac = 1.0, top = 1.0, num = 0.0, self = 1.0;
                               for (std::size_t i = 0; i < gaps.size(); ++i) {
                                 const auto p = analytic::prob_vac_chi(theta, gaps[i], t);
                                 vac *= p.p0;
                                 top *= p.p_chi;
                                 num += occ[i] * p.p_chi;
                                 self *= analytic::prob_self(theta, gaps[i], t);
                               }
                               return std::vector<double>{vac, top, num, self};
                             }};
  if (cfg.base_omega > 0.0)
    s.extra["periodic"] = analytic::multimode_periodicity(cfg.occupations, cfg.omegas, cfg.base_omega) ? 1.0 : 0.0;
  return s;
}

Setup entangled_noon(const ScenarioConfig& cfg) {
  ModeSystem sys({cfg.omega_a, cfg.omega_b}, cutoffs_or(cfg, {cfg.n, cfg.m}), cfg.dim_cap);
  const int n = cfg.n, m = cfg.m;
  Ket psi = two_term_state(sys, {0, 0}, std::cos(cfg.theta), {n, m}, std::sin(cfg.theta));
  Operator up = global_passive_unitary(psi);
  Operator h = free_hamiltonian(sys);
  Setup s(std::move(sys), std::move(h), psi, std::move(up));

  s.projectors.push_back({"p_00", basis_projector(s.sys, {0, 0})});
  s.projectors.push_back({"p_nm", basis_projector(s.sys, {n, m})});
  s.partition = {"p_00", "p_nm"};

  const double theta = cfg.theta, de = n * cfg.omega_a + m * cfg.omega_b;
  s.analytic = AnalyticModel{{"p_00", "p_nm", "N_mean", "p_self"}, [=](double t) {
                               const auto p = analytic::prob_vac_chi(theta, de, t);
                               return std::vector<double>{p.p0, p.p_chi, (n + m) * p.p_chi,
                                                          analytic::prob_self(theta, de, t)};
                             }};
  return s;
}

Setup moon_degenerate(const ScenarioConfig& cfg) {
  ModeSystem sys({cfg.omega_a, cfg.omega_b}, cutoffs_or(cfg, {cfg.M, cfg.N}), cfg.dim_cap);
  const int mo = cfg.M, no = cfg.N;
  Ket psi = two_term_state(sys, {mo, 0}, std::cos(cfg.phi), {0, no}, std::sin(cfg.phi));
  Operator up = global_passive_unitary(psi);
  Operator h = free_hamiltonian(sys);
  Setup s(std::move(sys), std::move(h), psi, std::move(up));

  s.projectors.push_back({"p_00", basis_projector(s.sys, {0, 0})});
  s.projectors.push_back({"p_M0", basis_projector(s.sys, {mo, 0})});
  s.projectors.push_back({"p_0N", basis_projector(s.sys, {0, no})});
  s.partition = {"p_00", "p_M0", "p_0N"};

  const double phi = cfg.phi;
  s.analytic = AnalyticModel{{"p_00", "p_M0", "p_0N", "N_mean", "p_self"}, [=](double) {
                               const auto p = analytic::moon_degenerate(phi);
                               return std::vector<double>{0.0, p.p_first, p.p_second,
                                                          mo * p.p_first + no * p.p_second, 1.0};
                             }};
  return s;
}

// Shared by moon-perturbative and gravitational-mzi: N = M, omega_b = omega_a (1 + eps).
Setup moon_shifted(const ScenarioConfig& cfg, double phi, double omega_a, double eps,
                   const std::string& first, const std::string& second) {
  const int no = cfg.N;
  const double omega_b = omega_a * (1.0 + eps);
  ModeSystem sys({omega_a, omega_b}, cutoffs_or(cfg, {no, no}), cfg.dim_cap);
  Ket psi = two_term_state(sys, {no, 0}, std::cos(phi), {0, no}, std::sin(phi));
  Operator up = global_passive_unitary(psi);
  Operator h = free_hamiltonian(sys);
  Setup s(std::move(sys), std::move(h), psi, std::move(up));

  s.projectors.push_back({"p_00", basis_projector(s.sys, {0, 0})});
  s.projectors.push_back({first, basis_projector(s.sys, {no, 0})});
  s.projectors.push_back({second, basis_projector(s.sys, {0, no})});
  s.partition = {"p_00", first, second};

  // H is linear in eps at fixed U_p: H = omega_a (N_a + N_b) + eps omega_a N_b.
  const CMatrix& u = s.passive_unitary.matrix();
  const CMatrix h0 = omega_a * (mode_number_operator(s.sys, 0).matrix() + mode_number_operator(s.sys, 1).matrix());
  const CMatrix h1 = omega_a * mode_number_operator(s.sys, 1).matrix();
  const CMatrix g0 = h0 - u.adjoint() * h0 * u;
  const CMatrix g1 = h1 - u.adjoint() * h1 * u;
  s.dyson = DysonParts{0.5 * (g0 + g0.adjoint()), 0.5 * (g1 + g1.adjoint()), eps};
  return s;
}

Setup moon_perturbative(const ScenarioConfig& cfg) {
  Setup s = moon_shifted(cfg, cfg.phi, cfg.omega_a, cfg.eps, "p_N0", "p_0N");
  const analytic::MoonParams p(cfg.N, cfg.N, cfg.phi, cfg.omega_a, cfg.eps);
  s.analytic = AnalyticModel{{"p_N0", "p_0N"},
                             [=](double t) {
                               const auto r = analytic::moon_perturbative(p, t);
                               return std::vector<double>{r.p_first, r.p_second};
                             },
                             false};
  s.extra["F_phi"] = p.f_phi();
  return s;
}

Setup gravitational_mzi(const ScenarioConfig& cfg) {
  const analytic::GravityScenario g(cfg.r_S, cfg.r_E, cfg.L, cfg.omega_0, cfg.N);
  Setup s = moon_shifted(cfg, std::numbers::pi / 4, g.omega_0(), g.eps(), "p_N0_high", "p_0N_low");
  s.analytic = AnalyticModel{{"p_N0_high", "p_0N_low"},
                             [=](double t) {
                               const auto r = analytic::gravitational_probs(g, t);
                               return std::vector<double>{r.p_n0_high, r.p_0n_low};
                             },
                             false};
  s.extra["eps"] = g.eps();
  s.extra["shifted_frequency"] = g.shifted_frequency();
  s.asymmetry = Asymmetry{"p_N0_high", "p_0N_low", cfg.N * cfg.omega_0 / 2.0, g.asymmetry_amplitude()};
  return s;
}

std::string occupation_label(const BasisIndex& b) {
  std::string out = "p";
  for (int o : b.occupations) out += "_" + std::to_string(o);
  return out;
}

Setup custom_state(const ScenarioConfig& cfg) {
  ModeSystem sys(cfg.omegas, cfg.cutoffs, cfg.dim_cap);
  CVector v(static_cast<Eigen::Index>(sys.dimension()));
  for (std::size_t k = 0; k < sys.dimension(); ++k)
    v(static_cast<Eigen::Index>(k)) =
        cplx(cfg.amplitudes_re[k], cfg.amplitudes_im.empty() ? 0.0 : cfg.amplitudes_im[k]);
  const Ket psi(v);
  CMatrix h = free_hamiltonian(sys).matrix();
  h(0, 0) += cfg.E0;
  const Operator hop(std::move(h), true);
  const GroundDecomposition dec = decompose_against_ground(psi);
  Setup s(std::move(sys), hop, psi, build_passive_unitary(dec));

  s.projectors.push_back({"p_vac", basis_projector(s.sys, std::vector<int>(s.sys.modes(), 0))});
  for (std::size_t k = 1; k < s.sys.dimension(); ++k)
    if (std::abs(psi[k]) > 0.0) {
      const auto b = occupations_of(s.sys, k);
      s.projectors.push_back({occupation_label(b), projector(fock_ket(s.sys, b.occupations))});
    }

  if (dec.chi) {
    const CVector hx = hop.matrix() * dec.chi->amplitudes();
    const cplx e = dec.chi->amplitudes().dot(hx);
    const double scale = std::max(1.0, hop.matrix().cwiseAbs().maxCoeff());
    if ((hx - e * dec.chi->amplitudes()).norm() <= 1e-10 * scale) {
      const double theta = dec.theta;
      const double de = e.real() - hop.matrix()(0, 0).real();
      s.analytic = AnalyticModel{{"p_vac", "p_self"}, [=](double t) {
                                   return std::vector<double>{analytic::prob_vac_chi(theta, de, t).p0,
                                                              analytic::prob_self(theta, de, t)};
                                 }};
    }
  } else {
    s.analytic = AnalyticModel{{"p_vac", "p_self"}, [](double) { return std::vector<double>{1.0, 1.0}; }};
  }
  return s;
}

Setup make_setup(const ScenarioConfig& cfg) {
  const std::string& sc = cfg.scenario;
  if (sc == "single-mode-superposition") return single_mode(cfg, false);
  if (sc == "single-eigenstate") return single_mode(cfg, true);
  if (sc == "two-mode-separable") return two_mode_separable(cfg);
  if (sc == "multimode-product") return multimode_product(cfg);
  if (sc == "entangled-noon") return entangled_noon(cfg);
  if (sc == "moon-degenerate") return moon_degenerate(cfg);
  if (sc == "moon-perturbative") return moon_perturbative(cfg);
  if (sc == "gravitational-mzi") return gravitational_mzi(cfg);
  if (sc == "custom-state") return custom_state(cfg);
  throw ValidationError("field 'scenario': unknown scenario '" + sc + "'");
}

// ---------------------------------------------------------------------------

TimeSeries analytic_series(const AnalyticModel& model, const std::vector<double>& times) {
  std::vector<std::vector<double>> cols(model.names.size(), std::vector<double>(times.size()));
  for (std::size_t k = 0; k < times.size(); ++k) {
    const auto row = model.eval(times[k]);
    for (std::size_t c = 0; c < row.size(); ++c) cols[c][k] = row[c];
  }
  TimeSeries out(times);
  for (std::size_t c = 0; c < cols.size(); ++c)
    out.add_channel(model.names[c], std::move(cols[c]), model.names[c] != "N_mean");
  return out;
}

double max_residual(const TimeSeries& a, const TimeSeries& b) {
  double r = 0.0;
  for (const auto& ch : a.channels()) {
    if (!b.has_channel(ch.name)) continue;
    const auto& other = b.channel(ch.name);
    for (std::size_t k = 0; k < ch.values.size(); ++k) r = std::max(r, std::abs(ch.values[k] - other[k]));
  }
  return r;
}

TimeSeries exponential_series(const SpectralPropagator& prop, const Setup& s, const Operator& number,
                              const std::vector<double>& times) {
  TimeSeries out = evolve_probabilities(prop, s.psi, s.projectors, number, times);
  out.merge(survival_probability(prop, s.psi, times), "");
  return out;
}

TimeSeries rk4_series(const EffectiveDynamics& dyn, const Setup& s, const Operator& number,
                      const std::vector<double>& times) {
  std::vector<NamedOperator> ops = s.projectors;
  ops.push_back({"p_self", projector(s.psi)});
  return rk4_probabilities(dyn.generator().matrix(), s.psi, ops, number, times,
                           default_rk4_step(dyn, s.sys.omega()));
}

// Least-squares amplitude of (high - low) against sin^2(rate t).
double fit_asymmetry(const std::vector<double>& times, const std::vector<double>& diff, double rate) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double s = std::pow(std::sin(rate * times[k]), 2);
    num += diff[k] * s;
    den += s * s;
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  const Setup s = make_setup(cfg);
  const std::vector<double> times = uniform_grid(cfg.t_max, static_cast<std::size_t>(cfg.steps));
  const Operator number = number_operator(s.sys);

  const GroundDecomposition dec = decompose_against_ground(s.psi);
  const EnergyScalars energies = energy_scalars(s.hamiltonian, dec);
  const EffectiveDynamics dyn(s.hamiltonian, s.passive_unitary, energies);

  ScenarioResult res;
  Summary& sum = res.summary;
  sum = s.extra;
  sum["dimension"] = static_cast<double>(s.sys.dimension());
  sum["theta"] = dec.theta;
  sum["e0"] = energies.e0;
  sum["e_chi"] = energies.e_chi;
  sum["delta_e"] = energies.delta_e;
  sum["omega_osc"] = analytic::osc_frequency(dec.theta, energies.delta_e);
  sum["generator_trace"] = std::abs(dyn.generator().matrix().trace());
  sum["generator_hermiticity_defect"] = hermiticity_defect(dyn.generator().matrix());
  sum["unitarity_defect"] = unitarity_defect(dyn.spectral().at(cfg.t_max));

  const DensityOperator rho0 = DensityOperator::from_ket(s.psi);
  sum["coherence"] = l1_coherence(rho0);
  if (s.sys.modes() >= 2) sum["negativity"] = negativity(rho0, s.sys, BipartitionSpec::first_mode(s.sys));

  std::optional<TimeSeries> exp_series, rk_series, an_series;
  const bool want_exp = cfg.engine == Engine::exponential || cfg.engine == Engine::all;
  const bool want_rk4 = cfg.engine == Engine::rk4 || cfg.engine == Engine::all;
  if (cfg.engine == Engine::analytic && !s.analytic)
    throw ValidationError("field 'engine': scenario '" + cfg.scenario + "' has no closed form for this state");

  if (want_exp) exp_series = exponential_series(dyn.spectral(), s, number, times);
  if (want_rk4) rk_series = rk4_series(dyn, s, number, times);
  if (s.analytic) an_series = analytic_series(*s.analytic, times);

  TimeSeries& primary = res.series;
  if (exp_series) primary = *exp_series;
  else if (rk_series) primary = *rk_series;
  else primary = *an_series;
  if (!s.partition.empty() && cfg.engine != Engine::analytic) primary.declare_partition(s.partition);

  std::ostringstream disagreement;
  if (exp_series && rk_series) {
    const double r = max_residual(*exp_series, *rk_series);
    sum["max_residual_rk4"] = r;
    if (r > kRk4Tolerance) disagreement << "exponential vs rk4 residual " << r << " > " << kRk4Tolerance << "; ";
  }
  if (an_series && cfg.engine != Engine::analytic) {
    const double r = max_residual(primary, *an_series);
    if (s.analytic->exact) {
      sum["max_residual_analytic"] = r;
      if (r > kAnalyticTolerance)
        disagreement << "numerical vs closed-form residual " << r << " > " << kAnalyticTolerance << "; ";
    } else {
      sum["max_residual_first_order"] = r;
    }
  }

  if (s.dyson && cfg.engine != Engine::analytic) {
    const auto xs = first_order_dyson(s.dyson->g0, s.dyson->g1, s.dyson->eps, times);
    TimeSeries dy(times);
    for (const auto& p : s.projectors) {
      std::vector<double> v(times.size());
      for (std::size_t k = 0; k < times.size(); ++k) {
        const CVector phi = xs[k] * s.psi.amplitudes();
        v[k] = phi.dot(p.op.matrix() * phi).real();
      }
      dy.add_channel(p.name, std::move(v), false);
    }
    sum["max_residual_dyson"] = max_residual(primary, dy);
    if (s.asymmetry) {
      std::vector<double> diff(times.size());
      for (std::size_t k = 0; k < times.size(); ++k)
        diff[k] = dy.channel(s.asymmetry->high)[k] - dy.channel(s.asymmetry->low)[k];
      sum["asymmetry_amplitude_dyson"] = fit_asymmetry(times, diff, s.asymmetry->rate);
    }
    primary.merge(dy, "dyson_");
  }

  if (s.asymmetry) {
    std::vector<double> diff(times.size());
    for (std::size_t k = 0; k < times.size(); ++k)
      diff[k] = primary.channel(s.asymmetry->high)[k] - primary.channel(s.asymmetry->low)[k];
    sum["asymmetry_amplitude_analytic"] = s.asymmetry->analytic_amplitude;
    sum["asymmetry_amplitude_simulated"] = fit_asymmetry(times, diff, s.asymmetry->rate);
    primary.add_channel("asymmetry", std::move(diff), false);
  }

  if (cfg.comparison) {
    const SpectralPropagator standard(s.hamiltonian.matrix());
    const TimeSeries std_series = exponential_series(standard, s, number, times);
    double dev = 0.0;
    std::vector<TimeSeries::Channel> deltas;
    for (const auto& ch : std_series.channels()) {
      if (!primary.has_channel(ch.name)) continue;
      const auto& mod = primary.channel(ch.name);
      std::vector<double> d(times.size());
      for (std::size_t k = 0; k < times.size(); ++k) {
        d[k] = mod[k] - ch.values[k];
        dev = std::max(dev, std::abs(d[k]));
      }
      deltas.push_back({"delta_" + ch.name, std::move(d), false});
    }
    primary.merge(std_series, "std_");
    for (auto& d : deltas) primary.add_channel(std::move(d.name), std::move(d.values), false);
    sum["max_deviation_standard"] = dev;
  }

  primary.validate();
  if (const std::string msg = disagreement.str(); !msg.empty()) res.disagreement = msg.substr(0, msg.size() - 2);
  return res;
}

SweepTable sweep(const ScenarioConfig& cfg, const std::string& parameter, const std::vector<double>& values) {
  if (!is_numeric_key(parameter)) throw ValidationError("unknown parameter '" + parameter + "'");
  SweepTable table;
  table.parameter = parameter;
  table.values = values;
  table.rows.resize(values.size());
  table.disagreements.resize(values.size());
  std::vector<std::exception_ptr> errors(values.size());

  const auto n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      ScenarioConfig row_cfg = cfg;
      set_numeric(row_cfg, parameter, values[k]);
      ScenarioResult r = run_scenario(row_cfg);
      table.rows[k] = std::move(r.summary);
      table.disagreements[k] = std::move(r.disagreement);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return table;
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog{
      {"single-mode-superposition", "cos(theta)|0> + sin(theta)|n>, one mode (keys: theta, n, omega, E0)"},
      {"single-eigenstate", "|n>, one mode; populations stay frozen (keys: n, omega)"},
      {"two-mode-separable", "product of two superpositions, product U_p (keys: theta, n, m, omega_a, omega_b)"},
      {"multimode-product", "product over modes of superpositions (keys: theta, occupations, omegas, base_omega)"},
      {"entangled-noon", "cos(theta)|00> + sin(theta)|nm> (keys: theta, n, m, omega_a, omega_b)"},
      {"moon-degenerate", "cos(phi)|M0> + sin(phi)|0N> with M omega_a = N omega_b (keys: phi, M, N, omega_a, omega_b)"},
      {"moon-perturbative", "N00N state with omega_b = omega_a (1 + eps) (keys: phi, N, omega_a, eps)"},
      {"gravitational-mzi", "N00N state across two heights (keys: N, r_S, r_E, L, omega_0)"},
      {"custom-state", "arbitrary state in the Fock basis (keys: omegas, cutoffs, amplitudes_re, amplitudes_im, E0)"},
  };
  return catalog;
}

}  // namespace ergodyn
