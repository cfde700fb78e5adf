#include "ergodyn/dynamics.hpp"

#include "ergodyn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <exception>
#include <sstream>

namespace ergodyn {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_uniform(std::span<const double> times) {
  if (times.size() < 2) return;
  const double h = times[1] - times[0];
  if (!(h > 0.0)) throw ValidationError("time grid must be strictly increasing");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (std::abs((times[k] - times[k - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw ValidationError("time grid must be uniform");
}

CVector phase_factors(const Eigen::VectorXd& eigenvalues, double t) {
  CVector out(eigenvalues.size());
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
    out(k) = std::exp(cplx(0.0, -eigenvalues(k) * t));
  return out;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

SpectralPropagator::SpectralPropagator(const CMatrix& generator) {
  if (generator.rows() != generator.cols())
    throw ValidationError("generator must be square");
  const auto n = generator.rows();
  if (n == 0 || generator.cwiseAbs().maxCoeff() == 0.0) {
    zero_generator_ = true;
    eigenvalues_ = Eigen::VectorXd::Zero(n);
    eigenvectors_ = CMatrix::Identity(n, n);
    return;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(generator);
  if (es.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigendecomposition of generator failed (dimension " << n
        << ", max |G| = " << generator.cwiseAbs().maxCoeff()
        << ", hermiticity defect = " << hermiticity_defect(generator) << ")";
    throw NumericalError(msg.str());
  }
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

CMatrix SpectralPropagator::at(double t) const {
  if (!std::isfinite(t)) throw ValidationError("propagation time must be finite");
  const auto n = eigenvectors_.rows();
  if (zero_generator_ || t == 0.0) return CMatrix::Identity(n, n);
  return eigenvectors_ * phase_factors(eigenvalues_, t).asDiagonal() * eigenvectors_.adjoint();
}

CVector SpectralPropagator::apply(const CVector& v, double t) const {
  if (zero_generator_ || t == 0.0) return v;
  const CVector coeffs = eigenvectors_.adjoint() * v;
  return eigenvectors_ * phase_factors(eigenvalues_, t).cwiseProduct(coeffs);
}

double SpectralPropagator::spectral_radius() const {
  return eigenvalues_.size() == 0 ? 0.0 : eigenvalues_.cwiseAbs().maxCoeff();
}

namespace {

CMatrix compute_generator(const Operator& h, const Operator& up) {
  if (h.dimension() != up.dimension())
    throw ValidationError("Hamiltonian and passive unitary dimensions differ");
  const CMatrix& hm = h.matrix();
  const CMatrix& u = up.matrix();
  return hermitian_part(hm - u.adjoint() * hm * u);
}

}  // namespace

EffectiveDynamics::EffectiveDynamics(Operator hamiltonian, Operator passive_unitary,
                                     std::optional<EnergyScalars> energies)
    : h_(std::move(hamiltonian)),
      up_(std::move(passive_unitary)),
      h_eff_(compute_generator(h_, up_), true),
      energies_(energies),
      spectral_(h_eff_.matrix()) {}

EffectiveDynamics effective_hamiltonian(const Operator& hamiltonian, const Operator& passive_unitary) {
  return EffectiveDynamics(hamiltonian, passive_unitary);
}

EnergyScalars energy_scalars(const Operator& hamiltonian, const GroundDecomposition& dec) {
  EnergyScalars e;
  e.e0 = expectation(dec.ground, hamiltonian).real();
  e.e_chi = dec.chi ? expectation(*dec.chi, hamiltonian).real() : e.e0;
  e.delta_e = e.e_chi - e.e0;
  return e;
}

EffectiveDynamics effective_hamiltonian(const Operator& hamiltonian, const GroundDecomposition& dec) {
  return EffectiveDynamics(hamiltonian, build_passive_unitary(dec), energy_scalars(hamiltonian, dec));
}

Operator general_generator(const Operator& hamiltonian, const GroundDecomposition& dec) {
  const auto n = static_cast<Eigen::Index>(hamiltonian.dimension());
  if (!dec.chi) return Operator(CMatrix::Zero(n, n), true);
  if (dec.ground.dimension() != hamiltonian.dimension())
    throw ValidationError("decomposition dimension does not match Hamiltonian");

  const auto [e0, e_chi, de] = energy_scalars(hamiltonian, dec);
  const double c = std::cos(dec.theta);
  const double s = std::sin(dec.theta);
  const CMatrix& h = hamiltonian.matrix();
  const CVector& g = dec.ground.amplitudes();
  const CVector& x = dec.chi->amplitudes();
  const CMatrix p0 = g * g.adjoint();
  const CMatrix px = x * x.adjoint();
  const CMatrix g_x = g * x.adjoint();  // |0><chi|
  const CMatrix x_g = x * g.adjoint();  // |chi><0|

  CMatrix out = (2.0 * (1.0 - c) * e_chi - s * s * de) * px;
  out += s * s * de * p0;
  out += s * (e_chi - c * de) * (x_g + g_x);
  out -= (1.0 - c) * (h * px + px * h);
  out -= s * (g_x * h + h * x_g);
  return Operator(std::move(out), true);
}

CMatrix SubspaceGenerator::transfer(double t) const {
  const SpectralPropagator prop(m.cast<cplx>() * prefactor);
  return prop.at(t);
}

SubspaceGenerator subspace_generator(double theta, double delta_e) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  RMatrix m(4, 4);
  // clang-format off
  m <<  0.0,   c,      -c,       0.0,
        c,     2 * s,   0.0,    -c,
       -c,     0.0,    -2 * s,   c,
        0.0,  -c,       c,       0.0;
  // clang-format on
  m *= s;
  return SubspaceGenerator{std::move(m), delta_e};
}

Operator propagator(const EffectiveDynamics& dyn, double t) {
  return Operator(dyn.spectral().at(t), false);
}

Operator standard_propagator(const Operator& hamiltonian, double t) {
  return Operator(SpectralPropagator(hamiltonian.matrix()).at(t), false);
}

double unitarity_defect(const CMatrix& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// TimeSeries

TimeSeries::TimeSeries(std::vector<double> times) : times_(std::move(times)) {}

void TimeSeries::add_channel(std::string name, std::vector<double> values, bool probability) {
  if (values.size() != times_.size())
    throw ValidationError("channel '" + name + "' length does not match time grid");
  if (has_channel(name)) throw ValidationError("duplicate channel '" + name + "'");
  channels_.push_back(Channel{std::move(name), std::move(values), probability});
}

void TimeSeries::declare_partition(std::vector<std::string> names) {
  for (const auto& n : names)
    if (!has_channel(n)) throw ValidationError("partition names unknown channel '" + n + "'");
  partitions_.push_back(std::move(names));
}

bool TimeSeries::has_channel(const std::string& name) const {
  return std::any_of(channels_.begin(), channels_.end(),
                     [&](const Channel& c) { return c.name == name; });
}

const std::vector<double>& TimeSeries::channel(const std::string& name) const {
  for (const auto& c : channels_)
    if (c.name == name) return c.values;
  throw ValidationError("no channel named '" + name + "'");
}

void TimeSeries::merge(const TimeSeries& other, const std::string& prefix) {
  if (other.times_ != times_) throw ValidationError("cannot merge series on different grids");
  for (const auto& c : other.channels_) add_channel(prefix + c.name, c.values, c.probability);
  for (const auto& p : other.partitions_) {
    std::vector<std::string> names;
    for (const auto& n : p) names.push_back(prefix + n);
    partitions_.push_back(std::move(names));
  }
}

void TimeSeries::validate() const {
  for (const auto& c : channels_) {
    if (!c.probability) continue;
    for (std::size_t k = 0; k < c.values.size(); ++k)
      if (c.values[k] < -1e-9 || c.values[k] > 1.0 + 1e-9) {
        std::ostringstream msg;
        msg << "probability channel '" << c.name << "' = " << c.values[k] << " at t = " << times_[k];
        throw NumericalError(msg.str());
      }
  }
  for (const auto& p : partitions_) {
    for (std::size_t k = 0; k < times_.size(); ++k) {
      double sum = 0.0;
      for (const auto& n : p) sum += channel(n)[k];
      if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "partition sums to " << sum << " at t = " << times_[k];
        throw NumericalError(msg.str());
      }
    }
  }
}

std::vector<double> uniform_grid(double t_max, std::size_t points) {
  if (points < 2) throw ValidationError("time grid needs at least 2 points");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ValidationError("t_max must be finite and > 0");
  std::vector<double> t(points);
  for (std::size_t k = 0; k < points; ++k)
    t[k] = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
  return t;
}

// ---------------------------------------------------------------------------
// Spectral evolution of expectation values

namespace {

// Row-major table of expectation values, one row per time point.
class ObservableKernel {
 public:
  ObservableKernel(const SpectralPropagator& prop, const Ket& psi0,
                   std::span<const NamedOperator> projectors, const std::optional<Operator>& number)
      : prop_(prop), projectors_(projectors), number_(number) {
    if (psi0.dimension() != prop.dimension())
      throw ValidationError("initial state dimension does not match generator");
    for (const auto& p : projectors)
      if (p.op.dimension() != prop.dimension())
        throw ValidationError("operator '" + p.name + "' dimension does not match generator");
    if (number && number->dimension() != prop.dimension())
      throw ValidationError("number operator dimension does not match generator");
    psi_ = psi0.amplitudes();
    coeffs_ = prop.eigenvectors().adjoint() * psi_;
  }

  std::size_t columns() const { return projectors_.size() + (number_ ? 1 : 0); }

  void evaluate(double t, double* row) const {
    const CVector phi = prop_.zero_generator() || t == 0.0
                            ? psi_
                            : CVector(prop_.eigenvectors() *
                                      phase_factors(prop_.eigenvalues(), t).cwiseProduct(coeffs_));
    std::size_t c = 0;
    for (const auto& p : projectors_) row[c++] = phi.dot(p.op.matrix() * phi).real();
    if (number_) row[c] = phi.dot(number_->matrix() * phi).real();
  }

  TimeSeries to_series(std::span<const double> times, const std::vector<double>& table) const {
    TimeSeries out(std::vector<double>(times.begin(), times.end()));
    const std::size_t cols = columns();
    auto column = [&](std::size_t c) {
      std::vector<double> v(times.size());
      for (std::size_t k = 0; k < times.size(); ++k) v[k] = table[k * cols + c];
      return v;
    };
    std::size_t c = 0;
    for (const auto& p : projectors_) out.add_channel(p.name, column(c++), true);
    if (number_) out.add_channel("N_mean", column(c), false);
    return out;
  }

 private:
  const SpectralPropagator& prop_;
  std::span<const NamedOperator> projectors_;
  const std::optional<Operator>& number_;
  CVector psi_;
  CVector coeffs_;
};

}  // namespace

TimeSeries evolve_probabilities(const SpectralPropagator& prop, const Ket& psi0,
                                std::span<const NamedOperator> projectors,
                                const std::optional<Operator>& number,
                                std::span<const double> times) {
  const ObservableKernel kernel(prop, psi0, projectors, number);
  const std::size_t cols = kernel.columns();
  std::vector<double> table(times.size() * cols);
  const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    kernel.evaluate(times[static_cast<std::size_t>(k)], table.data() + static_cast<std::size_t>(k) * cols);
  return kernel.to_series(times, table);
}

TimeSeries evolve_probabilities_serial(const SpectralPropagator& prop, const Ket& psi0,
                                       std::span<const NamedOperator> projectors,
                                       const std::optional<Operator>& number,
                                       std::span<const double> times) {
  const ObservableKernel kernel(prop, psi0, projectors, number);
  const std::size_t cols = kernel.columns();
  std::vector<double> table(times.size() * cols);
  for (std::size_t k = 0; k < times.size(); ++k) kernel.evaluate(times[k], table.data() + k * cols);
  return kernel.to_series(times, table);
}

TimeSeries evolve_probabilities(const EffectiveDynamics& dyn, const Ket& psi0,
                                std::span<const NamedOperator> projectors,
                                const std::optional<Operator>& number,
                                std::span<const double> times) {
  return evolve_probabilities(dyn.spectral(), psi0, projectors, number, times);
}

TimeSeries survival_probability(const SpectralPropagator& prop, const Ket& psi0,
                                std::span<const double> times) {
  if (psi0.dimension() != prop.dimension())
    throw ValidationError("initial state dimension does not match generator");
  const CVector& psi = psi0.amplitudes();
  const CVector coeffs = prop.eigenvectors().adjoint() * psi;
  // <psi|U(t)|psi> = sum_k |c_k|^2 e^{-i l_k t}
  const Eigen::VectorXd weights = coeffs.cwiseAbs2();
  std::vector<double> p(times.size());
  const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double t = times[static_cast<std::size_t>(k)];
    if (prop.zero_generator() || t == 0.0) {
      p[static_cast<std::size_t>(k)] = 1.0;
      continue;
    }
    cplx amp = 0.0;
    for (Eigen::Index j = 0; j < weights.size(); ++j)
      amp += weights(j) * std::exp(cplx(0.0, -prop.eigenvalues()(j) * t));
    p[static_cast<std::size_t>(k)] = std::norm(amp);
  }
  TimeSeries out(std::vector<double>(times.begin(), times.end()));
  out.add_channel("p_self", std::move(p), true);
  return out;
}

TimeSeries survival_probability(const EffectiveDynamics& dyn, const Ket& psi0,
                                std::span<const double> times) {
  return survival_probability(dyn.spectral(), psi0, times);
}

// ---------------------------------------------------------------------------
// RK4 oracle

double default_rk4_step(const EffectiveDynamics& dyn, std::span<const double> mode_omegas) {
  // For a single rotation plane the spectral radius is |sin(theta) dE|.
  double omega_osc = dyn.spectral().spectral_radius();
  for (double w : mode_omegas) omega_osc = std::max(omega_osc, w);
  if (omega_osc == 0.0) return std::numeric_limits<double>::infinity();
  return (2.0 * std::numbers::pi / omega_osc) / 2000.0;
}

Rk4Result rk4_commutator_oracle(const CMatrix& generator, const CMatrix& a0,
                                std::span<const double> times, double max_step) {
  if (generator.rows() != a0.rows() || a0.rows() != a0.cols())
    throw ValidationError("RK4: operator and generator dimensions differ");
  if (!(max_step > 0.0)) throw ValidationError("RK4: step must be > 0");
  require_uniform(times);

  Rk4Result res;
  res.ops.reserve(times.size());
  if (times.empty()) return res;

  const auto dim = a0.rows();
  CMatrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), stage(dim, dim);
  const auto rhs = [&](const CMatrix& x, CMatrix& out) {
    out.noalias() = generator * x;
    out.noalias() -= x * generator;
    out *= kI;
  };
  const double norm0 = a0.norm();
  const double herm_scale = std::max(1.0, a0.cwiseAbs().maxCoeff());
  const bool hermitian_start = (a0 - a0.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * herm_scale;

  CMatrix a = a0;
  double t = times.front();
  if (t != 0.0) throw ValidationError("RK4: time grid must start at 0");
  res.ops.push_back(a);
  res.step = 0.0;

  for (std::size_t k = 1; k < times.size(); ++k) {
    const double span = times[k] - t;
    const auto nsub = std::isfinite(max_step)
                          ? std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / max_step - 1e-12)))
                          : std::size_t{1};
    const double h = span / static_cast<double>(nsub);
    res.step = std::max(res.step, h);
    for (std::size_t j = 0; j < nsub; ++j) {
      rhs(a, k1);
      stage = a + (0.5 * h) * k1;
      rhs(stage, k2);
      stage = a + (0.5 * h) * k2;
      rhs(stage, k3);
      stage = a + h * k3;
      rhs(stage, k4);
      a += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    t = times[k];
    if (norm0 > 0.0) {
      const double drift = std::abs(a.norm() - norm0) / norm0;
      res.max_norm_drift = std::max(res.max_norm_drift, drift);
      if (drift > 1e-6) {
        std::ostringstream msg;
        msg << "RK4: norm drift " << drift << " exceeds 1e-6 at t = " << t << " (step " << h
            << "); refine the step";
        throw NumericalError(msg.str());
      }
    }
    if (hermitian_start)
      res.max_hermiticity_defect =
          std::max(res.max_hermiticity_defect, (a - a.adjoint()).cwiseAbs().maxCoeff());
    res.ops.push_back(a);
  }
  return res;
}

Rk4Result rk4_commutator_oracle(const EffectiveDynamics& dyn, const Operator& a0,
                                std::span<const double> times, double max_step) {
  return rk4_commutator_oracle(dyn.generator().matrix(), a0.matrix(), times, max_step);
}

TimeSeries rk4_probabilities(const CMatrix& generator, const Ket& psi0,
                             std::span<const NamedOperator> projectors,
                             const std::optional<Operator>& number,
                             std::span<const double> times, double max_step) {
  TimeSeries out(std::vector<double>(times.begin(), times.end()));
  const CVector& psi = psi0.amplitudes();
  auto channel = [&](const Operator& op) {
    const Rk4Result r = rk4_commutator_oracle(generator, op.matrix(), times, max_step);
    std::vector<double> v(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) v[k] = psi.dot(r.ops[k] * psi).real();
    return v;
  };
  // Channels are independent integrations.
  std::vector<const Operator*> ops;
  for (const auto& p : projectors) ops.push_back(&p.op);
  if (number) ops.push_back(&*number);
  std::vector<std::vector<double>> values(ops.size());
  std::vector<std::exception_ptr> errors(ops.size());
  const auto n = static_cast<std::ptrdiff_t>(ops.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      values[static_cast<std::size_t>(i)] = channel(*ops[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t i = 0; i < projectors.size(); ++i) out.add_channel(projectors[i].name, std::move(values[i]), true);
  if (number) out.add_channel("N_mean", std::move(values.back()), false);
  return out;
}

// ---------------------------------------------------------------------------
// First-order Dyson

std::vector<CMatrix> first_order_dyson(const CMatrix& m0, const CMatrix& m1, double eps,
                                       std::span<const double> times) {
  if (m0.rows() != m0.cols() || m1.rows() != m1.cols() || m0.rows() != m1.rows())
    throw ValidationError("Dyson: generator dimensions differ");
  if (times.size() < 3 || (times.size() - 1) % 2 != 0)
    throw ValidationError("Dyson: Simpson integration needs an even number of grid intervals");
  require_uniform(times);
  if (times.front() != 0.0) throw ValidationError("Dyson: time grid must start at 0");

  const SpectralPropagator u0(m0);
  const std::size_t n = times.size();
  std::vector<CMatrix> u(n), f(n);
  for (std::size_t k = 0; k < n; ++k) {
    u[k] = u0.at(times[k]);
    f[k] = u[k].adjoint() * m1 * u[k];
  }

  // Cumulative Simpson: exact panels at even nodes, and the quadratic
  // through (k-1, k, k+1) for the half panel ending at each odd node.
  const double h = times[1] - times[0];
  const auto dim = m0.rows();
  std::vector<CMatrix> integral(n, CMatrix::Zero(dim, dim));
  for (std::size_t k = 2; k < n; k += 2) {
    integral[k] = integral[k - 2] + (h / 3.0) * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
    integral[k - 1] = integral[k - 2] + (h / 12.0) * (5.0 * f[k - 2] + 8.0 * f[k - 1] - f[k]);
  }

  std::vector<CMatrix> out(n);
  const CMatrix id = CMatrix::Identity(dim, dim);
  for (std::size_t k = 0; k < n; ++k) out[k] = u[k] * (id - kI * eps * integral[k]);
  return out;
}

}  // namespace ergodyn
