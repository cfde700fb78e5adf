// Serial vs OpenMP observable kernel on a product multimode state.

#include "ergodyn/dynamics.hpp"
#include "ergodyn/passive.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>

using namespace ergodyn;

namespace {

template <class Fn>
double best_of(int repeats, Fn fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolve_probabilities: serial reference vs parallel kernel"};
  int modes = 3, cutoff = 5, points = 2000, repeats = 3;
  app.add_option("--modes", modes);
  app.add_option("--cutoff", cutoff);
  app.add_option("--points", points);
  app.add_option("--repeats", repeats);
  CLI11_PARSE(app, argc, argv);

  std::vector<double> omega;
  for (int i = 0; i < modes; ++i) omega.push_back(1.0 + 0.37 * i);
  const ModeSystem sys(omega, std::vector<int>(static_cast<std::size_t>(modes), cutoff));
  CVector v(static_cast<Eigen::Index>(sys.dimension()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = cplx(std::cos(0.3 * k), std::sin(0.7 * k)) / (1.0 + k);
  const Ket psi(v);
  const auto dyn = effective_hamiltonian(free_hamiltonian(sys), decompose_against_ground(psi));

  std::vector<NamedOperator> ops;
  for (std::size_t k = 0; k < std::min<std::size_t>(8, sys.dimension()); ++k)
    ops.push_back({"p" + std::to_string(k), projector(fock_ket(sys, occupations_of(sys, k).occupations))});
  const std::optional<Operator> number = number_operator(sys);
  const auto times = uniform_grid(50.0, static_cast<std::size_t>(points));

  TimeSeries ser, par;
  const double ts = best_of(repeats, [&] { ser = evolve_probabilities_serial(dyn.spectral(), psi, ops, number, times); });
  const double tp = best_of(repeats, [&] { par = evolve_probabilities(dyn.spectral(), psi, ops, number, times); });

  double diff = 0.0;
  for (std::size_t c = 0; c < ser.channels().size(); ++c)
    for (std::size_t k = 0; k < ser.size(); ++k)
      diff = std::max(diff, std::abs(ser.channels()[c].values[k] - par.channels()[c].values[k]));

  std::printf("dimension %zu, %d time points, %zu channels, %d threads\n", sys.dimension(), points,
              ser.channels().size(), omp_get_max_threads());
  std::printf("serial   %.4f s\nparallel %.4f s\nspeedup  %.2fx\nmax |serial - parallel| %.3g\n", ts, tp, ts / tp,
              diff);
  return diff == 0.0 ? 0 : 1;
}
