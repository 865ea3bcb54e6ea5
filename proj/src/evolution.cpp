#include "wer/evolution.hpp"

#include <cmath>

#include "wer/errors.hpp"
#include "wer/io.hpp"

namespace wer {
namespace detail {

namespace {
// sin(z)/z with the analytic limit at z -> 0.
cplx sinc(cplx z) {
  if (std::abs(z) < 1e-4) {
    const cplx z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}
}  // namespace

Mat2 propagator_spectral(const Mat2& h, double t) {
  const EigenSystem es = eigensystem(h);
  const cplx i{0.0, 1.0};
  return std::exp(-i * es.e1 * t) * Mat2::outer(es.r1, es.l1) +
         std::exp(-i * es.e2 * t) * Mat2::outer(es.r2, es.l2);
}

Mat2 propagator_defect_safe(const Mat2& h, double t) {
  const cplx i{0.0, 1.0};
  const cplx eb = 0.5 * h.trace();
  const Mat2 a = h - Mat2::diag(eb, eb);
  const cplx g = std::sqrt(eb * eb - h.det());  // half-gap; sign irrelevant (even functions)
  return std::exp(-i * eb * t) * (Mat2::diag(std::cos(g * t), std::cos(g * t)) -
                                  (i * t * sinc(g * t)) * a);
}

}  // namespace detail

Propagator propagator(const HamiltonianParams& params, double t) {
  if (t < 0.0) throw UnitError("propagator: t must be >= 0");
  const Mat2 h = build_hamiltonian(params);
  const EigenSystem es = eigensystem(h, 1e-8 * params.kappa);
  Propagator p;
  p.t = t;
  p.params = params;
  p.u = es.gap > 1e-6 * params.kappa ? detail::propagator_spectral(h, t)
                                     : detail::propagator_defect_safe(h, t);
  return p;
}

std::array<double, 3> stokes_of(const Mat2& rho) {
  const cplx r01 = rho(0, 1);
  return {2.0 * r01.real(), -2.0 * r01.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

std::vector<double> default_time_grid(double kappa, int n, double t_max_kappa) {
  std::vector<double> times(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    times[static_cast<std::size_t>(j)] = (t_max_kappa / kappa) * (double(j) / double(n - 1));
  return times;
}

StateTrajectory evolve(const HamiltonianParams& params, const Vec2& psi0,
                       const std::vector<double>& times) {
  if (psi0.norm2() <= 0.0) throw DegenerateState("evolve: psi0 has zero norm");
  if (times.empty() || times.front() < 0.0)
    throw UnitError("evolve: times must start at t >= 0");
  for (std::size_t j = 1; j < times.size(); ++j)
    if (times[j] < times[j - 1]) throw UnitError("evolve: times must be sorted ascending");

  const Vec2 psi_init = psi0 * (1.0 / psi0.norm());

  StateTrajectory traj;
  traj.params = params;
  traj.times = times;
  traj.rho.reserve(times.size());
  traj.survival.reserve(times.size());
  traj.stokes.reserve(times.size());
  traj.p0.reserve(times.size());

  for (double t : times) {
    const Vec2 psi = propagator(params, t).u * psi_init;
    const double n2 = psi.norm2();
    const Mat2 rho = Mat2::outer(psi, Vec2{std::conj(psi.a), std::conj(psi.b)}) * cplx(1.0 / n2);
    traj.rho.push_back(rho);
    traj.survival.push_back(n2);
    traj.stokes.push_back(stokes_of(rho));
    traj.p0.push_back(rho(0, 0).real());
  }
  return traj;
}

StateTrajectory evolve(const HamiltonianParams& params, const std::vector<double>& times) {
  return evolve(params, Vec2{cplx(1), cplx(0)}, times);
}

std::string trajectory_csv(const StateTrajectory& traj) {
  CsvWriter csv({"t", "p0", "ReRho01", "ImRho01", "S1", "S2", "S3", "survival"});
  for (std::size_t j = 0; j < traj.times.size(); ++j) {
    const cplx r01 = traj.rho[j](0, 1);
    csv.row({traj.times[j], traj.p0[j], r01.real(), r01.imag(), traj.stokes[j][0],
             traj.stokes[j][1], traj.stokes[j][2], traj.survival[j]});
  }
  return csv.str();
}

}  // namespace wer
