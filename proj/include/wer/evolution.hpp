#pragma once

#include <array>
#include <string>
#include <vector>

#include "wer/eigensystem.hpp"
#include "wer/hamiltonian.hpp"
#include "wer/mat2.hpp"

namespace wer {

/// Non-unitary time-evolution operator U = exp(-i H t).
struct Propagator {
  Mat2 u;
  double t = 0.0;
  HamiltonianParams params;
};

/// Closed-form propagator. Uses the spectral sum over biorthogonal
/// projectors away from the exceptional ring and the defect-safe
/// trace/sinc form U = e^{-i eb t}[cos(gt) I - i t sinc(gt) (H - eb I)]
/// when the eigenvalue gap drops below 1e-6 * kappa.
Propagator propagator(const HamiltonianParams& params, double t);

namespace detail {
Mat2 propagator_spectral(const Mat2& h, double t);
Mat2 propagator_defect_safe(const Mat2& h, double t);
}  // namespace detail

/// Stokes parameters (S1, S2, S3) = (tr rho sx, tr rho sy, tr rho sz)
/// in the |H>,|V> basis; S3 = p_H - p_V.
std::array<double, 3> stokes_of(const Mat2& rho);

/// Time series of the evolved (normalized) state and its raw survival norm.
struct StateTrajectory {
  std::vector<double> times;
  std::vector<Mat2> rho;                       // trace-1 Hermitian PSD
  std::vector<double> survival;                // raw ||psi(t)||^2, in [0,1]
  std::vector<std::array<double, 3>> stokes;   // (S1,S2,S3)
  std::vector<double> p0;                      // population of |0>
  HamiltonianParams params;
};

/// Uniform grid of n points over kappa*t in [0, t_max_kappa] (Fig.-3 scale).
std::vector<double> default_time_grid(double kappa, int n = 81, double t_max_kappa = 10.0);

/// Evolve psi0 (normalized internally; default |H> = (1,0)) over the grid.
StateTrajectory evolve(const HamiltonianParams& params, const Vec2& psi0,
                       const std::vector<double>& times);
StateTrajectory evolve(const HamiltonianParams& params, const std::vector<double>& times);

/// CSV with columns t,p0,ReRho01,ImRho01,S1,S2,S3,survival.
std::string trajectory_csv(const StateTrajectory& traj);

}  // namespace wer
