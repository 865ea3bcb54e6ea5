#pragma once

#include <array>

#include "wer/mat2.hpp"

namespace wer {

/// Physical control point of the two-level dissipative system.
///
/// kappa sets the unit scale and the default decay asymmetry: the lower
/// component |1> decays at kappa1 (= kappa unless overridden) while |0>
/// decays at kappa0 (= 0 by default).
///
/// Reciprocal-space image (fixed convention used everywhere in this
/// library): k_x = Re(omega), k_y = Im(omega), k_z = delta/2. All results
/// depend only on |omega|, arg(omega), delta, kappa, so the sign/conjugation
/// freedom in the k_y axis does not affect any computed quantity.
struct HamiltonianParams {
  double delta = 0.0;
  cplx omega{0.0, 0.0};
  double kappa = 1.0;
  double kappa0 = 0.0;
  double kappa1 = 1.0;

  HamiltonianParams() = default;
  HamiltonianParams(double delta_, cplx omega_, double kappa_)
      : delta(delta_), omega(omega_), kappa(kappa_), kappa0(0.0), kappa1(kappa_) {}
  HamiltonianParams(double delta_, cplx omega_, double kappa_, double kappa0_, double kappa1_)
      : delta(delta_), omega(omega_), kappa(kappa_), kappa0(kappa0_), kappa1(kappa1_) {}

  void validate() const;

  /// (k_x, k_y, k_z) image of this control point.
  std::array<double, 3> kvec() const { return {omega.real(), omega.imag(), 0.5 * delta}; }

  /// Radius of the ring of exceptional points for this decay configuration
  /// (kappa/4 in the standard kappa0=0, kappa1=kappa setup).
  double wer_radius() const { return 0.25 * std::abs(kappa1 - kappa0); }

  /// Euclidean distance in k-space from the exceptional ring.
  double distance_to_wer() const;
};

/// H = [[delta - i*kappa0/2, conj(omega)], [omega, -i*kappa1/2]].
/// With the default kappa0 = 0, kappa1 = kappa this is the effective
/// no-jump Hamiltonian of the dissipative qubit.
Mat2 build_hamiltonian(const HamiltonianParams& params);

/// Hermitian reference point: k_x sx + k_y sy + k_z sz.
Mat2 dirac_hamiltonian(double kx, double ky, double kz);

/// Proximity diagnostics relative to the exceptional ring.
struct EpReport {
  double distance_to_wer = 0.0;
  double eigenvalue_gap = 0.0;
  bool is_near_ep = false;
};

/// Gap tolerance defaults to 1e-8 * kappa (same threshold that marks an
/// eigensystem as near-defective).
EpReport ep_report(const HamiltonianParams& params, double gap_tol = -1.0);

}  // namespace wer
