#include "wer/hamiltonian.hpp"

#include <cmath>

#include "wer/eigensystem.hpp"
#include "wer/errors.hpp"

namespace wer {

void HamiltonianParams::validate() const {
  if (!(kappa > 0.0)) throw UnitError("kappa must be > 0 (it sets the unit scale)");
  if (kappa0 < 0.0 || kappa1 < 0.0) throw UnitError("decay rates kappa0, kappa1 must be >= 0");
  if (!std::isfinite(delta) || !std::isfinite(omega.real()) || !std::isfinite(omega.imag()))
    throw UnitError("delta and omega must be finite");
}

double HamiltonianParams::distance_to_wer() const {
  const auto k = kvec();
  const double radial = std::hypot(k[0], k[1]) - wer_radius();
  return std::hypot(radial, k[2]);
}

Mat2 build_hamiltonian(const HamiltonianParams& params) {
  params.validate();
  return Mat2{{cplx(params.delta, -0.5 * params.kappa0), std::conj(params.omega),  //
               params.omega, cplx(0.0, -0.5 * params.kappa1)}};
}

Mat2 dirac_hamiltonian(double kx, double ky, double kz) {
  return Mat2{{cplx(kz), cplx(kx, -ky), cplx(kx, ky), cplx(-kz)}};
}

EpReport ep_report(const HamiltonianParams& params, double gap_tol) {
  params.validate();
  if (gap_tol < 0.0) gap_tol = 1e-8 * params.kappa;
  EpReport rep;
  rep.distance_to_wer = params.distance_to_wer();
  const auto es = eigensystem(build_hamiltonian(params), gap_tol);
  rep.eigenvalue_gap = es.gap;
  rep.is_near_ep = es.gap < gap_tol;
  return rep;
}

}  // namespace wer
