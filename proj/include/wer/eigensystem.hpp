#pragma once

#include "wer/hamiltonian.hpp"
#include "wer/mat2.hpp"

namespace wer {

/// Which sign of the principal complex square root produced the eigenvalue.
enum class RootBranch : int { Plus = +1, Minus = -1 };

/// Biorthogonal eigensystem of a 2x2 complex matrix.
///
/// Right eigenvectors are unit Euclidean norm with the first component of
/// magnitude above 1e-12 made real-positive; left eigenvectors are row
/// covectors carrying the full biorthogonal scale, so pair(l_n, r_m) =
/// delta_nm away from degeneracy. near_defective flags a gap below
/// tolerance: vectors are still returned but are unreliable there.
struct EigenSystem {
  cplx e1, e2;
  Vec2 r1, r2;
  Vec2 l1, l2;
  RootBranch branch_tag = RootBranch::Plus;  // branch that produced e1
  bool near_defective = false;
  double gap = 0.0;

  cplx e(int band) const { return band == 1 ? e1 : e2; }
  const Vec2& r(int band) const { return band == 1 ? r1 : r2; }
  const Vec2& l(int band) const { return band == 1 ? l1 : l2; }
};

/// Closed-form eigensystem. A negative tolerance selects the default
/// 1e-8 * max(1, ||H||_F); e1 always takes the + branch of the square root.
EigenSystem eigensystem(const Mat2& h, double near_defective_tol = -1.0);

/// Eigensystem of build_hamiltonian(params) with tolerance 1e-8 * kappa.
EigenSystem eigensystem_of(const HamiltonianParams& params);

}  // namespace wer
