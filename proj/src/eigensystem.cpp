#include "wer/eigensystem.hpp"

#include <cmath>

namespace wer {
namespace {

// Right eigenvector for eigenvalue e of [[a,b],[c,d]]: both (b, e-a) and
// (e-d, c) solve (H - eI)v = 0; pick the larger to stay away from the
// spurious zero candidate.
Vec2 right_candidate(const Mat2& h, cplx e) {
  const Vec2 v1{h(0, 1), e - h(0, 0)};
  const Vec2 v2{e - h(1, 1), h(1, 0)};
  Vec2 v = v1.norm2() >= v2.norm2() ? v1 : v2;
  if (v.norm2() == 0.0) v = Vec2{cplx(1), cplx(0)};  // scalar matrix
  return v;
}

// Left row covector for eigenvalue e: (c, e-a) or (e-d, b).
Vec2 left_candidate(const Mat2& h, cplx e) {
  const Vec2 v1{h(1, 0), e - h(0, 0)};
  const Vec2 v2{e - h(1, 1), h(0, 1)};
  Vec2 v = v1.norm2() >= v2.norm2() ? v1 : v2;
  if (v.norm2() == 0.0) v = Vec2{cplx(1), cplx(0)};
  return v;
}

// Unit norm, first component of magnitude > 1e-12 made real-positive.
Vec2 fix_gauge(Vec2 v) {
  const double n = v.norm();
  v = v * (1.0 / n);
  const cplx lead = std::abs(v.a) > 1e-12 ? v.a : v.b;
  const double la = std::abs(lead);
  if (la > 0.0) v = v * (std::conj(lead) / la);
  return v;
}

}  // namespace

EigenSystem eigensystem(const Mat2& h, double near_defective_tol) {
  if (near_defective_tol < 0.0)
    near_defective_tol = 1e-8 * std::max(1.0, h.frobenius_norm());

  const cplx half_tr = 0.5 * h.trace();
  const cplx s = std::sqrt(half_tr * half_tr - h.det());  // principal branch

  EigenSystem es;
  es.e1 = half_tr + s;
  es.e2 = half_tr - s;
  es.branch_tag = RootBranch::Plus;
  es.gap = std::abs(es.e1 - es.e2);
  es.near_defective = es.gap < near_defective_tol;

  es.r1 = fix_gauge(right_candidate(h, es.e1));
  es.r2 = fix_gauge(right_candidate(h, es.e2));

  // Degenerate diagonal matrices need explicit basis vectors: both
  // candidates above collapse to the same direction.
  if (es.gap == 0.0 && h(0, 1) == cplx(0) && h(1, 0) == cplx(0)) {
    es.r1 = Vec2{cplx(1), cplx(0)};
    es.r2 = Vec2{cplx(0), cplx(1)};
    es.l1 = Vec2{cplx(1), cplx(0)};
    es.l2 = Vec2{cplx(0), cplx(1)};
    return es;
  }

  Vec2 l1 = left_candidate(h, es.e1);
  Vec2 l2 = left_candidate(h, es.e2);
  const cplx s1 = pair(l1, es.r1);
  const cplx s2 = pair(l2, es.r2);
  // At an exact EP the biorthogonal scale vanishes; leave the raw covector
  // (already flagged near_defective) rather than dividing by zero.
  es.l1 = s1 != cplx(0) ? l1 * (1.0 / s1) : l1 * (1.0 / l1.norm());
  es.l2 = s2 != cplx(0) ? l2 * (1.0 / s2) : l2 * (1.0 / l2.norm());
  return es;
}

EigenSystem eigensystem_of(const HamiltonianParams& params) {
  return eigensystem(build_hamiltonian(params), 1e-8 * params.kappa);
}

}  // namespace wer
