#pragma once

#include <string>
#include <utility>

#include "wer/hamiltonian.hpp"
#include "wer/mat2.hpp"

namespace wer {

/// Jones-matrix building blocks. Wave plates follow the rotated-plate
/// convention W(angle) = S(-angle) * diag(1, e^{i delta}) * S(angle) with
/// S(t) = [[cos t, sin t], [-sin t, cos t]]; delta = pi/2 for a QWP and pi
/// for a HWP, so HWP(t) = [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
enum class ElementKind { Qwp, Hwp, Rotation, PhasePlus, PhaseMinus };

struct OpticalElement {
  ElementKind kind;
  double angle;
};

Mat2 jones(const OpticalElement& element);

Mat2 rotation(double theta);     // S(theta)
Mat2 phase_plus(double theta);   // diag(e^{i theta}, 1)
Mat2 phase_minus(double theta);  // diag(1, e^{i theta})
Mat2 qwp(double angle);
Mat2 hwp(double angle);
/// Anti-diagonal loss element [[0, sin 2 thetaV], [sin 2 thetaH, 0]]
/// (two beam displacers with a HWP in each arm).
Mat2 loss_element(double theta_h, double theta_v);

/// Wave-plate settings realizing a target 2x2 operator as
///   e^{i global_phase} * R2(phi3,theta2,phi4) * L(thetaH,thetaV)
///                      * R1(phi1,theta1,phi2)  =  scale * T,
/// each R a QWP*HWP*QWP sandwich. scale = 1/sigma_max(T) when the target
/// exceeds unit gain, else 1. The residual global phase cannot be folded
/// into the eight plate angles (their product has a fixed determinant
/// phase) and is carried explicitly, as the P+- factors do in the analytic
/// construction.
struct WavePlateProgram {
  double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0, phi4 = 0.0;  // QWP angles
  double theta1 = 0.0, theta2 = 0.0;                      // HWP angles
  double theta_h = 0.0, theta_v = 0.0;                    // loss HWP angles
  double global_phase = 0.0;
  double scale = 1.0;
};

/// Every intermediate of the decomposition, exposed for testing.
struct DecompositionWorkspace {
  double abs_t[4] = {0, 0, 0, 0};  // row-major |t_ij| of the scaled working matrix
  double arg_t[4] = {0, 0, 0, 0};
  bool column_swapped = false;  // degenerate pivot handled by a folded swap
  double pivot_angle = 0.0;     // arctan |t21/t11|
  // Upper-triangular residual after phase stripping and the pivot rotation.
  double tprime_11 = 0.0;
  cplx tprime_12{0.0, 0.0};
  cplx tprime_22{0.0, 0.0};
  // Real non-negative triangular entries fed to the loss extraction.
  double ttilde_11 = 0.0, ttilde_12 = 0.0, ttilde_22 = 0.0;
  double p[2] = {0, 0};
  double q[2] = {0, 0};
  double mu1 = 0.0, mu2 = 0.0;  // singular values of the residual factor
  double gamma1 = 0.0, gamma2 = 0.0;
};

std::pair<WavePlateProgram, DecompositionWorkspace> decompose(const Mat2& target);

Mat2 reconstruct(const WavePlateProgram& program);

WavePlateProgram compile_evolution(const HamiltonianParams& params, double t);

std::string program_to_json(const WavePlateProgram& program);
WavePlateProgram program_from_json(const std::string& text);

namespace detail {
/// Angles (a, t, b) with qwp(a)*hwp(t)*qwp(b) = v for any v in SU(2);
/// angles canonicalized to [-pi/2, pi/2).
struct QhqAngles {
  double qwp_a, hwp, qwp_b;
};
QhqAngles solve_qhq(const Mat2& v);
double canonical_plate_angle(double a);  // reduce mod pi into [-pi/2, pi/2)
}  // namespace detail

}  // namespace wer
