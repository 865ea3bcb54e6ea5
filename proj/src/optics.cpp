#include "wer/optics.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "wer/errors.hpp"
#include "wer/evolution.hpp"

namespace wer {

Mat2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat2{{cplx(c), cplx(s), cplx(-s), cplx(c)}};
}

Mat2 phase_plus(double theta) { return Mat2::diag(std::polar(1.0, theta), cplx(1)); }
Mat2 phase_minus(double theta) { return Mat2::diag(cplx(1), std::polar(1.0, theta)); }

Mat2 qwp(double angle) {
  return rotation(-angle) * Mat2::diag(cplx(1), cplx(0, 1)) * rotation(angle);
}

Mat2 hwp(double angle) {
  const double c = std::cos(2.0 * angle), s = std::sin(2.0 * angle);
  return Mat2{{cplx(c), cplx(s), cplx(s), cplx(-c)}};
}

Mat2 loss_element(double theta_h, double theta_v) {
  return Mat2{{cplx(0), cplx(std::sin(2.0 * theta_v)), cplx(std::sin(2.0 * theta_h)), cplx(0)}};
}

Mat2 jones(const OpticalElement& element) {
  if (!std::isfinite(element.angle)) throw UnitError("jones: angle must be finite");
  switch (element.kind) {
    case ElementKind::Qwp: return qwp(element.angle);
    case ElementKind::Hwp: return hwp(element.angle);
    case ElementKind::Rotation: return rotation(element.angle);
    case ElementKind::PhasePlus: return phase_plus(element.angle);
    case ElementKind::PhaseMinus: return phase_minus(element.angle);
  }
  throw UnitError("jones: unknown element kind");
}

namespace detail {

double canonical_plate_angle(double a) {
  const double r = a - pi * std::floor(a / pi + 0.5);
  return r >= 0.5 * pi ? r - pi : r;  // guard the floor rounding edge
}

// QWP(a)*HWP(t)*QWP(b) spans SU(2): conjugating by C = exp(i pi/4 sx) turns
// the plate axes into equatorial Bloch axes, where the sandwich collapses
// to an exact ZYZ Euler product Rz(l_a) Ry(l_a + l_b - 2 l_t) Rz(-l_b)
// with l = pi/2 - 2*angle. Solving the Euler angles of C v C^dag gives the
// plate angles in closed form.
QhqAngles solve_qhq(const Mat2& v) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Mat2 c_frame{{cplx(inv_sqrt2), cplx(0, inv_sqrt2), cplx(0, inv_sqrt2), cplx(inv_sqrt2)}};
  const Mat2 u = c_frame * v * c_frame.adjoint();

  const double c2 = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
  const double sum = -std::arg(u(0, 0));  // (c1+c3)/2
  const double dif = std::arg(u(1, 0));   // (c1-c3)/2
  const double c1 = sum + dif;
  const double c3 = sum - dif;

  QhqAngles a;
  a.qwp_a = canonical_plate_angle(0.25 * pi - 0.5 * c1);
  a.hwp = canonical_plate_angle(0.25 * pi - 0.25 * (c1 - c3 - c2));
  a.qwp_b = canonical_plate_angle(0.25 * pi + 0.5 * c3);
  return a;
}

}  // namespace detail

namespace {

// SU(2) part and half-determinant phase of a unitary w = e^{i chi} v.
std::pair<Mat2, double> su2_part(const Mat2& w) {
  const double chi = 0.5 * std::arg(w.det());
  return {std::polar(1.0, -chi) * w, chi};
}

// Proper-rotation SVD of a real upper-triangular matrix with non-negative
// diagonal: M = S(g1) diag(mu1, mu2) S(g2), mu1 >= mu2 >= 0.
struct RealSvd {
  double g1, g2, mu1, mu2;
};

RealSvd svd_triangular(double m11, double m12, double m22) {
  RealSvd r{0.0, 0.0, 0.0, 0.0};
  const double a = m11 * m11 + m12 * m12;
  const double b = m12 * m22;
  const double d = m22 * m22;
  if (a + d == 0.0) return r;
  const double omega = 0.5 * std::atan2(2.0 * b, a - d);
  r.g1 = -omega;
  // N = S(-g1) M has rows mu1*(cos g2, sin g2) and mu2*(-sin g2, cos g2).
  const double cg = std::cos(-r.g1), sg = std::sin(-r.g1);
  const double n00 = cg * m11, n01 = cg * m12 + sg * m22;
  const double n10 = -sg * m11, n11 = -sg * m12 + cg * m22;
  r.mu1 = std::hypot(n00, n01);
  if (r.mu1 > 0.0) {
    r.g2 = std::atan2(n01, n00);
    r.mu2 = std::max(0.0, -std::sin(r.g2) * n10 + std::cos(r.g2) * n11);
  }
  return r;
}

}  // namespace

std::pair<WavePlateProgram, DecompositionWorkspace> decompose(const Mat2& target) {
  if (target.max_abs() == 0.0) throw SingularInput("decompose: target operator is zero");
  for (const auto& e : target.m)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw SingularInput("decompose: target has non-finite entries");

  WavePlateProgram prog;
  DecompositionWorkspace ws;

  const double sigma_max = singular_values(target)[0];
  prog.scale = sigma_max > 1.0 ? 1.0 / sigma_max : 1.0;
  Mat2 t = target * cplx(prog.scale);

  // The pivot arctan|t21/t11| needs a nonzero first column; otherwise fold
  // a quarter-turn swap into R1 and decompose the swapped matrix.
  if (std::abs(t(0, 0)) < 1e-300 && std::abs(t(1, 0)) < 1e-300) {
    ws.column_swapped = true;
    t = t * rotation(0.5 * pi);
  }

  for (int i = 0; i < 4; ++i) {
    ws.abs_t[i] = std::abs(t.m[static_cast<std::size_t>(i)]);
    ws.arg_t[i] = ws.abs_t[i] > 0.0 ? std::arg(t.m[static_cast<std::size_t>(i)]) : 0.0;
  }
  const double phi11 = ws.arg_t[0], phi21 = ws.arg_t[2];
  const double alpha = std::atan2(ws.abs_t[2], ws.abs_t[0]);
  ws.pivot_angle = alpha;
  const double ca = std::cos(alpha), sa = std::sin(alpha);

  // T' = S(alpha) P+(-phi11) P-(-phi21) T: upper triangular, t'11 real >= 0.
  const cplx t12_hat = t(0, 1) * std::polar(1.0, -phi11);
  const cplx t22_hat = t(1, 1) * std::polar(1.0, -phi21);
  ws.tprime_11 = ca * ws.abs_t[0] + sa * ws.abs_t[2];
  ws.tprime_12 = ca * t12_hat + sa * t22_hat;
  ws.tprime_22 = -sa * t12_hat + ca * t22_hat;

  const double chi = ws.tprime_12 != cplx(0) ? std::arg(ws.tprime_12) : 0.0;
  const double beta = ws.tprime_22 != cplx(0) ? std::arg(ws.tprime_22) : 0.0;

  // M = P+(-chi) P-(-beta) T' P+(chi): real triangular with non-negative
  // entries, so its singular-value factors are proper rotations.
  ws.ttilde_11 = ws.tprime_11;
  ws.ttilde_12 = std::abs(ws.tprime_12);
  ws.ttilde_22 = std::abs(ws.tprime_22);

  const double a2 = ws.ttilde_11 * ws.ttilde_11;
  const double b2 = ws.ttilde_12 * ws.ttilde_12;
  const double d2 = ws.ttilde_22 * ws.ttilde_22;
  ws.p[0] = ws.ttilde_12 * ws.ttilde_22;
  ws.p[1] = ws.ttilde_11 * ws.ttilde_12;
  ws.q[0] = a2 - d2 + b2;
  ws.q[1] = a2 - d2 - b2;

  const RealSvd svd = svd_triangular(ws.ttilde_11, ws.ttilde_12, ws.ttilde_22);
  ws.gamma1 = svd.g1;
  ws.gamma2 = svd.g2;
  ws.mu1 = std::min(svd.mu1, 1.0);
  ws.mu2 = std::min(svd.mu2, ws.mu1);

  prog.theta_h = 0.5 * std::asin(ws.mu1);
  prog.theta_v = 0.5 * std::asin(ws.mu2);

  const Mat2 w2 = phase_minus(phi21) * phase_plus(phi11) * rotation(-alpha) * phase_minus(beta) *
                  phase_plus(chi) * rotation(ws.gamma1) * hwp(0.25 * pi);
  Mat2 w1 = rotation(ws.gamma2) * phase_plus(-chi);
  if (ws.column_swapped) w1 = w1 * rotation(-0.5 * pi);

  const auto [v2, chi2] = su2_part(w2);
  const auto [v1, chi1] = su2_part(w1);
  const auto a_left = detail::solve_qhq(v2);
  const auto a_right = detail::solve_qhq(v1);

  prog.phi3 = a_left.qwp_a;
  prog.theta2 = a_left.hwp;
  prog.phi4 = a_left.qwp_b;
  prog.phi1 = a_right.qwp_a;
  prog.theta1 = a_right.hwp;
  prog.phi2 = a_right.qwp_b;
  prog.global_phase = wrap_angle(chi1 + chi2);
  return {prog, ws};
}

Mat2 reconstruct(const WavePlateProgram& program) {
  for (double a : {program.phi1, program.phi2, program.phi3, program.phi4, program.theta1,
                   program.theta2, program.theta_h, program.theta_v, program.global_phase})
    if (!std::isfinite(a)) throw UnitError("reconstruct: non-finite angle");
  const Mat2 r2 = qwp(program.phi3) * hwp(program.theta2) * qwp(program.phi4);
  const Mat2 r1 = qwp(program.phi1) * hwp(program.theta1) * qwp(program.phi2);
  return std::polar(1.0, program.global_phase) *
         (r2 * loss_element(program.theta_h, program.theta_v) * r1);
}

WavePlateProgram compile_evolution(const HamiltonianParams& params, double t) {
  return decompose(propagator(params, t).u).first;
}

std::string program_to_json(const WavePlateProgram& p) {
  nlohmann::ordered_json j;
  j["phi1"] = p.phi1;
  j["phi2"] = p.phi2;
  j["phi3"] = p.phi3;
  j["phi4"] = p.phi4;
  j["theta1"] = p.theta1;
  j["theta2"] = p.theta2;
  j["thetaH"] = p.theta_h;
  j["thetaV"] = p.theta_v;
  j["global_phase"] = p.global_phase;
  j["scale"] = p.scale;
  return j.dump(2) + "\n";
}

WavePlateProgram program_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("program_from_json: invalid JSON");
  WavePlateProgram p;
  try {
    p.phi1 = j.at("phi1").get<double>();
    p.phi2 = j.at("phi2").get<double>();
    p.phi3 = j.at("phi3").get<double>();
    p.phi4 = j.at("phi4").get<double>();
    p.theta1 = j.at("theta1").get<double>();
    p.theta2 = j.at("theta2").get<double>();
    p.theta_h = j.at("thetaH").get<double>();
    p.theta_v = j.at("thetaV").get<double>();
    p.global_phase = j.at("global_phase").get<double>();
    p.scale = j.at("scale").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("program_from_json: ") + e.what());
  }
  return p;
}

}  // namespace wer
