#include "mcx/gate_algebra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mcx {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

const Mat2& mat_i() {
  static const Mat2 m = Mat2::Identity();
  return m;
}

const Mat2& mat_x() {
  static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
  return m;
}

const Mat2& mat_h() {
  static const Mat2 m = (Mat2() << 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2,
                         1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2)
                            .finished();
  return m;
}

const Mat2& mat_t() {
  static const Mat2 m = (Mat2() << 1, 0, 0, std::polar(1.0, kPi / 4)).finished();
  return m;
}

const Mat2& mat_tdg() {
  static const Mat2 m = (Mat2() << 1, 0, 0, std::polar(1.0, -kPi / 4)).finished();
  return m;
}

Mat2 mat_rz(double theta) {
  return (Mat2() << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2))
      .finished();
}

Mat2 mat_ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return (Mat2() << c, -s, s, c).finished();
}

Mat2 mat_phase(double delta) {
  return (Mat2() << 1, 0, 0, std::polar(1.0, delta)).finished();
}

AbcTriple abc_decompose(const Mat2& w) {
  const cplx det = w.determinant();
  if (std::abs(det - cplx(1, 0)) > 1e-10) {
    std::ostringstream msg;
    msg << "abc_decompose: input must be special unitary, determinant = " << det;
    throw std::invalid_argument(msg.str());
  }
  // W = Rz(alpha) Ry(theta) Rz(beta):
  //   W(0,0) = cos(theta/2) e^{-i(alpha+beta)/2}
  //   W(1,0) = sin(theta/2) e^{+i(alpha-beta)/2}
  const double mag_c = std::abs(w(0, 0));
  const double mag_s = std::abs(w(1, 0));
  const double theta = 2.0 * std::atan2(mag_s, mag_c);
  double alpha = 0.0, beta = 0.0;
  constexpr double kTiny = 1e-14;
  if (mag_s < kTiny) {
    alpha = beta = -std::arg(w(0, 0));
  } else if (mag_c < kTiny) {
    alpha = std::arg(w(1, 0));
    beta = -alpha;
  } else {
    const double sum = -2.0 * std::arg(w(0, 0));
    const double diff = 2.0 * std::arg(w(1, 0));
    alpha = (sum + diff) / 2.0;
    beta = (sum - diff) / 2.0;
  }
  AbcTriple abc;
  abc.a = mat_rz(alpha) * mat_ry(theta / 2);
  abc.b = mat_ry(-theta / 2) * mat_rz(-(alpha + beta) / 2);
  abc.c = mat_rz((beta - alpha) / 2);
  return abc;
}

Mat2 principal_root(const Mat2& u, unsigned k) {
  if (k == 0) return u;
  const bool scalar = std::abs(u(0, 1)) + std::abs(u(1, 0)) < 1e-13 &&
                      std::abs(u(0, 0) - u(1, 1)) < 1e-13;
  if (scalar) {
    const double phi = std::arg(u(0, 0));
    return std::polar(1.0, phi / std::exp2(k)) * Mat2::Identity();
  }
  const Eigen::ComplexEigenSolver<Mat2> solver(u);
  Mat2 vectors = solver.eigenvectors();
  vectors.col(0).normalize();
  vectors.col(1).normalize();
  Eigen::Vector2cd roots;
  for (int i = 0; i < 2; ++i)
    roots(i) = std::polar(1.0, std::arg(solver.eigenvalues()(i)) / std::exp2(k));
  return vectors * roots.asDiagonal() * vectors.inverse();
}

Circuit controlled_unitary(const Mat2& u, qubit_t control, qubit_t target) {
  if (control == target)
    throw std::invalid_argument("controlled_unitary: control equals target");
  Circuit c;
  c.width = std::max(control, target) + 1;
  if ((u - mat_i()).cwiseAbs().maxCoeff() < 1e-12) return c;
  if ((u - mat_x()).cwiseAbs().maxCoeff() < 1e-12) {
    c.add(CnotGate{control, target});
    return c;
  }
  const double delta = std::arg(u.determinant()) / 2.0;
  const Mat2 w = std::polar(1.0, -delta) * u;
  const AbcTriple abc = abc_decompose(w);
  const auto keep = [](const Mat2& m) {
    return (m - mat_i()).cwiseAbs().maxCoeff() > 1e-12;
  };
  if (keep(abc.c)) c.add(SingleQubitGate{target, abc.c});
  c.add(CnotGate{control, target});
  if (keep(abc.b)) c.add(SingleQubitGate{target, abc.b});
  c.add(CnotGate{control, target});
  if (keep(abc.a)) c.add(SingleQubitGate{target, abc.a});
  if (std::abs(delta) > 1e-12) c.add(SingleQubitGate{control, mat_phase(delta)});
  return c;
}

Circuit toffoli_circuit(qubit_t c1, qubit_t c2, qubit_t target) {
  if (c1 == c2 || c1 == target || c2 == target)
    throw std::invalid_argument("toffoli_circuit: wires must be distinct");
  Circuit c;
  c.width = std::max({c1, c2, target}) + 1;
  c.add(SingleQubitGate{target, mat_h()});
  c.add(CnotGate{c2, target});
  c.add(SingleQubitGate{target, mat_tdg()});
  c.add(CnotGate{c1, target});
  c.add(SingleQubitGate{target, mat_t()});
  c.add(CnotGate{c2, target});
  c.add(SingleQubitGate{target, mat_tdg()});
  c.add(CnotGate{c1, target});
  c.add(SingleQubitGate{c2, mat_t()});
  c.add(SingleQubitGate{target, mat_t()});
  c.add(SingleQubitGate{target, mat_h()});
  c.add(CnotGate{c1, c2});
  c.add(SingleQubitGate{c1, mat_t()});
  c.add(SingleQubitGate{c2, mat_tdg()});
  c.add(CnotGate{c1, c2});
  return c;
}

const std::uint64_t d_tof = asap_depth(toffoli_circuit(0, 1, 2));

}  // namespace mcx
