#include "mcx/circuit.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace mcx {

namespace {

constexpr double kPi = std::numbers::pi;

const Mat2& x_matrix() {
  static const Mat2 x = (Mat2() << 0, 1, 1, 0).finished();
  return x;
}

struct WireVisitor {
  std::vector<qubit_t> operator()(const SingleQubitGate& g) const { return {g.target}; }
  std::vector<qubit_t> operator()(const CnotGate& g) const { return {g.control, g.target}; }
  std::vector<qubit_t> operator()(const McxGate& g) const {
    std::vector<qubit_t> w = g.controls;
    w.push_back(g.target);
    return w;
  }
  std::vector<qubit_t> operator()(const McuGate& g) const {
    std::vector<qubit_t> w = g.controls;
    w.push_back(g.target);
    return w;
  }
};

}  // namespace

std::vector<qubit_t> gate_wires(const Gate& g) { return std::visit(WireVisitor{}, g); }

bool is_macro(const Gate& g) {
  return std::holds_alternative<McxGate>(g) || std::holds_alternative<McuGate>(g);
}

std::uint64_t asap_depth(const Circuit& c) {
  std::vector<std::uint64_t> frontier(c.width, 0);
  std::uint64_t depth = 0;
  for (const Gate& g : c.gates) {
    if (is_macro(g)) throw std::invalid_argument("asap_depth: circuit contains a macro gate");
    std::uint64_t slot = 0;
    for (qubit_t w : gate_wires(g)) {
      if (w >= c.width) throw std::invalid_argument("asap_depth: wire out of range");
      slot = std::max(slot, frontier[w]);
    }
    ++slot;
    for (qubit_t w : gate_wires(g)) frontier[w] = slot;
    depth = std::max(depth, slot);
  }
  return depth;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    if (is_macro(g)) throw std::invalid_argument("gate_counts: circuit contains a macro gate");
    if (std::holds_alternative<CnotGate>(g))
      ++counts.cnots;
    else
      ++counts.singles;
  }
  return counts;
}

Circuit inverse(const Circuit& c) {
  Circuit inv;
  inv.width = c.width;
  inv.roles = c.roles;
  inv.global_phase = -c.global_phase;
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    if (const auto* s = std::get_if<SingleQubitGate>(&*it)) {
      inv.add(SingleQubitGate{s->target, s->u.adjoint()});
    } else if (const auto* u = std::get_if<McuGate>(&*it)) {
      inv.add(McuGate{u->controls, u->polarity, u->u.adjoint(), u->target});
    } else {
      inv.add(*it);
    }
  }
  return inv;
}

std::vector<Gate> conjugate_white_controls(const Gate& g) {
  const std::vector<qubit_t>* controls = nullptr;
  const std::vector<bool>* polarity = nullptr;
  if (const auto* mcx = std::get_if<McxGate>(&g)) {
    controls = &mcx->controls;
    polarity = &mcx->polarity;
  } else if (const auto* mcu = std::get_if<McuGate>(&g)) {
    controls = &mcu->controls;
    polarity = &mcu->polarity;
  } else {
    throw std::invalid_argument("conjugate_white_controls: expected a macro gate");
  }
  std::vector<qubit_t> white;
  for (std::size_t i = 0; i < controls->size(); ++i)
    if (!(*polarity)[i]) white.push_back((*controls)[i]);
  if (white.empty())
    throw std::invalid_argument("conjugate_white_controls: gate has no white control");

  std::vector<Gate> out;
  for (qubit_t w : white) out.push_back(SingleQubitGate{w, x_matrix()});
  std::vector<bool> all_black(controls->size(), true);
  if (const auto* mcx = std::get_if<McxGate>(&g)) {
    if (controls->size() == 1)
      out.push_back(CnotGate{(*controls)[0], mcx->target});
    else
      out.push_back(McxGate{*controls, all_black, mcx->target});
  } else {
    const auto* mcu = std::get_if<McuGate>(&g);
    out.push_back(McuGate{*controls, all_black, mcu->u, mcu->target});
  }
  for (qubit_t w : white) out.push_back(SingleQubitGate{w, x_matrix()});
  return out;
}

std::vector<std::string> validate(const Circuit& c) {
  std::vector<std::string> violations;
  if (!c.roles.empty() && c.roles.size() != c.width)
    violations.push_back("roles size does not match width");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const std::string at = "gate " + std::to_string(i) + ": ";
    for (qubit_t w : gate_wires(c.gates[i]))
      if (w >= c.width) violations.push_back(at + "wire out of range");
    if (const auto* cx = std::get_if<CnotGate>(&c.gates[i])) {
      if (cx->control == cx->target) violations.push_back(at + "control equals target");
    } else if (is_macro(c.gates[i])) {
      const auto& controls = std::holds_alternative<McxGate>(c.gates[i])
                                 ? std::get<McxGate>(c.gates[i]).controls
                                 : std::get<McuGate>(c.gates[i]).controls;
      const auto& polarity = std::holds_alternative<McxGate>(c.gates[i])
                                 ? std::get<McxGate>(c.gates[i]).polarity
                                 : std::get<McuGate>(c.gates[i]).polarity;
      const qubit_t target = std::holds_alternative<McxGate>(c.gates[i])
                                 ? std::get<McxGate>(c.gates[i]).target
                                 : std::get<McuGate>(c.gates[i]).target;
      if (controls.empty()) violations.push_back(at + "macro gate has no controls");
      if (polarity.size() != controls.size())
        violations.push_back(at + "polarity length does not match controls");
      if (std::find(controls.begin(), controls.end(), target) != controls.end())
        violations.push_back(at + "target appears among controls");
      auto sorted = controls;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        violations.push_back(at + "duplicate control wire");
    }
  }
  return violations;
}

namespace {

// ZYZ angles (theta, phi, lambda) and leftover phase delta with
// u = e^{i delta} * U(theta, phi, lambda) in the OpenQASM convention
// U(t,p,l) = [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]].
struct ZyzAngles {
  double theta, phi, lambda, delta;
};

ZyzAngles zyz_decompose(const Mat2& u) {
  const double det_phase = std::arg(u.determinant()) / 2.0;
  const Mat2 v = std::exp(cplx(0, -det_phase)) * u;
  const double mag_a = std::abs(v(0, 0));
  const double mag_b = std::abs(v(1, 0));
  const double theta = 2.0 * std::atan2(mag_b, mag_a);
  double phi = 0.0, lambda = 0.0;
  constexpr double kTiny = 1e-14;
  if (mag_b < kTiny) {
    // Diagonal-like: only phi+lambda matters; put it all in phi.
    phi = -2.0 * std::arg(v(0, 0));
  } else if (mag_a < kTiny) {
    // Anti-diagonal-like: only phi-lambda matters; put it all in lambda.
    lambda = -2.0 * std::arg(v(1, 0));
  } else {
    const double sum = -2.0 * std::arg(v(0, 0));
    const double diff = 2.0 * std::arg(v(1, 0));
    phi = (sum + diff) / 2.0;
    lambda = (sum - diff) / 2.0;
  }
  return {theta, phi, lambda, det_phase - (phi + lambda) / 2.0};
}

// Angles that are small integer multiples of pi/d print as exact
// pi-expressions so common gates stay readable and byte-stable.
std::string format_angle(double v) {
  if (std::abs(v) < 1e-12) return "0";
  for (int d : {1, 2, 3, 4, 6, 8, 12, 16}) {
    const double scaled = v * d / kPi;
    const double rounded = std::round(scaled);
    if (rounded != 0.0 && std::abs(scaled - rounded) < 1e-12) {
      const long m = static_cast<long>(rounded);
      std::string s = m < 0 ? "-" : "";
      if (std::labs(m) != 1) s += std::to_string(std::labs(m)) + "*";
      s += "pi";
      if (d != 1) s += "/" + std::to_string(d);
      return s;
    }
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::string out;
  out.reserve(64 + 32 * c.gates.size());
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "gate u(theta,phi,lambda) q { U(theta,phi,lambda) q; }\n";

  std::string body;
  double phase = c.global_phase;
  for (const Gate& g : c.gates) {
    if (is_macro(g)) throw std::invalid_argument("export_qasm: circuit contains a macro gate");
    if (const auto* cx = std::get_if<CnotGate>(&g)) {
      body += "cx q[" + std::to_string(cx->control) + "],q[" + std::to_string(cx->target) +
              "];\n";
    } else {
      const auto& s = std::get<SingleQubitGate>(g);
      const ZyzAngles a = zyz_decompose(s.u);
      phase += a.delta;
      body += "u(" + format_angle(a.theta) + "," + format_angle(a.phi) + "," +
              format_angle(a.lambda) + ") q[" + std::to_string(s.target) + "];\n";
    }
  }

  if (std::abs(std::remainder(phase, 2.0 * kPi)) > 1e-12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "// global phase: %.15g\n",
                  std::remainder(phase, 2.0 * kPi));
    out += buf;
  }
  out += "qreg q[" + std::to_string(c.width) + "];\n";
  out += body;
  return out;
}

}  // namespace mcx
