#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace mcx {

using qubit_t = std::uint32_t;
using Mat2 = Eigen::Matrix2cd;
using cplx = std::complex<double>;

// Basis-level gates. A fully lowered circuit contains only these two.
struct SingleQubitGate {
  qubit_t target;
  Mat2 u;
};

struct CnotGate {
  qubit_t control;
  qubit_t target;
};

// Macro-level gates. Controls carry a per-control polarity flag:
// true = activates on |1> (black), false = activates on |0> (white).
struct McxGate {
  std::vector<qubit_t> controls;
  std::vector<bool> polarity;  // same length as controls
  qubit_t target;
};

struct McuGate {
  std::vector<qubit_t> controls;
  std::vector<bool> polarity;
  Mat2 u;
  qubit_t target;
};

using Gate = std::variant<SingleQubitGate, CnotGate, McxGate, McuGate>;

enum class WireRole : std::uint8_t {
  Free = 0,
  Control,
  Target,
  ZeroedAncilla,
  BorrowedAncilla,
};

// Flat gate list over a fixed-width wire set. Wire roles are annotations
// describing the circuit-level contract; they do not affect semantics.
struct Circuit {
  std::uint32_t width = 0;
  std::vector<Gate> gates;
  std::vector<WireRole> roles;  // size width (or empty = all Free)
  double global_phase = 0.0;    // accumulated phase, radians

  void add(Gate g) { gates.push_back(std::move(g)); }
  std::size_t size() const { return gates.size(); }
};

struct GateCounts {
  std::uint64_t cnots = 0;
  std::uint64_t singles = 0;
};

// Wires touched by a gate, in a fixed order (controls first, target last).
std::vector<qubit_t> gate_wires(const Gate& g);
bool is_macro(const Gate& g);

// Earliest-slot layering: each gate lands one past the deepest frontier
// among its wires. Rejects macro gates and out-of-range wires.
std::uint64_t asap_depth(const Circuit& c);

// CNOT / single-qubit tallies of a fully lowered circuit.
GateCounts gate_counts(const Circuit& c);

// Exact inverse: reversed gate order, single-qubit/ McuGate matrices
// replaced by their adjoints. MCX and CNOT are self-inverse.
Circuit inverse(const Circuit& c);

// Replace a macro gate holding white controls by X-conjugation: X on the
// white wires, the all-black gate, X again. All-black gates pass through.
std::vector<Gate> conjugate_white_controls(const Gate& g);

// Structural checks; returns one message per violation, empty when clean.
std::vector<std::string> validate(const Circuit& c);

// OpenQASM 2.0 text: u(theta,phi,lambda) for singles, cx for CNOTs.
// Byte-deterministic; the circuit's global phase lands in a comment.
// Rejects macro gates.
std::string export_qasm(const Circuit& c);

}  // namespace mcx
