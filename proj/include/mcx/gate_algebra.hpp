#pragma once

#include "mcx/circuit.hpp"

namespace mcx {

struct AbcTriple {
  Mat2 a, b, c;
};

// W = A X B X C with A B C = I; W must be special unitary.
AbcTriple abc_decompose(const Mat2& w);

// Principal 2^k-th root: eigenphases taken in (-pi, pi], so the root's
// phases lie in (-pi/2^k, pi/2^k] and ||root - I|| <= pi / 2^k.
Mat2 principal_root(const Mat2& u, unsigned k);

// Lowered C^1(u): at most 2 CNOTs and 4 single-qubit gates, phase-exact
// (a phase gate on the control absorbs det u).
Circuit controlled_unitary(const Mat2& u, qubit_t control, qubit_t target);

// Standard 6-CNOT Toffoli network, phase-exact CCX.
Circuit toffoli_circuit(qubit_t c1, qubit_t c2, qubit_t target);

// ASAP depth of toffoli_circuit on 3 fresh wires; frozen by regression test.
extern const std::uint64_t d_tof;

// Named 2x2 constants used across the synthesizers.
const Mat2& mat_i();
const Mat2& mat_x();
const Mat2& mat_h();
const Mat2& mat_t();
const Mat2& mat_tdg();
Mat2 mat_rz(double theta);
Mat2 mat_ry(double theta);
Mat2 mat_phase(double delta);  // diag(1, e^{i delta})

}  // namespace mcx
