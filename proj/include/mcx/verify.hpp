#pragma once

#include <Eigen/Dense>

#include <vector>

#include "mcx/circuit.hpp"
#include "mcx/gate_algebra.hpp"

namespace mcx::verify {

enum class AncillaKind : std::uint8_t { Zeroed, Borrowed };

struct AncillaWire {
  qubit_t wire;
  AncillaKind kind;
};

// Reference semantics a circuit is checked against: u on the target when
// every control matches its polarity, identity elsewhere. Ancilla wires
// carry the restore contract instead of unitary semantics: borrowed wires
// must see exact identity, zeroed wires constrain only the all-zero
// input subspace and must come back to zero.
struct IdealSpec {
  std::vector<qubit_t> controls;
  std::vector<bool> polarity;  // empty means all ones
  qubit_t target = 0;
  Mat2 u = mat_x();
  std::vector<AncillaWire> ancillae;
};

enum class VerifyMode : std::uint8_t { Exhaustive, Randomized };

struct ProbeFailure {
  std::uint64_t probe;  // basis index, or probe ordinal in randomized mode
  cplx expected;
  cplx got;
  double deviation;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::Exhaustive;
  double max_deviation = 0.0;
  cplx global_phase{1.0, 0.0};
  bool passed = false;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::vector<ProbeFailure> failures;
};

// Reads the verification contract off a circuit's wire-role
// annotations; u is the ideal single-qubit action on the target.
IdealSpec spec_from_roles(const Circuit& c, const Mat2& u);

// Width caps for the dense, statevector, and spectral checkers.
constexpr std::uint32_t kExhaustiveWidth = 11;
constexpr std::uint32_t kStateWidth = 17;
constexpr std::uint32_t kSpectralWidth = 12;
constexpr std::uint32_t kDenseSpectralWidth = 10;

// Dense unitary of the circuit, width <= kExhaustiveWidth.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

// Statevector application (macro gates included), width <= kStateWidth.
Eigen::VectorXcd apply_state(const Circuit& c, Eigen::VectorXcd state);

// The ideal action of spec on a state of the circuit's width.
Eigen::VectorXcd ideal_state(const IdealSpec& spec, std::uint32_t width,
                             Eigen::VectorXcd state, bool adjoint = false);

// Exhaustive mode checks every zeroed-subspace basis column of the dense
// unitary (width <= 11); randomized mode runs >= 32 seeded random states
// and >= 32 basis probes (width <= 17). A single uniform phase between
// realized and ideal is factored out and reported.
VerificationReport verify_exact(const Circuit& c, const IdealSpec& spec, VerifyMode mode,
                                double tolerance = 1e-8, std::uint64_t seed = 7);

struct SpectralResult {
  double value = 0.0;
  bool converged = false;
  std::uint32_t iterations = 0;
};

// Largest singular value of (realized - ideal) by power iteration on the
// squared difference operator; relative tolerance 1e-4, 500 iteration
// cap, fixed seed. Width <= 12; zeroed ancillae unsupported here.
SpectralResult spectral_error(const Circuit& c, const IdealSpec& spec);

// Dense cross-check, width <= 10.
double spectral_error_dense(const Circuit& c, const IdealSpec& spec);

}  // namespace mcx::verify
