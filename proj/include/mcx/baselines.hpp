#pragma once

#include <span>

#include "mcx/sinks.hpp"

namespace mcx::synth {

// Streaming emitters. All lower to the TGate alphabet; wires are physical.

void emit_toffoli(qubit_t c1, qubit_t c2, qubit_t target, GateSink& sink);

// Dispatch on control count: 1 -> CNOT, 2 -> Toffoli; rejects n = 0 and
// n >= 3 (those need an explicit construction).
void emit_mcx_tiny(std::span<const qubit_t> controls, qubit_t target, GateSink& sink);

// Toffoli chain with n-2 borrowed ancillae; 4(n-2) Toffolis, n >= 3.
void emit_mcx_ladder(std::span<const qubit_t> controls, std::span<const qubit_t> borrows,
                     qubit_t target, GateSink& sink);

// Single borrowed ancilla: halves alternated as two ladder instances
// (first half -> ancilla, second half + ancilla -> target), n >= 3.
void emit_mcx_split(std::span<const qubit_t> controls, qubit_t borrow, qubit_t target,
                    GateSink& sink);

// Base-case dispatch: 1 -> CNOT, 2 -> Toffoli, >= 3 -> split.
void emit_mcx_base(std::span<const qubit_t> controls, qubit_t borrow, qubit_t target,
                   GateSink& sink);

// Binary AND-tree into n-1 zeroed ancillae, CNOT from the root, uncompute.
void emit_log_tree(std::span<const qubit_t> controls, std::span<const qubit_t> zeroed,
                   qubit_t target, GateSink& sink);

// emit_mcx_base on canonical wires (controls 0..n-1, borrow n, target n+1),
// memoized per n.
const Template& base_template(std::uint32_t n);

// Circuit-returning forms with role annotations.
Circuit synth_ladder(std::span<const qubit_t> controls, std::span<const qubit_t> borrowed,
                     qubit_t target);
Circuit synth_split(std::span<const qubit_t> controls, qubit_t borrowed, qubit_t target);
Circuit synth_log_tree(std::span<const qubit_t> controls, std::span<const qubit_t> zeroed,
                       qubit_t target);
Circuit base_case_mcx(std::uint32_t threshold, std::span<const qubit_t> controls,
                      qubit_t borrowed, qubit_t target);

}  // namespace mcx::synth
