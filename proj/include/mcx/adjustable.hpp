#pragma once

#include <span>
#include <vector>

#include "mcx/polylog.hpp"

namespace mcx::synth {

// Partition of the m zeroed ancillae: the first floor(m/2) wires collect
// block activations, the remaining ceil(m/2) serve as helpers for the
// block lowerings and as the tree core's internal nodes.
struct AncillaSplit {
  std::vector<qubit_t> a0;
  std::vector<qubit_t> a1;
  std::vector<std::uint32_t> block_sizes;  // floor(m/2) entries summing to n
};

// Balanced block sizes (differing by at most 1) over floor(m/2) blocks.
// Requires 2 <= m <= n and distinct wires.
AncillaSplit make_ancilla_split(std::uint32_t n, std::span<const qubit_t> ancillae);

// Blocks compressed into A0 in parallel (each with its own A1 helper),
// an AND-tree core from A0 onto the target with A1 as tree nodes, then
// the block stage again to restore A0. Exact on the all-ancillae-zero
// subspace with every ancilla returned to zero.
void emit_mcx_adjustable(std::span<const qubit_t> controls, std::span<const qubit_t> zeroed,
                         qubit_t target, std::uint32_t threshold, GateSink& sink);
Circuit synth_mcx_adjustable(std::span<const qubit_t> controls,
                             std::span<const qubit_t> zeroed, qubit_t target,
                             const Options& opt = {});

}  // namespace mcx::synth
