#pragma once

#include <span>

#include "mcx/baselines.hpp"

namespace mcx::synth {

struct Options {
  std::uint32_t threshold = 30;      // base-case cutoff; must be >= 4
  bool su2_conjugate_second = true;  // conjugate second inner MCX and cancel
                                     // the adjacent parallel-blocks bands
};

// Square-root partition of n controls q_0..q_{n-1}:
//   R0      = q_0..q_{2p-1}            (p = floor(sqrt(n)))
//   R_i     = q_{(1+i)p}..q_{(2+i)p-1} clipped to n, for i = 1..b
//   R0star  = first b wires of R0; R0prime = the remaining 2p-b
//   r       = size of the last non-empty block
struct Partition {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t b = 0;
  std::uint32_t r = 0;
};

Partition make_partition(std::uint32_t n);  // n >= 5

// Macro tier of the conjugated-block stage: the b disjoint block gates,
// the polarity-flipped middle gate onto t, and the block gates again.
Circuit synth_frak_C(const Partition& part, std::span<const qubit_t> controls, qubit_t a,
                     qubit_t t);

// Lowered multi-controlled NOT template on canonical wires (controls
// 0..n-1, helper n, target n+1), memoized per (n, threshold, zeroed).
// Borrowed uses base cases up to threshold, then the partition recursion;
// zeroed uses the shorter zeroed stage order for n >= 5.
const Template& mcx_template(std::uint32_t n, std::uint32_t threshold, bool zeroed);

void emit_mcx_borrowed(std::span<const qubit_t> controls, qubit_t borrow, qubit_t target,
                       std::uint32_t threshold, GateSink& sink, ReplayOpts opts = {});
void emit_mcx_zeroed(std::span<const qubit_t> controls, qubit_t zeroed, qubit_t target,
                     std::uint32_t threshold, GateSink& sink);
void emit_mcu_one_zeroed(const Mat2& u, std::span<const qubit_t> controls, qubit_t zeroed,
                         qubit_t target, const Options& opt, GateSink& sink);
void emit_mc_su2(const Mat2& w, std::span<const qubit_t> controls, qubit_t target,
                 const Options& opt, GateSink& sink);

Circuit synth_mcx_one_borrowed(std::span<const qubit_t> controls, qubit_t borrowed,
                               qubit_t target, const Options& opt = {});
Circuit synth_mcx_one_zeroed(std::span<const qubit_t> controls, qubit_t zeroed,
                             qubit_t target, const Options& opt = {});
Circuit synth_mcu_one_zeroed(const Mat2& u, std::span<const qubit_t> controls,
                             qubit_t zeroed, qubit_t target, const Options& opt = {});
Circuit synth_mc_su2(const Mat2& w, std::span<const qubit_t> controls, qubit_t target,
                     const Options& opt = {});

}  // namespace mcx::synth
