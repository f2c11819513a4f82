#pragma once

#include <span>
#include <vector>

#include "mcx/polylog.hpp"

namespace mcx::synth {

// Root-peeling plan for an ancilla-free approximate multi-controlled
// unitary: k levels each peel one control into a singly-controlled
// principal-root pair wrapped in a borrowed MCX pair. The dropped
// residual differs from the identity by at most pi / 2^k in spectral
// norm; a plan with k = n - 1 keeps the residual and is exact.
struct ApproxPlan {
  std::uint32_t k = 0;
  std::vector<Mat2> roots;        // roots[j-1] = principal_root(u, j)
  double truncation_bound = 0.0;  // pi / 2^k, or 0 when the plan is exact
};

// k = min(n - 1, ceil(log2(pi / epsilon))) clamped to at least 1.
// Requires n >= 2 and epsilon > 0; the two-argument form leaves roots
// empty for estimation without a concrete unitary.
ApproxPlan plan_approx(std::uint32_t n, double epsilon);
ApproxPlan plan_approx(std::uint32_t n, double epsilon, const Mat2& u);

double truncation_error_bound(std::uint32_t k);  // pi / 2^k, k >= 1

// Macro tier: per level j the pair of MCX gates onto the peeled control
// around the controlled root pair on the target, then the exact residual
// when the plan has one. Exactly 2k MCX and 2k controlled-root gates
// (plus one residual gate when exact).
Circuit synth_mcu_approx_macro(const Mat2& u, std::span<const qubit_t> controls,
                               qubit_t target, double epsilon);

// Fully lowered form; every inner MCX borrows the target wire, so the
// circuit spans exactly the n + 1 named wires.
void emit_mcu_approx(const Mat2& u, std::span<const qubit_t> controls, qubit_t target,
                     double epsilon, const Options& opt, GateSink& sink);
Circuit synth_mcu_approx(const Mat2& u, std::span<const qubit_t> controls, qubit_t target,
                         double epsilon, const Options& opt = {});

}  // namespace mcx::synth
