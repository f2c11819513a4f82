#include "mcx/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mcx/gate_algebra.hpp"
#include "synth_util.hpp"

namespace mcx::synth {

namespace {

// One peeled level on m controls: MCX pair onto the last control around
// the controlled root pair on the target. Exponent bookkeeping for
// x = AND(rest), y = peeled: -(y XOR x) + y + x = 2xy, so the pair of
// controlled V gates contributes V^2xy = W^xy with V = sqrt(W).
template <typename McxFn, typename CuFn>
void peel_levels(const ApproxPlan& plan, std::span<const qubit_t> controls,
                 McxFn&& emit_mcx, CuFn&& emit_cu) {
  const std::size_t n = controls.size();
  for (std::uint32_t j = 1; j <= plan.k; ++j) {
    const std::size_t m = n - j + 1;
    const qubit_t peeled = controls[m - 1];
    const auto rest = controls.first(m - 1);
    const Mat2& root = plan.roots[j - 1];
    emit_mcx(rest, peeled);
    emit_cu(Mat2(root.adjoint()), peeled);
    emit_mcx(rest, peeled);
    emit_cu(root, peeled);
  }
  if (plan.truncation_bound == 0.0) emit_cu(plan.roots[plan.k - 1], controls[0]);
}

}  // namespace

ApproxPlan plan_approx(std::uint32_t n, double epsilon) {
  if (n < 2) throw std::invalid_argument("plan_approx: need at least 2 controls");
  if (!(epsilon > 0.0)) throw std::invalid_argument("plan_approx: epsilon must be positive");
  const double raw = std::ceil(std::log2(std::numbers::pi / epsilon));
  std::uint32_t k = 1;
  if (raw >= 1.0) k = raw >= double(n - 1) ? n - 1 : static_cast<std::uint32_t>(raw);
  ApproxPlan plan;
  plan.k = k;
  plan.truncation_bound = k == n - 1 ? 0.0 : truncation_error_bound(k);
  return plan;
}

ApproxPlan plan_approx(std::uint32_t n, double epsilon, const Mat2& u) {
  if ((Mat2(u.adjoint() * u) - mat_i()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("plan_approx: input must be unitary");
  ApproxPlan plan = plan_approx(n, epsilon);
  plan.roots.reserve(plan.k);
  for (std::uint32_t j = 1; j <= plan.k; ++j) plan.roots.push_back(principal_root(u, j));
  return plan;
}

double truncation_error_bound(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("truncation_error_bound: k must be at least 1");
  return std::numbers::pi / std::pow(2.0, double(k));
}

Circuit synth_mcu_approx_macro(const Mat2& u, std::span<const qubit_t> controls,
                               qubit_t target, double epsilon) {
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(target);
  detail::check_distinct(all, "synth_mcu_approx_macro");
  const ApproxPlan plan = plan_approx(static_cast<std::uint32_t>(controls.size()), epsilon, u);
  Circuit c = detail::annotated_shell(controls, {}, {}, target);
  peel_levels(
      plan, controls,
      [&](std::span<const qubit_t> rest, qubit_t peeled) {
        c.add(McxGate{{rest.begin(), rest.end()},
                      std::vector<bool>(rest.size(), true),
                      peeled});
      },
      [&](const Mat2& v, qubit_t control) {
        c.add(McuGate{{control}, {true}, v, target});
      });
  return c;
}

void emit_mcu_approx(const Mat2& u, std::span<const qubit_t> controls, qubit_t target,
                     double epsilon, const Options& opt, GateSink& sink) {
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(target);
  detail::check_distinct(all, "emit_mcu_approx");
  const ApproxPlan plan = plan_approx(static_cast<std::uint32_t>(controls.size()), epsilon, u);
  peel_levels(
      plan, controls,
      [&](std::span<const qubit_t> rest, qubit_t peeled) {
        emit_mcx_borrowed(rest, target, peeled, opt.threshold, sink);
      },
      [&](const Mat2& v, qubit_t control) {
        emit_lowered(controlled_unitary(v, control, target), sink);
      });
}

Circuit synth_mcu_approx(const Mat2& u, std::span<const qubit_t> controls, qubit_t target,
                         double epsilon, const Options& opt) {
  Circuit c = detail::annotated_shell(controls, {}, {}, target);
  MaterializeSink sink(c);
  emit_mcu_approx(u, controls, target, epsilon, opt, sink);
  return c;
}

}  // namespace mcx::synth
