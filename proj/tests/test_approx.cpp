#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <numeric>

#include "mcx/approx.hpp"
#include "test_support.hpp"

using namespace mcx;
using namespace mcx::synth;

namespace {

std::vector<qubit_t> iota_wires(qubit_t first, std::size_t count) {
  std::vector<qubit_t> w(count);
  std::iota(w.begin(), w.end(), first);
  return w;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  return m.bdcSvd().singularValues()(0);
}

}  // namespace

TEST_CASE("plan frozen examples") {
  const ApproxPlan coarse = plan_approx(10, 0.1);
  CHECK(coarse.k == 5);
  CHECK(coarse.truncation_bound == doctest::Approx(std::numbers::pi / 32).epsilon(1e-12));

  const ApproxPlan huge_eps = plan_approx(10, 5.0);
  CHECK(huge_eps.k == 1);
  CHECK(huge_eps.truncation_bound == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

  const ApproxPlan clamped = plan_approx(4, 1e-9);
  CHECK(clamped.k == 3);
  CHECK(clamped.truncation_bound == 0.0);

  CHECK_THROWS_AS(plan_approx(1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(plan_approx(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(plan_approx(5, -1.0), std::invalid_argument);
}

TEST_CASE("truncation bound values") {
  CHECK(truncation_error_bound(1) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(truncation_error_bound(5) == doctest::Approx(0.0981747704246810).epsilon(1e-10));
  CHECK(truncation_error_bound(20) == doctest::Approx(2.9960562263e-6).epsilon(1e-6));
  CHECK_THROWS_AS(truncation_error_bound(0), std::invalid_argument);
}

TEST_CASE("roots chain by squaring") {
  std::mt19937_64 rng(99);
  for (const Mat2& u : {mat_x(), testsup::random_unitary(rng)}) {
    const ApproxPlan plan = plan_approx(8, 1e-4, u);
    REQUIRE(plan.roots.size() == plan.k);
    CHECK((Mat2(plan.roots[0] * plan.roots[0]) - u).cwiseAbs().maxCoeff() < 1e-9);
    for (std::size_t j = 1; j < plan.roots.size(); ++j)
      CHECK((Mat2(plan.roots[j] * plan.roots[j]) - plan.roots[j - 1]).cwiseAbs().maxCoeff() <
            1e-9);
  }
  CHECK_THROWS_AS(plan_approx(4, 0.1, Mat2(2.0 * mat_x())), std::invalid_argument);
}

TEST_CASE("macro census and level layout") {
  for (std::size_t n : {4, 6, 8}) {
    for (double eps : {0.3, 0.05, 1e-12}) {
      const auto controls = iota_wires(0, n);
      const Circuit c =
          synth_mcu_approx_macro(mat_x(), controls, static_cast<qubit_t>(n), eps);
      const ApproxPlan plan = plan_approx(static_cast<std::uint32_t>(n), eps);
      std::size_t mcx_count = 0, mcu_count = 0;
      for (const Gate& g : c.gates) {
        if (std::holds_alternative<McxGate>(g)) ++mcx_count;
        if (std::holds_alternative<McuGate>(g)) ++mcu_count;
      }
      CHECK(mcx_count == 2 * plan.k);
      CHECK(mcu_count == 2 * plan.k + (plan.truncation_bound == 0.0 ? 1 : 0));
      CHECK(c.width == n + 1);
      for (WireRole role : c.roles) {
        CHECK(role != WireRole::ZeroedAncilla);
        CHECK(role != WireRole::BorrowedAncilla);
      }
    }
  }

  const auto four = iota_wires(0, 4);
  const Circuit c = synth_mcu_approx_macro(mat_x(), four, 4, 1e-12);
  REQUIRE(c.gates.size() == 13);
  CHECK(std::get<McxGate>(c.gates[0]).controls == iota_wires(0, 3));
  CHECK(std::get<McxGate>(c.gates[0]).target == 3);
  CHECK(std::get<McuGate>(c.gates[1]).controls == std::vector<qubit_t>{3});
  CHECK(std::get<McxGate>(c.gates[4]).controls == iota_wires(0, 2));
  CHECK(std::get<McxGate>(c.gates[4]).target == 2);
  CHECK(std::get<McuGate>(c.gates[12]).controls == std::vector<qubit_t>{0});
}

TEST_CASE("single peeled level plus ideal residual is exact") {
  std::mt19937_64 rng(7);
  const Mat2 u = testsup::random_unitary(rng);
  const auto controls = iota_wires(0, 3);
  const Circuit level = synth_mcu_approx_macro(u, controls, 3, 2.0);
  const ApproxPlan plan = plan_approx(3, 2.0, u);
  REQUIRE(plan.k == 1);
  const Eigen::MatrixXcd partial = testsup::dense_unitary(level);
  const Eigen::MatrixXcd residual = testsup::ideal_mcu(4, {0, 1}, plan.roots[0], 3);
  const Eigen::MatrixXcd ideal = testsup::ideal_mcu(4, controls, u, 3);
  CHECK((residual * partial - ideal).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("exact plans reproduce the controlled unitary") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2, 3, 4, 5}) {
    const auto controls = iota_wires(0, n);
    const qubit_t t = static_cast<qubit_t>(n);
    for (const Mat2& u : {mat_x(), testsup::random_unitary(rng)}) {
      const Circuit macro = synth_mcu_approx_macro(u, controls, t, 1e-12);
      const Circuit lowered = synth_mcu_approx(u, controls, t, 1e-12);
      const Eigen::MatrixXcd ideal = testsup::ideal_mcu(static_cast<std::uint32_t>(n + 1),
                                                        controls, u, t);
      CHECK((testsup::dense_unitary(macro) - ideal).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((testsup::dense_unitary(lowered) - ideal).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(validate(lowered).empty());
    }
  }
}

TEST_CASE("truncated circuits meet the spectral bound") {
  std::mt19937_64 rng(13);
  const std::pair<std::size_t, double> cases[] = {{6, 0.3}, {7, 0.3}, {8, 0.3}, {8, 0.05}};
  for (const auto& [n, eps] : cases) {
    const auto controls = iota_wires(0, n);
    const qubit_t t = static_cast<qubit_t>(n);
    const ApproxPlan plan = plan_approx(static_cast<std::uint32_t>(n), eps);
    REQUIRE(plan.truncation_bound > 0.0);
    for (const Mat2& u : {mat_x(), testsup::random_unitary(rng)}) {
      const Circuit c = synth_mcu_approx(u, controls, t, eps);
      const Eigen::MatrixXcd ideal =
          testsup::ideal_mcu(static_cast<std::uint32_t>(n + 1), controls, u, t);
      const double err = spectral_norm(testsup::dense_unitary(c) - ideal);
      CHECK(err <= std::min(eps, plan.truncation_bound) + 1e-8);
      CHECK(err > 1e-10);
    }
  }
}

TEST_CASE("macro and lowered tiers agree") {
  const auto controls = iota_wires(0, 6);
  for (double eps : {0.3, 1e-12}) {
    const Circuit macro = synth_mcu_approx_macro(mat_x(), controls, 6, eps);
    const Circuit lowered = synth_mcu_approx(mat_x(), controls, 6, eps);
    CHECK((testsup::dense_unitary(macro) - testsup::dense_unitary(lowered))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
  }
}
