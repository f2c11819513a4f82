#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "mcx/baselines.hpp"
#include "test_support.hpp"

using namespace mcx;
using namespace mcx::synth;

namespace {

std::vector<qubit_t> iota_wires(qubit_t first, std::size_t count) {
  std::vector<qubit_t> w(count);
  std::iota(w.begin(), w.end(), first);
  return w;
}

// Full-width check: circuit == C^n(X) on the controls/target, identity on
// every other wire (so borrowed ancillae are restored for every state).
void check_exact_mcx(const Circuit& c, const std::vector<qubit_t>& controls,
                     qubit_t target, double tol = 1e-9) {
  const Eigen::MatrixXcd got = testsup::dense_unitary(c);
  const Eigen::MatrixXcd want = testsup::ideal_mcx(c.width, controls, target);
  CHECK((got - want).cwiseAbs().maxCoeff() < tol);
}

}  // namespace

TEST_CASE("ladder structure at n=3 is the frozen four-toffoli sequence") {
  const auto controls = iota_wires(0, 3);
  const qubit_t borrow[] = {3};
  const Circuit c = synth_ladder(controls, borrow, 4);

  const GateCounts counts = gate_counts(c);
  CHECK(counts.cnots == 6 * 4);
  CHECK(counts.singles == 9 * 4);

  // Toffoli wire triples in emission order: (c3,a,t), (c1,c2,a), repeated.
  std::vector<std::vector<qubit_t>> seen;
  for (std::size_t i = 0; i < c.gates.size(); i += 15) {
    std::vector<qubit_t> wires;
    for (std::size_t j = i; j < i + 15; ++j)
      for (qubit_t w : gate_wires(c.gates[j]))
        if (std::find(wires.begin(), wires.end(), w) == wires.end()) wires.push_back(w);
    std::sort(wires.begin(), wires.end());
    seen.push_back(wires);
  }
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == std::vector<qubit_t>{2, 3, 4});
  CHECK(seen[1] == std::vector<qubit_t>{0, 1, 3});
  CHECK(seen[2] == seen[0]);
  CHECK(seen[3] == seen[1]);

  check_exact_mcx(c, controls, 4);
}

TEST_CASE("ladder is exact for every ancilla state") {
  for (std::size_t n : {3, 4, 5}) {
    const auto controls = iota_wires(0, n);
    const auto borrows = iota_wires(n, n - 2);
    const qubit_t target = static_cast<qubit_t>(2 * n - 2);
    const Circuit c = synth_ladder(controls, borrows, target);
    check_exact_mcx(c, controls, target);
    CHECK(gate_counts(c).cnots == 6 * 4 * (n - 2));
  }
}

TEST_CASE("ladder depth regression at n=3") {
  const auto controls = iota_wires(0, 3);
  const qubit_t borrow[] = {3};
  CHECK(asap_depth(synth_ladder(controls, borrow, 4)) == 42);
}

TEST_CASE("ladder randomized basis probes at n=10") {
  const auto controls = iota_wires(0, 10);
  const auto borrows = iota_wires(10, 8);
  const Circuit c = synth_ladder(controls, borrows, 18);
  REQUIRE(c.width == 19);
  std::mt19937_64 rng(77);
  for (int probe = 0; probe < 6; ++probe) {
    std::uint64_t basis = rng() & ((1u << 19) - 1);
    if (probe == 0) basis = (1u << 19) - 1;  // all-ones: the flipping case
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << 19);
    v(basis) = 1.0;
    const Eigen::VectorXcd out = testsup::run_state(c, v);
    const bool active = (basis & ((1u << 10) - 1)) == (1u << 10) - 1;
    const std::uint64_t expect = active ? basis ^ (1u << 18) : basis;
    CHECK(std::abs(out(expect) - cplx(1, 0)) < 1e-9);
  }
}

TEST_CASE("ladder rejects malformed ancilla lists") {
  const auto controls = iota_wires(0, 4);
  const auto short_borrows = iota_wires(4, 1);
  CHECK_THROWS_AS(synth_ladder(controls, short_borrows, 6), std::invalid_argument);
  const qubit_t dup[] = {0, 5};
  CHECK_THROWS_AS(synth_ladder(controls, dup, 6), std::invalid_argument);
}

TEST_CASE("split flip algebra boolean identity") {
  for (int s1 = 0; s1 <= 1; ++s1)
    for (int s2 = 0; s2 <= 1; ++s2)
      for (int a = 0; a <= 1; ++a)
        CHECK(((s2 & (a ^ s1)) ^ (s2 & a)) == (s1 & s2));
}

TEST_CASE("split is exact with one borrowed ancilla") {
  for (std::size_t n : {3, 4, 5, 6, 7, 8}) {
    const auto controls = iota_wires(0, n);
    const qubit_t borrow = static_cast<qubit_t>(n);
    const qubit_t target = static_cast<qubit_t>(n + 1);
    const Circuit c = synth_split(controls, borrow, target);
    check_exact_mcx(c, controls, target);
  }
}

TEST_CASE("split at n=3 matches the ladder unitary") {
  const auto controls = iota_wires(0, 3);
  const qubit_t borrow[] = {3};
  const Circuit lad = synth_ladder(controls, borrow, 4);
  const Circuit spl = synth_split(controls, 3, 4);
  CHECK((testsup::dense_unitary(lad) - testsup::dense_unitary(spl)).cwiseAbs().maxCoeff() <
        1e-9);
}

TEST_CASE("log tree is exact on the zeroed subspace and restores ancillae") {
  for (std::size_t n : {2, 3, 4}) {
    const auto controls = iota_wires(0, n);
    const auto zeroed = iota_wires(n, n - 1);
    const qubit_t target = static_cast<qubit_t>(2 * n - 1);
    const Circuit c = synth_log_tree(controls, zeroed, target);
    const Eigen::MatrixXcd got = testsup::dense_unitary(c);
    const Eigen::MatrixXcd want = testsup::ideal_mcx(c.width, controls, target);
    std::uint64_t ancilla_mask = 0;
    for (qubit_t z : zeroed) ancilla_mask |= std::uint64_t{1} << z;
    for (Eigen::Index col = 0; col < got.cols(); ++col) {
      if (col & ancilla_mask) continue;
      CHECK((got.col(col) - want.col(col)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("log tree probes and depth bound at n=8") {
  const auto controls = iota_wires(0, 8);
  const auto zeroed = iota_wires(8, 7);
  const Circuit c = synth_log_tree(controls, zeroed, 15);
  REQUIRE(c.width == 16);

  std::mt19937_64 rng(99);
  for (int probe = 0; probe < 6; ++probe) {
    std::uint64_t basis = (rng() & 0xff) | ((probe == 0 ? 0xffu : 0) );
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << 16);
    v(basis) = 1.0;
    const Eigen::VectorXcd out = testsup::run_state(c, v);
    const bool active = (basis & 0xff) == 0xff;
    const std::uint64_t expect = active ? basis ^ (1u << 15) : basis;
    CHECK(std::abs(out(expect) - cplx(1, 0)) < 1e-9);
  }

  CHECK(asap_depth(c) <= 30 * 3 + 11);
  CHECK_THROWS_AS(synth_log_tree(controls, iota_wires(8, 6), 15), std::invalid_argument);
}

TEST_CASE("base case dispatch") {
  const qubit_t one_control[] = {0};
  const Circuit cnot_case = base_case_mcx(30, one_control, 1, 2);
  REQUIRE(cnot_case.gates.size() == 1);
  CHECK(asap_depth(cnot_case) == 1);

  const auto two = iota_wires(0, 2);
  const Circuit tof_case = base_case_mcx(30, two, 2, 3);
  check_exact_mcx(tof_case, two, 3, 1e-10);
  CHECK(gate_counts(tof_case).cnots == 6);

  const auto seven = iota_wires(0, 7);
  const Circuit split_case = base_case_mcx(30, seven, 7, 8);
  check_exact_mcx(split_case, seven, 8);

  CHECK_THROWS_AS(base_case_mcx(5, iota_wires(0, 6), 6, 7), std::invalid_argument);
}

TEST_CASE("base template replay reproduces the direct emission") {
  for (std::uint32_t n : {1u, 2u, 5u, 9u}) {
    const Template& tmpl = base_template(n);
    CHECK(tmpl.tail_begin == tmpl.gates.size());
    Circuit via_replay;
    via_replay.width = n + 2;
    MaterializeSink sink(via_replay);
    auto wires = iota_wires(0, n + 2);
    replay(tmpl, wires, sink);
    const Circuit direct = base_case_mcx(30, iota_wires(0, n), n, n + 1);
    REQUIRE(via_replay.gates.size() == direct.gates.size());
    CHECK((testsup::dense_unitary(via_replay) - testsup::dense_unitary(direct))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("conjugate replay inverts the template") {
  const Template& tmpl = base_template(4);
  Circuit forward, backward;
  forward.width = backward.width = 6;
  MaterializeSink fs(forward), bs(backward);
  const auto wires = iota_wires(0, 6);
  replay(tmpl, wires, fs);
  replay(tmpl, wires, bs, {.conjugate = true, .drop_tail = false});
  const Eigen::MatrixXcd prod =
      testsup::dense_unitary(backward) * testsup::dense_unitary(forward);
  CHECK((prod - Eigen::MatrixXcd::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-9);
}
