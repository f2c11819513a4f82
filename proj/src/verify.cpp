#include "mcx/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mcx::verify {

namespace {

constexpr std::size_t kMaxRecordedFailures = 32;

bool bits_match(std::uint64_t basis, const std::vector<qubit_t>& controls,
                const std::vector<bool>& polarity) {
  for (std::size_t i = 0; i < controls.size(); ++i) {
    const bool want = polarity.empty() || polarity[i];
    if ((((basis >> controls[i]) & 1) != 0) != want) return false;
  }
  return true;
}

void apply_2x2(Eigen::VectorXcd& v, const Mat2& u, qubit_t target,
               const std::vector<qubit_t>& controls, const std::vector<bool>& polarity) {
  const Eigen::Index dim = v.size();
  const Eigen::Index tbit = Eigen::Index{1} << target;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & tbit) continue;
    if (!controls.empty() && !bits_match(static_cast<std::uint64_t>(i), controls, polarity))
      continue;
    const cplx a0 = v(i), a1 = v(i | tbit);
    v(i) = u(0, 0) * a0 + u(0, 1) * a1;
    v(i | tbit) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_flip(Eigen::VectorXcd& v, qubit_t target, const std::vector<qubit_t>& controls,
                const std::vector<bool>& polarity) {
  const Eigen::Index dim = v.size();
  const Eigen::Index tbit = Eigen::Index{1} << target;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & tbit) continue;
    if (!controls.empty() && !bits_match(static_cast<std::uint64_t>(i), controls, polarity))
      continue;
    std::swap(v(i), v(i | tbit));
  }
}

void apply_gate(Eigen::VectorXcd& v, const Gate& g) {
  static const std::vector<qubit_t> kNone;
  static const std::vector<bool> kNoPolarity;
  if (const auto* s = std::get_if<SingleQubitGate>(&g)) {
    apply_2x2(v, s->u, s->target, kNone, kNoPolarity);
  } else if (const auto* cx = std::get_if<CnotGate>(&g)) {
    const Eigen::Index dim = v.size();
    const Eigen::Index cbit = Eigen::Index{1} << cx->control;
    const Eigen::Index tbit = Eigen::Index{1} << cx->target;
    for (Eigen::Index i = 0; i < dim; ++i)
      if ((i & cbit) && !(i & tbit)) std::swap(v(i), v(i | tbit));
  } else if (const auto* mx = std::get_if<McxGate>(&g)) {
    apply_flip(v, mx->target, mx->controls, mx->polarity);
  } else {
    const auto& mu = std::get<McuGate>(g);
    apply_2x2(v, mu.u, mu.target, mu.controls, mu.polarity);
  }
}

std::uint64_t zeroed_mask(const IdealSpec& spec) {
  std::uint64_t mask = 0;
  for (const AncillaWire& a : spec.ancillae)
    if (a.kind == AncillaKind::Zeroed) mask |= std::uint64_t{1} << a.wire;
  return mask;
}

void check_spec_wires(const Circuit& c, const IdealSpec& spec) {
  std::vector<qubit_t> wires(spec.controls);
  wires.push_back(spec.target);
  for (const AncillaWire& a : spec.ancillae) wires.push_back(a.wire);
  for (qubit_t w : wires)
    if (w >= c.width) throw std::invalid_argument("verify: spec wire out of range");
  std::sort(wires.begin(), wires.end());
  if (std::adjacent_find(wires.begin(), wires.end()) != wires.end())
    throw std::invalid_argument("verify: spec wires must be disjoint");
  if (!spec.polarity.empty() && spec.polarity.size() != spec.controls.size())
    throw std::invalid_argument("verify: polarity size mismatch");
}

// Ideal image of a basis state: at most two nonzero amplitudes.
void ideal_basis_column(const IdealSpec& spec, std::uint64_t col, Eigen::VectorXcd& out) {
  out.setZero();
  if (!bits_match(col, spec.controls, spec.polarity)) {
    out(col) = 1.0;
    return;
  }
  const std::uint64_t tbit = std::uint64_t{1} << spec.target;
  const int in_bit = (col & tbit) ? 1 : 0;
  out(col & ~tbit) = spec.u(0, in_bit);
  out(col | tbit) = spec.u(1, in_bit);
}

struct DeviationTracker {
  double tolerance;
  cplx phase{0.0, 0.0};  // unset until the first probe fixes it
  double max_deviation = 0.0;
  std::vector<ProbeFailure> failures;

  void settle_phase(const Eigen::VectorXcd& got, const Eigen::VectorXcd& want) {
    Eigen::Index ref = 0;
    want.cwiseAbs().maxCoeff(&ref);
    const cplx ratio = got(ref) / want(ref);
    phase = std::abs(ratio) < 1e-6 ? cplx(1.0, 0.0) : ratio / std::abs(ratio);
  }

  void probe(std::uint64_t id, const Eigen::VectorXcd& got, const Eigen::VectorXcd& want) {
    if (phase == cplx(0.0, 0.0)) settle_phase(got, want);
    Eigen::Index worst = 0;
    const double deviation = (got - phase * want).cwiseAbs().maxCoeff(&worst);
    max_deviation = std::max(max_deviation, deviation);
    if (deviation > tolerance && failures.size() < kMaxRecordedFailures)
      failures.push_back({id, phase * want(worst), got(worst), deviation});
  }
};

}  // namespace

IdealSpec spec_from_roles(const Circuit& c, const Mat2& u) {
  IdealSpec spec;
  spec.u = u;
  bool has_target = false;
  for (std::uint32_t w = 0; w < c.roles.size(); ++w) {
    switch (c.roles[w]) {
      case WireRole::Control:
        spec.controls.push_back(static_cast<qubit_t>(w));
        break;
      case WireRole::Target:
        spec.target = static_cast<qubit_t>(w);
        has_target = true;
        break;
      case WireRole::ZeroedAncilla:
        spec.ancillae.push_back({static_cast<qubit_t>(w), AncillaKind::Zeroed});
        break;
      case WireRole::BorrowedAncilla:
        spec.ancillae.push_back({static_cast<qubit_t>(w), AncillaKind::Borrowed});
        break;
      case WireRole::Free:
        break;
    }
  }
  if (!has_target) throw std::invalid_argument("spec_from_roles: no target annotation");
  return spec;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.width > kExhaustiveWidth)
    throw std::invalid_argument("circuit_unitary: width exceeds dense bound");
  const Eigen::Index dim = Eigen::Index{1} << c.width;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::VectorXcd column(dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    column = m.col(col);
    for (const Gate& g : c.gates) apply_gate(column, g);
    m.col(col) = column;
  }
  return std::polar(1.0, c.global_phase) * m;
}

Eigen::VectorXcd apply_state(const Circuit& c, Eigen::VectorXcd state) {
  if (c.width > kStateWidth)
    throw std::invalid_argument("apply_state: width exceeds statevector bound");
  if (state.size() != Eigen::Index{1} << c.width)
    throw std::invalid_argument("apply_state: dimension mismatch");
  for (const Gate& g : c.gates) apply_gate(state, g);
  return std::polar(1.0, c.global_phase) * state;
}

Eigen::VectorXcd ideal_state(const IdealSpec& spec, std::uint32_t width,
                             Eigen::VectorXcd state, bool adjoint) {
  if (state.size() != Eigen::Index{1} << width)
    throw std::invalid_argument("ideal_state: dimension mismatch");
  const Mat2 u = adjoint ? Mat2(spec.u.adjoint()) : spec.u;
  apply_2x2(state, u, spec.target, spec.controls, spec.polarity);
  return state;
}

VerificationReport verify_exact(const Circuit& c, const IdealSpec& spec, VerifyMode mode,
                                double tolerance, std::uint64_t seed) {
  check_spec_wires(c, spec);
  VerificationReport report;
  report.mode = mode;
  report.tolerance = tolerance;
  report.seed = seed;
  const std::uint64_t zmask = zeroed_mask(spec);
  DeviationTracker tracker{tolerance, {}, 0.0, {}};

  if (mode == VerifyMode::Exhaustive) {
    const Eigen::MatrixXcd got = circuit_unitary(c);
    const Eigen::Index dim = got.rows();
    Eigen::VectorXcd want(dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      if (col & zmask) continue;
      ideal_basis_column(spec, static_cast<std::uint64_t>(col), want);
      tracker.probe(static_cast<std::uint64_t>(col), got.col(col), want);
    }
  } else {
    if (c.width > kStateWidth)
      throw std::invalid_argument("verify_exact: width exceeds randomized bound");
    const Eigen::Index dim = Eigen::Index{1} << c.width;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;

    // Basis probes: the active pattern with both target values, single
    // broken controls, then uniform draws over the zeroed-clear states.
    std::vector<std::uint64_t> basis_probes;
    std::uint64_t active = 0;
    for (std::size_t i = 0; i < spec.controls.size(); ++i)
      if (spec.polarity.empty() || spec.polarity[i])
        active |= std::uint64_t{1} << spec.controls[i];
    basis_probes.push_back(active);
    basis_probes.push_back(active | (std::uint64_t{1} << spec.target));
    for (std::size_t i = 0; i < spec.controls.size() && i < 6; ++i)
      basis_probes.push_back(active ^ (std::uint64_t{1} << spec.controls[i]));
    while (basis_probes.size() < 32)
      basis_probes.push_back(rng() & (dim - 1) & ~zmask);

    Eigen::VectorXcd probe(dim), want(dim);
    for (std::size_t i = 0; i < basis_probes.size(); ++i) {
      const std::uint64_t col = basis_probes[i] & ~zmask;
      probe.setZero();
      probe(col) = 1.0;
      ideal_basis_column(spec, col, want);
      tracker.probe(col, apply_state(c, probe), want);
    }
    for (int draw = 0; draw < 32; ++draw) {
      probe.setZero();
      for (Eigen::Index i = 0; i < dim; ++i)
        if (!(i & zmask)) probe(i) = cplx(gauss(rng), gauss(rng));
      probe.normalize();
      want = ideal_state(spec, c.width, probe);
      tracker.probe(1000 + draw, apply_state(c, probe), want);
    }
  }

  report.max_deviation = tracker.max_deviation;
  report.global_phase = tracker.phase == cplx(0.0, 0.0) ? cplx(1.0, 0.0) : tracker.phase;
  report.failures = std::move(tracker.failures);
  report.passed = report.max_deviation <= tolerance;
  return report;
}

SpectralResult spectral_error(const Circuit& c, const IdealSpec& spec) {
  check_spec_wires(c, spec);
  if (c.width > kSpectralWidth)
    throw std::invalid_argument("spectral_error: width exceeds bound");
  if (zeroed_mask(spec) != 0)
    throw std::invalid_argument("spectral_error: zeroed ancillae unsupported");
  const Eigen::Index dim = Eigen::Index{1} << c.width;
  const Circuit inv = inverse(c);

  const auto apply_diff = [&](const Eigen::VectorXcd& v) {
    return Eigen::VectorXcd(apply_state(c, v) - ideal_state(spec, c.width, v));
  };
  const auto apply_diff_adjoint = [&](const Eigen::VectorXcd& v) {
    return Eigen::VectorXcd(apply_state(inv, v) - ideal_state(spec, c.width, v, true));
  };

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx(gauss(rng), gauss(rng));
  v.normalize();

  SpectralResult result;
  double prev = 0.0;
  for (std::uint32_t iter = 1; iter <= 500; ++iter) {
    const Eigen::VectorXcd dv = apply_diff(v);
    const double sigma = dv.norm();
    result.value = sigma;
    result.iterations = iter;
    if (sigma < 1e-10) {
      result.converged = true;
      return result;
    }
    if (iter > 1 && std::abs(sigma - prev) <= 1e-4 * sigma) {
      result.converged = true;
      return result;
    }
    prev = sigma;
    v = apply_diff_adjoint(dv).normalized();
  }
  return result;
}

double spectral_error_dense(const Circuit& c, const IdealSpec& spec) {
  check_spec_wires(c, spec);
  if (c.width > kDenseSpectralWidth)
    throw std::invalid_argument("spectral_error_dense: width exceeds bound");
  const Eigen::MatrixXcd got = circuit_unitary(c);
  const Eigen::Index dim = got.rows();
  Eigen::MatrixXcd diff = got;
  Eigen::VectorXcd want(dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    ideal_basis_column(spec, static_cast<std::uint64_t>(col), want);
    diff.col(col) -= want;
  }
  return diff.bdcSvd().singularValues()(0);
}

}  // namespace mcx::verify
