#include "mcx/polylog.hpp"

#include "synth_util.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mcx/gate_algebra.hpp"

namespace mcx::synth {

namespace {

std::uint32_t isqrt_floor(std::uint32_t n) {
  auto p = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n)));
  while (p * p > n) --p;
  while ((p + 1) * (p + 1) <= n) ++p;
  return p;
}

void require_threshold(std::uint32_t threshold) {
  if (threshold < 4)
    throw std::invalid_argument("threshold must be at least 4");
}


// Appends a lowered sub-MCX to a template under construction. Wires are
// canonical indices of the enclosing template.
void append_sub_mcx(std::vector<TGate>& out, std::span<const qubit_t> controls,
                    qubit_t borrow, qubit_t target, std::uint32_t threshold) {
  TemplateBuilder builder(out);
  if (controls.size() <= 2) {
    emit_mcx_tiny(controls, target, builder);
    return;
  }
  const Template& sub = mcx_template(static_cast<std::uint32_t>(controls.size()),
                                     threshold, /*zeroed=*/false);
  std::vector<qubit_t> wires(controls.begin(), controls.end());
  wires.push_back(borrow);
  wires.push_back(target);
  replay(sub, wires, builder);
}

Template build_partition_template(std::uint32_t n, std::uint32_t threshold, bool zeroed) {
  const Partition part = make_partition(n);
  const std::uint32_t p = part.p, b = part.b;
  Template tmpl;
  tmpl.n = n;
  std::vector<TGate>& g = tmpl.gates;

  std::vector<qubit_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  const std::span<const qubit_t> controls(all);
  const qubit_t a = n, t = n + 1;

  // MCX(R0 -> a), borrowing the first wire of R_1.
  const auto stage_g = [&] { append_sub_mcx(g, controls.first(2 * p), 2 * p, a, threshold); };
  // The b disjoint block gates MCX(R_i -> q_{i-1}), borrowing R0prime[i-1].
  const auto stage_blocks = [&] {
    for (std::uint32_t i = 1; i <= b; ++i) {
      const std::uint32_t begin = (1 + i) * p;
      const std::uint32_t size = std::min((2 + i) * p, n) - begin;
      append_sub_mcx(g, controls.subspan(begin, size), b + (i - 1), i - 1, threshold);
    }
  };
  // White-control middle gate: X-conjugated MCX(R0star + a -> t),
  // borrowing the first wire of R0prime.
  const auto stage_middle = [&] {
    for (std::uint32_t i = 0; i < b; ++i) g.push_back({TK::X, i, 0});
    std::vector<qubit_t> mid(controls.begin(), controls.begin() + b);
    mid.push_back(a);
    append_sub_mcx(g, mid, b, t, threshold);
    for (std::uint32_t i = 0; i < b; ++i) g.push_back({TK::X, i, 0});
  };

  stage_g();
  stage_blocks();
  stage_middle();
  stage_blocks();
  stage_g();
  if (!zeroed) {
    stage_blocks();
    stage_middle();
    tmpl.tail_begin = g.size();
    stage_blocks();
  } else {
    tmpl.tail_begin = g.size();
  }
  return tmpl;
}

}  // namespace

Partition make_partition(std::uint32_t n) {
  if (n < 5) throw std::invalid_argument("make_partition: need at least 5 controls");
  Partition part;
  part.n = n;
  part.p = isqrt_floor(n);
  const std::uint32_t tail = n - 2 * part.p;
  part.b = (tail + part.p - 1) / part.p;
  part.r = (tail - 1) % part.p + 1;
  return part;
}

Circuit synth_frak_C(const Partition& part, std::span<const qubit_t> controls, qubit_t a,
                     qubit_t t) {
  if (controls.size() != part.n)
    throw std::invalid_argument("synth_frak_C: control count does not match partition");
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(a);
  all.push_back(t);
  detail::check_distinct(all, "synth_frak_C");
  Circuit c = detail::annotated_shell(controls, {}, {}, t);
  c.roles[a] = WireRole::BorrowedAncilla;

  const auto blocks = [&] {
    for (std::uint32_t i = 1; i <= part.b; ++i) {
      const std::uint32_t begin = (1 + i) * part.p;
      const std::uint32_t size = std::min((2 + i) * part.p, part.n) - begin;
      const auto block = controls.subspan(begin, size);
      c.add(McxGate{{block.begin(), block.end()},
                    std::vector<bool>(size, true),
                    controls[i - 1]});
    }
  };
  blocks();
  std::vector<qubit_t> mid(controls.begin(), controls.begin() + part.b);
  std::vector<bool> polarity(part.b, false);
  mid.push_back(a);
  polarity.push_back(true);
  c.add(McxGate{std::move(mid), std::move(polarity), t});
  blocks();
  return c;
}

const Template& mcx_template(std::uint32_t n, std::uint32_t threshold, bool zeroed) {
  require_threshold(threshold);
  if (n == 0) throw std::invalid_argument("mcx_template: need at least one control");
  if (!zeroed && n <= threshold) return base_template(n);
  if (zeroed && n < 5) return base_template(n);

  static std::unordered_map<std::uint64_t, Template> memo;
  const std::uint64_t key =
      (std::uint64_t{n}) | (std::uint64_t{threshold} << 32) | (std::uint64_t{zeroed} << 63);
  const auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;
  Template tmpl = build_partition_template(n, threshold, zeroed);
  return memo.emplace(key, std::move(tmpl)).first->second;
}

void emit_mcx_borrowed(std::span<const qubit_t> controls, qubit_t borrow, qubit_t target,
                       std::uint32_t threshold, GateSink& sink, ReplayOpts opts) {
  std::vector<qubit_t> wires(controls.begin(), controls.end());
  wires.push_back(borrow);
  wires.push_back(target);
  replay(mcx_template(static_cast<std::uint32_t>(controls.size()), threshold, false), wires,
         sink, opts);
}

void emit_mcx_zeroed(std::span<const qubit_t> controls, qubit_t zeroed, qubit_t target,
                     std::uint32_t threshold, GateSink& sink) {
  std::vector<qubit_t> wires(controls.begin(), controls.end());
  wires.push_back(zeroed);
  wires.push_back(target);
  replay(mcx_template(static_cast<std::uint32_t>(controls.size()), threshold, true), wires,
         sink);
}

Circuit synth_mcx_one_borrowed(std::span<const qubit_t> controls, qubit_t borrowed,
                               qubit_t target, const Options& opt) {
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(borrowed);
  all.push_back(target);
  detail::check_distinct(all, "synth_mcx_one_borrowed");
  const qubit_t borrow_list[] = {borrowed};
  Circuit c = detail::annotated_shell(controls, borrow_list, {}, target);
  MaterializeSink sink(c);
  emit_mcx_borrowed(controls, borrowed, target, opt.threshold, sink);
  return c;
}

Circuit synth_mcx_one_zeroed(std::span<const qubit_t> controls, qubit_t zeroed,
                             qubit_t target, const Options& opt) {
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(zeroed);
  all.push_back(target);
  detail::check_distinct(all, "synth_mcx_one_zeroed");
  const qubit_t zero_list[] = {zeroed};
  Circuit c = detail::annotated_shell(controls, {}, zero_list, target);
  MaterializeSink sink(c);
  emit_mcx_zeroed(controls, zeroed, target, opt.threshold, sink);
  return c;
}

void emit_mcu_one_zeroed(const Mat2& u, std::span<const qubit_t> controls, qubit_t zeroed,
                         qubit_t target, const Options& opt, GateSink& sink) {
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(zeroed);
  all.push_back(target);
  detail::check_distinct(all, "emit_mcu_one_zeroed");
  // The target is outside MCX(controls -> zeroed) and so serves as its
  // borrowed wire; the borrowed construction is exact for any state there.
  emit_mcx_borrowed(controls, target, zeroed, opt.threshold, sink);
  emit_lowered(controlled_unitary(u, zeroed, target), sink);
  emit_mcx_borrowed(controls, target, zeroed, opt.threshold, sink);
}

void emit_mc_su2(const Mat2& w, std::span<const qubit_t> controls, qubit_t target,
                 const Options& opt, GateSink& sink) {
  if (controls.size() < 2)
    throw std::invalid_argument("emit_mc_su2: need at least 2 controls");
  if (std::abs(w.determinant() - cplx(1, 0)) > 1e-10)
    throw std::invalid_argument("emit_mc_su2: input must be special unitary");
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(target);
  detail::check_distinct(all, "emit_mc_su2");

  const qubit_t peeled = controls.back();
  const auto rest = controls.first(controls.size() - 1);
  const AbcTriple abc = abc_decompose(w);
  const bool conj = opt.su2_conjugate_second;

  emit_lowered(controlled_unitary(abc.c, peeled, target), sink);
  emit_mcx_borrowed(rest, peeled, target, opt.threshold, sink,
                    {.conjugate = false, .drop_tail = conj});
  emit_lowered(controlled_unitary(abc.b, peeled, target), sink);
  emit_mcx_borrowed(rest, peeled, target, opt.threshold, sink,
                    {.conjugate = conj, .drop_tail = conj});
  emit_lowered(controlled_unitary(abc.a, peeled, target), sink);
}

Circuit synth_mcu_one_zeroed(const Mat2& u, std::span<const qubit_t> controls,
                             qubit_t zeroed, qubit_t target, const Options& opt) {
  const qubit_t zero_list[] = {zeroed};
  Circuit c = detail::annotated_shell(controls, {}, zero_list, target);
  MaterializeSink sink(c);
  emit_mcu_one_zeroed(u, controls, zeroed, target, opt, sink);
  return c;
}

Circuit synth_mc_su2(const Mat2& w, std::span<const qubit_t> controls, qubit_t target,
                     const Options& opt) {
  Circuit c = detail::annotated_shell(controls, {}, {}, target);
  MaterializeSink sink(c);
  emit_mc_su2(w, controls, target, opt, sink);
  return c;
}

}  // namespace mcx::synth
