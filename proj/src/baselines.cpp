#include "mcx/baselines.hpp"

#include "synth_util.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace mcx::synth {

namespace {


}  // namespace

void emit_toffoli(qubit_t c1, qubit_t c2, qubit_t target, GateSink& sink) {
  sink.on_tgate({TK::H, target, 0});
  sink.on_tgate({TK::Cnot, c2, target});
  sink.on_tgate({TK::Tdg, target, 0});
  sink.on_tgate({TK::Cnot, c1, target});
  sink.on_tgate({TK::T, target, 0});
  sink.on_tgate({TK::Cnot, c2, target});
  sink.on_tgate({TK::Tdg, target, 0});
  sink.on_tgate({TK::Cnot, c1, target});
  sink.on_tgate({TK::T, c2, 0});
  sink.on_tgate({TK::T, target, 0});
  sink.on_tgate({TK::H, target, 0});
  sink.on_tgate({TK::Cnot, c1, c2});
  sink.on_tgate({TK::T, c1, 0});
  sink.on_tgate({TK::Tdg, c2, 0});
  sink.on_tgate({TK::Cnot, c1, c2});
}

void emit_mcx_tiny(std::span<const qubit_t> controls, qubit_t target, GateSink& sink) {
  if (controls.size() == 1)
    sink.on_tgate({TK::Cnot, controls[0], target});
  else if (controls.size() == 2)
    emit_toffoli(controls[0], controls[1], target, sink);
  else
    throw std::invalid_argument("emit_mcx_tiny: control count must be 1 or 2");
}

void emit_mcx_ladder(std::span<const qubit_t> controls, std::span<const qubit_t> borrows,
                     qubit_t target, GateSink& sink) {
  const std::size_t n = controls.size();
  if (n < 3) throw std::invalid_argument("emit_mcx_ladder: need at least 3 controls");
  if (borrows.size() < n - 2)
    throw std::invalid_argument("emit_mcx_ladder: need n-2 borrowed ancillae");
  const auto chain = [&](std::size_t j) -> std::array<qubit_t, 3> {
    if (j == 0) return {controls[n - 1], borrows[n - 3], target};
    return {controls[n - 1 - j], borrows[n - 3 - j], borrows[n - 2 - j]};
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j + 2 < n; ++j) {
      const auto [a, b, t] = chain(j);
      emit_toffoli(a, b, t, sink);
    }
    emit_toffoli(controls[0], controls[1], borrows[0], sink);
    for (std::size_t j = n - 3; j >= 1; --j) {
      const auto [a, b, t] = chain(j);
      emit_toffoli(a, b, t, sink);
    }
  }
}

void emit_mcx_split(std::span<const qubit_t> controls, qubit_t borrow, qubit_t target,
                    GateSink& sink) {
  const std::size_t n = controls.size();
  if (n < 3) throw std::invalid_argument("emit_mcx_split: need at least 3 controls");
  const std::size_t h = (n + 1) / 2;
  const auto s1 = controls.first(h);
  const auto s2 = controls.subspan(h);
  std::vector<qubit_t> s2a(s2.begin(), s2.end());
  s2a.push_back(borrow);
  const auto first_half = [&] {
    if (h <= 2)
      emit_mcx_tiny(s1, borrow, sink);
    else
      emit_mcx_ladder(s1, s2.first(h - 2), borrow, sink);
  };
  const auto second_half = [&] {
    if (s2a.size() <= 2)
      emit_mcx_tiny(s2a, target, sink);
    else
      emit_mcx_ladder(s2a, s1.first(s2a.size() - 2), target, sink);
  };
  first_half();
  second_half();
  first_half();
  second_half();
}

void emit_mcx_base(std::span<const qubit_t> controls, qubit_t borrow, qubit_t target,
                   GateSink& sink) {
  if (controls.empty()) throw std::invalid_argument("emit_mcx_base: no controls");
  if (controls.size() <= 2)
    emit_mcx_tiny(controls, target, sink);
  else
    emit_mcx_split(controls, borrow, target, sink);
}

void emit_log_tree(std::span<const qubit_t> controls, std::span<const qubit_t> zeroed,
                   qubit_t target, GateSink& sink) {
  const std::size_t n = controls.size();
  if (n < 2) throw std::invalid_argument("emit_log_tree: need at least 2 controls");
  if (zeroed.size() < n - 1)
    throw std::invalid_argument("emit_log_tree: need n-1 zeroed ancillae");
  std::vector<std::array<qubit_t, 3>> tree;
  std::vector<qubit_t> level(controls.begin(), controls.end());
  std::size_t next_ancilla = 0;
  while (level.size() > 1) {
    std::vector<qubit_t> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      const qubit_t node = zeroed[next_ancilla++];
      tree.push_back({level[i], level[i + 1], node});
      next.push_back(node);
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  for (const auto& [a, b, t] : tree) emit_toffoli(a, b, t, sink);
  sink.on_tgate({TK::Cnot, level[0], target});
  for (auto it = tree.rbegin(); it != tree.rend(); ++it)
    emit_toffoli((*it)[0], (*it)[1], (*it)[2], sink);
}

const Template& base_template(std::uint32_t n) {
  static std::unordered_map<std::uint32_t, Template> memo;
  const auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  Template tmpl;
  tmpl.n = n;
  std::vector<qubit_t> controls(n);
  for (std::uint32_t i = 0; i < n; ++i) controls[i] = i;
  TemplateBuilder builder(tmpl.gates);
  emit_mcx_base(controls, n, n + 1, builder);
  tmpl.tail_begin = tmpl.gates.size();
  return memo.emplace(n, std::move(tmpl)).first->second;
}

Circuit synth_ladder(std::span<const qubit_t> controls, std::span<const qubit_t> borrowed,
                     qubit_t target) {
  if (controls.size() < 3)
    throw std::invalid_argument("synth_ladder: need at least 3 controls");
  if (borrowed.size() != controls.size() - 2)
    throw std::invalid_argument("synth_ladder: expected exactly n-2 borrowed ancillae");
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.insert(all.end(), borrowed.begin(), borrowed.end());
  all.push_back(target);
  detail::check_distinct(all, "synth_ladder");
  Circuit c = detail::annotated_shell(controls, borrowed, {}, target);
  MaterializeSink sink(c);
  emit_mcx_ladder(controls, borrowed, target, sink);
  return c;
}

Circuit synth_split(std::span<const qubit_t> controls, qubit_t borrowed, qubit_t target) {
  if (controls.size() < 3)
    throw std::invalid_argument("synth_split: need at least 3 controls");
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(borrowed);
  all.push_back(target);
  detail::check_distinct(all, "synth_split");
  const qubit_t borrow_list[] = {borrowed};
  Circuit c = detail::annotated_shell(controls, borrow_list, {}, target);
  MaterializeSink sink(c);
  emit_mcx_split(controls, borrowed, target, sink);
  return c;
}

Circuit synth_log_tree(std::span<const qubit_t> controls, std::span<const qubit_t> zeroed,
                       qubit_t target) {
  if (controls.size() < 2)
    throw std::invalid_argument("synth_log_tree: need at least 2 controls");
  if (zeroed.size() < controls.size() - 1)
    throw std::invalid_argument("synth_log_tree: need n-1 zeroed ancillae");
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.insert(all.end(), zeroed.begin(), zeroed.end());
  all.push_back(target);
  detail::check_distinct(all, "synth_log_tree");
  Circuit c = detail::annotated_shell(controls, {}, zeroed, target);
  MaterializeSink sink(c);
  emit_log_tree(controls, zeroed, target, sink);
  return c;
}

Circuit base_case_mcx(std::uint32_t threshold, std::span<const qubit_t> controls,
                      qubit_t borrowed, qubit_t target) {
  const std::size_t n = controls.size();
  if (n < 1 || n > threshold)
    throw std::invalid_argument("base_case_mcx: control count outside 1..threshold");
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.push_back(borrowed);
  all.push_back(target);
  detail::check_distinct(all, "base_case_mcx");
  const qubit_t borrow_list[] = {borrowed};
  Circuit c = detail::annotated_shell(controls, borrow_list, {}, target);
  MaterializeSink sink(c);
  emit_mcx_base(controls, borrowed, target, sink);
  return c;
}

}  // namespace mcx::synth
