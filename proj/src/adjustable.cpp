#include "mcx/adjustable.hpp"

#include <stdexcept>

#include "synth_util.hpp"

namespace mcx::synth {

AncillaSplit make_ancilla_split(std::uint32_t n, std::span<const qubit_t> ancillae) {
  const std::size_t m = ancillae.size();
  if (m < 2 || m > n)
    throw std::invalid_argument("make_ancilla_split: need 2 <= ancillae <= controls");
  const std::size_t u = m / 2;
  AncillaSplit split;
  split.a0.assign(ancillae.begin(), ancillae.begin() + u);
  split.a1.assign(ancillae.begin() + u, ancillae.end());
  split.block_sizes.resize(u);
  for (std::size_t i = 0; i < u; ++i)
    split.block_sizes[i] = static_cast<std::uint32_t>((i + 1) * std::uint64_t{n} / u -
                                                      i * std::uint64_t{n} / u);
  return split;
}

void emit_mcx_adjustable(std::span<const qubit_t> controls, std::span<const qubit_t> zeroed,
                         qubit_t target, std::uint32_t threshold, GateSink& sink) {
  std::vector<qubit_t> all(controls.begin(), controls.end());
  all.insert(all.end(), zeroed.begin(), zeroed.end());
  all.push_back(target);
  detail::check_distinct(all, "emit_mcx_adjustable");
  const AncillaSplit split =
      make_ancilla_split(static_cast<std::uint32_t>(controls.size()), zeroed);
  const std::size_t u = split.a0.size();

  const auto block_stage = [&] {
    std::size_t begin = 0;
    for (std::size_t i = 0; i < u; ++i) {
      const auto block = controls.subspan(begin, split.block_sizes[i]);
      begin += block.size();
      if (block.size() == 1)
        sink.on_tgate({TK::Cnot, block[0], split.a0[i]});
      else if (block.size() == 2)
        emit_toffoli(block[0], block[1], split.a0[i], sink);
      else
        emit_mcx_zeroed(block, split.a1[i], split.a0[i], threshold, sink);
    }
  };

  block_stage();
  if (u == 1)
    sink.on_tgate({TK::Cnot, split.a0[0], target});
  else
    emit_log_tree(split.a0, split.a1, target, sink);
  block_stage();
}

Circuit synth_mcx_adjustable(std::span<const qubit_t> controls,
                             std::span<const qubit_t> zeroed, qubit_t target,
                             const Options& opt) {
  Circuit c = detail::annotated_shell(controls, {}, zeroed, target);
  MaterializeSink sink(c);
  emit_mcx_adjustable(controls, zeroed, target, opt.threshold, sink);
  return c;
}

}  // namespace mcx::synth
