#pragma once

// Shared internals of the synthesizers: wire-distinctness checks and the
// role-annotated circuit shell.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcx/circuit.hpp"

namespace mcx::synth::detail {

inline void check_distinct(std::vector<qubit_t> wires, const char* who) {
  std::sort(wires.begin(), wires.end());
  if (std::adjacent_find(wires.begin(), wires.end()) != wires.end())
    throw std::invalid_argument(std::string(who) + ": wires must be distinct");
}

inline Circuit annotated_shell(std::span<const qubit_t> controls,
                               std::span<const qubit_t> borrowed,
                               std::span<const qubit_t> zeroed, qubit_t target) {
  qubit_t top = target;
  for (qubit_t w : controls) top = std::max(top, w);
  for (qubit_t w : borrowed) top = std::max(top, w);
  for (qubit_t w : zeroed) top = std::max(top, w);
  Circuit c;
  c.width = top + 1;
  c.roles.assign(c.width, WireRole::Free);
  for (qubit_t w : controls) c.roles[w] = WireRole::Control;
  for (qubit_t w : borrowed) c.roles[w] = WireRole::BorrowedAncilla;
  for (qubit_t w : zeroed) c.roles[w] = WireRole::ZeroedAncilla;
  c.roles[target] = WireRole::Target;
  return c;
}

}  // namespace mcx::synth::detail
