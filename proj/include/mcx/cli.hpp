#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "mcx/estimate.hpp"

namespace mcx::cli {

// Parsed command state shared by the subcommands.
struct CliConfig {
  std::string command;
  std::uint64_t n = 0;
  est::MethodId method;
  std::uint32_t threshold = 30;
  std::uint64_t seed = 7;
  double tolerance = 1e-8;
  std::string qasm_out;
  std::string csv_out;
  bool json = true;  // machine payload on out; summary always on err
};

// Entry point shared by the binary and the in-process tests. args holds
// argv without the program name. Machine output (JSON or CSV) goes to
// out, human summaries and diagnostics to err. Returns 0 on success, 1
// when verification fails, 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Shared --unitary grammar: x, sx, t, rz=<radians> or ry=<radians>.
Mat2 parse_unitary(const std::string& spec);

}  // namespace mcx::cli
