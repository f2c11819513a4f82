#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mcx/adjustable.hpp"
#include "mcx/approx.hpp"
#include "mcx/gate_algebra.hpp"
#include "mcx/polylog.hpp"

namespace mcx::est {

enum class Method : std::uint8_t {
  PolylogBorrowed,
  PolylogZeroed,
  Approx,
  Adjustable,
  Ladder,
  Split,
  LogTree,
  McuZeroed,
  McSu2,
};

const char* method_name(Method kind);
Method parse_method(const std::string& name);

// A synthesis method plus the parameters it needs: epsilon for the
// approximate construction, the zeroed-ancilla budget for the adjustable
// one, the target unitary where the gate is not a plain NOT.
struct MethodId {
  Method kind = Method::PolylogBorrowed;
  double epsilon = 1e-3;
  std::uint64_t ancillae = 2;
  bool su2_conjugate_second = true;
  Mat2 u = mat_x();
};

struct ResourceProfile {
  std::uint64_t depth = 0;
  std::uint64_t cnots = 0;
  std::uint64_t singles = 0;
  std::uint64_t zeroed = 0;
  std::uint64_t borrowed = 0;
  double error_bound = 0.0;
  std::uint64_t size() const { return cnots + singles; }
};

// Instances up to this control count are costed by streaming the real
// emission through a counting sink, so they match materialized circuits
// gate for gate and layer for layer. Larger partition-based instances
// switch to the stage-serial recurrence model; gate counts stay exact
// there (counts are additive), depth becomes the model's band sum.
constexpr std::uint64_t kCountingCutoff = 2048;

// Methods whose circuits grow linearly are streamed at every size; this
// caps the counting sink's frontier allocation.
constexpr std::uint64_t kStreamLimit = 30'000'000;

ResourceProfile estimate(const MethodId& method, std::uint64_t n, std::uint32_t threshold = 30);

// Full circuit for the same method on the canonical wire layout the
// counting path uses (controls 0..n-1 first). Wire roles annotate the
// controls, ancillae, and target.
Circuit materialize(const MethodId& method, std::uint64_t n, std::uint32_t threshold = 30);

// Stage-serial depth of the partition construction. Base cases up to the
// threshold are measured from the emitted base circuits; above it
//   D(n)  = 2 D(2p) + 4 B + 2 D(b+1) + 4
//   D0(n) = 2 D(2p) + 2 B + D(b+1) + 2
// where B is the widest parallel block of the partition.
std::uint64_t stage_serial_depth(std::uint64_t n, std::uint32_t threshold, bool zeroed);

// Same model with the final parallel-blocks band omitted, mirroring the
// drop-tail replay used for inverse-pair cancellation.
std::uint64_t stage_serial_depth_drop(std::uint64_t n, std::uint32_t threshold);

struct LoweredCounts {
  std::uint64_t cnots = 0;
  std::uint64_t singles = 0;
};

// Exact lowered gate counts of the one-helper construction at any size,
// from the additive recurrence over the partition stages.
LoweredCounts recurrence_counts(std::uint64_t n, std::uint32_t threshold, bool zeroed);

struct ConsistencyPoint {
  std::uint64_t n = 0;
  bool materialized = false;  // false when the circuit would exceed the size guard
  bool matches = false;
  std::uint64_t depth_estimate = 0;
  std::uint64_t depth_measured = 0;
  std::uint64_t cnots_estimate = 0;
  std::uint64_t cnots_measured = 0;
  std::uint64_t singles_estimate = 0;
  std::uint64_t singles_measured = 0;
};

// Materialization guard for consistency_check, in lowered gates. Sized
// so every method fits at the counting cutoff with a moderate error
// budget; points past it are reported unmaterialized instead of checked.
constexpr std::uint64_t kMaterializeGuard = 32'000'000;

// Log-spaced sample of n <= n_max: materialize the circuit, measure ASAP
// depth and gate counts, compare with estimate(). Points whose exact gate
// count exceeds the guard are reported unmaterialized instead of checked.
std::vector<ConsistencyPoint> consistency_check(const MethodId& method,
                                                std::uint32_t threshold = 30,
                                                std::uint64_t n_max = kCountingCutoff,
                                                std::uint32_t points = 12);
bool all_consistent(std::span<const ConsistencyPoint> report);

struct SweepRow {
  std::string method;
  std::uint64_t n = 0;
  std::uint64_t m = 0;  // ancilla wires used (zeroed + borrowed)
  double epsilon = 0.0;
  ResourceProfile profile;
};

// Cross product of the grids, restricted per method: the m grid applies
// to the adjustable method (invalid m > n or m < 2 skipped), the epsilon
// grid to the approximate one; everything else sweeps n alone. Rows come
// out in grid order, deterministically.
struct SweepSpec {
  std::vector<MethodId> methods;
  std::vector<std::uint64_t> ns;
  std::vector<std::uint64_t> ms;
  std::vector<double> epsilons;
  std::uint32_t threshold = 30;
};
std::vector<SweepRow> sweep(const SweepSpec& spec);

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::uint32_t points);

// Header exactly: method,n,m,epsilon,depth,cnots,singles,zeroed,borrowed,error_bound
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

enum class FitModel : std::uint8_t { LinearInN, LinearInCubedLog };

struct FitResult {
  FitModel model = FitModel::LinearInN;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares of depth against n (LinearInN) or log2(n)^3
// (LinearInCubedLog); needs >= 3 rows and a non-degenerate design.
FitResult fit_depth(std::span<const SweepRow> rows, FitModel model);

// Published fitted depth expressions carried for comparison output only;
// their base-case circuits differ from ours, so they are reference data,
// never assertions about our circuits.
struct LiteratureRow {
  const char* name;
  const char* expression;  // depth in n (log base 2), with m or epsilon where noted
  const char* ancillae;
  const char* note;
  double (*depth)(std::uint64_t n, std::uint64_t m, double epsilon);
};
std::span<const LiteratureRow> literature_table();

}  // namespace mcx::est
