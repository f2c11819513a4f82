#include "mcx/estimate.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "mcx/baselines.hpp"
#include "mcx/gate_algebra.hpp"

namespace mcx::est {

namespace {

using synth::CountingSink;
using synth::Options;

constexpr std::uint64_t kModelLimit = 1'000'000'000;

struct SubCost {
  std::uint64_t depth = 0;
  std::uint64_t cnots = 0;
  std::uint64_t singles = 0;
};

std::vector<qubit_t> iota_wires(qubit_t first, std::uint64_t count) {
  std::vector<qubit_t> w(count);
  std::iota(w.begin(), w.end(), first);
  return w;
}

void check_threshold(std::uint32_t threshold) {
  if (threshold < 4 || threshold > kCountingCutoff)
    throw std::invalid_argument("estimate: threshold out of range");
}

SubCost base_cost(std::uint32_t n) {
  static std::unordered_map<std::uint32_t, SubCost> memo;
  const auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  CountingSink sink(n + 2);
  const auto wires = iota_wires(0, n + 2ull);
  synth::replay(synth::base_template(n), wires, sink);
  const SubCost cost{sink.depth(), sink.cnots(), sink.singles()};
  memo.emplace(n, cost);
  return cost;
}

SubCost model_borrowed(std::uint64_t n, std::uint32_t threshold);

// Costs of one partition level: the 2p-control gate, the widest parallel
// block, one full blocks stage, and the (b+1)-control middle gate.
struct StageParts {
  SubCost g;
  SubCost mid;
  std::uint64_t band_depth = 0;
  std::uint64_t band_cnots = 0;
  std::uint64_t band_singles = 0;
  std::uint64_t b = 0;
};

StageParts partition_parts(std::uint64_t n, std::uint32_t threshold) {
  const synth::Partition part = synth::make_partition(static_cast<std::uint32_t>(n));
  StageParts s;
  s.b = part.b;
  s.g = model_borrowed(2ull * part.p, threshold);
  s.mid = model_borrowed(part.b + 1ull, threshold);
  const SubCost cp = model_borrowed(part.p, threshold);
  const SubCost cr = model_borrowed(part.r, threshold);
  s.band_depth = part.b >= 2 ? std::max(cp.depth, cr.depth) : cr.depth;
  s.band_cnots = (part.b - 1) * cp.cnots + cr.cnots;
  s.band_singles = (part.b - 1) * cp.singles + cr.singles;
  return s;
}

std::unordered_map<std::uint64_t, SubCost>& model_memo(std::uint32_t threshold, bool zeroed) {
  static std::map<std::uint64_t, std::unordered_map<std::uint64_t, SubCost>> memo;
  return memo[(std::uint64_t{threshold} << 1) | std::uint64_t{zeroed}];
}

SubCost model_borrowed(std::uint64_t n, std::uint32_t threshold) {
  if (n <= threshold) return base_cost(static_cast<std::uint32_t>(n));
  if (n > kModelLimit) throw std::invalid_argument("estimate: instance too large");
  auto& memo = model_memo(threshold, false);
  const auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  const StageParts s = partition_parts(n, threshold);
  SubCost c;
  c.depth = 2 * s.g.depth + 4 * s.band_depth + 2 * s.mid.depth + 4;
  c.cnots = 2 * s.g.cnots + 4 * s.band_cnots + 2 * s.mid.cnots;
  c.singles = 2 * s.g.singles + 4 * s.band_singles + 2 * s.mid.singles + 4 * s.b;
  memo.emplace(n, c);
  return c;
}

SubCost model_zeroed(std::uint64_t n, std::uint32_t threshold) {
  if (n < 5) return base_cost(static_cast<std::uint32_t>(n));
  if (n > kModelLimit) throw std::invalid_argument("estimate: instance too large");
  auto& memo = model_memo(threshold, true);
  const auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  const StageParts s = partition_parts(n, threshold);
  SubCost c;
  c.depth = 2 * s.g.depth + 2 * s.band_depth + s.mid.depth + 2;
  c.cnots = 2 * s.g.cnots + 2 * s.band_cnots + s.mid.cnots;
  c.singles = 2 * s.g.singles + 2 * s.band_singles + s.mid.singles + 2 * s.b;
  memo.emplace(n, c);
  return c;
}

SubCost model_dropped(std::uint64_t n, std::uint32_t threshold) {
  SubCost full = model_borrowed(n, threshold);
  if (n <= threshold) return full;
  const StageParts s = partition_parts(n, threshold);
  full.depth -= s.band_depth;
  full.cnots -= s.band_cnots;
  full.singles -= s.band_singles;
  return full;
}

SubCost cu_cost(const Mat2& v) {
  const Circuit c = controlled_unitary(v, 0, 1);
  const GateCounts gc = gate_counts(c);
  return {asap_depth(c), gc.cnots, gc.singles};
}

ResourceProfile from_sink(const CountingSink& sink) {
  return {sink.depth(), sink.cnots(), sink.singles(), 0, 0, 0.0};
}

ResourceProfile from_cost(const SubCost& c) {
  return {c.depth, c.cnots, c.singles, 0, 0, 0.0};
}

ResourceProfile tiny_profile(std::uint64_t n) {
  CountingSink sink(static_cast<std::uint32_t>(n + 1));
  const auto wires = iota_wires(0, n + 1);
  synth::emit_mcx_tiny({wires.data(), n}, wires[n], sink);
  return from_sink(sink);
}

ResourceProfile est_polylog(std::uint64_t n, std::uint32_t threshold, bool zeroed) {
  ResourceProfile rp;
  if (n <= kCountingCutoff) {
    CountingSink sink(static_cast<std::uint32_t>(n + 2));
    const auto wires = iota_wires(0, n + 2);
    const std::span<const qubit_t> controls(wires.data(), n);
    if (zeroed)
      synth::emit_mcx_zeroed(controls, wires[n], wires[n + 1], threshold, sink);
    else
      synth::emit_mcx_borrowed(controls, wires[n], wires[n + 1], threshold, sink);
    rp = from_sink(sink);
  } else {
    rp = from_cost(zeroed ? model_zeroed(n, threshold) : model_borrowed(n, threshold));
  }
  (zeroed ? rp.zeroed : rp.borrowed) = n >= 3 ? 1 : 0;
  return rp;
}

ResourceProfile est_approx(const MethodId& method, std::uint64_t n, std::uint32_t threshold) {
  const double eps = method.epsilon;
  ResourceProfile rp;
  if (n <= kCountingCutoff) {
    CountingSink sink(static_cast<std::uint32_t>(n + 1));
    const auto wires = iota_wires(0, n + 1);
    synth::emit_mcu_approx(method.u, {wires.data(), n}, wires[n], eps,
                           {threshold, method.su2_conjugate_second}, sink);
    rp = from_sink(sink);
    rp.error_bound = synth::plan_approx(static_cast<std::uint32_t>(n), eps).truncation_bound;
    return rp;
  }
  const synth::ApproxPlan plan =
      synth::plan_approx(static_cast<std::uint32_t>(n), eps, method.u);
  SubCost total;
  for (std::uint32_t j = 1; j <= plan.k; ++j) {
    const SubCost mcx = model_borrowed(n - j, threshold);
    const SubCost down = cu_cost(Mat2(plan.roots[j - 1].adjoint()));
    const SubCost up = cu_cost(plan.roots[j - 1]);
    total.depth += 2 * mcx.depth + down.depth + up.depth;
    total.cnots += 2 * mcx.cnots + down.cnots + up.cnots;
    total.singles += 2 * mcx.singles + down.singles + up.singles;
  }
  if (plan.truncation_bound == 0.0) {
    const SubCost residual = cu_cost(plan.roots[plan.k - 1]);
    total.depth += residual.depth;
    total.cnots += residual.cnots;
    total.singles += residual.singles;
  }
  rp = from_cost(total);
  rp.error_bound = plan.truncation_bound;
  return rp;
}

ResourceProfile est_adjustable(const MethodId& method, std::uint64_t n,
                               std::uint32_t threshold) {
  const std::uint64_t m = method.ancillae;
  if (m < 2 || m > n)
    throw std::invalid_argument("estimate: adjustable needs 2 <= ancillae <= n");
  if (n <= kCountingCutoff) {
    CountingSink sink(static_cast<std::uint32_t>(n + m + 1));
    const auto wires = iota_wires(0, n + m + 1);
    synth::emit_mcx_adjustable({wires.data(), n}, {wires.data() + n, m}, wires[n + m],
                               threshold, sink);
    ResourceProfile rp = from_sink(sink);
    rp.zeroed = m;
    return rp;
  }
  if (n > kStreamLimit) throw std::invalid_argument("estimate: instance too large");
  const auto ancillae = iota_wires(static_cast<qubit_t>(n), m);
  const synth::AncillaSplit split =
      synth::make_ancilla_split(static_cast<std::uint32_t>(n), ancillae);
  SubCost stage;
  for (const std::uint32_t s : split.block_sizes) {
    const SubCost block = s == 1   ? SubCost{1, 1, 0}
                          : s == 2 ? SubCost{d_tof, 6, 9}
                                   : model_zeroed(s, threshold);
    stage.depth = std::max(stage.depth, block.depth);
    stage.cnots += block.cnots;
    stage.singles += block.singles;
  }
  const std::uint64_t u = split.a0.size();
  SubCost core{1, 1, 0};
  if (u >= 2) {
    const std::uint64_t levels = std::bit_width(u - 1);
    core.depth = 2 * levels * d_tof + 1;
    core.cnots = 12 * (u - 1) + 1;
    core.singles = 18 * (u - 1);
  }
  SubCost total{2 * stage.depth + core.depth, 2 * stage.cnots + core.cnots,
                2 * stage.singles + core.singles};
  ResourceProfile rp = from_cost(total);
  rp.zeroed = m;
  return rp;
}

ResourceProfile est_streamed(Method kind, std::uint64_t n) {
  if (n > kStreamLimit) throw std::invalid_argument("estimate: instance too large");
  if (n <= 2 && kind != Method::LogTree) {
    ResourceProfile rp = tiny_profile(n);
    return rp;
  }
  if (kind == Method::Ladder) {
    CountingSink sink(static_cast<std::uint32_t>(2 * n - 1));
    const auto wires = iota_wires(0, 2 * n - 1);
    synth::emit_mcx_ladder({wires.data(), n}, {wires.data() + n, n - 2}, wires[2 * n - 2],
                           sink);
    ResourceProfile rp = from_sink(sink);
    rp.borrowed = n - 2;
    return rp;
  }
  if (kind == Method::Split) {
    CountingSink sink(static_cast<std::uint32_t>(n + 2));
    const auto wires = iota_wires(0, n + 2);
    synth::emit_mcx_split({wires.data(), n}, wires[n], wires[n + 1], sink);
    ResourceProfile rp = from_sink(sink);
    rp.borrowed = 1;
    return rp;
  }
  if (n == 1) return tiny_profile(1);
  CountingSink sink(static_cast<std::uint32_t>(2 * n));
  const auto wires = iota_wires(0, 2 * n);
  synth::emit_log_tree({wires.data(), n}, {wires.data() + n, n - 1}, wires[2 * n - 1], sink);
  ResourceProfile rp = from_sink(sink);
  rp.zeroed = n - 1;
  return rp;
}

ResourceProfile est_mcu_zeroed(const MethodId& method, std::uint64_t n,
                               std::uint32_t threshold) {
  ResourceProfile rp;
  if (n <= kCountingCutoff) {
    CountingSink sink(static_cast<std::uint32_t>(n + 2));
    const auto wires = iota_wires(0, n + 2);
    synth::emit_mcu_one_zeroed(method.u, {wires.data(), n}, wires[n], wires[n + 1],
                               {threshold, method.su2_conjugate_second}, sink);
    rp = from_sink(sink);
  } else {
    const SubCost mcx = model_borrowed(n, threshold);
    const SubCost cu = cu_cost(method.u);
    rp = from_cost({2 * mcx.depth + cu.depth, 2 * mcx.cnots + cu.cnots,
                    2 * mcx.singles + cu.singles});
  }
  rp.zeroed = 1;
  return rp;
}

ResourceProfile est_mc_su2(const MethodId& method, std::uint64_t n, std::uint32_t threshold) {
  if (n < 2) throw std::invalid_argument("estimate: mc-su2 needs at least 2 controls");
  if (n <= kCountingCutoff) {
    CountingSink sink(static_cast<std::uint32_t>(n + 1));
    const auto wires = iota_wires(0, n + 1);
    synth::emit_mc_su2(method.u, {wires.data(), n}, wires[n],
                       {threshold, method.su2_conjugate_second}, sink);
    return from_sink(sink);
  }
  if (std::abs(method.u.determinant() - cplx(1, 0)) > 1e-10)
    throw std::invalid_argument("estimate: mc-su2 input must be special unitary");
  const AbcTriple abc = abc_decompose(method.u);
  const bool conj = method.su2_conjugate_second;
  const SubCost mcx =
      conj ? model_dropped(n - 1, threshold) : model_borrowed(n - 1, threshold);
  const SubCost ca = cu_cost(abc.a), cb = cu_cost(abc.b), cc = cu_cost(abc.c);
  return from_cost({ca.depth + cb.depth + cc.depth + 2 * mcx.depth,
                    ca.cnots + cb.cnots + cc.cnots + 2 * mcx.cnots,
                    ca.singles + cb.singles + cc.singles + 2 * mcx.singles});
}

std::uint64_t method_min_n(const MethodId& method) {
  switch (method.kind) {
    case Method::Approx:
    case Method::LogTree:
    case Method::McSu2:
      return 2;
    case Method::Adjustable:
      return std::max<std::uint64_t>(2, method.ancillae);
    case Method::Ladder:
    case Method::Split:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

Circuit materialize(const MethodId& method, std::uint64_t n, std::uint32_t threshold) {
  check_threshold(threshold);
  if (n == 0) throw std::invalid_argument("materialize: need at least one control");
  if (n < method_min_n(method))
    throw std::invalid_argument("materialize: too few controls for this method");
  const Options opt{threshold, method.su2_conjugate_second};
  const std::uint64_t m = method.ancillae;
  const auto wires = iota_wires(0, n + std::max<std::uint64_t>(m, n) + 2);
  const std::span<const qubit_t> controls(wires.data(), n);
  switch (method.kind) {
    case Method::PolylogBorrowed:
      return synth::synth_mcx_one_borrowed(controls, wires[n], wires[n + 1], opt);
    case Method::PolylogZeroed:
      return synth::synth_mcx_one_zeroed(controls, wires[n], wires[n + 1], opt);
    case Method::Approx:
      return synth::synth_mcu_approx(method.u, controls, wires[n], method.epsilon, opt);
    case Method::Adjustable:
      return synth::synth_mcx_adjustable(controls, {wires.data() + n, m}, wires[n + m], opt);
    case Method::Ladder:
      return synth::synth_ladder(controls, {wires.data() + n, n - 2}, wires[2 * n - 2]);
    case Method::Split:
      return synth::synth_split(controls, wires[n], wires[n + 1]);
    case Method::LogTree:
      return synth::synth_log_tree(controls, {wires.data() + n, n - 1}, wires[2 * n - 1]);
    case Method::McuZeroed:
      return synth::synth_mcu_one_zeroed(method.u, controls, wires[n], wires[n + 1], opt);
    case Method::McSu2:
      return synth::synth_mc_su2(method.u, controls, wires[n], opt);
  }
  throw std::logic_error("materialize: unknown method");
}

namespace {

int fprint_double(char* buf, std::size_t cap, double v) {
  return std::snprintf(buf, cap, "%.12g", v);
}

}  // namespace

const char* method_name(Method kind) {
  switch (kind) {
    case Method::PolylogBorrowed: return "polylog-borrowed";
    case Method::PolylogZeroed: return "polylog-zeroed";
    case Method::Approx: return "approx";
    case Method::Adjustable: return "adjustable";
    case Method::Ladder: return "ladder";
    case Method::Split: return "split";
    case Method::LogTree: return "log-tree";
    case Method::McuZeroed: return "mcu-zeroed";
    case Method::McSu2: return "mc-su2";
  }
  throw std::logic_error("method_name: unknown method");
}

Method parse_method(const std::string& name) {
  for (const Method kind :
       {Method::PolylogBorrowed, Method::PolylogZeroed, Method::Approx, Method::Adjustable,
        Method::Ladder, Method::Split, Method::LogTree, Method::McuZeroed, Method::McSu2})
    if (name == method_name(kind)) return kind;
  throw std::invalid_argument("unknown method: " + name);
}

ResourceProfile estimate(const MethodId& method, std::uint64_t n, std::uint32_t threshold) {
  check_threshold(threshold);
  if (n == 0) throw std::invalid_argument("estimate: need at least one control");
  switch (method.kind) {
    case Method::PolylogBorrowed:
      return est_polylog(n, threshold, false);
    case Method::PolylogZeroed:
      return est_polylog(n, threshold, true);
    case Method::Approx:
      return est_approx(method, n, threshold);
    case Method::Adjustable:
      return est_adjustable(method, n, threshold);
    case Method::Ladder:
    case Method::Split:
    case Method::LogTree:
      return est_streamed(method.kind, n);
    case Method::McuZeroed:
      return est_mcu_zeroed(method, n, threshold);
    case Method::McSu2:
      return est_mc_su2(method, n, threshold);
  }
  throw std::logic_error("estimate: unknown method");
}

std::uint64_t stage_serial_depth(std::uint64_t n, std::uint32_t threshold, bool zeroed) {
  check_threshold(threshold);
  if (n == 0) throw std::invalid_argument("stage_serial_depth: need at least one control");
  return (zeroed ? model_zeroed(n, threshold) : model_borrowed(n, threshold)).depth;
}

std::uint64_t stage_serial_depth_drop(std::uint64_t n, std::uint32_t threshold) {
  check_threshold(threshold);
  if (n == 0) throw std::invalid_argument("stage_serial_depth: need at least one control");
  return model_dropped(n, threshold).depth;
}

LoweredCounts recurrence_counts(std::uint64_t n, std::uint32_t threshold, bool zeroed) {
  check_threshold(threshold);
  if (n == 0) throw std::invalid_argument("recurrence_counts: need at least one control");
  const SubCost c = zeroed ? model_zeroed(n, threshold) : model_borrowed(n, threshold);
  return {c.cnots, c.singles};
}

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::uint32_t points) {
  if (lo < 1 || hi < lo || points == 0)
    throw std::invalid_argument("log_spaced: bad range");
  std::vector<std::uint64_t> out;
  if (points == 1) return {hi};
  const double ratio = std::log(static_cast<double>(hi) / static_cast<double>(lo)) /
                       static_cast<double>(points - 1);
  for (std::uint32_t i = 0; i < points; ++i) {
    const double x = static_cast<double>(lo) * std::exp(ratio * i);
    auto v = static_cast<std::uint64_t>(std::llround(x));
    v = std::clamp(v, lo, hi);
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  if (out.back() != hi) out.push_back(hi);
  return out;
}

std::vector<ConsistencyPoint> consistency_check(const MethodId& method,
                                                std::uint32_t threshold,
                                                std::uint64_t n_max, std::uint32_t points) {
  check_threshold(threshold);
  if (n_max > kCountingCutoff)
    throw std::invalid_argument("consistency_check: n_max above the counting cutoff");
  const std::uint64_t lo = method_min_n(method);
  if (n_max < lo) throw std::invalid_argument("consistency_check: n_max below method minimum");
  std::vector<ConsistencyPoint> report;
  for (const std::uint64_t n : log_spaced(lo, n_max, points)) {
    ConsistencyPoint point;
    point.n = n;
    const ResourceProfile rp = estimate(method, n, threshold);
    point.depth_estimate = rp.depth;
    point.cnots_estimate = rp.cnots;
    point.singles_estimate = rp.singles;
    if (rp.size() > kMaterializeGuard) {
      report.push_back(point);
      continue;
    }
    const Circuit c = materialize(method, n, threshold);
    const GateCounts gc = gate_counts(c);
    point.materialized = true;
    point.depth_measured = asap_depth(c);
    point.cnots_measured = gc.cnots;
    point.singles_measured = gc.singles;
    point.matches = point.depth_measured == point.depth_estimate &&
                    point.cnots_measured == point.cnots_estimate &&
                    point.singles_measured == point.singles_estimate;
    report.push_back(point);
  }
  return report;
}

bool all_consistent(std::span<const ConsistencyPoint> report) {
  return std::all_of(report.begin(), report.end(),
                     [](const ConsistencyPoint& p) { return !p.materialized || p.matches; });
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (spec.methods.empty() || spec.ns.empty())
    throw std::invalid_argument("sweep: empty grid");
  std::vector<SweepRow> rows;
  const auto push = [&](const MethodId& method, std::uint64_t n, double epsilon) {
    SweepRow row;
    row.method = method_name(method.kind);
    row.n = n;
    row.epsilon = epsilon;
    row.profile = estimate(method, n, spec.threshold);
    row.m = row.profile.zeroed + row.profile.borrowed;
    rows.push_back(std::move(row));
  };
  for (const MethodId& method : spec.methods) {
    for (const std::uint64_t n : spec.ns) {
      if (n < method_min_n(method) && method.kind != Method::Adjustable) continue;
      switch (method.kind) {
        case Method::Adjustable: {
          const std::vector<std::uint64_t> ms =
              spec.ms.empty() ? std::vector<std::uint64_t>{method.ancillae} : spec.ms;
          for (const std::uint64_t m : ms) {
            if (m < 2 || m > n) continue;
            MethodId with_m = method;
            with_m.ancillae = m;
            push(with_m, n, 0.0);
          }
          break;
        }
        case Method::Approx: {
          const std::vector<double> epsilons =
              spec.epsilons.empty() ? std::vector<double>{method.epsilon} : spec.epsilons;
          for (const double eps : epsilons) {
            MethodId with_eps = method;
            with_eps.epsilon = eps;
            push(with_eps, n, eps);
          }
          break;
        }
        default:
          push(method, n, 0.0);
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "method,n,m,epsilon,depth,cnots,singles,zeroed,borrowed,error_bound\n";
  char buf[64];
  for (const SweepRow& row : rows) {
    out << row.method << ',' << row.n << ',' << row.m << ',';
    fprint_double(buf, sizeof buf, row.epsilon);
    out << buf << ',' << row.profile.depth << ',' << row.profile.cnots << ','
        << row.profile.singles << ',' << row.profile.zeroed << ',' << row.profile.borrowed
        << ',';
    fprint_double(buf, sizeof buf, row.profile.error_bound);
    out << buf << '\n';
  }
}

FitResult fit_depth(std::span<const SweepRow> rows, FitModel model) {
  if (rows.size() < 3) throw std::invalid_argument("fit_depth: need at least 3 rows");
  const auto basis = [model](std::uint64_t n) {
    const double l = std::log2(static_cast<double>(n));
    return model == FitModel::LinearInN ? static_cast<double>(n) : l * l * l;
  };
  double sx = 0, sy = 0;
  for (const SweepRow& row : rows) {
    sx += basis(row.n);
    sy += static_cast<double>(row.profile.depth);
  }
  const double mx = sx / static_cast<double>(rows.size());
  const double my = sy / static_cast<double>(rows.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (const SweepRow& row : rows) {
    const double dx = basis(row.n) - mx;
    const double dy = static_cast<double>(row.profile.depth) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_depth: degenerate design");
  FitResult fit;
  fit.model = model;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
    return fit;
  }
  double ss_res = 0;
  for (const SweepRow& row : rows) {
    const double r = static_cast<double>(row.profile.depth) - fit.slope * basis(row.n) -
                     fit.intercept;
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

namespace {

double cubed_log(std::uint64_t n) {
  const double l = std::log2(static_cast<double>(n));
  return l * l * l;
}

double lit_gidney(std::uint64_t n, std::uint64_t, double) { return 494.0 * n - 1413.0; }
double lit_silva(std::uint64_t n, std::uint64_t, double) { return 64.0 * n + 1645.0; }
double lit_approx_ref(std::uint64_t n, std::uint64_t, double epsilon) {
  if (epsilon <= 0.0) return std::nan("");
  return std::ceil(std::log2(std::numbers::pi / epsilon)) * (86.0 * cubed_log(n) - 2564.0);
}
double lit_barenco_one_borrowed(std::uint64_t n, std::uint64_t, double) {
  return 48.0 * n - 148.0;
}
double lit_barenco_chain_borrowed(std::uint64_t n, std::uint64_t, double) {
  return 24.0 * n - 43.0;
}
double lit_polylog_borrowed_ref(std::uint64_t n, std::uint64_t, double) {
  return 43.0 * cubed_log(n) - 1287.0;
}
double lit_barenco_one_zeroed(std::uint64_t n, std::uint64_t, double) {
  return 36.0 * n - 111.0;
}
double lit_barenco_chain_zeroed(std::uint64_t n, std::uint64_t, double) {
  return 12.0 * n - 12.0;
}
double lit_polylog_zeroed_ref(std::uint64_t n, std::uint64_t, double) {
  return 27.0 * cubed_log(n) - 808.0;
}
double lit_adjustable_ref(std::uint64_t n, std::uint64_t m, double) {
  if (m < 2 || m > n) return std::nan("");
  const double half_up = std::ceil(static_cast<double>(m) / 2.0);
  const double half_down = std::floor(static_cast<double>(m) / 2.0);
  const double l = std::log2(static_cast<double>(n) / half_up);
  return 27.0 * l * l * l + 16.0 * std::ceil(std::log2(half_down)) - 808.0;
}
double lit_he_tree(std::uint64_t n, std::uint64_t, double) {
  return 16.0 * std::ceil(std::log2(static_cast<double>(n))) + 12.0;
}

constexpr const char* kLitNote = "literature (different base cases possible)";

const LiteratureRow kLiteratureRows[] = {
    {"gidney", "494*n - 1413", "none", kLitNote, lit_gidney},
    {"silva(1e-7)", "64*n + 1645 at epsilon = 1e-7", "none", kLitNote, lit_silva},
    {"approx-reference", "ceil(log2(pi/epsilon)) * (86*log2(n)^3 - 2564)", "none", kLitNote,
     lit_approx_ref},
    {"barenco-1-borrowed", "48*n - 148", "1 borrowed", kLitNote, lit_barenco_one_borrowed},
    {"barenco-chain-borrowed", "24*n - 43", "n-2 borrowed", kLitNote,
     lit_barenco_chain_borrowed},
    {"polylog-borrowed-reference", "43*log2(n)^3 - 1287", "1 borrowed", kLitNote,
     lit_polylog_borrowed_ref},
    {"barenco-1-zeroed", "36*n - 111", "1 zeroed", kLitNote, lit_barenco_one_zeroed},
    {"barenco-chain-zeroed", "12*n - 12", "n-2 zeroed", kLitNote, lit_barenco_chain_zeroed},
    {"polylog-zeroed-reference", "27*log2(n)^3 - 808", "1 zeroed", kLitNote,
     lit_polylog_zeroed_ref},
    {"adjustable-reference", "27*log2(n/ceil(m/2))^3 + 16*ceil(log2(floor(m/2))) - 808",
     "m zeroed (2 <= m <= n)", kLitNote, lit_adjustable_ref},
    {"he-tree", "16*ceil(log2(n)) + 12", "n zeroed", kLitNote, lit_he_tree},
};

}  // namespace

std::span<const LiteratureRow> literature_table() { return kLiteratureRows; }

}  // namespace mcx::est
