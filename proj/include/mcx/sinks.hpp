#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcx/circuit.hpp"

namespace mcx::synth {

enum class TK : std::uint8_t { X, H, T, Tdg, Cnot };

// Lowered-gate alphabet of the multi-controlled NOT constructions: CNOTs
// plus the {X, H, T, Tdg} singles from Toffoli networks and polarity flips.
struct TGate {
  TK kind;
  qubit_t a;  // single-qubit wire, or CNOT control
  qubit_t b;  // CNOT target; unused for singles
};

const Mat2& tk_matrix(TK k);
TK tk_adjoint(TK k);

// Receives a lowered gate stream. on_tgate defaults to expanding into
// on_single/on_cnot; sinks that do not need matrices can override it.
class GateSink {
 public:
  virtual ~GateSink() = default;
  virtual void on_single(qubit_t wire, const Mat2& u) = 0;
  virtual void on_cnot(qubit_t control, qubit_t target) = 0;
  virtual void on_tgate(TGate g);
};

class MaterializeSink final : public GateSink {
 public:
  explicit MaterializeSink(Circuit& out) : out_(out) {}
  void on_single(qubit_t wire, const Mat2& u) override { out_.add(SingleQubitGate{wire, u}); }
  void on_cnot(qubit_t control, qubit_t target) override { out_.add(CnotGate{control, target}); }
 private:
  Circuit& out_;
};

// Mirrors asap_depth and gate_counts of the same stream without storing
// it, so estimates agree with materialized circuits by construction.
class CountingSink final : public GateSink {
 public:
  explicit CountingSink(std::uint32_t width) : frontier_(width, 0) {}
  void on_single(qubit_t wire, const Mat2&) override;
  void on_cnot(qubit_t control, qubit_t target) override;
  void on_tgate(TGate g) override;
  std::uint64_t depth() const { return depth_; }
  std::uint64_t cnots() const { return cnots_; }
  std::uint64_t singles() const { return singles_; }

 private:
  std::vector<std::uint64_t> frontier_;
  std::uint64_t depth_ = 0, cnots_ = 0, singles_ = 0;
};

// Collects a TGate stream verbatim; arbitrary-matrix singles are rejected
// since templates must stay within the fixed alphabet.
class TemplateBuilder final : public GateSink {
 public:
  explicit TemplateBuilder(std::vector<TGate>& out) : out_(out) {}
  void on_single(qubit_t wire, const Mat2& u) override;
  void on_cnot(qubit_t control, qubit_t target) override { out_.push_back({TK::Cnot, control, target}); }
  void on_tgate(TGate g) override { out_.push_back(g); }

 private:
  std::vector<TGate>& out_;
};

// A lowered multi-controlled NOT on canonical wires: controls 0..n-1,
// helper wire n (borrowed or zeroed), target n+1. tail_begin marks the
// final parallel-blocks band when the partition construction built one;
// replay can drop that band for inverse-pair cancellation.
struct Template {
  std::uint32_t n = 0;
  std::vector<TGate> gates;
  std::size_t tail_begin = 0;
};

struct ReplayOpts {
  bool conjugate = false;  // exact inverse: reversed order, adjoint singles
  bool drop_tail = false;  // omit gates from tail_begin on
};

// Emits a template through the sink; wires[i] is the physical wire for
// canonical index i (size must be n + 2).
void replay(const Template& tmpl, std::span<const qubit_t> wires, GateSink& sink,
            ReplayOpts opts = {});

// Forwards an already-lowered circuit gate by gate; macro gates rejected.
void emit_lowered(const Circuit& c, GateSink& sink);

}  // namespace mcx::synth
