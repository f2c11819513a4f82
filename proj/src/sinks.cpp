#include "mcx/sinks.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcx/gate_algebra.hpp"

namespace mcx::synth {

const Mat2& tk_matrix(TK k) {
  switch (k) {
    case TK::X: return mat_x();
    case TK::H: return mat_h();
    case TK::T: return mat_t();
    case TK::Tdg: return mat_tdg();
    case TK::Cnot: break;
  }
  throw std::invalid_argument("tk_matrix: CNOT has no single-qubit matrix");
}

TK tk_adjoint(TK k) {
  switch (k) {
    case TK::T: return TK::Tdg;
    case TK::Tdg: return TK::T;
    default: return k;  // X, H, CNOT are self-adjoint
  }
}

void GateSink::on_tgate(TGate g) {
  if (g.kind == TK::Cnot)
    on_cnot(g.a, g.b);
  else
    on_single(g.a, tk_matrix(g.kind));
}

void CountingSink::on_single(qubit_t wire, const Mat2&) {
  ++singles_;
  const std::uint64_t slot = frontier_[wire] + 1;
  frontier_[wire] = slot;
  depth_ = std::max(depth_, slot);
}

void CountingSink::on_cnot(qubit_t control, qubit_t target) {
  ++cnots_;
  const std::uint64_t slot = std::max(frontier_[control], frontier_[target]) + 1;
  frontier_[control] = frontier_[target] = slot;
  depth_ = std::max(depth_, slot);
}

void CountingSink::on_tgate(TGate g) {
  if (g.kind == TK::Cnot) {
    on_cnot(g.a, g.b);
  } else {
    ++singles_;
    const std::uint64_t slot = frontier_[g.a] + 1;
    frontier_[g.a] = slot;
    depth_ = std::max(depth_, slot);
  }
}

void TemplateBuilder::on_single(qubit_t wire, const Mat2& u) {
  for (TK k : {TK::X, TK::H, TK::T, TK::Tdg})
    if (&u == &tk_matrix(k) || (u - tk_matrix(k)).cwiseAbs().maxCoeff() < 1e-15) {
      out_.push_back({k, wire, 0});
      return;
    }
  throw std::invalid_argument("TemplateBuilder: single outside the template alphabet");
}

void replay(const Template& tmpl, std::span<const qubit_t> wires, GateSink& sink,
            ReplayOpts opts) {
  if (wires.size() != tmpl.n + 2)
    throw std::invalid_argument("replay: wire map size mismatch");
  const std::size_t end = opts.drop_tail ? tmpl.tail_begin : tmpl.gates.size();
  const auto emit = [&](const TGate& g) {
    const TK kind = opts.conjugate ? tk_adjoint(g.kind) : g.kind;
    sink.on_tgate({kind, wires[g.a], g.kind == TK::Cnot ? wires[g.b] : 0});
  };
  if (opts.conjugate) {
    for (std::size_t i = end; i-- > 0;) emit(tmpl.gates[i]);
  } else {
    for (std::size_t i = 0; i < end; ++i) emit(tmpl.gates[i]);
  }
}

void emit_lowered(const Circuit& c, GateSink& sink) {
  for (const Gate& g : c.gates) {
    if (const auto* s = std::get_if<SingleQubitGate>(&g)) {
      sink.on_single(s->target, s->u);
    } else if (const auto* cx = std::get_if<CnotGate>(&g)) {
      sink.on_cnot(cx->control, cx->target);
    } else {
      throw std::invalid_argument("emit_lowered: macro gate in lowered circuit");
    }
  }
}

}  // namespace mcx::synth
