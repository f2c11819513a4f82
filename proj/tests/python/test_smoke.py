import math

import pytest

import mcxsynth as mx


def test_module_surface():
    assert set(mx.methods()) == {
        "polylog-borrowed",
        "polylog-zeroed",
        "approx",
        "adjustable",
        "ladder",
        "split",
        "log-tree",
        "mcu-zeroed",
        "mc-su2",
    }


def test_estimate_pinned_values():
    rp = mx.estimate("polylog-borrowed", 100)
    assert rp.depth == 5558
    assert rp.cnots == 12960
    assert rp.singles == 19472
    assert rp.size == rp.cnots + rp.singles
    assert rp.borrowed == 1 and rp.zeroed == 0


def test_synthesize_matches_estimate():
    circuit = mx.synthesize("polylog-borrowed", 100)
    rp = mx.estimate("polylog-borrowed", 100)
    assert circuit.depth() == rp.depth
    assert circuit.gate_counts() == (rp.cnots, rp.singles)
    assert len(circuit) == rp.size
    assert circuit.width == 102


def test_qasm_export():
    qasm = mx.synthesize("split", 5).qasm()
    assert qasm.startswith("OPENQASM 2.0;")
    assert "qreg q[7];" in qasm


def test_verify_exact_roundtrip():
    report = mx.verify("adjustable", 6, ancillae=4)
    assert report.passed
    assert report.mode == "exhaustive"
    assert report.max_deviation < 1e-9
    assert report.failures == 0


def test_verify_su2_and_inverse():
    report = mx.verify("mc-su2", 4, unitary="rz=0.9")
    assert report.passed
    circuit = mx.synthesize("mc-su2", 4, unitary="rz=0.9")
    assert len(circuit.inverse()) == len(circuit)


def test_verify_approx_is_spectral():
    result = mx.verify("approx", 5, epsilon=0.3)
    assert result.converged
    assert 0.0 < result.value <= math.pi / 8 + 1e-8


def test_sweep_csv_golden_row():
    csv = mx.sweep_csv(["ladder"], 10, 10, 1)
    lines = csv.splitlines()
    assert lines[0] == "method,n,m,epsilon,depth,cnots,singles,zeroed,borrowed,error_bound"
    assert lines[1] == "ladder,10,8,0,322,192,288,0,8,0"


def test_stage_serial_depth_recurrence_witness():
    assert mx.stage_serial_depth(100) == 2 * 1351 + 4 * 551 + 2 * 458 + 4


def test_literature_rows():
    rows = mx.literature()
    assert len(rows) == 11
    assert {row["name"] for row in rows} >= {"gidney", "he-tree", "adjustable-reference"}


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        mx.estimate("no-such-method", 5)
    with pytest.raises(ValueError):
        mx.estimate("adjustable", 5, ancillae=1)
    with pytest.raises(ValueError):
        mx.verify("mc-su2", 5, unitary="t")
