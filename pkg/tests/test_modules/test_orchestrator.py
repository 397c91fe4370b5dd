"""Tests for the Euler frontend and the synthesis workflow."""

import math
from fractions import Fraction

import pytest

from app.core.exceptions import MatrixFormatError, NonUnitaryError
from app.modules.numtheory import RandomSource
from app.modules.orchestrator import SynthesisWorkflow, euler_decompose, parse_matrix, snap_angle
from app.modules.orchestrator.euler import working_context
from app.modules.ring import ONE, RingScalar
from app.modules.sim import simulate
from app.modules.synth import StateVec
from app.modules.target import choose_k
from app.schemas.common import PrimGate

INV_SQRT2 = "0.70710678118654752440084436210484903928483593768847"
HADAMARD = f"{INV_SQRT2} 0\n{INV_SQRT2} 0\n{INV_SQRT2} 0\n-{INV_SQRT2} 0\n"
IDENTITY = "1 0  0 0\n0 0  1 0\n"
T_GATE = f"1 0\n0 0\n0 0\n{INV_SQRT2} {INV_SQRT2}\n"


@pytest.fixture
def workflow(catalog):
    return SynthesisWorkflow(catalog)


def test_parse_matrix_accepts_comments():
    ctx = working_context(128)
    u = parse_matrix("# identity\n1 0 0 0  # top row\n0 0 1 0\n", ctx)
    assert u[0][0] == 1 and u[1][1] == 1 and u[0][1] == 0


@pytest.mark.parametrize("text", ["1 0 0 0 0 0 1", "1 0 0 0 0 0 1 x", "", "1e999999999 0 0 0 0 0 1 0"])
def test_parse_matrix_rejects(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text, working_context(128))


def test_euler_angles_of_hadamard():
    ctx = working_context(128)
    angles = euler_decompose(parse_matrix(HADAMARD, ctx), ctx)
    for value in (angles.alpha, angles.beta, angles.gamma, angles.delta):
        assert abs(float(value) - math.pi / 2) < 1e-12
    assert angles.residual < Fraction(1, 10**30)


def test_euler_angles_of_diagonal_matrix():
    ctx = working_context(128)
    angles = euler_decompose(parse_matrix(T_GATE, ctx), ctx)
    assert angles.diagonal
    assert abs(float(angles.beta) - math.pi / 4) < 1e-12
    assert angles.delta == 0


def test_snap_angle():
    ctx = working_context(128)
    spec, err = snap_angle(ctx.pi / 2 + ctx.mpf(10) ** -9, Fraction(1, 10**6), ctx)
    assert spec.pi_multiple == Fraction(1, 2) and spec.is_exact()
    assert Fraction(1, 10**10) < err < Fraction(1, 10**8)
    spec, err = snap_angle(ctx.mpf("0.3"), Fraction(1, 10**6), ctx)
    assert spec.kind == "radians" and not spec.is_exact()
    assert err < Fraction(1, 10**50)


def test_synthesize_unitary_identity(workflow):
    result = workflow.synthesize_unitary(IDENTITY, "1e-3", seed=0)
    assert result.circuit.gates == []
    assert result.report.eps_certified == "0"


def test_synthesize_unitary_t_gate(workflow):
    result = workflow.synthesize_unitary(T_GATE, "1e-3", seed=0)
    assert result.circuit.gates == [PrimGate(kind="T", qubits=(0,))]
    assert len(result.report.blocks) == 1


def test_synthesize_unitary_hadamard(workflow):
    result = workflow.synthesize_unitary(HADAMARD, "1e-2", seed=0)
    assert [g.kind for g in result.circuit.gates] == ["S", "H", "S", "H", "S"]
    assert result.eps_certified <= Fraction(1, 100)
    assert Fraction(result.report.eps_certified) < Fraction(1, 10**20)


def test_synthesize_unitary_exact_phase_hadamard(workflow):
    result = workflow.synthesize_unitary(HADAMARD, "1e-2", seed=0, exact_phase=True)
    assert result.report.exact_phase
    h = RingScalar(ONE, 1)
    zero = RingScalar.from_int(0)
    expected = StateVec([h, zero, zero, zero, h, zero, zero, zero])
    assert simulate(result.circuit, StateVec.basis(8, 0)) == expected


def test_synthesize_unitary_generic_rotation(workflow):
    # Rx(0.3) up to phase: cos(0.15), -i sin(0.15)
    c, s = "0.98877107793604228673498099865536", "0.14943813247359922069383311434994"
    text = f"{c} 0\n0 -{s}\n0 -{s}\n{c} 0\n"
    result = workflow.synthesize_unitary(text, "1e-2", seed=3)
    assert len(result.report.blocks) == 3
    assert result.eps_certified <= Fraction(1, 100)
    assert all(max(g.qubits) < 3 for g in result.circuit.gates)
    assert sum(result.report.gate_counts.values()) == result.report.total_gates


def test_synthesize_unitary_rejects_non_unitary(workflow):
    with pytest.raises(NonUnitaryError):
        workflow.synthesize_unitary("1 0 0 0 0 0 2 0", "1e-3", seed=0)


def test_verify_round_trip(workflow):
    result = workflow.synthesize("pi/8", "1e-3", seed=7)
    good = workflow.verify(result.circuit, "pi/8", "1e-3")
    assert good.certified
    assert Fraction(good.eps_certified) <= Fraction(1, 1000)
    bad = workflow.verify(result.circuit, "pi/3", "1e-3")
    assert not bad.certified


@pytest.mark.asyncio
async def test_bench_rows_are_deterministic(workflow):
    eps_list = ["1e-2", "1e-3"]
    rows = await workflow.bench(eps_list, trials=2, seed=5, workers=2)
    assert [r.eps for r in rows] == ["1e-2", "1e-2", "1e-3", "1e-3"]
    assert all(r.k == choose_k(r.eps) for r in rows)
    again = await workflow.bench(eps_list, trials=2, seed=5, workers=1)
    assert [(r.k, r.total_gates, r.t_count, r.quad_trials) for r in rows] == [
        (r.k, r.total_gates, r.t_count, r.quad_trials) for r in again
    ]


def _euler_matrix_text(beta, gamma, delta, alpha="0.7"):
    """e^{iα}·Rz(β)·H·Rz(γ)·H·Rz(δ) as matrix file text."""
    ctx = working_context(256)
    beta, gamma, delta, alpha = (ctx.mpf(x) for x in (beta, gamma, delta, alpha))
    c, s = ctx.cos(gamma / 2), ctx.sin(gamma / 2)
    minus_i = ctx.mpc(0, -1)
    entries = [
        ctx.expj(alpha - (beta + delta) / 2) * c,
        minus_i * ctx.expj(alpha - (beta - delta) / 2) * s,
        minus_i * ctx.expj(alpha + (beta - delta) / 2) * s,
        ctx.expj(alpha + (beta + delta) / 2) * c,
    ]
    return "".join(f"{ctx.nstr(z.real, 60)} {ctx.nstr(z.imag, 60)}\n" for z in entries)


def _angle_gap(x, y, ctx):
    gap = ctx.fabs(x - y) % (2 * ctx.pi)
    return min(gap, 2 * ctx.pi - gap)


@pytest.mark.parametrize(
    "beta, gamma, delta",
    [("3", "1", "3"), ("0.4", "2.2", "0.9"), ("5.9", "0.3", "1.1"), ("2.5", "2.9", "4.4"), ("6", "1.7", "6")],
)
def test_euler_angles_recover_generated_matrix(beta, gamma, delta):
    ctx = working_context(128)
    angles = euler_decompose(parse_matrix(_euler_matrix_text(beta, gamma, delta), ctx), ctx)
    assert angles.residual < Fraction(1, 10**30)
    assert ctx.fabs(angles.gamma - ctx.mpf(gamma)) < ctx.mpf(10) ** -20
    assert _angle_gap(angles.beta, ctx.mpf(beta), ctx) < ctx.mpf(10) ** -20
    assert _angle_gap(angles.delta, ctx.mpf(delta), ctx) < ctx.mpf(10) ** -20


def test_euler_angles_of_random_matrices():
    rng = RandomSource(11)
    ctx = working_context(128)
    for _ in range(40):
        beta, delta = Fraction(rng.randbelow(6283), 1000), Fraction(rng.randbelow(6283), 1000)
        gamma = Fraction(1 + rng.randbelow(3100), 1000)
        text = _euler_matrix_text(*(f"{float(x):.3f}" for x in (beta, gamma, delta)))
        angles = euler_decompose(parse_matrix(text, ctx), ctx)
        assert angles.residual < Fraction(1, 10**30)


def test_synthesize_unitary_with_large_phase_sum(workflow):
    result = workflow.synthesize_unitary(_euler_matrix_text("3", "1", "3"), "1e-2", seed=1)
    assert len(result.report.blocks) == 3
    assert result.eps_certified <= Fraction(1, 100)
    assert Fraction(result.report.reconstruction_error) < Fraction(1, 10**30)
