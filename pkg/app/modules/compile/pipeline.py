"""End-to-end synthesis of the controlled phase Λ(e^{iφ}) with two ancillae."""

import logging
from fractions import Fraction
from typing import List, Optional, Union

import attrs

from app.core.config import settings
from app.core.exceptions import CertificationError, VerificationError
from app.modules.compile.catalog import Catalog
from app.modules.compile.gates import phase_power_gates
from app.modules.compile.lowering import compile_sequence, controlize
from app.modules.compile.peephole import peephole
from app.modules.numtheory import RandomSource
from app.modules.sim import ExactMatrix, block_diagonal, circuit_matrix, simulate
from app.modules.synth import StateVec, TwoLevelGate, prep_sequence
from app.modules.target import (
    AngleSpec,
    TargetApprox,
    build_target,
    choose_k,
    error_bound,
    exact_error,
    parse_eps,
    phase_error_ok,
    reduce_phase,
)
from app.schemas.common import Circuit
from app.schemas.report import SynthesisReport, VerifyFlags
from app.utils.json_utils import decimal_string

logger = logging.getLogger(__name__)


@attrs.frozen
class SynthesisResult:
    circuit: Circuit
    report: SynthesisReport
    target: Optional[TargetApprox]
    prep: List[TwoLevelGate]
    quad_trials: int
    eps_certified: Fraction


def _maybe_peephole(circuit: Circuit, enabled: Optional[bool]) -> Circuit:
    return peephole(circuit) if (settings.PEEPHOLE if enabled is None else enabled) else circuit


def _report(
    phi: AngleSpec,
    octant: int,
    eps: Fraction,
    circuit: Circuit,
    seed: int,
    flags: VerifyFlags,
    eps_certified: Fraction,
    target: Optional[TargetApprox] = None,
    two_level_count: int = 0,
) -> SynthesisReport:
    counts = circuit.gate_counts()
    return SynthesisReport(
        phi=str(phi),
        octant=octant,
        k=target.k if target else 0,
        eps_target=decimal_string(eps),
        eps_bound=decimal_string(error_bound(target.k)) if target else "0",
        eps_certified=decimal_string(eps_certified),
        M=target.m if target else 0,
        quad=list(target.quad.as_tuple()) if target else [0, 0, 0, 0],
        gate_counts=counts,
        t_count=circuit.t_count,
        total_gates=len(circuit),
        two_level_count=two_level_count,
        seed=seed,
        verify=flags,
    )


def synth_lambda(
    phi: Union[AngleSpec, str],
    eps: Union[Fraction, str],
    rng: RandomSource,
    catalog: Optional[Catalog] = None,
    use_peephole: Optional[bool] = None,
) -> SynthesisResult:
    """
    Certified 3-qubit circuit for Λ(e^{iφ}); qubit 0 is data, 1 and 2 are ancillae.

    The circuit is T^t on the data qubit followed by the controlled preparation
    of the target vector v ≈ e^{iφ'}|00⟩.

    Raises:
        AngleParseError / PrecisionError: unreadable inputs
        VerificationError: an emitted circuit is not exactly its specification
        CertificationError: the certified error exceeds eps
    """
    if isinstance(phi, str):
        phi = AngleSpec.parse(phi)
    eps = parse_eps(eps)
    reduced, octant = reduce_phase(phi)
    prefix = Circuit(n_qubits=3, gates=phase_power_gates(0, octant))

    if reduced.is_zero():
        flags = VerifyFlags(prep_exact=True, controlled_block_exact=True)
        report = _report(phi, octant, eps, prefix, rng.seed, flags, Fraction(0))
        logger.debug("phase %s is an exact multiple of pi/4", phi)
        return SynthesisResult(prefix, report, None, [], 0, Fraction(0))

    k = choose_k(eps)
    target = build_target(reduced, k, rng, octant=octant)
    prep = prep_sequence(target.v)

    c2 = _maybe_peephole(compile_sequence(prep, catalog), use_peephole)
    c3 = _maybe_peephole(controlize(prep, catalog), use_peephole)

    m2 = circuit_matrix(c2)
    flags = VerifyFlags(
        prep_exact=simulate(c2, StateVec.basis(4, 0)) == target.v,
        controlled_block_exact=circuit_matrix(c3) == block_diagonal(ExactMatrix.identity(4), m2),
    )
    if not flags.ok:
        raise VerificationError(f"synthesized circuit for {phi} failed exact verification: {flags}")

    circuit = _maybe_peephole(prefix + c3, use_peephole)
    if circuit_matrix(circuit) != circuit_matrix(c3) @ circuit_matrix(prefix):
        raise VerificationError("rewriting the assembled circuit changed its matrix")

    eps_certified = exact_error(target)
    if eps_certified > eps or not phase_error_ok(target):
        raise CertificationError(f"certified error {decimal_string(eps_certified)} exceeds {decimal_string(eps)}")

    report = _report(phi, octant, eps, circuit, rng.seed, flags, eps_certified, target, len(prep))
    logger.debug(
        "synthesized %s: k=%d M=%d quad trials=%d generators=%d gates=%d T=%d",
        phi, k, target.m, target.quad.trials, len(prep), len(circuit), circuit.t_count,
    )
    return SynthesisResult(circuit, report, target, prep, target.quad.trials, eps_certified)
