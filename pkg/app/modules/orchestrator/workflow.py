import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import attrs

from app.core.config import settings
from app.core.exceptions import CertificationError
from app.modules.compile import Catalog, SynthesisResult, default_catalog, peephole, synth_lambda
from app.modules.numtheory import RandomSource
from app.modules.orchestrator.euler import (
    check_unitary,
    euler_decompose,
    parse_matrix,
    snap_angle,
    working_context,
)
from app.modules.sim import circuit_matrix, controlled_phase_bound
from app.modules.target import AngleSpec, parse_eps
from app.schemas.common import Circuit, PrimGate
from app.schemas.report import BenchRow, SynthesisReport, UnitarySynthesisReport, VerificationReport
from app.utils.json_utils import decimal_string

logger = logging.getLogger(__name__)

# Euler block budgets leave this fraction of ε for angle snapping and rendering
SNAP_SHARE = Fraction(1, 1000)


@attrs.frozen
class UnitarySynthesisResult:
    circuit: Circuit
    report: UnitarySynthesisReport
    eps_certified: Fraction


def _data_gate(kind: str) -> Circuit:
    return Circuit(n_qubits=3, gates=[PrimGate(kind=kind, qubits=(0,))])


class SynthesisWorkflow:
    """
    Runs whole synthesis jobs: Λ(e^{iφ}) circuits, verification of circuit
    files, arbitrary single-qubit unitaries and benchmarks.
    """

    def __init__(self, catalog: Optional[Catalog] = None, precision_bits: Optional[int] = None):
        self.catalog = catalog or default_catalog()
        self.precision_bits = precision_bits or settings.PRECISION_BITS

    def synthesize(self, phase: Union[str, AngleSpec], eps: Union[str, Fraction], seed: int) -> SynthesisResult:
        return synth_lambda(phase, eps, RandomSource(seed), self.catalog)

    def verify(self, circuit: Circuit, phase: Union[str, AngleSpec], eps: Union[str, Fraction]) -> VerificationReport:
        """
        Certify a circuit against Λ(e^{iφ}) with every wire but qubit 0 starting in |0⟩.

        The bound is the root of the summed squared errors on inputs |0⟩|0..0⟩
        and |1⟩|0..0⟩, which dominates the distance on every data state.
        """
        angle = AngleSpec.parse(phase) if isinstance(phase, str) else phase
        eps_value = parse_eps(eps)
        bits = self.precision_bits
        bound = controlled_phase_bound(circuit_matrix(circuit), angle.phase(bits), bits)
        logger.debug("verified %d gates against %s: bound %s", len(circuit), angle, decimal_string(bound))
        return VerificationReport(
            phi=str(angle),
            eps_target=decimal_string(eps_value),
            eps_certified=decimal_string(bound),
            n_qubits=circuit.n_qubits,
            total_gates=len(circuit),
            t_count=circuit.t_count,
            certified=bound <= eps_value,
        )

    def _lambda_block(
        self, theta, budget: Fraction, rng: RandomSource, ctx
    ) -> Tuple[Circuit, Optional[SynthesisReport], Fraction]:
        spec, snap_err = snap_angle(theta, budget * SNAP_SHARE, ctx)
        result = synth_lambda(spec, budget * (1 - 2 * SNAP_SHARE), rng, self.catalog)
        return result.circuit, result.report, snap_err

    def synthesize_unitary(
        self, matrix_text: str, eps: Union[str, Fraction], seed: int, exact_phase: bool = False
    ) -> UnitarySynthesisResult:
        """
        Circuit for a 2x2 unitary given as text, up to global phase unless
        `exact_phase` is set.

        Raises:
            MatrixFormatError: unreadable matrix
            NonUnitaryError: U†U differs from I by more than 10^-3·ε
            CertificationError: the summed certificates exceed ε
        """
        eps_value = parse_eps(eps)
        ctx = working_context(self.precision_bits)
        u = parse_matrix(matrix_text, ctx)
        check_unitary(u, eps_value / 1000, ctx)
        angles = euler_decompose(u, ctx)

        n_blocks = 5 if exact_phase else 3
        budget = eps_value / n_blocks
        rng = RandomSource(seed)

        if angles.diagonal:
            plan = [angles.beta]
        else:
            plan = [angles.delta, "H", angles.gamma, "H", angles.beta]
        if exact_phase:
            offset = angles.phase_offset(ctx)
            plan += [offset, "X", offset, "X"]

        circuit = Circuit(n_qubits=3)
        blocks: List[SynthesisReport] = []
        block_total = Fraction(0)
        snap_total = Fraction(0)
        for step in plan:
            if isinstance(step, str):
                circuit = circuit + _data_gate(step)
                continue
            part, report, snap_err = self._lambda_block(step, budget, rng.spawn(len(blocks)), ctx)
            circuit = circuit + part
            blocks.append(report)
            block_total += Fraction(report.eps_certified)
            snap_total += snap_err
        if settings.PEEPHOLE:
            circuit = peephole(circuit)

        eps_certified = block_total + snap_total + angles.residual
        if eps_certified > eps_value:
            raise CertificationError(
                f"unitary certificate {decimal_string(eps_certified)} exceeds {decimal_string(eps_value)}"
            )
        report = UnitarySynthesisReport(
            eps_target=decimal_string(eps_value),
            exact_phase=exact_phase,
            decomposition=angles.as_report(),
            blocks=blocks,
            snap_error=decimal_string(snap_total),
            reconstruction_error=decimal_string(angles.residual),
            eps_certified=decimal_string(eps_certified),
            gate_counts=circuit.gate_counts(),
            t_count=circuit.t_count,
            total_gates=len(circuit),
        )
        logger.debug("unitary synthesized with %d blocks and %d gates", len(blocks), len(circuit))
        return UnitarySynthesisResult(circuit, report, eps_certified)

    def bench_one(self, eps: str, phase: AngleSpec, rng: RandomSource) -> BenchRow:
        start = time.perf_counter()
        result = synth_lambda(phase, eps, rng, self.catalog)
        elapsed = time.perf_counter() - start
        return BenchRow(
            eps=eps,
            k=result.report.k,
            total_gates=result.report.total_gates,
            t_count=result.report.t_count,
            wall_time=elapsed,
            quad_trials=result.quad_trials,
        )

    async def bench(
        self, eps_list: Sequence[str], trials: int, seed: int, workers: Optional[int] = None
    ) -> List[BenchRow]:
        """
        Synthesize `trials` random phases for every ε, concurrently.

        Trial n of ε number e draws its phase and its solver randomness from
        the bench seed spawned at index e·trials + n, so rows do not depend on
        scheduling.
        """
        root = RandomSource(seed)
        jobs = []
        for e, eps in enumerate(eps_list):
            parse_eps(eps)
            for n in range(trials):
                rng = root.spawn(e * trials + n)
                # odd multiples of π/2^19 in [0, 2π), never a multiple of π/4
                phase = AngleSpec.pi_fraction(Fraction(2 * rng.randbelow(1 << 19) + 1, 1 << 19))
                jobs.append((eps, phase, rng))

        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=workers or settings.BENCH_WORKERS) as pool:
            rows = await asyncio.gather(
                *(loop.run_in_executor(pool, self.bench_one, eps, phase, rng) for eps, phase, rng in jobs)
            )
        logger.info("bench finished: %d rows", len(rows))
        return list(rows)
