"""Tests for the circuit text format and JSON helpers."""

from fractions import Fraction

import pytest
from mpmath import libmp, mp

from app.core.exceptions import CircuitFormatError
from app.modules.compile import synth_lambda
from app.modules.numtheory import RandomSource
from app.modules.target import AngleSpec, pi_bounds
from app.schemas.common import Circuit, PrimGate
from app.schemas.report import VerifyFlags
from app.utils.circuit_io import emit_circuit, parse_circuit, read_circuit, write_circuit
from app.utils.json_utils import decimal_string, json_dumps, json_loads, mpf_fraction

HEADER = "# sqct v1\n# qubits 3\n# ancillae 1 2\n"


def test_emit_circuit():
    c = Circuit(n_qubits=3, gates=[PrimGate(kind="T", qubits=(0,)), PrimGate(kind="CNOT", qubits=(1, 2))])
    assert emit_circuit(c) == HEADER + "T 0\nCNOT 1 2\n"
    assert emit_circuit(Circuit(n_qubits=3)) == HEADER


def test_parse_is_inverse_of_emit(workdir):
    text = HEADER + "H 2\nSDG 1\nCNOT 2 0\nX 0\nZ 1\nTDG 2\nS 0\n"
    c = parse_circuit(text)
    assert len(c) == 7 and c.n_qubits == 3
    assert emit_circuit(c) == text
    path = workdir / "c.qc"
    write_circuit(path, c)
    assert path.read_bytes() == text.encode()
    assert read_circuit(path) == c


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# sqct v2\n# qubits 3\n# ancillae 1 2\n",
        "# qubits 3\n# sqct v1\n# ancillae 1 2\n",
        HEADER + "FOO 0\n",
        HEADER + "T 0 \n",
        HEADER + "T 3\n",
        HEADER + "CNOT 1 1\n",
        HEADER + "CNOT 1\n",
        HEADER + "T -1\n",
        "# sqct v1\n# qubits 3\n# ancillae 7\n",
        "# sqct v1\n# qubits 3\n# ancillae 1 1\n",
        "# sqct v1\n# qubits 3\n# ancillae 1 x\n",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(CircuitFormatError):
        parse_circuit(text)


def test_read_missing_file(workdir):
    with pytest.raises(CircuitFormatError):
        read_circuit(workdir / "missing.qc")


def test_decimal_string_rounds_up():
    assert decimal_string(Fraction(0)) == "0"
    assert decimal_string(Fraction(1, 3)) == "0.33333333333333333334"
    assert decimal_string(Fraction(-1, 3)) == "-0.33333333333333333333"
    assert decimal_string(Fraction(1, 8)) == "0.125"
    assert Fraction(decimal_string(mp.mpf(2) ** -70)) >= Fraction(1, 2**70)


def test_json_dumps_reals_as_strings():
    text = json_dumps({"bound": Fraction(1, 4), "flags": VerifyFlags(prep_exact=True, controlled_block_exact=True)})
    assert text.endswith("}\n")
    assert json_loads(text) == {"bound": "0.25", "flags": {"prep_exact": True, "controlled_block_exact": True}}


def test_emit_lists_only_existing_ancillae():
    c = Circuit(n_qubits=2, gates=[PrimGate(kind="H", qubits=(1,))])
    text = emit_circuit(c)
    assert text.splitlines()[2] == "# ancillae 1"
    assert parse_circuit(text) == c


def test_mpf_fraction_has_int_parts():
    for value in (mp.mpf(3) / 7, mp.pi, mp.mpf(-2) ** -90, mp.mpf(0)):
        result = mpf_fraction(value)
        assert type(result.numerator) is int and type(result.denominator) is int
    assert mpf_fraction(mp.mpf("0.375")) == Fraction(3, 8)
    raw = libmp.mpf_pi(64, libmp.round_floor)
    assert type(mpf_fraction(raw).numerator) is int


@pytest.mark.skipif(libmp.BACKEND != "gmpy", reason="needs the gmpy2 backend of mpmath")
def test_exact_conversions_under_gmpy_backend():
    lo, hi = pi_bounds(80)
    assert type(lo.numerator) is int and lo < hi
    (c_lo, _), _ = AngleSpec.parse("pi/8").cos_sin(96)
    assert type(c_lo.numerator) is int
    assert decimal_string(mp.mpf(1) / 3).startswith("0.3333")
    result = synth_lambda("pi/8", "0.1", RandomSource(7))
    assert result.report.k == 9 and result.report.verify.ok
