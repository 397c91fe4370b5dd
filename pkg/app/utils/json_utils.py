"""JSON utilities for serialization."""

import json
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from mpmath import libmp
from pydantic import BaseModel

REPORT_DIGITS = 20


def _is_mpf(value: Any) -> bool:
    # every mpmath context has its own mpf class
    return hasattr(value, "_mpf_")


def mpf_fraction(value: Any) -> Fraction:
    """
    Exact value of an mpmath real, or of a raw mpf tuple, as a Fraction.

    The mantissa may be a gmpy2 `mpz` depending on the mpmath backend, so both
    parts are converted to `int`.
    """
    raw = value._mpf_ if _is_mpf(value) else value
    numerator, denominator = libmp.to_rational(raw)
    return Fraction(int(numerator), int(denominator))


def decimal_string(value: Any, digits: int = REPORT_DIGITS) -> str:
    """
    Render a real (int, Fraction or mpmath real) as a decimal string rounded
    up to `digits` significant digits.

    Rounding toward +∞ keeps certified upper bounds valid after printing.
    """
    if _is_mpf(value):
        value = mpf_fraction(value)
    value = Fraction(value)
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_CEILING
        return str(Decimal(int(value.numerator)) / Decimal(int(value.denominator)))


class ReportEncoder(json.JSONEncoder):
    """Custom JSON encoder for exact and high-precision reals and pydantic models."""
    def default(self, obj: Any) -> Any:
        if isinstance(obj, Fraction) or _is_mpf(obj):
            return decimal_string(obj)
        if isinstance(obj, BaseModel):
            return obj.model_dump()
        return super().default(obj)


def json_dumps(obj: Any) -> str:
    """Serialize to indented JSON with a trailing newline."""
    return json.dumps(obj, cls=ReportEncoder, indent=2) + "\n"


def json_loads(s: str) -> Any:
    """Deserialize JSON string to object."""
    return json.loads(s)


def write_json(path: Union[str, Path], obj: Any) -> None:
    Path(path).write_text(json_dumps(obj), encoding="utf-8", newline="\n")
