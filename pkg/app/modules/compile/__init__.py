from app.modules.compile.catalog import (
    Catalog,
    CatalogEntry,
    build_catalog,
    cch_template,
    core_gates,
    cs_template,
    default_catalog,
    toffoli_template,
)
from app.modules.compile.conjugator import permutation_conjugator
from app.modules.compile.gates import phase_power_gates
from app.modules.compile.lowering import compile_sequence, compile_two_level, controlize
from app.modules.compile.peephole import peephole
from app.modules.compile.pipeline import SynthesisResult, synth_lambda

__all__ = [
    "Catalog",
    "CatalogEntry",
    "SynthesisResult",
    "build_catalog",
    "cch_template",
    "compile_sequence",
    "compile_two_level",
    "controlize",
    "core_gates",
    "cs_template",
    "default_catalog",
    "peephole",
    "permutation_conjugator",
    "phase_power_gates",
    "synth_lambda",
    "toffoli_template",
]
