"""Essential dimension of reduced split semisimple groups over exact arithmetic.

Supported families: products of Spin(n) (types B/D), Sp(2n) (type C),
SL(p^k) (type A), and E6, modulo a central subgroup, together with their
strict reductive envelopes.
"""

from .abelian import CyclicDecomposition, GroupElement, smith_normal_form
from .catalog import GroupSpec, SemisimpleGroup, SimpleFactor, build
from .engine import EdReport, certify_exact, compute_ed, extend_ed
from .errors import EdcalcError
from .spec_io import emit, parse, render, report_from_json

__all__ = [
    "CyclicDecomposition", "GroupElement", "smith_normal_form",
    "GroupSpec", "SemisimpleGroup", "SimpleFactor", "build",
    "EdReport", "certify_exact", "compute_ed", "extend_ed",
    "EdcalcError", "emit", "parse", "render", "report_from_json",
]

__version__ = "1.0.0"
