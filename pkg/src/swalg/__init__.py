"""Exact operator algebra and algebraic spectra for the isotropic oscillator
with inverse-square barriers in N dimensions.

Subpackages:

- ``opalg``: exact noncommutative differential-operator arithmetic.
- ``swsym``: the integrals of motion and symbolic verification of their
  quadratic algebra.
- ``qoscillator``: deformed-oscillator realizations, structure functions,
  and purely algebraic energy spectra.
- ``spectral``: independent numeric oracles (finite differences, explicit
  wavefunctions, degeneracy counting).
- ``cli``: the ``swalg`` command line tool.
"""

from .opalg import (
    Operator,
    OpMonomial,
    ParamPoly,
    Rational,
    act_on_monomial,
    anticommutator,
    commutator,
    parse_operator,
    ring_names,
    serialize_operator,
    substitute_params,
)

__version__ = "0.1.0"

__all__ = [
    "Operator",
    "OpMonomial",
    "ParamPoly",
    "Rational",
    "act_on_monomial",
    "anticommutator",
    "commutator",
    "parse_operator",
    "ring_names",
    "serialize_operator",
    "substitute_params",
    "build_generators",
    "verify_all",
    "__version__",
]


def __getattr__(name):
    # heavier layers load lazily so `import swalg` stays light
    if name in ("build_generators", "verify_all"):
        from . import swsym
        return getattr(swsym, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
