"""Exact algebra of linear differential operators with Laurent coefficients.

Operators act on functions of coordinates x_1..x_N. Every operator is a
finite sum of normal-ordered terms

    p(a_1..a_N, s) * x^e * D^d,

where p is a polynomial with rational coefficients in the barrier strengths
a_i and the frequency symbol s (the oscillator coupling is b = s^2/2, so
anything polynomial in sqrt(2b) stays polynomial in s), e is a vector of
integer coordinate exponents (negative powers are allowed), and d is a vector
of nonnegative derivative orders.

Products are normal ordered with the identity

    D_i^m x_i^e = sum_{k=0}^{m} C(m,k) * e(e-1)...(e-k+1) * x_i^{e-k} D_i^{m-k},

which holds for negative e as well. All arithmetic is exact; nothing in this
module touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from math import comb
from typing import Iterator, Mapping, Union

Rational = Fraction

Scalar = Union[int, Fraction, "ParamPoly"]

__all__ = [
    "Rational",
    "ParamPoly",
    "OpMonomial",
    "Operator",
    "ring_names",
    "commutator",
    "anticommutator",
    "substitute_params",
    "serialize_operator",
    "parse_operator",
    "act_on_monomial",
]


def ring_names(n: int) -> tuple[str, ...]:
    """Coefficient-ring indeterminates for an n-coordinate algebra."""
    if n < 1:
        raise ValueError("need at least one coordinate")
    return tuple(f"a{i}" for i in range(1, n + 1)) + ("s",)


# ---------------------------------------------------------------------------
# coefficient polynomials
# ---------------------------------------------------------------------------

def _poly_iadd_scaled(dst: dict, src: dict, c) -> None:
    """dst += c * src, in place, dropping cancelled terms."""
    if c == 1:
        for exp, v in src.items():
            w = dst.get(exp)
            if w is None:
                dst[exp] = v
            else:
                w = w + v
                if w:
                    dst[exp] = w
                else:
                    del dst[exp]
        return
    for exp, v in src.items():
        w = dst.get(exp)
        if w is None:
            dst[exp] = v * c
        else:
            w = w + v * c
            if w:
                dst[exp] = w
            else:
                del dst[exp]


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            w = out.get(key)
            if w is None:
                out[key] = c1 * c2
            else:
                w = w + c1 * c2
                if w:
                    out[key] = w
                else:
                    del out[key]
    return out


class ParamPoly:
    """Sparse exact polynomial in the ring indeterminates.

    Term keys are exponent tuples aligned with ``names``; values are nonzero
    Fractions. Instances behave as immutable values even though the term
    dict is technically mutable; nothing in this package mutates them after
    construction.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: tuple[str, ...], terms: Mapping | None = None):
        self.names = tuple(names)
        clean: dict = {}
        if terms:
            w = len(self.names)
            for exp, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                exp = tuple(int(k) for k in exp)
                if len(exp) != w:
                    raise ValueError("exponent width does not match ring")
                clean[exp] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, names: tuple[str, ...]) -> "ParamPoly":
        return cls(names)

    @classmethod
    def constant(cls, names: tuple[str, ...], value) -> "ParamPoly":
        value = Fraction(value)
        if not value:
            return cls(names)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def variable(cls, names: tuple[str, ...], name: str, power: int = 1) -> "ParamPoly":
        idx = names.index(name)
        exp = [0] * len(names)
        exp[idx] = power
        return cls(names, {tuple(exp): Fraction(1)})

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; rejects anything else."""
        if not self.terms:
            return Fraction(0)
        ((exp, c),) = self.terms.items()
        if any(exp):
            raise ValueError("polynomial is not constant")
        return c

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def substitute(self, values: Mapping[str, Fraction]) -> Fraction:
        missing = [n for n in self.names if n not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        vals = [Fraction(values[n]) for n in self.names]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, k in zip(vals, exp):
                if k:
                    term *= v ** k
            total += term
        return total

    # -- arithmetic ---------------------------------------------------------

    def _require_same_ring(self, other: "ParamPoly") -> None:
        if self.names != other.names:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.constant(self.names, other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        self._require_same_ring(other)
        out = dict(self.terms)
        _poly_iadd_scaled(out, other.terms, 1)
        res = ParamPoly(self.names)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = ParamPoly(self.names)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other if isinstance(other, ParamPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            res = ParamPoly(self.names)
            if c:
                res.terms = {e: v * c for e, v in self.terms.items()}
            return res
        if not isinstance(other, ParamPoly):
            return NotImplemented
        self._require_same_ring(other)
        res = ParamPoly(self.names)
        res.terms = _poly_mul(self.terms, other.terms)
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomial")
        out = ParamPoly.constant(self.names, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.constant(self.names, other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"ParamPoly({poly_to_str(self)!r})"


def poly_to_str(p: ParamPoly) -> str:
    """Canonical text form: terms in graded-lex descending exponent order."""
    if not p.terms:
        return "0"
    pieces = []
    for exp in sorted(p.terms, key=lambda e: (sum(e), e), reverse=True):
        c = p.terms[exp]
        factors = []
        for name, k in zip(p.names, exp):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        pieces.append((c < 0, body))
    out = [("-" if pieces[0][0] else "") + pieces[0][1]]
    for neg, body in pieces[1:]:
        out.append((" - " if neg else " + ") + body)
    return "".join(out)


_FRACTION_RE = re.compile(r"^-?\d+(/\d+)?$")
_FACTOR_RE = re.compile(r"^([A-Za-z]\w*)(?:\^(-?\d+))?$")


def poly_from_str(text: str, names: tuple[str, ...]) -> ParamPoly:
    """Inverse of :func:`poly_to_str`."""
    text = text.strip()
    if text == "0" or not text:
        return ParamPoly.zero(names)
    terms: dict = {}
    for raw in text.replace(" - ", " + -").split(" + "):
        raw = raw.strip()
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:]
        coeff = Fraction(sign)
        exp = [0] * len(names)
        tokens = raw.split("*")
        start = 0
        if _FRACTION_RE.match(tokens[0]):
            coeff *= Fraction(tokens[0])
            start = 1
        for tok in tokens[start:]:
            m = _FACTOR_RE.match(tok)
            if not m:
                raise ValueError(f"bad factor {tok!r}")
            name, power = m.group(1), int(m.group(2) or 1)
            exp[names.index(name)] += power
        key = tuple(exp)
        coeff = terms.get(key, Fraction(0)) + coeff
        if coeff:
            terms[key] = coeff
        else:
            terms.pop(key, None)
    res = ParamPoly(names)
    res.terms = terms
    return res


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OpMonomial:
    """Normal-ordered monomial x^coord_exp D^deriv_ord."""

    coord_exp: tuple[int, ...]
    deriv_ord: tuple[int, ...]

    def __post_init__(self):
        if len(self.coord_exp) != len(self.deriv_ord):
            raise ValueError("coordinate and derivative widths differ")
        if any(d < 0 for d in self.deriv_ord):
            raise ValueError("derivative orders must be nonnegative")


@lru_cache(maxsize=None)
def _reorder_options(m: int, e: int) -> tuple[tuple[int, int], ...]:
    """(k, coefficient) pairs for pushing D^m through x^e in one coordinate.

    The coefficient is C(m,k) times the falling factorial e(e-1)...(e-k+1);
    zero contributions (which occur when 0 <= e < k) are dropped.
    """
    out = []
    for k in range(m + 1):
        ff = 1
        for j in range(k):
            ff *= e - j
        c = comb(m, k) * ff
        if c:
            out.append((k, c))
    return tuple(out)


def _op_mul_terms(aterms: dict, bterms: dict, n: int) -> dict:
    out: dict = {}
    rng = range(n)
    for (e1, d1), p1 in aterms.items():
        for (e2, d2), p2 in bterms.items():
            base = _poly_mul(p1, p2)
            if not base:
                continue
            active = [i for i in rng if d1[i] and e2[i]]
            base_e = [x + y for x, y in zip(e1, e2)]
            base_d = [x + y for x, y in zip(d1, d2)]
            if not active:
                key = (tuple(base_e), tuple(base_d))
                dst = out.get(key)
                if dst is None:
                    out[key] = dict(base)
                else:
                    _poly_iadd_scaled(dst, base, 1)
                continue
            option_lists = [_reorder_options(d1[i], e2[i]) for i in active]
            for combo in _cartesian(*option_lists):
                c = 1
                e = base_e.copy()
                d = base_d.copy()
                for pos, (k, ci) in zip(active, combo):
                    if k:
                        e[pos] -= k
                        d[pos] -= k
                    c *= ci
                key = (tuple(e), tuple(d))
                dst = out.get(key)
                if dst is None:
                    dst = out[key] = {}
                _poly_iadd_scaled(dst, base, c)
    return {k: v for k, v in out.items() if v}


class Operator:
    """Finite sum of normal-ordered terms with ParamPoly coefficients.

    Internally a dict mapping (coord_exp, deriv_ord) tuple pairs to raw
    coefficient dicts. The representation is always pruned, so two operators
    are equal exactly when their dicts are equal.
    """

    __slots__ = ("n", "names", "terms")

    def __init__(self, n: int, names: tuple[str, ...] | None = None,
                 terms: dict | None = None):
        self.n = n
        self.names = tuple(names) if names is not None else ring_names(n)
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Operator":
        return cls(n)

    @classmethod
    def identity(cls, n: int, coeff=1) -> "Operator":
        return cls.monomial(n, (0,) * n, (0,) * n, coeff)

    @classmethod
    def monomial(cls, n: int, coord_exp, deriv_ord, coeff: Scalar = 1) -> "Operator":
        names = ring_names(n)
        coord_exp = tuple(int(e) for e in coord_exp)
        deriv_ord = tuple(int(d) for d in deriv_ord)
        if len(coord_exp) != n or len(deriv_ord) != n:
            raise ValueError("exponent width does not match coordinate count")
        if any(d < 0 for d in deriv_ord):
            raise ValueError("derivative orders must be nonnegative")
        if isinstance(coeff, ParamPoly):
            poly = coeff
            if poly.names != names:
                raise ValueError("coefficient ring does not match operator ring")
        else:
            poly = ParamPoly.constant(names, coeff)
        if poly.is_zero:
            return cls(n)
        return cls(n, names, {(coord_exp, deriv_ord): dict(poly.terms)})

    @classmethod
    def coordinate(cls, n: int, i: int, power: int = 1) -> "Operator":
        """x_i^power (1-based i; power may be negative)."""
        e = [0] * n
        e[i - 1] = power
        return cls.monomial(n, e, (0,) * n)

    @classmethod
    def derivative(cls, n: int, i: int, order: int = 1) -> "Operator":
        """D_i^order (1-based i)."""
        d = [0] * n
        d[i - 1] = order
        return cls.monomial(n, (0,) * n, d)

    # -- ring helpers -------------------------------------------------------

    def param(self, name: str) -> ParamPoly:
        return ParamPoly.variable(self.names, name)

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def max_deriv_order(self) -> int:
        return max((sum(d) for _e, d in self.terms), default=0)

    def coefficient(self, coord_exp, deriv_ord) -> ParamPoly:
        raw = self.terms.get((tuple(coord_exp), tuple(deriv_ord)))
        res = ParamPoly(self.names)
        if raw:
            res.terms = dict(raw)
        return res

    def canonical_items(self) -> Iterator[tuple[OpMonomial, ParamPoly]]:
        """Terms in the canonical order used by serialization.

        Descending on (total derivative order, derivative tuple,
        total coordinate degree, coordinate tuple).
        """
        def key(item):
            e, d = item
            return (sum(d), d, sum(e), e)

        for e, d in sorted(self.terms, key=key, reverse=True):
            poly = ParamPoly(self.names)
            poly.terms = dict(self.terms[(e, d)])
            yield OpMonomial(e, d), poly

    # -- arithmetic ---------------------------------------------------------

    def _require_compatible(self, other: "Operator") -> None:
        if self.n != other.n or self.names != other.names:
            raise ValueError("operators live over different coordinate algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = Operator.identity(self.n, other)
        if not isinstance(other, Operator):
            return NotImplemented
        self._require_compatible(other)
        out = {k: dict(v) for k, v in self.terms.items()}
        for k, v in other.terms.items():
            dst = out.get(k)
            if dst is None:
                out[k] = dict(v)
            else:
                _poly_iadd_scaled(dst, v, 1)
                if not dst:
                    del out[k]
        return Operator(self.n, self.names, out)

    __radd__ = __add__

    def __neg__(self):
        out = {k: {e: -c for e, c in v.items()} for k, v in self.terms.items()}
        return Operator(self.n, self.names, out)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = Operator.identity(self.n, other)
        if not isinstance(other, Operator):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, c: Scalar) -> "Operator":
        if isinstance(c, ParamPoly):
            if c.names != self.names:
                raise ValueError("scalar ring does not match operator ring")
            if c.is_zero:
                return Operator(self.n)
            out = {}
            for k, v in self.terms.items():
                w = _poly_mul(v, c.terms)
                if w:
                    out[k] = w
            return Operator(self.n, self.names, out)
        c = Fraction(c)
        if not c:
            return Operator(self.n)
        out = {k: {e: cv * c for e, cv in v.items()} for k, v in self.terms.items()}
        return Operator(self.n, self.names, out)

    def __mul__(self, other):
        if isinstance(other, Operator):
            self._require_compatible(other)
            return Operator(self.n, self.names,
                            _op_mul_terms(self.terms, other.terms, self.n))
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("operators have no inverses here")
        out = Operator.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return (self.n == other.n and self.names == other.names
                and self.terms == other.terms)

    def __repr__(self):
        if self.is_zero:
            return "Operator(0)"
        return f"Operator({self.term_count} terms, n={self.n})"


def commutator(a: Operator, b: Operator) -> Operator:
    return a * b - b * a


def anticommutator(a: Operator, b: Operator) -> Operator:
    return a * b + b * a


def substitute_params(op: Operator, values: Mapping[str, Fraction]) -> Operator:
    """Evaluate every coefficient polynomial at the given parameter point.

    ``values`` must assign a Fraction-convertible value to every ring
    indeterminate; partial or superfluous assignments are rejected.
    """
    extra = set(values) - set(op.names)
    if extra:
        raise ValueError(f"unknown parameters {sorted(extra)}")
    missing = [n for n in op.names if n not in values]
    if missing:
        raise ValueError(f"missing values for {missing}")
    vals = {n: Fraction(values[n]) for n in op.names}
    zero_exp = (0,) * len(op.names)
    out: dict = {}
    for key, raw in op.terms.items():
        poly = ParamPoly(op.names)
        poly.terms = dict(raw)
        c = poly.substitute(vals)
        if c:
            out[key] = {zero_exp: c}
    return Operator(op.n, op.names, out)


def act_on_monomial(op: Operator, alpha) -> dict:
    """Apply the operator to the Laurent monomial x^alpha.

    Returns a dict mapping result exponent tuples to ParamPoly coefficients.
    This is direct calculus (falling factorials from repeated
    differentiation), independent of the normal-ordering product, which makes
    it a useful cross-check oracle for op_mul.
    """
    alpha = tuple(int(v) for v in alpha)
    if len(alpha) != op.n:
        raise ValueError("monomial width does not match coordinate count")
    out: dict = {}
    for (e, d), raw in op.terms.items():
        c = 1
        for ai, di in zip(alpha, d):
            for j in range(di):
                c *= ai - j
        if not c:
            continue
        key = tuple(ai + ei - di for ai, ei, di in zip(alpha, e, d))
        dst = out.get(key)
        if dst is None:
            dst = out[key] = {}
        _poly_iadd_scaled(dst, raw, c)
    result = {}
    for key, raw in out.items():
        if raw:
            poly = ParamPoly(op.names)
            poly.terms = raw
            result[key] = poly
    return result


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def serialize_operator(op: Operator) -> str:
    """Canonical text form, one term per line: ``poly | exponents | orders``.

    The zero operator serializes to an empty string. The term order is the
    one produced by :meth:`Operator.canonical_items`, so equal operators
    always serialize to identical bytes.
    """
    lines = []
    for mono, poly in op.canonical_items():
        e = " ".join(str(v) for v in mono.coord_exp)
        d = " ".join(str(v) for v in mono.deriv_ord)
        lines.append(f"{poly_to_str(poly)} | {e} | {d}")
    return "\n".join(lines)


def parse_operator(text: str, n: int) -> Operator:
    """Inverse of :func:`serialize_operator`."""
    names = ring_names(n)
    op = Operator.zero(n)
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split("|")
        if len(parts) != 3:
            raise ValueError(f"malformed operator line {line!r}")
        poly = poly_from_str(parts[0].strip(), names)
        e = tuple(int(v) for v in parts[1].split())
        d = tuple(int(v) for v in parts[2].split())
        op = op + Operator.monomial(n, e, d, poly)
    return op
