"""Deformed-oscillator realizations of three-generator quadratic algebras.

A substructure (E, F, G) with G = [E, F] and quadratic closure

    [E, G] = alpha E^2 + gamma {E, F} + delta E + epsilon F + zeta,
    [F, G] = a E^2 - gamma F^2 - alpha {E, F} + d E - delta F + z,

admits a cubic Casimir and a realization through a deformed oscillator
(number operator with a structure function Phi). Finite-dimensional
representations require Phi(0) = 0 = Phi(p+1) with Phi > 0 in between, which
pins the free constants and yields the spectrum purely algebraically.

This module is deliberately generic: the same formulas accept exact
Operators (for symbolic verification), Fractions (for exact numerics) or
floats. The concrete families for the oscillator with inverse-square
barriers (one per choice of generator pair) get their structure constants,
Casimir values, constraint solutions and spectra here.

Energies are usually handled in reduced form, meaning divided by sqrt(2b);
the frequency never enters anywhere else once reduced.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _cartesian
from math import comb
from typing import Any, Iterable, Sequence

__all__ = [
    "QuadAlgConstants",
    "StructureFunction",
    "NumberOperatorLaw",
    "CrossCheck",
    "casimir_cubic",
    "qa_eg_rhs",
    "qa_fg_rhs",
    "structure_function_quartic",
    "structure_function_octic",
    "structure_function_from_roots",
    "sqrt_value",
    "nu_values",
    "nested_sum_value",
    "pair_constants",
    "top_constants_numeric",
    "chain_constants_numeric",
    "pair_solutions",
    "top_solutions",
    "chain_z_values",
    "spectrum_cartesian",
    "spectrum_pairwise",
    "spectrum_hyperspherical",
    "spectrum_chain",
    "spectra_agree",
    "group_levels",
    "crosscheck_pair",
    "crosscheck_top",
    "crosscheck_chain",
]


# ---------------------------------------------------------------------------
# generic quadratic algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadAlgConstants:
    """Structure constants of one three-generator substructure.

    Values may be numbers (exact or floating) or central Operators; every
    formula below only combines them with +, * and rational scalars.
    """

    alpha: Any
    gamma: Any
    delta: Any
    epsilon: Any
    zeta: Any
    a: Any
    d: Any
    z: Any


def _acomm(x, y):
    return x * y + y * x


def qa_eg_rhs(c: QuadAlgConstants, e, f):
    """Right side of [E, G] in the defining relations."""
    return (c.alpha * (e * e) + c.gamma * _acomm(e, f)
            + c.delta * e + c.epsilon * f + c.zeta)


def qa_fg_rhs(c: QuadAlgConstants, e, f):
    """Right side of [F, G] in the defining relations."""
    return (c.a * (e * e) - c.gamma * (f * f) - c.alpha * _acomm(e, f)
            + c.d * e - c.delta * f + c.z)


def casimir_cubic(c: QuadAlgConstants, e, f, g):
    """The cubic Casimir of the quadratic algebra.

    For Operator arguments this is an exact operator; the verification suite
    checks that it commutes with all three generators and collapses to a
    polynomial in central elements.
    """
    third = Fraction(1, 3)
    return (g * g
            - c.alpha * _acomm(e * e, f)
            - c.gamma * _acomm(e, f * f)
            + (c.alpha * c.gamma - c.delta) * _acomm(e, f)
            + (c.gamma * c.gamma - c.epsilon) * (f * f)
            + (c.gamma * c.delta - 2 * c.zeta) * f
            + (2 * third) * c.a * (e * e * e)
            + (c.d + third * (c.a * c.gamma) + c.alpha * c.alpha) * (e * e)
            + (third * (c.a * c.epsilon) + c.alpha * c.delta + 2 * c.z) * e)


# ---------------------------------------------------------------------------
# structure functions
# ---------------------------------------------------------------------------

def _sqrt_exact(v: Fraction):
    if v < 0:
        return None
    num = math.isqrt(v.numerator)
    den = math.isqrt(v.denominator)
    if num * num == v.numerator and den * den == v.denominator:
        return Fraction(num, den)
    return None


def sqrt_value(v):
    """Square root that stays exact on perfect rational squares."""
    if isinstance(v, (int, Fraction)):
        r = _sqrt_exact(Fraction(v))
        if r is not None:
            return r
    return math.sqrt(float(v))


@dataclass(frozen=True)
class StructureFunction:
    """Polynomial structure function Phi evaluated at xi = n + shift.

    ``coeffs`` are ascending powers of xi. ``shift`` is the representation
    offset u, so eval_n(0) and eval_n(p + 1) are the endpoints that must
    vanish for a (p+1)-dimensional representation.
    """

    coeffs: tuple
    shift: Any

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval_xi(self, xi):
        total = 0
        for c in reversed(self.coeffs):
            total = total * xi + c
        return total

    def eval_n(self, n):
        return self.eval_xi(n + self.shift)


def _poly_mul_lists(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _poly_add_lists(p: Sequence, q: Sequence) -> list:
    out = list(p) if len(p) >= len(q) else list(q)
    small = q if len(p) >= len(q) else p
    for i, v in enumerate(small):
        out[i] = out[i] + v
    return out


def _poly_scale(p: Sequence, c) -> list:
    return [c * v for v in p]


def _poly_pow(p: Sequence, k: int) -> list:
    out = [1]
    for _ in range(k):
        out = _poly_mul_lists(out, p)
    return out


def structure_function_quartic(c: QuadAlgConstants, kprime, u) -> StructureFunction:
    """Structure function for gamma = 0, epsilon != 0 (quartic in xi)."""
    if c.gamma != 0:
        raise ValueError("this form requires gamma = 0")
    if c.epsilon == 0:
        raise ValueError("this form requires epsilon != 0")
    se = sqrt_value(c.epsilon)
    quarter = Fraction(1, 4)
    twelfth = Fraction(1, 12)
    sixth = Fraction(1, 6)
    dse = c.delta / se
    zse = c.zeta / c.epsilon
    t0 = quarter * (-kprime / c.epsilon - c.z / se - dse * zse + zse * zse)
    t1 = -twelfth * (3 * c.d - c.a * se - 3 * c.alpha * dse
                     + 3 * (c.delta * c.delta) / c.epsilon
                     - 6 * c.z / se + 6 * c.alpha * zse - 6 * dse * zse)
    t2 = quarter * (c.alpha * c.alpha + c.d - c.a * se - 3 * c.alpha * dse
                    + (c.delta * c.delta) / c.epsilon + 2 * c.alpha * zse)
    t3 = -sixth * (3 * c.alpha * c.alpha - c.a * se - 3 * c.alpha * dse)
    t4 = quarter * (c.alpha * c.alpha)
    return StructureFunction((t0, t1, t2, t3, t4), u)


def structure_function_octic(c: QuadAlgConstants, k, u) -> StructureFunction:
    """Structure function for gamma != 0, transcribed term for term.

    The bracket [2 xi - 1] and friends are expanded exactly; no
    simplification or correction is applied, so whatever the source display
    implies, including its degree, is preserved for honest cross-checking.
    """
    if c.gamma == 0:
        raise ValueError("this form requires gamma != 0")
    al, ga, de, ep, ze, aa, dd, zz = (c.alpha, c.gamma, c.delta, c.epsilon,
                                      c.zeta, c.a, c.d, c.z)
    b_m3 = (-3, 2)   # 2 xi - 3
    b_m1 = (-1, 2)   # 2 xi - 1
    b_p1 = (1, 2)    # 2 xi + 1
    b_q = (-1, -12, 12)  # 12 xi^2 - 12 xi - 1
    g2 = ga * ga
    g3 = g2 * ga
    g4 = g2 * g2
    g5 = g4 * ga
    g6 = g4 * g2
    g8 = g4 * g4

    total = [0]
    term = _poly_scale(
        _poly_mul_lists(_poly_pow(b_m3, 2),
                        _poly_mul_lists(_poly_pow(b_m1, 4), _poly_pow(b_p1, 2))),
        g8 * (3 * al * al + 4 * aa * ga))
    total = _poly_add_lists(total, term)

    term = _poly_scale(_poly_pow(b_m1, 2), -3072 * g6 * k)
    total = _poly_add_lists(total, term)

    term = _poly_scale(
        _poly_mul_lists(_poly_pow(b_m1, 4),
                        _poly_mul_lists(_poly_pow(b_p1, 2), list(b_m3))),
        -48 * g6 * (al * al * ep - al * ga * de + aa * ga * ep - g2 * dd))
    total = _poly_add_lists(total, term)

    term = _poly_scale(
        _poly_mul_lists(_poly_pow(b_m1, 2), list(b_q)),
        32 * g4 * (3 * al * al * ep * ep + 4 * al * g2 * ze
                   - 6 * al * ga * de * ep + 2 * aa * ga * ep * ep
                   + 2 * g2 * de * de - 4 * g2 * dd * ep + 8 * g3 * zz))
    total = _poly_add_lists(total, term)

    flat = al * ep * ep + 4 * g2 * ze - 2 * ga * de * ep
    total = _poly_add_lists(total, [768 * flat * flat])

    term = _poly_scale(
        _poly_pow(b_m1, 2),
        -256 * g2 * (3 * al * al * ep * ep * ep + 4 * al * g4 * ze
                     + 12 * al * g2 * ze * ep - 9 * al * ga * de * ep * ep
                     + aa * ga * ep * ep * ep + 2 * g4 * de * de
                     - 12 * g3 * de * ze + 6 * g2 * de * de * ep
                     + 2 * g4 * dd * ep - 3 * g2 * dd * ep * ep
                     - 4 * g5 * zz + 12 * g3 * zz * ep))
    total = _poly_add_lists(total, term)

    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return StructureFunction(tuple(total), u)


def structure_function_from_roots(roots: Sequence, shift,
                                  leading=1) -> StructureFunction:
    """Monic-times-leading product of (xi - root) factors."""
    poly = [leading]
    for r in roots:
        poly = _poly_mul_lists(poly, [-r, 1])
    return StructureFunction(tuple(poly), shift)


@dataclass(frozen=True)
class NumberOperatorLaw:
    """Eigenvalue of the diagonal generator E in the oscillator realization.

    For gamma = 0 the law is linear in the number-operator eigenvalue q;
    otherwise it is quadratic.
    """

    gamma: Any
    epsilon: Any
    shift: Any

    def eigenvalue(self, q):
        if self.gamma == 0:
            return sqrt_value(self.epsilon) * (q + self.shift)
        w = q + self.shift
        return (self.gamma / 2) * (w * w
                                   - self.epsilon / (self.gamma * self.gamma)
                                   - Fraction(1, 4))


# ---------------------------------------------------------------------------
# oscillator-with-barriers parameters
# ---------------------------------------------------------------------------

def nu_values(a_values: Sequence) -> list:
    """Barrier indices nu_i = sqrt(1 + 8 a_i) / 2, exact when possible."""
    out = []
    for a in a_values:
        if isinstance(a, (int, Fraction)):
            v = sqrt_value(Fraction(1) + 8 * Fraction(a))
            out.append(v / 2 if isinstance(v, Fraction) else v / 2.0)
        else:
            out.append(math.sqrt(1.0 + 8.0 * a) / 2.0)
    return out


def nested_sum_value(ncoords: int, a_total, param):
    """Eigenvalue of a nested sum over ``ncoords`` coordinates.

    The value is (3*ncoords - 4 - 8*sum(a) + param^2) / 4, where ``param``
    is the chain label whose square carries the quantum numbers. ncoords = 1
    gives the empty sum, fixing the base label to 2*nu of that coordinate.
    """
    return Fraction(1, 4) * (3 * ncoords - 4 - 8 * a_total + param * param)


# ---------------------------------------------------------------------------
# numeric structure constants per family
# ---------------------------------------------------------------------------

def pair_constants(a_i, a_j, b, m) -> tuple[QuadAlgConstants, Any]:
    """Constants and central Casimir value for the pair family.

    ``m`` is the eigenvalue of the central combination 2H minus the sum of
    all B_k outside the pair. Returns (constants, K')."""
    p8i = 8 * a_i - 3
    p8j = 8 * a_j - 3
    c = QuadAlgConstants(
        alpha=8, gamma=0, delta=-8 * m, epsilon=32 * b, zeta=0,
        a=0, d=-8 * (4 * a_i + 4 * a_j - 3), z=4 * p8i * m)
    kprime = 4 * p8i * m * m - 8 * b * p8i * p8j
    return c, kprime


def top_constants_numeric(n: int, a_values: Sequence, b, h,
                          z_param) -> tuple[QuadAlgConstants, Any, Any]:
    """Constants, K' and the central value for the (Y_1, B_N) family.

    ``z_param`` is the chain label of the next-to-top nested sum (its
    eigenvalue follows from nested_sum_value). Returns (constants, K',
    central value)."""
    a_total = sum(a_values)
    a_head = sum(a_values[:-1])
    p8n = 8 * a_values[-1] - 3
    zval = nested_sum_value(n - 1, a_head, z_param)
    c = QuadAlgConstants(
        alpha=0, gamma=8, delta=-16 * h,
        epsilon=4 * (8 * a_total - 3 * n),
        zeta=16 * h * zval - 8 * p8n * h,
        a=0, d=-32 * b, z=32 * b * zval)
    kprime = (32 * b * zval * zval + 16 * p8n * h * h
              - 32 * b * p8n * zval
              - 8 * b * p8n * (8 * a_head - 3 * (n - 1)))
    return c, kprime, zval


def chain_constants_numeric(n: int, i: int, a_values: Sequence, y1_param,
                            yp_param, zm_param) -> tuple[QuadAlgConstants, Any, dict]:
    """Constants, advertised K' and central values for the chain family.

    The three central labels are the full-sum parameter y1, the tail
    parameter y_{i+1} and the head parameter z_{i-2}; eigenvalues follow the
    nested-sum rule. Returns (constants, advertised K', centrals dict)."""
    if not (2 <= i <= n - 1):
        raise ValueError(f"pivot {i} not admissible for n={n}")
    a_total = sum(a_values)
    y1val = nested_sum_value(n, a_total, y1_param)
    ypval = nested_sum_value(n - i, sum(a_values[i:]), yp_param)
    zmval = nested_sum_value(i - 1, sum(a_values[:i - 1]), zm_param)
    p8i = 8 * a_values[i - 1] - 3
    left = 8 * sum(a_values[:i - 1]) - 3 * (i - 1)
    right = 8 * sum(a_values[i:]) - 3 * (n - i)
    head = 8 * sum(a_values[:i]) - 3 * i
    tail = 8 * sum(a_values[i - 1:]) - 3 * (n - i + 1)
    c = QuadAlgConstants(
        alpha=8, gamma=8,
        delta=-8 * (y1val + ypval + zmval - 4 * a_values[i - 1] + Fraction(3, 2)),
        epsilon=4 * head,
        zeta=(-4 * p8i * y1val - 4 * left * ypval
              + 8 * y1val * zmval - 8 * ypval * zmval),
        a=0, d=-4 * tail,
        z=(4 * p8i * y1val + 4 * right * zmval
           - 8 * y1val * ypval + 8 * ypval * zmval))
    kprime = (4 * p8i * y1val * y1val - 64 * y1val * ypval
              + 4 * left * ypval * ypval + 32 * p8i * y1val
              - 4 * p8i * left * ypval + 16 * zmval * zmval * ypval
              - 64 * zmval * y1val - 16 * p8i * zmval * ypval
              - 4 * p8i * right * zmval + 4 * right * zmval * zmval
              - 16 * zmval * y1val * ypval + 16 * zmval * ypval * ypval
              - p8i * left * right)
    centrals = {"y1": y1val, "yp": ypval, "zm": zmval}
    return c, kprime, centrals


# ---------------------------------------------------------------------------
# constraint solutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RepresentationSolution:
    """One solved finite-dimensional realization.

    ``shift`` is u; ``roots_n`` are the zeros of the factorized structure
    function in the n variable; ``extras`` carries family-specific values
    (central eigenvalues, reduced energies)."""

    family: str
    signs: tuple[int, ...]
    p: int
    shift: Any
    roots_n: tuple
    positive: bool
    extras: dict = field(default_factory=dict)

    def factorized(self, leading=1) -> StructureFunction:
        """Structure function in n with the solved roots."""
        return structure_function_from_roots(self.roots_n, 0, leading)


def _phi_positive_on_window(roots, p: int) -> bool:
    for n in range(1, p + 1):
        val = 1.0
        for r in roots:
            val *= float(n) - float(r)
        if not val > 0:
            return False
    return True


def pair_solutions(nu_i, nu_j, p: int) -> list[RepresentationSolution]:
    """All sign branches of the pair-family constraints for given cutoff p.

    Both constraint equations are solved exactly: the shift comes from the
    one-coordinate bracket pair and the central combination from demanding a
    zero at n = p + 1. The reduced central value m / sqrt(2b) is stored in
    extras; physically it equals the sum of the two pair energies.
    """
    out = []
    for eps_i, eps_j in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        u = Fraction(1, 2) + eps_i * nu_i / 2
        roots = (0, -eps_i * nu_i, p + 1, p + 1 - eps_j * nu_j)
        m_red = 2 * (2 * (p + 1) + eps_i * nu_i - eps_j * nu_j)
        out.append(RepresentationSolution(
            family="pair", signs=(eps_i, eps_j), p=p, shift=u,
            roots_n=roots, positive=_phi_positive_on_window(roots, p),
            extras={"m_red": m_red}))
    return out


def top_solutions(n: int, nu_n, z_param, p: int) -> list[RepresentationSolution]:
    """Sign branches of the top-family constraints for given cutoff p.

    ``z_param`` is the chain label of the next-to-top nested sum. The shift
    uses the barrier-side root pair and the energy follows from the zero at
    n = p + 1. Reduced energies h / sqrt(2b) land in extras.
    """
    out = []
    for eps1, eps2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        u = Fraction(1, 4) * (2 + eps1 * z_param + 2 * eps2 * nu_n)
        h_red = Fraction(1, 2) * (4 * (p + 1) + eps1 * z_param + 2 * eps2 * nu_n)
        w = 2 * h_red
        roots_xi = ((2 - w) / 4, (2 + w) / 4,
                    (2 + z_param + 2 * nu_n) / 4, (2 + z_param - 2 * nu_n) / 4,
                    (2 - z_param - 2 * nu_n) / 4, (2 - z_param + 2 * nu_n) / 4)
        roots_n = tuple(r - u for r in roots_xi)
        out.append(RepresentationSolution(
            family="top", signs=(eps1, eps2), p=p, shift=u,
            roots_n=roots_n, positive=_phi_positive_on_window(roots_n, p),
            extras={"h_red": h_red}))
    return out


def chain_z_values(nus: Sequence, qs: Sequence[int]) -> list:
    """Chain labels z_0 .. z_{len(qs)} from the linking recurrence.

    z_0 = 2 nu_1 (the empty head sum has a fixed label) and each link adds
    z_{i-1} = 4 q_i + z_{i-2} + 2 nu_i + 2. ``qs`` supplies the link quantum
    numbers for pivots 2, 3, ... in order.
    """
    values = [2 * nus[0]]
    for idx, q in enumerate(qs):
        nu = nus[idx + 1]
        values.append(4 * q + values[-1] + 2 * nu + 2)
    return values


# ---------------------------------------------------------------------------
# spectra through four independent routes
# ---------------------------------------------------------------------------

def _sum_bounded_tuples(width: int, total_max: int) -> Iterable[tuple[int, ...]]:
    if width == 0:
        yield ()
        return
    for head in range(total_max + 1):
        for rest in _sum_bounded_tuples(width - 1, total_max - head):
            yield (head,) + rest


def spectrum_cartesian(nus: Sequence, branches: Sequence[int],
                       n_max: int) -> list:
    """Reduced energies E / sqrt(2b) from the separated one-coordinate
    solutions: one level per total excitation, repeated with its exact
    multiplicity."""
    n = len(nus)
    base = sum(eps * nu for eps, nu in zip(branches, nus)) + n
    out = []
    for m in range(n_max + 1):
        out.extend([2 * m + base] * comb(m + n - 1, n - 1))
    return sorted_energies(out)


def spectrum_pairwise(nus: Sequence, branches: Sequence[int],
                      n_max: int) -> list:
    """Reduced energies from the pair-substructure route.

    Each coordinate contributes the linear number-operator law of its own
    one-coordinate generator (gamma = 0 family), and the sum rule converts
    the B eigenvalues into 2E. No separated wavefunctions enter.
    """
    out = []
    for q in _sum_bounded_tuples(len(nus), n_max):
        total = 0
        for qi, eps, nu in zip(q, branches, nus):
            u = Fraction(1, 2) + eps * nu / 2
            e_b_red = 4 * (qi + u)        # B eigenvalue over sqrt(2b)
            total = total + e_b_red
        out.append(total / 2)
    return sorted_energies(out)


def spectrum_hyperspherical(nus: Sequence, branches: Sequence[int],
                            n_max: int) -> list:
    """Reduced energies from the nested angular separation: a radial
    quantum number plus one angular quantum number per nesting level."""
    n = len(nus)
    base = sum(eps * nu for eps, nu in zip(branches, nus)) + n
    out = []
    for tau in _sum_bounded_tuples(n, n_max):
        tau_r, *angular = tau
        out.append(2 * tau_r + 2 * sum(angular) + base)
    return sorted_energies(out)


def spectrum_chain(nus: Sequence, branches: Sequence[int],
                   n_max: int) -> list:
    """Reduced energies from the nested-sum ladder route.

    The top substructure fixes h in terms of its cutoff and the next chain
    label, which the linking recurrence expands into link quantum numbers.
    The closed form sums one cutoff plus all link numbers.
    """
    n = len(nus)
    base = sum(eps * nu for eps, nu in zip(branches, nus)) + n
    out = []
    for q in _sum_bounded_tuples(n, n_max):
        p_top, *links = q
        out.append(2 * p_top + 2 * sum(links) + base)
    return sorted_energies(out)


def sorted_energies(values: Iterable) -> list:
    return sorted(values, key=float)


def spectra_agree(left: Sequence, right: Sequence, rel_tol=1e-12) -> bool:
    """Elementwise comparison of two sorted energy lists with multiplicity."""
    if len(left) != len(right):
        return False
    for a, b in zip(left, right):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            if a != b:
                return False
        else:
            fa, fb = float(a), float(b)
            if abs(fa - fb) > rel_tol * max(1.0, abs(fa), abs(fb)):
                return False
    return True


def group_levels(energies: Sequence, coalesce=1e-9) -> list[tuple[float, int]]:
    """Collapse a sorted energy list into (energy, multiplicity) pairs."""
    if not energies:
        return []
    if all(isinstance(e, Fraction) for e in energies):
        counts = Counter(energies)
        return [(k, counts[k]) for k in sorted(counts)]
    out: list[list] = []
    for e in energies:
        fe = float(e)
        if out and abs(fe - out[-1][0]) <= coalesce * max(1.0, abs(fe)):
            out[-1][1] += 1
        else:
            out.append([fe, 1])
    return [(e, m) for e, m in out]


# ---------------------------------------------------------------------------
# cross-checks of the two structure-function forms
# ---------------------------------------------------------------------------

@dataclass
class CrossCheck:
    """Comparison of the general-form structure function against the
    factorized solution of the same family at integer points."""

    family: str
    points: tuple[int, ...]
    general_values: tuple
    factorized_values: tuple
    ratio: Any            # fitted proportionality constant, None if absent
    max_rel_dev: float    # worst deviation from constant proportionality
    consistent: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "points": list(self.points),
            "ratio": None if self.ratio is None else float(self.ratio),
            "max_rel_dev": self.max_rel_dev,
            "consistent": self.consistent,
            "note": self.note,
        }


def _tiny(value, scale: float, tol: float) -> bool:
    """Zero up to roundoff relative to the sampled magnitude scale."""
    fv = abs(float(value))
    return fv == 0.0 or (scale > 0.0 and fv <= tol * scale)


def _fit_ratio(general_vals: Sequence, fact_vals: Sequence, tol: float = 0.0):
    """Best proportionality constant and its worst relative deviation.

    Points where either side vanishes (to roundoff, when evaluated in
    floats) carry no ratio information and are skipped.
    """
    gscale = max((abs(float(v)) for v in general_vals), default=0.0)
    fscale = max((abs(float(v)) for v in fact_vals), default=0.0)
    pairs = [(g, f) for g, f in zip(general_vals, fact_vals)
             if not _tiny(g, gscale, tol) and not _tiny(f, fscale, tol)]
    if not pairs:
        return None, 0.0 if gscale == 0.0 else math.inf
    exact = all(isinstance(g, (int, Fraction)) and isinstance(f, (int, Fraction))
                for g, f in pairs)
    if exact:
        ratios = [Fraction(g) / Fraction(f) for g, f in pairs]
        lam = ratios[0]
        dev = max(abs(float(r - lam)) / max(1.0, abs(float(lam)))
                  for r in ratios)
        return lam, dev
    ratios = [float(g) / float(f) for g, f in pairs]
    lam = ratios[len(ratios) // 2]
    dev = max(abs(r - lam) / max(1.0, abs(lam)) for r in ratios)
    return lam, dev


def _run_crosscheck(family: str, general: StructureFunction,
                    fact: StructureFunction, points: Sequence[int],
                    tol: float) -> CrossCheck:
    gvals = tuple(general.eval_n(n) for n in points)
    fvals = tuple(fact.eval_n(n) for n in points)
    lam, dev = _fit_ratio(gvals, fvals, tol)
    # zeros must line up too, otherwise proportionality already failed
    gscale = max((abs(float(v)) for v in gvals), default=0.0)
    fscale = max((abs(float(v)) for v in fvals), default=0.0)
    zeros_ok = all(_tiny(g, gscale, tol) == _tiny(f, fscale, tol)
                   for g, f in zip(gvals, fvals))
    consistent = lam is not None and dev <= tol and zeros_ok
    note = ""
    if not consistent:
        note = (f"general form has degree {general.degree}, factorized "
                f"degree {fact.degree}; no constant ratio fits the sampled "
                "points")
    return CrossCheck(family, tuple(points), gvals, fvals, lam, dev,
                      consistent, note)


def crosscheck_pair(a_i, a_j, b, p: int, signs=(1, -1),
                    points: Sequence[int] | None = None,
                    tol: float = 1e-10) -> CrossCheck:
    """Quartic-form cross-check for the pair family.

    Builds the general structure function from the numeric structure
    constants and the central Casimir value, then compares with the
    factorized zeros from the solved constraints.
    """
    nu_i, nu_j = nu_values([a_i, a_j])
    eps_i, eps_j = signs
    sol = next(s for s in pair_solutions(nu_i, nu_j, p)
               if s.signs == (eps_i, eps_j))
    s = sqrt_value(2 * Fraction(b) if isinstance(b, (int, Fraction)) else 2 * b)
    m = sol.extras["m_red"] * s
    c, kprime = pair_constants(a_i, a_j, b, m)
    general = structure_function_quartic(c, kprime, sol.shift)
    fact = sol.factorized()
    if points is None:
        points = tuple(range(0, p + 4))
    return _run_crosscheck("pair", general, fact, points, tol)


def crosscheck_top(n: int, a_values: Sequence, b, p: int, z_param,
                   signs=(1, 1), points: Sequence[int] | None = None,
                   tol: float = 1e-8) -> CrossCheck:
    """Octic-form cross-check for the top family: the general formula
    against the factorized solution of the solved constraints."""
    nus = nu_values(a_values)
    sol = next(s for s in top_solutions(n, nus[-1], z_param, p)
               if s.signs == tuple(signs))
    s = sqrt_value(2 * Fraction(b) if isinstance(b, (int, Fraction)) else 2 * b)
    h = sol.extras["h_red"] * s
    c, kprime, _zval = top_constants_numeric(n, a_values, b, h, z_param)
    general = structure_function_octic(c, kprime, sol.shift)
    fact = sol.factorized()
    if points is None:
        points = tuple(range(0, max(p + 4, 9)))
    return _run_crosscheck("top", general, fact, points, tol)


def crosscheck_chain(n: int, i: int, a_values: Sequence, p: int,
                     zm_param, yp_param,
                     points: Sequence[int] | None = None,
                     tol: float = 1e-8) -> CrossCheck:
    """Octic-form cross-check for the chain family.

    Central labels: ``zm_param`` for the head sum, ``yp_param`` for the tail
    sum; the full-sum label follows from the cutoff constraint with all
    signs positive.
    """
    nus = nu_values(a_values)
    nu_i = nus[i - 1]
    y1_param = 4 * (p + 1) + yp_param + 2 * nu_i + zm_param
    u = Fraction(1, 4) * (2 + zm_param + 2 * nu_i)
    c, kprime, _centrals = chain_constants_numeric(
        n, i, a_values, y1_param, yp_param, zm_param)
    general = structure_function_octic(c, kprime, u)
    roots_xi = [(2 + e1 * y1_param + e2 * yp_param) / 4
                for e1 in (1, -1) for e2 in (1, -1)]
    roots_xi += [(2 + e1 * zm_param + 2 * e2 * nu_i) / 4
                 for e1 in (1, -1) for e2 in (1, -1)]
    roots_n = tuple(r - u for r in roots_xi)
    fact = structure_function_from_roots(roots_n, 0)
    if points is None:
        points = tuple(range(0, max(p + 4, 9)))
    return _run_crosscheck("chain", general, fact, points, tol)
