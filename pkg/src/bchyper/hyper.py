"""Bicomplex generalized hypergeometric series pFq.

The series is evaluated in the idempotent basis: the bicomplex sum is
exactly the pair of classical complex sums run on the component
parameters, glued by e1/e2.  The two components are summed
independently with independent truncation depths.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import DomainError, InvalidParamsError, NoConvergenceError
from .gamma import nearest_nonpositive_int
from .numbers import BiComplex, Hyperbolic

DEFAULT_TOL = 1e-15
DEFAULT_CAP = 10_000
MIN_TERMS = 8

# |component| closer to 1 than this counts as "on the boundary".
BOUNDARY_BAND = 1e-12
# Eq-margin needed before a boundary evaluation is allowed.
BOUNDARY_MARGIN = 1e-9


class ConvergenceKind(enum.Enum):
    ENTIRE = "entire"
    UNIT_BALL = "unit-ball"
    UNIT_BALL_BOUNDARY = "unit-ball-boundary-convergent"
    DIVERGENT = "divergent-everywhere"


@dataclass(frozen=True)
class ConvergenceClass:
    """Region classification of a parameter set (by p versus q).

    For the ball case (p = q+1) carries the boundary exponents
    eta1/eta2 (real parts of sum(betas) - sum(alphas) per idempotent
    component) and the margin of the boundary-convergence inequality,
    computed from the cartesian parts.
    """

    kind: ConvergenceKind
    eta1: float | None = None
    eta2: float | None = None
    margin: float | None = None

    @property
    def boundary_convergent(self) -> bool:
        return self.kind is ConvergenceKind.UNIT_BALL_BOUNDARY


@dataclass(frozen=True)
class PfqParams:
    """Validated parameter vectors (alphas; betas) of BiComplex values."""

    alphas: tuple
    betas: tuple

    def __init__(self, alphas: Sequence, betas: Sequence):
        alphas = tuple(BiComplex.coerce(a) for a in alphas)
        betas = tuple(BiComplex.coerce(b) for b in betas)
        for j, b in enumerate(betas):
            for label, comp in (("1", b.idem1), ("2", b.idem2)):
                if nearest_nonpositive_int(comp) is not None:
                    raise InvalidParamsError(
                        f"beta[{j}] component {label} = {comp} is a nonpositive integer"
                    )
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "betas", betas)

    @property
    def p(self) -> int:
        return len(self.alphas)

    @property
    def q(self) -> int:
        return len(self.betas)

    def comp_alphas(self, s: int) -> np.ndarray:
        attr = "idem1" if s == 1 else "idem2"
        return np.array([getattr(a, attr) for a in self.alphas], dtype=np.complex128)

    def comp_betas(self, s: int) -> np.ndarray:
        attr = "idem1" if s == 1 else "idem2"
        return np.array([getattr(b, attr) for b in self.betas], dtype=np.complex128)

    def shifted(self, dalpha=0, dbeta=0) -> "PfqParams":
        """All alphas shifted by dalpha and all betas by dbeta."""
        return PfqParams(
            [a + dalpha for a in self.alphas], [b + dbeta for b in self.betas]
        )


@dataclass(frozen=True)
class SeriesEval:
    value: BiComplex
    terms_used: tuple
    tail_bound: Hyperbolic
    cls: ConvergenceClass


def classify(params: PfqParams) -> ConvergenceClass:
    """Convergence trichotomy by p versus q, with the boundary test for p = q+1.

    The boundary inequality is evaluated on the cartesian parts,
    Re(sum b1 - sum a1) > |Im(sum b2 - sum a2)|, which is equivalent to
    both idempotent exponents eta1, eta2 being positive.
    """
    p, q = params.p, params.q
    if p <= q:
        return ConvergenceClass(ConvergenceKind.ENTIRE)
    if p > q + 1:
        return ConvergenceClass(ConvergenceKind.DIVERGENT)
    diff1 = sum(b.idem1 for b in params.betas) - sum(a.idem1 for a in params.alphas)
    diff2 = sum(b.idem2 for b in params.betas) - sum(a.idem2 for a in params.alphas)
    eta1 = complex(diff1).real
    eta2 = complex(diff2).real
    cart1 = sum(b.re1 for b in params.betas) - sum(a.re1 for a in params.alphas)
    cart2 = sum(b.re2 for b in params.betas) - sum(a.re2 for a in params.alphas)
    margin = complex(cart1).real - abs(complex(cart2).imag)
    kind = (
        ConvergenceKind.UNIT_BALL_BOUNDARY
        if margin > 0.0
        else ConvergenceKind.UNIT_BALL
    )
    return ConvergenceClass(kind, eta1=eta1, eta2=eta2, margin=margin)


def termination_index(comp_alphas) -> int | None:
    """Degree of the terminating series when some numerator parameter
    is a nonpositive integer, else None."""
    best = None
    for a in comp_alphas:
        n = nearest_nonpositive_int(a)
        if n is not None and (best is None or n < best):
            best = n
    return best


def _check_component_domain(kind: ConvergenceKind, r: float, margin, label: str):
    if kind is ConvergenceKind.ENTIRE:
        return
    if kind is ConvergenceKind.DIVERGENT:
        if r > 0.0:
            raise DomainError(
                f"series with p > q+1 diverges for nonzero argument (component {label})"
            )
        return
    if r < 1.0 - BOUNDARY_BAND:
        return
    if r <= 1.0 + BOUNDARY_BAND:
        if kind is ConvergenceKind.UNIT_BALL_BOUNDARY and margin is not None and margin > BOUNDARY_MARGIN:
            return
        raise DomainError(
            f"boundary evaluation needs the convergence inequality with margin"
            f" > {BOUNDARY_MARGIN} (component {label}, |z| = {r})"
        )
    raise DomainError(f"component {label} argument has modulus {r} >= 1")


def component_series(
    comp_alphas,
    comp_betas,
    z: complex,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
):
    """One classical component sum via the kernel, (value, terms, tail).

    Terminating series (nonpositive-integer numerator parameter) are
    summed exactly with the cap and tail logic bypassed.  No region
    check: callers gate the domain.
    """
    a = np.ascontiguousarray(comp_alphas, dtype=np.complex128)
    b = np.ascontiguousarray(comp_betas, dtype=np.complex128)
    z = complex(z)
    k = termination_index(a)
    if k is not None:
        value = kernels.series_sum_terminating(a, b, z, k)
        return value, k + 1, 0.0
    value, n, tail, status = kernels.series_sum(a, b, z, tol, cap, MIN_TERMS)
    if status != kernels.STATUS_OK:
        raise NoConvergenceError(
            f"series did not meet the stop rule within {cap} terms at z = {z}"
        )
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NoConvergenceError(f"series overflowed at z = {z}")
    return value, n, tail


def pfq(
    params: PfqParams,
    z: BiComplex,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> SeriesEval:
    """Evaluate the bicomplex series at z, componentwise.

    Raises DomainError outside the convergence region of the parameter
    class (boundary points need the convergence inequality to hold
    with margin) and NoConvergenceError when the term cap is hit.
    Terminating components are exempt from the region check.
    """
    z = BiComplex.coerce(z)
    cls = classify(params)
    values = []
    terms = []
    tails = []
    for s, zc in ((1, z.idem1), (2, z.idem2)):
        a = params.comp_alphas(s)
        b = params.comp_betas(s)
        if termination_index(a) is None:
            _check_component_domain(cls.kind, abs(zc), cls.margin, str(s))
        v, n, t = component_series(a, b, zc, tol, cap)
        values.append(v)
        terms.append(n)
        tails.append(t)
    return SeriesEval(
        value=BiComplex.from_idempotent(values[0], values[1]),
        terms_used=(terms[0], terms[1]),
        tail_bound=Hyperbolic.from_idempotent(tails[0], tails[1]),
        cls=cls,
    )


def pfq_value(params, z, tol=DEFAULT_TOL, cap=DEFAULT_CAP) -> BiComplex:
    return pfq(params, z, tol, cap).value


def check_domain(params: PfqParams, z: BiComplex):
    """Raise DomainError when z lies outside the region for these parameters.

    Terminating components (polynomial case) are exempt.
    """
    z = BiComplex.coerce(z)
    cls = classify(params)
    for s, zc in ((1, z.idem1), (2, z.idem2)):
        if termination_index(params.comp_alphas(s)) is None:
            _check_component_domain(cls.kind, abs(zc), cls.margin, str(s))


def pfq_components(
    params: PfqParams,
    z: BiComplex,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
    gate: bool = True,
):
    """The two raw component sums (z1-side, z2-side) without gluing.

    Identity and quadrature code work componentwise and glue once at
    the end, so each bicomplex relation is literally two classical
    relations.
    """
    z = BiComplex.coerce(z)
    if gate:
        check_domain(params, z)
    v1, _, _ = component_series(params.comp_alphas(1), params.comp_betas(1), z.idem1, tol, cap)
    v2, _, _ = component_series(params.comp_alphas(2), params.comp_betas(2), z.idem2, tol, cap)
    return v1, v2


def hyp1f1(a, b, z, tol=DEFAULT_TOL, cap=DEFAULT_CAP) -> BiComplex:
    """Confluent case, p = q = 1."""
    return pfq_value(PfqParams([a], [b]), z, tol, cap)


def hyp2f1(a1, a2, b, z, tol=DEFAULT_TOL, cap=DEFAULT_CAP) -> BiComplex:
    """Gauss case, p = 2, q = 1; argument must lie in the unit ball."""
    return pfq_value(PfqParams([a1, a2], [b]), z, tol, cap)


def hyp1f0(v, z, tol=DEFAULT_TOL, cap=DEFAULT_CAP) -> BiComplex:
    """Binomial case, p = 1, q = 0; equals (1 - z)^(-v) on the ball."""
    return pfq_value(PfqParams([v], []), z, tol, cap)


def oracle_pfq_complex(
    a_list,
    b_list,
    z: complex,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> complex:
    """Independent classical complex series, the componentwise oracle.

    Every term is rebuilt from scratch as a product of per-index
    ratios (numpy prod over a fresh array), deliberately not sharing
    the kernel's running recurrence, so rounding paths differ.  Same
    stop rule: three consecutive terms below tol * |sum|, at least
    eight terms.
    """
    a = np.array(list(a_list), dtype=np.complex128)
    b = np.array(list(b_list), dtype=np.complex128)
    z = complex(z)
    total = 1.0 + 0.0j
    below = 0
    n = 1
    while n <= cap:
        k = np.arange(n, dtype=np.float64)
        num = np.ones(n, dtype=np.complex128)
        for ai in a:
            num = num * (ai + k)
        den = (k + 1.0).astype(np.complex128)
        for bj in b:
            den = den * (bj + k)
        term = complex(np.prod(z * num / den))
        total += term
        if abs(term) <= tol * abs(total):
            below += 1
            if below >= 3 and n >= MIN_TERMS:
                return total
        else:
            below = 0
        n += 1
    raise NoConvergenceError(f"oracle series did not converge within {cap} terms")


def boundary_probe(params: PfqParams, z: BiComplex, cap: int = 20_000, window: int = 100):
    """Cauchy deltas of the two component partial sums over a trailing window.

    Returns ((delta1, maxterm1, finite1), (delta2, maxterm2, finite2)).
    """
    z = BiComplex.coerce(z)
    out = []
    for s, zc in ((1, z.idem1), (2, z.idem2)):
        out.append(
            kernels.window_probe(params.comp_alphas(s), params.comp_betas(s), zc, cap, window)
        )
    return tuple(out)


def ratio_radius_estimate(comp_alphas, comp_betas, n: int) -> float:
    """|a_n / a_{n+1}| term-ratio estimate of the convergence radius."""
    num = n + 1.0
    for b in comp_betas:
        num *= abs(complex(b) + n)
    den = 1.0
    for a in comp_alphas:
        den *= abs(complex(a) + n)
    if den == 0.0:
        return math.inf
    return num / den
