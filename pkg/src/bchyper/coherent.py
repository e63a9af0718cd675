"""Coherent-type states whose normalization is the bicomplex series.

Fock indices are restricted to diagonal hyperbolic integers in the
public API; the two idempotent components run as independent classical
towers, which is exactly how every formula here factorizes.  The
parameter function rho and the ladder factor f obey

    rho(0) = 1,   rho(n+1) = rho(n) * f(n)^2,
    f(n)^2 = (n+1) * prod_j (beta_j + n) / prod_i (alpha_i + n)

per component, and both must stay strictly positive hyperbolic
numbers, which restricts the parameters to real components with
positive ratios.  rho grows factorially for p <= q, so entries past
n ~ 170 can overflow to inf; coefficients divide by sqrt(rho) and
degrade gracefully to exact zeros there.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from . import hyper
from .errors import (
    InvalidParamsError,
    ParamMismatchError,
    PositivityError,
    TruncationError,
)
from .gamma import nearest_nonpositive_int
from .hyper import PfqParams
from .identities import IdentityReport
from .numbers import BiComplex, Hyperbolic

REAL_TOL = 1e-12
DEFAULT_TRUNCATION = 256
HARD_TRUNCATION = 1 << 15
COEFF_FLOOR = 1e-16
TAIL_LIMIT = 1e-12


def _real_components(value: BiComplex, name: str):
    out = []
    for label, comp in (("1", value.idem1), ("2", value.idem2)):
        if abs(comp.imag) > REAL_TOL * max(1.0, abs(comp)):
            raise PositivityError(
                f"{name} component {label} = {comp} is not real; the parameter"
                " function cannot be a positive hyperbolic number"
            )
        out.append(comp.real)
    return out


@dataclass(frozen=True)
class CoherentSpec:
    """A (p, q, Z) state description with truncation level."""

    params: PfqParams
    z: BiComplex
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        object.__setattr__(self, "z", BiComplex.coerce(self.z))
        if self.truncation < 1:
            raise InvalidParamsError("truncation must be positive")
        for i, a in enumerate(self.params.alphas):
            for label, comp in (("1", a.idem1), ("2", a.idem2)):
                if nearest_nonpositive_int(comp) is not None:
                    raise InvalidParamsError(
                        f"alpha[{i}] component {label} = {comp} is zero or a negative integer"
                    )
        ratios = [1.0, 1.0]
        for s in (1, 2):
            acc = 1.0
            for a in self.params.alphas:
                acc /= _real_components(a, "alpha")[s - 1]
            for b in self.params.betas:
                acc *= _real_components(b, "beta")[s - 1]
            ratios[s - 1] = acc
        if ratios[0] <= 0.0 or ratios[1] <= 0.0:
            raise PositivityError(
                f"parameter ratio prod(beta)/prod(alpha) = ({ratios[0]}, {ratios[1]})"
                " must be strictly positive in both components"
            )
        # the normalization argument must lie in the series region
        hyper.check_domain(self.params, self._zeta())

    def _zeta(self) -> BiComplex:
        return BiComplex.from_idempotent(
            abs(self.z.idem1) ** 2, abs(self.z.idem2) ** 2
        )


@dataclass(frozen=True)
class LadderTables:
    """Componentwise rho, f, and unnormalized coefficient tables."""

    spec: CoherentSpec
    nmax: int
    rho1: np.ndarray
    rho2: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    raw1: np.ndarray = field(repr=False)
    raw2: np.ndarray = field(repr=False)

    def rho(self, n: int) -> BiComplex:
        return BiComplex.from_idempotent(self.rho1[n], self.rho2[n])

    def f(self, n: int) -> BiComplex:
        return BiComplex.from_idempotent(self.f1[n], self.f2[n])

    def coeff_raw(self, n: int) -> BiComplex:
        return BiComplex.from_idempotent(self.raw1[n], self.raw2[n])


def _component_tables(a, b, z, nmax):
    """(rho, f, raw coefficients) for one classical tower."""
    rho = np.empty(nmax + 1, dtype=np.float64)
    f = np.empty(nmax, dtype=np.float64)
    raw = np.empty(nmax + 1, dtype=np.complex128)
    rho[0] = 1.0
    raw[0] = 1.0
    zp = 1.0 + 0.0j
    for n in range(nmax):
        num = n + 1.0
        for x in b:
            num *= x.real + n
        den = 1.0
        for x in a:
            den *= x.real + n
        f2 = num / den
        if not f2 > 0.0:
            raise PositivityError(
                f"ladder factor squared is {f2} at level {n}; the parameter"
                " function leaves the positive cone"
            )
        f[n] = math.sqrt(f2)
        with np.errstate(over="ignore"):
            rho[n + 1] = rho[n] * f[n] ** 2
        zp = zp * z
        raw[n + 1] = zp / math.sqrt(rho[n + 1]) if math.isfinite(rho[n + 1]) else 0.0
    return rho, f, raw


@functools.lru_cache(maxsize=128)
def build_tables(spec: CoherentSpec) -> LadderTables:
    """Tables satisfying the recurrence rho(n+1) = rho(n) * f(n)^2 exactly.

    The truncation grows (doubling, up to a hard cap) until both
    normalized tail coefficients satisfy |c_N|^2 < 1e-16.
    """
    norm1, norm2 = _norm_components(spec)
    nmax = spec.truncation
    while True:
        a = [BiComplex.coerce(x) for x in spec.params.alphas]
        b = [BiComplex.coerce(x) for x in spec.params.betas]
        a1 = [x.idem1 for x in a]
        a2 = [x.idem2 for x in a]
        b1 = [x.idem1 for x in b]
        b2 = [x.idem2 for x in b]
        rho1, f1, raw1 = _component_tables(a1, b1, spec.z.idem1, nmax)
        rho2, f2, raw2 = _component_tables(a2, b2, spec.z.idem2, nmax)
        last1 = abs(raw1[-1]) ** 2 / norm1
        last2 = abs(raw2[-1]) ** 2 / norm2
        if (last1 < COEFF_FLOOR and last2 < COEFF_FLOOR) or nmax >= HARD_TRUNCATION:
            return LadderTables(
                spec=spec, nmax=nmax,
                rho1=rho1, rho2=rho2, f1=f1, f2=f2, raw1=raw1, raw2=raw2,
            )
        nmax = min(2 * nmax, HARD_TRUNCATION)


def _norm_components(spec: CoherentSpec):
    zeta = spec._zeta()
    v1, v2 = hyper.pfq_components(spec.params, zeta)
    return v1.real, v2.real


def normalization(spec: CoherentSpec) -> BiComplex:
    """The series evaluated at the squared hyperbolic modulus of Z."""
    n1, n2 = _norm_components(spec)
    return BiComplex.from_idempotent(n1, n2)


def state_coefficients(spec: CoherentSpec):
    """Normalized coefficients c_n = Z^n / sqrt(rho(n) * N).

    The hyperbolic-squared magnitudes sum to 1 minus the truncation
    tail; a tail above 1e-12 raises TruncationError.
    """
    tables = build_tables(spec)
    n1, n2 = _norm_components(spec)
    c1 = tables.raw1 / math.sqrt(n1)
    c2 = tables.raw2 / math.sqrt(n2)
    tail1 = max(0.0, 1.0 - float(np.sum(np.abs(c1) ** 2)))
    tail2 = max(0.0, 1.0 - float(np.sum(np.abs(c2) ** 2)))
    if tail1 >= TAIL_LIMIT or tail2 >= TAIL_LIMIT:
        raise TruncationError(
            f"coefficient tail ({tail1}, {tail2}) exceeds {TAIL_LIMIT}"
            f" at truncation {tables.nmax}"
        )
    return [BiComplex.from_idempotent(u, v) for u, v in zip(c1, c2)]


def coefficient_arrays(spec: CoherentSpec):
    """(c1, c2) normalized component coefficient arrays (fast path for sweeps)."""
    tables = build_tables(spec)
    n1, n2 = _norm_components(spec)
    return tables.raw1 / math.sqrt(n1), tables.raw2 / math.sqrt(n2)


def inner_product(spec_a: CoherentSpec, spec_b: CoherentSpec) -> BiComplex:
    """Overlap of two states with identical parameters.

    Componentwise sum of conjugate-weighted coefficient products,
    which realizes the star-conjugate argument of the normalization
    function: the idempotent components of Z* are the complex
    conjugates of the components of Z.
    """
    if spec_a.params != spec_b.params:
        raise ParamMismatchError("states have different parameter vectors")
    ca1, ca2 = coefficient_arrays(spec_a)
    cb1, cb2 = coefficient_arrays(spec_b)
    k = min(len(ca1), len(cb1))
    v1 = complex(np.sum(np.conj(ca1[:k]) * cb1[:k]))
    v2 = complex(np.sum(np.conj(ca2[:k]) * cb2[:k]))
    return BiComplex.from_idempotent(v1, v2)


def annihilate(spec: CoherentSpec) -> IdentityReport:
    """Eigenstate check of the lowering operator.

    Applies the operator coefficientwise, f(n) * c_{n+1} for
    n <= N-1, and compares against Z * c_n.  The report's sides are
    the recovered (Rayleigh) eigenvalue and Z itself; the residual is
    the relative l2 misfit per component, bounded by the truncation
    tail for a correct recurrence.
    """
    tables = build_tables(spec)
    c1, c2 = coefficient_arrays(spec)
    sides = []
    for f, c, zc in ((tables.f1, c1, spec.z.idem1), (tables.f2, c2, spec.z.idem2)):
        lowered = f * c[1:]
        target = zc * c[:-1]
        misfit = float(np.linalg.norm(lowered - target))
        weight = float(np.sum(np.abs(c[:-1]) ** 2))
        rayleigh = complex(np.sum(np.conj(c[:-1]) * lowered) / weight) if weight > 0 else 0j
        sides.append((rayleigh, zc, misfit))
    bound1 = abs(c1[-1]) * (tables.f1[-1] if len(tables.f1) else 0.0)
    bound2 = abs(c2[-1]) * (tables.f2[-1] if len(tables.f2) else 0.0)
    tol = max(bound1, bound2, 64 * np.finfo(float).eps * tables.nmax)
    r1 = sides[0][2]
    r2 = sides[1][2]
    return IdentityReport(
        lhs=BiComplex.from_idempotent(sides[0][0], sides[1][0]),
        rhs=BiComplex.from_idempotent(sides[0][1], sides[1][1]),
        residual=Hyperbolic.from_idempotent(r1, r2),
        tolerance=tol,
        passed=(r1 <= tol and r2 <= tol),
    )


def commutator_diagonal(spec: CoherentSpec, n: int) -> BiComplex:
    """Diagonal of the ladder commutator at level n: f(n)^2 - f(n-1)^2.

    Cross-checked against the parameter-function ratio form
    rho(n+1)/rho(n) - rho(n)/rho(n-1).
    """
    tables = build_tables(spec)
    if not 1 <= n < tables.nmax:
        raise IndexError(f"level must be in [1, {tables.nmax})")
    out = []
    for f, rho in ((tables.f1, tables.rho1), (tables.f2, tables.rho2)):
        direct = f[n] ** 2 - f[n - 1] ** 2
        if math.isfinite(rho[n + 1]) and math.isfinite(rho[n]):
            ratio = rho[n + 1] / rho[n] - rho[n] / rho[n - 1]
            scale = max(abs(direct), abs(ratio), 1.0)
            if abs(direct - ratio) > 1e-10 * scale:
                raise ArithmeticError(
                    f"commutator forms disagree at level {n}: {direct} vs {ratio}"
                )
        out.append(direct)
    return BiComplex.from_idempotent(out[0], out[1])


def ladder_matrices(spec: CoherentSpec, size: int):
    """Dense truncated matrices ((lower1, lower2), (raise1, raise2)).

    Lowering has f(n) on the superdiagonal, raising on the
    subdiagonal; with the componentwise conjugate-transpose adjoint
    the raising matrix is exactly the adjoint of the lowering one.
    """
    tables = build_tables(spec)
    if size > tables.nmax:
        raise IndexError("matrix size exceeds the table truncation")
    lower = []
    upper = []
    for f in (tables.f1, tables.f2):
        m = np.zeros((size, size), dtype=np.complex128)
        for n in range(size - 1):
            m[n, n + 1] = f[n]
        lower.append(m)
        upper.append(m.T.copy())
    return (lower[0], lower[1]), (upper[0], upper[1])
