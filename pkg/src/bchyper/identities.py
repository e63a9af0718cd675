"""Verification of the algebraic relations of the bicomplex series.

Every relation here factorizes over the idempotent basis, so each
operation runs a classical complex worker on both component parameter
sets and glues the two sides with e1/e2 at the very end.  Reports
carry both sides, the componentwise relative residual as a hyperbolic
number, and a pass flag against the requested tolerance.

Factorials of bicomplex quantities appearing in the parameter-shift
relations are read as gamma ratios, realized as reciprocal rising
factorials (Gamma(x)/Gamma(x+s) = 1/(x)_s), which extends them to
non-integer parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hyper
from .errors import InvalidParamsError, NullConeError, PoleError
from .gamma import complex_pochhammer
from .hyper import DEFAULT_CAP, DEFAULT_TOL, PfqParams
from . import kernels
from .kernels import coeff_table
from .numbers import NULL_TOL, BiComplex, Hyperbolic

DEFAULT_IDENTITY_TOL = 1e-9


@dataclass(frozen=True)
class IdentityReport:
    lhs: BiComplex
    rhs: BiComplex
    residual: Hyperbolic
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class ShiftM:
    """Bicomplex integer shift M = m*e1 + n*e2 with m, n >= 0."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("shift components must be nonnegative")

    @property
    def conj(self) -> "ShiftM":
        return ShiftM(self.n, self.m)

    def to_bicomplex(self) -> BiComplex:
        return BiComplex.from_idempotent(self.m, self.n)


def relative_residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def make_report(lhs1, rhs1, lhs2, rhs2, tol) -> IdentityReport:
    r1 = relative_residual(lhs1, rhs1)
    r2 = relative_residual(lhs2, rhs2)
    return IdentityReport(
        lhs=BiComplex.from_idempotent(lhs1, lhs2),
        rhs=BiComplex.from_idempotent(rhs1, rhs2),
        residual=Hyperbolic.from_idempotent(r1, r2),
        tolerance=tol,
        passed=(r1 <= tol and r2 <= tol),
    )


def _F(alphas, betas, z, tol=DEFAULT_TOL, cap=DEFAULT_CAP) -> complex:
    """Classical component sum, no domain gate (callers gate)."""
    value, _, _ = hyper.component_series(
        np.array(alphas, dtype=np.complex128),
        np.array(betas, dtype=np.complex128),
        z,
        tol,
        cap,
    )
    return value


def _components(params: PfqParams):
    return (
        (list(params.comp_alphas(1)), list(params.comp_betas(1))),
        (list(params.comp_alphas(2)), list(params.comp_betas(2))),
    )


# ---------------------------------------------------------------------------
# Quadratic transforms.
# ---------------------------------------------------------------------------


def _even_shape(params: PfqParams) -> PfqParams:
    half = BiComplex(0.5)
    alphas = [a * half for a in params.alphas] + [(a + 1) * half for a in params.alphas]
    betas = (
        [half]
        + [b * half for b in params.betas]
        + [(b + 1) * half for b in params.betas]
    )
    return PfqParams(alphas, betas)


def _odd_shape(params: PfqParams) -> PfqParams:
    half = BiComplex(0.5)
    alphas = [(a + 1) * half for a in params.alphas] + [
        (a + 2) * half for a in params.alphas
    ]
    betas = (
        [BiComplex(1.5)]
        + [(b + 1) * half for b in params.betas]
        + [(b + 2) * half for b in params.betas]
    )
    return PfqParams(alphas, betas)


def quad_even_comp(a, b, z, scale, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    """Component worker: (lhs, rhs) of the even quadratic transform."""
    ea = [x / 2 for x in a] + [(x + 1) / 2 for x in a]
    eb = [0.5 + 0j] + [x / 2 for x in b] + [(x + 1) / 2 for x in b]
    lhs = 2.0 * _F(ea, eb, z * z / scale, tol, cap)
    rhs = _F(a, b, z, tol, cap) + _F(a, b, -z, tol, cap)
    return lhs, rhs


def quad_even(
    params: PfqParams, z: BiComplex, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """Even quadratic transform: doubled-shape series at Z^2 / 4^(q+1-p)
    against the sum of the base series at Z and -Z."""
    z = BiComplex.coerce(z)
    derived = _even_shape(params)  # raises InvalidParamsError on bad halved betas
    scale = 4.0 ** (params.q + 1 - params.p)
    hyper.check_domain(params, z)
    hyper.check_domain(derived, BiComplex.from_idempotent(
        z.idem1 * z.idem1 / scale, z.idem2 * z.idem2 / scale))
    (a1, b1), (a2, b2) = _components(params)
    l1, r1 = quad_even_comp(a1, b1, z.idem1, scale)
    l2, r2 = quad_even_comp(a2, b2, z.idem2, scale)
    return make_report(l1, r1, l2, r2, tol)


def quad_odd_comp(a, b, z, scale, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    """Component worker: (lhs, rhs) of the odd quadratic transform."""
    oa = [(x + 1) / 2 for x in a] + [(x + 2) / 2 for x in a]
    ob = [1.5 + 0j] + [(x + 1) / 2 for x in b] + [(x + 2) / 2 for x in b]
    num = 1.0 + 0j
    for x in a:
        num *= x
    den = 1.0 + 0j
    for x in b:
        den *= x
    if abs(den) < NULL_TOL * max(1.0, abs(num)):
        raise NullConeError("odd-transform prefactor divides by a null denominator")
    pre = 2.0 * z * num / den
    lhs = pre * _F(oa, ob, z * z / scale, tol, cap)
    rhs = _F(a, b, z, tol, cap) - _F(a, b, -z, tol, cap)
    return lhs, rhs


def quad_odd(
    params: PfqParams, z: BiComplex, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """Odd quadratic transform with the 2*Z*prod(alphas)/prod(betas) prefactor."""
    z = BiComplex.coerce(z)
    derived = _odd_shape(params)
    scale = 4.0 ** (params.q + 1 - params.p)
    hyper.check_domain(params, z)
    hyper.check_domain(derived, BiComplex.from_idempotent(
        z.idem1 * z.idem1 / scale, z.idem2 * z.idem2 / scale))
    (a1, b1), (a2, b2) = _components(params)
    l1, r1 = quad_odd_comp(a1, b1, z.idem1, scale)
    l2, r2 = quad_odd_comp(a2, b2, z.idem2, scale)
    return make_report(l1, r1, l2, r2, tol)


# ---------------------------------------------------------------------------
# Terminating 3F2 summation at unit argument.
# ---------------------------------------------------------------------------


def saalschutz_comp(n, a1, a2, b, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    """Component worker for the balanced terminating 3F2(1) closed form."""
    b2 = 1.0 - b + a1 + a2 - n
    lhs = _F([complex(-n), a1, a2], [b, b2], 1.0 + 0j, tol, cap)
    denom_poch = (complex_pochhammer(b, n), complex_pochhammer(b - a1 - a2, n))
    for dp in denom_poch:
        if abs(dp) < NULL_TOL:
            raise NullConeError("closed-form denominator pochhammer vanishes")
    rhs = (
        complex_pochhammer(b - a1, n)
        * complex_pochhammer(b - a2, n)
        / (denom_poch[0] * denom_poch[1])
    )
    return lhs, rhs


def saalschutz(
    n: int, a1, a2, b, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """Terminating balanced 3F2 at unit argument against its pochhammer closed form."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a1 = BiComplex.coerce(a1)
    a2 = BiComplex.coerce(a2)
    b = BiComplex.coerce(b)
    # The second denominator parameter must not truncate the n+1 exact terms.
    for comp in (b.idem1, b.idem2):
        kk = _nonpos_int_leq(comp, n - 1)
        if kk is not None:
            raise NullConeError(f"denominator parameter {comp} hits zero inside the sum")
    for comp in ((1 - b + a1 + a2 - n).idem1, (1 - b + a1 + a2 - n).idem2):
        kk = _nonpos_int_leq(comp, n - 1)
        if kk is not None:
            raise NullConeError(f"denominator parameter {comp} hits zero inside the sum")
    l1, r1 = saalschutz_comp(n, a1.idem1, a2.idem1, b.idem1)
    l2, r2 = saalschutz_comp(n, a1.idem2, a2.idem2, b.idem2)
    return make_report(l1, r1, l2, r2, tol)


def _nonpos_int_leq(w: complex, bound: int):
    """n >= 0 with w ~ -n and n <= bound, else None."""
    from .gamma import nearest_nonpositive_int

    n = nearest_nonpositive_int(w)
    if n is not None and n <= bound:
        return n
    return None


# ---------------------------------------------------------------------------
# Derivative relation.
# ---------------------------------------------------------------------------


def derivative_comp(a, b, z, k, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    """(lhs, rhs): term-wise differentiated series against the shifted form."""
    if k == 0:
        v = _F(a, b, z, tol, cap)
        return v, v
    # advance to coefficient c_k
    c = 1.0 + 0j
    for j in range(k):
        num = 1.0 + 0j
        for x in a:
            num *= x + j
        den = j + 1.0 + 0j
        for x in b:
            den *= x + j
        c *= num / den
    term = c * math.factorial(k)  # j = k contribution, z^0
    total = term
    below = 0
    m = 0
    while m < cap:
        j = k + m
        num = 1.0 + 0j
        for x in a:
            num *= x + j
        den = j + 1.0 + 0j
        for x in b:
            den *= x + j
        term = term * z * (num / den) * ((j + 1.0) / (m + 1.0))
        total += term
        m += 1
        if abs(term) <= tol * abs(total):
            below += 1
            if below >= 3 and m >= hyper.MIN_TERMS:
                break
        else:
            below = 0
    pre = 1.0 + 0j
    for x in a:
        pre *= complex_pochhammer(x, k)
    for x in b:
        pre /= complex_pochhammer(x, k)
    rhs = pre * _F([x + k for x in a], [x + k for x in b], z, tol, cap)
    return total, rhs


def derivative_relation(
    params: PfqParams, z: BiComplex, k: int, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """k-th derivative by exact coefficient shift against the
    pochhammer-prefactored series with all parameters shifted by k."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    z = BiComplex.coerce(z)
    shifted = params.shifted(dalpha=k, dbeta=k)  # InvalidParamsError on bad betas
    hyper.check_domain(params, z)
    hyper.check_domain(shifted, z)
    (a1, b1), (a2, b2) = _components(params)
    l1, r1 = derivative_comp(a1, b1, z.idem1, k)
    l2, r2 = derivative_comp(a2, b2, z.idem2, k)
    return make_report(l1, r1, l2, r2, tol)


# ---------------------------------------------------------------------------
# Holomorphy (Cauchy-Riemann) finite-difference check.
# ---------------------------------------------------------------------------


def cauchy_riemann_check(
    params: PfqParams,
    z: BiComplex,
    h: float,
    wrt: str = "z",
    index: int = 0,
    tol: float = 1e-7,
) -> IdentityReport:
    """Central-difference check of both Cauchy-Riemann equations.

    Writes F = f1 + i2*f2 and differences either the argument's
    cartesian parts (wrt="z") or the cartesian parts of one parameter
    (wrt="alpha"/"beta" with index).  The report packs
    lhs = df1/du + i2*df1/dv and rhs = df2/dv - i2*df2/du, whose
    equality is exactly the pair of CR equations; the residual is
    O(h^2) for a holomorphic family.
    """
    if not (1e-8 <= h <= 1e-2):
        raise ValueError("step size out of the sensible range [1e-8, 1e-2]")
    z = BiComplex.coerce(z)

    if wrt == "z":
        def parts(du, dv):
            w = BiComplex(z.re1 + du, z.re2 + dv)
            v = hyper.pfq_value(params, w)
            return v.re1, v.re2
    elif wrt in ("alpha", "beta"):
        source = params.alphas if wrt == "alpha" else params.betas
        if not 0 <= index < len(source):
            raise ValueError(f"no {wrt} parameter with index {index}")

        def parts(du, dv):
            target = source[index]
            moved = BiComplex(target.re1 + du, target.re2 + dv)
            if wrt == "alpha":
                new = PfqParams(
                    [moved if i == index else a for i, a in enumerate(params.alphas)],
                    params.betas,
                )
            else:
                new = PfqParams(
                    params.alphas,
                    [moved if j == index else b for j, b in enumerate(params.betas)],
                )
            v = hyper.pfq_value(new, z)
            return v.re1, v.re2
    else:
        raise ValueError(f"unknown differentiation target {wrt!r}")

    f1_pu, f2_pu = parts(+h, 0.0)
    f1_mu, f2_mu = parts(-h, 0.0)
    f1_pv, f2_pv = parts(0.0, +h)
    f1_mv, f2_mv = parts(0.0, -h)
    df1_du = (f1_pu - f1_mu) / (2.0 * h)
    df2_du = (f2_pu - f2_mu) / (2.0 * h)
    df1_dv = (f1_pv - f1_mv) / (2.0 * h)
    df2_dv = (f2_pv - f2_mv) / (2.0 * h)
    lhs = BiComplex(df1_du, df1_dv)
    rhs = BiComplex(df2_dv, -df2_du)
    return make_report(lhs.idem1, rhs.idem1, lhs.idem2, rhs.idem2, tol)


# ---------------------------------------------------------------------------
# Contiguous relations for the bicomplex shift M = m*e1 + n*e2.
#
# Each bicomplex relation's component s pairs the shift (m, n) with the
# conjugate shift (n, m), so the workers take both shift integers and
# sum the two single-shift classical identities.
# ---------------------------------------------------------------------------


def _poch_ratio_products(a, b, s):
    num = 1.0 + 0j
    for x in a:
        num *= complex_pochhammer(x, s)
    den = 1.0 + 0j
    for x in b:
        den *= complex_pochhammer(x, s)
    return num / den


def contiguous_alpha_plus_comp(a, b, z, m, n, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    lhs = _F([a[0] + m] + a[1:], b, z, tol, cap) + _F([a[0] + n] + a[1:], b, z, tol, cap)

    def one(shift):
        acc = 0.0 + 0j
        for s in range(shift + 1):
            gr = complex_pochhammer(a[0], s)
            if abs(gr) < NULL_TOL:
                raise PoleError("gamma-ratio prefactor hits a pole")
            weight = math.comb(shift, s) / gr * _poch_ratio_products(a, b, s)
            acc += weight * z**s * _F(
                [x + s for x in a], [x + s for x in b], z, tol, cap
            )
        return acc

    return lhs, one(m) + one(n)


def contiguous_alpha_minus_comp(a, b, z, m, n, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    lhs = _F([a[0] - m] + a[1:], b, z, tol, cap) + _F([a[0] - n] + a[1:], b, z, tol, cap)

    def one(shift):
        acc = 0.0 + 0j
        for s in range(shift + 1):
            weight = math.comb(shift, s) * _poch_ratio_products(a[1:], b, s)
            acc += weight * (-z) ** s * _F(
                [a[0]] + [x + s for x in a[1:]], [x + s for x in b], z, tol, cap
            )
        return acc

    return lhs, one(m) + one(n)


def contiguous_beta_minus_comp(a, b, z, m, n, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    lhs = _F(a, [b[0] - m] + b[1:], z, tol, cap) + _F(a, [b[0] - n] + b[1:], z, tol, cap)

    def one(shift):
        acc = 0.0 + 0j
        for s in range(shift + 1):
            gr = complex_pochhammer(b[0] - shift, s)
            if abs(gr) < NULL_TOL:
                raise PoleError("gamma-ratio prefactor hits a pole")
            weight = math.comb(shift, s) / gr * _poch_ratio_products(a, b, s)
            acc += weight * z**s * _F(
                [x + s for x in a], [x + s for x in b], z, tol, cap
            )
        return acc

    return lhs, one(m) + one(n)


def contiguous_beta_plus_comp(a, b, z, m, n, tol=DEFAULT_TOL, cap=DEFAULT_CAP):
    lhs = _F(a, [b[0] + m] + b[1:], z, tol, cap) + _F(a, [b[0] + n] + b[1:], z, tol, cap)
    base = _F(a, b, z, tol, cap)
    num = 1.0 + 0j
    for x in a:
        num *= x
    tail_den = 1.0 + 0j
    for x in b[1:]:
        tail_den *= x

    def one(shift):
        # The proof's recurrence sums from s = 1; the s = 0 term would
        # double-count the leading 2*F term.
        acc = 0.0 + 0j
        for s in range(1, shift + 1):
            den = (b[0] + s - 1.0) * (b[0] + s) * tail_den
            if abs(den) < NULL_TOL * max(1.0, abs(num)):
                raise NullConeError("beta-shift denominator vanishes")
            acc += (num / den) * _F(
                [x + 1 for x in a],
                [b[0] + s + 1] + [x + 1 for x in b[1:]],
                z,
                tol,
                cap,
            )
        return acc

    rhs = 2.0 * base - z * one(m) - z * one(n)
    return lhs, rhs


def _contiguous(params, z, shift, worker, lhs_params_builder, tol):
    """Shared wrapper: validate shifted parameter sets, gate, glue components."""
    z = BiComplex.coerce(z)
    for shifted in lhs_params_builder(params, shift):
        hyper.check_domain(shifted, z)
    hyper.check_domain(params, z)
    (a1, b1), (a2, b2) = _components(params)
    l1, r1 = worker(a1, b1, z.idem1, shift.m, shift.n)
    l2, r2 = worker(a2, b2, z.idem2, shift.n, shift.m)
    return make_report(l1, r1, l2, r2, tol)


def _alpha_shift_params(params, shift, sign):
    delta = shift.to_bicomplex() if sign > 0 else -shift.to_bicomplex()
    deltac = shift.conj.to_bicomplex() if sign > 0 else -shift.conj.to_bicomplex()
    out = []
    for d in (delta, deltac):
        alphas = [params.alphas[0] + d] + list(params.alphas[1:])
        out.append(PfqParams(alphas, params.betas))
    return out


def _beta_shift_params(params, shift, sign):
    delta = shift.to_bicomplex() if sign > 0 else -shift.to_bicomplex()
    deltac = shift.conj.to_bicomplex() if sign > 0 else -shift.conj.to_bicomplex()
    out = []
    for d in (delta, deltac):
        betas = [params.betas[0] + d] + list(params.betas[1:])
        out.append(PfqParams(betas=betas, alphas=params.alphas))
    return out


def contiguous_alpha_plus(
    params: PfqParams, z, shift: ShiftM, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """F(alpha1 + M) + F(alpha1 + conj(M)) against the double binomial sum."""
    if params.p < 1:
        raise InvalidParamsError("relation needs at least one numerator parameter")
    return _contiguous(
        params, z, shift, contiguous_alpha_plus_comp,
        lambda p, sh: _alpha_shift_params(p, sh, +1), tol,
    )


def contiguous_alpha_minus(
    params: PfqParams, z, shift: ShiftM, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """F(alpha1 - M) + F(alpha1 - conj(M)); alpha1 stays unshifted on the right."""
    if params.p < 1:
        raise InvalidParamsError("relation needs at least one numerator parameter")
    return _contiguous(
        params, z, shift, contiguous_alpha_minus_comp,
        lambda p, sh: _alpha_shift_params(p, sh, -1), tol,
    )


def contiguous_beta_minus(
    params: PfqParams, z, shift: ShiftM, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """F(beta1 - M) + F(beta1 - conj(M)) against the double binomial sum."""
    if params.q < 1:
        raise InvalidParamsError("relation needs at least one denominator parameter")
    return _contiguous(
        params, z, shift, contiguous_beta_minus_comp,
        lambda p, sh: _beta_shift_params(p, sh, -1), tol,
    )


def contiguous_beta_plus(
    params: PfqParams, z, shift: ShiftM, tol: float = DEFAULT_IDENTITY_TOL
) -> IdentityReport:
    """F(beta1 + M) + F(beta1 + conj(M)) = 2F - Z * (two ratio-weighted sums)."""
    if params.q < 1:
        raise InvalidParamsError("relation needs at least one denominator parameter")
    return _contiguous(
        params, z, shift, contiguous_beta_plus_comp,
        lambda p, sh: _beta_shift_params(p, sh, +1), tol,
    )


# ---------------------------------------------------------------------------
# Hypergeometric differential operator.
# ---------------------------------------------------------------------------


def _ode_component(a, b, z, count):
    """Residual and dropped-term bound of the theta-operator applied to
    the degree-`count` truncation, on the coefficient sequence."""
    c = coeff_table(
        np.array(a, dtype=np.complex128), np.array(b, dtype=np.complex128), count
    )
    # residual polynomial: d/dz prod(theta + b - 1) - prod(theta + a) on
    # sum c_n z^n; the interior coefficients cancel to rounding, the
    # degree-count coefficient survives as -prod(count + a) * c_count.
    res = 0.0 + 0j
    zpow = 1.0 + 0j
    for m in range(count):
        pb = m + 1.0 + 0j
        for x in b:
            pb *= x + m
        pa = 1.0 + 0j
        for x in a:
            pa *= x + m
        res += (pb * c[m + 1] - pa * c[m]) * zpow
        zpow *= z
    pa = 1.0 + 0j
    for x in a:
        pa *= x + count
    res -= pa * c[count] * zpow
    bound = abs(pa * c[count] * zpow)
    return abs(res), bound


def ode_residual(params: PfqParams, z: BiComplex, count: int) -> Hyperbolic:
    """Hyperbolic magnitude of the differential operator applied to the
    degree-`count` truncated series, via exact coefficient algebra."""
    resid, _ = ode_residual_with_bound(params, z, count)
    return resid


def ode_residual_with_bound(params: PfqParams, z: BiComplex, count: int):
    """(residual, dropped-term bound), both hyperbolic, componentwise."""
    if count < 8:
        raise ValueError("truncation degree too small to be meaningful")
    z = BiComplex.coerce(z)
    hyper.check_domain(params, z)
    (a1, b1), (a2, b2) = _components(params)
    r1, m1 = _ode_component(a1, b1, z.idem1, count)
    r2, m2 = _ode_component(a2, b2, z.idem2, count)
    return Hyperbolic.from_idempotent(r1, r2), Hyperbolic.from_idempotent(m1, m2)


def coefficient_recurrence_ulps(params: PfqParams, count: int) -> float:
    """Worst-case ulp distance in the coefficient law
    (n+1) * prod(n + betas) * c_{n+1} = prod(n + alphas) * c_n,
    the literally assertable form of the differential equation.

    Entries whose coefficients leave the normal float64 range (they
    grow factorially for p > q+1 and decay factorially for p <= q) are
    skipped; the law is asserted on the representable prefix.
    """
    worst = 0.0
    for s in (1, 2):
        a = params.comp_alphas(s)
        b = params.comp_betas(s)
        with np.errstate(over="ignore", invalid="ignore"):
            c = coeff_table(a, b, count)
        for m in range(count):
            mag = max(abs(c[m]), abs(c[m + 1]))
            if not (1e-280 < mag < 1e280):
                continue
            # the law solved for c_{m+1}; the product association
            # c_{m+1}*(m+1)*prod(b+m) == c_m*prod(a+m) costs extra
            # rounding steps and is not assertable at the 2-ulp level
            lhs = c[m + 1]
            rhs = c[m] * kernels.term_ratio(a, b, float(m))
            scale = max(abs(lhs), abs(rhs))
            if scale == 0.0 or not math.isfinite(scale):
                continue
            worst = max(worst, abs(lhs - rhs) / np.spacing(scale))
    return worst
