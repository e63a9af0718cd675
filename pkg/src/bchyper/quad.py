"""Componentwise quadrature for the three integral representations.

All curves are the paper-style product curves: each idempotent
component integrates over the real segment [0,1] or the half line.
Endpoint factors t^(a-1), (1-t)^(c-a-1) carry complex exponents, so
plain real-weight Gauss-Jacobi with the phase left in the integrand
would only converge algebraically.  Instead the full complex-exponent
weight is absorbed: the Jacobi/Laguerre recurrence coefficients are
rational in the exponents and continue analytically, and Golub-Welsch
on the complex-symmetric tridiagonal gives nodes and weights that are
exact for polynomials of degree 2n-1 against the complex weight.  The
half line is split at t = 1: complex-exponent Jacobi on [0,1] captures
the t^(v-1) endpoint, ordinary Gauss-Laguerre handles the smooth tail.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
import scipy.special
from scipy.special import gamma as _cgamma

from . import hyper, kernels
from .errors import DomainError, NoConvergenceError, PreconditionError
from .gamma import complex_pochhammer
from .hyper import DEFAULT_CAP, DEFAULT_TOL, PfqParams
from .identities import IdentityReport, make_report
from .numbers import BiComplex

DEFAULT_NODES = 64
TAIL_CUTOFF = 1e-16


class CurveKind(enum.Enum):
    UNIT_INTERVAL = "unit-interval"
    HALF_LINE = "half-line"


@dataclass(frozen=True)
class ProductCurve:
    """Integration curve C(t) = (C1(t1), C2(t2)), fixed to real paths."""

    kind: CurveKind
    nodes: int = DEFAULT_NODES

    def __post_init__(self):
        if self.nodes < 16:
            raise ValueError("quadrature needs at least 16 nodes")


def jacobi_rule_01(n: int, t_exp, one_minus_t_exp):
    """Nodes and weights for integral_0^1 t^B (1-t)^A g(t) dt.

    B = t_exp and A = one_minus_t_exp may be complex with real part
    > -1.  Returns complex nodes (near [0,1]) and weights.
    """
    alpha = complex(one_minus_t_exp)
    beta = complex(t_exp)
    if alpha.real <= -1.0 or beta.real <= -1.0:
        raise PreconditionError("weight exponents must have real part > -1")
    ab = alpha + beta
    k = np.arange(n, dtype=np.float64)
    diag = np.empty(n, dtype=np.complex128)
    diag[0] = (beta - alpha) / (ab + 2.0)
    kk = k[1:]
    diag[1:] = (beta**2 - alpha**2) / ((2 * kk + ab) * (2 * kk + ab + 2.0))
    mu0 = 2.0 ** (ab + 1.0) * _cgamma(alpha + 1.0) * _cgamma(beta + 1.0) / _cgamma(ab + 2.0)
    off = np.empty(n - 1, dtype=np.complex128)
    if n > 1:
        off[0] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) ** 2 * (3.0 + ab))
    kk = k[2:]
    off[1:] = (
        4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab)
        / ((2 * kk + ab) ** 2 * (2 * kk + ab + 1.0) * (2 * kk + ab - 1.0))
    )
    sb = np.sqrt(off)
    T = np.diag(diag) + np.diag(sb, 1) + np.diag(sb, -1)
    vals, vecs = np.linalg.eig(T)
    weights = np.empty(n, dtype=np.complex128)
    for i in range(n):
        v = vecs[:, i]
        weights[i] = mu0 * v[0] ** 2 / (v @ v)
    order = np.argsort(vals.real)
    x = vals[order]
    weights = weights[order]
    t = (1.0 + x) / 2.0
    weights = weights * 2.0 ** (-(ab + 1.0))
    return t, weights


def _positive_components(value: BiComplex, name: str):
    value = BiComplex.coerce(value)
    for label, comp in (("1", value.idem1), ("2", value.idem2)):
        if comp.real <= 0.0:
            raise PreconditionError(
                f"{name} must have positive real part in both idempotent"
                f" components, got {comp} in component {label}"
            )


def _require_ball(z: BiComplex):
    z = BiComplex.coerce(z)
    for label, comp in (("1", z.idem1), ("2", z.idem2)):
        if abs(comp) >= 1.0:
            raise DomainError(f"argument component {label} has modulus {abs(comp)} >= 1")


def _inner_values(comp_alphas, comp_betas, args):
    a = np.ascontiguousarray(comp_alphas, dtype=np.complex128)
    b = np.ascontiguousarray(comp_betas, dtype=np.complex128)
    k = hyper.termination_index(a)
    if k is not None:
        return np.array(
            [kernels.series_sum_terminating(a, b, z, k) for z in args],
            dtype=np.complex128,
        )
    values, _, _, statuses = kernels.series_sum_many(
        a, b, np.asarray(args, dtype=np.complex128), DEFAULT_TOL, DEFAULT_CAP
    )
    if np.any(statuses != kernels.STATUS_OK):
        raise NoConvergenceError("inner series hit the term cap inside the quadrature")
    return values


def euler_integral(
    params: PfqParams,
    z: BiComplex,
    curve: ProductCurve | None = None,
    tol: float = 1e-7,
) -> IdentityReport:
    """Beta-kernel representation against the series, componentwise.

    Needs p >= 1, q >= 1, hyperbolic positivity of alpha_1 and of
    beta_1 - alpha_1 (positive real part in both idempotent
    components), and the argument inside the unit ball.
    """
    if curve is None:
        curve = ProductCurve(CurveKind.UNIT_INTERVAL)
    if curve.kind is not CurveKind.UNIT_INTERVAL:
        raise PreconditionError("beta-kernel representation integrates over [0,1]")
    if params.p < 1 or params.q < 1:
        raise PreconditionError("representation needs at least one alpha and one beta")
    a1 = params.alphas[0]
    b1 = params.betas[0]
    _positive_components(a1, "alpha[0]")
    _positive_components(b1 - a1, "beta[0] - alpha[0]")
    z = BiComplex.coerce(z)
    _require_ball(z)
    sides = []
    for s, zc in ((1, z.idem1), (2, z.idem2)):
        alphas = params.comp_alphas(s)
        betas = params.comp_betas(s)
        t, w = jacobi_rule_01(curve.nodes, alphas[0] - 1.0, betas[0] - alphas[0] - 1.0)
        inner = _inner_values(alphas[1:], betas[1:], zc * t)
        integral = np.sum(w * inner)
        pre = _cgamma(betas[0]) / (_cgamma(alphas[0]) * _cgamma(betas[0] - alphas[0]))
        lhs = complex(pre * integral)
        rhs, _, _ = hyper.component_series(alphas, betas, zc)
        sides.append((lhs, rhs))
    return make_report(sides[0][0], sides[0][1], sides[1][0], sides[1][1], tol)


def laplace_integral(
    v,
    params: PfqParams,
    z: BiComplex,
    curve: ProductCurve | None = None,
    tol: float = 1e-7,
) -> IdentityReport:
    """Exponential-kernel half-line representation against the series
    with v prepended to the numerator parameters.

    Needs p <= q for the inner function and positive real part of both
    idempotent components of v.
    """
    if curve is None:
        curve = ProductCurve(CurveKind.HALF_LINE)
    if curve.kind is not CurveKind.HALF_LINE:
        raise PreconditionError("exponential-kernel representation integrates over [0,inf)")
    if params.p > params.q:
        raise PreconditionError("inner function must have p <= q")
    v = BiComplex.coerce(v)
    _positive_components(v, "v")
    z = BiComplex.coerce(z)
    _require_ball(z)
    n = curve.nodes
    lag_t, lag_w = scipy.special.roots_laguerre(n)
    sides = []
    for s, zc in ((1, z.idem1), (2, z.idem2)):
        alphas = params.comp_alphas(s)
        betas = params.comp_betas(s)
        vc = v.idem1 if s == 1 else v.idem2
        # [0, 1]: the complex-exponent endpoint is part of the weight.
        t1, w1 = jacobi_rule_01(n, vc - 1.0, 0.0)
        inner1 = _inner_values(alphas, betas, zc * t1)
        piece1 = np.sum(w1 * np.exp(-t1) * inner1)
        # [1, inf): smooth integrand, plain Gauss-Laguerre after t = 1 + u,
        # truncated once the weighted terms stop mattering.
        piece2 = 0.0 + 0.0j
        for u, wl in zip(lag_t, lag_w):
            t = 1.0 + u
            if zc.real * t > 700.0:
                break
            inner, _, _ = hyper.component_series(alphas, betas, zc * t)
            term = wl * t ** (vc - 1.0) * inner
            piece2 += term
            if abs(term) < TAIL_CUTOFF * max(1.0, abs(piece2)):
                break
        piece2 *= math.exp(-1.0)
        lhs = complex((piece1 + piece2) / _cgamma(vc))
        rhs, _, _ = hyper.component_series(
            np.concatenate(([vc], alphas)), betas, zc
        )
        sides.append((lhs, rhs))
    return make_report(sides[0][0], sides[0][1], sides[1][0], sides[1][1], tol)


def double_integral(
    m,
    n,
    params: PfqParams,
    z: BiComplex,
    curve: ProductCurve | None = None,
    tol: float = 1e-6,
) -> IdentityReport:
    """Tensor-product representation over the unit square against the
    series with 1 appended to the alphas and m+n+1 to the betas.

    Needs positive real part of both idempotent components of m and n.
    """
    if curve is None:
        curve = ProductCurve(CurveKind.UNIT_INTERVAL)
    if curve.kind is not CurveKind.UNIT_INTERVAL:
        raise PreconditionError("double representation integrates over [0,1]^2")
    m = BiComplex.coerce(m)
    n = BiComplex.coerce(n)
    _positive_components(m, "m")
    _positive_components(n, "n")
    z = BiComplex.coerce(z)
    _require_ball(z)
    nn = curve.nodes
    sides = []
    for s, zc in ((1, z.idem1), (2, z.idem2)):
        alphas = params.comp_alphas(s)
        betas = params.comp_betas(s)
        mc = m.idem1 if s == 1 else m.idem2
        nc = n.idem1 if s == 1 else n.idem2
        tu, wu = jacobi_rule_01(nn, mc - 1.0, nc)  # weight u^(m-1) (1-u)^n
        tv, wv = jacobi_rule_01(nn, nc - 1.0, 0.0)  # weight v^(n-1)
        args = ((1.0 - tu)[:, None] * (1.0 - tv)[None, :]) * zc
        inner = _inner_values(alphas, betas, args.ravel()).reshape(nn, nn)
        integral = wu @ inner @ wv
        lhs = complex(integral)
        pre = _cgamma(mc) * _cgamma(nc) / _cgamma(mc + nc + 1.0)
        rhs_series, _, _ = hyper.component_series(
            np.concatenate((alphas, [1.0 + 0j])),
            np.concatenate((betas, [mc + nc + 1.0])),
            zc,
        )
        rhs = complex(pre * rhs_series)
        sides.append((lhs, rhs))
    return make_report(sides[0][0], sides[0][1], sides[1][0], sides[1][1], tol)


def beta_product_check(m, n, k: int, nodes: int = DEFAULT_NODES, tol: float = 1e-10) -> IdentityReport:
    """Gamma-ratio moment identity behind the double representation:
    direct quadrature of the two beta factors against the closed form."""
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    m = BiComplex.coerce(m)
    n = BiComplex.coerce(n)
    _positive_components(m, "m")
    _positive_components(n, "n")
    sides = []
    for s in (1, 2):
        mc = m.idem1 if s == 1 else m.idem2
        nc = n.idem1 if s == 1 else n.idem2
        tu, wu = jacobi_rule_01(nodes, mc - 1.0, nc + k)
        tv, wv = jacobi_rule_01(nodes, nc - 1.0, float(k))
        lhs = complex(np.sum(wu) * np.sum(wv))
        rhs = complex(
            _cgamma(mc) * _cgamma(nc) * complex_pochhammer(1.0, k)
            / (_cgamma(mc + nc + 1.0) * complex_pochhammer(mc + nc + 1.0, k))
        )
        sides.append((lhs, rhs))
    return make_report(sides[0][0], sides[0][1], sides[1][0], sides[1][1], tol)
