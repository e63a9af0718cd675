"""Hot series kernels: numba-jitted with a pure-numpy fallback.

The classical one-component hypergeometric sum is the inner loop of
everything in this package (function evaluation, identity suites,
quadrature integrands), so it is compiled with numba when available.
Set the environment variable BCHYPER_NO_NUMBA=1 to force the pure
Python/numpy path; ``benchmarks/bench_kernels.py`` compares the two.

All kernels take the component parameter vectors as 1-D complex128
arrays (length 0 is fine) and a single complex argument, and they all
share one term recurrence:

    t_0 = 1,   t_{n+1} = t_n * z * prod(a_i + n) / ((n+1) * prod(b_j + n))

Status codes: 0 = stop rule met, 1 = cap reached.
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("BCHYPER_NO_NUMBA", "").strip() not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

STATUS_OK = 0
STATUS_CAP = 1


def _py_series_sum(alphas, betas, z, tol, cap, min_terms):
    """Truncated sum of the component series at argument z.

    Stops once three consecutive terms fall below tol * |partial sum|
    and at least min_terms terms have been added (a single small term
    can be an accidental zero, not convergence).  Returns
    (value, terms_used, tail_estimate, status); the tail is the
    geometric majorant |t_N| * r / (1 - r) built from the next term
    ratio r.
    """
    p = alphas.shape[0]
    q = betas.shape[0]
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    below = 0
    n = 0
    while n < cap:
        num = 1.0 + 0.0j
        for i in range(p):
            num = num * (alphas[i] + n)
        den = n + 1.0 + 0.0j
        for j in range(q):
            den = den * (betas[j] + n)
        term = term * (z * (num / den))
        total = total + term
        n += 1
        if abs(term) <= tol * abs(total):
            below += 1
            if below >= 3 and n >= min_terms:
                rnum = 1.0
                for i in range(p):
                    rnum = rnum * abs(alphas[i] + n)
                rden = n + 1.0
                for j in range(q):
                    rden = rden * abs(betas[j] + n)
                r = abs(z) * rnum / rden
                if r < 1.0:
                    tail = abs(term) * r / (1.0 - r)
                else:
                    tail = np.inf
                return total, n + 1, tail, STATUS_OK
        else:
            below = 0
    return total, n + 1, np.inf, STATUS_CAP


def _py_series_sum_terminating(alphas, betas, z, last_n):
    """Exact sum of a terminating series: terms n = 0 .. last_n inclusive."""
    p = alphas.shape[0]
    q = betas.shape[0]
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(last_n):
        num = 1.0 + 0.0j
        for i in range(p):
            num = num * (alphas[i] + n)
        den = n + 1.0 + 0.0j
        for j in range(q):
            den = den * (betas[j] + n)
        term = term * (z * (num / den))
        total = total + term
    return total


def _py_coeff_table(alphas, betas, count):
    """Series coefficients c_0 .. c_count via the term-ratio recurrence."""
    p = alphas.shape[0]
    q = betas.shape[0]
    out = np.empty(count + 1, dtype=np.complex128)
    c = 1.0 + 0.0j
    out[0] = c
    for n in range(count):
        num = 1.0 + 0.0j
        for i in range(p):
            num = num * (alphas[i] + n)
        den = n + 1.0 + 0.0j
        for j in range(q):
            den = den * (betas[j] + n)
        c = c * (num / den)
        out[n + 1] = c
    return out


def _py_pochhammer(a, n):
    """Rising factorial (a)_n by the product recurrence."""
    out = 1.0 + 0.0j
    for k in range(n):
        out = out * (a + k)
    return out


def _py_term_ratio(alphas, betas, n):
    """One-step coefficient ratio c_{n+1} / c_n = prod(a+n) / ((n+1) prod(b+n)).

    Exposed so recurrence checks use the same arithmetic as the table
    builder (compiled and interpreted complex division can differ by
    an ulp or two).
    """
    num = 1.0 + 0.0j
    for i in range(alphas.shape[0]):
        num = num * (alphas[i] + n)
    den = n + 1.0 + 0.0j
    for j in range(betas.shape[0]):
        den = den * (betas[j] + n)
    return num / den


if USE_NUMBA:
    series_sum = njit(cache=False)(_py_series_sum)
    series_sum_terminating = njit(cache=False)(_py_series_sum_terminating)
    coeff_table = njit(cache=False)(_py_coeff_table)
    pochhammer = njit(cache=False)(_py_pochhammer)
    term_ratio = njit(cache=False)(_py_term_ratio)

    @njit(cache=False)
    def _jit_series_sum_many(alphas, betas, zs, tol, cap, min_terms):
        m = zs.shape[0]
        values = np.empty(m, dtype=np.complex128)
        counts = np.empty(m, dtype=np.int64)
        tails = np.empty(m, dtype=np.float64)
        statuses = np.empty(m, dtype=np.int64)
        for idx in range(m):
            v, n, t, s = series_sum(alphas, betas, zs[idx], tol, cap, min_terms)
            values[idx] = v
            counts[idx] = n
            tails[idx] = t
            statuses[idx] = s
        return values, counts, tails, statuses

    def series_sum_many(alphas, betas, zs, tol, cap, min_terms=8):
        zs = np.ascontiguousarray(zs, dtype=np.complex128)
        return _jit_series_sum_many(alphas, betas, zs, tol, cap, min_terms)

else:
    series_sum = _py_series_sum
    series_sum_terminating = _py_series_sum_terminating
    coeff_table = _py_coeff_table
    pochhammer = _py_pochhammer
    term_ratio = _py_term_ratio

    def series_sum_many(alphas, betas, zs, tol, cap, min_terms=8):
        return numpy_series_sum_many(alphas, betas, zs, tol, cap, min_terms)


def numpy_series_sum_many(alphas, betas, zs, tol, cap, min_terms=8):
    """Vectorized numpy fallback over an array of arguments.

    Elementwise identical arithmetic to the scalar kernel: each element
    follows the same recurrence and stop rule, numpy just advances them
    in lockstep with a mask for finished entries.  Always importable so
    the benchmark can compare it against the compiled path.
    """
    zs = np.ascontiguousarray(zs, dtype=np.complex128)
    m = zs.shape[0]
    total = np.ones(m, dtype=np.complex128)
    term = np.ones(m, dtype=np.complex128)
    below = np.zeros(m, dtype=np.int64)
    counts = np.full(m, 0, dtype=np.int64)
    tails = np.full(m, np.inf, dtype=np.float64)
    statuses = np.full(m, STATUS_CAP, dtype=np.int64)
    active = np.ones(m, dtype=bool)
    n = 0
    while n < cap and active.any():
        num = 1.0 + 0.0j
        for a in alphas:
            num = num * (a + n)
        den = n + 1.0 + 0.0j
        for b in betas:
            den = den * (b + n)
        step = term * (zs * (num / den))
        term = np.where(active, step, term)
        total = np.where(active, total + step, total)
        n += 1
        small = np.abs(term) <= tol * np.abs(total)
        below = np.where(active & small, below + 1, np.where(active, 0, below))
        done = active & (below >= 3) & (n >= min_terms)
        if done.any():
            rnum = 1.0
            for a in alphas:
                rnum = rnum * abs(a + n)
            rden = n + 1.0
            for b in betas:
                rden = rden * abs(b + n)
            r = np.abs(zs) * (rnum / rden)
            tail = np.where(r < 1.0, np.abs(term) * r / (1.0 - r), np.inf)
            tails = np.where(done, tail, tails)
            counts = np.where(done, n + 1, counts)
            statuses = np.where(done, STATUS_OK, statuses)
            active = active & ~done
    counts = np.where(statuses == STATUS_CAP, n + 1, counts)
    return total, counts, tails, statuses


def window_probe(alphas, betas, z, cap, window):
    """Partial-sum Cauchy probe over the final `window` terms of `cap` terms.

    Fully vectorized over the term index (cumprod of the term ratios),
    so it stays cheap even at cap = 20000.  Returns
    (cauchy_delta, max_term_abs_in_window, finite) where cauchy_delta =
    max_j |S_cap - S_j| over the window.  Nonfinite growth reports
    (inf, inf, False).
    """
    n = np.arange(cap, dtype=np.float64)
    num = np.ones(cap, dtype=np.complex128)
    for a in alphas:
        num = num * (a + n)
    den = (n + 1.0).astype(np.complex128)
    for b in betas:
        den = den * (b + n)
    with np.errstate(over="ignore", invalid="ignore"):
        ratios = z * num / den
        terms = np.cumprod(ratios)
        if not np.isfinite(terms[-1]):
            return np.inf, np.inf, False
        sums = 1.0 + np.cumsum(terms)
    w = min(window, cap - 1)
    delta = float(np.max(np.abs(sums[-1] - sums[-w - 1 : -1])))
    tmax = float(np.max(np.abs(terms[-w:])))
    return delta, tmax, True
