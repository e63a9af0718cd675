import numpy as np
import pytest

from bchyper import (
    BiComplex,
    CurveKind,
    DomainError,
    PfqParams,
    PreconditionError,
    ProductCurve,
    beta_product_check,
    double_integral,
    euler_integral,
    from_idempotent,
    laplace_integral,
)
from bchyper.gamma import complex_gamma
from bchyper.quad import jacobi_rule_01


class TestJacobiRule:
    def test_moments_match_beta_function(self):
        # integral of t^B (1-t)^A over [0,1] is a Beta value; complex exponents
        B = 0.7 + 0.25j - 1.0
        A = 0.9 - 0.15j - 1.0
        t, w = jacobi_rule_01(12, B, A)
        got = complex(np.sum(w))
        want = complex_gamma(B + 1) * complex_gamma(A + 1) / complex_gamma(A + B + 2)
        assert abs(got - want) < 1e-13 * abs(want)

    def test_polynomial_exactness(self):
        t, w = jacobi_rule_01(6, 0.3, -0.4)
        for k in range(8):  # exact through degree 2n-1
            got = complex(np.sum(w * t**k))
            want = complex_gamma(0.3 + k + 1) * complex_gamma(0.6) / complex_gamma(0.9 + k + 1)
            assert abs(got - want) < 1e-13 * abs(want), k

    def test_exponent_validation(self):
        with pytest.raises(PreconditionError):
            jacobi_rule_01(8, -1.2, 0.0)


class TestEuler:
    def test_confluent_example(self):
        # 1F1(1;3;Z) = 2 * integral of (1-t) e^(Zt)
        rep = euler_integral(PfqParams([1.0], [3.0]), from_idempotent(0.3, 0.6))
        assert rep.passed and rep.residual.max_comp() < 1e-8

    def test_gauss_example(self):
        rep = euler_integral(PfqParams([0.8, 1.1], [2.3]), BiComplex(0.2, 0.1))
        assert rep.passed and rep.residual.max_comp() < 1e-8

    def test_degenerate_complex_embedding(self):
        # zero i2-parts everywhere collapse both components to one integral
        rep = euler_integral(PfqParams([BiComplex(0.9)], [BiComplex(2.1)]), BiComplex(0.4))
        assert abs(rep.lhs.re2) < 1e-12
        assert abs(rep.rhs.re2) < 1e-12

    def test_positivity_precondition(self):
        with pytest.raises(PreconditionError):
            euler_integral(PfqParams([from_idempotent(-0.2, 1.0)], [2.0]), BiComplex(0.1))
        with pytest.raises(PreconditionError):
            # beta - alpha has a nonpositive real part component
            euler_integral(PfqParams([1.5], [1.2]), BiComplex(0.1))

    def test_needs_shape(self):
        with pytest.raises(PreconditionError):
            euler_integral(PfqParams([], []), BiComplex(0.1))

    def test_ball_requirement(self):
        with pytest.raises(DomainError):
            euler_integral(PfqParams([1.0], [3.0]), from_idempotent(1.4, 0.2))

    def test_node_doubling_converges(self):
        params = PfqParams([BiComplex(0.8), BiComplex(1.4)], [BiComplex(2.1)])
        z = from_idempotent(0.93, 0.88)
        errs = []
        for n in (16, 32, 64):
            rep = euler_integral(params, z, ProductCurve(CurveKind.UNIT_INTERVAL, n))
            errs.append(rep.residual.max_comp())
        floor = 5e-12
        for lo, hi in zip(errs, errs[1:]):
            assert hi <= lo / 4.0 or lo <= floor, errs


class TestLaplace:
    def test_binomial_example(self):
        # (1/Gamma(3)) * integral t^2 e^((Z-1)t) = (1-Z)^(-3)
        rep = laplace_integral(3.0, PfqParams([], []), from_idempotent(0.2, 0.5))
        assert rep.passed and rep.residual.max_comp() < 1e-8

    def test_geometric_example(self):
        rep = laplace_integral(1.0, PfqParams([], []), BiComplex(0.35, 0.1))
        assert rep.passed and rep.residual.max_comp() < 1e-10

    def test_confluent_inner(self):
        rep = laplace_integral(
            from_idempotent(2.5, 1.5), PfqParams([1.1], [1.8]), BiComplex(0.3, 0.05)
        )
        assert rep.passed and rep.residual.max_comp() < 1e-7

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            laplace_integral(1.0, PfqParams([1.0, 2.0], [1.5]), BiComplex(0.1))
        with pytest.raises(PreconditionError):
            laplace_integral(from_idempotent(-0.5, 1.0), PfqParams([], []), BiComplex(0.1))

    def test_node_doubling_converges(self):
        v = from_idempotent(0.6, 1.3)
        params = PfqParams([BiComplex(1.1)], [BiComplex(1.6)])
        z = from_idempotent(0.72, 0.65)
        errs = []
        for n in (16, 32, 64):
            rep = laplace_integral(v, params, z, ProductCurve(CurveKind.HALF_LINE, n))
            errs.append(rep.residual.max_comp())
        floor = 5e-12
        for lo, hi in zip(errs, errs[1:]):
            assert hi <= lo / 4.0 or lo <= floor, errs


class TestDouble:
    def test_exponential_collapse(self):
        # p = q = 1 with alpha = beta: the inner function collapses to exp
        rep = double_integral(
            1.5, 1.5, PfqParams([1.3], [1.3]), from_idempotent(0.25, 0.4),
            ProductCurve(CurveKind.UNIT_INTERVAL, 64),
        )
        assert rep.passed and rep.residual.max_comp() < 1e-7

    def test_zero_argument_is_beta_product(self):
        m = from_idempotent(1.4, 0.9)
        n = BiComplex(1.1, 0.2)
        rep = double_integral(m, n, PfqParams([0.9], [1.7]), BiComplex(0.0))
        from bchyper.gamma import bc_gamma

        want = bc_gamma(m) * bc_gamma(n) * (bc_gamma(m + n + 1) ** -1)
        assert abs(rep.rhs.idem1 - want.idem1) < 1e-12 * abs(want.idem1)
        assert rep.passed

    def test_gauss_inner_with_complex_exponents(self):
        rep = double_integral(
            BiComplex(1.2, 0.1), 2.0, PfqParams([0.7, 1.2], [1.9]), BiComplex(0.1, 0.05),
            ProductCurve(CurveKind.UNIT_INTERVAL, 128),
        )
        assert rep.passed and rep.residual.max_comp() < 1e-6

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            double_integral(from_idempotent(-1.0, 1.0), 1.0, PfqParams([], []), BiComplex(0.1))

    def test_node_doubling_converges(self):
        m = from_idempotent(1.2, 0.9)
        n = from_idempotent(0.8, 1.5)
        params = PfqParams([BiComplex(0.9), BiComplex(1.7)], [BiComplex(2.2)])
        z = from_idempotent(0.9, 0.85)
        errs = []
        for nn in (16, 32, 64):
            rep = double_integral(m, n, params, z, ProductCurve(CurveKind.UNIT_INTERVAL, nn))
            errs.append(rep.residual.max_comp())
        floor = 5e-12
        for lo, hi in zip(errs, errs[1:]):
            assert hi <= lo / 4.0 or lo <= floor, errs


class TestComponentwiseFactorization:
    def test_integral_splits_over_basis(self):
        # the bicomplex curve integral is e1*(C1 integral) + e2*(C2 integral):
        # embedding one component diagonally reproduces that component
        params = PfqParams([from_idempotent(0.9, 1.3)], [from_idempotent(2.4, 2.9)])
        z = from_idempotent(0.3 + 0.2j, 0.5 - 0.1j)
        full = euler_integral(params, z)
        diag_params = PfqParams(
            [BiComplex(params.alphas[0].idem1)], [BiComplex(params.betas[0].idem1)]
        )
        diag = euler_integral(diag_params, BiComplex(z.idem1))
        assert abs(full.lhs.idem1 - diag.lhs.idem1) < 1e-13
        assert abs(full.rhs.idem1 - diag.rhs.idem1) < 1e-13


class TestBetaProduct:
    def test_moment_identity(self, rng):
        for k in range(0, 11, 2):
            m = from_idempotent(
                complex(rng.uniform(0.4, 2.0), rng.uniform(-0.3, 0.3)),
                complex(rng.uniform(0.4, 2.0), rng.uniform(-0.3, 0.3)),
            )
            n = from_idempotent(
                complex(rng.uniform(0.4, 2.0), rng.uniform(-0.3, 0.3)),
                complex(rng.uniform(0.4, 2.0), rng.uniform(-0.3, 0.3)),
            )
            rep = beta_product_check(m, n, k)
            assert rep.passed, (k, rep.residual)


class TestCurve:
    def test_node_floor(self):
        with pytest.raises(ValueError):
            ProductCurve(CurveKind.UNIT_INTERVAL, 8)

    def test_kind_mismatch(self):
        with pytest.raises(PreconditionError):
            euler_integral(
                PfqParams([1.0], [3.0]), BiComplex(0.1),
                ProductCurve(CurveKind.HALF_LINE, 64),
            )
