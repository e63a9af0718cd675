import numpy as np
import pytest

from bchyper import BiComplex


def comp_rel_err(got: complex, want: complex) -> float:
    return abs(got - want) / max(1.0, abs(got), abs(want))


def assert_bc_close(got: BiComplex, want: BiComplex, tol: float, msg: str = ""):
    got = BiComplex.coerce(got)
    want = BiComplex.coerce(want)
    r1 = comp_rel_err(got.idem1, want.idem1)
    r2 = comp_rel_err(got.idem2, want.idem2)
    assert r1 <= tol and r2 <= tol, (
        f"{msg} residuals ({r1:.3e}, {r2:.3e}) exceed {tol:.1e};"
        f" got {got}, want {want}"
    )


def ulps(got, want) -> float:
    scale = max(abs(got), abs(want))
    if scale == 0.0:
        return 0.0
    return abs(got - want) / np.spacing(scale)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
