"""The compiled and pure-Python kernels must agree bit for bit."""

from hypothesis import given, settings, strategies as st
import pytest

from detalign import _core_py, _kernels

pytestmark = pytest.mark.skipif("cython" not in _kernels.available_backends(), reason="extension not built")

if "cython" in _kernels.available_backends():
    from detalign import _core


def flat_poly(K):
    term = st.tuples(st.integers(0, 10**9), st.lists(st.integers(0, 9), min_size=K, max_size=K))
    return st.lists(term, max_size=5)


@given(st.integers(1, 3), st.data())
@settings(max_examples=100, deadline=None)
def test_eval_grid_agrees(K, data):
    q = data.draw(st.sampled_from([2, 3, 5, 7, 11]))
    terms = data.draw(flat_poly(K))
    coeffs = [c % q for c, _ in terms]
    exps = [e for _, ex in terms for e in ex]
    assert _core.eval_grid_mod(coeffs, exps, K, q) == _core_py.eval_grid_mod(coeffs, exps, K, q)


@given(st.integers(1, 4), st.data())
@settings(max_examples=100, deadline=None)
def test_eval_points_agrees_large_modulus(K, data):
    q = data.draw(st.sampled_from([53, 10007, 2**31 - 1, 2**61 - 1, 2**63 - 25]))
    terms = data.draw(flat_poly(K))
    coeffs = [c % q for c, _ in terms]
    exps = [e for _, ex in terms for e in ex]
    pts = data.draw(st.lists(st.integers(0, q - 1), min_size=K, max_size=6 * K))
    pts = pts[: len(pts) // K * K]
    assert _core.eval_points_mod(coeffs, exps, K, pts, q) == _core_py.eval_points_mod(coeffs, exps, K, pts, q)


@given(st.integers(0, 2**64 - 1))
def test_is_prime_agrees(n):
    assert _core.is_prime_u64(n) == _core_py.is_prime_u64(n)


@pytest.mark.parametrize("q, K", [(3, 2), (5, 3), (7, 3), (3, 4)])
def test_reconstruction_violations_agree(q, K):
    import random

    rng = random.Random(q * 10 + K)
    for _ in range(20):
        h = [rng.randrange(q) for _ in range(q**K)]
        r = [rng.randrange(q) for _ in range(q**K)]
        for j in range(1, K):
            assert _core.reconstruction_violations(h, r, q, K, j) == _core_py.reconstruction_violations(h, r, q, K, j)


def test_use_backend_round_trip():
    prev = _kernels.use_backend("python")
    assert _kernels.backend_name() == "python"
    _kernels.use_backend("cython")
    assert _kernels.backend_name() == "cython"
    _kernels.use_backend(prev)
    with pytest.raises(ValueError):
        _kernels.use_backend("fortran")
