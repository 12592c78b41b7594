"""Kernel backend selection.

The compiled ``_core`` extension is used when it was built; otherwise the
pure-Python ``_core_py`` twin. Both return identical results. ``use_backend``
switches explicitly (tests and the benchmark compare both).
"""

from . import _core_py

try:
    from . import _core as _compiled
except ImportError:  # extension not built
    _compiled = None

# kernels keep 64-bit residues; larger moduli always take the Python path
MAX_KERNEL_MODULUS = 2**63

_active = _compiled if _compiled is not None else _core_py


def available_backends():
    return ["cython", "python"] if _compiled is not None else ["python"]


def backend_name():
    return "cython" if _active is _compiled and _compiled is not None else "python"


def use_backend(name):
    """Select ``"cython"`` or ``"python"``; returns the previous backend name."""
    global _active
    previous = backend_name()
    if name == "python":
        _active = _core_py
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled extension detalign._core is not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def is_prime_u64(n):
    return _active.is_prime_u64(n)


def eval_points_mod(coeffs, exps, K, points, q):
    if q >= MAX_KERNEL_MODULUS:
        return _core_py.eval_points_mod(coeffs, exps, K, points, q)
    return _active.eval_points_mod(coeffs, exps, K, points, q)


def eval_grid_mod(coeffs, exps, K, q):
    return _active.eval_grid_mod(coeffs, exps, K, q)


def reconstruction_violations(h_vals, r_vals, q, K, j):
    return _active.reconstruction_violations(h_vals, r_vals, q, K, j)
