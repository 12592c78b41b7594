"""Exact integer and modular arithmetic used to derive scheme parameters.

Wherever only existence is guaranteed (Dirichlet primes, Bertrand primes,
primitive roots, CRT solutions) the *smallest* witness is returned so that
derived parameters are reproducible.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from . import _kernels
from .errors import (
    AmbiguousSolution,
    EmptyInterval,
    InvalidParameter,
    NoSolution,
    SearchExhausted,
    ZeroDivisor,
)

DEFAULT_SEARCH_CEILING = 10**7
# discrete logs over ranges at most this size are solved by direct scan
BSGS_THRESHOLD = 64

__all__ = [
    "ProgressionSpec",
    "SqrtResult",
    "is_prime",
    "mod_inv",
    "odd_part",
    "crt_offset",
    "prime_in_progression",
    "prime_in_interval",
    "prime_factors",
    "multiplicative_order",
    "primitive_root",
    "discrete_log_bounded",
    "sqrt_mod",
    "primes_upto",
]


@dataclass(frozen=True)
class ProgressionSpec:
    """Primes of the form ``step*n + offset`` with ``n >= 1``, above ``min_exclusive``."""

    step: int
    offset: int
    min_exclusive: int = 0

    def __post_init__(self):
        if self.step < 1 or self.offset < 1:
            raise InvalidParameter("step and offset must be positive")
        if gcd(self.step, self.offset) != 1:
            raise InvalidParameter(
                f"gcd(step={self.step}, offset={self.offset}) != 1; progression holds at most one prime"
            )


@dataclass(frozen=True)
class SqrtResult:
    roots: tuple = ()

    def __bool__(self):
        return bool(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 2**64."""
    if n < 0 or n >= 2**64:
        raise InvalidParameter("is_prime is defined for 0 <= n < 2**64")
    return _kernels.is_prime_u64(n)


def mod_inv(a: int, q: int) -> int:
    if a % q == 0:
        raise ZeroDivisor(f"{a} has no inverse modulo {q}")
    return pow(a, -1, q)


def odd_part(d: int):
    """Split ``d = 2**t * d0`` with d0 odd; returns ``(t, d0)``."""
    if d < 1:
        raise InvalidParameter("odd_part requires d >= 1")
    t = (d & -d).bit_length() - 1
    return t, d >> t


def crt_offset(d0: int) -> int:
    """Smallest positive c with c = 3 (mod 4) and c = 1 (mod d0)."""
    if d0 < 1 or d0 % 2 == 0:
        raise InvalidParameter("crt_offset requires an odd positive d0")
    c = 3
    while c % d0 != 1 % d0:
        c += 4
    return c


def prime_in_progression(spec: ProgressionSpec, ceiling: int = DEFAULT_SEARCH_CEILING) -> int:
    n = max(1, (spec.min_exclusive - spec.offset) // spec.step + 1)
    for _ in range(ceiling):
        p = spec.step * n + spec.offset
        if is_prime(p):
            return p
        n += 1
    raise SearchExhausted(
        f"no prime {spec.step}n+{spec.offset} > {spec.min_exclusive} within {ceiling} candidates"
    )


def prime_in_interval(lo_exclusive: int, hi_exclusive: int, ceiling: int = DEFAULT_SEARCH_CEILING) -> int:
    """Smallest prime strictly between the two bounds."""
    if lo_exclusive < 1:
        raise InvalidParameter("lo_exclusive must be >= 1")
    n = lo_exclusive + 1
    scanned = 0
    while n < hi_exclusive:
        if is_prime(n):
            return n
        n += 1
        scanned += 1
        if scanned >= ceiling:
            raise SearchExhausted(f"no prime found in ({lo_exclusive}, {n}) within {ceiling} candidates")
    raise EmptyInterval(f"no prime in ({lo_exclusive}, {hi_exclusive})")


def prime_factors(n: int):
    """Distinct prime factors of n by trial division (n is small here)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a modulo prime p."""
    if a % p == 0:
        raise ZeroDivisor(f"{a} is not a unit modulo {p}")
    order = p - 1
    for r in prime_factors(p - 1):
        while order % r == 0 and pow(a, order // r, p) == 1:
            order //= r
    return order


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    factors = prime_factors(p - 1)
    for e in range(2, p):
        if all(pow(e, (p - 1) // r, p) != 1 for r in factors):
            return e
    raise AssertionError("unreachable: every prime has a primitive root")


def _bsgs_first(base, y, p, lo, hi):
    """Smallest u in [lo, hi] with base**u = y (mod p), or None."""
    span = hi - lo + 1
    m = isqrt(span - 1) + 1
    # baby steps: y * base**(-lo) * base**(-j) ... solved as base**(lo + i*m + j) = y
    target = y * pow(pow(base, lo, p), -1, p) % p
    table = {}
    cur = 1
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * base % p
    giant = pow(pow(base, m, p), -1, p)
    gamma = target
    for i in range(m + 1):
        j = table.get(gamma)
        if j is not None:
            u = lo + i * m + j
            if u <= hi:
                return u
            return None
        gamma = gamma * giant % p
    return None


def discrete_log_bounded(e: int, y: int, p: int, max_u: int) -> int:
    """The unique u in ``1..max_u`` with ``e**u = y (mod p)``.

    ``e`` need not be primitive; when several exponents in range match,
    :class:`AmbiguousSolution` lists the first two.
    """
    if max_u < 1:
        raise InvalidParameter("max_u must be >= 1")
    e %= p
    y %= p
    if e == 0:
        raise ZeroDivisor("base is not a unit")
    if y == 0:
        raise NoSolution(f"{y} is not a power of {e} modulo {p}")
    if max_u <= BSGS_THRESHOLD:
        hits = []
        cur = 1
        for u in range(1, max_u + 1):
            cur = cur * e % p
            if cur == y:
                hits.append(u)
                if len(hits) == 2:
                    break
    else:
        hits = []
        u0 = _bsgs_first(e, y, p, 1, max_u)
        if u0 is not None:
            hits.append(u0)
            if u0 < max_u:
                # a second solution exists iff e has order <= max_u - u0
                k = _bsgs_first(e, 1, p, 1, max_u - u0)
                if k is not None:
                    hits.append(u0 + k)
    if not hits:
        raise NoSolution(f"no u in 1..{max_u} with {e}^u = {y} (mod {p})")
    if len(hits) > 1:
        raise AmbiguousSolution(f"{e}^u = {y} (mod {p}) has several solutions in range", hits)
    return hits[0]


def sqrt_mod(a: int, q: int) -> SqrtResult:
    """All square roots of a modulo the odd prime q, smaller root first (Tonelli-Shanks)."""
    a %= q
    if a == 0:
        return SqrtResult((0,))
    if pow(a, (q - 1) // 2, q) != 1:
        return SqrtResult()
    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
    else:
        s, qq = 0, q - 1
        while qq % 2 == 0:
            qq //= 2
            s += 1
        z = 2
        while pow(z, (q - 1) // 2, q) != q - 1:
            z += 1
        m, c, t, r = s, pow(z, qq, q), pow(a, qq, q), pow(a, (qq + 1) // 2, q)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            m, c = i, b * b % q
            t, r = t * c % q, r * b % q
    return SqrtResult(tuple(sorted({r, q - r})))


def primes_upto(n: int):
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]
