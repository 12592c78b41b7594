"""Model I: ``h = a*X1^d + (terms of total degree > d)``, one channel use.

Codewords are ``p * (e^k mod p)`` for ``k = 1..(p-1)/2`` with ``e`` a
primitive root of an inner prime ``p``; the field prime q sits in
``(p^2, 2p^2)``. A receiver reads ``Y mod p^(d+1)``, strips ``p^d`` and
inverts ``u -> e^(u*d)`` on ``{1, .., (p-1)/2}``.
"""

from dataclasses import dataclass
import enum
from math import gcd

from ..errors import (
    DecodeError,
    InjectivityViolation,
    InvalidParameter,
    NotDivisible,
    StructureViolation,
)
from ..numtheory import (
    ProgressionSpec,
    crt_offset,
    discrete_log_bounded,
    is_prime,
    mod_inv,
    odd_part,
    prime_in_interval,
    prime_in_progression,
    primitive_root,
)
from ..polynomial import MultiPoly, min_degree_terms
from .codebook import Codebook, DecodeOutcome


class Model1Mode(str, enum.Enum):
    PAPER_LITERAL = "paper-literal"  # p = c (mod 4*d0), c = 3 (mod 4), c = 1 (mod d0)
    REPAIRED = "repaired"  # p = 3 (mod 4) and gcd(p - 1, d0) = 1


@dataclass(frozen=True)
class ModelIParams:
    a: int
    d: int
    two_adic_exp: int
    d0: int
    c: int
    p: int
    q: int
    e: int
    C: Codebook
    mode: Model1Mode
    h: MultiPoly

    model = 1
    slots = 1

    @property
    def K(self):
        return self.h.K

    @property
    def codebook(self):
        return self.C

    def to_dict(self):
        return {
            "model": 1,
            "a": self.a,
            "d": self.d,
            "two_adic_exp": self.two_adic_exp,
            "d0": self.d0,
            "c": self.c,
            "p": self.p,
            "q": self.q,
            "e": self.e,
            "C": list(self.C.symbols),
            "codebook_size": len(self.C),
            "mode": self.mode.value,
            "h": str(self.h),
            "K": self.K,
        }

    def encode_transmission(self, msgs):
        return [tuple(model1_encode(self, m) for m in msgs)]

    def decode_receiver(self, receiver, outputs):
        try:
            msg, u = model1_decode(self, outputs[0])
        except DecodeError as exc:
            return DecodeOutcome("failure", reason=exc.kind, trace={"y": outputs[0]})
        return DecodeOutcome("unique", msg=msg, candidates=(self.C.symbol(msg),), trace={"y": outputs[0], "u": u})


def check_structure(h: MultiPoly, a: int, d: int):
    """Exactly one minimal-degree term, equal to a*X1^d."""
    lows = min_degree_terms(h)
    expected = (d,) + (0,) * (h.K - 1)
    if len(lows) != 1 or lows[0].exponents != expected or lows[0].coeff != a:
        found = " + ".join(str(m) for m in lows)
        raise StructureViolation(
            f"minimal-degree part of h must be exactly {a}*X1^{d}; found {found}",
            minimal_terms=[str(m) for m in lows],
        )


def infer_leading(h: MultiPoly):
    """``(a, d)`` read off the unique minimal term of h when it is a*X1^d."""
    lows = min_degree_terms(h)
    if len(lows) == 1 and all(e == 0 for e in lows[0].exponents[1:]) and lows[0].exponents[0] >= 1:
        return lows[0].coeff, lows[0].exponents[0]
    raise StructureViolation(
        "h has no unique minimal term of the form a*X1^d",
        minimal_terms=[str(m) for m in lows],
    )


def default_mode(d: int) -> Model1Mode:
    """Paper-literal is sound only for odd part 1."""
    return Model1Mode.PAPER_LITERAL if odd_part(d)[1] == 1 else Model1Mode.REPAIRED


def _inner_prime(mode, d0, min_exclusive):
    step = 4 * d0
    if mode is Model1Mode.PAPER_LITERAL:
        c = crt_offset(d0)
        return c, prime_in_progression(ProgressionSpec(step, c, min_exclusive))
    offsets = [r for r in range(3, step, 4) if gcd(r, step) == 1 and gcd(r - 1, d0) == 1]
    best = min(prime_in_progression(ProgressionSpec(step, r, min_exclusive)) for r in offsets)
    return best % step, best


def injectivity_collision(e: int, d: int, p: int):
    """First pair (u, v), u < v <= (p-1)/2, with e^(ud) = e^(vd) mod p, else None."""
    seen = {}
    base = pow(e, d, p)
    cur = 1
    for v in range(1, (p - 1) // 2 + 1):
        cur = cur * base % p
        if cur in seen:
            return seen[cur], v
        seen[cur] = v
    return None


def model1_derive(a: int, d: int, h: MultiPoly, mode=None, p_min=None, q=None, self_check=True) -> ModelIParams:
    """Derive (p, q, e, C) for ``h``.

    ``p_min`` raises the floor for the inner prime (p >= p_min); ``q``
    overrides the field prime, which must still lie in (p^2, 2p^2).
    ``self_check=False`` skips the injectivity check (decoding may then
    report ambiguity).
    """
    if a < 1 or d < 1:
        raise InvalidParameter("a and d must be positive integers")
    check_structure(h, a, d)
    mode = default_mode(d) if mode is None else Model1Mode(mode)
    t, d0 = odd_part(d)
    floor = a if p_min is None else max(a, p_min - 1)
    c, p = _inner_prime(mode, d0, floor)
    if q is None:
        q = prime_in_interval(p * p, 2 * p * p)
    elif not (p * p < q < 2 * p * p and is_prime(q)):
        raise InvalidParameter(f"q={q} must be a prime in ({p * p}, {2 * p * p}) for p={p}")
    e = primitive_root(p)
    if self_check:
        pair = injectivity_collision(e, d, p)
        if pair is not None:
            raise InjectivityViolation(
                f"u -> {e}^(u*{d}) mod {p} is not injective on 1..{(p - 1) // 2}: {pair}",
                pair,
                p=p,
                e=e,
                d=d,
            )
    half = (p - 1) // 2
    C = Codebook(tuple(sorted(p * pow(e, k, p) for k in range(1, half + 1))))
    return ModelIParams(a, d, t, d0, c, p, q, e, C, mode, h)


def model1_encode(params: ModelIParams, msg: int) -> int:
    return params.C.symbol(msg)


def model1_decode(params: ModelIParams, y: int):
    """Message index and exponent ``u`` recovered from one observation."""
    p, d = params.p, params.d
    pd = p**d
    y_low = y % (pd * p)
    if y_low % pd:
        raise NotDivisible(f"p^d = {pd} does not divide Y mod p^(d+1) = {y_low}", y=y, y_low=y_low)
    target = (y_low // pd) * mod_inv(params.a, p) % p
    u = discrete_log_bounded(pow(params.e, d, p), target, p, (p - 1) // 2)
    symbol = p * pow(params.e, u, p)
    return params.C.index_of[symbol], u
