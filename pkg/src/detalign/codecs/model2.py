"""Model II: ``h = f(X1) + g(X2, .., XK)`` where substituting a vanish point
``t`` at any argument of g kills it. Two channel uses per message: in the
second, user 1 sends t and everyone else repeats.
"""

from dataclasses import dataclass

from ..errors import ConditionViolated, DecodeError, IndexOutOfRange, InvalidParameter, NotInImage
from ..numtheory import is_prime
from ..polynomial import MultiPoly, eval_poly, is_functionally_zero, substitute
from .codebook import Codebook, DecodeOutcome, invertible_set


@dataclass(frozen=True)
class ModelIIParams:
    f: MultiPoly
    g: MultiPoly
    vanish_point: int
    q: int
    C: Codebook
    finv: dict
    f_at_t: int

    model = 2
    slots = 2

    @property
    def K(self):
        return self.g.K

    @property
    def codebook(self):
        return self.C

    @property
    def h(self):
        return self.f + self.g

    def to_dict(self):
        return {
            "model": 2,
            "K": self.K,
            "f": str(self.f),
            "g": str(self.g),
            "vanish_point": self.vanish_point,
            "q": self.q,
            "C": list(self.C.symbols),
            "codebook_size": len(self.C),
            "finv": {str(k): v for k, v in sorted(self.finv.items())},
        }

    def encode_transmission(self, msgs):
        return [
            tuple(model2_encode(self, i + 1, m, slot) for i, m in enumerate(msgs))
            for slot in (1, 2)
        ]

    def decode_receiver(self, receiver, outputs):
        trace = {"y1": outputs[0], "y2": outputs[1]}
        try:
            msg = model2_decode(self, receiver, outputs[0], outputs[1])
        except DecodeError as exc:
            return DecodeOutcome("failure", reason=exc.kind, trace=trace)
        return DecodeOutcome("unique", msg=msg, candidates=(self.C.symbol(msg),), trace=trace)


def _lift_f(f: MultiPoly, K: int) -> MultiPoly:
    """Place a univariate f onto X1 of a K-variable ring."""
    used = f.variables()
    if not used:
        raise InvalidParameter("f must be nonconstant")
    if len(used) > 1:
        raise InvalidParameter("f must be univariate")
    var = used[0]
    return MultiPoly(K, [((exps[var - 1],) + (0,) * (K - 1), c) for exps, c in f.items()])


def model2_derive(f: MultiPoly, g: MultiPoly, t: int, q: int) -> ModelIIParams:
    if not is_prime(q):
        raise InvalidParameter(f"q={q} is not prime")
    K = g.K
    if K < 2:
        raise InvalidParameter("g must be written over X1..XK with K >= 2")
    if 1 in g.variables():
        raise InvalidParameter("g must not involve X1")
    f = _lift_f(f, K)
    t %= q
    for pos in range(2, K + 1):
        if not is_functionally_zero(substitute(g, pos, t), q):
            raise ConditionViolated(f"g does not vanish when X{pos} = {t} (mod {q})", pos)
    C, _ = invertible_set(f, q)
    point = lambda x: (x,) + (0,) * (K - 1)
    finv = {eval_poly(f, point(x), q): x for x in C}
    f_at_t = eval_poly(f, point(t), q)
    return ModelIIParams(f, g, t, q, C, finv, f_at_t)


def model2_encode(params: ModelIIParams, user: int, msg: int, slot: int) -> int:
    if slot not in (1, 2):
        raise IndexOutOfRange(f"slot {slot} is not 1 or 2")
    if not 1 <= user <= params.K:
        raise IndexOutOfRange(f"user {user} outside 1..{params.K}")
    symbol = params.C.symbol(msg)
    if slot == 2 and user == 1:
        return params.vanish_point
    return symbol


def model2_decode(params: ModelIIParams, receiver: int, y1: int, y2: int) -> int:
    """Receiver 1 cancels g by differencing the slots; others read f(X_i) from slot 2."""
    q = params.q
    if receiver == 1:
        v = (y1 - y2 + params.f_at_t) % q
    else:
        v = y2 % q
    x = params.finv.get(v)
    if x is None:
        raise NotInImage(f"{v} is not in f(C)", value=v)
    return params.C.index_of[x]
