"""The symmetric K-user deterministic channel.

Receiver i observes ``h`` applied to the inputs rotated so that its own
transmitter comes first: ``Y_i = h(X_i, X_{i+1}, ..., X_{i+K-1})`` with
indices wrapping inside 1..K.
"""

from dataclasses import dataclass
import enum
import json

from .errors import InvalidParameter
from .numtheory import is_prime
from .polynomial import INTEGER_MODE, MultiPoly, eval_many, eval_poly, parse_poly


class Semantics(str, enum.Enum):
    MOD_Q = "mod_q"
    INTEGER = "integer"


def wrap(j, K):
    return (j - 1) % K + 1


def receiver_arguments(i: int, K: int):
    if not 1 <= i <= K:
        raise InvalidParameter(f"receiver {i} outside 1..{K}")
    return tuple(wrap(i + k, K) for k in range(K))


@dataclass(frozen=True)
class ChannelSpec:
    K: int
    h: MultiPoly
    q: int
    semantics: Semantics = Semantics.MOD_Q

    def __post_init__(self):
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        if self.K < 2:
            raise InvalidParameter("K must be >= 2")
        if self.h.K != self.K:
            raise InvalidParameter(f"h has {self.h.K} variables, channel has K={self.K}")
        if self.h.is_zero():
            raise InvalidParameter("h must be nonzero")
        if not is_prime(self.q):
            raise InvalidParameter(f"q={self.q} is not prime")

    @property
    def modulus(self):
        return self.q if self.semantics is Semantics.MOD_Q else INTEGER_MODE

    def receiver_polys(self):
        """``h`` rewritten per receiver so that plain evaluation at x gives Y_i."""
        return [self.h.permute(receiver_arguments(i, self.K)) for i in range(1, self.K + 1)]

    def to_dict(self):
        return {"K": self.K, "h": str(self.h), "q": self.q, "semantics": self.semantics.value}

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - {"K", "h", "q", "semantics"}
        if unknown:
            raise InvalidParameter(f"unknown channel config fields: {sorted(unknown)}")
        K = int(data["K"])
        return cls(K, parse_poly(data["h"], K), int(data["q"]), Semantics(data.get("semantics", "mod_q")))

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


def _check_inputs(spec, x):
    if len(x) != spec.K:
        raise InvalidParameter(f"expected {spec.K} inputs, got {len(x)}")
    if spec.semantics is Semantics.MOD_Q:
        for v in x:
            if not 0 <= v < spec.q:
                raise InvalidParameter(f"input {v} outside [0, {spec.q})")
    elif any(v < 0 for v in x):
        raise InvalidParameter("inputs must be nonnegative")


def channel_outputs(spec: ChannelSpec, x):
    """All K receiver outputs for one channel use."""
    _check_inputs(spec, x)
    K = spec.K
    out = []
    for i in range(1, K + 1):
        args = receiver_arguments(i, K)
        out.append(eval_poly(spec.h, [x[a - 1] for a in args], spec.modulus))
    return tuple(out)


def channel_outputs_batch(spec: ChannelSpec, xs):
    """Outputs for many channel uses at once; list of K-tuples.

    Field semantics go through the evaluation kernel, one pass per receiver.
    """
    for x in xs:
        _check_inputs(spec, x)
    if spec.semantics is Semantics.INTEGER:
        return [channel_outputs(spec, x) for x in xs]
    columns = [eval_many(poly, xs, spec.q) for poly in spec.receiver_polys()]
    return list(zip(*columns))
