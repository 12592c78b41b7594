"""Codebooks, fiber tables, and the decoding outcome record shared by the schemes."""

from dataclasses import dataclass, field
import math

from ..errors import IndexOutOfRange, InvalidParameter
from ..polynomial import MultiPoly, degree_profile, eval_grid


@dataclass(frozen=True)
class Codebook:
    """Strictly increasing transmit symbols; message index = rank."""

    symbols: tuple
    index_of: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        syms = tuple(int(s) for s in self.symbols)
        if any(b <= a for a, b in zip(syms, syms[1:])):
            raise InvalidParameter("codebook symbols must be strictly increasing")
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "index_of", {s: m for m, s in enumerate(syms)})

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, s):
        return s in self.index_of

    def __iter__(self):
        return iter(self.symbols)

    def symbol(self, msg):
        if not 0 <= msg < len(self.symbols):
            raise IndexOutOfRange(f"message index {msg} outside 0..{len(self.symbols) - 1}")
        return self.symbols[msg]

    @property
    def rate_bits(self):
        """log2 |C|, bits per block before dividing by the slot count."""
        return math.log2(len(self.symbols)) if self.symbols else 0.0


@dataclass(frozen=True)
class ImageTable:
    fibers: dict  # image value -> sorted preimages
    image: frozenset


@dataclass
class DecodeOutcome:
    """What a receiver concluded from its observations.

    ``status`` is ``"unique"``, ``"ambiguous"`` or ``"failure"``; ``reason``
    names the error kind for failures.
    """

    status: str
    msg: int = None
    candidates: tuple = ()
    reason: str = None
    trace: dict = None


def _univariate_check(f: MultiPoly):
    used = f.variables()
    if len(used) > 1:
        raise InvalidParameter(f"f must be univariate, uses {['X%d' % v for v in used]}")
    if not used:
        raise InvalidParameter("f must be nonconstant")
    return used[0]


def univariate_values(f: MultiPoly, q: int):
    """f(x) mod q for x = 0..q-1, in whichever single variable f uses."""
    var = _univariate_check(f)
    single = MultiPoly(1, [((exps[var - 1],), c) for exps, c in f.items()])
    return eval_grid(single, q)


def invertible_set(f: MultiPoly, q: int):
    """Minimum preimage of every image value; f is injective on the result."""
    values = univariate_values(f, q)
    fibers = {}
    for x, v in enumerate(values):
        fibers.setdefault(v, []).append(x)
    table = ImageTable(fibers=fibers, image=frozenset(fibers))
    cb = Codebook(tuple(sorted(xs[0] for xs in fibers.values())))
    return cb, table


def univariate_degree(f: MultiPoly) -> int:
    return degree_profile(f)[1]
