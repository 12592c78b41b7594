"""Model III for K = 3: ``Y_i = X_i * (X_j + X_k)``.

Each user sends ``X`` then ``X + 1``. The slot difference exposes
``t = 2X_i + (X_j + X_k)``; substituting back gives the quadratic
``2X^2 - tX + Y_1 = 0 (mod q)``, solved by completing the square around
``t/4``. Codewords are ``20n + 4`` so that ``t = 16 (mod 20)`` on legal input.
"""

from dataclasses import asdict, dataclass, field
import enum

from ..errors import CongruenceViolated, IndexOutOfRange, InvalidParameter
from ..numtheory import is_prime, mod_inv, sqrt_mod
from ..polynomial import MultiPoly, parse_poly
from .codebook import Codebook, DecodeOutcome

K3_CHANNEL = "X1*X2 + X1*X3"


class CodebookMode(str, enum.Enum):
    PAPER = "paper"  # n <= (q - 12) // 60
    STRICT = "strict"  # n <= (q - 36) // 80, keeps 2X_i + X_j + X_k < q


class CenterMode(str, enum.Enum):
    DERIVED = "derived"  # t / 4 mod q, what the quadratic actually requires
    PAPER_LITERAL = "paper-literal"  # 5m + 1, comparison runs only


@dataclass
class ModelIIIDecodeTrace:
    t_sum: int = None
    m: int = None
    center: int = None
    rhs: int = None
    l: int = None
    alpha: int = None
    candidates: list = field(default_factory=list)
    survivors: list = field(default_factory=list)


@dataclass(frozen=True)
class ModelIIIParams:
    q: int
    C: Codebook
    codebook_mode: CodebookMode = CodebookMode.PAPER
    center_mode: CenterMode = CenterMode.DERIVED

    model = 3
    slots = 2
    K = 3

    @property
    def codebook(self):
        return self.C

    @property
    def h(self) -> MultiPoly:
        return parse_poly(K3_CHANNEL, 3)

    def to_dict(self):
        return {
            "model": 3,
            "K": 3,
            "q": self.q,
            "C": list(self.C.symbols),
            "codebook_size": len(self.C),
            "codebook_mode": self.codebook_mode.value,
            "center_mode": self.center_mode.value,
        }

    def encode_transmission(self, msgs):
        return [tuple(model3_encode(self, m, slot) for m in msgs) for slot in (1, 2)]

    def decode_receiver(self, receiver, outputs):
        return model3_decode(self, outputs[0], outputs[1])


def codebook_bound(q: int, mode) -> int:
    mode = CodebookMode(mode)
    if mode is CodebookMode.PAPER:
        return (q - 12) // 60
    return (q - 36) // 80


def model3_derive(q: int, codebook_mode=CodebookMode.PAPER, center_mode=CenterMode.DERIVED) -> ModelIIIParams:
    if not is_prime(q):
        raise InvalidParameter(f"q={q} is not prime")
    if q <= 5 or q % 5 != 3:
        raise CongruenceViolated(f"q={q} must be a prime > 5 with q = 3 (mod 5)", q=q)
    bound = codebook_bound(q, codebook_mode)
    if bound < 0:
        raise InvalidParameter(f"q={q} is too small for the {CodebookMode(codebook_mode).value} codebook")
    C = Codebook(tuple(20 * n + 4 for n in range(bound + 1)))
    return ModelIIIParams(q, C, CodebookMode(codebook_mode), CenterMode(center_mode))


def model3_encode(params: ModelIIIParams, msg: int, slot: int) -> int:
    if slot not in (1, 2):
        raise IndexOutOfRange(f"slot {slot} is not 1 or 2")
    x = params.C.symbol(msg)
    return x if slot == 1 else x + 1


def model3_decode(params: ModelIIIParams, y1: int, y2: int) -> DecodeOutcome:
    q = params.q
    tr = ModelIIIDecodeTrace()

    def failure(reason):
        return DecodeOutcome("failure", reason=reason, trace=asdict(tr))

    tr.t_sum = (y2 - y1 - 2) % q
    if tr.t_sum % 20 != 16:
        return failure("MalformedT")
    tr.m = (tr.t_sum - 16) // 20
    if params.center_mode is CenterMode.DERIVED:
        tr.center = tr.t_sum * mod_inv(4, q) % q
        tr.rhs = (tr.center * tr.center - mod_inv(2, q) * y1) % q
    else:
        tr.center = 5 * tr.m + 1
        tr.rhs = (tr.center * tr.center - (q + 1) // 2 * y1) % q
    roots = sqrt_mod(tr.rhs, q).roots
    if not roots:
        return failure("NonResidue")
    tr.l = roots[0]
    c, l = tr.center, tr.l
    tr.candidates = [c + l, c + l - q, c - l, c - l + q]
    tr.survivors = sorted({s for s in tr.candidates if s in params.C})
    if not tr.survivors:
        return failure("NoCandidate")
    if len(tr.survivors) > 1:
        return DecodeOutcome("ambiguous", candidates=tuple(tr.survivors), reason="Ambiguous", trace=asdict(tr))
    s = tr.survivors[0]
    tr.alpha = (tr.t_sum - 2 * s) % q
    return DecodeOutcome("unique", msg=params.C.index_of[s], candidates=(s,), trace=asdict(tr))
