"""Zero-error verification of a (channel, codec) pair.

Every codeword tuple in scope is encoded, pushed through the channel, and
decoded at every receiver. Independently of the decoders, an output-collision
oracle groups tuples by each receiver's observation sequence: two tuples with
different desired symbols and identical observations cannot both be decoded.
A scheme-specific predicate, also computed only from inputs and outputs,
explains the remaining failure kinds (divisibility for Model I, wraparound
of the slot difference for Model III).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import itertools
import json
import random

from ..channel import ChannelSpec, Semantics, channel_outputs_batch
from ..errors import BudgetExceeded, InvalidParameter

DECODE_BUDGET = 10**7
MAX_EXEMPLARS = 10


@dataclass(frozen=True)
class Scope:
    kind: str = "exhaustive"
    count: int = 0
    seed: int = 0

    def to_dict(self):
        if self.kind == "exhaustive":
            return {"kind": "exhaustive"}
        return {"kind": "sampled", "count": self.count, "seed": self.seed}


EXHAUSTIVE = Scope()


def sampled(count, seed=0):
    return Scope("sampled", int(count), int(seed))


@dataclass
class VerificationReport:
    model: int
    q: int
    semantics: str
    scope: dict
    K: int
    total_tuples: int = 0
    decoded_ok: int = 0
    failures: int = 0
    ambiguous: int = 0
    error_breakdown: dict = field(default_factory=dict)
    exemplars: list = field(default_factory=list)
    oracle_collisions: int = 0
    oracle_predicted_failures: int = 0
    unexplained: int = 0
    oracle_agreement: bool = True

    @property
    def receivers_checked(self):
        return self.K

    @property
    def clean(self):
        return self.failures == 0 and self.ambiguous == 0

    def to_dict(self):
        return {
            "model": self.model,
            "q": self.q,
            "semantics": self.semantics,
            "scope": self.scope,
            "K": self.K,
            "receivers_checked": self.receivers_checked,
            "total_tuples": self.total_tuples,
            "decoded_ok": self.decoded_ok,
            "failures": self.failures,
            "ambiguous": self.ambiguous,
            "error_breakdown": dict(sorted(self.error_breakdown.items())),
            "exemplars": self.exemplars,
            "oracle_collisions": self.oracle_collisions,
            "oracle_predicted_failures": self.oracle_predicted_failures,
            "unexplained": self.unexplained,
            "oracle_agreement": self.oracle_agreement,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def codec_channel(codec, semantics=Semantics.MOD_Q) -> ChannelSpec:
    """The channel a codec was built for."""
    return ChannelSpec(codec.K, codec.h, codec.q, semantics)


def _tuples(n, K, scope):
    if scope.kind == "exhaustive":
        return list(itertools.product(range(n), repeat=K))
    rng = random.Random(scope.seed)
    return [tuple(rng.randrange(n) for _ in range(K)) for _ in range(scope.count)]


def _run_chunk(spec, codec, tuples):
    """Observations and decoder outcomes for a contiguous slice of tuples."""
    K = spec.K
    slot_inputs = [codec.encode_transmission(t) for t in tuples]
    per_slot = []
    for s in range(codec.slots):
        per_slot.append(channel_outputs_batch(spec, [tx[s] for tx in slot_inputs]))
    rows = []
    for n, msgs in enumerate(tuples):
        obs = [tuple(per_slot[s][n][r] for s in range(codec.slots)) for r in range(K)]
        outcomes = [codec.decode_receiver(r + 1, obs[r]) for r in range(K)]
        rows.append((slot_inputs[n], obs, outcomes))
    return rows


def _predicate(codec, r, slot_inputs, obs):
    """Scheme-specific explanation of a predicted failure at receiver r (0-based), or None."""
    if codec.model == 1:
        p, d = codec.p, codec.d
        x = slot_inputs[0][r]
        mod = p ** (d + 1)
        if (obs[0] - codec.a * x**d) % mod:
            return "Eq8CongruenceViolated"
    elif codec.model == 3:
        x = slot_inputs[0]
        if 2 * x[r] + sum(x) - x[r] >= codec.q:
            return "SlotDifferenceWraps"
    return None


def verify_zero_error(spec: ChannelSpec, codec, scope: Scope = EXHAUSTIVE, workers: int = 1) -> VerificationReport:
    if spec.q != codec.q or spec.K != codec.K or spec.h != codec.h:
        raise InvalidParameter("codec was derived for a different channel")
    n = len(codec.codebook)
    K = spec.K
    if scope.kind == "exhaustive" and n**K * K > DECODE_BUDGET:
        raise BudgetExceeded(f"{n}^{K} tuples x {K} receivers exceeds {DECODE_BUDGET} decodes")
    tuples = _tuples(n, K, scope)

    workers = max(1, int(workers))
    if workers == 1 or len(tuples) < 2 * workers:
        rows = _run_chunk(spec, codec, tuples)
    else:
        size = -(-len(tuples) // workers)
        chunks = [tuples[i : i + size] for i in range(0, len(tuples), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_chunk, [spec] * len(chunks), [codec] * len(chunks), chunks)
            rows = [row for part in parts for row in part]

    report = VerificationReport(
        model=codec.model,
        q=spec.q,
        semantics=spec.semantics.value,
        scope=scope.to_dict(),
        K=K,
        total_tuples=len(tuples),
    )

    # collision oracle: receiver -> observation -> desired symbols seen
    seen = [dict() for _ in range(K)]
    for slot_inputs, obs, _ in rows:
        for r in range(K):
            seen[r].setdefault(obs[r], set()).add(slot_inputs[0][r])

    exact_predicate = codec.model == 1
    for idx, (slot_inputs, obs, outcomes) in enumerate(rows):
        for r, out in enumerate(outcomes):
            truth = tuples[idx][r]
            collision = len(seen[r][obs[r]]) > 1
            predicted = _predicate(codec, r, slot_inputs, obs[r])
            report.oracle_collisions += collision
            report.oracle_predicted_failures += predicted is not None
            if out.status == "unique" and out.msg == truth:
                report.decoded_ok += 1
                if exact_predicate and predicted is not None:
                    report.unexplained += 1
                continue
            if out.status == "ambiguous":
                report.ambiguous += 1
                kind = "Ambiguous"
            else:
                report.failures += 1
                kind = out.reason if out.status == "failure" else "WrongMessage"
            report.error_breakdown[kind] = report.error_breakdown.get(kind, 0) + 1
            explained = collision or predicted is not None
            if not explained:
                report.unexplained += 1
            if len(report.exemplars) < MAX_EXEMPLARS:
                report.exemplars.append(
                    {
                        "tuple": list(slot_inputs[0]),
                        "receiver": r + 1,
                        "status": out.status,
                        "kind": kind,
                        "observations": list(obs[r]),
                        "candidates": list(out.candidates),
                        "collision": collision,
                        "predicate": predicted,
                        "trace": out.trace,
                    }
                )
    report.oracle_agreement = report.unexplained == 0
    return report
