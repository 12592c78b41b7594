"""Upper-bound condition checks for the symmetric channel.

Condition 1 is symbolic (some interferer appears with degree exactly one).
Condition 2 has no closed procedure, so it is tested by brute force at a
small probe prime: with every other input fixed, equal values of h must
force equal values of receiver j's observation.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .. import _kernels
from ..channel import receiver_arguments
from ..errors import BudgetExceeded, InvalidParameter
from ..numtheory import is_prime
from ..polynomial import MultiPoly, degree_profile, eval_grid

EXHAUSTIVE_BUDGET = 10**6


@dataclass
class Condition2Result:
    j: int
    violating_assignments: int
    total_assignments: int

    @property
    def strict(self):
        """Holds for every assignment of the other inputs."""
        return self.violating_assignments == 0

    @property
    def generic(self):
        """Holds for at least one assignment."""
        return self.violating_assignments < self.total_assignments

    def to_dict(self):
        return {
            "j": self.j,
            "violating_assignments": self.violating_assignments,
            "total_assignments": self.total_assignments,
            "strict": self.strict,
            "generic": self.generic,
        }


@dataclass
class BoundReport:
    K: int
    probe_q: int
    condition1_witnesses: list = field(default_factory=list)
    condition2_results: list = field(default_factory=list)

    @property
    def condition2_witnesses(self):
        return [r.j for r in self.condition2_results if r.strict]

    @property
    def implied_bound(self) -> Fraction:
        if self.condition1_witnesses or self.condition2_witnesses:
            return Fraction(self.K, 2)
        return Fraction(self.K)

    def to_dict(self):
        b = self.implied_bound
        return {
            "K": self.K,
            "probe_q": self.probe_q,
            "condition1_witnesses": list(self.condition1_witnesses),
            "condition2_results": [r.to_dict() for r in self.condition2_results],
            "condition2_witnesses": self.condition2_witnesses,
            "implied_bound": float(b),
            "implied_bound_exact": str(b),
        }


def check_theorem1(h: MultiPoly, K: int, probe_q: int) -> BoundReport:
    if h.K != K:
        raise InvalidParameter(f"h has {h.K} variables, expected K={K}")
    if not is_prime(probe_q):
        raise InvalidParameter(f"probe prime {probe_q} is not prime")
    if probe_q ** (K + 1) > EXHAUSTIVE_BUDGET:
        raise BudgetExceeded(f"probe_q^(K+1) = {probe_q ** (K + 1)} exceeds {EXHAUSTIVE_BUDGET}")
    per_var, _, _ = degree_profile(h)
    report = BoundReport(K, probe_q)
    report.condition1_witnesses = [j for j in range(2, K + 1) if per_var[j - 1] == 1]
    h_vals = eval_grid(h, probe_q)
    for j in range(2, K + 1):
        rotated = h.permute(receiver_arguments(j, K))
        r_vals = eval_grid(rotated, probe_q)
        bad = _kernels.reconstruction_violations(h_vals, r_vals, probe_q, K, j - 1)
        report.condition2_results.append(Condition2Result(j, bad, probe_q ** (K - 1)))
    return report
