"""Finite-q rate rows: sum rate normalized by log2 q, from constructed codebooks."""

import csv
from dataclasses import dataclass, field
import io
import math

from ..codecs import model1_derive, model2_derive, model3_derive
from ..codecs.model1 import infer_leading
from ..errors import DetAlignError
from ..polynomial import parse_poly

CSV_HEADER = ["q", "model", "slots", "codebook_size", "per_user_rate_bits", "sum_rate_bits", "dof_ratio"]


@dataclass
class RateRow:
    q: int
    model: int
    slots: int
    codebook_size: int
    K: int = 3
    skipped: str = None
    extra: dict = field(default_factory=dict)

    @property
    def per_user_rate_bits(self):
        if not self.codebook_size:
            return 0.0
        return math.log2(self.codebook_size) / self.slots

    @property
    def sum_rate_bits(self):
        return self.K * self.per_user_rate_bits

    @property
    def dof_ratio(self):
        return self.sum_rate_bits / math.log2(self.q)

    def csv_fields(self):
        return [
            str(self.q),
            str(self.model),
            str(self.slots),
            str(self.codebook_size),
            f"{self.per_user_rate_bits:.6f}",
            f"{self.sum_rate_bits:.6f}",
            f"{self.dof_ratio:.6f}",
        ]


@dataclass
class ModelConfig:
    """What to sweep. Polynomials are given as text over X1..XK."""

    model: int
    K: int = 3
    # Model I
    h: str = "X1 + X2*X3"
    a: int = None
    d: int = None
    mode: str = None
    # Model II
    f: str = "X1^2"
    g: str = "X2*X3"
    t: int = 0
    # Model III
    codebook_mode: str = "paper"

    def derive(self, value):
        """Derive the codec for one sweep point.

        For Models II and III ``value`` is the field prime q. For Model I the
        field prime follows from the inner prime, so ``value`` is a floor for
        p (None for the smallest admissible p).
        """
        if self.model == 1:
            h = parse_poly(self.h, self.K)
            a, d = infer_leading(h)
            a = a if self.a is None else self.a
            d = d if self.d is None else self.d
            return model1_derive(a, d, h, self.mode, p_min=value)
        if self.model == 2:
            return model2_derive(parse_poly(self.f, self.K), parse_poly(self.g, self.K), self.t, value)
        if self.model == 3:
            return model3_derive(value, self.codebook_mode)
        raise ValueError(f"unknown model {self.model}")


def dof_sweep(config: ModelConfig, q_list):
    rows = []
    for value in q_list:
        try:
            codec = config.derive(value)
        except DetAlignError as exc:
            q = value if value is not None else 0
            rows.append(RateRow(q, config.model, 2 if config.model != 1 else 1, 0, config.K, skipped=exc.kind))
            continue
        extra = {"p": codec.p} if config.model == 1 else {}
        rows.append(RateRow(codec.q, codec.model, codec.slots, len(codec.codebook), codec.K, extra=extra))
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        if row.skipped is None:
            w.writerow(row.csv_fields())
    return buf.getvalue()
