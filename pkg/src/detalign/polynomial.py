"""Sparse multivariate integer polynomials over X1..XK.

A :class:`MultiPoly` is q-independent: coefficients are plain integers and
only evaluation reduces them modulo a chosen prime. Terms are kept in
graded-lexicographic order (lowest degree first), which makes printing
canonical.
"""

from dataclasses import dataclass
import re

from . import _kernels
from .errors import EvaluationOverflow, IndexOutOfRange, PolySyntaxError, ZeroPolynomial

INTEGER_MODE = None  # pass as ``modulus`` for exact integer evaluation
INTEGER_LIMIT = 2**127
EXHAUSTIVE_LIMIT = 10**6


def _grlex_key(exps):
    # graded lexicographic, lowest total degree first, X1 before X2 within a degree
    return (sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class Monomial:
    coeff: int
    exponents: tuple

    @property
    def total_degree(self):
        return sum(self.exponents)

    def __str__(self):
        return _format_term(self.coeff, self.exponents, first=True)


class MultiPoly:
    """Immutable polynomial in K variables; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("K", "_terms")

    def __init__(self, K, terms=()):
        if K < 1:
            raise ValueError("K must be >= 1")
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != K:
                raise ValueError(f"exponent vector {exps} does not have length {K}")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            acc[exps] = acc.get(exps, 0) + int(coeff)
        ordered = sorted((e for e, c in acc.items() if c), key=_grlex_key)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "_terms", tuple((e, acc[e]) for e in ordered))

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    def __reduce__(self):
        return (MultiPoly, (self.K, self._terms))

    @classmethod
    def constant(cls, K, c):
        return cls(K, [((0,) * K, c)])

    @classmethod
    def variable(cls, K, index):
        if not 1 <= index <= K:
            raise IndexOutOfRange(f"X{index} is outside X1..X{K}")
        exps = [0] * K
        exps[index - 1] = 1
        return cls(K, [(tuple(exps), 1)])

    @property
    def terms(self):
        """Monomials in canonical order."""
        return [Monomial(c, e) for e, c in self._terms]

    def items(self):
        return self._terms

    def is_zero(self):
        return not self._terms

    def variables(self):
        """1-based indices of variables that actually occur."""
        used = set()
        for exps, _ in self._terms:
            used.update(k + 1 for k, e in enumerate(exps) if e)
        return sorted(used)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.K == other.K and self._terms == other._terms

    def __hash__(self):
        return hash((self.K, self._terms))

    def __repr__(self):
        return f"MultiPoly(K={self.K}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (exps, c) in enumerate(self._terms):
            parts.append(_format_term(c, exps, first=(i == 0)))
        return "".join(parts)

    def _coerce(self, other):
        if isinstance(other, int):
            return MultiPoly.constant(self.K, other)
        if isinstance(other, MultiPoly) and other.K == self.K:
            return other
        raise TypeError("operands must be integers or MultiPolys over the same K")

    def __add__(self, other):
        other = self._coerce(other)
        return MultiPoly(self.K, list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.K, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = []
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return MultiPoly(self.K, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = MultiPoly.constant(self.K, 1)
        for _ in range(n):
            result = result * self
        return result

    def permute(self, args):
        """Polynomial obtained by feeding ``X_{args[k]}`` into argument slot k.

        ``args`` is a 1-based permutation of 1..K.
        """
        out = []
        for exps, c in self._terms:
            new = [0] * self.K
            for k, e in enumerate(exps):
                new[args[k] - 1] = e
            out.append((tuple(new), c))
        return MultiPoly(self.K, out)

    def flatten(self, q):
        """``(coeffs, exps)`` flattened for the kernels, coefficients reduced mod q."""
        coeffs = [c % q for _, c in self._terms]
        exps = [e for ex, _ in self._terms for e in ex]
        return coeffs, exps


def _format_term(c, exps, first):
    factors = []
    for k, e in enumerate(exps):
        if e == 1:
            factors.append(f"X{k + 1}")
        elif e > 1:
            factors.append(f"X{k + 1}^{e}")
    mag = abs(c)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = f"{mag}*" + "*".join(factors)
    if first:
        return f"-{body}" if c < 0 else body
    return f" - {body}" if c < 0 else f" + {body}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(X)|([-+*^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("X", None, start))
        else:
            tokens.append((m.group(3), None, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


def parse_poly(text: str, K: int) -> MultiPoly:
    """Parse a sum of monomials such as ``"X1^2 - 3*X2*X3 + 4"``."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2])
        i += 1
        return tok

    def factor(exps):
        take("X")
        idx_tok = take("int")
        index = idx_tok[1]
        if index < 1:
            raise PolySyntaxError("variable index must be >= 1", idx_tok[2])
        if index > K:
            raise IndexOutOfRange(f"X{index} is outside X1..X{K}", position=idx_tok[2])
        power = 1
        if peek()[0] == "^":
            take("^")
            ex_tok = take("int")
            power = ex_tok[1]
            if power < 1:
                raise PolySyntaxError("exponent must be >= 1", ex_tok[2])
        exps[index - 1] += power

    def term(sign):
        exps = [0] * K
        coeff = 1
        if peek()[0] == "int":
            coeff = take("int")[1]
            if peek()[0] != "*":
                return tuple(exps), sign * coeff
            take("*")
        factor(exps)
        while peek()[0] == "*":
            take("*")
            factor(exps)
        return tuple(exps), sign * coeff

    terms = []
    sign = 1
    if peek()[0] == "-":
        take("-")
        sign = -1
    terms.append(term(sign))
    while peek()[0] in ("+", "-"):
        sign = 1 if take(peek()[0])[0] == "+" else -1
        terms.append(term(sign))
    tok = peek()
    if tok[0] != "end":
        raise PolySyntaxError(f"unexpected token {tok[0] if tok[1] is None else tok[1]!r}", tok[2])
    return MultiPoly(K, terms)


def eval_poly(poly: MultiPoly, point, modulus=INTEGER_MODE) -> int:
    """Evaluate at ``point``; ``modulus=INTEGER_MODE`` gives the exact integer value."""
    if len(point) != poly.K:
        raise ValueError(f"point has {len(point)} coordinates, expected {poly.K}")
    if modulus is INTEGER_MODE:
        total = 0
        for exps, c in poly.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        if abs(total) >= INTEGER_LIMIT:
            raise EvaluationOverflow(f"exact value exceeds the 128-bit range at {tuple(point)}")
        return total
    total = 0
    for exps, c in poly.items():
        v = c % modulus
        for x, e in zip(point, exps):
            if e:
                v = v * pow(x, e, modulus) % modulus
        total += v
    return total % modulus


def eval_many(poly: MultiPoly, points, q: int):
    """Batch modular evaluation at a sequence of points (kernel-backed)."""
    coeffs, exps = poly.flatten(q)
    flat = [x for pt in points for x in pt]
    return _kernels.eval_points_mod(coeffs, exps, poly.K, flat, q)


def eval_grid(poly: MultiPoly, q: int):
    """Values at every point of Z_q^K, X1 as the most significant digit."""
    coeffs, exps = poly.flatten(q)
    return _kernels.eval_grid_mod(coeffs, exps, poly.K, q)


def degree_profile(poly: MultiPoly):
    """``(per_variable_degrees, total_degree, min_total_degree)``."""
    if poly.is_zero():
        raise ZeroPolynomial("degree of the zero polynomial is undefined")
    per_var = [0] * poly.K
    totals = []
    for exps, _ in poly.items():
        for k, e in enumerate(exps):
            per_var[k] = max(per_var[k], e)
        totals.append(sum(exps))
    return tuple(per_var), max(totals), min(totals)


def min_degree_terms(poly: MultiPoly):
    if poly.is_zero():
        raise ZeroPolynomial("the zero polynomial has no terms")
    low = min(sum(e) for e, _ in poly.items())
    return [m for m in poly.terms if m.total_degree == low]


def substitute(poly: MultiPoly, var: int, value: int) -> MultiPoly:
    """Fix ``X_var = value``; the result keeps K slots with exponent 0 at ``var``."""
    if not 1 <= var <= poly.K:
        raise IndexOutOfRange(f"X{var} is outside X1..X{poly.K}")
    k = var - 1
    out = []
    for exps, c in poly.items():
        e = exps[k]
        new = exps[:k] + (0,) + exps[k + 1 :]
        out.append((new, c * value**e))
    return MultiPoly(poly.K, out)


def reduce_mod(poly: MultiPoly, q: int) -> MultiPoly:
    """Canonical representative of the polynomial function on Z_q^K.

    Coefficients go to [0, q) and each exponent e >= 1 to ((e-1) mod (q-1)) + 1,
    using x**q = x on Z_q.
    """
    out = []
    for exps, c in poly.items():
        new = tuple(e if e == 0 else (e - 1) % (q - 1) + 1 for e in exps)
        out.append((new, c % q))
    reduced = MultiPoly(poly.K, out)
    return MultiPoly(poly.K, [(e, c % q) for e, c in reduced.items()])


def is_functionally_zero(poly: MultiPoly, q: int) -> bool:
    """True iff the polynomial vanishes at every point of Z_q^K."""
    if poly.is_zero():
        return True
    if q**poly.K <= EXHAUSTIVE_LIMIT:
        return not any(eval_grid(poly, q))
    return reduce_mod(poly, q).is_zero()
