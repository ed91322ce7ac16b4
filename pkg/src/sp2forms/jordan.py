"""Jordan types of unipotent operators over a field of characteristic two.

A unipotent operator decomposes the underlying space into Jordan blocks; the
multiset of block sizes (the *Jordan type*) determines the operator up to
conjugacy.  This module does exact arithmetic on Jordan types: tensor
products, exterior squares, and restriction/induction along the cyclic
subgroup generated by a power of the operator.  Everything here is pure
integer combinatorics; the matrices live in :mod:`sp2forms.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


def nu2(n: int) -> int:
    """2-adic valuation: the largest k with 2^k dividing n (n > 0)."""
    if n <= 0:
        raise ValueError(f"nu2 requires a positive integer, got {n}")
    return (n & -n).bit_length() - 1


class ParseError(ValueError):
    """A type string does not match the expected grammar."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def caret_message(self) -> str:
        """Two-line rendering of the offending input with a caret marker."""
        return f"{self.args[0]}\n  {self.text}\n  {' ' * self.pos}^"


@dataclass(frozen=True)
class JordanType:
    """A multiset of Jordan block sizes, as (size, multiplicity) pairs.

    Invariants: sizes strictly increasing, all sizes and multiplicities
    positive.  The empty tuple represents the zero space.
    """

    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 0
        for d, m in self.blocks:
            if d <= prev:
                raise ValueError(f"block sizes must be positive and strictly increasing, got {d} after {prev}")
            if m < 1:
                raise ValueError(f"multiplicity of block size {d} must be positive, got {m}")
            prev = d

    @classmethod
    def from_dict(cls, counts: dict[int, int]) -> JordanType:
        """Build a type from a size -> multiplicity mapping, dropping zeros."""
        return cls(tuple(sorted((d, m) for d, m in counts.items() if m)))

    def to_dict(self) -> dict[int, int]:
        return dict(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.blocks)

    def multiplicity(self, d: int) -> int:
        return dict(self.blocks).get(d, 0)

    def dimension(self) -> int:
        return sum(d * m for d, m in self.blocks)

    def total_blocks(self) -> int:
        return sum(m for _, m in self.blocks)

    def is_empty(self) -> bool:
        return not self.blocks

    def expand(self) -> tuple[int, ...]:
        """All block sizes listed with multiplicity, ascending."""
        return tuple(d for d, m in self.blocks for _ in range(m))

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        return ",".join(f"{d}^{m}" if m > 1 else str(d) for d, m in self.blocks)

    def pretty(self) -> str:
        """Parenthesized, space-separated rendering, e.g. ``(1^2, 2)``."""
        if not self.blocks:
            return "(0)"
        return "(" + ", ".join(f"{d}^{m}" if m > 1 else str(d) for d, m in self.blocks) + ")"

    def to_json(self) -> dict:
        return {"blocks": [[d, m] for d, m in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> JordanType:
        return cls(tuple((int(d), int(m)) for d, m in data["blocks"]))

    @classmethod
    def parse(cls, text: str) -> JordanType:
        """Parse the ``d^m`` comma-separated grammar, e.g. ``3^2,5``.

        ``^1`` may be omitted; ``0`` denotes the empty type.  Duplicate or
        non-positive sizes are rejected with the offending position.
        """
        return _parse_jordan(text)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos] == " ":
        pos += 1
    return pos


def _scan_int(text: str, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_ws(text, pos)
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError(text, start, f"expected {what}")
    return int(text[start:pos]), pos


def _strip_parens(text: str) -> str:
    """Allow the parenthesized table rendering as parser input."""
    inner = text.strip()
    if inner.startswith("(") and inner.endswith(")"):
        return inner[1:-1]
    return text


def _parse_jordan(text: str) -> JordanType:
    text = _strip_parens(text)
    pos = _skip_ws(text, 0)
    if pos < len(text) and text[pos] == "0":
        tail = _skip_ws(text, pos + 1)
        if tail == len(text):
            return JordanType(())
        raise ParseError(text, tail, "unexpected input after '0'")
    counts: dict[int, int] = {}
    while True:
        at = _skip_ws(text, pos)
        d, pos = _scan_int(text, pos, "block size")
        if d == 0:
            raise ParseError(text, at, "block size must be positive")
        m = 1
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == "^":
            m, pos = _scan_int(text, pos + 1, "multiplicity")
            if m == 0:
                raise ParseError(text, pos - 1, "multiplicity must be positive")
        if d in counts:
            raise ParseError(text, at, f"duplicate block size {d}")
        counts[d] = m
        pos = _skip_ws(text, pos)
        if pos == len(text):
            return JordanType.from_dict(counts)
        if text[pos] != ",":
            raise ParseError(text, pos, f"expected ',' or end of input, got {text[pos]!r}")
        pos += 1


@dataclass(frozen=True)
class ConsecutiveOnesExpansion:
    """Minimal alternating-sign representation n = sum of (-1)^(i+1) * 2^(e_i).

    Terms are (sign, exponent) pairs with strictly decreasing exponents and
    signs alternating starting with +1.
    """

    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(s * (1 << e) for s, e in self.terms)

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.terms)

    def powers(self) -> tuple[int, ...]:
        return tuple(1 << e for _, e in self.terms)

    def __str__(self) -> str:
        parts = []
        for i, (s, e) in enumerate(self.terms):
            if i == 0:
                parts.append(f"2^{e}")
            else:
                parts.append(f"{'+' if s > 0 else '-'} 2^{e}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [[s, e] for s, e in self.terms]}


@lru_cache(maxsize=None)
def consecutive_ones(n: int) -> ConsecutiveOnesExpansion:
    """Expand n > 0 into its minimal alternating sum of powers of two.

    Maximal runs of ones in the binary expansion become differences
    2^a - 2^b; a final single-bit run collapses to a lone +2^b term.
    """
    if n <= 0:
        raise ValueError(f"consecutive_ones requires a positive integer, got {n}")
    runs = []  # (low, high): bits low..high-1 are set
    pos = 0
    m = n
    while m:
        z = nu2(m)
        pos += z
        m >>= z
        r = ((m + 1) & -(m + 1)).bit_length() - 1  # length of the all-ones run
        runs.append((pos, pos + r))
        pos += r
        m >>= r
    terms: list[tuple[int, int]] = []
    for low, high in reversed(runs):
        terms.append((1, high))
        terms.append((-1, low))
    low0, high0 = runs[0]
    if high0 == low0 + 1:
        terms[-2:] = [(1, low0)]
    return ConsecutiveOnesExpansion(tuple(terms))


def consecutive_ones_powers(n: int) -> frozenset[int]:
    """The powers of two larger than 1 appearing in the expansion of n."""
    return frozenset(p for p in consecutive_ones(n).powers() if p > 1)


@lru_cache(maxsize=None)
def _tensor_blocks(m: int, n: int) -> tuple[tuple[int, int], ...]:
    if m > n:
        m, n = n, m
    alpha = n.bit_length() - 1  # 2^alpha <= n < 2^(alpha+1)
    q2 = 1 << (alpha + 1)
    if n == 1 << alpha:
        return ((n, m),)
    if m + n > q2:
        out = dict(_tensor_blocks(q2 - n, q2 - m))
        out[q2] = out.get(q2, 0) + (m + n - q2)
        return tuple(sorted(out.items()))
    inner = _tensor_blocks(m, q2 - n)
    return tuple(sorted((q2 - d, c) for d, c in inner))


def tensor_blocks(m: int, n: int) -> JordanType:
    """Jordan type of the tensor product of single blocks of sizes m and n.

    Recursion on the least power of two above max(m, n): either the product
    splits off full-size blocks, reflects through the power of two, or the
    larger factor is itself a power of two and the answer is immediate.
    """
    if m < 1 or n < 1:
        raise ValueError(f"block sizes must be positive, got ({m}, {n})")
    return JordanType(_tensor_blocks(m, n))


def tensor(j1: JordanType, j2: JordanType) -> JordanType:
    """Jordan type of a tensor product, extended additively from tensor_blocks."""
    out: dict[int, int] = {}
    for d1, m1 in j1.blocks:
        for d2, m2 in j2.blocks:
            k = m1 * m2
            for d, c in _tensor_blocks(d1, d2):
                out[d] = out.get(d, 0) + k * c
    return JordanType.from_dict(out)


def tensor_square_closed(n: int) -> JordanType:
    """Jordan type of the tensor square of a single block, in closed form.

    Block sizes are the powers of two in the consecutive-ones expansion of n;
    the multiplicity of 2^(e_i) is an alternating sum of the later powers.
    """
    if n <= 0:
        raise ValueError(f"tensor_square_closed requires a positive integer, got {n}")
    exps = consecutive_ones(n).exponents()
    k = len(exps)
    out = {}
    for i in range(k):
        mult = 1 << exps[i]
        for j in range(i + 1, k):
            sign = -1 if (i + j + 1) % 2 else 1
            mult -= sign * (1 << (exps[j] + 1))
        out[1 << exps[i]] = mult
    return JordanType.from_dict(out)


def unique_odd_block(m: int, n: int) -> int:
    """The unique odd block size in the tensor product of odd-size blocks.

    Found by scanning the computed decomposition; its multiplicity is
    checked to be one.
    """
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"unique_odd_block requires odd block sizes, got ({m}, {n})")
    odd = [(d, c) for d, c in _tensor_blocks(m, n) if d % 2]
    if len(odd) != 1 or odd[0][1] != 1:
        raise RuntimeError(f"expected exactly one odd block of multiplicity 1 in {m} x {n}, got {odd}")
    return odd[0][0]


def odd_block_from_binary_digits(m: int, n: int) -> int:
    """Conjectural digit formula for the odd block size of unique_odd_block.

    Stated without proof in the source material; kept only so tests can
    cross-check it against the scan.  Not used by any computation.
    """
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"requires odd block sizes, got ({m}, {n})")
    if m > n:
        m, n = n, m
    total = n
    i = 1
    while m >> i:
        if (m >> i) & 1:
            total += -(1 << i) if (n >> i) & 1 else (1 << i)
        i += 1
    return total


@lru_cache(maxsize=None)
def _wedge_block(n: int) -> tuple[tuple[int, int], ...]:
    if n <= 1:
        return ()
    q = 1 << (n - 1).bit_length()  # least power of two with q/2 < n <= q
    out = dict(_wedge_block(q - n))
    if n - q // 2 - 1 > 0:
        out[q] = out.get(q, 0) + (n - q // 2 - 1)
    d = 3 * q // 2 - n
    out[d] = out.get(d, 0) + 1
    return tuple(sorted(out.items()))


def wedge_block(n: int) -> JordanType:
    """Jordan type of the exterior square of a single block of size n.

    Recursion reflecting n through the least power of two q with
    q/2 < n <= q; dimension n(n-1)/2.
    """
    if n <= 0:
        raise ValueError(f"wedge_block requires a positive block size, got {n}")
    return JordanType(_wedge_block(n))


def wedge_square(j: JordanType) -> JordanType:
    """Jordan type of the exterior square of a sum of blocks.

    Each size d of multiplicity m contributes m exterior squares of a single
    d-block plus C(m, 2) copies of the d x d tensor product; distinct sizes
    contribute their pairwise tensor products.
    """
    out: dict[int, int] = {}

    def accumulate(pairs, k):
        for d, c in pairs:
            out[d] = out.get(d, 0) + k * c

    blocks = j.blocks
    for i, (d1, m1) in enumerate(blocks):
        accumulate(_wedge_block(d1), m1)
        if m1 > 1:
            accumulate(_tensor_blocks(d1, d1), m1 * (m1 - 1) // 2)
        for d2, m2 in blocks[i + 1:]:
            accumulate(_tensor_blocks(d1, d2), m1 * m2)
    return JordanType.from_dict(out)


def restrict_power(j: JordanType, alpha: int) -> JordanType:
    """Jordan type of the 2^alpha-th power of the operator on the same space.

    A block of size a*2^alpha + r splits into r blocks of size a+1 and
    2^alpha - r blocks of size a.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    q = 1 << alpha
    out: dict[int, int] = {}
    for d, m in j.blocks:
        a, r = divmod(d, q)
        if r:
            out[a + 1] = out.get(a + 1, 0) + r * m
        if a:
            out[a] = out.get(a, 0) + (q - r) * m
    return JordanType.from_dict(out)


def induce_power(j: JordanType, alpha: int) -> JordanType:
    """Jordan type induced along the index-2^alpha cyclic subgroup: sizes scale by 2^alpha."""
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    return JordanType(tuple((d << alpha, m) for d, m in j.blocks))


def gcd_valuation(sizes) -> int:
    """nu2 of the gcd of a non-empty collection of positive integers."""
    g = 0
    for d in sizes:
        g = gcd(g, d)
    return nu2(g)
