"""Conjugacy classes of unipotent symplectic maps in characteristic two.

In characteristic two the Jordan type alone does not pin down the class of a
unipotent element preserving an alternating form; each block size d carries
an extra bit eps(d), set exactly when b(X^(d-1) v, v) is nonzero for some v
killed by X^d (X = u - 1).  A class is an orthogonal sum of two kinds of
indecomposable pieces: W(d), a hyperbolic pair of two size-d blocks with
eps = 0, and V(d) for even d, a single size-d block with eps = 1.  This
module implements the arithmetic of these tagged types: orthogonal sums with
normalization, tensor products, and restriction/induction along cyclic
subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jordan import (
    JordanType,
    ParseError,
    _tensor_blocks,
    nu2,
    restrict_power,
    unique_odd_block,
)


class SymplecticConstraintError(ValueError):
    """An epsilon-tagged type violates the non-degenerate parity laws."""

    def __init__(self, size: int, message: str):
        self.size = size
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class EpsilonTaggedType:
    """A Jordan type with an epsilon tag per block size.

    Entries are (size, multiplicity, eps) with strictly increasing sizes.
    eps = 1 is only allowed on even sizes.  Degenerate forms are permitted;
    the non-degenerate parity laws live in :class:`SymplecticType`.

    Equality is by entries only, so a plain tagged type compares equal to its
    validated symplectic counterpart.
    """

    entries: tuple[tuple[int, int, int], ...] = ()

    def __eq__(self, other) -> bool:
        if not isinstance(other, EpsilonTaggedType):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __post_init__(self):
        prev = 0
        for d, m, e in self.entries:
            if d <= prev:
                raise ValueError(f"sizes must be positive and strictly increasing, got {d} after {prev}")
            if m < 1:
                raise ValueError(f"multiplicity of size {d} must be positive, got {m}")
            if e not in (0, 1):
                raise ValueError(f"eps tag of size {d} must be 0 or 1, got {e}")
            if e == 1 and d % 2:
                raise ValueError(f"eps = 1 is impossible on odd size {d}")
            prev = d

    def jordan(self) -> JordanType:
        """Forget the tags."""
        return JordanType(tuple((d, m) for d, m, _ in self.entries))

    def dimension(self) -> int:
        return sum(d * m for d, m, _ in self.entries)

    def eps(self, d: int) -> int:
        for size, _, e in self.entries:
            if size == d:
                return e
        return 0

    def is_empty(self) -> bool:
        return not self.entries

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return ",".join(f"{d}_{e}^{m}" if m > 1 else f"{d}_{e}" for d, m, e in self.entries)

    def pretty(self) -> str:
        """Parenthesized rendering matching the published tables, e.g. ``(1_0^2, 2_1)``."""
        if not self.entries:
            return "(0)"
        return "(" + ", ".join(f"{d}_{e}^{m}" if m > 1 else f"{d}_{e}" for d, m, e in self.entries) + ")"

    def to_json(self) -> dict:
        return {"entries": [[d, m, e] for d, m, e in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> EpsilonTaggedType:
        return cls(tuple((int(d), int(m), int(e)) for d, m, e in data["entries"]))

    @classmethod
    def parse(cls, text: str) -> EpsilonTaggedType:
        """Parse the ``d_e^m`` comma-separated grammar, e.g. ``2_0^2,8_1``."""
        return _parse_tagged(text, cls)


class SymplecticType(EpsilonTaggedType):
    """An epsilon-tagged type satisfying the non-degenerate parity laws.

    eps(d) = 0 forces even multiplicity (an odd count of blocks of one size
    cannot be paired off hyperbolically), and eps(d) = 1 forces d even.  Such
    a type is exactly the class datum of a unipotent element of a symplectic
    group: size d with eps 0 stands for W(d)^(m/2), with eps 1 for V(d)^m.
    """

    def __post_init__(self):
        super().__post_init__()
        for d, m, e in self.entries:
            if e == 0 and m % 2:
                raise SymplecticConstraintError(
                    d, f"size {d} has odd multiplicity {m} with eps = 0; odd multiplicity forces eps = 1"
                )

    @classmethod
    def parse(cls, text: str) -> SymplecticType:
        return _parse_tagged(text, cls)


def _parse_tagged(text: str, cls):
    from .jordan import _scan_int, _skip_ws, _strip_parens

    text = _strip_parens(text)
    pos = _skip_ws(text, 0)
    if pos < len(text) and text[pos] == "0":
        tail = _skip_ws(text, pos + 1)
        if tail == len(text):
            return cls(())
        raise ParseError(text, tail, "unexpected input after '0'")
    seen: dict[int, tuple[int, int]] = {}
    while True:
        at = _skip_ws(text, pos)
        d, pos = _scan_int(text, pos, "block size")
        if d == 0:
            raise ParseError(text, at, "block size must be positive")
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != "_":
            raise ParseError(text, pos, "expected '_' and an eps tag")
        e, pos = _scan_int(text, pos + 1, "eps tag")
        if e not in (0, 1):
            raise ParseError(text, pos - 1, f"eps tag must be 0 or 1, got {e}")
        m = 1
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == "^":
            m, pos = _scan_int(text, pos + 1, "multiplicity")
            if m == 0:
                raise ParseError(text, pos - 1, "multiplicity must be positive")
        if d in seen:
            raise ParseError(text, at, f"duplicate block size {d}")
        seen[d] = (m, e)
        pos = _skip_ws(text, pos)
        if pos == len(text):
            return cls(tuple((d, m, e) for d, (m, e) in sorted(seen.items())))
        if text[pos] != ",":
            raise ParseError(text, pos, f"expected ',' or end of input, got {text[pos]!r}")
        pos += 1


def validate_symplectic(t: EpsilonTaggedType) -> SymplecticType:
    """Check the parity laws and return the same data as a SymplecticType."""
    if isinstance(t, SymplecticType):
        return t
    return SymplecticType(t.entries)


def vtype(d: int, count: int = 1) -> SymplecticType:
    """The class of count orthogonal copies of V(d): one size-d block each, eps = 1."""
    if d <= 0 or d % 2:
        raise ValueError(f"V(d) requires an even positive size, got {d}")
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    return SymplecticType(((d, count, 1),))


def wtype(d: int, count: int = 1) -> SymplecticType:
    """The class of count orthogonal copies of W(d): a hyperbolic pair of size-d blocks, eps = 0."""
    if d <= 0:
        raise ValueError(f"W(d) requires a positive size, got {d}")
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    return SymplecticType(((d, 2 * count, 0),))


def merge_tagged(*types: EpsilonTaggedType) -> EpsilonTaggedType:
    """Orthogonal sum at the tagged level: multiplicities add, tags combine by max.

    The tag rule is the normalization V(2d)^a | W(2d)^b = V(2d)^(a+2b) for
    a > 0: one tagged block of a size makes the whole size tagged.
    """
    acc: dict[int, list[int]] = {}
    for t in types:
        for d, m, e in t.entries:
            slot = acc.setdefault(d, [0, 0])
            slot[0] += m
            slot[1] |= e
    return EpsilonTaggedType(tuple((d, m, e) for d, (m, e) in sorted(acc.items())))


def orthogonal_sum(*types: SymplecticType) -> SymplecticType:
    """Orthogonal sum of symplectic classes, eagerly normalized."""
    return validate_symplectic(merge_tagged(*types))


def _summands(s: SymplecticType) -> list[tuple[str, int, int]]:
    """Indecomposable summands of a class as ('W'|'V', size, count) triples."""
    out = []
    for d, m, e in s.entries:
        if e:
            out.append(("V", d, m))
        else:
            out.append(("W", d, m // 2))
    return out


def _pair_product(kind1: str, d1: int, kind2: str, d2: int) -> dict[int, list[int]]:
    """Tagged type of the product of two indecomposables, as {size: [mult, eps]}."""
    if kind1 == "V" and kind2 == "V":
        h1, h2 = d1 // 2, d2 // 2
        inner = _tensor_blocks(h1, h2)
        if nu2(h1) != nu2(h2):
            return {2 * a: [2 * c, 0] for a, c in inner}
        alpha = nu2(h1)
        dj = unique_odd_block(h1 >> alpha, h2 >> alpha) << alpha
        out = {}
        for a, c in inner:
            if a == dj:
                assert c == 1 << alpha, f"tagged block of {d1} x {d2} has multiplicity {c}"
                out[2 * a] = [2 * c, 1]
            else:
                out[2 * a] = [2 * c, 0]
        return out
    if kind1 == "W" and kind2 == "W":
        # both factors hyperbolic: every block doubles and stays untagged
        return {a: [4 * c, 0] for a, c in _tensor_blocks(d1, d2)}
    # one hyperbolic factor absorbs the tag of the other
    return {a: [2 * c, 0] for a, c in _tensor_blocks(d1, d2)}


def tensor_bilinear(s1: SymplecticType, s2: SymplecticType) -> SymplecticType:
    """Class of the tensor product of two symplectic classes.

    Expands both factors into indecomposables, multiplies pairwise, and
    recombines.  Any hyperbolic factor makes the product hyperbolic; a
    product of two tagged single-block pieces is hyperbolic except at the
    one size whose halved value shares the 2-adic valuation of both factors,
    which stays tagged.
    """
    acc: dict[int, list[int]] = {}
    for kind1, d1, c1 in _summands(s1):
        for kind2, d2, c2 in _summands(s2):
            k = c1 * c2
            for a, (m, e) in _pair_product(kind1, d1, kind2, d2).items():
                slot = acc.setdefault(a, [0, 0])
                slot[0] += k * m
                slot[1] |= e
    return SymplecticType(tuple((d, m, e) for d, (m, e) in sorted(acc.items())))


def restrict_bilinear(s: SymplecticType, alpha: int) -> SymplecticType:
    """Class of the 2^alpha-th power of the element on the same formed space.

    W(d) restricts to the hyperbolic type over the restricted Jordan type of
    a size-d block.  V(2d) stays tagged when 2^alpha divides d; otherwise it
    splits into hyperbolic pieces W(a+1)^r | W(a)^(2^(alpha-1)-r) where
    d = a*2^(alpha-1) + r, with W(0) dropped.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be positive, got {alpha}")
    half = 1 << (alpha - 1)
    acc: dict[int, list[int]] = {}

    def put(size, mult, eps):
        if size == 0 or mult == 0:
            return
        slot = acc.setdefault(size, [0, 0])
        slot[0] += mult
        slot[1] |= eps

    for kind, d, count in _summands(s):
        if kind == "W":
            for a, m in restrict_power(JordanType(((d, 1),)), alpha).blocks:
                put(a, 2 * m * count, 0)
        else:
            h = d // 2
            if h % (1 << alpha) == 0:
                put(h // half, (1 << alpha) * count, 1)
            else:
                a, r = divmod(h, half)
                put(a + 1, 2 * r * count, 0)
                put(a, 2 * (half - r) * count, 0)
    return SymplecticType(tuple((d, m, e) for d, (m, e) in sorted(acc.items())))


def induce_bilinear(s: SymplecticType, alpha: int) -> SymplecticType:
    """Class induced along the index-2^alpha cyclic subgroup: sizes scale by 2^alpha."""
    if alpha < 1:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return SymplecticType(tuple((d << alpha, m, e) for d, m, e in s.entries))


def alpha_of(s: SymplecticType) -> int:
    """2-adic valuation of the gcd of block sizes, halving the tagged ones."""
    from math import gcd

    g = 0
    for d, _, e in s.entries:
        g = gcd(g, d // 2 if e else d)
    if g == 0:
        raise ValueError("alpha_of requires a non-empty type")
    return nu2(g)
