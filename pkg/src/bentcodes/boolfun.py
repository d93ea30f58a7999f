"""Boolean functions on n variables: truth tables, ANF, Walsh spectra.

A truth table records which of two coordinate orders its positions follow,
because the two orders disagree and silent mixing corrupts every spectral
computation downstream:

``binary``
    Position i is the input tuple (x_1, ..., x_n) with x_1 the most
    significant bit of i.  The Walsh-Hadamard butterfly applies directly.

``field``
    Position 0 is the field element 0 and position j >= 1 is g^(j-1) for the
    field generator g.  This is the column order of the code constructions.
    The map from positions to bit patterns is a discrete logarithm, which is
    not GF(2)-linear, so the butterfly must never run on such a table as-is;
    the transform below re-indexes first and maps the result back.

Truth tables built from different schemes (or different fields) refuse to
combine; see SchemeMismatch.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import OddDimension, SchemeMismatch, UnsupportedDimension
from .gf2e import GF2Field

FIELD_SCHEME = "field"
BINARY_SCHEME = "binary"


class TruthTable:
    """Immutable 0/1 table of length 2**n with a declared coordinate order."""

    __slots__ = ("n", "bits", "scheme", "field")

    def __init__(self, n: int, bits, scheme: str, field: GF2Field | None = None):
        if scheme not in (FIELD_SCHEME, BINARY_SCHEME):
            raise ValueError(f"unknown scheme {scheme!r}")
        arr = np.asarray(bits, dtype=np.uint8).copy()
        if arr.shape != (1 << n,):
            raise ValueError(f"need 2^{n} entries, got shape {arr.shape}")
        if arr.max(initial=0) > 1:
            raise ValueError("truth table entries must be 0 or 1")
        if scheme == FIELD_SCHEME:
            if field is None:
                raise ValueError("field scheme requires the field")
            if field.degree != n:
                raise ValueError(
                    f"field degree {field.degree} does not match n={n}"
                )
        arr.setflags(write=False)
        self.n = n
        self.bits = arr
        self.scheme = scheme
        self.field = field if scheme == FIELD_SCHEME else None

    # -------------------------------------------------- constructors

    @classmethod
    def from_int(
        cls, n: int, value: int, scheme: str = BINARY_SCHEME, field=None
    ) -> "TruthTable":
        """Table from a packed int, bit i of the value = position i."""
        if value < 0 or value >> (1 << n):
            raise ValueError(f"value does not fit in 2^{n} bits")
        bits = [(value >> i) & 1 for i in range(1 << n)]
        return cls(n, bits, scheme, field)

    @classmethod
    def from_hex(cls, n: int, text: str, scheme: str = BINARY_SCHEME, field=None):
        return cls.from_int(n, int(text, 16), scheme, field)

    # -------------------------------------------------- accessors

    def as_int(self) -> int:
        v = 0
        for i, b in enumerate(self.bits):
            if b:
                v |= 1 << i
        return v

    def to_hex(self) -> str:
        width = max(1, (1 << self.n) + 3 >> 2)
        return format(self.as_int(), f"0{width}x")

    def weight(self) -> int:
        return int(self.bits.sum())

    def binary_order_bits(self) -> np.ndarray:
        """The same function re-indexed so position = input bit pattern."""
        if self.scheme == BINARY_SCHEME:
            return self.bits
        out = np.empty_like(self.bits)
        out[np.fromiter(self.field.element_values(), dtype=np.int64)] = self.bits
        return out

    # -------------------------------------------------- algebra

    def _compatible(self, other: "TruthTable") -> None:
        if not isinstance(other, TruthTable):
            raise TypeError(f"expected TruthTable, got {type(other).__name__}")
        if self.n != other.n:
            raise SchemeMismatch(f"table sizes differ: n={self.n} vs n={other.n}")
        if self.scheme != other.scheme or self.field != other.field:
            raise SchemeMismatch(
                f"cannot combine {self.scheme!r} table with {other.scheme!r} table"
            )

    def __xor__(self, other: "TruthTable") -> "TruthTable":
        self._compatible(other)
        return TruthTable(self.n, self.bits ^ other.bits, self.scheme, self.field)

    def complement(self) -> "TruthTable":
        return TruthTable(self.n, self.bits ^ 1, self.scheme, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, TruthTable)
            and self.n == other.n
            and self.scheme == other.scheme
            and self.field == other.field
            and bool(np.array_equal(self.bits, other.bits))
        )

    def __hash__(self):
        return hash((self.n, self.scheme, self.field, self.bits.tobytes()))

    def __repr__(self):
        return f"TruthTable(n={self.n}, scheme={self.scheme!r}, weight={self.weight()})"


# ---------------------------------------------------------------- ANF

@dataclass(frozen=True)
class AnfExpression:
    """Algebraic normal form: an XOR of monomials over variables x1..xn.

    A monomial is a frozenset of variable indices; the empty frozenset is
    the constant 1.  Variable x1 is the most significant index bit.
    """

    n: int
    monomials: frozenset

    def __post_init__(self):
        for mono in self.monomials:
            for v in mono:
                if not 1 <= v <= self.n:
                    raise ValueError(f"variable x{v} outside 1..{self.n}")

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def __str__(self):
        if not self.monomials:
            return "0"
        parts = []
        for mono in sorted(self.monomials, key=lambda m: (len(m), sorted(m))):
            parts.append("1" if not mono else "*".join(f"x{v}" for v in sorted(mono)))
        return "+".join(parts)


_TERM_RE = re.compile(r"^(1|x\d+(?:\*x\d+)*)$")


def parse_anf(text: str, n: int | None = None) -> AnfExpression:
    """Parse ``"x1*x6+x2*x5+x3*x4"`` (or ``"1"``, or ``"0"``) into an ANF.

    Repeated monomials cancel, as XOR demands.  When ``n`` is omitted the
    largest variable index present is used.
    """
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty ANF expression")
    monomials: set[frozenset] = set()
    if cleaned != "0":
        for term in cleaned.split("+"):
            if not _TERM_RE.match(term):
                raise ValueError(f"bad ANF term {term!r}")
            mono = (
                frozenset()
                if term == "1"
                else frozenset(int(p[1:]) for p in term.split("*"))
            )
            monomials ^= {mono}
    if n is None:
        n = max((max(m) for m in monomials if m), default=0)
        if n == 0:
            raise ValueError("cannot infer variable count; pass n")
    return AnfExpression(n, frozenset(monomials))


def truth_table_from_anf(expr: AnfExpression) -> TruthTable:
    """Evaluate an ANF on all 2**n tuples; result uses the binary scheme."""
    n = expr.n
    idx = np.arange(1 << n, dtype=np.int64)
    bits = np.zeros(1 << n, dtype=np.uint8)
    for mono in expr.monomials:
        mask = 0
        for v in mono:
            mask |= 1 << (n - v)
        bits ^= ((idx & mask) == mask).astype(np.uint8)
    return TruthTable(n, bits, BINARY_SCHEME)


def univariate_truth_table(
    field: GF2Field, terms, constant: int = 0
) -> TruthTable:
    """Table of f(x) = sum_j tr(c_j * x^(e_j)) + constant, field scheme.

    ``terms`` is an iterable of (coefficient, exponent) pairs with
    coefficients given as element values.  Position j of the result is f at
    the j-th element of ``field.element_values()``.
    """
    pairs = [(int(c), int(e)) for c, e in terms]
    for c, _ in pairs:
        if not 0 <= c < field.order:
            raise ValueError(f"coefficient {c:#x} outside the field")
    values = field.element_values()
    bits = np.empty(1 << field.degree, dtype=np.uint8)
    for j, x in enumerate(values):
        acc = constant & 1
        for c, e in pairs:
            acc ^= field.trace_bit(field.mul(c, field.pow(x, e)))
        bits[j] = acc
    return TruthTable(field.degree, bits, FIELD_SCHEME, field)


# ---------------------------------------------------------------- spectra

@dataclass(frozen=True)
class WalshSpectrum:
    """Walsh transform values, indexed the same way as the source table.

    For the binary scheme, position w is the coefficient at the linear form
    x -> <w, x>.  For the field scheme, position 0 is w = 0 and position
    j >= 1 is w = g^(j-1), matching TruthTable's field order.
    """

    n: int
    scheme: str
    values: tuple

    def max_abs(self) -> int:
        return max(abs(v) for v in self.values)

    def parseval_holds(self) -> bool:
        return sum(v * v for v in self.values) == 1 << (2 * self.n)


def walsh_transform(f: TruthTable) -> WalshSpectrum:
    """Exact Walsh spectrum W(w) = sum_x (-1)^(f(x) + <w, x>).

    Field-scheme tables are re-indexed to tuple order before the butterfly
    and the output is read back through the trace pairing, so the returned
    values line up with the table's own indexing.
    """
    signs = 1 - 2 * f.binary_order_bits().astype(np.int64)
    _kernels.fwht_inplace(signs)
    if f.scheme == BINARY_SCHEME:
        values = signs
    else:
        dual = f.field.dual_index_table()
        pos = np.fromiter(
            (dual[v] for v in f.field.element_values()), dtype=np.int64
        )
        values = signs[pos]
    return WalshSpectrum(f.n, f.scheme, tuple(int(v) for v in values))


def is_bent(f: TruthTable) -> bool:
    """True when every Walsh value has absolute value 2**(n/2).

    Raises
    ------
    OddDimension
        If n is odd; bent functions live on even numbers of variables only.
    """
    if f.n % 2:
        raise OddDimension(f"bentness needs even n, got {f.n}")
    signs = 1 - 2 * f.binary_order_bits().astype(np.int64)
    _kernels.fwht_inplace(signs)
    return bool(np.all(np.abs(signs) == 1 << (f.n // 2)))


def enumerate_bent_functions(n: int = 4) -> list[TruthTable]:
    """All bent functions on n variables, by exhaustive transform sweep.

    Only n = 4 is supported: 2**16 candidate tables is exhaustible, the next
    even dimension is not.  Returns 896 tables sorted by packed int value.
    """
    if n != 4:
        raise UnsupportedDimension("exhaustive bent enumeration only for n=4")
    count = 1 << 16
    idx = np.arange(count, dtype=np.int64)
    bits = ((idx[:, None] >> np.arange(16)[None, :]) & 1).astype(np.int16)
    signs = 1 - 2 * bits
    _kernels.fwht_batch(signs)
    mask = np.all(np.abs(signs) == 4, axis=1)
    return [
        TruthTable(4, bits[i].astype(np.uint8), BINARY_SCHEME)
        for i in np.nonzero(mask)[0]
    ]
