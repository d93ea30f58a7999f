"""Binary linear codes as packed bit matrices, plus the code constructions.

Rows and codewords are bit vectors packed LSB-first: column j of a row is
bit j of its int form (or bit j%64 of word j//64 in packed-array form).

The central construction takes the first-order Reed-Muller generator over a
field's element order and stacks bent coordinate tables on top; a code built
that way has dimension 2m + 1 + ell and, exactly when the stacked tables
form a bent vectorial function, the five-weight distribution checked by
``check_bent_enumerator``.

Enumeration guard: anything that walks all 2^k codewords first checks k
against ``enumeration_budget()`` (default 28, overridable through the
BENTCODES_BUDGET environment variable) and refuses with DimensionTooLarge
beyond it.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bentvec import VectorialFunction
from .boolfun import BINARY_SCHEME, FIELD_SCHEME, TruthTable, enumerate_bent_functions
from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    NonIntegerResult,
    NotACodeword,
    NotADivisor,
    SchemeMismatch,
)
from .gf2e import GF2Field, poly_degree, poly_divmod

DEFAULT_BUDGET_BITS = 28


def enumeration_budget() -> int:
    """Max dimension k for which 2**k-codeword walks are allowed."""
    raw = os.environ.get("BENTCODES_BUDGET", "").strip()
    if not raw:
        return DEFAULT_BUDGET_BITS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"BENTCODES_BUDGET must be an int, got {raw!r}") from None


def _check_budget(k: int, why: str) -> None:
    limit = enumeration_budget()
    if k > limit:
        raise DimensionTooLarge(
            f"{why} needs 2^{k} codewords; budget is 2^{limit} "
            f"(raise BENTCODES_BUDGET to allow)"
        )


# ---------------------------------------------------------------- bit matrices

class BitMatrix:
    """A packed 0/1 matrix with optional coordinate-order metadata.

    ``scheme``/``field`` record how columns are indexed when the matrix
    came from a truth-table context, so code construction can refuse to
    stack rows whose column orders disagree.
    """

    __slots__ = ("ncols", "words", "scheme", "field")

    def __init__(self, words: np.ndarray, ncols: int, scheme=None, field=None):
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.ndim != 2:
            raise ValueError("words must be 2-D")
        if words.shape[1] != max(1, -(-ncols // 64)):
            raise ValueError("word count does not match ncols")
        words.setflags(write=False)
        self.words = words
        self.ncols = ncols
        self.scheme = scheme
        self.field = field

    @classmethod
    def from_int_rows(cls, rows, ncols: int, scheme=None, field=None) -> "BitMatrix":
        return cls(_kernels.ints_to_rows(list(rows), ncols), ncols, scheme, field)

    @classmethod
    def from_bit_array(cls, bits, scheme=None, field=None) -> "BitMatrix":
        bits = np.asarray(bits, dtype=np.uint8)
        return cls(_kernels.pack_rows(bits), bits.shape[1], scheme, field)

    @classmethod
    def from_truth_tables(cls, tables) -> "BitMatrix":
        tables = list(tables)
        if not tables:
            raise ValueError("need at least one table")
        first = tables[0]
        for t in tables[1:]:
            if t.n != first.n or t.scheme != first.scheme or t.field != first.field:
                raise SchemeMismatch("tables disagree on coordinate order")
        bits = np.stack([t.bits for t in tables])
        return cls.from_bit_array(bits, scheme=first.scheme, field=first.field)

    @property
    def nrows(self) -> int:
        return self.words.shape[0]

    def int_rows(self) -> list[int]:
        return _kernels.rows_to_ints(self.words)

    def bit_array(self) -> np.ndarray:
        return _kernels.unpack_rows(self.words, self.ncols)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.ncols != self.ncols:
            raise DimensionMismatch(
                f"cannot stack {self.ncols}-column and {other.ncols}-column rows"
            )
        if (
            self.scheme is not None
            and other.scheme is not None
            and (self.scheme != other.scheme or self.field != other.field)
        ):
            raise SchemeMismatch("cannot stack rows with different column orders")
        scheme = self.scheme if self.scheme is not None else other.scheme
        field = self.field if self.field is not None else other.field
        return BitMatrix(
            np.vstack([self.words, other.words]), self.ncols, scheme, field
        )

    def to_text(self) -> str:
        lines = ["".join("01"[b] for b in row) for row in self.bit_array()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, scheme=None, field=None) -> "BitMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("no matrix rows in text")
        width = len(lines[0])
        rows = []
        for ln in lines:
            if len(ln) != width or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix row {ln!r}")
            rows.append([int(ch) for ch in ln])
        return cls.from_bit_array(np.array(rows, dtype=np.uint8), scheme, field)

    def hex_rows(self) -> list[str]:
        width = max(1, (self.ncols + 3) // 4)
        return [format(v, f"0{width}x") for v in self.int_rows()]

    @classmethod
    def from_hex_rows(cls, rows, ncols: int, scheme=None, field=None) -> "BitMatrix":
        return cls.from_int_rows([int(r, 16) for r in rows], ncols, scheme, field)

    def __eq__(self, other):
        return (
            isinstance(other, BitMatrix)
            and self.ncols == other.ncols
            and bool(np.array_equal(self.words, other.words))
        )

    def __repr__(self):
        return f"BitMatrix({self.nrows}x{self.ncols})"


# ---------------------------------------------------------------- RREF over GF(2)

def _rref_pivots(rows: list[int]) -> dict[int, int]:
    """Reduced row-echelon pivots: {pivot column: row}, pivot = lowest set bit."""
    pivots: dict[int, int] = {}
    for r in rows:
        v = r
        while v:
            c = (v & -v).bit_length() - 1
            p = pivots.get(c)
            if p is None:
                pivots[c] = v
                break
            v ^= p
    for c in sorted(pivots, reverse=True):
        v = pivots[c]
        for c2 in sorted(pivots, reverse=True):
            if c2 <= c:
                break
            if (v >> c2) & 1:
                v ^= pivots[c2]
        pivots[c] = v
    return pivots


def _reduce(v: int, pivots: dict[int, int]) -> int:
    while v:
        c = (v & -v).bit_length() - 1
        p = pivots.get(c)
        if p is None:
            return v
        v ^= p
    return 0


def gf2_rank(rows) -> int:
    return len(_rref_pivots(list(rows)))


# ---------------------------------------------------------------- linear codes

class LinearCode:
    """Span of a generator matrix, with a canonical reduced basis.

    ``basis`` rows are the reduced echelon form sorted by pivot column, so
    message bit j always multiplies the row with the j-th smallest pivot;
    every enumeration order downstream is therefore reproducible.
    """

    __slots__ = ("generators", "length", "dimension", "_pivots", "_basis", "meta")

    def __init__(self, generators: BitMatrix, meta: dict | None = None):
        self.generators = generators
        self.length = generators.ncols
        self._pivots = _rref_pivots(generators.int_rows())
        self.dimension = len(self._pivots)
        rows = [self._pivots[c] for c in sorted(self._pivots)]
        self._basis = BitMatrix.from_int_rows(
            rows, self.length, generators.scheme, generators.field
        )
        self.meta = dict(meta or {})

    @property
    def basis(self) -> BitMatrix:
        return self._basis

    def residue(self, v: int) -> int:
        """Remainder of v after reduction by the basis; 0 iff v is a codeword."""
        return _reduce(v, self._pivots)

    def contains(self, v: int) -> bool:
        return self.residue(v) == 0

    def __repr__(self):
        return f"LinearCode(n={self.length}, k={self.dimension})"


def linear_code(generators: BitMatrix, meta: dict | None = None) -> LinearCode:
    return LinearCode(generators, meta)


def dual_basis(C: LinearCode) -> BitMatrix:
    """Basis of the dual code, from the nullspace of the reduced basis."""
    pivots = C._pivots
    free = [c for c in range(C.length) if c not in pivots]
    rows = []
    for f in free:
        v = 1 << f
        for c, row in pivots.items():
            if (row >> f) & 1:
                v |= 1 << c
        rows.append(v)
    return BitMatrix.from_int_rows(rows, C.length)


# ---------------------------------------------------------------- constructions

def rm1_generator(field: GF2Field) -> BitMatrix:
    """First-order Reed-Muller generator over the field's element order.

    Row 0 is all-one; row j+1 evaluates x -> tr(g^j * x) at every element,
    with columns ordered 0, 1, g, g^2, ...  Spans a [2^n, n+1, 2^(n-1)]
    code.
    """
    n = field.degree
    values = field.element_values()
    rows = np.empty((n + 1, len(values)), dtype=np.uint8)
    rows[0] = 1
    for j in range(n):
        w = field.pow(field.generator, j)
        rows[j + 1] = [field.trace_bit(field.mul(w, x)) for x in values]
    return BitMatrix.from_bit_array(rows, scheme=FIELD_SCHEME, field=field)


def rm1_tuple_generator(n: int) -> BitMatrix:
    """First-order Reed-Muller generator in tuple coordinate order.

    Row 0 is all-one; row k evaluates the projection x_k, with x_1 taken
    from the most significant index bit.  Same code as :func:`rm1_generator`
    up to column order.
    """
    idx = np.arange(1 << n, dtype=np.int64)
    rows = np.empty((n + 1, 1 << n), dtype=np.uint8)
    rows[0] = 1
    for k in range(1, n + 1):
        rows[k] = (idx >> (n - k)) & 1
    return BitMatrix.from_bit_array(rows, scheme=BINARY_SCHEME)


def build_code(G0: BitMatrix, components, meta: dict | None = None) -> LinearCode:
    """Stack coordinate truth tables on a base generator matrix.

    ``components`` is a VectorialFunction or an iterable of TruthTable.

    Raises
    ------
    DimensionMismatch
        If a table's 2**n length differs from G0's column count.
    SchemeMismatch
        If tables and G0 declare different column orders.
    """
    if isinstance(components, VectorialFunction):
        tables = list(components.components)
    else:
        tables = list(components)
    if not tables:
        raise ValueError("need at least one component table")
    rows = BitMatrix.from_truth_tables(tables)
    if rows.ncols != G0.ncols:
        raise DimensionMismatch(
            f"component length {rows.ncols} vs {G0.ncols} columns in G0"
        )
    full_meta = {"components": len(tables)}
    full_meta.update(meta or {})
    return LinearCode(G0.vstack(rows), full_meta)


def cyclic_code(n: int, check_poly: int, meta: dict | None = None) -> LinearCode:
    """Cyclic code of length n with the given check polynomial.

    The generator polynomial is (x^n + 1) / check_poly; generator rows are
    its first deg(check_poly) cyclic shifts.

    Raises
    ------
    NotADivisor
        If the check polynomial does not divide x^n + 1.
    """
    if n < 1:
        raise ValueError("length must be positive")
    modulus = (1 << n) | 1
    g, r = poly_divmod(modulus, check_poly)
    if r:
        raise NotADivisor(
            f"check polynomial {check_poly:#x} does not divide x^{n} + 1"
        )
    k = poly_degree(check_poly)
    rows = [g << j for j in range(k)]
    full_meta = {"construction": "cyclic", "length": n, "check_poly": check_poly}
    full_meta.update(meta or {})
    return LinearCode(BitMatrix.from_int_rows(rows, n), full_meta)


def extend_code(C: LinearCode) -> LinearCode:
    """Append an overall parity column (the new last coordinate)."""
    rows = [r | ((r.bit_count() & 1) << C.length) for r in C.generators.int_rows()]
    meta = dict(C.meta)
    meta["extended"] = True
    return LinearCode(BitMatrix.from_int_rows(rows, C.length + 1), meta)


# ---------------------------------------------------------------- weights

class WeightDistribution:
    """Mapping weight -> codeword count for an [n, k] code.

    Counts are exact Python ints; the multiset always totals 2**k and
    contains the zero word once.
    """

    __slots__ = ("n", "k", "_counts")

    def __init__(self, n: int, k: int, counts: dict):
        clean = {}
        total = 0
        for w, c in counts.items():
            w, c = int(w), int(c)
            if c < 0 or not 0 <= w <= n:
                raise NonIntegerResult(f"bad entry A_{w} = {c}")
            if c:
                clean[w] = c
                total += c
        if clean.get(0) != 1:
            raise NonIntegerResult("weight distribution must count the zero word once")
        if total != 1 << k:
            raise NonIntegerResult(f"counts total {total}, expected 2^{k}")
        self.n = n
        self.k = k
        self._counts = dict(sorted(clean.items()))

    def __getitem__(self, w: int) -> int:
        return self._counts.get(w, 0)

    def items(self):
        return self._counts.items()

    @property
    def counts(self) -> dict:
        return dict(self._counts)

    def min_weight(self) -> int:
        """Minimum nonzero weight (the code's minimum distance)."""
        return min(w for w in self._counts if w)

    def __eq__(self, other):
        return (
            isinstance(other, WeightDistribution)
            and (self.n, self.k) == (other.n, other.k)
            and self._counts == other._counts
        )

    def __repr__(self):
        inner = ", ".join(f"{w}: {c}" for w, c in self._counts.items())
        return f"WeightDistribution(n={self.n}, k={self.k}, {{{inner}}})"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "counts": {str(w): str(c) for w, c in self._counts.items()},
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "WeightDistribution":
        return cls(
            int(d["n"]),
            int(d["k"]),
            {int(w): int(c) for w, c in d["counts"].items()},
        )


def weight_distribution(C: LinearCode) -> WeightDistribution:
    """Exact weight distribution by walking all 2**k codewords."""
    _check_budget(C.dimension, f"weight distribution of [{C.length},{C.dimension}]")
    hist = _kernels.weight_histogram(C.basis.words, C.length)
    counts = {w: int(c) for w, c in enumerate(hist) if c}
    return WeightDistribution(C.length, C.dimension, counts)


def codewords_of_weight(C: LinearCode, w: int) -> BitMatrix:
    """All codewords of one weight, packed, in message order."""
    _check_budget(C.dimension, f"codeword collection in [{C.length},{C.dimension}]")
    words = _kernels.words_of_weight(C.basis.words, C.length, w)
    return BitMatrix(words, C.length)


def min_weight_codewords(C: LinearCode) -> BitMatrix:
    """All codewords of minimum nonzero weight, in message order."""
    return codewords_of_weight(C, weight_distribution(C).min_weight())


def span_equals(C: LinearCode, vectors: BitMatrix) -> bool:
    """True when the rows generate C exactly.

    Raises
    ------
    NotACodeword
        If some row is not even inside C.
    """
    ints = vectors.int_rows()
    for i, v in enumerate(ints):
        if not C.contains(v):
            raise NotACodeword(f"row {i} is outside the code")
    return gf2_rank(ints) == C.dimension


# ---------------------------------------------------------------- certificates

def bent_enumerator(m: int, ell: int) -> WeightDistribution:
    """The five-weight distribution certifying a bent-built [2^2m, 2m+1+ell].

    Weights 0, 2^(2m-1) - 2^(m-1), 2^(2m-1), 2^(2m-1) + 2^(m-1), 2^2m with
    counts 1, (2^ell - 1)2^2m, 2(2^2m - 1), (2^ell - 1)2^2m, 1.
    """
    if m < 1 or ell < 1:
        raise ValueError("need m >= 1 and ell >= 1")
    n = 1 << (2 * m)
    half = n >> 1
    off = 1 << (m - 1)
    side = ((1 << ell) - 1) * n
    counts = {0: 1, half - off: side, half: 2 * (n - 1), half + off: side, n: 1}
    return WeightDistribution(n, 2 * m + 1 + ell, counts)


def check_bent_enumerator(
    wd: WeightDistribution, m: int | None = None, ell: int | None = None
) -> bool:
    """Exact comparison against :func:`bent_enumerator`.

    With m and ell omitted they are inferred from (n, k) = (2^2m,
    2m + 1 + ell); inference failing means the answer is False.
    """
    if m is None:
        b = wd.n.bit_length() - 1
        if wd.n != 1 << b or b % 2:
            return False
        m = b // 2
    if ell is None:
        ell = wd.k - 2 * m - 1
    if ell < 1 or m < 1:
        return False
    return wd == bent_enumerator(m, ell)


def macwilliams_dual(wd: WeightDistribution) -> WeightDistribution:
    """Dual weight distribution through the MacWilliams identity.

    Exact integer arithmetic: B_j = 2^-k * sum_i A_i K_j(i) with Krawtchouk
    values from the three-term recurrence.  Inputs that are not the weight
    distribution of a linear [n, k] code surface as NonIntegerResult.
    """
    n, k = wd.n, wd.k
    size = 1 << k
    entries = list(wd.items())
    # kraw[x] runs over j; build columns per present weight i
    cols = {}
    for i, _ in entries:
        col = [1, n - 2 * i]
        for j in range(1, n):
            nxt = (n - 2 * i) * col[j] - (n - j + 1) * col[j - 1]
            if nxt % (j + 1):
                raise NonIntegerResult(f"Krawtchouk recurrence broke at i={i}, j={j}")
            col.append(nxt // (j + 1))
        cols[i] = col
    counts = {}
    for j in range(n + 1):
        s = sum(a * cols[i][j] for i, a in entries)
        if s % size or s < 0:
            raise NonIntegerResult(
                f"B_{j} = {s}/{size} is not a nonnegative integer"
            )
        if s:
            counts[j] = s // size
    return WeightDistribution(n, n - k, counts)


# ---------------------------------------------------------------- the n=4 census

@functools.cache
def rm1_span_ints(n: int) -> tuple:
    """All 2^(n+1) first-order Reed-Muller codewords, tuple order, as ints."""
    rows = _kernels.rows_to_ints(rm1_tuple_generator(n).words)
    span = [0]
    for r in rows:
        span += [v ^ r for v in span]
    return tuple(sorted(span))


@dataclass(frozen=True)
class BentSpanCensus:
    """The 16-point landscape: weight-6 bent classes and closed triples.

    Two weight-6 bent tables are classmates when they span the same
    [16, 6, 6] code with first-order Reed-Muller; a triple of classes is
    listed when the XOR of members from two of them lands in the third, so
    the union spans a [16, 7, 6] code.
    """

    rm_words: tuple
    class_reps: tuple
    class_members: tuple
    triples: tuple

    def coset_of(self, rep: int) -> tuple:
        """All 32 members of a class's coset, not just the weight-6 ones."""
        return tuple(rep ^ r for r in self.rm_words)


@functools.cache
def bent_span_census() -> BentSpanCensus:
    """Classify all weight-6 bent tables on 4 variables and their triples."""
    rm_words = rm1_span_ints(4)
    bent_ints = [t.as_int() for t in enumerate_bent_functions(4)]
    weight6 = [v for v in bent_ints if v.bit_count() == 6]

    def canon(v: int) -> int:
        return min(v ^ r for r in rm_words)

    classes: dict[int, list] = {}
    for v in weight6:
        classes.setdefault(canon(v), []).append(v)
    reps = tuple(sorted(classes))
    members = tuple(tuple(sorted(classes[r])) for r in reps)

    rep_set = set(reps)
    triples = set()
    for a_idx, a in enumerate(reps):
        for b in reps[a_idx + 1 :]:
            c = canon(a ^ b)
            if c in rep_set and c != a and c != b:
                triples.add(tuple(sorted((a, b, c))))
    return BentSpanCensus(rm_words, reps, members, tuple(sorted(triples)))


def census_16_7_6() -> int:
    """Number of distinct [16, 7, 6] codes spanned by weight-6 bent triples."""
    return len(bent_span_census().triples)


# ---------------------------------------------------------------- serialization

def code_to_json_dict(C: LinearCode) -> dict:
    d = {
        "format": "bentcodes-code",
        "n": C.length,
        "k": C.dimension,
        "scheme": C.generators.scheme,
        "field": None,
        "rows": C.generators.hex_rows(),
        "meta": C.meta,
    }
    f = C.generators.field
    if f is not None:
        d["field"] = {
            "degree": f.degree,
            "modulus": format(f.modulus, "#x"),
            "generator": format(f.generator, "#x"),
        }
    return d


def code_from_json_dict(d: dict) -> LinearCode:
    from .gf2e import make_field

    if d.get("format") != "bentcodes-code":
        raise ValueError("not a bentcodes code record")
    field = None
    if d.get("field"):
        fd = d["field"]
        field = make_field(
            int(fd["degree"]), int(fd["modulus"], 16), int(fd["generator"], 16)
        )
    gens = BitMatrix.from_hex_rows(
        d["rows"], int(d["n"]), scheme=d.get("scheme"), field=field
    )
    return LinearCode(gens, d.get("meta") or {})
