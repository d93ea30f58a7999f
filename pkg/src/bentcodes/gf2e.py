"""Arithmetic in GF(2^n) for 1 <= n <= 16.

Elements are Python ints in [0, 2^n): bit i is the coefficient of x^i in the
polynomial-basis representation, where x is the class of the indeterminate
modulo the field's defining polynomial.  Multiplication runs on log/exp
tables built once per field, so a field instance costs O(2^n) memory and
every product afterwards is two lookups.

Polynomials over GF(2) use the same packing (bit i = coefficient of degree
i), so the modulus x^4 + x + 1 is the int 0b10011.

Enumeration order matters downstream: ``element_values`` lists 0 first and
then successive powers of the field's generator.  Code constructions index
their columns by this order, so the generator is part of a field's identity
and two fields compare equal only when degree, modulus and generator all
agree.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from math import gcd

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidBasis,
    InvalidSubfield,
    NotAGenerator,
    ReducibleModulus,
)

MAX_DEGREE = 16

# One primitive polynomial per degree; x itself generates for all of these.
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


# ---------------------------------------------------------------- polynomials

def poly_degree(p: int) -> int:
    """Degree of a packed GF(2) polynomial; -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two packed polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_divmod(num: int, den: int) -> tuple[int, int]:
    """Quotient and remainder of packed polynomials.

    Raises
    ------
    DivisionByZero
        If ``den`` is the zero polynomial.
    """
    if den == 0:
        raise DivisionByZero("polynomial division by zero")
    q = 0
    dd = poly_degree(den)
    r = num
    while poly_degree(r) >= dd:
        shift = poly_degree(r) - dd
        q ^= 1 << shift
        r ^= den << shift
    return q, r


def poly_divide(num: int, den: int) -> tuple[int, int]:
    """Alias of :func:`poly_divmod`; kept as the documented public name."""
    return poly_divmod(num, den)


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a


def _poly_mulmod(a: int, b: int, mod: int) -> int:
    return poly_divmod(poly_mul(a, b), mod)[1]


def poly_is_irreducible(p: int) -> bool:
    """True when the packed polynomial is irreducible over GF(2).

    Uses the Rabin test: x^(2^n) == x (mod p) together with
    gcd(x^(2^(n/q)) - x, p) == 1 for every prime divisor q of n.
    """
    n = poly_degree(p)
    if n <= 0:
        return False
    if n == 1:
        return True
    if p & 1 == 0:  # divisible by x
        return False

    def x_to_pow2(k: int) -> int:
        t = 0b10  # the polynomial x
        for _ in range(k):
            t = _poly_mulmod(t, t, p)
        return t

    if x_to_pow2(n) != 0b10:
        return False
    m = n
    primes = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    for q in primes:
        if poly_gcd(x_to_pow2(n // q) ^ 0b10, p) != 1:
            return False
    return True


_FACTOR_RE = re.compile(r"\(([^()]*)\)")
_XTERM_RE = re.compile(r"^(?:1|x(?:\^(\d+))?)$")


def _parse_x_poly(text: str) -> int:
    v = 0
    for raw in text.split("+"):
        mt = _XTERM_RE.match(raw.strip())
        if not mt:
            raise ValueError(f"bad polynomial term {raw.strip()!r}")
        term = raw.strip()
        v ^= 1 << (0 if term == "1" else int(mt.group(1) or 1))
    return v


def parse_poly_spec(spec: str) -> int:
    """Parse a polynomial given as hex mask, decimal mask, exponent list,
    or symbolic ``x`` notation.

    Accepted forms: ``"0x46f"``, ``"1135"``, ``"10,6,5,3,2,1,0"``,
    ``"x^4+x+1"``, and parenthesized products ``"(x+1)(x^3+x^2+1)"``.
    """
    s = spec.strip().lower()
    if not s:
        raise ValueError("empty polynomial spec")
    if s.startswith("0x"):
        return int(s, 16)
    if "(" in s:
        factors = _FACTOR_RE.findall(s)
        if not factors or _FACTOR_RE.sub("", s).strip():
            raise ValueError(f"malformed polynomial product {spec!r}")
        v = 1
        for f in factors:
            v = poly_mul(v, _parse_x_poly(f))
        return v
    if "x" in s:
        return _parse_x_poly(s)
    if "," in s:
        v = 0
        for part in s.split(","):
            e = int(part.strip())
            if e < 0:
                raise ValueError(f"negative exponent in {spec!r}")
            v |= 1 << e
        return v
    v = int(s, 10)
    if v < 0:
        raise ValueError(f"negative polynomial mask {spec!r}")
    return v


def format_poly(p: int) -> str:
    """Human-readable form, highest degree first: ``x^4 + x + 1``."""
    if p == 0:
        return "0"
    terms = []
    for e in range(poly_degree(p), -1, -1):
        if (p >> e) & 1:
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
    return " + ".join(terms)


def _bit_rank(values) -> int:
    pivots: list[int] = []
    for v in values:
        for p in pivots:
            v = min(v, v ^ p)
        if v:
            pivots.append(v)
    return len(pivots)


# ---------------------------------------------------------------- the field

class GF2Field:
    """GF(2^degree) with fixed modulus and a fixed generator.

    Parameters
    ----------
    degree : int
        Extension degree n, 1 <= n <= 16.
    modulus : int
        Packed irreducible polynomial of that degree.
    generator : int
        Element whose powers enumerate all 2^n - 1 nonzero elements.

    Notes
    -----
    Instances are immutable.  All element-level methods take and return
    plain ints; :class:`FieldElement` wraps them with operators for API use.
    """

    __slots__ = (
        "degree",
        "modulus",
        "generator",
        "order",
        "_exp",
        "_log",
        "_trace_mask",
        "_values",
        "_dual_table",
    )

    def __init__(self, degree: int, modulus: int, generator: int):
        if not 1 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
        if poly_degree(modulus) != degree:
            raise ReducibleModulus(
                f"modulus {format_poly(modulus)} does not have degree {degree}"
            )
        if not poly_is_irreducible(modulus):
            raise ReducibleModulus(f"{format_poly(modulus)} is reducible over GF(2)")
        q = 1 << degree
        if not 0 < generator < q:
            raise NotAGenerator(f"generator {generator:#x} outside the field")

        self.degree = degree
        self.modulus = modulus
        self.generator = generator
        self.order = q

        exp = [0] * (q - 1)
        log = [-1] * q
        t = 1
        for i in range(q - 1):
            if log[t] != -1:
                raise NotAGenerator(
                    f"{generator:#x} has multiplicative order {i}, need {q - 1}"
                )
            exp[i] = t
            log[t] = i
            t = _poly_mulmod(t, generator, modulus)
        if t != 1:  # cannot happen for a unit, kept as a consistency check
            raise NotAGenerator(f"{generator:#x} does not close after {q - 1} steps")
        self._exp = exp
        self._log = log

        mask = 0
        for j in range(degree):
            if self._trace_slow(1 << j):
                mask |= 1 << j
        self._trace_mask = mask
        self._values = (0, *exp)
        self._dual_table = None

    # -------------------------------------------------- identity

    def _key(self):
        return (self.degree, self.modulus, self.generator)

    def __eq__(self, other):
        return isinstance(other, GF2Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"GF2Field(degree={self.degree}, modulus={self.modulus:#x}, "
            f"generator={self.generator:#x})"
        )

    # -------------------------------------------------- int-level arithmetic

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def pow2(self, a: int, k: int) -> int:
        """Frobenius power a^(2^k)."""
        if a == 0:
            return 0
        return self._exp[(self._log[a] << k) % (self.order - 1)]

    def _trace_slow(self, a: int) -> int:
        t = 0
        for i in range(self.degree):
            t ^= self.pow2(a, i)
        return t

    def trace_bit(self, a: int) -> int:
        """Absolute trace tr_{n/1}(a) as 0 or 1."""
        return (a & self._trace_mask).bit_count() & 1

    def trace(self, a: int, target_degree: int = 1) -> int:
        """Relative trace tr_{n/target}(a); result lies in GF(2^target).

        Raises
        ------
        InvalidSubfield
            If ``target_degree`` does not divide the field degree.
        """
        n = self.degree
        if target_degree <= 0 or n % target_degree:
            raise InvalidSubfield(
                f"GF(2^{target_degree}) is not a subfield of GF(2^{n})"
            )
        if target_degree == 1:
            return self.trace_bit(a)
        t = 0
        for i in range(n // target_degree):
            t ^= self.pow2(a, target_degree * i)
        return t

    def in_subfield(self, a: int, sub_degree: int) -> bool:
        """True when a is fixed by the Frobenius of GF(2^sub_degree)."""
        if sub_degree <= 0 or self.degree % sub_degree:
            return False
        return self.pow2(a, sub_degree) == a

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("order of zero")
        qm1 = self.order - 1
        return qm1 // gcd(qm1, self._log[a])

    def discrete_log(self, a: int) -> int:
        """Exponent i with generator^i = a, for nonzero a."""
        if a == 0:
            raise DivisionByZero("discrete log of zero")
        return self._log[a]

    # -------------------------------------------------- enumeration

    def element_values(self) -> tuple[int, ...]:
        """All 2^n element values: 0 first, then successive generator powers."""
        return self._values

    def element_index(self, a: int) -> int:
        """Position of a value in :meth:`element_values`."""
        if a == 0:
            return 0
        return 1 + self._log[a]

    def dual_index_table(self) -> list[int]:
        """table[a] = bitmask whose bit i is tr(a * x^i).

        This maps an element a to the index, in tuple coordinates, of the
        linear form y -> tr(a*y).  Spectral transforms use it to translate
        between generator-power order and tuple order.
        """
        if self._dual_table is None:
            table = [0] * self.order
            for a in range(1, self.order):
                m = 0
                for i in range(self.degree):
                    if self.trace_bit(self.mul(a, 1 << i)):
                        m |= 1 << i
                table[a] = m
            self._dual_table = table
        return self._dual_table

    # -------------------------------------------------- wrapped elements

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise ValueError(f"{value:#x} is not a {self.degree}-bit element")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific GF2Field, with operator sugar.

    Mixing elements of different fields raises FieldMismatch; equality is
    field-aware.  Addition is XOR of representations.
    """

    field: GF2Field
    value: int

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self, target_degree: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.trace(self.value, target_degree))

    def trace_bit(self) -> int:
        return self.field.trace_bit(self.value)

    def multiplicative_order(self) -> int:
        return self.field.multiplicative_order(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"<{self.value:#x} in GF(2^{self.field.degree})>"


@functools.lru_cache(maxsize=64)
def _build_field(degree: int, modulus: int, generator: int) -> GF2Field:
    return GF2Field(degree, modulus, generator)


def make_field(
    degree: int, modulus: int | None = None, generator: int | None = None
) -> GF2Field:
    """Build (or fetch from cache) GF(2^degree).

    Parameters
    ----------
    degree : int
        Extension degree, 1..16.
    modulus : int, optional
        Packed defining polynomial; defaults to a primitive polynomial from
        DEFAULT_MODULI.
    generator : int, optional
        Candidate generator.  When omitted, the smallest element value with
        full multiplicative order is selected (this is x itself whenever the
        modulus is primitive).

    Raises
    ------
    ReducibleModulus
        If the modulus is not irreducible of the stated degree.
    NotAGenerator
        If an explicit candidate fails to have full order.
    """
    if modulus is None:
        if degree not in DEFAULT_MODULI:
            raise ValueError(f"no default modulus for degree {degree}")
        modulus = DEFAULT_MODULI[degree]
    if generator is not None:
        return _build_field(degree, modulus, generator)
    if degree == 1:
        return _build_field(1, modulus, 1)
    for cand in range(2, 1 << degree):
        try:
            return _build_field(degree, modulus, cand)
        except NotAGenerator:
            continue
        except ReducibleModulus:
            raise
    raise NotAGenerator(f"no generator found for modulus {modulus:#x}")


def enumerate_field(field: GF2Field) -> list[FieldElement]:
    """All elements in canonical order: zero, then powers of the generator."""
    return [FieldElement(field, v) for v in field.element_values()]


def trace(x: FieldElement, target_degree: int = 1) -> FieldElement:
    """Relative trace of a wrapped element down to GF(2^target_degree)."""
    return x.trace(target_degree)


# ---------------------------------------------------------------- subfield bases

@dataclass(frozen=True)
class SubfieldBasis:
    """A GF(2)-basis of the subfield GF(2^sub_degree) inside ``field``.

    Validated at construction: every element must lie in the subfield and
    the elements must be linearly independent over GF(2).
    """

    field: GF2Field
    sub_degree: int
    elements: tuple[int, ...]

    def __post_init__(self):
        d, n = self.sub_degree, self.field.degree
        if d <= 0 or n % d:
            raise InvalidSubfield(f"GF(2^{d}) is not a subfield of GF(2^{n})")
        if len(self.elements) != d:
            raise InvalidBasis(
                f"need {d} elements for a GF(2^{d}) basis, got {len(self.elements)}"
            )
        for e in self.elements:
            if not self.field.in_subfield(e, d):
                raise InvalidBasis(f"{e:#x} is not in GF(2^{d})")
        if _bit_rank(self.elements) != d:
            raise InvalidBasis("elements are linearly dependent over GF(2)")


def subfield_basis(field: GF2Field, sub_degree: int, elements) -> SubfieldBasis:
    """Validate and freeze a subfield basis given as element values."""
    return SubfieldBasis(field, sub_degree, tuple(int(e) for e in elements))


def power_basis(field: GF2Field, sub_degree: int) -> SubfieldBasis:
    """The basis {1, g, g^2, ...} of GF(2^sub_degree), where g generates the
    subfield's multiplicative group as a power of the field generator."""
    n = field.degree
    if sub_degree <= 0 or n % sub_degree:
        raise InvalidSubfield(f"GF(2^{sub_degree}) is not a subfield of GF(2^{n})")
    step = (field.order - 1) // ((1 << sub_degree) - 1)
    g = field.pow(field.generator, step)
    elems = [field.pow(g, j) for j in range(sub_degree)]
    return SubfieldBasis(field, sub_degree, tuple(elems))
