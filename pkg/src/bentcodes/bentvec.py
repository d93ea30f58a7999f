"""Vectorial Boolean functions GF(2)^2m -> GF(2)^ell and bentness.

A vectorial function is stored as its ell coordinate functions.  It is bent
when every nonzero GF(2)-combination of coordinates is a bent Boolean
function; such functions exist only for ell <= m, so construction warns
beyond that bound but still builds the object (the check will simply fail).

Three families of constructions are provided, all defined over GF(2^2m)
with generator g (written as a below):

``gold_basis_family``
    Coordinates f_j(x) = tr(b_j * u * x^(2^i + 1)) for a basis b_1..b_m of
    GF(2^m), with m odd, gcd(i, 2m) = 1 and u outside GF(2^m).  Gives
    ell = m coordinates; the default basis is b_j = g^j (j = 1..m) for the
    subfield generator g.

``gold_trace_family``
    F(x) = tr_{2m/m}(a * x^(2^i + 1)) mapped to GF(2)^m through the power
    basis of GF(2^m).  Needs m > 1, 2m / gcd(i, 2m) even,
    g = gcd(2^i + 1, 2^m + 1) > 1, and a outside the subgroup of g-th
    powers.

``kasami_trace_family``
    Same shape with the exponent d = 2^(2i) - 2^i + 1; needs m odd > 1,
    gcd(i, 2m) = 1, and a outside the cubes.

Gold exponents 2^i + 1 and Kasami exponents 2^(2i) - 2^i + 1 are standard
names; the precondition sets above are exactly what makes each family bent.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels
from .boolfun import FIELD_SCHEME, TruthTable, is_bent
from .errors import (
    BentcodesError,
    IndexOutOfRange,
    OddDimension,
    PreconditionViolated,
    SchemeMismatch,
)
from .gf2e import GF2Field, SubfieldBasis, power_basis


@dataclass(frozen=True)
class VectorialFunction:
    """A tuple of coordinate truth tables over a common domain."""

    components: tuple

    def __post_init__(self):
        comps = self.components
        if not comps:
            raise ValueError("need at least one coordinate function")
        first = comps[0]
        for c in comps[1:]:
            if c.n != first.n or c.scheme != first.scheme or c.field != first.field:
                raise SchemeMismatch("coordinate tables disagree on domain order")
        if first.n % 2:
            raise OddDimension(f"vectorial bent domain needs even n, got {first.n}")
        if len(comps) > first.n // 2:
            warnings.warn(
                f"ell={len(comps)} coordinates on n={first.n} variables can "
                f"never be bent vectorial (ell must stay <= {first.n // 2})",
                stacklevel=3,
            )

    @property
    def n(self) -> int:
        return self.components[0].n

    @property
    def m(self) -> int:
        return self.components[0].n // 2

    @property
    def ell(self) -> int:
        return len(self.components)

    @property
    def scheme(self) -> str:
        return self.components[0].scheme

    @property
    def field(self):
        return self.components[0].field


def vectorial_function(components) -> VectorialFunction:
    return VectorialFunction(tuple(components))


def select_components(F: VectorialFunction, indices) -> VectorialFunction:
    """Restrict to the distinct 1-based coordinate positions in ``indices``.

    Restriction never destroys bentness: the new coordinate combinations
    are a subset of the old ones.
    """
    picked = []
    seen = set()
    for i in indices:
        if not 1 <= i <= F.ell:
            raise IndexOutOfRange(f"component index {i} outside 1..{F.ell}")
        if i in seen:
            raise IndexOutOfRange(f"component index {i} repeated")
        seen.add(i)
        picked.append(F.components[i - 1])
    return VectorialFunction(tuple(picked))


def is_bent_vectorial(F: VectorialFunction) -> bool:
    """Check all 2**ell - 1 nonzero coordinate combinations at once."""
    ell, n = F.ell, F.n
    comp = np.stack([c.binary_order_bits() for c in F.components]).astype(np.int16)
    combos = np.zeros(((1 << ell) - 1, 1 << n), dtype=np.int16)
    # combo c extends combo c with its lowest bit cleared by one coordinate
    for c in range(1, 1 << ell):
        low = (c & -c).bit_length() - 1
        prev = c & (c - 1)
        if prev:
            combos[c - 1] = combos[prev - 1] ^ comp[low]
        else:
            combos[c - 1] = comp[low]
    signs = 1 - 2 * combos
    _kernels.fwht_batch(signs)
    return bool(np.all(np.abs(signs) == 1 << (n // 2)))


# ---------------------------------------------------------------- constructions

def _even_degree_split(field: GF2Field) -> int:
    if field.degree % 2:
        raise PreconditionViolated(
            f"constructions need a field of even degree, got {field.degree}"
        )
    return field.degree // 2


def _subfield_trace_bit(field: GF2Field, y: int, m: int) -> int:
    # absolute trace of GF(2^m), evaluated on a subfield element of the big field
    t = 0
    for i in range(m):
        t ^= field.pow2(y, i)
    return t & 1


def _family_tables(field: GF2Field, exponent: int, coeffs) -> list[TruthTable]:
    """Tables of x -> tr(c * x^exponent), one per coefficient, field scheme."""
    values = field.element_values()
    powers = [field.pow(x, exponent) for x in values]
    tables = []
    for c in coeffs:
        bits = np.fromiter(
            (field.trace_bit(field.mul(c, p)) for p in powers),
            dtype=np.uint8,
            count=len(powers),
        )
        tables.append(TruthTable(field.degree, bits, FIELD_SCHEME, field))
    return tables


def _subfield_family_tables(
    field: GF2Field, m: int, exponent: int, a: int, basis: SubfieldBasis
) -> list[TruthTable]:
    """Tables of x -> tr_{m/1}(b_j * tr_{2m/m}(a * x^exponent)), field scheme."""
    values = field.element_values()
    inner = [field.trace(field.mul(a, field.pow(x, exponent)), m) for x in values]
    tables = []
    for b in basis.elements:
        bits = np.fromiter(
            (_subfield_trace_bit(field, field.mul(b, y), m) for y in inner),
            dtype=np.uint8,
            count=len(inner),
        )
        tables.append(TruthTable(field.degree, bits, FIELD_SCHEME, field))
    return tables


def _verify(F: VectorialFunction, name: str) -> VectorialFunction:
    if not is_bent_vectorial(F):
        raise BentcodesError(
            f"{name} postcondition failed: result is not bent vectorial"
        )
    return F


def gold_basis_family(
    field: GF2Field,
    i: int = 1,
    u: int | None = None,
    basis: SubfieldBasis | None = None,
    verify: bool = True,
) -> VectorialFunction:
    """Coordinates tr(b_j * u * x^(2^i + 1)) over a GF(2^m) basis b_1..b_m.

    Parameters
    ----------
    field : GF2Field
        The field GF(2^2m); m must be odd.
    i : int
        Gold exponent parameter; needs gcd(i, 2m) = 1.
    u : int, optional
        Any element outside GF(2^m); defaults to the field generator.
    basis : SubfieldBasis, optional
        Basis of GF(2^m) over GF(2); defaults to b_j = g^j for j = 1..m,
        g the subfield generator.

    Raises
    ------
    PreconditionViolated
        If m is even, gcd(i, 2m) != 1, or u lies in GF(2^m).  (These do
        not exclude every degenerate u: a u that is itself a (2^i + 1)-th
        power makes some coordinate combination non-bent even though it
        sits outside GF(2^m).  The postcondition check catches those.)
    """
    m = _even_degree_split(field)
    if m % 2 == 0:
        raise PreconditionViolated(f"m must be odd, got m={m}")
    if gcd(i, 2 * m) != 1:
        raise PreconditionViolated(f"need gcd(i, 2m) = 1, got gcd({i}, {2 * m}) = {gcd(i, 2 * m)}")
    if u is None:
        u = field.generator
    if field.in_subfield(u, m):
        raise PreconditionViolated(f"u = {u:#x} lies in GF(2^{m})")
    if basis is None:
        base = power_basis(field, m)
        g = base.elements[1] if m > 1 else base.elements[0]
        basis = SubfieldBasis(
            field, m, tuple(field.mul(g, b) for b in base.elements)
        )
    elif basis.field != field or basis.sub_degree != m:
        raise PreconditionViolated("basis is not a GF(2^m) basis of this field")
    coeffs = [field.mul(b, u) for b in basis.elements]
    F = VectorialFunction(tuple(_family_tables(field, (1 << i) + 1, coeffs)))
    return _verify(F, "gold_basis_family") if verify else F


def gold_trace_family(
    field: GF2Field, i: int = 1, a: int | None = None, verify: bool = True
) -> VectorialFunction:
    """tr_{2m/m}(a * x^(2^i + 1)) as an ell = m vectorial function.

    Raises
    ------
    PreconditionViolated
        If m = 1, if 2m / gcd(i, 2m) is odd, if g = gcd(2^i + 1, 2^m + 1)
        equals 1, or if a lies in the subgroup of g-th powers (those make
        the combination spectrum flat or degenerate instead of bent).
    """
    m = _even_degree_split(field)
    n = 2 * m
    if m <= 1:
        raise PreconditionViolated(f"need m > 1, got m={m}")
    if (n // gcd(i, n)) % 2:
        raise PreconditionViolated(
            f"need 2m/gcd(i, 2m) even, got {n}/{gcd(i, n)} = {n // gcd(i, n)}"
        )
    g = gcd((1 << i) + 1, (1 << m) + 1)
    if g == 1:
        raise PreconditionViolated(
            f"need gcd(2^i + 1, 2^m + 1) > 1, got 1 for i={i}, m={m}"
        )
    if a is None:
        a = field.generator
    if a == 0 or field.discrete_log(a) % g == 0:
        raise PreconditionViolated(
            f"a = {a:#x} is a {g}-th power; pick a outside that subgroup"
        )
    basis = power_basis(field, m)
    F = VectorialFunction(
        tuple(_subfield_family_tables(field, m, (1 << i) + 1, a, basis))
    )
    return _verify(F, "gold_trace_family") if verify else F


def kasami_trace_family(
    field: GF2Field, i: int = 1, a: int | None = None, verify: bool = True
) -> VectorialFunction:
    """tr_{2m/m}(a * x^(2^2i - 2^i + 1)) as an ell = m vectorial function.

    Raises
    ------
    PreconditionViolated
        If m is not an odd integer > 1, gcd(i, 2m) != 1, or a is a cube.
    """
    m = _even_degree_split(field)
    if m <= 1 or m % 2 == 0:
        raise PreconditionViolated(f"m must be odd and > 1, got m={m}")
    if gcd(i, 2 * m) != 1:
        raise PreconditionViolated(
            f"need gcd(i, 2m) = 1, got gcd({i}, {2 * m}) = {gcd(i, 2 * m)}"
        )
    # m odd makes 3 divide 2^m + 1, so the cubes are a proper subgroup
    if a is None:
        a = field.generator
    if a == 0 or field.discrete_log(a) % 3 == 0:
        raise PreconditionViolated(f"a = {a:#x} is a cube; pick a non-cube")
    d = (1 << (2 * i)) - (1 << i) + 1
    basis = power_basis(field, m)
    F = VectorialFunction(tuple(_subfield_family_tables(field, m, d, a, basis)))
    return _verify(F, "kasami_trace_family") if verify else F
