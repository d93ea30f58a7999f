"""Block designs extracted from codeword weight classes, and their checks.

Blocks are supports of codewords, stored as int bitsets over v points.  A
Design enforces simplicity (no repeated blocks), uniform block size, and
no empty block, at construction.

Verification is always by direct counting, never by formula: the 2-design
check builds the point-pair Gram matrix of the incidence, the intersection
spectrum counts pairwise meets, and the symmetric-difference property (SDP)
scans all block triples.  Formula helpers like ``expected_pair_count`` exist
so tests and the CLI can compare counted values against predicted ones.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import (
    BudgetExceeded,
    EmptyWeightClass,
    InvalidDesign,
    NotA2Design,
    WrongSourceDesign,
)
from .lincode import LinearCode, codewords_of_weight, weight_distribution

SDP_BLOCK_CAP = 256


@dataclass(frozen=True)
class DesignParams:
    """Certified parameters of a t-(v, k, lambda) design."""

    t: int
    v: int
    k: int
    lam: int
    b: int
    r: int

    def arithmetic_consistent(self) -> bool:
        """The double-counting identities every 2-design must satisfy."""
        if self.t != 2:
            raise ValueError("identity check implemented for t=2 only")
        return (
            self.r * (self.k - 1) == self.lam * (self.v - 1)
            and self.b * self.k == self.r * self.v
        )


class Design:
    """A simple design: distinct same-size nonempty blocks on v points."""

    __slots__ = ("v", "blocks", "k")

    def __init__(self, v: int, blocks) -> None:
        uniq = sorted(set(int(b) for b in blocks))
        if not uniq:
            raise InvalidDesign("a design needs at least one block")
        if uniq[0] == 0:
            raise InvalidDesign("empty block rejected (need block size >= 1)")
        if uniq[-1] >> v:
            raise InvalidDesign(f"block uses points outside 0..{v - 1}")
        sizes = {b.bit_count() for b in uniq}
        if len(sizes) != 1:
            raise InvalidDesign(f"block sizes not uniform: {sorted(sizes)}")
        self.v = v
        self.blocks = tuple(uniq)
        self.k = sizes.pop()

    @property
    def b(self) -> int:
        return len(self.blocks)

    def packed_blocks(self) -> np.ndarray:
        return _kernels.ints_to_rows(list(self.blocks), self.v)

    def incidence(self) -> np.ndarray:
        """0/1 matrix, rows = blocks, columns = points."""
        return _kernels.unpack_rows(self.packed_blocks(), self.v)

    def __eq__(self, other):
        return (
            isinstance(other, Design)
            and self.v == other.v
            and self.blocks == other.blocks
        )

    def __repr__(self):
        return f"Design(v={self.v}, k={self.k}, b={self.b})"


def design(v: int, blocks) -> Design:
    return Design(v, blocks)


def design_from_codewords(C: LinearCode, w: int) -> Design:
    """Blocks = supports of all weight-w codewords.

    Raises
    ------
    EmptyWeightClass
        If the code has no codeword of weight w.
    """
    words = codewords_of_weight(C, w)
    if words.nrows == 0:
        raise EmptyWeightClass(f"no codeword of weight {w}")
    return Design(C.length, words.int_rows())


# ---------------------------------------------------------------- t-design checks

def verify_2_design(D: Design) -> DesignParams:
    """Certify 2-design-ness by counting every point pair exactly.

    Uses the incidence Gram matrix N^T N; float64 matmul is exact here
    because every entry is an integer count below 2^53.

    Raises
    ------
    NotA2Design
        Carrying a witness point pair with deviating coverage.
    """
    N = D.incidence().astype(np.float64)
    gram = N.T @ N
    counts = np.rint(gram).astype(np.int64)
    off = counts[~np.eye(D.v, dtype=bool)]
    lam = int(off[0])
    if not np.all(off == lam):
        bad = np.argwhere((counts != lam) & ~np.eye(D.v, dtype=bool))[0]
        raise NotA2Design((int(bad[0]), int(bad[1])))
    diag = np.diag(counts)
    r = int(diag[0])
    if not np.all(diag == r):  # cannot happen once pairs are uniform
        p = int(np.argmax(diag != r))
        raise NotA2Design((p, p))
    params = DesignParams(2, D.v, D.k, lam, D.b, r)
    if not params.arithmetic_consistent():
        raise NotA2Design((0, 0))
    return params


def verify_t_design(D: Design, t: int) -> int | None:
    """Brute-force t-design check; returns lambda_t, or None if not uniform.

    Counts blocks over every t-subset of points, so it is the independent
    oracle for the Gram-based check; refuses unreasonably large scans.
    """
    if t < 1 or t > D.k:
        raise ValueError(f"strength t={t} outside 1..{D.k}")
    from math import comb

    if comb(D.v, t) * D.b > 50_000_000:
        raise BudgetExceeded(f"brute-force scan of C({D.v},{t})*{D.b} is too large")
    lam = None
    for points in combinations(range(D.v), t):
        mask = 0
        for p in points:
            mask |= 1 << p
        cnt = sum(1 for blk in D.blocks if blk & mask == mask)
        if lam is None:
            lam = cnt
        elif cnt != lam:
            return None
    return lam


# ---------------------------------------------------------------- intersections

@dataclass(frozen=True)
class IntersectionSpectrum:
    """Pairwise block-intersection counts.

    ``per_block[i]`` maps |B_i meet B_j| -> number of j != i; ``aggregate``
    maps the size to the number of unordered pairs attaining it.
    """

    per_block: tuple
    aggregate: tuple

    def aggregate_dict(self) -> dict:
        return dict(self.aggregate)

    def per_block_dicts(self) -> list[dict]:
        return [dict(p) for p in self.per_block]

    def uniform_profile(self) -> dict | None:
        """The common per-block profile, or None if blocks disagree."""
        first = self.per_block[0]
        return dict(first) if all(p == first for p in self.per_block) else None


def intersection_spectrum(D: Design) -> IntersectionSpectrum:
    hist = _kernels.pairwise_intersection_histogram(D.packed_blocks(), D.k)
    per_block = tuple(
        tuple((int(s), int(c)) for s, c in enumerate(row) if c) for row in hist
    )
    totals = hist.sum(axis=0)
    agg = []
    for s, c in enumerate(totals):
        if c:
            assert c % 2 == 0
            agg.append((int(s), int(c) // 2))
    return IntersectionSpectrum(per_block, tuple(agg))


def sdp_check(D: Design) -> bool:
    """Symmetric-difference property: every XOR of three distinct blocks is
    again a block or a block complement.

    Raises
    ------
    BudgetExceeded
        If the design has more than SDP_BLOCK_CAP blocks (the scan is
        cubic in the block count).
    """
    if D.b > SDP_BLOCK_CAP:
        raise BudgetExceeded(
            f"sdp scan needs {D.b}^3/6 triples; cap is {SDP_BLOCK_CAP} blocks"
        )
    blocks = D.packed_blocks()
    full = (1 << D.v) - 1
    allowed = _kernels.ints_to_rows(
        list(D.blocks) + [full ^ b for b in D.blocks], D.v
    )
    i, _, _ = _kernels.sdp_triple_scan(blocks, allowed)
    return i < 0


def pair_difference_closed(D: Design) -> bool:
    """Weaker pairwise variant: XOR of any two distinct blocks is a block
    or a block complement.  Quadratic scan, no cap needed at our sizes."""
    full = (1 << D.v) - 1
    allowed = set(D.blocks) | {full ^ b for b in D.blocks}
    return all(
        (a ^ b) in allowed for a, b in combinations(D.blocks, 2)
    )


# ---------------------------------------------------------------- derivations

def complement_design(D: Design) -> Design:
    """Replace every block by its complement in the point set."""
    full = (1 << D.v) - 1
    return Design(D.v, [full ^ b for b in D.blocks])


def _split_point_count(v: int) -> int:
    """m with v = 2^2m, or 0 when v has no such form."""
    b = v.bit_length() - 1
    if v != 1 << b or b % 2 or b < 2:
        return 0
    return b // 2


def derived_design(D: Design, block_index: int = 0) -> Design:
    """Restrict to one block: points of B, blocks = meets of the right size.

    For a min-weight design on v = 2^2m points with block size
    2^(2m-1) - 2^(m-1), the meets of size 2^(2m-2) - 2^(m-1) with a fixed
    block B form a quasi-symmetric 2-design on the points of B.  The result
    is verified before being returned: 2^2m - 1 blocks, 2-design with
    lambda = block size - 1, and exactly the two predicted intersection
    sizes 2^(2m-3) - 2^(m-2) and 2^(2m-3) - 2^(m-1).

    Raises
    ------
    WrongSourceDesign
        If the source design does not have that shape, or any of the
        verification steps fails.
    """
    m = _split_point_count(D.v)
    if not m or D.k != (1 << (2 * m - 1)) - (1 << (m - 1)):
        raise WrongSourceDesign(
            f"source must have v = 2^2m points and blocks of size "
            f"2^(2m-1) - 2^(m-1); got v={D.v}, k={D.k}"
        )
    if not 0 <= block_index < D.b:
        raise WrongSourceDesign(f"block index {block_index} outside 0..{D.b - 1}")
    base = D.blocks[block_index]
    meet_size = (1 << (2 * m - 2)) - (1 << (m - 1))
    meets = [
        base & other
        for i, other in enumerate(D.blocks)
        if i != block_index and (base & other).bit_count() == meet_size
    ]
    expected_b = (1 << (2 * m)) - 1
    if len(meets) != expected_b:
        raise WrongSourceDesign(
            f"expected {expected_b} meets of size {meet_size}, found {len(meets)}"
        )

    # renumber the points of B as 0..k-1
    positions = [p for p in range(D.v) if (base >> p) & 1]
    remap = {p: i for i, p in enumerate(positions)}
    new_blocks = []
    for blk in meets:
        nb = 0
        while blk:
            low = (blk & -blk).bit_length() - 1
            nb |= 1 << remap[low]
            blk &= blk - 1
        new_blocks.append(nb)
    out = Design(D.k, new_blocks)
    if out.b != expected_b:
        raise WrongSourceDesign("meets are not pairwise distinct")

    try:
        params = verify_2_design(out)
    except NotA2Design as e:
        raise WrongSourceDesign(f"derived blocks miss 2-design-ness at {e}") from e
    if params.lam != meet_size - 1:
        raise WrongSourceDesign(
            f"derived lambda {params.lam}, expected {meet_size - 1}"
        )
    want = {
        (1 << (2 * m - 3)) - (1 << (m - 2)),
        (1 << (2 * m - 3)) - (1 << (m - 1)),
    }
    got = set(intersection_spectrum(out).aggregate_dict())
    if not got <= want:
        raise WrongSourceDesign(
            f"derived intersection sizes {sorted(got)} not within {sorted(want)}"
        )
    return out


# ---------------------------------------------------------------- predictions

def expected_pair_count(m: int, ell: int) -> int:
    """lambda of the min-weight 2-design of a bent-built code."""
    return ((1 << ell) - 1) * ((1 << (2 * m - 2)) - (1 << (m - 1)))


def expected_replication(m: int, ell: int) -> int:
    """r of the same design: blocks through one point."""
    return ((1 << ell) - 1) * ((1 << (2 * m - 1)) - (1 << (m - 1)))


def expected_intersection_profile(m: int, ell: int) -> dict:
    """Per-block intersection profile of the min-weight design.

    For ell = 1 a single size 2^(2m-2) - 2^(m-1) on all 2^2m - 1 other
    blocks; for ell >= 2 three sizes with multiplicities depending only on
    (m, ell).
    """
    mid = (1 << (2 * m - 2)) - (1 << (m - 1))
    if ell == 1:
        return {mid: (1 << (2 * m)) - 1}
    quarter = 1 << (2 * m - 2)
    half_m = 1 << (m - 2) if m >= 2 else 0
    hi = quarter - half_m
    lo = quarter - 3 * half_m
    spread = (1 << (ell - 1)) - 1
    return {
        hi: (1 << m) * ((1 << m) + 1) * spread,
        mid: (1 << (2 * m)) - 1,
        lo: (1 << m) * ((1 << m) - 1) * spread,
    }


# ---------------------------------------------------------------- fingerprints

def min_weight_design(C: LinearCode) -> Design:
    return design_from_codewords(C, weight_distribution(C).min_weight())


def fingerprint(D: Design) -> dict:
    """Deterministic summary of a design, with a content hash.

    Two designs get the same fingerprint iff they agree on (v, k, b), the
    2-design parameters (or lack thereof), and the multiset of per-block
    intersection profiles.  Isomorphic designs always agree; this is a
    cheap invariant, not a canonical form.
    """
    try:
        params = verify_2_design(D)
        pair = {"lambda": params.lam, "r": params.r}
    except NotA2Design:
        pair = None
    spec = intersection_spectrum(D)
    profiles = sorted(tuple(p) for p in spec.per_block)
    canon = {
        "v": D.v,
        "k": D.k,
        "b": D.b,
        "pair_design": pair,
        "intersections": [[s, c] for s, c in spec.aggregate],
        "block_profiles": [[[s, c] for s, c in prof] for prof in profiles],
    }
    blob = json.dumps(canon, sort_keys=True, separators=(",", ":"))
    canon["sha256"] = hashlib.sha256(blob.encode()).hexdigest()
    return canon


# ---------------------------------------------------------------- serialization

def design_to_json_dict(D: Design) -> dict:
    blocks = []
    for blk in D.blocks:
        pts = []
        while blk:
            low = (blk & -blk).bit_length() - 1
            pts.append(low)
            blk &= blk - 1
        blocks.append(pts)
    return {"format": "bentcodes-design", "v": D.v, "k": D.k, "blocks": blocks}


def design_from_json_dict(d: dict) -> Design:
    if d.get("format") != "bentcodes-design":
        raise ValueError("not a bentcodes design record")
    blocks = []
    for pts in d["blocks"]:
        b = 0
        for p in pts:
            b |= 1 << int(p)
        blocks.append(b)
    return Design(int(d["v"]), blocks)
