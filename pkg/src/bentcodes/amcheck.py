"""The Assmus-Mattson sufficient condition, evaluated exactly.

For a code with minimum distance d and dual weight distribution B, let s be
the number of nonzero dual weights i with 0 < i <= v - t.  When s <= d - t,
every weight class of the code (and of its dual, below v - t) supports a
t-design.  The theorem is symmetric: either member of a dual pair may sit
in the primary slot, and the two orientations can certify different
strengths for the same code (a low-rate code with few weights is often
easier to certify through its dual).  This module only evaluates the
condition; whether the designs exist anyway when it fails is a question
for direct verification in ``designs``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidStrength
from .lincode import WeightDistribution


@dataclass(frozen=True)
class AmReport:
    """Outcome of one Assmus-Mattson evaluation.

    ``s`` counts nonzero dual weights in (0, v - t]; ``holds`` is the
    sufficient condition s <= d - t.  ``counted_weights`` lists the dual
    weights behind s, for inspection.
    """

    t: int
    v: int
    d: int
    d_dual: int
    s: int
    holds: bool
    counted_weights: tuple


def assmus_mattson(
    wd: WeightDistribution, dual_wd: WeightDistribution, t: int
) -> AmReport:
    """Evaluate the condition at strength t from the two distributions.

    Raises
    ------
    DimensionMismatch
        If the distributions do not describe a code/dual pair on the same
        length (n mismatch, or dimensions not summing to n).
    InvalidStrength
        Unless 1 <= t < d.
    """
    if wd.n != dual_wd.n or wd.k + dual_wd.k != wd.n:
        raise DimensionMismatch(
            f"[{wd.n},{wd.k}] and [{dual_wd.n},{dual_wd.k}] are not a dual pair"
        )
    v = wd.n
    d = wd.min_weight()
    if not 1 <= t < d:
        raise InvalidStrength(f"need 1 <= t < d = {d}, got t = {t}")
    counted = tuple(
        w for w, c in dual_wd.items() if 0 < w <= v - t and c > 0
    )
    s = len(counted)
    return AmReport(
        t=t,
        v=v,
        d=d,
        d_dual=dual_wd.min_weight(),
        s=s,
        holds=s <= d - t,
        counted_weights=counted,
    )
