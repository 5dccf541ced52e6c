"""The Z/m-grading of the Lie algebra attached to a facet."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from math import floor

from .apartment import AffineRoot, Facet
from .errors import ConsistencyError


@dataclass(frozen=True)
class GradingReport:
    facet: Facet
    m: int
    dims: tuple
    levi_roots: frozenset
    vp_weights: frozenset
    vp_dual_weights: frozenset

    def as_json(self) -> dict:
        def roots(s):
            return [{"gradient": list(a.gradient), "level": a.level} for a in sorted(s)]

        return {
            "facet": self.facet.as_json(),
            "m": self.m,
            "dims": list(self.dims),
            "levi_roots": roots(self.levi_roots),
            "vp_weights": roots(self.vp_weights),
            "vp_dual_weights": roots(self.vp_dual_weights),
        }


def grade(F: Facet) -> GradingReport:
    rs, m, x = F.rs, F.m, F.barycenter
    dims = [0] * m
    dims[0] = rs.rank
    levi, vp, vpd = set(), set(), set()
    up = Q(1, m) - floor(Q(1, m))
    down = -Q(1, m) - floor(-Q(1, m))
    for r in rs.roots:
        v = rs.pairing(r, x)
        frac = v - floor(v)
        i = frac * m
        if i.denominator != 1:
            raise ConsistencyError(f"root value {v} is not in (1/{m})Z")
        dims[int(i)] += 1
        if frac == 0:
            levi.add(AffineRoot(r, -int(v)))
        if frac == up:
            vp.add(AffineRoot(r, int(Q(1, m) - v)))
        if frac == down:
            vpd.add(AffineRoot(r, int(-Q(1, m) - v)))
    if any(d == 0 for d in dims[1:]):
        raise ConsistencyError(f"grading of {sorted(F.J)} misses a residue mod 1/{m}")
    return GradingReport(F, m, tuple(dims), frozenset(levi), frozenset(vp), frozenset(vpd))


def levi_dim(F: Facet) -> int:
    return grade(F).dims[0]
