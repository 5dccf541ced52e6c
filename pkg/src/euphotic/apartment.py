"""Affine roots, marks, facets and extended affine Weyl orbits."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from math import floor
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InputError
from .exact import RatVec, rat
from .roots import RootSystem

LATTICES = ("simply_connected", "adjoint")


class AffineRoot(NamedTuple):
    gradient: tuple  # coefficient vector over simple roots
    level: int

    def value(self, rs: RootSystem, x: Sequence) -> Q:
        return rs.pairing(self.gradient, x) + self.level

    def __neg__(self):
        return AffineRoot(tuple(-c for c in self.gradient), -self.level)


def check_lattice(lattice: str) -> str:
    if lattice not in LATTICES:
        raise InputError(f"lattice must be one of {LATTICES}, got {lattice!r}")
    return lattice


def marks(rs: RootSystem) -> tuple[int, ...]:
    """(n_0, n_1, ..., n_r) with n_0 = 1 and n_i the coefficients of theta."""
    return (1,) + tuple(rs.highest_root)


def affine_simple_values(rs: RootSystem, x: Sequence) -> tuple[Q, ...]:
    """(alpha_0(x), alpha_1(x), ..., alpha_r(x)) with alpha_0 = 1 - theta."""
    return (1 - rs.pairing(rs.highest_root, x),) + tuple(Q(v) for v in x)


def affine_simple_root(rs: RootSystem, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(tuple(-c for c in rs.highest_root), 1)
    return AffineRoot(rs.simple(i - 1), 0)


def in_closed_alcove(rs: RootSystem, x: Sequence) -> bool:
    return all(v >= 0 for v in affine_simple_values(rs, x))


@dataclass(frozen=True)
class Facet:
    rs: RootSystem
    J: frozenset

    def __post_init__(self):
        J = frozenset(self.J)
        object.__setattr__(self, "J", J)
        full = set(range(self.rs.rank + 1))
        if not J <= full:
            raise InputError(f"facet indices out of range: {sorted(J)}")
        if J == full:
            raise InputError("J is the full affine simple set, not a facet of the alcove")

    @cached_property
    def m(self) -> int:
        n = marks(self.rs)
        return sum(n[i] for i in range(self.rs.rank + 1) if i not in self.J)

    @cached_property
    def barycenter(self) -> RatVec:
        step = Q(1, self.m)
        x = tuple(Q(0) if i in self.J else step for i in range(1, self.rs.rank + 1))
        vals = affine_simple_values(self.rs, x)
        assert vals[0] == (0 if 0 in self.J else step)
        return x

    @property
    def hyperspecial(self) -> bool:
        return self.J == frozenset(range(1, self.rs.rank + 1))

    def reflect(self, i: int, y: Sequence) -> RatVec:
        a = affine_simple_root(self.rs, i)
        return self.rs.reflect_point_in(a.gradient, y, a.level)

    def canonical(self, y: Sequence) -> RatVec:
        """Representative of W_J . y with alpha(y) >= 0 for every alpha in J."""
        y = tuple(Q(v) for v in y)
        order = sorted(self.J)
        while True:
            vals = affine_simple_values(self.rs, y)
            i = next((k for k in order if vals[k] < 0), None)
            if i is None:
                return y
            y = self.reflect(i, y)

    def orbit(self, y: Sequence) -> set:
        """The finite orbit W_J . y."""
        start = tuple(Q(v) for v in y)
        seen = {start}
        todo = [start]
        while todo:
            z = todo.pop()
            for i in self.J:
                w = self.reflect(i, z)
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    def as_json(self) -> dict:
        return {"J": sorted(self.J), "m": self.m, "barycenter": [str(c) for c in self.barycenter]}


def facet(rs: RootSystem, J: Iterable[int]) -> Facet:
    return Facet(rs, frozenset(J))


def facet_from_complement(rs: RootSystem, off: Iterable[int]) -> Facet:
    off = set(off)
    return Facet(rs, frozenset(i for i in range(rs.rank + 1) if i not in off))


# -- extended affine Weyl orbits ---------------------------------------------


def _frac(v: Sequence) -> tuple:
    return tuple(c - floor(c) for c in v)


def _key(rs: RootSystem, y: Sequence, lattice: str) -> tuple:
    """Class of y modulo the translation lattice, as a residue vector."""
    if lattice == "adjoint":
        return _frac(y)
    return _frac(rs.coroot_coords(y))


@lru_cache(maxsize=256)
def _orbit_table(rs: RootSystem, x: tuple, lattice: str) -> dict:
    """Residue class -> (point of W.x, word) for the W-orbit of x."""
    table: dict = {}
    for z, word in rs.weyl_orbit(x).items():
        k = _key(rs, z, lattice)
        if k not in table or (len(word), word) < (len(table[k][1]), table[k][1]):
            table[k] = (z, word)
    return table


def frac_signature(rs: RootSystem, x: Sequence, lattice: str) -> Optional[tuple]:
    """Sorted fractional parts of e-coordinates, folded up to sign for B, C, D.

    Invariant along the orbit whenever the translation lattice is integral in
    e-coordinates (type A up to a common shift); None when no such
    certificate is available.
    """
    if not rs.classical:
        return None
    if rs.letter in "CD" and lattice == "adjoint":
        return None
    v = rs.to_classical(x)
    f = [c - floor(c) for c in v]
    if rs.letter == "A":
        return min(tuple(sorted((c - b) - floor(c - b) for c in f)) for b in f)
    return tuple(sorted(min(c, 1 - c) for c in f))


@dataclass(frozen=True)
class Witness:
    word: tuple  # simple reflections applied to x left to right
    translation: RatVec  # value coordinates

    def as_json(self) -> dict:
        return {"word": list(self.word), "translation": [str(c) for c in self.translation]}


def orbit_contains(rs: RootSystem, x: Sequence, y: Sequence, lattice: str) -> Optional[Witness]:
    """A witness y = w(x) + lambda, or None."""
    check_lattice(lattice)
    x = tuple(rat(c) for c in x)
    y = tuple(rat(c) for c in y)
    if len(x) != rs.rank or len(y) != rs.rank:
        raise InputError("point has wrong dimension")
    sx, sy = frac_signature(rs, x, lattice), frac_signature(rs, y, lattice)
    if sx is not None and sx != sy:
        rs.require_weyl()
        return None
    hit = _orbit_table(rs, x, lattice).get(_key(rs, y, lattice))
    if hit is None:
        return None
    z, word = hit
    return Witness(tuple(word), tuple(a - b for a, b in zip(y, z)))


def orbit_points(rs: RootSystem, x: Sequence, lattice: str, bound) -> list[tuple[RatVec, Witness]]:
    """Dominant points y of the extended affine Weyl orbit of x with theta(y) <= bound."""
    check_lattice(lattice)
    bound = rat(bound)
    if bound <= 0:
        raise InputError("bound must be positive")
    x = tuple(rat(c) for c in x)
    table = _orbit_table(rs, x, lattice)
    theta = rs.highest_root
    n = rs.rank
    out: dict[RatVec, Witness] = {}
    residues = {}
    for k, (z, word) in table.items():
        residues.setdefault(_frac(z), []).append(k)
    for r in sorted(residues):
        keys = set(residues[r])
        # y_i = r_i + t_i with t_i >= 0 integers and sum theta_i y_i <= bound
        def rec(i: int, acc: Q, partial: list):
            if i == n:
                y = tuple(partial)
                k = _key(rs, y, lattice)
                if k in keys:
                    z, word = table[k]
                    out[y] = Witness(tuple(word), tuple(a - b for a, b in zip(y, z)))
                return
            t = 0
            while True:
                yi = r[i] + t
                s = acc + theta[i] * yi
                # remaining coordinates contribute at least their residues
                rest = sum((theta[j] * r[j] for j in range(i + 1, n)), Q(0))
                if s + rest > bound:
                    break
                partial.append(yi)
                rec(i + 1, s, partial)
                partial.pop()
                t += 1
        rec(0, Q(0), [])
    return [(y, out[y]) for y in sorted(out)]


def alcove_orbit_points(rs: RootSystem, x: Sequence, lattice: str) -> list[RatVec]:
    """W~.x intersected with the closed fundamental alcove."""
    pts = orbit_points(rs, x, lattice, 1)
    return [y for y, _ in pts if in_closed_alcove(rs, y)]


def exceptional_base_points(rs: RootSystem, x_Q: Sequence, facet_P: Facet, lattice: str) -> set:
    """Alcove points of the orbit of x_Q, closed under the finite group W_P."""
    base = set()
    for y in alcove_orbit_points(rs, x_Q, lattice):
        base |= facet_P.orbit(y)
    return base


def is_exceptional(rs: RootSystem, y: Sequence, facet_P: Facet, alcove_pts: Iterable) -> bool:
    return facet_P.canonical(y) in set(alcove_pts)
