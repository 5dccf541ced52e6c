"""Finite irreducible root systems in simple-root coordinates.

Points of the apartment are stored by their values on the simple roots,
x_i = <alpha_i, x>. The Cartan matrix is a_ij = <alpha_j, alpha_i^vee>.
G2 follows the convention that alpha_1 is the long root.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import CapabilityError, InputError
from .exact import RatVec, solve, vec

Root = tuple  # tuple[int, ...]

TYPES = ("A", "B", "C", "D", "E", "F", "G")
W_CAP = 2_000_000


def parse_type(tag: str, rank: int | None = None) -> tuple[str, int]:
    """Accept "A", "E6", "G2" style tags; return (letter, rank)."""
    tag = str(tag).strip().upper()
    if not tag or tag[0] not in TYPES:
        raise InputError(f"unknown type {tag!r}")
    letter, rest = tag[0], tag[1:]
    if rest:
        try:
            r = int(rest)
        except ValueError as exc:
            raise InputError(f"bad type tag {tag!r}") from exc
        if rank is not None and rank != r:
            raise InputError(f"rank {rank} disagrees with tag {tag}")
        rank = r
    if rank is None:
        raise InputError(f"rank required for type {letter}")
    ok = {
        "A": rank >= 1, "B": rank >= 2, "C": rank >= 2, "D": rank >= 4,
        "E": rank in (6, 7, 8), "F": rank == 4, "G": rank == 2,
    }[letter]
    if not ok:
        raise InputError(f"invalid type {letter}{rank}")
    return letter, rank


def _gram(letter: str, n: int) -> list[list[Q]]:
    """Symmetric form on simple roots, short roots of a multiply laced type have length^2 = 1."""
    G = [[Q(0)] * n for _ in range(n)]
    lengths = [Q(2)] * n
    edges: list[tuple[int, int]] = []
    if letter in "ABC":
        edges = [(i, i + 1) for i in range(n - 1)]
        if letter == "B":
            lengths[n - 1] = Q(1)
        if letter == "C":
            lengths[n - 1] = Q(4)
    elif letter == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif letter == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif letter == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        lengths = [Q(2), Q(2), Q(1), Q(1)]
    elif letter == "G":
        edges = [(0, 1)]
        lengths = [Q(3), Q(1)]
    for i in range(n):
        G[i][i] = lengths[i]
    for i, j in edges:
        # (a_i, a_j) = -max(len)/2 for any Dynkin edge
        G[i][j] = G[j][i] = -max(lengths[i], lengths[j]) / 2
    return G


@dataclass(frozen=True, eq=False)
class RootSystem:
    letter: str
    rank: int
    gram: tuple = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.letter, self.rank) == (other.letter, other.rank)

    def __hash__(self):
        return hash((self.letter, self.rank))

    @property
    def type_tag(self) -> str:
        return self.letter if self.letter in "ABCD" else f"{self.letter}{self.rank}"

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        g = self.gram
        return tuple(
            tuple(int(2 * g[i][j] / g[i][i]) for j in range(self.rank)) for i in range(self.rank)
        )

    def form(self, a: Sequence, b: Sequence) -> Q:
        g = self.gram
        return sum((Q(a[i]) * b[j] * g[i][j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j]), Q(0))

    def coroot_pairing(self, beta: Sequence, gamma: Sequence) -> Q:
        """<beta, gamma^vee>."""
        return 2 * self.form(beta, gamma) / self.form(gamma, gamma)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        todo = deque(simple)
        while todo:
            r = todo.popleft()
            for i in range(n):
                c = sum(r[j] * self.cartan[i][j] for j in range(n))
                s = tuple(r[j] - (c if j == i else 0) for j in range(n))
                if s not in seen:
                    seen.add(s)
                    todo.append(s)
        return tuple(sorted(seen))

    @cached_property
    def index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.roots)}

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if sum(r) > 0)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    @cached_property
    def lengths(self) -> dict[Root, str]:
        top = max(self.form(r, r) for r in self.roots)
        return {r: "long" if self.form(r, r) == top else "short" for r in self.roots}

    def simple(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    # -- action on points (value coordinates) -------------------------------

    def pairing(self, root: Sequence[int], x: Sequence) -> Q:
        return sum((Q(c) * v for c, v in zip(root, x) if c), Q(0))

    def reflect_point(self, i: int, x: Sequence) -> RatVec:
        """s_i(x): <alpha_j, s_i x> = x_j - <alpha_j, alpha_i^vee> x_i."""
        xi = x[i]
        a = self.cartan[i]
        return tuple(Q(v) - a[j] * xi for j, v in enumerate(x))

    def reflect_point_in(self, gamma: Sequence[int], x: Sequence, level: int = 0) -> RatVec:
        """Reflection in the affine hyperplane <gamma, x> + level = 0."""
        val = self.pairing(gamma, x) + level
        if not val:
            return tuple(Q(v) for v in x)
        return tuple(Q(v) - val * self.coroot_pairing(self.simple(j), gamma) for j, v in enumerate(x))

    def reflect_root(self, i: int, root: Sequence[int]) -> Root:
        c = sum(root[j] * self.cartan[i][j] for j in range(self.rank))
        return tuple(root[j] - (c if j == i else 0) for j in range(self.rank))

    def dominant_rep(self, x: Sequence) -> tuple[RatVec, list[int]]:
        """Dominant point of W.x and the word (applied left to right) reaching it."""
        y = tuple(Q(v) for v in x)
        word: list[int] = []
        while True:
            i = next((k for k, v in enumerate(y) if v < 0), None)
            if i is None:
                return y, word
            y = self.reflect_point(i, y)
            word.append(i + 1)

    def apply_word(self, word: Iterable[int], x: Sequence) -> RatVec:
        y = tuple(Q(v) for v in x)
        for i in word:
            y = self.reflect_point(i - 1, y)
        return y

    # -- Weyl group ---------------------------------------------------------

    @cached_property
    def weyl_order(self) -> int:
        n, L = self.rank, self.letter
        if L == "A":
            return factorial(n + 1)
        if L in "BC":
            return 2 ** n * factorial(n)
        if L == "D":
            return 2 ** (n - 1) * factorial(n)
        return {6: 51840, 7: 2903040, 8: 696729600}[n] if L == "E" else {"F": 1152, "G": 12}[L]

    def require_weyl(self) -> None:
        if self.weyl_order > W_CAP:
            raise CapabilityError(
                f"|W({self.name})| = {self.weyl_order} exceeds the enumeration cap {W_CAP}"
            )

    def weyl_orbit(self, x: Sequence) -> dict[RatVec, list[int]]:
        """Every point of W.x with a word reaching it from x."""
        self.require_weyl()
        start = tuple(Q(v) for v in x)
        out = {start: []}
        todo = deque([start])
        while todo:
            y = todo.popleft()
            for i in range(self.rank):
                z = self.reflect_point(i, y)
                if z not in out:
                    out[z] = out[y] + [i + 1]
                    todo.append(z)
        return out

    # -- subsystems ---------------------------------------------------------

    def levi_data(self, subset: Optional[Iterable[int]] = None, point: Optional[Sequence] = None) -> "RootSubset":
        """Levi subsystem of simple roots ``subset`` (1-based), or of roots vanishing at ``point``."""
        if (subset is None) == (point is None):
            raise InputError("give exactly one of subset or point")
        if point is not None:
            if len(point) != self.rank:
                raise InputError("point has wrong dimension")
            members = frozenset(k for k, r in enumerate(self.roots) if self.pairing(r, point) == 0)
        else:
            S = set(subset)
            if not S <= set(range(1, self.rank + 1)):
                raise InputError(f"simple-root indices out of range: {sorted(S)}")
            members = frozenset(
                k for k, r in enumerate(self.roots) if all(c == 0 or (j + 1) in S for j, c in enumerate(r))
            )
        return RootSubset(self, members, subsystem=True)

    # -- classical coordinates ---------------------------------------------

    @property
    def classical(self) -> bool:
        return self.letter in "ABCD"

    @cached_property
    def ambient(self) -> int:
        return self.rank + 1 if self.letter == "A" else self.rank

    @cached_property
    def simple_e(self) -> tuple[tuple[int, ...], ...]:
        """Simple roots in the e_i basis (classical types only)."""
        if not self.classical:
            raise InputError(f"no classical coordinates for {self.name}")
        n, d = self.rank, self.ambient
        rows = []
        for i in range(n):
            v = [0] * d
            if i < n - 1 or self.letter == "A":
                v[i], v[i + 1] = 1, -1
            elif self.letter == "B":
                v[i] = 1
            elif self.letter == "C":
                v[i] = 2
            else:
                v[i - 1], v[i] = 1, 1
            rows.append(tuple(v))
        return tuple(rows)

    def root_to_e(self, root: Sequence[int]) -> tuple[int, ...]:
        d = self.ambient
        return tuple(sum(c * s[k] for c, s in zip(root, self.simple_e)) for k in range(d))

    def to_classical(self, x: Sequence) -> RatVec:
        """Value coordinates to e-coordinates (sum zero in type A)."""
        n, L = self.rank, self.letter
        if not self.classical:
            raise InputError(f"no classical coordinates for {self.name}")
        if L == "A":
            v = [Q(0)] * (n + 1)
            for i in range(n - 1, -1, -1):
                v[i] = v[i + 1] + x[i]
            shift = sum(v) / (n + 1)
            return tuple(c - shift for c in v)
        v = [Q(0)] * n
        if L == "B":
            v[n - 1] = Q(x[n - 1])
        elif L == "C":
            v[n - 1] = Q(x[n - 1]) / 2
        else:
            v[n - 1] = (Q(x[n - 1]) - x[n - 2]) / 2
        for i in range(n - 2, -1, -1):
            v[i] = v[i + 1] + x[i]
        return tuple(v)

    def from_classical(self, v: Sequence) -> RatVec:
        v = vec(v)
        if len(v) != self.ambient:
            raise InputError(f"expected {self.ambient} e-coordinates, got {len(v)}")
        if self.letter == "A" and sum(v) != 0:
            shift = sum(v) / len(v)
            v = tuple(c - shift for c in v)
        return tuple(sum((Q(c) * t for c, t in zip(s, v)), Q(0)) for s in self.simple_e)

    # -- lattices -----------------------------------------------------------

    def coroot_coords(self, x: Sequence) -> RatVec:
        """lambda with x = sum lambda_j alpha_j^vee; <alpha_i, alpha_j^vee> = a_ji."""
        n = self.rank
        return solve([[self.cartan[j][i] for j in range(n)] for i in range(n)], x)

    def in_lattice(self, x: Sequence, lattice: str) -> bool:
        if any(Q(c).denominator != 1 for c in x):
            return False
        if lattice == "adjoint":
            return True
        return all(c.denominator == 1 for c in self.coroot_coords(x))


@dataclass(frozen=True)
class RootSubset:
    parent: RootSystem
    members: frozenset
    subsystem: bool = False

    @property
    def roots(self) -> list[Root]:
        return [self.parent.roots[k] for k in sorted(self.members)]

    @property
    def dim(self) -> int:
        return len(self.members) + self.parent.rank

    def __len__(self) -> int:
        return len(self.members)


@lru_cache(maxsize=None)
def build(type_tag: str, rank: int | None = None) -> RootSystem:
    letter, n = parse_type(type_tag, rank)
    g = _gram(letter, n)
    return RootSystem(letter, n, tuple(tuple(r) for r in g))
