"""Dimension equality dim G_psi + dim L_Q = #Phi and the canned spherical lists."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations
from typing import Optional

from .errors import InputError
from .roots import RootSystem, build
from .toral import centralizer, from_partition

# A Levi shape is ("part", (sizes...)) for type A or ("off", frozenset of removed simple roots).


def partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _composition_subset(parts) -> set:
    """Simple roots (1-based) of the block-diagonal Levi with the given block sizes."""
    S, pos = set(), 0
    for p in parts:
        S.update(range(pos + 1, pos + p))
        pos += p
    return S


def shape_dim(rs: RootSystem, shape) -> int:
    kind, val = shape
    if kind == "part":
        if rs.letter != "A" or sum(val) != rs.rank + 1:
            raise InputError(f"{list(val)} is not a partition of {rs.rank + 1}")
        d = rs.levi_data(subset=_composition_subset(val)).dim
        if d != centralizer(from_partition(rs, val)).dim_Gpsi:
            raise AssertionError("Levi and centralizer dimensions disagree")
        return d
    if not val or not set(val) <= set(range(1, rs.rank + 1)):
        raise InputError(f"bad parabolic label {sorted(val)} for {rs.name}")
    return rs.levi_data(subset=set(range(1, rs.rank + 1)) - set(val)).dim


def levi_label(rs: RootSystem, shape) -> str:
    kind, val = shape
    if kind == "part":
        return "(" + ",".join(map(str, val)) + ")"
    n = rs.rank
    if rs.letter == "D" and val == frozenset({n - 1}):
        return f"P_{n}'"
    return "P_" + ",".join(map(str, sorted(val))) if len(val) > 1 else f"P_{min(val)}"


def parse_levi(rs: RootSystem, text: str):
    """"4,2" is a partition in type A; "n", "2", "1,2", "n'" are parabolic labels otherwise."""
    text = str(text).strip()
    n = rs.rank
    try:
        if rs.letter == "A":
            parts = tuple(sorted((int(t) for t in text.split(",")), reverse=True))
            if sum(parts) != n + 1 or min(parts) < 1:
                raise InputError(f"{text!r} is not a partition of {n + 1}")
            return ("part", parts)
        off = set()
        for tok in text.replace("P", "").replace("_", "").split(","):
            tok = tok.strip()
            if tok in ("n'",) or (rs.letter == "D" and tok == f"{n}'"):
                if rs.letter != "D":
                    raise InputError("primed labels exist in type D only")
                off.add(n - 1)
            else:
                off.add(n if tok == "n" else int(tok))
    except ValueError as exc:
        raise InputError(f"cannot parse {text!r}") from exc
    if not off <= set(range(1, n + 1)):
        raise InputError(f"label {text!r} out of range for {rs.name}")
    return ("off", frozenset(off))


@dataclass(frozen=True)
class SphericalPair:
    group: str
    psi: tuple
    q: tuple
    dims: tuple  # (dim G_psi, dim L_Q, #Phi)
    listed: bool = False
    case: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.dims[0] + self.dims[1] == self.dims[2]

    def as_json(self) -> dict:
        rs = build(self.group)
        return {
            "group": self.group,
            "psi": levi_label(rs, self.psi),
            "q": levi_label(rs, self.q),
            "dim_Gpsi": self.dims[0],
            "dim_LQ": self.dims[1],
            "n_roots": self.dims[2],
            "dim_equality": self.holds,
            "listed": self.listed,
            "case": self.case,
        }


def dim_equality(rs: RootSystem, psi, q) -> tuple[bool, tuple]:
    dims = (shape_dim(rs, psi), shape_dim(rs, q), len(rs.roots))
    return dims[0] + dims[1] == dims[2], dims


@lru_cache(maxsize=1)
def _table() -> dict:
    with resources.files("euphotic").joinpath("data/spherical_pairs.json").open() as fh:
        return json.load(fh)


def _eval(tok: str, n: int, m: Optional[int]) -> list[int]:
    tok = tok.strip()
    if tok == "1^n":
        return [1] * n
    env = {"n": n, "m": m}
    for sym in ("n", "m"):
        if tok.startswith(sym):
            rest = tok[1:]
            return [env[sym] + (int(rest) if rest else 0)]
    return [int(tok)]


def _applies(when, letter: str, rank: int) -> Optional[int]:
    """m for type A families, 0 for a plain match, None when not applicable."""
    n = rank + 1 if letter == "A" else rank
    if when == "any":
        return 0
    if when == "even":
        return n // 2 if n % 2 == 0 and n >= 4 else None
    if when == "odd":
        return (n - 1) // 2 if n % 2 == 1 and n >= 5 else None
    return 0 if n == when else None


MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


def canned_list(letter: str, rank: int) -> list[SphericalPair]:
    """The canned pairs for one group, families instantiated at this rank."""
    letter = letter.upper()
    if letter not in MIN_RANK or rank < MIN_RANK[letter]:
        return []
    rs = build(letter, rank)
    out: dict = {}
    for entry in _table()[letter]:
        m = _applies(entry["when"], letter, rank)
        if m is None:
            continue
        cite = entry["cite"]
        if letter == "A":
            n = rank + 1
            psi = ("part", tuple(sorted(sum((_eval(t, n, m) for t in entry["psi"].split(",")), []), reverse=True)))
            q = ("part", tuple(sorted(sum((_eval(t, n, m) for t in entry["q"].split(",")), []), reverse=True)))
            variants = [(psi, q)]
        else:
            def lab(s):
                return frozenset(rank if t.strip() == "n" else int(t) for t in s.split(","))
            psi, q = lab(entry["psi"]), lab(entry["q"])
            variants = [(psi, q)]
            if letter == "D" and entry.get("outer"):
                variants = []
                for perm in permutations((1, 3, 4)):
                    sigma = {2: 2, **dict(zip((1, 3, 4), perm))}
                    variants.append((frozenset(sigma[i] for i in psi), frozenset(sigma[i] for i in q)))
            elif letter == "D":
                # both classes of maximal isotropic subspaces
                swap = {rank: rank - 1}
                variants.append((frozenset(swap.get(i, i) for i in psi), frozenset(swap.get(i, i) for i in q)))
            variants = [(("off", a), ("off", b)) for a, b in variants]
        for psi, q in variants:
            ok, dims = dim_equality(rs, psi, q)
            out.setdefault((psi, q), SphericalPair(rs.name, psi, q, dims, True, cite))
    return sorted(out.values(), key=_sort_key)


def _sort_key(p: SphericalPair):
    return (p.psi[0], sorted(p.psi[1]), p.q[0], sorted(p.q[1]))


def all_levis(rs: RootSystem) -> list:
    if rs.letter == "A":
        return [("part", p) for p in partitions(rs.rank + 1)]
    simple = range(1, rs.rank + 1)
    return [("off", frozenset(c)) for k in (1, 2) for c in combinations(simple, k)]


def enumerate_dim_eq(letter: str, max_rank: int) -> list[SphericalPair]:
    """Every pair meeting the equality up to max_rank, flagged against the lists."""
    letter = letter.upper()
    if letter not in MIN_RANK:
        raise InputError("enumeration covers types A, B, C, D")
    if max_rank > 8:
        raise InputError("max_rank is at most 8")
    out = []
    for rank in range(MIN_RANK[letter], max_rank + 1):
        rs = build(letter, rank)
        listed = {(p.psi, p.q): p for p in canned_list(letter, rank)}
        levis = all_levis(rs)
        dims = {s: shape_dim(rs, s) for s in levis}
        total = len(rs.roots)
        for psi in levis:
            for q in levis:
                if dims[psi] + dims[q] != total:
                    continue
                hit = listed.get((psi, q))
                out.append(SphericalPair(rs.name, psi, q, (dims[psi], dims[q], total),
                                         hit is not None, hit.case if hit else None))
    return out


def levi_subset(rs: RootSystem, shape) -> set:
    """Simple roots (1-based) of the Levi named by a shape."""
    kind, val = shape
    if kind == "part":
        return _composition_subset(val)
    return set(range(1, rs.rank + 1)) - set(val)
