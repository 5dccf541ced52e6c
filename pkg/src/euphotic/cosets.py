"""Double cosets W_psi \\ W / W_Q and the rational span of the roots s_w."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import CapabilityError, ConsistencyError, InputError
from .exact import span_rank, in_span, row_reduce
from .roots import RootSubset, RootSystem

COSET_CAP = 100_000


def _subset(rs: RootSystem, S: Iterable[int]) -> frozenset:
    S = frozenset(S)
    if not S <= set(range(1, rs.rank + 1)):
        raise InputError(f"simple-root indices out of range: {sorted(S)}")
    return S


@lru_cache(maxsize=32)
def _gens(rs: RootSystem) -> tuple:
    idx = rs.index
    return tuple(tuple(idx[rs.reflect_root(i, r)] for r in rs.roots) for i in range(rs.rank))


@lru_cache(maxsize=8)
def weyl_elements(rs: RootSystem) -> dict:
    """Root permutation -> shortlex-least reduced word (1-based)."""
    if rs.weyl_order > COSET_CAP:
        raise CapabilityError(f"|W({rs.name})| = {rs.weyl_order} exceeds the coset cap {COSET_CAP}")
    gens = _gens(rs)
    e = tuple(range(len(rs.roots)))
    out = {e: ()}
    todo = deque([e])
    while todo:
        w = todo.popleft()
        for i, s in enumerate(gens):
            ws = tuple(w[k] for k in s)  # (w s_i)(a) = w(s_i a)
            if ws not in out:
                out[ws] = out[w] + (i + 1,)
                todo.append(ws)
    if len(out) != rs.weyl_order:
        raise ConsistencyError(f"enumerated {len(out)} elements of W({rs.name})")
    return out


def element(rs: RootSystem, word: Sequence[int]) -> tuple:
    gens = _gens(rs)
    w = tuple(range(len(rs.roots)))
    for i in word:
        if not 1 <= i <= rs.rank:
            raise InputError(f"bad generator {i} in word")
        w = tuple(w[k] for k in gens[i - 1])
    return w


def longest(rs: RootSystem) -> tuple:
    idx = rs.index
    pos = rs.positive_roots
    return next(w for w, word in weyl_elements(rs).items() if len(word) == len(pos))


def _levi_members(rs: RootSystem, S: frozenset) -> frozenset:
    return rs.levi_data(subset=S).members


def s_w_roots(rs: RootSystem, psi_subset: Iterable[int], q_subset: Iterable[int], w) -> RootSubset:
    """(Phi+ minus Phi_psi) intersected with w(Phi- minus Phi_Q); w is a word or a permutation."""
    psi, q = _subset(rs, psi_subset), _subset(rs, q_subset)
    if w and isinstance(w[0], int) and len(w) == len(rs.roots) and sorted(w) == list(range(len(rs.roots))):
        perm = tuple(w)
    else:
        perm = element(rs, w)
    roots = rs.roots
    lp, lq = _levi_members(rs, psi), _levi_members(rs, q)
    image = {perm[k] for k, r in enumerate(roots) if sum(r) < 0 and k not in lq}
    members = frozenset(k for k in image if sum(roots[k]) > 0 and k not in lp)
    return RootSubset(rs, members)


def span_closure(rs: RootSystem, roots: Iterable[Sequence[int]]) -> RootSubset:
    """Phi intersected with the rational span of the given roots."""
    basis = row_reduce(list(roots))
    members = frozenset(k for k, r in enumerate(rs.roots) if in_span(basis, r))
    idx = rs.index
    for a in members:
        for b in members:
            s = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
            if s in idx and idx[s] not in members:
                raise ConsistencyError("span closure is not a closed subsystem")
    return RootSubset(rs, members, subsystem=True)


def stabilizer_torus_dim(rs: RootSystem, roots: Iterable[Sequence[int]]) -> int:
    closed = span_closure(rs, roots)
    return rs.rank - span_rank(closed.roots)


@dataclass(frozen=True)
class DoubleCosetReport:
    w: tuple
    size: int
    s_w: RootSubset
    span_rank: int
    in_exceptional_coset: bool
    stabilizer_torus_dim: int

    @property
    def passes(self) -> bool:
        return self.in_exceptional_coset or self.span_rank < self.s_w.parent.rank

    def as_json(self) -> dict:
        return {
            "w": list(self.w),
            "coset_size": self.size,
            "n_roots": len(self.s_w),
            "s_w": [list(r) for r in self.s_w.roots],
            "span_rank": self.span_rank,
            "exceptional": self.in_exceptional_coset,
            "stabilizer_torus_dim": self.stabilizer_torus_dim,
            "passes": self.passes,
        }


def double_cosets(rs: RootSystem, psi_subset: Iterable[int], q_subset: Iterable[int]) -> list[list]:
    """Each double coset as a list of permutations, minimal representative first."""
    psi, q = _subset(rs, psi_subset), _subset(rs, q_subset)
    elems = weyl_elements(rs)
    gens = _gens(rs)
    seen: set = set()
    out = []
    for w in sorted(elems, key=lambda p: (len(elems[p]), elems[p])):
        if w in seen:
            continue
        block = [w]
        seen.add(w)
        todo = [w]
        while todo:
            u = todo.pop()
            nbrs = [tuple(gens[j - 1][k] for k in u) for j in psi]  # s_j u
            nbrs += [tuple(u[k] for k in gens[j - 1]) for j in q]  # u s_j
            for v in nbrs:
                if v not in seen:
                    seen.add(v)
                    block.append(v)
                    todo.append(v)
        block[1:] = sorted(block[1:], key=lambda p: (len(elems[p]), elems[p]))
        out.append(block)
    return out


def verify_span_lemma(rs: RootSystem, psi_subset: Iterable[int], q_subset: Iterable[int],
                      check_members: bool = False) -> list[DoubleCosetReport]:
    """One report per double coset; span rank stays below the rank off the w_0 coset.

    With ``check_members`` every element of each coset is checked to give
    the same span rank as its representative.
    """
    psi, q = _subset(rs, psi_subset), _subset(rs, q_subset)
    elems = weyl_elements(rs)
    w0 = longest(rs)
    reports = []
    for block in double_cosets(rs, psi, q):
        rep = block[0]
        s = s_w_roots(rs, psi, q, rep)
        rank = span_rank(s.roots) if len(s) else 0
        if check_members:
            for u in block[1:]:
                t = s_w_roots(rs, psi, q, u)
                if (span_rank(t.roots) if len(t) else 0) != rank:
                    raise ConsistencyError(f"span rank varies on the coset of {elems[rep]}")
        reports.append(DoubleCosetReport(
            elems[rep], len(block), s, rank, w0 in block, stabilizer_torus_dim(rs, s.roots),
        ))
    return reports
