"""Exact rationals, strict-cone feasibility, hull containment and span rank."""
from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import ConsistencyError, InputError

Rat = Q
RatVec = tuple  # tuple[Fraction, ...]


def rat(value) -> Q:
    """Coerce an int, Fraction or "p/q" string."""
    if isinstance(value, Q):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        try:
            return Q(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def vec(values: Iterable) -> RatVec:
    return tuple(rat(v) for v in values)


def fmt(q: Q) -> str:
    return str(q)


def fmt_vec(v: Sequence) -> list[str]:
    return [str(Q(c)) for c in v]


def parse_vec(items: Sequence[str]) -> RatVec:
    return tuple(rat(s) for s in items)


def dot(u: Sequence, v: Sequence) -> Q:
    return sum((Q(a) * b for a, b in zip(u, v)), Q(0))


def _common_dim(vectors: Sequence[Sequence]) -> Optional[int]:
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise InputError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop() if dims else None


def _primitive(row: Sequence[Q]) -> tuple[int, ...]:
    den = 1
    for c in row:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in row]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints) if g else tuple(ints)


def strict_cone_feasible(vectors: Iterable[Sequence], dim: int | None = None) -> Optional[RatVec]:
    """Return xi with <v, xi> > 0 for every v, or None.

    Fourier-Motzkin elimination (with Chernikov pruning) run on a growing
    working set of rows: a witness for the working set is tested against
    every row and the most violated rows join the set. An empty input is
    feasible and gets the unit vector e_1 in dimension ``dim`` (default 1).
    """
    vs = [vec(v) for v in vectors]
    d = _common_dim(vs)
    if d is None:
        d = dim or 1
        return tuple(Q(1 if i == 0 else 0) for i in range(d))
    if dim is not None and dim != d:
        raise InputError(f"dimension mismatch: {d} != {dim}")
    prims = sorted(set(_primitive(v) for v in vs))
    if any(not any(p) for p in prims):
        return None
    work = [prims[0]]
    while True:
        xi = _fourier_motzkin(work, d)
        if xi is None:
            return None
        slack = sorted((dot(p, xi), p) for p in prims)
        bad = [p for val, p in slack if val <= 0]
        if not bad:
            if any(dot(v, xi) <= 0 for v in vs):
                raise ConsistencyError("Fourier-Motzkin witness failed verification")
            return xi
        work.extend(bad[:2])


def _fourier_motzkin(prims: list[tuple[int, ...]], d: int) -> Optional[RatVec]:
    """Solve p.xi >= 1 for all rows p, or None if infeasible."""
    # scale to <v, xi> >= 1; rows are (coefficients..., rhs)
    rows: dict[tuple[int, ...], frozenset] = {}
    for idx, p in enumerate(prims):
        rows.setdefault(p + (1,), frozenset([idx]))
    remaining = list(range(d))
    stages: list[tuple[int, list[tuple[int, ...]]]] = []
    eliminated = 0
    while remaining:
        def cost(k):
            pos = sum(1 for r in rows if r[k] > 0)
            neg = sum(1 for r in rows if r[k] < 0)
            return (pos * neg - pos - neg, k)
        k = min(remaining, key=cost)
        remaining.remove(k)
        stages.append((k, list(rows)))
        eliminated += 1
        nxt: dict[tuple[int, ...], frozenset] = {}

        def keep(row, h):
            if not any(row[:-1]):
                return row[-1] <= 0
            if row not in nxt or len(h) < len(nxt[row]):
                nxt[row] = h
            return True

        for r, h in rows.items():
            if r[k] == 0:
                keep(r, h)
        pos = [(r, h) for r, h in rows.items() if r[k] > 0]
        neg = [(r, h) for r, h in rows.items() if r[k] < 0]
        for p, hp in pos:
            for n, hn in neg:
                h = hp | hn
                # Chernikov: more than k+1 parents means redundant
                if len(h) > eliminated + 1:
                    continue
                a, b = -n[k], p[k]
                comb = [a * x + b * y for x, y in zip(p, n)]
                g = 0
                for c in comb:
                    g = gcd(g, c)
                if g > 1:
                    comb = [c // g for c in comb]
                if not keep(tuple(comb), h):
                    return None
        rows = nxt

    xi: list[Q] = [Q(0)] * d
    for k, stage_rows in reversed(stages):
        lo: Optional[Q] = None
        hi: Optional[Q] = None
        for r in stage_rows:
            if r[k] == 0:
                continue
            rest = sum((r[j] * xi[j] for j in range(d) if j != k), Q(0))
            bound = (r[-1] - rest) / r[k]
            if r[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                raise ConsistencyError("Fourier-Motzkin back-substitution gap")
            xi[k] = (lo + hi) / 2
        else:
            xi[k] = lo if lo is not None else hi if hi is not None else Q(0)
    return tuple(xi)




def origin_weights(vectors: Iterable[Sequence]) -> Optional[tuple[Q, ...]]:
    """Convex weights lambda >= 0, sum 1, with sum lambda_i v_i = 0, or None.

    Phase-one simplex over exact rationals with Bland's rule.
    """
    vs = [vec(v) for v in vectors]
    d = _common_dim(vs)
    if d is None:
        return None
    n = len(vs)
    m = d + 1
    # constraint rows: coordinates then the normalisation sum
    A = [[vs[j][i] for j in range(n)] for i in range(d)] + [[Q(1)] * n]
    b = [Q(0)] * d + [Q(1)]
    # tableau columns: n real, m artificial, then rhs
    T = [A[i] + [Q(1 if t == i else 0) for t in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m
    obj = [Q(0)] * (width + 1)
    for i in range(m):
        for c in range(width + 1):
            obj[c] -= T[i][c]
    for i in range(m):
        obj[n + i] += 1
    while True:
        enter = next((c for c in range(width) if obj[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][width] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise ConsistencyError("phase-one simplex unbounded")
        piv = T[leave][enter]
        T[leave] = [c / piv for c in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * p for a, p in zip(T[i], T[leave])]
        f = obj[enter]
        obj = [a - f * p for a, p in zip(obj, T[leave])]
        basis[leave] = enter
    if obj[width] != 0:
        return None
    lam = [Q(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            lam[j] = T[i][width]
    return tuple(lam)


def hull_contains_origin(vectors: Iterable[Sequence]) -> bool:
    """True iff 0 lies in the convex hull; the empty set gives False."""
    vs = [vec(v) for v in vectors]
    lam = origin_weights(vs)
    if lam is None:
        return False
    d = len(vs[0])
    if sum(lam) != 1 or any(x < 0 for x in lam) or any(
        sum((l * v[i] for l, v in zip(lam, vs)), Q(0)) != 0 for i in range(d)
    ):
        raise ConsistencyError("simplex certificate failed verification")
    return True


def row_reduce(vectors: Iterable[Sequence]) -> list[list[Q]]:
    """Row echelon form (nonzero rows only) by exact Gaussian elimination."""
    rows = [list(vec(v)) for v in vectors]
    d = _common_dim(rows)
    if d is None:
        return []
    out: list[list[Q]] = []
    col = 0
    while rows and col < d:
        piv = next((r for r in rows if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        rows = [[a - r[col] / piv[col] * p for a, p in zip(r, piv)] if r[col] else r for r in rows]
        out.append(piv)
        col += 1
    return out


def span_rank(vectors: Iterable[Sequence]) -> int:
    return len(row_reduce(vectors))


def in_span(basis_rows: Sequence[Sequence], v: Sequence) -> bool:
    return span_rank(list(basis_rows) + [v]) == span_rank(basis_rows) if basis_rows else not any(v)


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> RatVec:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    M = [list(vec(r)) + [rat(b)] for r, b in zip(matrix, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            raise InputError("singular system")
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [a / pv for a in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return tuple(M[i][n] for i in range(n))
