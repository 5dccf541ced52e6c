"""Weight data of Y_w at orbit points y = w x_Q and the emptiness gates."""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction as Q
from math import floor
from typing import Iterable, Optional, Sequence

from .apartment import (
    AffineRoot,
    Facet,
    Witness,
    alcove_orbit_points,
    orbit_contains,
    orbit_points,
)
from .errors import CapabilityError, ConsistencyError, InputError
from .exact import RatVec, fmt_vec, rat, strict_cone_feasible
from .grading import grade

_OPS = {"<": operator.lt, "<=": operator.le, ">": operator.gt, ">=": operator.ge, "==": operator.eq}


@dataclass(frozen=True)
class Predicate:
    """<root, y> op value."""

    root: tuple
    op: str
    value: Q

    def __post_init__(self):
        if self.op not in _OPS:
            raise InputError(f"unknown comparison {self.op!r}")

    def holds(self, rs, y: Sequence) -> bool:
        return _OPS[self.op](rs.pairing(self.root, y), self.value)

    def as_json(self) -> dict:
        return {"root": list(self.root), "op": self.op, "value": str(self.value)}

    @classmethod
    def from_json(cls, d: dict) -> "Predicate":
        try:
            return cls(tuple(int(c) for c in d["root"]), d["op"], rat(d["value"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed predicate {d!r}") from exc


@dataclass(frozen=True)
class Strip:
    """lo < <root, y> < hi, one piece of a region like the G2 set U."""

    root: tuple
    lo: Q
    hi: Q

    def holds(self, rs, y) -> bool:
        return self.lo < rs.pairing(self.root, y) < self.hi

    def as_json(self) -> dict:
        return {"root": list(self.root), "lo": str(self.lo), "hi": str(self.hi)}


def in_region(rs, strips: Iterable[Strip], y) -> bool:
    return any(s.holds(rs, y) for s in strips)


@dataclass
class HessenbergDatum:
    y: RatVec
    facet_P: Facet
    qw_roots: frozenset
    vw_perp: frozenset
    vw_perp_gradients: frozenset
    exceptional: bool = False
    halfspace_empty: bool = False
    halfspace_witness: Optional[RatVec] = None
    simple_root_meager: Optional[bool] = None
    rule_empty: Optional[bool] = None
    witness: Optional[Witness] = None
    extra: dict = field(default_factory=dict)

    def as_json(self) -> dict:
        rs = self.facet_P.rs
        out = {
            "y": fmt_vec(self.y),
            "qw_roots": [{"gradient": list(a.gradient), "level": a.level} for a in sorted(self.qw_roots)],
            "vw_perp": [{"gradient": list(a.gradient), "level": a.level} for a in sorted(self.vw_perp)],
            "vw_perp_gradients": [list(g) for g in sorted(self.vw_perp_gradients)],
            "flags": {
                "exceptional": self.exceptional,
                "halfspace_empty": self.halfspace_empty,
                "simple_root_meager": self.simple_root_meager,
                "rule_empty": self.rule_empty,
            },
        }
        if rs.classical:
            out["y_classical"] = fmt_vec(rs.to_classical(self.y))
        if self.halfspace_witness is not None:
            out["halfspace_witness"] = fmt_vec(self.halfspace_witness)
        if self.witness is not None:
            out["witness"] = self.witness.as_json()
        out.update(self.extra)
        return out


def qw_roots(F: Facet, y: Sequence) -> frozenset:
    rs = F.rs
    return frozenset(a for a in grade(F).levi_roots if a.value(rs, y) <= 0)


def vw_perp(F: Facet, y: Sequence) -> tuple[frozenset, frozenset]:
    """Affine roots of value -1/m at x_P and < 0 at y, with their gradients.

    Computed twice, from the affine roots and from the gradient inequality
    <a, y - x_P> < 1/m; the two must agree.
    """
    rs, m, xP = F.rs, F.m, F.barycenter
    affine = frozenset(a for a in grade(F).vp_dual_weights if a.value(rs, y) < 0)
    step = Q(1, m)
    target = -step - floor(-step)
    diff = tuple(Q(a) - b for a, b in zip(y, xP))
    grads = set()
    for r in rs.roots:
        v = rs.pairing(r, xP)
        if v - floor(v) == target and rs.pairing(r, diff) < step:
            grads.add(r)
    if {a.gradient for a in affine} != grads or len(affine) != len(grads):
        raise ConsistencyError(f"V_w-perp forms disagree at y = {fmt_vec(y)}")
    return affine, frozenset(grads)


def halfspace_empty(grads: Iterable[Sequence], rank: int) -> Optional[RatVec]:
    """A strict half-space witness for the gradients, or None.

    A witness certifies Y_w is empty for every nonzero semisimple psi.
    """
    return strict_cone_feasible(list(grads), dim=rank)


def simple_root_meager(F: Facet, y: Sequence) -> bool:
    if not F.hyperspecial:
        raise CapabilityError("the simple-root gate needs a hyperspecial facet")
    dom, _ = F.rs.dominant_rep(y)
    return any(v >= 1 for v in dom)


def rule_empty(grads: Iterable[Sequence], rules: Sequence[Iterable[Sequence]]) -> bool:
    present = {tuple(g) for g in grads}
    return any(all(tuple(r) not in present for r in rule) for rule in rules)


def datum(F: Facet, y: Sequence, rules=None, alcove_pts=None) -> HessenbergDatum:
    rs = F.rs
    y = tuple(rat(c) for c in y)
    aff, grads = vw_perp(F, y)
    xi = halfspace_empty(grads, rs.rank)
    d = HessenbergDatum(y, F, qw_roots(F, y), aff, grads, halfspace_empty=xi is not None, halfspace_witness=xi)
    if F.hyperspecial:
        d.simple_root_meager = simple_root_meager(F, y)
    if rules is not None:
        d.rule_empty = rule_empty(grads, rules)
    if alcove_pts is not None:
        d.exceptional = F.canonical(y) in alcove_pts
    return d


def g2_rules() -> list:
    """Default reducibility rules of the G2 example: {-a1, b} and {a1, -b}, b = a1 + 3 a2."""
    return [[(-1, 0), (1, 3)], [(1, 0), (-1, -3)]]


def g2_region() -> list[Strip]:
    return [Strip((1, 0), Q(0), Q(1)), Strip((1, 3), Q(0), Q(1))]


def enumerate_candidates(
    F: Facet,
    x_Q: Sequence,
    lattice: str,
    bound,
    predicates: Sequence[Predicate] = (),
    rules=None,
    dedupe: bool = True,
) -> tuple[list[HessenbergDatum], dict]:
    """Orbit points of x_Q up to the bound, one datum per W_P-class.

    For a hyperspecial facet the classes are the dominant points; otherwise
    every point whose dominant form has theta <= bound is reduced to the
    W_P-chamber. Predicates are applied last; the returned summary records
    how many data they removed.
    """
    rs = F.rs
    x_Q = tuple(rat(c) for c in x_Q)
    bound = rat(bound)
    if bound < 0:
        raise InputError("bound must be nonnegative")
    dom_pts = orbit_points(rs, x_Q, lattice, bound) if bound > 0 else []
    if bound == 0 and all(c == 0 for c in x_Q):
        dom_pts = [(x_Q, Witness((), tuple(Q(0) for _ in x_Q)))]
    raw: list[RatVec] = []
    if F.hyperspecial:
        raw = [y for y, _ in dom_pts]
    else:
        for y, _ in dom_pts:
            raw.extend(rs.weyl_orbit(y))
    alcove = set(alcove_orbit_points(rs, x_Q, lattice))
    pts = sorted({F.canonical(y) for y in raw}) if dedupe else sorted(set(raw))
    data = []
    for y in pts:
        d = datum(F, y, rules, alcove)
        d.witness = orbit_contains(rs, x_Q, y, lattice)
        if d.witness is None:
            raise ConsistencyError(f"enumerated point {fmt_vec(y)} is not in the orbit")
        data.append(d)
    kept = [d for d in data if all(p.holds(rs, d.y) for p in predicates)]
    summary = {
        "enumerated": len(data),
        "removed_by_predicates": len(data) - len(kept),
        "predicates": [p.as_json() for p in predicates],
        "bound": str(bound),
        "lattice": lattice,
    }
    return kept, summary
