"""Symbolic toral functionals, their centralizers and the Swan count."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConsistencyError, InputError
from .roots import RootSubset, RootSystem


@dataclass(frozen=True)
class BlockFunctional:
    """psi on the classical torus: coordinate i carries a signed symbol or 0.

    ``blocks`` is a tuple of (label, indices) with 1-based coordinate
    indices; labels are symbols like "a", or "+a"/"-a" and "0" for B, C, D.
    """

    rs: RootSystem
    blocks: tuple

    def __post_init__(self):
        rs = self.rs
        if not rs.classical:
            raise InputError("block functionals exist for classical types only")
        seen: list[int] = []
        for label, idx in self.blocks:
            seen.extend(idx)
        if sorted(seen) != list(range(1, rs.ambient + 1)):
            raise InputError(f"blocks must partition coordinates 1..{rs.ambient}")
        labels = [lab for lab, _ in self.blocks]
        if len(set(labels)) != len(labels):
            raise InputError("block labels must be distinct")
        for lab in labels:
            if rs.letter == "A" and (lab.startswith(("+", "-")) or lab == "0"):
                raise InputError("type A blocks carry plain symbols")
            if rs.letter != "A" and lab != "0" and not lab.startswith(("+", "-")):
                raise InputError("B/C/D blocks are labelled +s, -s or 0")

    def coordinate_values(self) -> list[dict]:
        """Each coordinate as a map symbol -> coefficient."""
        out: list[dict] = [dict() for _ in range(self.rs.ambient)]
        for label, idx in self.blocks:
            for i in idx:
                if label == "0":
                    continue
                if label[0] in "+-":
                    out[i - 1] = {label[1:]: 1 if label[0] == "+" else -1}
                else:
                    out[i - 1] = {label: 1}
        return out

    def evaluate(self, root: Sequence[int]) -> dict:
        """Symbolic value of a root: a map symbol -> nonzero coefficient."""
        e = self.rs.root_to_e(root)
        vals = self.coordinate_values()
        acc: dict = {}
        for c, v in zip(e, vals):
            for s, k in v.items():
                acc[s] = acc.get(s, 0) + c * k
        return {s: k for s, k in acc.items() if k}

    def instantiate(self, values: dict) -> list:
        """Concrete e-coordinates for given symbol values."""
        return [sum(values[s] * k for s, k in v.items()) for v in self.coordinate_values()]

    def as_json(self) -> dict:
        return {"type": self.rs.letter, "rank": self.rs.rank, "blocks": [[lab, list(idx)] for lab, idx in self.blocks]}


def from_partition(rs: RootSystem, parts: Sequence[int]) -> BlockFunctional:
    """Type A functional with eigenvalue multiplicities ``parts``."""
    if rs.letter != "A" or sum(parts) != rs.ambient or any(p <= 0 for p in parts):
        raise InputError(f"{list(parts)} is not a partition of {rs.ambient}")
    blocks, start = [], 1
    for k, p in enumerate(parts):
        blocks.append((f"s{k + 1}", tuple(range(start, start + p))))
        start += p
    return BlockFunctional(rs, tuple(blocks))


def from_json(rs: RootSystem, blocks) -> BlockFunctional:
    try:
        return BlockFunctional(rs, tuple((str(lab), tuple(int(i) for i in idx)) for lab, idx in blocks))
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed blocks: {blocks!r}") from exc


@dataclass(frozen=True)
class CentralizerReport:
    phi_psi: RootSubset
    dim_Gpsi: int
    swan_numerator: int

    def as_json(self) -> dict:
        return {
            "phi_psi": [list(r) for r in self.phi_psi.roots],
            "dim_Gpsi": self.dim_Gpsi,
            "swan_numerator": self.swan_numerator,
        }


def centralizer(psi: BlockFunctional) -> CentralizerReport:
    rs = psi.rs
    members = frozenset(k for k, r in enumerate(rs.roots) if not psi.evaluate(r))
    sub = RootSubset(rs, members, subsystem=True)
    return CentralizerReport(sub, sub.dim, len(rs.roots) - len(members))


def swan_prediction(dim_L: int, dim_Lpsi: int) -> int:
    return dim_L - dim_Lpsi


def swan_direct(psi: BlockFunctional) -> int:
    """#R' for a toral psi at a hyperspecial point, checked against dim g - dim G_psi."""
    rs = psi.rs
    c = centralizer(psi)
    general = swan_prediction(len(rs.roots) + rs.rank, c.dim_Gpsi)
    if general != c.swan_numerator:
        raise ConsistencyError("Swan identity failed")
    return c.swan_numerator
