"""Dimension bookkeeping for cohomological rigidity and the open orbit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InputError
from .roots import RootSystem

FIELDS = ("dim_L", "dim_LQ", "dim_Lpsi", "rk_Lpsi", "dim_ginv_pi1")


@dataclass(frozen=True)
class RigidityInputs:
    dim_L: int
    dim_LQ: int
    dim_Lpsi: int
    rk_Lpsi: int
    dim_ginv_pi1: int = 0
    sources: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for name in FIELDS:
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InputError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.dim_LQ > self.dim_L:
            raise InputError("dim_LQ exceeds dim_L")
        if self.rk_Lpsi > self.dim_Lpsi:
            raise InputError("rk_Lpsi exceeds dim_Lpsi")

    def as_json(self) -> dict:
        out = {name: getattr(self, name) for name in FIELDS}
        out["sources"] = {k: self.sources[k] for k in sorted(self.sources)}
        return out


def open_orbit_check(inp: RigidityInputs) -> bool:
    """dim L/Q equals dim B_psi = (rk + dim L_psi)/2."""
    if (inp.dim_L - inp.dim_LQ) % 2:
        raise InputError("dim L - dim L_Q is odd")
    if (inp.rk_Lpsi + inp.dim_Lpsi) % 2:
        raise InputError("rk L_psi + dim L_psi is odd")
    return (inp.dim_L - inp.dim_LQ) // 2 == (inp.rk_Lpsi + inp.dim_Lpsi) // 2


def rigidity_sum(inp: RigidityInputs) -> int:
    # Swan term, minus the tame invariants at 0, minus the torus at infinity
    return (inp.dim_L - inp.dim_Lpsi) - inp.dim_LQ - inp.rk_Lpsi + inp.dim_ginv_pi1


def springer_identity(rs: RootSystem, q_subset: Iterable[int]) -> bool:
    sub = rs.levi_data(subset=q_subset)
    n_pos = sum(1 for r in sub.roots if sum(r) > 0)
    return rs.rank + 2 * n_pos == sub.dim


@dataclass
class AuditReport:
    inputs: RigidityInputs
    grading_dims: Optional[tuple]
    open_orbit: bool
    rigidity_sum: int
    swan: int
    springer: Optional[bool] = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.open_orbit and self.rigidity_sum == 0 and self.springer is not False

    def as_json(self) -> dict:
        return {
            "inputs": self.inputs.as_json(),
            "grading_dims": list(self.grading_dims) if self.grading_dims else None,
            "open_orbit": self.open_orbit,
            "rigidity_sum": self.rigidity_sum,
            "swan": self.swan,
            "springer_identity": self.springer,
            "passed": self.passed,
            "notes": list(self.notes),
        }


def audit(inp: RigidityInputs, grading_dims=None, rs: Optional[RootSystem] = None, q_subset=None,
          notes: Iterable[str] = ()) -> AuditReport:
    springer = springer_identity(rs, q_subset) if rs is not None and q_subset is not None else None
    return AuditReport(
        inp,
        tuple(grading_dims) if grading_dims else None,
        open_orbit_check(inp),
        rigidity_sum(inp),
        inp.dim_L - inp.dim_Lpsi,
        springer,
        list(notes),
    )
