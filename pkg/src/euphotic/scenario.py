"""Scenario files: a group, two facets, psi, chi and enumeration settings.

Every number taken from a table rather than computed carries a "cite"
string; the loader refuses files where one is missing.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .apartment import Facet, check_lattice, facet
from .characters import CharacterTuple
from .errors import InputError
from .exact import RatVec, rat
from .grading import grade, levi_dim
from .hessenberg import Predicate, Strip
from .rigidity import RigidityInputs, audit
from .roots import RootSystem, build
from .toral import centralizer, from_json

SCHEMA = 1


@dataclass
class Scenario:
    name: str
    rs: RootSystem
    lattice: str
    facet_P: Facet
    facet_Q: Facet
    x_Q: RatVec
    psi: Optional[dict]
    chi: Union[str, CharacterTuple]
    rules: Optional[list] = None
    region: list = field(default_factory=list)
    bound: Optional[object] = None
    predicates: list = field(default_factory=list)
    dedupe: bool = True
    points: list = field(default_factory=list)  # (y in value coordinates, cite)
    rigidity: dict = field(default_factory=dict)
    annotations: dict = field(default_factory=dict)
    title: str = ""
    source: str = ""

    def rigidity_inputs(self) -> RigidityInputs:
        if self.psi is None:
            raise InputError(f"{self.name}: missing fields: psi")
        if not self.facet_Q.J <= self.facet_P.J:
            raise InputError(f"{self.name}: facet_Q.J must lie in facet_P.J for the audit")
        sources = {"dim_L": "computed", "dim_LQ": "computed"}
        kind = self.psi["kind"]
        if kind == "table":
            dim_psi, rk = self.psi["dim_Lpsi"], self.psi["rk_Lpsi"]
            sources["dim_Lpsi"] = self.psi["cite"]["dim_Lpsi"]
            sources["rk_Lpsi"] = self.psi["cite"]["rk_Lpsi"]
        else:
            if not self.facet_P.hyperspecial:
                raise InputError("toral psi needs a hyperspecial facet P; use a table")
            if kind == "blocks":
                dim_psi = centralizer(self.psi["functional"]).dim_Gpsi
            else:
                dim_psi = self.rs.levi_data(subset=self.psi["levi"]).dim
            rk = self.rs.rank
            sources["dim_Lpsi"] = sources["rk_Lpsi"] = "computed"
        ginv = self.rigidity.get("dim_ginv_pi1", 0)
        sources["dim_ginv_pi1"] = self.rigidity.get("cite", "default")
        return RigidityInputs(levi_dim(self.facet_P), levi_dim(self.facet_Q), dim_psi, rk, ginv, sources)

    def audit(self):
        notes = [f"{k}: {v}" for k, v in sorted(self.annotations.items())]
        sub = self.facet_Q.J if self.facet_Q.J <= set(range(1, self.rs.rank + 1)) else None
        return audit(self.rigidity_inputs(), grade(self.facet_P).dims, self.rs, sub, notes)


def _need(d: dict, key: str, where: str):
    if key not in d:
        raise InputError(f"{where}: missing field {key!r}")
    return d[key]


def _cited(d: dict, key: str, where: str, missing: list):
    item = _need(d, key, where)
    if not isinstance(item, dict) or "value" not in item:
        raise InputError(f"{where}.{key}: expected {{'value': ..., 'cite': ...}}")
    if not str(item.get("cite", "")).strip():
        missing.append(f"{where}.{key}")
    return item["value"], item.get("cite", "")


def _point(rs: RootSystem, item: dict, where: str) -> RatVec:
    if "classical" in item:
        return rs.from_classical([rat(c) for c in item["classical"]])
    if "value" in item:
        y = tuple(rat(c) for c in item["value"])
        if len(y) != rs.rank:
            raise InputError(f"{where}: expected {rs.rank} coordinates")
        return y
    raise InputError(f"{where}: give 'classical' or 'value' coordinates")


def _facet(rs: RootSystem, d: dict, where: str) -> Facet:
    J = _need(d, "J", where)
    try:
        return facet(rs, [int(j) for j in J])
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}: bad J {J!r}") from exc


def parse(data: dict, name: str = "scenario") -> Scenario:
    if not isinstance(data, dict):
        raise InputError("scenario must be a JSON object")
    if data.get("schema", SCHEMA) != SCHEMA:
        raise InputError(f"unsupported scenario schema {data.get('schema')!r}")
    missing: list[str] = []
    g = _need(data, "group", name)
    rs = build(_need(g, "type", "group"), g.get("rank"))
    lattice = check_lattice(g.get("lattice", "simply_connected"))
    P = _facet(rs, _need(data, "facet_P", name), "facet_P")
    Qf = _facet(rs, _need(data, "facet_Q", name), "facet_Q")

    if "x_Q" in data:
        xq = data["x_Q"]
        if not str(xq.get("cite", "")).strip():
            missing.append("x_Q")
        x_Q = _point(rs, xq, "x_Q")
    else:
        x_Q = Qf.barycenter

    p = data.get("psi")
    if p is None:
        psi = None
    elif "table" in p:
        t = p["table"]
        dim_psi, c1 = _cited(t, "dim_Lpsi", "psi.table", missing)
        rk, c2 = _cited(t, "rk_Lpsi", "psi.table", missing)
        psi = {"kind": "table", "dim_Lpsi": int(dim_psi), "rk_Lpsi": int(rk),
               "cite": {"dim_Lpsi": c1, "rk_Lpsi": c2}}
    elif "blocks" in p:
        psi = {"kind": "blocks", "functional": from_json(rs, p["blocks"])}
    elif "levi" in p:
        psi = {"kind": "levi", "levi": set(int(i) for i in p["levi"])}
        rs.levi_data(subset=psi["levi"])
    else:
        raise InputError("psi: give 'table', 'blocks' or 'levi'")
    if psi is not None:
        psi["label"] = p.get("label", "")

    chi_raw = data.get("chi", "symbolic-generic")
    chi = chi_raw if chi_raw == "symbolic-generic" else CharacterTuple.from_json(chi_raw)

    rules = data.get("rules")
    if rules is not None:
        rules = [[tuple(int(c) for c in r) for r in rule] for rule in rules]
    try:
        region = [Strip(tuple(int(c) for c in s["root"]), rat(s["lo"]), rat(s["hi"])) for s in data.get("region", [])]
    except (KeyError, TypeError) as exc:
        raise InputError(f"region: malformed strip ({exc})") from exc

    en = data.get("enumeration", {})
    bound = rat(en["bound"]) if "bound" in en else None
    preds = [Predicate.from_json(d) for d in en.get("predicates", [])]

    points = []
    for k, item in enumerate(data.get("points", [])):
        if not str(item.get("cite", "")).strip():
            missing.append(f"points[{k}]")
        points.append((_point(rs, item, f"points[{k}]"), item.get("cite", ""), item.get("expect", "member")))

    rig = data.get("rigidity", {})
    if "dim_ginv_pi1" in rig and not str(rig.get("cite", "")).strip():
        missing.append("rigidity.dim_ginv_pi1")

    if missing:
        raise InputError("missing citations: " + ", ".join(missing))
    return Scenario(
        name=data.get("name", name), rs=rs, lattice=lattice, facet_P=P, facet_Q=Qf, x_Q=x_Q,
        psi=psi, chi=chi, rules=rules, region=region, bound=bound, predicates=preds,
        dedupe=bool(en.get("dedupe", True)), points=points, rigidity=rig,
        annotations=data.get("annotations", {}), title=data.get("title", ""), source=data.get("cite", ""),
    )


def load(path: Union[str, Path]) -> Scenario:
    """Load a scenario from a path, or by name from the shipped set."""
    p = Path(path)
    if not p.exists():
        shipped = shipped_path(str(path))
        if shipped is None:
            raise InputError(f"no scenario at {path}")
        p = shipped
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}: invalid JSON ({exc})") from exc
    return parse(data, p.stem)


def _root():
    return resources.files("euphotic").joinpath("scenarios")


def shipped_names() -> list[str]:
    """Shipped scenario names; generated family instances live under families/."""
    out = []
    for entry in _root().iterdir():
        if entry.name.endswith(".json"):
            out.append(entry.name[:-5])
        elif entry.is_dir() and not entry.name.startswith("_"):
            out.extend(f"{entry.name}/{e.name[:-5]}" for e in entry.iterdir() if e.name.endswith(".json"))
    return sorted(out)


def shipped_path(name: str) -> Optional[Path]:
    stem = name[:-5] if name.endswith(".json") else name
    stem = stem[:-9] if stem.endswith(".scenario") else stem
    entry = _root()
    for part in stem.split("/"):
        entry = entry.joinpath(part)
    entry = Path(str(entry) + ".json")
    return entry if entry.is_file() else None
