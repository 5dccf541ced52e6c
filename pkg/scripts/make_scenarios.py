"""Regenerate the shipped scenario files under src/euphotic/scenarios."""
from __future__ import annotations

import json
import shutil
from pathlib import Path

from euphotic.roots import build
from euphotic.spherical import MIN_RANK, levi_subset, canned_list, levi_label
from euphotic.toral import from_partition

OUT = Path(__file__).resolve().parents[1] / "src" / "euphotic" / "scenarios"


def dump(name: str, data: dict) -> None:
    path = OUT / f"{name}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"schema": 1, "name": name, **data}, indent=2) + "\n")


def g2() -> None:
    dump("g2", {
        "title": "G2 worked example",
        "cite": "G2 worked example",
        "group": {"type": "G2", "lattice": "simply_connected"},
        "facet_P": {"J": [0, 2]},
        "facet_Q": {"J": [0]},
        "psi": {"label": "x^3 u + y^3 v", "table": {
            "dim_Lpsi": {"value": 1, "cite": "G2 worked example: L_psi is G_m by mu_2, so T_psi = B_psi = G_m"},
            "rk_Lpsi": {"value": 1, "cite": "G2 worked example: T_psi = G_m"},
        }},
        "chi": "symbolic-generic",
        "rules": [[[-1, 0], [1, 3]], [[1, 0], [-1, -3]]],
        "region": [{"root": [1, 0], "lo": "0", "hi": "1"}, {"root": [1, 3], "lo": "0", "hi": "1"}],
        "enumeration": {"bound": "3"},
        "points": [{"value": ["-1", "3/5"], "cite": "G2 worked example: the point s_(a1+a2) x_Q"}],
        "annotations": {
            "facet_Q": "J_Q = {a0} chosen from the 1/5 granularity of the region argument; L/Q is P^1",
        },
    })


# (name, type, removed node of P, [(label, J_Q)], dim L_psi, rk L_psi, cite)
EXCEPTIONAL = [
    ("f4_m3", "F4", 2, [("p_v3_a", [0, 1, 4]), ("p_v3_b", [0, 1, 3]), ("p_dual_v3_a", [1, 3, 4]),
                        ("p_dual_v3_b", [0, 3, 4])],
     2, 2, "F4 facet with m = 3: the identity component of L_psi is a 2-dimensional torus"),
    ("f4_m2", "F4", 1, [("p1_p5", [2, 3]), ("lagrangian", [0, 3, 4])],
     9, 3, "F4 facet with m = 2: L_psi identity component is SL2 of W3 times SL2 (dim 9, rank 3)"),
    ("e6_m3", "E6", 4, [("p_v3_p_v3", [0, 2, 3, 5])],
     4, 4, "E6 facet with m = 3: the identity component of L_psi is a 4-dimensional torus"),
    ("e6_m2", "E6", 5, [("flag_321", [1, 2, 3, 6])],
     17, 5, "E6 facet with m = 2: L_psi identity component maps onto the (3,3) Levi of PGL6 (dim 17, rank 5)"),
    ("e7_m3", "E7", 3, [("flag_42", [0, 1, 2, 4, 5, 7])],
     11, 5, "E7 facet with m = 3: L_psi identity component maps onto the (2,2,2) Levi of PGL6 (dim 11, rank 5)"),
    ("e7_m2", "E7", 1, [("og3", "-5"), ("og5_p1", "-2,3,0"), ("og16_p1", "-7,3,0")],
     36, 6, "E7 facet with m = 2: L_psi identity component is SL(W6), so dim B_psi = 21"),
    ("e7_m4", "E7", 4, [("flag_211_v4", [0, 5, 6, 7]), ("flag_211_v4p", [0, 1, 3, 5])],
     8, 4, "E7 facet with m = 4: L_psi identity component has dim B_psi = 6"),
    ("e8_m5", "E8", 5, [("p_v5", "-1"), ("p_v5_other_end", "-2")],
     4, 4, "E8 facet with m = 5: the identity component of L_psi is a 4-dimensional torus"),
]


def exceptional() -> None:
    for name, typ, node, qs, dim_psi, rk, cite in EXCEPTIONAL:
        rs = build(typ)
        JP = [i for i in range(rs.rank + 1) if i != node]
        for label, JQ in qs:
            if isinstance(JQ, str):
                drop = {int(t) for t in JQ[1:].split(",")}
                JQ = [i for i in JP if i not in drop]
            dump(f"{name}_{label}", {
                "title": f"{typ} split example, P off node {node}, Q {label}",
                "cite": cite.split(":")[0],
                "group": {"type": typ, "lattice": "adjoint"},
                "facet_P": {"J": JP},
                "facet_Q": {"J": sorted(JQ)},
                "psi": {"table": {
                    "dim_Lpsi": {"value": dim_psi, "cite": cite},
                    "rk_Lpsi": {"value": rk, "cite": cite},
                }},
                "chi": "symbolic-generic",
                "annotations": {"convention": "exceptional examples use the adjoint group"},
            })


# orbit fixtures: (name, type, rank, J_Q, x_Q, [(point, expect)], cite)
ORBIT = [
    ("b3_case4", "B", 3, [0, 1, 3], ["1/2", "1/2", "0"],
     [(["1", "1/2", "1/2"], "member"), (["2", "3/2", "1/2"], "member")], "type B list, case 4"),
    ("b3_case5", "B", 3, [2, 3], ["1/2", "0", "0"],
     [(["1", "1/2", "0"], "member"), (["1", "1", "1/2"], "member")], "type B list, case 5"),
    ("b2_case3", "B", 2, [2], ["1/2", "0"], [(["1", "1/2"], "member")], "type B list, case 3"),
    ("c3_case2", "C", 3, [1, 3], ["1/3", "1/3", "0"],
     [(["2", "1/3", "0"], "non-member"), (["2/3", "2/3", "0"], "member"), (["1", "2/3", "1/3"], "member"),
      (["4/3", "2/3", "0"], "member"), (["1", "1/3", "1/3"], "member"), (["4/3", "1", "1/3"], "member")],
     "type C list, case 2"),
    ("c3_case3", "C", 3, [2, 3], ["1/3", "0", "0"],
     [(["2/3", "0", "0"], "member"), (["1", "1/3", "0"], "member"), (["1", "2/3", "0"], "member"),
      (["1", "1", "1/3"], "member")], "type C list, case 3"),
    ("d4_case1", "D", 4, [3, 4], ["1/2", "1/4", "0", "0"],
     [(["3/4", "1/2", "0", "0"], "member"), (["1", "1/2", "1/4", "0"], "member"),
      (["1", "3/4", "1/2", "0"], "member"), (["1", "1", "1/2", "1/4"], "member")], "type D list, case 1"),
    ("d4_case2", "D", 4, [1, 2, 3], ["1/4", "1/4", "1/4", "1/4"],
     [(["3/4", "3/4", "1/4", "1/4"], "member"), (["5/4", "3/4", "1/4", "-1/4"], "member")],
     "type D list, case 2"),
    ("d5_case3", "D", 5, [1, 3, 4, 5], ["1/4", "1/4", "0", "0", "0"],
     [(["3/4", "3/4", "1/4", "0", "0"], "non-member"), (["5/4", "3/4", "3/4", "0", "0"], "non-member"),
      (["5/4", "1", "3/4", "3/4", "0"], "non-member")], "type D list, case 3"),
    ("d5_case4", "D", 5, [1, 2, 3, 4], ["1/4"] * 5,
     [(["3/4", "3/4", "1/4", "1/4", "1/4"], "member"), (["5/4", "3/4", "1/4", "1/4", "-1/4"], "member"),
      (["7/4", "5/4", "3/4", "1/4", "1/4"], "member")], "type D list, case 4"),
    ("d6_case5", "D", 6, [1, 2, 4, 5, 6], ["1/4", "1/4", "1/4", "0", "0", "0"],
     [(["3/4", "3/4", "1/4", "0", "0", "0"], "member"), (["1", "1", "3/4", "3/4", "1/4", "0"], "member"),
      (["5/4", "1", "3/4", "3/4", "0", "0"], "member")], "type D list, case 5"),
    ("d6_case6", "D", 6, [1, 2, 3, 4, 5], ["1/4"] * 6,
     [([a, b, c, d, e, f], "member") for a, b, c, d, e, f in [
         ("3/4", "3/4", "1/4", "1/4", "1/4", "1/4"), ("3/4", "3/4", "3/4", "3/4", "1/4", "1/4"),
         ("5/4", "3/4", "1/4", "1/4", "1/4", "-1/4"), ("5/4", "3/4", "3/4", "3/4", "1/4", "-1/4"),
         ("5/4", "5/4", "3/4", "3/4", "1/4", "1/4"), ("5/4", "5/4", "5/4", "3/4", "1/4", "-1/4"),
         ("7/4", "5/4", "3/4", "1/4", "1/4", "1/4"), ("7/4", "7/4", "5/4", "3/4", "1/4", "-1/4"),
         ("9/4", "7/4", "5/4", "3/4", "1/4", "1/4")]],
     "type D list, case 6"),
]


def orbits() -> None:
    for name, L, n, JQ, xq, pts, cite in ORBIT:
        rs = build(L, n)
        data = {
            "title": f"{rs.name} orbit points, {cite}",
            "cite": cite,
            "group": {"type": L, "rank": n, "lattice": "simply_connected"},
            "facet_P": {"J": list(range(1, n + 1))},
            "facet_Q": {"J": JQ},
            "x_Q": {"classical": xq, "cite": f"{cite}: x_Q"},
            "enumeration": {"bound": "4" if n <= 4 else "3"},
            "points": [{"classical": p, "cite": f"{cite}: listed point", "expect": e} for p, e in pts],
        }
        if any(e != "member" for _, e in pts):
            data["annotations"] = {"listed_non_members": "listed points that fail the orbit test are kept and flagged"}
        dump(name, data)


def families() -> None:
    for L in "ABCD":
        for n in range(MIN_RANK[L], 9):
            rs = build(L, n)
            for p in canned_list(L, n):
                psi_l, q_l = levi_label(rs, p.psi), levi_label(rs, p.q)
                def short(lab):
                    return lab.strip("()").replace("P_", "").replace(",", "-").replace("'", "p")
                tag = f"{rs.name.lower()}_psi{short(psi_l)}_q{short(q_l)}"
                if p.psi[0] == "part":
                    psi = {"label": psi_l, "blocks": [[lab, list(idx)] for lab, idx in from_partition(rs, p.psi[1]).blocks]}
                else:
                    psi = {"label": psi_l, "levi": sorted(levi_subset(rs, p.psi))}
                dump(f"families/{tag}", {
                    "title": f"{rs.name}: psi {psi_l}, Q {q_l}",
                    "cite": p.case,
                    "group": {"type": L, "rank": n, "lattice": "simply_connected"},
                    "facet_P": {"J": list(range(1, n + 1))},
                    "facet_Q": {"J": sorted(levi_subset(rs, p.q))},
                    "psi": psi,
                    "chi": "symbolic-generic",
                })


if __name__ == "__main__":
    if OUT.exists():
        shutil.rmtree(OUT)
    OUT.mkdir(parents=True)
    g2()
    exceptional()
    orbits()
    families()
    print(len(list(OUT.rglob("*.json"))), "scenarios written")
