"""Stable text/JSON/CSV rendering of the exact objects.

Rationals travel as [numerator, denominator] pairs in JSON and as "p/q"
strings in text; floats appear only in geodesic samples.  All JSON is
dumped with sorted keys and a trailing newline so that repeated runs
are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .geometry import CurvatureTable, GeodesicCurve
from .grading import Grading
from .linalg import SymmetricForm
from .metrics import FormFamily, SignatureReport


def rat(x: Fraction) -> list[int]:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def vector_json(v: Sequence) -> list[list[int]]:
    return [rat(c) for c in v]


def form_json(f: SymmetricForm) -> dict:
    return {
        "size": f.dim,
        "entries": [rat(f.entry(i, j)) for i in range(f.dim) for j in range(f.dim)],
    }


def matrix_json(rows: Sequence[Sequence]) -> dict:
    return {
        "size": len(rows),
        "entries": [rat(x) for row in rows for x in row],
    }


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Per-stage documents.
# ---------------------------------------------------------------------------


def grading_doc(grading: Grading, verified: bool) -> dict:
    comps = []
    for comp in grading.components():
        comps.append(
            {
                "label": comp.label,
                "dim": comp.dim,
                "basis": [grading.algebra.basis_label(k) for k in comp.indices],
            }
        )
    return {
        "n": grading.algebra.n,
        "partition": list(grading.partition) if grading.partition else None,
        "components": comps,
        "verified": verified,
    }


def grading_text(grading: Grading, verified: bool) -> str:
    lines = [f"so({grading.algebra.n}), partition {grading.partition}"]
    for comp in grading.components():
        basis = ", ".join(grading.algebra.basis_label(k) for k in comp.indices)
        lines.append(f"  g_{comp.label}: dim {comp.dim}  [{basis}]")
    lines.append(f"verified: {'yes' if verified else 'NO'}")
    return "\n".join(lines) + "\n"


def family_doc(family: FormFamily, nat_reductive_dim: int) -> dict:
    g = family.grading
    return {
        "n": g.algebra.n,
        "partition": list(g.partition) if g.partition else None,
        "family_dim": family.dimension,
        "parameters": [
            {"name": n, "support": s} for n, s in zip(family.names, family.supports)
        ],
        "nat_reductive_dim": nat_reductive_dim,
    }


def family_text(family: FormFamily, nat_reductive_dim: int) -> str:
    lines = [f"invariant family dimension: {family.dimension}"]
    for name, sup in zip(family.names, family.supports):
        lines.append(f"  {name:<10} {sup}")
    lines.append(f"naturally reductive subfamily dimension: {nat_reductive_dim}")
    return "\n".join(lines) + "\n"


def reductive_doc(refined: FormFamily) -> dict:
    g = refined.grading
    assert refined.parent is not None and refined.parent_coords is not None
    return {
        "n": g.algebra.n,
        "partition": list(g.partition) if g.partition else None,
        "parent_parameters": list(refined.parent.names),
        "dim": refined.dimension,
        "directions": [vector_json(c) for c in refined.parent_coords],
    }


def reductive_text(refined: FormFamily) -> str:
    assert refined.parent is not None and refined.parent_coords is not None
    lines = [f"naturally reductive subfamily dimension: {refined.dimension}"]
    for name, coords in zip(refined.names, refined.parent_coords):
        terms = ", ".join(
            f"{pn}={rat_str(c)}" for pn, c in zip(refined.parent.names, coords)
        )
        lines.append(f"  {name}: {terms}")
    return "\n".join(lines) + "\n"


def curvature_doc(grading: Grading, table: CurvatureTable) -> dict:
    return {
        "n": grading.algebra.n,
        "partition": list(grading.partition) if grading.partition else None,
        "basis": list(table.labels),
        "entries": [
            {"i": i, "j": j, "value": [num, den]}
            for (i, j, num, den) in table.csv_rows()
        ],
        "all_nonnegative": table.all_nonnegative(),
    }


def curvature_csv(table: CurvatureTable) -> str:
    lines = ["i,j,numerator,denominator"]
    for i, j, num, den in table.csv_rows():
        lines.append(f"{i},{j},{num},{den}")
    return "\n".join(lines) + "\n"


def curvature_text(table: CurvatureTable) -> str:
    return "\n".join(table.text_lines()) + "\n"


def lorentz_doc(grading: Grading, report: SignatureReport | None) -> dict:
    base = {
        "n": grading.algebra.n,
        "partition": list(grading.partition) if grading.partition else None,
    }
    if report is None:
        base.update({"found": False, "message": "none found"})
        return base
    base.update(
        {
            "found": True,
            "assignment": {k: rat(v) for k, v in report.assignment().items()},
            "values": vector_json(report.parameter_values),
            "inertia": list(report.inertia),
        }
    )
    return base


def lorentz_text(report: SignatureReport | None) -> str:
    if report is None:
        return "none found\n"
    parts = ", ".join(f"{k}={rat_str(v)}" for k, v in report.assignment().items())
    p, n, z = report.inertia
    return f"lorentzian member: {parts}\ninertia: ({p}, {n}, {z})\n"


def geodesic_doc(grading: Grading, label: str, curve: GeodesicCurve, samples: dict[str, float]) -> dict:
    values = {}
    for key, t in samples.items():
        values[key] = [[float(x) for x in row] for row in curve.at(t)]
    return {
        "n": grading.algebra.n,
        "partition": list(grading.partition) if grading.partition else None,
        "generator": label,
        "closed": True,
        "period": curve.period(),
        "samples": values,
    }


def geodesic_text(label: str, curve: GeodesicCurve, samples: dict[str, float]) -> str:
    lines = [f"generator {label}: closed curve, period 2*pi"]
    for key, t in samples.items():
        lines.append(f"t = {key}:")
        m = curve.at(t)
        for row in m:
            lines.append("  " + "  ".join(f"{x: .12f}" for x in row))
    return "\n".join(lines) + "\n"
