"""Analysis reports: aggregation of all checks and their JSON form."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from importlib import resources
from typing import Any

from . import __version__
from .algebra import commutator_constants, jacobi_holds, structure_constants
from .latin import Table, is_latin, is_standard_form
from .loops import Loop, NotALoop, NotInvertible, Quasigroup, inverse_map
from .properties import INVERSE_FREE, NOT_EVALUATED, PropertyId, check_identity_on_quasigroup, full_report
from .subloops import DEFAULT_MAX_ORDER, enumerate_subloops, is_simple, lagrange_violations, nonassociative_census, subgroup_census
from .sweep import CheckResult

__all__ = [
    "FORMAT_VERSION",
    "SWEEP_MAX_ORDER",
    "AnalysisReport",
    "analyze",
    "load_schema",
    "summary_lines",
]

FORMAT_VERSION = "1.0"
# Exhaustive sweeps above this order need an explicit override.
SWEEP_MAX_ORDER = 256


def _result_dict(r: CheckResult) -> dict[str, Any]:
    out: dict[str, Any] = {"holds": r.holds, "identity": r.identity, "checked_count": r.checked_count}
    if r.witness is not None:
        out["witness"] = list(r.witness)
    if "coefficients" in r.detail:
        out["coefficients"] = list(r.detail["coefficients"])
    return out


@dataclass
class AnalysisReport:
    """JSON-native record of one analysis; no timestamps (see :meth:`to_json`)."""

    order: int
    source: dict[str, Any]
    certifications: dict[str, bool]
    properties: dict[str, dict[str, Any]] = field(default_factory=dict)
    skipped_properties: dict[str, str] = field(default_factory=dict)
    not_evaluated: dict[str, str] = field(default_factory=dict)
    subgroup_census: dict[str, int] | None = None
    nonassociative_subloops: dict[str, int] | None = None
    subloop_orders: list[int] | None = None
    simple: bool | None = None
    lagrange_violations: list[list[int]] | None = None
    subloop_note: str | None = None
    jacobi: dict[str, Any] | None = None
    format_version: str = FORMAT_VERSION

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if d["jacobi"] is None:
            del d["jacobi"]
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisReport":
        return cls(**d)

    def to_json(self, envelope: bool = True) -> str:
        """Serialize; the timestamp lives only in the ``envelope`` wrapper."""
        body = self.to_dict()
        if envelope:
            body = {
                "envelope": {
                    "tool": f"nafil {__version__}",
                    "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                },
                "report": body,
            }
        return json.dumps(body, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        d = json.loads(text)
        if "report" in d and "envelope" in d:
            d = d["report"]
        return cls.from_dict(d)


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("nafil").joinpath("report_schema.json").read_text())


def analyze(
    table: Table,
    source: dict[str, Any] | None = None,
    jacobi: bool = False,
    max_order: int | None = None,
    workers: int = 1,
) -> AnalysisReport:
    """Run every certification and check on ``table``.

    ``max_order`` lifts both the sweep limit (256) and the subloop
    enumeration limit (64).  Tables that are Latin but have no identity get
    only the inverse-free identity checks.  Raises ValueError for tables
    beyond the sweep limit and for non-Latin tables.
    """
    n = table.n
    sweep_cap = SWEEP_MAX_ORDER if max_order is None else max_order
    enum_cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if n > sweep_cap:
        raise ValueError(f"order {n} exceeds the exhaustive-sweep limit {sweep_cap}; pass a larger max order")
    if not is_latin(table):
        Quasigroup(table)  # raises NotLatin with the first offending position
    rep = AnalysisReport(
        order=n,
        source=source or {"kind": "external"},
        certifications={"latin": True, "standard_form": is_standard_form(table), "loop": False, "invertible": False},
        not_evaluated=dict(NOT_EVALUATED),
    )
    try:
        loop = Loop(table)
    except NotALoop as exc:
        q = Quasigroup(table)
        for p in PropertyId:
            if p in INVERSE_FREE:
                rep.properties[p.value] = _result_dict(check_identity_on_quasigroup(q, p, workers=workers))
            else:
                rep.skipped_properties[p.value] = f"not a loop: {exc}"
        rep.subloop_note = "not a loop"
        return rep
    rep.certifications["loop"] = True
    try:
        inverse_map(loop)
        rep.certifications["invertible"] = True
    except NotInvertible:
        pass

    props = full_report(loop, workers=workers)
    rep.properties = {p.value: _result_dict(r) for p, r in props.results.items()}
    rep.skipped_properties = {p.value: why for p, why in props.skipped.items()}

    if n <= enum_cap:
        subs = enumerate_subloops(loop, max_order=enum_cap)
        rep.subgroup_census = {str(k): v for k, v in subgroup_census(subs).items()}
        rep.nonassociative_subloops = {str(k): v for k, v in nonassociative_census(subs).items()}
        rep.subloop_orders = [s.order for s in subs]
        rep.simple = is_simple(loop, subs)
        rep.lagrange_violations = [list(v) for v in lagrange_violations(loop, subs)]
    else:
        rep.subloop_note = f"order {n} exceeds the enumeration limit {enum_cap}"

    if jacobi:
        rep.jacobi = _result_dict(jacobi_holds(commutator_constants(structure_constants(loop))))
    return rep


def _census_text(census: dict[str, int]) -> str:
    if not census:
        return "none"
    items = sorted(census.items(), key=lambda kv: int(kv[0]))
    return ", ".join(f"{count} of order {order}" for order, count in items)


def summary_lines(rep: AnalysisReport) -> list[str]:
    src = rep.source.get("kind", "external")
    lines = [f"order: {rep.order} ({src})"]
    lines += [f"{k}: {'yes' if v else 'no'}" for k, v in rep.certifications.items()]
    for name in (p.value for p in PropertyId):
        if name in rep.properties:
            r = rep.properties[name]
            if r["holds"]:
                lines.append(f"{name}: holds")
            else:
                lines.append(f"{name}: fails, witness ({', '.join(map(str, r['witness']))})")
        elif name in rep.skipped_properties:
            lines.append(f"{name}: skipped ({rep.skipped_properties[name]})")
    for name, why in rep.not_evaluated.items():
        lines.append(f"{name}: {why}")
    if rep.subgroup_census is not None:
        lines.append(f"subgroups: {_census_text(rep.subgroup_census)}")
        if rep.nonassociative_subloops:
            lines.append(f"non-associative subloops: {_census_text(rep.nonassociative_subloops)}")
        lines.append(f"simple: {'yes' if rep.simple else 'no'}")
        orders = Counter(o for o, _ in rep.lagrange_violations or [])
        text = ", ".join(f"{o} does not divide {rep.order} ({c} subloop{'s' if c > 1 else ''})" for o, c in sorted(orders.items()))
        lines.append("lagrange violations: " + (text or "none"))
    elif rep.subloop_note:
        lines.append(f"subloops: not analysed ({rep.subloop_note})")
    if rep.jacobi is not None:
        if rep.jacobi["holds"]:
            lines.append("JACOBI: holds")
        else:
            lines.append(f"JACOBI: fails, witness ({', '.join(map(str, rep.jacobi['witness']))})")
    return lines
