"""Classify and audit every group in the survey corpus."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .audit import PROPERTIES, AuditResult, audit_group
from .catalog import GroupSpec, build, survey_corpus
from .classify import FLAGS, classify
from .config import DEFAULT_LIMITS, Limits
from .errors import CapExceeded


@dataclass
class SurveyResult:
    max_order: int
    rows: list[dict]
    checked: Counter = field(default_factory=Counter)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "max_order": self.max_order,
            "rows": self.rows,
            "audit": {
                "checked": {p: self.checked.get(p, 0) for p in PROPERTIES},
                "violations": self.violations,
            },
        }


def survey_one(spec: GroupSpec, limits: Limits = DEFAULT_LIMITS,
               timings: bool = False) -> tuple[dict, AuditResult | None]:
    try:
        g = build(spec, limits)
        report = classify(g, spec.name, limits)
        audit = audit_group(g, spec.name, limits)
    except CapExceeded as exc:
        return {"group": spec.name, "order": spec.order, "error": str(exc)}, None
    return report.to_dict(timings=timings), audit


def run_survey(max_order: int, jobs: int | None = None, limits: Limits = DEFAULT_LIMITS,
               timings: bool = False) -> SurveyResult:
    """Results are emitted in corpus order whatever the worker count."""
    specs = survey_corpus(max_order)
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            outs = list(ex.map(survey_one, specs, [limits] * len(specs), [timings] * len(specs)))
    else:
        outs = [survey_one(s, limits, timings) for s in specs]
    result = SurveyResult(max_order, [row for row, _ in outs])
    for _, audit in outs:
        if audit is not None:
            result.checked.update(audit.checked)
            result.violations.extend(audit.violations)
    return result


def rows_to_csv(rows: list[dict]) -> list[list[str]]:
    header = ["group", "order", "num_subgroups", *FLAGS, "error"]
    out = [header]
    for r in rows:
        if "error" in r:
            out.append([r["group"], str(r["order"] or ""), "", *[""] * len(FLAGS), r["error"]])
        else:
            out.append([r["group"], str(r["order"]), str(r["num_subgroups"]),
                        *[str(r["flags"][f]).lower() for f in FLAGS], ""])
    return out
