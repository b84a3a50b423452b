"""Exact desk-scale Ramsey and Turan computation on top of the
isomorph-free enumeration.

The Ramsey number is treated as the minimum N such that every graph
on N vertices with minimum degree at least N-n contains the even
cycle; verification walks N upward from the certified construction
bound, because lower witnesses are cheap and upper verification is
the expensive side.  A PASS at order N implies a PASS at every larger
order (induced subgraphs inherit the degree condition), so the first
PASS is the value.
"""

from __future__ import annotations

import base64
import json
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable

from .constructions import (
    LowerBoundReport,
    ParamTriple,
    build_h1,
    build_h2,
    certify_lower_bound,
    closed_form_value,
    extremal_size,
)
from .cycles import find_cycle_of_length, find_cycle_of_length_at_least
from .enumeration import DEFAULT_CEILING, enumerate_graphs
from .graph6 import to_graph6
from .graphs import Graph
from .parallel import scan_ordered
from .witnesses import BudgetExhausted

PASS = "PASS"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE"


class ResumeTokenError(ValueError):
    """Malformed or mismatched resume token."""


def make_resume_token(order: int, ell: int, n: int, checked: int) -> str:
    payload = json.dumps(
        {"checked": checked, "ell": ell, "n": n, "order": order}, sort_keys=True
    )
    return base64.urlsafe_b64encode(payload.encode("ascii")).decode("ascii")


def parse_resume_token(token: str) -> dict:
    try:
        data = json.loads(base64.urlsafe_b64decode(token.encode("ascii")))
        return {k: int(data[k]) for k in ("order", "ell", "n", "checked")}
    except Exception as exc:
        raise ResumeTokenError(f"bad resume token: {exc}") from exc


@dataclass
class UpperVerdict:
    """Outcome of checking one order: PASS when every enumerated class
    with the degree bound contains the cycle, FAIL with the first
    counterexample otherwise."""

    status: str
    order: int
    ell: int
    n: int
    min_degree_bound: int
    classes_checked: int
    witness: Graph | None = None
    resume_token: str | None = None

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "min_degree_bound": self.min_degree_bound,
            "classes_checked": self.classes_checked,
            "verdict": self.status,
            "witness_graph6": (
                to_graph6(self.witness).decode("ascii") if self.witness else None
            ),
            "resume_token": self.resume_token,
        }


def _cycle_verdict(g: Graph, k: int, max_nodes: int | None) -> str:
    try:
        return PASS if find_cycle_of_length(g, k, max_nodes=max_nodes) else FAIL
    except BudgetExhausted:
        return INDETERMINATE


def verify_upper_at(
    order: int,
    ell: int,
    n: int,
    *,
    max_nodes: int | None = None,
    workers: int = 1,
    resume: str | None = None,
    ceiling: int = DEFAULT_CEILING,
    allow_above_ceiling: bool = False,
) -> UpperVerdict:
    """Check whether every graph of the given order with min degree
    >= order - n contains the 2*ell-cycle.

    A FAIL witness is itself a certified lower-bound graph for
    R > order.  A budget stop returns INDETERMINATE with a resume
    token; resuming skips the classes already checked (the enumeration
    stream is deterministic, so an index suffices).
    """
    skip = 0
    if resume is not None:
        info = parse_resume_token(resume)
        if (info["order"], info["ell"], info["n"]) != (order, ell, n):
            raise ResumeTokenError(
                f"resume token is for order={info['order']}, ell={info['ell']}, "
                f"n={info['n']}"
            )
        skip = info["checked"]
    bound = max(order - n, 0)
    stream = enumerate_graphs(
        order, bound, ceiling=ceiling, allow_above_ceiling=allow_above_ceiling
    )
    graphs = _skip(stream, skip)
    check = partial(_cycle_verdict, k=2 * ell, max_nodes=max_nodes)
    checked = skip
    for g, status in _zip_scan(check, graphs, workers):
        if status == PASS:
            checked += 1
            continue
        if status == FAIL:
            return UpperVerdict(FAIL, order, ell, n, bound, checked + 1, witness=g)
        return UpperVerdict(
            INDETERMINATE,
            order,
            ell,
            n,
            bound,
            checked,
            resume_token=make_resume_token(order, ell, n, checked),
        )
    return UpperVerdict(PASS, order, ell, n, bound, checked)


def _skip(stream, k):
    for i, g in enumerate(stream):
        if i >= k:
            yield g


def _zip_scan(check, graphs: Iterable[Graph], workers: int):
    pending: list[Graph] = []

    def tap():
        for g in graphs:
            pending.append(g)
            yield g

    for status in scan_ordered(check, tap(), workers):
        yield pending.pop(0), status


@dataclass
class RamseyResult:
    """Computed Ramsey value with its certificate trail.

    When final, value = bracket_lo = bracket_hi and lower_witness has
    order value-1.  Partial results (ceiling or budget) carry the
    bracket and, for budget stops, a resume token.
    """

    ell: int
    n: int
    value: int | None
    final: bool
    bracket_lo: int
    bracket_hi: int | None
    lower_witness: Graph | None
    witness_report: LowerBoundReport | None
    construction_size: int
    closed_form: tuple[int, str] | None
    upper_log: list[dict] = field(default_factory=list)
    resume_token: str | None = None

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "n": self.n,
            "value": self.value,
            "final": self.final,
            "bracket": {"lo": self.bracket_lo, "hi": self.bracket_hi},
            "construction_size": self.construction_size,
            "closed_form": (
                {"value": self.closed_form[0], "source": self.closed_form[1]}
                if self.closed_form
                else None
            ),
            "lower_witness_graph6": (
                to_graph6(self.lower_witness).decode("ascii")
                if self.lower_witness
                else None
            ),
            "witness_report": self.witness_report.to_json() if self.witness_report else None,
            "upper_log": self.upper_log,
            "resume_token": self.resume_token,
        }


def ramsey_number(
    ell: int,
    n: int,
    *,
    max_nodes: int | None = None,
    workers: int = 1,
    ceiling: int = DEFAULT_CEILING,
    allow_above_ceiling: bool = False,
    resume: str | None = None,
) -> RamseyResult:
    """Exact Ramsey value of the 2*ell-cycle versus the n-star, by
    exhaustive verification above the certified construction bound."""
    params = ParamTriple(ell, n)
    size = extremal_size(params)
    candidates = []
    for g in (build_h1(params), build_h2(params)):
        rep = certify_lower_bound(g, params)
        if rep.certified_bound is not None:
            candidates.append((rep.certified_bound, g, rep))
    if not candidates:
        raise RuntimeError("construction certification failed; this is a bug")
    bound, witness, report = max(candidates, key=lambda c: c[0])
    assert bound == size + 1, "constructions must realize the extremal size"
    closed = closed_form_value(ell, n)
    upper_log: list[dict] = []
    order = bound
    resume_order = None
    if resume is not None:
        info = parse_resume_token(resume)
        if (info["ell"], info["n"]) != (ell, n):
            raise ResumeTokenError("resume token is for different parameters")
        if info["order"] < order:
            raise ResumeTokenError(
                f"resume token order {info['order']} is below the certified "
                f"bound {order}"
            )
        resume_order = info["order"]
        # orders below the token are re-verified (FAILs are cheap and the
        # rerun is deterministic); the token only skips work at its own order
    while True:
        if order > ceiling and not allow_above_ceiling:
            return RamseyResult(
                ell, n, None, False, order, None, witness, report, size, closed,
                upper_log,
            )
        verdict = verify_upper_at(
            order, ell, n,
            max_nodes=max_nodes, workers=workers,
            resume=resume if order == resume_order else None,
            ceiling=ceiling, allow_above_ceiling=allow_above_ceiling,
        )
        upper_log.append(verdict.to_json())
        if verdict.status == PASS:
            return RamseyResult(
                ell, n, order, True, order, order, witness, report, size, closed,
                upper_log,
            )
        if verdict.status == FAIL:
            witness = verdict.witness
            report = certify_lower_bound(witness, params)
            order += 1
            continue
        return RamseyResult(
            ell, n, None, False, order, None, witness, report, size, closed,
            upper_log, resume_token=verdict.resume_token,
        )


MODE_EXACT = "exact_2ell"
MODE_AT_LEAST = "at_least_2ell"


@dataclass
class TuranResult:
    """Maximum edge count over forbidden-cycle-free graphs of one
    order, with every extremal class retained."""

    order: int
    ell: int
    mode: str
    max_edges: int
    extremal_examples: list[Graph]
    classes_examined: int
    free_classes: int

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "ell": self.ell,
            "mode": self.mode,
            "max_edges": self.max_edges,
            "extremal_graph6": [
                to_graph6(g).decode("ascii") for g in self.extremal_examples
            ],
            "classes_examined": self.classes_examined,
            "free_classes": self.free_classes,
        }


def _is_free(g: Graph, ell: int, mode: str, max_nodes: int | None) -> bool:
    if mode == MODE_EXACT:
        return find_cycle_of_length(g, 2 * ell, max_nodes=max_nodes) is None
    if mode == MODE_AT_LEAST:
        return find_cycle_of_length_at_least(g, 2 * ell, max_nodes=max_nodes) is None
    raise ValueError(f"unknown mode {mode!r}; use {MODE_EXACT!r} or {MODE_AT_LEAST!r}")


def turan_number(
    order: int,
    ell: int,
    mode: str = MODE_AT_LEAST,
    *,
    max_nodes: int | None = None,
    workers: int = 1,
    ceiling: int = DEFAULT_CEILING,
    allow_above_ceiling: bool = False,
) -> TuranResult:
    """Exact maximum edge count of forbidden-cycle-free graphs of the
    given order, by exhaustive enumeration."""
    if mode not in (MODE_EXACT, MODE_AT_LEAST):
        raise ValueError(f"unknown mode {mode!r}; use {MODE_EXACT!r} or {MODE_AT_LEAST!r}")
    check = partial(_turan_check, ell=ell, mode=mode, max_nodes=max_nodes)
    best = -1
    extremal: list[Graph] = []
    examined = 0
    free = 0
    stream = enumerate_graphs(
        order, 0, ceiling=ceiling, allow_above_ceiling=allow_above_ceiling
    )
    for g, (is_free, edges) in _zip_scan(check, stream, workers):
        examined += 1
        if not is_free:
            continue
        free += 1
        if edges > best:
            best = edges
            extremal = [g]
        elif edges == best:
            extremal.append(g)
    return TuranResult(order, ell, mode, best, extremal, examined, free)


def _turan_check(g: Graph, ell: int, mode: str, max_nodes: int | None):
    return _is_free(g, ell, mode, max_nodes), g.edge_count()
