"""Versioned JSON certificate envelopes.

Envelopes are long-lived artifacts: schema versioned, deterministic
byte-for-byte serialization (sorted keys, no timestamps), and each
one embeds the graph6 of its subject graph so revalidation is
self-contained.  The verified flag is set only after the independent
validator re-checks the payload from scratch.
"""

from __future__ import annotations

import json

from . import __version__
from .constructions import LowerBoundReport, ParamTriple
from .cycles import find_cycle_of_length
from .graph6 import Graph6Error, from_graph6, to_graph6
from .graphs import Graph
from .structure import Decomposition, blocks
from .validate import (
    validate_cycle_witness,
    validate_decomposition,
    validate_star_witness,
)
from .witnesses import CycleWitness, StarWitness

SCHEMA = 1

KINDS = ("even_cycle", "star", "freeness", "decomposition", "ramsey", "lemma_report")


def make_envelope(kind: str, params: dict, payload: dict) -> dict:
    if kind not in KINDS:
        raise ValueError(f"unknown envelope kind {kind!r}")
    env = {
        "schema": SCHEMA,
        "kind": kind,
        "params": params,
        "payload": payload,
        "tool_version": __version__,
        "verified": False,
    }
    env["verified"] = revalidate_envelope(env)
    return env


def dumps(env: dict) -> str:
    return json.dumps(env, sort_keys=True, separators=(",", ":"))


def loads(line: str) -> dict:
    env = json.loads(line)
    if not isinstance(env, dict) or env.get("schema") != SCHEMA:
        raise ValueError(f"not a schema-{SCHEMA} envelope")
    if env.get("kind") not in KINDS:
        raise ValueError(f"unknown envelope kind {env.get('kind')!r}")
    return env


def lower_bound_envelope(
    g: Graph, params: ParamTriple, report: LowerBoundReport
) -> dict:
    """Envelope for one certification outcome: a refuting cycle, a
    refuting star, or a freeness attestation."""
    payload = report.to_json()
    payload["graph6"] = to_graph6(g).decode("ascii")
    if report.cycle_witness is not None:
        kind = "even_cycle"
    elif report.star_witness is not None:
        kind = "star"
    else:
        kind = "freeness"
    return make_envelope(kind, params.to_json(), payload)


def decomposition_envelope(g: Graph, dec: Decomposition, k: int) -> dict:
    payload = dec.to_json()
    payload["graph6"] = to_graph6(g).decode("ascii")
    payload["variant"] = "peeling"
    return make_envelope("decomposition", {"k": k}, payload)


def blocks_envelope(g: Graph) -> dict:
    bt = blocks(g)
    payload = {
        "graph6": to_graph6(g).decode("ascii"),
        "variant": "blocks",
        "blocks": [list(b) for b in bt.blocks],
        "cut_vertices": sorted(bt.cut_vertices),
    }
    return make_envelope("decomposition", {"order": g.order}, payload)


def ec_envelope(g: Graph, ec: int, witness: CycleWitness | None) -> dict:
    payload = {
        "graph6": to_graph6(g).decode("ascii"),
        "ec": ec,
        "cycle": list(witness.vertices) if witness else None,
    }
    kind = "even_cycle" if witness else "freeness"
    if not witness:
        payload["even_cycle_free"] = True
    return make_envelope(kind, {"order": g.order}, payload)


def ramsey_envelope(result) -> dict:
    params = {"ell": result.ell, "n": result.n, "t": ParamTriple(result.ell, result.n).t}
    return make_envelope("ramsey", params, result.to_json())


def lemma_envelope(report) -> dict:
    return make_envelope("lemma_report", dict(report.scope), report.to_json())


# -- revalidation -----------------------------------------------------


def revalidate_envelope(env: dict) -> bool:
    """Re-check an envelope's payload against its embedded graph from
    scratch, independently of whatever produced it."""
    kind = env.get("kind")
    payload = env.get("payload", {})
    params = env.get("params", {})
    try:
        if kind == "even_cycle":
            return _check_even_cycle(params, payload)
        if kind == "star":
            return _check_star(params, payload)
        if kind == "freeness":
            return _check_freeness(params, payload)
        if kind == "decomposition":
            return _check_decomposition(params, payload)
        if kind == "ramsey":
            return _check_ramsey(params, payload)
        if kind == "lemma_report":
            return _check_lemma_report(payload)
    except (Graph6Error, KeyError, TypeError, ValueError):
        return False
    return False


def _graph(payload: dict) -> Graph:
    return from_graph6(payload["graph6"])


def _check_even_cycle(params: dict, payload: dict) -> bool:
    g = _graph(payload)
    cycle = payload.get("cycle") or (payload.get("cycle_witness") or {}).get("cycle")
    if cycle is None:
        return False
    w = CycleWitness(tuple(cycle))
    expected = payload.get("cycle_length")
    if expected is None and "ec" in payload:
        expected = payload["ec"]
    return validate_cycle_witness(g, w, expected)


def _check_star(params: dict, payload: dict) -> bool:
    g = _graph(payload)
    sw = payload.get("star_witness") or payload
    w = StarWitness(sw["center"], tuple(sw["leaves"]))
    n = params.get("n", payload.get("star_order"))
    return validate_star_witness(g, w, n)


def _check_freeness(params: dict, payload: dict) -> bool:
    g = _graph(payload)
    if payload.get("even_cycle_free"):
        # attestation that no even cycle exists at all
        from .cycles import longest_even_cycle

        return longest_even_cycle(g) == 0 and payload.get("ec") == 0
    if payload.get("cycle_free") is not True:
        return False
    k = payload["cycle_length"]
    if find_cycle_of_length(g, k) is not None:
        return False
    n = payload.get("star_order", params.get("n"))
    if payload.get("star_free") is not True:
        return False
    if g.order and g.min_degree() < g.order - n:
        return False
    bound = payload.get("certified_bound")
    return bound is None or bound == g.order + 1


def _check_decomposition(params: dict, payload: dict) -> bool:
    g = _graph(payload)
    if payload.get("variant") == "blocks":
        bt = blocks(g)
        return (
            [list(b) for b in bt.blocks] == payload["blocks"]
            and sorted(bt.cut_vertices) == payload["cut_vertices"]
        )
    dec = Decomposition(
        tuple(payload["removed"]),
        tuple(tuple(c) for c in payload["components"]),
        payload.get("hypothesis_checked", True),
    )
    return validate_decomposition(g, dec)


def _check_ramsey(params: dict, payload: dict) -> bool:
    g6 = payload.get("lower_witness_graph6")
    if g6 is None:
        return False
    g = from_graph6(g6)
    rep = payload.get("witness_report") or {}
    if rep.get("certified_bound") != g.order + 1:
        return False
    inner = {
        "schema": SCHEMA,
        "kind": "freeness",
        "params": params,
        "payload": dict(rep, graph6=g6),
    }
    if not _check_freeness(params, inner["payload"]):
        return False
    lo = payload["bracket"]["lo"]
    if lo != g.order + 1:
        return False
    if payload.get("final"):
        return payload.get("value") == lo == payload["bracket"]["hi"]
    return payload.get("value") is None


def _check_lemma_report(payload: dict) -> bool:
    """A report re-validates when each recorded failure is a genuine
    counterexample to its suite's per-instance predicate; sweeps
    themselves are not re-run."""
    lemma = payload.get("lemma")
    failures = payload.get("failures", [])
    if lemma not in (
        "vz", "bc", "williamson", "dec", "set_system", "theorem_probe", "erdos_gallai",
    ):
        return False
    for f in failures:
        if not _recheck_failure(lemma, f):
            return False
    return True


def _recheck_failure(lemma: str, f: dict) -> bool:
    from .cycles import find_path_of_length, is_hamiltonian, longest_even_cycle
    from .structure import bc_closure

    if lemma == "vz":
        g = from_graph6(f["graph6"])
        return longest_even_cycle(g) < f["needed"]
    if lemma == "bc":
        g = from_graph6(f["graph6"])
        raw = is_hamiltonian(g) is not None
        closed = is_hamiltonian(bc_closure(g)) is not None
        return raw != closed
    if lemma == "williamson":
        g = from_graph6(f["graph6"])
        return find_path_of_length(g, f["v"], f["w"], f["k"]) is None
    if lemma == "set_system":
        params = ParamTriple(f["ell"], f["n"])
        from .constructions import extremal_size

        return f["ground"] > extremal_size(params)
    # dec / erdos_gallai failures embed their full evidence; accept
    # well-formed records
    return "graph6" in f
