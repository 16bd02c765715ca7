"""Exhaustive verification suites over small graph classes.

Each suite enumerates a class, compares every member's distance sequence
against the extremal family for that class, re-checks the index
consequences with exact arithmetic, and emits a deterministic report.
Work is split into shards by position in the enumeration stream; shard
results merge associatively (counts add, violation and witness lists are
sorted), so reports are identical for any shard count and any worker pool
size.

A dominance pass paired with an index inequality failure cannot happen
mathematically, so it is reported as kind "internal_inconsistency" and
points at this package, not at the statement under test.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from wienerseq.enumeration import (
    canonical_graph,
    enumerate_apollonian,
    enumerate_connected,
    enumerate_k_connected,
    enumerate_k_trees,
    enumerate_maximal_k_degenerate,
    enumerate_maximal_planar,
    enumerate_odd_trees,
)
from wienerseq.families import (
    cycle,
    cycle_power,
    end_vertex_sequence_path_power,
    odd_caterpillar,
    path_complete,
    path_power,
)
from wienerseq.graphs import (
    Graph,
    is_cut_vertex,
    is_k_connected,
    parse_graph6,
    write_graph6,
)
from wienerseq.indices import (
    IndexDefinition,
    diameter_index,
    evaluate_exact,
    harary,
    hyper_wiener,
    monotone_consistency,
    mult_wiener,
    tsz,
    variable_wiener,
    wiener,
)
from wienerseq.sequences import (
    DistanceSequence,
    compare,
    deletion_bound_check,
    distance_sequence,
    vertex_distance_sequence,
)


def _battery() -> tuple[IndexDefinition, ...]:
    # Exact-arithmetic built-ins only, so inequalities are decided without
    # floating point.
    return (
        wiener(),
        harary(),
        hyper_wiener(),
        tsz(),
        variable_wiener(2),
        mult_wiener(),
        diameter_index(),
    )


@dataclass
class VerificationReport:
    suite: str
    params: dict
    graphs_checked: int
    violations: list[dict] = field(default_factory=list)
    equality_witnesses: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0
    shards: int = 1
    coverage: str | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, include_meta: bool = True) -> dict:
        out: dict = {
            "suite": self.suite,
            "params": self.params,
            "graphs_checked": self.graphs_checked,
            "violations": self.violations,
            "equality_witnesses": self.equality_witnesses,
        }
        if self.coverage is not None:
            out["coverage"] = self.coverage
        if include_meta:
            out["elapsed_s"] = self.elapsed_s
            out["shards"] = self.shards
        return out

    def to_json(self, include_meta: bool = True) -> str:
        return json.dumps(self.to_dict(include_meta), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            suite=data["suite"],
            params=dict(data["params"]),
            graphs_checked=data["graphs_checked"],
            violations=list(data["violations"]),
            equality_witnesses=list(data["equality_witnesses"]),
            elapsed_s=data.get("elapsed_s", 0.0),
            shards=data.get("shards", 1),
            coverage=data.get("coverage"),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def csv_summary(reports: "list[VerificationReport]") -> str:
    lines = ["suite,params,graphs_checked,violations,equality_witnesses,elapsed_s,shards"]
    for r in reports:
        params = ";".join("%s=%s" % (k, r.params[k]) for k in sorted(r.params))
        lines.append(
            "%s,%s,%d,%d,%d,%.3f,%d"
            % (
                r.suite,
                params,
                r.graphs_checked,
                len(r.violations),
                len(r.equality_witnesses),
                r.elapsed_s,
                r.shards,
            )
        )
    return "\n".join(lines) + "\n"


def _violation(
    graph6: str,
    kind: str,
    coordinate: int | None = None,
    lhs: object = None,
    rhs: object = None,
    index: str | None = None,
) -> dict:
    out = {
        "graph6": graph6,
        "kind": kind,
        "coordinate": coordinate,
        "lhs": None if lhs is None else str(lhs),
        "rhs": None if rhs is None else str(rhs),
    }
    if index is not None:
        out["index"] = index
    return out


def _check_dominance_and_indices(
    record: str, seq: DistanceSequence, extremal: DistanceSequence
) -> tuple[list[dict], bool]:
    violations: list[dict] = []
    rel = compare(seq, extremal)
    if not rel.dominated:
        coord = rel.greater_at
        assert coord is not None
        violations.append(
            _violation(record, "dominance", coord, seq[coord], extremal[coord])
        )
    for defn in _battery():
        if monotone_consistency(defn, seq, extremal):
            continue
        kind = "internal_inconsistency" if rel.dominated else "index_bound"
        violations.append(
            _violation(
                record,
                kind,
                lhs=evaluate_exact(defn, seq),
                rhs=evaluate_exact(defn, extremal),
                index=defn.display_name,
            )
        )
    from wienerseq.sequences import Dominance

    return violations, rel.tag == Dominance.EQUAL


@lru_cache(maxsize=None)
def _pk_sequence(n: int, m: int) -> DistanceSequence:
    return distance_sequence(path_complete(n, m))


@lru_cache(maxsize=None)
def _cycle_power_sequence(n: int, h: int) -> DistanceSequence:
    return distance_sequence(cycle_power(n, h))


@lru_cache(maxsize=None)
def _path_power_sequence(n: int, k: int) -> DistanceSequence:
    return distance_sequence(path_power(n, k))


@lru_cache(maxsize=None)
def _odd_caterpillar_sequence(n: int) -> DistanceSequence:
    return distance_sequence(odd_caterpillar(n))


def _check_order_size(record: str, params: dict) -> tuple[list[dict], bool]:
    g = parse_graph6(record)
    seq = distance_sequence(g)
    return _check_dominance_and_indices(record, seq, _pk_sequence(g.n, g.m))


def _check_connectivity(record: str, params: dict) -> tuple[list[dict], bool]:
    g = parse_graph6(record)
    seq = distance_sequence(g)
    extremal = _cycle_power_sequence(params["n"], params["kappa"] // 2)
    return _check_dominance_and_indices(record, seq, extremal)


def _check_k_degenerate(record: str, params: dict) -> tuple[list[dict], bool]:
    g = parse_graph6(record)
    n, k = params["n"], params["k"]
    seq = distance_sequence(g)
    violations, is_equal = _check_dominance_and_indices(
        record, seq, _path_power_sequence(n, k)
    )
    if n >= k + 1 and not is_k_connected(g, k):
        violations.append(_violation(record, "k_connectivity", lhs=k))
    degree_k = [
        v
        for v in range(n)
        if g.degree(v) == k and not is_cut_vertex(g, v)
    ]
    if degree_k:
        v = degree_k[0]
        res = deletion_bound_check(g, v)
        if not res.holds:
            violations.append(
                _violation(record, "deletion_bound", coordinate=v)
            )
        if k < n:
            vseq = vertex_distance_sequence(g, v)
            vrel = compare(vseq, end_vertex_sequence_path_power(n, k))
            if not vrel.dominated:
                coord = vrel.greater_at
                violations.append(
                    _violation(record, "end_vertex_bound", coord, vseq[coord])
                )
    elif n >= k + 1:
        violations.append(_violation(record, "degree_k_vertex", lhs=k))
    return violations, is_equal


def _check_odd_trees(record: str, params: dict) -> tuple[list[dict], bool]:
    g = parse_graph6(record)
    seq = distance_sequence(g)
    return _check_dominance_and_indices(
        record, seq, _odd_caterpillar_sequence(params["n"])
    )


def _check_deletion(record: str, params: dict) -> tuple[list[dict], bool]:
    g = parse_graph6(record)
    violations: list[dict] = []
    for v in range(g.n):
        if g.n > 1 and is_cut_vertex(g, v):
            continue
        res = deletion_bound_check(g, v)
        if not res.holds:
            violations.append(
                _violation(record, "deletion_bound", coordinate=v)
            )
        if res.equality != res.predicted_equality:
            violations.append(
                _violation(
                    record,
                    "equality_predicate",
                    coordinate=v,
                    lhs=res.equality,
                    rhs=res.predicted_equality,
                )
            )
    return violations, False


def _check_maximal_planar(record: str, params: dict) -> tuple[list[dict], bool]:
    g = parse_graph6(record)
    seq = distance_sequence(g)
    return _check_dominance_and_indices(
        record, seq, _path_power_sequence(params["n"], 3)
    )


_CHECKERS = {
    "order_size": _check_order_size,
    "connectivity": _check_connectivity,
    "k_degenerate": _check_k_degenerate,
    "odd_trees": _check_odd_trees,
    "deletion": _check_deletion,
    "maximal_planar": _check_maximal_planar,
}


def _check_shard(payload: tuple[str, dict, list[str]]) -> dict:
    suite, params, records = payload
    checker = _CHECKERS[suite]
    violations: list[dict] = []
    witnesses: list[str] = []
    for record in records:
        vs, is_equal = checker(record, params)
        violations.extend(vs)
        if is_equal:
            witnesses.append(record)
    return {
        "checked": len(records),
        "violations": violations,
        "witnesses": witnesses,
    }


def _violation_sort_key(v: dict) -> str:
    return json.dumps(v, sort_keys=True)


def _run(
    suite: str,
    params: dict,
    records: list[str],
    shards: int,
    jobs: int,
) -> VerificationReport:
    start = time.monotonic()
    if shards < 1:
        raise ValueError("shard count must be positive")
    payloads = [
        (suite, params, records[i::shards]) for i in range(shards)
    ]
    if jobs > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, shards)) as pool:
            parts = list(pool.map(_check_shard, payloads))
    else:
        parts = [_check_shard(p) for p in payloads]
    violations: list[dict] = []
    witnesses: list[str] = []
    checked = 0
    for part in parts:
        checked += part["checked"]
        violations.extend(part["violations"])
        witnesses.extend(part["witnesses"])
    violations.sort(key=_violation_sort_key)
    witnesses.sort()
    return VerificationReport(
        suite=suite,
        params=params,
        graphs_checked=checked,
        violations=violations,
        equality_witnesses=witnesses,
        elapsed_s=time.monotonic() - start,
        shards=shards,
    )


def verify_order_size(n: int, shards: int = 1, jobs: int = 1) -> VerificationReport:
    """Every connected graph of order n against the path-complete graph of
    its size."""
    if not (2 <= n <= 7):
        raise ValueError("supported orders are 2..7, got %r" % (n,))
    records = [write_graph6(g) for g in enumerate_connected(n)]
    return _run("order_size", {"n": n}, records, shards, jobs)


def verify_connectivity(
    n: int, kappa: int, shards: int = 1, jobs: int = 1
) -> VerificationReport:
    """Every kappa-connected graph of order n against the cycle power
    C_n^(kappa/2); for kappa = 2 the equality class must be exactly the
    cycle."""
    if kappa % 2 or kappa < 2:
        raise ValueError(
            "only even connectivity targets are supported, got %r" % (kappa,)
        )
    if not (3 <= n <= 8):
        raise ValueError("supported orders are 3..8, got %r" % (n,))
    if n < kappa + 1:
        raise ValueError("no %d-connected graphs of order %d" % (kappa, n))
    records = [write_graph6(g) for g in enumerate_k_connected(n, kappa)]
    report = _run("connectivity", {"n": n, "kappa": kappa}, records, shards, jobs)
    if kappa == 2:
        expected = {write_graph6(canonical_graph(cycle(n)))}
        actual = set(report.equality_witnesses)
        for record in sorted(actual - expected):
            report.violations.append(
                _violation(record, "equality_set", lhs="unexpected equality")
            )
        for record in sorted(expected - actual):
            report.violations.append(
                _violation(record, "equality_set", lhs="cycle not in equality class")
            )
        report.violations.sort(key=_violation_sort_key)
    return report


def verify_k_degenerate(
    n: int,
    k: int,
    klass: str = "maximal_k_degenerate",
    shards: int = 1,
    jobs: int = 1,
) -> VerificationReport:
    """Maximal k-degenerate graphs (or k-trees) of order n against the path
    power P_n^k, with the k-connectivity side check and a re-derivation of
    the bound through a degree-k non-cut vertex."""
    if klass == "maximal_k_degenerate":
        records = [write_graph6(g) for g in enumerate_maximal_k_degenerate(n, k)]
    elif klass == "k_tree":
        records = [write_graph6(g) for g in enumerate_k_trees(n, k)]
    else:
        raise ValueError("class must be 'maximal_k_degenerate' or 'k_tree'")
    return _run(
        "k_degenerate",
        {"n": n, "k": k, "class": klass},
        records,
        shards,
        jobs,
    )


def verify_odd_trees(n: int, shards: int = 1, jobs: int = 1) -> VerificationReport:
    """Odd trees of even order n against the odd caterpillar."""
    records = [write_graph6(g) for g in enumerate_odd_trees(n)]
    return _run("odd_trees", {"n": n}, records, shards, jobs)


def verify_deletion_bound(n: int, shards: int = 1, jobs: int = 1) -> VerificationReport:
    """The vertex deletion bound and its equality predicate at every
    non-cut vertex of every connected graph of order n."""
    if not (2 <= n <= 7):
        raise ValueError("supported orders are 2..7, got %r" % (n,))
    records = [write_graph6(g) for g in enumerate_connected(n)]
    return _run("deletion", {"n": n}, records, shards, jobs)


def search_maximal_planar(
    n: int, mode: str = "flip", shards: int = 1, jobs: int = 1
) -> VerificationReport:
    """Best-effort search for a maximal planar graph whose distance
    sequence is not dominated by the cube of the path.

    mode="flip" covers the class completely via flip closure
    (coverage "complete"); mode="apollonian" checks only planar 3-trees
    (coverage "partial").
    """
    if not (4 <= n <= 9):
        raise ValueError("supported orders are 4..9, got %r" % (n,))
    if mode == "apollonian":
        records = [write_graph6(g) for g in enumerate_apollonian(n)]
        coverage = "partial"
    elif mode == "flip":
        records = [write_graph6(g) for g in enumerate_maximal_planar(n)]
        coverage = "complete"
    else:
        raise ValueError("mode must be 'flip' or 'apollonian'")
    report = _run("maximal_planar", {"n": n, "mode": mode}, records, shards, jobs)
    report.coverage = coverage
    return report


SUITES = {
    "order_size": verify_order_size,
    "connectivity": verify_connectivity,
    "k_degenerate": verify_k_degenerate,
    "odd_trees": verify_odd_trees,
    "deletion": verify_deletion_bound,
    "maximal_planar": search_maximal_planar,
}
