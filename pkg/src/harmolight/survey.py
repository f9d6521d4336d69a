"""Exhaustive sweeps over labeled graphs and empirical conjecture probes.

Graphs on ``n`` vertices are indexed by an edge mask: bit ``k`` selects the
``k``-th pair of ``itertools.combinations(range(n), 2)``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Iterator

from .analysis import analyze_matrix
from .gf2 import BitMatrix
from .graphs import Graph, to_graph6
from .loops import LoopEnsemble, divisors
from .trees import TreeFactorization

DEFAULT_MAX_N = 7


class EnumerationLimitExceeded(ValueError):
    pass


class SurveyViolation(AssertionError):
    """A theorem-backed invariant failed on some graph."""

    def __init__(self, report: "SurveyReport"):
        self.report = report
        first = report.violations[0]
        super().__init__(f"{len(report.violations)} violation(s); first: {first}")


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


@dataclass(frozen=True)
class AdmissibilityVerdict:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    cond3_literal: bool

    @property
    def admissible(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3 and self.cond4

    def as_dict(self) -> dict:
        return {
            "cond1": self.cond1,
            "cond2": self.cond2,
            "cond3": self.cond3,
            "cond4": self.cond4,
            "cond3_literal": self.cond3_literal,
            "admissible": self.admissible,
        }


def admissibility(e: LoopEnsemble) -> AdmissibilityVerdict:
    """Evaluate the four "highly even" conditions on a loop ensemble.

    ``cond3`` requires ``lcm(i, j)`` to be present whenever both ``i`` and
    ``j`` are.  ``cond3_literal`` is the weaker-premise reading (either one
    present), with ``i, j`` ranging over ``1..max length``.
    """
    present = set(e)
    cond1 = _is_power_of_two(e.get(1))
    cond2 = all(
        _is_power_of_two(sum(i * e.get(i) for i in divisors(p))) for p in present
    )
    cond3 = all(lcm(i, j) in present for i in present for j in present)
    top = e.max_length
    cond3_literal = all(
        lcm(i, j) in present
        for i in range(1, top + 1)
        for j in range(1, top + 1)
        if i in present or j in present
    )
    total = e.n_states
    cond4 = _is_power_of_two(total) and (total.bit_length() - 1) % 2 == 0
    return AdmissibilityVerdict(cond1, cond2, cond3, cond4, cond3_literal)


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    return Graph(n, frozenset(p for k, p in enumerate(pairs) if (mask >> k) & 1))


def _harmonic_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> BitMatrix:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    for v in range(n):
        if rows[v].bit_count() & 1:
            rows[v] |= 1 << v
    return BitMatrix(n, tuple(rows))


def enumerate_graphs(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Graph]:
    """All ``2**(n(n-1)/2)`` labeled graphs on ``n`` vertices, by edge mask."""
    if n > max_n:
        raise EnumerationLimitExceeded(f"n={n} exceeds enumeration maximum {max_n}")
    if n < 0:
        raise ValueError("n must be non-negative")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def conjecture1_targets(max_dim: int = 4) -> list[TreeFactorization]:
    """Every product of binomial trees of height >= 1 with dimension 1..max_dim."""

    def partitions(total, largest):
        if total == 0:
            yield []
            return
        for part in range(min(total, largest), 0, -1):
            for rest in partitions(total - part, part):
                yield [part] + rest

    out = []
    for d in range(1, max_dim + 1):
        for parts in partitions(d, d):
            counts: dict[int, int] = {}
            for p in parts:
                counts[p] = counts.get(p, 0) + 1
            out.append(TreeFactorization.from_mapping(counts))
    return sorted(out, key=lambda t: (t.dimension, t.render()))


def _example(n: int, mask: int) -> dict:
    g = graph_from_mask(n, mask)
    return {"n": n, "mask": mask, "graph6": to_graph6(g), "edges": [list(e) for e in g.edge_list]}


@dataclass
class _Partial:
    """Mergeable survey state; merging is commutative and associative."""

    per_n: dict = field(default_factory=dict)  # n -> graph count
    trees: dict = field(default_factory=dict)  # render -> [count, (n, mask)]
    loops: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)  # (n, mask, message)
    cond3_conj: dict = field(default_factory=dict)  # loops render -> (n, mask), failures only
    cond3_literal_failures: int = 0
    trees_by_n: dict = field(default_factory=dict)  # n -> set of tree renders
    loops_by_n: dict = field(default_factory=dict)

    def merge(self, other: "_Partial") -> "_Partial":
        for n, c in other.per_n.items():
            self.per_n[n] = self.per_n.get(n, 0) + c
        for mine, theirs in ((self.trees, other.trees), (self.loops, other.loops)):
            for key, (c, ex) in theirs.items():
                if key in mine:
                    mine[key] = [mine[key][0] + c, min(mine[key][1], ex)]
                else:
                    mine[key] = [c, ex]
        self.violations.extend(other.violations)
        for key, ex in other.cond3_conj.items():
            self.cond3_conj[key] = min(self.cond3_conj.get(key, ex), ex)
        self.cond3_literal_failures += other.cond3_literal_failures
        for mine, theirs in (
            (self.trees_by_n, other.trees_by_n),
            (self.loops_by_n, other.loops_by_n),
        ):
            for n, s in theirs.items():
                mine.setdefault(n, set()).update(s)
        return self


def check_graph(n: int, a: BitMatrix) -> tuple[object, AdmissibilityVerdict, list[str]]:
    """Analyze one harmonic matrix and list failed theorem-backed invariants."""
    s = analyze_matrix(a)
    p, tree, loops = s.profile, s.tree, s.loops
    problems = []
    if p.dim_L % 2:
        problems.append(f"dim_L={p.dim_L} is odd")
    if any(p.period_m % i for i in loops):
        problems.append(f"loop length not dividing period {p.period_m}: {loops}")
    if loops.max_length != p.period_m:
        problems.append(f"longest loop {loops.max_length} != period {p.period_m}")
    if loops.n_states != 1 << p.dim_L:
        problems.append(f"loop states {loops.n_states} != 2^{p.dim_L}")
    if tree.dimension != p.dim_T:
        problems.append(f"tree dimension {tree.dimension} != dim_T {p.dim_T}")
    if s.filtration and tree.n_factors != s.filtration[0]:
        problems.append(f"tree has {tree.n_factors} factors, dim Ker a = {s.filtration[0]}")
    verdict = admissibility(loops)
    for name in ("cond1", "cond2", "cond4"):
        if not getattr(verdict, name):
            problems.append(f"admissibility {name} fails for {loops}")
    return s, verdict, problems


def _survey_chunk(task: tuple[int, int, int]) -> _Partial:
    n, lo, hi = task
    pairs = edge_pairs(n)
    part = _Partial(per_n={n: hi - lo})
    trees_seen, loops_seen = set(), set()
    for mask in range(lo, hi):
        a = _harmonic_from_mask(n, pairs, mask)
        s, verdict, problems = check_graph(n, a)
        tkey, lkey = s.signature()
        trees_seen.add(tkey)
        loops_seen.add(lkey)
        ex = (n, mask)
        for table, key in ((part.trees, tkey), (part.loops, lkey)):
            entry = table.get(key)
            if entry is None:
                table[key] = [1, ex]
            else:
                entry[0] += 1
        if not verdict.cond3:
            part.cond3_conj.setdefault(lkey, ex)
        if not verdict.cond3_literal:
            part.cond3_literal_failures += 1
        for msg in problems:
            part.violations.append((n, mask, msg))
    part.trees_by_n[n] = trees_seen
    part.loops_by_n[n] = loops_seen
    return part


def _tasks(max_n: int, pieces: int) -> list[tuple[int, int, int]]:
    tasks = []
    for n in range(1, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        k = max(1, min(pieces, total))
        bounds = [total * i // k for i in range(k + 1)]
        tasks.extend((n, bounds[i], bounds[i + 1]) for i in range(k) if bounds[i] < bounds[i + 1])
    return tasks


@dataclass(frozen=True)
class SurveyReport:
    per_n: list
    trees: list
    loops: list
    violations: list
    conjecture_notes: dict

    def as_dict(self) -> dict:
        return {
            "per_n": self.per_n,
            "trees": self.trees,
            "loops": self.loops,
            "violations": self.violations,
            "conjecture_notes": self.conjecture_notes,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent, sort_keys=True)

    @property
    def total_graphs(self) -> int:
        return sum(row["graphs"] for row in self.per_n)


def _finalize(part: _Partial, max_n: int) -> SurveyReport:
    per_n = [
        {
            "n": n,
            "graphs": part.per_n[n],
            "distinct_trees": len(part.trees_by_n.get(n, ())),
            "distinct_loops": len(part.loops_by_n.get(n, ())),
        }
        for n in sorted(part.per_n)
    ]
    trees = []
    for key, (count, ex) in part.trees.items():
        t = TreeFactorization.parse(key)
        trees.append({"tree": key, "dimension": t.dimension, "count": count, "example": _example(*ex)})
    trees.sort(key=lambda r: (r["dimension"], r["tree"]))
    loops = []
    for key, (count, ex) in part.loops.items():
        e = LoopEnsemble.parse(key)
        loops.append(
            {
                "loops": key,
                "n_states": e.n_states,
                "count": count,
                "admissibility": admissibility(e).as_dict(),
                "example": _example(*ex),
            }
        )
    loops.sort(key=lambda r: (r["n_states"], r["loops"]))
    violations = [
        {"graph": _example(n, mask), "problem": msg} for n, mask, msg in sorted(part.violations)
    ]

    coverage = []
    for target in conjecture1_targets(4):
        key = target.render()
        hit = part.trees.get(key)
        coverage.append(
            {"tree": key, "realized": hit is not None, "example": _example(*hit[1]) if hit else None}
        )
    cond3_examples = [
        {"loops": key, "example": _example(*ex)} for key, ex in sorted(part.cond3_conj.items())
    ]
    notes = {
        "conjecture_1": {
            "scope": "products of binomial trees of height >= 1 with dimension <= 4",
            "max_n": max_n,
            "targets": len(coverage),
            "realized": sum(c["realized"] for c in coverage),
            "coverage": coverage,
        },
        "condition_3": {
            "conjunction_reading": {
                "violating_ensembles": len(cond3_examples),
                "COUNTEREXAMPLE": bool(cond3_examples),
                "examples": cond3_examples,
            },
            "literal_reading": {
                "violating_graphs": part.cond3_literal_failures,
                "note": "premise 'n_i != 0 or n_j != 0' over i, j <= max length",
            },
        },
    }
    return SurveyReport(per_n=per_n, trees=trees, loops=loops, violations=violations, conjecture_notes=notes)


def run_survey(max_n: int, workers: int = 1, enum_limit: int = DEFAULT_MAX_N, strict: bool = False) -> SurveyReport:
    """Analyze every labeled graph with ``1 <= n <= max_n``.

    The merged report does not depend on ``workers``.  With ``strict`` a
    :class:`SurveyViolation` carrying the report is raised when any
    theorem-backed invariant fails.
    """
    if max_n > enum_limit:
        raise EnumerationLimitExceeded(f"max_n={max_n} exceeds enumeration maximum {enum_limit}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    tasks = _tasks(max_n, max(1, workers) * 4)
    total = _Partial()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_survey_chunk, tasks):
                total.merge(part)
    else:
        for task in tasks:
            total.merge(_survey_chunk(task))
    report = _finalize(total, max_n)
    if strict and report.violations:
        raise SurveyViolation(report)
    return report
