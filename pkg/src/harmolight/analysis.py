"""One-call algebraic analysis of a graph and its oracle cross-check."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynamics import DEFAULT_STATE_LIMIT, brute_digraph, oracle_kernel_counts, oracle_loop_ensemble
from .gf2 import BitMatrix
from .graphs import Graph, harmonic_matrix
from .loops import LoopEnsemble, fixed_dims, loop_ensemble
from .monoid import DEFAULT_PERIOD_CAP, MonoidProfile, monoid_profile
from .trees import TreeFactorization, kernel_filtration, tree_factorization


@dataclass(frozen=True)
class Structure:
    """Tree and loop structure of the evolution digraph of one operator."""

    profile: MonoidProfile
    filtration: tuple[int, ...]
    tree: TreeFactorization
    fixed: dict = field(compare=False)
    loops: LoopEnsemble

    def signature(self) -> tuple[str, str]:
        return self.tree.render(), self.loops.render()


def analyze_matrix(a: BitMatrix, max_period: int = DEFAULT_PERIOD_CAP) -> Structure:
    profile = monoid_profile(a, max_period=max_period)
    filt = kernel_filtration(a, profile.tail_k)
    fixed = fixed_dims(a, profile.period_m)
    return Structure(
        profile=profile,
        filtration=tuple(filt),
        tree=tree_factorization(filt),
        fixed=fixed,
        loops=loop_ensemble(fixed, profile.period_m),
    )


def analyze(g: Graph, max_period: int = DEFAULT_PERIOD_CAP) -> Structure:
    return analyze_matrix(harmonic_matrix(g), max_period=max_period)


@dataclass(frozen=True)
class OracleCheck:
    loops_match: bool
    kernel_counts_match: bool
    oracle_loops: LoopEnsemble
    oracle_kernel_counts: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.loops_match and self.kernel_counts_match

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "loops_match": self.loops_match,
            "kernel_counts_match": self.kernel_counts_match,
            "oracle_loops": self.oracle_loops.render(),
            "oracle_kernel_counts": list(self.oracle_kernel_counts),
        }


def verify(a: BitMatrix | Graph, structure: Structure | None = None, state_limit: int = DEFAULT_STATE_LIMIT) -> OracleCheck:
    """Compare the algebraic structure with exhaustive enumeration."""
    if isinstance(a, Graph):
        a = harmonic_matrix(a)
    if structure is None:
        structure = analyze_matrix(a)
    d = brute_digraph(a, state_limit=state_limit)
    oloops = oracle_loop_ensemble(d)
    ocounts = tuple(oracle_kernel_counts(d))
    expected = tuple(1 << K for K in structure.filtration)
    return OracleCheck(
        loops_match=oloops == structure.loops,
        kernel_counts_match=ocounts == expected,
        oracle_loops=oloops,
        oracle_kernel_counts=ocounts,
    )
