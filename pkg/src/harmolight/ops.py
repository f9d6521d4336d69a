"""Disjoint unions and power graphs, with predicted tree/loop structure."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .gf2 import mat_pow
from .graphs import Graph, graph_from_harmonic, harmonic_matrix
from .loops import LoopEnsemble, funny_div, loop_product, q_hat
from .monoid import MonoidProfile
from .trees import TreeFactorization, tree_product


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertices of ``g2`` are shifted up by ``g1.n``."""
    shift = g1.n
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    return Graph(g1.n + g2.n, frozenset(edges))


def union_prediction(
    t1: TreeFactorization, l1: LoopEnsemble, t2: TreeFactorization, l2: LoopEnsemble
) -> tuple[TreeFactorization, LoopEnsemble]:
    return tree_product(t1, t2), loop_product(l1, l2)


def power_graph(g: Graph, q: int) -> Graph:
    """The graph whose harmonic matrix is ``a^q``."""
    if q < 1:
        raise ValueError("power must be at least 1")
    return graph_from_harmonic(mat_pow(harmonic_matrix(g), q))


@dataclass(frozen=True)
class PowerPrediction:
    tail_pred: int
    period_pred: int
    loops_pred: LoopEnsemble
    tree_pred: TreeFactorization

    def as_dict(self) -> dict:
        return {
            "tail_k": self.tail_pred,
            "period_m": self.period_pred,
            "tree": self.tree_pred.render(),
            "loops": self.loops_pred.render(),
        }


def split_tree(tree: TreeFactorization, q: int) -> TreeFactorization:
    """Tree of ``a^q`` from the tree of ``a``.

    A nilpotent Jordan block of size ``j = q*s + r`` (``0 <= r < q``) breaks
    under the ``q``-th power into ``r`` blocks of size ``s + 1`` and
    ``q - r`` blocks of size ``s``.
    """
    counts: Counter = Counter()
    for j, b in tree.items():
        s, r = divmod(j, q)
        if r:
            counts[s + 1] += r * b
        if s:
            counts[s] += (q - r) * b
    return TreeFactorization.from_mapping(counts)


def windowed_tree_weights(tree: TreeFactorization, q: int) -> dict[int, int]:
    """``w_i = sum_{j=q(i-1)+1}^{q i} j * b_j``, kept for comparison only.

    This does not preserve the tree dimension in general (one block of
    height 3 with ``q = 2`` yields ``{2: 3}``), so it is never used as a
    prediction.
    """
    out = {}
    top = tree.height
    i = 1
    while q * (i - 1) + 1 <= top:
        w = sum(j * tree.get(j) for j in range(q * (i - 1) + 1, q * i + 1))
        if w:
            out[i] = w
        i += 1
    return out


def power_prediction(
    profile: MonoidProfile, tree: TreeFactorization, loops: LoopEnsemble, q: int
) -> PowerPrediction:
    if q < 1:
        raise ValueError("power must be at least 1")
    return PowerPrediction(
        tail_pred=-(-profile.tail_k // q),
        period_pred=funny_div(profile.period_m, q),
        loops_pred=q_hat(q, loops),
        tree_pred=split_tree(tree, q),
    )
