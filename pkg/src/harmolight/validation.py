"""Input coercion for the estimator and CLI layers."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from .gf2 import BitMatrix
from .graphs import Graph, GraphFormatError, parse_graph


def check_graph(X) -> Graph:
    """Accept a :class:`Graph`, graph text, or a square 0/1 adjacency array."""
    if isinstance(X, Graph):
        return X
    if isinstance(X, str):
        return parse_graph(X)
    if isinstance(X, BitMatrix):
        X = X.to_lists()
    A = check_array(X, dtype=np.int64, ensure_min_samples=0, ensure_min_features=0)
    n, m = A.shape
    if n != m:
        raise GraphFormatError(f"adjacency matrix must be square, got {A.shape}")
    if not np.isin(A, (0, 1)).all():
        raise GraphFormatError("adjacency entries must be 0 or 1")
    if (A != A.T).any():
        raise GraphFormatError("adjacency matrix must be symmetric")
    if n and A.diagonal().any():
        raise GraphFormatError("adjacency matrix has a self-loop")
    iu, ju = np.nonzero(np.triu(A, 1))
    return Graph(n, frozenset(zip(iu.tolist(), ju.tolist())))


def check_states(S, n_vertices: int) -> np.ndarray:
    """Coerce to a ``(n_samples, n_vertices)`` uint8 array of 0/1 states."""
    S = check_array(S, dtype=np.int64, ensure_min_features=0)
    if S.shape[1] != n_vertices:
        raise ValueError(f"states have {S.shape[1]} coordinates, graph has {n_vertices} vertices")
    if not np.isin(S, (0, 1)).all():
        raise ValueError("state entries must be 0 or 1")
    return S.astype(np.uint8)


def states_to_ints(S: np.ndarray) -> list[int]:
    weights = [1 << i for i in range(S.shape[1])]
    return [sum(w for w, b in zip(weights, row) if b) for row in S.tolist()]


def ints_to_states(xs, n_vertices: int) -> np.ndarray:
    out = np.zeros((len(xs), n_vertices), dtype=np.uint8)
    for r, x in enumerate(xs):
        for i in range(n_vertices):
            out[r, i] = (x >> i) & 1
    return out
