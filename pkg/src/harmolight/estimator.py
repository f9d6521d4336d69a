"""scikit-learn style front end for harmonic evolution on a fixed graph."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .analysis import analyze_matrix, verify
from .dynamics import DEFAULT_MAX_STEPS, DEFAULT_STATE_LIMIT, evolve
from .gf2 import mat_pow
from .graphs import harmonic_matrix
from .monoid import DEFAULT_PERIOD_CAP
from .validation import check_graph, check_states, ints_to_states, states_to_ints


class HarmonicEvolution(TransformerMixin, BaseEstimator):
    """Learns the evolution structure of a graph and evolves states on it.

    Parameters
    ----------
    steps : int, default=1
        Number of harmonic steps applied by :meth:`transform`.
    verify : bool, default=False
        Cross-check the algebraic structure against exhaustive enumeration
        during :meth:`fit`.
    state_limit : int, default=2**22
        Largest state space enumerated when ``verify`` is set.
    max_period : int, default=2**20
        Iteration cap for the period search.
    max_steps : int, default=2**24
        Step cap for cycle detection in :meth:`predict` and :meth:`trace`.

    Attributes
    ----------
    graph_ : Graph
    harmonic_matrix_ : BitMatrix
    profile_ : MonoidProfile
    tree_ : TreeFactorization
    loops_ : LoopEnsemble
    oracle_ : OracleCheck or None
    n_features_in_ : int
        Number of vertices.
    """

    def __init__(
        self,
        steps=1,
        verify=False,
        state_limit=DEFAULT_STATE_LIMIT,
        max_period=DEFAULT_PERIOD_CAP,
        max_steps=DEFAULT_MAX_STEPS,
    ):
        self.steps = steps
        self.verify = verify
        self.state_limit = state_limit
        self.max_period = max_period
        self.max_steps = max_steps

    def fit(self, X, y=None):
        """Analyze the graph ``X`` (a Graph, graph text, or adjacency array)."""
        if int(self.steps) < 0:
            raise ValueError("steps must be non-negative")
        self.graph_ = check_graph(X)
        self.harmonic_matrix_ = harmonic_matrix(self.graph_)
        self.structure_ = analyze_matrix(self.harmonic_matrix_, max_period=self.max_period)
        self.profile_ = self.structure_.profile
        self.tree_ = self.structure_.tree
        self.loops_ = self.structure_.loops
        self.oracle_ = (
            verify(self.harmonic_matrix_, self.structure_, state_limit=self.state_limit)
            if self.verify
            else None
        )
        self.n_features_in_ = self.graph_.n
        return self

    def transform(self, X):
        """Apply ``a**steps`` to each row of ``X``."""
        check_is_fitted(self, "structure_")
        S = check_states(X, self.n_features_in_)
        m = mat_pow(self.harmonic_matrix_, int(self.steps))
        return ints_to_states([m.apply(x) for x in states_to_ints(S)], self.n_features_in_)

    def trace(self, X) -> np.ndarray:
        """``(preperiod, cycle_length)`` for the evolution of each row of ``X``."""
        check_is_fitted(self, "structure_")
        S = check_states(X, self.n_features_in_)
        out = np.zeros((S.shape[0], 2), dtype=np.int64)
        for r, x in enumerate(states_to_ints(S)):
            t = evolve(self.harmonic_matrix_, x, max_steps=self.max_steps)
            out[r] = (t.preperiod, t.cycle_length)
        return out

    def predict(self, X) -> np.ndarray:
        """Length of the loop each state eventually enters."""
        return self.trace(X)[:, 1]

    def summary(self) -> dict:
        check_is_fitted(self, "structure_")
        d = self.profile_.as_dict()
        d.update(tree=self.tree_.render(), loops=self.loops_.render())
        return d
