"""Simulation of the harmonic game and the exhaustive evolution digraph.

States are packed integers: bit ``i`` is vertex ``i``.  Bitstrings put
vertex ``0`` first, so on K2 the state ``{v0}`` reads ``"10"``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .gf2 import BitMatrix, BitVector, DimensionError
from .graphs import Graph, harmonic_matrix
from .loops import LoopEnsemble

DEFAULT_STATE_LIMIT = 1 << 22
DEFAULT_MAX_STEPS = 1 << 24


class StateSpaceTooLarge(ValueError):
    """``2**n`` exceeds the configured enumeration limit."""


class StepLimitExceeded(RuntimeError):
    """An evolution did not close a cycle within ``max_steps`` steps."""


def _as_int(s, n: int) -> int:
    if isinstance(s, BitVector):
        if s.length != n:
            raise DimensionError(f"state length {s.length} != vertex count {n}")
        return s.bits
    s = int(s)
    if s < 0 or s >> n:
        raise DimensionError(f"state {s} does not fit on {n} vertices")
    return s


def state_to_bitstring(x: int, n: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


def rule_step(g: Graph, s: BitVector) -> BitVector:
    """One step of the game, applied vertex by vertex from the two laws.

    An unexcited vertex lights up when an odd number of its neighbours are
    lit.  A lit vertex stays lit when an odd number of its neighbours are
    dark, and goes dark otherwise.
    """
    x = _as_int(s, g.n)
    out = 0
    for v, nb in enumerate(g.neighbor_masks):
        lit_nb = (nb & x).bit_count()
        if (x >> v) & 1:
            dark_nb = nb.bit_count() - lit_nb
            on = dark_nb % 2 == 1
        else:
            on = lit_nb % 2 == 1
        if on:
            out |= 1 << v
    return BitVector(g.n, out)


@dataclass(frozen=True)
class TraceResult:
    preperiod: int
    cycle_length: int
    n: int = 0
    trajectory: list[int] | None = None

    def as_dict(self) -> dict:
        d = {"preperiod": self.preperiod, "cycle_length": self.cycle_length}
        if self.trajectory is not None:
            d["trajectory"] = [state_to_bitstring(x, self.n) for x in self.trajectory]
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def evolve(g: Graph | BitMatrix, s, max_steps: int = DEFAULT_MAX_STEPS, keep_trajectory: bool = False) -> TraceResult:
    """Follow ``s, a s, a^2 s, ...`` until it repeats (Brent's cycle finding).

    ``keep_trajectory`` records the states before the first repeat, i.e.
    the preperiod followed by one turn of the cycle.
    """
    a = g if isinstance(g, BitMatrix) else harmonic_matrix(g)
    n = a.dim
    x0 = _as_int(s, n)
    f = a.apply
    steps = 0

    def step(x):
        nonlocal steps
        steps += 1
        if steps > max_steps:
            raise StepLimitExceeded(f"no cycle closed within {max_steps} steps")
        return f(x)

    power = lam = 1
    tortoise, hare = x0, step(x0)
    while tortoise != hare:
        if power == lam:
            tortoise, power, lam = hare, power * 2, 0
        hare = step(hare)
        lam += 1

    tortoise = hare = x0
    for _ in range(lam):
        hare = f(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        mu += 1

    trajectory = None
    if keep_trajectory:
        trajectory = [x0]
        for _ in range(mu + lam - 1):
            trajectory.append(f(trajectory[-1]))
    return TraceResult(preperiod=mu, cycle_length=lam, n=n, trajectory=trajectory)


def successor_table(a: BitMatrix) -> np.ndarray:
    """``table[x] = a x`` for every state, built by doubling over vertices."""
    table = np.zeros(1, dtype=np.int64)
    for col in a.columns():
        table = np.concatenate([table, table ^ col])
    return table


@dataclass(frozen=True, eq=False)
class EvolutionDigraph:
    """Functional digraph ``x -> a x`` on all ``2**n`` states.

    Attributes:
        n: vertex count.
        successor: ``successor[x]`` is the next state.
        on_cycle: mask of states lying on a cycle.
        tail_depths: steps from each state to its cycle (0 on cycles).
        cycle_ids: smallest state of the cycle each cycle state lies on;
            ``-1`` off cycles.
    """

    n: int
    successor: np.ndarray
    on_cycle: np.ndarray
    tail_depths: np.ndarray
    cycle_ids: np.ndarray = field(repr=False)

    @property
    def n_states(self) -> int:
        return len(self.successor)

    @cached_property
    def cycles(self) -> list[tuple[int, ...]]:
        """Each cycle as a state sequence starting from its smallest state."""
        out = []
        for start in np.unique(self.cycle_ids[self.on_cycle]):
            seq = [int(start)]
            x = int(self.successor[start])
            while x != start:
                seq.append(x)
                x = int(self.successor[x])
            out.append(tuple(seq))
        return out

    def cycle_lengths(self) -> Counter:
        _, counts = np.unique(self.cycle_ids[self.on_cycle], return_counts=True)
        return Counter(int(c) for c in counts)

    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.successor, minlength=self.n_states)

    @cached_property
    def roots(self) -> np.ndarray:
        """The cycle state each state's tail first reaches (itself on cycles)."""
        root = np.where(self.on_cycle, np.arange(self.n_states), -1)
        for k in range(1, int(self.tail_depths.max(initial=0)) + 1):
            idx = np.flatnonzero(self.tail_depths == k)
            root[idx] = root[self.successor[idx]]
        return root

    def depth_profiles(self) -> dict[int, tuple[int, ...]]:
        """For each cycle state, the number of tail states at depth 1, 2, ..."""
        height = int(self.tail_depths.max(initial=0))
        cyc = np.flatnonzero(self.on_cycle)
        tail = ~self.on_cycle
        keys, counts = np.unique(self.roots[tail] * (height + 1) + self.tail_depths[tail], return_counts=True)
        profiles = {int(r): [0] * height for r in cyc}
        for key, c in zip(keys.tolist(), counts.tolist()):
            r, depth = divmod(key, height + 1)
            profiles[r][depth - 1] = c
        return {r: tuple(p) for r, p in profiles.items()}


def brute_digraph(g: Graph | BitMatrix, state_limit: int = DEFAULT_STATE_LIMIT) -> EvolutionDigraph:
    """Tabulate the whole evolution digraph and find its cycles and depths.

    This never looks at the algebra of ``a`` beyond applying it to states,
    so it serves as an independent oracle.
    """
    a = g if isinstance(g, BitMatrix) else harmonic_matrix(g)
    n = a.dim
    if (1 << n) > state_limit:
        raise StateSpaceTooLarge(f"2^{n} states exceeds limit {state_limit}")
    succ = successor_table(a)
    N = len(succ)

    # Peel off states with no remaining predecessors; what survives is cyclic.
    alive = np.ones(N, dtype=bool)
    while True:
        indeg = np.bincount(succ[alive], minlength=N)
        dead = alive & (indeg == 0)
        if not dead.any():
            break
        alive &= ~dead
    on_cycle = alive

    depth = np.full(N, -1, dtype=np.int64)
    depth[on_cycle] = 0
    d = 0
    while (depth < 0).any():
        d += 1
        newly = (depth < 0) & (depth[succ] == d - 1)
        depth[newly] = d

    # Pointer doubling: after r rounds label[x] = min over 2^r forward steps.
    label = np.arange(N, dtype=np.int64)
    jump = succ.copy()
    span = 1
    n_cyc = int(on_cycle.sum())
    while span < n_cyc:
        label = np.minimum(label, label[jump])
        jump = jump[jump]
        span *= 2
    cycle_ids = np.where(on_cycle, label, -1)

    return EvolutionDigraph(n=n, successor=succ, on_cycle=on_cycle, tail_depths=depth, cycle_ids=cycle_ids)


def oracle_loop_ensemble(d: EvolutionDigraph) -> LoopEnsemble:
    return LoopEnsemble.from_mapping(d.cycle_lengths())


def oracle_kernel_counts(d: EvolutionDigraph, g: Graph | None = None) -> list[int]:
    """For ``j = 1..max depth``: how many states reach the zero state in ``j`` steps."""
    counts = []
    cur = d.successor
    for _ in range(int(d.tail_depths.max(initial=0))):
        counts.append(int((cur == 0).sum()))
        cur = d.successor[cur]
    return counts


def export_dot(d: EvolutionDigraph, name: str = "evolution") -> str:
    """DOT text; nodes are bitstrings, cycle states drawn as double circles."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    labels = [state_to_bitstring(x, d.n) for x in range(d.n_states)]
    for x, lab in enumerate(labels):
        attrs = ' shape=doublecircle' if d.on_cycle[x] else ""
        lines.append(f'  "{lab}" [label="{lab}"{attrs}];')
    for x, y in enumerate(d.successor.tolist()):
        lines.append(f'  "{labels[x]}" -> "{labels[y]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
