"""Loop ensembles: counting cycles of ``a`` on L(G), and the loop algebra.

A :class:`LoopEnsemble` maps a loop length ``i`` to the number of loops of
that length.  Counts come from fixed-space dimensions
``F_d = dim Ker(a^d + 1)`` by Moebius inversion over the divisors of the
period.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm
from typing import Iterator, Mapping

from .gf2 import BitMatrix, kernel_dim, mat_mul


class InconsistentEnsemble(ArithmeticError):
    """Moebius inversion produced a non-integral or negative loop count."""


def _positive(*values: int) -> None:
    for v in values:
        if v < 1:
            raise ValueError(f"expected a positive integer, got {v}")


def prime_factors(d: int) -> dict[int, int]:
    _positive(d)
    out: dict[int, int] = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    _positive(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def moebius(d: int) -> int:
    factors = prime_factors(d)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def funny_div(a: int, b: int) -> int:
    """``lcm(a, b) / b``: the cycle length seen when jumping ``b`` steps on an ``a``-cycle."""
    _positive(a, b)
    return a // gcd(a, b)


@dataclass(frozen=True)
class LoopEnsemble(Mapping):
    """Multiset of loop lengths, stored as sorted ``(length, count)`` pairs."""

    items_: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for length, c in self.items_:
            if length < 1 or c < 1:
                raise ValueError(f"invalid term {c}L{length}")

    @classmethod
    def from_mapping(cls, loops: Mapping[int, int]) -> "LoopEnsemble":
        return cls(tuple(sorted((i, c) for i, c in loops.items() if c)))

    @classmethod
    def single(cls, length: int, count: int = 1) -> "LoopEnsemble":
        return cls.from_mapping({length: count})

    @classmethod
    def parse(cls, text: str) -> "LoopEnsemble":
        """Inverse of :meth:`render`: ``"2L1 + L2"`` or ``"0"``."""
        text = text.strip()
        if text == "0":
            return cls()
        counts: Counter = Counter()
        for part in text.split("+"):
            c, sep, length = part.strip().partition("L")
            if not sep:
                raise ValueError(f"bad loop term {part!r}")
            counts[int(length)] += int(c) if c else 1
        return cls.from_mapping(counts)

    def __getitem__(self, length: int) -> int:
        for i, c in self.items_:
            if i == length:
                return c
        raise KeyError(length)

    def __iter__(self) -> Iterator[int]:
        return (i for i, _ in self.items_)

    def __len__(self) -> int:
        return len(self.items_)

    def get(self, length, default=0):
        return super().get(length, default)

    @property
    def n_states(self) -> int:
        return sum(i * c for i, c in self.items_)

    @property
    def n_loops(self) -> int:
        return sum(c for _, c in self.items_)

    @property
    def max_length(self) -> int:
        return max((i for i, _ in self.items_), default=0)

    def render(self) -> str:
        if not self.items_:
            return "0"
        return " + ".join(f"L{i}" if c == 1 else f"{c}L{i}" for i, c in self.items_)

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "LoopEnsemble") -> "LoopEnsemble":
        counts = Counter(dict(self.items()))
        counts.update(dict(other.items()))
        return LoopEnsemble.from_mapping(counts)

    def __mul__(self, other: "LoopEnsemble") -> "LoopEnsemble":
        return loop_product(self, other)

    def scale(self, k: int) -> "LoopEnsemble":
        return LoopEnsemble.from_mapping({i: k * c for i, c in self.items_})


def fixed_dims(a: BitMatrix, period_m: int) -> dict[int, int]:
    """``{d: dim Ker(a^d + 1)}`` for every divisor ``d`` of the period."""
    ident = BitMatrix.identity(a.dim)
    powers = {}
    power = ident
    # divisors are ascending; step the power sequence forward
    t = 0
    for d in divisors(period_m):
        while t < d:
            power = mat_mul(power, a)
            t += 1
        powers[d] = kernel_dim(power + ident)
    return powers


def loop_ensemble(fixed: Mapping[int, int], period_m: int) -> LoopEnsemble:
    """Loop counts ``n_p = (1/p) sum_{i|p} mu(p/i) 2^F_i`` for ``p | period_m``.

    Raises:
        InconsistentEnsemble: if some ``n_p`` is negative or the division
            by ``p`` is inexact.
    """
    counts = {}
    for p in divisors(period_m):
        total = 0
        for i in divisors(p):
            mu = moebius(p // i)
            if mu:
                total += mu * (1 << fixed[i])
        q, r = divmod(total, p)
        if r or q < 0:
            raise InconsistentEnsemble(f"loop count for length {p} is {total}/{p}")
        if q:
            counts[p] = q
    return LoopEnsemble.from_mapping(counts)


def moebius_terms(p: int) -> list[tuple[int, int]]:
    """Signed terms ``(coefficient, i)`` of ``p * n_p = sum mu(p/i) F_i``, nonzero only."""
    return [(moebius(p // i), i) for i in sorted(divisors(p), reverse=True) if moebius(p // i)]


def inclusion_exclusion_terms(p: int) -> list[tuple[int, int]]:
    """The same expansion built by inclusion-exclusion on the divisor lattice.

    The maximal proper divisors of ``p`` generate down-sets whose
    intersections are again generated by gcds; alternating signs over all
    subsets of the maximal elements give the states of exact period ``p``.
    """
    _positive(p)
    maximal = [p // q for q in prime_factors(p)]
    acc: Counter = Counter({p: 1})
    for r in range(1, len(maximal) + 1):
        for subset in combinations(maximal, r):
            g = 0
            for d in subset:
                g = gcd(g, d)
            acc[g] += (-1) ** r
    return [(c, i) for i, c in sorted(acc.items(), reverse=True) if c]


def render_terms(terms: list[tuple[int, int]], symbol: str = "F") -> str:
    out = []
    for k, (c, i) in enumerate(terms):
        mag = "" if abs(c) == 1 else str(abs(c))
        term = f"{mag}{symbol}{i}"
        if k == 0:
            out.append(term if c > 0 else f"-{term}")
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out)


def loop_product(e1: LoopEnsemble, e2: LoopEnsemble) -> LoopEnsemble:
    """Bilinear extension of ``L_a * L_b = gcd(a, b) L_lcm(a, b)``."""
    counts: Counter = Counter()
    for i, c in e1.items():
        for j, d in e2.items():
            counts[lcm(i, j)] += c * d * gcd(i, j)
    return LoopEnsemble.from_mapping(counts)


def q_hat(q: int, e: LoopEnsemble) -> LoopEnsemble:
    """Loops seen by ``q``-step jumps: ``L_a -> gcd(a, q) L_(a funny_div q)``."""
    _positive(q)
    counts: Counter = Counter()
    for i, c in e.items():
        counts[funny_div(i, q)] += c * gcd(i, q)
    return LoopEnsemble.from_mapping(counts)


def star(k: int, e: LoopEnsemble) -> LoopEnsemble:
    """Multiplication by the single loop ``L_k``."""
    return loop_product(LoopEnsemble.single(k), e)
