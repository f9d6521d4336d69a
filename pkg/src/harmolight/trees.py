"""The characteristic tree as a product of binomial trees.

A :class:`TreeFactorization` maps a height ``i`` to the multiplicity of the
binomial tree ``I_i``.  Multiplicities are recovered from the kernel
dimensions ``K_j = dim Ker a^j`` via the second difference
``n_j = 2 K_j - K_(j+1) - K_(j-1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .gf2 import BitMatrix, kernel_dim, mat_mul


class InconsistentFiltration(ValueError):
    """A kernel filtration produced a negative multiplicity."""


@dataclass(frozen=True)
class TreeFactorization(Mapping):
    """Multiset of binomial-tree heights, stored as sorted ``(height, mult)``."""

    items_: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for h, b in self.items_:
            if h < 1 or b < 1:
                raise ValueError(f"invalid factor I{h}^{b}")

    @classmethod
    def from_mapping(cls, factors: Mapping[int, int]) -> "TreeFactorization":
        return cls(tuple(sorted((h, b) for h, b in factors.items() if b)))

    @classmethod
    def parse(cls, text: str) -> "TreeFactorization":
        """Inverse of :meth:`render`: ``"I1^3 * I2"`` or ``"I0"``."""
        text = text.strip()
        if text == "I0":
            return cls()
        counts: Counter = Counter()
        for part in text.split("*"):
            part = part.strip()
            if not part.startswith("I"):
                raise ValueError(f"bad tree factor {part!r}")
            h, _, b = part[1:].partition("^")
            counts[int(h)] += int(b) if b else 1
        return cls.from_mapping(counts)

    def __getitem__(self, height: int) -> int:
        for h, b in self.items_:
            if h == height:
                return b
        raise KeyError(height)

    def __iter__(self) -> Iterator[int]:
        return (h for h, _ in self.items_)

    def __len__(self) -> int:
        return len(self.items_)

    def get(self, height, default=0):
        return super().get(height, default)

    @property
    def dimension(self) -> int:
        return sum(h * b for h, b in self.items_)

    @property
    def n_factors(self) -> int:
        return sum(b for _, b in self.items_)

    @property
    def height(self) -> int:
        return max((h for h, _ in self.items_), default=0)

    def render(self) -> str:
        if not self.items_:
            return "I0"
        return " * ".join(f"I{h}" if b == 1 else f"I{h}^{b}" for h, b in self.items_)

    def __str__(self) -> str:
        return self.render()

    def __mul__(self, other: "TreeFactorization") -> "TreeFactorization":
        return tree_product(self, other)


def kernel_filtration(a: BitMatrix, tail_k: int) -> list[int]:
    """``[dim Ker a^j for j in 1..tail_k]``."""
    out = []
    power = BitMatrix.identity(a.dim)
    for _ in range(tail_k):
        power = mat_mul(power, a)
        out.append(kernel_dim(power))
    return out


def tree_factorization(filtration: Sequence[int]) -> TreeFactorization:
    """Binomial-tree multiplicities from a kernel filtration.

    Uses ``K_0 = 0`` and ``K_(k+1) = K_k``.  An empty filtration (``a``
    invertible) gives the trivial tree ``I0``.
    """
    K = [0, *filtration]
    if filtration:
        K.append(filtration[-1])
    factors = {}
    for j in range(1, len(filtration) + 1):
        nj = 2 * K[j] - K[j + 1] - K[j - 1]
        if nj < 0:
            raise InconsistentFiltration(f"negative multiplicity {nj} at height {j} for {list(filtration)}")
        if nj:
            factors[j] = nj
    return TreeFactorization.from_mapping(factors)


def filtration_from_tree(t: TreeFactorization, tail_k: int) -> list[int]:
    """Forward system: ``K_j = sum_i min(i, j) * n_i`` for ``j = 1..tail_k``."""
    return [sum(min(h, j) * b for h, b in t.items()) for j in range(1, tail_k + 1)]


def tree_product(t1: TreeFactorization, t2: TreeFactorization) -> TreeFactorization:
    counts = Counter(dict(t1.items()))
    counts.update(dict(t2.items()))
    return TreeFactorization.from_mapping(counts)


def tree_node_count(t: TreeFactorization) -> int:
    return 1 << t.dimension
