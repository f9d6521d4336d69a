"""The cyclic monoid generated by a harmonic matrix.

Powers of ``a`` run through a tail ``1, a, ..., a^(k-1)`` and then a cycle
``a^k, ..., a^(k+m-1)`` with ``a^(k+m) = a^k``.  Here ``k`` is ``tail_k``
and ``m`` is ``period_m``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, BitVector, column_space_basis, kernel_dim, mat_mul, mat_pow, rank

DEFAULT_PERIOD_CAP = 1 << 20


class PeriodCapExceeded(RuntimeError):
    """The power sequence did not close within the iteration cap."""


@dataclass(frozen=True)
class MonoidProfile:
    tail_k: int
    period_m: int
    dim_T: int
    dim_L: int

    @property
    def n(self) -> int:
        return self.dim_T + self.dim_L

    def as_dict(self) -> dict:
        return {
            "tail_k": self.tail_k,
            "period_m": self.period_m,
            "dim_T": self.dim_T,
            "dim_L": self.dim_L,
        }


def tail_index(a: BitMatrix) -> tuple[int, BitMatrix]:
    """Least ``t`` with ``rank(a^t) == rank(a^(t+1))``, and ``a^t`` itself."""
    power = BitMatrix.identity(a.dim)
    r = a.dim
    t = 0
    while True:
        nxt = mat_mul(power, a)
        r_next = rank(nxt)
        if r_next == r:
            return t, power
        power, r, t = nxt, r_next, t + 1


def monoid_profile(a: BitMatrix, max_period: int = DEFAULT_PERIOD_CAP) -> MonoidProfile:
    """Tail length, period and the T/L dimensions of ``M(a)``.

    Raises:
        PeriodCapExceeded: if ``a^(k+m) == a^k`` is not reached for any
            ``m <= max_period``.
    """
    k, start = tail_index(a)
    dim_L = rank(start)
    # start = a^k lies on the cycle; walk until it comes back.
    power = mat_mul(start, a)
    m = 1
    while power != start:
        if m >= max_period:
            raise PeriodCapExceeded(
                f"period exceeds cap {max_period} (dim={a.dim}, dim_L={dim_L})"
            )
        power = mat_mul(power, a)
        m += 1
    return MonoidProfile(tail_k=k, period_m=m, dim_T=a.dim - dim_L, dim_L=dim_L)


def projection_exponent(p: MonoidProfile) -> int:
    """Least multiple of the period that is at least the tail length."""
    m = p.period_m
    return -(-p.tail_k // m) * m


def projection(a: BitMatrix, p: MonoidProfile) -> BitMatrix:
    """The idempotent of the cycle group: kernel is T(G), image is L(G)."""
    return mat_pow(a, projection_exponent(p))


def decompose(a: BitMatrix, p: MonoidProfile | None = None) -> tuple[int, int, list[BitVector]]:
    """Split the state space as ``Ker(pi) (+) Im(pi)``.

    Returns:
        ``(dim_T, dim_L, basis)`` where ``basis`` spans ``L(G) = Im(pi)``.
    """
    if p is None:
        p = monoid_profile(a)
    pi = projection(a, p)
    basis = column_space_basis(pi)
    return kernel_dim(pi), rank(pi), basis
