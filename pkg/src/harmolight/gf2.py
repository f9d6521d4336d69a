"""Dense linear algebra over GF(2) with bit-packed rows.

Each row of a :class:`BitMatrix` is a Python ``int`` whose bit ``j`` holds
the entry in column ``j``.  Vectors follow the same convention, so a state
on ``n`` vertices is simply an integer in ``[0, 2**n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Operands have incompatible sizes."""


@dataclass(frozen=True)
class BitVector:
    """A vector in GF(2)^length packed into an integer."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "BitVector":
        values = list(values)
        bits = 0
        for i, v in enumerate(values):
            if v & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    @classmethod
    def from_bitstring(cls, text: str) -> "BitVector":
        """Parse ``"100"``; character ``i`` is coordinate ``i``."""
        if any(c not in "01" for c in text):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls.from_list(int(c) for c in text)

    @classmethod
    def unit(cls, length: int, i: int) -> "BitVector":
        return cls(length, 1 << i)

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def to_bitstring(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.length))

    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise DimensionError(f"length {self.length} != {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = __add__


@dataclass(frozen=True)
class BitMatrix:
    """Square matrix over GF(2); ``rows[i]`` bit ``j`` is entry ``(i, j)``."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.dim:
            raise DimensionError(f"expected {self.dim} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.dim:
                raise ValueError(f"row {r:#x} does not fit in dim {self.dim}")

    @classmethod
    def zeros(cls, dim: int) -> "BitMatrix":
        return cls(dim, (0,) * dim)

    @classmethod
    def identity(cls, dim: int) -> "BitMatrix":
        return cls(dim, tuple(1 << i for i in range(dim)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        dim = len(entries)
        rows = []
        for row in entries:
            if len(row) != dim:
                raise DimensionError("matrix must be square")
            rows.append(BitVector.from_list(row).bits)
        return cls(dim, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.dim)] for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        _check_dims(self, other)
        return BitMatrix(self.dim, tuple(x ^ y for x, y in zip(self.rows, other.rows)))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.dim
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.dim, tuple(cols))

    def is_symmetric(self) -> bool:
        return self.transpose() == self

    def is_zero(self) -> bool:
        return not any(self.rows)

    def trace(self) -> int:
        return sum((r >> i) & 1 for i, r in enumerate(self.rows)) & 1

    def apply(self, x: int) -> int:
        """Matrix-vector product on a packed vector."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return out

    def columns(self) -> list[int]:
        return list(self.transpose().rows)


def _check_dims(lhs: BitMatrix, rhs: BitMatrix) -> None:
    if lhs.dim != rhs.dim:
        raise DimensionError(f"dim {lhs.dim} != {rhs.dim}")


def mat_mul(lhs: BitMatrix, rhs: BitMatrix) -> BitMatrix:
    """Product ``lhs @ rhs`` over GF(2).

    Row ``i`` of the product is the XOR of the rows of ``rhs`` selected by
    the set bits of row ``i`` of ``lhs``.
    """
    _check_dims(lhs, rhs)
    rrows = rhs.rows
    out = []
    for r in lhs.rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= rrows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BitMatrix(lhs.dim, tuple(out))


def mat_pow(m: BitMatrix, t: int) -> BitMatrix:
    """``m**t`` by square-and-multiply; ``t == 0`` gives the identity."""
    if t < 0:
        raise ValueError("exponent must be non-negative")
    result = BitMatrix.identity(m.dim)
    base = m
    while t:
        if t & 1:
            result = mat_mul(result, base)
        t >>= 1
        if t:
            base = mat_mul(base, base)
    return result


def power_sequence(m: BitMatrix, t: int) -> list[BitMatrix]:
    """``[m**0, m**1, ..., m**t]`` by iterated multiplication."""
    if t < 0:
        raise ValueError("exponent must be non-negative")
    seq = [BitMatrix.identity(m.dim)]
    for _ in range(t):
        seq.append(mat_mul(seq[-1], m))
    return seq


def mat_vec(m: BitMatrix, v: BitVector) -> BitVector:
    if m.dim != v.length:
        raise DimensionError(f"matrix dim {m.dim} != vector length {v.length}")
    return BitVector(v.length, m.apply(v.bits))


def _echelon(rows: Iterable[int]) -> list[int]:
    """Reduce rows to a list of independent pivot rows (distinct leading bits)."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                break
            r ^= p
    return list(pivots.values())


def rank(m: BitMatrix) -> int:
    return len(_echelon(m.rows))


def kernel_dim(m: BitMatrix) -> int:
    return m.dim - rank(m)


def row_space_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of the row space, sorted by leading bit."""
    basis = sorted(_echelon(m.rows), key=int.bit_length)
    return [BitVector(m.dim, b) for b in basis]


def column_space_basis(m: BitMatrix) -> list[BitVector]:
    return row_space_basis(m.transpose())


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of ``{x : m x = 0}`` from the reduced row echelon form."""
    n = m.dim
    pivot_rows: dict[int, int] = {}
    for r in m.rows:
        for lead, p in pivot_rows.items():
            if (r >> lead) & 1:
                r ^= p
        if not r:
            continue
        lead = r.bit_length() - 1
        for k in list(pivot_rows):
            if (pivot_rows[k] >> lead) & 1:
                pivot_rows[k] ^= r
        pivot_rows[lead] = r
    free = [j for j in range(n) if j not in pivot_rows]
    basis = []
    for f in free:
        x = 1 << f
        for lead, p in pivot_rows.items():
            if (p >> f) & 1:
                x |= 1 << lead
        basis.append(BitVector(n, x))
    return basis
