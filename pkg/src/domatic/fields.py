"""Prime-field arithmetic and Hamming-code parity-check matrices.

The parity-check columns are the normalized projective points of GF(p)^k
(first nonzero entry 1, lexicographically increasing), which makes the
matrix, and every syndrome coloring derived from it, canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidSpec, NotPrime, ZeroInverse


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic modulo a prime p on canonical representatives 0..p-1."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)


def field_ops(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class ParityCheckMatrix:
    """k x n matrix over GF(p) whose columns are pairwise independent."""

    field: PrimeField
    k: int
    n: int
    entries: np.ndarray  # shape (k, n), values in 0..p-1

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.entries[:, j])

    def dump(self) -> str:
        """Text format: first line "p k n", then k rows of n digits."""
        lines = [f"{self.field.p} {self.k} {self.n}"]
        lines.extend(" ".join(str(int(x)) for x in row) for row in self.entries)
        return "\n".join(lines) + "\n"

    @staticmethod
    def load(text: str) -> "ParityCheckMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        p, k, n = (int(x) for x in lines[0].split())
        rows = [[int(x) for x in ln.split()] for ln in lines[1 : 1 + k]]
        entries = np.array(rows, dtype=np.int64)
        if entries.shape != (k, n):
            raise InvalidSpec("matrix body does not match the header")
        m = ParityCheckMatrix(PrimeField(p), k, n, entries)
        entries.setflags(write=False)
        return m


def hamming_parity_check(p: int, k: int) -> ParityCheckMatrix:
    """Parity-check matrix of the [n, n-k] Hamming code, n = (p^k-1)/(p-1).

    Columns enumerate one representative per projective point, normalized so
    the first nonzero coordinate is 1, in lexicographic order.
    """
    field = PrimeField(p)
    if k < 1:
        raise InvalidSpec("dimension k must be >= 1")
    cols = []
    for idx in range(p**k):
        vec = []
        x = idx
        for _ in range(k):
            vec.append(x % p)
            x //= p
        vec.reverse()
        nz = next((c for c in vec if c), None)
        if nz == 1:
            cols.append(vec)
    n = (p**k - 1) // (p - 1)
    assert len(cols) == n
    entries = np.array(cols, dtype=np.int64).T
    entries.setflags(write=False)
    return ParityCheckMatrix(field, k, n, entries)


def syndrome(m: ParityCheckMatrix, x) -> int:
    """Mixed-radix index of M.x over GF(p): sum_i s_i * p^(k-1-i)."""
    vec = np.asarray(x, dtype=np.int64)
    if vec.shape != (m.n,):
        raise DimensionMismatch(f"expected a vector of length {m.n}")
    p = m.field.p
    if vec.size and (vec.min() < 0 or vec.max() >= p):
        raise InvalidSpec("vector entries must lie in 0..p-1")
    s = (m.entries @ vec) % p
    idx = 0
    for digit in s:
        idx = idx * p + int(digit)
    return idx


def syndrome_indices(m: ParityCheckMatrix, vectors: np.ndarray) -> np.ndarray:
    """Vectorized syndrome(): one index per row of an (N, n) array."""
    p = m.field.p
    s = (vectors.astype(np.int64) @ m.entries.T) % p
    weights = p ** np.arange(m.k - 1, -1, -1, dtype=np.int64)
    return s @ weights
