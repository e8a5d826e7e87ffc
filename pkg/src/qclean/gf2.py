"""Dense exact linear algebra over GF(2) with bit-packed rows.

``BinaryVector`` and ``BinaryMatrix`` are immutable; every operation is a
pure function, so values can be shared freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import rref_words

__all__ = [
    "BinaryVector",
    "BinaryMatrix",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "fredholm_index_check",
]


def _nwords(ncols: int) -> int:
    return (ncols + 63) // 64


def _pack(bits: np.ndarray, ncols: int) -> np.ndarray:
    """Pack a uint8 0/1 array of length ncols into little-endian uint64 words."""
    nw = _nwords(ncols)
    packed = np.packbits(bits.astype(np.uint8), bitorder="little")
    buf = np.zeros(nw * 8, dtype=np.uint8)
    buf[: packed.size] = packed
    return buf.view("<u8")


def _unpack(words: np.ndarray, ncols: int) -> np.ndarray:
    if ncols == 0:
        return np.zeros(0, dtype=np.uint8)
    return np.unpackbits(words.view(np.uint8), bitorder="little")[:ncols].copy()


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class BinaryVector:
    """A vector in F2^n, packed 64 coordinates per uint64 word."""

    __slots__ = ("n", "words", "_hash")

    def __init__(self, words: np.ndarray, n: int):
        self.n = n
        self.words = _freeze(np.ascontiguousarray(words, dtype=np.uint64))
        self._hash = None

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinaryVector":
        arr = np.fromiter((int(b) & 1 for b in bits), dtype=np.uint8)
        return cls(_pack(arr, arr.size), arr.size)

    @classmethod
    def zeros(cls, n: int) -> "BinaryVector":
        return cls(np.zeros(_nwords(n), dtype=np.uint64), n)

    @classmethod
    def from_support(cls, indices: Iterable[int], n: int) -> "BinaryVector":
        bits = np.zeros(n, dtype=np.uint8)
        for i in indices:
            bits[i] ^= 1
        return cls(_pack(bits, n), n)

    def to_bits(self) -> np.ndarray:
        return _unpack(self.words, self.n)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int((self.words[i >> 6] >> np.uint64(i & 63)) & np.uint64(1))

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BinaryVector(self.words ^ other.words, self.n)

    def dot(self, other: "BinaryVector") -> int:
        """Standard dot product over F2."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        return int(np.bitwise_count(self.words & other.words).sum()) & 1

    @property
    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def is_zero(self) -> bool:
        return not self.words.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryVector)
            and self.n == other.n
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.words.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"BinaryVector({''.join(map(str, self.to_bits()))!r})"


class BinaryMatrix:
    """A rows x cols matrix over F2 stored as packed rows.

    A matrix with zero rows (or zero columns) is a valid value and stands
    for the zero map.
    """

    __slots__ = ("rows", "cols", "words", "_hash", "_dense")

    def __init__(self, words: np.ndarray, rows: int, cols: int):
        words = np.ascontiguousarray(words, dtype=np.uint64).reshape(
            rows, _nwords(cols)
        )
        self.rows = rows
        self.cols = cols
        self.words = _freeze(words)
        self._hash = None
        self._dense = None

    @classmethod
    def from_rows(
        cls, rows: Sequence[BinaryVector | Iterable[int]], cols: int | None = None
    ) -> "BinaryMatrix":
        vecs = [
            r if isinstance(r, BinaryVector) else BinaryVector.from_bits(r)
            for r in rows
        ]
        if cols is None:
            if not vecs:
                raise ValueError("cols required for an empty row list")
            cols = vecs[0].n
        if any(v.n != cols for v in vecs):
            raise ValueError("inconsistent row lengths")
        words = np.zeros((len(vecs), _nwords(cols)), dtype=np.uint64)
        for i, v in enumerate(vecs):
            words[i] = v.words
        return cls(words, len(vecs), cols)

    @classmethod
    def from_dense(cls, dense) -> "BinaryMatrix":
        a = np.asarray(dense, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        r, c = a.shape
        buf = np.zeros((r, _nwords(c) * 8), dtype=np.uint8)
        if r and c:
            packed = np.packbits(a, axis=1, bitorder="little")
            buf[:, : packed.shape[1]] = packed
        m = cls(buf.view("<u8"), r, c)
        m._dense = _freeze(np.ascontiguousarray(a))
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(np.zeros((rows, _nwords(cols)), dtype=np.uint64), rows, cols)

    @classmethod
    def identity(cls, k: int) -> "BinaryMatrix":
        return cls.from_dense(np.eye(k, dtype=np.uint8))

    def to_dense(self) -> np.ndarray:
        """Cached read-only 0/1 uint8 view of the matrix."""
        if self._dense is None:
            if self.rows == 0 or self.cols == 0:
                out = np.zeros((self.rows, self.cols), dtype=np.uint8)
            else:
                out = np.unpackbits(
                    self.words.view(np.uint8), axis=1, bitorder="little"
                )[:, : self.cols]
            self._dense = _freeze(np.ascontiguousarray(out))
        return self._dense

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.words[i], self.cols)

    def __iter__(self) -> Iterator[BinaryVector]:
        return (self.row(i) for i in range(self.rows))

    def get(self, i: int, j: int) -> int:
        return int((self.words[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1))

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix.from_dense(self.to_dense().T)

    def mv(self, v: BinaryVector) -> BinaryVector:
        """Matrix-vector product m @ v (column-vector convention)."""
        if v.n != self.cols:
            raise ValueError("dimension mismatch")
        if self.rows == 0:
            return BinaryVector.zeros(0)
        par = np.bitwise_count(self.words & v.words).sum(axis=1) & 1
        return BinaryVector(_pack(par.astype(np.uint8), self.rows), self.rows)

    def mm(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        prod = (
            self.to_dense().astype(np.int64) @ other.to_dense().astype(np.int64)
        ) & 1
        return BinaryMatrix.from_dense(prod)

    def column_submatrix(self, cols: Sequence[int]) -> "BinaryMatrix":
        idx = list(cols)
        if self.rows == 0:
            return BinaryMatrix.zeros(0, len(idx))
        return BinaryMatrix.from_dense(self.to_dense()[:, idx])

    @staticmethod
    def vstack(a: "BinaryMatrix", b: "BinaryMatrix") -> "BinaryMatrix":
        if a.cols != b.cols:
            raise ValueError("column mismatch")
        return BinaryMatrix(
            np.concatenate([a.words, b.words], axis=0), a.rows + b.rows, a.cols
        )

    @staticmethod
    def hstack(a: "BinaryMatrix", b: "BinaryMatrix") -> "BinaryMatrix":
        if a.rows != b.rows:
            raise ValueError("row mismatch")
        return BinaryMatrix.from_dense(
            np.concatenate([a.to_dense(), b.to_dense()], axis=1)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.words.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        body = ";".join("".join(map(str, r)) for r in self.to_dense())
        return f"BinaryMatrix({self.rows}x{self.cols}: {body})"


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, tuple[int, ...]]:
    """Unique reduced row echelon form with zero rows dropped.

    Pivot rule: leftmost nonzero column, topmost available row.  Returns
    the reduced matrix and the strictly increasing pivot columns.
    """
    work = m.words.copy()
    r, piv = rref_words(work, m.cols)
    return BinaryMatrix(work[:r], r, m.cols), tuple(int(p) for p in piv)


def rank(m: BinaryMatrix) -> int:
    work = m.words.copy()
    r, _ = rref_words(work, m.cols)
    return r


def _rank_words(words: np.ndarray, ncols: int) -> int:
    work = words.copy()
    r, _ = rref_words(work, ncols)
    return r


def rank_dense(a: np.ndarray) -> int:
    """Rank of a 0/1 array without constructing a BinaryMatrix; the hot
    path for restricted-column dimension counts."""
    r, c = a.shape
    if r == 0 or c == 0:
        return 0
    buf = np.zeros((r, _nwords(c) * 8), dtype=np.uint8)
    packed = np.packbits(a, axis=1, bitorder="little")
    buf[:, : packed.shape[1]] = packed
    rr, _ = rref_words(buf.view("<u8"), c)
    return rr


def kernel_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Canonical (rref) basis of the right kernel {v : m @ v = 0}."""
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    vecs = np.zeros((len(free), m.cols), dtype=np.uint8)
    for row_i, f in enumerate(free):
        vecs[row_i, f] = 1
        for i, p in enumerate(pivots):
            vecs[row_i, p] = red.get(i, f)
    basis = BinaryMatrix.from_dense(vecs)
    out, _ = rref(basis)
    return out


def solve(m: BinaryMatrix, b: BinaryVector) -> BinaryVector | None:
    """Deterministic solution of m @ x = b, or None when infeasible.

    Free variables are zeroed in rref column order, which makes the output
    the canonical representative used by constructive cleaning.
    """
    if b.n != m.rows:
        raise ValueError("right-hand side length must equal row count")
    col = BinaryMatrix.from_dense(b.to_bits().reshape(-1, 1))
    red, pivots = rref(BinaryMatrix.hstack(m, col))
    x = np.zeros(m.cols, dtype=np.uint8)
    for i, p in enumerate(pivots):
        if p == m.cols:
            return None
        x[p] = red.get(i, m.cols)
    return BinaryVector.from_bits(x)


def fredholm_index_check(a: BinaryMatrix) -> tuple[int, int, int]:
    """Kernel dimensions of a and its transpose, plus their difference.

    For a map F2^m -> F2^n given by an n x m matrix the difference always
    equals m - n; a failure of that identity is a library bug, so it is
    asserted here rather than reported.
    """
    r = rank(a)
    dim_ker = a.cols - r
    dim_ker_t = a.rows - r
    index = dim_ker - dim_ker_t
    assert index == a.cols - a.rows
    return dim_ker, dim_ker_t, index
