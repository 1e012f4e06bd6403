"""Dense exact linear algebra over a FieldContext and the linear-code layer.

Matrices are 2-d numpy int arrays of field elements, always paired with the
FieldContext that interprets them.  Codes are held in canonical form: the
unique reduced row echelon basis of the row space, so code equality is
array equality.  Hermitian operations (dual, hull, Gram rank) require the
context to carry an index-2 subfield.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .gf import FieldContext

#: default cap on full-message-space enumeration (number of codewords)
DEFAULT_BUDGET = 10 ** 8

#: max entries of a single enumeration block (codewords x length)
_BLOCK_CODEWORDS = 1 << 18


class BudgetExceededError(RuntimeError):
    """Full enumeration would exceed the caller's codeword budget."""


class FieldMismatchError(ValueError):
    """Operands live in different field contexts."""


def _check_same_field(a: "LinearCode", b: "LinearCode"):
    if a.field is not b.field:
        raise FieldMismatchError("codes live in different field contexts")


# ----------------------------------------------------------------------
# matrix primitives
# ----------------------------------------------------------------------

def rref(F: FieldContext, M: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form with leftmost-pivot tie-breaking.

    Returns (R, rank, pivot_columns).  Pivot entries are 1 and pivot
    columns are cleared above and below.
    """
    R = np.array(M, dtype=np.int32, copy=True)
    if R.ndim != 2:
        raise ValueError("matrix must be 2-d")
    rows, cols = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            R[[row, pr]] = R[[pr, row]]
        pv = int(R[row, col])
        if pv != 1:
            R[row] = F.mul_arr(R[row], np.array(F.inv(pv)))
        colvals = R[:, col].copy()
        colvals[row] = 0
        mask = colvals != 0
        if mask.any():
            factors = F.neg_arr(colvals[mask])
            R[mask] = F.add_arr(R[mask], F.mul_arr(factors[:, None], R[row][None, :]))
        pivots.append(col)
        row += 1
    return R, row, pivots


def nullspace(F: FieldContext, M: np.ndarray) -> np.ndarray:
    """Basis (as rows) of the right kernel {x : M x^T = 0}."""
    M = np.asarray(M)
    n = M.shape[1]
    R, rank, pivots = rref(F, M)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int32)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for i, pc in enumerate(pivots):
            basis[bi, pc] = F.neg(int(R[i, fc]))
    return basis


def mat_mul(F: FieldContext, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError("inner dimensions differ")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int32)
    for t in range(A.shape[1]):
        out = F.add_arr(out, F.mul_arr(A[:, t][:, None], B[t, :][None, :]))
    return out


def conjugate(F: FieldContext, M: np.ndarray) -> np.ndarray:
    """Entry-wise q-th power (Hermitian conjugation without transpose)."""
    return F.pow_q_arr(np.asarray(M))


def gram_matrix(F: FieldContext, G: np.ndarray) -> np.ndarray:
    """G G-dagger: the k x k Hermitian Gram matrix of the rows of G."""
    return mat_mul(F, G, conjugate(F, G).T)


def matrix_rank(F: FieldContext, M: np.ndarray) -> int:
    return rref(F, M)[1]


# ----------------------------------------------------------------------
# linear codes
# ----------------------------------------------------------------------

class LinearCode:
    """A linear code held as the RREF basis of its row space.

    Two codes are equal iff they share a field context and their canonical
    generators agree entry-wise (row-space equality by construction).
    """

    def __init__(self, field: FieldContext, n: int, gen: np.ndarray):
        self.field = field
        self.n = int(n)
        gen = np.asarray(gen, dtype=np.int32)
        gen.setflags(write=False)
        self.gen = gen
        self._d: Optional[int] = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldContext, rows: Iterable[Sequence[int]],
                  n: Optional[int] = None) -> "LinearCode":
        M = np.array(list(rows), dtype=np.int32)
        if M.size == 0:
            if n is None:
                raise ValueError("empty row set needs an explicit length")
            return cls(field, n, np.zeros((0, n), dtype=np.int32))
        if M.ndim != 2:
            raise ValueError("rows must form a matrix")
        if n is not None and M.shape[1] != n:
            raise ValueError("row length disagrees with n")
        if np.any(M < 0) or np.any(M >= field.order):
            raise ValueError("entries outside the field")
        R, rank, _ = rref(field, M)
        return cls(field, M.shape[1], R[:rank])

    @classmethod
    def zero(cls, field: FieldContext, n: int) -> "LinearCode":
        return cls(field, n, np.zeros((0, n), dtype=np.int32))

    @classmethod
    def full(cls, field: FieldContext, n: int) -> "LinearCode":
        return cls(field, n, np.eye(n, dtype=np.int32))

    # -- basics ----------------------------------------------------------

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field is other.field and self.n == other.n
                and self.gen.shape == other.gen.shape
                and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((id(self.field), self.n, self.gen.tobytes()))

    def __repr__(self):
        d = f", d={self._d}" if self._d is not None else ""
        return f"LinearCode[{self.n}, {self.k}{d}] over {self.field!r}"

    def contains(self, v: Sequence[int]) -> bool:
        v = np.array(v, dtype=np.int32)
        if v.shape != (self.n,):
            raise ValueError("vector length mismatch")
        F = self.field
        pivots = [int(np.argmax(row != 0)) for row in self.gen]
        for i, pc in enumerate(pivots):
            c = int(v[pc])
            if c:
                v = F.add_arr(v, F.mul_arr(np.array(F.neg(c)), self.gen[i]))
        return not v.any()

    def is_subcode_of(self, other: "LinearCode") -> bool:
        _check_same_field(self, other)
        if self.n != other.n:
            raise ValueError("length mismatch")
        return all(other.contains(row) for row in self.gen)

    # -- duals and hulls ---------------------------------------------------

    def euclidean_dual(self) -> "LinearCode":
        return LinearCode.from_rows(self.field, nullspace(self.field, self.gen),
                                    n=self.n)

    def hermitian_dual(self) -> "LinearCode":
        F = self.field
        return LinearCode.from_rows(F, nullspace(F, conjugate(F, self.gen)),
                                    n=self.n)

    def hermitian_hull(self) -> "LinearCode":
        """Hull = C intersect C-perp-H, via one stacked parity solve."""
        F = self.field
        parity_c = nullspace(F, self.gen)          # x in C  <=>  H_C x = 0
        parity_h = conjugate(F, self.gen)          # x in C^perpH <=> G^(q) x = 0
        stacked = np.vstack([parity_c, parity_h]) if parity_c.size else parity_h
        return LinearCode.from_rows(F, nullspace(F, stacked), n=self.n)

    def gram(self) -> np.ndarray:
        return gram_matrix(self.field, self.gen)

    def hull_dim_via_gram(self) -> int:
        """k - rank(G G-dagger); equals dim of the Hermitian hull."""
        return self.k - matrix_rank(self.field, self.gram())

    def is_hermitian_self_orthogonal(self) -> bool:
        return not self.gram().any()

    # -- derived codes -----------------------------------------------------

    def puncture(self, coords: Iterable[int]) -> "LinearCode":
        S = sorted(set(int(i) for i in coords))
        if S and (S[0] < 0 or S[-1] >= self.n):
            raise IndexError("puncture coordinate out of range")
        keep = [i for i in range(self.n) if i not in set(S)]
        return LinearCode.from_rows(self.field, self.gen[:, keep], n=len(keep))

    def monomial_scale(self, a: Sequence[int]) -> "LinearCode":
        a = np.array(a, dtype=np.int32)
        if a.shape != (self.n,):
            raise ValueError("scaling vector length mismatch")
        if np.any(a == 0):
            raise ValueError("scaling vector has a zero entry")
        F = self.field
        return LinearCode.from_rows(F, F.mul_arr(self.gen, a[None, :]), n=self.n)

    def extend_sum_zero(self) -> "LinearCode":
        """Append one coordinate making every codeword sum to zero."""
        F = self.field
        if self.k == 0:
            return LinearCode.zero(F, self.n + 1)
        sums = np.zeros(self.k, dtype=np.int32)
        for j in range(self.n):
            sums = F.add_arr(sums, self.gen[:, j])
        ext = np.hstack([self.gen, F.neg_arr(sums)[:, None]])
        return LinearCode.from_rows(F, ext, n=self.n + 1)

    # -- metric --------------------------------------------------------------

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        """Exact minimum weight by full message-space enumeration.

        Raises BudgetExceededError when order^k exceeds the budget; callers
        then fall back to structural arguments.
        """
        if self._d is not None:
            return self._d
        if self.k == 0:
            raise ValueError("the zero code has no minimum distance")
        self._d = _enumerate_min_weight(self.field, self.gen, budget)
        return self._d

    def is_mds(self, budget: int = DEFAULT_BUDGET) -> bool:
        return self.min_distance(budget) == self.n - self.k + 1

    def weight_distribution(self, budget: int = 1 << 20) -> np.ndarray:
        """Counts of codeword weights 0..n (full enumeration, small codes)."""
        F = self.field
        if F.order ** self.k > budget:
            raise BudgetExceededError("weight distribution enumeration too large")
        counts = np.zeros(self.n + 1, dtype=np.int64)
        for block, _ in _enumerate_blocks(F, self.gen):
            w = np.count_nonzero(block, axis=1)
            counts += np.bincount(w, minlength=self.n + 1)
        return counts

    def cached_distance(self) -> Optional[int]:
        return self._d

    def set_structural_distance(self, d: int):
        """Record a distance certified by structure rather than enumeration."""
        self._d = int(d)


def _row_multiples(F: FieldContext, row: np.ndarray) -> np.ndarray:
    """(order, n) table of all scalar multiples of one generator row."""
    lams = np.arange(F.order, dtype=np.int32)
    return F.mul_arr(lams[:, None], row[None, :])


def _enumerate_blocks(F: FieldContext, gen: np.ndarray):
    """Yield (block, prefix_is_zero) covering all messages exactly once.

    Within a block the first row is the zero-suffix combination, so the all
    zero codeword appears exactly at (prefix zero, block row 0).
    """
    k, n = gen.shape
    order = F.order
    s = 0
    size = 1
    while s < k and size * order <= _BLOCK_CODEWORDS:
        size *= order
        s += 1
    suffix = np.zeros((1, n), dtype=np.int32)
    for r in range(k - s, k):
        tab = _row_multiples(F, gen[r])
        suffix = F.add_arr(suffix[:, None, :], tab[None, :, :]).reshape(-1, n)
    prefix_rows = [_row_multiples(F, gen[r]) for r in range(k - s)]
    if not prefix_rows:
        yield suffix, True
        return
    idx = [0] * len(prefix_rows)
    partial = [np.zeros(n, dtype=np.int32)]
    for t, tab in enumerate(prefix_rows):
        partial.append(F.add_arr(partial[-1], tab[0]))
    while True:
        yield F.add_arr(suffix, partial[-1][None, :]), all(i == 0 for i in idx)
        d = len(idx) - 1
        while d >= 0 and idx[d] == order - 1:
            idx[d] = 0
            d -= 1
        if d < 0:
            return
        idx[d] += 1
        partial[d + 1] = F.add_arr(partial[d], prefix_rows[d][idx[d]])
        for t in range(d + 1, len(idx)):
            partial[t + 1] = F.add_arr(partial[t], prefix_rows[t][idx[t]])


def _enumerate_min_weight(F: FieldContext, gen: np.ndarray, budget: int) -> int:
    k, n = gen.shape
    if F.order ** k > budget:
        raise BudgetExceededError(
            f"enumerating {F.order}^{k} codewords exceeds budget {budget}")
    best = n + 1
    for block, prefix_zero in _enumerate_blocks(F, gen):
        w = np.count_nonzero(block, axis=1)
        if prefix_zero:
            w = w[1:]  # drop the all-zero codeword
        if w.size:
            m = int(w.min())
            if m < best:
                best = m
                if best == 1:
                    break
    return best
