"""Orthogonal arrays and MDS machinery over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .errors import KernelDimensionError, NotOA, ParamsInfeasible, ParamsOutOfRange
from .galois import Field, field_new, is_prime_power, nullspace, rank
from .space import Code, colex_subsets, place


@dataclass(frozen=True)
class OrthogonalArray:
    rows: tuple[tuple[int, ...], ...]
    n: int
    q: int
    t: int
    lam: int = 1

    def __len__(self):
        return len(self.rows)

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]


def oa_verify(rows: Sequence[Sequence[int]], t: int, q: int | None = None) -> int:
    """Return the index lambda if every t-column projection of ``rows`` is
    balanced over {0..q-1}; raise NotOA with the first bad projection."""
    arr = np.asarray([list(r) for r in rows], dtype=np.int64)
    if arr.size == 0:
        raise NotOA("empty array")
    if q is None:
        q = int(arr.max()) + 1
    if arr.min() < 0 or arr.max() >= q:
        raise NotOA(f"entries must lie in 0..{q - 1}")
    n_rows, n = arr.shape
    if not 1 <= t <= n:
        raise ParamsOutOfRange(f"strength {t} outside 1..{n}")
    cells = q ** t
    if n_rows % cells:
        cols = tuple(range(t))
        raise NotOA(f"{n_rows} rows is not a multiple of q^t = {cells}", cols, None)
    lam = n_rows // cells
    weights = q ** np.arange(t - 1, -1, -1, dtype=np.int64)
    for cols in combinations(range(n), t):
        codes = arr[:, cols] @ weights
        counts = np.bincount(codes, minlength=cells)
        bad = np.flatnonzero(counts != lam)
        if bad.size:
            idx = int(bad[0])
            tup = tuple(int(d) for d in np.unravel_index(idx, (q,) * t))
            raise NotOA(
                f"tuple {tup} appears {int(counts[idx])} times in columns {cols}, expected {lam}",
                cols, tup,
            )
    return lam


def _points(f: Field, n: int) -> tuple[list[int], bool]:
    """Evaluation points 0,1,2,... and whether the point at infinity is used."""
    if n == f.q + 1:
        return list(range(f.q)), True
    return list(range(n)), False


def _horner(f: Field, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = f.add(f.mul(acc, x), c)
    return acc


def rs_oa(t: int, n: int, q: int) -> OrthogonalArray:
    """OA(t, n, q) of index one from a (doubly extended) Reed-Solomon code.

    Rows evaluate every polynomial of degree < t; the coefficient vector runs
    in lexicographic order with the constant term slowest.  When n = q+1 the
    last column is the leading coefficient.  Rows are then stably sorted by
    their last column, so that column is constant on consecutive blocks of
    q^(t-1) rows.
    """
    if not 1 <= t <= n:
        raise ParamsOutOfRange(f"need 1 <= t <= n, got t={t}, n={n}")
    if q < 2:
        raise ParamsOutOfRange(f"alphabet size {q} < 2")
    if t == 1:
        rows = tuple((c,) * n for c in range(q))
        return OrthogonalArray(rows, n, q, t)
    f = field_new(q)
    if n > q + 1:
        raise ParamsInfeasible(f"strength {t} OA of length {n} > q+1 = {q + 1} is not constructed")
    points, extended = _points(f, n)
    rows = []
    for coeffs in product(range(q), repeat=t):
        row = [_horner(f, coeffs, x) for x in points]
        if extended:
            row.append(coeffs[-1])
        rows.append(tuple(row))
    rows.sort(key=lambda r: r[-1])
    return OrthogonalArray(tuple(rows), n, q, t)


@dataclass(frozen=True)
class ParityCheck:
    """(w-1) x n parity-check matrix of an [n, n-w+1, w] GRS code."""

    matrix: tuple[tuple[int, ...], ...]
    field: Field
    n: int
    w: int

    @property
    def q(self) -> int:
        return self.field.q

    def submatrix(self, cols: Sequence[int]) -> list[list[int]]:
        return [[row[c] for c in cols] for row in self.matrix]

    def is_mds(self) -> bool:
        """Every w-1 columns independent (exhaustive)."""
        k = self.w - 1
        return all(
            rank(self.field, self.submatrix(cols)) == k
            for cols in combinations(range(self.n), k)
        )


def mds_parity_check(n: int, w: int, q: int) -> ParityCheck:
    if not 2 <= w <= n:
        raise ParamsOutOfRange(f"need 2 <= w <= n, got w={w}, n={n}")
    f = field_new(q)
    if n > q + 1:
        raise ParamsInfeasible(f"MDS length {n} exceeds q+1 = {q + 1}")
    points, extended = _points(f, n)
    rows = []
    for j in range(w - 1):
        row = [f.pow(x, j) for x in points]
        if extended:
            row.append(1 if j == w - 2 else 0)
        rows.append(tuple(row))
    return ParityCheck(tuple(rows), f, n, w)


def mds_min_weight_codewords(h: ParityCheck) -> Code:
    """All weight-w codewords of the code with parity check ``h``: one
    projective kernel vector per w-subset of columns, times every nonzero
    scalar."""
    f, n, w = h.field, h.n, h.w
    words = []
    for supp in colex_subsets(n, w):
        kernel = nullspace(f, h.submatrix(supp))
        if len(kernel) != 1:
            raise KernelDimensionError(
                f"columns {supp}: kernel has dimension {len(kernel)}, expected 1"
            )
        vec = kernel[0]
        if not all(vec):
            raise KernelDimensionError(f"columns {supp}: kernel vector {vec} has a zero entry")
        for a in range(1, f.q):
            words.append(place(n, supp, [f.mul(a, v) for v in vec]))
    return Code(words, q=f.q, n=n, weight=w)


@dataclass(frozen=True)
class Feasibility:
    status: str  # "feasible" | "infeasible" | "unknown"
    reason: str
    bound: str | None = None

    def __str__(self):
        return f"{self.status}({self.reason})"

    @property
    def infeasible(self) -> bool:
        return self.status == "infeasible"


def oa_feasible(t: int, n: int, q: int) -> Feasibility:
    """Three-valued existence screen for OA(t, n, q) of index one."""
    if t < 1 or n < t or q < 2:
        raise ParamsOutOfRange(f"need t >= 1, n >= t, q >= 2; got t={t}, n={n}, q={q}")
    if t == 2 and n > q + 1:
        return Feasibility("infeasible", f"strength 2 forces n <= q+1 = {q + 1}", "oa_strength2_length")
    if t >= 3 and q >= t:
        if q % 2 == 0 and n > q + t - 1:
            return Feasibility("infeasible", f"even q forces n <= q+t-1 = {q + t - 1}", "oa_even_q_length")
        if q % 2 == 1 and n > q + t - 2:
            return Feasibility("infeasible", f"odd q forces n <= q+t-2 = {q + t - 2}", "oa_odd_q_length")
    if q <= t and n > t + 1:
        return Feasibility("infeasible", f"q <= t forces n <= t+1 = {t + 1}", "oa_small_alphabet_length")
    if t == 1:
        return Feasibility("feasible", "repetition array", "oa_repetition")
    if n <= t + 1:
        return Feasibility("feasible", "all q^t words, plus a parity column when n = t+1", "oa_trivial")
    if is_prime_power(q):
        if n <= q + 1:
            return Feasibility("feasible", "Reed-Solomon construction", "mds_existence")
        if q % 2 == 0 and t in (3, q - 1) and 2 <= t <= q - 1 and n <= q + 2:
            return Feasibility("feasible", "even-q extension to n = q+2 (not constructed)", "mds_existence_even_ext")
    return Feasibility("unknown", "no bound decides these parameters")
