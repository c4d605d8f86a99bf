"""Exact sparse integer linear algebra.

Everything here runs on Python ints, so coefficients never overflow silently.
Matrices are stored row-sparse (dict of row -> dict of col -> nonzero value).
The Smith normal form routine prefers unit pivots with low fill, which keeps
boundary-matrix eliminations close to linear in the number of nonzeros; gcd
pivoting only kicks in on the (rare) residue where no +-1 entry survives.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, NamedTuple


class SparseIntMatrix:
    """Immutable-by-convention sparse integer matrix.

    ``data`` maps row index -> {col index -> value}; zero entries are never
    stored.  Do not mutate ``data`` after construction.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict[int, dict[int, int]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        self.data = {}
        if data:
            for r, row in data.items():
                clean = {c: v for c, v in row.items() if v}
                if clean:
                    if not (0 <= r < rows):
                        raise ValueError(f"row index {r} out of range")
                    for c in clean:
                        if not (0 <= c < cols):
                            raise ValueError(f"col index {c} out of range")
                    self.data[r] = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(rows: int, cols: int) -> "SparseIntMatrix":
        return SparseIntMatrix(rows, cols)

    @staticmethod
    def identity(n: int) -> "SparseIntMatrix":
        return SparseIntMatrix(n, n, {i: {i: 1} for i in range(n)})

    @staticmethod
    def from_entries(rows: int, cols: int, entries: Iterable[tuple[int, int, int]]) -> "SparseIntMatrix":
        data: dict[int, dict[int, int]] = {}
        for r, c, v in entries:
            if v == 0:
                continue
            row = data.setdefault(r, {})
            row[c] = row.get(c, 0) + v
        return SparseIntMatrix(rows, cols, data)

    @staticmethod
    def from_dense(dense: list[list[int]], cols: int | None = None) -> "SparseIntMatrix":
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if dense else 0
        data = {r: {c: v for c, v in enumerate(row) if v} for r, row in enumerate(dense)}
        return SparseIntMatrix(rows, cols, data)

    # -- access ------------------------------------------------------------

    def entry(self, r: int, c: int) -> int:
        return self.data.get(r, {}).get(c, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, row in self.data.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def column(self, c: int) -> dict[int, int]:
        return {r: row[c] for r, row in self.data.items() if c in row}

    def nnz(self) -> int:
        return sum(len(row) for row in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def entries(self):
        for r in sorted(self.data):
            row = self.data[r]
            for c in sorted(row):
                yield r, c, row[c]

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def transpose(self) -> "SparseIntMatrix":
        data: dict[int, dict[int, int]] = {}
        for r, row in self.data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        return SparseIntMatrix(self.cols, self.rows, data)

    def scale(self, k: int) -> "SparseIntMatrix":
        if k == 0:
            return SparseIntMatrix.zero(self.rows, self.cols)
        return SparseIntMatrix(self.rows, self.cols,
                               {r: {c: k * v for c, v in row.items()} for r, row in self.data.items()})

    def add(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        data = {r: dict(row) for r, row in self.data.items()}
        for r, row in other.data.items():
            dst = data.setdefault(r, {})
            for c, v in row.items():
                nv = dst.get(c, 0) + v
                if nv:
                    dst[c] = nv
                elif c in dst:
                    del dst[c]
        return SparseIntMatrix(self.rows, self.cols, data)

    def sub(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self.add(other.scale(-1))

    def mul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in mul")
        data: dict[int, dict[int, int]] = {}
        for r, row in self.data.items():
            acc: dict[int, int] = {}
            for k, v in row.items():
                brow = other.data.get(k)
                if not brow:
                    continue
                for c, w in brow.items():
                    nv = acc.get(c, 0) + v * w
                    if nv:
                        acc[c] = nv
                    elif c in acc:
                        del acc[c]
            if acc:
                data[r] = acc
        return SparseIntMatrix(self.rows, other.cols, data)

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        """Matrix times sparse column vector (dict col -> value)."""
        out: dict[int, int] = {}
        for r, row in self.data.items():
            s = 0
            for c, v in row.items():
                w = vec.get(c)
                if w:
                    s += v * w
            if s:
                out[r] = s
        return out

    @staticmethod
    def block(blocks: dict[tuple[int, int], "SparseIntMatrix"],
              row_sizes: list[int], col_sizes: list[int]) -> "SparseIntMatrix":
        """Assemble a block matrix; blocks keyed by (block_row, block_col)."""
        row_off = [0]
        for s in row_sizes:
            row_off.append(row_off[-1] + s)
        col_off = [0]
        for s in col_sizes:
            col_off.append(col_off[-1] + s)
        data: dict[int, dict[int, int]] = {}
        for (br, bc), m in blocks.items():
            if m.rows != row_sizes[br] or m.cols != col_sizes[bc]:
                raise ValueError("block shape mismatch")
            ro, co = row_off[br], col_off[bc]
            for r, row in m.data.items():
                dst = data.setdefault(ro + r, {})
                for c, v in row.items():
                    dst[co + c] = v
        return SparseIntMatrix(row_off[-1], col_off[-1], data)


class SmithForm(NamedTuple):
    """Invariant factors d_1 | d_2 | ... (all positive), plus optional transforms.

    When transforms were requested, U @ A @ V is the diagonal matrix with the
    invariant factors on the diagonal and U, V are unimodular.
    """

    factors: tuple[int, ...]
    rank: int
    U: SparseIntMatrix | None
    V: SparseIntMatrix | None


def _fill_score(rows, colrows, r, c):
    return (len(rows[r]) - 1) * (len(colrows[c]) - 1)


def smith_normal_form(A: SparseIntMatrix, transforms: bool = False) -> SmithForm:
    """Smith normal form over Z.

    Without transforms this deletes pivot rows/columns as it goes (fast path
    used for rank and homology).  With transforms it additionally maintains
    dense U and V so that U A V = D exactly; only use that on small matrices.
    """
    rows: dict[int, dict[int, int]] = {r: dict(row) for r, row in A.data.items()}
    colrows: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            colrows.setdefault(c, set()).add(r)

    U = [[1 if i == j else 0 for j in range(A.rows)] for i in range(A.rows)] if transforms else None
    # V maintained as list of columns: V_cols[j] = dense column vector
    V_cols = [[1 if i == j else 0 for i in range(A.cols)] for j in range(A.cols)] if transforms else None

    def row_axpy(i: int, r: int, coef: int):
        """row_i += coef * row_r (on the working matrix and U)."""
        src = rows.get(r)
        if not src or coef == 0:
            return
        dst = rows.setdefault(i, {})
        for c, v in src.items():
            nv = dst.get(c, 0) + coef * v
            if nv:
                if c not in dst:
                    colrows.setdefault(c, set()).add(i)
                dst[c] = nv
            else:
                if c in dst:
                    del dst[c]
                    colrows[c].discard(i)
        if not dst:
            del rows[i]
        if U is not None:
            ur, ui = U[r], U[i]
            for k in range(len(ui)):
                ui[k] += coef * ur[k]

    def col_axpy(j: int, c: int, coef: int):
        """col_j += coef * col_c (on the working matrix and V)."""
        if coef == 0:
            return
        src_rows = list(colrows.get(c, ()))
        for r in src_rows:
            v = rows[r].get(c)
            if v is None:
                continue
            dst = rows[r]
            nv = dst.get(j, 0) + coef * v
            if nv:
                if j not in dst:
                    colrows.setdefault(j, set()).add(r)
                dst[j] = nv
            else:
                if j in dst:
                    del dst[j]
                    colrows[j].discard(r)
        if V_cols is not None:
            vc, vj = V_cols[c], V_cols[j]
            for k in range(len(vj)):
                vj[k] += coef * vc[k]

    diag: list[int] = []
    pivots: list[tuple[int, int]] = []  # (row, col) in elimination order
    heap: list[tuple[int, int, int]] = []
    heap_is_unit_mode = True

    def rebuild_heap():
        nonlocal heap, heap_is_unit_mode
        heap = []
        units = []
        best_abs = None
        for r in rows:
            for c, v in rows[r].items():
                a = -v if v < 0 else v
                if a == 1:
                    units.append((_fill_score(rows, colrows, r, c), r, c))
                elif best_abs is None or a < best_abs:
                    best_abs = a
        if units:
            heap = units
            heapq.heapify(heap)
            heap_is_unit_mode = True
        elif best_abs is not None:
            cand = []
            for r in rows:
                for c, v in rows[r].items():
                    if abs(v) == best_abs:
                        cand.append((_fill_score(rows, colrows, r, c), r, c))
            heap = cand
            heapq.heapify(heap)
            heap_is_unit_mode = False

    def pick_pivot():
        while True:
            if not heap:
                rebuild_heap()
                if not heap:
                    return None
            score, r, c = heapq.heappop(heap)
            row = rows.get(r)
            if row is None or c not in row:
                continue
            if heap_is_unit_mode and abs(row[c]) != 1:
                continue
            fresh = _fill_score(rows, colrows, r, c)
            if fresh > score and heap and heap[0][0] < fresh:
                heapq.heappush(heap, (fresh, r, c))
                continue
            return r, c

    def clean_pivot(r: int, c: int) -> tuple[int, int]:
        """Clear the pivot's row and column with gcd steps.

        Returns the final pivot position; afterwards row r holds only the
        pivot entry and column c holds only the pivot entry.  Each pass
        either finishes or strictly shrinks |pivot|, so this terminates.
        """
        while True:
            # clear the column via row operations
            while True:
                d = rows[r][c]
                others = sorted(colrows[c] - {r})
                if not others:
                    break
                for i in others:
                    v = rows[i].get(c)
                    if v is None:
                        continue
                    q = v // d
                    if q:
                        row_axpy(i, r, -q)
                rem = sorted((abs(rows[i][c]), i) for i in sorted(colrows[c] - {r}))
                if not rem:
                    break
                # a remainder smaller than |d| survives: make it the pivot row
                r = rem[0][1]
            # clear the row via column operations (column c is now a
            # singleton, so these only touch row r)
            d = rows[r][c]
            for j in sorted(j for j in rows[r] if j != c):
                q = rows[r][j] // d
                if q:
                    col_axpy(j, c, -q)
            leftovers = sorted((abs(v), j) for j, v in rows[r].items() if j != c)
            if not leftovers:
                return r, c
            c = leftovers[0][1]

    while True:
        picked = pick_pivot()
        if picked is None:
            break
        r, c = clean_pivot(*picked)

        if abs(rows[r][c]) != 1:
            # ensure the pivot divides every remaining entry: fold an
            # offending row into the pivot row and re-clean (the pivot
            # strictly shrinks each round, so this terminates)
            while True:
                d = rows[r][c]
                offender = None
                for i in sorted(rows):
                    if i == r or not rows[i]:
                        continue
                    if any(v % d for v in rows[i].values()):
                        offender = i
                        break
                if offender is None:
                    break
                row_axpy(r, offender, 1)
                r, c = clean_pivot(r, c)
        d = rows[r][c]

        if transforms and d < 0:
            # normalize sign into U
            for j in list(rows[r]):
                rows[r][j] = -rows[r][j]
            for k in range(len(U[r])):
                U[r][k] = -U[r][k]
            d = rows[r][c]

        diag.append(abs(d))
        pivots.append((r, c))
        del rows[r]
        colrows[c].discard(r)
        if colrows.get(c):
            raise AssertionError("pivot column not clean at removal")
        colrows.pop(c, None)

    # Divisibility chain should hold by construction.
    for a, b in zip(diag, diag[1:]):
        if b % a:
            raise AssertionError(f"invariant factor chain violated: {diag}")

    if not transforms:
        return SmithForm(tuple(diag), len(diag), None, None)

    # Compose the permutations that move pivot k to position (k, k).
    row_perm = [r for r, _ in pivots] + sorted(set(range(A.rows)) - {r for r, _ in pivots})
    col_perm = [c for _, c in pivots] + sorted(set(range(A.cols)) - {c for _, c in pivots})
    Um = SparseIntMatrix.from_dense([U[r] for r in row_perm], A.rows)
    Vm = SparseIntMatrix(A.cols, A.cols,
                         {i: {j: V_cols[c][i] for j, c in enumerate(col_perm) if V_cols[c][i]}
                          for i in range(A.cols)})
    return SmithForm(tuple(diag), len(diag), Um, Vm)


def rank_z(A: SparseIntMatrix) -> int:
    return smith_normal_form(A).rank


def invariant_factors(A: SparseIntMatrix) -> tuple[int, ...]:
    return smith_normal_form(A).factors


def is_unimodular(A: SparseIntMatrix) -> bool:
    if A.rows != A.cols:
        return False
    s = smith_normal_form(A)
    return s.rank == A.rows and all(d == 1 for d in s.factors)


def kernel_basis(A: SparseIntMatrix) -> list[dict[int, int]]:
    """Basis of the integer kernel, as sparse column vectors.

    The columns of V beyond the rank satisfy A v = 0 and span the kernel
    saturatedly (V unimodular).
    """
    if A.cols == 0:
        return []
    if A.is_zero():
        return [{j: 1} for j in range(A.cols)]
    s = smith_normal_form(A, transforms=True)
    out = []
    for j in range(s.rank, A.cols):
        col = s.V.column(j)
        out.append(col)
    return out


def solve(A: SparseIntMatrix, b: dict[int, int]) -> dict[int, int] | None:
    """One integer solution x of A x = b, or None if none exists."""
    s = smith_normal_form(A, transforms=True)
    ub = s.U.apply(b) if s.U is not None else dict(b)
    y: dict[int, int] = {}
    for i in range(A.rows):
        v = ub.get(i, 0)
        if i < s.rank:
            d = s.factors[i]
            if v % d:
                return None
            if v:
                y[i] = v // d
        elif v:
            return None
    x: dict[int, int] = {}
    for i, w in y.items():
        col = s.V.column(i)
        for r, v in col.items():
            nv = x.get(r, 0) + w * v
            if nv:
                x[r] = nv
            elif r in x:
                del x[r]
    return x


def rank_mod_p(A: SparseIntMatrix, p: int) -> int:
    """Rank over the prime field F_p (sparse Gaussian elimination)."""
    rows = []
    for r in sorted(A.data):
        row = {c: v % p for c, v in A.data[r].items() if v % p}
        if row:
            rows.append(row)
    rank = 0
    while rows:
        # pick the shortest row; deterministic tie-break by smallest pivot col
        rows.sort(key=lambda row: (len(row), min(row)))
        piv_row = rows.pop(0)
        c = min(piv_row)
        inv = pow(piv_row[c], -1, p)
        piv = {j: (v * inv) % p for j, v in piv_row.items()}
        rank += 1
        nxt = []
        for row in rows:
            f = row.get(c)
            if f:
                for j, v in piv.items():
                    nv = (row.get(j, 0) - f * v) % p
                    if nv:
                        row[j] = nv
                    elif j in row:
                        del row[j]
            if row:
                nxt.append(row)
        rows = nxt
    return rank


def rank_rational(A: SparseIntMatrix) -> int:
    """Rank over Q (fraction-free is overkill here; Fractions keep it exact)."""
    rows = []
    for r in sorted(A.data):
        row = {c: Fraction(v) for c, v in A.data[r].items()}
        if row:
            rows.append(row)
    rank = 0
    while rows:
        rows.sort(key=lambda row: (len(row), min(row)))
        piv_row = rows.pop(0)
        c = min(piv_row)
        inv = 1 / piv_row[c]
        piv = {j: v * inv for j, v in piv_row.items()}
        rank += 1
        nxt = []
        for row in rows:
            f = row.get(c)
            if f:
                for j, v in piv.items():
                    nv = row.get(j, 0) - f * v
                    if nv:
                        row[j] = nv
                    elif j in row:
                        del row[j]
            if row:
                nxt.append(row)
        rows = nxt
    return rank
