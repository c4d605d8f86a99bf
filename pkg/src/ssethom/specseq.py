"""Spectral sequence of a double complex over a prime field or the rationals.

Filtration by columns: F_p of the total complex spans the blocks with first
index <= p.  Pages come from explicit subspace chains

    Z^r(p,q) = F_p(T_n) meet D^{-1} F_{p-r}(T_{n-1}),      n = p + q,
    E^r(p,q) = Z^r(p,q) / (Z^{r-1}(p-1,q+1) + D Z^{r-1}(p+r-1,q-r+2)),

with deterministic echelon bases throughout.  Page-1 representatives are the
pure vertical homology classes of each column, so the d^1 matrices agree
entry-for-entry with the induced horizontal maps computed column-wise.

Filtering by rows runs the same machinery on the transposed double complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .homalg import DoubleComplex, TotalComplex, ring_prime, total_complex


# -- linear algebra over Q or F_p ----------------------------------------------


def _red(a, p):
    return a % p if p is not None else a


class _Echelon:
    """A growing span kept in forward-reduced echelon form.

    Each pivot remembers how it was assembled from the vectors fed to add(),
    so membership tests can return coordinates over those generators.  Every
    add() call consumes one generator tag, hit or miss.
    """

    def __init__(self, dim: int, p: int | None):
        self.dim = dim
        self.p = p
        self.pivots: dict[int, tuple[list, dict[int, object]]] = {}
        self.count = 0

    def _zero(self):
        return 0 if self.p is not None else Fraction(0)

    def reduce(self, vec: list) -> tuple[list, dict[int, object]]:
        """Returns (v, expr) with v = vec + sum expr[t] * generator_t."""
        v = list(vec)
        expr: dict[int, object] = {}
        for r in sorted(self.pivots):
            a = v[r]
            if a:
                pivot, pexpr = self.pivots[r]
                if self.p is not None:
                    for i in range(r, self.dim):
                        v[i] = (v[i] - a * pivot[i]) % self.p
                else:
                    for i in range(r, self.dim):
                        v[i] = v[i] - a * pivot[i]
                for t, c in pexpr.items():
                    expr[t] = _red(expr.get(t, self._zero()) - a * c, self.p)
        return v, expr

    @staticmethod
    def leading(v: list) -> int | None:
        for r, a in enumerate(v):
            if a:
                return r
        return None

    def add(self, vec: list) -> bool:
        """Feed one generator; True if it enlarged the span."""
        tag = self.count
        self.count += 1
        v, expr = self.reduce(vec)
        lead = self.leading(v)
        if lead is None:
            return False
        inv = pow(v[lead], -1, self.p) if self.p is not None else Fraction(1) / v[lead]
        v = [_red(x * inv, self.p) for x in v]
        pexpr = {t: _red(c * inv, self.p) for t, c in expr.items()}
        pexpr[tag] = _red(inv, self.p) if self.p is not None else inv
        self.pivots[lead] = (v, pexpr)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, vec: list) -> bool:
        v, _ = self.reduce(vec)
        return self.leading(v) is None

    def coordinates(self, vec: list) -> dict[int, object] | None:
        """vec as a combination of the fed generators (by tag), or None."""
        v, expr = self.reduce(vec)
        if self.leading(v) is not None:
            return None
        return {t: _red(-c, self.p) for t, c in expr.items() if c}


def _nullspace(images: list[list], dim_in: int, p: int | None) -> list[list]:
    """Kernel basis of the map sending e_j to images[j], deterministic.

    Standard incremental trick: feed the images left to right; each image
    already in the span of the earlier ones yields one kernel vector.
    """
    if not images:
        return []
    dim_out = len(images[0])
    ech = _Echelon(dim_out, p)
    added: list[int] = []
    kernel = []
    one = 1 if p is not None else Fraction(1)
    zero = 0 if p is not None else Fraction(0)
    for j in range(dim_in):
        img = images[j]
        if dim_out == 0 or not any(img):
            unit = [zero] * dim_in
            unit[j] = one
            kernel.append(unit)
            continue
        coords = ech.coordinates(img)
        if coords is None:
            ech.add(img)
            added.append(j)
        else:
            vec = [zero] * dim_in
            vec[j] = one
            for t, c in coords.items():
                vec[added[t]] = _red(vec[added[t]] - c, p)
            kernel.append(vec)
    return kernel


# -- pages -----------------------------------------------------------------------


@dataclass(frozen=True)
class SSPage:
    """One page: dims and bases per spot, differentials keyed by source spot.

    basis[(p,q)] lists class representatives as coordinate vectors in the
    total complex of the filtered orientation.  diff[(p,q)] is a row-major
    matrix into the page's (p-r, q+r-1) spot basis.
    """

    r: int
    orientation: str
    dims: dict
    basis: dict
    diff: dict

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)


@dataclass(frozen=True)
class ConvergenceReport:
    ok: bool
    degrees: tuple
    problems: tuple = ()


def transpose_double_complex(D: DoubleComplex) -> DoubleComplex:
    """Swap the two gradings; the commuting-square convention is symmetric."""
    P, Q = D.p_levels, D.q_levels
    sizes = tuple(tuple(D.sizes[p][q] for p in range(P)) for q in range(Q))
    dh = tuple(tuple(D.dv[p][q] for p in range(P)) for q in range(Q))
    dv = tuple(tuple(D.dh[p][q] for p in range(P)) for q in range(Q))
    return DoubleComplex(D.ring, sizes, dh, dv, D.complete_q, D.complete_p)


class _Filtration:
    """Scratch for one orientation: total complex, block offsets, Z^r chains."""

    def __init__(self, D: DoubleComplex):
        self.D = D
        self.T = total_complex(D)
        self.p = ring_prime(D.ring)
        self.P = D.p_levels
        self.Q = D.q_levels
        self.tops = self.T.complex.top_degree
        self.offsets = {}
        for n, blocks in enumerate(self.T.layout):
            for (bp, bq, off, size) in blocks:
                self.offsets[(bp, bq)] = (n, off, size)
        self._z_cache: dict = {}
        self._images: dict = {}

    def dim_total(self, n: int) -> int:
        return self.T.complex.dim(n)

    def zero_vec(self, n: int):
        return [0 if self.p is not None else Fraction(0)] * self.dim_total(n)

    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def filt_coords(self, n: int, pmax: int) -> list[int]:
        """Total-complex coordinates lying in filtration level pmax."""
        out: list[int] = []
        if not (0 <= n <= self.tops):
            return out
        for (bp, bq, off, size) in self.T.layout[n]:
            if bp <= pmax:
                out.extend(range(off, off + size))
        return out

    def boundary_images(self, n: int) -> list[list]:
        """Image of the total boundary on each coordinate of T_n."""
        if n not in self._images:
            dim = self.dim_total(n)
            cols = [self.zero_vec(n - 1) for _ in range(dim)]
            if dim and 1 <= n <= self.tops:
                for (r, c, val) in self.T.complex.boundary(n).entries():
                    cols[c][r] = _red(cols[c][r] + val, self.p)
            self._images[n] = cols
        return self._images[n]

    def apply_d(self, n: int, vec: list) -> list:
        out = self.zero_vec(n - 1)
        imgs = self.boundary_images(n)
        for c, a in enumerate(vec):
            if a:
                col = imgs[c]
                for r, x in enumerate(col):
                    if x:
                        out[r] = _red(out[r] + a * x, self.p)
        return out

    def z_space(self, r: int, p: int, q: int) -> list[list]:
        """Echelon basis of Z^r(p,q), as vectors in T_{p+q} coordinates."""
        key = (r, p, q)
        if key in self._z_cache:
            return self._z_cache[key]
        n = p + q
        coords = self.filt_coords(n, p)
        basis: list[list] = []
        if coords:
            lower = set(self.filt_coords(n - 1, p - r))
            keep = [i for i in range(self.dim_total(n - 1)) if i not in lower]
            imgs = self.boundary_images(n)
            images = [[imgs[c][i] for i in keep] for c in coords]
            for k in _nullspace(images, len(coords), self.p):
                v = self.zero_vec(n)
                for j, c in enumerate(coords):
                    if k[j]:
                        v[c] = k[j]
                basis.append(v)
        self._z_cache[key] = basis
        return basis

    def vertical_homology_reps(self, p: int, q: int) -> list[list]:
        """Representatives of H_q(column p), as pure block (p,q) cycles."""
        got = self.offsets.get((p, q))
        if got is None:
            return []
        n, off, size = got
        lower = self.offsets.get((p, q - 1))
        if lower is None:
            images = [[] for _ in range(size)]
        else:
            imgs = self.boundary_images(n)
            _, loff, lsize = lower
            images = [[imgs[off + c][loff + i] for i in range(lsize)]
                      for c in range(size)]
        cycles = []
        for k in _nullspace(images, size, self.p):
            w = self.zero_vec(n)
            for j in range(size):
                if k[j]:
                    w[off + j] = k[j]
            cycles.append(w)
        # mod out the image of the block straight above; the total boundary of
        # a pure (p, q+1) vector meets this block exactly in its vertical part
        ech = _Echelon(self.dim_total(n), self.p)
        upper = self.offsets.get((p, q + 1))
        if upper is not None:
            _, uoff, usize = upper
            for c in range(usize):
                v = self.zero_vec(n + 1)
                v[uoff + c] = self.one()
                img = self.apply_d(n + 1, v)
                w = self.zero_vec(n)
                for i in range(size):
                    w[off + i] = img[off + i]
                ech.add(w)
        reps = []
        for z in cycles:
            if ech.add(z):
                reps.append(z)
        return reps


def spectral_sequence(D: DoubleComplex, orientation: str = "cols", R: int = 12) -> list[SSPage]:
    """Pages E^0 .. E^stable (or E^R, whichever comes first)."""
    if orientation not in ("cols", "rows"):
        raise ValueError(f"unknown orientation {orientation!r}")
    if ring_prime(D.ring) is None and D.ring != "Q":
        raise ValueError("spectral sequence needs field coefficients (Q or Fp)")
    work = transpose_double_complex(D) if orientation == "rows" else D
    filt = _Filtration(work)
    stable = max(1, min(filt.P, filt.Q + 1))

    pages = [_page_zero(filt, orientation)]
    for r in range(1, R + 1):
        pages.append(_page(filt, r, orientation, pages[-1] if r > 1 else None))
        if r >= stable:
            break
    return pages


def _page_zero(filt: _Filtration, orientation: str) -> SSPage:
    dims = {}
    basis = {}
    diff = {}
    for p in range(filt.P):
        for q in range(filt.Q):
            got = filt.offsets.get((p, q))
            if got is None or got[2] == 0:
                continue
            n, off, size = got
            dims[(p, q)] = size
            vecs = []
            for c in range(size):
                v = filt.zero_vec(n)
                v[off + c] = filt.one()
                vecs.append(tuple(v))
            basis[(p, q)] = tuple(vecs)
    for (p, q), vecs in basis.items():
        if dims.get((p, q - 1), 0) == 0:
            continue
        _, toff, tsize = filt.offsets[(p, q - 1)]
        cols = []
        for v in vecs:
            img = filt.apply_d(p + q, list(v))
            cols.append([img[toff + i] for i in range(tsize)])
        diff[(p, q)] = tuple(tuple(col[i] for col in cols) for i in range(tsize))
    return SSPage(0, orientation, dims, basis, diff)


def _page(filt: _Filtration, r: int, orientation: str, prev: SSPage | None) -> SSPage:
    reps: dict = {}
    denoms: dict = {}
    dims = {}
    for p in range(filt.P):
        for q in range(filt.Q):
            n = p + q
            dim_n = filt.dim_total(n)
            if dim_n == 0:
                continue
            ech = _Echelon(dim_n, filt.p)
            denom_gens = list(filt.z_space(r - 1, p - 1, q + 1))
            for z in filt.z_space(r - 1, p + r - 1, q - r + 2):
                denom_gens.append(filt.apply_d(n + 1, z))
            for g in denom_gens:
                ech.add(g)
            if r == 1:
                preferred = filt.vertical_homology_reps(p, q)
            elif prev is not None and (p, q) in prev.basis:
                preferred = [list(v) for v in prev.basis[(p, q)]]
            else:
                preferred = []
            zbasis = filt.z_space(r, p, q)
            zech = _Echelon(dim_n, filt.p)
            for z in zbasis:
                zech.add(z)
            spot_reps = []
            for cand in preferred:
                if zech.contains(cand) and ech.add(cand):
                    spot_reps.append(cand)
            for z in zbasis:
                if ech.add(z):
                    spot_reps.append(z)
            if spot_reps:
                dims[(p, q)] = len(spot_reps)
                reps[(p, q)] = spot_reps
            denoms[(p, q)] = (ech, denom_gens)

    diff = {}
    for (p, q), vecs in reps.items():
        tp, tq = p - r, q + r - 1
        if (tp, tq) not in reps:
            tgt = denoms.get((tp, tq))
            for v in vecs:
                img = filt.apply_d(p + q, v)
                if any(img) and (tgt is None or not tgt[0].contains(img)):
                    raise AssertionError(
                        f"page {r}: image at {(tp, tq)} is not a denominator element")
            continue
        target_ech = _Echelon(filt.dim_total(tp + tq), filt.p)
        for w in reps[(tp, tq)]:
            target_ech.add(w)
        for g in denoms[(tp, tq)][1]:
            target_ech.add(g)
        tdim = len(reps[(tp, tq)])
        cols = []
        for v in vecs:
            img = filt.apply_d(p + q, v)
            coords = target_ech.coordinates(img)
            if coords is None:
                raise AssertionError(f"page {r}: image not in Z^r at {(tp, tq)}")
            col = [0 if filt.p is not None else Fraction(0)] * tdim
            for t, c in coords.items():
                if t < tdim:
                    col[t] = c
            cols.append(col)
        diff[(p, q)] = tuple(tuple(col[i] for col in cols) for i in range(tdim))

    basis = {spot: tuple(tuple(v) for v in vecs) for spot, vecs in reps.items()}
    return SSPage(r, orientation, dims, basis, diff)


def check_convergence(pages: list[SSPage], T: TotalComplex) -> ConvergenceReport:
    """Sum of stable-page dimensions per total degree against dim H(Tot)."""
    ring = T.complex.ring
    if ring_prime(ring) is None and ring != "Q":
        raise ValueError("convergence check needs field coefficients (Q or Fp)")
    last = pages[-1]
    problems = []
    grid = pages[0].dims
    if grid:
        maxp = max(p for (p, q) in grid)
        maxq = max(q for (p, q) in grid)
        stable = max(1, min(maxp + 1, maxq + 2))
        if last.r < stable:
            problems.append(
                f"pages stop at r={last.r}, before the stable page r={stable}")
    if any(any(any(row) for row in m) for m in last.diff.values()):
        problems.append("the last page still carries a nonzero differential")
    degrees = []
    for n in range(T.complex.trusted_through + 1):
        total = sum(d for (p, q), d in last.dims.items() if p + q == n)
        dim_h = (T.complex.dim(n) - T.complex.boundary_rank(n)
                 - T.complex.boundary_rank(n + 1))
        degrees.append((n, total, dim_h))
        if total != dim_h:
            problems.append(f"degree {n}: E-infinity total {total} != dim H {dim_h}")
    return ConvergenceReport(not problems, tuple(degrees), tuple(problems))
