"""Chain complexes and exact homology over Z, Q, and prime fields.

Boundary matrices always carry integer entries (they come from face tables);
the ring tag only changes how ranks and homology are computed.  Over Z the
answers are finitely presented abelian groups read off the Smith normal form,
over a field they are dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .snf import (
    SparseIntMatrix,
    invariant_factors,
    kernel_basis,
    rank_mod_p,
    rank_rational,
    smith_normal_form,
    solve,
)
from .sset import (
    BiSemiSimplicialSet,
    Enumeration,
    HomotopyCertificate,
    SemiSimplicialSet,
    SimplicialSet,
    SSetMap,
    ValidationReport,
)


# -- rings -------------------------------------------------------------------


def parse_ring(s: str) -> str:
    s = s.strip().upper()
    if s in ("Z", "Q"):
        return s
    if s.startswith("F"):
        try:
            p = int(s[1:])
        except ValueError:
            raise ValueError(f"bad ring {s!r}") from None
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"F{p}: modulus must be prime")
        return f"F{p}"
    raise ValueError(f"bad ring {s!r}: expected Z, Q, or Fp")


def ring_prime(ring: str) -> int | None:
    return int(ring[1:]) if ring.startswith("F") else None


# -- finitely presented abelian groups ----------------------------------------


@dataclass(frozen=True)
class FPAbelianGroup:
    """Z^rank plus cyclic factors Z/t_1 + ... with t_1 | t_2 | ..., each > 1."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "pretty": str(self)}


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def group_from_cyclic_orders(rank: int, orders) -> FPAbelianGroup:
    """Canonicalize a direct sum of cyclic groups into invariant factors.

    Splits every order into prime powers, then rebuilds the divisibility
    chain by pairing the largest powers of each prime.
    """
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        if n == 1:
            continue
        if n <= 0:
            raise ValueError("cyclic orders must be positive")
        for p, e in _prime_factors(n).items():
            by_prime.setdefault(p, []).append(e)
    for exps in by_prime.values():
        exps.sort(reverse=True)
    depth = max((len(v) for v in by_prime.values()), default=0)
    factors = []
    for k in range(depth):
        t = 1
        for p, exps in by_prime.items():
            if k < len(exps):
                t *= p ** exps[k]
        factors.append(t)
    factors.reverse()  # ascending divisibility
    return FPAbelianGroup(rank, tuple(factors))


def direct_sum_groups(groups) -> FPAbelianGroup:
    rank = sum(g.rank for g in groups)
    orders = [t for g in groups for t in g.torsion]
    return group_from_cyclic_orders(rank, orders)


def tensor_groups(a: FPAbelianGroup, b: FPAbelianGroup) -> FPAbelianGroup:
    orders = []
    orders.extend(t for t in a.torsion for _ in range(b.rank))
    orders.extend(u for u in b.torsion for _ in range(a.rank))
    orders.extend(_gcd(t, u) for t in a.torsion for u in b.torsion)
    return group_from_cyclic_orders(a.rank * b.rank, orders)


def tor_groups(a: FPAbelianGroup, b: FPAbelianGroup) -> FPAbelianGroup:
    return group_from_cyclic_orders(0, [_gcd(t, u) for t in a.torsion for u in b.torsion])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def kunneth_oracle(hx, hy, n: int) -> FPAbelianGroup:
    """H_n of a tensor product from the factors' integer homology."""
    parts = []
    for i in range(n + 1):
        j = n - i
        if i < len(hx) and j < len(hy):
            parts.append(tensor_groups(hx[i], hy[j]))
    for i in range(n):
        j = n - 1 - i
        if i < len(hx) and j < len(hy):
            parts.append(tor_groups(hx[i], hy[j]))
    return direct_sum_groups(parts)


# -- chain complexes -----------------------------------------------------------


@dataclass(frozen=True)
class ChainComplex:
    """dims[k] generators in degree k; diffs[k]: C_k -> C_{k-1} for k >= 1.

    diffs[0] is the empty matrix for uniform indexing.  ``complete`` records
    whether degrees above the top are genuinely zero (so homology at the top
    degree can be trusted).
    """

    ring: str
    dims: tuple[int, ...]
    diffs: tuple[SparseIntMatrix, ...]
    complete: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.dims:
            raise ValueError("a chain complex needs at least degree 0")
        if len(self.diffs) != len(self.dims):
            raise ValueError("diffs and dims length mismatch")
        if self.diffs[0].rows != 0 or self.diffs[0].cols != self.dims[0]:
            raise ValueError("diffs[0] must be the empty matrix on degree 0")
        for k in range(1, len(self.dims)):
            d = self.diffs[k]
            if (d.rows, d.cols) != (self.dims[k - 1], self.dims[k]):
                raise ValueError(f"boundary {k} has shape {d.rows}x{d.cols}, "
                                 f"wanted {self.dims[k - 1]}x{self.dims[k]}")
        for k in range(2, len(self.dims)):
            if not self.diffs[k - 1].mul(self.diffs[k]).is_zero():
                raise ValueError(f"boundary squared is nonzero in degree {k}")

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    @property
    def trusted_through(self) -> int:
        """Highest degree whose homology reflects the untruncated object."""
        return self.top_degree if self.complete else self.top_degree - 1

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k <= self.top_degree else 0

    def boundary(self, k: int) -> SparseIntMatrix:
        if k <= 0 or k > self.top_degree:
            return SparseIntMatrix.zero(self.dim(k - 1), self.dim(k))
        return self.diffs[k]

    def _smith(self, k: int):
        key = ("smith", k)
        if key not in self._cache:
            self._cache[key] = smith_normal_form(self.boundary(k))
        return self._cache[key]

    def boundary_rank(self, k: int) -> int:
        """Rank of d_k over the complex's ring."""
        if k <= 0 or k > self.top_degree:
            return 0
        key = ("rank", k)
        if key not in self._cache:
            p = ring_prime(self.ring)
            if self.ring == "Z":
                self._cache[key] = self._smith(k).rank
            elif self.ring == "Q":
                self._cache[key] = rank_rational(self.diffs[k])
            else:
                self._cache[key] = rank_mod_p(self.diffs[k], p)
        return self._cache[key]

    def euler_characteristic(self) -> int:
        if not self.complete:
            raise ValueError("Euler characteristic needs a complete complex")
        return sum((-1) ** k * n for k, n in enumerate(self.dims))


def make_chain_complex(ring: str, dims, boundaries, complete: bool = False) -> ChainComplex:
    """boundaries[k-1] is d_k for k = 1..top (the degree-0 slot is implied)."""
    dims = tuple(dims)
    diffs = (SparseIntMatrix.zero(0, dims[0]),) + tuple(boundaries)
    return ChainComplex(parse_ring(ring), dims, diffs, complete)


def homology(C: ChainComplex, k: int) -> FPAbelianGroup:
    """H_k as a group (over a field: just a rank)."""
    if not (0 <= k <= C.top_degree):
        raise ValueError(f"degree {k} outside the listed range")
    cycles = C.dim(k) - C.boundary_rank(k)
    if k == C.top_degree and not C.complete:
        # boundaries from above are unknown; report the cycle count, callers
        # gate on trusted_through
        rank_above = 0
        torsion: tuple[int, ...] = ()
    elif k == C.top_degree:
        rank_above = 0
        torsion = ()
    else:
        if C.ring == "Z":
            facs = C._smith(k + 1).factors
            rank_above = len(facs)
            torsion = tuple(d for d in facs if d > 1)
        else:
            rank_above = C.boundary_rank(k + 1)
            torsion = ()
    return FPAbelianGroup(cycles - rank_above, torsion)


def graded_homology(C: ChainComplex, through: int | None = None):
    top = C.top_degree if through is None else min(through, C.top_degree)
    return tuple(homology(C, k) for k in range(top + 1))


def acyclic_through(C: ChainComplex, d: int):
    """(ok, failures): H_k trivial for 0 <= k <= d, with the offending groups."""
    if d > C.trusted_through:
        raise ValueError(f"degree {d} beyond the trusted range (<= {C.trusted_through})")
    failures = []
    for k in range(d + 1):
        h = homology(C, k)
        if not h.is_trivial:
            failures.append((k, h))
    return not failures, failures


# -- chains of semi-simplicial and simplicial sets -----------------------------


def unnormalized_chains(X: SemiSimplicialSet, ring: str, through: int | None = None) -> ChainComplex:
    """One generator per simplex, d = sum of signed faces."""
    listed = len(X.sizes) - 1
    if through is None:
        through = listed
    if through > listed:
        if not X.is_complete:
            raise ValueError(f"levels above {listed} are unknown (truncated)")
        dims = X.sizes + (0,) * (through - listed)
    else:
        dims = X.sizes[:through + 1]
    if not dims:
        dims = (0,)
    boundaries = []
    for k in range(1, len(dims)):
        entries = []
        for i in range(k + 1):
            sign = -1 if i % 2 else 1
            if k <= listed:
                tab = X.faces[k][i]
                entries.extend((tab[s], s, sign) for s in range(dims[k]))
        boundaries.append(SparseIntMatrix.from_entries(dims[k - 1], dims[k], entries))
    complete = X.is_complete and through >= (X.top_dim if X.top_dim is not None else -1)
    return make_chain_complex(ring, dims, boundaries, complete)


def normalized_chains(Y: SimplicialSet, ring: str, through: int | None = None) -> ChainComplex:
    """One generator per nondegenerate simplex; degenerate faces are dropped."""
    listed = len(Y.gen_sizes) - 1
    if through is None:
        through = listed if Y.truncated_at is None else Y.truncated_at
    if Y.truncated_at is not None and through > Y.truncated_at:
        raise ValueError("cannot extend past the truncation")
    if through > listed:
        dims = Y.gen_sizes + (0,) * (through - listed)
    else:
        dims = Y.gen_sizes[:through + 1]
    if not dims:
        dims = (0,)
    boundaries = []
    for k in range(1, len(dims)):
        entries = []
        if k <= listed:
            for i in range(k + 1):
                sign = -1 if i % 2 else 1
                tab = Y.gen_faces[k][i]
                for g in range(dims[k]):
                    ref = tab[g]
                    if not ref.word:
                        entries.append((ref.gen, g, sign))
        boundaries.append(SparseIntMatrix.from_entries(dims[k - 1], dims[k], entries))
    complete = Y.truncated_at is None and through >= Y.top_generator_degree
    return make_chain_complex(ring, dims, boundaries, complete)


def augmented_complex(X: SemiSimplicialSet, aug_size: int, aug, ring: str,
                      through: int | None = None) -> ChainComplex:
    """Shift degrees up by one and glue the augmentation at the bottom.

    Degree 0 is the augmentation set, degree k+1 is X_k, and d_1 is the
    augmentation table.
    """
    base = unnormalized_chains(X, ring, through)
    dims = (aug_size,) + base.dims
    d1 = SparseIntMatrix.from_entries(aug_size, base.dims[0],
                                      ((aug[s], s, 1) for s in range(base.dims[0])))
    boundaries = [d1] + [base.diffs[k] for k in range(1, len(base.dims))]
    return make_chain_complex(ring, dims, boundaries, base.complete)


# -- chain maps ----------------------------------------------------------------


@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    mats: tuple[SparseIntMatrix, ...]

    def __post_init__(self):
        if len(self.mats) != len(self.source.dims):
            raise ValueError("chain map must cover every source degree")
        if len(self.target.dims) < len(self.source.dims):
            raise ValueError("target has fewer degrees than source")
        for k, m in enumerate(self.mats):
            if (m.rows, m.cols) != (self.target.dims[k], self.source.dims[k]):
                raise ValueError(f"degree {k}: map shape {m.rows}x{m.cols} does not fit")
        for k in range(1, len(self.mats)):
            if self.target.diffs[k].mul(self.mats[k]) != self.mats[k - 1].mul(self.source.diffs[k]):
                raise ValueError(f"does not commute with the boundary in degree {k}")


def chain_map_from_sset_map(f: SSetMap, ring: str, through: int | None = None) -> ChainMap:
    src = unnormalized_chains(f.source, ring, through)
    tgt = unnormalized_chains(f.target, ring, through)
    mats = []
    for k in range(len(src.dims)):
        if k < len(f.tables):
            entries = ((f.tables[k][s], s, 1) for s in range(src.dims[k]))
        else:
            entries = ()
        mats.append(SparseIntMatrix.from_entries(tgt.dims[k], src.dims[k], entries))
    return ChainMap(src, tgt, tuple(mats))


def identity_chain_map(C: ChainComplex) -> ChainMap:
    return ChainMap(C, C, tuple(SparseIntMatrix.identity(n) for n in C.dims))


def zero_chain_map(src: ChainComplex, tgt: ChainComplex) -> ChainMap:
    return ChainMap(src, tgt, tuple(SparseIntMatrix.zero(tgt.dims[k], src.dims[k])
                                    for k in range(len(src.dims))))


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    if g.source.dims != f.target.dims or g.source.ring != f.target.ring:
        raise ValueError("composition endpoints do not match")
    return ChainMap(f.source, g.target,
                    tuple(g.mats[k].mul(f.mats[k]) for k in range(len(f.mats))))


def truncate_complex(C: ChainComplex, top: int) -> ChainComplex:
    """Forget all degrees above ``top`` (padding with zeros if C ends sooner)."""
    if top < 0:
        raise ValueError("truncation degree must be nonnegative")
    dims = tuple(C.dim(k) for k in range(top + 1))
    boundaries = [C.boundary(k) for k in range(1, top + 1)]
    complete = C.complete and top >= C.top_degree
    return make_chain_complex(C.ring, dims, boundaries, complete)


def normalization_projection(enum: Enumeration, ring: str) -> ChainMap:
    """The chain projection from all listed simplices onto the nondegenerate
    generators (degenerate simplices map to zero)."""
    top = len(enum.sset.sizes) - 1
    src = unnormalized_chains(enum.sset, ring)
    tgt = normalized_chains(enum.space, ring, through=top)
    mats = []
    for k in range(top + 1):
        entries = [(ref.gen, s, 1) for s, ref in enumerate(enum.refs[k]) if not ref.word]
        mats.append(SparseIntMatrix.from_entries(tgt.dims[k], src.dims[k], entries))
    return ChainMap(src, tgt, tuple(mats))


def mapping_cone(f: ChainMap) -> ChainComplex:
    """cone_n = src_{n-1} + tgt_n with d(a, b) = (-da, f a + db)."""
    src, tgt = f.source, f.target
    if src.ring != tgt.ring:
        raise ValueError("mixed rings in mapping cone")
    S, T = src.top_degree, tgt.top_degree
    if src.complete and tgt.complete:
        top = max(S + 1, T)
        complete = True
    elif src.complete:
        top = T
        complete = False
    elif tgt.complete:
        top = S + 1
        complete = False
    else:
        top = min(S + 1, T)
        complete = False
    dims = tuple(src.dim(n - 1) + tgt.dim(n) for n in range(top + 1))
    boundaries = []
    for n in range(1, top + 1):
        blocks = {}
        if src.dim(n - 1):
            if src.dim(n - 2):
                blocks[(0, 0)] = src.boundary(n - 1).scale(-1)
            if n - 1 < len(f.mats) and tgt.dim(n - 1):
                blocks[(1, 0)] = f.mats[n - 1]
        if tgt.dim(n) and tgt.dim(n - 1):
            blocks[(1, 1)] = tgt.boundary(n)
        boundaries.append(SparseIntMatrix.block(
            blocks,
            [src.dim(n - 2), tgt.dim(n - 1)],
            [src.dim(n - 1), tgt.dim(n)]))
    return make_chain_complex(src.ring, dims, boundaries, complete)


@dataclass(frozen=True)
class HomologyIsoReport:
    ok: bool
    through: int
    cone_failures: tuple

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"


def is_homology_iso(f: ChainMap, d: int) -> HomologyIsoReport:
    """Mapping cone acyclic through degree d.

    That pins the induced map as an isomorphism on H_k for k < d and a
    surjection on H_d.
    """
    cone = mapping_cone(f)
    ok, failures = acyclic_through(cone, d)
    return HomologyIsoReport(ok, d, tuple(failures))


# -- homology with coordinates (over Z) -----------------------------------------


@dataclass(frozen=True)
class HomologyCoordinates:
    """Canonical coordinates on H_k over Z.

    Positions carry the invariant factor orders (0 means a free coordinate);
    trivial positions (order 1) are dropped.  ``project`` sends any cycle to
    its class in these coordinates, torsion entries reduced mod their order.
    """

    group: FPAbelianGroup
    degree: int
    cycle_matrix: SparseIntMatrix
    reduce_matrix: SparseIntMatrix
    orders: tuple[int, ...]
    positions: tuple[int, ...]

    def project(self, v: dict) -> tuple[int, ...]:
        x = solve(self.cycle_matrix, v)
        if x is None:
            raise ValueError("vector is not a cycle")
        y = self.reduce_matrix.apply(x)
        out = []
        for i in self.positions:
            d = self.orders[i]
            out.append(y.get(i, 0) % d if d else y.get(i, 0))
        return tuple(out)

    def representative(self, pos: int) -> dict:
        """A cycle whose class has coordinate 1 at ``positions[pos]``."""
        i = self.positions[pos]
        x = solve(self.reduce_matrix, {i: 1})
        if x is None:
            raise AssertionError("reduce matrix is unimodular, solve cannot fail")
        return self.cycle_matrix.apply(x)


def homology_coordinates(C: ChainComplex, k: int) -> HomologyCoordinates:
    if C.ring != "Z":
        raise ValueError("canonical coordinates are computed over Z")
    if k == C.top_degree and not C.complete:
        raise ValueError("homology at the top of a truncated complex is not trusted")
    kb = kernel_basis(C.boundary(k))
    z = len(kb)
    zmat = SparseIntMatrix(C.dim(k), z,
                           {r: {j: v[r] for j, v in enumerate(kb) if r in v}
                            for r in range(C.dim(k))})
    above = C.boundary(k + 1)
    w_cols = []
    for c in range(above.cols):
        col = above.column(c)
        x = solve(zmat, col)
        if x is None:
            raise AssertionError("boundary is not a cycle; complex invalid")
        w_cols.append(x)
    w = SparseIntMatrix(z, len(w_cols),
                        {r: {j: x[r] for j, x in enumerate(w_cols) if r in x}
                         for r in range(z)})
    s = smith_normal_form(w, transforms=True)
    orders = tuple(s.factors[i] if i < s.rank else 0 for i in range(z))
    positions = tuple(i for i in range(z) if orders[i] != 1)
    group = FPAbelianGroup(sum(1 for i in positions if orders[i] == 0),
                           tuple(orders[i] for i in positions if orders[i] > 1))
    u = s.U if s.U is not None else SparseIntMatrix.identity(z)
    return HomologyCoordinates(group, k, zmat, u, orders, positions)


def induced_map_on_homology(f: ChainMap, k: int,
                            src_coords: HomologyCoordinates | None = None,
                            tgt_coords: HomologyCoordinates | None = None):
    """Matrix of H_k(f) in canonical coordinates (columns over src positions)."""
    if src_coords is None:
        src_coords = homology_coordinates(f.source, k)
    if tgt_coords is None:
        tgt_coords = homology_coordinates(f.target, k)
    cols = []
    for pos in range(len(src_coords.positions)):
        v = src_coords.representative(pos)
        cols.append(tgt_coords.project(f.mats[k].apply(v)))
    return cols, src_coords, tgt_coords


# -- chain homotopies ------------------------------------------------------------


@dataclass(frozen=True)
class ChainHomotopy:
    """P with dP + Pd = to - from, each side given by explicit matrices."""

    source: ChainComplex
    target: ChainComplex
    maps_from: tuple[SparseIntMatrix, ...]
    maps_to: tuple[SparseIntMatrix, ...]
    P: tuple[SparseIntMatrix, ...]
    through: int


def check_chain_homotopy(h: ChainHomotopy) -> ValidationReport:
    problems = []
    src, tgt = h.source, h.target
    for k in range(h.through + 1):
        lhs = SparseIntMatrix.zero(tgt.dim(k), src.dim(k))
        if k < len(h.P):
            lhs = lhs.add(tgt.boundary(k + 1).mul(h.P[k]))
        if k >= 1 and k - 1 < len(h.P):
            lhs = lhs.add(h.P[k - 1].mul(src.boundary(k)))
        rhs = h.maps_to[k].sub(h.maps_from[k])
        if lhs != rhs:
            problems.append(f"dP + Pd != to - from in degree {k}")
    return ValidationReport(not problems, tuple(problems))


def _table_matrix(rows: int, cols: int, table) -> SparseIntMatrix:
    return SparseIntMatrix.from_entries(rows, cols, ((table[s], s, 1) for s in range(cols)))


def chain_homotopy_from_certificate(cert: HomotopyCertificate, ring: str) -> ChainHomotopy:
    """Turn a simplex-level certificate into signed chain-level matrices.

    The identities verified by check_certificate make the result satisfy
    dP + Pd = to - from on the nose; check_chain_homotopy confirms it
    matrix-exactly.
    """
    ring = parse_ring(ring)
    if cert.kind in ("extra-degeneracy-h", "extra-degeneracy-g"):
        X = cert.space
        L = len(cert.up)
        A = augmented_complex(X, cert.aug_size, cert.aug, ring, through=L)
        # degree k of A is level k-1 of X; P_0 is the section of the augmentation
        P = [_table_matrix(A.dims[1], A.dims[0], cert.h0)]
        for k in range(1, L + 1):
            m = _table_matrix(A.dims[k + 1], A.dims[k], cert.up[k - 1])
            if cert.kind == "extra-degeneracy-h" and k % 2:
                m = m.scale(-1)
            P.append(m)
        ident = tuple(SparseIntMatrix.identity(n) for n in A.dims)
        zero = tuple(SparseIntMatrix.zero(n, n) for n in A.dims)
        return ChainHomotopy(A, A, zero, ident, tuple(P), through=L)

    if cert.kind == "nullhomotopy":
        fmap = chain_map_from_sset_map(cert.f, ring)
        src, tgt = fmap.source, fmap.target
        L = len(cert.up)
        P = []
        for k in range(L):
            m = _table_matrix(tgt.dims[k + 1], src.dims[k], cert.up[k])
            if k % 2 == 0:
                m = m.scale(-1)  # (-1)^{k+1}
            P.append(m)
        const = [SparseIntMatrix.zero(tgt.dims[k], src.dims[k]) for k in range(len(src.dims))]
        const[0] = SparseIntMatrix.from_entries(
            tgt.dims[0], src.dims[0],
            ((cert.base_vertex, s, 1) for s in range(src.dims[0])))
        return ChainHomotopy(src, tgt, tuple(const), fmap.mats, tuple(P), through=L - 1)

    if cert.kind == "homotopy":
        fmap = chain_map_from_sset_map(cert.f, ring)
        gmap = chain_map_from_sset_map(cert.g, ring)
        src, tgt = fmap.source, fmap.target
        T = len(cert.tri) - 1
        P = []
        for k in range(T + 1):
            m = SparseIntMatrix.zero(tgt.dims[k + 1], src.dims[k])
            for i, tab in enumerate(cert.tri[k]):
                term = _table_matrix(tgt.dims[k + 1], src.dims[k], tab)
                m = m.add(term.scale(-1 if i % 2 == 0 else 1))  # (-1)^{i+1}
            P.append(m)
        return ChainHomotopy(src, tgt, fmap.mats, gmap.mats, tuple(P), through=T)

    raise ValueError(f"unknown certificate kind {cert.kind!r}")


# -- double complexes -------------------------------------------------------------


@dataclass(frozen=True)
class DoubleComplex:
    """Integer matrices dh[p][q]: (p,q) -> (p-1,q) and dv[p][q]: (p,q) -> (p,q-1).

    Both squares are stored unsigned and commuting; the total complex
    introduces the (-1)^p twist on the vertical direction.
    """

    ring: str
    sizes: tuple[tuple[int, ...], ...]
    dh: tuple[tuple[SparseIntMatrix, ...], ...]
    dv: tuple[tuple[SparseIntMatrix, ...], ...]
    complete_p: bool = False
    complete_q: bool = False

    def size(self, p: int, q: int) -> int:
        if 0 <= p < len(self.sizes) and 0 <= q < len(self.sizes[0]):
            return self.sizes[p][q]
        return 0

    @property
    def p_levels(self) -> int:
        return len(self.sizes)

    @property
    def q_levels(self) -> int:
        return len(self.sizes[0]) if self.sizes else 0


def bicomplex(B: BiSemiSimplicialSet, ring: str) -> DoubleComplex:
    """Signed row and column boundaries of a bi-semi-simplicial set."""
    ring = parse_ring(ring)
    P, Q = B.p_levels, B.q_levels
    dh = []
    dv = []
    for p in range(P):
        dh_row = []
        dv_row = []
        for q in range(Q):
            n = B.size(p, q)
            if p == 0:
                dh_row.append(SparseIntMatrix.zero(0, n))
            else:
                entries = []
                for i in range(p + 1):
                    sign = -1 if i % 2 else 1
                    tab = B.dh[p][q][i]
                    entries.extend((tab[s], s, sign) for s in range(n))
                dh_row.append(SparseIntMatrix.from_entries(B.size(p - 1, q), n, entries))
            if q == 0:
                dv_row.append(SparseIntMatrix.zero(0, n))
            else:
                entries = []
                for j in range(q + 1):
                    sign = -1 if j % 2 else 1
                    tab = B.dv[p][q][j]
                    entries.extend((tab[s], s, sign) for s in range(n))
                dv_row.append(SparseIntMatrix.from_entries(B.size(p, q - 1), n, entries))
        dh.append(tuple(dh_row))
        dv.append(tuple(dv_row))
    D = DoubleComplex(ring, B.sizes, tuple(dh), tuple(dv),
                      complete_p=B.trunc_p is None, complete_q=B.trunc_q is None)
    _assert_double(D)
    return D


def _assert_double(D: DoubleComplex):
    for p in range(D.p_levels):
        for q in range(D.q_levels):
            if p >= 2 and not D.dh[p - 1][q].mul(D.dh[p][q]).is_zero():
                raise ValueError(f"horizontal boundary squared nonzero at ({p},{q})")
            if q >= 2 and not D.dv[p][q - 1].mul(D.dv[p][q]).is_zero():
                raise ValueError(f"vertical boundary squared nonzero at ({p},{q})")
            if p >= 1 and q >= 1:
                if D.dv[p - 1][q].mul(D.dh[p][q]) != D.dh[p][q - 1].mul(D.dv[p][q]):
                    raise ValueError(f"dh and dv do not commute at ({p},{q})")


def tensor_double_complex(A: ChainComplex, Bc: ChainComplex) -> DoubleComplex:
    """C_{p,q} = A_p (x) B_q with dh = dA (x) id and dv = id (x) dB.

    Basis pairs are ordered a * dim(B_q) + b, matching exterior_product.
    """
    if A.ring != Bc.ring:
        raise ValueError("mixed rings in tensor product")
    P, Q = len(A.dims), len(Bc.dims)
    sizes = tuple(tuple(A.dims[p] * Bc.dims[q] for q in range(Q)) for p in range(P))
    dh = []
    dv = []
    for p in range(P):
        dh_row = []
        dv_row = []
        for q in range(Q):
            na, nb = A.dims[p], Bc.dims[q]
            if p == 0:
                dh_row.append(SparseIntMatrix.zero(0, na * nb))
            else:
                entries = []
                for a, a2, v in A.diffs[p].entries():
                    for b in range(nb):
                        entries.append((a * nb + b, a2 * nb + b, v))
                dh_row.append(SparseIntMatrix.from_entries(A.dims[p - 1] * nb, na * nb, entries))
            if q == 0:
                dv_row.append(SparseIntMatrix.zero(0, na * nb))
            else:
                nbm = Bc.dims[q - 1]
                entries = []
                for b, b2, v in Bc.diffs[q].entries():
                    for a in range(na):
                        entries.append((a * nbm + b, a * nb + b2, v))
                dv_row.append(SparseIntMatrix.from_entries(na * nbm, na * nb, entries))
        dh.append(tuple(dh_row))
        dv.append(tuple(dv_row))
    D = DoubleComplex(A.ring, sizes, tuple(dh), tuple(dv),
                      complete_p=A.complete, complete_q=Bc.complete)
    _assert_double(D)
    return D


@dataclass(frozen=True)
class TotalComplex:
    """Tot_n = direct sum of the antidiagonal, blocks in ascending p.

    layout[n] lists (p, q, offset, size) for the blocks of degree n.
    """

    complex: ChainComplex
    layout: tuple[tuple[tuple[int, int, int, int], ...], ...]

    def block_offset(self, n: int, p: int) -> tuple[int, int]:
        for (bp, bq, off, size) in self.layout[n]:
            if bp == p:
                return off, size
        return 0, 0


def total_complex(D: DoubleComplex) -> TotalComplex:
    P, Q = D.p_levels, D.q_levels
    top = P + Q - 2
    layout = []
    dims = []
    for n in range(top + 1):
        row = []
        off = 0
        for p in range(max(0, n - Q + 1), min(n, P - 1) + 1):
            q = n - p
            sz = D.size(p, q)
            row.append((p, q, off, sz))
            off += sz
        layout.append(tuple(row))
        dims.append(off)
    boundaries = []
    for n in range(1, top + 1):
        entries = []
        prev = {p: off for (p, q, off, sz) in layout[n - 1]}
        for (p, q, off, sz) in layout[n]:
            if sz == 0:
                continue
            if p >= 1 and p - 1 in prev:
                poff = prev[p - 1]
                for r, c, v in D.dh[p][q].entries():
                    entries.append((poff + r, off + c, v))
            if q >= 1 and p in prev:
                poff = prev[p]
                sign = -1 if p % 2 else 1
                for r, c, v in D.dv[p][q].entries():
                    entries.append((poff + r, off + c, sign * v))
        boundaries.append(SparseIntMatrix.from_entries(dims[n - 1], dims[n], entries))
    complete = D.complete_p and D.complete_q
    C = make_chain_complex(D.ring, dims, boundaries, complete)
    return TotalComplex(C, tuple(layout))


# -- Alexander-Whitney ------------------------------------------------------------


def front_face(X: SemiSimplicialSet, n: int, p: int, s: int) -> int:
    """Restrict to vertices 0..p by deleting the back vertices, top down."""
    cur = s
    lvl = n
    for v in range(n, p, -1):
        cur = X.face(lvl, v, cur)
        lvl -= 1
    return cur


def back_face(X: SemiSimplicialSet, n: int, q: int, s: int) -> int:
    """Restrict to the last q+1 vertices by deleting the front ones, top down."""
    cur = s
    lvl = n
    for v in range(n - q - 1, -1, -1):
        cur = X.face(lvl, v, cur)
        lvl -= 1
    return cur


def alexander_whitney(X: SemiSimplicialSet, Y: SemiSimplicialSet, ring: str,
                      through: int | None = None) -> tuple[ChainMap, TotalComplex]:
    """AW: C(diagonal of X x Y) -> Tot(C X (x) C Y), front face tensor back face."""
    from .sset import diagonal as _diag, exterior_product as _ext

    diag = _diag(_ext(X, Y))
    src = unnormalized_chains(diag, ring, through)
    tot = total_complex(tensor_double_complex(
        unnormalized_chains(X, ring, through), unnormalized_chains(Y, ring, through)))
    n_max = min(src.top_degree, tot.complex.top_degree)
    mats = []
    for n in range(len(src.dims)):
        entries = []
        if n <= n_max:
            ny = Y.sizes[n] if n < len(Y.sizes) else 0
            for s in range(src.dims[n]):
                x, y = s // ny, s % ny
                for (p, q, off, sz) in tot.layout[n]:
                    if sz == 0:
                        continue
                    fx = front_face(X, n, p, x)
                    by = back_face(Y, n, q, y)
                    entries.append((off + fx * Y.sizes[q] + by, s, 1))
        mats.append(SparseIntMatrix.from_entries(tot.complex.dims[n], src.dims[n], entries))
    return ChainMap(src, tot.complex, tuple(mats)), tot
