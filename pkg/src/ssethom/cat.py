"""Finite non-unital categories and monoids.

Nerves, unitalization, over/under and comma categories, the bi-semi-simplicial
comma resolution with its augmentations, two-sided bar constructions, and
Grothendieck groups.

Composition is stored diagrammatically: the table maps a composable pair
(f, g) with tgt(f) = src(g) to the composite "f then g" (written g . f).
"""

from __future__ import annotations

from dataclasses import dataclass

from .homalg import FPAbelianGroup
from .snf import SparseIntMatrix, smith_normal_form
from .sset import (
    BiSemiSimplicialSet,
    HomotopyCertificate,
    SemiSimplicialSet,
    SSetMap,
    ValidationReport,
    path_space,
    path_space_augmentation,
)


@dataclass(frozen=True)
class FinNonUnitalCategory:
    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    comp: dict[tuple[int, int], int]
    units: tuple[int, ...] | None = None

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def is_unital(self) -> bool:
        return self.units is not None

    def compose(self, f: int, g: int) -> int:
        """The composite of f then g."""
        try:
            return self.comp[(f, g)]
        except KeyError:
            raise ValueError(f"morphisms {f} then {g} are not composable") from None


def validate_category(C: FinNonUnitalCategory) -> ValidationReport:
    problems: list[str] = []
    m = C.n_morphisms
    if len(C.tgt) != m:
        return ValidationReport(False, ("src and tgt tables differ in length",))
    for f in range(m):
        if not (0 <= C.src[f] < C.n_objects and 0 <= C.tgt[f] < C.n_objects):
            problems.append(f"morphism {f} has an endpoint out of range")
    composable = {(f, g) for f in range(m) for g in range(m) if C.tgt[f] == C.src[g]}
    if set(C.comp) != composable:
        missing = composable - set(C.comp)
        extra = set(C.comp) - composable
        if missing:
            problems.append(f"composition missing on {sorted(missing)[:5]}")
        if extra:
            problems.append(f"composition defined on non-composable {sorted(extra)[:5]}")
    for (f, g), h in C.comp.items():
        if not (0 <= h < m):
            problems.append(f"composite of ({f},{g}) out of range")
        elif (f, g) in composable and (C.src[h] != C.src[f] or C.tgt[h] != C.tgt[g]):
            problems.append(f"composite of ({f},{g}) has wrong endpoints")
    if not problems:
        for f in range(m):
            for g in range(m):
                if C.tgt[f] != C.src[g]:
                    continue
                fg = C.comp[(f, g)]
                for h in range(m):
                    if C.tgt[g] != C.src[h]:
                        continue
                    if C.comp[(fg, h)] != C.comp[(f, C.comp[(g, h)])]:
                        problems.append(f"associativity fails on ({f},{g},{h})")
                        if len(problems) >= 20:
                            return ValidationReport(False, tuple(problems))
    if C.units is not None and not problems:
        if len(C.units) != C.n_objects:
            problems.append("one unit per object required")
        else:
            for c, u in enumerate(C.units):
                if not (0 <= u < m) or C.src[u] != c or C.tgt[u] != c:
                    problems.append(f"unit of object {c} is not an endomorphism of it")
            for f in range(m):
                if not problems:
                    if C.comp[(C.units[C.src[f]], f)] != f:
                        problems.append(f"unit law fails on the left of morphism {f}")
                    elif C.comp[(f, C.units[C.tgt[f]])] != f:
                        problems.append(f"unit law fails on the right of morphism {f}")
    return ValidationReport(not problems, tuple(problems[:20]))


def require_valid_category(C: FinNonUnitalCategory) -> FinNonUnitalCategory:
    rep = validate_category(C)
    if not rep.ok:
        raise ValueError(f"invalid category: {rep.problems[0]}")
    return C


@dataclass(frozen=True)
class FunctorData:
    source: FinNonUnitalCategory
    target: FinNonUnitalCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]


def validate_functor(F: FunctorData, unital: bool = False) -> ValidationReport:
    problems: list[str] = []
    C, D = F.source, F.target
    if len(F.obj_map) != C.n_objects or len(F.mor_map) != C.n_morphisms:
        return ValidationReport(False, ("object or morphism map has wrong length",))
    if any(not (0 <= x < D.n_objects) for x in F.obj_map):
        problems.append("object map out of range")
    if any(not (0 <= x < D.n_morphisms) for x in F.mor_map):
        problems.append("morphism map out of range")
    if not problems:
        for f in range(C.n_morphisms):
            if D.src[F.mor_map[f]] != F.obj_map[C.src[f]] or \
               D.tgt[F.mor_map[f]] != F.obj_map[C.tgt[f]]:
                problems.append(f"morphism {f}: endpoints not preserved")
        for (f, g), h in C.comp.items():
            if F.mor_map[h] != D.comp.get((F.mor_map[f], F.mor_map[g])):
                problems.append(f"composite of ({f},{g}) not preserved")
        if unital:
            if C.units is None or D.units is None:
                problems.append("unital functor between non-unital categories")
            else:
                for c in range(C.n_objects):
                    if F.mor_map[C.units[c]] != D.units[F.obj_map[c]]:
                        problems.append(f"unit of object {c} not preserved")
    return ValidationReport(not problems, tuple(problems[:20]))


def identity_functor(C: FinNonUnitalCategory) -> FunctorData:
    return FunctorData(C, C, tuple(range(C.n_objects)), tuple(range(C.n_morphisms)))


@dataclass(frozen=True)
class NatTransData:
    F: FunctorData
    G: FunctorData
    components: tuple[int, ...]


def validate_nat_trans(eta: NatTransData) -> ValidationReport:
    problems: list[str] = []
    F, G = eta.F, eta.G
    if F.source is not G.source or F.target is not G.target:
        return ValidationReport(False, ("the two functors do not share source and target",))
    C, D = F.source, F.target
    if len(eta.components) != C.n_objects:
        return ValidationReport(False, ("one component per source object required",))
    for c, u in enumerate(eta.components):
        if not (0 <= u < D.n_morphisms) or D.src[u] != F.obj_map[c] or D.tgt[u] != G.obj_map[c]:
            problems.append(f"component at object {c} does not run F(c) -> G(c)")
    if not problems:
        for f in range(C.n_morphisms):
            c, c2 = C.src[f], C.tgt[f]
            if D.comp[(F.mor_map[f], eta.components[c2])] != \
               D.comp[(eta.components[c], G.mor_map[f])]:
                problems.append(f"naturality square fails at morphism {f}")
    return ValidationReport(not problems, tuple(problems[:20]))


# -- monoids and actions ---------------------------------------------------------


@dataclass(frozen=True)
class FinMonoid:
    """Either a full multiplication table with a unit, or a commutative
    presentation by generators and relation pairs of exponent vectors."""

    table: tuple[tuple[int, ...], ...] | None = None
    unit: int | None = None
    gens: int | None = None
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()

    @property
    def is_table(self) -> bool:
        return self.table is not None

    @property
    def size(self) -> int:
        if self.table is None:
            raise ValueError("presentation-form monoid has no element list")
        return len(self.table)

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]


def validate_monoid(M: FinMonoid) -> ValidationReport:
    problems: list[str] = []
    if M.is_table:
        n = len(M.table)
        if any(len(row) != n for row in M.table):
            return ValidationReport(False, ("multiplication table is not square",))
        if any(not (0 <= v < n) for row in M.table for v in row):
            return ValidationReport(False, ("table entry out of range",))
        if M.unit is None or not (0 <= M.unit < n):
            return ValidationReport(False, ("table form needs a unit index",))
        e = M.unit
        for a in range(n):
            if M.table[e][a] != a or M.table[a][e] != a:
                problems.append(f"unit law fails at element {a}")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if M.table[M.table[a][b]][c] != M.table[a][M.table[b][c]]:
                        problems.append(f"associativity fails at ({a},{b},{c})")
                        if len(problems) >= 20:
                            return ValidationReport(False, tuple(problems))
    else:
        if M.gens is None or M.gens < 0:
            return ValidationReport(False, ("presentation form needs a generator count",))
        for i, (lhs, rhs) in enumerate(M.relations):
            if len(lhs) != M.gens or len(rhs) != M.gens:
                problems.append(f"relation {i} has wrong arity")
            elif any(v < 0 for v in lhs + rhs):
                problems.append(f"relation {i} has a negative exponent")
    return ValidationReport(not problems, tuple(problems[:20]))


def is_commutative_monoid(M: FinMonoid) -> bool:
    if not M.is_table:
        return True  # presentation form is commutative by definition
    n = M.size
    return all(M.table[a][b] == M.table[b][a] for a in range(n) for b in range(a))


def is_group(M: FinMonoid) -> bool:
    if not M.is_table:
        return False
    e = M.unit
    for a in range(M.size):
        if not any(M.table[a][b] == e and M.table[b][a] == e for b in range(M.size)):
            return False
    return True


def monoid_as_category(M: FinMonoid) -> FinNonUnitalCategory:
    """One object; composing f then g multiplies f<dot>g, so nerve chains read
    left to right like bar construction strings."""
    n = M.size
    comp = {(a, b): M.table[a][b] for a in range(n) for b in range(n)}
    return FinNonUnitalCategory(1, (0,) * n, (0,) * n, comp, units=(M.unit,))


def monoid_presentation(M: FinMonoid) -> FinMonoid:
    """Present a table-form monoid on one generator per element."""
    if not M.is_table:
        return M
    n = M.size

    def e(i):
        return tuple(1 if j == i else 0 for j in range(n))

    def plus(u, v):
        return tuple(a + b for a, b in zip(u, v))

    rels = []
    for a in range(n):
        for b in range(a + 1):
            rels.append((plus(e(a), e(b)), e(M.table[a][b])))
    return FinMonoid(gens=n, relations=tuple(rels))


@dataclass(frozen=True)
class MonoidAction:
    """Left actions store table[m][x] = m.x; right actions table[x][m] = x.m."""

    monoid: FinMonoid
    size: int
    table: tuple[tuple[int, ...], ...]
    side: str

    def act_left(self, m: int, x: int) -> int:
        return self.table[m][x]

    def act_right(self, x: int, m: int) -> int:
        return self.table[x][m]


def validate_action(A: MonoidAction) -> ValidationReport:
    problems: list[str] = []
    M = A.monoid
    if A.side not in ("left", "right"):
        return ValidationReport(False, (f"unknown side {A.side!r}",))
    n, k = M.size, A.size
    shape = (n, k) if A.side == "left" else (k, n)
    if len(A.table) != shape[0] or any(len(row) != shape[1] for row in A.table):
        return ValidationReport(False, ("action table has wrong shape",))
    if any(not (0 <= v < k) for row in A.table for v in row):
        return ValidationReport(False, ("action value out of range",))
    e = M.unit
    if A.side == "left":
        for x in range(k):
            if A.table[e][x] != x:
                problems.append(f"unit does not fix element {x}")
        for m in range(n):
            for m2 in range(n):
                for x in range(k):
                    if A.table[m][A.table[m2][x]] != A.table[M.mult(m, m2)][x]:
                        problems.append(f"associativity fails at ({m},{m2},{x})")
                        if len(problems) >= 20:
                            return ValidationReport(False, tuple(problems))
    else:
        for x in range(k):
            if A.table[x][e] != x:
                problems.append(f"unit does not fix element {x}")
        for m in range(n):
            for m2 in range(n):
                for x in range(k):
                    if A.table[A.table[x][m]][m2] != A.table[x][M.mult(m, m2)]:
                        problems.append(f"associativity fails at ({x},{m},{m2})")
                        if len(problems) >= 20:
                            return ValidationReport(False, tuple(problems))
    return ValidationReport(not problems, tuple(problems[:20]))


def trivial_action(M: FinMonoid, side: str) -> MonoidAction:
    if side == "left":
        return MonoidAction(M, 1, tuple((0,) for _ in range(M.size)), "left")
    return MonoidAction(M, 1, ((0,) * M.size,), "right")


def regular_action(M: FinMonoid, side: str) -> MonoidAction:
    n = M.size
    return MonoidAction(M, n, tuple(tuple(M.table[a][b] for b in range(n))
                                    for a in range(n)), side)


# -- nerves ------------------------------------------------------------------------


def _tuple_face(C: FinNonUnitalCategory, chain: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Face i of a composable tuple: drop an end or compose two neighbours."""
    n = len(chain)
    if i == 0:
        return chain[1:]
    if i == n:
        return chain[:-1]
    return chain[:i - 1] + (C.compose(chain[i - 1], chain[i]),) + chain[i + 1:]


def nerve_face(C: FinNonUnitalCategory, chain, i: int):
    """Face of a nerve chain; a 1-chain drops to the object at the far end."""
    if len(chain) == 1:
        return C.tgt[chain[0]] if i == 0 else C.src[chain[0]]
    return _tuple_face(C, chain, i)


@dataclass(frozen=True)
class NerveData:
    """The nerve together with its chain lists and index lookups.

    chains[0] lists object indices; chains[p] for p >= 1 lists composable
    p-tuples of morphisms lexicographically.
    """

    category: FinNonUnitalCategory
    sset: SemiSimplicialSet
    chains: tuple
    index: tuple


def nerve(C: FinNonUnitalCategory, N: int) -> NerveData:
    """Composable-chain nerve through level N; d_1 = src and d_0 = tgt on edges."""
    by_source = [[] for _ in range(C.n_objects)]
    for f in range(C.n_morphisms):
        by_source[C.src[f]].append(f)
    chains: list[tuple] = [tuple(range(C.n_objects))]
    for p in range(1, N + 1):
        if p == 1:
            chains.append(tuple((f,) for f in range(C.n_morphisms)))
        else:
            level = []
            for chain in chains[p - 1]:
                level.extend(chain + (g,) for g in by_source[C.tgt[chain[-1]]])
            chains.append(tuple(level))
    index: list[dict] = [{c: c for c in chains[0]}]
    index.extend({chain: s for s, chain in enumerate(chains[p])} for p in range(1, N + 1))
    sizes = tuple(len(chains[p]) for p in range(N + 1))
    faces: list[tuple] = [()]
    for p in range(1, N + 1):
        if p == 1:
            faces.append((C.tgt, C.src))
        else:
            faces.append(tuple(
                tuple(index[p - 1][_tuple_face(C, chain, i)] for chain in chains[p])
                for i in range(p + 1)))
    sset = SemiSimplicialSet(sizes, tuple(faces), truncated_at=N)
    return NerveData(C, sset, tuple(chains), tuple(index))


def nerve_map(F: FunctorData, N: int) -> SSetMap:
    nc = nerve(F.source, N)
    nd = nerve(F.target, N)
    tables = [tuple(F.obj_map)]
    for p in range(1, N + 1):
        tables.append(tuple(
            nd.index[p][tuple(F.mor_map[f] for f in chain)] for chain in nc.chains[p]))
    return SSetMap(nc.sset, nd.sset, tuple(tables))


def chain_object(C: FinNonUnitalCategory, chain, i: int) -> int:
    """The i-th object visited by a chain (an object index at level 0)."""
    if isinstance(chain, int):
        return chain
    return C.src[chain[0]] if i == 0 else C.tgt[chain[i - 1]]


def insert_unit_chain(C: FinNonUnitalCategory, chain, i: int) -> tuple[int, ...]:
    """Insert the unit of the i-th visited object, one level up."""
    u = C.units[chain_object(C, chain, i)]
    if isinstance(chain, int):
        return (u,)
    return chain[:i] + (u,) + chain[i:]


def nerve_path_contraction(C: FinNonUnitalCategory, N: int) -> HomotopyCertificate:
    """Contraction of the path space of a unital nerve onto the objects.

    The extra degeneracy appends the unit of the chain's final object, the
    augmentation is d_0 (the far-end object of the leading edge).
    """
    if not C.is_unital:
        raise ValueError("path-space contraction needs units")
    if N < 1:
        raise ValueError("need at least nerve level 1")
    nd = nerve(C, N)
    px = path_space(nd.sset)
    aug_size, aug = path_space_augmentation(nd.sset)
    h0 = tuple(nd.index[1][(C.units[c],)] for c in range(C.n_objects))
    up = []
    for p in range(N - 1):
        table = []
        for chain in nd.chains[p + 1]:
            longer = chain + (C.units[C.tgt[chain[-1]]],)
            table.append(nd.index[p + 2][longer])
        up.append(tuple(table))
    return HomotopyCertificate(
        kind="extra-degeneracy-h", space=px, aug_size=aug_size, aug=aug,
        h0=h0, up=tuple(up))


# -- unitalization and slice categories ------------------------------------------


def unitalize(C: FinNonUnitalCategory) -> FinNonUnitalCategory:
    """Adjoin one fresh unit per object (even if C already had units)."""
    m = C.n_morphisms
    src = C.src + tuple(range(C.n_objects))
    tgt = C.tgt + tuple(range(C.n_objects))
    comp = dict(C.comp)
    for f in range(m):
        comp[(m + C.src[f], f)] = f
        comp[(f, m + C.tgt[f])] = f
    for c in range(C.n_objects):
        comp[(m + c, m + c)] = m + c
    units = tuple(m + c for c in range(C.n_objects))
    return FinNonUnitalCategory(C.n_objects, src, tgt, comp, units=units)


def nerve_unitalize_inclusion(C: FinNonUnitalCategory, N: int) -> SSetMap:
    """The nerve of the inclusion C -> unitalize(C)."""
    plus = unitalize(C)
    F = FunctorData(C, plus, tuple(range(C.n_objects)), tuple(range(C.n_morphisms)))
    return nerve_map(F, N)


def over_category(C: FinNonUnitalCategory, c: int) -> FinNonUnitalCategory:
    """Objects are the arrows into c; a morphism from g to f is any h with
    f . h = g."""
    if not (0 <= c < C.n_objects):
        raise ValueError(f"object {c} out of range")
    objects = [f for f in range(C.n_morphisms) if C.tgt[f] == c]
    obj_index = {f: i for i, f in enumerate(objects)}
    mors = [(h, f) for h in range(C.n_morphisms) for f in objects
            if C.tgt[h] == C.src[f]]
    mor_index = {hf: i for i, hf in enumerate(mors)}
    src = tuple(obj_index[C.comp[(h, f)]] for h, f in mors)
    tgt = tuple(obj_index[f] for h, f in mors)
    comp = {}
    for i, (h2, g) in enumerate(mors):
        for j, (h1, f) in enumerate(mors):
            if g == C.comp[(h1, f)]:
                comp[(i, j)] = mor_index[(C.comp[(h2, h1)], f)]
    units = None
    if C.units is not None:
        units = tuple(mor_index[(C.units[C.src[f]], f)] for f in objects)
    return FinNonUnitalCategory(len(objects), src, tgt, comp, units=units)


def under_category(C: FinNonUnitalCategory, c: int) -> FinNonUnitalCategory:
    """Objects are the arrows out of c; a morphism from f to g is any h with
    h . f = g (the arrow-reversed dual of over_category)."""
    if not (0 <= c < C.n_objects):
        raise ValueError(f"object {c} out of range")
    objects = [f for f in range(C.n_morphisms) if C.src[f] == c]
    obj_index = {f: i for i, f in enumerate(objects)}
    mors = [(f, h) for f in objects for h in range(C.n_morphisms)
            if C.tgt[f] == C.src[h]]
    mor_index = {fh: i for i, fh in enumerate(mors)}
    src = tuple(obj_index[f] for f, h in mors)
    tgt = tuple(obj_index[C.comp[(f, h)]] for f, h in mors)
    comp = {}
    for i, (f, h1) in enumerate(mors):
        for j, (g, h2) in enumerate(mors):
            if g == C.comp[(f, h1)]:
                comp[(i, j)] = mor_index[(f, C.comp[(h1, h2)])]
    units = None
    if C.units is not None:
        units = tuple(mor_index[(f, C.units[C.tgt[f]])] for f in objects)
    return FinNonUnitalCategory(len(objects), src, tgt, comp, units=units)


def comma_over_object(F: FunctorData, d: int) -> FinNonUnitalCategory:
    """The category F/d: objects (a, u : F(a) -> d), morphisms h with
    u' . F(h) = u."""
    C, D = F.source, F.target
    if not (0 <= d < D.n_objects):
        raise ValueError(f"object {d} out of range")
    objects = [(a, u) for a in range(C.n_objects) for u in range(D.n_morphisms)
               if D.src[u] == F.obj_map[a] and D.tgt[u] == d]
    obj_index = {x: i for i, x in enumerate(objects)}
    mors = []
    for h in range(C.n_morphisms):
        for u2 in range(D.n_morphisms):
            if D.src[u2] == F.obj_map[C.tgt[h]] and D.tgt[u2] == d:
                mors.append((h, u2))
    mor_index = {x: i for i, x in enumerate(mors)}
    src = tuple(obj_index[(C.src[h], D.comp[(F.mor_map[h], u2)])] for h, u2 in mors)
    tgt = tuple(obj_index[(C.tgt[h], u2)] for h, u2 in mors)
    comp = {}
    for i, (h1, u1) in enumerate(mors):
        for j, (h2, u2) in enumerate(mors):
            if (C.tgt[h1], u1) == (C.src[h2], D.comp[(F.mor_map[h2], u2)]):
                comp[(i, j)] = mor_index[(C.comp[(h1, h2)], u2)]
    units = None
    if C.units is not None and D.units is not None and \
            all(F.mor_map[C.units[a]] == D.units[F.obj_map[a]] for a in range(C.n_objects)):
        units = tuple(mor_index[(C.units[a], u)] for a, u in objects)
    return FinNonUnitalCategory(len(objects), src, tgt, comp, units=units)


def comma_under_object(F: FunctorData, d: int) -> FinNonUnitalCategory:
    """The category d\\F: objects (a, u : d -> F(a)), morphisms h with
    F(h) . u = u'."""
    C, D = F.source, F.target
    if not (0 <= d < D.n_objects):
        raise ValueError(f"object {d} out of range")
    objects = [(a, u) for a in range(C.n_objects) for u in range(D.n_morphisms)
               if D.src[u] == d and D.tgt[u] == F.obj_map[a]]
    obj_index = {x: i for i, x in enumerate(objects)}
    mors = []
    for h in range(C.n_morphisms):
        for u in range(D.n_morphisms):
            if D.src[u] == d and D.tgt[u] == F.obj_map[C.src[h]]:
                mors.append((h, u))
    mor_index = {x: i for i, x in enumerate(mors)}
    src = tuple(obj_index[(C.src[h], u)] for h, u in mors)
    tgt = tuple(obj_index[(C.tgt[h], D.comp[(u, F.mor_map[h])])] for h, u in mors)
    comp = {}
    for i, (h1, u1) in enumerate(mors):
        for j, (h2, u2) in enumerate(mors):
            if (C.src[h2], u2) == (C.tgt[h1], D.comp[(u1, F.mor_map[h1])]):
                comp[(i, j)] = mor_index[(C.comp[(h1, h2)], u1)]
    units = None
    if C.units is not None and D.units is not None and \
            all(F.mor_map[C.units[a]] == D.units[F.obj_map[a]] for a in range(C.n_objects)):
        units = tuple(mor_index[(C.units[a], u)] for a, u in objects)
    return FinNonUnitalCategory(len(objects), src, tgt, comp, units=units)


# -- the comma resolution -----------------------------------------------------------


@dataclass(frozen=True)
class CommaResolution:
    """Levels (p, q) hold pairs (a-chain of the source nerve, connected
    (q+1)-chain of the target nerve).

    In the primal direction the target chain starts at F(end of a) and the
    gluing happens when dh at i = p composes F(last arrow) into the front;
    eps projects to the source p-chain and eta to the target q-chain (with the
    connecting arrow dropped).  With dual=True the target chain ends at
    F(start of a), dh at i = 0 glues, and the projections play xi and zeta.
    """

    functor: FunctorData
    dual: bool
    bisset: BiSemiSimplicialSet
    eps: tuple
    eta: tuple
    elements: tuple
    index: tuple
    c_nerve: NerveData
    d_nerve: NerveData


def comma_resolution(F: FunctorData, N: int, dual: bool = False) -> CommaResolution:
    C, D = F.source, F.target
    cn = nerve(C, N)
    dn = nerve(D, N + 1)
    by_start: dict[tuple[int, int], list] = {}
    by_end: dict[tuple[int, int], list] = {}
    for ln in range(1, N + 2):
        for chain in dn.chains[ln]:
            by_start.setdefault((ln, D.src[chain[0]]), []).append(chain)
            by_end.setdefault((ln, D.tgt[chain[-1]]), []).append(chain)

    def anchor(p, a):
        if dual:
            return F.obj_map[chain_object(C, a, 0)]
        return F.obj_map[chain_object(C, a, p)]

    elements: list[list[tuple]] = []
    index: list[list[dict]] = []
    for p in range(N + 1):
        row_e = []
        row_i = []
        for q in range(N + 1):
            elems = []
            for a_idx, a in enumerate(cn.chains[p]):
                pool = by_end if dual else by_start
                for u in pool.get((q + 1, anchor(p, a)), ()):
                    elems.append((a_idx, u))
            row_e.append(tuple(elems))
            row_i.append({x: s for s, x in enumerate(elems)})
        elements.append(row_e)
        index.append(row_i)

    sizes = tuple(tuple(len(elements[p][q]) for q in range(N + 1)) for p in range(N + 1))
    dh: list[list[tuple]] = []
    dv: list[list[tuple]] = []
    for p in range(N + 1):
        dh_row = []
        dv_row = []
        for q in range(N + 1):
            elems = elements[p][q]
            if p == 0:
                dh_row.append(())
            else:
                tables = []
                for i in range(p + 1):
                    tab = []
                    for a_idx, u in elems:
                        a = cn.chains[p][a_idx]
                        a2 = cn.index[p - 1][nerve_face(C, a, i)]
                        u2 = u
                        if not dual and i == p:
                            u2 = (D.comp[(F.mor_map[a[-1]], u[0])],) + u[1:]
                        elif dual and i == 0:
                            u2 = u[:-1] + (D.comp[(u[-1], F.mor_map[a[0]])],)
                        tab.append(index[p - 1][q][(a2, u2)])
                    tables.append(tuple(tab))
                dh_row.append(tuple(tables))
            if q == 0:
                dv_row.append(())
            else:
                tables = []
                for j in range(q + 1):
                    k = j if dual else j + 1
                    tab = [index[p][q - 1][(a_idx, _tuple_face(D, u, k))]
                           for a_idx, u in elems]
                    tables.append(tuple(tab))
                dv_row.append(tuple(tables))
        dh.append(dh_row)
        dv.append(dv_row)

    bisset = BiSemiSimplicialSet(sizes, tuple(tuple(r) for r in dh),
                                 tuple(tuple(r) for r in dv),
                                 trunc_p=N, trunc_q=N)
    eps = tuple(tuple(tuple(a_idx for a_idx, u in elements[p][q])
                      for q in range(N + 1)) for p in range(N + 1))
    eta = []
    for p in range(N + 1):
        row = []
        for q in range(N + 1):
            tab = []
            for a_idx, u in elements[p][q]:
                core = u[:-1] if dual else u[1:]
                if q == 0:
                    tab.append(D.src[u[0]] if dual else D.tgt[u[0]])
                else:
                    tab.append(dn.index[q][core])
            row.append(tuple(tab))
        eta.append(tuple(row))
    return CommaResolution(F, dual, bisset, eps, tuple(eta),
                           tuple(tuple(r) for r in elements),
                           tuple(tuple(r) for r in index), cn, dn)


def resolution_row(res: CommaResolution, p: int) -> SemiSimplicialSet:
    """The fixed-p row as a semi-simplicial set in the q direction."""
    B = res.bisset
    sizes = tuple(B.sizes[p])
    faces: list[tuple] = [()]
    for q in range(1, B.q_levels):
        faces.append(B.dv[p][q])
    return SemiSimplicialSet(sizes, tuple(faces), truncated_at=B.q_levels - 1)


def row_contraction(res: CommaResolution, p: int) -> HomotopyCertificate:
    """Extra degeneracy of a row over the source nerve, inserting the unit of
    the anchor object (needs a unital target category)."""
    F = res.functor
    C, D = F.source, F.target
    if D.units is None:
        raise ValueError("row contraction needs a unital target")
    N = res.bisset.q_levels - 1
    row = resolution_row(res, p)

    def unit_of(a_idx):
        a = res.c_nerve.chains[p][a_idx]
        i = 0 if res.dual else p
        return D.units[F.obj_map[chain_object(C, a, i)]]

    h0 = tuple(res.index[p][0][(a_idx, (unit_of(a_idx),))]
               for a_idx in range(len(res.c_nerve.chains[p])))
    up = []
    for q in range(N):
        tab = []
        for a_idx, u in res.elements[p][q]:
            u2 = u + (unit_of(a_idx),) if res.dual else (unit_of(a_idx),) + u
            tab.append(res.index[p][q + 1][(a_idx, u2)])
        up.append(tuple(tab))
    kind = "extra-degeneracy-h" if res.dual else "extra-degeneracy-g"
    return HomotopyCertificate(
        kind=kind, space=row, aug_size=len(res.c_nerve.chains[p]),
        aug=res.eps[p][0], h0=h0, up=tuple(up))


def eta_fiber(res: CommaResolution, q: int, b: int) -> SemiSimplicialSet:
    """The p-direction fiber of eta over the q-chain with index b."""
    B = res.bisset
    P = B.p_levels
    members = [[s for s in range(B.sizes[p][q]) if res.eta[p][q][s] == b]
               for p in range(P)]
    pos = [{s: i for i, s in enumerate(members[p])} for p in range(P)]
    sizes = tuple(len(members[p]) for p in range(P))
    faces: list[tuple] = [()]
    for p in range(1, P):
        faces.append(tuple(
            tuple(pos[p - 1][B.dh[p][q][i][s]] for s in members[p])
            for i in range(p + 1)))
    return SemiSimplicialSet(sizes, tuple(faces), truncated_at=P - 1)


def nat_trans_homotopy(eta: NatTransData, N: int) -> HomotopyCertificate:
    """The prism sections carrying nerve(G) to nerve(F) along the components."""
    rep = validate_nat_trans(eta)
    if not rep.ok:
        raise ValueError(f"invalid natural transformation: {rep.problems[0]}")
    F, G = eta.F, eta.G
    C, D = F.source, F.target
    fmap = nerve_map(G, N)
    gmap = nerve_map(F, N)
    dn = nerve(D, N)
    cn = nerve(C, N)
    tri = []
    for p in range(N):
        level = []
        for i in range(p + 1):
            tab = []
            for chain in cn.chains[p]:
                c_i = chain_object(C, chain, i)
                if p == 0:
                    prism = (eta.components[c_i],)
                else:
                    prism = tuple(F.mor_map[f] for f in chain[:i]) + \
                        (eta.components[c_i],) + \
                        tuple(G.mor_map[f] for f in chain[i:])
                tab.append(dn.index[p + 1][prism])
            level.append(tuple(tab))
        tri.append(tuple(level))
    return HomotopyCertificate(kind="homotopy", f=fmap, g=gmap, tri=tuple(tri))


# -- bar constructions ---------------------------------------------------------------


def bar_construction(Y: MonoidAction, M: FinMonoid, X: MonoidAction, N: int) -> SemiSimplicialSet:
    """Two-sided bar construction: level p is Y x M^p x X, lexicographically.

    d_0 absorbs m_1 into y, d_p absorbs m_p into x, inner faces multiply
    adjacent letters.
    """
    if Y.monoid is not M or X.monoid is not M:
        raise ValueError("actions must be over the given monoid")
    if Y.side != "right" or X.side != "left":
        raise ValueError("expected a right action and a left action")
    n = M.size
    ny, nx = Y.size, X.size

    def decode(p, s):
        x = s % nx
        s //= nx
        ms = []
        for _ in range(p):
            ms.append(s % n)
            s //= n
        ms.reverse()
        return s, tuple(ms), x

    def encode(y, ms, x):
        s = y
        for m in ms:
            s = s * n + m
        return s * nx + x

    sizes = tuple(ny * n ** p * nx for p in range(N + 1))
    faces: list[tuple] = [()]
    for p in range(1, N + 1):
        tables = []
        for i in range(p + 1):
            tab = []
            for s in range(sizes[p]):
                y, ms, x = decode(p, s)
                if i == 0:
                    tab.append(encode(Y.act_right(y, ms[0]), ms[1:], x))
                elif i == p:
                    tab.append(encode(y, ms[:-1], X.act_left(ms[-1], x)))
                else:
                    composed = ms[:i - 1] + (M.mult(ms[i - 1], ms[i]),) + ms[i + 1:]
                    tab.append(encode(y, composed, x))
            tables.append(tuple(tab))
        faces.append(tuple(tables))
    return SemiSimplicialSet(sizes, tuple(faces), truncated_at=N)


def bar_extra_degeneracy(M: FinMonoid, N: int) -> HomotopyCertificate:
    """Contraction of B(*, M, M): shift the X slot into the letters and
    restart at the unit."""
    Y = trivial_action(M, "right")
    X = regular_action(M, "left")
    B = bar_construction(Y, M, X, N)
    n = M.size

    def decode(p, s):
        x = s % n
        s //= n
        ms = []
        for _ in range(p):
            ms.append(s % n)
            s //= n
        ms.reverse()
        return tuple(ms), x

    def encode(ms, x):
        s = 0
        for m in ms:
            s = s * n + m
        return s * n + x

    up = []
    for p in range(N):
        tab = []
        for s in range(B.sizes[p]):
            ms, x = decode(p, s)
            tab.append(encode(ms + (x,), M.unit))
        up.append(tuple(tab))
    return HomotopyCertificate(
        kind="extra-degeneracy-h", space=B, aug_size=1,
        aug=(0,) * B.sizes[0], h0=(M.unit,), up=tuple(up))


# -- Grothendieck groups ---------------------------------------------------------------


def grothendieck_group(M: FinMonoid) -> FPAbelianGroup:
    """Group completion of a commutative monoid, as the cokernel of the
    relation-difference matrix."""
    if M.is_table:
        if not is_commutative_monoid(M):
            raise ValueError("group completion needs a commutative monoid")
        M = monoid_presentation(M)
    k = M.gens
    entries = []
    for j, (lhs, rhs) in enumerate(M.relations):
        for i in range(k):
            entries.append((i, j, lhs[i] - rhs[i]))
    mat = SparseIntMatrix.from_entries(k, len(M.relations), entries)
    s = smith_normal_form(mat)
    torsion = tuple(d for d in s.factors if d > 1)
    return FPAbelianGroup(k - s.rank, torsion)
