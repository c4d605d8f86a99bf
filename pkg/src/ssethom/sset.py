"""Finite semi-simplicial and simplicial sets.

Semi-simplicial sets are stored as plain level sizes plus face tables:
``faces[p][i][s]`` is the i-th face of simplex ``s`` at level ``p`` (p >= 1,
0 <= i <= p).  Simplicial sets are stored by a generator presentation: only
the nondegenerate simplices are listed, and every simplex is named by a
canonical pair (degeneracy word, generator).  A degeneracy word is a strictly
decreasing tuple (j_1 > ... > j_k) standing for s_{j_1} ... s_{j_k}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


# ---------------------------------------------------------------------------
# semi-simplicial sets


@dataclass(frozen=True)
class SemiSimplicialSet:
    """Levels 0..L-1 with face tables.

    ``truncated_at = N`` means levels above N were deliberately not computed
    (the object may well have nonempty levels there).  ``truncated_at = None``
    means the listed levels are all there is.
    """

    sizes: tuple[int, ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    truncated_at: int | None = None

    def face(self, p: int, i: int, s: int) -> int:
        return self.faces[p][i][s]

    @property
    def top_dim(self) -> int | None:
        """Largest nonempty level, or None when truncation hides it.

        A size-0 level forces every higher level to be empty (faces must land
        somewhere), so a listed zero makes the complex complete regardless of
        the truncation flag.  An everywhere-empty complex reports -1.
        """
        if self.truncated_at is None or any(s == 0 for s in self.sizes):
            nonempty = [p for p, s in enumerate(self.sizes) if s]
            return nonempty[-1] if nonempty else -1
        return None

    @property
    def is_complete(self) -> bool:
        return self.top_dim is not None

    def level_count(self) -> int:
        return len(self.sizes)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def first(self) -> str:
        return self.problems[0] if self.problems else ""


def validate_sset(X: SemiSimplicialSet) -> ValidationReport:
    problems = []
    L = len(X.sizes)
    if len(X.faces) != L:
        problems.append(f"faces has {len(X.faces)} levels, sizes has {L}")
        return ValidationReport(False, tuple(problems))
    if X.truncated_at is not None and X.truncated_at != L - 1:
        problems.append(f"truncated_at={X.truncated_at} but levels run 0..{L - 1}")
    if L and len(X.faces[0]) != 0:
        problems.append("level 0 must have an empty face table")
    for p in range(1, L):
        if len(X.faces[p]) != p + 1:
            problems.append(f"level {p}: expected {p + 1} face maps, got {len(X.faces[p])}")
            continue
        for i in range(p + 1):
            tab = X.faces[p][i]
            if len(tab) != X.sizes[p]:
                problems.append(f"level {p} face {i}: table length {len(tab)} != {X.sizes[p]}")
                continue
            for s, v in enumerate(tab):
                if not (0 <= v < X.sizes[p - 1]):
                    problems.append(f"level {p} face {i} simplex {s}: target {v} out of range")
                    break
    if problems:
        return ValidationReport(False, tuple(problems))
    for p in range(2, L):
        for j in range(1, p + 1):
            for i in range(j):
                for s in range(X.sizes[p]):
                    left = X.face(p - 1, i, X.face(p, j, s))
                    right = X.face(p - 1, j - 1, X.face(p, i, s))
                    if left != right:
                        problems.append(
                            f"face identity fails at level {p}, simplex {s}: "
                            f"d_{i} d_{j} = {left} but d_{j - 1} d_{i} = {right}")
                        if len(problems) > 20:
                            return ValidationReport(False, tuple(problems))
    return ValidationReport(not problems, tuple(problems))


def require_valid(X: SemiSimplicialSet) -> SemiSimplicialSet:
    rep = validate_sset(X)
    if not rep.ok:
        raise ValueError(f"invalid semi-simplicial set: {rep.first()}")
    return X


@dataclass(frozen=True)
class SSetMap:
    """Levelwise map of semi-simplicial sets; tables[p][s] is the image index."""

    source: SemiSimplicialSet
    target: SemiSimplicialSet
    tables: tuple[tuple[int, ...], ...]

    def apply(self, p: int, s: int) -> int:
        return self.tables[p][s]


def check_sset_map(f: SSetMap) -> ValidationReport:
    problems = []
    src, tgt = f.source, f.target
    if len(f.tables) != len(src.sizes):
        return ValidationReport(False, (f"map covers {len(f.tables)} levels, source has {len(src.sizes)}",))
    if len(tgt.sizes) < len(src.sizes):
        return ValidationReport(False, ("target has fewer listed levels than source",))
    for p, tab in enumerate(f.tables):
        if len(tab) != src.sizes[p]:
            problems.append(f"level {p}: table length {len(tab)} != {src.sizes[p]}")
            continue
        for s, v in enumerate(tab):
            if not (0 <= v < tgt.sizes[p]):
                problems.append(f"level {p} simplex {s}: image {v} out of range")
                break
    if problems:
        return ValidationReport(False, tuple(problems))
    for p in range(1, len(src.sizes)):
        for i in range(p + 1):
            for s in range(src.sizes[p]):
                if tgt.face(p, i, f.tables[p][s]) != f.tables[p - 1][src.face(p, i, s)]:
                    problems.append(f"does not commute with d_{i} at level {p}, simplex {s}")
                    if len(problems) > 20:
                        return ValidationReport(False, tuple(problems))
    return ValidationReport(not problems, tuple(problems))


def identity_map(X: SemiSimplicialSet) -> SSetMap:
    return SSetMap(X, X, tuple(tuple(range(n)) for n in X.sizes))


def compose_maps(g: SSetMap, f: SSetMap) -> SSetMap:
    """g after f."""
    if f.target is not g.source and f.target != g.source:
        raise ValueError("composition mismatch")
    tables = tuple(tuple(g.tables[p][v] for v in f.tables[p]) for p in range(len(f.tables)))
    return SSetMap(f.source, g.target, tables)


# -- standard complexes ------------------------------------------------------


def _vertex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All (k+1)-element subsets of {0..n}, lex ordered."""
    return list(itertools.combinations(range(n + 1), k + 1))


def standard_semi_simplex(n: int) -> SemiSimplicialSet:
    """The semi-simplicial n-simplex: level q lists the (q+1)-subsets of {0..n}."""
    sizes = []
    faces = []
    prev_index: dict[tuple[int, ...], int] = {}
    for q in range(n + 1):
        subs = _vertex_subsets(n, q)
        sizes.append(len(subs))
        if q == 0:
            faces.append(())
        else:
            level_faces = []
            for i in range(q + 1):
                level_faces.append(tuple(prev_index[t[:i] + t[i + 1:]] for t in subs))
            faces.append(tuple(level_faces))
        prev_index = {t: s for s, t in enumerate(subs)}
    return SemiSimplicialSet(tuple(sizes), tuple(faces))


def boundary_semi_simplex(n: int) -> SemiSimplicialSet:
    """The boundary of the semi-simplicial n-simplex (drop the top cell)."""
    full = standard_semi_simplex(n)
    return SemiSimplicialSet(full.sizes[:n], full.faces[:n])


def constant_sset(size: int, n: int) -> SemiSimplicialSet:
    """``size`` simplices at every level through n, all faces the identity."""
    ident = tuple(range(size))
    faces = [()] + [tuple(ident for _ in range(p + 1)) for p in range(1, n + 1)]
    return SemiSimplicialSet((size,) * (n + 1), tuple(faces),
                             truncated_at=n if size else None)


def skeleton(X: SemiSimplicialSet, n: int) -> SemiSimplicialSet:
    """Everything of dimension <= n.  Always a complete complex."""
    if X.truncated_at is not None and n > X.truncated_at:
        raise ValueError(f"cannot take the {n}-skeleton of a complex truncated at {X.truncated_at}")
    m = min(n + 1, len(X.sizes))
    return SemiSimplicialSet(X.sizes[:m], X.faces[:m])


def skeleton_inclusion(X: SemiSimplicialSet, n: int) -> SSetMap:
    sk = skeleton(X, n)
    return SSetMap(sk, X, tuple(tuple(range(sz)) for sz in sk.sizes))


def euler_characteristic(X: SemiSimplicialSet) -> int:
    top = X.top_dim
    if top is None:
        raise ValueError("Euler characteristic of a truncated complex is not determined")
    return sum((-1) ** p * X.sizes[p] for p in range(top + 1))


# -- products ----------------------------------------------------------------


@dataclass(frozen=True)
class BiSemiSimplicialSet:
    """Rectangular grid of levels with commuting horizontal/vertical faces.

    ``sizes[p][q]`` is the number of (p, q)-bisimplices; ``dh[p][q][i][s]``
    (0 <= i <= p, p >= 1) lands in (p-1, q) and ``dv[p][q][j][s]``
    (0 <= j <= q, q >= 1) lands in (p, q-1).
    """

    sizes: tuple[tuple[int, ...], ...]
    dh: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]
    dv: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]
    trunc_p: int | None = None
    trunc_q: int | None = None

    def size(self, p: int, q: int) -> int:
        return self.sizes[p][q]

    def hface(self, p: int, q: int, i: int, s: int) -> int:
        return self.dh[p][q][i][s]

    def vface(self, p: int, q: int, j: int, s: int) -> int:
        return self.dv[p][q][j][s]

    @property
    def p_levels(self) -> int:
        return len(self.sizes)

    @property
    def q_levels(self) -> int:
        return len(self.sizes[0]) if self.sizes else 0


def validate_bisset(B: BiSemiSimplicialSet) -> ValidationReport:
    problems = []
    P, Q = B.p_levels, B.q_levels
    for p in range(P):
        if len(B.sizes[p]) != Q:
            return ValidationReport(False, (f"ragged size grid at row {p}",))
    # horizontal identity in each fixed q, vertical in each fixed p
    for q in range(Q):
        for p in range(2, P):
            for j in range(1, p + 1):
                for i in range(j):
                    for s in range(B.size(p, q)):
                        if B.hface(p - 1, q, i, B.hface(p, q, j, s)) != \
                           B.hface(p - 1, q, j - 1, B.hface(p, q, i, s)):
                            problems.append(f"horizontal identity fails at ({p},{q}) simplex {s}")
    for p in range(P):
        for q in range(2, Q):
            for j in range(1, q + 1):
                for i in range(j):
                    for s in range(B.size(p, q)):
                        if B.vface(p, q - 1, i, B.vface(p, q, j, s)) != \
                           B.vface(p, q - 1, j - 1, B.vface(p, q, i, s)):
                            problems.append(f"vertical identity fails at ({p},{q}) simplex {s}")
    for p in range(1, P):
        for q in range(1, Q):
            for i in range(p + 1):
                for j in range(q + 1):
                    for s in range(B.size(p, q)):
                        if B.vface(p - 1, q, j, B.hface(p, q, i, s)) != \
                           B.hface(p, q - 1, i, B.vface(p, q, j, s)):
                            problems.append(f"dh/dv do not commute at ({p},{q}) simplex {s}")
    problems = problems[:20]
    return ValidationReport(not problems, tuple(problems))


def exterior_product(X: SemiSimplicialSet, Y: SemiSimplicialSet) -> BiSemiSimplicialSet:
    """The bi-semi-simplicial set with (p, q) level X_p x Y_q.

    The pair (x, y) gets index x * |Y_q| + y.
    """
    P, Q = len(X.sizes), len(Y.sizes)
    sizes = tuple(tuple(X.sizes[p] * Y.sizes[q] for q in range(Q)) for p in range(P))
    dh = []
    dv = []
    for p in range(P):
        dh_row = []
        dv_row = []
        for q in range(Q):
            nx, ny = X.sizes[p], Y.sizes[q]
            if p == 0:
                dh_row.append(())
            else:
                dh_row.append(tuple(
                    tuple(X.face(p, i, s // ny) * ny + (s % ny) for s in range(nx * ny))
                    for i in range(p + 1)))
            if q == 0:
                dv_row.append(())
            else:
                nym = Y.sizes[q - 1]
                dv_row.append(tuple(
                    tuple((s // ny) * nym + Y.face(q, j, s % ny) for s in range(nx * ny))
                    for j in range(q + 1)))
        dh.append(tuple(dh_row))
        dv.append(tuple(dv_row))
    return BiSemiSimplicialSet(sizes, tuple(dh), tuple(dv),
                               trunc_p=X.truncated_at, trunc_q=Y.truncated_at)


def diagonal(B: BiSemiSimplicialSet) -> SemiSimplicialSet:
    """Restrict a bi-semi-simplicial set to its diagonal levels.

    d_i on the diagonal is dh_i followed by dv_i (the order does not matter
    since the two directions commute).
    """
    L = min(B.p_levels, B.q_levels)
    sizes = tuple(B.size(p, p) for p in range(L))
    faces = [()]
    for p in range(1, L):
        faces.append(tuple(
            tuple(B.vface(p - 1, p, i, B.hface(p, p, i, s)) for s in range(B.size(p, p)))
            for i in range(p + 1)))
    trunc = None
    if B.trunc_p is not None or B.trunc_q is not None:
        trunc = L - 1
    return SemiSimplicialSet(sizes, tuple(faces), truncated_at=trunc)


# -- path spaces and Segal maps ----------------------------------------------


def path_space(X: SemiSimplicialSet) -> SemiSimplicialSet:
    """Shift down: PX_p = X_{p+1} with faces d_0..d_p (d_{p+1} is dropped)."""
    if len(X.sizes) < 2:
        raise ValueError("path space needs levels through 1")
    if X.truncated_at is not None and X.truncated_at <= 1:
        raise ValueError("path space of a complex truncated at <= 1 retains no structure")
    sizes = X.sizes[1:]
    faces = [()]
    for p in range(1, len(sizes)):
        faces.append(tuple(X.faces[p + 1][i] for i in range(p + 1)))
    trunc = None if X.truncated_at is None else X.truncated_at - 1
    return SemiSimplicialSet(sizes, tuple(faces), truncated_at=trunc)


def path_space_augmentation(X: SemiSimplicialSet) -> tuple[int, tuple[int, ...]]:
    """The augmentation PX_0 = X_1 -> X_0 given by d_0 (the dropped face end)."""
    return X.sizes[0], X.faces[1][0]


def segal_map(X: SemiSimplicialSet, p: int) -> list[tuple[int, ...]]:
    """kappa_p: X_p -> X_1^p by restricting to the edges {j-1, j}.

    Edge j is extracted by deleting the other vertices in decreasing order.
    """
    if p < 1 or p >= len(X.sizes):
        raise ValueError("segal map needs 1 <= p <= top listed level")
    out = []
    for s in range(X.sizes[p]):
        comps = []
        for j in range(1, p + 1):
            cur = s
            lvl = p
            for v in range(p, -1, -1):
                if v != j - 1 and v != j:
                    cur = X.face(lvl, v, cur)
                    lvl -= 1
            comps.append(cur)
        out.append(tuple(comps))
    return out


@dataclass(frozen=True)
class SegalReport:
    level: int
    source_size: int
    product_size: int
    composable_size: int
    injective: bool

    @property
    def bijective_onto_product(self) -> bool:
        return self.injective and self.source_size == self.product_size

    @property
    def bijective_onto_composables(self) -> bool:
        return self.injective and self.source_size == self.composable_size


def check_segal(X: SemiSimplicialSet, p: int) -> SegalReport:
    """How far kappa_p is from a bijection onto edge tuples.

    The image always consists of composable tuples (d_0 e_j = d_1 e_{j+1}:
    the far end of each edge is the near end of the next), so the report
    counts those too.  For one-vertex complexes the two targets agree.
    """
    kappa = segal_map(X, p)
    if p == 1:
        composable = X.sizes[1]
    else:
        d0, d1 = X.faces[1][0], X.faces[1][1]
        composable = 0
        for tup in itertools.product(range(X.sizes[1]), repeat=p):
            if all(d0[tup[j]] == d1[tup[j + 1]] for j in range(p - 1)):
                composable += 1
    return SegalReport(
        level=p,
        source_size=X.sizes[p],
        product_size=X.sizes[1] ** p,
        composable_size=composable,
        injective=len(set(kappa)) == len(kappa),
    )


# ---------------------------------------------------------------------------
# degeneracy words


def insert_letter(a: int, word: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical word for s_a composed in front of s_word.

    Uses s_a s_b = s_{b+1} s_a for a <= b, pushing a inward until it is the
    largest remaining letter.
    """
    if not word or a > word[0]:
        return (a,) + word
    return (word[0] + 1,) + insert_letter(a, word[1:])


def word_to_surjection(word: tuple[int, ...], deg: int) -> tuple[int, ...]:
    """Value table of the monotone surjection [deg + len(word)] ->> [deg]."""
    p = deg + len(word)
    vals = list(range(p + 1))
    for letter in word:
        vals = [v if v <= letter else v - 1 for v in vals]
    return tuple(vals)


def surjection_to_word(vals: Iterable[int]) -> tuple[int, ...]:
    """Canonical word of a monotone surjection: its flat steps, descending."""
    vals = tuple(vals)
    return tuple(j for j in range(len(vals) - 2, -1, -1) if vals[j] == vals[j + 1])


def factor_monotone(vals: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a monotone map into (degeneracy word, image vertices).

    vals = inj . surj where inj is the sorted image and surj collapses the
    flat steps recorded by the word.
    """
    vals = tuple(vals)
    image = sorted(set(vals))
    rank = {v: k for k, v in enumerate(image)}
    surj = tuple(rank[v] for v in vals)
    return surjection_to_word(surj), tuple(image)


def is_canonical_word(word: tuple[int, ...], deg: int) -> bool:
    if list(word) != sorted(word, reverse=True):
        return False
    k = len(word)
    return all(0 <= word[m] <= deg + (k - 1 - m) for m in range(k))


class SimplexRef(NamedTuple):
    """A simplex of a simplicial set: s_word applied to generator gen of degree deg."""

    word: tuple[int, ...]
    deg: int
    gen: int

    @property
    def total(self) -> int:
        return self.deg + len(self.word)


@dataclass(frozen=True)
class SimplicialSet:
    """Generator presentation: gen_faces[q][i][g] is d_i of generator g (q >= 1)."""

    gen_sizes: tuple[int, ...]
    gen_faces: tuple[tuple[tuple[SimplexRef, ...], ...], ...]
    truncated_at: int | None = None

    def gen_face(self, q: int, i: int, g: int) -> SimplexRef:
        return self.gen_faces[q][i][g]

    def generator(self, q: int, g: int) -> SimplexRef:
        return SimplexRef((), q, g)

    @property
    def top_generator_degree(self) -> int:
        nonempty = [q for q, s in enumerate(self.gen_sizes) if s]
        return nonempty[-1] if nonempty else -1


def normalize_face(Y: SimplicialSet, i: int, ref: SimplexRef) -> SimplexRef:
    """d_i applied to a canonical simplex, in canonical form.

    Pushes the face through the degeneracy word with the mixed identities:
    d_i s_j is s_{j-1} d_i for i < j, the identity for i in {j, j+1}, and
    s_j d_{i-1} for i > j + 1.  Prepending the adjusted letter keeps the word
    strictly decreasing, so no renormalization pass is needed.
    """
    word, deg, gen = ref
    if not word:
        if deg == 0:
            raise ValueError("a 0-simplex has no faces")
        return Y.gen_faces[deg][i][gen]
    j = word[0]
    rest = SimplexRef(word[1:], deg, gen)
    if i == j or i == j + 1:
        return rest
    if i < j:
        inner = normalize_face(Y, i, rest)
        return SimplexRef((j - 1,) + inner.word, inner.deg, inner.gen)
    inner = normalize_face(Y, i - 1, rest)
    return SimplexRef((j,) + inner.word, inner.deg, inner.gen)


def apply_degeneracy(j: int, ref: SimplexRef) -> SimplexRef:
    return SimplexRef(insert_letter(j, ref.word), ref.deg, ref.gen)


def apply_word(word: tuple[int, ...], ref: SimplexRef) -> SimplexRef:
    """s_word applied to ref (rightmost letter acts first)."""
    for a in reversed(word):
        ref = apply_degeneracy(a, ref)
    return ref


def apply_injection(Y: SimplicialSet, image: tuple[int, ...], total: int, ref: SimplexRef) -> SimplexRef:
    """Restrict a simplex of total degree ``total`` to the vertices ``image``.

    Deletes the missing vertices in decreasing order, one face at a time.
    """
    missing = [v for v in range(total + 1) if v not in set(image)]
    for v in sorted(missing, reverse=True):
        ref = normalize_face(Y, v, ref)
    return ref


def apply_monotone(Y: SimplicialSet, vals: tuple[int, ...], ref: SimplexRef) -> SimplexRef:
    """Pull a simplex back along any monotone map [m] -> [total degree]."""
    word, image = factor_monotone(vals)
    out = apply_injection(Y, image, ref.total, ref)
    return apply_word(word, out)


def validate_simplicial(Y: SimplicialSet, through: int | None = None) -> ValidationReport:
    problems = []
    L = len(Y.gen_sizes)
    if len(Y.gen_faces) != L:
        return ValidationReport(False, (f"gen_faces has {len(Y.gen_faces)} levels, gen_sizes has {L}",))
    if Y.truncated_at is not None and Y.truncated_at != L - 1:
        problems.append(f"truncated_at={Y.truncated_at} but generator degrees run 0..{L - 1}")
    for q in range(1, L):
        if len(Y.gen_faces[q]) != q + 1:
            problems.append(f"degree {q}: expected {q + 1} face maps")
            continue
        for i in range(q + 1):
            tab = Y.gen_faces[q][i]
            if len(tab) != Y.gen_sizes[q]:
                problems.append(f"degree {q} face {i}: table length mismatch")
                continue
            for g, ref in enumerate(tab):
                if ref.total != q - 1:
                    problems.append(f"degree {q} face {i} generator {g}: lands in degree {ref.total}, wanted {q - 1}")
                elif not is_canonical_word(ref.word, ref.deg):
                    problems.append(f"degree {q} face {i} generator {g}: word {ref.word} not canonical")
                elif not (0 <= ref.deg < L and 0 <= ref.gen < Y.gen_sizes[ref.deg]):
                    problems.append(f"degree {q} face {i} generator {g}: generator out of range")
    if problems:
        return ValidationReport(False, tuple(problems))
    if through is None:
        through = Y.truncated_at if Y.truncated_at is not None else Y.top_generator_degree + 2
    # the face-face identity on every simplex through the requested level;
    # the mixed and degeneracy-only identities hold by construction of the
    # canonical form, so this is the only content to verify
    for p in range(2, through + 1):
        for ref in iter_simplices(Y, p):
            for j in range(1, p + 1):
                for i in range(j):
                    a = normalize_face(Y, i, normalize_face(Y, j, ref))
                    b = normalize_face(Y, j - 1, normalize_face(Y, i, ref))
                    if a != b:
                        problems.append(f"d_{i} d_{j} != d_{j - 1} d_{i} on {ref}")
                        if len(problems) > 20:
                            return ValidationReport(False, tuple(problems))
    return ValidationReport(not problems, tuple(problems))


def require_valid_simplicial(Y: SimplicialSet, through: int | None = None) -> SimplicialSet:
    rep = validate_simplicial(Y, through)
    if not rep.ok:
        raise ValueError(f"invalid simplicial set: {rep.first()}")
    return Y


def iter_simplices(Y: SimplicialSet, p: int):
    """All simplices of total degree p: (word, deg, gen) with word a
    descending subset of {0..p-1}, ordered by (deg, word, gen)."""
    for q in range(min(p, len(Y.gen_sizes) - 1) + 1):
        k = p - q
        for word in itertools.combinations(range(p - 1, -1, -1), k):
            for g in range(Y.gen_sizes[q]):
                yield SimplexRef(word, q, g)


@dataclass(frozen=True)
class Enumeration:
    """A simplicial set flattened to a semi-simplicial one through level N.

    ``refs[p]`` lists the canonical simplices at level p; ``index[p]`` inverts
    the listing.  The face tables of ``sset`` are normalize_face in these
    coordinates.
    """

    space: SimplicialSet
    sset: SemiSimplicialSet
    refs: tuple[tuple[SimplexRef, ...], ...]
    index: tuple[dict, ...] = field(repr=False)

    def locate(self, p: int, ref: SimplexRef) -> int:
        return self.index[p][ref]


def enumerate_simplicial(Y: SimplicialSet, n: int) -> Enumeration:
    if Y.truncated_at is not None and n > Y.truncated_at:
        raise ValueError(f"cannot enumerate through {n}: presentation truncated at {Y.truncated_at}")
    refs = []
    index = []
    for p in range(n + 1):
        level = tuple(iter_simplices(Y, p))
        refs.append(level)
        index.append({ref: s for s, ref in enumerate(level)})
    sizes = tuple(len(level) for level in refs)
    faces = [()]
    for p in range(1, n + 1):
        faces.append(tuple(
            tuple(index[p - 1][normalize_face(Y, i, ref)] for ref in refs[p])
            for i in range(p + 1)))
    sset = SemiSimplicialSet(sizes, tuple(faces), truncated_at=n)
    return Enumeration(Y, sset, tuple(refs), tuple(index))


def free_degeneracies(X: SemiSimplicialSet) -> SimplicialSet:
    """Left adjoint to forgetting degeneracies: one generator per simplex of X."""
    gen_faces = [()]
    for p in range(1, len(X.sizes)):
        gen_faces.append(tuple(
            tuple(SimplexRef((), p - 1, X.face(p, i, s)) for s in range(X.sizes[p]))
            for i in range(p + 1)))
    return SimplicialSet(X.sizes, tuple(gen_faces), truncated_at=X.truncated_at)


def unit_map(X: SemiSimplicialSet, n: int) -> tuple[SSetMap, Enumeration]:
    """X -> (underlying semi-simplicial set of the free simplicial set on X).

    Each simplex goes to itself as a generator (empty word).
    """
    if len(X.sizes) - 1 > n:
        raise ValueError("enumerate at least through the top listed level of X")
    if X.truncated_at is not None and X.truncated_at != n:
        raise ValueError("a truncated X must be enumerated exactly at its truncation level")
    enum = enumerate_simplicial(free_degeneracies(X), n)
    tables = []
    for p in range(len(X.sizes)):
        tables.append(tuple(enum.locate(p, SimplexRef((), p, s)) for s in range(X.sizes[p])))
    # levels of the enumeration above X's top: nothing to map from
    src = X
    if len(X.sizes) - 1 < n:
        # pad X with empty levels so the map covers the same range
        pad = n + 1 - len(X.sizes)
        sizes = X.sizes + (0,) * pad
        faces = list(X.faces)
        for p in range(len(X.sizes), n + 1):
            faces.append(tuple(() for _ in range(p + 1)))
        src = SemiSimplicialSet(sizes, tuple(faces))
        tables.extend(() for _ in range(pad))
    return SSetMap(src, enum.sset, tuple(tables)), enum


def standard_simplicial_simplex(n: int) -> SimplicialSet:
    """The simplicial n-simplex: nondegenerate part is the semi-simplicial one."""
    return free_of_standard(n)


def free_of_standard(n: int) -> SimplicialSet:
    base = standard_semi_simplex(n)
    gen_faces = [()]
    for q in range(1, n + 1):
        gen_faces.append(tuple(
            tuple(SimplexRef((), q - 1, base.face(q, i, s)) for s in range(base.sizes[q]))
            for i in range(q + 1)))
    return SimplicialSet(base.sizes, tuple(gen_faces))


def simplex_ref_to_monotone(n: int, ref: SimplexRef) -> tuple[int, ...]:
    """Identify simplices of the simplicial n-simplex with monotone maps into [n]."""
    verts = _vertex_subsets(n, ref.deg)[ref.gen]
    surj = word_to_surjection(ref.word, ref.deg)
    return tuple(verts[v] for v in surj)


def monotone_to_simplex_ref(n: int, vals: tuple[int, ...]) -> SimplexRef:
    word, image = factor_monotone(vals)
    subs = _vertex_subsets(n, len(image) - 1)
    return SimplexRef(word, len(image) - 1, subs.index(tuple(image)))


# -- simplicial products -----------------------------------------------------


def strip_letter(word: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Remove one occurrence of s_j pulled out to the front.

    Letters above j shift down by one as s_j commutes leftward.
    """
    return tuple(x - 1 if x > j else x for x in word if x != j)


def normalize_pair(r1: SimplexRef, r2: SimplexRef) -> tuple[tuple[int, ...], SimplexRef, SimplexRef]:
    """Canonical form of a product simplex (r1, r2).

    A pair is degenerate along s_j exactly when j is a letter of both words;
    the shared letters (in decreasing order) form the word of the pair and
    stripping them leaves the nondegenerate part.
    """
    common = sorted(set(r1.word) & set(r2.word), reverse=True)
    w1, w2 = r1.word, r2.word
    for j in common:
        w1 = strip_letter(w1, j)
        w2 = strip_letter(w2, j)
    return tuple(common), SimplexRef(w1, r1.deg, r1.gen), SimplexRef(w2, r2.deg, r2.gen)


@dataclass(frozen=True)
class SimplicialProduct:
    """X x Y in generator form, with the pair dictionary kept for lookups.

    ``pairs[p]`` lists the nondegenerate pairs of level-p simplices (those
    with disjoint degeneracy words), in (ref1, ref2) lex order.
    """

    space: SimplicialSet
    left: SimplicialSet
    right: SimplicialSet
    pairs: tuple[tuple[tuple[SimplexRef, SimplexRef], ...], ...]
    index: tuple[dict, ...] = field(repr=False)


def simplicial_product(X: SimplicialSet, Y: SimplicialSet) -> SimplicialProduct:
    """Levelwise product of simplicial sets, presented by generators.

    A nondegenerate p-simplex of X x Y is a pair of level-p simplices whose
    degeneracy words share no letter; its faces are the componentwise faces,
    renormalized by pulling out shared letters.
    """
    truncs = [t for t in (X.truncated_at, Y.truncated_at) if t is not None]
    if truncs:
        top = min(truncs)
    else:
        top = X.top_generator_degree + Y.top_generator_degree
        top = max(top, 0)
    pairs = []
    index = []
    for p in range(top + 1):
        level = []
        for r1 in iter_simplices(X, p):
            s1 = set(r1.word)
            for r2 in iter_simplices(Y, p):
                if not (s1 & set(r2.word)):
                    level.append((r1, r2))
        pairs.append(tuple(level))
        index.append({pr: g for g, pr in enumerate(level)})
    gen_faces = [()]
    for p in range(1, top + 1):
        per_face = []
        for i in range(p + 1):
            col = []
            for (r1, r2) in pairs[p]:
                f1 = normalize_face(X, i, r1)
                f2 = normalize_face(Y, i, r2)
                word, n1, n2 = normalize_pair(f1, f2)
                col.append(SimplexRef(word, p - 1 - len(word), index[p - 1 - len(word)][(n1, n2)]))
            per_face.append(tuple(col))
        gen_faces.append(tuple(per_face))
    trunc = top if truncs else None
    space = SimplicialSet(tuple(len(lv) for lv in pairs), tuple(gen_faces), truncated_at=trunc)
    return SimplicialProduct(space, X, Y, tuple(pairs), tuple(index))


def interior_product(X: SimplicialSet, Y: SimplicialSet, n: int) -> SemiSimplicialSet:
    """Levelwise product through level n, as a semi-simplicial set."""
    ex = enumerate_simplicial(X, n).sset
    ey = enumerate_simplicial(Y, n).sset
    return diagonal(exterior_product(ex, ey))


# ---------------------------------------------------------------------------
# homotopy certificates


CERTIFICATE_KINDS = ("extra-degeneracy-h", "extra-degeneracy-g", "nullhomotopy", "homotopy")


@dataclass(frozen=True)
class HomotopyCertificate:
    """Simplex-level witness for a contraction, nullhomotopy, or homotopy.

    kind "extra-degeneracy-h": ``space`` is augmented by ``aug`` (level 0 to
    the augmentation set) with section ``h0``; ``up[p]`` is h_{p+1} moving
    level p to level p+1, satisfying d_{p+1} h_{p+1} = id and
    d_i h_{p+1} = h_p d_i (with d_0 at the bottom read as the augmentation).

    kind "extra-degeneracy-g": same data, identities d_0 g_{p+1} = id and
    d_i g_{p+1} = g_p d_{i-1}.

    kind "nullhomotopy": ``f`` maps X to Y, ``base_vertex`` is a vertex of Y,
    ``up[p]`` is h_{p+1}: X_p to Y_{p+1} with d_{p+1} h = f, lower faces
    commuting, and d_0 h_1 constant at the base vertex.

    kind "homotopy": ``f`` and ``g`` map X to Y and ``tri[p][i]`` (0 <= i <= p)
    are the prism sections X_p to Y_{p+1}.
    """

    kind: str
    space: SemiSimplicialSet | None = None
    aug_size: int | None = None
    aug: tuple[int, ...] | None = None
    h0: tuple[int, ...] | None = None
    up: tuple[tuple[int, ...], ...] = ()
    f: SSetMap | None = None
    g: SSetMap | None = None
    base_vertex: int | None = None
    tri: tuple[tuple[tuple[int, ...], ...], ...] = ()


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    kind: str
    through_level: int
    problems: tuple[str, ...] = ()


def _check_aug(X, aug_size, aug, problems):
    if len(aug) != X.sizes[0]:
        problems.append("augmentation table length mismatch")
        return
    if any(not (0 <= a < aug_size) for a in aug):
        problems.append("augmentation value out of range")
    if len(X.sizes) > 1:
        for s in range(X.sizes[1]):
            if aug[X.face(1, 0, s)] != aug[X.face(1, 1, s)]:
                problems.append(f"augmentation not constant on edge {s}")
                return


def check_certificate(cert: HomotopyCertificate) -> CertificateReport:
    """Verify the defining identities of a certificate, simplex by simplex."""
    problems: list[str] = []
    kind = cert.kind
    if kind not in CERTIFICATE_KINDS:
        return CertificateReport(False, kind, -1, (f"unknown kind {kind!r}",))

    if kind in ("extra-degeneracy-h", "extra-degeneracy-g"):
        X = cert.space
        through = len(cert.up) - 1  # up[p] is h_{p+1}, needs X_{p+1}
        if X is None or cert.aug is None or cert.h0 is None or cert.aug_size is None:
            return CertificateReport(False, kind, -1, ("missing augmentation data",))
        _check_aug(X, cert.aug_size, cert.aug, problems)
        if len(cert.h0) != cert.aug_size:
            problems.append("h0 table length mismatch")
        else:
            for a, v in enumerate(cert.h0):
                if not (0 <= v < X.sizes[0]):
                    problems.append(f"h0[{a}] out of range")
                elif cert.aug[v] != a:
                    problems.append(f"augmentation of h0[{a}] is not {a}")
        if through + 1 >= len(X.sizes):
            problems.append("certificate tables run past the listed levels")
            return CertificateReport(False, kind, through, tuple(problems))
        for p in range(through + 1):
            h = cert.up[p]
            if len(h) != X.sizes[p]:
                problems.append(f"h_{p + 1} table length mismatch")
                continue
            for s, v in enumerate(h):
                if not (0 <= v < X.sizes[p + 1]):
                    problems.append(f"h_{p + 1}[{s}] out of range")
                    continue
                if kind == "extra-degeneracy-h":
                    if X.face(p + 1, p + 1, v) != s:
                        problems.append(f"d_{p + 1} h_{p + 1} != id at level {p} simplex {s}")
                    if p == 0:
                        if X.face(1, 0, v) != cert.h0[cert.aug[s]]:
                            problems.append(f"d_0 h_1 != h_0 aug at simplex {s}")
                    else:
                        for i in range(p + 1):
                            if X.face(p + 1, i, v) != cert.up[p - 1][X.face(p, i, s)]:
                                problems.append(f"d_{i} h_{p + 1} != h_{p} d_{i} at level {p} simplex {s}")
                else:
                    if X.face(p + 1, 0, v) != s:
                        problems.append(f"d_0 g_{p + 1} != id at level {p} simplex {s}")
                    if p == 0:
                        if X.face(1, 1, v) != cert.h0[cert.aug[s]]:
                            problems.append(f"d_1 g_1 != g_0 aug at simplex {s}")
                    else:
                        for i in range(1, p + 2):
                            if X.face(p + 1, i, v) != cert.up[p - 1][X.face(p, i - 1, s)]:
                                problems.append(f"d_{i} g_{p + 1} != g_{p} d_{i - 1} at level {p} simplex {s}")
                if len(problems) > 20:
                    return CertificateReport(False, kind, through, tuple(problems))
        return CertificateReport(not problems, kind, through, tuple(problems))

    if kind == "nullhomotopy":
        if cert.f is None or cert.base_vertex is None:
            return CertificateReport(False, kind, -1, ("missing map or base vertex",))
        X, Y = cert.f.source, cert.f.target
        fr = check_sset_map(cert.f)
        if not fr.ok:
            return CertificateReport(False, kind, -1, ("f is not a map: " + fr.first(),))
        through = len(cert.up) - 1
        if through + 1 >= len(Y.sizes):
            return CertificateReport(False, kind, through, ("tables run past the listed levels of the target",))
        for p in range(through + 1):
            h = cert.up[p]
            if len(h) != X.sizes[p]:
                problems.append(f"h_{p + 1} table length mismatch")
                continue
            for s, v in enumerate(h):
                if not (0 <= v < Y.sizes[p + 1]):
                    problems.append(f"h_{p + 1}[{s}] out of range")
                    continue
                if Y.face(p + 1, p + 1, v) != cert.f.tables[p][s]:
                    problems.append(f"d_{p + 1} h_{p + 1} != f at level {p} simplex {s}")
                if p == 0:
                    if Y.face(1, 0, v) != cert.base_vertex:
                        problems.append(f"d_0 h_1 not constant at the base vertex (simplex {s})")
                else:
                    for i in range(p + 1):
                        if Y.face(p + 1, i, v) != cert.up[p - 1][X.face(p, i, s)]:
                            problems.append(f"d_{i} h_{p + 1} != h_{p} d_{i} at level {p} simplex {s}")
                if len(problems) > 20:
                    return CertificateReport(False, kind, through, tuple(problems))
        return CertificateReport(not problems, kind, through, tuple(problems))

    # kind == "homotopy"
    if cert.f is None or cert.g is None:
        return CertificateReport(False, kind, -1, ("missing endpoint maps",))
    X, Y = cert.f.source, cert.f.target
    for name, m in (("f", cert.f), ("g", cert.g)):
        r = check_sset_map(m)
        if not r.ok:
            return CertificateReport(False, kind, -1, (f"{name} is not a map: " + r.first(),))
    if cert.g.source != X or cert.g.target != Y:
        return CertificateReport(False, kind, -1, ("f and g have different endpoints",))
    through = len(cert.tri) - 1
    if through + 1 >= len(Y.sizes):
        return CertificateReport(False, kind, through, ("tables run past the listed levels of the target",))
    for p in range(through + 1):
        level = cert.tri[p]
        if len(level) != p + 1:
            problems.append(f"level {p}: expected {p + 1} prism tables, got {len(level)}")
            continue
        for i, tab in enumerate(level):
            if len(tab) != X.sizes[p]:
                problems.append(f"H[{p}][{i}] table length mismatch")
                continue
            for s, v in enumerate(tab):
                if not (0 <= v < Y.sizes[p + 1]):
                    problems.append(f"H[{p}][{i}][{s}] out of range")
        if len(problems) > 20:
            return CertificateReport(False, kind, through, tuple(problems))
    if problems:
        return CertificateReport(False, kind, through, tuple(problems))
    for p in range(through + 1):
        H = cert.tri[p]
        for s in range(X.sizes[p]):
            if Y.face(p + 1, 0, H[0][s]) != cert.f.tables[p][s]:
                problems.append(f"d_0 H[{p}][0] != f at simplex {s}")
            if Y.face(p + 1, p + 1, H[p][s]) != cert.g.tables[p][s]:
                problems.append(f"d_{p + 1} H[{p}][{p}] != g at simplex {s}")
            for i in range(1, p + 1):
                if Y.face(p + 1, i, H[i][s]) != Y.face(p + 1, i, H[i - 1][s]):
                    problems.append(f"glue d_{i} H[{p}][{i}] != d_{i} H[{p}][{i - 1}] at simplex {s}")
            if p >= 1:
                prev = cert.tri[p - 1]
                for j in range(p + 1):
                    for i in range(j):
                        if Y.face(p + 1, i, H[j][s]) != prev[j - 1][X.face(p, i, s)]:
                            problems.append(f"d_{i} H[{p}][{j}] != H[{p - 1}][{j - 1}] d_{i} at simplex {s}")
                    for i in range(j + 2, p + 2):
                        if j <= p - 1:
                            if Y.face(p + 1, i, H[j][s]) != prev[j][X.face(p, i - 1, s)]:
                                problems.append(f"d_{i} H[{p}][{j}] != H[{p - 1}][{j}] d_{i - 1} at simplex {s}")
            if len(problems) > 20:
                return CertificateReport(False, kind, through, tuple(problems))
    return CertificateReport(not problems, kind, through, tuple(problems))
