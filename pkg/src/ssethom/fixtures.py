"""Shared example objects: spaces, categories, monoids, functors.

Everything here is deterministic; the random generators take explicit seeds.
"""

from __future__ import annotations

import itertools
import random

from .cat import (
    FinMonoid,
    FinNonUnitalCategory,
    FunctorData,
    identity_functor,
)
from .sset import (
    SemiSimplicialSet,
    SimplicialSet,
    boundary_semi_simplex,
    constant_sset,
    diagonal,
    exterior_product,
    free_degeneracies,
    standard_semi_simplex,
)


# -- semi-simplicial fixtures -------------------------------------------------


def real_projective_plane() -> SemiSimplicialSet:
    """Two vertices, three edges, two triangles; the minimal model."""
    return SemiSimplicialSet(
        (2, 3, 2),
        ((), ((1, 1, 0), (0, 0, 0)), ((0, 1), (1, 0), (2, 2))))


def parallel_edges(k: int) -> SemiSimplicialSet:
    """Two vertices joined by k edges (a wedge of k-1 circles)."""
    return SemiSimplicialSet((2, k), ((), ((1,) * k, (0,) * k)))


def sset_corpus() -> dict[str, SemiSimplicialSet]:
    circle = boundary_semi_simplex(2)
    return {
        "point": standard_semi_simplex(0),
        "interval": standard_semi_simplex(1),
        "simplex2": standard_semi_simplex(2),
        "simplex3": standard_semi_simplex(3),
        "circle": circle,
        "sphere2": boundary_semi_simplex(3),
        "sphere3": boundary_semi_simplex(4),
        "rp2": real_projective_plane(),
        "parallel3": parallel_edges(3),
        "threepoints": constant_sset(3, 2),
        "diagsquare": diagonal(exterior_product(circle, circle)),
    }


def random_semi_simplicial(seed: int, dim: int = 3, cap: int = 5) -> SemiSimplicialSet:
    """A pseudo-random valid semi-simplicial set: each level samples from the
    face-compatible tuples over the level below."""
    rng = random.Random(seed)
    sizes = [rng.randint(1, cap)]
    faces: list[tuple] = [()]
    for p in range(1, dim + 1):
        prev = sizes[p - 1]
        cands = []
        for tup in itertools.product(range(prev), repeat=p + 1):
            ok = True
            for j in range(1, p + 1):
                for i in range(j):
                    if p >= 2 and faces[p - 1][i][tup[j]] != faces[p - 1][j - 1][tup[i]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                cands.append(tup)
        count = rng.randint(0, min(cap, len(cands)))
        chosen = rng.sample(cands, count) if count else []
        sizes.append(len(chosen))
        faces.append(tuple(tuple(tup[i] for tup in chosen) for i in range(p + 1)))
    return SemiSimplicialSet(tuple(sizes), tuple(faces), truncated_at=dim)


def random_simplicial(seed: int, dim: int = 3, cap: int = 5) -> SimplicialSet:
    return free_degeneracies(random_semi_simplicial(seed, dim, cap))


# -- categories ----------------------------------------------------------------


def poset_category(n: int) -> FinNonUnitalCategory:
    """The poset 0 <= 1 <= ... <= n as a unital category; morphisms (i, j)
    listed lexicographically."""
    mors = [(i, j) for i in range(n + 1) for j in range(i, n + 1)]
    index = {m: k for k, m in enumerate(mors)}
    src = tuple(i for i, j in mors)
    tgt = tuple(j for i, j in mors)
    comp = {}
    for a, (i, j) in enumerate(mors):
        for b, (j2, k) in enumerate(mors):
            if j == j2:
                comp[(a, b)] = index[(i, k)]
    units = tuple(index[(i, i)] for i in range(n + 1))
    return FinNonUnitalCategory(n + 1, src, tgt, comp, units=units)


def strict_poset_category(n: int) -> FinNonUnitalCategory:
    """The strict order 0 < 1 < ... < n: no identities, so non-unital."""
    mors = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    index = {m: k for k, m in enumerate(mors)}
    src = tuple(i for i, j in mors)
    tgt = tuple(j for i, j in mors)
    comp = {}
    for a, (i, j) in enumerate(mors):
        for b, (j2, k) in enumerate(mors):
            if j == j2:
                comp[(a, b)] = index[(i, k)]
    return FinNonUnitalCategory(n + 1, src, tgt, comp)


def composable_pair_category() -> FinNonUnitalCategory:
    """Two arrows and their composite, no identities."""
    return strict_poset_category(2)


def idempotent_category() -> FinNonUnitalCategory:
    """One object with a single idempotent endomorphism, units not declared."""
    return FinNonUnitalCategory(1, (0,), (0,), {(0, 0): 0})


def discrete_category(n: int) -> FinNonUnitalCategory:
    return FinNonUnitalCategory(n, (), (), {})


def parallel_arrows_category(k: int) -> FinNonUnitalCategory:
    """Two objects with k parallel arrows between them; nothing composes."""
    return FinNonUnitalCategory(2, (0,) * k, (1,) * k, {})


def grid_poset_category() -> FinNonUnitalCategory:
    """The product order on {0,1} x {0,1} (a commuting square with units)."""
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    pos = {e: i for i, e in enumerate(elems)}
    mors = [(a, b) for a in elems for b in elems if a[0] <= b[0] and a[1] <= b[1]]
    index = {m: k for k, m in enumerate(mors)}
    src = tuple(pos[a] for a, b in mors)
    tgt = tuple(pos[b] for a, b in mors)
    comp = {}
    for x, (a, b) in enumerate(mors):
        for y, (b2, c) in enumerate(mors):
            if b == b2:
                comp[(x, y)] = index[(a, c)]
    units = tuple(index[(e, e)] for e in elems)
    return FinNonUnitalCategory(4, src, tgt, comp, units=units)


def nonunital_category_corpus() -> dict[str, FinNonUnitalCategory]:
    return {
        "idempotent": idempotent_category(),
        "discrete3": discrete_category(3),
        "pair": composable_pair_category(),
        "strict1": strict_poset_category(1),
        "strict3": strict_poset_category(3),
        "parallel2": parallel_arrows_category(2),
    }


# -- monoids --------------------------------------------------------------------


def cyclic_group_monoid(n: int) -> FinMonoid:
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FinMonoid(table=table, unit=0)


def klein_four_monoid() -> FinMonoid:
    table = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
    return FinMonoid(table=table, unit=0)


def absorbing_pair_monoid() -> FinMonoid:
    """{1, z} with z absorbing (z*z = z)."""
    return FinMonoid(table=((0, 1), (1, 1)), unit=0)


def trivial_monoid() -> FinMonoid:
    return FinMonoid(table=((0,),), unit=0)


def free_rank_one_presentation() -> FinMonoid:
    """The natural numbers: one generator, no relations."""
    return FinMonoid(gens=1, relations=())


def glued_pair_presentation() -> FinMonoid:
    """Two generators identified: (1,0) ~ (0,1)."""
    return FinMonoid(gens=2, relations=(((1, 0), (0, 1)),))


# -- functors ----------------------------------------------------------------------


def point_into_interval() -> FunctorData:
    """The endpoint inclusion {1} into the walking arrow."""
    return FunctorData(poset_category(0), poset_category(1), (1,), (2,))


def interval_to_point() -> FunctorData:
    return FunctorData(poset_category(1), poset_category(0), (0, 0), (0, 0, 0))


def discrete_pair_into_interval() -> FunctorData:
    """Both objects of a discrete pair land in the walking arrow; the fiber
    over the far end is disconnected."""
    return FunctorData(discrete_category(2), poset_category(1), (0, 1), ())


def quillen_functor_corpus() -> dict[str, FunctorData]:
    out = {
        "endpoint": point_into_interval(),
        "collapse": interval_to_point(),
    }
    for n in range(3):
        out[f"id{n}"] = identity_functor(poset_category(n))
    return out
