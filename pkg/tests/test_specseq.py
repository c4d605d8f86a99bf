from fractions import Fraction

import pytest

from ssethom.cat import comma_resolution, identity_functor, nerve
from ssethom.fixtures import poset_category
from ssethom.homalg import (
    bicomplex,
    graded_homology,
    ring_prime,
    tensor_double_complex,
    total_complex,
    unnormalized_chains,
)
from ssethom.specseq import (
    SSPage,
    _Echelon,
    check_convergence,
    spectral_sequence,
    transpose_double_complex,
)
from ssethom.sset import (
    boundary_semi_simplex,
    exterior_product,
    standard_semi_simplex,
)


def interval_square(ring):
    X = standard_semi_simplex(1)
    return bicomplex(exterior_product(X, X), ring)


def torus(ring):
    S = boundary_semi_simplex(2)
    return bicomplex(exterior_product(S, S), ring)


# -- echelon scaffolding -------------------------------------------------------


def test_echelon_coordinates_recover_combinations():
    ech = _Echelon(3, None)
    assert ech.add([Fraction(1), Fraction(2), Fraction(0)])
    assert ech.add([Fraction(0), Fraction(1), Fraction(1)])
    coords = ech.coordinates([Fraction(2), Fraction(7), Fraction(3)])
    assert coords == {0: Fraction(2), 1: Fraction(3)}
    assert ech.coordinates([Fraction(0), Fraction(0), Fraction(1)]) is None


def test_echelon_mod_p_tags_skip_failed_adds():
    ech = _Echelon(2, 5)
    assert ech.add([1, 2])
    assert not ech.add([2, 4])  # dependent, still consumes tag 1
    assert ech.add([0, 1])
    assert ech.coordinates([1, 0]) == {0: 1, 2: 3}  # (1,2) + 3*(0,1) = (1,5) = (1,0)


# -- the square of an interval over F2 ------------------------------------------


def test_interval_square_page_dims_mod_two():
    pages = spectral_sequence(interval_square("F2"))
    assert [page.r for page in pages] == [0, 1, 2]
    assert pages[0].dims == {(0, 0): 4, (0, 1): 2, (1, 0): 2, (1, 1): 1}
    assert pages[1].dims == {(0, 0): 2, (1, 0): 1}
    assert pages[2].dims == {(0, 0): 1}


def test_interval_square_converges_to_point():
    D = interval_square("F2")
    pages = spectral_sequence(D)
    report = check_convergence(pages, total_complex(D))
    assert report.ok
    assert report.degrees == ((0, 1, 1), (1, 0, 0), (2, 0, 0))


# -- the torus over Q ------------------------------------------------------------


def test_torus_rational_page_two():
    pages = spectral_sequence(torus("Q"))
    assert pages[1].dims == {(0, 0): 3, (1, 0): 3, (0, 1): 3, (1, 1): 3}
    assert pages[2].dims == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    for matrix in pages[2].diff.values():
        assert all(not any(row) for row in matrix)


def test_torus_convergence_is_one_two_one():
    D = torus("Q")
    pages = spectral_sequence(D)
    report = check_convergence(pages, total_complex(D))
    assert report.ok
    assert [dim_h for (_, _, dim_h) in report.degrees] == [1, 2, 1]
    assert [total for (_, total, _) in report.degrees] == [1, 2, 1]


# -- d1 against the column-wise induced maps -------------------------------------


def block_part(T, n, p, vec):
    off, size = T.block_offset(n, p)
    return list(vec[off:off + size])


def induced_d1(D, pages, p, q):
    """The matrix of the horizontal map on vertical homology, built directly
    from the double complex data and the page-1 representatives."""
    prime = ring_prime(D.ring)
    T = total_complex(D)
    source = [block_part(T, p + q, p, v) for v in pages[1].basis[(p, q)]]
    target_reps = [block_part(T, p + q - 1, p - 1, v)
                   for v in pages[1].basis.get((p - 1, q), ())]
    tdim_block = D.size(p - 1, q)
    ech = _Echelon(tdim_block, prime)
    for w in target_reps:
        ech.add(w)
    if q + 1 < D.q_levels:
        dv = D.dv[p - 1][q + 1]
        for c in range(D.size(p - 1, q + 1)):
            col = [0 if prime else Fraction(0)] * tdim_block
            for (r, cc, val) in dv.entries():
                if cc == c:
                    col[r] = val % prime if prime else Fraction(val)
            ech.add(col)
    cols = []
    for s in source:
        img = [0 if prime else Fraction(0)] * tdim_block
        for (r, c, val) in D.dh[p][q].entries():
            if s[c]:
                img[r] = (img[r] + val * s[c]) % prime if prime else img[r] + val * s[c]
        coords = ech.coordinates(img)
        assert coords is not None
        col = [0 if prime else Fraction(0)] * len(target_reps)
        for t, c in coords.items():
            if t < len(target_reps):
                col[t] = c
        cols.append(col)
    return tuple(tuple(col[i] for col in cols) for i in range(len(target_reps)))


@pytest.mark.parametrize("build, ring", [
    (interval_square, "F2"),
    (torus, "Q"),
    (interval_square, "F5"),
])
def test_d1_matches_induced_horizontal_map(build, ring):
    D = build(ring)
    pages = spectral_sequence(D)
    checked = 0
    for (p, q), matrix in pages[1].diff.items():
        assert matrix == induced_d1(D, pages, p, q)
        checked += 1
    assert checked > 0


def test_page_one_basis_is_pure_and_vertical():
    D = torus("Q")
    pages = spectral_sequence(D)
    T = total_complex(D)
    for (p, q), vecs in pages[1].basis.items():
        n = p + q
        off, size = T.block_offset(n, p)
        for v in vecs:
            assert any(v[off:off + size])
            assert not any(v[:off]) and not any(v[off + size:])
            # vertical part of the total boundary vanishes on the block below
            if q >= 1:
                img = [0] * T.complex.dim(n - 1)
                for (r, c, val) in T.complex.boundary(n).entries():
                    if v[c]:
                        img[r] += val * v[c]
                boff, bsize = T.block_offset(n - 1, p)
                assert not any(img[boff:boff + bsize])


# -- squares, orientations, degenerate shapes ------------------------------------


def compose(mat_a, mat_b, prime):
    """Rows-by-columns product of two row-major tuple matrices."""
    if not mat_a or not mat_b:
        return ()
    rows, mid, cols = len(mat_a), len(mat_b), len(mat_b[0]) if mat_b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = sum(mat_a[i][k] * mat_b[k][j] for k in range(mid))
            row.append(s % prime if prime else s)
        out.append(tuple(row))
    return tuple(out)


@pytest.mark.parametrize("build, ring", [(interval_square, "F2"), (torus, "Q")])
def test_differentials_square_to_zero_on_every_page(build, ring):
    D = build(ring)
    prime = ring_prime(D.ring)
    for orientation in ("cols", "rows"):
        for page in spectral_sequence(D, orientation=orientation):
            step = (-(page.r), page.r - 1) if page.r else (0, -1)
            for (p, q), matrix in page.diff.items():
                tgt = (p + step[0], q + step[1])
                again = page.diff.get(tgt)
                if again is not None:
                    product = compose(again, matrix, prime)
                    assert all(not any(row) for row in product)


def test_row_orientation_agrees_with_columns():
    for build, ring in ((interval_square, "F2"), (torus, "Q")):
        D = build(ring)
        cols = spectral_sequence(D, orientation="cols")[-1]
        rows = spectral_sequence(D, orientation="rows")[-1]
        assert rows.dims == {(q, p): d for (p, q), d in cols.dims.items()}


def test_dims_never_grow_between_pages():
    for build, ring in ((interval_square, "F2"), (torus, "Q")):
        pages = spectral_sequence(build(ring))
        for earlier, later in zip(pages, pages[1:]):
            for spot, d in later.dims.items():
                assert d <= earlier.dims.get(spot, 0)


def test_single_column_stabilizes_on_page_one():
    A = unnormalized_chains(standard_semi_simplex(0), "Q")
    B = unnormalized_chains(boundary_semi_simplex(2), "Q")
    D = tensor_double_complex(A, B)
    pages = spectral_sequence(D)
    assert pages[-1].r == 1
    assert pages[-1].dims == {(0, 0): 1, (0, 1): 1}
    assert check_convergence(pages, total_complex(D)).ok


def test_transpose_is_an_involution():
    D = torus("Q")
    again = transpose_double_complex(transpose_double_complex(D))
    assert again == D


def test_integer_coefficients_are_rejected():
    D = interval_square("Z")
    with pytest.raises(ValueError):
        spectral_sequence(D)
    with pytest.raises(ValueError):
        check_convergence([SSPage(0, "cols", {}, {}, {})], total_complex(D))


def test_unknown_orientation_rejected():
    with pytest.raises(ValueError):
        spectral_sequence(interval_square("Q"), orientation="diag")


# -- a resolution converging to the homology of a nerve ---------------------------


def test_comma_resolution_of_identity_converges():
    C = poset_category(1)
    res = comma_resolution(identity_functor(C), 2)
    D = bicomplex(res.bisset, "Q")
    pages = spectral_sequence(D)
    report = check_convergence(pages, total_complex(D))
    assert report.ok
    assert report.degrees[0] == (0, 1, 1)
    assert report.degrees[1] == (1, 0, 0)
    # the identity's nerve is a point, and the trusted low degrees agree with it
    nerve_h = graded_homology(unnormalized_chains(nerve(C, 3).sset, "Q"), through=1)
    assert [g.rank for g in nerve_h] == [1, 0]


def test_pages_are_deterministic():
    for orientation in ("cols", "rows"):
        a = spectral_sequence(torus("Q"), orientation=orientation)
        b = spectral_sequence(torus("Q"), orientation=orientation)
        assert a == b
