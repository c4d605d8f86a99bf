import random

import pytest

from ssethom.snf import (
    SparseIntMatrix,
    invariant_factors,
    is_unimodular,
    kernel_basis,
    rank_mod_p,
    rank_rational,
    rank_z,
    smith_normal_form,
    solve,
)


def reference_snf(dense):
    """Slow textbook Smith normal form on a dense matrix, used as an oracle.

    Works the submatrix at (t, t) with swap / gcd row and column steps until
    the pivot divides everything, then recurses.  Completely independent of
    the sparse production code.
    """
    mat = [list(row) for row in dense]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    out = []
    t = 0
    while t < min(nrows, ncols):
        # find a nonzero entry of minimal absolute value in the submatrix
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = mat[i][j]
                if v and (best is None or abs(v) < abs(mat[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        mat[t], mat[i0] = mat[i0], mat[t]
        for row in mat:
            row[t], row[j0] = row[j0], row[t]
        p = mat[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            q = mat[i][t] // p
            if q:
                for j in range(t, ncols):
                    mat[i][j] -= q * mat[t][j]
            if mat[i][t]:
                dirty = True
        for j in range(t + 1, ncols):
            q = mat[t][j] // p
            if q:
                for i in range(t, nrows):
                    mat[i][j] -= q * mat[i][t]
            if mat[t][j]:
                dirty = True
        if dirty:
            continue
        off = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if mat[i][j] % p:
                    off = i
                    break
            if off is not None:
                break
        if off is not None:
            for j in range(t, ncols):
                mat[t][j] += mat[off][j]
            continue
        out.append(abs(p))
        t += 1
    return tuple(out)


def dense_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][x] * b[x][j] for x in range(k)) for j in range(m)] for i in range(n)]


def random_dense(rng, rows, cols, lo=-6, hi=6, density=0.7):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(cols)]
            for _ in range(rows)]


def test_identity():
    assert invariant_factors(SparseIntMatrix.identity(3)) == (1, 1, 1)


def test_zero_and_empty():
    assert invariant_factors(SparseIntMatrix.zero(3, 4)) == ()
    assert invariant_factors(SparseIntMatrix.zero(0, 5)) == ()
    assert invariant_factors(SparseIntMatrix.zero(5, 0)) == ()


def test_diagonal_already_smith():
    m = SparseIntMatrix.from_dense([[2, 0], [0, 4]])
    assert invariant_factors(m) == (2, 4)


def test_two_by_two_with_torsion():
    # det = -8, gcd of entries 2: invariant factors (2, 4)
    m = SparseIntMatrix.from_dense([[2, 4], [6, 8]])
    assert invariant_factors(m) == (2, 4)
    assert reference_snf([[2, 4], [6, 8]]) == (2, 4)


def test_rank_deficient():
    m = SparseIntMatrix.from_dense([[1, 0], [0, 0]])
    assert invariant_factors(m) == (1,)
    m2 = SparseIntMatrix.from_dense([[1, 2], [2, 4]])
    assert invariant_factors(m2) == (1,)


def test_divisibility_chain_needs_mixing():
    # diag(2, 3) is not in Smith form; the chain is (1, 6)
    m = SparseIntMatrix.from_dense([[2, 0], [0, 3]])
    assert invariant_factors(m) == (1, 6)


def test_klein_bottle_style_relation():
    # coker of [[2]] next to a unit relation
    m = SparseIntMatrix.from_dense([[1, 1], [1, -1]])
    assert invariant_factors(m) == (1, 2)


def test_big_integers_exact():
    big = 2 ** 100
    m = SparseIntMatrix.from_dense([[big, 1], [1, 1]])
    assert invariant_factors(m) == (1, big - 1)


def test_oracle_agreement_random():
    rng = random.Random(20260816)
    for trial in range(200):
        rows = rng.randint(0, 6)
        cols = rng.randint(0, 6)
        dense = random_dense(rng, rows, cols)
        a = SparseIntMatrix.from_dense(dense, cols)
        assert invariant_factors(a) == reference_snf(dense), (trial, dense)


def test_oracle_agreement_larger_entries():
    rng = random.Random(7)
    for trial in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        dense = random_dense(rng, rows, cols, lo=-50, hi=50, density=0.9)
        a = SparseIntMatrix.from_dense(dense, cols)
        assert invariant_factors(a) == reference_snf(dense), (trial, dense)


def test_transforms_diagonalize():
    rng = random.Random(99)
    for trial in range(80):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        dense = random_dense(rng, rows, cols)
        a = SparseIntMatrix.from_dense(dense, cols)
        s = smith_normal_form(a, transforms=True)
        d = dense_mul(dense_mul(s.U.to_dense(), dense), s.V.to_dense())
        for i in range(rows):
            for j in range(cols):
                want = s.factors[i] if i == j and i < s.rank else 0
                assert d[i][j] == want, (trial, dense, d)
        assert is_unimodular(s.U)
        assert is_unimodular(s.V)


def test_kernel_basis_spans_and_is_killed():
    rng = random.Random(5)
    for _ in range(60):
        rows = rng.randint(0, 5)
        cols = rng.randint(0, 5)
        dense = random_dense(rng, rows, cols)
        a = SparseIntMatrix.from_dense(dense, cols)
        ker = kernel_basis(a)
        assert len(ker) == cols - rank_z(a)
        for v in ker:
            assert a.apply(v) == {}
        if ker:
            # the kernel vectors extend to a basis of Z^cols, so they are
            # linearly independent and saturated
            km = SparseIntMatrix(cols, len(ker),
                                 {r: {j: v[r] for j, v in enumerate(ker) if r in v}
                                  for r in range(cols)})
            assert invariant_factors(km) == (1,) * len(ker)


def test_solve_round_trip():
    rng = random.Random(11)
    solved = 0
    for _ in range(80):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        dense = random_dense(rng, rows, cols)
        a = SparseIntMatrix.from_dense(dense, cols)
        x0 = {j: rng.randint(-4, 4) for j in range(cols)}
        b = a.apply(x0)
        x = solve(a, b)
        assert x is not None
        assert a.apply(x) == b
        solved += 1
    assert solved == 80


def test_solve_detects_no_solution():
    a = SparseIntMatrix.from_dense([[2, 0], [0, 2]])
    assert solve(a, {0: 1}) is None
    assert solve(a, {0: 2, 1: -4}) == {0: 1, 1: -2}


def test_field_ranks():
    m = SparseIntMatrix.from_dense([[2, 4], [6, 8]])
    assert rank_rational(m) == 2
    assert rank_mod_p(m, 2) == 0  # every entry even
    assert rank_mod_p(m, 3) == 2
    n = SparseIntMatrix.from_dense([[1, 1], [1, 1]])
    assert rank_mod_p(n, 2) == 1
    assert rank_rational(SparseIntMatrix.zero(3, 3)) == 0


def test_field_rank_matches_smith_rank_over_q():
    rng = random.Random(31)
    for _ in range(40):
        dense = random_dense(rng, rng.randint(1, 5), rng.randint(1, 5))
        a = SparseIntMatrix.from_dense(dense, len(dense[0]) if dense else 0)
        assert rank_rational(a) == rank_z(a)


def test_rank_mod_p_from_invariant_factors():
    # rank over F_p = number of invariant factors not divisible by p
    rng = random.Random(13)
    for _ in range(40):
        dense = random_dense(rng, rng.randint(1, 5), rng.randint(1, 5), lo=-9, hi=9)
        a = SparseIntMatrix.from_dense(dense, len(dense[0]) if dense else 0)
        fac = invariant_factors(a)
        for p in (2, 3, 5):
            assert rank_mod_p(a, p) == sum(1 for d in fac if d % p)


def test_matrix_ops_shape_errors():
    a = SparseIntMatrix.zero(2, 3)
    b = SparseIntMatrix.zero(3, 2)
    with pytest.raises(ValueError):
        a.add(b)
    with pytest.raises(ValueError):
        a.mul(a)
    assert a.mul(b) == SparseIntMatrix.zero(2, 2)


def test_block_assembly():
    f = SparseIntMatrix.from_dense([[1, 2]])
    d = SparseIntMatrix.from_dense([[3]])
    m = SparseIntMatrix.block({(0, 0): f, (1, 1): d}, [1, 1], [2, 1])
    assert m.to_dense() == [[1, 2, 0], [0, 0, 3]]
    t = m.transpose()
    assert t.to_dense() == [[1, 0], [2, 0], [0, 3]]
