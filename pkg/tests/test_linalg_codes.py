import numpy as np
import pytest

from hermhull.gf import make_field
from hermhull.linalg_codes import (BudgetExceededError, FieldMismatchError,
                                   LinearCode, gram_matrix, mat_mul,
                                   matrix_rank, nullspace, rref)

from conftest import grs_b_full, random_code


def enumerate_row_space(F, M):
    vecs = {tuple([0] * M.shape[1])}
    for r in M:
        vecs = {tuple(F.add_arr(np.array(v, dtype=np.int32),
                                F.mul_arr(np.array(lam), r)))
                for v in vecs for lam in range(F.order)}
    return vecs


def test_rref_identity_and_zero(F9):
    I = np.eye(3, dtype=np.int32)
    R, rank, piv = rref(F9, I)
    assert np.array_equal(R, I) and rank == 3 and piv == [0, 1, 2]
    Z = np.zeros((2, 5), dtype=np.int32)
    R, rank, piv = rref(F9, Z)
    assert rank == 0 and piv == [] and not R.any()


def test_rref_rank_against_row_space_enumeration(F9):
    rng = np.random.default_rng(0)
    for _ in range(5):
        M = rng.integers(0, 9, size=(4, 6)).astype(np.int32)
        R, rank, piv = rref(F9, M)
        assert len(enumerate_row_space(F9, M)) == 9 ** rank
        # canonical: pivots are 1 and alone in their columns
        for i, c in enumerate(piv):
            assert R[i, c] == 1
            col = R[:, c].copy()
            col[i] = 0
            assert not col.any()


def test_rref_is_canonical_under_row_shuffles(F9):
    rng = np.random.default_rng(1)
    M = rng.integers(0, 9, size=(3, 6)).astype(np.int32)
    R1, _, _ = rref(F9, M)
    R2, _, _ = rref(F9, M[::-1])
    assert np.array_equal(R1, R2)


def test_nullspace(F9):
    rng = np.random.default_rng(2)
    M = rng.integers(0, 9, size=(3, 7)).astype(np.int32)
    N = nullspace(F9, M)
    assert N.shape[0] == 7 - matrix_rank(F9, M)
    assert not mat_mul(F9, M, N.T).any()


def test_euclidean_dual_extremes(F9):
    full = LinearCode.full(F9, 4)
    assert full.euclidean_dual() == LinearCode.zero(F9, 4)
    rep = LinearCode.from_rows(F9, [[1] * 6])
    assert rep.euclidean_dual().k == 5


def test_grs_dual_is_mds_brute_force(F9):
    from hermhull.grs import GrsSpec
    b = [F9.alpha_pow(i) for i in range(8)]
    rng = np.random.default_rng(21)
    for n in (4, 6, 8):
        for k in (1, 2, 3):
            a = tuple(int(x) for x in rng.integers(1, 9, size=n))
            C = GrsSpec(F9, tuple(b[:n]), a, k).code()
            D = C.euclidean_dual()
            assert D.k == n - k
            assert D.min_distance() == k + 1  # the dual of MDS is MDS


def test_double_duals_and_rank_nullity(F9, F16):
    rng = np.random.default_rng(3)
    for F in (F9, F16):
        for _ in range(5):
            C = random_code(F, 7, 3, rng)
            assert C.euclidean_dual().euclidean_dual() == C
            assert C.hermitian_dual().hermitian_dual() == C
            assert C.k + C.hermitian_dual().k == C.n


def test_hermitian_dual_small_exhaustive(F9):
    C = LinearCode.from_rows(F9, [[1, F9.alpha]])
    H = C.hermitian_dual()
    assert H.k == 1
    sols = [(u0, u1) for u0 in range(9) for u1 in range(9)
            if F9.add(F9.frobenius_q(u0),
                      F9.mul(F9.alpha, F9.frobenius_q(u1))) == 0]
    assert len(sols) == 9
    for u in sols:
        assert H.contains(np.array(u, dtype=np.int32))
    assert LinearCode.zero(F9, 4).hermitian_dual() == LinearCode.full(F9, 4)


def test_hull_extremes(F9):
    # self-orthogonal: the two lowest-degree evaluation rows on all of GF(9)
    b = grs_b_full(F9)
    C = LinearCode.from_rows(F9, [[1] * 9, b])
    assert C.hermitian_hull() == C
    # complementary-dual: a single coordinate pair with nonzero self-pairing
    D = LinearCode.from_rows(F9, [[1, 1]])
    assert D.hermitian_hull().k == 0
    # hull symmetry
    rng = np.random.default_rng(4)
    for _ in range(5):
        C = random_code(F9, 8, 3, rng)
        assert C.hermitian_hull() == C.hermitian_dual().hermitian_hull()


def test_hull_subcode_relation(F9):
    rng = np.random.default_rng(5)
    C = random_code(F9, 8, 4, rng)
    hull = C.hermitian_hull()
    assert hull.is_subcode_of(C)
    assert hull.is_subcode_of(C.hermitian_dual())


def test_gram_hull_agreement_random(F9):
    rng = np.random.default_rng(6)
    for _ in range(50):
        C = random_code(F9, 8, 3, rng)
        assert C.hull_dim_via_gram() == C.hermitian_hull().k


def test_gram_self_orthogonal_gives_k(F9):
    b = grs_b_full(F9)
    C = LinearCode.from_rows(F9, [[1] * 9, b])
    assert not C.gram().any()
    assert C.hull_dim_via_gram() == C.k


def test_min_distance_examples(F9):
    rep = LinearCode.from_rows(F9, [[1] * 7])
    assert rep.min_distance() == 7
    b = grs_b_full(F9)
    C = LinearCode.from_rows(F9, [[1] * 9, b])
    assert C.min_distance() == 8 and C.is_mds()
    with pytest.raises(ValueError):
        LinearCode.zero(F9, 5).min_distance()


def test_min_distance_budget(F9):
    rng = np.random.default_rng(7)
    C = random_code(F9, 9, 4, rng)
    with pytest.raises(BudgetExceededError):
        C.min_distance(budget=100)


def test_puncture(F9):
    b = grs_b_full(F9)
    C = LinearCode.from_rows(F9, [[1] * 9, b])
    assert C.puncture([]) == C
    P = C.puncture([0, 5])
    assert (P.n, P.k) == (7, 2)
    assert P.min_distance() == 6  # still MDS
    ones = LinearCode.from_rows(F9, [[1, 1, 1]])
    assert ones.puncture([1]) == LinearCode.from_rows(F9, [[1, 1]])
    with pytest.raises(IndexError):
        C.puncture([9])


def test_monomial_scale(F9):
    rng = np.random.default_rng(8)
    C = random_code(F9, 6, 2, rng)
    assert C.monomial_scale([1] * 6) == C
    a = rng.integers(1, 9, size=6).astype(np.int32)
    S = C.monomial_scale(a)
    assert np.array_equal(S.weight_distribution(), C.weight_distribution())
    with pytest.raises(ValueError):
        C.monomial_scale([0] + [1] * 5)


def test_extend_sum_zero(F9):
    z = LinearCode.zero(F9, 4).extend_sum_zero()
    assert (z.n, z.k) == (5, 0)
    F3 = make_field(3, 1)
    ones = LinearCode.from_rows(F3, [[1, 1, 1]])
    e = ones.extend_sum_zero()
    assert (e.n, e.k) == (4, 1)
    assert e.contains(np.array([1, 1, 1, 0]))
    # every extended codeword sums to zero
    rng = np.random.default_rng(9)
    C = random_code(F9, 6, 3, rng).extend_sum_zero()
    for row in C.gen:
        acc = 0
        for v in row:
            acc = F9.add(acc, int(v))
        assert acc == 0


def test_field_mismatch(F9, F16):
    a = LinearCode.from_rows(F9, [[1, 1]])
    b = LinearCode.from_rows(F16, [[1, 1]])
    with pytest.raises(FieldMismatchError):
        a.is_subcode_of(b)


def test_code_equality_is_row_space_equality(F9):
    rows1 = [[1, 0, 1], [0, 1, 2]]
    rows2 = [[1, 1, F9.add(1, 2)], [0, 1, 2]]  # row-equivalent pair
    assert LinearCode.from_rows(F9, rows1) == LinearCode.from_rows(F9, rows2)


def test_contains(F9):
    C = LinearCode.from_rows(F9, [[1, 0, 1], [0, 1, 2]])
    assert C.contains(np.array([1, 1, F9.add(1, 2)]))
    assert not C.contains(np.array([1, 0, 0]))
