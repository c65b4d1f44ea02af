import random

import pytest

from lrbasis import (check_basis, check_e1_factorization, check_hwv,
                     check_leading_term, delta, delta_MT, enumerate_lr,
                     raising_operator_cols, raising_operator_rows,
                     validate_triple, weight_profile)
from lrbasis.errors import NotHomogeneous, ZeroPolynomial
from lrbasis.intlinalg import bareiss_det, int_rank
from lrbasis.polyring import Polynomial, mono, xvar, yvar
from lrbasis.sampling import random_triple


def test_raising_operator_rows_basic():
    tr = validate_triple([1], [1], [2])
    p = Polynomial.variable(xvar(2, 1))
    q = raising_operator_rows(p, 1, 2, tr)
    assert q == Polynomial.variable(xvar(1, 1))
    # power rule: applying to x21^3 gives 3 x11 x21^2
    p3 = p * p * p
    q3 = raising_operator_rows(p3, 1, 2, tr)
    assert q3 == 3 * Polynomial.variable(xvar(1, 1)) * p * p


def test_raising_operator_cols_basic():
    tr = validate_triple([2], [], [2], k=2)
    p = Polynomial.variable(xvar(1, 2))
    assert raising_operator_cols(p, "x", 1, 2, tr) == Polynomial.variable(xvar(1, 1))
    assert raising_operator_cols(p, "y", 1, 2, tr).is_zero()


def test_row_operator_kills_determinant():
    # the 2x2 minor x11 y21 - x21 y11 is invariant in the right way
    tr = validate_triple([1], [1], [2])
    p = delta_MT(tr, enumerate_lr(tr)[0])
    assert raising_operator_rows(p, 1, 2, tr).is_zero()
    assert check_hwv(p, tr)
    # a non-highest vector is caught
    assert not check_hwv(Polynomial.variable(yvar(2, 1)), tr)


def test_weight_profile_values():
    p = Polynomial.variable(xvar(1, 1)) * Polynomial.variable(yvar(2, 1))
    w = weight_profile(p)
    assert w.row_degrees == (1, 1)
    assert w.x_col_degrees == (1,)
    assert w.y_col_degrees == (1,)


def test_weight_profile_errors():
    with pytest.raises(ZeroPolynomial):
        weight_profile(Polynomial())
    p = Polynomial.variable(xvar(1, 1)) + Polynomial.variable(yvar(2, 1))
    with pytest.raises(NotHomogeneous):
        weight_profile(p)


def test_delta_MT_profiles_random():
    rng = random.Random(18)
    for _ in range(10):
        tr = random_triple(rng, 8, require_tableaux=True)
        for T in enumerate_lr(tr):
            p = delta_MT(tr, T)
            assert weight_profile(p).matches(tr)
            assert check_hwv(p, tr)
            assert check_leading_term(tr, T)
            assert check_e1_factorization(tr, T)


def test_numeric_delta_is_hwv():
    rng = random.Random(19)
    for _ in range(8):
        tr = random_triple(rng, 7, require_tableaux=True)
        A = [[rng.randint(-4, 4) for _ in range(tr.r)] for _ in range(tr.t)]
        B = [[rng.randint(-4, 4) for _ in range(tr.s)] for _ in range(tr.t)]
        assert check_hwv(delta(tr, A=A, B=B), tr)


def test_bareiss_det_known():
    assert bareiss_det([]) == 1
    assert bareiss_det([[7]]) == 7
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[2, 0, 1], [1, 1, 0], [0, 3, 1]]) == 5
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_bareiss_det_random_vs_fractions():
    from fractions import Fraction
    rng = random.Random(20)
    for n in range(1, 6):
        for _ in range(10):
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert bareiss_det(m) == _frac_det(m)


def _frac_det(m):
    from fractions import Fraction
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            for j in range(c, n):
                a[i][j] -= f * a[c][j]
    assert det.denominator == 1
    return int(det)


def test_int_rank_known():
    assert int_rank([]) == 0
    assert int_rank([[0, 0], [0, 0]]) == 0
    assert int_rank([[1, 2], [2, 4]]) == 1
    assert int_rank([[1, 2], [3, 4]]) == 2
    assert int_rank([[1, 0, 2], [0, 1, 3]]) == 2
    assert int_rank([[1], [2], [3]]) == 1


def test_int_rank_random_vs_fractions():
    rng = random.Random(21)
    for _ in range(40):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(nc)] for _ in range(nr)]
        assert int_rank(m) == _frac_rank(m)


def _frac_rank(m):
    from fractions import Fraction
    a = [[Fraction(x) for x in row] for row in m]
    nr, nc = len(a), len(a[0])
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(nr):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                for j in range(nc):
                    a[i][j] -= f * a[rank][j]
        rank += 1
    return rank


def test_check_basis_small():
    rep = check_basis(validate_triple([1], [1], [2]))
    assert rep.passed and rep.rank == 1 and rep.mode == "symbolic"
    rep = check_basis(validate_triple([2, 1], [2, 1], [3, 2, 1]))
    assert rep.passed and rep.lr_count == 2 and rep.rank == 2
    assert rep.to_json()["pass"]


def test_check_basis_empty():
    rep = check_basis(validate_triple([2], [], [1, 1]))
    assert rep.lr_count == rep.oracle_count == rep.rank == 0
    assert rep.passed
