import pytest
from fractions import Fraction

from minorcert.detkit import adjugate, det_bareiss, s_functional
from minorcert.identity import (
    bt_suite,
    johnson_numeric_suite,
    lemmas_suite,
    minor_scaling_check,
    rankone_suite,
    specialization_certificate,
    verify_bt,
    verify_johnson_symbolic,
    verify_rank_one_expansion,
    verify_reduced_case,
    verify_skew_facts,
)
from minorcert.matrix import (
    Matrix,
    generic_skew_toeplitz,
    identity,
    johnson_family,
    ones,
    outer,
    zeros,
)
from minorcert.ring import MultiPoly, variables
from minorcert.rng import random_fraction_matrix, random_skew_int, substream


def test_johnson_n2_direct():
    rep = verify_johnson_symbolic(2)
    assert rep.verified and rep.residual == "0"


def test_johnson_n3_hand_expansion():
    # frozen from the cofactor-oracle expansion of the three 2x2 minors
    a = johnson_family(3)
    b1, b2 = variables(2)
    assert det_bareiss(a.block(2, 1, 2)) == b1 * b1 + 2 * b1 - b2
    assert det_bareiss(a.block(2, 2, 1)) == b1 * b1 - 2 * b1 + b2
    assert 2 * det_bareiss(a.block(2, 1, 1)) == 2 * b1 * b1
    assert verify_johnson_symbolic(3).verified


@pytest.mark.parametrize("n", range(2, 7))
def test_johnson_symbolic_small_orders(n):
    rep = verify_johnson_symbolic(n)
    assert rep.verified
    assert rep.claim == f"johnson_symbolic_n{n}"


def test_johnson_rejects_out_of_range():
    with pytest.raises(ValueError):
        verify_johnson_symbolic(1)
    with pytest.raises(ValueError):
        verify_johnson_symbolic(9)
    assert verify_johnson_symbolic(9, max_n=9).verified


def test_johnson_symbolic_certificate_holds_at_random_rational_points():
    n = 5
    a = johnson_family(n)
    m = n - 1
    stream = substream(404, 0)
    d12 = det_bareiss(a.block(m, 1, 2))
    d21 = det_bareiss(a.block(m, 2, 1))
    d11 = det_bareiss(a.block(m, 1, 1))
    residual = d12 + d21 - 2 * d11
    for _ in range(50):
        point = [
            Fraction(stream.randint(-8, 8), stream.randint(1, 5))
            for _ in range(n - 1)
        ]
        assert residual.evaluate(point) == 0


def test_reduced_case_n3_hand_values():
    b = generic_skew_toeplitz(3)
    b1, _ = variables(2)
    assert det_bareiss(b.block(2, 1, 1)) == b1 * b1
    assert det_bareiss(b.block(2, 1, 2)) == b1 * b1
    assert verify_reduced_case(3).verified


@pytest.mark.parametrize("n", range(3, 7))
def test_reduced_case_small_orders(n):
    rep = verify_reduced_case(n)
    assert rep.verified
    if (n - 1) % 2:
        assert rep.instance["parity"] == "odd"
        assert rep.instance["square_residual"] == "0"


def test_reduced_case_specialized_determinants_are_one():
    # m = 4 blocks of the order-5 family at b = (1,0,0,0)
    b = generic_skew_toeplitz(5)
    point = [1, 0, 0, 0]
    k_num = b.block(4, 1, 1).map(lambda p: p.evaluate(point))
    c_num = b.block(4, 1, 2).map(lambda p: p.evaluate(point))
    assert det_bareiss(k_num) == 1
    assert det_bareiss(c_num) == 1


def test_reduced_case_rejects_small_order():
    with pytest.raises(ValueError):
        verify_reduced_case(2)


def test_parity_chain_at_random_rational_points():
    # the equivalence chain behind the reduction: for random rational B,
    # det(J+C) + det(J-C) = 2 det(J+K) matches the original three-minor
    # identity, and the parity formulas for both sides hold
    for n in (4, 5):
        m = n - 1
        stream = substream(505, n)
        b_sym = generic_skew_toeplitz(n)
        point = [
            Fraction(stream.randint(-6, 6), stream.randint(1, 4))
            for _ in range(n - 1)
        ]
        b = b_sym.map(lambda p: p.evaluate(point))
        a = ones(n) + b
        j = ones(m)
        k_blk = b.block(m, 1, 1)
        c_blk = b.block(m, 1, 2)
        lhs_chain = det_bareiss(j + c_blk) + det_bareiss(j - c_blk)
        rhs_chain = 2 * det_bareiss(j + k_blk)
        johnson_lhs = det_bareiss(a.block(m, 1, 2)) + det_bareiss(a.block(m, 2, 1))
        assert lhs_chain == rhs_chain == johnson_lhs
        if m % 2 == 0:
            assert lhs_chain == 2 * det_bareiss(c_blk)
            assert det_bareiss(j + k_blk) == det_bareiss(k_blk)
        else:
            assert lhs_chain == 2 * s_functional(c_blk)
            assert det_bareiss(j + k_blk) == s_functional(k_blk)


def test_rank_one_expansion_trivial_cases():
    rep = verify_rank_one_expansion(identity(2), 1)
    assert rep.verified
    assert det_bareiss(identity(2) + ones(2)) == 3
    rep = verify_rank_one_expansion(zeros(2), 1)
    assert rep.verified


def test_rank_one_expansion_random_exact():
    reports = rankone_suite(trials=10, seed=42)
    assert all(r.verified for r in reports)
    assert all(r.residual == "0" for r in reports)


def test_skew_facts_small():
    y = Matrix.from_rows([[0, 1], [-1, 0]])
    rep = verify_skew_facts(y)
    assert rep.verified
    adj = adjugate(y)
    assert adj.T == -adj
    assert s_functional(y) == 0


def test_skew_facts_generic_orders():
    assert verify_skew_facts(generic_skew_toeplitz(5)).verified  # odd: det = 0
    assert det_bareiss(generic_skew_toeplitz(5)) == 0
    rep = verify_skew_facts(generic_skew_toeplitz(4))  # even: s(Y) = 0
    assert rep.verified and rep.residual == "0"


def test_skew_facts_rejects_non_skew():
    with pytest.raises(ValueError):
        verify_skew_facts(identity(3))


@pytest.mark.parametrize("m,expected", [(3, 4), (5, 9), (7, 16)])
def test_specialization_odd_values(m, expected):
    rep = specialization_certificate(m)
    assert rep.verified
    assert rep.instance["s_C"] == expected
    assert rep.instance["s_K"] == expected
    assert rep.instance["adj_K_is_uuT"]
    assert rep.instance["det_K_tail"] == 1


def test_specialization_m3_inverse_vector():
    rep = specialization_certificate(3)
    assert rep.instance["Cinv_ones"] == [1, 1, 2]


def test_specialization_m5_adjugate_is_uuT():
    shift_pattern = [1, 0, 1, 0, 1]
    from minorcert.identity import _specialized_k
    k = _specialized_k(5)
    assert adjugate(k) == outer(shift_pattern)


@pytest.mark.parametrize("m", [2, 4, 6])
def test_specialization_even_values(m):
    rep = specialization_certificate(m)
    assert rep.verified
    assert rep.instance["det_K"] == 1
    assert rep.instance["det_C"] == 1


def test_specialization_matches_generic_blocks():
    # the hard-coded specialized K equals the evaluated block of the
    # generic skew family
    from minorcert.identity import _specialized_k
    m = 5
    b = generic_skew_toeplitz(m + 1)
    point = [1] + [0] * (m - 1)
    assert b.block(m, 1, 1).map(lambda p: p.evaluate(point)) == _specialized_k(m)


def test_specialization_rejects_small():
    with pytest.raises(ValueError):
        specialization_certificate(1)


def test_minor_scaling_trivial_weights():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    rep = minor_scaling_check(a, [1, 1], [(1, 1, 1), (1, 2, 2)])
    assert rep.verified


def test_minor_scaling_identity_example():
    rep = minor_scaling_check(identity(3), [1, 2, 3], [(2, 1, 1)])
    assert rep.verified


def test_minor_scaling_random_rational():
    for t in range(30):
        stream = substream(606, t)
        a = random_fraction_matrix(stream, 5)
        w = [stream.randint(1, 5) for _ in range(5)]
        blocks = [(4, 1, 1), (4, 2, 2), (4, 1, 2), (4, 2, 1)]
        assert minor_scaling_check(a, w, blocks).verified


def test_minor_scaling_rejects_zero_weight():
    with pytest.raises(ValueError):
        minor_scaling_check(identity(2), [1, 0], [(1, 1, 1)])


def test_bt_trivial_all_ones():
    rep = verify_bt(zeros(2), 2, [1, 1])
    assert rep.verified


def test_bt_toeplitz_case_exact():
    # numeric skew-Toeplitz with b = (1, 2) plus the all-ones symmetric part
    skew = Matrix.from_rows([[0, 1, 2], [-1, 0, 1], [-2, -1, 0]])
    rep = verify_bt(skew, 2, [1, 1, 1])
    assert rep.verified and rep.residual == "0"
    a = skew + ones(3)
    assert all(
        det_bareiss(a.block(2, i, j)) == 1 for i, j in [(1, 1), (2, 2), (1, 2), (2, 1)]
    )


def test_bt_with_zero_weight_component():
    stream = substream(707, 0)
    skew = random_skew_int(stream, 4)
    rep = verify_bt(skew, -3, [1, 0, 2, -1])
    assert rep.verified and rep.residual == "0"


def test_bt_rejects_non_skew():
    with pytest.raises(ValueError):
        verify_bt(identity(3), 1, [1, 1, 1])
    with pytest.raises(ValueError):
        verify_bt(zeros(3), 1, [0, 0, 0])


def test_bt_suite_exact_and_float():
    exact = bt_suite(5, 10, seed=9, scalar="rat")
    assert all(r.verified for r in exact)
    assert all(r.residual == "0" for r in exact)
    approx = bt_suite(6, 10, seed=9, scalar="real")
    assert all(r.verified for r in approx)


def test_johnson_numeric_suite():
    reports = johnson_numeric_suite(12, 100, seed=3)
    assert len(reports) == 100
    assert all(r.verified for r in reports)
    assert all(r.seed == 3 for r in reports)
    assert max(r.instance["n"] for r in reports) > 8  # orders reach beyond the symbolic cap


def test_lemmas_suite_composition():
    reports = lemmas_suite(5, trials=5, seed=12)
    claims = [r.claim for r in reports]
    assert claims == sorted(claims)
    assert any(c.startswith("reduced_case_n5") for c in claims)
    assert any(c.startswith("skew_facts_m4") for c in claims)
    assert any(c.startswith("rankone_expansion_t004") for c in claims)
    assert all(r.verified for r in reports)


def test_report_json_shape():
    rep = verify_johnson_symbolic(3)
    doc = rep.to_json()
    assert set(doc) == {"claim", "status", "residual", "instance", "seed", "tolerance"}
