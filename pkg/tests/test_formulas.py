from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import chain, mobile
from mobilehook import corpus, formulas as F
from mobilehook import poset as O
from mobilehook.mobile import HangingPoset, hanging_poset, shape_poset
from mobilehook.qseries import IntPoly, q_int
from mobilehook.shapes import Partition, SkewShape


def test_hlf_examples():
    assert F.hlf_count(Partition((2, 1))) == 2
    assert F.hlf_count(Partition((6,))) == 1
    assert F.hlf_count(Partition((2, 2))) == 2


def test_nhlf_examples():
    assert F.nhlf_count(SkewShape.of((2, 2), (1,))) == 2
    assert F.nhlf_count(SkewShape.of((3, 2, 1))) == F.hlf_count(Partition((3, 2, 1)))
    s = SkewShape.of((2, 2, 2, 1), (1, 1))
    assert F.nhlf_count(s) == O.count_extensions(shape_poset(s))


def test_stanley_examples():
    assert F.stanley_q_hlf(Partition((5,))) == IntPoly([1])
    assert F.stanley_q_hlf(Partition((1, 1, 1, 1))) == IntPoly.monomial(6)
    lam = Partition((2, 2))
    assert F.stanley_q_hlf(lam) == O.eq_stat(shape_poset(SkewShape.of((2, 2))), "maj")


def test_mpp_examples():
    assert F.mpp_q_nhlf(SkewShape.of((2, 2), (1,))) == IntPoly([0, 1, 1])
    assert F.mpp_q_nhlf(SkewShape.of((3, 1))) == F.stanley_q_hlf(Partition((3, 1)))
    s = SkewShape.of((2, 2, 2, 1), (1, 1))
    assert F.mpp_q_nhlf(s) == O.eq_stat(shape_poset(s), "maj")


@pytest.mark.parametrize("h, expected", [
    (HangingPoset.chain(3), IntPoly([1])),
    (HangingPoset.star(2), q_int(2)),
    (HangingPoset.straight((2, 2)), None),
])
def test_dcomplete_and_bw_examples(h, expected):
    P = hanging_poset(h)
    got = F.dcomplete_maj(h)
    assert got == O.eq_stat(P, "maj")
    if expected is not None:
        assert got == expected
        assert F.bw_tree_inv(h) == expected == O.eq_stat(P, "inv")


def test_bw_broom():
    broom = HangingPoset.tree([-1, 0, 1, 1])
    assert F.bw_tree_inv(broom) == O.eq_stat(hanging_poset(broom), "inv")


def test_bw_rejects_bad_input():
    with pytest.raises(ValueError):
        F.bw_tree_inv(HangingPoset.straight((2, 1)))
    star = HangingPoset.star(2)
    with pytest.raises(ValueError):
        F.bw_tree_inv(star, [1, 3, 2])  # root below a leaf label
    tree = HangingPoset.tree([-1, 0, 0, 1])
    # natural but the subtree at node 1 gets labels {1, 3}
    order = hanging_poset(tree).names
    lab = {3: 1, 2: 2, 1: 3, 0: 4}
    with pytest.raises(ValueError):
        F.bw_tree_inv(tree, [lab[x] for x in order])


def test_dcomplete_rejects_labeled_shapes():
    h = HangingPoset.straight((2, 1))
    with pytest.raises(ValueError):
        F.dcomplete_maj(h, [3, 2, 1])


@pytest.mark.parametrize("h", corpus.small_hangings(6), ids=lambda h: str(h.to_json()))
def test_dcomplete_all_small(h):
    P = hanging_poset(h)
    assert F.dcomplete_maj(h) == O.eq_stat(P, "maj")
    if h.kind == "tree":
        assert F.bw_tree_inv(h) == O.eq_stat(P, "inv")


@given(st.sampled_from(corpus.small_hangings(6)).filter(lambda h: h.kind == "tree"), st.randoms())
@settings(max_examples=80, deadline=None)
def test_dcomplete_tree_any_labeling(h, rnd):
    labels = list(range(1, h.size + 1))
    rnd.shuffle(labels)
    P = hanging_poset(h, labels)
    assert F.dcomplete_maj(h, labels) == O.eq_stat(P, "maj")


def test_major_example(major_mobile):
    H = F.mobile_maj_H(major_mobile)
    assert H.coeffs[-4:] == (11, 6, 2, 1)
    assert H.degree == 61 and H.valuation == 12
    assert H.coeffs[12:15] == (1, 2, 6)
    assert F.mobile_count(major_mobile) == 33000
    assert H == O.eq_stat(major_mobile.to_poset(), "maj")


def test_inversion_example(inversion_mobile):
    H = F.mobile_inv_H(inversion_mobile)
    assert H.coeffs[-4:] == (17, 9, 4, 1)
    assert H.coeffs[4:6] == (1, 4)
    assert H.degree == 38 and H.valuation == 4
    assert H == O.eq_stat(inversion_mobile.omega_inv_labeling(), "inv")


def test_mobile_small_cases(v_mobile):
    assert F.mobile_maj_H(v_mobile) == F.mpp_q_nhlf(v_mobile.strip)
    assert F.mobile_inv_H(v_mobile) == F.mobile_maj_H(v_mobile)
    m = mobile((2, 2), (1,), ((2, 2), chain(2)))
    assert F.mobile_maj_H(m) == O.eq_stat(m.to_poset(), "maj")
    assert F.mobile_inv_H(m) == O.eq_stat(m.omega_inv_labeling(), "inv")
    assert F.mobile_count(v_mobile) == 2
    assert F.mobile_count(mobile((1,), (), ((1, 1), chain(4)))) == 1


def test_inv_rejects_shape_hangings(major_mobile):
    with pytest.raises(ValueError):
        F.mobile_inv_H(major_mobile)


def test_recurrence_hand_case(v_mobile):
    # e = q^2 * e(single cell) + q^0 * e(2-chain, left piece empty) = q + q^2
    r = F.verify_maj_recurrence(v_mobile)
    assert r.match and r.computed == IntPoly([0, 1, 1])
    r = F.verify_inv_recurrence(v_mobile)
    assert r.match and r.details["exponents"] == {"(1, 2)": 2, "(2, 1)": 0}


def test_recurrence_single_cell():
    m = mobile((1,))
    assert F.verify_maj_recurrence(m).computed == IntPoly([1])
    assert F.verify_inv_recurrence(m).match


def test_bounds(major_mobile):
    lo, hi = F.bounds(major_mobile)
    assert lo <= 33000 <= hi and hi == 3 * lo
    straight = mobile((1,), (), ((1, 1), HangingPoset.straight((2, 1))))
    lo, hi = F.bounds(straight)
    assert lo == hi == O.count_extensions(straight.to_poset())


@pytest.mark.parametrize("kind", ["C", "A"])
@pytest.mark.parametrize("p", [0, 1, 2])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_euler_family(kind, p, k):
    m = F.euler_family(kind, p, k)
    assert m.n == 2 * k + k * p
    e = O.count_extensions(m.to_poset(), 20)
    lo, hi = F.bounds(m)
    assert lo <= e <= hi
    assert F.mobile_count(m) == e
    assert (lo, hi) == F.zigzag_closed_form(kind, p, k)


def test_euler_zero_is_euler_numbers():
    assert [F.mobile_count(F.euler_family("C", 0, k)) for k in (1, 2, 3, 4)] == [1, 5, 61, 1385]


def test_euler_family_errors():
    with pytest.raises(ValueError):
        F.euler_family("B", 1, 2)
    with pytest.raises(ValueError):
        F.euler_family("C", -1, 2)


def test_report_json(major_mobile):
    r = F.report_maj(major_mobile)
    data = r.to_json()
    assert data["match"] is True and data["computed"] == data["oracle"]
    assert F.FormulaReport("x", "y", Fraction(1, 2), Fraction(1, 2)).match


MIXED = corpus.mobile_corpus(80, seed=11)
TREES = corpus.mobile_corpus(60, seed=12, trees_only=True)


@pytest.mark.parametrize("m", MIXED, ids=lambda m: str(m.to_json()))
def test_maj_formula_and_chevalley(m):
    assert F.mobile_maj_H(m) == O.eq_stat(m.to_poset(), "maj")
    assert F.verify_chevalley(m, "maj").match
    assert F.verify_maj_recurrence(m).match


@pytest.mark.parametrize("m", TREES, ids=lambda m: str(m.to_json()))
def test_inv_formula_and_chevalley(m):
    assert F.mobile_inv_H(m) == O.eq_stat(m.omega_inv_labeling(), "inv")
    assert F.verify_chevalley(m, "inv").match
    assert F.verify_inv_recurrence(m).match


@pytest.mark.parametrize("m", MIXED[:30], ids=lambda m: str(m.to_json()))
def test_p_hat_invariant(m):
    from mobilehook.excited import enumerate_diagrams
    assert len({F.p_hat(m, D) for D in enumerate_diagrams(m.strip)}) == 1
