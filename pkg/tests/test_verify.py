import pytest

from mobilehook import corpus, verify


def test_corpus_is_deterministic():
    a = corpus.mobile_corpus(50, seed=3)
    b = corpus.mobile_corpus(50, seed=3)
    assert [m.to_json() for m in a] == [m.to_json() for m in b]
    assert [m.to_json() for m in a] != [m.to_json() for m in corpus.mobile_corpus(50, seed=4)]


def test_corpus_bounds():
    pool = corpus.all_mobiles()
    assert len(pool) >= 200
    assert all(m.n <= 11 and m.lam[1] <= 4 and len(m.lam) <= 4 for m in pool)
    assert all(m.is_tree_mobile() for m in corpus.all_mobiles(trees_only=True))
    assert len(corpus.mobile_corpus(240)) == 240


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 16), (5, 63), (6, 318), (7, 2045)])
def test_posets_up_to_iso_counts(n, count):
    assert len(corpus.posets_up_to_iso(n)) == count


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 4), (5, 9), (6, 20), (7, 48), (8, 115)])
def test_rooted_tree_counts(n, count):
    assert len(corpus.rooted_trees(n)) == count


def test_tiny_suite_is_green_and_deterministic():
    a = verify.run_suite("tiny", workers=1, include_classical=False)
    b = verify.run_suite("tiny", workers=1, include_classical=False)
    assert a.ok, [c.to_json() for c in a.checks if not c.ok]
    assert a.to_json() == b.to_json()


def test_parallel_matches_serial():
    a = verify.run_suite("tiny", workers=1, include_classical=False)
    b = verify.run_suite("tiny", workers=2, include_classical=False)
    assert a.to_json() == b.to_json()


def test_unknown_corpus():
    with pytest.raises(ValueError):
        verify.run_suite("huge")
