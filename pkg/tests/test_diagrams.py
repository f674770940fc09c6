"""Closure diagrams: structure, orientations, placement, resolutions."""

from itertools import product
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khovanov_cables import planar
from khovanov_cables.braids import (
    BraidWord,
    braid_closure,
    cable_word,
    full_twist,
    random_braid,
    row_word,
)


def closure(*letters, strands=None):
    n = strands or (max(abs(l) for l in letters) + 1 if letters else 1)
    return braid_closure(BraidWord(n, tuple(letters)))


# -- braid words -----------------------------------------------------------


def test_word_roundtrip():
    w = BraidWord(4, (1, -2, 3, 3, -1))
    assert BraidWord.from_text(w.to_text()) == w
    assert w.inverse().inverse() == w
    assert (w * w.inverse()).writhe == 0
    assert w.mirror().writhe == -w.writhe


def test_word_validation():
    with pytest.raises(AssertionError):
        BraidWord(2, (2,))
    with pytest.raises(AssertionError):
        BraidWord(3, (0,))


def test_permutation_cycles():
    assert BraidWord(2, (1,)).permutation() == [1, 0]
    assert BraidWord(3, (1, 2)).permutation() == [2, 0, 1]
    assert len(BraidWord(2, (1, 1)).closure_cycles()) == 2
    assert len(BraidWord(2, (1, 1, 1)).closure_cycles()) == 1
    assert len(BraidWord(3, ()).closure_cycles()) == 3


def test_row_word_shapes():
    assert row_word(1, 2, 2).letters == (1, 2, 1, 2, 1, 2)
    assert row_word(1, 1, 2, flipped=True).letters == (1, 2, 1, 2)
    assert row_word(0, 0, 0).strands == 1
    assert row_word(0, 0, 0).letters == ()
    w = row_word(2, 3, 1)
    assert w.strands == 5 and len(w.letters) == 13
    # flipping reverses the word and relabels each letter j to n - j
    a, b = row_word(2, 1, 3), row_word(2, 1, 3, flipped=True)
    assert b.letters == tuple(a.strands - j for j in reversed(a.letters))


def test_full_twist_writhe():
    assert full_twist(3, 1).writhe == 6
    assert full_twist(3, -2).writhe == -12
    assert full_twist(1, 5).letters == ()


def test_cable_word_block():
    assert cable_word(BraidWord(2, (1,)), 2).letters == (2, 1, 3, 2)
    assert cable_word(BraidWord(2, (-1,)), 2).letters == (-2, -1, -3, -2)
    w = cable_word(BraidWord(3, (1, -2)), 3)
    assert w.strands == 9 and len(w.letters) == 18
    # cabling preserves writhe density: each letter becomes width^2 letters
    assert w.writhe == 0


# -- closures --------------------------------------------------------------


def test_closure_unknot_one_crossing():
    D = closure(1)
    D.validate()
    assert D.n_crossings == 1 and len(D.edges) == 2
    assert len(D.components()) == 1
    assert D.writhe() == 1 and D.n_minus() == 0


def test_closure_loops_only():
    D = closure(strands=3)
    D.validate()
    assert D.n_crossings == 0 and len(D.loops) == 3
    assert len(D.components()) == 3


def test_closure_trefoil():
    D = closure(1, 1, 1)
    D.validate()
    assert len(D.components()) == 1
    assert (D.writhe(), D.n_plus(), D.n_minus()) == (3, 3, 0)
    M = D.mirror()
    M.validate()
    assert (M.writhe(), M.n_plus(), M.n_minus()) == (-3, 0, 3)
    R = D.reverse_all()
    R.validate()
    assert R.writhe() == 3


def test_hopf_linking():
    D = closure(1, 1)
    assert len(D.components()) == 2
    assert D.linking_number({0}, {1}) == 1
    assert D.linking_number({0}, {1}, flips=frozenset({1})) == -1
    assert D.mirror().linking_number({0}, {1}) == -1
    assert D.inter_component_crossings({0}) == 2


def test_flipped_signs():
    D = closure(1, 1)
    assert D.n_minus() == 0
    assert D.n_minus(frozenset({0})) == 2
    assert D.oriented_smoothings() == {c: 0 for c in D.crossings}
    assert D.oriented_smoothings(frozenset({0})) == {c: 1 for c in D.crossings}


def test_multi_piece_closure():
    # two separated pieces plus two untouched strands
    D = closure(1, 1, 4, 4, strands=6)
    D.validate()
    assert len(D.pieces()) == 2
    assert len(D.loops) == 2
    assert len(D.components()) == 6


def test_disjoint_union_and_free_loop():
    A = closure(1, 1, 1)
    B = closure(1, 1)
    D = A.disjoint_union(B)
    D.validate()
    assert D.n_crossings == 5 and len(D.components()) == 3
    E = A.with_free_loop()
    E.validate()
    assert len(E.components()) == 2


def test_add_kink():
    T = closure(1, 1, 1)
    e = min(T.edges)
    for sign in (1, -1):
        K = T.add_kink(e, sign)
        K.validate()
        assert K.writhe() == 3 + sign
        assert K.n_crossings == 4
        assert len(K.components()) == 1
    K = T.add_kink(e, 1)
    KK = K.add_kink(min(K.edges), -1)
    KK.validate()
    assert KK.writhe() == 3


# -- resolutions -----------------------------------------------------------


def test_resolve_trefoil():
    T = closure(1, 1, 1)
    c = min(T.crossings)
    H, em = T.resolve_crossing(c, 0)
    H.validate()
    assert H.n_crossings == 2 and len(H.components()) == 2
    assert H.writhe() == 2  # oriented smoothing leaves the positive Hopf form
    U, em = T.resolve_crossing(c, 1)
    U.validate()
    assert U.n_crossings == 2 and len(U.components()) == 1


def test_resolve_frees_circles():
    # both smoothings of the one-crossing unknot shed every crossing;
    # the state with two circles and the state with one both come out
    # as crossing-free loops now
    D = closure(1)
    c = min(D.crossings)
    sizes = set()
    for r in (0, 1):
        R, em = D.resolve_crossing(c, r)
        R.validate()
        assert R.n_crossings == 0 and not R.edges
        assert not em
        sizes.add(len(R.loops))
    assert sizes == {1, 2}


def test_resolve_edge_map_is_total():
    D = closure(1, -2, 1, -2)
    for c in sorted(D.crossings):
        for r in (0, 1):
            try:
                R, em = D.resolve_crossing(c, r)
            except NotImplementedError:
                continue
            R.validate()
            assert set(em) >= set(D.edges)
            for old, (new, rev) in em.items():
                if old in D.edges:
                    assert new in R.edges


def test_resolve_random_sweep():
    rng = Random(11)
    done = refused = 0
    for _ in range(25):
        w = random_braid(rng, rng.randint(2, 5), rng.randint(2, 7))
        D = braid_closure(w)
        D.validate()
        for c in sorted(D.crossings):
            for r in (0, 1):
                try:
                    R, _ = D.resolve_crossing(c, r)
                except NotImplementedError:
                    refused += 1
                    continue
                R.validate()
                done += 1
    assert done > 100


# -- resolved-state planar data -------------------------------------------


def test_trefoil_state_circles():
    D = closure(1, 1, 1)
    cids = sorted(D.crossings)
    counts = {}
    for bits in product((0, 1), repeat=3):
        rs = planar.ResolvedState(D, dict(zip(cids, bits)))
        counts[bits] = len(rs.circles)
    assert counts[(0, 0, 0)] == 2
    assert counts[(1, 1, 1)] == 3
    for bits, n in counts.items():
        k = sum(bits)
        assert n == (2 if k == 0 else k)


def test_trefoil_oriented_state_parities():
    D = closure(1, 1, 1)
    sm = D.oriented_smoothings()
    rs = planar.ResolvedState(D, sm)
    assert rs.nesting == [0, 1]
    assert [rs.parity(i, frozenset()) for i in range(2)] == [0, 1]
    # nested circles of one orientation class always alternate parity
    assert [rs.cw_indicator(i, frozenset()) for i in range(2)] == [0, 0]


def test_hopf_oriented_state_parities():
    D = closure(1, 1)
    rs = planar.ResolvedState(D, D.oriented_smoothings())
    assert len(rs.circles) == 2
    assert sorted(rs.parity(i, frozenset()) for i in range(2)) == [0, 1]


def test_nested_loops_and_pieces_depths():
    D = closure(1, 1, 4, 4, strands=6)
    rs = planar.ResolvedState(D, D.oriented_smoothings())
    # identity smoothing: columns nest west to east; untouched strands sit
    # in the face of the nearest edged column west of them
    assert rs.nesting == [0, 1, 2, 3, 2, 4]


def test_loop_parity_matches_edged_presentation():
    # unlink beside a trefoil, once as a loop and once as a closure strand
    A = closure(1, 1, 1, strands=3)  # third strand untouched -> loop
    rsA = planar.ResolvedState(A, A.oriented_smoothings())
    loop_idx = next(
        i for i, c in enumerate(rsA.circles) if c.loop is not None
    )
    assert rsA.nesting[loop_idx] == 2
    assert rsA.parity(loop_idx, frozenset()) == 0


def test_reversal_flips_cw_not_nesting():
    D = closure(1, 1, 1)
    rs = planar.ResolvedState(D, D.oriented_smoothings())
    base = [rs.cw_indicator(i, frozenset()) for i in range(2)]
    flipped = [rs.cw_indicator(i, frozenset({0})) for i in range(2)]
    assert base != flipped
    assert rs.nesting == [0, 1]


def test_state_sweep_invariants():
    rng = Random(23)
    for _ in range(15):
        w = random_braid(rng, rng.randint(2, 4), rng.randint(1, 5))
        D = braid_closure(w)
        cids = sorted(D.crossings)
        for bits in product((0, 1), repeat=len(cids)):
            rs = planar.ResolvedState(D, dict(zip(cids, bits)))
            n = len(rs.circles)
            assert all(d >= 0 for d in rs.nesting)
            for i in range(n):
                assert rs.parity(i, frozenset()) in (0, 1)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_closure_always_validates(rnd):
    w = random_braid(rnd, rnd.randint(1, 6), rnd.randint(0, 8))
    D = braid_closure(w)
    D.validate()
    assert D.writhe() == w.writhe
    assert len(D.components()) == len(w.closure_cycles())
    assert D.n_plus() == w.n_plus and D.n_minus() == w.n_minus
