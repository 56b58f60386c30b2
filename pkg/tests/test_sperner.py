import pytest

from spernerlib.bigcomb import central_binom
from spernerlib.errors import HypothesisError, InputError, ResourceLimitError
from spernerlib.poset_core import (antichain_poset, cardinal_sum, chain_poset,
                                   is_order_embedding, poset_from_covers,
                                   powerset_poset, v_poset, w_poset)
from spernerlib.sperner import (SpernerResult, asp_bounded, asp_dispatch,
                                asp_general_bracket, asp_length_matching,
                                min_embedding, min_embedding_dimension,
                                sp_bounded, sp_dispatch, sp_general_bracket,
                                sp_length_matching, vw_pattern_kind)


def test_sperner_result_invariants():
    r = SpernerResult(3, 3, "x")
    assert r.exact and r.value == 3
    r = SpernerResult(3, 5, "x")
    assert not r.exact and r.value is None
    with pytest.raises(InputError):
        SpernerResult(5, 3, "x")


# --- minimum embedding dimension -------------------------------------------------

def test_min_embedding_known_dimensions():
    cases = [
        (chain_poset(0), 0),
        (chain_poset(1), 1),
        (chain_poset(4), 4),
        (antichain_poset(2), 2),
        (antichain_poset(3), 3),
        (v_poset(), 2),
        (w_poset(), 3),
        (powerset_poset(2), 2),
        (powerset_poset(3), 3),
    ]
    for pattern, p in cases:
        n, emb = min_embedding(pattern)
        assert n == p, pattern
        assert is_order_embedding(emb, pattern)


def test_min_embedding_duals_match():
    for pattern in (v_poset(), w_poset(), chain_poset(3)):
        assert (min_embedding_dimension(pattern)
                == min_embedding_dimension(pattern.dual()))


def test_min_embedding_two_disjoint_edges():
    # two disjoint 2-chains need 3 coordinates: {1}<{1,2}, {3}<{2,3} works,
    # and 2 coordinates hold no two unrelated 2-chains
    pattern = cardinal_sum(chain_poset(1), 2)
    n, emb = min_embedding(pattern)
    assert n == 3
    assert is_order_embedding(emb, pattern)


def test_min_embedding_cap():
    with pytest.raises(ResourceLimitError):
        min_embedding(antichain_poset(17))


def test_min_embedding_images_are_valid_even_for_antichains():
    n, emb = min_embedding(antichain_poset(4))
    assert n == 4
    assert len(set(emb.images)) == 4


# --- exact routes ------------------------------------------------------------------

def test_sp_bounded_chain_values():
    c4 = chain_poset(4)
    assert sp_bounded(c4, 17).value == 1716
    assert sp_bounded(c4, 18).value == 3432
    assert sp_bounded(c4, 4).value == 1
    assert sp_bounded(c4, 3).value == 0
    assert sp_bounded(c4, 0).value == 0


def test_sp_bounded_cube_pattern():
    # the 2-cube embeds with p = 2, so the count is the central layer of n-2
    b2 = powerset_poset(2)
    for n in range(2, 9):
        assert sp_bounded(b2, n).value == central_binom(n - 2)


def test_sp_bounded_rejects_unbounded():
    with pytest.raises(HypothesisError):
        sp_bounded(v_poset(), 5)
    with pytest.raises(HypothesisError):
        asp_bounded(w_poset(), 2)


def test_asp_bounded_is_adjoint_of_sp_bounded():
    c3 = chain_poset(3)
    for k in (1, 2, 3, 6, 7, 20, 21, 1000):
        n = asp_bounded(c3, k).value
        assert sp_bounded(c3, n).value >= k
        assert n == 0 or sp_bounded(c3, n - 1).value < k


def test_length_matching_needs_matching_length():
    # 0 < 1 < 3, 0 < 2 < 3 has length 2 = embedding dimension, so the
    # length-matching route applies and must agree with the bounded one
    diamond = poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert min_embedding_dimension(diamond) == 2
    for n in range(2, 8):
        assert (sp_length_matching(diamond, n).value
                == sp_bounded(diamond, n).value)
    with pytest.raises(HypothesisError):
        sp_length_matching(v_poset(), 4)   # length 1, dimension 2
    with pytest.raises(HypothesisError):
        asp_length_matching(w_poset(), 3)


# --- brackets and dispatch -----------------------------------------------------------

def test_sp_general_bracket_contains_truth_for_w():
    # exhaustive values for W at n = 3..5 are 1, 1, 2
    for n, truth in ((3, 1), (4, 1), (5, 2)):
        r = sp_general_bracket(w_poset(), n)
        assert r.lo <= truth <= r.hi


def test_asp_general_bracket_k1_is_dimension():
    assert asp_general_bracket(w_poset(), 1).value == 3
    assert asp_general_bracket(v_poset(), 1).value == 2


def test_vw_pattern_kind():
    assert vw_pattern_kind(v_poset()) == "v"
    assert vw_pattern_kind(w_poset()) == "w"
    assert vw_pattern_kind(v_poset().dual()) == "v"
    assert vw_pattern_kind(w_poset().dual()) == "w"
    assert vw_pattern_kind(chain_poset(2)) is None
    assert vw_pattern_kind(antichain_poset(3)) is None


def test_sp_dispatch_routes():
    assert sp_dispatch(chain_poset(4), 17).method == "bounded-formula"
    r = sp_dispatch(antichain_poset(2), 5)
    assert r.method == "general-bracket"
    assert r.lo == 3 and r.hi == 10   # truth is 5: half the middle layer
    r = sp_dispatch(v_poset(), 6)
    assert (r.lo, r.hi, r.method, r.collapsed) == (7, 7, "V-bracket", True)
    r = sp_dispatch(w_poset(), 10)
    assert (r.lo, r.hi, r.method) == (66, 70, "W-bracket")
    assert sp_dispatch(w_poset(), 2).method == "dimension-bound"
    assert sp_dispatch(w_poset(), 2).value == 0


def test_sp_dispatch_single_element_is_antichain_count():
    # copies of the one-element pattern are plain subsets, so the largest
    # unrelated family is a largest antichain
    single = antichain_poset(1)
    for n in range(0, 8):
        assert sp_dispatch(single, n).value == central_binom(n)


def test_asp_dispatch_routes_and_values():
    assert asp_dispatch(w_poset(), 1).value == 3
    r = asp_dispatch(w_poset(), 2)
    assert (r.lo, r.hi, r.method) == (4, 5, "W-bracket")
    r = asp_dispatch(v_poset(), 3 * 10 ** 606)
    assert (r.value, r.method, r.collapsed) == (2023, "V-bracket", True)
    assert asp_dispatch(chain_poset(4), 2022).value == 18
    r = asp_dispatch(v_poset().dual(), 2022)
    assert (r.value, r.method) == (15, "V-bracket")


def test_dispatch_rejects_bad_args():
    with pytest.raises(InputError):
        sp_dispatch(v_poset(), -1)
    with pytest.raises(InputError):
        asp_dispatch(v_poset(), 0)
