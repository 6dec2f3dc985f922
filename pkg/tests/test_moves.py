
import pytest

from turanlab import moves
from turanlab.multipartite import path_embeddings_multipartite

SMALL = [
    (2, 1, (2,)),
    (3, 1, (2, 2)),
    (4, 2, (3, 2, 2)),
    (2, 3, (1, 3)),
    (1, 1, ()),
    (3, 2, ()),
    (2, 2, (1,)),
    (1, 2, (2, 1, 1)),
]


@pytest.mark.parametrize("a, b, rest", SMALL)
def test_group_oracle_agrees_with_vertex_brute_force(a, b, rest):
    for pos in (1, 2, 3):
        assert sum(moves.destroyed_by_group(pos, a, b, rest).values()) == moves.destroyed_by_vertices(pos, a, b, rest)


@pytest.mark.parametrize("a, b, rest", SMALL)
def test_destroyed_minus_created_is_dp_difference(a, b, rest):
    phi = 2 * sum(sum(moves.destroyed_by_group(p, a, b, rest).values()) for p in (1, 2, 3))
    psi = 2 * sum(sum(moves.destroyed_by_group(p, b, a, rest).values()) for p in (1, 2, 3))
    diff = path_embeddings_multipartite((a + 1, b) + rest, 6) - path_embeddings_multipartite((a, b + 1) + rest, 6)
    assert phi - psi == diff


def test_corrected_groups_match_oracle_group_by_group():
    for a, b, rest in moves.sweep_tuples([2, 3, 4, 5], 4, 14):
        for x, y in ((a, b), (b, a)):
            for pos in (1, 2, 3):
                assert moves.phi_groups(pos, x, y, rest, "corrected") == moves.destroyed_by_group(pos, x, y, rest)


def test_verbatim_equals_corrected_with_one_rest_class():
    for a, b, rest in moves.sweep_tuples([3], 8, 24):
        md = moves.move_delta(a, b, rest, variant="verbatim")
        assert md.oracle_match, md


def test_verbatim_symmetric_groups_agree_when_rest_sizes_equal():
    # the published RS/RST sums only assume symmetry of summands, so
    # every group except phi3[RS] (which also needs n_i = b) matches
    for s in range(1, 5):
        for b in range(1, 5):
            for a in (1, 2, 3):
                rest = (s, s, s)
                for pos in (1, 2):
                    assert moves.phi_groups(pos, a, b, rest, "verbatim") == moves.destroyed_by_group(pos, a, b, rest)
                if s == b:
                    assert moves.phi_groups(3, a, b, rest, "verbatim") == moves.destroyed_by_group(3, a, b, rest)


def test_phi1_example_and_tiny_cases():
    g = moves.destroyed_by_group(1, 2, 1, (2,))
    assert moves.phi1(2, 1, (2,), 6) == sum(g.values())
    assert moves.phi2(2, 1, (2,), 6) == sum(moves.destroyed_by_group(2, 2, 1, (2,)).values())
    assert moves.phi3(2, 1, (2,), 6) == sum(moves.destroyed_by_group(3, 2, 1, (2,)).values())
    for f in (moves.phi1, moves.phi2, moves.phi3):
        assert f(1, 1, (1,), 4) == 0


def test_phi_large_example_against_oracle():
    for pos, f in ((1, moves.phi1), (2, moves.phi2), (3, moves.phi3)):
        oracle = sum(moves.destroyed_by_group(pos, 5, 4, (5, 5)).values())
        assert f(5, 4, (5, 5), 20, "corrected") == oracle


def test_move_delta_examples():
    md = moves.move_delta(3, 1, (2, 2), variant="corrected")
    assert md.oracle_match and md.phi == 2 * (md.phi1 + md.phi2 + md.phi3)
    eq = moves.move_delta(2, 2, (2,))
    assert eq.delta == 0 == eq.oracle_diff
    assert moves.move_delta(6, 4, (5, 5), variant="corrected").oracle_match


def test_psi_is_phi_with_sizes_exchanged():
    md = moves.move_delta(4, 2, (3, 1), variant="verbatim")
    swapped = moves.move_delta(2, 4, (3, 1), variant="verbatim")
    assert md.psi == swapped.phi and md.phi == swapped.psi


def test_verbatim_mismatch_is_localised():
    md = moves.move_delta(3, 1, (2, 2), variant="verbatim")
    assert not md.oracle_match
    assert (md.delta, md.oracle_diff) == (-6912, -7104)
    assert md.mismatched_groups == ["phi:phi3[RS]", "psi:phi3[RS]"]
    assert moves.localize_mismatch(3, 1, (2, 2), method="corrected") == md.mismatched_groups


def test_created_exceeds_destroyed_for_unbalanced_moves():
    for a, b, rest in moves.sweep_tuples([3, 4], 6, 18):
        md = moves.move_delta(a, b, (max(a, b),) * len(rest), variant="corrected", localize="none")
        assert md.psi > md.phi


def test_balanced_rest_sign():
    # phi - psi equals P6(K(a+1,b,..)) - P6(K(a,b+1,..)), negative for a > b
    for n0 in (4, 6, 8):
        md = moves.move_delta(n0, n0 - 1, (n0, n0), variant="corrected")
        assert md.oracle_match and md.psi > md.phi


def test_valid_size_flag_and_errors():
    assert not moves.move_delta(1, 1, (1,)).valid_size
    assert moves.move_delta(2, 1, (2,)).valid_size
    with pytest.raises(ValueError):
        moves.move_delta(0, 1, (1,))
    with pytest.raises(ValueError):
        moves.phi1(2, 1, (2,), 99)
    with pytest.raises(ValueError):
        moves.move_delta(2, 1, (1,), variant="other")


def test_sweep_tuple_shape():
    tuples = list(moves.sweep_tuples([3, 4, 5], 8, 24))
    assert all(a > b and 1 <= min((a, b) + r) and max((a, b) + r) <= 8 for a, b, r in tuples)
    assert all(a + 1 + b + sum(r) <= 24 for a, b, r in tuples)
    assert {len(r) for _, _, r in tuples} == {1, 2, 3}
