"""Exact walk counts: the F_p family and the three LW sequences."""

import pytest
from conftest import connected_graphs, graph

from threshold_spectra import (
    BzpSequence,
    count_lazy_walks,
    count_walks_with_signature,
    fp_sequence,
    fp_via_max_indices,
    fp_via_min_products,
    fp_via_one_overlap,
    fp_via_zero_overlap,
    growth_estimate,
    lw_bruteforce,
    lw_double_prime,
    lw_prime,
    lw_recurrence,
    one_overlap_matrix,
    spectral_radius,
    to_bzp,
    to_fop,
    zero_overlap_matrix,
)

PAW = graph("1101")
G10101 = graph("10101")


def test_paw_walk_table():
    table = lw_recurrence(PAW, 4)
    assert table.lw == (1, 3, 9, 28, 88)
    assert table.lw_prime == table.lw
    assert table.lw_double_prime == table.lw
    assert lw_bruteforce(PAW, 4) == [1, 3, 9, 28, 88]


def test_10101_walk_table():
    table = lw_recurrence(G10101, 5)
    assert table.lw == (1, 3, 9, 32, 116, 426)
    assert table.lw_prime[5] == 413
    assert table.lw_double_prime[5] == 428
    assert lw_bruteforce(G10101, 5) == list(table.lw)


@pytest.mark.parametrize(
    "c, b, p, expected",
    [
        (3, (2, 1), 0, 3),
        (3, (2, 1), 1, 5),
        (3, (2, 1), 2, 13),
        (3, (2, 1), 3, 34),
        (4, (1, 1, 1), 3, 27),
        (6, (5,), 3, 625),
        (4, (), 0, 4),
        (4, (), 2, 0),
    ],
)
def test_fp_reference_values(c, b, p, expected):
    assert fp_via_min_products(BzpSequence(c, b), p) == expected


def test_fp_sequence_example():
    assert fp_sequence(BzpSequence(3, (2, 1)), 4) == [3, 5, 13, 34, 89]
    assert fp_sequence(BzpSequence(4, ()), 3) == [4, 0, 0, 0]


def test_overlap_matrices():
    assert zero_overlap_matrix(BzpSequence(3, (2, 1))) == [[2, 1], [1, 1]]
    assert one_overlap_matrix(to_fop(G10101)) == [
        [0, 0, 0],
        [0, 1, 1],
        [0, 1, 2],
    ]


def test_all_fp_routes_agree():
    """Five independent computations of F_p coincide on the small corpus."""
    for n in range(2, 7):
        for g in connected_graphs(n):
            fop = to_fop(g)
            bzp = to_bzp(g) if g.z >= 1 else BzpSequence(g.c, ())
            seq = fp_sequence(bzp, 4)
            for p in range(5):
                reference = seq[p]
                assert fp_via_min_products(bzp, p) == reference
                assert fp_via_max_indices(bzp, p) == reference
                assert fp_via_one_overlap(fop, p) == reference
                if p >= 1 and g.z >= 1:
                    assert fp_via_zero_overlap(bzp, p) == reference
                signature = (1,) + (0, 1) * p
                assert count_walks_with_signature(g, signature) == reference


def test_signature_width_invariance():
    """Widening any zero run never changes the walk count."""
    assert count_walks_with_signature(G10101, (1, 0, 1)) == 5
    assert count_walks_with_signature(G10101, (1, 0, 0, 1)) == 5
    assert count_walks_with_signature(G10101, (1, 0, 0, 0, 1)) == 5
    assert count_walks_with_signature(G10101, (1, 0, 1, 0, 1, 0, 1)) == 34
    assert count_walks_with_signature(G10101, (1, 0, 0, 1, 0, 1, 0, 0, 1)) == 34


@pytest.mark.parametrize(
    "signature",
    [(), (0,), (1, 1), (0, 1), (1, 0), (1, 0, 1, 1), (1, 2, 1)],
)
def test_signature_validation(signature):
    with pytest.raises(ValueError):
        count_walks_with_signature(G10101, signature)


def test_count_lazy_walks_pointwise():
    # index 2 in the canonical (degree-sorted) order is a triangle vertex
    assert count_lazy_walks(PAW, {2}, {2}, 2) == 3
    # summed over all pairs of type-1 endpoints this is LW_k for k >= 1
    table = lw_recurrence(G10101, 4)
    ones = set(range(G10101.c))
    for k in range(1, 5):
        assert count_lazy_walks(G10101, ones, ones, k - 1) == table.lw[k]


def test_count_lazy_walks_validation():
    with pytest.raises(ValueError):
        count_lazy_walks(PAW, set(), {0}, 1)
    with pytest.raises(ValueError):
        count_lazy_walks(PAW, {0}, {7}, 1)
    with pytest.raises(ValueError):
        count_lazy_walks(PAW, {0}, {1}, -1)


def test_recurrence_matches_bruteforce():
    for n in range(2, 8):
        for g in connected_graphs(n):
            assert list(lw_recurrence(g, 10).lw) == lw_bruteforce(g, 10)


def test_bracketing_sequences():
    """LW' <= LW <= LW'' termwise, with the known exact-collapse cases."""
    for n in range(2, 8):
        for g in connected_graphs(n):
            table = lw_recurrence(g, 14)
            assert list(table.lw_prime) == lw_prime(g, 14)
            assert list(table.lw_double_prime) == lw_double_prime(g, 14)
            for lo, mid, hi in zip(table.lw_prime, table.lw, table.lw_double_prime):
                assert lo <= mid <= hi
            # the first altered term (an F_2 contribution) enters at k = 5,
            # so all three agree up to k = 4
            assert table.lw_prime[:5] == table.lw[:5] == table.lw_double_prime[:5]
            if g.z == 0:
                # no type-0 vertices: every F_p vanishes and all three agree
                assert table.lw_prime == table.lw == table.lw_double_prime
            if g.z == 1:
                # one type-0 vertex: F_{q+1} = F_1 * b_1^q exactly, so the
                # upper substitution loses nothing
                assert table.lw_double_prime == table.lw


def test_bracket_recurrences_are_order_three():
    for n in range(3, 8):
        for g in connected_graphs(n):
            if g.z < 1:
                continue
            b = to_bzp(g).b
            c, sb, f1 = g.c, sum(b), sum(x * x for x in b)
            lo = lw_prime(g, 12)
            hi = lw_double_prime(g, 12)
            for k in range(3, 13):
                assert lo[k] == (c + 1) * lo[k - 1] - c * lo[k - 2] + f1 * lo[k - 3]
                assert hi[k] == (
                    (c + 1) * hi[k - 1] - (c - sb) * hi[k - 2] - (c * sb - f1) * hi[k - 3]
                )


def test_walk_table_fp_cache_length():
    assert len(lw_recurrence(G10101, 3).fp) == 2
    assert len(lw_recurrence(G10101, 12).fp) == 6
    assert len(lw_recurrence(G10101, 12, pmax=8).fp) == 9


def test_growth_estimate_tracks_spectral_radius():
    seq = lw_bruteforce(G10101, 60)
    root, ratio = growth_estimate(seq)
    target = 1.0 + spectral_radius(G10101)
    assert abs(ratio - target) < 1e-6
    assert abs(root - target) < 0.1  # k-th root converges much more slowly


def test_growth_estimate_validation():
    with pytest.raises(ValueError):
        growth_estimate([1, 2])
    with pytest.raises(ValueError):
        growth_estimate([1, 0, 2])


def test_walks_require_connected():
    for fn in (lambda g: lw_recurrence(g, 3), lambda g: lw_bruteforce(g, 3)):
        with pytest.raises(ValueError):
            fn(graph("1010"))
