"""Encodings, conversions, and structural invariants of the graph model."""

import numpy as np
import pytest
from conftest import all_graphs, connected_graphs, graph

from threshold_spectra import (
    BzpSequence,
    FopSequence,
    ParseError,
    adjacency_matrix,
    degree_sequence,
    from_bzp,
    from_composition,
    from_fop,
    from_generating_sequence,
    parse_composition,
    to_bzp,
    to_composition,
    to_fop,
)
from threshold_spectra.graph_model import canonical_vertex_order, to_json_dict


@pytest.mark.parametrize(
    "bits, n, m, c, z",
    [
        ("1101", 4, 4, 3, 1),
        ("10101", 5, 6, 3, 2),
        ("11011", 5, 8, 4, 1),
        ("1111", 4, 6, 4, 0),
        ("1001", 4, 3, 2, 2),
        ("1", 1, 0, 1, 0),
    ],
)
def test_example_dimensions(bits, n, m, c, z):
    g = graph(bits)
    assert (g.n, g.m, g.c, g.z) == (n, m, c, z)


def test_first_bit_is_canonicalized():
    assert graph("0101") == graph("1101")
    assert graph("0") == graph("1")
    assert graph("0101").generating_string == "1101"


def test_m_counts_positional_ones():
    for n in range(1, 9):
        for g in all_graphs(n):
            assert g.m == sum(i for i, bit in enumerate(g.bits) if bit == 1)


def test_edge_count_matches_adjacency():
    for n in range(2, 8):
        for g in all_graphs(n):
            a = adjacency_matrix(g)
            assert a.sum() == 2 * g.m
            assert (a == a.T).all()
            assert (np.diag(a) == 0).all()


def test_connectivity_is_last_bit():
    """a_n = 1 is equivalent to actual graph connectivity (checked by BFS)."""
    for n in range(2, 9):
        for g in all_graphs(n):
            a = adjacency_matrix(g)
            seen = {0}
            frontier = [0]
            while frontier:
                v = frontier.pop()
                for u in np.nonzero(a[v])[0]:
                    if int(u) not in seen:
                        seen.add(int(u))
                        frontier.append(int(u))
            assert g.is_connected == (len(seen) == g.n)


@pytest.mark.parametrize(
    "text, bits",
    [
        ("G{2,1,1}", "1101"),
        ("G{1,1,1,1,1}", "10101"),
        ("G{2,1,2}", "11011"),
        ("G{3}", "111"),
        ("G{6,1}", "1000001"),
        ("G{2,3,2,1}", "10111001"),
    ],
)
def test_composition_construction(text, bits):
    assert from_composition(parse_composition(text)) == graph(bits)


def test_composition_round_trip():
    for n in range(1, 10):
        for g in connected_graphs(n):
            spec = to_composition(g)
            assert from_composition(spec) == g
            assert parse_composition(spec.format()) == spec
            # canonical sequences start with a one, so the block count is odd
            assert len(spec.blocks) % 2 == 1


def test_composition_of_disconnected_raises():
    with pytest.raises(ValueError):
        to_composition(graph("1010"))


@pytest.mark.parametrize(
    "text, position",
    [
        ("K{1}", 0),
        ("G{}", 2),
        ("G{1,}", 4),
        ("G{1,2", 5),
        ("G{0}", 2),
        ("G{2,x}", 4),
    ],
)
def test_parse_composition_errors(text, position):
    with pytest.raises(ParseError) as err:
        parse_composition(text)
    assert err.value.position == position


def test_bzp_examples():
    assert to_bzp(graph("1101")) == BzpSequence(3, (1,))
    assert to_bzp(graph("10101")) == BzpSequence(3, (2, 1))
    assert to_bzp(graph("11011")) == BzpSequence(4, (2,))
    assert from_bzp(3, [2, 1]) == graph("10101")


def test_bzp_round_trip_and_size():
    for n in range(2, 11):
        for g in connected_graphs(n):
            if g.z == 0:
                continue
            seq = to_bzp(g)
            assert from_bzp(seq.c, seq.b) == g
            assert seq.size == g.m
            assert all(1 <= b <= seq.c - 1 for b in seq.b)
            assert all(a >= b for a, b in zip(seq.b, seq.b[1:]))


@pytest.mark.parametrize(
    "c, b",
    [
        (3, (3,)),      # b exceeds c - 1
        (3, (0,)),      # b below 1
        (3, (1, 2)),    # not nonincreasing
        (0, ()),        # empty graph
    ],
)
def test_bzp_validation(c, b):
    with pytest.raises(ValueError):
        BzpSequence(c, b)


def test_bzp_requires_connected_and_z():
    with pytest.raises(ValueError):
        to_bzp(graph("1010"))
    with pytest.raises(ValueError):
        to_bzp(graph("111"))


def test_fop_examples():
    assert to_fop(graph("10101")) == FopSequence((0, 1, 2), 5)
    assert to_fop(graph("1001")) == FopSequence((0, 2), 4)
    assert to_fop(graph("11011")) == FopSequence((0, 0, 1, 1), 5)
    assert from_fop([0, 1, 2], 5) == graph("10101")


def test_fop_round_trip():
    for n in range(1, 11):
        for g in connected_graphs(n):
            seq = to_fop(g)
            assert from_fop(seq.f, seq.n) == g
            assert seq.f[0] == 0
            assert seq.f[-1] == g.z
            assert seq.c == g.c


@pytest.mark.parametrize(
    "f, n",
    [
        ((1, 1), 4),    # must start at zero
        ((0, 2, 1), 5), # not nondecreasing
        ((0, 2), 3),    # last entry must equal n - c
        ((), 1),        # empty
    ],
)
def test_fop_validation(f, n):
    with pytest.raises(ValueError):
        FopSequence(f, n)


def test_generating_sequence_validation():
    with pytest.raises(ValueError):
        from_generating_sequence([])
    with pytest.raises(ValueError):
        from_generating_sequence([1, 2])


def test_degree_sequence_structure():
    """Sorted degrees: position c holds c-1 and the tail equals b."""
    for n in range(2, 9):
        for g in connected_graphs(n):
            degs = degree_sequence(g)
            assert sum(degs) == 2 * g.m
            assert all(a >= b for a, b in zip(degs, degs[1:]))
            assert degs[g.c - 1] == g.c - 1
            if g.z >= 1:
                assert degs[g.c:] == to_bzp(g).b
            if n >= 2:
                assert degs[0] == n - 1  # a dominating vertex exists


def test_canonical_order_types_and_degrees():
    for n in range(2, 9):
        for g in connected_graphs(n):
            order = canonical_vertex_order(g)
            assert sorted(order) == list(range(n))
            types = [g.bits[v] for v in order]
            assert types[: g.c] == [1] * g.c
            assert types[g.c:] == [0] * g.z


def test_adjacency_respects_insertion_rule():
    """Later vertex dominates earlier ones exactly when its bit is 1."""
    for n in range(2, 8):
        for g in connected_graphs(n):
            order = canonical_vertex_order(g)
            a = adjacency_matrix(g)
            for p in range(n):
                for q in range(n):
                    i, j = order[p], order[q]
                    expected = 0 if i == j else g.bits[max(i, j)]
                    assert a[p, q] == expected


def test_json_dict_shapes():
    d = to_json_dict(graph("10101"))
    assert d == {
        "n": 5,
        "m": 6,
        "c": 3,
        "z": 2,
        "generating": "10101",
        "bzp": [2, 1],
        "fop": [0, 1, 2],
        "degrees": [4, 3, 2, 2, 1],
    }
    assert to_json_dict(graph("111"))["bzp"] == []
    disconnected = to_json_dict(graph("1010"))
    assert disconnected["bzp"] is None
    assert disconnected["fop"] is None
