"""Shared exhaustive corpora for the test suite."""

import itertools

from threshold_spectra import from_generating_sequence


def connected_bitstrings(n):
    """All canonical generating sequences of connected graphs on n vertices."""
    if n == 1:
        return [(1,)]
    return [(1,) + mid + (1,) for mid in itertools.product((0, 1), repeat=n - 2)]


def connected_graphs(n):
    return [from_generating_sequence(bits) for bits in connected_bitstrings(n)]


def all_graphs(n):
    """Every canonical threshold graph on n vertices, connected or not."""
    if n == 1:
        return [from_generating_sequence((1,))]
    return [
        from_generating_sequence((1,) + tail)
        for tail in itertools.product((0, 1), repeat=n - 1)
    ]


def graph(bits):
    """Build a graph from a 0/1 string, e.g. graph("10101")."""
    return from_generating_sequence(int(ch) for ch in bits)
