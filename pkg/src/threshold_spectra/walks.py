"""Exact lazy-walk counting on connected threshold graphs.

A lazy walk is a vertex sequence in which consecutive vertices are equal
or adjacent; its length is the number of steps.  Reading the vertex
types (1 for dominating-insertion vertices, 0 for isolated-insertion
vertices) along a walk gives its signature.

Two families of counts drive everything here, and both are exact Python
integers throughout:

* ``F_p``: the number of lazy walks whose signature is p+1 ones
  separated by p nonempty runs of zeros.  All zeros inside one run must
  repeat the same type-0 vertex (distinct type-0 vertices are never
  adjacent), which is why the count does not depend on the run widths.
  ``F_0 = c`` and ``F_1 = sum(b_i^2)``.
* ``LW_k``: the number of lazy walks of length k-1 whose two endpoints
  are both type-1 vertices, with ``LW_0 = 1`` for the empty walk.
  ``LW_k`` satisfies a convolution recurrence over the F values, and is
  sandwiched between two order-3 linear recurrences: ``lw_prime`` keeps
  only single-zero-run contributions (a lower bound) and
  ``lw_double_prime`` overcounts via ``F_p <= F_1 * (sum b)^(p-1)``
  (an upper bound).

The growth rate of ``LW_k`` recovers the spectral radius: the k-th root
and the consecutive ratio both converge to ``1 + rho``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, exp, log

from .graph_model import (
    BzpSequence,
    FopSequence,
    ThresholdGraph,
    adjacency_matrix,
    canonical_vertex_order,
    to_bzp,
)

__all__ = [
    "WalkTable",
    "count_lazy_walks",
    "count_walks_with_signature",
    "fp_sequence",
    "fp_via_max_indices",
    "fp_via_min_products",
    "fp_via_one_overlap",
    "fp_via_zero_overlap",
    "growth_estimate",
    "lw_bruteforce",
    "lw_double_prime",
    "lw_prime",
    "lw_recurrence",
    "one_overlap_matrix",
    "zero_overlap_matrix",
]


@dataclass(frozen=True)
class WalkTable:
    """Walk counts of one graph, indexed by walk length step count k.

    ``lw[k]`` is exact; ``lw_prime[k] <= lw[k] <= lw_double_prime[k]``
    holds entrywise and all three agree up to k = 2 (and k = 3, where
    each equals ``c^3 + F_1``).  ``fp[p]`` holds ``F_p``.
    """

    lw: tuple[int, ...]
    lw_prime: tuple[int, ...]
    lw_double_prime: tuple[int, ...]
    fp: tuple[int, ...]


# ---------------------------------------------------------------------------
# F_p: closed formulas, overlap matrices, and the brute-force signature count
# ---------------------------------------------------------------------------


def fp_via_min_products(bzp: BzpSequence, p: int) -> int:
    """F_p as the p-fold sum of pairwise-minimum products.

    For p >= 2 this enumerates all index tuples (i1, ..., ip) over the
    type-0 vertices and sums ``b[i1] * min(b[i1], b[i2]) * ... *
    min(b[i_{p-1}], b[ip]) * b[ip]``; each factor counts the common
    type-1 neighbours available for one run-to-run transition.  Runs in
    z^p time, so it is only suitable as a small-case oracle.
    """
    _check_p(p)
    if p == 0:
        return bzp.c
    b = bzp.b
    if p == 1:
        return sum(bi * bi for bi in b)
    total = 0
    for idx in product(range(len(b)), repeat=p):
        term = b[idx[0]] * b[idx[-1]]
        for j in range(p - 1):
            term *= min(b[idx[j]], b[idx[j + 1]])
        total += term
    return total


def fp_via_max_indices(bzp: BzpSequence, p: int) -> int:
    """F_p with minima replaced by ``b[max(i, j)]``.

    Because b is nonincreasing, ``min(b[i], b[j]) = b[max(i, j)]``, so
    this must agree with :func:`fp_via_min_products` term by term.
    """
    _check_p(p)
    if p == 0:
        return bzp.c
    b = bzp.b
    if p == 1:
        return sum(bi * bi for bi in b)
    total = 0
    for idx in product(range(len(b)), repeat=p):
        term = b[idx[0]] * b[idx[-1]]
        for j in range(p - 1):
            term *= b[max(idx[j], idx[j + 1])]
        total += term
    return total


def zero_overlap_matrix(bzp: BzpSequence) -> list[list[int]]:
    """Common-neighbour counts between type-0 vertices: ``b[max(i, j)]``.

    Entry (i, j) counts the type-1 vertices adjacent to both the i-th
    and the j-th type-0 vertex; the diagonal is b itself.  Symmetric and
    positive semidefinite.
    """
    b = bzp.b
    z = len(b)
    return [[b[max(i, j)] for j in range(z)] for i in range(z)]


def one_overlap_matrix(fop: FopSequence) -> list[list[int]]:
    """Common type-0 neighbour counts between type-1 vertices: ``f[min(i, j)]``.

    Entry (i, j) counts the type-0 vertices inserted before both the
    i-th and the j-th type-1 vertex.  Symmetric and positive
    semidefinite.
    """
    f = fop.f
    c = len(f)
    return [[f[min(i, j)] for j in range(c)] for i in range(c)]


def fp_via_zero_overlap(bzp: BzpSequence, p: int) -> int:
    """F_p = b^T * Z^(p-1) * b for the zero-overlap matrix Z, p >= 1."""
    if p < 1:
        raise ValueError(f"the zero-overlap identity needs p >= 1, got {p}")
    if bzp.z == 0:
        raise ValueError("the zero-overlap identity needs z >= 1")
    matrix = zero_overlap_matrix(bzp)
    vector = list(bzp.b)
    for _ in range(p - 1):
        vector = _int_matvec(matrix, vector)
    return sum(bi * vi for bi, vi in zip(bzp.b, vector))


def fp_via_one_overlap(fop: FopSequence, p: int) -> int:
    """F_p = 1^T * Phi^p * 1 for the one-overlap matrix Phi, p >= 0."""
    _check_p(p)
    matrix = one_overlap_matrix(fop)
    vector = [1] * fop.c
    for _ in range(p):
        vector = _int_matvec(matrix, vector)
    return sum(vector)


def fp_sequence(bzp: BzpSequence, pmax: int) -> list[int]:
    """F_0 .. F_pmax via iterated overlap-matrix products (z^2 per step)."""
    _check_p(pmax)
    values = [bzp.c]
    if pmax == 0:
        return values
    matrix = zero_overlap_matrix(bzp)
    b = list(bzp.b)
    vector = b[:]
    for _ in range(pmax):
        values.append(sum(bi * vi for bi, vi in zip(b, vector)))
        vector = _int_matvec(matrix, vector)
    return values


def count_walks_with_signature(g: ThresholdGraph, signature) -> int:
    """Brute-force count of lazy walks realizing an alternating signature.

    The signature must be of the alternating form: it starts and ends
    with 1 and every maximal run of zeros is nonempty (no two ones are
    adjacent).  The result equals ``F_p`` where p is the number of zero
    runs, regardless of the run widths.
    """
    sig = tuple(int(s) for s in signature)
    if not sig or any(s not in (0, 1) for s in sig):
        raise ValueError(f"signature must be a nonempty 0/1 sequence, got {signature!r}")
    if sig[0] != 1 or sig[-1] != 1:
        raise ValueError("signature must start and end with 1")
    if any(sig[i] == 1 and sig[i + 1] == 1 for i in range(len(sig) - 1)):
        raise ValueError("signature must separate ones by at least one zero")
    _require_connected(g)
    order = canonical_vertex_order(g)
    types = [g.bits[v] for v in order]
    closed = _closed_neighbourhood(g)
    counts = [1 if types[v] == sig[0] else 0 for v in range(g.n)]
    for symbol in sig[1:]:
        nxt = [0] * g.n
        for v in range(g.n):
            if types[v] != symbol:
                continue
            nxt[v] = sum(counts[u] for u in closed[v])
        counts = nxt
    return sum(counts)


# ---------------------------------------------------------------------------
# LW: brute force via matrix powers, and the three recurrences
# ---------------------------------------------------------------------------


def lw_bruteforce(g: ThresholdGraph, kmax: int) -> list[int]:
    """LW_0 .. LW_kmax by exact integer powers of (A + I).

    ``LW_k`` sums the (k-1)-step lazy-walk counts over all ordered pairs
    of type-1 endpoints, i.e. ``chi^T (A + I)^(k-1) chi`` with chi the
    type-1 indicator.  Independent of the recurrence path on purpose.
    """
    _check_kmax(kmax)
    _require_connected(g)
    order = canonical_vertex_order(g)
    types = [g.bits[v] for v in order]
    chi = [1 if t == 1 else 0 for t in types]
    closed = _closed_neighbourhood(g)
    values = [1]
    vector = chi[:]
    for _ in range(kmax):
        values.append(sum(ci * vi for ci, vi in zip(chi, vector)))
        vector = [sum(vector[u] for u in closed[v]) for v in range(g.n)]
    return values[: kmax + 1]


def count_lazy_walks(g: ThresholdGraph, start_set, end_set, k: int) -> int:
    """Exact number of k-step lazy walks from ``start_set`` to ``end_set``.

    Vertex indices refer to the canonical (degree-sorted) order used by
    :func:`threshold_spectra.graph_model.adjacency_matrix`.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    starts = _validated_vertex_set(start_set, g.n, "start_set")
    ends = _validated_vertex_set(end_set, g.n, "end_set")
    closed = _closed_neighbourhood(g)
    vector = [1 if v in ends else 0 for v in range(g.n)]
    for _ in range(k):
        vector = [sum(vector[u] for u in closed[v]) for v in range(g.n)]
    return sum(vector[v] for v in starts)


def lw_recurrence(g: ThresholdGraph, kmax: int, pmax: int | None = None) -> WalkTable:
    """LW_0 .. LW_kmax by the F-convolution recurrence, plus both brackets.

    The step is ``LW_k = c * LW_{k-1} + sum_{r=0}^{k-3} LW_r *
    sum_q C(k-3-r-q, q) * F_{q+1}``, where the binomial vanishes for
    negative upper index and counts the ways to distribute slack among
    the q+1 zero runs of the closing signature.
    """
    _check_kmax(kmax)
    _require_connected(g)
    bzp = _bzp_or_empty(g)
    c = g.c
    needed = (kmax - 3) // 2 + 1 if kmax >= 3 else 1
    top = max(needed, pmax if pmax is not None else 0, 1)
    fp = fp_sequence(bzp, top)
    lw = [1]
    for k in range(1, kmax + 1):
        total = c * lw[k - 1]
        for r in range(0, k - 2):
            slack = k - 3 - r
            inner = 0
            q = 0
            while slack - q >= q:
                inner += comb(slack - q, q) * fp[q + 1]
                q += 1
            total += lw[r] * inner
        lw.append(total)
    return WalkTable(
        lw=tuple(lw),
        lw_prime=tuple(lw_prime(g, kmax)),
        lw_double_prime=tuple(lw_double_prime(g, kmax)),
        fp=tuple(fp),
    )


def lw_prime(g: ThresholdGraph, kmax: int) -> list[int]:
    """Lower-bracket sequence: only single-zero-run closings are kept.

    ``LW'_k = c^k`` for k <= 2 and ``LW'_k = c * LW'_{k-1} +
    F_1 * sum_{r=0}^{k-3} LW'_r`` afterwards.  Equivalently it solves
    the order-3 recurrence with characteristic polynomial
    ``x^3 - (c+1) x^2 + c x - F_1``.
    """
    _check_kmax(kmax)
    _require_connected(g)
    bzp = _bzp_or_empty(g)
    c = g.c
    f1 = sum(bi * bi for bi in bzp.b)
    values = [c**k for k in range(min(kmax, 2) + 1)]
    prefix = 0  # running sum of LW'_0 .. LW'_{k-3}
    for k in range(3, kmax + 1):
        prefix += values[k - 3]
        values.append(c * values[k - 1] + f1 * prefix)
    return values


def lw_double_prime(g: ThresholdGraph, kmax: int) -> list[int]:
    """Upper-bracket sequence: F_{q+1} is replaced by F_1 * (sum b)^q.

    Same convolution shape as the exact recurrence, with each F value
    overestimated geometrically; it solves the order-3 recurrence with
    characteristic polynomial ``x^3 - (c+1) x^2 + (c - sum b) x +
    (c * sum b - F_1)``.
    """
    _check_kmax(kmax)
    _require_connected(g)
    bzp = _bzp_or_empty(g)
    c = g.c
    f1 = sum(bi * bi for bi in bzp.b)
    sb = sum(bzp.b)
    sb_powers = [1]
    values = [1]
    for k in range(1, kmax + 1):
        while len(sb_powers) <= k:
            sb_powers.append(sb_powers[-1] * sb)
        total = c * values[k - 1]
        for r in range(0, k - 2):
            slack = k - 3 - r
            inner = 0
            q = 0
            while slack - q >= q:
                inner += comb(slack - q, q) * f1 * sb_powers[q]
                q += 1
            total += values[r] * inner
        values.append(total)
    return values


def growth_estimate(sequence) -> tuple[float, float]:
    """(k-th root, consecutive ratio) of the last entry, in log space."""
    values = list(sequence)
    if len(values) < 3:
        raise ValueError("growth estimate needs at least three entries")
    if any(v <= 0 for v in values):
        raise ValueError("growth estimate needs positive entries")
    top = len(values) - 1
    log_last = log(values[top])
    root = exp(log_last / top)
    ratio = exp(log_last - log(values[top - 1]))
    return root, ratio


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _int_matvec(matrix: list[list[int]], vector: list[int]) -> list[int]:
    return [sum(row[j] * vector[j] for j in range(len(vector))) for row in matrix]


def _closed_neighbourhood(g: ThresholdGraph) -> list[list[int]]:
    a = adjacency_matrix(g)
    n = g.n
    return [[u for u in range(n) if u == v or a[v, u]] for v in range(n)]


def _bzp_or_empty(g: ThresholdGraph) -> BzpSequence:
    if g.z == 0:
        return BzpSequence(c=g.c, b=())
    return to_bzp(g)


def _validated_vertex_set(vertices, n: int, name: str) -> set[int]:
    out = {int(v) for v in vertices}
    if not out:
        raise ValueError(f"{name} must be nonempty")
    if any(v < 0 or v >= n for v in out):
        raise ValueError(f"{name} contains out-of-range vertices for n = {n}")
    return out


def _check_p(p: int) -> None:
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")


def _check_kmax(kmax: int) -> None:
    if kmax < 0:
        raise ValueError(f"kmax must be >= 0, got {kmax}")


def _require_connected(g: ThresholdGraph) -> None:
    if not g.is_connected:
        raise ValueError("walk counts are defined here for connected graphs only")
