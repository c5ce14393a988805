"""Ground-truth membership by exhaustive search for a witness chain.

A tuple of integer partition types admits the required long exact sequence
iff some chain of partitions links consecutive positions through nonzero
Littlewood-Richardson coefficients.  The search below decides exactly that,
with global memoization of dead states; it never consults the inequality
machinery, which is what makes cross-checking meaningful.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .partitions import (
    Partition,
    is_weakly_decreasing,
    normalize,
    partitions_in_box,
    subpartitions,
)
from .tableaux import lr_coefficient, lr_complements


@dataclass(frozen=True)
class WitnessChain:
    """Partitions mu(0..m) with every consecutive coefficient nonzero."""

    mus: tuple[Partition, ...]


@dataclass(frozen=True)
class SearchOutcome:
    chain: WitnessChain | None
    explored: int  # number of (position, partition) states expanded


def chain_is_valid(chain: WitnessChain, lams) -> bool:
    """Re-validate a chain: length, size telescoping, and nonzero coefficients."""
    lams = tuple(normalize(l) for l in lams)
    mus = chain.mus
    if len(mus) != len(lams) + 1:
        return False
    for i, lam in enumerate(lams):
        if sum(mus[i]) + sum(mus[i + 1]) != sum(lam):
            return False
        if lr_coefficient(lam, mus[i], mus[i + 1]) < 1:
            return False
    return True


def witness_search(lams, n: int) -> SearchOutcome:
    """Depth-first search for the canonically smallest witness chain.

    mu(0) runs over subpartitions of the first type in lexicographic order
    (the empty partition first), and each later mu over the complement
    listing, so the found chain is deterministic.  Dead (position, partition)
    states are memoized within the search.
    """
    lams = tuple(normalize(l) for l in lams)
    m = len(lams)
    if m < 3:
        raise ValueError(f"need at least three partitions, got {m}")
    for lam in lams:
        if len(lam) > n:
            raise ValueError(f"partition {lam!r} has more than n = {n} parts")
    dead: set[tuple[int, Partition]] = set()
    explored = 0

    def extend(pos: int, prev: Partition):
        """Tail mu(pos..m) given mu(pos-1) = prev, or None if impossible."""
        nonlocal explored
        if pos == m + 1:
            return ()
        key = (pos, prev)
        if key in dead:
            return None
        explored += 1
        for nxt, _ in lr_complements(lams[pos - 1], prev):
            tail = extend(pos + 1, nxt)
            if tail is not None:
                return (nxt,) + tail
        dead.add(key)
        return None

    for mu0 in subpartitions(lams[0]):
        tail = extend(1, mu0)
        if tail is not None:
            return SearchOutcome(WitnessChain((mu0,) + tail), explored)
    return SearchOutcome(None, explored)


def witness_chain(lams, n: int) -> WitnessChain | None:
    """The canonical witness chain, or None when no exact sequence exists."""
    return witness_search(lams, n).chain


def rational_member(lams, n: int) -> bool:
    """Membership for weakly decreasing nonnegative rational rows.

    Clears denominators by their least common multiple and decides the
    scaled integer tuple; saturation makes the answer scale-invariant.
    """
    rows = []
    for lam in lams:
        row = tuple(Fraction(x) for x in lam)
        if not is_weakly_decreasing(row) or (row and row[-1] < 0):
            raise ValueError(f"row {tuple(lam)!r} not a weakly decreasing nonnegative sequence")
        if len(row) > n:
            raise ValueError(f"row {tuple(lam)!r} has more than n = {n} parts")
        rows.append(row)
    denom = math.lcm(*(x.denominator for row in rows for x in row), 1)
    scaled = [normalize(tuple(int(x * denom) for x in row)) for row in rows]
    return witness_chain(scaled, n) is not None


@dataclass
class Disagreement:
    lams: tuple[Partition, ...]
    oracle: bool
    other: bool
    route: str


@dataclass
class CrossCheckReport:
    n: int
    m: int
    bound: int
    total: int
    routes: tuple[str, ...]
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.disagreements


def _check_tuples(tuples, n: int, m: int, routes) -> list[Disagreement]:
    # imported here: the comparison harness may use the inequality modules,
    # the decision procedure above must not
    from .cone import member_cone, member_single_row

    found: list[Disagreement] = []
    for lams in tuples:
        truth = witness_chain(lams, n) is not None
        if "inequality" in routes:
            got = member_cone(lams, n, m).member
            if got != truth:
                found.append(Disagreement(lams, truth, got, "inequality"))
        if "single-row" in routes:
            got = member_single_row(lams, m).member
            if got != truth:
                found.append(Disagreement(lams, truth, got, "single-row"))
    return found


def cross_check(n: int, m: int, bound: int, threads: int = 1) -> CrossCheckReport:
    """Compare the oracle against every available route on a full grid.

    The grid is all m-tuples of partitions with at most n parts, each at most
    bound.  The inequality system route applies for odd m, the closed-form
    window route for n = 1; disagreements are collected in grid order.
    """
    routes = []
    if m % 2 == 1:
        routes.append("inequality")
    if n == 1:
        routes.append("single-row")
    if not routes:
        from .cone import UnsupportedLengthError

        raise UnsupportedLengthError(
            f"no finite description to compare against for n={n}, m={m}; "
            "only the witness search covers this case"
        )
    routes = tuple(routes)
    grid = tuple(partitions_in_box(n, bound))
    tuples = list(product(grid, repeat=m))
    if threads > 1 and tuples:
        chunk = (len(tuples) + threads - 1) // threads
        slices = [tuples[i : i + chunk] for i in range(0, len(tuples), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: _check_tuples(s, n, m, routes), slices))
        found = [d for part in parts for d in part]
    else:
        found = _check_tuples(tuples, n, m, routes)
    return CrossCheckReport(n, m, bound, len(tuples), routes, found)
