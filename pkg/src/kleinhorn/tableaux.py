"""Littlewood-Richardson and Kostka coefficients by exact tableau counting.

Everything here is integer counting — no symmetric-function algebra, no
floats.  Results are cached globally; partitions are canonical tuples.
"""

from __future__ import annotations

from collections import defaultdict
from functools import cache

from .partitions import (
    Partition,
    contains,
    normalize,
    partitions_of_size_in,
)


@cache
def lr_coefficient(outer: Partition, left: Partition, right: Partition) -> int:
    """Multiplicity of outer in the product of left and right.

    Counts fillings of the skew diagram outer/left with content right whose
    rows weakly increase, columns strictly increase, and whose reverse
    reading word (right to left along rows, top row first) is a lattice
    word.  Zero unless left and right fit inside outer and sizes add up.
    """
    outer = normalize(outer)
    left = normalize(left)
    right = normalize(right)
    if sum(left) + sum(right) != sum(outer):
        return 0
    if not contains(outer, left) or not contains(outer, right):
        return 0
    if not right:
        return 1  # sizes force left == outer; the empty filling
    return _count_fillings(outer, left, right)


def _count_fillings(outer: Partition, inner: Partition, content: Partition) -> int:
    """Backtracking count of lattice skew tableaux; cells in reading-word order."""
    rows = len(outer)
    inn = inner + (0,) * (rows - len(inner))
    cells = [(r, c) for r in range(rows) for c in range(outer[r] - 1, inn[r] - 1, -1)]
    nletters = len(content)
    fill = [[0] * width for width in outer]
    remaining = list(content)
    placed = [0] * (nletters + 1)
    total = 0

    def walk(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        # the cell above is in the shape iff it sits right of the inner row
        lo = fill[r - 1][c] + 1 if r > 0 and c >= inn[r - 1] else 1
        hi = fill[r][c + 1] if c + 1 < outer[r] else nletters
        for v in range(lo, hi + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and placed[v] >= placed[v - 1]:
                continue  # lattice prefix would break
            fill[r][c] = v
            remaining[v - 1] -= 1
            placed[v] += 1
            walk(idx + 1)
            fill[r][c] = 0
            remaining[v - 1] += 1
            placed[v] -= 1

    walk(0)
    return total


@cache
def kostka_number(shape: Partition, content: tuple[int, ...]) -> int:
    """Count semistandard tableaux of the given shape and content.

    The content is any finite sequence of nonnegative integers; letters are
    added one at a time, each contributing a horizontal strip.
    """
    shape = normalize(shape)
    content = tuple(content)
    if any(a < 0 for a in content):
        raise ValueError(f"content must be nonnegative: {content!r}")
    if sum(content) != sum(shape):
        return 0
    state: dict[Partition, int] = {(): 1}
    for a in content:
        nxt: dict[Partition, int] = defaultdict(int)
        for mu, w in state.items():
            for tau in _strip_extensions(mu, a, shape):
                nxt[tau] += w
        if not nxt:
            return 0
        state = dict(nxt)
    return state.get(shape, 0)


def _strip_extensions(mu: Partition, size: int, bound: Partition) -> list[Partition]:
    """Partitions tau inside bound with tau/mu a horizontal strip of the given size."""
    rows = len(bound)
    mup = mu + (0,) * (rows - len(mu))
    out: list[Partition] = []

    def grow(i: int, acc: tuple[int, ...], rem: int) -> None:
        if i == rows:
            if rem == 0:
                t = acc
                while t and t[-1] == 0:
                    t = t[:-1]
                out.append(t)
            return
        lo = mup[i]
        hi = min(bound[i], mup[i - 1] if i > 0 else bound[i], lo + rem)
        for v in range(lo, hi + 1):
            grow(i + 1, acc + (v,), rem - (v - lo))

    grow(0, (), size)
    return out


@cache
def lr_complements(outer: Partition, left: Partition) -> tuple[tuple[Partition, int], ...]:
    """Every right factor with nonzero coefficient against outer and left.

    Returns (partition, coefficient) pairs in lexicographic partition order;
    the list is complete: anything absent has coefficient zero.
    """
    outer = normalize(outer)
    left = normalize(left)
    total = sum(outer) - sum(left)
    if total < 0 or not contains(outer, left):
        return ()
    out = []
    for nu in partitions_of_size_in(total, outer):
        c = lr_coefficient(outer, left, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def gen_lr(lams) -> int:
    """Chained Littlewood-Richardson coefficient of m >= 3 partitions.

    Sums, over all chains of intermediate partitions, the product of the
    coefficients linking consecutive entries; for m = 3 this is the plain
    coefficient of the middle partition against the outer two.  The
    alternating size relation fixes every intermediate size, so any negative
    forced size (or a final mismatch) gives zero.
    """
    lams = tuple(normalize(l) for l in lams)
    m = len(lams)
    if m < 3:
        raise ValueError(f"need at least three partitions, got {m}")
    sizes = [sum(l) for l in lams]
    need = sizes[0]
    for i in range(1, m - 1):
        need = sizes[i] - need
        if need < 0:
            return 0
    if need != sizes[m - 1]:
        return 0
    state: dict[Partition, int] = {lams[0]: 1}
    for i in range(1, m - 2):
        nxt: dict[Partition, int] = defaultdict(int)
        for prev, w in state.items():
            for nu, c in lr_complements(lams[i], prev):
                nxt[nu] += w * c
        if not nxt:
            return 0
        state = dict(nxt)
    last = lams[m - 2]
    return sum(w * lr_coefficient(last, prev, lams[m - 1]) for prev, w in state.items())
