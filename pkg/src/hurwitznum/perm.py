"""Exact permutation arithmetic and conjugacy-class machinery.

A permutation of degree ``d`` is a tuple ``p`` of length ``d`` whose entry
``p[x]`` is the image of the point ``x``; points are 0-indexed and the tuple
is a bijection on ``{0, ..., d-1}``.  Dense image tuples keep the inner loops
of the enumeration code cache friendly and make permutations hashable values
that are safe to share between threads.

Text output uses 1-indexed cycle notation with fixed points omitted, so
printed permutations can be checked by hand.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from itertools import permutations as _point_permutations

Perm = tuple[int, ...]
CycleType = tuple[int, ...]


def identity(d: int) -> Perm:
    """The identity permutation on ``d`` points.

    >>> identity(3)
    (0, 1, 2)
    """
    return tuple(range(d))


def is_perm(p: Sequence[int]) -> bool:
    """True iff ``p`` is a bijection on ``{0, ..., len(p)-1}``."""
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """The composite mapping ``x`` to ``p(q(x))``.

    >>> compose((1, 2, 0), (1, 0, 2))
    (2, 1, 0)
    """
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((1, 2, 0))
    (2, 0, 1)
    """
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def conjugate(p: Perm, t: Perm) -> Perm:
    """The conjugate ``t p t^-1``; has the same cycle type as ``p``."""
    if len(p) != len(t):
        raise ValueError(f"degree mismatch: {len(p)} != {len(t)}")
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[t[x]] = t[y]
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points included.

    Each cycle starts at its smallest point; cycles are listed by smallest
    point, so the decomposition is a canonical form.

    >>> cycles((1, 0, 2))
    [(0, 1), (2,)]
    """
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> CycleType:
    """Cycle lengths sorted weakly decreasing, fixed points counted as 1s.

    >>> cycle_type((1, 0, 3, 4, 2))
    (3, 2)
    """
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n = 1
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            n += 1
            x = p[x]
        lengths.append(n)
    lengths.sort(reverse=True)
    return tuple(lengths)


def from_cycles(d: int, cycs: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation of degree ``d`` from disjoint cycles.

    >>> from_cycles(4, [(0, 1), (2, 3)])
    (1, 0, 3, 2)
    """
    images = list(range(d))
    used = set()
    for cyc in cycs:
        for i, x in enumerate(cyc):
            if not 0 <= x < d or x in used:
                raise ValueError(f"bad cycle point {x}")
            used.add(x)
            images[x] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def format_perm(p: Perm) -> str:
    """1-indexed cycle notation, fixed points omitted.

    >>> format_perm((1, 0, 2, 4, 3))
    '(1,2)(4,5)'
    >>> format_perm((0, 1))
    '()'
    """
    parts = ["(" + ",".join(str(x + 1) for x in cyc) + ")" for cyc in cycles(p) if len(cyc) > 1]
    return "".join(parts) or "()"


def _check_partition(parts: Sequence[int]) -> None:
    if not parts:
        raise ValueError("empty partition")
    for i, x in enumerate(parts):
        if x < 1:
            raise ValueError(f"partition part {x} is not positive")
        if i and parts[i - 1] < x:
            raise ValueError("partition parts must be weakly decreasing")


def class_size(parts: Sequence[int]) -> int:
    """Number of permutations with the given cycle type.

    The count is ``d! / prod(c_i^{m_i} * m_i!)`` over the distinct part
    values ``c_i`` with multiplicities ``m_i``.

    >>> class_size((2, 1))
    3
    >>> class_size((2,) * 8) == 2027025
    True
    """
    _check_partition(parts)
    d = sum(parts)
    denom = 1
    mult: dict[int, int] = {}
    for c in parts:
        mult[c] = mult.get(c, 0) + 1
    for c, m in mult.items():
        denom *= c**m * math.factorial(m)
    return math.factorial(d) // denom


def class_stream(parts: Sequence[int]) -> Iterator[Perm]:
    """Every permutation of the given cycle type, exactly once.

    The order is deterministic: the smallest point not yet placed anchors the
    next cycle, the cycle length runs over the distinct unused part values in
    decreasing order, and the remaining cycle points run in lexicographic
    order.  Anchoring the smallest free point means two equal-length cycles
    are produced in a fixed order, so no permutation appears twice.
    """
    _check_partition(parts)
    d = sum(parts)
    # Invariant: images[x] == x for every free point x on entry to rec.
    images = list(range(d))

    def rec(free: tuple[int, ...], todo: tuple[int, ...]) -> Iterator[Perm]:
        if not todo:
            yield tuple(images)
            return
        anchor = free[0]
        rest = free[1:]
        seen_len = set()
        for j, length in enumerate(todo):
            if length in seen_len:
                continue
            seen_len.add(length)
            remaining = todo[:j] + todo[j + 1 :]
            if length == 1:
                yield from rec(rest, remaining)
                continue
            for tail in _point_permutations(rest, length - 1):
                cyc = (anchor, *tail)
                for i, x in enumerate(cyc):
                    images[x] = cyc[(i + 1) % length]
                tail_set = set(tail)
                left = tuple(x for x in rest if x not in tail_set)
                yield from rec(left, remaining)
                for x in cyc:
                    images[x] = x

    yield from rec(tuple(range(d)), tuple(parts))


def involution_stream(d: int) -> Iterator[Perm]:
    """All fixed-point-free involutions of even degree ``d``.

    These are the perfect matchings of ``d`` points; there are ``(d-1)!!`` of
    them.  The order is deterministic: the smallest free point is paired with
    each larger free point in increasing order.
    """
    if d <= 0 or d % 2:
        raise ValueError(f"degree must be even and positive, got {d}")
    images = [0] * d

    def rec(free: tuple[int, ...]) -> Iterator[Perm]:
        if not free:
            yield tuple(images)
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            images[a] = b
            images[b] = a
            yield from rec(free[1:i] + free[i + 1 :])

    yield from rec(tuple(range(d)))


def class_representative(parts: Sequence[int]) -> Perm:
    """The permutation whose cycles fill ``0..d-1`` in order of the parts.

    >>> format_perm(class_representative((3, 2)))
    '(1,2,3)(4,5)'
    """
    _check_partition(parts)
    out = []
    start = 0
    for length in parts:
        out.append(tuple(range(start, start + length)))
        start += length
    return from_cycles(start, out)


def centralizer_generators(p: Perm) -> list[Perm]:
    """A generating set of the centralizer of ``p`` in the symmetric group.

    The generators are each cycle of ``p`` itself (rotation of that cycle)
    plus, for every pair of consecutive equal-length cycles, the involution
    swapping them pointwise.  The generated subgroup has order
    ``prod(c_i^{m_i} * m_i!)``.
    """
    d = len(p)
    cycs = sorted(cycles(p), key=lambda c: (len(c), c[0]))
    gens: list[Perm] = []
    for cyc in cycs:
        if len(cyc) > 1:
            gens.append(from_cycles(d, [cyc]))
    for a, b in zip(cycs, cycs[1:]):
        if len(a) == len(b):
            images = list(range(d))
            for x, y in zip(a, b):
                images[x] = y
                images[y] = x
            gens.append(tuple(images))
    return gens


def subgroup(gens: Sequence[Perm], d: int) -> set[Perm]:
    """The subgroup generated by ``gens``, materialized by closure."""
    for g in gens:
        if len(g) != d:
            raise ValueError(f"degree mismatch: {len(g)} != {d}")
    group = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = compose(h, g)
                if e not in group:
                    group.add(e)
                    nxt.append(e)
        frontier = nxt
    return group


def is_transitive(gens: Sequence[Perm], d: int) -> bool:
    """True iff the group generated by ``gens`` has a single orbit.

    Implemented as union-find over the generator images, so no group
    elements are materialized.
    """
    for g in gens:
        if len(g) != d:
            raise ValueError(f"degree mismatch: {len(g)} != {d}")
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = d
    for g in gens:
        for x in range(d):
            rx, ry = find(x), find(g[x])
            if rx != ry:
                parent[rx] = ry
                components -= 1
    return components == 1


def conjugator_to(p: Perm, target: Perm) -> Perm:
    """A permutation ``g`` with ``g p g^-1 = target``.

    Requires equal cycle types.  The choice of ``g`` is deterministic: the
    cycles of both sides are matched in order of (length decreasing, smallest
    point increasing) and mapped point by point.
    """
    if cycle_type(p) != cycle_type(target):
        raise ValueError("cycle types differ, no conjugator exists")

    def key(c: tuple[int, ...]) -> tuple[int, int]:
        return (-len(c), c[0])

    images = [0] * len(p)
    for cp, ct in zip(sorted(cycles(p), key=key), sorted(cycles(target), key=key)):
        for x, y in zip(cp, ct):
            images[x] = y
    return tuple(images)
