"""Pure Python twin of the compiled scan kernel.

The hot loop of the oracle scans every fixed-point-free involution ``v`` of
degree ``d`` and keeps those whose forced companion permutation has a
prescribed cycle type while generating a transitive group together with the
anchored permutation.  This module implements that scan in plain Python; the
compiled module `_speed` implements the same contract, and `kernels` picks
one at import time.
"""

from __future__ import annotations

from collections.abc import Sequence


def backend() -> str:
    return "pure"


def scan_involutions_block(
    d: int,
    first: int,
    phi: Sequence[int],
    left: bool,
    target: Sequence[int],
    anchor_parent: Sequence[int],
    anchor_roots: int,
) -> list[tuple[int, ...]]:
    """Surviving involutions ``v`` with ``v(0) = first``.

    A fixed-point-free involution ``v`` of degree ``d`` survives iff

    * the composite ``t`` (``t[x] = v[phi[x]]`` when ``left`` else
      ``t[x] = phi[v[x]]``) has cycle type ``target`` (weakly decreasing), and
    * the union of the anchor's point classes (``anchor_parent``, given as a
      forest with ``anchor_roots`` roots pointing to themselves) with the
      pairs of ``v`` is a single class, so the generated group is transitive.

    Splitting the stream by the partner of point 0 gives ``d - 1`` disjoint
    blocks; scanning each block for every ``first`` recovers the whole
    involution stream.
    """
    if d <= 0 or d % 2:
        raise ValueError(f"degree must be even and positive, got {d}")
    if not 1 <= first < d:
        raise ValueError(f"first partner {first} out of range")
    target = tuple(target)
    ntgt = len(target)
    v = [-1] * d
    v[0] = first
    v[first] = 0
    free0 = [x for x in range(1, d) if x != first]
    survivors: list[tuple[int, ...]] = []
    t = [0] * d
    seen = [0] * d
    stamp = 0

    def check() -> bool:
        nonlocal stamp
        if left:
            for i in range(d):
                t[i] = v[phi[i]]
        else:
            for i in range(d):
                t[i] = phi[v[i]]
        stamp += 1
        lengths = []
        for i in range(d):
            if seen[i] != stamp:
                n = 0
                x = i
                while seen[x] != stamp:
                    seen[x] = stamp
                    x = t[x]
                    n += 1
                lengths.append(n)
        if len(lengths) != ntgt:
            return False
        lengths.sort(reverse=True)
        if tuple(lengths) != target:
            return False
        parent = list(anchor_parent)

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comp = anchor_roots
        for x in range(d):
            rx, ry = find(x), find(v[x])
            if rx != ry:
                parent[rx] = ry
                comp -= 1
        return comp == 1

    def rec(free: list[int]) -> None:
        if not free:
            if check():
                survivors.append(tuple(v))
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            v[a] = b
            v[b] = a
            rec(free[1:i] + free[i + 1 :])
        v[a] = -1

    rec(free0)
    return survivors
