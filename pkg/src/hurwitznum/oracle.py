"""Brute-force ground truth for strong and weak Hurwitz numbers.

A branched cover of the sphere with three branching points is encoded by a
monodromy triple: permutations (s1, s2, s3) with ``s1(s2(s3(x))) = x``, cycle
types matching the datum's three partitions, and a transitive generated
group.  Strong equivalence classes of covers are simultaneous-conjugation
orbits of such triples.  Weak equivalence adds moves induced by
homeomorphisms of the target sphere: swaps of branching points with equal
partitions and a reflection; which moves to include is a convention that can
be calibrated against trusted counts.

The enumeration anchors the slot whose conjugacy class is most expensive to
scan, streams the cheapest remaining class, forces the third permutation
from the product relation, and merges survivors into orbits of the anchor's
centralizer.  When the streamed class consists of fixed-point-free
involutions the scan runs through the kernel backend and is split into
disjoint blocks that can be processed by a thread pool; the merge is a set
union, so counts do not depend on the thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from . import perm as P
from .branchdata import BranchDatum, rh_compatible

HARD_DEGREE_CAP = 24
DEFAULT_DEGREE_BOUND = 16


class IncompatibleDatumError(ValueError):
    """The datum fails the compatibility relation, so no cover exists."""


class InfeasibleDegreeError(RuntimeError):
    """The degree is beyond the configured (or absolute) enumeration bound."""


class CalibrationError(RuntimeError):
    """Convention calibration failed."""


class NoFittingConventionError(CalibrationError):
    """No convention reproduces every expected count in the suite."""


class AmbiguousSuiteError(CalibrationError):
    """More than one convention fits; the suite does not discriminate."""


@dataclass(frozen=True)
class WeakConvention:
    """Which target-sphere moves weak equivalence is taken to include.

    Simultaneous conjugation is always included.  Slot permutations are only
    ever applied between slots whose partitions are equal, which is the only
    type-preserving case.
    """

    include_reflection: bool
    include_slot_permutations: bool

    def label(self) -> str:
        if self.include_reflection and self.include_slot_permutations:
            return "conjugation+swaps+reflection"
        if self.include_reflection:
            return "conjugation+reflection"
        if self.include_slot_permutations:
            return "conjugation+swaps"
        return "conjugation"


CONJUGATION_ONLY = WeakConvention(include_reflection=False, include_slot_permutations=False)
WITH_REFLECTION = WeakConvention(include_reflection=True, include_slot_permutations=False)
WITH_SLOT_SWAPS = WeakConvention(include_reflection=False, include_slot_permutations=True)
FULL_MOVES = WeakConvention(include_reflection=True, include_slot_permutations=True)
ALL_CONVENTIONS = (CONJUGATION_ONLY, WITH_REFLECTION, WITH_SLOT_SWAPS, FULL_MOVES)

Triple = tuple[P.Perm, P.Perm, P.Perm]


@dataclass(frozen=True)
class MonodromyTriple:
    """A representative triple: product is the identity, slots match the datum."""

    s1: P.Perm
    s2: P.Perm
    s3: P.Perm

    def as_tuple(self) -> Triple:
        return (self.s1, self.s2, self.s3)

    def validate(self, datum: BranchDatum) -> None:
        s1, s2, s3 = self.as_tuple()
        if P.compose(s1, P.compose(s2, s3)) != P.identity(datum.degree):
            raise ValueError("product of the triple is not the identity")
        for slot, (s, pi) in enumerate(zip(self.as_tuple(), datum.partitions), start=1):
            if P.cycle_type(s) != pi:
                raise ValueError(f"slot {slot} has the wrong cycle type")
        if not P.is_transitive([s1, s2, s3], datum.degree):
            raise ValueError("the triple does not generate a transitive group")


def _check_feasible(datum: BranchDatum, degree_bound: int) -> None:
    if datum.degree > HARD_DEGREE_CAP:
        raise InfeasibleDegreeError(
            f"degree {datum.degree} exceeds the absolute cap {HARD_DEGREE_CAP}"
        )
    if datum.degree > degree_bound:
        raise InfeasibleDegreeError(
            f"degree {datum.degree} exceeds the configured bound {degree_bound}"
        )


def _forced_value(anchor: int, stream: int, r: P.Perm, v: P.Perm) -> P.Perm:
    """The third permutation forced by the product relation.

    ``r`` sits in slot ``anchor`` and ``v`` in slot ``stream`` (0-indexed);
    the returned permutation belongs in the remaining slot.
    """
    slots: dict[int, P.Perm] = {anchor: r, stream: v}
    forced = 3 - anchor - stream
    if forced == 0:
        out = P.compose(P.inverse(slots[2]), P.inverse(slots[1]))
    elif forced == 1:
        out = P.compose(P.inverse(slots[0]), P.inverse(slots[2]))
    else:
        out = P.compose(P.inverse(slots[1]), P.inverse(slots[0]))
    return out


def _centralizer_order(parts: tuple[int, ...]) -> int:
    mult: dict[int, int] = {}
    for c in parts:
        mult[c] = mult.get(c, 0) + 1
    out = 1
    for c, m in mult.items():
        f = 1
        for i in range(2, m + 1):
            f *= i
        out *= c**m * f
    return out


def _choose_slots(datum: BranchDatum) -> tuple[int, int, int]:
    """(anchor, stream, forced) slot indices.

    The anchor is the slot whose remaining cheapest class costs least to
    stream, with ties broken towards the smallest centralizer (cheap orbit
    merging) and then the slot index; the streamed slot is the cheapest
    remaining class.
    """
    sizes = [P.class_size(pi) for pi in datum.partitions]

    def anchor_key(a: int) -> tuple[int, int, int]:
        stream_cost = min(sizes[s] for s in range(3) if s != a)
        return (stream_cost, _centralizer_order(datum.partitions[a]), a)

    anchor = min(range(3), key=anchor_key)
    stream = min((s for s in range(3) if s != anchor), key=lambda s: (sizes[s], s))
    return anchor, stream, 3 - anchor - stream


@dataclass(frozen=True)
class _AnchoredReps:
    anchor: int
    r: P.Perm
    zgens: tuple[P.Perm, ...]
    reps: tuple[Triple, ...]


def _orbit(triple: Triple, zgens: tuple[P.Perm, ...]) -> set[Triple]:
    """The orbit of a triple under simultaneous conjugation by <zgens>."""
    seen = {triple}
    frontier = [triple]
    while frontier:
        nxt = []
        for t in frontier:
            for g in zgens:
                u = (P.conjugate(t[0], g), P.conjugate(t[1], g), P.conjugate(t[2], g))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def _canonical(triple: Triple, zgens: tuple[P.Perm, ...]) -> Triple:
    return min(_orbit(triple, zgens))


def _scan_stream(datum: BranchDatum, threads: int) -> _AnchoredReps:
    d = datum.degree
    anchor, stream, forced = _choose_slots(datum)
    if _anchor_override is not None:
        anchor = _anchor_override
        sizes = [P.class_size(pi) for pi in datum.partitions]
        stream = min((s for s in range(3) if s != anchor), key=lambda s: (sizes[s], s))
        forced = 3 - anchor - stream
    tau_s = datum.partitions[stream]
    tau_f = datum.partitions[forced]
    r = P.class_representative(datum.partitions[anchor])
    zgens = tuple(P.centralizer_generators(r))

    survivors: set[Triple] = set()

    def to_triple(v: P.Perm, w: P.Perm) -> Triple:
        slots: dict[int, P.Perm] = {anchor: r, stream: v, forced: w}
        return (slots[0], slots[1], slots[2])

    if d % 2 == 0 and tau_s == (2,) * (d // 2) and d >= 2:
        # Fast path: stream the fixed-point-free involutions through the
        # kernel, split into blocks by the partner of point 0.
        left = (stream - anchor) % 3 == 1
        phi = P.inverse(r)
        anchor_cycles = P.cycles(r)
        parent = [0] * d
        for cyc in anchor_cycles:
            for x in cyc:
                parent[x] = cyc[0]
        blocks = list(range(1, d))

        def run_block(first: int) -> list[P.Perm]:
            return kernels.scan_involutions_block(
                d, first, phi, left, tau_f, parent, len(anchor_cycles)
            )

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(run_block, blocks))
        else:
            results = [run_block(first) for first in blocks]
        for block in results:
            for v in block:
                survivors.add(to_triple(v, _forced_value(anchor, stream, r, v)))
    else:
        id_d = P.identity(d)
        for v in P.class_stream(tau_s):
            w = _forced_value(anchor, stream, r, v)
            if P.cycle_type(w) != tau_f:
                continue
            if not P.is_transitive([r, v], d):
                continue
            triple = to_triple(v, w)
            if __debug__:
                t1, t2, t3 = triple
                assert P.compose(t1, P.compose(t2, t3)) == id_d
            survivors.add(triple)

    # Merge survivors into centralizer orbits; each orbit is contained in
    # the survivor set, so one sweep visits every orbit exactly once.
    reps: list[Triple] = []
    pending = set(survivors)
    while pending:
        t = next(iter(pending))
        orbit = _orbit(t, zgens)
        assert orbit <= survivors
        pending -= orbit
        reps.append(min(orbit))
    reps.sort()
    return _AnchoredReps(anchor=anchor, r=r, zgens=zgens, reps=tuple(reps))


_REPS_CACHE: dict[tuple[BranchDatum, int], _AnchoredReps] = {}


def _anchored_reps(datum: BranchDatum, threads: int, degree_bound: int) -> _AnchoredReps:
    if not rh_compatible(datum):
        raise IncompatibleDatumError(f"datum {datum} fails the compatibility relation")
    _check_feasible(datum, degree_bound)
    key = (datum, _anchor_override if _anchor_override is not None else -1)
    if key not in _REPS_CACHE:
        _REPS_CACHE[key] = _scan_stream(datum, threads)
    return _REPS_CACHE[key]


# Test hook: when set, forces the anchor slot (used to verify that counts do
# not depend on the anchoring choice).
_anchor_override: int | None = None


def enumerate_triples(
    datum: BranchDatum, threads: int = 1, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> list[MonodromyTriple]:
    """One representative per simultaneous-conjugation orbit of valid triples.

    Representatives are minimal in the lexicographic order on image-tuple
    triples within their orbit of the anchored centralizer action, and the
    list is sorted, so the output is deterministic.
    """
    info = _anchored_reps(datum, threads, degree_bound)
    return [MonodromyTriple(*t) for t in info.reps]


def strong_hurwitz(
    datum: BranchDatum, threads: int = 1, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> int:
    """Number of strong equivalence classes (simultaneous-conjugation orbits)."""
    return len(_anchored_reps(datum, threads, degree_bound).reps)


def _move_swap(i: int, j: int, t: Triple) -> Triple:
    """Swap slots i < j, preserving the product relation."""
    s1, s2, s3 = t
    if (i, j) == (0, 1):
        return (s2, P.conjugate(s1, P.inverse(s2)), s3)
    if (i, j) == (1, 2):
        return (s1, P.conjugate(s3, s2), s2)
    if (i, j) == (0, 2):
        return (P.conjugate(s3, P.compose(s1, s2)), s2, P.conjugate(s1, P.inverse(s2)))
    raise ValueError(f"bad slot pair ({i}, {j})")


def _move_reflection(t: Triple) -> Triple:
    """The reversal move; each slot is conjugate to the inverse of the old one."""
    s1, s2, s3 = t
    u = P.compose(s1, s2)
    return (
        P.inverse(s1),
        P.compose(s1, P.compose(P.inverse(s2), P.inverse(s1))),
        P.compose(u, P.compose(P.inverse(s3), P.inverse(u))),
    )


def _weak_orbit_count(datum: BranchDatum, info: _AnchoredReps, convention: WeakConvention) -> int:
    reps = info.reps
    index = {t: i for i, t in enumerate(reps)}
    parent = list(range(len(reps)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    moves = []
    if convention.include_slot_permutations:
        pis = datum.partitions
        for i, j in ((0, 1), (1, 2), (0, 2)):
            if pis[i] == pis[j]:
                moves.append(lambda t, i=i, j=j: _move_swap(i, j, t))
    if convention.include_reflection:
        moves.append(_move_reflection)

    id_d = P.identity(datum.degree)
    for i, t in enumerate(reps):
        for move in moves:
            u = move(t)
            if __debug__:
                assert P.compose(u[0], P.compose(u[1], u[2])) == id_d
                assert tuple(P.cycle_type(s) for s in u) == datum.partitions
            # Re-anchor: align the anchor slot back onto r, then canonicalize.
            g = P.conjugator_to(u[info.anchor], info.r)
            aligned = (
                P.conjugate(u[0], g),
                P.conjugate(u[1], g),
                P.conjugate(u[2], g),
            )
            canon = _canonical(aligned, info.zgens)
            union(i, index[canon])

    return sum(1 for i in range(len(reps)) if find(i) == i)


def weak_hurwitz(
    datum: BranchDatum,
    convention: WeakConvention,
    threads: int = 1,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> int:
    """Number of weak equivalence classes under the given convention.

    Never larger than the strong count, and zero exactly when it is zero.
    """
    info = _anchored_reps(datum, threads, degree_bound)
    return _weak_orbit_count(datum, info, convention)


def calibrate_convention(
    suite: list[tuple[BranchDatum, int]],
    threads: int = 1,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> WeakConvention:
    """The unique convention whose weak counts match every suite entry.

    Raises NoFittingConventionError when no convention matches (a wrong
    expected value or an implementation bug) and AmbiguousSuiteError when
    the suite does not single out one convention.
    """
    fits = list(ALL_CONVENTIONS)
    for datum, expected in suite:
        info = _anchored_reps(datum, threads, degree_bound)
        fits = [c for c in fits if _weak_orbit_count(datum, info, c) == expected]
        if not fits:
            raise NoFittingConventionError(
                f"no convention reproduces expected count {expected} for {datum}"
            )
    if len(fits) > 1:
        raise AmbiguousSuiteError(
            "suite fits several conventions: " + ", ".join(c.label() for c in fits)
        )
    return fits[0]


def unanchored_profile(
    datum: BranchDatum,
) -> tuple[int, dict[str, int]]:
    """(strong, weak-by-convention-label) by exhaustive enumeration.

    Every valid triple is materialized with no anchoring; strong orbits
    are computed by closing under conjugation by adjacent transpositions,
    weak orbits by additionally closing under each convention's moves.
    The enumeration is shared across all conventions.  Only sensible for
    very small degrees; used to certify the anchored algorithm.
    """
    if not rh_compatible(datum):
        raise IncompatibleDatumError(f"datum {datum} fails the compatibility relation")
    d = datum.degree
    if d > 8:
        raise InfeasibleDegreeError(f"unanchored enumeration is for tiny degrees, got d={d}")
    sizes = [P.class_size(pi) for pi in datum.partitions]
    order = sorted(range(3), key=lambda s: (sizes[s], s))
    a, b = order[0], order[1]
    c = 3 - a - b
    tau_c = datum.partitions[c]
    # The forced slot is the inverse of the product of the other two; with
    # compose(p, q) applying q first, the factors are the inverses of the
    # two known slots in the order fixed by which slot is forced.
    first_slot, second_slot = {0: (2, 1), 1: (0, 2), 2: (1, 0)}[c]
    a_first = first_slot == a
    # A slot whose partition has a single part holds a d-cycle, which makes
    # the generated group transitive on its own.
    auto_transitive = any(len(pi) == 1 for pi in datum.partitions)
    stream_b = [(vb, P.inverse(vb)) for vb in P.class_stream(datum.partitions[b])]
    triples: list[Triple] = []
    for va in P.class_stream(datum.partitions[a]):
        inva = P.inverse(va)
        for vb, invb in stream_b:
            vc = (
                P.compose(inva, invb) if a_first else P.compose(invb, inva)
            )
            if P.cycle_type(vc) != tau_c:
                continue
            if __debug__ and len(triples) < 8:
                assert vc == _forced_value(a, b, va, vb)
            if not auto_transitive and not P.is_transitive([va, vb], d):
                continue
            slots = {a: va, b: vb, c: vc}
            triples.append((slots[0], slots[1], slots[2]))

    # Intern the slot values and key triples by id triples; the closure
    # then works on small integers instead of nested tuples.
    pid: dict[P.Perm, int] = {}
    for t in triples:
        for p in t:
            if p not in pid:
                pid[p] = len(pid)
    perms = list(pid)
    keys = [(pid[t[0]], pid[t[1]], pid[t[2]]) for t in triples]
    key_of = {key: i for i, key in enumerate(keys)}

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(parent: list[int], x: int, y: int) -> None:
        rx, ry = find(parent, x), find(parent, y)
        if rx != ry:
            parent[rx] = ry

    base = list(range(len(triples)))
    for x in range(d - 1):
        g = P.from_cycles(d, [(x, x + 1)])
        cmap = [pid[P.conjugate(p, g)] for p in perms]
        for i, (k0, k1, k2) in enumerate(keys):
            union(base, i, key_of[(cmap[k0], cmap[k1], cmap[k2])])
    strong_roots = [i for i in range(len(triples)) if find(base, i) == i]
    strong = len(strong_roots)

    # The moves are conjugation-equivariant, so they send whole conjugation
    # orbits to conjugation orbits; one edge per orbit representative gives
    # the full weak closure.
    pis = datum.partitions
    weak: dict[str, int] = {}
    for convention in ALL_CONVENTIONS:
        moves = []
        if convention.include_slot_permutations:
            for i, j in ((0, 1), (1, 2), (0, 2)):
                if pis[i] == pis[j]:
                    moves.append(lambda t, i=i, j=j: _move_swap(i, j, t))
        if convention.include_reflection:
            moves.append(_move_reflection)
        parent = list(base)
        for i in strong_roots:
            for move in moves:
                u = move(triples[i])
                union(parent, i, key_of[(pid[u[0]], pid[u[1]], pid[u[2]])])
        weak[convention.label()] = sum(
            1 for i in strong_roots if find(parent, i) == i
        )
    return strong, weak


def unanchored_counts(
    datum: BranchDatum, convention: WeakConvention
) -> tuple[int, int]:
    """(strong, weak) by exhaustive unanchored enumeration; see
    unanchored_profile for the mechanics."""
    strong, weak = unanchored_profile(datum)
    return strong, weak[convention.label()]
