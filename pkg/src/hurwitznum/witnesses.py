"""Explicit dessin certificates for every positive count.

A witness is a family tag plus decorated-edge parameters; each in-scope
(genus, extra-vertex) context has a fixed list of graph families with known
symmetries and a known realized partition.  For the genus-0 contexts the
enumerator solves each family's linear system directly and keeps solutions
with all entries positive; the positivity checks are exactly the side
conditions of the case analysis.  For the other contexts the parameters are
enumerated under the constraint imposed by the partition.

Data in which two of the three partitions coincide admit extra graph
moves that the per-partition enumeration cannot see; for those seven data
the resolved counts are fixed table constants, each cross-checked by the
brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branchdata import BranchDatum, Partition, is_partition
from .formulas import classify_genus0_h1

Context = tuple[int, int]

FAMILIES: dict[Context, tuple[str, ...]] = {
    (0, 1): ("I", "II"),
    (0, 2): ("I", "II", "III"),
    (1, 1): ("II-torus",),
    (1, 2): ("I", "II", "III", "IV"),
    (2, 3): ("F1", "F2", "F3", "F4", "F5", "F6"),
}

PARAM_COUNT: dict[Context, int] = {
    (0, 1): 3,
    (0, 2): 4,
    (1, 1): 3,
    (1, 2): 4,
    (2, 3): 5,
}


def canonical_params(
    context: Context, family: str, params: tuple[int, ...]
) -> tuple[int, ...]:
    """The canonical representative of params under the family's symmetry.

    >>> canonical_params((0, 1), "II", (1, 6, 1))
    (6, 1, 1)
    >>> canonical_params((0, 2), "III", (3, 1, 1, 2))
    (3, 1, 2, 1)
    >>> canonical_params((2, 3), "F2", (1, 2, 1, 3, 4))
    (1, 1, 2, 4, 3)
    """
    if context == (0, 1):
        if family == "I":
            return (params[0],) + tuple(sorted(params[1:], reverse=True))
        return tuple(sorted(params, reverse=True))
    if context == (0, 2):
        if family in ("I", "III"):
            return params[:2] + tuple(sorted(params[2:], reverse=True))
        return params
    if context == (1, 1):
        return tuple(sorted(params, reverse=True))
    if context == (1, 2):
        return params[:2] + tuple(sorted(params[2:], reverse=True))
    if family == "F6":
        return params
    b, c, d, e = params[1:]
    return (params[0],) + min((b, c, d, e), (c, b, e, d))


@dataclass(frozen=True)
class DessinWitness:
    """A graph family tag with positive edge decorations, canonicalized."""

    context: Context
    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.context not in FAMILIES:
            raise ValueError(f"unsupported context {self.context}")
        if self.family not in FAMILIES[self.context]:
            raise ValueError(
                f"family {self.family!r} not available in context {self.context}"
            )
        if len(self.params) != PARAM_COUNT[self.context]:
            raise ValueError(
                f"context {self.context} needs {PARAM_COUNT[self.context]} "
                f"parameters, got {len(self.params)}"
            )
        if any(x < 1 for x in self.params):
            raise ValueError(f"parameters must be positive, got {self.params}")
        if canonical_params(self.context, self.family, self.params) != self.params:
            raise ValueError(f"parameters {self.params} are not canonical")

    def text(self) -> str:
        """Table text form, e.g. 'I(5,2,1)'.

        >>> DessinWitness((0, 1), "I", (5, 2, 1)).text()
        'I(5,2,1)'
        """
        return f"{self.family}({','.join(str(x) for x in self.params)})"

    def to_json(self) -> dict:
        return {"family": self.family, "params": list(self.params)}


def realized_partition(w: DessinWitness, k: int) -> Partition:
    """The partition of 2k realized by the witness.

    >>> realized_partition(DessinWitness((0, 1), "I", (6, 1, 1)), 8)
    (14, 1, 1)
    >>> realized_partition(DessinWitness((0, 1), "II", (4, 3, 1)), 8)
    (7, 5, 4)
    """
    if sum(w.params) != k:
        raise ValueError(f"parameters {w.params} must sum to k = {k}")
    g, h = w.context
    if w.context == (0, 1):
        a, b, c = w.params
        entries = [2 * a + b + c, b, c] if w.family == "I" else [a + b, a + c, b + c]
    elif w.context == (0, 2):
        a, b, c, d = w.params
        if w.family == "I":
            entries = [2 * a + b + c + d, b, c, d]
        elif w.family == "II":
            entries = [2 * a + b + c, c + d, b, d]
        else:
            entries = [a + c + d, b + c, b + d, a]
    elif w.context == (1, 2):
        a, b, c, d = w.params
        if w.family in ("I", "II"):
            entries = [a + 2 * b + 2 * c + 2 * d, a]
        elif w.family == "III":
            entries = [2 * a + 2 * b + c + d, c + d]
        else:
            entries = [a + 2 * b + c + d, a + c + d]
    else:
        entries = [2 * k]
    out = tuple(sorted(entries, reverse=True))
    assert sum(out) == 2 * k
    return out


def _w(context: Context, family: str, raw: tuple[int, ...]) -> DessinWitness | None:
    """A witness from a raw system solution, or None if any entry is not
    positive (the positivity of each entry is the case condition)."""
    if any(x < 1 for x in raw):
        return None
    return DessinWitness(context, family, canonical_params(context, family, raw))


def _genus0_h1(k: int, pi: Partition) -> list[DessinWitness]:
    label = classify_genus0_h1(k, pi)
    if label == "i":
        return []
    ctx = (0, 1)
    if label in ("ii-a", "ii-b"):
        q = pi[1]
        if label == "ii-a":
            out = _w(ctx, "I", (k - 2 * q, q, q))
        else:
            out = _w(ctx, "II", (k - q, k - q, 2 * q - k))
    else:
        q, r = pi[1], pi[2]
        if label == "iii-a":
            out = _w(ctx, "I", (k - q - r, q, r))
        else:
            out = _w(ctx, "II", (k - r, k - q, q + r - k))
    assert out is not None, (k, pi, label)
    return [out]


def _genus0_h2(k: int, pi: Partition) -> list[DessinWitness]:
    ctx = (0, 2)
    p, q, r, s = pi
    mults = sorted((pi.count(v) for v in set(pi)), reverse=True)
    raw: list[tuple[str, tuple[int, int, int, int]]] = []
    if mults == [4] or mults == [2, 2]:
        pass
    elif mults == [3, 1] and pi.count(p) == 3:
        # pi = [p, p, p, q]
        raw = [("III", (2 * k - 3 * p, k - p, 2 * p - k, 2 * p - k))]
    elif mults == [3, 1]:
        # pi = [p, q, q, q]
        raw = [
            ("I", (k - 3 * q, q, q, q)),
            ("III", (q, 3 * q - k, k - 2 * q, k - 2 * q)),
        ]
    elif mults == [2, 1, 1] and pi.count(p) == 2:
        # pi = [p, p, q, r] with q = pi[2], r = pi[3]
        q, r = pi[2], pi[3]
        raw = [
            ("II", (p + q - k, 2 * k - 2 * p - q, p - q, q)),
            ("III", (2 * k - 2 * p - q, k - p, 2 * p - k, p + q - k)),
            ("III", (2 * k - 2 * p - q, k - q, p + q - k, p + q - k)),
        ]
    elif mults == [2, 1, 1] and pi.count(q) == 2:
        # pi = [p, q, q, r] with r = pi[3]
        r = pi[3]
        raw = [
            ("I", (p - k, 2 * k - p - 2 * q, q, q)),
            ("I", (p - k, q, q, 2 * k - p - 2 * q)),
            ("II", (k - 2 * q, q, p + 3 * q - 2 * k, 2 * k - p - 2 * q)),
            ("II", (2 * q - k, 2 * k - p - 2 * q, p - q, q)),
            ("III", (2 * k - p - 2 * q, k - p, p + q - k, p + q - k)),
            ("III", (q, k - p, p + q - k, k - 2 * q)),
            ("III", (2 * k - p - 2 * q, k - q, p + q - k, 2 * q - k)),
        ]
    elif mults == [2, 1, 1]:
        # pi = [p, q, r, r]; p - q is even for such a partition of 2k
        assert (p - q) % 2 == 0
        j = (p - q) // 2
        assert r == k - p + j
        raw = [
            ("I", (p - k, p - 2 * j, k - p + j, k - p + j)),
            ("I", (p - k, k - p + j, p - 2 * j, k - p + j)),
            ("II", (j, k - p + j, 2 * p - k - 3 * j, k - p + j)),
            ("III", (k - p + j, k - p, 2 * p - 2 * j - k, j)),
            ("III", (p - 2 * j, k - p, j, j)),
        ]
    else:
        # pi = [p, q, r, s], all distinct
        raw = [
            ("I", (p - k, q, r, s)),
            ("I", (p - k, r, q, s)),
            ("I", (p - k, s, q, r)),
            ("II", (k - q - r, q, r - s, s)),
            ("II", (k - q - r, r, q - s, s)),
            ("II", (p + r - k, s, q - r, r)),
            ("II", (q + r - k, s, p - r, r)),
            ("II", (q + r - k, s, p - q, q)),
            ("III", (q, k - p, p + r - k, k - q - r)),
            ("III", (r, k - p, p + q - k, k - q - r)),
            ("III", (s, k - p, p + q - k, p + r - k)),
            ("III", (s, k - q, p + q - k, q + r - k)),
            ("III", (s, k - r, p + r - k, q + r - k)),
        ]
    out: list[DessinWitness] = []
    for family, sol in raw:
        w = _w(ctx, family, sol)
        if w is not None:
            out.append(w)
    assert len(set(out)) == len(out), (k, pi, out)
    return out


def _genus1_h1(k: int) -> list[DessinWitness]:
    out = []
    for a in range(1, k // 3 + 1):
        for b in range(a, (k - a) // 2 + 1):
            c = k - a - b
            out.append(DessinWitness((1, 1), "II-torus", (c, b, a)))
    return out


def _genus1_h2(k: int, pi: Partition) -> list[DessinWitness]:
    ctx = (1, 2)
    p = min(pi)
    out: list[DessinWitness] = []
    for family in ("I", "II"):
        a = p
        for b in range(1, k - p - 1):
            rest = k - p - b
            for d in range(1, rest // 2 + 1):
                out.append(DessinWitness(ctx, family, (a, b, rest - d, d)))
    for a in range(1, k - p):
        b = k - p - a
        for d in range(1, p // 2 + 1):
            out.append(DessinWitness(ctx, "III", (a, b, p - d, d)))
    b = k - p
    if b >= 1:
        for a in range(1, p - 1):
            rest = p - a
            for d in range(1, rest // 2 + 1):
                out.append(DessinWitness(ctx, "IV", (a, b, rest - d, d)))
    return out


def _genus2_h3(k: int) -> list[DessinWitness]:
    ctx = (2, 3)
    out: list[DessinWitness] = []
    symmetric: list[tuple[int, ...]] = []
    plain: list[tuple[int, ...]] = []
    for a in range(1, k - 3):
        rest = k - a
        for b in range(1, rest - 2):
            for c in range(1, rest - b - 1):
                for d in range(1, rest - b - c + 1):
                    e = rest - b - c - d
                    if e < 1:
                        continue
                    plain.append((a, b, c, d, e))
                    if (b, c, d, e) <= (c, b, e, d):
                        symmetric.append((a, b, c, d, e))
    for family in ("F1", "F2", "F3", "F4", "F5"):
        for params in symmetric:
            out.append(DessinWitness(ctx, family, params))
    for params in plain:
        out.append(DessinWitness(ctx, "F6", params))
    return out


def enumerate_witnesses(g: int, h: int, k: int, pi: Partition) -> list[DessinWitness]:
    """Complete duplicate-free list of canonical witnesses realizing pi.

    Ordered by family tag, then lexicographically by parameters.

    >>> [w.text() for w in enumerate_witnesses(0, 1, 8, (9, 4, 3))]
    ['I(1,4,3)']
    >>> enumerate_witnesses(0, 1, 8, (8, 7, 1))
    []
    >>> [w.text() for w in enumerate_witnesses(0, 2, 6, (5, 4, 2, 1))]
    ['II(1,1,2,2)', 'III(1,1,3,1)']
    >>> [w.text() for w in enumerate_witnesses(1, 1, 3, (6,))]
    ['II-torus(1,1,1)']
    >>> len(enumerate_witnesses(2, 3, 5, (10,)))
    6
    """
    context = (g, h)
    if context not in FAMILIES:
        raise ValueError(f"no witness families for context {context}")
    if not is_partition(pi):
        raise ValueError(f"not a partition in canonical order: {pi}")
    expected_len = h + 2 - 2 * g
    if len(pi) != expected_len or sum(pi) != 2 * k:
        raise ValueError(
            f"partition must have {expected_len} parts summing to {2 * k}, got {pi}"
        )
    if context == (0, 1):
        out = _genus0_h1(k, pi)
    elif context == (0, 2):
        out = _genus0_h2(k, pi)
    elif context == (1, 1):
        out = _genus1_h1(k)
    elif context == (1, 2):
        out = _genus1_h2(k, pi)
    else:
        out = _genus2_h3(k)
    for w in out:
        assert realized_partition(w, k) == pi, (w, pi)
    families = FAMILIES[context]
    out.sort(key=lambda w: (families.index(w.family), w.params))
    return out


# Resolved counts for the seven data in which two partitions coincide; the
# per-partition enumeration above is only a lower-bound certificate there,
# and each value is cross-checked against the brute-force oracle.
COINCIDENT_RESOLUTIONS: dict[BranchDatum, int] = {
    BranchDatum(0, 4, ((2, 2), (3, 1), (2, 2))): 0,
    BranchDatum(0, 6, ((2, 2, 2), (3, 3), (2, 2, 2))): 1,
    BranchDatum(0, 8, ((2, 2, 2, 2), (5, 3), (2, 2, 2, 2))): 0,
    BranchDatum(0, 4, ((2, 2), (3, 1), (3, 1))): 1,
    BranchDatum(0, 8, ((2, 2, 2, 2), (3, 3, 2), (3, 3, 2))): 1,
    BranchDatum(0, 12, ((2, 2, 2, 2, 2, 2), (5, 3, 2, 2), (5, 3, 2, 2))): 3,
    BranchDatum(1, 8, ((2, 2, 2, 2), (5, 3), (5, 3))): 1,
}


def coincident_resolution(datum: BranchDatum) -> int | None:
    """The resolved count when the datum has coincident partitions, else None."""
    return COINCIDENT_RESOLUTIONS.get(datum)
