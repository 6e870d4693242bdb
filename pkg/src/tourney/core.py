"""Bitmask tournament core.

A tournament on n vertices is an orientation of the complete graph K_n:
exactly one arc between every pair of distinct vertices.  It is stored as n
out-neighbourhood bitmasks, one machine word per vertex: bit j of row i is
set iff the arc i -> j is present.  All operations treat Tournament as
immutable; anything that "changes" a tournament returns a new one.

Caps: order <= 64 (one word per row), canonicalization order <= 16.

The canonical form is the lexicographically minimal row-major adjacency
bit-string over all relabelings, computed by an ordered-partition search
that is exact (the pruning never discards a permutation that could still
attain the minimum).  Two tournaments are isomorphic iff their canonical
keys are equal.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import (
    ArityMismatchError,
    LoopArcError,
    MissingOrDoubleArcError,
    OrderTooLargeError,
    OutOfRangeError,
    SizeMismatchError,
)

MAX_ORDER = 64
MAX_CANONICAL_ORDER = 16

VertexSet = int  # subset of vertices as a bitmask


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Bitmask of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: VertexSet) -> list[int]:
    """Sorted vertex indices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Tournament:
    """Immutable tournament: order n plus one out-row bitmask per vertex."""

    n: int
    out_rows: tuple[int, ...]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, i: int, j: int) -> bool:
        return (self.out_rows[i] >> j) & 1 == 1

    def out_mask(self, i: int) -> VertexSet:
        return self.out_rows[i]

    def in_mask(self, i: int) -> VertexSet:
        return self.full_mask() & ~self.out_rows[i] & ~(1 << i)

    def out_degree(self, i: int) -> int:
        return self.out_rows[i].bit_count()

    def in_degree(self, i: int) -> int:
        return self.n - 1 - self.out_rows[i].bit_count()

    def vertices(self) -> range:
        return range(self.n)

    def arcs(self) -> Iterable[tuple[int, int]]:
        """All arcs (i, j) in row-major order."""
        for i in range(self.n):
            row = self.out_rows[i]
            while row:
                low = row & -row
                yield i, low.bit_length() - 1
                row ^= low


def validate(n: int, rows: Sequence[int]) -> Tournament:
    """Check the tournament axioms and build a Tournament.

    Raises SizeMismatchError (bad n, row count, or stray bits outside the
    vertex range), LoopArcError (diagonal bit), MissingOrDoubleArcError
    (some pair without exactly one arc), OrderTooLargeError (n > 64).
    """
    if n < 1:
        raise SizeMismatchError(f"order must be >= 1, got {n}")
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds the cap of {MAX_ORDER}")
    if len(rows) != n:
        raise SizeMismatchError(f"expected {n} rows, got {len(rows)}")
    full = (1 << n) - 1
    for i, row in enumerate(rows):
        if row < 0 or row & ~full:
            raise SizeMismatchError(f"row {i} has bits outside vertices 0..{n - 1}")
        if (row >> i) & 1:
            raise LoopArcError(f"vertex {i} has an arc to itself")
    for i in range(n):
        for j in range(i + 1, n):
            forward = (rows[i] >> j) & 1
            backward = (rows[j] >> i) & 1
            if forward == backward:
                kind = "no arc" if forward == 0 else "both arcs"
                raise MissingOrDoubleArcError(f"pair ({i}, {j}) has {kind}")
    return Tournament(n, tuple(rows))


def _as_subset_mask(t: Tournament, subset: VertexSet | Iterable[int]) -> int:
    mask = subset if isinstance(subset, int) else mask_of(subset)
    if mask < 0 or mask & ~t.full_mask():
        raise OutOfRangeError("vertex set is not a subset of the host tournament")
    return mask


def induced(t: Tournament, subset: VertexSet | Iterable[int]) -> Tournament:
    """Subtournament induced on a vertex set, renumbered in increasing
    order of the original indices."""
    mask = _as_subset_mask(t, subset)
    verts = vertices_of(mask)
    index = {v: a for a, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = t.out_rows[v] & mask
        r = 0
        while row:
            low = row & -row
            r |= 1 << index[low.bit_length() - 1]
            row ^= low
        rows.append(r)
    return Tournament(len(verts), tuple(rows))


def converse(t: Tournament) -> Tournament:
    """Reverse every arc."""
    return Tournament(t.n, tuple(t.in_mask(i) for i in range(t.n)))


def compose(t: Tournament, replacements: Sequence[Tournament]) -> Tournament:
    """Blow up each vertex of t into a tournament.

    Vertex i of the host becomes a block carrying replacements[i]; arcs
    inside a block come from the replacement, arcs between blocks all
    follow the host arc.  Blocks are laid out in host-vertex order.
    """
    if len(replacements) != t.n:
        raise ArityMismatchError(
            f"need {t.n} replacement tournaments, got {len(replacements)}")
    orders = [r.n for r in replacements]
    total = sum(orders)
    if total > MAX_ORDER:
        raise OrderTooLargeError(f"composed order {total} exceeds {MAX_ORDER}")
    offsets = [0] * t.n
    for i in range(1, t.n):
        offsets[i] = offsets[i - 1] + orders[i - 1]
    block_mask = [((1 << orders[i]) - 1) << offsets[i] for i in range(t.n)]
    rows = []
    for i in range(t.n):
        rep = replacements[i]
        outside = 0
        host_row = t.out_rows[i]
        while host_row:
            low = host_row & -host_row
            outside |= block_mask[low.bit_length() - 1]
            host_row ^= low
        for v in range(rep.n):
            rows.append((rep.out_rows[v] << offsets[i]) | outside)
    return Tournament(total, tuple(rows))


# -- strong components -------------------------------------------------------

@dataclass(frozen=True)
class StrongDecomposition:
    """Strong components as vertex masks, earlier components dominating
    later ones (the condensation of a tournament is transitive)."""

    components: tuple[VertexSet, ...]


def _reach_masks(t: Tournament) -> list[int]:
    rows = t.out_rows
    res = []
    for i in range(t.n):
        reach = (1 << i) | rows[i]
        frontier = rows[i]
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reach
            reach |= frontier
        res.append(reach)
    return res


def strong_decomposition(t: Tournament) -> StrongDecomposition:
    """Partition into strong components in domination order."""
    reach = _reach_masks(t)
    comps: list[int] = []
    seen = 0
    for i in range(t.n):
        if (seen >> i) & 1:
            continue
        back = 0
        for j in range(t.n):
            if (reach[j] >> i) & 1:
                back |= 1 << j
        comp = reach[i] & back
        comps.append(comp)
        seen |= comp
    # Earlier component reaches strictly more, so reach size sorts them.
    comps.sort(key=lambda c: reach[vertices_of(c)[0]].bit_count(), reverse=True)
    return StrongDecomposition(tuple(comps))


def is_strong(t: Tournament) -> bool:
    return len(strong_decomposition(t).components) == 1


# -- canonical form ----------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Lexicographically minimal row-major adjacency bit-string, packed as
    an n*n-bit integer (bit (i, j) sits at weight 2**(n*n - 1 - (i*n + j)))."""

    n: int
    key: int

    def hex(self) -> str:
        width = (self.n * self.n + 3) // 4
        return format(self.key, f"0{width}x")

    def rows(self) -> tuple[int, ...]:
        """Decode the key back into out-row bitmasks (the canonical
        representative's adjacency)."""
        n = self.n
        rows = []
        for i in range(n):
            chunk = (self.key >> ((n - 1 - i) * n)) & ((1 << n) - 1)
            # chunk holds row i most-significant-column-first; mirror it.
            r = 0
            for j in range(n):
                if (chunk >> (n - 1 - j)) & 1:
                    r |= 1 << j
            rows.append(r)
        return tuple(rows)


def canonical_form(t: Tournament) -> CanonicalForm:
    """Exact canonical key by ordered-partition search.

    Positions of the new labeling are filled left to right.  The unplaced
    vertices form an ordered list of cells; the vertex for the next
    position must come from the first cell.  For a candidate w the row it
    would write is forced except for the order inside later cells, where
    non-out-neighbours (0 bits) must precede out-neighbours (1 bits) in any
    minimal completion; that split refines the cells for the recursion.
    Only candidates attaining the minimal row at their level can lead to
    the global minimum, and a best-so-far prefix comparison prunes
    dominated subtrees.
    """
    n = t.n
    if n > MAX_CANONICAL_ORDER:
        raise OrderTooLargeError(
            f"canonicalization capped at order {MAX_CANONICAL_ORDER}, got {n}")
    rows = t.out_rows
    if n == 1:
        return CanonicalForm(1, 0)

    best: list[int] | None = None

    def dfs(assigned: list[int], cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best
        a = len(assigned)
        tied = False
        if best is not None:
            bp = best[:a]
            if prefix > bp:
                return
            tied = prefix == bp
        if a == n:
            if best is None or prefix < best:
                best = prefix[:]
            return
        first = cells[0]
        rest = cells[1:]
        cands = []
        for w in first:
            rw = rows[w]
            r = 0
            for v in assigned:
                r = (r << 1) | ((rw >> v) & 1)
            r <<= 1  # w's own position, diagonal zero
            fc = [v for v in first if v != w]
            if fc:
                ones = 0
                for v in fc:
                    ones += (rw >> v) & 1
                r = (r << len(fc)) | ((1 << ones) - 1)
            for cell in rest:
                ones = 0
                for v in cell:
                    ones += (rw >> v) & 1
                r = (r << len(cell)) | ((1 << ones) - 1)
            cands.append((r, w, fc))
        rmin = min(c[0] for c in cands)
        if best is not None and tied and rmin > best[a]:
            return
        for r, w, fc in cands:
            if r != rmin:
                continue
            rw = rows[w]
            nc = []
            for cell in [fc] + rest:
                zeros = [v for v in cell if not (rw >> v) & 1]
                ones = [v for v in cell if (rw >> v) & 1]
                if zeros:
                    nc.append(zeros)
                if ones:
                    nc.append(ones)
            assigned.append(w)
            prefix.append(rmin)
            dfs(assigned, nc, prefix)
            assigned.pop()
            prefix.pop()

    dfs([], [list(range(n))], [])
    assert best is not None
    key = 0
    for row in best:
        key = (key << n) | row
    return CanonicalForm(n, key)


def key_for_permutation(t: Tournament, perm: Sequence[int]) -> int:
    """Row-major adjacency key after relabeling: position a of perm names
    the original vertex placed at new index a.  Used by the brute-force
    canonicalization oracle and by tests."""
    n = t.n
    key = 0
    for a in range(n):
        row_old = t.out_rows[perm[a]]
        r = 0
        for b in range(n):
            r = (r << 1) | ((row_old >> perm[b]) & 1 if a != b else 0)
        key = (key << n) | r
    return key


def canonical_form_bruteforce(t: Tournament) -> CanonicalForm:
    """Reference canonicalization: minimum over all n! relabelings."""
    best = min(key_for_permutation(t, p)
               for p in itertools.permutations(range(t.n)))
    return CanonicalForm(t.n, best)


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    """Exact isomorphism via canonical keys."""
    if a.n != b.n:
        return False
    return canonical_form(a).key == canonical_form(b).key


def automorphism_count(t: Tournament) -> int:
    """Order of the automorphism group, by backtracking over partial
    vertex maps.  Each extension must preserve every already-placed arc,
    so inconsistent branches die within a few levels."""
    if t.n > MAX_CANONICAL_ORDER:
        raise OrderTooLargeError(
            f"automorphism search capped at order {MAX_CANONICAL_ORDER}")
    rows = t.out_rows
    n = t.n
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> int:
        if i == n:
            return 1
        ri = rows[i]
        total = 0
        for w in range(n):
            if used[w]:
                continue
            rw = rows[w]
            for j in range(i):
                if ((ri >> j) & 1) != ((rw >> image[j]) & 1):
                    break
            else:
                image[i] = w
                used[w] = True
                total += extend(i + 1)
                used[w] = False
        return total

    return extend(0)
