"""Structural classification predicates.

Degree-based classes:

  regular                n odd, every out-degree (n-1)/2
  near regular           n even, in-degree multiset {n/2 x n/2, (n/2-1) x n/2}
  doubly regular         regular, n = 3 (mod 4), and every arc (i, j) has
                         |N+(i) & N+(j)| = (n-3)/4
  nearly doubly regular  regular, n = 1 (mod 4), every out-set near regular

Local classes look one level down: locally transitive means every out-set
(plus side), in-set (minus side), or both induce a 3-cycle-free
subtournament; locally regular asks the induced subtournament to be
regular or near regular according to its parity.  The rotationally-local
classes recurse exactly one level: rldr / rlndr ask every out-set to
induce a doubly regular / nearly doubly regular tournament.

aat_positive asks every vertex pair for a common out-neighbour (all
off-diagonal entries of A A^T positive), and landau_feasible checks the
classic prefix-sum criterion for a non-decreasing score sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .core import Tournament, induced, is_strong
from .counting import _c3_within
from .errors import BadMError, NotSortedError

_SIDES = ("plus", "minus", "both")


def is_transitive(t: Tournament) -> bool:
    """No 3-cycles at all."""
    return _c3_within(t, t.full_mask()) == 0


def is_regular(t: Tournament) -> bool:
    if t.n % 2 == 0:
        return False
    half = (t.n - 1) // 2
    return all(r.bit_count() == half for r in t.out_rows)


def is_near_regular(t: Tournament) -> bool:
    n = t.n
    if n % 2 == 1:
        return False
    ins = sorted(n - 1 - r.bit_count() for r in t.out_rows)
    return ins == [n // 2 - 1] * (n // 2) + [n // 2] * (n // 2)


def semi_degree(t: Tournament) -> int:
    """(n-1)/2 for a regular tournament."""
    from .errors import NotRegularError

    if not is_regular(t):
        raise NotRegularError("semi-degree is defined for regular tournaments")
    return (t.n - 1) // 2


def _check_side(side: str) -> None:
    if side not in _SIDES:
        raise BadMError(f"side must be one of {_SIDES}, got {side!r}")


def is_locally_transitive(t: Tournament, side: str = "both") -> bool:
    """Every out-set (plus), in-set (minus), or both induce 3-cycle-free
    subtournaments."""
    _check_side(side)
    if side in ("plus", "both"):
        if any(_c3_within(t, t.out_mask(i)) != 0 for i in range(t.n)):
            return False
    if side in ("minus", "both"):
        if any(_c3_within(t, t.in_mask(i)) != 0 for i in range(t.n)):
            return False
    return True


def _mask_regular_or_near(t: Tournament, mask: int) -> bool:
    k = mask.bit_count()
    if k == 0:
        return True
    if k % 2 == 1:
        half = (k - 1) // 2
        m = mask
        while m:
            low = m & -m
            m ^= low
            if (t.out_rows[low.bit_length() - 1] & mask).bit_count() != half:
                return False
        return True
    outs = []
    m = mask
    while m:
        low = m & -m
        m ^= low
        outs.append((t.out_rows[low.bit_length() - 1] & mask).bit_count())
    ins = sorted(k - 1 - o for o in outs)
    return ins == [k // 2 - 1] * (k // 2) + [k // 2] * (k // 2)


def is_locally_regular(t: Tournament, side: str = "both") -> bool:
    """Every out-set (plus), in-set (minus), or both induce a regular or
    near-regular subtournament per the subset's parity."""
    _check_side(side)
    if side in ("plus", "both"):
        if any(not _mask_regular_or_near(t, t.out_mask(i)) for i in range(t.n)):
            return False
    if side in ("minus", "both"):
        if any(not _mask_regular_or_near(t, t.in_mask(i)) for i in range(t.n)):
            return False
    return True


def is_doubly_regular(t: Tournament) -> bool:
    """Regular with every arc's common-out-neighbour count (n-3)/4
    (forcing n = 3 mod 4).  Orders 0 and 1 count vacuously."""
    n = t.n
    if n <= 1:
        return True
    if n % 4 != 3 or not is_regular(t):
        return False
    want = (n - 3) // 4
    rows = t.out_rows
    for i in range(n):
        oi = rows[i]
        row = oi
        while row:
            low = row & -row
            row ^= low
            if (oi & rows[low.bit_length() - 1]).bit_count() != want:
                return False
    return True


def is_nearly_doubly_regular(t: Tournament) -> bool:
    """Regular with n = 1 (mod 4) and every out-set inducing a
    near-regular subtournament.  Orders 0 and 1 count vacuously."""
    n = t.n
    if n <= 1:
        return True
    if n % 4 != 1 or not is_regular(t):
        return False
    return all(_mask_regular_or_near(t, t.out_mask(i)) for i in range(n))


def is_rldr(t: Tournament) -> bool:
    """Regular and every out-set induces a doubly regular tournament."""
    if not is_regular(t):
        return False
    return all(is_doubly_regular(induced(t, t.out_mask(i))) for i in range(t.n))


def is_rlndr(t: Tournament) -> bool:
    """Regular and every out-set induces a nearly doubly regular
    tournament."""
    if not is_regular(t):
        return False
    return all(is_nearly_doubly_regular(induced(t, t.out_mask(i)))
               for i in range(t.n))


def aat_positive(t: Tournament) -> bool:
    """Every pair of distinct vertices has a common out-neighbour."""
    rows = t.out_rows
    for i in range(t.n):
        for j in range(i + 1, t.n):
            if not rows[i] & rows[j]:
                return False
    return True


def landau_feasible(seq: Sequence[int]) -> bool:
    """Is a non-decreasing sequence the score list of some tournament?
    Prefix sums at least C(k, 2), total exactly C(n, 2)."""
    n = len(seq)
    prev = 0
    for v in seq:
        if v < prev or v < 0:
            raise NotSortedError("scores must be non-negative and non-decreasing")
        prev = v
    total = 0
    for k, v in enumerate(seq, start=1):
        total += v
        if total < comb(k, 2):
            return False
    return total == comb(n, 2)


_FLAG_ORDER = (
    "strong",
    "transitive",
    "regular",
    "near_regular",
    "doubly_regular",
    "nearly_doubly_regular",
    "locally_transitive_plus",
    "locally_transitive_minus",
    "locally_transitive",
    "locally_regular_plus",
    "locally_regular_minus",
    "locally_regular",
    "rldr",
    "rlndr",
    "aat_positive",
)


@dataclass(frozen=True)
class ClassificationReport:
    """All flags computed eagerly, in a fixed key order, plus the
    semi-degree when the tournament is regular."""

    n: int
    flags: dict[str, bool]
    semi_degree: int | None


def classification_report(t: Tournament) -> ClassificationReport:
    regular = is_regular(t)
    ltp = is_locally_transitive(t, "plus")
    ltm = is_locally_transitive(t, "minus")
    lrp = is_locally_regular(t, "plus")
    lrm = is_locally_regular(t, "minus")
    values = {
        "strong": is_strong(t),
        "transitive": is_transitive(t),
        "regular": regular,
        "near_regular": is_near_regular(t),
        "doubly_regular": is_doubly_regular(t),
        "nearly_doubly_regular": is_nearly_doubly_regular(t),
        "locally_transitive_plus": ltp,
        "locally_transitive_minus": ltm,
        "locally_transitive": ltp and ltm,
        "locally_regular_plus": lrp,
        "locally_regular_minus": lrm,
        "locally_regular": lrp and lrm,
        "rldr": is_rldr(t),
        "rlndr": is_rlndr(t),
        "aat_positive": aat_positive(t),
    }
    flags = {name: values[name] for name in _FLAG_ORDER}
    return ClassificationReport(
        t.n, flags, (t.n - 1) // 2 if regular else None)
