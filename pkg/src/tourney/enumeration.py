"""Exhaustive generation of small tournaments.

Two drivers:

  sweep_all          folds a visitor over every labeled tournament of
                     order n <= 7, one per upper-triangle edge code
                     (bit k of the code orients the k-th pair i < j in
                     lexicographic order: 1 means i -> j).
  enumerate_regular  backtracks over arc orientations with out-degree
                     feasibility pruning to produce every labeled regular
                     tournament, then dedupes by canonical form into
                     isomorphism classes.

Symmetry breaking fixes vertex 0's out-set to {1..(n-1)/2}; every class
is still reached, and the labeled total is the fixed-row count times
C(n-1, (n-1)/2) because relabelings of 1..n-1 put the parts of the
partition by vertex 0's out-set in bijection.

Class representatives are decoded from the canonical key itself, so the
corpus does not depend on edge order or worker count.  A .corpus file
stores the header tallies plus one .tour block per class.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, TypeVar

from .core import (CanonicalForm, Tournament, automorphism_count,
                   canonical_form, validate)
from .errors import (
    BadOrderError,
    CorpusMissingError,
    EvenOrderError,
    ParseError,
    TimeBudgetExceededError,
    TooLargeError,
    VerificationFailedError,
)
from .io import format_tour, parse_tour

SWEEP_MAX_ORDER = 7
ENUM_MAX_ORDER = 9
ENUM_LONG_MAX_ORDER = 11

A = TypeVar("A")


def _edges(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def tournament_from_code(n: int, code: int) -> Tournament:
    """Labeled tournament of an upper-triangle edge code."""
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> k) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            k += 1
    return Tournament(n, tuple(rows))


def all_tournaments(n: int) -> Iterator[Tournament]:
    """Every labeled tournament of order n, in code order."""
    if n > SWEEP_MAX_ORDER:
        raise TooLargeError(
            f"full sweeps are capped at order {SWEEP_MAX_ORDER}, got {n}")
    if n < 1:
        raise BadOrderError(f"order must be >= 1, got {n}")
    edges = _edges(n)
    for code in range(1 << len(edges)):
        rows = [0] * n
        c = code
        for i, j in edges:
            if c & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            c >>= 1
        yield Tournament(n, tuple(rows))


def sweep_all(n: int, visitor: Callable[[A, Tournament], A], init: A) -> A:
    """Pure fold of the visitor over every labeled tournament of order n."""
    acc = init
    for t in all_tournaments(n):
        acc = visitor(acc, t)
    return acc


# -- regular enumeration -----------------------------------------------------

def _backtrack_regular(n: int, rows: list[int], out: list[int], rem: list[int],
                       edges: list[tuple[int, int]], start: int,
                       deadline: float | None,
                       emit: Callable[[tuple[int, ...]], None],
                       tick: list[int]) -> None:
    if start == len(edges):
        emit(tuple(rows))
        return
    tick[0] += 1
    if deadline is not None and tick[0] % 4096 == 0:
        if time.monotonic() > deadline:
            raise TimeBudgetExceededError("enumeration ran past its budget")
    half = (n - 1) // 2
    i, j = edges[start]
    rem[i] -= 1
    rem[j] -= 1
    if out[i] < half and out[j] + rem[j] >= half:
        rows[i] |= 1 << j
        out[i] += 1
        _backtrack_regular(n, rows, out, rem, edges, start + 1, deadline,
                           emit, tick)
        out[i] -= 1
        rows[i] &= ~(1 << j)
    if out[j] < half and out[i] + rem[i] >= half:
        rows[j] |= 1 << i
        out[j] += 1
        _backtrack_regular(n, rows, out, rem, edges, start + 1, deadline,
                           emit, tick)
        out[j] -= 1
        rows[j] &= ~(1 << i)
    rem[i] += 1
    rem[j] += 1


def _start_state(n: int, symmetry_break: bool
                 ) -> tuple[list[int], list[int], list[int], int]:
    """(rows, out, rem, first undecided edge index) after the optional
    fixed first row."""
    rows = [0] * n
    out = [0] * n
    rem = [n - 1] * n
    start = 0
    if symmetry_break and n > 1:
        half = (n - 1) // 2
        for j in range(1, n):
            if j <= half:
                rows[0] |= 1 << j
                out[0] += 1
            else:
                rows[j] |= 1
                out[j] += 1
            rem[0] -= 1
            rem[j] -= 1
        start = n - 1
    return rows, out, rem, start


def _apply_forced(rows: list[int], out: list[int], rem: list[int],
                  edges: list[tuple[int, int]], start: int,
                  pattern: int, width: int, n: int) -> bool:
    """Force orientations of edges[start:start+width] from pattern bits.
    Returns False if the partial assignment is already infeasible."""
    half = (n - 1) // 2
    for k in range(width):
        i, j = edges[start + k]
        rem[i] -= 1
        rem[j] -= 1
        if (pattern >> k) & 1:
            src, dst = i, j
        else:
            src, dst = j, i
        rows[src] |= 1 << dst
        out[src] += 1
        if out[src] > half:
            return False
        if out[dst] + rem[dst] < half:
            return False
    return True


def _regular_job(n: int, symmetry_break: bool, pattern: int, width: int,
                 deadline: float | None) -> tuple[int, set[int]]:
    """Enumerate the subtree under one forced-edge pattern; canonicalize
    every completion.  Returns (labeled count in subtree, canonical keys)."""
    edges = _edges(n)
    rows, out, rem, start = _start_state(n, symmetry_break)
    if width and not _apply_forced(rows, out, rem, edges, start, pattern,
                                   width, n):
        return 0, set()
    keys: set[int] = set()
    count = 0

    def emit(snapshot: tuple[int, ...]) -> None:
        nonlocal count
        count += 1
        keys.add(canonical_form(Tournament(n, snapshot)).key)

    _backtrack_regular(n, rows, out, rem, edges, start + width, deadline,
                       emit, [0])
    return count, keys


@dataclass(frozen=True)
class EnumCorpus:
    """Isomorphism classes of one enumeration run: (canonical form,
    canonical representative) pairs sorted by key, plus the labeled count."""

    n: int
    constraint: str
    labeled_count: int
    classes: tuple[tuple[CanonicalForm, Tournament], ...]


def _corpus_from_keys(n: int, labeled: int, keys: set[int]) -> EnumCorpus:
    classes = []
    for key in sorted(keys):
        cf = CanonicalForm(n, key)
        classes.append((cf, validate(n, list(cf.rows()))))
    return EnumCorpus(n, "regular", labeled, tuple(classes))


def enumerate_regular(n: int, *, threads: int = 1, symmetry_break: bool = True,
                      time_budget: float | None = None,
                      allow_long: bool = False) -> EnumCorpus:
    """All regular tournaments of odd order n up to isomorphism, plus the
    labeled total.  n <= 9 unless allow_long permits 11."""
    if n % 2 == 0:
        raise EvenOrderError(f"regular tournaments have odd order, got {n}")
    cap = ENUM_LONG_MAX_ORDER if allow_long else ENUM_MAX_ORDER
    if n < 1 or n > cap:
        raise BadOrderError(f"order must be odd in 1..{cap}, got {n}")
    deadline = time.monotonic() + time_budget if time_budget else None
    half = (n - 1) // 2
    scale = comb(n - 1, half) if symmetry_break and n > 1 else 1

    edges = _edges(n)
    _, _, _, start = _start_state(n, symmetry_break)
    free = len(edges) - start
    if threads > 1 and free > 4:
        width = 1
        while (1 << width) < 4 * threads and width < min(12, free - 1):
            width += 1
        jobs = [(n, symmetry_break, pattern, width, deadline)
                for pattern in range(1 << width)]
        total = 0
        keys: set[int] = set()
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for count, job_keys in pool.map(_regular_job_star, jobs):
                total += count
                keys |= job_keys
        return _corpus_from_keys(n, total * scale, keys)
    count, keys = _regular_job(n, symmetry_break, 0, 0, deadline)
    return _corpus_from_keys(n, count * scale, keys)


def _regular_job_star(args: tuple) -> tuple[int, set[int]]:
    return _regular_job(*args)


# -- corpus files ------------------------------------------------------------

_MAGIC = "tourney-corpus 1"


def write_corpus(corpus: EnumCorpus, path: str | os.PathLike[str]) -> None:
    parts = [
        _MAGIC,
        f"n {corpus.n}",
        f"constraint {corpus.constraint}",
        f"labeled_count {corpus.labeled_count}",
        f"classes {len(corpus.classes)}",
        "",
    ]
    for cf, rep in corpus.classes:
        parts.append(f"class {cf.hex()}")
        parts.append(format_tour(rep).rstrip("\n"))
        parts.append("")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(parts))


def read_corpus(path: str | os.PathLike[str]) -> EnumCorpus:
    if not os.path.exists(path):
        raise CorpusMissingError(f"no corpus file at {path}")
    with open(path, encoding="ascii") as fh:
        lines = fh.read().split("\n")
    pos = 0

    def take(prefix: str) -> str:
        nonlocal pos
        if pos >= len(lines) or not lines[pos].startswith(prefix):
            raise ParseError(f"expected {prefix!r} line", line=pos + 1)
        value = lines[pos][len(prefix):].strip()
        pos += 1
        return value

    if pos >= len(lines) or lines[pos] != _MAGIC:
        raise ParseError(f"expected header {_MAGIC!r}", line=1)
    pos += 1
    n = int(take("n "))
    constraint = take("constraint ")
    labeled = int(take("labeled_count "))
    nclasses = int(take("classes "))
    classes = []
    for _ in range(nclasses):
        while pos < len(lines) and lines[pos] == "":
            pos += 1
        key_hex = take("class ")
        block = lines[pos:pos + n + 1]
        pos += n + 1
        rep = parse_tour("\n".join(block) + "\n")
        classes.append((CanonicalForm(n, int(key_hex, 16)), rep))
    while pos < len(lines) and lines[pos] == "":
        pos += 1
    if pos != len(lines):
        raise ParseError("trailing content after the last class",
                         line=pos + 1)
    return EnumCorpus(n, constraint, labeled, tuple(classes))


# class counts known independently of this enumerator
KNOWN_REGULAR_CLASSES = {3: 1, 5: 1, 7: 3, 9: 15}


def verify_corpus(corpus: EnumCorpus) -> None:
    """Re-check every corpus invariant without regenerating: canonical
    keys match their representatives, the constraint holds, keys are
    sorted and distinct, the labeled count satisfies the orbit-counting
    identity sum(n!/|Aut|), and the class count matches the known table
    where one exists.  Raises VerificationFailedError on any mismatch."""
    from .classify import is_regular

    seen: set[int] = set()
    for cf, rep in corpus.classes:
        if rep.n != corpus.n or cf.n != corpus.n:
            raise VerificationFailedError("class order disagrees with header")
        if corpus.constraint == "regular" and not is_regular(rep):
            raise VerificationFailedError(
                "a stored representative is not regular")
        if canonical_form(rep).key != cf.key:
            raise VerificationFailedError(
                f"stored key {cf.hex()} does not match its representative")
        if cf.key in seen:
            raise VerificationFailedError(f"duplicate class key {cf.hex()}")
        seen.add(cf.key)
    keys = [cf.key for cf, _ in corpus.classes]
    if keys != sorted(keys):
        raise VerificationFailedError("classes are not sorted by key")
    known = KNOWN_REGULAR_CLASSES.get(corpus.n)
    if corpus.constraint == "regular" and known is not None \
            and len(corpus.classes) != known:
        raise VerificationFailedError(
            f"expected {known} classes at order {corpus.n}, "
            f"got {len(corpus.classes)}")
    orbit_sum = sum(
        math.factorial(corpus.n) // automorphism_count(rep)
        for _, rep in corpus.classes)
    if orbit_sum != corpus.labeled_count:
        raise VerificationFailedError(
            f"labeled count {corpus.labeled_count} fails orbit counting "
            f"(sum n!/|Aut| = {orbit_sum})")


def load_or_enumerate(n: int, path: str | os.PathLike[str],
                      **kwargs) -> EnumCorpus:
    """Read and verify a cached corpus if the file exists, else enumerate
    and write it."""
    if os.path.exists(path):
        corpus = read_corpus(path)
        if corpus.n != n or corpus.constraint != "regular":
            raise CorpusMissingError(
                f"cached corpus at {path} is for a different run")
        verify_corpus(corpus)
        return corpus
    corpus = enumerate_regular(n, **kwargs)
    write_corpus(corpus, path)
    return corpus
