"""Constructors for the tournament families the rest of the package
studies.

Families:

  TT_n      transitive tournament, vertex 0 the source
  R(n, S)   rotational tournament: i -> i + d (mod n) for d in the symbol S
  RLT_n     the rotational locally transitive tournament, S = {1..(n-1)/2}
  QR_q      quadratic-residue tournament for a prime (or odd prime power)
            q = 3 (mod 4): i -> j iff j - i is a nonzero square
  named     small flagship tournaments assembled from compositions, two
            embedded order-9 matrices, and the regular order-7 class that
            is neither locally transitive nor doubly regular (found by
            filtering the enumerated corpus, never hard-coded)
  random    seed-deterministic uniform orientation of K_n
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .core import Tournament, compose, validate
from .errors import (
    BadResidueClassError,
    BadSymbolError,
    EvenOrderError,
    NotPrimeError,
    OrderTooLargeError,
    SizeMismatchError,
    UnknownNameError,
)
from .io import parse_tour

MAX_ORDER = 64


def gen_transitive(n: int) -> Tournament:
    """TT_n: i -> j iff i < j, so vertex 0 beats everyone."""
    if n < 1 or n > MAX_ORDER:
        raise SizeMismatchError(f"order must be in 1..{MAX_ORDER}, got {n}")
    full = (1 << n) - 1
    return validate(n, [full & ~((1 << (i + 1)) - 1) for i in range(n)])


@dataclass(frozen=True)
class RotationalSymbol:
    """Difference set for a rotational tournament: n odd, and for every
    d in 1..n-1 exactly one of d, n-d belongs to the set."""

    n: int
    diffs: frozenset[int]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1 or n > MAX_ORDER:
            raise BadSymbolError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if n % 2 == 0:
            raise EvenOrderError(f"rotational tournaments need odd order, got {n}")
        diffs = frozenset(self.diffs)
        object.__setattr__(self, "diffs", diffs)
        if any(d < 1 or d > n - 1 for d in diffs):
            raise BadSymbolError("differences must lie in 1..n-1")
        for d in range(1, n):
            if (d in diffs) == ((n - d) in diffs):
                raise BadSymbolError(
                    f"exactly one of {d} and {n - d} must be in the symbol")


def gen_rotational(symbol: RotationalSymbol) -> Tournament:
    """Rotational tournament of the symbol: i -> (i + d) mod n."""
    n = symbol.n
    rows = []
    for i in range(n):
        r = 0
        for d in symbol.diffs:
            r |= 1 << ((i + d) % n)
        rows.append(r)
    return validate(n, rows)


def gen_rlt(n: int) -> Tournament:
    """RLT_n, the rotational tournament with symbol {1..(n-1)/2}.  Every
    out-set induces a transitive tournament."""
    if n % 2 == 0:
        raise EvenOrderError(f"RLT needs odd order, got {n}")
    return gen_rotational(RotationalSymbol(n, frozenset(range(1, (n + 1) // 2))))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def gen_qr(p: int) -> Tournament:
    """QR_p for a prime p = 3 (mod 4): i -> j iff j - i is a nonzero
    quadratic residue mod p."""
    if not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p % 4 != 3:
        raise BadResidueClassError(f"need p = 3 (mod 4), got {p} = {p % 4} (mod 4)")
    if p > MAX_ORDER:
        raise OrderTooLargeError(f"order {p} exceeds {MAX_ORDER}")
    squares = {(x * x) % p for x in range(1, p)}
    rows = []
    for i in range(p):
        r = 0
        for d in squares:
            r |= 1 << ((i + d) % p)
        rows.append(r)
    return validate(p, rows)


# -- quadratic residues over a prime-power field -----------------------------

def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...],
                  f: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Product of coefficient tuples mod the monic polynomial f, over F_p.
    Tuples are low-degree-first with len(f) - 1 entries."""
    k = len(f) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce: x^k = -(f[0] + f[1] x + ... + f[k-1] x^(k-1))
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(k):
                prod[deg - k + j] = (prod[deg - k + j] - c * f[j]) % p
    return tuple(prod[:k])


def _poly_pow_mod(base: tuple[int, ...], e: int,
                  f: tuple[int, ...], p: int) -> tuple[int, ...]:
    k = len(f) - 1
    result = tuple([1] + [0] * (k - 1))
    cur = base
    while e:
        if e & 1:
            result = _poly_mul_mod(result, cur, f, p)
        cur = _poly_mul_mod(cur, cur, f, p)
        e >>= 1
    return result


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree k over F_p, as the length
    k + 1 coefficient tuple (low-degree-first, leading 1).  Uses the
    x^(p^k) = x criterion with gcd checks at the maximal proper subfields.
    """
    x = tuple([0, 1] + [0] * (k - 2)) if k >= 2 else (0,)

    def is_irreducible(f: tuple[int, ...]) -> bool:
        if _poly_pow_mod(x, p ** k, f, p) != x:
            return False
        for q in {d for d in range(2, k + 1) if k % d == 0 and _is_prime(d)}:
            g = _poly_pow_mod(x, p ** (k // q), f, p)
            diff = tuple((g[i] - x[i]) % p for i in range(k))
            if not _poly_gcd_is_one(diff, f, p):
                return False
        return True

    for code in range(p ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if is_irreducible(f):
            return f
    raise NotPrimeError(f"no irreducible polynomial found for p={p}, k={k}")


def _poly_gcd_is_one(a: tuple[int, ...], f: tuple[int, ...], p: int) -> bool:
    """True iff gcd(a, f) = 1 over F_p (a given by k coefficients)."""
    def trim(v: list[int]) -> list[int]:
        while v and v[-1] == 0:
            v.pop()
        return v

    u, v = trim(list(f)), trim(list(a))
    while v:
        # u mod v
        inv = pow(v[-1], p - 2, p)
        u = u[:]
        while len(u) >= len(v):
            c = (u[-1] * inv) % p
            shift = len(u) - len(v)
            for i in range(len(v)):
                u[shift + i] = (u[shift + i] - c * v[i]) % p
            u = trim(u)
            if not u:
                break
        u, v = v, u
    return len(u) == 1  # nonzero constant


def gen_qr_power(p: int, k: int) -> Tournament:
    """Quadratic-residue tournament over GF(p^k), p prime = 3 (mod 4) and
    k odd, so that -1 is a non-square and the orientation is total.
    Vertices are field elements indexed by base-p digit strings;
    i -> j iff elem(j) - elem(i) is a nonzero square."""
    if not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p % 4 != 3:
        raise BadResidueClassError(f"need p = 3 (mod 4), got {p}")
    if k < 1 or k % 2 == 0:
        raise BadResidueClassError(f"need odd extension degree, got k={k}")
    q = p ** k
    if q > MAX_ORDER:
        raise OrderTooLargeError(f"order {q} exceeds {MAX_ORDER}")
    if k == 1:
        return gen_qr(p)
    f = _find_irreducible(p, k)

    def elem(idx: int) -> tuple[int, ...]:
        digits = []
        for _ in range(k):
            digits.append(idx % p)
            idx //= p
        return tuple(digits)

    elements = [elem(i) for i in range(q)]
    index = {e: i for i, e in enumerate(elements)}
    zero = tuple([0] * k)
    squares = {_poly_mul_mod(e, e, f, p) for e in elements} - {zero}
    rows = []
    for i, ei in enumerate(elements):
        r = 0
        for s in squares:
            ej = tuple((ei[d] + s[d]) % p for d in range(k))
            r |= 1 << index[ej]
        rows.append(r)
    return validate(q, rows)


# -- named flagship tournaments ----------------------------------------------

_SINGLE = Tournament(1, (0,))

# Two regular order-9 matrices used as bit-exact fixtures; each is one of
# the order-9 classes minimizing the strong-5-subset count.
_NINE_A = """9
011110000
001111000
000101011
000010111
001000111
100110100
111000010
110001001
110001100
"""

_NINE_B = """9
011110000
001010110
000110101
010001011
000101011
111000001
100111000
101001100
110000110
"""


def _delta() -> Tournament:
    return gen_rlt(3)


@lru_cache(maxsize=None)
def _kz7() -> Tournament:
    """The regular order-7 class that is neither locally transitive nor
    doubly regular, filtered out of the enumerated corpus."""
    from .classify import is_doubly_regular, is_locally_transitive
    from .enumeration import enumerate_regular

    corpus = enumerate_regular(7)
    picks = [rep for _, rep in corpus.classes
             if not is_locally_transitive(rep) and not is_doubly_regular(rep)]
    assert len(picks) == 1, "expected exactly one such order-7 class"
    return picks[0]


def gen_named(name: str) -> Tournament:
    """Flagship tournaments by name.

    delta             the 3-cycle
    st4               the strong order-4 tournament, delta with one vertex
                      blown up into TT_2
    delta_tt2         delta with every vertex blown up into TT_2 (order 6)
    delta_delta       delta with every vertex blown up into delta (order 9)
    delta_o_tt3_o     delta with the middle vertex blown up into TT_3
    delta_tt2_o_tt2   delta with two vertices blown up into TT_2
    delta_o_delta_o   delta with the middle vertex blown up into delta
    dr7               the doubly regular order-7 tournament (= QR_7)
    kz7               the remaining regular order-7 class (neither locally
                      transitive nor doubly regular)
    prop2_a, prop2_b  the two embedded order-9 fixture matrices
    """
    delta = _delta()
    tt2 = gen_transitive(2)
    tt3 = gen_transitive(3)
    o = _SINGLE
    table = {
        "delta": lambda: delta,
        "st4": lambda: compose(delta, [tt2, o, o]),
        "delta_tt2": lambda: compose(delta, [tt2, tt2, tt2]),
        "delta_delta": lambda: compose(delta, [delta, delta, delta]),
        "delta_o_tt3_o": lambda: compose(delta, [o, tt3, o]),
        "delta_tt2_o_tt2": lambda: compose(delta, [tt2, o, tt2]),
        "delta_o_delta_o": lambda: compose(delta, [o, delta, o]),
        "dr7": lambda: gen_qr(7),
        "kz7": _kz7,
        "prop2_a": lambda: parse_tour(_NINE_A),
        "prop2_b": lambda: parse_tour(_NINE_B),
    }
    if name not in table:
        raise UnknownNameError(
            f"unknown tournament name {name!r}; known: {sorted(table)}")
    return table[name]()


def gen_random(n: int, seed: int) -> Tournament:
    """Uniform random orientation of K_n, deterministic in the seed."""
    if n < 1 or n > MAX_ORDER:
        raise SizeMismatchError(f"order must be in 1..{MAX_ORDER}, got {n}")
    rng = random.Random(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.getrandbits(1):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return validate(n, rows)
