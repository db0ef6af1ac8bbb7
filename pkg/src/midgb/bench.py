"""Benchmark families, the exhaustive oracle, and solution-set readers.

The generators emit the standard cyclic/katsura/eco systems with coefficients
reduced mod q. The oracle enumerates all of GF(q)^n with numpy and is kept
deliberately independent of the reduction machinery, so the two can check
each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import Status
from .errors import InvalidSizeError, OrderNotLexError, TooLargeError
from .midsolve import inconsistency_check
from .poly import PolyRing, is_univariate, substitute, univariate_roots

ORACLE_LIMIT = 1 << 24

_FAMILY_FLOOR = {"cyclic": 2, "katsura": 1, "eco": 3}


@dataclass(frozen=True)
class BenchSpec:
    """A named benchmark instance: family, size parameter, field size."""

    family: str
    n: int
    q: int = 2

    def __post_init__(self):
        if self.family not in _FAMILY_FLOOR:
            raise InvalidSizeError(f"unknown benchmark family {self.family!r}")
        floor = _FAMILY_FLOOR[self.family]
        if self.n < floor:
            raise InvalidSizeError(
                f"{self.family} needs n >= {floor}, got {self.n}"
            )


def bench_variables(family: str, n: int) -> list:
    if family == "katsura":
        return [f"u{i}" for i in range(n + 1)]
    return [f"x{i}" for i in range(1, n + 1)]


def gen_system(spec: BenchSpec, order: str = "grevlex"):
    """Build the ring and polynomial list for a benchmark instance.

    Deterministic: the same spec and order always produce structurally
    identical output.
    """
    ring = PolyRing(spec.q, bench_variables(spec.family, spec.n), order)
    if spec.family == "cyclic":
        polys = _cyclic(ring, spec.n)
    elif spec.family == "katsura":
        polys = _katsura(ring, spec.n)
    else:
        polys = _eco(ring, spec.n)
    return ring, polys


def _cyclic(ring: PolyRing, n: int) -> list:
    # e_k = sum over the n cyclic windows of length k, then x1...xn - 1
    out = []
    for k in range(1, n):
        pairs = []
        for i in range(n):
            m = [0] * n
            for j in range(k):
                m[(i + j) % n] = 1
            pairs.append((tuple(m), 1))
        out.append(ring.poly(pairs))
    out.append(ring.poly([(tuple([1] * n), 1), (tuple([0] * n), -1)]))
    return out


def _katsura(ring: PolyRing, n: int) -> list:
    # variables u_0..u_n; indices fold by absolute value
    def e(i, j=None):
        m = [0] * ring.n
        m[i] += 1
        if j is not None:
            m[j] += 1
        return tuple(m)

    unit = (0,) * ring.n
    out = [
        ring.poly(
            [(e(0), 1)] + [(e(i), 2) for i in range(1, n + 1)] + [(unit, -1)]
        )
    ]
    for k in range(n):
        pairs = []
        for i in range(-n, n + 1):
            if abs(k - i) <= n:
                pairs.append((e(abs(i), abs(k - i)), 1))
        pairs.append((e(k), -1))
        out.append(ring.poly(pairs))
    return out


def _eco(ring: PolyRing, n: int) -> list:
    # x_i lives at index i-1; f_k = x_n*(x_k + sum x_i*x_{i+k}) - k
    def e(*idx):
        m = [0] * n
        for i in idx:
            m[i] += 1
        return tuple(m)

    unit = (0,) * n
    out = []
    for k in range(1, n):
        pairs = [(e(n - 1, k - 1), 1)]
        for i in range(1, n - k):
            pairs.append((e(n - 1, i - 1, i + k - 1), 1))
        pairs.append((unit, -k))
        out.append(ring.poly(pairs))
    out.append(ring.poly([(e(i - 1), 1) for i in range(1, n)] + [(unit, 1)]))
    return out


def random_system(ring: PolyRing, m: int, max_degree: int, rng, max_terms: int = 5) -> list:
    """m-ish random sum-of-products polynomials (zero draws are dropped).

    Deterministic under a seeded ``random.Random``.
    """
    out = []
    for _ in range(m):
        pairs = []
        for _ in range(rng.randint(1, max_terms)):
            mono = [0] * ring.n
            for _ in range(rng.randint(0, max_degree)):
                mono[rng.randrange(ring.n)] += 1
            pairs.append((tuple(mono), rng.randrange(1, ring.q)))
        p = ring.poly(pairs)
        if not p.is_zero:
            out.append(p)
    return out


# ---------------------------------------------------------------- the oracle


def _powmod(arr, e: int, q: int):
    out = np.ones_like(arr)
    base = arr % q
    while e:
        if e & 1:
            out = out * base % q
        base = base * base % q
        e >>= 1
    return out


def brute_force_solutions(polys, ring: PolyRing) -> set:
    """The exact zero set over GF(q)^n by exhaustive evaluation.

    Kept independent of the reduction code: only the raw term lists are read.
    """
    q, n = ring.q, ring.n
    total = q**n
    if total > ORACLE_LIMIT:
        raise TooLargeError(
            f"q^n = {q}^{n} exceeds the exhaustive-search guard of 2^24"
        )
    idx = np.arange(total, dtype=np.int64)
    cols = [(idx // q ** (n - 1 - i)) % q for i in range(n)]
    alive = np.ones(total, dtype=bool)
    for p in polys:
        acc = np.zeros(total, dtype=np.int64)
        for m, c in p.terms:
            term = np.full(total, c % q, dtype=np.int64)
            for i, e in enumerate(m):
                if e:
                    term = term * _powmod(cols[i], e, q) % q
            acc = (acc + term) % q
        alive &= acc == 0
        if not alive.any():
            return set()
    picked = np.stack([col[alive] for col in cols], axis=1)
    return set(map(tuple, picked.tolist()))


# ------------------------------------------------------- reading a lex basis


def solutions_from_lex_basis(basis, ring: PolyRing, fixed=None) -> set:
    """Enumerate the zero set of a completed lex basis by back-substitution.

    Walks variables from least precedence upward; members that have become
    univariate pin the values, unconstrained variables range over the whole
    field, and ``fixed`` (mid-run assignments) restricts its variables to the
    solved value. Exact for any basis; fast when the basis is triangular.
    """
    if ring.order != "lex":
        raise OrderNotLexError("back-substitution reads lex bases")
    members = [p for p in basis if not p.is_zero]
    if inconsistency_check(members):
        return set()
    fixed = dict(fixed or {})
    q, n = ring.q, ring.n
    sols: set = set()

    def extend(i, point, polys):
        if i < 0:
            if all(p.is_zero for p in polys):
                sols.add(tuple(point))
            return
        constraining = []
        waiting = []
        for p in polys:
            if p.is_zero:
                continue
            if p.is_constant:
                return  # dead branch
            if is_univariate(p) == i:
                constraining.append(p)
            else:
                waiting.append(p)
        if constraining:
            values = univariate_roots(constraining[0], i)
            for p in constraining[1:]:
                values &= univariate_roots(p, i)
        else:
            values = set(range(q))
        if i in fixed:
            values &= {fixed[i]}
        for a in sorted(values):
            point[i] = a
            extend(i - 1, point, [substitute(p, i, a) for p in waiting])

    extend(n - 1, [0] * n, members)
    return sols


def solutions_from_report(report, ring: PolyRing) -> set:
    """The zero set implied by a finished run (lex order required)."""
    if report.status is Status.INCONSISTENT:
        return set()
    return solutions_from_lex_basis(report.basis, ring, fixed=report.assignments)
