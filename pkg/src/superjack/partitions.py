"""Partition combinatorics, scalar handling, hooks and generalized Pochhammer symbols.

Partitions are plain tuples of positive integers in weakly decreasing order.
Scalars are either ``fractions.Fraction`` (exact mode) or ``float``/``complex``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from typing import Iterable, Iterator, Sequence, Union

Partition = tuple
Scalar = Union[Fraction, float, complex]


# ---------------------------------------------------------------- scalars

def parse_scalar(value, allow_float: bool = True) -> Scalar:
    """Parse ``value`` into an exact rational when possible.

    Integers, ``Fraction`` and strings like ``"3/4"`` or ``"-2"`` give a Fraction.
    Floats (or float-looking strings) are accepted only if ``allow_float``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not allow_float and any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except ValueError:
            pass
        if not allow_float:
            raise ValueError(f"not an exact rational: {value!r}")
        try:
            return float(text)
        except ValueError:
            return complex(text.replace("i", "j"))
    if isinstance(value, (float, complex)):
        if not allow_float:
            raise ValueError(f"float given where an exact rational is required: {value!r}")
        return check_finite(value)
    if isinstance(value, Number):
        return check_finite(complex(value)) if isinstance(value, complex) else check_finite(float(value))
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def check_finite(x):
    """Raise on NaN or infinity; return ``x`` unchanged otherwise."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, complex):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise FloatingPointError(f"non-finite value {x}")
        return x
    if not math.isfinite(x):
        raise FloatingPointError(f"non-finite value {x}")
    return x


def is_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def as_alpha(alpha) -> Scalar:
    a = parse_scalar(alpha)
    if isinstance(a, complex) or a <= 0:
        raise ValueError(f"alpha must be a positive real number, got {alpha!r}")
    return a


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(x)


# ------------------------------------------------------------- partitions

def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize to a tuple with trailing zeros removed; validate ordering."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x < 0:
            raise ValueError(f"negative part in {parts!r}")
        if i and x > p[i - 1]:
            raise ValueError(f"parts not weakly decreasing: {parts!r}")
    if 0 in p:
        raise ValueError(f"zero inside partition {parts!r}")
    return p


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return as_partition(int(x) for x in text.split(","))


def weight(kappa: Partition) -> int:
    return sum(kappa)


@lru_cache(maxsize=65536)
def conjugate(kappa: Partition) -> Partition:
    if not kappa:
        return ()
    return tuple(sum(1 for part in kappa if part > j) for j in range(kappa[0]))


def part(kappa: Partition, i: int) -> int:
    """The i-th part (1-based), zero beyond the length."""
    return kappa[i - 1] if i <= len(kappa) else 0


def boxes(kappa: Partition) -> Iterator[tuple[int, int]]:
    """Cells (i, j) of the diagram, 1-based, row by row."""
    for i, row in enumerate(kappa, start=1):
        for j in range(1, row + 1):
            yield i, j


def arm(kappa: Partition, i: int, j: int) -> int:
    return kappa[i - 1] - j


def leg(kappa: Partition, i: int, j: int) -> int:
    return conjugate(kappa)[j - 1] - i


def contains(big: Partition, small: Partition) -> bool:
    """Diagram inclusion ``small ⊆ big``."""
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


def add_box(kappa: Partition, i: int) -> Partition | None:
    """κ^{(i)}: add a box to row i (1-based); None if the result is not a partition."""
    k = list(kappa) + [0]
    if i > len(kappa) + 1:
        return None
    if i > 1 and k[i - 2] <= k[i - 1]:
        return None
    k[i - 1] += 1
    return as_partition(k)


def remove_box(kappa: Partition, i: int) -> Partition | None:
    """κ_{(i)}: remove a box from row i; None if the result is not a partition."""
    if i > len(kappa):
        return None
    k = list(kappa)
    if i < len(k) and k[i] >= k[i - 1]:
        return None
    k[i - 1] -= 1
    return as_partition(k)


def dominance_leq(kappa: Partition, sigma: Partition) -> bool:
    """κ ≤ σ in dominance order (equal weights required)."""
    if weight(kappa) != weight(sigma):
        raise ValueError(f"dominance undefined for weights {weight(kappa)} and {weight(sigma)}")
    a = b = 0
    for i in range(max(len(kappa), len(sigma))):
        a += part(kappa, i + 1)
        b += part(sigma, i + 1)
        if a > b:
            return False
    return True


@dataclass(frozen=True)
class FatHook:
    """H_{n,m}: partitions whose diagram avoids the box (n+1, m+1)."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("fat hook sizes must be nonnegative")

    def contains(self, kappa: Partition) -> bool:
        return part(kappa, self.n + 1) <= self.m

    __contains__ = contains


@lru_cache(maxsize=256)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of k in reverse-lexicographic order."""
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple):
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(min(remaining, cap), 0, -1):
            rec(remaining - first, first, prefix + (first,))

    rec(k, k, ())
    return tuple(out)


def enumerate_partitions(max_weight: int, hook: FatHook | None = None) -> list[Partition]:
    """Partitions of weight ≤ max_weight ordered by (weight, reverse-lex), optionally inside a fat hook."""
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    if hook is None:
        return [kappa for k in range(max_weight + 1) for kappa in partitions_of(k)]
    return [kappa for k in range(max_weight + 1) for kappa in _hook_partitions_of(k, hook.n, hook.m)]


@lru_cache(maxsize=1024)
def _hook_partitions_of(k: int, n: int, m: int) -> tuple[Partition, ...]:
    """Partitions of k with κ_{n+1} ≤ m, reverse-lex; generated without leaving the hook."""
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple):
        if remaining == 0:
            out.append(prefix)
            return
        if len(prefix) >= n:
            cap = min(cap, m)
            if cap == 0:
                return
        for first in range(min(remaining, cap), 0, -1):
            rec(remaining - first, first, prefix + (first,))

    rec(k, k, ())
    return tuple(out)


def horizontal_strips(kappa: Partition) -> Iterator[Partition]:
    """All μ ⊆ κ such that κ/μ is a horizontal strip (κ_{i+1} ≤ μ_i ≤ κ_i)."""
    n = len(kappa)

    def rec(i: int, prefix: tuple):
        if i == n:
            yield as_partition(prefix)
            return
        low = kappa[i + 1] if i + 1 < n else 0
        for mu_i in range(kappa[i], low - 1, -1):
            yield from rec(i + 1, prefix + (mu_i,))

    yield from rec(0, ())


def vertical_strips(kappa: Partition) -> Iterator[Partition]:
    """All μ ⊆ κ such that κ/μ is a vertical strip."""
    for nu in horizontal_strips(conjugate(kappa)):
        yield conjugate(nu)


# ------------------------------------------------- hooks and Pochhammers

def hook_product(kappa: Partition, alpha) -> Scalar:
    """h_κ^(α) = ∏ (1 + a + l/α) over the boxes of κ."""
    kc = conjugate(kappa)
    out = Fraction(1) if is_exact(alpha) else 1.0
    for i, j in boxes(kappa):
        out *= 1 + (kappa[i - 1] - j) + (kc[j - 1] - i) / alpha
    return out


def hook_product_prime(kappa: Partition, alpha) -> Scalar:
    """h′_κ^(α) = ∏ (a + l/α + 1/α) over the boxes of κ."""
    kc = conjugate(kappa)
    out = Fraction(1) if is_exact(alpha) else 1.0
    for i, j in boxes(kappa):
        out *= (kappa[i - 1] - j) + (kc[j - 1] - i + 1) / alpha
    return out


def rising(x, k: int):
    """Rising factorial (x)_k."""
    out = 1
    for r in range(k):
        out *= x + r
    return out


def gen_pochhammer(x, kappa: Partition, alpha) -> Scalar:
    """[x]_κ^(α) = ∏_i (x − (i−1)/α)_{κ_i}."""
    out = Fraction(1) if is_exact(x, alpha) else 1.0
    for i, row in enumerate(kappa):
        out *= rising(x - Fraction(i) / alpha if is_exact(alpha) else x - i / alpha, row)
    return out


def pochhammer_vanishes(kappa: Partition, alpha, kind: str, M: int) -> bool:
    """Vanishing of [−M]_κ (kind ``"neg_int"``) or [M/α]_κ (kind ``"over_alpha"``)."""
    if M < 1 or int(M) != M:
        raise ValueError("M must be a positive integer")
    as_alpha(alpha)
    if kind == "neg_int":
        return part(kappa, 1) > M
    if kind == "over_alpha":
        return len(kappa) > M
    raise ValueError(f"unknown kind {kind!r}")


def integer_value(x) -> int | None:
    """Return int(x) if x is (numerically) an integer, else None."""
    if isinstance(x, complex):
        if abs(x.imag) > 1e-12:
            return None
        x = x.real
    if isinstance(x, (int, Fraction)):
        return int(x) if Fraction(x).denominator == 1 else None
    r = round(x)
    return int(r) if abs(x - r) < 1e-12 else None


def zero_like(*values):
    """Zero in the arithmetic of ``values``: Fraction if all exact, else float."""
    return Fraction(0) if is_exact(*values) else 0.0


def one_like(*values):
    return Fraction(1) if is_exact(*values) else 1.0


def as_float_list(xs: Sequence) -> list:
    return [complex(x) if isinstance(x, complex) else float(x) for x in xs]
