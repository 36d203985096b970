"""Truncated super hypergeometric series and their transformation identities."""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .jack import (
    BranchingTable,
    GammaTable,
    SuperPoint,
    binomial_coefficients,
    ones_ratio,
)
from .partitions import (
    FatHook,
    Partition,
    add_box,
    as_alpha,
    conjugate,
    enumerate_partitions,
    gen_pochhammer,
    hook_product,
    hook_product_prime,
    integer_value,
    is_exact,
    one_like,
    parse_scalar,
    part,
    rising,
    weight,
)

VARIANTS = ("standard", "mixed", "hat", "gamma")


class DivergentSeriesError(ValueError):
    """The requested series has zero radius of convergence and does not terminate."""


class RadiusError(ValueError):
    """The point lies outside the guaranteed convergence region."""


class ParameterError(ValueError):
    """A lower parameter makes a non-vanishing term infinite."""


@dataclass(frozen=True)
class SeriesSpec:
    """A ₚSF_q series: upper/lower parameters, Jack parameter and variant.

    ``variant`` is one of ``standard``, ``mixed`` (needs ``z``), ``hat``
    (p=2, q=1, lower parameter enters as an ordinary Pochhammer (c)_{|κ|})
    or ``gamma`` (needs ``gamma``: p_r ↦ p_r(t) − γ p_r(s)).
    """

    upper: tuple
    lower: tuple
    alpha: object
    variant: str = "standard"
    gamma: object = None
    z: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(parse_scalar(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(parse_scalar(b) for b in self.lower))
        object.__setattr__(self, "alpha", as_alpha(self.alpha))
        object.__setattr__(self, "z", tuple(self.z))
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "hat":
            if (self.p, self.q) != (2, 1):
                raise ValueError("the hat series is defined for p=2, q=1 only")
            c = integer_value(self.lower[0])
            if c is not None and c <= 0:
                raise ParameterError(f"hat series lower parameter {self.lower[0]} is a nonpositive integer")
        if self.variant == "gamma" and self.gamma is None:
            raise ValueError("gamma variant needs a gamma value")
        if self.variant == "mixed" and not self.z:
            raise ValueError("mixed variant needs z variables")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def exact(self) -> bool:
        vals = list(self.upper) + list(self.lower) + [self.alpha]
        if self.variant == "gamma":
            vals.append(self.gamma)
        return is_exact(*vals) and is_exact(*self.z)

    def lower_parameter_hazards(self, max_length: int) -> list:
        """(j, i) pairs with b_j − (i−1)/α a nonpositive integer, i ≤ max_length."""
        if self.variant == "hat":
            return []
        bad = []
        for jdx, b in enumerate(self.lower):
            for i in range(1, max_length + 1):
                v = integer_value(b - Fraction(i - 1) / self.alpha if is_exact(b, self.alpha) else b - (i - 1) / self.alpha)
                if v is not None and v <= 0:
                    bad.append((jdx, i))
        return bad


@dataclass
class TruncationReport:
    max_degree: int
    last_shell_norm: float
    tail_bound: float | None
    terminated: bool
    shell_norms: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "last_shell_norm": self.last_shell_norm,
            "tail_bound": self.tail_bound,
            "terminated": self.terminated,
        }


# ----------------------------------------------------------- coefficients

def _length_and_width_caps(spec: SeriesSpec) -> tuple[int | None, int | None]:
    """Caps from parameter-induced vanishing: κ₁ ≤ M for a = −M, ℓ(κ) ≤ M for a = M/α."""
    width = length = None
    for a in spec.upper:
        k = integer_value(a)
        if k is not None and k <= 0:
            width = -k if width is None else min(width, -k)
        k = integer_value(a * spec.alpha)
        if k is not None and k >= 0 and spec.variant != "hat":
            length = k if length is None else min(length, k)
        elif k is not None and k >= 0 and spec.variant == "hat":
            length = k if length is None else min(length, k)
    return width, length


def max_support_weight(n: int, m: int, width: int | None, length: int | None) -> float:
    """Largest |κ| for κ ∈ H_{n,m} with κ₁ ≤ width and ℓ(κ) ≤ length (inf if unbounded)."""
    if width is None:
        return math.inf if (m > 0 or n > 0) else 0
    rows = length
    if m == 0:
        rows = n if rows is None else min(rows, n)
    if rows is None:
        return 0 if width == 0 else math.inf
    return sum(min(width, math.inf if i <= n else m) for i in range(1, rows + 1))


def series_coefficient(spec: SeriesSpec, kappa: Partition):
    """∏[a]_κ / ∏[b]_κ / h_κ (hat: [a][b] / ((c)_{|κ|} h_κ)); None for a 0/0-free zero."""
    alpha = spec.alpha
    num = one_like(alpha, *spec.upper)
    for a in spec.upper:
        num = num * gen_pochhammer(a, kappa, alpha)
    if num == 0:
        return 0
    if spec.variant == "hat":
        den = rising(spec.lower[0], weight(kappa))
    else:
        den = one_like(alpha, *spec.lower)
        for b in spec.lower:
            den = den * gen_pochhammer(b, kappa, alpha)
    if den == 0:
        raise ParameterError(f"lower parameters {spec.lower} give [b]_κ = 0 at κ={kappa} with nonzero numerator")
    return num / (den * hook_product(kappa, alpha))


def series_partitions(spec: SeriesSpec, n: int, m: int, max_degree: int) -> list:
    kappas = enumerate_partitions(max_degree, FatHook(n, m))
    width, length = _length_and_width_caps(spec)
    if spec.variant == "mixed":
        ell = len(spec.z)
        length = ell if length is None else min(length, ell)
    return [k for k in kappas if (width is None or part(k, 1) <= width) and (length is None or len(k) <= length)]


def convergence_radius(alpha, n: int, m: int) -> float:
    """1/(r₁²(n + r₁ m)) with r₁ = max(α, 1/α)."""
    r1 = max(float(alpha), 1 / float(alpha))
    if n + m == 0:
        return math.inf
    return 1.0 / (r1 * r1 * (n + r1 * m))


def bound_constant(alpha, n: int, m: int, proof_only: bool = False) -> float:
    """C_{n,m} = max(1, C₀) with C₀² = sup_{k≥1} (n+m) k^{n+m−1} (n + m r₁)^{−k}.

    C₀ alone covers |κ| ≥ 1; the max with 1 also covers SP_∅ = 1.
    ``proof_only`` returns C₀.
    """
    r1 = max(float(alpha), 1 / float(alpha))
    base = n + m * r1
    d = n + m
    if d == 0:
        return 1.0
    if base <= 1:
        return math.inf
    best = 0.0
    for k in range(1, 4000):
        val = d * k ** (d - 1) * base ** (-k)
        best = max(best, val)
        if k > (d - 1) / math.log(base) + 5 and val < best * 1e-6:
            break
    c0 = math.sqrt(best)
    return c0 if proof_only else max(1.0, c0)


def sp_bound(kappa: Partition, alpha, n: int, m: int, norm: float, proof_only: bool = False) -> float:
    """Upper bound C·sqrt(h/h′)·(r₁(n+r₁m)T)^{|κ|} on |SP_κ| over ‖(t,s)‖ ≤ T."""
    r1 = max(float(alpha), 1 / float(alpha))
    ratio = float(hook_product(kappa, alpha)) / float(hook_product_prime(kappa, alpha))
    const = bound_constant(alpha, n, m, proof_only)
    return const * math.sqrt(ratio) * (r1 * (n + r1 * m) * norm) ** weight(kappa)


def _tail_estimate(spec: SeriesSpec, n: int, m: int, max_degree: int, norm: float, extra: int = 8) -> float:
    """Sum of the coefficient-times-bound shells beyond max_degree with a geometric remainder."""
    kappas = series_partitions(spec, n, m, max_degree + extra)
    shells = [0.0] * (max_degree + extra + 1)
    for k in kappas:
        if weight(k) <= max_degree - 2:
            continue
        c = series_coefficient(spec, k)
        if c == 0:
            continue
        shells[weight(k)] += abs(complex(c)) * sp_bound(k, spec.alpha, n, m, norm)
    tail = sum(shells[max_degree + 1:])
    last, prev = shells[-1], shells[-2]
    if last == 0:
        return tail
    if prev > 0 and last / prev < 1:
        rho = last / prev
        return tail + last * rho / (1 - rho)
    return math.inf


# -------------------------------------------------------------- evaluation

def _prepare_point(spec: SeriesSpec, pt: SuperPoint):
    if spec.exact() and pt.is_exact():
        return list(pt.t), list(pt.s), True
    conv = lambda v: complex(v) if isinstance(v, complex) else float(v)
    return [conv(v) for v in pt.t], [conv(v) for v in pt.s], False


def series_terms(spec: SeriesSpec, pt: SuperPoint, max_degree: int) -> dict:
    """{κ: term} for every non-vanishing κ of weight ≤ max_degree."""
    n, m = pt.n, pt.m
    kappas = series_partitions(spec, n, m, max_degree)
    coeffs = {}
    for k in kappas:
        c = series_coefficient(spec, k)
        if c != 0:
            coeffs[k] = c
    if not coeffs:
        return {}
    t, s, exact = _prepare_point(spec, pt)
    if spec.variant == "gamma":
        values = GammaTable(spec.alpha, list(coeffs)).evaluate(SuperPoint(t, s), spec.gamma)
    else:
        values = BranchingTable(spec.alpha if exact else float(spec.alpha), list(coeffs)).evaluate(t, s)
    extra = None
    if spec.variant == "mixed":
        z = spec.z if exact else [float(v) for v in spec.z]
        ztab = BranchingTable(spec.alpha, list(coeffs))
        pz = ztab.evaluate(z)
        ones = ztab.evaluate([one_like(spec.alpha)] * len(z) if exact else [1.0] * len(z))
        extra = {k: pz.get(k, 0) / ones[k] for k in coeffs}
    terms = {}
    for k, c in coeffs.items():
        v = values.get(k)
        if v is None:
            continue
        if not exact:
            c = complex(c) if isinstance(c, complex) else float(c)
        term = c * v
        if extra is not None:
            term = term * extra[k]
        terms[k] = term
    return terms


def eval_series(spec: SeriesSpec, pt: SuperPoint, max_degree: int = 16, allow_outside_radius: bool = False,
                tail: bool = True):
    """Truncated series value and a TruncationReport.

    Raises DivergentSeriesError for non-terminating series with p > q+1 and
    RadiusError for p = q+1 outside the guaranteed radius unless
    ``allow_outside_radius`` is set.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    n, m = pt.n, pt.m
    width, length = _length_and_width_caps(spec)
    if spec.variant == "mixed":
        length = len(spec.z) if length is None else min(length, len(spec.z))
    support = max_support_weight(n, m, width, length)
    terminated = support <= max_degree
    norm = pt.norm()
    effective_p = spec.p + (1 if spec.variant == "hat" else 0)
    effective_q = spec.q
    if not terminated and norm > 0:
        if effective_p > effective_q + 1:
            raise DivergentSeriesError(
                f"{spec.p}SF{spec.q} does not terminate and has zero radius of convergence for p > q+1")
        if spec.variant == "hat" and norm >= 1:
            raise RadiusError("hat series converges only in the unit polydisk")
        if spec.variant != "hat" and effective_p == effective_q + 1 and not allow_outside_radius:
            radius = convergence_radius(spec.alpha, n, m)
            if norm >= radius:
                raise RadiusError(
                    f"point norm {norm:g} is outside the guaranteed radius {radius:g}; "
                    "pass allow_outside_radius=True to sum anyway")
    terms = series_terms(spec, pt, max_degree)
    exact = spec.exact() and pt.is_exact()
    total = one_like(spec.alpha) * 0 if exact else 0.0
    shells = [0.0] * (max_degree + 1)
    for k, term in terms.items():
        total = total + term
        shells[weight(k)] += abs(complex(term))
    if not terms:
        total = 0
    tail_bound = None
    if terminated:
        tail_bound = 0.0
    elif tail and spec.variant in ("standard", "gamma") and spec.p <= spec.q + 1 and norm > 0 and spec.variant != "gamma":
        tail_bound = _tail_estimate(spec, n, m, max_degree, norm)
    report = TruncationReport(max_degree, shells[max_degree], tail_bound, terminated, shells)
    return total, report


def series_value(spec: SeriesSpec, pt: SuperPoint, max_degree: int = 16, **kw):
    return eval_series(spec, pt, max_degree, tail=False, **kw)[0]


# ------------------------------------------------------------ closed forms

def _cpow(base, exponent):
    if isinstance(base, complex) or (base < 0 and float(exponent) != int(exponent)):
        return cmath.exp(exponent * cmath.log(base))
    return float(base) ** float(exponent)


def closed_form_1SF0(a, alpha, pt: SuperPoint):
    """∏(1−t_i)^{−a} ∏(1−s_j)^{αa}."""
    alpha = as_alpha(alpha)
    a = parse_scalar(a)
    out = 1.0
    for t in pt.t:
        if t == 1:
            raise ZeroDivisionError("pole at t_i = 1")
        out *= _cpow(1 - float(t) if not isinstance(t, complex) else 1 - t, -float(a))
    for s in pt.s:
        out *= _cpow(1 - float(s) if not isinstance(s, complex) else 1 - s, float(alpha) * float(a))
    return out


def closed_form_0SF0(alpha, pt: SuperPoint):
    """∏e^{t_i} ∏e^{−α s_j}."""
    alpha = float(as_alpha(alpha))
    return cmath.exp(sum(complex(t) for t in pt.t) - alpha * sum(complex(s) for s in pt.s)).real \
        if not any(isinstance(v, complex) for v in pt.t + pt.s) else \
        cmath.exp(sum(complex(t) for t in pt.t) - alpha * sum(complex(s) for s in pt.s))


# --------------------------------------------------------- transformations

def dual_spec(spec: SeriesSpec, pt: SuperPoint) -> tuple[SeriesSpec, SuperPoint]:
    """α ↦ 1/α duality: parameters scaled by −α, (t;s) ↦ (−α)^{1−p+q}·(s;t).

    For the hat series the lower parameter is unchanged and the scale is −1/α.
    """
    alpha = spec.alpha
    if spec.variant == "standard":
        scale = (-alpha) ** (1 - spec.p + spec.q)
        new = SeriesSpec(tuple(-alpha * a for a in spec.upper), tuple(-alpha * b for b in spec.lower), 1 / alpha)
    elif spec.variant == "hat":
        scale = -1 / alpha
        new = SeriesSpec(tuple(-alpha * a for a in spec.upper), spec.lower, 1 / alpha, variant="hat")
    else:
        raise ValueError(f"duality is not available for the {spec.variant} variant")
    return new, SuperPoint(tuple(scale * v for v in pt.s), tuple(scale * v for v in pt.t))


def _prefactor(pt: SuperPoint, alpha, exponent_t) -> float:
    """∏(1−t_i)^{e} ∏(1−s_j)^{−α e}."""
    out = 1.0
    for t in pt.t:
        if t == 1:
            raise ZeroDivisionError("pole at t_i = 1")
        out *= _cpow(1 - float(t), float(exponent_t))
    for s in pt.s:
        if s == 1:
            raise ZeroDivisionError("pole at s_j = 1")
        out *= _cpow(1 - float(s), -float(alpha) * float(exponent_t))
    return out


def _mapped(pt: SuperPoint) -> SuperPoint:
    return SuperPoint(tuple(-float(t) / (1 - float(t)) for t in pt.t), tuple(-float(s) / (1 - float(s)) for s in pt.s))


def pfaff_euler(spec: SeriesSpec, which: int, pt: SuperPoint, max_degree: int = 16, **kw) -> tuple:
    """(LHS, RHS) of the three Pfaff–Euler relations for ₂SF₁."""
    if (spec.p, spec.q, spec.variant) != (2, 1, "standard"):
        raise ValueError("Pfaff–Euler relations need a standard 2SF1 spec")
    a, b = spec.upper
    (c,) = spec.lower
    alpha = spec.alpha
    lhs = series_value(spec, pt, max_degree, **kw)
    if which == 1:
        rhs = _prefactor(pt, alpha, -a) * series_value(SeriesSpec((a, c - b), (c,), alpha), _mapped(pt), max_degree, **kw)
    elif which == 2:
        rhs = _prefactor(pt, alpha, -b) * series_value(SeriesSpec((c - a, b), (c,), alpha), _mapped(pt), max_degree, **kw)
    elif which == 3:
        rhs = _prefactor(pt, alpha, c - a - b) * series_value(SeriesSpec((c - a, c - b), (c,), alpha), pt, max_degree, **kw)
    else:
        raise ValueError("which must be 1, 2 or 3")
    return lhs, rhs


def kummer(spec: SeriesSpec, pt: SuperPoint, max_degree: int = 18) -> tuple:
    """(₁SF₁(a;c;t,s), ∏e^{t}∏e^{−αs} ₁SF₁(c−a;c;−t,−s))."""
    if (spec.p, spec.q, spec.variant) != (1, 1, "standard"):
        raise ValueError("Kummer relation needs a standard 1SF1 spec")
    (a,), (c,) = spec.upper, spec.lower
    lhs = series_value(spec, pt, max_degree)
    neg = SuperPoint(tuple(-v for v in pt.t), tuple(-v for v in pt.s))
    rhs = closed_form_0SF0(spec.alpha, pt) * series_value(SeriesSpec((c - a,), (c,), spec.alpha), neg, max_degree)
    return lhs, rhs


def eval_hat_2SF1(a, b, c, alpha, pt: SuperPoint, max_degree: int = 16):
    """Σ [a]_κ[b]_κ / ((c)_{|κ|} h_κ) SP_κ(t;s), truncated."""
    return eval_series(SeriesSpec((a, b), (c,), alpha, variant="hat"), pt, max_degree)[0]


def hat_shells(a, b, c, alpha, pt: SuperPoint, max_degree: int) -> list:
    """Weight-k pieces of the hat series (without the 1/(c)_k factor restored)."""
    spec = SeriesSpec((a, b), (c,), alpha, variant="hat")
    shells = [0.0] * (max_degree + 1)
    for k, term in series_terms(spec, pt, max_degree).items():
        shells[weight(k)] += complex(term) if isinstance(term, complex) else float(term)
    return shells


def genlaguerre_rule(order: int, shape: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and normalized weights for u^{shape−1} e^{−u}/Γ(shape) (Golub–Welsch)."""
    if shape <= 0:
        raise ValueError("Gauss–Laguerre shape must be positive")
    k = np.arange(order, dtype=float)
    diag = 2 * k + shape
    off = np.sqrt(k[1:] * (k[1:] + shape - 1))
    jac = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    nodes, vecs = np.linalg.eigh(jac)
    return nodes, vecs[0] ** 2


def _terminates(a, b, alpha, pt: SuperPoint) -> bool:
    width, length = _length_and_width_caps(SeriesSpec((a, b), (), alpha))
    return max_support_weight(pt.n, pt.m, width, length) < math.inf


def regularized_2SF0(a, b, alpha, c0, pt: SuperPoint, quad_order: int = 96, max_degree: int = 24):
    """(1/Γ(c₀))∫₀^∞ u^{c₀−1} e^{−u} ₂SF̂₁(a, b; c₀; u·pt) du.

    A terminating hat series is a polynomial in u and the Gauss–Laguerre rule
    integrates it exactly.  Otherwise the hat series (radius ~1/‖pt‖ in u) is
    continued along u > 0 by a diagonal Padé approximant built from its first
    ``max_degree`` shells; a pole on the positive axis raises ArithmeticError.
    """
    if not all(float(v) > 0 for v in pt.t + pt.s):
        warnings.warn("regularized 2SF0 is only established for positive arguments", RuntimeWarning)
    c0 = float(c0)
    shells = [complex(v).real for v in hat_shells(a, b, c0, alpha, pt, max_degree)]
    nodes, weights = genlaguerre_rule(quad_order, c0)
    log_nodes = np.log(nodes)
    if _terminates(a, b, alpha, pt):
        total = 0.0
        for k, shell in enumerate(shells):
            if shell:
                total += shell * float(np.sum(weights * np.exp(k * log_nodes)))
        return total
    from scipy.interpolate import pade

    # work in v = u·‖pt‖ so the coefficients stay O(1)
    scale = max(abs(complex(v)) for v in pt.t + pt.s)
    coeffs = [v / scale ** k for k, v in enumerate(shells)]
    top = max(k for k, v in enumerate(coeffs) if v)
    v_nodes = nodes * scale
    for den_order in range(top // 2, 0, -1):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            num, den = pade(coeffs[: top + 1], den_order, top - den_order)
        roots = np.roots(den.coeffs)
        if not any(abs(r.imag) < 1e-6 * max(1.0, abs(r)) and r.real > 0 for r in roots):
            return float(np.sum(weights * num(v_nodes) / den(v_nodes)))
    raise ArithmeticError("no Padé continuation free of poles on u > 0")


# -------------------------------------------------------- recurrences

def eigen_e(kappa: Partition, alpha, n: int, m: int):
    """e_κ(α) = Σ_i κ_i(κ_i − 1 + (2/α)(n − αm − i))."""
    p0 = n - alpha * m
    return sum(k * (k - 1 + 2 * (p0 - i) / alpha) for i, k in enumerate(kappa, start=1))


def twoSF1_coefficient(a, b, c, alpha, kappa: Partition):
    """A_κ = [a]_κ[b]_κ/[c]_κ."""
    num = gen_pochhammer(a, kappa, alpha) * gen_pochhammer(b, kappa, alpha)
    if num == 0:
        return num
    den = gen_pochhammer(c, kappa, alpha)
    if den == 0:
        raise ParameterError(f"[c]_κ = 0 at κ={kappa}")
    return num / den


def recurrence_sides(A, a, b, c, alpha, n: int, m: int, kappa: Partition, form: str = "derived") -> tuple:
    """Both sides of the coefficient recurrence at κ for a coefficient map A.

    ``form="derived"`` weights A(κ^{(i)}) by ratio(κ^{(i)}, κ)·h_κ/h_{κ^{(i)}};
    ``form="printed"`` uses the factor (n − αm + ακ_i − i + 1) instead, which
    [a]_κ[b]_κ/[c]_κ does not satisfy.
    """
    if form not in ("derived", "printed"):
        raise ValueError(f"unknown form {form!r}")
    hook = FatHook(n, m)
    p0 = n - alpha * m
    lhs = 0
    for i in range(1, len(kappa) + 2):
        up = add_box(kappa, i)
        if up is None or not hook.contains(up):
            continue
        ki = part(kappa, i)
        binom = binomial_coefficients(up, alpha).get(kappa, 0)
        if form == "derived":
            weight_factor = ones_ratio(up, kappa, alpha, n, m) * hook_product(kappa, alpha) / hook_product(up, alpha)
        else:
            weight_factor = p0 + alpha * ki - i + 1
        lhs += binom * (c + ki - Fraction(i - 1) / alpha) * weight_factor * A(up)
    rhs = (eigen_e(kappa, alpha, n, m) + (a + b + 1 - (p0 - 1) / alpha) * weight(kappa) + p0 * a * b) * A(kappa)
    return lhs, rhs


def coefficient_recurrence_check(a, b, c, alpha, n: int, m: int, max_weight: int, A=None,
                                 failures: list | None = None) -> bool:
    """Exact check of the ₂SF₁ coefficient recurrence on H_{n,m} up to ``max_weight``.

    ``A`` defaults to κ ↦ [a]_κ[b]_κ/[c]_κ; a custom map is accepted for negative controls.
    """
    alpha = as_alpha(alpha)
    a, b, c = (parse_scalar(v, allow_float=False) for v in (a, b, c))
    if not is_exact(alpha):
        raise ValueError("the recurrence check is exact and needs a rational alpha")
    if A is None:
        A = lambda k: twoSF1_coefficient(a, b, c, alpha, k)
    ok = True
    for kappa in enumerate_partitions(max_weight, FatHook(n, m)):
        lhs, rhs = recurrence_sides(A, a, b, c, alpha, n, m, kappa)
        if lhs != rhs:
            ok = False
            if failures is not None:
                failures.append((kappa, lhs, rhs))
    return ok


# ------------------------------------------------------------- Kadell lift

def kadell_superseries_lift(spec: SeriesSpec, lam1, lam2, ell: int, pt: SuperPoint, max_degree: int = 8,
                            quad_points: int = 40) -> dict:
    """Integrate the mixed series over z ∈ [0,1]^ℓ against the Selberg density and compare.

    The lifted series appends a_{p+1} = λ₁+1+(ℓ−1)/α and b_{q+1} = λ₁+λ₂+2+2(ℓ−1)/α.
    """
    from .ensembles import selberg_density_integral, selberg_constant

    if ell > 3:
        raise ValueError("ℓ > 3 is refused (quadrature cost)")
    alpha = spec.alpha
    if not any(integer_value(a * alpha) == ell for a in spec.upper):
        raise ValueError("one upper parameter must equal ℓ/α")
    lam1, lam2 = float(lam1), float(lam2)
    fa = float(alpha)
    base = SeriesSpec(spec.upper, spec.lower, alpha)
    kappas = [k for k in series_partitions(base, pt.n, pt.m, max_degree) if len(k) <= ell]
    coeffs = {k: float(series_coefficient(base, k)) for k in kappas}
    coeffs = {k: v for k, v in coeffs.items() if v != 0}
    sp = BranchingTable(fa, list(coeffs)).evaluate([float(v) for v in pt.t], [float(v) for v in pt.s])
    ztab = BranchingTable(fa, list(coeffs))
    ones = ztab.evaluate([1.0] * ell)
    weights = {k: coeffs[k] * sp.get(k, 0.0) / ones[k] for k in coeffs}

    def integrand(x: np.ndarray) -> np.ndarray:
        cols = [x[:, i] for i in range(ell)]
        pz = ztab.evaluate(cols)
        out = np.zeros(x.shape[0])
        for k, w in weights.items():
            if k in pz:
                out = out + w * pz[k]
        return out

    beta = 2.0 / fa
    integral = selberg_density_integral(integrand, ell, lam1, lam2, beta, order=quad_points)
    lhs = integral / selberg_constant(ell, lam1, lam2, 1.0 / fa)
    lifted = SeriesSpec(tuple(spec.upper) + (lam1 + 1 + (ell - 1) / fa,),
                        tuple(spec.lower) + (lam1 + lam2 + 2 + 2 * (ell - 1) / fa,), fa)
    rhs = 0.0
    for k in kappas:
        c = series_coefficient(lifted, k)
        if c != 0 and k in sp:
            rhs += float(c) * sp[k]
    return {"integrated": lhs, "lifted_series": rhs, "discrepancy": abs(lhs - rhs)}
