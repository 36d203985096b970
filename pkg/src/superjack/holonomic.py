"""Deformed differential operators, their action on super Jack expansions, and system residuals.

Expansions are stored in the plain super Jack basis: ``coeffs[κ]`` multiplies
SP_κ^(α)(t; s).  A series Σ A_κ SP_κ / h_κ therefore has ``coeffs[κ] = A_κ/h_κ``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .hyperseries import ParameterError, eigen_e, recurrence_sides, twoSF1_coefficient
from .jack import BranchingTable, SuperPoint, binomial_coefficients, ones_ratio
from .partitions import (
    FatHook,
    Partition,
    as_alpha,
    enumerate_partitions,
    hook_product,
    is_exact,
    one_like,
    parse_scalar,
    part,
    remove_box,
    weight,
)

FAMILIES = ("jacobi", "general", "gaussian")


# ----------------------------------------------------------------- types

@dataclass(frozen=True)
class DeformedSystemSpec:
    """Parameters of a deformed (n+m)-variable holonomic system.

    ``family="jacobi"`` is the ₂SF₁ system; ``"general"`` takes
    ``general=(α₁, α₂, β₀, β₁, γ₀)``; ``"gaussian"`` is the Hermite-limit system
    (only α, a, b are used).
    """

    alpha: object
    a: object
    b: object
    c: object
    n: int
    m: int
    family: str = "jacobi"
    general: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_alpha(self.alpha))
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, parse_scalar(getattr(self, name)))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be nonnegative")
        if self.family == "general":
            if self.general is None or len(self.general) != 5:
                raise ValueError("general family needs (alpha1, alpha2, beta0, beta1, gamma0)")
            object.__setattr__(self, "general", tuple(parse_scalar(v) for v in self.general))

    @property
    def p0(self):
        return self.n - self.alpha * self.m

    def coefficients(self) -> tuple:
        """(α₁, α₂, β₀, β₁, γ₀) of the general form."""
        if self.family == "general":
            return self.general
        if self.family == "jacobi":
            a, b, c = self.a, self.b, self.c
            return (one_like(a, b, c), -one_like(a, b, c), c, -(a + b + 1), -a * b)
        raise ValueError("the Gaussian system has no (α₁, α₂, β₀, β₁, γ₀) form")

    def parameter_hazards(self, max_weight: int) -> list:
        """Partitions κ ∈ H_{n,m} (|κ| ≤ max_weight) with β₀ − ((i−1)/α − κ_i)α₁ = 0 for some row i."""
        alpha1, _, beta0, _, _ = self.coefficients()
        bad = []
        for kappa in enumerate_partitions(max_weight, FatHook(self.n, self.m)):
            for i in range(1, len(kappa) + 2):
                shift = Fraction(i - 1) / self.alpha if is_exact(self.alpha) else (i - 1) / self.alpha
                if beta0 - (shift - part(kappa, i)) * alpha1 == 0:
                    bad.append(kappa)
                    break
        return bad


@dataclass
class BasisExpansion:
    """Σ coeffs[κ]·SP_κ^(α)(t; s), supported on the fat hook H_{n,m}."""

    coeffs: dict
    n: int
    m: int
    alpha: object
    degree: int | None = None

    def __post_init__(self):
        self.alpha = as_alpha(self.alpha)
        hook = FatHook(self.n, self.m)
        clean = {}
        for k, v in self.coeffs.items():
            if v == 0:
                continue
            if not hook.contains(k):
                raise ValueError(f"{k} is outside the fat hook H_{self.n},{self.m}")
            clean[tuple(k)] = v
        self.coeffs = clean
        if self.degree is None:
            self.degree = max((weight(k) for k in clean), default=0)

    def support(self) -> set:
        return set(self.coeffs)

    def shell_max(self, max_weight: int) -> object:
        vals = [abs(v) for k, v in self.coeffs.items() if weight(k) <= max_weight]
        return max(vals, default=0)

    def evaluate(self, pt: SuperPoint):
        if (pt.n, pt.m) != (self.n, self.m):
            raise ValueError(f"point has {pt.n}+{pt.m} variables, expansion expects {self.n}+{self.m}")
        if not self.coeffs:
            return 0
        exact = pt.is_exact() and is_exact(self.alpha, *self.coeffs.values())
        t = list(pt.t) if exact else [complex(v) if isinstance(v, complex) else float(v) for v in pt.t]
        s = list(pt.s) if exact else [complex(v) if isinstance(v, complex) else float(v) for v in pt.s]
        values = BranchingTable(self.alpha, list(self.coeffs)).evaluate(t, s)
        total = 0
        for k, c in self.coeffs.items():
            v = values.get(k)
            if v is not None:
                total = total + (c if exact else complex(c) if isinstance(c, complex) else float(c)) * v
        return total

    def combine(self, other: "BasisExpansion", scale=1) -> "BasisExpansion":
        """self + scale·other."""
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + scale * v
        return BasisExpansion(out, self.n, self.m, self.alpha, max(self.degree, other.degree))

    def scaled(self, factor) -> "BasisExpansion":
        return BasisExpansion({k: factor * v for k, v in self.coeffs.items()}, self.n, self.m, self.alpha, self.degree)


def series_expansion(a, b, c, alpha, n: int, m: int, max_degree: int) -> BasisExpansion:
    """Truncated ₂SF₁(a, b; c) as a BasisExpansion with coefficients A_κ/h_κ."""
    alpha = as_alpha(alpha)
    coeffs = {}
    for kappa in enumerate_partitions(max_degree, FatHook(n, m)):
        coeffs[kappa] = twoSF1_coefficient(a, b, c, alpha, kappa) / hook_product(kappa, alpha)
    return BasisExpansion(coeffs, n, m, alpha, max_degree)


# ------------------------------------------------------ operator actions

def _lowering(expansion: BasisExpansion, factor: Callable[[Partition, int], object]) -> BasisExpansion:
    """Σ_κ c_κ Σ_i (κ choose κ_(i))·ratio(κ, κ_(i))·factor(κ, i)·SP_{κ_(i)}."""
    alpha, n, m = expansion.alpha, expansion.n, expansion.m
    out: dict = {}
    for kappa, coeff in expansion.coeffs.items():
        if not kappa:
            continue
        binoms = binomial_coefficients(kappa, alpha)
        for i in range(1, len(kappa) + 1):
            low = remove_box(kappa, i)
            if low is None:
                continue
            f = factor(kappa, i)
            if f == 0:
                continue
            val = coeff * binoms[low] * ones_ratio(kappa, low, alpha, n, m) * f
            out[low] = out.get(low, 0) + val
    return BasisExpansion(out, n, m, alpha, expansion.degree)


def op_E(l: int, expansion: BasisExpansion) -> BasisExpansion:
    """E^l = Σ t_i^l ∂_{t_i} + Σ s_j^l ∂_{s_j} for l ∈ {0, 1} in the super Jack basis."""
    if l == 1:
        return BasisExpansion({k: weight(k) * v for k, v in expansion.coeffs.items()},
                              expansion.n, expansion.m, expansion.alpha, expansion.degree)
    if l == 0:
        return _lowering(expansion, lambda kappa, i: 1)
    raise ValueError("l must be 0 or 1")


def op_D(k: int, expansion: BasisExpansion) -> BasisExpansion:
    """The deformed second-order operators D^k, k ∈ {1, 2}, in the super Jack basis.

    D² is diagonal with eigenvalue e_κ(α); D¹ lowers the degree by one.
    """
    alpha, n, m = expansion.alpha, expansion.n, expansion.m
    if k == 2:
        return BasisExpansion({kap: eigen_e(kap, alpha, n, m) * v for kap, v in expansion.coeffs.items()},
                              n, m, alpha, expansion.degree)
    if k == 1:
        p0 = n - alpha * m
        return _lowering(expansion, lambda kappa, i: kappa[i - 1] - 1 + (p0 - i) / alpha)
    raise ValueError("k must be 1 or 2")


def summed_operator(sys: DeformedSystemSpec, expansion: BasisExpansion) -> BasisExpansion:
    """ℒ_{n,m}·expansion for the ₂SF₁ system."""
    if sys.family != "jacobi":
        raise ValueError("the summed operator is defined for the jacobi family")
    alpha, a, b, c = sys.alpha, sys.a, sys.b, sys.c
    p0 = sys.p0
    out = op_D(1, expansion).combine(op_D(2, expansion), -1)
    out = out.combine(op_E(0, expansion), c - (p0 - 1) / alpha)
    out = out.combine(op_E(1, expansion), -(a + b + 1 - (p0 - 1) / alpha))
    return out.combine(expansion, -p0 * a * b)


def summed_operator_residual(sys: DeformedSystemSpec, expansion: BasisExpansion) -> object:
    """Max |coefficient| of ℒ_{n,m}·expansion below the top (truncation) shell."""
    if (sys.n, sys.m) != (expansion.n, expansion.m):
        raise ValueError("system and expansion have different variable counts")
    image = summed_operator(sys, expansion)
    return image.shell_max(expansion.degree - 1)


# ------------------------------------------------------- direct operators

def _line_derivatives(f: Callable[[object], object], degree: int) -> tuple:
    """(f′(0), f″(0)) of a polynomial of degree ≤ ``degree`` from its values at 0..degree, exactly."""
    d = max(degree, 2)
    nodes = list(range(d + 1))
    rows = [[Fraction(x) ** p for p in range(d + 1)] + [f(x)] for x in nodes]
    for col in range(d + 1):
        pivot = next(r for r in range(col, d + 1) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        piv = rows[col][col]
        rows[col] = [v / piv for v in rows[col]]
        for r in range(d + 1):
            if r != col and rows[r][col] != 0:
                fac = rows[r][col]
                rows[r] = [v - fac * w for v, w in zip(rows[r], rows[col])]
    coeffs = [rows[p][-1] for p in range(d + 1)]
    return coeffs[1], 2 * coeffs[2]


def exact_partials(F: Callable[[SuperPoint], object], pt: SuperPoint, degree: int) -> tuple:
    """First and pure second partial derivatives of a polynomial F at an exact point.

    Returns (value, grad_t, grad_s, hess_t, hess_s).  F is sampled along each
    coordinate line and the interpolating polynomial is differentiated.
    """
    if not pt.is_exact():
        raise ValueError("exact partials need an exact point")
    t, s = list(pt.t), list(pt.s)

    def along(which: str, idx: int):
        def g(x):
            tt, ss = list(t), list(s)
            (tt if which == "t" else ss)[idx] += x
            return F(SuperPoint(tuple(tt), tuple(ss)))
        return _line_derivatives(g, degree)

    dt = [along("t", i) for i in range(len(t))]
    ds = [along("s", j) for j in range(len(s))]
    return F(pt), [d[0] for d in dt], [d[0] for d in ds], [d[1] for d in dt], [d[1] for d in ds]


def apply_operator_direct(name: str, alpha, pt: SuperPoint, derivs: tuple):
    """Apply E⁰, E¹, D¹ or D² to a function given its derivative data at ``pt``.

    ``derivs`` is (value, grad_t, grad_s, hess_t, hess_s) as returned by exact_partials.
    """
    _, gt, gs, ht, hs = derivs
    t, s = list(pt.t), list(pt.s)
    inv = 1 / alpha
    if name in ("E0", "E1"):
        l = int(name[1])
        return sum(x ** l * g for x, g in zip(t, gt)) + sum(y ** l * g for y, g in zip(s, gs))
    if name not in ("D1", "D2"):
        raise ValueError(f"unknown operator {name!r}")
    k = int(name[1])
    out = 0
    out += sum(x ** k * h for x, h in zip(t, ht))
    out -= inv * sum(y ** k * h for y, h in zip(s, hs))
    for i, ti in enumerate(t):
        for j, tj in enumerate(t):
            if i != j:
                out += 2 * inv * ti ** k / (ti - tj) * gt[i]
    for i, si in enumerate(s):
        for j, sj in enumerate(s):
            if i != j:
                out -= 2 * si ** k / (si - sj) * gs[i]
    for i, ti in enumerate(t):
        for j, sj in enumerate(s):
            out -= 2 / (ti - sj) * (ti ** k * gt[i] + inv * sj ** k * gs[j])
    out -= k * (1 + inv) * sum(y ** (k - 1) * g for y, g in zip(s, gs))
    return out


_OPS = {
    "E0": lambda e: op_E(0, e),
    "E1": lambda e: op_E(1, e),
    "D1": lambda e: op_D(1, e),
    "D2": lambda e: op_D(2, e),
}


def operator_action_check(kappa: Partition, alpha, pt: SuperPoint, name: str) -> tuple:
    """(direct, via basis) values of an operator applied to SP_κ at an exact point."""
    alpha = as_alpha(alpha)
    n, m = pt.n, pt.m
    table = BranchingTable(alpha, [kappa])
    F = lambda p: table.evaluate(p.t, p.s).get(kappa, 0)
    direct = apply_operator_direct(name, alpha, pt, exact_partials(F, pt, weight(kappa)))
    if not FatHook(n, m).contains(kappa):
        return direct, 0 * one_like(alpha)
    image = _OPS[name](BasisExpansion({kappa: one_like(alpha)}, n, m, alpha))
    return direct, image.evaluate(pt)


# ------------------------------------------------------ pointwise systems

def system_residuals(sys: DeformedSystemSpec, pt: SuperPoint, derivs: tuple) -> list:
    """Left-hand sides of the n+m equations at ``pt`` from derivative data.

    Works with scalars or numpy arrays (one entry per sample).
    """
    value, gt, gs, ht, hs = derivs
    t, s = list(pt.t), list(pt.s)
    alpha = sys.alpha if is_exact(sys.alpha, *t, *s) else float(sys.alpha)
    inv = 1 / alpha
    _check_distinct(t, s)
    out = []
    if sys.family == "gaussian":
        a, b = sys.a, sys.b
        for i, ti in enumerate(t):
            r = ht[i] - b * ti * gt[i] - a * b * value
            r = r + inv * sum((gt[i] - gt[k]) / (ti - tk) for k, tk in enumerate(t) if k != i)
            r = r - sum((gt[i] + inv * gs[k]) / (ti - sk) for k, sk in enumerate(s))
            out.append(r)
        for j, sj in enumerate(s):
            r = -inv * hs[j] - b * sj * gs[j] + alpha * a * b * value
            r = r - sum((gs[j] - gs[k]) / (sj - sk) for k, sk in enumerate(s) if k != j)
            r = r + sum((inv * gs[j] + gt[k]) / (sj - tk) for k, tk in enumerate(t))
            out.append(r)
        return out
    a1, a2, b0, b1, g0 = sys.coefficients()
    q = lambda w: a1 + a2 * w
    for i, ti in enumerate(t):
        r = ti * q(ti) * ht[i] + (b0 + b1 * ti) * gt[i] + g0 * value
        r = r + inv * sum(tk / (ti - tk) * (q(ti) * gt[i] - q(tk) * gt[k]) for k, tk in enumerate(t) if k != i)
        r = r - sum(sk / (ti - sk) * (q(ti) * gt[i] + inv * q(sk) * gs[k]) for k, sk in enumerate(s))
        out.append(r)
    for j, sj in enumerate(s):
        r = -inv * sj * q(sj) * hs[j] + (b0 + (b1 - (1 + inv) * a2) * sj) * gs[j] - alpha * g0 * value
        r = r - sum(sk / (sj - sk) * (q(sj) * gs[j] - q(sk) * gs[k]) for k, sk in enumerate(s) if k != j)
        r = r + sum(tk / (sj - tk) * (inv * q(sj) * gs[j] + q(tk) * gt[k]) for k, tk in enumerate(t))
        out.append(r)
    return out


def _check_distinct(t: Sequence, s: Sequence) -> None:
    coords = list(t) + list(s)
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            if _scalar_equal(coords[i], coords[j]):
                raise ValueError("coordinates must be pairwise distinct (singular denominators)")


def _scalar_equal(x, y) -> bool:
    try:
        return bool(x == y)
    except ValueError:  # numpy arrays
        return False


def fd_partials(F: Callable[[SuperPoint], object], pt: SuperPoint, h: float, richardson: bool = True) -> tuple:
    """Central-difference (value, grad_t, grad_s, hess_t, hess_s), optionally Richardson-extrapolated."""
    if h <= 0:
        raise ValueError("step must be positive")
    conv = lambda v: complex(v) if isinstance(v, complex) else float(v)
    t, s = [conv(v) for v in pt.t], [conv(v) for v in pt.s]
    f0 = F(SuperPoint(tuple(t), tuple(s)))

    def shifted(which, idx, delta):
        tt, ss = list(t), list(s)
        (tt if which == "t" else ss)[idx] += delta
        return F(SuperPoint(tuple(tt), tuple(ss)))

    def derivs(which, idx, step):
        fp, fm = shifted(which, idx, step), shifted(which, idx, -step)
        return (fp - fm) / (2 * step), (fp - 2 * f0 + fm) / step ** 2

    def best(which, idx):
        d1, d2 = derivs(which, idx, h)
        if not richardson:
            return d1, d2
        e1, e2 = derivs(which, idx, h / 2)
        return (4 * e1 - d1) / 3, (4 * e2 - d2) / 3

    dt = [best("t", i) for i in range(len(t))]
    ds = [best("s", j) for j in range(len(s))]
    return f0, [d[0] for d in dt], [d[0] for d in ds], [d[1] for d in dt], [d[1] for d in ds]


def pointwise_system_residual(sys: DeformedSystemSpec, F: Callable[[SuperPoint], object], pt: SuperPoint,
                              h: float = 1e-3, richardson: bool = True) -> list:
    """Residuals of the n+m equations for F at ``pt`` via central differences."""
    if (pt.n, pt.m) != (sys.n, sys.m):
        raise ValueError("point does not match the system's variable counts")
    _check_distinct(pt.t, pt.s)
    return system_residuals(sys, pt, fd_partials(F, pt, h, richardson))


def cancellation_residual(F: Callable[[SuperPoint], object], alpha, pt: SuperPoint, i: int, j: int,
                          h: float = 1e-4) -> object:
    """(∂_{t_i} + (1/α)∂_{s_j})F at a point with t_i = s_j (1-based indices), by central differences."""
    if abs(complex(pt.t[i - 1]) - complex(pt.s[j - 1])) > 1e-14:
        raise ValueError("cancellation is only defined on t_i = s_j")
    _, gt, gs, _, _ = fd_partials(F, pt, h)
    return gt[i - 1] + gs[j - 1] / float(alpha)


class SeriesFunction:
    """Callable truncated ₂SF₁ built once and evaluated at many points."""

    def __init__(self, a, b, c, alpha, n: int, m: int, max_degree: int = 16):
        self.expansion = series_expansion(a, b, c, alpha, n, m, max_degree)
        self.alpha = as_alpha(alpha)
        self._coeffs = {k: float(v) for k, v in self.expansion.coeffs.items()}
        self._table = BranchingTable(float(self.alpha), list(self._coeffs))

    def __call__(self, pt: SuperPoint):
        vals = self._table.evaluate([complex(v) if isinstance(v, complex) else float(v) for v in pt.t],
                                    [complex(v) if isinstance(v, complex) else float(v) for v in pt.s])
        return sum(c * vals[k] for k, c in self._coeffs.items() if k in vals)


# ----------------------------------------------------------- transforms

def dual_system(sys: DeformedSystemSpec) -> DeformedSystemSpec:
    """(α, a, b, c) ↦ (1/α, −αa, −αb, −αc) with the two variable families exchanged."""
    al = sys.alpha
    return DeformedSystemSpec(1 / al, -al * sys.a, -al * sys.b, -al * sys.c, sys.m, sys.n, sys.family)


def inversion_parameters(sys: DeformedSystemSpec) -> tuple:
    """(a′, b′, c′) of the inverted system."""
    a, b, c, al = sys.a, sys.b, sys.c, sys.alpha
    shift = (sys.p0 - 1) / al
    return a, a - c + 1 + shift, a - b + 1 + shift


def inversion_transform(sys: DeformedSystemSpec, G: Callable[[SuperPoint], object]):
    """The inverted system and w ↦ ∏ w_i^{−a/ρ_i} G(1/w) (ρ = 1 on t, −1/α on s)."""
    if sys.family != "jacobi":
        raise ValueError("inversion is defined for the jacobi family")
    a2, b2, c2 = inversion_parameters(sys)
    new = DeformedSystemSpec(sys.alpha, a2, b2, c2, sys.n, sys.m)
    a, al = complex(sys.a) if isinstance(sys.a, complex) else float(sys.a), float(sys.alpha)

    def F(pt: SuperPoint):
        pref = 1.0
        for x in pt.t:
            if x == 0:
                raise ZeroDivisionError("inversion needs nonzero coordinates")
            pref *= _power(x, -a)
        for y in pt.s:
            if y == 0:
                raise ZeroDivisionError("inversion needs nonzero coordinates")
            pref *= _power(y, a * al)
        inv_pt = SuperPoint(tuple(1 / x for x in pt.t), tuple(1 / y for y in pt.s))
        return pref * G(inv_pt)

    return new, F


def _power(x, e):
    if isinstance(x, complex) or (float(x) < 0 and float(e) != int(float(e))):
        return complex(x) ** e
    return float(x) ** e


# ----------------------------------------------------- Kaneko criterion

def kaneko_criterion_check(a, b, c, alpha, n: int, m: int, max_weight: int, A=None,
                           failures: list | None = None) -> bool:
    """Exact check of the reduced recurrences ℒ_{p,0} (p ≤ n) and ℒ_{n,q} (q ≤ m).

    ``A`` defaults to κ ↦ [a]_κ[b]_κ/[c]_κ and may be replaced for negative controls.
    Raises ParameterError when [c]_κ vanishes on a reduced fat hook.
    """
    alpha = as_alpha(alpha)
    a, b, c = (parse_scalar(v, allow_float=False) for v in (a, b, c))
    if not is_exact(alpha):
        raise ValueError("the criterion is checked exactly and needs a rational alpha")
    if A is None:
        A = lambda k: twoSF1_coefficient(a, b, c, alpha, k)
    pairs = [(p, 0) for p in range(n + 1)] + [(n, q) for q in range(1, m + 1)]
    ok = True
    for p, q in pairs:
        for kappa in enumerate_partitions(max_weight, FatHook(p, q)):
            lhs, rhs = recurrence_sides(A, a, b, c, alpha, p, q, kappa)
            if lhs != rhs:
                ok = False
                if failures is not None:
                    failures.append(((p, q), kappa, lhs, rhs))
    return ok


# ------------------------------------------------------- super Jacobi

def kappa_max(N: int, M: int, n: int, m: int) -> Partition:
    """(Nⁿ, m^{M−n}): the largest partition in H_{n,m} with κ₁ ≤ N and length ≤ M."""
    if M < n or m > N:
        raise ValueError("κ^max needs M ≥ n and m ≤ N")
    return tuple([N] * n + [m] * (M - n) if m > 0 else [N] * n)


def super_jacobi(N: int, M: int, alpha, c, n: int, m: int) -> BasisExpansion:
    """The terminating ₂SF₁(−N, M/α; c) as a finite expansion normalized to 1 at the origin."""
    if N < 1 or M < 1 or int(N) != N or int(M) != M:
        raise ValueError("super Jacobi needs positive integers N and M (a = −N, b = M/α)")
    alpha = as_alpha(alpha)
    top = kappa_max(N, M, n, m)
    a, b = Fraction(-N), Fraction(M) / alpha if is_exact(alpha) else M / alpha
    coeffs = {}
    for kappa in enumerate_partitions(weight(top), FatHook(n, m)):
        if part(kappa, 1) > N or len(kappa) > M:
            continue
        coeffs[kappa] = twoSF1_coefficient(a, b, c, alpha, kappa) / hook_product(kappa, alpha)
    return BasisExpansion(coeffs, n, m, alpha, weight(top) + 1)


def jacobi_eigenvalue(kappa: Partition, alpha, gamma, eta, n: int, m: int):
    """ε^J_κ = −Σ κ_i(κ_i − 1 + (2/α)(p₀ − i)) − (γ+η+2)|κ|."""
    return -eigen_e(kappa, alpha, n, m) - (gamma + eta + 2) * weight(kappa)


def jacobi_parameters(N: int, M: int, alpha, c, n: int, m: int) -> tuple:
    """(γ, η) with c = γ + 1 + (p₀−1)/α and 1 + γ + η = a + b − (p₀−1)/α."""
    p0 = n - alpha * m
    gamma = c - 1 - (p0 - 1) / alpha
    eta = -N + Fraction(M) / alpha - (p0 - 1) / alpha - 1 - gamma if is_exact(alpha) else \
        -N + M / alpha - (p0 - 1) / alpha - 1 - gamma
    return gamma, eta


def super_jacobi_eigencheck(N: int, M: int, alpha, c, n: int, m: int) -> dict:
    """Exact eigen-equation data for the super Jacobi polynomial at κ^max."""
    alpha = as_alpha(alpha)
    exp = super_jacobi(N, M, alpha, c, n, m)
    gamma, eta = jacobi_parameters(N, M, alpha, c, n, m)
    top = kappa_max(N, M, n, m)
    eps = jacobi_eigenvalue(top, alpha, gamma, eta, n, m)
    a, b = -N, Fraction(M) / alpha if is_exact(alpha) else M / alpha
    p0 = n - alpha * m
    image = op_D(1, exp).combine(op_D(2, exp), -1)
    image = image.combine(op_E(0, exp), gamma + 1).combine(op_E(1, exp), -(gamma + eta + 2))
    residual = image.combine(exp, -eps)
    return {
        "kappa_max": top,
        "gamma": gamma,
        "eta": eta,
        "eps_J": eps,
        "ab_p0": a * b * p0,
        "eigen_residual": residual.shell_max(weight(top) + 1),
        "top_coefficient": exp.coeffs.get(top, 0),
        "support": exp.support(),
    }


def termination_check(N: int, M: int, alpha, c, n: int, m: int, max_weight: int | None = None) -> dict:
    """Compare the nonzero ₂SF₁(−N, M/α; c) coefficients with the predicted support."""
    alpha = as_alpha(alpha)
    top = kappa_max(N, M, n, m)
    max_weight = weight(top) + 3 if max_weight is None else max_weight
    a, b = Fraction(-N), Fraction(M) / alpha if is_exact(alpha) else M / alpha
    actual, predicted = set(), set()
    for kappa in enumerate_partitions(max_weight, FatHook(n, m)):
        if twoSF1_coefficient(a, b, c, alpha, kappa) != 0:
            actual.add(kappa)
        if part(kappa, 1) <= N and len(kappa) <= M:
            predicted.add(kappa)
    return {"actual": actual, "predicted": predicted, "match": actual == predicted, "kappa_max": top,
            "top_in_support": top in actual and all(weight(k) <= weight(top) for k in actual)}
