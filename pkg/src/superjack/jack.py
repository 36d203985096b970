"""Jack and super Jack polynomials.

Two independent evaluation routes are provided:

* the *expansion route*: P_κ in the monomial basis from a triangular solve of the
  Laplace–Beltrami type eigen-equation, converted to power sums, then evaluated
  (or pushed through p_r ↦ p_r(t) − α p_r(s) for super Jack polynomials);
* the *branching route*: the horizontal/vertical strip recursion, one variable at
  a time, which is fast enough for series of degree 20 and more.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import (
    FatHook,
    Partition,
    as_alpha,
    as_partition,
    boxes,
    conjugate,
    contains,
    dominance_leq,
    enumerate_partitions,
    gen_pochhammer,
    hook_product,
    horizontal_strips,
    is_exact,
    one_like,
    partitions_of,
    remove_box,
    vertical_strips,
    weight,
    zero_like,
)

BASES = ("monomial", "powersum", "jack")


class EigenvalueCollision(ArithmeticError):
    """Raised when ε_κ = ε_μ for some μ < κ at the supplied α."""


@dataclass(frozen=True)
class SymPoly:
    """Sparse expansion {partition: coefficient} in a named basis."""

    basis: str
    terms: Mapping[Partition, object]
    nvars_hint: int | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v != 0})

    def __getitem__(self, kappa):
        return self.terms.get(as_partition(kappa), 0)

    def truncate(self, n: int) -> "SymPoly":
        """Drop monomials m_κ with ℓ(κ) > n (they vanish in n variables)."""
        if self.basis != "monomial":
            raise ValueError("only monomial expansions can be truncated by variable count")
        return SymPoly(self.basis, {k: v for k, v in self.terms.items() if len(k) <= n}, n)

    def format(self) -> str:
        from .partitions import format_scalar

        letter = {"monomial": "m", "powersum": "p", "jack": "P"}[self.basis]
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda k: (-weight(k), tuple(-x for x in k)))
        pieces = []
        for k in order:
            c = self.terms[k]
            label = f"{letter}[{','.join(map(str, k))}]"
            pieces.append(label if c == 1 else f"{format_scalar(c)}·{label}")
        return " + ".join(pieces)


@dataclass(frozen=True)
class SuperPoint:
    """Graded point (t; s): t has n entries, s has m entries."""

    t: tuple = ()
    s: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(self.t))
        object.__setattr__(self, "s", tuple(self.s))

    @property
    def n(self) -> int:
        return len(self.t)

    @property
    def m(self) -> int:
        return len(self.s)

    def norm(self) -> float:
        vals = [abs(complex(v)) for v in self.t + self.s]
        return max(vals, default=0.0)

    def is_exact(self) -> bool:
        return is_exact(*self.t, *self.s)


# --------------------------------------------------- monomial-basis operator

def _operator_row(mu_padded: tuple, alpha, inverse_index: Mapping[tuple, Partition]):
    """Coefficients M[μ][ν] of m_μ in (D² − (2/α)(N−1)E¹) m_ν, as {ν: value}.

    ``mu_padded`` is μ padded with zeros to N entries.
    """
    N = len(mu_padded)
    row: dict = defaultdict(int)
    total = sum(mu_padded)
    diag = sum(v * (v - 1) for v in mu_padded) - 2 * (N - 1) * total / alpha
    mu = as_partition(mu_padded)
    row[mu] += diag
    for i in range(N):
        for j in range(i + 1, N):
            u, v = mu_padded[i], mu_padded[j]
            tot = u + v
            if tot == 0:
                continue
            rest = mu_padded[:i] + mu_padded[i + 1:j] + mu_padded[j + 1:]
            for q in range(0, tot // 2 + 1):
                p = tot - q
                if p == q:
                    coeff = p if u == p else 0
                else:
                    coeff = (p if q <= u <= p else 0) - (q if q + 1 <= u <= p - 1 else 0)
                if coeff == 0:
                    continue
                nu = tuple(sorted(rest + (p, q), reverse=True))
                row[inverse_index[nu]] += 2 * coeff / alpha
    return row


def jack_eigenvalue(kappa: Partition, alpha):
    """ε_κ = Σ κ_i(κ_i − 1 − (2/α)(i−1)), eigenvalue of D² − (2/α)(N−1)E¹."""
    return sum(k * (k - 1) - 2 * k * i / alpha for i, k in enumerate(kappa))


@lru_cache(maxsize=4096, typed=True)
def _operator_matrix(k: int, alpha):
    parts = partitions_of(k)
    N = max(k, 1)
    padded = {p: p + (0,) * (N - len(p)) for p in parts}
    inverse_index = {v: key for key, v in padded.items()}
    return {mu: dict(_operator_row(padded[mu], alpha, inverse_index)) for mu in parts}


def operator_matrix(k: int, alpha) -> dict:
    """Monomial-basis matrix of the eigen-operator on degree-k symmetric polynomials, N = k variables."""
    return _operator_matrix(k, as_alpha(alpha))


@lru_cache(maxsize=4096, typed=True)
def _jack_monomial(kappa: Partition, alpha) -> dict:
    k = weight(kappa)
    if k == 0:
        return {(): one_like(alpha)}
    M = _operator_matrix(k, alpha)
    eps = jack_eigenvalue(kappa, alpha)
    below = [mu for mu in partitions_of(k) if mu != kappa and dominance_leq(mu, kappa)]
    coeffs = {kappa: one_like(alpha)}
    # reverse-lex order is a linear extension of dominance, larger first
    for mu in below:
        gap = eps - M[mu][mu]
        if gap == 0:
            raise EigenvalueCollision(f"eigenvalue collision between {kappa} and {mu} at alpha={alpha}")
        acc = 0
        for nu, c in coeffs.items():
            entry = M[mu].get(nu)
            if entry:
                acc += entry * c
        if acc != 0:
            coeffs[mu] = acc / gap
    return coeffs


def jack_in_monomial(kappa, alpha) -> SymPoly:
    """P_κ^(α) = m_κ + Σ_{μ<κ} c_{κμ} m_μ."""
    kappa = as_partition(kappa)
    return SymPoly("monomial", _jack_monomial(kappa, as_alpha(alpha)))


# ------------------------------------------------ power sums and monomials

@lru_cache(maxsize=65536)
def _count_assignments(parts: tuple, target: tuple) -> int:
    """Number of maps parts → positions whose block sums equal ``target``."""
    if not parts:
        return 1 if all(t == 0 for t in target) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    for idx, t in enumerate(target):
        if t >= first:
            new = list(target)
            new[idx] -= first
            total += _count_assignments(rest, tuple(sorted(new, reverse=True)))
    return total


@lru_cache(maxsize=256)
def powersum_to_monomial(k: int) -> dict:
    """{λ: {μ: L}} with p_λ = Σ_μ L[λ][μ] m_μ over partitions of k."""
    parts = partitions_of(k)
    table = {}
    for lam in parts:
        row = {}
        for mu in parts:
            if dominance_leq(lam, mu):
                c = _count_assignments(lam, mu)
                if c:
                    row[mu] = c
        table[lam] = row
    return table


@lru_cache(maxsize=256)
def monomial_to_powersum(k: int) -> dict:
    """{μ: {λ: coefficient}} with m_μ = Σ_λ coefficient·p_λ (exact)."""
    L = powersum_to_monomial(k)
    result: dict = {}
    for mu in partitions_of(k):  # reverse-lex: dominance-larger partitions first
        expansion = {mu: Fraction(1)}
        for nu, c in L[mu].items():
            if nu == mu:
                continue
            for lam, d in result[nu].items():
                expansion[lam] = expansion.get(lam, 0) - c * d
        diag = L[mu][mu]
        result[mu] = {lam: v / diag for lam, v in expansion.items() if v != 0}
    return result


@lru_cache(maxsize=4096, typed=True)
def _jack_powersum(kappa: Partition, alpha) -> dict:
    out: dict = defaultdict(int)
    conv = monomial_to_powersum(weight(kappa))
    for mu, c in _jack_monomial(kappa, alpha).items():
        for lam, d in conv[mu].items():
            out[lam] += c * d
    return {k: v for k, v in out.items() if v != 0}


def jack_in_powersum(kappa, alpha) -> SymPoly:
    """P_κ^(α) = Σ χ_σ p_σ."""
    kappa = as_partition(kappa)
    return SymPoly("powersum", _jack_powersum(kappa, as_alpha(alpha)))


def monomial_to_jack(poly: Mapping[Partition, object], alpha) -> dict:
    """Re-express a homogeneous or mixed monomial expansion in the Jack basis."""
    alpha = as_alpha(alpha)
    remaining = dict(poly)
    out = {}
    by_weight = defaultdict(list)
    for mu in remaining:
        by_weight[weight(mu)].append(mu)
    for k in sorted(by_weight):
        for mu in partitions_of(k):
            c = remaining.get(mu, 0)
            if c == 0:
                continue
            out[mu] = c
            for nu, d in _jack_monomial(mu, alpha).items():
                remaining[nu] = remaining.get(nu, 0) - c * d
    return {k: v for k, v in out.items() if v != 0}


def powersum_to_monomial_poly(poly: Mapping[Partition, object]) -> dict:
    out: dict = defaultdict(int)
    for lam, c in poly.items():
        for mu, d in powersum_to_monomial(weight(lam))[lam].items():
            out[mu] += c * d
    return {k: v for k, v in out.items() if v != 0}


# ------------------------------------------------------ expansion evaluation

def _powersums(values: Sequence, top: int) -> list:
    sums = [None] + [0] * top
    for v in values:
        power = 1
        for r in range(1, top + 1):
            power = power * v
            sums[r] = sums[r] + power
    return sums


def eval_powersum_expansion(poly: Mapping[Partition, object], psums: Sequence) -> object:
    total = 0
    for lam, c in poly.items():
        term = c
        for r in lam:
            term = term * psums[r]
        total = total + term
    return total


def eval_jack(kappa, alpha, x: Sequence) -> object:
    """P_κ^(α)(x₁,…,x_n) via the power-sum expansion; zero when ℓ(κ) > n."""
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    if len(kappa) > len(x):
        return zero_like(alpha, *x)
    if not kappa:
        return one_like(alpha, *x)
    psums = _powersums(list(x), weight(kappa))
    return eval_powersum_expansion(_jack_powersum(kappa, alpha), psums)


def super_powersums(pt: SuperPoint, coupling, top: int) -> list:
    """p_r(t) − coupling·p_r(s) for r = 0..top (index 0 unused)."""
    pt_ = _powersums(list(pt.t), top)
    ps_ = _powersums(list(pt.s), top)
    return [None] + [pt_[r] - coupling * ps_[r] for r in range(1, top + 1)]


def super_jack_eval(kappa, alpha, pt: SuperPoint) -> object:
    """SP_κ^(α)(t; s) by substituting p_r ↦ p_r(t) − α p_r(s) in the power-sum expansion."""
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    if not kappa:
        return one_like(alpha, *pt.t, *pt.s)
    q = super_powersums(pt, alpha, weight(kappa))
    return eval_powersum_expansion(_jack_powersum(kappa, alpha), q)


def gamma_super_jack_eval(kappa, alpha, gamma, pt: SuperPoint, method: str = "powersum") -> object:
    """SP_κ^(α,γ)(t; s): substitute p_r ↦ p_r(t) − γ p_r(s).

    ``method="powersum"`` uses the expansion directly.  ``method="replicate"``
    uses that the value is a polynomial of degree ≤ |κ| in γ, exact at
    γ = rα where it equals SP_κ^(α) with every s_j repeated r times; the
    branching route gives those values and Lagrange interpolation gives γ.
    """
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    if method == "powersum":
        if not kappa:
            return one_like(alpha, gamma, *pt.t, *pt.s)
        q = super_powersums(pt, gamma, weight(kappa))
        return eval_powersum_expansion(_jack_powersum(kappa, alpha), q)
    if method == "replicate":
        return GammaTable(alpha, [kappa]).evaluate(pt, gamma)[kappa]
    raise ValueError(f"unknown method {method!r}")


# ----------------------------------------------------------- special values

def jack_at_ones(kappa, alpha, n: int) -> object:
    """P_κ^(α)(1ⁿ) = α^{|κ|}[n/α]_κ / h_{κ′}^{(1/α)}."""
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = alpha ** weight(kappa) * gen_pochhammer(n / alpha if not is_exact(alpha) else Fraction(n) / alpha, kappa, alpha)
    return num / hook_product(conjugate(kappa), 1 / alpha)


def super_jack_at_ones(kappa, alpha, n: int, m: int) -> object:
    """SP_κ^(α)(1^{n+m}) = ∏ (n − αm + α(j−1) − (i−1)) / (α a + l + 1)."""
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    kc = conjugate(kappa)
    out = one_like(alpha)
    for i, j in boxes(kappa):
        a = kappa[i - 1] - j
        l = kc[j - 1] - i
        out = out * (n - alpha * m + alpha * (j - 1) - (i - 1)) / (alpha * a + l + 1)
    return out


def upper_hook_product(kappa: Partition, alpha) -> object:
    """∏ (α a + l + 1) over the boxes of κ (the denominator of the evaluation formulas)."""
    kc = conjugate(kappa)
    out = one_like(alpha)
    for i, j in boxes(kappa):
        out = out * (alpha * (kappa[i - 1] - j) + (kc[j - 1] - i) + 1)
    return out


def ones_ratio(kappa: Partition, sigma: Partition, alpha, n: int, m: int) -> object:
    """SP_κ(1^{n+m}) / SP_σ(1^{n+m}) for σ ⊆ κ, written so no zero denominator appears.

    The numerator factors of boxes shared by κ and σ cancel exactly, leaving the
    product over boxes of κ/σ times the ratio of the (never vanishing) hook
    denominators ∏(αa+l+1).
    """
    out = upper_hook_product(sigma, alpha) / upper_hook_product(kappa, alpha)
    p0 = n - alpha * m
    sig = set(boxes(sigma))
    for i, j in boxes(kappa):
        if (i, j) not in sig:
            out = out * (p0 + alpha * (j - 1) - (i - 1))
    return out


# ----------------------------------------------------------- branching route

def _b(kappa: Partition, kc: Partition, i: int, j: int, alpha):
    """Macdonald's b_κ(s) at the Jack limit; 1 outside the diagram."""
    if i > len(kappa) or j > kappa[i - 1]:
        return 1
    a = kappa[i - 1] - j
    l = kc[j - 1] - i
    return (alpha * a + l + 1) / (alpha * a + l + alpha)


def psi_coefficient(lam: Partition, mu: Partition, alpha):
    """ψ_{λ/μ}: coefficient of the single-variable skew P_{λ/μ} (horizontal strip)."""
    lc, mc = conjugate(lam), conjugate(mu)
    rows = {i for i in range(1, len(lam) + 1) if lam[i - 1] > (mu[i - 1] if i <= len(mu) else 0)}
    cols = {j for j in range(1, (lam[0] if lam else 0) + 1) if lc[j - 1] > (mc[j - 1] if j <= len(mc) else 0)}
    out = one_like(alpha)
    for i in rows:
        for j in range(1, (mu[i - 1] if i <= len(mu) else 0) + 1):
            if j not in cols:
                out = out * _b(mu, mc, i, j, alpha) / _b(lam, lc, i, j, alpha)
    return out


def phi_coefficient(lam: Partition, mu: Partition, alpha):
    """φ_{λ/μ}: coefficient of the single-variable skew Q_{λ/μ} (horizontal strip)."""
    lc, mc = conjugate(lam), conjugate(mu)
    cols = {j for j in range(1, (lam[0] if lam else 0) + 1) if lc[j - 1] > (mc[j - 1] if j <= len(mc) else 0)}
    out = one_like(alpha)
    for j in cols:
        for i in range(1, lc[j - 1] + 1):
            out = out * _b(lam, lc, i, j, alpha) / _b(mu, mc, i, j, alpha)
    return out


def down_closure(targets: Iterable[Partition]) -> list[Partition]:
    """All partitions contained in some target, ordered by (weight, reverse-lex)."""
    targets = [as_partition(k) for k in targets]
    if not targets:
        return [()]
    seen = set(targets)
    stack = list(seen)
    while stack:
        lam = stack.pop()
        for i in range(1, len(lam) + 1):
            mu = remove_box(lam, i)
            if mu is not None and mu not in seen:
                seen.add(mu)
                stack.append(mu)
    seen.add(())
    return sorted(seen, key=lambda k: (weight(k), tuple(-x for x in k)))


@lru_cache(maxsize=64, typed=True)
def _strip_tables(closure: tuple, alpha):
    members = set(closure)
    horiz, vert = {}, {}
    inv = 1 / alpha
    for lam in closure:
        h = []
        for mu in horizontal_strips(lam):
            if mu != lam and mu in members:
                h.append((mu, psi_coefficient(lam, mu, alpha), weight(lam) - weight(mu)))
        v = []
        lc = conjugate(lam)
        for mu in vertical_strips(lam):
            if mu != lam and mu in members:
                size = weight(lam) - weight(mu)
                coeff = phi_coefficient(lc, conjugate(mu), inv)
                v.append((mu, -coeff if size % 2 else coeff, size))
        horiz[lam], vert[lam] = h, v
    return horiz, vert


class BranchingTable:
    """Evaluates every SP_κ^(α) with κ in the down-closure of ``targets`` at once.

    Point coordinates may be Fractions, floats, complex numbers or numpy arrays
    (to evaluate at many points simultaneously).
    """

    def __init__(self, alpha, targets: Iterable[Partition]):
        self.alpha = as_alpha(alpha)
        self.closure = tuple(down_closure(targets))
        self.horizontal, self.vertical = _strip_tables(self.closure, self.alpha)
        self._float_tables = None

    def _tables(self, exact: bool):
        if exact or not is_exact(self.alpha):
            return self.horizontal, self.vertical
        if self._float_tables is None:
            conv = lambda tab: {k: [(mu, float(c), sz) for mu, c, sz in v] for k, v in tab.items()}
            self._float_tables = conv(self.horizontal), conv(self.vertical)
        return self._float_tables

    def _step(self, values: dict, z, table: dict) -> dict:
        new = dict(values)  # strip of size zero keeps μ = λ with coefficient 1
        powers = {}
        for lam in self.closure:
            acc = None
            for mu, coeff, size in table[lam]:
                prev = values.get(mu)
                if prev is None:
                    continue
                zp = powers.get(size)
                if zp is None:
                    zp = powers[size] = z ** size
                term = prev * coeff * zp
                acc = term if acc is None else acc + term
            if acc is not None:
                new[lam] = acc if lam not in values else values[lam] + acc
        return new

    def evaluate(self, t: Sequence = (), s: Sequence = ()) -> dict:
        """{κ: SP_κ(t; s)} over the closure (missing keys are zero)."""
        coords = list(t) + list(s)
        exact = is_exact(*coords)
        one = one_like(self.alpha) if exact else 1.0
        horizontal, vertical = self._tables(exact)
        values = {(): one}
        for x in t:
            values = self._step(values, x, horizontal)
        for y in s:
            values = self._step(values, y, vertical)
        return values

    def evaluate_point(self, pt: SuperPoint) -> dict:
        return self.evaluate(pt.t, pt.s)


def super_jack_branching(kappa, alpha, pt: SuperPoint):
    """SP_κ^(α)(t; s) by the branching route."""
    kappa = as_partition(kappa)
    values = BranchingTable(alpha, [kappa]).evaluate_point(pt)
    return values.get(kappa, zero_like(alpha, *pt.t, *pt.s))


def jack_branching(kappa, alpha, x: Sequence):
    return super_jack_branching(kappa, alpha, SuperPoint(tuple(x), ()))


class GammaTable:
    """γ-deformed super Jack values via replication at γ = rα and interpolation in γ."""

    def __init__(self, alpha, targets: Iterable[Partition]):
        self.alpha = as_alpha(alpha)
        self.table = BranchingTable(self.alpha, targets)
        self.degree = max((weight(k) for k in self.table.closure), default=0)

    def evaluate(self, pt: SuperPoint, gamma) -> dict:
        nodes = list(range(self.degree + 1))
        samples = []
        for r in nodes:
            s_rep = [y for y in pt.s for _ in range(r)]
            samples.append(self.table.evaluate(pt.t, s_rep))
        exact = is_exact(gamma, self.alpha)
        x = gamma / self.alpha
        if exact:
            x = Fraction(gamma) / self.alpha
        weights = []
        for r in nodes:
            w = one_like(gamma, self.alpha)
            for q in nodes:
                if q != r:
                    w = w * (x - q) / (r - q)
            weights.append(w)
        out = {}
        for lam in self.table.closure:
            acc = 0
            for w, vals in zip(weights, samples):
                v = vals.get(lam)
                if v is not None:
                    acc = acc + w * v
            out[lam] = acc
        return out


# ----------------------------------------------------------- derivatives

def super_jack_gradient(kappa, alpha, pt: SuperPoint, coupling=None) -> tuple[list, list]:
    """Exact partial derivatives (∂_{t_i}, ∂_{s_j}) of SP_κ from the power-sum expansion."""
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    coupling = alpha if coupling is None else coupling
    top = max(weight(kappa), 1)
    q = super_powersums(pt, coupling, top)
    poly = _jack_powersum(kappa, alpha)

    def d_q(r, z, sign):
        return sign * r * z ** (r - 1)

    def grad_for(z, sign):
        total = 0
        for lam, c in poly.items():
            for idx, r in enumerate(lam):
                term = c * d_q(r, z, sign)
                for jdx, r2 in enumerate(lam):
                    if jdx != idx:
                        term = term * q[r2]
                total = total + term
        return total

    gt = [grad_for(z, 1) for z in pt.t]
    gs = [grad_for(z, -coupling) for z in pt.s]
    return gt, gs


def check_cancellation(kappa, alpha, pt: SuperPoint, i: int, j: int, h: float = 1e-4, analytic: bool = False):
    """(∂/∂t_i + (1/α)∂/∂s_j) SP_κ at a point with t_i = s_j (1-based indices).

    Central differences by default; ``analytic=True`` differentiates the
    power-sum expansion exactly instead.
    """
    kappa = as_partition(kappa)
    alpha = as_alpha(alpha)
    if pt.t[i - 1] != pt.s[j - 1]:
        raise ValueError("cancellation is only defined on t_i = s_j")
    if analytic:
        gt, gs = super_jack_gradient(kappa, alpha, pt)
        return gt[i - 1] + gs[j - 1] / alpha
    if h <= 0:
        raise ValueError("step must be positive")

    def shifted(which, idx, delta):
        t, s = list(map(float, pt.t)), list(map(float, pt.s))
        (t if which == "t" else s)[idx] += delta
        return super_jack_eval(kappa, float(alpha), SuperPoint(t, s))

    dt = (shifted("t", i - 1, h) - shifted("t", i - 1, -h)) / (2 * h)
    ds = (shifted("s", j - 1, h) - shifted("s", j - 1, -h)) / (2 * h)
    return dt + ds / float(alpha)


# ----------------------------------------------------- binomial coefficients

def _theta_image(poly: Mapping[Partition, object], u) -> dict:
    """Image of a power-sum expansion under p_r ↦ Σ_j C(r,j) p_j with p_0 = u."""
    out: dict = defaultdict(int)
    for lam, c in poly.items():
        current = {(): c}
        for r in lam:
            nxt: dict = defaultdict(int)
            for key, val in current.items():
                for j in range(r + 1):
                    factor = math.comb(r, j) * (u if j == 0 else 1)
                    newkey = key if j == 0 else tuple(sorted(key + (j,), reverse=True))
                    nxt[newkey] += val * factor
            current = nxt
        for key, val in current.items():
            out[key] += val
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=1024, typed=True)
def _binomials(kappa: Partition, alpha) -> dict:
    u = max(weight(kappa), 1)
    shifted = _theta_image(_jack_powersum(kappa, alpha), u)
    in_jack = monomial_to_jack(powersum_to_monomial_poly(shifted), alpha)
    top = jack_at_ones(kappa, alpha, u)
    return {sigma: c * jack_at_ones(sigma, alpha, u) / top for sigma, c in in_jack.items()}


def binomial_coefficients(kappa, alpha) -> dict:
    """Generalized binomial coefficients (κ choose σ) for σ ⊆ κ.

    Defined by P_κ(x+1)/P_κ(1ⁿ) = Σ_σ (κ choose σ) P_σ(x)/P_σ(1ⁿ); computed
    exactly with n = |κ| through the power-sum shift p_r ↦ Σ_j C(r,j) p_j.
    """
    kappa = as_partition(kappa)
    return dict(_binomials(kappa, as_alpha(alpha)))


# --------------------------------------------------------- Cauchy kernel

def cauchy_coefficient(kappa: Partition, alpha):
    """b_κ^(α) = α^{−|κ|} h_{κ′}^{(1/α)} / h_κ^{(α)}."""
    return hook_product(conjugate(kappa), 1 / alpha) / (alpha ** weight(kappa) * hook_product(kappa, alpha))


def cauchy_kernel_check(alpha, x: Sequence, pt: SuperPoint, max_deg: int) -> float:
    """|∏(1−x_i s_j)/∏(1−x_i t_k)^{1/α} − Σ_{|κ|≤d} b_κ P_κ(x) SP_κ(t;s)|."""
    alpha = as_alpha(alpha)
    x = list(x)
    for xi in x:
        for z in list(pt.t) + list(pt.s):
            if abs(complex(xi) * complex(z)) >= 1:
                raise ValueError("Cauchy kernel requires |x_i t_k| < 1 and |x_i s_j| < 1")
    lhs = 1.0
    a = float(alpha)
    for xi in x:
        for sj in pt.s:
            lhs *= 1 - float(xi) * float(sj)
        for tk in pt.t:
            lhs *= (1 - float(xi) * float(tk)) ** (-1 / a)
    hook = FatHook(pt.n, pt.m)
    kappas = [k for k in enumerate_partitions(max_deg, hook) if len(k) <= len(x)]
    px = BranchingTable(a, kappas).evaluate([float(v) for v in x])
    sp = BranchingTable(a, kappas).evaluate([float(v) for v in pt.t], [float(v) for v in pt.s])
    rhs = 0.0
    for k in kappas:
        if k in px and k in sp:
            rhs += float(cauchy_coefficient(k, alpha)) * px[k] * sp[k]
    return abs(lhs - rhs)
