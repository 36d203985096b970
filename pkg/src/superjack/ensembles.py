"""Normalization constants, Selberg-type quadrature, β-ensemble samplers and Monte Carlo estimators."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy import special

from .hyperseries import SeriesSpec, eval_series, regularized_2SF0, series_terms, series_value
from .jack import BranchingTable, GammaTable, SuperPoint, gamma_super_jack_eval, jack_at_ones
from .partitions import (
    as_alpha,
    enumerate_partitions,
    gen_pochhammer,
    integer_value,
    is_exact,
    parse_scalar,
    weight,
)

FAMILIES = ("jacobi", "laguerre", "hermite", "circular", "circular_jacobi")
FORMS = ("one_minus_tx", "x_minus_t")


# -------------------------------------------------------------- constants

def _signed_lgamma(x: float) -> tuple[float, float]:
    """(log|Γ(x)|, sign Γ(x)); raises at poles."""
    if x <= 0 and float(x).is_integer():
        raise ZeroDivisionError(f"Γ has a pole at {x}")
    return float(special.gammaln(x)), float(special.gammasgn(x))


def _gamma_product(num: Sequence[float], den: Sequence[float]) -> tuple[float, float]:
    """(log|∏Γ(num)/∏Γ(den)|, sign); a pole in ``den`` gives sign 0."""
    log, sign = 0.0, 1.0
    for x in num:
        l, s = _signed_lgamma(float(x))
        log += l
        sign *= s
    for x in den:
        x = float(x)
        if x <= 0 and x.is_integer():
            return -math.inf, 0.0
        l, s = _signed_lgamma(x)
        log -= l
        sign *= s
    return log, sign


def _selberg_args(N: int, lam1, lam2, lam) -> tuple[list, list]:
    lam1, lam2, lam = float(lam1), float(lam2), float(lam)
    num, den = [], []
    for j in range(N):
        num += [1 + lam + j * lam, 1 + lam1 + j * lam, 1 + lam2 + j * lam]
        den += [1 + lam, 2 + lam1 + lam2 + (N + j - 1) * lam]
    return num, den


def log_selberg_constant(N: int, lam1, lam2, lam) -> float:
    log, sign = _gamma_product(*_selberg_args(N, lam1, lam2, lam))
    if sign <= 0:
        raise ValueError("Selberg constant is not positive at these parameters")
    return log


def selberg_constant(N: int, lam1, lam2, lam) -> float:
    """S_N(λ₁, λ₂, λ) = ∫_{[0,1]^N} ∏x^{λ₁}(1−x)^{λ₂} ∏|x_j − x_k|^{2λ} dx."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N and (float(lam1) <= -1 or float(lam2) <= -1 or (N > 1 and float(lam) <= -1.0 / N)):
        raise ValueError("Selberg integral diverges: need λ₁, λ₂ > −1 and λ > −1/N")
    log, sign = _gamma_product(*_selberg_args(N, lam1, lam2, lam))
    return sign * math.exp(log)


def morris_constant(N: int, a, b, lam) -> float:
    """M_N(a, b, λ) = (2π)^N ∏ Γ(1+λ+jλ)Γ(1+a+b+jλ) / (Γ(1+λ)Γ(1+a+jλ)Γ(1+b+jλ))."""
    a, b, lam = float(a), float(b), float(lam)
    if a + b + 1 <= 0:
        raise ValueError("Morris integral needs Re(a+b+1) > 0")
    num, den = [], []
    for j in range(N):
        num += [1 + lam + j * lam, 1 + a + b + j * lam]
        den += [1 + lam, 1 + a + j * lam, 1 + b + j * lam]
    log, sign = _gamma_product(num, den)
    return sign * math.exp(log + N * math.log(2 * math.pi)) if sign else 0.0


def laguerre_constant(lam1, beta, N: int) -> float:
    """W_{λ₁,β,N} = ∫_{[0,∞)^N} ∏x^{λ₁}e^{−βx/2}∏|x_j − x_k|^β dx."""
    lam1, beta = float(lam1), float(beta)
    if N == 0:
        return 1.0
    num = [1 + beta / 2 + j * beta / 2 for j in range(N)] + [1 + lam1 + j * beta / 2 for j in range(N)]
    den = [1 + beta / 2] * N
    log, sign = _gamma_product(num, den)
    log += ((1 + lam1) * N + beta * N * (N - 1) / 2) * math.log(2 / beta)
    return sign * math.exp(log)


def gaussian_constant(beta, N: int) -> float:
    """G_{β,N} = ∫_{ℝ^N} ∏e^{−βx²/2}∏|x_j − x_k|^β dx."""
    beta = float(beta)
    num = [1 + beta / 2 + j * beta / 2 for j in range(N)]
    log, sign = _gamma_product(num, [1 + beta / 2] * N)
    log += (-N / 2 - beta * N * (N - 1) / 4) * math.log(beta) + (N / 2) * math.log(2 * math.pi)
    return sign * math.exp(log)


def circular_constant(beta, N: int) -> float:
    """C_{β,N} = (2π)^N Γ(1+Nβ/2)/Γ(1+β/2)^N."""
    beta = float(beta)
    log, sign = _gamma_product([1 + N * beta / 2], [1 + beta / 2] * N)
    return sign * math.exp(log + N * math.log(2 * math.pi))


def trig_bridge(N: int, lam1, lam2, lam, form: str = "general") -> tuple[complex, float]:
    """(Morris-side value, Selberg constant) of the trigonometric form of the Selberg integral.

    Uses b = −1 − λ₁ − (N−1)λ and a = λ₂ − b.  The general Morris side is
    M_N(a, b, λ)/∏_{k<N}(−2 sin π(b + kλ)), from Γ reflection.  ``form="printed"``
    uses (−1)^{N+N(N−1)λ/2}(2 sin πb)^{−N} M_N, which agrees only for integer λ.
    """
    lam1, lam2, lam = float(lam1), float(lam2), float(lam)
    b = -lam1 - (N - 1) * lam - 1
    a = lam2 - b
    morris = morris_constant(N, a, b, lam)
    if form == "printed":
        sin = 2 * math.sin(math.pi * b)
        if abs(sin) < 1e-14:
            raise ZeroDivisionError("sin πb vanishes; the trigonometric form is singular")
        value = np.exp(1j * math.pi * (N + N * (N - 1) * lam / 2)) * morris / sin ** N
    elif form == "general":
        denom = 1.0
        for k in range(N):
            denom *= -2 * math.sin(math.pi * (b + k * lam))
        if abs(denom) < 1e-14:
            raise ZeroDivisionError("a factor sin π(b + kλ) vanishes")
        value = morris / denom
    else:
        raise ValueError(f"unknown form {form!r}")
    return complex(value), selberg_constant(N, lam1, lam2, lam)


# -------------------------------------------------------------- quadrature

def gauss_jacobi_rule(order: int, lam1, lam2) -> tuple[np.ndarray, np.ndarray]:
    """Nodes on [0,1] and weights for x^{λ₁}(1−x)^{λ₂}."""
    lam1, lam2 = float(lam1), float(lam2)
    u, w = special.roots_jacobi(order, lam2, lam1)
    return (1 + u) / 2, w / 2 ** (lam1 + lam2 + 1)


def tanh_sinh_rule(order: int, span: float = 3.2) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Double-exponential nodes r, complements 1−r and weights on (0, 1)."""
    u = np.linspace(-span, span, order)
    h = u[1] - u[0]
    z = math.pi * np.sinh(u)
    r = special.expit(z)
    comp = special.expit(-z)
    w = h * math.pi * np.cosh(u) * r * comp
    return r, comp, w


def _is_even_integer(beta: float) -> bool:
    return float(beta).is_integer() and int(beta) % 2 == 0


def _vandermonde_power(x: np.ndarray, beta: float) -> np.ndarray:
    out = np.ones(x.shape[0])
    N = x.shape[1]
    for j in range(N):
        for k in range(j + 1, N):
            out = out * np.abs(x[:, j] - x[:, k]) ** beta
    return out


def selberg_density_integral(f: Callable[[np.ndarray], np.ndarray], N: int, lam1, lam2, beta,
                             order: int | None = None, method: str = "auto") -> complex | float:
    """∫_{[0,1]^N} f(x) ∏x^{λ₁}(1−x)^{λ₂} ∏|x_j − x_k|^β dx for symmetric f.

    ``f`` maps an (P, N) array of points to P values.  Even-integer β uses a
    tensor Gauss–Jacobi rule (the Vandermonde factor is a polynomial); other β
    use the ordered simplex x₁ ≤ … ≤ x_N mapped to the cube with
    double-exponential nodes, which absorbs the endpoint singularities.
    """
    if N < 1:
        raise ValueError("N must be positive")
    lam1, lam2, beta = float(lam1), float(lam2), float(beta)
    if lam1 <= -1 or lam2 <= -1 or beta < 0:
        raise ValueError("density is not integrable: need λ₁, λ₂ > −1 and β ≥ 0")
    if method == "auto":
        method = "gauss" if (_is_even_integer(beta) or N == 1) else "simplex"
    if method == "gauss":
        order = order or (48 if N <= 2 else 28)
        nodes, weights = gauss_jacobi_rule(order, lam1, lam2)
        grids = np.meshgrid(*([nodes] * N), indexing="ij")
        wgrids = np.meshgrid(*([weights] * N), indexing="ij")
        x = np.stack([g.ravel() for g in grids], axis=1)
        w = np.prod(np.stack([g.ravel() for g in wgrids], axis=1), axis=1)
        return np.sum(w * _vandermonde_power(x, beta) * f(x))
    if method != "simplex":
        raise ValueError(f"unknown method {method!r}")
    order = order or (120 if N <= 2 else 56)
    r, comp, wr = tanh_sinh_rule(order)
    grids = np.meshgrid(*([np.arange(order)] * N), indexing="ij")
    idx = np.stack([g.ravel() for g in grids], axis=1)
    R, C, W = r[idx], comp[idx], np.prod(wr[idx], axis=1)
    # x_N = r_N, x_k = x_{k+1} r_k; complements 1 − x_k tracked without cancellation
    x = np.empty_like(R)
    one_minus_x = np.empty_like(R)
    x[:, N - 1] = R[:, N - 1]
    one_minus_x[:, N - 1] = C[:, N - 1]
    for k in range(N - 2, -1, -1):
        x[:, k] = x[:, k + 1] * R[:, k]
        one_minus_x[:, k] = one_minus_x[:, k + 1] + x[:, k + 1] * C[:, k]
    jac = np.prod(x[:, 1:], axis=1) if N > 1 else np.ones(len(W))
    dens = np.prod(x ** lam1 * one_minus_x ** lam2, axis=1)
    for j in range(N):
        # 1 − r_j r_{j+1} ⋯ r_{k−1} built up recursively
        gap = np.zeros(len(W))
        prod = np.ones(len(W))
        for k in range(j + 1, N):
            gap = gap + prod * C[:, k - 1]
            prod = prod * R[:, k - 1]
            dens = dens * (x[:, k] * gap) ** beta
    return math.factorial(N) * np.sum(W * jac * dens * f(x))


# ----------------------------------------------------------- specs

@dataclass(frozen=True)
class EnsembleSpec:
    """A β-ensemble: Jacobi (λ₁, λ₂), Laguerre (λ₁), Hermite, Circular or Circular-Jacobi (b)."""

    family: str
    N: int
    beta: object
    lam1: object = 0
    lam2: object = 0
    b: object = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.N < 1:
            raise ValueError("N must be positive")
        beta = float(parse_scalar(self.beta))
        if beta <= 0:
            raise ValueError("β must be positive")
        if self.family == "jacobi" and (float(self.lam1) <= -1 or float(self.lam2) <= -1):
            raise ValueError("Jacobi ensemble needs λ₁, λ₂ > −1")
        if self.family == "laguerre" and float(self.lam1) <= -1:
            raise ValueError("Laguerre ensemble needs λ₁ > −1")
        if self.family == "circular_jacobi" and float(self.b) < 0:
            raise ValueError("the rejection sampler needs b ≥ 0")

    @property
    def fbeta(self) -> float:
        return float(self.beta)

    def as_dict(self) -> dict:
        return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in asdict(self).items()}


@dataclass(frozen=True)
class RatioQuery:
    """∏_k ∏_i (1 − t_i x_k) ∏_j (1 − s_j x_k)^{−β/2} (or the x − t form).

    For circular families the factors are (1 + t e^{iθ}) and (1 + s e^{iθ})^{−β/2}.
    """

    t: tuple = ()
    s: tuple = ()
    form: str = "one_minus_tx"

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        object.__setattr__(self, "t", tuple(self.t))
        object.__setattr__(self, "s", tuple(self.s))

    @property
    def empty(self) -> bool:
        return not self.t and not self.s

    def as_dict(self) -> dict:
        return {"t": [_jsonable(v) for v in self.t], "s": [_jsonable(v) for v in self.s], "form": self.form}


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


@dataclass
class MCEstimate:
    mean: float
    std_error: float
    n_samples: int
    ess: float
    seed: int
    imag_mean: float = 0.0
    spec: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.std_error < 0 or self.ess > self.n_samples + 1e-9:
            raise ValueError("inconsistent Monte Carlo estimate")

    def as_dict(self) -> dict:
        return {"value": self.mean, "imag": self.imag_mean, "std_error": self.std_error,
                "n_samples": self.n_samples, "ess": self.ess, "seed": self.seed, "spec": self.spec}


def _check_query(spec: EnsembleSpec, query: RatioQuery) -> None:
    def real_in(v, lo, hi):
        v = complex(v)
        return abs(v.imag) < 1e-15 and lo <= v.real <= hi

    for y in query.s:
        if spec.family in ("circular", "circular_jacobi"):
            if abs(complex(y)) >= 1:
                raise ValueError("circular denominators need |s| < 1")
        elif query.form == "one_minus_tx":
            if y == 0:
                continue
            inv = 1 / complex(y)
            support = {"jacobi": (0, 1), "laguerre": (0, math.inf), "hermite": (-math.inf, math.inf)}[spec.family]
            if real_in(inv, *support):
                raise ValueError(f"1 − s x vanishes on the spectrum for s = {y}")
        else:
            support = {"jacobi": (0, 1), "laguerre": (0, math.inf), "hermite": (-math.inf, math.inf)}[spec.family]
            if real_in(y, *support):
                raise ValueError(f"s = {y} lies in the spectrum support")


def ratio_integrand(x: np.ndarray, query: RatioQuery, beta: float, circular: bool = False) -> np.ndarray:
    """Per-sample observable for an (P, N) array of eigenvalues (angles if ``circular``)."""
    P = x.shape[0]
    out = np.ones(P, dtype=complex)
    mu = beta / 2
    z = np.exp(1j * x) if circular else x
    for ti in query.t:
        ti = complex(ti)
        if circular:
            out *= np.prod(1 + ti * z, axis=1)
        elif query.form == "one_minus_tx":
            out *= np.prod(1 - ti * z, axis=1)
        else:
            out *= np.prod(z - ti, axis=1)
    for sj in query.s:
        sj = complex(sj)
        if circular:
            fac = 1 + sj * z
        elif query.form == "one_minus_tx":
            fac = 1 - sj * z
        else:
            fac = z - sj
        out *= np.prod(fac.astype(complex) ** (-mu), axis=1)
    return out


def selberg_quadrature(spec: EnsembleSpec, query: RatioQuery, order: int | None = None) -> complex | float:
    """Normalized Jacobi-ensemble expectation of a ratio query by quadrature (N ≤ 3)."""
    if spec.family != "jacobi":
        raise ValueError("selberg_quadrature needs a Jacobi spec")
    if spec.N > 3:
        raise ValueError("quadrature is limited to N ≤ 3")
    _check_query(spec, query)
    if query.empty:
        return 1.0
    beta = spec.fbeta
    f = lambda x: ratio_integrand(x, query, beta)
    val = selberg_density_integral(f, spec.N, spec.lam1, spec.lam2, beta, order)
    val = val / selberg_constant(spec.N, spec.lam1, spec.lam2, beta / 2)
    return float(val.real) if abs(val.imag) < 1e-14 * max(1.0, abs(val)) else complex(val)


# --------------------------------------------------------------- samplers

def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator; independent streams come from the stream id."""
    return np.random.Generator(np.random.Philox(key=int(seed), counter=[0, 0, 0, int(stream)]))


def _chi(rng: np.random.Generator, dof, size) -> np.ndarray:
    dof = np.asarray(dof, dtype=float)
    out = np.zeros(np.broadcast_shapes(np.shape(dof), size) if np.ndim(dof) else size)
    positive = dof > 0
    if np.ndim(dof) == 0:
        return np.sqrt(rng.chisquare(float(dof), size)) if dof > 0 else out
    vals = np.sqrt(rng.chisquare(np.where(positive, dof, 1.0), np.broadcast_shapes(dof.shape, size)))
    return np.where(positive, vals, 0.0)


def _hermite(spec: EnsembleSpec, count: int, rng) -> np.ndarray:
    N, beta = spec.N, spec.fbeta
    H = np.zeros((count, N, N))
    diag = rng.normal(0.0, math.sqrt(2.0), (count, N))
    H[:, range(N), range(N)] = diag
    for i in range(N - 1):
        off = _chi(rng, beta * (N - 1 - i), count)
        H[:, i, i + 1] = H[:, i + 1, i] = off
    lam = np.linalg.eigvalsh(H / math.sqrt(2.0))
    return lam / math.sqrt(beta)


def _laguerre(spec: EnsembleSpec, count: int, rng) -> np.ndarray:
    N, beta = spec.N, spec.fbeta
    a = float(spec.lam1) + 1 + beta * (N - 1) / 2
    B = np.zeros((count, N, N))
    for i in range(N):
        B[:, i, i] = _chi(rng, 2 * a - beta * i, count)
        if i + 1 < N:
            B[:, i + 1, i] = _chi(rng, beta * (N - 1 - i), count)
    lam = np.linalg.eigvalsh(B @ np.transpose(B, (0, 2, 1)))
    return lam / beta


def _beta_pm1(rng, s: float, t: float, count: int) -> np.ndarray:
    """Variates on [−1, 1] with density ∝ (1−x)^{s−1}(1+x)^{t−1}."""
    return 2 * rng.beta(t, s, count) - 1


def _cmv(alphas: np.ndarray) -> np.ndarray:
    """Batched CMV matrices C = L·M from Verblunsky coefficients (last one unimodular)."""
    count, n = alphas.shape
    dtype = alphas.dtype
    L = np.zeros((count, n, n), dtype=dtype)
    M = np.zeros((count, n, n), dtype=dtype)

    def put(mat, k, start):
        a = alphas[:, k]
        if start + 1 < n:
            rho = np.sqrt(np.maximum(1 - np.abs(a) ** 2, 0.0))
            mat[:, start, start] = np.conj(a)
            mat[:, start, start + 1] = rho
            mat[:, start + 1, start] = rho
            mat[:, start + 1, start + 1] = -a
        else:
            mat[:, start, start] = np.conj(a)

    for k in range(0, n, 2):
        put(L, k, k)
    M[:, 0, 0] = 1
    for k in range(1, n, 2):
        put(M, k, k)
    return L @ M


def _jacobi(spec: EnsembleSpec, count: int, rng) -> np.ndarray:
    N, beta = spec.N, spec.fbeta
    a, b = float(spec.lam1), float(spec.lam2)
    alphas = np.empty((count, 2 * N))
    for k in range(2 * N - 1):
        if k % 2 == 0:
            s = (2 * N - k - 2) * beta / 4 + a + 1
            t = (2 * N - k - 2) * beta / 4 + b + 1
        else:
            s = (2 * N - k - 3) * beta / 4 + a + b + 2
            t = (2 * N - k - 1) * beta / 4
        alphas[:, k] = _beta_pm1(rng, s, t, count)
    alphas[:, 2 * N - 1] = -1.0
    C = _cmv(alphas)
    cos = np.linalg.eigvalsh((C + np.transpose(C, (0, 2, 1))) / 2)[:, ::2]
    return np.clip((1 - cos) / 2, 0.0, 1.0)


def _circular(N: int, beta: float, count: int, rng) -> np.ndarray:
    alphas = np.empty((count, N), dtype=complex)
    for k in range(N - 1):
        nu = beta * (N - k - 1) + 1
        radius = np.sqrt(rng.beta(1.0, (nu - 1) / 2, count))
        alphas[:, k] = radius * np.exp(2j * math.pi * rng.random(count))
    alphas[:, N - 1] = np.exp(2j * math.pi * rng.random(count))
    C = _cmv(alphas)
    return np.sort(np.angle(np.linalg.eigvals(C)), axis=1)


def _circular_jacobi(spec: EnsembleSpec, count: int, rng) -> np.ndarray:
    N, beta, b = spec.N, spec.fbeta, float(spec.b)
    accepted, have = [], 0
    while have < count:
        batch = max(2 * (count - have), 1024)
        theta = _circular(N, beta, batch, rng)
        weight_ = np.prod(np.abs(1 + np.exp(1j * theta)) ** (2 * b), axis=1) / 4 ** (N * b)
        keep = rng.random(batch) < weight_
        accepted.append(theta[keep])
        have += int(keep.sum())
    return np.concatenate(accepted)[:count]


def sample_batch(spec: EnsembleSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, N) array of eigenvalues (angles in (−π, π] for circular families)."""
    if spec.family == "hermite":
        return _hermite(spec, count, rng)
    if spec.family == "laguerre":
        return _laguerre(spec, count, rng)
    if spec.family == "jacobi":
        return _jacobi(spec, count, rng)
    if spec.family == "circular":
        return _circular(spec.N, spec.fbeta, count, rng)
    return _circular_jacobi(spec, count, rng)


def sample_ensemble(spec: EnsembleSpec, rng_seed: int) -> list:
    """One draw of the N eigenvalues (or angles)."""
    return sample_batch(spec, 1, make_rng(rng_seed))[0].tolist()


def _estimate(values: np.ndarray, seed: int, spec: dict, batches: int = 50) -> MCEstimate:
    n = len(values)
    re = values.real
    mean = float(np.mean(re))
    var = float(np.var(re, ddof=1)) if n > 1 else 0.0
    se = math.sqrt(var / n) if n > 1 else 0.0
    ess = float(n)
    if n >= 2 * batches and var > 0:
        size = n // batches
        means = re[: size * batches].reshape(batches, size).mean(axis=1)
        bvar = float(np.var(means, ddof=1)) * size
        ess = float(min(n, n * var / bvar)) if bvar > 0 else float(n)
    return MCEstimate(mean, se, n, ess, seed, float(np.mean(values.imag)), spec)


def mc_ratio_expectation(spec: EnsembleSpec, query: RatioQuery, n_samples: int, rng_seed: int,
                         batch: int = 25000) -> MCEstimate:
    """Monte Carlo mean of the ratio observable with its standard error and ESS."""
    _check_query(spec, query)
    record = {"ensemble": spec.as_dict(), "query": query.as_dict()}
    if query.empty:
        return MCEstimate(1.0, 0.0, n_samples, float(n_samples), rng_seed, 0.0, record)
    circular = spec.family in ("circular", "circular_jacobi")
    chunks = []
    done, stream = 0, 0
    while done < n_samples:
        size = min(batch, n_samples - done)
        x = sample_batch(spec, size, make_rng(rng_seed, stream))
        chunks.append(ratio_integrand(x, query, spec.fbeta, circular))
        done += size
        stream += 1
    return _estimate(np.concatenate(chunks), rng_seed, record)


# ------------------------------------------------------- series oracles

def jacobi_series_parameters(N: int, beta, lam1, lam2) -> tuple:
    """(a, b, c, α) of the ₂SF₁ giving the Jacobi-ensemble ratio expectation."""
    beta = parse_scalar(beta)
    inv = 2 / beta
    return -N, -N + 1 - inv * (1 + lam1), -2 * N + 2 - inv * (2 + lam1 + lam2), beta / 2


def jacobi_series_value(spec: EnsembleSpec, query: RatioQuery, max_degree: int = 16) -> float:
    a, b, c, alpha = jacobi_series_parameters(spec.N, spec.beta, parse_scalar(spec.lam1), parse_scalar(spec.lam2))
    val, _ = eval_series(SeriesSpec((a, b), (c,), alpha), SuperPoint(query.t, query.s), max_degree,
                         allow_outside_radius=True)
    return val


def circular_jacobi_series_value(spec: EnsembleSpec, query: RatioQuery, max_degree: int = 16) -> float:
    beta = parse_scalar(spec.beta)
    b = parse_scalar(spec.b)
    inv = 2 / beta
    series = SeriesSpec((-spec.N, inv * b), (-spec.N + 1 - inv * (1 + b),), beta / 2)
    return eval_series(series, SuperPoint(query.t, query.s), max_degree, allow_outside_radius=True)[0]


def laguerre_series_value(spec: EnsembleSpec, query: RatioQuery, max_degree: int = 24) -> float:
    """Regularized ₂SF₀^{(β/2)}(−N, −N+1−(2/β)(1+λ₁); −t; −s)."""
    beta = parse_scalar(spec.beta)
    lam1 = parse_scalar(spec.lam1)
    N = spec.N
    a, b = -N, -N + 1 - (2 / beta) * (1 + lam1)
    c0 = float(lam1) * N + float(beta) / 2 * N * (N - 1) + N
    pt = SuperPoint(tuple(-v for v in query.t), tuple(-v for v in query.s))
    return regularized_2SF0(a, b, beta / 2, c0, pt, max_degree=max_degree)


def kadell_check(kappa, alpha, lam1, lam2, N: int, order: int | None = None) -> tuple[float, float]:
    """(quadrature, formula) for ∫ P_κ D_{λ₁,λ₂,1/α} / S_N against P_κ(1^N)[λ₁+1+(N−1)/α]_κ/[λ₁+λ₂+2+2(N−1)/α]_κ."""
    alpha = as_alpha(alpha)
    kappa = tuple(kappa)
    if len(kappa) > N:
        return 0.0, 0.0
    fa = float(alpha)
    table = BranchingTable(fa, [kappa])

    def f(x):
        return table.evaluate([x[:, i] for i in range(N)]).get(kappa, np.zeros(x.shape[0]))

    beta = 2 / fa
    lhs = selberg_density_integral(f, N, lam1, lam2, beta, order) / selberg_constant(N, lam1, lam2, 1 / fa)
    l1, l2 = parse_scalar(lam1), parse_scalar(lam2)
    up = gen_pochhammer(l1 + 1 + (N - 1) / alpha, kappa, alpha)
    down = gen_pochhammer(l1 + l2 + 2 + 2 * (N - 1) / alpha, kappa, alpha)
    rhs = jack_at_ones(kappa, alpha, N) * up / down
    return float(lhs), float(rhs)


# --------------------------------------------------------- Gaussian limit

def _neville(xs: Sequence, ys: Sequence, x0=0):
    """Value at x0 of the interpolating polynomial through (xs, ys)."""
    p = list(ys)
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = ((x0 - xs[i + k]) * p[i] + (xs[i] - x0) * p[i + 1]) / (xs[i] - xs[i + k])
    return p[0]


def gaussian_series_at(L, N: int, beta, t: Sequence, s: Sequence):
    """(−L)^{p₀N}·₂SF₁^{(β/2)}(−N, (2/β)(1+p₀)+2L²; (2/β)p₀+L²; ½(1−t/L); ½(1−s/L))."""
    beta = parse_scalar(beta)
    alpha = beta / 2
    n, m = len(t), len(s)
    p0 = n - alpha * m
    inv = 2 / beta
    spec = SeriesSpec((-N, inv * (1 + p0) + 2 * L * L), (inv * p0 + L * L,), alpha)
    half = Fraction(1, 2) if is_exact(L, *t, *s) else 0.5
    pt = SuperPoint(tuple(half * (1 - x / L) for x in t), tuple(half * (1 - y / L) for y in s))
    exponent = p0 * N
    ie = integer_value(exponent)
    if ie is None:
        raise ValueError("(−L)^{p₀N} needs an integer exponent for real evaluation")
    degree = N * (n + m) if m == 0 else 24
    val = series_value(spec, pt, degree)
    return (-L) ** ie * val


def gaussian_ratio_vs_limit(spec: EnsembleSpec, query: RatioQuery, L_grid: Sequence[int] = (40, 80, 160, 320),
                            n_samples: int = 100000, rng_seed: int = 7) -> dict:
    """MC Gaussian expectation versus the Richardson-extrapolated Jacobi-series limit."""
    if spec.family != "hermite" or query.form != "x_minus_t":
        raise ValueError("needs a Hermite spec and an x_minus_t query")
    if query.empty:
        mc = MCEstimate(1.0, 0.0, n_samples, float(n_samples), rng_seed)
        return {"mc": mc.as_dict(), "series": [], "limit": 1.0, "z": 0.0}
    values = [gaussian_series_at(Fraction(L), spec.N, spec.beta, query.t, query.s) for L in L_grid]
    xs = [Fraction(1, L) for L in L_grid]
    limit = _neville(xs, values)
    mc = mc_ratio_expectation(spec, query, n_samples, rng_seed)
    lim = float(limit)
    z = abs(mc.mean - lim) / mc.std_error if mc.std_error > 0 else (0.0 if mc.mean == lim else math.inf)
    return {"mc": mc.as_dict(), "series": [float(v) for v in values], "L_grid": list(L_grid),
            "limit": lim, "z": z}


def gaussian_system_mc_residual(spec: EnsembleSpec, t: Sequence, s: Sequence, n_samples: int, rng_seed: int,
                                h: float = 1e-3) -> list:
    """(mean, std_error) of each Gaussian-system residual applied to per-sample observables.

    Finite differences act on every sample's ∏(x−t)∏(x−s)^{−β/2} with common
    random numbers, so the residual estimate has its own standard error.
    """
    from .holonomic import DeformedSystemSpec, fd_partials, system_residuals

    if spec.family != "hermite":
        raise ValueError("needs a Hermite spec")
    x = sample_batch(spec, n_samples, make_rng(rng_seed))
    beta = spec.fbeta
    alpha = parse_scalar(spec.beta) / 2
    sys = DeformedSystemSpec(alpha, -spec.N, 2, 0, len(t), len(s), family="gaussian")

    def F(pt: SuperPoint):
        vals = ratio_integrand(x, RatioQuery(pt.t, pt.s, "x_minus_t"), beta)
        return vals.real if not s else vals

    pt = SuperPoint(tuple(float(v) for v in t), tuple(complex(v) for v in s))
    res = system_residuals(sys, pt, fd_partials(F, pt, h))
    out = []
    for r in res:
        r = np.real(r)
        out.append((float(np.mean(r)), float(np.std(r, ddof=1) / math.sqrt(len(r)))))
    return out


# ---------------------------------------------------------------- hard edge

def _finite_2SF0(a, b, alpha, pt: SuperPoint, degree: int) -> float:
    """₂SF₀ summed to ``degree``; exact when every higher term vanishes at ``pt``."""
    terms = series_terms(SeriesSpec((a, b), (), alpha), pt, degree)
    return float(sum(terms.values())) if terms else 0.0


def laguerre_hardedge_quantities(N: int, beta, a, s: float, n: int | None = None, m: int | None = None) -> tuple:
    """(E_{N,β}(0;(0,s)), p_β^{(N)}(0;s;a)) from the ₂SF₀ formulas.

    The series argument is (1/s)ⁿ; (1/s)^m with a = n − (β/2)m.  Only a ∈ ℕ₀
    is supported: then SP_κ(1^{n+m}) vanishes for ℓ(κ) > a and the series
    terminates at degree N·a.
    """
    beta = parse_scalar(beta)
    a = parse_scalar(a)
    if s <= 0:
        raise ValueError("s must be positive")
    if n is None:
        n, m = integer_value(a), 0
        if n is None:
            raise ValueError("give n, m with a = n − (β/2)m")
    if a != n - beta * m / 2:
        raise ValueError("a must equal n − (β/2)m")
    if float(a) <= -1:
        raise ValueError("a must exceed −1")
    ia = integer_value(a)
    if ia is None or ia < 0:
        raise NotImplementedError("only a ∈ ℕ₀ gives a terminating (summable) ₂SF₀ here")
    fb = float(beta)
    alpha = beta / 2
    inv = 2 / beta
    u = 1.0 / s
    pt = SuperPoint((u,) * n, (u,) * m)
    degree = N * ia
    series_E = _finite_2SF0(-N, -N + 1 - inv, alpha, pt, degree)
    pref = math.exp(-N * fb * s / 2) * s ** (float(a) * N)
    E = pref * laguerre_constant(0, fb, N) / laguerre_constant(a, fb, N) * series_E
    if N == 1:
        series_p = 1.0
    else:
        series_p = _finite_2SF0(-N + 1, -N - inv, alpha, pt, (N - 1) * ia)
    p = laguerre_constant(fb, fb, N - 1) / laguerre_constant(a, fb, N) * N * pref * series_p
    return E, p


def hardedge_quadrature(N: int, beta, a, s: float, order: int = 40) -> float:
    """Direct E_{N,β}(0;(0,s)) by tensor Gauss–Laguerre after shifting x ↦ x + s (even β, integer a)."""
    fb, fa = float(beta), float(a)
    if not _is_even_integer(fb) or fa != int(fa) or fa < 0:
        raise ValueError("tensor Gauss–Laguerre is exact here only for even β and integer a ≥ 0")
    y, w = special.roots_genlaguerre(order, 0.0)
    # e^{−βy/2}: substitute y = 2u/β
    x = 2 * y / fb
    wx = w * 2 / fb
    grids = np.meshgrid(*([x] * N), indexing="ij")
    wgrids = np.meshgrid(*([wx] * N), indexing="ij")
    X = np.stack([g.ravel() for g in grids], axis=1)
    W = np.prod(np.stack([g.ravel() for g in wgrids], axis=1), axis=1)
    vals = np.prod((X + s) ** fa, axis=1) * _vandermonde_power(X, fb)
    return math.exp(-N * fb * s / 2) * float(np.sum(W * vals)) / laguerre_constant(a, fb, N)


# ----------------------------------------------------------- γ-deformation

def gamma_series_spec(alpha, gamma, lam1, lam2, N: int) -> SeriesSpec:
    """₂SF₁^{(1/α, γ)}(−N, −N+1−α(1+λ₁); −2N+2−α(2+λ₁+λ₂))."""
    alpha = as_alpha(alpha)
    return SeriesSpec((-N, -N + 1 - alpha * (1 + lam1)), (-2 * N + 2 - alpha * (2 + lam1 + lam2),), 1 / alpha,
                      variant="gamma", gamma=gamma)


def gamma_selberg_check(alpha, gamma, lam1, lam2, N: int, pt: SuperPoint, max_degree: int = 20,
                        order: int | None = None) -> dict:
    """Quadrature of ∏(1−x t)/∏(1−x s)^γ against D_{λ₁,λ₂,1/α} versus the γ-deformed ₂SF₁."""
    if N > 2:
        raise ValueError("N > 2 is refused")
    alpha = as_alpha(alpha)
    gamma = parse_scalar(gamma)
    lam1, lam2 = parse_scalar(lam1), parse_scalar(lam2)
    fg = complex(gamma) if isinstance(gamma, complex) else float(gamma)

    def f(x):
        out = np.ones(x.shape[0], dtype=complex)
        for ti in pt.t:
            out *= np.prod(1 - complex(ti) * x, axis=1)
        for sj in pt.s:
            out *= np.prod((1 - complex(sj) * x).astype(complex) ** (-fg), axis=1)
        return out

    fa = float(alpha)
    quad = selberg_density_integral(f, N, lam1, lam2, 2 / fa, order) / selberg_constant(N, lam1, lam2, 1 / fa)
    quad = complex(quad)
    spec = gamma_series_spec(alpha, gamma, lam1, lam2, N)
    series, _ = eval_series(spec, SuperPoint(tuple(float(v) for v in pt.t), tuple(float(v) for v in pt.s)),
                            max_degree, allow_outside_radius=True)
    series = complex(series)
    return {"quadrature": quad.real, "series": series.real, "discrepancy": abs(quad - series),
            "alpha": str(alpha), "gamma": str(gamma), "N": N}


def gamma_replication_check(alpha, r: int, pt: SuperPoint, max_degree: int = 6) -> dict:
    """Series-level identity SP^{(α, rα)}(t; s) = SP^{(α)}(t; s repeated r times), exactly.

    The left side substitutes p_k ↦ p_k(t) − rα p_k(s) in the power-sum
    expansion; the right side uses the branching recursion with replicated s.
    """
    alpha = as_alpha(alpha)
    kappas = enumerate_partitions(max_degree)
    s_rep = tuple(y for y in pt.s for _ in range(r))
    rep = BranchingTable(alpha, kappas).evaluate(pt.t, s_rep)
    mismatches = []
    zero = 0
    for k in kappas:
        lhs = gamma_super_jack_eval(k, alpha, r * alpha, pt, method="powersum")
        rhs = rep.get(k, zero)
        if lhs != rhs:
            mismatches.append(k)
    return {"checked": len(kappas), "mismatches": mismatches, "exact": not mismatches}
