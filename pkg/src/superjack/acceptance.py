"""The acceptance suite: eleven criteria, each a list of (lhs, rhs, tolerance) checks."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import ensembles as ens
from .holonomic import (
    DeformedSystemSpec,
    SeriesFunction,
    cancellation_residual,
    pointwise_system_residual,
    super_jacobi_eigencheck,
    termination_check,
)
from .hyperseries import (
    dual_spec,
    SeriesSpec,
    coefficient_recurrence_check,
    convergence_radius,
    eval_series,
    kummer,
    pfaff_euler,
    series_value,
    sp_bound,
)
from .jack import BranchingTable, SuperPoint
from .partitions import FatHook, enumerate_partitions, weight


@dataclass
class Check:
    id: str
    lhs: object
    rhs: object
    abs_err: float
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        conv = lambda v: v if isinstance(v, (int, float, str, bool)) or v is None else str(v)
        return {"id": self.id, "lhs": conv(self.lhs), "rhs": conv(self.rhs), "abs_err": self.abs_err,
                "tol": self.tol, "pass": self.passed}


def close(id_: str, lhs, rhs, tol: float, relative: bool = False) -> Check:
    err = abs(complex(lhs) - complex(rhs))
    scale = max(abs(complex(rhs)), 1e-300) if relative else 1.0
    return Check(id_, lhs, rhs, err, tol, bool(err / scale < tol))


def exact(id_: str, lhs, rhs) -> Check:
    ok = lhs == rhs
    return Check(id_, lhs, rhs, 0.0 if ok else math.inf, 0.0, ok)


def within_sigma(id_: str, est: ens.MCEstimate | tuple, target: float, k: float = 3.0) -> Check:
    mean, se = (est.mean, est.std_error) if isinstance(est, ens.MCEstimate) else est
    err = abs(mean - target)
    return Check(id_, mean, target, err, k * se, bool(err <= k * se))


@dataclass
class CriterionResult:
    number: int
    name: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.checks) and all(c.passed for c in self.checks)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bad = sum(not c.passed for c in self.checks)
        worst = max((c.abs_err for c in self.checks), default=float("nan"))
        extra = f" error={self.error}" if self.error else ""
        return (f"[{status}] criterion {self.number:2d} {self.name}: {len(self.checks) - bad}/{len(self.checks)} checks,"
                f" max abs_err={worst:.3g}, {self.seconds:.1f}s{extra}")

    def as_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "pass": self.passed,
                "error": self.error, "checks": [c.as_dict() for c in self.checks]}


# ------------------------------------------------------------- criteria

def c1_selberg_constant(full: bool) -> list:
    out = []
    grid = (0, Fraction(1, 2), 1)
    for N in (1, 2):
        for l1 in grid:
            for l2 in grid:
                for lam in grid:
                    quad = ens.selberg_density_integral(lambda x: np.ones(x.shape[0]), N, l1, l2, 2 * lam)
                    val = ens.selberg_constant(N, l1, l2, lam)
                    out.append(close(f"selberg-constant/N={N},l1={l1},l2={l2},lam={lam}", val, float(quad), 1e-8,
                                     relative=True))
    return out


def _headline(N: int, pt: SuperPoint, beta=2, lam1=Fraction(1, 2), lam2=Fraction(1, 2), degree: int = 20) -> Check:
    q = ens.RatioQuery(pt.t, pt.s)
    f = lambda x: ens.ratio_integrand(x, q, float(beta))
    quad = complex(ens.selberg_density_integral(f, N, lam1, lam2, beta)).real
    a, b, c, alpha = ens.jacobi_series_parameters(N, beta, lam1, lam2)
    series, _ = eval_series(SeriesSpec((a, b), (c,), alpha), pt, degree, allow_outside_radius=True)
    rhs = ens.selberg_constant(N, lam1, lam2, Fraction(beta) / 2) * float(series)
    return close(f"headline-identity/N={N},beta={beta}", quad, rhs, 1e-6)


def c2_headline(full: bool) -> list:
    pt = SuperPoint((Fraction(1, 5),), (Fraction(3, 10),))
    out = [_headline(N, pt) for N in (1, 2, 3)]
    if full:
        out += [_headline(N, pt, beta=b) for N in (1, 2) for b in (1, 4)]
    return out


def c3_kadell(full: bool) -> list:
    out = []
    for alpha in (Fraction(1, 2), Fraction(1), Fraction(2)):
        for k in range(4):
            for kappa in enumerate_partitions(k):
                if weight(kappa) != k:
                    continue
                lhs, rhs = ens.kadell_check(kappa, alpha, Fraction(1, 2), Fraction(1, 3), 2)
                out.append(close(f"kadell/alpha={alpha},kappa={kappa}", lhs, rhs, 1e-8))
    return out


def c4_recurrence(full: bool) -> list:
    out = []
    a, b, c = Fraction(1, 3), Fraction(-2, 7), Fraction(17, 11)
    for alpha in (Fraction(1, 2), Fraction(2), Fraction(5, 3)):
        for n, m in ((1, 1), (2, 1), (1, 2)):
            failures = []
            ok = coefficient_recurrence_check(a, b, c, alpha, n, m, 6, failures=failures)
            out.append(Check(f"recurrence/alpha={alpha},n={n},m={m}", len(failures), 0, 0.0 if ok else math.inf,
                             0.0, ok))
    return out


def _random_points(rng: random.Random, n: int, m: int, count: int, box: float = 0.2, gap: float = 0.02) -> list:
    pts = []
    while len(pts) < count:
        vals = [rng.uniform(-box, box) for _ in range(n + m)]
        if all(abs(x - y) >= gap for i, x in enumerate(vals) for y in vals[i + 1:]):
            pts.append(SuperPoint(tuple(vals[:n]), tuple(vals[n:])))
    return pts


def c5_holonomic(full: bool) -> list:
    out = []
    rng = random.Random(5)
    cases = [(3, Fraction(1, 2), Fraction(1, 2), Fraction(2), 1, 1), (2, Fraction(1, 3), 1, Fraction(1, 2), 2, 1)]
    for N, l1, l2, alpha, n, m in cases:
        a, b, c, _ = ens.jacobi_series_parameters(N, 2 * alpha, l1, l2)
        sys = DeformedSystemSpec(alpha, a, b, c, n, m)
        F = SeriesFunction(a, b, c, alpha, n, m, max_degree=16)
        for idx, pt in enumerate(_random_points(rng, n, m, 10)):
            for eq, r in enumerate(pointwise_system_residual(sys, F, pt)):
                out.append(close(f"holonomic-residual/n={n},m={m},pt={idx},eq={eq}", abs(r), 0.0, 1e-5))
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                vals = [rng.uniform(-0.15, 0.15) for _ in range(n + m)]
                vals[i - 1] = vals[n + j - 1]
                pt = SuperPoint(tuple(vals[:n]), tuple(vals[n:]))
                r = cancellation_residual(F, alpha, pt, i, j)
                out.append(close(f"cancellation/n={n},m={m},i={i},j={j}", abs(r), 0.0, 1e-6))
    return out


def c6_transformations(full: bool) -> list:
    out = []
    rng = random.Random(6)
    alphas = (Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2))

    def draw():
        alpha = rng.choice(alphas)
        n, m = rng.choice(((1, 1), (2, 1), (1, 2), (2, 0)))
        r = convergence_radius(alpha, n, m) * 0.3
        pt = SuperPoint(tuple(rng.uniform(-r, r) for _ in range(n)), tuple(rng.uniform(-r, r) for _ in range(m)))
        par = lambda: Fraction(rng.randint(-20, 20), rng.randint(3, 9)) + Fraction(1, 97)
        return alpha, pt, par

    for k in range(50):
        alpha, pt, par = draw()
        spec = SeriesSpec((par(), par()), (abs(par()) + Fraction(1, 3),), alpha)
        lhs, _ = eval_series(spec, pt, 18)
        dspec, dpt = dual_spec(spec, pt)
        rhs, _ = eval_series(dspec, dpt, 18, allow_outside_radius=True)
        out.append(close(f"duality/draw={k}", float(lhs), float(rhs), 1e-9))
    for which in (1, 2, 3):
        for k in range(50):
            alpha, pt, par = draw()
            spec = SeriesSpec((par(), par()), (abs(par()) + Fraction(1, 3),), alpha)
            lhs, rhs = pfaff_euler(spec, which, pt, 18, allow_outside_radius=True)
            out.append(close(f"pfaff-euler-{which}/draw={k}", float(lhs), float(rhs), 1e-9))
    for k in range(50):
        alpha, pt, par = draw()
        spec = SeriesSpec((par(),), (abs(par()) + Fraction(1, 3),), alpha)
        lhs, rhs = kummer(spec, pt, 18)
        out.append(close(f"kummer/draw={k}", float(lhs), float(rhs), 1e-9))
    return out


def c7_termination(full: bool) -> list:
    out = []
    rng = random.Random(7)
    for k in range(10):
        n, m = rng.choice(((1, 1), (2, 1), (1, 2)))
        N, M = rng.randint(m, 3), rng.randint(n, 3)
        alpha = rng.choice((Fraction(1, 2), Fraction(2), Fraction(3), Fraction(2, 3)))
        c = Fraction(rng.randint(1, 30), 7) + Fraction(1, 101)
        term = termination_check(N, M, alpha, c, n, m)
        out.append(Check(f"termination/draw={k}", sorted(term["actual"]), sorted(term["predicted"]),
                         0.0 if term["match"] else math.inf, 0.0, term["match"] and term["top_in_support"]))
        eig = super_jacobi_eigencheck(N, M, alpha, c, n, m)
        out.append(exact(f"super-jacobi-eigenvalue/draw={k}", eig["eps_J"], eig["ab_p0"]))
        out.append(exact(f"super-jacobi-residual/draw={k}", eig["eigen_residual"], 0))
    return out


def c8_ensembles(full: bool) -> list:
    F_ = Fraction
    out = []
    spec = ens.EnsembleSpec("jacobi", 3, 2, F_(1, 2), F_(1, 2))
    q = ens.RatioQuery((F_(1, 5),), (F_(3, 10),))
    out.append(within_sigma("ensemble-jacobi/N=3,beta=2", ens.mc_ratio_expectation(spec, q, 100000, 11),
                            float(ens.jacobi_series_value(spec, q))))
    betas = (2, 1, 4) if full else (2, 1)
    for beta in betas:
        spec = ens.EnsembleSpec("laguerre", 3, beta, F_(1, 2))
        q = ens.RatioQuery((F_(-1, 10),), (F_(-1, 20),))
        out.append(within_sigma(f"ensemble-laguerre/N=3,beta={beta}", ens.mc_ratio_expectation(spec, q, 100000, 12),
                                ens.laguerre_series_value(spec, q)))
    spec = ens.EnsembleSpec("circular_jacobi", 3, 4, b=F_(1, 2))
    q = ens.RatioQuery((F_(3, 10),), (F_(1, 5),))
    out.append(within_sigma("ensemble-circular-jacobi/N=3,beta=4", ens.mc_ratio_expectation(spec, q, 100000, 13),
                            float(ens.circular_jacobi_series_value(spec, q))))
    return out


def c9_gaussian(full: bool) -> list:
    spec = ens.EnsembleSpec("hermite", 2, 2)
    q = ens.RatioQuery((Fraction(3, 10),), (), "x_minus_t")
    rep = ens.gaussian_ratio_vs_limit(spec, q, n_samples=100000, rng_seed=17)
    mc = rep["mc"]
    out = [within_sigma("gaussian-limit/N=2,beta=2", (mc["value"], mc["std_error"]), rep["limit"])]
    for eq, (mean, se) in enumerate(ens.gaussian_system_mc_residual(spec, (0.3,), (), 100000, 19)):
        out.append(within_sigma(f"gaussian-system-residual/eq={eq}", (mean, se), 0.0))
    return out


def c10_bound(full: bool) -> list:
    out = []
    rng = random.Random(10)
    for n, m in ((1, 1), (2, 2)):
        for alpha in (Fraction(1, 2), Fraction(2)):
            kappas = [k for k in enumerate_partitions(6) if FatHook(n, m).contains(k)]
            table = BranchingTable(float(alpha), kappas)
            worst, worst_proof = 0.0, 0.0
            for _ in range(100):
                T = rng.uniform(0.05, 1.0)
                t = [rng.uniform(-T, T) for _ in range(n)]
                s = [rng.uniform(-T, T) for _ in range(m)]
                norm = max(abs(v) for v in t + s)
                vals = table.evaluate(t, s)
                for k in kappas:
                    v = abs(vals.get(k, 0.0))
                    worst = max(worst, v / sp_bound(k, alpha, n, m, norm))
                    if k:
                        worst_proof = max(worst_proof, v / sp_bound(k, alpha, n, m, norm, proof_only=True))
            out.append(Check(f"sp-bound/n={n},m={m},alpha={alpha}", worst, 1.0, 0.0, 1.0, worst <= 1.0))
            out.append(Check(f"sp-bound-proof-constant/n={n},m={m},alpha={alpha}", worst_proof, 1.0, 0.0, 1.0,
                             worst_proof <= 1.0))
    for k in range(20):
        n, m = rng.choice(((1, 1), (2, 1), (1, 2)))
        alpha = rng.choice((Fraction(1, 2), Fraction(1), Fraction(2)))
        r = convergence_radius(alpha, n, m) * rng.uniform(0.3, 0.8)
        pt = SuperPoint(tuple(rng.choice((-r, r)) for _ in range(n)), tuple(rng.uniform(-r, r) for _ in range(m)))
        spec = SeriesSpec((Fraction(rng.randint(1, 9), 4), Fraction(rng.randint(1, 9), 5)),
                          (Fraction(rng.randint(5, 15), 3) + Fraction(1, 97),), alpha)
        _, rep = eval_series(spec, pt, 16)
        shells = [x for x in rep.shell_norms if x > 0]
        ratios = [shells[i + 1] / shells[i] for i in range(len(shells) // 2, len(shells) - 1)]
        rate = max(ratios) if ratios else 0.0
        out.append(Check(f"shell-decay/case={k}", rate, 1.0, 0.0, 1.0, rate < 1.0))
    return out


def c11_gamma(full: bool) -> list:
    out = []
    pt = SuperPoint((Fraction(1, 5),), (Fraction(3, 10),))
    alphas = (Fraction(1), Fraction(2), Fraction(1, 2))
    for alpha in alphas:
        for gamma in (1, 2, Fraction(1, 2), 2 * alpha):
            r = ens.gamma_selberg_check(alpha, gamma, Fraction(1, 2), Fraction(1, 3), 1, pt, max_degree=24)
            out.append(close(f"gamma-selberg/alpha={alpha},gamma={gamma}", r["quadrature"], r["series"], 1e-7))
    for alpha in alphas:
        for r_ in (1, 2):
            rep = ens.gamma_replication_check(alpha, r_, SuperPoint((Fraction(1, 5), Fraction(-1, 7)), (Fraction(3, 10),)),
                                              max_degree=5)
            out.append(Check(f"gamma-replication/alpha={alpha},r={r_}", len(rep["mismatches"]), 0, 0.0 if rep["exact"]
                             else math.inf, 0.0, rep["exact"]))
    return out


CRITERIA: list[tuple[int, str, Callable[[bool], list]]] = [
    (1, "selberg-constant", c1_selberg_constant),
    (2, "headline-identity", c2_headline),
    (3, "kadell-integral", c3_kadell),
    (4, "exact-recurrence", c4_recurrence),
    (5, "holonomic-residual", c5_holonomic),
    (6, "transformations", c6_transformations),
    (7, "termination-super-jacobi", c7_termination),
    (8, "ensemble-oracles", c8_ensembles),
    (9, "gaussian-limit", c9_gaussian),
    (10, "series-bound", c10_bound),
    (11, "gamma-deformation", c11_gamma),
]


def run_criterion(number: int, full: bool = False) -> CriterionResult:
    num, name, fn = next(c for c in CRITERIA if c[0] == number)
    res = CriterionResult(num, name)
    start = time.perf_counter()
    try:
        res.checks = fn(full)
    except Exception as exc:  # reported as a failed criterion, not a crash
        res.error = f"{type(exc).__name__}: {exc}"
    res.seconds = time.perf_counter() - start
    return res


def run_suite(suite: str = "fast", name_filter: str | None = None, echo: Callable[[str], None] | None = print) -> list:
    if suite not in ("fast", "full"):
        raise ValueError("suite must be 'fast' or 'full'")
    results = []
    for num, name, _ in CRITERIA:
        if name_filter and name_filter not in name:
            continue
        res = run_criterion(num, suite == "full")
        if echo:
            echo(res.line())
        results.append(res)
    return results
