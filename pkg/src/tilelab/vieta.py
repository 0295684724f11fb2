"""Root finding by factorization-shape enumeration and coefficient matching.

A degree-d target is matched against candidate shapes

    c * (x - r_1)^m_1 * ... * (x - r_k)^m_k * q(x)

where q is monic and, in real mode, must have no real roots.  Shapes are
enumerated in a fixed order, each one induces a system of coefficient
equations in the unknowns (r, c, q), and each system goes through an exact
linear presolve followed by damped Gauss-Newton from a deterministic battery
of starts.  A case can end three ways: solved, inconsistent (exact
contradiction, or every start ran to a stationary point or a constraint
violation), or no-convergence (anything less conclusive).  Real-mode
answers are only accepted when the independent Sturm oracle agrees, so a
wrong shape can cost time but never produce a wrong root set.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .poly import COMPLEX, RATIONAL, Poly, RootSet, complex_poly, eval_horner
from .sturm import oracle_real_roots

REAL_MODE = "real"
COMPLEX_MODE = "complex"

SOLVED = "solved"
INCONSISTENT = "inconsistent"
NO_CONVERGENCE = "no_convergence"

# golden-ratio conjugate: start parameters fill the unit interval evenly
_PHI = 0.6180339887498949


class DegreeMismatch(ValueError):
    """Pattern total does not equal the target degree."""


class NoPatternSolved(Exception):
    """Every enumerated case failed; carries the per-case outcomes."""

    def __init__(self, outcomes: tuple["CaseOutcome", ...]):
        self.outcomes = outcomes
        detail = "; ".join(f"{o.pattern.label()}: {o.status}" for o in outcomes)
        super().__init__(f"no factorization shape solved ({detail})")


@dataclass(frozen=True)
class MultiplicityPattern:
    """Root multiplicities (nonincreasing) plus the degree of the monic cofactor."""

    mults: tuple[int, ...]
    cofactor_degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if any(m < 1 for m in self.mults):
            raise ValueError("multiplicities must be at least 1")
        if list(self.mults) != sorted(self.mults, reverse=True):
            raise ValueError("multiplicities must be nonincreasing")
        if self.cofactor_degree < 0:
            raise ValueError("cofactor degree must be nonnegative")
        if not self.mults and self.cofactor_degree == 0:
            raise ValueError("pattern needs at least one root or a cofactor")

    @property
    def k(self) -> int:
        return len(self.mults)

    @property
    def total(self) -> int:
        return sum(self.mults) + self.cofactor_degree

    def label(self) -> str:
        parts = ",".join(str(m) for m in self.mults)
        if self.cofactor_degree:
            tail = f"q{self.cofactor_degree}"
            return f"{parts}+{tail}" if parts else tail
        return parts


def _partitions_desc(s: int, cap: int | None = None):
    """Integer partitions of s as nonincreasing tuples, descending lex."""
    if s == 0:
        yield ()
        return
    if cap is None or cap > s:
        cap = s
    for first in range(cap, 0, -1):
        for rest in _partitions_desc(s - first, first):
            yield (first,) + rest


def enumerate_patterns(d: int, mode: str = REAL_MODE, order: str | None = None) -> list[MultiplicityPattern]:
    """All candidate shapes for degree d, in a deterministic order.

    Complex mode factors completely, so the multiplicities always sum to d.
    Real mode also admits a root-free monic cofactor of degree d - s for
    every s in {d, d-2, d-3, ..., 0}; degree 1 is excluded because a monic
    real linear factor is itself a real root.  Groups are ordered by
    descending s.  Within a group, "merged" order puts fewer distinct roots
    first (descending lex) and "generic" order puts the all-simple shape
    first (ascending lex).  The default is merged order in real mode and
    generic order in complex mode.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if mode not in (REAL_MODE, COMPLEX_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    if order is None:
        order = "merged" if mode == REAL_MODE else "generic"
    if order not in ("merged", "generic"):
        raise ValueError(f"unknown order {order!r}")
    sums = [d] if mode == COMPLEX_MODE else [d] + list(range(d - 2, -1, -1))
    out: list[MultiplicityPattern] = []
    for s in sums:
        group = list(_partitions_desc(s))
        if order == "generic":
            group.reverse()
        out.extend(MultiplicityPattern(p, d - s) for p in group)
    return out


@dataclass(frozen=True)
class SolveConfig:
    tol: float = 1e-10            # max-norm bound on the coefficient residual
    max_iters: int = 100          # Gauss-Newton iterations per start
    starts: int = 32              # deterministic multi-start battery size
    cluster_radius: float = 1e-6  # roots closer than this are a collision


@dataclass(frozen=True)
class VietaSystem:
    """Coefficient equations for one shape against one target.

    Unknown vector layout: [r_1 .. r_k, c, b_0 .. b_{e-1}] with the monic
    cofactor q(x) = x^e + b_{e-1} x^{e-1} + ... + b_0.
    """

    pattern: MultiplicityPattern
    target: Poly
    mode: str

    @property
    def degree(self) -> int:
        return self.pattern.total

    @property
    def k(self) -> int:
        return self.pattern.k

    @property
    def cofactor_degree(self) -> int:
        return self.pattern.cofactor_degree

    @property
    def n_unknowns(self) -> int:
        return self.k + 1 + self.cofactor_degree

    @property
    def dtype(self):
        return np.float64 if self.mode == REAL_MODE else np.complex128

    def target_vector(self) -> np.ndarray:
        return _target_vector(self.target, self.mode)

    def _split(self, u: np.ndarray):
        k = self.k
        return u[:k], u[k], u[k + 1:]

    def _product(self, u: np.ndarray) -> np.ndarray:
        """Monic part: prod (x - r_i)^{m_i} * q(x), coefficients low to high."""
        roots, _, b = self._split(u)
        acc = np.ones(1, dtype=self.dtype)
        for r, m in zip(roots, self.pattern.mults):
            lin = np.array([-r, 1.0], dtype=self.dtype)
            for _ in range(m):
                acc = np.convolve(acc, lin)
        if self.cofactor_degree:
            q = np.concatenate([b, np.ones(1, dtype=self.dtype)])
            acc = np.convolve(acc, q)
        return acc

    def coeffs(self, u: np.ndarray) -> np.ndarray:
        """Coefficient vector of the expanded shape at unknowns u."""
        u = np.asarray(u, dtype=self.dtype)
        _, c, _ = self._split(u)
        return c * self._product(u)

    def residual(self, u: np.ndarray) -> np.ndarray:
        return self.coeffs(u) - self.target_vector()

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        """Analytic Jacobian of the coefficient map, one column per unknown."""
        u = np.asarray(u, dtype=self.dtype)
        roots, c, b = self._split(u)
        d1 = self.degree + 1
        cols = np.zeros((d1, self.n_unknowns), dtype=self.dtype)
        factors = []
        for r, m in zip(roots, self.pattern.mults):
            lin = np.array([-r, 1.0], dtype=self.dtype)
            f = np.ones(1, dtype=self.dtype)
            for _ in range(m):
                f = np.convolve(f, lin)
            factors.append((lin, f, m))
        q = None
        if self.cofactor_degree:
            q = np.concatenate([b, np.ones(1, dtype=self.dtype)])
        full = np.ones(1, dtype=self.dtype)
        for _, f, _ in factors:
            full = np.convolve(full, f)
        if q is not None:
            full = np.convolve(full, q)
        cols[: full.size, self.k] = full  # d/dc
        for i, (lin, _, m) in enumerate(factors):
            # d/dr_i of (x - r_i)^m is -m (x - r_i)^{m-1}
            part = np.ones(1, dtype=self.dtype)
            for j, (lin_j, f_j, _) in enumerate(factors):
                if j == i:
                    continue
                part = np.convolve(part, f_j)
            stub = np.ones(1, dtype=self.dtype)
            for _ in range(m - 1):
                stub = np.convolve(stub, lin)
            col = -m * c * np.convolve(part, stub)
            if q is not None:
                col = np.convolve(col, q)
            cols[: col.size, i] = col
        if q is not None:
            base = np.ones(1, dtype=self.dtype)
            for _, f, _ in factors:
                base = np.convolve(base, f)
            base = c * base
            for t in range(self.cofactor_degree):
                # d/db_t multiplies the root product by x^t
                cols[t : t + base.size, self.k + 1 + t] = base
        return cols


def _target_vector(target: Poly, mode: str) -> np.ndarray:
    if mode == REAL_MODE:
        out = np.empty(len(target.coeffs), dtype=np.float64)
        scale = max((abs(complex(v)) for v in target.coeffs), default=0.0)
        for i, v in enumerate(target.coeffs):
            z = complex(v)
            if abs(z.imag) > 1e-12 * max(1.0, scale):
                raise ValueError("real mode requires real coefficients")
            out[i] = z.real
        return out
    return np.array([complex(v) for v in target.coeffs], dtype=np.complex128)


def build_system(pattern: MultiplicityPattern, target: Poly, mode: str = REAL_MODE) -> VietaSystem:
    d = target.degree
    if d is None or d < 1:
        raise ValueError("target must have degree at least 1")
    if mode not in (REAL_MODE, COMPLEX_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    if pattern.total != d:
        raise DegreeMismatch(f"pattern totals {pattern.total}, target degree is {d}")
    if mode == REAL_MODE and pattern.cofactor_degree == 1:
        raise ValueError("a monic real linear cofactor is itself a real root")
    _target_vector(target, mode)  # validates coefficient domain
    return VietaSystem(pattern, target, mode)


@dataclass(frozen=True)
class CaseOutcome:
    """Result of attacking one shape: status plus the solve trace."""

    pattern: MultiplicityPattern
    status: str
    roots: tuple = ()                 # (value, multiplicity) pairs when solved
    leading: complex | float | None = None
    cofactor: tuple = ()              # monic cofactor coefficients, low to high
    residual: float | None = None     # max-norm coefficient residual
    reason: str | None = None
    iterations: int = 0               # Gauss-Newton iterations spent in total
    starts_used: int = 0
    collision: tuple | None = None    # (merged pattern, merged values) hint

    def to_json(self) -> dict:
        out = {
            "case": self.pattern.label(),
            "status": self.status,
            "iterations": self.iterations,
            "starts_used": self.starts_used,
        }
        if self.status == SOLVED:
            out["roots"] = [
                {"value": _json_scalar(v), "mult": m} for v, m in self.roots
            ]
            out["residual"] = self.residual
            if self.cofactor:
                out["cofactor"] = [_json_scalar(v) for v in self.cofactor]
        if self.reason:
            out["reason"] = self.reason
        return out


def _json_scalar(v):
    z = complex(v)
    return z.real if z.imag == 0 else {"re": z.real, "im": z.imag}


def _presolve(system: VietaSystem, tvec: np.ndarray) -> CaseOutcome | None:
    """Exact stage: cases fully determined by linear coefficient equations.

    The leading equation always forces c = a_d.  With a single root and no
    cofactor the next equation forces the root, and every remaining
    coefficient becomes a pure check.  With no roots at all the cofactor is
    the whole monic part.  Anything else is left to the numeric stage.
    """
    pat = system.pattern
    d = system.degree
    exact = system.target.kind == RATIONAL
    a = system.target.coeffs if exact else tvec
    scale = float(np.max(np.abs(tvec))) if tvec.size else 1.0

    if pat.k == 0:
        # q = p / a_d; solved iff q has no real roots (real mode shapes only)
        c = a[d]
        b = tuple(v / c for v in a[:d])
        if system.mode == REAL_MODE:
            probe = complex_poly([float(v) for v in b] + [1.0])
            found = oracle_real_roots(probe)
            if found.count:
                return CaseOutcome(
                    pat, INCONSISTENT,
                    reason=f"cofactor must be root-free but has {found.count} real root(s)",
                )
        return CaseOutcome(
            pat, SOLVED, roots=(),
            leading=_native(c), cofactor=tuple(_native(v) for v in b),
            residual=0.0,
        )

    if pat.k == 1 and pat.cofactor_degree == 0:
        # c (x - r)^m: c = a_d, then a_{d-1} = -c m r pins r
        m = pat.mults[0]
        c = a[d]
        r = -a[d - 1] / (c * m)
        pred = [c * math.comb(m, j) * (-r) ** (m - j) for j in range(m + 1)] if exact else None
        if not exact:
            rr = complex(r)
            pred = [complex(c) * math.comb(m, j) * (-rr) ** (m - j) for j in range(m + 1)]
        for i in range(d + 1):
            want, got = pred[i], a[i]
            bad = (want != got) if exact else abs(complex(want) - complex(got)) > 1e-9 * max(1.0, scale)
            if bad:
                return CaseOutcome(
                    pat, INCONSISTENT,
                    reason=(
                        f"with c={_fmt(c)} the x^{d-1} equation forces r={_fmt(r)}, "
                        f"but then the x^{i} coefficient must be {_fmt(want)}, not {_fmt(got)}"
                    ),
                )
        rv = float(r) if system.mode == REAL_MODE else complex(r)
        resid = max(abs(complex(w) - complex(g)) for w, g in zip(pred, a))
        return CaseOutcome(
            pat, SOLVED, roots=((rv, m),), leading=_native(c), residual=float(resid),
        )
    return None


def _native(v):
    if isinstance(v, Fraction):
        return float(v)
    z = complex(v)
    return z.real if z.imag == 0 else z


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    z = complex(v) + 0.0  # drop negative zero
    return f"{z.real:.6g}" if z.imag == 0 else f"{z.real:.6g}{z.imag:+.6g}j"


def _start_battery(system: VietaSystem, cfg: SolveConfig) -> list[np.ndarray]:
    """Deterministic initial guesses spread over the root bound disk."""
    tvec = system.target_vector()
    lead = abs(complex(tvec[-1]))
    radius = 1.0 + max(abs(complex(v)) for v in tvec[:-1]) / lead if tvec.size > 1 else 1.0
    k, e = system.k, system.cofactor_degree
    c0 = tvec[-1]
    outs = []
    for t in range(cfg.starts):
        u = np.zeros(system.n_unknowns, dtype=system.dtype)
        for i in range(k):
            frac = math.modf((2 * i + 1) / (2 * max(k, 1)) + t * _PHI)[0]
            if system.mode == REAL_MODE:
                u[i] = radius * math.cos(math.pi * frac)
            else:
                rho = 0.3 + 0.7 * ((t % 5) + 1) / 5.0
                u[i] = radius * rho * cmath.exp(2j * math.pi * (frac + t * _PHI * _PHI))
        u[k] = c0
        # cofactor starts at x^e (all b zero)
        outs.append(u)
    return outs


def _gauss_newton(system: VietaSystem, u0: np.ndarray, tvec: np.ndarray, cfg: SolveConfig):
    """Damped Gauss-Newton; returns (u, max-residual, status, iterations).

    status is "converged", "stalled" (no descent direction made progress,
    i.e. a stationary point of the squared residual), or "maxiter".
    """
    u = np.array(u0, dtype=system.dtype)
    res = system.coeffs(u) - tvec
    f = float(np.real(np.vdot(res, res)))
    if float(np.max(np.abs(res))) < cfg.tol:
        return u, float(np.max(np.abs(res))), "converged", 0
    status = "maxiter"
    iters = 0
    for it in range(cfg.max_iters):
        iters = it + 1
        jac = system.jacobian(u)
        step, *_ = np.linalg.lstsq(jac, -res, rcond=None)
        if not np.all(np.isfinite(step)):
            status = "stalled"
            break
        lam = 1.0
        moved = False
        for _ in range(30):
            cand = u + lam * step
            r2 = system.coeffs(cand) - tvec
            f2 = float(np.real(np.vdot(r2, r2)))
            if f2 < f:
                u, res, f = cand, r2, f2
                moved = True
                break
            lam *= 0.5
        if not moved:
            status = "stalled"
            break
        if float(np.max(np.abs(res))) < cfg.tol:
            status = "converged"
            break
        if float(np.linalg.norm(lam * step)) <= 1e-14 * (1.0 + float(np.linalg.norm(u))):
            status = "stalled"
            break
    return u, float(np.max(np.abs(res))), status, iters


def _check_constraints(system: VietaSystem, u: np.ndarray, cfg: SolveConfig):
    """Returns (ok, reason, collision) for a converged candidate.

    Two roots collide when they sit inside the clustering radius, or when
    welding both onto their midpoint would move the coefficients by less
    than the residual the fit already tolerates: such a pair is numerically
    indistinguishable from one root of the summed multiplicity.
    """
    roots, c, b = system._split(u)
    scale = float(np.max(np.abs(system.target_vector())))
    if abs(complex(c)) <= 1e-12 * max(1.0, scale):
        return False, "leading scalar collapsed to zero", None
    mults = system.pattern.mults
    collided_gap = 0.0
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            ri, rj = complex(roots[i]), complex(roots[j])
            gap = abs(ri - rj)
            if gap <= cfg.cluster_radius * max(1.0, abs(ri), abs(rj)):
                collided_gap = max(collided_gap, gap)
                continue
            mid = (ri + rj) / 2
            weld_cost = abs(complex(c)) * (gap / 2) ** (mults[i] + mults[j])
            for l in range(len(roots)):
                if l != i and l != j:
                    weld_cost *= abs(mid - complex(roots[l])) ** mults[l]
            if system.cofactor_degree:
                q = list(b) + [1.0]
                acc = q[-1]
                for v in reversed(q[:-1]):
                    acc = acc * mid + v
                weld_cost *= abs(acc)
            if weld_cost <= 10.0 * cfg.tol:
                collided_gap = max(collided_gap, gap)
    if collided_gap > 0.0:
        merged = _merge_collision(system.pattern, roots, collided_gap)
        return False, "roots collided inside the clustering radius", merged
    if system.cofactor_degree and system.mode == REAL_MODE:
        probe = complex_poly([float(np.real(v)) for v in b] + [1.0])
        found = oracle_real_roots(probe)
        if found.count:
            return False, f"cofactor acquired {found.count} real root(s)", None
    return True, None, None


def _merge_collision(pattern: MultiplicityPattern, roots: np.ndarray, gap: float):
    """Cluster roots within the observed collision gap and propose the
    merged shape plus warm values."""
    items = sorted(zip([complex(r) for r in roots], pattern.mults), key=lambda t: (t[0].real, t[0].imag))
    radius = gap * (1.0 + 1e-9)
    clusters: list[list[tuple[complex, int]]] = []
    for val, m in items:
        if clusters:
            prev = clusters[-1][-1][0]
            if abs(val - prev) <= radius:
                clusters[-1].append((val, m))
                continue
        clusters.append([(val, m)])
    if len(clusters) == len(items):
        return None
    merged = []
    for group in clusters:
        tot = sum(m for _, m in group)
        mean = sum(v * m for v, m in group) / tot
        merged.append((mean, tot))
    merged.sort(key=lambda t: (-t[1], t[0].real, t[0].imag))
    new_pat = MultiplicityPattern(tuple(m for _, m in merged), pattern.cofactor_degree)
    return new_pat, tuple(v for v, _ in merged)


def solve_case(system: VietaSystem, config: SolveConfig | None = None,
               warm_starts: tuple = ()) -> CaseOutcome:
    """Attack one shape: exact presolve, then the multi-start numeric stage.

    Solved needs the residual under tol plus all side constraints (distinct
    roots, nonzero leading scalar, root-free cofactor).  Inconsistent means
    an exact contradiction, or every start certifiably ran out of descent
    (stationary point) or violated a constraint.  Anything weaker, such as
    a start still moving at the iteration cap, is NoConvergence.
    """
    cfg = config or SolveConfig()
    tvec = system.target_vector()
    pre = _presolve(system, tvec)
    if pre is not None:
        return pre

    total_iters = 0
    starts_used = 0
    best_violation: tuple[float, str, tuple | None] | None = None
    saw_maxiter = False
    best_resid = math.inf
    battery = [np.asarray(w, dtype=system.dtype) for w in warm_starts]
    battery += _start_battery(system, cfg)
    for u0 in battery:
        starts_used += 1
        u, resid, status, iters = _gauss_newton(system, u0, tvec, cfg)
        total_iters += iters
        best_resid = min(best_resid, resid)
        if status == "converged":
            ok, why, merged = _check_constraints(system, u, cfg)
            if ok:
                roots, c, b = system._split(u)
                k = system.k
                pairs = sorted(
                    ((_native(v), m) for v, m in zip(roots, system.pattern.mults)),
                    key=lambda t: (complex(t[0]).real, complex(t[0]).imag),
                )
                return CaseOutcome(
                    system.pattern, SOLVED,
                    roots=tuple(pairs), leading=_native(c),
                    cofactor=tuple(_native(v) for v in b),
                    residual=resid, iterations=total_iters, starts_used=starts_used,
                )
            if best_violation is None or resid < best_violation[0]:
                best_violation = (resid, why, merged)
        elif status == "maxiter":
            saw_maxiter = True
    if saw_maxiter:
        return CaseOutcome(
            system.pattern, NO_CONVERGENCE,
            reason=f"iteration cap reached with best residual {best_resid:.3e}",
            iterations=total_iters, starts_used=starts_used,
            collision=best_violation[2] if best_violation else None,
        )
    if best_violation is not None:
        return CaseOutcome(
            system.pattern, INCONSISTENT,
            reason=f"every start stalled or violated a constraint ({best_violation[1]})",
            iterations=total_iters, starts_used=starts_used,
            collision=best_violation[2],
        )
    return CaseOutcome(
        system.pattern, INCONSISTENT,
        reason=(
            f"all {starts_used} starts reached stationary points with "
            f"residual at best {best_resid:.3e}, above tol {cfg.tol:.1e}"
        ),
        iterations=total_iters, starts_used=starts_used,
    )


@dataclass(frozen=True)
class FindReport:
    """find_roots plus the full per-case history behind the answer."""

    roots: RootSet
    case: MultiplicityPattern | None
    outcomes: tuple[CaseOutcome, ...]

    def to_json(self) -> dict:
        doc = self.roots.to_json()
        doc["case"] = self.case.label() if self.case else None
        doc["outcomes"] = [o.to_json() for o in self.outcomes]
        return doc


def _outcome_rootset(target: Poly, outcome: CaseOutcome) -> RootSet:
    rows = []
    for v, m in outcome.roots:
        rows.append((v, m, abs(complex(eval_horner(target, v)))))
    rows.sort(key=lambda t: (complex(t[0]).real, complex(t[0]).imag))
    return RootSet(tuple(rows), len(rows))


def _oracle_agrees(found: RootSet, oracle: RootSet) -> bool:
    if found.count != oracle.count:
        return False
    for (v1, m1, _), (v2, m2, _) in zip(found.roots, oracle.roots):
        a, b = complex(v1).real, float(v2)
        if abs(a - b) > 1e-6 * max(1.0, abs(a), abs(b)):
            return False
        if m1 != m2:
            return False
    return True


def find_roots_report(p: Poly, mode: str = REAL_MODE, config: SolveConfig | None = None,
                      order: str | None = None) -> FindReport:
    """Walk the shapes in order and return the first accepted solution.

    Real mode cross-validates every candidate answer against the Sturm
    oracle; disagreement demotes the case to no-convergence and the walk
    continues.  A collision hint re-dispatches the merged shape with the
    collided values as a warm start before moving on.  If nothing is
    accepted the walk ends in NoPatternSolved carrying all outcomes.
    """
    d = p.degree
    if d is None or d < 1:
        raise ValueError("target must have degree at least 1")
    cfg = config or SolveConfig()
    oracle = oracle_real_roots(p) if mode == REAL_MODE else None
    outcomes: list[CaseOutcome] = []
    for pattern in enumerate_patterns(d, mode, order):
        system = build_system(pattern, p, mode)
        outcome = solve_case(system, cfg)
        if outcome.status != SOLVED and outcome.collision is not None:
            outcomes.append(outcome)
            merged_pat, merged_vals = outcome.collision
            merged_sys = build_system(merged_pat, p, mode)
            warm = np.zeros(merged_sys.n_unknowns, dtype=merged_sys.dtype)
            for i, v in enumerate(merged_vals):
                warm[i] = v if mode == COMPLEX_MODE else complex(v).real
            warm[merged_sys.k] = merged_sys.target_vector()[-1]
            outcome = solve_case(merged_sys, cfg, warm_starts=(warm,))
        outcomes.append(outcome)
        if outcome.status != SOLVED:
            continue
        found = _outcome_rootset(p, outcome)
        if oracle is not None and not _oracle_agrees(found, oracle):
            outcomes[-1] = replace(
                outcome, status=NO_CONVERGENCE,
                reason="independent root oracle disagrees with this case",
            )
            continue
        return FindReport(found, outcome.pattern, tuple(outcomes))
    raise NoPatternSolved(tuple(outcomes))


def find_roots(p: Poly, mode: str = REAL_MODE, config: SolveConfig | None = None,
               order: str | None = None) -> RootSet:
    """Distinct roots with multiplicities via the first shape that solves."""
    return find_roots_report(p, mode, config, order).roots
