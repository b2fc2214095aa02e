"""Identity registry and exhaustive grid sweeps.

Every identity, recurrence and divisibility fact the library exposes is
registered here as a point-indexed check over a subset of the parameters
(n, l, t, m). sweep() evaluates a selection of identities over a bounded
grid, exhaustively on the intersection of each identity's domain with the
grid, optionally in parallel, and always merges results into the same
deterministic order: two invocations with the same arguments serialize to
byte-identical reports regardless of the worker count.

A check never aborts a sweep. Failures and integrity errors are recorded
as results; points outside an identity's domain are skipped with a
machine-readable reason (which only happens through run_check, since the
sweep enumerates domains exactly).

Parameter columns are fixed to (n, l, t, m). Identities over the level
engine reuse the t column for their window offset j; their descriptions
say so.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import dsums, sums, supercat
from .exactnum import IntegrityError, binomial, central_binomial, exact_div

__all__ = [
    "CheckResult",
    "GridBounds",
    "IdentitySpec",
    "Report",
    "registry_ids",
    "get_identity",
    "register",
    "run_check",
    "sweep",
    "to_jsonl",
    "to_csv",
    "to_human",
]

DEFAULT_GRID_NOTE = "n<=10, l<=6, t<=n, m<=5"


@dataclass(frozen=True)
class CheckResult:
    """One evaluated (identity, point) pair.

    lhs and rhs are exact decimal strings ("8624", "-8", "10/3"); status is
    "pass", "fail" or "skipped". For remainder-relation identities lhs is
    the remainder and rhs is "0". reason is empty unless the point was
    skipped or the check raised.
    """

    identity: str
    n: int | None
    l: int | None
    t: int | None
    m: int | None
    lhs: str
    rhs: str
    status: str
    reason: str = ""


@dataclass(frozen=True)
class GridBounds:
    """Inclusive sweep bounds. t_max=None means t is limited only by n."""

    n_max: int = 10
    l_max: int = 6
    t_max: int | None = None
    m_max: int = 5

    def __post_init__(self) -> None:
        for name in ("n_max", "l_max", "m_max"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.t_max is not None and self.t_max < 0:
            raise ValueError("t_max must be non-negative")

    def describe(self) -> str:
        t = "n" if self.t_max is None else str(self.t_max)
        return f"n<={self.n_max}, l<={self.l_max}, t<={t}, m<={self.m_max}"


# Point = (n, l, t, m), None where the identity has no such parameter.
Point = tuple


@dataclass(frozen=True)
class IdentitySpec:
    """A registered check: its parameters, domain and evaluation.

    check(n, l, t, m) returns the two exact values whose relation is
    asserted: equal values for relation "equal", a (remainder, 0) pair for
    "remainder-zero" (divisibility) and "remainder-nonzero" (asserted
    non-divisibility).
    """

    name: str
    description: str
    params: tuple[str, ...]
    domain: Callable[[int | None, int | None, int | None, int | None], bool]
    check: Callable[[int | None, int | None, int | None, int | None], tuple]
    relation: str = "equal"


# ---------------------------------------------------------------------------
# checks


def _check_vonszily(n, l, t, m):
    return supercat.super_catalan_von_szily(n, l), supercat.super_catalan(n, l)


def _check_symmetry(n, l, t, m):
    return supercat.super_catalan(n, l), supercat.super_catalan(l, n)


def _check_parity(n, l, t, m):
    return supercat.super_catalan(n, l) % 2, 1 if n == l == 0 else 0


def _check_thm1(n, l, t, m):
    rhs = supercat.super_catalan(n, l) * supercat.super_catalan(n + l, n)
    return sums.psi(2 * n, 1, l), rhs


def _check_eq2(n, l, t, m):
    lhs = sum((-1) ** k * binomial(2 * n, k) * central_binomial(k)
              * binomial(4 * n - 2 * k, 2 * n - k)
              for k in range(2 * n + 1))
    return lhs, central_binomial(n) ** 2


def _check_eq3(n, l, t, m):
    C = supercat.catalan
    lhs = sum((-1) ** k * binomial(2 * n, k) * C(k) * C(2 * n - k)
              for k in range(2 * n + 1))
    return lhs, C(n) * central_binomial(n)


def _check_thm2(n, l, t, m):
    S = supercat.super_catalan
    lhs = sum((-1) ** k * binomial(2 * n - 2 * t, k - t) * S(k, l) * S(2 * n - k, l)
              for k in range(t, 2 * n - t + 1))
    return lhs, supercat.phi(n, l, t)


def _check_eq8(n, l, t, m):
    num = central_binomial(n) * central_binomial(t) * binomial(2 * n - 2 * t, n - t)
    rhs = (-1) ** t * exact_div(num, binomial(2 * n - t, t))
    return sums.psi_t(2 * n, t, 0), rhs


def _check_eq9(n, l, t, m):
    C = supercat.catalan
    lhs = sum((-1) ** k * binomial(2 * n - 2 * t, k - t) * C(k) * C(2 * n - k)
              for k in range(t, 2 * n - t + 1))
    num = C(n) * central_binomial(t) * binomial(2 * n - 2 * t, n - t)
    return lhs, (-1) ** t * exact_div(num, binomial(2 * n + 1 - t, t))


def _check_eq18(n, l, t, m):
    return sums.psi_t(2 * n, t, l), supercat.phi(n, l, t)


def _check_eq20(n, l, t, m):
    return sums.psi_t(2 * n - 1, t, l), 0


def _check_eq22(n, l, t, m):
    s = supercat.super_catalan(n, l)
    return sums.psi_t(2 * n, n, l), (-1) ** n * s * s


def _check_eq28(n, l, t, m):
    return sums.p_sum(2 * n, t, l), (n - t) * sums.psi_t(2 * n, t, l)


def _check_eq29(n, l, t, m):
    return (n + l + 1) * sums.r_prime_sum(2 * n, t, l), sums.r_sum(2 * n, t, l)


def _check_eq33(n, l, t, m):
    return l * central_binomial(l), 2 * (2 * l - 1) * central_binomial(l - 1)


def _check_eq47(n, l, t, m):
    rhs = (4 * (n - 2 * t) * sums.psi_t(n - 1, t, l)
           + (-1) ** n * 2 * (n - 2 * t) * sums.r_sum(n - 1, t, l))
    return sums.p_sum(n, t, l), rhs


def _check_eq51(n, l, t, m):
    rhs = (n + l + 1 - t) * sums.r_sum(n, t, l) - (2 * l + 1) * sums.psi_t(n, t, l)
    return sums.t_sum(n, t, l), rhs


def _check_eq53(n, l, t, m):
    S = supercat.super_catalan
    inner = sum((Fraction((-1) ** k * (2 * n - 2 * k - 1) * binomial(n - 1 - 2 * t, k - t)
                          * S(k, l) * S(n - 1 - k, l), (k + l + 1) * (n - k + l))
                 for k in range(t, n - t)), Fraction(0))
    return sums.t_sum(n, t, l), 2 * (n - 2 * t) * (2 * l + 1) * inner


def _check_eq58(n, l, t, m):
    return sums.r_dprime_sum(2 * n, t, l), n * sums.r_prime_sum(2 * n, t, l)


def _check_lemma1(n, l, t, m):
    lhs = 2 * (2 * n - 1 - 2 * t) * (2 * n - 1) * sums.psi_t(2 * n - 2, t, l + 1)
    rhs = (2 * n + l - t) * (2 * l + 1) * sums.psi_t(2 * n, t, l)
    return lhs, rhs


def _check_lemma2(n, l, t, m):
    lhs = 4 * (2 * l + 1) * sums.r_sum(2 * n, t, l)
    return lhs, (n + l + 1) * sums.psi_t(2 * n, t, l + 1)


def _check_lemma3(n, l, t, m):
    return sums.psi_t(2 * n, t, l), 4 * sums.r_sum(2 * n - 1, t, l)


def _check_lemma4(n, l, t, m):
    lhs = (2 * n + l - t) * (n + l) * sums.r_sum(2 * n - 1, t, l)
    rhs = 2 * (2 * n - 1 - 2 * t) * (2 * n - 1) * sums.r_sum(2 * n - 2, t, l)
    return lhs, rhs


def _check_eq64phi(n, l, t, m):
    lhs = 2 * (2 * n + 1 - 2 * t) * (2 * n + 1) * supercat.phi(n, l + 1, t)
    rhs = (2 * n + 2 + l - t) * (2 * l + 1) * supercat.phi(n + 1, l, t)
    return lhs, rhs


def _check_eq12(n, l, t, m):
    return sums.psi(n, m, l), dsums.d_sum_direct(dsums.psi_summand, n, 0, m - 2, l)


def _check_eq13(n, l, t, m):
    # t here is the level; the window offset j is quantified internally for
    # both summands. Records the psi-summand j=0 pair when everything
    # matches, the first mismatching pair otherwise.
    recorded = None
    for f in (dsums.psi_summand, dsums.unit_summand):
        for j in range(n // 2 + 1):
            lhs = dsums.d_sum_step(f, n, j, t, l)
            rhs = dsums.d_sum_direct(f, n, j, t, l)
            if lhs != rhs:
                return lhs, rhs
            if recorded is None:
                recorded = (lhs, rhs)
    return recorded


def _check_eq17(n, l, t, m):
    # t column carries the window offset j for this identity.
    j = t
    recorded = None
    for f in (dsums.psi_summand, dsums.unit_summand):
        lhs = dsums.d_sum_base(f, n, j, l)
        rhs = dsums.d_sum_direct(f, n, j, 0, l)
        if lhs != rhs:
            return lhs, rhs
        if recorded is None:
            recorded = (lhs, rhs)
    return recorded


def _check_eq94(n, l, t, m):
    num = (central_binomial(l) * central_binomial(t) * central_binomial(n + l - t)
           * central_binomial(n) * binomial(2 * n - t, n))
    den = binomial(n + l, n) * binomial(2 * n + l - t, n)
    rhs = (-1) ** t * exact_div(num, den)
    return binomial(2 * n - t, t) * sums.psi_t(2 * n, t, l), rhs


def _check_eq104(n, l, t, m):
    S = supercat.super_catalan
    cofactor = sum((-1) ** u * central_binomial(u) * S(n, n + l - u) * binomial(n, u)
                   for u in range(n + 1))
    return sums.psi(2 * n, 2, l), S(n, l) * cofactor


def _check_thm3(n, l, t, m):
    rhs = supercat.super_catalan(n, l) * dsums.psi_quotient_witness(n, m, l)
    return sums.psi(2 * n, m, l), rhs


def _check_remark1(n, l, t, m):
    num = central_binomial(l) * central_binomial(n + l) * central_binomial(n)
    return sums.psi(2 * n, 1, l), exact_div(num, binomial(2 * n + l, l))


def _check_remark2(n, l, t, m):
    return sums.psi(2 * n, 2, l) % (2 * supercat.super_catalan(n, l)), 0


def _check_remark3(n, l, t, m):
    return sums.psi(2 * n, m, l) % (2 * supercat.super_catalan(n, l)), 0


def _check_remark4(n, l, t, m):
    return sums.psi(2 * n, m, l) % central_binomial(n), 0


def _check_dlevel1(n, l, t, m):
    # t column carries the window offset j; d_psi_level1 cross-checks the
    # reconstruction against the direct evaluation internally.
    j = t
    value, cofactor = dsums.d_psi_level1(n, j, l)
    return value, (-1) ** j * supercat.super_catalan(n, l) * cofactor


# ---------------------------------------------------------------------------
# registry

REGISTRY: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> None:
    if spec.name in REGISTRY:
        raise ValueError(f"identity {spec.name!r} already registered")
    if spec.relation not in ("equal", "remainder-zero", "remainder-nonzero"):
        raise ValueError(f"unknown relation {spec.relation!r}")
    REGISTRY[spec.name] = spec


def _add(name, params, description, domain, check, relation="equal"):
    register(IdentitySpec(name, description, params, domain, check, relation))


_any = lambda n, l, t, m: True
_t_le_n = lambda n, l, t, m: t <= n
_t_lt_n = lambda n, l, t, m: t < n

_add("vonszily", ("n", "l"),
     "alternating binomial sum for S(n,l) equals the closed ratio form",
     _any, _check_vonszily)
_add("symmetry", ("n", "l"), "S(n,l) = S(l,n)", _any, _check_symmetry)
_add("parity", ("n", "l"), "S(n,l) is even except S(0,0) = 1", _any, _check_parity)
_add("thm1", ("n", "l"), "psi(2n,1,l) = S(n,l) S(n+l,n)", _any, _check_thm1)
_add("eq2", ("n",),
     "l=0 convolution row over central binomials equals binomial(2n,n)^2",
     _any, _check_eq2)
_add("eq3", ("n",),
     "l=1 convolution row over Catalan numbers equals catalan(n) binomial(2n,n)",
     _any, _check_eq3)
_add("thm2", ("n", "l", "t"),
     "window-t alternating convolution of length 2n equals phi(n,l,t)",
     _t_le_n, _check_thm2)
_add("eq8", ("n", "t"), "closed binomial form of psi_t(2n,t,0)",
     _t_le_n, _check_eq8)
_add("eq9", ("n", "t"), "closed Catalan form of the window-t l=1 row",
     _t_le_n, _check_eq9)
_add("eq18", ("n", "l", "t"), "psi_t(2n,t,l) = phi(n,l,t)", _t_le_n, _check_eq18)
_add("eq20", ("n", "l", "t"), "psi_t vanishes at odd length 2n-1",
     lambda n, l, t, m: n >= 1 and t <= n - 1, _check_eq20)
_add("eq22", ("n", "l"), "full window: psi_t(2n,n,l) = (-1)^n S(n,l)^2",
     _any, _check_eq22)
_add("eq28", ("n", "l", "t"), "p_sum(2n,t,l) = (n-t) psi_t(2n,t,l)",
     _t_le_n, _check_eq28)
_add("eq29", ("n", "l", "t"), "(n+l+1) r_prime_sum(2n,t,l) = r_sum(2n,t,l)",
     _t_le_n, _check_eq29)
_add("eq33", ("l",), "central binomial ratio: l cb(l) = 2(2l-1) cb(l-1)",
     lambda n, l, t, m: l >= 1, _check_eq33)
_add("eq47", ("n", "l", "t"),
     "p_sum at any length n from psi_t and r_sum at length n-1",
     lambda n, l, t, m: 2 * t < n, _check_eq47)
_add("eq51", ("n", "l", "t"),
     "t_sum(n,t,l) = (n+l+1-t) r_sum(n,t,l) - (2l+1) psi_t(n,t,l)",
     lambda n, l, t, m: 2 * t <= n, _check_eq51)
_add("eq53", ("n", "l", "t"),
     "t_sum(n,t,l) as a weighted alternating sum one length down",
     lambda n, l, t, m: 2 * t <= n, _check_eq53)
_add("eq58", ("n", "l", "t"), "r_dprime_sum(2n,t,l) = n r_prime_sum(2n,t,l)",
     _t_le_n, _check_eq58)
_add("lemma1", ("n", "l", "t"),
     "cleared form: 2(2n-1-2t)(2n-1) psi_t(2n-2,t,l+1) = (2n+l-t)(2l+1) psi_t(2n,t,l)",
     _t_lt_n, _check_lemma1)
_add("lemma2", ("n", "l", "t"),
     "cleared form: 4(2l+1) r_sum(2n,t,l) = (n+l+1) psi_t(2n,t,l+1)",
     _t_le_n, _check_lemma2)
_add("lemma3", ("n", "l", "t"), "psi_t(2n,t,l) = 4 r_sum(2n-1,t,l) for t < n",
     _t_lt_n, _check_lemma3)
_add("lemma4", ("n", "l", "t"),
     "cleared form: (2n+l-t)(n+l) r_sum(2n-1,t,l) = 2(2n-1-2t)(2n-1) r_sum(2n-2,t,l)",
     _t_lt_n, _check_lemma4)
_add("eq64phi", ("n", "l", "t"),
     "cleared phi recurrence linking (n, l+1) to (n+1, l)",
     _t_lt_n, _check_eq64phi)
_add("eq12", ("n", "l", "m"),
     "psi(n,m,l) = level engine at j=0, level m-2 (any length parity)",
     lambda n, l, t, m: m >= 2, _check_eq12)
_add("eq13", ("n", "l", "t"),
     "level recurrence equals direct evaluation at level t, all window "
     "offsets, both summands",
     lambda n, l, t, m: 1 <= t <= 3, _check_eq13)
_add("eq17", ("n", "l", "t"),
     "base layer over a_t windows equals direct level 0; t column is the "
     "window offset j",
     lambda n, l, t, m: 2 * t <= n, _check_eq17)
_add("eq94", ("n", "l", "t"),
     "scaled closed form of binomial(2n-t,t) psi_t(2n,t,l)",
     _t_le_n, _check_eq94)
_add("eq104", ("n", "l"),
     "psi(2n,2,l) = S(n,l) times an explicit integer cofactor",
     _any, _check_eq104)
_add("thm3", ("n", "l", "m"),
     "S(n,l) divides psi(2n,m,l), with the constructive witness quotient",
     _any, _check_thm3)
_add("remark1", ("n", "l"), "product form of psi(2n,1,l) over four binomials",
     _any, _check_remark1)
_add("remark2", ("n", "l"), "2 S(n,l) divides psi(2n,2,l) for l >= 1",
     lambda n, l, t, m: l >= 1, _check_remark2, "remainder-zero")
_add("remark3", ("n", "l", "m"), "2 S(n,l) divides psi(2n,m,l) for l >= 1",
     lambda n, l, t, m: l >= 1, _check_remark3, "remainder-zero")
_add("remark4", ("n", "l", "m"),
     "counterexample: binomial(2n,n) does not divide psi(2n,m,l) at "
     "n=4, m=1, l=2 (the recorded lhs is the nonzero remainder)",
     lambda n, l, t, m: (n, l, m) == (4, 2, 1), _check_remark4,
     "remainder-nonzero")
_add("dlevel1", ("n", "l", "t"),
     "level-1 layer D(2n,j,1) equals (-1)^j S(n,l) times its integer "
     "witness cofactor; t column is the window offset j",
     _t_le_n, _check_dlevel1)


def registry_ids() -> tuple[str, ...]:
    return tuple(sorted(REGISTRY))


def get_identity(name: str) -> IdentitySpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None


# ---------------------------------------------------------------------------
# evaluation


def _render(value) -> str:
    # ints and Fractions both print as exact decimal strings
    return str(value)


def _evaluate(spec: IdentitySpec, point: Point) -> CheckResult:
    n, l, t, m = point
    try:
        lhs, rhs = spec.check(n, l, t, m)
    except (IntegrityError, ValueError, ZeroDivisionError) as exc:
        return CheckResult(spec.name, n, l, t, m, "", "",
                           "fail", f"{type(exc).__name__}: {exc}")
    if spec.relation == "remainder-nonzero":
        ok = lhs != rhs
    else:
        ok = lhs == rhs
    return CheckResult(spec.name, n, l, t, m, _render(lhs), _render(rhs),
                       "pass" if ok else "fail")


def _normalize_point(spec: IdentitySpec, n, l, t, m) -> Point:
    given = {"n": n, "l": l, "t": t, "m": m}
    return tuple(given[p] if p in spec.params else None for p in ("n", "l", "t", "m"))


def run_check(name: str, *, n: int | None = None, l: int | None = None,
              t: int | None = None, m: int | None = None) -> CheckResult:
    """Evaluate one identity at one point.

    Points outside the identity's domain, including points missing a
    required parameter, come back as skipped with a reason; an unknown
    identity name raises ValueError.
    """
    spec = get_identity(name)
    point = _normalize_point(spec, n, l, t, m)
    missing = [p for p, v in zip(("n", "l", "t", "m"), point)
               if p in spec.params and v is None]
    if missing:
        return CheckResult(spec.name, *point, "", "", "skipped",
                           f"missing parameter(s): {', '.join(missing)}")
    if not spec.domain(*point):
        return CheckResult(spec.name, *point, "", "", "skipped",
                           f"point outside domain of {spec.name}")
    return _evaluate(spec, point)


def _iter_points(spec: IdentitySpec, grid: GridBounds) -> Iterator[Point]:
    # nested ascending loops make the enumeration lexicographic in (n,l,t,m)
    t_hi = grid.t_max if grid.t_max is not None else grid.n_max
    ns = range(grid.n_max + 1) if "n" in spec.params else (None,)
    ls = range(grid.l_max + 1) if "l" in spec.params else (None,)
    ts = range(t_hi + 1) if "t" in spec.params else (None,)
    ms = range(1, grid.m_max + 1) if "m" in spec.params else (None,)
    for n in ns:
        for l in ls:
            for t in ts:
                for m in ms:
                    if spec.domain(n, l, t, m):
                        yield (n, l, t, m)


def _sort_key(result: CheckResult):
    def v(x):
        return -1 if x is None else x
    return (result.identity, v(result.n), v(result.l), v(result.t), v(result.m))


def _eval_task(task: tuple[str, Point]) -> CheckResult:
    name, point = task
    return _evaluate(REGISTRY[name], point)


@dataclass(frozen=True)
class Report:
    """A completed sweep: ordered results plus summary bookkeeping."""

    results: tuple[CheckResult, ...]
    identities: tuple[str, ...]
    grid: GridBounds
    passed: int
    failed: int
    skipped: int
    runtime_seconds: float
    generated_at: str


def sweep(names, grid: GridBounds | None = None, jobs: int = 1) -> Report:
    """Exhaustively evaluate each named identity over its domain in the grid.

    The task list is enumerated in sorted identity order with lexicographic
    points, and results are re-sorted the same way after evaluation, so the
    report content does not depend on jobs.
    """
    if grid is None:
        grid = GridBounds()
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    selected = sorted(set(names))
    for name in selected:
        get_identity(name)
    started = time.time()
    tasks = [(name, point)
             for name in selected
             for point in _iter_points(REGISTRY[name], grid)]
    if jobs == 1 or len(tasks) < 2:
        results = [_eval_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(tasks) // (8 * jobs))
            results = list(pool.map(_eval_task, tasks, chunksize=chunk))
    results.sort(key=_sort_key)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        counts[r.status] += 1
    return Report(
        results=tuple(results),
        identities=tuple(selected),
        grid=grid,
        passed=counts["pass"],
        failed=counts["fail"],
        skipped=counts["skipped"],
        runtime_seconds=time.time() - started,
        generated_at=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    )


# ---------------------------------------------------------------------------
# serialization

_COLUMNS = ("identity", "n", "l", "t", "m", "lhs", "rhs", "status", "reason")


def to_jsonl(report: Report) -> str:
    """One JSON object per result, fixed key order, big values as strings.

    Record streams carry no timestamp, so equal sweeps serialize to equal
    bytes unconditionally.
    """
    lines = []
    for r in report.results:
        row = {"identity": r.identity, "n": r.n, "l": r.l, "t": r.t, "m": r.m,
               "lhs": r.lhs, "rhs": r.rhs, "status": r.status, "reason": r.reason}
        lines.append(json.dumps(row, separators=(",", ":")))
    return "".join(line + "\n" for line in lines)


def to_csv(report: Report) -> str:
    """Same records as to_jsonl in CSV form; empty cells for unused params."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for r in report.results:
        writer.writerow([r.identity,
                         "" if r.n is None else r.n,
                         "" if r.l is None else r.l,
                         "" if r.t is None else r.t,
                         "" if r.m is None else r.m,
                         r.lhs, r.rhs, r.status, r.reason])
    return buf.getvalue()


def to_human(report: Report, show_timestamp: bool = True) -> str:
    """Per-identity summary table, failure detail, totals.

    Runtime and generation time are the only non-reproducible fields and
    are dropped when show_timestamp is false.
    """
    per: dict[str, dict[str, int]] = {
        name: {"points": 0, "pass": 0, "fail": 0, "skipped": 0}
        for name in report.identities
    }
    for r in report.results:
        per[r.identity]["points"] += 1
        per[r.identity][r.status] += 1
    width = max([len("identity")] + [len(name) for name in report.identities])
    lines = [f"{'identity':<{width}}  {'points':>7}  {'pass':>7}  {'fail':>7}  {'skip':>7}"]
    for name in report.identities:
        c = per[name]
        lines.append(f"{name:<{width}}  {c['points']:>7}  {c['pass']:>7}  "
                     f"{c['fail']:>7}  {c['skipped']:>7}")
    total = len(report.results)
    lines.append(f"{'total':<{width}}  {total:>7}  {report.passed:>7}  "
                 f"{report.failed:>7}  {report.skipped:>7}")
    bad = [r for r in report.results if r.status == "fail"]
    if bad:
        lines.append("")
        lines.append("failures:")
        for r in bad:
            point = ", ".join(f"{k}={v}" for k, v in
                              zip(("n", "l", "t", "m"), (r.n, r.l, r.t, r.m))
                              if v is not None)
            detail = f"  {r.identity} at {point}: lhs={r.lhs} rhs={r.rhs}"
            if r.reason:
                detail += f" ({r.reason})"
            lines.append(detail)
    lines.append(f"grid: {report.grid.describe()}")
    if show_timestamp:
        lines.append(f"runtime: {report.runtime_seconds:.3f}s")
        lines.append(f"generated: {report.generated_at}")
    return "".join(line + "\n" for line in lines)
