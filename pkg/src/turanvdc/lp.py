"""Independent LP oracle: dense simplex, grid-discretized delta(K), and certificates.

The semi-infinite problem delta(K) = inf T0 over nonnegative polynomials with
T(0) = 1 and frequencies in K is relaxed to finitely many grid constraints
T(x_j) >= 0 at x_j = j/(2M), j = 0..M.  Dropping constraints can only lower
the minimum, so the grid value is a LOWER bound on the exact delta over
polynomials supported in K.  Conversely the constant term of any verified
member of the class is an upper bound; closing that sandwich against the
closed forms is the point of this module.

The grid LP is solved through its dual, which has one row per polynomial
coefficient instead of one row per grid point, keeping the dense tableau
narrow; the optimizing coefficients are recovered from the equality-row
multipliers and validated against the primal constraints.

The Turan-side estimator maximizes a0 over nonnegative coefficient vectors
summing to 1 with |f| <= eps on a grid of [h, 1/2].  Truncation (inner) and
grid-plus-eps (outer) relax in opposite directions, so the value is reported
as a convergent estimate with its (N, M, eps) parameters, never as a bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import CosPoly, FiniteSupport, RationalCutoff, periodic_block, truncate_support

OPTIMAL = "Optimal"
INFEASIBLE = "Infeasible"
UNBOUNDED = "Unbounded"
ITERATION_LIMIT = "IterationLimit"

_PIVOT_TOL = 1e-9
_FEAS_TOL = 1e-7
_RATIO_TIE_TOL = 1e-12
# consecutive degenerate pivots before Bland's rule takes over the column
# choice; it is the anti-cycling fallback, not the workhorse (lowest-index
# entering crawls badly through the degenerate phase-1 vertices of the dual
# problems here, while most-negative never cycles on them in practice)
_BLAND_TRIGGER = 1000


class EpsTooSmall(ValueError):
    """The eps-tube around zero admits no truncated coefficient vector."""


@dataclass
class LPProblem:
    """min c.x subject to rows A x (<=, =, >=) b; variables are >= 0 or free."""

    c: np.ndarray
    A: np.ndarray
    relations: tuple[str, ...]
    b: np.ndarray
    free: np.ndarray

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float)
        self.A = np.atleast_2d(np.asarray(self.A, dtype=float))
        self.b = np.asarray(self.b, dtype=float)
        self.relations = tuple(self.relations)
        self.free = np.asarray(self.free, dtype=bool)
        m, n = self.A.shape
        if self.c.shape != (n,) or self.b.shape != (m,) or self.free.shape != (n,):
            raise ValueError("inconsistent LP dimensions")
        if any(r not in ("<=", "=", ">=") for r in self.relations) or len(self.relations) != m:
            raise ValueError("relations must be one of <=, =, >= per row")
        if not (np.all(np.isfinite(self.c)) and np.all(np.isfinite(self.A)) and np.all(np.isfinite(self.b))):
            raise ValueError("LP data must be finite")


@dataclass
class LPResult:
    status: str
    value: float | None
    solution: np.ndarray | None
    iterations: int
    duals: np.ndarray | None = None
    meta: dict = field(default_factory=dict)


def simplex_solve(prob: LPProblem, max_iters: int = 100000) -> LPResult:
    """Two-phase dense tableau simplex.

    Entering column: most negative reduced cost, lowest index on ties;
    after a run of degenerate pivots Bland's anti-cycling rule (lowest
    eligible index) takes over until progress resumes, which guarantees
    termination.  Leaving row: minimum ratio, ties broken by lowest basic
    variable index.  Everything is deterministic for identical inputs.

    Returns status Optimal / Infeasible / Unbounded / IterationLimit; on
    Optimal the solution satisfies all constraints to 1e-8 (residuals are
    recorded in meta) and duals holds one multiplier per constraint row.
    """
    m, n = prob.A.shape
    free_idx = np.nonzero(prob.free)[0]

    # split free variables into positive parts appended after the originals
    A = np.hstack([prob.A, -prob.A[:, free_idx]]) if len(free_idx) else prob.A.copy()
    c = np.concatenate([prob.c, -prob.c[free_idx]]) if len(free_idx) else prob.c.copy()
    nx = A.shape[1]

    # equality form with b >= 0; track sign flips for the dual mapping
    sign = np.ones(m)
    S = np.zeros((m, m))
    ns = 0
    rows = np.empty_like(A)
    rhs = np.empty(m)
    for i in range(m):
        a, bi, rel = A[i], prob.b[i], prob.relations[i]
        if bi < 0:
            a, bi = -a, -bi
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
            sign[i] = -1.0
        rows[i] = a
        rhs[i] = bi
        if rel == "<=":
            S[i, ns] = 1.0
            ns += 1
        elif rel == ">=":
            S[i, ns] = -1.0
            ns += 1
    art0 = nx + ns
    total = art0 + m + 1
    T = np.zeros((m, total))
    T[:, :nx] = rows
    T[:, nx:art0] = S[:, :ns]
    T[:, art0:art0 + m] = np.eye(m)
    T[:, -1] = rhs
    basis = np.arange(art0, art0 + m)
    iters = 0

    def leave_row(j: int, pos: np.ndarray) -> int:
        # lexicographic ratio test over [b | B^-1]: the artificial block tracks
        # B^-1 exactly, so breaking ratio ties by those columns reproduces the
        # classic anti-cycling rule; final ties fall back to lowest basis index
        colj = T[pos, j]
        ties = pos
        vals = np.maximum(T[pos, -1], 0.0) / colj
        vmin = vals.min()
        keep = vals <= vmin + _RATIO_TIE_TOL
        ties, colj = ties[keep], colj[keep]
        for lexcol in range(art0, art0 + m):
            if len(ties) == 1:
                break
            vals = T[ties, lexcol] / colj
            vmin = vals.min()
            keep = vals <= vmin + _RATIO_TIE_TOL
            ties, colj = ties[keep], colj[keep]
        return int(ties[np.argmin(basis[ties])])

    def run_phase(objrow: np.ndarray, eligible: np.ndarray) -> str:
        nonlocal iters
        degen_run = 0
        while True:
            red = objrow[:-1]
            cand = np.nonzero(eligible & (red < -_PIVOT_TOL))[0]
            if len(cand) == 0:
                return OPTIMAL
            if degen_run >= _BLAND_TRIGGER:
                j = int(cand[0])                       # Bland fallback
            else:
                j = int(cand[np.argmin(red[cand])])    # Dantzig, first index on ties
            colj = T[:, j]
            pos = np.nonzero(colj > _PIVOT_TOL)[0]
            if len(pos) == 0:
                return UNBOUNDED
            pr = leave_row(j, pos)
            rmin = max(T[pr, -1], 0.0) / T[pr, j]
            if iters >= max_iters:
                return ITERATION_LIMIT
            degen_run = degen_run + 1 if rmin <= _RATIO_TIE_TOL else 0
            piv = T[pr, j]
            T[pr] /= piv
            col = T[:, j].copy()
            col[pr] = 0.0
            np.subtract(T, np.outer(col, T[pr]), out=T)
            T[:, j] = 0.0
            T[pr, j] = 1.0
            objrow -= objrow[j] * T[pr]
            basis[pr] = j
            iters += 1

    # phase 1: minimize the sum of artificials (unit costs, basis = artificials);
    # once an artificial leaves the basis it may not re-enter
    objrow = -T.sum(axis=0)
    objrow[art0:art0 + m] = 0.0
    eligible = np.ones(total - 1, dtype=bool)
    eligible[art0:art0 + m] = False
    status = run_phase(objrow, eligible)
    if status == ITERATION_LIMIT:
        return LPResult(ITERATION_LIMIT, None, None, iters)
    if status == UNBOUNDED or -objrow[-1] > _FEAS_TOL:
        # phase 1 cannot be unbounded in exact arithmetic; treat as infeasible
        return LPResult(INFEASIBLE, None, None, iters, meta={"phase1": float(-objrow[-1])})

    # pivot leftover artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= art0:
            nz = np.nonzero(np.abs(T[i, :art0]) > _PIVOT_TOL)[0]
            if len(nz):
                j = int(nz[0])
                piv = T[i, j]
                T[i] /= piv
                col = T[:, j].copy()
                col[i] = 0.0
                T -= np.outer(col, T[i])
                T[:, j] = 0.0
                T[i, j] = 1.0
                basis[i] = j
                iters += 1

    # phase 2 over the original objective, artificial columns frozen
    objrow = np.zeros(total)
    objrow[:nx] = c
    for i in range(m):
        if objrow[basis[i]] != 0.0:
            objrow = objrow - objrow[basis[i]] * T[i]
    eligible = np.ones(total - 1, dtype=bool)
    eligible[art0:art0 + m] = False
    status = run_phase(objrow, eligible)
    if status != OPTIMAL:
        return LPResult(status, None, None, iters)

    xfull = np.zeros(total - 1)
    xfull[basis] = T[:, -1]
    x = xfull[:n].copy()
    if len(free_idx):
        x[free_idx] -= xfull[n:nx]
    value = float(prob.c @ x)

    # multipliers: reduced cost at the artificial (identity) columns is -pi
    duals = -objrow[art0:art0 + m] * sign

    lhs = prob.A @ x
    viol = 0.0
    for i, rel in enumerate(prob.relations):
        r = lhs[i] - prob.b[i]
        if rel == "<=":
            viol = max(viol, r)
        elif rel == ">=":
            viol = max(viol, -r)
        else:
            viol = max(viol, abs(r))
    return LPResult(
        OPTIMAL, value, x, iters, duals=duals,
        meta={"max_violation": float(max(viol, 0.0)),
              "duality_gap": float(abs(value - float(duals @ prob.b)))},
    )


def _grid(M: int) -> np.ndarray:
    # uniform on [0, 1/2] inclusive; evenness and periodicity make this cover R
    return np.arange(M + 1) / (2.0 * M)


def _cos_matrix(freqs, xs: np.ndarray) -> np.ndarray:
    G = np.ones((len(xs), len(freqs) + 1))
    for i, k in enumerate(freqs):
        G[:, i + 1] = np.cos(2.0 * np.pi * k * xs)
    return G


def delta_grid_lp(K: FiniteSupport, M: int, max_iters: int = 100000) -> LPResult:
    """Grid-relaxed delta(K): min T0 s.t. T(x_j) >= 0 on the grid and T(0) = 1.

    Variables are T0 and T_k for k in K, all free.  The value is a lower
    bound on delta over polynomials supported in K; the solution vector is
    (T0, T_k ...) in increasing frequency order.

    Solved through the LP dual (one row per coefficient); the coefficients
    are the negated equality multipliers of that dual, and their primal
    residuals are recorded in meta.
    """
    freqs = list(K.elements)
    if not freqs:
        raise ValueError("support set must be nonempty")
    if M < 2 * max(freqs):
        raise ValueError(f"grid size M={M} below 2*max(K)={2 * max(freqs)}")
    xs = _grid(M)
    G = _cos_matrix(freqs, xs)
    nv = len(freqs) + 1

    # dual: max z s.t. G^T y + z 1 = e1, y >= 0, z free  (value equals min T0)
    A = np.hstack([G.T, np.ones((nv, 1))])
    c = np.zeros(M + 2)
    c[-1] = -1.0
    b = np.zeros(nv)
    b[0] = 1.0
    free = np.zeros(M + 2, dtype=bool)
    free[-1] = True
    inner = simplex_solve(LPProblem(c, A, ("=",) * nv, b, free), max_iters=max_iters)

    if inner.status == INFEASIBLE:
        # dual infeasible <=> grid primal unbounded below
        return LPResult(UNBOUNDED, None, None, inner.iterations, meta={"grid": M})
    if inner.status == UNBOUNDED:
        return LPResult(INFEASIBLE, None, None, inner.iterations, meta={"grid": M})
    if inner.status != OPTIMAL:
        return LPResult(inner.status, None, None, inner.iterations, meta={"grid": M})

    coeffs = -inner.duals
    value = float(-inner.value)
    meta = {
        "grid": M,
        "support": freqs,
        "min_grid_value": float((G @ coeffs).min()),
        "normalization_error": float(abs(coeffs.sum() - 1.0)),
        "t0_gap": float(abs(coeffs[0] - value)),
    }
    return LPResult(OPTIMAL, value, coeffs, inner.iterations, meta=meta)


def solution_poly(K: FiniteSupport, result: LPResult) -> CosPoly:
    """Rebuild the optimizing CosPoly from a delta_grid_lp result."""
    if result.solution is None:
        raise ValueError(f"no solution available (status {result.status})")
    t = np.zeros(max(K.elements) + 1)
    t[0] = result.solution[0]
    for i, k in enumerate(K.elements):
        t[k] = result.solution[i + 1]
    return CosPoly(t)


def delta_periodic_lp(h: RationalCutoff, periods: int, M: int, max_iters: int = 100000) -> LPResult:
    """delta_grid_lp on the periodic block truncated after `periods` extra periods.

    The cut is at H = q*periods + (q - p), so periods = 0 keeps exactly the
    base block.  More periods add variables on the same grid, so the value
    is nonincreasing in `periods`.
    """
    if periods < 0:
        raise ValueError(f"periods must be >= 0, got {periods}")
    H = h.q * periods + (h.q - h.p)
    K = truncate_support(periodic_block(h), H)
    res = delta_grid_lp(K, M, max_iters=max_iters)
    res.meta["periods"] = periods
    res.meta["cut"] = H
    return res


def turan_relaxed_lp(h: RationalCutoff, N: int, M: int, eps: float,
                     max_iters: int = 100000) -> LPResult:
    """Relaxed Turan estimator: max a0, a >= 0, sum a = 1, |f| <= eps on [h, 1/2].

    A convergent estimate of the Turan value, not a one-sided bound; the
    (N, M, eps) parameters travel with the result in meta.  Raises
    EpsTooSmall when the tube admits no degree-N coefficient vector.
    """
    if N < h.q:
        raise ValueError(f"need N >= q, got N={N}, q={h.q}")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    j0 = -((-2 * M * h.p) // h.q)            # ceil(2 M p / q), exact in integers
    xs = np.arange(j0, M + 1) / (2.0 * M)
    n = N + 1
    C = np.cos(2.0 * np.pi * np.outer(xs, np.arange(n)))
    A = np.vstack([np.ones((1, n)), C, -C])
    rel = ("=",) + ("<=",) * (2 * len(xs))
    b = np.concatenate([[1.0], np.full(2 * len(xs), eps)])
    c = np.zeros(n)
    c[0] = -1.0
    inner = simplex_solve(LPProblem(c, A, rel, b, np.zeros(n, dtype=bool)), max_iters=max_iters)
    if inner.status == INFEASIBLE:
        raise EpsTooSmall(f"eps={eps} leaves no feasible degree-{N} vector for h={h.p}/{h.q}")
    if inner.status != OPTIMAL:
        return LPResult(inner.status, None, None, inner.iterations,
                        meta={"N": N, "grid": M, "eps": eps})
    return LPResult(OPTIMAL, float(-inner.value), inner.solution, inner.iterations,
                    meta={"N": N, "grid": M, "eps": eps})


def lipschitz_certify(T: CosPoly, M: int) -> tuple[float, float]:
    """Sound global lower bound for T from samples at x_j = j/(2M), j = 0..M.

    Around each sample, for |u| <= r with r = 1/(4M) half the spacing,

        T(x_j + u) >= T_j - |T'_j| v + (T''_j / 2) v^2 - (B3 / 6) v^3,  v = |u|,

    with B3 = (2 pi)^3 sum k^3 |t_k| a global bound on |T'''|; the bound is
    minimized in closed form over [0, r] and floored per point by the plain
    Lipschitz bound T_j - B1 r, B1 = 2 pi sum k |t_k|.  Evenness and
    periodicity extend the sampled half period to all of R, so the returned
    certified_min satisfies T(x) >= certified_min everywhere.

    Returns (certified_min, B1).
    """
    t = np.asarray(T.coeffs)
    deg = T.degree
    if M < 2 * deg:
        raise ValueError(f"grid size M={M} below 2*degree={2 * deg}")
    k = np.arange(len(t))
    kt = k * t
    B1 = 2.0 * np.pi * float(np.sum(np.abs(kt)))
    B3 = (2.0 * np.pi) ** 3 * float(np.sum(k ** 2 * np.abs(kt)))
    r = 1.0 / (4.0 * M)
    lo = np.inf
    chunk = 1 << 16
    for start in range(0, M + 1, chunk):
        j = np.arange(start, min(start + chunk, M + 1))
        ang = 2.0 * np.pi * np.outer(j / (2.0 * M), k)
        cosang = np.cos(ang)
        Tv = cosang @ t
        a1 = np.abs(np.sin(ang) @ kt) * (2.0 * np.pi)
        T2 = -(2.0 * np.pi) ** 2 * (cosang @ (k * kt))
        # endpoint v = r and the sample itself (v = 0)
        cand = np.minimum(Tv, Tv - a1 * r + 0.5 * T2 * r * r - (B3 / 6.0) * r ** 3)
        if B3 > 0.0:
            # interior local minimum of the cubic lower bound, if inside (0, r)
            disc = T2 * T2 - 2.0 * B3 * a1
            ok = disc > 0.0
            vm = np.where(ok, (T2 - np.sqrt(np.where(ok, disc, 0.0))) / B3, -1.0)
            use = ok & (vm > 0.0) & (vm < r)
            vs = np.where(use, vm, 0.0)
            gv = Tv - a1 * vs + 0.5 * T2 * vs * vs - (B3 / 6.0) * vs ** 3
            cand = np.where(use, np.minimum(cand, gv), cand)
        lo = min(lo, float(np.maximum(cand, Tv - B1 * r).min()))
    return lo, B1


def certification_grid(T: CosPoly, target: float = 1e-10) -> int:
    """Grid size making the certificate's cubic correction at most `target`."""
    k = np.arange(len(T.coeffs))
    B3 = (2.0 * np.pi) ** 3 * float(np.sum(k ** 3 * np.abs(T.coeffs)))
    M = max(2 * T.degree, 64)
    if B3 > 0.0:
        # correction scale is (B3/6) (1/(4M))^3; double for the |T'| interplay
        M = max(M, 2 * int(np.ceil((B3 / (6.0 * target)) ** (1.0 / 3.0) / 4.0)))
    return M
