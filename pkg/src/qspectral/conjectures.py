"""Mechanical verification and falsification of the two extremal conjectures.

Conjecture A (bipartite): among bipartite graphs on n vertices, the balanced
complete bipartite graph has the extremal power sum: maximal for positive
exponents, minimal for negative ones. Proven for exponents in [1, 3] (and the
maximization for exponents in (0, 1]); false in general for exponents above 3.

Conjecture B (connectivity): among connected graphs with vertex connectivity
at most k, the split-clique graph join_split(n, k, 1) has the maximal power
sum for exponents >= 1; for negative exponents the same value was conjectured
to be a lower bound, which fails below exponent -1.

"Verification" here means grinding the claims against closed forms and, at
desk scale, against exhaustive graph scans; "falsification" means locating the
first family member that crosses the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import Pool

from . import kernels
from .closed_forms import (
    bipartite_bound,
    connectivity_bound,
    spectrum_complete_bipartite,
    spectrum_join_split,
)
from .graphs import from_edge_mask, to_graph6
from .spectra import spectrum_of

# relative slack when calling a bound violated rather than numerically grazed
REL_TOL = 1e-9

VERDICT_HOLDS = "holds"
VERDICT_TIGHT = "tight"
VERDICT_VIOLATED = "violated"

# exhaustive scans beyond this need force=True: 2^(n(n-1)/2) graphs add up
EXHAUSTIVE_SOFT_LIMIT = 8

CSV_COLUMNS = ("alpha", "n", "param2", "lhs", "rhs", "margin", "verdict")


def _slack_tol(rhs: float) -> float:
    return REL_TOL * (1.0 + abs(rhs))


def _verdict(margin: float, tol: float) -> str:
    if margin < -tol:
        return VERDICT_VIOLATED
    if margin <= tol:
        return VERDICT_TIGHT
    return VERDICT_HOLDS


@dataclass(frozen=True)
class BoundReport:
    """One bound comparison: lhs is the achieved extremal value, rhs the bound.

    ``margin`` is oriented slack: nonnegative when the bound holds, with zero
    (within tolerance) meaning the bound is attained. ``param2`` is the family
    parameter that varies in the producing scan (r for bipartite families,
    k for connectivity classes).
    """

    alpha: float
    n: int
    param2: int
    lhs: float
    rhs: float
    margin: float
    verdict: str
    witness: str = ""
    witness_edges: tuple[tuple[int, int], ...] = ()

    def to_row(self) -> dict:
        return {
            "alpha": self.alpha,
            "n": self.n,
            "param2": self.param2,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "verdict": self.verdict,
        }

    def to_json_dict(self) -> dict:
        d = self.to_row()
        d["witness"] = self.witness
        d["witness_edges"] = [list(e) for e in self.witness_edges]
        return d


@dataclass(frozen=True)
class CounterexampleReport:
    """A located bound violation. ``margin`` is the positive violation depth."""

    alpha: float
    n: int
    param2: int
    lhs: float
    rhs: float
    margin: float
    witness: str = ""

    def to_row(self) -> dict:
        return {
            "alpha": self.alpha,
            "n": self.n,
            "param2": self.param2,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "verdict": VERDICT_VIOLATED,
        }

    def to_json_dict(self) -> dict:
        d = self.to_row()
        d["witness"] = self.witness
        return d


# ---------------------------------------------------------------------------
# scalar profiles behind the asymptotics

def f_profile(x: float, alpha: float) -> float:
    """f(x) = x(1-x)^alpha + (1-x)x^alpha on [0, 1]; symmetric about 1/2."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"need 0 <= x <= 1, got {x}")
    alpha = float(alpha)
    if x in (0.0, 1.0):
        # limits: alpha > 0 gives 0 at both ends, alpha = 0 gives 1
        if alpha < 0.0:
            raise ValueError(f"f diverges at x={x} for alpha={alpha}")
        return 1.0 if alpha == 0.0 else 0.0
    return x * (1.0 - x) ** alpha + (1.0 - x) * x**alpha


def g_profile(r: int, n: int, alpha: float) -> float:
    """g(r) = (r-1)(n-r)^alpha + (n-r-1)r^alpha, the bipartite power sum minus n^alpha."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    alpha = float(alpha)
    return (r - 1) * float(n - r) ** alpha + (n - r - 1) * float(r) ** alpha


_P_GRID_POINTS = 100_000
_P_SNAP_TOL = 1e-12


def p_coefficient(alpha: float) -> tuple[float, float]:
    """Maximum of f_profile over [0, 1] and its argmax, for alpha >= 0.

    Grid scan over [0, 1/2] (symmetry) plus golden-section refinement of the
    best bracket. Near the exponent where the maximizer leaves x = 1/2 the
    profile is extremely flat, so an argmax that ties with x = 1/2 within
    floating accuracy snaps to exactly 1/2.
    """
    alpha = float(alpha)
    if alpha < 0.0:
        raise ValueError(f"profile is unbounded for alpha={alpha} < 0")
    grid_best_x = 0.5
    grid_best = f_profile(0.5, alpha)
    step = 0.5 / _P_GRID_POINTS
    for i in range(1, _P_GRID_POINTS):
        x = i * step
        v = f_profile(x, alpha)
        if v > grid_best:
            grid_best = v
            grid_best_x = x
    lo = max(grid_best_x - step, 0.0)
    hi = min(grid_best_x + step, 0.5)
    x_star, best = _golden_max(lambda x: f_profile(x, alpha), lo, hi)
    if best < grid_best:
        x_star, best = grid_best_x, grid_best
    center = f_profile(0.5, alpha)
    if center >= best - _P_SNAP_TOL * (1.0 + abs(best)):
        return center, 0.5
    return best, x_star


def _golden_max(fn, lo: float, hi: float, width: float = 1e-12) -> tuple[float, float]:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > width:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fn(d)
    x = 0.5 * (a + b)
    return x, fn(x)


def zeta(n: int, alpha: float) -> tuple[float, int]:
    """Extremal power sum over complete bipartite splits of n, with its r.

    Maximizes for alpha > 0 and minimizes for alpha < 0, mirroring the
    conjectured role of the bound. Ties prefer the balanced split.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alpha = float(alpha)
    direction = 1.0 if alpha > 0 else -1.0
    best = None
    best_r = 0
    head = float(n) ** alpha
    for r in range(n // 2, 0, -1):  # balanced first so ties keep it
        val = head + g_profile(r, n, alpha)
        if best is None or direction * (val - best) > 0.0:
            best = val
            best_r = r
    return best, best_r


# ---------------------------------------------------------------------------
# conjecture A: the bipartite family

def verify_conjecture1(alpha: float, n_max: int) -> list[BoundReport]:
    """Check every complete bipartite split against the balanced bound.

    Restricted to exponents in [1, 3], the proven range; outside it the claim
    is not a theorem and this function refuses to pretend otherwise.
    """
    alpha = float(alpha)
    if not 1.0 <= alpha <= 3.0:
        raise ValueError(
            f"alpha={alpha} outside [1, 3], the proven range for the balanced bound"
        )
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    reports = []
    for n in range(2, n_max + 1):
        rhs = bipartite_bound(n, alpha)
        tol = _slack_tol(rhs)
        best, best_r = zeta(n, alpha)
        margin = rhs - best
        reports.append(
            BoundReport(
                alpha=alpha,
                n=n,
                param2=best_r,
                lhs=best,
                rhs=rhs,
                margin=margin,
                verdict=_verdict(margin, tol),
                witness=f"complete bipartite {best_r}+{n - best_r}",
            )
        )
    return reports


def find_counterexample_conj1(alpha: float, n_max: int) -> CounterexampleReport | None:
    """First complete bipartite graph crossing the balanced bound, or None.

    Positive exponents look for a split exceeding the bound, negative ones for
    a split below it. Scans n ascending, then r ascending, so the returned
    witness is minimal in that order.
    """
    alpha = float(alpha)
    if alpha == 0.0:
        raise ValueError("alpha = 0 makes every bipartite power sum equal; nothing to falsify")
    direction = 1.0 if alpha > 0 else -1.0
    for n in range(2, n_max + 1):
        rhs = bipartite_bound(n, alpha)
        tol = _slack_tol(rhs)
        for r in range(1, n // 2 + 1):
            lhs = spectrum_complete_bipartite(r, n - r).s_alpha(alpha)
            excess = direction * (lhs - rhs)
            if excess > tol:
                return CounterexampleReport(
                    alpha=alpha,
                    n=n,
                    param2=r,
                    lhs=lhs,
                    rhs=rhs,
                    margin=excess,
                    witness=f"complete bipartite {r}+{n - r}",
                )
    return None


# ---------------------------------------------------------------------------
# conjecture B: connectivity classes and the split-clique family

def find_counterexample_conj2(
    alpha: float,
    k: int,
    n_max: int,
    scan_all_r: bool = False,
) -> CounterexampleReport | None:
    """First split-clique graph crossing the connectivity bound, or None.

    For negative exponents the bound was conjectured to be a lower bound, so a
    violation is a family member with a smaller power sum. By default only the
    balanced member r = (n-k)/2 is tried (n skipped when parities disagree,
    keeping r integral); ``scan_all_r`` widens the scan to every r. Orders n
    ascending then r ascending; n where the bound is undefined are skipped.
    """
    alpha = float(alpha)
    if alpha >= 0.0:
        raise ValueError(
            f"alpha={alpha}: the lower-bound reading only makes sense for alpha < 0"
        )
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    for n in range(k + 2, n_max + 1):
        try:
            rhs = connectivity_bound(n, k, alpha)
        except ValueError:
            continue  # undefined bound (zero eigenvalue, negative exponent)
        tol = _slack_tol(rhs)
        if scan_all_r:
            r_candidates = range(1, (n - k) // 2 + 1)
        else:
            if (n - k) % 2 != 0:
                continue
            r_candidates = [(n - k) // 2]
        for r in r_candidates:
            lhs = spectrum_join_split(n, k, r).s_alpha(alpha)
            deficit = rhs - lhs
            if deficit > tol:
                return CounterexampleReport(
                    alpha=alpha,
                    n=n,
                    param2=r,
                    lhs=lhs,
                    rhs=rhs,
                    margin=deficit,
                    witness=f"split-clique n={n}, k={k}, r={r}",
                )
    return None


# ---------------------------------------------------------------------------
# exhaustive desk-scale verification

def _scan_chunk(args):
    n, mode, alphas, directions, k, start, stop, connected_only = args
    return kernels.scan_extremal(
        n,
        mode,
        alphas,
        directions,
        k=k,
        mask_start=start,
        mask_stop=stop,
        connected_only=connected_only,
    )


def _run_scan(n, mode, alphas, directions, k, connected_only, jobs):
    ne = n * (n - 1) // 2
    total = 1 << ne
    if jobs <= 1 or total < 4096:
        return kernels.scan_extremal(
            n, mode, alphas, directions, k=k, connected_only=connected_only
        )
    chunks = []
    pieces = jobs * 4
    bound_step = total // pieces
    for i in range(pieces):
        start = i * bound_step
        stop = total if i == pieces - 1 else (i + 1) * bound_step
        chunks.append((n, mode, alphas, directions, k, start, stop, connected_only))
    best_vals = [math.nan] * len(alphas)
    best_masks = [-1] * len(alphas)
    class_count = 0
    with Pool(processes=jobs) as pool:
        for vals, masks, count in pool.imap(_scan_chunk, chunks):
            class_count += count
            for i in range(len(alphas)):
                if masks[i] < 0:
                    continue
                # same rule as the kernel: strictly better wins, ties keep the
                # earlier mask, so chunked results match a sequential scan
                if best_masks[i] < 0 or directions[i] * (vals[i] - best_vals[i]) > 0.0:
                    best_vals[i] = vals[i]
                    best_masks[i] = masks[i]
    return best_vals, best_masks, class_count


def exhaustive_verify(
    n: int,
    alpha: float,
    mode: str,
    k: int | None = None,
    *,
    include_disconnected: bool = False,
    force: bool = False,
    jobs: int = 1,
) -> BoundReport:
    """Scan every labeled graph in a class and compare the extremum to its bound.

    mode "bipartite": connected bipartite graphs (all bipartite graphs when
    ``include_disconnected``), maximizing for exponents in (0, 1] and
    minimizing for negative ones; other exponents are outside the proven
    statement and are refused. mode "connectivity": connected graphs with
    vertex connectivity at most k, maximizing, for exponents >= 1.

    The scan runs over all 2^(n(n-1)/2) labeled graphs, so n is capped at
    8 unless ``force`` is set (the kernels stop at 10 regardless). ``jobs``
    splits the mask range across processes; results are identical to a
    sequential scan. The winning value is recomputed through the numeric
    spectral pipeline as a cross-check before anything is reported.
    """
    alpha = float(alpha)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > EXHAUSTIVE_SOFT_LIMIT and not force:
        raise ValueError(
            f"n={n} means 2^{n * (n - 1) // 2} graphs; pass force=True if you mean it"
        )
    if mode == "bipartite":
        if k is not None:
            raise ValueError("k only applies to the connectivity class")
        if not (0.0 < alpha <= 1.0 or alpha < 0.0):
            raise ValueError(
                f"alpha={alpha} outside the proven bipartite ranges (0, 1] and (-inf, 0)"
            )
        direction = 1 if alpha > 0 else -1
        rhs = bipartite_bound(n, alpha)
        param2 = n // 2
        scan_k = 0
        connected_only = not include_disconnected
    elif mode == "connectivity":
        if k is None:
            raise ValueError("connectivity class needs k")
        if not 1 <= k <= n - 2:
            raise ValueError(f"need 1 <= k <= n-2, got n={n}, k={k}")
        if alpha < 1.0:
            raise ValueError(
                f"alpha={alpha} outside the proven connectivity range [1, inf)"
            )
        if include_disconnected:
            raise ValueError("the connectivity class is connected by definition")
        direction = 1
        rhs = connectivity_bound(n, k, alpha)
        param2 = k
        scan_k = k
        connected_only = True
    else:
        raise ValueError(f"unknown mode {mode!r}")

    vals, masks, class_count = _run_scan(
        n, mode, [alpha], [direction], scan_k, connected_only, jobs
    )
    if masks[0] < 0:
        raise RuntimeError(f"scan found no graphs in the {mode} class for n={n}")
    lhs = vals[0]
    witness_graph = from_edge_mask(n, masks[0])

    # independent recomputation through the object-level pipeline
    check = spectrum_of(witness_graph).power_sum(alpha)
    if not math.isclose(check, lhs, rel_tol=1e-9, abs_tol=1e-9):
        raise RuntimeError(
            f"kernel value {lhs!r} disagrees with pipeline value {check!r} at mask {masks[0]}"
        )

    tol = _slack_tol(rhs)
    margin = direction * (rhs - lhs)
    return BoundReport(
        alpha=alpha,
        n=n,
        param2=param2,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        verdict=_verdict(margin, tol),
        witness=f"graph6:{to_graph6(witness_graph)} over {class_count} graphs",
        witness_edges=tuple(witness_graph.sorted_edges()),
    )
