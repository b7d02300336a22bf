"""Pure-Python kernels: cyclic Jacobi eigensolver and the labeled-graph scan.

This module is the reference implementation; ``_ckernels.pyx`` is the compiled
twin with the same contracts, kept in lockstep by the parity tests. Everything
here is deliberately self-contained (no imports from the object-level graph
module) so both backends mirror each other line for line where it matters.

Edge-bit ordering for scan masks is lexicographic over the upper triangle:
bit 0 is (0,1), bit 1 is (0,2), ..., matching ``graphs.edge_order``.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

MAX_SCAN_VERTICES = 10
MAX_SCAN_ALPHAS = 16


def jacobi_eigenvalues(matrix, max_sweeps: int = 64, tol_factor: float = 1e-12):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Returns ``(values_desc, residual, sweeps, converged)`` where ``residual``
    is the off-diagonal Frobenius norm left when iteration stopped. Convergence
    means residual <= tol_factor * (1 + ||input||_F). The caller decides what
    to do on non-convergence; this function never raises for it.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    threshold = tol_factor * (1.0 + float(np.linalg.norm(a)))

    def off_norm(m):
        # sum only the off-diagonal squares: subtracting the diagonal from the
        # full norm cancels catastrophically once the residual is small
        off = m.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    sweeps = 0
    resid = off_norm(a)
    while resid > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                if abs(apq) <= 1e-18 * (abs(app) + abs(aqq)):
                    # below roundoff relative to the diagonal: rotating would
                    # overflow tau, and dropping the entry perturbs the
                    # eigenvalues by far less than the convergence threshold
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                # closed-form diagonal and exact annihilation beat the rotated
                # values for accuracy
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        resid = off_norm(a)
    values = np.sort(np.diag(a))[::-1].copy()
    return values, resid, sweeps, resid <= threshold


# ---------------------------------------------------------------------------
# bitmask graph helpers (local ints, not Graph objects: the hot path)

def _component_mask(adj, n: int, allowed: int, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nbrs = 0
        for v in range(n):
            if frontier >> v & 1:
                nbrs |= adj[v]
        frontier = nbrs & allowed & ~comp
        comp |= frontier
    return comp


def _comps_and_bipartite(adj, n: int) -> tuple[int, int]:
    """(component count, count of bipartite components) via level-parity BFS."""
    seen = 0
    comp_count = 0
    bip_count = 0
    for start in range(n):
        if seen >> start & 1:
            continue
        color0 = 1 << start
        color1 = 0
        level = color0
        side = 0
        bip = 1
        while level:
            nbrs = 0
            for v in range(n):
                if level >> v & 1:
                    nbrs |= adj[v]
            if side == 0:
                if nbrs & color0:
                    bip = 0
            else:
                if nbrs & color1:
                    bip = 0
            level = nbrs & ~(color0 | color1)
            if side == 0:
                color1 |= level
            else:
                color0 |= level
            side ^= 1
        seen |= color0 | color1
        comp_count += 1
        bip_count += bip
    return comp_count, bip_count


def _kappa_at_most(adj, n: int, k: int) -> bool:
    """True iff a connected graph has a vertex cut of size <= k (kappa <= k)."""
    if k >= n - 1:
        return True
    full = (1 << n) - 1
    limit = min(k, n - 2)
    for vmask in range(1, 1 << n):
        pc = vmask.bit_count()
        if pc > limit:
            continue
        allowed = full & ~vmask
        start = (allowed & -allowed).bit_length() - 1
        if _component_mask(adj, n, allowed, start) != allowed:
            return True
    return False


def scan_extremal(
    n: int,
    mode: str,
    alphas,
    directions,
    k: int = 0,
    mask_start: int = 0,
    mask_stop: int | None = None,
    connected_only: bool = True,
    max_sweeps: int = 64,
    tol_factor: float = 1e-12,
):
    """Scan all labeled graphs in a mask range for extremal power sums.

    mode "bipartite": class is bipartite graphs (connected unless
    ``connected_only`` is False). mode "connectivity": class is connected
    graphs with vertex connectivity at most ``k``.

    For each graph the signless-Laplacian eigenvalues are computed, the
    structurally zero ones (one per bipartite component) dropped, and the
    power sum taken at every requested exponent. ``directions[i]`` is +1 to
    maximize and -1 to minimize ``alphas[i]``. Ties keep the lowest mask, so
    results are canonical under mask-range chunking.

    Returns ``(best_values, best_masks, class_count)`` with mask -1 where the
    range contained no class member.
    """
    if not 2 <= n <= MAX_SCAN_VERTICES:
        raise ValueError(f"scan supports 2 <= n <= {MAX_SCAN_VERTICES}, got {n}")
    if mode not in ("bipartite", "connectivity"):
        raise ValueError(f"unknown scan mode {mode!r}")
    alphas = [float(a) for a in alphas]
    directions = [int(d) for d in directions]
    if not alphas or len(alphas) > MAX_SCAN_ALPHAS:
        raise ValueError(f"need 1..{MAX_SCAN_ALPHAS} exponents, got {len(alphas)}")
    if len(directions) != len(alphas):
        raise ValueError("directions must pair up with alphas")
    if any(d not in (-1, 1) for d in directions):
        raise ValueError("directions must be +1 or -1")
    if mode == "connectivity" and not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}")

    pairs = list(combinations(range(n), 2))
    ne = len(pairs)
    if mask_stop is None:
        mask_stop = 1 << ne
    if not (0 <= mask_start <= mask_stop <= 1 << ne):
        raise ValueError("bad mask range")

    na = len(alphas)
    best_vals = [math.nan] * na
    best_masks = [-1] * na
    class_count = 0
    nonconverged = 0

    q = np.zeros((n, n))
    for mask in range(mask_start, mask_stop):
        adj = [0] * n
        for b in range(ne):
            if mask >> b & 1:
                u, v = pairs[b]
                adj[u] |= 1 << v
                adj[v] |= 1 << u

        comp_count, bip_count = _comps_and_bipartite(adj, n)
        if mode == "bipartite":
            if bip_count != comp_count:
                continue
            if connected_only and comp_count != 1:
                continue
        else:
            if comp_count != 1:
                continue
            if not _kappa_at_most(adj, n, k):
                continue
        zero_count = bip_count
        class_count += 1

        q[:] = 0.0
        for v in range(n):
            q[v, v] = adj[v].bit_count()
        for b in range(ne):
            if mask >> b & 1:
                u, v = pairs[b]
                q[u, v] = 1.0
                q[v, u] = 1.0
        values, _, _, converged = jacobi_eigenvalues(q, max_sweeps, tol_factor)
        if not converged:
            nonconverged += 1
            continue
        # ascending with the zero tail skipped; summation order matches the
        # compiled twin bit for bit so tie-breaking agrees across backends
        retained = values[: n - zero_count][::-1]
        for i in range(na):
            ssum = 0.0
            for v in retained:
                ssum += float(v) ** alphas[i]
            if best_masks[i] < 0 or directions[i] * (ssum - best_vals[i]) > 0.0:
                best_vals[i] = ssum
                best_masks[i] = mask

    if nonconverged:
        raise RuntimeError(f"eigensolver failed to converge on {nonconverged} graphs")
    return best_vals, best_masks, class_count
