# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels: cyclic Jacobi eigensolver and the labeled-graph scan.

Contracts match ``pykernels`` exactly (same arguments, same returns, same
tie-breaking); the parity tests keep the two in lockstep. Edge-bit ordering
for scan masks is lexicographic over the upper triangle, bit 0 = (0,1).

Fixed buffer sizes assume n <= 10 vertices (45 edge bits) and at most 16
exponents per scan, mirroring the limits in pykernels.
"""

import numpy as np

from libc.math cimport fabs, sqrt
from libc.math cimport pow as cpow
from libc.string cimport memset

MAX_SCAN_VERTICES = 10
MAX_SCAN_ALPHAS = 16


cdef double _fro_norm(double* a, int n) noexcept nogil:
    cdef double s = 0.0
    cdef int i
    for i in range(n * n):
        s += a[i] * a[i]
    return sqrt(s)


cdef double _off_norm(double* a, int n) noexcept nogil:
    cdef double s = 0.0
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i * n + j] * a[i * n + j]
    return sqrt(s)


cdef int _jacobi(double* a, int n, int max_sweeps, double tol_factor,
                 double* resid_out, int* sweeps_out) noexcept nogil:
    """Row-major symmetric n*n matrix; diagonal holds eigenvalues on return."""
    cdef double threshold = tol_factor * (1.0 + _fro_norm(a, n))
    cdef double resid = _off_norm(a, n)
    cdef int sweeps = 0
    cdef int p, q, i
    cdef double apq, app, aqq, tau, t, c, s, aip, aiq
    while resid > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if apq == 0.0:
                    continue
                app = a[p * n + p]
                aqq = a[q * n + q]
                if fabs(apq) <= 1e-18 * (fabs(app) + fabs(aqq)):
                    # below roundoff relative to the diagonal: rotating would
                    # overflow tau, and dropping the entry perturbs the
                    # eigenvalues by far less than the convergence threshold
                    a[p * n + q] = 0.0
                    a[q * n + p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    aip = a[i * n + p]
                    aiq = a[i * n + q]
                    a[i * n + p] = c * aip - s * aiq
                    a[i * n + q] = s * aip + c * aiq
                for i in range(n):
                    aip = a[p * n + i]
                    aiq = a[q * n + i]
                    a[p * n + i] = c * aip - s * aiq
                    a[q * n + i] = s * aip + c * aiq
                a[p * n + p] = app - t * apq
                a[q * n + q] = aqq + t * apq
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
        sweeps += 1
        resid = _off_norm(a, n)
    resid_out[0] = resid
    sweeps_out[0] = sweeps
    return 1 if resid <= threshold else 0


def jacobi_eigenvalues(matrix, int max_sweeps=64, double tol_factor=1e-12):
    """Same contract as pykernels.jacobi_eigenvalues."""
    arr = np.array(matrix, dtype=np.float64, order="C", copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"matrix must be square, got shape {arr.shape}")
    cdef int n = arr.shape[0]
    if n == 0:
        return np.empty(0), 0.0, 0, True
    cdef double[:, ::1] view = arr
    cdef double resid = 0.0
    cdef int sweeps = 0
    cdef int converged
    with nogil:
        converged = _jacobi(&view[0, 0], n, max_sweeps, tol_factor, &resid, &sweeps)
    values = np.sort(np.diagonal(arr))[::-1].copy()
    return values, resid, sweeps, bool(converged)


cdef unsigned int _component_mask(unsigned int* adj, int n, unsigned int allowed,
                                  int start) noexcept nogil:
    cdef unsigned int comp = (<unsigned int>1) << start
    cdef unsigned int frontier = comp
    cdef unsigned int nbrs
    cdef int v
    while frontier:
        nbrs = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nbrs |= adj[v]
        frontier = nbrs & allowed & ~comp
        comp |= frontier
    return comp


cdef void _comps_and_bipartite(unsigned int* adj, int n, int* comp_count,
                               int* bip_count) noexcept nogil:
    cdef unsigned int seen = 0, color0, color1, level, nbrs
    cdef int start, v, side, bip
    comp_count[0] = 0
    bip_count[0] = 0
    for start in range(n):
        if (seen >> start) & 1:
            continue
        color0 = (<unsigned int>1) << start
        color1 = 0
        level = color0
        side = 0
        bip = 1
        while level:
            nbrs = 0
            for v in range(n):
                if (level >> v) & 1:
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
        comp_count[0] += 1
        bip_count[0] += bip


cdef int _popcount(unsigned int x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef int _kappa_at_most(unsigned int* adj, int n, int k) noexcept nogil:
    """Connected graph assumed; 1 iff some vertex cut of size <= k exists."""
    cdef unsigned int full, vmask, allowed
    cdef int pc, limit, start, v
    if k >= n - 1:
        return 1
    full = ((<unsigned int>1) << n) - 1
    limit = k if k < n - 2 else n - 2
    for vmask in range(1, full + 1):
        pc = _popcount(vmask)
        if pc > limit:
            continue
        allowed = full & ~vmask
        start = 0
        for v in range(n):
            if (allowed >> v) & 1:
                start = v
                break
        if _component_mask(adj, n, allowed, start) != allowed:
            return 1
    return 0


def scan_extremal(int n, str mode, alphas, directions, int k=0,
                  mask_start=0, mask_stop=None, bint connected_only=True,
                  int max_sweeps=64, double tol_factor=1e-12):
    """Same contract as pykernels.scan_extremal."""
    if not 2 <= n <= 10:
        raise ValueError(f"scan supports 2 <= n <= 10, got {n}")
    if mode not in ("bipartite", "connectivity"):
        raise ValueError(f"unknown scan mode {mode!r}")
    alphas = [float(a) for a in alphas]
    directions = [int(d) for d in directions]
    if not alphas or len(alphas) > 16:
        raise ValueError(f"need 1..16 exponents, got {len(alphas)}")
    if len(directions) != len(alphas):
        raise ValueError("directions must pair up with alphas")
    if any(d not in (-1, 1) for d in directions):
        raise ValueError("directions must be +1 or -1")
    if mode == "connectivity" and not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}")

    cdef int ne = n * (n - 1) // 2
    if mask_stop is None:
        mask_stop = 1 << ne
    if not (0 <= mask_start <= mask_stop <= 1 << ne):
        raise ValueError("bad mask range")

    cdef int eu[45]
    cdef int ev[45]
    cdef int b = 0
    cdef int u, v
    for u in range(n - 1):
        for v in range(u + 1, n):
            eu[b] = u
            ev[b] = v
            b += 1

    cdef int na = len(alphas)
    cdef double al[16]
    cdef int dirs[16]
    cdef int i
    for i in range(na):
        al[i] = alphas[i]
        dirs[i] = directions[i]

    cdef double best_vals[16]
    cdef long long best_masks[16]
    for i in range(na):
        best_vals[i] = 0.0
        best_masks[i] = -1

    cdef int mode_bip = 1 if mode == "bipartite" else 0
    cdef int conn_only = 1 if connected_only else 0
    cdef unsigned long long mask
    cdef unsigned long long start_m = mask_start
    cdef unsigned long long stop_m = mask_stop
    cdef long long class_count = 0
    cdef long long nonconverged = 0
    cdef unsigned int adj[10]
    cdef double qa[100]
    cdef double vals[10]
    cdef double resid, ssum, key
    cdef int sweeps, conv, comp_count, bip_count, zero_count, j

    with nogil:
        for mask in range(start_m, stop_m):
            for i in range(n):
                adj[i] = 0
            for b in range(ne):
                if (mask >> b) & 1:
                    adj[eu[b]] |= (<unsigned int>1) << ev[b]
                    adj[ev[b]] |= (<unsigned int>1) << eu[b]

            _comps_and_bipartite(adj, n, &comp_count, &bip_count)
            if mode_bip:
                if bip_count != comp_count:
                    continue
                if conn_only and comp_count != 1:
                    continue
            else:
                if comp_count != 1:
                    continue
                if not _kappa_at_most(adj, n, k):
                    continue
            zero_count = bip_count
            class_count += 1

            memset(qa, 0, n * n * sizeof(double))
            for i in range(n):
                qa[i * n + i] = _popcount(adj[i])
            for b in range(ne):
                if (mask >> b) & 1:
                    qa[eu[b] * n + ev[b]] = 1.0
                    qa[ev[b] * n + eu[b]] = 1.0
            conv = _jacobi(qa, n, max_sweeps, tol_factor, &resid, &sweeps)
            if not conv:
                nonconverged += 1
                continue

            for i in range(n):
                vals[i] = qa[i * n + i]
            # insertion sort ascending; structural zeros end up first
            for i in range(1, n):
                key = vals[i]
                j = i - 1
                while j >= 0 and vals[j] > key:
                    vals[j + 1] = vals[j]
                    j -= 1
                vals[j + 1] = key

            for i in range(na):
                ssum = 0.0
                for j in range(zero_count, n):
                    ssum += cpow(vals[j], al[i])
                if best_masks[i] < 0 or dirs[i] * (ssum - best_vals[i]) > 0.0:
                    best_vals[i] = ssum
                    best_masks[i] = <long long> mask

    if nonconverged:
        raise RuntimeError(f"eigensolver failed to converge on {nonconverged} graphs")
    out_vals = [best_vals[i] if best_masks[i] >= 0 else float("nan") for i in range(na)]
    out_masks = [int(best_masks[i]) for i in range(na)]
    return out_vals, out_masks, int(class_count)
