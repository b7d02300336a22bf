"""Exact signless-Laplacian spectra for structured families, plus the bound
functions those spectra induce.

Everything here is closed-form arithmetic: no eigensolver is involved. The
numeric pipeline in ``spectra`` recomputes the same quantities independently,
and the test suite holds the two routes against each other.

Families covered: complete graphs, complete bipartite graphs, and the
split-clique join family ``join_split(n, k, r)`` (a k-clique joined to the
disjoint union of two cliques of sizes r and n-k-r). The join family has an
equitable partition into its three blocks, and its two non-obvious
eigenvalues are the roots theta_plus / theta_minus of the 3x3 quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph
from .spectra import TOL_ZERO_BASE, Spectrum, signless_laplacian

# closed-form values this close together are the same eigenvalue
MERGE_TOL = 1e-10
# closed-form values this close to zero are the structural zero
ZERO_CLAMP_TOL = 1e-9


class NonEquitableError(ValueError):
    """A claimed equitable partition has uneven block row sums."""


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Spectrum as (eigenvalue, multiplicity) pairs, descending by eigenvalue."""

    pairs: tuple[tuple[float, int], ...]

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def zero_count(self) -> int:
        return sum(m for v, m in self.pairs if v == 0.0)

    def values(self) -> tuple[float, ...]:
        out: list[float] = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return tuple(out)

    def s_alpha(self, alpha: float) -> float:
        """Power sum over the nonzero eigenvalues (zeros never contribute)."""
        alpha = float(alpha)
        total = 0.0
        for v, m in self.pairs:
            if v == 0.0:
                continue
            total += m * v**alpha
        return total

    def to_spectrum(self) -> Spectrum:
        return Spectrum(self.values(), self.zero_count, TOL_ZERO_BASE)


def _build(raw_pairs) -> ClosedFormSpectrum:
    """Drop empty multiplicities, clamp near-zeros, merge equal values."""
    kept: list[tuple[float, int]] = []
    for v, m in raw_pairs:
        if m < 0:
            raise ValueError(f"negative multiplicity {m}")
        if m == 0:
            continue
        v = float(v)
        if abs(v) <= ZERO_CLAMP_TOL:
            v = 0.0
        if v < 0.0:
            raise ValueError(f"negative eigenvalue {v} in a PSD spectrum")
        kept.append((v, int(m)))
    kept.sort(key=lambda p: -p[0])
    merged: list[tuple[float, int]] = []
    for v, m in kept:
        if merged and merged[-1][0] - v <= MERGE_TOL:
            merged[-1] = (merged[-1][0], merged[-1][1] + m)
        else:
            merged.append((v, m))
    return ClosedFormSpectrum(tuple(merged))


def spectrum_complete(n: int) -> ClosedFormSpectrum:
    """K_n: eigenvalue 2n-2 once and n-2 with multiplicity n-1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return _build([(2 * n - 2, 1), (n - 2, n - 1)])


def spectrum_complete_bipartite(r: int, s: int) -> ClosedFormSpectrum:
    """K_{r,s}: eigenvalues r+s, r (s-1 times), s (r-1 times), and one zero."""
    if r < 1 or s < 1:
        raise ValueError(f"need r, s >= 1, got r={r}, s={s}")
    return _build([(r + s, 1), (r, s - 1), (s, r - 1), (0, 1)])


def join_split_theta(n: int, k: int, r: int) -> tuple[float, float]:
    """The two quotient-only eigenvalues of join_split(n, k, r)."""
    _validate_join_split(n, k, r)
    radicand = (k - 2 * n) ** 2 + 16 * r * (k - n + r)
    if radicand < 0:
        raise ValueError(f"negative radicand {radicand} for n={n}, k={k}, r={r}")
    half_root = 0.5 * math.sqrt(radicand)
    base = n - 2 + 0.5 * k
    theta_plus = base + half_root
    theta_minus = base - half_root
    if abs(theta_minus) <= ZERO_CLAMP_TOL:
        theta_minus = 0.0
    return theta_plus, theta_minus


def _validate_join_split(n: int, k: int, r: int) -> None:
    if not 1 <= k <= n - 2:
        raise ValueError(f"need 1 <= k <= n-2, got n={n}, k={k}")
    if not 1 <= r or 2 * r > n - k:
        raise ValueError(f"need 1 <= r <= (n-k)/2, got n={n}, k={k}, r={r}")


def spectrum_join_split(n: int, k: int, r: int) -> ClosedFormSpectrum:
    """Full spectrum of join_split(n, k, r) for 1 <= k <= n-2, 1 <= r <= (n-k)/2.

    Fixed part: n-2 with multiplicity k, k+r-2 with multiplicity r-1, and
    n-r-2 with multiplicity n-k-r-1; the quotient contributes theta_plus and
    theta_minus once each.
    """
    theta_plus, theta_minus = join_split_theta(n, k, r)
    return _build(
        [
            (n - 2, k),
            (k + r - 2, r - 1),
            (n - r - 2, n - k - r - 1),
            (theta_plus, 1),
            (theta_minus, 1),
        ]
    )


def join_split_quotient(n: int, k: int, r: int) -> np.ndarray:
    """Quotient matrix of the three-block equitable partition of join_split."""
    _validate_join_split(n, k, r)
    c = n - k - r
    return np.array(
        [
            [n + k - 2.0, float(r), float(c)],
            [float(k), 2.0 * r + k - 2.0, 0.0],
            [float(k), 0.0, 2.0 * (n - r - 1.0) - k],
        ]
    )


def join_split_partition(n: int, k: int, r: int) -> tuple[tuple[int, ...], ...]:
    """The three vertex blocks matching the fixed labeling of join_split."""
    _validate_join_split(n, k, r)
    return (
        tuple(range(k)),
        tuple(range(k, k + r)),
        tuple(range(k + r, n)),
    )


def quotient_matrix(g: Graph, cells) -> np.ndarray:
    """Block row-sum matrix of Q(G) over a partition, validating equitability.

    Each cell of the partition must see a constant Q row sum into every other
    cell; a violation raises NonEquitableError naming the offending block.
    """
    cells = [tuple(c) for c in cells]
    flat = [v for c in cells for v in c]
    if sorted(flat) != list(range(g.n)):
        raise ValueError("cells must partition the vertex set exactly")
    if any(len(c) == 0 for c in cells):
        raise ValueError("empty cell in partition")
    q = signless_laplacian(g)
    m = len(cells)
    out = np.zeros((m, m))
    for i, ci in enumerate(cells):
        for j, cj in enumerate(cells):
            sums = [float(sum(q[u, v] for v in cj)) for u in ci]
            if max(sums) - min(sums) > 1e-9:
                raise NonEquitableError(
                    f"cell pair ({i}, {j}): row sums vary from {min(sums)} to {max(sums)}"
                )
            out[i, j] = sums[0]
    return out


def quotient_eigenvalues(r_matrix, cell_sizes) -> np.ndarray:
    """Eigenvalues (descending) of a quotient matrix of a symmetric matrix.

    The quotient itself is not symmetric, but conjugating by the square roots
    of the cell sizes makes it so; that similarity preserves eigenvalues and
    lets the symmetric Jacobi kernel do the work.
    """
    r = np.asarray(r_matrix, dtype=float)
    sizes = np.asarray(list(cell_sizes), dtype=float)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ValueError(f"quotient matrix must be square, got {r.shape}")
    if sizes.shape != (r.shape[0],) or np.any(sizes <= 0):
        raise ValueError("cell_sizes must be positive and match the matrix")
    root = np.sqrt(sizes)
    sym = r * root[:, None] / root[None, :]
    drift = float(np.max(np.abs(sym - sym.T)))
    if drift > 1e-9 * (1.0 + float(np.max(np.abs(sym)))):
        raise ValueError(
            f"size-weighted quotient is not symmetric (drift {drift:.3e}); "
            "was this really a quotient of a symmetric matrix?"
        )
    sym = 0.5 * (sym + sym.T)
    values, residual, sweeps, converged = kernels.jacobi_eigenvalues(sym)
    if not converged:
        raise RuntimeError(f"Jacobi stalled on quotient (residual {residual:.3e})")
    return values


# ---------------------------------------------------------------------------
# bound functions

def bipartite_bound(n: int, alpha: float) -> float:
    """Power sum of the balanced complete bipartite graph on n vertices.

    Equals s_alpha of K_{floor(n/2), ceil(n/2)}: the conjectured extremal
    value among bipartite graphs (maximum for positive exponents, minimum for
    negative ones).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alpha = float(alpha)
    h = n // 2
    hc = n - h
    return float(n) ** alpha + (h - 1) * float(hc) ** alpha + (hc - 1) * float(h) ** alpha


def connectivity_bound(n: int, k: int, alpha: float) -> float:
    """Power sum of join_split(n, k, 1), the conjectured extremal graph among
    connected graphs with vertex connectivity at most k.

    This is formula-first: zero-multiplicity terms drop out, but a zero
    eigenvalue raised to a negative exponent leaves the bound undefined and
    raises (only join_split(3, 1, 1) hits this).
    """
    if not 1 <= k <= n - 2:
        raise ValueError(f"need 1 <= k <= n-2, got n={n}, k={k}")
    alpha = float(alpha)
    theta_plus, theta_minus = join_split_theta(n, k, 1)
    terms = [
        (float(n - 2), k),
        (float(n - 3), n - k - 2),
        (theta_plus, 1),
        (theta_minus, 1),
    ]
    total = 0.0
    for base, mult in terms:
        if mult == 0:
            continue
        if base <= ZERO_CLAMP_TOL and alpha < 0:
            raise ValueError(
                f"bound undefined at n={n}, k={k}: zero eigenvalue with exponent {alpha}"
            )
        total += mult * base**alpha
    return total
