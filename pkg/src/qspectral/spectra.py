"""Signless-Laplacian matrices, their spectra, and power sums of eigenvalues.

The matrix of interest is Q(G) = D(G) + A(G) (degree matrix plus adjacency).
Q is positive semidefinite and its zero eigenvalue has multiplicity equal to
the number of bipartite connected components, which is why spectra here carry
an explicit ``zero_count``: power sums with negative exponents must drop
exactly the structural zeros, no more and no fewer.

All eigenvalues come from the in-house cyclic Jacobi kernel (compiled when
available). Accuracy is engineered for desk-scale matrices, n up to a few
hundred; this is not a general-purpose eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph, components

# default relative scale for deciding an eigenvalue is the structural zero
TOL_ZERO_BASE = 1e-8
# symmetric-PSD slack: eigenvalues of Q may dip this far below zero numerically
TOL_PSD = 1e-9
# generic comparison slack for eigenvalue equalities
TOL_EIG = 1e-9

DEFAULT_MAX_SWEEPS = 64
JACOBI_TOL_FACTOR = 1e-12


class EigensolverError(RuntimeError):
    """Jacobi iteration ran out of sweeps; carries the leftover residual."""

    def __init__(self, message: str, residual: float, sweeps: int):
        super().__init__(message)
        self.residual = residual
        self.sweeps = sweeps


class SpectrumConsistencyError(ValueError):
    """Computed eigenvalues disagree with the declared zero multiplicity."""


def tol_zero_for(scale: float) -> float:
    """Zero threshold scaled by matrix size (max degree for Q matrices)."""
    return TOL_ZERO_BASE * max(1.0, float(scale))


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G) = D(G) + A(G) as a dense symmetric float matrix."""
    q = np.zeros((g.n, g.n))
    for v in range(g.n):
        q[v, v] = g.degree(v)
    for u, v in g.edges:
        q[u, v] = 1.0
        q[v, u] = 1.0
    return q


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order plus the count of structural zeros.

    ``tol_zero`` records the threshold used when the zero tail was validated;
    power sums reuse it to refuse negative exponents on dubious values.
    """

    values: tuple[float, ...]
    zero_count: int
    tol_zero: float = TOL_ZERO_BASE

    def __post_init__(self):
        if not 0 <= self.zero_count <= len(self.values):
            raise ValueError(
                f"zero_count {self.zero_count} out of range for {len(self.values)} values"
            )
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("values must be sorted in descending order")

    @property
    def n(self) -> int:
        return len(self.values)

    def nonzero_values(self) -> tuple[float, ...]:
        """Everything except the ``zero_count`` trailing (smallest) values."""
        return self.values[: len(self.values) - self.zero_count]

    def power_sum(self, alpha: float) -> float:
        return s_alpha(self, alpha)


def eigen_spectrum(
    matrix,
    zero_count: int,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum:
    """Diagonalize a symmetric matrix and validate the declared zero count.

    The tail of ``zero_count`` smallest eigenvalues must vanish to within a
    threshold scaled by the largest diagonal entry; anything else raises
    SpectrumConsistencyError. Non-convergence raises EigensolverError with the
    leftover off-diagonal residual attached.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if m.shape[0] == 0:
        raise ValueError("matrix must be nonempty")
    scale = float(np.max(np.abs(m)))
    if float(np.max(np.abs(m - m.T))) > 1e-12 * (1.0 + scale):
        raise ValueError("matrix must be symmetric")
    n = m.shape[0]
    if not 0 <= zero_count <= n:
        raise ValueError(f"zero_count {zero_count} out of range for n={n}")

    values, residual, sweeps, converged = kernels.jacobi_eigenvalues(
        m, max_sweeps=max_sweeps, tol_factor=JACOBI_TOL_FACTOR
    )
    if not converged:
        raise EigensolverError(
            f"Jacobi did not converge in {sweeps} sweeps (residual {residual:.3e})",
            residual=residual,
            sweeps=sweeps,
        )

    tol = tol_zero_for(float(np.max(np.diag(m))))
    tail = values[n - zero_count :]
    if any(abs(v) > tol for v in tail):
        worst = max(tail, key=abs)
        raise SpectrumConsistencyError(
            f"declared {zero_count} zero eigenvalues but tail value {worst:.3e} "
            f"exceeds tolerance {tol:.3e}"
        )
    if zero_count < n and abs(values[n - zero_count - 1]) <= tol:
        raise SpectrumConsistencyError(
            f"eigenvalue {values[n - zero_count - 1]:.3e} vanishes but only "
            f"{zero_count} zeros were declared"
        )
    # the tail passed the zero test, so report it as exactly zero instead of
    # leaking solver noise into downstream output
    head = tuple(float(v) for v in values[: n - zero_count])
    return Spectrum(head + (0.0,) * zero_count, zero_count, tol)


def spectrum_of(g: Graph, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> Spectrum:
    """Signless-Laplacian spectrum with zero_count = #bipartite components."""
    zero_count = components(g).bipartite_count
    return eigen_spectrum(signless_laplacian(g), zero_count, max_sweeps=max_sweeps)


def s_alpha(spectrum: Spectrum, alpha: float) -> float:
    """Power sum over the nonzero part of the spectrum.

    Conventions: alpha = 0 counts the nonzero eigenvalues; tiny negative
    values (PSD roundoff) are clamped to 0 before positive powers; a negative
    exponent on a value inside the zero threshold is refused since 1/0 has no
    meaningful answer.
    """
    alpha = float(alpha)
    retained = spectrum.nonzero_values()
    if alpha == 0.0:
        return float(len(retained))
    if alpha < 0.0:
        bad = [v for v in retained if v < spectrum.tol_zero]
        if bad:
            raise ValueError(
                f"negative exponent {alpha} on near-zero eigenvalue {min(bad):.3e}"
            )
        return float(sum(v**alpha for v in retained))
    return float(sum(max(v, 0.0) ** alpha for v in retained))


def check_interlacing(outer: Spectrum, inner: Spectrum, tol: float = 1e-8) -> bool:
    """Edge-version interlacing: with both spectra descending and equally long,
    outer[i] >= inner[i] >= outer[i+1] must hold up to ``tol``.

    Spectra of G and G-e have equal length, so unequal lengths are an error,
    not a False.
    """
    a = outer.values
    b = inner.values
    if len(a) != len(b):
        raise ValueError(f"spectra have different sizes: {len(a)} vs {len(b)}")
    n = len(a)
    for i in range(n):
        if b[i] > a[i] + tol:
            return False
        if i + 1 < n and b[i] < a[i + 1] - tol:
            return False
    return True
