"""Discrete transverse/axial representation for cigar-trapped condensates.

The transverse degrees of freedom live in the radial (zero angular momentum)
sector of the 2D quantum harmonic oscillator ``-lap_y + |y|^2``.  The
normalized radial eigenfunctions are

    phi_k(r) = (1/sqrt(pi)) * L_k(r^2) * exp(-r^2/2),      k = 0, 1, ...

with eigenvalues ``4k + 2`` (the full 2D spectrum is ``2, 4, 4, 6, ...``;
restricting to radial functions keeps ``2, 6, 10, ...``, so the gap above
the ground mode is 4 instead of 2).  The axial direction is a uniform
periodic grid handled by the FFT.

Radial quadrature: all integrals the solver needs are of two kinds,
quadratic products ``poly(s) e^{-s}`` and quartic products
``poly(s) e^{-2s}`` in ``s = r^2`` (the cubic nonlinearity produces the
latter).  We use Gauss-Laguerre nodes adapted to the quartic envelope
``e^{-2s}``, which makes every quartic integral of basis functions exact;
the quadratic integrals then converge super-algebraically and reach
1e-13 once ``quad_size >= 4K + 8``, which is the default.  Too few nodes
are detected at build time by the orthonormality check.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import eval_genlaguerre, eval_laguerre, roots_laguerre

from .errors import QuadratureError

ORTHONORMALITY_TOL = 1e-12
QUARTIC_TOL = 1e-9
ROUNDTRIP_TOL = 1e-11


@dataclass(frozen=True)
class TransverseBasis:
    """Radial eigenbasis of the transverse trap, with quadrature.

    Attributes
    ----------
    mode_count : int
        Number of retained radial modes K.
    eigenvalues : ndarray, shape (K,)
        Trap eigenvalues ``4k + 2``.
    quad_nodes : ndarray, shape (Nq,)
        Radial quadrature nodes r_q.
    quad_weights : ndarray, shape (Nq,)
        Weights for the 2D measure: ``sum_q w_q f(r_q) ~ int_{R^2} f(|y|) dy``.
    mode_values : ndarray, shape (K, Nq)
        phi_k(r_q).
    mode_derivatives : ndarray, shape (K, Nq)
        phi_k'(r_q), for independent gradient-based checks.

    Instances are immutable and safe to share across threads.
    """

    mode_count: int
    eigenvalues: np.ndarray
    quad_nodes: np.ndarray
    quad_weights: np.ndarray
    mode_values: np.ndarray
    mode_derivatives: np.ndarray
    quad_size: int
    # analysis operator (w_q * phi_k(r_q)), cached for the inverse transform
    _analysis: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_analysis", self.mode_values * self.quad_weights)
        for arr in (self.eigenvalues, self.quad_nodes, self.quad_weights,
                    self.mode_values, self.mode_derivatives, self._analysis):
            arr.setflags(write=False)

    @property
    def gap(self) -> float:
        """Spectral gap above the lowest transverse mode (= 4 radially)."""
        return float(self.eigenvalues[1] - self.eigenvalues[0]) if self.mode_count > 1 else 4.0


def build_transverse_basis(K: int, quad_size: int | None = None) -> TransverseBasis:
    """Construct the radial trap eigenbasis with an adapted Gauss rule.

    Parameters
    ----------
    K : int
        Number of radial modes (>= 1).
    quad_size : int, optional
        Number of radial quadrature nodes; default ``4K + 8``.  Must be
        at least ``2K`` (quartic exactness); orthonormality additionally
        needs roughly ``4K`` and is verified at build time.

    Raises
    ------
    QuadratureError
        If the rule fails the orthonormality (1e-12) or quartic
        exactness (1e-9) checks -- i.e. the quadrature is underresolved.
    """
    if K < 1:
        raise ValueError("need at least one transverse mode")
    N = int(quad_size) if quad_size is not None else 4 * K + 8
    if N < 2 * K:
        raise ValueError(f"quad_size={N} too small; need >= 2K = {2 * K}")

    # Gauss-Laguerre in t = 2 s = 2 r^2 so that poly * e^{-2s} is exact.
    t, u = roots_laguerre(N)
    s = t / 2.0
    r = np.sqrt(s)
    w = (np.pi / 2.0) * u * np.exp(t)

    lam = 4.0 * np.arange(K) + 2.0
    P = np.array([eval_laguerre(k, s) * np.exp(-s / 2) / np.sqrt(np.pi) for k in range(K)])
    dP = np.empty_like(P)
    for k in range(K):
        # d/dr phi_k = (2 r L'_k(s) - r L_k(s)) e^{-s/2} / sqrt(pi),  L'_k = -L_{k-1}^{(1)}
        lkp = -eval_genlaguerre(k - 1, 1, s) if k >= 1 else np.zeros_like(s)
        dP[k] = (2 * r * lkp - r * eval_laguerre(k, s)) * np.exp(-s / 2) / np.sqrt(np.pi)

    gram = (P * w) @ P.T
    orth_err = float(np.abs(gram - np.eye(K)).max())
    if orth_err > ORTHONORMALITY_TOL:
        raise QuadratureError(
            f"quadrature underresolved: orthonormality error {orth_err:.2e} "
            f"with quad_size={N} (K={K}); increase quad_size (default 4K+8)")

    quart_err = _quartic_check(P, w, min(K, 4))
    if quart_err > QUARTIC_TOL:
        raise QuadratureError(
            f"quadrature underresolved: quartic product error {quart_err:.2e} "
            f"with quad_size={N} (K={K})")

    return TransverseBasis(mode_count=K, eigenvalues=lam, quad_nodes=r,
                           quad_weights=w, mode_values=P, mode_derivatives=dP,
                           quad_size=N)


def _quartic_check(P, w, kmax) -> float:
    """Max error of quadrature on quartic basis products vs closed-form moments."""
    from fractions import Fraction
    from math import comb, factorial

    def lag_coeffs(k):
        return [Fraction((-1) ** i * comb(k, i), factorial(i)) for i in range(k + 1)]

    def poly_mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out

    coeffs = [lag_coeffs(k) for k in range(kmax)]
    err = 0.0
    for j in range(kmax):
        for k in range(j, kmax):
            for l in range(k, kmax):
                for m in range(l, kmax):
                    p = poly_mul(poly_mul(coeffs[j], coeffs[k]), poly_mul(coeffs[l], coeffs[m]))
                    # pi * int (1/pi^2) p(s) e^{-2s} ds, and int s^n e^{-2s} = n!/2^{n+1}
                    exact = float(sum(c * Fraction(factorial(n), 2 ** (n + 1))
                                      for n, c in enumerate(p))) / np.pi
                    approx = float(np.sum(w * P[j] * P[k] * P[l] * P[m]))
                    err = max(err, abs(approx - exact))
    return err


@dataclass(frozen=True)
class AxialGrid:
    """Uniform periodic grid on [-L_z, L_z) with FFT wavenumbers.

    Spectral coefficients are normalized so that Parseval holds against
    the physical measure: ``sum_n |c_n|^2 = h * sum_j |v_j|^2``.
    Immutable; transforms are pure functions.
    """

    half_length: float
    point_count: int
    nodes: np.ndarray
    wavenumbers: np.ndarray
    spacing: float
    forward_factor: float

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.wavenumbers.setflags(write=False)

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Physical samples -> Parseval-normalized Fourier coefficients."""
        return np.fft.fft(values, axis=-1) * self.forward_factor

    def inverse(self, coeffs: np.ndarray) -> np.ndarray:
        """Fourier coefficients -> physical samples."""
        return np.fft.ifft(coeffs / self.forward_factor, axis=-1)

    def derivative(self, values: np.ndarray) -> np.ndarray:
        """Spectral d/dz of physical samples."""
        return np.fft.ifft(1j * self.wavenumbers * np.fft.fft(values, axis=-1), axis=-1)


def build_axial_grid(L_z: float, N_z: int) -> AxialGrid:
    """Uniform periodic axial grid.

    ``N_z`` must be even and at least 8; ``L_z > 0``.
    """
    if L_z <= 0:
        raise ValueError("axial half-length must be positive")
    if N_z % 2 != 0 or N_z < 8:
        raise ValueError(f"N_z={N_z} rejected: need an even number >= 8")
    h = 2.0 * L_z / N_z
    nodes = -L_z + h * np.arange(N_z)
    xi = 2 * np.pi * np.fft.fftfreq(N_z, d=h)
    return AxialGrid(half_length=float(L_z), point_count=int(N_z), nodes=nodes,
                     wavenumbers=xi, spacing=h, forward_factor=h / np.sqrt(2 * L_z))


def to_physical(u) -> np.ndarray:
    """Spectral field -> physical values on (quad node) x (axial node) grid."""
    rows = u.grid.inverse(u.coeffs)
    return u.basis.mode_values.T @ rows


def to_spectral(values: np.ndarray, basis: TransverseBasis, grid: AxialGrid) -> np.ndarray:
    """Physical grid values -> spectral coefficient matrix (K, N_z).

    Inverse of :func:`to_physical` on the truncated space (round-trip
    error below 1e-11).  Shapes must match the basis/grid.
    """
    values = np.asarray(values)
    expected = (basis.quad_nodes.size, grid.point_count)
    if values.shape != expected:
        raise ValueError(f"shape mismatch: got {values.shape}, expected {expected}")
    rows = basis._analysis @ values
    return grid.forward(rows)
