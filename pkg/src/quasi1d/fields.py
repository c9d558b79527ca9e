"""Field containers and the energy-space functionals.

``SpectralField3D`` stores coefficients c[k, n] over (radial trap mode k,
axial Fourier mode n); ``Field1D`` stores an axial profile.  All
functionals are pure; fields are value-like and cheap to copy.

Norm conventions: with the Parseval-normalized coefficients,

    mass            M(u)  = sum |c|^2                 = int |u|^2 dx
    excitation_sq         = sum (lam_k - 2) |c|^2     (transverse excitation
                                                       above the ground mode;
                                                       zero iff only k = 0)
    axial_grad_sq         = sum xi_n^2 |c|^2          = int |du/dz|^2 dx
    quartic_integral      = int |u|^4 dx              (grid quadrature)

and the energy-space (weighted H^1 + trap) norm is computed spectrally:
``|u|_E^2 = excitation_sq + axial_grad_sq + 3 * mass`` (the trap term
contributes ``<H_y u, u> = excitation_sq + 2 mass``).
"""

from dataclasses import dataclass

import numpy as np

from .basis import AxialGrid, TransverseBasis, to_physical, to_spectral

REAL_PART_TOL = 1e-12


@dataclass
class SpectralField3D:
    """A 3D field in the (trap mode) x (axial Fourier) representation."""

    basis: TransverseBasis
    grid: AxialGrid
    coeffs: np.ndarray          # complex, shape (K, N_z)
    real_valued: bool = False

    @classmethod
    def zero(cls, basis, grid, real=True):
        return cls(basis, grid, np.zeros((basis.mode_count, grid.point_count), dtype=complex), real)

    @classmethod
    def from_values(cls, values, basis, grid, real=None):
        coeffs = to_spectral(values, basis, grid)
        if real is None:
            real = bool(np.abs(np.asarray(values).imag).max(initial=0.0) == 0.0)
        return cls(basis, grid, coeffs, real)

    def values(self) -> np.ndarray:
        """Physical values on the (quad node) x (axial node) grid."""
        return to_physical(self)

    def copy(self):
        return SpectralField3D(self.basis, self.grid, self.coeffs.copy(), self.real_valued)

    def __add__(self, other):
        return SpectralField3D(self.basis, self.grid, self.coeffs + other.coeffs,
                               self.real_valued and getattr(other, "real_valued", False))

    def __sub__(self, other):
        return SpectralField3D(self.basis, self.grid, self.coeffs - other.coeffs,
                               self.real_valued and getattr(other, "real_valued", False))

    def __mul__(self, scalar):
        return SpectralField3D(self.basis, self.grid, self.coeffs * scalar,
                               self.real_valued and np.isrealobj(np.asarray(scalar)))

    __rmul__ = __mul__


@dataclass
class Field1D:
    """An axial profile v(z) on the periodic grid."""

    grid: AxialGrid
    values: np.ndarray          # complex or real, shape (N_z,)

    @property
    def coeffs(self):
        return self.grid.forward(self.values)

    def mass(self) -> float:
        return float(self.grid.spacing * np.sum(np.abs(self.values) ** 2))

    def grad_sq(self) -> float:
        return float(np.sum(self.grid.wavenumbers ** 2 * np.abs(self.coeffs) ** 2))

    def quartic(self) -> float:
        """int |v|^4 dz."""
        return float(self.grid.spacing * np.sum(np.abs(self.values) ** 4))

    def h1_norm(self) -> float:
        return float(np.sqrt(self.mass() + self.grad_sq()))

    def energy_1d(self) -> float:
        """Axial line energy (1/2) int |v'|^2 - (1/8 pi) int |v|^4."""
        return 0.5 * self.grad_sq() - self.quartic() / (8 * np.pi)

    def copy(self):
        return Field1D(self.grid, self.values.copy())


# ---------------------------------------------------------------------------
# functionals on 3D fields
# ---------------------------------------------------------------------------

def mass(u: SpectralField3D) -> float:
    return float(np.sum(np.abs(u.coeffs) ** 2))


def excitation_norm_sq(u: SpectralField3D) -> float:
    """Quadratic form of (trap - ground level); zero iff u is purely k = 0."""
    lam = u.basis.eigenvalues
    return float(np.sum((lam - 2.0)[:, None] * np.abs(u.coeffs) ** 2))


def axial_grad_norm_sq(u: SpectralField3D) -> float:
    return float(np.sum(u.grid.wavenumbers[None, :] ** 2 * np.abs(u.coeffs) ** 2))


def quartic_integral(u: SpectralField3D) -> float:
    U = to_physical(u)
    return float(np.sum(u.basis.quad_weights[:, None] * np.abs(U) ** 4) * u.grid.spacing)


def energy(u: SpectralField3D, omega: float) -> float:
    """Trap-adjusted energy (omega/2)|u|_exc^2 + (1/2)|du/dz|^2 - (1/4)int|u|^4."""
    if omega <= 0:
        raise ValueError("omega must be positive")
    return (0.5 * omega * excitation_norm_sq(u) + 0.5 * axial_grad_norm_sq(u)
            - 0.25 * quartic_integral(u))


def modified_energy(u: SpectralField3D, omega: float) -> float:
    """Energy with the subtracted trap-level mass term restored."""
    return energy(u, omega) + omega * mass(u)


def energy_space_norm_sq(u: SpectralField3D) -> float:
    """Exact weighted-H^1 norm: mass + full gradient + trap weight, spectrally."""
    return excitation_norm_sq(u) + axial_grad_norm_sq(u) + 3.0 * mass(u)


def energy_space_norm(u: SpectralField3D) -> float:
    return float(np.sqrt(max(energy_space_norm_sq(u), 0.0)))


def energy_physical(u: SpectralField3D, omega: float) -> float:
    """Grid-space energy evaluation, independent of the spectral sums.

    Uses the analytic radial derivatives of the basis functions and the
    radial/axial quadrature; the axial derivative is spectral (that is
    the derivative of the periodic discretization).  Agrees with
    :func:`energy` to ~1e-9 relative; used as a cross-check.
    """
    rows = u.grid.inverse(u.coeffs)                       # c_k(z_j)
    U = u.basis.mode_values.T @ rows
    Ur = u.basis.mode_derivatives.T @ rows                # d/dr
    dU = u.grid.derivative(U)
    w, h = u.basis.quad_weights[:, None], u.grid.spacing
    r2 = u.basis.quad_nodes[:, None] ** 2
    exc = np.sum(w * (np.abs(Ur) ** 2 + (r2 - 2.0) * np.abs(U) ** 2)) * h
    dz = np.sum(w * np.abs(dU) ** 2) * h
    l4 = np.sum(w * np.abs(U) ** 4) * h
    return float(0.5 * omega * exc + 0.5 * dz - 0.25 * l4)


# ---------------------------------------------------------------------------
# projections
# ---------------------------------------------------------------------------

def project_lowest(u: SpectralField3D) -> SpectralField3D:
    """Keep only the lowest transverse mode (k = 0 row)."""
    c = np.zeros_like(u.coeffs)
    c[0] = u.coeffs[0]
    return SpectralField3D(u.basis, u.grid, c, u.real_valued)


def project_excited(u: SpectralField3D) -> SpectralField3D:
    """Complement of :func:`project_lowest`."""
    c = u.coeffs.copy()
    c[0] = 0.0
    return SpectralField3D(u.basis, u.grid, c, u.real_valued)


def lowest_mode_profile(u: SpectralField3D) -> Field1D:
    """Axial profile of the lowest-transverse-mode component."""
    vals = u.grid.inverse(u.coeffs[0])
    if u.real_valued:
        vals = vals.real.astype(complex)
    return Field1D(u.grid, vals)


def embed_1d(profile: Field1D, basis: TransverseBasis) -> SpectralField3D:
    """Tensorize an axial profile with the lowest transverse mode."""
    c = np.zeros((basis.mode_count, profile.grid.point_count), dtype=complex)
    c[0] = profile.grid.forward(profile.values)
    return SpectralField3D(basis, profile.grid, c,
                           bool(np.abs(np.asarray(profile.values).imag).max(initial=0.0) < REAL_PART_TOL))


# ---------------------------------------------------------------------------
# inequality diagnostics
# ---------------------------------------------------------------------------

def gn_ratio(u: SpectralField3D) -> float:
    """Anisotropic Gagliardo-Nirenberg ratio.

    Returns ``int|u|^4 / (|P0 u|^3 |P0 du/dz| + |P1 u| |P1 du/dz| |P1 u|_exc^2)``
    which the mode-split Gagliardo-Nirenberg inequality bounds by a
    constant.  Scale invariant (both sides are degree-4 homogeneous).

    Raises
    ------
    ValueError
        If the denominator vanishes (field constant in z): the
        inequality is vacuous there.
    """
    p0, p1 = project_lowest(u), project_excited(u)
    den = (mass(p0) ** 1.5 * axial_grad_norm_sq(p0) ** 0.5
           + mass(p1) ** 0.5 * axial_grad_norm_sq(p1) ** 0.5 * excitation_norm_sq(p1))
    if den == 0.0:
        raise ValueError("inequality vacuous: field has no axial variation")
    return quartic_integral(u) / den


def interpolation_check(u: SpectralField3D, k: int, theta: float):
    """Both sides of the spectral interpolation inequality of order k.

    lhs = |(H - d_z^2)^k u|, rhs = |u|^{1-theta} |(H - d_z^2)^{k/theta} u|^theta,
    computed as diagonal multipliers (lam_j + xi_n^2)^p.  ``k/theta`` must be
    an integer.  Returns ``(lhs, rhs)`` and verifies lhs <= rhs up to 1e-10
    relative slack (discrete Hoelder; violation signals a broken multiplier).
    """
    if not (0.0 < theta < 1.0):
        raise ValueError("theta must lie in (0, 1)")
    p = k / theta
    if abs(p - round(p)) > 1e-9:
        raise ValueError("k/theta must be an integer")
    mult = u.basis.eigenvalues[:, None] + u.grid.wavenumbers[None, :] ** 2
    a2 = np.abs(u.coeffs) ** 2
    lhs = float(np.sqrt(np.sum(mult ** (2 * k) * a2)))
    high = float(np.sqrt(np.sum(mult ** (2 * round(p)) * a2)))
    rhs = float(mass(u) ** ((1 - theta) / 2) * high ** theta)
    if lhs > rhs * (1 + 1e-10):
        raise RuntimeError(f"interpolation inequality violated: {lhs} > {rhs}")
    return lhs, rhs


# ---------------------------------------------------------------------------
# reproducible test corpus
# ---------------------------------------------------------------------------

CORPUS_SEED = 20240 + 517


def make_corpus(basis, grid, count=200, seed=CORPUS_SEED):
    """Fixed-seed band-limited random fields plus soliton embeddings.

    Coefficients decay geometrically in transverse mode and as a Gaussian
    in axial wavenumber (band limit at a quarter of Nyquist), with random
    masses in [0.5, 4].  Deterministic for a given seed.
    """
    from .soliton import soliton

    rng = np.random.default_rng(seed)
    K, N = basis.mode_count, grid.point_count
    xi, xi_band = grid.wavenumbers, np.pi / grid.spacing / 4
    out = []
    for _ in range(count):
        c = rng.standard_normal((K, N)) + 1j * rng.standard_normal((K, N))
        c *= np.exp(-0.7 * np.arange(K))[:, None] * np.exp(-(xi / xi_band) ** 2)[None, :]
        u = SpectralField3D(basis, grid, c, False)
        u.coeffs *= np.sqrt(rng.uniform(0.5, 4.0) / mass(u))
        out.append(u)
    for m in (2 * np.pi, 8 * np.pi, 12 * np.pi):
        out.append(embed_1d(soliton(m, grid).profile, basis))
    return out
