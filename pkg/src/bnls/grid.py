"""Uniform periodic grids, spectral operators, and the norms behind every functional.

The box [-L/2, L/2)^d is the computational stand-in for all of R^d: fields of
interest decay fast enough that the periodic wrap is negligible, and a warning
is raised when it is not (see :func:`check_box_adequacy`).

Transform conventions: the forward real FFT is unnormalized and the inverse
carries the 1/M^d factor (numpy's default "backward" norm).  Physical-space
sums are weighted by the cell volume h^d, so Parseval reads

    h^d * sum(u**2) == (h^d / M^d) * sum(w * |rfftn(u)|**2)

where w doubles the interior modes of the half-spectrum axis.  The derivative
seminorms are the same spectral sums weighted by |k|^2 and |k|^4, with the
full symmetric wavenumber (including Nyquist) entering the even symbols.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidFieldError, SingularOperatorError

# Fields whose boundary amplitude exceeds this fraction of their peak are
# probably feeling the periodic wrap.
BOUNDARY_WARN_RATIO = 1e-8


class BoxAdequacyWarning(UserWarning):
    """The field has visible amplitude at the box boundary."""


@dataclass(frozen=True)
class BoxGrid:
    """Uniform periodic grid on [-L/2, L/2)^dim.

    ``points_per_axis`` must be a power of two (>= 32) so transforms stay fast
    and the half-spectrum bookkeeping below is uniform (M is always even).
    """

    dim: int
    points_per_axis: int
    box_length: float

    def __post_init__(self):
        if self.dim not in (1, 2, 3):
            raise ValueError(f"dim must be 1, 2 or 3, got {self.dim}")
        m = self.points_per_axis
        if not isinstance(m, int) or m < 32 or (m & (m - 1)) != 0:
            raise ValueError(f"points_per_axis must be a power of two >= 32, got {m}")
        if not (self.box_length > 0 and np.isfinite(self.box_length)):
            raise ValueError(f"box_length must be positive, got {self.box_length}")

    @property
    def spacing(self) -> float:
        return self.box_length / self.points_per_axis

    @property
    def shape(self) -> tuple:
        return (self.points_per_axis,) * self.dim

    @property
    def size(self) -> int:
        return self.points_per_axis**self.dim

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.dim

    def axis_coordinates(self) -> np.ndarray:
        return -0.5 * self.box_length + self.spacing * np.arange(self.points_per_axis)

    def coordinates(self):
        """Coordinate arrays, one per axis, in 'ij' meshgrid layout."""
        axes = [self.axis_coordinates()] * self.dim
        return np.meshgrid(*axes, indexing="ij")

    def wavenumbers(self) -> np.ndarray:
        """Angular wavenumbers 2*pi*wrap(m)/L along one full-spectrum axis."""
        return 2.0 * np.pi * np.fft.fftfreq(self.points_per_axis, d=self.spacing)

    def k_max(self) -> float:
        """Magnitude of the per-axis Nyquist wavenumber, pi/h."""
        return np.pi / self.spacing


@dataclass(frozen=True)
class Field:
    """Real samples on a :class:`BoxGrid`, immutable once constructed."""

    grid: BoxGrid
    samples: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.float64)
        if arr.size != self.grid.size:
            raise InvalidFieldError(
                f"expected {self.grid.size} samples for {self.grid.shape}, got {arr.size}"
            )
        arr = arr.reshape(self.grid.shape).copy(order="C")
        if not np.all(np.isfinite(arr)):
            raise InvalidFieldError("field samples must be finite (no NaN/Inf)")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.samples)))


@dataclass(frozen=True)
class NormTuple:
    """The four scalars every functional is algebra over.

    mass = ||u||_2^2, grad = ||grad u||_2^2, bilap = ||lap u||_2^2 and
    lp = ||u||_p^p, all for the stated exponent p.
    """

    mass: float
    grad: float
    bilap: float
    lp: float
    p: float

    def as_dict(self) -> dict:
        return {
            "mass": self.mass,
            "grad": self.grad,
            "bilap": self.bilap,
            "lp": self.lp,
            "p": self.p,
        }


@lru_cache(maxsize=64)
def _spectral_tables(grid: BoxGrid):
    """Cached |k|^2 array and Parseval weights on the rfftn spectrum layout."""
    m = grid.points_per_axis
    k_full = 2.0 * np.pi * np.fft.fftfreq(m, d=grid.spacing)
    k_half = 2.0 * np.pi * np.fft.rfftfreq(m, d=grid.spacing)
    axes = [k_full] * (grid.dim - 1) + [k_half]
    mesh = np.meshgrid(*axes, indexing="ij")
    k2 = np.zeros(mesh[0].shape)
    for k in mesh:
        k2 += k * k
    # Half-spectrum double counting: interior modes of the last axis stand for
    # a conjugate pair; m=0 and Nyquist do not.
    weight = np.full(k_half.shape, 2.0)
    weight[0] = 1.0
    weight[-1] = 1.0
    weight = weight.reshape((1,) * (grid.dim - 1) + (-1,))
    k2.setflags(write=False)
    weight.setflags(write=False)
    return k2, weight


def spectrum(u: Field) -> np.ndarray:
    return np.fft.rfftn(u.samples)


def from_spectrum(grid: BoxGrid, spec: np.ndarray) -> Field:
    return Field(grid, np.fft.irfftn(spec, s=grid.shape))


def quadratic_norms(u: Field) -> tuple:
    """(mass, grad, bilap) of a field; the p-independent part of :func:`norms`."""
    g = u.grid
    mass = g.cell_volume * float(np.sum(u.samples * u.samples))
    k2, weight = _spectral_tables(g)
    spec = np.fft.rfftn(u.samples)
    power = weight * (spec.real**2 + spec.imag**2)
    scale = g.cell_volume / g.size
    grad = scale * float(np.sum(k2 * power))
    bilap = scale * float(np.sum(k2 * k2 * power))
    return mass, grad, bilap


def norms(u: Field, p: float) -> NormTuple:
    """All four norms of a field at exponent p > 2.

    mass and lp are physical-space quadrature; grad and bilap are spectral
    sums with the |k|^2 and |k|^4 multipliers.
    """
    if not p > 2:
        raise ValueError(f"norms requires p > 2, got {p}")
    mass, grad, bilap = quadratic_norms(u)
    lp = u.grid.cell_volume * float(np.sum(np.abs(u.samples) ** p))
    return NormTuple(mass=mass, grad=grad, bilap=bilap, lp=lp, p=float(p))


def spectral_mass(u: Field) -> float:
    """||u||_2^2 evaluated on the Fourier side; equals the quadrature mass."""
    g = u.grid
    _, weight = _spectral_tables(g)
    spec = np.fft.rfftn(u.samples)
    return g.cell_volume / g.size * float(np.sum(weight * (spec.real**2 + spec.imag**2)))


def _apply_symbol(u: Field, symbol: np.ndarray) -> Field:
    spec = np.fft.rfftn(u.samples)
    spec *= symbol
    return Field(u.grid, np.fft.irfftn(spec, s=u.grid.shape, axes=range(u.grid.dim)))


def laplacian(u: Field) -> Field:
    k2, _ = _spectral_tables(u.grid)
    return _apply_symbol(u, -k2)


def bilaplacian(u: Field) -> Field:
    k2, _ = _spectral_tables(u.grid)
    return _apply_symbol(u, k2 * k2)


def forward_operator(u: Field, a: float, b: float, w: float) -> Field:
    """(a*lap^2 - b*lap + w) u as a diagonal Fourier multiplier."""
    k2, _ = _spectral_tables(u.grid)
    return _apply_symbol(u, a * k2 * k2 + b * k2 + w)


def inverse_operator(u: Field, a: float, b: float, w: float) -> Field:
    """Solve (a*lap^2 - b*lap + w) v = u exactly in Fourier space.

    Requires w > 0 so the symbol a|k|^4 + b|k|^2 + w is bounded below by w.
    """
    if a < 0 or b < 0:
        raise ValueError(f"operator coefficients must be nonnegative, got a={a}, b={b}")
    if not w > 0:
        raise SingularOperatorError(f"zero-order coefficient must be positive, got w={w}")
    k2, _ = _spectral_tables(u.grid)
    return _apply_symbol(u, 1.0 / (a * k2 * k2 + b * k2 + w))


def lowpass_two_thirds(u: Field) -> Field:
    """Zero all modes with |k| > (2/3) * k_max; optional anti-aliasing filter."""
    k2, _ = _spectral_tables(u.grid)
    cutoff = (2.0 / 3.0) * u.grid.k_max()
    return _apply_symbol(u, (k2 <= cutoff * cutoff).astype(np.float64))


def shift_field(u: Field, shifts) -> Field:
    """Periodic translation: returns w with w(x) = u(x + s), s real per axis.

    Implemented as spectral phase factors, so fractional-cell shifts are exact
    for band-limited content.  The Nyquist mode gets the real (cosine) factor
    to keep the output real-symmetric.
    """
    g = u.grid
    m = g.points_per_axis
    spec = np.fft.rfftn(u.samples)
    shifts = np.atleast_1d(np.asarray(shifts, dtype=np.float64))
    if shifts.size != g.dim:
        raise ValueError(f"need {g.dim} shift components, got {shifts.size}")
    for axis, s in enumerate(shifts):
        if s == 0.0:
            continue
        if axis == g.dim - 1:
            k = 2.0 * np.pi * np.fft.rfftfreq(m, d=g.spacing)
        else:
            k = 2.0 * np.pi * np.fft.fftfreq(m, d=g.spacing)
        phase = np.exp(1j * k * s)
        nyq = k.size - 1 if axis == g.dim - 1 else m // 2
        phase[nyq] = np.cos(k[nyq] * s)
        spec = spec * phase.reshape((1,) * axis + (-1,) + (1,) * (g.dim - 1 - axis))
    return Field(g, np.fft.irfftn(spec, s=g.shape, axes=range(g.dim)))


def mass_centroid_indices(u: Field) -> np.ndarray:
    """Circular-mean centroid of |u|^2, in fractional grid-index units per axis.

    The circular mean is exactly equivariant under integer-cell rolls, which
    is what makes :func:`center_and_align` shift-invariant.
    """
    w = u.samples * u.samples
    if not w.any():
        raise InvalidFieldError("centroid of the zero field is undefined")
    m = u.grid.points_per_axis
    theta = 2.0 * np.pi * np.arange(m) / m
    out = np.empty(u.grid.dim)
    for axis in range(u.grid.dim):
        other = tuple(i for i in range(u.grid.dim) if i != axis)
        marg = w.sum(axis=other) if other else w
        phi = np.arctan2(float(marg @ np.sin(theta)), float(marg @ np.cos(theta)))
        out[axis] = (m * phi / (2.0 * np.pi)) % m
    return out


def center_and_align(u: Field) -> Field:
    """Translate u so its |u|^2 centroid sits at the box center, value there >= 0.

    Canonical representative modulo the translation and sign symmetries; use
    it before comparing two states.
    """
    g = u.grid
    idx = mass_centroid_indices(u)
    shifts = (idx - g.points_per_axis // 2) * g.spacing
    out = shift_field(u, shifts)
    center = (g.points_per_axis // 2,) * g.dim
    if out.samples[center] < 0:
        out = Field(g, -out.samples)
    return out


def boundary_amplitude_ratio(u: Field) -> float:
    """max |u| over the box faces divided by max |u| overall (0 for the zero field)."""
    peak = u.max_abs()
    if peak == 0.0:
        return 0.0
    edge = 0.0
    for axis in range(u.grid.dim):
        for index in (0, -1):
            edge = max(edge, float(np.max(np.abs(np.take(u.samples, index, axis=axis)))))
    return edge / peak


def check_box_adequacy(u: Field, warn_ratio: float = BOUNDARY_WARN_RATIO) -> float:
    """Warn when the field does not decay into the box boundary; returns the ratio."""
    ratio = boundary_amplitude_ratio(u)
    if ratio > warn_ratio:
        warnings.warn(
            f"boundary amplitude is {ratio:.2e} of the peak (threshold {warn_ratio:.0e}); "
            "the box may be too small for this state",
            BoxAdequacyWarning,
            stacklevel=2,
        )
    return ratio


def regrid(u: Field, target: BoxGrid) -> Field:
    """Evaluate the periodic trigonometric interpolant of u on another grid.

    Exact (to roundoff) for band-limited content when the target resolves it.
    Target coordinates are taken modulo the source box, so enlarging the box
    wraps the (negligible) tails of a decaying field.
    """
    if target.dim != u.grid.dim:
        raise ValueError("regrid requires matching dimensions")
    g = u.grid
    m = g.points_per_axis
    spec = np.fft.fftn(u.samples) / g.size
    k = 2.0 * np.pi * np.fft.fftfreq(m, d=g.spacing)
    x = target.axis_coordinates() + u.grid.box_length / 2.0
    basis = np.exp(1j * np.outer(x, k))
    basis[:, m // 2] = np.cos(k[m // 2] * x)
    out = spec
    for axis in range(g.dim):
        out = np.moveaxis(np.tensordot(basis, out, axes=(1, axis)), 0, axis)
    return Field(target, out.real)


def relative_l2_distance(a: Field, b: Field) -> float:
    """||a - b||_2 / max(||a||_2, ||b||_2) on a shared grid."""
    if a.grid != b.grid:
        raise ValueError("fields must share a grid; regrid first")
    diff = a.samples - b.samples
    denom = max(
        float(np.sqrt(np.sum(a.samples**2))), float(np.sqrt(np.sum(b.samples**2)))
    )
    if denom == 0.0:
        return 0.0
    return float(np.sqrt(np.sum(diff**2))) / denom
