"""Uniform grids, Fourier transform conventions, and Cauchy projections.

Transform conventions used throughout the package, for a function F on the
line and a function r of the spectral variable s:

    hat:    F^(s)  = int e^{-i s x} F(x) dx
    plus:   (Pr)(x) = (1/2pi) int e^{+i s x} r(s) ds     (inverse of hat)
    minus:  (Mr)(x) = (1/2pi) int e^{-i s x} r(s) ds  =  (Pr)(-x)

A SpatialGrid with n points (n a power of two) and spacing h pairs with a
FrequencyGrid of n bins and spacing ds = 2pi/(n h); on that pair the discrete
hat/plus maps are exact inverses of each other (plain DFT with uniform
weight h, which coincides with the trapezoid rule for functions that decay
inside the window).

The Hardy projection cauchy_plus keeps the components e^{+i s zeta} with
zeta > 0 of a frequency-grid function, splitting the ambiguous zeta = 0 bin
half and half so that cauchy_plus - cauchy_minus = identity holds exactly on
the grid.  On the zeta = 0 coefficient the half weight makes C+ the
principal-value (Plemelj) boundary limit; idempotence of C+ is exact on the
complement of that single bin.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatchError

TWO_PI = 2.0 * np.pi

#: relative tail magnitude above which half-line/decay-based formulas warn
TAIL_WARN_RATIO = 1e-6


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class SpatialGrid:
    """Uniform grid x_j = x0 + j*h, j = 0..n-1, with n a power of two."""

    x0: float
    h: float
    n: int

    def __post_init__(self):
        if not (self.h > 0):
            raise ValueError(f"grid spacing must be positive, got h={self.h}")
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 points, got n={self.n}")
        if not _is_power_of_two(self.n):
            raise ValueError(f"grid size must be a power of two, got n={self.n}")

    @classmethod
    def over_window(cls, x0: float, x1: float, n: int) -> "SpatialGrid":
        """Grid covering [x0, x1) with n points, h = (x1-x0)/n."""
        if not x1 > x0:
            raise ValueError(f"empty window [{x0}, {x1})")
        return cls(x0, (x1 - x0) / n, n)

    @property
    def points(self) -> np.ndarray:
        return self.x0 + self.h * np.arange(self.n)

    @property
    def length(self) -> float:
        return self.n * self.h

    def frequency_grid(self) -> "FrequencyGrid":
        """The Fourier-paired frequency grid (ds*h*n = 2pi)."""
        return FrequencyGrid(TWO_PI / (self.n * self.h), self.n, self.x0, self.h)

    def index_of(self, x: float) -> int:
        """Index of the grid node equal to x (raises if x is not a node)."""
        j = int(round((x - self.x0) / self.h))
        if not (0 <= j < self.n) or abs(self.x0 + j * self.h - x) > 1e-9 * max(1.0, abs(x)):
            raise ValueError(f"x={x} is not a node of {self}")
        return j


@dataclass(frozen=True)
class FrequencyGrid:
    """Bins s_k = (k - n/2)*ds, k = 0..n-1; remembers its spatial partner.

    The lowest bin s = -n/2*ds plays the role of the shared Nyquist
    frequency; the grid contains s = 0 at k = n/2.
    """

    ds: float
    n: int
    pair_x0: float
    pair_h: float

    def __post_init__(self):
        if not (self.ds > 0):
            raise ValueError("ds must be positive")
        if not _is_power_of_two(self.n) or self.n < 2:
            raise ValueError(f"frequency grid size must be a power of two >= 2, got {self.n}")

    @property
    def points(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.ds

    def spatial_grid(self) -> SpatialGrid:
        return SpatialGrid(self.pair_x0, self.pair_h, self.n)

    def center_band(self, m: int) -> "FrequencyGrid":
        """Central m bins (same ds); pairs with a centered coarser zeta-grid."""
        if m > self.n or not _is_power_of_two(m):
            raise ValueError(f"band size {m} must be a power of two <= {self.n}")
        hp = TWO_PI / (m * self.ds)
        return FrequencyGrid(self.ds, m, -(m // 2) * hp, hp)

    def band_offset(self, band: "FrequencyGrid") -> int:
        """Index of band bin 0 inside this grid (bins must align)."""
        if abs(band.ds - self.ds) > 1e-12 * self.ds or band.n > self.n:
            raise GridMismatchError("frequency band does not align with parent grid")
        return (self.n - band.n) // 2


@dataclass
class GridFunction:
    """Complex samples attached to a grid."""

    grid: SpatialGrid | FrequencyGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (self.grid.n,):
            raise ValueError(f"got {v.shape[0] if v.ndim == 1 else v.shape} values for a {self.grid.n}-point grid")
        if not np.all(np.isfinite(v.view(np.float64))):
            raise ValueError("grid function contains non-finite values")
        self.values = v

    def copy(self) -> "GridFunction":
        return GridFunction(self.grid, self.values.copy())


def _alternating(n: int) -> np.ndarray:
    s = np.ones(n)
    s[1::2] = -1.0
    return s


def fourier_hat(f: GridFunction) -> GridFunction:
    """F^(s) = int e^{-isx} F(x) dx on the paired frequency grid."""
    g = f.grid
    if not isinstance(g, SpatialGrid):
        raise GridMismatchError("unpaired grids: fourier_hat needs a spatial-grid function")
    fg = g.frequency_grid()
    coeff = np.fft.fft(_alternating(g.n) * f.values)
    vals = g.h * np.exp(-1j * fg.points * g.x0) * coeff
    return GridFunction(fg, vals)


def fourier_plus(r: GridFunction) -> GridFunction:
    """(1/2pi) int e^{+isx} r(s) ds on the paired spatial grid (inverse of hat)."""
    fg = r.grid
    if not isinstance(fg, FrequencyGrid):
        raise GridMismatchError("unpaired grids: fourier_plus needs a frequency-grid function")
    g = fg.spatial_grid()
    vals = _alternating(fg.n) / g.h * np.fft.ifft(np.exp(1j * fg.points * g.x0) * r.values)
    return GridFunction(g, vals)


def fourier_minus(r: GridFunction) -> GridFunction:
    """(1/2pi) int e^{-isx} r(s) ds; equals fourier_plus(r) at -x on the grid."""
    p = fourier_plus(r)
    n = p.grid.n
    idx = (-np.arange(n)) % n  # x_j -> -x_j under the periodic alias
    return GridFunction(p.grid, p.values[idx])


def _zeta_coefficients(f: GridFunction) -> tuple[np.ndarray, SpatialGrid]:
    """Coefficients c_j with f(s_k) = sum_j c_j e^{+i s_k zeta_j}, exact on the grid."""
    fg = f.grid
    zg = fg.spatial_grid()
    c = _alternating(fg.n) * np.fft.fft(np.exp(-1j * fg.points * zg.x0) * f.values) / fg.n
    return c, zg


def _zeta_synthesis(c: np.ndarray, fg: FrequencyGrid, zg: SpatialGrid) -> np.ndarray:
    return np.exp(1j * fg.points * zg.x0) * fg.n * np.fft.ifft(_alternating(fg.n) * c)


def _warn_on_tails(values: np.ndarray, what: str):
    peak = np.max(np.abs(values))
    if peak == 0.0:
        return
    tail = max(abs(values[0]), abs(values[-1]))
    if tail > TAIL_WARN_RATIO * peak:
        warnings.warn(
            f"{what}: tail magnitude {tail:.3e} exceeds {TAIL_WARN_RATIO:.0e} of peak {peak:.3e}; "
            "half-line formulas assume decay inside the window",
            stacklevel=3,
        )


def cauchy_plus(f: GridFunction) -> GridFunction:
    """Hardy projection C+ onto boundary values of upper-half-plane functions.

    Keeps the e^{+i s zeta} components with zeta > 0 and half of the zeta = 0
    component.  C+ applied to a real function g gives g/2 + i*(Hilbert-type
    transform of g)/2, the Plemelj boundary value of the Cauchy integral.
    """
    fg = f.grid
    if not isinstance(fg, FrequencyGrid):
        raise GridMismatchError("unpaired grids: cauchy_plus needs a frequency-grid function")
    _warn_on_tails(f.values, "cauchy_plus")
    c, zg = _zeta_coefficients(f)
    w = np.where(zg.points > 0, 1.0, 0.0)
    w[np.abs(zg.points) < 0.5 * zg.h] = 0.5
    return GridFunction(fg, _zeta_synthesis(w * c, fg, zg))


def cauchy_minus(f: GridFunction) -> GridFunction:
    """C- := C+ - I, so that C+ - C- is exactly the identity on the grid."""
    plus = cauchy_plus(f)
    return GridFunction(f.grid, plus.values - f.values)


def decay_profile(u: GridFunction) -> tuple[GridFunction, GridFunction]:
    """Tail profiles eta(x) = int_x^inf |u| and gamma(x) = (int_x^inf |u|^2)^(1/2).

    Right-to-left cumulative trapezoid over the window; both outputs are
    nonincreasing and real-valued.
    """
    g = u.grid
    a = np.abs(u.values)
    eta = _tail_cumtrapz(a, g.h)
    gamma = np.sqrt(_tail_cumtrapz(a * a, g.h))
    return GridFunction(g, eta), GridFunction(g, gamma)


def _tail_cumtrapz(y: np.ndarray, h: float) -> np.ndarray:
    seg = 0.5 * h * (y[:-1] + y[1:])
    out = np.zeros_like(y)
    out[:-1] = seg[::-1].cumsum()[::-1]
    return out


def trapezoid_weights(n: int, h: float) -> np.ndarray:
    w = np.full(n, h)
    w[0] = 0.5 * h
    w[-1] = 0.5 * h
    return w


def x_norms(values: np.ndarray, h: float) -> tuple[float, float, float]:
    """(L1, L2, L1+L2) norms of grid samples under the trapezoid rule."""
    w = trapezoid_weights(len(values), h)
    a = np.abs(values)
    l1 = float(np.sum(w * a))
    l2 = float(np.sqrt(np.sum(w * a * a)))
    return l1, l2, l1 + l2
