"""Potentials, the Riccati substitution q = u' + u^2 in weak form, and the
built-in example families.

Since u is only L1-cap-L2 the image q = u' + u^2 lives in H^{-1}; it is kept
as a weak-form record (the square part u^2, the part u still to be
differentiated, and explicit delta atoms at declared jump locations) so that
every pairing <q, phi> stays computable without ever differentiating rough
samples pointwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvariantViolation
from .grids import GridFunction, SpatialGrid, TAIL_WARN_RATIO, trapezoid_weights, x_norms


@dataclass
class Potential:
    """Complex samples of u on a uniform grid, with decay metadata.

    ``jumps`` lists declared jump discontinuities of u as (location, jump)
    pairs; they become delta atoms of u' under the Riccati substitution.
    Nodes that coincide with a declared jump carry the mean of the one-sided
    limits, which keeps trapezoid quadrature exact across the jump.
    """

    samples: GridFunction
    real_valued: bool = False
    jumps: list[tuple[float, complex]] = field(default_factory=list)

    def __post_init__(self):
        if not isinstance(self.samples.grid, SpatialGrid):
            raise ValueError("a potential must be sampled on a spatial grid")
        if self.real_valued and np.max(np.abs(self.samples.values.imag)) != 0.0:
            raise InvariantViolation("potential flagged real_valued has nonzero imaginary part")
        l1, l2, lx = x_norms(self.samples.values, self.grid.h)
        self.norm_l1, self.norm_l2, self.norm_x = l1, l2, lx

    @property
    def grid(self) -> SpatialGrid:
        return self.samples.grid

    @property
    def values(self) -> np.ndarray:
        return self.samples.values


@dataclass
class MiuraPotential:
    """Weak-form record of q = u' + u^2."""

    square_part: GridFunction     # u^2 samples, integrated directly
    derivative_part: GridFunction  # u samples, paired through -int u phi'
    atoms: list[tuple[float, complex]] = field(default_factory=list)

    @property
    def grid(self) -> SpatialGrid:
        return self.square_part.grid


@dataclass
class ZeroEnergySolution:
    """Positive solution phi = exp(int_0^x u) of -phi'' + q phi = 0."""

    phi: GridFunction

    def __post_init__(self):
        v = self.phi.values
        if np.max(np.abs(v.imag)) != 0.0 or np.min(v.real) <= 0.0:
            raise InvariantViolation("zero-energy solution must be strictly positive real")


def miura_map(u: Potential) -> MiuraPotential:
    """q = u' + u^2 as a weak-form record; declared jumps of u become atoms."""
    usq = GridFunction(u.grid, u.values * u.values)
    atoms = [(x, w) for x, w in u.jumps]
    return MiuraPotential(usq, u.samples.copy(), atoms)


def miura_pairing(q: MiuraPotential, phi: GridFunction) -> complex:
    """<q, phi> = -int u phi' + int u^2 phi + sum_k w_k phi(loc_k).

    phi' is formed by centered differences (one-sided at the window ends),
    so the pairing is representation-independent to O(h^2).
    """
    g = q.grid
    if phi.grid != g:
        raise ValueError("test function must live on the potential grid")
    peak = np.max(np.abs(phi.values))
    if peak > 0 and max(abs(phi.values[0]), abs(phi.values[-1])) > TAIL_WARN_RATIO * peak:
        warnings.warn("miura_pairing: test function does not decay inside the window", stacklevel=2)
    dphi = np.gradient(phi.values, g.h)
    w = trapezoid_weights(g.n, g.h)
    total = -np.sum(w * q.derivative_part.values * dphi)
    total += np.sum(w * q.square_part.values * phi.values)
    for loc, weight in q.atoms:
        j = g.index_of(loc)  # raises if the atom is off-grid
        total += weight * phi.values[j]
    return complex(total)


def zero_energy_solution(u: Potential) -> ZeroEnergySolution:
    """phi(x) = exp(int_0^x u) by cumulative trapezoid, normalized phi(0) = 1."""
    if not u.real_valued:
        raise InvariantViolation("zero_energy_solution requires real-valued u")
    g = u.grid
    vals = u.values.real
    integral = np.concatenate(([0.0], np.cumsum(0.5 * g.h * (vals[:-1] + vals[1:]))))
    x = g.points
    # shift the antiderivative so it vanishes at x = 0 (interpolated if off-grid)
    i0 = float(np.interp(0.0, x, integral))
    phi = np.exp(integral - i0)
    return ZeroEnergySolution(GridFunction(g, phi))


# ---------------------------------------------------------------------------
# example potential families


def _bump(x: np.ndarray) -> np.ndarray:
    """Quintic smoothstep bump: 1 on [-1, 1], 0 outside (-2, 2), C^2 in between."""
    t = np.clip(np.abs(x) - 1.0, 0.0, 1.0)
    s = t * t * t * (10.0 - 15.0 * t + 6.0 * t * t)
    return 1.0 - s


def _gaussian(grid: SpatialGrid, amp: float, width: float, center: float) -> Potential:
    x = grid.points
    vals = amp * np.exp(-((x - center) ** 2) / (2.0 * width * width))
    return Potential(GridFunction(grid, vals), real_valued=True)


def _sech(grid: SpatialGrid, amp: float, width: float, k: float) -> Potential:
    x = grid.points
    vals = amp / np.cosh(x / width)
    if k != 0.0:
        return Potential(GridFunction(grid, vals * np.exp(1j * k * x)), real_valued=False)
    return Potential(GridFunction(grid, vals), real_valued=True)


def _box(grid: SpatialGrid, alpha: float, a: float, b: float) -> Potential:
    if not b > a:
        raise ValueError(f"box needs a < b, got a={a}, b={b}")
    x = grid.points
    vals = np.where((x > a) & (x < b), alpha, 0.0).astype(float)
    # nodes on the jump carry the mean of the one-sided limits
    for edge in (a, b):
        on_node = np.abs(x - edge) < 1e-12 * max(1.0, abs(edge))
        vals[on_node] = 0.5 * alpha
    jumps = [] if alpha == 0.0 else [(a, complex(alpha)), (b, complex(-alpha))]
    return Potential(GridFunction(grid, vals), real_valued=True, jumps=jumps)


def _oscillatory(grid: SpatialGrid, alpha: float, beta: float) -> Potential:
    if not alpha > 1:
        raise ValueError(f"oscillatory family requires alpha > 1, got alpha={alpha}")
    if not beta > alpha + 1:
        raise ValueError(f"oscillatory family requires beta > alpha + 1, got beta={beta}")
    x = np.abs(grid.points)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where(x > 0, np.sin(x**beta) / x**alpha, 0.0)
    return Potential(GridFunction(grid, vals), real_valued=True)


def _logbump(grid: SpatialGrid, alpha: float) -> Potential:
    if not alpha > 0:
        raise ValueError(f"logbump family requires alpha > 0, got alpha={alpha}")
    x = grid.points
    with np.errstate(divide="ignore"):
        vals = alpha * _bump(x) * np.log(np.abs(x))
    # the node at x = 0 gets the cell average of log|x| over [-h/2, h/2]
    at_zero = np.abs(x) < 0.5 * grid.h
    vals[at_zero] = alpha * (np.log(0.5 * grid.h) - 1.0)
    return Potential(GridFunction(grid, vals), real_valued=True)


_FAMILIES = {
    "zero": ((), "u = 0"),
    "gaussian": (("amp", "width", "center"), "amp * exp(-(x-center)^2 / (2 width^2))"),
    "sech": (("amp", "width", "k"), "amp * sech(x/width) * exp(i k x)"),
    "box": (("alpha", "a", "b"), "alpha on (a, b), jumps declared at the edges"),
    "oscillatory": (("alpha", "beta"), "|x|^-alpha * sin(|x|^beta), needs alpha > 1, beta > alpha+1"),
    "logbump": (("alpha",), "alpha * bump(x) * log|x|, bump = 1 on (-1,1), 0 outside (-2,2)"),
}


def example_families() -> dict[str, tuple[tuple[str, ...], str]]:
    """Names, parameters and formulas of the built-in families."""
    return dict(_FAMILIES)


def example_potential(name: str, params: dict[str, float] | None, grid: SpatialGrid) -> Potential:
    """Sample a named example family on the given grid."""
    if name not in _FAMILIES:
        raise ValueError(f"unknown potential family '{name}'; known: {', '.join(_FAMILIES)}")
    p = dict(params or {})
    unknown = set(p) - set(_FAMILIES[name][0])
    if unknown:
        raise ValueError(f"family '{name}' does not take parameter(s) {sorted(unknown)}")
    if name == "zero":
        return Potential(GridFunction(grid, np.zeros(grid.n)), real_valued=True)
    if name == "gaussian":
        return _gaussian(grid, p.get("amp", 1.0), p.get("width", 1.0), p.get("center", 0.0))
    if name == "sech":
        return _sech(grid, p.get("amp", 1.0), p.get("width", 1.0), p.get("k", 0.0))
    if name == "box":
        return _box(grid, p.get("alpha", 1.0), p.get("a", -1.0), p.get("b", 1.0))
    if name == "oscillatory":
        return _oscillatory(grid, p.get("alpha", 2.0), p.get("beta", 4.0))
    return _logbump(grid, p.get("alpha", 1.0))
