"""Deterministic adaptive 1D integration with caller-supplied breakpoints.

All integrands in this package have compact support and are piecewise
smooth with a handful of known kinks, so the strategy is: split the
interval at the kinks, then bisect each panel adaptively using a paired
7/15 point Gauss-Legendre rule.  Evaluation order is fixed, so results
are bit-stable across runs.  Semi-infinite integrals are deliberately
unsupported; callers must pass exact support endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

# Panel rule pair: 15-point Gauss for the value, 7-point for the error
# reference.  Nodes/weights are generated, not transcribed, so they are
# exact to machine precision.
_X15, _W15 = np.polynomial.legendre.leggauss(15)
_X7, _W7 = np.polynomial.legendre.leggauss(7)


@dataclass(frozen=True)
class IntegrationSpec:
    """Finite integration interval plus interior kink locations."""

    lower: float
    upper: float
    breakpoints: tuple[float, ...] = ()
    abs_tol: float = 1e-10
    max_depth: int = 60

    def __post_init__(self):
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise ValueError("integration endpoints must be finite")
        if not self.lower < self.upper:
            raise ValueError("require lower < upper")
        pts = tuple(sorted(float(b) for b in self.breakpoints
                           if self.lower < b < self.upper))
        object.__setattr__(self, "breakpoints", pts)


class QuadratureResult(NamedTuple):
    value: float
    error: float
    converged: bool


def _panel(f, a: float, b: float) -> tuple[float, float]:
    """One (value, error) estimate on [a, b] from the 15/7 rule pair."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    y15 = np.asarray(f(mid + half * _X15), dtype=float)
    y7 = np.asarray(f(mid + half * _X7), dtype=float)
    if not (np.all(np.isfinite(y15)) and np.all(np.isfinite(y7))):
        raise ValueError(f"non-finite integrand sample in [{a}, {b}]")
    i15 = half * float(np.dot(_W15, y15))
    i7 = half * float(np.dot(_W7, y7))
    return i15, abs(i15 - i7)


def _adaptive(f, a: float, b: float, tol: float, depth: int,
              max_depth: int) -> tuple[float, float, bool]:
    value, err = _panel(f, a, b)
    if err <= tol or (b - a) <= 1e-15 * max(abs(a), abs(b), 1.0):
        return value, err, True
    if depth >= max_depth:
        return value, err, False
    mid = 0.5 * (a + b)
    vl, el, cl = _adaptive(f, a, mid, 0.5 * tol, depth + 1, max_depth)
    vr, er, cr = _adaptive(f, mid, b, 0.5 * tol, depth + 1, max_depth)
    return vl + vr, el + er, cl and cr


def integrate(f: Callable[[float], float],
              spec: IntegrationSpec) -> QuadratureResult:
    """Integrate f over spec's interval, panel by panel.

    The integrand is evaluated only at interior Gauss nodes, so f may be
    singular or undefined exactly at a breakpoint.  If the tolerance is
    not met within max_depth bisections, the best estimate is returned
    with converged=False.  Non-finite samples raise ValueError.
    """
    edges = [spec.lower, *spec.breakpoints, spec.upper]
    total = 0.0
    err = 0.0
    ok = True
    width = spec.upper - spec.lower
    for a, b in zip(edges[:-1], edges[1:]):
        tol = spec.abs_tol * max((b - a) / width, 1e-3)
        v, e, c = _adaptive(f, a, b, tol, 0, spec.max_depth)
        total += v
        err += e
        ok = ok and c
    return QuadratureResult(total, err, ok)


def integrate_between(f, lower, upper, breakpoints=(), abs_tol=1e-10,
                      max_depth=60) -> float:
    """Convenience wrapper returning only the value."""
    spec = IntegrationSpec(lower, upper, tuple(breakpoints), abs_tol, max_depth)
    return integrate(f, spec).value


@dataclass
class CdfTable:
    """Monotone cumulative lookup table with linear-interpolation inverse.

    Built from a non-negative pdf on [0, support_end].  The cumulative
    values are normalized to the total mass, so cdf(support_end) == 1.
    """

    nodes: np.ndarray
    cumulative: np.ndarray
    total_mass: float
    _inv_nodes: np.ndarray = field(repr=False, default=None)
    _inv_cum: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        # Deduplicate flat stretches so the inverse map is single valued.
        cum = self.cumulative
        keep = np.empty(cum.size, dtype=bool)
        keep[0] = True
        keep[1:] = np.diff(cum) > 0
        keep[-1] = True
        self._inv_nodes = self.nodes[keep]
        self._inv_cum = cum[keep]

    def cdf(self, x):
        return np.interp(x, self.nodes, self.cumulative, left=0.0, right=1.0)

    def inverse(self, u):
        return np.interp(u, self._inv_cum, self._inv_nodes,
                         left=self._inv_nodes[0], right=self._inv_nodes[-1])

    def __call__(self, x):
        return self.cdf(x)


def cdf_table(pdf: Callable[[float], float], support_end: float, n: int,
              breakpoints: Sequence[float] = (), abs_tol: float = 1e-10) -> CdfTable:
    """Tabulate the cdf of a non-negative pdf on [0, support_end].

    Masses are accumulated segment by segment with the adaptive rule, so
    the cdf values at the nodes carry quadrature accuracy; between nodes
    the contract is linear interpolation.  Raises on zero total mass.
    """
    if n < 2:
        raise ValueError("need at least two grid nodes")
    nodes = np.linspace(0.0, support_end, n)
    inner = [b for b in breakpoints if 0.0 < b < support_end]
    nodes = np.unique(np.concatenate([nodes, np.asarray(inner, dtype=float)]))
    masses = np.empty(nodes.size)
    masses[0] = 0.0
    for i in range(1, nodes.size):
        masses[i] = integrate_between(pdf, nodes[i - 1], nodes[i],
                                      abs_tol=abs_tol)
    cum = np.cumsum(masses)
    total = float(cum[-1])
    if total <= 0.0:
        raise ValueError("pdf has zero total mass on the support")
    return CdfTable(nodes=nodes, cumulative=cum / total, total_mass=total)


@dataclass
class PiecewiseCdf:
    """Cdf given by a table on [0, table_end] plus an exact tail callable.

    Used for the free-path laws whose support is unbounded: the table
    covers the bulk, and for x beyond it cdf(x) = 1 - tail(x) with tail
    computed from the compactly-supported double-integral form.
    """

    nodes: np.ndarray
    values: np.ndarray
    tail: Callable[[float], float] | None = None

    @property
    def table_end(self) -> float:
        return float(self.nodes[-1])

    def cdf_scalar(self, x: float) -> float:
        if x <= self.nodes[0]:
            return 0.0
        if x <= self.table_end:
            return float(np.interp(x, self.nodes, self.values))
        if self.tail is None:
            return 1.0
        return 1.0 - self.tail(x)

    def __call__(self, x):
        if np.ndim(x) == 0:
            return self.cdf_scalar(float(x))
        x = np.asarray(x, dtype=float)
        out = np.interp(x, self.nodes, self.values, left=0.0, right=1.0)
        if self.tail is not None:
            beyond = x > self.table_end
            if np.any(beyond):
                out[beyond] = [1.0 - self.tail(v) for v in x[beyond]]
        return out
