"""Method-of-images flows in golden annular domains.

A vortex at z0 in the annulus 1 < |z| < phi^(k/2) generates two image
ladders: z_n = z0 * phi^(k n) and z*_n = phi^(k n) / conj(z0).  Truncated
sums run over n in [-N, N] for the first ladder and n in [1-N, N] for the
second; that pairing is the one whose limit matches the closed forms built
from e_phi and the phi-logarithm (the alternative of truncating both ladders
symmetrically converges to the same flow plus a spurious circulation around
the inner circle).

The truncated complex potential carries an additive gauge: rescaling
z -> phi^k z shifts it by the exact constant gamma*k*ln(phi)/(2*pi*i), so
potentials should only ever be compared through differences or through the
velocity; the stream function Im F is single-valued and branch-free.
"""

from __future__ import annotations

import cmath
import csv
import json
import math
from dataclasses import dataclass

import numpy as np

from goldcalc.functions import DEFAULT_TRUNCATION, SeriesTruncation, e_phi_product, ln_phi
from goldcalc.ring import PHI

EXCLUSION_DEFAULT = 1e-9


class SingularityProximityError(ValueError):
    """Evaluation point too close to a vortex or one of its images."""


@dataclass(frozen=True)
class AnnulusSpec:
    """Golden annulus at level k: inner radius 1, outer radius phi^(k/2)."""

    k: int = 1
    truncation: int = 80

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("annulus level k must be a positive integer")
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")

    @property
    def inner_radius(self) -> float:
        return 1.0

    @property
    def outer_radius(self) -> float:
        return PHI ** (self.k / 2)

    @property
    def radius_ratio_sq(self) -> float:
        """q = r2^2 / r1^2 = phi^k."""
        return PHI**self.k

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        return self.inner_radius + margin < abs(z) < self.outer_radius - margin


@dataclass(frozen=True)
class ImageSystem:
    """A point vortex with circulation gamma inside a golden annulus."""

    z0: complex
    gamma: float
    annulus: AnnulusSpec = AnnulusSpec()

    def __post_init__(self) -> None:
        if not self.annulus.contains(self.z0):
            raise ValueError(
                f"vortex must sit strictly inside the annulus "
                f"1 < |z| < {self.annulus.outer_radius:.6f}, got |z0| = {abs(self.z0):.6f}")


def image_positions(sys: ImageSystem, n_range) -> list[tuple[complex, complex]]:
    """Image pairs (z_n, z*_n) = (z0 phi^(k n), phi^(k n)/conj(z0)) for n in n_range."""
    k = sys.annulus.k
    zc = 1.0 / sys.z0.conjugate()
    return [(sys.z0 * PHI ** (k * n), zc * PHI ** (k * n)) for n in n_range]


def _ladders(sys: ImageSystem, fam1_range=None, fam2_range=None):
    n = sys.annulus.truncation
    k = sys.annulus.k
    if fam1_range is None:
        fam1_range = range(-n, n + 1)
    if fam2_range is None:
        fam2_range = range(1 - n, n + 1)
    fam1 = sys.z0 * PHI ** (k * np.asarray(fam1_range, dtype=float))
    fam2 = (1.0 / sys.z0.conjugate()) * PHI ** (k * np.asarray(fam2_range, dtype=float))
    return fam1, fam2


def _check_clearance(z: complex, points: np.ndarray, eps: float) -> None:
    d = np.min(np.abs(points - z))
    if d < eps:
        raise SingularityProximityError(
            f"point {z} within {d:.3g} of a singularity (exclusion {eps:.3g})")


def vortex_potential(sys: ImageSystem, z: complex, eps: float = EXCLUSION_DEFAULT,
                     fam1_range=None, fam2_range=None) -> complex:
    """Truncated image-ladder complex potential F(z).

    Defined up to an additive constant; compare differences, or use Im for the
    stream function.  The paired terms are evaluated as single logarithms of
    quotients so that window reindexing is exact in floating point.
    """
    fam1, fam2 = _ladders(sys, fam1_range, fam2_range)
    _check_clearance(z, np.concatenate([fam1, fam2]), eps)
    m = min(len(fam1), len(fam2))
    # pair from the top of both ladders; the leftover fam1 tail enters bare
    logs = np.log((z - fam1[len(fam1) - m:]) / (z - fam2[len(fam2) - m:]))
    total = complex(np.sum(logs))
    for w in fam1[: len(fam1) - m]:
        total += cmath.log(z - w)
    for w in fam2[: len(fam2) - m]:
        total -= cmath.log(z - w)
    return sys.gamma / (2j * math.pi) * total


def stream_function(sys: ImageSystem, z: complex, eps: float = EXCLUSION_DEFAULT,
                    fam1_range=None, fam2_range=None) -> float:
    """Stream function psi = Im F; single-valued (built from log-moduli only)."""
    return vortex_potential(sys, z, eps, fam1_range, fam2_range).imag


def vortex_velocity(sys: ImageSystem, z: complex, eps: float = EXCLUSION_DEFAULT,
                    fam1_range=None, fam2_range=None) -> complex:
    """Conjugate velocity V(z) = u - i v of the truncated image system."""
    fam1, fam2 = _ladders(sys, fam1_range, fam2_range)
    _check_clearance(z, np.concatenate([fam1, fam2]), eps)
    total = complex(np.sum(1.0 / (z - fam1)) - np.sum(1.0 / (z - fam2)))
    return sys.gamma / (2j * math.pi) * total


def pure_golden_flow(z: complex) -> tuple[complex, float, complex]:
    """Self-similar annular flow F(z) = z^(2 pi i / ln phi) on the principal branch.

    Returns (F, psi, V) with psi = exp(-2 pi theta / ln phi) sin(2 pi log_phi r)
    and V = dF/dz; the flow repeats exactly under z -> phi z and its zero
    streamlines are the circles r = phi^(n/2).
    """
    if z == 0:
        raise ValueError("z = 0 is the vortex singularity of the pure flow")
    lam = 2j * math.pi / math.log(PHI)
    f = cmath.exp(lam * cmath.log(z))
    r, theta = abs(z), cmath.phase(z)
    psi = math.exp(-2 * math.pi * theta / math.log(PHI)) * math.sin(
        2 * math.pi * math.log(r) / math.log(PHI))
    v = lam * f / z
    return f, psi, v


PURE_FLOW_STRENGTH = -4 * math.pi**2 / math.log(PHI)


def wm_fractal(t: float, d: float, t_trunc: int = 60) -> float:
    """Golden Weierstrass-Mandelbrot sum over |n| <= t_trunc of
    (1 - cos(phi^n t)) / phi^(n d); self-similar, W(phi t) = phi^d W(t)."""
    if not 0 < d < 1:
        raise ValueError("fractal parameter d must lie in (0, 1)")
    if t <= 0:
        raise ValueError("t must be positive")
    if t_trunc < 1:
        raise ValueError("t_trunc must be >= 1")
    ns = np.arange(-t_trunc, t_trunc + 1, dtype=float)
    return float(np.sum((1.0 - np.cos(PHI**ns * t)) / PHI ** (ns * d)))


def wm_modulation(t: float, d: float, t_trunc: int = 60) -> complex:
    """Scale-periodic modulation A(t) = sum (1 - exp(i phi^n t)) / (phi^(d n) t^d);
    invariant under t -> phi t, with Re A = W(t) / t^d."""
    if not 0 < d < 1:
        raise ValueError("fractal parameter d must lie in (0, 1)")
    if t <= 0:
        raise ValueError("t must be positive")
    ns = np.arange(-t_trunc, t_trunc + 1, dtype=float)
    return complex(np.sum((1.0 - np.exp(1j * PHI**ns * t)) / PHI ** (ns * d)) / t**d)


# --- closed forms on the k = 1 annulus (1 < |z| < sqrt(phi)) ---------------

def _ephi_ratio_log(z: complex, zs: complex, t: SeriesTruncation) -> complex:
    num = e_phi_product(-PHI * z / zs, t) * e_phi_product(-PHI * zs / z, t)
    den = (e_phi_product(-PHI * z * zs.conjugate(), t)
           * e_phi_product(-PHI**2 / (z * zs.conjugate()), t))
    return cmath.log(num / den)


def _vortex_clearance(z: complex, zs: complex, eps: float, n_span: int = 60) -> None:
    ns = np.arange(-n_span, n_span + 1, dtype=float)
    pts = np.concatenate([zs * PHI**ns, (1.0 / zs.conjugate()) * PHI**ns])
    _check_clearance(z, pts, eps)


def potential_via_e_phi(vortices, z: complex, t: SeriesTruncation = DEFAULT_TRUNCATION,
                        eps: float = EXCLUSION_DEFAULT) -> complex:
    """Complex potential of vortices (z_s, kappa_s) in the k=1 annulus, written
    through the zeros of the phi-exponential instead of explicit image sums.

    Matches the image-ladder potential up to an additive constant; a vortex of
    circulation Gamma corresponds to kappa = -Gamma / (2 pi).
    """
    total = 0j
    for zs, kappa in vortices:
        if kappa == 0:
            continue
        _vortex_clearance(z, zs, eps)
        total += 1j * kappa * (cmath.log(z - zs) + _ephi_ratio_log(z, zs, t))
    return total


def velocity_via_ln_phi(vortices, z: complex, t: SeriesTruncation = DEFAULT_TRUNCATION,
                        eps: float = EXCLUSION_DEFAULT) -> complex:
    """Conjugate velocity of vortices (z_s, kappa_s) in the k=1 annulus via four
    phi-logarithms per vortex (pole-sum form, valid across the annulus)."""
    total = 0j
    for zs, kappa in vortices:
        if kappa == 0:
            continue
        _vortex_clearance(z, zs, eps)
        zc = zs.conjugate()
        total += 1j * kappa / (z - zs)
        total += (1j * PHI / z) * kappa * (
            ln_phi(-z / zs, 1, "pole_sum", t)
            - ln_phi(-z * zc, 1, "pole_sum", t)
            + ln_phi(-PHI / (z * zc), 1, "pole_sum", t)
            - ln_phi(-zs / z, 1, "pole_sum", t))
    return total


# --- sampled fields ---------------------------------------------------------

@dataclass
class FlowGrid:
    """Sampled stream function and velocity on a cartesian grid.

    rows hold (x, y, psi, u, v) for every kept point; bounds and resolution
    record the generating grid.
    """

    rows: list[tuple[float, float, float, float, float]]
    bounds: tuple[float, float, float, float]
    resolution: tuple[int, int]

    FIELDS = ("x", "y", "psi", "u", "v")

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(self.FIELDS)
            for row in self.rows:
                w.writerow([repr(v) for v in row])

    @classmethod
    def from_csv(cls, path) -> "FlowGrid":
        with open(path, newline="") as fh:
            r = csv.reader(fh)
            header = next(r)
            if tuple(header) != cls.FIELDS:
                raise ValueError(f"unexpected header {header!r}")
            rows = [tuple(float(v) for v in line) for line in r]
        return cls(rows=rows, bounds=_bounds_of(rows), resolution=(0, 0))

    def to_json(self, path) -> None:
        data = [dict(zip(self.FIELDS, row)) for row in self.rows]
        with open(path, "w") as fh:
            json.dump(data, fh)

    @classmethod
    def from_json(cls, path) -> "FlowGrid":
        with open(path) as fh:
            data = json.load(fh)
        rows = [tuple(float(rec[f]) for f in cls.FIELDS) for rec in data]
        return cls(rows=rows, bounds=_bounds_of(rows), resolution=(0, 0))


def _bounds_of(rows):
    if not rows:
        return (0.0, 0.0, 0.0, 0.0)
    xs = [r[0] for r in rows]
    ys = [r[1] for r in rows]
    return (min(xs), max(xs), min(ys), max(ys))


def field_grid(annulus: AnnulusSpec, vortices, resolution: tuple[int, int],
               exclusion: float = 1e-6, workers: int = 1) -> FlowGrid:
    """Sample psi and (u, v) on an nx-by-ny grid over the annulus bounding box.

    Points outside the open annulus or within `exclusion` of any image are
    dropped.  vortices is a sequence of (z0, gamma); an empty sequence yields
    an all-zero field.  Evaluation is pure per point, so rows can be computed
    on `workers` threads.
    """
    nx, ny = resolution
    if nx < 2 or ny < 2:
        raise ValueError("resolution must be at least 2x2")
    systems = [ImageSystem(z0, gamma, annulus) for z0, gamma in vortices]
    ladders = [np.concatenate(_ladders(s)) for s in systems]
    r_out = annulus.outer_radius
    xs = np.linspace(-r_out, r_out, nx)
    ys = np.linspace(-r_out, r_out, ny)

    def eval_row(y: float):
        rows = []
        for x in xs:
            z = complex(x, y)
            if not annulus.contains(z):
                continue
            if any(np.min(np.abs(lad - z)) < exclusion for lad in ladders):
                continue
            psi = 0.0
            vel = 0j
            for s in systems:
                psi += stream_function(s, z, eps=exclusion / 2)
                vel += vortex_velocity(s, z, eps=exclusion / 2)
            rows.append((float(x), float(y), psi, vel.real, -vel.imag))
        return rows

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(eval_row, ys))
    else:
        chunks = [eval_row(y) for y in ys]
    rows = [row for chunk in chunks for row in chunk]
    return FlowGrid(rows=rows, bounds=(-r_out, r_out, -r_out, r_out),
                    resolution=(nx, ny))
