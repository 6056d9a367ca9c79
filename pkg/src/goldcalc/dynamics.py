"""Vortex motion in the golden annulus 1 < |z| < sqrt(phi).

The velocity of each vortex combines the direct Biot-Savart terms with the
closed-form image contribution written through phi-logarithms (pole-sum form,
absolutely convergent).  Image strengths follow the convention
kappa = -Gamma / (2 pi), which makes the single-vortex right-hand side agree
with the uniform-rotation law and makes a vortex at the geometric-mean radius
phi^(1/4) exactly stationary.
"""

from __future__ import annotations

import cmath
import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from goldcalc.ring import PHI

SQRT_PHI = math.sqrt(PHI)
GEOMETRIC_MEAN_RADIUS = PHI**0.25
COLLISION_DISTANCE = 1e-6


class VortexEscapeError(RuntimeError):
    def __init__(self, step: int, index: int, z: complex):
        super().__init__(f"vortex {index} left the annulus at step {step} (|z| = {abs(z):.6f})")
        self.step = step
        self.index = index


class VortexCollisionError(RuntimeError):
    def __init__(self, step: int | None, i: int, j: int, dist: float):
        where = f"at step {step}" if step is not None else "during evaluation"
        super().__init__(f"vortices {i} and {j} within {dist:.3g} {where}")
        self.step = step
        self.pair = (i, j)


@dataclass(frozen=True)
class VortexState:
    positions: tuple[complex, ...]
    circulations: tuple[float, ...]
    time: float = 0.0

    def __post_init__(self) -> None:
        if len(self.positions) != len(self.circulations):
            raise ValueError("positions and circulations must have equal length")
        for z in self.positions:
            if not 1.0 < abs(z) < SQRT_PHI:
                raise ValueError(
                    f"vortex at |z| = {abs(z):.6f} outside open annulus (1, sqrt(phi))")

    @property
    def n(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class IntegratorConfig:
    dt: float
    steps: int
    scheme: str = "rk4"
    image_truncation: int = 100

    def __post_init__(self) -> None:
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.scheme != "rk4":
            raise ValueError(f"unsupported scheme {self.scheme!r}")
        if self.image_truncation < 10:
            raise ValueError("image_truncation must be >= 10")


def _pole_powers(trunc: int) -> np.ndarray:
    return PHI ** np.arange(1, trunc + 1)


def _lnphi_pole(args: np.ndarray, poles: np.ndarray) -> np.ndarray:
    """Ln at base phi of (1 + args), pole-sum form, vectorized over args."""
    return (PHI - 1.0) * np.sum(args[..., None] / (poles + args[..., None]), axis=-1)


def single_vortex_omega(r: float, kappa: float, trunc: int = 100) -> float:
    """Angular velocity of one vortex of strength kappa at radius r.

    omega = (phi kappa / r^2) [Ln(1 - r^2) - Ln(1 - phi/r^2)]; zero exactly at
    the geometric-mean radius r = phi^(1/4).
    """
    if not 1.0 < r < SQRT_PHI:
        raise ValueError(f"radius must lie in (1, sqrt(phi)), got {r:.6f}")
    if kappa == 0:
        return 0.0
    poles = _pole_powers(trunc)
    vals = _lnphi_pole(np.array([-(r * r), -PHI / (r * r)]), poles)
    return PHI * kappa / (r * r) * float(vals[0] - vals[1])


def n_vortex_rhs(state: VortexState, trunc: int = 100) -> list[complex]:
    """dz_l/dt for every vortex: direct pair terms plus all image ladders."""
    zs = np.asarray(state.positions, dtype=complex)
    gammas = np.asarray(state.circulations, dtype=float)
    n = len(zs)
    for i in range(n):
        for j in range(i + 1, n):
            d = abs(zs[i] - zs[j])
            if d < COLLISION_DISTANCE:
                raise VortexCollisionError(None, i, j, d)
    poles = _pole_powers(trunc)
    kappas = -gammas / (2 * math.pi)
    zdot_bar = np.zeros(n, dtype=complex)
    zc = np.conj(zs)
    for l in range(n):
        zl = zs[l]
        for j in range(n):
            if j != l:
                zdot_bar[l] += gammas[j] / (2j * math.pi * (zl - zs[j]))
        args = np.concatenate([-zl / zs, -zl * zc, -PHI / (zl * zc), -zs / zl])
        lnp = _lnphi_pole(args, poles).reshape(4, n)
        zdot_bar[l] += np.sum((1j * PHI / zl) * kappas * (lnp[0] - lnp[1] + lnp[2] - lnp[3]))
    return [complex(v) for v in np.conj(zdot_bar)]


@dataclass
class Trajectory:
    states: list[VortexState] = field(default_factory=list)

    def to_csv(self, path) -> None:
        """Rows step,t,vortex_index,x,y for every recorded state."""
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["step", "t", "vortex_index", "x", "y"])
            for step, st in enumerate(self.states):
                for i, z in enumerate(st.positions):
                    w.writerow([step, repr(st.time), i, repr(z.real), repr(z.imag)])


def integrate(state: VortexState, cfg: IntegratorConfig) -> Trajectory:
    """Fixed-step RK4 evolution; aborts on boundary escape or near-collision."""
    zs = np.asarray(state.positions, dtype=complex)
    gammas = np.asarray(state.circulations, dtype=float)

    def rhs(z_arr: np.ndarray) -> np.ndarray:
        st = object.__new__(VortexState)  # skip domain validation inside stages
        object.__setattr__(st, "positions", tuple(z_arr))
        object.__setattr__(st, "circulations", tuple(gammas))
        object.__setattr__(st, "time", 0.0)
        return np.asarray(n_vortex_rhs(st, cfg.image_truncation), dtype=complex)

    def scan_events(z_arr: np.ndarray, step: int) -> None:
        for i, z in enumerate(z_arr):
            if not 1.0 < abs(z) < SQRT_PHI:
                raise VortexEscapeError(step, i, complex(z))
        for i in range(len(z_arr)):
            for j in range(i + 1, len(z_arr)):
                d = abs(z_arr[i] - z_arr[j])
                if d < COLLISION_DISTANCE:
                    raise VortexCollisionError(step, i, j, d)

    scan_events(zs, 0)
    v0 = rhs(zs)
    vmax = float(np.max(np.abs(v0))) if len(zs) else 0.0
    scale = _min_separation(zs)
    if vmax * cfg.dt > 0.5 * scale:
        raise ValueError(
            f"dt too large: dt*|v|max = {vmax * cfg.dt:.3g} exceeds half the "
            f"smallest separation {scale:.3g}")

    traj = Trajectory([state])
    t = state.time
    for step in range(1, cfg.steps + 1):
        k1 = rhs(zs)
        k2 = rhs(zs + 0.5 * cfg.dt * k1)
        k3 = rhs(zs + 0.5 * cfg.dt * k2)
        k4 = rhs(zs + cfg.dt * k3)
        zs = zs + cfg.dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        t += cfg.dt
        scan_events(zs, step)
        traj.states.append(VortexState(tuple(complex(z) for z in zs),
                                       tuple(gammas), t))
    return traj


def _min_separation(zs: np.ndarray) -> float:
    """Smallest of: pairwise distances and distances to both walls."""
    best = float("inf")
    for i, z in enumerate(zs):
        best = min(best, abs(z) - 1.0, SQRT_PHI - abs(z))
        for j in range(i + 1, len(zs)):
            best = min(best, abs(zs[i] - zs[j]))
    return best


def _log_abs_e_phi(w: complex, factors: int = 140) -> float:
    """ln |e_phi(w)| via the Euler product."""
    ns = np.arange(factors)
    return float(np.sum(np.log(np.abs(1.0 + w / PHI ** (ns + 2)))))


def _image_log_term(zi: complex, zj: complex) -> float:
    return (_log_abs_e_phi(-PHI * zi / zj) + _log_abs_e_phi(-PHI * zj / zi)
            - _log_abs_e_phi(-PHI * zi * zj.conjugate())
            - _log_abs_e_phi(-(PHI**2) / (zi * zj.conjugate())))


def hamiltonian(state: VortexState, trunc: int = 140) -> float:
    """Conserved energy: pairwise ln-distance term plus image terms through
    the phi-exponential product (self-terms i = j included)."""
    zs = state.positions
    gs = state.circulations
    h = 0.0
    for i in range(len(zs)):
        for j in range(len(zs)):
            if i != j:
                h -= gs[i] * gs[j] / (4 * math.pi) * math.log(abs(zs[i] - zs[j]))
            h -= gs[i] * gs[j] / (4 * math.pi) * _image_log_term(zs[i], zs[j])
    return h


def green_function(z: complex, z_l: complex, factors: int = 140) -> float:
    """Dirichlet-type Green function of the k=1 annulus.

    Vanishes on the outer circle |z| = sqrt(phi) and equals
    ln|sqrt(phi)/z_l| / (2 pi) on the inner circle; symmetric in its arguments.
    """
    if abs(z - z_l) < COLLISION_DISTANCE:
        raise ValueError("green_function arguments coincide")
    return (-math.log(abs(z - z_l)) / (2 * math.pi)
            - _image_log_term(z, z_l) / (2 * math.pi)
            + math.log(PHI) / (4 * math.pi))


def ring_frequency(n_vortices: int, r: float, gamma: float, trunc: int = 100) -> float:
    """Rotation frequency of n identical vortices on a symmetric ring of radius r.

    At the geometric-mean radius the phi-logarithm terms cancel pairwise and
    the frequency reduces to gamma (n - 1) / (4 pi sqrt(phi)).
    """
    if n_vortices < 1:
        raise ValueError("need at least one vortex")
    if not 1.0 < r < SQRT_PHI:
        raise ValueError(f"radius must lie in (1, sqrt(phi)), got {r:.6f}")
    poles = _pole_powers(trunc)
    total = 0j
    r2 = r * r
    for j in range(1, n_vortices + 1):
        rot = cmath.exp(2j * math.pi * j / n_vortices)
        vals = _lnphi_pole(np.array([-(PHI / r2) * rot, -r2 / rot]), poles)
        total += vals[0] - vals[1]
    omega = gamma / (2 * math.pi * r2) * ((n_vortices - 1) / 2 + PHI * total)
    return float(omega.real)


def semiclassical_energy(n: int, gamma: float, factors: int = 160) -> float:
    """Quantized single-vortex energy level E_n; finite for every n >= 0."""
    if n < 0:
        raise ValueError("level index must be non-negative")
    if gamma == 0:
        return 0.0
    half = n + 0.5
    val = _log_abs_e_phi(-PHI * half, factors) + _log_abs_e_phi(-(PHI**2) / half, factors)
    return gamma * gamma / (4 * math.pi) * val


def load_initial_conditions(path) -> VortexState:
    """Read a JSON array of {x, y, gamma} records into a VortexState."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not data:
        raise ValueError("initial conditions must be a non-empty JSON array")
    positions = []
    circulations = []
    for rec in data:
        try:
            positions.append(complex(float(rec["x"]), float(rec["y"])))
            circulations.append(float(rec["gamma"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad initial-condition record {rec!r}") from exc
    return VortexState(tuple(positions), tuple(circulations))
