"""Iterative routes to ground states.

Three routes:

* ``petviashvili`` solves the stationary PDE at fixed omega > 0 with the
  classic stabilized fixed point u <- S^gamma * L^-1 N(u).
* ``weinstein_minimize`` locates the optimizer of the scale-invariant
  quotient by shooting on the frequency: the fixed-omega ground state is the
  optimizer exactly when its norms satisfy grad = (beta/alpha) * eps * bilap,
  and that mismatch is a smooth, monotone, scale-free function of omega.  A
  bracketed secant iteration drives it to zero, warm-starting each inner
  solve from the previous one, and a single exact renormalization at the end
  yields the unit-norm optimizer.  (Per-sweep renormalized Euler-Lagrange
  sweeps were tried first and rejected: the renormalization shrinks the box
  until the tails wrap, which feeds a slow width instability.)
* ``mass_constrained_flow`` descends the energy on the fixed-mass sphere with
  a preconditioned, multiplier-shifted projected gradient; its fixed points
  are exact critical points and every accepted step is non-increasing in
  energy.

The inner loops carry the iterate as its (real-to-complex) spectrum.  This is
deliberate: materializing the field every sweep re-quantizes the tiny
high-|k| coefficients, and the |k|^4 symbol then amplifies that noise into a
residual floor around 1e-10 at default resolution.  Kept spectral, the
residual bottoms out near 1e-14.  Reported residuals are measured at the
final spectral state, right before the field is materialized; recomputing
them from the stored samples adds back the amplified quantization noise,
which is harmless at verification tolerances.

Each run owns its state and is single-threaded; everything is deterministic
given (seed, config, grid).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConfigurationError,
    DivergenceError,
    VanishingError,
)
from .functionals import Params, weinstein
from .grid import (
    BoxGrid,
    Field,
    NormTuple,
    _spectral_tables,
    bilaplacian,
    boundary_amplitude_ratio,
    laplacian,
    norms,
)
from .scalings import construct_Q, lambda_normalize

INIT_MODES = ("gaussian_bump", "stored_field", "random_bandlimited")

# Iterations without a new best residual before a run is declared stalled.
STALL_WINDOW = 60
# Residual growth after this many iterations is only a warning, not an error.
BURN_IN = 10


@dataclass(frozen=True)
class SolverConfig:
    max_iters: int = 5000
    tol_residual: float = 1e-10
    relaxation: float = 1.0
    seed: int = 0
    init: str = "gaussian_bump"
    init_field: Field | None = None
    filter: bool = False
    petviashvili_gamma: float | None = None

    def __post_init__(self):
        if self.max_iters < 1:
            raise ConfigurationError(f"max_iters must be >= 1, got {self.max_iters}")
        if not self.tol_residual > 0:
            raise ConfigurationError(f"tol_residual must be positive, got {self.tol_residual}")
        if not 0.0 < self.relaxation <= 1.0:
            raise ConfigurationError(f"relaxation must lie in (0, 1], got {self.relaxation}")
        if self.init not in INIT_MODES:
            raise ConfigurationError(f"init must be one of {INIT_MODES}, got {self.init!r}")
        if self.init == "stored_field" and self.init_field is None:
            raise ConfigurationError("init = 'stored_field' needs init_field")

    def config_hash(self) -> str:
        blob = {
            "max_iters": self.max_iters,
            "tol_residual": self.tol_residual,
            "relaxation": self.relaxation,
            "seed": self.seed,
            "init": self.init,
            "filter": self.filter,
            "petviashvili_gamma": self.petviashvili_gamma,
        }
        return hashlib.sha256(json.dumps(blob, sort_keys=True).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class GroundState:
    field: Field
    params: Params
    nt: NormTuple
    omega_extracted: float
    residual_pde: float
    iters: int
    route: str
    warnings: tuple = ()

    def sidecar(self, config: SolverConfig | None = None) -> dict:
        doc = {
            "params": {
                "bigN": self.params.bigN,
                "p": self.params.p,
                "eps": self.params.eps,
                "omega": self.params.omega,
                "mass_c": self.params.mass_c,
                "relaxed": self.params.relaxed,
            },
            "route": self.route,
            "iters": self.iters,
            "residual_pde": self.residual_pde,
            "omega_extracted": self.omega_extracted,
            "norms": self.nt.as_dict(),
            "warnings": list(self.warnings),
        }
        if config is not None:
            doc["config_hash"] = config.config_hash()
        return doc


# ---------------------------------------------------------------------------
# initial guesses


def gaussian_bump(grid: BoxGrid, width: float | None = None, amplitude: float = 1.0) -> Field:
    """Centered Gaussian bump; the default initial guess (width L/10)."""
    width = grid.box_length / 10.0 if width is None else width
    r2 = np.zeros(grid.shape)
    for x in grid.coordinates():
        r2 += x * x
    return Field(grid, amplitude * np.exp(-r2 / (2.0 * width**2)))


def random_bandlimited(
    grid: BoxGrid, seed: int, modes: int = 20, width_frac: float = 0.125
) -> Field:
    """Seed-deterministic random field: low-pass noise under a Gaussian envelope.

    The cutoff is ``modes`` fundamental wavenumbers, so the band is the same
    physical one at any resolution, and the envelope keeps the sample
    localized well inside the box.  Peak amplitude is normalized to 1.
    """
    rng = np.random.default_rng(seed)
    white = rng.standard_normal(grid.shape)
    spec = np.fft.rfftn(white)
    k2, _ = _spectral_tables(grid)
    kc = modes * 2.0 * np.pi / grid.box_length
    spec *= np.exp(-k2 / (kc * kc))
    smooth = np.fft.irfftn(spec, s=grid.shape, axes=range(grid.dim))
    r2 = np.zeros(grid.shape)
    for x in grid.coordinates():
        r2 += x * x
    sigma = width_frac * grid.box_length
    samples = smooth * np.exp(-r2 / (2.0 * sigma**2))
    peak = np.max(np.abs(samples))
    if peak > 0:
        samples = samples / peak
    return Field(grid, samples)


def initial_field(grid: BoxGrid, config: SolverConfig) -> Field:
    if config.init == "gaussian_bump":
        return gaussian_bump(grid)
    if config.init == "random_bandlimited":
        return random_bandlimited(grid, config.seed)
    field = config.init_field
    if field.grid != grid:
        raise ConfigurationError("stored initial field lives on a different grid")
    return field


# ---------------------------------------------------------------------------
# physical-field diagnostics (also used on loaded states)


def _l2(u: Field) -> float:
    return math.sqrt(u.grid.cell_volume * float(np.sum(u.samples**2)))


def pde_residual(u: Field, params: Params, omega: float) -> float:
    """||eps*lap^2 u - lap u + omega u - |u|^(p-2)u||_2 / |||u|^(p-2)u||_2."""
    nl = np.abs(u.samples) ** (params.p - 2.0) * u.samples
    lin = params.eps * bilaplacian(u).samples - laplacian(u).samples + omega * u.samples
    denom = _l2(Field(u.grid, nl))
    if denom == 0.0:
        return math.inf
    return _l2(Field(u.grid, lin - nl)) / denom


def extract_omega(nt: NormTuple, params: Params) -> float:
    """Lagrange multiplier read off the Nehari identity: (lp - eps*bilap - grad)/mass."""
    if nt.mass <= 0:
        raise VanishingError("cannot extract a multiplier from the zero field")
    return (nt.lp - params.eps * nt.bilap - nt.grad) / nt.mass


def normalize_to_mass(u: Field, c: float) -> Field:
    m = u.grid.cell_volume * float(np.sum(u.samples**2))
    if m <= 0:
        raise VanishingError("cannot rescale the zero field onto a mass sphere")
    return Field(u.grid, math.sqrt(c / m) * u.samples)


# ---------------------------------------------------------------------------
# spectral iteration plumbing


class _SpectralIterate:
    """Iterate kept as an rfftn spectrum over a box that may be exactly rescaled.

    Wavenumbers scale like 1/L and the cell volume like L^d, so all norms are
    derived from the starting grid's tables plus the accumulated box factor.
    """

    def __init__(self, field: Field):
        self.dim = field.grid.dim
        self.m = field.grid.points_per_axis
        self.base_grid = field.grid
        base_k2, weight = _spectral_tables(field.grid)
        self._base_k2 = base_k2
        self._weight = weight
        self.scale = 1.0  # current box is base box / scale
        self.spec = np.fft.rfftn(field.samples)

    @property
    def k2(self) -> np.ndarray:
        return self._base_k2 * self.scale**2

    @property
    def box_length(self) -> float:
        return self.base_grid.box_length / self.scale

    @property
    def cell_volume(self) -> float:
        return (self.box_length / self.m) ** self.dim

    def grid(self) -> BoxGrid:
        return BoxGrid(self.dim, self.m, self.box_length)

    def physical(self) -> np.ndarray:
        return np.fft.irfftn(self.spec, s=(self.m,) * self.dim, axes=range(self.dim))

    def spec_norm_sq(self, arr: np.ndarray) -> float:
        """Parseval ||.||_2^2 of a spectrum over the current box."""
        scale = self.cell_volume / self.m**self.dim
        return scale * float(np.sum(self._weight * (arr.real**2 + arr.imag**2)))

    def quadratic_norms(self) -> tuple:
        scale = self.cell_volume / self.m**self.dim
        power = self._weight * (self.spec.real**2 + self.spec.imag**2)
        k2 = self.k2
        mass = scale * float(np.sum(power))
        grad = scale * float(np.sum(k2 * power))
        bilap = scale * float(np.sum(k2 * k2 * power))
        return mass, grad, bilap

    def field(self) -> Field:
        return Field(self.grid(), self.physical())


def _filter_mask(state: _SpectralIterate) -> np.ndarray:
    cutoff = (2.0 / 3.0) * np.pi * state.m / state.box_length
    return (state.k2 <= cutoff * cutoff).astype(np.float64)


class _Progress:
    """Best-residual tracking with stall detection and a monotonicity note."""

    def __init__(self, label: str, config: SolverConfig, tol: float):
        self.label = label
        self.tol = tol
        self.config = config
        self.history = []
        self.best = math.inf
        self.best_iter = 0
        self.non_monotone = False

    def update(self, it: int, res: float):
        self.history.append(res)
        if not math.isfinite(res):
            raise DivergenceError(
                f"{self.label}: residual became non-finite at iteration {it}",
                last_residual=res,
                history=self.history,
            )
        if it > BURN_IN and res > 1.5 * self.best:
            self.non_monotone = True
        if res < self.best:
            self.best, self.best_iter = res, it
        elif it - self.best_iter > STALL_WINDOW:
            raise DivergenceError(
                f"{self.label}: residual stopped decreasing near {self.best:.3e} "
                f"(tolerance {self.tol:.1e})",
                last_residual=res,
                history=self.history,
            )

    def exhausted(self):
        raise DivergenceError(
            f"{self.label}: no convergence to {self.tol:.1e} "
            f"within {self.config.max_iters} iterations",
            last_residual=self.history[-1] if self.history else None,
            history=self.history,
        )

    def warnings(self) -> tuple:
        if self.non_monotone:
            return (f"{self.label}: residual history was not monotone after burn-in",)
        return ()


def _finish(
    u: Field,
    params: Params,
    iters: int,
    route: str,
    residual: float,
    extra_warnings: tuple = (),
) -> GroundState:
    nt = norms(u, params.p)
    omega_x = extract_omega(nt, params)
    warn = list(extra_warnings)
    ratio = boundary_amplitude_ratio(u)
    if ratio > 1e-8:
        warn.append(f"boundary amplitude is {ratio:.2e} of the peak; box may be too small")
    return GroundState(
        field=u,
        params=params,
        nt=nt,
        omega_extracted=omega_x,
        residual_pde=residual,
        iters=iters,
        route=route,
        warnings=tuple(warn),
    )


def _require_field_grid(params: Params, grid: BoxGrid):
    if grid.dim != params.bigN:
        raise ConfigurationError(
            f"grid dim {grid.dim} must equal bigN {params.bigN} for a field solve"
        )


# ---------------------------------------------------------------------------
# fixed-frequency stabilized fixed point


def petviashvili(
    params: Params, grid: BoxGrid, config: SolverConfig, residual_trace: list | None = None
) -> GroundState:
    """Stabilized fixed point for the stationary PDE at fixed omega > 0.

    Pass a list as ``residual_trace`` to record the residual history.
    """
    state, res, iters, warn = _petviashvili_state(
        params, grid, config, residual_trace=residual_trace
    )
    return _finish(state.field(), params, iters, "petviashvili", res, warn)


def _petviashvili_state(
    params: Params,
    grid: BoxGrid,
    config: SolverConfig,
    warm: _SpectralIterate | None = None,
    tol: float | None = None,
    residual_trace: list | None = None,
) -> tuple:
    omega = params.require_omega()
    if not omega > 0:
        raise ConfigurationError(f"petviashvili needs omega > 0, got {omega}")
    _require_field_grid(params, grid)
    tol = config.tol_residual if tol is None else tol
    p = params.p
    gamma = config.petviashvili_gamma
    if gamma is None:
        gamma = (p - 1.0) / (p - 2.0)
    state = warm if warm is not None else _SpectralIterate(initial_field(grid, config))
    k2 = state.k2
    symbol = params.eps * k2 * k2 + k2 + omega
    mass0 = state.quadratic_norms()[0]
    progress = _Progress("petviashvili", config, tol)
    for it in range(1, config.max_iters + 1):
        mass, grad, bilap = state.quadratic_norms()
        if not math.isfinite(mass) or mass > 1e24 * max(mass0, 1.0):
            raise DivergenceError(
                "petviashvili iterate blew up",
                last_residual=progress.history[-1] if progress.history else None,
                history=progress.history,
            )
        if mass < 1e-24 * mass0:
            raise VanishingError("iterate collapsed to zero")
        u_phys = state.physical()
        lp = state.cell_volume * float(np.sum(np.abs(u_phys) ** p))
        if lp <= 0:
            raise VanishingError("nonlinearity vanished; iterate collapsed")
        nl_spec = np.fft.rfftn(np.abs(u_phys) ** (p - 2.0) * u_phys)
        if config.filter:
            nl_spec *= _filter_mask(state)
        res = math.sqrt(
            state.spec_norm_sq(symbol * state.spec - nl_spec) / state.spec_norm_sq(nl_spec)
        )
        progress.update(it, res)
        if residual_trace is not None:
            residual_trace.append(res)
        if res <= tol:
            return state, res, it, progress.warnings()
        stabilizer = (params.eps * bilap + grad + omega * mass) / lp
        new_spec = stabilizer**gamma * (nl_spec / symbol)
        if config.relaxation < 1.0:
            new_spec = (1.0 - config.relaxation) * state.spec + config.relaxation * new_spec
        state.spec = new_spec
    progress.exhausted()


# ---------------------------------------------------------------------------
# quotient optimizer by frequency shooting


def weinstein_minimize(params: Params, grid: BoxGrid, config: SolverConfig) -> tuple:
    """Minimize the scale-invariant quotient; returns (v, C) with C = 1/W_p(v).

    v comes back with grad = bilap = 1; its box length differs from the input
    grid's by the exact final renormalization factor.
    """
    state, _res, _iters = _weinstein_state(params, grid, config)
    v = lambda_normalize(state.field())
    c_best = 1.0 / weinstein(norms(v, params.p), params)
    return v, c_best


def _el_residual_spectral(state: _SpectralIterate, params: Params) -> float:
    """Relative residual of the self-normalized Euler-Lagrange equation.

    (alpha/bilap) lap^2 u - (beta/grad) lap u + ((p-2)/mass) u = (p/lp) |u|^(p-2) u
    is exactly invariant under amplitude/box rescaling, so this equals the
    residual of the unit-normalized optimizer candidate.
    """
    ep = params.exponents()
    p = params.p
    mass, grad, bilap = state.quadratic_norms()
    u_phys = state.physical()
    lp = state.cell_volume * float(np.sum(np.abs(u_phys) ** p))
    if lp <= 0 or grad <= 0 or bilap <= 0:
        raise VanishingError("degenerate iterate in quotient residual")
    nl_spec = np.fft.rfftn(np.abs(u_phys) ** (p - 2.0) * u_phys)
    k2 = state.k2
    symbol = (ep.alpha / bilap) * k2 * k2 + (ep.beta / grad) * k2 + (p - 2.0) / mass
    rhs = (p / lp) * nl_spec
    return math.sqrt(state.spec_norm_sq(symbol * state.spec - rhs) / state.spec_norm_sq(rhs))


def _weinstein_state(params: Params, grid: BoxGrid, config: SolverConfig) -> tuple:
    """Shoot on omega until the fixed-omega ground state is the optimizer.

    Returns (state, residual, total inner iterations); the state is the
    converged fixed-omega solution whose exact rescalings are the optimizer
    and the constructed critical-mass state.
    """
    _require_field_grid(params, grid)
    ep = params.exponents()
    inner_tol = min(1e-12, 0.1 * config.tol_residual)
    total = 0
    state = None

    def solve(omega):
        nonlocal total, state
        state, _res, its, _warn = _petviashvili_state(
            params.with_omega(omega), grid, config, warm=state, tol=inner_tol
        )
        total += its
        mass, g, b = state.quadratic_norms()
        mismatch = ep.beta * params.eps * b / (ep.alpha * g) - 1.0
        return mismatch

    # The mismatch is scale-free and increasing in omega; bracket a sign change
    # starting from the frequency the optimizer would have at unit mass.
    omega0 = (params.p - 2.0) * ep.alpha / (ep.beta**2 * params.eps)
    lo = hi = omega0
    f_lo = f_hi = solve(omega0)
    for _ in range(80):
        if f_lo < 0 < f_hi or f_lo > 0 > f_hi or f_lo == 0 or f_hi == 0:
            break
        if f_hi < 0:
            hi *= 2.0
            f_hi = solve(hi)
        else:
            lo *= 0.5
            f_lo = solve(lo)
    else:
        raise DivergenceError(
            "could not bracket the optimizer frequency", last_residual=f_hi
        )
    if f_lo > 0 > f_hi:
        lo, hi, f_lo, f_hi = hi, lo, f_hi, f_lo

    # Illinois-damped regula falsi on the bracketed, monotone mismatch; stop
    # on the actual Euler-Lagrange residual of the inner state.  That residual
    # bottoms out at the box-truncation error, so stalling there is reported
    # with the boundary amplitude for diagnosis.
    el_history = [_el_residual_spectral(state, params)]
    best = el_history[0]
    stale = 0
    last_side = 0
    for _ in range(120):
        if el_history[-1] <= config.tol_residual:
            return state, el_history[-1], total
        denom = f_hi - f_lo
        w = 0.5 * (lo + hi) if denom == 0 else hi - f_hi * (hi - lo) / denom
        if not (min(lo, hi) < w < max(lo, hi)):
            w = 0.5 * (lo + hi)
        f_w = solve(w)
        if (f_w < 0) == (f_lo < 0):
            if last_side == -1:
                f_hi *= 0.5
            lo, f_lo = w, f_w
            last_side = -1
        elif f_w != 0.0:
            if last_side == +1:
                f_lo *= 0.5
            hi, f_hi = w, f_w
            last_side = +1
        el_history.append(_el_residual_spectral(state, params))
        if el_history[-1] < 0.5 * best:
            best, stale = el_history[-1], 0
        else:
            stale += 1
            if stale > 12:
                break
    boundary = _boundary_ratio(state.physical())
    raise DivergenceError(
        f"frequency shooting stalled at residual {best:.3e} "
        f"(tolerance {config.tol_residual:.1e}); boundary amplitude ratio is "
        f"{boundary:.2e}, so the box may be too small for these parameters",
        last_residual=el_history[-1],
        history=el_history,
    )


def route_Q(params: Params, grid: BoxGrid, config: SolverConfig) -> GroundState:
    """Optimizer solve, unit normalization, then the constructive rescale.

    The state solves the stationary PDE at the frequency fixed by the
    optimizer's mass, and its own mass is the critical one.  All three steps
    after the solve are exact rescalings, so the solver-state residual is the
    returned state's residual.
    """
    state, res, iters = _weinstein_state(params, grid, config)
    v = lambda_normalize(state.field())
    q_field, omega = construct_Q(v, params)
    if not (math.isfinite(omega) and omega > 0):
        raise DivergenceError(f"constructed frequency {omega} is not positive", last_residual=res)
    return _finish(q_field, params, iters, "weinstein_Q", res)


# ---------------------------------------------------------------------------
# normalized energy descent on the mass sphere


def mass_constrained_flow(
    params: Params, grid: BoxGrid, config: SolverConfig, energy_trace: list | None = None
) -> GroundState:
    """Projected, preconditioned energy descent on the sphere ||u||_2^2 = c.

    The step direction is P^-1 (E'(u) + omega_k u) with omega_k the Nehari
    multiplier estimate (so fixed points solve the stationary PDE exactly) and
    P the positive operator eps*lap^2 - lap + sigma.  A backtracking line
    search keeps the measured energy non-increasing at every accepted step;
    pass a list as ``energy_trace`` to record the accepted energy values.

    For masses below the critical one the constrained infimum is not attained
    and the iterate spreads toward the box boundary; that is detected via the
    boundary-amplitude ratio and reported as a no-minimizer outcome (a warning
    on the returned state), not as an error.
    """
    c = params.require_mass()
    _require_field_grid(params, grid)
    p = params.p
    state = _SpectralIterate(normalize_to_mass(initial_field(grid, config), c))
    k2 = state.k2
    vol = state.cell_volume
    weight = state._weight
    mcount = state.m**state.dim

    def energy_parts(spec, phys):
        power = weight * (spec.real**2 + spec.imag**2)
        scale = vol / mcount
        grad = scale * float(np.sum(k2 * power))
        bilap = scale * float(np.sum(k2 * k2 * power))
        lp = vol * float(np.sum(np.abs(phys) ** p))
        return grad, bilap, lp

    u_phys = state.physical()
    grad, bilap, lp = energy_parts(state.spec, u_phys)
    e_now = 0.5 * params.eps * bilap + 0.5 * grad - lp / p
    if energy_trace is not None:
        energy_trace.append(e_now)
    tau = 1.0
    progress = _Progress("mass flow", config, config.tol_residual)
    for it in range(1, config.max_iters + 1):
        omega_k = (lp - params.eps * bilap - grad) / c
        nl_spec = np.fft.rfftn(np.abs(u_phys) ** (p - 2.0) * u_phys)
        if config.filter:
            nl_spec *= _filter_mask(state)
        r_spec = (params.eps * k2 * k2 + k2 + omega_k) * state.spec - nl_spec
        scale_q = params.eps * bilap + grad + abs(omega_k) * c
        rel = math.sqrt(state.spec_norm_sq(r_spec) * c) / scale_q
        progress.update(it, rel)
        if rel <= config.tol_residual:
            return _finish(state.field(), params, it, "mass_flow", rel, progress.warnings())
        d_spec = r_spec / (params.eps * k2 * k2 + k2 + max(omega_k, 1e-2))
        accepted = False
        for _ in range(60):
            trial = state.spec - tau * d_spec
            trial_phys = np.fft.irfftn(trial, s=state.base_grid.shape, axes=range(state.dim))
            m_t = vol * float(np.sum(trial_phys**2))
            if m_t <= 0:
                tau *= 0.5
                continue
            amp = math.sqrt(c / m_t)
            trial = amp * trial
            trial_phys = amp * trial_phys
            t_grad, t_bilap, t_lp = energy_parts(trial, trial_phys)
            e_t = 0.5 * params.eps * t_bilap + 0.5 * t_grad - t_lp / p
            if e_t <= e_now:
                state.spec = trial
                u_phys = trial_phys
                grad, bilap, lp = t_grad, t_bilap, t_lp
                e_now = e_t
                if energy_trace is not None:
                    energy_trace.append(e_now)
                tau = min(tau * 1.25, 16.0)
                accepted = True
                break
            tau *= 0.5
        spread = _boundary_ratio(u_phys)
        if spread > 1e-2:
            return _finish(
                state.field(),
                params,
                it,
                "mass_flow",
                rel,
                progress.warnings()
                + (
                    "no-minimizer outcome: iterate is spreading toward the box "
                    f"boundary (boundary ratio {spread:.2e}); the constrained "
                    "infimum appears not to be attained at this mass",
                ),
            )
        if not accepted:
            return _finish(
                state.field(),
                params,
                it,
                "mass_flow",
                rel,
                progress.warnings()
                + (
                    f"energy descent stalled at relative residual {rel:.2e} "
                    f"(tolerance {config.tol_residual:.1e})",
                ),
            )
    progress.exhausted()


def _boundary_ratio(phys: np.ndarray) -> float:
    peak = float(np.max(np.abs(phys)))
    if peak == 0.0:
        return 0.0
    edge = 0.0
    for axis in range(phys.ndim):
        for index in (0, -1):
            edge = max(edge, float(np.max(np.abs(np.take(phys, index, axis=axis)))))
    return edge / peak
