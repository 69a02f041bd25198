"""Identity checks over computed states, collected into pass/fail reports.

Every identity the computed states are supposed to satisfy becomes a named
check with a measured residual and a tolerance drawn from a tiered profile:
``algebraic`` for pure NormTuple arithmetic, ``numeric`` for single-solve
identities, ``cross`` tiers for quantities that compose several numeric
stages.  ``REQUIRED_CHECKS`` is the coverage manifest: the default full suite
must produce every name in it, and the test suite enforces that.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .constants import (
    ConstantsReport,
    K_from_C,
    K_from_c_eps,
    c_eps_formula,
    c_eps_from_K,
    eps_c_formula,
    omega_formula,
)
from .errors import PreconditionError
from .functionals import (
    Params,
    action,
    energy,
    energy_factored,
    gn_k_quotient,
    holder_chain_gap,
    nehari_residual,
    pohozaev,
    quadratic_scale,
    weinstein,
)
from .grid import (
    BoxGrid,
    center_and_align,
    norms,
    regrid,
    relative_l2_distance,
)
from .scalings import (
    action_gap_decomposition,
    fiber_scale_laws,
    fiber_t_grid,
    g_functions,
    h_profile,
    mass_preserving_scale_laws,
    t_eps,
)
from .solvers import GroundState, SolverConfig, random_bandlimited


@dataclass(frozen=True)
class TolProfile:
    """Three-tier tolerances; override any field per call."""

    algebraic: float = 1e-10
    numeric: float = 1e-6
    cross_numeric: float = 1e-4
    route: float = 1e-3


@dataclass(frozen=True)
class Check:
    name: str
    identity: str
    residual: float
    tol: float
    passed: bool
    skipped: bool = False
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "identity": self.identity,
            "residual": self.residual,
            "tol": self.tol,
            "passed": self.passed,
            "skipped": self.skipped,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    provenance: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed or c.skipped for c in self.checks)

    def counts(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks if c.passed and not c.skipped),
            "failed": sum(1 for c in self.checks if not c.passed and not c.skipped),
            "skipped": sum(1 for c in self.checks if c.skipped),
        }

    def names(self) -> set:
        return {c.name for c in self.checks}

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        prov = dict(self.provenance)
        prov.update(other.provenance)
        return VerificationReport(checks=self.checks + other.checks, provenance=prov)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "counts": self.counts(),
            "checks": [c.as_dict() for c in self.checks],
            "provenance": dict(self.provenance),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def table(self) -> str:
        lines = [f"{'status':<8}{'residual':<13}{'tol':<10}name"]
        for c in self.checks:
            status = "SKIP" if c.skipped else ("pass" if c.passed else "FAIL")
            lines.append(f"{status:<8}{c.residual:<13.3e}{c.tol:<10.1e}{c.name}")
        counts = self.counts()
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'}: {counts['passed']} passed, "
            f"{counts['failed']} failed, {counts['skipped']} skipped"
        )
        return "\n".join(lines)


def _check(name, identity, residual, tol, skipped=False, detail="") -> Check:
    residual = float(residual)
    return Check(
        name=name,
        identity=identity,
        residual=residual,
        tol=tol,
        passed=bool(residual <= tol),
        skipped=skipped,
        detail=detail,
    )


# Coverage manifest: the default full suite must produce every one of these.
REQUIRED_CHECKS = frozenset(
    {
        "q.pde_residual",
        "q.ratio_grad_bilap",
        "q.ratio_grad_lp",
        "q.ratio_bilap_lp",
        "q.energy_zero",
        "q.mass_at_least_critical",
        "q.mass_equals_critical",
        "q.nehari_zero",
        "q.pohozaev_zero",
        "q.omega_matches_formula",
        "q.weinstein_optimal",
        "q.gnk_quotient_extremal",
        "q.energy_factored_reconstruction",
        "q.energy_factored_bracket_zero",
        "q.h_profile_critical_at_one",
        "q.h_profile_stationary",
        "q.fiber_action_max_at_one",
        "q.fiber_gap_decomposition",
        "equiv.aligned_distance",
        "equiv.mass_match",
        "equiv.action_energy_zero",
        "equiv.action_match",
        "equiv.action_positive",
        "equiv.fiber_t_one",
        "equiv.fiber_action_max_at_one",
        "gn.weinstein_lower_bound",
        "gn.k_quotient_upper_bound",
        "gn.holder_chain",
        "const.k_routes_agree",
        "const.k_inversion_roundtrip",
        "const.eps_c_roundtrip",
        "const.c_eps_scaling",
        "const.omega_scaling",
        "alg.weinstein_scale_invariance",
        "alg.fiber_mass_law",
        "alg.g_zero_at_one",
        "alg.g_nonnegative",
        "alg.nehari_pohozaev_combination",
    }
)


# ---------------------------------------------------------------------------
# checks on the constructed critical-mass state


def _fiber_checks(prefix: str, gs: GroundState, omega: float, tol: TolProfile) -> list:
    """Action maximality along u^t = t^N u(t.) and the three-term gap split.

    Both statements presuppose the Nehari and dilation identities; when those
    are visibly violated the checks are reported as skipped, not failed.
    """
    pm = gs.params.with_omega(omega)
    nt = gs.nt
    base = action(nt, pm)
    scale = quadratic_scale(nt, pm)
    precondition_gap = max(
        abs(nehari_residual(nt, pm)), abs(pohozaev(nt, pm))
    ) / scale
    if precondition_gap > tol.numeric:
        detail = f"stationarity identities off by {precondition_gap:.3e}; not a solution"
        return [
            _check(
                f"{prefix}.fiber_action_max_at_one",
                "I(u) >= I(t^N u(t.)) for t in [1/4, 4], equality only at t = 1",
                0.0,
                tol.algebraic,
                skipped=True,
                detail=detail,
            ),
            _check(
                f"{prefix}.fiber_gap_decomposition",
                "I(u) - I(u^t) splits into the three g-weighted norm terms",
                0.0,
                tol.algebraic,
                skipped=True,
                detail=detail,
            ),
        ]
    worst = -math.inf
    interior_gap = math.inf
    for t in fiber_t_grid():
        gap = base - action(fiber_scale_laws(nt, t, pm), pm)
        if t != 1.0:
            worst = max(worst, -gap)
            interior_gap = min(interior_gap, gap)
    checks = [
        _check(
            f"{prefix}.fiber_action_max_at_one",
            "I(u) >= I(t^N u(t.)) for t in [1/4, 4], equality only at t = 1",
            max(0.0, worst) / scale,
            tol.algebraic,
            detail=f"smallest off-peak gap {interior_gap:.3e}",
        )
    ]
    decomp_worst = 0.0
    for t in (0.5, 0.77, 1.3, 2.4):
        gap = base - action(fiber_scale_laws(nt, t, pm), pm)
        terms = action_gap_decomposition(nt, pm, t)
        decomp_worst = max(decomp_worst, abs(gap - sum(terms)) / scale)
    checks.append(
        _check(
            f"{prefix}.fiber_gap_decomposition",
            "I(u) - I(u^t) splits into the three g-weighted norm terms",
            decomp_worst,
            tol.algebraic,
        )
    )
    return checks


def verify_Q(gs: GroundState, cr: ConstantsReport, tol: TolProfile = TolProfile()) -> VerificationReport:
    """All identities the constructed critical-mass state must satisfy.

    Mildly off states produce a report whose checks fail; grossly unconverged
    input (residual above 1e-2) is refused outright.
    """
    if gs.residual_pde > 1e-2:
        raise PreconditionError(
            f"refusing to verify an unconverged state (residual {gs.residual_pde:.3e})"
        )
    params = gs.params
    ep = params.exponents()
    p = params.p
    nt = gs.nt
    eps = params.eps
    omega_x = gs.omega_extracted
    pm = params.with_omega(omega_x)
    scale = quadratic_scale(nt, pm)
    checks = [
        _check(
            "q.pde_residual",
            "eps lap^2 Q - lap Q + omega Q = |Q|^(p-2) Q",
            gs.residual_pde,
            tol.numeric,
        ),
        _check(
            "q.ratio_grad_bilap",
            "grad(Q) = (beta/alpha) eps bilap(Q)",
            abs(nt.grad * ep.alpha / (ep.beta * eps * nt.bilap) - 1.0),
            tol.numeric,
        ),
        _check(
            "q.ratio_grad_lp",
            "grad(Q) = (beta/p) lp(Q)",
            abs(nt.grad * p / (ep.beta * nt.lp) - 1.0),
            tol.numeric,
        ),
        _check(
            "q.ratio_bilap_lp",
            "bilap(Q) = (alpha/p) lp(Q) / eps",
            abs(nt.bilap * p * eps / (ep.alpha * nt.lp) - 1.0),
            tol.numeric,
        ),
        _check(
            "q.energy_zero",
            "energy(Q) = 0",
            abs(energy(nt, params)) / scale,
            tol.numeric,
        ),
        _check(
            "q.mass_at_least_critical",
            "mass(Q) >= c_eps",
            max(0.0, (cr.c_eps - nt.mass) / cr.c_eps),
            tol.cross_numeric,
        ),
        _check(
            "q.mass_equals_critical",
            "mass(Q) = c_eps",
            abs(nt.mass - cr.c_eps) / cr.c_eps,
            tol.cross_numeric,
        ),
        _check(
            "q.nehari_zero",
            "eps bilap + grad + omega mass = lp at the extracted omega",
            abs(nehari_residual(nt, pm)) / scale,
            tol.numeric,
        ),
        _check(
            "q.pohozaev_zero",
            "dilation identity vanishes at the extracted omega",
            abs(pohozaev(nt, pm)) / scale,
            tol.numeric,
        ),
        _check(
            "q.omega_matches_formula",
            "extracted omega equals the optimizer-mass frequency",
            abs(omega_x - cr.omega_eps) / cr.omega_eps,
            tol.numeric,
        ),
        _check(
            "q.weinstein_optimal",
            "W_p(Q) * C = 1",
            abs(weinstein(nt, params) * cr.C - 1.0),
            tol.numeric,
        ),
        _check(
            "q.gnk_quotient_extremal",
            "gn_k_quotient(Q) = (p/2) c_eps^(-(p-2)/2)",
            abs(gn_k_quotient(nt, params) / K_from_c_eps(cr.c_eps, params) - 1.0),
            tol.cross_numeric,
        ),
    ]
    qd, bracket = energy_factored(nt, params.with_mass(nt.mass))
    checks.append(
        _check(
            "q.energy_factored_reconstruction",
            "energy = (1/2) (eps bilap + grad) * bracket on the mass sphere",
            abs(0.5 * qd * bracket - energy(nt, params)) / scale,
            tol.algebraic,
        )
    )
    checks.append(
        _check(
            "q.energy_factored_bracket_zero",
            "factored-energy bracket vanishes at the optimizer with critical mass",
            abs(bracket),
            tol.cross_numeric,
        )
    )
    te = t_eps(nt, params)
    checks.append(
        _check(
            "q.h_profile_critical_at_one",
            "the rescaled energy profile has its critical point at t = 1",
            abs(te - 1.0),
            tol.numeric,
        )
    )
    delta = 1e-5 * te
    (_, h_minus), (_, h_plus) = h_profile(nt, params, [te - delta, te + delta])
    h_scale = params.eps * nt.bilap * te + nt.lp / p
    checks.append(
        _check(
            "q.h_profile_stationary",
            "centered difference of the energy profile vanishes at its critical point",
            abs(h_plus - h_minus) / (2.0 * delta) / h_scale,
            1e-10,
        )
    )
    checks.extend(_fiber_checks("q", gs, omega_x, tol))
    return VerificationReport(checks=tuple(checks))


# ---------------------------------------------------------------------------
# equivalence of the two ground-state notions


def verify_equivalence(
    gsE: GroundState, gsA: GroundState, tol: TolProfile = TolProfile()
) -> VerificationReport:
    """Compare a critical-mass energy minimizer with a fixed-frequency minimizer."""
    pe, pa = gsE.params, gsA.params
    if (pe.bigN, pe.p, pe.eps) != (pa.bigN, pa.p, pa.eps):
        raise PreconditionError(
            f"states solve different problems: {(pe.bigN, pe.p, pe.eps)} vs "
            f"{(pa.bigN, pa.p, pa.eps)}"
        )
    omega = pa.omega if pa.omega is not None else gsA.omega_extracted
    pm = pe.with_omega(omega)
    n = pe.bigN

    # Common finer grid: the larger box at the larger point count.
    target = BoxGrid(
        dim=n,
        points_per_axis=max(gsE.field.grid.points_per_axis, gsA.field.grid.points_per_axis),
        box_length=max(gsE.field.grid.box_length, gsA.field.grid.box_length),
    )
    aligned_e = center_and_align(regrid(gsE.field, target))
    aligned_a = center_and_align(regrid(gsA.field, target))
    distance = relative_l2_distance(aligned_e, aligned_a)

    scale = quadratic_scale(gsA.nt, pm)
    i_e = action(gsE.nt, pm)
    i_a = action(gsA.nt, pm)
    t_star = (gsE.nt.mass / gsA.nt.mass) ** (1.0 / n)
    checks = [
        _check(
            "equiv.aligned_distance",
            "energy and action ground states coincide after centering",
            distance,
            tol.route,
        ),
        _check(
            "equiv.mass_match",
            "action ground state at the optimizer frequency has critical mass",
            abs(gsA.nt.mass - gsE.nt.mass) / gsE.nt.mass,
            tol.cross_numeric,
        ),
        _check(
            "equiv.action_energy_zero",
            "action ground state at the optimizer frequency has zero energy",
            abs(energy(gsA.nt, pa)) / scale,
            tol.cross_numeric,
        ),
        _check(
            "equiv.action_match",
            "both routes give the same action value",
            abs(i_e - i_a) / max(abs(i_e), abs(i_a)),
            tol.route,
        ),
        _check(
            "equiv.action_positive",
            "the shared action level is positive",
            max(0.0, -min(i_e, i_a)),
            0.0,
            detail=f"I = {i_a:.6g}",
        ),
        _check(
            "equiv.fiber_t_one",
            "the mass-matching fiber parameter equals 1",
            abs(t_star - 1.0),
            tol.cross_numeric,
        ),
    ]
    checks.extend(
        c
        for c in _fiber_checks("equiv", gsA, omega, tol)
        if c.name.endswith("fiber_action_max_at_one")
    )
    return VerificationReport(checks=tuple(checks))


# ---------------------------------------------------------------------------
# inequality direction tests on random fields


def verify_gn_random(
    params: Params,
    C: float,
    K: float,
    n_samples: int = 500,
    seed: int = 7,
    grid: BoxGrid | None = None,
    fields=None,
    tol: TolProfile = TolProfile(),
) -> VerificationReport:
    """Random band-limited fields never violate the two inequalities or the
    interpolation chain that proves the homogeneous one."""
    if grid is None:
        grid = BoxGrid(dim=params.bigN, points_per_axis=256, box_length=40.0)
    if fields is None:
        fields = (random_bandlimited(grid, seed + k) for k in range(n_samples))
    n = params.bigN
    q_low = 2.0 + 4.0 / n
    q_high = 2.0 + 8.0 / n
    worst_w = math.inf
    worst_k = -math.inf
    worst_holder = math.inf
    skipped = 0
    used = 0
    for u in fields:
        nt = norms(u, params.p)
        if nt.grad <= 0 or nt.bilap <= 0 or nt.lp <= 0:
            skipped += 1
            continue
        used += 1
        worst_w = min(worst_w, weinstein(nt, params) * C)
        worst_k = max(worst_k, gn_k_quotient(nt, params) / K)
        vol = u.grid.cell_volume
        low_int = vol * float(np.sum(np.abs(u.samples) ** q_low))
        high_int = vol * float(np.sum(np.abs(u.samples) ** q_high))
        worst_holder = min(worst_holder, holder_chain_gap(nt, params, low_int, high_int))
    if used == 0:
        raise PreconditionError("no usable samples: every field was degenerate")
    checks = [
        _check(
            "gn.weinstein_lower_bound",
            "W_p(u) >= 1/C for every field",
            max(0.0, 1.0 - worst_w),
            tol.numeric,
            detail=f"{used} samples, worst margin {worst_w - 1.0:.3e}",
        ),
        _check(
            "gn.k_quotient_upper_bound",
            "gn_k_quotient(u) <= K for every field",
            max(0.0, worst_k - 1.0),
            tol.numeric,
            detail=f"{used} samples, worst margin {1.0 - worst_k:.3e}",
        ),
        _check(
            "gn.holder_chain",
            "lp interpolates between the two mass-critical integrals",
            max(0.0, -worst_holder),
            tol.algebraic,
            detail=f"{used} samples, smallest slack {worst_holder:.3e}",
        ),
    ]
    if skipped:
        checks.append(
            _check(
                "gn.degenerate_samples",
                "fields with vanishing derivative norms are excluded",
                0.0,
                tol.algebraic,
                skipped=True,
                detail=f"{skipped} degenerate sample(s) skipped",
            )
        )
    return VerificationReport(checks=tuple(checks))


# ---------------------------------------------------------------------------
# constants cross-relations and pure scaling algebra


def verify_constants(
    cr: ConstantsReport, params: Params, tol: TolProfile = TolProfile()
) -> VerificationReport:
    ep = params.exponents()
    checks = [
        _check(
            "const.k_routes_agree",
            "K from C equals K from c_eps",
            abs(K_from_C(cr.C, params) / K_from_c_eps(cr.c_eps, params) - 1.0),
            tol.algebraic,
        ),
        _check(
            "const.k_inversion_roundtrip",
            "c_eps = ((2/p) K)^(-2/(p-2)) inverts K = (p/2) c_eps^(-(p-2)/2)",
            abs(c_eps_from_K(cr.K, params) / cr.c_eps - 1.0),
            tol.algebraic,
        ),
        _check(
            "const.eps_c_roundtrip",
            "c -> eps_c -> c_eps returns c",
            abs(
                c_eps_formula(cr.C, replace(params, eps=eps_c_formula(2.0 * cr.c_eps, cr.C, params)))
                / (2.0 * cr.c_eps)
                - 1.0
            ),
            tol.algebraic,
        ),
        _check(
            "const.c_eps_scaling",
            "c_eps(s eps) / c_eps(eps) = s^(alpha/(p-2))",
            abs(
                c_eps_formula(cr.C, replace(params, eps=64.0 * params.eps))
                / (cr.c_eps * 64.0 ** (ep.alpha / (params.p - 2.0)))
                - 1.0
            ),
            tol.algebraic,
        ),
        _check(
            "const.omega_scaling",
            "omega(eps) scales like 1/eps at fixed optimizer mass",
            abs(
                omega_formula(cr.v_mass, replace(params, eps=2.0 * params.eps))
                * 2.0
                / cr.omega_eps
                - 1.0
            ),
            tol.algebraic,
        ),
    ]
    if cr.K_numeric is not None:
        checks.append(
            _check(
                "const.k_numeric_close",
                "ascent supremum reaches the closed-form K",
                abs(cr.K_numeric / cr.K - 1.0),
                tol.route,
            )
        )
    return VerificationReport(checks=tuple(checks))


def verify_scaling_algebra(
    gs: GroundState, params: Params, tol: TolProfile = TolProfile(), seed: int = 5
) -> VerificationReport:
    """Pure NormTuple algebra: scaling invariances and the g-polynomial facts."""
    nt = gs.nt
    w0 = weinstein(nt, params)
    worst = 0.0
    for t in (0.3, 0.9, 1.7, 3.3):
        worst = max(
            worst, abs(weinstein(mass_preserving_scale_laws(nt, t, params), params) / w0 - 1.0)
        )
    checks = [
        _check(
            "alg.weinstein_scale_invariance",
            "W_p is invariant under the mass-preserving rescaling",
            worst,
            tol.algebraic,
        )
    ]
    t_m = (2.0 * nt.mass / nt.mass) ** (1.0 / params.bigN)
    scaled = fiber_scale_laws(nt, t_m, params)
    checks.append(
        _check(
            "alg.fiber_mass_law",
            "the fiber scaling with t = (c/mass)^(1/N) lands exactly on mass c",
            abs(scaled.mass / (2.0 * nt.mass) - 1.0),
            tol.algebraic,
        )
    )
    n, p = params.bigN, params.p
    g_at_one = g_functions(1.0, n, p)
    checks.append(
        _check(
            "alg.g_zero_at_one",
            "g1(1) = g2(1) = g3(1) = 0",
            max(abs(g) for g in g_at_one),
            tol.algebraic,
        )
    )
    rng = np.random.default_rng(seed)
    worst_g = 0.0
    for t in np.exp(rng.uniform(math.log(0.05), math.log(20.0), size=200)):
        worst_g = max(worst_g, max(0.0, -min(g_functions(float(t), n, p))))
    checks.append(
        _check(
            "alg.g_nonnegative",
            "each g polynomial is nonnegative on (0, inf)",
            worst_g,
            tol.algebraic,
            detail="200 random t in [0.05, 20]",
        )
    )
    omega = gs.omega_extracted
    pm = params.with_omega(omega)
    worst_combo = 0.0
    for _ in range(50):
        sample = replace(
            nt,
            mass=float(rng.uniform(0.1, 5.0)),
            grad=float(rng.uniform(0.1, 5.0)),
            bilap=float(rng.uniform(0.1, 5.0)),
            lp=float(rng.uniform(0.1, 5.0)),
        )
        combo = params.bigN * nehari_residual(sample, pm) - pohozaev(sample, pm)
        direct = (
            params.eps * (n + 4.0) / 2.0 * sample.bilap
            + (n + 2.0) / 2.0 * sample.grad
            + omega * n / 2.0 * sample.mass
            - n * (p - 1.0) / p * sample.lp
        )
        scale = quadratic_scale(sample, pm) + sample.lp
        worst_combo = max(worst_combo, abs(combo - direct) / scale)
    checks.append(
        _check(
            "alg.nehari_pohozaev_combination",
            "N * nehari - pohozaev equals its displayed norm combination",
            worst_combo,
            1e-12,
            detail="50 random tuples",
        )
    )
    return VerificationReport(checks=tuple(checks))


# ---------------------------------------------------------------------------
# the full default suite


def full_verification(
    params: Params,
    grid: BoxGrid,
    config: SolverConfig,
    tol: TolProfile = TolProfile(),
    n_samples: int = 500,
    with_k_numeric: bool = True,
    energy_state: "GroundState | None" = None,
    action_state: "GroundState | None" = None,
) -> tuple:
    """Run every check family against fresh or supplied states.

    States not supplied are solved fresh (the constants pipeline always runs,
    since the checks need C and the optimizer mass).  Deterministic given the
    inputs; the report's provenance hashes both states and names the sampler
    seed.
    """
    from .constants import compute_constants
    from .fieldio import field_to_bytes
    from .solvers import petviashvili, route_Q
    import hashlib

    cr = compute_constants(params, grid, config, with_k_numeric=with_k_numeric)
    gs_energy = energy_state if energy_state is not None else route_Q(params, grid, config)
    gs_action = (
        action_state
        if action_state is not None
        else petviashvili(params.with_omega(cr.omega_eps), grid, config)
    )
    report = verify_constants(cr, params, tol)
    report = report.merged(verify_Q(gs_energy, cr, tol))
    report = report.merged(verify_equivalence(gs_energy, gs_action, tol))
    report = report.merged(
        verify_gn_random(params, cr.C, cr.K, n_samples=n_samples, seed=config.seed + 7, tol=tol)
    )
    report = report.merged(verify_scaling_algebra(gs_energy, params, tol, seed=config.seed + 11))
    provenance = {
        "params": {"bigN": params.bigN, "p": params.p, "eps": params.eps},
        "grid": {"dim": grid.dim, "points": grid.points_per_axis, "box": grid.box_length},
        "config_hash": config.config_hash(),
        "energy_state_sha256": hashlib.sha256(field_to_bytes(gs_energy.field)).hexdigest(),
        "action_state_sha256": hashlib.sha256(field_to_bytes(gs_action.field)).hexdigest(),
        "sampler_seed": config.seed + 7,
    }
    report = VerificationReport(checks=report.checks, provenance=provenance)
    return report, {"constants": cr, "energy": gs_energy, "action": gs_action}
