"""
Named verification suites with default grids and seed counts
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, TypeVar

import numpy as np
from pydantic import BaseModel

from src.core.config import settings
from src.core.exceptions import CheckFailure, UnknownSuiteError
from src.core.logging import get_logger
from src.models.closed_system import closed_system_reduction_check, quench_model, without_bath
from src.models.random_models import random_hermitian, random_model
from src.models.schemas import BosonMode, SpinBosonParams, TwoQubitDephasingParams
from src.models.spin_boson import (
    continuum_decay_check,
    lab_frame_deviation,
    magnus_trotter_deviation,
    ohmic_modes,
    spin_boson_convergence,
)
from src.models.two_qubit import (
    two_qubit_analytic_heat,
    two_qubit_analytic_relative_entropy,
    two_qubit_dephasing_model,
)
from src.otm.ensemble import build_guessed_ensemble
from src.otm.identities import (
    guessed_heat_identity_residual,
    information_free_energy_relation,
    max_guessed_work_gap,
    mean_energy_change_residual,
    monotonicity_gap,
    partition_consistency_residual,
    stein_asymptotic_rate,
    theorem1_residual,
    theorem2_residual,
)
from src.otm.max_entropy import max_entropy_property_check
from src.qcore.channels import choi_cptp_check
from src.qcore.operators import identity, partial_trace_bath, tensor
from src.qcore.spectral import evolution_operator, unitarity_residual
from src.thermo.gibbs import gibbs
from src.tpm.distribution import build_tpm_distribution, standard_jarzynski_average
from src.tpm.relations import deviation_inequalities, modified_vs_standard_residual, work_relation_residual


logger = get_logger(__name__)

T = TypeVar("T")


class SuiteResult(BaseModel):
    """
    Worst observed value of one property against its tolerance (observed <= tolerance passes)
    """
    check: str
    observed: float
    tolerance: float
    samples: int

    @property
    def passed(self) -> bool:
        return not math.isnan(self.observed) and self.observed <= self.tolerance


def _map(func: Callable[[int], T], items: Iterable[int], threads: int) -> List[T]:
    items = list(items)
    if threads <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def _collect(records: List[Dict[str, float]], tolerances: Dict[str, float]) -> List[SuiteResult]:
    results = []
    for name, tolerance in tolerances.items():
        values = [r[name] for r in records if name in r]
        worst = max(values) if values else math.nan
        results.append(SuiteResult(check=name, observed=worst, tolerance=tolerance, samples=len(values)))
    return results


def sweep_model(seed: int, **overrides):
    """Property-sweep instance: d_S in {2, 3}, d_B in {2, 3, 4}, 1-3 segments, driven system"""
    options = dict(
        d_system=(2, 3)[seed % 2],
        d_bath=(2, 3, 4)[(seed // 2) % 3],
        n_segments=1 + (seed // 6) % 3,
        time_dependent_system=True,
    )
    options.update(overrides)
    return random_model(seed, **options)


def _adjointness_residual(seed: int, d_system: int, d_bath: int) -> float:
    """|Tr[Tr_B(X) Y] - Tr[X (Y ⊗ I)]| for random Hermitian X, Y"""
    rng = np.random.default_rng(10_000 + seed)
    x = random_hermitian(rng, (d_system, d_bath))
    y = random_hermitian(rng, (d_system,))
    lhs = np.trace(partial_trace_bath(x, 1).data @ y.data)
    rhs = np.trace(x.data @ tensor(y, identity((d_bath,))).data)
    return float(abs(lhs - rhs))


def core_identities(n_seeds: Optional[int], threads: int) -> List[SuiteResult]:
    n_seeds = n_seeds or 1000
    numerics = settings.numerics

    def one(seed: int) -> Dict[str, float]:
        m = sweep_model(seed)
        g = build_guessed_ensemble(m)
        record = {
            "theorem1_residual": theorem1_residual(g, m).residual,
            "heat_identity_residual": guessed_heat_identity_residual(g, m),
            "jarzynski1_residual": partition_consistency_residual(g),
            "mean_energy_residual": mean_energy_change_residual(g, m),
            "info_free_energy_residual": information_free_energy_relation(g),
            "stein_consistency_residual": stein_asymptotic_rate(g).consistency_residual,
            "guessed_state_min_eigenvalue_violation": max(0.0, -float(np.linalg.eigvalsh(g.theta_sb.data)[0])),
        }
        if seed < 500:
            u = evolution_operator(m.protocol)
            tau_b = gibbs(m.h_b, m.beta_b).state
            choi = choi_cptp_check(u, tau_b, m.d_system)
            record.update(
                channel_trace_residual=choi.trace_residual,
                choi_positivity_violation=max(0.0, -choi.min_choi_eigenvalue),
                kraus_completeness_residual=choi.kraus_completeness_residual,
                unitarity_residual=unitarity_residual(u),
                partial_trace_adjointness=_adjointness_residual(seed, m.d_system, m.d_bath),
            )
        return record

    return _collect(
        _map(one, range(n_seeds), threads),
        {
            "theorem1_residual": numerics.identity_rtol,
            "heat_identity_residual": numerics.identity_rtol,
            "jarzynski1_residual": 1e-10,
            "mean_energy_residual": 1e-10,
            "info_free_energy_residual": numerics.identity_rtol,
            "stein_consistency_residual": numerics.identity_rtol,
            "guessed_state_min_eigenvalue_violation": numerics.tol_psd,
            "channel_trace_residual": 1e-9,
            "choi_positivity_violation": 1e-9,
            "kraus_completeness_residual": 1e-9,
            "unitarity_residual": 1e-9,
            "partial_trace_adjointness": 1e-10,
        },
    )


def two_qubit_grid() -> List[TwoQubitDephasingParams]:
    """J, omega_B in {0.3, 1, 2.5}, beta in {0.2, 1, 5}, eight times inside the first half period"""
    grid = []
    for j in (0.3, 1.0, 2.5):
        for omega_b in (0.3, 1.0, 2.5):
            rabi = math.sqrt(j ** 2 + omega_b ** 2)
            for beta in (0.2, 1.0, 5.0):
                for k in range(8):
                    t = (math.pi / rabi) * (k + 1) / 9
                    grid.append(TwoQubitDephasingParams(omega_b=omega_b, j=j, beta=beta, t=t))
    return grid


def _relative(numeric: float, exact: float) -> float:
    return abs(numeric - exact) / abs(exact) if exact != 0 else abs(numeric)


def spin_boson_cases() -> List[SpinBosonParams]:
    """One and two modes at beta omega = 2, each with its validated cutoff"""
    single = [BosonMode(omega=1.0, g=0.1)]
    double = [BosonMode(omega=1.0, g=0.1), BosonMode(omega=1.5, g=0.05)]
    return [
        SpinBosonParams.validated(omega0=1.0, modes=single, beta=2.0, t=math.pi),
        SpinBosonParams.validated(omega0=1.0, modes=double, beta=2.0, t=math.pi),
    ]


def oracles(n_seeds: Optional[int], threads: int) -> List[SuiteResult]:
    grid = two_qubit_grid()

    def one(index: int) -> Dict[str, float]:
        p = grid[index]
        g = build_guessed_ensemble(two_qubit_dephasing_model(p))
        heat = two_qubit_analytic_heat(p)
        return {
            "two_qubit_heat_error": _relative(g.guessed_heat, heat),
            "two_qubit_entropy_error": _relative(g.relative_entropy_full, two_qubit_analytic_relative_entropy(p)),
            "two_qubit_beta_q_plus_d": abs(p.beta * g.guessed_heat + g.relative_entropy_full),
        }

    records = _map(one, range(len(grid)), threads)
    for params in spin_boson_cases():
        report = spin_boson_convergence(params, extra_steps=0)
        records.append({"spin_boson_heat_error": report.relative_errors[0]})
    return _collect(
        records,
        {
            "two_qubit_heat_error": 1e-8,
            "two_qubit_entropy_error": 1e-8,
            "two_qubit_beta_q_plus_d": 1e-8,
            "spin_boson_heat_error": 1e-3,
        },
    )


def inequalities(n_seeds: Optional[int], threads: int) -> List[SuiteResult]:
    n_seeds = n_seeds or 1000
    slack = settings.numerics.inequality_slack

    def one(seed: int) -> Dict[str, float]:
        m = sweep_model(seed)
        g = build_guessed_ensemble(m)
        gaps = max_guessed_work_gap(g, m)
        record = {
            "gap_full_violation": max(0.0, -gaps.gap_full),
            "gap_reduced_violation": max(0.0, gaps.gap_full - gaps.gap_reduced),
            "monotonicity_violation": max(0.0, -monotonicity_gap(g)),
        }
        if seed < 500:
            d = build_tpm_distribution(m)
            expected = math.exp(-m.beta_s * g.delta_f)
            deviation = deviation_inequalities(m, g, d)
            record.update(
                tpm_normalization_residual=abs(float(d.probabilities.sum()) - 1.0),
                tpm_jarzynski_residual=abs(standard_jarzynski_average(d, m.beta_s) - expected) / expected,
                work_relation_residual=work_relation_residual(m, g),
                deviation_product_violation=max(0.0, 1.0 - deviation.product),
                deviation_bounds_failed=0.0 if deviation.all_ok else 1.0,
                modified_vs_standard_residual=modified_vs_standard_residual(g, d),
            )
        if seed < 100:
            m3 = sweep_model(seed, d_system=3)
            g3 = build_guessed_ensemble(m3)
            report = max_entropy_property_check(g3, m3, n_perturbations=50, seed=seed)
            record["max_entropy_increase"] = max(0.0, report.worst_increase)
        return record

    return _collect(
        _map(one, range(n_seeds), threads),
        {
            "gap_full_violation": slack,
            "gap_reduced_violation": slack,
            "monotonicity_violation": slack,
            "tpm_normalization_residual": 1e-9,
            "tpm_jarzynski_residual": settings.numerics.identity_rtol,
            "work_relation_residual": slack,
            "deviation_product_violation": slack,
            "deviation_bounds_failed": 0.0,
            "modified_vs_standard_residual": settings.numerics.identity_rtol,
            "max_entropy_increase": slack,
        },
    )


def closed_system(n_seeds: Optional[int], threads: int) -> List[SuiteResult]:
    n_seeds = n_seeds or 200

    def one(seed: int) -> Dict[str, float]:
        records = {}
        for m in (sweep_model(seed, interaction_scale=0.0), quench_model(seed)):
            g = build_guessed_ensemble(m)
            report = closed_system_reduction_check(m, g)
            bare = build_guessed_ensemble(without_bath(m))
            candidates = {
                "guessed_heat": abs(report.guessed_heat),
                "work_minus_delta_e": abs(report.work_minus_delta_e),
                "relative_entropy_gap": report.relative_entropy_gap,
                "guessed_state_residual": report.guessed_state_residual,
                "closed_jarzynski_residual": report.jarzynski_residual,
                "uncoupled_vs_bare_residual": float(np.max(np.abs(g.rho_s_tilde.data - bare.rho_s_tilde.data))),
            }
            for key, value in candidates.items():
                records[key] = max(records.get(key, 0.0), value)
        return records

    return _collect(
        _map(one, range(n_seeds), threads),
        {
            "guessed_heat": 1e-10,
            "work_minus_delta_e": 1e-10,
            "relative_entropy_gap": settings.numerics.inequality_slack,
            "guessed_state_residual": 1e-10,
            "closed_jarzynski_residual": settings.numerics.identity_rtol,
            "uncoupled_vs_bare_residual": 1e-10,
        },
    )


def spin_boson_suite(n_seeds: Optional[int], threads: int) -> List[SuiteResult]:
    records = []
    for params in spin_boson_cases():
        report = spin_boson_convergence(params)
        records.append({
            "heat_error_at_validated_cutoff": report.relative_errors[0],
            "ladder_not_monotone": 0.0 if report.monotone else 1.0,
            "exp_average_delta_e_residual": report.exp_average_residual,
        })
    single = spin_boson_cases()[0]
    records.append({
        "magnus_trotter_deviation": magnus_trotter_deviation(single, n_steps=1000),
        "lab_frame_deviation": lab_frame_deviation(single),
    })
    decay = continuum_decay_check(ohmic_modes(n_modes=200, omega_c=1.0, coupling=0.05), omega_c=1.0)
    records.append({"continuum_late_to_peak_ratio": decay.ratio})
    return _collect(
        records,
        {
            "heat_error_at_validated_cutoff": 1e-3,
            "ladder_not_monotone": 0.0,
            "exp_average_delta_e_residual": 1e-9,
            "magnus_trotter_deviation": 1e-6,
            "lab_frame_deviation": 1e-6,
            "continuum_late_to_peak_ratio": 0.1,
        },
    )


TEMPERATURE_GRID = (0.25, 0.5, 1.0, 2.0, 3.0)


def two_temperature(n_seeds: Optional[int], threads: int) -> List[SuiteResult]:
    per_cell = n_seeds or 4
    cells = [(bs, bb) for bs in TEMPERATURE_GRID for bb in TEMPERATURE_GRID]

    def one(index: int) -> Dict[str, float]:
        beta_s, beta_b = cells[index // per_cell]
        seed = index % per_cell
        m = random_model(seed, 2, 3, n_segments=2, time_dependent_system=True, beta_s=beta_s, beta_b=beta_b)
        g = build_guessed_ensemble(m)
        report = theorem2_residual(m, g)
        record = {
            "theorem2_residual": report.residual,
            "work_bound_violation": max(0.0, -report.work_bound_gap),
        }
        if beta_s == beta_b:
            reference = theorem1_residual(g, m)
            same = report.lhs == reference.lhs and report.rhs == reference.rhs
            record["theorem1_reduction_mismatch"] = 0.0 if same else 1.0
        return record

    records = _map(one, range(len(cells) * per_cell), threads)
    p = TwoQubitDephasingParams(omega_b=1.0, j=1.0, beta=1.0, beta_b=2.0, t=math.pi / (2 * math.sqrt(2)))
    g = build_guessed_ensemble(two_qubit_dephasing_model(p))
    records.append({"two_qubit_two_temperature_heat_error": _relative(g.guessed_heat, two_qubit_analytic_heat(p))})
    return _collect(
        records,
        {
            "theorem2_residual": settings.numerics.identity_rtol,
            "work_bound_violation": settings.numerics.inequality_slack,
            "theorem1_reduction_mismatch": 0.0,
            "two_qubit_two_temperature_heat_error": 1e-8,
        },
    )


SUITES: Dict[str, Callable[[Optional[int], int], List[SuiteResult]]] = {
    "core-identities": core_identities,
    "oracles": oracles,
    "inequalities": inequalities,
    "closed-system": closed_system,
    "spin-boson-convergence": spin_boson_suite,
    "two-temperature": two_temperature,
}


def run_suite(name: str, n_seeds: Optional[int] = None, threads: Optional[int] = None) -> List[SuiteResult]:
    """
    Run a registered suite; raise CheckFailure naming the worst failing property
    """
    if name not in SUITES:
        raise UnknownSuiteError(name, list(SUITES))
    threads = threads or settings.runtime.threads
    logger.info("suite_started", suite=name, seeds=n_seeds, threads=threads)
    results = SUITES[name](n_seeds, threads)
    failed = [r for r in results if not r.passed]
    for result in results:
        logger.info("suite_check", suite=name, check=result.check, observed=result.observed, passed=result.passed)
    if failed:
        worst = max(failed, key=lambda r: math.inf if r.tolerance == 0 or math.isnan(r.observed)
                    else r.observed / r.tolerance)
        raise CheckFailure(worst.check, worst.observed, worst.tolerance, results=results)
    return results


def format_table(results: List[SuiteResult]) -> str:
    """Fixed-width pass/fail table"""
    width = max(len("check"), *(len(r.check) for r in results))
    lines = [f"{'check':<{width}}  {'worst':>12}  {'tolerance':>10}  {'samples':>7}  status"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.check:<{width}}  {r.observed:>12.3e}  {r.tolerance:>10.1e}  {r.samples:>7d}  {status}")
    return "\n".join(lines)
