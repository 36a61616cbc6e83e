"""Command-line entry points for the worked scenarios.

Every subcommand runs its scenario, evaluates the scenario's checks against
tolerances, and emits a JSON report (or CSV tables for distributions).  The
process exits 0 iff all requested checks pass.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import AlgebraElement
from .experiments import (
    CHSHConfig,
    KSInstance,
    OscillatorConfig,
    TwoSlitConfig,
    bundled_uncolorable_instance,
    chsh_classical_simulation,
    epr_scenario,
    ks_search,
    single_triple_instance,
    two_level_scenario,
    two_slit_distribution,
)
from .experiments.chsh import chsh_exact, chsh_sampled
from .experiments.kochen_specker import verify_contextual, verify_noncontextual
from .experiments.oscillator import (
    ground_projector_distance,
    green_function,
    isserlis_four_point,
    two_point_closed_form,
)
from .gns import gns_representation, is_cyclic, is_exact, is_irreducible, vector_functional
from .states import QuantumState, expectation_functional


def _check(name: str, passed: bool, **detail) -> dict:
    entry = {"name": name, "passed": bool(passed)}
    entry.update({k: _plain(v) for k, v in detail.items()})
    return entry


def _plain(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    return json.loads(Path(path).read_text())


def _emit(report: dict, args, csv_rows: list[dict] | None = None) -> int:
    if args.format == "csv":
        buffer = io.StringIO()
        rows = csv_rows
        if rows is None:
            rows = [
                {k: v for k, v in chk.items()}
                for chk in report.get("checks", [])
            ]
        if rows:
            writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        text = buffer.getvalue()
    else:
        text = json.dumps(report, indent=2, default=_plain) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if report["passed"] else 1


def _finalize(report: dict) -> dict:
    report["passed"] = all(c["passed"] for c in report["checks"])
    return report


def _cmd_chsh(args) -> int:
    cfg_data = _load_config(args.config)
    config = CHSHConfig(
        a=cfg_data.get("a", CHSHConfig.a),
        a_prime=cfg_data.get("a_prime", CHSHConfig.a_prime),
        b=cfg_data.get("b", CHSHConfig.b),
        b_prime=cfg_data.get("b_prime", CHSHConfig.b_prime),
        n_samples=args.samples or cfg_data.get("n_samples", 1_000_000),
        seed=args.seed if args.seed is not None else cfg_data.get("seed", 0),
    )
    quantum_max = 1.0 / np.sqrt(2.0)
    checks = []
    if args.sampled:
        result = chsh_sampled(config)
        tol = args.tolerance if args.tolerance is not None else 5e-3
        checks.append(
            _check(
                "sampled combination reaches the quantum value",
                abs(result.N_sampled - quantum_max) <= tol,
                N_sampled=result.N_sampled,
                std_error=result.N_std_error,
                tolerance=tol,
            )
        )
    else:
        result = chsh_exact(config)
        tol = args.tolerance if args.tolerance is not None else 1e-12
        checks.append(
            _check(
                "exact combination equals the quantum value",
                abs(result.N_exact - quantum_max) <= tol,
                N_exact=result.N_exact,
                expected=quantum_max,
                tolerance=tol,
            )
        )
    checks.append(
        _check(
            "exact combination exceeds the classical bound",
            result.N_exact > result.classical_max + 1e-9,
            classical_max=result.classical_max,
        )
    )
    if args.classical:
        n_cl = args.samples or 1_000_000
        n_hat, sigma = chsh_classical_simulation(n_cl, config.seed)
        checks.append(
            _check(
                "single-joint-assignment simulation respects the bound",
                n_hat <= 0.5 + 4 * sigma,
                N_classical=n_hat,
                std_error=sigma,
            )
        )
    report = {
        "scenario": "chsh",
        "settings": {
            "a": config.a,
            "a_prime": config.a_prime,
            "b": config.b,
            "b_prime": config.b_prime,
            "n_samples": config.n_samples,
            "seed": config.seed,
        },
        "E_exact": _plain(result.E_exact),
        "E_sampled": _plain(result.E_sampled),
        "N_exact": result.N_exact,
        "N_sampled": result.N_sampled,
        "classical_max": result.classical_max,
        "checks": checks,
    }
    return _emit(_finalize(report), args)


def _cmd_ks(args) -> int:
    instance_path = args.instance or args.config
    if instance_path:
        instance = KSInstance.from_json(instance_path)
        expect_unsat = None
    else:
        instance = bundled_uncolorable_instance()
        expect_unsat = True
    checks = []
    noncontextual = ks_search(instance, "noncontextual")
    if expect_unsat:
        checks.append(
            _check(
                "bundled instance admits no single-valued assignment",
                not noncontextual.satisfiable,
            )
        )
    elif noncontextual.satisfiable:
        checks.append(
            _check(
                "returned assignment satisfies every context",
                verify_noncontextual(instance, noncontextual.assignment),
            )
        )
    contextual = ks_search(instance, "contextual")
    checks.append(
        _check(
            "per-context assignment exists and verifies",
            contextual.satisfiable
            and verify_contextual(instance, contextual.assignment),
        )
    )
    triple = ks_search(single_triple_instance(), "noncontextual")
    checks.append(
        _check("a single orthogonal triple is satisfiable", triple.satisfiable)
    )
    report = {
        "scenario": "kochen-specker",
        "n_directions": int(instance.directions.shape[0]),
        "n_contexts": len(instance.contexts),
        "dimension": instance.dim,
        "noncontextual_satisfiable": noncontextual.satisfiable,
        "noncontextual_assignment": _plain(
            None
            if noncontextual.assignment is None
            else {str(k): v for k, v in noncontextual.assignment.items()}
        ),
        "checks": checks,
    }
    return _emit(_finalize(report), args)


def _cmd_two_slit(args) -> int:
    cfg_data = _load_config(args.config)
    config = TwoSlitConfig(
        slit_center_a=cfg_data.get("slit_center_a", TwoSlitConfig.slit_center_a),
        slit_center_b=cfg_data.get("slit_center_b", TwoSlitConfig.slit_center_b),
        slit_width=cfg_data.get("slit_width", TwoSlitConfig.slit_width),
        lattice_size=cfg_data.get("lattice_size", TwoSlitConfig.lattice_size),
        momentum_cutoff=cfg_data.get("momentum_cutoff", TwoSlitConfig.momentum_cutoff),
    )
    result = two_slit_distribution(config, args.slits)
    tol = args.tolerance if args.tolerance is not None else 1e-12
    checks = [
        _check(
            "distribution is normalized",
            abs(result.total.sum() - 1.0) <= tol,
            total=float(result.total.sum()),
        )
    ]
    if args.slits == "both":
        closure = np.abs(
            result.total - result.classical_mixture - result.interference
        ).max()
        checks.append(
            _check(
                "interference term is visible",
                float(np.abs(result.interference).max()) > 0.01,
                max_interference=float(np.abs(result.interference).max()),
            )
        )
        checks.append(
            _check(
                "distribution differs from the classical mixture",
                float(np.abs(result.total - result.classical_mixture).max()) > 1e-3,
            )
        )
        checks.append(
            _check("decomposition closes pointwise", closure <= 1e-10, residual=float(closure))
        )
    else:
        checks.append(
            _check(
                "single-slit interference vanishes identically",
                float(np.abs(result.interference).max()) == 0.0,
            )
        )
    report = {
        "scenario": "two-slit",
        "slits": args.slits,
        "lattice_size": config.lattice_size,
        "checks": checks,
    }
    return _emit(_finalize(report), args, csv_rows=result.rows())


def _cmd_oscillator(args) -> int:
    cfg_data = _load_config(args.config)
    config = OscillatorConfig(
        omega=args.omega or cfg_data.get("omega", 1.0),
        fock_dim=args.fock_dim or cfg_data.get("fock_dim", 16),
        r=args.r or cfg_data.get("r", 10.0),
    )
    tol = args.tolerance if args.tolerance is not None else 1e-10
    dist = ground_projector_distance(config)
    checks = [
        _check(
            "vacuum projector limit has the predicted distance",
            abs(dist - np.exp(-config.r)) <= 1e-12,
            distance=dist,
            expected=float(np.exp(-config.r)),
        )
    ]
    t1, t2 = args.t1, args.t2
    g = green_function([t1, t2], config)
    expected = two_point_closed_form(t1, t2, config.omega)
    checks.append(
        _check(
            "two-point function matches the closed form",
            abs(g - expected) <= tol,
            value={"re": g.real, "im": g.imag},
            expected={"re": expected.real, "im": expected.imag},
        )
    )
    times = [t1, t2, 0.5 * (t1 + t2), t2 + 1.0]
    g4 = green_function(times, config)
    pairing = isserlis_four_point(times, config)
    checks.append(
        _check(
            "four-point function equals the pairing sum",
            abs(g4 - pairing) <= 1e-9,
            value={"re": g4.real, "im": g4.imag},
        )
    )
    report = {
        "scenario": "oscillator",
        "omega": config.omega,
        "fock_dim": config.fock_dim,
        "r": config.r,
        "checks": checks,
    }
    return _emit(_finalize(report), args)


def _cmd_epr(args) -> int:
    direction = np.array([float(x) for x in args.direction.split(",")])
    result = epr_scenario(direction, args.outcome)
    tol = args.tolerance if args.tolerance is not None else 1e-12
    pre_dev = float(np.abs(result.pre_state.rho - np.eye(2) / 2).max())
    checks = [
        _check("pre-measurement reduced state is maximally mixed", pre_dev <= tol, deviation=pre_dev),
        _check(
            "partner value is the opposite outcome",
            result.partner_value == -args.outcome,
            partner_value=result.partner_value,
        ),
    ]
    from .experiments.spin import spin_eigenvector

    partner_vec = spin_eigenvector(direction, 1 if result.partner_value > 0 else -1)
    post_dev = float(
        np.abs(result.post_state.rho - np.outer(partner_vec, partner_vec.conj())).max()
    )
    checks.append(
        _check("post-measurement reduced state is the partner projector", post_dev <= tol, deviation=post_dev)
    )
    gen = np.random.Generator(np.random.Philox(key=args.seed or 0))
    anti = True
    for _ in range(args.samples or 100):
        v = gen.normal(size=3)
        v /= np.linalg.norm(v)
        out = 0.5 if gen.random() < 0.5 else -0.5
        anti &= epr_scenario(v, out).partner_value == -out
    checks.append(_check("anti-correlation is exact over random directions", anti))
    report = {
        "scenario": "epr",
        "direction": _plain(result.direction),
        "outcome": result.outcome,
        "partner_value": result.partner_value,
        "post_state": _plain(result.post_state.rho),
        "checks": checks,
    }
    return _emit(_finalize(report), args)


def _cmd_two_level(args) -> int:
    result = two_level_scenario(
        seed=args.seed if args.seed is not None else 0,
        n_states=args.samples or 100_000,
    )
    checks = [
        _check("ground-class fields value the Hamiltonian at -E", result.ground_energy_exact),
        _check("field values are spectrum points", result.spectrum_valued),
        _check(
            "dephased observable is valued at the ground expectation",
            result.dephased_max_deviation <= 1e-12,
            max_deviation=result.dephased_max_deviation,
        ),
        _check(
            "ensemble means match the ground expectation",
            result.ensemble_ok,
            deviations=_plain(result.ensemble_deviations),
            tolerances=_plain(result.ensemble_tolerances),
        ),
    ]
    report = {
        "scenario": "two-level",
        "seed": result.seed,
        "n_states": result.n_states,
        "checks": checks,
    }
    return _emit(_finalize(report), args)


def _cmd_gns_demo(args) -> int:
    tol = args.tolerance if args.tolerance is not None else 1e-10
    gen = np.random.Generator(np.random.Philox(key=args.seed or 0))
    checks = []
    for n in (2, 3):
        vec = gen.normal(size=n) + 1j * gen.normal(size=n)
        pure = QuantumState.from_vector(vec)
        rep = gns_representation(pure)
        residual = 0.0
        for _ in range(100):
            element = AlgebraElement(gen.normal(size=(n, n)) + 1j * gen.normal(size=(n, n)))
            residual = max(
                residual,
                abs(vector_functional(rep, element) - expectation_functional(pure, element)),
            )
        checks.append(
            _check(
                f"pure state on M{n}: cyclic vector recovers the state",
                residual <= tol and rep.rep_dim == n,
                rep_dim=rep.rep_dim,
                max_residual=residual,
            )
        )
        checks.append(
            _check(
                f"pure state on M{n}: irreducible and cyclic",
                is_irreducible(rep) and is_cyclic(rep),
            )
        )
    mixed = QuantumState.maximally_mixed(2)
    rep = gns_representation(mixed)
    checks.append(
        _check(
            "maximally mixed on M2: reducible, dimension 4, exact",
            rep.rep_dim == 4 and not is_irreducible(rep) and is_exact(rep),
            rep_dim=rep.rep_dim,
        )
    )
    report = {"scenario": "gns-demo", "checks": checks}
    return _emit(_finalize(report), args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algq",
        description="Desk-scale algebraic quantum mechanics scenarios",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON scenario config file")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--tolerance", type=float, default=None)

    p = sub.add_parser("chsh", help="CHSH combination, exact and sampled")
    common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--sampled", action="store_true")
    p.add_argument(
        "--classical",
        action="store_true",
        help="also run the single-joint-assignment local simulation",
    )
    p.set_defaults(func=_cmd_chsh)

    p = sub.add_parser("ks", help="value assignments on orthogonal direction sets")
    common(p)
    p.add_argument("--instance", help="JSON instance file (default: bundled set)")
    p.set_defaults(func=_cmd_ks)

    p = sub.add_parser("two-slit", help="lattice interference distribution")
    common(p)
    p.add_argument("--slits", choices=("both", "a_only", "b_only"), default="both")
    p.set_defaults(func=_cmd_two_slit)

    p = sub.add_parser("oscillator", help="truncated-basis correlation functions")
    common(p)
    p.add_argument("--omega", type=float, default=None)
    p.add_argument("--fock-dim", dest="fock_dim", type=int, default=None)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--t1", type=float, default=0.0)
    p.add_argument("--t2", type=float, default=1.0)
    p.set_defaults(func=_cmd_oscillator)

    p = sub.add_parser("epr", help="singlet measurement collapse")
    common(p)
    p.add_argument("--direction", default="0,0,1", help="comma-separated 3-vector")
    p.add_argument("--outcome", type=float, default=0.5, choices=(0.5, -0.5))
    p.set_defaults(func=_cmd_epr)

    p = sub.add_parser("two-level", help="sign-field states and ergodicity")
    common(p)
    p.set_defaults(func=_cmd_two_level)

    p = sub.add_parser("gns-demo", help="representations built from states")
    common(p)
    p.set_defaults(func=_cmd_gns_demo)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
