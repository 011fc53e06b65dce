"""Command-line interface: every computation as a subcommand that writes
deterministic CSV/JSON files.

Subcommands: generators, conjugate, decompose, collimation, oscillator,
sweep, eom.  All numeric flags default to the standard figure parameters
(l=200, omega=1, truncation 25).  Exit code 0 means every requested output
was written and all hard invariants passed; violated invariants are printed
with their measured residuals and exit with code 1.  GPOLAB_THREADS caps the
sweep worker pool.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .collimation import collimation_report, random_hermitian
from .densekernel import matrix_power
from .dynamics import eom_residual
from .gpo import (
    Dimension,
    build_conjugate_pair,
    build_generators,
    commutator_witness,
    conjugate_pair_checks,
    generator_checks,
)
from .oscillator import (
    OscillatorSpec,
    SweepRow,
    build_hamiltonian,
    cosecant_form_deviation,
    eigenvalue_bound,
    spectrum,
)
from .output import fmt, matrix_payload, write_csv, write_json
from .schwinger import decompose, grid_rows

GENERATOR_TOLERANCES = {
    "braiding": 1e-12,
    "toroidal_a": 1e-9,
    "toroidal_b": 1e-9,
    "trace_a": 1e-9,
    "trace_b": 1e-9,
    "dft_conjugation": 1e-10,
    "fourier_fourth_power": 1e-10,
    "unitarity_a": 1e-10,
    "unitarity_b": 1e-10,
    "unitarity_s": 1e-10,
}

CONJUGATE_TOLERANCES = {
    "constraint": 1e-12,
    "hermiticity_phi": 1e-12,
    "hermiticity_pi": 1e-12,
    "fourier_fourth_power": 1e-10,
    "parity_phi": 1e-10,
    "parity_pi": 1e-10,
    "momentum_series": 1e-10,
    "momentum_cosecant": 1e-10,
    "spectra_match": 1e-10,
    "witness_diagonal": 1e-12,
}


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def _odd_truncation(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"must be an odd integer >= 3, got {value}")
    return value


def _violations(checks: dict, tolerances: dict) -> list:
    out = []
    for name, value in sorted(checks.items()):
        tol = tolerances.get(name)
        if tol is not None and value > tol:
            out.append(f"{name}: residual {fmt(value)} exceeds {fmt(tol)}")
    return out


def _cmd_generators(args, written) -> list:
    gens = build_generators(Dimension(args.l))
    checks = generator_checks(gens)
    path = Path(args.out)
    write_json(
        path,
        {
            "l": args.l,
            "n": gens.dim.n,
            "matrices": {
                "a": matrix_payload(gens.a),
                "b": matrix_payload(gens.b),
                "s": matrix_payload(gens.s),
            },
            "checks": checks,
            "tolerances": GENERATOR_TOLERANCES,
        },
    )
    written.append(path)
    print(f"wrote {path}")
    return _violations(checks, GENERATOR_TOLERANCES)


def _cmd_conjugate(args, written) -> list:
    dim = Dimension(args.l)
    pair = build_conjugate_pair(dim, args.alpha)
    gens = build_generators(dim)
    checks = conjugate_pair_checks(pair, gens)
    witness = commutator_witness(pair, gens)
    checks["witness_diagonal"] = float(np.abs(np.diag(witness.z)).max())
    path = Path(args.out)
    write_json(
        path,
        {
            "l": args.l,
            "n": dim.n,
            "alpha": pair.alpha,
            "beta": pair.beta,
            "matrices": {
                "phi": matrix_payload(pair.phi),
                "pi": matrix_payload(pair.pi),
                "z": matrix_payload(witness.z),
            },
            "checks": checks,
            "tolerances": CONJUGATE_TOLERANCES,
        },
    )
    written.append(path)
    print(f"wrote {path}")
    return _violations(checks, CONJUGATE_TOLERANCES)


def _cmd_decompose(args, written) -> list:
    dim = Dimension(args.l)
    gens = build_generators(dim)
    pair = build_conjugate_pair(dim)
    if args.operator == "momentum-power":
        op = matrix_power(pair.pi, args.power)
    elif args.operator == "random":
        op = random_hermitian(dim, args.seed)
    elif args.operator == "oscillator":
        op = build_hamiltonian(OscillatorSpec(dim=dim, omega_freq=args.omega), pair)
    else:
        op = (gens.a + gens.a.conj().T) / 2
    coeffs = decompose(op, gens)
    path = Path(args.out)
    write_csv(path, ["b", "a", "re", "im", "abs"], grid_rows(coeffs))
    written.append(path)
    print(f"wrote {path}")
    return []


def _profile_rows(profile):
    for k, w in zip(profile.dim.indices(), profile.weights):
        yield int(k), float(w)


def _cmd_collimation(args, written) -> list:
    dim = Dimension(args.l)
    gens = build_generators(dim)
    pair = build_conjugate_pair(dim)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    summary = []
    power_op = np.eye(dim.n, dtype=np.complex128)
    reports = {}
    for k in range(1, max(args.powers) + 1):
        power_op = power_op @ pair.pi
        if k in args.powers:
            reports[k] = collimation_report(decompose(power_op, gens))
    for k in sorted(set(args.powers)):
        report = reports[k]
        path = outdir / f"profile_momentum_power_{k}.csv"
        write_csv(path, ["a", "weight"], _profile_rows(report.phi_profile))
        written.append(path)
        summary.append((f"momentum_power_{k}", k, report.c_phi, report.c_pi))

    random_report = collimation_report(decompose(random_hermitian(dim, args.seed), gens))
    path = outdir / "profile_random.csv"
    write_csv(path, ["a", "weight"], _profile_rows(random_report.phi_profile))
    written.append(path)
    summary.append(("random_hermitian", "", random_report.c_phi, random_report.c_pi))

    path = outdir / "summary.csv"
    write_csv(path, ["operator", "n", "c_phi", "c_pi"], summary)
    written.append(path)
    print(f"wrote {len(written)} files under {outdir}")
    return []


def _spectrum_rows(result):
    om = result.spec.omega_freq
    for k, lam in enumerate(result.eigenvalues):
        yield k, float(lam), float(lam / om), (k + 0.5), float(result.vanilla_deviation[k])


def _cmd_oscillator(args, written) -> list:
    dim = Dimension(args.l)
    pair = build_conjugate_pair(dim)
    base = Path(args.out)
    for om in args.omega:
        spec = OscillatorSpec(dim=dim, omega_freq=om)
        result = spectrum(spec)
        if len(args.omega) == 1:
            path = base
        else:
            path = base.with_name(f"{base.stem}-omega-{om:g}{base.suffix}")
        write_csv(
            path,
            ["k", "lambda", "lambda_over_omega", "vanilla", "deviation"],
            _spectrum_rows(result),
        )
        written.append(path)
        deviation = cosecant_form_deviation(spec, pair)
        print(
            f"wrote {path} (closed-form cross-check: as written "
            f"{fmt(deviation['cosecant_form'])}, off-diagonal negated "
            f"{fmt(deviation['cosecant_form_off_diagonal_negated'])})"
        )
    return []


def _sweep_cell(l: int, omegas) -> list:
    dim = Dimension(l)
    pair = build_conjugate_pair(dim)
    rows = []
    for om in sorted(omegas):
        spec = OscillatorSpec(dim=dim, omega_freq=om)
        h = build_hamiltonian(spec, pair)
        w = np.linalg.eigvalsh(h)
        rows.append(
            SweepRow(
                l=l,
                n=dim.n,
                omega=om,
                lambda_min_over_omega=float(w[0] / om),
                lambda_max_over_omega=float(w[-1] / om),
                bound_over_omega=eigenvalue_bound(l, om) / om,
            )
        )
    return rows


def _cmd_sweep(args, written) -> list:
    ls = sorted(args.l)
    env = os.environ.get("GPOLAB_THREADS", "")
    workers = int(env) if env.strip() else min(8, os.cpu_count() or 1)
    workers = max(1, min(workers, len(ls)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_sweep_cell, l, args.omega) for l in ls]
        rows = [row for future in futures for row in future.result()]
    path = Path(args.out)
    write_csv(
        path,
        ["l", "dim", "omega", "lambda_min_over_omega", "lambda_max_over_omega", "bound_over_omega"],
        (
            (r.l, r.n, r.omega, r.lambda_min_over_omega, r.lambda_max_over_omega, r.bound_over_omega)
            for r in rows
        ),
    )
    written.append(path)
    print(f"wrote {path}")
    return []


def _cmd_eom(args, written) -> list:
    dim = Dimension(args.l)
    gens = build_generators(dim)
    pair = build_conjugate_pair(dim)
    h = build_hamiltonian(OscillatorSpec(dim=dim, omega_freq=args.omega), pair)
    reports = [
        eom_residual(h, pair, gens, variable, args.truncation).as_dict()
        for variable in ("pi", "phi")
    ]
    path = Path(args.out)
    write_json(
        path,
        {"omega": args.omega, "truncation_order": args.truncation, "reports": reports},
    )
    written.append(path)
    print(f"wrote {path}")
    return []


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpolab",
        description="Finite-dimensional conjugate variables, collimation, and oscillator sweeps.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("generators", help="write the generator matrices and identity residuals")
    p.add_argument("--l", type=_nonneg_int, default=200)
    p.add_argument("--out", default="generators.json")
    p.set_defaults(handler=_cmd_generators)

    p = sub.add_parser("conjugate", help="write the conjugate pair, witness, and residuals")
    p.add_argument("--l", type=_nonneg_int, default=200)
    p.add_argument("--alpha", type=_positive_float, default=None)
    p.add_argument("--out", default="conjugate.json")
    p.set_defaults(handler=_cmd_conjugate)

    p = sub.add_parser("decompose", help="expand one operator over the unitary basis (CSV)")
    p.add_argument("--l", type=_nonneg_int, default=200)
    p.add_argument(
        "--operator",
        choices=["momentum-power", "random", "oscillator", "cosine"],
        default="momentum-power",
    )
    p.add_argument("--power", type=_positive_int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--omega", type=_positive_float, default=1.0)
    p.add_argument("--out", default="schwinger.csv")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("collimation", help="shift profiles and collimation summary (CSV per operator)")
    p.add_argument("--l", type=_positive_int, default=200)
    p.add_argument("--powers", type=_positive_int, nargs="+", default=[1, 2, 3, 4, 5, 6])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="collimation")
    p.set_defaults(handler=_cmd_collimation)

    p = sub.add_parser("oscillator", help="oscillator spectrum CSV (one file per omega)")
    p.add_argument("--l", type=_nonneg_int, default=200)
    p.add_argument("--omega", type=_positive_float, nargs="+", default=[1.0])
    p.add_argument("--out", default="spectrum.csv")
    p.set_defaults(handler=_cmd_oscillator)

    p = sub.add_parser("sweep", help="lambda_min/lambda_max sweep over (l, omega) cells")
    p.add_argument("--l", type=_nonneg_int, nargs="+", default=[25, 50, 100, 150, 200])
    p.add_argument("--omega", type=_positive_float, nargs="+", default=[1.0, 2.0, 5.0, 10.0])
    p.add_argument("--out", default="sweep.csv")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("eom", help="equation-of-motion residual report (JSON, both variables)")
    p.add_argument("--l", type=_nonneg_int, default=10)
    p.add_argument("--omega", type=_positive_float, default=1.0)
    p.add_argument("--truncation", type=_odd_truncation, default=25)
    p.add_argument("--out", default="eom.json")
    p.set_defaults(handler=_cmd_eom)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    written = []
    try:
        failures = args.handler(args, written)
    except Exception as exc:
        for path in written:
            Path(path).unlink(missing_ok=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if failures:
        for failure in failures:
            print(f"invariant violated: {failure}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
