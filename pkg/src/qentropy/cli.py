"""Command-line front end.

Every subcommand prints one JSON report to stdout. Exit codes: 0 on success,
2 when an input violates an invariant (or on usage errors), 1 otherwise.
"""

import argparse
import csv
import hashlib
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .capacity import check_holevo_bound, optimize_measurement
from .channels import check_basis, pinch, steering_table
from .entropy import check_ssa, check_subadditivity, maxwell_boltzmann, shannon, von_neumann
from .errors import ValidationError
from .io import chain_from_json, ensemble_from_json, load_json, matrix_to_json, read_matrix
from .lindblad import lindblad_survey
from .maxent import entropy_density_profile, gibbs_state, max_entropy_state, energy
from .matrices import check_hermitian
from .states import mixing_entropy, pure_state, random_pure_decomposition, validate_density


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


class Report:
    def __init__(self, command: str, bits: bool, seed=None):
        self.command = command
        self.bits = bits
        self.seed = seed
        self.inputs = {}
        self.outputs = {}

    def add_file(self, name: str, path):
        self.inputs[name] = {"path": str(path), "sha256": hashlib.sha256(Path(path).read_bytes()).hexdigest()}

    def add_args(self, **kwargs):
        blob = json.dumps(kwargs, sort_keys=True).encode()
        self.inputs["arguments"] = {"values": kwargs, "sha256": hashlib.sha256(blob).hexdigest()}

    def entropy(self, name: str, value: float):
        if self.bits:
            self.outputs[name] = {"value": value / math.log(2), "unit": "bits"}
        else:
            self.outputs[name] = {"value": value, "unit": "nats"}

    def plain(self, name: str, value):
        self.outputs[name] = {"value": value, "unit": "dimensionless"}

    def to_dict(self) -> dict:
        return {"command": self.command, "tool_version": __version__, "seed": self.seed,
                "inputs": self.inputs, "outputs": self.outputs}


def _state(report: Report, path) -> np.ndarray:
    report.add_file("state", path)
    return validate_density(read_matrix(path))


def _vector(path) -> np.ndarray:
    data = load_json(path)
    return pure_state([complex(re, im) for re, im in data])


def cmd_entropy(args, report):
    d = _state(report, args.state)
    report.entropy("entropy", von_neumann(d))


def cmd_shannon(args, report):
    report.add_args(probs=args.probs)
    report.entropy("entropy", shannon(args.probs))


def cmd_maxboltz(args, report):
    report.add_args(levels=args.levels, energy=args.energy)
    law = maxwell_boltzmann(args.levels, args.energy)
    report.plain("probs", [float(x) for x in law.probs])
    report.plain("multiplier", law.multiplier)
    report.entropy("entropy", shannon(law.probs))


def cmd_gibbs(args, report):
    report.add_file("hamiltonian", args.hamiltonian)
    h = check_hermitian(read_matrix(args.hamiltonian))
    if (args.energy is None) == (args.beta is None):
        raise UsageError("gibbs: give exactly one of --energy or --beta")
    if args.energy is not None:
        report.add_args(energy=args.energy)
        d, beta = max_entropy_state(h, args.energy)
    else:
        report.add_args(beta=args.beta)
        beta = args.beta
        d = gibbs_state(h, beta)
    report.plain("state", matrix_to_json(d))
    report.plain("beta", beta)
    report.plain("energy", energy(d, h))
    report.entropy("entropy", von_neumann(d))


def cmd_pinch(args, report):
    d = _state(report, args.state)
    if args.basis:
        report.add_file("basis", args.basis)
        basis = check_basis(read_matrix(args.basis))
    else:
        basis = np.eye(d.shape[0])
    out = pinch(d, basis)
    report.plain("state", matrix_to_json(out))
    report.entropy("entropy_before", von_neumann(d))
    report.entropy("entropy_after", von_neumann(out))


def _write_csv(path, fields, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})


def cmd_steer(args, report):
    if args.phi1 or args.phi2:
        if not (args.phi1 and args.phi2):
            raise UsageError("steer: give both --phi1 and --phi2")
        report.add_file("phi1", args.phi1)
        report.add_file("phi2", args.phi2)
        phi1, phi2 = _vector(args.phi1), _vector(args.phi2)
    else:
        phi1, phi2 = np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)
    report.add_args(k=args.k)
    rows = steering_table(phi1, phi2, args.k)
    report.plain("final_fidelity", rows[-1]["fidelity"])
    report.plain("final_trace_distance", rows[-1]["trace_distance"])
    if args.csv:
        _write_csv(args.csv, ["k", "step", "fidelity", "trace_distance"], rows)
    else:
        report.plain("table", rows)


def cmd_subadd(args, report):
    d = _state(report, args.state)
    report.add_args(dims=args.dims)
    s12, s1, s2 = check_subadditivity(d, tuple(args.dims))
    report.entropy("S12", s12)
    report.entropy("S1", s1)
    report.entropy("S2", s2)
    report.entropy("gap", s1 + s2 - s12)


def cmd_ssa(args, report):
    d = _state(report, args.state)
    report.add_args(dims=args.dims)
    s123, s12, s23, s2 = check_ssa(d, tuple(args.dims))
    report.entropy("S123", s123)
    report.entropy("S12", s12)
    report.entropy("S23", s23)
    report.entropy("S2", s2)
    report.entropy("gap", s12 + s23 - s123 - s2)


def cmd_chain(args, report):
    report.add_file("chain", args.chain)
    spec = chain_from_json(load_json(args.chain))
    up_to = args.up_to or spec.length
    report.add_args(beta=args.beta, up_to=up_to)
    profile = entropy_density_profile(spec, args.beta, up_to)
    rows = [{"N": n, "entropy_density": s} for n, s in profile.densities]
    report.plain("fekete_ok", profile.fekete_ok)
    report.entropy("min_fekete_gap", min((g for _, _, g in profile.fekete), default=0.0))
    if args.csv:
        _write_csv(args.csv, ["N", "entropy_density"], rows)
    else:
        scale = 1 / math.log(2) if report.bits else 1.0
        report.outputs["profile"] = {"value": [[r["N"], r["entropy_density"] * scale] for r in rows],
                                     "unit": "bits" if report.bits else "nats"}


def cmd_lindblad(args, report):
    d = _state(report, args.state)
    report.add_args(trials=args.trials)
    survey = lindblad_survey(d, args.trials, args.seed)
    report.entropy("lower_bound", survey.lower_bound)
    report.entropy("two_s", survey.two_s)
    report.entropy("canonical_value", survey.canonical_value)
    report.plain("samples_kept", survey.samples_kept)


def cmd_capacity(args, report):
    report.add_file("ensemble", args.ensemble)
    ens = ensemble_from_json(load_json(args.ensemble))
    report.add_args(restarts=args.restarts)
    povm, best = optimize_measurement(ens, args.restarts, args.seed)
    _, s = check_holevo_bound(ens, povm)
    report.entropy("I_best", best)
    report.entropy("S", s)
    report.entropy("gap", s - best)
    report.plain("povm", [matrix_to_json(a) for a in povm])


def cmd_decompose(args, report):
    d = _state(report, args.state)
    report.add_args(count=args.count)
    dec = random_pure_decomposition(d, args.count, args.seed)
    report.plain("weights", [float(w) for w in dec.weights])
    report.entropy("mixing_entropy", mixing_entropy(dec))
    report.entropy("entropy", von_neumann(d))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qentropy", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, seed=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--bits", action="store_true", help="report entropies in bits")
        p.add_argument("--json", action="store_true", help="JSON report on stdout (default)")
        if seed:
            p.add_argument("--seed", type=int, required=True)
        return p

    add("entropy", cmd_entropy, "von Neumann entropy of a state").add_argument("--state", required=True)
    add("shannon", cmd_shannon, "Shannon entropy").add_argument("--probs", type=float, nargs="+", required=True)

    p = add("maxboltz", cmd_maxboltz, "discrete Maxwell-Boltzmann law")
    p.add_argument("--levels", type=float, nargs="+", required=True)
    p.add_argument("--energy", type=float, required=True)

    p = add("gibbs", cmd_gibbs, "Gibbs state at fixed beta or fixed energy")
    p.add_argument("--hamiltonian", required=True)
    p.add_argument("--energy", type=float)
    p.add_argument("--beta", type=float)

    p = add("pinch", cmd_pinch, "measurement conditional expectation")
    p.add_argument("--state", required=True)
    p.add_argument("--basis", help="matrix file whose columns are the basis")

    p = add("steer", cmd_steer, "steer |phi1> to |phi2> by k pinchings")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--phi1")
    p.add_argument("--phi2")
    p.add_argument("--csv", help="write the step table to this path")

    p = add("subadd", cmd_subadd, "subadditivity of a bipartite state")
    p.add_argument("--state", required=True)
    p.add_argument("--dims", type=int, nargs=2, required=True)

    p = add("ssa", cmd_ssa, "strong subadditivity of a tripartite state")
    p.add_argument("--state", required=True)
    p.add_argument("--dims", type=int, nargs=3, required=True)

    p = add("chain", cmd_chain, "entropy density of a finite spin chain")
    p.add_argument("--chain", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--up-to", type=int)
    p.add_argument("--csv", help="write (N, entropy_density) to this path")

    p = add("lindblad", cmd_lindblad, "lower bound on the operational entropy", seed=True)
    p.add_argument("--state", required=True)
    p.add_argument("--trials", type=int, required=True)

    p = add("capacity", cmd_capacity, "optimize the receiver's measurement", seed=True)
    p.add_argument("--ensemble", required=True)
    p.add_argument("--restarts", type=int, default=4)

    p = add("decompose", cmd_decompose, "random pure-state decomposition", seed=True)
    p.add_argument("--state", required=True)
    p.add_argument("--count", type=int, required=True)
    return parser


def _to_builtin(obj):
    if isinstance(obj, dict):
        return {k: _to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_builtin(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report = Report(args.command, args.bits, getattr(args, "seed", None))
        args.func(args, report)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (ValidationError, FileNotFoundError) as exc:
        name = "UsageError" if isinstance(exc, UsageError) else type(exc).__name__
        print(json.dumps({"error": name, "message": str(exc)}), file=stderr)
        return 2
    except Exception as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return 1
    print(json.dumps(_to_builtin(report.to_dict()), sort_keys=True, indent=2), file=stdout)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
