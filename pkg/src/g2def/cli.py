"""Command line: ``g2def verify | check | candidates | deform | export``.

Exit codes: 0 success, 1 a verification failed, 2 bad input (parse error or
a violated structural invariant, which is named on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import G2DefError, InvariantViolation, NotNearlyParallel, ParseError
from .field import FieldElem
from .forms import endomorphism_action, inner
from .g2 import identity_suite, induces_metric, schur_suite
from .homogeneous import BUILTINS, builtin, dumps_space, nearly_parallel_data, resolve_space, torsion_form
from .reps import enumerate_candidates

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _approx(x):
    z = x.to_complex()
    if abs(z.imag) < 1e-15:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}i"


def cmd_verify(args):
    suites = [identity_suite(samples=args.samples, seed=args.seed), schur_suite()]
    data = {"passed": all(s.passed for s in suites), "suites": [s.as_dict() for s in suites]}
    lines = []
    for s in suites:
        lines.append(f"== {s.title} ==")
        for c in s.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    lines.append("all checks passed" if data["passed"] else "SOME CHECKS FAILED")
    return data, "\n".join(lines), EXIT_OK if data["passed"] else EXIT_FAIL


def cmd_check(args):
    space = resolve_space(args.space)
    T = torsion_form(space)
    data = {
        "space": space.name,
        "dim_g": space.dim,
        "dim_h": len(space.h_basis),
        "c2": str(FieldElem(space.c2)),
        "orientation": space.orientation,
        "invariants": "jacobi, subalgebra, reductive, orthogonal, orthonormal: ok",
        "torsion": str(T),
    }
    try:
        npd = nearly_parallel_data(space)
    except NotNearlyParallel as exc:
        data["nearly_parallel"] = False
        data["error"] = str(exc)
        return data, _check_text(data, False), EXIT_FAIL
    invariant = all(endomorphism_action(M, npd.sigma_o).is_zero() for M in space.isotropy_matrices)
    data.update(
        {
            "nearly_parallel": True,
            "tau0": str(npd.tau0),
            "scal": str(npd.scal),
            "sigma_o": str(npd.sigma_o),
            "sigma_o_norm2": str(inner(npd.sigma_o, npd.sigma_o)),
            "induces_metric": induces_metric(npd.sigma_o, space.orientation),
            "isotropy_preserves_sigma_o": invariant,
        }
    )
    if args.decimal:
        data["approximate"] = {"tau0": _approx(npd.tau0), "scal": _approx(npd.scal)}
    ok = invariant and data["induces_metric"]
    return data, _check_text(data, ok), EXIT_OK if ok else EXIT_FAIL


def _check_text(data, ok):
    lines = [f"{k}: {v}" for k, v in data.items() if k != "approximate"]
    for k, v in data.get("approximate", {}).items():
        lines.append(f"{k} (approx.): {v}")
    lines.append("check passed" if ok else "CHECK FAILED")
    return "\n".join(lines)


def cmd_candidates(args):
    space = resolve_space(args.space)
    en = enumerate_candidates(space.factors)
    data = {
        "space": space.name,
        "targets": [_q(t) for t in en.targets],
        "search_boxes": [b.as_dict() for b in en.boxes],
        "candidates": [c.as_dict(en.factors) for c in en.candidates],
    }
    lines = [f"space {space.name}; Casimir targets {', '.join(data['targets'])}"]
    for b in data["search_boxes"]:
        lines.append(
            f"  box {b['family']}({b['rank']}) {b['label']}: Dynkin labels <= {b['dynkin_bounds']}, "
            f"boundary Casimirs {b['boundary_casimirs']}"
        )
    lines.append(f"{'weight':<36} {'Casimir':>8}  module")
    for c in data["candidates"]:
        lines.append(f"{c['weight_text']:<36} {c['casimir']:>8}  {c['module']}")
    if not data["candidates"]:
        lines.append("(none)")
    return data, "\n".join(lines), EXIT_OK


def _q(t):
    return str(FieldElem(t))


def cmd_deform(args):
    from .deform import solve_deformations

    space = resolve_space(args.space)
    report = solve_deformations(space)
    data = report.as_dict(decimal=args.decimal)
    lines = [
        f"space {report.space}: tau0 = {report.tau0}, c = {report.c}",
        f"{'module':<16} {'Casimir':>8} {'dim U':>6} {'Hom':>4} {'kernel':>7}",
    ]
    for c in data["candidates"]:
        lines.append(f"{c['module']:<16} {c['casimir']:>8} {c['dim_U']:>6} {c['hom_dim']:>4} {c['kernel_dim']:>7}")
    lines.append(f"total dimension: {data['total_dimension']}")
    for t in data["deformation_types"]:
        lines.append(f"  type {t['module']}, multiplicity {t['multiplicity']}")
    lines.append(f"Einstein deformations = G2 deformations: {str(data['einstein_equals_g2']).lower()}")
    if data["unresolved"]:
        lines.append(f"UNRESOLVED candidates (not adjoint summands): {data['unresolved']}")
    if args.decimal:
        for k, v in data["approximate"].items():
            lines.append(f"{k} (approx.): {v}")
    return data, "\n".join(lines), EXIT_OK


def cmd_export(args):
    space = builtin(args.space)
    text = dumps_space(space)
    return None, text.rstrip("\n"), EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="g2def", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--decimal", action="store_true", help="add approximate decimals (display only)")

    v = sub.add_parser("verify", help="run the G2 identity and Schur-constant suites")
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    common(v)
    for name, helptext in (
        ("check", "load a space and verify the nearly parallel structure"),
        ("candidates", "list highest weights with admissible Casimir value"),
        ("deform", "compute the infinitesimal deformation report"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("space", help=f"built-in name ({', '.join(BUILTINS)}) or path to a space file")
        common(sp)
    ex = sub.add_parser("export", help="write a built-in space as a space file")
    ex.add_argument("space", choices=BUILTINS)
    common(ex)
    return p


COMMANDS = {
    "verify": cmd_verify,
    "check": cmd_check,
    "candidates": cmd_candidates,
    "deform": cmd_deform,
    "export": cmd_export,
}


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        data, text, code = COMMANDS[args.command](args)
    except InvariantViolation as exc:
        print(f"error: invariant violated: {exc.invariant}: {exc.detail}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, FileNotFoundError, IsADirectoryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except G2DefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json" and data is not None:
        out = json.dumps(data, indent=2, sort_keys=True)
    else:
        out = text
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out, file=stdout)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
