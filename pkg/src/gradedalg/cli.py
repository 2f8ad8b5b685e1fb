"""Command-line front end.

Each subcommand loads a workspace file, runs one verification pipeline,
and prints a canonical JSON report.  Exit codes: 0 when every checked
verdict passes (query commands answer negatively with exit 0 too),
1 when a checked verdict fails, 2 for schema or precondition violations,
3 for internal consistency failures.
"""

from __future__ import annotations

import argparse
import sys
import time

from .cohomology import (
    UnsupportedValueError,
    check_bicharacter,
    check_cocycle2,
    check_cocycle3,
    cohomologous,
    d1,
    d2,
)
from .galg import (
    algebra_iso_even,
    check_algebra,
    check_frobenius,
    check_separability,
    solve_pointed_obstruction,
    twist_algebra,
    twist_frobenius,
)
from .gmod import (
    Bimodule,
    LeftModule,
    RightModule,
    check_module,
    left_from_right_braided,
    tensor_over_A,
)
from .hostcat import HostError
from .induced import (
    InternalConsistencyError,
    graded_schur_report,
    sigma_cocycle,
    stabilizer,
)
from .io import SchemaError, Workspace, canonical_json
from .kleisli import MonadA, check_frobenius_monad, check_monoidal_monad, \
    check_twisted_interchange
from .scalars import ScalarError, set_max_order

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_SCHEMA = 2
EXIT_INTERNAL = 3


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="workspace JSON file")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--exhaustive-dim", type=int, default=4)
    p.add_argument("--max-root-order", type=int, default=240)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings (breaks byte determinism)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedalg",
        description="exact checks for graded algebras and their module calculus")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-cocycle", help="cocycle, normalization, bicharacter tests")
    _common_flags(p)
    p.add_argument("--cochain", required=True)
    p.add_argument("--degree", type=int, choices=(2, 3), default=2)

    p = sub.add_parser("cohomologous", help="solve kappa1 = d(tau) * kappa2 (query)")
    _common_flags(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("check-algebra", help="algebra, Frobenius, separability checks")
    _common_flags(p)
    p.add_argument("--algebra", default="A")
    p.add_argument("--frobenius")

    p = sub.add_parser("twist", help="twist an algebra by a 2-cocycle")
    _common_flags(p)
    p.add_argument("--algebra", default="A")
    p.add_argument("--kappa", required=True)
    p.add_argument("--frobenius")
    p.add_argument("--find-iso", action="store_true",
                   help="search for an even algebra isomorphism back to the input")

    p = sub.add_parser("tensor", help="tensor modules over the algebra")
    _common_flags(p)
    p.add_argument("--left", required=True, help="right module (the left factor)")
    p.add_argument("--right", required=True,
                   help="left module, or right module when --kappa promotes it")
    p.add_argument("--method", choices=("coequalizer", "idempotent"),
                   default="coequalizer")
    p.add_argument("--kappa", help="promote the right factor through the braiding")
    p.add_argument("--frobenius")

    p = sub.add_parser("schur", help="stabilizer, sigma, Hom tables for induced modules")
    _common_flags(p)
    p.add_argument("--algebra", default="A")
    p.add_argument("--x", required=True)
    p.add_argument("--y", action="append", default=None,
                   help="may repeat; defaults to --x")

    p = sub.add_parser("interchange", help="kappa-twisted interchange law")
    _common_flags(p)
    p.add_argument("--algebra", default="A")
    p.add_argument("--kappa", required=True)
    p.add_argument("--objects", action="append", default=None,
                   help="object names; defaults to the algebra components")

    p = sub.add_parser("monoidal-monad", help="monoidality of -(x)A and criteria for it")
    _common_flags(p)
    p.add_argument("--algebra", default="A")
    p.add_argument("--frobenius")

    p = sub.add_parser("obstruction", help="solve d2(omega) = psi (query)")
    _common_flags(p)
    p.add_argument("--psi", default="psi")

    return parser


def _cmd_check_cocycle(ws: Workspace, args) -> tuple[dict, int]:
    c = ws.cochain(args.cochain, args.degree)
    rep = check_cocycle3(c) if args.degree == 3 else check_cocycle2(c)
    report = {
        "inputs": {"cochain": args.cochain, "degree": args.degree},
        "cocycle": rep,
        "normalized": c.is_normalized(),
    }
    if args.degree == 2:
        report["bicharacter"] = check_bicharacter(c).ok
    report["ok"] = rep.ok
    return report, EXIT_OK if rep.ok else EXIT_VERDICT


def _cmd_cohomologous(ws: Workspace, args) -> tuple[dict, int]:
    a = ws.cochain(args.a)
    b = ws.cochain(args.b)
    tau = cohomologous(a, b)
    report = {
        "inputs": {"a": args.a, "b": args.b},
        "cohomologous": tau is not None,
        "witness": tau,
    }
    if tau is not None:
        shift = d1(tau)
        report["verified"] = all(
            a(i, j) == shift(i, j) * b(i, j)
            for i in a.group.elements for j in a.group.elements)
        if not report["verified"]:
            raise InternalConsistencyError("coboundary witness fails to verify")
    report["ok"] = True
    return report, EXIT_OK


def _cmd_check_algebra(ws: Workspace, args) -> tuple[dict, int]:
    alg = ws.algebra(args.algebra)
    rep = check_algebra(alg)
    report = {"inputs": {"algebra": args.algebra}, "algebra": rep}
    ok = rep["ok"]
    if args.frobenius:
        frob = ws.frobenius(args.frobenius)
        report["inputs"]["frobenius"] = args.frobenius
        frep = check_frobenius(alg, frob)
        sep = check_separability(alg, frob)
        report["frobenius"] = frep
        report["separability"] = {
            "delta_separable": sep["delta_separable"],
            "witness_found": sep["witness"] is not None,
        }
        ok = ok and frep["ok"]
    report["ok"] = ok
    return report, EXIT_OK if ok else EXIT_VERDICT


def _cmd_twist(ws: Workspace, args) -> tuple[dict, int]:
    alg = ws.algebra(args.algebra)
    kappa = ws.cochain(args.kappa)
    crep = check_cocycle2(kappa)
    report = {
        "inputs": {"algebra": args.algebra, "kappa": args.kappa},
        "kappa_cocycle": crep,
        "kappa_normalized": kappa.is_normalized(),
    }
    if not crep.ok or not kappa.is_normalized():
        report["ok"] = False
        return report, EXIT_VERDICT
    twisted = twist_algebra(alg, kappa)
    arep = check_algebra(twisted)
    report["twisted"] = twisted
    report["twisted_algebra_check"] = arep
    ok = arep["ok"]
    if args.frobenius:
        frob = ws.frobenius(args.frobenius)
        report["inputs"]["frobenius"] = args.frobenius
        tfrob = twist_frobenius(alg, frob, kappa)
        frep = check_frobenius(twisted, tfrob)
        report["twisted_frobenius"] = tfrob
        report["twisted_frobenius_check"] = frep
        ok = ok and frep["ok"]
    if args.find_iso:
        iso = algebra_iso_even(twisted, alg)
        report["iso_to_original"] = iso
        report["iso_found"] = iso is not None
    report["ok"] = ok
    return report, EXIT_OK if ok else EXIT_VERDICT


def _checks_pass(checks: dict) -> bool:
    return all(rep.ok for rep in checks.values())


def _cmd_tensor(ws: Workspace, args) -> tuple[dict, int]:
    m = ws.module(args.left)
    if not isinstance(m, (RightModule, Bimodule)):
        raise HostError("the left factor must carry a right action")
    n = ws.module(args.right)
    frob = ws.frobenius(args.frobenius) if args.frobenius else None
    report: dict = {"inputs": {k: v for k, v in {
        "left": args.left, "right": args.right, "method": args.method,
        "kappa": args.kappa, "frobenius": args.frobenius}.items() if v is not None}}
    if args.kappa:
        kappa = ws.cochain(args.kappa)
        if not isinstance(n, RightModule):
            raise HostError("--kappa promotion needs a right module on the right")
        promoted = left_from_right_braided(n, kappa)
        report["promotion"] = {
            "bimodule_ok": promoted["bimodule_ok"],
            "kappa_bicharacter": check_bicharacter(kappa).ok,
        }
        if not promoted["bimodule_ok"]:
            report["promotion"]["residual"] = promoted["bimodule_check"]
            report["ok"] = False
            return report, EXIT_VERDICT
        n = promoted["left"]
    elif isinstance(n, Bimodule):
        pass
    elif not isinstance(n, LeftModule):
        raise HostError("the right factor must carry a left action (or pass --kappa)")
    t = tensor_over_A(m, n, method=args.method, frobenius=frob)
    report["dims_by_grade"] = t.dims_by_grade()
    report["method"] = t.method
    report["checks"] = dict(t.checks)
    ok = _checks_pass(t.checks)
    if t.agreement is not None:
        report["methods_agree"] = t.agreement["dims_match"]
        ok = ok and t.agreement["dims_match"]
    report["ok"] = ok
    return report, EXIT_OK if ok else EXIT_VERDICT


def _cmd_schur(ws: Workspace, args) -> tuple[dict, int]:
    alg = ws.algebra(args.algebra)
    x = ws.object(args.x)
    y_names = args.y if args.y else [args.x]
    stab = sigma_cocycle(stabilizer(x, alg))
    hom_table = []
    consistent = True
    for y_name in y_names:
        y = ws.object(y_name)
        rep = graded_schur_report(x, y, alg)
        hom_table.append({
            "x": args.x,
            "y": y_name,
            "dims_by_grade": rep["hom_dims"],
            "pattern": rep["pattern"],
        })
        consistent = consistent and (
            rep["end_dim_equals_stab"] and rep["zero_or_translate"]
            and rep["homogeneous_invertible"].ok
            and rep["components_at_most_one_dim"])
    report = {
        "inputs": {"algebra": args.algebra, "x": args.x, "y": y_names},
        "stabilizer": [list(s) for s in stab.elements],
        "sigma": stab.sigma,
        "sigma_class": stab.sigma_class,
        "hom_table": hom_table,
        "end_dim": len(stab.elements),
    }
    if not consistent:
        raise InternalConsistencyError("graded Schur verdicts violated on semisimple host")
    report["ok"] = True
    return report, EXIT_OK


def _cmd_interchange(ws: Workspace, args) -> tuple[dict, int]:
    alg = ws.algebra(args.algebra)
    kappa = ws.cochain(args.kappa)
    objects = [ws.object(name) for name in args.objects] if args.objects else None
    rep = check_twisted_interchange(
        alg, kappa, objects=objects, samples=args.samples,
        seed=args.seed, exhaustive_dim=args.exhaustive_dim)
    report = {
        "inputs": {"algebra": args.algebra, "kappa": args.kappa,
                   "objects": args.objects},
        **rep,
    }
    return report, EXIT_OK if rep["ok"] else EXIT_VERDICT


def _cmd_monoidal_monad(ws: Workspace, args) -> tuple[dict, int]:
    alg = ws.algebra(args.algebra)
    frob = ws.frobenius(args.frobenius) if args.frobenius else None
    rep = check_monoidal_monad(alg, frobenius=frob)
    laws = MonadA(alg, frob).check_laws(
        [alg.component(g)[0] for g in alg.group.elements
         if alg.grading.indices(g)] + [alg.carrier])
    report = {
        "inputs": {"algebra": args.algebra, "frobenius": args.frobenius},
        "monad_laws": laws,
        **rep,
    }
    ok = rep["ok"] and laws["ok"]
    if frob is not None:
        fm = check_frobenius_monad(alg, frob)
        report["frobenius_monad"] = fm
        ok = ok and fm["ok"]
    report["ok"] = ok
    return report, EXIT_OK if ok else EXIT_VERDICT


def _cmd_obstruction(ws: Workspace, args) -> tuple[dict, int]:
    psi = ws.cochain(args.psi, degree=3)
    res = solve_pointed_obstruction(psi.group, psi)
    report = {
        "inputs": {"psi": args.psi},
        "psi_is_cocycle": res["psi_is_cocycle"],
        "solvable": res["solvable"],
        "omega": res["omega"],
    }
    if res["omega"] is not None:
        check = d2(res["omega"])
        report["verified"] = all(
            check(i, j, k) == psi(i, j, k)
            for i in psi.group.elements
            for j in psi.group.elements
            for k in psi.group.elements)
        if not report["verified"]:
            raise InternalConsistencyError("obstruction witness fails to verify")
    report["ok"] = True
    return report, EXIT_OK


_HANDLERS = {
    "check-cocycle": _cmd_check_cocycle,
    "cohomologous": _cmd_cohomologous,
    "check-algebra": _cmd_check_algebra,
    "twist": _cmd_twist,
    "tensor": _cmd_tensor,
    "schur": _cmd_schur,
    "interchange": _cmd_interchange,
    "monoidal-monad": _cmd_monoidal_monad,
    "obstruction": _cmd_obstruction,
}


def _emit(report: dict, args) -> None:
    text = canonical_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        set_max_order(args.max_root_order)
        ws = Workspace.load(args.file)
        report, code = _HANDLERS[args.command](ws, args)
    except SchemaError as err:
        sys.stderr.write(f"schema error: {err}\n")
        return EXIT_SCHEMA
    except InternalConsistencyError as err:
        sys.stderr.write(f"internal consistency failure: {err}\n")
        return EXIT_INTERNAL
    except (HostError, UnsupportedValueError, ScalarError, ValueError) as err:
        sys.stderr.write(f"precondition violated: {err}\n")
        return EXIT_SCHEMA
    report = {"command": args.command, "version": "1", "seed": args.seed, **report}
    if args.timings:
        report["timings"] = {"total_s": round(time.monotonic() - started, 6)}
    _emit(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
