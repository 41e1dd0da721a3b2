"""Command-line entry point: ``fivevertex <command> [flags]``.

Exit codes: 0 success, 1 a checked identity failed, 2 usage error,
3 arithmetic failure (non-convergence, bad denominators).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ArithmeticFailure, FiveVertexError, IdentityFailed, VerificationFailed

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ARITH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(lo: int, hi: int | None = None, what: str = "value"):
    def check(v: int):
        if v < lo or (hi is not None and v > hi):
            bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise UsageError(f"{what} must be {bound}, got {v}")
        return v

    return check


def _emit(args, text: str, data=None, latex: str | None = None):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False, default=str))
    elif args.format == "latex" and latex is not None:
        print(latex)
    else:
        print(text)


def _perm(args, required=True):
    from .groth.perm import Perm

    if not args.perm:
        if required:
            raise UsageError("--perm is required")
        return None
    try:
        return Perm(args.perm)
    except (ValueError, FiveVertexError) as exc:
        raise UsageError(f"bad permutation {args.perm}: {exc}") from None


def _beta_value(args):
    return {"sym": None, "0": 0, "-1": -1}[args.beta]


def _spec(args):
    from .bethe import BetheSpec

    if args.N is None or not args.k:
        raise UsageError("--N and --k are required")
    n = args.n if args.n is not None else len(args.k) + 1
    try:
        return BetheSpec(n, args.N, tuple(args.k))
    except (ValueError, FiveVertexError) as exc:
        raise UsageError(str(exc)) from None


# ----- commands ----------------------------------------------------------------

def cmd_ybe(args):
    from .vertex import support_identities_check, ybe_check

    n = _positive(2, 6, "--n")(args.n or 2)
    mode = "numeric" if args.numeric else "symbolic"
    if mode == "symbolic" and n > 4 and not args.force:
        raise UsageError("symbolic YBE is bounded by n <= 4; pass --force or --numeric")
    rep = ybe_check(n, mode=mode, samples=args.samples, seed=args.seed, tol=args.tol)
    text = f"PASS {mode} YBE n={n} ({rep['entries']} entries)"
    if mode == "numeric":
        text += f" max deviation {rep['max_deviation']:.3e}"
    if args.support and mode == "symbolic":
        sup = support_identities_check(n)
        rep["support"] = sup["results"]
        text += "\nPASS support identities " + ", ".join(sorted(sup["results"]))
    _emit(args, text, rep)
    return EXIT_OK


def cmd_rmat(args):
    from .algebra.variables import VarId
    from .vertex import r_matrix

    n = _positive(2, 5, "--n")(args.n or 2)
    R = r_matrix(n, VarId("x", 1), VarId("x", 2))
    _emit(args, str(R), R.to_json(), R.latex())
    return EXIT_OK


def cmd_groth(args):
    from .algebra.serialize import to_json
    from .groth import display, dual_groth, groth

    w = _perm(args)
    g = dual_groth(w) if args.flavor == "dual" else groth(w)
    beta = _beta_value(args)
    value = g.value if beta is None else g.specialize(beta)
    style = "latex" if args.format == "latex" else "text"
    body = display(value, w.N, style=style, atoms=args.atoms)
    name = "G^beta" if beta is None else f"G^({beta})"
    text = f"{name}_{w} = {body}"
    latex = rf"\mathcal{{G}}^{{(\beta)}}_{{{w}}} = {body}"
    _emit(args, text, {"perm": str(w), "beta": args.beta, "value": to_json(value)}, latex)
    return EXIT_OK


def cmd_bstate(args):
    from .algebra.serialize import to_json
    from .algebra.variables import MIDDLE
    from .groth.polynomials import display
    from .vertex import Chain, ket

    if not args.colors:
        raise UsageError("--colors is required")
    N = args.N or len(args.colors) + 1
    n = args.n or N
    for c in args.colors:
        _positive(1, n - 1, "color")(c)
    if n ** N > 4 ** 5 and not args.force:
        raise UsageError(f"state space {n}^{N} exceeds 4^5; pass --force")
    chain = Chain.atoms(n, N)
    ops = [(c, MIDDLE(a)) for a, c in enumerate(args.colors, 1)]
    state = chain.b_string(ops)
    style = "latex" if args.format == "latex" else "text"
    lines, data = [], []
    for word, c in sorted(state.items()):
        shown = display(c, N, style=style, atoms=args.atoms, first=MIDDLE)
        lines.append(f"{ket(word)}: {shown}")
        data.append({"ket": "".join(map(str, word)), "coeff": to_json(c), "display": shown})
    _emit(args, "\n".join(lines), {"colors": args.colors, "N": N, "terms": data}, "\n".join(lines))
    return EXIT_OK


def cmd_bae(args):
    from .bethe import bae_generate, beta_zero_check

    spec = _spec(args)
    system = bae_generate(spec, "cleared" if args.cleared or args.format == "json" else "frac")
    text = system.render("text")
    if args.check:
        rep = beta_zero_check(spec)
        text += f"\nPASS beta=0 limit matches the cohomological equations ({rep['equations']} equations)"
    _emit(args, text, system.to_json(), system.render("latex"))
    return EXIT_OK


def cmd_solve(args):
    from .verify import numeric_bethe

    spec = _spec(args)
    beta = _beta_value(args)
    if beta is None:
        raise UsageError("numeric solving needs --beta 0 or --beta -1")
    if spec.n ** spec.N > 3 ** 5 and not args.force:
        raise UsageError("state space exceeds 3^5; pass --force")
    rep = numeric_bethe(spec.n, spec.N, spec.k, seed=args.seed, tol=args.tol, samples=args.samples,
                        beta=beta)
    text = (f"PASS n={spec.n} N={spec.N} k={list(spec.k)}: {rep['solutions']} solutions,"
            f" cleared residual {rep['max_residual']:.2e}, residue {rep['max_residue']:.2e},"
            f" eigenstate residual {rep['max_eigen_residual']:.2e}")
    if args.roots:
        from .bethe import solve_seeded

        sols = solve_seeded(spec.n, spec.N, spec.k, seed=args.seed, beta=beta, tol=args.tol)
        rep["detail"] = sols.to_json()
        for i, sol in enumerate(sols.solutions, 1):
            parts = [f"level {m}: " + ", ".join(f"{r.real:+.10f}{r.imag:+.10f}i" for r in rs)
                     for m, rs in sol.roots.items()]
            text += f"\n  #{i} " + "; ".join(parts)
    _emit(args, text, rep)
    return EXIT_OK


def cmd_whitney(args):
    from .bethe import whitney_qc, whitney_qk

    spec = _spec(args)
    if args.flavor == "qc":
        rs = whitney_qc(spec)
    else:
        rs = whitney_qk(spec, beta=args.beta if args.beta != "0" else "sym")
    _emit(args, rs.render(), rs.to_json())
    return EXIT_OK


def cmd_gk(args):
    from .algebra.serialize import to_json
    from .bethe import givental_kim

    N = _positive(1, 8, "--N")(args.N or 2)
    Es = givental_kim(N)
    text = "\n".join(f"E^{N}_{i} = {E}" for i, E in enumerate(Es, 1))
    latex = r" \\ ".join(f"E^{{{N}}}_{{{i}}} = {E.latex()}" for i, E in enumerate(Es, 1))
    _emit(args, text, {"N": N, "E": [to_json(E) for E in Es]}, latex)
    return EXIT_OK


def cmd_cauchy(args):
    from .groth import cauchy_check

    w = _perm(args)
    if w.N > 4 and not args.force:
        raise UsageError("Cauchy check is bounded by S_4; pass --force")
    rep = cauchy_check(w)
    _emit(args, f"PASS Cauchy identity for w={w} ({len(rep['summands'])} summands)",
          {"perm": str(w), "summands": len(rep["summands"]), "status": "pass"})
    return EXIT_OK


def cmd_verify(args):
    from .verify import verify_suite

    max_n = _positive(2, 6, "--max-n")(args.max_n)
    stream = None
    if args.format != "json":
        def stream(item):
            line = f"{item['status'].upper()} {item['size']} ({item['seconds']}s)"
            if "witness" in item:
                line += f" witness: {item['witness']}"
            print(line, flush=True)
    try:
        results = verify_suite(args.suite, max_n, seed=args.seed, tol=args.tol, samples=args.samples,
                               fail_fast=args.fail_fast, progress=stream)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = sum(1 for r in results if r["status"] != "pass")
    if args.format == "json":
        # timings vary between runs, so they stay out of the machine-readable report
        print(json.dumps([{k: v for k, v in r.items() if k != "seconds"} for r in results], indent=2))
    else:
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "ybe": cmd_ybe, "rmat": cmd_rmat, "groth": cmd_groth, "bstate": cmd_bstate, "bae": cmd_bae,
    "solve": cmd_solve, "whitney": cmd_whitney, "gk": cmd_gk, "verify": cmd_verify, "cauchy": cmd_cauchy,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--samples", type=int, default=3)
    common.add_argument("--force", action="store_true", help="lift size guards")

    parser = argparse.ArgumentParser(prog="fivevertex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ybe", parents=[common], help="Yang-Baxter equation check")
    p.add_argument("--n", type=int)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--support", action="store_true", help="also check the three contraction identities")

    p = sub.add_parser("rmat", parents=[common], help="print the R-matrix")
    p.add_argument("--n", type=int)

    p = sub.add_parser("groth", parents=[common], help="double beta-Grothendieck polynomial")
    p.add_argument("--n", type=int)
    p.add_argument("--perm", type=int, nargs="+")
    p.add_argument("--beta", choices=("sym", "0", "-1"), default="sym")
    p.add_argument("--atoms", choices=("ominus", "z"), default="ominus")
    p.add_argument("--flavor", choices=("standard", "dual"), default="standard")

    p = sub.add_parser("bstate", parents=[common], help="expand B_{c1}(s1)...B_{cr}(sr)|vacuum>")
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--colors", type=int, nargs="+")
    p.add_argument("--atoms", choices=("ominus", "z"), default="ominus")

    for name, helptext in (("bae", "Bethe ansatz equations"), ("solve", "numeric Bethe roots"),
                           ("whitney", "Whitney relations via Vieta")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int)
        p.add_argument("--N", type=int)
        p.add_argument("--k", type=int, nargs="+")
        if name == "bae":
            p.add_argument("--cleared", action="store_true")
            p.add_argument("--check", action="store_true", help="compare the beta=0 limit")
        if name == "solve":
            p.add_argument("--beta", choices=("0", "-1"), default="-1")
            p.add_argument("--roots", action="store_true", help="print every solution")
        if name == "whitney":
            p.add_argument("--flavor", choices=("qc", "qk"), default="qc")
            p.add_argument("--beta", choices=("sym", "0", "-1"), default="sym")

    p = sub.add_parser("gk", parents=[common], help="Givental-Kim quantum elementary polynomials")
    p.add_argument("--N", type=int)

    p = sub.add_parser("cauchy", parents=[common], help="generalized Cauchy identity")
    p.add_argument("--perm", type=int, nargs="+")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--fail-fast", action="store_true")
    return parser


_DEFAULT_TOL = {"ybe": 1e-10, "solve": 1e-9, "verify": 1e-9}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.tol is None:
        args.tol = _DEFAULT_TOL.get(args.command, 1e-9)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (IdentityFailed, VerificationFailed) as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ArithmeticFailure as exc:
        print(f"arithmetic error: {exc}", file=sys.stderr)
        return EXIT_ARITH
    except FiveVertexError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
