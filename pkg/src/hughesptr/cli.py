"""Command-line entry point.

Subcommands: gen, verify, du, plane, identities.  Exit codes: 0 on success,
1 when a verification sweep fails, 2 on usage errors.  JSON output is
byte-identical for a fixed configuration regardless of worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import du_analysis, hughes_core, modcomb, ptr_verify
from .gf_tower import field_ctx, is_odd_prime
from .trivar_poly import evaluate_grid

DEFAULT_MAX_ORDER = 6561

# verify/plane tabulate all of GF(Q)^3 and sweep point pairs; past this the
# tables no longer fit comfortably in memory
FULL_GRID_MAX_ORDER = 400


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hughesptr",
        description="Hughes-plane ternary-ring polynomials: generation, "
        "verification, and differential-uniformity analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        sp.add_argument("--e", type=int, required=True, help="extension degree (q = p^e)")
        sp.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="refuse fields with Q above this bound (default %(default)s)")
        sp.add_argument("--out", type=str, default=None, help="write output to this file")

    sp = sub.add_parser("gen", help="emit a ternary-ring polynomial")
    field_args(sp)
    sp.add_argument("--form", choices=["reduced", "nonreduced", "t2"], default="reduced")
    sp.add_argument("--format", choices=["json", "text"], default="json",
                    help="text rendering is informational; json is canonical")

    sp = sub.add_parser("verify", help="run axiom and section checks")
    field_args(sp)
    sp.add_argument("--plane", action="store_true", help="also build and check the plane")

    sp = sub.add_parser("du", help="differential uniformity of the section families")
    field_args(sp)
    sp.add_argument("--section", choices=["x", "y", "z"], default=None,
                    help="restrict to one family (default: all three)")
    sp.add_argument("--exhaustive", action="store_true",
                    help="sweep every fixing instead of sampling")
    sp.add_argument("--samples", type=int, default=100,
                    help="fixings per family when sampling (default %(default)s)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1,
                    help="shard the sweep across processes (output is unchanged)")

    sp = sub.add_parser("plane", help="build the plane and verify its axioms")
    field_args(sp)

    sp = sub.add_parser("identities", help="verify the binomial/Catalan congruences")
    field_args(sp)
    sp.add_argument("--max-n", type=int, default=300, help="index ceiling (default %(default)s)")

    return parser


def _get_ctx(parser: argparse.ArgumentParser, args):
    if not is_odd_prime(args.p):
        parser.error("p must be an odd prime")
    if args.e < 1:
        parser.error("e must be a positive integer")
    Q = args.p ** (2 * args.e)
    if Q > args.max_order:
        parser.error(f"Q = {Q} exceeds the configured bound {args.max_order}")
    if args.command in ("verify", "plane") and Q > FULL_GRID_MAX_ORDER:
        parser.error(
            f"{args.command} tabulates the full GF(Q)^3 grid and supports "
            f"Q <= {FULL_GRID_MAX_ORDER}; gen, du, and identities scale further"
        )
    if Q > DEFAULT_MAX_ORDER:
        print(f"warning: Q = {Q} is above the default bound {DEFAULT_MAX_ORDER}; "
              "exhaustive sweeps may take a long time", file=sys.stderr)
    return field_ctx(args.p, args.e)


def _cmd_gen(ctx, args) -> tuple[int, str]:
    builders = {
        "reduced": hughes_core.build_reduced_T,
        "nonreduced": hughes_core.build_nonreduced_T,
        "t2": hughes_core.build_T2,
    }
    if args.format == "text":
        return 0, hughes_core.render_text(ctx, args.form)
    poly = builders[args.form](ctx)
    return 0, _dumps(poly.to_json_dict())


def _cmd_verify(ctx, args) -> tuple[int, str]:
    table = ptr_verify.value_table(ctx, lambda x, y, z: hughes_core.ptr_piecewise(ctx, x, y, z))
    reports = ptr_verify.check_axioms(ctx, table=table)
    poly_table = evaluate_grid(hughes_core.build_reduced_T(ctx))
    reports += ptr_verify.check_pp_classes(ctx, table=poly_table)
    payload = {r.label: r.to_json_dict() for r in reports}
    payload["polynomial_matches_piecewise"] = {"pass": bool((table == poly_table).all())}
    if args.plane:
        plane = ptr_verify.build_plane(ctx, table=table)
        payload["projective_plane"] = ptr_verify.check_plane(plane).to_json_dict()
    ok = all(v["pass"] for v in payload.values())
    return (0 if ok else 1), _dumps(payload)


def _cmd_du(ctx, args) -> tuple[int, str]:
    families = args.section if args.section else "xyz"
    sample = None if args.exhaustive else args.samples
    report = du_analysis.du_sections(ctx, families=families, sample=sample,
                                     seed=args.seed, workers=args.workers)
    payload = {
        fam: {
            "per_fixing": [[i1, i2, d] for (i1, i2), d in zip(res["fixings"], res["deltas"])],
            "aggregate": {
                "max_delta": max(res["deltas"]),
                "min_delta": min(res["deltas"]),
                "pass": res["passed"],
            },
        }
        for fam, res in report.items()
    }
    ok = all(res["passed"] for res in report.values())
    return (0 if ok else 1), _dumps(payload)


def _cmd_plane(ctx, args) -> tuple[int, str]:
    table = ptr_verify.value_table(ctx, lambda x, y, z: hughes_core.ptr_piecewise(ctx, x, y, z))
    plane = ptr_verify.build_plane(ctx, table=table)
    report = ptr_verify.check_plane(plane)
    payload = {
        "points": plane.n_points,
        "lines": plane.n_lines,
        "points_per_line": plane.Q + 1,
        "projective_plane": report.to_json_dict(),
    }
    return (0 if report.passed else 1), _dumps(payload)


def _cmd_identities(ctx, args) -> tuple[int, str]:
    suite = modcomb.identity_suite(args.p, args.e, max_n=args.max_n)
    payload = {
        label: {
            "pass": chk.passed,
            "checked": chk.checked,
            **({"witness": list(chk.witness)} if chk.witness else {}),
        }
        for label, chk in suite.items()
    }
    ok = all(chk.passed for chk in suite.values())
    return (0 if ok else 1), _dumps(payload)


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


_COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "du": _cmd_du,
    "plane": _cmd_plane,
    "identities": _cmd_identities,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    ctx = _get_ctx(parser, args)
    code, text = _COMMANDS[args.command](ctx, args)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
