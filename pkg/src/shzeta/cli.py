"""Command-line front end.

Subcommands:

* ``eval``  — evaluate one Schur series and print its certified value;
* ``check`` — run identity suites (built-in or from a manifest file);
* ``paths`` — enumerate lattice-path patterns for a shape, optionally
  rendering them as text diagrams.

One JSON object per line goes to stdout; the human summary goes to stderr.
Exit codes: 0 success, 1 identity failure, 2 usage/parse error, 3 domain
error.  The environment variable ``SHZETA_CUTOFF`` sets the default series
cutoff; explicit flags win over manifest values, which win over defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Iterable

from .errors import DomainError, UsageError
from .ezzeta import EvalConfig
from .identities import (
    IdentityReport,
    derivative_fd_check,
    derivative_identity,
    dirichlet_series_expr,
    extended_jacobi_trudi,
    frobenius_expansion,
    giambelli,
    hook_expansion_star,
    hook_expansion_zeta,
    jacobi_trudi_E,
    jacobi_trudi_H,
    skew_giambelli_hash,
)
from .lgv import count_patterns, enumerate_patterns, render_pattern, verify_cancellation
from .rootzeta import check_reductions
from .schurzeta import SchurInstance, instance_from_spec, schur_eval
from .shapes import Partition, parse_partition, parse_shape
from .tableaux import ContentSpec, Tableau, expand_content, tableau_from_rows

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

BUILTIN_SUITES = (
    "jacobi-trudi",
    "giambelli",
    "hook",
    "frobenius",
    "dirichlet",
    "derivative",
    "lgv-exact",
    "reductions",
    "all",
)


def _default_cutoff() -> int:
    raw = os.environ.get("SHZETA_CUTOFF")
    if raw is None:
        return 2000
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"SHZETA_CUTOFF must be an integer, got {raw!r}") from exc


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _parse_assignments(text: str, caster: Callable[[str], Any]) -> dict[int, Any]:
    out: dict[int, Any] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise UsageError(f"expected k=value, got {piece!r}")
        k, v = piece.split("=", 1)
        try:
            out[int(k)] = caster(v)
        except ValueError as exc:
            raise UsageError(f"bad assignment {piece!r}") from exc
    if not out:
        raise UsageError(f"no assignments in {text!r}")
    return out


# ---------------------------------------------------------------------------
# eval


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = EvalConfig(cutoff=args.cutoff)
    t0 = time.perf_counter()
    if args.tableau_file:
        with open(args.tableau_file) as fh:
            data = json.load(fh)
        s = tableau_from_rows(data["s"])
        x = (
            tableau_from_rows(data["x"])
            if "x" in data
            else Tableau(s.shape, {c: 0.0 for c in s.entries})
        )
        inst = SchurInstance(s.shape, s, x)
    else:
        if not (args.shape and args.z):
            raise UsageError("eval needs --shape and --z (or --tableau-file)")
        shape = parse_shape(args.shape)
        spec = ContentSpec(
            _parse_assignments(args.z, complex),
            _parse_assignments(args.y, float) if args.y else {},
        )
        inst = instance_from_spec(spec, shape)
    approx = schur_eval(inst, cfg)
    _emit(
        {
            "value_re": approx.value.real,
            "value_im": approx.value.imag,
            "err_bound": approx.err_bound,
            "cutoff": cfg.cutoff,
            "runtime_ms": round(1000 * (time.perf_counter() - t0), 3),
        }
    )
    print(
        f"value = {approx.value.real:.12g}"
        + (f" + {approx.value.imag:.12g}i" if approx.value.imag else "")
        + f"  (err <= {approx.err_bound:.3g})",
        file=sys.stderr,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# check: built-in suites

Check = tuple[dict, Callable[[EvalConfig], dict]]


def _suite_spec(palette: dict[int, complex] | None = None) -> ContentSpec:
    z = palette or {-3: 3, -2: 2.5, -1: 2, 0: 3, 1: 2, 2: 2.5, 3: 3}
    return ContentSpec(z, {0: 0.3})


def _report_fields(rep: IdentityReport) -> dict:
    return rep.as_dict()


def _identity_check(
    identity_id: str, shape_text: str, run: Callable[[EvalConfig], IdentityReport]
) -> Check:
    meta = {"identity_id": identity_id, "shape": shape_text}

    def runner(cfg: EvalConfig) -> dict:
        return _report_fields(run(cfg))

    return meta, runner


def _suite_jacobi_trudi() -> list[Check]:
    spec = _suite_spec()
    checks = []
    for text in ("1,1", "2", "2,1", "2,2", "3,2"):
        shape = parse_partition(text)
        checks.append(
            _identity_check(
                "jacobi_trudi_H", text, lambda c, s=shape: jacobi_trudi_H(spec, s, c)
            )
        )
        checks.append(
            _identity_check(
                "jacobi_trudi_E", text, lambda c, s=shape: jacobi_trudi_E(spec, s, c)
            )
        )
    shape = parse_partition("2,1")
    s, x = expand_content(spec, shape)
    checks.append(
        _identity_check(
            "extended_jacobi_trudi",
            "2,1",
            lambda c: extended_jacobi_trudi(s, x, shape, c),
        )
    )
    return checks


def _suite_giambelli() -> list[Check]:
    spec = _suite_spec()
    checks = [
        _identity_check(
            "giambelli", text, lambda c, s=parse_partition(text): giambelli(spec, s, c)
        )
        for text in ("2,2", "3,2", "3,3,1")
    ]
    shape = parse_partition("2,2")
    gamma = Tableau(shape, {cell: 3 if cell[1] == cell[0] else 2 for cell in shape.cells()})
    x = Tableau(shape, {cell: 0.0 for cell in shape.cells()})
    checks.append(
        _identity_check(
            "skew_giambelli_hash", "2,2", lambda c: skew_giambelli_hash(gamma, x, c)
        )
    )
    return checks


def _suite_hook() -> list[Check]:
    spec = _suite_spec()
    checks = []
    for p, q in ((0, 1), (1, 1), (2, 1), (1, 2)):
        checks.append(
            _identity_check(
                "hook_expansion_star",
                f"hook({p},{q})",
                lambda c, p=p, q=q: hook_expansion_star(spec, p, q, c),
            )
        )
        checks.append(
            _identity_check(
                "hook_expansion_zeta",
                f"hook({p},{q})",
                lambda c, p=p, q=q: hook_expansion_zeta(spec, p, q, c),
            )
        )
    return checks


def _suite_frobenius() -> list[Check]:
    spec = _suite_spec()
    return [
        _identity_check(
            "frobenius_expansion",
            text,
            lambda c, s=parse_partition(text): frobenius_expansion(spec, s, c),
        )
        for text in ("2,2", "3,2")
    ]


def _suite_dirichlet() -> list[Check]:
    spec = _suite_spec()
    return [
        _identity_check(
            "dirichlet_series_expr",
            text,
            lambda c, s=parse_partition(text): dirichlet_series_expr(spec, s, c),
        )
        for text in ("2,1", "3,1,1", "2,2")
    ]


def _suite_derivative() -> list[Check]:
    spec = ContentSpec(
        {-2: 2.5, -1: 2, 0: 3, 1: 2, 2: 2.5},
        {k: 0.3 for k in range(-2, 3)},
    )
    checks = []
    for text in ("2,1", "3,1,1"):
        shape = parse_partition(text)
        p = shape.part(1) - 1
        for ell in range(p + 1):
            for order in (1, 2):
                checks.append(
                    _identity_check(
                        f"derivative_identity_{order}",
                        f"{text} ell={ell}",
                        lambda c, s=shape, e=ell, o=order: derivative_identity(
                            spec, s, e, o, c
                        ),
                    )
                )
            checks.append(
                _identity_check(
                    "derivative_fd_check",
                    f"{text} ell={ell}",
                    lambda c, s=shape, e=ell: derivative_fd_check(spec, s, e, c),
                )
            )
    return checks


def _suite_lgv_exact() -> list[Check]:
    spec = ContentSpec(
        {k: 2 if k % 2 == 0 else 3 for k in range(-3, 4)},
        {0: 0.5},
    )
    checks = []
    for text in ("1,1", "2,1", "2,2", "3,1"):
        shape = parse_partition(text)
        s, x = expand_content(spec, shape)

        def runner(cfg: EvalConfig, shape=shape, s=s, x=x, text=text) -> dict:
            rep = verify_cancellation(shape, 3, s, x)
            return {
                "identity_id": "lgv_exact",
                "shape": text,
                "patterns": rep.total_patterns,
                "nonintersecting": rep.nonintersecting,
                "pass": rep.passes,
            }

        checks.append(({"identity_id": "lgv_exact", "shape": text}, runner))
    return checks


def _suite_reductions() -> list[Check]:
    checks = []
    for depth, exps in ((1, (2,)), (2, (2, 3)), (2, (3, 2))):
        for m in (1, 2):

            def runner(cfg: EvalConfig, exps=exps, m=m, depth=depth) -> dict:
                reports = check_reductions(exps, exps, float(m), cfg)
                return {
                    "identity_id": "root_reductions",
                    "shape": f"depth={depth} m={m}",
                    "discrepancy": max(r.discrepancy for r in reports),
                    "budget": max(r.budget for r in reports),
                    "pass": all(r.passes() for r in reports),
                }

            checks.append(
                ({"identity_id": "root_reductions", "shape": f"depth={depth} m={m}"}, runner)
            )
    return checks


def builtin_suite(name: str) -> list[Check]:
    table = {
        "jacobi-trudi": _suite_jacobi_trudi,
        "giambelli": _suite_giambelli,
        "hook": _suite_hook,
        "frobenius": _suite_frobenius,
        "dirichlet": _suite_dirichlet,
        "derivative": _suite_derivative,
        "lgv-exact": _suite_lgv_exact,
        "reductions": _suite_reductions,
    }
    if name == "all":
        out: list[Check] = []
        for key in table:
            out.extend(table[key]())
        return out
    if name not in table:
        raise UsageError(
            f"unknown suite {name!r}; choose from {', '.join(BUILTIN_SUITES)}"
        )
    return table[name]()


# ---------------------------------------------------------------------------
# check: manifest files

MANIFEST_IDENTITIES = {
    "jacobi_trudi_H": jacobi_trudi_H,
    "jacobi_trudi_E": jacobi_trudi_E,
    "giambelli": giambelli,
    "frobenius_expansion": frobenius_expansion,
    "dirichlet_series_expr": dirichlet_series_expr,
}


def _manifest_checks(path: str, flag_cutoff: int | None) -> list[Check]:
    checks: list[Check] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError as exc:
                raise UsageError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
            ident = entry.get("identity_id")
            shape_text = entry.get("shape", "")
            spec_obj = entry.get("spec", {})
            spec = ContentSpec(
                {int(k): complex(v) for k, v in spec_obj.get("z", {}).items()},
                {int(k): float(v) for k, v in spec_obj.get("y", {}).items()},
            )
            cutoff = flag_cutoff or entry.get("cfg", {}).get("cutoff")

            if ident == "derivative_identity":
                ell = int(entry.get("ell", 0))
                order = int(entry.get("order", 1))
                shape = parse_partition(shape_text)

                def runner(cfg, spec=spec, shape=shape, ell=ell, order=order, cutoff=cutoff):
                    if cutoff:
                        cfg = EvalConfig(cutoff=int(cutoff))
                    return _report_fields(
                        derivative_identity(spec, shape, ell, order, cfg)
                    )

            elif ident in ("hook_expansion_star", "hook_expansion_zeta"):
                shape = parse_partition(shape_text)
                p, q = shape.part(1) - 1, shape.rows - 1
                fn = (
                    hook_expansion_star
                    if ident == "hook_expansion_star"
                    else hook_expansion_zeta
                )

                def runner(cfg, spec=spec, p=p, q=q, fn=fn, cutoff=cutoff):
                    if cutoff:
                        cfg = EvalConfig(cutoff=int(cutoff))
                    return _report_fields(fn(spec, p, q, cfg))

            elif ident in MANIFEST_IDENTITIES:
                shape = parse_partition(shape_text)
                fn = MANIFEST_IDENTITIES[ident]

                def runner(cfg, spec=spec, shape=shape, fn=fn, cutoff=cutoff):
                    if cutoff:
                        cfg = EvalConfig(cutoff=int(cutoff))
                    return _report_fields(fn(spec, shape, cfg))

            else:
                raise UsageError(f"{path}:{lineno}: unknown identity_id {ident!r}")
            checks.append(({"identity_id": ident, "shape": shape_text}, runner))
    return checks


def cmd_check(args: argparse.Namespace) -> int:
    cfg = EvalConfig(cutoff=args.cutoff)
    if args.manifest:
        checks = _manifest_checks(args.manifest, args.cutoff if args.cutoff_set else None)
    elif args.builtin:
        checks = builtin_suite(args.builtin)
    else:
        raise UsageError("check needs --builtin <suite> or --manifest <file>")

    def run_one(check: Check) -> dict:
        meta, runner = check
        t0 = time.perf_counter()
        out = runner(cfg)
        out["runtime_ms"] = round(1000 * (time.perf_counter() - t0), 3)
        out["cutoffs"] = {"series": cfg.cutoff}
        return out

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_one, checks))
    else:
        results = [run_one(c) for c in checks]

    failures = 0
    for out in results:
        _emit(out)
        if not out.get("pass", False):
            failures += 1
    print(
        f"{len(results) - failures}/{len(results)} checks passed",
        file=sys.stderr,
    )
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# paths


def cmd_paths(args: argparse.Namespace) -> int:
    shape = parse_partition(args.shape)
    total = count_patterns(shape, args.n, args.kind)
    by_type: dict[str, int] = {}
    nonintersecting = 0
    rendered = 0
    pattern_lines: list[dict] = []
    for idx, pat in enumerate(enumerate_patterns(shape, args.n, args.kind)):
        key = "".join(str(v) for v in pat.type)
        by_type[key] = by_type.get(key, 0) + 1
        if pat.is_nonintersecting():
            nonintersecting += 1
        if args.render and rendered < args.max_render:
            pattern_lines.append(
                {
                    "index": idx,
                    "type": list(pat.type),
                    "sign": pat.sign,
                    "nonintersecting": pat.is_nonintersecting(),
                    "render": render_pattern(pat),
                }
            )
            rendered += 1
    _emit(
        {
            "shape": args.shape,
            "n": args.n,
            "kind": args.kind,
            "patterns": total,
            "nonintersecting": nonintersecting,
            "types": dict(sorted(by_type.items())),
        }
    )
    for line in pattern_lines:
        _emit(line)
    print(
        f"{total} patterns, {nonintersecting} nonintersecting, "
        f"{len(by_type)} endpoint types",
        file=sys.stderr,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shzeta",
        description="Evaluate Schur-Hurwitz multiple zeta series and "
        "verify their determinant/expansion identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one series")
    p_eval.add_argument("--shape", help='partition or skew shape, e.g. "2,2" or "3,2/1"')
    p_eval.add_argument("--z", help='per-content exponents, e.g. "-1=2,0=3,1=2"')
    p_eval.add_argument("--y", help='per-content shifts, e.g. "0=0.3"')
    p_eval.add_argument("--tableau-file", help="JSON file with explicit s/x row arrays")
    p_eval.add_argument("--cutoff", type=int, default=None)
    p_eval.set_defaults(func=cmd_eval)

    p_check = sub.add_parser("check", help="run an identity suite")
    p_check.add_argument("--builtin", choices=BUILTIN_SUITES)
    p_check.add_argument("--manifest", help="manifest file (JSON lines, # comments)")
    p_check.add_argument("--cutoff", type=int, default=None)
    p_check.add_argument("--jobs", type=int, default=1)
    p_check.set_defaults(func=cmd_check)

    p_paths = sub.add_parser("paths", help="enumerate lattice-path patterns")
    p_paths.add_argument("--shape", required=True)
    p_paths.add_argument("--n", type=int, required=True, help="grid height")
    p_paths.add_argument("--kind", choices=("H", "E"), default="H")
    p_paths.add_argument("--render", action="store_true")
    p_paths.add_argument("--max-render", type=int, default=20)
    p_paths.set_defaults(func=cmd_paths)
    return parser


def _merge_value_flags(argv: list[str]) -> list[str]:
    """Join ``--z -1=2,...`` into ``--z=-1=2,...`` so values that start
    with a dash survive option parsing."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--z", "--y") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_value_flags(list(argv)))
        args.cutoff_set = getattr(args, "cutoff", None) is not None
        if getattr(args, "cutoff", None) is None:
            args.cutoff = _default_cutoff()
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
