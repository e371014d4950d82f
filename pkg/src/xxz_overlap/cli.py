"""Command-line surface.

Subcommands:
    roots     solve one ground state and report roots/energy (+ ED check)
    overlap   all overlap estimators for one parameter pair
    sweep     overlap estimators over a grid of the swept left field
    converge  finite-size estimators against the closed form over lengths
    selftest  run the bundled invariant suite

CSV contract (version header `# xxz-overlap v1`), columns exactly:
    L, zeta, h_plus, h1_minus, h2_minus, s_ed, s_finite, s_product,
    s_thermo, case_path, residual_max, wall_time_ms, error
Floats are printed with 17 significant digits; rows are emitted in input
order, so identical invocations produce identical physics content.

Exit codes: 0 success, 2 solver failure, 3 gapless/unsupported regime,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import __version__
from .bethe import energy, solve_ground_state
from .ed import ED_CAP_DEFAULT, ed_overlap, ground_state
from .errors import (
    GaplessRegimeError,
    NoConvergenceError,
    XXZError,
)
from .model import ChainParams, classify
from .overlap import (
    OverlapReport,
    overlap_normalized,
    overlap_product_form,
    solve_pair,
)
from .thermo import overlap_thermo

CSV_HEADER = "# xxz-overlap v1"
CSV_COLUMNS = ["L", "zeta", "h_plus", "h1_minus", "h2_minus", "s_ed", "s_finite",
               "s_product", "s_thermo", "case_path", "residual_max",
               "wall_time_ms", "error"]

EXIT_OK = 0
EXIT_SOLVER = 2
EXIT_REGIME = 3
EXIT_USAGE = 64


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        if math.isnan(x):
            return ""
        return format(x, ".17g")
    return str(x)


def _row_to_csv(row: dict) -> str:
    return ",".join(_fmt(row.get(c)) for c in CSV_COLUMNS)


def compute_report(params1: ChainParams, params2: ChainParams,
                   want_ed: bool, want_product: bool, tol: float,
                   ed_cap: int = ED_CAP_DEFAULT) -> OverlapReport:
    """One ResultRow worth of estimators; per-estimator errors propagate."""
    rep = OverlapReport(L=params1.L)
    th = overlap_thermo(params1, params2)
    rep.s_thermo = th.value
    rep.case_path = th.case_path
    rep.vanishing = th.vanishing
    s1, s2 = solve_pair(params1, params2, tol=tol)
    if s1 is None:
        rep.s_finite = 0.0
        rep.s_product = 0.0 if want_product else None
        rep.residual_max = 0.0
    else:
        rep.residual_max = max(s1.residual_max, s2.residual_max)
        rep.s_finite = overlap_normalized(s1, s2, params1, params2)
        if want_product:
            rep.s_product = overlap_product_form(s1, s2, params1, params2)
    if want_ed and params1.L <= ed_cap:
        rep.s_ed = ed_overlap(params1, params2, cap=ed_cap)
    return rep


def _report_row(L, zeta, h_plus, h1, h2, want_ed, want_product, tol) -> dict:
    row = {c: None for c in CSV_COLUMNS}
    row.update(L=L, zeta=zeta, h_plus=h_plus, h1_minus=h1, h2_minus=h2, error="")
    t0 = time.perf_counter()
    try:
        p1 = ChainParams(L=L, zeta=zeta, h_minus=h1, h_plus=h_plus)
        p2 = ChainParams(L=L, zeta=zeta, h_minus=h2, h_plus=h_plus)
        rep = compute_report(p1, p2, want_ed, want_product, tol)
        row.update(s_ed=rep.s_ed, s_finite=rep.s_finite, s_product=rep.s_product,
                   s_thermo=rep.s_thermo, case_path=rep.case_path,
                   residual_max=rep.residual_max)
    except XXZError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    row["wall_time_ms"] = (time.perf_counter() - t0) * 1e3
    return row


def _emit_rows(rows, out_path, fmt: str) -> None:
    if fmt == "json":
        clean = [{k: (None if isinstance(v, float) and math.isnan(v) else v)
                  for k, v in r.items()} for r in rows]
        payload = {"meta": {"version": __version__, "schema": CSV_HEADER},
                   "rows": clean}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [CSV_HEADER, ",".join(CSV_COLUMNS)]
        lines += [_row_to_csv(r) for r in rows]
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ─────────────────────────────────────────────────────────────────────
# Subcommands
# ─────────────────────────────────────────────────────────────────────

def cmd_roots(args) -> int:
    params = ChainParams(L=args.L, zeta=args.zeta, h_minus=args.h_minus,
                         h_plus=args.h_plus)
    try:
        regime = classify(params)
        roots = solve_ground_state(params, regime, tol=args.tol)
        e_bethe = energy(roots, params)
    except GaplessRegimeError as exc:
        print(f"gapless regime: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except XXZError as exc:
        print(f"solver failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    out = {
        "L": params.L, "zeta": params.zeta,
        "h_minus": params.h_minus, "h_plus": params.h_plus,
        "case": regime.case_label, "N": regime.N,
        "reversed_frame": roots.reversed_frame,
        "real_roots": [float(x) for x in roots.real_roots],
        "quantum_numbers": list(roots.quantum_numbers),
        "residual_max": roots.residual_max,
        "energy": e_bethe,
    }
    if roots.boundary_root is not None:
        out["boundary_root"] = {
            "side": roots.br_info.side,
            "value": [roots.boundary_root.real, roots.boundary_root.imag],
            "epsilon_corr": abs(roots.br_info.epsilon_corr),
            "clamped": roots.br_info.clamped,
        }
    if args.ed:
        gs = ground_state(params)
        out["energy_ed"] = gs.energy
        out["sector_ed"] = gs.sector
        out["energy_gap_to_ed"] = abs(e_bethe - gs.energy)
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_overlap(args) -> int:
    if args.h1_minus is None or args.h2_minus is None:
        print("overlap needs --h1-minus and --h2-minus", file=sys.stderr)
        return EXIT_USAGE
    row = _report_row(args.L, args.zeta, args.h_plus, args.h1_minus,
                      args.h2_minus, args.ed, args.product, args.tol)
    if row["error"]:
        err = row["error"]
        _emit_rows([row], args.out, args.format)
        if "Gapless" in err or "Unclassified" in err or "Ambiguous" in err:
            return EXIT_REGIME
        return EXIT_SOLVER
    for a, b in (("s_finite", "s_ed"), ("s_finite", "s_thermo")):
        if row[a] is not None and row[b] is not None:
            row_gap = abs(row[a] - row[b])
            print(f"# |{a} - {b}| = {row_gap:.3e}", file=sys.stderr)
    _emit_rows([row], args.out, args.format)
    return EXIT_OK


def _parse_grid(spec: str):
    try:
        start, stop, step = (float(tok) for tok in spec.split(":"))
    except ValueError:
        return None
    if step <= 0 or stop < start:
        return None
    vals = []
    x = start
    while x <= stop + 1e-12:
        vals.append(round(x, 12))
        x += step
    return vals


def cmd_sweep(args) -> int:
    grid = _parse_grid(args.grid)
    if not grid:
        print(f"unusable grid spec {args.grid!r} (want start:stop:step)",
              file=sys.stderr)
        return EXIT_USAGE
    fixed = args.h2_minus if args.swept_field == "h1_minus" else args.h1_minus
    if fixed is None:
        print("sweep needs the non-swept left field", file=sys.stderr)
        return EXIT_USAGE
    lengths = args.lengths or [args.L]
    if len({L % 2 for L in lengths}) > 1:
        print("sweep lengths must share parity", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for L in lengths:
        for g in grid:
            h1 = g if args.swept_field == "h1_minus" else fixed
            h2 = g if args.swept_field == "h2_minus" else fixed
            rows.append(_report_row(L, args.zeta, args.h_plus, h1, h2,
                                    args.ed, args.product, args.tol))
    _emit_rows(rows, args.out, args.format)
    return EXIT_OK


def cmd_converge(args) -> int:
    if args.h1_minus is None or args.h2_minus is None:
        print("converge needs --h1-minus and --h2-minus", file=sys.stderr)
        return EXIT_USAGE
    lengths = args.lengths
    if not lengths:
        print("converge needs --lengths", file=sys.stderr)
        return EXIT_USAGE
    if sorted(lengths) != lengths or len({L % 2 for L in lengths}) > 1:
        print("converge lengths must be ascending, same parity", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for L in lengths:
        rows.append(_report_row(L, args.zeta, args.h_plus, args.h1_minus,
                                args.h2_minus, args.ed, args.product, args.tol))
    gaps = []
    for row in rows:
        if row["s_finite"] is not None and row["s_thermo"] is not None:
            gaps.append(abs(row["s_finite"] - row["s_thermo"]))
        else:
            gaps.append(math.nan)
    monotone = all(b < a for a, b in zip(gaps, gaps[1:])
                   if not (math.isnan(a) or math.isnan(b)))
    ratios = [b / a for a, b in zip(gaps, gaps[1:])
              if a and not (math.isnan(a) or math.isnan(b))]
    if len(lengths) > 1 and not monotone:
        print("# NonMonotone: |s_finite - s_thermo| did not decrease",
              file=sys.stderr)
    if ratios:
        print(f"# geometric decay ratio per step: {max(ratios):.4f}",
              file=sys.stderr)
    _emit_rows(rows, args.out, args.format)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from . import selftest as st
    failures = st.run(verbose=True)
    return EXIT_OK if failures == 0 else 1


def _common_physics(sub, pair: bool):
    sub.add_argument("--L", type=int, required=True)
    sub.add_argument("--zeta", type=float, required=True)
    sub.add_argument("--h-plus", dest="h_plus", type=float, required=True)
    if pair:
        sub.add_argument("--h1-minus", dest="h1_minus", type=float, default=None)
        sub.add_argument("--h2-minus", dest="h2_minus", type=float, default=None)
    sub.add_argument("--tol", type=float, default=1e-12)
    sub.add_argument("--ed", action=argparse.BooleanOptionalAction, default=False)
    sub.add_argument("--product", action=argparse.BooleanOptionalAction,
                     default=False)
    sub.add_argument("--extended-precision", action="store_true",
                     help="reserved for the long-chain convergence tail; "
                          "double precision covers the supported range")
    sub.add_argument("--out", default=None)
    sub.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="xxz-overlap",
                                 description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sp = ap.add_subparsers(dest="command", required=True)

    p = sp.add_parser("roots", help="solve one ground state")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--zeta", type=float, required=True)
    p.add_argument("--h-minus", dest="h_minus", type=float, required=True)
    p.add_argument("--h-plus", dest="h_plus", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--ed", action=argparse.BooleanOptionalAction, default=False)
    p.set_defaults(func=cmd_roots)

    p = sp.add_parser("overlap", help="overlap estimators for one pair")
    _common_physics(p, pair=True)
    p.set_defaults(func=cmd_overlap)

    p = sp.add_parser("sweep", help="sweep one left field over a grid")
    _common_physics(p, pair=True)
    p.add_argument("--grid", required=True, help="start:stop:step for the swept field")
    p.add_argument("--swept-field", choices=("h1_minus", "h2_minus"),
                   default="h2_minus")
    p.add_argument("--lengths", type=lambda s: [int(t) for t in s.split(",")],
                   default=None)
    p.set_defaults(func=cmd_sweep)

    p = sp.add_parser("converge", help="finite-size gap to the closed form over L")
    _common_physics(p, pair=True)
    p.add_argument("--lengths", type=lambda s: [int(t) for t in s.split(",")],
                   required=True)
    p.set_defaults(func=cmd_converge)

    p = sp.add_parser("selftest", help="run the bundled invariant suite")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except GaplessRegimeError as exc:
        print(f"gapless regime: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except NoConvergenceError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except XXZError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
