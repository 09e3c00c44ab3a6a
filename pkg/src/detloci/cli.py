"""Command-line interface: ``detloci analyze | betti | verify | sweep``.

Exit codes: 0 ok / all checks pass, 1 usage or input error, 2 empty family,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from typing import Sequence

from .checker import Guarantee, analyze
from .degrees import CharFlag, DegreeSpec, is_nonempty, validate
from .errors import BudgetExceeded, DetlociError, HypothesisViolated, InputError, NotCodimC, ShapeError
from .resolution import en_betti_table, hilbert_function, hilbert_polynomial

EXIT_OK, EXIT_INPUT, EXIT_EMPTY, EXIT_VERIFY = 0, 1, 2, 3

CHECKS = ("codim", "hilbert", "height", "mixedsum", "tangent")
PASSING = {"PASS", "COUNTEREXAMPLE-CONFIRMED"}
MAX_VERIFY_N = 12

SCHEMA = "# detloci-sweep schema=1"
COLUMNS = ["key", "n", "t", "c", "b", "a", "nonempty", "dim", "rules", "checks", "seed", "ms"]


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _spec_args(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, required=True, help="ambient dimension of P^n")
    p.add_argument("--t", type=int, required=True, help="number of rows")
    p.add_argument("--c", type=int, required=True, help="codimension")
    p.add_argument("--b", type=_int_list, required=True, help="row degrees b_1..b_t")
    p.add_argument("--a", type=_int_list, required=True, help="column degrees a_0..a_{t+c-2}")
    p.add_argument("--char", type=int, default=0, help="field characteristic for the rules (0 or prime)")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _spec_from(args) -> DegreeSpec:
    return validate(args.n, args.t, args.c, args.b, args.a)


# --- verification -------------------------------------------------------------

def _matrix(s: DegreeSpec, kind: str, field: int, seed: int):
    from .algebra.matrices import build_block_matrix, build_generic_matrix, build_staggered_matrix

    if kind == "generic":
        return build_generic_matrix(s, field, seed)
    if kind == "block":
        return build_block_matrix(s, field)
    return build_staggered_matrix(s, field)


def _one_check(name: str, s: DegreeSpec, M, v_max: int, field: int, seed: int) -> tuple[str, str]:
    from .algebra.cogenerated import CogeneratedSpec, height_check
    from .algebra.matrices import maximal_minors
    from .algebra.tangent import mixed_sum_dim_check, tangent_space_dim

    if name == "codim":
        got = maximal_minors(M).codim()
        return ("PASS" if got == s.c else "FAIL"), f"codim {got}, expected {s.c}"
    if name == "hilbert":
        oracle = maximal_minors(M).hilbert_fn_oracle(v_max)
        en = [hilbert_function(s, v) for v in range(v_max + 1)]
        bad = [v for v in range(v_max + 1) if oracle[v] != en[v]]
        detail = f"v <= {v_max}: " + ",".join(map(str, oracle))
        if bad:
            detail += f"; EN gives {','.join(map(str, en))}, first mismatch at v = {bad[0]}"
        return ("FAIL" if bad else "PASS"), detail
    if name == "height":
        cs = CogeneratedSpec(s.t, s.columns, tuple(range(1, s.t)), tuple(range(1, s.t)))
        r = height_check(cs, s.b, s.a, n=s.n, field=field, seed=seed)
        return ("PASS" if r.ok else "FAIL"), f"height {r.observed}, predicted {r.predicted}"
    if name == "mixedsum":
        r = mixed_sum_dim_check(M, 1)
        return ("PASS" if r.holds else "FAIL"), f"lhs dim {r.lhs_dim}, dim D_(c-1) - 2 = {r.rhs_dim}"
    if name == "tangent":
        rep = analyze(s)
        tan = tangent_space_dim(M)
        bound = rep.upper_bound
        if tan >= bound:
            return "PASS", f"tangent {tan} >= conjectured dim {bound}"
        if rep.counterexample_flag:
            return "COUNTEREXAMPLE-CONFIRMED", f"tangent {tan} < upper bound {bound}"
        if any(v.guarantees is not Guarantee.NOTHING for v in rep.verdicts):
            return "FAIL", f"tangent {tan} < guaranteed dim {bound}"
        return "BELOW-BOUND", f"tangent {tan} < conjectured dim {bound}"
    raise ValueError(f"unknown check {name!r}")


def run_checks(s: DegreeSpec, checks: Sequence[str], seed: int = 1, field: int = 32003,
               matrix: str = "generic", v_max: int = 10) -> list[dict]:
    """Run each named check; errors become statuses instead of exceptions."""
    results = []
    M = None
    for name in checks:
        t0 = time.perf_counter()
        try:
            if M is None and name != "height":
                M = _matrix(s, matrix, field, seed)
            status, detail = _one_check(name, s, M, v_max, field, seed)
        except BudgetExceeded as e:
            status, detail = "BUDGET", str(e)
        except (HypothesisViolated, ShapeError) as e:
            status, detail = "SKIP", str(e)
        except NotCodimC as e:
            status, detail = "FAIL", str(e)
        ms = int((time.perf_counter() - t0) * 1000)
        results.append({"check": name, "status": status, "detail": detail, "ms": ms})
    return results


# --- sweep ---------------------------------------------------------------------

def enumerate_specs(n: int, t: int, c: int, lo: int, hi: int) -> list[DegreeSpec]:
    """All sorted (b, a) with entries in [lo, hi], ordered by canonical key."""
    rng = range(lo, hi + 1)
    specs = [validate(n, t, c, b, a)
             for b in combinations_with_replacement(rng, t)
             for a in combinations_with_replacement(rng, t + c - 1)]
    return sorted(specs, key=lambda s: s.key())


def sweep_row(s: DegreeSpec, checks: Sequence[str] = (), seed: int = 1, field: int = 32003,
              char: int = 0, timing: bool = False) -> list[str]:
    t0 = time.perf_counter()
    rep = analyze(s, CharFlag(char))
    check_str = ""
    if checks and rep.nonempty:
        res = run_checks(s, checks, seed=seed, field=field)
        check_str = ";".join(f"{r['check']}={r['status']}" for r in res)
    ms = int((time.perf_counter() - t0) * 1000) if timing else 0
    return [s.key(), str(s.n), str(s.t), str(s.c), " ".join(map(str, s.b)), " ".join(map(str, s.a)),
            "1" if rep.nonempty else "0", "" if rep.conjectured_dim is None else str(rep.conjectured_dim),
            rep.rule_bits() + ("B" if rep.boundary else "-"), check_str, str(seed), str(ms)]


def _sweep_task(job):
    return sweep_row(*job)


def _existing_keys(path: str) -> set[str]:
    """Keys already present; drops a trailing partial line left by an interrupted run."""
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return set()
    with open(path, "rb+") as fh:
        data = fh.read()
        if not data.endswith(b"\n"):
            cut = data.rfind(b"\n") + 1
            fh.truncate(cut)
            data = data[:cut]
    if not data:
        return set()
    lines = data.decode().splitlines()
    if len(lines) < 2 or lines[0] != SCHEMA or lines[1] != ",".join(COLUMNS):
        raise InputError(f"{path} is not a detloci sweep file with schema {SCHEMA!r}")
    return {row[0] for row in csv.reader(lines[2:]) if row}


def run_sweep(n: int, t: int, c: int, lo: int, hi: int, out: str, jobs: int = 1,
              checks: Sequence[str] = (), seed: int = 1, field: int = 32003, char: int = 0,
              timing: bool = False) -> int:
    """Write (or resume) a sweep file. Returns the number of rows written."""
    specs = enumerate_specs(n, t, c, lo, hi)
    done = _existing_keys(out)
    todo = [s for s in specs if s.key() not in done]
    jobs_list = [(s, tuple(checks), seed, field, char, timing) for s in todo]
    new_file = not done and (not os.path.exists(out) or os.path.getsize(out) == 0)
    with open(out, "a", newline="") as fh:
        if new_file:
            fh.write(SCHEMA + "\n" + ",".join(COLUMNS) + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                rows = pool.map(_sweep_task, jobs_list, chunksize=16)
                for row in rows:
                    writer.writerow(row)
                    fh.flush()
        else:
            for job in jobs_list:
                writer.writerow(_sweep_task(job))
                fh.flush()
    return len(todo)


# --- commands --------------------------------------------------------------------

def cmd_analyze(args) -> int:
    s = _spec_from(args)
    rep = analyze(s, CharFlag(args.char))
    print(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK if rep.nonempty else EXIT_EMPTY


def cmd_betti(args) -> int:
    s = _spec_from(args)
    if not is_nonempty(s):
        print(f"W(b;a) is empty for {s.key()}", file=sys.stderr)
        return EXIT_EMPTY
    table = en_betti_table(s)
    H = hilbert_polynomial(s, table)
    if args.json:
        print(json.dumps({"spec": s.to_dict(), "betti": table.to_json(), "ranks": list(table.ranks()),
                          "hilbert_polynomial": str(H), "binomial_coefficients": list(H.coeffs)},
                         indent=2))
    else:
        print(table.to_text())
        print(f"ranks: {' '.join(map(str, table.ranks()))}")
        print(f"Hilbert polynomial: {H}")
    return EXIT_OK


def _check_list(text: str) -> list[str]:
    names = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in names if x not in CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown check(s) {bad}; choose from {', '.join(CHECKS)}")
    return names


def cmd_verify(args) -> int:
    s = _spec_from(args)
    if not is_nonempty(s):
        print(f"W(b;a) is empty for {s.key()}", file=sys.stderr)
        return EXIT_EMPTY
    if s.n > MAX_VERIFY_N:
        raise InputError(f"verify needs n <= {MAX_VERIFY_N}, got {s.n}")
    res = run_checks(s, args.checks, seed=args.seed, field=args.field, matrix=args.matrix,
                     v_max=args.v_max)
    if args.json:
        print(json.dumps({"spec": s.to_dict(), "seed": args.seed, "field": args.field,
                          "matrix": args.matrix, "checks": res}, indent=2))
    else:
        for r in res:
            print(f"{r['check']}: {r['status']} ({r['detail']})")
    return EXIT_OK if all(r["status"] in PASSING for r in res) else EXIT_VERIFY


def cmd_sweep(args) -> int:
    if args.deg_min > args.deg_max:
        raise InputError("--deg-min must not exceed --deg-max")
    validate(args.n, args.t, args.c, [0] * args.t, [0] * (args.t + args.c - 1))
    written = run_sweep(args.n, args.t, args.c, args.deg_min, args.deg_max, args.out,
                        jobs=args.jobs, checks=args.checks, seed=args.seed, field=args.field,
                        char=args.char, timing=args.timing)
    print(f"wrote {written} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="detloci",
                                     description="Determinantal loci: invariants, rules and oracles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="rule report for one degree spec")
    _spec_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("betti", help="Eagon-Northcott Betti table and Hilbert polynomial")
    _spec_args(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="Groebner-based oracle checks on a random matrix")
    _spec_args(p)
    p.add_argument("--seed", type=int, default=1, help="seed for the random matrix")
    p.add_argument("--field", type=int, default=32003, help="prime for the coefficient field")
    p.add_argument("--checks", type=_check_list, default=["codim", "hilbert"],
                   help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--matrix", choices=("generic", "block", "staggered"), default="generic",
                   help="random general matrix or one of the explicit monomial witnesses")
    p.add_argument("--v-max", type=int, default=10, help="largest degree for the hilbert check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="enumerate degree vectors and write a CSV of results")
    p.add_argument("--n", type=int, required=True, help="ambient dimension of P^n")
    p.add_argument("--t", type=int, required=True, help="number of rows")
    p.add_argument("--c", type=int, required=True, help="codimension")
    p.add_argument("--deg-min", type=int, default=0, help="smallest entry of b and a")
    p.add_argument("--deg-max", type=int, required=True, help="largest entry of b and a")
    p.add_argument("--out", required=True, help="CSV file; an existing one is resumed")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--checks", type=_check_list, default=[],
                   help="oracle checks to run on nonempty rows (slow)")
    p.add_argument("--seed", type=int, default=1, help="seed for the random matrices")
    p.add_argument("--field", type=int, default=32003, help="prime for the coefficient field")
    p.add_argument("--char", type=int, default=0, help="field characteristic for the rules")
    p.add_argument("--timing", action="store_true", help="record runtimes (output no longer reproducible)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        if getattr(args, "char", 0):
            CharFlag(args.char)
        field = getattr(args, "field", None)
        if field is not None and (field < 2 or CharFlag(field).is_zero):
            raise InputError(f"--field must be a prime, got {field}")
        return args.func(args)
    except (InputError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DetlociError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
