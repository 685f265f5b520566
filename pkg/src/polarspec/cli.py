"""Command-line entry point: ``polarspec <command> ...``.

Exit codes: 0 success, 1 validation error, 2 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bounds import sigma_from_ebn0, union_bound
from .checks import compare_average, sweep_br, sweep_cosets, sweep_qup, sweep_wl
from .construct import construct_from_order, pw_construct
from .coset import CosetPrefix, alg4_prefix_spectra, avg_spectrum, coset_spectrum
from .errors import CapExceededError, ValidationError
from .minwt_punct import build_prefix_table, qup_min_weight, wl_min_weight
from .minwt_short import br_min_weight_count
from .monomial import CodeSpec, Monomial, mother_min_weight
from .patterns import Kind, Mode, Pattern, make_pattern

THREADS_ENV = "POLARSPEC_THREADS"


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def _code(args) -> CodeSpec:
    if args.code:
        return CodeSpec.from_dict(_load_json(args.code))
    if args.m is None or args.info is None:
        raise ValidationError("give --code FILE or both --m and --info")
    return CodeSpec(args.m, tuple(int(x) for x in args.info.split(",") if x))


def _pattern(args, n: int) -> Pattern | None:
    if getattr(args, "pattern_file", None):
        return Pattern.from_dict(_load_json(args.pattern_file))
    if getattr(args, "indices", None) is not None:
        mode = args.mode or "puncture"
        return Pattern(n, Mode(mode), frozenset(int(x) for x in args.indices.split(",") if x))
    if getattr(args, "pattern", None):
        return make_pattern(args.pattern, n.bit_length() - 1, args.i, args.mode)
    return None


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--code", help="CodeSpec JSON file {\"m\": int, \"info\": [...]}")
    p.add_argument("--m", type=int, help="block-length exponent")
    p.add_argument("--info", help="comma-separated 1-based information indices")


def _add_pattern_args(p: argparse.ArgumentParser, kinds=("qup", "wl", "br")) -> None:
    p.add_argument("--pattern", choices=kinds, help="rate-matching pattern family")
    p.add_argument("--i", type=int, default=0, help="number of punctured/shortened bits")
    p.add_argument("--mode", choices=[m.value for m in Mode], help="override the family's default mode")
    p.add_argument("--indices", help="custom pattern: comma-separated indices")
    p.add_argument("--pattern-file", help="Pattern JSON file")


def _emit(args, payload: dict, rows: list[dict] | None = None) -> None:
    if args.csv and rows is not None:
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _config(args) -> dict:
    skip = {"func", "csv"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def cmd_construct(args) -> int:
    n = 1 << args.m
    pattern = None
    if args.e is not None:
        if not 0 < args.e <= n:
            raise ValidationError(f"E={args.e} outside (0, {n}]")
        pattern = make_pattern(args.pattern or "qup", args.m, n - args.e, args.mode)
    if args.order_file:
        order = [int(tok) for tok in Path(args.order_file).read_text().split()]
        spec = construct_from_order(args.m, args.k, order, pattern, label="file")
    else:
        spec = pw_construct(args.m, args.k, pattern)
    out = spec.to_dict()
    if pattern is not None:
        out["pattern"] = pattern.to_dict()
    _emit(args, {"config": _config(args), "code": out}, [{"index": i} for i in spec.info])
    return 0


def cmd_minwt(args) -> int:
    spec = _code(args)
    kind = args.pattern
    if kind is None:
        d, a = mother_min_weight(spec)
        result = {"d_min": d, "count": str(a)}
    elif kind == "br":
        result = br_min_weight_count(spec, args.i).to_dict()
    elif kind == "wl":
        d, a = wl_min_weight(spec, args.i)
        result = {"d_min": d, "count": str(a)}
    else:
        result = qup_min_weight(spec, args.i).to_dict()
    rows = [{"weight": result["d_min"], "count": result["count"]}]
    rows += [{"weight": w, "count": c} for w, c in result.get("lower_bounds", {}).items()]
    _emit(args, {"config": _config(args), "code": spec.to_dict(), "result": result}, rows)
    return 0


def _spectrum_rows(spec: dict) -> list[dict]:
    return [{"weight": w, "count": c} for w, c in sorted(spec.items())]


def cmd_coset(args) -> int:
    n = 1 << args.m
    if args.prefix is not None:
        prefix = CosetPrefix.explicit([int(c) for c in args.prefix if c in "01"])
    elif args.unit is not None:
        prefix = CosetPrefix.unit(args.unit)
    else:
        prefix = CosetPrefix.zero(args.zero or 0)
    pattern = _pattern(args, n)
    result = coset_spectrum(args.m, prefix, pattern)
    payload = {
        "config": _config(args),
        "prefix": list(prefix.as_bits()),
        "spectrum": {str(w): str(c) for w, c in sorted(result.items())},
    }
    _emit(args, payload, _spectrum_rows({w: str(c) for w, c in result.items()}))
    return 0


def cmd_avg(args) -> int:
    spec = _code(args)
    pattern = _pattern(args, spec.n)
    avg = avg_spectrum(spec, pattern)
    payload = {"config": _config(args), "code": spec.to_dict(), "average": avg.to_dict()}
    if args.cosets:
        payload["cosets"] = {
            str(j): {str(w): str(c) for w, c in s.items()} for j, s in alg4_prefix_spectra(spec, pattern).items()
        }
    rows = [{"weight": w, "num": v.numerator, "exp2": v.exp2, "approx": float(v)} for w, v in avg.entries.items()]
    _emit(args, payload, rows)
    return 0


def _read_spectrum(path: str) -> dict[int, float]:
    data = _load_json(path)
    for key in ("average", "spectrum"):
        if key in data:
            data = data[key]
            break
    else:
        if "result" in data:
            res = data["result"]
            data = {res["d_min"]: res["count"], **res.get("lower_bounds", {})}
    out = {}
    for w, v in data.items():
        if isinstance(v, dict):
            v = int(v["num"]) / 2 ** int(v["exp2"])
        out[int(w)] = float(v)
    return out


def cmd_union(args) -> int:
    spectrum = _read_spectrum(args.spectrum)
    if args.sigma:
        sigmas = [float(s) for s in args.sigma.split(",")]
        labels = [None] * len(sigmas)
    elif args.ebn0:
        if args.rate is None:
            raise ValidationError("--ebn0 needs --rate")
        labels = [float(x) for x in args.ebn0.split(",")]
        sigmas = [sigma_from_ebn0(x, args.rate) for x in labels]
    else:
        raise ValidationError("give --sigma or --ebn0")
    curve = union_bound(spectrum, sigmas, args.max_weight, args.paper_literal_sign)
    rows = curve.to_rows()
    for row, lab in zip(rows, labels):
        if lab is not None:
            row["ebn0_db"] = lab
    _emit(args, {"config": _config(args), "points": rows}, rows)
    return 0


def cmd_table(args) -> int:
    f = Monomial.parse(args.monomial)
    table = build_prefix_table(f, args.a_max, args.m)
    lo = args.min_weight if args.min_weight is not None else 0
    if args.json:
        payload = {
            "config": _config(args),
            "p": {str(w): [str(table.p(w, a)) for a in range(args.a_max + 1)] for w in range(lo, table.weight + 1)},
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(table.to_csv(range(lo, table.weight + 1)))
    return 0


def cmd_check(args) -> int:
    ms = tuple(range(2, args.max_m + 1))
    results = [sweep_br(ms), sweep_wl(ms), sweep_qup(ms), sweep_cosets(args.patterns, args.explicit, args.max_m, args.seed)]
    report = {"config": _config(args), "sweeps": [r.to_dict() for r in results]}
    ok = all(r.ok for r in results)
    if args.samples:
        avgs = []
        for k in (2, 3, 4):
            for i in (0, 1, 2):
                pattern = make_pattern(Kind.QUP, 3, i)
                spec = pw_construct(3, k, pattern)
                cmp = compare_average(spec, pattern, args.samples, args.seed, threads=args.threads)
                avgs.append({"k": k, "i": i, "ok": cmp["ok"], "max_z": cmp["max_z"]})
                ok &= cmp["ok"]
        report["average_vs_monte_carlo"] = avgs
    report["ok"] = ok
    _emit(args, report, [{"sweep": r.name, "ok": r.ok, "checked": r.checked} for r in results])
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    def common(default) -> argparse.ArgumentParser:
        # shared flags; accepted before or after the subcommand
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--csv", action="store_true", default=default(False), help="CSV instead of JSON where tabular")
        p.add_argument(
            "--threads",
            type=int,
            default=default(int(os.environ.get(THREADS_ENV, "1"))),
            help=f"worker threads (default ${THREADS_ENV} or 1)",
        )
        p.add_argument("--seed", type=int, default=default(0))
        return p

    shared = common(lambda v: argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="polarspec", description=__doc__.splitlines()[0], parents=[common(lambda v: v)])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("construct", parents=[shared], help="PW (or file-ordered) information set")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--e", type=int, help="rate-matched length; N-E bits are punctured/shortened")
    p.add_argument("--pattern", choices=["qup", "wl", "br"])
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--order-file", help="reliability sequence, most reliable first, whitespace-separated")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("minwt", parents=[shared], help="minimum weight and its multiplicity")
    _add_code_args(p)
    p.add_argument("--pattern", choices=["qup", "wl", "br"])
    p.add_argument("--i", type=int, default=0)
    p.set_defaults(func=cmd_minwt)

    p = sub.add_parser("coset-spectrum", parents=[shared], help="spectrum of one rate-matched polar coset")
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--prefix", help="explicit prefix bits, e.g. 0010")
    group.add_argument("--zero", type=int, help="all-zero prefix of this length")
    group.add_argument("--unit", type=int, help="(0,...,0,1) prefix of this length")
    _add_pattern_args(p)
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("avg-spectrum", parents=[shared], help="average spectrum over random pre-transforms")
    _add_code_args(p)
    _add_pattern_args(p)
    p.add_argument("--cosets", action="store_true", help="also emit the per-index coset spectra")
    p.set_defaults(func=cmd_avg)

    p = sub.add_parser("union-bound", parents=[shared], help="ML union bound from a spectrum JSON")
    p.add_argument("--spectrum", required=True, help="output of minwt / avg-spectrum / coset-spectrum, or {w: A_w}")
    p.add_argument("--sigma", help="comma-separated noise standard deviations")
    p.add_argument("--ebn0", help="comma-separated Eb/N0 values in dB")
    p.add_argument("--rate", type=float)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--paper-literal-sign", action="store_true", help="evaluate Q(-sqrt(d)/sigma)")
    p.set_defaults(func=cmd_union)

    p = sub.add_parser("check", parents=[shared], help="oracle-equivalence sweeps at small sizes")
    p.add_argument("--max-m", type=int, default=4, choices=[2, 3, 4])
    p.add_argument("--patterns", type=int, default=200)
    p.add_argument("--explicit", type=int, default=100)
    p.add_argument("--samples", type=int, default=0, help="Monte-Carlo samples for the average check (0 = skip)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dump-table", parents=[shared], help="prefix-weight table P_f(w, a) as CSV")
    p.add_argument("--monomial", required=True, help='e.g. "x2*x3"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--min-weight", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
