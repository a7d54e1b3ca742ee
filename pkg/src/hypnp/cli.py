"""``hypnp``: command-line front end.

Exit codes: 0 success, 1 domain error, 2 precision or resource failure,
3 verdict mismatch under ``--expect-ordinary``, 64 malformed flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import charsum
from .acceptance import run_all
from .charsum import hyp_sum, hyp_sum_bruteforce
from .errors import DomainError, HypnpError, PrecisionError, ResourceError
from .frobenius import compare, enumerate_tuples
from .hodge import (
    as_hodge_polygon,
    duality_pairing,
    hodge_numbers,
    irregular_hodge_polygon,
    orbit_theta_multisets,
    theta,
)
from .padic import default_ring
from .params import (
    CharParams,
    HypParams,
    conjugate,
    is_nonresonant,
    normalize,
    parse_rational_list,
    rational_str,
)
from .polytope import (
    basis_exponents,
    build_facets,
    lattice_count_volume_check,
    volume,
    wan_facet_groups,
)
from .svg import polygon_svg

EXIT_OK, EXIT_DOMAIN, EXIT_PRECISION, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 64 on malformed input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    params_source: str
    precision: int | None = None
    budget: int | None = None
    outputs: dict[str, str] = field(default_factory=dict)
    jobs: int = 1
    seed: int = 0


def _rationals(text: str):
    try:
        return parse_rational_list(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for any sampling (default 0)")
    common.add_argument("--debug-padic", action="store_true",
                        help="include raw p-adic coefficient grids in JSON output")
    common.add_argument("--json", dest="json_out", metavar="PATH",
                        help="write JSON here instead of stdout")

    parser = Parser(prog="hypnp", description="Hodge and Newton polygons of hypergeometric sums.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    hp = sub.add_parser("hodge", parents=[common], help="irregular Hodge numbers")
    hp.add_argument("--alpha", type=_rationals, default=None)
    hp.add_argument("--beta", type=_rationals, default=())
    hp.add_argument("--params", help="JSON parameter file")
    hp.add_argument("--p", type=int, help="prime for the Frobenius-side Hodge polygon")
    hp.add_argument("--s", type=_positive, default=1)
    hp.add_argument("--svg", metavar="PATH", help="draw the Hodge polygon")

    pp = sub.add_parser("polytope", parents=[common], help="Newton polytope data")
    pp.add_argument("--n", type=_positive)
    pp.add_argument("--m", type=int, default=0)
    pp.add_argument("--d", type=_positive, default=1)
    pp.add_argument("--alpha", type=_rationals, default=None,
                    help="with --beta: also list the basis exponents")
    pp.add_argument("--beta", type=_rationals, default=())
    pp.add_argument("--params", help="JSON parameter file")
    pp.add_argument("--lattice-scale", type=_positive, default=None,
                    help="verify the volume by lattice counts up to this dilation")
    pp.add_argument("--wan", type=int, nargs="?", const=0, metavar="P",
                    help="facet certificate at the prime P (or the prime given by -p)")
    pp.add_argument("-p", "--p", type=int, dest="prime", help="prime for --wan")
    pp.add_argument("--facets", action="store_true", help="only report the facet system")
    pp.add_argument("--volume", action="store_true", help="only report the volume")
    pp.add_argument("--basis", action="store_true", help="only report the basis exponents")

    def char_flags(sp):
        sp.add_argument("--p", type=int)
        sp.add_argument("--s", type=_positive, default=1)
        sp.add_argument("--aexp", type=_ints, default=None, help="comma-separated exponents a_i")
        sp.add_argument("--bexp", type=_ints, default=(), help="comma-separated exponents b_j")
        sp.add_argument("--params", help="JSON file with p, s, aexps, bexps (or a report)")
        sp.add_argument("--precision", type=_positive, default=None, help="pi-adic precision M")
        sp.add_argument("--budget", type=_positive, default=None,
                        help="operation budget for the summation kernel")

    sp = sub.add_parser("sum", parents=[common], help="evaluate one hypergeometric sum")
    char_flags(sp)
    sp.add_argument("--point", type=int, required=True)
    sp.add_argument("--ext", type=_positive, default=1)
    sp.add_argument("--brute-force", action="store_true",
                    help="cross-check against direct enumeration")

    cp = sub.add_parser("compare", parents=[common], help="Newton against Hodge polygon")
    char_flags(cp)
    where = cp.add_mutually_exclusive_group(required=True)
    where.add_argument("--point", type=int)
    where.add_argument("--all-points", action="store_true")
    cp.add_argument("--svg", metavar="PATH")
    cp.add_argument("--allow-small-p", action="store_true",
                    help="permit p <= n with extra precision")
    cp.add_argument("--expect-ordinary", action="store_true",
                    help="exit 3 unless every fiber is ordinary")
    cp.add_argument("--jobs", type=_positive, default=1)

    sw = sub.add_parser("sweep", parents=[common], help="verdict table over character tuples")
    sw.add_argument("--p", type=int, required=True)
    sw.add_argument("--s", type=_positive, default=1)
    sw.add_argument("--nmax", type=_positive, required=True)
    sw.add_argument("--mmax", type=int, default=0)
    sw.add_argument("--csv", dest="csv_out", metavar="PATH", help="write CSV here (default stdout)")
    sw.add_argument("--allow-small-p", action="store_true")
    sw.add_argument("--expect-ordinary", action="store_true")
    sw.add_argument("--jobs", type=_positive, default=1)

    st = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    st.add_argument("--only", type=_ints, default=(), help="comma-separated check numbers")
    return parser


# parameter loading ------------------------------------------------------------

def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read parameters from {path}: {exc}") from exc


def _unwrap(data):
    if isinstance(data, list):
        if not data:
            raise DomainError("empty parameter list")
        data = data[0]
    if isinstance(data, dict) and "reports" in data:
        return _unwrap(data["reports"])
    return data


def load_hyp_params(path: str) -> HypParams:
    data = _unwrap(_read_json(path))
    if "alpha" not in data:
        raise DomainError(f"{path} has no 'alpha' entry")
    return normalize(parse_rational_list(",".join(data["alpha"])),
                     parse_rational_list(",".join(data.get("beta", []))))


def load_char_params(path: str) -> CharParams:
    data = _unwrap(_read_json(path))
    data = data.get("params", data)
    try:
        return CharParams(int(data["p"]), int(data.get("s", 1)),
                          tuple(data["aexps"]), tuple(data.get("bexps", ())))
    except KeyError as exc:
        raise DomainError(f"{path} lacks the field {exc}") from exc


def _hyp_from_args(args) -> HypParams:
    if args.params:
        return load_hyp_params(args.params)
    if args.alpha is None:
        raise UsageError("give --alpha (and --beta) or --params")
    return normalize(args.alpha, args.beta)


def _char_from_args(args) -> CharParams:
    if args.params:
        return load_char_params(args.params)
    if args.p is None or args.aexp is None:
        raise UsageError("give --p and --aexp (and --bexp) or --params")
    return CharParams(args.p, args.s, args.aexp, args.bexp)


def _emit(args, payload) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(text)
    else:
        sys.stdout.write(text)


def _fracs(xs):
    return [rational_str(x) for x in xs]


# commands -----------------------------------------------------------------------

def cmd_hodge(args, cfg: RunConfig) -> int:
    hp = _hyp_from_args(args)
    nonres = is_nonresonant(hp)
    conj = conjugate(hp)
    out = {
        "alpha": _fracs(hp.alpha),
        "beta": _fracs(hp.beta),
        "n": hp.n,
        "m": hp.m,
        "nonresonant": nonres,
        "theta": _fracs(theta(hp)),
        "hodge_numbers": {rational_str(k): v for k, v in hodge_numbers(hp).items()},
        "polygon": irregular_hodge_polygon(hp).to_json(),
        "conjugate": {"alpha": _fracs(conj.alpha), "beta": _fracs(conj.beta)},
        "duality": duality_pairing(hp) if nonres else None,
    }
    if args.p is not None:
        out["frobenius_hodge"] = {
            "p": args.p,
            "s": args.s,
            "experimental": args.s > 1,
            "orbit_theta": [_fracs(row) for row in orbit_theta_multisets(hp, args.p, args.s)],
            "polygon": as_hodge_polygon(hp, args.p, args.s).to_json(),
        }
    _emit(args, out)
    if args.svg:
        Path(args.svg).write_text(polygon_svg(None, irregular_hodge_polygon(hp), f"theta for {hp}"))
    return EXIT_OK


def cmd_polytope(args, cfg: RunConfig) -> int:
    hp = None
    if args.params or args.alpha is not None:
        hp = _hyp_from_args(args)
        n, m, d = hp.n, hp.m, hp.common_denominator()
    elif args.n is not None:
        n, m, d = args.n, args.m, args.d
    else:
        raise UsageError("give --n/--m/--d or --alpha/--beta")
    fs = build_facets(n, m, d)
    picked = {k for k in ("facets", "volume", "basis") if getattr(args, k)}
    show = (lambda key: key in picked) if picked else (lambda key: True)
    out = {"n": n, "m": m, "d": d}
    if show("facets"):
        out.update(fs.to_json())
        out["vertices"] = {k: list(v) for k, v in fs.vertices().items()}
    if show("volume"):
        out["volume"] = rational_str(volume(n, m, d))
        if args.lattice_scale is not None:
            est = lattice_count_volume_check(fs, max(args.lattice_scale, fs.dim))
            out["lattice_volume"] = rational_str(est)
    if args.wan is not None:
        prime = args.wan or args.prime
        if not prime:
            raise UsageError("--wan needs a prime (--wan P or -p P)")
        groups = wan_facet_groups(n, m, prime)
        out["wan"] = {
            "p": prime,
            "facets": [{"label": lab, "invariant_factors": list(f)} for lab, f in groups],
            "certified": all(f == (prime - 1,) * fs.dim for _, f in groups),
        }
    if hp is not None:
        out["alpha"], out["beta"] = _fracs(hp.alpha), _fracs(hp.beta)
        if show("basis") and hp.alpha[0] == 0 and is_nonresonant(hp):
            out["basis"] = [b.to_json() for b in basis_exponents(hp, d)]
    elif "basis" in picked:
        raise UsageError("--basis needs --alpha/--beta")
    _emit(args, out)
    return EXIT_OK


def cmd_sum(args, cfg: RunConfig) -> int:
    cp = _char_from_args(args)
    prec = args.precision or cp.s * (cp.p - 1) * (args.ext * (cp.n + cp.m - 1) + 3)
    ring = default_ring(cp.p, cp.s, prec)
    value = hyp_sum(cp, args.point, args.ext, ring)
    out = {"params": cp.to_json(), "point": args.point, "precision": prec}
    out.update(value.to_json(args.debug_padic))
    if args.brute_force:
        out["brute_force_agrees"] = hyp_sum_bruteforce(cp, args.point, args.ext, ring) == value.padic
    _emit(args, out)
    return EXIT_OK


def _compare_job(job):
    cp, a, precision, allow_small_p, debug = job
    return compare(cp, a, precision, allow_small_p).to_json(debug)


def _map(fn, jobs, workers):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def _svg_path(base: str, point: int, many: bool) -> Path:
    path = Path(base)
    return path.with_name(f"{path.stem}-a{point}{path.suffix or '.svg'}") if many else path


def cmd_compare(args, cfg: RunConfig) -> int:
    cp = _char_from_args(args)
    points = list(range(1, cp.q)) if args.all_points else [args.point]
    jobs = [(cp, a, args.precision, args.allow_small_p, args.debug_padic) for a in points]
    reports = _map(_compare_job, jobs, args.jobs)
    _emit(args, reports if args.all_points else reports[0])
    if args.svg:
        from .hodge import Polygon

        for rep in reports:
            newton = rep["newton_polygon"]
            svg = polygon_svg(
                None if newton is None else Polygon(tuple(parse_rational_list(",".join(newton["slopes"])))),
                Polygon(tuple(parse_rational_list(",".join(rep["hodge_polygon"]["slopes"])))),
                f"p={cp.p} s={cp.s} a={rep['point']} {rep['verdict']}",
            )
            _svg_path(args.svg, rep["point"], args.all_points).write_text(svg)
    if any(r["verdict"] == "precision-fail" for r in reports):
        return EXIT_PRECISION
    if args.expect_ordinary and any(r["verdict"] != "ordinary" for r in reports):
        return EXIT_MISMATCH
    return EXIT_OK


CSV_COLUMNS = ["p", "s", "n", "m", "aexps", "bexps", "point", "verdict", "np_slopes", "hp_slopes"]


def _sweep_job(job):
    cp, allow_small_p = job
    rows = []
    for a in range(1, cp.q):
        rep = compare(cp, a, allow_small_p=allow_small_p, keep_traces=False)
        rows.append({
            "p": cp.p, "s": cp.s, "n": cp.n, "m": cp.m,
            "aexps": " ".join(map(str, cp.a_exps)),
            "bexps": " ".join(map(str, cp.b_exps)),
            "point": a,
            "verdict": rep.verdict,
            "np_slopes": "" if rep.newton_polygon is None else " ".join(map(str, rep.newton_polygon.slopes)),
            "hp_slopes": " ".join(map(str, rep.hodge_polygon.slopes)),
        })
    return rows


def cmd_sweep(args, cfg: RunConfig) -> int:
    tuples = enumerate_tuples(args.p, args.s, args.nmax, args.mmax)
    if args.p <= args.nmax and not args.allow_small_p:
        tuples = [cp for cp in tuples if cp.n < args.p]
    results = _map(_sweep_job, [(cp, args.allow_small_p) for cp in tuples], args.jobs)
    rows = [row for chunk in results for row in chunk]
    handle = open(args.csv_out, "w", newline="") if args.csv_out else sys.stdout
    try:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.csv_out:
            handle.close()
    if any(r["verdict"] == "precision-fail" for r in rows):
        return EXIT_PRECISION
    if args.expect_ordinary and any(r["verdict"] != "ordinary" for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_selftest(args, cfg: RunConfig) -> int:
    results = run_all(args.seed, set(args.only) or None, echo=print)
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


COMMANDS = {
    "hodge": cmd_hodge,
    "polytope": cmd_polytope,
    "sum": cmd_sum,
    "compare": cmd_compare,
    "sweep": cmd_sweep,
    "selftest": cmd_selftest,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(
        command=args.command,
        params_source=getattr(args, "params", None) or "flags",
        precision=getattr(args, "precision", None),
        budget=getattr(args, "budget", None),
        outputs={k: v for k in ("json_out", "svg", "csv_out") if (v := getattr(args, k, None))},
        jobs=getattr(args, "jobs", 1),
        seed=args.seed,
    )
    saved_budget = charsum.KERNEL_BUDGET
    if cfg.budget is not None:
        charsum.KERNEL_BUDGET = cfg.budget
    try:
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hypnp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionError, ResourceError) as exc:
        print(f"hypnp: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (DomainError, HypnpError) as exc:
        print(f"hypnp: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    finally:
        charsum.KERNEL_BUDGET = saved_budget


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
