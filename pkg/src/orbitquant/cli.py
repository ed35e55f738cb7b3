"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 missing catalog data.
"""
import argparse
import json
import sys
from dataclasses import dataclass

from . import ktypes, suites
from .catalog import load_catalog
from .errors import OrbitQuantError
from .ktypes import closed_form, decompose
from .orbits import lambda_of, spherical_family, validate
from .vchar import VERSION, character
from .vogan import gamma, verify_achar_sommers

TAGS = ("plus", "minus", "Re", "Rs", "mcgovern")


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    fmt: str = "json"
    cache_dir: str = None
    threads: int = 1
    bound: int = 6

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be >= 0")
        if self.threads < 1:
            raise ValueError("thread count must be >= 1")


def _partition_arg(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from None


def _emit(cfg, doc, rows):
    if cfg.fmt == "json":
        print(json.dumps({"version": VERSION, **doc}, indent=2))
    else:
        for row in rows:
            print(row)


def _fmt_w(strings):
    return "(" + ",".join(strings) + ")"


def cmd_dual(cfg, catalog):
    p = validate(cfg.args.partition, "C")
    d = lambda_of(p)
    doc = {"partition": list(p.parts), "dual": list(d.dual.parts),
           "lambda_O": d.lambda_O.strings(), "h_dual": d.h_dual.strings()}
    _emit(cfg, doc, [f"dual {d.dual}", f"lambda_O {d.lambda_O}", f"h_dual {d.h_dual}"])
    return 0


def cmd_character(cfg, catalog):
    p = validate(cfg.args.partition, "C")
    chi = character(p, cfg.args.tag, catalog)
    doc = {"partition": list(p.parts), "tag": cfg.args.tag, "rank": chi.rank, "terms": chi.to_json()}
    rows = [f"{str(c):>8}  Ind{w}" for w, c in chi.sorted_terms()]
    _emit(cfg, doc, rows)
    return 0


def cmd_ktypes(cfg, catalog):
    p = validate(cfg.args.partition, "C")
    chi = character(p, cfg.args.tag, catalog)
    dec = decompose(chi, cfg.bound, threads=cfg.threads)
    compare = spherical_family(p) is not None and cfg.args.tag in ("plus", "mcgovern", "Re", "minus")

    def expected(mu):
        plain = closed_form(p, mu, "plain")
        extra = closed_form(p, mu, "cover-extra")
        return {"plus": plain, "mcgovern": plain, "Re": plain + extra, "minus": extra}[cfg.args.tag]

    entries, rows, mismatch = [], [], 0
    for mu, m in sorted(dec.mults.items(), reverse=True):
        exp = expected(mu) if compare else None
        if m == 0 and not exp:
            continue
        bad = compare and m != exp
        mismatch += bad
        entries.append({"weight": [str(x) for x in mu], "mult": m, "closed_form": exp, "match": not bad})
        rows.append(f"V({','.join(map(str, mu))})  {m}" + (f"  closed-form {exp}{'  MISMATCH' if bad else ''}" if compare else ""))
    doc = {"partition": list(p.parts), "tag": cfg.args.tag, "bound": cfg.bound, "ktypes": entries,
           "mismatches": mismatch}
    _emit(cfg, doc, rows)
    return 1 if mismatch else 0


def cmd_gamma(cfg, catalog):
    p = validate(cfg.args.partition, "C")
    if cfg.args.spec is not None:
        if cfg.args.tag != "cover":
            raise OrbitQuantError("--spec only applies to --tag cover")
        cert = verify_achar_sommers(p, cfg.args.spec, catalog)
    else:
        cert = gamma(p, cfg.args.tag, catalog)
    d = cert.to_json()
    _emit(cfg, {"certificate": d},
          [f"{cert.verdict}  gamma={d['gamma'] if cert.gamma is None else cert.gamma}  maxima={len(cert.maxima)}"])
    return 1 if cert.verdict == "fail" else 0


def _pairs(args):
    if args.p is None:
        return None
    if args.q is not None:
        q = args.q
    elif args.r is not None:
        q = 2 * args.r
    else:
        raise OrbitQuantError("--p needs --q or --r")
    return [(args.p, q)]


def cmd_verify(cfg, catalog):
    a = cfg.args
    name = a.suite
    pairs = _pairs(a)
    if name == "theoremB":
        certs = suites.theorem_b(pairs, cfg.bound, cfg.threads, catalog)
    elif name in ("theoremC", "theoremD", "prop33", "prop42"):
        certs = suites.SUITES[name](pairs, catalog=catalog)
    elif name == "lemma44":
        certs = suites.lemma_44((a.p,) if a.p is not None else (1, 2), catalog=catalog)
    elif name == "example52":
        certs = suites.example_52(catalog)
    else:
        certs = suites.denominator(a.max_rank)
    ok = all(c["passed"] for c in certs)
    rows = [f"{'PASS' if c['passed'] else 'FAIL'}  {name}  {c.get('orbit', c.get('n', (c.get('p'), c.get('q'))))}"
            for c in certs]
    _emit(cfg, {"suite": name, "passed": ok, "certificates": certs}, rows)
    return 0 if ok else 1


COMMANDS = {"dual": cmd_dual, "character": cmd_character, "ktypes": cmd_ktypes,
            "gamma": cmd_gamma, "verify": cmd_verify}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--catalog", default=None, help="catalog file merged over the shipped one")

    parser = argparse.ArgumentParser(prog="orbit-quant", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dual", parents=[common], help="dual orbit and lambda_O")
    s.add_argument("--partition", type=_partition_arg, required=True)

    s = sub.add_parser("character", parents=[common], help="virtual character of an orbit")
    s.add_argument("--partition", type=_partition_arg, required=True)
    s.add_argument("--tag", choices=TAGS, default="plus")

    s = sub.add_parser("ktypes", parents=[common], help="K-type multiplicities up to a bound")
    s.add_argument("--partition", type=_partition_arg, required=True)
    s.add_argument("--tag", choices=TAGS, default="plus")
    s.add_argument("--bound", type=int, default=6)

    s = sub.add_parser("gamma", parents=[common], help="maximal term certificate")
    s.add_argument("--partition", type=_partition_arg, required=True)
    s.add_argument("--tag", choices=("plus", "minus", "cover"), default="plus")
    s.add_argument("--spec", help="sigma_e source subgroup, e.g. D3xC2 (for orbits outside the catalog)")

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=tuple(suites.SUITES), required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--r", type=int, help="shorthand for q = 2r")
    s.add_argument("--bound", type=int, default=6)
    s.add_argument("--max-rank", type=int, default=3, help="largest n for the denominator suite")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = RunConfig(args.command, args, args.format, args.cache_dir, args.threads,
                        getattr(args, "bound", 6))
        if cfg.cache_dir:
            ktypes.set_cache_dir(cfg.cache_dir)
        catalog = load_catalog(args.catalog)
        return COMMANDS[args.command](cfg, catalog)
    except OrbitQuantError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
