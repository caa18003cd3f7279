from .core import Ruler, canonicalize, diff_profile, verify_mgr
from .certify import INCONCLUSIVE, NONEXISTENT, Certificate, certify_mgr, family_scan, validate_certificate
from .designs import (
    OocCode, certify_optimal_ooc, family_scan_ooc, rdf_check, steiner_check,
    verify_cyclic_steiner, verify_ooc,
)
from .file import (
    CacheRecord, cache_get, cache_key, cache_put, emit_json,
    export_into_file, load_record, table_csv,
)
from .internal._table1 import disagreements, table_pairs
from .progress import spectrum_progress, table_progress
from .search import (
    EXHAUSTED, FOUND, MODES, SearchOutcome, Spectrum, min_length_search, search, search_packing, spectrum,
)
from . import __version__, constructions, numtheory
from dataclasses import dataclass, field
from colorama import Fore, Style, init
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich import box

import argparse
import logging
import os
import sys

import psutil

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_BUDGET = 4

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    '''
    One CLI invocation.

    Attributes:
        command (str): subcommand path such as "search" or "certify mgr".
        params (dict): subcommand arguments.
        fmt (str): text, json or csv.
        threads (int): worker processes for searches.
        budget (int | None): node cap; None is unlimited.
        cache (str | None): cache file path; None disables the cache.
        verbosity (int): 0 warnings, 1 info, 2 debug.
        trace (bool): include certificate traces.
        out (bool): also write the document to a file.
        path (str | None): export path; None picks a timestamped name.
    '''
    command: str
    params: dict = field(default_factory=dict)
    fmt: str = "text"
    threads: int = 1
    budget: int | None = None
    cache: str | None = None
    verbosity: int = 0
    trace: bool = False
    out: bool = False
    path: str | None = None

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.budget is not None and self.budget < 0:
            raise ValueError(f"budget must be nonnegative, got {self.budget}")
        if self.threads < 1:
            raise ValueError(f"thread count must be positive, got {self.threads}")


def resolve_threads(value):
    '''None: GOLOMBZ_THREADS or 1; 0: every physical core.'''
    if value is None:
        value = int(os.environ.get("GOLOMBZ_THREADS", "1"))
    if value == 0:
        value = psutil.cpu_count(logical=False) or 1
    return value


def parse_orders(text):
    '''"3..11" or "7" to a list of orders.'''
    lo, sep, hi = text.partition("..")
    try:
        orders = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise ValueError(f"expected an order or a range like 3..11, got {text!r}") from None
    if not orders or orders[0] < 3:
        raise ValueError(f"orders must start at 3 or above, got {text!r}")
    return orders


def setup_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logger = logging.getLogger("golombz")
    logger.handlers[:] = [RichHandler(console=Console(stderr=True), show_path=False)]
    logger.setLevel(level)


def _say(color, text):
    print(f"{color}{text}{Style.RESET_ALL}")


def _verdict(cert):
    if cert.verdict == NONEXISTENT:
        _say(Fore.GREEN, f"nonexistent ({cert.rule})")
    elif cert.verdict == INCONCLUSIVE:
        _say(Fore.YELLOW, f"inconclusive ({cert.rule})")
    else:
        _say(Fore.YELLOW, f"{cert.verdict} ({cert.rule})")


def format_table_data(data, title):
    '''Property/Value table for a flat or one-level nested dict.'''
    table = Table(title=title, box=box.ROUNDED, title_style="bold cyan")
    table.add_column("Property", style="bold blue", no_wrap=True)
    table.add_column("Value", style="green")
    for key, value in data.items():
        if isinstance(value, dict):
            for sub_key, sub_value in value.items():
                table.add_row(f"{key} - {sub_key}", str(sub_value))
        else:
            table.add_row(str(key), str(value))
    return table


def _ruler_rows_table(rows, title):
    table = Table(title=title, box=box.ROUNDED, title_style="bold cyan")
    table.add_column("v", style="bold blue", justify="right")
    table.add_column("k", style="bold blue", justify="right")
    table.add_column("Status", style="yellow")
    table.add_column("Residues", style="green")
    table.add_column("L", style="green", justify="right")
    for row in rows:
        table.add_row(str(row["v"]), str(row["k"]), row["status"],
                      " ".join(map(str, row.get("residues") or ())),
                      "" if row.get("length") is None else str(row["length"]))
    return table


class _Output:
    '''Collects the document of a run and renders it in the chosen format.'''

    def __init__(self, cfg):
        self.cfg = cfg
        self.console = Console()

    def document(self, obj, title, rows=None):
        if self.cfg.out:
            csv = self.cfg.fmt == "csv" and rows is not None
            export_into_file(rows if csv else obj, self.cfg.path, csv=csv)
        if self.cfg.fmt == "json":
            print(emit_json(obj))
        elif self.cfg.fmt == "csv":
            if rows is None:
                raise ValueError(f"csv output is not available for {self.cfg.command}")
            sys.stdout.write(table_csv(rows))
        else:
            data = obj.to_dict() if hasattr(obj, "to_dict") else obj
            if rows is not None:
                self.console.print(_ruler_rows_table(rows, title))
            else:
                self.console.print(format_table_data(data, title))


def _outcome_rows(out):
    if out.mode == "all":
        return [{"v": r.v, "k": r.k, "status": "ruler", "residues": r.residues, "length": r.length}
                for r in out.rulers]
    if out.witness is not None:
        w = out.witness
        return [{"v": w.v, "k": w.k, "status": "ruler", "residues": w.residues,
                 "length": out.min_length_found}]
    return [{"v": out.v, "k": out.k, "status": "nonexistent" if out.exhausted else out.status,
             "residues": None, "length": None}]


def _status_code(status):
    return {FOUND: EXIT_OK, EXHAUSTED: EXIT_NEGATIVE}.get(status, EXIT_BUDGET)


def _cert_code(cert):
    return EXIT_OK if cert.nonexistent else EXIT_INCONCLUSIVE


def _cert_doc(cfg, cert):
    return cert if cfg.trace else {k: v for k, v in cert.to_dict().items() if k != "trace"}


def _cached(cfg, key, compute, load):
    '''Fetch a result from the cache or compute and store it.'''
    if cfg.cache:
        rec = cache_get(cfg.cache, key, __version__)
        if rec is not None:
            return load(rec.payload)
    result = compute()
    if cfg.cache:
        cache_put(cfg.cache, CacheRecord.make(key, result.to_dict(), __version__))
    return result


def cmd_search(cfg, out):
    p = cfg.params
    key = cache_key("search", p["v"], p["k"], p["mode"], cfg.budget)
    result = _cached(cfg, key,
                     lambda: search(p["v"], p["k"], p["mode"], cfg.budget, cfg.threads),
                     SearchOutcome.from_dict)
    out.document(result, f"search ({p['v']},{p['k']}) {p['mode']}", _outcome_rows(result)
                 if cfg.fmt != "json" else None)
    if cfg.fmt == "text":
        color = Fore.GREEN if result.found else Fore.RED if result.exhausted else Fore.YELLOW
        _say(color, f"{result.status} after {result.nodes_visited} nodes")
    return _status_code(result.status)


def _spectrum(cfg, k, on_modulus=None):
    key = cache_key("spectrum", k, cfg.budget)
    return _cached(cfg, key,
                   lambda: spectrum(k, cfg.budget, cfg.threads, on_modulus),
                   Spectrum.from_dict)


def spectrum_rows(spec):
    '''Table rows of a spectrum: one per scanned modulus plus the doubling row.'''
    rows = []
    for e in spec.trail:
        if e.status == FOUND:
            rows.append({"v": e.v, "k": spec.k, "status": "ruler",
                         "residues": e.witness.residues, "length": e.length})
        else:
            rows.append({"v": e.v, "k": spec.k,
                         "status": "nonexistent" if e.status == EXHAUSTED else e.status,
                         "residues": None, "length": None})
    if spec.doubling is not None:
        L = spec.doubling.length
        at = next((e.v for e in spec.trail if e.length == L), None)
        rows.append({"v": at, "k": spec.k, "status": "lemma-double",
                     "residues": spec.doubling.residues, "length": L})
    return rows


def cmd_spectrum(cfg, out):
    k = cfg.params["k"]
    with spectrum_progress(k, enabled=cfg.fmt == "text") as on_modulus:
        spec = _spectrum(cfg, k, on_modulus)
    out.document(spec, f"MGR({k})", spectrum_rows(spec) if cfg.fmt != "json" else None)
    if cfg.fmt == "text":
        if spec.complete:
            sporadic = ", ".join(map(str, spec.sporadic)) or "none"
            _say(Fore.GREEN, f"MGR({k}) = {{{sporadic}}} + {{v >= {spec.tail_start}}}")
        else:
            _say(Fore.YELLOW, f"MGR({k}) incomplete: node budget exhausted")
    return EXIT_OK if spec.complete else EXIT_BUDGET


def cmd_min_length(cfg, out):
    p = cfg.params
    result = min_length_search(p["v"], p["k"], budget=cfg.budget)
    out.document(result, f"min length ({p['v']},{p['k']})",
                 _outcome_rows(result) if cfg.fmt != "json" else None)
    return _status_code(result.status)


def cmd_construct(cfg, out):
    p = cfg.params
    method = p["method"]

    def need(name):
        if p.get(name) is None:
            raise ValueError(f"--{name} is required for method {method}")
        return p[name]

    if method == "singer":
        r = constructions.singer(need("q"))
    elif method == "bose":
        r = constructions.bose(need("q"))
    elif method == "ruzsa":
        r = constructions.ruzsa(need("p"))
    elif method == "exist-small":
        r = constructions.exist_small(need("k"))
    else:
        r = constructions.exist_any(need("k"), need("v"))
    if p.get("delete"):
        r = constructions.delete_points(r, p["delete"])
    if p.get("canonical"):
        r = canonicalize(r)
    report = verify_mgr(r)
    row = {"v": r.v, "k": r.k, "status": "ruler", "residues": r.residues, "length": r.length}
    out.document(r, f"{method} construction", [row] if cfg.fmt != "json" else None)
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_verify(cfg, out):
    r = load_record(cfg.params["file"], Ruler)
    report = verify_mgr(r)
    doc = {"ruler": r.to_dict(), **report.to_dict()}
    if report.valid:
        doc["profile"] = diff_profile(r).to_dict()
    out.document(doc, f"verify {r}")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_certify_mgr(cfg, out):
    cert = certify_mgr(cfg.params["v"], cfg.params["k"])
    out.document(_cert_doc(cfg, cert), f"certify ({cfg.params['v']},{cfg.params['k']})")
    if cfg.fmt == "text":
        _verdict(cert)
    return _cert_code(cert)


def _family_doc(kind, members):
    return {"kind": kind, "count": len(members), "members": [list(m) for m in members]}


def cmd_certify_family(cfg, out):
    p = cfg.params
    param = p["t"] if p["kind"] == "main-nonexist" else p["n"]
    if param is None:
        raise ValueError("--t is required for main-nonexist, --n for new35-cor")
    members = family_scan(p["kind"], param, p.get("ell"))
    out.document(_family_doc(p["kind"], members), f"family {p['kind']}")
    return EXIT_OK if members else EXIT_INCONCLUSIVE


def cmd_certify_validate(cfg, out):
    cert = load_record(cfg.params["file"], Certificate)
    ok = validate_certificate(cert)
    out.document({"rule": cert.rule, "params": cert.params, "valid": ok}, "certificate check")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_ooc_verify(cfg, out):
    code = load_record(cfg.params["file"], OocCode)
    report = verify_ooc(code)
    doc = {"code": code.to_dict(), **report.to_dict()}
    if cfg.params.get("steiner"):
        doc["steiner"] = verify_cyclic_steiner(code).to_dict()
        ok = report.valid and doc["steiner"]["valid"]
    else:
        ok = report.valid
    out.document(doc, f"OOC ({code.v},{code.k}) of size {code.n}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_ooc_certify(cfg, out):
    cert = certify_optimal_ooc(cfg.params["v"], cfg.params["k"])
    out.document(_cert_doc(cfg, cert), f"optimal OOC ({cfg.params['v']},{cfg.params['k']})")
    if cfg.fmt == "text":
        _verdict(cert)
    return _cert_code(cert)


def cmd_ooc_family(cfg, out):
    p = dict(cfg.params)
    kind = p.pop("kind")
    members = family_scan_ooc(kind, **{k: v for k, v in p.items() if v is not None})
    out.document(_family_doc(kind, members), f"OOC family {kind}")
    return EXIT_OK if members else EXIT_INCONCLUSIVE


def cmd_ooc_search(cfg, out):
    p = cfg.params
    result = search_packing(p["v"], p["k"], p["n"], cfg.budget)
    out.document(result, f"packing ({p['v']},{p['k']}) of size {p['n']}")
    return _status_code(result.status)


def cmd_steiner_check(cfg, out):
    cert = steiner_check(cfg.params["k"], cfg.params["n"])
    out.document(_cert_doc(cfg, cert), f"cyclic S(2,{cfg.params['k']},v), n={cfg.params['n']}")
    if cfg.fmt == "text":
        _verdict(cert)
    return _cert_code(cert)


def cmd_rdf_check(cfg, out):
    p = cfg.params
    cert = rdf_check(p["v"], p["w"], p["k"], p["lambda"])
    out.document(_cert_doc(cfg, cert), f"RDF ({p['v']},{p['w']},{p['k']},{p['lambda']})")
    if cfg.fmt == "text":
        _verdict(cert)
    return _cert_code(cert)


def _witness(w):
    return w.to_dict() if w is not None else None


NT_PREDICATES = {
    "factorize": lambda a: {"n": a[0], "factors": numtheory.factorize(a[0]).as_dict()},
    "square": lambda a: {"n": a[0], "result": numtheory.is_perfect_square(a[0])},
    "two-squares": lambda a: {"n": a[0], "result": numtheory.is_sum_two_squares(a[0]),
                              "witness": _witness(numtheory.two_squares_witness(a[0]))},
    "three-squares": lambda a: {"n": a[0], "result": numtheory.is_sum_three_squares(a[0]),
                                "witness": _witness(numtheory.three_squares_witness(a[0]))},
    "prime": lambda a: {"n": a[0], "result": numtheory.is_prime(a[0])},
    "next-prime": lambda a: {"n": a[0], "value": numtheory.next_prime(a[0])},
    "non-two-run": lambda a: {"t": a[0], "value": numtheory.consecutive_non_two_squares(
        a[0], "scan" if a[0] <= 4 else "crt")},
    "non-three-pair": lambda a: {"n": a[0], "result": numtheory.consecutive_non_three_squares(a[0])},
    "ternary": lambda a: {"a": a[0], "b": a[1], "solution": numtheory.ternary_form_solvable(a[0], a[1])},
    "bounded-squares": lambda a: {"target": a[0], "n": a[1], "bound": a[2],
                                  "witness": _witness(numtheory.sum_n_squares_bounded(a[0], a[1], a[2]))},
}

_NT_ARITY = {"ternary": 2, "bounded-squares": 3}


def cmd_nt(cfg, out):
    name, args = cfg.params["predicate"], cfg.params["args"]
    arity = _NT_ARITY.get(name, 1)
    if len(args) != arity:
        raise ValueError(f"nt {name} takes {arity} integer argument(s), got {len(args)}")
    doc = NT_PREDICATES[name](args)
    out.document(doc, f"nt {name}")
    if "result" in doc:
        return EXIT_OK if doc["result"] else EXIT_NEGATIVE
    if "solution" in doc or "witness" in doc:
        return EXIT_OK if doc.get("solution", doc.get("witness")) is not None else EXIT_NEGATIVE
    return EXIT_OK


def cmd_table_reproduce(cfg, out):
    orders = parse_orders(cfg.params["k"])
    rows, complete, mismatched = [], True, 0
    with table_progress(orders, enabled=cfg.fmt == "text") as advance:
        for k in orders:
            spec = _spectrum(cfg, k)
            complete &= spec.complete
            for msg in disagreements(spec):
                log.warning("table reproduce: %s", msg)
                mismatched += 1
            rows.extend(spectrum_rows(spec))
            advance(k, "complete" if spec.complete else "incomplete")
    out.document(rows, "MGR table", rows if cfg.fmt != "json" else None)
    if cfg.fmt == "text":
        rss = psutil.Process().memory_info().rss / 2**20
        _say(Fore.GREEN if complete else Fore.YELLOW,
             f"{len(rows)} rows for k = {orders[0]}..{orders[-1]}, resident memory {rss:.1f} MB")
    if mismatched:
        return EXIT_NEGATIVE
    return EXIT_OK if complete else EXIT_BUDGET


def cmd_table_verify(cfg, out):
    rows, failed = [], 0
    for v, k, residues in table_pairs():
        ok = verify_mgr(Ruler(v, residues)).valid
        failed += not ok
        rows.append({"v": v, "k": k, "status": "ruler" if ok else "invalid",
                     "residues": residues, "length": residues[-1] - residues[0]})
    out.document(rows, "published rulers", rows if cfg.fmt != "json" else None)
    if cfg.fmt == "text":
        _say(Fore.GREEN if not failed else Fore.RED, f"{len(rows) - failed}/{len(rows)} rulers verify")
    return EXIT_OK if not failed else EXIT_NEGATIVE


COMMANDS = {
    "search": cmd_search,
    "spectrum": cmd_spectrum,
    "min-length": cmd_min_length,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "certify mgr": cmd_certify_mgr,
    "certify family": cmd_certify_family,
    "certify validate": cmd_certify_validate,
    "ooc verify": cmd_ooc_verify,
    "ooc certify": cmd_ooc_certify,
    "ooc family": cmd_ooc_family,
    "ooc search": cmd_ooc_search,
    "steiner check": cmd_steiner_check,
    "rdf check": cmd_rdf_check,
    "nt": cmd_nt,
    "table reproduce": cmd_table_reproduce,
    "table verify": cmd_table_verify,
}


def run(cfg: RunConfig) -> int:
    '''
    Execute one configured command and print its document.

    Returns:
        int: 0 affirmative, 1 negative, 2 usage error, 3 inconclusive,
        4 node budget exceeded.
    '''
    try:
        return COMMANDS[cfg.command](cfg, _Output(cfg))
    except (ValueError, OSError) as e:
        _say(Fore.RED, f"error: {e}")
        return EXIT_USAGE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format (default: text)")
    common.add_argument("--threads", type=int, default=None,
                        help="Worker processes; 0 uses every physical core (default: $GOLOMBZ_THREADS or 1)")
    common.add_argument("--budget", type=int, default=None, help="Node cap per search (default: unlimited)")
    common.add_argument("--cache", type=str, default=os.environ.get("GOLOMBZ_CACHE"),
                        help="Result cache file (default: $GOLOMBZ_CACHE, unset disables)")
    common.add_argument("--trace", action="store_true", help="Include certificate traces")
    common.add_argument("--out", action="store_true", help="Also export the result into a file")
    common.add_argument("--path", type=str, help="Custom export path (works with --out)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")

    parser = argparse.ArgumentParser(prog="golombz", description="Modular Golomb rulers, OOCs and their certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", parents=[common], help="Backtracking search for a (v,k)-MGR")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="first")

    p = sub.add_parser("spectrum", parents=[common], help="Every modulus admitting an order-k MGR")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("min-length", parents=[common], help="Shortest (v,k)-MGR")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("construct", parents=[common], help="Algebraic constructions")
    p.add_argument("--method", choices=("singer", "bose", "ruzsa", "exist-small", "exist-any"), required=True)
    for name in ("q", "p", "k", "v"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--delete", type=int, default=0, help="Drop this many of the largest residues")
    p.add_argument("--canonical", action="store_true", help="Print the canonical form")

    p = sub.add_parser("verify", parents=[common], help="Verify a ruler JSON file")
    p.add_argument("--file", required=True)

    certify = sub.add_parser("certify", help="Nonexistence certificates for MGRs").add_subparsers(dest="action", required=True)
    p = certify.add_parser("mgr", parents=[common])
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = certify.add_parser("family", parents=[common])
    p.add_argument("--kind", choices=("main-nonexist", "new35-cor"), required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p = certify.add_parser("validate", parents=[common])
    p.add_argument("--file", required=True)

    ooc = sub.add_parser("ooc", help="Optical orthogonal codes").add_subparsers(dest="action", required=True)
    p = ooc.add_parser("verify", parents=[common])
    p.add_argument("--file", required=True)
    p.add_argument("--steiner", action="store_true", help="Also check the cyclic Steiner leave")
    p = ooc.add_parser("certify", parents=[common])
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = ooc.add_parser("family", parents=[common])
    p.add_argument("--kind", choices=("thm4.3", "R-set", "n3-ell1", "n3-ell2", "k-half", "infinite"), required=True)
    for name in ("k", "v_max", "ell", "a_max", "c_max", "k_min", "k_max"):
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int)
    p.add_argument("--method", choices=("scan", "crt"))
    p = ooc.add_parser("search", parents=[common])
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    steiner = sub.add_parser("steiner", help="Cyclic Steiner 2-designs").add_subparsers(dest="action", required=True)
    p = steiner.add_parser("check", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    rdf = sub.add_parser("rdf", help="Relative difference families").add_subparsers(dest="action", required=True)
    p = rdf.add_parser("check", parents=[common])
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lambda", type=int, default=1)

    p = sub.add_parser("nt", parents=[common], help="Number-theory predicates")
    p.add_argument("predicate", choices=sorted(NT_PREDICATES))
    p.add_argument("args", type=int, nargs="+")

    table = sub.add_parser("table", help="The published ruler table").add_subparsers(dest="action", required=True)
    p = table.add_parser("reproduce", parents=[common])
    p.add_argument("--k", default="3..11", help="Order or range, e.g. 3..8")
    table.add_parser("verify", parents=[common])
    return parser


_GLOBAL = {"command", "action", "format", "threads", "budget", "cache", "trace", "verbose", "out", "path"}


def config_from_args(args) -> RunConfig:
    command = args.command if getattr(args, "action", None) is None else f"{args.command} {args.action}"
    params = {k: v for k, v in vars(args).items() if k not in _GLOBAL}
    return RunConfig(command, params, args.format, resolve_threads(args.threads), args.budget,
                     args.cache, args.verbose, args.trace, args.out, args.path)


def main(argv=None):
    init(autoreset=True)
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        cfg = config_from_args(args)
    except ValueError as e:
        _say(Fore.RED, f"error: {e}")
        sys.exit(EXIT_USAGE)
    sys.exit(run(cfg))
