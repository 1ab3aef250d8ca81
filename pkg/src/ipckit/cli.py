"""Command-line interface.

Exit codes: 0 pass/true, 1 fail/counterexample, 2 usage error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as pio
from .axioms import validates_jankov, validates_subframe
from .budget import WorkMeter
from .catalog import catalog_get, catalog_keys
from .errors import BudgetExceeded, IpckitError
from .formulas import godel_translate, parse, pretty
from .morphisms import find_pmorphism
from .poset import enumerate_rooted
from .report import render_report
from .scenarios import run_scenario, scenario_names
from .semantics import is_valid, is_valid_modal

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="ipckit",
        description="finite intuitionistic/modal frame workbench",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="intuitionistic validity on a poset")
    c.add_argument("poset")
    c.add_argument("formula")
    c.add_argument("--budget", type=int, default=None)

    c = sub.add_parser("modal-check", help="modal validity on a poset frame")
    c.add_argument("poset")
    c.add_argument("formula")
    c.add_argument("--budget", type=int, default=None)

    c = sub.add_parser("jankov", help="does host validate the splitting formula of target")
    c.add_argument("host")
    c.add_argument("target")
    c.add_argument("--budget", type=int, default=None)

    c = sub.add_parser("subframe", help="does host validate the subframe formula of target")
    c.add_argument("host")
    c.add_argument("target")
    c.add_argument("--budget", type=int, default=None)

    c = sub.add_parser("pmorphism", help="search for a p-morphism src -> dst")
    c.add_argument("src")
    c.add_argument("dst")
    c.add_argument("--surjective", action="store_true")
    c.add_argument("--budget", type=int, default=None)

    c = sub.add_parser("enumerate", help="rooted posets up to isomorphism")
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--max-width", type=int, default=None)
    c.add_argument("--cap", type=int, default=None,
                   help="override the default enumeration size cap")

    c = sub.add_parser("catalog", help="print a named poset as JSON")
    c.add_argument("key")
    c.add_argument("--list", action="store_true", help="list known keys")

    c = sub.add_parser("translate", help="modal companion of an intuitionistic formula")
    c.add_argument("formula")

    c = sub.add_parser("verify", help="run a named verification scenario")
    c.add_argument("scenario", choices=scenario_names())
    c.add_argument("--size", type=int, default=None)
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.add_argument("--max-counterexamples", type=int, default=10)
    c.add_argument(
        "--param", action="append", default=[],
        metavar="KEY=VALUE", help="extra scenario parameter (int value)")

    c = sub.add_parser("export", help="re-export a poset file as json or dot")
    c.add_argument("poset")
    c.add_argument("--format", choices=("json", "dot"), default="dot")
    c.add_argument("--out", default="-")
    return ap


def _load(path):
    return pio.import_poset(path)


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _dispatch(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (IpckitError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "check":
        ok = is_valid(_load(args.poset), parse(args.formula),
                      meter=WorkMeter(limit=args.budget))
        print("valid" if ok else "refuted")
        return EXIT_PASS if ok else EXIT_FAIL

    if cmd == "modal-check":
        ok = is_valid_modal(_load(args.poset), parse(args.formula),
                            meter=WorkMeter(limit=args.budget))
        print("valid" if ok else "refuted")
        return EXIT_PASS if ok else EXIT_FAIL

    if cmd == "jankov":
        ok = validates_jankov(_load(args.host), _load(args.target),
                              meter=WorkMeter(limit=args.budget))
        print("validates" if ok else "refutes")
        return EXIT_PASS if ok else EXIT_FAIL

    if cmd == "subframe":
        ok = validates_subframe(_load(args.host), _load(args.target),
                                meter=WorkMeter(limit=args.budget))
        print("validates" if ok else "refutes")
        return EXIT_PASS if ok else EXIT_FAIL

    if cmd == "pmorphism":
        meter = WorkMeter(limit=args.budget)
        pm = find_pmorphism(
            _load(args.src), _load(args.dst),
            surjective=args.surjective, meter=meter)
        if pm is None:
            print("none")
            return EXIT_FAIL
        print(json.dumps(pm.as_dict(), sort_keys=True))
        return EXIT_PASS

    if cmd == "enumerate":
        for p in enumerate_rooted(args.size, max_width=args.max_width,
                                  cap=args.cap):
            print(pio.poset_to_json(p))
        return EXIT_PASS

    if cmd == "catalog":
        if args.list:
            for key in catalog_keys():
                print(key)
            return EXIT_PASS
        p = catalog_get(args.key)
        print(json.dumps(pio.poset_to_obj(p), sort_keys=True, indent=2))
        return EXIT_PASS

    if cmd == "translate":
        print(pretty(godel_translate(parse(args.formula))))
        return EXIT_PASS

    if cmd == "export":
        p = _load(args.poset)
        if args.out == "-":
            text = (pio.poset_to_dot(p) if args.format == "dot"
                    else json.dumps(pio.poset_to_obj(p), sort_keys=True, indent=2) + "\n")
            sys.stdout.write(text)
        else:
            pio.export_poset(p, args.format, args.out)
        return EXIT_PASS

    # verify
    params = {}
    if args.size is not None:
        params["size"] = args.size
    for kv in args.param:
        key, _, value = kv.partition("=")
        if not value:
            print(f"bad --param {kv!r}", file=sys.stderr)
            return EXIT_USAGE
        params[key] = int(value)
    report = run_scenario(
        args.scenario, params=params, budget=args.budget, jobs=args.jobs,
        max_counterexamples=args.max_counterexamples)
    sys.stdout.write(render_report(report, args.format))
    if report.status == "pass":
        return EXIT_PASS
    if report.status == "budget":
        return EXIT_BUDGET
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
