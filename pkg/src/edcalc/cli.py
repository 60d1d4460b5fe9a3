"""Command-line entry point: parse -> compute -> emit, plus check suites.

Exit codes: 0 success / exact, 2 bounds-only result, 1 error, 64 usage.
"""

import argparse
import random
import sys

from . import abelian, basis_search, catalog, engine, spec_io
from .abelian import CyclicDecomposition, GroupElement
from .catalog import GroupSpec, SimpleFactor
from .errors import EdcalcError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BOUNDS_ONLY = 2
EXIT_USAGE = 64

# pinned regression fixtures: (spec, expected exact, ed, ed_red or None)
PAPER_FIXTURES = [
    ("Spin(15)", True, 23, 22),
    ("Spin(17)", True, 120, 119),
    ("Spin(19)", True, 341, 340),
    ("Spin(18)", True, 103, 102),
    ("Spin(16)", False, None, None),            # bounds only: lower 24
    ("Spin(10) * Spin(3)^2 / [(2,1,0),(2,0,1)]", True, 13, 12),
    ("Spin(10)^2 / [(1,3)]", True, 166, 165),
    ("Spin(7)^3 / [(1,1,0),(0,1,1)]", True, 449, 448),
    ("Sp(8)^3 / [(1,1,0),(0,1,1)]", True, 404, 403),
    ("SL(2)^5 / [(1,1,0,0,0),(0,1,1,0,0),(0,0,1,1,0),(0,0,0,1,1)]", True, 17, 16),
    ("E6^2 / [(1,2)]", True, 573, 572),
    # Corollary 2.4 transfer fixture: H with nu = image of (1,3)
    ("extend:Spin(10)^2 / [(2,2)]|(1,3)", True, 168, 166),
]


def _report_exit(report) -> int:
    return EXIT_OK if report.exact else EXIT_BOUNDS_ONLY


def _emit(report, as_json: bool) -> None:
    sys.stdout.write(spec_io.emit(report, "json" if as_json else "text"))


def _cmd_compute(args) -> int:
    specs = []
    if args.spec == "-":
        specs = [line.strip() for line in sys.stdin if line.strip()]
    elif args.batch:
        with open(args.spec) as fh:
            specs = [line.strip() for line in fh if line.strip()]
    else:
        specs = [args.spec]

    worst = EXIT_OK
    for text in specs:
        report = engine.compute_ed(spec_io.parse(text), prime=args.prime)
        _emit(report, args.json)
        worst = max(worst, _report_exit(report))
    return worst


def _parse_nu(text: str, spec: GroupSpec) -> GroupElement:
    cur = spec_io._Cursor(text)
    nu = spec_io._parse_tuple(cur, spec.factors)
    if not cur.done():
        raise spec_io.DslSyntaxError("trailing input after tuple", cur.pos)
    return nu


def _cmd_extend(args) -> int:
    spec = spec_io.parse(args.spec)
    nu = _parse_nu(args.nu, spec)
    # permute nu coordinates along with the canonical factor order
    g = catalog.build(GroupSpec(spec.factors, spec.mu_generators + (nu,)))
    nu_canonical = g.spec.mu_generators[-1]
    report = engine.extend_ed(catalog.build(spec).spec, nu_canonical,
                              prime=args.prime)
    _emit(report, args.json)
    return _report_exit(report)


def _random_spec(rng: random.Random) -> GroupSpec:
    family = rng.choice(["BD", "C", "A2", "A3", "E6"])
    m = rng.randint(1, 3)
    if family == "BD":
        factors = tuple(SimpleFactor("Spin", n=rng.choice([3, 5, 7, 9, 10, 11, 13]))
                        for _ in range(m))
    elif family == "C":
        factors = tuple(SimpleFactor("Sp", n=rng.choice([3, 4, 5, 8]))
                        for _ in range(m))
    elif family == "A2":
        factors = tuple(SimpleFactor("SL", p=2, k=1) for _ in range(max(m, 2)))
    elif family == "A3":
        factors = tuple(SimpleFactor("SL", p=3, k=1) for _ in range(max(m, 2)))
    else:
        factors = tuple(SimpleFactor("E6") for _ in range(m))
    center = CyclicDecomposition(sum((f.center_orders for f in factors), ()))
    mu = []
    for _ in range(rng.randint(0, 2)):
        mu.append(abelian.element(
            center, [rng.randrange(d) for d in center.orders]))
    spec = GroupSpec(factors, tuple(mu))
    g = catalog.build(spec)
    if not catalog.is_reduced(g):
        return _random_spec(rng)
    ctx = basis_search.build_socle_context(g, g.prime)
    if g.prime ** ctx.r > 3 ** 4:
        return _random_spec(rng)
    return spec


def _cmd_oracle_check(args) -> int:
    rng = random.Random(args.seed)
    passes = fails = 0
    for _ in range(args.count):
        spec = _random_spec(rng)
        g = catalog.build(spec)
        ok = True
        # annihilator order law
        mu_order = len(abelian.span_closure(g.center_tilde, g.mu_generators,
                                            cap=args.max_order))
        if g.char_group.order * mu_order != g.center_tilde.order:
            ok = False
        # optimizer vs brute force
        try:
            cand = basis_search.index_minimal_basis(g, g.prime)
            if cand.score != basis_search.brute_force_min(g, g.prime):
                ok = False
        except EdcalcError:
            pass  # no admissible data; the law checks above still count
        if ok:
            passes += 1
        else:
            fails += 1
            print(f"FAIL {spec_io.render(g.spec)}", file=sys.stderr)
    print(f"oracle-check: {passes} passed, {fails} failed")
    return EXIT_OK if fails == 0 else EXIT_ERROR


def run_fixture(entry):
    """Evaluate one pinned fixture; returns (ok, report)."""
    text, expect_exact, ed, ed_red = entry
    if text.startswith("extend:"):
        spec_text, nu_text = text[len("extend:"):].split("|")
        spec = spec_io.parse(spec_text)
        nu = _parse_nu(nu_text, spec)
        g = catalog.build(GroupSpec(spec.factors, spec.mu_generators + (nu,)))
        report = engine.extend_ed(catalog.build(spec).spec,
                                  g.spec.mu_generators[-1])
    else:
        report = engine.compute_ed(spec_io.parse(text))
    ok = report.exact == expect_exact
    if expect_exact:
        ok = ok and report.ed == ed and report.ed_red == ed_red
    return ok, report


def _cmd_paper_suite(args) -> int:
    passed = 0
    for entry in PAPER_FIXTURES:
        ok, report = run_fixture(entry)
        status = "ok" if ok else "FAIL"
        label = entry[0]
        print(f"[{status}] {label}: exact={report.exact} ed={report.ed} "
              f"ed_red={report.ed_red} lower={report.lower} upper={report.upper}")
        passed += ok
    print(f"{passed}/{len(PAPER_FIXTURES)} fixtures pass")
    return EXIT_OK if passed == len(PAPER_FIXTURES) else EXIT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="edcalc",
        description="Essential dimension of reduced split semisimple groups "
                    "(types A, B, C, D, E6) and their strict reductive envelopes.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute bounds / exact value for a spec")
    c.add_argument("spec", help='group spec, e.g. "Spin(10)^2 / [(1,3)]"; '
                               '"-" reads one spec per stdin line')
    c.add_argument("--json", action="store_true", help="emit the JSON report")
    c.add_argument("--prime", type=int, default=None, help="socle prime override")
    c.add_argument("--batch", action="store_true",
                   help="treat SPEC as a file of one spec per line")
    c.set_defaults(func=_cmd_compute)

    e = sub.add_parser("extend", help="central-extension transfer (H from H/nu)")
    e.add_argument("spec", help="spec of the extension group H")
    e.add_argument("--nu", required=True, help='generator tuple, e.g. "(1,3)"')
    e.add_argument("--json", action="store_true")
    e.add_argument("--prime", type=int, default=None)
    e.set_defaults(func=_cmd_extend)

    o = sub.add_parser("oracle-check",
                       help="randomized optimizer-vs-brute-force and order-law checks")
    o.add_argument("--count", type=int, default=50)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--max-order", type=int, default=4096)
    o.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("paper-suite", help="evaluate the pinned fixture table")
    p.set_defaults(func=_cmd_paper_suite)
    return ap


def run(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except EdcalcError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
