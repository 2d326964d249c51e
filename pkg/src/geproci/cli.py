"""Command-line front end.

Subcommands construct configurations, run the certification checks, and
print JSON reports of the form {"verdict", "prime", "seed", "trials",
"data"}. Exit codes: 0 = Yes/pass, 1 = No/fail, 2 = Inconclusive,
3 = usage or I/O error.
"""

import argparse
import json
import sys

from . import certify, combinat, configs, ks, unexpected, weddle
from .certify import YES, NO, INCONCLUSIVE


def _report(verdict, prime, seed, trials, data):
    return {"verdict": verdict, "prime": prime, "seed": seed,
            "trials": trials, "data": data}


def _emit(report, as_json):
    if as_json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"verdict: {report['verdict']}")
        print(f"prime:   {report['prime']}")
        print(f"seed:    {report['seed']}  trials: {report['trials']}")
        for k in sorted(report["data"]):
            print(f"{k}: {report['data'][k]}")


_EXIT = {YES: 0, NO: 1, INCONCLUSIVE: 2, certify.DEGENERATE: 1}


def _exit_code(verdict):
    return _EXIT.get(verdict, 1)


def _load(path, min_bound=None):
    kwargs = {}
    if min_bound:
        kwargs["min_bound"] = min_bound
    return configs.load(path, **kwargs)


def _cmd_construct(args):
    kind = args.what
    if kind == "grid":
        cfg = configs.unity_grid(args.a, args.b)
    elif kind == "std":
        cfg = configs.std_construction(args.n, args.which)
    elif kind == "extend":
        cfg = configs.extend_standard(
            configs.std_construction(args.n, args.which))
    else:
        cfg = configs.named(kind)
    configs.save(cfg, args.output)
    report = _report(YES, cfg.field.p, 0, 0,
                     {"label": cfg.label, "n_points": len(cfg.points),
                      "file": args.output})
    _emit(report, args.json)
    return 0


def _cmd_check_geproci(args):
    cfg = _load(args.file, args.prime)
    d = certify.is_geproci(cfg.points, args.a, args.b,
                           trials=args.trials, seed=args.seed)
    _emit(d.to_json(), args.json)
    return _exit_code(d.verdict)


def _cmd_check_ci222(args):
    cfg = _load(args.file)
    d = certify.is_ci222_p4(cfg.points, trials=args.trials, seed=args.seed)
    _emit(d.to_json(), args.json)
    return _exit_code(d.verdict)


def _cmd_census(args):
    cfg = _load(args.file)
    census = (combinat.line_census if args.what == "lines"
              else combinat.plane_census)(cfg)
    hist = {str(k): v for k, v in sorted(census.histogram.items())}
    report = _report(YES, cfg.field.p, 0, 0,
                     {"flat_dim": census.flat_dim, "histogram": hist})
    if args.json:
        _emit(report, True)
    else:
        print(json.dumps(hist, sort_keys=True))
    return 0


def _cmd_weddle(args):
    cfg = _load(args.file)
    p = cfg.field.p
    if args.what == "degree":
        deg = weddle.weddle_degree(cfg.points, args.d, seed=args.seed)
        data = {"degree": deg}
        verdict = YES
    else:
        if not args.probe:
            print("weddle member needs --probe FILE", file=sys.stderr)
            return 3
        probe = _load(args.probe)
        flags = [bool(weddle.weddle_member(cfg.points, args.d, Q,
                                           seed=args.seed))
                 for Q in probe.points]
        data = {"members": flags}
        verdict = YES if all(flags) else NO
    _emit(_report(verdict, p, args.seed, 1, data), args.json)
    return _exit_code(verdict)


def _cmd_unexpected(args):
    cfg = _load(args.file)
    p = cfg.field.p
    if args.what == "adim":
        val = unexpected.adim(cfg, args.t, args.m, seed=args.seed)
        data, verdict = {"adim": val}, YES
    elif args.what == "vdim":
        val = unexpected.vdim(cfg, args.t, args.m, seed=args.seed)
        data, verdict = {"vdim": val}, YES
    else:
        rep = unexpected.c_predicate(cfg, args.t, seed=args.seed)
        data = {"t": rep.t, "adim": rep.adim, "vdim": rep.vdim,
                "unexpected": rep.unexpected}
        verdict = YES if rep.unexpected else NO
    _emit(_report(verdict, p, args.seed, 2, data), args.json)
    return _exit_code(verdict)


def _cmd_ks(args):
    cfg = _load(args.file)
    g = ks.ortho_graph(cfg, seed=args.seed)
    verdict = YES if ks.is_ks_set(g) else NO
    data = {"edges": len(g.edges), "bases": len(g.bases),
            "max_cliques": len(g.max_cliques),
            "primes": list(g.primes)}
    _emit(_report(verdict, cfg.field.p, args.seed, 1, data), args.json)
    return _exit_code(verdict)


def _cmd_cbp(args):
    cfg = _load(args.file)
    fn = certify.cbp_ambient if args.ambient else certify.geprocb
    d = fn(cfg.points, seed=args.seed)
    _emit(d.to_json(), args.json)
    return _exit_code(d.verdict)


def _cmd_remember(args):
    cfg = _load(args.file)
    with open(args.subset) as fh:
        indices = json.load(fh)
    W = [cfg.points[i] for i in indices]
    d = certify.remembers(W, cfg.points, args.m, seed=args.seed)
    _emit(d.to_json(), args.json)
    return _exit_code(d.verdict)


def _cmd_equiv(args):
    c1 = _load(args.file1)
    c2 = _load(args.file2)
    status, detail = combinat.weak_comb_equivalent(c1, c2)
    verdict = {"Equivalent": YES, "Distinguished": NO,
               "Unknown": INCONCLUSIVE}[status]
    data = {"status": status}
    if status == "Equivalent":
        data["bijection"] = detail
    elif status == "Distinguished":
        data["invariant"] = detail
    _emit(_report(verdict, c1.field.p, 0, 1, data), args.json)
    return _exit_code(verdict)


def _suite_items():
    def geproci_item(label, a, b):
        def run():
            cfg = configs.named(label)
            return bool(certify.is_geproci(cfg.points, a, b, trials=3))
        return (f"{label} is ({a},{b})-geproci", run)

    def grid_item():
        cfg = configs.unity_grid(3, 4)
        return certify.detect_grid(cfg.points)[0] == "Grid"

    def weddle_item(label, builder, d, expect):
        def run():
            return weddle.weddle_degree(builder(), d) == expect
        return (label, run)

    import random as _random
    from .projgeom import ProjPoint

    def random_points(n_pts, dim, seed):
        from .field import make_field
        fs = make_field([], seed=seed)
        rng = _random.Random(repr((seed, "suite")))
        out = []
        while len(out) < n_pts:
            q = ProjPoint.make([rng.randrange(fs.p)
                                for _ in range(dim + 1)], fs.p)
            if q not in out:
                out.append(q)
        return out

    return {
        "geproci": [
            geproci_item("d4", 3, 4),
            geproci_item("f4", 4, 6),
            geproci_item("penrose", 5, 8),
            ("grid(3,4) detected as grid", grid_item),
        ],
        "census": [
            ("d4 line census {2:18, 3:16}", lambda: (
                combinat.line_census(configs.named("d4")).histogram
                == {2: 18, 3: 16})),
            ("penrose line census {2:240, 4:90}", lambda: (
                combinat.line_census(configs.named("penrose")).histogram
                == {2: 240, 4: 90})),
        ],
        "weddle": [
            weddle_item("6 points in 3-space, d=2, degree 4",
                        lambda: random_points(6, 3, 1), 2, 4),
            weddle_item("10 points in 4-space, d=2, degree 5",
                        lambda: random_points(10, 4, 1), 2, 5),
            weddle_item("10 points in 3-space, d=3, degree 10",
                        lambda: random_points(10, 3, 1), 3, 10),
        ],
        "ks": [
            ("13-ray set is KS", lambda: ks.is_ks_set(
                configs.named("rays13"))),
            ("Peres 33-ray set is KS", lambda: ks.is_ks_set(
                configs.named("peres33"))),
        ],
        "unexpected": [
            ("d4 has an unexpected cone of degree 3", lambda:
                unexpected.c_predicate(configs.named("d4"), 3).unexpected),
            ("grid(2,4) has no unexpected cone of degree 4", lambda: not
                unexpected.c_predicate(configs.unity_grid(2, 4),
                                       4).unexpected),
        ],
    }


def _cmd_suite(args):
    groups = _suite_items()
    if args.name and args.name not in groups:
        print(f"unknown suite group: {args.name}", file=sys.stderr)
        return 3
    selected = {args.name: groups[args.name]} if args.name else groups
    results = {}
    ok = True
    for gname, items in selected.items():
        for label, run in items:
            passed = bool(run())
            ok = ok and passed
            results[f"{gname}: {label}"] = passed
            if not args.json:
                print(f"[{'PASS' if passed else 'FAIL'}] {gname}: {label}")
    if args.json:
        print(json.dumps({"verdict": YES if ok else NO,
                          "results": results}, sort_keys=True))
    return 0 if ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="geproci")
    ap.add_argument("--json", action="store_true",
                    help="emit machine-readable JSON")
    sub = ap.add_subparsers(dest="command")

    c = sub.add_parser("construct", help="build and save a configuration")
    c.add_argument("what", help="named label, or grid / std / extend")
    c.add_argument("-a", type=int, default=3)
    c.add_argument("-b", type=int, default=3)
    c.add_argument("-n", type=int, default=4)
    c.add_argument("--which", default="Y1", choices=["Y1", "Y2", "Y1Y2"])
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(fn=_cmd_construct)

    chk = sub.add_parser("check", help="certification checks")
    chk_sub = chk.add_subparsers(dest="what")
    g = chk_sub.add_parser("geproci")
    g.add_argument("-a", type=int, required=True)
    g.add_argument("-b", type=int, required=True)
    g.add_argument("-t", "--trials", type=int, default=3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--prime", type=int, default=None)
    g.add_argument("file")
    g.set_defaults(fn=_cmd_check_geproci)
    ci = chk_sub.add_parser("ci222")
    ci.add_argument("-t", "--trials", type=int, default=3)
    ci.add_argument("--seed", type=int, default=0)
    ci.add_argument("file")
    ci.set_defaults(fn=_cmd_check_ci222)

    ce = sub.add_parser("census", help="line or plane census")
    ce.add_argument("what", choices=["lines", "planes"])
    ce.add_argument("file")
    ce.set_defaults(fn=_cmd_census)

    w = sub.add_parser("weddle", help="determinantal locus checks")
    w.add_argument("what", choices=["member", "degree"])
    w.add_argument("-d", type=int, required=True)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--probe", default=None)
    w.add_argument("file")
    w.set_defaults(fn=_cmd_weddle)

    u = sub.add_parser("unexpected", help="cone dimension counts")
    u.add_argument("what", choices=["adim", "vdim", "c"])
    u.add_argument("-t", type=int, required=True)
    u.add_argument("-m", type=int, default=None)
    u.add_argument("--seed", type=int, default=0)
    u.add_argument("file")
    u.set_defaults(fn=_cmd_unexpected)

    k = sub.add_parser("ks", help="Kochen-Specker verification")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("file")
    k.set_defaults(fn=_cmd_ks)

    cb = sub.add_parser("cbp", help="Cayley-Bacharach checks")
    cb.add_argument("--ambient", action="store_true")
    cb.add_argument("--seed", type=int, default=0)
    cb.add_argument("file")
    cb.set_defaults(fn=_cmd_cbp)

    r = sub.add_parser("remember", help="cone memory of a subset")
    r.add_argument("-m", type=int, required=True)
    r.add_argument("--subset", required=True,
                   help="JSON file with a list of point indices")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("file")
    r.set_defaults(fn=_cmd_remember)

    e = sub.add_parser("equiv", help="weak combinatorial equivalence")
    e.add_argument("file1")
    e.add_argument("file2")
    e.set_defaults(fn=_cmd_equiv)

    s = sub.add_parser("suite", help="run named check groups")
    s.add_argument("name", nargs="?", default=None)
    s.set_defaults(fn=_cmd_suite)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 3
    if not getattr(args, "fn", None):
        ap.print_usage(sys.stderr)
        return 3
    if args.command == "unexpected" and args.what != "c" and args.m is None:
        print("unexpected adim/vdim need -m", file=sys.stderr)
        return 3
    if args.command == "unexpected" and args.m is None:
        args.m = args.t
    try:
        return args.fn(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
