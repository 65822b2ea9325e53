"""Command-line verification harness.

    traced check [--suite ID|all] [--seed N] [--trials N]
                 [--format text|json] [--replay FILE] [--list]
    traced eval FILE.diag
    traced demo partition --matrix FILE --length N [--float]

Exit codes: `check` is nonzero iff any suite fails; `eval` is nonzero iff
an assertion fails or the program is rejected; `check --replay` is nonzero
iff some stored counterexample no longer reproduces.  TRACED_SEED
overrides the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .errors import TracedError
from .suites import REGISTRY, SuiteConfig, replay_entry, run_suite
from ._rat import parse_rat, rat_str


def _schema():
    return json.loads(resources.files("traced").joinpath("report_schema.json").read_text())


def _validate_report(doc: dict):
    import jsonschema

    jsonschema.validate(doc, _schema())


def cmd_check(args) -> int:
    if args.list:
        for sid, suite in sorted(REGISTRY.items()):
            marker = " [expects counterexample]" if suite.expect_counterexample else ""
            print(f"{sid:34s} tag={suite.tag:15s} {suite.description}{marker}")
        return 0

    if args.replay:
        with open(args.replay) as fh:
            doc = json.load(fh)
        entries = []
        if "suites" in doc:
            for s in doc["suites"]:
                if s.get("counterexample"):
                    entries.append((s["id"], s["counterexample"]["inputs"]))
        elif "suite" in doc:
            entries.append((doc["suite"], doc["inputs"]))
        else:
            print("replay file has neither a report nor a single counterexample", file=sys.stderr)
            return 2
        if not entries:
            print("nothing to replay: no stored counterexamples in the file")
            return 0
        all_reproduced = True
        for sid, inputs in entries:
            reproduced, detail = replay_entry(sid, inputs)
            status = "reproduced" if reproduced else "NOT reproduced"
            print(f"{sid}: {status}" + (f" ({detail})" if detail and reproduced else ""))
            all_reproduced &= reproduced
        return 0 if all_reproduced else 1

    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("TRACED_SEED", "42"))
    cfg = SuiteConfig(
        suites=tuple(args.suite or ("all",)),
        seed=seed,
        trials=args.trials,
        q=args.q,
    )
    try:
        report = run_suite(cfg)
    except KeyError as exc:
        print(str(exc), file=sys.stderr)
        return 2

    if args.format == "json":
        doc = report.as_json()
        _validate_report(doc)
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        for r in report.results:
            status = "PASS" if r.passed else "FAIL"
            extra = ""
            if r.expect_counterexample:
                extra = f" counterexamples={r.counterexamples_found} (expected >=1)"
            elif r.failures:
                extra = f" first failure: {r.counterexample['detail']}"
            print(
                f"{status} {r.suite_id:34s} tag={r.tag:15s} trials={r.trials}"
                f" failures={r.failures} {r.wall_time_s * 1000:7.1f}ms{extra}"
            )
        total = sum(r.wall_time_s for r in report.results)
        verdict = "all suites passed" if report.passed else "SOME SUITES FAILED"
        print(f"{verdict}; {len(report.results)} suites in {total:.1f}s")
    return 0 if report.passed else 1


def cmd_eval(args) -> int:
    from .dsl import run_text
    from .errors import DslError

    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    try:
        report = run_text(text)
    except DslError as exc:
        print(f"{args.file}:{exc}", file=sys.stderr)
        return 2
    except TracedError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    from .dsl import AssertResult, PrintResult

    for r in report.results:
        if isinstance(r, PrintResult):
            print(r.text)
        elif isinstance(r, AssertResult):
            if r.ok:
                print(f"line {r.line}: assert ok")
            else:
                print(f"line {r.line}: ASSERT FAILED: {r.left} != {r.right}")
    return 0 if report.ok else 1


def _load_matrix(path: str):
    from .matrices import RatMatrix

    with open(path) as fh:
        rows = json.load(fh)
    return RatMatrix.from_rows([[parse_rat(str(v)) for v in row] for row in rows])


def cmd_demo_partition(args) -> int:
    from .core import get_instance
    from .field_theory import field_theory
    from .thickened import canonical_thickener, trace_pairing

    a = _load_matrix(args.matrix)
    n = args.length
    if n <= 0:
        print("length must be a positive integer", file=sys.stderr)
        return 2
    rb = get_instance("rbord1")
    vect = get_instance("finvect")
    cut = max(1, n // 2)
    if cut == n:
        cut = n - 1 if n > 1 else 0
    if cut == 0:
        s1 = rb.interval("x", "y", n)
        s2 = rb.iso_mor(rb.points(["y"]), rb.points(["x"]), {"y": "x"})
        print("length 1 cannot be split; pairing against the relabeling isometry")
    else:
        s1 = rb.interval("x", "y", n - cut)
        s2 = rb.interval("y", "x", cut)
    e = field_theory(a)
    sigma = rb.compose(s1, s2)
    glued = rb.glue_trace(sigma)
    lhs = parse_rat("1")
    for c in glued.payload.circles:
        lhs *= e.circle_value(c)
    rhs = vect.scalar_value(trace_pairing(canonical_thickener(e(s2)), e(s1)))
    print(f"closed circle of total length {n}")
    print(f"  evaluation of the glued bordism : {rat_str(lhs)}")
    print(f"  trace pairing of the two pieces : {rat_str(rhs)}")
    if args.float_mode:
        from .field_theory import float_circle_value

        h = [[float(v) for v in row] for row in a.to_rows()]
        approx = float_circle_value(h, float(n))
        print(f"  float mode (exp(-t*H) circle)  : {approx:.9f}  [demo only]")
    if lhs != rhs:
        print("MISMATCH: the partition identity failed", file=sys.stderr)
        return 1
    print("  identity holds exactly")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traced",
        description="exact verification harness for categorical traces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run property suites")
    check.add_argument("--suite", action="append",
                       help="suite id or prefix (repeatable); default all")
    check.add_argument("--seed", type=int, default=None,
                       help="PRNG seed (default 42, or TRACED_SEED)")
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--q", default="2", help="braiding parameter of the graded instance")
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--replay", metavar="FILE",
                       help="re-run stored counterexamples from a report file")
    check.add_argument("--list", action="store_true", help="list available suites")
    check.set_defaults(func=cmd_check)

    ev = sub.add_parser("eval", help="run a .diag program")
    ev.add_argument("file")
    ev.set_defaults(func=cmd_eval)

    demo = sub.add_parser("demo", help="demonstrations")
    demo_sub = demo.add_subparsers(dest="demo_command", required=True)
    part = demo_sub.add_parser("partition",
                               help="closed-circle evaluation vs trace pairing")
    part.add_argument("--matrix", required=True, help="JSON file with matrix rows")
    part.add_argument("--length", type=int, required=True)
    part.add_argument("--float", dest="float_mode", action="store_true",
                      help="also show the float exp(-tH) value (demo only)")
    part.set_defaults(func=cmd_demo_partition)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
