"""Command-line front end.

    hvverma bracket "L[2]" "L[-2]"
    hvverma act "L[1]" "I[-1] v" --hw 0,5,0,0,1
    hvverma basis --group int --max-level 5
    hvverma transport 2 --hw 0,0,24,0,0
    hvverma singular --hw 2,2,0,1,0 --max-level 2
    hvverma reduce "I[-1] L[-sqrt(2)] v" --group zsqrt2-real --hw 1,2,3,1,0
    hvverma decide --group int --order natural --hw 2,2,0,1,0 --max-level 1

Each command prints a short text summary and, with ``--json PATH``, writes a
report with sorted keys.  Exit status: 0 ok, 2 parse error, 3 proof
violation, 4 search exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from .algebra import HighestWeight, bracket, transport_highest_weight
from .decide import DEFAULT_LEVEL, decide
from .engine import reduce_dense, reduce_discrete
from .errors import HVError, ParseError, PreconditionError, ProofViolationError, SearchExhaustedError
from .groups import Discrete, group_from_config, preset
from .sampling import random_weight_vector
from .scalars import format_scalar, parse_scalar
from .singular import singular_search
from .textio import (
    algebra_to_json,
    format_algebra_element,
    parse_algebra_element,
    parse_generator,
    parse_vector,
    vector_to_json,
)
from .verma import VermaModule

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PROOF = 3
EXIT_EXHAUSTED = 4


def _group(args):
    if args.group_config:
        text = args.group_config
        path = Path(text)
        cfg = json.loads(path.read_text() if path.exists() else text)
        return group_from_config(cfg)
    order = None if args.order in (None, "natural") else args.order
    return preset(args.group, order)


def _hw(args) -> HighestWeight:
    if not args.hw:
        raise ParseError("--hw is required for this command")
    return HighestWeight.parse(args.hw)


def _module(args) -> VermaModule:
    return VermaModule(_group(args), _hw(args))


def _hw_json(hw: HighestWeight) -> dict:
    return {k: format_scalar(v) for k, v in zip(("h", "h_I", "c", "c_I", "c_LI"), hw.as_tuple())}


# -- commands ------------------------------------------------------------------


def cmd_bracket(args):
    group = _group(args)
    x = parse_algebra_element(args.x, group)
    y = parse_algebra_element(args.y, group)
    z = bracket(x, y)
    text = format_algebra_element(z)
    return {"command": "bracket", "x": args.x, "y": args.y, "result": text, "terms": algebra_to_json(z)}, text


def cmd_act(args):
    module = _module(args)
    text = args.generator.strip()
    if any(op in text for op in "+*") or text.count("[") > 1:
        g = parse_algebra_element(text, module.group)
    else:
        g = parse_generator(text, module.group)
    v = parse_vector(args.vector, module)
    out = module.act(g, v)
    return {
        "command": "act",
        "hw": _hw_json(module.hw),
        "generator": text,
        "vector": str(v),
        "result": str(out),
        "terms": vector_to_json(out),
    }, str(out)


def cmd_basis(args):
    group = _group(args)
    kind = group.classify()
    if not isinstance(kind, Discrete):
        raise PreconditionError(f"{group.describe()} is densely ordered; weight spaces are infinite")
    hw = HighestWeight.parse(args.hw) if args.hw else HighestWeight(0, 0, 0, 0, 0)
    module = VermaModule(group, hw)
    levels = []
    lines = []
    for n in range(1, args.max_level + 1):
        basis = module.basis_at_level(n)
        levels.append({"level": n, "dimension": len(basis), "monomials": [str(m) for m in basis]})
        lines.append(f"level {n}: {len(basis)}")
    report = {"command": "basis", "group": group.describe(), "step": str(kind.minimal_positive), "levels": levels}
    return report, "\n".join(lines)


def cmd_transport(args):
    group = _group(args)
    x = group.element(parse_scalar(args.x))
    hw = _hw(args)
    out = transport_highest_weight(x, hw)
    module = VermaModule(group, hw)
    checks = module.restrict_to_subalgebra(x).verify_transport()
    report = {
        "command": "transport",
        "x": str(x),
        "hw": _hw_json(hw),
        "transported": _hw_json(out),
        "verified": {k: ok for k, (_, _, ok) in checks.items()},
    }
    return report, ",".join(format_scalar(s) for s in out.as_tuple())


def cmd_singular(args):
    module = _module(args)
    kind = module.group.classify()
    if not isinstance(kind, Discrete):
        raise PreconditionError("singular vector search needs a discrete order")
    a = kind.minimal_positive
    view = module.restrict_to_subalgebra(a)
    kernels = singular_search(view.transported, 1, args.max_level)
    levels = []
    lines = []
    for lk in kernels:
        vecs = [view.from_standard(w) for w in lk.kernel]
        levels.append({"level": lk.level, "dimension": lk.dimension, "kernel": [str(w) for w in vecs]})
        lines.append(f"level {lk.level}: dim {lk.dimension}, kernel {len(vecs)}")
        lines.extend(f"  {w}" for w in vecs)
    report = {"command": "singular", "hw": _hw_json(module.hw), "step": str(a), "levels": levels}
    return report, "\n".join(lines)


def cmd_reduce(args):
    module = _module(args)
    if args.vector:
        v = parse_vector(args.vector, module)
    else:
        v = random_weight_vector(module, random.Random(args.seed))
    comps = module.weight_components(v)
    if len(comps) != 1:
        raise PreconditionError(f"{v} has {len(comps)} weight components; reduce them one at a time")
    report = {"command": "reduce", "hw": _hw_json(module.hw), "input": str(v)}
    if module.group.is_dense():
        res = reduce_dense(module, v)
        report.update(b=format_scalar(res.b), outcome=str(res.trace.outcome), trace=res.trace.to_json())
        if res.closed_form is not None:
            report["closed_form"] = format_scalar(res.closed_form)
        summary = f"{v}\n  -> {res.trace.outcome}  ({len(res.trace)} steps)"
    else:
        res = reduce_discrete(module, v)
        report.update(outcome=str(res.vector), trace=res.trace.to_json())
        summary = f"{v}\n  -> {res.vector}  ({len(res.trace)} steps)"
    return report, summary


def cmd_decide(args):
    module = _module(args)
    verdict = decide(module, args.max_level, samples=args.samples, seed=args.seed)
    report = {"command": "decide", "group": module.group.describe(), "hw": _hw_json(module.hw)}
    report.update(verdict.to_json())
    summary = verdict.name
    if getattr(verdict, "level", None) is not None:
        summary += f", level {verdict.level}"
    if getattr(verdict, "witness", None) is not None:
        summary += f", witness {verdict.witness}"
    return report, summary


COMMANDS = {
    "bracket": cmd_bracket,
    "act": cmd_act,
    "basis": cmd_basis,
    "transport": cmd_transport,
    "singular": cmd_singular,
    "reduce": cmd_reduce,
    "decide": cmd_decide,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="int", help="int, zsqrt2, zsqrt2-real or zsqrt2-lex")
    common.add_argument("--order", choices=("natural", "real", "lex"), default=None)
    common.add_argument("--group-config", help="JSON text or file with radicand/generators/order")
    common.add_argument("--hw", help="h,h_I,c,c_I,c_LI")
    common.add_argument("--max-level", type=int, default=DEFAULT_LEVEL)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")

    p = argparse.ArgumentParser(prog="hvverma", description="Exact computations in Verma modules over L[G].")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bracket", parents=[common], help="Lie bracket of two elements")
    s.add_argument("x")
    s.add_argument("y")
    s = sub.add_parser("act", parents=[common], help="apply a generator to a module vector")
    s.add_argument("generator")
    s.add_argument("vector")
    sub.add_parser("basis", parents=[common], help="level dimensions over the cyclic part")
    s = sub.add_parser("transport", parents=[common], help="highest weight seen through theta_x")
    s.add_argument("x")
    sub.add_parser("singular", parents=[common], help="singular vector kernels by level")
    s = sub.add_parser("reduce", parents=[common], help="constructive reduction of a weight vector")
    s.add_argument("vector", nargs="?", help="vector literal; omitted: sample one with --seed")
    s = sub.add_parser("decide", parents=[common], help="irreducibility verdict")
    s.add_argument("--samples", type=int, default=0, help="dense order: reduce this many sampled vectors")
    return p


def _dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.max_level < 1:
        print("error: --max-level must be at least 1", file=stderr)
        return EXIT_PARSE
    try:
        report, summary = COMMANDS[args.command](args)
    except (ParseError, KeyError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except ProofViolationError as exc:
        print(f"proof violation: {exc}", file=stderr)
        if exc.trace is not None:
            print(_dump({"error": "proof-violation", "message": str(exc), "trace": exc.trace.to_json()}), file=stderr)
        return EXIT_PROOF
    except SearchExhaustedError as exc:
        print(f"search exhausted: {exc}", file=stderr)
        return EXIT_EXHAUSTED
    except HVError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    if args.json == "-":
        stdout.write(_dump(report))
    else:
        print(summary, file=stdout)
        if args.json:
            Path(args.json).write_text(_dump(report))
    return EXIT_OK


def main(argv: list[str] | None = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
