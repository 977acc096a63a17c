"""``latdual`` command line.

Exit codes: 0 success (or dual), 1 not dual, 2 usage/input error,
3 guard or resource limit exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats, oracle
from .dualization import check_dual, iter_dual, DualEnumStats
from .errors import InputError, LatDualError, SizeLimitError
from .generators import (gen_fig2, gen_interval_order, gen_one_in_three,
                         gen_random_antichain, gen_random_base)
from .hypergraph import STRATEGIES, iter_transversals
from .independence import DEFAULT_GUARD, ex, independent_width

EXIT_OK, EXIT_NOT_DUAL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _base(args):
    if not args.base:
        raise InputError("a base file is required (-b)")
    return formats.parse_base(_read(args.base))


def _set_arg(base, names):
    return base.set_of(*names)


def _emit(out, names, s):
    out.write(formats.format_set(names, s) + "\n")
    out.flush()


def cmd_closure(args, out):
    base = _base(args)
    _emit(out, base.names, base.closure(_set_arg(base, args.elements)))
    return EXIT_OK


def cmd_is_closed(args, out):
    base = _base(args)
    out.write("true\n" if base.is_closed(_set_arg(base, args.elements)) else "false\n")
    return EXIT_OK


def cmd_ex(args, out):
    base = _base(args)
    _emit(out, base.names, ex(base, _set_arg(base, args.elements)))
    return EXIT_OK


def cmd_dualize(args, out):
    base = _base(args)
    bplus = formats.parse_antichain(_read(args.bplus), base)
    stats = DualEnumStats()
    for i in iter_dual(base, bplus, args.strategy, stats):
        _emit(out, base.names, i)
    if args.stats:
        out.write(f"# tr={stats.transversals} emitted={stats.emitted} "
                  f"discarded={stats.discarded}\n")
    return EXIT_OK


def cmd_check_dual(args, out):
    base = _base(args)
    bplus = formats.parse_antichain(_read(args.bplus), base)
    bminus = formats.parse_antichain(_read(args.bminus), base)
    verdict = check_dual(base, bplus, bminus, args.strategy)
    return _report(verdict, base.names, out)


def _report(verdict, names, out):
    if verdict.dual:
        out.write("dual\n")
        return EXIT_OK
    out.write(f"# not dual ({verdict.reason})\n")
    _emit(out, names, verdict.witness)
    return EXIT_NOT_DUAL


def cmd_tr(args, out):
    if not args.hypergraph:
        raise InputError("a hypergraph file is required (-H)")
    h = formats.parse_hypergraph(_read(args.hypergraph))
    for t in iter_transversals(h, args.strategy):
        _emit(out, h.names, t)
    return EXIT_OK


def cmd_width(args, out):
    base = _base(args)
    k, witness = independent_width(base, "greedy" if args.greedy else "exact", args.guard)
    out.write(f"# {'lower bound' if args.greedy else 'width'} {k}\n")
    for j in witness:
        premise = base.format_set(base.implications[j].premise)
        head = f"imp {premise} ->" if premise else "imp ->"
        out.write(f"{head} {base.names[base.implications[j].conclusion]}\n")
    return EXIT_OK


def cmd_oracle(args, out):
    base = _base(args)
    if args.what == "closed":
        for s in oracle.all_closed_sets(base, args.guard):
            _emit(out, base.names, s)
        return EXIT_OK
    bplus = formats.parse_family(_read(args.bplus), base) if args.bplus else None
    if bplus is None:
        raise InputError("oracle dual/check needs -p")
    if args.what == "dual":
        for s in oracle.brute_dual(base, bplus, args.guard):
            _emit(out, base.names, s)
        return EXIT_OK
    if not args.bminus:
        raise InputError("oracle check needs -m")
    bminus = formats.parse_family(_read(args.bminus), base)
    return _report(oracle.brute_check_dual(base, bplus, bminus, args.guard), base.names, out)


def _write_outputs(prefix, out, base, bplus=None, bminus=None):
    texts = {".ib": formats.serialize_base(base)}
    if bplus is not None:
        texts[".bplus"] = formats.serialize_antichain(base, bplus)
    if bminus is not None:
        texts[".bminus"] = formats.serialize_antichain(base, bminus)
    if prefix is None:
        if len(texts) > 1:
            raise InputError("this generator writes several files; pass -o PREFIX")
        out.write(texts[".ib"])
        return
    for suffix, text in texts.items():
        Path(prefix + suffix).write_text(text)
        out.write(f"# wrote {prefix}{suffix}\n")


def cmd_gen(args, out):
    kind = args.kind
    if kind == "fig2":
        base, bplus = gen_fig2(args.n)
        _write_outputs(args.out, out, base, bplus)
    elif kind == "oit":
        if not args.formula:
            raise InputError("gen oit needs -f FORMULA")
        base, bplus, bminus = gen_one_in_three(formats.parse_formula(_read(args.formula)))
        _write_outputs(args.out, out, base, bplus, bminus)
    elif kind == "random":
        base = gen_random_base(args.n, args.m, args.max_premise, args.seed)
        bplus = (gen_random_antichain(base, args.antichain, args.seed)
                 if args.antichain else None)
        _write_outputs(args.out, out, base, bplus)
    elif kind == "interval":
        base = gen_interval_order(args.n, args.seed)
        bplus = (gen_random_antichain(base, args.antichain, args.seed)
                 if args.antichain else None)
        _write_outputs(args.out, out, base, bplus)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-b", "--base", help="implicational base file ('-' for stdin)")
    common.add_argument("-p", "--bplus", help="antichain B+ file")
    common.add_argument("-m", "--bminus", help="antichain B- file")
    common.add_argument("-H", "--hypergraph", help="hypergraph file")
    common.add_argument("--strategy", choices=STRATEGIES, default="berge")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--stats", action="store_true")

    parser = _Parser(prog="latdual", description="Dualization in lattices given by implicational bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, help_ in (("closure", cmd_closure, "closure of a set"),
                              ("is-closed", cmd_is_closed, "test closedness"),
                              ("ex", cmd_ex, "canonical minimal generating set")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("elements", nargs="*")
        p.set_defaults(func=func)

    p = sub.add_parser("dualize", parents=[common], help="enumerate the dual antichain of B+")
    p.set_defaults(func=cmd_dualize)
    p = sub.add_parser("check-dual", parents=[common], help="decide whether B+ and B- are dual")
    p.set_defaults(func=cmd_check_dual)
    p = sub.add_parser("tr", parents=[common], help="minimal transversals of a hypergraph")
    p.set_defaults(func=cmd_tr)
    p = sub.add_parser("width", parents=[common], help="independent-width of a base")
    p.add_argument("--greedy", action="store_true", help="greedy lower bound only")
    p.set_defaults(func=cmd_width)
    p = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    p.add_argument("what", choices=("closed", "dual", "check"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="instance generators")
    p.add_argument("kind", choices=("fig2", "oit", "random", "interval"))
    p.add_argument("n", type=int, nargs="?", default=3, help="size parameter")
    p.add_argument("-o", "--out", help="output prefix (writes PREFIX.ib, PREFIX.bplus, ...)")
    p.add_argument("-f", "--formula", help="formula file for 'oit'")
    p.add_argument("--m", type=int, default=4, help="implication count for 'random'")
    p.add_argument("--max-premise", type=int, default=2)
    p.add_argument("--antichain", type=int, default=0, help="also draw a random B+ of this size")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except SizeLimitError as exc:
        err.write(f"latdual: {exc}\n")
        return EXIT_RESOURCE
    except LatDualError as exc:
        err.write(f"latdual: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
