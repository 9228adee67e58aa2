"""Command-line entry point: ``ordinal <verb> ...``.

Exit codes: 0 success, 1 domain or parse error, 2 budget exhausted, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from . import classical, enumerate as enum_mod, fundseq, goodstein, hierarchy, inversion
from .errors import BudgetExhausted, OrdinalError
from .terms import Term, chi, compare, degree, format_term, localization, parse, star

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    max_steps: int
    max_bits: int
    max_index: int
    fmt: str = "text"
    sugar: bool = False
    strict: bool = False
    convention: str = "shifted"

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_bits <= 0:
            raise UsageError("budget caps must be positive")
        if self.max_index < 0:
            raise UsageError("max index must be non-negative")

    def budget(self) -> hierarchy.StepBudget:
        return hierarchy.StepBudget(self.max_steps, self.max_bits)


class Output:
    """Collects one result; text mode prints lines, JSON mode one object."""

    def __init__(self, cfg: CliConfig):
        self.cfg = cfg

    def term(self, t: Term) -> str:
        return format_term(t, self.cfg.sugar)

    def emit(self, data: Any, lines: List[str]) -> None:
        if self.cfg.fmt == "json":
            print(json.dumps(data))
        else:
            for line in lines:
                print(line)


def _nat(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return n


def _index_arg(cfg: CliConfig, text: str):
    # fundamental-sequence indices are naturals or terms
    try:
        return _nat(text)
    except argparse.ArgumentTypeError:
        return _term(cfg, text)


def _term(cfg: CliConfig, text: str) -> Term:
    t = parse(text, strict=cfg.strict)
    from .terms import max_index
    if max_index(t) > cfg.max_index:
        raise OrdinalError(f"term uses theta index above ORD_MAX_INDEX={cfg.max_index}")
    return t


# verb handlers: (cfg, out, args) -> None

def _cmd_parse(cfg, out, a):
    t = _term(cfg, a.term)
    out.emit({"term": out.term(t)}, [out.term(t)])


def _cmd_fmt(cfg, out, a):
    t = _term(cfg, a.term)
    s = format_term(t, sugar=True)
    out.emit({"term": s}, [s])


def _cmd_cmp(cfg, out, a):
    c = compare(_term(cfg, a.left), _term(cfg, a.right))
    sym = "<=>"[c + 1]
    out.emit({"cmp": c}, [sym])


def _cmd_fundseq(cfg, out, a):
    t = _term(cfg, a.term)
    r = fundseq.fund_seq(t, _index_arg(cfg, a.zeta))
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_expand(cfg, out, a):
    seq = fundseq.expand(_term(cfg, a.term), a.k, a.steps)
    texts = [out.term(t) for t in seq]
    out.emit({"terms": texts}, texts)


def _cmd_star(cfg, out, a):
    r = star(a.i, _term(cfg, a.term))
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_chi(cfg, out, a):
    v = chi(a.i, _term(cfg, a.term))
    out.emit({"chi": v}, [str(v)])


def _cmd_degree(cfg, out, a):
    v = degree(_term(cfg, a.term))
    out.emit({"degree": v}, [str(v)])


def _cmd_support(cfg, out, a):
    r = fundseq.support(_term(cfg, a.term))
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_localize(cfg, out, a):
    t = _term(cfg, a.term)
    if not t.is_principal:
        raise OrdinalError(f"{a.term} is not a theta term")
    chain = [out.term(x) for x in localization(t.index, t).chain]
    out.emit({"index": t.index, "chain": chain}, chain)


def _cmd_imc(cfg, out, a):
    v = inversion.imc(_term(cfg, a.term))
    out.emit({"imc": v}, [str(v)])


def _cmd_invert(cfg, out, a):
    cands = sorted(inversion.invert_all(_term(cfg, a.term)),
                   key=lambda c: (c.case.value, out.term(c.beta), str(c.zeta)))
    rows = [{"beta": out.term(c.beta),
             "zeta": str(c.zeta) if c.finite else out.term(c.zeta),
             "case": c.case.value} for c in cands]
    out.emit({"candidates": rows},
             [f"{r['case']}\t{r['beta']}\t{r['zeta']}" for r in rows])


def _cmd_member(cfg, out, a):
    v = inversion.member_tk(_term(cfg, a.term), a.k)
    out.emit({"member": v}, ["true" if v else "false"])


def _value(out, key, v):
    out.emit({key: str(v)}, [str(v)])


def _cmd_gk(cfg, out, a):
    _value(out, "value", hierarchy.slow_growing(a.k, _term(cfg, a.term), cfg.budget()))


def _cmd_pk(cfg, out, a):
    r = hierarchy.pred(a.k, _term(cfg, a.term), cfg.budget())
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_hardy(cfg, out, a):
    conv = hierarchy.Convention(a.convention or cfg.convention)
    _value(out, "value", hierarchy.hardy(_term(cfg, a.term), a.x, conv, cfg.budget()))


def _cmd_hk(cfg, out, a):
    _value(out, "value", hierarchy.h_k(a.k, _term(cfg, a.term), cfg.budget()))


def _cmd_takeuti(cfg, out, a):
    r = hierarchy.takeuti_approx(a.n)
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_succ(cfg, out, a):
    r = goodstein.succ_in_quotient(_term(cfg, a.term), a.k)
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_ginv(cfg, out, a):
    r = goodstein.g_inverse(a.n, a.k, cfg.budget())
    out.emit({"term": out.term(r)}, [out.term(r)])


def _cmd_basechange(cfg, out, a):
    if a.classical:
        v = classical.classical_base_change(a.n, a.k, a.l, cfg.budget())
    else:
        v = goodstein.base_change(a.n, a.k, a.l, cfg.budget())
    _value(out, "value", v)


def _cmd_goodstein(cfg, out, a):
    if a.classical:
        trace = classical.classical_goodstein(a.n, a.k, a.max_steps, cfg.budget())
    else:
        trace = goodstein.run(a.n, a.k, a.max_steps, cfg.budget(), sugar=cfg.sugar)
    lines = [f"0\t{trace.base}\t{trace.seed}\t{trace.ordinal}"]
    lines += [f"{s.l}\t{s.base}\t{s.value}\t{s.ordinal}" for s in trace.steps]
    lines.append("terminated" if trace.terminated else
                 "not terminated" + (f" ({trace.note})" if trace.note else ""))
    out.emit(trace.to_dict(), lines)


def _cmd_enumerate(cfg, out, a):
    texts = [out.term(t) for t in enum_mod.enumerate_quotient(a.k, a.count)]
    out.emit({"terms": texts}, texts)


def _cmd_check(cfg, out, a):
    from . import checks
    gen = enum_mod.GenConfig(max_nodes=a.nodes,
                             max_index=cfg.max_index if a.index is None else a.index)
    report = checks.run_suite(a.suite, gen, a.k)
    out.emit(report.to_dict(), report.lines())
    if not report.ok:
        raise _SuiteFailed()


class _SuiteFailed(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ordinal", description="Ordinal notation system T and the generalized Goodstein process.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--sugar", action="store_true", help="print w, Wn and e0 abbreviations")
    p.add_argument("--strict", action="store_true", help="reject non-canonical input")
    p.add_argument("--budget-steps", type=_nat, default=None,
                   help="evaluation step cap (default $ORD_MAX_STEPS or 10^6)")
    p.add_argument("--max-bits", type=_nat, default=hierarchy.DEFAULT_MAX_BITS)
    p.add_argument("--max-index", type=_nat, default=None,
                   help="largest theta index accepted (default $ORD_MAX_INDEX or 2)")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    def verb(name, handler, *args):
        sp = sub.add_parser(name)
        for arg in args:
            arg(sp)
        sp.set_defaults(handler=handler)
        # common flags are also accepted after the verb
        sp.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
        sp.add_argument("--sugar", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--strict", action="store_true", default=argparse.SUPPRESS)
        return sp

    def pos(name, **kw):
        return lambda sp: sp.add_argument(name, **kw)

    term = pos("term")
    k = pos("k", type=_nat)
    verb("parse", _cmd_parse, term)
    verb("fmt", _cmd_fmt, term)
    verb("cmp", _cmd_cmp, pos("left"), pos("right"))
    verb("fundseq", _cmd_fundseq, term, pos("zeta"))
    verb("expand", _cmd_expand, term, k, pos("steps", type=_nat))
    verb("star", _cmd_star, pos("i", type=_nat), term)
    verb("chi", _cmd_chi, pos("i", type=_nat), term)
    verb("degree", _cmd_degree, term)
    verb("support", _cmd_support, term)
    verb("localize", _cmd_localize, term)
    verb("imc", _cmd_imc, term)
    verb("invert", _cmd_invert, term)
    verb("member", _cmd_member, term, k)
    verb("gk", _cmd_gk, k, term)
    verb("pk", _cmd_pk, k, term)
    verb("hardy", _cmd_hardy, term, pos("x", type=_nat),
         lambda sp: sp.add_argument("--convention", choices=["paper", "shifted"]))
    verb("hk", _cmd_hk, k, term)
    verb("takeuti", _cmd_takeuti, pos("n", type=_nat))
    verb("succ", _cmd_succ, term, k)
    verb("ginv", _cmd_ginv, pos("n", type=_nat), k)
    classical_flag = lambda sp: sp.add_argument("--classical", action="store_true")
    verb("basechange", _cmd_basechange, pos("n", type=_nat), k, pos("l", type=_nat),
         classical_flag)
    verb("goodstein", _cmd_goodstein, pos("n", type=_nat), k, classical_flag,
         lambda sp: sp.add_argument("--max-steps", type=_nat, default=100))
    verb("enumerate", _cmd_enumerate, k, pos("count", type=_nat))
    verb("check", _cmd_check,
         lambda sp: sp.add_argument("--suite", required=True,
                                    choices=["order", "bachmann", "imc", "inversion",
                                             "density", "goodstein"]),
         lambda sp: sp.add_argument("--nodes", type=_nat, default=4),
         lambda sp: sp.add_argument("--index", type=_nat, default=None),
         lambda sp: sp.add_argument("--k", type=_nat, default=2))
    return p


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise UsageError("missing verb")
        cfg = CliConfig(
            max_steps=args.budget_steps or _env_int("ORD_MAX_STEPS", hierarchy.DEFAULT_MAX_STEPS),
            max_bits=args.max_bits,
            max_index=args.max_index if args.max_index is not None
            else _env_int("ORD_MAX_INDEX", 2),
            fmt=args.format, sugar=args.sugar, strict=args.strict)
        args.handler(cfg, Output(cfg), args)
        return EXIT_OK
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except _SuiteFailed:
        return EXIT_DOMAIN
    except (OrdinalError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
