"""Command-line front end: presentation parsing, collection arithmetic,
subgroup operations, property computation, and the verification suite
with text or JSON output.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input
error, 3 resource limit hit.  Diagnostics go to stderr, results to
stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import properties as props
from . import subgroup as sg
from . import theorems as th
from .collector import Group
from .consistency import assert_consistent, check_consistency
from .errors import (BudgetError, InconsistentPresentationError, ParseError,
                     PcGroupError, PreconditionError, PresentationError)
from .presentation import candidate_order, parse, parse_word, render
from .report import bundle

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(args, verified: bool = True):
    """Parse the input file and build its group, optionally requiring the
    overlap checks to pass."""
    P = parse(_read_text(args.file))
    kw = {}
    if getattr(args, "max_steps", None):
        kw["max_steps"] = args.max_steps
    if getattr(args, "max_elements", None):
        kw["max_elements"] = args.max_elements
    g = Group(P, **kw)
    if verified:
        assert_consistent(g)
    return P, g


def _split_words(text: str) -> list:
    """Split a comma-separated word list, ignoring commas inside
    commutator brackets."""
    out, cur, depth = [], [], 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail:
        out.append(tail)
    return [w for w in out if w]


def _eval_words(P, g: Group, text: str) -> list:
    return [g.evaluate(parse_word(w, P, allow_commutators=True))
            for w in _split_words(text)]


def _print_subgroup(P, H: sg.Subgroup):
    print(f"order p^{H.order_log} = {H.order}")
    for row in H.igs_elements():
        print(f"gen {P.render_word(row.as_word())}")


def _build_subgroup(P, g: Group, args) -> sg.Subgroup:
    """Subgroup from --gens (whole group without it), then the optional
    --op composition."""
    if getattr(args, "gens", None):
        H = sg.close(g, _eval_words(P, g, args.gens))
    else:
        H = sg.whole(g)
    op = getattr(args, "op", None)
    if op in (None, "order", "exponent"):
        return H
    if op == "omega":
        if args.i is None:
            raise PreconditionError("--op omega needs --i")
        return sg.omega(H, args.i)
    if op == "agemo":
        if args.j is None:
            raise PreconditionError("--op agemo needs --j")
        return sg.agemo(H, args.j)
    if op == "derived":
        return sg.derived_subgroup(H)
    raise PreconditionError(f"unknown subgroup operation {op!r}")


def _print_report(rep):
    line = f"[{rep.status}] {rep.name}"
    if rep.params:
        pairs = " ".join(f"{k}={rep.params[k]}" for k in sorted(rep.params))
        line += f"  {pairs}"
    line += f"  tested={rep.tested}  ms={int(round(rep.ms))}"
    print(line)
    for w in rep.witnesses:
        print(f"  witness {w}")
    for note in rep.notes:
        print(f"  note {note}")


# -- subcommands -------------------------------------------------------------


def _cmd_parse(args) -> int:
    P = parse(_read_text(args.file))
    print(f"name {P.name or '(unnamed)'}")
    print(f"p {P.p}")
    gens = ", ".join(f"{nm} (order {P.p ** m})"
                     for nm, m in zip(P.names, P.rel_orders))
    print(f"generators [{P.n}] {gens}" if P.n else "generators [0]")
    print(f"power relations {sum(1 for w in P.power_rels.values() if w.letters)}")
    print(f"commutator relations {sum(1 for w in P.comm_rels.values() if w.letters)}")
    e = sum(P.rel_orders)
    print(f"candidate order p^{e} = {candidate_order(P)}")
    return EXIT_PASS


def _cmd_consistency(args) -> int:
    P, g = _load(args, verified=False)
    rep = check_consistency(g)
    _print_report(rep)
    return EXIT_PASS if rep.ok else EXIT_FAIL


def _cmd_order(args) -> int:
    P, g = _load(args)
    print(g.order)
    return EXIT_PASS


def _cmd_nf(args) -> int:
    P, g = _load(args)
    e = g.evaluate(parse_word(args.word, P, allow_commutators=True))
    print(P.render_word(e.as_word()))
    return EXIT_PASS


def _cmd_ord(args) -> int:
    P, g = _load(args)
    e = g.evaluate(parse_word(args.word, P, allow_commutators=True))
    print(g.order_of(e))
    return EXIT_PASS


def _cmd_sub(args) -> int:
    P, g = _load(args)
    if args.op == "order":
        H = _build_subgroup(P, g, args)
        print(H.order)
    elif args.op == "exponent":
        H = _build_subgroup(P, g, args)
        print(sg.exponent(H))
    else:
        _print_subgroup(P, _build_subgroup(P, g, args))
    return EXIT_PASS


def _cmd_pnclass(args) -> int:
    P, g = _load(args)
    H = _build_subgroup(P, g, args)
    c = props.pn_class(H)
    print("none" if c is None else c)
    return EXIT_PASS


def _cmd_chain(args) -> int:
    P, g = _load(args)
    if g.p == 2:
        raise PreconditionError("the chain construction needs an odd prime")
    ctx = th._Ctx(g)
    th._require_powerful(ctx)
    chain = th._chain(ctx, args.i)
    print("chain " + " >= ".join(f"p^{t.order_log}" for t in chain.terms))
    rep = th._check_theorem3_chain(ctx, th.VerifyConfig(), args.i)
    _print_report(rep)
    return EXIT_PASS if rep.ok else EXIT_FAIL


def _parse_mode(text: str):
    """--mode value -> (mode, sample_size or None)."""
    if text == "auto" or text == "exhaustive":
        return text, None
    if text == "sample":
        return "sample", None
    if text.startswith("sample:"):
        tail = text.split(":", 1)[1]
        try:
            n = int(tail)
        except ValueError:
            raise PreconditionError(f"bad sample size {tail!r}") from None
        if n < 1:
            raise PreconditionError("sample size must be >= 1")
        return "sample", n
    raise PreconditionError(f"unknown mode {text!r}")


def _cmd_verify(args) -> int:
    # suites containing the consistency check report failures themselves;
    # any other suite needs a consistent group up front
    verified = args.suite not in ("all", "consistency")
    P, g = _load(args, verified=verified)
    mode, sample = _parse_mode(args.mode)
    cfg = th.VerifyConfig(i_max=args.i_max, j_max=args.j_max, k_max=args.k_max,
                          mode=mode, seed=args.seed)
    if sample is not None:
        cfg.sample_size = sample
    suites = None if args.suite == "all" else [args.suite]
    reports = th.run_suite(g, cfg, suites)
    if args.format == "json":
        doc = bundle(P.name or args.file, g.p, g.order_log_total, reports)
        print(json.dumps(doc, indent=2))
    else:
        for rep in reports:
            _print_report(rep)
    return EXIT_PASS if all(r.ok for r in reports) else EXIT_FAIL


def _cmd_corpus(args) -> int:
    if args.action == "list":
        for name in corpus_mod.corpus_names():
            print(name)
        return EXIT_PASS
    if not args.name:
        raise PreconditionError("corpus emit needs a NAME")
    P = _corpus_build(args)
    sys.stdout.write(render(P))
    return EXIT_PASS


def _corpus_build(args):
    name = args.name
    try:
        return corpus_mod.get(name)
    except PreconditionError:
        pass
    if name == "example1":
        _need(args, "p")
        return corpus_mod.example1(args.p)
    if name == "example2":
        return corpus_mod.example2()
    if name == "example2_odd":
        _need(args, "p")
        return corpus_mod.example2_odd(args.p)
    if name == "abelian":
        _need(args, "p")
        if not args.partition:
            raise PreconditionError("abelian needs --partition M1,M2,...")
        parts = [int(s) for s in args.partition.split(",") if s.strip()]
        return corpus_mod.abelian(args.p, parts)
    if name == "family":
        _need(args, "p")
        for field in ("alpha", "beta", "gamma", "delta"):
            if getattr(args, field) is None:
                raise PreconditionError(f"family needs --{field}")
        return corpus_mod.family(args.p, args.alpha, args.beta, args.gamma,
                                 args.delta)
    raise PreconditionError(f"unknown corpus entry {name!r}")


def _need(args, field):
    if getattr(args, field) is None:
        raise PreconditionError(f"{args.name} needs --{field}")


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pcgroups",
        description="Exact computation in finite p-groups given by "
                    "power-commutator presentations.")
    subs = top.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="presentation file, or - for stdin")
    common.add_argument("--max-steps", type=int, default=None,
                        help="collection step budget per operation")
    common.add_argument("--max-elements", type=int, default=None,
                        help="largest subgroup that may be enumerated")

    sp = subs.add_parser("parse", parents=[common],
                         help="validate a presentation and print a summary")
    sp.set_defaults(func=_cmd_parse)

    sp = subs.add_parser("consistency", parents=[common],
                         help="run the overlap checks")
    sp.set_defaults(func=_cmd_consistency)

    sp = subs.add_parser("order", parents=[common],
                         help="group order (requires consistency)")
    sp.set_defaults(func=_cmd_order)

    sp = subs.add_parser("nf", parents=[common], help="collected normal form")
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=_cmd_nf)

    sp = subs.add_parser("ord", parents=[common], help="element order")
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=_cmd_ord)

    subgroup_opts = argparse.ArgumentParser(add_help=False)
    subgroup_opts.add_argument("--gens", default=None,
                               help="comma-separated generating words")
    subgroup_opts.add_argument("--op", default=None,
                               choices=["omega", "agemo", "derived",
                                        "exponent", "order"])
    subgroup_opts.add_argument("--i", type=int, default=None)
    subgroup_opts.add_argument("--j", type=int, default=None)

    sp = subs.add_parser("sub", parents=[common, subgroup_opts],
                         help="subgroup closure and operations on it")
    sp.set_defaults(func=_cmd_sub)

    sp = subs.add_parser("pnclass", parents=[common, subgroup_opts],
                         help="powerful nilpotency class of a subgroup")
    sp.set_defaults(func=_cmd_pnclass)

    sp = subs.add_parser("chain", parents=[common],
                         help="build and verify the descending chain")
    sp.add_argument("--i", type=int, required=True)
    sp.set_defaults(func=_cmd_chain)

    sp = subs.add_parser("verify", parents=[common],
                         help="run verification suites")
    sp.add_argument("--suite", default="all",
                    choices=["all", "consistency", "thm1", "lemma-p", "prop",
                             "shorten", "chain", "main"])
    sp.add_argument("--i-max", type=int, default=4)
    sp.add_argument("--j-max", type=int, default=4)
    sp.add_argument("--k-max", type=int, default=4)
    sp.add_argument("--mode", default="auto",
                    help="auto, exhaustive, or sample:N")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", default="text", choices=["text", "json"])
    sp.set_defaults(func=_cmd_verify)

    sp = subs.add_parser("corpus", help="built-in presentation families")
    sp.add_argument("action", choices=["list", "emit"])
    sp.add_argument("name", nargs="?", default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--partition", default=None)
    sp.add_argument("--alpha", type=int, default=None)
    sp.add_argument("--beta", type=int, default=None)
    sp.add_argument("--gamma", type=int, default=None)
    sp.add_argument("--delta", type=int, default=None)
    sp.set_defaults(func=_cmd_corpus)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if not exc.code else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, PresentationError, PreconditionError,
            InconsistentPresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PcGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
