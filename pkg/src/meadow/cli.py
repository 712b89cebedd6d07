"""Command-line front end: ``meadow <subcommand> ...``.

Exit codes: 0 success or agreement, 1 semantic failure, 2 usage or parse
error, 3 capability error, 4 unbound variable, 5 resource cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from .equiv import (
    DEFAULT_BOUND,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    AgreeOnlyFinitely,
    CounterexampleFound,
    SampleConfig,
    equiv_random,
    equiv_univariate_exact,
    sample_assignments,
)
from .errors import (
    MeadowError,
    MeadowSyntaxError,
    Multivariate,
    NotAPolynomial,
    NotSigmaM,
    ProofFormatError,
    SizeBudgetExceeded,
    UnboundVariable,
    UnsupportedSymbol,
)
from .numerics import Model, format_rational
from .proofs import Registry, check_proofs, load_corpus, load_proof_file, run_corpus
from .smf import DEFAULT_SIZE_CAP, normalize, render, smf_eval
from .syntax import parse
from .term import evaluate, variables

OK, FAILED, USAGE, CAPABILITY, UNBOUND, RESOURCE = 0, 1, 2, 3, 4, 5

SEED_ENV = "MEADOW_SEED"


class UsageError(Exception):
    pass


def _out(line: str) -> None:
    print(line)


def _diag(line: str) -> None:
    print(line, file=sys.stderr)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _non_negative(text: str) -> int:
    if text.strip() == "0":
        return 0
    return _positive(text)


def _seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _sample_config(args: argparse.Namespace, samples: int | None = None) -> SampleConfig:
    cfg = SampleConfig(samples if samples is not None else args.samples, args.bound, _seed(args))
    _diag(f"seed={cfg.seed}")
    return cfg


def _bindings(pairs: Sequence[str], model: Model) -> dict:
    out = {}
    for pair in pairs:
        name, eq, value = pair.partition("=")
        name = name.strip()
        if not eq or not name:
            raise UsageError(f"binding must look like name=value, got {pair!r}")
        try:
            out[name] = model.parse_scalar(value)
        except ValueError as e:
            raise UsageError(f"bad value for {name}: {e}") from None
    return out


def cmd_eval(args: argparse.Namespace) -> int:
    model = Model.from_name(args.model)
    term = parse(args.expr)
    value = evaluate(term, model, _bindings(args.bind, model))
    _out(model.format(value))
    return OK


def cmd_normalize(args: argparse.Namespace) -> int:
    term = parse(args.expr)
    p = normalize(term, args.smf_size_cap)
    _out(render(p))
    _out(f"level {p.level}")
    _out(f"nodes {p.size}")
    if args.check_samples == 0:
        return OK
    cfg = _sample_config(args, args.check_samples)
    for a in sample_assignments(sorted(variables(term)), cfg):
        direct, via_smf = evaluate(term, assignment=a), smf_eval(p, a)
        if direct != via_smf:
            binds = " ".join(f"{v}={format_rational(q)}" for v, q in sorted(a.items()))
            _out(f"CHECK FAILED {binds} term={format_rational(direct)} smf={format_rational(via_smf)}")
            return FAILED
    _out(f"CHECK PASSED n={cfg.samples}")
    return OK


def cmd_equiv(args: argparse.Namespace) -> int:
    lhs, rhs = parse(args.lhs), parse(args.rhs)
    if args.exact:
        verdict = equiv_univariate_exact(lhs, rhs, args.smf_size_cap)
        _out(verdict.record())
        return FAILED if isinstance(verdict, AgreeOnlyFinitely) else OK
    model = Model.from_name(args.model)
    verdict = equiv_random(lhs, rhs, _sample_config(args), model)
    _out(verdict.record())
    return FAILED if isinstance(verdict, CounterexampleFound) else OK


def _report(report) -> int:
    for line in report.lines():
        _out(line)
    return OK if report.ok else FAILED


def cmd_prove(args: argparse.Namespace) -> int:
    registry = Registry()
    if args.with_corpus:
        base = check_proofs(load_corpus(args.dir), registry)
        if not base.ok:
            _out(f"FAILED corpus: {base.failure}")
            return FAILED
    proofs = []
    for name in args.files:
        path = Path(name)
        if not path.is_file():
            raise UsageError(f"proof file not found: {path}")
        proofs.extend(load_proof_file(path))
    return _report(check_proofs(proofs, registry))


def cmd_corpus(args: argparse.Namespace) -> int:
    sanity = None if args.no_sanity else _sample_config(args)
    try:
        report = run_corpus(args.dir, sanity=sanity)
    except FileNotFoundError as e:
        raise UsageError(str(e)) from None
    code = _report(report)
    if any("NOT-EQUIV" in line for line in report.sanity):
        return FAILED
    return code


def _add_sampling(p: argparse.ArgumentParser, with_samples: bool = True) -> None:
    if with_samples:
        p.add_argument("--samples", type=_positive, default=DEFAULT_SAMPLES, help="number of assignments (default %(default)s)")
    p.add_argument("--bound", type=_positive, default=DEFAULT_BOUND, help="numerator/denominator bound (default %(default)s)")
    p.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV} or {DEFAULT_SEED})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="meadow", description="Exact computation and proof checking for meadows.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term exactly")
    p.add_argument("expr")
    p.add_argument("--bind", action="append", default=[], metavar="VAR=VALUE")
    p.add_argument("--model", default="q0", help="q0 (default) or zp:<prime>")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("normalize", help="print the standard meadow form of a plain-meadow term")
    p.add_argument("expr")
    p.add_argument("--check-samples", type=_non_negative, default=0, metavar="N",
                   help="compare the form with the term at N sampled assignments")
    p.add_argument("--smf-size-cap", type=_positive, default=DEFAULT_SIZE_CAP)
    _add_sampling(p, with_samples=False)
    p.set_defaults(func=cmd_normalize)

    for name, exact in (("equiv", False), ("exceptions", True)):
        p = sub.add_parser(name, help="compare two terms" if not exact else "alias for equiv --exact")
        p.add_argument("lhs")
        p.add_argument("rhs")
        if not exact:
            p.add_argument("--exact", action="store_true", help="exact one-variable decision procedure")
            p.add_argument("--model", default="q0", help="q0 (default) or zp:<prime>")
            _add_sampling(p)
        p.add_argument("--smf-size-cap", type=_positive, default=DEFAULT_SIZE_CAP)
        p.set_defaults(func=cmd_equiv, exact=exact)

    p = sub.add_parser("prove", help="check proof files in the order given")
    p.add_argument("files", nargs="+")
    p.add_argument("--with-corpus", action="store_true", help="make the bundled corpus lemmas available")
    p.add_argument("--dir", default=None, help="corpus directory used by --with-corpus")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("corpus", help="check every proof of a corpus directory")
    p.add_argument("--dir", default=None, help="corpus directory (default: the bundled corpus)")
    p.add_argument("--no-sanity", action="store_true", help="skip the sampled max/min sanity checks")
    _add_sampling(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def _exit_code(e: MeadowError) -> int:
    if isinstance(e, (MeadowSyntaxError, ProofFormatError)):
        return USAGE
    if isinstance(e, (UnsupportedSymbol, NotSigmaM, Multivariate, NotAPolynomial)):
        return CAPABILITY
    if isinstance(e, UnboundVariable):
        return UNBOUND
    if isinstance(e, SizeBudgetExceeded):
        return RESOURCE
    return USAGE


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except UsageError as e:
        _diag(f"error: {e}")
        return USAGE
    except MeadowError as e:
        _diag(f"error: {e}")
        return _exit_code(e)


if __name__ == "__main__":
    sys.exit(main())
