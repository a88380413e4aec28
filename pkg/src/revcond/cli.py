"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 strategy
failure, 4 malformed certificate file.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certificate import Certificate, CertificateFormatError
from .engine import run_generic, verify_certificate
from .errors import (
    IncompatibleError,
    ParseError,
    PreconditionError,
    SeedError,
    StrategyError,
)
from .oracle import finite_reversibility_scan, witness_conformance
from .structures.random_poset import RandomPoset
from .structures.registry import (
    check_compatible,
    get_structure,
    listed_structures,
    transfers_for,
)
from .strategies import make_strategy, product_lift, subset_lift

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_STRATEGY, EXIT_MALFORMED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _seed_spec(raw):
    if raw is None or raw == "default":
        return None
    try:
        spec = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--seed-spec must be 'default' or a JSON object: {exc}") from None
    if not isinstance(spec, dict) or not all(isinstance(v, str) for v in spec.values()):
        raise UsageError("--seed-spec must map seed names to element encodings")
    return spec


def _report_verification(cert: Certificate) -> int:
    rep = verify_certificate(cert)
    for line in rep.lines():
        print(line)
    print("certificate OK" if rep.ok else "certificate FAILED: " + ", ".join(rep.failed))
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_structures(args) -> int:
    for s in listed_structures():
        d = s.describe()
        if args.json:
            d["transfers"] = transfers_for(s)
            print(json.dumps(d))
            continue
        name = "level-restricted(A)" if s.id.startswith("level-restricted") else s.id
        uses = list(s.strategies) + transfers_for(s)
        print(f"{name} -> {', '.join(uses)}")
        print(f"  capabilities: {', '.join(d['capabilities']) or '-'}")
        print(f"  instantiates: {d['instantiates']}")
    return EXIT_OK


def cmd_run(args) -> int:
    if args.steps < 0:
        raise UsageError("--steps must be >= 0")
    try:
        structure = get_structure(args.structure)
        check_compatible(structure, args.strategy)
        strategy = make_strategy(structure, args.strategy, _seed_spec(args.seed_spec))
    except (ParseError, IncompatibleError, SeedError) as exc:
        raise UsageError(str(exc)) from None
    try:
        cert = run_generic(strategy, args.steps)
    except StrategyError as exc:
        print(f"strategy failure: {exc}", file=sys.stderr)
        return EXIT_STRATEGY
    _emit(cert.dumps(), args.out)
    if args.verify:
        return _report_verification(cert)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = Certificate.read(args.path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.path}") from None
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return _report_verification(cert)
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def cmd_oracle(args) -> int:
    if args.kind == "finite":
        try:
            rep = finite_reversibility_scan(args.max_size)
        except PreconditionError as exc:
            raise UsageError(str(exc)) from None
        print(json.dumps(rep))
        return EXIT_OK if rep["bad"] == 0 else EXIT_VERIFY
    if args.structure is None:
        raise UsageError("oracle witnesses needs --structure")
    try:
        structure = get_structure(args.structure)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    print(f"seed {args.seed}", file=sys.stderr)
    rep = witness_conformance(structure, args.trials, args.seed, fault=args.fault)
    print(json.dumps(rep.to_json()))
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_grow_random(args) -> int:
    rp = RandomPoset(seed=args.seed)
    for _ in range(args.steps):
        rp.grow()
    _emit(json.dumps(rp.state.to_json(), separators=(",", ":")) + "\n", args.out)
    return EXIT_OK


def cmd_lift(args) -> int:
    try:
        source = Certificate.read(args.source)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.source}") from None
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        if args.kind == "product":
            cert = product_lift(source, args.factor or ["z"], args.prefix)
        else:
            cert = subset_lift(source, args.subset, args.prefix)
    except (SeedError, ParseError) as exc:
        raise UsageError(str(exc)) from None
    except StrategyError as exc:
        print(f"lift failure: {exc}", file=sys.stderr)
        return EXIT_STRATEGY
    _emit(cert.dumps(), args.out)
    if args.verify:
        return _report_verification(cert)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="revcond", allow_abbrev=False,
                                 description="Back-and-forth condensations of countable posets.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("structures", allow_abbrev=False, help="list structures and strategies")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_structures)

    p = sub.add_parser("run", allow_abbrev=False, help="run a strategy and write a certificate")
    p.add_argument("--structure", required=True)
    p.add_argument("--strategy", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--seed-spec", default="default")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", allow_abbrev=False, help="verify a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", allow_abbrev=False, help="brute-force oracles")
    p.add_argument("kind", choices=("finite", "witnesses"))
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--structure")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fault", choices=("drop-relation", "corrupt-leq"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("grow-random", allow_abbrev=False, help="dump a grown random-poset fragment")
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_grow_random)

    p = sub.add_parser("lift", allow_abbrev=False, help="transfer a certificate")
    p.add_argument("kind", choices=("product", "subset"))
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--factor", action="append")
    p.add_argument("--subset", default="even", choices=("even", "odd"))
    p.add_argument("--prefix", type=int, default=200)
    p.add_argument("--out")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_lift)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
