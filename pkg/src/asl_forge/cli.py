"""Command-line driver.

Subcommands map onto the library layers: ideal / gb / verify-gb /
init-ideal expose the Groebner side, poset and std-count the
combinatorial side, and verify chains everything into one self-describing
JSON certificate.

Exit codes: 0 all checks passed, 1 a verification failed, 2 bad usage or
malformed input.  Output is deterministic byte-for-byte for a fixed
command line; ASL_FORGE_THREADS caps worker threads (default 1) without
affecting output bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field as dataclass_field

from .asl import (
    POSET_NOTE,
    build_poset,
    count_standard_monomials,
    expected_incomparable_pairs,
    verify_axiom1,
    verify_axiom2,
)
from .groebner import GeneratorSet, buchberger, initial_ideal, is_groebner
from .matrix_ideal import MatrixPattern, build_matrices, product_generators
from .poly_core import CoefficientField

LARGE_N = 8
LARGE_DEGREE = 8

STRAIGHTENING_SKIP_REASON = (
    "straightening-law verification is defined here only for the generic "
    "pattern; Groebner checks still ran")


@dataclass(frozen=True)
class RunConfig:
    n: int
    pattern: MatrixPattern
    degree: int = 4
    fieldspec: CoefficientField = dataclass_field(
        default_factory=CoefficientField.rationals)
    fmt: str = "json"
    output: str | None = None

    @property
    def threads(self) -> int:
        raw = os.environ.get("ASL_FORGE_THREADS", "")
        try:
            return max(1, int(raw))
        except ValueError:
            return 1


def parse_field(text: str) -> CoefficientField:
    t = text.strip().lower()
    if t == "rationals":
        return CoefficientField.rationals()
    if t.startswith("gf(") and t.endswith(")"):
        return CoefficientField.prime(int(t[3:-1]))
    raise ValueError(f"unrecognized field {text!r}: use rationals or gf(p)")


def _pattern_from_args(args: argparse.Namespace) -> MatrixPattern:
    kind = getattr(args, "pattern", "generic")
    mask_text = getattr(args, "mask", None)
    if kind == "zero":
        if mask_text is None:
            raise ValueError("--pattern zero requires --mask")
        try:
            mask = json.loads(mask_text)
            pattern = MatrixPattern.zero_pattern(mask)
        except (TypeError, json.JSONDecodeError) as exc:
            raise ValueError(f"bad mask: {exc}") from None
        if pattern.n != args.n:
            raise ValueError(f"mask is {pattern.n}x{pattern.n} but --n is {args.n}")
        return pattern
    if mask_text is not None:
        raise ValueError("--mask is only meaningful with --pattern zero")
    if kind == "symmetric":
        return MatrixPattern.symmetric(args.n)
    return MatrixPattern.generic(args.n)


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    degree = getattr(args, "degree", 4)
    if degree < 0:
        raise ValueError("--degree must be >= 0")
    if (args.n > LARGE_N or degree > LARGE_DEGREE) and not args.allow_large:
        raise ValueError(
            f"n > {LARGE_N} or degree > {LARGE_DEGREE} needs --allow-large "
            "(enumeration sizes grow combinatorially)")
    return RunConfig(
        n=args.n,
        pattern=_pattern_from_args(args),
        degree=degree,
        fieldspec=parse_field(getattr(args, "field", "rationals")),
        fmt=getattr(args, "format", "json"),
        output=args.output,
    )


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, cfg: RunConfig) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", cfg)


def _ring_and_generators(cfg: RunConfig):
    ctx = cfg.pattern.ring_context(cfg.fieldspec)
    X, Y = build_matrices(cfg.pattern, ctx)
    return ctx, product_generators(X, Y)


def cmd_ideal(cfg: RunConfig) -> int:
    ctx, gens = _ring_and_generators(cfg)
    if cfg.fmt == "text":
        lines = [f"g_{k} = {g}" for k, g in enumerate(gens, start=1)]
        _emit("\n".join(lines) + "\n", cfg)
        return 0
    _emit_json({
        "n": cfg.n,
        "pattern": cfg.pattern.to_json_dict(),
        "field": cfg.fieldspec.name,
        "generators": [g.to_json_list() for g in gens],
    }, cfg)
    return 0


def cmd_gb(cfg: RunConfig) -> int:
    ctx, gens = _ring_and_generators(cfg)
    basis = buchberger(GeneratorSet(ctx, gens))
    if cfg.fmt == "text":
        lines = [f"b_{k} = {g}" for k, g in enumerate(basis, start=1)]
        _emit("\n".join(lines) + "\n", cfg)
        return 0
    _emit_json({
        "n": cfg.n,
        "pattern": cfg.pattern.to_json_dict(),
        "field": cfg.fieldspec.name,
        "basis": basis.to_json_list(),
    }, cfg)
    return 0


def cmd_verify_gb(cfg: RunConfig) -> int:
    ctx, gens = _ring_and_generators(cfg)
    certificate = is_groebner(GeneratorSet(ctx, gens))
    if cfg.fmt == "text":
        verdict = "pass" if certificate.is_basis else "fail"
        lines = [f"verdict: {verdict}"]
        lines += [f"pair ({p.i}, {p.j}): {p.criterion}, "
                  f"remainder_zero={str(p.remainder_zero).lower()}"
                  for p in certificate.pairs]
        _emit("\n".join(lines) + "\n", cfg)
    else:
        _emit_json({
            "verdict": "pass" if certificate.is_basis else "fail",
            "n": cfg.n,
            "pattern": cfg.pattern.to_json_dict(),
            "field": cfg.fieldspec.name,
            "certificate": certificate.to_json_dict(),
        }, cfg)
    return 0 if certificate.is_basis else 1


def cmd_init_ideal(cfg: RunConfig) -> int:
    ctx, gens = _ring_and_generators(cfg)
    basis = buchberger(GeneratorSet(ctx, gens))
    init = initial_ideal(basis)
    if cfg.fmt == "text":
        lines = [str(m) for m in init]
        _emit("\n".join(lines) + "\n", cfg)
        return 0
    _emit_json({
        "n": cfg.n,
        "pattern": cfg.pattern.to_json_dict(),
        "field": cfg.fieldspec.name,
        "generators": init.to_json_list(),
    }, cfg)
    return 0


def cmd_std_count(cfg: RunConfig) -> int:
    by_degree = [count_standard_monomials(cfg.n, d)
                 for d in range(cfg.degree + 1)]
    if cfg.fmt == "text":
        _emit(f"standard monomials of degree {cfg.degree}: {by_degree[-1]} "
              f"(cumulative {sum(by_degree)})\n", cfg)
        return 0
    _emit_json({
        "n": cfg.n,
        "degree": cfg.degree,
        "count": by_degree[-1],
        "cumulative": sum(by_degree),
        "by_degree": by_degree,
    }, cfg)
    return 0


def cmd_poset(cfg: RunConfig) -> int:
    poset = build_poset(cfg.n)
    if cfg.fmt == "dot":
        _emit(poset.to_dot("H"), cfg)
    elif cfg.fmt == "text":
        lines = [f"{a} <= {b}" for a, b in poset.covers()]
        lines += [f"{a} || {b}" for a, b in poset.incomparable_pairs()]
        _emit("\n".join(lines) + "\n", cfg)
    else:
        _emit_json(poset.to_json_dict(), cfg)
    return 0


def _verify_generic(cfg: RunConfig) -> dict:
    ctx, raw = _ring_and_generators(cfg)
    gens = GeneratorSet(ctx, raw)
    certificate = is_groebner(gens)
    sections: dict = {}
    sections["groebner"] = {
        "status": "pass" if certificate.is_basis else "fail",
        "checked": "generators",
        "certificate": certificate.to_json_dict(),
    }

    if certificate.is_basis:
        init = initial_ideal(gens, certificate)
        expected = [ctx.monomial({ctx.x(i, i): 1, ctx.y(i): 1})
                    for i in range(1, cfg.n + 1)]
        init_ok = list(init) == sorted(expected, key=ctx.order.sort_key,
                                       reverse=True)
        sections["initial_ideal"] = {
            "status": "pass" if init_ok else "fail",
            "generators": init.to_json_list(),
            "equals_diagonal_products": init_ok,
        }
    else:
        sections["initial_ideal"] = {"status": "fail",
                                     "reason": "generators are not a basis"}

    if cfg.pattern.kind == "generic":
        poset = build_poset(cfg.n)
        found = poset.incomparable_pairs()
        expected_pairs = expected_incomparable_pairs(cfg.n)
        pairs_ok = ({frozenset(p) for p in found}
                    == {frozenset(p) for p in expected_pairs})
        sections["poset"] = {
            "status": "pass" if pairs_ok else "fail",
            "note": POSET_NOTE,
            "elements": len(poset),
            "incomparable_pairs": [[a.name, b.name] for a, b in found],
            "only_diagonal_pairs_incomparable": pairs_ok,
        }
        sections["axiom1"] = verify_axiom1(cfg.n, cfg.degree, cfg.fieldspec,
                                           threads=cfg.threads)
        sections["axiom2"] = verify_axiom2(cfg.n, cfg.fieldspec)
    else:
        skipped = {"status": "skipped", "reason": STRAIGHTENING_SKIP_REASON}
        sections["poset"] = skipped
        sections["axiom1"] = skipped
        sections["axiom2"] = skipped

    return sections


def _verify_zero_pattern(cfg: RunConfig) -> dict:
    ctx, raw = _ring_and_generators(cfg)
    basis = buchberger(GeneratorSet(ctx, raw))
    certificate = is_groebner(basis)
    sections: dict = {}
    sections["groebner"] = {
        "status": "pass" if certificate.is_basis else "fail",
        "checked": "completed basis",
        "basis": basis.to_json_list(),
        "certificate": certificate.to_json_dict(),
    }
    if certificate.is_basis:
        init = initial_ideal(basis, certificate)
        sections["initial_ideal"] = {
            "status": "pass",
            "generators": init.to_json_list(),
        }
    else:
        sections["initial_ideal"] = {"status": "fail",
                                     "reason": "completion failed the pair check"}
    skipped = {"status": "skipped", "reason": STRAIGHTENING_SKIP_REASON}
    sections["poset"] = skipped
    sections["axiom1"] = skipped
    sections["axiom2"] = skipped
    return sections


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.pattern.kind == "zero_pattern":
        sections = _verify_zero_pattern(cfg)
    else:
        sections = _verify_generic(cfg)

    def section_verdict(s: dict) -> str:
        return s.get("verdict", s.get("status", "fail"))

    ok = all(section_verdict(s) in ("pass", "skipped")
             for s in sections.values())
    report = {
        "verdict": "pass" if ok else "fail",
        "n": cfg.n,
        "pattern": cfg.pattern.to_json_dict(),
        "field": cfg.fieldspec.name,
        "degree_bound": cfg.degree,
        "sections": sections,
    }
    _emit_json(report, cfg)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asl-forge",
        description="Groebner and straightening-law toolkit for the ideal "
                    "of entries of X*Y")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, pattern: bool = False,
               degree: bool = False, formats: tuple[str, ...] = ("json", "text")):
        p.add_argument("--n", type=int, required=True, help="matrix size")
        if pattern:
            p.add_argument("--pattern", choices=("generic", "symmetric", "zero"),
                           default="generic")
            p.add_argument("--mask", help="JSON n-by-n 0/1 (or boolean) matrix; "
                                          "0 entries of X are forced to zero")
            p.add_argument("--field", default="rationals",
                           help="rationals (default) or gf(p)")
        if degree:
            p.add_argument("--degree", type=int, default=4,
                           help="degree bound (default 4)")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--allow-large", action="store_true",
                       help="permit n > 8 or degree > 8")

    handlers = {}

    p = sub.add_parser("ideal", help="print the product generators g_1..g_n")
    common(p, pattern=True)
    handlers["ideal"] = cmd_ideal

    p = sub.add_parser("gb", help="compute the reduced basis")
    common(p, pattern=True)
    handlers["gb"] = cmd_gb

    p = sub.add_parser("verify-gb", help="run the pair check on the generators")
    common(p, pattern=True)
    handlers["verify-gb"] = cmd_verify_gb

    p = sub.add_parser("init-ideal", help="minimal generators of the initial ideal")
    common(p, pattern=True)
    handlers["init-ideal"] = cmd_init_ideal

    p = sub.add_parser("std-count", help="count standard monomials by degree")
    common(p, degree=True)
    handlers["std-count"] = cmd_std_count

    p = sub.add_parser("poset", help="export the variable poset")
    common(p, formats=("json", "dot", "text"))
    handlers["poset"] = cmd_poset

    p = sub.add_parser("verify", help="full verification pipeline")
    common(p, pattern=True, degree=True, formats=())
    handlers["verify"] = cmd_verify

    parser.set_defaults(handlers=handlers)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return args.handlers[args.command](cfg)


def entry() -> None:
    sys.exit(main())
