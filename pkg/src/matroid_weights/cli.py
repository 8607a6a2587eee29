"""Command-line front end.

Commands operate on one input source: a family descriptor, a matrix /
bases / blocks file, or stdin (format sniffed from the first line).  Matrix
inputs are codes and resolve to the parity-check matroid, the object whose
weight hierarchy equals the code's; bases and blocks inputs are matroids
and are used as given.  Rational outputs are exact {num, den} pairs.

Exit codes: 0 success, 2 validation or parse error, 3 enumeration guard
exceeded, 4 unknown command.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import algebra, codes, configurations, families, symbolic, weights
from .errors import (
    BadParams,
    GuardExceeded,
    MatroidWeightsError,
    ParseError,
)
from .matroid import Matroid, format_bases_text, parse_bases_text

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GUARD = 3
EXIT_BAD_COMMAND = 4

COMMANDS = ("ghw", "alpha", "waldschmidt", "classify", "rees", "config",
            "code", "family", "sweep")

FAMILY_HELP = """\
family descriptors:
  vamos                      Vamos matroid (rank 4 on 8 elements)
  uniform:K,N                parity-check matroid U_{N-K,N} of an MDS [N,K] code
  uniform_matroid:K,N        the uniform matroid U_{K,N} itself
  steiner_fano               matroid of the S(2,3,7) Steiner triple system
  reed_muller:Q,M            first-order Reed-Muller code over GF(Q) on Q^M points
  dual_hamming:M             binary dual Hamming code of order M
  ci:Q,N1,N2,...             block complete-intersection code over GF(Q)
  all_ones:Q,K,L             all-ones-block code over GF(Q)
  constant_weight_example    the [13,3] ternary constant-weight-9 code
  constant_weight:Q,K,D      closed-form weight hierarchy (sequence only)
  seq:D1,D2,...              a literal weight sequence
"""


@dataclass
class Target:
    """Resolved input: what a command actually computes on."""

    label: str
    matroid: Matroid | None = None
    code: codes.LinearCode | None = None
    sequence: weights.GhwSequence | None = None

    def require_matroid(self) -> Matroid:
        if self.matroid is None:
            raise BadParams(f"{self.label}: this command needs a matroid or code input")
        return self.matroid

    def require_code(self) -> codes.LinearCode:
        if self.code is None:
            raise BadParams(f"{self.label}: this command needs a code input")
        return self.code

    def ghw_values(self, guard: int | None) -> weights.GhwSequence:
        if self.sequence is not None:
            return self.sequence
        return weights.ghw(self.require_matroid(), guard)


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise BadParams(f"{what}: expected comma-separated integers, got {text!r}")


def _field_from_q(q: int) -> algebra.FieldSpec:
    p, e = families.prime_power(q)
    return algebra.make_field(p, e)


def resolve_family(desc: str) -> Target:
    name, _, params = desc.partition(":")
    if name == "vamos":
        return Target(desc, matroid=families.vamos())
    if name == "uniform":
        k, n = _unpack(desc, _parse_ints(params, desc), 2)
        if not 1 <= k < n:
            raise BadParams(f"{desc}: need 1 <= K < N")
        return Target(desc, matroid=families.uniform(n - k, n))
    if name == "uniform_matroid":
        k, n = _unpack(desc, _parse_ints(params, desc), 2)
        return Target(desc, matroid=families.uniform(k, n))
    if name == "steiner_fano":
        return Target(desc, matroid=families.steiner_matroid(families.fano_steiner()))
    if name == "reed_muller":
        q, m = _unpack(desc, _parse_ints(params, desc), 2)
        return _code_target(desc, families.reed_muller_code(_field_from_q(q), m))
    if name == "dual_hamming":
        (m,) = _unpack(desc, _parse_ints(params, desc), 1)
        return _code_target(desc, families.dual_hamming_code(m))
    if name == "ci":
        vals = _parse_ints(params, desc)
        if len(vals) < 3:
            raise BadParams(f"{desc}: need a field size and at least two block sizes")
        return _code_target(
            desc,
            families.complete_intersection_code(_field_from_q(vals[0]), vals[1:]),
        )
    if name == "all_ones":
        q, k, ell = _unpack(desc, _parse_ints(params, desc), 3)
        return _code_target(desc, families.all_ones_code(_field_from_q(q), k, ell))
    if name == "constant_weight_example":
        return _code_target(desc, families.constant_weight_example_code())
    if name == "constant_weight":
        q, k, d = _unpack(desc, _parse_ints(params, desc), 3)
        return Target(desc, sequence=families.constant_weight_ghw(q, k, d))
    if name == "seq":
        vals = _parse_ints(params, desc)
        return Target(desc, sequence=weights.GhwSequence(tuple(vals), source="literal"))
    raise BadParams(f"unknown family {name!r}\n{FAMILY_HELP}")


def _unpack(desc: str, vals: list[int], count: int) -> list[int]:
    if len(vals) != count:
        raise BadParams(f"{desc}: expected {count} parameters, got {len(vals)}")
    return vals


def _code_target(label: str, c: codes.LinearCode) -> Target:
    return Target(label, matroid=c.matroid().dual(), code=c)


def _sniff_and_parse(text: str, label: str) -> Target:
    first = ""
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            first = s
            break
    toks = first.split()
    if toks and toks[0] == "q":
        c = codes.LinearCode(algebra.parse_matrix_text(text))
        return _code_target(label, c)
    if toks and toks[0] == "n" and len(toks) == 6:
        return Target(label, matroid=families.steiner_matroid(families.parse_blocks_text(text)))
    if toks and toks[0] == "n":
        return Target(label, matroid=parse_bases_text(text))
    raise ParseError(f"{label}: cannot identify input format from first line {first!r}")


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")


def add_input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="family descriptor (see 'mw family --list')")
    group.add_argument("--matrix", help="generator matrix file (code input)")
    group.add_argument("--bases", help="bases file (matroid input)")
    group.add_argument("--blocks", help="Steiner blocks file (matroid input)")
    group.add_argument("--stdin", action="store_true", help="read input from stdin, format sniffed")
    parser.add_argument("--dual", action="store_true",
                        help="replace the resolved matroid by its dual")


def add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--unsafe-n", type=int, default=None, metavar="N",
                        help="raise the enumeration guard to N elements")


def resolve_target(args) -> Target:
    if args.family:
        target = resolve_family(args.family)
    elif args.matrix:
        target = _code_target(args.matrix, codes.LinearCode(algebra.parse_matrix_text(_read_file(args.matrix))))
    elif args.bases:
        target = Target(args.bases, matroid=parse_bases_text(_read_file(args.bases)))
    elif args.blocks:
        target = Target(
            args.blocks,
            matroid=families.steiner_matroid(families.parse_blocks_text(_read_file(args.blocks))),
        )
    else:
        target = _sniff_and_parse(sys.stdin.read(), "stdin")
    if getattr(args, "dual", False):
        m = target.require_matroid()
        target = Target(f"dual({target.label})", matroid=m.dual())
    return target


def _frac_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _emit(args, payload: dict, text: str) -> int:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


# --- commands ------------------------------------------------------------------

def cmd_ghw(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(prog="mw ghw", description="generalized Hamming weights")
    add_input_options(parser)
    add_common_options(parser)
    args = parser.parse_args(argv)
    target = resolve_target(args)
    seq = target.ghw_values(args.unsafe_n)
    report = weights.classify(seq)
    payload = {
        "command": "ghw",
        "input": target.label,
        "d": list(seq.values),
        "subadditive": report.is_subadditive,
        "extended_subadditive": report.is_extended_subadditive,
        "witnesses": list(report.witnesses),
    }
    text = "d = ({})  subadditive={}  extended={}".format(
        ", ".join(map(str, seq.values)),
        report.is_subadditive,
        report.is_extended_subadditive,
    )
    return _emit(args, payload, text)


def cmd_alpha(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="mw alpha", description="initial degree of the s-th symbolic power"
    )
    add_input_options(parser)
    add_common_options(parser)
    parser.add_argument("--s", type=int, required=True, help="symbolic power order")
    parser.add_argument("--oracle", action="store_true",
                        help="also run the brute-force oracle and compare")
    args = parser.parse_args(argv)
    if args.s < 1:
        raise BadParams(f"--s must be >= 1, got {args.s}")
    target = resolve_target(args)
    seq = target.ghw_values(args.unsafe_n)
    value, counts = symbolic.alpha_fast_witness(seq, args.s)
    payload = {
        "command": "alpha",
        "input": target.label,
        "s": args.s,
        "alpha": value,
        "witness_counts": list(counts),
    }
    text = str(value)
    if args.oracle:
        oracle = symbolic.alpha_oracle(target.require_matroid(), args.s, args.unsafe_n)
        payload["oracle"] = oracle
        payload["oracle_agrees"] = oracle == value
        text = f"{value} (oracle {oracle}, {'agree' if oracle == value else 'DISAGREE'})"
    return _emit(args, payload, text)


def cmd_waldschmidt(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(prog="mw waldschmidt", description="Waldschmidt constant")
    add_input_options(parser)
    add_common_options(parser)
    args = parser.parse_args(argv)
    target = resolve_target(args)
    seq = target.ghw_values(args.unsafe_n)
    w = symbolic.waldschmidt_of_sequence(seq)
    payload = {"command": "waldschmidt", "input": target.label,
               "waldschmidt": _frac_json(w)}
    return _emit(args, payload, f"{w.numerator}/{w.denominator}" if w.denominator != 1 else str(w.numerator))


def cmd_classify(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="mw classify", description="subadditivity classification of the weight sequence"
    )
    add_input_options(parser)
    add_common_options(parser)
    args = parser.parse_args(argv)
    target = resolve_target(args)
    seq = target.ghw_values(args.unsafe_n)
    report = weights.classify(seq)
    payload = {
        "command": "classify",
        "input": target.label,
        "d": list(seq.values),
        "subadditive_terms": list(report.subadditive_term),
        "strictly_subadditive_terms": list(report.strictly_subadditive_term),
        "subadditive": report.is_subadditive,
        "extended_subadditive": report.is_extended_subadditive,
        "witnesses": list(report.witnesses),
    }
    lines = [
        "d = ({})".format(", ".join(map(str, seq.values))),
        f"subadditive terms:          {report.subadditive_term}",
        f"strictly subadditive terms: {report.strictly_subadditive_term}",
        f"subadditive={report.is_subadditive}  extended={report.is_extended_subadditive}",
    ]
    for w in report.witnesses:
        lines.append(f"violated: {w}")
    return _emit(args, payload, "\n".join(lines))


def cmd_rees(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="mw rees", description="symbolic Rees algebra generators (support, order)"
    )
    add_input_options(parser)
    add_common_options(parser)
    args = parser.parse_args(argv)
    target = resolve_target(args)
    gens = symbolic.rees_generators(target.require_matroid(), args.unsafe_n)
    payload = {
        "command": "rees",
        "input": target.label,
        "generators": [{"support": list(g.support), "order": g.order} for g in gens],
    }
    text = "\n".join(
        "order {}: {{{}}}".format(g.order, ", ".join(map(str, g.support))) for g in gens
    )
    return _emit(args, payload, text)


def _parse_delta(spec_text: str, n: int) -> list[int]:
    if spec_text.startswith("const:"):
        try:
            c = int(spec_text[len("const:"):])
        except ValueError:
            raise BadParams(f"--delta {spec_text!r}: constant must be an integer")
        return [c] * n
    toks = _read_file(spec_text).split()
    try:
        out = [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"degree file {spec_text}: entries must be integers")
    return out


def cmd_config(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="mw config",
        description="matroid configuration invariants under a degree assignment",
    )
    add_input_options(parser)
    add_common_options(parser)
    parser.add_argument("--delta", required=True, metavar="FILE|const:C",
                        help="degrees of the specializing forms")
    parser.add_argument("--points", action="store_true",
                        help="the specialization cuts out points (enables the points-case bounds)")
    args = parser.parse_args(argv)
    target = resolve_target(args)
    m = target.require_matroid()
    delta = _parse_delta(args.delta, m.n)
    inv = configurations.specialized_invariants(m, delta, args.unsafe_n)
    bounds = []
    if len(set(delta)) == 1:
        report = configurations.resurgence_bounds(m, delta, args.points, args.unsafe_n)
        bounds = [
            {"name": b.name, "kind": b.kind, **_frac_json(b.value)} for b in report.bounds
        ]
    payload = {
        "command": "config",
        "input": target.label,
        "alpha": inv.alpha,
        "waldschmidt": _frac_json(inv.waldschmidt),
        "regularity": inv.regularity,
        "bounds": bounds,
    }
    lines = [
        f"alpha = {inv.alpha}",
        f"waldschmidt = {inv.waldschmidt}",
        f"regularity = {inv.regularity}",
    ]
    for b in bounds:
        lines.append(f"{b['kind']:>12}  {b['num']}/{b['den']}  ({b['name']})")
    return _emit(args, payload, "\n".join(lines))


def cmd_code(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(prog="mw code", description="linear code computations")
    parser.add_argument("sub", choices=["ghw", "dual", "mindist"])
    add_input_options(parser)
    add_common_options(parser)
    parser.add_argument("--r", type=int, default=None,
                        help="single weight index for 'ghw' (default: whole hierarchy)")
    args = parser.parse_args(argv)
    target = resolve_target(args)
    c = target.require_code()
    if args.sub == "ghw":
        if args.r is not None:
            value = codes.ghw_wei(c, args.r, args.unsafe_n)
            payload = {"command": "code_ghw", "input": target.label, "r": args.r, "d": value}
            return _emit(args, payload, str(value))
        seq = codes.ghw_wei_sequence(c, args.unsafe_n)
        payload = {"command": "code_ghw", "input": target.label, "d": list(seq)}
        return _emit(args, payload, "d = ({})".format(", ".join(map(str, seq))))
    if args.sub == "dual":
        dual = codes.dual_code(c)
        text = algebra.format_matrix_text(dual.gen)
        payload = {"command": "code_dual", "input": target.label, "matrix": text}
        return _emit(args, payload, text.rstrip("\n"))
    value = codes.min_distance(c, args.unsafe_n)
    payload = {"command": "code_mindist", "input": target.label, "d": value}
    return _emit(args, payload, str(value))


def cmd_family(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="mw family",
        description="materialize a named family to the standard file formats",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("name", nargs="?", help="family descriptor")
    parser.add_argument("--list", action="store_true", help="list descriptors")
    emit = parser.add_mutually_exclusive_group()
    emit.add_argument("--emit-matrix", action="store_true")
    emit.add_argument("--emit-bases", action="store_true")
    emit.add_argument("--emit-blocks", action="store_true")
    add_common_options(parser)
    args = parser.parse_args(argv)
    if args.list or not args.name:
        print(FAMILY_HELP, end="")
        return EXIT_OK
    if args.emit_blocks:
        if args.name != "steiner_fano":
            raise BadParams(f"{args.name}: only steiner_fano has a blocks form")
        text = families.format_blocks_text(families.fano_steiner())
        return _emit(args, {"command": "family", "input": args.name, "blocks": text}, text.rstrip("\n"))
    target = resolve_family(args.name)
    if args.emit_matrix or (not args.emit_bases and target.code is not None):
        c = target.require_code()
        text = algebra.format_matrix_text(c.gen)
        return _emit(args, {"command": "family", "input": args.name, "matrix": text}, text.rstrip("\n"))
    m = target.require_matroid()
    text = format_bases_text(m, args.unsafe_n)
    return _emit(args, {"command": "family", "input": args.name, "bases": text}, text.rstrip("\n"))


def cmd_sweep(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="mw sweep",
        description="classification flags and the reciprocal-Waldschmidt check "
                    "over a batch of instances",
    )
    parser.add_argument("descriptors", nargs="+", help="family descriptors")
    add_common_options(parser)
    args = parser.parse_args(argv)
    rows = []
    for desc in sorted(set(args.descriptors)):
        target = resolve_family(desc)
        seq = target.ghw_values(args.unsafe_n)
        report = weights.classify(seq)
        row = {
            "instance": desc,
            "d": list(seq.values),
            "subadditive": report.is_subadditive,
            "extended_subadditive": report.is_extended_subadditive,
            "waldschmidt": _frac_json(symbolic.waldschmidt_of_sequence(seq)),
            "dual_waldschmidt": None,
            "reciprocal_sum_is_one": None,
        }
        if target.matroid is not None:
            w = symbolic.waldschmidt(target.matroid, args.unsafe_n)
            wd = symbolic.waldschmidt(target.matroid.dual(), args.unsafe_n)
            row["waldschmidt"] = _frac_json(w)
            row["dual_waldschmidt"] = _frac_json(wd)
            row["reciprocal_sum_is_one"] = (1 / w + 1 / wd) == 1
        rows.append(row)
    payload = {"command": "sweep", "rows": rows}
    lines = []
    for row in rows:
        w = row["waldschmidt"]
        wtxt = f"{w['num']}/{w['den']}"
        if row["dual_waldschmidt"] is not None:
            dw = row["dual_waldschmidt"]
            wtxt += f" dual={dw['num']}/{dw['den']} recip1={row['reciprocal_sum_is_one']}"
        lines.append(
            "{instance}: d={d} sub={subadditive} ext={extended_subadditive} wald={w}".format(
                w=wtxt, **row
            )
        )
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_OK


DISPATCH = {
    "ghw": cmd_ghw,
    "alpha": cmd_alpha,
    "waldschmidt": cmd_waldschmidt,
    "classify": cmd_classify,
    "rees": cmd_rees,
    "config": cmd_config,
    "code": cmd_code,
    "family": cmd_family,
    "sweep": cmd_sweep,
}

USAGE = """\
usage: mw COMMAND [options]

commands:
  ghw          generalized Hamming weights of a matroid or code
  alpha        initial degree of a symbolic power (--s S, optional --oracle)
  waldschmidt  exact Waldschmidt constant
  classify     subadditivity flags and witnesses
  rees         symbolic Rees algebra generators
  config       matroid-configuration invariants (--delta, --points)
  code         code-level operations: ghw, dual, mindist
  family       materialize a named family (--emit-matrix/-bases/-blocks)
  sweep        batch classification over family descriptors

Use 'mw COMMAND --help' for details.  The MW_GUARD_N environment variable
or --unsafe-n raises the enumeration guard (default 24 elements).
"""


def _error_payload(exc: Exception, code: int) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc), "exit": code}}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if not argv or argv[0] in ("-h", "--help"):
        print(USAGE, end="")
        return EXIT_OK
    command, rest = argv[0], argv[1:]
    if command not in DISPATCH:
        print(f"mw: unknown command {command!r}", file=sys.stderr)
        print(USAGE, end="", file=sys.stderr)
        return EXIT_BAD_COMMAND
    wants_json = "--json" in rest
    try:
        return DISPATCH[command](rest)
    except SystemExit as exc:  # argparse's own exits (bad flags, --help)
        return int(exc.code or 0)
    except GuardExceeded as exc:
        if wants_json:
            print(json.dumps(_error_payload(exc, EXIT_GUARD), sort_keys=True))
        print(f"mw {command}: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (MatroidWeightsError, ValueError, ZeroDivisionError) as exc:
        if wants_json:
            print(json.dumps(_error_payload(exc, EXIT_VALIDATION), sort_keys=True))
        print(f"mw {command}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
