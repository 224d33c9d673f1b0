"""Command-line driver.

Every command prints sorted-key JSON to stdout (or to --out).  Exit codes:
0 success, 1 usage or input errors, 2 budget errors, 3 parameter-condition
errors.
"""
import argparse
import json
import re
import sys

from . import __version__, config
from .algebra import parse_mode
from .basis import graded_basis
from .characters import CellCache, CharacterTable, Window, character, compare_characters, \
    flowed_character_table
from .errors import BudgetError, EngineError, ParameterConditionError
from .lattice import (build_wl, cocycle, flow_profile, generator_label, lattice, target_matches,
                      unflowed_profile)
from .modules import FAMILIES, Quotient
from .scalars import format_scalar, to_scalar
from .serialize import (dumps, extension_to_json, singular_to_json, spec_from_json, spec_to_json,
                        vector_from_json, vector_to_json)
from .singular import A_SIDE, B_SIDE, oracle_singular, solve_closed_form, verify_singular
from .straighten import act
from .vectors import ModuleVector
from .voa import VACUUM0, check_borcherds, check_virasoro, omega, va

_MODE_RE = re.compile(r"\s*([abcd])\(\s*(-?\d+)\s*\)\s*|\s*(K)\s*")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# argument parsing helpers

def parse_spec(text: str):
    """A spec from inline JSON, @file, or the short form FAMILY(k=v, ...)."""
    if text is None:
        raise UsageError("this command needs --spec")
    text = text.strip()
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return spec_from_json(json.load(fh))
    if text.startswith("{"):
        return spec_from_json(json.loads(text))
    m = re.fullmatch(r"([A-Z0-9_]+)\s*(?:\((.*)\))?", text)
    if not m:
        raise UsageError(f"cannot parse spec {text!r}")
    family, body = m.group(1), m.group(2) or ""
    obj = {"family": family}
    for part in filter(None, (p.strip() for p in body.split(","))):
        if "=" not in part:
            raise UsageError(f"spec parameters are name=value, got {part!r}")
        k, v = (s.strip() for s in part.split("=", 1))
        obj[k] = v
    if family != "VACUUM" and family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    return spec_from_json(obj)


def parse_word(text: str) -> tuple:
    """'a(-1) b(-1)' or 'a(-1)b(-1)' -> tuple of modes, in the order written."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _MODE_RE.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse mode word {text!r}")
        out.append(parse_mode(m.group(0).strip()))
        pos = m.end()
    return tuple(out)


def parse_va(text: str) -> ModuleVector:
    """A V(1,0) vector: 'omega', '1', a PBW word such as 'c(-1)d(-1)', or vector JSON."""
    text = text.strip()
    if text == "omega":
        return omega()
    if text == "1":
        return va()
    if text.startswith("{") or text.startswith("@"):
        v = _load_vector(text)
        if v.spec != VACUUM0:
            raise UsageError("field vectors must live in VACUUM(0)")
        return v
    return va(parse_word(text))


def _load_json(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return json.load(fh)
    if text.startswith("{"):
        return json.loads(text)
    with open(text, encoding="utf-8") as fh:
        return json.load(fh)


def _load_vector(text: str) -> ModuleVector:
    return vector_from_json(_load_json(text))


def parse_pair(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def parse_range(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"expected lo:hi, got {text!r}")
    return int(parts[0]), int(parts[1])


def _basis_json(spec, word, label):
    return {"base": {"idx": label} if spec.indexed else "HW",
            "word": [[x.symbol, x.n] for x in word]}


def _jsonable(obj):
    """Turn rationals, specs and tuples inside command results into JSON values."""
    from .modules import ModuleSpec

    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, ModuleSpec):
        return spec_to_json(obj)
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return format_scalar(obj)


def _window(args, default_degree=3):
    charges = parse_range(args.charges) if args.charges else None
    return Window(args.max_degree if args.max_degree is not None else default_degree,
                  charges, args.kappa)


# commands

def cmd_build(args):
    spec = parse_spec(args.spec)
    inner = spec.inner if isinstance(spec, Quotient) else spec
    window = _window(args)
    from .characters import window_cells

    cells = []
    for cell in window_cells(spec, window):
        basis = graded_basis(inner, cell, window.kappa)
        if basis:
            cells.append({"cell": list(cell), "basis": [_basis_json(inner, w, l) for w, l in basis]})
    return {"spec": spec_to_json(spec), "window": window.to_json(spec), "cells": cells}


def cmd_act(args):
    v = _load_vector(args.vector)
    word = parse_word(args.word)
    for x in reversed(word):
        v = act(v.spec, x, v)
    return vector_to_json(v)


def cmd_singular(args):
    spec = parse_spec(args.spec) if not args.verify else None
    if args.closed_form:
        side = {"B": B_SIDE, "B_SIDE": B_SIDE, "A": A_SIDE, "A_SIDE": A_SIDE}[args.side.upper()]
        base = args.base if args.base is not None else 0
        shift = to_scalar(args.shift) if args.shift is not None else None
        sv = solve_closed_form(spec, side, args.n, args.k, base=base, shift=shift)
        return singular_to_json(sv)
    if args.oracle:
        if not args.cell:
            raise UsageError("--oracle needs --cell D,Q")
        basis = oracle_singular(spec, parse_pair(args.cell), args.kappa)
        return {"spec": spec_to_json(spec), "cell": list(parse_pair(args.cell)),
                "kappa": args.kappa, "dimension": len(basis),
                "basis": [vector_to_json(v) for v in basis]}
    if args.verify:
        if not args.vector:
            raise UsageError("--verify needs --vector")
        v = _load_vector(args.vector)
        return singular_to_json(verify_singular(v.spec, v))
    raise UsageError("choose one of --closed-form, --oracle, --verify")


def cmd_virasoro(args):
    spec = parse_spec(args.spec)
    lo, hi = parse_range(args.m_range)
    charges = parse_range(args.charges) if args.charges else None
    return check_virasoro(spec, args.max_degree, range(lo, hi + 1), args.kappa, charges).to_json()


def cmd_borcherds(args):
    spec = parse_spec(args.spec)
    u, v = parse_va(args.u), parse_va(args.v)
    return check_borcherds(spec, u, v, args.p, args.q, parse_pair(args.cell), args.kappa).to_json()


def cmd_flow(args):
    spec = parse_spec(args.spec)
    alpha = lattice(parse_pair(args.alpha))
    profile = flow_profile(spec, alpha)
    target = profile["target"]
    out = {"alpha": list(alpha), "spec": spec_to_json(spec),
           "profile": _jsonable({k: v for k, v in profile.items() if k not in ("target", "spec")})}
    if target is not None:
        out["target"] = spec_to_json(target)
        out["target_profile"] = _jsonable(unflowed_profile(target))
        out["matches_target"] = target_matches(profile, target)
        if args.max_degree is not None:
            window = Window(args.max_degree, parse_range(args.charges or "-2:2"), None)
            table, _, checked = flowed_character_table(spec, alpha, window)
            ref = character(target, window)
            out["character"] = table.to_json()
            out["eigen_checked"] = checked
            out["character_comparison"] = compare_characters(table, ref)
    return out


def cmd_extend(args):
    spec = parse_spec(args.spec)
    handle = build_wl(spec)
    u = parse_va(args.u)
    w = _load_vector(args.w) if args.w else ModuleVector.base(handle.spec, generator_label(handle.spec))
    result = handle.mode(parse_pair(args.alpha), u, args.n, parse_pair(args.beta), w)
    out = extension_to_json(result)
    out["cocycle"] = cocycle(parse_pair(args.alpha), parse_pair(args.beta))
    return out


def cmd_character(args):
    spec = parse_spec(args.spec)
    cache = CellCache(args.cache_dir) if args.cache_dir else None
    table = character(spec, _window(args), cache=cache, workers=args.workers)
    out = table.to_json()
    if table.window["charges"] is None:
        out["by_degree"] = table.by_degree()
    return out


def cmd_compare(args):
    first = CharacterTable.from_json(_load_json(args.first))
    second = CharacterTable.from_json(_load_json(args.second))
    return compare_characters(first, second)


def _common(parser, default):
    # global options, accepted before or after the command name
    parser.add_argument("--config", default=default, help="JSON config file (cell_cap, windows)")
    parser.add_argument("--out", default=default, help="write the JSON result to this file")
    parser.add_argument("--workers", type=int, default=1 if default is None else default,
                        help="worker threads for cell computations")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nappiwitten", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    _common(p, None)
    common = _Parser(add_help=False)
    _common(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **k: _add(*a, parents=[common], **k)

    def windowed(sp, degree=True):
        if degree:
            sp.add_argument("--max-degree", type=int)
        sp.add_argument("--charges", help="charge window lo:hi")
        sp.add_argument("--kappa", type=int, help="grading: degree = natural - kappa*charge")

    sp = sub.add_parser("build", help="list graded bases over a window")
    sp.add_argument("--spec", required=True)
    windowed(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("act", help="apply a word of modes to a vector")
    sp.add_argument("--vector", required=True, help="vector JSON, @file or a path")
    sp.add_argument("--word", required=True, help="e.g. 'a(1) b(-1)'; the rightmost mode acts first")
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("singular", help="closed-form, oracle or verification of singular vectors")
    sp.add_argument("--spec")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--closed-form", action="store_true")
    mode.add_argument("--oracle", action="store_true")
    mode.add_argument("--verify", action="store_true")
    sp.add_argument("--side", default="B")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--base", type=int, help="base index j for THIRD")
    sp.add_argument("--shift", help="override the shift parameter s")
    sp.add_argument("--cell", help="D,Q")
    sp.add_argument("--kappa", type=int)
    sp.add_argument("--vector")
    sp.set_defaults(func=cmd_singular)

    sp = sub.add_parser("virasoro-check", help="check the Virasoro relations on a window")
    sp.add_argument("--spec", default="VACUUM(d=0)")
    sp.add_argument("--max-degree", type=int, default=3)
    sp.add_argument("--m-range", default="-3:3")
    sp.add_argument("--charges", help="charge window lo:hi")
    sp.add_argument("--kappa", type=int)
    sp.set_defaults(func=cmd_virasoro)

    sp = sub.add_parser("borcherds-check", help="check the commutator formula on a cell")
    sp.add_argument("--spec", default="VACUUM(d=0)")
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--cell", required=True, help="D,Q")
    sp.add_argument("--kappa", type=int)
    sp.set_defaults(func=cmd_borcherds)

    sp = sub.add_parser("flow", help="spectral-flow profile of a module")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--alpha", required=True, help="m1,m2")
    sp.add_argument("--max-degree", type=int, help="also compare characters up to this degree")
    sp.add_argument("--charges", help="charge window lo:hi (default -2:2)")
    sp.set_defaults(func=cmd_flow)

    sp = sub.add_parser("extend", help="evaluate an extension vertex operator mode")
    sp.add_argument("--spec", default="VACUUM(d=0)")
    sp.add_argument("--alpha", required=True, help="m1,m2")
    sp.add_argument("--u", default="1")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--beta", default="0,0", help="n1,n2")
    sp.add_argument("--w", help="vector JSON in the module (default: the generator)")
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("character", help="bi-graded character table")
    sp.add_argument("--spec", required=True)
    windowed(sp)
    sp.add_argument("--cache-dir")
    sp.set_defaults(func=cmd_character)

    sp = sub.add_parser("compare", help="compare two character tables")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            config.load_config(args.config)
        result = args.func(args)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2
    except ParameterConditionError as exc:
        print(f"parameter condition: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (EngineError, UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = dumps(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
