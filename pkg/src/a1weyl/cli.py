"""
Command-line front end.

Inputs are JSON: an element is ``{"eps": 1, "t": [3]}``, a root is
``{"k": 1, "sigma": [0, 2]}``, a basis is an array of roots. A positional
input may be inline JSON, ``@path`` to read a file, or ``-`` for stdin.

Exit status: 0 on success, 1 when a verification run finds a disagreement,
2 on malformed input or bad parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import core, bases, length, oracle, roots
from ._backend import active_backend
from .core import RootVector, WeylElement

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    """Bad input; reported on stderr with exit status 2."""


@dataclass
class Output:
    records: list  # JSON values, one per output line
    header: list[str]
    rows: list[list] = field(default_factory=list)
    status: int = EXIT_OK


# -- input parsing -----------------------------------------------------------

def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot read input file: {exc}") from exc
    return arg


def _load(arg: str):
    try:
        return json.loads(_read_text(arg))
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON: {exc}") from exc


def _int_list(value, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise CliError(f"invalid {what}: expected a non-empty array of integers")
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise CliError(f"invalid {what}: expected integers, got {value!r}")
    return tuple(value)


def _element(arg: str) -> WeylElement:
    obj = _load(arg)
    if not isinstance(obj, dict) or set(obj) != {"eps", "t"}:
        raise CliError('invalid element: expected {"eps": +-1, "t": [...]}')
    if obj["eps"] not in (-1, 1) or isinstance(obj["eps"], bool):
        raise CliError(f"invalid element: eps must be -1 or 1, got {obj['eps']!r}")
    return WeylElement(obj["eps"], _int_list(obj["t"], "element t"))


def _root_obj(obj) -> RootVector:
    if not isinstance(obj, dict) or set(obj) != {"k", "sigma"}:
        raise CliError('invalid root: expected {"k": -1|0|1, "sigma": [...]}')
    if obj["k"] not in (-1, 0, 1) or isinstance(obj["k"], bool):
        raise CliError(f"invalid root: k must be -1, 0 or 1, got {obj['k']!r}")
    return RootVector(obj["k"], _int_list(obj["sigma"], "root sigma"))


def _root(arg: str) -> RootVector:
    return _root_obj(_load(arg))


def _basis(arg: str) -> tuple[RootVector, ...]:
    obj = _load(arg)
    if not isinstance(obj, list):
        raise CliError("invalid basis: expected an array of roots")
    return tuple(_root_obj(x) for x in obj)


def _nullity(args, *values) -> int:
    seen = {v.nu for v in values}
    if args.nullity is not None:
        seen.add(args.nullity)
    if not seen:
        raise CliError("missing --nullity")
    if len(seen) > 1:
        raise CliError(f"nullity mismatch: inputs have nullities {sorted(seen)}")
    return seen.pop()


def _nonneg(value: int, name: str) -> int:
    if value < 0:
        raise CliError(f"out of range: {name} must be non-negative, got {value}")
    return value


# -- row helpers -------------------------------------------------------------

def _elem_header(nu: int) -> list[str]:
    return ["eps"] + [f"t{i}" for i in range(1, nu + 1)]


def _root_header(nu: int) -> list[str]:
    return ["k"] + [f"sigma{i}" for i in range(1, nu + 1)]


def _elem_out(w: WeylElement) -> Output:
    return Output([w.to_json()], _elem_header(w.nu), [[w.parity, *w.t]])


def _scalar_out(name: str, value) -> Output:
    return Output([value], [name], [[value]])


def _basis_out(pi) -> Output:
    nu = pi[0].nu
    return Output([[a.to_json() for a in pi]], _root_header(nu),
                  [[a.k, *a.sigma] for a in pi])


# -- subcommands -------------------------------------------------------------

def cmd_length(args) -> Output:
    w = _element(args.element)
    _nullity(args, w)
    return _scalar_out("length", length.length_pi0(w))


def cmd_word(args) -> Output:
    w = _element(args.element)
    _nullity(args, w)
    word = length.reduced_word_pi0(w)
    return Output([word], ["position", "generator"],
                  [[i, j] for i, j in enumerate(word, start=1)])


def cmd_act(args) -> Output:
    w, a = _element(args.element), _root(args.root)
    _nullity(args, w, a)
    image = core.act(w, a)
    return Output([image.to_json()], _root_header(image.nu), [[image.k, *image.sigma]])


def cmd_mul(args) -> Output:
    w1, w2 = _element(args.left), _element(args.right)
    _nullity(args, w1, w2)
    return _elem_out(core.multiply(w1, w2))


def cmd_inv(args) -> Output:
    w = _element(args.element)
    _nullity(args, w)
    return _elem_out(core.inverse(w))


def cmd_conj(args) -> Output:
    w1, w2 = _element(args.left), _element(args.right)
    _nullity(args, w1, w2)
    return _elem_out(core.conjugate(w1, w2))


def cmd_height(args) -> Output:
    a = _root(args.root)
    _nullity(args, a)
    return _scalar_out("height", roots.height(a))


def cmd_roots(args) -> Output:
    nu = _nullity(args)
    H = _nonneg(args.max_height, "--max-height")
    found = roots.enumerate_roots(nu, H)
    return Output([[a.to_json() for a in found]], _root_header(nu) + ["height"],
                  [[a.k, *a.sigma, roots.height(a)] for a in found])


def _checked_basis(args, arg: str):
    pi = _basis(arg)
    if not pi:
        raise CliError("invalid basis: empty")
    nu = _nullity(args, *pi)
    if len(pi) != nu + 1:
        raise CliError(f"arity mismatch: nullity {nu} needs {nu + 1} roots, got {len(pi)}")
    return pi


def cmd_basis_check(args) -> Output:
    pi = _checked_basis(args, args.basis)
    return _scalar_out("root_basis", bases.is_root_basis(pi))


def cmd_invariant_matrix(args) -> Output:
    pi = _checked_basis(args, args.basis)
    if not bases.is_root_basis(pi):
        raise CliError("not a root basis: invariant matrix is undefined")
    rows = bases.invariant_matrix(pi)
    return Output([rows], [f"c{i}" for i in range(len(pi))], rows)


def cmd_find_conjugator(args) -> Output:
    pi1 = _checked_basis(args, args.source)
    pi2 = _checked_basis(args, args.target)
    if any(a.k == 0 for a in pi1 + pi2):
        raise CliError("invalid basis: elements must be non-isotropic")
    w = bases.find_conjugator(pi1, pi2)
    if w is None:
        return Output([None], _elem_header(pi1[0].nu), [])
    return _elem_out(w)


def cmd_pin_family(args) -> Output:
    nu = _nullity(args)
    if nu < 2:
        raise CliError("out of range: the family needs --nullity >= 2")
    if args.n <= 1:
        raise CliError(f"out of range: --n must be > 1, got {args.n}")
    return _basis_out(bases.pi_n_family(nu, args.n))


def cmd_verify_bfs(args) -> Output:
    nu = _nullity(args)
    depth = _nonneg(args.depth, "--depth")
    start = time.perf_counter()
    reports = oracle.verify_theorem_lft(nu, depth)
    elapsed = time.perf_counter() - start
    bad = sum(not r.agree for r in reports)
    summary = {"summary": {"nullity": nu, "depth": depth, "elements": len(reports),
                           "disagreements": bad}}
    if args.timing:
        summary["summary"]["seconds"] = round(elapsed, 3)
        summary["summary"]["backend"] = active_backend()
    records = [] if args.quiet else [r.to_json() for r in reports]
    rows = [] if args.quiet else [
        [r.element.parity, *r.element.t, r.formula_length, r.bfs_distance,
         int(r.agree), " ".join(map(str, r.witness))] for r in reports]
    return Output(records + [summary],
                  _elem_header(nu) + ["formula_length", "bfs_distance", "agree", "witness"],
                  rows, EXIT_FAIL if bad else EXIT_OK)


def cmd_verify_affine(args) -> Output:
    nu = 1 if args.nullity is None else args.nullity
    if nu != 1:
        raise CliError("nullity mismatch: verify-affine needs --nullity 1")
    K = _nonneg(args.range, "--range")
    rows, failures = [], 0
    for n in range(-K, K + 1):
        for s in (0, 1):
            w = WeylElement(-1 if s else 1, (n,))
            formula = length.length_pi0(w)
            classical = oracle.classical_affine_length(s, n)
            inversions = oracle.inversion_count_nu1(w, formula + 2)
            ok = formula == classical == inversions
            failures += not ok
            rows.append([s, n, formula, classical, inversions, int(ok)])
    action_checked = 0
    for n in range(-K, K + 1):
        tn = WeylElement(1, (n,))
        twisted = core.multiply(WeylElement(-1, (0,)), tn)
        for m in range(-K, K + 1):
            for k in (-1, 0, 1):
                a = RootVector(k, (m,))
                action_checked += 1
                if roots.pi0_coordinates(core.act(tn, a)) != oracle.affine_translation_action(n, m, k):
                    failures += 1
                if roots.pi0_coordinates(core.act(twisted, a)) != \
                        oracle.affine_translation_action(n, m, k, twisted=True):
                    failures += 1
    summary = {"summary": {"range": K, "length_cases": len(rows),
                           "action_cases": action_checked, "failures": failures}}
    return Output([summary], ["s", "n", "length_pi0", "classical", "inversions", "agree"],
                  rows, EXIT_FAIL if failures else EXIT_OK)


def cmd_growth(args) -> Output:
    nu = _nullity(args)
    depth = _nonneg(args.depth, "--depth")
    sizes = oracle.level_sizes(length.pi0_generators(nu), depth)
    return Output([sizes], ["length", "count"], [[d, c] for d, c in enumerate(sizes)])


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nullity", type=int, default=None,
                        help="nullity nu (rank of the radical); inferred from inputs if omitted")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", type=Path, default=None,
                        help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="a1weyl", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("length", cmd_length, "length w.r.t. the fundamental basis").add_argument(
        "element", nargs="?", default="-")
    add("word", cmd_word, "a reduced word over the fundamental basis").add_argument(
        "element", nargs="?", default="-")
    p = add("act", cmd_act, "apply an element to a root")
    p.add_argument("element")
    p.add_argument("root")
    for name, func, text in (("mul", cmd_mul, "product"), ("conj", cmd_conj, "left * right * left^-1")):
        p = add(name, func, text)
        p.add_argument("left")
        p.add_argument("right")
    add("inv", cmd_inv, "inverse").add_argument("element", nargs="?", default="-")
    add("height", cmd_height, "height of a root").add_argument("root", nargs="?", default="-")
    add("roots", cmd_roots, "all roots up to a height").add_argument(
        "--max-height", type=int, required=True)
    add("basis-check", cmd_basis_check, "is this a root basis").add_argument(
        "basis", nargs="?", default="-")
    add("invariant-matrix", cmd_invariant_matrix, "coordinates of the sigma_j").add_argument(
        "basis", nargs="?", default="-")
    p = add("find-conjugator", cmd_find_conjugator, "w with w(source) == target")
    p.add_argument("source")
    p.add_argument("target")
    add("pin-family", cmd_pin_family, "member n of the non-conjugate family").add_argument(
        "--n", type=int, required=True)
    p = add("verify-bfs", cmd_verify_bfs, "closed-form length vs Cayley-graph BFS")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--quiet", action="store_true", help="print only the summary line")
    p.add_argument("--timing", action="store_true",
                   help="add wall time and backend to the summary (not byte-stable)")
    add("verify-affine", cmd_verify_affine, "nullity-1 classical cross-checks").add_argument(
        "--range", type=int, required=True)
    add("growth", cmd_growth, "ball level sizes").add_argument("--depth", type=int, required=True)
    return parser


def _render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in out.records)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(out.header)
    writer.writerows(out.rows)
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.nullity is not None and args.nullity < 1:
        print("error: out of range: --nullity must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        out = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: invalid value: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(out, args.format)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return out.status


if __name__ == "__main__":
    raise SystemExit(main())
