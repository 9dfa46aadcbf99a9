"""Command-line entry point: ``python -m spanfactor <command> ...``.

Graph-consuming commands read graph6 lines from ``--input`` (default stdin)
and write one result per line. Exit codes: 0 success, 1 a verification found
a counterexample, 2 bad usage or parameters outside a statement's range.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, TextIO

from .closure import k_factor_closure_index, k_tree_closure_index, l_closure
from .extremal import (
    FAMILY_NAMES,
    RangeError,
    family,
    phi,
    psi,
    spectral_threshold_1f,
    spectral_threshold_kf,
)
from .factors import has_k_factor, has_one_factor
from .graph import Graph, GraphError, graph6_decode, graph6_encode
from .spectral import clique_number, count_cliques, quotient_rho, spectral_radius
from .trees import (
    DEFAULT_BUDGET,
    KANEKO_VERTEX_LIMIT,
    BudgetExceeded,
    has_spanning_k_tree,
    has_spanning_tree_leaf_deg,
    kaneko_check,
)
from .verify import (
    EXHAUSTIVE_MAX_VERTICES,
    PERTURBATION_FAMILIES,
    THEOREM_IDS,
    Exhaustive,
    RandomSample,
    TheoremSpec,
    ThresholdQuery,
    perturbation_suite,
    read_graph6,
    report_emit,
    verify,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _real(x: float) -> float:
    return float(f"{x:.12g}")


def _open_input(path: str | None) -> TextIO:
    if path in (None, "-"):
        return sys.stdin
    return open(path, encoding="ascii")


def _graphs(path: str | None) -> Iterator[tuple[str, Graph]]:
    stream = _open_input(path)
    try:
        for line in stream:
            text = line.strip()
            if text:
                yield text, graph6_decode(text)
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# -- closure -------------------------------------------------------------------


def parse_closure_index(text: str, n: int) -> int:
    """Resolve ``<int>``, ``1f``, ``kf:<k>`` or ``ktree:<k>,<m>`` for an n-vertex graph."""
    try:
        if text == "1f":
            return k_factor_closure_index(n, 1)
        if text.startswith("kf:"):
            return k_factor_closure_index(n, int(text[3:]))
        if text.startswith("ktree:"):
            k, m = text[6:].split(",")
            return k_tree_closure_index(n, int(k), int(m))
        value = int(text)
    except ValueError as exc:
        raise UsageError(f"bad closure index {text!r}: {exc}") from None
    if value < 0:
        raise UsageError("closure index must be non-negative")
    return value


def cmd_closure(args: argparse.Namespace) -> int:
    for _, g in _graphs(args.input):
        sys.stdout.write(graph6_encode(l_closure(g, parse_closure_index(args.l, g.n))) + "\n")
    return EXIT_OK


# -- check ---------------------------------------------------------------------


def _edges(edges) -> list[list[int]]:
    return [list(e) for e in edges]


def check_graph(g: Graph, prop: str, k: int, budget: int) -> dict:
    """Decide one property for one graph; the JSON record without the graph6 field."""
    if prop == "1-factor":
        m = has_one_factor(g)
        return {"answer": "yes", "certificate": _edges(m.edges)} if m else {"answer": "no"}
    if prop == "k-factor":
        f = has_k_factor(g, k)
        return {"answer": "yes", "certificate": _edges(f.edges)} if f else {"answer": "no"}
    if not g.is_connected():
        return {"answer": "no", "reason": "disconnected"}
    try:
        if prop == "k-tree":
            t = has_spanning_k_tree(g, k, budget)
        else:
            t = has_spanning_tree_leaf_deg(g, k, budget)
    except BudgetExceeded:
        return {"answer": "budget"}
    if t is not None:
        return {"answer": "yes", "certificate": _edges(t.edges)}
    out: dict = {"answer": "no"}
    if prop == "leaf-degree" and g.n <= KANEKO_VERTEX_LIMIT:
        cert = kaneko_check(g, k)
        if cert is not None:
            out["violator"] = cert.members
    return out


def cmd_check(args: argparse.Namespace) -> int:
    k = args.k
    if args.property == "1-factor":
        k = 1
    elif k is None:
        raise UsageError(f"--property {args.property} needs --k")
    for text, g in _graphs(args.input):
        _emit({"graph6": text, **check_graph(g, args.property, k, args.budget)})
    return EXIT_OK


# -- spectral / cliques --------------------------------------------------------


def cmd_spectral(args: argparse.Namespace) -> int:
    if args.method == "quotient":
        if None in (args.a, args.b, args.c):
            raise UsageError("--method quotient needs --a, --b and --c")
        q = quotient_rho(args.a, args.b, args.c)
        _emit({"a": args.a, "b": args.b, "c": args.c, "rho": _real(q.rho),
               "eigvec": [_real(x) for x in q.eigvec]})
        return EXIT_OK
    for text, g in _graphs(args.input):
        _emit({"graph6": text, "rho": _real(spectral_radius(g))})
    return EXIT_OK


def cmd_cliques(args: argparse.Namespace) -> int:
    for text, g in _graphs(args.input):
        if args.r is None:
            _emit({"graph6": text, "clique_number": clique_number(g)})
        else:
            _emit({"graph6": text, "r": args.r, "count": count_cliques(g, args.r)})
    return EXIT_OK


# -- gen / threshold -------------------------------------------------------------

_FAMILY_PARAMS = {
    "ex1fa": ("n", "delta"),
    "ex1fb": ("n", "delta"),
    "exktree": ("n", "m", "k"),
    "exleaf": ("n", "delta", "k"),
    "exfan": ("n", "k"),
    "gen3": ("a", "b", "c"),
    "joinreg": ("s", "b", "p", "t"),
}


def _collect(args: argparse.Namespace, names: tuple[str, ...], what: str) -> dict:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"{what} needs {' '.join(missing)}")
    return {x: getattr(args, x) for x in names}


def cmd_gen(args: argparse.Namespace) -> int:
    params = _collect(args, _FAMILY_PARAMS[args.family], args.family)
    sys.stdout.write(graph6_encode(family(args.family, **params).graph) + "\n")
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    w = args.which
    if w == "phi":
        p = _collect(args, ("n", "r", "q"), w)
        value: int | float = phi(p["n"], p["r"], p["q"])
    elif w == "psi":
        p = _collect(args, ("n", "r", "k", "q"), w)
        value = psi(p["n"], p["r"], p["k"], p["q"])
    elif w == "spec1f":
        p = _collect(args, ("n", "delta"), w)
        value = spectral_threshold_1f(p["n"], p["delta"], corrected=args.corrected)
    else:
        p = _collect(args, ("n", "k", "delta"), w)
        value = spectral_threshold_kf(p["n"], p["k"], p["delta"])
    sys.stdout.write((str(value) if isinstance(value, int) else f"{value:.12g}") + "\n")
    return EXIT_OK


# -- verify / perturb ------------------------------------------------------------


def parse_source(text: str, spec: TheoremSpec, seed: int):
    """Turn ``exhaustive``, ``random:<count>:<p>`` or ``file:<path>`` into a verify() source."""
    n = spec.params.n
    if text == "exhaustive":
        if n > EXHAUSTIVE_MAX_VERTICES:
            raise RangeError(f"exhaustive scans are limited to n <= {EXHAUSTIVE_MAX_VERTICES}")
        return Exhaustive(n, **_exhaustive_filters(spec)), None
    if text.startswith("random:"):
        try:
            _, count, p = text.split(":")
            return RandomSample(n, float(p), int(count), seed), None
        except ValueError:
            raise UsageError(f"bad random source {text!r}; expected random:<count>:<p>") from None
    if text.startswith("file:"):
        path = text[5:]
        stream = _open_input(path or "-")
        return read_graph6(stream), f"file:{path or '-'}"
    raise UsageError(f"unknown source {text!r}")


def _exhaustive_filters(spec: TheoremSpec) -> dict:
    """Cheap filters implied by each statement's hypothesis (never stronger than it)."""
    p = spec.params
    if spec.id in ("T13i", "C15i", "C18i", "T13ii", "C15ii", "C18ii"):
        return {"min_degree": p.delta}
    if spec.id in ("EQ-T19", "EQ-T111", "BND-L33", "T110", "T113"):
        return {"connected": True}
    if spec.id == "EQ-T12":
        return {"k": p.k}
    return {}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.format not in ("json", "csv"):
        raise UsageError("--format must be json or csv")
    query = ThresholdQuery(n=args.n, r=args.r, k=args.k, m=args.m, delta=args.delta, q=args.q, s=args.s)
    spec = TheoremSpec(args.theorem, query, corrected=args.corrected)
    spec.validate()
    source, label = parse_source(args.source, spec, args.seed)
    report = verify(spec, source, budget=args.budget, describe=label)
    sys.stdout.buffer.write(report_emit(report, args.format))
    sys.stdout.flush()
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_perturb(args: argparse.Namespace) -> int:
    params = _collect(args, _FAMILY_PARAMS[args.family], args.family)
    report = perturbation_suite(args.family, params, budget=args.budget)
    sys.stdout.buffer.write(report_emit(report, args.format))
    sys.stdout.flush()
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spanfactor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--input", help="file of graph6 lines (default: stdin)")
        return p

    p = with_input(sub.add_parser("closure", help="l-closure of each input graph"))
    p.add_argument("--l", required=True, help="closure index: <int>, 1f, kf:<k> or ktree:<k>,<m>")
    p.set_defaults(func=cmd_closure)

    p = with_input(sub.add_parser("check", help="decide a factor or spanning-tree property (JSONL)"))
    p.add_argument("--property", required=True, choices=("1-factor", "k-factor", "k-tree", "leaf-degree"))
    p.add_argument("--k", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    p.set_defaults(func=cmd_check)

    p = with_input(sub.add_parser("spectral", help="spectral radius (JSONL)"))
    p.add_argument("--method", choices=("power", "quotient"), default="power")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=int, help="part sizes of K_a v (K_b + I_c) for --method quotient")
    p.set_defaults(func=cmd_spectral)

    p = with_input(sub.add_parser("cliques", help="clique counts, or the clique number without --r"))
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_cliques)

    def family_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=FAMILY_NAMES)
        for name in ("n", "m", "k", "delta", "a", "b", "c", "s", "p", "t"):
            p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("gen", help="emit a named extremal graph as graph6")
    family_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("threshold", help="evaluate a threshold formula")
    p.add_argument("--which", required=True, choices=("phi", "psi", "spec1f", "speckf"))
    for name in ("n", "r", "k", "q", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--corrected", action="store_true", help="spec1f: use the re-derived radicand constant")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("verify", help="scan graphs against a statement and print the report")
    p.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    p.add_argument("--n", type=int, required=True)
    for name in ("delta", "k", "m", "r", "q", "s"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--source", default="exhaustive",
                   help="exhaustive | random:<count>:<p> | file:<path> (file: alone reads stdin)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="json", choices=("json", "csv"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--corrected", action="store_true", help="C18i: use the re-derived radicand constant")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("perturb", help="single-edge perturbation suite around an extremal graph")
    p.add_argument("--family", required=True, choices=PERTURBATION_FAMILIES)
    for name in ("n", "m", "k", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--format", default="json", choices=("json", "csv"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RangeError, GraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"spanfactor {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
