"""Command-line entry point: ``conjcalc <command> ...``.

Exit codes: 0 on success, 1 on invalid input, 2 when a verification suite fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import graph_inverse as gis
from . import natmaps, transforms, words
from .congruence import congruence_generated, least_commutative_congruence, quotient
from .groups import small_groups
from .partition import ElementPartition, PairRelation
from .rees import (ZERO_TOKEN, rees_from_json, rees_sim_p, rees_sim_p1, rees_sim_s)
from .relations import (RELATION_KEYS, BudgetExceeded, all_relations, containment_matrix, sim_c, sim_n,
                        sim_o, sim_p, sim_p1, sim_s, sim_s1_bounded, sim_star1, sim_w)
from .semigroup import DEFAULT_MAX_ORDER, FiniteSemigroup, SemigroupError, from_json
from .trace import (check_tr_prim, commutator_ideal_check, commutator_lattice, smith_invariants,
                    trace_partition)
from .verify import SUITES, run_suite


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    inputs: tuple[str, ...] = ()
    relation: str = "all"
    bound_L: int = 4
    seed: int = 0
    fmt: str = "json"
    override: bool = False
    max_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if self.bound_L < 1:
            raise InputError("--bound-L must be positive")
        if self.max_order < 1:
            raise InputError("--max-order must be positive")


# ------------------------------------------------------------------ output

def _emit(payload, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text if text is not None else json.dumps(payload, sort_keys=True))


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_semigroup(cfg: RunConfig) -> FiniteSemigroup:
    if len(cfg.inputs) != 1:
        raise InputError("exactly one --in file is required")
    try:
        return from_json(_load_json(cfg.inputs[0]), max_order=cfg.max_order)
    except SemigroupError as exc:
        raise InputError(f"invalid semigroup: {exc}") from exc


def _classes_as_labels(S: FiniteSemigroup, part: ElementPartition) -> list[list[str]]:
    return [[str(S.elements[a]) for a in block] for block in part.classes()]


def _pairs_as_labels(S: FiniteSemigroup, rel: PairRelation) -> list[list[str]]:
    return [[str(S.elements[a]), str(S.elements[b])] for a, b in rel.pairs()]


# --------------------------------------------------------------- relations

_ALIASES = {f"sim_{k}": k for k in RELATION_KEYS} | {"sim_star1": "star1", "star1": "star1"}


def _relation_key(name: str) -> str:
    key = _ALIASES.get(name, name)
    if key not in RELATION_KEYS and key not in ("star1", "all"):
        raise InputError(f"unknown relation {name!r}")
    return key


def _compute(S: FiniteSemigroup, key: str, cfg: RunConfig):
    if key == "p":
        return sim_p(S)
    if key == "s":
        return sim_s(S)
    fns = {
        "p1": lambda: sim_p1(S),
        "star1": lambda: sim_star1(S),
        "o": lambda: sim_o(S),
        "s1": lambda: sim_s1_bounded(S, cfg.bound_L),
        "n": lambda: sim_n(S, override=cfg.override),
        "w": lambda: sim_w(S, override=cfg.override),
        "c": lambda: sim_c(S, override=cfg.override),
    }
    return fns[key]()


def containment_dot(report) -> str:
    """Hasse diagram of the verified containments; equal relations are joined by a two-headed edge."""
    keys = report.keys
    sub = report.subset
    blocks: list[list[str]] = []
    for k in keys:
        for block in blocks:
            if sub[k, block[0]] and sub[block[0], k]:
                block.append(k)
                break
        else:
            blocks.append([k])
    lines = ["digraph containments {", "  rankdir=BT;"]
    for k in RELATION_KEYS:
        style = ' style="dashed"' if k in report.skipped else ""
        label = "s1(L=%d)" % report.bound if k == "s1" else k
        lines.append(f'  "{k}" [label="~{label}"{style}];')
    for block in blocks:
        for a, b in zip(block, block[1:]):
            lines.append(f'  "{a}" -> "{b}" [dir=both];')

    def below(x, y):
        return x is not y and sub[x[0], y[0]]

    for x in blocks:
        for y in blocks:
            if below(x, y) and not any(below(x, z) and below(z, y) for z in blocks):
                lines.append(f'  "{x[0]}" -> "{y[0]}";')
    lines.append("}")
    return "\n".join(lines)


def cmd_relations(cfg: RunConfig) -> int:
    S = _load_semigroup(cfg)
    key = _relation_key(cfg.relation)
    if key == "all":
        report = containment_matrix(S, cfg.bound_L, relations=all_relations(S, cfg.bound_L, override=cfg.override))
        if cfg.fmt == "dot":
            print(containment_dot(report))
            return 0
        payload = report.to_json()
        payload["classes"] = {k: _classes_as_labels(S, r.closure()) for k, r in report.relations.items()}
        text = "\n".join(f"{a:>3} " + " ".join(f"{report.entry(a, b) or '-':>10}" for b in report.keys)
                         for a in report.keys)
        _emit(payload, cfg.fmt, "    " + " ".join(f"{b:>10}" for b in report.keys) + "\n" + text)
        return 0
    rel = _compute(S, key, cfg)
    if isinstance(rel, ElementPartition):
        classes = _classes_as_labels(S, rel)
        payload = {"relation": key, "kind": "partition", "classes": classes, "num_classes": len(classes)}
        text = "\n".join("{" + ", ".join(c) + "}" for c in classes)
    else:
        pairs = _pairs_as_labels(S, rel)
        payload = {"relation": key, "kind": "pairs", "pairs": pairs, "size": len(pairs),
                   "is_identity": rel == PairRelation.identity(len(S))}
        text = "\n".join(f"{a} ~ {b}" for a, b in pairs if a != b) or "(identity relation)"
    if cfg.fmt == "dot":
        raise InputError("--format dot is only available with --rel all")
    _emit(payload, cfg.fmt, text)
    return 0


# ------------------------------------------------------------------ family

def _rees_spec(data: dict):
    group = data.get("group")
    if isinstance(group, str):
        zoo = small_groups()
        if group not in zoo:
            raise InputError(f"unknown group {group!r}; choose from {', '.join(zoo)}")
        data = dict(data, group=zoo[group].semigroup.to_json())
    return rees_from_json(data)


def _family_rees(args, cfg: RunConfig) -> int:
    sem = _rees_spec(_load_json(args.spec))
    out: dict = {"order": len(sem), "zero_entries": sem.has_zero_entries, "normalized": sem.is_normalized()}
    if args.check:
        rel, a, b = args.check
        fns = {"sim_p1": rees_sim_p1, "sim_p": rees_sim_p,
               "sim_s": lambda m, x, y: rees_sim_s(m, x, y, normalize=True)}
        if rel not in fns:
            raise InputError(f"--check supports {', '.join(fns)}")
        x, y = sem.parse(a), sem.parse(b)
        out["check"] = {"relation": rel, "a": a, "b": b, "result": bool(fns[rel](sem, x, y))}
    if args.export:
        out["cayley"] = sem.export(cfg.max_order).to_json()
    text = str(out["check"]["result"]).lower() if "check" in out else json.dumps(out, sort_keys=True)
    _emit(out, cfg.fmt, text)
    return 0


def parse_gis_element(E: gis.DirectedGraph, text: str):
    """``0``, or ``X/Y`` with X and Y dot-separated edge names or ``@vertex``."""
    text = text.strip()
    if text == ZERO_TOKEN:
        return gis.GZERO
    if "/" not in text:
        raise InputError(f"graph element {text!r} must look like X/Y")
    x, y = text.split("/", 1)
    try:
        return gis.element(E, gis.path_from_json(E, x.split(".")), gis.path_from_json(E, y.split(".")))
    except (gis.GraphError, ValueError) as exc:
        raise InputError(f"bad graph element {text!r}: {exc}") from exc


def _family_graph(args, cfg: RunConfig) -> int:
    try:
        E = gis.DirectedGraph.from_json(_load_json(args.spec))
    except (gis.GraphError, KeyError, TypeError) as exc:
        raise InputError(f"invalid graph: {exc}") from exc
    out: dict = {}
    if args.class_of_vertex is not None:
        if args.class_of_vertex not in E.vertices:
            raise InputError(f"unknown vertex {args.class_of_vertex!r}")
        kind, loop = gis.vertex_class(E, E.vertex(args.class_of_vertex))
        shown = f"{kind.value}({E.edge_names[loop]})" if loop is not None else kind.value
        out["vertex_class"] = {"vertex": args.class_of_vertex, "class": kind.value,
                               "loop": None if loop is None else E.edge_names[loop], "display": shown}
    if args.check:
        rel, a, b = args.check
        fns = {"sim_p": gis.gis_sim_p, "sim_s": gis.gis_sim_s}
        if rel not in fns:
            raise InputError(f"--check supports {', '.join(fns)}")
        x, y = parse_gis_element(E, a), parse_gis_element(E, b)
        out["check"] = {"relation": rel, "a": a, "b": b, "result": bool(fns[rel](E, x, y))}
    if args.product:
        a, b = (parse_gis_element(E, t) for t in args.product)
        out["product"] = gis.element_label(E, gis.multiply(E, a, b))
    if not out:
        raise InputError("nothing to do: pass --class-of-vertex, --check or --product")
    parts = []
    if "vertex_class" in out:
        parts.append(out["vertex_class"]["display"])
    if "check" in out:
        parts.append(str(out["check"]["result"]).lower())
    if "product" in out:
        parts.append(out["product"])
    _emit(out, cfg.fmt, "\n".join(parts))
    return 0


def _family_words(args, cfg: RunConfig) -> int:
    out = {}
    try:
        if args.sims:
            out["sim_s"] = words.sim_s_words(*args.sims)
        if args.simp:
            out["sim_p1"] = words.sim_p1_words(*args.simp)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not out:
        raise InputError("nothing to do: pass --sims or --simp")
    _emit(out, cfg.fmt, "\n".join(str(v).lower() for v in out.values()))
    return 0


def _parse_map(text: str) -> transforms.FiniteMap:
    try:
        items = json.loads(text)
        return transforms.FiniteMap([None if v is None else int(v) for v in items])
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"bad map {text!r}: expected a JSON list like [1, 0, null]") from exc


def _family_transform(args, cfg: RunConfig) -> int:
    out: dict = {}
    if args.classify:
        f = _parse_map(args.classify)
        out["class"] = transforms.sim_s_class(args.kind, f).value
    if args.conj:
        p, q = (_parse_map(t) for t in args.conj)
        try:
            ok, w = transforms.conjugate_in_sym(p, q)
        except transforms.NotPermutation as exc:
            raise InputError(str(exc)) from exc
        out["conjugate"] = {"result": ok, "witness": None if w is None else list(w.images)}
    if args.cayley is not None:
        try:
            mon = transforms.monoid_cayley(args.kind, args.cayley)
        except (SemigroupError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        out["cayley"] = mon.semigroup.to_json()
    if not out:
        raise InputError("nothing to do: pass --classify, --conj or --cayley")
    text = "\n".join(str(v if not isinstance(v, dict) else v.get("result", "")) for v in out.values())
    _emit(out, cfg.fmt, text)
    return 0


def _parse_natmap(text: str) -> natmaps.EventuallyShiftMap:
    try:
        return natmaps.EventuallyShiftMap.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad map {text!r}: expected {{\"table\": [...], \"shift\": d}}") from exc


def _natmap_summary(f: natmaps.EventuallyShiftMap) -> dict:
    out: dict = {"map": f.to_json(), "injective": f.is_injective, "surjective": f.is_surjective}
    if f.is_injective:
        census = natmaps.cycle_census(f)
        out["defect"] = natmaps.defect(f)
        out["cycles"] = {"finite": [list(x) for x in census.finite], "forward": census.forward,
                         "open": census.open, "cofinite_fixed_points": census.cofinite_fixed_points}
    if f.is_surjective:
        inv = natmaps.ncm_invariants(f)
        out["collapsed"] = sorted(inv.collapsed)
        out["multi_image"] = sorted(inv.multi_image)
        out["max_fiber"] = inv.max_fiber
        out["invariant"] = repr(natmaps.surj_invariant(f))
    return out


def _family_natmap(args, cfg: RunConfig) -> int:
    out: dict = {}
    if args.map:
        out["maps"] = [_natmap_summary(_parse_natmap(t)) for t in args.map]
    if args.random:
        rng = random.Random(cfg.seed)
        gen = natmaps.random_injection if args.random == "injection" else natmaps.random_surjection
        out["random"] = [_natmap_summary(gen(rng)) for _ in range(args.count)]
    if not out:
        raise InputError("nothing to do: pass --map or --random")
    _emit(out, cfg.fmt)
    return 0


def cmd_family(args, cfg: RunConfig) -> int:
    handlers = {"rees": _family_rees, "graph": _family_graph, "words": _family_words,
                "transform": _family_transform, "natmap": _family_natmap}
    return handlers[args.family](args, cfg)


# -------------------------------------------------------------- congruence

def cmd_congruence(args, cfg: RunConfig) -> int:
    S = _load_semigroup(cfg)
    if args.pairs:
        try:
            raw = json.loads(args.pairs)
            pairs = [(S.index(str(a)), S.index(str(b))) for a, b in raw]
        except (json.JSONDecodeError, ValueError, TypeError) as exc:
            raise InputError(f"--pairs must be a JSON list of label pairs: {exc}") from exc
        cong = congruence_generated(S, pairs)
    else:
        cong = least_commutative_congruence(S)
    Q, proj = quotient(S, cong)
    classes = _classes_as_labels(S, cong.partition)
    out = {"classes": classes, "num_classes": len(classes), "quotient": Q.to_json(),
           "projection": [int(x) for x in proj]}
    _emit(out, cfg.fmt, "\n".join("{" + ", ".join(c) + "}" for c in classes))
    return 0


# ------------------------------------------------------------------- trace

def cmd_trace(args, cfg: RunConfig) -> int:
    S = _load_semigroup(cfg)
    lattice = commutator_lattice(S)
    tr = trace_partition(S, lattice)
    check = check_tr_prim(S)
    out = {
        "basis_elements": [str(S.elements[a]) for a in range(len(S)) if a != S.zero],
        "lattice_basis": lattice.basis,
        "rank": lattice.rank,
        "trace_classes": _classes_as_labels(S, tr),
        "tr_prim": check.ok,
        "counterexample": None if check.counterexample is None else
        [str(S.elements[a]) for a in check.counterexample],
        "commutator_ideal": commutator_ideal_check(S, cfg.bound_L),
    }
    if args.smith:
        try:
            out["smith_invariants"] = smith_invariants(lattice)
        except ImportError as exc:
            raise InputError("--smith needs sympy installed") from exc
    _emit(out, cfg.fmt, "\n".join(f"{k}: {v}" for k, v in out.items()))
    return 0


# ------------------------------------------------------------------ verify

def cmd_verify(args, cfg: RunConfig) -> int:
    try:
        reports = run_suite(args.suite, seed=cfg.seed)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    if cfg.fmt == "json":
        _emit({"passed": all(r.passed for r in reports), "suites": [r.to_json() for r in reports]}, "json")
    else:
        for r in reports:
            for c in r.checks:
                print(f"[{'PASS' if c.ok else 'FAIL'}] {r.suite}: {c.name}" + (f" ({c.detail})" if c.detail else ""))
        print("\n".join(f"{r.suite:<12} {'PASS' if r.passed else 'FAIL'}  {len(r.checks)} checks" for r in reports))
    return 0 if all(r.passed for r in reports) else 2


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound-L", type=int, default=4, dest="bound_L",
                        help="factor bound for the bounded permutation relation")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)

    parser = argparse.ArgumentParser(prog="conjcalc", description="Conjugacy relations on finite semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relations", parents=[common], help="compute conjugacy relations")
    p.add_argument("--in", dest="inputs", action="append", required=True, metavar="FILE")
    p.add_argument("--rel", default="all", help="p1, p, n, o, w, c, s1, s, star1 (or sim_*), or all")
    p.add_argument("--override", action="store_true", help="allow coupled searches on large inputs")

    p = sub.add_parser("family", parents=[common], help="closed-form classifiers for special families")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("rees", parents=[common])
    f.add_argument("--spec", required=True)
    f.add_argument("--check", nargs=3, metavar=("REL", "A", "B"))
    f.add_argument("--export", action="store_true")
    f = fam.add_parser("graph", parents=[common])
    f.add_argument("--spec", required=True)
    f.add_argument("--class-of-vertex", dest="class_of_vertex")
    f.add_argument("--check", nargs=3, metavar=("REL", "A", "B"))
    f.add_argument("--product", nargs=2, metavar=("A", "B"))
    f = fam.add_parser("words", parents=[common])
    f.add_argument("--sims", nargs=2, metavar=("U", "V"))
    f.add_argument("--simp", nargs=2, metavar=("U", "V"))
    f = fam.add_parser("transform", parents=[common])
    f.add_argument("--kind", choices=("T", "PT", "I", "S"), default="T")
    f.add_argument("--classify", metavar="MAP")
    f.add_argument("--conj", nargs=2, metavar=("P", "Q"))
    f.add_argument("--cayley", type=int, metavar="N")
    f = fam.add_parser("natmap", parents=[common])
    f.add_argument("--map", action="append", metavar="JSON")
    f.add_argument("--random", choices=("injection", "surjection"))
    f.add_argument("--count", type=int, default=5)

    p = sub.add_parser("congruence", parents=[common], help="generated congruences and quotients")
    p.add_argument("--in", dest="inputs", action="append", required=True, metavar="FILE")
    p.add_argument("--pairs", help="JSON list of label pairs; default is the least commutative congruence")

    p = sub.add_parser("trace", parents=[common], help="commutator lattice and universal trace")
    p.add_argument("--in", dest="inputs", action="append", required=True, metavar="FILE")
    p.add_argument("--smith", action="store_true", help="report Smith invariants (needs sympy)")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all", help=", ".join(SUITES) + " or all")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "count", 1) < 1:
            raise InputError("--count must be positive")
        cfg = RunConfig(inputs=tuple(getattr(args, "inputs", None) or ()),
                        relation=getattr(args, "rel", "all"), bound_L=args.bound_L, seed=args.seed,
                        fmt=args.format, override=getattr(args, "override", False), max_order=args.max_order)
        if args.command == "relations":
            return cmd_relations(cfg)
        if args.command == "family":
            return cmd_family(args, cfg)
        if args.command == "congruence":
            return cmd_congruence(args, cfg)
        if args.command == "trace":
            return cmd_trace(args, cfg)
        return cmd_verify(args, cfg)
    except (InputError, SemigroupError, BudgetExceeded, ValueError) as exc:
        print(f"conjcalc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
