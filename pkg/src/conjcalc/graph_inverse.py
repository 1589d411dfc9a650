"""Graph inverse semigroups.

Every nonzero element is stored in its unique normal form ``x y^-1``: a
pair of paths with a common range vertex.  A path is a start vertex plus a
tuple of edge indices, so a vertex is the path with no edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Sequence


class NotClosed(ValueError):
    pass


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    edge_names: tuple[str, ...]
    source: tuple[int, ...]
    range: tuple[int, ...]

    @classmethod
    def make(cls, vertices: Sequence[str], edges: Sequence[tuple[str, str, str]]) -> DirectedGraph:
        vertices = tuple(vertices)
        vpos = {v: i for i, v in enumerate(vertices)}
        if len(vpos) != len(vertices):
            raise GraphError("vertex names must be distinct")
        names, src, rng = [], [], []
        for name, s, r in edges:
            if s not in vpos or r not in vpos:
                raise GraphError(f"edge {name!r} uses an unknown vertex")
            names.append(name)
            src.append(vpos[s])
            rng.append(vpos[r])
        if len(set(names)) != len(names) or set(names) & set(vertices):
            raise GraphError("edge names must be distinct from each other and from vertices")
        return cls(vertices, tuple(names), tuple(src), tuple(rng))

    @classmethod
    def from_json(cls, data: dict | str) -> DirectedGraph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.make(data["vertices"], [tuple(e) for e in data["edges"]])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [[n, self.vertices[s], self.vertices[r]]
                          for n, s, r in zip(self.edge_names, self.source, self.range)]}

    def incoming(self, v: int) -> list[int]:
        return [e for e, r in enumerate(self.range) if r == v]

    def outgoing(self, v: int) -> list[int]:
        return [e for e, s in enumerate(self.source) if s == v]

    def is_loop(self, e: int) -> bool:
        return self.source[e] == self.range[e]

    def vertex(self, name: str) -> int:
        return self.vertices.index(name)

    def edge(self, name: str) -> int:
        return self.edge_names.index(name)


@dataclass(frozen=True, order=True)
class Path:
    start: int
    edges: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def end(self, E: DirectedGraph) -> int:
        return E.range[self.edges[-1]] if self.edges else self.start

    def is_closed(self, E: DirectedGraph) -> bool:
        return self.end(E) == self.start

    def then(self, E: DirectedGraph, other: Path) -> Path:
        if self.end(E) != other.start:
            raise GraphError("paths are not composable")
        return Path(self.start, self.edges + other.edges)

    def strip_prefix(self, E: DirectedGraph, prefix: Path) -> Path | None:
        """``rest`` with ``self = prefix rest``, or None."""
        k = len(prefix.edges)
        if prefix.start != self.start or self.edges[:k] != prefix.edges:
            return None
        return Path(prefix.end(E), self.edges[k:])


def make_path(E: DirectedGraph, edges: Sequence[int], start: int | None = None) -> Path:
    edges = tuple(edges)
    if not edges:
        if start is None:
            raise GraphError("a vertex path needs its vertex")
        return Path(start)
    for a, b in zip(edges, edges[1:]):
        if E.range[a] != E.source[b]:
            raise GraphError("edges do not form a path")
    s = E.source[edges[0]]
    if start is not None and start != s:
        raise GraphError("start vertex does not match the first edge")
    return Path(s, edges)


class _GisZero:
    __slots__ = ()

    def __repr__(self) -> str:
        return "GZERO"

    def __reduce__(self):
        return "GZERO"

    def __lt__(self, other):
        return other is not self


GZERO = _GisZero()


@dataclass(frozen=True, order=True)
class GisElement:
    """``x y^-1`` with ``r(x) = r(y)``."""
    x: Path
    y: Path


def element(E: DirectedGraph, x: Path, y: Path) -> GisElement:
    if x.end(E) != y.end(E):
        raise GraphError("x and y must end at the same vertex")
    return GisElement(x, y)


def vertex_element(v: int) -> GisElement:
    return GisElement(Path(v), Path(v))


def multiply(E: DirectedGraph, a, b):
    if a is GZERO or b is GZERO:
        return GZERO
    x, y = a.x, a.y
    u, v = b.x, b.y
    rest = u.strip_prefix(E, y)
    if rest is not None:            # u = y u'
        return GisElement(x.then(E, rest), v)
    rest = y.strip_prefix(E, u)
    if rest is not None:            # y = u y'
        return GisElement(x, v.then(E, rest))
    return GZERO


def product_of(E: DirectedGraph, factors: Iterable):
    it = iter(factors)
    acc = next(it)
    for f in it:
        acc = multiply(E, acc, f)
    return acc


def inverse(a):
    if a is GZERO:
        return GZERO
    return GisElement(a.y, a.x)


def is_idempotent(a) -> bool:
    return a is GZERO or a.x == a.y


def natural_leq(E: DirectedGraph, a, b) -> bool:
    """``a = b e`` for an idempotent ``e``: zero, ``b`` itself, or ``(x w, y w)`` for ``b = (x, y)``."""
    if a is GZERO:
        return True
    if b is GZERO:
        return False
    wx = a.x.strip_prefix(E, b.x)
    wy = a.y.strip_prefix(E, b.y)
    return wx is not None and wx == wy


def paths_up_to(E: DirectedGraph, length: int) -> list[Path]:
    out = [Path(v) for v in range(len(E.vertices))]
    layer = [Path(E.source[e], (e,)) for e in range(len(E.edge_names))]
    for _ in range(length):
        out.extend(layer)
        layer = [Path(p.start, p.edges + (e,)) for p in layer for e in E.outgoing(p.end(E))]
    return out


def ball(E: DirectedGraph, radius: int, with_zero: bool = True) -> list:
    """Nonzero elements with ``|x| + |y| <= radius`` (and the zero)."""
    paths = paths_up_to(E, radius)
    out = [GisElement(x, y) for x, y in product(paths, paths)
           if len(x) + len(y) <= radius and x.end(E) == y.end(E)]
    out.sort()
    return out + ([GZERO] if with_zero else [])


# ---------------------------------------------------------------- rotations

def approx_closed(E: DirectedGraph, x: Path, y: Path) -> bool:
    """``x = z1 z2`` and ``y = z2 z1`` for paths ``z1, z2``."""
    if not x.is_closed(E) or not y.is_closed(E):
        raise NotClosed("both paths must be closed")
    if len(x) != len(y):
        return False
    if not x.edges:
        return x == y
    k = len(x.edges)
    return any(x.edges[i:] + x.edges[:i] == y.edges for i in range(k))


def rotation_key(E: DirectedGraph, x: Path) -> tuple:
    if not x.is_closed(E):
        raise NotClosed("path is not closed")
    if not x.edges:
        return ("vertex", x.start)
    k = len(x.edges)
    return ("cycle", min(x.edges[i:] + x.edges[:i] for i in range(k)))


def conjugate_shape(E: DirectedGraph, a):
    """``("pos", y, x)`` for ``a = y x y^-1``, ``("neg", y, x)`` for ``a = y x^-1 y^-1`` with x not a vertex, else None."""
    if a is GZERO:
        return None
    u, w = a.x, a.y
    rest = u.strip_prefix(E, w)
    if rest is not None:
        return "pos", w, rest
    rest = w.strip_prefix(E, u)
    if rest is not None and rest.edges:
        return "neg", u, rest
    return None


def gis_sim_p_key(E: DirectedGraph, a) -> tuple:
    shape = conjugate_shape(E, a)
    if shape is None:
        return ("zero",)
    kind, _, x = shape
    return (kind, rotation_key(E, x))


def gis_sim_p(E: DirectedGraph, a, b) -> bool:
    return gis_sim_p_key(E, a) == gis_sim_p_key(E, b)


# ------------------------------------------------- least commutative congruence

class VertexClass(Enum):
    SINGLETON = "Singleton"
    LOOP_POWERS = "LoopPowers"
    COLLAPSES = "CollapsesToZero"


def vertex_class(E: DirectedGraph, v: int) -> tuple[VertexClass, int | None]:
    """Classify a vertex by the edges entering it; the loop is returned for LoopPowers."""
    inc = E.incoming(v)
    if not inc:
        return VertexClass.SINGLETON, None
    if len(inc) == 1 and E.is_loop(inc[0]):
        return VertexClass.LOOP_POWERS, inc[0]
    return VertexClass.COLLAPSES, None


def _loop_exponent(x: Path, e: int) -> int | None:
    return len(x.edges) if all(f == e for f in x.edges) else None


def gis_sim_s_key(E: DirectedGraph, a) -> tuple:
    if a is GZERO:
        return ("zero",)
    x, y = a.x, a.y
    if x.start != y.start:
        return ("zero",)
    kind, loop = vertex_class(E, x.start)
    if kind is VertexClass.SINGLETON and not x.edges and not y.edges:
        return ("vertex", x.start)
    if kind is VertexClass.LOOP_POWERS:
        n, m = _loop_exponent(x, loop), _loop_exponent(y, loop)
        if n is not None and m is not None:
            return ("loop", loop, n - m)
    return ("zero",)


def gis_sim_s(E: DirectedGraph, a, b) -> bool:
    return gis_sim_s_key(E, a) == gis_sim_s_key(E, b)


# ------------------------------------------------------------- test graphs

def polycyclic(n: int) -> DirectedGraph:
    if n < 1:
        raise GraphError("n must be positive")
    return DirectedGraph.make(["v"], [(f"e{k}" if n > 1 else "e", "v", "v") for k in range(1, n + 1)])


def standard_graphs() -> dict[str, DirectedGraph]:
    return {
        "isolated": DirectedGraph.make(["v"], []),
        "bicyclic": polycyclic(1),
        "polycyclic2": polycyclic(2),
        "two_cycle": DirectedGraph.make(["v", "w"], [("a", "v", "w"), ("b", "w", "v")]),
        "loop_tail": DirectedGraph.make(["v", "w"], [("e", "v", "v"), ("f", "w", "v")]),
        "single_edge": DirectedGraph.make(["v", "w"], [("a", "v", "w")]),
    }


# ------------------------------------------------------------ serialization

def path_to_json(E: DirectedGraph, p: Path) -> list[str]:
    if not p.edges:
        return ["@" + E.vertices[p.start]]
    return [E.edge_names[e] for e in p.edges]


def path_from_json(E: DirectedGraph, items: Sequence[str]) -> Path:
    if len(items) == 1 and items[0].startswith("@"):
        return Path(E.vertex(items[0][1:]))
    return make_path(E, [E.edge(name) for name in items])


def element_to_json(E: DirectedGraph, a):
    if a is GZERO:
        return "0"
    return {"x": path_to_json(E, a.x), "y": path_to_json(E, a.y)}


def element_from_json(E: DirectedGraph, data):
    if data == "0" or data == 0:
        return GZERO
    return element(E, path_from_json(E, data["x"]), path_from_json(E, data["y"]))


def element_label(E: DirectedGraph, a) -> str:
    if a is GZERO:
        return "0"

    def word(p: Path, inv: bool) -> str:
        if not p.edges:
            return ""
        names = [E.edge_names[e] for e in p.edges]
        return " ".join(f"{n}^-1" for n in reversed(names)) if inv else " ".join(names)

    parts = [word(a.x, False), word(a.y, True)]
    text = " ".join(p for p in parts if p)
    return text or E.vertices[a.x.start]
