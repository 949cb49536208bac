"""Line-oriented instance files.

::

    c comment
    p factor <n> <m>
    e <u> <v>            (m lines, 1-based vertices)
    h * <d1> <d2> ...    (optional default allowed set)
    h <v> <d1> ...       (optional per-vertex override)

Vertices are 1-based on disk and 0-based in memory.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .criteria import DegreeSpec
from .families import GStarLayout
from .graph import Factor, Graph, GraphError


class InstanceError(ValueError):
    pass


@dataclass
class Instance:
    graph: Graph
    spec: DegreeSpec | None = None
    comments: list[str] = field(default_factory=list)


def parse_instance(text: str) -> Instance:
    header = None
    edges = []
    default = None
    overrides: dict[int, set[int]] = {}
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        try:
            if kind == "c":
                comments.append(line[1:].strip())
            elif kind == "p":
                if header is not None:
                    raise InstanceError("duplicate header")
                if len(tok) != 4 or tok[1] != "factor":
                    raise InstanceError("header must read 'p factor <n> <m>'")
                header = (int(tok[2]), int(tok[3]))
                if header[0] < 0 or header[1] < 0:
                    raise InstanceError("negative sizes in header")
            elif kind == "e":
                if header is None:
                    raise InstanceError("edge before header")
                if len(tok) != 3:
                    raise InstanceError("edge line needs two vertices")
                u, v = int(tok[1]), int(tok[2])
                for x in (u, v):
                    if not 1 <= x <= header[0]:
                        raise InstanceError(f"vertex {x} out of range")
                edges.append((u - 1, v - 1))
            elif kind == "h":
                if header is None:
                    raise InstanceError("spec before header")
                if len(tok) < 3:
                    raise InstanceError("spec line needs a vertex and at least one degree")
                vals = {int(x) for x in tok[2:]}
                if tok[1] == "*":
                    default = vals
                else:
                    v = int(tok[1])
                    if not 1 <= v <= header[0]:
                        raise InstanceError(f"vertex {v} out of range")
                    overrides[v - 1] = vals
            else:
                raise InstanceError(f"unknown line type {kind!r}")
        except ValueError as exc:
            raise InstanceError(f"line {lineno}: {exc}") from None
    if header is None:
        raise InstanceError("missing 'p factor' header")
    n, m = header
    if len(edges) != m:
        raise InstanceError(f"header announces {m} edges, found {len(edges)}")
    try:
        G = Graph(n, edges)
    except GraphError as exc:
        raise InstanceError(str(exc)) from None
    spec = None
    if default is not None or overrides:
        sets = []
        for v in range(n):
            s = overrides.get(v, default)
            if s is None:
                raise InstanceError(f"vertex {v + 1} has no allowed set")
            sets.append(s)
        spec = DegreeSpec(sets)
        try:
            spec.validate(G)
        except ValueError as exc:
            raise InstanceError(str(exc)) from None
    return Instance(G, spec, comments)


def read_instance(path) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read())


def format_instance(G: Graph, spec: DegreeSpec | None = None, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p factor {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges)
    if spec is not None:
        common = set(spec.allowed)
        if len(common) == 1:
            lines.append("h * " + " ".join(map(str, sorted(spec.allowed[0]))))
        else:
            for v, a in enumerate(spec.allowed):
                lines.append(f"h {v + 1} " + " ".join(map(str, sorted(a))))
    return "\n".join(lines) + "\n"


def gstar_comments(layout: GStarLayout) -> list[str]:
    out = [f"gstar r={layout.r}", f"hub u={layout.u + 1} v={layout.v + 1}"]
    for i, cp in enumerate(layout.copies, 1):
        out.append(f"copy {i} a={cp.a + 1} b={cp.b + 1}")
    return out


def parse_gstar_comments(comments) -> dict:
    """Recover r, hubs and copy endpoints (0-based) from annotation comments."""
    info: dict = {"copies": {}}
    for c in comments:
        tok = c.split()
        if not tok:
            continue
        kv = dict(t.split("=", 1) for t in tok[1:] if "=" in t)
        if tok[0] == "gstar":
            info["r"] = int(kv["r"])
        elif tok[0] == "hub":
            info["hubs"] = (int(kv["u"]) - 1, int(kv["v"]) - 1)
        elif tok[0] == "copy":
            info["copies"][int(tok[1])] = (int(kv["a"]) - 1, int(kv["b"]) - 1)
    return info


def format_factor(F: Factor) -> str:
    lines = [f"f {u + 1} {v + 1}" for u, v in F.edge_list()]
    lines.extend(f"d {v + 1} {d}" for v, d in enumerate(F.degrees))
    return "\n".join(lines) + "\n"
