"""Graphviz DOT text for target graphs and plumbing graphs.

Output depends only on the input value: vertices and edges are emitted in
sorted order, so equal inputs give byte-identical text.
"""

from __future__ import annotations

from .foldcore import TargetGraph, depths
from .plumbing import PlumbingGraph


def _q(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def target_graph_dot(g: TargetGraph) -> str:
    top = g.codim.max_index
    d = depths(g) if g.report.ok else {}
    lines = [
        "digraph target_graph {",
        f"  label={_q(f'n={g.codim.n}, k={g.codim.k}')};",
        "  node [shape=circle];",
    ]
    for v, chi in g.vertices.items():
        depth = d.get(v, "?")
        shape = ", shape=doublecircle" if v == g.root else ""
        label = _q(f"{v}\ndepth {depth}, chiR {chi}")
        lines.append(f"  {_q(v)} [label={label}{shape}];")
    for e in g.edges:
        label = _q(f"{e.label.render(top)}, chiS {e.chi_sing}")
        lines.append(f"  {_q(e.tail)} -> {_q(e.head)} [label={label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def plumbing_graph_dot(pg: PlumbingGraph) -> str:
    lines = [
        "digraph plumbing_graph {",
        f"  label={_q(f'signs: {pg.sign_convention}')};",
        "  edge [dir=none];",
        f"  center [label={_q(f'[{pg.genus}]')}, xlabel={_q(pg.central_weight)}];",
    ]
    for i, chain in enumerate(pg.chains, start=1):
        prev = "center"
        for j, w in enumerate(chain, start=1):
            node = f"t{i}_{j}"
            lines.append(f"  {node} [label={_q(w)}];")
            lines.append(f"  {prev} -> {node};")
            prev = node
    for i in range(1, pg.boundary_arrows + 1):
        lines.append(f"  arrow{i} [shape=none, label=\"\", width=0, height=0];")
        lines.append(f"  center -> arrow{i} [dir=forward, arrowhead=normal];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(obj: TargetGraph | PlumbingGraph) -> str:
    if isinstance(obj, TargetGraph):
        return target_graph_dot(obj)
    if isinstance(obj, PlumbingGraph):
        return plumbing_graph_dot(obj)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")
