"""Graphviz DOT renderings of the structural graphs.

Four kinds: the Coxeter graph of the monoid (undirected dependence),
the multigraph of states, the digraph of cliques, and the digraph of
states-and-cliques.  Node ordering follows declaration order throughout
so output is byte-stable; null nodes get a dashed style on request.
"""

from __future__ import annotations

from .errors import SchemaError
from .monoid import Clique, TraceMonoid
from .system import ConcurrentSystem

GRAPH_KINDS = ("coxeter", "states", "cliques", "sc")


def _clique_label(c: Clique) -> str:
    return "{" + ",".join(c) + "}"


def coxeter_dot(m: TraceMonoid) -> str:
    lines = ["graph coxeter {"]
    for a in m.letters:
        lines.append(f'  "{a}";')
    for i, a in enumerate(m.letters):
        for b in m.letters[i + 1:]:
            if not m.independent(a, b):
                lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def states_dot(s: ConcurrentSystem) -> str:
    lines = ["digraph states {"]
    for alpha in s.states:
        lines.append(f'  "{alpha}";')
    for alpha in s.states:
        for a in s.enabled_letters[alpha]:
            beta = s.action[(alpha, a)]
            lines.append(f'  "{alpha}" -> "{beta}" [label="{a}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cliques_dot(m: TraceMonoid) -> str:
    lines = ["digraph cliques {"]
    for c in m.nonempty_cliques:
        lines.append(f'  "{_clique_label(c)}";')
    for c in m.nonempty_cliques:
        for d in m.nonempty_cliques:
            if m.is_normal_pair(c, d):
                lines.append(f'  "{_clique_label(c)}" -> "{_clique_label(d)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sc_dot(s: ConcurrentSystem, null_set=()) -> str:
    """Digraph of states-and-cliques; nodes in null_set render dashed."""
    dg = s.sc_digraph()
    nulls = set(null_set)

    def name(node) -> str:
        alpha, c = node
        return f"({alpha},{_clique_label(c)})"

    lines = ["digraph states_and_cliques {"]
    for node in dg.nodes:
        style = ' [style=dashed]' if node in nulls else ""
        lines.append(f'  "{name(node)}"{style};')
    for src, dst in dg.edges:
        lines.append(f'  "{name(src)}" -> "{name(dst)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(s: ConcurrentSystem, kind: str, null_set=()) -> str:
    if kind == "coxeter":
        return coxeter_dot(s.monoid)
    if kind == "states":
        return states_dot(s)
    if kind == "cliques":
        return cliques_dot(s.monoid)
    if kind == "sc":
        return sc_dot(s, null_set)
    raise SchemaError(f"unknown graph kind {kind!r}, expected one of {GRAPH_KINDS}")
