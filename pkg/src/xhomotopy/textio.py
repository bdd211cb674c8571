"""Plain-text graph/map format and DOT export.

Graph block:

    graph <name>
    vertices: v1 v2 ...
    edges: u-v u-u ...        (loops written u-u; the line may be empty)

Map block (graphs must be declared first):

    map <name> : <domain> -> <codomain>
    <v> -> <w>                (one line per domain vertex)

Blocks are separated by blank lines.  Serialization preserves vertex order,
so parse(serialize(G)) == G exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Graph, GraphError, GraphMap, make_graph


class ParseError(GraphError):
    pass


@dataclass
class Document:
    graphs: dict[str, Graph] = field(default_factory=dict)
    maps: dict[str, GraphMap] = field(default_factory=dict)
    map_signatures: dict[str, tuple[str, str]] = field(default_factory=dict)

    def graph(self, name: str) -> Graph:
        try:
            return self.graphs[name]
        except KeyError:
            raise ParseError(f"no graph named {name!r} in the document") from None

    def map(self, name: str) -> GraphMap:
        try:
            return self.maps[name]
        except KeyError:
            raise ParseError(f"no map named {name!r} in the document") from None


def serialize_graph(name: str, G: Graph) -> str:
    edges = " ".join(f"{u}-{v}" for u, v in sorted(G.edges))
    return f"graph {name}\nvertices: {' '.join(G.vertices)}\nedges: {edges}".rstrip() + "\n"


def serialize_map(name: str, f: GraphMap, domain_name: str, codomain_name: str) -> str:
    lines = [f"map {name} : {domain_name} -> {codomain_name}"]
    lines.extend(f"{v} -> {f(v)}" for v in f.domain.vertices)
    return "\n".join(lines) + "\n"


def serialize_document(doc: Document) -> str:
    blocks = [serialize_graph(name, g) for name, g in doc.graphs.items()]
    blocks.extend(
        serialize_map(name, doc.maps[name], *doc.map_signatures[name]) for name in doc.maps
    )
    return "\n".join(blocks)


def _parse_graph_block(lines: list[str]) -> tuple[str, Graph]:
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"bad graph header: {lines[0]!r}")
    if len(lines) < 2 or not lines[1].startswith("vertices:"):
        raise ParseError(f"graph {header[1]!r} is missing its vertices: line")
    verts = lines[1][len("vertices:"):].split()
    edges = []
    if len(lines) > 2:
        if not lines[2].startswith("edges:"):
            raise ParseError(f"graph {header[1]!r}: expected an edges: line")
        for token in lines[2][len("edges:"):].split():
            ends = token.split("-")
            if len(ends) != 2 or not ends[0] or not ends[1]:
                raise ParseError(f"bad edge token {token!r}")
            edges.append((ends[0], ends[1]))
        if len(lines) > 3:
            raise ParseError(f"graph {header[1]!r}: unexpected extra lines")
    try:
        return header[1], make_graph(verts, edges)
    except GraphError as exc:
        raise ParseError(f"graph {header[1]!r}: {exc}") from exc


def _parse_map_block(lines: list[str], doc: Document) -> tuple[str, tuple[str, str], GraphMap]:
    header = lines[0].split()
    if len(header) != 6 or header[2] != ":" or header[4] != "->":
        raise ParseError(f"bad map header: {lines[0]!r}")
    name, dom_name, cod_name = header[1], header[3], header[5]
    dom = doc.graph(dom_name)
    cod = doc.graph(cod_name)
    assignment = {}
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[1] != "->":
            raise ParseError(f"map {name!r}: bad assignment line {line!r}")
        assignment[tokens[0]] = tokens[2]
    try:
        return name, (dom_name, cod_name), GraphMap(dom, cod, tuple(assignment.items()))
    except GraphError as exc:
        raise ParseError(f"map {name!r}: {exc}") from exc


def parse_document(text: str) -> Document:
    doc = Document()
    block: list[str] = []
    blocks: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if block:
                blocks.append(block)
                block = []
            continue
        block.append(line)
    if block:
        blocks.append(block)
    for lines in blocks:
        if lines[0].startswith("graph"):
            name, g = _parse_graph_block(lines)
            if name in doc.graphs:
                raise ParseError(f"graph {name!r} declared twice")
            doc.graphs[name] = g
        elif lines[0].startswith("map"):
            name, sig, f = _parse_map_block(lines, doc)
            if name in doc.maps:
                raise ParseError(f"map {name!r} declared twice")
            doc.maps[name] = f
            doc.map_signatures[name] = sig
        else:
            raise ParseError(f"unrecognized block starting with {lines[0]!r}")
    return doc


def to_dot(name: str, G: Graph) -> str:
    """Undirected DOT with loops as self-edges, in deterministic order."""
    lines = [f'graph "{name}" {{']
    lines.extend(f'  "{v}";' for v in G.vertices)
    lines.extend(f'  "{u}" -- "{v}";' for u, v in sorted(G.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
