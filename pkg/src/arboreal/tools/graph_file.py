"""Flat-file codecs for graphs (with optional faces) and cycle lists.

Graph files hold ``V <n>``, then one ``E <u> <v>`` line per edge (edge id = order of
appearance), then optional ``F <edge ids>`` face lines, the first being the outer face.
Cycle files hold one cycle per line as space-separated edge ids. ``#`` starts a comment.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple, Union
import logging

from ..errors import NotACycleInFileError, ParseError
from ..graph import EdgeSet, Graph, build_graph, is_cycle
from ..plane import PlaneGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    plane: Optional[PlaneGraph] = None


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _ints(fields: Sequence[str], number: int) -> List[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", number)


def _edge_ids(values: List[int], edge_count: int, number: int) -> EdgeSet:
    if not values:
        raise ParseError("empty edge list", number)
    if len(set(values)) != len(values):
        raise ParseError("edge id repeated", number)
    for edge_id in values:
        if not 0 <= edge_id < edge_count:
            raise ParseError(f"edge id {edge_id} outside 0..{edge_count - 1}", number)
    return EdgeSet.from_ids(values, edge_count)


def parse_graph_file(text: str) -> GraphFile:
    vertex_count: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen: Set[FrozenSet[int]] = set()
    face_lines: List[Tuple[int, List[int]]] = []
    for number, fields in _lines(text):
        tag, values = fields[0], _ints(fields[1:], number)
        if tag == "V":
            if vertex_count is not None or len(values) != 1 or values[0] < 0:
                raise ParseError("expected a single 'V <n>' line before everything else", number)
            vertex_count = values[0]
        elif vertex_count is None:
            raise ParseError("'V <n>' must come first", number)
        elif tag == "E":
            if face_lines:
                raise ParseError("edges must precede faces", number)
            if len(values) != 2:
                raise ParseError("expected 'E <u> <v>'", number)
            u, v = values
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ParseError(f"vertex outside 0..{vertex_count - 1}", number)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", number)
            if frozenset((u, v)) in seen:
                raise ParseError(f"duplicate edge ({u}, {v})", number)
            seen.add(frozenset((u, v)))
            edges.append((u, v))
        elif tag == "F":
            face_lines.append((number, values))
        else:
            raise ParseError(f"unknown record {tag!r}", number)
    if vertex_count is None:
        raise ParseError("missing 'V <n>' line")
    graph = build_graph(vertex_count, edges)
    if not face_lines:
        return GraphFile(graph)
    faces = [_edge_ids(values, graph.edge_count, number) for number, values in face_lines]
    # outer face first in the file, last in memory
    plane = PlaneGraph(graph=graph, faces=tuple(faces[1:] + faces[:1]), outer_face=len(faces) - 1)
    plane.validate()
    logger.debug(f"Parsed plane graph: {vertex_count} vertices, {len(edges)} edges, {len(faces)} faces")
    return GraphFile(graph, plane)


def _read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not UTF-8 text at byte {e.start}") from e


def read_graph_file(path: Union[str, Path]) -> GraphFile:
    return parse_graph_file(_read_text(path))


def serialize_graph(graph: Graph, plane: Optional[PlaneGraph] = None) -> str:
    lines = [f"V {graph.vertex_count}"]
    lines.extend(f"E {u} {v}" for u, v in graph.edges)
    if plane is not None:
        order = [plane.outer_face] + plane.internal_faces()
        lines.extend("F " + " ".join(map(str, plane.faces[f].ids())) for f in order)
    return "\n".join(lines) + "\n"


def parse_cycle_file(text: str, graph: Graph) -> List[EdgeSet]:
    cycles = []
    for number, fields in _lines(text):
        cycle = _edge_ids(_ints(fields, number), graph.edge_count, number)
        if not is_cycle(graph, cycle):
            raise NotACycleInFileError(f"edges {cycle.ids()} do not form a cycle", number)
        cycles.append(cycle)
    return cycles


def read_cycle_file(path: Union[str, Path], graph: Graph) -> List[EdgeSet]:
    return parse_cycle_file(_read_text(path), graph)


def serialize_cycles(cycles: Sequence[EdgeSet]) -> str:
    return "".join(" ".join(map(str, c.ids())) + "\n" for c in cycles)
