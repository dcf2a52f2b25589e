"""File codecs and export helpers."""

from .dot import tree_graph_to_dot
from .graph_file import (
    GraphFile,
    parse_cycle_file,
    parse_graph_file,
    read_cycle_file,
    read_graph_file,
    serialize_cycles,
    serialize_graph,
)

__all__ = [
    'GraphFile',
    'parse_cycle_file',
    'parse_graph_file',
    'read_cycle_file',
    'read_graph_file',
    'serialize_cycles',
    'serialize_graph',
    'tree_graph_to_dot',
]
