"""planar_code byte streams (8-bit variant).

The format used by the common plane-graph generators: an optional ASCII
header ``>>planar_code<<``, then one record per graph.  A record is one
unsigned byte n (the vertex count), followed for each vertex 1..n by its
neighbors in rotation order as unsigned bytes, terminated by a zero byte.
Identifiers are 1-based; multiple records may be concatenated.

Encoding normalizes each rotation to start at the lowest-numbered neighbor,
so decode(encode(G)) reproduces the adjacency and the cyclic rotation
orders exactly.
"""

from __future__ import annotations

from typing import Iterable

from .errors import StarpackError
from .graphs import EmbeddedCubicGraph, GraphError, build_graph

HEADER = b">>planar_code<<"

MAX_VERTICES = 255


class CodecError(StarpackError):
    """Malformed planar_code data."""


class TruncatedStreamError(CodecError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class IdentifierOutOfRangeError(CodecError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ValidationFailedError(CodecError):
    """A decoded record is not a valid embedded cubic graph."""

    def __init__(self, graph_index: int, cause: GraphError):
        super().__init__(f"graph #{graph_index} in stream: {cause}")
        self.graph_index = graph_index


class TooLargeError(CodecError):
    """The 8-bit format cannot carry more than 255 vertices."""


def decode_planar_code(data: bytes) -> list[EmbeddedCubicGraph]:
    """Decode every record in the stream, validating each graph.

    Total over arbitrary byte input: raises a CodecError subclass with a
    byte offset on malformed data, never anything else.
    """
    pos = 0
    if data.startswith(HEADER):
        pos = len(HEADER)
    graphs: list[EmbeddedCubicGraph] = []
    while pos < len(data):
        n = data[pos]
        if n == 0:
            raise IdentifierOutOfRangeError("vertex count byte is 0", offset=pos)
        pos += 1
        rotations: list[tuple[int, ...]] = []
        for v in range(1, n + 1):
            neighbors: list[int] = []
            while True:
                if pos >= len(data):
                    raise TruncatedStreamError(
                        f"stream ended inside the neighbor list of vertex {v}",
                        offset=len(data),
                    )
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise IdentifierOutOfRangeError(
                        f"neighbor {b} exceeds vertex count {n}", offset=pos - 1
                    )
                neighbors.append(b)
            rotations.append(tuple(neighbors))
        try:
            graphs.append(build_graph(n, rotations))
        except GraphError as exc:
            raise ValidationFailedError(len(graphs), exc) from exc
    return graphs


def encode_planar_code(
    g: EmbeddedCubicGraph, *, include_header: bool = True
) -> bytes:
    """Encode one graph; see the module docstring for the normalization."""
    if g.vertex_count > MAX_VERTICES:
        raise TooLargeError(
            f"{g.vertex_count} vertices exceed the 8-bit limit of {MAX_VERTICES}"
        )
    out = bytearray(HEADER if include_header else b"")
    out.append(g.vertex_count)
    for triple in g.canonical_rotations():
        out.extend(triple)
        out.append(0)
    return bytes(out)


def encode_planar_code_stream(graphs: Iterable[EmbeddedCubicGraph]) -> bytes:
    """Concatenate several graphs under a single header."""
    out = bytearray(HEADER)
    for g in graphs:
        out.extend(encode_planar_code(g, include_header=False))
    return bytes(out)
