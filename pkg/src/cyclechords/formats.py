"""graph6 parsing/emission, edge-list files, and DOT export.

graph6 layout (bit-exact):

* size prefix: one char ``chr(63 + n)`` for ``n < 63``; for
  ``63 <= n <= 258047`` four chars ``'~'`` followed by three chars carrying
  ``n`` as an 18-bit big-endian value, 6 bits per char.
* data: the upper triangle of the adjacency matrix in column order
  ``(0,1), (0,2), (1,2), (0,3), ...``, packed 6 bits per char MSB-first,
  zero-padded to a multiple of 6; every char is ``bits + 63``.

All chars must lie in 63..126.  An optional ``>>graph6<<`` header prefix is
tolerated on input.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Cycle, Graph, GraphError, build_graph

HEADER = ">>graph6<<"
MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def _parse_size(data: str) -> tuple[int, int]:
    """Return (n, index of first data char)."""
    if not data:
        raise Graph6Error("empty graph6 line")
    first = ord(data[0]) - 63
    if first < 63:
        return first, 1
    # '~' prefix: three more chars carry n
    if len(data) < 4:
        raise Graph6Error("truncated multi-byte size prefix")
    if data[1] == "~":
        raise Graph6Error(f"graphs with more than {MAX_N} vertices are not supported")
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    if n < 63:
        raise Graph6Error("non-canonical multi-byte size prefix for n < 63")
    return n, 4


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Rejects characters outside 63..126, truncated data, trailing characters,
    and nonzero padding bits.
    """
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line")
    for ch in text:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"character {code!r} outside graph6 range 63..126")
    n, index = _parse_size(text)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = text[index:]
    if len(data) < nchars:
        raise Graph6Error(f"truncated bit vector: need {nchars} data chars, got {len(data)}")
    if len(data) > nchars:
        raise Graph6Error(f"trailing garbage: {len(data) - nchars} extra chars")
    bits = 0
    for ch in data:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = nchars * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = []
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((u, v))
    return build_graph(n, edges)


def emit_graph6(graph: Graph) -> str:
    """Encode a Graph as a canonical headerless graph6 line (ids preserved)."""
    n = graph.n
    if n > MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds graph6 limit {MAX_N}")
    if n < 63:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + ((n >> 12) & 63)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    bits = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            bits = (bits << 1) | (1 if graph.has_edge(u, v) else 0)
    pad = (-nbits) % 6
    bits <<= pad
    for shift in range(nbits + pad - 6, -1, -6):
        out.append(chr(63 + ((bits >> shift) & 63)))
    return "".join(out)


def iter_graph6(text: str) -> Iterator[Graph]:
    """Parse every nonblank line of a graph6 corpus."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Parse a whitespace edge list: one "u v" pair per line.

    ``#`` starts a comment; an optional first line ``n=<count>`` declares the
    vertex count (otherwise it is max label + 1).
    """
    n_decl = None
    edges = []
    max_label = -1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            n_decl = int(line[2:])
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise GraphError(f"expected 'u v' pair, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        max_label = max(max_label, u, v)
    n = n_decl if n_decl is not None else max_label + 1
    return build_graph(max(n, 0), edges)


def export_dot(
    graph: Graph,
    highlight: Cycle | None = None,
    chords: Iterable[tuple[int, int]] | None = None,
) -> str:
    """Deterministic DOT text; cycle and chord edges carry distinct styles."""
    if highlight is not None:
        highlight.validate(graph)
    cycle_edges = set(highlight.edges()) if highlight is not None else set()
    chord_edges = {tuple(sorted(e)) for e in chords} if chords else set()
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(graph.n):
        lines.append(f"  {v};")
    for u, v in graph.edges():
        if (u, v) in cycle_edges:
            lines.append(f"  {u} -- {v} [color=red, penwidth=2.0];")
        elif (u, v) in chord_edges:
            lines.append(f"  {u} -- {v} [color=blue, style=dashed];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
