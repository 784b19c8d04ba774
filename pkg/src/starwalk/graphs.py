"""Graph families under study and graph ingestion.

All graphs are undirected and simple, with vertices labelled 0..n-1.  The
family constructors fix a canonical labelling so that downstream analyses can
refer to distinguished vertices (e.g. the two centers of a double star are
always vertices 0 and 1) without lookups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "GraphParseError",
    "double_star",
    "path",
    "star",
    "hypercube",
    "adjacency_matrix",
    "parse_graph",
    "spec_kind",
    "double_star_pendant_vertices",
]

_MAX_CUBE_DIM = 20


class GraphParseError(ValueError):
    """Malformed graph spec string or edge-list file."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count, edge set, optional role labels."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: dict[int, str] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        if self.labels is not None:
            for u in self.labels:
                if not (0 <= u < self.n):
                    raise ValueError(f"label on unknown vertex {u}")

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        out = [b if a == u else a for a, b in self.edges if u in (a, b)]
        return sorted(out)

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"vertex {u} out of range for n={self.n}")


def _make(n: int, pairs, labels=None) -> Graph:
    edges = frozenset((min(u, v), max(u, v)) for u, v in pairs)
    return Graph(n=n, edges=edges, labels=labels)


def double_star(k: int, l: int) -> Graph:
    """Double star: adjacent centers of degrees k+1 and l+1, all other vertices leaves.

    Canonical labelling: vertex 0 is the center with k leaves, vertex 1 the
    center with l leaves, vertices 2..k+1 are the leaves of 0, and vertices
    k+2..k+l+1 the leaves of 1.
    """
    if k < 1 or l < 1:
        raise ValueError(f"double star needs k, l >= 1, got k={k}, l={l}")
    n = k + l + 2
    pairs = [(0, 1)]
    pairs += [(0, i) for i in range(2, k + 2)]
    pairs += [(1, i) for i in range(k + 2, n)]
    labels = {0: "center-u", 1: "center-v"}
    labels.update({2 + i: f"leaf-u:{i + 1}" for i in range(k)})
    labels.update({k + 2 + i: f"leaf-v:{i + 1}" for i in range(l)})
    return _make(n, pairs, labels)


def path(n: int) -> Graph:
    """Path on vertices 0..n-1 with edges {i, i+1}."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    labels = {0: "end:0"} if n == 1 else {0: "end:0", n - 1: "end:1"}
    return _make(n, [(i, i + 1) for i in range(n - 1)], labels)


def star(k: int) -> Graph:
    """Star with center 0 and k leaves 1..k."""
    if k < 1:
        raise ValueError(f"star needs k >= 1, got {k}")
    labels = {0: "center"}
    labels.update({i: f"leaf:{i}" for i in range(1, k + 1)})
    return _make(k + 1, [(0, i) for i in range(1, k + 1)], labels)


def hypercube(d: int) -> Graph:
    """d-cube on bitstring vertices 0..2^d-1, edges between Hamming neighbors."""
    if d < 1:
        raise ValueError(f"hypercube needs d >= 1, got {d}")
    if d > _MAX_CUBE_DIM:
        raise ValueError(f"hypercube dimension {d} exceeds limit {_MAX_CUBE_DIM}")
    n = 1 << d
    pairs = [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)]
    labels = {x: format(x, f"0{d}b") for x in range(n)}
    return _make(n, pairs, labels)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric 0/1 adjacency matrix with zero diagonal."""
    A = np.zeros((g.n, g.n))
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1.0
    return A


def double_star_pendant_vertices(k: int, l: int) -> tuple[int, int]:
    """Canonical pendant pair of double_star(k, l): the two leaves that share a
    center of degree 3 (for k=l=1, the two outer leaves of the path)."""
    if k == 2 or (k == 1 and l == 1):
        return (2, 3)
    if l == 2:
        return (k + 2, k + 3)
    raise ValueError(
        f"double_star({k}, {l}) has no canonical pendant pair (needs a side with 2 leaves)"
    )


def spec_kind(spec: str) -> tuple[str, tuple]:
    """Split a graph spec string into (family, parsed arguments).

    Grammar: ``path:n | star:k | dstar:k,l | cube:d | file:<path>``.
    """
    idx = spec.find(":")
    if idx < 0:
        raise GraphParseError(f"expected 'family:args' in {spec!r}", 0)
    family, arg = spec[:idx], spec[idx + 1 :]
    if family not in ("path", "star", "dstar", "cube", "file"):
        raise GraphParseError(f"unknown graph family {family!r}", 0)
    if family == "file":
        if not arg:
            raise GraphParseError("empty file path", idx + 1)
        return family, (arg,)
    parts = arg.split(",")
    want = 2 if family == "dstar" else 1
    if len(parts) != want:
        raise GraphParseError(
            f"family {family!r} takes {want} integer argument(s), got {arg!r}", idx + 1
        )
    nums = []
    pos = idx + 1
    for part in parts:
        try:
            nums.append(int(part))
        except ValueError:
            raise GraphParseError(f"bad integer {part!r}", pos) from None
        pos += len(part) + 1
    return family, tuple(nums)


def _graph_from_file(path_str: str) -> Graph:
    try:
        with open(path_str, encoding="utf-8") as fh:
            tokens = fh.read().split()
    except OSError as exc:
        raise GraphParseError(f"cannot read edge list {path_str!r}: {exc}") from exc
    if not tokens:
        raise GraphParseError(f"empty edge-list file {path_str!r}", 0)
    try:
        n = int(tokens[0])
    except ValueError:
        raise GraphParseError(f"bad vertex count {tokens[0]!r}", 0) from None
    if n < 1:
        raise GraphParseError(f"vertex count must be positive, got {n}", 0)
    rest = tokens[1:]
    if len(rest) % 2:
        raise GraphParseError("odd number of edge endpoints", len(tokens) - 1)
    seen = set()
    pairs = []
    for i in range(0, len(rest), 2):
        try:
            u, v = int(rest[i]), int(rest[i + 1])
        except ValueError:
            raise GraphParseError(f"bad endpoint near token {i + 1}", i + 1) from None
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", i + 1)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range in edge ({u}, {v})", i + 1)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge ({u}, {v})", i + 1)
        seen.add(key)
        pairs.append(key)
    return _make(n, pairs)


def parse_graph(spec: str) -> Graph:
    """Build a graph from a spec string (see :func:`spec_kind` for the grammar)."""
    family, args = spec_kind(spec)
    if family == "file":
        return _graph_from_file(args[0])
    if any(a < 1 for a in args):
        raise GraphParseError(f"{family} arguments must be positive, got {args}")
    if family == "path":
        return path(args[0])
    if family == "star":
        return star(args[0])
    if family == "cube":
        if args[0] > _MAX_CUBE_DIM:
            raise GraphParseError(f"cube dimension {args[0]} exceeds limit {_MAX_CUBE_DIM}")
        return hypercube(args[0])
    return double_star(args[0], args[1])
