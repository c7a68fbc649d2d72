"""Graph data model, sign matrices and graph automorphisms.

Vertices are 0-based everywhere inside the library; the 1-based convention
of the file format and the CLI is translated at the parse/print boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import BoundExceededError, ParseError


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset  # frozenset of (i, j) tuples with i < j

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n, edges) -> "Graph":
        """Build from an iterable of (i, j) pairs in either order, 0-based."""
        normalized = frozenset((min(i, j), max(i, j)) for i, j in edges)
        return cls(n, normalized)

    def linked(self, i, j) -> bool:
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self.edges

    def degrees(self) -> list:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def sorted_edges(self) -> list:
        return sorted(self.edges)


class SignMatrix:
    """Symmetric matrix over {-1, +1} with +1 diagonal."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("sign matrix must be square")
        if not np.all(np.abs(a) == 1):
            raise ValueError("entries must be -1 or +1")
        if not np.array_equal(a, a.T):
            raise ValueError("sign matrix must be symmetric")
        if not np.all(np.diag(a) == 1):
            raise ValueError("diagonal must be +1")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    def __setattr__(self, name, value):
        raise AttributeError("SignMatrix is immutable")

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij):
        return int(self.entries[ij])

    def __eq__(self, other):
        return isinstance(other, SignMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"SignMatrix({self.entries.tolist()})"

    def linked_masks(self) -> list:
        """Row bitmasks: bit j of mask i set iff entry (i, j) = -1."""
        n = self.n
        masks = []
        for i in range(n):
            m = 0
            for j in range(n):
                if self.entries[i, j] == -1:
                    m |= 1 << j
            masks.append(m)
        return masks


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection")

    @classmethod
    def identity(cls, n) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, im in enumerate(self.images):
            inv[im] = i
        return Permutation(tuple(inv))


def parse_graph(text: str) -> Graph:
    """Parse the text graph format.

    Lines starting with '#' are comments.  The first significant line is the
    vertex count n; every following significant line is an edge "i j" with
    1-based endpoints.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append(stripped)
    if not lines:
        raise ParseError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"vertex count is not an integer: {lines[0]!r}") from None
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}")
    edges = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex indices, got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex index in {line!r}") from None
        if i == j:
            raise ParseError(f"self-loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex index out of range in {line!r} (n={n})")
        e = (min(i, j) - 1, max(i, j) - 1)
        if e in edges:
            raise ParseError(f"duplicate edge {i} {j}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph (1-based output)."""
    out = [str(g.n)]
    for i, j in g.sorted_edges():
        out.append(f"{i + 1} {j + 1}")
    return "\n".join(out) + "\n"


def epsilon_matrix(g: Graph) -> SignMatrix:
    """The graph's sign matrix: -1 exactly at linked pairs, +1 elsewhere."""
    a = np.ones((g.n, g.n), dtype=np.int64)
    for i, j in g.edges:
        a[i, j] = -1
        a[j, i] = -1
    return SignMatrix(a)


def graph_from_sign_matrix(m: SignMatrix) -> Graph:
    """Inverse of epsilon_matrix."""
    edges = set()
    for i in range(m.n):
        for j in range(i + 1, m.n):
            if m[i, j] == -1:
                edges.add((i, j))
    return Graph(m.n, frozenset(edges))


def conjugate_matrix(s: Permutation, m: SignMatrix) -> SignMatrix:
    """Relabel m by s: result[s(i)][s(j)] = m[i][j]."""
    if s.n != m.n:
        raise ValueError(f"size mismatch: permutation on {s.n}, matrix on {m.n}")
    n = m.n
    out = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            out[s.images[i], s.images[j]] = m.entries[i, j]
    return SignMatrix(out)


def graph_automorphisms(g: Graph, max_n=None) -> list:
    """All permutations preserving the edge set, by backtracking search.

    Degree-sequence pruning plus incremental adjacency checks; fine for the
    desk-scale graphs this library targets.
    """
    bound = max_n if max_n is not None else config.enumeration_bound()
    if g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds enumeration bound {bound}")
    n = g.n
    deg = g.degrees()
    adj = [[g.linked(i, j) for j in range(n)] for i in range(n)]
    images = [-1] * n
    used = [False] * n
    found = []

    def rec(v):
        if v == n:
            found.append(Permutation(tuple(images)))
            return
        for cand in range(n):
            if used[cand] or deg[cand] != deg[v]:
                continue
            ok = True
            for w in range(v):
                if adj[v][w] != adj[cand][images[w]]:
                    ok = False
                    break
            if ok:
                images[v] = cand
                used[cand] = True
                rec(v + 1)
                used[cand] = False
        images[v] = -1

    rec(0)
    found.sort(key=lambda p: p.images)
    return found
