"""Numeric quadratic-space machinery.

Gram factorization of symmetric matrices into diagonal ±1 forms, numeric
rank, representations of graphs at parameters (omega, c) and the basic
operations on them (sum, reduction, isometry recovery).

The eigendecomposition is a self-contained cyclic Jacobi sweep; nothing
here depends on an external solver for the factorization itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import DeficientSpanError, GramMismatchError
from .graph import Graph, SignMatrix, epsilon_matrix


@dataclass(frozen=True)
class QuadraticSpace:
    """R^dim with the diagonal bilinear form given by ``signs``."""

    signs: tuple  # entries in {-1, +1}

    def __post_init__(self):
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be -1 or +1")

    @property
    def dim(self) -> int:
        return len(self.signs)

    @property
    def signature(self) -> tuple:
        p = sum(1 for s in self.signs if s == 1)
        return (p, self.dim - p)

    def inner(self, x, y) -> float:
        return float(np.dot(np.asarray(x) * np.array(self.signs, dtype=float), np.asarray(y)))

    def gram(self, vectors) -> np.ndarray:
        """Gram matrix of row-vectors under the diagonal form."""
        v = np.asarray(vectors, dtype=float)
        if self.dim == 0:
            return np.zeros((v.shape[0], v.shape[0]))
        return (v * np.array(self.signs, dtype=float)) @ v.T


def jacobi_eigh(s, max_sweeps=None, off_tol=None):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, Q) with columns of Q the eigenvectors.  Sweeps stop
    once the off-diagonal mass drops below off_tol relative to the matrix
    scale.
    """
    sweeps = max_sweeps if max_sweeps is not None else config.JACOBI_MAX_SWEEPS
    tol = off_tol if off_tol is not None else config.JACOBI_OFF_TOL
    a = np.array(s, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-12, rtol=0):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    q = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), q
    scale = max(1.0, float(np.abs(a).max()))
    for _ in range(sweeps):
        off = math.sqrt(sum(a[i, j] ** 2 for i in range(n) for j in range(i + 1, n)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if abs(apr) <= 1e-300:
                    continue
                theta = (a[r, r] - a[p, p]) / (2.0 * apr)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c
                for k in range(n):
                    akp, akr = a[k, p], a[k, r]
                    a[k, p] = c * akp - sn * akr
                    a[k, r] = sn * akp + c * akr
                for k in range(n):
                    apk, ark = a[p, k], a[r, k]
                    a[p, k] = c * apk - sn * ark
                    a[r, k] = sn * apk + c * ark
                for k in range(n):
                    qkp, qkr = q[k, p], q[k, r]
                    q[k, p] = c * qkp - sn * qkr
                    q[k, r] = sn * qkp + c * qkr
    return np.diag(a).copy(), q


def build_S(m: SignMatrix, omega: float, c: float) -> np.ndarray:
    """Symmetric matrix with diagonal omega and (i,j) entry epsilon_ij * c."""
    s = m.entries.astype(float) * float(c)
    np.fill_diagonal(s, float(omega))
    return s


def rank(s, tol=None) -> int:
    """Numeric rank: eigenvalues above tol relative to the spectral radius."""
    t = tol if tol is not None else config.RANK_TOL
    evals, _ = jacobi_eigh(s)
    if len(evals) == 0:
        return 0
    thr = t * max(1.0, float(np.abs(evals).max()))
    return int(np.sum(np.abs(evals) > thr))


def gram_factorize(s, tol=None):
    """Realize a symmetric matrix as a Gram matrix in a diagonal ±1 form.

    Returns (space, vectors) with vectors an n x r array whose Gram under
    the space's form reproduces s; r is the numeric rank, so the realization
    is reduced.
    """
    t = tol if tol is not None else config.RANK_TOL
    s = np.asarray(s, dtype=float)
    evals, q = jacobi_eigh(s)
    if len(evals) == 0:
        raise ValueError("empty matrix")
    thr = t * max(1.0, float(np.abs(evals).max()))
    keep = [k for k in range(len(evals)) if abs(evals[k]) > thr]
    keep.sort(key=lambda k: -evals[k])  # positive eigenvalues first
    signs = tuple(1 if evals[k] > 0 else -1 for k in keep)
    if keep:
        vectors = q[:, keep] * np.sqrt(np.abs(evals[keep]))
    else:
        vectors = np.zeros((s.shape[0], 0))
    return QuadraticSpace(signs), vectors


class Representation:
    """Vectors u_1..u_n realizing a graph at parameters (omega, c)."""

    __slots__ = ("graph", "omega", "c", "space", "vectors", "gram")

    def __init__(self, graph: Graph, omega, c, space: QuadraticSpace, vectors, gram=None):
        vectors = np.asarray(vectors, dtype=float)
        if vectors.shape != (graph.n, space.dim):
            raise ValueError(
                f"vectors must be {graph.n} x {space.dim}, got {vectors.shape}"
            )
        vectors = vectors.copy()
        vectors.setflags(write=False)
        if gram is None:
            gram = space.gram(vectors)
        gram = np.asarray(gram, dtype=float).copy()
        gram.setflags(write=False)
        self.graph = graph
        self.omega = float(omega)
        self.c = float(c)
        self.space = space
        self.vectors = vectors
        self.gram = gram
        self._validate()

    def _validate(self):
        expected = build_S(epsilon_matrix(self.graph), self.omega, self.c)
        actual = self.space.gram(self.vectors)
        if np.abs(actual - expected).max() > config.GRAM_TOL:
            raise GramMismatchError(
                "vectors do not realize the stated parameters: "
                f"max deviation {np.abs(actual - expected).max():.3g}"
            )

    @classmethod
    def build(cls, graph: Graph, omega, c, tol=None) -> "Representation":
        """Construct the reduced representation at (omega, c) by factorizing
        the parameter matrix."""
        s = build_S(epsilon_matrix(graph), omega, c)
        space, vectors = gram_factorize(s, tol)
        return cls(graph, omega, c, space, vectors, gram=s)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def degree(self) -> int:
        return self.space.dim

    def is_reduced(self, tol=None) -> bool:
        return self.space.dim == rank(self.gram, tol)

    def is_trivial(self) -> bool:
        return self.c == 0.0


def sum_representations(u: Representation, v: Representation) -> Representation:
    """Orthogonal direct sum: parameters add, Gram matrices add."""
    if u.graph != v.graph:
        raise ValueError("representations must share a graph")
    space = QuadraticSpace(u.space.signs + v.space.signs)
    vectors = np.hstack([u.vectors, v.vectors])
    return Representation(u.graph, u.omega + v.omega, u.c + v.c, space, vectors)


def reduce_representation(u: Representation) -> Representation:
    """Drop the null summand: same graph, parameters and Gram, minimal degree."""
    space, vectors = gram_factorize(u.gram)
    return Representation(u.graph, u.omega, u.c, space, vectors, gram=u.gram)


def _pivot_rows(gram: np.ndarray, pivot_tol: float) -> list:
    """Indices of a maximal independent set of rows, by row-pivoted
    elimination on a copy of the Gram matrix."""
    a = np.array(gram, dtype=float)
    n = a.shape[0]
    used = [False] * n
    selected = []
    for col in range(n):
        best, best_val = -1, pivot_tol
        for r in range(n):
            if not used[r] and abs(a[r, col]) > best_val:
                best, best_val = r, abs(a[r, col])
        if best < 0:
            continue
        selected.append(best)
        used[best] = True
        for r in range(n):
            if not used[r] and a[r, col] != 0.0:
                a[r] -= (a[r, col] / a[best, col]) * a[best]
    return sorted(selected)


def isometry_between(u_vectors, v_vectors, space_u: QuadraticSpace,
                     space_v: QuadraticSpace, tol=None) -> np.ndarray:
    """The linear map f with f(u_i) = v_i, given equal Gram matrices.

    Both systems must be reduced (their vectors span the spaces, which have
    equal dimension).  Returns the dim x dim matrix of f; raises
    GramMismatchError or DeficientSpanError otherwise.
    """
    t = tol if tol is not None else config.ISOMETRY_TOL
    u_vectors = np.asarray(u_vectors, dtype=float)
    v_vectors = np.asarray(v_vectors, dtype=float)
    gu = space_u.gram(u_vectors)
    gv = space_v.gram(v_vectors)
    if gu.shape != gv.shape or np.abs(gu - gv).max() > t:
        raise GramMismatchError("input systems have different Gram matrices")
    r = space_u.dim
    if space_v.dim != r:
        raise DeficientSpanError("spaces have different dimensions")
    if r == 0:
        return np.zeros((0, 0))
    pivots = _pivot_rows(gu, config.PIVOT_TOL)
    if len(pivots) < r:
        raise DeficientSpanError(
            f"vectors span only {len(pivots)} of {r} dimensions"
        )
    pivots = pivots[:r]
    basis_u = u_vectors[pivots]  # r x r
    basis_v = v_vectors[pivots]
    try:
        f = np.linalg.solve(basis_u, basis_v).T
    except np.linalg.LinAlgError:
        raise DeficientSpanError("selected basis is numerically singular") from None
    scale = max(1.0, float(np.abs(v_vectors).max()))
    residual = np.abs(u_vectors @ f.T - v_vectors).max()
    if residual > t * scale * 10:
        raise GramMismatchError(f"isometry residual too large: {residual:.3g}")
    return f
