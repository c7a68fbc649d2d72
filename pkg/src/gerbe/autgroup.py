"""The signed-permutation isometry group of a line sheaf.

Elements are pairs (sigma, nu) of a permutation and a ±1 sign vector
compatible with the ambient sign matrix; they act on the representation
vectors by u_i -> nu_i * u_{sigma(i)}.  The group is small at the scales
this package targets, so it is stored fully enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend, config
from .errors import BoundExceededError
from .graph import Permutation, SignMatrix
from .quadspace import Representation, isometry_between
from .sheaf import LinePartition


@dataclass(frozen=True)
class SignedPermutation:
    sigma: Permutation
    nu: tuple  # entries in {-1, +1}

    def __post_init__(self):
        if len(self.nu) != self.sigma.n:
            raise ValueError("sign vector length must match the permutation")
        if any(v not in (-1, 1) for v in self.nu):
            raise ValueError("signs must be -1 or +1")

    @classmethod
    def identity(cls, n) -> "SignedPermutation":
        return cls(Permutation.identity(n), (1,) * n)

    @classmethod
    def central(cls, n) -> "SignedPermutation":
        return cls(Permutation.identity(n), (-1,) * n)

    @property
    def n(self) -> int:
        return self.sigma.n

    def is_valid(self, m: SignMatrix) -> bool:
        """Sign-compatibility with the ambient matrix, checked on all pairs."""
        if self.n != m.n:
            return False
        for i in range(self.n):
            for j in range(i + 1, self.n):
                si, sj = self.sigma(i), self.sigma(j)
                if self.nu[i] * self.nu[j] * m[si, sj] != m[i, j]:
                    return False
        return True

    def sort_key(self):
        return (self.sigma.images, self.nu)


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Group law: (a * b).sigma = a.sigma after b.sigma, and the signs of a
    are pulled back along b.sigma before multiplying."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    sigma = a.sigma.compose(b.sigma)
    nu = tuple(a.nu[b.sigma(i)] * b.nu[i] for i in range(a.n))
    return SignedPermutation(sigma, nu)


def inverse(a: SignedPermutation) -> SignedPermutation:
    inv = a.sigma.inverse()
    nu = tuple(a.nu[inv(i)] for i in range(a.n))
    return SignedPermutation(inv, nu)


def extend_signs(s: Permutation, m: SignMatrix):
    """The sign vectors making a permutation compatible with the matrix.

    The first sign is pinned to +1, which forces all the others; the
    result is the pair {nu, -nu} when the forced vector checks out on all
    index pairs, and [] otherwise.  Needs at least three vertices.
    """
    n = m.n
    if n < 3:
        raise ValueError("sign extension requires n >= 3")
    if s.n != n:
        raise ValueError("size mismatch")
    nu = [1] * n
    for j in range(1, n):
        nu[j] = m[0, j] * m[s(0), s(j)]
    cand = SignedPermutation(s, tuple(nu))
    if not cand.is_valid(m):
        return []
    return [tuple(nu), tuple(-v for v in nu)]


@dataclass(frozen=True)
class SheafGroup:
    """Fully enumerated group of sign-compatible permutations."""

    ambient: SignMatrix
    elements: tuple  # sorted SignedPermutation instances

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def n_sigma(self) -> int:
        """Number of distinct underlying permutations."""
        return len({el.sigma.images for el in self.elements})

    def __contains__(self, el: SignedPermutation) -> bool:
        return el in set(self.elements)


def enumerate_group(m: SignMatrix, max_n=None, naive=False) -> SheafGroup:
    """All sign-compatible pairs for the given matrix.

    The default path backtracks over partial permutations with incremental
    sign pruning; ``naive=True`` sweeps every (permutation, signs) pair and
    serves as the oracle for the pruned search.
    """
    n = m.n
    bound = max_n if max_n is not None else config.enumeration_bound()
    if n < 1:
        raise ValueError("group enumeration requires n >= 1")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds enumeration bound {bound}")
    masks = m.linked_masks()
    elements = []
    # sign forcing in the pruned search needs n >= 3; below that the full
    # sweep is only a handful of candidates anyway
    if naive or n < 3:
        for sigma_imgs, sbits in _backend.naive_signed_elements(masks):
            nu = tuple(1 if b == 0 else -1 for b in sbits)
            elements.append(SignedPermutation(Permutation(tuple(sigma_imgs)), nu))
    else:
        for sigma_imgs, sbits in _backend.signed_stabilizer(masks):
            nu = tuple(1 if b == 0 else -1 for b in sbits)
            sigma = Permutation(tuple(sigma_imgs))
            elements.append(SignedPermutation(sigma, nu))
            elements.append(SignedPermutation(sigma, tuple(-v for v in nu)))
    elements.sort(key=SignedPermutation.sort_key)
    return SheafGroup(m, tuple(elements))


def realize_isometry(a: SignedPermutation, u: Representation, tol=None) -> np.ndarray:
    """Matrix of the isometry sending each u_i to nu_i * u_{sigma(i)}."""
    targets = np.array(
        [a.nu[i] * u.vectors[a.sigma(i)] for i in range(u.n)], dtype=float
    )
    return isometry_between(u.vectors, targets, u.space, u.space, tol)


@dataclass(frozen=True)
class OrbitStructure:
    orbits: tuple  # tuple of sorted tuples of line-class indices
    is_transitive: bool
    is_2_transitive: bool


def line_action(a: SignedPermutation, p: LinePartition) -> tuple:
    """Induced map on line classes; raises if the permutation does not
    permute the classes consistently."""
    image = tuple(p.pi[a.sigma(r)] for r in p.rep_index)
    for i in range(p.n):
        if p.pi[a.sigma(i)] != image[p.pi[i]]:
            raise ValueError("permutation does not act on the line classes")
    if sorted(image) != list(range(p.m)):
        raise ValueError("induced class map is not a bijection")
    return image


def orbits_on_lines(grp: SheafGroup, p: LinePartition) -> OrbitStructure:
    """Orbit partition of the line classes, plus transitivity flags.

    2-transitivity is decided directly: one orbit on ordered pairs of
    distinct lines.
    """
    m = p.m
    actions = [line_action(el, p) for el in grp.elements]
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for act in actions:
        for j in range(m):
            a, b = find(j), find(act[j])
            if a != b:
                parent[a] = b
    groups = {}
    for j in range(m):
        groups.setdefault(find(j), []).append(j)
    orbits = tuple(tuple(sorted(v)) for v in sorted(groups.values()))
    transitive = len(orbits) == 1

    two_transitive = False
    if m >= 2 and transitive:
        pair_ids = {(i, j): k for k, (i, j) in enumerate(
            (i, j) for i in range(m) for j in range(m) if i != j
        )}
        pparent = list(range(len(pair_ids)))

        def pfind(x):
            while pparent[x] != x:
                pparent[x] = pparent[pparent[x]]
                x = pparent[x]
            return x

        for act in actions:
            for (i, j), k in pair_ids.items():
                k2 = pair_ids[(act[i], act[j])]
                a, b = pfind(k), pfind(k2)
                if a != b:
                    pparent[a] = b
        two_transitive = len({pfind(k) for k in pair_ids.values()}) == 1

    return OrbitStructure(orbits, transitive, two_transitive)
