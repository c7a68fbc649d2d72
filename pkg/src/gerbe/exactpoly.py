"""Exact integer polynomial arithmetic.

Provides the characteristic polynomial det(S(1, x)) of a sign matrix as an
exact integer polynomial, its square-free decomposition, and its real roots
with multiplicities.  Everything here is exact except the final float
approximation attached to irrational roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import config
from .graph import SignMatrix


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact integer coefficients; coeffs[k] is the x^k term."""

    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use trimmed coeffs)")

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_coeffs(
            [k * c for k, c in enumerate(self.coeffs)][1:]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial.from_coeffs([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial.from_coeffs(out)

    __rmul__ = __mul__

    def __neg__(self):
        return IntPolynomial.from_coeffs([-c for c in self.coeffs])

    def __pow__(self, e: int):
        result = IntPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def pretty(self, var: str = "x") -> str:
        """Canonical text form: descending powers, explicit signs."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpow = var if k == 1 else f"{var}^{k}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class RootRecord:
    """A real root with its multiplicity.

    ``exact`` is the rational value when the root is rational, else None;
    ``interval`` is a certified isolating enclosure (Fraction endpoints)
    for irrational roots.  ``value`` is always a float approximation.
    """

    value: float
    multiplicity: int
    exact: Fraction | None = None
    interval: tuple | None = None

    @property
    def is_rational(self) -> bool:
        return self.exact is not None


# ---------------------------------------------------------------------------
# exact determinant and char_poly

def bareiss_determinant(rows) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def eval_char_matrix_det(m: SignMatrix, t: int) -> int:
    """det of the matrix with unit diagonal and (i,j) entry epsilon_ij * t."""
    n = m.n
    rows = [
        [1 if i == j else m[i, j] * t for j in range(n)]
        for i in range(n)
    ]
    return bareiss_determinant(rows)


def char_poly(m: SignMatrix) -> IntPolynomial:
    """det(S(1, x)) as an exact integer polynomial.

    Evaluated at n+1 integer points by fraction-free elimination, then
    interpolated over the rationals; the interpolant must come out integral.
    """
    n = m.n
    points = list(range(n + 1))
    values = [eval_char_matrix_det(m, t) for t in points]
    coeffs = _lagrange_interpolate(points, values)
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError(f"interpolated coefficient {c} is not an integer")
    return IntPolynomial.from_coeffs([c.numerator for c in coeffs])


def _lagrange_interpolate(xs, ys):
    """Coefficients (ascending, Fractions) of the interpolating polynomial."""
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        # basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d] -= c * xs[j]
                new[d + 1] += c
            basis = new
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for d, c in enumerate(basis):
            coeffs[d] += c * scale
    return coeffs


# ---------------------------------------------------------------------------
# rational-coefficient helpers (internal)

def _fpoly(p: IntPolynomial) -> list:
    return [Fraction(c) for c in p.coeffs]


def _ftrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _fsub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _ftrim(out)


def _fderiv(a):
    return _ftrim([k * c for k, c in enumerate(a)][1:])


def _fdivmod(a, b):
    """Polynomial division over the rationals."""
    a = list(a)
    if not _ftrim(b):
        raise ZeroDivisionError("polynomial division by zero")
    b = _ftrim(b)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = _ftrim(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r = _ftrim(r)
    return _ftrim(q), r


def _fdiv_exact(a, b):
    q, r = _fdivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _fgcd(a, b):
    """Monic gcd over the rationals."""
    a, b = _ftrim(a), _ftrim(b)
    while b:
        _, r = _fdivmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _primitive(fracs) -> IntPolynomial:
    """Primitive integer polynomial with positive lead, proportional to input."""
    fracs = _ftrim(fracs)
    if not fracs:
        return IntPolynomial(())
    denom = math.lcm(*(c.denominator for c in fracs))
    ints = [int(c * denom) for c in fracs]
    g = math.gcd(*(abs(c) for c in ints))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(tuple(ints))


# ---------------------------------------------------------------------------
# square-free decomposition (Yun's derivative-gcd scheme)

def squarefree_decomposition(p: IntPolynomial) -> list:
    """Write p as lead * prod f_k^{e_k} with the f_k square-free and coprime.

    Returns the list of (factor, exponent) pairs with each factor primitive
    and of positive leading coefficient; constant content is not included.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree == 0:
        return []
    f = _fpoly(p)
    fp = _fderiv(f)
    a = _fgcd(f, fp)
    if len(a) <= 1:
        return [(_primitive(f), 1)]
    b = _fdiv_exact(f, a)
    c = _fdiv_exact(fp, a)
    d = _fsub(c, _fderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = _fgcd(b, d)
        if len(g) > 1:
            out.append((_primitive(g), i))
        b = _fdiv_exact(b, g)
        c = _fdiv_exact(d, g)
        d = _fsub(c, _fderiv(b))
        i += 1
    return out


def reconstruct(factors, lead: Fraction) -> IntPolynomial:
    """prod f_k^{e_k} scaled by lead; helper for checking decompositions."""
    prod = IntPolynomial((1,))
    for f, e in factors:
        prod = prod * (f ** e)
    scaled = [lead * c for c in prod.coeffs]
    if any(s.denominator != 1 for s in scaled):
        raise ArithmeticError("reconstruction scale is not integral")
    return IntPolynomial.from_coeffs([s.numerator for s in scaled])


# ---------------------------------------------------------------------------
# real roots

def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            out.append(n // d)
    return sorted(set(out))


def _rational_roots(f: IntPolynomial) -> list:
    """All rational roots of f (f square-free, so all are simple)."""
    if f.degree < 1:
        return []
    roots = []
    coeffs = list(f.coeffs)
    # strip zero roots
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs[0] == 0:
            coeffs = coeffs[1:]
        f = IntPolynomial.from_coeffs(coeffs)
    if f.degree < 1:
        return roots
    a0, lead = f.coeffs[0], f.coeffs[-1]
    for p in _divisors(a0):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if f(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def _deflate(f: IntPolynomial, root: Fraction) -> IntPolynomial:
    q = _fdiv_exact(_fpoly(f), [-root, Fraction(1)])
    return _primitive(q)


def _sturm_chain(f: IntPolynomial) -> list:
    chain = [_fpoly(f)]
    chain.append(_fderiv(chain[0]))
    while _ftrim(chain[-1]):
        _, r = _fdivmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if _ftrim(c)]


def _feval(fracs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(fracs):
        acc = acc * x + c
    return acc


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _feval(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(f: IntPolynomial) -> Fraction:
    lead = abs(f.coeffs[-1])
    m = max(abs(c) for c in f.coeffs[:-1]) if f.degree >= 1 else 0
    return Fraction(1) + Fraction(m, lead)


def _isolate_irrational(f: IntPolynomial, width: float) -> list:
    """Isolating intervals (lo, hi) for the real roots of a square-free f
    with no rational roots, refined to the requested width by bisection."""
    if f.degree < 1:
        return []
    chain = _sturm_chain(f)
    bound = _root_bound(f)
    stack = [(-bound, bound)]
    isolated = []
    while stack:
        lo, hi = stack.pop()
        count = _sign_variations(chain, lo) - _sign_variations(chain, hi)
        if count == 0:
            continue
        if count == 1:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    refined = []
    for lo, hi in isolated:
        # endpoints are rational, roots are not, so f never vanishes there
        slo = 1 if f(lo) > 0 else -1
        while hi - lo > width:
            mid = (lo + hi) / 2
            smid = 1 if f(mid) > 0 else -1
            if smid == slo:
                lo = mid
            else:
                hi = mid
        refined.append((lo, hi))
    refined.sort()
    return refined


def real_roots_with_multiplicity(p: IntPolynomial, interval_width=None) -> list:
    """Every real root of p, once each, with its exact multiplicity.

    Rational roots are found exactly on each square-free factor; irrational
    roots get a certified isolating interval bisected down to
    ``interval_width`` (default from config) plus a float approximation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    width = interval_width if interval_width is not None else config.ROOT_INTERVAL_WIDTH
    width = Fraction(width).limit_denominator(10**18)
    records = []
    for factor, mult in squarefree_decomposition(p):
        remaining = factor
        for r in _rational_roots(factor):
            records.append(RootRecord(value=float(r), multiplicity=mult, exact=r))
            remaining = _deflate(remaining, r)
        for lo, hi in _isolate_irrational(remaining, width):
            mid = (lo + hi) / 2
            records.append(
                RootRecord(value=float(mid), multiplicity=mult, interval=(lo, hi))
            )
    records.sort(key=lambda rec: rec.value)
    return records
