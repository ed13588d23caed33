"""The graded trinomial algebra R(A, P0).

Inputs are points ``a_0..a_r`` of P^1 (pairwise distinct) together with
exponent vectors ``l_0..l_r`` and a count ``m`` of free variables.  The
ring is ``k[T_ij, S_k] / (g_I)`` where for a triple ``I = (i1 < i2 < i3)``

    g_I = det(a_i2, a_i3) T_i1^l_i1 - det(a_i1, a_i3) T_i2^l_i2 + det(a_i1, a_i2) T_i3^l_i3

graded by ``K0 = Z^(n+m) / im(P0^t)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Mapping, Sequence

from .abelian import FgAbelianGroup, cokernel, element_eq
from .errors import BadExponent, IndexViolation, NoTrinomials, PairwiseDependence
from .intmatrix import IntegerMatrix
from .polynomial import Polynomial


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, eq=False, init=False, repr=False)
class ProjectivePoint:
    """A point ``[alpha : beta]`` of P^1 over Q.

    ``coords`` is the stored representative: the input rescaled by a
    *positive* rational to coprime integers, so the sign the caller chose
    survives (``[0:-1]`` stays ``[0:-1]``).  ``normalized`` additionally
    makes the first nonzero coordinate positive; equality and hashing use it.
    """

    coords: tuple[int, int]

    def __init__(self, alpha, beta):
        a, b = Fraction(alpha), Fraction(beta)
        if a == 0 and b == 0:
            raise ValueError("[0:0] is not a point of P^1")
        den = _lcm(a.denominator, b.denominator)
        x, y = int(a * den), int(b * den)
        g = gcd(x, y)
        object.__setattr__(self, "coords", (x // g, y // g))

    @property
    def alpha(self) -> int:
        return self.coords[0]

    @property
    def beta(self) -> int:
        return self.coords[1]

    @property
    def normalized(self) -> tuple[int, int]:
        x, y = self.coords
        if x < 0 or (x == 0 and y < 0):
            return (-x, -y)
        return (x, y)

    def canonical(self) -> "ProjectivePoint":
        return ProjectivePoint(*self.normalized)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.normalized == other.normalized

    def __hash__(self):
        return hash(self.normalized)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return f"[{self.alpha}:{self.beta}]"


def det2(p: ProjectivePoint, q: ProjectivePoint) -> int:
    return p.alpha * q.beta - q.alpha * p.beta


@dataclass(frozen=True)
class ExponentData:
    vectors: tuple[tuple[int, ...], ...]
    m: int = 0

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if not vecs:
            raise BadExponent("need at least one exponent vector")
        for i, v in enumerate(vecs):
            if not v:
                raise BadExponent(f"exponent vector l_{i} is empty")
            if any(x < 1 for x in v):
                raise BadExponent(f"exponent vector l_{i} = {v} has an entry < 1")
        if self.m < 0:
            raise BadExponent("m must be >= 0")

    @property
    def r(self) -> int:
        return len(self.vectors) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.vectors)

    @property
    def n(self) -> int:
        return sum(self.sizes)


def variable_names(exponents: ExponentData) -> list[str]:
    names = [f"T{i}_{j + 1}" for i, v in enumerate(exponents.vectors) for j in range(len(v))]
    names += [f"S{k + 1}" for k in range(exponents.m)]
    return names


def block_offsets(exponents: ExponentData) -> list[int]:
    offs, acc = [], 0
    for v in exponents.vectors:
        offs.append(acc)
        acc += len(v)
    return offs


def p0_matrix(exponents: ExponentData) -> IntegerMatrix:
    """The r x (n+m) block matrix [L 0]: row i is (-l_0, 0.., l_i, .., 0 | 0)."""
    r, n, m = exponents.r, exponents.n, exponents.m
    offs = block_offsets(exponents)
    rows = []
    for i in range(1, r + 1):
        row = [0] * (n + m)
        for j, x in enumerate(exponents.vectors[0]):
            row[offs[0] + j] = -x
        for j, x in enumerate(exponents.vectors[i]):
            row[offs[i] + j] = x
        rows.append(row)
    return IntegerMatrix.from_rows(rows, n + m)


@dataclass(frozen=True)
class RingData:
    A: tuple[ProjectivePoint, ...]
    exponents: ExponentData
    P0: IntegerMatrix
    K0: FgAbelianGroup
    degrees: Mapping[str, tuple[int, ...]]

    @property
    def r(self) -> int:
        return self.exponents.r

    @property
    def nvars(self) -> int:
        return self.exponents.n + self.exponents.m

    @property
    def variables(self) -> list[str]:
        return variable_names(self.exponents)

    def triples(self) -> list[tuple[int, int, int]]:
        return list(combinations(range(self.r + 1), 3))

    def monomial_exponents(self, i: int) -> tuple[int, ...]:
        """Exponent vector of T_i^{l_i} in the full variable order."""
        e = [0] * self.nvars
        off = block_offsets(self.exponents)[i]
        for j, x in enumerate(self.exponents.vectors[i]):
            e[off + j] = x
        return tuple(e)

    def degree_of(self, exps: Sequence[int]) -> tuple[int, ...]:
        # degrees are ambient vectors in Z^(n+m): deg T_ij = e_ij, so a
        # monomial's degree is its exponent vector
        return tuple(exps)


@dataclass(frozen=True)
class Trinomial:
    index: tuple[int, int, int]
    polynomial: Polynomial


def build(A: Sequence[ProjectivePoint], exponents: ExponentData) -> RingData:
    A = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(*p) for p in A)
    if len(A) != len(exponents.vectors):
        raise ValueError(f"{len(A)} points but {len(exponents.vectors)} exponent vectors")
    for i, j in combinations(range(len(A)), 2):
        if det2(A[i], A[j]) == 0:
            raise PairwiseDependence(f"a_{i} = {A[i]} and a_{j} = {A[j]} are linearly dependent")
    P0 = p0_matrix(exponents)
    K0 = cokernel(P0.transpose())
    names = variable_names(exponents)
    N = len(names)
    degrees = {name: tuple(int(k == t) for k in range(N)) for t, name in enumerate(names)}
    return RingData(A, exponents, P0, K0, degrees)


def alpha(ring: RingData, i: int, j: int) -> int:
    r = ring.r
    if not (0 <= i <= r and 0 <= j <= r):
        raise IndexViolation(f"index out of range 0..{r}: ({i}, {j})")
    return det2(ring.A[i], ring.A[j])


def _check_triple(ring: RingData, I) -> tuple[int, int, int]:
    if ring.r < 2:
        raise NoTrinomials(f"r = {ring.r} < 2: the ring has no trinomial relations")
    I = tuple(int(x) for x in I)
    if len(I) != 3 or not (0 <= I[0] < I[1] < I[2] <= ring.r):
        raise IndexViolation(f"need 0 <= i1 < i2 < i3 <= {ring.r}, got {I}")
    return I


def trinomial(ring: RingData, I) -> Trinomial:
    i1, i2, i3 = I = _check_triple(ring, I)
    coeffs = {
        ring.monomial_exponents(i1): alpha(ring, i2, i3),
        ring.monomial_exponents(i2): -alpha(ring, i1, i3),
        ring.monomial_exponents(i3): alpha(ring, i1, i2),
    }
    return Trinomial(I, Polynomial.from_dict(ring.nvars, coeffs))


def trinomials(ring: RingData) -> list[Trinomial]:
    if ring.r < 2:
        return []
    return [trinomial(ring, I) for I in ring.triples()]


def verify_homogeneous(ring: RingData) -> bool:
    """Do the three monomials of every g_I share one K0-degree?"""
    if ring.r < 2:
        return True
    for I in ring.triples():
        degs = [ring.degree_of(ring.monomial_exponents(i)) for i in I]
        if not all(element_eq(ring.K0, degs[0], d) for d in degs[1:]):
            return False
    return True


def expand_in_generating_set(ring: RingData, I) -> dict[int, Fraction]:
    """Write g_I as a rational combination of the generators g_(0,1,t), 2 <= t <= r.

    Returns ``{t: c_t}`` with ``g_I = sum_t c_t g_(0,1,t)``.  The monomial
    T_t^{l_t} (t >= 2) occurs in exactly one generator, with coefficient
    alpha_01, so c_t is its coefficient in g_I divided by alpha_01.  The
    T_0 and T_1 parts then agree by the three-term Pluecker relation

        alpha_jk g_(i,j,l) = alpha_jl g_(i,j,k) + alpha_ij g_(j,k,l).
    """
    i1, i2, i3 = I = _check_triple(ring, I)
    a01 = alpha(ring, 0, 1)
    signed = {
        i1: alpha(ring, i2, i3),
        i2: -alpha(ring, i1, i3),
        i3: alpha(ring, i1, i2),
    }
    return {t: Fraction(c, a01) for t, c in sorted(signed.items()) if t >= 2}


def combination_polynomial(ring: RingData, combo: Mapping[int, Fraction]) -> Polynomial:
    total = Polynomial.zero(ring.nvars)
    for t, c in combo.items():
        total = total + trinomial(ring, (0, 1, t)).polynomial.scale(c)
    return total
