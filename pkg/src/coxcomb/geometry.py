"""From exceptional points of a complexity-one variety to ring data.

The rational quotient by a Borel subgroup maps X to P^1.  Points of P^1 over
which exceptional B-stable divisors lie are the exceptional points; the
multiplicities of those divisors in the pullback of the point form its
exponent vector.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .platonic import GeometryFlags
from .ring import ExponentData, ProjectivePoint

PADDING_POINTS = (ProjectivePoint(1, 0), ProjectivePoint(0, -1), ProjectivePoint(1, 1))


@dataclass(frozen=True)
class ExceptionalPoint:
    coords: ProjectivePoint
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coords, ProjectivePoint):
            object.__setattr__(self, "coords", ProjectivePoint(*self.coords))
        mult = tuple(int(x) for x in self.multiplicities)
        if not mult or any(x < 1 for x in mult):
            raise ValueError(f"multiplicities must be a nonempty tuple of entries >= 1, got {mult}")
        object.__setattr__(self, "multiplicities", mult)


@dataclass(frozen=True)
class ComplexityOneData:
    exceptional_points: tuple[ExceptionalPoint, ...] = ()
    dominating_count: int = 0

    def __post_init__(self):
        pts = tuple(self.exceptional_points)
        object.__setattr__(self, "exceptional_points", pts)
        if self.dominating_count < 0:
            raise ValueError("dominating_count must be >= 0")
        for p, q in combinations(pts, 2):
            if p.coords == q.coords:
                raise ValueError(f"exceptional point {p.coords} listed twice")


Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
IDENTITY2: Matrix2 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def _apply(T: Matrix2, p: ProjectivePoint) -> ProjectivePoint:
    x, y = p.coords
    return ProjectivePoint(T[0][0] * x + T[0][1] * y, T[1][0] * x + T[1][1] * y)


def normalize_points(data: ComplexityOneData) -> tuple[ComplexityOneData, Matrix2]:
    """Move the first two exceptional points to [1:0] and [0:-1].

    Returns the transformed data and the invertible rational 2x2 matrix
    applied to every coordinate vector.
    """
    pts = data.exceptional_points
    if len(pts) < 2:
        return data, IDENTITY2
    (p, q), (s, t) = pts[0].coords.coords, pts[1].coords.coords
    det = Fraction(p * t - s * q)
    # inverse of [[p, s], [q, t]] (columns are the two points), then flip e2
    inv = ((t / det, -s / det), (-q / det, p / det))
    T: Matrix2 = (inv[0], (-inv[1][0], -inv[1][1]))
    if T == IDENTITY2:
        return data, IDENTITY2
    moved = tuple(ExceptionalPoint(_apply(T, e.coords), e.multiplicities) for e in pts)
    return ComplexityOneData(moved, data.dominating_count), T


def to_ring_input(data: ComplexityOneData) -> tuple[list[ProjectivePoint], ExponentData]:
    norm, _ = normalize_points(data)
    A = [e.coords for e in norm.exceptional_points]
    vectors = [e.multiplicities for e in norm.exceptional_points]
    for cand in PADDING_POINTS:
        if len(A) >= 2:
            break
        if cand not in A:
            A.append(cand)
            vectors.append((1,))
    return A, ExponentData(tuple(vectors), norm.dominating_count)


@dataclass(frozen=True)
class Relation:
    point: int
    alpha: int
    beta: int
    character: str
    exponents: tuple[int, ...]

    def generators(self) -> list[str]:
        return [f"s{self.point}_{j + 1}" for j in range(len(self.exponents))]

    def lhs(self) -> str:
        return _linear_ab(self.beta, -self.alpha)

    def rhs(self) -> str:
        body = "*".join(
            g if e == 1 else f"{g}^{e}" for g, e in zip(self.generators(), self.exponents)
        )
        return f"{self.character}*{body}"

    def render(self) -> str:
        return f"{self.lhs()} = {self.rhs()}"


def _linear_ab(ca: int, cb: int) -> str:
    parts = []
    for c, v in ((ca, "a"), (cb, "b")):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + v)
        else:
            parts.append(("- " if c < 0 else "+ ") + mag + v)
    return " ".join(parts)


STAR_CAVEAT = (
    "the relations generate the whole ideal only when the common degree of a "
    "and b is Z-torsion free in Cl^G(X) x T^ (not verified)"
)


@dataclass(frozen=True)
class PresentationU:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...]
    grading: dict = field(hash=False, compare=False)
    caveat: str = STAR_CAVEAT


def presentation_u(data: ComplexityOneData) -> PresentationU:
    """Generators and relations of Cox^G(X)^U as a k[G^]-algebra.

    One relation ``beta_i a - alpha_i b = lambda_i prod_j s_ij^n_ij`` per
    exceptional point; characters and degrees stay symbolic.
    """
    rels = tuple(
        Relation(i, e.coords.alpha, e.coords.beta, f"lambda{i}", e.multiplicities)
        for i, e in enumerate(data.exceptional_points)
    )
    gens = ["a", "b"]
    for rel in rels:
        gens += rel.generators()
    gens += [f"s{k + 1}" for k in range(data.dominating_count)]
    grading = {"a": "w", "b": "w"}
    for rel in rels:
        for g in rel.generators():
            grading[g] = f"[E({g})]"
    for k in range(data.dominating_count):
        grading[f"s{k + 1}"] = f"[E(s{k + 1})]"
    return PresentationU(tuple(gens), rels, grading)


def star_condition_hint(flags: GeometryFlags) -> bool:
    """True when the flags put X in a situation known to satisfy the
    torsion-freeness condition on the degree of a, b.  False means unknown."""
    return bool(
        (flags.smooth and flags.complete)
        or (flags.torus_action and flags.constant_invariants)
        or flags.almost_homogeneous
    )
