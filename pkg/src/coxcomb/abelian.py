"""Finitely generated abelian groups presented as cokernels.

A group is ``Z^n / im(M)`` for an ``n x k`` integer matrix ``M`` whose
columns are the relations.  Elements are handled as ambient vectors in
``Z^n``; the Smith decomposition of ``M`` supplies invariants and a normal
coordinate system, the Hermite form of ``M`` decides membership.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Sequence

from .errors import DimensionMismatch, NonFreeSource, NotWellDefined
from .intmatrix import (
    ColumnHermiteForm,
    IntegerMatrix,
    SmithDecomposition,
    hermite_normal_form,
    kernel_basis,
    smith_normal_form,
)

__all__ = [
    "FgAbelianGroup",
    "GroupHom",
    "cokernel",
    "element_eq",
    "hom_group",
    "localize",
    "check_exact",
    "forget_grading",
    "smith_normal_form",
]


@dataclass(frozen=True, eq=False)
class FgAbelianGroup:
    free_rank: int
    invariant_factors: tuple[int, ...]
    presentation: IntegerMatrix
    change_of_basis: SmithDecomposition = field(repr=False)

    # Abstract isomorphism type decides equality; presentations may differ.
    def __eq__(self, other):
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return self.invariants == other.invariants

    def __hash__(self):
        return hash(self.invariants)

    @property
    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.invariant_factors)

    @property
    def ambient_rank(self) -> int:
        return self.presentation.rows

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self) -> int | None:
        """Cardinality, or ``None`` for infinite groups."""
        if self.free_rank:
            return None
        return prod(self.invariant_factors)

    @cached_property
    def _hermite(self) -> ColumnHermiteForm:
        return hermite_normal_form(self.presentation)

    def relations(self) -> list[tuple[int, ...]]:
        return self.presentation.columns()

    def contains_relation(self, v: Sequence[int]) -> bool:
        """True iff ``v`` lies in the relation lattice, i.e. is zero in the group."""
        return self._hermite.contains(tuple(v))

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Normal-form coordinates of the class of ``v``.

        Torsion residues (one per invariant factor, reduced into
        ``[0, d)``) followed by the free coordinates.  Two vectors are equal
        in the group iff their coordinates agree.
        """
        v = self._check(v)
        y = self.change_of_basis.U.apply(v)
        diag = self.change_of_basis.diagonal
        tors, free = [], []
        for i, yi in enumerate(y):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                free.append(yi)
            elif d > 1:
                tors.append(yi % d)
        return tuple(tors + free)

    def _check(self, v: Sequence[int]) -> tuple[int, ...]:
        v = tuple(int(x) for x in v)
        if len(v) != self.ambient_rank:
            raise DimensionMismatch(
                f"vector of length {len(v)} for a group with ambient rank {self.ambient_rank}"
            )
        return v

    @classmethod
    def from_invariants(cls, free_rank: int = 0, torsion: Sequence[int] = ()) -> "FgAbelianGroup":
        """Z^free_rank + sum Z/t, with any orders (normalized on construction)."""
        torsion = [int(t) for t in torsion]
        if free_rank < 0 or any(t < 1 for t in torsion):
            raise ValueError("torsion orders must be >= 1 and free rank >= 0")
        n = len(torsion) + free_rank
        rel = IntegerMatrix.diagonal(torsion, rows=n, cols=len(torsion))
        return cokernel(rel)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"


def cokernel(M: IntegerMatrix) -> FgAbelianGroup:
    """``Z^rows / im(M)`` in invariant-factor form."""
    snf = smith_normal_form(M)
    diag = snf.diagonal
    rank = snf.rank
    return FgAbelianGroup(
        free_rank=M.rows - rank,
        invariant_factors=tuple(d for d in diag if d > 1),
        presentation=M,
        change_of_basis=snf,
    )


def element_eq(G: FgAbelianGroup, a: Sequence[int], b: Sequence[int]) -> bool:
    a, b = G._check(a), G._check(b)
    return G.contains_relation(tuple(x - y for x, y in zip(a, b)))


def hom_group(A: FgAbelianGroup, B: FgAbelianGroup) -> FgAbelianGroup:
    """Hom(A, B) as an abstract group, from the invariant factors.

    Hom(Z, Z) = Z, Hom(Z, Z/e) = Z/e, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
    """
    rA, rB = A.free_rank, B.free_rank
    orders: list[int] = []
    for e in B.invariant_factors:
        orders += [e] * rA
    for d in A.invariant_factors:
        for e in B.invariant_factors:
            orders.append(gcd(d, e))
    return FgAbelianGroup.from_invariants(rA * rB, orders)


def localize(Cl: FgAbelianGroup, removed_classes: Sequence[Sequence[int]]) -> FgAbelianGroup:
    """Quotient of ``Cl`` by the subgroup generated by ``removed_classes``.

    At the level of class groups this is removing the divisors whose classes
    are listed: Cl(X minus D_1..D_s) = Cl(X) / <[D_1], ..., [D_s]>.
    """
    extra = [Cl._check(v) for v in removed_classes]
    if not extra:
        return cokernel(Cl.presentation)
    rel = Cl.presentation.hstack(IntegerMatrix.from_columns(extra, Cl.ambient_rank))
    return cokernel(rel)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by an integer matrix on ambient coordinates.

    ``matrix`` is ``target.ambient_rank x source.ambient_rank``.  Construction
    fails unless every source relation maps into the target relations.
    """

    source: FgAbelianGroup
    target: FgAbelianGroup
    matrix: IntegerMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.ambient_rank, self.source.ambient_rank):
            raise DimensionMismatch(
                f"hom matrix has shape {self.matrix.shape}, expected "
                f"{(self.target.ambient_rank, self.source.ambient_rank)}"
            )
        for rel in self.source.relations():
            if not self.target.contains_relation(self.matrix.apply(rel)):
                raise NotWellDefined(f"relation {rel} is not sent to zero")

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.matrix.apply(self.source._check(v))

    def is_zero(self) -> bool:
        return all(self.target.contains_relation(c) for c in self.matrix.columns())

    def compose(self, other: "GroupHom") -> "GroupHom":
        """``self o other``."""
        if other.target.ambient_rank != self.source.ambient_rank:
            raise DimensionMismatch("maps are not composable")
        return GroupHom(other.source, self.target, self.matrix @ other.matrix)

    def kernel_lattice(self) -> list[tuple[int, ...]]:
        """Generators of the preimage of the target relations in source ambient space."""
        n = self.source.ambient_rank
        rel = self.target.presentation
        neg = IntegerMatrix(rel.rows, rel.cols, tuple(-x for x in rel.entries))
        stacked = self.matrix.hstack(neg)
        return [v[:n] for v in kernel_basis(stacked)]

    def image_lattice(self) -> list[tuple[int, ...]]:
        """Generators of image + target relations in target ambient space."""
        return self.matrix.columns() + self.target.relations()


def _same_group(x: FgAbelianGroup, y: FgAbelianGroup) -> bool:
    return x.ambient_rank == y.ambient_rank and all(
        y.contains_relation(r) for r in x.relations()
    ) and all(x.contains_relation(r) for r in y.relations())


def exactness(f: GroupHom, g: GroupHom) -> dict:
    """Detailed exactness data at the middle group of ``A -f-> B -g-> C``."""
    if not _same_group(f.target, g.source):
        raise DimensionMismatch("target of f is not the source of g")
    B = g.source
    composite_zero = all(g.target.contains_relation(g.matrix.apply(c)) for c in f.matrix.columns())
    image = hermite_normal_form(
        IntegerMatrix.from_columns(f.image_lattice(), B.ambient_rank)
    )
    missing = [v for v in g.kernel_lattice() if not image.contains(v)]
    return {
        "composite_zero": composite_zero,
        "kernel_in_image": not missing,
        "exact": composite_zero and not missing,
        "kernel_witness": missing[0] if missing else None,
    }


def check_exact(f: GroupHom, g: GroupHom) -> bool:
    """True iff ``g o f = 0`` and ``ker g = im f`` inside the middle group."""
    return exactness(f, g)["exact"]


def forget_grading(ClG: FgAbelianGroup, gamma: GroupHom) -> FgAbelianGroup:
    """Cokernel of a character map ``gamma`` from a free group into ``ClG``."""
    if not gamma.source.is_free:
        raise NonFreeSource(f"character group must be free, got {gamma.source}")
    if not _same_group(gamma.target, ClG):
        raise DimensionMismatch("gamma does not land in the given group")
    return localize(ClG, gamma.matrix.columns())
