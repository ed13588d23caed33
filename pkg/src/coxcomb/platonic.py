"""Platonic tuples, Platonic rings and the log-terminality verdict."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesesNotMet
from .ring import ExponentData

PLATONIC_TRIPLES = ((5, 3, 2), (4, 3, 2), (3, 3, 2))


def _validate(t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(x) for x in t)
    if any(x < 1 for x in t):
        raise ValueError(f"tuple entries must be >= 1, got {t}")
    return t


def is_platonic_tuple(t: Sequence[int]) -> bool:
    """Sorted decreasingly (and padded with 1s to length 3) the tuple must
    start with (5,3,2), (4,3,2), (3,3,2), (x,2,2) or (x,y,1) and continue
    with 1s only."""
    t = _validate(t)
    s = sorted(t + (1,) * max(0, 3 - len(t)), reverse=True)
    if any(x != 1 for x in s[3:]):
        return False
    head = tuple(s[:3])
    return head[2] == 1 or head[1:] == (2, 2) or head in PLATONIC_TRIPLES


@dataclass(frozen=True)
class PlatonicVerdict:
    platonic: bool
    witness: tuple[int, ...] | None = None


def is_platonic_ring(exponents: ExponentData) -> PlatonicVerdict:
    # Only the tuple of per-vector maxima is inspected: Platonic tuples are
    # closed under lowering entries, so every choice tuple is Platonic iff
    # this one is (certified exhaustively in the test suite).
    if exponents.r <= 1:
        return PlatonicVerdict(True)
    top = tuple(max(v) for v in exponents.vectors)
    if is_platonic_tuple(top):
        return PlatonicVerdict(True)
    return PlatonicVerdict(False, top)


@dataclass(frozen=True)
class GeometryFlags:
    """User assertions about the variety; nothing here is verified.

    ``smooth``, ``complete``, ``torus_action`` and ``constant_invariants``
    only matter for :func:`coxcomb.geometry.star_condition_hint`.
    """

    almost_homogeneous: bool = False
    complexity_one: bool = False
    units_constant: bool = False
    spherical: bool = False
    q_factorial_projective: bool = False
    smooth: bool = False
    complete: bool = False
    torus_action: bool = False
    constant_invariants: bool = False

    def __post_init__(self):
        if self.spherical and self.complexity_one:
            raise ValueError("a variety cannot be both spherical and of complexity one")


@dataclass(frozen=True)
class LogTerminalReport:
    verdict: bool
    basis: str
    fano_type: bool | None = None
    witness: tuple[int, ...] | None = None
    clause: str = ""


SPHERICAL_CLAUSE = "spherical-rational-singularities"
PLATONIC_CLAUSE = "complexity-one-platonic-criterion"


def log_terminal(exponents: ExponentData | None, flags: GeometryFlags) -> LogTerminalReport:
    """Does the total coordinate space have log terminal singularities?

    Spherical varieties with constant units always do.  For almost
    homogeneous varieties of complexity one with constant units the answer
    is the Platonic-ring test on the exponent data.  Anything else raises
    :class:`HypothesesNotMet`.
    """
    if flags.spherical:
        if not flags.units_constant:
            raise HypothesesNotMet("spherical case needs only constant invertible functions")
        verdict = True
        basis = (
            "X is spherical with only constant invertible functions: its total "
            "coordinate space is spherical, hence has rational and therefore "
            "log terminal singularities"
        )
        return LogTerminalReport(
            verdict, basis, _fano(flags, verdict), clause=SPHERICAL_CLAUSE
        )
    missing = [
        name for name in ("almost_homogeneous", "complexity_one", "units_constant")
        if not getattr(flags, name)
    ]
    if missing:
        raise HypothesesNotMet("no conclusion without: " + ", ".join(missing))
    if exponents is None:
        raise HypothesesNotMet("complexity-one case needs exponent data")
    pv = is_platonic_ring(exponents)
    if pv.platonic:
        basis = "almost homogeneous, complexity one, constant units: Cox(X)^U is a Platonic ring"
    else:
        basis = (
            "almost homogeneous, complexity one, constant units: Cox(X)^U is not "
            f"a Platonic ring (tuple {list(pv.witness)} fails)"
        )
    return LogTerminalReport(
        pv.platonic, basis, _fano(flags, pv.platonic), pv.witness, PLATONIC_CLAUSE
    )


def _fano(flags: GeometryFlags, verdict: bool) -> bool | None:
    # Q-factorial projective: Fano type <=> finitely generated Cox ring with
    # log terminal total coordinate space; finite generation holds here.
    return verdict if flags.q_factorial_projective else None
