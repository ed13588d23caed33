"""Exponent-vector dynamics along the iteration of Cox rings.

Each step is a finite Galois cover ``P^1 -> P^1`` of degree ``d``.  Over a
point x with fiber size ``l`` every fiber point has ramification index
``d / l`` and exponent vector ``n_i / (d/l)``, each entry repeated ``m_i``
times (``m_i`` counts the divisors over E_i sitting over one fiber point).
Points sharing an ancestor keep its ``class_id``; ``u`` counts the classes
whose vector is not primitive.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from math import gcd
from typing import Mapping, Sequence

from .errors import BadFiber, Indivisible, ProfileError

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 64


def vector_gcd(v: Sequence[int]) -> int:
    return reduce(gcd, v, 0)


def is_primitive(v: Sequence[int]) -> bool:
    if len(v) == 0:
        raise ValueError("empty exponent vector")
    return vector_gcd(v) == 1


@dataclass(frozen=True)
class ExponentPoint:
    class_id: str
    vector: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(x) for x in self.vector)
        if not v or any(x < 1 for x in v):
            raise ValueError(f"exponent vector must be nonempty with entries >= 1, got {v}")
        object.__setattr__(self, "vector", v)
        object.__setattr__(self, "class_id", str(self.class_id))


@dataclass(frozen=True)
class ExponentConfig:
    points: tuple[ExponentPoint, ...] = ()

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        rep: dict[str, tuple[int, ...]] = {}
        for p in pts:
            if rep.setdefault(p.class_id, p.vector) != p.vector:
                raise ProfileError(
                    f"class {p.class_id!r} carries different vectors {rep[p.class_id]} and {p.vector}"
                )

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[int]]) -> "ExponentConfig":
        """One point per vector, each in its own class ``x0, x1, ...``."""
        return cls(tuple(ExponentPoint(f"x{i}", tuple(v)) for i, v in enumerate(vectors)))

    def classes(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, tuple[int, ...]] = {}
        for p in self.points:
            out.setdefault(p.class_id, p.vector)
        return out

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class Fiber:
    fiber_size: int
    multiplicities: tuple[int, ...] | None = None  # None: all ones


@dataclass(frozen=True)
class RamificationProfile:
    degree: int
    per_point: Mapping[int, Fiber] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise BadFiber(f"degree must be >= 1, got {self.degree}")
        for idx, fib in self.per_point.items():
            if fib.fiber_size < 1 or self.degree % fib.fiber_size:
                raise BadFiber(
                    f"fiber size {fib.fiber_size} at point {idx} does not divide degree {self.degree}"
                )

    def fiber(self, index: int) -> Fiber:
        # points not listed are unramified: d preimages, index 1
        return self.per_point.get(index, Fiber(self.degree))


def pullback_vector(v: Sequence[int], d: int, l: int, m: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    v = tuple(v)
    if l < 1 or d < 1 or d % l:
        raise BadFiber(f"fiber size {l} does not divide degree {d}")
    if m is None:
        m = (1,) * len(v)
    m = tuple(m)
    if len(m) != len(v) or any(x < 1 for x in m):
        raise ProfileError(f"multiplicities {m} must be >= 1 and aligned with {v}")
    e = d // l
    if any(x % e for x in v):
        raise Indivisible(f"ramification index {e} does not divide every entry of {v}")
    new: list[int] = []
    for x, k in zip(v, m):
        new += [x // e] * k
    vec = tuple(new)
    return [vec] * l


def step(config: ExponentConfig, profile: RamificationProfile) -> ExponentConfig:
    extra = set(profile.per_point) - set(range(len(config)))
    if extra:
        raise ProfileError(f"profile names points {sorted(extra)} not present in the configuration")
    out: list[ExponentPoint] = []
    for idx, p in enumerate(config.points):
        fib = profile.fiber(idx)
        for vec in pullback_vector(p.vector, profile.degree, fib.fiber_size, fib.multiplicities):
            out.append(ExponentPoint(p.class_id, vec))
    return ExponentConfig(tuple(out))


def u_count(config: ExponentConfig) -> int:
    return sum(1 for v in config.classes().values() if not is_primitive(v))


class Status(str, Enum):
    ALL_PRIMITIVE = "AllPrimitive"
    EXHAUSTED = "Exhausted"
    INVALID_PROFILE = "InvalidProfile"


@dataclass
class IterationTrace:
    configs: list[ExponentConfig]
    u_sequence: list[int]
    status: Status
    error: str | None = None


def max_steps_default() -> int:
    raw = os.environ.get("COXCOMB_MAX_STEPS")
    if raw is None:
        return DEFAULT_MAX_STEPS
    try:
        n = int(raw)
    except ValueError:
        log.warning("ignoring non-integer COXCOMB_MAX_STEPS=%r", raw)
        return DEFAULT_MAX_STEPS
    return max(n, 0)


def run(config: ExponentConfig, profiles: Sequence[RamificationProfile], max_steps: int | None = None) -> IterationTrace:
    if max_steps is None:
        max_steps = max_steps_default()
    trace = IterationTrace([config], [u_count(config)], Status.EXHAUSTED)
    for n, prof in enumerate(profiles):
        if trace.u_sequence[-1] == 0 or n >= max_steps:
            break
        try:
            config = step(config, prof)
        except ProfileError as exc:
            trace.status = Status.INVALID_PROFILE
            trace.error = f"step {n + 1}: {exc}"
            return trace
        trace.configs.append(config)
        trace.u_sequence.append(u_count(config))
    if trace.u_sequence[-1] == 0:
        trace.status = Status.ALL_PRIMITIVE
    return trace


def gcd_profile(config: ExponentConfig) -> RamificationProfile:
    """Heuristic step: ramify each point by the gcd of its vector.

    The degree is the lcm of the gcds; fibers get size ``d / gcd``.  Not a
    derivation of the true torsion cover, just a labeled guess.
    """
    gs = [vector_gcd(p.vector) for p in config.points]
    d = reduce(lambda a, b: a * b // gcd(a, b), gs, 1)
    return RamificationProfile(d, {i: Fiber(d // g) for i, g in enumerate(gs)})


def run_gcd_heuristic(config: ExponentConfig, max_steps: int | None = None) -> IterationTrace:
    if max_steps is None:
        max_steps = max_steps_default()
    trace = IterationTrace([config], [u_count(config)], Status.EXHAUSTED)
    for _ in range(max_steps):
        if trace.u_sequence[-1] == 0:
            break
        config = step(config, gcd_profile(config))
        trace.configs.append(config)
        trace.u_sequence.append(u_count(config))
    if trace.u_sequence[-1] == 0:
        trace.status = Status.ALL_PRIMITIVE
    return trace
