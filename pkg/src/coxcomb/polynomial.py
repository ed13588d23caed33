"""Sparse polynomials with exact rational coefficients.

Variables are positional (index 0 is the first variable in the fixed
order); names are only needed for rendering.  A polynomial is kept in
canonical form: terms sorted with the earliest variables' exponents
dominating, no zero coefficients, no repeated exponent vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Monomial:
    coefficient: Fraction
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    terms: tuple[Monomial, ...] = ()

    @classmethod
    def from_dict(cls, nvars: int, coeffs: Mapping[tuple[int, ...], object]) -> "Polynomial":
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, c in coeffs.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            acc[exps] = acc.get(exps, Fraction(0)) + Fraction(c)
        return cls._canon(nvars, acc)

    @classmethod
    def monomial(cls, nvars: int, exponents: Sequence[int], coefficient=1) -> "Polynomial":
        return cls.from_dict(nvars, {tuple(exponents): coefficient})

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, ())

    @staticmethod
    def _canon(nvars, acc) -> "Polynomial":
        items = sorted(((e, c) for e, c in acc.items() if c != 0), key=lambda t: t[0], reverse=True)
        return Polynomial(nvars, tuple(Monomial(c, e) for e, c in items))

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return {m.exponents: m.coefficient for m in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def _same_ring(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        acc = self.as_dict()
        for m in other.terms:
            acc[m.exponents] = acc.get(m.exponents, Fraction(0)) + m.coefficient
        return self._canon(self.nvars, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, tuple(Monomial(-m.coefficient, m.exponents) for m in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, tuple(Monomial(c * m.coefficient, m.exponents) for m in self.terms))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._same_ring(other)
            acc: dict[tuple[int, ...], Fraction] = {}
            for a in self.terms:
                for b in other.terms:
                    e = tuple(x + y for x, y in zip(a.exponents, b.exponents))
                    acc[e] = acc.get(e, Fraction(0)) + a.coefficient * b.coefficient
            return self._canon(self.nvars, acc)
        return self.scale(other)

    __rmul__ = scale

    def render(self, names: Sequence[str]) -> str:
        if len(names) != self.nvars:
            raise ValueError("need one name per variable")
        if not self.terms:
            return "0"
        out = []
        for k, m in enumerate(self.terms):
            c = m.coefficient
            body = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m.exponents) if e
            )
            mag = abs(c)
            if body:
                text = body if mag == 1 else f"{fmt_rational(mag)}*{body}"
            else:
                text = fmt_rational(mag)
            if k == 0:
                out.append(f"-{text}" if c < 0 else text)
            else:
                out.append(("- " if c < 0 else "+ ") + text)
        return " ".join(out)


def linear_combination(polys: Iterable[tuple[object, Polynomial]], nvars: int) -> Polynomial:
    total = Polynomial.zero(nvars)
    for c, p in polys:
        total = total + p.scale(c)
    return total
