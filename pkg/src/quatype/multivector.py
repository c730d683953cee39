"""Sparse multivectors over Cl(p,q) with real or complex coefficients.

Values are immutable; every operation returns a new multivector.  Coefficients
are stored as complex doubles even in real mode (the imaginary part is pinned
to zero there), so integer-valued inputs stay exact through products, sums and
projections.
"""

from __future__ import annotations

import math
import numbers
from enum import Enum
from types import MappingProxyType

from .blades import Signature, grade, sign_table, canonical_sign


class AlgebraError(Exception):
    """Base class for algebra-level failures."""


class SignatureMismatch(AlgebraError):
    """Operands live in different Cl(p,q)."""


class FieldMismatch(AlgebraError):
    """Operands (or a scalar) disagree about the coefficient field."""


class RankOutOfRange(AlgebraError):
    """Grade index outside 0..n."""


class ConvergenceFailure(AlgebraError):
    """Power series failed to meet its stopping criterion."""


class Field(Enum):
    REAL = "R"
    COMPLEX = "C"


def _check_coeff(c: complex, field: Field) -> complex:
    c = complex(c)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError(f"non-finite coefficient {c!r}")
    if field is Field.REAL and c.imag != 0.0:
        raise FieldMismatch(f"imaginary coefficient {c!r} in a real multivector")
    return c


class Multivector:
    """Finite sum of coefficient-weighted basis blades of one Cl(p,q)."""

    __slots__ = ("sig", "field", "_terms")

    def __init__(self, sig: Signature, field: Field, terms=()) -> None:
        if not isinstance(sig, Signature):
            raise TypeError("sig must be a Signature")
        if not isinstance(field, Field):
            raise TypeError("field must be a Field")
        data: dict[int, complex] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mask, coeff in items:
            sig.check_blade(mask)
            c = _check_coeff(coeff, field)
            c = data.get(mask, 0j) + c
            if c == 0:
                data.pop(mask, None)
            else:
                data[mask] = c
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", data)

    # Internal: trusted constructor, skips validation of already-clean terms.
    @classmethod
    def _raw(cls, sig: Signature, field: Field, data: dict) -> "Multivector":
        mv = object.__new__(cls)
        object.__setattr__(mv, "sig", sig)
        object.__setattr__(mv, "field", field)
        object.__setattr__(mv, "_terms", data)
        return mv

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, sig: Signature, field: Field = Field.COMPLEX) -> "Multivector":
        return cls._raw(sig, field, {})

    @classmethod
    def scalar(cls, sig: Signature, value, field: Field = Field.COMPLEX) -> "Multivector":
        return cls(sig, field, {0: value})

    @classmethod
    def basis_blade(cls, sig: Signature, mask: int, coeff=1,
                    field: Field = Field.COMPLEX) -> "Multivector":
        return cls(sig, field, {mask: coeff})

    # ------------------------------------------------------------------
    # views

    @property
    def terms(self):
        """Read-only mapping of blade mask to coefficient."""
        return MappingProxyType(self._terms)

    def coefficient(self, mask: int) -> complex:
        self.sig.check_blade(mask)
        return self._terms.get(mask, 0j)

    def grades(self) -> set[int]:
        return {grade(m) for m in self._terms}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return (self.sig == other.sig and self.field == other.field
                and self._terms == other._terms)

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{m:#x}: {c}" for m, c in sorted(self._terms.items()))
        return f"Multivector({self.sig}, {self.field.value}, {{{body}}})"

    # ------------------------------------------------------------------
    # ring structure

    def _like(self, other: "Multivector") -> None:
        if not isinstance(other, Multivector):
            raise TypeError(f"expected Multivector, got {type(other).__name__}")
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.value} vs {other.field.value}")

    def __add__(self, other) -> "Multivector":
        self._like(other)
        data = dict(self._terms)
        for m, c in other._terms.items():
            s = data.get(m, 0j) + c
            if s == 0:
                data.pop(m, None)
            else:
                data[m] = s
        return Multivector._raw(self.sig, self.field, data)

    def __sub__(self, other) -> "Multivector":
        self._like(other)
        data = dict(self._terms)
        for m, c in other._terms.items():
            s = data.get(m, 0j) - c
            if s == 0:
                data.pop(m, None)
            else:
                data[m] = s
        return Multivector._raw(self.sig, self.field, data)

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self.sig, self.field,
                                {m: -c for m, c in self._terms.items()})

    def scale(self, value) -> "Multivector":
        c = _check_coeff(value, self.field)
        if c == 0:
            return Multivector.zero(self.sig, self.field)
        return Multivector._raw(self.sig, self.field,
                                {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.geometric_product(other)
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    def geometric_product(self, other: "Multivector") -> "Multivector":
        self._like(other)
        sig = self.sig
        table = sign_table(sig)
        out: dict[int, complex] = {}
        if table is not None:
            n = sig.n
            for a, ca in self._terms.items():
                row = a << n
                for b, cb in other._terms.items():
                    m = a ^ b
                    c = out.get(m, 0j) + table[row | b] * ca * cb
                    if c == 0:
                        out.pop(m, None)
                    else:
                        out[m] = c
        else:
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    s, m = canonical_sign(a, b, sig)
                    c = out.get(m, 0j) + s * ca * cb
                    if c == 0:
                        out.pop(m, None)
                    else:
                        out[m] = c
        return Multivector._raw(sig, self.field, out)

    def commutator(self, other: "Multivector") -> "Multivector":
        """[U, V] = UV - VU."""
        return self.geometric_product(other) - other.geometric_product(self)

    def anticommutator(self, other: "Multivector") -> "Multivector":
        """{U, V} = UV + VU."""
        return self.geometric_product(other) + other.geometric_product(self)

    # ------------------------------------------------------------------
    # projections

    def grade_project(self, k: int) -> "Multivector":
        """Part of fixed grade ``k``; raises RankOutOfRange unless 0 <= k <= n."""
        if not (isinstance(k, int) and 0 <= k <= self.sig.n):
            raise RankOutOfRange(f"grade {k!r} out of range 0..{self.sig.n}")
        data = {m: c for m, c in self._terms.items() if grade(m) == k}
        return Multivector._raw(self.sig, self.field, data)

    def parity_project(self, even: bool) -> "Multivector":
        keep = 0 if even else 1
        data = {m: c for m, c in self._terms.items() if grade(m) & 1 == keep}
        return Multivector._raw(self.sig, self.field, data)

    def qtype_project(self, kbar: int) -> "Multivector":
        """Part whose grades are congruent to ``kbar`` mod 4."""
        if kbar not in (0, 1, 2, 3):
            raise ValueError(f"quaternion type index {kbar!r} must be 0..3")
        data = {m: c for m, c in self._terms.items() if grade(m) & 3 == kbar}
        return Multivector._raw(self.sig, self.field, data)

    # ------------------------------------------------------------------
    # involution and norms

    def conjugate(self) -> "Multivector":
        """Clifford conjugation: reverse each blade's generator order and
        complex-conjugate each coefficient.

        Per blade of grade g the reversal contributes (-1)**(g*(g-1)//2),
        i.e. -1 exactly when g mod 4 is 2 or 3.
        """
        data = {}
        for m, c in self._terms.items():
            g = grade(m) & 3
            cc = c.conjugate()
            data[m] = -cc if g in (2, 3) else cc
        return Multivector._raw(self.sig, self.field, data)

    def inf_norm(self) -> float:
        """max over stored terms of |re| + |im| (0.0 for the zero element)."""
        if not self._terms:
            return 0.0
        return max(abs(c.real) + abs(c.imag) for c in self._terms.values())

    def real_inf_norm(self) -> float:
        if not self._terms:
            return 0.0
        return max(abs(c.real) for c in self._terms.values())

    def imag_inf_norm(self) -> float:
        if not self._terms:
            return 0.0
        return max(abs(c.imag) for c in self._terms.values())

    def is_zero(self, tol: float = 0.0) -> bool:
        if tol < 0:
            raise ValueError("tolerance must be nonnegative")
        return self.inf_norm() <= tol

    # ------------------------------------------------------------------
    # exponential

    def exp(self, eps: float = 1e-14, max_terms: int = 200) -> "Multivector":
        """exp(U) by scaling and squaring around a truncated power series.

        The argument is halved until its inf-norm is at most 1, the series
        sum stops once the latest term's inf-norm drops below
        ``eps * (1 + inf-norm of the partial sum)``, and the result is
        squared once per halving.  Raises ConvergenceFailure if the series
        uses up ``max_terms`` terms first.
        """
        if not (eps > 0.0):
            raise ValueError("eps must be positive")
        if max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        u = self
        halvings = 0
        while u.inf_norm() > 1.0:
            u = u.scale(0.5)
            halvings += 1
        acc = Multivector.scalar(self.sig, 1.0, self.field)
        term = acc
        converged = False
        for m in range(1, max_terms + 1):
            term = term.geometric_product(u).scale(1.0 / m)
            acc = acc + term
            if term.inf_norm() < eps * (1.0 + acc.inf_norm()):
                converged = True
                break
        if not converged:
            raise ConvergenceFailure(
                f"exp series not converged after {max_terms} terms "
                f"(argument inf-norm {self.inf_norm()!r})"
            )
        for _ in range(halvings):
            acc = acc.geometric_product(acc)
        return acc
