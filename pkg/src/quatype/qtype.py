"""Mod-4 (quaternion-type) grading of Clifford algebra elements.

A main type k in {0,1,2,3} collects the grades congruent to k mod 4.  General
types are subsets of the four main types; on main types the commutator and
anticommutator compose like quaternion units, which reduces to XOR arithmetic:

    anticommutator:  (a, b) -> a ^ b          (unit element 0)
    commutator:      (a, b) -> a ^ b ^ 2      (unit element 2)

Subspace patterns refine types with a per-type coefficient class (zero, real,
imaginary, complex), enough to express statements like "real even part plus
imaginary odd part is closed under the commutator".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntFlag

from .multivector import Multivector


class OpKind(Enum):
    COMMUTATOR = "comm"
    ANTICOMMUTATOR = "anticomm"
    GEOMETRIC = "product"


class CoeffClass(IntFlag):
    """Which coordinate parts a coefficient may occupy.

    Bit 0 grants a real part, bit 1 an imaginary part; the lattice order is
    bitmask inclusion (ZERO below everything, COMPLEX on top).
    """

    ZERO = 0
    REAL = 1
    IMAGINARY = 2
    COMPLEX = 3


def coeff_mul(a: CoeffClass, b: CoeffClass) -> CoeffClass:
    """Class of a product of coefficients drawn from classes a and b."""
    ar, ai = a & 1, (a >> 1) & 1
    br, bi = b & 1, (b >> 1) & 1
    re = (ar & br) | (ai & bi)
    im = (ar & bi) | (ai & br)
    return CoeffClass(re | (im << 1))


def coeff_join(a: CoeffClass, b: CoeffClass) -> CoeffClass:
    return CoeffClass(a | b)


def coeff_le(a: CoeffClass, b: CoeffClass) -> bool:
    return (a & ~b) == 0


@dataclass(frozen=True)
class QType:
    """Subset of the four main types, stored as a 4-bit mask."""

    mask: int

    def __post_init__(self) -> None:
        if not (isinstance(self.mask, int) and 0 <= self.mask <= 0b1111):
            raise ValueError(f"type mask {self.mask!r} out of range")

    @classmethod
    def of(cls, *members: int) -> "QType":
        m = 0
        for k in members:
            if k not in (0, 1, 2, 3):
                raise ValueError(f"main type {k!r} must be 0..3")
            m |= 1 << k
        return cls(m)

    @classmethod
    def from_string(cls, text: str) -> "QType":
        """Parse digit strings like "02"; the empty string is the empty type."""
        return cls.of(*(int(ch) for ch in text))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(k for k in range(4) if self.mask >> k & 1)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, k: int) -> bool:
        return 0 <= k <= 3 and bool(self.mask >> k & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __le__(self, other: "QType") -> bool:
        return (self.mask & ~other.mask) == 0

    def __or__(self, other: "QType") -> "QType":
        return QType(self.mask | other.mask)

    def __and__(self, other: "QType") -> "QType":
        return QType(self.mask & other.mask)

    def __str__(self) -> str:
        return "".join(str(k) for k in self.members)

    def __repr__(self) -> str:
        return f"QType({str(self)!r})"


EMPTY_TYPE = QType(0)
FULL_TYPE = QType(0b1111)

# Fixed presentation order: the four main types, then pairs, triples, and the
# full type, each group in ascending digit order.
TYPE_ORDER: tuple[QType, ...] = tuple(
    QType.of(*members)
    for members in (
        (0,), (1,), (2,), (3,),
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
        (0, 1, 2, 3),
    )
)


def main_compose(op: OpKind, a: int, b: int) -> int:
    """Compose two main types under the commutator or anticommutator.

    Anticommutator: a ^ b.  Commutator: a ^ b ^ 2.  Both are symmetric and
    reproduce the quaternion-unit table with unit 0 resp. unit 2.
    """
    if a not in (0, 1, 2, 3) or b not in (0, 1, 2, 3):
        raise ValueError(f"main types must be 0..3, got {a!r}, {b!r}")
    if op is OpKind.ANTICOMMUTATOR:
        return a ^ b
    if op is OpKind.COMMUTATOR:
        return a ^ b ^ 2
    raise ValueError("main_compose is defined for commutator/anticommutator only")


def qtype_compose(op: OpKind, t1: QType, t2: QType) -> QType:
    """Smallest type guaranteed to contain op(U, V) for U of type t1, V of t2.

    The empty type is absorbing.  The geometric product composes as the union
    of the commutator and anticommutator results (UV = [U,V]/2 + {U,V}/2).
    """
    if not t1 or not t2:
        return EMPTY_TYPE
    if op is OpKind.GEOMETRIC:
        return (qtype_compose(OpKind.COMMUTATOR, t1, t2)
                | qtype_compose(OpKind.ANTICOMMUTATOR, t1, t2))
    mask = 0
    for a in t1:
        for b in t2:
            mask |= 1 << main_compose(op, a, b)
    return QType(mask)


@dataclass(frozen=True)
class SubspacePattern:
    """One coefficient class per main type, describing a linear subspace."""

    classes: tuple[CoeffClass, CoeffClass, CoeffClass, CoeffClass]

    def __post_init__(self) -> None:
        if len(self.classes) != 4:
            raise ValueError("a pattern needs exactly four classes")
        object.__setattr__(
            self, "classes", tuple(CoeffClass(c) for c in self.classes)
        )

    @classmethod
    def from_parts(cls, real: str = "", imag: str = "") -> "SubspacePattern":
        """Build a pattern from digit strings: types granted a real part and
        types granted an imaginary part ("02", "13", ...); a digit in both
        gets a full complex coefficient."""
        classes = [CoeffClass.ZERO] * 4
        for ch in real:
            classes[int(ch)] |= CoeffClass.REAL
        for ch in imag:
            classes[int(ch)] |= CoeffClass.IMAGINARY
        return cls(tuple(classes))

    def __getitem__(self, kbar: int) -> CoeffClass:
        return self.classes[kbar]

    @property
    def support(self) -> QType:
        return QType.of(*(k for k in range(4) if self.classes[k] != CoeffClass.ZERO))

    def contains(self, other: "SubspacePattern") -> bool:
        return all(coeff_le(other.classes[k], self.classes[k]) for k in range(4))

    def join(self, other: "SubspacePattern") -> "SubspacePattern":
        return SubspacePattern(
            tuple(coeff_join(self.classes[k], other.classes[k]) for k in range(4))
        )

    def matches(self, mv: Multivector, tol: float = 0.0) -> bool:
        """True when every part the pattern forbids stays within ``tol``.

        A class without a real bit bounds the real parts of that type's
        projection; a class without an imaginary bit bounds the imaginary
        parts.  COMPLEX constrains nothing, ZERO constrains both.
        """
        for k in range(4):
            proj = mv.qtype_project(k)
            cls = self.classes[k]
            if not cls & CoeffClass.REAL and proj.real_inf_norm() > tol:
                return False
            if not cls & CoeffClass.IMAGINARY and proj.imag_inf_norm() > tol:
                return False
        return True

    def leakage(self, mv: Multivector) -> float:
        """Largest forbidden-part magnitude (0.0 when mv matches exactly)."""
        worst = 0.0
        for k in range(4):
            proj = mv.qtype_project(k)
            cls = self.classes[k]
            if not cls & CoeffClass.REAL:
                worst = max(worst, proj.real_inf_norm())
            if not cls & CoeffClass.IMAGINARY:
                worst = max(worst, proj.imag_inf_norm())
        return worst

    def __str__(self) -> str:
        re = "".join(str(k) for k in range(4) if self.classes[k] & CoeffClass.REAL)
        im = "".join(str(k) for k in range(4) if self.classes[k] & CoeffClass.IMAGINARY)
        if re and im:
            return f"{re}+i{im}"
        if im:
            return f"i{im}"
        if re:
            return re
        return "empty"


def pattern_compose(op: OpKind, p1: SubspacePattern, p2: SubspacePattern) -> SubspacePattern:
    """Pattern guaranteed to contain op(U, V) for U matching p1, V matching p2."""
    if op is OpKind.GEOMETRIC:
        return pattern_compose(OpKind.COMMUTATOR, p1, p2).join(
            pattern_compose(OpKind.ANTICOMMUTATOR, p1, p2)
        )
    classes = [CoeffClass.ZERO] * 4
    for a in range(4):
        if p1.classes[a] == CoeffClass.ZERO:
            continue
        for b in range(4):
            if p2.classes[b] == CoeffClass.ZERO:
                continue
            target = main_compose(op, a, b)
            classes[target] = coeff_join(
                classes[target], coeff_mul(p1.classes[a], p2.classes[b])
            )
    return SubspacePattern(tuple(classes))


def is_closed(op: OpKind, pattern: SubspacePattern) -> bool:
    """Whether the subspace described by ``pattern`` is closed under ``op``."""
    return pattern.contains(pattern_compose(op, pattern, pattern))


def detect_qtype(mv: Multivector, tol: float = 1e-12) -> QType:
    """Main types whose projection exceeds ``tol * (1 + inf_norm(mv))``."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    thresh = tol * (1.0 + mv.inf_norm())
    mask = 0
    for k in range(4):
        if mv.qtype_project(k).inf_norm() > thresh:
            mask |= 1 << k
    return QType(mask)


def pattern_of(mv: Multivector, tol: float = 1e-12) -> SubspacePattern:
    """Observed coefficient class per main type, at the same relative
    threshold as detect_qtype."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    thresh = tol * (1.0 + mv.inf_norm())
    classes = []
    for k in range(4):
        proj = mv.qtype_project(k)
        cls = CoeffClass.ZERO
        if proj.real_inf_norm() > thresh:
            cls |= CoeffClass.REAL
        if proj.imag_inf_norm() > thresh:
            cls |= CoeffClass.IMAGINARY
        classes.append(cls)
    return SubspacePattern(tuple(classes))


def emit_table(op: OpKind) -> list[list[QType]]:
    """15 x 15 composition table over the nonempty types in TYPE_ORDER."""
    return [
        [qtype_compose(op, t1, t2) for t2 in TYPE_ORDER]
        for t1 in TYPE_ORDER
    ]
