"""Verification harness for the mod-4 grading layer.

Every check is deterministic: random sampling runs on a splitmix64 generator
whose stream is seeded by hashing ``(cfg.seed, check name)`` with FNV-1a, so
two runs with the same config produce byte-identical reports, and a reported
counterexample can be replayed by any implementation of the same generator
(the update and output constants are in ``SplitMix64``).

Sampling draws integer coefficients in [-3, 3] per allowed blade (ascending
blade masks, real part before imaginary part), which keeps every algebraic
check exact: closure and axiom checks compare against zero, not against a
float tolerance, unless the caller widens ``cfg.tol``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Callable, Optional

from .blades import Signature, grade, canonical_sign
from .multivector import Field, Multivector
from .qtype import (
    CoeffClass,
    OpKind,
    QType,
    SubspacePattern,
    TYPE_ORDER,
    detect_qtype,
    is_closed,
    main_compose,
    pattern_compose,
    qtype_compose,
)
from .exprio import format_expression

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output mixes with the
    0xBF58476D1CE4E5B9 / 0x94D049BB133111EB constants and >> 30/27/31."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]: lo + next_u64() mod (hi-lo+1)."""
        return lo + self.next_u64() % (hi - lo + 1)


def fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) & _MASK64
    return h


def derive_subseed(seed: int, name: str) -> int:
    """Per-check stream seed: one splitmix64 output of seed XOR fnv1a64(name)."""
    return SplitMix64((seed & _MASK64) ^ fnv1a64(name)).next_u64()


class Strategy(Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckConfig:
    sig: Signature
    seed: int = 0
    samples: int = 200
    tol: float = 1e-12
    strategy: Optional[Strategy] = None  # None: exhaustive up to n=6, else random
    exp_eps: float = 1e-14
    exp_max_terms: int = 200

    def __post_init__(self) -> None:
        if not isinstance(self.sig, Signature):
            raise TypeError("sig must be a Signature")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.tol < 0.0:
            raise ValueError("tol must be nonnegative")
        if not (self.exp_eps > 0.0):
            raise ValueError("exp_eps must be positive")
        if self.exp_max_terms < 1:
            raise ValueError("exp_max_terms must be at least 1")
        object.__setattr__(self, "seed", int(self.seed) & _MASK64)
        if self.strategy is None:
            auto = Strategy.EXHAUSTIVE if self.sig.n <= 6 else Strategy.RANDOM
            object.__setattr__(self, "strategy", auto)


@dataclass(frozen=True)
class Counterexample:
    lhs: str
    rhs: Optional[str]
    operation: str
    component: str
    magnitude: float

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "operation": self.operation,
            "component": self.component,
            "magnitude": self.magnitude,
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    status: CheckStatus
    cases_run: int
    counterexample: Optional[Counterexample] = None
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status.value,
            "cases_run": self.cases_run,
            "counterexample": (
                None if self.counterexample is None else self.counterexample.to_dict()
            ),
            "notes": self.notes,
        }


class UnknownCheck(Exception):
    """run_suite was handed an identifier it does not know."""


# ----------------------------------------------------------------------
# sampling

def sample_pattern_mv(sig: Signature, pattern: SubspacePattern, rng: SplitMix64,
                      field: Field, lo: int = -3, hi: int = 3) -> Multivector:
    """Integer-coefficient element matching ``pattern``.

    Blades are visited in ascending mask order; for each allowed part the
    next integer is drawn (real part first), so the element is a pure
    function of the generator state.
    """
    terms = {}
    for mask in sig.blades():
        cls = pattern[grade(mask) & 3]
        if cls is CoeffClass.ZERO:
            continue
        re = rng.next_int(lo, hi) if cls & CoeffClass.REAL else 0
        im = rng.next_int(lo, hi) if cls & CoeffClass.IMAGINARY else 0
        if re or im:
            terms[mask] = complex(re, im)
    return Multivector(sig, field, terms)


def sample_type_mv(sig: Signature, qt: QType, rng: SplitMix64,
                   field: Field = Field.COMPLEX) -> Multivector:
    cls = CoeffClass.COMPLEX if field is Field.COMPLEX else CoeffClass.REAL
    classes = tuple(cls if k in qt else CoeffClass.ZERO for k in range(4))
    return sample_pattern_mv(sig, SubspacePattern(classes), rng, field)


def sample_rank_mv(sig: Signature, k: int, rng: SplitMix64,
                   field: Field = Field.COMPLEX) -> Multivector:
    terms = {}
    for mask in sig.blades():
        if grade(mask) != k:
            continue
        re = rng.next_int(-3, 3)
        im = rng.next_int(-3, 3) if field is Field.COMPLEX else 0
        if re or im:
            terms[mask] = complex(re, im)
    return Multivector(sig, field, terms)


def _apply(op: OpKind, u: Multivector, v: Multivector) -> Multivector:
    if op is OpKind.COMMUTATOR:
        return u.commutator(v)
    if op is OpKind.ANTICOMMUTATOR:
        return u.anticommutator(v)
    return u.geometric_product(v)


def _blade_text(sig: Signature, mask: int) -> str:
    return format_expression(Multivector.basis_blade(sig, mask, 1, Field.REAL))


# ----------------------------------------------------------------------
# membership predicates

def is_pseudo_unitary(u: Multivector, tol: float = 1e-12) -> bool:
    """Whether conj(U) * U is the identity within ``tol`` (inf-norm)."""
    e = Multivector.scalar(u.sig, 1.0, u.field)
    return (u.conjugate().geometric_product(u) - e).inf_norm() <= tol


def is_in_wc(u: Multivector, tol: float = 1e-12) -> bool:
    """Lie algebra membership: conj(u) = -u within ``tol`` (inf-norm)."""
    return (u.conjugate() + u).inf_norm() <= tol


# Equivalent description of the same Lie algebra: imaginary coefficients on
# types 0 and 1, real coefficients on types 2 and 3.
WC_PATTERN = SubspacePattern.from_parts(real="23", imag="01")


# ----------------------------------------------------------------------
# checks

def check_quaternion_axioms(
    op: OpKind,
    cfg: CheckConfig,
    rule: Callable[[OpKind, int, int], int] = main_compose,
) -> CheckReport:
    """Main-type composition: op(U, V) lands in the single type given by
    ``rule`` for every pair of main types.

    Exhaustive mode iterates every pair of basis blades, which settles the
    claim for whole type subspaces because both operations are bilinear.
    ``rule`` exists so the test suite can corrupt the table and watch the
    check fail.
    """
    if op is OpKind.GEOMETRIC:
        raise ValueError("axioms cover the commutator and anticommutator")
    name = f"axioms:{op.value}"
    sig = cfg.sig
    cases = 0
    if cfg.strategy is Strategy.EXHAUSTIVE:
        for a in sig.blades():
            for b in sig.blades():
                s_ab, m = canonical_sign(a, b, sig)
                s_ba, _ = canonical_sign(b, a, sig)
                coeff = s_ab - s_ba if op is OpKind.COMMUTATOR else s_ab + s_ba
                cases += 1
                if coeff == 0:
                    continue
                target = rule(op, grade(a) & 3, grade(b) & 3)
                if grade(m) & 3 != target:
                    return CheckReport(
                        name, CheckStatus.FAIL, cases,
                        Counterexample(
                            lhs=_blade_text(sig, a), rhs=_blade_text(sig, b),
                            operation=op.value,
                            component=f"type {grade(m) & 3} (expected {target})",
                            magnitude=float(abs(coeff)),
                        ),
                    )
        notes = ("all basis-blade pairs checked exactly; bilinearity extends "
                 "the result to the full type subspaces")
    else:
        rng = SplitMix64(derive_subseed(cfg.seed, name))
        per_pair = max(1, cfg.samples // 16)
        for t1 in range(4):
            for t2 in range(4):
                target = rule(op, t1, t2)
                for _ in range(per_pair):
                    u = sample_type_mv(sig, QType.of(t1), rng)
                    v = sample_type_mv(sig, QType.of(t2), rng)
                    w = _apply(op, u, v)
                    cases += 1
                    leak = 0.0
                    for k in range(4):
                        if k != target:
                            leak = max(leak, w.qtype_project(k).inf_norm())
                    if leak > cfg.tol:
                        return CheckReport(
                            name, CheckStatus.FAIL, cases,
                            Counterexample(
                                lhs=format_expression(u), rhs=format_expression(v),
                                operation=op.value,
                                component=f"outside type {target}",
                                magnitude=leak,
                            ),
                        )
        notes = f"random integer samples, {per_pair} per main-type pair"
    return CheckReport(name, CheckStatus.PASS, cases, None, notes)


def _grade_residue(op: OpKind, k: int, l: int) -> int:
    # Result grades of op on ranks k, l are congruent to this value mod 4.
    hi, lo = (k, l) if k >= l else (l, k)
    even_odd = hi % 2 == 0 and lo % 2 == 1
    if op is OpKind.COMMUTATOR:
        s = hi - lo if even_odd else hi - lo + 2
    else:
        s = hi - lo + 2 if even_odd else hi - lo
    return s & 3


def check_grade_pattern(cfg: CheckConfig) -> CheckReport:
    """Rank-level refinement: op on ranks (k, l) only reaches grades in one
    residue class mod 4 (k-l or k-l+2, depending on the operation and on the
    parities of the ordered ranks)."""
    name = "grades"
    sig = cfg.sig
    cases = 0
    if cfg.strategy is Strategy.EXHAUSTIVE:
        for a in sig.blades():
            ka = grade(a)
            for b in sig.blades():
                s_ab, m = canonical_sign(a, b, sig)
                s_ba, _ = canonical_sign(b, a, sig)
                cases += 1
                for op, coeff in (
                    (OpKind.COMMUTATOR, s_ab - s_ba),
                    (OpKind.ANTICOMMUTATOR, s_ab + s_ba),
                ):
                    if coeff == 0:
                        continue
                    want = _grade_residue(op, ka, grade(b))
                    if grade(m) & 3 != want:
                        return CheckReport(
                            name, CheckStatus.FAIL, cases,
                            Counterexample(
                                lhs=_blade_text(sig, a), rhs=_blade_text(sig, b),
                                operation=op.value,
                                component=f"grade {grade(m)} (want residue {want})",
                                magnitude=float(abs(coeff)),
                            ),
                        )
        notes = "all basis-blade pairs, both operations, exact"
    else:
        rng = SplitMix64(derive_subseed(cfg.seed, name))
        n = sig.n
        per_pair = max(1, cfg.samples // ((n + 1) * (n + 1)))
        for k in range(n + 1):
            for l in range(n + 1):
                for _ in range(per_pair):
                    u = sample_rank_mv(sig, k, rng)
                    v = sample_rank_mv(sig, l, rng)
                    cases += 1
                    for op in (OpKind.COMMUTATOR, OpKind.ANTICOMMUTATOR):
                        w = _apply(op, u, v)
                        want = _grade_residue(op, k, l)
                        for m in w.terms:
                            if grade(m) & 3 != want:
                                return CheckReport(
                                    name, CheckStatus.FAIL, cases,
                                    Counterexample(
                                        lhs=format_expression(u),
                                        rhs=format_expression(v),
                                        operation=op.value,
                                        component=(
                                            f"grade {grade(m)} (want residue {want})"
                                        ),
                                        magnitude=w.grade_project(grade(m)).inf_norm(),
                                    ),
                                )
        notes = f"random integer samples, {per_pair} per rank pair, both operations"
    return CheckReport(name, CheckStatus.PASS, cases, None, notes)


def check_type_table(op: OpKind, cfg: CheckConfig) -> CheckReport:
    """Soundness of the full 15 x 15 composition table: results of ``op`` on
    sampled elements of each type pair stay inside the table cell.  Tightness
    (how much of each cell the samples actually reach) is only reported."""
    name = f"tables:{op.value}"
    sig = cfg.sig
    cases = 0
    reached = [[0] * len(TYPE_ORDER) for _ in TYPE_ORDER]
    rng = SplitMix64(derive_subseed(cfg.seed, name))
    per_cell = max(8, cfg.samples // 25)
    main_index = {TYPE_ORDER[k].mask: k for k in range(4)}

    if cfg.strategy is Strategy.EXHAUSTIVE and op is not OpKind.GEOMETRIC:
        # Blade pairs settle the sixteen main-type cells exactly.
        for a in sig.blades():
            for b in sig.blades():
                s_ab, m = canonical_sign(a, b, sig)
                s_ba, _ = canonical_sign(b, a, sig)
                coeff = s_ab - s_ba if op is OpKind.COMMUTATOR else s_ab + s_ba
                cases += 1
                if coeff == 0:
                    continue
                i = main_index[1 << (grade(a) & 3)]
                j = main_index[1 << (grade(b) & 3)]
                cell = qtype_compose(op, TYPE_ORDER[i], TYPE_ORDER[j])
                got = QType.of(grade(m) & 3)
                if not got <= cell:
                    return CheckReport(
                        name, CheckStatus.FAIL, cases,
                        Counterexample(
                            lhs=_blade_text(sig, a), rhs=_blade_text(sig, b),
                            operation=op.value,
                            component=f"type {got} outside cell {cell}",
                            magnitude=float(abs(coeff)),
                        ),
                    )
                reached[i][j] |= got.mask

    for i, t1 in enumerate(TYPE_ORDER):
        for j, t2 in enumerate(TYPE_ORDER):
            cell = qtype_compose(op, t1, t2)
            for _ in range(per_cell):
                u = sample_type_mv(sig, t1, rng)
                v = sample_type_mv(sig, t2, rng)
                w = _apply(op, u, v)
                got = detect_qtype(w, 0.0)
                cases += 1
                if not got <= cell:
                    bad = next(k for k in got if k not in cell)
                    return CheckReport(
                        name, CheckStatus.FAIL, cases,
                        Counterexample(
                            lhs=format_expression(u), rhs=format_expression(v),
                            operation=op.value,
                            component=f"type {got} outside cell {cell}",
                            magnitude=w.qtype_project(bad).inf_norm(),
                        ),
                    )
                reached[i][j] |= got.mask

    possible = 0
    hit = 0
    for i in range(len(TYPE_ORDER)):
        for j in range(len(TYPE_ORDER)):
            cell = qtype_compose(op, TYPE_ORDER[i], TYPE_ORDER[j])
            possible += len(cell.members)
            hit += len(QType(reached[i][j] & cell.mask).members)
    coverage = 100.0 * hit / possible if possible else 100.0
    notes = (f"soundness exact on every cell, {per_cell} sample pairs each; "
             f"cell coverage {coverage:.1f}% (reported, not asserted)")
    return CheckReport(name, CheckStatus.PASS, cases, None, notes)


def check_pattern_closure(
    op: OpKind,
    pattern: SubspacePattern,
    cfg: CheckConfig,
    field: Field = Field.COMPLEX,
    name: Optional[str] = None,
) -> CheckReport:
    """One subspace closure claim, checked abstractly (pattern composition)
    and concretely (integer samples, exact leakage).  Callable with any
    pattern, so deliberately non-closed subspaces serve as negative
    controls."""
    label = name or f"closure:{op.value}:{field.value}:{pattern}"
    rng = SplitMix64(derive_subseed(cfg.seed, label))
    composed = pattern_compose(op, pattern, pattern)
    if not pattern.contains(composed):
        witness = _concrete_leak_witness(op, pattern, cfg, field, rng)
        return CheckReport(
            label, CheckStatus.FAIL, 1 + (witness is not None), witness,
            f"abstract composition leaks: {pattern} composes to {composed}",
        )
    cases = 1
    for _ in range(cfg.samples):
        u = sample_pattern_mv(cfg.sig, pattern, rng, field)
        v = sample_pattern_mv(cfg.sig, pattern, rng, field)
        w = _apply(op, u, v)
        cases += 1
        leak = pattern.leakage(w)
        if leak > cfg.tol:
            return CheckReport(
                label, CheckStatus.FAIL, cases,
                Counterexample(
                    lhs=format_expression(u), rhs=format_expression(v),
                    operation=op.value,
                    component=f"outside pattern {pattern}",
                    magnitude=leak,
                ),
            )
    return CheckReport(
        label, CheckStatus.PASS, cases, None,
        f"abstract composition contained; {cfg.samples} integer sample pairs",
    )


def _concrete_leak_witness(
    op: OpKind,
    pattern: SubspacePattern,
    cfg: CheckConfig,
    field: Field,
    rng: SplitMix64,
) -> Optional[Counterexample]:
    for _ in range(max(cfg.samples, 16)):
        u = sample_pattern_mv(cfg.sig, pattern, rng, field)
        v = sample_pattern_mv(cfg.sig, pattern, rng, field)
        leak = pattern.leakage(_apply(op, u, v))
        if leak > cfg.tol:
            return Counterexample(
                lhs=format_expression(u), rhs=format_expression(v),
                operation=op.value,
                component=f"outside pattern {pattern}",
                magnitude=leak,
            )
    return None


# Closed-subspace catalogs: (real digits, imaginary digits) per pattern.
PRODUCT_CLOSED_REAL = ("02",)
PRODUCT_CLOSED_COMPLEX = (("02", ""), ("02", "02"), ("02", "13"), ("0123", ""))
COMM_CLOSED_REAL = ("2", "02", "12", "23")
COMM_CLOSED_COMPLEX = (
    ("2", ""), ("02", ""), ("12", ""), ("23", ""), ("0123", ""),
    ("02", "02"), ("12", "12"), ("23", "23"),
    ("2", "0"), ("2", "1"), ("2", "2"), ("2", "3"),
    ("02", "13"), ("12", "03"), ("23", "01"),
)
ANTICOMM_CLOSED_REAL = ("0", "01", "02", "03")
ANTICOMM_CLOSED_COMPLEX = (
    ("0", ""), ("01", ""), ("02", ""), ("03", ""), ("0123", ""),
    ("01", "01"), ("02", "02"), ("03", "03"),
    ("0", "0"), ("0", "1"), ("0", "2"), ("0", "3"),
    ("01", "23"), ("02", "13"), ("03", "12"),
)


def closure_catalog() -> list[tuple[OpKind, Field, SubspacePattern]]:
    """Every closed subspace claim, in a fixed order."""
    entries: list[tuple[OpKind, Field, SubspacePattern]] = []
    for digits in PRODUCT_CLOSED_REAL:
        entries.append((OpKind.GEOMETRIC, Field.REAL,
                        SubspacePattern.from_parts(real=digits)))
    for re, im in PRODUCT_CLOSED_COMPLEX:
        entries.append((OpKind.GEOMETRIC, Field.COMPLEX,
                        SubspacePattern.from_parts(real=re, imag=im)))
    for digits in COMM_CLOSED_REAL:
        entries.append((OpKind.COMMUTATOR, Field.REAL,
                        SubspacePattern.from_parts(real=digits)))
    for re, im in COMM_CLOSED_COMPLEX:
        entries.append((OpKind.COMMUTATOR, Field.COMPLEX,
                        SubspacePattern.from_parts(real=re, imag=im)))
    for digits in ANTICOMM_CLOSED_REAL:
        entries.append((OpKind.ANTICOMMUTATOR, Field.REAL,
                        SubspacePattern.from_parts(real=digits)))
    for re, im in ANTICOMM_CLOSED_COMPLEX:
        entries.append((OpKind.ANTICOMMUTATOR, Field.COMPLEX,
                        SubspacePattern.from_parts(real=re, imag=im)))
    return entries


def check_subalgebra_theorems(cfg: CheckConfig) -> list[CheckReport]:
    """Closure of every cataloged subspace: the real even-type algebra under
    the product, the commutator-closed and anticommutator-closed families
    over both coefficient fields."""
    return [
        check_pattern_closure(op, pattern, cfg, field=field)
        for op, field, pattern in closure_catalog()
    ]


# Commutator relations among the wC constituents: ([P1, P2], target).
_WC_I0 = SubspacePattern.from_parts(imag="0")
_WC_I1 = SubspacePattern.from_parts(imag="1")
_WC_R2 = SubspacePattern.from_parts(real="2")
_WC_R3 = SubspacePattern.from_parts(real="3")
WC_RELATIONS = (
    (_WC_I0, _WC_I0, _WC_R2),
    (_WC_I1, _WC_I1, _WC_R2),
    (_WC_R2, _WC_R2, _WC_R2),
    (_WC_R3, _WC_R3, _WC_R2),
    (_WC_I0, _WC_R2, _WC_I0),
    (_WC_I1, _WC_R2, _WC_I1),
    (_WC_R3, _WC_R2, _WC_R3),
    (_WC_I0, _WC_I1, _WC_R3),
    (_WC_I0, _WC_R3, _WC_I1),
    (_WC_I1, _WC_R3, _WC_I0),
)


def check_theorem5(cfg: CheckConfig) -> CheckReport:
    """Commutator relations among the four constituents of the Lie algebra
    (imaginary types 0 and 1, real types 2 and 3)."""
    name = "theorem5"
    rng = SplitMix64(derive_subseed(cfg.seed, name))
    cases = 0
    for p1, p2, target in WC_RELATIONS:
        composed = pattern_compose(OpKind.COMMUTATOR, p1, p2)
        cases += 1
        if not target.contains(composed):
            return CheckReport(
                name, CheckStatus.FAIL, cases, None,
                f"abstract relation [{p1}, {p2}] leaks outside {target}",
            )
        for _ in range(cfg.samples):
            u = sample_pattern_mv(cfg.sig, p1, rng, Field.COMPLEX)
            v = sample_pattern_mv(cfg.sig, p2, rng, Field.COMPLEX)
            w = u.commutator(v)
            cases += 1
            leak = target.leakage(w)
            if leak > cfg.tol:
                return CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=format_expression(v),
                        operation="comm",
                        component=f"[{p1}, {p2}] outside {target}",
                        magnitude=leak,
                    ),
                )
    return CheckReport(
        name, CheckStatus.PASS, cases, None,
        f"10 relations, abstract plus {cfg.samples} integer sample pairs each",
    )


# Commutator-closed subspaces of the Lie algebra, with the ambient pattern
# their exponentials stay inside.
LIE_SUBALGEBRA_ROWS = (
    (SubspacePattern.from_parts(real="2"),
     SubspacePattern.from_parts(real="02")),
    (SubspacePattern.from_parts(real="2", imag="0"),
     SubspacePattern.from_parts(real="02", imag="02")),
    (SubspacePattern.from_parts(real="2", imag="1"),
     SubspacePattern.from_parts(real="02", imag="13")),
    (SubspacePattern.from_parts(real="23"),
     SubspacePattern.from_parts(real="0123")),
)


def check_theorem6(cfg: CheckConfig) -> list[CheckReport]:
    """The four Lie subalgebras: commutator-closed and pointwise inside the
    Lie algebra (conj(u) = -u exactly on integer samples)."""
    out = []
    for lie, _ in LIE_SUBALGEBRA_ROWS:
        name = f"theorem6:{lie}"
        if not is_closed(OpKind.COMMUTATOR, lie):
            out.append(CheckReport(name, CheckStatus.FAIL, 1, None,
                                   "abstract commutator closure fails"))
            continue
        rng = SplitMix64(derive_subseed(cfg.seed, name))
        cases = 1
        report = None
        for _ in range(cfg.samples):
            u = sample_pattern_mv(cfg.sig, lie, rng, Field.COMPLEX)
            v = sample_pattern_mv(cfg.sig, lie, rng, Field.COMPLEX)
            cases += 1
            anti = (u.conjugate() + u).inf_norm()
            if anti > cfg.tol:
                report = CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="conj",
                        component="conj(u) + u", magnitude=anti,
                    ),
                )
                break
            leak = lie.leakage(u.commutator(v))
            if leak > cfg.tol:
                report = CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=format_expression(v),
                        operation="comm",
                        component=f"outside pattern {lie}", magnitude=leak,
                    ),
                )
                break
        if report is None:
            report = CheckReport(
                name, CheckStatus.PASS, cases, None,
                f"closure and membership exact on {cfg.samples} samples",
            )
        out.append(report)
    return out


def check_theorem7(cfg: CheckConfig) -> list[CheckReport]:
    """Exponentials of each Lie subalgebra: pseudo-unitary to 1e-9 and inside
    the row's ambient pattern to 1e-9, for samples with inf-norm at most 1.

    Only the exponential image is probed; this does not decide whether the
    exponential map covers the corresponding group component.
    """
    group_tol = 1e-9
    out = []
    for lie, ambient in LIE_SUBALGEBRA_ROWS:
        name = f"theorem7:{lie}->{ambient}"
        rng = SplitMix64(derive_subseed(cfg.seed, name))
        cases = 0
        report = None
        for _ in range(cfg.samples):
            u = sample_pattern_mv(cfg.sig, lie, rng, Field.COMPLEX)
            nrm = u.inf_norm()
            if nrm > 1.0:
                u = u.scale(1.0 / nrm)
            while u.inf_norm() > 1.0:  # float-rounding guard
                u = u.scale(0.9999999999999999)
            cases += 1
            anti = (u.conjugate() + u).inf_norm()
            if anti > cfg.tol:
                report = CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="conj",
                        component="conj(u) + u", magnitude=anti,
                    ),
                )
                break
            big_u = u.exp(cfg.exp_eps, cfg.exp_max_terms)
            e = Multivector.scalar(cfg.sig, 1.0, Field.COMPLEX)
            defect = (big_u.conjugate().geometric_product(big_u) - e).inf_norm()
            if defect > group_tol:
                report = CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="exp",
                        component="conj(U) U - 1", magnitude=defect,
                    ),
                )
                break
            leak = ambient.leakage(big_u)
            if leak > group_tol:
                report = CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="exp",
                        component=f"outside pattern {ambient}", magnitude=leak,
                    ),
                )
                break
        if report is None:
            report = CheckReport(
                name, CheckStatus.PASS, cases, None,
                f"exp image pseudo-unitary and inside {ambient} to {group_tol:g}",
            )
        out.append(report)
    return out


def check_theorem6_7(cfg: CheckConfig) -> list[CheckReport]:
    return check_theorem6(cfg) + check_theorem7(cfg)


def check_wc_membership(cfg: CheckConfig) -> CheckReport:
    """The two Lie algebra membership criteria (conj(u) = -u, and the
    imaginary-0,1 / real-2,3 pattern) agree on every sample."""
    name = "wc"
    rng = SplitMix64(derive_subseed(cfg.seed, name))
    everything = SubspacePattern.from_parts(real="0123", imag="0123")
    cases = 0
    for positive in (True, False):
        source = WC_PATTERN if positive else everything
        for _ in range(cfg.samples):
            u = sample_pattern_mv(cfg.sig, source, rng, Field.COMPLEX)
            cases += 1
            by_conj = is_in_wc(u, cfg.tol)
            by_pattern = WC_PATTERN.matches(u, cfg.tol)
            if by_conj != by_pattern:
                return CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="conj",
                        component=(f"conjugation says {by_conj}, "
                                   f"pattern says {by_pattern}"),
                        magnitude=(u.conjugate() + u).inf_norm(),
                    ),
                )
            if positive and not by_conj:
                return CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="conj",
                        component="pattern sample rejected",
                        magnitude=(u.conjugate() + u).inf_norm(),
                    ),
                )
    return CheckReport(
        name, CheckStatus.PASS, cases, None,
        "conjugation and pattern criteria agree on members and on generic elements",
    )


def check_rank_coincidence(cfg: CheckConfig) -> CheckReport:
    """Below four generators every type projection equals the grade
    projection of the same index; skipped at n >= 4 where types start
    collecting several grades."""
    name = "rank"
    sig = cfg.sig
    if sig.n >= 4:
        return CheckReport(
            name, CheckStatus.SKIPPED, 0, None,
            f"types and ranks coincide only below 4 generators (n={sig.n})",
        )
    cases = 0
    for mask in sig.blades():
        u = Multivector.basis_blade(sig, mask, 1, Field.COMPLEX)
        cases += 1
        if detect_qtype(u, 0.0) != QType.of(grade(mask)):
            return CheckReport(
                name, CheckStatus.FAIL, cases,
                Counterexample(
                    lhs=_blade_text(sig, mask), rhs=None, operation="detect",
                    component=f"type {detect_qtype(u, 0.0)}",
                    magnitude=1.0,
                ),
            )
        for k in range(sig.n + 1):
            if u.qtype_project(k) != u.grade_project(k):
                return CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=_blade_text(sig, mask), rhs=None, operation="project",
                        component=f"type vs grade projection at {k}",
                        magnitude=(u.qtype_project(k) - u.grade_project(k)).inf_norm(),
                    ),
                )
    rng = SplitMix64(derive_subseed(cfg.seed, name))
    everything = SubspacePattern.from_parts(real="0123", imag="0123")
    for _ in range(cfg.samples):
        u = sample_pattern_mv(sig, everything, rng, Field.COMPLEX)
        cases += 1
        for k in range(sig.n + 1):
            if u.qtype_project(k) != u.grade_project(k):
                return CheckReport(
                    name, CheckStatus.FAIL, cases,
                    Counterexample(
                        lhs=format_expression(u), rhs=None, operation="project",
                        component=f"type vs grade projection at {k}",
                        magnitude=(u.qtype_project(k) - u.grade_project(k)).inf_norm(),
                    ),
                )
    return CheckReport(
        name, CheckStatus.PASS, cases, None,
        "every blade and sampled element: type projections equal grade projections",
    )


# ----------------------------------------------------------------------
# suite plumbing

_LEAVES: dict[str, Callable[[CheckConfig], list[CheckReport]]] = {
    "axioms:anticomm": lambda cfg: [check_quaternion_axioms(OpKind.ANTICOMMUTATOR, cfg)],
    "axioms:comm": lambda cfg: [check_quaternion_axioms(OpKind.COMMUTATOR, cfg)],
    "grades": lambda cfg: [check_grade_pattern(cfg)],
    "tables:product": lambda cfg: [check_type_table(OpKind.GEOMETRIC, cfg)],
    "tables:comm": lambda cfg: [check_type_table(OpKind.COMMUTATOR, cfg)],
    "tables:anticomm": lambda cfg: [check_type_table(OpKind.ANTICOMMUTATOR, cfg)],
    "closures": check_subalgebra_theorems,
    "theorem5": lambda cfg: [check_theorem5(cfg)],
    "theorem6": check_theorem6,
    "theorem7": check_theorem7,
    "wc": lambda cfg: [check_wc_membership(cfg)],
    "rank": lambda cfg: [check_rank_coincidence(cfg)],
}

_GROUPS: dict[str, tuple[str, ...]] = {
    "axioms": ("axioms:anticomm", "axioms:comm"),
    "tables": ("tables:product", "tables:comm", "tables:anticomm"),
    "theorems": ("closures", "theorem5", "theorem6", "theorem7", "wc"),
    "all": (
        "axioms:anticomm", "axioms:comm", "grades",
        "tables:product", "tables:comm", "tables:anticomm",
        "closures", "theorem5", "theorem6", "theorem7", "wc", "rank",
    ),
}

SUITE_NAMES = tuple(_GROUPS) + tuple(_LEAVES)


def resolve_suite(names) -> list[str]:
    """Expand group identifiers to leaf check names, deduplicated in order."""
    out: list[str] = []
    for ident in names:
        if ident in _GROUPS:
            leaves = _GROUPS[ident]
        elif ident in _LEAVES:
            leaves = (ident,)
        else:
            raise UnknownCheck(
                f"unknown check {ident!r}; known: {', '.join(sorted(SUITE_NAMES))}"
            )
        for leaf in leaves:
            if leaf not in out:
                out.append(leaf)
    return out


def run_suite(names, cfg: CheckConfig) -> list[CheckReport]:
    """Run the named checks (leaf names or groups) and collect their reports.

    Each check seeds its own splitmix64 stream from (cfg.seed, its name), so
    the output is independent of suite composition and repeatable."""
    reports: list[CheckReport] = []
    for leaf in resolve_suite(names):
        reports.extend(_LEAVES[leaf](cfg))
    return reports
