"""Uniform exact axiom checking for every supported inverse kind.

check_axioms evaluates each defining equation of the requested kind and
records the exact residual (difference of the two sides), a membership
witness, or a nilpotency certificate.  Reports are immutable and
deterministic: identical inputs give identical reports.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import DimensionError
from .matrix import (
    Matrix,
    MembershipWitness,
    SubspaceDescriptor,
    ideal_membership,
    image_of,
    kernel_of,
    nilpotency_and_index,
    subspace_relate,
)
from .pinv import mp_inverse
from .scalar import scalar_format


class InverseKind(enum.Enum):
    MP = "mp"
    WEAK_MP = "weak-mp"
    GROUP = "group"
    DRAZIN = "drazin"
    HGROUP = "hgroup"
    WEAK_HGROUP = "weak-hgroup"
    BC = "bc"
    TWO_PRESCRIBED = "two"


@dataclass(frozen=True)
class AxiomCheck:
    """One defining equation: name, outcome, and an exact certificate."""

    name: str
    holds: bool
    residual: Optional[Matrix] = None
    witness: Optional[MembershipWitness] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class AxiomReport:
    kind: InverseKind
    checks: tuple[AxiomCheck, ...]
    overall: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "overall", all(c.holds for c in self.checks))


def _equation(name: str, lhs: Matrix, rhs: Matrix) -> AxiomCheck:
    residual = lhs - rhs
    return AxiomCheck(name, residual.is_zero(), residual=residual)


def _hermitian(name: str, m: Matrix) -> AxiomCheck:
    residual = m.h - m
    return AxiomCheck(name, residual.is_zero(), residual=residual)


def _membership(name: str, relation: str, x: Matrix, fixed: Matrix) -> AxiomCheck:
    witness = ideal_membership(relation, x, fixed)
    return AxiomCheck(name, witness.holds, witness=witness)


def _nilpotency(name: str, m: Matrix) -> AxiomCheck:
    nilpotent, k = nilpotency_and_index(m)
    if nilpotent:
        note = f"nilpotent, smallest vanishing power {max(k, 1)}"
    else:
        note = "not nilpotent: rank chain stabilizes at a nonzero rank"
    return AxiomCheck(name, nilpotent, residual=m, note=note)


def _subspace(name: str, have: SubspaceDescriptor, want: SubspaceDescriptor) -> AxiomCheck:
    holds = subspace_relate(have, want, "equals")
    return AxiomCheck(name, holds, note="subspace equality" if holds else "subspaces differ")


def check_axioms(
    kind: InverseKind,
    a: Matrix,
    x: Matrix,
    *,
    pair=None,
    image: SubspaceDescriptor | None = None,
    kernel: SubspaceDescriptor | None = None,
) -> AxiomReport:
    """Evaluate every defining equation of ``kind`` for the candidate x.

    BC needs ``pair`` (the fixed b and c); TWO_PRESCRIBED needs ``image``
    and ``kernel``; all other kinds are determined by a and x alone.
    """
    if a.rows != x.rows or a.cols != x.cols:
        if (a.cols, a.rows) != (x.rows, x.cols):
            raise DimensionError("candidate shape fits neither a nor a*")
    checks: list[AxiomCheck]

    if kind is InverseKind.MP:
        checks = [
            _equation("xax=x", x.matmul(a).matmul(x), x),
            _equation("axa=a", a.matmul(x).matmul(a), a),
            _hermitian("(ax)*=ax", a.matmul(x)),
            _hermitian("(xa)*=xa", x.matmul(a)),
        ]
    elif kind is InverseKind.WEAK_MP:
        checks = [
            _equation("x=xax", x.matmul(a).matmul(x), x),
            _hermitian("(ax)*=ax", a.matmul(x)),
            _hermitian("(xa)*=xa", x.matmul(a)),
            _nilpotency("a-axa nilpotent", a - a.matmul(x).matmul(a)),
        ]
    elif kind is InverseKind.GROUP:
        checks = [
            _equation("xax=x", x.matmul(a).matmul(x), x),
            _equation("axa=a", a.matmul(x).matmul(a), a),
            _equation("ax=xa", a.matmul(x), x.matmul(a)),
        ]
    elif kind is InverseKind.DRAZIN:
        _, k = nilpotency_and_index(a)
        checks = [
            _equation("ax=xa", a.matmul(x), x.matmul(a)),
            AxiomCheck(
                "a^(k+1)x=a^k",
                ((a ** (k + 1)).matmul(x) - a**k).is_zero(),
                residual=(a ** (k + 1)).matmul(x) - a**k,
                note=f"index k={k}",
            ),
            _equation("xax=x", x.matmul(a).matmul(x), x),
        ]
    elif kind is InverseKind.HGROUP:
        a2, astar = a.matmul(a), a.h
        checks = [
            _equation("xax=x", x.matmul(a).matmul(x), x),
            _equation("a2xa2=a3", a2.matmul(x).matmul(a2), a2.matmul(a)),
            _hermitian("(a2xa*)*=a2xa*", a2.matmul(x).matmul(astar)),
            _hermitian("(a*xa2)*=a*xa2", astar.matmul(x).matmul(a2)),
            _membership("x in aR", "x_in_aR", x, a),
            _membership("x in Ra", "x_in_Ra", x, a),
        ]
    elif kind is InverseKind.WEAK_HGROUP:
        t = x.matmul(a**3).matmul(x)
        td = mp_inverse(t)
        mp_ok = (
            t.matmul(td).matmul(t) == t
            and td.matmul(t).matmul(td) == td
            and (t.matmul(td)).h == t.matmul(td)
            and (td.matmul(t)).h == td.matmul(t)
        )
        checks = [
            _equation("x=xax", x.matmul(a).matmul(x), x),
            _hermitian("(ax)*=ax", a.matmul(x)),
            _hermitian("(xa)*=xa", x.matmul(a)),
            AxiomCheck(
                "xa3x mp-invertible",
                mp_ok,
                note="Moore-Penrose inverse of xa3x exists and verifies",
            ),
            _nilpotency("a-axa nilpotent", a - a.matmul(x).matmul(a)),
        ]
    elif kind is InverseKind.BC:
        if pair is None:
            raise ValueError("BC verification needs the (b, c) pair")
        b, c = pair.b, pair.c
        checks = [
            _equation("xab=b", x.matmul(a).matmul(b), b),
            _equation("cax=c", c.matmul(a).matmul(x), c),
            _membership("x in bRx", "x_in_bRx", x, b),
            _membership("x in xRc", "x_in_xRc", x, c),
        ]
    elif kind is InverseKind.TWO_PRESCRIBED:
        if image is None or kernel is None:
            raise ValueError("TWO_PRESCRIBED verification needs image and kernel")
        checks = [
            _equation("xax=x", x.matmul(a).matmul(x), x),
            _subspace("im(x)=T", image_of(x), image),
            _subspace("ker(x)=S", kernel_of(x), kernel),
        ]
    else:
        raise ValueError(f"unknown inverse kind {kind!r}")

    return AxiomReport(kind, tuple(checks))


def residual_summary(report: AxiomReport) -> str:
    """Deterministic one-paragraph summary listing only the failed checks."""
    failed = [c for c in report.checks if not c.holds]
    if not failed:
        return f"all {len(report.checks)} checks hold"
    lines = []
    for check in failed:
        if check.witness is not None:
            lines.append(f"FAILED {check.name}: no reconstructing witness")
        elif check.residual is not None:
            body = "; ".join(
                " ".join(scalar_format(e) for e in check.residual.row(i))
                for i in range(check.residual.rows)
            )
            extra = f" ({check.note})" if check.note else ""
            lines.append(f"FAILED {check.name}: residual [{body}]{extra}")
        else:
            extra = f" ({check.note})" if check.note else ""
            lines.append(f"FAILED {check.name}{extra}")
    return "\n".join(lines)
