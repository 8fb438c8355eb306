"""The weak higher-order group inverse.

The constructive definition used throughout: split a = core + nil along the
canonical core/nilpotent decomposition and take the higher-order group
inverse of the core.  That value always exists, is verified against the
full defining system of the core, and collapses to hgroup_inverse(a) when
the index is at most 1.

The alternative computation route through the weak Moore-Penrose inverse,
x = (w a^3 w)+ with w = (core)+, reproduces the same matrix exactly when
nil * core* = 0 (in particular whenever the index is <= 1, the matrix is
nilpotent, or the two parts are fully orthogonal, as in block-diagonal
sums).  When nil * core* != 0 the two routes can disagree over Q(i)
matrices; weak_hgroup_paths exposes all three values so callers and tests
can compare them, and the system-based operations verify their defining
equations and refuse to return an unverified value.
"""

from __future__ import annotations

from .classical import core_ep_decompose, weak_mp_inverse
from .errors import (
    DimensionError,
    InconsistentSystemError,
    PreconditionViolatedError,
    VerificationError,
)
from .hgroup import ConstrainedSolveResult, hgroup_inverse
from .matrix import Matrix, ideal_membership
from .pinv import mp_inverse


def weak_hgroup_inverse(a: Matrix) -> Matrix:
    """Higher-order group inverse of the core part of a."""
    if not a.is_square:
        raise DimensionError("weak higher-order group inverse needs a square matrix")
    return hgroup_inverse(core_ep_decompose(a).core)


def weak_hgroup_paths(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """The three computation routes, for exact cross-checking.

    (core^H,  (w a^3 w)+ with w = weak MP inverse,  (core+ core^3 core+)+).
    The first and third agree for every square a; the second agrees exactly
    on the aligned class nil * core* = 0.
    """
    d = core_ep_decompose(a)
    core_d = mp_inverse(d.core)
    via_core = hgroup_inverse(d.core)
    w = core_d
    via_weak_mp = mp_inverse(w.matmul(a**3).matmul(w))
    via_formula = mp_inverse(core_d.matmul(d.core**3).matmul(core_d))
    return via_core, via_weak_mp, via_formula


def weak_hgroup_via_system(a: Matrix) -> Matrix:
    """x = (w a^3 w)+ verified against its defining system, w the weak MP inverse.

    The system: x in (aw)R and x in R(wa), x a x = x, (a^2 x a^2) w = a^3 w,
    (a^2 x a*)* = a^2 x a*, (a* x a^2)* = a* x a^2.  Every condition is
    checked exactly; on the non-aligned inputs where the formula value
    fails the system, VerificationError names the first failed condition.
    """
    if not a.is_square:
        raise DimensionError("system is defined for square matrices")
    w = weak_mp_inverse(a)
    x = mp_inverse(w.matmul(a**3).matmul(w))
    a2, astar = a.matmul(a), a.h
    conditions = (
        ("x in (aw)R", ideal_membership("x_in_aR", x, a.matmul(w)).holds),
        ("x in R(wa)", ideal_membership("x_in_Ra", x, w.matmul(a)).holds),
        ("xax=x", x.matmul(a).matmul(x) == x),
        (
            "(a2xa2)w=a3w",
            a2.matmul(x).matmul(a2).matmul(w) == (a**3).matmul(w),
        ),
        ("(a2xa*)*=a2xa*", a2.matmul(x).matmul(astar).h == a2.matmul(x).matmul(astar)),
        ("(a*xa2)*=a*xa2", astar.matmul(x).matmul(a2).h == astar.matmul(x).matmul(a2)),
    )
    for name, ok in conditions:
        if not ok:
            raise VerificationError(f"weak system value failed {name}")
    return x


def solve_two_sided_system(a: Matrix) -> ConstrainedSolveResult:
    """Solve  x a x = x,  x a = m+ a,  a x = a m+  with m = w a^3 w.

    Uniqueness is constructive: any solution satisfies
    x = (x a) x = (m+ a) x = m+ (a x) = m+ a m+, so the system has at most
    one solution.  The certificate m+ a m+ = m+ makes m+ that solution;
    when it fails, the fallback candidate m+ a m+ is tested and the system
    is reported inconsistent if it fails too.
    """
    if not a.is_square:
        raise DimensionError("system is defined for square matrices")
    w = weak_mp_inverse(a)
    md = mp_inverse(w.matmul(a**3).matmul(w))
    if md.matmul(a).matmul(md) == md:
        return ConstrainedSolveResult(md, True, 0)
    candidate = md.matmul(a).matmul(md)
    if (
        candidate.matmul(a).matmul(candidate) == candidate
        and candidate.matmul(a) == md.matmul(a)
        and a.matmul(candidate) == a.matmul(md)
    ):
        return ConstrainedSolveResult(candidate, True, 0)
    raise InconsistentSystemError(
        "the two-sided system has no solution: m+ a m+ != m+"
    )


def orthogonal_sum(a: Matrix, b: Matrix) -> Matrix:
    """(a+b)^ weak-H for a pair with ab = ba = a*b = b*a = 0.

    Returns weak_hgroup_inverse(a) + weak_hgroup_inverse(b) after checking
    every orthogonality product exactly and verifying that the sum equals
    weak_hgroup_inverse(a+b).
    """
    if a.shape != b.shape or not a.is_square:
        raise DimensionError("orthogonal sum needs square matrices of equal size")
    products = (
        ("ab != 0", a.matmul(b)),
        ("ba != 0", b.matmul(a)),
        ("adj(a) b != 0", a.h.matmul(b)),
        ("adj(b) a != 0", b.h.matmul(a)),
    )
    for name, value in products:
        if not value.is_zero():
            raise PreconditionViolatedError(name)
    total = weak_hgroup_inverse(a) + weak_hgroup_inverse(b)
    if total != weak_hgroup_inverse(a + b):
        raise VerificationError(
            "sum of the weak inverses does not equal the weak inverse of the sum"
        )
    return total
