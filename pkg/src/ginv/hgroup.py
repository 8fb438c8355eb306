"""The higher-order group inverse and its characterizations.

For any square a over Q(i) the matrix x = (a+ a^3 a+)+ satisfies, exactly:

    xax = x,  a^2 x a^2 = a^3,  (a^2 x a*)* = a^2 x a*,  (a* x a^2)* = a* x a^2,

together with x in aR and x in Ra, and it is the unique such x.  The other
operations here recover the same matrix by different routes: as the unique
solution of two projector-constrained linear systems, as a (b,c)-inverse
for b = p_a (a*)^2 and c = (a*)^2 q_a, and as the {2}-inverse with
prescribed image im(b) and kernel ker(c).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionError,
    InconsistentSystemError,
    NoSolutionError,
    NotBcInvertibleError,
    NotTwoInvertibleError,
    VerificationError,
)
from .matrix import (
    Matrix,
    SubspaceDescriptor,
    hstack,
    image_of,
    kernel_of,
    nullspace_basis,
    rank,
    solve_right,
    subspace_relate,
)
from .pinv import mp_inverse
from .verify import InverseKind, check_axioms, residual_summary


def hgroup_inverse(a: Matrix) -> Matrix:
    """(a+ a^3 a+)+, verified against its full defining system before return."""
    if not a.is_square:
        raise DimensionError("higher-order group inverse needs a square matrix")
    ad = mp_inverse(a)
    middle = ad.matmul(a**3).matmul(ad)
    x = mp_inverse(middle)
    report = check_axioms(InverseKind.HGROUP, a, x)
    if not report.overall:
        raise VerificationError(
            "higher-order group inverse failed verification:\n"
            + residual_summary(report)
        )
    return x


@dataclass(frozen=True)
class ConstrainedSolveResult:
    """Solution of a constrained linear system plus a uniqueness certificate.

    ``homogeneous_dimension`` is the exact dimension of the solution set of
    the associated homogeneous system; the solution is unique iff it is 0.
    """

    solution: Matrix
    unique: bool
    homogeneous_dimension: int


def _intersection_dimension(outer: Matrix, inner: Matrix) -> int:
    """dim( ker(outer) /\\ im(inner) ), exactly."""
    kernel_vectors = nullspace_basis(outer.matmul(inner))
    if not kernel_vectors:
        return 0
    return rank(inner.matmul(hstack(*kernel_vectors)))


def solve_ax_system(a: Matrix) -> ConstrainedSolveResult:
    """Solve  a x = a (q a p)+  subject to  im(x) <= im(p a* q).

    p = a a+ and q = a+ a.  The solution is parametrized as x = (p a* q) u;
    the homogeneous freedom is ker(a) /\\ im(p a* q), which is 0 for every
    matrix over Q(i), so the unique solution is the higher-order group
    inverse.
    """
    if not a.is_square:
        raise DimensionError("system is defined for square matrices")
    ad = mp_inverse(a)
    p = a.matmul(ad)
    q = ad.matmul(a)
    middle = q.matmul(a).matmul(p)
    target = a.matmul(mp_inverse(middle))
    basis = p.matmul(a.h).matmul(q)
    try:
        u = solve_right(a.matmul(basis), target)
    except NoSolutionError as exc:
        raise InconsistentSystemError("constrained system has no solution") from exc
    x = basis.matmul(u)
    hom = _intersection_dimension(a, basis)
    return ConstrainedSolveResult(x, hom == 0, hom)


def solve_px_system(a: Matrix) -> ConstrainedSolveResult:
    """Solve  p x = (q a p)+  subject to  im(x) <= im(a).

    Parametrized as x = a v; the homogeneous freedom ker(p) /\\ im(a) is 0
    because ker(a a+) is the orthogonal complement of im(a).
    """
    if not a.is_square:
        raise DimensionError("system is defined for square matrices")
    ad = mp_inverse(a)
    p = a.matmul(ad)
    q = ad.matmul(a)
    target = mp_inverse(q.matmul(a).matmul(p))
    try:
        v = solve_right(p.matmul(a), target)
    except NoSolutionError as exc:
        raise InconsistentSystemError("constrained system has no solution") from exc
    x = a.matmul(v)
    hom = _intersection_dimension(p, a)
    return ConstrainedSolveResult(x, hom == 0, hom)


# -- (b,c)-inverse -----------------------------------------------------------


@dataclass(frozen=True)
class BcPair:
    """The fixed pair of a (b,c)-inverse problem; same ambient size as a."""

    b: Matrix
    c: Matrix


def build_bc_pair(a: Matrix) -> BcPair:
    """b = p_a (a*)^2 and c = (a*)^2 q_a, the pair whose (b,c)-inverse is a^H."""
    if not a.is_square:
        raise DimensionError("pair construction needs a square matrix")
    ad = mp_inverse(a)
    astar2 = a.h.matmul(a.h)
    return BcPair(a.matmul(ad).matmul(astar2), astar2.matmul(ad).matmul(a))


def bc_inverse(a: Matrix, pair: BcPair) -> Matrix:
    """Candidate b (c a b)+ c, returned only if every defining condition holds.

    The conditions are x a b = b, c a x = c, x in bRx and x in xRc, each
    decided exactly; the candidate formula is a heuristic and the
    verification gate is the contract.  A degenerate pair b = c = 0 yields
    x = 0, for which every condition holds vacuously.
    """
    b, c = pair.b, pair.c
    if not (a.is_square and b.shape == a.shape and c.shape == a.shape):
        raise DimensionError("pair members must match the ambient square size")
    candidate = b.matmul(mp_inverse(c.matmul(a).matmul(b))).matmul(c)
    report = check_axioms(InverseKind.BC, a, candidate, pair=pair)
    if not report.overall:
        failed = ", ".join(ch.name for ch in report.checks if not ch.holds)
        raise NotBcInvertibleError(f"candidate failed: {failed}")
    return candidate


def two_inverse_prescribed(
    a: Matrix, image: SubspaceDescriptor, kernel: SubspaceDescriptor
) -> Matrix:
    """{2}-inverse with im(x) = image and ker(x) = kernel, via the (b,c) route."""
    if image.kind != "image" or kernel.kind != "kernel":
        raise ValueError("expected an image descriptor and a kernel descriptor")
    if image.ambient != a.rows or kernel.ambient != a.rows:
        raise DimensionError("descriptors live in the wrong ambient space")
    try:
        x = bc_inverse(a, BcPair(image.generator, kernel.generator))
    except NotBcInvertibleError as exc:
        raise NotTwoInvertibleError(str(exc)) from exc
    if x.matmul(a).matmul(x) != x:
        raise NotTwoInvertibleError("candidate is not a {2}-inverse")
    if not subspace_relate(image_of(x), image, "equals"):
        raise NotTwoInvertibleError("image of the candidate differs from T")
    if not subspace_relate(kernel_of(x), kernel, "equals"):
        raise NotTwoInvertibleError("kernel of the candidate differs from S")
    return x
