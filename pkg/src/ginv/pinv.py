"""Moore-Penrose inverse over Q(i) and the associated orthogonal projectors.

Existence never fails here: for any full-rank factorization a = f*g over
Q(i) the Gram matrices f*f and g g* are invertible because the scalar norm
re^2 + im^2 is positive definite.  A singular Gram matrix therefore means
a bug, not a bad input, and is raised as VerificationError.
"""

from __future__ import annotations

from .errors import DimensionError, SingularMatrixError, VerificationError
from .matrix import Matrix, full_rank_factorize, invert


def mp_inverse(a: Matrix) -> Matrix:
    """The unique x with xax=x, axa=a, (ax)* = ax, (xa)* = xa."""
    frf = full_rank_factorize(a)
    f, g = frf.f, frf.g
    try:
        gram_g = invert(g.matmul(g.h))
        gram_f = invert(f.h.matmul(f))
    except SingularMatrixError as exc:
        raise VerificationError(
            "Gram matrix of a full-rank factor is singular; "
            "norm positivity of Q(i) is violated"
        ) from exc
    return g.h.matmul(gram_g).matmul(gram_f).matmul(f.h)


def image_projector(a: Matrix) -> Matrix:
    """p_a = a a+, the Hermitian idempotent with im(p_a) = im(a)."""
    if not a.is_square:
        raise DimensionError("image projector is defined for square matrices")
    return a.matmul(mp_inverse(a))


def coimage_projector(a: Matrix) -> Matrix:
    """q_a = a+ a, the Hermitian idempotent with im(q_a) = im(a*)."""
    if not a.is_square:
        raise DimensionError("coimage projector is defined for square matrices")
    return mp_inverse(a).matmul(a)
