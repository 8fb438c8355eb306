"""Group inverse, Drazin inverse, core/nilpotent decomposition, weak MP inverse.

The decomposition splits a square matrix along the orthogonal projector P
onto im(a^k), k the rank-stabilization index: core = P a carries all the
invertible spectral structure (it has index <= 1) and nil = (I-P) a is
nilpotent, with core* nil = 0 and nil core = 0 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionError,
    NotGroupInvertibleError,
    SingularMatrixError,
    VerificationError,
)
from .matrix import (
    Matrix,
    full_rank_factorize,
    invert,
    nilpotency_and_index,
    rank,
)
from .pinv import mp_inverse


def group_inverse(a: Matrix) -> Matrix:
    """The commuting reflexive inverse; exists iff rank(a) = rank(a^2)."""
    if not a.is_square:
        raise DimensionError("group inverse is defined for square matrices")
    frf = full_rank_factorize(a)
    gf = frf.g.matmul(frf.f)
    try:
        middle = invert(gf)
    except SingularMatrixError:
        raise NotGroupInvertibleError(
            f"rank(a^2) = {rank(a.matmul(a))} < rank(a) = {frf.rank}"
        ) from None
    x = frf.f.matmul(middle).matmul(middle).matmul(frf.g)
    for name, lhs, rhs in (
        ("xax=x", x.matmul(a).matmul(x), x),
        ("axa=a", a.matmul(x).matmul(a), a),
        ("ax=xa", a.matmul(x), x.matmul(a)),
    ):
        if lhs != rhs:
            raise VerificationError(f"group inverse failed {name}")
    return x


def drazin_inverse(a: Matrix) -> Matrix:
    """a^D = a^k (a^(2k+1))+ a^k with k the index; verified before returning."""
    if not a.is_square:
        raise DimensionError("Drazin inverse is defined for square matrices")
    _, k = nilpotency_and_index(a)
    ak = a**k
    x = ak.matmul(mp_inverse(a ** (2 * k + 1))).matmul(ak)
    for name, lhs, rhs in (
        ("ax=xa", a.matmul(x), x.matmul(a)),
        ("a^(k+1)x=a^k", (a ** (k + 1)).matmul(x), ak),
        ("xax=x", x.matmul(a).matmul(x), x),
    ):
        if lhs != rhs:
            raise VerificationError(f"Drazin inverse failed {name}")
    return x


@dataclass(frozen=True)
class CoreEpDecomposition:
    """a = core + nil with core* nil = 0, nil core = 0, nil nilpotent.

    ``projector`` is the Hermitian idempotent P = a^k (a^k)+ onto im(a^k)
    and core = P a has index <= 1.
    """

    core: Matrix
    nil: Matrix
    index: int
    projector: Matrix


def core_ep_decompose(a: Matrix) -> CoreEpDecomposition:
    if not a.is_square:
        raise DimensionError("decomposition is defined for square matrices")
    _, k = nilpotency_and_index(a)
    ak = a**k
    projector = ak.matmul(mp_inverse(ak))
    core = projector.matmul(a)
    nil = a - core
    _verify_decomposition(a, core, nil, k, projector)
    return CoreEpDecomposition(core, nil, k, projector)


def _verify_decomposition(a, core, nil, k, projector):
    checks = (
        ("core+nil=a", core + nil == a),
        ("core* nil=0", core.h.matmul(nil).is_zero()),
        ("nil core=0", nil.matmul(core).is_zero()),
        ("nil nilpotent", (nil ** max(k, 1)).is_zero()),
        ("rank(core^2)=rank(core)", rank(core.matmul(core)) == rank(core)),
        ("P hermitian", projector.h == projector),
        ("P idempotent", projector.matmul(projector) == projector),
    )
    for name, ok in checks:
        if not ok:
            raise VerificationError(f"core/nilpotent decomposition failed {name}")


def weak_mp_inverse(a: Matrix) -> Matrix:
    """The Moore-Penrose inverse of the core part of the decomposition.

    For index <= 1 this is exactly mp_inverse(a).  Note that the weak-MP
    equation system does not pin this value down uniquely over Q(i)
    matrices (a+ satisfies the same system whenever it differs), so the
    constructive definition via the canonical decomposition is the one
    implemented throughout.
    """
    return mp_inverse(core_ep_decompose(a).core)
