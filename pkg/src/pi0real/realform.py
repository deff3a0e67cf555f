"""Cartan involutions on the cocharacter lattice, and ways to build them.

A real form enters the computation only through the integer matrix by which
the Cartan involution acts on cocharacters.  This module validates such
matrices against a root datum (involutive, preserves the coroots) and builds
them from eigenspace data or from named presets for the real forms of
adjoint E7.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .intlattice import (
    IntMatrix,
    Lattice,
    as_int_matrix,
    block_diag,
    identity_matrix,
    image_lattice,
    mat_mul,
    mat_vec,
    rat_inverse,
    rat_rank,
    rational_right_kernel,
    transpose,
    vec_frac,
)
from .rootdata import RootDatum, e7_adjoint


class InvolutionError(ValueError):
    """Raised when a purported Cartan involution fails validation."""


@dataclass(frozen=True)
class Involution:
    """An order-2 integer matrix acting on the cocharacter lattice.

    The matrix acts on column vectors; ``name`` is free-form and only used
    in printed output.
    """

    theta: IntMatrix
    name: str = ""


def involution_from_matrix(rd: RootDatum, theta, name: str = "") -> Involution:
    """Validate an integer matrix as a Cartan involution for ``rd``."""
    n = rd.rank
    try:
        theta = as_int_matrix(theta, ncols=n)
    except ValueError as exc:
        raise InvolutionError(f"bad involution matrix: {exc}") from exc
    if len(theta) != n:
        raise InvolutionError(f"involution matrix must be {n} x {n}")
    if mat_mul(theta, theta) != identity_matrix(n):
        raise InvolutionError("matrix is not an involution")
    if image_lattice(rd.coroots, theta) != rd.coroots:
        raise InvolutionError("involution does not preserve the coroot lattice")
    if rd.coroot_generators:
        coroot_set = set(rd.coroot_generators)
        for c in rd.coroot_generators:
            image = tuple(int(x) for x in mat_vec(theta, c))
            if image not in coroot_set:
                raise InvolutionError(
                    f"involution does not normalize the coroot set: "
                    f"theta({c}) = {image} is not a coroot"
                )
    return Involution(theta=theta, name=name)


def involution_from_eigenspaces(
    rd: RootDatum,
    split_span: Sequence[Sequence],
    compact_span: Sequence[Sequence],
    name: str = "",
) -> Involution:
    """Build the involution with the given -1 and +1 eigenspaces.

    Each span is a sequence of linearly independent rational vectors;
    together they must form a basis of the ambient space.  The resulting
    matrix has to be integral on the cocharacter lattice, which is a real
    condition on the spans and is checked here.
    """
    n = rd.rank
    split = [vec_frac(v) for v in split_span]
    compact = [vec_frac(v) for v in compact_span]
    for v in split + compact:
        if len(v) != n:
            raise InvolutionError(f"eigenvector {v} has wrong length, expected {n}")
    if rat_rank(split) != len(split) or rat_rank(compact) != len(compact):
        raise InvolutionError("eigenspace spans contain dependent vectors")
    stacked = tuple(split + compact)
    if len(stacked) != n or rat_rank(stacked) != n:
        raise InvolutionError("eigenspace spans are not complementary")
    mt = transpose(stacked)
    signs = [-1] * len(split) + [1] * len(compact)
    scaled = tuple(
        tuple(Fraction(signs[j]) * mt[i][j] for j in range(n)) for i in range(n)
    )
    theta_frac = mat_mul(scaled, rat_inverse(mt))
    rows = []
    for row in theta_frac:
        if any(x.denominator != 1 for x in row):
            raise InvolutionError(
                "involution with these eigenspaces is not integral "
                "on the cocharacter lattice"
            )
        rows.append(tuple(int(x) for x in row))
    return involution_from_matrix(rd, tuple(rows), name=name)


def product_involution(a: Involution, b: Involution, name: str = "") -> Involution:
    """Block-diagonal involution on a product root datum."""
    return Involution(
        theta=block_diag(a.theta, b.theta),
        name=name or " x ".join(s for s in (a.name, b.name) if s),
    )


# ---------------------------------------------------------------------------
# the real forms of adjoint E7

_E7_SPLIT_SPANS = {
    # split Cartan subalgebra spanned inside the coweight coordinates;
    # None means theta = -identity (the split form EV).
    "EV": None,
    "EVI": ("w2", "w4", "w5", "w6"),
    "EVII": ("w1", "w2", "w6"),
}

_E7_COMPACT_SPANS = {
    # EVII's compact part is spanned by coroots; EVI's is recovered as the
    # orthogonal complement of the split part under the invariant form.
    "EVII": ("a3", "a4", "a5", "a7"),
}


def e7_preset(form: str) -> tuple[RootDatum, Involution]:
    """Adjoint E7 with the involution of one of its real forms EV, EVI, EVII."""
    key = form.upper().strip()
    if key not in _E7_SPLIT_SPANS:
        raise InvolutionError(
            f"unknown E7 real form {form!r}; choose EV, EVI, or EVII"
        )
    rd, gram = e7_adjoint()
    if _E7_SPLIT_SPANS[key] is None:
        theta = tuple(tuple(-x for x in row) for row in identity_matrix(rd.rank))
        return rd, involution_from_matrix(rd, theta, name=key)
    named = dict(rd.named_vectors)
    split = [vec_frac(named[nm]) for nm in _E7_SPLIT_SPANS[key]]
    if key in _E7_COMPACT_SPANS:
        compact = [vec_frac(named[nm]) for nm in _E7_COMPACT_SPANS[key]]
    else:
        constraints = tuple(mat_vec(gram, s) for s in split)
        compact = list(rational_right_kernel(constraints, rd.rank))
    return rd, involution_from_eigenspaces(rd, split, compact, name=key)
