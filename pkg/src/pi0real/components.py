"""Component groups of real reductive groups, computed on the torus.

Everything here reduces to lattice arithmetic.  Fix a root datum with
cocharacter lattice X and coroot lattice Q, and a Cartan involution theta.
Write

  X_spl       = X  intersect ker(theta + 1)     split cocharacters
  X_spl_tilde = (1 - theta)/2 . X               projected cocharacters
  Q_spl       = Q  intersect ker(theta + 1)
  Q_cmp       = Q  intersect ker(theta - 1)

Then the group of connected components of the real points is

  pi0 = X_spl / (2 X_spl_tilde + Q_spl),

every class containing an order-at-most-2 torus element exp(pi i nu) with
nu in X_spl, and the first Galois cohomology of the fundamental group is

  H1 = (X intersect (X_spl_tilde + Q_cmp/2)) / (2 X_spl_tilde + Q).

Both quotients are finite elementary abelian 2-groups whenever the input
is an honest Cartan involution; anything else raises ComputationError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .intlattice import (
    Lattice,
    brute_force_quotient,
    identity_matrix,
    image_lattice,
    kernel_lattice,
    lattice_intersect,
    lattice_sum,
    mat_add,
    mat_scale,
    mat_sub,
    mat_vec,
    membership,
    quotient_structure,
    reduce_mod,
    vec_add,
    vec_frac,
)
from .realform import Involution
from .rootdata import RootDatum


class ComputationError(RuntimeError):
    """The computed quotient is not the finite 2-group theory promises.

    Seeing this means the inputs do not describe a Cartan involution of a
    root datum, in a way the up-front validation could not detect.
    """


class SplitLattices(NamedTuple):
    """The four sublattices that control the component group."""

    x_spl: Lattice
    x_spl_tilde: Lattice
    q_spl: Lattice
    q_cmp: Lattice


def split_lattices(rd: RootDatum, inv: Involution) -> SplitLattices:
    n = rd.rank
    theta = inv.theta
    if len(theta) != n:
        raise ValueError(f"involution is {len(theta)} x {len(theta)}, datum has rank {n}")
    plus_one = mat_add(theta, identity_matrix(n))
    minus_one = mat_sub(theta, identity_matrix(n))
    half_proj = mat_scale(mat_sub(identity_matrix(n), theta), Fraction(1, 2))
    return SplitLattices(
        x_spl=kernel_lattice(rd.cochar, plus_one),
        x_spl_tilde=image_lattice(rd.cochar, half_proj),
        q_spl=kernel_lattice(rd.coroots, plus_one),
        q_cmp=kernel_lattice(rd.coroots, minus_one),
    )


@dataclass(frozen=True)
class Elementary2Group:
    """A finite elementary abelian 2-group presented as sup/sub.

    ``generators`` are integer vectors in ``sup`` whose classes form a
    basis over the field with two elements; ``generator_names`` is the
    parallel tuple of preferred labels (None where no named lattice vector
    represents that class).
    """

    rank: int
    order: int
    generators: tuple[tuple[int, ...], ...]
    generator_names: tuple[Optional[str], ...]
    sub: Lattice
    sup: Lattice

    @property
    def quotient_pair(self) -> tuple[Lattice, Lattice]:
        return self.sub, self.sup

    def elements(self) -> tuple[tuple[int, ...], ...]:
        """All group elements as subset sums of the generators, by size.

        The zero vector comes first, then single generators, then pairs,
        and so on; within one size the generator order is respected.
        """
        out = [tuple(0 for _ in range(self.sub.ambient_dim))]
        by_size: list[list[tuple[int, ...]]] = [[] for _ in range(self.rank + 1)]
        for mask in range(1, 2**self.rank):
            total = [0] * self.sub.ambient_dim
            for i in range(self.rank):
                if mask >> i & 1:
                    total = [a + b for a, b in zip(total, self.generators[i])]
            by_size[bin(mask).count("1")].append(tuple(total))
        for bucket in by_size:
            out.extend(bucket)
        return tuple(out)


_GENERATOR_ENUM_LIMIT = 4096


def _as_int_vec(v) -> tuple[int, ...]:
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ComputationError(f"expected an integral representative, got {tuple(v)}")
        out.append(int(x))
    return tuple(out)


def _pick_generators(sub: Lattice, sup: Lattice, raw, named):
    """Choose generators for sup/sub, preferring named lattice vectors.

    ``raw`` is an independent generating set (from the Smith form) and
    ``named`` the datum's (name, vector) pairs in preference order.  When
    the group is small enough we enumerate all cosets, admit named vectors
    first and then the lexicographically smallest canonical residues,
    keeping only classes independent from those already chosen.  For huge
    groups we keep the raw generators and just relabel exact matches.
    """
    k = len(raw)
    if k == 0:
        return (), ()
    named_in = [(nm, vec_frac(v)) for nm, v in named if membership(v, sup)]

    if 2**k <= _GENERATOR_ENUM_LIMIT:
        residues = set()
        for mask in range(1, 2**k):
            total = tuple(Fraction(0) for _ in range(sub.ambient_dim))
            for i in range(k):
                if mask >> i & 1:
                    total = vec_add(total, vec_frac(raw[i]))
            residues.add(reduce_mod(total, sub))
        chosen: list[tuple[int, ...]] = []
        names: list[Optional[str]] = []
        span = {reduce_mod(tuple(Fraction(0) for _ in range(sub.ambient_dim)), sub)}

        def admit(vec, label) -> bool:
            if reduce_mod(vec, sub) in span:
                return False
            span.update(
                {reduce_mod(vec_add(s, vec_frac(vec)), sub) for s in tuple(span)}
            )
            chosen.append(_as_int_vec(vec))
            names.append(label)
            return True

        for nm, v in named_in:
            if len(chosen) == k:
                break
            if reduce_mod(v, sub) in residues:
                admit(v, nm)
        for r in sorted(residues):
            if len(chosen) == k:
                break
            admit(r, None)
        assert len(chosen) == k, "coset enumeration failed to find a basis"
        return tuple(chosen), tuple(names)

    chosen = []
    names = []
    used: set[str] = set()
    for g in raw:
        label = None
        vec = g
        for nm, v in named_in:
            if nm not in used and membership(
                tuple(a - b for a, b in zip(v, vec_frac(g))), sub
            ):
                label, vec = nm, v
                used.add(nm)
                break
        chosen.append(_as_int_vec(vec))
        names.append(label)
    return tuple(chosen), tuple(names)


def _two_group(sub: Lattice, sup: Lattice, named, what: str) -> Elementary2Group:
    qs = quotient_structure(sub, sup)
    if qs.free_rank != 0:
        raise ComputationError(
            f"{what} came out infinite; the involution data is inconsistent"
        )
    if any(d != 2 for d in qs.invariant_factors):
        raise ComputationError(
            f"{what} is not an elementary abelian 2-group: "
            f"invariant factors {qs.invariant_factors}"
        )
    gens, names = _pick_generators(sub, sup, qs.generators, named)
    k = len(qs.invariant_factors)
    return Elementary2Group(
        rank=k, order=2**k, generators=gens, generator_names=names, sub=sub, sup=sup
    )


def pi0(rd: RootDatum, inv: Involution) -> Elementary2Group:
    """The component group of the real points, as X_spl/(2 X_spl_tilde + Q_spl)."""
    sl = split_lattices(rd, inv)
    sub = lattice_sum(sl.x_spl_tilde.scale(2), sl.q_spl)
    return _two_group(sub, sl.x_spl, rd.named_vectors, "component group")


def h1_pi1(rd: RootDatum, inv: Involution) -> Elementary2Group:
    """Galois cohomology of the fundamental group of the complex group.

    Computed as (X intersect (X_spl_tilde + Q_cmp/2)) / (2 X_spl_tilde + Q),
    with classes represented by integral cocharacters.
    """
    sl = split_lattices(rd, inv)
    sup = lattice_intersect(
        rd.cochar, lattice_sum(sl.x_spl_tilde, sl.q_cmp.scale(Fraction(1, 2)))
    )
    sub = lattice_sum(sl.x_spl_tilde.scale(2), rd.coroots)
    return _two_group(sub, sup, rd.named_vectors, "cohomology group")


def cocycle_check(rd: RootDatum, inv: Involution, nu) -> bool:
    """Does exp(pi i nu) define a Galois cocycle valued in the fundamental group?

    The condition is that nu + theta(nu) lands in the compact part of the
    coroot lattice.  ``nu`` must be a cocharacter.
    """
    nu = vec_frac(nu)
    if not membership(nu, rd.cochar):
        raise ValueError(f"{tuple(nu)} is not in the cocharacter lattice")
    sl = split_lattices(rd, inv)
    return membership(vec_add(nu, mat_vec(inv.theta, nu)), sl.q_cmp)


def coboundary_check(rd: RootDatum, inv: Involution, nu) -> bool:
    """Does exp(pi i nu) give the trivial cohomology class?

    True exactly when nu lies in 2 X_spl_tilde + Q.  A vector passing this
    test is automatically a cocycle.
    """
    nu = vec_frac(nu)
    if not membership(nu, rd.cochar):
        raise ValueError(f"{tuple(nu)} is not in the cocharacter lattice")
    sl = split_lattices(rd, inv)
    return membership(nu, lattice_sum(sl.x_spl_tilde.scale(2), rd.coroots))


def kernel_embedding_check(rd: RootDatum, inv: Involution) -> bool:
    """Check that the natural map from pi0 into H1 is injective.

    Both groups are quotients by 2 X_spl_tilde + (part of Q); a split
    cocharacter equals its own projection, so pi0 classes map to H1
    classes by doing nothing to the vector.  Injectivity means no nonzero
    subset sum of pi0 generators becomes trivial in H1.
    """
    p = pi0(rd, inv)
    h = h1_pi1(rd, inv)
    if 2**p.rank > _GENERATOR_ENUM_LIMIT:
        raise ComputationError("component group too large to enumerate")
    zero = reduce_mod(tuple(0 for _ in range(rd.rank)), h.sub)
    for v in p.elements()[1:]:
        if not membership(v, h.sup):
            return False
        if reduce_mod(v, h.sub) == zero:
            return False
    return True


def torus_pi0(rank: int, inv: Involution) -> Elementary2Group:
    """Component group of a real torus: X_spl / 2 X_spl_tilde."""
    rd = RootDatum(
        rank=rank,
        cochar=Lattice.standard(rank),
        coroots=Lattice.zero(rank),
        name=f"torus of rank {rank}",
    )
    return pi0(rd, inv)


_FOURTH_ROOT = ("1", "i", "-1", "-i")


@dataclass(frozen=True)
class Representative:
    """A torus element exp(pi i nu) of order at most 2 in the real group.

    ``evaluations`` lists (label, value) pairs for the datum's display
    weights; values are the fourth roots of unity "1", "i", "-1", "-i".
    ``note`` repeats the datum's lift caveat, if any.
    """

    nu: tuple[int, ...]
    evaluations: tuple[tuple[str, str], ...]
    note: Optional[str]


def representative(rd: RootDatum, inv: Involution, nu) -> Representative:
    """Evaluate the display weights on exp(pi i nu) for a split cocharacter nu."""
    sl = split_lattices(rd, inv)
    nu = vec_frac(nu)
    if not membership(nu, sl.x_spl):
        raise ValueError(
            f"{tuple(nu)} is not a split cocharacter "
            "(need an integral vector with theta(nu) = -nu)"
        )
    nu_int = _as_int_vec(nu)
    evals = []
    for label, w in rd.display_weights:
        h = 2 * sum(Fraction(a) * Fraction(b) for a, b in zip(w, nu_int))
        if h.denominator != 1:
            raise ValueError(
                f"pairing of weight {label!r} with {nu_int} is not half-integral, "
                "so its value at exp(pi i nu) is not a fourth root of unity"
            )
        evals.append((label, _FOURTH_ROOT[int(h) % 4]))
    return Representative(nu=nu_int, evaluations=tuple(evals), note=rd.lift_note)


def oracle_check(group: Elementary2Group, bound: int = 4096) -> bool:
    """Recompute the group order by brute-force coset enumeration.

    Walks the quotient sup/sub directly, with no Smith form involved, and
    compares invariant factors.  Raises BoundExceeded when the quotient
    has more than ``bound`` cosets.
    """
    slow = brute_force_quotient(group.sub, group.sup, bound=bound)
    return slow.invariant_factors == (2,) * group.rank
