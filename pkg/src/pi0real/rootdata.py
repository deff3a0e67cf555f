"""Root data for connected reductive groups, presented on the cocharacter lattice.

A :class:`RootDatum` packages exactly what the component-group computation
consumes: the cocharacter lattice (always the standard lattice of its rank,
in coordinates of our choosing), the coroot lattice sitting inside it, a
finite symmetric set of coroots generating that lattice, and optional
bookkeeping for printing results (weights to evaluate on torus elements,
preferred names for distinguished lattice vectors).

Builders are provided for the standard families: GL(n), SO(p,q), PSO(p,q),
split/compact/Weil-restriction tori, and simply connected or adjoint simple
groups of each Cartan type.  The adjoint E7 builder carries extra structure
(an invariant form on the coweight basis) needed to pin down real forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .intlattice import (
    IntMatrix,
    Lattice,
    Vector,
    as_int_matrix,
    identity_matrix,
    lattice_index,
    mat_mul,
    mat_vec,
    membership,
    rat_inverse,
    transpose,
    vec_frac,
)


class PresetError(ValueError):
    """Raised when a preset name or its parameters are invalid."""


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def _neg(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def _intify(v: Sequence[Fraction]) -> tuple[int, ...]:
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise PresetError(f"expected an integer vector, got {tuple(v)}")
        out.append(int(x))
    return tuple(out)


# ---------------------------------------------------------------------------
# the datum itself


@dataclass(frozen=True)
class RootDatum:
    """Cocharacter lattice, coroot lattice, and printing metadata.

    ``cochar`` is always the standard lattice Z^rank; the interesting data
    is which vectors are coroots and how the user wants elements displayed.

    ``display_weights`` are pairs (label, weight) of characters evaluated on
    torus representatives; a weight is a covector, stored as a plain tuple in
    the coordinates dual to ``cochar``.  ``named_vectors`` are pairs
    (name, vector) of distinguished cocharacters, in order of preference when
    relabelling computed generators.  ``lift_note`` is attached verbatim to
    printed representatives when the matrix realization is only defined up to
    a choice (e.g. a double cover).
    """

    rank: int
    cochar: Lattice
    coroots: Lattice
    coroot_generators: tuple[tuple[int, ...], ...] = ()
    display_weights: tuple[tuple[str, tuple], ...] = ()
    named_vectors: tuple[tuple[str, tuple[int, ...]], ...] = ()
    name: str = ""
    lift_note: Optional[str] = None

    def validate(self) -> tuple[str, ...]:
        """Return a tuple of human-readable diagnostics; empty means valid."""
        bad = []
        n = self.rank
        if n < 0:
            bad.append("rank is negative")
        cochar_ok = self.cochar.ambient_dim == n
        if not cochar_ok:
            bad.append("cocharacter lattice has wrong ambient dimension")
        elif self.cochar != Lattice.standard(n):
            bad.append("cocharacter lattice is not the standard lattice")
        coroots_ok = self.coroots.ambient_dim == n
        if not coroots_ok:
            bad.append("coroot lattice has wrong ambient dimension")
        elif cochar_ok:
            for v in self.coroots.vectors():
                if not membership(v, self.cochar):
                    bad.append("coroot lattice is not contained in the cocharacter lattice")
                    break
        seen = set(self.coroot_generators)
        for c in self.coroot_generators:
            if len(c) != n:
                bad.append(f"coroot {c} has wrong length")
                continue
            if cochar_ok and not membership(c, self.cochar):
                bad.append(f"coroot {c} not in cocharacter lattice")
            if coroots_ok and not membership(c, self.coroots):
                bad.append(f"coroot {c} does not lie in the coroot lattice")
            if _neg(c) not in seen:
                bad.append(f"coroot set is not symmetric: missing {_neg(c)}")
        if coroots_ok and (self.coroot_generators or not self.coroots.is_zero):
            good_gens = [c for c in self.coroot_generators if len(c) == n]
            span = (
                Lattice.from_vectors(n, good_gens)
                if good_gens
                else Lattice.zero(n)
            )
            if span != self.coroots:
                bad.append("coroots listed do not generate the coroot lattice")
        for label, w in self.display_weights:
            if len(w) != n:
                bad.append(f"display weight {label!r} has wrong length")
        for name, v in self.named_vectors:
            if len(v) != n:
                bad.append(f"named vector {name!r} has wrong length")
            elif cochar_ok and not membership(v, self.cochar):
                bad.append(f"named vector {name!r} is not in the cocharacter lattice")
        return tuple(bad)


def product(a: RootDatum, b: RootDatum) -> RootDatum:
    """Direct product of two root data, concatenating coordinates."""
    if a.rank == 0:
        return b
    if b.rank == 0:
        return a
    n = a.rank + b.rank

    def left(v):
        return tuple(v) + (0,) * b.rank

    def right(v):
        return (0,) * a.rank + tuple(v)

    gens = tuple(left(c) for c in a.coroot_generators) + tuple(
        right(c) for c in b.coroot_generators
    )
    coroots = Lattice.from_vectors(
        n,
        [left(v) for v in a.coroots.vectors()] + [right(v) for v in b.coroots.vectors()],
    )
    weights = tuple((lbl, left(w)) for lbl, w in a.display_weights) + tuple(
        (lbl, right(w)) for lbl, w in b.display_weights
    )
    named = list((nm, left(v)) for nm, v in a.named_vectors)
    taken = {nm for nm, _ in named}
    for nm, v in b.named_vectors:
        if nm not in taken:
            named.append((nm, right(v)))
            taken.add(nm)
    name = " x ".join(s for s in (a.name, b.name) if s)
    return RootDatum(
        rank=n,
        cochar=Lattice.standard(n),
        coroots=coroots,
        coroot_generators=gens,
        display_weights=weights,
        named_vectors=tuple(named),
        name=name,
        lift_note=a.lift_note or b.lift_note,
    )


# ---------------------------------------------------------------------------
# classical families


def gl(n: int) -> tuple[RootDatum, IntMatrix]:
    """GL(n, R): cocharacters Z^n, coroots e_i - e_j, split involution."""
    if n < 1:
        raise PresetError("GL(n) needs n >= 1")
    gens = tuple(
        tuple(a - b for a, b in zip(_unit(n, i), _unit(n, j)))
        for i in range(n)
        for j in range(n)
        if i != j
    )
    rd = RootDatum(
        rank=n,
        cochar=Lattice.standard(n),
        coroots=Lattice.from_vectors(n, gens) if gens else Lattice.zero(n),
        coroot_generators=gens,
        display_weights=tuple((f"eps{i + 1}", _unit(n, i)) for i in range(n)),
        named_vectors=tuple((f"e{i + 1}", _unit(n, i)) for i in range(n)),
        name=f"GL({n})",
    )
    theta = tuple(tuple(-x for x in row) for row in identity_matrix(n))
    return rd, theta


def _normalize_signature(p: int, q: int) -> tuple[int, int]:
    if p < 0 or q < 0:
        raise PresetError("signature entries must be nonnegative")
    return (p, q) if p <= q else (q, p)


def _so_like_display(p: int, q: int, embed) -> tuple[tuple[str, tuple], ...]:
    """Diagonal entries of the standard torus of SO(p,q), as weights.

    Position j of the diagonal carries eps_j for j <= p, the constant 1
    for the middle positions of an odd group, and -eps_{n+1-j} at the end.
    ``embed`` maps an eps-coordinate covector to internal coordinates.
    """
    n = p + q
    ell = n // 2
    out = []
    for j in range(1, n + 1):
        if j <= p:
            out.append((f"eps{j}", embed(_unit(ell, j - 1))))
        elif j <= q:
            out.append(("0", embed((0,) * ell)))
        else:
            out.append((f"-eps{n + 1 - j}", embed(_neg(_unit(ell, n - j)))))
    return tuple(out)


def so(p: int, q: int) -> tuple[RootDatum, IntMatrix]:
    """SO(p,q): type B or D datum with theta = -1 on the first p axes."""
    p, q = _normalize_signature(p, q)
    n = p + q
    if n < 3:
        raise PresetError("SO(p,q) needs p + q >= 3")
    ell = n // 2
    gens = []
    for i, j in itertools.combinations(range(ell), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            gens.append(
                tuple(
                    si * a + sj * b for a, b in zip(_unit(ell, i), _unit(ell, j))
                )
            )
    if n % 2 == 1:
        for i in range(ell):
            gens.append(tuple(2 * x for x in _unit(ell, i)))
            gens.append(tuple(-2 * x for x in _unit(ell, i)))
    gens = tuple(dict.fromkeys(gens))
    rd = RootDatum(
        rank=ell,
        cochar=Lattice.standard(ell),
        coroots=Lattice.from_vectors(ell, gens) if gens else Lattice.zero(ell),
        coroot_generators=gens,
        display_weights=_so_like_display(p, q, lambda w: tuple(w)),
        named_vectors=tuple((f"e{i + 1}", _unit(ell, i)) for i in range(ell)),
        name=f"SO({p},{q})",
    )
    theta = tuple(
        tuple((-1 if i < p else 1) if i == j else 0 for j in range(ell))
        for i in range(ell)
    )
    return rd, theta


def pso(p: int, q: int) -> tuple[RootDatum, IntMatrix]:
    """PSO(p,q) for p+q even: the adjoint quotient of SO(p,q).

    The cocharacter lattice is Z^ell in the basis
    e_1, ..., e_{ell-1}, w_ell  where w_ell = (e_1 + ... + e_ell)/2 in the
    eps-coordinates of SO; everything from the SO presentation is converted
    into that basis, so the datum again lives on the standard lattice.
    """
    p, q = _normalize_signature(p, q)
    n = p + q
    if n < 4 or n % 2 != 0:
        raise PresetError("PSO(p,q) needs p + q even and at least 4")
    ell = n // 2
    basis = [vec_frac(_unit(ell, i)) for i in range(ell - 1)]
    basis.append(tuple(Fraction(1, 2) for _ in range(ell)))
    pmat = tuple(basis)
    inv_pt = rat_inverse(transpose(pmat))

    def conv_vec(v) -> tuple[int, ...]:
        return _intify(mat_vec(inv_pt, vec_frac(v)))

    def conv_weight(lmbda) -> tuple:
        out = mat_vec(pmat, vec_frac(lmbda))
        return tuple(int(x) if x.denominator == 1 else x for x in out)

    gens = []
    for i, j in itertools.combinations(range(ell), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            gens.append(
                conv_vec(
                    tuple(
                        si * a + sj * b
                        for a, b in zip(_unit(ell, i), _unit(ell, j))
                    )
                )
            )
    gens = tuple(dict.fromkeys(gens))
    named = [(f"e{i + 1}", conv_vec(_unit(ell, i))) for i in range(ell)]
    named.append((f"w{ell}", _unit(ell, ell - 1)))
    rd = RootDatum(
        rank=ell,
        cochar=Lattice.standard(ell),
        coroots=Lattice.from_vectors(ell, gens),
        coroot_generators=gens,
        display_weights=_so_like_display(p, q, conv_weight),
        named_vectors=tuple(named),
        name=f"PSO({p},{q})",
        lift_note="matrix entries fixed only up to a global sign",
    )
    theta_eps = tuple(
        tuple((-1 if i < p else 1) if i == j else 0 for j in range(ell))
        for i in range(ell)
    )
    theta_frac = mat_mul(mat_mul(inv_pt, theta_eps), transpose(pmat))
    theta = as_int_matrix([_intify(row) for row in theta_frac])
    return rd, theta


# ---------------------------------------------------------------------------
# tori


def torus_split(n: int) -> tuple[RootDatum, IntMatrix]:
    if n < 0:
        raise PresetError("torus rank must be nonnegative")
    rd = RootDatum(
        rank=n,
        cochar=Lattice.standard(n),
        coroots=Lattice.zero(n),
        display_weights=tuple((f"eps{i + 1}", _unit(n, i)) for i in range(n)),
        named_vectors=tuple((f"e{i + 1}", _unit(n, i)) for i in range(n)),
        name=f"split torus of rank {n}",
    )
    theta = tuple(tuple(-x for x in row) for row in identity_matrix(n))
    return rd, theta


def torus_compact(n: int) -> tuple[RootDatum, IntMatrix]:
    if n < 0:
        raise PresetError("torus rank must be nonnegative")
    rd = RootDatum(
        rank=n,
        cochar=Lattice.standard(n),
        coroots=Lattice.zero(n),
        display_weights=tuple((f"eps{i + 1}", _unit(n, i)) for i in range(n)),
        named_vectors=tuple((f"e{i + 1}", _unit(n, i)) for i in range(n)),
        name=f"compact torus of rank {n}",
    )
    return rd, identity_matrix(n)


def torus_weil() -> tuple[RootDatum, IntMatrix]:
    """The real torus with complex points C* x C* and Galois swapping factors.

    Its real points form a single copy of C*, which is connected; theta is
    the negated swap on the rank-2 cocharacter lattice.
    """
    rd = RootDatum(
        rank=2,
        cochar=Lattice.standard(2),
        coroots=Lattice.zero(2),
        named_vectors=(("e1", (1, 0)), ("e2", (0, 1))),
        name="Weil restriction of C*",
    )
    return rd, ((0, -1), (-1, 0))


# ---------------------------------------------------------------------------
# simple groups from Cartan matrices


_CHAIN_TYPES = "ABCD"


def cartan_matrix(cartan_type: str, rank: int) -> IntMatrix:
    """Integer Cartan matrix C[i][j] = <alpha_i, alpha_j-check>, Bourbaki order."""
    t = cartan_type.upper()
    n = rank
    if t == "A" and n >= 1:
        pairs = [(i, i + 1) for i in range(n - 1)]
        special = {}
    elif t == "B" and n >= 2:
        pairs = [(i, i + 1) for i in range(n - 1)]
        special = {(n - 2, n - 1): -2}
    elif t == "C" and n >= 2:
        pairs = [(i, i + 1) for i in range(n - 1)]
        special = {(n - 1, n - 2): -2}
    elif t == "D" and n >= 3:
        pairs = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        special = {}
    elif t == "E" and n in (6, 7, 8):
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        pairs = list(zip(chain, chain[1:])) + [(1, 3)]
        special = {}
    elif t == "F" and n == 4:
        pairs = [(0, 1), (1, 2), (2, 3)]
        special = {(1, 2): -2}
    elif t == "G" and n == 2:
        pairs = [(0, 1)]
        special = {(1, 0): -3}
    else:
        raise PresetError(f"no simple group of type {cartan_type}{rank}")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in pairs:
        c[i][j] = c[j][i] = -1
    for (i, j), v in special.items():
        c[i][j] = v
    return as_int_matrix(c)


def _coroot_closure(cartan: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """All coroots, as integer coordinate vectors over the simple coroots.

    Orbit of the simple coroots under the simple reflections; the reflection
    s_j sends a coordinate vector c to c - (sum_i C[j][i] c_i) e_j.
    """
    n = len(cartan)
    frontier = {_unit(n, i) for i in range(n)} | {_neg(_unit(n, i)) for i in range(n)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for c in frontier:
            for j in range(n):
                pairing = sum(cartan[j][i] * c[i] for i in range(n))
                image = list(c)
                image[j] -= pairing
                image = tuple(image)
                if image not in seen:
                    seen.add(image)
                    nxt.add(image)
        frontier = nxt
    return tuple(sorted(seen))


def simple(
    cartan_type: str, rank: int, isogeny: str, real: Optional[str]
) -> tuple[RootDatum, Optional[IntMatrix]]:
    """Simply connected or adjoint simple group, optionally split or compact.

    In the simply connected case the cocharacter lattice is spanned by the
    simple coroots; in the adjoint case by the fundamental coweights, so a
    coroot with simple-coroot coordinates c becomes the vector C.c.
    """
    if isogeny == "adjoint":
        isogeny = "adj"
    if isogeny not in ("sc", "adj"):
        raise PresetError(f"isogeny must be 'sc' or 'adj', not {isogeny!r}")
    if real not in (None, "split", "compact"):
        raise PresetError(f"real form must be 'split' or 'compact', not {real!r}")
    cartan = cartan_matrix(cartan_type, rank)
    n = rank
    coords = _coroot_closure(cartan)
    if isogeny == "sc":
        vecs = coords
        named = tuple((f"a{i + 1}", _unit(n, i)) for i in range(n))
    else:
        vecs = tuple(mat_vec(cartan, c) for c in coords)
        vecs = tuple(tuple(int(x) for x in v) for v in vecs)
        named = tuple((f"w{i + 1}", _unit(n, i)) for i in range(n)) + tuple(
            (f"a{i + 1}", tuple(int(cartan[k][i]) for k in range(n)))
            for i in range(n)
        )
    rd = RootDatum(
        rank=n,
        cochar=Lattice.standard(n),
        coroots=Lattice.from_vectors(n, vecs),
        coroot_generators=vecs,
        named_vectors=named,
        name=f"{cartan_type.upper()}{rank} ({isogeny})",
    )
    if real is None:
        return rd, None
    if real == "split":
        theta = tuple(tuple(-x for x in row) for row in identity_matrix(n))
    else:
        theta = identity_matrix(n)
    return rd, theta


# ---------------------------------------------------------------------------
# adjoint E7 in the coordinates used for its exceptional real forms


def e7_adjoint() -> tuple[RootDatum, tuple[tuple[Fraction, ...], ...]]:
    """Adjoint E7 with its invariant form on the fundamental coweight basis.

    Built from an 8-coordinate model: the simple coroots are differences
    e_i - e_{i+1} (i = 1..6) together with e_5 + e_6 + e_7 + e_8, read modulo
    the all-ones vector, and the pairing is the dot product corrected by the
    trace term.  Internal coordinates are the coweight coordinates, i.e. the
    values of that pairing against the simple coroots, so the cocharacter
    lattice is again standard.  Returns the datum and the Gram matrix of the
    form on the coweight basis (needed to cut out orthogonal complements
    when specifying real forms by a split part only).
    """

    def form8(u, v):
        dot = sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))
        return dot - Fraction(sum(u)) * Fraction(sum(v)) / 8

    def u8(i):
        return _unit(8, i)

    a8 = [
        tuple(a - b for a, b in zip(u8(i), u8(i + 1))) for i in range(6)
    ]
    a8.append(tuple(a + b + c + d for a, b, c, d in zip(u8(4), u8(5), u8(6), u8(7))))

    w8 = []
    for i in range(1, 7):
        v = [1] * i + [0] * (8 - i)
        v[7] = min(i, 8 - i)
        w8.append(tuple(v))
    w8.append(tuple(2 * x for x in u8(7)))

    for i in range(7):
        for j in range(7):
            assert form8(w8[i], a8[j]) == (1 if i == j else 0)

    def to_int(v8) -> tuple[int, ...]:
        return _intify(tuple(form8(v8, a8[j]) for j in range(7)))

    coroot8 = [
        tuple(a - b for a, b in zip(u8(i), u8(j)))
        for i in range(8)
        for j in range(8)
        if i != j
    ]
    for s in itertools.combinations(range(8), 4):
        coroot8.append(tuple(1 if i in s else 0 for i in range(8)))
    gens = tuple(sorted({to_int(v) for v in coroot8}))
    assert len(gens) == 126

    gram = tuple(tuple(form8(w8[i], w8[j]) for j in range(7)) for i in range(7))
    named = tuple((f"w{i + 1}", _unit(7, i)) for i in range(7)) + tuple(
        (f"a{i + 1}", to_int(a8[i])) for i in range(7)
    )
    rd = RootDatum(
        rank=7,
        cochar=Lattice.standard(7),
        coroots=Lattice.from_vectors(7, gens),
        coroot_generators=gens,
        named_vectors=named,
        name="E7 (adjoint)",
    )
    assert lattice_index(rd.coroots, rd.cochar) == 2
    return rd, gram


# ---------------------------------------------------------------------------
# preset dispatch


@dataclass(frozen=True)
class PresetSpec:
    """Parsed parameters for one of the built-in group presets."""

    family: str
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    form: Optional[str] = None
    cartan_type: Optional[str] = None
    rank: Optional[int] = None
    isogeny: str = "sc"
    real: Optional[str] = None


def _require(spec: PresetSpec, *names: str) -> list:
    vals = []
    for nm in names:
        v = getattr(spec, nm)
        if v is None:
            raise PresetError(f"preset {spec.family!r} needs parameter {nm!r}")
        vals.append(v)
    return vals


def build_preset(spec: PresetSpec):
    """Build (RootDatum, Involution or None) for a named preset.

    Families: GL, SO, PSO, TORUS_SPLIT, TORUS_COMPACT, TORUS_WEIL, E7,
    SIMPLE.  E7 takes form in {EV, EVI, EVII}; SIMPLE takes a Cartan type
    and rank with isogeny 'sc' or 'adjoint' and real form 'split',
    'compact', or None.
    """
    from .realform import e7_preset, involution_from_matrix

    fam = spec.family.upper()
    if fam == "GL":
        (n,) = _require(spec, "n")
        rd, theta = gl(n)
    elif fam == "SO":
        p, q = _require(spec, "p", "q")
        rd, theta = so(p, q)
    elif fam == "PSO":
        p, q = _require(spec, "p", "q")
        rd, theta = pso(p, q)
    elif fam == "TORUS_SPLIT":
        (n,) = _require(spec, "n")
        rd, theta = torus_split(n)
    elif fam == "TORUS_COMPACT":
        (n,) = _require(spec, "n")
        rd, theta = torus_compact(n)
    elif fam == "TORUS_WEIL":
        rd, theta = torus_weil()
    elif fam == "E7":
        (form,) = _require(spec, "form")
        return e7_preset(form)
    elif fam == "SIMPLE":
        ct, rk = _require(spec, "cartan_type", "rank")
        rd, theta = simple(ct, rk, spec.isogeny, spec.real)
        if theta is None:
            return rd, None
    else:
        raise PresetError(f"unknown preset family {spec.family!r}")
    return rd, involution_from_matrix(rd, theta, name=rd.name)
