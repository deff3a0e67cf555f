"""Tests for the root datum builders and presets."""

from fractions import Fraction

import pytest

from pi0real.intlattice import Lattice, det, lattice_index, mat_vec, membership
from pi0real.rootdata import (
    PresetError,
    PresetSpec,
    RootDatum,
    build_preset,
    cartan_matrix,
    e7_adjoint,
    gl,
    product,
    pso,
    simple,
    so,
    torus_compact,
    torus_split,
    torus_weil,
)

NEG_I3 = ((-1, 0, 0), (0, -1, 0), (0, 0, -1))


def unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


# ---------------------------------------------------------------------------
# GL


def test_gl_shape():
    rd, theta = gl(3)
    assert rd.rank == 3
    assert rd.name == "GL(3)"
    assert theta == NEG_I3
    assert rd.validate() == ()
    assert len(rd.coroot_generators) == 6
    assert (1, -1, 0) in rd.coroot_generators


def test_gl_coroots_are_trace_zero():
    rd, _ = gl(4)
    for v in rd.coroots.vectors():
        assert sum(v) == 0
    # the trace functional cuts out exactly the coroot lattice
    assert membership((1, 0, 0, -1), rd.coroots)
    assert not membership((1, 0, 0, 0), rd.coroots)


def test_gl1_has_no_coroots():
    rd, _ = gl(1)
    assert rd.coroots.is_zero
    assert rd.validate() == ()


def test_gl_display_weights_are_units():
    rd, _ = gl(5)
    assert rd.display_weights[0] == ("eps1", unit(5, 0))
    assert rd.display_weights[4] == ("eps5", unit(5, 4))


def test_gl_rejects_nonpositive():
    with pytest.raises(PresetError):
        gl(0)


# ---------------------------------------------------------------------------
# SO


def test_so_odd_coroot_count():
    # rank 2, type B2: 8 coroots
    rd, theta = so(2, 3)
    assert rd.rank == 2
    assert len(rd.coroot_generators) == 8
    assert (2, 0) in rd.coroot_generators
    assert theta == ((-1, 0), (0, -1))


def test_so_even_coroot_count():
    # rank 3, type D3: 12 coroots, no doubled ones
    rd, _ = so(3, 3)
    assert len(rd.coroot_generators) == 12
    assert (2, 0, 0) not in rd.coroot_generators


def test_so_index_two():
    # the coroot lattice is the even-sum sublattice in every signature
    for p, q in [(1, 2), (2, 3), (3, 4), (2, 2), (3, 3), (4, 4), (0, 5)]:
        rd, _ = so(p, q)
        assert lattice_index(rd.coroots, rd.cochar) == 2, (p, q)


def test_so_swap_normalizes():
    a = so(3, 2)
    b = so(2, 3)
    assert a == b
    assert a[0].name == "SO(2,3)"


def test_so_theta_signature():
    rd, theta = so(1, 4)
    assert theta == ((-1, 0), (0, 1))


def test_so_display_positions():
    rd, _ = so(2, 3)
    labels = [label for label, _ in rd.display_weights]
    assert labels == ["eps1", "eps2", "0", "-eps2", "-eps1"]
    weights = dict(rd.display_weights)
    assert weights["eps1"] == (1, 0)
    assert weights["-eps1"] == (-1, 0)
    assert weights["0"] == (0, 0)


def test_so_rejects_small():
    with pytest.raises(PresetError):
        so(1, 1)
    with pytest.raises(PresetError):
        so(-1, 5)


# ---------------------------------------------------------------------------
# PSO


def test_pso_rejects_bad_signature():
    with pytest.raises(PresetError):
        pso(2, 3)  # odd total
    with pytest.raises(PresetError):
        pso(1, 1)  # too small


def test_pso_internal_basis():
    # basis e1, .., e_{l-1}, w_l; so e_l picks up the coordinates (-1,..,-1,2)
    rd, _ = pso(3, 3)
    named = dict(rd.named_vectors)
    assert named["e1"] == (1, 0, 0)
    assert named["e2"] == (0, 1, 0)
    assert named["e3"] == (-1, -1, 2)
    assert named["w3"] == (0, 0, 1)


def test_pso_coroot_index_four():
    # coweight lattice over the even-sum lattice: index 4 for type D
    rd, _ = pso(2, 4)
    assert lattice_index(rd.coroots, rd.cochar) == 4
    assert (1, 1, 0) in rd.coroot_generators  # e1 + e2
    assert rd.validate() == ()


def test_pso_display_weights_halved():
    rd, _ = pso(3, 3)
    weights = dict(rd.display_weights)
    assert weights["eps1"] == (1, 0, Fraction(1, 2))
    assert weights["eps3"] == (0, 0, Fraction(1, 2))
    assert weights["-eps3"] == (0, 0, Fraction(-1, 2))


def test_pso_theta_integral_and_involutive():
    from pi0real.intlattice import identity_matrix, mat_mul

    for p, q in [(1, 3), (2, 4), (3, 5), (2, 2), (4, 4), (0, 6)]:
        rd, theta = pso(p, q)
        assert mat_mul(theta, theta) == identity_matrix(rd.rank), (p, q)


def test_pso_lift_note():
    rd, _ = pso(4, 4)
    assert rd.lift_note is not None
    assert "sign" in rd.lift_note


def test_pso_swap_normalizes():
    assert pso(4, 2) == pso(2, 4)


# ---------------------------------------------------------------------------
# tori


def test_torus_split_and_compact():
    rd, theta = torus_split(3)
    assert theta == NEG_I3
    assert rd.coroots.is_zero
    rd, theta = torus_compact(2)
    assert theta == ((1, 0), (0, 1))


def test_torus_weil():
    rd, theta = torus_weil()
    assert rd.rank == 2
    assert theta == ((0, -1), (-1, 0))
    assert rd.coroots.is_zero


# ---------------------------------------------------------------------------
# simple types via Cartan matrices


def test_cartan_determinants():
    # det of the Cartan matrix = order of the fundamental group
    cases = [
        ("A", 1, 2),
        ("A", 5, 6),
        ("B", 3, 2),
        ("C", 4, 2),
        ("D", 4, 4),
        ("D", 5, 4),
        ("E", 6, 3),
        ("E", 7, 2),
        ("E", 8, 1),
        ("F", 4, 1),
        ("G", 2, 1),
    ]
    for t, r, d in cases:
        assert det(cartan_matrix(t, r)) == d, (t, r)


def test_cartan_rejects_bad_type():
    for t, r in [("E", 9), ("F", 3), ("G", 3), ("B", 1), ("D", 2), ("H", 2)]:
        with pytest.raises(PresetError):
            cartan_matrix(t, r)


def test_coroot_counts():
    counts = [
        ("A", 2, 6),
        ("B", 2, 8),
        ("C", 3, 18),
        ("D", 4, 24),
        ("G", 2, 12),
        ("F", 4, 48),
        ("E", 6, 72),
        ("E", 7, 126),
        ("E", 8, 240),
    ]
    for t, r, c in counts:
        rd, _ = simple(t, r, "sc", None)
        assert len(rd.coroot_generators) == c, (t, r)


def test_simple_sc_has_full_coroot_lattice():
    for t, r in [("A", 3), ("D", 4), ("E", 6)]:
        rd, _ = simple(t, r, "sc", None)
        assert rd.coroots == rd.cochar, (t, r)


def test_simple_adjoint_index_table():
    table = [
        ("A", 1, 2),
        ("A", 4, 5),
        ("B", 3, 2),
        ("C", 3, 2),
        ("D", 4, 4),
        ("E", 6, 3),
        ("E", 7, 2),
        ("E", 8, 1),
        ("F", 4, 1),
        ("G", 2, 1),
    ]
    for t, r, idx in table:
        rd, _ = simple(t, r, "adj", None)
        assert lattice_index(rd.coroots, rd.cochar) == idx, (t, r)


def test_simple_real_forms():
    rd, theta = simple("G", 2, "sc", "split")
    assert theta == ((-1, 0), (0, -1))
    rd, theta = simple("G", 2, "sc", "compact")
    assert theta == ((1, 0), (0, 1))
    rd, theta = simple("G", 2, "sc", None)
    assert theta is None


def test_simple_accepts_adjoint_alias():
    assert simple("A", 2, "adjoint", None) == simple("A", 2, "adj", None)


def test_simple_rejects_bad_isogeny():
    with pytest.raises(PresetError):
        simple("A", 2, "iso", None)
    with pytest.raises(PresetError):
        simple("A", 2, "sc", "quaternionic")


def test_simple_coroots_are_symmetric_and_valid():
    for t, r, iso in [("B", 2, "sc"), ("C", 3, "adj"), ("F", 4, "adj")]:
        rd, _ = simple(t, r, iso, None)
        assert rd.validate() == (), (t, r, iso)


# ---------------------------------------------------------------------------
# adjoint E7 in the 8-coordinate presentation


def test_e7_basic_counts():
    rd, gram = e7_adjoint()
    assert rd.rank == 7
    assert len(rd.coroot_generators) == 126
    assert lattice_index(rd.coroots, rd.cochar) == 2
    assert rd.validate() == ()


def test_e7_coweight_membership():
    # w2, w4, w5, w6 land in the coroot lattice; w1, w3, w7 do not
    rd, _ = e7_adjoint()
    named = dict(rd.named_vectors)
    for nm in ("w2", "w4", "w5", "w6"):
        assert membership(named[nm], rd.coroots), nm
    for nm in ("w1", "w3", "w7"):
        assert not membership(named[nm], rd.coroots), nm


def test_e7_simple_coroots_rows():
    # the a_i coordinates recover the (symmetric) E7 Cartan matrix with the
    # chain 1-2-3-4-5-6 and the seventh node attached to the fourth
    rd, _ = e7_adjoint()
    named = dict(rd.named_vectors)
    assert named["a1"] == (2, -1, 0, 0, 0, 0, 0)
    assert named["a4"] == (0, 0, -1, 2, -1, 0, -1)
    assert named["a7"] == (0, 0, 0, -1, 0, 0, 2)


def test_e7_gram_is_symmetric_positive_diagonal():
    _, gram = e7_adjoint()
    assert len(gram) == 7
    for i in range(7):
        assert gram[i][i] > 0
        for j in range(7):
            assert gram[i][j] == gram[j][i]


def test_e7_coroots_have_norm_two():
    # all roots of E7 have the same length under the invariant form
    rd, gram = e7_adjoint()
    for c in rd.coroot_generators[:20]:
        norm = sum(
            Fraction(c[i]) * gram[i][j] * Fraction(c[j])
            for i in range(7)
            for j in range(7)
        )
        assert norm == 2


# ---------------------------------------------------------------------------
# products and validation


def test_product_concatenates():
    a, _ = gl(2)
    b, _ = so(1, 2)
    rd = product(a, b)
    assert rd.rank == 3
    assert rd.name == "GL(2) x SO(1,2)"
    assert rd.validate() == ()
    assert (1, -1, 0) in rd.coroot_generators
    assert (0, 0, 2) in rd.coroot_generators


def test_product_with_rank_zero_is_identity():
    a, _ = gl(2)
    zero = RootDatum(rank=0, cochar=Lattice.standard(0), coroots=Lattice.zero(0))
    assert product(a, zero) == a
    assert product(zero, a) == a


def test_product_merges_names_first_wins():
    a, _ = gl(1)
    b, _ = gl(1)
    rd = product(a, b)
    named = dict(rd.named_vectors)
    assert named["e1"] == (1, 0)  # the left factor keeps its label


def test_validate_flags_bad_data():
    bad = RootDatum(
        rank=2,
        cochar=Lattice.standard(2),
        coroots=Lattice.from_vectors(2, [(1, 0)]),
    )
    assert "coroots listed do not generate the coroot lattice" in bad.validate()

    half = RootDatum(
        rank=1,
        cochar=Lattice.standard(1),
        coroots=Lattice(1, ((1,),), 2),
    )
    assert any("not contained" in d for d in half.validate())

    asym = RootDatum(
        rank=1,
        cochar=Lattice.standard(1),
        coroots=Lattice.from_vectors(1, [(1,)]),
        coroot_generators=((1,),),
    )
    assert any("not symmetric" in d for d in asym.validate())


def test_validate_flags_nonstandard_cochar():
    bad = RootDatum(
        rank=2,
        cochar=Lattice.from_vectors(2, [(2, 0), (0, 1)]),
        coroots=Lattice.zero(2),
    )
    assert any("standard" in d for d in bad.validate())


# ---------------------------------------------------------------------------
# preset dispatch


def test_build_preset_families():
    rd, inv = build_preset(PresetSpec("GL", n=8))
    assert rd.rank == 8 and inv is not None
    rd, inv = build_preset(PresetSpec("TORUS_WEIL"))
    assert inv.theta == ((0, -1), (-1, 0))
    rd, inv = build_preset(PresetSpec("E7", form="EVII"))
    assert inv.name == "EVII"
    rd, inv = build_preset(PresetSpec("SIMPLE", cartan_type="B", rank=3, isogeny="sc"))
    assert inv is None


def test_build_preset_missing_params():
    with pytest.raises(PresetError):
        build_preset(PresetSpec("GL"))
    with pytest.raises(PresetError):
        build_preset(PresetSpec("SO", p=2))
    with pytest.raises(PresetError):
        build_preset(PresetSpec("NOPE", n=1))


def test_build_preset_involutions_are_validated():
    # every preset involution passes the realform checks by construction
    specs = [
        PresetSpec("GL", n=4),
        PresetSpec("SO", p=2, q=4),
        PresetSpec("PSO", p=2, q=4),
        PresetSpec("TORUS_SPLIT", n=2),
        PresetSpec("TORUS_COMPACT", n=2),
        PresetSpec("SIMPLE", cartan_type="D", rank=4, isogeny="adj", real="split"),
    ]
    for spec in specs:
        rd, inv = build_preset(spec)
        assert rd.validate() == (), spec
        assert inv is not None, spec
        img = [tuple(int(x) for x in mat_vec(inv.theta, c)) for c in rd.coroot_generators]
        assert set(img) == set(rd.coroot_generators), spec
