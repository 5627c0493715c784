"""Arrangement construction and exact region counting."""

import pytest

from polycrep import arrangements as ar, ratgeom
from polycrep.arrangements import Arrangement, Hyperplane


def test_build_A_counts():
    assert len(ar.build_A(5).hyperplanes) == 21
    assert len(ar.build_A(6).hyperplanes) == 38
    with pytest.raises(ValueError):
        ar.build_A(3)


def test_build_A_contains_vI_normals():
    a = ar.build_A(5)
    have = set(a.normals)
    for I in ({1}, {1, 2}, {2, 4}, set()):
        assert ratgeom.canon_normal(ar.v_I(I, 5)) in have


def test_build_B():
    b = ar.build_B(6, 3)
    assert b.dim == 5 and len(b.hyperplanes) == 10
    assert all(sum(h.normal) == 3 and set(h.normal) <= {0, 1}
               for h in b.hyperplanes)
    assert len(ar.build_B(8, 4).hyperplanes) == 35
    with pytest.raises(ValueError):
        ar.build_B(7, 3)
    with pytest.raises(ValueError):
        ar.build_B(4, 2)


def test_hyperplane_canonical():
    assert Hyperplane((-1, 1, 0)) == Hyperplane((1, -1, 0))
    assert Hyperplane((2, -2, 4)).normal == (1, -1, 2)
    with pytest.raises(ValueError):
        Hyperplane((0, 0, 0))


def test_count_regions_empty():
    assert ar.count_regions(Arrangement(4, ())) == 1


def test_count_regions_single_hyperplane():
    a = Arrangement(3, ((1, 1, 1),))
    assert ar.count_regions(a) == 2
    assert ar.count_regions(a, "charpoly") == 2


def test_boolean_arrangement():
    a = Arrangement(4, tuple(tuple(1 if j == i else 0 for j in range(4))
                             for i in range(4)))
    assert ar.count_regions(a) == 16
    assert ar.count_regions(a, "charpoly") == 16


def test_braid_like_counts():
    # generic-position count in the plane: n lines -> 1 + n + C(n,2) regions
    # through the origin instead: 2n regions
    a = Arrangement(2, ((1, 0), (0, 1), (1, 1), (1, -1)))
    assert ar.count_regions(a) == 8
    assert ar.count_regions(a, "charpoly") == 8


def test_non_essential_arrangement():
    # all normals orthogonal to (1,1,1): counts match the essential rank-2 one
    a = Arrangement(3, ((1, -1, 0), (0, 1, -1), (1, 0, -1)))
    assert ar.count_regions(a) == 6
    assert ar.count_regions(a, "charpoly") == 6


def test_B63_both_modes():
    b = ar.build_B(6, 3)
    assert ar.count_regions(b, "enumerate") == 332
    assert ar.count_regions(b, "charpoly") == 332


def test_char_poly_B63():
    cp = ar.char_poly(ar.build_B(6, 3))
    assert sum(cp.values()) == 0  # chi(1) = 0 for any nonempty arrangement
    assert cp[5] == 1 and cp[4] == -10


def test_regions_in_cone_n5():
    a = ar.build_A(5)
    assert ar.count_regions_in_cone(a, ar.cone_F(5)) == 81
    assert ar.count_regions_in_cone(a, ar.cone_C0(5)) == 76


def test_regions_in_cone_requires_member_facets():
    a = ar.build_B(6, 3)
    with pytest.raises(ValueError):
        ar.count_regions_in_cone(a, ar.cone_F(5))


def test_chambers_carry_valid_witnesses():
    a = ar.build_A(5)
    for ch in ar.chambers_in_cone(a, ar.cone_C0(5)):
        assert len(ch.signs) == len(a.hyperplanes)
        for h, s in zip(a.normals, ch.signs):
            v = ratgeom.dot(h, ch.witness)
            assert v != 0 and (v > 0) == (s > 0)


def test_count_chambers_at_ray():
    a = ar.build_A(6)
    assert ar.count_chambers_at_ray(a, (1,) * 6) == 332
    # generic ray: empty localization
    assert ar.count_chambers_at_ray(a, (3, 9, 27, 81, 243, 365)) == 1
    with pytest.raises(ValueError):
        ar.count_chambers_at_ray(a, (0,) * 6)


def test_deletion_restriction():
    a = Arrangement(4, ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0),
                        (1, -1, 0, 1), (0, 1, 2, -1), (1, 1, 1, 1)))
    for h in a.hyperplanes:
        assert (ar.count_regions(a)
                == ar.count_regions(ar.delete(a, h))
                + ar.count_regions(ar.restrict(a, h)))


def test_finite_field_crosscheck():
    a = Arrangement(3, ((1, 0, 0), (0, 1, 0), (1, 1, 1), (1, -1, 0),
                        (0, 1, 2)))
    cp = ar.char_poly(a)
    for q in (53, 59, 61):
        assert ar.count_points_mod_p(a, q) == sum(
            c * q ** p for p, c in cp.items())


def test_resource_bounds():
    with pytest.raises(ValueError):
        ar.count_regions(Arrangement(9, (tuple([1] + [0] * 8),)))
    many = tuple(tuple(1 if j == 0 else k for j in range(2))
                 for k in range(1, 66))
    with pytest.raises(ValueError):
        ar.count_regions(Arrangement(2, many))


def test_chamber_to_complex_central():
    from polycrep.complexes import is_full, is_maximal_biconnected
    a = ar.build_A(5)
    chs = ar.chambers_in_cone(a, ar.cone_C0(5))
    central = next(ch for ch in chs
                   if all(x == ch.witness[0] for x in ch.witness))
    d = ar.chamber_to_complex(a, central)
    assert is_full(d) and is_maximal_biconnected(d)
    assert all(len(f) == 2 for f in d.maximal_faces)


def test_mode_validation():
    with pytest.raises(ValueError):
        ar.count_regions(ar.build_B(6, 3), "magic")
