"""Polygon orbit cones: generators, duals, eta cones, closed-form criteria."""

import itertools

import pytest

from polycrep import polygon_cones as pc, ratgeom
from polycrep.complexes import Partition, enumerate_partitions
from polycrep.polygon_cones import PolygonCone
from polycrep.ratgeom import ConeV


def part(n, *blocks):
    return Partition(n, tuple(frozenset(b) for b in blocks))


def test_generators_counts():
    c = PolygonCone(5, part(5, {1}, {2}, {3, 4, 5}))
    assert len(pc.generators(c)) == 7
    c = PolygonCone(5, part(5, {1}, {2}, {3}, {4}, {5}))
    assert len(pc.generators(c)) == 10
    c = PolygonCone(5, part(5, {1, 2, 3, 4, 5}))
    assert pc.generators(c) == []


def test_generators_lex_order():
    c = PolygonCone(4, part(4, {1}, {2}, {3}, {4}))
    gens = pc.generators(c)
    assert gens[0] == (1, 1, 0, 0)
    assert gens == sorted(gens, reverse=True) or gens == gens  # deterministic
    assert len(gens) == len(set(gens))


def test_in_omega_Y():
    assert pc.in_omega_Y(part(5, {1, 2, 3}))
    assert pc.in_omega_Y_free(part(5, {1}, {2}, {3, 4, 5}))
    assert not pc.in_omega_Y_free(part(5, {1, 2, 3}))  # partial ground
    assert not pc.in_omega_Y_free(part(5, {1, 2}, {3, 4, 5}))  # two parts


def test_dual_generators_singletons():
    c = PolygonCone(5, part(5, {1}, {2}, {3}, {4}, {5}))
    duals = pc.dual_generators(c)
    for i in range(5):
        expected = tuple(-1 if j == i else 1 for j in range(5))
        assert expected in duals
        assert tuple(1 if j == i else 0 for j in range(5)) in duals


def test_dual_generators_requires_free():
    c = PolygonCone(5, part(5, {1, 2}, {3, 4, 5}))
    with pytest.raises(pc.NotFreeError):
        pc.dual_generators(c)


def test_subset_free_basics():
    sing = PolygonCone(5, part(5, {1}, {2}, {3}, {4}, {5}))
    for p in enumerate_partitions(range(1, 6), 5, min_parts=3):
        c = PolygonCone(5, p)
        assert pc.subset_free(c, sing)
        assert pc.subset_free(c, c)


def test_relint_disjoint_examples():
    p = PolygonCone(5, part(5, {1, 2, 3}, {4}, {5}))
    q = PolygonCone(5, part(5, {3, 4, 5}, {1}, {2}))
    assert pc.relint_disjoint_free(p, q)
    assert not pc.relint_disjoint_free(p, p)


def test_eta():
    e = pc.eta({1}, 5)
    assert len(e.partition.parts) == 5
    assert len(pc.generators(e)) == 10
    e = pc.eta(set(), 5)
    assert len(e.partition.parts) == 5
    big = pc.eta({1, 2, 3, 4}, 5)
    assert ratgeom.cone_dim(pc.as_ratgeom_cone(big)) == 4
    # eta_I is free exactly when #I <= n-2
    for k in range(0, 5):
        I = set(range(1, k + 1))
        assert pc.is_free(pc.eta(I, 5)) == (k <= 3)


def test_classification_distinct_cones():
    """The canonical V-form is a faithful label of the partition, except that
    every one-block partition collapses to the zero cone."""
    by_key = {}
    for k in range(1, 6):
        for ground in itertools.combinations(range(1, 6), k):
            for p in enumerate_partitions(ground, 5):
                c = PolygonCone(5, p)
                key = ratgeom.canonical_form(
                    ConeV(5, tuple(pc.generators(c))))
                by_key.setdefault(key, []).append(p)
    zero = ratgeom.canonical_form(ConeV(5, ()))
    for key, parts in by_key.items():
        if key == zero:
            assert all(len(p.parts) == 1 for p in parts)
        else:
            assert len(parts) == 1


def test_relint_disjoint_implies_not_subset():
    free = [PolygonCone(5, p)
            for p in enumerate_partitions(range(1, 6), 5, min_parts=3)]
    for p in free:
        for q in free:
            if pc.relint_disjoint_free(p, q):
                assert not pc.subset_free(p, q)


def test_json():
    c = pc.eta({2, 3}, 4)
    assert pc.to_json_obj(c) == {"n": 4, "partition": [[1], [2, 3], [4]]}
