"""Acceptance gate: the headline exact counts and equivalence suites.

Expensive artifacts (n=7 enumerations, the dim-7 arrangement lattice) are
computed once per session via module-scoped fixtures and shared.
"""

import multiprocessing
import time

import pytest

from polycrep import arrangements as ar, bunches, complexes as cx, \
    coxrelations, crosscheck, hyper_cones as hc
from polycrep.complexes import _iter_max_biconnected_masks, _mask_is_full


@pytest.fixture(scope="module")
def lambda7():
    t0 = time.monotonic()
    value = cx.hosten_morris(7)
    return value, time.monotonic() - t0


@pytest.fixture(scope="module")
def a7_counts():
    a = ar.build_A(7)
    t0 = time.monotonic()
    f = ar.count_regions_in_cone(a, ar.cone_F(7))
    c0 = ar.count_regions_in_cone(a, ar.cone_C0(7))
    return f, c0, time.monotonic() - t0


@pytest.fixture(scope="module")
def census7():
    return hc.census_counts(7)


# -- criterion 1: Hosten-Morris counts with time bounds -----------------------

def test_hosten_morris_5():
    t0 = time.monotonic()
    assert cx.hosten_morris(5) == 81
    assert time.monotonic() - t0 < 1


def test_hosten_morris_6():
    t0 = time.monotonic()
    assert cx.hosten_morris(6) == 2646
    assert time.monotonic() - t0 < 10


def test_hosten_morris_7(lambda7):
    value, elapsed = lambda7
    assert value == 1422564
    assert elapsed < 600


def test_parallel_split_consistency(lambda7):
    """The prefix decomposition used by the worker pool partitions the
    search space: any split depth re-sums to the exact total."""
    depth = 5
    tasks = [(7, tuple(bool(b >> t & 1) for t in range(depth)))
             for b in range(1 << depth)]
    with multiprocessing.Pool(8) as pool:
        parts = pool.starmap(cx.count_max_biconnected, tasks, chunksize=2)
    assert sum(parts) == lambda7[0]


# -- criterion 2: exactly n non-full complexes --------------------------------

@pytest.mark.parametrize("n", [5, 6, 7])
def test_nonfull_counts(n):
    nonfull = sum(1 for m in _iter_max_biconnected_masks(n)
                  if not _mask_is_full(m, n))
    assert nonfull == n


# -- criterion 3: GIT chamber tables ------------------------------------------

def test_chamber_tables_n5_n6():
    for n, f_count, c0_count in ((5, 81, 76), (6, 1684, 1678)):
        a = ar.build_A(n)
        assert ar.count_regions_in_cone(a, ar.cone_F(n)) == f_count
        assert ar.count_regions_in_cone(a, ar.cone_C0(n)) == c0_count
        assert f_count - c0_count == n


def test_chamber_tables_n7(a7_counts):
    f, c0, elapsed = a7_counts
    assert (f, c0) == (122921, 122914)
    assert f - c0 == 7
    assert elapsed < 1800


# -- criterion 4: resolution census -------------------------------------------

def test_census_5():
    assert hc.census_counts(5) == {
        "n": 5, "total": 81, "projective": 81, "nonprojective": 0}


def test_census_6_with_time_bound():
    t0 = time.monotonic()
    assert hc.census_counts(6) == {
        "n": 6, "total": 2646, "projective": 1684, "nonprojective": 962}
    assert time.monotonic() - t0 < 300


def test_census_7(census7):
    assert census7 == {"n": 7, "total": 1422564, "projective": 122921,
                       "nonprojective": 1299643}
    assert census7["nonprojective"] == 1422564 - 122921


# -- criterion 5: Segre cubic, two routes to 332 ------------------------------

def test_segre_332_all_routes():
    assert ar.count_chambers_at_ray(ar.build_A(6), (1,) * 6) == 332
    b = ar.build_B(6, 3)
    assert ar.count_regions(b, "enumerate") == 332
    assert ar.count_regions(b, "charpoly") == 332


# -- criterion 6: the dim-7 arrangement (extended) ----------------------------

def test_B84_charpoly():
    t0 = time.monotonic()
    assert ar.count_regions(ar.build_B(8, 4), "charpoly") == 495504
    elapsed = time.monotonic() - t0
    print(f"\nB(8,4) charpoly regions in {elapsed:.1f}s")


# -- criterion 7: oracle equivalence, exhaustive at n=5 -----------------------

def test_oracle_equivalence_exhaustive():
    for report in crosscheck.run_all(5, max_k=3):
        assert report["mismatches"] == 0, report


# -- criterion 8: bijection round trips ---------------------------------------

@pytest.mark.parametrize("n", [5, 6])
def test_complex_bunch_roundtrip(n):
    for d in cx.enumerate_max_biconnected(n, full_only=True):
        assert bunches.complex_from_bunch(bunches.phi_from_complex(d)) == d


@pytest.mark.parametrize("n", [5, 6])
def test_complex_dimension_bijection(n):
    images = set()
    for d in cx.enumerate_max_biconnected(n):
        b = cx.max_biconnected_to_biconnected(d)
        assert cx.biconnected_to_max_biconnected(b) == d
        images.add(b)
    assert len(images) == cx.hosten_morris(n)


# -- criterion 9: chambers map onto projective full complexes -----------------

@pytest.mark.parametrize("n,m_n", [(5, 76), (6, 1678)])
def test_chamber_complex_consistency(n, m_n):
    a = ar.build_A(n)
    chambers = ar.chambers_in_cone(a, ar.cone_C0(n))
    assert len(chambers) == m_n
    image = {ar.chamber_to_complex(a, ch) for ch in chambers}
    assert len(image) == m_n  # injective
    projective = {d for d in cx.enumerate_max_biconnected(n, full_only=True)
                  if bunches.is_projective(bunches.phi_from_complex(d))}
    assert image == projective


# -- criterion 10: Cox relations ----------------------------------------------

def test_cox_identities_all_n():
    for n in range(4, 10):
        assert coxrelations.iota_substitution_identities(n)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_cox_hundred_samples_and_mutant(n):
    for seed in range(100):
        pt = coxrelations.sample_X_point(n, seed)
        assert coxrelations.verify_relations_vanish(pt)
    pt = coxrelations.sample_X_point(n, 100)
    bad = coxrelations.XPoint.__new__(coxrelations.XPoint)
    object.__setattr__(bad, "n", pt.n)
    object.__setattr__(bad, "x", pt.x)
    object.__setattr__(bad, "y", pt.y)
    object.__setattr__(bad, "c", (pt.c[0] + 1,) + tuple(pt.c[1:]))
    assert not coxrelations.verify_relations_vanish(bad)
