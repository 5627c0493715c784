"""Hyperpolygon-side orbit cones ω_{P,K} and the crepant-resolution census.

ω_{P,K} = ω_P + Cone(−e_k | k ∈ K).  The module provides the combinatorial
membership test for orbit data, the corner-cone and orthant containment
criteria, the C_0 slice, the Ψ_Δ membership test, and the census that
attaches a resolution record (projective or not, with an exact witness
character when projective) to every maximally-biconnected complex.

All closed forms here are cross-validated against the ratgeom oracle in the
test suite; any disagreement is a test failure, not a warning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import arrangements, bunches, ratgeom
from .complexes import (Complex, Partition, _complex_from_mask,
                        _iter_max_biconnected_masks, _mask_is_full, is_full,
                        is_maximal_biconnected)
from .polygon_cones import PolygonCone, eta
from . import polygon_cones


@dataclass(frozen=True)
class HyperCone:
    """ω_{P,K} for orbit data (P, K)."""

    n: int
    partition: Partition
    K: frozenset

    def __post_init__(self):
        object.__setattr__(self, "K", frozenset(self.K))
        if self.partition.n != self.n:
            raise ValueError("partition range mismatch")
        if self.K and (min(self.K) < 1 or max(self.K) > self.n):
            raise ValueError("K outside [n]")


@dataclass(frozen=True)
class CornerCone:
    """C_0 (i = 0) or a corner chamber C_i = Cone(e_i, e_i + e_j)."""

    n: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i <= self.n:
            raise ValueError("index out of range")

    def h_form(self) -> ratgeom.ConeH:
        if self.i == 0:
            return arrangements.cone_C0(self.n)
        return arrangements.cone_Ci(self.n, self.i)

    def v_form(self) -> ratgeom.ConeV:
        return ratgeom.h_to_v(self.h_form())


@dataclass(frozen=True)
class ResolutionRecord:
    complex: Complex
    kind: str  # "projective" | "non-projective"
    witness: Optional[tuple]

    def to_json_obj(self) -> dict:
        return {"complex": self.complex.to_json_obj(),
                "kind": self.kind,
                "witness": None if self.witness is None
                else [str(w) for w in self.witness]}


def generators_hyper(c: HyperCone) -> list:
    """Polygon generators of ω_P followed by −e_k, k ∈ K."""
    gens = polygon_cones.generators(PolygonCone(c.n, c.partition))
    for k in sorted(c.K):
        v = [0] * c.n
        v[k - 1] = -1
        gens.append(tuple(v))
    return gens


def in_omega_X(p: Partition, k) -> bool:
    """Orbit-data test: at least 4 parts meet K, or no part meets K in
    exactly one element."""
    K = frozenset(k)
    meets = sum(1 for J in p.parts if J & K)
    if meets >= 4:
        return True
    return all(len(J & K) != 1 for J in p.parts)


def in_omega_X_free(p: Partition, k) -> bool:
    """Free orbit-data test (P partitions all of [n])."""
    K = frozenset(k)
    if len(p.ground) != p.n:
        return False
    meets = sum(1 for J in p.parts if J & K)
    if meets >= 4:
        return True
    if any(len(J & K) == 1 for J in p.parts):
        return False
    if len(p.parts) >= 3:
        return True
    return len(p.parts) >= 2 and bool(K)


def is_free(c: HyperCone) -> bool:
    return in_omega_X_free(c.partition, c.K)


def contains_corner(c: HyperCone, i: int) -> bool:
    """C_i ⊆ ω_{P,K} iff K meets the complement of i's part."""
    if not 1 <= i <= c.n:
        raise ValueError("index out of range")
    I = next(J for J in c.partition.parts if i in J)
    return bool(c.K - I)


def contains_F(c: HyperCone) -> bool:
    """Orthant containment: K nonempty and inside no single part
    (equivalently ω_{P,K} is not strongly convex)."""
    return bool(c.K) and not any(c.K <= I for I in c.partition.parts)


def meet_C0(c: HyperCone) -> PolygonCone:
    """ω_{P,K} ∩ C_0: the wall cone η_I for K ⊆ I ∈ P, or ω_P when K = ∅."""
    if contains_F(c):
        raise ValueError("cone contains the orthant; the slice is not a wall")
    if not c.K:
        return PolygonCone(c.n, c.partition)
    I = next(J for J in c.partition.parts if c.K <= J)
    return eta(I, c.n)


def psi_membership(d: Complex, c: HyperCone) -> bool:
    """Membership of ω_{P,K} in Ψ_Δ.

    Non-full Δ (all subsets avoiding one index i): cones containing C_i.
    Full Δ: cones containing F, or whose C_0 slice contains a free polygon
    cone of Φ_Δ — ω_P with P ⊆ Δ for K = ∅, and η_I with I a face of Δ of
    size ≤ n−2 for K ⊆ I ∈ P.
    """
    if not is_free(c):
        raise ValueError("requires a free hyper cone")
    if not is_maximal_biconnected(d):
        raise ValueError("requires a maximally-biconnected complex")
    n = d.n
    if not is_full(d):
        missing = [i for i in range(1, n + 1) if not d.member({i})]
        if len(missing) != 1:
            raise ValueError("non-full maximally-biconnected complex "
                             "must miss exactly one singleton")
        return contains_corner(c, missing[0])
    if contains_F(c):
        return True
    if not c.K:
        return all(d.member(J) for J in c.partition.parts)
    I = next(J for J in c.partition.parts if c.K <= J)
    return len(I) <= n - 2 and d.member(I)


def free_orbit_data(n: int, max_k: Optional[int] = None) -> Iterator[HyperCone]:
    """All free hyper cones on [n], optionally with #K bounded."""
    from .complexes import enumerate_partitions
    elems = list(range(1, n + 1))
    for p in enumerate_partitions(elems, n, min_parts=2):
        for size in range(0, (max_k if max_k is not None else n) + 1):
            for K in itertools.combinations(elems, size):
                if in_omega_X_free(p, K):
                    yield HyperCone(n, p, frozenset(K))


# ---------------------------------------------------------------------------
# census

def _corner_witness(n: int, i: int) -> tuple:
    """A deterministic generic point of C_i°: distinct powers of 3 off i,
    and θ_i one more than their sum (odd total, so no wall vanishes)."""
    theta = [0] * n
    s = 0
    for j in range(1, n + 1):
        if j != i:
            theta[j - 1] = 3 ** j
            s += 3 ** j
    theta[i - 1] = s + 1
    return tuple(theta)


def _family_mask_of_theta(theta, n: int) -> int:
    """Bitmask over nonempty subsets I with v_I(θ) > 0 (subset-sum DP)."""
    sums = [0] * (1 << n)
    for bits in range(1, 1 << n):
        low = bits & -bits
        sums[bits] = sums[bits ^ low] + theta[low.bit_length() - 1]
    total = sums[-1]
    fam = 1  # the empty face, always a member
    for bits in range(1, 1 << n):
        if 2 * sums[bits] < total:
            fam |= 1 << bits
    return fam


def _projective_full_masks(n: int) -> dict:
    """family mask -> chamber witness θ, over the chambers of 𝒜 in C_0."""
    a = arrangements.build_A(n)
    bank = {}
    for ch in arrangements.chambers_in_cone(a, arrangements.cone_C0(n)):
        bank[_family_mask_of_theta(ch.witness, n)] = ch.witness
    return bank


def census(n: int) -> Iterator[ResolutionRecord]:
    """One record per maximally-biconnected complex on [n].

    Non-full complexes are always projective (corner chambers); a full
    complex is projective exactly when some arrangement chamber inside C_0
    induces it, and that chamber's interior point is the witness.
    """
    if not 5 <= n <= 7:
        raise ValueError("supported range is 5 <= n <= 7")
    bank = _projective_full_masks(n)
    for inm in _iter_max_biconnected_masks(n):
        d = _complex_from_mask(inm, n)
        if _mask_is_full(inm, n):
            w = bank.get(inm)
            if w is None:
                yield ResolutionRecord(d, "non-projective", None)
            else:
                yield ResolutionRecord(d, "projective", w)
        else:
            missing = next(i for i in range(1, n + 1)
                           if not inm >> (1 << (i - 1)) & 1)
            yield ResolutionRecord(d, "projective", _corner_witness(n, missing))


def census_counts(n: int) -> dict:
    """{total, projective, nonprojective} without materializing records."""
    if not 5 <= n <= 7:
        raise ValueError("supported range is 5 <= n <= 7")
    bank = _projective_full_masks(n)
    total = proj = 0
    for inm in _iter_max_biconnected_masks(n):
        total += 1
        if _mask_is_full(inm, n):
            proj += inm in bank
        else:
            proj += 1
    return {"n": n, "total": total, "projective": proj,
            "nonprojective": total - proj}


def phi_projective_witness(d: Complex):
    """LP route to projectivity of a single full complex (independent of the
    chamber route): a common interior point of Φ_Δ, or None."""
    return bunches.projectivity_witness(bunches.phi_from_complex(d))
