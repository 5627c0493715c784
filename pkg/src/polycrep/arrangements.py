"""Hyperplane arrangements and exact region counting.

Two independent counting backends:

* ``enumerate`` — depth-first region splitting with an exact double-description
  certificate per region: a region-in-cone is represented by its extreme rays
  (integer vectors) together with cached constraint values; splitting on a
  hyperplane produces the two child ray sets without any LP.  The arrangement
  is first essentialized and space is covered by the 2^r simplicial sign cones
  of r independent normals.
* ``charpoly`` — the intersection lattice is built by breadth-first closure
  over flats (exact integer row reduction), the Möbius function is computed
  rank by rank, and the region count is (−1)^d · χ(−1) (Zaslavsky).

Everything is exact; numpy int64 is used only as a fast carrier for small
integer dot products, with an explicit magnitude guard and a Python-int
fallback.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import ratgeom
from .ratgeom import ConeH, canon_normal, primitive

MAX_DIM = 8
MAX_HYPERPLANES = 64

# |C @ ray| stays below 2^63 as long as ray entries are below this bound
# (constraint entries are small; the factor 2^8 covers dim * max |entry|).
_INT64_SAFE = 1 << 54


@dataclass(frozen=True)
class Hyperplane:
    """A linear hyperplane normal·x = 0, canonically normalized."""

    normal: tuple

    def __post_init__(self):
        v = canon_normal(self.normal)
        if not any(v):
            raise ValueError("zero normal")
        object.__setattr__(self, "normal", v)


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement: deduplicated, sorted hyperplanes in Q^dim."""

    dim: int
    hyperplanes: tuple

    def __post_init__(self):
        hs = sorted({Hyperplane(h.normal if isinstance(h, Hyperplane) else h)
                     for h in self.hyperplanes},
                    key=lambda h: h.normal)
        for h in hs:
            if len(h.normal) != self.dim:
                raise ValueError("normal dimension mismatch")
        object.__setattr__(self, "hyperplanes", tuple(hs))

    @property
    def normals(self):
        return tuple(h.normal for h in self.hyperplanes)


@dataclass(frozen=True)
class Chamber:
    """An open region: one sign per hyperplane plus an interior witness."""

    signs: tuple
    witness: tuple


def v_I(I, n: int) -> tuple:
    I = set(I)
    return tuple(-1 if i in I else 1 for i in range(1, n + 1))


def build_A(n: int) -> Arrangement:
    """All hyperplanes v_I·θ = 0 (one per complement pair, including Σθ = 0)
    plus the n coordinate hyperplanes: 2^(n−1) + n in total."""
    if n < 4:
        raise ValueError("n >= 4 required")
    normals = set()
    for bits in range(1 << n):
        I = {i + 1 for i in range(n) if bits >> i & 1}
        normals.add(canon_normal(v_I(I, n)))
    for i in range(n):
        e = [0] * n
        e[i] = 1
        normals.add(tuple(e))
    return Arrangement(n, tuple(normals))


def build_B(n: int, m: int) -> Arrangement:
    """Hyperplanes Σ_{i∈I} z_i = 0, #I = m, in dimension n−1 (n = 2m)."""
    if n != 2 * m or m < 3:
        raise ValueError("require n = 2m with m >= 3")
    d = n - 1
    normals = [tuple(1 if i in I else 0 for i in range(d))
               for I in itertools.combinations(range(d), m)]
    return Arrangement(d, tuple(normals))


# ---------------------------------------------------------------------------
# corner cones of the parameter space, as H-descriptions

def cone_F(n: int) -> ConeH:
    """The closed positive orthant of parameters."""
    eye = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return ConeH(n, eye)


def cone_C0(n: int) -> ConeH:
    """0 <= θ_i <= Σ_{j≠i} θ_j."""
    ineqs = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    ineqs += [v_I({i}, n) for i in range(1, n + 1)]
    return ConeH(n, tuple(ineqs))


def cone_Ci(n: int, i: int) -> ConeH:
    """Cone(e_i, e_i + e_j | j ≠ i): θ_j >= 0 (j ≠ i) and θ_i >= Σ_{j≠i}θ_j."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    ineqs = [tuple(1 if j == k else 0 for j in range(n))
             for k in range(n) if k != i - 1]
    ineqs.append(tuple(1 if j == i - 1 else -1 for j in range(n)))
    return ConeH(n, tuple(ineqs))


# ---------------------------------------------------------------------------
# enumerate backend: DD region splitting

def _ray_data(r, C, Cobj):
    """(ray, constraint values, tight bitmask); exact by magnitude guard."""
    if max(abs(x) for x in r) < _INT64_SAFE:
        vals = C @ np.array(r, dtype=np.int64)
    else:
        vals = np.array([sum(a * b for a, b in zip(row, r)) for row in Cobj],
                        dtype=object)
    tight = 0
    for i, v in enumerate(vals):
        if v == 0:
            tight |= 1 << i
    return (r, vals, tight)


def _split_regions(normals, cone_facets, cone_rays, collect):
    """Count (and optionally report) regions of the arrangement inside the
    cone given by facets/extreme rays.  Exact, LP-free: children of a split
    are built by the double-description step, and adjacency of two rays is
    certified by the no-third-ray test over decided (non-cutting) constraints.
    """
    cons = [tuple(c) for c in cone_facets] + [tuple(h) for h in normals]
    nf = len(cone_facets)
    nh = len(normals)
    C = np.array(cons, dtype=np.int64)
    Cobj = cons
    rays0 = [_ray_data(primitive(r), C, Cobj) for r in cone_rays]
    count = 0
    stack = [(rays0, list(range(nh)), (1 << nf) - 1)]
    while stack:
        rays, remaining, decided = stack.pop()
        cut = None
        keep = []
        for h in remaining:
            haspos = hasneg = False
            for rv in rays:
                v = rv[1][nf + h]
                if v > 0:
                    haspos = True
                elif v < 0:
                    hasneg = True
                if haspos and hasneg:
                    break
            if haspos and hasneg:
                if cut is None:
                    cut = h
                else:
                    keep.append(h)
            else:
                decided |= 1 << (nf + h)
        if cut is None:
            count += 1
            if collect is not None:
                collect(rays)
            continue
        decided_h = decided | (1 << (nf + cut))
        plus, minus, zero = [], [], []
        for rv in rays:
            v = rv[1][nf + cut]
            (plus if v > 0 else minus if v < 0 else zero).append(rv)
        new = []
        for rp in plus:
            for rm in minus:
                t12 = rp[2] & rm[2] & decided_h
                if any(r3[2] & t12 == t12 for r3 in rays
                       if r3 is not rp and r3 is not rm):
                    continue
                a = int(rp[1][nf + cut])
                b = -int(rm[1][nf + cut])
                nr = primitive(tuple(a * x + b * y
                                     for x, y in zip(rm[0], rp[0])))
                new.append(_ray_data(nr, C, Cobj))
        stack.append((plus + zero + new, keep, decided_h))
        stack.append((minus + zero + new, keep, decided_h))
    return count


def _essentialize(a: Arrangement):
    """Restrict normals to the pivot coordinates of their row space.

    The coordinate subspace spanned by the pivot axes is transversal to the
    common lineality of the hyperplanes, so region counts are unchanged.
    """
    rref, pivs = ratgeom.row_reduce(a.normals)
    r = len(pivs)
    if r == a.dim:
        return a.normals, a.dim
    proj = [tuple(h[c] for c in pivs) for h in a.normals]
    return tuple(proj), r


def _sign_cone_rays(basis, signs):
    """Extreme rays of {x : s_i b_i · x >= 0}: signed adjugate columns."""
    d = len(basis)
    m = [tuple(s * x for x in row) for s, row in zip(signs, basis)]
    det, adj = ratgeom._det_and_adjugate(m)
    flip = 1 if det > 0 else -1
    return m, [primitive(tuple(flip * adj[i][j] for i in range(d)))
               for j in range(d)]


def _count_enumerate(a: Arrangement) -> int:
    normals, d = _essentialize(a)
    if d == 0:
        return 1
    basis = []
    for h in normals:
        if ratgeom.rank(basis + [h]) == len(basis) + 1:
            basis.append(h)
        if len(basis) == d:
            break
    total = 0
    for signs in itertools.product((1, -1), repeat=d):
        facets, rays = _sign_cone_rays(basis, signs)
        total += _split_regions(normals, facets, rays, None)
    return total


# ---------------------------------------------------------------------------
# charpoly backend: intersection lattice and Möbius function

def _flats(normals, dim):
    """All flats of the intersection lattice as (hyperplane bitmask, rank),
    by breadth-first rank-increasing closure."""
    n = len(normals)
    flats = {0: 0}
    frontier = {(): ((), ())}
    rk = 0
    N = np.array(normals, dtype=np.int64)
    while frontier:
        rk += 1
        new = {}
        for basis, pivs in frontier.values():
            for h in range(n):
                if ratgeom.in_rowspace(basis, pivs, normals[h]):
                    continue
                nb, npv = ratgeom.row_reduce(list(basis) + [normals[h]])
                if nb in new:
                    continue
                kb = ratgeom.kernel_basis(nb, dim)
                if kb and max(abs(x) for v in kb for x in v) < _INT64_SAFE:
                    K = np.array(kb, dtype=np.int64).T
                    zero = (N @ K == 0).all(axis=1)
                    mask = 0
                    for g in range(n):
                        if zero[g]:
                            mask |= 1 << g
                else:
                    mask = 0
                    for g in range(n):
                        if ratgeom.in_rowspace(nb, npv, normals[g]):
                            mask |= 1 << g
                new[nb] = (npv, mask)
        frontier = {}
        for nb, (npv, mask) in new.items():
            if mask not in flats:
                flats[mask] = rk
                frontier[mask] = (nb, npv)
    return flats


def char_poly(a: Arrangement) -> dict:
    """Characteristic polynomial χ(t) as {power: coefficient}."""
    flats = _flats(a.normals, a.dim)
    items = sorted(flats.items(), key=lambda kv: (kv[1], kv[0]))
    masks = [k for k, _ in items]
    ranks = [v for _, v in items]
    if len(masks) > 1:
        am = np.array(masks, dtype=object)
    mu = [0] * len(items)
    mu[0] = 1
    for i in range(1, len(items)):
        mi = masks[i]
        below = (am[:i] & mi) == am[:i]
        mu[i] = -int(np.array(mu[:i], dtype=object)[below].sum())
    coeffs = {}
    for m, r in zip(mu, ranks):
        p = a.dim - r
        coeffs[p] = coeffs.get(p, 0) + m
    return {p: c for p, c in sorted(coeffs.items(), reverse=True) if c}


def _count_charpoly(a: Arrangement) -> int:
    coeffs = char_poly(a)
    return abs(sum(c * (-1) ** p for p, c in coeffs.items()))


def count_points_mod_p(a: Arrangement, q: int) -> int:
    """Points of F_q^dim avoiding every hyperplane, by direct scan.

    For primes q larger than every minor of the normal matrix this equals
    χ(q); kept as an independent cross-check for small arrangements.
    """
    N = np.array(a.normals, dtype=np.int64) % q
    count = 0
    dims = (q,) * a.dim
    grid = np.indices(dims).reshape(a.dim, -1)
    vals = (N @ grid) % q
    return int(((vals != 0).all(axis=0)).sum())


def count_regions(a: Arrangement, mode: str = "enumerate") -> int:
    """Number of open regions of the arrangement."""
    if a.dim > MAX_DIM:
        raise ValueError(f"dimension bound exceeded (dim <= {MAX_DIM})")
    if len(a.hyperplanes) > MAX_HYPERPLANES:
        raise ValueError(
            f"hyperplane bound exceeded (<= {MAX_HYPERPLANES} hyperplanes)")
    if not a.hyperplanes:
        return 1
    if mode == "enumerate":
        return _count_enumerate(a)
    if mode == "charpoly":
        return _count_charpoly(a)
    raise ValueError("mode must be 'enumerate' or 'charpoly'")


# ---------------------------------------------------------------------------
# regions relative to cones and rays

def _require_cone_in_arrangement(a: Arrangement, cone: ConeH):
    if cone.ambient_dim != a.dim:
        raise ValueError("cone/arrangement dimension mismatch")
    have = set(a.normals)
    for ineq in cone.inequalities:
        if canon_normal(ineq) not in have:
            raise ValueError("cone facet is not an arrangement hyperplane")


def _cone_rays(cone: ConeH):
    if ratgeom.rank(cone.inequalities) < cone.ambient_dim:
        raise ValueError("cone must be pointed")
    rays = list(ratgeom.h_to_v(cone).generators)
    if not rays:
        raise ValueError("zero cone")
    return rays


def count_regions_in_cone(a: Arrangement, cone: ConeH) -> int:
    """Regions of the arrangement wholly inside the given cone.

    The cone's facets must themselves be arrangement hyperplanes, so every
    region is either inside or disjoint.
    """
    _require_cone_in_arrangement(a, cone)
    return _split_regions(a.normals, cone.inequalities, _cone_rays(cone), None)


def chambers_in_cone(a: Arrangement, cone: ConeH):
    """Yield a Chamber per region inside the cone.

    The witness is the (exact) sum of the region's extreme rays; signs are
    its evaluations against the arrangement normals.
    """
    _require_cone_in_arrangement(a, cone)
    out = []

    def collect(rays):
        w = primitive(tuple(sum(c) for c in zip(*(rv[0] for rv in rays))))
        signs = tuple(1 if ratgeom.dot(h, w) > 0 else -1 for h in a.normals)
        out.append(Chamber(signs, w))

    _split_regions(a.normals, cone.inequalities, _cone_rays(cone), collect)
    return out


def count_chambers_at_ray(a: Arrangement, theta) -> int:
    """Chambers whose closure contains theta = regions of the localization
    at theta (hyperplanes vanishing there)."""
    theta = tuple(Fraction(t) for t in theta)
    if len(theta) != a.dim or not any(theta):
        raise ValueError("theta must be a nonzero vector of the right dimension")
    local = [h.normal for h in a.hyperplanes
             if ratgeom.dot(h.normal, theta) == 0]
    if not local:
        return 1
    return count_regions(Arrangement(a.dim, tuple(local)))


def delete(a: Arrangement, h: Hyperplane) -> Arrangement:
    rest = tuple(g.normal for g in a.hyperplanes if g != h)
    return Arrangement(a.dim, rest)


def restrict(a: Arrangement, h: Hyperplane) -> Arrangement:
    """The arrangement induced on the hyperplane h (coordinates = a kernel
    basis of h's normal)."""
    basis = ratgeom.kernel_basis([h.normal], a.dim)
    normals = set()
    for g in a.hyperplanes:
        if g == h:
            continue
        v = tuple(ratgeom.dot(g.normal, b) for b in basis)
        if any(v):
            normals.add(canon_normal(v))
    return Arrangement(a.dim - 1, tuple(normals))


def chamber_to_complex(a: Arrangement, ch: Chamber):
    """The maximally-biconnected complex of a chamber inside C_0 ∩ F:
    faces are the subsets I with v_I > 0 at the chamber's interior point."""
    from .complexes import _complex_from_mask
    n = a.dim
    theta = ch.witness
    if any(t <= 0 for t in theta):
        raise ValueError("chamber not inside the open orthant")
    total = sum(theta)
    fam = 0
    for bits in range(1, 1 << n):
        s = 2 * sum(theta[i] for i in range(n) if bits >> i & 1)
        if s == total:
            raise ValueError("witness lies on an arrangement hyperplane")
        if s < total:
            fam |= 1 << bits
    return _complex_from_mask(fam, n)
