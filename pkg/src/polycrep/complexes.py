"""Set-system combinatorics on [n].

Partitions, downward-closed complexes stored by their maximal faces,
biconnectedness, enumeration of maximally-biconnected complexes, the
Hosten-Morris counts, and the bijection between maximally-biconnected
complexes on [n] and biconnected complexes on [n-1].

Ground sets are {1..n}; internally subsets are bitmasks (bit i-1 for
element i) and a whole family of subsets is a single big int with bit s set
when the subset with mask s belongs to the family.  A maximally-biconnected
complex is exactly a downward-closed family containing precisely one of each
complementary pair {I, I^c} of nonempty proper subsets, which is what makes
the mask DFS below fast: each branch decision propagates in O(1) big-int ops.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional

MAX_ENUM_N = 9


def mask_of(members, n: int) -> int:
    m = 0
    for i in members:
        if not 1 <= i <= n:
            raise ValueError(f"element {i} outside [{n}]")
        m |= 1 << (i - 1)
    return m


def members_of(mask: int) -> frozenset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Partition:
    """Set partition of a ground subset of [n], parts sorted by minimum."""

    n: int
    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((frozenset(p) for p in self.parts), key=min))
        seen = set()
        for p in parts:
            if not p:
                raise ValueError("empty part")
            if p & seen:
                raise ValueError("parts not disjoint")
            seen |= p
        if seen and (min(seen) < 1 or max(seen) > self.n):
            raise ValueError("part outside ground range")
        object.__setattr__(self, "parts", parts)

    @property
    def ground(self) -> frozenset:
        return frozenset().union(*self.parts) if self.parts else frozenset()


@dataclass(frozen=True)
class Complex:
    """Downward-closed family of subsets of [n], stored as its maximal faces.

    maximal_faces is an antichain; the represented family is its downward
    closure.  The empty frozenset is allowed only as the sole face: it
    distinguishes the family {∅} from the family with no faces at all, a
    distinction the [n] <-> [n-1] bijection needs on the biconnected side.
    """

    n: int
    maximal_faces: tuple

    def __post_init__(self):
        faces = tuple(sorted((frozenset(f) for f in self.maximal_faces),
                             key=lambda f: tuple(sorted(f))))
        for f in faces:
            if f and (min(f) < 1 or max(f) > self.n):
                raise ValueError("face outside [n]")
        for f in faces:
            for g in faces:
                if f < g:
                    raise ValueError("maximal_faces is not an antichain")
        if any(not f for f in faces) and len(faces) > 1:
            raise ValueError("empty face must be the sole face")
        object.__setattr__(self, "maximal_faces", faces)

    def member(self, face) -> bool:
        face = frozenset(face)
        if not face:
            return bool(self.maximal_faces)
        return any(face <= f for f in self.maximal_faces)

    def to_json_obj(self) -> dict:
        return {"n": self.n,
                "maximal_faces": [sorted(f) for f in self.maximal_faces]}


def is_biconnected(d: Complex) -> bool:
    """No two faces (a face with itself included) union to [n]."""
    full = set(range(1, d.n + 1))
    faces = d.maximal_faces
    return all(set(f) | set(g) != full for f in faces for g in faces)


def is_full(d: Complex) -> bool:
    return all(d.member({i}) for i in range(1, d.n + 1))


def is_maximal_biconnected(d: Complex) -> bool:
    """Biconnected and containing exactly one of each pair {I, I^c}.

    The complementary-pair criterion is the implemented notion of maximality
    (it is what the classification results rely on); the add-a-face probing
    test is kept in the test suite as a debug oracle for small n.
    """
    if not is_biconnected(d):
        return False
    n = d.n
    face_masks = [mask_of(f, n) for f in d.maximal_faces]
    full = (1 << n) - 1

    def member(m):
        return any(m & fm == m for fm in face_masks)

    for s in range(1, full):
        if member(s) == member(full ^ s):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration of maximally-biconnected complexes

@functools.lru_cache(maxsize=None)
def _tables(n: int):
    """down/up closure masks and complement-image masks, per subset of [n]."""
    full = (1 << n) - 1
    nsub = 1 << n
    down = [0] * nsub
    up = [0] * nsub
    for s in range(1, nsub):
        t, m = s, 0
        while True:
            if t:
                m |= 1 << t
            if t == 0:
                break
            t = (t - 1) & s
        down[s] = m
        rest = full ^ s
        t, m = rest, 0
        while True:
            m |= 1 << (s | t)
            if t == 0:
                break
            t = (t - 1) & rest
        up[s] = m

    def comp_image(mask):
        out = 0
        while mask:
            b = mask & -mask
            out |= 1 << (full ^ (b.bit_length() - 1))
            mask ^= b
        return out

    compdown = [comp_image(m) for m in down]
    compup = [comp_image(m) for m in up]
    return down, up, compdown, compup


def _pair_reps(n: int):
    """One representative per complementary pair {I, I^c}: the side containing
    element 1, ordered lexicographically by sorted member tuple."""
    full = (1 << n) - 1
    reps = [s for s in range(1, full) if s & 1]
    reps.sort(key=lambda s: tuple(i for i in range(n) if s >> i & 1))
    return reps


def _iter_max_biconnected_masks(n: int) -> Iterator[int]:
    """Yield each maximally-biconnected complex on [n] as a family bitmask
    (bit s set <=> subset-mask s is a face), in deterministic DFS order with
    the 'representative in' branch explored first."""
    down, up, compdown, compup = _tables(n)
    reps = _pair_reps(n)
    nreps = len(reps)
    stack = [(0, 0, 0)]
    while stack:
        idx, inm, outm = stack.pop()
        while idx < nreps and ((inm >> reps[idx]) & 1 or (outm >> reps[idx]) & 1):
            idx += 1
        if idx == nreps:
            yield inm
            continue
        r = reps[idx]
        # branch "r out" pushed first so that "r in" is explored first
        nin, nout = inm | compup[r], outm | up[r]
        if not nin & nout:
            stack.append((idx + 1, nin, nout))
        nin, nout = inm | down[r], outm | compdown[r]
        if not nin & nout:
            stack.append((idx + 1, nin, nout))


def _mask_is_full(inm: int, n: int) -> bool:
    return all(inm >> (1 << i) & 1 for i in range(n))


def _maximal_faces_of_mask(inm: int, n: int):
    """Maximal faces of a family bitmask, as subset masks."""
    up = _tables(n)[1]
    out = []
    m = inm
    while m:
        b = m & -m
        s = b.bit_length() - 1
        if up[s] & inm == 1 << s:
            out.append(s)
        m ^= b
    return out


def _complex_from_mask(inm: int, n: int) -> Complex:
    return Complex(n, tuple(members_of(s) for s in _maximal_faces_of_mask(inm, n)))


def enumerate_max_biconnected(n: int, full_only: bool = False) -> Iterator[Complex]:
    """All maximally-biconnected complexes on [n], deterministic order."""
    if not 4 <= n <= MAX_ENUM_N:
        raise ValueError(f"n={n} outside supported range 4..{MAX_ENUM_N}")
    for inm in _iter_max_biconnected_masks(n):
        if full_only and not _mask_is_full(inm, n):
            continue
        yield _complex_from_mask(inm, n)


def count_max_biconnected(n: int, prefix: Optional[tuple] = None) -> int:
    """Count of maximally-biconnected complexes on [n].

    prefix optionally fixes the first k pair decisions (True = representative
    side in); this is the split point for parallel counting.
    """
    if not 4 <= n <= MAX_ENUM_N:
        raise ValueError(f"n={n} outside supported range 4..{MAX_ENUM_N}")
    down, up, compdown, compup = _tables(n)
    reps = _pair_reps(n)
    inm = outm = 0
    for k, side_in in enumerate(prefix or ()):
        r = reps[k]
        if (inm >> r) & 1 or (outm >> r) & 1:
            if side_in != bool((inm >> r) & 1):
                return 0
            continue
        if side_in:
            inm, outm = inm | down[r], outm | compdown[r]
        else:
            inm, outm = inm | compup[r], outm | up[r]
        if inm & outm:
            return 0
    nreps = len(reps)
    start = len(prefix or ())
    count = 0
    stack = [(start, inm, outm)]
    while stack:
        idx, inm, outm = stack.pop()
        while idx < nreps and ((inm >> reps[idx]) & 1 or (outm >> reps[idx]) & 1):
            idx += 1
        if idx == nreps:
            count += 1
            continue
        r = reps[idx]
        nin, nout = inm | compup[r], outm | up[r]
        if not nin & nout:
            stack.append((idx + 1, nin, nout))
        nin, nout = inm | down[r], outm | compdown[r]
        if not nin & nout:
            stack.append((idx + 1, nin, nout))
    return count


def _count_biconnected_families(m: int) -> int:
    """Number of biconnected complexes on [m], counting the empty family and
    the family {∅} separately (the two preimages of 'no nonempty face')."""
    down, up, _, _ = _tables(m)
    full = (1 << m) - 1
    items = [s for s in range(1, full)]  # [m] itself can never be a face
    items.sort(key=lambda s: tuple(i for i in range(m) if s >> i & 1))
    nitems = len(items)
    count = 0
    stack = [(0, 0, 0)]
    while stack:
        idx, inm, outm = stack.pop()
        while idx < nitems and ((inm >> items[idx]) & 1 or (outm >> items[idx]) & 1):
            idx += 1
        if idx == nitems:
            count += 1
            continue
        s = items[idx]
        nin, nout = inm, outm | up[s]
        if not nin & nout:
            stack.append((idx + 1, nin, nout))
        # s in: subsets of s in; any J with s ∪ J = [m], i.e. J ⊇ s^c, out
        nin, nout = inm | down[s], outm | up[full ^ s]
        if not nin & nout:
            stack.append((idx + 1, nin, nout))
    return count + 1  # +1 for the family {∅}


def hosten_morris(n: int) -> int:
    """λ(n), computed two independent ways (cross-checked)."""
    if not 4 <= n <= 7:
        raise ValueError("hosten_morris supported for 4 <= n <= 7")
    a = count_max_biconnected(n)
    b = _count_biconnected_families(n - 1)
    if a != b:
        raise AssertionError(
            f"Hosten-Morris self-check failed for n={n}: {a} != {b}")
    return a


# ---------------------------------------------------------------------------
# the [n] <-> [n-1] bijection

def max_biconnected_to_biconnected(d: Complex) -> Complex:
    """Image of a maximally-biconnected complex on [n] under the bijection
    with biconnected complexes on [n-1].

    Membership rule: K ∈ image <=> K ∪ {n} ∈ d, including K = ∅ (which is in
    the image exactly when {n} ∈ d, encoded by the sole-empty-face family).
    """
    if not is_maximal_biconnected(d):
        raise ValueError("input is not maximally biconnected")
    n = d.n
    m = n - 1
    faces = [frozenset(f) - {n} for f in d.maximal_faces if n in f]
    if faces:
        maximal = [f for f in faces if not any(f < g for g in faces)]
        return Complex(m, tuple(set(maximal)))
    if d.member({n}):
        return Complex(m, (frozenset(),))
    return Complex(m, ())


def biconnected_to_max_biconnected(d: Complex, n: Optional[int] = None) -> Complex:
    """Inverse of max_biconnected_to_biconnected; d lives on [n-1]."""
    if n is None:
        n = d.n + 1
    m = n - 1
    if d.n != m:
        raise ValueError("ground-set mismatch")
    if not is_biconnected(d):
        raise ValueError("input is not biconnected")
    full_m = frozenset(range(1, m + 1))
    faces = set()
    for kmask in range(1 << m):
        k = members_of(kmask)
        if d.member(k):
            faces.add(k | {n})
        comp = full_m - k
        if not d.member(comp):  # member(∅) = "family has any face"
            faces.add(k)
    faces.discard(frozenset())
    maximal = [f for f in faces if not any(f < g for g in faces)]
    return Complex(n, tuple(maximal))


# ---------------------------------------------------------------------------
# partitions

def refines(q: Partition, p: Partition) -> bool:
    """Every part of q contained in some part of p (same ground set)."""
    if q.n != p.n or q.ground != p.ground:
        raise ValueError("ground-set mismatch")
    return all(any(a <= b for b in p.parts) for a in q.parts)


def enumerate_partitions(ground, n: int, min_parts: int = 1) -> Iterator[Partition]:
    """Set partitions of a ground subset of [n] with >= min_parts parts,
    in restricted-growth-string order."""
    elems = sorted(ground)
    if not elems:
        raise ValueError("ground must be nonempty")
    k = len(elems)

    def rec(i, rgs, maxblock):
        if i == k:
            if maxblock + 1 >= min_parts:
                parts = [[] for _ in range(maxblock + 1)]
                for e, b in zip(elems, rgs):
                    parts[b].append(e)
                yield Partition(n, tuple(frozenset(p) for p in parts))
            return
        for b in range(maxblock + 2):
            yield from rec(i + 1, rgs + [b], max(maxblock, b))

    yield from rec(1, [0], 0)
