"""Symbolic generators of the Cox-ring presentation and exact checks.

Polynomials are sparse dicts {monomial: coefficient} over tokenized graded
variables; monomials are sorted tuples of variable tokens.  Tokens:
("phi", i, j) with i < j (antisymmetry is normalized at construction),
("c", k), ("x", i), ("y", i), ("z", i), ("w", i).

The module generates the Plücker and σ relations, tracks the Z^n-grading,
verifies the substitution identities of the map ι (z_i ↦ c_i y_i,
w_i ↦ −c_i x_i) by exact expansion, and tests vanishing of every relation
on exact rational sample points of the variety cut out by the three
quadric equations Σc_i x_i² = Σc_i x_i y_i = Σc_i y_i² = 0.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import ratgeom


class InhomogeneousError(ValueError):
    def __init__(self, mono_a, mono_b):
        super().__init__(f"inhomogeneous: {mono_a} vs {mono_b}")
        self.monomials = (mono_a, mono_b)


# ---------------------------------------------------------------------------
# sparse polynomials

def poly(*terms) -> dict:
    """Build a polynomial from (coeff, (var, ...)) terms."""
    p = {}
    for coeff, mono in terms:
        _add_term(p, Fraction(coeff), tuple(sorted(mono)))
    return p


def _add_term(p, coeff, mono):
    if coeff == 0:
        return
    c = p.get(mono, 0) + coeff
    if c:
        p[mono] = c
    else:
        p.pop(mono, None)


def p_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for mono, c in b.items():
        _add_term(out, c, mono)
    return out


def p_scale(a: dict, s) -> dict:
    s = Fraction(s)
    return {m: c * s for m, c in a.items()} if s else {}


def p_mul(a: dict, b: dict) -> dict:
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            _add_term(out, ca * cb, tuple(sorted(ma + mb)))
    return out


def p_sub(a: dict, b: dict) -> dict:
    return p_add(a, p_scale(b, -1))


def phi(i: int, j: int) -> dict:
    """φ_{i,j} normalized: φ_{j,i} = −φ_{i,j}, φ_{i,i} = 0."""
    if i == j:
        return {}
    if i < j:
        return poly((1, (("phi", i, j),)))
    return poly((-1, (("phi", j, i),)))


def var(name: str, *idx) -> dict:
    return poly((1, ((name, *idx),)))


def var_degree(token, n: int) -> tuple:
    name = token[0]
    deg = [0] * n
    if name == "phi":
        deg[token[1] - 1] += 1
        deg[token[2] - 1] += 1
    elif name == "c":
        deg[token[1] - 1] -= 2
    elif name in ("x", "y"):
        deg[token[1] - 1] += 1
    elif name in ("z", "w"):
        deg[token[1] - 1] -= 1
    else:
        raise ValueError(f"unknown variable {token}")
    return tuple(deg)


def degree_of(p: dict, n: int) -> tuple:
    """Common Z^n-degree of all monomials; InhomogeneousError otherwise."""
    if not p:
        raise ValueError("zero polynomial has no degree")
    degs = {}
    for mono in p:
        d = tuple(sum(col) for col in
                  zip(*(var_degree(t, n) for t in mono))) if mono else (0,) * n
        degs[d] = mono
        if len(degs) > 1:
            a, b = (degs[k] for k in degs)
            raise InhomogeneousError(a, b)
    return next(iter(degs))


# ---------------------------------------------------------------------------
# relation generators

def plucker_relations(n: int) -> list:
    """φ_{ij}φ_{kl} − φ_{ik}φ_{jl} + φ_{il}φ_{jk} over i<j<k<l."""
    if n < 4:
        raise ValueError("n >= 4 required")
    out = []
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        out.append(p_add(p_sub(p_mul(phi(i, j), phi(k, l)),
                               p_mul(phi(i, k), phi(j, l))),
                         p_mul(phi(i, l), phi(j, k))))
    return out


def sigma_relations(n: int) -> list:
    """σ_{i,j} = Σ_k φ_{i,k} φ_{j,k} c_k over 1 <= i <= j <= n."""
    if n < 4:
        raise ValueError("n >= 4 required")
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = {}
            for k in range(1, n + 1):
                s = p_add(s, p_mul(p_mul(phi(i, k), phi(j, k)), var("c", k)))
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# the substitution map

def iota(p: dict) -> dict:
    """Apply z_i ↦ c_i y_i, w_i ↦ −c_i x_i to every monomial."""
    out = {}
    for mono, coeff in p.items():
        term = poly((coeff, ()))
        for t in mono:
            if t[0] == "z":
                term = p_mul(term, p_mul(var("c", t[1]), var("y", t[1])))
            elif t[0] == "w":
                term = p_mul(term, p_scale(p_mul(var("c", t[1]),
                                                 var("x", t[1])), -1))
            else:
                term = p_mul(term, poly((1, (t,))))
        out = p_add(out, term)
    return out


def j_generators(n: int) -> list:
    """The three quadrics Σc_i x_i², Σc_i x_i y_i, Σc_i y_i²."""
    qs = []
    for a, b in (("x", "x"), ("x", "y"), ("y", "y")):
        s = {}
        for i in range(1, n + 1):
            s = p_add(s, p_mul(p_mul(var("c", i), var(a, i)), var(b, i)))
        qs.append(s)
    return qs


def iota_substitution_identities(n: int) -> bool:
    """Exact expansion of ι on the six moment-map generator families."""
    if n < 4:
        raise ValueError("n >= 4 required")
    jxx, jxy, jyy = j_generators(n)

    def s(a, b):
        out = {}
        for i in range(1, n + 1):
            out = p_add(out, p_mul(var(a, i), var(b, i)))
        return out

    checks = [
        (iota(s("y", "z")), jyy),
        (iota(s("x", "w")), p_scale(jxx, -1)),
        (iota(s("x", "z")), jxy),
        (iota(s("y", "w")), p_scale(jxy, -1)),
        (iota(p_sub(s("x", "z"), s("y", "w"))), p_scale(jxy, 2)),
    ]
    for got, expect in checks:
        if got != expect:
            return False
    for i in range(1, n + 1):
        pair = p_add(p_mul(var("x", i), var("z", i)),
                     p_mul(var("y", i), var("w", i)))
        if iota(pair):
            return False
    return True


# ---------------------------------------------------------------------------
# exact sample points

@dataclass(frozen=True)
class XPoint:
    n: int
    x: tuple
    y: tuple
    c: tuple

    def __post_init__(self):
        x, y, c = (tuple(Fraction(v) for v in t)
                   for t in (self.x, self.y, self.c))
        if not len(x) == len(y) == len(c) == self.n:
            raise ValueError("length mismatch")
        for a, b in ((x, x), (x, y), (y, y)):
            if sum(ci * ai * bi for ci, ai, bi in zip(c, a, b)) != 0:
                raise ValueError("point does not satisfy the quadrics")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "c", c)


def sample_X_point(n: int, seed: int, max_retries: int = 32) -> XPoint:
    """Seeded exact point: integer (x, y) with pairwise independent pairs,
    c a nonzero integer vector in the kernel of the three quadric rows."""
    if n < 5:
        raise ValueError("n >= 5 required")
    for attempt in range(max_retries):
        rng = random.Random(seed * 0x9E3779B1 + attempt)
        x = [rng.randint(-9, 9) for _ in range(n)]
        y = [rng.randint(-9, 9) for _ in range(n)]
        if any(x[i] == y[i] == 0 for i in range(n)):
            continue
        if any(x[i] * y[j] - x[j] * y[i] == 0
               for i in range(n) for j in range(i + 1, n)):
            continue
        rows = [[x[i] * x[i] for i in range(n)],
                [x[i] * y[i] for i in range(n)],
                [y[i] * y[i] for i in range(n)]]
        kb = ratgeom.kernel_basis(rows, n)
        if len(kb) != n - 3:
            continue
        weights = [rng.randint(-9, 9) for _ in kb]
        c = tuple(sum(w * b[i] for w, b in zip(weights, kb)) for i in range(n))
        if not any(c):
            continue
        return XPoint(n, tuple(x), tuple(y), c)
    raise ValueError("no suitable sample found within retry budget")


def evaluate(p: dict, pt: XPoint):
    """Evaluate a polynomial in φ, c at a point, via φ_ij = x_i y_j − x_j y_i."""
    total = Fraction(0)
    for mono, coeff in p.items():
        v = Fraction(coeff)
        for t in mono:
            if t[0] == "phi":
                i, j = t[1], t[2]
                v *= pt.x[i - 1] * pt.y[j - 1] - pt.x[j - 1] * pt.y[i - 1]
            elif t[0] == "c":
                v *= pt.c[t[1] - 1]
            else:
                raise ValueError(f"cannot evaluate variable {t}")
        total += v
    return total


def verify_relations_vanish(pt: XPoint) -> bool:
    """All Plücker and σ relations vanish exactly at the point."""
    rels = plucker_relations(pt.n) + sigma_relations(pt.n)
    return all(evaluate(r, pt) == 0 for r in rels)
