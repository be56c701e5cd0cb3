"""The 2-to-1 verifier, equivalence machinery, constructive families and
pointwise checks of the elimination identities behind the quadrinomial
families.

A mapping f on GF(2^n) is 2-to-1 when every fiber has size 0 or 2 (a
half-size image is necessary but not sufficient: fiber profiles like
(3, 1, 2, ..., 2) also reach 2^(n-1) values).  Verification is a single pass
over the domain with early exit on the first fiber of size 3; the domain is
walked multiplicatively (x = g^i) so each sparse term advances by one fixed
multiplication per point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import FieldCtx
from .poly import (
    BivarPoly,
    DensePoly,
    SparsePoly,
    equal_up_to_scalar,
    poly_product,
    reduce_exponents,
    resultant_eliminate,
)
from .tabledata import table1

HISTOGRAM_MAX_N = 24
OPOLY_MAX_N = 16
MUL_TABLE_MAX_N = 18

__all__ = [
    "PreimageHistogram",
    "preimage_histogram",
    "value_table",
    "is_two_to_one",
    "shift_criterion",
    "monomial_two_to_one",
    "is_o_polynomial",
    "o_orbit",
    "square_map",
    "qm_transforms",
    "qm_canonical",
    "qm_shape_orbit",
    "FamilyId",
    "FAMILY_TAGS",
    "family_admissibility_error",
    "admissible_family_tags",
    "make_family",
    "alpha_roots",
    "omega_roots",
    "IdentityCheck",
    "verify_resultant_identity",
    "ELIMINATION_IDENTITIES",
    "point_count_curve",
    "point_count_lower_bound",
]


# ---------------------------------------------------------------------------
# domain scans


@dataclass(frozen=True)
class PreimageHistogram:
    """Fiber sizes of a mapping: image value -> number of preimages."""

    n: int
    counts: dict[int, int]

    @property
    def image_size(self) -> int:
        return len(self.counts)

    @property
    def is_two_to_one(self) -> bool:
        return all(c == 2 for c in self.counts.values())

    def fiber_of(self, v: int) -> int:
        return self.counts.get(v, 0)


def _stepping_terms(f: SparsePoly):
    """Split a reduced polynomial into (constant part, per-term data).

    Each positive-exponent term c*x^e contributes the sequence c*g^(i*e) over
    the points g^i; advancing i is one multiplication by g^e.  The constant
    part is also f(0): reduced positive exponents vanish at 0 and exponent 0
    contributes everywhere.
    """
    ctx = f.ctx
    const = 0
    starts = []
    steps = []
    for e, c in f.terms:
        if e == 0:
            const ^= c
        else:
            starts.append(c)
            steps.append(ctx.pow(ctx.generator, e))
    return const, starts, steps


def _budget_check(ctx: FieldCtx, cap: int, what: str) -> None:
    if ctx.n > cap:
        raise ValueError(f"{what} capped at n={cap}, got n={ctx.n}")


def value_table(f: SparsePoly) -> list[int]:
    """V with V[x] = f(x) for every field element x."""
    ctx = f.ctx
    _budget_check(ctx, HISTOGRAM_MAX_N, "full-domain scan")
    fr = reduce_exponents(f)
    const, starts, steps = _stepping_terms(fr)
    V = [0] * ctx.order
    V[0] = const
    use_tables = ctx.n <= MUL_TABLE_MAX_N
    tabs = [ctx.mul_table(s) for s in steps] if use_tables else None
    tg = ctx.mul_table(ctx.generator) if use_tables else None
    cur = list(starts)
    p = 1
    mul = ctx.mul
    g = ctx.generator
    for _ in range(ctx.order - 1):
        v = const
        for u in cur:
            v ^= u
        V[p] = v
        if use_tables:
            p = tg[p]
            for j, t in enumerate(tabs):
                cur[j] = t[cur[j]]
        else:
            p = mul(p, g)
            for j, s in enumerate(steps):
                cur[j] = mul(cur[j], s)
    return V


def preimage_histogram(f: SparsePoly) -> PreimageHistogram:
    """Exact fiber sizes by one pass over the domain (n <= 24)."""
    ctx = f.ctx
    V = value_table(f)
    counts: dict[int, int] = {}
    for v in V:
        counts[v] = counts.get(v, 0) + 1
    return PreimageHistogram(ctx.n, counts)


def is_two_to_one(f: SparsePoly) -> bool:
    """Whether every fiber of f has size 0 or 2; early exit on a size-3 fiber."""
    ctx = f.ctx
    _budget_check(ctx, HISTOGRAM_MAX_N, "full-domain scan")
    fr = reduce_exponents(f)
    const, starts, steps = _stepping_terms(fr)
    counts = bytearray(ctx.order)
    counts[const] = 1
    k = len(starts)
    if ctx.n <= MUL_TABLE_MAX_N and k in (1, 2, 3, 4):
        tabs = [ctx.mul_table(s) for s in steps]
        if k == 1:
            (u0,), (t0,) = starts, tabs
            for _ in range(ctx.order - 1):
                v = const ^ u0
                c = counts[v]
                if c == 2:
                    return False
                counts[v] = c + 1
                u0 = t0[u0]
        elif k == 2:
            (u0, u1), (t0, t1) = starts, tabs
            for _ in range(ctx.order - 1):
                v = const ^ u0 ^ u1
                c = counts[v]
                if c == 2:
                    return False
                counts[v] = c + 1
                u0 = t0[u0]
                u1 = t1[u1]
        elif k == 3:
            (u0, u1, u2), (t0, t1, t2) = starts, tabs
            for _ in range(ctx.order - 1):
                v = const ^ u0 ^ u1 ^ u2
                c = counts[v]
                if c == 2:
                    return False
                counts[v] = c + 1
                u0 = t0[u0]
                u1 = t1[u1]
                u2 = t2[u2]
        else:
            (u0, u1, u2, u3), (t0, t1, t2, t3) = starts, tabs
            for _ in range(ctx.order - 1):
                v = const ^ u0 ^ u1 ^ u2 ^ u3
                c = counts[v]
                if c == 2:
                    return False
                counts[v] = c + 1
                u0 = t0[u0]
                u1 = t1[u1]
                u2 = t2[u2]
                u3 = t3[u3]
    else:
        mul = ctx.mul
        cur = list(starts)
        for _ in range(ctx.order - 1):
            v = const
            for u in cur:
                v ^= u
            c = counts[v]
            if c == 2:
                return False
            counts[v] = c + 1
            for j, s in enumerate(steps):
                cur[j] = mul(cur[j], s)
    return 1 not in counts


def shift_criterion(f: SparsePoly) -> bool:
    """Whether f(x+a) + f(a) = 0 has exactly two roots for every a.

    Equivalent to is_two_to_one (the count is the size of a's own fiber);
    kept as a literally different pass for cross-checking.
    """
    ctx = f.ctx
    V = value_table(f)
    for a in ctx.elements():
        va = V[a]
        cnt = 0
        for x in ctx.elements():
            if V[x ^ a] == va:
                cnt += 1
                if cnt > 2:
                    return False
        if cnt != 2:
            return False
    return True


def monomial_two_to_one(d: int, q: int) -> bool:
    """Whether x^d (up to a nonzero scalar) is 2-to-1 over a field of order q.

    For q = 2^n this is always false: q - 1 is odd, so gcd(d, q-1) != 2.
    """
    if d < 1:
        raise ValueError("exponent must be positive")
    return math.gcd(d, q - 1) == 2


def is_o_polynomial(f: SparsePoly) -> bool:
    """f(0) = 0 and f(x) + a*x is 2-to-1 for every nonzero a."""
    ctx = f.ctx
    _budget_check(ctx, OPOLY_MAX_N, "o-polynomial test")
    fr = reduce_exponents(f)
    if fr.eval(0) != 0:
        return False
    V = value_table(fr)
    order = ctx.order
    for a in ctx.nonzero():
        Ta = ctx.mul_table(a)
        counts = bytearray(order)
        for x in range(order):
            v = V[x] ^ Ta[x]
            c = counts[v]
            if c == 2:
                break
            counts[v] = c + 1
        else:
            if 1 not in counts:
                continue
        return False
    return True


def square_map(f: SparsePoly) -> SparsePoly:
    """The reduced polynomial inducing x -> f(x)^2.

    Post-composing with the squaring bijection preserves fiber sizes, so f
    and square_map(f) are 2-to-1 together; families stated via f^2 are
    therefore verified on f itself.
    """
    ctx = f.ctx
    return reduce_exponents(SparsePoly.make(ctx, ((2 * e, ctx.sqr(c)) for e, c in f.terms)))


# ---------------------------------------------------------------------------
# o-monomial orbits and quasi-multiplicative equivalence


def o_orbit(k: int, n: int) -> set[int]:
    """The six fractional-exponent companions of x^k, mod 2^n - 1.

    {k, 1/k, 1-k, 1/(1-k), k/(k-1), (k-1)/k}; requires both k and k-1 prime
    to 2^n - 1 so every entry exists.
    """
    N = (1 << n) - 1
    g = math.gcd(k, N)
    if g != 1:
        raise ValueError(f"gcd(k, 2^n-1) = {g} != 1")
    g = math.gcd(k - 1, N)
    if g != 1:
        raise ValueError(f"gcd(k-1, 2^n-1) = {g} != 1")
    ik = pow(k, -1, N)
    ik1 = pow((k - 1) % N, -1, N)
    orbit = {
        k % N,
        ik,
        (1 - k) % N,
        pow((1 - k) % N, -1, N),
        k * ik1 % N,
        (k - 1) * ik % N,
    }
    assert all(1 <= e <= N - 1 for e in orbit)
    return orbit


def qm_transforms(f: SparsePoly):
    """Yield the term tuple of every monic transform of a*f(b*x^d).

    d runs over the units mod 2^n - 1, b over the nonzero elements, and a is
    fixed by normalizing the leading coefficient to 1.  Exponents are reduced
    representatives, so distinct exponents stay distinct under every d.
    """
    ctx = f.ctx
    fr = reduce_exponents(f)
    if fr.is_zero:
        raise ValueError("the zero polynomial has no transforms")
    N = ctx.order - 1
    exps = fr.exponents()
    coefs = fr.coeffs()
    k = len(exps)
    mul = ctx.mul
    use_tables = ctx.n <= MUL_TABLE_MAX_N
    steps = [ctx.pow(ctx.generator, e % N) for e in exps]
    tabs = [ctx.mul_table(s) for s in steps] if use_tables else None
    # inverse lookup from the power sequence: (g^i)^-1 = g^(N-i)
    powers = [0] * N
    p = 1
    for i in range(N):
        powers[i] = p
        p = mul(p, ctx.generator)
    inv_tab = [0] * ctx.order
    for i in range(N):
        inv_tab[powers[i]] = powers[(N - i) % N]
    for d in range(1, N + 1):
        if math.gcd(d, N) != 1:
            continue
        new_exps = tuple((e * d - 1) % N + 1 if e > 0 else 0 for e in exps)
        order_ix = sorted(range(k), key=lambda j: -new_exps[j])
        sorted_exps = tuple(new_exps[j] for j in order_ix)
        lead = order_ix[0]
        cur = list(coefs)
        for _ in range(N):
            a = inv_tab[cur[lead]]
            if a == 1:
                yield tuple((sorted_exps[i], cur[order_ix[i]]) for i in range(k))
            else:
                yield tuple((sorted_exps[i], mul(a, cur[order_ix[i]])) for i in range(k))
            if use_tables:
                for j in range(k):
                    cur[j] = tabs[j][cur[j]]
            else:
                for j in range(k):
                    cur[j] = mul(cur[j], steps[j])


def qm_canonical(f: SparsePoly) -> SparsePoly:
    """The minimum transform under (exponent sequence, coefficient bits) order.

    Two polynomials are QM-equivalent exactly when their canonicals agree.
    Cost is (2^n - 1) * phi(2^n - 1) transforms; intended for dedupe, never
    for verification hot loops.
    """
    best = min(qm_transforms(f))
    return SparsePoly(f.ctx, best)


def qm_shape_orbit(f: SparsePoly, shape_ok=None) -> set[tuple]:
    """Distinct monic transforms of f, optionally filtered by a shape predicate."""
    out = set()
    for terms in qm_transforms(f):
        if shape_ok is None or shape_ok(terms):
            out.add(terms)
    return out


# ---------------------------------------------------------------------------
# constructive families


@dataclass(frozen=True)
class FamilyId:
    tag: str
    n: int

    def admissibility_error(self) -> str | None:
        return family_admissibility_error(self.tag, self.n)

    def __str__(self) -> str:
        return f"{self.tag}@n={self.n}"


def alpha_roots(ctx: FieldCtx, m: int) -> list[int]:
    """All roots of z^(2^m) + z + 1 in the field (the n = 2m trinomial parameter)."""
    return [z for z in ctx.elements() if ctx.frobenius(z, m) ^ z ^ 1 == 0]


def omega_roots(ctx: FieldCtx) -> list[int]:
    """The two elements of order 3 (roots of z^2 + z + 1); requires n even."""
    return [z for z in ctx.elements() if ctx.sqr(z) ^ z ^ 1 == 0]


def _smallest(roots: list[int], what: str) -> int:
    if not roots:
        raise ValueError(f"no root found for {what}: admissibility predicate is broken")
    return min(roots)


def _deg5_rows() -> list[tuple[int, int, int]]:
    return [tuple(r) for r in table1()["sporadic"]]


def _odd(n: int) -> str | None:
    return None if n % 2 == 1 else f"requires odd n, got n={n}"


def _even_ge4(n: int) -> str | None:
    return None if n % 2 == 0 and n >= 4 else f"requires even n >= 4, got n={n}"


def _n2m_modd(n: int) -> str | None:
    if n % 2 != 0 or (n // 2) % 2 != 1 or n < 6:
        return f"requires n = 2m with m odd and m >= 3, got n={n}"
    return None


def _n3m(n: int) -> str | None:
    return None if n % 3 == 0 else f"requires n = 3m, got n={n}"


def _n3m_m_not_1_mod_3(n: int) -> str | None:
    if n % 3 != 0:
        return f"requires n = 3m, got n={n}"
    if (n // 3) % 3 == 1:
        return f"requires m not congruent to 1 mod 3, got m={n // 3}"
    return None


def _n3(n: int) -> str | None:
    return None if n == 3 else f"fixed GF(2^3) data, got n={n}"


def _bin(k_of):
    def build(ctx: FieldCtx, param=None):
        return [(k_of(ctx.n), 1), (1, 1)]

    return build


def _glynn_pi(n: int) -> int:
    return pow(4, -1, n)


def _tri_1(ctx: FieldCtx, param=None):
    m = ctx.n // 2
    alpha = _smallest(alpha_roots(ctx, m), f"z^(2^{m}) + z + 1") if param is None else param
    return [((1 << ctx.n) - (1 << m), 1), ((1 << ctx.n) - (1 << m) - 1, 1), (1, alpha)]


def _tri_2(ctx: FieldCtx, param=None):
    n = ctx.n
    m = n // 2
    omega = _smallest(omega_roots(ctx), "z^2 + z + 1") if param is None else param
    k = ((1 << (n - 1)) + (1 << m) - 1) // 3
    return [(k, 1), (1 << m, 1), (1, omega)]


def _quad(exps_of):
    def build(ctx: FieldCtx, param=None):
        return [(e, 1) for e in exps_of(ctx.n)]

    return build


def _deg5_sporadic(row: int):
    def build(ctx: FieldCtx, param=None):
        e3, e2, e1 = _deg5_rows()[row - 1]
        g = ctx.generator
        return [(5, 1), (3, ctx.pow(g, e3)), (2, ctx.pow(g, e2)), (1, ctx.pow(g, e1))]

    return build


def _deg5_family(exp: int):
    def build(ctx: FieldCtx, param=None):
        c = 1 if param is None else param
        if c == 0:
            raise ValueError("free coefficient of a degree-5 family row must be nonzero")
        return [(5, 1), (exp, c)]

    return build


def _quad01(n):
    m1 = 1 << ((n + 1) // 2)  # 2^(m+1) for n = 2m+1
    return (m1 + 2, m1, 2, 1)


def _quad02(n):
    m1 = 1 << ((n + 1) // 2)
    return (m1 + 2, m1 + 1, 2, 1)


def _quad03(n):
    m1 = 1 << ((n + 1) // 2)
    return (2 * m1 + 4, m1 + 2, 2, 1)


def _quad04(n):
    m1 = 1 << ((n + 1) // 2)
    return ((1 << n) - m1 + 2, m1, 2, 1)


def _quad05(n):
    m1 = 1 << ((n + 1) // 2)
    return ((1 << n) - 2, (1 << n) - m1, (1 << n) - m1 - 2, 1)


def _quad06(n):
    m1 = 1 << ((n + 1) // 2)
    return ((1 << n) - 2, (1 << n) - m1, m1 - 1, 1)


def _quad07(n):
    return ((1 << n) - 2, (1 << (n - 1)) + 1, (1 << (n - 1)) - 2, 1)


def _quad11(n):
    m = n // 3
    return ((1 << 2 * m) + (1 << m), (1 << 2 * m) + 1, (1 << m) + 1, 1)


def _quad12(n):
    m = n // 3
    return ((1 << 2 * m) + 1, 1 << (m + 1), (1 << m) + 1, 1)


_FAMILIES: dict[str, tuple] = {
    "bin_singer": (_odd, _bin(lambda n: 2)),
    "bin_segre": (_odd, _bin(lambda n: 6)),
    "bin_glynn1": (_odd, _bin(lambda n: (1 << ((n + 1) // 2)) + (1 << _glynn_pi(n)))),
    "bin_glynn2": (_odd, _bin(lambda n: 3 * (1 << ((n + 1) // 2)) + 4)),
    "bin_even_inv": (
        lambda n: None if n % 2 == 0 else f"requires even n, got n={n}",
        _bin(lambda n: (1 << n) - 2),
    ),
    "tri_I": (_even_ge4, _tri_1),
    "tri_II": (_n2m_modd, _tri_2),
    "quad_01": (_odd, _quad(_quad01)),
    "quad_02": (_odd, _quad(_quad02)),
    "quad_03": (_odd, _quad(_quad03)),
    "quad_04": (_odd, _quad(_quad04)),
    "quad_05": (_odd, _quad(_quad05)),
    "quad_06": (_odd, _quad(_quad06)),
    "quad_07": (_odd, _quad(_quad07)),
    "quad_08": (_odd, _quad(lambda n: ((1 << n) - 2, (1 << n) - 4, 3, 1))),
    "quad_09": (_odd, _quad(lambda n: (6, 4, 3, 1))),
    "quad_10": (_odd, _quad(lambda n: (6, 5, 3, 1))),
    "quad_11": (_n3m, _quad(_quad11)),
    "quad_12": (_n3m_m_not_1_mod_3, _quad(_quad12)),
}


for _r in range(1, 22):
    _FAMILIES[f"deg5_row_{_r:02d}"] = (_n3, _deg5_sporadic(_r))
_FAMILIES["deg5_row_22"] = (_n3, _deg5_family(3))
_FAMILIES["deg5_row_23"] = (_n3, _deg5_family(2))

FAMILY_TAGS = tuple(_FAMILIES)


def _normalize_tag(tag: str) -> str:
    if tag in _FAMILIES:
        return tag
    head, _, num = tag.rpartition("_")
    if num.isdigit():
        padded = f"{head}_{int(num):02d}"
        if padded in _FAMILIES:
            return padded
    raise ValueError(f"unknown family {tag!r}; known: {', '.join(FAMILY_TAGS)}")


def family_admissibility_error(tag: str, n: int) -> str | None:
    adm, _ = _FAMILIES[_normalize_tag(tag)]
    return adm(n)


def admissible_family_tags(n: int) -> list[str]:
    return [t for t in FAMILY_TAGS if _FAMILIES[t][0](n) is None]


def make_family(tag: str | FamilyId, ctx: FieldCtx, param: int | None = None) -> SparsePoly:
    """The literal polynomial of the named family over ctx.

    Element parameters (alpha, omega) are the lexicographically smallest
    admissible root unless overridden via param; inadmissible n is rejected
    with the violated condition.
    """
    if isinstance(tag, FamilyId):
        if tag.n != ctx.n:
            raise ValueError(f"{tag} does not match the field degree n={ctx.n}")
        tag = tag.tag
    tag = _normalize_tag(tag)
    adm, build = _FAMILIES[tag]
    err = adm(ctx.n)
    if err is not None:
        raise ValueError(f"family {tag} is not admissible: {err}")
    return SparsePoly.make(ctx, build(ctx, param))


# ---------------------------------------------------------------------------
# point-count curve for the degree-5 falsification argument


def point_count_curve(ctx: FieldCtx, a3: int, a2: int, a1: int) -> BivarPoly:
    """The degree-14 plane curve attached to the normalized quintic
    x^5 + a3 x^3 + a2 x^2 + a1 x.

    G(X, Y) = L2(Y)^2 (X^2 + X) + L1(Y), where L1/L2^2 is the trace argument
    of the resolvent-cubic condition for the shifted quartic at a = Y.  Each
    admissible shift contributes two points, so a 2-to-1 quintic forces at
    least 2 (2^n - 9) affine points.
    """
    mul, pw = ctx.mul, ctx.pow
    a2_2, a2_3, a2_4 = pw(a2, 2), pw(a2, 3), pw(a2, 4)
    a3_2, a3_3, a3_4, a3_5, a3_6 = (pw(a3, i) for i in range(2, 7))
    l1 = [
        a2_4 ^ a3_6,
        mul(a2, a3_4),
        a3_5,
        a2_3,
        pw(a1, 2) ^ a3_4 ^ mul(a2_2, a3),
        mul(a2, a3_2),
        a3_3,
        0,
        a3_2,
        0,
        0,
        0,
        1,
    ]
    l2 = DensePoly.make(ctx, (a2_2, mul(a2, a3), a1, 0, a3, 0, 1))
    l2sq = l2 * l2
    ycoeffs = [
        DensePoly.make(ctx, (l1[j], l2sq.coeff(j), l2sq.coeff(j))) for j in range(13)
    ]
    return BivarPoly.make(ctx, ycoeffs)


def point_count_lower_bound(n: int) -> int:
    """2 (2^n - 9); vacuous below n = 4."""
    return 2 * ((1 << n) - 9)


# ---------------------------------------------------------------------------
# elimination identities behind the quadrinomial families 1..6
#
# Each family proof eliminates y (= x^(2^(m+1)) linked to x) from a pair of
# bivariate relations F, G derived from f(x+a) + f(a) = 0 and its Frobenius
# image.  The closed-form eliminants are pinned here, with exact factor
# multiplicities confirmed against both the fraction-free and the cofactor
# determinant; identities 1 and 2 carry (x+a+1) squared.


@dataclass(frozen=True)
class IdentityCheck:
    theorem: int
    n: int
    ok: bool
    failing_a: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _elimination_pair(theorem: int, ctx: FieldCtx, a: int):
    m = (ctx.n - 1) // 2
    b = ctx.pow(a, 1 << (m + 1))
    mul, pw = ctx.mul, ctx.pow
    a2, a3, a4, a6 = pw(a, 2), pw(a, 3), pw(a, 4), pw(a, 6)
    b2, b3, b4 = pw(b, 2), pw(b, 3), pw(b, 4)
    ab = mul(a, b)

    def D(*coeffs):
        return DensePoly.make(ctx, coeffs)

    def lin(c1, c0):
        return DensePoly.make(ctx, (c0, c1))

    if theorem == 1:
        F = BivarPoly.make(ctx, [D(0, 1, b ^ 1), D(a2 ^ 1, 0, 1)])
        G = BivarPoly.make(ctx, [D(0, 0, b2 ^ 1), D(1), D(a2 ^ 1, 0, 1)])
        closed = [
            lin(1, 0),
            lin(1, a ^ 1),
            lin(1, a ^ 1),
            lin(mul(a2, b2) ^ a2 ^ b2 ^ b ^ 1, 1),
        ]
    elif theorem == 2:
        F = BivarPoly.make(ctx, [D(0, b ^ 1, b ^ 1), D(a2 ^ a, 1, 1)])
        G = BivarPoly.make(ctx, [D(0, 0, b2 ^ b), D(a2 ^ 1, 0, 1), D(a2 ^ 1, 0, 1)])
        closed = [
            D(mul(a ^ 1, b ^ 1)),
            lin(1, 0),
            lin(1, a ^ 1),
            lin(1, a ^ 1),
            lin(ab ^ a ^ b, a),
        ]
    elif theorem == 3:
        F = BivarPoly.make(ctx, [D(0, 1, b ^ 1, 0, b2), D(a2, 0, 1), D(a4, 0, 0, 0, 1)])
        G = BivarPoly.make(
            ctx,
            [
                D(0, 0, b2, 0, b4),
                D(1),
                D(a2 ^ 1, 0, 1),
                DensePoly.zero(ctx),
                D(a4, 0, 0, 0, 1),
            ],
        )
        closed = (
            [lin(1, 0)] * 2
            + [lin(1, a)] * 8
            + [lin(b, 1)] * 2
            + [lin(mul(a2, b) ^ 1, a2)] * 2
            + [lin(mul(a2, b2) ^ b ^ 1, 1)] * 2
        )
    elif theorem == 4:
        F = BivarPoly.make(
            ctx,
            [
                D(0, mul(a2, b) ^ b2, ab ^ b2, b),
                D(a3 ^ b2, b, b),
                D(b),
            ],
        )
        G = BivarPoly.make(
            ctx,
            [
                D(0, 0, a4 ^ b3, 0, a2),
                D(mul(b2, a2) ^ a4, 0, a2),
                D(mul(a2, b) ^ a4, 0, a2),
                D(a2),
            ],
        )
        closed = [
            D(mul(pw(a ^ b, 3), pw(a2 ^ b, 2))),
            lin(1, 0),
            lin(1, a),
            lin(1, a),
            lin(b, a2),
            lin(a, b),
            lin(ab, a3 ^ ab ^ b2),
        ]
    elif theorem == 5:
        F = BivarPoly.make(
            ctx,
            [
                D(0, mul(a2, b2) ^ mul(a2, b) ^ b2 ^ b, mul(a, b2) ^ ab),
                D(a3 ^ a, mul(a2, b) ^ a2 ^ b ^ 1, ab),
            ],
        )
        G = BivarPoly.make(
            ctx,
            [
                D(0, 0, b3 ^ b),
                D(mul(a4, b2) ^ mul(a2, b2) ^ a4 ^ a2, 0, mul(a2, b2) ^ b2 ^ a2 ^ 1),
                D(mul(a4, b) ^ mul(a2, b), 0, mul(a2, b)),
            ],
        )
        closed = [
            D(mul(ab, mul(pw(a ^ 1, 2), pw(b ^ 1, 2)))),
            lin(1, 0),
            lin(1, a),
            lin(1, a),
            lin(1, a ^ 1),
            lin(1, a ^ 1),
            lin(ab, mul(a2, b) ^ a2 ^ b ^ 1),
        ]
    elif theorem == 6:
        F = BivarPoly.make(
            ctx,
            [
                D(0, mul(a2, b2) ^ mul(a2, b) ^ b3 ^ b2, mul(a, b2) ^ ab),
                D(a3 ^ mul(a, b2), mul(a2, b) ^ a2 ^ b2 ^ b, ab),
                D(ab),
            ],
        )
        G = BivarPoly.make(
            ctx,
            [
                D(0, 0, b3 ^ mul(a4, b), 0, mul(a2, b)),
                D(mul(a4, b2) ^ mul(a2, b2) ^ a6 ^ a4, 0, mul(a2, b2) ^ b2 ^ a4 ^ a2),
                D(mul(a4, b) ^ mul(a2, b), 0, mul(a2, b)),
            ],
        )
        closed = (
            [D(mul(a2, b2))]
            + [lin(1, 0)] * 2
            + [lin(1, a)] * 2
            + [lin(b, ab ^ a)] * 2
            + [lin(a, a2 ^ 1)] * 2
            + [lin(a, a2 ^ b)] * 2
        )
    else:
        raise ValueError(f"identity {theorem} unknown; expected 1..6")
    return F, G, poly_product(ctx, closed)


ELIMINATION_IDENTITIES = (1, 2, 3, 4, 5, 6)


def verify_resultant_identity(theorem: int, ctx: FieldCtx) -> IdentityCheck:
    """Pointwise check of the closed-form eliminant for quadrinomial family
    1..6: for every a outside {0, 1} (the degenerate values the derivations
    exclude), the Sylvester eliminant of the pair (F, G) must equal the pinned
    product up to a nonzero scalar.
    """
    if ctx.n % 2 == 0 or ctx.n > 9:
        raise ValueError(f"identity checks run over odd n <= 9, got n={ctx.n}")
    for a in ctx.elements():
        if a in (0, 1):
            continue
        F, G, closed = _elimination_pair(theorem, ctx, a)
        if not equal_up_to_scalar(resultant_eliminate(F, G), closed):
            return IdentityCheck(theorem, ctx.n, False, a)
    return IdentityCheck(theorem, ctx.n, True)
