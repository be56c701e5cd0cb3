"""Solution counting and factorization classification for quadratic, cubic
and quartic equations over GF(2^n).

Each trace-based criterion is paired with a brute-force scan oracle; the
``lemma_*_agreement`` engines run the criterion against the oracle over the
whole input space and are what the CLI ``lemma`` subcommand reports on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .field import FieldCtx
from .poly import DensePoly

ROOT_SCAN_MAX_N = 20

__all__ = [
    "FactorPattern",
    "quadratic_solutions",
    "solve_artin_schreier",
    "cubic_has_unique_root",
    "cubic_pattern",
    "quartic_pattern",
    "quartic_pattern_scan",
    "roots_by_scan",
    "lemma_quadratic_agreement",
    "lemma_cubic_agreement",
    "lemma_quartic_agreement",
    "AgreementReport",
]


class FactorPattern(Enum):
    """Multiset of irreducible-factor degrees of a cubic or quartic."""

    Q1111 = (1, 1, 1, 1)
    Q22 = (2, 2)
    Q13 = (1, 3)
    Q112 = (1, 1, 2)
    Q4 = (4,)
    C111 = (1, 1, 1)
    C12 = (1, 2)
    C3 = (3,)

    @property
    def root_count(self) -> int:
        return sum(1 for d in self.value if d == 1)


# ---------------------------------------------------------------------------
# quadratics


def solve_artin_schreier(ctx: FieldCtx, c: int) -> int:
    """One solution of z^2 + z = c; requires trace_abs(c) = 0.

    Odd n uses the half trace; even n falls back to solving the GF(2)-linear
    system for the map z -> z^2 + z.
    """
    if ctx.trace_abs(c) != 0:
        raise ValueError("z^2 + z = c is unsolvable: trace(c) = 1")
    n = ctx.n
    if n % 2 == 1:
        acc = c
        t = c
        for _ in range((n - 1) // 2):
            t = ctx.sqr(ctx.sqr(t))
            acc ^= t
        return acc
    # even n: xor-combine basis images of z -> z^2 + z to hit c
    basis: dict[int, tuple[int, int]] = {}
    for j in range(n):
        v = ctx.sqr(1 << j) ^ (1 << j)
        mask = 1 << j
        while v:
            p = v.bit_length() - 1
            if p in basis:
                bv, bm = basis[p]
                v ^= bv
                mask ^= bm
            else:
                basis[p] = (v, mask)
                break
    v, mask = c, 0
    while v:
        p = v.bit_length() - 1
        bv, bm = basis[p]
        v ^= bv
        mask ^= bm
    return mask


def quadratic_solutions(ctx: FieldCtx, u: int, v: int) -> set[int]:
    """Roots of x^2 + ux + v in the field; empty exactly when trace(v/u^2) = 1.

    u = 0 is rejected: the degenerate x^2 = v has the single root sqrt(v) and
    is handled by callers through ctx.sqrt.
    """
    if u == 0:
        raise ValueError("u = 0 is degenerate: x^2 = v has the unique root sqrt(v)")
    c = ctx.mul(v, ctx.inv(ctx.sqr(u)))
    if ctx.trace_abs(c) == 1:
        return set()
    z = solve_artin_schreier(ctx, c)
    s = ctx.mul(u, z)
    roots = {s, s ^ u}
    for r in roots:
        if ctx.sqr(r) ^ ctx.mul(u, r) ^ v != 0:
            raise AssertionError("quadratic solver produced a non-root")
    return roots


# ---------------------------------------------------------------------------
# cubics


def cubic_has_unique_root(ctx: FieldCtx, a: int, b: int) -> bool:
    """Whether x^3 + ax + b (b != 0) has exactly one root in the field."""
    if b == 0:
        raise ValueError("b = 0 is out of scope: x^3 + ax = x(x^2 + a)")
    w = ctx.mul(ctx.pow(a, 3), ctx.inv(ctx.sqr(b)))
    return ctx.trace_abs(w ^ 1) != 0


def cubic_pattern(ctx: FieldCtx, a: int, b: int) -> FactorPattern:
    """Factor pattern of x^3 + ax + b over the field (b != 0, so squarefree)."""
    if b == 0:
        raise ValueError("b = 0 is out of scope")
    f = DensePoly.make(ctx, (b, a, 0, 1))
    r = len(roots_by_scan(f))
    return {0: FactorPattern.C3, 1: FactorPattern.C12, 3: FactorPattern.C111}[r]


# ---------------------------------------------------------------------------
# quartics


def _classify_quartic(ctx: FieldCtx, a0: int, scaled_roots: list[int], trace) -> FactorPattern:
    """Case analysis from the resolvent data: scaled_roots are r_i^2 / a1^2
    for the field roots r_i of the resolvent cubic, so w_i = a0 * scaled_roots[i].

    When the resolvent splits, the three w_i sum to zero (the r_i themselves
    do), so either all traces vanish or exactly one does; the classification
    is labelling-invariant.
    """
    traces = [trace(ctx.mul(a0, sr)) for sr in scaled_roots]
    if len(traces) == 3:
        zeros = traces.count(0)
        if zeros == 3:
            return FactorPattern.Q1111
        if zeros == 1:
            return FactorPattern.Q22
        raise AssertionError(f"impossible trace pattern {traces} for a split resolvent")
    if len(traces) == 0:
        return FactorPattern.Q13
    return FactorPattern.Q112 if traces[0] == 0 else FactorPattern.Q4


def quartic_pattern(ctx: FieldCtx, a2: int, a1: int, a0: int) -> FactorPattern:
    """Factor pattern of x^4 + a2 x^2 + a1 x + a0 with a0 a1 != 0.

    Classified through the resolvent cubic f1(y) = y^3 + a2 y + a1 and the
    traces of w_i = a0 r_i^2 / a1^2 at its field roots r_i.
    """
    if a0 == 0 or a1 == 0:
        raise ValueError("quartic classification requires a0 != 0 and a1 != 0")
    f1 = DensePoly.make(ctx, (a1, a2, 0, 1))
    roots = sorted(roots_by_scan(f1))
    scale = ctx.inv(ctx.sqr(a1))
    scaled = [ctx.mul(ctx.sqr(r), scale) for r in roots]
    return _classify_quartic(ctx, a0, scaled, ctx.trace_abs)


def quartic_pattern_scan(ctx: FieldCtx, a2: int, a1: int, a0: int) -> FactorPattern:
    """Scan oracle for quartic_pattern: root count, then a search over all
    monic quadratic divisors to separate (2,2) from (4).

    x^4 + a2 x^2 + a1 x + a0 mod (x^2 + ux + v) reduces to
    (u^3 + a2 u + a1) x + (u^2 v + v^2 + a2 v + a0), so divisibility is a
    two-coefficient test per candidate divisor.
    """
    if a0 == 0 or a1 == 0:
        raise ValueError("quartic classification requires a0 != 0 and a1 != 0")
    f = DensePoly.make(ctx, (a0, a1, a2, 0, 1))
    r = len(roots_by_scan(f))
    if r == 4:
        return FactorPattern.Q1111
    if r == 2:
        return FactorPattern.Q112
    if r == 1:
        return FactorPattern.Q13
    if r != 0:
        raise AssertionError(f"squarefree quartic with {r} roots")
    for u in ctx.elements():
        if ctx.mul(ctx.sqr(u), u) ^ ctx.mul(a2, u) ^ a1 != 0:
            continue
        for v in ctx.elements():
            if ctx.mul(ctx.sqr(u) ^ a2, v) ^ ctx.sqr(v) ^ a0 == 0:
                return FactorPattern.Q22
    return FactorPattern.Q4


def roots_by_scan(f: DensePoly) -> set[int]:
    """Exact root set in the field by evaluating at all 2^n points."""
    if f.is_zero:
        raise ValueError("the zero polynomial has every element as a root")
    ctx = f.ctx
    if ctx.n > ROOT_SCAN_MAX_N:
        raise ValueError(f"root scan capped at n={ROOT_SCAN_MAX_N}, got n={ctx.n}")
    return {x for x in ctx.elements() if f.eval(x) == 0}


# ---------------------------------------------------------------------------
# exhaustive criterion-vs-oracle engines


@dataclass(frozen=True)
class AgreementReport:
    which: str
    n: int
    checked: int
    mismatches: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _value_histogram(ctx: FieldCtx, values) -> list[int]:
    hist = [0] * ctx.order
    for v in values:
        hist[v] += 1
    return hist


def _trace_table(ctx: FieldCtx) -> list[int]:
    return [ctx.trace_abs(x) for x in ctx.elements()]


def lemma_quadratic_agreement(ctx: FieldCtx) -> AgreementReport:
    """quadratic_solutions vs a grouped root scan, over every (u != 0, v)."""
    mismatches = []
    checked = 0
    for u in ctx.nonzero():
        hist = _value_histogram(ctx, (ctx.sqr(x) ^ ctx.mul(u, x) for x in ctx.elements()))
        for v in ctx.elements():
            checked += 1
            sols = quadratic_solutions(ctx, u, v)
            if len(sols) != hist[v]:
                mismatches.append((u, v))
            elif sols and (max(sols) ^ min(sols)) != u:
                mismatches.append((u, v))
    return AgreementReport("quadratic", ctx.n, checked, tuple(mismatches))


def lemma_cubic_agreement(ctx: FieldCtx) -> AgreementReport:
    """cubic_has_unique_root vs a grouped root scan, over every (a, b != 0).

    The criterion trace(a^3/b^2 + 1) != 0 is evaluated with precomputed
    inverse-square and trace tables; the oracle is the value histogram of
    x^3 + ax.
    """
    mismatches = []
    checked = 0
    tr = _trace_table(ctx)
    inv_sq = [0] + [ctx.inv(ctx.sqr(b)) for b in ctx.nonzero()]
    for a in ctx.elements():
        hist = _value_histogram(
            ctx, (ctx.mul(ctx.sqr(x), x) ^ ctx.mul(a, x) for x in ctx.elements())
        )
        cube_a = ctx.mul(ctx.sqr(a), a)
        for b in ctx.nonzero():
            checked += 1
            criterion = tr[ctx.mul(cube_a, inv_sq[b]) ^ 1] != 0
            if criterion != (hist[b] == 1):
                mismatches.append((a, b))
    if ctx.n <= 4:  # spot-check the fused criterion against the public op
        for a in ctx.elements():
            for b in ctx.nonzero():
                hist_ok = cubic_has_unique_root(ctx, a, b)
                fused = tr[ctx.mul(ctx.mul(ctx.sqr(a), a), inv_sq[b]) ^ 1] != 0
                assert hist_ok == fused
    return AgreementReport("cubic", ctx.n, checked, tuple(mismatches))


def lemma_quartic_agreement(ctx: FieldCtx) -> AgreementReport:
    """quartic_pattern vs the scan oracle, over every (a2, a1 != 0, a0 != 0).

    Both sides are evaluated in grouped form per (a2, a1): the criterion
    reuses the resolvent roots across a0 (same _classify_quartic case logic
    as quartic_pattern); the oracle takes quartic root counts from the value
    histogram of x^4 + a2 x^2 + a1 x and marks divisor-admitting a0 by the
    quadratic sweep v -> (u^2 + a2) v + v^2 -- the same divisibility test
    quartic_pattern_scan applies one triple at a time.
    """
    mismatches = []
    checked = 0
    tr = _trace_table(ctx)
    trace = lambda x: tr[x]
    for a2 in ctx.elements():
        for a1 in ctx.nonzero():
            hist = _value_histogram(
                ctx,
                (
                    ctx.sqr(ctx.sqr(x)) ^ ctx.mul(a2, ctx.sqr(x)) ^ ctx.mul(a1, x)
                    for x in ctx.elements()
                ),
            )
            roots = sorted(
                u for u in ctx.elements() if ctx.mul(ctx.sqr(u), u) ^ ctx.mul(a2, u) ^ a1 == 0
            )
            scale = ctx.inv(ctx.sqr(a1))
            scaled = [ctx.mul(ctx.sqr(r), scale) for r in roots]
            divisible = [False] * ctx.order
            for u in roots:
                w = ctx.sqr(u) ^ a2
                for v in ctx.elements():
                    divisible[ctx.mul(w, v) ^ ctx.sqr(v)] = True
            for a0 in ctx.nonzero():
                checked += 1
                r = hist[a0]
                if r == 4:
                    oracle = FactorPattern.Q1111
                elif r == 2:
                    oracle = FactorPattern.Q112
                elif r == 1:
                    oracle = FactorPattern.Q13
                elif divisible[a0]:
                    oracle = FactorPattern.Q22
                else:
                    oracle = FactorPattern.Q4
                if _classify_quartic(ctx, a0, scaled, trace) is not oracle:
                    mismatches.append((a2, a1, a0))
    if ctx.n <= 4:  # the grouped criterion must be the public op, literally
        for a2 in ctx.elements():
            for a1 in ctx.nonzero():
                for a0 in ctx.nonzero():
                    assert quartic_pattern(ctx, a2, a1, a0) is quartic_pattern_scan(
                        ctx, a2, a1, a0
                    )
    return AgreementReport("quartic", ctx.n, checked, tuple(mismatches))
