"""Degree measures with explicit witnesses.

deg comes from interpolation; ndeg from nullspaces of monomial evaluation
matrices plus the avoidance combination; rdeg from the max(ndeg, ndeg of the
negation) characterization with the p/(p+q) representation; sdeg from exact
LP feasibility with margin 1; partial-function degree from consistency
sweeps; and Bezout certificates on the cube from cofactor interpolation.

Solver results are memoized by truth table, so corpus sweeps that visit a
function and its negation pay for each only once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LinearProgram, RationalMatrix, lp_feasible, nullspace_basis, solve_exact
from .boolfn import BooleanFunction, PartialBooleanFunction, negate
from .config import check_cap
from .polynomials import (
    MultilinearPoly,
    interpolate_multilinear,
    multilinearize_product,
)


@dataclass(frozen=True)
class NdegWitness:
    degree: int
    polynomial: MultilinearPoly


@dataclass(frozen=True)
class SignWitness:
    degree: int
    polynomial: MultilinearPoly


@dataclass(frozen=True)
class RationalRepresentation:
    numerator: MultilinearPoly
    denominator: MultilinearPoly


@dataclass(frozen=True)
class NullstellensatzCertificate:
    h1: MultilinearPoly
    h2: MultilinearPoly
    degree_h1g1: int  # degree of the multilinearized product h1*g1
    degree_h2g2: int
    verified: bool


class HypothesisViolation(ValueError):
    """Inputs violate a theorem hypothesis; the message names a witness point."""


def monomials_up_to(arity: int, d: int) -> list[int]:
    """All subset masks of size <= d, graded then mask ascending."""
    return sorted(
        (m for m in range(1 << arity) if m.bit_count() <= d),
        key=lambda m: (m.bit_count(), m),
    )


def _monomial_value(mono: int, point: int) -> int:
    return 1 if mono & ~point == 0 else 0


def deg(f: BooleanFunction) -> tuple[int, MultilinearPoly]:
    p = interpolate_multilinear(f.arity, f.table)
    return p.degree(), p


def avoidance_combine(polys, domain) -> MultilinearPoly:
    """Positive combination of the inputs that is nonzero on every domain point.

    Uses the recurrence c_1 = 1, c_i * b_i = 1 + sum_{j<i} c_j * B_j with
    b_i the least nonzero magnitude of input i on the domain and B_i one more
    than its largest magnitude (identically-zero inputs get b=1, B=2).  The
    last input that is nonzero at a point then dominates all earlier terms.
    """
    polys = list(polys)
    domain = list(domain)
    if not polys:
        raise ValueError("need at least one polynomial")
    values = [[p.evaluate(x) for x in domain] for p in polys]
    for k, x in enumerate(domain):
        if all(vals[k] == 0 for vals in values):
            raise ValueError(f"all inputs vanish at domain point {x:#b}")
    cs: list[Fraction] = []
    acc = Fraction(0)  # running sum of c_j * B_j
    for vals in values:
        mags = [abs(v) for v in vals if v != 0]
        if mags:
            b_i = min(mags)
            big = max(mags) + 1
        else:
            b_i, big = Fraction(1), Fraction(2)
        c_i = (1 + acc) / b_i
        cs.append(c_i)
        acc += c_i * big
    result = polys[0].scale(cs[0])
    for p, c in zip(polys[1:], cs[1:]):
        result = result + p.scale(c)
    for x in domain:
        if result.evaluate(x) == 0:
            raise RuntimeError("avoidance combination vanished on the domain")
    return result


_NDEG_CACHE: dict[tuple[int, tuple[int, ...]], NdegWitness] = {}
_SDEG_CACHE: dict[tuple[int, tuple[int, ...]], SignWitness] = {}


def ndeg(f: BooleanFunction) -> NdegWitness:
    """Least degree of a polynomial nonzero exactly on f^{-1}(1), with witness.

    For each candidate degree d, the polynomials of degree <= d vanishing on
    f^{-1}(0) form the nullspace of the monomial evaluation matrix; d works
    iff some nullspace element is nonzero at each 1-point, in which case the
    avoidance combination produces a single witness.
    """
    check_cap(f.arity, "nondeterministic degree")
    key = (f.arity, f.table)
    hit = _NDEG_CACHE.get(key)
    if hit is not None:
        return hit
    ones = f.ones()
    zeros = f.zeros()
    if not ones:
        out = NdegWitness(0, MultilinearPoly.zero(f.arity))
    elif not zeros:
        out = NdegWitness(0, MultilinearPoly.constant(f.arity, 1))
    else:
        out = None
        for d in range(f.arity + 1):
            monos = monomials_up_to(f.arity, d)
            matrix = RationalMatrix.make(
                [[_monomial_value(m, x) for m in monos] for x in zeros]
            )
            basis = nullspace_basis(matrix)
            if not basis:
                continue
            candidates = [
                MultilinearPoly.make(
                    f.arity, {m: c for m, c in zip(monos, vec)}
                )
                for vec in basis
            ]
            one_vals = [[p.evaluate(x) for p in candidates] for x in ones]
            if all(any(v != 0 for v in vals) for vals in one_vals):
                witness = avoidance_combine(candidates, ones)
                out = NdegWitness(d, witness)
                break
        assert out is not None  # d = arity always succeeds (interpolate f)
    _NDEG_CACHE[key] = out
    return out


def rdeg(f: BooleanFunction) -> tuple[int, RationalRepresentation]:
    """max(ndeg(f), ndeg(not f)) with the p/(p+q) rational representation."""
    check_cap(f.arity, "rational degree")
    if f.is_constant():
        p = interpolate_multilinear(f.arity, f.table)
        return 0, RationalRepresentation(p, MultilinearPoly.constant(f.arity, 1))
    wp = ndeg(f)
    wq = ndeg(negate(f))
    rep = RationalRepresentation(wp.polynomial, wp.polynomial + wq.polynomial)
    return max(wp.degree, wq.degree), rep


def sdeg(f: BooleanFunction) -> SignWitness:
    """Least degree of a sign representation, via margin-1 LP feasibility."""
    check_cap(f.arity, "sign degree")
    key = (f.arity, f.table)
    hit = _SDEG_CACHE.get(key)
    if hit is not None:
        return hit
    ones = f.ones()
    zeros = f.zeros()
    if not ones:
        out = SignWitness(0, MultilinearPoly.constant(f.arity, 1))
    elif not zeros:
        out = SignWitness(0, MultilinearPoly.constant(f.arity, -1))
    else:
        out = None
        for d in range(f.arity + 1):
            monos = monomials_up_to(f.arity, d)
            constraints = []
            for x in zeros:
                row = [_monomial_value(m, x) for m in monos]
                constraints.append((row, ">=", 1))
            for x in ones:
                row = [_monomial_value(m, x) for m in monos]
                constraints.append((row, "<=", -1))
            feasible, witness = lp_feasible(LinearProgram.make(len(monos), constraints))
            if feasible:
                poly = MultilinearPoly.make(
                    f.arity, {m: c for m, c in zip(monos, witness)}
                )
                out = SignWitness(d, poly)
                break
        assert out is not None  # 1 - 2f is a sign representation at d = arity
    _SDEG_CACHE[key] = out
    return out


def partial_degree(pf: PartialBooleanFunction) -> int:
    """Least degree of a polynomial agreeing with pf on its domain."""
    points = pf.domain()
    values = [pf.values[x] for x in points]
    for d in range(pf.arity + 1):
        monos = monomials_up_to(pf.arity, d)
        matrix = RationalMatrix.make(
            [[_monomial_value(m, x) for m in monos] for x in points]
        )
        if solve_exact(matrix, values) is not None:
            return d
    raise AssertionError("full-degree interpolation must be consistent")


def partial_interpolant(pf: PartialBooleanFunction) -> MultilinearPoly:
    """A minimal-degree polynomial agreeing with pf on its domain."""
    points = pf.domain()
    values = [pf.values[x] for x in points]
    d = partial_degree(pf)
    monos = monomials_up_to(pf.arity, d)
    matrix = RationalMatrix.make(
        [[_monomial_value(m, x) for m in monos] for x in points]
    )
    solution = solve_exact(matrix, values)
    assert solution is not None
    return MultilinearPoly.make(pf.arity, {m: c for m, c in zip(monos, solution)})


def hypercube_nullstellensatz(
    g1: MultilinearPoly, g2: MultilinearPoly
) -> NullstellensatzCertificate:
    """Cofactors h1, h2 with h1*g1 + h2*g2 = 1 on the cube.

    Requires that g1, g2 have no common cube zero and that their product
    vanishes at every cube point.  h1 interpolates 1/g1 on the support of g1
    and 0 elsewhere; h2 symmetrically, so h1*g1 and h2*g2 realize the
    indicator of the support of g1 and its complement.
    """
    if g1.arity != g2.arity:
        raise ValueError(f"arity {g1.arity} vs {g2.arity}")
    n = g1.arity
    v1 = [g1.evaluate(x) for x in range(1 << n)]
    v2 = [g2.evaluate(x) for x in range(1 << n)]
    for x in range(1 << n):
        if v1[x] == 0 and v2[x] == 0:
            raise HypothesisViolation(f"common zero at cube point {x:#0{n + 2}b}")
        if v1[x] != 0 and v2[x] != 0:
            raise HypothesisViolation(
                f"product nonzero at cube point {x:#0{n + 2}b}"
            )
    h1 = interpolate_multilinear(
        n, [1 / v if v != 0 else Fraction(0) for v in v1]
    )
    h2 = interpolate_multilinear(
        n, [1 / v if v != 0 else Fraction(0) for v in v2]
    )
    prod1 = multilinearize_product(h1, g1)
    prod2 = multilinearize_product(h2, g2)
    verified = all(
        prod1.evaluate(x) + prod2.evaluate(x) == 1 for x in range(1 << n)
    )
    assert verified
    return NullstellensatzCertificate(h1, h2, prod1.degree(), prod2.degree(), verified)


def counterexample_forms(n: int) -> tuple[MultilinearPoly, MultilinearPoly]:
    """The degree-1 forms cutting out the COUNTEREXAMPLE(n) domain halves:
    sum of the x-block, and sum of both blocks minus (n + 1)."""
    arity = 2 * n
    g1 = MultilinearPoly.make(
        arity, {1 << i: Fraction(1) for i in range(n)}
    )
    coeffs = {1 << i: Fraction(1) for i in range(arity)}
    coeffs[0] = Fraction(-(n + 1))
    g2 = MultilinearPoly.make(arity, coeffs)
    return g1, g2


def clear_caches() -> None:
    _NDEG_CACHE.clear()
    _SDEG_CACHE.clear()
