"""Symmetrization operations and analytic checkers.

Bernoulli symmetrization replaces each monomial by a power of one fresh
variable and equals the expectation under product Bernoulli inputs.  Block
symmetrization averages over the Hamming level of a block of variables,
introducing one fresh variable per call; calling it on disjoint blocks in
sequence yields multivariate symmetrizations (e.g. the bivariate P(s, t)
used for the partial-function lower-bound pipeline).

All checks are exact: expectations and level averages are computed as
explicit rational sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

from .polynomials import MultilinearPoly, UnivariatePoly


@dataclass(frozen=True)
class SymmetrizedPoly:
    """Polynomial in leftover cube variables plus fresh level-count variables.

    ``remaining`` lists the surviving original variable indices (1-based,
    ascending); a term key is (mask over remaining positions, exponent tuple
    over the fresh variables in introduction order).
    """

    remaining: tuple[int, ...]
    fresh: tuple[str, ...]
    terms: Mapping[tuple[int, tuple[int, ...]], Fraction]

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(mask.bit_count() + sum(exps) for mask, exps in self.terms)

    def evaluate(self, cube_bits: Mapping[int, int], fresh_values: Iterable) -> Fraction:
        """Value with every remaining variable and fresh variable assigned."""
        fresh_values = [Fraction(v) for v in fresh_values]
        if len(fresh_values) != len(self.fresh):
            raise ValueError(
                f"expected {len(self.fresh)} fresh values, got {len(fresh_values)}"
            )
        point = 0
        for pos, idx in enumerate(self.remaining):
            if cube_bits.get(idx, 0):
                point |= 1 << pos
        total = Fraction(0)
        for (mask, exps), c in self.terms.items():
            if mask & ~point:
                continue
            term = c
            for v, e in zip(fresh_values, exps):
                term *= v**e
            total += term
        return total

    def to_univariate(self) -> UnivariatePoly:
        if self.remaining or len(self.fresh) != 1:
            raise ValueError("not a univariate symmetrization")
        coeffs: dict[int, Fraction] = {}
        for (_, exps), c in self.terms.items():
            coeffs[exps[0]] = coeffs.get(exps[0], Fraction(0)) + c
        if not coeffs:
            return UnivariatePoly.make([])
        return UnivariatePoly.make(
            [coeffs.get(k, Fraction(0)) for k in range(max(coeffs) + 1)]
        )

    @staticmethod
    def from_multilinear(p: MultilinearPoly) -> "SymmetrizedPoly":
        return SymmetrizedPoly(
            tuple(range(1, p.arity + 1)),
            (),
            {(mask, ()): c for mask, c in p.coeffs.items()},
        )


def bernoulli_symmetrize(p: MultilinearPoly) -> UnivariatePoly:
    """Monomial-degree substitution; equals E[p] under Bernoulli(y) inputs."""
    coeffs = [Fraction(0)] * (p.arity + 1)
    for mask, c in p.coeffs.items():
        coeffs[mask.bit_count()] += c
    return UnivariatePoly.make(coeffs)


def bernoulli_expectation(p: MultilinearPoly, y) -> Fraction:
    """E[p(x)] for x ~ Bernoulli(y)^n, as an explicit weighted sum."""
    y = Fraction(y)
    total = Fraction(0)
    for x in range(1 << p.arity):
        w = x.bit_count()
        total += p.evaluate(x) * y**w * (1 - y) ** (p.arity - w)
    return total


def _falling_factorial_poly(d: int, m: int) -> list[Fraction]:
    """Coefficients of z(z-1)...(z-d+1) / (m(m-1)...(m-d+1)), low to high."""
    coeffs = [Fraction(1)]
    for j in range(d):
        # multiply by (z - j)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= j * c
        coeffs = nxt
    denom = Fraction(1)
    for j in range(d):
        denom *= m - j
    return [c / denom for c in coeffs]


def minsky_papert_symmetrize(
    p: Union[MultilinearPoly, SymmetrizedPoly],
    block: Iterable[int],
    fresh: str = "y",
) -> SymmetrizedPoly:
    """Average over the Hamming level of ``block``.

    Each monomial's intersection with the block (size d) is replaced by the
    degree-d polynomial i(i-1)...(i-d+1) / (m(m-1)...(m-d+1)) in a fresh
    variable counting the ones inside the block of size m.
    """
    if isinstance(p, MultilinearPoly):
        p = SymmetrizedPoly.from_multilinear(p)
    block = sorted(set(block))
    if not block:
        raise ValueError("block must be nonempty")
    if fresh in p.fresh:
        raise ValueError(f"fresh variable {fresh!r} already in use")
    positions = {idx: pos for pos, idx in enumerate(p.remaining)}
    for idx in block:
        if idx not in positions:
            raise ValueError(f"variable {idx} not among the remaining variables")
    block_bits = 0
    for idx in block:
        block_bits |= 1 << positions[idx]
    m = len(block)
    keep = [idx for idx in p.remaining if idx not in set(block)]
    new_pos = {positions[idx]: k for k, idx in enumerate(keep)}

    ff_cache: dict[int, list[Fraction]] = {}
    out: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for (mask, exps), c in p.terms.items():
        d = (mask & block_bits).bit_count()
        rest = mask & ~block_bits
        new_mask = 0
        rem = rest
        while rem:
            bit = rem & -rem
            new_mask |= 1 << new_pos[bit.bit_length() - 1]
            rem ^= bit
        if d not in ff_cache:
            ff_cache[d] = _falling_factorial_poly(d, m)
        for k, coef in enumerate(ff_cache[d]):
            if coef == 0:
                continue
            key = (new_mask, exps + (k,))
            out[key] = out.get(key, Fraction(0)) + c * coef
    out = {k: v for k, v in out.items() if v != 0}
    return SymmetrizedPoly(tuple(keep), p.fresh + (fresh,), out)


def level_average(p: MultilinearPoly, i: int) -> Fraction:
    """Average of p over the cube points of Hamming weight i."""
    n = p.arity
    total = Fraction(0)
    count = 0
    for x in range(1 << n):
        if x.bit_count() == i:
            total += p.evaluate(x)
            count += 1
    assert count == comb(n, i)
    return total / count


def format_symmetrized(sp: SymmetrizedPoly) -> str:
    """Text form of a symmetrized polynomial (fresh variables may carry powers)."""
    if not sp.terms:
        return "0"
    ordered = sorted(
        sp.terms.items(),
        key=lambda kv: (kv[0][0].bit_count() + sum(kv[0][1]), kv[0][0], kv[0][1]),
    )
    parts = []
    for (mask, exps), c in ordered:
        names = [
            f"x{sp.remaining[pos]}"
            for pos in range(len(sp.remaining))
            if mask & (1 << pos)
        ]
        for name, e in zip(sp.fresh, exps):
            if e == 1:
                names.append(name)
            elif e > 1:
                names.append(f"{name}^{e}")
        mag = abs(c)
        if not names:
            text = str(mag)
        elif mag == 1:
            text = " ".join(names)
        else:
            text = f"{mag} " + " ".join(names)
        parts.append(("-" if c < 0 else "+", text))
    sign, text = parts[0]
    out = f"-{text}" if sign == "-" else text
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def nonzero_probability(p: MultilinearPoly) -> Fraction:
    count = sum(1 for x in range(1 << p.arity) if p.evaluate(x) != 0)
    return Fraction(count, 1 << p.arity)


@dataclass(frozen=True)
class CheckVerdict:
    passed: bool
    hypotheses_ok: bool
    detail: str = ""


def markov_grid_check(
    poly: UnivariatePoly, interval, bounds, grid: int
) -> CheckVerdict:
    """Derivative-bound check of |P'| <= (b2-b1)/(a2-a1) * deg(P)^2 at grid
    points, after verifying P stays within the value bounds there.

    A grid check is a sound necessary-condition tester: a failure refutes the
    claim, a pass does not certify the whole interval.
    """
    a1, a2 = (Fraction(v) for v in interval)
    b1, b2 = (Fraction(v) for v in bounds)
    if a1 >= a2 or b1 >= b2 or grid < 2:
        raise ValueError("need a1 < a2, b1 < b2, grid >= 2")
    points = [a1 + Fraction(k, grid - 1) * (a2 - a1) for k in range(grid)]
    for x in points:
        v = poly.evaluate(x)
        if not b1 <= v <= b2:
            return CheckVerdict(
                False, False, f"hypothesis violated: P({x}) = {v} outside bounds"
            )
    bound = (b2 - b1) / (a2 - a1) * poly.degree() ** 2
    deriv = poly.derivative()
    for x in points:
        v = abs(deriv.evaluate(x))
        if v > bound:
            return CheckVerdict(
                False, True, f"derivative bound violated: |P'({x})| = {v} > {bound}"
            )
    return CheckVerdict(True, True)


def corollary_approx_check(p: MultilinearPoly, h) -> CheckVerdict:
    """Checks the extremal-point hypotheses and then n <= 2*deg(p)^2.

    Hypotheses: |p| <= h on the cube, |p(0^n)| = h, and p has the opposite
    sign (or zero) at every weight-1 point.
    """
    h = Fraction(h)
    if h <= 0:
        raise ValueError("h must be positive")
    n = p.arity
    p0 = p.evaluate(0)
    for x in range(1 << n):
        v = p.evaluate(x)
        if abs(v) > h:
            return CheckVerdict(
                False, False, f"hypothesis (i) violated: |p({x:#b})| = {abs(v)} > {h}"
            )
    if abs(p0) != h:
        return CheckVerdict(
            False, False, f"hypothesis (ii) violated: |p(0)| = {abs(p0)} != {h}"
        )
    for i in range(n):
        v = p.evaluate(1 << i)
        if v * p0 > 0:
            return CheckVerdict(
                False, False, f"hypothesis (iii) violated at weight-1 point x{i + 1}"
            )
    d = p.degree()
    if n <= 2 * d * d:
        return CheckVerdict(True, True)
    return CheckVerdict(
        False, True, f"conclusion violated: n = {n} > 2*deg^2 = {2 * d * d}"
    )
