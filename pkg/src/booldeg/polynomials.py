"""Exact multilinear and univariate polynomial arithmetic over the rationals.

A multilinear polynomial on n variables is stored as a mapping from variable
subsets to nonzero Fraction coefficients.  A subset S of {x_1, ..., x_n} is
encoded as an n-bit mask with bit (i-1) set iff x_i is in S.  The zero
polynomial has an empty mapping, so two polynomials are equal iff their
mappings are equal.  Monomials are ordered graded first, then by ascending
mask value; this order is used everywhere a deterministic choice is needed.

The shared text format writes terms joined by '+'/'-', each term an optional
rational coefficient followed by variable names: ``2 - x1 - x2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class ArityMismatchError(ValueError):
    """Operands have incompatible numbers of variables."""


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass(frozen=True)
class MultilinearPoly:
    """Multilinear polynomial with exact rational coefficients.

    ``coeffs`` maps subset masks to nonzero coefficients; use :meth:`make`
    to build one in canonical form (zero coefficients dropped).
    """

    arity: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    @staticmethod
    def make(arity: int, coeffs: Mapping[int, object]) -> "MultilinearPoly":
        if arity < 0:
            raise ValueError(f"negative arity {arity}")
        full = (1 << arity) - 1
        clean = {}
        for mask, c in coeffs.items():
            if mask & ~full:
                raise ValueError(f"mask {mask:#b} not a subset of [{arity}]")
            c = _as_fraction(c)
            if c != 0:
                clean[mask] = c
        return MultilinearPoly(arity, clean)

    @staticmethod
    def constant(arity: int, value) -> "MultilinearPoly":
        return MultilinearPoly.make(arity, {0: value})

    @staticmethod
    def zero(arity: int) -> "MultilinearPoly":
        return MultilinearPoly(arity, {})

    @staticmethod
    def variable(arity: int, i: int) -> "MultilinearPoly":
        if not 1 <= i <= arity:
            raise ValueError(f"variable index {i} out of range [1, {arity}]")
        return MultilinearPoly(arity, {1 << (i - 1): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Max monomial size; 0 for constants including the zero polynomial."""
        if not self.coeffs:
            return 0
        return max(mask.bit_count() for mask in self.coeffs)

    def evaluate(self, x: int) -> Fraction:
        """Value at the cube point with mask ``x`` (bit i-1 is x_i)."""
        if x & ~((1 << self.arity) - 1):
            raise ArityMismatchError(f"point {x:#b} outside the {self.arity}-cube")
        total = Fraction(0)
        for mask, c in self.coeffs.items():
            if mask & ~x == 0:
                total += c
        return total

    def maxonomials(self) -> list[int]:
        """Masks of the maximal-degree monomials, ascending."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no maxonomials")
        d = self.degree()
        return sorted(m for m in self.coeffs if m.bit_count() == d)

    def restrict(self, assignment: Mapping[int, int]) -> "MultilinearPoly":
        """Substitute bits for the assigned variables (1-indexed).

        The result lives on the unassigned variables, compacted in order, so
        its arity drops by ``len(assignment)``.
        """
        for i in assignment:
            if not 1 <= i <= self.arity:
                raise ValueError(f"variable index {i} out of range [1, {self.arity}]")
        assigned_mask = 0
        ones_mask = 0
        for i, b in assignment.items():
            assigned_mask |= 1 << (i - 1)
            if b:
                ones_mask |= 1 << (i - 1)
        new_arity = self.arity - len(assignment)
        new_pos = {}
        k = 0
        for i in range(self.arity):
            if not assigned_mask & (1 << i):
                new_pos[i] = k
                k += 1
        out: dict[int, Fraction] = {}
        for mask, c in self.coeffs.items():
            # A variable set to 0 kills the monomial; set to 1 it drops out.
            if mask & assigned_mask & ~ones_mask:
                continue
            new_mask = 0
            rem = mask & ~assigned_mask
            while rem:
                bit = rem & -rem
                new_mask |= 1 << new_pos[bit.bit_length() - 1]
                rem ^= bit
            out[new_mask] = out.get(new_mask, Fraction(0)) + c
        return MultilinearPoly.make(new_arity, out)

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        if self.arity != other.arity:
            raise ArityMismatchError(f"arity {self.arity} vs {other.arity}")
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            out[mask] = out.get(mask, Fraction(0)) + c
        return MultilinearPoly.make(self.arity, out)

    def __sub__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "MultilinearPoly":
        c = _as_fraction(c)
        return MultilinearPoly.make(self.arity, {m: v * c for m, v in self.coeffs.items()})

    def sorted_terms(self) -> list[tuple[int, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda mc: (mc[0].bit_count(), mc[0]))


def interpolate_multilinear(arity: int, values) -> MultilinearPoly:
    """The unique multilinear polynomial through the given cube values.

    ``values`` is a sequence of length 2^arity indexed by point mask, or a
    mapping covering every mask exactly.  Computed by Moebius inversion over
    subsets.
    """
    size = 1 << arity
    if isinstance(values, Mapping):
        if len(values) != size or any(not 0 <= k < size for k in values):
            raise ArityMismatchError(
                f"values must cover exactly the {size} points of the {arity}-cube"
            )
        table = [_as_fraction(values[k]) for k in range(size)]
    else:
        table = [_as_fraction(v) for v in values]
        if len(table) != size:
            raise ArityMismatchError(
                f"expected {size} values for arity {arity}, got {len(table)}"
            )
    coeffs = list(table)
    for i in range(arity):
        bit = 1 << i
        for mask in range(size):
            if mask & bit:
                coeffs[mask] -= coeffs[mask ^ bit]
    return MultilinearPoly.make(arity, {m: c for m, c in enumerate(coeffs) if c != 0})


def multilinearize_product(p: MultilinearPoly, q: MultilinearPoly) -> MultilinearPoly:
    """Multilinearization of p*q using X_i^2 = X_i (monomial masks union)."""
    if p.arity != q.arity:
        raise ArityMismatchError(f"arity {p.arity} vs {q.arity}")
    out: dict[int, Fraction] = {}
    for m1, c1 in p.coeffs.items():
        for m2, c2 in q.coeffs.items():
            m = m1 | m2
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return MultilinearPoly.make(p.arity, out)


@dataclass(frozen=True)
class UnivariatePoly:
    """Dense univariate polynomial; index = power, trailing coefficient nonzero."""

    coeffs: tuple[Fraction, ...] = ()

    @staticmethod
    def make(coeffs: Iterable) -> "UnivariatePoly":
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return UnivariatePoly(tuple(cs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def evaluate(self, y) -> Fraction:
        y = _as_fraction(y)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * y + c
        return total

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly.make(
            [k * c for k, c in enumerate(self.coeffs)][1:]
        )


# --- shared text format -----------------------------------------------------

_TOKEN_RE = re.compile(r"\s*([+\-*]|\d+\s*/\s*\d+|\d+|[a-z]\d*(?:\^\d+)?)")


def _format_coeff(c: Fraction) -> str:
    return str(c)  # Fraction prints as num or num/den


def format_poly(p: MultilinearPoly, var: str = "x") -> str:
    """Render in the shared text format, deterministic monomial order."""
    if p.is_zero():
        return "0"
    parts = []
    for mask, c in p.sorted_terms():
        names = [f"{var}{i + 1}" for i in range(p.arity) if mask & (1 << i)]
        mag = abs(c)
        body = " ".join(names)
        if not names:
            text = _format_coeff(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_coeff(mag)} {body}"
        parts.append(("-" if c < 0 else "+", text))
    sign, text = parts[0]
    out = (f"-{text}" if sign == "-" else text)
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def format_univariate(p: UnivariatePoly, var: str = "y") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            text = _format_coeff(mag)
        else:
            name = var if k == 1 else f"{var}^{k}"
            text = name if mag == 1 else f"{_format_coeff(mag)} {name}"
        parts.append(("-" if c < 0 else "+", text))
    sign, text = parts[0]
    out = (f"-{text}" if sign == "-" else text)
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


class PolyParseError(ValueError):
    """Malformed polynomial text."""


def parse_poly(text: str, arity: int | None = None, var: str = "x") -> MultilinearPoly:
    """Parse the shared text format into a multilinear polynomial.

    Arity defaults to the largest variable index that appears.  Repeated
    variables inside one monomial are rejected (the format is multilinear).
    """
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyParseError(f"unexpected input at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    terms: list[tuple[int, list[str]]] = []  # (sign, factor tokens)
    sign = 1
    cur: list[str] | None = None
    for tok in tokens:
        if tok in "+-":
            if cur is not None:
                terms.append((sign, cur))
                cur = None
                sign = 1
            if tok == "-":
                sign = -sign
        elif tok == "*":
            if cur is None:
                raise PolyParseError("misplaced '*'")
        else:
            if cur is None:
                cur = []
            cur.append(tok)
    if cur is not None:
        terms.append((sign, cur))
    if not terms:
        raise PolyParseError("empty polynomial text")

    var_re = re.compile(rf"^{re.escape(var)}(\d+)$")
    max_index = 0
    parsed: list[tuple[Fraction, list[int]]] = []
    for sgn, factors in terms:
        coef = Fraction(sgn)
        indices: list[int] = []
        seen_coeff = False
        for tok in factors:
            vm = var_re.match(tok)
            if vm:
                i = int(vm.group(1))
                if i < 1:
                    raise PolyParseError(f"bad variable {tok!r}")
                if i in indices:
                    raise PolyParseError(f"repeated variable {tok!r} in one monomial")
                indices.append(i)
                max_index = max(max_index, i)
            elif re.fullmatch(r"\d+\s*/\s*\d+|\d+", tok):
                if seen_coeff or indices:
                    raise PolyParseError(f"misplaced coefficient {tok!r}")
                num, _, den = tok.partition("/")
                coef *= Fraction(int(num), int(den)) if den else Fraction(int(num))
                seen_coeff = True
            else:
                raise PolyParseError(f"unexpected token {tok!r}")
        if not seen_coeff and not indices:
            raise PolyParseError("empty term")
        parsed.append((coef, indices))
    n = arity if arity is not None else max_index
    if max_index > n:
        raise PolyParseError(f"variable {var}{max_index} exceeds arity {n}")
    out: dict[int, Fraction] = {}
    for coef, indices in parsed:
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        out[mask] = out.get(mask, Fraction(0)) + coef
    return MultilinearPoly.make(n, out)
