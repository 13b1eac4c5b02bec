"""Boolean functions as truth tables, canonical families, and combinatorial
measures: block sensitivity, influence, and the exact decision-tree oracle.

A point x in {0,1}^n is encoded as an n-bit mask with bit (i-1) = x_i, and a
truth table is indexed by that mask.  This convention matches the polynomial
module's subset encoding and the ``.bf`` file format.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .config import check_cap


class EmptyLevelError(ValueError):
    """f^{-1}(b) is empty, so a min over that level is undefined."""


@dataclass(frozen=True)
class BooleanFunction:
    arity: int
    table: tuple[int, ...]

    @staticmethod
    def make(arity: int, table: Sequence[int]) -> "BooleanFunction":
        table = tuple(int(v) for v in table)
        if len(table) != 1 << arity:
            raise ValueError(
                f"table length {len(table)} != 2^{arity}"
            )
        if any(v not in (0, 1) for v in table):
            raise ValueError("table entries must be 0 or 1")
        return BooleanFunction(arity, table)

    @staticmethod
    def from_int(arity: int, bits: int) -> "BooleanFunction":
        return BooleanFunction(
            arity, tuple((bits >> k) & 1 for k in range(1 << arity))
        )

    @cached_property
    def table_int(self) -> int:
        bits = 0
        for k, v in enumerate(self.table):
            bits |= v << k
        return bits

    def value(self, x: int) -> int:
        return self.table[x]

    def is_constant(self) -> bool:
        first = self.table[0]
        return all(v == first for v in self.table)

    def digest(self) -> str:
        payload = f"n={self.arity};" + "".join(map(str, self.table))
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def ones(self) -> list[int]:
        return [x for x, v in enumerate(self.table) if v == 1]

    def zeros(self) -> list[int]:
        return [x for x, v in enumerate(self.table) if v == 0]


@dataclass(frozen=True)
class PartialBooleanFunction:
    """Function defined only on a nonempty subset of the cube."""

    arity: int
    values: Mapping[int, int]

    @staticmethod
    def make(arity: int, values: Mapping[int, int]) -> "PartialBooleanFunction":
        if not values:
            raise ValueError("domain must be nonempty")
        size = 1 << arity
        clean = {}
        for x, v in values.items():
            if not 0 <= x < size:
                raise ValueError(f"point {x} outside the {arity}-cube")
            if v not in (0, 1):
                raise ValueError("values must be 0 or 1")
            clean[x] = v
        return PartialBooleanFunction(arity, clean)

    def domain(self) -> list[int]:
        return sorted(self.values)


@dataclass(frozen=True)
class BlockPacking:
    """Witness for block sensitivity: pairwise-disjoint sensitive blocks at x."""

    point: int
    blocks: tuple[int, ...]  # variable-subset masks

    def block_sets(self) -> list[list[int]]:
        return [
            [i + 1 for i in range(32) if b & (1 << i)] for b in self.blocks
        ]


def negate(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.arity, tuple(1 - v for v in f.table))


def restrict_fn(f: BooleanFunction, assignment: Mapping[int, int]) -> BooleanFunction:
    """Fix the assigned variables (1-indexed); remaining variables compact."""
    for i in assignment:
        if not 1 <= i <= f.arity:
            raise ValueError(f"variable index {i} out of range [1, {f.arity}]")
    free = [i for i in range(f.arity) if (i + 1) not in assignment]
    base = 0
    for i, b in assignment.items():
        if b:
            base |= 1 << (i - 1)
    table = []
    for j in range(1 << len(free)):
        x = base
        for pos, i in enumerate(free):
            if j & (1 << pos):
                x |= 1 << i
        table.append(f.table[x])
    return BooleanFunction(len(free), tuple(table))


def depends_on(f: BooleanFunction, i: int) -> bool:
    if not 1 <= i <= f.arity:
        raise ValueError(f"variable index {i} out of range [1, {f.arity}]")
    bit = 1 << (i - 1)
    return any(f.table[x] != f.table[x ^ bit] for x in range(1 << f.arity))


def dependent_variables(f: BooleanFunction) -> list[int]:
    return [i for i in range(1, f.arity + 1) if depends_on(f, i)]


def block_sensitivity_at(f: BooleanFunction, x: int) -> tuple[int, BlockPacking]:
    """Exact bs_x(f) with a witness packing, by branch-and-bound search."""
    check_cap(f.arity, "block sensitivity")
    if not 0 <= x < (1 << f.arity):
        raise ValueError(f"point {x} outside the {f.arity}-cube")
    fx = f.table[x]
    sensitive = [
        b for b in range(1, 1 << f.arity) if f.table[x ^ b] != fx
    ]
    # Small blocks first: maximum packings are found early, tightening the
    # free-bit bound.
    sensitive.sort(key=lambda b: (b.bit_count(), b))
    best: list[int] = []

    def search(idx: int, used: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        free_bits = f.arity - used.bit_count()
        if len(chosen) + free_bits <= len(best):
            return
        for k in range(idx, len(sensitive)):
            b = sensitive[k]
            if b & used:
                continue
            chosen.append(b)
            search(k + 1, used | b, chosen)
            chosen.pop()

    search(0, 0, [])
    return len(best), BlockPacking(x, tuple(sorted(best)))


def min_block_sensitivity(f: BooleanFunction, b: int) -> int:
    """Min of bs_x(f) over x in f^{-1}(b); error when that level is empty."""
    level = [x for x, v in enumerate(f.table) if v == b]
    if not level:
        raise EmptyLevelError(f"f^-1({b}) is empty")
    return min(block_sensitivity_at(f, x)[0] for x in level)


def influence(f: BooleanFunction, i: int) -> Fraction:
    if not 1 <= i <= f.arity:
        raise ValueError(f"variable index {i} out of range [1, {f.arity}]")
    bit = 1 << (i - 1)
    count = sum(1 for x in range(1 << f.arity) if f.table[x] != f.table[x ^ bit])
    return Fraction(count, 1 << f.arity)


def total_influence(f: BooleanFunction) -> Fraction:
    return sum((influence(f, i) for i in range(1, f.arity + 1)), Fraction(0))


# --- decision-tree complexity oracle ---------------------------------------

_DTC_MEMO: dict[tuple[int, int], int] = {}
_RESTRICT_IDX: dict[tuple[int, int], tuple[list[int], list[int]]] = {}


def _restrict_indices(n: int, i: int) -> tuple[list[int], list[int]]:
    """Source table indices when bit i of an n-variable table is fixed."""
    key = (n, i)
    cached = _RESTRICT_IDX.get(key)
    if cached is None:
        lo, hi = [], []
        for j in range(1 << (n - 1)):
            low = j & ((1 << i) - 1)
            src = low | ((j >> i) << (i + 1))
            lo.append(src)
            hi.append(src | (1 << i))
        cached = (lo, hi)
        _RESTRICT_IDX[key] = cached
    return cached


def _dtc(n: int, t: int) -> int:
    full = (1 << (1 << n)) - 1
    if t == 0 or t == full:
        return 0
    key = (n, t)
    hit = _DTC_MEMO.get(key)
    if hit is not None:
        return hit
    best = n
    for i in range(n):
        lo, hi = _restrict_indices(n, i)
        t0 = 0
        t1 = 0
        for j, src in enumerate(lo):
            t0 |= ((t >> src) & 1) << j
        for j, src in enumerate(hi):
            t1 |= ((t >> src) & 1) << j
        depth = 1 + max(_dtc(n - 1, t0), _dtc(n - 1, t1))
        if depth < best:
            best = depth
            if best == 1:
                break
    _DTC_MEMO[key] = best
    return best


def decision_tree_complexity(f: BooleanFunction) -> int:
    """Exact D(f) by memoized recursion over restrictions."""
    check_cap(f.arity, "decision-tree complexity")
    return _dtc(f.arity, f.table_int)


# --- canonical families -----------------------------------------------------

def _table_from_predicate(n: int, pred) -> BooleanFunction:
    return BooleanFunction(n, tuple(1 if pred(x) else 0 for x in range(1 << n)))


def family(name: str, n: int | None = None, m: int | None = None):
    """Build a named function family instance.

    AND/OR/PARITY/MAJ/EQUATOR/ADDRESS take ``n``; ANDOR takes the side
    length ``m`` (m^2 variables); COUNTEREXAMPLE takes ``n`` and yields a
    partial function on 2n variables.  For ADDRESS, ``n`` is the number of
    address bits k and the function has k + 2^k variables: the address bits
    x_1..x_k select (little-endian) which of the target bits x_{k+1}..x_{k+2^k}
    is output.
    """
    name = name.upper()
    if name == "ANDOR":
        if m is None or m < 1:
            raise ValueError("ANDOR requires side length m >= 1")
        nvars = m * m

        def andor(x: int) -> bool:
            for block in range(m):
                chunk = (x >> (block * m)) & ((1 << m) - 1)
                if chunk == 0:
                    return False
            return True

        return _table_from_predicate(nvars, andor)
    if n is None or n < 1:
        raise ValueError(f"family {name} requires n >= 1")
    if name == "AND":
        return _table_from_predicate(n, lambda x: x == (1 << n) - 1)
    if name == "OR":
        return _table_from_predicate(n, lambda x: x != 0)
    if name == "PARITY":
        return _table_from_predicate(n, lambda x: x.bit_count() % 2 == 1)
    if name == "MAJ":
        if n % 2 == 0:
            raise ValueError("MAJ requires odd n")
        return _table_from_predicate(n, lambda x: x.bit_count() > n // 2)
    if name == "EQUATOR":
        if n % 2 == 1:
            raise ValueError("EQUATOR requires even n")
        return _table_from_predicate(n, lambda x: x.bit_count() != n // 2)
    if name == "ADDRESS":
        k = n
        nvars = k + (1 << k)

        def address(x: int) -> bool:
            a = x & ((1 << k) - 1)
            return bool((x >> (k + a)) & 1)

        return _table_from_predicate(nvars, address)
    if name == "COUNTEREXAMPLE":
        # Partial function on x_1..x_n, y_1..y_n: 0 where x = 0^n, 1 where
        # |x| + |y| = n + 1; the two linear forms that cut out these sets
        # are returned by counterexample_forms.
        values: dict[int, int] = {}
        for point in range(1 << (2 * n)):
            xpart = point & ((1 << n) - 1)
            weight = point.bit_count()
            if xpart == 0:
                values[point] = 0
            elif weight == n + 1:
                values[point] = 1
        return PartialBooleanFunction.make(2 * n, values)
    raise ValueError(f"unknown family {name!r}")


FAMILY_SCHEMAS = {
    "AND": "n >= 1 variables",
    "OR": "n >= 1 variables",
    "PARITY": "n >= 1 variables",
    "MAJ": "odd n variables",
    "EQUATOR": "even n variables; 0 exactly on the middle Hamming level",
    "ADDRESS": "n = number of address bits k; k + 2^k variables",
    "ANDOR": "m = side length; AND of m ORs on m^2 variables",
    "COUNTEREXAMPLE": "n; partial function on 2n variables",
}


# --- file formats -----------------------------------------------------------

def format_bf(f: BooleanFunction) -> str:
    return f"n={f.arity}\n" + "".join(map(str, f.table)) + "\n"


def parse_bf(text: str) -> BooleanFunction:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or not lines[0].startswith("n="):
        raise ValueError("expected 'n=<k>' then one truth-table line")
    n = int(lines[0][2:])
    bits = lines[1]
    if len(bits) != 1 << n or any(c not in "01" for c in bits):
        raise ValueError(f"truth table must be 2^{n} characters over 01")
    return BooleanFunction(n, tuple(int(c) for c in bits))


def format_pbf(pf: PartialBooleanFunction) -> str:
    out = [f"n={pf.arity}"]
    for x in pf.domain():
        bits = "".join(str((x >> i) & 1) for i in range(pf.arity))
        out.append(f"{bits} {pf.values[x]}")
    return "\n".join(out) + "\n"


def parse_pbf(text: str) -> PartialBooleanFunction:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("expected 'n=<k>' header")
    n = int(lines[0][2:])
    values: dict[int, int] = {}
    for ln in lines[1:]:
        bits, _, val = ln.partition(" ")
        if len(bits) != n or any(c not in "01" for c in bits):
            raise ValueError(f"bad domain point {bits!r}")
        x = sum(1 << i for i, c in enumerate(bits) if c == "1")
        values[x] = int(val)
    return PartialBooleanFunction.make(n, values)
