"""Constructive decision trees from nondeterministic representations.

The builder maintains a function together with nondeterministic
representations of it and of its negation, repeatedly queries the smaller of
the two greedy hitting sets, and restricts all three on every branch.  Each
queried hitting set kills every maxonomial on its side, so that side's degree
drops strictly and at most deg(p) + deg(q) querying rounds occur.  Queries of
a k-variable set are flattened into k consecutive single-bit tree nodes, so
tree depth counts individual bit queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .boolfn import BooleanFunction, negate, restrict_fn
from .config import check_cap
from .degrees import ndeg
from .polynomials import MultilinearPoly


@dataclass(frozen=True)
class Leaf:
    value: int


@dataclass(frozen=True)
class Query:
    var: int  # original 1-based variable index
    low: "Node"
    high: "Node"


Node = Union[Leaf, Query]


@dataclass(frozen=True)
class HittingSet:
    variables: frozenset[int]
    source: str  # "p" or "q"


@dataclass(frozen=True)
class TraceEntry:
    iteration: int
    side: str
    set_size: int
    deg_p: int
    deg_q: int


def greedy_disjoint_maxonomials(p: MultilinearPoly) -> list[int]:
    """Maximal pairwise-disjoint subcollection of the maxonomials, greedily in
    ascending mask order.  Returns subset masks."""
    if p.is_zero() or p.degree() == 0:
        raise ValueError("constant or zero polynomial has no maxonomials to pack")
    chosen: list[int] = []
    used = 0
    maxos = p.maxonomials()
    for m in maxos:
        if m & used == 0:
            chosen.append(m)
            used |= m
    assert all(m & used for m in maxos)  # maximality: nothing else fits
    return chosen


def hitting_set(p: MultilinearPoly, source: str = "p") -> HittingSet:
    """Union of the greedy disjoint maxonomials; hits every maxonomial."""
    union = 0
    for m in greedy_disjoint_maxonomials(p):
        union |= m
    variables = frozenset(i + 1 for i in range(p.arity) if union & (1 << i))
    for m in p.maxonomials():
        assert m & union
    return HittingSet(variables, source)


def build_tree(f: BooleanFunction, observer=None) -> tuple[Node, list[TraceEntry]]:
    """Decision tree for f via the hitting-set iteration, plus its trace.

    The trace lists, in construction (pre-order) order, each querying round:
    which side was queried, the set size, and the current degrees of both
    representations.
    """
    check_cap(f.arity, "decision-tree construction")
    p = ndeg(f).polynomial
    q = ndeg(negate(f)).polynomial
    trace: list[TraceEntry] = []

    def recurse(
        g: BooleanFunction,
        pg: MultilinearPoly,
        qg: MultilinearPoly,
        orig: tuple[int, ...],
        iteration: int,
    ) -> Node:
        if g.is_constant():
            return Leaf(g.table[0])
        # Nonconstant g forces both representations nonconstant.
        assert pg.degree() > 0 and qg.degree() > 0
        hs_p = hitting_set(pg, "p")
        hs_q = hitting_set(qg, "q")
        if observer is not None:
            observer(g, pg, qg, hs_p, hs_q)
        if len(hs_p.variables) <= len(hs_q.variables):
            side, hs = "p", hs_p
        else:
            side, hs = "q", hs_q
        trace.append(
            TraceEntry(iteration, side, len(hs.variables), pg.degree(), qg.degree())
        )
        local_vars = sorted(hs.variables)
        keep = [i for i in range(1, g.arity + 1) if i not in hs.variables]
        next_orig = tuple(orig[i - 1] for i in keep)

        def branch(pos: int, assignment: dict[int, int]) -> Node:
            if pos == len(local_vars):
                g2 = restrict_fn(g, assignment)
                p2 = pg.restrict(assignment)
                q2 = qg.restrict(assignment)
                if side == "p":
                    assert p2.is_zero() or p2.degree() < pg.degree()
                else:
                    assert q2.is_zero() or q2.degree() < qg.degree()
                return recurse(g2, p2, q2, next_orig, iteration + 1)
            v = local_vars[pos]
            return Query(
                orig[v - 1],
                branch(pos + 1, {**assignment, v: 0}),
                branch(pos + 1, {**assignment, v: 1}),
            )

        return branch(0, {})

    tree = recurse(f, p, q, tuple(range(1, f.arity + 1)), 1)
    return tree, trace


def evaluate_tree(t: Node, x: int) -> int:
    while isinstance(t, Query):
        t = t.high if x & (1 << (t.var - 1)) else t.low
    return t.value


def depth(t: Node) -> int:
    if isinstance(t, Leaf):
        return 0
    return 1 + max(depth(t.low), depth(t.high))


def verify_tree(t: Node, f: BooleanFunction) -> bool:
    """Exhaustive agreement check, plus no-repeated-query path validation."""

    def paths_ok(node: Node, seen: frozenset[int]) -> bool:
        if isinstance(node, Leaf):
            return True
        if node.var in seen or not 1 <= node.var <= f.arity:
            return False
        nxt = seen | {node.var}
        return paths_ok(node.low, nxt) and paths_ok(node.high, nxt)

    if not paths_ok(t, frozenset()):
        return False
    return all(evaluate_tree(t, x) == f.table[x] for x in range(1 << f.arity))


def format_tree(t: Node) -> str:
    if isinstance(t, Leaf):
        return f"(leaf {t.value})"
    return f"(x{t.var} {format_tree(t.low)} {format_tree(t.high)})"


def format_trace(trace: list[TraceEntry]) -> str:
    lines = ["iteration side set_size deg_p deg_q"]
    for e in trace:
        lines.append(f"{e.iteration} {e.side} {e.set_size} {e.deg_p} {e.deg_q}")
    return "\n".join(lines)
