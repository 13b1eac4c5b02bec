"""Corpus-wide verification of every inequality the library implements.

``verify_function`` computes all measures of one function, with witnesses,
and evaluates a fixed list of named checks; constants skip the checks that
only quantify over nonconstant functions.  ``verify_corpus`` maps it over an
exhaustive, seeded-random, or family corpus and reduces deterministically.
``verify_families`` checks the anchored point values of the named families.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import boolfn as bf
from . import degrees, dtree, symmetry
from .boolfn import BooleanFunction, negate
from .config import check_cap
from .polynomials import format_poly

SPEC_VERSION = 1

NONCONSTANT_ONLY_CHECKS = (
    "lem_sdeg_lower",
    "lem_hitset_upper",
    "eq_inf_bounds",
    "eq_infi_bound",
)

ALL_CHECKS = (
    "fact_sdeg_rdeg_deg",
    "fact_rdeg_ndeg",
    "lem_sdeg_lower",
    "lem_hitset_upper",
    "cor_final",
    "cor_final_ndeg",
    "eq_inf_bounds",
    "eq_infi_bound",
    "tree_valid",
)


def _frac(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class MeasureReport:
    function_id: str
    n: int
    deg: int
    ndeg: int
    ndeg_neg: int
    rdeg: int
    sdeg: int
    D_oracle: int
    tree_depth: int
    min_bs_0: int | None
    min_bs_1: int | None
    influence_total: Fraction
    checks: dict[str, str] = field(default_factory=dict)
    witness_digests: dict[str, str] = field(default_factory=dict)

    def failures(self) -> list[tuple[str, str]]:
        return [(k, v) for k, v in self.checks.items() if v.startswith("fail")]

    def skipped(self) -> int:
        return sum(1 for v in self.checks.values() if v.startswith("skipped"))

    def to_dict(self) -> dict:
        return {
            "spec_version": SPEC_VERSION,
            "function": self.function_id,
            "n": self.n,
            "deg": self.deg,
            "ndeg": self.ndeg,
            "ndeg_neg": self.ndeg_neg,
            "rdeg": self.rdeg,
            "sdeg": self.sdeg,
            "D_oracle": self.D_oracle,
            "tree_depth": self.tree_depth,
            "min_bs_0": self.min_bs_0,
            "min_bs_1": self.min_bs_1,
            "influence_total": _frac(self.influence_total),
            "checks": dict(self.checks),
            "witness_digests": dict(self.witness_digests),
        }


def verify_function(f: BooleanFunction, function_id: str | None = None) -> MeasureReport:
    """All measures with witnesses, and a verdict for every named check."""
    check_cap(f.arity, "function verification")
    fid = function_id if function_id is not None else f"table:{f.digest()}"
    n = f.arity

    deg_val, deg_poly = degrees.deg(f)
    wp = degrees.ndeg(f)
    wq = degrees.ndeg(negate(f))
    rdeg_val, rrep = degrees.rdeg(f)
    sw = degrees.sdeg(f)
    d_oracle = bf.decision_tree_complexity(f)
    tree, _trace = dtree.build_tree(f)
    tree_depth = dtree.depth(tree)
    constant = f.is_constant()
    min_bs_0 = bf.min_block_sensitivity(f, 0) if f.zeros() else None
    min_bs_1 = bf.min_block_sensitivity(f, 1) if f.ones() else None
    inf_total = bf.total_influence(f)
    dep_vars = bf.dependent_variables(f)

    checks: dict[str, str] = {}

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks[name] = "pass" if ok else f"fail: {detail}"

    def skip(name: str) -> None:
        checks[name] = "skipped: constant function"

    record(
        "fact_sdeg_rdeg_deg",
        sw.degree <= 2 * rdeg_val and rdeg_val <= deg_val,
        f"sdeg={sw.degree} rdeg={rdeg_val} deg={deg_val}",
    )

    rep_ok = rdeg_val == max(wp.degree, wq.degree)
    if rep_ok:
        for x in range(1 << n):
            qx = rrep.denominator.evaluate(x)
            if qx == 0 or rrep.numerator.evaluate(x) / qx != f.table[x]:
                rep_ok = False
                break
    record("fact_rdeg_ndeg", rep_ok, f"rdeg={rdeg_val} ndeg={wp.degree} ndeg_neg={wq.degree}")

    if constant:
        for name in NONCONSTANT_ONLY_CHECKS:
            skip(name)
    else:
        min_bs_all = min(min_bs_0, min_bs_1)
        record(
            "lem_sdeg_lower",
            min_bs_all <= 2 * sw.degree**2,
            f"min_bs={min_bs_all} sdeg={sw.degree}",
        )
        hp = dtree.hitting_set(wp.polynomial, "p")
        hq = dtree.hitting_set(wq.polynomial, "q")
        record(
            "lem_hitset_upper",
            len(hp.variables) <= wp.degree * min_bs_0
            and len(hq.variables) <= wq.degree * min_bs_1,
            f"|H|={len(hp.variables)} |K|={len(hq.variables)} "
            f"deg_p={wp.degree} deg_q={wq.degree} "
            f"min_bs_0={min_bs_0} min_bs_1={min_bs_1}",
        )
        bound = Fraction(len(dep_vars), 1 << (2 * rdeg_val))
        record(
            "eq_inf_bounds",
            bound <= inf_total <= deg_val,
            f"lower={bound} inf={inf_total} deg={deg_val}",
        )
        per_var = Fraction(1, 1 << (2 * rdeg_val))
        record(
            "eq_infi_bound",
            all(bf.influence(f, i) >= per_var for i in dep_vars),
            f"bound={per_var}",
        )

    cap = 4 * sw.degree**2 * rdeg_val**2
    record(
        "cor_final",
        deg_val <= d_oracle <= tree_depth <= cap <= 16 * rdeg_val**4,
        f"deg={deg_val} D={d_oracle} depth={tree_depth} "
        f"4s2r2={cap} 16r4={16 * rdeg_val ** 4}",
    )
    record(
        "cor_final_ndeg",
        d_oracle <= 2 * wp.degree**2 * wq.degree**2,
        f"D={d_oracle} ndeg={wp.degree} ndeg_neg={wq.degree}",
    )
    record("tree_valid", dtree.verify_tree(tree, f), "tree disagrees with f")

    ordered = {name: checks[name] for name in ALL_CHECKS}
    return MeasureReport(
        function_id=fid,
        n=n,
        deg=deg_val,
        ndeg=wp.degree,
        ndeg_neg=wq.degree,
        rdeg=rdeg_val,
        sdeg=sw.degree,
        D_oracle=d_oracle,
        tree_depth=tree_depth,
        min_bs_0=min_bs_0,
        min_bs_1=min_bs_1,
        influence_total=inf_total,
        checks=ordered,
        witness_digests={
            "deg": _digest(format_poly(deg_poly)),
            "ndeg": _digest(format_poly(wp.polynomial)),
            "ndeg_neg": _digest(format_poly(wq.polynomial)),
            "sdeg": _digest(format_poly(sw.polynomial)),
            "tree": _digest(dtree.format_tree(tree)),
        },
    )


@dataclass(frozen=True)
class CorpusSpec:
    n: int
    mode: str  # "exhaustive" | "sampled" | "families"
    count: int | None = None
    seed: int | None = None
    families: tuple[str, ...] = ()

    def validate(self) -> None:
        if self.mode == "exhaustive":
            if self.n > 4:
                raise ValueError("exhaustive mode is limited to n <= 4")
        elif self.mode == "sampled":
            if self.seed is None or self.count is None:
                raise ValueError("sampled mode requires count and an explicit seed")
        elif self.mode == "families":
            if not self.families:
                raise ValueError("families mode requires a family list")
        else:
            raise ValueError(f"unknown corpus mode {self.mode!r}")


def corpus_functions(spec: CorpusSpec):
    spec.validate()
    if spec.mode == "exhaustive":
        for k in range(1 << (1 << spec.n)):
            yield f"table:{k}", BooleanFunction.from_int(spec.n, k)
    elif spec.mode == "sampled":
        rng = random.Random(spec.seed)
        for j in range(spec.count):
            k = rng.getrandbits(1 << spec.n)
            yield f"sample{j}:table:{k}", BooleanFunction.from_int(spec.n, k)
    else:
        for name in spec.families:
            yield f"family:{name}", bf.family(name, n=spec.n)


def verify_corpus(spec: CorpusSpec, progress=None) -> dict:
    """Run verify_function across the corpus; deterministic ordered summary."""
    total = 0
    skipped = 0
    failures: list[dict] = []
    max_ratio: Fraction | None = None
    max_ratio_fn = ""
    for fid, f in corpus_functions(spec):
        report = verify_function(f, fid)
        total += 1
        skipped += report.skipped()
        for name, verdict in report.failures():
            failures.append({"function": fid, "check": name, "detail": verdict})
        if report.rdeg > 0:
            ratio = Fraction(report.D_oracle, report.rdeg**4)
            if max_ratio is None or ratio > max_ratio:
                max_ratio = ratio
                max_ratio_fn = fid
        if progress is not None and total % 1024 == 0:
            progress(total)
    return {
        "spec_version": SPEC_VERSION,
        "n": spec.n,
        "mode": spec.mode,
        "count": spec.count,
        "seed": spec.seed,
        "functions": total,
        "failures": failures,
        "failure_count": len(failures),
        "skipped_checks": skipped,
        "max_D_over_rdeg4": _frac(max_ratio) if max_ratio is not None else None,
        "max_D_over_rdeg4_function": max_ratio_fn,
        "passed": not failures,
    }


def verify_families() -> dict:
    """Point-value checks for the named families plus the certificate sweeps."""
    results: list[dict] = []

    def check(name: str, ok: bool, observed: str) -> None:
        results.append(
            {"name": name, "verdict": "pass" if ok else "fail", "observed": observed}
        )

    for n in range(1, 5):
        w = degrees.ndeg(bf.family("AND", n))
        check(f"ndeg(AND_{n}) = {n}", w.degree == n, f"ndeg={w.degree}")

    for n in (2, 4):
        f = bf.family("PARITY", n)
        w = degrees.ndeg(f)
        r, _ = degrees.rdeg(f)
        check(f"ndeg(PARITY_{n}) >= {n}/2", 2 * w.degree >= n, f"ndeg={w.degree}")
        check(f"rdeg(PARITY_{n}) = {n // 2}", r == n // 2, f"rdeg={r}")

    for n in range(1, 5):
        sw = degrees.sdeg(bf.family("PARITY", n))
        check(f"sdeg(PARITY_{n}) = {n}", sw.degree == n, f"sdeg={sw.degree}")

    for n in (3, 5):
        f = bf.family("MAJ", n)
        sw = degrees.sdeg(f)
        lo = min(degrees.ndeg(f).degree, degrees.ndeg(negate(f)).degree)
        check(f"sdeg(MAJ_{n}) = 1", sw.degree == 1, f"sdeg={sw.degree}")
        check(
            f"min(ndeg, ndeg_neg)(MAJ_{n}) >= {n}/2", 2 * lo >= n, f"min={lo}"
        )

    eq4 = bf.family("EQUATOR", 4)
    sw = degrees.sdeg(eq4)
    bs_val, _ = bf.block_sensitivity_at(eq4, 0b0011)  # the point 1100
    check("sdeg(EQUATOR_4) <= 2", sw.degree <= 2, f"sdeg={sw.degree}")
    check("bs_1100(EQUATOR_4) >= 4", bs_val >= 4, f"bs={bs_val}")

    par2 = bf.family("PARITY", 2)
    d2 = bf.decision_tree_complexity(par2)
    r2, _ = degrees.rdeg(par2)
    check("D(PARITY_2) = 2 = 2*rdeg^4", d2 == 2 == 2 * r2**4, f"D={d2} rdeg={r2}")

    andor = bf.family("ANDOR", m=2)
    r_a, _ = degrees.rdeg(andor)
    d_a, _ = degrees.deg(andor)
    check("rdeg(ANDOR_2) = 2", r_a == 2, f"rdeg={r_a}")
    check("deg(ANDOR_2) = 4", d_a == 4, f"deg={d_a}")

    for n in (2, 3):
        g1, g2 = degrees.counterexample_forms(n)
        pf = bf.family("COUNTEREXAMPLE", n)
        no_common = all(
            g1.evaluate(x) != 0 or g2.evaluate(x) != 0 for x in range(1 << (2 * n))
        )
        pd = degrees.partial_degree(pf)
        check(
            f"COUNTEREXAMPLE({n}) forms: degree 1, no common zeros",
            g1.degree() == 1 and g2.degree() == 1 and no_common,
            f"deg_g1={g1.degree()} deg_g2={g2.degree()} no_common={no_common}",
        )
        check(f"partial_degree(COUNTEREXAMPLE({n})) >= {n}", pd >= n, f"pd={pd}")
        interpolant = degrees.partial_interpolant(pf)
        sym = symmetry.minsky_papert_symmetrize(
            interpolant, range(1, n + 1), fresh="s"
        )
        sym = symmetry.minsky_papert_symmetrize(
            sym, range(n + 1, 2 * n + 1), fresh="t"
        )
        zero_line = all(sym.evaluate({}, [0, t]) == 0 for t in range(n + 1))
        one_line = all(
            sym.evaluate({}, [s, n + 1 - s]) == 1 for s in range(1, n + 1)
        )
        check(
            f"COUNTEREXAMPLE({n}) symmetrization pattern",
            zero_line and one_line,
            f"P(0,t)=0:{zero_line} P(s,n+1-s)=1:{one_line}",
        )

    bad = 0
    for k in range(1, (1 << 8) - 1):  # nonconstant 3-variable functions
        f = BooleanFunction.from_int(3, k)
        g1 = degrees.ndeg(f).polynomial
        g2 = degrees.ndeg(negate(f)).polynomial
        cert = degrees.hypercube_nullstellensatz(g1, g2)
        bound = 2 * g1.degree() ** 2 * g2.degree() ** 2
        if not (
            cert.verified and max(cert.degree_h1g1, cert.degree_h2g2) <= bound
        ):
            bad += 1
    check(
        "nullstellensatz certificates for all nonconstant n=3 functions",
        bad == 0,
        f"failures={bad}/254",
    )

    failures = [r for r in results if r["verdict"] != "pass"]
    return {
        "spec_version": SPEC_VERSION,
        "checks": results,
        "failure_count": len(failures),
        "passed": not failures,
    }
