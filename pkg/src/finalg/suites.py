"""Named verification suites over the catalog.

Each suite exhaustively replays one family of claims on every applicable
catalog algebra and subset, comparing the generic closure engine against the
per-variety oracles. Suites are deterministic; every failure carries the
algebra name, the subset, and both sides of the failed comparison.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .algebra import ElementSet, generate_subalgebra, product_square, stabilized_term_images
from .catalog import CatalogEntry, build_catalog
from .closure import (
    clot_closure,
    congruence_generated,
    is_top_normal,
    iterate,
    relation_power_images,
    semicongruence_generated,
    top_deduction,
    top_induction,
    union_of_power_images,
)
from .errors import UnknownSuite
from .oracles import (
    SemiringView,
    check_jonsson_tarski_term,
    check_maltsev_term,
    check_subtractive_term,
    nat_mult_deduction_chain,
    semiring_ded_oracle,
    semiring_ind_oracle,
    is_subtractive_ideal,
    subsemigroup_generated,
)
from .ranks import algebra_rank, subsets_in_order
from .relations import BinRel, compose, left_image, right_image

DEFAULT_PRIMES = (2, 3, 5, 7, 11)
DEFAULT_DEPTH = 4


@dataclass(frozen=True)
class SuiteFailure:
    algebra: str
    subset: str
    check: str
    expected: str
    actual: str

    def line(self) -> str:
        return (
            f"fail algebra={self.algebra} set={self.subset} check={self.check} "
            f"expected={self.expected} actual={self.actual}"
        )


@dataclass(frozen=True)
class SuiteReport:
    name: str
    cases: int
    failures: tuple[SuiteFailure, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        return f"{word} {self.name} {self.cases} {len(self.failures)}"

    def lines(self) -> list[str]:
        return [self.summary()] + [f.line() for f in self.failures]


class _Collector:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[SuiteFailure] = []

    def check(self, ok: bool, algebra: str, subset: str, check: str, expected, actual) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(
                SuiteFailure(algebra, subset, check, str(expected), str(actual))
            )

    def equal(self, algebra: str, subset: str, check: str, expected, actual) -> None:
        self.check(expected == actual, algebra, subset, check, expected, actual)


def _induced_rel(entry: CatalogEntry, subset: ElementSet) -> BinRel:
    top = entry.algebra.top
    assert top is not None
    return semicongruence_generated(entry.algebra, ((x, top) for x in subset))


def _suite_theorem_a(col: _Collector, limit: int) -> None:
    # nonempty set normal iff one induction step and one deduction step fix it
    for entry in build_catalog(limit):
        alg, top = entry.algebra, entry.algebra.top
        for subset in subsets_in_order(alg.size):
            rel = _induced_rel(entry, subset)
            fixed = left_image(rel, subset) == subset and right_image(rel, subset) == subset
            normal = is_top_normal(alg, top, subset).is_normal
            col.equal(entry.name, str(subset), "normal-iff-inductive-and-deductive", fixed, normal)


def _suite_theorem_b(col: _Collector, limit: int) -> None:
    # claimed equivalence: I covers the subalgebra generated by {top} iff one
    # induction step covers the subalgebra generated by I.  The forward
    # implication holds everywhere; the converse has genuine counterexamples
    # (smallest: the additive cyclic monoid of order 2 with I = {1}), so this
    # suite reports real failures rather than a weakened check.
    for entry in build_catalog(limit):
        alg, top = entry.algebra, entry.algebra.top
        top_sub = generate_subalgebra(alg, ElementSet.of(alg.size, (top,)))
        for subset in subsets_in_order(alg.size):
            lhs = top_sub.issubset(subset)
            rhs = generate_subalgebra(alg, subset).issubset(top_induction(alg, top, subset))
            col.check(
                lhs == rhs, entry.name, str(subset),
                "covers-top-subalgebra-iff-induction-covers-generated",
                f"set-covers-top-subalgebra={lhs}",
                f"induction-covers-generated={rhs}",
            )


def _suite_theorem_c(col: _Collector, limit: int) -> None:
    # iterated closures sandwiched between relation powers n and 2^n - 1,
    # and the fixpoints equal the unions of all powers
    max_n = 3
    hi = 2**max_n - 1
    for entry in build_catalog(limit):
        alg, top = entry.algebra, entry.algebra.top
        for subset in subsets_in_order(alg.size):
            rel = _induced_rel(entry, subset)
            for mode, side in (("induction", "left"), ("deduction", "right")):
                report = iterate(alg, top, subset, mode)
                powers = relation_power_images(rel, subset, hi, side)
                for n in range(max_n + 1):
                    stage = report.stage(n)
                    ok = powers[n].issubset(stage) and stage.issubset(powers[2**n - 1])
                    col.check(
                        ok, entry.name, str(subset), f"{mode}-sandwich-n{n}",
                        f"{powers[n]}<=stage<={powers[2**n - 1]}", str(stage),
                    )
                col.equal(
                    entry.name, str(subset), f"{mode}-fixpoint-is-union-of-powers",
                    union_of_power_images(rel, subset, side), report.final(),
                )


def _suite_clot_idempotent(col: _Collector, limit: int) -> None:
    for entry in build_catalog(limit):
        alg, top = entry.algebra, entry.algebra.top
        for subset in subsets_in_order(alg.size, nonempty=False):
            once = clot_closure(alg, top, subset)
            twice = clot_closure(alg, top, once)
            col.equal(entry.name, str(subset), "clot-idempotent", once, twice)


def _suite_term_oracle(col: _Collector, limit: int) -> None:
    # relation closure vs depth-stabilized term enumeration on the square
    for entry in build_catalog(limit):
        alg, top = entry.algebra, entry.algebra.top
        if alg.size > 4:
            continue
        n = alg.size
        square = product_square(alg)
        diagonal = 0
        for a in range(n):
            diagonal |= 1 << (a * n + a)
        for subset in subsets_in_order(alg.size, nonempty=False):
            mask = diagonal
            for x in subset:
                mask |= 1 << (x * n + top)
            enum = BinRel.from_support(
                stabilized_term_images(square, ElementSet(n * n, mask)), n
            )
            rel = _induced_rel(entry, subset)
            col.equal(entry.name, str(subset), "semicongruence-equals-term-enumeration",
                      sorted(enum.pairs()), sorted(rel.pairs()))
            col.equal(entry.name, str(subset), "induction-equals-term-description",
                      left_image(enum, subset), top_induction(alg, top, subset))
            col.equal(entry.name, str(subset), "deduction-equals-term-description",
                      right_image(enum, subset), top_deduction(alg, top, subset))


def _suite_semiring(col: _Collector, limit: int) -> None:
    for entry in build_catalog(limit):
        if entry.semiring_symbols is None:
            continue
        alg, top = entry.algebra, entry.algebra.top
        add, mul, zero, one = entry.semiring_symbols
        view = SemiringView(alg, add, mul, zero, one)
        for subset in subsets_in_order(alg.size, nonempty=False):
            rel = _induced_rel(entry, subset)
            ind = left_image(rel, subset)
            ded = right_image(rel, subset)
            col.equal(entry.name, str(subset), "induction-equals-sum-with-ideal",
                      semiring_ind_oracle(view, subset), ind)
            col.equal(entry.name, str(subset), "deduction-equals-ideal-difference",
                      semiring_ded_oracle(view, subset), ded)
            col.equal(entry.name, str(subset), "induction-idempotent",
                      ind, top_induction(alg, top, ind))
            col.equal(entry.name, str(subset), "deduction-idempotent",
                      ded, top_deduction(alg, top, ded))
            col.equal(entry.name, str(subset), "relation-composition-idempotent",
                      rel, compose(rel, rel))
            if subset:
                col.equal(entry.name, str(subset), "normal-iff-subtractive-ideal",
                          is_subtractive_ideal(view, subset),
                          is_top_normal(alg, top, subset).is_normal)


def _submonoids(entry: CatalogEntry) -> list[ElementSet]:
    alg = entry.algebra
    add, zero = entry.monoid_symbols
    table = alg.table(add)
    zero_value = alg.table(zero)[0]
    out = []
    for subset in subsets_in_order(alg.size, nonempty=False):
        if zero_value not in subset:
            continue
        if all(table[a * alg.size + b] in subset for a in subset for b in subset):
            out.append(subset)
    return out


def _suite_comm_monoid(col: _Collector, limit: int) -> None:
    for entry in build_catalog(limit):
        if entry.monoid_symbols is None:
            continue
        alg, top = entry.algebra, entry.algebra.top
        add, _ = entry.monoid_symbols
        table = alg.table(add)
        n = alg.size
        for subset in subsets_in_order(alg.size):
            ind = top_induction(alg, top, subset)
            col.equal(entry.name, str(subset), "induction-equals-generated-subsemigroup",
                      subsemigroup_generated(alg, add, subset), ind)
            col.equal(entry.name, str(subset), "induction-idempotent",
                      ind, top_induction(alg, top, ind))
        for subset in _submonoids(entry):
            ded = top_deduction(alg, top, subset)
            one_step = ElementSet.of(
                n,
                (x for x in range(n) if any(table[x * n + y] in subset for y in subset)),
            )
            col.equal(entry.name, str(subset), "submonoid-deduction-one-step-formula",
                      one_step, ded)
            subtractive = all(
                x in subset
                for x in range(n)
                for y in subset
                if table[x * n + y] in subset
            )
            col.equal(entry.name, str(subset), "deductively-closed-iff-subtractive",
                      subtractive, ded.issubset(subset))


def _pair_sets(size: int) -> list[list[tuple[int, int]]]:
    """All pair sets for size <= 2, singletons and 2-element sets above."""
    codes = [(a, b) for a in range(size) for b in range(size)]
    if size <= 2:
        out: list[list[tuple[int, int]]] = []
        for r in range(len(codes) + 1):
            out.extend(list(c) for c in combinations(codes, r))
        return out
    out = [[]]
    out.extend([c] for c in codes)
    out.extend(list(c) for c in combinations(codes, 2))
    return out


def _suite_maltsev(col: _Collector, limit: int) -> None:
    for entry in build_catalog(limit):
        if entry.maltsev_symbol is None:
            continue
        alg, top = entry.algebra, entry.algebra.top
        verified = check_maltsev_term(alg, entry.maltsev_symbol)
        col.check(verified, entry.name, "-", "maltsev-term-verifies", True, verified)
        for subset in subsets_in_order(alg.size, nonempty=False):
            rel = _induced_rel(entry, subset)
            col.equal(entry.name, str(subset), "induction-equals-deduction",
                      left_image(rel, subset), right_image(rel, subset))
        for pairs in _pair_sets(alg.size):
            rel = semicongruence_generated(alg, pairs)
            label = "".join(f"({a},{b})" for a, b in pairs) or "()"
            col.check(rel.is_symmetric() and rel.is_transitive(),
                      entry.name, label, "semicongruence-already-congruence",
                      "symmetric and transitive", sorted(rel.pairs()))
        for mode in ("induction", "deduction"):
            result = algebra_rank(alg, top, mode)
            col.check(result.rank is not None and result.rank <= 1,
                      entry.name, str(result.witness), f"{mode}-rank-at-most-1",
                      "<=1", result.describe())


def _suite_subtractive(col: _Collector, limit: int) -> None:
    for entry in build_catalog(limit):
        if entry.subtractive_symbol is None:
            continue
        alg, top = entry.algebra, entry.algebra.top
        verified = check_subtractive_term(alg, entry.subtractive_symbol, top)
        col.check(verified, entry.name, "-", "subtractive-term-verifies", True, verified)
        for mode in ("induction", "deduction"):
            result = algebra_rank(alg, top, mode)
            col.check(result.rank is not None and result.rank <= 2,
                      entry.name, str(result.witness), f"{mode}-rank-at-most-2",
                      "<=2", result.describe())
        for subset in subsets_in_order(alg.size):
            ind_fix = iterate(alg, top, subset, "induction").final()
            ded_fix = iterate(alg, top, subset, "deduction").final()
            clot = clot_closure(alg, top, subset)
            col.equal(entry.name, str(subset), "induction-fixpoint-equals-clot", clot, ind_fix)
            col.equal(entry.name, str(subset), "deduction-fixpoint-equals-clot", clot, ded_fix)


def _suite_jonsson_tarski(col: _Collector, limit: int) -> None:
    for entry in build_catalog(limit):
        if entry.subtractive_symbol is None or entry.jonsson_tarski_symbol is None:
            continue
        alg, top = entry.algebra, entry.algebra.top
        if not check_subtractive_term(alg, entry.subtractive_symbol, top):
            continue
        verified = check_jonsson_tarski_term(alg, entry.jonsson_tarski_symbol, top)
        col.check(verified, entry.name, "-", "jonsson-tarski-term-verifies", True, verified)
        for mode in ("induction", "deduction"):
            result = algebra_rank(alg, top, mode)
            col.check(result.rank is not None and result.rank <= 1,
                      entry.name, str(result.witness), f"{mode}-rank-at-most-1",
                      "<=1", result.describe())


def _suite_rank0(col: _Collector, limit: int) -> None:
    # pointed sets: every non-projection term is constant, induction is the
    # identity, deduction stabilizes after exactly one step
    for entry in build_catalog(limit):
        if entry.kind != "pointed" or entry.algebra.size < 2:
            continue
        alg, top = entry.algebra, entry.algebra.top
        for subset in subsets_in_order(alg.size, nonempty=False):
            col.equal(entry.name, str(subset), "induction-is-identity",
                      subset, top_induction(alg, top, subset))
            if subset:
                col.equal(entry.name, str(subset), "deduction-adds-top",
                          subset.with_element(top), top_deduction(alg, top, subset))
        ind_rank = algebra_rank(alg, top, "induction")
        col.check(ind_rank.rank == 0, entry.name, str(ind_rank.witness),
                  "induction-rank-0", 0, ind_rank.describe())
        ded_rank = algebra_rank(alg, top, "deduction")
        col.check(ded_rank.rank == 1, entry.name, str(ded_rank.witness),
                  "deduction-rank-1", 1, ded_rank.describe())


def _format_nat(stage: frozenset[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(stage)) + "}"


def _suite_nat_chain(col: _Collector, primes: tuple[int, ...], depth: int) -> None:
    # exact chain on (N, *, 1): stage k adds p_{k+1} while the truncation lasts
    m = len(primes)
    stages = nat_mult_deduction_chain(primes, m, depth)
    ps = [1] + list(primes)
    seed = stages[0]
    name = "nat-mult"
    col.equal(name, _format_nat(seed), "stage-0-is-seed",
              _format_nat(frozenset(ps[k] * ps[k + 1] for k in range(m))), _format_nat(seed))
    for k in range(1, depth + 1):
        if k < m:
            expected = frozenset(ps[: k + 2]) | seed
            col.equal(name, f"stage-{k}", "stage-matches-closed-form",
                      _format_nat(expected), _format_nat(stages[k]))
            col.check(len(stages[k]) > len(stages[k - 1]), name, f"stage-{k}",
                      "strict-growth", f">{len(stages[k - 1])} elements",
                      f"{len(stages[k])} elements")
        else:
            col.equal(name, f"stage-{k}", "stage-stable-after-truncation",
                      _format_nat(stages[m - 1]), _format_nat(stages[k]))


_SUITES = {
    "theorem-a": (_suite_theorem_a, 4),
    "theorem-b": (_suite_theorem_b, 4),
    "theorem-c": (_suite_theorem_c, 4),
    "clot-idempotent": (_suite_clot_idempotent, 4),
    "term-oracle": (_suite_term_oracle, 4),
    "semiring": (_suite_semiring, 4),
    "comm-monoid": (_suite_comm_monoid, 5),
    "maltsev": (_suite_maltsev, 4),
    "subtractive": (_suite_subtractive, 4),
    "jonsson-tarski": (_suite_jonsson_tarski, 4),
    "rank0": (_suite_rank0, 4),
    "nat-chain": (None, None),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(
    name: str,
    limit: int | None = None,
    primes: tuple[int, ...] | None = None,
    depth: int | None = None,
) -> SuiteReport:
    """Run one named suite and report cases, failures, and elapsed time."""
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    col = _Collector()
    start = time.perf_counter()
    if name == "nat-chain":
        _suite_nat_chain(col, primes or DEFAULT_PRIMES, DEFAULT_DEPTH if depth is None else depth)
    else:
        fn, default_limit = _SUITES[name]
        fn(col, default_limit if limit is None else limit)
    elapsed = time.perf_counter() - start
    return SuiteReport(name, col.cases, tuple(col.failures), elapsed)
