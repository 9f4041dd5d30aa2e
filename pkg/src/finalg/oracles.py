"""Independent per-variety implementations used to cross-check the generic
closure engine, plus a union-find congruence oracle and the exact-arithmetic
infinite-rank deduction chain on the naturals under multiplication.

Nothing here touches the relation machinery: each oracle recomputes its
answer from the defining arithmetic of its variety.
"""
from __future__ import annotations

from itertools import product as iterprod
from typing import Iterable, Sequence

from .algebra import ElementSet, FiniteAlgebra
from .errors import ArityMismatch, AxiomViolation, InvalidPrimeList, SizeMismatch
from .relations import BinRel


class SemiringView:
    """Designates add/mul/zero (optionally one) symbols on an algebra and
    checks the semiring axioms exhaustively at construction: + associative
    and commutative with identity zero, * associative and distributing over +
    from both sides, zero multiplicatively absorbing."""

    def __init__(
        self,
        algebra: FiniteAlgebra,
        add: str = "add",
        mul: str = "mul",
        zero: str = "zero",
        one: str | None = "one",
    ):
        self.algebra = algebra
        if algebra.sig.arity(add) != 2 or algebra.sig.arity(mul) != 2:
            raise ArityMismatch("add and mul must be binary")
        if algebra.sig.arity(zero) != 0:
            raise ArityMismatch("zero must be a constant")
        self._add = algebra.table(add)
        self._mul = algebra.table(mul)
        self.zero = algebra.table(zero)[0]
        self.one: int | None = None
        if one is not None and one in algebra.sig:
            if algebra.sig.arity(one) != 0:
                raise ArityMismatch("one must be a constant")
            self.one = algebra.table(one)[0]
        self._validate()

    def plus(self, a: int, b: int) -> int:
        return self._add[a * self.algebra.size + b]

    def times(self, a: int, b: int) -> int:
        return self._mul[a * self.algebra.size + b]

    def _validate(self) -> None:
        n = self.algebra.size
        rng = range(n)
        for a in rng:
            if self.plus(a, self.zero) != a or self.plus(self.zero, a) != a:
                raise AxiomViolation(f"zero is not an additive identity at {a}")
            if self.times(a, self.zero) != self.zero or self.times(self.zero, a) != self.zero:
                raise AxiomViolation(f"zero is not multiplicatively absorbing at {a}")
            if self.one is not None and (
                self.times(a, self.one) != a or self.times(self.one, a) != a
            ):
                raise AxiomViolation(f"one is not a multiplicative identity at {a}")
        for a, b in iterprod(rng, rng):
            if self.plus(a, b) != self.plus(b, a):
                raise AxiomViolation(f"addition not commutative at ({a},{b})")
        for a, b, c in iterprod(rng, rng, rng):
            if self.plus(self.plus(a, b), c) != self.plus(a, self.plus(b, c)):
                raise AxiomViolation(f"addition not associative at ({a},{b},{c})")
            if self.times(self.times(a, b), c) != self.times(a, self.times(b, c)):
                raise AxiomViolation(f"multiplication not associative at ({a},{b},{c})")
            if self.times(a, self.plus(b, c)) != self.plus(self.times(a, b), self.times(a, c)):
                raise AxiomViolation(f"left distributivity fails at ({a},{b},{c})")
            if self.times(self.plus(a, b), c) != self.plus(self.times(a, c), self.times(b, c)):
                raise AxiomViolation(f"right distributivity fails at ({a},{b},{c})")


def semiring_ideal_generated(view: SemiringView, subset: ElementSet) -> ElementSet:
    """Smallest additive submonoid containing `subset` that is closed under
    multiplication by arbitrary elements on both sides."""
    n = view.algebra.size
    if subset.size != n:
        raise SizeMismatch("subset over a different carrier")
    current = set(subset) | {view.zero}
    while True:
        fresh = set()
        for a, b in iterprod(current, repeat=2):
            fresh.add(view.plus(a, b))
        for a in current:
            for x in range(n):
                fresh.add(view.times(a, x))
                fresh.add(view.times(x, a))
        if fresh.issubset(current):
            return ElementSet.of(n, current)
        current |= fresh


def semiring_ind_oracle(view: SemiringView, subset: ElementSet) -> ElementSet:
    """{x + y | x in subset, y in the ideal generated by subset}; empty stays empty."""
    if not subset:
        return subset
    ideal = semiring_ideal_generated(view, subset)
    return ElementSet.of(
        view.algebra.size, (view.plus(x, y) for x in subset for y in ideal)
    )


def semiring_ded_oracle(view: SemiringView, subset: ElementSet) -> ElementSet:
    """{x | x + y in subset for some y in the ideal generated by subset};
    empty stays empty."""
    if not subset:
        return subset
    ideal = semiring_ideal_generated(view, subset)
    out = [
        x
        for x in range(view.algebra.size)
        if any(view.plus(x, y) in subset for y in ideal)
    ]
    return ElementSet.of(view.algebra.size, out)


def is_ideal(view: SemiringView, subset: ElementSet) -> bool:
    if view.zero not in subset:
        return False
    for a in subset:
        for b in subset:
            if view.plus(a, b) not in subset:
                return False
        for x in range(view.algebra.size):
            if view.times(a, x) not in subset or view.times(x, a) not in subset:
                return False
    return True


def is_subtractive_ideal(view: SemiringView, subset: ElementSet) -> bool:
    """Ideal such that x + y in it and y in it force x in it."""
    if not is_ideal(view, subset):
        return False
    for x in range(view.algebra.size):
        for y in subset:
            if view.plus(x, y) in subset and x not in subset:
                return False
    return True


def subsemigroup_generated(
    algebra: FiniteAlgebra, add: str, subset: ElementSet
) -> ElementSet:
    """Closure of `subset` under the binary operation alone; empty stays empty."""
    n = algebra.size
    if subset.size != n:
        raise SizeMismatch("subset over a different carrier")
    table = algebra.table(add)
    current = set(subset)
    while True:
        fresh = {table[a * n + b] for a in current for b in current}
        if fresh.issubset(current):
            return ElementSet.of(n, current)
        current |= fresh


def subtractive_closure_submonoid(
    algebra: FiniteAlgebra, add: str, subset: ElementSet
) -> ElementSet:
    """Iterate x + y in current and y in current => x in current, until stable."""
    n = algebra.size
    if subset.size != n:
        raise SizeMismatch("subset over a different carrier")
    table = algebra.table(add)
    current = set(subset)
    while True:
        fresh = {
            x
            for x in range(n)
            if x not in current and any(table[x * n + y] in current for y in current)
        }
        if not fresh:
            return ElementSet.of(n, current)
        current |= fresh


def check_maltsev_term(algebra: FiniteAlgebra, symbol: str) -> bool:
    """Whether the ternary operation satisfies p(x, y, y) = x and
    p(x, x, y) = y over the whole carrier."""
    if algebra.sig.arity(symbol) != 3:
        raise ArityMismatch(f"{symbol!r} must be ternary")
    n = algebra.size
    table = algebra.table(symbol)
    for x in range(n):
        for y in range(n):
            if table[(x * n + y) * n + y] != x:
                return False
            if table[(x * n + x) * n + y] != y:
                return False
    return True


def check_subtractive_term(algebra: FiniteAlgebra, symbol: str, zero: int) -> bool:
    """Whether the binary operation satisfies s(x, x) = zero and
    s(x, zero) = x over the whole carrier. These are the subtraction-style
    identities; s(x, y) = x - y realizes them in any group."""
    if algebra.sig.arity(symbol) != 2:
        raise ArityMismatch(f"{symbol!r} must be binary")
    n = algebra.size
    table = algebra.table(symbol)
    for x in range(n):
        if table[x * n + x] != zero:
            return False
        if table[x * n + zero] != x:
            return False
    return True


def check_jonsson_tarski_term(algebra: FiniteAlgebra, symbol: str, zero: int) -> bool:
    """Whether the binary operation satisfies u(x, zero) = x = u(zero, x)."""
    if algebra.sig.arity(symbol) != 2:
        raise ArityMismatch(f"{symbol!r} must be binary")
    n = algebra.size
    table = algebra.table(symbol)
    for x in range(n):
        if table[x * n + zero] != x or table[zero * n + x] != x:
            return False
    return True


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def congruence_by_unionfind(
    algebra: FiniteAlgebra, pairs: Iterable[tuple[int, int]]
) -> BinRel:
    """Congruence generated by the pairs, computed by partition refinement:
    seed the merges, then merge f(..a..) with f(..b..) for every related
    (a, b), every position and every context, until stable. Single-position
    substitution suffices because the partition is transitive."""
    n = algebra.size
    uf = _UnionFind(n)
    for a, b in pairs:
        uf.union(a, b)
    tables = [(arity, table) for _, arity, table in algebra.ops() if arity > 0]
    changed = True
    while changed:
        changed = False
        related = [
            (a, b) for a in range(n) for b in range(a + 1, n) if uf.find(a) == uf.find(b)
        ]
        for arity, table in tables:
            for a, b in related:
                for pos in range(arity):
                    for context in iterprod(range(n), repeat=arity - 1):
                        left = 0
                        right = 0
                        ci = 0
                        for j in range(arity):
                            if j == pos:
                                left = left * n + a
                                right = right * n + b
                            else:
                                left = left * n + context[ci]
                                right = right * n + context[ci]
                                ci += 1
                        if uf.union(table[left], table[right]):
                            changed = True
    rows = [0] * n
    for a in range(n):
        for b in range(n):
            if uf.find(a) == uf.find(b):
                rows[a] |= 1 << b
    return BinRel(n, tuple(rows))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _nat_ded_step(stage: frozenset[int]) -> frozenset[int]:
    # products of >= 1 stage elements, confined to divisors of stage elements
    members = sorted(stage)

    def divides_some(q: int) -> bool:
        return any(j % q == 0 for j in members)

    products: set[int] = set()
    frontier = {q for q in members if divides_some(q)}
    while frontier:
        products |= frontier
        nxt = set()
        for q in frontier:
            for y in members:
                qq = q * y
                if qq not in products and divides_some(qq):
                    nxt.add(qq)
        frontier = nxt - products
    out = set(stage)
    for q in products:
        for j in members:
            if j % q == 0:
                out.add(j // q)
    return frozenset(out)


def nat_mult_deduction_chain(
    primes: Sequence[int], m: int, d: int
) -> list[frozenset[int]]:
    """Stages ded^0 .. ded^d of iterated deduction in the commutative monoid
    of naturals under multiplication with top 1, seeded with the consecutive
    products {p0*p1, ..., p_{m-1}*p_m} where p0 = 1 and p1..pm are the given
    primes. Every stage element divides a seed element, so the computation
    stays inside a finite divisor universe. Exact integer arithmetic."""
    if m < 2:
        raise InvalidPrimeList("truncation must be at least 2")
    if m > len(primes):
        raise InvalidPrimeList(f"need at least {m} primes, got {len(primes)}")
    chosen = list(primes[:m])
    if len(set(chosen)) != len(chosen):
        raise InvalidPrimeList("primes must be distinct")
    for p in chosen:
        if not _is_prime(p):
            raise InvalidPrimeList(f"{p} is not prime")
    if d < 0:
        raise InvalidPrimeList("depth must be non-negative")
    ps = [1] + chosen
    seed = frozenset(ps[k] * ps[k + 1] for k in range(m))
    stages = [seed]
    for _ in range(d):
        stages.append(_nat_ded_step(stages[-1]))
    return stages
