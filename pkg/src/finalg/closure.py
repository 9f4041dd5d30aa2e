"""Closure operators driven by the relation a set induces against a
distinguished element.

Every operator below works through the same generated relation: the smallest
reflexive compatible relation containing I x {top}. Induction takes the left
image of I, deduction the right image, the clot the left image of {top}, and
normality compares I against the congruence class of top.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

from .algebra import ElementSet, FiniteAlgebra, generate_subalgebra, product_square
from .errors import ValueOutOfRange
from .relations import BinRel, compose, left_image, opposite, right_image

Mode = Literal["induction", "deduction"]


def semicongruence_generated(
    algebra: FiniteAlgebra, pairs: Iterable[tuple[int, int]]
) -> BinRel:
    """Smallest reflexive compatible relation containing the given pairs:
    the subalgebra of A x A generated by the pairs and the diagonal."""
    n = algebra.size
    square = product_square(algebra)
    mask = 0
    for a in range(n):
        mask |= 1 << (a * n + a)
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueOutOfRange(f"pair ({a},{b}) outside carrier of size {n}")
        mask |= 1 << (a * n + b)
    closed = generate_subalgebra(square, ElementSet(n * n, mask))
    return BinRel.from_support(closed, n)


def congruence_generated(
    algebra: FiniteAlgebra, pairs: Iterable[tuple[int, int]]
) -> BinRel:
    """Smallest congruence containing the pairs: the union of the alternating
    chain R, R~R, RR~R, ... over the generated semicongruence R (R~ its
    opposite). Reflexivity makes the chain inclusion-increasing, so it stops
    when a full alternation adds nothing."""
    rel = semicongruence_generated(algebra, pairs)
    rev = opposite(rel)
    acc = rel
    while True:
        step = compose(rel, compose(rev, acc))
        if step == acc:
            return acc
        acc = step


def _relation_for(algebra: FiniteAlgebra, top: int, current: ElementSet) -> BinRel:
    return semicongruence_generated(algebra, ((x, top) for x in current))


def _check_top(algebra: FiniteAlgebra, top: int) -> None:
    if not 0 <= top < algebra.size:
        raise ValueOutOfRange(f"top element {top} outside carrier of size {algebra.size}")


def clot_closure(algebra: FiniteAlgebra, top: int, subset: ElementSet) -> ElementSet:
    """Smallest set containing `subset` that is the left class of top under
    its own generated relation; the empty set yields {top}."""
    _check_top(algebra, top)
    rel = _relation_for(algebra, top, subset)
    return left_image(rel, ElementSet.of(algebra.size, (top,)))


def top_induction(algebra: FiniteAlgebra, top: int, subset: ElementSet) -> ElementSet:
    """One induction step: left image of `subset` under its generated relation."""
    _check_top(algebra, top)
    return left_image(_relation_for(algebra, top, subset), subset)


def top_deduction(algebra: FiniteAlgebra, top: int, subset: ElementSet) -> ElementSet:
    """One deduction step: right image of `subset` under its generated relation."""
    _check_top(algebra, top)
    return right_image(_relation_for(algebra, top, subset), subset)


@dataclass(frozen=True)
class ClosureReport:
    """Iteration record. When a fixpoint is reached the chain keeps the first
    repeated stage, so chain[k] == chain[k+1] at k = steps_to_fixpoint;
    steps_to_fixpoint is None when max_steps ran out first."""

    mode: Mode
    chain: tuple[ElementSet, ...]
    steps_to_fixpoint: int | None
    relation_used: BinRel

    def distinct_stages(self) -> tuple[ElementSet, ...]:
        out = [self.chain[0]]
        for stage in self.chain[1:]:
            if stage != out[-1]:
                out.append(stage)
        return tuple(out)

    def final(self) -> ElementSet:
        return self.chain[-1]

    def stage(self, n: int) -> ElementSet:
        if n < len(self.chain):
            return self.chain[n]
        if self.steps_to_fixpoint is None:
            raise ValueOutOfRange(f"stage {n} not computed and no fixpoint reached")
        return self.chain[-1]


def iterate(
    algebra: FiniteAlgebra,
    top: int,
    subset: ElementSet,
    mode: Mode,
    max_steps: int | None = None,
) -> ClosureReport:
    """Apply induction or deduction repeatedly, regenerating the relation from
    the current set at every step, until a fixpoint or max_steps."""
    _check_top(algebra, top)
    if max_steps is None:
        max_steps = algebra.size + 1
    image = left_image if mode == "induction" else right_image
    relation0 = _relation_for(algebra, top, subset)
    rel = relation0
    chain = [subset]
    steps: int | None = None
    for _ in range(max_steps):
        cur = chain[-1]
        nxt = image(rel, cur)
        chain.append(nxt)
        if nxt == cur:
            steps = len(chain) - 2
            break
        rel = _relation_for(algebra, top, nxt)
    return ClosureReport(mode, tuple(chain), steps, relation0)


class NormalityResult(NamedTuple):
    is_normal: bool
    top_class: ElementSet


def is_top_normal(
    algebra: FiniteAlgebra, top: int, subset: ElementSet
) -> NormalityResult:
    """Whether `subset` is exactly the congruence class of top under the
    congruence generated by subset x {top}. The empty set is never normal:
    the class of top contains top."""
    _check_top(algebra, top)
    cong = congruence_generated(algebra, ((x, top) for x in subset))
    cls = left_image(cong, ElementSet.of(algebra.size, (top,)))
    return NormalityResult(subset == cls, cls)


def relation_power_images(
    rel: BinRel, subset: ElementSet, count: int, side: Literal["left", "right"]
) -> list[ElementSet]:
    """[subset, R subset, R^2 subset, ...] (left) or the right-image duals."""
    image = left_image if side == "left" else right_image
    out = [subset]
    for _ in range(count):
        out.append(image(rel, out[-1]))
    return out


def union_of_power_images(
    rel: BinRel, subset: ElementSet, side: Literal["left", "right"]
) -> ElementSet:
    """Union of subset, R subset, R^2 subset, ... (or the right-image duals)."""
    image = left_image if side == "left" else right_image
    acc = subset
    while True:
        nxt = acc | image(rel, acc)
        if nxt == acc:
            return acc
        acc = nxt


def check_sandwich(
    algebra: FiniteAlgebra, top: int, subset: ElementSet, n: int
) -> bool:
    """Verify that the n-th iterated induction sits between the n-th and
    (2^n - 1)-th image of the relation generated by the original set, dually
    for deduction, and that the fixpoints equal the unions of all images."""
    if n < 0:
        raise ValueOutOfRange("n must be non-negative")
    _check_top(algebra, top)
    rel = _relation_for(algebra, top, subset)
    hi = max(1, 2**n - 1)
    for mode, side in (("induction", "left"), ("deduction", "right")):
        report = iterate(algebra, top, subset, mode)  # type: ignore[arg-type]
        powers = relation_power_images(rel, subset, hi, side)  # type: ignore[arg-type]
        stage = report.stage(n)
        if not powers[n].issubset(stage):
            return False
        if not stage.issubset(powers[2**n - 1]):
            return False
        if report.final() != union_of_power_images(rel, subset, side):  # type: ignore[arg-type]
            return False
    return True
