"""Deterministic catalog of small named algebras used by the verification
suites. Every entry fixes a top element and tags the symbols the per-variety
oracles need."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteAlgebra, Signature, make_algebra
from .errors import ValueOutOfRange


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: FiniteAlgebra
    kind: str
    semiring_symbols: tuple[str, str, str, str] | None = None  # add, mul, zero, one
    monoid_symbols: tuple[str, str] | None = None  # add, zero
    maltsev_symbol: str | None = None
    subtractive_symbol: str | None = None
    jonsson_tarski_symbol: str | None = None


def _binary(n: int, fn) -> tuple[int, ...]:
    return tuple(fn(a, b) for a in range(n) for b in range(n))


def _ternary(n: int, fn) -> tuple[int, ...]:
    return tuple(fn(a, b, c) for a in range(n) for b in range(n) for c in range(n))


def cyclic_monoid(n: int) -> CatalogEntry:
    alg = make_algebra(
        Signature.of(("add", 2), ("zero", 0)),
        n,
        {"add": _binary(n, lambda a, b: (a + b) % n), "zero": [0]},
        top=0,
    )
    return CatalogEntry(
        f"z{n}-monoid",
        alg,
        "monoid",
        monoid_symbols=("add", "zero"),
        jonsson_tarski_symbol="add",
    )


def saturating_monoid(cap: int) -> CatalogEntry:
    n = cap + 1
    alg = make_algebra(
        Signature.of(("add", 2), ("zero", 0)),
        n,
        {"add": _binary(n, lambda a, b: min(a + b, cap)), "zero": [0]},
        top=0,
    )
    return CatalogEntry(
        f"sat{cap}-monoid",
        alg,
        "monoid",
        monoid_symbols=("add", "zero"),
        jonsson_tarski_symbol="add",
    )


def _group_tables(n: int) -> dict:
    return {
        "add": _binary(n, lambda a, b: (a + b) % n),
        "neg": tuple((-a) % n for a in range(n)),
        "sub": _binary(n, lambda a, b: (a - b) % n),
        "mal": _ternary(n, lambda a, b, c: (a - b + c) % n),
        "zero": [0],
    }


def cyclic_group(n: int) -> CatalogEntry:
    alg = make_algebra(
        Signature.of(("add", 2), ("neg", 1), ("sub", 2), ("mal", 3), ("zero", 0)),
        n,
        _group_tables(n),
        top=0,
    )
    return CatalogEntry(
        f"z{n}-group",
        alg,
        "group",
        maltsev_symbol="mal",
        subtractive_symbol="sub",
        jonsson_tarski_symbol="add",
    )


def cyclic_ring(n: int) -> CatalogEntry:
    tables = _group_tables(n)
    tables["mul"] = _binary(n, lambda a, b: (a * b) % n)
    tables["one"] = [1 % n]
    alg = make_algebra(
        Signature.of(
            ("add", 2), ("neg", 1), ("sub", 2), ("mal", 3),
            ("mul", 2), ("zero", 0), ("one", 0),
        ),
        n,
        tables,
        top=0,
    )
    return CatalogEntry(
        f"z{n}-ring",
        alg,
        "ring",
        maltsev_symbol="mal",
        subtractive_symbol="sub",
        jonsson_tarski_symbol="add",
    )


def cyclic_semiring(n: int) -> CatalogEntry:
    alg = make_algebra(
        Signature.of(("add", 2), ("mul", 2), ("zero", 0), ("one", 0)),
        n,
        {
            "add": _binary(n, lambda a, b: (a + b) % n),
            "mul": _binary(n, lambda a, b: (a * b) % n),
            "zero": [0],
            "one": [1 % n],
        },
        top=0,
    )
    return CatalogEntry(
        f"z{n}-semiring",
        alg,
        "semiring",
        semiring_symbols=("add", "mul", "zero", "one"),
        jonsson_tarski_symbol="add",
    )


def boolean_semiring() -> CatalogEntry:
    alg = make_algebra(
        Signature.of(("add", 2), ("mul", 2), ("zero", 0), ("one", 0)),
        2,
        {
            "add": _binary(2, lambda a, b: a | b),
            "mul": _binary(2, lambda a, b: a & b),
            "zero": [0],
            "one": [1],
        },
        top=0,
    )
    return CatalogEntry(
        "bool-semiring",
        alg,
        "semiring",
        semiring_symbols=("add", "mul", "zero", "one"),
        jonsson_tarski_symbol="add",
    )


def minplus_semiring(cap: int) -> CatalogEntry:
    """Truncated min-plus semiring on {0..cap, inf}: addition is min with
    identity inf (encoded as index cap+1), multiplication is capped numeral
    addition with inf absorbing."""
    n = cap + 2
    inf = cap + 1

    def add(a: int, b: int) -> int:
        if a == inf:
            return b
        if b == inf:
            return a
        return min(a, b)

    def mul(a: int, b: int) -> int:
        if a == inf or b == inf:
            return inf
        return min(a + b, cap)

    alg = make_algebra(
        Signature.of(("add", 2), ("mul", 2), ("zero", 0), ("one", 0)),
        n,
        {"add": _binary(n, add), "mul": _binary(n, mul), "zero": [inf], "one": [0]},
        top=inf,
    )
    return CatalogEntry(
        f"minplus{cap}-semiring",
        alg,
        "semiring",
        semiring_symbols=("add", "mul", "zero", "one"),
        jonsson_tarski_symbol="add",
    )


def cyclic_module(n: int) -> CatalogEntry:
    """Z_n acting on itself: abelian group plus one unary scalar map per ring
    element."""
    tables = _group_tables(n)
    symbols = [("add", 2), ("neg", 1), ("sub", 2), ("mal", 3), ("zero", 0)]
    for r in range(n):
        symbols.append((f"r{r}", 1))
        tables[f"r{r}"] = tuple(r * a % n for a in range(n))
    alg = make_algebra(Signature.of(*symbols), n, tables, top=0)
    return CatalogEntry(
        f"z{n}-module",
        alg,
        "module",
        maltsev_symbol="mal",
        subtractive_symbol="sub",
        jonsson_tarski_symbol="add",
    )


def pointed_set(n: int) -> CatalogEntry:
    alg = make_algebra(Signature.of(("point", 0)), n, {"point": [0]}, top=0)
    return CatalogEntry(f"pointed-{n}", alg, "pointed")


def build_catalog(limit: int) -> list[CatalogEntry]:
    """All catalog entries with carrier size <= limit, in a fixed order."""
    if limit < 2:
        raise ValueOutOfRange("catalog limit must be at least 2")
    entries: list[CatalogEntry] = [
        cyclic_monoid(1),
        cyclic_group(1),
        cyclic_ring(1),
        cyclic_semiring(1),
        cyclic_module(1),
        pointed_set(1),
    ]
    entries += [cyclic_monoid(n) for n in range(2, limit + 1)]
    entries += [saturating_monoid(cap) for cap in range(1, limit)]
    entries += [cyclic_group(n) for n in range(2, limit + 1)]
    entries += [cyclic_ring(n) for n in range(2, limit + 1)]
    entries.append(boolean_semiring())
    entries += [cyclic_semiring(n) for n in range(2, limit + 1)]
    entries += [minplus_semiring(cap) for cap in range(0, limit - 1)]
    entries += [cyclic_module(n) for n in range(2, limit + 1)]
    entries += [pointed_set(n) for n in range(2, limit + 1)]
    return entries
