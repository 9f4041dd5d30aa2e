"""Plain-text algebra format: parsing, diagnostics, canonical rendering."""
from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finalg import (
    build_catalog,
    make_algebra,
    parse_algebra,
    parse_algebra_file,
    render_algebra,
)
from finalg.errors import DuplicateSymbol, ParseError, ValueOutOfRange

Z2_TEXT = "algebra z2\nsize 2\nop add 2\n0 1 1 0\nconst zero 0\ntop 0\nend"


@st.composite
def small_algebras(draw):
    size = draw(st.integers(1, 3))
    op_count = draw(st.integers(1, 3))
    symbols = []
    tables = {}
    for i in range(op_count):
        arity = draw(st.integers(0, 2))
        name = f"f{i}"
        symbols.append((name, arity))
        tables[name] = draw(
            st.lists(
                st.integers(0, size - 1),
                min_size=size**arity,
                max_size=size**arity,
            )
        )
    top = draw(st.one_of(st.none(), st.integers(0, size - 1)))
    return make_algebra(symbols, size, tables, top)


class TestParsing:
    def test_z2_example(self):
        parsed = parse_algebra_file(Z2_TEXT)
        assert parsed.name == "z2"
        alg = parsed.algebra
        assert alg.size == 2
        assert alg.apply("add", 1, 1) == 0
        assert alg.apply("zero") == 0
        assert alg.top == 0

    def test_const_is_arity_zero_op(self):
        alg = parse_algebra("algebra a\nsize 2\nconst c 1\nend")
        assert alg.sig.arity("c") == 0
        assert alg.constants() == (1,)

    def test_comments_and_free_whitespace(self):
        text = (
            "# leading comment\n"
            "algebra   spaced\n"
            "size 2\n"
            "op add 2\n"
            "0 1\n"
            "# interleaved comment\n"
            "1 0\n"
            "end\n"
        )
        alg = parse_algebra(text)
        assert alg.apply("add", 1, 0) == 1

    def test_table_split_across_lines(self):
        alg = parse_algebra("algebra a\nsize 2\nop f 2\n0\n1\n1\n0\nend")
        assert alg.apply("f", 1, 1) == 0

    def test_no_top_is_allowed(self):
        alg = parse_algebra("algebra a\nsize 2\nop f 1\n1 0\nend")
        assert alg.top is None


class TestDiagnostics:
    def test_missing_end(self):
        with pytest.raises(ParseError, match="end"):
            parse_algebra("algebra a\nsize 2\nop f 1\n0 1")

    def test_table_entry_out_of_range_carries_position(self):
        text = "algebra a\nsize 2\nop f 1\n0 2\nend"
        with pytest.raises(ValueOutOfRange) as exc:
            parse_algebra(text)
        assert exc.value.line == 4
        assert exc.value.col == 3
        assert "4:3" in str(exc.value)

    def test_top_declared_twice(self):
        with pytest.raises(ParseError, match="twice"):
            parse_algebra("algebra a\nsize 2\nconst c 0\ntop 0\ntop 1\nend")

    def test_top_out_of_range(self):
        with pytest.raises(ValueOutOfRange):
            parse_algebra("algebra a\nsize 2\nconst c 0\ntop 2\nend")

    def test_const_out_of_range(self):
        with pytest.raises(ValueOutOfRange):
            parse_algebra("algebra a\nsize 2\nconst c 5\nend")

    def test_trailing_content(self):
        with pytest.raises(ParseError, match="trailing"):
            parse_algebra("algebra a\nsize 1\nconst c 0\nend extra")

    def test_unknown_directive(self):
        with pytest.raises(ParseError, match="oops"):
            parse_algebra("algebra a\nsize 1\noops\nend")

    def test_empty_input(self):
        with pytest.raises(ParseError, match="empty input"):
            parse_algebra("")

    def test_non_integer_where_integer_expected(self):
        with pytest.raises(ParseError, match="carrier size"):
            parse_algebra("algebra a\nsize big\nend")

    def test_size_must_be_positive(self):
        with pytest.raises(ParseError):
            parse_algebra("algebra a\nsize 0\nend")

    def test_negative_arity(self):
        with pytest.raises(ParseError, match="non-negative"):
            parse_algebra("algebra a\nsize 2\nop f -1\nend")

    def test_keyword_where_name_expected(self):
        with pytest.raises(ParseError, match="keyword"):
            parse_algebra("algebra size\nsize 2\nend")

    def test_duplicate_operation(self):
        with pytest.raises(DuplicateSymbol):
            parse_algebra("algebra a\nsize 2\nconst c 0\nconst c 1\nend")

    def test_truncated_table(self):
        with pytest.raises(ParseError):
            parse_algebra("algebra a\nsize 2\nop f 2\n0 1 1\nend")


class TestRendering:
    def test_canonical_z2_rendering(self):
        alg = parse_algebra(Z2_TEXT)
        assert render_algebra("z2", alg) == (
            "algebra z2\n"
            "size 2\n"
            "op add 2\n"
            "0 1\n"
            "1 0\n"
            "const zero 0\n"
            "top 0\n"
            "end\n"
        )

    def test_round_trip_on_catalog(self):
        for entry in build_catalog(4):
            text = render_algebra(entry.name, entry.algebra)
            parsed = parse_algebra_file(text)
            assert parsed.name == entry.name
            assert parsed.algebra == entry.algebra

    @given(small_algebras())
    def test_round_trip_random(self, alg):
        assert parse_algebra(render_algebra("t", alg)) == alg
