"""Text format: strict parsing with positioned errors, lossless
round-trips."""

from __future__ import annotations

import random

import pytest

from tourney import format_tour, gen_random, gen_rlt, parse_tour, read_tour, write_tour
from tourney.errors import InvalidInput, ParseError


class TestRoundTrip:
    def test_rlt7(self):
        t = gen_rlt(7)
        assert parse_tour(format_tour(t)) == t

    def test_random_orders(self):
        rng = random.Random(3)
        for _ in range(25):
            t = gen_random(rng.randrange(1, 12), rng.randrange(1 << 30))
            assert parse_tour(format_tour(t)) == t

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "t.tour"
        t = gen_random(6, 44)
        write_tour(t, path)
        assert read_tour(path) == t

    def test_known_text(self):
        text = "3\n010\n001\n100\n"
        t = parse_tour(text)
        assert t.out_rows == (0b010, 0b100, 0b001)
        assert format_tour(t) == text


class TestParseErrors:
    def err(self, text: str) -> ParseError:
        with pytest.raises(ParseError) as info:
            parse_tour(text)
        return info.value

    def test_bad_header(self):
        e = self.err("x\n")
        assert e.line == 1

    def test_missing_rows(self):
        e = self.err("3\n010\n001\n")
        assert e.line == 4

    def test_short_row(self):
        e = self.err("3\n010\n01\n100\n")
        assert e.line == 3

    def test_bad_symbol_position(self):
        e = self.err("3\n010\n0x1\n100\n")
        assert e.line == 3 and e.col == 2

    def test_diagonal_bit(self):
        # structurally bad but textually fine: the validator reports it
        with pytest.raises(InvalidInput):
            parse_tour("2\n01\n01\n")

    def test_double_arc(self):
        with pytest.raises(InvalidInput):
            parse_tour("2\n01\n10\n")

    def test_trailing_garbage(self):
        e = self.err("2\n01\n00\nextra\n")
        assert e.line == 4

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_tour("")
