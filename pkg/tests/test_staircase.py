"""Staircase combinatorics: bijections, Hilbert functions, lex segments."""

import random

import pytest

from hbcells.errors import DomainError
from hbcells.groebner import MonomialIdeal
from hbcells.staircase import (HSeries, Staircase, enumerate_staircases,
                               lex_segment_from_hseries,
                               staircase_from_monomial_ideal)


def test_invariants_enforced():
    with pytest.raises(DomainError):
        Staircase((1, 2))
    with pytest.raises(DomainError):
        Staircase((0, 0))
    with pytest.raises(DomainError):
        Staircase((0, 2, 1))
    with pytest.raises(DomainError):
        Staircase((0,))


def test_from_monomial_ideal_worked_example():
    E = staircase_from_monomial_ideal(MonomialIdeal(2, [(3, 0), (1, 3), (0, 5)]))
    assert E.m == (0, 3, 3, 5) and E.d == (3, 0, 2)


def test_from_monomial_ideal_small():
    assert staircase_from_monomial_ideal(MonomialIdeal(2, [(1, 0), (0, 1)])).m == (0, 1)
    E = staircase_from_monomial_ideal(MonomialIdeal(2, [(2, 0), (0, 1)]))
    assert E.m == (0, 1, 1) and E.d == (1, 0)


def test_from_monomial_ideal_errors():
    with pytest.raises(DomainError):
        staircase_from_monomial_ideal(MonomialIdeal(2, [(2, 0)]))
    with pytest.raises(DomainError):
        staircase_from_monomial_ideal(MonomialIdeal(2, [(0, 0)]))
    with pytest.raises(ValueError):
        staircase_from_monomial_ideal(MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def test_generators_full_and_minimal():
    E = Staircase((0, 3, 3, 5))
    assert E.generators() == [(3, 0), (2, 3), (1, 3), (0, 5)]
    assert E.generators(minimal=True) == [(3, 0), (1, 3), (0, 5)]
    assert Staircase((0, 1)).generators() == [(1, 0), (0, 1)]
    E = Staircase((0, 1, 3, 4, 4, 5, 7))
    assert E.generators(minimal=True) == [(6, 0), (5, 1), (4, 3), (2, 4), (1, 5), (0, 7)]


def test_round_trip_all_small_staircases():
    for d in range(1, 11):
        for E in enumerate_staircases(d):
            assert staircase_from_monomial_ideal(E.monomial_ideal()) == E


def test_round_trip_random_up_to_colength_30():
    rng = random.Random(2)
    for _ in range(80):
        d = rng.randint(11, 30)
        E = rng.choice(enumerate_staircases(d))
        assert staircase_from_monomial_ideal(E.monomial_ideal()) == E


def test_hilbert_function_examples():
    assert staircase_from_monomial_ideal(MonomialIdeal(2, [(2, 0), (0, 1)])).hilbert_function() == (1, 1)
    assert Staircase((0, 1, 2)).hilbert_function() == (1, 2)
    assert sum(Staircase((0, 3, 3, 5)).hilbert_function()) == 11


def test_hilbert_function_totals_colength():
    for d in range(1, 13):
        for E in enumerate_staircases(d):
            assert sum(E.hilbert_function()) == d == E.colength


def test_hseries_admissibility():
    HSeries((1,))
    HSeries((1, 2, 2, 1))
    with pytest.raises(DomainError, match="h_0"):
        HSeries((2, 1))
    with pytest.raises(DomainError, match="h_s > 0"):
        HSeries((1, 2, 0))
    with pytest.raises(DomainError, match="c >= h_c"):
        HSeries((1, 4))
    with pytest.raises(DomainError, match="violated"):
        HSeries((1, 2, 1, 2))


def test_hseries_derived_data():
    h = HSeries((1, 2, 1))
    assert h.c == 2 and h.s == 2
    assert h.first_difference == (1, 1, -1, -1)
    h = HSeries((1, 2, 3, 2, 1))
    assert h.c == 3
    assert h.first_difference == (1, 1, 1, -1, -1, -1)


def test_lex_segment_examples():
    assert lex_segment_from_hseries(HSeries((1, 2, 1))).m == (0, 1, 3)
    assert lex_segment_from_hseries(HSeries((1, 1))).m == (0, 2)
    assert lex_segment_from_hseries(HSeries((1, 2, 3, 2, 1))).m == (0, 1, 3, 5)


def test_lex_segment_round_trips_hilbert_function():
    # exhaustive over admissible h with small total
    def all_h(total_max):
        out = []
        for c in range(1, total_max + 1):
            prefix = tuple(range(1, c + 1))
            if sum(prefix) > total_max:
                break

            def tails(bound, budget):
                yield ()
                for v in range(min(bound, budget), 0, -1):
                    for rest in tails(v, budget - v):
                        yield (v,) + rest

            out.extend(prefix + tail for tail in tails(c, total_max - sum(prefix)))
        return out

    for h in all_h(12):
        L = lex_segment_from_hseries(HSeries(h))
        assert L.is_lex_segment
        assert L.hilbert_function() == h
        # each graded piece is spanned by the lex-largest monomials
        for j, hj in enumerate(h):
            in_l = [a for a in range(j, -1, -1) if L.contains((a, j - a))]
            assert in_l == list(range(j, hj - 1, -1))


def test_lex_segments_are_exactly_positive_d():
    for d in range(1, 10):
        for E in enumerate_staircases(d):
            assert E.is_lex_segment == all(v > 0 for v in E.d)
            if E.is_lex_segment:
                assert lex_segment_from_hseries(HSeries(E.hilbert_function())) == E


def test_enumerate_counts_are_partition_numbers():
    # independent partition counter by classic recurrence
    def partitions(n):
        table = [1] + [0] * n
        for part in range(1, n + 1):
            for total in range(part, n + 1):
                table[total] += table[total - part]
        return table[n]

    assert [E.m for E in enumerate_staircases(1)] == [(0, 1)]
    assert {E.m for E in enumerate_staircases(2)} == {(0, 2), (0, 1, 1)}
    assert len(enumerate_staircases(5)) == 7
    for d in range(1, 21):
        cells = enumerate_staircases(d)
        assert len(cells) == partitions(d)
        assert len(set(cells)) == len(cells)
        assert cells == sorted(cells)
        assert all(E.colength == d for E in cells)
