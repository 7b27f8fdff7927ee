"""Buchberger engine: S-polynomials, reduction, reduced bases, oracles."""

import math
import random

import pytest

from hbcells.field import GF, QQ
from hbcells.groebner import (MonomialIdeal, buchberger_reduced, colength,
                              graded_minimal_generators, is_groebner_basis,
                              leading_term_ideal, normal_form, reduce,
                              s_polynomial)
from hbcells.poly import Polynomial, mono_divides, parse_polynomial


def P(text, field=QQ):
    return parse_polynomial(text, ("x", "y"), field)


# -- S-polynomials ----------------------------------------------------------

def test_spoly_hand_expansion():
    s = s_polynomial(P("x - y"), P("y^2"))
    assert s == P("-y^3")


def test_spoly_identical():
    assert s_polynomial(P("x^2 + y"), P("x^2 + y")).is_zero


def test_spoly_coprime_monomials():
    assert s_polynomial(P("x^2"), P("y^2")).is_zero


def test_spoly_zero_input():
    with pytest.raises(ValueError):
        s_polynomial(Polynomial.zero(QQ, 2), P("x"))


# -- reduction ----------------------------------------------------------------

def test_reduce_single_step():
    r, qs = reduce(P("y^3"), [P("y^2")])
    assert r.is_zero and qs[0] == P("y")


def test_reduce_accumulates_quotients():
    f = P("x^2 + x*y")
    basis = [P("x - y")]
    r, qs = reduce(f, basis)
    assert r == P("2*y^2")
    assert f == qs[0] * basis[0] + r


def test_reduce_already_reduced():
    f = P("y + 1")
    r, qs = reduce(f, [P("x^2")])
    assert r == f and qs[0].is_zero


def test_reduce_remainder_irreducible():
    rng = random.Random(4)
    for _ in range(40):
        f = _random_poly(rng)
        basis = [g for g in (_random_poly(rng) for _ in range(3)) if not g.is_zero]
        if not basis:
            continue
        r, qs = reduce(f, basis)
        assert f == sum((q * b for q, b in zip(qs, basis)), r)
        for mono, _ in r.terms:
            assert not any(mono_divides(b.lt, mono) for b in basis)
        for q, b in zip(qs, basis):
            if not q.is_zero and not f.is_zero:
                assert tuple(a + c for a, c in zip(q.lt, b.lt)) <= f.lt


def _random_poly(rng, field=QQ):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        mono = (rng.randint(0, 3), rng.randint(0, 3))
        c = field.of(rng.randint(-4, 4)) if field.char == 0 else rng.choice(field.elements())
        terms[mono] = terms.get(mono, field.zero) + c
    return Polynomial(field, 2, terms)


# -- reduced Groebner bases ---------------------------------------------------

def test_buchberger_already_reduced_pair():
    gb = buchberger_reduced([P("x - y"), P("y^2")])
    assert gb == [P("x - y"), P("y^2")]
    assert leading_term_ideal(gb) == MonomialIdeal(2, [(1, 0), (0, 2)])


def test_buchberger_monomial_ideal_fixed():
    gens = [P("x^2"), P("x*y"), P("y^2")]
    assert buchberger_reduced(gens) == sorted(gens, key=lambda g: g.lt, reverse=True)


def test_buchberger_point_ideal():
    gb = buchberger_reduced([P("x - 3"), P("y - 2")])
    assert gb == [P("x - 3"), P("y - 2")]
    assert leading_term_ideal(gb) == MonomialIdeal(2, [(1, 0), (0, 1)])


def test_buchberger_needs_a_generator():
    with pytest.raises(ValueError):
        buchberger_reduced([Polynomial.zero(QQ, 2)])


@pytest.mark.parametrize("field", [QQ, GF(7)], ids=["QQ", "GF7"])
def test_buchberger_idempotent_order_independent_spolys_vanish(field):
    rng = random.Random(11)
    done = 0
    while done < 25:
        gens = [g for g in (_random_poly(rng, field) for _ in range(3)) if not g.is_zero]
        if not gens:
            continue
        gb = buchberger_reduced(gens)
        assert buchberger_reduced(gb) == gb
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger_reduced(shuffled) == gb
        assert is_groebner_basis(gb)
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                assert normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero
        # reduced: monic, and no term of one element divisible by another's lead
        for g in gb:
            assert g.lc == field.one
            for h in gb:
                if h is g:
                    continue
                assert not any(mono_divides(h.lt, m) for m, _ in g.terms)
        done += 1


def test_unit_ideal():
    gb = buchberger_reduced([P("x - 1"), P("x")])
    assert gb == [P("1")]
    E = leading_term_ideal(gb)
    assert E.gens == ((0, 0),) and colength(E) == 0


# -- colength -----------------------------------------------------------------

def test_colength_examples():
    assert colength(MonomialIdeal(2, [(3, 0), (1, 3), (0, 5)])) == 11
    assert colength(MonomialIdeal(2, [(1, 0), (0, 1)])) == 1
    assert colength(MonomialIdeal(2, [(2, 0)])) == math.inf


def test_colength_matches_enumeration():
    from hbcells.staircase import enumerate_staircases
    for d in range(1, 15):
        for E in enumerate_staircases(d):
            ideal = E.monomial_ideal()
            assert colength(ideal) == d
            assert len(ideal.standard_monomials()) == d
    rng = random.Random(9)
    for _ in range(40):
        d = rng.randint(15, 30)
        E = rng.choice(enumerate_staircases(d))
        assert colength(E.monomial_ideal()) == d


# -- graded minimal generator oracle ------------------------------------------

def test_graded_generators_square_of_max_ideal():
    gens = [P("x^2"), P("x*y"), P("y^2")]
    assert graded_minimal_generators(gens, 2) == 3
    assert graded_minimal_generators(gens, 3) == 0


def test_graded_generators_mixed_degrees():
    gens = [P("x - y"), P("y^2")]
    assert graded_minimal_generators(gens, 1) == 1
    assert graded_minimal_generators(gens, 2) == 1


def test_graded_generators_staircase_top():
    gens = [P("x^3"), P("x*y^3"), P("y^5")]
    assert graded_minimal_generators(gens, 5) == 1
    assert graded_minimal_generators(gens, 3) == 1
    assert graded_minimal_generators(gens, 4) == 1


def test_graded_generators_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        graded_minimal_generators([P("x - 1")], 1)
