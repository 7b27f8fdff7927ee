"""Buchberger engine over exact fields.

S-polynomials, multivariate division, reduced Groebner bases with the
Gebauer-Moeller pair update (product + chain criteria), leading term
ideals, colength, and a rank-based count of graded minimal generators.
This module is the independent verification oracle for everything the
cell machinery produces, so it never consults the structured formulas it
is used to check.
"""

from __future__ import annotations

import itertools
import math

from .errors import DomainError
from .linalg import echelon_insert
from .poly import (Polynomial, mono_div, mono_divides, mono_lcm, mono_mul)


# ---------------------------------------------------------------------------
# monomial ideals

class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars, gens):
        gens = sorted(set(tuple(g) for g in gens), reverse=True)
        minimal = []
        for g in gens:
            if not any(mono_divides(h, g) for h in minimal if h != g):
                minimal.append(g)
        # a second sweep: drop anything divisible by a later (smaller) generator
        final = [g for g in minimal
                 if not any(h != g and mono_divides(h, g) for h in minimal)]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", tuple(final))

    def contains(self, mono):
        return any(mono_divides(g, mono) for g in self.gens)

    def pure_power_exponent(self, i):
        """Least e with x_i^e in the ideal, or None."""
        best = None
        for g in self.gens:
            if all(e == 0 for k, e in enumerate(g) if k != i):
                if best is None or g[i] < best:
                    best = g[i]
        return best

    def colength(self):
        """Number of standard monomials; math.inf when infinite."""
        if not self.gens:
            return math.inf
        if self.gens[0] == (0,) * self.nvars:
            return 0  # unit ideal
        bounds = []
        for i in range(self.nvars):
            e = self.pure_power_exponent(i)
            if e is None:
                return math.inf
            bounds.append(e)
        count = 0
        for mono in itertools.product(*(range(b) for b in bounds)):
            if not self.contains(mono):
                count += 1
        return count

    def standard_monomials(self):
        """All monomials outside the ideal (finite colength required)."""
        bounds = [self.pure_power_exponent(i) for i in range(self.nvars)]
        if any(b is None for b in bounds):
            raise DomainError("the ideal has infinite colength")
        return [m for m in itertools.product(*(range(b) for b in bounds))
                if not self.contains(m)]

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __repr__(self):
        from .poly import default_names, mono_to_str
        names = default_names(self.nvars)
        inside = ", ".join(mono_to_str(g, names) or "1" for g in self.gens)
        return f"MonomialIdeal({inside})"


def colength(E):
    """Standard monomial count of a monomial ideal (inf flag when infinite)."""
    return E.colength()


# ---------------------------------------------------------------------------
# division and S-polynomials

def s_polynomial(f, g):
    """(L/Lt f) f / Lc f - (L/Lt g) g / Lc g with L = lcm of leading terms."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomials need nonzero inputs")
    field = f.field
    L = mono_lcm(f.lt, g.lt)
    a = f.mul_term(mono_div(L, f.lt), field.div(field.one, f.lc))
    b = g.mul_term(mono_div(L, g.lt), field.div(field.one, g.lc))
    return a - b


def _normal_form_dict(work, leads):
    """Fully reduce a term dict against (lt, lc, terms) triples, in place."""
    rem = {}
    while work:
        m = max(work)
        c = work.pop(m)
        for lt, lc_inv, tail in leads:
            if mono_divides(lt, m):
                q = c * lc_inv
                u = mono_div(m, lt)
                for tm, tc in tail:
                    key = mono_mul(u, tm)
                    v = work.get(key)
                    v = -(q * tc) if v is None else v - q * tc
                    if v:
                        work[key] = v
                    else:
                        work.pop(key, None)
                break
        else:
            rem[m] = c
    return rem


def _leads(basis, field):
    one = field.one
    return [(g.lt, field.div(one, g.lc), g.terms[1:]) for g in basis]


def reduce(f, basis):
    """Multivariate division: f = sum q_i b_i + r, no term of r reducible.

    Returns (remainder, quotients).  Each step reduces by the first basis
    element whose leading term divides the current monomial.
    """
    basis = list(basis)
    if any(g.is_zero for g in basis):
        raise ValueError("reduction basis contains the zero polynomial")
    field = f.field
    quots = [{} for _ in basis]
    leads = [(i, g.lt, field.div(field.one, g.lc), g.terms[1:]) for i, g in enumerate(basis)]
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work)
        c = work.pop(m)
        for i, lt, lc_inv, tail in leads:
            if mono_divides(lt, m):
                q = c * lc_inv
                u = mono_div(m, lt)
                quots[i][u] = quots[i].get(u, field.zero) + q
                for tm, tc in tail:
                    key = mono_mul(u, tm)
                    v = work.get(key)
                    v = -(q * tc) if v is None else v - q * tc
                    if v:
                        work[key] = v
                    else:
                        work.pop(key, None)
                break
        else:
            rem[m] = c
    nv = f.nvars
    return (Polynomial.from_dict(field, nv, rem),
            [Polynomial.from_dict(field, nv, qd) for qd in quots])


def normal_form(f, basis):
    """Remainder of ``f`` on division by ``basis``."""
    if f.is_zero:
        return f
    rem = _normal_form_dict(dict(f.terms), _leads(basis, f.field))
    return Polynomial.from_dict(f.field, f.nvars, rem)


def reduces_to_zero(f, basis):
    if f.is_zero:
        return True
    return not _normal_form_dict(dict(f.terms), _leads(basis, f.field))


# ---------------------------------------------------------------------------
# Buchberger

def _gm_update(G, pairs, f):
    """Gebauer-Moeller pair update when appending f to G."""
    t = len(G)
    lf = f.lt
    kept = []
    for (L, i, j) in pairs:
        # chain criterion against the new element
        if (not mono_divides(lf, L)
                or mono_lcm(G[i].lt, lf) == L
                or mono_lcm(G[j].lt, lf) == L):
            kept.append((L, i, j))
    groups = {}
    for i in range(t):
        groups.setdefault(mono_lcm(G[i].lt, lf), []).append(i)
    minimal = []
    for L in sorted(groups):
        if not any(mono_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        # product criterion: a coprime pair in the group kills the lcm class
        if not any(mono_lcm(G[i].lt, lf) == mono_mul(G[i].lt, lf) for i in groups[L]):
            kept.append((L, min(groups[L]), t))
    G.append(f)
    return kept


def buchberger_reduced(gens):
    """The unique reduced Groebner basis (lex) of the ideal of ``gens``.

    Normal selection strategy (lex-smallest lcm first) with the product
    and chain criteria; auto-reduction at the end.  Output is sorted by
    decreasing leading term, every element monic.
    """
    start = [g for g in gens if not g.is_zero]
    if not start:
        raise ValueError("need at least one nonzero generator")
    field = start[0].field
    G = []
    pairs = []
    for g in start:
        pairs = _gm_update(G, pairs, g.monic())
    while pairs:
        best = min(range(len(pairs)), key=lambda k: (pairs[k][0], pairs[k][1], pairs[k][2]))
        L, i, j = pairs.pop(best)
        s = s_polynomial(G[i], G[j])
        if s.is_zero:
            continue
        rem = _normal_form_dict(dict(s.terms), _leads(G, field))
        if rem:
            r = Polynomial.from_dict(field, s.nvars, rem).monic()
            pairs = _gm_update(G, pairs, r)
    # minimalize: drop elements whose lead is divisible by another lead
    G.sort(key=lambda g: g.lt)
    minimal = []
    for g in G:
        if not any(mono_divides(h.lt, g.lt) for h in minimal):
            minimal.append(g)
    # interreduce tails
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        rem = _normal_form_dict(dict(g.terms), _leads(others, field))
        reduced.append(Polynomial.from_dict(field, g.nvars, rem).monic())
    reduced.sort(key=lambda g: g.lt, reverse=True)
    return reduced


def is_groebner_basis(fs):
    """Check Buchberger's criterion directly (coprime pairs skipped)."""
    fs = [f for f in fs if not f.is_zero]
    leads = _leads(fs, fs[0].field)
    for f, g in itertools.combinations(fs, 2):
        if mono_lcm(f.lt, g.lt) == mono_mul(f.lt, g.lt):
            continue
        s = s_polynomial(f, g)
        if s.is_zero:
            continue
        if _normal_form_dict(dict(s.terms), leads):
            return False
    return True


def leading_term_ideal(gb):
    """Minimal monomial generators of Lt(I) for a Groebner basis."""
    gb = [g for g in gb if not g.is_zero]
    if not gb:
        raise ValueError("empty basis")
    return MonomialIdeal(gb[0].nvars, [g.lt for g in gb])


def ideals_equal(gens_a, gens_b):
    """Whether two generating sets span the same ideal (via reduced GBs)."""
    return buchberger_reduced(gens_a) == buchberger_reduced(gens_b)


# ---------------------------------------------------------------------------
# graded minimal generator oracle

def graded_beta0_profile(gens, up_to=None):
    """Number of minimal generators per degree, by exact rank sweeps.

    For a homogeneous ideal I given by homogeneous ``gens``, computes
    beta_{0,j} = dim I_j - dim (R_1 * I_{j-1})_j for every j up to the
    largest generator degree (or ``up_to``), maintaining an echelon basis
    of each graded piece.  Purely linear algebra: no Groebner machinery.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return {}
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("graded generator counts need homogeneous generators")
    nvars = gens[0].nvars
    by_degree = {}
    for g in gens:
        by_degree.setdefault(g.total_degree(), []).append(g)
    top = max(by_degree)
    if up_to is not None:
        top = max(top, up_to)
    variables = [tuple(1 if k == i else 0 for k in range(nvars)) for i in range(nvars)]
    profile = {}
    basis = []  # echelon rows of the current graded piece, as dicts
    for j in range(min(by_degree), top + 1):
        echelon = {}
        for row in basis:
            for v in variables:
                echelon_insert(echelon, {mono_mul(m, v): c for m, c in row.items()})
        before = len(echelon)
        for g in by_degree.get(j, []):
            echelon_insert(echelon, dict(g.terms))
        beta = len(echelon) - before
        if beta:
            profile[j] = beta
        basis = list(echelon.values())
    return profile


def graded_minimal_generators(gens, j):
    """beta_{0,j}: minimal generators of degree j of a homogeneous ideal."""
    return graded_beta0_profile(gens, up_to=j).get(j, 0)
