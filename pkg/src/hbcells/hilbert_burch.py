"""Canonical Hilbert-Burch matrices and Groebner cell matrix spaces.

For a staircase E the frame consists of the bidiagonal matrix M0(E) with
diagonal y^(d_i) and subdiagonal -x, the integer degree matrix U(E) with
u_ij = m_j - m_{i-1} + i - j, and the slot set S(E) of positions (i,j)
below the diagonal with 0 <= u_ij < d_j.

A cell matrix N is a (t+1) x t array of k[y] polynomials with n_ij = 0
above the diagonal and deg n_ij < d_j elsewhere.  Four nested shapes are
distinguished:

  V0: no extra condition;
  V1: zero diagonal;
  V2: zero diagonal and no constant terms in rows j+1..k+1 of column j,
      where k is the last index of the m-run through j;
  V3: only slots in S(E), each a scalar multiple of y^(u_ij).

The signed maximal minors of M0(E) + N generate an ideal with leading
term ideal E; conversely every such ideal arises from exactly one N, and
``canonical_matrix`` reconstructs it by normalizing the column syzygies
of a reduced Groebner basis.
"""

from __future__ import annotations

import enum
import random

from .errors import DomainError
from .field import QQ, scalar_from_json, scalar_to_json
from .groebner import (buchberger_reduced, leading_term_ideal, reduces_to_zero)
from .poly import Polynomial, UniPoly, divide_univariate
from .staircase import Staircase, staircase_from_monomial_ideal


class CellKind(enum.Enum):
    V0 = "V0"
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"

    def __str__(self):
        return self.value


def degree_matrix(E):
    """U(E): u_ij = m_j - m_{i-1} + i - j, for i = 1..t+1, j = 1..t."""
    m, t = E.m, E.t
    return tuple(tuple(m[j] - m[i - 1] + i - j for j in range(1, t + 1))
                 for i in range(1, t + 2))


def slot_set(E):
    """S(E): pairs (i,j), j < i, with 0 <= u_ij < d_j, in column-major order."""
    U = degree_matrix(E)
    d = E.d
    out = []
    for j in range(1, E.t + 1):
        for i in range(j + 1, E.t + 2):
            if 0 <= U[i - 1][j - 1] < d[j - 1]:
                out.append((i, j))
    return tuple(out)


class CanonicalFrame:
    """M0(E), U(E) and S(E) bundled, entries of M0 as bivariate polynomials."""

    __slots__ = ("E", "M0", "U", "S", "field")

    def __init__(self, E, field=QQ):
        t = E.t
        d = E.d
        zero = Polynomial.zero(field, 2)
        rows = []
        for i in range(1, t + 2):
            row = []
            for j in range(1, t + 1):
                if i == j:
                    row.append(Polynomial.monomial(field, 2, (0, d[j - 1])))
                elif i == j + 1:
                    row.append(Polynomial.monomial(field, 2, (1, 0), -field.one))
                else:
                    row.append(zero)
            rows.append(tuple(row))
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "M0", tuple(rows))
        object.__setattr__(self, "U", degree_matrix(E))
        object.__setattr__(self, "S", slot_set(E))


def canonical_frame(E, field=QQ):
    return CanonicalFrame(E, field)


def cell_dimension(E, kind):
    """Dimensions of the four cells attached to E."""
    if kind == CellKind.V0:
        return E.colength + E.y_power
    if kind == CellKind.V1:
        return E.colength
    if kind == CellKind.V2:
        return E.colength - E.t
    if kind == CellKind.V3:
        return len(slot_set(E))
    raise ValueError(f"unknown cell kind {kind!r}")


def _run_end(E, j):
    """Largest v in [j, t] with m_v = m_j."""
    k = j
    while k < E.t and E.m[k + 1] == E.m[j]:
        k += 1
    return k


class CellMatrix:
    """A point of T0(E): the perturbation N added to M0(E)."""

    __slots__ = ("E", "entries", "field")

    def __init__(self, E, entries, field=QQ):
        t = E.t
        d = E.d
        if len(entries) != t + 1 or any(len(row) != t for row in entries):
            raise ValueError(f"cell matrix must be {t + 1} x {t}")
        rows = []
        for i in range(1, t + 2):
            row = []
            for j in range(1, t + 1):
                n = entries[i - 1][j - 1]
                if not isinstance(n, UniPoly):
                    n = UniPoly(field, n)
                if i < j and n:
                    raise ValueError(f"entry ({i},{j}) above the diagonal must vanish")
                if n.degree >= d[j - 1]:
                    raise ValueError(
                        f"entry ({i},{j}) has degree {n.degree}, needs < d_{j} = {d[j - 1]}")
                row.append(n)
            rows.append(tuple(row))
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", tuple(rows))

    @classmethod
    def zero(cls, E, field=QQ):
        z = UniPoly.zero(field)
        return cls(E, [[z] * E.t for _ in range(E.t + 1)], field)

    def n(self, i, j):
        """Entry n_ij, 1-indexed."""
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, CellMatrix):
            return NotImplemented
        return self.E == other.E and self.entries == other.entries

    def __hash__(self):
        return hash((self.E, self.entries))

    def __repr__(self):
        return f"CellMatrix(E={self.E}, entries={[[e.to_str() for e in row] for row in self.entries]})"

    def to_json(self):
        return {"m": list(self.E.m),
                "N": [[[scalar_to_json(c) for c in e.coeffs] for e in row]
                      for row in self.entries]}

    @classmethod
    def from_json(cls, data, field=QQ):
        E = Staircase(data["m"])
        entries = [[UniPoly(field, [scalar_from_json(field, c) for c in cell])
                    for cell in row] for row in data["N"]]
        return cls(E, entries, field)

    def to_latex(self):
        """Bordered display of M0(E) + N with generator/syzygy degrees."""
        E, t = self.E, self.E.t
        a = [E.t - i + E.m[i] for i in range(t + 1)]          # row degrees a_i
        b = [a[i + 1] + 1 for i in range(t)]                   # column degrees b_i
        frame = canonical_frame(E, self.field)
        lines = [r"\begin{array}{r|" + "c" * t + "}"]
        lines.append(" & " + " & ".join(str(v) for v in b) + r" \\ \hline")
        for i in range(t + 1):
            cells = []
            for j in range(t):
                entry = frame.M0[i][j] + self.entries[i][j].to_polynomial(2)
                cells.append(_latex_poly(entry))
            lines.append(f"{a[i]} & " + " & ".join(cells) + r" \\")
        lines.append(r"\end{array}")
        return "\n".join(lines)


def _latex_poly(p):
    s = p.to_str()
    out = []
    i = 0
    while i < len(s):
        if s[i] == "^":
            j = i + 1
            while j < len(s) and (s[j].isdigit()):
                j += 1
            exp = s[i + 1:j]
            out.append("^{" + exp + "}" if len(exp) > 1 else "^" + exp)
            i = j
        elif s[i] == "*":
            i += 1
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def validate_cell_matrix(N, kind):
    """Membership of N in T_kind(E): (ok, report) with the first violation."""
    E = N.E
    t = E.t
    d = E.d
    if kind == CellKind.V0:
        return True, None
    if kind in (CellKind.V1, CellKind.V2):
        for i in range(1, t + 1):
            if N.n(i, i):
                return False, f"condition (1) fails at ({i},{i}): diagonal entry is nonzero"
        if kind == CellKind.V1:
            return True, None
        for j in range(1, t + 1):
            if d[j - 1] <= 0:
                continue
            k = _run_end(E, j)
            for i in range(j + 1, k + 2):
                if N.n(i, j).constant_term():
                    return False, (f"condition (2) fails at ({i},{j}): "
                                   "constant term must vanish")
        return True, None
    if kind == CellKind.V3:
        U = degree_matrix(E)
        slots = set(slot_set(E))
        for j in range(1, t + 1):
            for i in range(j, t + 2):
                n = N.n(i, j)
                if (i, j) in slots:
                    u = U[i - 1][j - 1]
                    if any(c for k, c in enumerate(n.coeffs) if k != u):
                        return False, (f"condition (3) fails at ({i},{j}): "
                                       f"entry must be a scalar multiple of y^{u}")
                elif n:
                    return False, (f"condition (3) fails at ({i},{j}): "
                                   "entry outside S(E) must vanish")
        return True, None
    raise ValueError(f"unknown cell kind {kind!r}")


# ---------------------------------------------------------------------------
# the bijection

def minors_ideal(N):
    """Signed maximal minors f_0..f_t of M0(E) + N.

    f_i is (-1)^(t-i) times the minor deleting row i+1.  The structured
    shape (zero above the diagonal, one nonzero superdiagonal block after
    the deleted row) gives every minor by a linear recurrence in the
    bottom-right Hessenberg blocks, O(t^2) polynomial products in all.
    """
    E, field = N.E, N.field
    t = E.t
    d = E.d
    one = Polynomial.constant(field, 2, field.one)
    x = Polynomial.monomial(field, 2, (1, 0))

    # h_c = y^(d_c) + n_cc as bivariate polynomials
    h = [None] * (t + 1)
    for c in range(1, t + 1):
        h[c] = Polynomial.monomial(field, 2, (0, d[c - 1])) + N.n(c, c).to_polynomial(2)

    def entry(r, c):
        """(r,c) entry of M0+N below the diagonal, r > c."""
        n = N.n(r, c).to_polynomial(2)
        if r == c + 1:
            return n - x
        return n

    # D[i] = det of rows i+2..t+1, cols i+1..t
    D = [None] * (t + 1)
    D[t] = one
    for i in range(t - 1, -1, -1):
        acc = Polynomial.zero(field, 2)
        hprod = one
        for a in range(1, t - i + 1):
            if a >= 2:
                hprod = hprod * h[i + a]
            term = entry(i + 1 + a, i + 1) * hprod * D[i + a]
            acc = acc - term if a % 2 == 0 else acc + term
        D[i] = acc

    fs = []
    P = one
    for i in range(t + 1):
        if i >= 1:
            P = P * h[i]
        f = P * D[i]
        if (t - i) % 2 == 1:
            f = -f
        fs.append(f)
    return fs


def _y_coefficients(g, fs, lowest, E):
    """Write g as sum of k[y]-multiples of f_lowest..f_t (Groebner cell shape).

    Repeatedly cancels the leading term of g with y^(b-m_i) f_i where i is
    forced by the x-degree; quotients therefore stay in k[y], which is what
    makes the cell matrix entries unique.
    """
    field = g.field
    t = E.t
    coefs = {i: UniPoly.zero(field) for i in range(lowest, t + 1)}
    while not g.is_zero:
        alpha, b = g.lt
        i = t - alpha
        if i < lowest or b < E.m[i]:
            raise DomainError("generators do not define an ideal with the expected staircase")
        c = g.lc
        coefs[i] = coefs[i] + UniPoly.y_power(field, b - E.m[i], c)
        g = g - fs[i].mul_term((0, b - E.m[i]), c)
    return coefs


def canonical_matrix(gens):
    """The inverse of the minors map: reconstruct (E, N) from generators.

    Computes the reduced Groebner basis, seeds representatives f_i with
    leading terms x^(t-i) y^(m_i), then for k = t..1 normalizes the column
    relation y^(d_k) f_{k-1} - x f_k + sum n_(j+1,k) f_j = 0 by univariate
    division against y^(d_k) + n_kk, folding quotients into f_{k-1}.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    if gens[0].nvars != 2:
        raise ValueError("canonical matrices live in k[x,y]")
    field = gens[0].field
    gb = buchberger_reduced(gens)
    E = staircase_from_monomial_ideal(leading_term_ideal(gb))
    t = E.t
    by_lead = {g.lt: g for g in gb}

    # seed: minimal-generator indices take their basis element, the rest
    # are x-shifts of the last index in the same m-run
    fs = [None] * (t + 1)
    for i in range(t, -1, -1):
        lead = (t - i, E.m[i])
        if lead in by_lead:
            fs[i] = by_lead[lead]
        else:
            j = _run_end(E, i)
            fs[i] = fs[j].mul_term((j - i, 0), field.one)

    x = Polynomial.monomial(field, 2, (1, 0))
    cols = {}  # (i, j) 1-indexed -> UniPoly
    for k in range(t, 0, -1):
        dk = E.d[k - 1]
        g = fs[k - 1].mul_term((0, dk), field.one) - x * fs[k]
        coefs = _y_coefficients(g, fs, k - 1, E)
        # relation: y^(d_k) f_{k-1} - x f_k + sum n_(j+1,k) f_j = 0
        nkk = -coefs[k - 1]
        if nkk.degree >= dk:
            raise DomainError("column normalization failed: diagonal degree too large")
        h = UniPoly.y_power(field, dk) + nkk
        newf = fs[k - 1]
        for j in range(k, t + 1):
            q, r = divide_univariate(-coefs[j], h)
            if q:
                newf = newf + q.to_polynomial(2) * fs[j]
            if r:
                cols[(j + 1, k)] = r
        if nkk:
            cols[(k, k)] = nkk
        fs[k - 1] = newf

    z = UniPoly.zero(field)
    entries = [[cols.get((i, j), z) for j in range(1, t + 1)] for i in range(1, t + 2)]
    return E, CellMatrix(E, entries, field)


def cell_kinds_of_ideal(gens):
    """Which cells the ideal of ``gens`` belongs to, read off the ideal itself.

    V0 requires Lt(I) to have finite colength and radical (x,y); V1 asks
    the monic generator of I \\cap k[y] to be a pure power of y; V2 asks
    the radical to be (x,y), checked as V1 plus x^colength in I; V3 asks
    the reduced basis to be homogeneous.  All checks are independent of
    any cell matrix.
    """
    gb = buchberger_reduced(gens)
    E = staircase_from_monomial_ideal(leading_term_ideal(gb))
    kinds = {CellKind.V0}
    f_last = next(g for g in gb if g.lt == (0, E.y_power))
    if len(f_last.terms) == 1:
        kinds.add(CellKind.V1)
        xd = Polynomial.monomial(gb[0].field, 2, (E.colength, 0))
        if reduces_to_zero(xd, gb):
            kinds.add(CellKind.V2)
    if all(g.is_homogeneous() for g in gb):
        kinds.add(CellKind.V3)
    return kinds


def cell_matrix_from_parameters(E, assignment, field=QQ):
    """The T3 matrix with entry p_ij y^(u_ij) at each slot (i,j) of S(E)."""
    U = degree_matrix(E)
    slots = set(slot_set(E))
    entries = [[UniPoly.zero(field)] * E.t for _ in range(E.t + 1)]
    for (i, j), value in assignment.items():
        if (i, j) not in slots:
            raise ValueError(f"({i},{j}) is not a slot of S(E)")
        entries[i - 1][j - 1] = UniPoly.y_power(field, U[i - 1][j - 1], value)
    return CellMatrix(E, entries, field)


def random_cell_matrix(E, kind, seed, field=QQ):
    """A deterministic pseudo-random element of T_kind(E).

    Over a finite field every allowed coefficient slot is uniform; over the
    rationals slots draw small integers.  Slots are visited column-major.
    """
    rng = random.Random(seed)
    if field.char == 0:
        draw = lambda: field.of(rng.randint(-4, 4))
    else:
        elems = field.elements()
        draw = lambda: rng.choice(elems)

    t = E.t
    d = E.d
    U = degree_matrix(E)
    slots = set(slot_set(E))
    z = field.zero
    entries = [[UniPoly.zero(field)] * t for _ in range(t + 1)]
    for j in range(1, t + 1):
        dj = d[j - 1]
        if dj == 0:
            continue
        kend = _run_end(E, j)
        for i in range(j, t + 2):
            if kind == CellKind.V3:
                if (i, j) in slots:
                    entries[i - 1][j - 1] = UniPoly.y_power(field, U[i - 1][j - 1], draw())
                continue
            if i == j and kind != CellKind.V0:
                continue
            coeffs = [draw() for _ in range(dj)]
            if kind == CellKind.V2 and j < i <= kend + 1:
                coeffs[0] = z
            entries[i - 1][j - 1] = UniPoly(field, coeffs)
    return CellMatrix(E, entries, field)
