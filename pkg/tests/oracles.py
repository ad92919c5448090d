"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive: dense linear algebra over Fraction,
brute-force monomial enumeration, finite differences. No Groebner bases,
no saturation, no Hilbert recursion.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from vanish.poly import PolyRing, Polynomial


# ---------------------------------------------------------------------------
# linear algebra over Q
# ---------------------------------------------------------------------------

def rank(rows: list[list[Fraction]]) -> int:
    """Row-reduce a copy and count the pivots."""
    mat = [list(map(Fraction, row)) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == nrows:
            break
    return r


# ---------------------------------------------------------------------------
# monomial enumeration
# ---------------------------------------------------------------------------

def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out)


def monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def membership_by_divisibility(exps: tuple[int, ...],
                               gen_exps: list[tuple[int, ...]]) -> bool:
    """Monomial-ideal membership: some generator divides the monomial."""
    return any(monomial_divides(g, exps) for g in gen_exps)


# ---------------------------------------------------------------------------
# graded pieces of homogeneous ideals
# ---------------------------------------------------------------------------

def graded_piece_dimension(gens: list[Polynomial], ring: PolyRing,
                           degree: int) -> int:
    """dim_Q of the degree-d piece of the ideal the homogeneous gens span.

    Spanning set: mono * g over generators g and monomials of degree
    d - deg(g); the rank of their coefficient matrix is the answer.
    """
    basis = monomials_of_degree(ring.nvars, degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        gdeg = g.total_degree()
        if gdeg > degree:
            continue
        for shift in monomials_of_degree(ring.nvars, degree - gdeg):
            row = [Fraction(0)] * len(basis)
            for exps, coeff in g.terms.items():
                target = tuple(a + b for a, b in zip(exps, shift))
                row[index[target]] = Fraction(coeff)
            rows.append(row)
    if not rows:
        return 0
    return rank(rows)


def graded_pieces_agree(gens_a: list[Polynomial], gens_b: list[Polynomial],
                        ring: PolyRing, up_to_degree: int) -> bool:
    """Degreewise: do two homogeneous ideals have equal graded dimensions?"""
    return all(
        graded_piece_dimension(gens_a, ring, d)
        == graded_piece_dimension(gens_b, ring, d)
        for d in range(up_to_degree + 1)
    )


# ---------------------------------------------------------------------------
# Hilbert function by standard-monomial counting, multiplicity by differences
# ---------------------------------------------------------------------------

def hilbert_function_values(lt_gens: list[tuple[int, ...]], nvars: int,
                            up_to_degree: int) -> list[int]:
    """Counts of standard monomials (not divisible by any generator)."""
    values = []
    for d in range(up_to_degree + 1):
        count = sum(
            1 for m in monomials_of_degree(nvars, d)
            if not membership_by_divisibility(m, lt_gens)
        )
        values.append(count)
    return values


def multiplicity_by_differences(lt_gens: list[tuple[int, ...]], nvars: int,
                                dimension: int,
                                up_to_degree: int = 12) -> int:
    """Finite-difference multiplicity of a monomial leading-term ideal.

    For quotient dimension D >= 1 the Hilbert function eventually agrees
    with a degree D-1 polynomial whose (D-1)-fold difference is the
    multiplicity; for D = 0 the multiplicity is the total count of
    standard monomials.
    """
    values = hilbert_function_values(lt_gens, nvars, up_to_degree)
    if dimension == 0:
        return sum(values)
    diffs = values
    for _ in range(dimension - 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    tail = diffs[-3:]
    if len(set(tail)) != 1:
        raise AssertionError(
            f"difference column not stable: {diffs}; raise up_to_degree")
    return tail[-1]


# ---------------------------------------------------------------------------
# dimension of a monomial-ideal quotient via minimal vertex covers
# ---------------------------------------------------------------------------

def monomial_dimension(gen_exps: list[tuple[int, ...]], nvars: int) -> int:
    """Krull dimension of R/I for a monomial ideal I.

    Minimal primes of a monomial ideal are generated by variable subsets
    that meet the support of every generator; the dimension is nvars
    minus the smallest such cover.
    """
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gen_exps]
    if any(not s for s in supports):
        raise ValueError("unit ideal")
    if not supports:
        return nvars
    for size in range(nvars + 1):
        for subset in itertools.combinations(range(nvars), size):
            chosen = set(subset)
            if all(s & chosen for s in supports):
                return nvars - size
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# schoolbook polynomial product
# ---------------------------------------------------------------------------

def schoolbook_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    field = f.ring.field
    acc: dict[tuple[int, ...], object] = {}
    for ea, ca in f.terms.items():
        for eb, cb in g.terms.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            cur = acc.get(key, field.zero())
            acc[key] = field.add(cur, field.mul(ca, cb))
    acc = {e: c for e, c in acc.items() if c}
    return Polynomial(f.ring, acc)
