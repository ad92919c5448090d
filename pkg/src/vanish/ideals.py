"""Ideals and the operations on them.

Everything here reduces to Groebner bases.  Each :class:`Ideal` caches
its reduced basis per monomial order, and equality compares the cached
reduced grevlex bases, which are canonical.
"""

from __future__ import annotations

import itertools
from functools import reduce

from .errors import (
    RingMismatchError,
    UnitIdealError,
    ZeroDivisorRequestError,
)
from .groebner import GroebnerBasis, buchberger, divmod_poly, normal_form
from .orders import GREVLEX, MonomialOrder
from .poly import Polynomial, PolyRing


def fresh_name(base: str, taken) -> str:
    """A variable name starting with ``base`` that avoids ``taken``."""
    if base not in taken:
        return base
    k = 0
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def map_variables(f: Polynomial, target: PolyRing, positions) -> Polynomial:
    """Reindex variables: old variable i becomes target variable
    positions[i].  A position of None demands the variable is absent."""
    out = {}
    for exps, coeff in f.terms.items():
        new = [0] * target.nvars
        for i, e in enumerate(exps):
            if not e:
                continue
            pos = positions[i]
            if pos is None:
                raise ValueError(
                    f"variable {f.ring.variables[i]!r} survives into a ring "
                    "that drops it")
            new[pos] = e
        out[tuple(new)] = coeff
    return Polynomial(target, out)


def divide_exact(f: Polynomial, g: Polynomial,
                 order: MonomialOrder = GREVLEX) -> Polynomial:
    """f / g when the division is exact; raises ValueError otherwise."""
    if g.is_zero():
        raise ZeroDivisorRequestError("division by the zero polynomial")
    quotients, r = divmod_poly(f, [g], order)
    if not r.is_zero():
        raise ValueError(f"{f} is not a polynomial multiple of {g}")
    return quotients[0]


class Ideal:
    """A finitely generated ideal of a polynomial ring."""

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        clean = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError(f"ideal generator {g!r} is not a polynomial")
            if g.ring != ring:
                raise RingMismatchError(
                    f"generator {g} lives in {g.ring}, not {ring}")
            if not g.is_zero():
                clean.append(g)
        self.gens = tuple(clean)
        self._gb_cache: dict[MonomialOrder, GroebnerBasis] = {}

    # -- canonical form ---------------------------------------------------

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = GroebnerBasis(self.ring, order,
                               tuple(buchberger(self.ring, self.gens, order)))
            self._gb_cache[order] = gb
        return gb

    def normal_form(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        return self.groebner_basis(order).reduce(f)

    def __contains__(self, f) -> bool:
        if not isinstance(f, Polynomial):
            return False
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        return self.groebner_basis().contains(f)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self is other:
            return True
        return self.groebner_basis().polys == other.groebner_basis().polys

    __hash__ = None

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside}) in {self.ring}"

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        if not self.gens:
            return False
        return self.groebner_basis().polys == (self.ring.one(),)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_monomial_ideal(self) -> bool:
        return all(g.is_monomial() for g in self.groebner_basis().polys)

    def monomial_exponents(self) -> list[tuple[int, ...]]:
        """Minimal monomial generators, for monomial ideals only."""
        if not self.is_monomial_ideal():
            raise ValueError("not a monomial ideal")
        return [g.leading_exps(GREVLEX) for g in self.groebner_basis().polys]

    def leading_term_ideal(self, order: MonomialOrder = GREVLEX) -> "Ideal":
        gb = self.groebner_basis(order)
        gens = [self.ring.monomial(e) for e in gb.leading_term_exponents()]
        return Ideal(self.ring, gens)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if not self.gens or not other.gens:
            return Ideal(self.ring, [])
        prods = {f * g for f in self.gens for g in other.gens}
        return Ideal(self.ring, sorted(prods, key=_poly_sort_key))

    def __pow__(self, k: int) -> "Ideal":
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return Ideal(self.ring, [self.ring.one()])
        if not self.gens:
            return Ideal(self.ring, [])
        prods = set()
        for combo in itertools.combinations_with_replacement(self.gens, k):
            p = combo[0]
            for q in combo[1:]:
                p = p * q
            prods.add(p)
        return Ideal(self.ring, sorted(prods, key=_poly_sort_key))

    def _check(self, other: "Ideal"):
        if not isinstance(other, Ideal):
            raise TypeError(f"expected an ideal, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{other.ring} vs {self.ring}")

    # -- intersection, colon, saturation ---------------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J via a tag variable: eliminate t from t*I + (1-t)*J."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        if self.is_unit():
            return Ideal(self.ring, other.gens)
        if other.is_unit():
            return Ideal(self.ring, self.gens)
        ring = self.ring
        tname = fresh_name("t", ring.variables)
        big = PolyRing(ring.field, (tname,) + ring.variables)
        up = [i + 1 for i in range(ring.nvars)]
        t = big.variable(tname)
        one_minus_t = big.one() - t
        gens = [t * map_variables(f, big, up) for f in self.gens]
        gens += [one_minus_t * map_variables(g, big, up) for g in other.gens]
        order = MonomialOrder("block", elim=(0,))
        basis = buchberger(big, gens, order)
        down = [None] + list(range(ring.nvars))
        kept = [map_variables(g, ring, down)
                for g in basis if g.degree_in(0) == 0]
        return Ideal(ring, kept)

    def colon(self, divisor) -> "Ideal":
        """I : f for a polynomial, or I : J generator by generator."""
        if isinstance(divisor, Ideal):
            self._check(divisor)
            if divisor.is_zero():
                return Ideal(self.ring, [self.ring.one()])
            parts = [self.colon(g) for g in divisor.gens]
            return reduce(lambda a, b: a.intersect(b), parts)
        f = divisor
        if not isinstance(f, Polynomial):
            raise TypeError(f"cannot colon by {type(f).__name__}")
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        if f.is_zero():
            raise ZeroDivisorRequestError("colon by the zero polynomial")
        if f.is_constant():
            return Ideal(self.ring, self.gens)
        if self.is_zero():
            return Ideal(self.ring, [])
        inter = self.intersect(Ideal(self.ring, [f]))
        # every generator of I cap (f) is a multiple of f
        return Ideal(self.ring, [divide_exact(g, f) for g in inter.gens])

    def saturate(self, f: Polynomial) -> tuple["Ideal", int]:
        """(I : f^infinity, saturation index).

        Iterates the colon until it stabilizes; the index is the smallest
        s with I : f^s equal to the saturation.
        """
        if isinstance(f, Ideal):
            raise TypeError("saturation witness must be a polynomial")
        if f.is_zero():
            raise ZeroDivisorRequestError("saturation by the zero polynomial")
        current = self
        index = 0
        while True:
            nxt = current.colon(f)
            if nxt == current:
                return current, index
            current = nxt
            index += 1

    # -- radical membership, dimension, elimination ------------------------------

    def radical_contains(self, f: Polynomial) -> bool:
        """f in sqrt(I), decided by adjoining w and testing 1 - w*f."""
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        if f.is_zero():
            return True
        if self.is_unit():
            return True
        ring = self.ring
        wname = fresh_name("w", ring.variables)
        big = PolyRing(ring.field, (wname,) + ring.variables)
        up = [i + 1 for i in range(ring.nvars)]
        w = big.variable(wname)
        gens = [map_variables(g, big, up) for g in self.gens]
        gens.append(big.one() - w * map_variables(f, big, up))
        return Ideal(big, gens).is_unit()

    def dimension(self) -> int:
        """Krull dimension of the quotient ring.

        Computed on the leading-term ideal: the dimension is the largest
        size of a variable subset meeting the support of no minimal
        generator.
        """
        if self.is_unit():
            raise UnitIdealError("the unit ideal has no dimension")
        n = self.ring.nvars
        if not self.gens:
            return n
        supports = [
            frozenset(i for i, e in enumerate(exps) if e)
            for exps in self.groebner_basis().leading_term_exponents()
        ]
        dim, _ = _best_independent_sets(supports, n, all_sets=False)
        return dim

    def height(self) -> int:
        """Codimension: number of variables minus the dimension."""
        return self.ring.nvars - self.dimension()

    def eliminate(self, names) -> "Ideal":
        """Intersect with the subring omitting the named variables."""
        names = list(names)
        if not names:
            return Ideal(self.ring, self.gens)
        idxs = []
        for name in names:
            if name not in self.ring.variables:
                raise KeyError(f"no variable {name!r} in {self.ring}")
            idxs.append(self.ring.variables.index(name))
        idxs = tuple(sorted(set(idxs)))
        if len(idxs) == self.ring.nvars:
            raise ValueError("cannot eliminate every variable")
        order = MonomialOrder("block", elim=idxs)
        basis = buchberger(self.ring, self.gens, order)
        keep_vars = [v for i, v in enumerate(self.ring.variables) if i not in idxs]
        sub = PolyRing(self.ring.field, tuple(keep_vars))
        positions: list[int | None] = []
        j = 0
        for i in range(self.ring.nvars):
            if i in idxs:
                positions.append(None)
            else:
                positions.append(j)
                j += 1
        kept = [
            map_variables(g, sub, positions)
            for g in basis
            if all(all(e[i] == 0 for i in idxs) for e in g.terms)
        ]
        return Ideal(sub, kept)


def _poly_sort_key(g: Polynomial):
    return sorted(g.terms.items(), reverse=True)


def _best_independent_sets(supports, nvars: int, all_sets: bool):
    """Largest variable subsets whose span avoids every support.

    Returns (size, sets); with all_sets False only the first witness of
    the maximal size is kept.
    """
    for size in range(nvars, -1, -1):
        found = []
        for combo in itertools.combinations(range(nvars), size):
            s = set(combo)
            if not any(sup <= s for sup in supports):
                found.append(frozenset(combo))
                if not all_sets:
                    return size, found
        if found:
            return size, found
    raise AssertionError("unreachable for a proper ideal")


def maximum_independent_sets(ideal: Ideal) -> tuple[int, list[frozenset]]:
    """All maximum independent variable sets of the leading-term ideal."""
    if ideal.is_unit():
        raise UnitIdealError("the unit ideal has no independent sets")
    n = ideal.ring.nvars
    if not ideal.gens:
        return n, [frozenset(range(n))]
    supports = [
        frozenset(i for i, e in enumerate(exps) if e)
        for exps in ideal.groebner_basis().leading_term_exponents()
    ]
    return _best_independent_sets(supports, n, all_sets=True)


def coordinate_prime(ring: PolyRing, names) -> Ideal:
    """The prime generated by a set of variables."""
    return Ideal(ring, [ring.variable(n) for n in names])
