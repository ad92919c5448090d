"""Multivariate division and Buchberger's algorithm.

The basis returned by :func:`buchberger` is always the reduced one:
monic elements, leading monomials forming an antichain under
divisibility, no term of any element divisible by another element's
leading monomial, sorted with the largest leading monomial first.  A
reduced basis is unique for a given ideal and order, which is what makes
ideal equality decidable by comparing bases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import term_cap
from .errors import TermCapExceededError
from .orders import GREVLEX, MonomialOrder
from .poly import (
    Polynomial,
    PolyRing,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


def _sub_scaled(p: dict, g: dict, coeff, shift, fld):
    """p -= coeff * x^shift * g, mutating p."""
    for e, c in g.items():
        key = monomial_mul(e, shift)
        v = fld.sub(p.get(key, fld.zero()), fld.mul(coeff, c))
        if v:
            p[key] = v
        else:
            p.pop(key, None)


def divmod_poly(f: Polynomial, divisors, order: MonomialOrder = GREVLEX):
    """Divide f by an ordered list of divisors: f = sum(q_i d_i) + r.

    The first divisor whose leading monomial divides the current leading
    monomial is used at each step, so the outcome is deterministic.  No
    term of the remainder is divisible by any divisor's leading monomial.
    """
    ring = f.ring
    fld = ring.field
    cap = term_cap()
    key = order.key
    div_data = []
    for d in divisors:
        if d.is_zero():
            div_data.append(None)   # keep indices aligned with the input
        else:
            le = d.leading_exps(order)
            div_data.append((le, fld.inv(d.terms[le]), d.terms))
    p = dict(f.terms)
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}
    while p:
        lt = max(p, key=key)
        lc = p[lt]
        for i, data in enumerate(div_data):
            if data is None:
                continue
            le, lc_inv, dterms = data
            if monomial_divides(le, lt):
                shift = monomial_div(lt, le)
                factor = fld.mul(lc, lc_inv)
                quotients[i][shift] = factor
                _sub_scaled(p, dterms, factor, shift, fld)
                break
        else:
            remainder[lt] = lc
            del p[lt]
        if len(p) > cap:
            raise TermCapExceededError(
                f"division intermediate exceeds the term cap ({cap}); "
                "set VANISH_TERM_CAP to raise it")
    return [Polynomial(ring, q) for q in quotients], Polynomial(ring, remainder)


def normal_form(f: Polynomial, basis, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of f on division by the basis (quotients not tracked)."""
    ring = f.ring
    fld = ring.field
    cap = term_cap()
    key = order.key
    div_data = []
    for d in basis:
        if not d.is_zero():
            le = d.leading_exps(order)
            div_data.append((le, fld.inv(d.terms[le]), d.terms))
    p = dict(f.terms)
    remainder: dict = {}
    while p:
        lt = max(p, key=key)
        lc = p[lt]
        for le, lc_inv, dterms in div_data:
            if monomial_divides(le, lt):
                _sub_scaled(p, dterms, fld.mul(lc, lc_inv), monomial_div(lt, le), fld)
                break
        else:
            remainder[lt] = lc
            del p[lt]
        if len(p) > cap:
            raise TermCapExceededError(
                f"reduction intermediate exceeds the term cap ({cap}); "
                "set VANISH_TERM_CAP to raise it")
    return Polynomial(ring, remainder)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial: the leading terms are scaled to the lcm and cancelled."""
    fld = f.ring.field
    ef = f.leading_exps(order)
    eg = g.leading_exps(order)
    l = monomial_lcm(ef, eg)
    p: dict = {}
    _sub_scaled(p, f.terms, fld.neg(fld.inv(f.terms[ef])), monomial_div(l, ef), fld)
    _sub_scaled(p, g.terms, fld.inv(g.terms[eg]), monomial_div(l, eg), fld)
    return Polynomial(f.ring, p)


def buchberger(ring: PolyRing, gens, order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pair selection follows the normal strategy (smallest lcm first).
    Pairs with coprime leading monomials are discarded outright, and the
    chain criterion drops a pair when a third basis element divides its
    lcm and both side pairs are already handled.
    """
    G = [g.monic(order) for g in gens if not g.is_zero()]
    if any(g.is_constant() for g in G):
        return [ring.one()]
    lead = [g.leading_exps(order) for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    key = order.key

    def pair_rank(ij):
        i, j = ij
        return (key(monomial_lcm(lead[i], lead[j])), ij)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        li, lj = lead[i], lead[j]
        l = monomial_lcm(li, lj)
        if l == monomial_mul(li, lj):
            continue
        if any(
            k != i and k != j
            and monomial_divides(lead[k], l)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        r = normal_form(spoly(G[i], G[j], order), G, order)
        if r.is_zero():
            continue
        if r.is_constant():
            return [ring.one()]
        r = r.monic(order)
        t = len(G)
        G.append(r)
        lead.append(r.leading_exps(order))
        pairs.update((k, t) for k in range(t))

    G = _minimalize(G, order)
    G = _interreduce(G, order)
    G.sort(key=lambda g: key(g.leading_exps(order)), reverse=True)
    return G


def _minimalize(G, order):
    keep: list[Polynomial] = []
    for g in sorted(G, key=lambda g: order.key(g.leading_exps(order))):
        le = g.leading_exps(order)
        if not any(monomial_divides(k.leading_exps(order), le) for k in keep):
            keep.append(g)
    return keep


def _interreduce(G, order):
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            others = G[:i] + G[i + 1:]
            r = normal_form(G[i], others, order).monic(order)
            if r != G[i]:
                G[i] = r
                changed = True
    return G


def leading_exponents(polys, order: MonomialOrder = GREVLEX) -> list[tuple[int, ...]]:
    """Minimal generating exponents of the leading-term ideal."""
    exps = [g.leading_exps(order) for g in polys if not g.is_zero()]
    minimal = [
        e for e in exps
        if not any(o != e and monomial_divides(o, e) for o in exps)
    ]
    # dedupe while keeping a canonical descending order
    out = sorted(set(minimal), key=order.key, reverse=True)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced basis together with its ring and order."""

    ring: PolyRing
    order: MonomialOrder
    polys: tuple[Polynomial, ...]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def leading_term_exponents(self) -> list[tuple[int, ...]]:
        return leading_exponents(self.polys, self.order)

    def check_certificate(self) -> bool:
        """Buchberger's criterion: every S-polynomial reduces to zero."""
        polys = self.polys
        for j in range(len(polys)):
            for i in range(j):
                s = spoly(polys[i], polys[j], self.order)
                if not normal_form(s, polys, self.order).is_zero():
                    return False
        return True

    @property
    def reduced(self) -> bool:
        return self.is_reduced()

    def is_reduced(self) -> bool:
        one = self.ring.field.one()
        for i, g in enumerate(self.polys):
            if g.is_zero() or g.leading_coefficient(self.order) != one:
                return False
            others = [h.leading_exps(self.order)
                      for k, h in enumerate(self.polys) if k != i]
            for e in g.terms:
                if any(monomial_divides(le, e) for le in others):
                    return False
        return True

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)
