"""Executable containment checks and their hypothesis bookkeeping.

Each verifier returns a VerificationReport rather than a bare boolean so
that "the hypotheses fail" (inapplicable), "the computation is not
trusted" (uncertified), and "the containment is false" (a genuine
failure, with a replayable witness) stay distinguishable.
"""

from __future__ import annotations

import math
import time
from functools import reduce

from .errors import RingMismatchError, UncertifiedSymbolicPowerError
from .ideals import Ideal, coordinate_prime, fresh_name, map_variables
from .local import PrimeWitness, ord_along, symbolic_power
from .poly import Polynomial, PolyRing
from .reports import HypothesisReport, VerificationReport


def full_coordinate_prime(ring: PolyRing) -> Ideal:
    """The ideal of all variables, the origin's maximal ideal."""
    return coordinate_prime(ring, ring.variables)


def check_hypotheses(p: PrimeWitness, q: PrimeWitness) -> HypothesisReport:
    """Radical-of-sum and dimension-count conditions for a prime pair."""
    if p.ring != q.ring:
        raise RingMismatchError(f"{p.ring} vs {q.ring}")
    s = p.ideal + q.ideal
    radical_ok = s.is_proper() and all(
        s.radical_contains(p.ring.variable(name)) for name in p.ring.variables
    )
    dim_p = p.claimed_dim
    dim_q = q.claimed_dim
    return HypothesisReport(
        radical_sum_is_maximal=radical_ok,
        dim_p=dim_p,
        dim_q=dim_q,
        dims_sum_to_d=dim_p + dim_q == p.ring.nvars,
    )


def _bridge_notes(*witnesses: PrimeWitness) -> list[str]:
    if all(w.graded_bridge_ok for w in witnesses):
        return []
    return ["graded bridge unverified"]


def _uncertified_report(claim: str, hyp: HypothesisReport | None,
                        exc: UncertifiedSymbolicPowerError,
                        data: dict) -> VerificationReport:
    return VerificationReport(
        claim=claim,
        hypotheses=hyp,
        holds=False,
        applicable=False,
        certified=False,
        notes=["inconclusive: " + str(exc)] + list(exc.diagnostics),
        data=data,
    )


def verify_sp2(p: PrimeWitness, q: PrimeWitness, m: int, n: int) -> VerificationReport:
    """Is every element of p^(m) cap q^(n) of order at least m + n?

    The order test is exact: a polynomial lies in the k-th power of the
    origin's maximal ideal exactly when its lowest-degree term has degree
    at least k.  Failure produces a basis element of too-low order as a
    replayable witness.
    """
    if m < 1 or n < 1:
        raise ValueError("exponents must be positive")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    hyp = check_hypotheses(p, q)
    timings["hypotheses"] = time.perf_counter() - t0
    data = {"m": m, "n": n, "required_order": m + n}
    t0 = time.perf_counter()
    try:
        sp = symbolic_power(p, m)
        sq = symbolic_power(q, n)
    except UncertifiedSymbolicPowerError as exc:
        return _uncertified_report("sp2", hyp, exc, data)
    timings["symbolic"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    inter = sp.intersect(sq)
    basis = inter.groebner_basis().polys
    timings["intersection"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    witness = None
    for g in basis:
        if g.order_at_origin() < m + n:
            witness = g
            break
    timings["check"] = time.perf_counter() - t0
    if basis:
        data["min_order"] = int(min(g.order_at_origin() for g in basis))
    return VerificationReport(
        claim="sp2",
        hypotheses=hyp,
        holds=witness is None,
        witness=witness,
        timings=timings,
        applicable=hyp.all_hold,
        certified=p.certified and q.certified,
        notes=_bridge_notes(p, q),
        data=data,
    )


def verify_sp1(p: PrimeWitness, q: PrimeWitness, m: int) -> VerificationReport:
    """The n = 1 slice of verify_sp2, byte for byte."""
    return verify_sp2(p, q, m, 1)


def verify_multi(primes, exponents) -> VerificationReport:
    """Intersection of several symbolic powers against the summed order.

    Applicability needs the heights to add up to the ring dimension and
    the radical of the summed primes to be the full coordinate ideal.
    """
    primes = list(primes)
    exponents = [int(n) for n in exponents]
    if not primes:
        raise ValueError("at least one prime is required")
    if len(primes) != len(exponents):
        raise ValueError("one exponent per prime")
    if any(n < 1 for n in exponents):
        raise ValueError("exponents must be positive")
    ring = primes[0].ring
    if any(p.ring != ring for p in primes):
        raise RingMismatchError("primes live in different rings")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    d = ring.nvars
    heights = [d - p.claimed_dim for p in primes]
    heights_ok = sum(heights) == d
    s = reduce(lambda a, b: a + b, (p.ideal for p in primes))
    radical_ok = s.is_proper() and all(
        s.radical_contains(ring.variable(name)) for name in ring.variables
    )
    timings["hypotheses"] = time.perf_counter() - t0
    bound = sum(exponents)
    data = {
        "exponents": exponents,
        "heights": heights,
        "heights_sum_to_d": heights_ok,
        "radical_sum_is_maximal": radical_ok,
        "required_order": bound,
    }
    t0 = time.perf_counter()
    try:
        powers = [symbolic_power(p, n) for p, n in zip(primes, exponents)]
    except UncertifiedSymbolicPowerError as exc:
        return _uncertified_report("multi", None, exc, data)
    timings["symbolic"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    inter = reduce(lambda a, b: a.intersect(b), powers)
    basis = inter.groebner_basis().polys
    timings["intersection"] = time.perf_counter() - t0
    witness = None
    for g in basis:
        if g.order_at_origin() < bound:
            witness = g
            break
    if basis:
        data["min_order"] = int(min(g.order_at_origin() for g in basis))
    return VerificationReport(
        claim="multi",
        hypotheses=None,
        holds=witness is None,
        witness=witness,
        timings=timings,
        applicable=heights_ok and radical_ok,
        certified=all(p.certified for p in primes),
        notes=_bridge_notes(*primes),
        data=data,
    )


def affine_vanishing_report(f: Polynomial, p: PrimeWitness,
                            q: PrimeWitness) -> VerificationReport:
    """Orders along two primes against the order at the origin.

    The claim is the implication "hypotheses imply order at the origin is
    at least the sum"; with failed hypotheses it holds vacuously and the
    report says so.
    """
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if f not in p.ideal or f not in q.ideal:
        raise ValueError("f must lie in both primes")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    hyp = check_hypotheses(p, q)
    timings["hypotheses"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    m = ord_along(p, f)
    n = ord_along(q, f)
    k = f.order_at_origin()
    timings["orders"] = time.perf_counter() - t0
    meets = k >= m + n
    applicable = hyp.all_hold
    notes = _bridge_notes(p, q)
    if not applicable:
        notes = notes + ["hypotheses fail; the implication holds vacuously"]
    return VerificationReport(
        claim="affine",
        hypotheses=hyp,
        holds=meets if applicable else True,
        witness=None if (meets or not applicable) else f,
        timings=timings,
        applicable=applicable,
        certified=p.certified and q.certified,
        notes=notes,
        data={"ord_p": m, "ord_q": n, "order_at_origin": int(k),
              "required_order": m + n},
    )


def verify_regular_case(p: PrimeWitness, q: PrimeWitness, m: int,
                        n: int) -> VerificationReport:
    """Stronger conclusion available when R/p is regular: the symbolic
    intersection lands in p^m times the n-th power of the coordinate
    maximal ideal."""
    if not p.is_coordinate_subspace:
        raise ValueError("p must be a coordinate-subspace prime")
    if m < 1 or n < 1:
        raise ValueError("exponents must be positive")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    hyp = check_hypotheses(p, q)
    timings["hypotheses"] = time.perf_counter() - t0
    data = {"m": m, "n": n}
    t0 = time.perf_counter()
    try:
        sp = symbolic_power(p, m)
        sq = symbolic_power(q, n)
    except UncertifiedSymbolicPowerError as exc:
        return _uncertified_report("regular", hyp, exc, data)
    timings["symbolic"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    inter = sp.intersect(sq)
    target = (p.ideal ** m) * (full_coordinate_prime(p.ring) ** n)
    witness = None
    for g in inter.groebner_basis().polys:
        if g not in target:
            witness = g
            break
    timings["check"] = time.perf_counter() - t0
    return VerificationReport(
        claim="regular",
        hypotheses=hyp,
        holds=witness is None,
        witness=witness,
        timings=timings,
        applicable=hyp.all_hold,
        certified=p.certified and q.certified,
        notes=_bridge_notes(p, q),
        data=data,
    )


def verify_ci_product(I: Ideal, J: Ideal, m: int, n: int) -> VerificationReport:
    """Ideal equality of intersection and product for complete
    intersections.

    The regular-sequence hypothesis is checked through the proxy "height
    equals the number of given generators", which suffices in a
    polynomial ring; the radical and dimension-count conditions are
    reported alongside.
    """
    if m < 1 or n < 1:
        raise ValueError("exponents must be positive")
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")
    ring = I.ring
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    height_i = I.height()
    height_j = J.height()
    ci_i = height_i == len(I.gens)
    ci_j = height_j == len(J.gens)
    s = I + J
    radical_ok = s.is_proper() and all(
        s.radical_contains(ring.variable(name)) for name in ring.variables
    )
    dim_i = ring.nvars - height_i
    dim_j = ring.nvars - height_j
    hyp = HypothesisReport(
        radical_sum_is_maximal=radical_ok,
        dim_p=dim_i,
        dim_q=dim_j,
        dims_sum_to_d=dim_i + dim_j == ring.nvars,
    )
    timings["hypotheses"] = time.perf_counter() - t0
    notes = []
    if not all(g.is_homogeneous() for g in I.gens + J.gens):
        notes.append("graded bridge unverified")
    t0 = time.perf_counter()
    lhs = (I ** m).intersect(J ** n)
    rhs = (I ** m) * (J ** n)
    timings["intersection"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    equal = lhs == rhs
    witness = None
    if not equal:
        # the product always sits inside the intersection, so a witness
        # is an intersection element outside the product
        for g in lhs.groebner_basis().polys:
            if g not in rhs:
                witness = g
                break
    timings["check"] = time.perf_counter() - t0
    return VerificationReport(
        claim="ci",
        hypotheses=hyp,
        holds=equal,
        witness=witness,
        timings=timings,
        applicable=ci_i and ci_j and hyp.all_hold,
        certified=True,
        notes=notes,
        data={"m": m, "n": n,
              "height_I": height_i, "generators_I": len(I.gens),
              "height_J": height_j, "generators_J": len(J.gens),
              "regular_sequence_proxy_I": ci_i,
              "regular_sequence_proxy_J": ci_j},
    )


def monomial_curve_prime(ring: PolyRing, exponents) -> PrimeWitness:
    """Kernel of the map sending each variable to a power of one
    parameter; the standard source of primes whose symbolic powers
    outgrow the ordinary ones.
    """
    exps = tuple(int(a) for a in exponents)
    if len(exps) != ring.nvars:
        raise ValueError(
            f"need one exponent per variable of {ring}, got {exps}")
    if any(a < 1 for a in exps):
        raise ValueError("exponents must be positive")
    if math.gcd(*exps) != 1:
        raise ValueError(f"exponents {exps} must have gcd 1")
    tname = fresh_name("t", ring.variables)
    big = PolyRing(ring.field, (tname,) + ring.variables)
    t = big.variable(tname)
    up = [i + 1 for i in range(ring.nvars)]
    gens = [
        map_variables(ring.variable(v), big, up) - t ** a
        for v, a in zip(ring.variables, exps)
    ]
    kernel = Ideal(big, gens).eliminate([tname])
    return PrimeWitness(
        Ideal(ring, [map_variables(g, ring, list(range(ring.nvars)))
                     for g in kernel.gens]),
        claimed_dim=1,
        witness=ring.variable(ring.variables[0]),
        weights=exps,
    )
