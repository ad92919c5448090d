"""Local invariants: symbolic powers, vanishing orders along a prime,
Hilbert series of monomial ideals, graded multiplicity, local lengths at
coordinate primes, and the brute-force additivity check that ties
multiplicity to the top-dimensional local lengths.

Symbolic powers are computed by saturating the ordinary power at a
witness element outside the prime.  That is only guaranteed to remove
every embedded component when the origin is the sole possible embedded
point, which is what the Jacobian certificate establishes; results from
witnesses lacking any certificate still run but stay flagged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_ORD_CAP
from .errors import (
    NonHomogeneousError,
    OrdSearchCapError,
    UncertifiedSymbolicPowerError,
    UnitIdealError,
    WitnessError,
)
from .ideals import Ideal, coordinate_prime, maximum_independent_sets
from .orders import GREVLEX
from .poly import Polynomial, PolyRing, monomial_divides
from .reports import VerificationReport


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertData:
    """Normalized Hilbert series h(t)/(1-t)^D of a quotient ring.

    ``numerator`` holds the coefficients of h(t), constant term first,
    with h(1) = ``multiplicity``.  The unit ideal yields the zero module,
    encoded as dimension -1 and multiplicity 0.
    """

    numerator: tuple[int, ...]
    dimension: int
    multiplicity: int


def _upoly_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    )


def _upoly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _upoly_shift(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    return (0,) * k + a


def _minimal_antichain(exps) -> tuple[tuple[int, ...], ...]:
    ordered = sorted(set(exps), key=lambda e: (sum(e), e))
    keep: list[tuple[int, ...]] = []
    for e in ordered:
        if not any(monomial_divides(k, e) for k in keep):
            keep.append(e)
    return tuple(keep)


@lru_cache(maxsize=None)
def _hilbert_numerator(exps: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Numerator of the Hilbert series of R/(monomials) over (1-t)^d.

    Pivot recursion: splitting along a variable x gives
    N(I) = N(I + (x)) + t * N(I : x).
    """
    if not exps:
        return (1,)
    if any(not any(e) for e in exps):
        return (0,)
    supports = [tuple(i for i, v in enumerate(e) if v) for e in exps]
    if all(
        set(supports[i]).isdisjoint(supports[j])
        for j in range(len(supports)) for i in range(j)
    ):
        result = (1,)
        for e in exps:
            result = _upoly_mul(result, _upoly_add((1,), _upoly_shift((-1,), sum(e))))
        return result
    counts: dict[int, int] = {}
    for sup in supports:
        for i in sup:
            counts[i] = counts.get(i, 0) + 1
    pivot = min(i for i, c in counts.items() if c == max(counts.values()))
    nvars = len(exps[0])
    unit = tuple(1 if i == pivot else 0 for i in range(nvars))
    plus = _minimal_antichain(exps + (unit,))
    quot = _minimal_antichain(
        tuple(
            tuple(v - 1 if i == pivot and v else v for i, v in enumerate(e))
            for e in exps
        )
    )
    return _upoly_add(_hilbert_numerator(plus),
                      _upoly_shift(_hilbert_numerator(quot), 1))


def _strip_one_minus_t(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    # exact quotient by (1 - t); valid only when the sum of coefficients is 0
    partial = []
    acc = 0
    for c in coeffs:
        acc += c
        partial.append(acc)
    if partial[-1] != 0:
        raise ValueError("numerator not divisible by 1 - t")
    partial.pop()
    return tuple(partial) if partial else (0,)


def hilbert_series(lt_gens, ring: PolyRing) -> HilbertData:
    """Hilbert data of R modulo a monomial ideal.

    ``lt_gens`` may hold monomial polynomials or raw exponent tuples; the
    set is re-minimalized, so redundant generators are harmless.
    """
    exps = []
    for g in lt_gens:
        if isinstance(g, Polynomial):
            if not g.is_monomial():
                raise ValueError(f"{g} is not a monomial")
            exps.append(g.leading_exps(GREVLEX))
        else:
            exps.append(tuple(int(v) for v in g))
    for e in exps:
        if len(e) != ring.nvars:
            raise ValueError(f"exponent tuple {e} does not fit {ring}")
    antichain = _minimal_antichain(exps)
    numerator = _hilbert_numerator(antichain)
    if not any(numerator):
        return HilbertData((0,), -1, 0)
    h = numerator
    dim = ring.nvars
    while sum(h) == 0:
        h = _strip_one_minus_t(h)
        dim -= 1
    while len(h) > 1 and h[-1] == 0:
        h = h[:-1]
    return HilbertData(h, dim, sum(h))


def graded_hilbert_data(ideal: Ideal) -> HilbertData:
    """Hilbert data of the quotient, read off the leading-term ideal.

    For a homogeneous ideal this is the honest graded Hilbert series; in
    general it describes the degree filtration, so the multiplicity is
    the degree of the projective closure.
    """
    if ideal.is_unit():
        raise UnitIdealError("the unit ideal has no Hilbert data")
    lt = ideal.leading_term_ideal(GREVLEX)
    return hilbert_series(lt.gens, ideal.ring)


def multiplicity_graded(ideal: Ideal) -> int:
    return graded_hilbert_data(ideal).multiplicity


# ---------------------------------------------------------------------------
# Primes with saturation witnesses
# ---------------------------------------------------------------------------

class PrimeWitness:
    """An ideal asserted prime, with the data needed for symbolic powers.

    Primality itself is the caller's assertion and is never verified;
    everything downstream (witness validity, dimension, certification) is
    checked.  ``weights`` may declare a positive grading under which the
    generators are homogeneous; this widens the Jacobian certificate to
    quasi-homogeneous primes such as monomial curves.
    """

    def __init__(self, ideal: Ideal, claimed_dim: int | None = None,
                 witness: Polynomial | None = None,
                 weights: tuple[int, ...] | None = None):
        if ideal.is_unit():
            raise UnitIdealError("a prime must be proper")
        self.ideal = ideal
        self.ring = ideal.ring
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != self.ring.nvars or any(w <= 0 for w in weights):
                raise ValueError(f"bad weight vector {weights} for {self.ring}")
        self.weights = weights

        dim = ideal.dimension()
        if claimed_dim is not None and claimed_dim != dim:
            raise ValueError(
                f"claimed dimension {claimed_dim} but the ideal has dimension {dim}")
        self.claimed_dim = dim

        if witness is None:
            witness = self._default_witness()
        if witness.ring != self.ring:
            raise WitnessError(f"witness lives in {witness.ring}, not {self.ring}")
        if witness.is_zero():
            raise WitnessError("witness must be nonzero")
        if witness in ideal:
            raise WitnessError(f"witness {witness} lies in the prime")
        if witness.is_constant():
            # only legitimate for the full coordinate prime, whose powers
            # are already primary so saturation must be a no-op
            if any(self.ring.variable(n) not in ideal for n in self.ring.variables):
                raise WitnessError(
                    "constant witness is only valid when every variable "
                    "lies in the prime")
        elif witness.order_at_origin() < 1:
            raise WitnessError(
                f"witness {witness} has a unit part; use an element that "
                "vanishes at the origin")
        self.witness = witness

        gb = ideal.groebner_basis()
        self.is_coordinate_subspace = all(
            g.is_monomial() and g.total_degree() == 1 for g in gb.polys)
        self.is_principal = len(gb.polys) == 1
        try:
            self.isolated_singularity_certified = verify_isolated_singularity(self)
        except NonHomogeneousError:
            self.isolated_singularity_certified = False
        self._symbolic_cache: dict[int, Ideal] = {}

    def _default_witness(self) -> Polynomial:
        for name in self.ring.variables:
            v = self.ring.variable(name)
            if v not in self.ideal:
                return v
        # the prime is the full coordinate ideal; its powers are already
        # primary, so a unit witness makes saturation a no-op
        return self.ring.one()

    @property
    def certified(self) -> bool:
        return (self.is_coordinate_subspace or self.is_principal
                or self.isolated_singularity_certified)

    @property
    def graded_bridge_ok(self) -> bool:
        """Generators homogeneous under the declared (or unit) grading."""
        return all(g.is_homogeneous(self.weights) for g in self.ideal.gens)

    def probe_elements(self) -> list[Polynomial]:
        probes = []
        for name in self.ring.variables:
            v = self.ring.variable(name)
            if v not in self.ideal:
                probes.append(v)
        if not self.witness.is_constant() and self.witness not in probes:
            probes.append(self.witness)
        return probes

    def __repr__(self):
        return (f"PrimeWitness({self.ideal!r}, dim={self.claimed_dim}, "
                f"witness={self.witness})")


def verify_isolated_singularity(p: PrimeWitness) -> bool:
    """Jacobian certificate that the singular locus is at most the origin.

    Forms the h x h minors of the Jacobian of the reduced basis, h the
    height, and asks every variable to be a radical member of the prime
    plus those minors.  Valid over characteristic zero for ideals
    homogeneous under some positive grading; anything else is refused
    (char p) or rejected (non-homogeneous).
    """
    if p.ring.field.characteristic != 0:
        return False
    weights = p.weights
    gens = list(p.ideal.groebner_basis().polys)
    for g in gens:
        if not g.is_homogeneous(weights):
            raise NonHomogeneousError(
                f"{g} is not homogeneous under weights "
                f"{weights or (1,) * p.ring.nvars}")
    h = p.ring.nvars - p.claimed_dim
    if h == 0:
        return True
    jac = [[g.differentiate(j) for j in range(p.ring.nvars)] for g in gens]
    minors = []
    for rows in itertools.combinations(range(len(gens)), h):
        for cols in itertools.combinations(range(p.ring.nvars), h):
            sub = [[jac[r][c] for c in cols] for r in rows]
            d = _det(sub)
            if not d.is_zero():
                minors.append(d)
    test = Ideal(p.ring, list(p.ideal.gens) + minors)
    return all(
        test.radical_contains(p.ring.variable(name))
        for name in p.ring.variables
    )


def _det(matrix: list[list[Polynomial]]) -> Polynomial:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = matrix[0][0].ring.zero()
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# Symbolic powers and orders of vanishing
# ---------------------------------------------------------------------------

def symbolic_power(p: PrimeWitness, m: int) -> Ideal:
    """The m-th symbolic power, as a witness saturation with a post-check.

    The returned ideal always sits between the ordinary power and the
    prime, is stable under colon by every probe element outside the
    prime, and has the prime as its radical.  Any violated probe raises
    instead of returning a wrong ideal.
    """
    if m < 1:
        raise ValueError(f"symbolic power exponent must be positive, got {m}")
    cached = p._symbolic_cache.get(m)
    if cached is not None:
        return cached
    base = p.ideal ** m
    result, _ = base.saturate(p.witness)
    diagnostics = []
    if not all(g in result for g in base.gens):
        diagnostics.append("ordinary power is not contained in the result")
    if not all(g in p.ideal for g in result.gens):
        diagnostics.append("result is not contained in the prime")
    for w in p.probe_elements():
        if result.colon(w) != result:
            diagnostics.append(f"colon by probe {w} moves the result")
    for g in p.ideal.gens:
        if not result.radical_contains(g):
            diagnostics.append(f"{g} is missing from the radical of the result")
    if diagnostics:
        raise UncertifiedSymbolicPowerError(
            f"saturation of power {m} failed its contract",
            diagnostics=diagnostics, ideal=result)
    p._symbolic_cache[m] = result
    return result


def ord_along(p: PrimeWitness, f: Polynomial, max_order: int | None = None) -> int:
    """Largest m with f in the m-th symbolic power; 0 when f is not in p."""
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes to every order")
    cap = DEFAULT_ORD_CAP if max_order is None else max_order
    order = 0
    while order < cap:
        if f in symbolic_power(p, order + 1):
            order += 1
        else:
            return order
    raise OrdSearchCapError(
        f"order search passed {cap}; raise max_order if this is intended")


# ---------------------------------------------------------------------------
# Local lengths and the additivity check
# ---------------------------------------------------------------------------

def local_length_at_monomial_prime(ideal: Ideal, prime_vars) -> int:
    """Length of the localization of R/I at a coordinate prime.

    Substituting 1 for the variables outside the prime turns the
    localization into a standard-monomial count.  Finiteness requires the
    prime to be minimal over the ideal; anything else is rejected.
    """
    ring = ideal.ring
    names = list(prime_vars)
    if len(set(names)) != len(names):
        raise ValueError("repeated variable in the prime")
    idxs = sorted(ring.variables.index(n) for n in names)
    exps = ideal.monomial_exponents()
    if not idxs:
        if exps:
            raise ValueError("only the zero ideal localizes at the zero prime")
        return 1
    restricted = _minimal_antichain(tuple(e[i] for i in idxs) for e in exps)
    if any(not any(e) for e in restricted):
        raise ValueError("the prime does not contain the ideal")
    bounds = []
    for pos in range(len(idxs)):
        pure = [e[pos] for e in restricted
                if all(v == 0 for j, v in enumerate(e) if j != pos) and e[pos]]
        if not pure:
            raise ValueError(
                "the prime is not minimal over the ideal (infinite length)")
        bounds.append(min(pure))
    count = 0
    for point in itertools.product(*(range(b) for b in bounds)):
        if not any(monomial_divides(g, point) for g in restricted):
            count += 1
    return count


def associativity_check(ideal: Ideal) -> VerificationReport:
    """Multiplicity against the sum of local lengths at top primes.

    Both sides are computed by unrelated code paths: the left through the
    Hilbert-series recursion, the right by enumerating the coordinate
    minimal primes of maximal dimension and counting standard monomials
    in each localization.
    """
    if ideal.is_unit():
        raise UnitIdealError("additivity check needs a proper ideal")
    ideal.monomial_exponents()   # raises unless monomial
    lhs = graded_hilbert_data(ideal).multiplicity
    _, indep_sets = maximum_independent_sets(ideal)
    terms = []
    rhs = 0
    ring = ideal.ring
    for s in sorted(indep_sets, key=sorted):
        prime_vars = [v for i, v in enumerate(ring.variables) if i not in s]
        length = local_length_at_monomial_prime(ideal, prime_vars)
        quotient_mult = multiplicity_graded(coordinate_prime(ring, prime_vars))
        rhs += length * quotient_mult
        terms.append({
            "prime": prime_vars,
            "local_length": length,
            "quotient_multiplicity": quotient_mult,
        })
    return VerificationReport(
        claim="multiplicity-additivity",
        hypotheses=None,
        holds=lhs == rhs,
        data={"multiplicity": lhs, "local_sum": rhs, "terms": terms},
    )
