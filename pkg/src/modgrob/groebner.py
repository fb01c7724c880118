"""Normal forms and Buchberger completion over QQ, ZZ/p and (strongly) ZZ.

Over a field the engine is the classical one: S-polynomials, full
reduction, monic reduced bases.  Over ZZ it computes strong bases: besides
S-pairs it closes under G-pairs (Bezout combinations of the leading
coefficients on the lcm monomial) and reduction is coefficient-aware, with
remainders canonical in [0, lead coefficient).  Bases over ZZ/m for
composite m are obtained by adjoining the constant m over ZZ and mapping
down, so one completion engine covers every domain.
"""

import bisect
import heapq
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitExceeded, RingMismatch, ZeroPolynomial
from .intarith import ext_gcd
from .polyring import (
    IntegerDomain,
    ModularDomain,
    Polynomial,
    RationalDomain,
    RingDescriptor,
    change_domain,
    leading_coefficient,
    leading_monomial,
    leading_term,
    monic,
    monomial_div,
    monomial_divides,
    monomial_key,
    monomial_lcm,
    monomial_mul,
    poly_scale,
    poly_sub,
    term_mul,
    with_domain,
)

S_PAIR = 0
G_PAIR = 1


@dataclass(frozen=True)
class Limits:
    """Budget for one completion run; exceeding it raises instead of spinning.

    The pair budget is the primary guard; the reduction budget is a wide
    backstop (elimination orders legitimately burn millions of steps).
    """

    max_pairs: int = 50_000
    max_reductions: int = 50_000_000

    @staticmethod
    def from_environment():
        cap = os.environ.get("MODGROB_MAX_PAIRS")
        if cap is None:
            return Limits()
        return Limits(max_pairs=int(cap))


DEFAULT_LIMITS = Limits()


class _Budget:
    __slots__ = ("limits", "pairs", "reductions")

    def __init__(self, limits):
        self.limits = limits or DEFAULT_LIMITS
        self.pairs = 0
        self.reductions = 0

    def pair(self):
        self.pairs += 1
        if self.pairs > self.limits.max_pairs:
            raise ResourceLimitExceeded(
                f"pair budget exhausted ({self.limits.max_pairs}); "
                "raise --max-pairs / MODGROB_MAX_PAIRS if this is intended")

    def reduction(self):
        self.reductions += 1
        if self.reductions > self.limits.max_reductions:
            raise ResourceLimitExceeded(
                f"reduction budget exhausted ({self.limits.max_reductions})")


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingDescriptor
    elements: tuple  # Polynomials, sorted by leading monomial descending
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# reduction

def _basis_elements(basis):
    if isinstance(basis, GroebnerBasis):
        return list(basis.elements)
    return list(basis)


def _check_reducers(f, reducers):
    for g in reducers:
        if not isinstance(g, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(g).__name__}")
        if g.ring != f.ring:
            raise RingMismatch("reducer ring differs from the dividend's")
        if g.is_zero:
            raise ZeroPolynomial("zero polynomial in reducer list")


def _reduce(f, reducers, want_quotients=False, budget=None):
    """Shared division loop; deterministic: first eligible reducer wins.

    Returns (quotients, remainder).  A term is moved to the remainder only
    once no reducer changes it, which over ZZ / ZZ/m means its coefficient
    is the canonical residue for every applicable lead coefficient.

    The current largest monomial comes from a lazy max-heap (entries whose
    monomial dropped out of the working dict are skipped on pop), so keys
    are computed once per introduced monomial instead of once per sweep.
    """
    dom = f.ring.domain
    key = monomial_key(f.ring.order)
    leads = [(leading_monomial(g), leading_coefficient(g)) for g in reducers]
    work = {mono: c for c, mono in f.terms}
    heap = [(tuple(-v for v in key(mono)), mono) for mono in work]
    heapq.heapify(heap)
    rem = []
    quotients = [{} for _ in reducers] if want_quotients else None
    while heap:
        negkey, mono = heapq.heappop(heap)
        c = work.get(mono)
        if c is None:
            continue
        progressed = False
        for idx, (gm, gc) in enumerate(leads):
            if not monomial_divides(gm, mono):
                continue
            q, _ = dom.coeff_divmod(c, gc)
            if q == 0:
                continue
            if budget is not None:
                budget.reduction()
            shift = monomial_div(mono, gm)
            for tc, tm in reducers[idx].terms:
                target = monomial_mul(tm, shift)
                old = work.get(target)
                v = dom.normalize((old or 0) - q * tc)
                if v == 0:
                    if old is not None:
                        del work[target]
                elif old is None:
                    work[target] = v
                    heapq.heappush(heap, (tuple(-u for u in key(target)), target))
                else:
                    work[target] = v
            if want_quotients:
                quotients[idx][shift] = quotients[idx].get(shift, 0) + q
            progressed = True
            break
        if not progressed:
            rem.append((c, mono))
            del work[mono]
        elif mono in work:
            # partially reduced lead coefficient: revisit the same monomial
            heapq.heappush(heap, (negkey, mono))
    remainder = Polynomial(f.ring, tuple(rem))
    if want_quotients:
        qpolys = [Polynomial.from_terms(f.ring, [(c, m) for m, c in qd.items()])
                  for qd in quotients]
        return qpolys, remainder
    return None, remainder


def normal_form(f, basis):
    """Fully reduce f against a list of polynomials (or a GroebnerBasis)."""
    reducers = _basis_elements(basis)
    _check_reducers(f, reducers)
    return _reduce(f, reducers)[1]


def divide_with_cofactors(f, basis):
    """Division with quotient tracking: f == sum(q_i * g_i) + remainder.

    Field domains only; the remainder equals normal_form(f, basis).
    """
    reducers = _basis_elements(basis)
    _check_reducers(f, reducers)
    if not f.ring.domain.is_field:
        raise DomainError("cofactor division needs a field domain")
    return _reduce(f, reducers, want_quotients=True)


def ideal_member(f, basis):
    """Membership via reduction to zero against a (strong) Groebner basis."""
    return normal_form(f, basis).is_zero


# ---------------------------------------------------------------------------
# pair polynomials

def _field_inv(dom, c):
    if isinstance(dom, RationalDomain):
        return Fraction(1) / c
    if isinstance(dom, ModularDomain) and dom.is_field:
        return pow(c, -1, dom.modulus)
    raise DomainError("inverse needs a field domain")


def s_polynomial_field(f, g):
    """(lcm / lt(f)) * f - (lcm / lt(g)) * g; the leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("s-polynomial of a zero polynomial")
    dom = f.ring.domain
    if not dom.is_field:
        raise DomainError("s_polynomial_field needs a field domain")
    cf, mf = leading_term(f)
    cg, mg = leading_term(g)
    lcm = monomial_lcm(mf, mg)
    return poly_sub(term_mul(f, _field_inv(dom, cf), monomial_div(lcm, mf)),
                    term_mul(g, _field_inv(dom, cg), monomial_div(lcm, mg)))


def s_pair_z(f, g):
    """Integer S-combination: scale both sides to lcm of the lead coefficients."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("s-pair of a zero polynomial")
    a, mf = leading_term(f)
    b, mg = leading_term(g)
    lcm = monomial_lcm(mf, mg)
    c = math.lcm(a, b)
    return poly_sub(term_mul(f, c // a, monomial_div(lcm, mf)),
                    term_mul(g, c // b, monomial_div(lcm, mg)))


def g_pair_z(f, g):
    """Bezout combination whose leading term is gcd(lc f, lc g) on the lcm."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("g-pair of a zero polynomial")
    a, mf = leading_term(f)
    b, mg = leading_term(g)
    lcm = monomial_lcm(mf, mg)
    _, u, v = ext_gcd(a, b)
    left = term_mul(f, u, monomial_div(lcm, mf))
    right = term_mul(g, v, monomial_div(lcm, mg))
    return left + right


# ---------------------------------------------------------------------------
# completion over fields

def _sortable_coeff(c):
    return Fraction(c) if not isinstance(c, Fraction) else c


def _poly_sort_key(key):
    def inner(f):
        return tuple((key(m), _sortable_coeff(c)) for c, m in f.terms)
    return inner


class _ReducerView:
    """Working basis kept sorted ascending by lead monomial, so smaller
    reducers apply first; insertion keeps pair indices stable elsewhere."""

    def __init__(self, key):
        self._sort_key = _poly_sort_key(key)
        self._entries = []  # (sort key, insertion counter, poly)
        self._counter = 0
        self.polys = []

    def insert(self, poly):
        entry = (self._sort_key(poly), self._counter, poly)
        self._counter += 1
        pos = bisect.bisect(self._entries, entry)
        self._entries.insert(pos, entry)
        self.polys.insert(pos, poly)


def _common_ring(gens, ring_):
    if ring_ is None:
        if not gens:
            raise ValueError("cannot infer the ring from an empty generator list")
        ring_ = gens[0].ring
    for g in gens:
        if not isinstance(g, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(g).__name__}")
        if g.ring != ring_:
            raise RingMismatch("generators live in different rings")
    return ring_


def buchberger_field(gens, limits=None, *, ring=None):
    """Reduced Groebner basis over QQ or a prime field ZZ/p.

    Empty or all-zero input yields the empty basis (of the zero ideal);
    pass ``ring`` explicitly when the generator list is empty.
    """
    gens = list(gens)
    ring_ = _common_ring(gens, ring)
    if not ring_.domain.is_field:
        raise DomainError(f"{ring_.domain.name} is not a field")
    budget = _Budget(limits)
    key = monomial_key(ring_.order)
    G = []
    view = _ReducerView(key)
    for g in gens:
        if g.is_zero:
            continue
        _, r = _reduce(g, view.polys, budget=budget)
        if not r.is_zero:
            G.append(monic(r))
            view.insert(G[-1])
    queue = []
    counter = 0

    def push_pairs(new_index):
        nonlocal counter
        for i in range(new_index):
            mf = leading_monomial(G[i])
            mg = leading_monomial(G[new_index])
            lcm = monomial_lcm(mf, mg)
            if lcm == monomial_mul(mf, mg):
                continue  # coprime lead monomials: S-poly reduces to zero
            heapq.heappush(queue, (key(lcm), counter, i, new_index))
            counter += 1

    for idx in range(len(G)):
        push_pairs(idx)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        budget.pair()
        s = s_polynomial_field(G[i], G[j])
        _, r = _reduce(s, view.polys, budget=budget)
        if not r.is_zero:
            G.append(monic(r))
            view.insert(G[-1])
            push_pairs(len(G) - 1)
    return _canonicalize_field(G, ring_, key)


def _canonicalize_field(G, ring_, key):
    """Minimize and tail-reduce a complete field basis into the reduced one."""
    G = [monic(g) for g in G if not g.is_zero]
    G.sort(key=_poly_sort_key(key))
    kept = []
    for g in G:
        lm = leading_monomial(g)
        if not any(monomial_divides(leading_monomial(h), lm) for h in kept):
            kept.append(g)
    for i in range(len(kept)):
        others = kept[:i] + kept[i + 1:]
        _, r = _reduce(kept[i], others)
        kept[i] = monic(r)
    kept.sort(key=lambda g: key(leading_monomial(g)), reverse=True)
    return GroebnerBasis(ring_, tuple(kept), reduced=True)


# ---------------------------------------------------------------------------
# completion over ZZ (strong bases)

def _sign_normalized(f):
    if f.is_zero:
        return f
    return poly_scale(f, -1) if leading_coefficient(f) < 0 else f


def _strongly_divides(lt_small, lt_big):
    (c1, m1), (c2, m2) = lt_small, lt_big
    return monomial_divides(m1, m2) and c2 % c1 == 0


def buchberger_z(gens, limits=None, *, ring=None):
    """Reduced strong Groebner basis over ZZ.

    Completion closes the working set under both S-pairs and G-pairs until
    every pair reduces to zero, then minimizes, tail-reduces and normalizes
    signs (positive leading coefficients).  The integer content of the
    elements is kept: <2x> and <x> are different ideals over ZZ.
    """
    gens = list(gens)
    ring_ = _common_ring(gens, ring)
    if not isinstance(ring_.domain, IntegerDomain):
        raise DomainError("buchberger_z needs the integer domain")
    budget = _Budget(limits)
    key = monomial_key(ring_.order)
    G = []
    view = _ReducerView(key)
    for g in gens:
        if g.is_zero:
            continue
        _, r = _reduce(g, view.polys, budget=budget)
        if not r.is_zero:
            G.append(_sign_normalized(r))
            view.insert(G[-1])
    queue = []
    counter = 0

    def push_pairs(new_index):
        nonlocal counter
        for i in range(new_index):
            a, mf = leading_term(G[i])
            b, mg = leading_term(G[new_index])
            lcm = monomial_lcm(mf, mg)
            coprime_monos = lcm == monomial_mul(mf, mg)
            # S-pair skip (product criterion) is only sound over ZZ when the
            # lead coefficients are coprime as well.
            if not (coprime_monos and math.gcd(a, b) == 1):
                heapq.heappush(queue, (key(lcm), S_PAIR, counter, i, new_index))
                counter += 1
            # A G-pair is subsumed by one of its parents when one lead
            # coefficient divides the other.
            if not (b % a == 0 or a % b == 0):
                heapq.heappush(queue, (key(lcm), G_PAIR, counter, i, new_index))
                counter += 1

    for idx in range(len(G)):
        push_pairs(idx)
    while queue:
        _, kind, _, i, j = heapq.heappop(queue)
        budget.pair()
        pair_poly = s_pair_z(G[i], G[j]) if kind == S_PAIR else g_pair_z(G[i], G[j])
        _, r = _reduce(pair_poly, view.polys, budget=budget)
        if not r.is_zero:
            G.append(_sign_normalized(r))
            view.insert(G[-1])
            push_pairs(len(G) - 1)
    return _canonicalize_z(G, ring_, key)


def _canonicalize_z(G, ring_, key):
    """Minimize and strongly tail-reduce a complete basis over ZZ."""
    G = [_sign_normalized(g) for g in G if not g.is_zero]
    for _ in range(1000):
        G.sort(key=_poly_sort_key(key))
        kept = []
        for g in G:
            lt = leading_term(g)
            if not any(_strongly_divides(leading_term(h), lt) for h in kept):
                kept.append(g)
        stable = True
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            _, r = _reduce(kept[i], others)
            r = _sign_normalized(r)
            if r != kept[i]:
                stable = False
            kept[i] = r
        G = [g for g in kept if not g.is_zero]
        if stable:
            G.sort(key=lambda g: key(leading_monomial(g)), reverse=True)
            return GroebnerBasis(ring_, tuple(G), reduced=True)
    raise ResourceLimitExceeded("basis reduction did not stabilize")


# ---------------------------------------------------------------------------
# bases modulo m, equality, completeness checks

def gb_mod_m(gens, m, limits=None, *, ring=None):
    """Reduced Groebner basis of the image ideal in (ZZ/m)[X].

    Computed over ZZ with the constant m adjoined, then mapped down; the
    image of <gens, m> is exactly the image ideal, and the strong reduced
    basis maps onto the canonical reduced basis modulo m.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    gens = list(gens)
    ring_ = _common_ring(gens, ring)
    if not isinstance(ring_.domain, IntegerDomain):
        raise DomainError("gb_mod_m expects generators over ZZ")
    base = buchberger_z(gens + [Polynomial.constant(ring_, m)], limits)
    target = ModularDomain(m)
    elements = []
    for g in base.elements:
        image = change_domain(g, target)
        if not image.is_zero:
            elements.append(image)
    return GroebnerBasis(with_domain(ring_, target), tuple(elements), reduced=True)


def gb_equal(g1, g2):
    """Equality of two reduced bases: identical canonical element lists."""
    if not (isinstance(g1, GroebnerBasis) and isinstance(g2, GroebnerBasis)):
        raise TypeError("gb_equal compares GroebnerBasis values")
    if not (g1.reduced and g2.reduced):
        raise ValueError("gb_equal needs reduced bases")
    if g1.ring != g2.ring:
        raise RingMismatch("bases live in different rings")
    return g1.elements == g2.elements


def is_groebner_basis(polys):
    """Check completeness directly: every S-pair (and G-pair over ZZ) drops to 0."""
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        return True
    ring_ = polys[0].ring
    over_z = isinstance(ring_.domain, IntegerDomain)
    if not over_z and not ring_.domain.is_field:
        raise DomainError("completeness check supports fields and ZZ")
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if over_z:
                if not normal_form(s_pair_z(polys[i], polys[j]), polys).is_zero:
                    return False
                if not normal_form(g_pair_z(polys[i], polys[j]), polys).is_zero:
                    return False
            else:
                s = s_polynomial_field(polys[i], polys[j])
                if not normal_form(s, polys).is_zero:
                    return False
    return True


def canonical_basis(polys):
    """Canonicalize a set already known to be a Groebner basis."""
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        raise ValueError("cannot infer the ring from an empty list")
    ring_ = polys[0].ring
    key = monomial_key(ring_.order)
    if isinstance(ring_.domain, IntegerDomain):
        return _canonicalize_z(polys, ring_, key)
    if ring_.domain.is_field:
        return _canonicalize_field(polys, ring_, key)
    raise DomainError("canonical_basis supports fields and ZZ")
