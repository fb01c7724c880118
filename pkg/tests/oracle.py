"""Naive reference implementations used to derive and pin expected values.

Everything here is deliberately simple: dict-based polynomials, pairwise
completion with no selection strategy and no pair-skipping criteria, and
lattice linear algebra for membership.  None of it shares code or data
structures with the package; agreement between the two is the point.

Polynomials are dicts {exponent-tuple: coefficient} with int or Fraction
coefficients.  Orders are key functions (bigger key = bigger monomial).
"""

import itertools
import math
from fractions import Fraction


# ---------------------------------------------------------------------------
# orders

def key_lex(e):
    return e


def key_degrevlex(e):
    return sum(e), tuple(-x for x in reversed(e))


def key_block_first_var(back_key):
    """Single front variable at position 0, then back_key on the rest."""
    def key(e):
        return e[0], back_key(e[1:])
    return key


# ---------------------------------------------------------------------------
# dict polynomial arithmetic

def o_trim(p):
    return {m: c for m, c in p.items() if c != 0}


def o_add(p, q):
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + c
        if out[m] == 0:
            del out[m]
    return out


def o_scale(p, c, shift=None):
    if c == 0:
        return {}
    out = {}
    for m, cf in p.items():
        mono = m if shift is None else tuple(a + b for a, b in zip(m, shift))
        out[mono] = cf * c
    return out


def o_sub(p, q):
    return o_add(p, o_scale(q, -1))


def o_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            out[mono] = out.get(mono, 0) + c1 * c2
    return o_trim(out)


def o_lt(p, key):
    mono = max(p, key=key)
    return p[mono], mono


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# reduction and completion over a field (QQ or ZZ/p via Fraction/int hybrid)

def field_reduce(p, gens, key, inv, post=None):
    """Full normal form; reducers tried in list order, largest term first.

    ``post`` re-normalizes coefficients after every subtraction (identity
    over QQ, reduction into [0, p) over a prime field).
    """
    post = post or (lambda p_: p_)
    work = post(o_trim(dict(p)))
    remainder = {}
    while work:
        mono = max(work, key=key)
        c = work[mono]
        for g in gens:
            gc, gm = o_lt(g, key)
            if _divides(gm, mono):
                factor = inv(c, gc)
                work = post(o_trim(o_sub(work, o_scale(g, factor, _quotient(mono, gm)))))
                break
        else:
            remainder[mono] = c
            del work[mono]
    return remainder


def q_inv(c, gc):
    return Fraction(c) / Fraction(gc)


def fp_inv_maker(p):
    def inv(c, gc):
        return c * pow(gc, -1, p) % p
    return inv


def fp_post_maker(p):
    def post(poly):
        return o_trim({m: c % p for m, c in poly.items()})
    return post


def field_buchberger(gens, key, inv, post=None):
    """All pairs, no criteria, no strategy; then full autoreduction.

    ``post`` normalizes coefficients after every arithmetic step (identity
    over QQ, reduction mod p over a prime field).
    """
    post = post or (lambda p_: p_)
    basis = [post(dict(g)) for g in gens]
    basis = [g for g in basis if o_trim(g)]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop(0)
        ci, mi = o_lt(basis[i], key)
        cj, mj = o_lt(basis[j], key)
        lcm = _lcm(mi, mj)
        s = o_sub(o_scale(basis[i], inv(1, ci), _quotient(lcm, mi)),
                  o_scale(basis[j], inv(1, cj), _quotient(lcm, mj)))
        r = post(o_trim(field_reduce(post(o_trim(s)), basis, key, inv, post)))
        if r:
            basis.append(r)
            pairs.extend((len(basis) - 1, t) for t in range(len(basis) - 1))
    return field_autoreduce(basis, key, inv, post)


def field_autoreduce(basis, key, inv, post=None):
    post = post or (lambda p_: p_)
    basis = [post(o_trim(g)) for g in basis]
    basis = [g for g in basis if g]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda g: key(o_lt(g, key)[1]))
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = post(o_trim(field_reduce(basis[i], others, key, inv, post))) if others else basis[i]
            if r:
                c, _ = o_lt(r, key)
                r = post(o_trim(o_scale(r, inv(1, c))))
            if r != basis[i]:
                if r:
                    basis[i] = r
                else:
                    basis.pop(i)
                changed = True
                break
    basis.sort(key=lambda g: key(o_lt(g, key)[1]), reverse=True)
    return basis


# ---------------------------------------------------------------------------
# strong reduction and completion over ZZ

def z_strong_reduce(p, gens, key):
    """Coefficient-aware normal form with residues canonical in [0, lc)."""
    work = dict(p)
    remainder = {}
    while work:
        mono = max(work, key=key)
        c = work[mono]
        done = True
        for g in gens:
            gc, gm = o_lt(g, key)
            if _divides(gm, mono):
                r = c % abs(gc)
                if r != c:
                    q = (c - r) // gc
                    work = o_sub(work, o_scale(g, q, _quotient(mono, gm)))
                    done = False
                    break
        if done:
            remainder[mono] = c
            del work[mono]
    return remainder


def _z_sign(p, key):
    if not p:
        return p
    c, _ = o_lt(p, key)
    return o_scale(p, -1) if c < 0 else p


def z_strong_buchberger(gens, key):
    """Every S-pair and every G-pair, no skipping, then autoreduction."""
    basis = [_z_sign(o_trim(dict(g)), key) for g in gens]
    basis = [g for g in basis if g]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop(0)
        ci, mi = o_lt(basis[i], key)
        cj, mj = o_lt(basis[j], key)
        lcm = _lcm(mi, mj)
        coeff_lcm = abs(ci * cj) // math.gcd(ci, cj)
        candidates = [o_sub(o_scale(basis[i], coeff_lcm // ci, _quotient(lcm, mi)),
                            o_scale(basis[j], coeff_lcm // cj, _quotient(lcm, mj)))]
        g, u, v = _ext_gcd(ci, cj)
        candidates.append(o_add(o_scale(basis[i], u, _quotient(lcm, mi)),
                                o_scale(basis[j], v, _quotient(lcm, mj))))
        for cand in candidates:
            r = _z_sign(o_trim(z_strong_reduce(o_trim(cand), basis, key)), key)
            if r:
                basis.append(r)
                pairs.extend((len(basis) - 1, t) for t in range(len(basis) - 1))
    return z_autoreduce(basis, key)


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def z_autoreduce(basis, key):
    basis = [_z_sign(g, key) for g in basis if g]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda g: key(o_lt(g, key)[1]))
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = _z_sign(o_trim(z_strong_reduce(basis[i], others, key)), key) if others else basis[i]
            if r != basis[i]:
                if r:
                    basis[i] = r
                else:
                    basis.pop(i)
                changed = True
                break
    basis.sort(key=lambda g: key(o_lt(g, key)[1]), reverse=True)
    return basis


def zm_basis(gens, m, key):
    """Reduced basis mod m through the integer route, coefficients in [0, m)."""
    nonzero = [g for g in gens if o_trim(g)]
    if not nonzero:
        return []
    nvars = len(next(iter(nonzero[0])))
    constant = {tuple([0] * nvars): m}
    over_z = z_strong_buchberger(list(gens) + [constant], key)
    out = []
    for g in over_z:
        img = o_trim({mono: c % m for mono, c in g.items()})
        if img:
            out.append(img)
    return out


# ---------------------------------------------------------------------------
# lattice membership (bounded-degree integer linear algebra)

def monomials_up_to(nvars, degree):
    out = []
    for total in range(degree + 1):
        for exps in itertools.combinations_with_replacement(range(nvars), total):
            mono = [0] * nvars
            for v in exps:
                mono[v] += 1
            out.append(tuple(mono))
    return sorted(out)


class Lattice:
    """Integer column lattice with membership queries.

    Columns are gcd-eliminated row by row once; each query then reduces
    the target against the triangular pivots.
    """

    def __init__(self, columns, dimension):
        cols = [list(c) for c in columns if any(c)]
        self.n = dimension
        self.pivots = []
        for row in range(self.n):
            live = [c for c in cols if c[row] != 0]
            while len(live) > 1:
                live.sort(key=lambda c: abs(c[row]))
                a = live[0]
                for c in live[1:]:
                    q = c[row] // a[row]
                    if q:
                        for k in range(self.n):
                            c[k] -= q * a[k]
                live = [c for c in cols if c[row] != 0]
            if live:
                pivot = live[0]
                cols.remove(pivot)
                self.pivots.append((row, pivot))

    def member(self, target):
        t = list(target)
        for row, pivot in self.pivots:
            if t[row] % pivot[row] == 0:
                q = t[row] // pivot[row]
                if q:
                    for k in range(self.n):
                        t[k] -= q * pivot[k]
        return all(v == 0 for v in t)


def lattice_member(columns, target):
    """One-shot membership: is target an integer combination of columns?"""
    return Lattice(columns, len(target)).member(target)


def _shift_columns(gens, monos, nvars, degree):
    index = {m: i for i, m in enumerate(monos)}
    columns = []
    for g in gens:
        if not g:
            continue
        gdeg = max(sum(m) for m in g)
        for shift in monomials_up_to(nvars, max(degree - gdeg, 0)):
            column = [0] * len(monos)
            usable = True
            for mono, c in g.items():
                moved = tuple(a + b for a, b in zip(mono, shift))
                if moved not in index:
                    usable = False
                    break
                column[index[moved]] = c
            if usable:
                columns.append(column)
    return columns


def z_member_bounded(gens, f, degree):
    """f in <gens> over ZZ, restricted to working degree <= degree."""
    if not o_trim(f):
        return True
    nvars = len(next(iter(f)))
    if max(sum(m) for m in f) > degree:
        return False
    monos = monomials_up_to(nvars, degree)
    index = {m: i for i, m in enumerate(monos)}
    target = [0] * len(monos)
    for mono, c in f.items():
        target[index[mono]] = c
    return lattice_member(_shift_columns(gens, monos, nvars, degree), target)


def zm_lattice(gens, m, nvars, degree):
    """Reusable lattice for membership in the image of <gens> mod m,
    working degree <= degree: generator shifts plus the columns m * x^a."""
    monos = monomials_up_to(nvars, degree)
    columns = _shift_columns(gens, monos, nvars, degree)
    for i in range(len(monos)):
        column = [0] * len(monos)
        column[i] = m
        columns.append(column)
    index = {mo: i for i, mo in enumerate(monos)}
    lattice = Lattice(columns, len(monos))

    def member(f):
        ff = o_trim({mono: c % m for mono, c in f.items()})
        if not ff:
            return True
        if max(sum(mo) for mo in ff) > degree:
            return False
        target = [0] * len(monos)
        for mono, c in ff.items():
            target[index[mono]] = c
        return lattice.member(target)

    return member


def zm_member_bounded(gens, m, f, degree):
    """f in the image of <gens> in (ZZ/m)[X], working degree <= degree."""
    ff = o_trim({mono: c % m for mono, c in f.items()})
    if not ff:
        return True
    nvars = len(next(iter(ff)))
    return zm_lattice(gens, m, nvars, degree)(f)


# ---------------------------------------------------------------------------
# conversions to and from package polynomials

def from_pkg(f):
    return {mono: c for c, mono in f.terms}


def to_pkg(ring_, p):
    from modgrob.polyring import Polynomial

    return Polynomial.from_terms(ring_, [(c, mono) for mono, c in p.items()])


def key_for(ring_):
    from modgrob.polyring import Block, DegRevLex, Lex

    order = ring_.order
    if isinstance(order, Lex):
        return key_lex
    if isinstance(order, DegRevLex):
        return key_degrevlex
    if isinstance(order, Block) and order.front == (0,):
        from modgrob.polyring import Lex as _Lex

        inner = key_lex if isinstance(order.back_order, _Lex) else key_degrevlex
        return key_block_first_var(inner)
    raise ValueError(f"no oracle key for order {order!r}")
