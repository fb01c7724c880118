#!/usr/bin/env python3
"""Recompute the pinned corpus bases with the naive test-suite oracle.

Prints a Python dict literal mapping (ideal-tag, domain-tag) to the
formatted basis text.  The values frozen in tests/test_acceptance.py were
produced by this script; rerun it after any change to the oracle or the
output format and compare.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import oracle as O  # noqa: E402

from modgrob import (  # noqa: E402
    QQ,
    ZZ,
    DegRevLex,
    GroebnerBasis,
    Lex,
    ModularDomain,
    parse_polynomial,
)
from modgrob.formatting import format_basis  # noqa: E402
from modgrob.polyring import monomial_key, ring  # noqa: E402

CHAIN = ("3z-y", "3y-x", "3x")
CHAIN_LP9 = ("3z-y", "3y-x", "x")
PAIR_A = ("3y2-yx", "3yx-x3", "3x3")
PAIR_B = ("3y2-yx", "3yx-x3", "x3")
MIXED = ("3y2x-5yx2+2x3", "-7y3x+5y2x2", "7y6-2y3x3+yx5")


def as_basis(ring_, dict_polys):
    key = monomial_key(ring_.order)
    elems = [O.to_pkg(ring_, p) for p in dict_polys]
    elems.sort(key=lambda g: key(g.terms[0][1]), reverse=True)
    return GroebnerBasis(ring_, tuple(elems), reduced=True)


def derive(variables, order, okey, texts, domain):
    ring_z = ring(variables, order, ZZ)
    gens = [O.from_pkg(parse_polynomial(t, ring_z)) for t in texts]
    if isinstance(domain, type(ZZ)):
        basis = O.z_strong_buchberger(gens, okey)
        return format_basis(as_basis(ring_z, basis))
    if isinstance(domain, type(QQ)):
        ring_q = ring(variables, order, QQ)
        basis = O.field_buchberger(gens, okey, O.q_inv)
        return format_basis(as_basis(ring_q, basis))
    m = domain.modulus
    ring_m = ring(variables, order, domain)
    if domain.is_field:
        basis = O.field_buchberger(gens, okey, O.fp_inv_maker(m), O.fp_post_maker(m))
    else:
        basis = O.zm_basis(gens, m, okey)
    return format_basis(as_basis(ring_m, basis))


def main():
    jobs = []
    for tag, texts, variables, order, okey, domains in [
        ("chain_dp", CHAIN, ("z", "y", "x"), DegRevLex(), O.key_degrevlex,
         ["ZZ", "ZZ/9"]),
        ("chain_lp", CHAIN_LP9, ("z", "y", "x"), Lex(), O.key_lex, ["ZZ/9"]),
        ("pair_a", PAIR_A, ("y", "x"), Lex(), O.key_lex,
         ["ZZ", "ZZ/9", "ZZ/27", "ZZ/81", "QQ"]),
        ("pair_b", PAIR_B, ("y", "x"), Lex(), O.key_lex,
         ["ZZ", "ZZ/9", "ZZ/27", "ZZ/81", "QQ"]),
        ("mixed", MIXED, ("y", "x"), Lex(), O.key_lex, ["QQ", "ZZ/2", "ZZ/5"]),
    ]:
        for dtag in domains:
            if dtag == "ZZ":
                domain = ZZ
            elif dtag == "QQ":
                domain = QQ
            else:
                domain = ModularDomain(int(dtag.split("/")[1]))
            jobs.append(((tag, dtag), derive(variables, order, okey, texts, domain)))
    print("EXPECTED_BASES = {")
    for key, text in jobs:
        print(f"    {key!r}: {text!r},")
    print("}")


if __name__ == "__main__":
    main()
