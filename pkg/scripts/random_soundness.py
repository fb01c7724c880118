#!/usr/bin/env python3
"""Randomized soundness experiment for the prefix-equality checker.

Builds random ideals over ZZ, runs the certificate check on random
prefixes against an oracle made from the full generating set, and verifies
that every accepted prefix really contains all generators.  The acceptance
suite runs the same experiment with a fixed seed; this script lets you
crank the instance count or try other seeds.

Usage: python scripts/random_soundness.py [instances] [seed]
"""

import random
import sys
import time

from modgrob import IdealOracle, Polynomial, ZZ, main_lemma_check, normal_form
from modgrob.polyring import DegRevLex, ring


def random_poly(rng, ring_, max_terms=3, max_degree=4, max_coeff=9):
    n = ring_.arity
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree)
        mono = [0] * n
        for _ in range(degree):
            mono[rng.randrange(n)] += 1
        coeff = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c])
        terms.append((coeff, tuple(mono)))
    return Polynomial.from_terms(ring_, terms)


def run(instances, seed):
    rng = random.Random(seed)
    started = time.time()
    done = accepted = failures = 0
    while done < instances:
        n = rng.randint(1, 3)
        ring_ = ring(("z", "y", "x")[3 - n:], DegRevLex(), ZZ)
        gens = [random_poly(rng, ring_) for _ in range(rng.randint(2, 3))]
        if all(g.is_zero for g in gens):
            continue
        done += 1
        prefix = gens[:rng.randint(1, len(gens))]
        certificate = main_lemma_check(IdealOracle(gens), prefix)
        if certificate.accepted:
            accepted += 1
            if not all(normal_form(g, certificate.basis).is_zero for g in gens):
                failures += 1
                print(f"SOUNDNESS FAILURE: gens={[str(g) for g in gens]} "
                      f"prefix={len(prefix)}")
        if done % 50 == 0:
            print(f"... {done}/{instances} ({time.time() - started:.0f}s)")
    print(f"{done} instances in {time.time() - started:.1f}s: "
          f"{accepted} accepted, {failures} soundness failures")
    return 1 if failures else 0


if __name__ == "__main__":
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 20260808
    sys.exit(run(count, seed))
