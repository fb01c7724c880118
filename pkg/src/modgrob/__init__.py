"""Groebner bases over ZZ, QQ and ZZ/m, torsion exponents of polynomial
quotients, prefix-equality certificates for streamed ideals, and E. Arnold's
modular verification conditions."""

from .arnold import (
    ArnoldReport,
    arnold_conditions,
    homogenize_ideal,
    is_lucky_prime,
)
from .errors import (
    DomainError,
    ModGrobError,
    NonMember,
    NotCoprime,
    OracleFailure,
    ParseError,
    ResourceLimitExceeded,
    RingMismatch,
    StreamExhausted,
    ZeroPolynomial,
)
from .formatting import format_basis, format_polynomial
from .groebner import (
    GroebnerBasis,
    Limits,
    buchberger_field,
    buchberger_z,
    canonical_basis,
    divide_with_cofactors,
    g_pair_z,
    gb_equal,
    gb_mod_m,
    ideal_member,
    is_groebner_basis,
    normal_form,
    s_pair_z,
    s_polynomial_field,
)
from .intarith import crt_coefficients, ext_gcd, factorize, is_prime, lcm_many
from .lemma import (
    Certificate,
    GeneratorStream,
    IdealOracle,
    main_lemma_check,
    solve_problem_p,
)
from .parser import ProblemFile, parse_polynomial, parse_problem
from .polyring import (
    QQ,
    ZZ,
    Block,
    DegRevLex,
    IntegerDomain,
    Lex,
    ModularDomain,
    Polynomial,
    RationalDomain,
    RingDescriptor,
    change_domain,
    dehomogenize,
    homogenize,
    is_homogeneous,
    leading_coefficient,
    leading_monomial,
    leading_term,
    monic,
    monomial_cmp,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    ring,
)
from .torsion import (
    TorsionReport,
    minimal_multiplier,
    saturation_contraction,
    torsion_exponent,
)

__all__ = [name for name in dir() if not name.startswith("_")]
