"""Exact fractional-ideal arithmetic in Z and quadratic orders."""

from .approximation import (
    ApproximationSpec,
    CongruenceSystem,
    approximate,
    approximate_exact,
    crt_pair,
    crt_system,
    reduce_mod,
    two_generators,
)
from .classes import (
    IdealClass,
    class_monoid,
    class_table,
    equivalent,
    ideals_of_norm,
    is_principal,
    principal_complement,
    principal_complement_by_cycle,
)
from .content import RatFunc, content, gauss_mul, gauss_product, poly_valuation, ratfunc_valuation
from .errors import (
    DedekindError,
    DomainError,
    NoComplementError,
    NotComaximalError,
    ParseError,
    SingularPrimeError,
    UnsupportedError,
    ZeroIdealError,
)
from .expr import evaluate, evaluate_element, parse
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    colon,
    ideal_add,
    ideal_conjugate,
    ideal_from_generators,
    ideal_intersect,
    ideal_inverse,
    ideal_mul,
    ideal_norm,
    ideal_pow,
    is_invertible,
    member,
    multiplier_ring,
    principal,
    unit_ideal,
)
from .lattice import hnf_reduce
from .primes import (
    INF,
    Factorization,
    PrimeIdealData,
    divides,
    element_valuation,
    factor_ideal,
    ideal_gcd,
    ideal_lcm,
    ideal_valuation,
    primes_above,
    uniformizer_at,
)
from .quadratic import Element, OrderSpec, Poly, conjugate, egcd, is_integral, norm, trace
from .singular import (
    PrimaryComponent,
    is_primary,
    primary_decomposition,
    primes_over,
    saturate,
    singular_primes,
)
from .verifier import InstanceProfile, SuiteReport, default_profile, random_ideal, run_suite

__version__ = "0.1.0"
