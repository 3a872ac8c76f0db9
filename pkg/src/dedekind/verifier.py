"""Seeded random instances and property suites for the Dedekind characterizations.

Each suite draws ``cases`` random instances from an :class:`InstanceProfile`
and records, per named check, how many instances passed and the first
counterexample.  Counterexamples are written in the ideal-literal grammar the
CLI parses, so they can be replayed by hand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Callable

from .approximation import (
    ApproximationSpec,
    CongruenceSystem,
    approximate,
    approximate_exact,
    crt_pair,
    crt_system,
    two_generators,
)
from .classes import equivalent, is_principal, principal_complement
from .content import content, gauss_mul, gauss_product, poly_valuation
from .errors import DedekindError, DomainError, UnsupportedError
from .ideals import (
    FractionalIdeal,
    colon,
    ideal_from_generators,
    ideal_inverse,
    ideal_mul,
    ideal_pow,
    is_invertible,
    is_subset,
    member,
    multiplier_ring,
    principal,
    unit_ideal,
)
from .primes import (
    PrimeIdealData,
    divides,
    element_valuation,
    factor_ideal,
    has_cofactor,
    ideal_valuation,
    uniformizer_at,
)
from .quadratic import Element, OrderSpec, Poly
from .singular import is_primary, primary_decomposition, primes_over

DEFAULT_CASES = 200
DEFAULT_MAX_EXPONENT = 4
DEFAULT_MAX_HEIGHT = 10 ** 4
DEFAULT_POOL = (2, 3, 5, 7)


@dataclass(frozen=True)
class InstanceProfile:
    order: OrderSpec
    prime_pool: tuple
    seed: int = 0
    max_exponent: int = DEFAULT_MAX_EXPONENT
    max_height: int = DEFAULT_MAX_HEIGHT

    def __post_init__(self):
        if not self.prime_pool:
            raise DomainError("prime pool must be nonempty")

    @property
    def regular_primes(self) -> list[PrimeIdealData]:
        return [P for P in self.prime_pool if not P.singular]

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def default_profile(order: OrderSpec, seed: int = 0, rational_primes=DEFAULT_POOL,
                    max_exponent: int = DEFAULT_MAX_EXPONENT,
                    max_height: int = DEFAULT_MAX_HEIGHT) -> InstanceProfile:
    pool = []
    for p in rational_primes:
        pool.extend(primes_over(order, p))
    return InstanceProfile(order, tuple(pool), seed, max_exponent, max_height)


def load_profile(source) -> tuple[InstanceProfile, int]:
    """Read ``key=value`` lines (``#`` starts a comment) into a profile and case count.

    Keys: ``d`` (required), ``conductor``, ``seed``, ``cases``, ``max_exponent``,
    ``max_height`` and ``primes`` (comma-separated rational primes).
    """
    text = Path(source).read_text() if isinstance(source, Path) else str(source)
    if "\n" not in text and "=" not in text:
        text = Path(text).read_text()
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        values[key] = val
    known = {"d", "conductor", "seed", "cases", "max_exponent", "max_height", "primes"}
    unknown = set(values) - known
    if unknown:
        raise DomainError(f"unknown config keys: {', '.join(sorted(unknown))}")
    if "d" not in values:
        raise DomainError("config needs d=<int>")
    try:
        order = OrderSpec(int(values["d"]), int(values.get("conductor", 1)))
        primes = tuple(int(p) for p in values.get("primes", "2,3,5,7").split(","))
        profile = default_profile(
            order,
            seed=int(values.get("seed", 0)),
            rational_primes=primes,
            max_exponent=int(values.get("max_exponent", DEFAULT_MAX_EXPONENT)),
            max_height=int(values.get("max_height", DEFAULT_MAX_HEIGHT)),
        )
        cases = int(values.get("cases", DEFAULT_CASES))
    except ValueError as exc:
        raise DomainError(f"bad config value: {exc}") from None
    return profile, cases


# random instances

def random_element(profile: InstanceProfile, rng: random.Random, height: int | None = None,
                   denominator: int = 1, coprime_to_conductor: bool = False) -> Element:
    """A nonzero element with coordinates in ``[-height, height]`` over a random
    denominator up to ``denominator``."""
    order = profile.order
    h = profile.max_height if height is None else height
    while True:
        x = rng.randint(-h, h)
        y = 0 if order.is_rational else rng.randint(-h, h)
        if not (x or y):
            continue
        g = order.element(x, y)
        if coprime_to_conductor and gcd(int(g.norm()), order.conductor) != 1:
            continue
        den = rng.randint(1, denominator)
        if coprime_to_conductor and gcd(den, order.conductor) != 1:
            continue
        return g / den


def random_ideal(profile: InstanceProfile, rng: random.Random | None = None, *,
                 integral: bool = False, regular_only: bool = False,
                 height: int | None = None, exponents: dict | None = None) -> FractionalIdeal:
    """A random product of pool prime powers times a random principal ideal.

    With ``exponents`` given the prime-power product is returned as is, with no
    principal factor.  Negative exponents are only drawn at invertible primes.
    """
    order = profile.order
    if exponents is not None:
        out = unit_ideal(order)
        for P, e in exponents.items():
            out = ideal_mul(out, ideal_pow(P.as_ideal(), e))
        return out
    rng = profile.rng() if rng is None else rng
    pool = profile.regular_primes if regular_only else list(profile.prime_pool)
    k = profile.max_exponent
    out = unit_ideal(order)
    for P in pool:
        if rng.random() < 0.5:
            continue
        lo = 0 if (integral or P.singular) else -k
        e = rng.randint(lo, k)
        if e:
            out = ideal_mul(out, ideal_pow(P.as_ideal(), e))
    g = random_element(profile, rng, height, coprime_to_conductor=regular_only)
    return ideal_mul(out, principal(g))


def random_poly(profile: InstanceProfile, rng: random.Random, max_degree: int = 5,
                height: int = 30, denominator: int = 6) -> Poly:
    order = profile.order
    while True:
        deg = rng.randint(0, max_degree)
        coeffs = []
        for _ in range(deg + 1):
            if rng.random() < 0.2:
                coeffs.append(order.zero)
            else:
                coeffs.append(random_element(profile, rng, height, denominator))
        f = Poly(coeffs, order)
        if f:
            return f


def _random_member(I: FractionalIdeal, rng: random.Random, height: int = 20) -> Element:
    gens = I.generators()
    while True:
        x = I.order.zero
        for g in gens:
            x = x + g * rng.randint(-height, height)
        if x:
            return x


# reports

@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteReport:
    suite: str
    order: OrderSpec
    cases: int
    checks: dict = field(default_factory=dict)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks.values() if not c.ok]

    def record(self, name: str, fn: Callable[[], bool], witness: Callable[[], str]):
        c = self.checks.setdefault(name, CheckResult(name))
        try:
            good = bool(fn())
            note = None
        except DedekindError as exc:
            good, note = False, f"{type(exc).__name__}: {exc}"
        if good:
            c.passed += 1
            return
        c.failed += 1
        if c.witness is None:
            w = witness()
            c.witness = f"{w} ({note})" if note else w

    def lines(self) -> list[str]:
        head = f"suite {self.suite} on {self.order.describe()}: {self.cases} cases, "
        if self.skipped:
            return [head + f"skipped ({self.skipped})"]
        out = [head + ("PASS" if self.ok else "FAIL")]
        for c in self.checks.values():
            status = "ok  " if c.ok else "FAIL"
            out.append(f"  {status} {c.name}: {c.passed} passed, {c.failed} failed")
            if c.witness:
                out.append(f"       witness: {c.witness}")
        return out

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "ok": self.ok,
            "skipped": self.skipped,
            "checks": [
                {"name": c.name, "passed": c.passed, "failed": c.failed, "witness": c.witness}
                for c in self.checks.values()
            ],
        }


def _lit(**items) -> str:
    return "; ".join(f"{k}={v}" for k, v in items.items())


# suites

def _suite_valuation_laws(profile, rng, rep: SuiteReport):
    regs = profile.regular_primes
    if not regs:
        rep.skipped = "no invertible primes in the pool"
        return
    for _ in range(rep.cases):
        I, J = random_ideal(profile, rng), random_ideal(profile, rng)
        P = rng.choice(regs)
        w = lambda: _lit(I=I, J=J, P=P.as_ideal())
        vI, vJ = ideal_valuation(I, P), ideal_valuation(J, P)
        rep.record("v(IJ) = v(I) + v(J)", lambda: ideal_valuation(ideal_mul(I, J), P) == vI + vJ, w)
        rep.record("v(I+J) = min", lambda: ideal_valuation(I + J, P) == min(vI, vJ), w)
        rep.record("v(I&J) = max", lambda: ideal_valuation(I & J, P) == max(vI, vJ), w)
        pi = uniformizer_at(P)
        x = random_element(profile, rng, 50, 4) * pi ** rng.randint(-3, 3)
        y = random_element(profile, rng, 50, 4) * pi ** rng.randint(-3, 3)
        we = lambda: _lit(x=x, y=y, P=P.as_ideal())
        vx, vy = element_valuation(x, P), element_valuation(y, P)
        rep.record("v(xy) = v(x) + v(y)", lambda: element_valuation(x * y, P) == vx + vy, we)
        rep.record("v(x+y) >= min", lambda: element_valuation(x + y, P) >= min(vx, vy), we)
        if vx != vy:
            rep.record("v(x+y) = min when v(x) != v(y)",
                       lambda: element_valuation(x + y, P) == min(vx, vy), we)
        a = random_element(profile, rng, 50) * pi ** rng.randint(0, 3)
        n = rng.randint(0, 3)
        rep.record("a in P^n iff v(a) >= n",
                   lambda: member(a, ideal_pow(P.as_ideal(), n)) == (element_valuation(a, P) >= n),
                   lambda: _lit(a=a, n=n, P=P.as_ideal()))


def _suite_monoid_laws(profile, rng, rep):
    R = unit_ideal(profile.order)
    for _ in range(rep.cases):
        I, J, K = (random_ideal(profile, rng) for _ in range(3))
        w = lambda: _lit(I=I, J=J, K=K)
        rep.record("(IJ)K = I(JK)", lambda: (I * J) * K == I * (J * K), w)
        rep.record("IJ = JI", lambda: I * J == J * I, w)
        rep.record("IR = I", lambda: I * R == I, w)
        rep.record("(I+J)+K = I+(J+K)", lambda: (I + J) + K == I + (J + K), w)
        rep.record("I+J = J+I", lambda: I + J == J + I, w)
        rep.record("I(J+K) = IJ+IK", lambda: I * (J + K) == I * J + I * K, w)
        A = I & J
        rep.record("monotone", lambda: A * K <= I * K and A + K <= I + K and A & K <= I & K, w)
        rep.record("I I^-1 in R", lambda: ideal_mul(I, ideal_inverse(I)) <= R, w)


def _suite_invertibility(profile, rng, rep):
    R = unit_ideal(profile.order)
    for _ in range(rep.cases):
        I = random_ideal(profile, rng)
        w = lambda: _lit(I=I)
        rep.record("I I^-1 = R", lambda: is_invertible(I), w)
        rep.record("multiplier ring is R", lambda: multiplier_ring(I) == R, w)


def _suite_factorization(profile, rng, rep):
    for _ in range(rep.cases):
        I = random_ideal(profile, rng)
        w = lambda: _lit(I=I)

        def round_trip():
            F = factor_ideal(I)
            return F.product() == I and all(ideal_valuation(I, P) == e for P, e in F)
        rep.record("factor then multiply is the identity", round_trip, w)


def _suite_divisibility(profile, rng, rep):
    for _ in range(rep.cases):
        I = random_ideal(profile, rng)
        X = random_ideal(profile, rng, integral=True)
        J = ideal_mul(I, X)
        rep.record("J = IX implies I | J", lambda: divides(I, J), lambda: _lit(I=I, X=X))
        x = _random_member(I, rng)
        rep.record("to contain is to divide", lambda: has_cofactor(I, principal(x)),
                   lambda: _lit(I=I, J=principal(x)))
        K = random_ideal(profile, rng)
        if not is_subset(K, I):
            rep.record("I does not divide a non-multiple", lambda: not divides(I, K),
                       lambda: _lit(I=I, K=K))
        rep.record("(I+K)(I&K) = IK", lambda: (I + K) * (I & K) == I * K, lambda: _lit(I=I, K=K))


def _suite_cancellation(profile, rng, rep):
    for _ in range(rep.cases):
        I, J = random_ideal(profile, rng), random_ideal(profile, rng)
        rep.record("(IJ : I) = J", lambda: colon(ideal_mul(I, J), I) == J, lambda: _lit(I=I, J=J))


def _suite_distributivity(profile, rng, rep):
    for _ in range(rep.cases):
        I, J, K = (random_ideal(profile, rng) for _ in range(3))
        w = lambda: _lit(I=I, J=J, K=K)
        rep.record("I&(J+K) = I&J + I&K", lambda: I & (J + K) == (I & J) + (I & K), w)
        rep.record("I+(J&K) = (I+J)&(I+K)", lambda: I + (J & K) == (I + J) & (I + K), w)
        rep.record("I(J&K) = IJ & IK", lambda: I * (J & K) == (I * J) & (I * K), w)
        A = I & K
        rep.record("modular law", lambda: A + (J & K) == (A + J) & K, lambda: _lit(A=A, J=J, K=K))


def _suite_crt(profile, rng, rep):
    regs = profile.regular_primes
    if len(regs) < 2:
        rep.skipped = "fewer than two invertible primes in the pool"
        return
    order = profile.order
    singular = len(regs) < len(profile.prime_pool)
    k = profile.max_exponent
    for _ in range(rep.cases):
        chosen = rng.sample(regs, rng.randint(2, min(3, len(regs))))
        mods = [ideal_pow(P.as_ideal(), rng.randint(1, k)) for P in chosen]
        res = [random_element(profile, rng, 100) for _ in chosen]
        I, J = mods[0], mods[1]
        x = crt_pair(I, J, res[0], res[1])
        rep.record("crt_pair congruences", lambda: member(x - res[0], I) and member(x - res[1], J),
                   lambda: _lit(I=I, J=J, a=res[0], b=res[1]))
        rep.record("IJ = I&J for comaximal I, J", lambda: I * J == I & J, lambda: _lit(I=I, J=J))
        sys = CongruenceSystem.of(order, list(zip(mods, res)))
        rep.record("crt_system congruences", lambda: sys.satisfied_by(crt_system(sys)),
                   lambda: "; ".join(f"x = {r} mod {M}" for M, r in sys.targets))
        # targets stay integral at singular primes, where no valuation exists
        cons = [(P, random_element(profile, rng, 30, 6, coprime_to_conductor=singular),
                 rng.randint(-2, k)) for P in chosen]
        spec = ApproximationSpec.of(order, cons)
        rep.record("approximation postcondition", lambda: spec.satisfied_by(approximate(spec)),
                   lambda: "; ".join(f"v_{P.label()}(x - {t}) >= {n}" for P, t, n in cons))
        exps = [rng.randint(-k, k) for _ in chosen]

        def exact_ok():
            y = approximate_exact(chosen, exps)
            if any(element_valuation(y, P) != e for P, e in zip(chosen, exps)):
                return False
            bare = ApproximationSpec.of(order, [(P, y, 0) for P in chosen])
            return bare.satisfied_by(y)
        rep.record("exact approximation postcondition", exact_ok,
                   lambda: "; ".join(f"v_{P.label()}(x) = {e}" for P, e in zip(chosen, exps)))
        T = random_ideal(profile, rng, integral=True, regular_only=True, height=200)

        def regenerates():
            a, b = two_generators(T)
            return ideal_from_generators([a, b]) == T
        rep.record("two generators regenerate I", regenerates, lambda: _lit(I=T))


def _suite_gauss(profile, rng, rep):
    regs = profile.regular_primes
    for _ in range(rep.cases):
        f, g = random_poly(profile, rng), random_poly(profile, rng)
        fg = f * g
        w = lambda: _lit(f=list(map(str, f.coeffs)), g=list(map(str, g.coeffs)))
        rep.record("content(fg) = content(f)content(g)",
                   lambda: content(fg) == ideal_mul(content(f), content(g)), w)
        if regs:
            P = rng.choice(regs)
            rep.record("v(fg) = v(f) + v(g)",
                       lambda: poly_valuation(fg, P) == poly_valuation(f, P) + poly_valuation(g, P), w)
        I, J = random_ideal(profile, rng), random_ideal(profile, rng)
        rep.record("basis-polynomial product generates IJ",
                   lambda: content(gauss_product(I.generators(), J.generators())) == I * J,
                   lambda: _lit(I=I, J=J))
        if profile.order.is_maximal:
            rep.record("gauss_mul = ideal_mul", lambda: gauss_mul(I, J) == I * J,
                       lambda: _lit(I=I, J=J))


def _suite_primary(profile, rng, rep):
    order = profile.order
    for _ in range(rep.cases):
        I = random_ideal(profile, rng, integral=True, height=60)
        if I.is_unit():
            continue
        w = lambda: _lit(I=I)
        comps = primary_decomposition(I)
        prod = unit_ideal(order)
        for c in comps:
            prod = prod * c.component
        rep.record("components multiply to I", lambda: prod == I, w)
        rep.record("components are primary at their prime",
                   lambda: all(is_primary(c.component) == c.prime for c in comps), w)
        rep.record("decomposition is a fixed point",
                   lambda: [c.component for c in primary_decomposition(prod)]
                   == [c.component for c in comps], w)
        if order.is_maximal:
            rep.record("components are prime powers",
                       lambda: all(c.component == ideal_pow(c.prime.as_ideal(), ideal_valuation(I, c.prime))
                                   for c in comps), w)
        J = random_ideal(profile, rng, integral=True, height=60)
        if J.is_unit():
            continue
        shared = {c.prime: c.component for c in primary_decomposition(J)}
        for c in comps:
            if c.prime in shared:
                Q = ideal_mul(c.component, shared[c.prime])
                rep.record("product of P-primary ideals is P-primary",
                           lambda: is_primary(Q) == c.prime, lambda: _lit(A=c.component, B=shared[c.prime]))
                break


def _suite_class_monoid(profile, rng, rep):
    order = profile.order
    if not order.is_rational and not order.is_imaginary:
        raise UnsupportedError("class monoid suites need Z or an imaginary quadratic order")
    for _ in range(rep.cases):
        I = random_ideal(profile, rng, integral=True, height=8)
        J = random_ideal(profile, rng, integral=True, height=8)
        g = random_element(profile, rng, 8)
        gI = ideal_mul(I, principal(g))
        w = lambda: _lit(I=I, J=J)
        rep.record("reflexive", lambda: equivalent(I, I), w)
        rep.record("symmetric", lambda: equivalent(I, J) == equivalent(J, I), w)
        rep.record("I ~ gI", lambda: equivalent(I, gI), lambda: _lit(I=I, g=g))
        rep.record("class product well defined", lambda: equivalent(I * J, gI * J), w)

        def complement():
            C = principal_complement(I)
            return is_principal(ideal_mul(I, C)) is not None
        rep.record("principal complement", complement, lambda: _lit(I=I))


SUITES = {
    "valuation-laws": _suite_valuation_laws,
    "monoid-laws": _suite_monoid_laws,
    "invertibility": _suite_invertibility,
    "factorization": _suite_factorization,
    "divisibility": _suite_divisibility,
    "cancellation": _suite_cancellation,
    "distributivity": _suite_distributivity,
    "crt": _suite_crt,
    "gauss": _suite_gauss,
    "primary": _suite_primary,
    "class-monoid": _suite_class_monoid,
}


def run_suite(name: str, profile: InstanceProfile, cases: int = DEFAULT_CASES) -> SuiteReport:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = SuiteReport(name, profile.order, cases)
    SUITES[name](profile, profile.rng(), rep)
    return rep
