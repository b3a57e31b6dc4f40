"""Exact arithmetic on strongly regular parameter sets.

Everything here works from the tuple ``(v, k, lambda, mu)`` alone: the
spectrum, the necessary feasibility conditions, a family-shape
classification, and evaluation of the eigenvalue-ratio inequalities that
separate pseudo-random strongly regular graphs from the three classical
families.  Irrational quantities are carried as :class:`Surd` and every
``satisfied`` flag is decided by an equivalent integer inequality, never by
floating point.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, log
from typing import Iterator, NamedTuple, Union

import mpmath

from .errors import ComplementDegenerate, InvalidParameters, NonIntegralMultiplicity, ThresholdUndefined
from .surd import Surd, is_square


Exact = Union[int, Fraction, Surd]

MAX_SCAN = 10_000


class SrgParams(NamedTuple):
    v: int
    k: int
    lam: int
    mu: int

    def validate(self) -> "SrgParams":
        """Raise :class:`InvalidParameters` unless the tuple is a valid parameter set."""
        problems = range_problems(self)
        if not problems and not self.counting_identity():
            problems.append("k(k-1-lambda) != mu(v-k-1)")
        if problems:
            raise InvalidParameters(f"{tuple(self)}: " + "; ".join(problems))
        return self

    def counting_identity(self) -> bool:
        v, k, lam, mu = self
        return k * (k - 1 - lam) == mu * (v - k - 1)

    @property
    def primitive(self) -> bool:
        return 1 <= self.mu <= self.k - 1

    @property
    def connected(self) -> bool:
        return self.mu >= 1

    @property
    def discriminant(self) -> int:
        v, k, lam, mu = self
        return (lam - mu) ** 2 + 4 * (k - mu)

    def is_conference_form(self) -> bool:
        v, k, lam, mu = self
        if (v - 1) % 4:
            return False
        t = (v - 1) // 4
        return (k, lam, mu) == (2 * t, t - 1, t)


def range_problems(p: SrgParams) -> list[str]:
    v, k, lam, mu = p
    out = []
    if not 0 < k < v - 1:
        out.append("need 0 < k < v-1 (complete and empty graphs excluded)")
    if not 0 <= lam <= k - 1:
        out.append("need 0 <= lambda <= k-1")
    if not 0 <= mu <= k:
        out.append("need 0 <= mu <= k")
    return out


@dataclass(frozen=True)
class Spectrum:
    k: int
    r: Surd
    s: Surd
    f: int
    g: int
    conference: bool = False

    @property
    def Lambda(self) -> Surd:
        """Largest absolute non-principal eigenvalue."""
        return max(self.r, -self.s)

    @property
    def v(self) -> int:
        return 1 + self.f + self.g

    def eigenvalues(self) -> list[float]:
        """All eigenvalues as floats, non-increasing."""
        return [float(self.k)] + [float(self.r)] * self.f + [float(self.s)] * self.g


def spectrum_from_params(p: SrgParams) -> Spectrum:
    """Exact eigenvalues and multiplicities.

    Raises :class:`NonIntegralMultiplicity` when the multiplicities are not
    non-negative integers, which rules the parameter set out.
    """
    p = SrgParams(*p).validate()
    v, k, lam, mu = p
    disc = p.discriminant
    root = Surd.sqrt(disc)
    r = (Surd(lam - mu) + root) / 2
    s = (Surd(lam - mu) - root) / 2
    if is_square(disc):
        num = -k - (v - 1) * s
        f = num / (r - s)
        if not f.is_integer or f < 0 or v - 1 - f < 0:
            raise NonIntegralMultiplicity(f"{tuple(p)}: multiplicity f = {f} is not a non-negative integer")
        f = int(f)
        return Spectrum(k, r, s, f, v - 1 - f, conference=False)
    if not p.is_conference_form():
        raise NonIntegralMultiplicity(f"{tuple(p)}: irrational eigenvalues but not of conference form")
    half = (v - 1) // 2
    return Spectrum(k, r, s, half, half, conference=True)


# -- feasibility ----------------------------------------------------------


@dataclass
class FeasibilityReport:
    params: SrgParams
    checks: dict[str, bool | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, ok in self.checks.items() if ok is False]


def complement_params(p: SrgParams) -> SrgParams:
    v, k, lam, mu = p
    kc = v - k - 1
    if kc <= 0 or kc >= v - 1:
        raise ComplementDegenerate(f"complement of {tuple(p)} is complete or empty")
    return SrgParams(v, kc, v - 2 * k + mu - 2, v - 2 * k + lam)


def _complement_ok(p: SrgParams) -> bool:
    v, k, lam, mu = p
    c = SrgParams(v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)
    return not range_problems(c) and c.counting_identity()


def check_feasibility(p: SrgParams) -> FeasibilityReport:
    """Evaluate the necessary conditions; never raises on bad input."""
    p = SrgParams(*p)
    rep = FeasibilityReport(p)
    probs = range_problems(p) if p.v >= 3 else ["need v >= 3"]
    rep.checks["ranges"] = not probs
    rep.notes.extend(probs)
    if probs:
        for name in ("counting_identity", "integral_multiplicities", "seidel_f", "seidel_g", "complement_valid"):
            rep.checks[name] = None
        return rep
    rep.checks["counting_identity"] = p.counting_identity()
    if not rep.checks["counting_identity"]:
        for name in ("integral_multiplicities", "seidel_f", "seidel_g"):
            rep.checks[name] = None
        rep.checks["complement_valid"] = _complement_ok(p)
        return rep
    try:
        spec = spectrum_from_params(p)
    except NonIntegralMultiplicity as exc:
        rep.checks["integral_multiplicities"] = False
        rep.notes.append(str(exc))
        spec = None
    else:
        rep.checks["integral_multiplicities"] = True
    if spec is not None and p.primitive:
        rep.checks["seidel_f"] = 2 * p.v <= spec.f * (spec.f + 3)
        rep.checks["seidel_g"] = 2 * p.v <= spec.g * (spec.g + 3)
    else:
        rep.checks["seidel_f"] = rep.checks["seidel_g"] = None
    rep.checks["complement_valid"] = _complement_ok(p)
    return rep


# -- classification ---------------------------------------------------------


@dataclass(frozen=True)
class CompleteMultipartite:
    n: int  # number of parts
    m: int  # part size
    name = "CompleteMultipartite"


@dataclass(frozen=True)
class DisjointCliques:
    copies: int
    size: int
    name = "DisjointCliques"


@dataclass(frozen=True)
class Conference:
    t: int
    name = "Conference"


@dataclass(frozen=True)
class LatinSquareType:
    m: int
    n: int
    name = "LatinSquareType"


@dataclass(frozen=True)
class SteinerType:
    m: int
    n: int
    name = "SteinerType"


@dataclass(frozen=True)
class ExceptionalType:
    name = "ExceptionalType"


@dataclass(frozen=True)
class ParamClass:
    tag: object
    primitive: bool

    @property
    def name(self) -> str:
        return self.tag.name

    @property
    def pseudo_random_candidate(self) -> bool:
        """True for the tags whose graphs must have a large eigenvalue ratio."""
        return isinstance(self.tag, (ExceptionalType, Conference))

    def __str__(self):
        fields = getattr(self.tag, "__dataclass_fields__", {})
        args = ",".join(f"{f}={getattr(self.tag, f)}" for f in fields)
        return f"{self.name}({args})" if args else self.name


def classify_params(p: SrgParams, spec: Spectrum | None = None) -> ParamClass:
    """Tag a feasible parameter set by family shape, first match wins."""
    p = SrgParams(*p)
    v, k, lam, mu = p
    spec = spec or spectrum_from_params(p)
    prim = p.primitive
    if mu == 0:
        return ParamClass(DisjointCliques(v // (k + 1), k + 1), prim)
    if mu == k:
        m = int(-spec.s)
        return ParamClass(CompleteMultipartite(v // m, m), prim)
    if p.is_conference_form() and not is_square(p.discriminant):
        return ParamClass(Conference((v - 1) // 4), prim)
    if spec.s.is_integer and spec.r.is_integer:
        m, r = int(-spec.s), int(spec.r)
        n = r + m
        if m >= 2 and n >= 2 and v == n * n and k == m * (n - 1):
            return ParamClass(LatinSquareType(m, n), prim)
        if m >= 2:
            # r = (n-1)/(m-1) - m - 1
            n = (r + m + 1) * (m - 1) + 1
            if v * m * (m - 1) == n * (n - 1) and k * (m - 1) == m * (n - m):
                return ParamClass(SteinerType(m, n), prim)
    return ParamClass(ExceptionalType(), prim)


# -- inequality suite -------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    name: str
    statement: str
    lhs: object
    rhs: object
    applicable: bool
    satisfied: bool | None

    @property
    def status(self) -> str:
        if not self.applicable:
            return "na"
        return "pass" if self.satisfied else "fail"


@dataclass
class BoundReport:
    params: SrgParams
    entries: list[BoundEntry]

    def __getitem__(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and not e.satisfied]

    def statuses(self) -> dict[str, str]:
        return {e.name: e.status for e in self.entries}


BOUND_NAMES = (
    "trace_square",
    "counting_identity",
    "eigen_product",
    "eigen_sum",
    "integral_or_conference",
    "seidel_f",
    "seidel_g",
    "gap_root",
    "lambda_mu_spread",
    "negative_ratio",
    "neumaier_claw",
    "positive_ratio",
    "pseudo_random_ratio",
)


def _root(x, n: int, dps: int = 40):
    with mpmath.workdps(dps):
        return mpmath.root(mpmath.mpf(x), n)


def _na(name: str, statement: str) -> BoundEntry:
    return BoundEntry(name, statement, None, None, False, None)


def bound_suite(p: SrgParams, spec: Spectrum | None = None, cls: ParamClass | None = None) -> BoundReport:
    p = SrgParams(*p)
    v, k, lam, mu = p
    spec = spec or spectrum_from_params(p)
    cls = cls or classify_params(p, spec)
    r, s, f, g = spec.r, spec.s, spec.f, spec.g
    Lam = spec.Lambda
    e: list[BoundEntry] = []

    lhs = k * k + f * r * r + g * s * s
    e.append(BoundEntry("trace_square", "k^2 + f r^2 + g s^2 = k v", lhs, k * v, True, lhs == k * v))
    e.append(BoundEntry("counting_identity", "k(k-1-lambda) = mu(v-k-1)", k * (k - 1 - lam), mu * (v - k - 1), True,
                        p.counting_identity()))
    e.append(BoundEntry("eigen_product", "r s = mu - k", r * s, mu - k, True, r * s == mu - k))
    e.append(BoundEntry("eigen_sum", "r + s = lambda - mu", r + s, lam - mu, True, r + s == lam - mu))
    integral = r.is_integer and s.is_integer
    e.append(BoundEntry("integral_or_conference", "r, s integral unless (4t+1, 2t, t-1, t)",
                        integral, p.is_conference_form(), True, integral or p.is_conference_form()))

    prim = p.primitive
    for name, mult in (("seidel_f", f), ("seidel_g", g)):
        stmt = f"v <= {name[-1]}({name[-1]}+3)/2"
        if prim:
            rhs = Fraction(mult * (mult + 3), 2)
            e.append(BoundEntry(name, stmt, v, rhs, True, v <= rhs))
        else:
            e.append(_na(name, stmt))

    if prim:
        # k/Lambda > sqrt(k/sqrt(v))  <=>  Lambda^4 < v k^2
        e.append(BoundEntry("gap_root", "k/Lambda > sqrt(k/sqrt(v))", k / Lam,
                            mpmath.sqrt(k / _root(v, 2)), True, Lam ** 4 < v * k * k))
        # |lambda - mu| < v^(3/4)  <=>  (lambda-mu)^4 < v^3
        e.append(BoundEntry("lambda_mu_spread", "|lambda - mu| < v^(3/4)", abs(lam - mu),
                            _root(v ** 3, 4), True, (lam - mu) ** 4 < v ** 3))
        # k/|s| > v^(1/6)/2  <=>  (2k)^6 > v |s|^6
        e.append(BoundEntry("negative_ratio", "k/|s| > v^(1/6)/2", k / abs(s), _root(v, 6) / 2, True,
                            (2 * k) ** 6 > v * abs(s) ** 6))
    else:
        e.append(_na("gap_root", "k/Lambda > sqrt(k/sqrt(v))"))
        e.append(_na("lambda_mu_spread", "|lambda - mu| < v^(3/4)"))
        e.append(_na("negative_ratio", "k/|s| > v^(1/6)/2"))

    exceptional = isinstance(cls.tag, ExceptionalType)
    if exceptional and s.is_integer:
        rhs = s * (s + 1) * (mu + 1) / 2 - 1
        e.append(BoundEntry("neumaier_claw", "r <= s(s+1)(mu+1)/2 - 1", r, rhs, True, r <= rhs))
    else:
        e.append(_na("neumaier_claw", "r <= s(s+1)(mu+1)/2 - 1"))

    if cls.pseudo_random_candidate:
        # k/r > v^(1/10)  <=>  k^10 > v r^10
        e.append(BoundEntry("positive_ratio", "k/r > v^(1/10)", k / r, _root(v, 10), True,
                            k ** 10 > v * r ** 10))
        # k/Lambda > v^(1/10)/2  <=>  (2k)^10 > v Lambda^10
        e.append(BoundEntry("pseudo_random_ratio", "k/Lambda > v^(1/10)/2", k / Lam, _root(v, 10) / 2, True,
                            (2 * k) ** 10 > v * Lam ** 10))
    else:
        e.append(_na("positive_ratio", "k/r > v^(1/10)"))
        e.append(_na("pseudo_random_ratio", "k/Lambda > v^(1/10)/2"))
    return BoundReport(p, e)


# -- hamiltonicity threshold ------------------------------------------------


def ks_threshold(v: float) -> float:
    """``1000 ln v lnlnln v / (lnln v)^2``; natural logarithms, ``v >= 16``.

    A k-regular graph on ``v`` (large) vertices with ``k/Lambda`` above this
    value is Hamiltonian.
    """
    if v < 16:
        raise ThresholdUndefined(f"v = {v}: the triple logarithm is not positive below 16")
    l1 = log(v)
    l2 = log(l1)
    return 1000 * l1 * log(l2) / (l2 * l2)


# -- enumeration --------------------------------------------------------------


class ScanRecord(NamedTuple):
    params: SrgParams
    spectrum: Spectrum
    cls: ParamClass
    bounds: BoundReport


def _candidates(v: int) -> Iterator[SrgParams]:
    """Tuples on ``v`` vertices satisfying the ranges and counting identity, sorted."""
    for k in range(1, v - 1):
        rest = v - k - 1
        step = k // gcd(k, rest)  # mu * rest must be divisible by k
        found = []
        for mu in range(0, k + 1, step):
            lam = k - 1 - mu * rest // k
            if 0 <= lam <= k - 1:
                found.append(SrgParams(v, k, lam, mu))
        found.sort()
        yield from found


def _quick_multiplicities(p: SrgParams) -> bool:
    # integer-only pre-filter before building Surd objects
    v, k, lam, mu = p
    disc = p.discriminant
    rt = isqrt(disc)
    if rt * rt != disc:
        return p.is_conference_form()
    s2 = lam - mu - rt  # 2s
    num = 2 * (-k) - (v - 1) * s2  # 2(-k - (v-1)s)
    return num % (2 * rt) == 0 and 0 <= num // (2 * rt) <= v - 1


def _scan_one(v: int) -> list[ScanRecord]:
    out = []
    for p in _candidates(v):
        if not _quick_multiplicities(p):
            continue
        if not check_feasibility(p).feasible:
            continue
        spec = spectrum_from_params(p)
        cls = classify_params(p, spec)
        out.append(ScanRecord(p, spec, cls, bound_suite(p, spec, cls)))
    return out


def enumerate_feasible(v_max: int, workers: int = 1) -> Iterator[ScanRecord]:
    """Every feasible tuple with ``v <= v_max`` in lexicographic order."""
    if v_max > MAX_SCAN:
        raise InvalidParameters(f"v_max must be at most {MAX_SCAN}")
    vs = range(3, v_max + 1)
    if workers <= 1:
        for v in vs:
            yield from _scan_one(v)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_scan_one, vs, chunksize=8):
            yield from batch
