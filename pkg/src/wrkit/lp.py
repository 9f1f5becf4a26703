"""Linear-programming layer: the local relaxation, its exact solution, and
the dual certificate with its tightness structure.

The primal program puts a probability q(C) on every configuration class
and maximises the expected centre-occupancy estimate subject to the
balance constraint that centre and neighbour estimates agree in
expectation (which they must in any d-regular graph):

    max  sum q(C) alpha_v(C)
    s.t. sum q(C)                          = 1
         sum q(C) (alpha_v(C) - alpha_u(C)) = 0
         q >= 0

Two independent exact solvers are provided: the generic rational simplex
and direct enumeration of supports of size <= 2 (any basic solution of a
two-row program).  The dual certificate (lambda_p, lambda_c) proves the
optimum equals the complete-neighbourhood value; feasibility of every
dual constraint is checked both in alpha form and through the rearranged
polynomial inequality

    (p0' + lam*p12') / (2*p0 - p12)  <=  d(1+lam)^d / ((1+lam)^d - 1),

and the set of tight constraints must be exactly the classes with
all-equal lists and no dichromatic colouring.  Complementary slackness
then pins the unique optimum to the complete neighbourhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import simplex
from .configurations import (
    Configuration,
    _iter_valid_colourings,
    _list_options,
    alpha_u,
    alpha_v,
    complete_neighbourhood_config,
    enumerate_configs,
    local_partition_functions,
)
from .errors import DomainError, UsageError, VerificationError
from .numerics import format_rational
from .occupancy import alpha_K


@dataclass(frozen=True)
class LPInstance:
    """The relaxation for one (d, activity) pair, variables in canonical order."""

    d: int
    activity: Fraction
    configs: tuple[Configuration, ...]
    objective: tuple[Fraction, ...]  # alpha_v per configuration
    balance: tuple[Fraction, ...]  # alpha_v - alpha_u per configuration


@dataclass(frozen=True)
class LPSolution:
    status: str
    value: Fraction | None
    support: tuple[tuple[Configuration, Fraction], ...]


@dataclass(frozen=True)
class DualCertificate:
    """Dual-feasible multipliers proving the optimum.

    lambda_p prices the normalisation row and equals the conjectured
    optimum; lambda_c prices the balance row and is fixed by making the
    all-empty-lists constraint tight.  Its two closed forms,
        1 - (alpha_K / 2 lam) (1 + 2 lam)
    and
        (alpha_K / 2 lam) ((1+lam)^d - 1) / (1+lam)^d,
    must agree exactly.
    """

    lambda_p: Fraction
    lambda_c: Fraction
    d: int
    activity: Fraction


def build_primal(d: int, lam: Fraction) -> LPInstance:
    """One variable per configuration class, coefficients evaluated at lam."""
    if lam <= 0:
        raise DomainError(f"activity must be strictly positive, got {lam}")
    lam = Fraction(lam)
    configs = enumerate_configs(d)
    objective = tuple(alpha_v(c, lam) for c in configs)
    balance = tuple(av - alpha_u(c, lam) for av, c in zip(objective, configs))
    return LPInstance(d, lam, configs, objective, balance)


def simplex_solve(lp: LPInstance) -> LPSolution:
    """Exact optimum of the relaxation via the generic rational simplex."""
    n = len(lp.configs)
    ones = [Fraction(1)] * n
    result = simplex.solve(lp.objective, [ones, lp.balance], [Fraction(1), Fraction(0)])
    if result.status != simplex.OPTIMAL:
        return LPSolution(result.status, None, ())
    support = tuple(
        (c, x) for c, x in zip(lp.configs, result.solution) if x != 0
    )
    return LPSolution(simplex.OPTIMAL, result.value, support)


def vertex_enumeration_solve(lp: LPInstance) -> LPSolution:
    """Independent solver: enumerate all supports of size 1 and 2.

    With two equality rows every basic solution has at most two nonzero
    variables: a singleton is feasible iff its balance coefficient is
    zero, and a pair is feasible iff its balance coefficients have
    opposite signs (the convex weights then solve the balance row).
    """
    best_value: Fraction | None = None
    best: tuple[tuple[Configuration, Fraction], ...] = ()

    for c, av, bal in zip(lp.configs, lp.objective, lp.balance):
        if bal == 0 and (best_value is None or av > best_value):
            best_value = av
            best = ((c, Fraction(1)),)

    positive = [
        (i, bal) for i, bal in enumerate(lp.balance) if bal > 0
    ]
    negative = [
        (i, bal) for i, bal in enumerate(lp.balance) if bal < 0
    ]
    objective = lp.objective
    for i, bi in positive:
        oi = objective[i]
        for j, bj in negative:
            # weights solving  w*bi + (1-w)*bj = 0  with 0 < w < 1
            w = -bj / (bi - bj)
            value = w * oi + (1 - w) * objective[j]
            if best_value is None or value > best_value:
                best_value = value
                best = ((lp.configs[i], w), (lp.configs[j], 1 - w))

    if best_value is None:
        return LPSolution(simplex.INFEASIBLE, None, ())
    return LPSolution(simplex.OPTIMAL, best_value, best)


def dual_certificate(d: int, lam: Fraction) -> DualCertificate:
    """The certified dual point; both closed forms of lambda_c must agree."""
    if d < 1:
        raise UsageError(f"degree must be >= 1, got {d}")
    if lam <= 0:
        raise DomainError(f"activity must be strictly positive, got {lam}")
    lam = Fraction(lam)
    a_k = alpha_K(d, lam)
    grow = (1 + lam) ** d
    form_a = 1 - a_k / (2 * lam) * (1 + 2 * lam)
    form_b = a_k / (2 * lam) * (grow - 1) / grow
    if form_a != form_b:
        raise VerificationError(
            f"closed forms of lambda_c disagree: {form_a} vs {form_b}"
        )
    return DualCertificate(lambda_p=a_k, lambda_c=form_a, d=d, activity=lam)


def dual_slack(cert: DualCertificate, config: Configuration) -> Fraction:
    """Slack of one dual constraint:
    lambda_p + lambda_c*(alpha_v - alpha_u) - alpha_v."""
    av = alpha_v(config, cert.activity)
    au = alpha_u(config, cert.activity)
    return cert.lambda_p + cert.lambda_c * (av - au) - av


@dataclass(frozen=True)
class ConfigRow:
    """Per-configuration report row (the CSV unit)."""

    config: Configuration
    key_text: str
    a1: int
    a2: int
    alpha_v: Fraction
    alpha_u: Fraction
    slack: Fraction
    tight: bool


@dataclass(frozen=True)
class FeasibilityReport:
    d: int
    activity: Fraction
    rows: tuple[ConfigRow, ...]
    violations: tuple[Configuration, ...]
    tight_set: tuple[Configuration, ...]


def verify_dual_feasibility(
    cert: DualCertificate, d: int, lam: Fraction
) -> FeasibilityReport:
    """Check every dual constraint exactly, two ways.

    The alpha-form slack is recomputed through the rearranged polynomial
    inequality (valid once some list is non-empty; the all-empty class is
    tight by construction of lambda_c) and the two must agree in sign and
    in zero set.  Violations are returned as data, never raised.
    """
    if cert.d != d or cert.activity != lam:
        raise UsageError("certificate does not match the requested (d, activity)")
    lam = Fraction(lam)
    grow = (1 + lam) ** d
    rearranged_bound = d * grow / (grow - 1)

    rows = []
    violations = []
    tight = []
    for config in enumerate_configs(d):
        stats = local_partition_functions(config)
        slack = dual_slack(cert, config)

        if stats.a1 == 0 and stats.a2 == 0:
            if slack != 0:
                raise VerificationError(
                    "empty-list constraint not tight; certificate is wrong"
                )
        else:
            denom = 2 * stats.p0.eval(lam) - stats.p12.eval(lam)
            if denom <= 0:
                raise VerificationError("2*p0 - p12 must be positive here")
            lhs = (
                stats.p0.derivative().eval(lam)
                + lam * stats.p12.derivative().eval(lam)
            ) / denom
            slack2 = rearranged_bound - lhs
            if (slack > 0) != (slack2 > 0) or (slack == 0) != (slack2 == 0):
                raise VerificationError(
                    f"slack routes disagree on {config.key_text()}: "
                    f"{slack} vs {slack2}"
                )

        row = ConfigRow(
            config=config,
            key_text=config.key_text(),
            a1=stats.a1,
            a2=stats.a2,
            alpha_v=alpha_v(config, lam),
            alpha_u=alpha_u(config, lam),
            slack=slack,
            tight=(slack == 0),
        )
        rows.append(row)
        if slack < 0:
            violations.append(config)
        elif slack == 0:
            tight.append(config)

    return FeasibilityReport(
        d=d,
        activity=lam,
        rows=tuple(rows),
        violations=tuple(violations),
        tight_set=tuple(tight),
    )


def config_report_csv(report: FeasibilityReport) -> str:
    """CSV rendering: one row per configuration class."""
    lines = ["key,a1,a2,alpha_v,alpha_u,slack,tight"]
    for row in report.rows:
        lines.append(
            ",".join(
                (
                    f'"{row.key_text}"',
                    str(row.a1),
                    str(row.a2),
                    format_rational(row.alpha_v),
                    format_rational(row.alpha_u),
                    format_rational(row.slack),
                    "1" if row.tight else "0",
                )
            )
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ClaimCheck:
    holds: bool
    tight: bool
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ClaimsReport:
    claim_p12: ClaimCheck
    claim_p0: ClaimCheck


def verify_claims(config: Configuration, d: int, lam: Fraction) -> ClaimsReport:
    """The two summand inequalities behind the dual constraint.

    claim_p12:  lam * p12' / (2*p0 - p12) <= d*lam*(1+lam)^(d-1) / ((1+lam)^d - 1)
    claim_p0:   p0' / (2*p0 - p12)        <= d*(1+lam)^(d-1) / ((1+lam)^d - 1)

    Both are tight exactly on the all-equal-lists, no-dichromatic classes.
    The all-empty class is excluded (its denominator vanishes).
    """
    if config.d != d:
        raise UsageError("configuration size does not match d")
    if lam <= 0:
        raise DomainError(f"activity must be strictly positive, got {lam}")
    lam = Fraction(lam)
    stats = local_partition_functions(config)
    if stats.a1 == 0 and stats.a2 == 0:
        raise DomainError("all-empty lists: 2*p0 - p12 vanishes identically")
    denom = 2 * stats.p0.eval(lam) - stats.p12.eval(lam)
    grow_d1 = (1 + lam) ** (d - 1)
    bound = d * grow_d1 / (grow_d1 * (1 + lam) - 1)

    lhs12 = lam * stats.p12.derivative().eval(lam) / denom
    rhs12 = lam * bound
    lhs0 = stats.p0.derivative().eval(lam) / denom
    rhs0 = bound
    return ClaimsReport(
        claim_p12=ClaimCheck(lhs12 <= rhs12, lhs12 == rhs12, lhs12, rhs12),
        claim_p0=ClaimCheck(lhs0 <= rhs0, lhs0 == rhs0, lhs0, rhs0),
    )


def conditional_expectation_check(
    config: Configuration, colour: int, lam: Fraction
) -> tuple[Fraction, Fraction, bool]:
    """Expected count of one colour, conditioned on it appearing at all.

    The left side is computed by full enumeration of the neighbourhood
    colourings; the right side is the complete-neighbourhood value
    lam*d*(1+lam)^(d-1) / ((1+lam)^d - 1), which must dominate.
    """
    if colour not in (1, 2):
        raise UsageError(f"colour must be 1 or 2, got {colour}")
    if lam <= 0:
        raise DomainError(f"activity must be strictly positive, got {lam}")
    if not any(mask & colour for mask in config.lists):
        raise DomainError(f"colour {colour} is not available in any list")
    lam = Fraction(lam)
    stats = local_partition_functions(config)

    # weight and colour-count accumulation over colourings using the colour
    options = [_list_options(mask) for mask in config.lists]
    expectation_sum = Fraction(0)
    for colouring in _iter_valid_colourings(config.graph.adj, options):
        count = sum(1 for c in colouring if c == colour)
        if count:
            coloured = config.d - colouring.count(0)
            expectation_sum += count * lam**coloured
    other = stats.p2 if colour == 1 else stats.p1
    weight_with_colour = stats.p0.eval(lam) - other.eval(lam)

    d = config.d
    lhs = expectation_sum / weight_with_colour
    grow = (1 + lam) ** d
    rhs = lam * d * (1 + lam) ** (d - 1) / (grow - 1)
    return lhs, rhs, lhs <= rhs


def monotone_lhs_check(d: int, lam: Fraction) -> bool:
    """Strict growth of a(1+lam)^(a-1) / ((1+lam)^a - 1) for a = 1..d."""
    if d < 1:
        raise UsageError(f"degree must be >= 1, got {d}")
    if lam <= 0:
        raise DomainError(f"activity must be strictly positive, got {lam}")
    lam = Fraction(lam)

    def term(a: int) -> Fraction:
        grow = (1 + lam) ** a
        return a * grow / (1 + lam) / (grow - 1)

    return all(term(a) < term(a + 1) for a in range(1, d))


@dataclass(frozen=True)
class UniquenessReport:
    d: int
    activity: Fraction
    tight_set: tuple[Configuration, ...]
    empty_list_classes: tuple[Configuration, ...]
    single_colour_classes: tuple[Configuration, ...]
    complete_class: Configuration
    optimum: Fraction
    simplex_support: tuple[Configuration, ...]
    enumeration_support: tuple[Configuration, ...]


def uniqueness_check(d: int, lam: Fraction) -> UniquenessReport:
    """Reproduce the complementary-slackness uniqueness argument.

    Tight dual constraints must be exactly the all-equal-lists classes
    without dichromatic colourings; all of them except the complete
    neighbourhood have alpha_u strictly below alpha_v, so the balance row
    forces any optimal distribution onto the complete neighbourhood.
    Both solvers must land there too.
    """
    lam = Fraction(lam)
    cert = dual_certificate(d, lam)
    report = verify_dual_feasibility(cert, d, lam)
    if report.violations:
        raise VerificationError("dual certificate is infeasible; no uniqueness")

    complete_key = complete_neighbourhood_config(d).key()
    empty_classes = []
    single_classes = []
    complete_class = None
    for config in report.tight_set:
        stats = local_partition_functions(config)
        if not (stats.lists_all_equal and not stats.has_dichromatic):
            raise VerificationError(
                f"tight class {config.key_text()} outside the predicted cases"
            )
        mask = config.lists[0]
        if mask == 0:
            empty_classes.append(config)
        elif mask in (1, 2):
            single_classes.append(config)
        else:
            if config.key() != complete_key:
                raise VerificationError(
                    "full-list tight class is not the complete neighbourhood"
                )
            complete_class = config
        if config.key() != complete_key:
            if not alpha_u(config, lam) < alpha_v(config, lam):
                raise VerificationError(
                    f"expected alpha_u < alpha_v on {config.key_text()}"
                )
    if complete_class is None:
        raise VerificationError("complete neighbourhood missing from tight set")

    lp = build_primal(d, lam)
    sol_simplex = simplex_solve(lp)
    sol_enum = vertex_enumeration_solve(lp)
    expected = alpha_K(d, lam)
    for name, sol in (("simplex", sol_simplex), ("enumeration", sol_enum)):
        if sol.status != simplex.OPTIMAL or sol.value != expected:
            raise VerificationError(f"{name} solver did not reach the optimum")
        support_keys = [c.key() for c, _ in sol.support]
        if support_keys != [complete_key]:
            raise VerificationError(
                f"{name} solver support is not the complete neighbourhood"
            )

    return UniquenessReport(
        d=d,
        activity=lam,
        tight_set=report.tight_set,
        empty_list_classes=tuple(empty_classes),
        single_colour_classes=tuple(single_classes),
        complete_class=complete_class,
        optimum=expected,
        simplex_support=tuple(c for c, _ in sol_simplex.support),
        enumeration_support=tuple(c for c, _ in sol_enum.support),
    )
