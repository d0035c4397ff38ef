"""Exact big-integer counts of Feynman diagrams per perturbation order.

Three independent routes to the connected count are implemented:

* a subtraction recurrence peeling vacuum bubbles off the factorial
  total (O(m^2) big-integer work, the default),
* a closed form summing signed composition-indexed coefficients against
  (total - bubble) differences (2**(m-1) terms),
* the Arques-Walsh rooted-map sum, which yields the count of *distinct*
  connected diagrams directly (2**m terms).

All arithmetic is exact; counts are plain Python integers and must never
pass through floating point.  The two exponential-cost routes refuse to
expand beyond a configurable term budget.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from .compositions import enumerate_compositions

#: Default cap on composition terms the exponential-cost methods may expand:
#: 2**(m-1) terms for the closed form, 2**m for the Arques-Walsh sum, so the
#: default admits orders up to 21 and 20 respectively.
DEFAULT_TERM_BUDGET = 1 << 20


class TermBudgetError(Exception):
    """An exponential-cost evaluation would exceed the term budget."""


class ExactnessError(Exception):
    """An exact-division guarantee failed; this signals an implementation bug."""


class MethodDisagreementError(Exception):
    """Two counting methods produced different values for the same order."""


# Factorials dominate every formula here, so they are computed once per
# session.  Readers index the current table without locking; growth builds an
# extended copy under the lock and swaps the reference, which keeps the table
# write-once for concurrent callers.
_fact_lock = threading.Lock()
_fact_table = [1, 1]


def _fact(n: int) -> int:
    global _fact_table
    table = _fact_table
    if n < len(table):
        return table[n]
    with _fact_lock:
        table = _fact_table
        if n >= len(table):
            table = list(table)
            for k in range(len(table), n + 1):
                table.append(table[-1] * k)
            _fact_table = table
        return table[n]


def _check_order(m: int) -> None:
    if m < 0:
        raise ValueError(f"perturbation order must be >= 0, got {m}")


def _check_budget(method: str, terms: int, budget: int) -> None:
    if terms > budget:
        raise TermBudgetError(
            f"{method} would expand {terms} composition terms, "
            f"exceeding the term budget of {budget}"
        )


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ExactnessError(f"{what}: {numerator} is not divisible by {denominator}")
    return quotient


def total_diagrams(m: int) -> int:
    """Total number of order-m diagrams, connected or not: (2m+1)!."""
    _check_order(m)
    return _fact(2 * m + 1)


def bubble_diagrams(m: int) -> int:
    """Number of order-m vacuum (bubble) diagrams: (2m)!."""
    _check_order(m)
    return _fact(2 * m)


def double_factorial(k: int) -> int:
    """k!! = 2*4*...*k for even k >= 0; the symmetry-group order at k = 2m."""
    if k < 0 or k % 2:
        raise ValueError(f"only even non-negative arguments arise here, got {k}")
    half = k // 2
    return (1 << half) * _fact(half)


def connected_sequence(m_max: int) -> list[int]:
    """Connected counts [order 0 .. m_max] by the bubble-subtraction recurrence.

    Order m starts from the factorial total and removes every way of
    detaching a non-empty vacuum part: binom(m, n) time-argument choices
    times (2n)! bubbles times the connected count of what remains.
    """
    _check_order(m_max)
    connected = [1]
    for m in range(1, m_max + 1):
        detachable = sum(
            math.comb(m, n) * _fact(2 * n) * connected[m - n] for n in range(1, m + 1)
        )
        connected.append(_fact(2 * m + 1) - detachable)
    return connected


def connected_recurrence(m: int) -> int:
    """Connected order-m diagram count via the recurrence (the default path)."""
    return connected_sequence(m)[m]


def coefficient(n: int, m: int) -> int:
    """Signed weight of the (total - bubble) difference at order n <= m.

    Sums over compositions (a_1, ..., a_i) of m - n the value
    (-1)**i * prod_j (2 a_j)! * m! / (a_1! ... a_i! n!), the chain of
    binomials collapsed into one multinomial.  Equals 1 when n == m.
    """
    _check_order(m)
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    if n == m:
        return 1
    fact_m = _fact(m)
    fact_n = _fact(n)
    total = 0
    for parts in enumerate_compositions(m - n):
        weight = 1
        denom = fact_n
        for a in parts:
            weight *= _fact(2 * a)
            denom *= _fact(a)
        term = weight * (fact_m // denom)
        total += -term if len(parts) & 1 else term
    return total


def connected_closed_form(m: int, *, term_budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Connected order-m diagram count from the signed coefficient expansion.

    Expands 2**(m-1) composition terms in total, so the call refuses
    orders whose expansion would exceed `term_budget`.
    """
    _check_order(m)
    if m == 0:
        return 1
    _check_budget("closed form", 1 << (m - 1), term_budget)
    return sum(
        coefficient(n, m) * (_fact(2 * n + 1) - _fact(2 * n)) for n in range(1, m + 1)
    )


def arques_walsh(m: int, *, term_budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Distinct connected order-m diagram count by the Arques-Walsh sum.

    Signed sum over the 2**m compositions of m+1 of prod_j (2 a_j)!/a_j!,
    the sign being (-1)**(parts - 1), divided by 2**(m+1).  The division
    is exact for every order; a remainder raises ExactnessError because
    it can only mean the implementation is broken.
    """
    _check_order(m)
    _check_budget("Arques-Walsh sum", 1 << m, term_budget)
    ratio = [0] * (m + 2)
    for a in range(1, m + 2):
        ratio[a] = _fact(2 * a) // _fact(a)
    total = 0
    for parts in enumerate_compositions(m + 1):
        term = 1
        for a in parts:
            term *= ratio[a]
        total += term if len(parts) & 1 else -term
    return _exact_div(total, 1 << (m + 1), "Arques-Walsh sum over 2**(m+1)")


def distinct_connected(m: int) -> int:
    """Connected order-m diagrams up to the (2m)!! relabeling symmetry.

    Exact division of the recurrence count by the symmetry-group order;
    a remainder raises ExactnessError.
    """
    _check_order(m)
    return _exact_div(
        connected_recurrence(m), double_factorial(2 * m), "connected count over (2m)!!"
    )


@dataclass(frozen=True)
class CountRow:
    """One order's worth of counts for tabular output."""

    m: int
    total: int
    bubble: int
    connected: int
    distinct: int


def count_table(
    max_order: int,
    *,
    method: str = "recurrence",
    term_budget: int = DEFAULT_TERM_BUDGET,
) -> list[CountRow]:
    """Rows (m, total, bubble, connected, distinct) for 0 <= m <= max_order.

    `method` picks the route to the connected column: "recurrence",
    "closed-form", "arques-walsh", or "all", which computes every route
    and raises MethodDisagreementError on any mismatch.
    """
    _check_order(max_order)
    by_recurrence = connected_sequence(max_order)
    rows = []
    for m in range(max_order + 1):
        dfact = double_factorial(2 * m)
        if method == "recurrence":
            connected = by_recurrence[m]
        elif method == "closed-form":
            connected = connected_closed_form(m, term_budget=term_budget)
        elif method == "arques-walsh":
            connected = arques_walsh(m, term_budget=term_budget) * dfact
        elif method == "all":
            connected = by_recurrence[m]
            closed = connected_closed_form(m, term_budget=term_budget)
            walsh = arques_walsh(m, term_budget=term_budget) * dfact
            if not connected == closed == walsh:
                raise MethodDisagreementError(
                    f"order {m}: recurrence={connected}, "
                    f"closed-form={closed}, arques-walsh*(2m)!!={walsh}"
                )
        else:
            raise ValueError(f"unknown method: {method!r}")
        distinct = _exact_div(connected, dfact, f"connected count at order {m}")
        rows.append(CountRow(m, _fact(2 * m + 1), _fact(2 * m), connected, distinct))
    return rows


@dataclass(frozen=True)
class Check:
    """A single named comparison with exact decimal rendering."""

    name: str
    params: str
    expected: str
    actual: str
    passed: bool


@dataclass
class VerificationReport:
    """Accumulates named exact-equality checks; overall passes iff all do."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, params: str, expected, actual) -> None:
        self.checks.append(
            Check(name, params, str(expected), str(actual), expected == actual)
        )

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]


def verify_convolution(m_max: int) -> VerificationReport:
    """Check (2m+1)! = sum_n binom(m,n) (2n)! * connected(m-n) for 1 <= m <= m_max.

    This is the identity the recurrence inverts, so it is evaluated here
    in the uninverted direction as an independent consistency pass.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    connected = connected_sequence(m_max)
    report = VerificationReport()
    for m in range(1, m_max + 1):
        rebuilt = sum(
            math.comb(m, n) * _fact(2 * n) * connected[m - n] for n in range(m + 1)
        )
        report.add("convolution", f"m={m}", _fact(2 * m + 1), rebuilt)
    return report


def verify_coefficient_recursion(m_max: int) -> VerificationReport:
    """Check the coefficient recursion for every pair 1 <= s <= m <= m_max.

    The direct composition evaluation of the weight at (s, m+1) must equal
    -sum_{n=s}^{m} binom(m+1, m-n+1) * (2(m-n+1))! * weight(s, n).
    Failing pairs are reported, not raised.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    report = VerificationReport()
    for m in range(1, m_max + 1):
        for s in range(1, m + 1):
            direct = coefficient(s, m + 1)
            recursed = -sum(
                math.comb(m + 1, m - n + 1)
                * _fact(2 * (m - n + 1))
                * coefficient(s, n)
                for n in range(s, m + 1)
            )
            report.add("coefficient-recursion", f"s={s} m={m}", direct, recursed)
    return report


def verify_rewrite_identities(m_max: int) -> VerificationReport:
    """Check the factorial rewrites used to bridge the two counting formulas.

    For 1 <= n <= m_max: total(n) = (n!/2) * bubble(n+1)/(n+1)!  and
    bubble(n) = bubble(1) * bubble(n) / 2, both with exact division.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    report = VerificationReport()
    for n in range(1, m_max + 1):
        numerator = _fact(n) * bubble_diagrams(n + 1)
        denominator = 2 * _fact(n + 1)
        quotient, remainder = divmod(numerator, denominator)
        report.add(
            "total-rewrite",
            f"n={n}",
            total_diagrams(n),
            quotient if remainder == 0 else f"{numerator}/{denominator}",
        )
        halved, remainder = divmod(bubble_diagrams(1) * bubble_diagrams(n), 2)
        report.add(
            "bubble-rewrite",
            f"n={n}",
            bubble_diagrams(n),
            halved if remainder == 0 else "non-integer",
        )
    return report


def verify_three_path(
    m_max: int, *, term_budget: int = DEFAULT_TERM_BUDGET
) -> VerificationReport:
    """Check recurrence = closed form = (2m)!! * Arques-Walsh for 1 <= m <= m_max."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    connected = connected_sequence(m_max)
    report = VerificationReport()
    for m in range(1, m_max + 1):
        report.add(
            "closed-form-agreement",
            f"m={m}",
            connected[m],
            connected_closed_form(m, term_budget=term_budget),
        )
        report.add(
            "arques-walsh-agreement",
            f"m={m}",
            connected[m],
            arques_walsh(m, term_budget=term_budget) * double_factorial(2 * m),
        )
    return report


def verify_divisibility(m_max: int) -> VerificationReport:
    """Check that (2m)!! divides the connected count exactly for 1 <= m <= m_max."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    connected = connected_sequence(m_max)
    report = VerificationReport()
    for m in range(1, m_max + 1):
        remainder = connected[m] % double_factorial(2 * m)
        report.add("divisibility", f"m={m}", 0, remainder)
    return report
