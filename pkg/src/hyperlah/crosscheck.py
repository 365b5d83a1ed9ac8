"""Cross-verification suites behind the `crosscheck` CLI command.

Each suite recomputes an identity by independent routes over a finite
range and records every comparison.  A failure carries the offending
parameter tuple so the counterexample is immediately reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ehrhart, weighted_lah
from .combinat import binomial, eulerian, factorial, lah, stirling1_unsigned
from .polynomial import Polynomial

__all__ = ["SuiteResult", "run_all", "REFERENCE_TABLES"]

# Hand-transcribed reference grids for n = 5 and n = 6, used as fixed
# regression anchors: {n: {m: [W(0,n,m), ...]}}.
REFERENCE_TABLES = {
    5: {
        1: [24, 24, 24, 24, 24],
        2: [50, 70, 70, 50],
        3: [35, 50, 35],
        4: [10, 10],
        5: [1],
    },
    6: {
        1: [120, 120, 120, 120, 120, 120],
        2: [274, 404, 444, 404, 274],
        3: [225, 375, 375, 225],
        4: [85, 130, 85],
        5: [15, 15],
        6: [1],
    },
}


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def compare(self, label: str, got, expected):
        self.checks += 1
        if got != expected:
            self.failures.append(f"{label}: got {got}, expected {expected}")


def check_wlah_methods(max_n: int, enum_max_n: int) -> SuiteResult:
    """All five W routes agree; enumeration joins up to enum_max_n."""
    res = SuiteResult("wlah-methods")
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for l in range(n - m + 1):
                ref = weighted_lah.wlah(l, n, m, method="rec_b")
                methods = ["rec_a", "closed", "genfun"]
                if n <= enum_max_n:
                    methods.append("enum")
                for meth in methods:
                    res.compare(
                        f"(l={l}, n={n}, m={m}) {meth} vs rec_b",
                        weighted_lah.wlah(l, n, m, method=meth),
                        ref,
                    )
    return res


def check_wlah_structure(max_n: int) -> SuiteResult:
    """Symmetry, Stirling specialization, row sums, and support of W."""
    res = SuiteResult("wlah-structure")
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            row = [weighted_lah.wlah(l, n, m) for l in range(n - m + 1)]
            for l, value in enumerate(row):
                res.compare(
                    f"symmetry (l={l}, n={n}, m={m})", value, row[n - m - l]
                )
                res.compare(f"positivity (l={l}, n={n}, m={m})", value > 0, True)
            res.compare(f"stirling (n={n}, m={m})", row[0], stirling1_unsigned(n, m))
            res.compare(f"row sum (n={n}, m={m})", sum(row), lah(n, m))
            res.compare(
                f"support edge (l={n - m + 1}, n={n}, m={m})",
                weighted_lah.wlah(n - m + 1, n, m),
                0,
            )
    return res


def check_reference_tables() -> SuiteResult:
    """Computed tables for n = 5 and 6 match the frozen reference grids."""
    res = SuiteResult("wlah-tables")
    for n, expected in REFERENCE_TABLES.items():
        res.compare(f"table n={n}", weighted_lah.wlah_table(n), expected)
    return res


def check_ehrhart_methods(max_n: int, oracle_max_n: int) -> SuiteResult:
    """The formula routes agree; the lattice oracle joins up to oracle_max_n."""
    res = SuiteResult("ehrhart-methods")
    for n in range(2, max_n + 1):
        for k in range(1, n):
            ref = ehrhart.ehrhart_polynomial(k, n, method="wlah").poly
            for meth in ("katzman", "stirling"):
                res.compare(
                    f"(k={k}, n={n}) {meth} vs wlah",
                    ehrhart.ehrhart_polynomial(k, n, method=meth).poly,
                    ref,
                )
            if n <= oracle_max_n:
                res.compare(
                    f"(k={k}, n={n}) oracle vs wlah",
                    ehrhart.ehrhart_polynomial(k, n, method="oracle").poly,
                    ref,
                )
                for t in range(6):
                    res.compare(
                        f"(k={k}, n={n}, t={t}) eval vs count",
                        ref(t),
                        ehrhart.lattice_point_count(k, n, t),
                    )
    return res


def check_ehrhart_structure(max_n: int) -> SuiteResult:
    """Positivity, symmetry, leading coefficient, and integrality of E."""
    res = SuiteResult("ehrhart-structure")
    for n in range(2, max_n + 1):
        for k in range(1, n):
            poly = ehrhart.ehrhart_polynomial(k, n, method="wlah").poly
            res.compare(f"degree (k={k}, n={n})", poly.degree, n - 1)
            res.compare(f"constant term (k={k}, n={n})", poly.coeff(0), 1)
            for m, c in enumerate(poly.coeffs):
                res.compare(f"positive coeff (k={k}, n={n}, m={m})", c > 0, True)
                res.compare(
                    f"denominator bound (k={k}, n={n}, m={m})",
                    (c * factorial(n - 1)).denominator,
                    1,
                )
            res.compare(
                f"leading coeff (k={k}, n={n})",
                poly.coeff(n - 1) * factorial(n - 1),
                eulerian(n - 1, k - 1),
            )
            res.compare(
                f"complement symmetry (k={k}, n={n})",
                poly,
                ehrhart.ehrhart_polynomial(n - k, n, method="wlah").poly,
            )
            for t in range(11):
                res.compare(
                    f"integrality (k={k}, n={n}, t={t})", poly(t).denominator, 1
                )
    return res


def check_worpitzky(max_m: int = 6, max_t: int = 12) -> SuiteResult:
    """Eulerian-number generating polynomials reproduce the powers t^m."""
    res = SuiteResult("worpitzky")
    order = max_t
    for m in range(1, max_m + 1):
        numer = Polynomial([0] + [eulerian(m, j) for j in range(m)])
        geom = Polynomial([binomial(m + i, m) for i in range(order + 1)])
        series = (numer * geom).truncate(order)
        for t in range(order + 1):
            res.compare(f"(m={m}, t={t})", series.coeff(t), t**m)
    return res


def run_all(max_n: int = 8, oracle_max_n: int = 6, enum_max_n=None) -> list:
    """Run every suite; enumeration caps at min(max_n, 9) unless overridden."""
    if enum_max_n is None:
        enum_max_n = min(max_n, 9)
    return [
        check_wlah_methods(max_n, enum_max_n),
        check_wlah_structure(max_n),
        check_reference_tables(),
        check_ehrhart_methods(max_n, oracle_max_n),
        check_ehrhart_structure(max_n),
        check_worpitzky(),
    ]
