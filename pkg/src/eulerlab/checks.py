"""Machine verification suites over the identities this package implements.

Each suite returns a :class:`CheckResult` with one detail line per case.
Suites never stop at the first failure; they collect every mismatch,
with both sides serialized so a failure is reproducible from the report
alone.  The names are short stable tokens used by ``eulerlab verify``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from . import detformula, gfengine
from .distributions import (classic_eulerian, derangement_lhs, eulerian_st,
                            exc_slice, xi, xi_transposed)
from .mpoly import MPoly
from .parallel import pmap
from .qanalog import fubini_number, subfactorial
from .symmetry import a_part, verify_thm20


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    lines: tuple[str, ...]
    witness: str | None = None


def _result(name: str, lines: list[str], failures: list[str]) -> CheckResult:
    return CheckResult(
        name=name,
        passed=not failures,
        lines=tuple(lines),
        witness="; ".join(failures) if failures else None,
    )


def check_macmahon(max_n: int = 9) -> CheckResult:
    """Descent and excedance counts are equidistributed over S_n."""
    lines, failures = [], []
    top = min(max_n, 10)
    for n, (des, exc) in zip(
            range(1, top + 1),
            pmap(lambda n: (classic_eulerian(n, "des"),
                            classic_eulerian(n, "exc")),
                 range(1, top + 1))):
        ok = des == exc
        lines.append(f"macmahon n={n}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures.append(
                f"n={n}: des={des.dumps()} exc={exc.dumps()}")
    return _result("macmahon", lines, failures)


def check_thm20(max_n: int = 9) -> CheckResult:
    """Two-term recursion of the palindromic decomposition parts."""
    lines, failures = [], []
    for n in range(2, min(max_n, 9) + 1):
        report = verify_thm20(n)
        lines.append(f"thm20 n={n}: {'PASS' if report.passed else 'FAIL'}")
        if not report.passed:
            failures.append(f"n={n}: {report.witness}")
    return _result("thm20", lines, failures)


def check_thm01(max_n: int = 7) -> CheckResult:
    """Derangement refinement expands over the sparse-descent slices.

    Compares the derangement-restricted (exc, des, maj-exc) polynomial
    against sum_i xi(n, i) * t**i * (1 + t)**(n - 2i).  The slice filter
    is applied to the permutation itself (weights on its inverse); the
    transposed filter is computed independently and compared as well,
    and the detail lines say which readings held.
    """
    lines, failures = [], []
    vars3 = ("t", "p", "q")
    t = MPoly.variable("t", vars3)
    for n in range(2, min(max_n, 8) + 1):
        lhs = derangement_lhs(n)
        rhs = MPoly.zero(vars3)
        transposed_agree = True
        for i in range(1, n // 2 + 1):
            term = xi(n, i).with_vars(vars3)
            if xi_transposed(n, i).with_vars(vars3) != term:
                transposed_agree = False
            rhs = rhs + term * t ** i * (1 + t) ** (n - 2 * i)
        ok = lhs == rhs
        reading = ("literal and transposed slice filters agree"
                   if transposed_agree else "slice filters DISAGREE")
        lines.append(
            f"thm01 n={n}: {'PASS' if ok else 'FAIL'} ({reading})")
        if not ok:
            failures.append(f"n={n}: lhs={lhs.dumps()} rhs={rhs.dumps()}")
        if not transposed_agree:
            failures.append(f"n={n}: transposed filter differs")
    return _result("thm01", lines, failures)


def check_eq1(max_n: int = 6, max_r: int = 6) -> CheckResult:
    """Closed-form lattice count against direct coefficient extraction.

    The closed form uses the corrected index roles; the detail lines
    record the two readings it replaces.  The verbatim swapped-window
    form is off by one on the k = 0 boundary (n=3, k=0, r=1 gives 3
    against the direct 4), and the unswapped literal reading fails
    outright (n=3, k=1, r=2 gives 1 against the direct 13); both are
    reproducible via f_nkr_closed(..., literal=True) and the window
    notes in its docstring.
    """
    lines, failures = [], []
    top = min(max_n, 9)
    for n in range(1, top + 1):
        bad = []
        for k in range(0, n):
            for r in range(0, max_r + 1):
                direct = gfengine.f_nkr(n, k, r)
                closed = gfengine.f_nkr_closed(n, k, r)
                if direct != closed:
                    bad.append(f"(n={n},k={k},r={r}): "
                               f"direct={direct} closed={closed}")
        lines.append(f"eq1 n={n}: {'PASS' if not bad else 'FAIL'}")
        failures.extend(bad)
    literal_demo = gfengine.f_nkr_closed(3, 1, 2, literal=True)
    lines.append(
        f"eq1 note: literal index reading gives {literal_demo} at "
        f"(n=3,k=1,r=2), direct gives {gfengine.f_nkr(3, 1, 2)}; "
        f"corrected roles are used")
    return _result("eq1", lines, failures)


def check_gf(max_order: int = 7, max_r: int = 7) -> CheckResult:
    """Series regrouping, its palindromic companion, and the telescope."""
    report = gfengine.verify_foata(max_order, max_r)
    lines = [
        f"gf joint coefficients n<={max_order} r<={max_r}: "
        f"{'PASS' if report.joint_ok else 'FAIL'}",
        f"gf palindromic-part coefficients: "
        f"{'PASS' if report.a_ok else 'FAIL'}",
        f"gf telescope identity: {'PASS' if report.telescope_ok else 'FAIL'}",
    ]
    return _result("gf", lines, list(report.failures))


def check_thT1(max_n: int = 7) -> CheckResult:
    """Determinant formula: Cramer determinant vs recurrence, then
    reconstruction of the palindromic parts from the determinant alone."""
    lines, failures = [], []
    for n in range(0, min(max_n, 6) + 1):
        det = detformula.det_Mnr(n)
        rec = detformula.recurrence_f(n)
        ok = det == rec
        lines.append(f"thT1 det=recurrence n={n}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures.append(f"n={n}: det={det.dumps()} rec={rec.dumps()}")
    for n in range(1, min(max_n, 7) + 1):
        got = detformula.reconstruct_a(n)
        want = a_part(n)
        ok = got == want
        lines.append(
            f"thT1 reconstruct a_{n}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures.append(f"n={n}: got={got.dumps()} want={want.dumps()}")
    return _result("thT1", lines, failures)


_FUBINI_FIRST = (1, 3, 13, 75, 541)


def check_fubini(max_n: int = 7) -> CheckResult:
    """Joint polynomial at (2, 1) counts ordered set partitions."""
    lines, failures = [], []
    for n in range(1, min(max_n, 9) + 1):
        got = eulerian_st(n).evaluate({"s": 2, "t": 1})
        want = fubini_number(n)
        ok = got == want
        if n <= len(_FUBINI_FIRST):
            ok = ok and got == _FUBINI_FIRST[n - 1]
        lines.append(f"fubini n={n}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures.append(f"n={n}: joint gives {got}, partitions give {want}")
    return _result("fubini", lines, failures)


def check_li_binomial(max_n: int = 9) -> CheckResult:
    """Linear descent coefficient of each excedance slice is binomial."""
    lines, failures = [], []
    for n in range(2, min(max_n, 10) + 1):
        bad = []
        for k in range(1, n):
            got = exc_slice(n, k).coeff_of("s", 1).constant()
            want = comb(n, k + 1)
            if got != want:
                bad.append(f"(n={n},k={k}): got {got}, want {want}")
        lines.append(f"li-binomial n={n}: {'PASS' if not bad else 'FAIL'}")
        failures.extend(bad)
    return _result("li-binomial", lines, failures)


def check_counts(max_n: int = 7) -> CheckResult:
    """Total masses: n! for the joint polynomial, derangement counts."""
    lines, failures = [], []
    for n in range(1, min(max_n, 9) + 1):
        total = eulerian_st(n).evaluate({"s": 1, "t": 1})
        ok = total == factorial(n)
        if n >= 2:
            dtotal = derangement_lhs(n).evaluate({"t": 1, "p": 1, "q": 1})
            ok = ok and dtotal == subfactorial(n)
        lines.append(f"counts n={n}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures.append(f"n={n}: masses do not match the factorials")
    return _result("counts", lines, failures)


#: token -> (function taking max_n, description)
CHECKS = {
    "macmahon": (check_macmahon, "descent/excedance equidistribution"),
    "thm01": (check_thm01, "derangement refinement over sparse-descent slices"),
    "thm20": (check_thm20, "palindromic decomposition recursion"),
    "eq1": (check_eq1, "closed-form lattice count for the coefficients"),
    "gf": (check_gf, "series regrouping and telescope identities"),
    "thT1": (check_thT1, "determinant formula and reconstruction"),
    "fubini": (check_fubini, "ordered set partition counts at (2, 1)"),
    "li-binomial": (check_li_binomial, "linear coefficient of excedance slices"),
    "counts": (check_counts, "total masses against factorials"),
}

_DEFAULT_MAX_N = {
    "macmahon": 9, "thm01": 7, "thm20": 9, "eq1": 6, "gf": 7,
    "thT1": 7, "fubini": 7, "li-binomial": 9, "counts": 7,
}


def run_checks(names, max_n: int | None = None) -> list[CheckResult]:
    """Run the named suites; ``all`` expands to every registered suite.

    With ``max_n`` given, the same cap applies to each suite (suites
    clamp it to their own safe ranges); otherwise per-suite defaults
    chosen to finish in well under a minute are used.
    """
    if isinstance(names, str):
        names = [names]
    resolved: list[str] = []
    for name in names:
        if name == "all":
            resolved.extend(CHECKS)
        elif name in CHECKS:
            resolved.append(name)
        else:
            raise ValueError(
                f"unknown check {name!r}; expected one of "
                f"{', '.join(list(CHECKS) + ['all'])}")
    out = []
    for name in resolved:
        fn, _ = CHECKS[name]
        if name == "gf":
            cap = min(max_n, 8) if max_n is not None else 7
            out.append(fn(cap, cap))
        else:
            out.append(fn(max_n if max_n is not None else _DEFAULT_MAX_N[name]))
    return out
