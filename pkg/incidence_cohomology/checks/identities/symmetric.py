from ... import char_ring as cr
from ...characters import h1
from ...specs.reporting import VerificationReport, log_function_call
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.1"


def _summary(report: VerificationReport, requirement: str, failures: list) -> None:
    if failures:
        report.add(SECTION_ID, requirement, "FAIL", f"fails at {failures[:5]}")
    else:
        report.add(SECTION_ID, requirement, "PASS")


@log_function_call
def check_koszul_identity(n: int, p: int) -> VerificationReport:
    """
    h'_r = sum_i (-1)^i F^p(e_i) h_{r - ip} for 0 <= r <= n(p-1).

    Parameters:
        n (int): Number of variables.
        p (int): Characteristic.

    Returns:
        VerificationReport: One summary result.
    """
    report = VerificationReport()
    failures = []
    for r in range(n * (p - 1) + 1):
        rhs = cr.zero(n)
        for i in range(r // p + 1):
            term = cr.e(i, n=n).frobenius(p) * cr.h(r - i * p, n=n)
            rhs = rhs + term if i % 2 == 0 else rhs - term
        if cr.h_trunc(p, r, n=n) != rhs:
            failures.append(r)
    _summary(report, f"Koszul identity for truncated h, n={n}, p={p}", failures)
    return report


@log_function_call
def check_schur_duals(bound: int) -> VerificationReport:
    """
    s_(a,b)^dual = s_(a,a-b) and h_a^dual = s_(a,a) in A_3 for 0 <= b <= a <= bound.

    Parameters:
        bound (int): Largest a.

    Returns:
        VerificationReport: One result per identity.
    """
    report = VerificationReport()
    schur_failures = [
        (a, b)
        for a in range(bound + 1)
        for b in range(a + 1)
        if cr.schur2(a, b, n=3).dual() != cr.schur2(a, a - b, n=3)
    ]
    h_failures = [a for a in range(bound + 1) if cr.h(a, n=3).dual() != cr.schur2(a, a, n=3)]
    _summary(report, f"s_(a,b) dual = s_(a,a-b), a <= {bound}", schur_failures)
    _summary(report, f"h_a dual = s_(a,a), a <= {bound}", h_failures)
    return report


@log_function_call
def check_dual_weight_bound(p: int, bound: int) -> VerificationReport:
    """
    Dualizing an S_3-invariant character cannot raise the first coordinate of its highest weight.

    Checked on every non-zero h^1(d, e) with d, e <= bound.

    Parameters:
        p (int): Characteristic.
        bound (int): Largest d and e.

    Returns:
        VerificationReport: One summary result.
    """
    report = VerificationReport()
    failures = []
    for d in range(bound + 1):
        for e in range(bound + 1):
            character = h1(d, e, p)
            if character.is_zero():
                continue
            top = character.highest_weight().exps[0]
            if character.dual().highest_weight().exps[0] > top:
                failures.append((d, e))
    _summary(report, f"hw of the dual of h^1 stays below the same multiple of w_1, p={p}", failures)
    return report
