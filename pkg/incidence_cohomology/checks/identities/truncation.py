from typing import Sequence

from ... import char_ring as cr
from ...padic import prime_power_base
from ...specs.reporting import VerificationReport, log_function_call
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.2"


@log_function_call
def check_truncation_duality(n: int, q_values: Sequence[int]) -> VerificationReport:
    """
    Perfect pairing of truncated symmetric powers: h^(q)_d dual = h^(q)_{n(q-1)-d}.

    Also checks h^(q)_d = h_d for d < q and h^(q)_d = 0 past n(q-1).

    Parameters:
        n (int): Number of variables.
        q_values (Sequence[int]): Prime powers to check.

    Returns:
        VerificationReport: One result per q.
    """
    report = VerificationReport()
    for q in q_values:
        top = n * (q - 1)
        failures = [
            d
            for d in range(top + 1)
            if cr.h_trunc(q, d, n=n).dual() != cr.h_trunc(q, top - d, n=n)
            or (d < q and cr.h_trunc(q, d, n=n) != cr.h(d, n=n))
        ]
        if not cr.h_trunc(q, top + 1, n=n).is_zero():
            failures.append(top + 1)
        requirement = f"Truncated symmetric powers are dual in complementary degrees, n={n}, q={q}"
        if failures:
            report.add(SECTION_ID, requirement, "FAIL", f"fails at d in {failures[:5]}")
        else:
            report.add(SECTION_ID, requirement, "PASS")
    return report


@log_function_call
def check_truncated_schur(q_values: Sequence[int]) -> VerificationReport:
    """
    Two-row truncated Schur functions that are ordinary Schur functions (n = 3).

    For 2q-2 <= a <= 3q-3 and 0 <= b < q, s^(q)_(a,b) = s_(3q-3-a+b, 3q-3-a); for
    tq <= d, e <= (t+1)q-2 this reads s^(q)_(e-1+(2-t)q, d-tq) = s_(q+d-e-2, d-tq) dual.

    Parameters:
        q_values (Sequence[int]): Prime powers to check.

    Returns:
        VerificationReport: Two results per q.
    """
    report = VerificationReport()
    for q in q_values:
        p, _ = prime_power_base(q)
        general = [
            (a, b)
            for a in range(2 * q - 2, 3 * q - 2)
            for b in range(q)
            if cr.schur2_trunc(q, a, b, n=3) != cr.schur2(3 * q - 3 - a + b, 3 * q - 3 - a, n=3)
        ]
        specialised = [
            (t, d, e)
            for t in range(1, p)
            for d in range(t * q, (t + 1) * q - 1)
            for e in range(t * q, (t + 1) * q - 1)
            if cr.schur2_trunc(q, e - 1 + (2 - t) * q, d - t * q, n=3)
            != cr.schur2(q + d - e - 2, d - t * q, n=3).dual()
        ]
        for requirement, failures in (
            (f"s^(q)_(a,b) = s_(3q-3-a+b,3q-3-a), q={q}", general),
            (f"recursion block equals a dual Schur function, q={q}", specialised),
        ):
            if failures:
                report.add(SECTION_ID, requirement, "FAIL", f"fails at {failures[:5]}")
            else:
                report.add(SECTION_ID, requirement, "PASS")
    return report
