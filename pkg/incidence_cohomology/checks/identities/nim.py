from ... import char_ring as cr
from ...specs.reporting import VerificationReport, log_function_call
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.3"


@log_function_call
def check_nim_recursion(k_max: int) -> VerificationReport:
    """
    N_{q+m} = F^q(s_(1,1)) N_m for q = 2^k and 0 <= m < q, with N_0 = 1.

    Parameters:
        k_max (int): Largest k.

    Returns:
        VerificationReport: One result for N_0 and one per k.
    """
    report = VerificationReport()
    report.add(
        SECTION_ID,
        "N_0 is the trivial character",
        "PASS" if cr.nim(0) == cr.one(3) else "FAIL",
    )
    for k in range(k_max + 1):
        q = 2**k
        factor = cr.schur2(1, 1, n=3).frobenius(q)
        failures = [m for m in range(q) if cr.nim(q + m) != factor * cr.nim(m)]
        asymmetric = [m for m in range(2 * q) if not cr.nim(m).is_symmetric()]
        requirement = f"N_(2^{k}+m) = F^(2^{k})(s_(1,1)) N_m"
        if failures or asymmetric:
            report.add(
                SECTION_ID,
                requirement,
                "FAIL",
                f"recursion fails at m in {failures[:5]}; asymmetric N_m at {asymmetric[:5]}",
            )
        else:
            report.add(
                SECTION_ID, requirement, "PASS", f"dim N_(2q-1) = {cr.nim(2 * q - 1).dim_eval()}"
            )
    return report

