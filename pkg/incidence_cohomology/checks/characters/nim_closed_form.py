from ... import char_ring as cr
from ...characters import h1, h1_p2_closed, h1_p2_layers
from ...specs.reporting import VerificationReport, log_function_call
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.6"


def top_layer(d: int, e: int, k: int) -> cr.Character:
    """The digit-k layer: nothing lies to the left of the top digit, so it is a bare block."""
    return cr.schur2_trunc(2**k, e - 2**k - 1 + 2 ** (k + 1), d - 2**k, n=3)


@log_function_call
def check_p2_closed_form(k_max: int) -> VerificationReport:
    """
    Compare the p = 2 Nim closed form with the recursion on 2^k <= d <= e <= 2^(k+1) - 2.

    Also checks that the top binary digit always contributes the untwisted
    two-row block ``s'_(2^k)(e - 2^k - 1 + 2^(k+1), d - 2^k)``.

    Parameters:
        k_max (int): Largest k.

    Returns:
        VerificationReport: One result per k.
    """
    report = VerificationReport()
    for k in range(1, k_max + 1):
        mismatches = []
        bad_top = []
        for d in range(2**k, 2 ** (k + 1) - 1):
            for e in range(d, 2 ** (k + 1) - 1):
                if h1_p2_closed(d, e, k) != h1(d, e, 2):
                    mismatches.append((d, e))
                if h1_p2_layers(d, e, k).get(k) != top_layer(d, e, k):
                    bad_top.append((d, e))
        requirement = f"h^1(d, e) from binary truncations, p=2, k={k}"
        if mismatches or bad_top:
            report.add(
                SECTION_ID,
                requirement,
                "FAIL",
                f"mismatches at {mismatches[:5]}; top layer wrong at {bad_top[:5]}",
            )
        else:
            report.add(SECTION_ID, requirement, "PASS")
    return report
