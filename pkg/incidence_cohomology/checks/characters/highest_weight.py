from ...characters import h1, hw_h1
from ...errors import NoHighestWeightError, UnsplitWeightError
from ...specs.reporting import VerificationReport, log_function_call
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.5"

_MAX_LISTED = 5


@log_function_call
def check_highest_weights(p: int, bound: int) -> VerificationReport:
    """
    Compare the digit-based highest weight prediction with the recursion.

    A vanishing h^1 must be reported as having no highest weight.

    Parameters:
        p (int): Characteristic.
        bound (int): Largest d and e.

    Returns:
        VerificationReport: One summary result.
    """
    report = VerificationReport()
    mismatches = []
    checked = 0
    for d in range(bound + 1):
        for e in range(bound + 1):
            character = h1(d, e, p)
            try:
                predicted = hw_h1(d, e, p)
            except NoHighestWeightError:
                predicted = None
            except UnsplitWeightError:
                predicted = "unsplit"
            actual = None if character.is_zero() else character.highest_weight()
            checked += actual is not None
            if predicted != actual:
                mismatches.append(f"({d},{e}): predicted {predicted}, found {actual}")

    requirement = f"Highest weight of h^1(d, e) from base-{p} digits, d,e <= {bound}"
    if mismatches:
        shown = "; ".join(mismatches[:_MAX_LISTED])
        report.add(SECTION_ID, requirement, "FAIL", f"{len(mismatches)} mismatch(es): {shown}")
    else:
        report.add(SECTION_ID, requirement, "PASS", f"{checked} non-zero characters")
    return report
