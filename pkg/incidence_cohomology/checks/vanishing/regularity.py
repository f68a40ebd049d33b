from ...oracle import regularity_scan
from ...specs.reporting import VerificationReport, log_function_call
from ...vanishing import regularity_formula
from ..grid import evaluate_grid
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.2"


@log_function_call
def check_regularity_scan(
    n: int,
    p: int,
    d_max: int,
    headroom: int = 2,
    scheduler: str = "synchronous",
) -> VerificationReport:
    """
    Compare reg(D^d R) with the largest m such that H^1(D^d R(m-2)) != 0.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.
        d_max (int): Degrees 1..d_max are scanned.
        headroom (int): Twists scanned above the predicted regularity.
        scheduler (str): dask scheduler used for the grid.

    Returns:
        VerificationReport: One result per degree plus one for monotonicity in d.
    """
    report = VerificationReport()
    degrees = [(d,) for d in range(1, d_max + 1)]
    predicted = [regularity_formula(n, p, d) for (d,) in degrees]

    def _scan(d: int) -> int:
        return regularity_scan(n, p, d, regularity_formula(n, p, d) + headroom)

    scanned = evaluate_grid(_scan, degrees, scheduler=scheduler)
    for (d,), formula, found in zip(degrees, predicted, scanned):
        report.add(
            SECTION_ID,
            f"reg(D^{d} R), n={n}, p={p}",
            "PASS" if formula == found else "FAIL",
            f"formula {formula}, oracle scan {found}",
        )

    drops = [
        (d, found, following)
        for (d,), found, following in zip(degrees, scanned, scanned[1:])
        if following < found
    ]
    if drops:
        report.add(
            SECTION_ID,
            f"reg(D^d R) non-decreasing in d, n={n}, p={p}",
            "FAIL",
            f"regularity drops after d = {', '.join(str(d) for d, _, _ in drops)}",
        )
    else:
        report.add(
            SECTION_ID,
            f"reg(D^d R) non-decreasing in d, n={n}, p={p}",
            "PASS",
            f"scanned values {scanned}",
        )

    return report


@log_function_call
def check_sym_power_regularity(n: int, p: int, headroom: int = 2) -> VerificationReport:
    """
    For 1 <= a < p the divided and symmetric powers agree and reg(Sym^a R) = a.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.
        headroom (int): Twists scanned above a.

    Returns:
        VerificationReport: One result per a.
    """
    report = VerificationReport()
    for a in range(1, p):
        found = regularity_scan(n, p, a, a + headroom)
        report.add(
            SECTION_ID,
            f"reg(Sym^{a} R) = {a}, n={n}, p={p}",
            "PASS" if found == a else "FAIL",
            f"oracle scan {found}",
        )
    return report
