from typing import List, Tuple

from ... import char_ring as cr
from ...characters import euler_char, h0, h1
from ...oracle import h_characters
from ...specs.reporting import VerificationReport, grid_record, log_function_call
from ...vanishing import NONZERO, region_vi_vanishing
from ..grid import evaluate_grid
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.1"

_MAX_LISTED = 5


@log_function_call
def check_recursion_against_oracle(
    p: int,
    d_max: int,
    e_max: int,
    scheduler: str = "synchronous",
) -> VerificationReport:
    """
    Compare the recursive h^0(d, e), h^1(d, e) with oracle characters for n = 3.

    Parameters:
        p (int): Characteristic.
        d_max (int): Degrees 1..d_max.
        e_max (int): Shifted twists 0..e_max (sheaf twist e - 1).
        scheduler (str): dask scheduler used for the oracle grid.

    Returns:
        VerificationReport: One result per (d, e).
    """
    report = VerificationReport()
    points = [(d, e) for d in range(1, d_max + 1) for e in range(0, e_max + 1)]
    oracle = evaluate_grid(
        lambda d, e: h_characters(3, p, d, e - 1), points, scheduler=scheduler
    )

    for (d, e), (oracle_h0, oracle_h1) in zip(points, oracle):
        formula_h0, formula_h1 = h0(d, e, p), h1(d, e, p)
        match = oracle_h0 == formula_h0 and oracle_h1 == formula_h1
        if match:
            detail = f"dims h0={oracle_h0.dim_eval()}, h1={oracle_h1.dim_eval()}"
        else:
            detail = (
                f"h0 oracle {oracle_h0!r} vs recursion {formula_h0!r}; "
                f"h1 oracle {oracle_h1!r} vs recursion {formula_h1!r}"
            )
        report.add(
            SECTION_ID,
            f"h^0, h^1 at (d={d}, e={e}), p={p}",
            "PASS" if match else "FAIL",
            detail,
            record=grid_record(
                n=3,
                p=p,
                d=d,
                e_twist=e - 1,
                h0_dim=oracle_h0.dim_eval(),
                h1_dim=oracle_h1.dim_eval(),
                formula_source="characters.h1",
                match=match,
            ),
        )

    return report


@log_function_call
def check_recursion_consistency(p: int, bound: int) -> VerificationReport:
    """
    Internal consistency of the n = 3 recursion on 0 <= d, e <= bound.

    Covers the Euler characteristic, h^0(d, e) = h^1(e, d), non-negative
    S_3-invariant characters, agreement with the vanishing criterion and the
    truncated Schur form for p <= d <= e <= 2p - 2.

    Parameters:
        p (int): Characteristic.
        bound (int): Largest d and e.

    Returns:
        VerificationReport: One result per property.
    """
    report = VerificationReport()
    failures = {
        "h^0 - h^1 equals the Euler characteristic": [],
        "h^0(d, e) = h^1(e, d)": [],
        "h^1 is a non-negative S_3-invariant character": [],
        "h^1 vanishes exactly where the vanishing criterion says": [],
        "h^1(d, e) = s'_(e-1+p, d-p) for p <= d <= e <= 2p-2": [],
    }
    keys = list(failures)
    for d in range(bound + 1):
        for e in range(bound + 1):
            first, second = h0(d, e, p), h1(d, e, p)
            if first - second != euler_char(d, e):
                failures[keys[0]].append((d, e))
            if first != h1(e, d, p):
                failures[keys[1]].append((d, e))
            if not (second.has_nonnegative_coefficients() and second.is_symmetric()):
                failures[keys[2]].append((d, e))
            if d >= 1 and e >= d:
                hn1, _ = region_vi_vanishing(3, p, a=e, b=-d - 2)
                if (hn1 == NONZERO) != (not second.is_zero()):
                    failures[keys[3]].append((d, e))
            if p <= d <= e <= 2 * p - 2:
                if second != cr.schur2_trunc(p, e - 1 + p, d - p, n=3):
                    failures[keys[4]].append((d, e))

    for requirement, points in failures.items():
        _add_summary(report, f"{requirement}, p={p}, d,e <= {bound}", points)
    return report


def _add_summary(report: VerificationReport, requirement: str, points: List[Tuple[int, int]]):
    if points:
        shown = ", ".join(f"({d},{e})" for d, e in points[:_MAX_LISTED])
        report.add(SECTION_ID, requirement, "FAIL", f"{len(points)} failure(s): {shown}")
    else:
        report.add(SECTION_ID, requirement, "PASS")
