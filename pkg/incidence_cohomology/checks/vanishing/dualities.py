from typing import Iterator, List, Set, Tuple

from ...characters import corner_char
from ...specs.reporting import VerificationReport, log_function_call
from ...vanishing import full_profile
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.3"

_MAX_LISTED = 5


def _square(bound: int) -> Iterator[Tuple[int, int]]:
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            yield a, b


def _listed(points: List[Tuple[int, int]]) -> str:
    shown = ", ".join(f"({a},{b})" for a, b in points[:_MAX_LISTED])
    return shown + (" ..." if len(points) > _MAX_LISTED else "")


@log_function_call
def check_profile_dualities(n: int, p: int, bound: int) -> VerificationReport:
    """
    Check Serre duality and the V <-> V* swap on the vanishing profile.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.
        bound (int): The square |a|, |b| <= bound is classified.

    Returns:
        VerificationReport: One result for each symmetry.
    """
    report = VerificationReport()
    top = 2 * n - 3
    serre_breaks: List[Tuple[int, int]] = []
    swap_breaks: List[Tuple[int, int]] = []

    for a, b in _square(bound):
        flags = full_profile(n, p, a, b).flags
        dual_flags = full_profile(n, p, -n + 1 - a, -n + 1 - b).flags
        if any(flags[i] != dual_flags[top - i] for i in range(top + 1)):
            serre_breaks.append((a, b))
        if flags != full_profile(n, p, b, a).flags:
            swap_breaks.append((a, b))

    for name, breaks in (("Serre duality", serre_breaks), ("V <-> V* swap", swap_breaks)):
        requirement = f"{name} on the vanishing profile, n={n}, p={p}, |a|,|b| <= {bound}"
        if breaks:
            report.add(
                SECTION_ID,
                requirement,
                "FAIL",
                f"{len(breaks)} line bundle(s) break it: {_listed(breaks)}",
            )
        else:
            report.add(SECTION_ID, requirement, "PASS", f"{(2 * bound + 1) ** 2} line bundles")

    return report


def _both_middle_degrees(n: int, p: int, a: int, b: int) -> bool:
    profile = full_profile(n, p, a, b)
    return profile.is_nonzero(n - 2) and profile.is_nonzero(n - 1)


def expected_peaks(n: int, p: int, bound: int) -> Set[Tuple[int, int]]:
    """Corner line bundles with k >= 1 inside the square |a|, |b| <= bound."""
    peaks: Set[Tuple[int, int]] = set()
    k = 1
    while p**k <= bound + n:
        for t in range(1, p):
            corner = corner_char(n, p, t, k)
            if abs(corner.a) <= bound and abs(corner.b) <= bound:
                peaks.add((corner.a, corner.b))
        k += 1
    return peaks


@log_function_call
def check_nonvanishing_pair_region(n: int, p: int, bound: int) -> VerificationReport:
    """
    Check the set of line bundles where H^{n-2} and H^{n-1} are both non-zero.

    The set must be symmetric under (a, b) -> (-n+1-a, -n+1-b), and inside
    the chamber b <= -n its peaks (members whose neighbours (a+1, b) and
    (a, b+1) are not members) must be the corner line bundles.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.
        bound (int): The square |a|, |b| <= bound is classified.

    Returns:
        VerificationReport: One result for the symmetry and one for the peaks.
    """
    report = VerificationReport()
    region = {(a, b) for a, b in _square(bound) if _both_middle_degrees(n, p, a, b)}

    asymmetric = sorted(
        (a, b)
        for a, b in region
        if abs(-n + 1 - a) <= bound
        and abs(-n + 1 - b) <= bound
        and (-n + 1 - a, -n + 1 - b) not in region
    )
    requirement = f"Both middle degrees non-zero: Serre-symmetric set, n={n}, p={p}"
    if asymmetric:
        report.add(
            SECTION_ID, requirement, "FAIL", f"unmatched line bundles: {_listed(asymmetric)}"
        )
    else:
        report.add(SECTION_ID, requirement, "PASS", f"{len(region)} line bundles in the set")

    peaks = {
        (a, b)
        for a, b in region
        if b <= -n
        and a + b >= -n + 1
        and not _both_middle_degrees(n, p, a + 1, b)
        and not _both_middle_degrees(n, p, a, b + 1)
    }
    expected = expected_peaks(n, p, bound)
    requirement = f"Peaks of the non-vanishing region are the corner line bundles, n={n}, p={p}"
    if peaks == expected:
        report.add(SECTION_ID, requirement, "PASS", f"peaks {_listed(sorted(peaks))}")
    else:
        report.add(
            SECTION_ID,
            requirement,
            "FAIL",
            f"unexpected peaks {_listed(sorted(peaks - expected))}; "
            f"missing corners {_listed(sorted(expected - peaks))}",
        )

    return report
