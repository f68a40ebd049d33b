from ... import char_ring as cr
from ...characters import char_small_d
from ...oracle import h_characters
from ...padic import carter_criterion
from ...specs.reporting import VerificationReport, grid_record, log_function_call
from ..grid import evaluate_grid
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.2"


@log_function_call
def check_small_d_against_oracle(
    n: int, p: int, scheduler: str = "synchronous"
) -> VerificationReport:
    """
    Compare [H^1(D^d R(e))] = s'_(e+p, d-p) with the oracle for p <= d < 2p.

    Twists run over d - 1 <= e <= (n-1)p - n + 2, past the last non-zero H^1.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.
        scheduler (str): dask scheduler used for the oracle grid.

    Returns:
        VerificationReport: One result per (d, e).
    """
    report = VerificationReport()
    points = [
        (d, e_twist)
        for d in range(p, 2 * p)
        for e_twist in range(d - 1, (n - 1) * p - n + 3)
    ]
    oracle = evaluate_grid(
        lambda d, e_twist: h_characters(n, p, d, e_twist), points, scheduler=scheduler
    )

    for (d, e_twist), (oracle_h0, oracle_h1) in zip(points, oracle):
        formula = char_small_d(n, p, d, e_twist)
        match = formula == oracle_h1
        report.add(
            SECTION_ID,
            f"H^1(D^{d} R({e_twist})) = s'_({e_twist + p},{d - p}), n={n}, p={p}",
            "PASS" if match else "FAIL",
            f"dim {oracle_h1.dim_eval()}" if match else f"oracle {oracle_h1!r} vs {formula!r}",
            record=grid_record(
                n=n,
                p=p,
                d=d,
                e_twist=e_twist,
                h0_dim=oracle_h0.dim_eval(),
                h1_dim=oracle_h1.dim_eval(),
                formula_source="characters.char_small_d",
                match=match,
            ),
        )

    return report


def _extremal_weight(p: int, d: int) -> tuple:
    if d <= 2 * p - 2:
        return (d - 1, p - 1, d - p + 1)
    return (2 * p - 2, p - 1, p - 1, 1)


@log_function_call
def check_extremal_twist_irreducibility(n: int, p: int) -> VerificationReport:
    """
    Check that H^1(D^d R(d-1)), p <= d < 2p, is the character of a simple module.

    The partition (d+p-1, d-p) must satisfy Carter's criterion and s'_(d+p-1, d-p)
    must have the highest weight of the simple module obtained by sliding its
    nodes. Larger twists whose partition fails the criterion are listed in the
    detail, since their H^1 may be reducible.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.

    Returns:
        VerificationReport: One result per d.
    """
    report = VerificationReport()
    for d in range(p, 2 * p):
        partition = (d + p - 1, d - p)
        problems = []
        if not carter_criterion(partition, p):
            problems.append(f"{partition} fails Carter's criterion")

        weight = _extremal_weight(p, d)
        if len(weight) <= n:
            character = char_small_d(n, p, d, d - 1)
            expected = cr.normalize(weight + (0,) * (n - len(weight)))
            if character.is_zero() or character.highest_weight() != expected:
                problems.append(f"highest weight of s'_{partition} is not {weight}")

        reducible = [
            (e_twist, (e_twist + p, d - p))
            for e_twist in range(d, (n - 1) * p - n + 3)
            if not carter_criterion((e_twist + p, d - p), p)
        ]
        requirement = (
            f"H^1(D^{d} R({d - 1})) is simple with highest weight {weight}, n={n}, p={p}"
        )
        if problems:
            report.add(SECTION_ID, requirement, "FAIL", "; ".join(problems))
        elif reducible:
            report.add(
                SECTION_ID,
                requirement,
                "PASS",
                "Carter's criterion fails at (e, partition) in " + str(reducible),
            )
        else:
            report.add(SECTION_ID, requirement, "PASS")

    return report
