from ...characters import corner_char
from ...oracle import h_characters
from ...specs.reporting import VerificationReport, grid_record, log_function_call
from ..grid import evaluate_grid
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.3"


@log_function_call
def check_corners_against_oracle(
    n: int,
    p: int,
    max_q: int,
    max_d: int,
    scheduler: str = "synchronous",
) -> VerificationReport:
    """
    Compare corner characters F^q(S_(t-1,t-1) V) with oracle H^1 at twist (t+n-2)q - n.

    Parameters:
        n (int): dim V.
        p (int): Characteristic.
        max_q (int): Largest power q = p^k visited.
        max_d (int): Largest degree d = t q visited.
        scheduler (str): dask scheduler used for the oracle grid.

    Returns:
        VerificationReport: One result per corner.
    """
    report = VerificationReport()
    corners = []
    k = 0
    while p**k <= max_q:
        corners.extend(
            corner_char(n, p, t, k) for t in range(1, p) if t * p**k <= max_d
        )
        k += 1

    points = [(corner.d, corner.twist) for corner in corners]
    oracle = evaluate_grid(
        lambda d, twist: h_characters(n, p, d, twist), points, scheduler=scheduler
    )

    for corner, (oracle_h0, oracle_h1) in zip(corners, oracle):
        match = oracle_h1 == corner.character
        report.add(
            SECTION_ID,
            f"H^1(D^{corner.d} R({corner.twist})) at O({corner.a},{corner.b}), n={n}, p={p}",
            "PASS" if match else "FAIL",
            f"dim {corner.character.dim_eval()}"
            if match
            else f"oracle {oracle_h1!r} vs {corner.character!r}",
            record=grid_record(
                n=n,
                p=p,
                d=corner.d,
                e_twist=corner.twist,
                h0_dim=oracle_h0.dim_eval(),
                h1_dim=oracle_h1.dim_eval(),
                formula_source="characters.corner_char",
                match=match,
            ),
        )

    return report
