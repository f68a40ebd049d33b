from ... import char_ring as cr
from ...oracle import h_characters
from ...specs.reporting import VerificationReport, grid_record, log_function_call
from . import SECTION_ID as PARENT_SECTION_ID

SECTION_ID = f"{PARENT_SECTION_ID}.4"


@log_function_call
def check_sym_power_cohomology(n: int, p: int) -> VerificationReport:
    """
    For 1 <= a < p, H^1(Sym^a R(a - 2)) = S_(a-1,a-1) V (here D^a R = Sym^a R).

    Parameters:
        n (int): dim V.
        p (int): Characteristic.

    Returns:
        VerificationReport: One result per a.
    """
    report = VerificationReport()
    for a in range(1, p):
        oracle_h0, oracle_h1 = h_characters(n, p, a, a - 2)
        expected = cr.schur2(a - 1, a - 1, n=n)
        match = oracle_h1 == expected
        report.add(
            SECTION_ID,
            f"H^1(Sym^{a} R({a - 2})) = S_({a - 1},{a - 1}) V, n={n}, p={p}",
            "PASS" if match else "FAIL",
            f"dim {expected.dim_eval()}" if match else f"oracle {oracle_h1!r}",
            record=grid_record(
                n=n,
                p=p,
                d=a,
                e_twist=a - 2,
                h0_dim=oracle_h0.dim_eval(),
                h1_dim=oracle_h1.dim_eval(),
                formula_source="char_ring.schur2",
                match=match,
            ),
        )
    return report
