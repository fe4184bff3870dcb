"""Command lines checked against the files in ``tests/golden``.

Each case runs from ``tests/data`` so file arguments are bare names.  The
golden stdout lives in ``<name>.out``, stderr in ``<name>.err`` and the
exit code in ``exit_codes.json``.
"""

import subprocess
import sys
from pathlib import Path

TESTS = Path(__file__).resolve().parent
DATA = TESTS / "data"
GOLDEN = TESTS / "golden"

CASES = {
    # reshuffle
    "reshuffle_alpha_standard": ["reshuffle", "alpha4.json", "--dims", "2", "2"],
    "reshuffle_alpha_alternative": ["reshuffle", "alpha4.json", "--dims", "2", "2", "--variant", "alternative"],
    "reshuffle_identity_standard": ["reshuffle", "identity4.json", "--dims", "2", "2"],
    "reshuffle_identity_alternative": ["reshuffle", "identity4.json", "--dims", "2", "2", "--variant", "alternative"],
    "reshuffle_square3_guard": ["reshuffle", "square3.json", "--dims", "2", "2"],
    "reshuffle_rectangular_guard": ["reshuffle", "rect2x3.json", "--dims", "2", "3"],
    "reshuffle_malformed": ["reshuffle", "malformed.json", "--dims", "2", "2"],
    "reshuffle_ragged": ["reshuffle", "ragged.json", "--dims", "2", "2"],
    "reshuffle_missing_file": ["reshuffle", "no_such_file.json", "--dims", "2", "2"],
    # schmidt
    "schmidt_bell_vector": ["schmidt", "bell_vector.json", "--dims", "2", "2"],
    "schmidt_product_vector": ["schmidt", "product_vector.json", "--dims", "2", "2"],
    "schmidt_bell_projector_operator": ["schmidt", "bell_projector.json", "--dims", "2", "2", "--mode", "operator"],
    "schmidt_vector_length_guard": ["schmidt", "bell_vector.json", "--dims", "2", "3"],
    # channel
    "channel_depolarizing_superop": ["channel", "depolarizing_p05.json", "--action", "superop"],
    "channel_depolarizing_choi": ["channel", "depolarizing_p05.json", "--action", "choi"],
    "channel_depolarizing_choi_plain": ["channel", "depolarizing_p03.json", "--action", "choi", "--plain"],
    "channel_depolarizing_kraus": ["channel", "depolarizing_p05.json", "--action", "kraus"],
    "channel_depolarizing_jamiolkowski": ["channel", "depolarizing_p05.json", "--action", "jamiolkowski"],
    "channel_depolarizing_check_cp": ["channel", "depolarizing_p05.json", "--action", "check-cp"],
    "channel_depolarizing_check_tp": ["channel", "depolarizing_p05.json", "--action", "check-tp"],
    "channel_depolarizing_check_unital": ["channel", "depolarizing_p05.json", "--action", "check-unital"],
    "channel_transpose_check_cp": ["channel", "transpose_superop.json", "--action", "check-cp"],
    "channel_transpose_kraus": ["channel", "transpose_superop.json", "--action", "kraus"],
    "channel_transpose_jamiolkowski": ["channel", "transpose_superop.json", "--action", "jamiolkowski"],
    "channel_identity_kraus": ["channel", "identity_kraus.json", "--action", "kraus"],
    "channel_bitflip_check_tp": ["channel", "bitflip.json", "--action", "check-tp"],
    "channel_pauli3_check_unital": ["channel", "generalized_pauli3.json", "--action", "check-unital"],
    "channel_amplitude_damping_check_unital": ["channel", "amplitude_damping.json", "--action", "check-unital"],
    "channel_amplitude_damping_check_tp": ["channel", "amplitude_damping.json", "--action", "check-tp"],
    "channel_invalid_probs": ["channel", "invalid_probs.json", "--action", "superop"],
    "channel_unknown_kind": ["channel", "unknown_kind.json", "--action", "superop"],
    # compose and apply
    "compose_transpose_identity": ["compose", "transpose_superop.json", "identity_kraus.json"],
    "compose_identity_identity": ["compose", "identity_kraus.json", "identity_kraus.json"],
    "compose_depolarizing_pair": ["compose", "depolarizing_p05.json", "depolarizing_p03.json"],
    "compose_invalid_spec": ["compose", "invalid_probs.json", "identity_kraus.json"],
    "apply_depolarizing": ["apply", "depolarizing_p05.json", "rho_a.json"],
    # ppt and partial operations
    "ppt_bell_projector": ["ppt", "bell_projector.json", "--dims", "2", "2"],
    "ppt_maximally_mixed": ["ppt", "maximally_mixed4.json", "--dims", "2", "2"],
    "ppt_werner_05": ["ppt", "werner_0.5.json", "--dims", "2", "2"],
    "ppt_werner_025": ["ppt", "werner_0.25.json", "--dims", "2", "2"],
    "ppt_nonhermitian": ["ppt", "nonhermitian4.json", "--dims", "2", "2"],
    "partial_transpose_bell": ["partial-transpose", "bell_projector.json", "--dims", "2", "2"],
    "partial_trace_bell_second": ["partial-trace", "bell_projector.json", "--dims", "2", "2", "--which", "second"],
    "partial_trace_product_first": ["partial-trace", "product_rho.json", "--dims", "2", "2", "--which", "first"],
}


def run(args, cwd=DATA):
    """Run the command-line tool in a fresh interpreter."""
    return subprocess.run(
        [sys.executable, "-m", "qreorder", *args],
        cwd=cwd,
        capture_output=True,
        check=False,
    )
