"""Command-line front end.

Exit codes: 0 success (verdicts live in the report), 2 unreadable input or
invalid channel spec, 3 dimension or precondition failure, 4 Kraus
extraction requested for a map that is not completely positive.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import channels as ch
from .errors import NotCompletelyPositive, NotTracePreserving, QReorderError
from .io import ChannelSpec, ParseError, dumps, matrix_to_doc, read_channel, read_matrix
from .linalg import eig_hermitian, max_abs
from .reorderings import reshuffle, reshuffle_alt
from .schmidt import DEFAULT_TOL as SCHMIDT_TOL
from .schmidt import schmidt_operator, schmidt_vector

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NOT_CP = 4


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _floats(values) -> list[float]:
    return [float(v) + 0.0 for v in values]


def _extremal(mat: np.ndarray) -> float:
    """Eigenvalue of largest magnitude of the Hermitian part of `mat`."""
    values = eig_hermitian((mat + mat.conj().T) / 2).values
    return float(values[np.argmax(np.abs(values))]) + 0.0


# --- commands ----------------------------------------------------------------


def cmd_reshuffle(args) -> dict:
    a = read_matrix(args.input)
    fn = reshuffle if args.variant == "standard" else reshuffle_alt
    return matrix_to_doc(fn(a, args.dims))


def cmd_schmidt(args) -> dict:
    a = read_matrix(args.input)
    tol = SCHMIDT_TOL if args.tol is None else args.tol
    if args.mode == "vector":
        r = schmidt_vector(a, args.dims)
        target = a if a.shape[1] == 1 else a.T
    else:
        r = schmidt_operator(a, args.dims)
        target = a
    residual = max_abs(r.reconstruct() - target) if len(r) else max_abs(target)
    report = {
        "command": "schmidt",
        "mode": args.mode,
        "dims": list(args.dims),
        "coefficients": _floats(r.coefficients),
        "schmidt_number": r.number(tol),
    }
    if args.mode == "vector":
        report["separable"] = r.number(tol) == 1
    report["residual"] = residual + 0.0
    report["left_factors"] = [matrix_to_doc(x) for x in r.left_factors]
    report["right_factors"] = [matrix_to_doc(y) for y in r.right_factors]
    return report


def _channel_report(spec: ChannelSpec, rep: ch.ChannelRep, action: str, tol: float, plain: bool):
    n = spec.dim
    head = {"command": "channel", "action": action, "kind": spec.kind, "dim": n}
    if action in ("superop", "choi", "jamiolkowski"):
        if action == "superop":
            mat = ch.to_superoperator(rep).matrix
        elif action == "choi":
            mat = ch.to_dynamical(rep).matrix
        else:
            try:
                mat = ch.jamiolkowski_state(ch.to_dynamical(rep), tol)
            except (NotCompletelyPositive, NotTracePreserving) as exc:
                raise CommandError(f"channel is not CPTP: {exc}", EXIT_PRECONDITION) from None
        return matrix_to_doc(mat) if plain else {**head, "matrix": matrix_to_doc(mat)}
    if action == "kraus":
        try:
            values, kraus = ch.canonical_kraus(ch.to_dynamical(rep), tol)
        except NotCompletelyPositive as exc:
            raise CommandError(str(exc), EXIT_NOT_CP) from None
        return {
            **head,
            "singular_values": _floats(values),
            "operators": [matrix_to_doc(k) for k in kraus.operators],
        }
    if action == "check-cp":
        return {
            **head,
            "verdict": ch.is_completely_positive(rep, tol),
            "witness_eigenvalue": ch.choi_min_eigenvalue(rep) + 0.0,
            "tol": tol,
        }
    if action == "check-tp":
        deviation = ch.trace_dual(rep) - np.eye(n)
        return {
            **head,
            "verdict": ch.is_trace_preserving(rep, tol),
            "witness_eigenvalue": _extremal(deviation),
            "residual": max_abs(deviation) + 0.0,
            "tol": tol,
        }
    deviation = ch.image_of_identity(rep) - np.eye(n)
    return {
        **head,
        "verdict": ch.is_unital(rep, tol),
        "witness_eigenvalue": _extremal(deviation),
        "residual": max_abs(deviation) + 0.0,
        "tol": tol,
    }


def cmd_channel(args) -> dict:
    spec, rep = read_channel(args.spec)
    return _channel_report(spec, rep, args.action, args.tol, args.plain)


def cmd_compose(args) -> dict:
    _, a = read_channel(args.spec_a)
    _, b = read_channel(args.spec_b)
    return matrix_to_doc(ch.compose_channels(a, b).matrix)


def cmd_apply(args) -> dict:
    _, rep = read_channel(args.spec)
    rho = read_matrix(args.input)
    return matrix_to_doc(ch.apply_channel(rep, rho))


def cmd_ppt(args) -> dict:
    rho = read_matrix(args.input)
    m, n = args.dims
    min_eig = ch.ppt_min_eigenvalue(rho, args.dims, args.tol)
    ppt = min_eig >= -args.tol
    if not ppt:
        verdict = "entangled"
    elif (m, n) == (2, 2):
        verdict = "separable"
    else:
        verdict = "inconclusive"
    return {
        "command": "ppt",
        "dims": [m, n],
        "ppt": ppt,
        "min_eigenvalue": min_eig + 0.0,
        "verdict": verdict,
        "tol": args.tol,
    }


def cmd_partial_transpose(args) -> dict:
    return matrix_to_doc(ch.partial_transpose(read_matrix(args.input), args.dims, args.which))


def cmd_partial_trace(args) -> dict:
    return matrix_to_doc(ch.partial_trace(read_matrix(args.input), args.dims, args.which))


# --- parser ------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"dimension must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qreorder",
        description="Matrix reshuffling, Schmidt and Kraus decompositions, channel checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, dims=False, tol=None):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if dims:
            p.add_argument("--dims", nargs=2, type=_positive, metavar=("M", "N"), required=True)
        p.add_argument("--tol", type=float, default=tol)
        p.add_argument("--plain", action="store_true", help="emit a bare matrix document")
        return p

    p = add("reshuffle", cmd_reshuffle, "reshuffle a matrix", dims=True)
    p.add_argument("input")
    p.add_argument("--variant", choices=("standard", "alternative"), default="standard")

    p = add("schmidt", cmd_schmidt, "Schmidt decomposition", dims=True)
    p.add_argument("input")
    p.add_argument("--mode", choices=("vector", "operator"), default="vector")

    p = add("channel", cmd_channel, "channel representations and verdicts", tol=ch.VERDICT_TOL)
    p.add_argument("spec")
    p.add_argument(
        "--action",
        required=True,
        choices=("superop", "choi", "kraus", "jamiolkowski", "check-cp", "check-tp", "check-unital"),
    )

    p = add("compose", cmd_compose, "superoperator of a tensor product of channels")
    p.add_argument("spec_a")
    p.add_argument("spec_b")

    p = add("apply", cmd_apply, "apply a channel to a matrix")
    p.add_argument("spec")
    p.add_argument("input")

    p = add("ppt", cmd_ppt, "positive partial transpose test", dims=True, tol=ch.VERDICT_TOL)
    p.add_argument("input")

    for name, func in (("partial-transpose", cmd_partial_transpose), ("partial-trace", cmd_partial_trace)):
        p = add(name, func, name.replace("-", " "), dims=True)
        p.add_argument("input")
        p.add_argument("--which", choices=("first", "second"), default="first")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except ParseError as exc:
        code, message = EXIT_PARSE, str(exc)
    except CommandError as exc:
        code, message = exc.code, str(exc)
    except QReorderError as exc:
        code, message = EXIT_PRECONDITION, str(exc)
    else:
        sys.stdout.write(dumps(doc))
        return 0
    print(f"qreorder: error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
