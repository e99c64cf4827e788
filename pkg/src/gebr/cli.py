"""Command line front end: params, encode, decode, sweep.

Exit codes are a stable contract:
    0  success (params: Recoverable)
    2  invalid parameters, malformed container, or bad CRC
    3  NotRecoverable verdict / unrecoverable erasure pattern
    4  Unknown verdict (params only)
"""

import argparse
import csv
import os
import sys

import numpy as np

from . import container, poly
from .errors import ContainerError, GebrError, GNotInvertible, ParamError, SingularModH
from .gebr_codec import GebrArray, LineErasure, decode_columns, encode, recover_lines
from .gbr_codec import GbrArray, gbr_decode_columns, gbr_encode, gbr_recover_lines
from .params import derive_params
from .recoverability import (
    DEFAULT_ORACLE_MAX_M,
    NOT_RECOVERABLE,
    RECOVERABLE,
    classify,
    sweep,
)

EXIT_OK = 0
EXIT_BAD_PARAMS = 2
EXIT_NOT_RECOVERABLE = 3
EXIT_UNKNOWN = 4


def _add_param_args(p: argparse.ArgumentParser):
    p.add_argument("-p", type=int, required=True, help="odd prime p")
    p.add_argument("-t", "--tau", type=int, required=True, help="tau")
    p.add_argument("-k", type=int, required=True, help="information columns")
    p.add_argument("-r", type=int, required=True, help="parity columns")
    p.add_argument("-w", type=int, default=1, help="field exponent (q = 2^w)")
    p.add_argument(
        "-g", default="01",
        help="g(x) coefficient bytes in hex, x^0 first (default 01 = 1)",
    )


def _params_from_args(args):
    return derive_params(
        args.p, args.tau, args.k, args.r, w=args.w, g=poly.from_hex(args.g)
    )


def _parse_int_list(text: str):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_params(args) -> int:
    try:
        params = _params_from_args(args)
    except (ParamError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    verdict = classify(params)
    print(params.header())
    print(f"h={poly.to_hex(params.h)}  ({poly.to_terms(params.h)})")
    print(
        f"alpha={params.alpha} m={params.m} nu={params.nu} gamma={params.gamma} "
        f"gcd(g,h)=1:{str(params.gcd_g_h_is_one).lower()} "
        f"gcd(1+x^tau,h)=1:{str(params.gcd_xtau1_h_is_one).lower()}"
    )
    print(verdict.render())
    if verdict.verdict == RECOVERABLE:
        return EXIT_OK
    if verdict.verdict == NOT_RECOVERABLE:
        return EXIT_NOT_RECOVERABLE
    return EXIT_UNKNOWN


def cmd_encode(args) -> int:
    try:
        params = _params_from_args(args)
    except (ParamError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    try:
        data = _read_input(args.input)
    except OSError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    if params.w < 8:
        top = np.max(np.frombuffer(data, dtype=np.uint8)) if data else 0
        if top >= 1 << params.w:
            print(
                f"error: input byte {top:#04x} out of range for w={params.w}",
                file=sys.stderr,
            )
            return EXIT_BAD_PARAMS
    enc = gbr_encode if args.kind == "gbr" else encode
    try:
        arrays = [enc(info, params) for info in container.split_chunks(data, params)]
    except SingularModH as ex:
        print(f"error: parity solve failed: {ex}", file=sys.stderr)
        return EXIT_NOT_RECOVERABLE
    _write_output(args.output, container.write_stream(arrays, len(data)))
    print(f"encoded {len(data)} bytes into {len(arrays)} chunk(s)")
    return EXIT_OK


def _parse_erasures(args):
    cols, lines = None, None
    if args.erased_cols is not None:
        cols = _parse_int_list(args.erased_cols)
    if args.erased_lines is not None:
        slope_txt, _, idx_txt = args.erased_lines.partition(":")
        lines = LineErasure(int(slope_txt), _parse_int_list(idx_txt))
    return cols, lines


def _apply_erasure(arr, cols, lines):
    """Zero the declared-lost symbols, then run the appropriate restorer."""
    compact = isinstance(arr, GbrArray)
    symbols = np.array(arr.symbols)
    params = arr.params
    if cols:
        for c in cols:
            symbols[:, c] = 0
        broken = type(arr)(params, symbols)
        return (
            gbr_decode_columns(broken, cols)
            if compact
            else decode_columns(broken, cols)
        )
    if lines is not None and lines.lines:
        for e in lines.lines:
            for j in range(params.n):
                row = (e - lines.slope * j) % params.m
                if compact:
                    if row < params.alpha:
                        symbols[row, j] = 0
                else:
                    symbols[row, j] = 0
        broken = type(arr)(params, symbols)
        return (
            gbr_recover_lines(broken, lines)
            if compact
            else recover_lines(broken, lines)
        )
    return arr


def cmd_decode(args) -> int:
    try:
        data = _read_input(args.input)
        arrays, true_length = container.read_stream(data)
    except (ContainerError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    try:
        cols, lines = _parse_erasures(args)
    except ValueError as ex:
        print(f"error: bad erasure pattern: {ex}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    restored = []
    for idx, arr in enumerate(arrays):
        try:
            fixed = _apply_erasure(arr, cols, lines)
            if not fixed.validate():
                raise GebrError("verification failed")
        except (SingularModH, GNotInvertible) as ex:
            gcd_txt = poly.to_hex(ex.gcd) if ex.gcd is not None else ""
            print(
                f"error: chunk {idx} unrecoverable: {ex} (gcd witness: {gcd_txt})",
                file=sys.stderr,
            )
            return EXIT_NOT_RECOVERABLE
        except GebrError as ex:
            print(f"error: chunk {idx}: {ex}", file=sys.stderr)
            return EXIT_NOT_RECOVERABLE
        restored.append(fixed)
    payload = container.join_chunks([a.info() for a in restored], true_length)
    _write_output(args.output, payload)
    print(f"decoded {len(restored)} chunk(s), {len(payload)} bytes")
    return EXIT_OK


def cmd_sweep(args) -> int:
    oracle_max = int(os.environ.get("GEBR_ORACLE_MAX_M", DEFAULT_ORACLE_MAX_M))
    rows = sweep(
        _parse_int_list(args.p),
        _parse_int_list(args.tau),
        n_max=args.n_max,
        g_policy=args.g_policy,
        oracle_max_m=oracle_max,
    )
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(
            ["p", "tau", "g", "k+r", "theorem_verdict", "oracle_verdict", "agree"]
        )
        for row in rows:
            writer.writerow(
                [
                    row["p"], row["tau"], row["g"], row["n"],
                    row["theorem_verdict"], row["oracle_verdict"], row["agree"],
                ]
            )
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _write_output(path: str, data: bytes):
    if path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as f:
            f.write(data)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gebr",
        description="Array erasure codes over GF(2^w) polynomial quotient rings",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="validate parameters and classify")
    _add_param_args(p_params)
    p_params.set_defaults(fn=cmd_params)

    p_enc = sub.add_parser("encode", help="encode a file into chunk containers")
    _add_param_args(p_enc)
    p_enc.add_argument("--kind", choices=["gebr", "gbr"], default="gebr")
    p_enc.add_argument("-i", "--input", required=True, help="input file or -")
    p_enc.add_argument("-o", "--output", required=True, help="output file or -")
    p_enc.set_defaults(fn=cmd_encode)

    p_dec = sub.add_parser("decode", help="restore erasures and extract the payload")
    p_dec.add_argument("-i", "--input", required=True, help="container file or -")
    p_dec.add_argument("-o", "--output", required=True, help="output file or -")
    p_dec.add_argument(
        "--erased-cols", default=None,
        help="comma separated erased column indices (may be empty)",
    )
    p_dec.add_argument(
        "--erased-lines", default=None,
        help="slope:idx,idx,... erased lines of one slope",
    )
    p_dec.set_defaults(fn=cmd_decode)

    p_sweep = sub.add_parser(
        "sweep", help="compare theorem verdicts against the exhaustive oracle"
    )
    p_sweep.add_argument("--p", default="3,5,7", help="primes, e.g. 3,5,7")
    p_sweep.add_argument("--tau", default="1-9", help="tau values, e.g. 1-9 or 1,3,9")
    p_sweep.add_argument("--n-max", type=int, default=None, help="cap on k+r")
    p_sweep.add_argument(
        "--g-policy", choices=["divisors", "one"], default="divisors",
        help="range g over all cofactor divisors or just g = 1",
    )
    p_sweep.add_argument("--out", default=None, help="CSV path (default stdout)")
    p_sweep.set_defaults(fn=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
