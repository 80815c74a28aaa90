"""Command-line front end: ``pixmark {embed,extract,restore,metrics,histogram,capacity}``.

Exit codes: 0 success, 2 usage, 3 format, 4 capacity, 5 geometry/metadata.
Outputs are staged in temporary files and renamed into place only after
every computation has succeeded, so a failing run writes nothing.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import frequency, spatial
from .errors import BadHeader, CapacityExceeded, FormatError, GeometryError
from .frequency import EmbedParams
from .image_io import HEADER_BITS, BitPayload, decode_header, image_from_payload, payload_from_image, read_pgm, write_pgm
from .metrics import METHODS, capacity, histogram_csv, quality_report
from .spatial import DeMetadata

EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_CAPACITY = 4
EXIT_GEOMETRY = 5


class UsageError(Exception):
    pass


def _dct_pos(text: str) -> tuple[int, int]:
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}") from None
    return u, v


def _key(text: str) -> int:
    try:
        k = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"key must be a decimal integer, got {text!r}") from None
    if not 0 <= k < 2**64:
        raise argparse.ArgumentTypeError("key must fit in 64 unsigned bits")
    return k


def _add_params(p: argparse.ArgumentParser):
    p.add_argument("--delta", type=float, default=None, help="QIM step (default 8 for dct, 16 for dwt)")
    p.add_argument("--subband", choices=("hl", "lh", "hh"), default="hl")
    p.add_argument("--dct-pos", type=_dct_pos, default=(4, 3), metavar="U,V")
    p.add_argument("--key", type=_key, default=0, help="decimal 64-bit permutation key (0 = none)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pixmark", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a binarized watermark image in a cover")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("--watermark", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--meta", help="difference-expansion sidecar (default: OUT.dem)")
    _add_params(p)

    p = sub.add_parser("extract", help="recover the watermark from a stego image")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--stego", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--meta", help="difference-expansion sidecar (default: STEGO.dem)")
    p.add_argument("--nbits", type=int, help="read this many raw bits and write them as 0/1 text")
    _add_params(p)

    p = sub.add_parser("restore", help="rebuild the exact cover of a difference-expansion stego image")
    p.add_argument("--stego", required=True)
    p.add_argument("--meta", help="sidecar (default: STEGO.dem)")
    p.add_argument("--out", required=True)

    p = sub.add_parser("metrics", help="print MSE/PSNR/max difference as JSON")
    p.add_argument("--cover", required=True)
    p.add_argument("--stego", required=True)

    p = sub.add_parser("histogram", help="write a 256-line value,count CSV")
    p.add_argument("--image", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("capacity", help="print the bit capacity of a cover for a method")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--cover", required=True)
    _add_params(p)
    return parser


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _load_image(path: str):
    return read_pgm(_read(path))


def _load_meta(path: str) -> DeMetadata:
    return DeMetadata.from_bytes(_read(path))


def _params(args) -> EmbedParams:
    try:
        return EmbedParams(delta=args.delta, dct_pos=args.dct_pos, subband=args.subband, key=args.key)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _frequency_pair(method: str):
    if method == "dwt":
        return frequency.dwt_extract, frequency.dwt_capacity
    return frequency.dct_extract, frequency.dct_capacity


def _extract_bits(args, stego) -> BitPayload:
    params = _params(args)
    if args.method == "lsb":
        if args.nbits is not None:
            return spatial.lsb_extract(stego, args.nbits)
        npix = stego.width * stego.height
        w, h = decode_header(spatial.lsb_extract(stego, min(HEADER_BITS, npix)).bits)
        if HEADER_BITS + w * h > npix:
            raise BadHeader(f"header announces {w}x{h}, more than the image can carry")
        return spatial.lsb_extract(stego, HEADER_BITS + w * h)
    if args.method == "de":
        bits, _ = spatial.de_extract_restore(stego, _load_meta(args.meta or args.stego + ".dem"))
        if args.nbits is not None:
            if args.nbits > len(bits):
                raise CapacityExceeded(args.nbits, len(bits))
            bits = BitPayload(bits.bits[: args.nbits])
        return bits
    extract, cap = _frequency_pair(args.method)
    if args.nbits is not None:
        return extract(stego, args.nbits, params)
    available = cap(stego)
    w, h = decode_header(extract(stego, min(HEADER_BITS, available), params).bits)
    if HEADER_BITS + w * h > available:
        raise BadHeader(f"header announces {w}x{h}, more than the image can carry")
    return extract(stego, HEADER_BITS + w * h, params)


def _run(args, out) -> dict[str, bytes]:
    """Execute a command; return the files to write (path -> bytes)."""
    if args.command == "embed":
        params = _params(args)
        cover = _load_image(args.cover)
        payload = payload_from_image(_load_image(args.watermark))
        if args.method == "lsb":
            return {args.out: write_pgm(spatial.lsb_embed(cover, payload))}
        if args.method == "de":
            stego, meta = spatial.de_embed(cover, payload)
            return {args.out: write_pgm(stego), args.meta or args.out + ".dem": meta.to_bytes()}
        embed = frequency.dwt_embed if args.method == "dwt" else frequency.dct_embed
        return {args.out: write_pgm(embed(cover, payload, params))}

    if args.command == "extract":
        stego = _load_image(args.stego)
        bits = _extract_bits(args, stego)
        if args.nbits is not None:
            text = "".join(map(str, bits.bits.tolist())) + "\n"
            return {args.out: text.encode("ascii")}
        return {args.out: write_pgm(image_from_payload(bits))}

    if args.command == "restore":
        stego = _load_image(args.stego)
        _, cover = spatial.de_extract_restore(stego, _load_meta(args.meta or args.stego + ".dem"))
        return {args.out: write_pgm(cover)}

    if args.command == "metrics":
        report = quality_report(_load_image(args.cover), _load_image(args.stego))
        out.write(report.to_json() + "\n")
        return {}

    if args.command == "histogram":
        return {args.out: histogram_csv(_load_image(args.image)).encode("ascii")}

    if args.command == "capacity":
        out.write(f"{capacity(args.method, _load_image(args.cover), _params(args))}\n")
        return {}
    raise UsageError(f"unknown command {args.command}")


def _commit(files: dict[str, bytes]):
    staged = []
    try:
        for path, data in files.items():
            directory = os.path.dirname(os.path.abspath(path))
            fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pixmark-")
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            staged.append((tmp, path))
    except BaseException:
        for tmp, _ in staged:
            os.unlink(tmp)
        raise
    for tmp, path in staged:
        os.replace(tmp, path)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _commit(_run(args, out))
    except (UsageError, ValueError) as exc:
        err.write(f"pixmark: usage error: {exc}\n")
        return EXIT_USAGE
    except FormatError as exc:
        err.write(f"pixmark: {type(exc).__name__}: {exc}\n")
        return EXIT_FORMAT
    except CapacityExceeded as exc:
        err.write(f"pixmark: CapacityExceeded: {exc}\n")
        return EXIT_CAPACITY
    except GeometryError as exc:
        err.write(f"pixmark: {type(exc).__name__}: {exc}\n")
        return EXIT_GEOMETRY
    except OSError as exc:
        err.write(f"pixmark: cannot write output: {exc}\n")
        return EXIT_FORMAT
    return 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
