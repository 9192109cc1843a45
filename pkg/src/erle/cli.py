"""Command-line front end.

Exit codes: 0 success, 1 missing input (or nothing processed by
``report``), 2 unreadable or unsupported input, 3 write failure,
4 usage error.
"""

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from . import bmp, codec, container, metrics
from .errors import ErleError

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_BAD_INPUT = 2
EXIT_WRITE_FAILED = 3
EXIT_USAGE = 4

REPORT_COLUMNS = [
    "name", "original_kb", "classic_kb", "classic_ratio", "enhanced_kb",
    "enhanced_ratio", "threshold", "max_err", "psnr_db",
]


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threshold(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid threshold {text!r}") from None
    if not 0 <= value <= codec.MAX_THRESHOLD:
        raise argparse.ArgumentTypeError(f"threshold must be in 0..255, got {value}")
    return value


def _read(path):
    try:
        with open(path, "rb") as f:
            return f.read()
    except FileNotFoundError:
        raise _Fail(EXIT_NOT_FOUND, f"{path}: no such file") from None
    except OSError as e:
        raise _Fail(EXIT_NOT_FOUND, f"{path}: {e.strerror}") from None


def _write(path, data):
    try:
        with open(path, "wb") as f:
            f.write(data)
    except OSError as e:
        raise _Fail(EXIT_WRITE_FAILED, f"{path}: {e.strerror}") from None


def _load_bmp(path):
    data = _read(path)
    try:
        return data, bmp.parse_bmp(data)
    except ErleError as e:
        raise _Fail(EXIT_BAD_INPUT, f"{path}: {e}") from None


def _write_csv(path, header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    if path is None or path == "-":
        sys.stdout.write(buf.getvalue())
    else:
        _write(path, buf.getvalue().encode("utf-8"))


def _mode_threshold(args):
    return 0 if args.mode == "classic" else args.threshold


def cmd_compress(args):
    data, img = _load_bmp(args.input)
    th = _mode_threshold(args)
    runs = codec.encode(img, args.mode, th)
    out = container.serialize(args.mode, th, img.width, img.height, runs)
    out_path = args.out or os.path.splitext(args.input)[0] + container.EXTENSION
    _write(out_path, out)
    ratio = metrics.compression_ratio(len(data), len(out))
    print(f"original: {len(data)} bytes")
    print(f"compressed: {len(out)} bytes")
    print(f"ratio: {metrics.format_ratio(ratio)}")
    return EXIT_OK


def cmd_decompress(args):
    data = _read(args.input)
    try:
        ci = container.deserialize(data)
        img = codec.decode(ci.runs(), ci.width, ci.height)
        out = bmp.write_bmp(img)
    except (ErleError, ValueError) as e:
        raise _Fail(EXIT_BAD_INPUT, f"{args.input}: {e}") from None
    _write(args.out or os.path.splitext(args.input)[0] + ".bmp", out)
    return EXIT_OK


def cmd_info(args):
    data = _read(args.input)
    try:
        if data[:4] == container.MAGIC:
            fields = container.read_container_header(data)
            fields["mode"] = fields["mode"].name.lower()
        elif data[:2] == bmp.SIGNATURE:
            fields = asdict(bmp.read_header(data))
            fields["signature"] = fields["signature"].decode("ascii")
        else:
            raise _Fail(EXIT_BAD_INPUT, f"{args.input}: not a BMP or ERLE file")
    except ErleError as e:
        raise _Fail(EXIT_BAD_INPUT, f"{args.input}: {e}") from None
    for key, value in fields.items():
        print(f"{key}: {value}")
    return EXIT_OK


def _report_row(job):
    path, threshold = job
    try:
        with open(path, "rb") as f:
            data = f.read()
        img = bmp.parse_bmp(data)
    except (OSError, ErleError) as e:
        return path, None, str(e)
    name = os.path.splitext(os.path.basename(path))[0]
    return path, metrics.ratio_report(name, img, threshold, original_size=len(data)), None


def _fmt_psnr(value):
    return "inf" if value == float("inf") else f"{value:.2f}"


def cmd_report(args):
    if not os.path.isdir(args.corpus_dir):
        raise _Fail(EXIT_NOT_FOUND, f"{args.corpus_dir}: not a directory")
    names = sorted(n for n in os.listdir(args.corpus_dir) if n.lower().endswith(".bmp"))
    jobs = [(os.path.join(args.corpus_dir, n), args.threshold) for n in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_report_row, jobs))
    else:
        results = [_report_row(j) for j in jobs]

    rows, skipped = [], 0
    for path, rep, err in results:
        if rep is None:
            skipped += 1
            print(f"warning: skipping {path}: {err}", file=sys.stderr)
            continue
        rows.append([
            rep.image_name,
            metrics.to_kb(rep.original_size),
            metrics.to_kb(rep.classic_size),
            f"{rep.classic_ratio:.4f}",
            metrics.to_kb(rep.enhanced_size),
            f"{rep.enhanced_ratio:.4f}",
            rep.threshold,
            rep.max_channel_error,
            _fmt_psnr(rep.psnr_db),
        ])
    if rows:
        _write_csv(args.out, REPORT_COLUMNS, rows)
    # keep stdout pure CSV when the table goes there
    summary = sys.stderr if args.out in (None, "-") else sys.stdout
    print(f"processed: {len(rows)}, skipped: {skipped}", file=summary)
    return EXIT_OK if rows else EXIT_NOT_FOUND


def cmd_histogram(args):
    _, img = _load_bmp(args.input)
    runs = codec.encode(img, args.mode, _mode_threshold(args))
    hist = metrics.run_length_histogram(runs)
    _write_csv(args.out, ["run_length", "frequency"], hist.items())
    return EXIT_OK


def build_parser():
    p = _Parser(prog="erle", description="Run-length compression for 24-bit BMP images.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def coding_opts(sp):
        sp.add_argument("--mode", choices=["classic", "enhanced"], default="enhanced")
        sp.add_argument("--threshold", type=_threshold, default=codec.DEFAULT_THRESHOLD,
                        help="per-channel tolerance for enhanced mode (default 10)")

    sp = sub.add_parser("compress", help="BMP -> ERLE")
    sp.add_argument("input")
    sp.add_argument("--out", help="output path (default: input with .erle)")
    coding_opts(sp)
    sp.set_defaults(func=cmd_compress)

    sp = sub.add_parser("decompress", help="ERLE -> BMP")
    sp.add_argument("input")
    sp.add_argument("--out", help="output path (default: input with .bmp)")
    sp.set_defaults(func=cmd_decompress)

    sp = sub.add_parser("info", help="print BMP or ERLE header fields")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("report", help="CSV of classic vs enhanced ratios for a directory")
    sp.add_argument("corpus_dir")
    sp.add_argument("--threshold", type=_threshold, default=codec.DEFAULT_THRESHOLD)
    sp.add_argument("--out", help="CSV path (default: stdout)")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("histogram", help="run_length,frequency CSV for one image")
    sp.add_argument("input")
    sp.add_argument("--out", help="CSV path (default: stdout)")
    coding_opts(sp)
    sp.set_defaults(func=cmd_histogram)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as e:
        print(f"erle: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
