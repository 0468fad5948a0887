"""Command-line front end.

Subcommands: keygen, encrypt, decrypt, analyze, randomness, tables.  Every
subcommand that writes an output file also writes a `<output>.log` sidecar
with SHA-256 digests of all inputs, so a result can be reproduced byte for
byte.
"""

from __future__ import annotations

import argparse
import hashlib
import random
import sys
from pathlib import Path

from . import metrics, netpbm, randomness
from .cipher import decrypt, encrypt
from .dna import format_rule_tables
from .keystream import generate_key, parse_key_file, write_key_file


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _sidecar(out_path, inputs: dict[str, str]) -> None:
    parts = " ".join(f"{name}=sha256:{_digest(p)}" for name, p in inputs.items())
    line = f"{Path(out_path).name} <- {parts}\n" if parts else f"{Path(out_path).name} <- (no file inputs)\n"
    Path(str(out_path) + ".log").write_text(line)


def _cmd_keygen(args) -> int:
    rng = random.Random(args.seed) if args.seed is not None else random.Random()
    write_key_file(generate_key(rng), args.out)
    _sidecar(args.out, {})
    return 0


def _cmd_encrypt(args) -> int:
    key = parse_key_file(args.key)
    img = netpbm.read_image(getattr(args, "in"))
    netpbm.write_image(encrypt(img, key), args.out)
    _sidecar(args.out, {"key": args.key, "in": getattr(args, "in")})
    return 0


def _cmd_decrypt(args) -> int:
    key = parse_key_file(args.key)
    img = netpbm.read_image(getattr(args, "in"))
    netpbm.write_image(decrypt(img, key), args.out)
    _sidecar(args.out, {"key": args.key, "in": getattr(args, "in")})
    return 0


def _cmd_analyze(args) -> int:
    key = parse_key_file(args.key)
    plain = netpbm.read_image(args.plain)
    cipher = netpbm.read_image(args.cipher)
    if plain.ndim == 3 or cipher.ndim == 3:
        raise SystemExit("analyze expects grayscale PGM inputs; split PPM channels first")
    blocks = tuple(int(b) for b in args.blocks.split(",")) if args.blocks else ()
    rng = random.Random(args.seed) if args.seed is not None else None
    report = metrics.analyze_pair(
        plain, cipher, key, trials=args.trials, blocksizes=blocks, rng=rng
    )
    Path(args.report).write_text(report.to_json() + "\n")
    _sidecar(args.report, {"key": args.key, "plain": args.plain, "cipher": args.cipher})
    sys.stdout.write(report.to_text())
    return 0


def _cmd_randomness(args) -> int:
    rng = random.Random(args.seed) if args.seed is not None else None
    assessment = randomness.batch_assess(args.count, args.bits, rng)
    Path(args.report).write_text(assessment.to_json() + "\n")
    _sidecar(args.report, {})
    sys.stdout.write(assessment.to_json() + "\n")
    return 0


def _cmd_tables(args) -> int:
    sys.stdout.write(format_rule_tables(args.rule))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaosdna",
        description="Chaotic standard map driven dynamic DNA image cipher and analyzers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a random secret key file")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_keygen)

    for name, func in (("encrypt", _cmd_encrypt), ("decrypt", _cmd_decrypt)):
        p = sub.add_parser(name, help=f"{name} a PGM/PPM image")
        p.add_argument("--key", required=True)
        p.add_argument("--in", required=True)
        p.add_argument("--out", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("analyze", help="full metrics report for a plain/cipher pair")
    p.add_argument("--key", required=True)
    p.add_argument("--plain", required=True)
    p.add_argument("--cipher", required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--trials", type=int, default=10,
                   help="differential trials; 0 skips the sensitivity campaigns")
    p.add_argument("--blocks", default="25,40,50",
                   help="comma-separated local-entropy block sizes")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("randomness", help="batch statistical assessment of the generator")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_randomness)

    p = sub.add_parser("tables", help="print a rule's encode/add/sub tables")
    p.add_argument("--rule", type=int, required=True)
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
