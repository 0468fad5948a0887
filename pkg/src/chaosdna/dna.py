"""DNA coding of 8-bit values: the 8 rules plus per-rule addition/subtraction.

A pixel byte is split into four 2-bit groups (most significant pair first) and
each group is mapped to one of the bases A/T/C/G.  Only 8 of the 24 possible
assignments respect complementarity (A/T and C/G get bitwise-complementary
codes); those are the rules below.  Addition and subtraction under a rule are
mod-4 arithmetic on the 2-bit values, translated back through the same rule,
so every add/sub table is generated rather than hard-coded.

Two API levels:

* string level -- quads are 4-character strings like ``"ATCG"``; convenient
  for inspection and used by the ``tables`` CLI subcommand.
* packed level -- a quad is a single byte holding four canonical 2-bit base
  indices (A=0, T=1, C=2, G=3, most significant base first).  The module
  builds byte-in/byte-out lookup tables (ENC_PACK, DEC_PACK, ADD_PACK,
  SUB_PACK) used by the cipher hot loop.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

BASES = "ATCG"

# Rule r assigns _RULE_ENCODINGS[r-1][v] to the 2-bit value v.
_RULE_ENCODINGS = (
    "AGCT",  # rule 1
    "ACGT",  # rule 2
    "TGCA",  # rule 3
    "TCGA",  # rule 4
    "CATG",  # rule 5
    "CTAG",  # rule 6
    "GATC",  # rule 7
    "GTAC",  # rule 8
)

_CANON = {b: i for i, b in enumerate(BASES)}

# Packed form of the fixed "ATCG" quad used as the (nonexistent) 0th cipher
# pixel during chaining.
ATCG_PACKED = (_CANON["A"] << 6) | (_CANON["T"] << 4) | (_CANON["C"] << 2) | _CANON["G"]


def _check_rule(rule: int) -> None:
    if not 1 <= rule <= 8:
        raise ValueError(f"rule id must be in 1..8, got {rule}")


@dataclass(frozen=True)
class RuleTable:
    """Encode bijection plus derived add/sub Latin squares for one rule."""

    rule: int
    encode: dict[int, str]          # 2-bit value -> base
    add: dict[str, dict[str, str]]  # add[a][b]
    sub: dict[str, dict[str, str]]  # sub[a][b]


def build_rule_table(rule: int) -> RuleTable:
    _check_rule(rule)
    enc = _RULE_ENCODINGS[rule - 1]
    val = {b: v for v, b in enumerate(enc)}
    add = {a: {b: enc[(val[a] + val[b]) % 4] for b in BASES} for a in BASES}
    sub = {a: {b: enc[(val[a] - val[b]) % 4] for b in BASES} for a in BASES}
    return RuleTable(rule, dict(enumerate(enc)), add, sub)


def encode_byte(value: int, rule: int) -> str:
    """Byte -> 4-base quad, most significant bit pair first."""
    _check_rule(rule)
    if not 0 <= value <= 255:
        raise ValueError(f"byte value out of range: {value}")
    enc = _RULE_ENCODINGS[rule - 1]
    return "".join(enc[(value >> s) & 3] for s in (6, 4, 2, 0))


def decode_quad(quad: str, rule: int) -> int:
    """Inverse of encode_byte under the same rule."""
    _check_rule(rule)
    if len(quad) != 4 or any(b not in _CANON for b in quad):
        raise ValueError(f"not a DNA quad: {quad!r}")
    val = {b: v for v, b in enumerate(_RULE_ENCODINGS[rule - 1])}
    out = 0
    for b in quad:
        out = (out << 2) | val[b]
    return out


def dna_add(a: str, b: str, rule: int) -> str:
    table = build_rule_table(rule).add
    return "".join(table[x][y] for x, y in zip(a, b, strict=True))


def dna_sub(a: str, b: str, rule: int) -> str:
    table = build_rule_table(rule).sub
    return "".join(table[x][y] for x, y in zip(a, b, strict=True))


def _build_packed_tables():
    enc_pack = np.zeros((8, 256), np.uint8)
    dec_pack = np.zeros((8, 256), np.uint8)
    add_pack = np.zeros((8, 256, 256), np.uint8)
    sub_pack = np.zeros((8, 256, 256), np.uint8)
    qa = np.arange(256, dtype=np.uint16)[:, None]
    qb = np.arange(256, dtype=np.uint16)[None, :]
    for r in range(8):
        enc = _RULE_ENCODINGS[r]
        # 2-bit value -> canonical base index, and its inverse
        code = [_CANON[b] for b in enc]
        val_of = {code[v]: v for v in range(4)}
        for byte in range(256):
            p = 0
            for s in (6, 4, 2, 0):
                p = (p << 2) | code[(byte >> s) & 3]
            enc_pack[r, byte] = p
            dec_pack[r, p] = byte
        cadd = np.array(
            [[code[(val_of[i] + val_of[j]) % 4] for j in range(4)] for i in range(4)],
            np.uint16,
        )
        csub = np.array(
            [[code[(val_of[i] - val_of[j]) % 4] for j in range(4)] for i in range(4)],
            np.uint16,
        )
        radd = np.zeros((256, 256), np.uint16)
        rsub = np.zeros((256, 256), np.uint16)
        for s in (6, 4, 2, 0):
            fa = (qa >> s) & 3
            fb = (qb >> s) & 3
            radd |= cadd[fa, fb] << s
            rsub |= csub[fa, fb] << s
        add_pack[r] = radd
        sub_pack[r] = rsub
    return enc_pack, dec_pack, add_pack, sub_pack


ENC_PACK, DEC_PACK, ADD_PACK, SUB_PACK = _build_packed_tables()


def pack_quad(quad: str) -> int:
    """4-base string -> canonical packed byte."""
    p = 0
    for b in quad:
        p = (p << 2) | _CANON[b]
    return p


def unpack_quad(packed: int) -> str:
    return "".join(BASES[(packed >> s) & 3] for s in (6, 4, 2, 0))


def format_rule_tables(rule: int) -> str:
    """Fixed text layout of a rule's encode/add/sub tables."""
    t = build_rule_table(rule)
    lines = [f"DNA rule {rule}", "encode:"]
    lines += [f"  {v:02b} -> {t.encode[v]}" for v in range(4)]

    def grid(name, table):
        out = [f"{name}:", "    " + "  ".join(BASES)]
        for a in BASES:
            out.append("  " + a + " " + "  ".join(table[a][b] for b in BASES))
        return out

    lines += grid("add", t.add)
    lines += grid("sub", t.sub)
    return "\n".join(lines) + "\n"
