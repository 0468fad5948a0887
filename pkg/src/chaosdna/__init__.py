"""Conservative chaotic standard map driven dynamic DNA image cipher,
with security metrics and a desk-scale randomness harness."""

from .chaosmap import TWO_PI, iterate_n, step
from .cipher import decrypt, encrypt
from .dna import (
    BASES,
    RuleTable,
    build_rule_table,
    decode_quad,
    dna_add,
    dna_sub,
    encode_byte,
)
from .keystream import (
    KeySchedule,
    KeyValidationError,
    SecretKey,
    derive_schedule,
    generate_key,
    parse_key_file,
    quantize_coordinate,
    region_symbol,
    write_key_file,
)
from .netpbm import NetpbmError, read_image, write_image

__all__ = [
    "TWO_PI", "step", "iterate_n",
    "BASES", "RuleTable", "build_rule_table", "encode_byte", "decode_quad",
    "dna_add", "dna_sub",
    "SecretKey", "KeySchedule", "KeyValidationError", "derive_schedule",
    "generate_key", "parse_key_file", "write_key_file",
    "region_symbol", "quantize_coordinate",
    "encrypt", "decrypt",
    "NetpbmError", "read_image", "write_image",
]

__version__ = "0.1.0"
