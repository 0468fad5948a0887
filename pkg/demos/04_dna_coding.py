"""The eight DNA coding rules and their algebra.

Every byte splits into four 2-bit values; each of the eight rules assigns
the values 00..11 to the bases A, T, C, G so that A/T and C/G always carry
complementary codes.  Addition and subtraction act per base as mod-4
arithmetic in the rule's value space, which is what makes the cipher's
add-then-subtract chain invertible.
"""

from chaosdna.dna import dna_add, dna_sub, encode_byte, decode_quad, format_rule_tables

print(format_rule_tables(4))

# a byte looks completely different depending on the rule in force
v = 0x6C
print(f"byte 0x{v:02X} encoded under each rule:")
for rule in range(1, 9):
    print(f"  rule {rule}: {encode_byte(v, rule)}")

# the add/sub tables form a group: (a + b) - b == a under every rule
a, b = "GATC", "CCTA"
for rule in (1, 4, 7):
    s = dna_add(a, b, rule)
    back = dna_sub(s, b, rule)
    print(f"rule {rule}: {a} + {b} = {s};  {s} - {b} = {back}")
    assert back == a

# encode/decode are inverse bijections byte <-> quad
assert all(decode_quad(encode_byte(x, 5), 5) == x for x in range(256))
print("encode/decode round trip over all 256 bytes: ok")
