"""Frozen QH^*(O(-k) -> CP^m) presentations ``x^(m+1) = u * T * x^k``.

Generated by ``python -m sympcoh.derive_presentation``; do not edit.
Each unit ``u`` comes from eliminating the critical locus of the mirror
superpotential, where ``z_(m+1)^(m+1-k) = u * T``.
"""

from fractions import Fraction

MAX_M = 12

UNITS = {
    (1, 1): Fraction("1"),
    (2, 1): Fraction("-1"),
    (2, 2): Fraction("-8"),
    (3, 1): Fraction("1"),
    (3, 2): Fraction("16"),
    (3, 3): Fraction("81"),
    (4, 1): Fraction("-1"),
    (4, 2): Fraction("-32"),
    (4, 3): Fraction("-243"),
    (4, 4): Fraction("-1024"),
    (5, 1): Fraction("1"),
    (5, 2): Fraction("64"),
    (5, 3): Fraction("729"),
    (5, 4): Fraction("4096"),
    (5, 5): Fraction("15625"),
    (6, 1): Fraction("-1"),
    (6, 2): Fraction("-128"),
    (6, 3): Fraction("-2187"),
    (6, 4): Fraction("-16384"),
    (6, 5): Fraction("-78125"),
    (6, 6): Fraction("-279936"),
    (7, 1): Fraction("1"),
    (7, 2): Fraction("256"),
    (7, 3): Fraction("6561"),
    (7, 4): Fraction("65536"),
    (7, 5): Fraction("390625"),
    (7, 6): Fraction("1679616"),
    (7, 7): Fraction("5764801"),
    (8, 1): Fraction("-1"),
    (8, 2): Fraction("-512"),
    (8, 3): Fraction("-19683"),
    (8, 4): Fraction("-262144"),
    (8, 5): Fraction("-1953125"),
    (8, 6): Fraction("-10077696"),
    (8, 7): Fraction("-40353607"),
    (8, 8): Fraction("-134217728"),
    (9, 1): Fraction("1"),
    (9, 2): Fraction("1024"),
    (9, 3): Fraction("59049"),
    (9, 4): Fraction("1048576"),
    (9, 5): Fraction("9765625"),
    (9, 6): Fraction("60466176"),
    (9, 7): Fraction("282475249"),
    (9, 8): Fraction("1073741824"),
    (9, 9): Fraction("3486784401"),
    (10, 1): Fraction("-1"),
    (10, 2): Fraction("-2048"),
    (10, 3): Fraction("-177147"),
    (10, 4): Fraction("-4194304"),
    (10, 5): Fraction("-48828125"),
    (10, 6): Fraction("-362797056"),
    (10, 7): Fraction("-1977326743"),
    (10, 8): Fraction("-8589934592"),
    (10, 9): Fraction("-31381059609"),
    (10, 10): Fraction("-100000000000"),
    (11, 1): Fraction("1"),
    (11, 2): Fraction("4096"),
    (11, 3): Fraction("531441"),
    (11, 4): Fraction("16777216"),
    (11, 5): Fraction("244140625"),
    (11, 6): Fraction("2176782336"),
    (11, 7): Fraction("13841287201"),
    (11, 8): Fraction("68719476736"),
    (11, 9): Fraction("282429536481"),
    (11, 10): Fraction("1000000000000"),
    (11, 11): Fraction("3138428376721"),
    (12, 1): Fraction("-1"),
    (12, 2): Fraction("-8192"),
    (12, 3): Fraction("-1594323"),
    (12, 4): Fraction("-67108864"),
    (12, 5): Fraction("-1220703125"),
    (12, 6): Fraction("-13060694016"),
    (12, 7): Fraction("-96889010407"),
    (12, 8): Fraction("-549755813888"),
    (12, 9): Fraction("-2541865828329"),
    (12, 10): Fraction("-10000000000000"),
    (12, 11): Fraction("-34522712143931"),
    (12, 12): Fraction("-106993205379072"),
}
