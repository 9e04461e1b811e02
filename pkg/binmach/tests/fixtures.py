"""Shared worked-example data for the test modules."""
from binmach.sequence import DigitSequence

A2_BITS = (0, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0)
A2 = DigitSequence.binary(A2_BITS)
A2_TEXT = "".join(map(str, A2_BITS))

A4 = DigitSequence(4, (0, 3, 1, 3, 0, 2, 3, 2, 3, 0))
S4 = (0, 3, 1, 7, 4, 2, 11, 6, 15, 8)
S2 = (0, 2, 1, 3, 4, 5, 7, 9, 6, 8, 11, 10, 13, 15, 17, 12, 19, 21, 14, 16)

A8 = DigitSequence(8, (1, 5, 6, 2, 7, 3, 0))

# binary 4-stage machine (p = 2), dc -> 0, stage b at vertex 0, 1, ..., 15
F_KB = {
    0: "1111001000000000",
    1: "1110101000010000",
    2: "0100001100010000",
    3: "0010001000000001",
}

# binary 3-stage machine (p = 3), dc -> 0
F_8B = {
    0: "11100001",
    1: "00100111",
    2: "01100100",
}
