"""Golden reference rows for the three published invariant tables.

NATURAL_ROWS holds the rows exactly as printed (n = 1, 2, ...; lengths
vary because the printed rows break off at different points).  The
signature-order tables hold 50 entries per row except the closure-path
row, which the source stops early.  NATURAL_ERRATA records the one known
misprint: the arc width of the one-node graph is 0 by the empty-max
convention, but the natural-order table prints 1.
"""

NATURAL_ROWS = {
    "V": [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6, 2, 4, 4, 5, 2, 6, 2, 6, 4, 4, 2, 8, 3, 4, 4, 6, 2, 8, 2, 6, 4, 4, 4, 9, 2, 4, 4, 8, 2, 8, 2, 6, 6, 4, 2, 10, 3],
    "EH": [0, 1, 1, 2, 1, 4, 1, 3, 2, 4, 1, 7, 1, 4, 4, 4, 1, 7, 1, 7, 4, 4, 1, 10, 2, 4, 3, 7, 1, 12, 1, 5, 4, 4, 4, 12, 1, 4, 4, 10, 1, 12, 1, 7, 7, 4, 1, 13],
    "Omega": [0, 1, 1, 2, 1, 2, 1, 3, 2, 2, 1, 3, 1, 2, 2, 4, 1, 3, 1, 3, 2, 2, 1, 4, 2, 2, 3, 3, 1, 3, 1, 5, 2, 2, 2, 4, 1, 2, 2, 4, 1, 3, 1, 3, 3, 2, 1, 5, 2, 3, 2],
    "omega": [0, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 1, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 1, 2, 1, 3, 1, 1, 2, 2, 2, 2, 1, 2, 2, 2, 1, 3, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2],
    "Wv": [1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 1, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 1, 2, 1, 3, 1, 1, 2, 2, 2, 3, 1, 2, 2, 2, 1, 3, 1, 2, 2, 2, 1, 2, 1, 2],
    "We": [1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 3, 1, 2, 2, 1, 1, 3, 1, 3, 2, 2, 1, 3, 1, 2, 1, 3, 1, 6, 1, 1, 2, 2, 2, 4, 1, 2, 2, 3, 1, 6, 1, 3, 3, 2, 1, 3, 1, 3],
    "Delta": [0, 1, 1, 2, 1, 2, 1, 2, 2, 2, 1, 3, 1, 2, 2, 2, 1, 3, 1, 3, 2, 2, 1, 3, 2, 2, 2, 3, 1, 3, 1, 2, 2, 2, 2, 4, 1, 2, 2, 3, 1, 3, 1, 3, 3, 2, 1, 3, 2, 3],
    "PH": [1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 3, 1, 2, 2, 1, 1, 3, 1, 3, 2, 2, 1, 4, 1, 2, 1, 3, 1, 6, 1, 1, 2, 2, 2, 6, 1, 2, 2, 4, 1, 6, 1, 3, 3, 2, 1, 5, 1, 3, 2, 3],
    "VE": [1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 1, 3, 1, 2, 2, 3, 1, 3, 1, 3, 2, 2, 1, 4, 2, 2, 2, 3, 1, 4, 1, 3, 2, 2, 2, 5, 1, 2, 2, 4, 1, 4, 1, 3, 3, 2, 1, 5, 2, 3],
    "VO": [0, 1, 1, 1, 1, 2, 1, 2, 1, 2, 1, 3, 1, 2, 2, 2, 1, 3, 1, 3, 2, 2, 1, 4, 1, 2, 2, 3, 1, 4, 1, 3, 2, 2, 2, 4, 1, 2, 2, 4, 1, 4, 1, 3, 3, 2, 1, 5, 1, 3],
    "EE": [0, 1, 1, 1, 1, 2, 1, 2, 1, 2, 1, 4, 1, 2, 2, 2, 1, 4, 1, 4, 2, 2, 1, 5, 1, 2, 2, 4, 1, 6, 1, 3, 2, 2, 2, 6, 1, 2, 2, 5, 1, 6, 1, 4, 4, 2, 1, 7, 1, 4],
    "EO": [0, 0, 0, 1, 0, 2, 0, 1, 1, 2, 0, 3, 0, 2, 2, 2, 0, 3, 0, 3, 2, 2, 0, 5, 1, 2, 1, 3, 0, 6, 0, 2, 2, 2, 2, 6, 0, 2, 2, 5, 0, 6, 0, 3, 3, 2, 0, 6, 1, 3],
    "ET": [0, 1, 1, 3, 1, 5, 1, 6, 3, 5, 1, 12, 1, 5, 5, 10, 1, 12, 1, 12, 5, 5, 1, 22, 3, 5, 6, 12, 1, 19, 1, 15, 5, 5, 5, 27, 1, 5, 5, 22, 1, 19, 1, 12, 12, 5],
    "PT": [1, 1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8, 1, 3, 3, 8, 1, 8, 1, 8, 3, 3, 1, 20, 2, 3, 4, 8, 1, 13, 1, 16, 3, 3, 3, 26, 1, 3, 3, 20, 1, 13, 1, 8, 8, 3, 1, 48, 2],
}

# (invariant, n) -> value required by the definitions where the printed table differs
NATURAL_ERRATA = {("We", 1): 0}

COLEX_ROWS = {
    "LI": [1, 2, 4, 6, 8, 12, 30, 16, 24, 36, 60, 210, 32, 48, 72, 120, 180, 420, 2310, 64, 96, 144, 216, 240, 360, 900, 840, 1260, 4620, 30030, 128, 192, 288, 432, 480, 720, 1080, 1800, 1680, 2520, 6300, 9240, 13860, 60060, 510510, 256, 384, 576, 864, 1296],
    "V": [1, 2, 3, 4, 4, 6, 8, 5, 8, 9, 12, 16, 6, 10, 12, 16, 18, 24, 32, 7, 12, 15, 16, 20, 24, 27, 32, 36, 48, 64, 8, 14, 18, 20, 24, 30, 32, 36, 40, 48, 54, 64, 72, 96, 128, 9, 16, 21, 24, 25],
    "EH": [0, 1, 2, 4, 3, 7, 12, 4, 10, 12, 20, 32, 5, 13, 17, 28, 33, 52, 80, 6, 16, 22, 24, 36, 46, 54, 72, 84, 128, 192, 7, 19, 27, 31, 44, 59, 64, 75, 92, 116, 135, 176, 204, 304, 448, 8, 22, 32, 38, 40],
    "Omega": [0, 1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8],
    "omega": [0, 1, 1, 2, 1, 2, 3, 1, 2, 2, 3, 4, 1, 2, 2, 3, 3, 4, 5, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5, 6, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 6, 7, 1, 2, 2, 2, 2],
    "Wv": [1, 1, 1, 2, 1, 2, 3, 1, 2, 3, 4, 6, 1, 2, 3, 4, 5, 7, 10, 1, 2, 3, 4, 4, 6, 7, 8, 10, 14, 20, 1, 2, 3, 4, 4, 6, 7, 8, 8, 11, 13, 15, 18, 25, 35, 1, 2, 3, 4, 5],
    "We": [0, 1, 1, 2, 1, 3, 6, 1, 3, 4, 7, 12, 1, 3, 5, 8, 11, 18, 30, 1, 3, 5, 6, 8, 12, 15, 19, 24, 38, 60, 1, 3, 5, 7, 8, 13, 16, 19, 20, 30, 37, 46, 58, 90, 140, 1, 3, 5, 7, 8],
    "Delta": [0, 1, 2, 2, 2, 3, 3, 2, 3, 4, 4, 4, 2, 3, 4, 4, 5, 5, 5, 2, 3, 4, 4, 4, 5, 6, 5, 6, 6, 6, 2, 3, 4, 4, 4, 5, 5, 6, 5, 6, 7, 6, 7, 7, 7, 2, 3, 4, 4, 4],
    "PH": [1, 1, 1, 2, 1, 3, 6, 1, 4, 6, 12, 24, 1, 5, 10, 20, 30, 60, 120, 1, 6, 15, 20, 30, 60, 90, 120, 180, 360, 720, 1, 7, 21, 35, 42, 105, 140, 210, 210, 420, 630, 840, 1260, 2520, 5040, 1, 8, 28, 56, 70],
    "VE": [1, 1, 2, 2, 2, 3, 4, 3, 4, 5, 6, 8, 3, 5, 6, 8, 9, 12, 16, 4, 6, 8, 8, 10, 12, 14, 16, 18, 24, 32, 4, 7, 9, 10, 12, 15, 16, 18, 20, 24, 27, 32, 36, 48, 64, 5, 8, 11, 12, 13],
    "VO": [0, 1, 1, 2, 2, 3, 4, 2, 4, 4, 6, 8, 3, 5, 6, 8, 9, 12, 16, 3, 6, 7, 8, 10, 12, 13, 16, 18, 24, 32, 4, 7, 9, 10, 12, 15, 16, 18, 20, 24, 27, 32, 36, 48, 64, 4, 8, 10, 12, 12],
    "EE": [0, 1, 1, 2, 2, 4, 6, 2, 5, 6, 10, 16, 3, 7, 9, 14, 17, 26, 40, 3, 8, 11, 12, 18, 23, 27, 36, 42, 64, 96, 4, 10, 14, 16, 22, 30, 32, 38, 46, 58, 68, 88, 102, 152, 224, 4, 11, 16, 19, 20],
    "EO": [0, 0, 1, 2, 1, 3, 6, 2, 5, 6, 10, 16, 2, 6, 8, 14, 16, 26, 40, 3, 8, 11, 12, 18, 23, 27, 36, 42, 64, 96, 3, 9, 13, 15, 22, 29, 32, 37, 46, 58, 67, 88, 102, 152, 224, 4, 11, 16, 19, 20],
    "ET": [0, 1, 3, 5, 6, 12, 19, 10, 22, 27, 42, 65, 15, 35, 48, 74, 90, 138, 211, 21, 51, 75, 84, 115, 156, 189, 238, 288, 438, 665, 28, 70, 108, 130, 165, 240, 268, 324, 365, 492, 594, 746, 900, 1362, 2059, 36, 92, 147, 186, 200],
    "PT": [1, 1, 2, 3, 4, 8, 13, 8, 20, 26, 44, 75, 16, 48, 76, 132, 176, 308, 541, 32, 112, 208, 252, 368, 604, 818, 1076, 1460, 2612, 4683, 64, 256, 544, 768, 976, 1888, 2316, 3172, 3408, 5740, 7880, 10404, 14300, 25988],
}

CANONICAL_ROWS = {
    "LI": [1, 2, 4, 6, 8, 12, 30, 16, 24, 36, 60, 210, 32, 48, 72, 120, 180, 420, 2310, 64, 96, 144, 240, 216, 360, 840, 900, 1260, 4620, 30030, 128, 192, 288, 480, 432, 720, 1680, 1080, 1800, 2520, 9240, 6300, 13860, 60060, 510510, 256, 384, 576, 960, 864],
    "V": [1, 2, 3, 4, 4, 6, 8, 5, 8, 9, 12, 16, 6, 10, 12, 16, 18, 24, 32, 7, 12, 15, 20, 16, 24, 32, 27, 36, 48, 64, 8, 14, 18, 24, 20, 30, 40, 32, 36, 48, 64, 54, 72, 96, 128, 9, 16, 21, 28, 24],
    "EH": [0, 1, 2, 4, 3, 7, 12, 4, 10, 12, 20, 32, 5, 13, 17, 28, 33, 52, 80, 6, 16, 22, 36, 24, 46, 72, 54, 84, 128, 192, 7, 19, 27, 44, 31, 59, 92, 64, 75, 116, 176, 135, 204, 304, 448, 8, 22, 32, 52, 38],
    "Omega": [0, 1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8],
    "omega": [0, 1, 1, 2, 1, 2, 3, 1, 2, 2, 3, 4, 1, 2, 2, 3, 3, 4, 5, 1, 2, 2, 3, 2, 3, 4, 3, 4, 5, 6, 1, 2, 2, 3, 2, 3, 4, 3, 3, 4, 5, 4, 5, 6, 7, 1, 2, 2, 3, 2],
    "Wv": [1, 1, 1, 2, 1, 2, 3, 1, 2, 3, 4, 6, 1, 2, 3, 4, 5, 7, 10, 1, 2, 3, 4, 4, 6, 8, 7, 10, 14, 20, 1, 2, 3, 4, 4, 6, 8, 7, 8, 11, 15, 13, 18, 25, 35, 1, 2, 3, 4, 4],
    "We": [0, 1, 1, 2, 1, 3, 6, 1, 3, 4, 7, 12, 1, 3, 5, 8, 11, 18, 30, 1, 3, 5, 8, 6, 12, 19, 15, 24, 38, 60, 1, 3, 5, 8, 7, 13, 20, 16, 19, 30, 46, 37, 58, 90, 140, 1, 3, 5, 8, 7],
    "Delta": [0, 1, 2, 2, 2, 3, 3, 2, 3, 4, 4, 4, 2, 3, 4, 4, 5, 5, 5, 2, 3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 2, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 2, 3, 4, 4, 4],
    "PH": [1, 1, 1, 2, 1, 3, 6, 1, 4, 6, 12, 24, 1, 5, 10, 20, 30, 60, 120, 1, 6, 15, 30, 20, 60, 120, 90, 180, 360, 720, 1, 7, 21, 42, 35, 105, 210, 140, 210, 420, 840, 630, 1260, 2520, 5040, 1, 8, 28, 56, 56],
    "VE": [1, 1, 2, 2, 2, 3, 4, 3, 4, 5, 6, 8, 3, 5, 6, 8, 9, 12, 16, 4, 6, 8, 10, 8, 12, 16, 14, 18, 24, 32, 4, 7, 9, 12, 10, 15, 20, 16, 18, 24, 32, 27, 36, 48, 64, 5, 8, 11, 14, 12],
    "VO": [0, 1, 1, 2, 2, 3, 4, 2, 4, 4, 6, 8, 3, 5, 6, 8, 9, 12, 16, 3, 6, 7, 10, 8, 12, 16, 13, 18, 24, 32, 4, 7, 9, 12, 10, 15, 20, 16, 18, 24, 32, 27, 36, 48, 64, 4, 8, 10, 14, 12],
    "EE": [0, 1, 1, 2, 2, 4, 6, 2, 5, 6, 10, 16, 3, 7, 9, 14, 17, 26, 40, 3, 8, 11, 18, 12, 23, 36, 27, 42, 64, 96, 4, 10, 14, 22, 16, 30, 46, 32, 38, 58, 88, 68, 102, 152, 224, 4, 11, 16, 26, 19],
    "EO": [0, 0, 1, 2, 1, 3, 6, 2, 5, 6, 10, 16, 2, 6, 8, 14, 16, 26, 40, 3, 8, 11, 18, 12, 23, 36, 27, 42, 64, 96, 3, 9, 13, 22, 15, 29, 46, 32, 37, 58, 88, 67, 102, 152, 224, 4, 11, 16, 26, 19],
    "ET": [0, 1, 3, 5, 6, 12, 19, 10, 22, 27, 42, 65, 15, 35, 48, 74, 90, 138, 211, 21, 51, 75, 115, 84, 156, 238, 189, 288, 438, 665, 28, 70, 108, 165, 130, 240, 365, 268, 324, 492, 746, 594, 900, 1362, 2059, 36, 92, 147, 224, 186],
    "PT": [1, 1, 2, 3, 4, 8, 13, 8, 20, 26, 44, 75, 16, 48, 76, 132, 176, 308, 541, 32, 112, 208, 368, 252, 604, 1076, 818, 1460, 2612, 4683, 64, 256, 544, 976, 768, 1888, 3408, 2316, 3172, 5740, 10404, 7880],
}
