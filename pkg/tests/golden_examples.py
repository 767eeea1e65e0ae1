"""Classic worked witness lines for the six standard forms.

Keyed by (k, s), then by target n; each entry is (added, subtracted)
with both sides already ascending.  ERRONEOUS holds two lines whose
arithmetic is wrong on purpose; a validator must reject both.
"""

GOLDEN = {
    (3, 1): {
        1: [((3, 5), (7,)), ((5, 7), (11,)), ((7, 11), (17,)), ((11, 13), (23,))],
        3: [((5, 5), (7,)), ((7, 19), (23,)), ((17, 23), (37,))],
        5: [((3, 13), (11,))],
        7: [((11, 13), (17,))],
        9: [((5, 7), (3,))],
        11: [((7, 17), (13,))],
    },
    (3, 2): {
        1: [((13,), (5, 7)), ((17,), (5, 11)), ((19,), (5, 13))],
        3: [((13,), (3, 7)), ((23,), (7, 13))],
        5: [((13,), (3, 5))],
        7: [((17,), (3, 7))],
        9: [((17,), (3, 5))],
        11: [((19,), (3, 5))],
    },
    (5, 1): {
        1: [((3, 3, 3, 5), (13,)), ((3, 5, 5, 17), (29,))],
        3: [((3, 5, 11, 13), (29,))],
        5: [((3, 7, 11, 13), (29,))],
        7: [((5, 7, 11, 13), (29,))],
        11: [((5, 7, 11, 17), (29,))],
    },
    (5, 2): {
        1: [((3, 7, 17), (13, 13)), ((3, 7, 23), (13, 19))],
        3: [((5, 7, 17), (13, 13))],
        5: [((7, 7, 17), (13, 13))],
        7: [((5, 11, 17), (13, 13))],
        9: [((7, 11, 17), (13, 13))],
        11: [((7, 11, 19), (13, 13))],
    },
    (5, 3): {
        1: [((11, 13), (3, 3, 17))],
        3: [((13, 13), (3, 3, 17))],
        7: [((3, 31), (5, 5, 17))],
        9: [((3, 37), (7, 7, 17))],
        11: [((5, 37), (7, 7, 17))],
    },
    (5, 4): {
        1: [((13,), (3, 3, 3, 3))],
        3: [((17,), (3, 3, 3, 5))],
        5: [((19,), (3, 3, 3, 5))],
        7: [((23,), (3, 3, 5, 5))],
        9: [((29,), (3, 5, 5, 7))],
        11: [((31,), (3, 5, 5, 7))],
    },
}

# (claimed n, (k, s), (added, subtracted)); both lines evaluate to 7, not
# the claimed target, and the second also reuses 5 across the two sides.
ERRONEOUS = [
    (9, (5, 1), ((5, 7, 11, 13), (29,))),
    (5, (5, 3), ((5, 29), (5, 5, 17))),
]
