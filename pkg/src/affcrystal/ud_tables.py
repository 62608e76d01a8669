"""Transcribed piecewise-linear data of UD(V) for C_n^(1), n = 2, 3, 4.

Tuples follow ``formulas.XCOORDS[n]``.  ``lets`` are helper definitions in
order; ``c`` is the action parameter.  Kashiwara tables use the
:mod:`affcrystal.casetable` condition syntax and name their moved coordinates.
Rows marked ``# erratum`` differ from the printed text, which is kept in
``PRINTED_CONDS``.
"""

from .pc_tables import _m

WT = {
    2: {0: "-2*x11", 1: "2*x11-x21-x22", 2: "2*x21+2*x22-2*x11"},
    3: {0: "-2*x11", 1: "2*x11-x21-x22", 2: "2*x21+2*x22-x11-x31-x32-x33",
        3: "2*x31+2*x32+2*x33-2*x21-2*x22"},
    4: {0: "-2*x11", 1: "2*x11-x21-x22", 2: "2*x21+2*x22-x11-x31-x32-x33",
        3: "2*x31+2*x32+2*x33-x21-x22-x41-x42-x43-x44",
        4: "2*x41+2*x42+2*x43+2*x44-2*x31-2*x32-2*x33"},
}

EPS = {
    2: {0: "max{x21, 2*x11-x22}", 1: "x22-x11", 2: "max{-x22, 2*x11-2*x22-x21}"},
    3: {0: "max{x31, 2*x21-x32, x21+x11-x22, 2*x11+x32-2*x22, 2*x11-x33}",
        1: "x22-x11",
        2: "max{x33-x22, x33+x32+x11-2*x22-x21}",
        3: "max{-x33, 2*x22-2*x33-x32, 2*x22+2*x21-2*x33-2*x32-x31}"},
    4: {0: "max{x41, 2*x11-x44, 2*x31-x42, 2*x11+x42-2*x22, 2*x21+x42-2*x32, "
           "2*x21-x43, 2*x11+x43-2*x33, 2*x11+2*x32-2*x22-x43}",
        1: "x22-x11",
        2: "max{x33-x22, x33+x32+x11-2*x22-x21}",
        3: "max{x44-x33, x44+x43+x22-2*x33-x32, x44+x43+x42+x22+x21-2*x33-2*x32-x31}",
        4: "max{-x44, 2*x33-x43-2*x44, 2*x32+2*x33-2*x44-2*x43-x42, "
           "2*x31+2*x32+2*x33-2*x44-2*x43-2*x42-x41}"},
}

_N4 = dict(
    L="-x44", M="2*x33-2*x44-x43", N="2*x32+2*x33-2*x44-2*x43-x42",
    P="2*x31+2*x32+2*x33-2*x44-2*x43-2*x42-x41",
    A="2*x11-2*x22+x42", B="2*x21-2*x32+x42", C="2*x31-x42",
    X="2*x21-x43", Y="2*x11-2*x33+x43", Z="2*x11+2*x32-2*x22-x43", W="2*x11-x44",
    T0="x44-x33", T1="x44+x43+x22-2*x33-x32", T2="x44+x43+x42+x22+x21-2*x33-2*x32-x31",
    D1="x43+x22-x33-x32", D2="x43+x42+x22+x21-x33-2*x32-x31", D3="x42+x21-x32-x31",
)

# e_i^c as displayed: (lets, tuple)
E_ACTION = {
    2: {
        0: ({"C2": "max{c+x21+x22, 2*x11} - max{x21+x22, 2*x11}"},
            ("C2+x22-c", "x11-c", "x21-C2")),
        1: ({}, ("x22", "c+x11", "x21")),
        2: ({"C2": "max{c+x21+x22, 2*x11} - max{x21+x22, 2*x11}"},
            ("C2+x22", "x11", "c+x21-C2")),
    },
    3: {
        0: ({"M": "max{x21+x22, x11+x32}",
             "C2p": "max{x31, 2*M-2*x22-x32, 2*x11-x33}",
             "C21p": "max{c+x31, 2*M-2*x22-x32, 2*x11-x33}",
             "C24p": "max{c+x31, c+2*M-2*x22-x32, 2*x11-x33}",
             "G": "max{x21+x22+C24p, x11+x32+C21p}"},
            ("C24p+x33-c-C2p", "x22+G-c-C2p-M", "C21p+x32-C24p", "x11-c",
             "x21-G+C2p+M", "C2p+x31-C21p")),
        1: ({}, ("x33", "x22", "x32", "x11+c", "x21", "x31")),
        2: ({"C2": "max{c+x21+x22, x11+x32} - max{x21+x22, x11+x32}"},
            ("x33", "C2+x22", "x32", "x11", "c+x21-C2", "x31")),
        3: ({"C3": "max{2*x32+x31+x33, 2*x22+x31+x32, 2*x21+2*x22}",
             "C31": "max{c+2*x32+x31+x33, 2*x22+x31+x32, 2*x21+2*x22}",
             "C32": "max{c+2*x32+x31+x33, c+2*x22+x31+x32, 2*x21+2*x22}"},
            ("C31+x33-C3", "x22", "C32+x32-C31", "x11", "x21", "c+C3-C32+x31")),
    },
    4: {
        0: (dict(_N4,
                 Q4="max{x41, max{A,B,C}, max{X,Y,Z}, W}",
                 Q41="max{x41+c, max{A,B,C}, max{X,Y,Z}, W}",
                 Q42="max{x41+c, max{A,B,C}+c, max{X,Y,Z}, W}",
                 Q43="max{x41+c, max{A,B,C}+c, max{X,Y,Z}+c, W}"),
            ("x44-c+Q43-Q4", "x33-c-Q4+Q43", "x43+Q42-Q43", "x22-c-Q4+Q43",
             "x32+Q41-Q43", "x42+Q41-Q42", "x11-c", "x21+Q4-Q43", "x31+Q4-Q41",
             "x41+Q4-Q41")),
        1: ({}, ("x44", "x33", "x43", "x22", "x32", "x42", "x11+c", "x21", "x31", "x41")),
        2: ({}, ("x44", "x33", "x43", "x22+max{x22+x21+c, x11+x32}-max{x22+x21, x11+x32}",
                 "x32", "x42", "x11",
                 "x21+c+max{x22+x21, x11+x32}-max{x22+x21+c, x11+x32}", "x31", "x41")),
        3: (_N4, ("x44", "x33+max{T0+c, T1, T2}-max{T0, T1, T2}", "x43", "x22",
                  "x32+max{T0+c, T1+c, T2}-max{T0+c, T1, T2}", "x42", "x11", "x21",
                  "x31+c+max{T0, T1, T2}-max{T0+c, T1+c, T2}", "x41")),
        4: (dict(_N4,
                 c4="max{L, M, N, P}", c41="max{c+L, M, N, P}",
                 c42="max{c+L, c+M, N, P}", c43="max{c+L, c+M, c+N, P}"),
            ("c41-c4+x44", "x33", "c42-c41+x43", "x22", "x32", "c43-c42+x42",
             "x11", "x21", "x31", "c+c4-c43+x41")),
    },
}

_X3 = dict(R1="x31", R2="2*x21-x32", R3="2*x11-2*x22+x32", R4="2*x11-x33",
           S1="2*x32+x31+x33", S2="2*x22+x31+x32", S3="2*x21+2*x22")

# (lets, {k: [(label, moves, cond), ...]})
# n = 4, k = 0: the move is fixed by which region term is largest; ties go to
# the earlier term in _E0_ORDER for e~ and to the later one for f~.
_E0_ORDER = ("x41", "C", "B", "A", "X", "Z", "Y", "W")
_E0_LABEL = {"x41": "1", "B": "2", "A": "3", "C": "4", "X": "5", "Y": "6", "Z": "7", "W": "8"}
_E0_MOVE = {"x41": "x11 x21 x31 x41", "B": "x32 x42 x11 x21", "A": "x22 x32 x42 x11",
            "C": "x42 x11 x21 x31", "X": "x43 x32 x11 x21", "Y": "x33 x43 x22 x11",
            "Z": "x43 x22 x32 x11", "W": "x44 x33 x22 x11"}


def _e0_rows(direction: str) -> list:
    order = _E0_ORDER if direction == "e" else _E0_ORDER[::-1]
    sign = "-1" if direction == "e" else "+1"
    rows = []
    for k, t in enumerate(order):
        cond = [f"{t} > {s}" for s in order[:k]] + [f"{t} >= {s}" for s in order[k + 1:]]
        moves = _m(" ".join(v + sign for v in _E0_MOVE[t].split()))
        rows.append((_E0_LABEL[t], moves, ", ".join(cond)))
    return sorted(rows)


E_KASHIWARA = {
    2: ({}, {
        0: [("1", _m("x22-1 x11-1"), "2*x11-x22 > x21"),
            ("2", _m("x11-1 x21-1"), "2*x11-x22 <= x21")],
        1: [("1", _m("x11+1"), "")],
        2: [("1", _m("x21+1"), "2*x11-x22 > x21"),
            ("2", _m("x22+1"), "2*x11-x22 <= x21")],
    }),
    3: (_X3, {
        0: [("1", _m("x11-1 x21-1 x31-1"), "R1 >= R2, R1 >= R3, R1 >= R4"),  # erratum
            ("2", _m("x32-1 x11-1 x21-1"), "R2 > R1, R2 >= R3, R2 >= R4"),  # erratum
            ("3", _m("x22-1 x32-1 x11-1"), "R3 > R1, R3 > R2, R3 >= R4"),  # erratum
            ("4", _m("x33-1 x22-1 x11-1"), "R4 > R1, R4 > R2, R4 > R3")],  # erratum
        1: [("1", _m("x11+1"), "")],
        2: [("1", _m("x22+1"), "x21+x22 >= x11+x32"),
            ("2", _m("x21+1"), "x21+x22 < x11+x32")],
        3: [("1", _m("x33+1"), "S1 >= S2, S1 >= S3"),
            ("2", _m("x32+1"), "S2 > S1, S2 >= S3"),
            ("3", _m("x31+1"), "S3 > S1, S3 > S2")],
    }),
    4: (_N4, {
        0: _e0_rows("e"),  # erratum
        1: [("1", _m("x11+1"), "")],
        2: [("1", _m("x22+1"), "x21+x22 >= x11+x32"),
            ("2", _m("x21+1"), "x21+x22 < x11+x32")],
        3: [("1", _m("x33+1"), "0 >= D1, 0 >= D2"),
            ("2", _m("x32+1"), "0 < D1, 0 >= D3"),
            ("3", _m("x31+1"), "0 < D2, 0 < D3")],
        4: [("1", _m("x44+1"), "L >= M, L >= N, L >= P"),
            ("2", _m("x43+1"), "M > L, M >= N, M >= P"),
            ("3", _m("x42+1"), "N > L, N > M, N >= P"),
            ("4", _m("x41+1"), "P > L, P > M, P > N")],
    }),
}

F_KASHIWARA = {
    2: ({}, {
        0: [("1", _m("x22+1 x11+1"), "2*x11-x22 >= x21"),  # erratum
            ("2", _m("x11+1 x21+1"), "2*x11-x22 < x21")],  # erratum
        1: [("1", _m("x11-1"), "")],
        2: [("1", _m("x21-1"), "2*x11-x22 >= x21"),
            ("2", _m("x22-1"), "2*x11-x22 < x21")],
    }),
    3: (_X3, {
        0: [("1", _m("x11+1 x21+1 x31+1"), "R1 > R2, R1 > R3, R1 > R4"),  # erratum
            ("2", _m("x32+1 x11+1 x21+1"), "R2 >= R1, R2 > R3, R2 > R4"),  # erratum
            ("3", _m("x22+1 x32+1 x11+1"), "R3 >= R1, R3 >= R2, R3 > R4"),  # erratum
            ("4", _m("x33+1 x22+1 x11+1"), "R4 >= R1, R4 >= R2, R4 >= R3")],  # erratum
        1: [("1", _m("x11-1"), "")],
        2: [("1", _m("x22-1"), "x21+x22 > x11+x32"),  # erratum
            ("2", _m("x21-1"), "x21+x22 <= x11+x32")],  # erratum
        3: [("1", _m("x33-1"), "S1 > S2, S1 > S3"),
            ("2", _m("x32-1"), "S2 >= S1, S2 > S3"),
            ("3", _m("x31-1"), "S3 >= S1, S3 >= S2")],  # erratum
    }),
    4: (_N4, {
        0: _e0_rows("f"),  # erratum
        1: [("1", _m("x11-1"), "")],
        2: [("1", _m("x22-1"), "x21+x22 > x11+x32"),
            ("2", _m("x21-1"), "x21+x22 <= x11+x32")],
        3: [("1", _m("x33-1"), "0 > D1, 0 > D2"),
            ("2", _m("x32-1"), "0 <= D1, 0 > D3"),
            ("3", _m("x31-1"), "0 <= D2, 0 <= D3")],
        4: [("1", _m("x44-1"), "L > M, L > N, L > P"),
            ("2", _m("x43-1"), "M >= L, M > N, M > P"),
            ("3", _m("x42-1"), "N >= L, N >= M, N > P"),
            ("4", _m("x41-1"), "P >= L, P >= M, P >= N")],
    }),
}

PRINTED_CONDS = {
    ("e", 3, 0, "1"): "R1 > R2, R1 > R3, R1 > R4",
    ("e", 3, 0, "2"): "R2 >= R1, R2 > R3, R2 > R4",
    ("e", 3, 0, "3"): "R3 >= R1, R3 >= R2, R3 > R4",
    ("e", 3, 0, "4"): "R4 >= R1, R4 >= R2, R4 >= R3",
    ("f", 3, 0, "1"): "R1 >= R2, R1 >= R3, R1 >= R4",
    ("f", 3, 0, "2"): "R2 > R1, R2 >= R3, R2 >= R4",
    ("f", 3, 0, "3"): "R3 > R1, R3 > R2, R3 >= R4",
    ("f", 3, 0, "4"): "R4 > R1, R4 > R2, R4 > R3",
    ("f", 3, 2, "1"): "x21+x22 >= x11+x32",
    ("f", 3, 2, "2"): "x21+x22 < x11+x32",
    ("f", 3, 3, "3"): "2*x22+x21 >= S1, 2*x22+x21 >= S2",
    ("e", 4, 0, "1"): "x41 >= A, x41 >= B, x41 >= C, x41 >= X, x41 >= Y, x41 >= Z, x41 >= W",
    ("e", 4, 0, "2"): "B > x41, B > A, B >= C, B >= X, B >= Y, B >= Z, B >= W, X >= Y, X >= Z",
    ("e", 4, 0, "3"): "A > x41, A >= B, A >= C, A >= X, A >= Y, A >= Z, A >= W, Y > X or Z >= X",
    ("e", 4, 0, "4"): "C > x41, C > A, C > B, C >= X, C >= Y, C >= Z, C >= W",
    ("e", 4, 0, "5"): "X > x41, X > A, X > B, X > C, X >= Y, X >= Z, X >= W, B >= A, C >= A",
    ("e", 4, 0, "6"): "Y > x41, Y > A, Y > B, Y > C, Y > X, Y >= Z, Y >= W",
    ("e", 4, 0, "7"): "Z > x41, Z > A, Z > B, Z > C, Z > X, Z > Y, Z >= W, A > B or C >= B",
    ("e", 4, 0, "8"): "W > x41, W > A, W > B, W > C, W > X, W > Y, W > Z",
    ("f", 4, 0, "1"): "x41 > A, x41 > B, x41 > C, x41 > X, x41 > Y, x41 > Z, x41 > W",
    ("f", 4, 0, "2"): "B >= x41, B >= A, B > C, B > X, B > Y, B > Z, B > W, X > Y, X > Z",
    ("f", 4, 0, "3"): "A >= x41, A > B, A > C, A > X, A > Y, A > Z, A > W, Y >= X or Z > X",
    ("f", 4, 0, "4"): "C >= x41, C >= A, C >= B, C > X, C > Y, C > Z, C > W",
    ("f", 4, 0, "5"): "X >= x41, X >= A, X >= B, X >= C, X > Y, X > Z, X > W, B > A, C > A",
    ("f", 4, 0, "6"): "Y >= x41, Y >= A, Y >= B, Y >= C, Y >= X, Y > Z, Y > W",
    ("f", 4, 0, "7"): "Z >= x41, Z >= A, Z >= B, Z >= C, Z >= X, Z >= Y, Z > W, A >= B or C > B",
    ("f", 4, 0, "8"): "W >= x41, W >= A, W >= B, W >= C, W >= X, W >= Y, W >= Z",
    ("f", 2, 0, "1"): "2*x11-x22 <= x21",
    ("f", 2, 0, "2"): "2*x11-x22 > x21",
}

OMEGA = {
    2: {"b11": "x11", "b12": "x22-x11", "b13": "-x22",
        "b22": "x21", "b23": "x11-x21", "b24": "-x11"},
    3: {"b11": "x11", "b12": "x22-x11", "b13": "-x22+x33", "b14": "-x33",
        "b22": "x21", "b23": "-x21+x32", "b24": "x22-x32", "b25": "-x22",
        "b33": "x31", "b34": "x21-x31", "b35": "x11-x21", "b36": "-x11"},
    4: {"b11": "x11", "b12": "x22-x11", "b13": "x33-x22", "b14": "x44-x33", "b15": "-x44",
        "b22": "x21", "b23": "x32-x21", "b24": "x43-x32", "b25": "x33-x43", "b26": "-x33",
        "b33": "x31", "b34": "x42-x31", "b35": "x32-x42", "b36": "x22-x32", "b37": "-x22",
        "b44": "x41", "b45": "x31-x41", "b46": "x21-x31", "b47": "x11-x21", "b48": "-x11"},
}

OMEGA_INV = {
    2: {"x11": "b11", "x21": "b22", "x22": "b11+b12"},
    3: {"x11": "b11", "x21": "b22", "x22": "b11+b12", "x31": "b33", "x32": "b22+b23",
        "x33": "-b14"},
    4: {"x11": "b11", "x21": "b22", "x22": "-b37", "x31": "b33", "x32": "b22+b23",
        "x33": "-b26", "x41": "b44", "x42": "b33+b34", "x43": "b22+b23+b24",
        "x44": "-b15"},
}
