"""Transcribed data of the parametrized perfect crystals B^{n,l}, B^{n,inf} (n = 2, 3, 4).

Each operator table is ``(common_moves, [(label, moves, condition), ...])``.
Moves name coordinates ``bij``; conditions use :mod:`affcrystal.casetable`
syntax.  Positivity guards of the level-l forms are not stored: they are
derived from the moves (every decremented entry must be positive).
``l`` in the scalar formulas is the level (0 for B^{n,inf}).

Rows marked ``# erratum`` differ from the printed table; the printed text is
kept in ``PRINTED_CONDS`` and the reason is in the decisions ledger.
"""


def _m(text: str) -> dict:
    """'b12+1 b23-1' -> {'b12': 1, 'b23': -1}."""
    out = {}
    for tok in text.split():
        name, sign = tok[:-2], tok[-2]
        out[name] = int(tok[-1]) * (1 if sign == "+" else -1)
    return out


RELATIONS = {
    2: ["b11 = b22+b23", "b24 = b12+b13"],
    3: ["b11 = b33+b34+b35", "b36 = b12+b13+b14", "b22 = b33+b34", "b25 = b13+b14"],
    4: ["b11 = b44+b45+b46+b47", "b48 = b12+b13+b14+b15",
        "b22 = b44+b45+b46", "b37 = b13+b14+b15",
        "b22+b23 = b33+b34+b35", "b36+b37 = b24+b25+b26",
        "b33 = b44+b45", "b26 = b14+b15"],
}

# free coordinates for B^{n,inf}; the rest are solved from row sums and RELATIONS
FREE = {
    2: ("b11", "b12", "b22"),
    3: ("b11", "b12", "b14", "b22", "b23", "b33"),
    4: ("b11", "b15", "b22", "b23", "b24", "b26", "b33", "b34", "b37", "b44"),
}

# n = 4, k = 0: the row is fixed by which eps_0 min-term (below) is smallest;
# ties go to the earlier row of _B0_ORDER for e~ and the later one for f~.
_B0_TERM = {"1": "b45+b46+b47", "4": "b34+b46+b47", "2": "b12+b35+b36",
            "3": "b23+b35+b47", "5": "b23+b24+b47", "6": "b12+b13+b25",
            "7": "b12+b24+b36", "8": "b12+b13+b14"}
_B0_ORDER = ("1", "4", "3", "2", "5", "7", "6", "8")


def _b0_rows(direction: str, moves: dict) -> list:
    pre = "A" if direction == "e" else "B"
    order = _B0_ORDER if direction == "e" else _B0_ORDER[::-1]
    rows = []
    for k, r in enumerate(order):
        t = _B0_TERM[r]
        cond = [f"{t} < {_B0_TERM[q]}" for q in order[:k]]
        cond += [f"{t} <= {_B0_TERM[q]}" for q in order[k + 1:]]
        rows.append((pre + r, moves[pre + r], ", ".join(cond)))
    return sorted(rows)


E_TABLES = {
    2: {
        0: (_m("b11-1 b24+1"), [
            ("1", _m("b23-1 b13+1"), "b23 > b12"),
            ("2", _m("b22-1 b12+1"), "b23 <= b12"),
        ]),
        1: ({}, [("1", _m("b11+1 b12-1 b23+1 b24-1"), "")]),
        2: ({}, [
            ("1", _m("b13-1 b12+1"), "b12 >= b23"),  # erratum
            ("2", _m("b23-1 b22+1"), "b12 < b23"),  # erratum
        ]),
    },
    3: {
        0: (_m("b11-1 b36+1"), [
            ("1", _m("b12+1 b22-1 b23+1 b33-1"),
             "b23 >= b34, 2*b12 >= b23+b34, b12+b13 >= b34+b35"),
            ("2", _m("b22-1 b12+1 b24+1 b34-1"),
             "b12+b13 >= b23+b35, b34 > b23, b12+b24 >= b23+b35"),
            ("3", _m("b13+1 b23-1 b25+1 b35-1"),
             "b13 >= b24, b35+b34 > b12+b24, b12+b24 < b23+b35"),  # erratum
            ("4", _m("b14+1 b24-1 b25+1 b35-1"),
             "b24 > b13, 2*b35 > b13+b24, b35+b34 > b12+b13"),
        ]),
        1: ({}, [("1", _m("b12-1 b11+1 b36-1 b35+1"), "")]),
        2: ({}, [
            ("1", _m("b12+1 b13-1 b24+1 b25-1"), "b23+b35 <= b12+b24"),
            ("2", _m("b22+1 b23-1 b34+1 b35-1"), "b23+b35 > b12+b24"),
        ]),
        3: ({}, [
            ("1", _m("b13+1 b14-1"), "b24 <= b13, b13+b23 >= b24+b34"),
            ("2", _m("b23+1 b24-1"), "b24 > b13, b34 <= b23"),
            ("3", _m("b33+1 b34-1"), "b34 > b23, b24+b34 > b13+b23"),
        ]),
    },
    4: {
        0: (_m("b11-1 b48+1"), _b0_rows("e", {
            "A1": _m("b12+1 b23+1 b34+1 b22-1 b33-1 b44-1"),
            "A2": _m("b13+1 b24+1 b37+1 b23-1 b34-1 b47-1"),
            "A3": _m("b12+1 b24+1 b36+1 b22-1 b34-1 b46-1"),
            "A4": _m("b12+1 b23+1 b35+1 b22-1 b33-1 b45-1"),
            "A5": _m("b12+1 b25+1 b36+1 b22-1 b35-1 b46-1"),
            "A6": _m("b14+1 b26+1 b37+1 b24-1 b36-1 b47-1"),
            "A7": _m("b13+1 b25+1 b37+1 b23-1 b35-1 b47-1"),
            "A8": _m("b15+1 b26+1 b37+1 b25-1 b36-1 b47-1"),
        })),  # erratum
        1: ({}, [("1", _m("b11+1 b12-1 b47+1 b48-1"), "")]),
        2: ({}, [
            ("1", _m("b12+1 b13-1 b36+1 b37-1"), "b23+b47 <= b12+b36"),
            ("2", _m("b22+1 b23-1 b46+1 b47-1"), "b23+b47 > b12+b36"),
        ]),
        3: ({}, [
            ("1", _m("b33+1 b34-1 b45+1 b46-1"), "b25+b35 < b36+b46, b35 < b46"),
            ("2", _m("b23+1 b24-1 b35+1 b36-1"), "b35 >= b46, b13 < b24"),
            ("3", _m("b13+1 b14-1 b25+1 b26-1"), "b13 >= b24, b25+b35 >= b36+b46"),
        ]),
        4: ({}, [
            ("1", _m("b14+1 b15-1"),
             "b14 >= b25, b14+b24 >= b25+b35, b14+b24+b34 >= b25+b35+b45"),
            ("2", _m("b24+1 b25-1"), "b14 < b25, b24 >= b35, b24+b34 >= b35+b45"),
            ("3", _m("b34+1 b35-1"), "b14+b24 < b25+b35, b24 < b35, b34 >= b45"),
            ("4", _m("b44+1 b45-1"),
             "b14+b24+b34 < b25+b35+b45, b24+b34 < b35+b45, b34 < b45"),
        ]),
    },
}

F_TABLES = {
    2: {
        0: (_m("b11+1 b24-1"), [
            ("1", _m("b23+1 b13-1"), "b23 >= b12"),
            ("2", _m("b22+1 b12-1"), "b23 < b12"),
        ]),
        1: ({}, [("1", _m("b11-1 b12+1 b23-1 b24+1"), "")]),
        2: ({}, [
            ("1", _m("b13+1 b12-1"), "b12 > b23"),
            ("2", _m("b23+1 b22-1"), "b12 <= b23"),
        ]),
    },
    3: {
        0: (_m("b11+1 b36-1"), [
            ("1", _m("b12-1 b22+1 b23-1 b33+1"),
             "b23 > b34, b12+b13 > b34+b35, 2*b12 > b23+b34"),  # erratum
            ("2", _m("b22+1 b12-1 b24-1 b34+1"),
             "b12+b13 > b23+b35, b34 >= b23, b35+b23 < b24+b12"),
            ("3", _m("b13-1 b23+1 b25-1 b35+1"),
             "b13 > b24, b35+b34 >= b12+b24, b12+b24 <= b23+b35"),  # erratum
            ("4", _m("b14-1 b24+1 b25-1 b35+1"),
             "b24 >= b13, b35+b34 >= b12+b13, 2*b35 >= b24+b13"),
        ]),
        1: ({}, [("1", _m("b12+1 b11-1 b36+1 b35-1"), "")]),
        2: ({}, [
            ("1", _m("b12-1 b13+1 b24-1 b25+1"), "b23+b35 < b12+b24"),
            ("2", _m("b22-1 b23+1 b34-1 b35+1"), "b23+b35 >= b12+b24"),
        ]),
        3: ({}, [
            ("1", _m("b13-1 b14+1"), "b13 > b24, b13+b23 > b24+b34"),
            ("2", _m("b23-1 b24+1"), "b23 > b34, b13 <= b24"),
            ("3", _m("b33-1 b34+1"), "b23 <= b34, b24+b34 >= b13+b23"),
        ]),
    },
    4: {
        0: (_m("b11+1 b48-1"), _b0_rows("f", {
            "B1": _m("b12-1 b23-1 b34-1 b22+1 b33+1 b44+1"),
            "B2": _m("b13-1 b24-1 b37-1 b23+1 b34+1 b47+1"),
            "B3": _m("b12-1 b24-1 b36-1 b22+1 b34+1 b46+1"),
            "B4": _m("b12-1 b23-1 b35-1 b22+1 b33+1 b45+1"),
            "B5": _m("b12-1 b25-1 b36-1 b22+1 b35+1 b46+1"),
            "B6": _m("b14-1 b26-1 b37-1 b24+1 b36+1 b47+1"),
            "B7": _m("b13-1 b25-1 b37-1 b23+1 b35+1 b47+1"),
            "B8": _m("b15-1 b26-1 b37-1 b25+1 b36+1 b47+1"),
        })),  # erratum
        1: ({}, [("1", _m("b11-1 b12+1 b47-1 b48+1"), "")]),
        2: ({}, [
            ("1", _m("b12-1 b13+1 b36-1 b37+1"), "b23+b47 < b12+b36"),
            ("2", _m("b22-1 b23+1 b46-1 b47+1"), "b23+b47 >= b12+b36"),
        ]),
        3: ({}, [
            ("1", _m("b33-1 b34+1 b45-1 b46+1"), "b25+b35 <= b36+b46, b35 <= b46"),
            ("2", _m("b23-1 b24+1 b35-1 b36+1"), "b35 > b46, b13 <= b24"),
            ("3", _m("b13-1 b14+1 b25-1 b26+1"), "b25+b35 > b36+b46, b13 > b24"),
        ]),
        4: ({}, [
            ("1", _m("b14-1 b15+1"),
             "b14 > b25, b14+b24 > b25+b35, b14+b24+b34 > b25+b35+b45"),
            ("2", _m("b24-1 b25+1"), "b14 <= b25, b24 > b35, b24+b34 > b35+b45"),
            ("3", _m("b34-1 b35+1"), "b14+b24 <= b25+b35, b24 <= b35, b34 > b45"),
            ("4", _m("b44-1 b45+1"),
             "b14+b24+b34 <= b25+b35+b45, b24+b34 <= b35+b45, b34 <= b45"),
        ]),
    },
}

# printed text of rows changed above: (dir, n, k, label) -> condition
PRINTED_CONDS = {
    ("e", 4, 0, "A1"):
        "b12+b35+b36 >= b45+b46+b47, b23+b35 >= b45+b46, b34 >= b45, b23+b24 >= b45+b46, b12+b13+b25 >= b45+b46+b47, b12+b24+b36 >= b45+b46+b47, b12+b13+b14 >= b45+b46+b47",
    ("e", 4, 0, "A2"):
        "b45+b46+b47 > b12+b35+b36, b23+b47 >= b12+b36, b34+b46+b47 >= b12+b35+b36, b23+b24+b47 >= b12+b35+b36, b13+b25 >= b35+b36, b24 >= b35, b13+b14 >= b35+b36, b23+b24+b47 > b12+b35+b36 or b23+b47 > b12+b36",
    ("e", 4, 0, "A3"):
        "b45+b46 > b23+b35, b12+b36 >= b23+b47, b34+b46 >= b23+b35, b24 >= b35, b12+b13+b25 >= b23+b35+b47, b12+b13+b14 >= b23+b35+b47, b12+b24+b36 >= b23+b35+b47, b12+b36 >= b23+b47, b24+b36 >= b13+b25",
    ("e", 4, 0, "A4"):
        "b45 > b34, b12+b35+b36 > b34+b46+b47, b23+b35 > b34+b46, b23+b24 >= b34+b46, b12+b13+b25 >= b34+b46+b47, b12+b24+b36 >= b34+b46+b47, b12+b13+b14 >= b34+b46+b47",
    ("e", 4, 0, "A5"):
        "b45+b46 > b23+b24, b12+b35+b36 > b23+b24+b47, b35 > b24, b34+b46 > b23+b24, b12+b13+b25 >= b23+b24+b47, b12+b36 >= b23+b47, b12+b13+b14 >= b23+b24+b47, b12+b36 >= b23+b47 or b12+b35+b36 >= b34+b46+b47",
    ("e", 4, 0, "A6"):
        "b45+b46+b47 > b12+b13+b25, b35+b36 > b13+b25, b23+b35+b47 > b12+b13+b25, b34+b46+b47 > b12+b13+b25, b23+b24+b47 > b12+b13+b25, b24+b36 >= b13+b25, b14 >= b25",
    ("e", 4, 0, "A7"):
        "b45+b46+b47 > b12+b24+b36, b35 > b24, b23+b35+b47 > b12+b24+b36, b34+b46+b47 > b12+b24+b36, b23+b47 > b12+b36, b13+b25 > b24+b36, b13+b14 >= b24+b36, b34+b46 <= b23+b35",
    ("e", 4, 0, "A8"):
        "b45+b46+b47 > b12+b13+b14, b35+b36 > b13+b14, b23+b35+b47 > b12+b13+b14, b34+b46+b47 > b12+b13+b14, b23+b24+b47 > b12+b13+b14, b25 > b14, b36+b24 > b13+b14",
    ("f", 4, 0, "B1"):
        "b12+b35+b36 > b45+b46+b47, b23+b35 > b45+b46, b34 > b45, b23+b24 > b45+b46, b12+b13+b25 > b45+b46+b47, b12+b24+b36 > b45+b46+b47, b12+b13+b14 > b45+b46+b47",
    ("f", 4, 0, "B2"):
        "b45+b46+b47 >= b12+b35+b36, b23+b47 > b12+b36, b34+b46+b47 > b12+b35+b36, b23+b24+b47 > b12+b35+b36, b13+b25 > b35+b36, b24 > b35, b13+b14 > b35+b36, b23+b24+b47 >= b12+b35+b36 or b23+b47 >= b12+b36",
    ("f", 4, 0, "B3"):
        "b45+b46 >= b23+b35, b12+b36 > b23+b47, b34+b46 > b23+b35, b24 > b35, b12+b13+b25 > b23+b35+b47, b12+b13+b14 > b23+b35+b47, b12+b24+b36 > b23+b35+b47, b12+b36 > b23+b47, b24+b36 > b13+b25",
    ("f", 4, 0, "B4"):
        "b45 >= b34, b12+b35+b36 >= b34+b46+b47, b23+b35 >= b34+b46, b23+b24 > b34+b46, b12+b13+b25 > b34+b46+b47, b12+b24+b36 > b34+b46+b47, b12+b13+b14 > b34+b46+b47",
    ("f", 4, 0, "B5"):
        "b45+b46 >= b23+b24, b12+b35+b36 >= b23+b24+b47, b35 >= b24, b34+b46 >= b23+b24, b12+b13+b25 > b23+b24+b47, b12+b36 > b23+b47, b12+b13+b14 > b23+b24+b47, b12+b36 > b23+b47 or b12+b35+b36 > b34+b46+b47",
    ("f", 4, 0, "B6"):
        "b45+b46+b47 >= b12+b13+b25, b35+b36 >= b13+b25, b23+b35+b47 >= b12+b13+b25, b34+b46+b47 >= b12+b13+b25, b23+b24+b47 >= b12+b13+b25, b24+b36 > b13+b25, b14 > b25",
    ("f", 4, 0, "B7"):
        "b45+b46+b47 >= b12+b24+b36, b35 >= b24, b23+b35+b47 >= b12+b24+b36, b34+b46+b47 >= b12+b24+b36, b23+b47 >= b12+b36, b13+b25 >= b24+b36, b13+b14 > b24+b36, b34+b46 < b23+b35",
    ("f", 4, 0, "B8"):
        "b45+b46+b47 >= b12+b13+b14, b35+b36 >= b13+b14, b23+b35+b47 >= b12+b13+b14, b34+b46+b47 >= b12+b13+b14, b23+b24+b47 >= b12+b13+b14, b25 >= b14, b36+b24 >= b13+b14",
    ("e", 2, 2, "1"): "b12 <= b23",
    ("e", 2, 2, "2"): "b12 > b23",
    ("f", 3, 0, "1"): "b23 > b34, b12+b13 > b34+b35, 2*b12 > b23+b34, b12+b24 >= b23+b35",
    ("e", 3, 0, "3"): "b13 >= b24, b35+b34 > b12+b24, b12 < b23+b35",
    ("f", 3, 0, "3"): "b13 > b24, b35+b34 >= b12+b24, b12 <= b23+b35",
}

_E0_MIN = {
    2: "min{b12, b23}",
    3: "min{b12+b13, b23+b24, b34+b35, b12+b24, b23+b35}",
    4: "min{b45+b46+b47, b34+b46+b47, b12+b35+b36, b23+b35+b47, b23+b24+b47, "
       "b12+b13+b25, b12+b24+b36, b12+b13+b14}",
}

EPS = {
    2: {0: f"l - b24 - {_E0_MIN[2]}", 1: "b12", 2: "b13 + max{b23-b12, 0}"},
    3: {0: f"l - b36 - {_E0_MIN[3]}", 1: "b12", 2: "b13 + max{b23-b12, 0}",
        3: "b14 + max{b24-b13, b34+b24-b13-b23, 0}"},
    4: {0: f"l - b48 - {_E0_MIN[4]}", 1: "b12", 2: "b13 + max{b23-b12, 0}",
        3: "b14 + max{b24-b13, b24+b34-b13-b23, 0}",
        4: "b15 + max{b25-b14, b25+b35-b24-b14, b25+b35+b45-b14-b24-b34, 0}"},
}

PHI = {
    2: {0: f"l - b11 - {_E0_MIN[2]}", 1: "b23", 2: "b22 + max{b12-b23, 0}"},
    3: {0: f"l - b11 - {_E0_MIN[3]}", 1: "b35", 2: "b22 - b33 + max{b12-b23, 0}",
        3: "b33 + max{b23-b34, b13+b23-b24-b34, 0}"},
    4: {0: f"l - b11 - {_E0_MIN[4]}", 1: "b47", 2: "b46 + max{b12-b23, 0}",
        3: "b45 + max{b23-b34, b13+b23-b24-b34, 0}",  # erratum
        4: "b44 + max{b34-b45, b24+b34-b35-b45, b14+b24+b34-b25-b35-b45, 0}"},  # erratum
}

PRINTED_PHI = {
    (4, 3): "b45 + max{b13-b24, b13+b23-b24-b34, 0}",
    (4, 4): "b44 + max{b14-b25, b14+b24-b25-b35, b14+b24+b34-b25-b35-b45, 0}",
}

WT = {
    2: {0: "b24 - b11", 1: "b23 - b12", 2: "b12 + b22 - b13 - b23"},
    3: {0: "b36 - b11", 1: "b35 - b12", 2: "b22 - b33 - b25 + b14 + b12 - b23",
        3: "b33 - b14 + b13 - b24 + b23 - b34"},
    4: {0: "b48 - b11", 1: "b47 - b12", 2: "b46 - b13 + b12 - b23",
        3: "b45 - b14 + b13 - b24 + b23 - b34",
        4: "b44 - b15 + b14 - b25 + b24 - b35 + b34 - b45"},
}
