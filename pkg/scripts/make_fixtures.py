"""Write the reference product tables of A_k, B_{k1,k2}, C_k as canonical JSON fixtures.

Entries are transcribed by hand in factored form, one row (left factor) at a
time; the script only parses and canonicalises them.  Run from the repo root:

    python scripts/make_fixtures.py
"""

import json
import sys
from pathlib import Path

from lssa.core import ProductTable, table_to_json
from lssa.scalars import parse_scalar
from lssa.superlie import make_algebra

X = ["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"]

A = {
    "x1": {"x2": {"x3": "(k+2)/(2*(k+1))", "x4": "1/(2*(k+1))"}, "x3": {"x1": "-1"},
           "x4": {"x1": "k+2"}, "y1": {"y2": "-1"}, "y3": {"y2": "-(k+3)/4"},
           "y4": {"y1": "(k+3)*(k-1)/(4*(k+1))", "y3": "(k+3)/(k+1)"}},
    "x2": {"x1": {"x3": "-k/(2*(k+1))", "x4": "1/(2*(k+1))"}, "x3": {"x2": "1"}, "x4": {"x2": "k"},
           "y1": {"y4": "4/(k+3)"}, "y2": {"y1": "-(k-1)/(k+1)", "y3": "-4/(k+1)"}, "y3": {"y4": "1"}},
    "x3": {"x1": {"x1": "1"}, "x2": {"x2": "-1"}, "x3": {"x3": "1/(k+1)", "x4": "1/(k+1)"},
           "x4": {"x3": "k*(k+2)/(k+1)", "x4": "-1/(k+1)"}, "y2": {"y2": "2"}, "y4": {"y4": "-2"}},
    "x4": {"x1": {"x1": "k+2"}, "x2": {"x2": "k"}, "x3": {"x3": "k*(k+2)/(k+1)", "x4": "-1/(k+1)"},
           "x4": {"x3": "-k*(k+2)/(k+1)", "x4": "(k^2+2*k+2)/(k+1)"},
           "y1": {"y1": "k+1"}, "y2": {"y2": "k+1"}, "y3": {"y3": "k+1"}, "y4": {"y4": "k+1"}},
    "y1": {"x2": {"y4": "4/(k+3)"}, "x3": {"y1": "1"}, "x4": {"y1": "k"}, "y2": {"x1": "-2"},
           "y3": {"x4": "1/4", "x3": "-k/4"}},
    "y2": {"x2": {"y1": "2/(k+1)", "y3": "-4/(k+1)"}, "x3": {"y2": "1"}, "x4": {"y2": "k"},
           "y1": {"x1": "2"}, "y3": {"x1": "1"},
           "y4": {"x4": "(k+3)/(4*(k+1))", "x3": "-k*(k+3)/(4*(k+1))"}},
    "y3": {"x1": {"y2": "-(k+3)/4"}, "x3": {"y3": "-1"}, "x4": {"y3": "k+2"},
           "y1": {"x3": "(k+2)/4", "x4": "1/4"}, "y4": {"x2": "(k+3)*(k-1)/8"}},
    "y4": {"x1": {"y1": "(k+3)*(k-1)/(4*(k+1))", "y3": "2/(k+1)"}, "x3": {"y4": "-1"},
           "x4": {"y4": "k+2"}, "y1": {"x2": "1"},
           "y2": {"x3": "(k-1)*(k+2)/(4*(k+1))", "x4": "(k-1)/(4*(k+1))"},
           "y3": {"x2": "-(k+3)*(k-1)/8"}},
}

S = "(k1+k2+2)"
B = {
    "x1": {"x2": {"x3": f"(k2+1)/{S}", "x4": f"1/{S}"}, "x3": {"x1": "-1"}, "x4": {"x1": "k2+1"}},
    "x2": {"x1": {"x3": f"-(k1+1)/{S}", "x4": f"1/{S}"}, "x3": {"x2": "1"}, "x4": {"x2": "k1+1"}},
    "x3": {"x1": {"x1": "1"}, "x2": {"x2": "-1"}, "x3": {"x3": f"(k2-k1)/{S}", "x4": f"2/{S}"},
           "x4": {"x3": f"2*(k1+1)*(k2+1)/{S}", "x4": f"(k1-k2)/{S}"}},
    "x4": {"x1": {"x1": "k2+1"}, "x2": {"x2": "k1+1"},
           "x3": {"x3": f"2*(k1+1)*(k2+1)/{S}", "x4": f"(k1-k2)/{S}"},
           "x4": {"x3": f"(k1+1)*(k2+1)*(k1-k2)/{S}", "x4": f"((k1+1)^2+(k2+1)^2)/{S}"},
           "y1": {"y1": "k1+2"}, "y2": {"y2": "k2+2"}, "y3": {"y3": "k2"}, "y4": {"y4": "k1"}},
    "y1": {"x1": {"y2": "1"}, "x3": {"y1": "1"}, "x4": {"y1": "k1+1"},
           "y3": {"x4": f"k2/(2*{S})", "x3": f"-k2*(k1+1)/(2*{S})"}, "y4": {"x2": "-k1/2"}},
    "y2": {"x2": {"y1": "1"}, "x3": {"y2": "-1"}, "x4": {"y2": "k2+1"}, "y3": {"x1": "-k2/2"},
           "y4": {"x3": f"k1*(k2+1)/(2*{S})", "x4": f"k1/(2*{S})"}},
    "y3": {"x2": {"y4": "-1"}, "x3": {"y3": "-1"}, "x4": {"y3": "k2+1"},
           "y1": {"x3": f"(k1+2)*(k2+1)/(2*{S})", "x4": f"(k1+2)/(2*{S})"}, "y2": {"x1": "(k2+2)/2"}},
    "y4": {"x1": {"y3": "-1"}, "x3": {"y4": "1"}, "x4": {"y4": "k1+1"}, "y1": {"x2": "(k1+2)/2"},
           "y2": {"x4": f"(k2+2)/(2*{S})", "x3": f"-(k2+2)*(k1+1)/(2*{S})"}},
}

C = {
    "x1": {"x2": {"x4": "1/(2*(k+1))", "x1": "-1/(2*(k+1))", "x3": "1/2"}, "x3": {"x1": "-1"},
           "x4": {"x1": "k+1"}},
    "x2": {"x1": {"x4": "1/(2*(k+1))", "x1": "-1/(2*(k+1))", "x3": "-1/2"}, "x3": {"x2": "1"},
           "x4": {"x4": "1/(2*(k+1))", "x1": "-1/(2*(k+1))", "x2": "k+1", "x3": "-1/2"}},
    "x3": {"x1": {"x1": "1"}, "x2": {"x2": "-1"}, "x3": {"x4": "1/(k+1)", "x1": "-1/(k+1)"},
           "x4": {"x1": "1", "x3": "k+1"}},
    "x4": {"x1": {"x1": "k+1"}, "x2": {"x4": "1/(2*(k+1))", "x1": "-1/(2*(k+1))", "x2": "k+1", "x3": "-1/2"},
           "x3": {"x1": "1", "x3": "k+1"}, "x4": {"x1": "k+1", "x4": "k+1"},
           "y1": {"y1": "k+2", "y2": "1"}, "y2": {"y2": "k+2"}, "y3": {"y3": "k"},
           "y4": {"y4": "k", "y3": "-1"}},
    "y1": {"x1": {"y2": "1"}, "x3": {"y1": "1"}, "x4": {"y1": "k+1", "y2": "1"},
           "y3": {"x4": "k/(4*(k+1))", "x1": "-k/(4*(k+1))", "x3": "-k/4"},
           "y4": {"x1": "1/(4*(k+1))", "x4": "-1/(4*(k+1))", "x2": "-k/2", "x3": "1/4"}},
    "y2": {"x2": {"y1": "1"}, "x3": {"y2": "-1"}, "x4": {"y2": "k+1"}, "y3": {"x1": "-k/2"},
           "y4": {"x1": "(k+2)/(4*(k+1))", "x3": "k/4", "x4": "k/(4*(k+1))"}},
    "y3": {"x2": {"y4": "-1"}, "x3": {"y3": "-1"}, "x4": {"y3": "k+1"},
           "y1": {"x1": "k/(4*(k+1))", "x3": "(k+2)/4", "x4": "(k+2)/(4*(k+1))"}, "y2": {"x1": "(k+2)/2"}},
    "y4": {"x1": {"y3": "-1"}, "x3": {"y4": "1"}, "x4": {"y4": "k+1", "y3": "-1"},
           "y1": {"x4": "1/(4*(k+1))", "x1": "-1/(4*(k+1))", "x2": "(k+2)/2", "x3": "-1/4"},
           "y2": {"x4": "(k+2)/(4*(k+1))", "x1": "-(k+2)/(4*(k+1))", "x3": "-(k+2)/4"}},
}

TABLES = {"A": (A, ("k",)), "B": (B, ("k1", "k2")), "C": (C, ("k",))}


def build(rows: dict, names: tuple) -> ProductTable:
    alg = make_algebra("sl", 2, 1)
    coeffs = {}
    for left, row in rows.items():
        for right, entry in row.items():
            coeffs[(X.index(left), X.index(right))] = {
                X.index(lab): parse_scalar(s, names) for lab, s in entry.items()}
    return ProductTable(alg, coeffs)


def main(out_dir: str = "src/lssa/fixtures") -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for which, (rows, names) in TABLES.items():
        data = table_to_json(build(rows, names), names)
        data["version"] = 1
        path = out / f"table_{which}.json"
        path.write_text(json.dumps(data, indent=1) + "\n")
        print(f"wrote {path} ({len(data['products'])} nonzero products)")


if __name__ == "__main__":
    main(*sys.argv[1:])
