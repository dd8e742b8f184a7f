#!/usr/bin/env python3
"""Solve an exported LP model with scipy's HiGHS backend.

Reads the LP text layout produced by `hhcrsp export-mip` (Minimize /
Subject To / Bounds / Binary / End) and reports the optimal objective,
so exported models can be cross-checked against the enumeration oracle:

    hhcrsp export-mip --instance tiny.hhcrsp --out tiny.lp
    python3 tools/solve_lp.py tiny.lp
    hhcrsp oracle --instance tiny.hhcrsp --kind routing
"""

import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import lil_matrix

TERM = re.compile(r"([+-]?)\s*(\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z][\w]*)")


def parse_expr(text, coeffs):
    sign = 1.0
    for match in TERM.finditer(text):
        s, coeff, name = match.groups()
        sign = -1.0 if s == "-" else 1.0
        value = float(coeff) if coeff else 1.0
        coeffs[name] = coeffs.get(name, 0.0) + sign * value


def parse_lp(path):
    sections = {"objective": [], "rows": [], "bounds": [], "binary": []}
    section = None
    with open(path) as handle:
        for raw in handle:
            line = raw.rstrip("\n")
            if not line or line.lstrip().startswith("\\"):
                continue
            stripped = line.strip()
            if stripped == "Minimize":
                section = "objective"
                continue
            if stripped == "Subject To":
                section = "rows"
                continue
            if stripped == "Bounds":
                section = "bounds"
                continue
            if stripped == "Binary":
                section = "binary"
                continue
            if stripped == "End":
                break
            if section is None:
                continue
            if section in ("rows", "objective") and ":" not in stripped \
                    and sections[section]:
                sections[section][-1] += " " + stripped  # continuation
            else:
                sections[section].append(stripped)
    return sections


def main():
    if len(sys.argv) != 2:
        print(__doc__)
        return 2
    sections = parse_lp(sys.argv[1])

    objective = {}
    for line in sections["objective"]:
        parse_expr(line.split(":", 1)[1], objective)

    rows = []  # (coeffs, lo, hi)
    for line in sections["rows"]:
        body = line.split(":", 1)[1]
        for rel in ("<=", ">=", "="):
            pos = body.rfind(rel)
            if pos != -1:
                lhs, rhs = body[:pos], float(body[pos + len(rel):])
                coeffs = {}
                parse_expr(lhs, coeffs)
                lo = rhs if rel in (">=", "=") else -np.inf
                hi = rhs if rel in ("<=", "=") else np.inf
                rows.append((coeffs, lo, hi))
                break

    names = sorted(
        set(objective) | {n for c, _, _ in rows for n in c}
        | {b.split()[0] for b in sections["bounds"]}
        | set(sections["binary"]))
    index = {n: i for i, n in enumerate(names)}
    n = len(names)

    c = np.zeros(n)
    for name, coeff in objective.items():
        c[index[name]] = coeff

    a = lil_matrix((len(rows), n))
    lo = np.zeros(len(rows))
    hi = np.zeros(len(rows))
    for r, (coeffs, row_lo, row_hi) in enumerate(rows):
        for name, coeff in coeffs.items():
            a[r, index[name]] = coeff
        lo[r], hi[r] = row_lo, row_hi

    lower = np.zeros(n)
    upper = np.full(n, np.inf)
    for entry in sections["bounds"]:
        name, rel, value = entry.split()
        if rel == ">=":
            lower[index[name]] = float(value)
        elif rel == "<=":
            upper[index[name]] = float(value)
    integrality = np.zeros(n)
    for name in sections["binary"]:
        integrality[index[name]] = 1
        upper[index[name]] = 1

    result = milp(c=c,
                  constraints=LinearConstraint(a.tocsr(), lo, hi),
                  bounds=Bounds(lower, upper),
                  integrality=integrality)
    if not result.success:
        print("solve failed:", result.message)
        return 1
    print(f"optimal {result.fun:.10f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
