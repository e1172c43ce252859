#!/usr/bin/env python3
"""Solve an LP-format model with scipy and write a plain solution file.

Usage: scipy_milp.py MODEL.lp SOLUTION.txt [--time-limit S]

Reads the LP subset emitted by the pcenter tools (Minimize / Subject To
/ Bounds / Generals / Binaries / End, one constraint per line) and
writes three-part output: a "status" line, an "objective" line, then
one "<name> <value>" line per variable. Pairs with the "plain" solver
dialect, e.g.

    pcenter solve ... --solver-cmd 'scipy_milp.py {model} {solution}' \
        --solver-dialect plain
"""

import argparse
import re
import sys

import numpy as np
from scipy.optimize import LinearConstraint, Bounds as VarBounds, milp

TERM = re.compile(r"([+-])?\s*([0-9.eE+-]+)\s+([A-Za-z][A-Za-z0-9_]*)")
SECTIONS = ("subject to", "bounds", "generals", "binaries", "end")


def parse_terms(text):
    """[(coeff, name)] from '3 y_1 + 1 r - 2 y_2'."""
    out = []
    pos = 0
    while pos < len(text):
        m = TERM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse term at '{text[pos:]}'")
        sign = -1.0 if m.group(1) == "-" else 1.0
        out.append((sign * float(m.group(2)), m.group(3)))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return out


def parse_lp(text):
    objective = []
    rows = []  # (terms, sense, rhs)
    bounds = {}  # name -> [lb, ub]
    integer = set()
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        low = line.lower()
        if low == "minimize":
            section = "objective"
            continue
        if low in SECTIONS:
            section = low
            continue
        if section == "objective":
            body = line.split(":", 1)[1].strip() if ":" in line else line
            objective.extend(parse_terms(body))
        elif section == "subject to":
            body = line.split(":", 1)[1].strip()
            m = re.search(r"(<=|>=|=)\s*([0-9.eE+-]+)\s*$", body)
            if not m:
                raise ValueError(f"constraint without sense: '{line}'")
            rows.append((parse_terms(body[: m.start()].strip()), m.group(1), float(m.group(2))))
        elif section == "bounds":
            parts = line.split()
            if len(parts) == 3:  # name <= v  |  name >= v
                name, op, v = parts
                b = bounds.setdefault(name, [0.0, np.inf])
                if op == "<=":
                    b[1] = float(v)
                else:
                    b[0] = float(v)
            elif len(parts) == 5:  # lb <= name <= ub
                bounds[parts[2]] = [float(parts[0]), float(parts[4])]
            else:
                raise ValueError(f"unsupported bounds line: '{line}'")
        elif section == "generals":
            integer.add(line)
        elif section == "binaries":
            integer.add(line)
            b = bounds.setdefault(line, [0.0, 1.0])
            b[0] = max(b[0], 0.0)
            b[1] = min(b[1], 1.0)
    return objective, rows, bounds, integer


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("model")
    ap.add_argument("solution")
    ap.add_argument("--time-limit", type=float, default=None)
    args = ap.parse_args()

    with open(args.model, encoding="utf-8") as f:
        objective, rows, bounds, integer = parse_lp(f.read())

    names = []
    index = {}

    def var(name):
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for _, name in objective:
        var(name)
    for terms, _, _ in rows:
        for _, name in terms:
            var(name)
    for name in list(bounds) + sorted(integer):
        var(name)

    n = len(names)
    c = np.zeros(n)
    for coeff, name in objective:
        c[index[name]] += coeff

    constraints = []
    if rows:
        a = np.zeros((len(rows), n))
        lo = np.full(len(rows), -np.inf)
        hi = np.full(len(rows), np.inf)
        for r, (terms, sense, rhs) in enumerate(rows):
            for coeff, name in terms:
                a[r, index[name]] += coeff
            if sense in ("<=", "="):
                hi[r] = rhs
            if sense in (">=", "="):
                lo[r] = rhs
        constraints.append(LinearConstraint(a, lo, hi))

    lb = np.zeros(n)
    ub = np.full(n, np.inf)
    for name, (blo, bhi) in bounds.items():
        lb[index[name]] = blo
        ub[index[name]] = bhi
    integrality = np.zeros(n)
    for name in integer:
        integrality[index[name]] = 1

    options = {}
    if args.time_limit is not None:
        options["time_limit"] = args.time_limit
    res = milp(c, constraints=constraints, bounds=VarBounds(lb, ub),
               integrality=integrality, options=options)

    status = {0: "optimal", 1: "time_limit", 2: "infeasible"}.get(res.status, "error")
    with open(args.solution, "w", encoding="utf-8") as out:
        out.write(f"status {status}\n")
        if res.x is not None:
            out.write(f"objective {res.fun:.17g}\n")
            for name in names:
                out.write(f"{name} {res.x[index[name]]:.17g}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
