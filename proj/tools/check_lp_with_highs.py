#!/usr/bin/env python3
"""Solve an exported LP file with an independent MILP solver (HiGHS via
scipy) and optionally compare the optimum against an expected value.

Usage: check_lp_with_highs.py MODEL.lp [--expect OBJ] [--tol 1e-6]

Supports the LP subset this project emits: a single Minimize objective,
<= / = / >= rows, and a Binaries section. Exit status 0 on success (and on
match when --expect is given).
"""

import argparse
import re
import sys

import numpy as np
from scipy import sparse
from scipy.optimize import LinearConstraint, milp

TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[-+]|[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?|[<>]?=|:")


def tokenize(text):
    for line in text.splitlines():
        line = line.split("\\")[0]
        yield from TOKEN.findall(line)


def parse_lp(text):
    tokens = list(tokenize(text))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    sections = {"minimize", "subject", "binaries", "bounds", "end"}

    def at_section():
        tok = peek()
        return tok is None or tok.lower() in sections

    assert take().lower() == "minimize", "expected Minimize"

    def parse_expression():
        terms = {}
        sign = 1.0
        coeff = None
        while not at_section() and peek() not in ("<=", ">=", "="):
            tok = take()
            if tok == ":":
                terms.clear()
                sign, coeff = 1.0, None
                continue
            if tok == "+":
                sign, coeff = 1.0, None
            elif tok == "-":
                sign, coeff = -1.0, None
            elif re.fullmatch(r"[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?", tok):
                coeff = float(tok)
            else:
                value = sign * (coeff if coeff is not None else 1.0)
                terms[tok] = terms.get(tok, 0.0) + value
                sign, coeff = 1.0, None
        return terms

    objective = parse_expression()

    rows = []
    if peek() and peek().lower() == "subject":
        take()
        if peek() and peek().lower() == "to":
            take()
        while not at_section():
            terms = parse_expression()
            rel = take()
            rhs_sign = 1.0
            tok = take()
            if tok in ("-", "+"):
                rhs_sign = -1.0 if tok == "-" else 1.0
                tok = take()
            rows.append((terms, rel, rhs_sign * float(tok)))

    binaries = set()
    while peek() is not None:
        tok = take()
        if tok.lower() in ("binaries", "binary", "bin", "end", "to"):
            continue
        binaries.add(tok)

    variables = sorted(set(objective) | {v for terms, _, _ in rows for v in terms} | binaries)
    index = {v: i for i, v in enumerate(variables)}

    c = np.zeros(len(variables))
    for v, coeff in objective.items():
        c[index[v]] = coeff

    data, row_idx, col_idx, lower, upper = [], [], [], [], []
    for r, (terms, rel, rhs) in enumerate(rows):
        for v, coeff in terms.items():
            data.append(coeff)
            row_idx.append(r)
            col_idx.append(index[v])
        lower.append(rhs if rel in ("=", ">=") else -np.inf)
        upper.append(rhs if rel in ("=", "<=") else np.inf)

    a = sparse.csr_matrix((data, (row_idx, col_idx)), shape=(len(rows), len(variables)))
    return c, a, np.array(lower), np.array(upper), variables


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("lp_file")
    parser.add_argument("--expect", type=float)
    parser.add_argument("--tol", type=float, default=1e-6)
    args = parser.parse_args()

    with open(args.lp_file) as handle:
        c, a, lower, upper, variables = parse_lp(handle.read())

    result = milp(
        c=c,
        constraints=LinearConstraint(a, lower, upper),
        integrality=np.ones(len(c)),
        bounds=(0, 1),
    )
    if not result.success:
        print(f"solver failed: {result.message}")
        return 2

    print(f"external optimum: {result.fun:.6f} over {len(variables)} variables")
    if args.expect is not None and abs(result.fun - args.expect) > args.tol:
        print(f"MISMATCH: expected {args.expect}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
