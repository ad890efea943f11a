#!/usr/bin/env python3
"""Reference reduced Groebner bases computed with sympy.

The problem text comes from `sigbasis render`, so the inputs match the
builtins exactly; the bases themselves are computed here, independently of
the C++ code. Each basis is checked by reducing every S-polynomial to zero
before it is written.

usage: generate_fixtures.py SIGBASIS_BINARY OUTPUT_DIR
"""
import itertools
import json
import subprocess
import sys
from pathlib import Path

import sympy
from sympy import Poly, Rational, groebner, lcm, reduced, symbols
from sympy.polys.orderings import grevlex

SYSTEMS = ["mora", "katsura4", "katsura5", "katsura6"]


def parse_rendered(text):
    spec = {"gens": []}
    in_gens = False
    for line in text.splitlines():
        if in_gens:
            spec["gens"].append(line.strip())
            continue
        key, _, value = line.partition(":")
        value = value.strip()
        if key == "gens":
            in_gens = True
        else:
            spec[key] = value
    return spec


def largest_first(spec):
    names = spec["vars"].split()
    words = spec["order"].split()
    if len(words) > 1:
        names = words[1].split("<")
    return list(reversed(names))


def format_monomial(exps, names):
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p, names):
    out = ""
    for k, (exps, c) in enumerate(p.terms(order="grevlex")):
        c = Rational(c)
        mono = format_monomial(exps, names)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


def spolys_reduce_to_zero(basis, gens_syms):
    polys = [Poly(b, *gens_syms) for b in basis]
    for f, g in itertools.combinations(polys, 2):
        lf = Poly(f.LM(order="grevlex").as_expr(), *gens_syms)
        lg = Poly(g.LM(order="grevlex").as_expr(), *gens_syms)
        m = lcm(lf.as_expr(), lg.as_expr())
        s = (sympy.expand(m / lf.as_expr()) * f.as_expr() / f.LC(order="grevlex")
             - sympy.expand(m / lg.as_expr()) * g.as_expr() / g.LC(order="grevlex"))
        _, r = reduced(sympy.expand(s), basis, *gens_syms, order="grevlex")
        if r != 0:
            return False
    return True


def main():
    binary, outdir = sys.argv[1], Path(sys.argv[2])
    for name in SYSTEMS:
        text = subprocess.run([binary, "render", "--builtin", name], check=True,
                              capture_output=True, text=True).stdout
        spec = parse_rendered(text)
        names = largest_first(spec)
        syms = symbols(names)
        local = dict(zip(names, syms))
        polys = [sympy.sympify(g.replace("^", "**"), locals=local) for g in spec["gens"]]
        g = groebner(polys, *syms, order="grevlex")
        basis = sorted(g.exprs, key=lambda e: grevlex(Poly(e, *syms).monoms(order="grevlex")[0]),
                       reverse=True)
        if not spolys_reduce_to_zero(basis, syms):
            sys.exit(f"{name}: S-pair check failed")
        fixture = {
            "system": name,
            "order": spec["order"],
            "field": spec["field"],
            "reduced_basis": [format_poly(Poly(b, *syms), names) for b in basis],
            "lm_set": [format_monomial(Poly(b, *syms).monoms(order="grevlex")[0], names) for b in basis],
        }
        path = outdir / f"{name}.json"
        path.write_text(json.dumps(fixture, indent=2, ensure_ascii=False) + "\n")
        print(f"{path}: {len(basis)} elements")


if __name__ == "__main__":
    main()
