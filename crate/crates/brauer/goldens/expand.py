"""Expand transcription.txt into the JSON golden files.

Uses sympy so the expansion is independent of the Rust arithmetic.
Run from this directory: python3 expand.py
"""

import json
import re
from pathlib import Path

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

D = sympy.Symbol("d")
TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)
ORDER = {"N": 0, "S": 1, "P": 2}


def expr(text):
    return parse_expr(text, local_dict={"d": D}, transformations=TRANSFORMS)


def coeff(text):
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr(text))))
    num, den = sympy.Poly(num, D), sympy.Poly(den, D)
    scale = sympy.ilcm(*[sympy.fraction(c)[1] for c in num.all_coeffs() + den.all_coeffs()])
    num, den = num * scale, den * scale
    g = sympy.igcd(*[int(c) for c in num.all_coeffs() + den.all_coeffs()])
    num, den = num.quo_ground(g), den.quo_ground(g)
    if den.LC() < 0:
        num, den = -num, -den
    if num.is_zero:
        return {"num": [], "den": [1]}
    asc = lambda p: [int(c) for c in reversed(p.all_coeffs())]
    return {"num": asc(num), "den": asc(den)}


def bracelet(row):
    words = [row[i:] + row[:i] for i in range(len(row))]
    rev = row[::-1]
    words += [rev[i:] + rev[:i] for i in range(len(rev))]
    return min(words, key=lambda w: [ORDER[c] for c in w])


def tableau(text):
    rows = [bracelet(r.strip()) for r in text.split(",")]
    rows.sort(key=lambda r: (-len(r), [ORDER[c] for c in r]))
    return rows


def sort_key(rows):
    props = sum(r.count("P") for r in rows)
    return (props, [-len(r) for r in rows], [[ORDER[c] for c in r] for r in rows])


def blocks(path):
    current = None
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = re.match(r"\[(\w+)\]\s*(.*)", line)
        if m:
            attrs = dict(kv.split("=") if "=" in kv else (kv, True) for kv in m.group(2).split())
            current = {"id": m.group(1), "attrs": attrs, "lines": []}
            yield current
        else:
            current["lines"].append([f.strip() for f in line.split("|")])


def element(block):
    terms = []
    for label, tab, text in block["lines"]:
        terms.append({"tableau": tableau(tab), "coeff": coeff(text)})
    terms.sort(key=lambda t: sort_key(t["tableau"]))
    return {"n": int(block["attrs"]["n"]), "terms": terms}


def system(block):
    head, *rows = block["lines"]
    assert head[0] == "unknowns"
    out = {"unknowns": [tableau(t) for t in head[1:]], "rows": []}
    for kind, coeffs, rhs in rows:
        assert kind == "row"
        out["rows"].append({"coeffs": [coeff(c) for c in coeffs.split(",")], "rhs": coeff(rhs)})
    return out


LABELS_HEAD = """# Label map

The worked examples name classes by printed labels such as `t2_3` or `u4_17`
(superscript = number of propagating lines, subscript = position in the
printed list). The golden JSON files key coefficients by canonical tableau
instead: each row is the least rotation or reflection of its word under
N < S < P, and rows are sorted by length, then by word.

Class labels are `s` for n = 2, `t` for n = 4 and `u` for n = 6. In
`transcription.txt` the n = 6 lines carry the coefficient name instead: `a`,
`b` and `g` for the idempotents with ell = 0, 2 and 4, so `b2_5` is the
coefficient of class `u2_5`. The identity diagram is written `1`.

| class | printed rows | JSON key |
|---|---|---|
"""


def labels(all_blocks):
    seen = {}
    for block in all_blocks:
        if "ell" in block["attrs"]:
            continue
        for label, tab, _ in block["lines"]:
            n = int(block["attrs"]["n"])
            key = f"1 (n = {n})" if label == "1" else "u" + label[1:] if label[0] in "abg" else label
            seen.setdefault(key, (tab, json.dumps(tableau(tab))))
    rows = [f"| {k} | `{v[0]}` | `{v[1]}` |" for k, v in seen.items()]
    return LABELS_HEAD + "\n".join(rows) + "\n"


def main():
    here = Path(__file__).parent
    all_blocks = list(blocks(here / "transcription.txt"))
    for block in all_blocks:
        body = system(block) if "ell" in block["attrs"] else element(block)
        (here / f"{block['id']}.json").write_text(json.dumps(body, indent=2) + "\n")
    (here / "LABELS.md").write_text(labels(all_blocks))


if __name__ == "__main__":
    main()
