#!/usr/bin/env python3
"""Regenerate the committed DSL fixtures in fixtures/.

Every fixture is printed with the canonical printer, so the committed
files double as parse/print idempotence tests.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from braidalg.algebra import catalog
from braidalg.braid import bracket_braiding, commutator_braiding, cx_functor
from braidalg.dsl import (
    parse,
    print_catbraiding_doc,
    print_document,
    print_group_doc,
    print_xbraiding_doc,
)
from braidalg.fields import GF, QQ
from braidalg.groupx import conjugation_example, group_catalog


def main():
    outdir = os.path.join(os.path.dirname(__file__), "..", "fixtures")
    os.makedirs(outdir, exist_ok=True)

    def write(fname, text):
        # store the canonical fixed point of parse/print so the
        # committed bytes equal their own re-print
        text = print_document(parse(text))
        path = os.path.join(outdir, fname)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print("wrote", fname)

    for label, cat_name in (
        ("mat2", "Mat(2)"),
        ("mat3", "Mat(3)"),
        ("upper3", "Upper(3)"),
    ):
        b = commutator_braiding(catalog(cat_name, QQ))
        write(f"{label}_braided.alg", print_xbraiding_doc(b, label))

    for label, cat_name in (("sl2", "sl2"), ("heis3", "Heis3"), ("gl2", "gl2")):
        b = bracket_braiding(catalog(cat_name, QQ))
        write(f"{label}_braided.alg", print_xbraiding_doc(b, label))

    # bar constructions: braided categorical algebras over Q and F5
    for label, f in (("mat2_cat", QQ), ("mat2_f5_cat", GF(5))):
        cb = cx_functor(commutator_braiding(catalog("Mat(2)", f)))
        write(f"{label}.alg", print_catbraiding_doc(cb, label))
    cb = cx_functor(commutator_braiding(catalog("Upper(3)", QQ)))
    write("upper3_cat.alg", print_catbraiding_doc(cb, "upper3_cat"))

    # characteristic-two guard input
    b = commutator_braiding(catalog("Mat(2)", GF(2)))
    write("mat2_f2_braided.alg", print_xbraiding_doc(b, "mat2_f2"))

    # group fixtures: S3 conjugation crossed module with commutator brace
    g = group_catalog("S3")
    gx = conjugation_example(g)
    lines = ["field Q", print_group_doc(g, "S3").rstrip()]
    rows = ",\n    ".join(" ".join(str(v) for v in row) for row in gx.action)
    brows = ",\n    ".join(" ".join(str(v) for v in row) for row in gx.brace)
    lines.append("groupxmod S3_conj {")
    lines.append("  g = S3;")
    lines.append("  h = S3;")
    lines.append(f"  action =\n    {rows};")
    lines.append(f"  boundary = {' '.join(str(v) for v in gx.boundary)};")
    lines.append(f"  brace =\n    {brows};")
    lines.append("}")
    write("s3_group.alg", "\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
