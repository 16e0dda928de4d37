import glob
import json
import os
import re

import pytest

from braidalg.cli import main
from braidalg.dsl import parse, print_document
from braidalg.errors import (
    DslError,
    DslSyntaxError,
    UnknownReference,
)

from conftest import FIXTURES, MUTATIONS


def all_fixture_files():
    files = sorted(glob.glob(os.path.join(FIXTURES, "*.alg")))
    files += sorted(glob.glob(os.path.join(MUTATIONS, "*.alg")))
    return files


@pytest.mark.parametrize("path", all_fixture_files(), ids=os.path.basename)
def test_parse_print_idempotent(path):
    with open(path, "r", encoding="utf-8") as fh:
        source = fh.read()
    once = print_document(parse(source))
    twice = print_document(parse(once))
    assert once == twice


@pytest.mark.parametrize(
    "name", ("mat2_braided.alg", "sl2_braided.alg", "s3_group.alg")
)
def test_committed_fixtures_are_canonical(name):
    path = os.path.join(FIXTURES, name)
    with open(path, "r", encoding="utf-8") as fh:
        source = fh.read()
    assert print_document(parse(source)) == source


def test_validate_valid_fixture_exits_zero(capsys):
    assert main(["validate", os.path.join(FIXTURES, "mat2_braided.alg")]) == 0
    out = capsys.readouterr().out
    assert "BAs1: pass" in out


def test_validate_mutation_exits_one(capsys):
    path = os.path.join(MUTATIONS, "bas3.alg")
    assert main(["validate", path]) == 1
    out = capsys.readouterr().out
    assert "BAs3: fail" in out


def test_validate_missing_file_exits_two(capsys):
    assert main(["validate", os.path.join(FIXTURES, "no_such.alg")]) == 2


def test_syntax_error_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("field Q algebra A basis x { x*x = ; }")
    assert main(["validate", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_json_reports_are_byte_identical(capsys):
    path = os.path.join(FIXTURES, "gl2_braided.alg")
    assert main(["report", path]) == 0
    first = capsys.readouterr().out
    assert main(["report", path]) == 0
    second = capsys.readouterr().out
    assert first == second
    items = json.loads(first)
    assert all(i["status"] == "pass" for i in items)
    assert all("witness" not in i for i in items)


def test_failing_report_carries_witness(capsys):
    path = os.path.join(MUTATIONS, "blie3.alg")
    assert main(["report", path, "--subject", "blie3"]) == 1
    items = json.loads(capsys.readouterr().out)
    fails = [i for i in items if i["status"] == "fail"]
    assert fails and all("witness" in i for i in fails)
    for i in fails:
        assert i["witness"]["lhs"] != i["witness"]["rhs"]


def test_roundtrip_command(capsys):
    assert main(["roundtrip", os.path.join(FIXTURES, "mat2_braided.alg")]) == 0
    out = capsys.readouterr().out
    assert "alpha" in out


def test_construct_emits_reparseable_output(tmp_path, capsys):
    out = tmp_path / "cx.alg"
    rc = main(
        [
            "construct",
            "cx",
            os.path.join(FIXTURES, "mat2_braided.alg"),
            "--subject",
            "mat2",
            "-o",
            str(out),
        ]
    )
    assert rc == 0
    doc = parse(out.read_text())
    assert main(["validate", str(out)]) == 0


def test_construct_xliefy_char_two_guard(capsys):
    rc = main(
        [
            "construct",
            "xliefy",
            os.path.join(FIXTURES, "mat2_f2_braided.alg"),
            "--subject",
            "mat2_f2",
        ]
    )
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_reference_position():
    src = "field Q\nalgebra A basis x {\n  x*x = y;\n}\n"
    with pytest.raises((UnknownReference, DslSyntaxError)) as exc:
        parse(src)
    assert getattr(exc.value, "line", 3) == 3


def test_duplicate_product_rejected():
    src = "field Q\nalgebra A basis x {\n  x*x = x;\n  x*x = 2 x;\n}\n"
    with pytest.raises(DslError):
        parse(src)


def test_antisymmetric_completion():
    src = (
        "field Q\n"
        "algebra L basis x, y, z antisymmetric {\n"
        "  x*y = z;\n"
        "}\n"
    )
    doc = parse(src)
    _, alg = doc.lookup("L")
    assert alg.mult.on_basis(1, 0) == tuple(
        alg.field.neg(c) for c in alg.mult.on_basis(0, 1)
    )


def test_explicit_k_must_match_forced_formula(tmp_path):
    base = os.path.join(MUTATIONS, "ast1.alg")
    with open(base, "r", encoding="utf-8") as fh:
        src = fh.read()
    # append a bogus explicit k referencing existing maps
    m = re.search(r"  e = (\w+);\n", src)
    assert m is not None
    ref = m.group(1)
    src = src.replace(m.group(0), m.group(0) + f"  k = {ref}, {ref};\n", 1)
    with pytest.raises(DslError):
        parse(src)


def test_validate_unknown_subject_exits_two(capsys):
    path = os.path.join(FIXTURES, "mat2_braided.alg")
    assert main(["validate", path, "--subject", "nonexistent"]) == 2
