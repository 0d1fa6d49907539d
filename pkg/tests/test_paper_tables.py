import shutil

import pytest

from glring.errors import PaperParseError
from glring.lambda_ring import Mode, RingElement
from glring.paper_tables import (
    load_tables,
    parse_eqnarray,
    parse_paper_notation,
    parse_tau_tables,
    verify_paper_tables,
)


def test_parse_examples():
    x = parse_paper_notation("(1)+(2)+(2,1)+(4)")
    assert x == RingElement(Mode.M(4), {(1,): 1, (2,): 1, (2, 1): 1, (4,): 1})
    assert parse_paper_notation("1(0)") == RingElement.one(Mode.M(4))
    hits = []
    y = parse_paper_notation("(1)+2(2)+2(2,1)+2(3,1)+(2,3)", record=hits)
    assert y[(3, 2)] == 1
    assert [(h.token, h.replacement) for h in hits] == [("(2,3)", "(3,2)")]


def test_parse_signs_and_whitespace():
    x = parse_paper_notation("-4(4) -1(4,1)+2(4,2)\n +2(4,2,1)")
    assert x.as_dict() == {(4,): -4, (4, 1): -1, (4, 2): 2, (4, 2, 1): 2}
    assert parse_paper_notation("-(4,1)") == parse_paper_notation("-1(4,1)")


@pytest.mark.parametrize("bad", ["", "(1)+", "(1)(2)", "(1)+x(2)", "(1,1)", "(5)", "(a)"])
def test_parse_errors(bad):
    with pytest.raises(PaperParseError):
        parse_paper_notation(bad)


def test_unknown_erratum_is_an_error():
    with pytest.raises(PaperParseError):
        parse_paper_notation("(1)+(2,3)", token_map={})


def test_gl_mode_labels():
    x = parse_paper_notation("(3)+2(3,2,1)", mode=Mode.GL(3))
    assert x.as_dict() == {(): 1, (2, 1): 2}
    with pytest.raises(PaperParseError):
        parse_paper_notation("(2,1)", mode=Mode.GL(3))


def test_roundtrip_of_every_table_row():
    tables = load_tables()
    assert sorted(tables.s) == sorted(tables.sq) == list(range(27))
    for x in list(tables.s.values()) + list(tables.sq.values()):
        assert parse_paper_notation(x.to_paper()) == x
    assert sorted(tables.s_hits) == [7, 8]


def test_tau_parsing():
    tau = load_tables().tau
    assert sorted(tau) == list(range(7))
    assert tau[0].tolist() == [[1]]
    assert tau[2].tolist() == [[2, 2], [1, 3]]
    assert tau[6].shape == (32, 32)
    assert tau[6][10, 31] == -1608


def test_eqnarray_rows():
    rows = parse_eqnarray("s_{0} & = & 1(0)\\\\\ns_{1} & = & (1)\n  +(2)\\\\", "s")
    assert rows == {0: "1(0)", 1: "(1) +(2)"}
    with pytest.raises(PaperParseError):
        parse_eqnarray("t_{0} & = & 1(0)\\\\", "s")


def test_tau_block_parse():
    text = r"$$\tau_1=\left( \begin {array}{c} 2\end {array} \right)$$"
    assert parse_tau_tables(text)[1].tolist() == [[2]]


def test_verify_packaged_tables():
    verdicts = verify_paper_tables()
    assert all(v.passed for v in verdicts), [v.line() for v in verdicts if not v.passed]
    names = {v.name for v in verdicts}
    assert {"s_7 erratum (2,3)", "s_8 erratum (2,3)", "tau_6", "tau_6 trace"} <= names


@pytest.fixture
def data_copy(tmp_path):
    from importlib import resources
    src = resources.files("glring").joinpath("data")
    for name in ("sym_table.tex", "sq_table.tex", "tau_tables.tex", "errata.json"):
        (tmp_path / name).write_text(src.joinpath(name).read_text())
    return tmp_path


def test_new_mismatch_fails(data_copy):
    p = data_copy / "tau_tables.tex"
    p.write_text(p.read_text().replace("2&2\\\\ \\noalign{\\medskip}1&3", "2&2\\\\ \\noalign{\\medskip}1&4"))
    bad = [v for v in verify_paper_tables(data_copy) if not v.passed]
    assert {v.name for v in bad} == {"tau_2", "tau_2 trace"}


def test_uncatalogued_erratum_fails(data_copy):
    p = data_copy / "errata.json"
    p.write_text(p.read_text().replace('"row": 8', '"row": 99'))
    bad = [v.name for v in verify_paper_tables(data_copy) if not v.passed]
    assert bad == ["s_8 erratum (2,3)"]


def test_s_table_mismatch_fails(data_copy):
    p = data_copy / "sym_table.tex"
    p.write_text(p.read_text().replace("s_{4} & = & (1)+(2)+(2,1)+(4)", "s_{4} & = & (1)+(2)+(2,1)+2(4)"))
    bad = [v.name for v in verify_paper_tables(data_copy) if not v.passed]
    assert bad == ["s_4"]
