import pytest

from sgsplit.dsl import build, parse, pretty_print
from sgsplit.errors import DSLError

from conftest import A2_TEXT, SPLIT_EXAMPLE_TEXT, UNSPLIT_VARIANT_TEXT


def test_parse_example(qfile):
    pf = parse(SPLIT_EXAMPLE_TEXT)
    assert pf.vertices == ("1", "2")
    assert [a.name for a in pf.arrows] == ["a", "b", "g"]
    assert len(pf.relations) == 3
    assert build(pf).dim == 8


def test_parse_no_relations():
    pf = parse(A2_TEXT)
    assert pf.relations == []
    assert build(pf).dim == 3


def test_roundtrip():
    for text in (SPLIT_EXAMPLE_TEXT, UNSPLIT_VARIANT_TEXT, A2_TEXT):
        pf = parse(text)
        pf2 = parse(pretty_print(pf))
        assert pf.vertices == pf2.vertices
        assert pf.arrows == pf2.arrows
        assert pf.relations == pf2.relations
        assert pf.field == pf2.field


def test_coefficients_and_signs():
    text = """field Q
quiver
  vertices 1 2 3
  arrow a : 1 -> 2
  arrow b : 2 -> 3
  arrow c : 1 -> 2
  arrow d : 2 -> 3
relations
  a*b - 2*c*d
  3*a*b + c*d
"""
    pf = parse(text)
    assert len(pf.relations) == 2
    vals = sorted(str(v) for v in pf.relations[0].values())
    assert vals == ["-2", "1"]
    pf2 = parse(pretty_print(pf))
    assert pf2.relations == pf.relations


def test_relation_boundary_without_separator():
    # two relations, split where a term is not preceded by + or -
    text = "field F 5\nquiver\n vertices 1\n arrow x : 1 -> 1\nrelations\n x*x x*x*x"
    pf = parse(text)
    assert len(pf.relations) == 2


def test_utf8_identifiers():
    text = "field F 7\nquiver\n vertices v\n arrow α : v -> v\nrelations\n α*α"
    pf = parse(text)
    assert pf.arrows[0].name == "α"
    assert build(pf).dim == 2


def test_comments_ignored():
    text = SPLIT_EXAMPLE_TEXT.replace("relations", "# note\nrelations")
    assert len(parse(text).relations) == 3


@pytest.mark.parametrize("text,fragment", [
    ("field F 4\nquiver\n vertices 1", "prime"),
    ("field R\nquiver\n vertices 1", "expected"),
    ("quiver\n vertices 1", "expected 'field'"),
    ("field Q\nquiver\n vertices 1\n arrow a : 1 -> 2", "undeclared vertex"),
    ("field Q\nquiver\n vertices 1\n arrow a : 1 -> 1\nrelations\n z*z", "undeclared arrow"),
    ("field Q\nquiver\n vertices 1\n arrow a : 1 -> 1\nrelations\n a", "length at least 2"),
    ("field Q\nquiver\n vertices 1 2\n arrow a : 1 -> 1\n arrow g : 2 -> 2\n"
     "relations\n a*a + g*g", "non-parallel"),
    ("field Q\nquiver\n vertices 1 2\n arrow a : 1 -> 2\nrelations\n a*a", "compose"),
])
def test_errors(text, fragment):
    with pytest.raises(DSLError) as exc:
        parse(text)
    assert fragment in str(exc.value)


def test_error_position():
    with pytest.raises(DSLError) as exc:
        parse("field Q\nquiver\n  vertices 1\n  arrow a : 1 -> 1\nrelations\n  a")
    e = exc.value
    assert e.line == 6 and e.col == 3
