import pytest

from sgsplit.linalg import GF
from sgsplit.quiver import Arrow, Path, Quiver, build_quotient

F101 = GF(101)


def loop_algebra(n, field=F101):
    """k[x]/x^n as a one-vertex quiver algebra."""
    Q = Quiver(("1",), (Arrow("x", "1", "1"),))
    return build_quotient(Q, [{Path("1", "1", ("x",) * n): field.one}], field, 30)


def a2_algebra(field=F101):
    """Hereditary algebra of the quiver 2 -> 1."""
    Q = Quiver(("1", "2"), (Arrow("b", "2", "1"),))
    return build_quotient(Q, [], field, 30)


def two_vertex_algebra(with_gb, field=F101):
    """The 2-vertex algebra with loops a (cubed) and g (squared) and arrow b;
    with_gb controls whether the crossing relation g*b is imposed."""
    Q = Quiver(("1", "2"),
               (Arrow("a", "1", "1"), Arrow("b", "2", "1"), Arrow("g", "2", "2")))
    rels = [{Path("1", "1", ("a", "a", "a")): field.one},
            {Path("2", "2", ("g", "g")): field.one}]
    if with_gb:
        rels.append({Path("2", "1", ("g", "b")): field.one})
    return build_quotient(Q, rels, field, 30)


@pytest.fixture
def split_example():
    return two_vertex_algebra(with_gb=True)


@pytest.fixture
def unsplit_variant():
    return two_vertex_algebra(with_gb=False)


@pytest.fixture
def a2():
    return a2_algebra()


SPLIT_EXAMPLE_TEXT = """\
field F 101
quiver
  vertices 1 2
  arrow a : 1 -> 1
  arrow b : 2 -> 1
  arrow g : 2 -> 2
relations
  a*a*a
  g*g
  g*b
"""

UNSPLIT_VARIANT_TEXT = """\
field F 101
quiver
  vertices 1 2
  arrow a : 1 -> 1
  arrow b : 2 -> 1
  arrow g : 2 -> 2
relations
  a*a*a
  g*g
"""

A2_TEXT = """\
field F 101
quiver
  vertices 1 2
  arrow b : 2 -> 1
"""


@pytest.fixture
def qfile(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write
