import pytest

from sgsplit.errors import InvalidPresentationError, NotAdmissibleError
from sgsplit.linalg import GF, QQ
from sgsplit.quiver import Arrow, Path, Quiver, build_quotient, compose

from conftest import F101, a2_algebra, loop_algebra, two_vertex_algebra


def test_path_compose():
    Q = Quiver(("1", "2", "3"),
               (Arrow("a", "1", "2"), Arrow("b", "2", "3")))
    p = Path("1", "2", ("a",))
    q = Path("2", "3", ("b",))
    pq = compose(Q, p, q)
    assert pq == Path("1", "3", ("a", "b"))
    assert compose(Q, Path("1", "1", ()), p) == p


def test_two_vertex_dimension_and_basis(split_example):
    assert split_example.dim == 8
    words = [repr(p) for p in split_example.basis]
    assert words == ["e_1", "e_2", "a", "b", "g", "a*a", "b*a", "b*a*a"]
    assert split_example.loewy_length == 4


def test_two_vertex_without_crossing_relation(unsplit_variant):
    # g*b, g*b*a, g*b*a*a survive as extra normal words
    assert unsplit_variant.dim == 11


def test_truncated_polynomial_dims():
    for n in (2, 3, 4, 5):
        assert loop_algebra(n).dim == n


def test_hereditary_dim():
    assert a2_algebra().dim == 3


def test_free_loop_not_admissible():
    Q = Quiver(("1",), (Arrow("x", "1", "1"),))
    with pytest.raises(NotAdmissibleError):
        build_quotient(Q, [], F101, 30)


def test_non_admissible_relation_rejected():
    # x^3 - x^2 generates an ideal whose radical powers never vanish
    Q = Quiver(("1",), (Arrow("x", "1", "1"),))
    rel = {Path("1", "1", ("x", "x", "x")): F101.one,
           Path("1", "1", ("x", "x")): F101.neg(F101.one)}
    with pytest.raises(NotAdmissibleError):
        build_quotient(Q, [rel], F101, 30)


def test_short_generator_rejected():
    Q = Quiver(("1",), (Arrow("x", "1", "1"),))
    with pytest.raises(InvalidPresentationError):
        build_quotient(Q, [{Path("1", "1", ("x",)): F101.one}], F101, 30)


def test_binomial_relation():
    # commutative square: a*b = c*d
    Q = Quiver(("1", "2", "3", "4"),
               (Arrow("a", "1", "2"), Arrow("b", "2", "4"),
                Arrow("c", "1", "3"), Arrow("d", "3", "4")))
    rel = {Path("1", "4", ("a", "b")): QQ.one,
           Path("1", "4", ("c", "d")): QQ.neg(QQ.one)}
    alg = build_quotient(Q, [rel], QQ, 30)
    # e_i (4), arrows (4), one surviving length-2 word
    assert alg.dim == 9
    # the deglex-larger word c*d rewrites to the smaller a*b
    nf = alg.normal_form({Path("1", "4", ("c", "d")): QQ.one})
    assert list(nf.keys()) == [Path("1", "4", ("a", "b"))]


def test_multiply_and_normal_form(split_example):
    f = split_example.field
    gb = split_example.multiply({Path("2", "2", ("g",)): f.one}, {Path("2", "1", ("b",)): f.one})
    assert gb == {}
    ba = split_example.multiply({Path("2", "1", ("b",)): f.one}, {Path("1", "1", ("a",)): f.one})
    assert list(ba.keys()) == [Path("2", "1", ("b", "a"))]


def test_corner_algebras(split_example):
    A = split_example.corner(("1",))
    B = split_example.corner(("2",))
    assert A.dim == 3 and B.dim == 2
    assert A.loewy_length == 3 and B.loewy_length == 2


def test_corner_not_path_closed():
    # in the hereditary A3 line 3 -> 2 -> 1 the set {1, 3} is not path closed
    Q = Quiver(("1", "2", "3"), (Arrow("a", "2", "1"), Arrow("b", "3", "2")))
    alg = build_quotient(Q, [], F101, 30)
    with pytest.raises(InvalidPresentationError):
        alg.corner(("1", "3"))


def test_opposite_involution(split_example):
    op = split_example.opposite()
    assert op.dim == split_example.dim
    assert op.loewy_length == split_example.loewy_length


def test_radical_basis(split_example):
    rad = split_example.radical_basis()
    assert len(rad) == split_example.dim - 2
    assert all(len(p.arrows) >= 1 for p in rad)


def test_connected_components():
    Q = Quiver(("1", "2"), (Arrow("x", "1", "1"), Arrow("y", "2", "2")))
    comps = Q.connected_components()
    assert sorted(sorted(c) for c in comps) == [["1"], ["2"]]
