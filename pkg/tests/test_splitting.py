import pytest

from sgsplit.errors import InvalidPresentationError
from sgsplit.linalg import GF
from sgsplit.quiver import Arrow, Path, Quiver, build_quotient
from sgsplit.splitting import check_syntactic, decompose, find_splits
from sgsplit.triangular import Bipartition

from conftest import F101, a2_algebra


def test_find_splits_positive(split_example):
    certs = find_splits(split_example)
    assert len(certs) == 1
    c = certs[0]
    assert c.bipartition.gamma == ("1",)
    assert c.semantically_valid
    assert c.syntactic.holds


def test_find_splits_negative(unsplit_variant):
    certs = find_splits(unsplit_variant)
    assert len(certs) == 1
    c = certs[0]
    assert not c.left_semisimple.holds
    assert "g*b" in c.left_semisimple.witness
    assert not c.syntactic.holds
    assert not c.semantically_valid


def test_check_syntactic_dimension_reason(unsplit_variant):
    res = check_syntactic(unsplit_variant, Bipartition(("1",), ("2",)))
    assert not res.holds
    # the crossing word g*b is nonzero, so membership already fails
    assert "g*b" in res.reason


def test_decompose_tree(split_example):
    tree = decompose(split_example)
    assert tree.kind == "split"
    dims = sorted(leaf.dim for leaf in tree.leaves())
    assert dims == [2, 3]


def test_decompose_single_leaf(unsplit_variant):
    tree = decompose(unsplit_variant)
    assert tree.kind == "leaf"
    assert tree.leaves()[0].dim == 11


def test_decompose_hereditary():
    tree = decompose(a2_algebra())
    assert tree.kind == "split"
    assert [leaf.dim for leaf in tree.leaves()] == [1, 1]


def test_decompose_product():
    Q = Quiver(("1", "2"), (Arrow("x", "1", "1"), Arrow("y", "2", "2")))
    alg = build_quotient(Q, [{Path("1", "1", ("x", "x")): F101.one},
                             {Path("2", "2", ("y", "y")): F101.one}], F101, 30)
    tree = decompose(alg)
    assert tree.kind == "product"
    assert [leaf.dim for leaf in tree.leaves()] == [2, 2]


def test_split_certificate_dict_is_json_ready(split_example):
    import json

    certs = find_splits(split_example)
    text = json.dumps([c.to_dict() for c in certs], sort_keys=True)
    assert '"gamma": ["1"]' in text
