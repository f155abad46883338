"""Acceptance gate: one test per criterion, each printing a PASS line.

Frozen oracle values (derived by hand path enumeration and uniserial quotient
counting) are asserted exactly; no tolerances anywhere.
"""

import json

import pytest

from sgsplit.cli import main
from sgsplit.corpus import random_split_presentation, random_module
from sgsplit.dsl import build, parse
from sgsplit.modules import simple
from sgsplit.probes import (
    gldim_probe,
    is_nakayama,
    is_selfinjective,
    pd_probe,
    sg_decomposition_report,
    sg_hom_dim,
    stable_indec_count,
)
from sgsplit.splitting import check_syntactic, decompose, find_splits
from sgsplit.triangular import (
    Bipartition,
    check_left_semisimple,
    check_right_projective,
    extract_triangular,
    i_star,
    j_star,
    verify_syzygy_formula_a_side,
    verify_syzygy_formula_b_side,
)

from conftest import A2_TEXT, SPLIT_EXAMPLE_TEXT, UNSPLIT_VARIANT_TEXT, a2_algebra, loop_algebra

N_CORPUS_FORMULA = 50
N_CORPUS_SYNTACTIC = 100


def _corpus_td(seed):
    alg, g, gb = random_split_presentation(seed)
    return alg, Bipartition(g, gb)


def test_criterion_1_worked_example_end_to_end():
    alg = build(parse(SPLIT_EXAMPLE_TEXT))
    assert alg.dim == 8
    certs = [c for c in find_splits(alg) if c.semantically_valid]
    assert len(certs) == 1
    assert certs[0].bipartition.gamma == ("1",)
    assert alg.corner(("1",)).dim == 3
    assert alg.corner(("2",)).dim == 2
    rep = sg_decomposition_report(decompose(alg))
    assert rep.total == 3
    print("ACCEPTANCE 1: PASS - dim 8, unique split gamma={1}, corners 3/2, "
          "3 stable indecomposables")


def test_criterion_2_negative_variant():
    alg = build(parse(UNSPLIT_VARIANT_TEXT))
    assert alg.dim == 11
    bp = Bipartition(("1",), ("2",))
    td = extract_triangular(alg, bp)
    ls = check_left_semisimple(td)
    assert not ls.holds and "g*b" in ls.witness
    assert not check_syntactic(alg, bp).holds
    tree = decompose(alg)
    assert tree.kind == "leaf" and len(tree.leaves()) == 1
    print("ACCEPTANCE 2: PASS - dim 11, left-semisimple fails with witness g*b, "
          "syntactic check fails, single leaf")


def test_criterion_3_syzygy_formula_property_suite():
    checked = 0
    for seed in range(N_CORPUS_FORMULA):
        alg, bp = _corpus_td(seed)
        td = extract_triangular(alg, bp)
        X = random_module(td.A, seed * 7 + 1)
        Y = random_module(td.B, seed * 7 + 2)
        ra = verify_syzygy_formula_a_side(td, X)
        assert ra.ok, f"seed {seed} A-side: {ra.detail}"
        assert ra.iso is None or ra.iso.verdict == "yes"
        rb = verify_syzygy_formula_b_side(td, Y)
        assert rb.ok, f"seed {seed} B-side: {rb.detail}"
        assert rb.iso is None or rb.iso.verdict == "yes"
        checked += 1
    assert checked >= 50
    print(f"ACCEPTANCE 3: PASS - both syzygy formulas confirmed on {checked} "
          "random algebras, zero failures")


def test_criterion_4_cross_block_vanishing():
    cases = 0
    tds = []
    for seed in range(N_CORPUS_FORMULA):
        alg, bp = _corpus_td(seed)
        td = extract_triangular(alg, bp)
        X = random_module(td.A, seed * 11 + 3)
        Y = random_module(td.B, seed * 11 + 4)
        tds.append((td, X, Y))
    ex = build(parse(SPLIT_EXAMPLE_TEXT))
    td = extract_triangular(ex, Bipartition(("1",), ("2",)))
    tds.append((td, simple(td.A, "1"), simple(td.B, "2")))
    for td, X, Y in tds:
        jY = j_star(td, Y)
        iX = i_star(td, X)
        for s in range(-3, 4):
            r = sg_hom_dim(jY, iX, s, cap=12)
            assert r.verdict == "stabilized" and r.value == 0, \
                f"{td.lam}: shift {s} gave {r!r}"
            cases += 1
    print(f"ACCEPTANCE 4: PASS - stable Hom from the B block to the A block "
          f"stabilized at 0 in all {cases} cases")


def test_criterion_5_block_bookkeeping():
    algs = []
    ex = build(parse(SPLIT_EXAMPLE_TEXT))
    algs.append((ex, Bipartition(("1",), ("2",))))
    for seed in range(10):
        algs.append(_corpus_td(seed))
    cases = 0
    for alg, bp in algs:
        td = extract_triangular(alg, bp)
        for v in td.A.quiver.vertices:
            for w in td.A.quiver.vertices:
                for s in range(-2, 3):
                    over_lam = sg_hom_dim(i_star(td, simple(td.A, v)),
                                          i_star(td, simple(td.A, w)), s)
                    over_a = sg_hom_dim(simple(td.A, v), simple(td.A, w), s)
                    assert (over_lam.verdict, over_lam.value) == \
                        (over_a.verdict, over_a.value)
                    cases += 1
        for v in td.B.quiver.vertices:
            for w in td.B.quiver.vertices:
                for s in range(-2, 3):
                    over_lam = sg_hom_dim(j_star(td, simple(td.B, v)),
                                          j_star(td, simple(td.B, w)), s)
                    over_b = sg_hom_dim(simple(td.B, v), simple(td.B, w), s)
                    assert (over_lam.verdict, over_lam.value) == \
                        (over_b.verdict, over_b.value)
                    cases += 1
        for v in td.B.quiver.vertices:
            for w in td.A.quiver.vertices:
                for s in range(-2, 3):
                    r = sg_hom_dim(j_star(td, simple(td.B, v)),
                                   i_star(td, simple(td.A, w)), s)
                    assert r.verdict == "stabilized" and r.value == 0
                    cases += 1
    print(f"ACCEPTANCE 5: PASS - block-diagonal Hom bookkeeping agreed in "
          f"{cases} comparisons")


def test_criterion_6_syntactic_implies_semantic():
    for seed in range(N_CORPUS_SYNTACTIC):
        alg, bp = _corpus_td(seed)
        syn = check_syntactic(alg, bp)
        assert syn.holds, f"seed {seed}: corpus algebra is syntactic by construction"
        td = extract_triangular(alg, bp)
        assert check_left_semisimple(td).holds, f"seed {seed}"
        rp = check_right_projective(td)
        assert rp.holds, f"seed {seed}"
        assert rp.extra["explicit_map_bijective"] is True, f"seed {seed}"
    print(f"ACCEPTANCE 6: PASS - syntactic shape implied both semantic checks "
          f"and a bijective basis map on {N_CORPUS_SYNTACTIC} presentations")


def test_criterion_7_probe_sanity():
    a2 = a2_algebra()
    g = gldim_probe(a2)
    assert g.kind == "finite" and g.value <= 1
    dual = loop_algebra(2)
    v = pd_probe(simple(dual, "1"))
    assert v.kind == "infinite" and v.witness == (0, 1)
    for n in (2, 3, 4, 5):
        alg = loop_algebra(n)
        assert is_selfinjective(alg).holds
        assert is_nakayama(alg).holds
        assert stable_indec_count(alg) == n - 1
    print("ACCEPTANCE 7: PASS - hereditary gldim <= 1, one-step syzygy "
          "recurrence over the dual numbers, n-1 stable indecomposables for "
          "truncated polynomial rings")


def test_criterion_8_json_determinism(tmp_path, capsys):
    files = {"ex.q": SPLIT_EXAMPLE_TEXT, "rem.q": UNSPLIT_VARIANT_TEXT, "a2.q": A2_TEXT}
    paths = {}
    for name, text in files.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    commands = [
        ["info", paths["ex.q"]],
        ["split", paths["rem.q"]],
        ["decompose", paths["ex.q"]],
        ["gldim", paths["a2.q"]],
        ["syzygy", paths["ex.q"], "--module", "simple:1", "--steps", "4"],
        ["sghom", paths["ex.q"], "--from", "jstar:simple:2",
         "--to", "istar:simple:1", "--shift", "2"],
    ]
    for argv in commands:
        outs = []
        for _ in range(2):
            rc = main(argv + ["--json", "--seed", "0"])
            assert rc == 0
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1], f"non-deterministic output for {argv[0]}"
        json.loads(outs[0])  # well-formed
    print("ACCEPTANCE 8: PASS - byte-identical JSON for every command rerun "
          "with the same seed")
