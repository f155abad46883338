"""Random generators for small one-point-extension-shaped presentations and
random modules over them.  Used by the property tests; everything is seeded."""

from __future__ import annotations

import random

from sgsplit.errors import NotAdmissibleError
from sgsplit.linalg import GF, Matrix
from sgsplit.modules import ModuleRep, direct_sum, projective, quotient_module, radical_of, submodule
from sgsplit.quiver import Arrow, LinComb, Path, Quiver, QuotientAlgebra, build_quotient

DEFAULT_FIELD = GF(101)


def _random_side(rng: random.Random, prefix: str, n_verts: int, n_arrows: int):
    """A small serial quiver side: at most one arrow out of each vertex, so
    the side's syzygy chains recur within a few steps."""
    verts = [f"{prefix}{i}" for i in range(1, n_verts + 1)]
    sources = rng.sample(verts, min(n_arrows, len(verts)))
    arrows = []
    for k, s in enumerate(sources, start=1):
        arrows.append(Arrow(f"{prefix}x{k}", s, rng.choice(verts)))
    return verts, arrows


def _paths_of_length(quiver: Quiver, n: int):
    out = []

    def rec(prefix, cur):
        if len(prefix) == n:
            out.append(prefix)
            return
        for a in quiver.arrows:
            if a.source == cur:
                rec(prefix + [a], a.target)

    for v in quiver.vertices:
        rec([], v)
    return out


def random_split_presentation(seed: int, field=DEFAULT_FIELD):
    """A random algebra of the split-by-construction shape.

    Two sides A (on vertices a1..) and B (on vertices b1..) with their own
    relations including all length-3 paths, 1 or 2 crossing arrows from the B
    side to the A side, and every composable (B-arrow)(crossing) word as a
    relation.  The crossing arrows never compose with each other, so adding
    the cubes keeps the ideal admissible.
    Returns (algebra, bipartition_gamma, bipartition_gamma_bar).
    """
    rng = random.Random(seed)
    f = field
    a_verts, a_arrows = _random_side(rng, "a", rng.randint(1, 2), rng.randint(1, 2))
    b_verts, b_arrows = _random_side(rng, "b", rng.randint(1, 2), rng.randint(1, 2))
    n_cross = rng.randint(1, 2)
    cross = []
    for i in range(n_cross):
        cross.append(Arrow(f"c{i + 1}", rng.choice(b_verts), rng.choice(a_verts)))
    quiver = Quiver(tuple(a_verts + b_verts), tuple(a_arrows + b_arrows + cross))

    def path(arrows_):
        return Path(arrows_[0].source, arrows_[-1].target, tuple(a.name for a in arrows_))

    rels: list[LinComb] = []
    # kill all length-3 paths on each side
    for side_arrows in (a_arrows, b_arrows):
        sub = Quiver(tuple(quiver.vertices), tuple(side_arrows))
        for p in _paths_of_length(sub, 3):
            rels.append({path(p): f.one})
        # a few random length-2 relations, occasionally binomial
        twos = _paths_of_length(sub, 2)
        rng.shuffle(twos)
        for p in twos[: rng.randint(0, 2)]:
            lc = {path(p): f.one}
            others = [q for q in twos
                      if q is not p and q[0].source == p[0].source and q[-1].target == p[-1].target]
            if others and rng.random() < 0.3:
                q = rng.choice(others)
                c = f.of(rng.randint(1, 7))
                lc = dict(lc)
                lc[path(q)] = f.neg(c)
            rels.append(lc)
    # every composable (B-arrow)(crossing) word
    for alpha in b_arrows:
        for beta in cross:
            if alpha.target == beta.source:
                rels.append({path([alpha, beta]): f.one})
    # dedupe
    seen = set()
    out = []
    for lc in rels:
        key = tuple(sorted((repr(p), str(c)) for p, c in lc.items()))
        if key not in seen:
            seen.add(key)
            out.append(lc)
    alg = build_quotient(quiver, out, f, 30)
    return alg, tuple(a_verts), tuple(b_verts)


def random_module(alg: QuotientAlgebra, seed: int, max_dim: int = 8) -> ModuleRep:
    """A small random module: a quotient of one or two projectives by the
    submodule generated by random radical vectors.  Retries toward max_dim."""
    rng = random.Random(seed)
    f = alg.field
    for _ in range(40):
        verts = [rng.choice(alg.quiver.vertices) for _ in range(rng.randint(1, 2))]
        P = direct_sum(*(projective(alg, v) for v in verts))
        rad, incl = radical_of(P)
        gens = {}
        n_gens = rng.randint(0, 3)
        for _ in range(n_gens):
            v = rng.choice(alg.quiver.vertices)
            if rad.dims.get(v, 0) == 0:
                continue
            vec = [f.of(rng.randint(0, f.char - 1)) for _ in range(rad.dims[v])]
            if all(x == f.zero for x in vec):
                continue
            row = Matrix(f, [vec], rad.dims[v]) @ incl.blocks[v]
            gens.setdefault(v, []).append(list(row.data[0]))
        if gens:
            sub, sincl = submodule(P, gens)
            M, _ = quotient_module(P, sincl)
        else:
            M = P
        if 0 < M.total_dim <= max_dim:
            return M
    # fall back to a single simple-ish quotient
    v = alg.quiver.vertices[0]
    P = projective(alg, v)
    rad, incl = radical_of(P)
    M, _ = quotient_module(P, incl)
    return M
