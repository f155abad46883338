"""Right modules over a QuotientAlgebra as quiver representations.

A module is a dimension vector plus one matrix per arrow; vectors are rows and
paths act left-to-right (x acted by a*b is x @ mat(a) @ mat(b)).  Hom spaces,
radicals, projective covers, syzygies, stable Homs and summand surgery all
reduce to exact kernel computations in linalg.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from sgsplit.errors import InvalidPresentationError
from sgsplit.linalg import Matrix, RowSpace, block_diag, hstack, mat_vec
from sgsplit.quiver import Path, QuotientAlgebra


class ModuleRep:
    """A finitely generated right module, presented vertexwise."""

    def __init__(self, alg: QuotientAlgebra, dims: dict, mats: dict, check: bool = True):
        self.alg = alg
        self.dims = {v: int(dims.get(v, 0)) for v in alg.quiver.vertices}
        self.mats = {}
        for a in alg.quiver.arrows:
            m = mats.get(a.name)
            if m is None:
                m = Matrix.zeros(alg.field, self.dims[a.source], self.dims[a.target])
            if (m.rows, m.cols) != (self.dims[a.source], self.dims[a.target]):
                raise InvalidPresentationError(
                    f"arrow {a.name}: matrix is {m.rows}x{m.cols}, expected "
                    f"{self.dims[a.source]}x{self.dims[a.target]}"
                )
            self.mats[a.name] = m
        if check:
            self._check_relations()

    def _check_relations(self):
        for rel in self.alg.relations:
            some = next(iter(rel))
            acc = Matrix.zeros(self.alg.field, self.dims[some.source], self.dims[some.target])
            for p, c in rel.items():
                acc = acc + self.path_action(p).scale(c)
            if not acc.is_zero():
                raise InvalidPresentationError(f"representation does not annihilate relation {rel}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.alg.quiver.vertices)

    def path_action(self, p: Path) -> Matrix:
        f = self.alg.field
        m = Matrix.identity(f, self.dims[p.source])
        for a in p.arrows:
            m = m @ self.mats[a]
        return m

    def __repr__(self):
        return f"ModuleRep(dims={self.dims})"


def zero_module(alg: QuotientAlgebra) -> ModuleRep:
    return ModuleRep(alg, {}, {}, check=False)


def direct_sum(*mods: ModuleRep) -> ModuleRep:
    if not mods:
        raise InvalidPresentationError("direct_sum needs at least one module")
    alg = mods[0].alg
    if any(m.alg is not alg for m in mods):
        raise InvalidPresentationError("direct_sum: algebra mismatch")
    f = alg.field
    dims = {v: sum(m.dims[v] for m in mods) for v in alg.quiver.vertices}
    mats = {
        a.name: block_diag([m.mats[a.name] for m in mods], f)
        for a in alg.quiver.arrows
    }
    return ModuleRep(alg, dims, mats, check=False)


class ModuleMap:
    """A homomorphism of modules: one matrix per vertex, commuting with arrows."""

    def __init__(self, source: ModuleRep, target: ModuleRep, blocks: dict, check: bool = True):
        self.source = source
        self.target = target
        f = source.alg.field
        self.blocks = {}
        for v in source.alg.quiver.vertices:
            b = blocks.get(v)
            if b is None:
                b = Matrix.zeros(f, source.dims[v], target.dims[v])
            self.blocks[v] = b
        if check:
            for a in source.alg.quiver.arrows:
                lhs = self.blocks[a.source] @ target.mats[a.name]
                rhs = source.mats[a.name] @ self.blocks[a.target]
                if not (lhs - rhs).is_zero():
                    raise InvalidPresentationError(f"map does not commute with arrow {a.name}")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self then other (source of other = target of self)."""
        return ModuleMap(
            self.source,
            other.target,
            {v: self.blocks[v] @ other.blocks[v] for v in self.blocks},
            check=False,
        )

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(
            self.source, self.target,
            {v: self.blocks[v] + other.blocks[v] for v in self.blocks},
            check=False,
        )

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(
            self.source, self.target, {v: self.blocks[v].scale(c) for v in self.blocks}, check=False
        )

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def is_isomorphism(self) -> bool:
        return all(
            b.rows == b.cols and b.is_invertible() for b in self.blocks.values()
        )

    def inverse(self) -> "ModuleMap":
        inv = {}
        for v, b in self.blocks.items():
            bi = b.inverse()
            if bi is None:
                raise InvalidPresentationError("map is not invertible")
            inv[v] = bi
        return ModuleMap(self.target, self.source, inv, check=False)

    def flatten(self) -> list:
        out = []
        for v in self.source.alg.quiver.vertices:
            for row in self.blocks[v].data:
                out.extend(row)
        return out


def identity_map(M: ModuleRep) -> ModuleMap:
    f = M.alg.field
    return ModuleMap(M, M, {v: Matrix.identity(f, M.dims[v]) for v in M.dims}, check=False)


# -- Hom spaces --------------------------------------------------------------


def hom_basis(M: ModuleRep, N: ModuleRep) -> list[ModuleMap]:
    """Exact basis of Hom(M, N), as the kernel of the commutation constraints."""
    if M.alg is not N.alg:
        raise InvalidPresentationError("hom_basis: modules over different algebras")
    alg = M.alg
    f = alg.field
    verts = alg.quiver.vertices
    offs = {}
    total = 0
    for v in verts:
        offs[v] = total
        total += M.dims[v] * N.dims[v]
    if total == 0:
        return []
    rows = []
    for a in alg.quiver.arrows:
        u, t = a.source, a.target
        # constraint: F_u @ N.mat[a] - M.mat[a] @ F_t = 0, entrywise
        for i in range(M.dims[u]):
            for j in range(N.dims[t]):
                row = [f.zero] * total
                for k in range(N.dims[u]):
                    row[offs[u] + i * N.dims[u] + k] = f.add(
                        row[offs[u] + i * N.dims[u] + k], N.mats[a.name].data[k][j]
                    )
                for k in range(M.dims[t]):
                    idx = offs[t] + k * N.dims[t] + j
                    row[idx] = f.sub(row[idx], M.mats[a.name].data[i][k])
                rows.append(row)
    if rows:
        ker = Matrix.from_rows(f, rows, total).kernel_basis()
    else:
        ker = [[f.one if i == j else f.zero for j in range(total)] for i in range(total)]
    maps = []
    for vec in ker:
        blocks = {}
        for v in verts:
            data = []
            for i in range(M.dims[v]):
                base = offs[v] + i * N.dims[v]
                data.append(vec[base : base + N.dims[v]])
            blocks[v] = Matrix(f, data, N.dims[v])
        maps.append(ModuleMap(M, N, blocks, check=False))
    return maps


# -- standard modules --------------------------------------------------------


def simple(alg: QuotientAlgebra, v: str) -> ModuleRep:
    alg.quiver.vertex_index(v)
    return ModuleRep(alg, {v: 1}, {}, check=False)


def projective(alg: QuotientAlgebra, v: str) -> ModuleRep:
    """The projective e_v Lambda: basis = normal words with source v."""
    key = ("projective", v)
    if key in alg._cache:
        return alg._cache[key]
    alg.quiver.vertex_index(v)
    f = alg.field
    words = alg.words_from(v)
    by_vertex = {u: [w for w in words if w.target == u] for u in alg.quiver.vertices}
    dims = {u: len(by_vertex[u]) for u in alg.quiver.vertices}
    mats = {}
    for a in alg.quiver.arrows:
        src_words = by_vertex[a.source]
        tgt_words = by_vertex[a.target]
        tgt_idx = {w: i for i, w in enumerate(tgt_words)}
        m = Matrix.zeros(f, len(src_words), len(tgt_words))
        for i, w in enumerate(src_words):
            for t, c in alg.table[(w, a.name)].items():
                m.data[i][tgt_idx[t]] = c
        mats[a.name] = m
    P = ModuleRep(alg, dims, mats, check=False)
    P._proj_words = by_vertex  # basis bookkeeping for covers and corner maps
    alg._cache[key] = P
    return P


def injective(alg: QuotientAlgebra, v: str) -> ModuleRep:
    """Vector-space dual of the projective left module at v."""
    key = ("injective", v)
    if key in alg._cache:
        return alg._cache[key]
    op = alg.opposite()
    P = projective(op, v)
    dims = {u: P.dims[u] for u in alg.quiver.vertices}
    mats = {}
    for a in alg.quiver.arrows:
        # in the opposite algebra the arrow runs target -> source
        mats[a.name] = P.mats[a.name].transpose()
    I = ModuleRep(alg, dims, mats)
    alg._cache[key] = I
    return I


# -- submodules, quotients, radical series -----------------------------------


def _close_under_action(M: ModuleRep, vectors: dict) -> dict:
    """Smallest arrow-stable family of row spaces containing the given vectors."""
    f = M.alg.field
    spaces = {v: RowSpace(f, M.dims[v]) for v in M.dims}
    work = []
    for v, vecs in vectors.items():
        for x in vecs:
            if spaces[v].add(x):
                work.append((v, x))
    while work:
        v, x = work.pop()
        for a in M.alg.quiver.arrows_from(v):
            y = mat_vec(x, M.mats[a.name])
            if spaces[a.target].add(y):
                work.append((a.target, y))
    return spaces


def submodule(M: ModuleRep, vectors: dict) -> tuple[ModuleRep, ModuleMap]:
    """Submodule generated by the given row vectors; returns (S, inclusion)."""
    f = M.alg.field
    spaces = _close_under_action(M, vectors)
    bases = {v: spaces[v].rows for v in M.dims}
    dims = {v: len(bases[v]) for v in M.dims}
    mats = {}
    for a in M.alg.quiver.arrows:
        u, t = a.source, a.target
        rows = []
        tmat = Matrix.from_rows(f, bases[t], M.dims[t]) if bases[t] else None
        for x in bases[u]:
            y = mat_vec(x, M.mats[a.name])
            if tmat is None:
                if any(c != f.zero for c in y):
                    raise InvalidPresentationError("submodule closure failure")
                rows.append([])
            else:
                coords = tmat.solve_left(y)
                if coords is None:
                    raise InvalidPresentationError("submodule closure failure")
                rows.append(coords)
        mats[a.name] = Matrix(f, rows, dims[t]) if rows else Matrix.zeros(f, 0, dims[t])
    S = ModuleRep(M.alg, dims, mats, check=False)
    incl = ModuleMap(
        S, M, {v: Matrix.from_rows(f, bases[v], M.dims[v]) for v in M.dims}, check=False
    )
    return S, incl


def kernel_submodule(phi: ModuleMap) -> tuple[ModuleRep, ModuleMap]:
    """Kernel of a module map as a submodule of its source."""
    M = phi.source
    vectors = {v: phi.blocks[v].left_kernel_basis() for v in M.dims}
    return submodule(M, vectors)


def image_submodule(phi: ModuleMap) -> tuple[ModuleRep, ModuleMap]:
    M = phi.source
    vectors = {v: [row[:] for row in phi.blocks[v].data] for v in M.dims}
    vec_in_target = {v: vectors[v] for v in M.dims}
    return submodule(phi.target, vec_in_target)


def quotient_module(M: ModuleRep, incl: ModuleMap) -> tuple[ModuleRep, ModuleMap]:
    """Quotient of M by the submodule included via incl; returns (Q, projection)."""
    f = M.alg.field
    proj_mats = {}
    dims = {}
    lifts = {}
    for v in M.dims:
        sub_rows = incl.blocks[v]
        red, pivots = sub_rows.rref()
        free = [c for c in range(M.dims[v]) if c not in pivots]
        dims[v] = len(free)
        # projection: reduce by rref rows, then read off the free coordinates
        proj = Matrix.zeros(f, M.dims[v], len(free))
        for i in range(M.dims[v]):
            x = [f.zero] * M.dims[v]
            x[i] = f.one
            for r, pc in enumerate(pivots):
                c = x[pc]
                if c != f.zero:
                    x = [f.sub(a, f.mul(c, b)) for a, b in zip(x, red.data[r])]
            proj.data[i] = [x[c] for c in free]
        proj_mats[v] = proj
        lifts[v] = free
    mats = {}
    for a in M.alg.quiver.arrows:
        u, t = a.source, a.target
        m = Matrix.zeros(f, dims[u], dims[t])
        for i, c in enumerate(lifts[u]):
            x = [f.zero] * M.dims[u]
            x[c] = f.one
            y = mat_vec(x, M.mats[a.name])
            m.data[i] = mat_vec(y, proj_mats[t])
        mats[a.name] = m
    Q = ModuleRep(M.alg, dims, mats, check=False)
    pi = ModuleMap(M, Q, proj_mats, check=False)
    return Q, pi


def radical_of(M: ModuleRep) -> tuple[ModuleRep, ModuleMap]:
    """rad(M) = sum of arrow-action images, with its inclusion."""
    vectors = {v: [] for v in M.dims}
    for a in M.alg.quiver.arrows:
        vectors[a.target].extend(row[:] for row in M.mats[a.name].data)
    return submodule(M, vectors)


def top(M: ModuleRep) -> tuple[ModuleRep, ModuleMap]:
    """M / rad(M) with the projection."""
    _, incl = radical_of(M)
    return quotient_module(M, incl)


def socle(M: ModuleRep) -> tuple[ModuleRep, ModuleMap]:
    """Annihilator of the radical: vectors killed by every arrow."""
    f = M.alg.field
    vectors = {}
    for v in M.dims:
        arrows = M.alg.quiver.arrows_from(v)
        if not arrows:
            vectors[v] = [row[:] for row in Matrix.identity(f, M.dims[v]).data]
            continue
        joined = hstack([M.mats[a.name] for a in arrows], f, M.dims[v])
        vectors[v] = joined.left_kernel_basis()
    return submodule(M, vectors)


# -- projective covers and syzygies ------------------------------------------


def projective_cover(M: ModuleRep) -> tuple[ModuleRep, ModuleMap]:
    """Minimal cover P -> M: one projective(v) per top multiplicity at v."""
    alg = M.alg
    f = alg.field
    if M.is_zero():
        Z = zero_module(alg)
        return Z, ModuleMap(Z, M, {}, check=False)
    _, rad_incl = radical_of(M)
    summands = []
    generators = []  # (vertex, generating vector in M_v)
    for v in alg.quiver.vertices:
        red, pivots = rad_incl.blocks[v].rref()
        rad_rows = RowSpace(f, M.dims[v])
        for row in red.data:
            rad_rows.add(row)
        for i in range(M.dims[v]):
            x = [f.zero] * M.dims[v]
            x[i] = f.one
            if rad_rows.add(x):
                summands.append(projective(alg, v))
                generators.append((v, x))
    P = direct_sum(*summands) if summands else zero_module(alg)
    # assemble pi: basis of P is the concatenated word bases of the summands
    blocks = {u: [] for u in alg.quiver.vertices}
    for (v, x), Pv in zip(generators, summands):
        for u in alg.quiver.vertices:
            for w in Pv._proj_words[u]:
                blocks[u].append(mat_vec(x, M.path_action(w)))
    pi = ModuleMap(
        P,
        M,
        {u: Matrix.from_rows(f, blocks[u], M.dims[u]) for u in alg.quiver.vertices},
        check=False,
    )
    return P, pi


def syzygy_with_data(M: ModuleRep):
    """(Omega(M), inclusion into P, P, pi) for the minimal cover P -> M."""
    P, pi = projective_cover(M)
    S, incl = kernel_submodule(pi)
    return S, incl, P, pi


def syzygy(M: ModuleRep) -> ModuleRep:
    return syzygy_with_data(M)[0]


# -- isomorphism testing and summand surgery ---------------------------------


@dataclass
class IsoResult:
    verdict: str  # "yes" | "no" | "inconclusive"
    witness: ModuleMap | None = None
    reason: str | None = None

    def __bool__(self):
        return self.verdict == "yes"


_EXHAUSTIVE_LIMIT = 200000


def is_isomorphic(M: ModuleRep, N: ModuleRep, seed: int = 0, samples: int = 64) -> IsoResult:
    if M.alg is not N.alg:
        raise InvalidPresentationError("is_isomorphic: algebra mismatch")
    if M.dim_vector() != N.dim_vector():
        return IsoResult("no", reason="dimension vectors differ")
    if M.is_zero():
        return IsoResult("yes", witness=ModuleMap(M, N, {}, check=False))
    H = hom_basis(M, N)
    if not H:
        return IsoResult("no", reason="Hom(M, N) = 0")
    f = M.alg.field
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = [f.random(rng) for _ in H]
        cand = _combine(H, coeffs)
        if cand.is_isomorphism():
            return IsoResult("yes", witness=cand)
    if f.char and f.char ** len(H) <= _EXHAUSTIVE_LIMIT:
        for combo in _all_coeff_tuples(f, len(H)):
            cand = _combine(H, combo)
            if cand.is_isomorphism():
                return IsoResult("yes", witness=cand)
        return IsoResult("no", reason="exhausted Hom space")
    # cheap certified negatives: Hom dimensions must match under isomorphism
    if len(hom_basis(M, M)) != len(hom_basis(N, M)) or len(hom_basis(N, N)) != len(
        hom_basis(M, N)
    ):
        return IsoResult("no", reason="Hom-dimension mismatch")
    return IsoResult("inconclusive", reason=f"no isomorphism found in {samples} samples")


def _combine(H: list[ModuleMap], coeffs) -> ModuleMap:
    out = H[0].scale(coeffs[0])
    for h, c in zip(H[1:], coeffs[1:]):
        out = out + h.scale(c)
    return out


def _all_coeff_tuples(f, n):
    import itertools

    return itertools.product(range(f.char), repeat=n)


def stable_hom_dim(M: ModuleRep, N: ModuleRep) -> int:
    """dim Hom(M, N) minus the maps factoring through a projective.

    A map factors through a projective iff it lifts along the cover of N.
    """
    if M.is_zero() or N.is_zero():
        return 0
    H = hom_basis(M, N)
    if not H:
        return 0
    P, pi = projective_cover(N)
    K = hom_basis(M, P)
    f = M.alg.field
    factoring = RowSpace(f, len(H[0].flatten()))
    for k in K:
        factoring.add(k.compose(pi).flatten())
    # rank of the factoring subspace inside Hom(M, N)
    return len(H) - factoring.dim


@dataclass
class IndecResult:
    verdict: str  # "indecomposable" | "decomposable"
    budget: int = 0
    summands: tuple | None = None  # (ModuleRep, ModuleRep) when decomposable

    def __bool__(self):
        return self.verdict == "indecomposable"


def is_indecomposable(M: ModuleRep, seed: int = 0, samples: int = 128) -> IndecResult:
    """Fitting-decomposition sampling over the endomorphism algebra."""
    if M.is_zero():
        raise InvalidPresentationError("is_indecomposable: zero module")
    E = hom_basis(M, M)
    if len(E) == 1:
        return IndecResult("indecomposable", budget=0)
    f = M.alg.field
    rng = random.Random(seed)
    n = M.total_dim
    candidates = list(E)
    for _ in range(samples):
        candidates.append(_combine(E, [f.random(rng) for _ in E]))
    for tried, phi in enumerate(candidates, start=1):
        power = phi
        for _ in range(n.bit_length() + 1):
            power = power.compose(power)  # phi^(2^k) with 2^k >= n
        if power.is_zero():
            continue
        if power.is_isomorphism():
            continue
        ker, _ = kernel_submodule(power)
        im, _ = image_submodule(power)
        if ker.total_dim and im.total_dim and ker.total_dim + im.total_dim == n:
            return IndecResult("decomposable", budget=tried, summands=(ker, im))
    return IndecResult("indecomposable", budget=samples)


@dataclass
class StripResult:
    core: ModuleRep
    multiplicities: dict  # vertex -> count of projective(v) summands


def strip_projectives(M: ModuleRep, max_rounds: int = 1000) -> StripResult:
    """Split off projective direct summands until none remains.

    A projective(v) summand exists iff some f: P(v) -> M and g: M -> P(v)
    compose to an endomorphism of P(v) acting invertibly on its top; the
    resulting idempotent splits M.
    """
    alg = M.alg
    f = alg.field
    counts = {v: 0 for v in alg.quiver.vertices}
    current = M
    for _ in range(max_rounds):
        found = False
        for v in alg.quiver.vertices:
            Pv = projective(alg, v)
            if current.dims[v] == 0 or current.total_dim < Pv.total_dim:
                continue
            pair = _find_projective_splitter(current, Pv, v)
            if pair is None:
                continue
            fmap, gmap = pair  # fmap: Pv -> current, gmap: current -> Pv
            theta = fmap.compose(gmap)  # endo of Pv, invertible (nonzero on the top)
            proj_idem = gmap.compose(theta.inverse()).compose(fmap)
            counts[v] += 1
            comp, _ = kernel_submodule(proj_idem)
            current = comp
            found = True
            break
        if not found:
            break
    return StripResult(core=current, multiplicities={v: c for v, c in counts.items() if c})


def _find_projective_splitter(M: ModuleRep, Pv: ModuleRep, v: str):
    """(f: Pv -> M, g: M -> Pv) with g∘f invertible on the top of Pv, or None.

    Returns the idempotent construction inputs; the top coefficient of an
    endomorphism of Pv is its matrix entry at the trivial-word coordinate.
    """
    f_field = M.alg.field
    H1 = hom_basis(Pv, M)
    if not H1:
        return None
    H2 = hom_basis(M, Pv)
    if not H2:
        return None
    e_idx = Pv._proj_words[v].index(
        next(w for w in Pv._proj_words[v] if not w.arrows)
    )
    for h1 in H1:
        for h2 in H2:
            theta = h1.compose(h2)  # Pv -> M -> Pv
            scalar = theta.blocks[v].data[e_idx][e_idx]
            if scalar != f_field.zero and theta.is_isomorphism():
                return h1, h2
    return None
