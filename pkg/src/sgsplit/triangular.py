"""The triangular matrix structure of a bound quiver algebra.

A vertex bipartition with no arrows Gamma -> Gamma-bar exhibits Lambda as
[[A, 0], [M, B]] with A, B the corner algebras and M the span of normal words
crossing from the B-side to the A-side.  Modules over Lambda are triples
(X, Y, f) with f: Y (x)_B M -> X, and the four module-level functors between
mod A, mod B and mod Lambda are made explicit here, together with the
constructive verification of the two syzygy formulas that drive the
singularity-category splitting.
"""

from __future__ import annotations

from dataclasses import dataclass

from sgsplit.errors import HypothesisError, InvalidPresentationError
from sgsplit.linalg import Matrix, mat_vec
from sgsplit.modules import (
    IsoResult,
    ModuleMap,
    ModuleRep,
    direct_sum,
    is_isomorphic,
    projective,
    projective_cover,
    strip_projectives,
    syzygy,
    syzygy_with_data,
    zero_module,
)
from sgsplit.quiver import Path, QuotientAlgebra, trivial_path


@dataclass(frozen=True)
class Bipartition:
    """A-side vertices (gamma) and B-side vertices (gamma_bar)."""

    gamma: tuple[str, ...]
    gamma_bar: tuple[str, ...]


def validate_bipartition(alg: QuotientAlgebra, bp: Bipartition):
    """Checks the split-shape conditions; returns the list of cross arrows."""
    verts = set(alg.quiver.vertices)
    g, gb = set(bp.gamma), set(bp.gamma_bar)
    if g & gb or g | gb != verts or not g or not gb:
        raise InvalidPresentationError("bipartition must be a proper disjoint cover of the vertices")
    cross = []
    for a in alg.quiver.arrows:
        if a.source in g and a.target in gb:
            raise InvalidPresentationError(
                f"arrow {a.name}: {a.source} -> {a.target} goes from the A-side to the B-side"
            )
        if a.source in gb and a.target in g:
            cross.append(a)
    return cross


class TriangularData:
    """Corner algebras A, B and the bimodule M = e_B Lambda e_A."""

    def __init__(self, lam: QuotientAlgebra, bp: Bipartition):
        self.lam = lam
        self.bp = bp
        self.cross_arrows = validate_bipartition(lam, bp)
        self.A = lam.corner(bp.gamma)
        self.B = lam.corner(bp.gamma_bar)
        g, gb = set(bp.gamma), set(bp.gamma_bar)
        self.m_words = [w for w in lam.basis if w.source in gb and w.target in g]
        self.m_index = {w: i for i, w in enumerate(self.m_words)}
        f = lam.field
        n = len(self.m_words)
        # right A-module structure: graded by target vertex
        by_target = {v: [w for w in self.m_words if w.target == v] for v in bp.gamma}
        dims = {v: len(by_target[v]) for v in bp.gamma}
        mats = {}
        for a in self.A.quiver.arrows:
            src_words = by_target[a.source]
            tgt_words = by_target[a.target]
            tgt_idx = {w: i for i, w in enumerate(tgt_words)}
            m = Matrix.zeros(f, len(src_words), len(tgt_words))
            for i, w in enumerate(src_words):
                for t, c in lam.table[(w, a.name)].items():
                    m.data[i][tgt_idx[t]] = c
            mats[a.name] = m
        self.m_module = ModuleRep(self.A, dims, mats)
        self.m_by_target = by_target
        self.m_by_source = {u: [w for w in self.m_words if w.source == u] for u in bp.gamma_bar}
        # left B-action: one matrix on the full word basis per B-arrow
        self.left_action = {}
        for b in self.B.quiver.arrows:
            m = Matrix.zeros(f, n, n)
            for i, w in enumerate(self.m_words):
                if w.source != b.target:
                    continue
                prod = lam.normal_form({Path(b.source, w.target, (b.name,) + w.arrows): f.one})
                for t, c in prod.items():
                    m.data[i][self.m_index[t]] = c
            self.left_action[b.name] = m
        if self.A.dim + self.B.dim + n != lam.dim:
            raise InvalidPresentationError("dimension bookkeeping failed for the bipartition")
        self._check_bimodule()
        self._tensor_cache: dict = {}

    def _check_bimodule(self):
        """(b.m).a == b.(m.a), both computed through the word tables."""
        f = self.lam.field
        n = len(self.m_words)
        for a in self.A.quiver.arrows:
            right = Matrix.zeros(f, n, n)
            for i, w in enumerate(self.m_words):
                if w.target != a.source:
                    continue
                for t, c in self.lam.table[(w, a.name)].items():
                    right.data[i][self.m_index[t]] = c
            for b in self.B.quiver.arrows:
                left = self.left_action[b.name]
                if not (left @ right - right @ left).is_zero():
                    raise InvalidPresentationError("left and right actions on M do not commute")

    def left_word_action(self, word: Path) -> Matrix:
        """Matrix of left multiplication by a B-path on the word basis of M."""
        f = self.lam.field
        n = len(self.m_words)
        m = Matrix.identity(f, n)
        for a in reversed(word.arrows):
            m = m @ self.left_action[a]
        return m


@dataclass
class CheckResult:
    holds: bool
    witness: str | None = None
    extra: dict | None = None


def check_left_semisimple(td: TriangularData) -> CheckResult:
    """rad(B) . M must vanish: every radical word of B kills every word of M."""
    f = td.lam.field
    for b in td.B.radical_basis():
        act = td.left_word_action(b)
        for i, w in enumerate(td.m_words):
            if w.source != b.target:
                continue
            if any(c != f.zero for c in act.data[i]):
                prod = "*".join(b.arrows + w.arrows)
                return CheckResult(False, witness=f"{b!r}*{w!r} = {prod} is nonzero in M")
    return CheckResult(True)


def check_right_projective(td: TriangularData) -> CheckResult:
    """M must be projective as a right A-module.

    On success reports the multiplicities of the indecomposable projectives.
    When M is generated by the cross arrows, additionally builds the explicit
    comparison map from the matching sum of projectives and verifies it is
    bijective.
    """
    M = td.m_module
    if M.is_zero():
        return CheckResult(True, extra={"multiplicities": {}, "explicit_map_bijective": None})
    if not syzygy(M).is_zero():
        sp = strip_projectives(M)
        return CheckResult(
            False,
            witness=f"syzygy of M_A is nonzero; non-projective core of dimension {sp.core.total_dim}",
        )
    from sgsplit.modules import top

    T, _ = top(M)
    mult = {v: T.dims[v] for v in td.bp.gamma if T.dims[v]}
    bijective = _explicit_cross_map_bijective(td)
    return CheckResult(True, extra={"multiplicities": mult, "explicit_map_bijective": bijective})


def _explicit_cross_map_bijective(td: TriangularData):
    """Assemble f = (f_i): sum of projectives at cross-arrow targets -> M.

    f_i maps a basis word p of e_{t_i} A to the normal form of (cross arrow
    then p).  Returns True/False for bijectivity, or None when the shapes
    already rule the comparison out (M not cross-arrow generated).
    """
    f = td.lam.field
    lam = td.lam
    rows = []
    for beta in td.cross_arrows:
        for p in td.A.words_from(beta.target):
            word = Path(beta.source, p.target, (beta.name,) + p.arrows)
            nf = lam.normal_form({word: f.one})
            row = [f.zero] * len(td.m_words)
            for t, c in nf.items():
                if t not in td.m_index:
                    return None
                row[td.m_index[t]] = c
            rows.append(row)
    if len(rows) != len(td.m_words):
        return None  # M is not generated by the cross arrows; comparison not applicable
    return Matrix.from_rows(f, rows, len(td.m_words)).is_invertible()


# -- the balanced tensor -----------------------------------------------------


class TensorOverB:
    """Y (x)_B M as a right A-module, with the projection bookkeeping.

    Pair basis: (B-side vertex u, index into Y_u, word of M with source u),
    graded by the target vertex of the word.  The quotient by the bilinearity
    relators over the radical of B is taken per A-side vertex.
    """

    def __init__(self, td: TriangularData, Y: ModuleRep):
        if Y.alg is not td.B:
            raise InvalidPresentationError("tensor_over_B: module is not over the B corner")
        self.td = td
        self.Y = Y
        f = td.lam.field
        self.pairs = {}  # A-vertex -> list of (u, i, word)
        for v in td.bp.gamma:
            lst = []
            for u in td.bp.gamma_bar:
                for w in td.m_by_source[u]:
                    if w.target != v:
                        continue
                    for i in range(Y.dims[u]):
                        lst.append((u, i, w))
            self.pairs[v] = lst
        pair_idx = {v: {p: i for i, p in enumerate(self.pairs[v])} for v in self.pairs}
        # relators: (y.b) (x) w  -  y (x) (b.w) for radical words b of B
        relators = {v: [] for v in self.pairs}
        for b in td.B.radical_basis():
            act_b = Y.path_action(b)  # Y_{s(b)} -> Y_{t(b)}
            left_b = td.left_word_action(b)
            for w in td.m_by_source.get(b.target, []):
                v = w.target
                idx = pair_idx[v]
                for i in range(Y.dims[b.source]):
                    row = [f.zero] * len(self.pairs[v])
                    for j in range(Y.dims[b.target]):
                        c = act_b.data[i][j]
                        if c != f.zero:
                            row[idx[(b.target, j, w)]] = f.add(row[idx[(b.target, j, w)]], c)
                    src_row = left_b.data[td.m_index[w]]
                    for k, c in enumerate(src_row):
                        if c != f.zero:
                            w2 = td.m_words[k]
                            key = (b.source, i, w2)
                            row[idx[key]] = f.sub(row[idx[key]], c)
                    relators[v].append(row)
        # quotient space per A-vertex: representatives are the non-pivot pairs
        self.proj = {}
        self.incl = {}
        dims = {}
        for v in self.pairs:
            n = len(self.pairs[v])
            rel = Matrix.from_rows(f, relators[v], n) if relators[v] else Matrix.zeros(f, 0, n)
            red, pivots = rel.rref()
            free = [c for c in range(n) if c not in pivots]
            dims[v] = len(free)
            proj = Matrix.zeros(f, n, len(free))
            for i in range(n):
                x = [f.zero] * n
                x[i] = f.one
                for r, pc in enumerate(pivots):
                    c = x[pc]
                    if c != f.zero:
                        x = [f.sub(a2, f.mul(c, b2)) for a2, b2 in zip(x, red.data[r])]
                proj.data[i] = [x[c] for c in free]
            incl = Matrix.zeros(f, len(free), n)
            for r, c in enumerate(free):
                incl.data[r][c] = f.one
            self.proj[v] = proj
            self.incl[v] = incl
        # right A-action through the word table
        mats = {}
        for a in td.A.quiver.arrows:
            u, t = a.source, a.target
            src_pairs = self.pairs[u]
            t_idx = pair_idx[t]
            act = Matrix.zeros(f, len(src_pairs), len(self.pairs[t]))
            for i, (bu, bi, w) in enumerate(src_pairs):
                for t2, c in td.lam.table[(w, a.name)].items():
                    act.data[i][t_idx[(bu, bi, t2)]] = c
            mats[a.name] = self.incl[u] @ act @ self.proj[t]
        amb_dims = {v: dims[v] for v in td.bp.gamma}
        self.module = ModuleRep(td.A, amb_dims, mats)

    def pair_coords(self, v: str, u: str, i: int, w: Path) -> list:
        """Coordinates of the class of a pure tensor in the quotient basis."""
        f = self.td.lam.field
        n = len(self.pairs[v])
        x = [f.zero] * n
        x[self.pairs[v].index((u, i, w))] = f.one
        return mat_vec(x, self.proj[v])

    def induced_map(self, g: ModuleMap, other: "TensorOverB") -> ModuleMap:
        """g (x) id: (Y (x) M) -> (Y' (x) M) for a B-map g: Y -> Y'."""
        f = self.td.lam.field
        blocks = {}
        for v in self.pairs:
            m = Matrix.zeros(f, len(self.pairs[v]), len(other.pairs[v]))
            oidx = {p: i for i, p in enumerate(other.pairs[v])}
            for i, (u, yi, w) in enumerate(self.pairs[v]):
                grow = g.blocks[u].data[yi]
                for j, c in enumerate(grow):
                    if c != f.zero:
                        m.data[i][oidx[(u, j, w)]] = c
            blocks[v] = self.incl[v] @ m @ other.proj[v]
        full_blocks = {v: blocks[v] for v in blocks}
        return ModuleMap(self.module, other.module, full_blocks, check=False)


def tensor_over_B(td: TriangularData, Y: ModuleRep) -> ModuleRep:
    return TensorOverB(td, Y).module


# -- triples and functors ----------------------------------------------------


@dataclass
class Triple:
    """(X, Y, f): X over A, Y over B, f: Y (x)_B M -> X as per-vertex matrices."""

    X: ModuleRep
    Y: ModuleRep
    f_blocks: dict  # A-vertex -> Matrix from tensor coords to X_v
    tensor: TensorOverB | None = None


def triple_to_module(td: TriangularData, t: Triple) -> ModuleRep:
    """Assemble the Lambda-module with X on the A-side and Y on the B-side."""
    if t.X.alg is not td.A or t.Y.alg is not td.B:
        raise InvalidPresentationError("triple components over the wrong corner algebras")
    f = td.lam.field
    tensor = t.tensor if t.tensor is not None else TensorOverB(td, t.Y)
    dims = {}
    for v in td.bp.gamma:
        dims[v] = t.X.dims[v]
    for u in td.bp.gamma_bar:
        dims[u] = t.Y.dims[u]
    a_names = {x.name for x in td.A.quiver.arrows}
    b_names = {x.name for x in td.B.quiver.arrows}
    mats = {}
    for a in td.lam.quiver.arrows:
        if a.name in a_names:
            mats[a.name] = t.X.mats[a.name]
        elif a.name in b_names:
            mats[a.name] = t.Y.mats[a.name]
        else:  # cross arrow, acting through f
            u, v = a.source, a.target
            m = Matrix.zeros(f, t.Y.dims[u], t.X.dims[v])
            w = Path(u, v, (a.name,))
            fv = t.f_blocks.get(v)
            for i in range(t.Y.dims[u]):
                coords = tensor.pair_coords(v, u, i, w)
                if fv is not None:
                    m.data[i] = mat_vec(coords, fv)
            mats[a.name] = m
    return ModuleRep(td.lam, dims, mats)


def module_to_triple(td: TriangularData, N: ModuleRep) -> Triple:
    """Restrict a Lambda-module to its (X, Y, f) presentation."""
    if N.alg is not td.lam:
        raise InvalidPresentationError("module is not over the split algebra")
    f = td.lam.field
    X = ModuleRep(
        td.A,
        {v: N.dims[v] for v in td.bp.gamma},
        {a.name: N.mats[a.name] for a in td.A.quiver.arrows},
    )
    Y = ModuleRep(
        td.B,
        {u: N.dims[u] for u in td.bp.gamma_bar},
        {a.name: N.mats[a.name] for a in td.B.quiver.arrows},
    )
    tensor = TensorOverB(td, Y)
    f_blocks = {}
    for v in td.bp.gamma:
        rows = []
        for (u, i, w) in [tensor.pairs[v][k] for k in tensor_basis_indices(tensor, v)]:
            x = [f.zero] * N.dims[u]
            x[i] = f.one
            rows.append(mat_vec(x, N.path_action(w)))
        f_blocks[v] = Matrix.from_rows(f, rows, X.dims[v]) if rows else Matrix.zeros(
            f, tensor.module.dims[v], X.dims[v]
        )
    return Triple(X, Y, f_blocks, tensor)


def tensor_basis_indices(tensor: TensorOverB, v: str) -> list[int]:
    """Pair indices representing the chosen quotient basis at vertex v."""
    f = tensor.td.lam.field
    out = []
    for r in range(tensor.incl[v].rows):
        row = tensor.incl[v].data[r]
        out.append(next(i for i, c in enumerate(row) if c != f.zero))
    return out


def i_star(td: TriangularData, X: ModuleRep) -> ModuleRep:
    """(X, 0, 0) as a Lambda-module."""
    return triple_to_module(td, Triple(X, zero_module(td.B), {}))


def j_star(td: TriangularData, Y: ModuleRep) -> ModuleRep:
    """(0, Y, 0) as a Lambda-module; cross arrows act by zero."""
    return triple_to_module(td, Triple(zero_module(td.A), Y, {}))


def i_shriek(td: TriangularData, N: ModuleRep) -> ModuleRep:
    """The X-component of the triple of N."""
    return module_to_triple(td, N).X


def j_upper(td: TriangularData, N: ModuleRep) -> ModuleRep:
    """The Y-component of the triple of N."""
    return module_to_triple(td, N).Y


# -- syzygy-formula verification ---------------------------------------------


@dataclass
class FormulaReport:
    ok: bool
    detail: str
    iso: IsoResult | None = None


def _require_hypotheses(td: TriangularData):
    if not check_left_semisimple(td).holds:
        raise HypothesisError("left action of B on M is not semisimple")
    if not check_right_projective(td).holds:
        raise HypothesisError("M is not projective as a right A-module")


def verify_syzygy_formula_a_side(td: TriangularData, X: ModuleRep, seed: int = 0) -> FormulaReport:
    """Syzygy over Lambda of (X,0,0) agrees with the A-side syzygy of X."""
    _require_hypotheses(td)
    lhs = strip_projectives(syzygy(i_star(td, X))).core
    rhs = strip_projectives(i_star(td, syzygy(X))).core
    # image-of-i_star membership: the B-side of the stripped syzygy vanishes
    b_side = sum(lhs.dims[u] for u in td.bp.gamma_bar)
    if b_side:
        return FormulaReport(False, f"stripped syzygy has B-side dimension {b_side}")
    iso = is_isomorphic(lhs, rhs, seed=seed)
    return FormulaReport(bool(iso), f"dims {lhs.dim_vector()} vs {rhs.dim_vector()}", iso)


def verify_syzygy_formula_b_side(td: TriangularData, Y: ModuleRep, seed: int = 0) -> FormulaReport:
    """Syzygy over Lambda of (0,Y,0) is (cover(Y) (x) M, 0, 0) + (0, syzygy(Y), 0)."""
    _require_hypotheses(td)
    lhs = syzygy(j_star(td, Y))
    if Y.is_zero():
        return FormulaReport(lhs.is_zero(), "zero module")
    OmY, incl, QY, _ = syzygy_with_data(Y)
    tq = TensorOverB(td, QY)
    rhs = direct_sum(i_star(td, tq.module), j_star(td, OmY))
    # the connecting map (inclusion tensor id) must vanish when rad(B).M = 0
    tom = TensorOverB(td, OmY)
    conn = tom.induced_map(incl, tq)
    if not conn.is_zero():
        return FormulaReport(False, "connecting map (inclusion (x) id) is nonzero")
    iso = is_isomorphic(lhs, rhs, seed=seed)
    return FormulaReport(bool(iso), f"dims {lhs.dim_vector()} vs {rhs.dim_vector()}", iso)


def extract_triangular(lam: QuotientAlgebra, bp: Bipartition) -> TriangularData:
    return TriangularData(lam, bp)
