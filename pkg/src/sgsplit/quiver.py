"""Quivers, path words and finite-dimensional quotients of path algebras.

A quotient kQ/I is materialized as a normal-word basis plus a multiplication
table.  Normal words are computed by completing the relation set into a
rewriting system under the degree-lexicographic order (degree first, then
arrow declaration order), resolving all overlap and containment ambiguities.
Admissibility is certified constructively: the radical must be nilpotent
within the discovered Loewy bound, and normal words must die out before the
configured length cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from sgsplit.errors import (
    InvalidPresentationError,
    NotAdmissibleError,
    NotComposableError,
)
from sgsplit.linalg import Field, Matrix, RowSpace


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPresentationError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InvalidPresentationError("duplicate arrow names")
        if set(names) & set(self.vertices):
            raise InvalidPresentationError("arrow name collides with vertex name")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InvalidPresentationError(f"arrow {a.name} has undeclared endpoint")

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise InvalidPresentationError(f"unknown arrow {name}")

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise InvalidPresentationError(f"unknown arrow {name}")

    def vertex_index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise InvalidPresentationError(f"unknown vertex {v}") from None

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def subquiver(self, verts) -> "Quiver":
        vs = [v for v in self.vertices if v in set(verts)]
        ars = tuple(a for a in self.arrows if a.source in set(vs) and a.target in set(vs))
        return Quiver(tuple(vs), ars)

    def reversed(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def connected_components(self) -> list[list[str]]:
        """Components of the underlying undirected graph, in vertex order."""
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            stack = [v]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                comp.append(u)
                stack.extend(adj[u] - seen)
            comps.append(sorted(comp, key=self.vertex_index))
        return comps


@dataclass(frozen=True)
class Path:
    """A path word: trivial path at a vertex, or a composable arrow sequence.

    Arrows compose left to right: (a, b) is "a then b".
    """

    source: str
    target: str
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __repr__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(self.arrows)


def trivial_path(v: str) -> Path:
    return Path(v, v, ())


def path_from_arrows(quiver: Quiver, names) -> Path:
    names = tuple(names)
    if not names:
        raise InvalidPresentationError("empty arrow list; use trivial_path")
    ars = [quiver.arrow(n) for n in names]
    for a, b in zip(ars, ars[1:]):
        if a.target != b.source:
            raise NotComposableError(f"{a.name} then {b.name}: target {a.target} != source {b.source}")
    return Path(ars[0].source, ars[-1].target, names)


def compose(quiver: Quiver, p: Path, q: Path) -> Path:
    """Concatenation p then q; trivial paths act as units."""
    if p.target != q.source:
        raise NotComposableError(f"cannot compose {p!r} (target {p.target}) with {q!r} (source {q.source})")
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    return Path(p.source, q.target, p.arrows + q.arrows)


# A linear combination of parallel paths is a dict Path -> field element.
LinComb = dict


def lc_clean(field: Field, lc: LinComb) -> LinComb:
    z = field.zero
    return {p: c for p, c in lc.items() if c != z}

def lc_add_into(field: Field, acc: LinComb, lc: LinComb, scalar=None):
    one = field.one
    s = one if scalar is None else scalar
    for p, c in lc.items():
        acc[p] = field.add(acc.get(p, field.zero), field.mul(s, c))
        if acc[p] == field.zero:
            del acc[p]


def validate_relation(quiver: Quiver, field: Field, lc: LinComb) -> LinComb:
    lc = lc_clean(field, lc)
    if not lc:
        return lc
    pairs = {(p.source, p.target) for p in lc}
    if len(pairs) != 1:
        raise InvalidPresentationError(f"relation mixes non-parallel paths: {sorted(map(repr, lc))}")
    for p in lc:
        if p.length < 2:
            raise InvalidPresentationError(f"relation generator contains path {p!r} of length < 2")
        path_from_arrows(quiver, p.arrows)  # validates composability and arrow names
    return lc


class QuotientAlgebra:
    """A finite-dimensional quotient Lambda = kQ/I with computed normal basis.

    Built via build_quotient; treat as immutable afterwards.
    """

    def __init__(self, quiver, relations, field, max_len, rules, basis, loewy_length):
        self.quiver = quiver
        self.relations = relations
        self.field = field
        self.max_len = max_len
        # rules: lead Path -> LinComb tail (lead == tail modulo the ideal)
        self._rules = rules
        self.basis = basis  # tuple of Path, deglex-sorted
        self.basis_index = {p: i for i, p in enumerate(basis)}
        self.loewy_length = loewy_length  # nilpotency index of the radical
        self.dim = len(basis)
        self._by_pair: dict[tuple[str, str], list[Path]] = {}
        for p in basis:
            self._by_pair.setdefault((p.source, p.target), []).append(p)
        # multiplication table: (basis word, arrow name) -> LinComb over basis
        self.table: dict[tuple[Path, str], LinComb] = {}
        for w in basis:
            for a in quiver.arrows_from(w.target):
                raw = Path(w.source, a.target, w.arrows + (a.name,))
                self.table[(w, a.name)] = _reduce(field, rules, {raw: field.one})
        self._cache: dict = {}

    # -- basic queries -------------------------------------------------------

    def deglex_key(self, p: Path):
        return _deglex_key(self.quiver, p)

    def basis_for_pair(self, source: str, target: str) -> list[Path]:
        return self._by_pair.get((source, target), [])

    def words_from(self, v: str) -> list[Path]:
        return [p for p in self.basis if p.source == v]

    def words_to(self, v: str) -> list[Path]:
        return [p for p in self.basis if p.target == v]

    def radical_basis(self) -> list[Path]:
        """Normal words of positive length span the radical (admissibility)."""
        return [p for p in self.basis if p.length >= 1]

    @property
    def max_word_length(self) -> int:
        return max((p.length for p in self.basis), default=0)

    # -- arithmetic ----------------------------------------------------------

    def normal_form(self, lc: LinComb) -> LinComb:
        """Canonical representative of a linear combination of paths."""
        for p in lc:
            if p.arrows:
                path_from_arrows(self.quiver, p.arrows)
        return _reduce(self.field, self._rules, lc)

    def multiply(self, lc1: LinComb, lc2: LinComb) -> LinComb:
        f = self.field
        out: LinComb = {}
        for p, c in lc1.items():
            for q, d in lc2.items():
                if p.target != q.source:
                    continue
                lc_add_into(f, out, {compose(self.quiver, p, q): f.mul(c, d)})
        return self.normal_form(out)

    def coords(self, lc: LinComb, words: list[Path]) -> list:
        """Coordinates of a normal-form combination over the given basis words."""
        idx = {w: i for i, w in enumerate(words)}
        v = [self.field.zero] * len(words)
        for p, c in lc.items():
            if p not in idx:
                raise InvalidPresentationError(f"{p!r} not among the expected basis words")
            v[idx[p]] = c
        return v

    # -- derived algebras ----------------------------------------------------

    def corner(self, verts) -> "QuotientAlgebra":
        """The corner algebra e_S Lambda e_S on the full subquiver of S."""
        S = [v for v in self.quiver.vertices if v in set(verts)]
        if len(S) != len(set(verts)):
            raise InvalidPresentationError("corner: unknown vertex in subset")
        sset = set(S)
        for w in self.basis:
            if w.source in sset and w.target in sset and w.arrows:
                thru = [self.quiver.arrow(a).target for a in w.arrows[:-1]]
                bad = [u for u in thru if u not in sset]
                if bad:
                    raise InvalidPresentationError(
                        f"corner: vertex subset is not path-closed, witness word {w!r} visits {bad[0]}"
                    )
        sub = self.quiver.subquiver(S)
        gens = induced_relations(self, S)
        alg = build_quotient(sub, gens, self.field, self.max_len)
        expected = {p for p in self.basis if p.source in sset and p.target in sset}
        if set(alg.basis) != expected:
            raise InvalidPresentationError("corner: induced presentation basis mismatch")
        return alg

    def opposite(self) -> "QuotientAlgebra":
        if "opposite" not in self._cache:
            rq = self.quiver.reversed()
            rels = []
            for lc in self.relations:
                rels.append({Path(p.target, p.source, tuple(reversed(p.arrows))): c for p, c in lc.items()})
            self._cache["opposite"] = build_quotient(rq, rels, self.field, self.max_len)
        return self._cache["opposite"]

    def describe(self) -> dict:
        return {
            "vertices": list(self.quiver.vertices),
            "arrows": [[a.name, a.source, a.target] for a in self.quiver.arrows],
            "dim": self.dim,
            "loewy_length": self.loewy_length,
            "basis": [repr(p) for p in self.basis],
        }

    def __repr__(self):
        return f"QuotientAlgebra(dim={self.dim}, vertices={list(self.quiver.vertices)})"


# -- rewriting machinery -----------------------------------------------------


def _deglex_key(quiver: Quiver, p: Path):
    if not p.arrows:
        return (0, (), quiver.vertex_index(p.source))
    return (len(p.arrows), tuple(quiver.arrow_index(a) for a in p.arrows), quiver.vertex_index(p.source))


def _find_reduction(rules_by_first: dict, word: Path):
    """First (position, lead) where some rule lead occurs as a subword."""
    arrows = word.arrows
    n = len(arrows)
    for i in range(n):
        for lead in rules_by_first.get(arrows[i], ()):
            la = lead.arrows
            if i + len(la) <= n and arrows[i : i + len(la)] == la:
                return i, lead
    return None


def _reduce(field: Field, rules, lc: LinComb) -> LinComb:
    """Normal form of lc under the rewriting rules.  rules: lead -> tail."""
    by_first: dict[str, list[Path]] = {}
    for lead in rules:
        by_first.setdefault(lead.arrows[0], []).append(lead)
    out: LinComb = {}
    work = dict(lc)
    z = field.zero
    while work:
        # take the deglex-largest word to keep the worklist short
        p = max(work, key=lambda q: (q.length, q.arrows))
        c = work.pop(p)
        if c == z:
            continue
        hit = _find_reduction(by_first, p) if p.arrows else None
        if hit is None:
            out[p] = field.add(out.get(p, z), c)
            if out[p] == z:
                del out[p]
            continue
        i, lead = hit
        tail = rules[lead]
        pre = p.arrows[:i]
        post = p.arrows[i + lead.length :]
        for t, tc in tail.items():
            arrows = pre + t.arrows + post
            if arrows:
                src = p.source if pre else t.source
                tgt = p.target if post else t.target
                q = Path(src, tgt, arrows)
            else:
                q = trivial_path(t.source)
            work[q] = field.add(work.get(q, z), field.mul(c, tc))
            if work[q] == z:
                del work[q]
    return out


def _make_rule(field: Field, quiver: Quiver, elt: LinComb):
    """Split a nonzero reduced element into (lead, tail) with lead monic."""
    lead = max(elt, key=lambda p: _deglex_key(quiver, p))
    inv = field.inv(elt[lead])
    tail = {p: field.neg(field.mul(inv, c)) for p, c in elt.items() if p != lead}
    return lead, tail


def _ambiguities(quiver: Quiver, u: Path, v: Path):
    """Overlap and containment ambiguities between rule leads u and v.

    Yields ('overlap', k) when a proper suffix of u of length k equals a proper
    prefix of v, and ('contain', i) when v contains u properly at position i.
    """
    ua, va = u.arrows, v.arrows
    for k in range(1, min(len(ua), len(va))):
        if ua[len(ua) - k :] == va[:k]:
            yield ("overlap", k)
    if len(ua) < len(va):
        for i in range(len(va) - len(ua) + 1):
            if va[i : i + len(ua)] == ua:
                yield ("contain", i)


def _mono_mul(field: Field, quiver: Quiver, pre: tuple, lc: LinComb, post: tuple, outer: Path) -> LinComb:
    """pre * lc * post where pre/post are arrow tuples cut from the word outer."""
    out: LinComb = {}
    for t, c in lc.items():
        arrows = pre + t.arrows + post
        if arrows:
            src = outer.source if pre else t.source
            tgt = outer.target if post else t.target
            q = Path(src, tgt, arrows)
        else:
            q = trivial_path(t.source)
        lc_add_into(field, out, {q: c})
    return out


_COMPLETION_CAP = 20000


def build_quotient(quiver: Quiver, relations, field: Field, max_len: int = 30) -> QuotientAlgebra:
    """Compute the normal-word basis and multiplication table of kQ/I.

    Raises NotAdmissibleError when normal words survive past max_len, when a
    derived ideal element has support in words of length < 2, or when the
    radical fails to be nilpotent (the quotient may be finite-dimensional and
    still not come from an admissible ideal).
    """
    relations = [validate_relation(quiver, field, lc) for lc in relations]
    relations = [lc for lc in relations if lc]
    rules: dict[Path, LinComb] = {}

    def add_element(elt: LinComb):
        added = []
        queue = [elt]
        steps = 0
        while queue:
            steps += 1
            if steps > _COMPLETION_CAP:
                raise NotAdmissibleError("rewriting completion did not terminate (ideal not admissible within bound)")
            e = _reduce(field, rules, queue.pop())
            if not e:
                continue
            lead, tail = _make_rule(field, quiver, e)
            if lead.length < 2:
                raise NotAdmissibleError(
                    f"ideal contains an element with leading word {lead!r} of length < 2; not admissible"
                )
            if lead.length > max_len:
                raise NotAdmissibleError("ideal element exceeds the length bound; not admissible within bound")
            # resolve ambiguities of the new rule against all rules (incl. itself)
            rules[lead] = tail
            for other in list(rules):
                for u, v in ((lead, other), (other, lead)):
                    if u == v and (u, v) != (lead, lead):
                        continue
                    for kind, pos in _ambiguities(quiver, u, v):
                        if kind == "overlap":
                            k = pos
                            w = Path(u.source, v.target, u.arrows + v.arrows[k:])
                            left = _mono_mul(field, quiver, (), rules[u], v.arrows[k:], w)
                            right = _mono_mul(field, quiver, u.arrows[: len(u.arrows) - k], rules[v], (), w)
                            diff: LinComb = dict(left)
                            lc_add_into(field, diff, right, field.neg(field.one))
                            if diff:
                                queue.append(diff)
                        else:  # u contained in v at position pos
                            i = pos
                            inner = _mono_mul(
                                field, quiver, v.arrows[:i], rules[u], v.arrows[i + u.length :], v
                            )
                            diff = dict(rules[v])
                            lc_add_into(field, diff, inner, field.neg(field.one))
                            if diff:
                                queue.append(diff)
        return added

    for lc in relations:
        add_element(dict(lc))

    # enumerate normal words degree by degree
    by_first: dict[str, list[Path]] = {}
    for lead in rules:
        by_first.setdefault(lead.arrows[0], []).append(lead)

    def is_normal(p: Path) -> bool:
        return _find_reduction(by_first, p) is None

    basis: list[Path] = [trivial_path(v) for v in quiver.vertices]
    frontier = list(basis)
    degree = 0
    while frontier:
        degree += 1
        if degree > max_len:
            raise NotAdmissibleError(
                f"normal words of length {max_len} still exist; not admissible within bound"
            )
        nxt = []
        for w in frontier:
            for a in quiver.arrows_from(w.target):
                cand = Path(w.source, a.target, w.arrows + (a.name,))
                if is_normal(cand):
                    nxt.append(cand)
        frontier = nxt
        basis.extend(frontier)

    basis.sort(key=lambda p: _deglex_key(quiver, p))
    alg = QuotientAlgebra(quiver, relations, field, max_len, rules, tuple(basis), 0)
    alg.loewy_length = _certify_nilpotent(alg)
    return alg


def _certify_nilpotent(alg: QuotientAlgebra) -> int:
    """Nilpotency index of the radical; raises if rad is not nilpotent."""
    f = alg.field
    n = alg.dim
    rad_words = alg.radical_basis()
    if not rad_words:
        return 1
    current = RowSpace(f, n)
    for w in rad_words:
        v = [f.zero] * n
        v[alg.basis_index[w]] = f.one
        current.add(v)
    power = 1
    bound = alg.max_word_length + 1
    while current.dim:
        power += 1
        nxt = RowSpace(f, n)
        for row in current.rows:
            for a in alg.quiver.arrows:
                out = [f.zero] * n
                for i, c in enumerate(row):
                    if c == f.zero:
                        continue
                    w = alg.basis[i]
                    if w.target != a.source:
                        continue
                    for t, tc in alg.table[(w, a.name)].items():
                        j = alg.basis_index[t]
                        out[j] = f.add(out[j], f.mul(c, tc))
                nxt.add(out)
        if nxt.dim >= current.dim or power > bound:
            raise NotAdmissibleError(
                "radical is not nilpotent within the Loewy bound; ideal not admissible"
            )
        current = nxt
    return power


def induced_relations(alg: QuotientAlgebra, S) -> list[LinComb]:
    """Generators of the kernel of k(subquiver on S) -> Lambda.

    Enumerates subquiver paths degree by degree, pruning any path that is
    congruent modulo the ideal to a combination of previously kept paths (its
    extensions are then ideal-generated by the recorded generator).
    """
    f = alg.field
    sub = alg.quiver.subquiver(S)
    gens: list[LinComb] = []
    # kept[(source, target)] -> (paths, their normal-form coordinate vectors)
    kept: dict[tuple[str, str], tuple[list[Path], list[list]]] = {}

    def nf_vector(p: Path):
        nf = alg.normal_form({p: f.one})
        v = [f.zero] * alg.dim
        for w, c in nf.items():
            v[alg.basis_index[w]] = c
        return v

    def try_keep(q: Path) -> bool:
        """Record q if independent; otherwise emit the kernel generator."""
        v = nf_vector(q)
        key = (q.source, q.target)
        paths, vecs = kept.setdefault(key, ([], []))
        coords = (
            Matrix.from_rows(f, vecs, alg.dim).solve_left(v) if vecs else ([] if all(x == f.zero for x in v) else None)
        )
        if coords is None:
            paths.append(q)
            vecs.append(v)
            return True
        gen: LinComb = {q: f.one}
        for path, c in zip(paths, coords):
            if c != f.zero:
                lc_add_into(f, gen, {path: c}, f.neg(f.one))
        gens.append(gen)
        return False

    frontier: list[Path] = []
    for a in sub.arrows:
        p = Path(a.source, a.target, (a.name,))
        if try_keep(p):
            frontier.append(p)
    bound = alg.max_word_length + 1
    degree = 1
    while frontier and degree < bound:
        degree += 1
        nxt = []
        for p in frontier:
            for a in sub.arrows:
                if a.source != p.target:
                    continue
                q = Path(p.source, a.target, p.arrows + (a.name,))
                if try_keep(q):
                    nxt.append(q)
        frontier = nxt
    # paths that reached the bound are killed by long-path generators
    for p in frontier:
        for a in sub.arrows:
            if a.source == p.target:
                q = Path(p.source, a.target, p.arrows + (a.name,))
                gens.append({q: f.one})
    return gens
