"""Search for triangular splittings and the recursive decomposition tree."""

from __future__ import annotations

from dataclasses import dataclass

from sgsplit.errors import InvalidPresentationError, NotAdmissibleError
from sgsplit.quiver import (
    LinComb,
    Path,
    QuotientAlgebra,
    build_quotient,
    induced_relations,
)
from sgsplit.triangular import (
    Bipartition,
    CheckResult,
    check_left_semisimple,
    check_right_projective,
    extract_triangular,
    validate_bipartition,
)

_MAX_VERTICES = 20


@dataclass
class SyntacticResult:
    holds: bool
    reason: str | None = None
    candidate_dim: int | None = None
    algebra_dim: int | None = None
    missing: list | None = None  # cross words not in the ideal


@dataclass
class SplitCertificate:
    bipartition: Bipartition
    cross_arrows: list
    left_semisimple: CheckResult
    right_projective: CheckResult
    syntactic: SyntacticResult

    @property
    def is_product(self) -> bool:
        return not self.cross_arrows

    @property
    def semantically_valid(self) -> bool:
        return bool(self.cross_arrows) and self.left_semisimple.holds and self.right_projective.holds

    def to_dict(self) -> dict:
        return {
            "gamma": list(self.bipartition.gamma),
            "gamma_bar": list(self.bipartition.gamma_bar),
            "cross_arrows": [a.name for a in self.cross_arrows],
            "left_semisimple": self.left_semisimple.holds,
            "left_witness": self.left_semisimple.witness,
            "right_projective": self.right_projective.holds,
            "right_witness": self.right_projective.witness,
            "right_multiplicities": (self.right_projective.extra or {}).get("multiplicities"),
            "explicit_map_bijective": (self.right_projective.extra or {}).get(
                "explicit_map_bijective"
            ),
            "syntactic": self.syntactic.holds,
            "syntactic_reason": self.syntactic.reason,
            "is_product": self.is_product,
        }


def check_syntactic(lam: QuotientAlgebra, bp: Bipartition) -> SyntacticResult:
    """Is the ideal generated by its two side-slices plus all (B-arrow)(cross) words?

    Builds the candidate ideal J from the degreewise slices supported on each
    side and the length-2 crossing words, checks J is inside the ideal by
    normal-form membership, and compares quotient dimensions.
    """
    f = lam.field
    cross = validate_bipartition(lam, bp)
    gens: list[LinComb] = []
    gens.extend(induced_relations(lam, bp.gamma))
    gens.extend(induced_relations(lam, bp.gamma_bar))
    cross_words = []
    b_arrows = [a for a in lam.quiver.arrows if a.source in set(bp.gamma_bar) and a.target in set(bp.gamma_bar)]
    for alpha in b_arrows:
        for beta in cross:
            if alpha.target == beta.source:
                w = Path(alpha.source, beta.target, (alpha.name, beta.name))
                cross_words.append(w)
                gens.append({w: f.one})
    missing = [repr(w) for w in cross_words if lam.normal_form({w: f.one})]
    if missing:
        return SyntacticResult(
            False,
            reason=f"crossing words not in the ideal: {', '.join(missing)}",
            algebra_dim=lam.dim,
            missing=missing,
        )
    try:
        cand = build_quotient(lam.quiver, gens, f, lam.max_len)
    except NotAdmissibleError:
        return SyntacticResult(
            False, reason="candidate ideal not admissible within bound", algebra_dim=lam.dim
        )
    if cand.dim != lam.dim:
        return SyntacticResult(
            False,
            reason=f"candidate quotient has dimension {cand.dim}, algebra has {lam.dim}",
            candidate_dim=cand.dim,
            algebra_dim=lam.dim,
        )
    return SyntacticResult(True, candidate_dim=cand.dim, algebra_dim=lam.dim)


def _proper_bipartitions(lam: QuotientAlgebra):
    verts = lam.quiver.vertices
    n = len(verts)
    subsets = []
    for mask in range(1, (1 << n) - 1):
        g = tuple(verts[i] for i in range(n) if mask & (1 << i))
        subsets.append(g)
    subsets.sort(key=lambda g: tuple(lam.quiver.vertex_index(v) for v in g))
    for g in subsets:
        gb = tuple(v for v in verts if v not in set(g))
        yield Bipartition(g, gb)


def find_splits(lam: QuotientAlgebra) -> list[SplitCertificate]:
    """All shape-valid bipartitions with their semantic and syntactic verdicts."""
    if len(lam.quiver.vertices) > _MAX_VERTICES:
        raise InvalidPresentationError(
            f"bipartition search is exhaustive and limited to {_MAX_VERTICES} vertices"
        )
    out = []
    for bp in _proper_bipartitions(lam):
        try:
            td = extract_triangular(lam, bp)
        except InvalidPresentationError:
            continue  # an arrow runs from the A-side to the B-side
        cert = SplitCertificate(
            bipartition=bp,
            cross_arrows=td.cross_arrows,
            left_semisimple=check_left_semisimple(td),
            right_projective=check_right_projective(td),
            syntactic=check_syntactic(lam, bp),
        )
        out.append(cert)
    return out


@dataclass
class DecompositionTree:
    algebra: QuotientAlgebra
    kind: str  # "leaf" | "split" | "product"
    certificate: SplitCertificate | None = None
    left: "DecompositionTree | None" = None
    right: "DecompositionTree | None" = None

    def leaves(self) -> list[QuotientAlgebra]:
        if self.kind == "leaf":
            return [self.algebra]
        return self.left.leaves() + self.right.leaves()

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "dim": self.algebra.dim,
            "vertices": list(self.algebra.quiver.vertices),
        }
        if self.kind != "leaf":
            d["certificate"] = self.certificate.to_dict() if self.certificate else None
            d["left"] = self.left.to_dict()
            d["right"] = self.right.to_dict()
        return d


def decompose(lam: QuotientAlgebra) -> DecompositionTree:
    """Recursively split along product decompositions and valid triangular splits.

    Product splits (connected components) are taken first; then the first
    deterministically ordered bipartition passing both semantic checks.
    """
    comps = lam.quiver.connected_components()
    if len(comps) > 1:
        g = tuple(comps[0])
        gb = tuple(v for v in lam.quiver.vertices if v not in set(g))
        bp = Bipartition(g, gb)
        A = lam.corner(g)
        B = lam.corner(gb)
        td = extract_triangular(lam, bp)
        cert = SplitCertificate(
            bipartition=bp,
            cross_arrows=[],
            left_semisimple=check_left_semisimple(td),
            right_projective=check_right_projective(td),
            syntactic=check_syntactic(lam, bp),
        )
        return DecompositionTree(lam, "product", cert, decompose(A), decompose(B))
    if len(lam.quiver.vertices) < 2:
        return DecompositionTree(lam, "leaf")
    for cert in find_splits(lam):
        if cert.semantically_valid:
            td = extract_triangular(lam, cert.bipartition)
            return DecompositionTree(
                lam, "split", cert, decompose(td.A), decompose(td.B)
            )
    return DecompositionTree(lam, "leaf")
