"""Desk-scale homological probes: stabilized stable-Hom dimensions, projective
and global dimension, selfinjectivity, Nakayama detection, and counting of
stable indecomposables for the leaves of a decomposition tree."""

from __future__ import annotations

from dataclasses import dataclass

from sgsplit.errors import HypothesisError
from sgsplit.modules import (
    ModuleRep,
    injective,
    is_isomorphic,
    projective,
    radical_of,
    simple,
    stable_hom_dim,
    strip_projectives,
    syzygy,
)
from sgsplit.quiver import QuotientAlgebra

DEFAULT_CAP = 12


@dataclass
class SgHomResult:
    seq: list[int]
    verdict: str  # "stabilized" | "periodic" | "inconclusive"
    value: int | None = None
    period: int | None = None
    shift: int = 0
    cap: int = DEFAULT_CAP

    def __repr__(self):
        if self.verdict == "stabilized":
            return f"SgHomResult(stabilized({self.value}), shift={self.shift})"
        if self.verdict == "periodic":
            return f"SgHomResult(periodic({self.seq}, period={self.period}), shift={self.shift})"
        return f"SgHomResult(inconclusive(cap={self.cap}), shift={self.shift})"


class _LazyChain:
    """Stripped syzygy chain [M*, (Omega M)*, ...] computed on demand."""

    def __init__(self, M: ModuleRep):
        self._chain = [strip_projectives(M).core]

    def __getitem__(self, l: int) -> ModuleRep:
        while len(self._chain) <= l:
            cur = self._chain[-1]
            self._chain.append(cur if cur.is_zero() else strip_projectives(syzygy(cur)).core)
        return self._chain[l]


def _pairs_recur(pair_a, pair_b) -> bool:
    """Both components isomorphic (confirmed, not merely plausible)."""
    ra = is_isomorphic(pair_a[0], pair_b[0])
    if ra.verdict != "yes":
        return False
    rb = is_isomorphic(pair_a[1], pair_b[1])
    return rb.verdict == "yes"


def sg_hom_dim(M: ModuleRep, N: ModuleRep, shift: int = 0, cap: int = DEFAULT_CAP) -> SgHomResult:
    """Eventual stable-Hom dimension between iterated syzygies of M and N.

    For shift s >= 0 level l compares (Omega^{l+s} M, Omega^l N); for s < 0 it
    compares (Omega^l M, Omega^{l-s} N).  All syzygies are stripped of
    projective summands.  A "stabilized" verdict needs a confirmed recurrence
    of the syzygy pair plus a constant dimension over one full period.
    """
    if M.alg is not N.alg:
        raise HypothesisError("sg_hom_dim needs modules over the same algebra")
    if cap < 1:
        raise HypothesisError("cap must be at least 1")
    s = shift
    m_chain = _LazyChain(M)
    n_chain = _LazyChain(N)

    def pair(l):
        if s >= 0:
            return (m_chain[l + s], n_chain[l])
        return (m_chain[l], n_chain[l - s])

    seq = []
    pairs = []
    for l in range(cap + 1):
        p = pair(l)
        seq.append(stable_hom_dim(p[0], p[1]))
        pairs.append(p)
        # a vanished component vanishes at all later levels, so the tail is 0
        if p[0].is_zero() or p[1].is_zero():
            return SgHomResult(seq, "stabilized", value=0, period=1, shift=shift, cap=cap)
        # look for a recurrence of the pair at an earlier level
        for l0 in range(l):
            if (pairs[l0][0].dim_vector() != p[0].dim_vector()
                    or pairs[l0][1].dim_vector() != p[1].dim_vector()):
                continue
            if not _pairs_recur(pairs[l0], p):
                continue
            period = l - l0
            if all(seq[l0 + i] == seq[l0] for i in range(period)):
                return SgHomResult(seq, "stabilized", value=seq[l0],
                                   period=period, shift=shift, cap=cap)
            return SgHomResult(seq, "periodic", period=period, shift=shift, cap=cap)
    return SgHomResult(seq, "inconclusive", shift=shift, cap=cap)


@dataclass
class PdVerdict:
    kind: str  # "finite" | "infinite" | "unknown"
    value: int | None = None  # pd when finite
    witness: tuple | None = None  # (l1, l2) recurrence levels when infinite
    cap: int | None = None

    def __repr__(self):
        if self.kind == "finite":
            return f"PdVerdict(finite({self.value}))"
        if self.kind == "infinite":
            return f"PdVerdict(infinite-certified{self.witness})"
        return f"PdVerdict(unknown(cap={self.cap}))"


def pd_probe(M: ModuleRep, cap: int = DEFAULT_CAP) -> PdVerdict:
    """Projective dimension by iterated stripped syzygies.

    finite(n): the n-th stripped syzygy vanishes (and the (n-1)-st does not);
    infinite: a nonzero stripped syzygy repeats up to isomorphism.
    """
    if cap < 1:
        raise HypothesisError("cap must be at least 1")
    chain = [strip_projectives(M).core]
    if chain[0].is_zero():
        return PdVerdict("finite", value=0)
    for l in range(1, cap + 1):
        nxt = strip_projectives(syzygy(chain[-1])).core
        if nxt.is_zero():
            return PdVerdict("finite", value=l)
        for l0, earlier in enumerate(chain):
            if earlier.dim_vector() != nxt.dim_vector():
                continue
            if is_isomorphic(earlier, nxt).verdict == "yes":
                return PdVerdict("infinite", witness=(l0, l))
        chain.append(nxt)
    return PdVerdict("unknown", cap=cap)


def gldim_probe(alg: QuotientAlgebra, cap: int = DEFAULT_CAP) -> PdVerdict:
    """Aggregate pd_probe over all simples."""
    best = 0
    unknown = None
    for v in alg.quiver.vertices:
        verdict = pd_probe(simple(alg, v), cap)
        if verdict.kind == "infinite":
            return verdict
        if verdict.kind == "unknown":
            unknown = verdict
        else:
            best = max(best, verdict.value)
    if unknown is not None:
        return unknown
    return PdVerdict("finite", value=best)


@dataclass
class SelfinjResult:
    holds: bool
    permutation: dict | None = None  # vertex -> vertex with injective(v) ~ projective(sigma v)
    witness: str | None = None  # vertex whose injective is not projective


def is_selfinjective(alg: QuotientAlgebra) -> SelfinjResult:
    """Does injective(v) match projective(sigma(v)) for some vertex permutation?"""
    verts = alg.quiver.vertices
    sigma = {}
    used = set()
    for v in verts:
        iv = injective(alg, v)
        match = None
        for w in verts:
            if w in used:
                continue
            if is_isomorphic(iv, projective(alg, w)).verdict == "yes":
                match = w
                break
        if match is None:
            return SelfinjResult(False, witness=v)
        sigma[v] = match
        used.add(match)
    return SelfinjResult(True, permutation=sigma)


def _is_uniserial(M: ModuleRep) -> bool:
    """Every radical layer has total dimension at most one."""
    cur = M
    while not cur.is_zero():
        nxt, _ = radical_of(cur)
        if cur.total_dim - nxt.total_dim > 1:
            return False
        cur = nxt
    return True


@dataclass
class NakayamaResult:
    holds: bool
    witness: str | None = None


def is_nakayama(alg: QuotientAlgebra) -> NakayamaResult:
    """Every indecomposable projective and injective is uniserial."""
    for v in alg.quiver.vertices:
        if not _is_uniserial(projective(alg, v)):
            return NakayamaResult(False, witness=f"projective({v}) is not uniserial")
        if not _is_uniserial(injective(alg, v)):
            return NakayamaResult(False, witness=f"injective({v}) is not uniserial")
    return NakayamaResult(True)


def _loewy_length_of(M: ModuleRep) -> int:
    n = 0
    cur = M
    while not cur.is_zero():
        cur, _ = radical_of(cur)
        n += 1
    return n


def stable_indec_count(alg: QuotientAlgebra) -> int:
    """Number of non-projective indecomposables of a selfinjective Nakayama algebra.

    The indecomposables are the nonzero radical-series quotients of the
    indecomposable projectives; discarding the projectives themselves leaves
    sum_v (Loewy length of projective(v) - 1).
    """
    si = is_selfinjective(alg)
    if not si.holds:
        raise HypothesisError(
            f"stable_indec_count needs a selfinjective algebra (witness vertex {si.witness})"
        )
    nk = is_nakayama(alg)
    if not nk.holds:
        raise HypothesisError(f"stable_indec_count needs a Nakayama algebra ({nk.witness})")
    return sum(_loewy_length_of(projective(alg, v)) - 1 for v in alg.quiver.vertices)


@dataclass
class LeafReport:
    vertices: list
    dim: int
    gldim: PdVerdict
    selfinjective: bool
    nakayama: bool
    count: int | None  # None when unavailable

    def to_dict(self) -> dict:
        g = {"kind": self.gldim.kind}
        if self.gldim.kind == "finite":
            g["value"] = self.gldim.value
        return {
            "vertices": list(self.vertices),
            "dim": self.dim,
            "gldim": g,
            "selfinjective": self.selfinjective,
            "nakayama": self.nakayama,
            "stable_indec_count": self.count,
        }


@dataclass
class DecompositionReport:
    leaves: list[LeafReport]
    total: int | None  # None when some leaf could not be counted
    summary: str

    def to_dict(self) -> dict:
        return {
            "leaves": [l.to_dict() for l in self.leaves],
            "total_stable_indecomposables": self.total,
            "summary": self.summary,
        }


def sg_decomposition_report(tree, cap: int = DEFAULT_CAP) -> DecompositionReport:
    """Per-leaf homological summary and, when every leaf resolves, a total count."""
    leaves = []
    total = 0
    total_known = True
    for alg in tree.leaves():
        g = gldim_probe(alg, cap)
        si = is_selfinjective(alg)
        nk = is_nakayama(alg)
        if g.kind == "finite":
            count = 0
        elif si.holds and nk.holds:
            count = stable_indec_count(alg)
        else:
            count = None
        if count is None:
            total_known = False
        else:
            total += count
        leaves.append(LeafReport(
            vertices=alg.quiver.vertices, dim=alg.dim, gldim=g,
            selfinjective=si.holds, nakayama=nk.holds, count=count,
        ))
    parts = [f"k-algebra dim {l.dim}" for l in leaves]
    if total_known and total == 0:
        summary = "singularity category trivial (" + " x ".join(parts) + ")"
    else:
        summary = "singularity category ~ coproduct over leaves: " + ", ".join(parts)
    return DecompositionReport(leaves, total if total_known else None, summary)
