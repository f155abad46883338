"""Command-line driver: info / split / decompose / syzygy / sghom / gldim
over presentation files, with optional JSON output.

Exit codes: 0 success, 1 input error, 2 not admissible within the Loewy
bound, 3 inconclusive verdict under --strict.
"""

from __future__ import annotations

import argparse
import json
import sys

from sgsplit import dsl
from sgsplit.errors import DSLError, InvalidPresentationError, NotAdmissibleError
from sgsplit.linalg import GF, QQ
from sgsplit.modules import projective, simple, strip_projectives, syzygy
from sgsplit.probes import gldim_probe, sg_decomposition_report, sg_hom_dim
from sgsplit.splitting import decompose, find_splits
from sgsplit.triangular import extract_triangular, i_star, j_star

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_ADMISSIBLE = 2
EXIT_INCONCLUSIVE = 3


def _parse_field(text: str):
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("F"):
        try:
            return GF(int(text[1:].strip()))
        except (ValueError, InvalidPresentationError):
            pass
    raise InvalidPresentationError(f"bad field spec '{text}' (use Q or F<prime>)")


def _load(args):
    with open(args.file) as fh:
        text = fh.read()
    override = _parse_field(args.field) if args.field else None
    pf = dsl.parse(text, field_override=override)
    alg = dsl.build(pf, max_len=args.max_loewy)
    return pf, alg


def _first_valid_split(alg):
    for cert in find_splits(alg):
        if cert.semantically_valid:
            return cert
    return None


def _resolve_module(alg, spec: str):
    parts = spec.split(":")
    if len(parts) == 2 and parts[0] in ("simple", "proj"):
        kind, v = parts
        if v not in alg.quiver.vertices:
            raise InvalidPresentationError(f"unknown vertex '{v}' in module spec '{spec}'")
        return simple(alg, v) if kind == "simple" else projective(alg, v)
    if len(parts) == 3 and parts[0] in ("istar", "jstar") and parts[1] == "simple":
        cert = _first_valid_split(alg)
        if cert is None:
            raise InvalidPresentationError(
                f"module spec '{spec}' needs a valid split, but the algebra has none"
            )
        td = extract_triangular(alg, cert.bipartition)
        side = td.A if parts[0] == "istar" else td.B
        v = parts[2]
        if v not in side.quiver.vertices:
            raise InvalidPresentationError(f"unknown vertex '{v}' in module spec '{spec}'")
        S = simple(side, v)
        return i_star(td, S) if parts[0] == "istar" else j_star(td, S)
    raise InvalidPresentationError(
        f"bad module spec '{spec}' (use simple:v, proj:v, istar:simple:v, jstar:simple:v)"
    )


def _algebra_dict(pf, alg):
    return {
        "field": pf.field_decl,
        "vertices": list(alg.quiver.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target}
                   for a in alg.quiver.arrows],
        "relations": len(alg.relations),
        "dim": alg.dim,
        "loewy_length": alg.loewy_length,
    }


def _emit(args, payload, human_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _pd_dict(v):
    d = {"kind": v.kind}
    if v.kind == "finite":
        d["value"] = v.value
    return d


def _cmd_info(args) -> int:
    pf, alg = _load(args)
    payload = {
        "algebra": _algebra_dict(pf, alg),
        "basis": [repr(p) for p in alg.basis],
        "radical": [repr(p) for p in alg.radical_basis()],
    }
    lines = [
        f"field: {pf.field_decl}",
        f"vertices: {' '.join(alg.quiver.vertices)}",
        f"arrows: {', '.join(f'{a.name}: {a.source} -> {a.target}' for a in alg.quiver.arrows)}",
        f"dimension: {alg.dim}",
        f"loewy length: {alg.loewy_length}",
        f"basis: {', '.join(repr(p) for p in alg.basis)}",
        f"radical basis: {', '.join(repr(p) for p in alg.radical_basis()) or '(zero)'}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_split(args) -> int:
    pf, alg = _load(args)
    certs = find_splits(alg)
    payload = {
        "algebra": _algebra_dict(pf, alg),
        "splits": [c.to_dict() for c in certs],
    }
    lines = [f"{len(certs)} candidate bipartition(s)"]
    for c in certs:
        d = c.to_dict()
        lines.append(
            f"  gamma={{{', '.join(d['gamma'])}}}: "
            f"left_semisimple={str(d['left_semisimple']).lower()}"
            + (f" (witness {d['left_witness']})" if d["left_witness"] else "")
            + f", right_projective={str(d['right_projective']).lower()}"
            + f", syntactic={str(d['syntactic']).lower()}"
        )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    pf, alg = _load(args)
    tree = decompose(alg)
    report = sg_decomposition_report(tree, cap=args.cap)
    probes = report.to_dict()
    probes["leaf_labels"] = [f"k-algebra dim {l.dim}" for l in report.leaves]
    payload = {
        "algebra": _algebra_dict(pf, alg),
        "dims": [l.dim for l in report.leaves],
        "splits": [c.to_dict() for c in find_splits(alg)],
        "tree": tree.to_dict(),
        "probes": probes,
    }
    lines = [f"leaves: {', '.join(probes['leaf_labels'])}", report.summary]
    if report.total is not None:
        lines.append(f"total stable indecomposables: {report.total}")
    else:
        lines.append("total stable indecomposables: unavailable")
    if args.report_dir:
        from sgsplit.report import write_report

        written = write_report(tree, report, args.report_dir)
        lines.append(f"report written: {', '.join(written)}")
        payload["report_files"] = written
    _emit(args, payload, lines)
    if args.strict and any(l.gldim.kind == "unknown" for l in report.leaves):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_syzygy(args) -> int:
    pf, alg = _load(args)
    M = _resolve_module(alg, args.module)
    chain = []
    cur = M
    for step in range(args.steps + 1):
        stripped = strip_projectives(cur).core
        chain.append({
            "step": step,
            "dims": dict(cur.dims),
            "stripped_dims": dict(stripped.dims),
        })
        if step < args.steps:
            cur = syzygy(stripped)
    payload = {"algebra": _algebra_dict(pf, alg), "module": args.module, "chain": chain}
    lines = [f"syzygy chain of {args.module}:"]
    for c in chain:
        lines.append(f"  step {c['step']}: dims {c['dims']} stripped {c['stripped_dims']}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_sghom(args) -> int:
    pf, alg = _load(args)
    M = _resolve_module(alg, getattr(args, "from"))
    N = _resolve_module(alg, args.to)
    r = sg_hom_dim(M, N, shift=args.shift, cap=args.cap)
    payload = {
        "algebra": _algebra_dict(pf, alg),
        "from": getattr(args, "from"),
        "to": args.to,
        "shift": args.shift,
        "sequence": r.seq,
        "verdict": r.verdict,
        "value": r.value,
        "period": r.period,
    }
    lines = [f"d_l sequence: {r.seq}", f"verdict: {r!r}"]
    _emit(args, payload, lines)
    if args.strict and r.verdict == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_gldim(args) -> int:
    pf, alg = _load(args)
    v = gldim_probe(alg, cap=args.cap)
    payload = {"algebra": _algebra_dict(pf, alg), "gldim": _pd_dict(v)}
    lines = [f"global dimension: {v!r}"]
    _emit(args, payload, lines)
    if args.strict and v.kind == "unknown":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _build_parser():
    ap = argparse.ArgumentParser(prog="sgsplit",
                                 description="triangular splittings and homological probes "
                                             "for bound quiver algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, report_dir=False):
        p.add_argument("file", help="presentation file")
        p.add_argument("--field", help="override the field (Q or F<prime>)")
        p.add_argument("--max-loewy", type=int, default=30,
                       help="word-length bound for admissibility (default 30)")
        p.add_argument("--cap", type=int, default=12,
                       help="syzygy iteration cap for probes (default 12)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized isomorphism tests (default 0)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--strict", action="store_true",
                       help="exit 3 on inconclusive verdicts")
        if report_dir:
            p.add_argument("--report-dir",
                           help="write summary.csv and tree.png to this directory")

    common(sub.add_parser("info", help="dimension, basis, radical"))
    common(sub.add_parser("split", help="all candidate bipartitions with verdicts"))
    common(sub.add_parser("decompose", help="decomposition tree and leaf probes"),
           report_dir=True)
    p = sub.add_parser("syzygy", help="iterated syzygy dimension vectors")
    common(p)
    p.add_argument("--module", required=True, help="module spec (simple:v, proj:v, ...)")
    p.add_argument("--steps", type=int, default=6)
    p = sub.add_parser("sghom", help="stabilized stable-Hom dimension")
    common(p)
    p.add_argument("--from", required=True, dest="from", help="source module spec")
    p.add_argument("--to", required=True, help="target module spec")
    p.add_argument("--shift", type=int, default=0)
    common(sub.add_parser("gldim", help="global dimension probe"))
    return ap


_COMMANDS = {
    "info": _cmd_info,
    "split": _cmd_split,
    "decompose": _cmd_decompose,
    "syzygy": _cmd_syzygy,
    "sghom": _cmd_sghom,
    "gldim": _cmd_gldim,
}


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as e:
        print(f"error: cannot read {e.filename}", file=sys.stderr)
        return EXIT_INPUT
    except DSLError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except NotAdmissibleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except InvalidPresentationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
