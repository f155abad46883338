"""Rendered decomposition reports: a CSV table of the leaves and a PNG of the
decomposition tree."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def write_summary_csv(report, path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["vertices", "dim", "gldim", "selfinjective", "nakayama",
                    "stable_indec_count"])
        for leaf in report.leaves:
            g = leaf.gldim
            gtxt = f"finite({g.value})" if g.kind == "finite" else g.kind
            w.writerow([" ".join(leaf.vertices), leaf.dim, gtxt,
                        leaf.selfinjective, leaf.nakayama,
                        "" if leaf.count is None else leaf.count])
        w.writerow([])
        w.writerow(["total", "" if report.total is None else report.total])


def _layout(tree, depth=0, xs=None):
    """Assign (x, y) positions; leaves spread left-to-right, y = -depth."""
    if xs is None:
        xs = {"next": 0}
    if tree.kind == "leaf":
        x = xs["next"]
        xs["next"] += 1
        return {id(tree): (x, -depth)}, x
    lpos, lx = _layout(tree.left, depth + 1, xs)
    rpos, rx = _layout(tree.right, depth + 1, xs)
    pos = {**lpos, **rpos}
    x = (lx + rx) / 2
    pos[id(tree)] = (x, -depth)
    return pos, x


def _draw(ax, tree, pos):
    x, y = pos[id(tree)]
    if tree.kind == "leaf":
        label = f"dim {tree.algebra.dim}\n{{{', '.join(tree.algebra.quiver.vertices)}}}"
        box = dict(boxstyle="round", fc="#cfe8cf", ec="black")
    else:
        tag = "product" if tree.kind == "product" else "split"
        label = f"{tag}\ndim {tree.algebra.dim}"
        box = dict(boxstyle="round", fc="#dde5f5", ec="black")
        for child in (tree.left, tree.right):
            cx, cy = pos[id(child)]
            ax.plot([x, cx], [y, cy], "k-", lw=1, zorder=1)
            _draw(ax, child, pos)
    ax.text(x, y, label, ha="center", va="center", bbox=box, fontsize=9, zorder=2)


def write_tree_png(tree, path: str) -> None:
    pos, _ = _layout(tree)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    fig, ax = plt.subplots(figsize=(max(3, 2 * (max(xs) - min(xs) + 1)),
                                    max(2.5, 1.5 * (max(ys) - min(ys) + 1))))
    _draw(ax, tree, pos)
    ax.set_xlim(min(xs) - 0.7, max(xs) + 0.7)
    ax.set_ylim(min(ys) - 0.6, max(ys) + 0.6)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(tree, report, directory: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    csv_path = os.path.join(directory, "summary.csv")
    png_path = os.path.join(directory, "tree.png")
    write_summary_csv(report, csv_path)
    write_tree_png(tree, png_path)
    return [csv_path, png_path]
