"""Drawing Brauerian graphs: Graphviz DOT text and matplotlib figures.

Sources sit on the top row and targets on the bottom row.  Transversals run
between the rows; cups hang below the source row and caps rise above the
target row.
"""
from __future__ import annotations

from typing import Sequence

from .brauer import SplitEquivalence
from .formula import Formula, occurrences


def occurrence_labels(a: Formula) -> list[str]:
    return [("¬" if negated else "") + atom.name for atom, negated in occurrences(a)]


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def to_dot(graph: SplitEquivalence, source_labels: Sequence[str] | None = None,
           target_labels: Sequence[str] | None = None, title: str | None = None) -> str:
    src = list(source_labels or (str(k) for k in range(graph.src)))
    tgt = list(target_labels or (str(k) for k in range(graph.tgt)))
    lines = ["graph G {", "  rankdir=TB;", "  node [shape=plaintext];"]
    if title:
        lines.append(f"  label={_quote(title)}; labelloc=t;")
    for tag, labels in (("s", src), ("t", tgt)):
        names = " ".join(f"{tag}{k}" for k in range(len(labels)))
        lines.append(f"  {{ rank=same; {names} }}")
        for k, label in enumerate(labels):
            lines.append(f"  {tag}{k} [label={_quote(label)}];")
        # invisible chain keeps the left-to-right order of occurrences
        for k in range(len(labels) - 1):
            lines.append(f"  {tag}{k} -- {tag}{k + 1} [style=invis];")
    if graph.src and graph.tgt:
        lines.append("  s0 -- t0 [style=invis];")
    for block in graph.blocks:
        a, b = block[0], block[1]
        attrs = "" if a.tag != b.tag else " [constraint=false]"
        lines.append(f"  {a.tag}{a.pos} -- {b.tag}{b.pos}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def draw(graph: SplitEquivalence, ax, source_labels: Sequence[str] | None = None,
         target_labels: Sequence[str] | None = None, title: str | None = None):
    """Draw ``graph`` onto a matplotlib axes."""
    from matplotlib.patches import Arc

    src = list(source_labels or (str(k) for k in range(graph.src)))
    tgt = list(target_labels or (str(k) for k in range(graph.tgt)))
    top, bottom = 1.0, 0.0
    for k, label in enumerate(src):
        ax.text(k, top + 0.08, label, ha="center", va="bottom", fontsize=11)
    for k, label in enumerate(tgt):
        ax.text(k, bottom - 0.08, label, ha="center", va="top", fontsize=11)
    for block in graph.blocks:
        a, b = block[0], block[1]
        if a.tag == "s" and b.tag == "t":
            ax.plot([a.pos, b.pos], [top, bottom], color="black", lw=1.2)
            continue
        row = top if a.tag == "s" else bottom
        width = b.pos - a.pos
        # cups open downwards from the source row, caps upwards from the target row
        theta = (180, 360) if a.tag == "s" else (0, 180)
        ax.add_patch(Arc(((a.pos + b.pos) / 2, row), width, min(0.35 * width, 0.8),
                         theta1=theta[0], theta2=theta[1], color="black", lw=1.2))
    width = max(graph.src, graph.tgt, 1)
    ax.set_xlim(-0.6, width - 0.4)
    ax.set_ylim(-0.5, 1.5)
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=10)
    return ax


def save_figure(graph: SplitEquivalence, path, source_labels=None, target_labels=None,
                title: str | None = None) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    width = max(graph.src, graph.tgt, 1)
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * width, 2.4))
    try:
        draw(graph, ax, source_labels, target_labels, title)
        fig.tight_layout()
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
