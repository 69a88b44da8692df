"""End-to-end analysis of one catalog graph: parameters, flags, bounds."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .bounds import BoundsReport, compute_bounds
from .codes import (
    EnumerationLimitExceeded,
    LinearCode,
    build_code,
    is_even_code,
    is_lcd,
    is_self_orthogonal,
    minimum_distance,
)
from .graphs import Graph, girth, load_edge_list, parse_lcf

__all__ = ["AnalysisReport", "analyze_graph", "load_graph_file"]


@dataclass
class AnalysisReport:
    """Everything the CLI reports about one code."""

    graph_id: str
    n: int
    k: int
    d: int | None
    girth: int
    even: bool
    self_orthogonal: bool
    lcd: bool
    bounds: BoundsReport | None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "girth": self.girth,
            "even": self.even,
            "self_orthogonal": self.self_orthogonal,
            "lcd": self.lcd,
            "bounds": self.bounds.to_dict() if self.bounds is not None else None,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        d_text = str(self.d) if self.d is not None else "not computed"
        lines = [
            f"graph:            {self.graph_id}",
            f"parameters:       [{self.n}, {self.k}, {d_text}]",
            f"girth:            {self.girth}",
            f"even code:        {_yn(self.even)}",
            f"self-orthogonal:  {_yn(self.self_orthogonal)}",
            f"lcd:              {_yn(self.lcd)}",
        ]
        if self.bounds is not None:
            b = self.bounds
            lines += [
                f"lambda2:          {b.lambda2:.6f}",
                f"distance bounds:  d1={b.d1:.4f} d2={b.d2:.4f} piecewise={b.piecewise_bound:.4f}",
                f"dimension bound:  {b.dim_bound:.4f}",
                f"clique number:    {b.clique_number}",
                f"independent set:  {b.independent_set_size}",
                f"predicted [n,0,n]: {_yn(b.predicted_trivial)}",
            ]
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def analyze_graph(g: Graph, graph_id: str, k_ceiling: int = 28) -> AnalysisReport:
    """Validate the graph, build its code, and gather parameters and bounds.

    Raises the graph validation errors unchanged; a dimension above the
    enumeration ceiling leaves ``d`` as None with a warning instead.
    """
    code = build_code(g)
    g_girth = girth(g)
    assert g_girth is not None
    warnings: list[str] = []
    if g_girth < 6:
        warnings.append(
            f"girth {g_girth} < 6: bit pairs may share several checks, "
            "structural bound arguments do not apply"
        )
    try:
        d = minimum_distance(code, ceiling=k_ceiling)
    except EnumerationLimitExceeded:
        d = None
        warnings.append(
            f"minimum distance not computed: k={code.k} exceeds ceiling {k_ceiling}"
        )
    report = AnalysisReport(
        graph_id=graph_id,
        n=code.n,
        k=code.k,
        d=d,
        girth=g_girth,
        even=is_even_code(code),
        self_orthogonal=is_self_orthogonal(code),
        lcd=is_lcd(code),
        bounds=compute_bounds(g, code),
        warnings=warnings,
    )
    return report


def load_graph_file(path: str | Path) -> Graph:
    """Load ``.edges`` or ``.lcf`` catalog files by extension.

    Comment lines starting with ``#`` are allowed in both formats; an
    ``.lcf`` file must contain exactly one notation line.
    """
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".edges":
        return load_edge_list(text)
    if path.suffix == ".lcf":
        content = [
            ln.strip() for ln in text.splitlines()
            if ln.split("#", 1)[0].strip()
        ]
        if len(content) != 1:
            raise ValueError(f"{path}: expected exactly one LCF line")
        return parse_lcf(content[0].split("#", 1)[0].strip())
    raise ValueError(f"{path}: unknown extension, expected .edges or .lcf")
