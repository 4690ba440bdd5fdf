"""
Summaries of result CSVs and the Karloff instance table.

A variant "wins" an (instance, depth) pair when its best AR is at least
``tie_margin`` above every other variant; pairs where two or more variants
lie within the margin of the best are counted as ties and credited to no
single variant. After a clear win the remaining variants are ranked the same
way for second place, so the ``gw`` baseline row can be placed against the
QAOA variants.
"""

import logging
import math
from collections import defaultdict
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import numpy as np
import yaml

from ..graphs.generators import johnson_eigenvalue, karloff_gw_ratio
from .formatter import ResultRow

logger = logging.getLogger(__name__)

TIE_MARGIN = 0.01


def variant_label(row: ResultRow) -> str:
    """Variant name qualified by warm-start rank and rotation when present."""
    if row.rank is None:
        return row.variant
    return f"{row.variant}-r{row.rank}-{row.rotation}"


def _within_margin(ranked: List[Tuple[str, float]], margin: float) -> List[str]:
    """Labels within ``margin`` of the first entry of a descending ranking."""
    top = ranked[0][1]
    return [label for label, ar in ranked if ar >= top - margin]


def summarize(
    rows: Sequence[ResultRow], tie_margin: float = TIE_MARGIN
) -> Dict[str, Any]:
    """
    Aggregate result rows into per-depth means and best/second-best counts.

    Returns:
        Dict[str, Any]: Plain data ready for YAML output.
    """
    completed = [row for row in rows if row.ar is not None and not row.error]
    ar_by_label: Dict[str, Dict[int, List[float]]] = defaultdict(
        lambda: defaultdict(list)
    )
    best: Dict[Tuple[str, int], Dict[str, float]] = defaultdict(dict)
    for row in completed:
        assert row.ar is not None
        label = variant_label(row)
        ar_by_label[label][row.depth].append(row.ar)
        cell = best[(row.instance, row.depth)]
        cell[label] = max(cell.get(label, -math.inf), row.ar)

    mean_ar = {
        label: {
            depth: float(np.mean(values)) for depth, values in sorted(depths.items())
        }
        for label, depths in sorted(ar_by_label.items())
    }

    counts: Dict[int, Dict[str, Any]] = {}
    for (_, depth), by_label in sorted(best.items()):
        entry = counts.setdefault(
            depth,
            {
                "wins": defaultdict(int),
                "ties": 0,
                "second": defaultdict(int),
                "second_ties": 0,
            },
        )
        ranked = sorted(by_label.items(), key=lambda item: -item[1])
        leaders = _within_margin(ranked, tie_margin)
        if len(leaders) > 1:
            entry["ties"] += 1
            continue
        entry["wins"][leaders[0]] += 1
        if len(ranked) > 1:
            seconds = _within_margin(ranked[1:], tie_margin)
            if len(seconds) == 1:
                entry["second"][seconds[0]] += 1
            else:
                entry["second_ties"] += 1

    return {
        "rows": len(rows),
        "failed_rows": len(rows) - len(completed),
        "instances": len({row.instance for row in completed}),
        "tie_margin": tie_margin,
        "mean_ar": mean_ar,
        "best_counts": {
            depth: {
                "wins": dict(sorted(entry["wins"].items())),
                "ties": entry["ties"],
                "second": dict(sorted(entry["second"].items())),
                "second_ties": entry["second_ties"],
            }
            for depth, entry in counts.items()
        },
    }


def summary_to_yaml(summary: Dict[str, Any]) -> str:
    return yaml.safe_dump(summary, sort_keys=True, default_flow_style=False)


def karloff_table(pairs: Iterable[Tuple[int, int]]) -> List[Dict[str, Any]]:
    """
    Closed-form properties of J(m, m/2, b) for each (m, b).

    Each entry holds the vertex and edge counts, the degree, the
    Goemans–Williamson ratio and the smallest adjacency eigenvalue.
    """
    table = []
    for m, b in pairs:
        t = m // 2
        nodes = math.comb(m, t)
        degree = johnson_eigenvalue(m, t, b, 0)
        table.append(
            {
                "m": m,
                "b": b,
                "nodes": nodes,
                "edges": int(round(nodes * degree / 2)),
                "degree": int(round(degree)),
                "gw_ratio": karloff_gw_ratio(m, b),
                "beta_1": johnson_eigenvalue(m, t, b, 1),
            }
        )
        logger.debug("J(%d,%d,%d): %d nodes", m, t, b, nodes)
    return table
