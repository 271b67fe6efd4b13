import json
import os
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd
from jinja2 import Environment, FileSystemLoader

from .census import CensusRow, census_frame
from .dyck import WeightedDyckWord, render_text
from .tree import UnrootedClass
from .utils import format_rational


class OutputFormat(Enum):
    TABLE = "table"
    JSON = "json"
    TSV = "tsv"


def _json(payload) -> str:
    return json.dumps(payload, indent=2)


def _tsv(frame: pd.DataFrame) -> str:
    return frame.to_csv(sep="\t", index=False).rstrip("\n")


class ReportGenerator:
    """Render command results as plain text, TSV or JSON"""

    def __init__(self, template_dir: str = None):
        if template_dir is None:
            template_dir = os.path.join(os.path.dirname(__file__), '..', 'templates')

        self.template_dir = template_dir
        self.env = Environment(
            loader=FileSystemLoader(template_dir),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=False,
        )

    def render_values(self, kind: str, indices: Sequence[int], values: Sequence,
                      fmt: OutputFormat, index_name: str = "n") -> str:
        """One counting sequence: a_n, a b-row, or c_n values"""
        texts = [format_rational(v) for v in values]
        if fmt is OutputFormat.JSON:
            return _json({'kind': kind, index_name: list(indices), 'values': texts})
        if fmt is OutputFormat.TSV:
            return _tsv(pd.DataFrame({index_name: list(indices), kind: texts}))
        return " ".join(texts)

    def render_words(self, words: Iterable[WeightedDyckWord], fmt: OutputFormat,
                     weight: int, edges: Optional[int] = None) -> str:
        texts = [render_text(w) for w in words]
        if fmt is OutputFormat.JSON:
            return _json({'weight': weight, 'edges': edges, 'count': str(len(texts)), 'words': texts})
        if fmt is OutputFormat.TSV:
            return _tsv(pd.DataFrame({'index': range(len(texts)), 'word': texts}))
        return "\n".join(texts)

    def render_projection(self, projection: Dict, fmt: OutputFormat) -> str:
        """Output of decode"""
        if fmt is OutputFormat.JSON:
            return _json(projection)
        flat = {key: value for key, value in projection.items() if key != 'tree'}
        if flat.get('passport'):
            flat['passport'] = (
                ",".join(map(str, flat['passport']['black'])) + "/"
                + ",".join(map(str, flat['passport']['white']))
            )
        if flat.get('degrees'):
            flat['degrees'] = (
                "black " + ",".join(map(str, flat['degrees']['black']))
                + "; white " + ",".join(map(str, flat['degrees']['white']))
            )
        if flat.get('weight_distribution'):
            flat['weight_distribution'] = ",".join(map(str, flat['weight_distribution']))
        if fmt is OutputFormat.TSV:
            return "\n".join(f"{key}\t{'' if value is None else value}" for key, value in flat.items())
        width = max(len(key) for key in flat)
        return "\n".join(f"{key:<{width}}  {'-' if value is None else value}" for key, value in flat.items())

    def render_census_rows(self, rows: List[CensusRow], fmt: OutputFormat) -> str:
        frame = census_frame(rows)
        if fmt is OutputFormat.JSON:
            return _json(frame.to_dict(orient="records"))
        if fmt is OutputFormat.TSV:
            return _tsv(frame)
        return frame.to_string(index=False)

    def render_classes(self, n: int, classes: List[UnrootedClass], fmt: OutputFormat) -> str:
        """Unrooted class table for one weight"""
        frame = pd.DataFrame({
            'code': [render_text(c.canonical_code) for c in classes],
            'm': [c.edge_count for c in classes],
            'aut_order': [c.aut_order for c in classes],
            'rootings': [c.rootings for c in classes],
            'self_dual': [c.self_dual for c in classes],
        })
        if fmt is OutputFormat.JSON:
            return _json({
                'weight': n,
                'classes': len(classes),
                'rooted_total': str(sum(c.rootings for c in classes)),
                'mass': format_rational(sum((c.mass for c in classes), 0)),
                'rows': frame.to_dict(orient="records"),
            })
        if fmt is OutputFormat.TSV:
            return _tsv(frame)
        footer = (
            f"{len(classes)} classes, {sum(c.rootings for c in classes)} rootings, "
            f"sum of 1/|Aut| = {format_rational(sum((c.mass for c in classes), 0))}"
        )
        return frame.to_string(index=False) + "\n\n" + footer

    def render_verification(self, report, fmt: OutputFormat) -> str:
        payload = report.to_dict()
        if fmt is OutputFormat.JSON:
            return _json(payload)
        frame = pd.DataFrame([
            {
                'leg': leg['name'],
                'status': "PASS" if leg['passed'] else "FAIL",
                'checked_up_to': leg['checked_up_to'],
            }
            for leg in payload['legs']
        ])
        if fmt is OutputFormat.TSV:
            return _tsv(frame)
        template = self.env.get_template('verify_report.txt')
        return template.render(leg_table=frame.to_string(index=False), **payload)

    def render_oeis(self, comparison, fmt: OutputFormat) -> str:
        payload = comparison.to_dict()
        if fmt is OutputFormat.JSON:
            return _json(payload)
        if fmt is OutputFormat.TSV:
            return _tsv(pd.DataFrame([{
                'source': payload['source'],
                'checked_up_to': payload['checked_up_to'],
                'status': payload['status'],
            }]))
        template = self.env.get_template('oeis_report.txt')
        return template.render(**payload)


__all__ = ["OutputFormat", "ReportGenerator"]
