"""Text and structured renderings of analysis reports and verifications."""
from typing import List

import pandas as pd

from erschema.audit import const
from erschema.audit.analysis import (PreservationReport, PreservationSummary,
                                     explain, lost_constraints)
from erschema.audit.model import ErModel
from erschema.audit.oracle import Instance, OracleVerdict, Witness
from erschema.audit.text import dumps, render_relationship
from erschema.audit.tools import validate_field_options


def verdict_frame(report: PreservationReport) -> pd.DataFrame:
    """One row per relationship and slot, in slot order."""
    rows = [{
        'relationship': entry.relationship_name,
        'slot': verdict.slot.value,
        'value': str(verdict.source_value),
        'verdict': str(verdict.verdict),
        'justification': verdict.justification.value,
    } for entry in report.relationships for verdict in entry.verdicts]
    return pd.DataFrame(rows, columns=const.VERDICT_COLUMNS)


def _summary_records(summary: PreservationSummary) -> List[dict]:
    # numpy scalars are not JSON serializable
    return [{
        'relationship': str(row['relationship']),
        'classification': str(row['classification']),
        'exact': int(row['exact']),
        'lower_bound': int(row['lower_bound']),
        'lost': int(row['lost']),
        'loss_ratio': float(row['loss_ratio']),
    } for row in summary.per_relationship.to_dict('records')]


def _analysis_text(report: PreservationReport, summary: PreservationSummary) -> str:
    if not report.relationships:
        return 'No relationship types.\n'
    lines = [verdict_frame(report).to_string(index=False), '']
    justifications = dict.fromkeys(v.justification for entry in report.relationships for v in entry.verdicts)
    lines.extend(f'{j.value}: {explain(j)}' for j in sorted(justifications, key=lambda j: j.value))
    lost = lost_constraints(report)
    if lost:
        lines.append('')
        lines.append('Lost values: ' + ', '.join(f'{name}.{slot.value}={value}' for name, slot, value in lost))
    lines.append('')
    lines.append(summary.per_relationship.to_string(index=False, float_format=lambda v: f'{v:.2f}'))
    totals = summary.totals
    lines.append('')
    lines.append(f'Total: {totals["relationships"]} relationship(s), {totals["exact"]} Exact, '
                 f'{totals["lower_bound"]} LowerBoundOnly, {totals["lost"]} NotRepresented')
    return '\n'.join(lines) + '\n'


def _analysis_dict(report: PreservationReport, summary: PreservationSummary) -> dict:
    return {
        'relationships': [
            {
                'relationship': entry.relationship_name,
                'classification': str(entry.classification),
                'encoding': str(entry.encoding),
                'verdicts': [
                    dict({'slot': v.slot.value, 'source_value': str(v.source_value)},
                         **v.verdict.to_dict(),
                         justification=v.justification.value,
                         rationale=explain(v.justification))
                    for v in entry.verdicts
                ],
            }
            for entry in report.relationships
        ],
        'lost_values': [{'relationship': name, 'slot': slot.value, 'source_value': value}
                        for name, slot, value in lost_constraints(report)],
        'summary': {
            'per_relationship': _summary_records(summary),
            'totals': summary.totals,
        },
    }


def render_analysis(report: PreservationReport, summary: PreservationSummary,
                    output_format: str = const.PAPER_FORMAT) -> str:
    """Render an analysis as tables (``paper``) or JSON (``structured``)."""
    validate_field_options(output_format, const.OUTPUT_FORMATS)
    if output_format == const.STRUCTURED_FORMAT:
        return dumps(_analysis_dict(report, summary))
    return _analysis_text(report, summary)


def _evidence_lines(item) -> List[str]:
    if isinstance(item, Instance):
        return [str(table) for table in item.tables]
    if isinstance(item, ErModel):
        return [render_relationship(rel) for rel in item.relationships]
    return [str(item)]


def _evidence_data(item):
    if isinstance(item, Instance):
        return {table.relation: [list(row) for row in table.rows] for table in item.tables}
    if isinstance(item, ErModel):
        return [render_relationship(rel) for rel in item.relationships]
    return str(item)


def _witness_dict(witness: Witness) -> dict:
    return {'description': witness.description,
            'evidence': [_evidence_data(item) for item in witness.evidence]}


def _witness_block(relationship_name: str, oracle: str, verdict: OracleVerdict) -> List[str]:
    witness = verdict.witness
    lines = [f'witness {relationship_name} {oracle} {verdict.slot.value}: {witness.description}']
    for index, item in enumerate(witness.evidence, start=1):
        lines.append(f'  evidence {index}:')
        lines.extend(f'    {line}' for line in _evidence_lines(item))
    return lines


def render_verification(verification, output_format: str = const.PAPER_FORMAT) -> str:
    """Render oracle comparisons, their witnesses and the final outcome.

    Text lines read ``<relationship> <oracle> <slot> <oracle verdict>
    <analyzer verdict> AGREE|DISAGREE``; witness blocks follow, and the last
    line is the overall ``AGREE`` or ``DISAGREE``.
    """
    validate_field_options(output_format, const.OUTPUT_FORMATS)
    comparisons = verification.comparisons
    if output_format == const.STRUCTURED_FORMAT:
        return dumps({
            'comparisons': [
                {
                    'relationship': c.relationship_name,
                    'oracle': c.oracle,
                    'slot': c.slot.value,
                    'oracle_verdict': c.oracle_verdict.verdict.to_dict(),
                    'analyzer_verdict': c.analyzer_verdict.to_dict(),
                    'outcome': c.outcome,
                    'witness': _witness_dict(c.oracle_verdict.witness) if c.oracle_verdict.witness else None,
                }
                for c in comparisons
            ],
            'outcome': verification.outcome,
        })

    lines = [f'{c.relationship_name} {c.oracle} {c.slot.value} {c.oracle_verdict.verdict} '
             f'{c.analyzer_verdict} {c.outcome}' for c in comparisons]
    for c in comparisons:
        if c.oracle_verdict.witness is not None:
            lines.extend(_witness_block(c.relationship_name, c.oracle, c.oracle_verdict))
    lines.append(verification.outcome)
    return '\n'.join(lines) + '\n'
