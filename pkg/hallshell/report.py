"""
CLI report envelope with canonical JSON and flat CSV serialization.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

from .errors import InvalidInputError


def _canonical(value: Any) -> str:
    return json.dumps(value, sort_keys=True, ensure_ascii=False, separators=(',', ': '), indent=2)


@dataclass
class Report:
    """command / inputs / result / version; equal reports serialize to equal bytes."""
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    result: Any = None
    version: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'result': self.result,
            'version': self.version,
        }

    def to_json(self) -> str:
        return _canonical(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Report':
        if not isinstance(data, dict) or 'command' not in data:
            raise InvalidInputError("report JSON needs a 'command'")
        return cls(
            command=data['command'],
            inputs=data.get('inputs') or {},
            result=data.get('result'),
            version=data.get('version', ''),
        )

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"malformed report JSON: {e}") from e
        return cls.from_dict(data)

    def rows(self) -> List[Dict[str, str]]:
        """One row per result entry; nested values are written as JSON."""
        result = self.result
        if isinstance(result, list) and result and all(isinstance(r, dict) for r in result):
            records = result
        elif isinstance(result, dict):
            records = [{'key': k, 'value': v} for k, v in sorted(result.items())]
        elif isinstance(result, list):
            records = [{'index': i, 'value': v} for i, v in enumerate(result, 1)]
        else:
            records = [{'value': result}]
        return [
            {k: v if isinstance(v, str) else json.dumps(v, sort_keys=True) for k, v in record.items()}
            for record in records
        ]

    def to_csv(self) -> str:
        rows = self.rows()
        columns: List[str] = []
        for row in rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    def render(self, output_format: str = 'json') -> str:
        if output_format == 'csv':
            return self.to_csv()
        if output_format == 'json':
            return self.to_json()
        raise InvalidInputError(f"unknown output format {output_format!r}")


def error_report(command: str, error: Exception, inputs: Dict[str, Any], version: str) -> Report:
    """Structured report for a failed run."""
    result: Dict[str, Any] = {'error': type(error).__name__, 'message': str(error)}
    for attr in ('hypothesis', 'limit', 'actual', 'what', 'index'):
        if hasattr(error, attr):
            result[attr] = getattr(error, attr)
    return Report(command, inputs, result, version)
