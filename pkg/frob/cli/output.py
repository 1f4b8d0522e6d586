"""
Output records for the command line: plain text, JSON and CSV renderings of
one invocation's payload.
"""
import csv
import io
import json
from dataclasses import dataclass
from typing import Any

from marshmallow import Schema, fields, post_load

from frob.errors import InvalidInputError

FORMATS = ('text', 'json', 'csv')


@dataclass
class OutputRecord:
    query: dict
    result: Any
    backend: str
    elapsed_ms: float = 0.0

    @property
    def command(self) -> str:
        return self.query["command"]


class OutputRecordSchema(Schema):
    query = fields.Dict(required=True)
    result = fields.Raw(required=True, allow_none=True)
    backend = fields.String(required=True)
    elapsed_ms = fields.Float(required=True)

    @post_load
    def make_record(self, data, **kwargs):
        return OutputRecord(**data)


def to_json(record: OutputRecord) -> str:
    return json.dumps(OutputRecordSchema().dump(record), ensure_ascii=False)


def from_json(text: str) -> OutputRecord:
    return OutputRecordSchema().load(json.loads(text))


def _vector(values) -> str:
    return '(' + ','.join(str(v) for v in values) + ')'


def text_lines(record: OutputRecord) -> list[str]:
    """One line per value or row."""
    result = record.result
    if record.command in ('gk', 'count'):
        return [str(result)]
    if record.command == 'list':
        return [str(n) for n in result]
    if record.command == 'reps':
        return [_vector(v) for v in result]
    if record.command == 'table':
        return [f"{n},{c}" for n, c in result]
    if record.command == 'verify':
        return [f"{name}: {r['passed']} passed, {r['failed']} failed" for name, r in result.items()]
    raise InvalidInputError(f"no text rendering for command {record.command!r}")


def csv_text(record: OutputRecord) -> str:
    if record.command != 'table':
        raise InvalidInputError("csv output is only available for the table command")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['n', 'count'])
    writer.writerows(record.result)
    return buffer.getvalue()


def render(record: OutputRecord, fmt: str) -> str:
    """Complete stdout text for one record, LF-terminated."""
    if fmt == 'json':
        return to_json(record) + '\n'
    if fmt == 'csv':
        return csv_text(record)
    if fmt == 'text':
        return ''.join(f"{line}\n" for line in text_lines(record))
    raise InvalidInputError(f"unknown output format {fmt!r}")
