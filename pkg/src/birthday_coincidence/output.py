"""
CLI 출력 형식: 정렬된 표, CSV, JSON

정확한 값 (Fraction) 은 출력 직전에만 유효숫자 digits 자리 10진 문자열로 바꿉니다.
"""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO

from pydantic import BaseModel, Field

from birthday_coincidence.calc.exact_kernel import to_decimal
from birthday_coincidence.schema.prob import OutputEnvelope

FORMATS = ("table", "json", "csv")

Row = Dict[str, Any]


class Emission(BaseModel):
    """하위 명령 하나의 출력 내용"""
    command: str
    params: Dict[str, Any]
    columns: List[str]
    rows: List[Row]
    notes: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    summary: Optional[Dict[str, Any]] = None


def format_value(value: Any, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (Fraction, float)):
        return to_decimal(Fraction(value), digits)
    return str(value)


def json_value(value: Any, digits: int) -> Any:
    # 숫자는 digits 자리로 반올림한 JSON 숫자
    if isinstance(value, (Fraction, float)) and not isinstance(value, bool):
        return float(to_decimal(Fraction(value), digits))
    return value


def render_table(emission: Emission, digits: int) -> str:
    cells = [[format_value(row.get(column), digits) for column in emission.columns] for row in emission.rows]
    widths = [
        max([len(column)] + [len(line[i]) for line in cells])
        for i, column in enumerate(emission.columns)
    ]
    lines = ["  ".join(column.rjust(width) for column, width in zip(emission.columns, widths))]
    lines.append("  ".join("-" * width for width in widths))
    for line in cells:
        lines.append("  ".join(cell.rjust(width) for cell, width in zip(line, widths)))
    if emission.notes:
        lines.append("")
        lines.extend(emission.notes)
    return "\n".join(lines) + "\n"


def render_csv(emission: Emission, digits: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(emission.columns)
    for row in emission.rows:
        writer.writerow([format_value(row.get(column), digits) for column in emission.columns])
    return buffer.getvalue()


def render_json(emission: Emission, digits: int) -> str:
    envelope = OutputEnvelope(
        command=emission.command,
        params=emission.params,
        format="json",
        digits=digits,
        rows=[
            {column: json_value(row.get(column), digits) for column in emission.columns}
            for row in emission.rows
        ],
        notes=emission.notes,
        seed=emission.seed,
        summary=emission.summary,
    )
    return json.dumps(envelope.model_dump(exclude_none=True), indent=2) + "\n"


def render(emission: Emission, fmt: str, digits: int) -> str:
    if fmt == "table":
        return render_table(emission, digits)
    if fmt == "csv":
        return render_csv(emission, digits)
    if fmt == "json":
        return render_json(emission, digits)
    raise ValueError(f"unknown format: {fmt}")


def write_output(text: str, path: Optional[str], stdout: TextIO) -> None:
    """
    path 가 없으면 stdout 으로, 있으면 파일로 씁니다.

    Raises:
        OSError: 파일 쓰기 실패
    """
    if path is None:
        stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
