"""Reading and writing point-set and witness files.

Point sets are stored as JSON (``PointSetFile``) or as CSV rows
``x_num,x_den,y_num,y_den,color``. Both keep coordinates exact.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from rainbow.core.errors import DegenerateInputError, PointSetFormatError
from rainbow.core.geometry import ColoredPointSet, Point, PolygonWitness
from rainbow.models.files import PointRecord, PointSetFile, format_rational, parse_rational
from rainbow.models.reports import WitnessFile, WitnessRecord

LOGGER = logging.getLogger(__name__)

CSV_HEADER = ["x_num", "x_den", "y_num", "y_den", "color"]


def detect_format(path: Path, explicit: Optional[str] = None) -> str:
    if explicit:
        return explicit
    return "csv" if Path(path).suffix.lower() == ".csv" else "json"


def to_file_model(subject: ColoredPointSet) -> PointSetFile:
    return PointSetFile(
        k=subject.k,
        m=subject.m,
        points=[
            PointRecord(x=format_rational(p.x), y=format_rational(p.y), color=c)
            for p, c in zip(subject.points, subject.colors)
        ],
    )


def from_file_model(model: PointSetFile) -> ColoredPointSet:
    points = [Point(parse_rational(r.x), parse_rational(r.y)) for r in model.points]
    colors = [r.color for r in model.points]
    try:
        return ColoredPointSet(tuple(points), tuple(colors), model.k, model.m)
    except DegenerateInputError as exc:
        raise PointSetFormatError(str(exc)) from exc


def dumps_json(subject: ColoredPointSet) -> str:
    return json.dumps(to_file_model(subject).model_dump(), indent=2) + "\n"


def loads_json(text: str) -> ColoredPointSet:
    try:
        model = PointSetFile.model_validate_json(text)
    except ValidationError as exc:
        raise PointSetFormatError(str(exc)) from exc
    return from_file_model(model)


def dumps_csv(subject: ColoredPointSet) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for point, color in zip(subject.points, subject.colors):
        writer.writerow([point.x.numerator, point.x.denominator, point.y.numerator, point.y.denominator, color])
    return buffer.getvalue()


def loads_csv(text: str) -> ColoredPointSet:
    """Parse CSV rows; ``k`` and ``m`` are inferred from the colors."""

    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if rows and rows[0] == CSV_HEADER:
        rows = rows[1:]
    points: List[Point] = []
    colors: List[int] = []
    try:
        for row in rows:
            if len(row) != 5:
                raise ValueError(f"expected 5 columns, got {len(row)}")
            x_num, x_den, y_num, y_den, color = (int(value) for value in row)
            points.append(Point(Fraction(x_num, x_den), Fraction(y_num, y_den)))
            colors.append(color)
        return ColoredPointSet.from_points(points, colors)
    except (ValueError, ZeroDivisionError) as exc:
        raise PointSetFormatError(str(exc)) from exc


def write_point_set(subject: ColoredPointSet, path: Path, file_format: Optional[str] = None) -> Path:
    path = Path(path).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    text = dumps_csv(subject) if detect_format(path, file_format) == "csv" else dumps_json(subject)
    path.write_text(text, encoding="utf-8")
    LOGGER.info("Wrote %d points (k=%d, m=%s) to '%s'", subject.n, subject.k, subject.m, path)
    return path


def read_point_set(path: Path, file_format: Optional[str] = None) -> ColoredPointSet:
    path = Path(path).expanduser()
    if not path.is_file():
        raise PointSetFormatError(f"Point set file '{path}' was not found.")
    text = path.read_text(encoding="utf-8")
    return loads_csv(text) if detect_format(path, file_format) == "csv" else loads_json(text)


def write_witnesses(witnesses: Sequence[PolygonWitness], path: Path) -> Path:
    path = Path(path).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    model = WitnessFile(witnesses=[WitnessRecord.from_witness(w) for w in witnesses])
    path.write_text(json.dumps(model.model_dump(), indent=2) + "\n", encoding="utf-8")
    return path


def read_witnesses(path: Path) -> List[PolygonWitness]:
    path = Path(path).expanduser()
    if not path.is_file():
        raise PointSetFormatError(f"Witness file '{path}' was not found.")
    try:
        model = WitnessFile.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as exc:
        raise PointSetFormatError(str(exc)) from exc
    return [record.to_witness() for record in model.witnesses]
