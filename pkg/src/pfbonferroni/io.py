"""Problem files and report rendering.

Problem files are UTF-8 JSON::

    {
      "alternatives": ["A1", "A2"],
      "criteria": [{"name": "G1", "type": "benefit"}, {"name": "G2", "type": "cost"}],
      "weights": [0.4, 0.6],
      "matrix": [[[0.5, 0.2, 0.1], [0.3, 0.3, 0.3]],
                 [[0.6, 0.1, 0.2], [0.2, 0.5, 0.1]]],
      "sweep": {"p": "1:10:1", "q": [1, 2], "gamma": {"start": 0.5, "stop": 5, "step": 0.5}}
    }

``type`` defaults to ``benefit`` and ``sweep`` is optional.  Spreadsheet
exports can be read as CSV instead: a header row ``alternative,G1,G2,...``,
a ``#types`` row, a ``#weights`` row, then one row per alternative whose
cells are ``mu;eta;nu``.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from .bonferroni import WeightVector
from .exceptions import InvalidPFN, InvalidWeights, LengthMismatch, ParseError, PictureFuzzyError
from .mcdm import Criterion, DecisionProblem, RankingResult, SweepResult, inclusive_grid
from .pfn import PFN

PathLike = Union[str, Path]


def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise ParseError(f"missing key {key!r}", location=where)
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"{key!r} must be a {kind.__name__}, got {type(value).__name__}", location=where)
    return value


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected a number, got {value!r}", location=where)
    return float(value)


def problem_from_dict(doc: Any) -> DecisionProblem:
    """Validate a decoded JSON document and build the problem it describes."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", location="$")
    alternatives = _require(doc, "alternatives", list, "$")
    criteria_doc = _require(doc, "criteria", list, "$")
    weights_doc = _require(doc, "weights", list, "$")
    matrix_doc = _require(doc, "matrix", list, "$")

    for i, name in enumerate(alternatives):
        if not isinstance(name, str):
            raise ParseError(f"alternative name must be a string, got {name!r}", location=f"alternatives[{i}]")
    criteria = []
    for j, c in enumerate(criteria_doc):
        where = f"criteria[{j}]"
        if isinstance(c, str):
            c = {"name": c}
        if not isinstance(c, dict):
            raise ParseError("criterion must be an object or a name", location=where)
        name = _require(c, "name", str, where)
        kind = c.get("type", "benefit")
        if kind not in ("benefit", "cost"):
            raise ParseError(f"type must be 'benefit' or 'cost', got {kind!r}", location=where)
        criteria.append(Criterion(name, kind))
    weights = [_number(w, f"weights[{k}]") for k, w in enumerate(weights_doc)]

    if len(matrix_doc) != len(alternatives):
        raise ParseError(f"matrix has {len(matrix_doc)} rows for {len(alternatives)} alternatives", location="matrix")
    rows = []
    for i, row in enumerate(matrix_doc):
        if not isinstance(row, list) or len(row) != len(criteria):
            raise ParseError(f"row must be a list of {len(criteria)} cells", location=f"matrix[{i}]")
        cells = []
        for j, cell in enumerate(row):
            where = f"matrix[{i}][{j}]"
            if not isinstance(cell, list) or len(cell) != 3:
                raise ParseError(f"cell must be [mu, eta, nu], got {cell!r}", location=where)
            cells.append(tuple(_number(v, where) for v in cell))
        rows.append(cells)

    try:
        weights = WeightVector(tuple(weights))
    except InvalidWeights as exc:
        raise InvalidWeights(f"weights: {exc}") from None
    try:
        return DecisionProblem(tuple(alternatives), tuple(criteria), rows, weights)
    except (InvalidPFN, InvalidWeights):
        raise
    except LengthMismatch as exc:
        raise ParseError(str(exc), location="weights") from None
    except PictureFuzzyError as exc:
        raise ParseError(str(exc), location="$") from None


def problem_to_dict(problem: DecisionProblem) -> dict:
    return {
        "alternatives": list(problem.alternatives),
        "criteria": [{"name": c.name, "type": c.orientation.value} for c in problem.criteria],
        "weights": list(problem.weights),
        "matrix": [[cell.as_list() for cell in row] for row in problem.matrix],
    }


def _decode(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, location=f"line {exc.lineno} column {exc.colno}") from None


def loads_problem(text: str) -> DecisionProblem:
    return problem_from_dict(_decode(text))


def dumps_problem(problem: DecisionProblem) -> str:
    return json.dumps(problem_to_dict(problem), indent=2) + "\n"


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), location=str(path)) from None
    except UnicodeDecodeError:
        raise ParseError("file is not valid UTF-8", location=str(path)) from None


def loads_problem_csv(text: str) -> DecisionProblem:
    rows = [r for r in csv.reader(_stdio.StringIO(text)) if any(cell.strip() for cell in r)]
    if not rows:
        raise ParseError("empty CSV", location="line 1")
    header = [c.strip() for c in rows[0]]
    names = header[1:]
    types = ["benefit"] * len(names)
    weights = None
    alternatives, matrix = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        row = [c.strip() for c in row]
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", location=f"row {lineno}")
        tag = row[0].lower()
        if tag == "#types":
            types = row[1:]
        elif tag == "#weights":
            weights = [_csv_number(v, f"row {lineno}, column {k + 2}") for k, v in enumerate(row[1:])]
        else:
            i = len(alternatives)
            alternatives.append(row[0])
            cells = []
            for j, cell in enumerate(row[1:]):
                parts = cell.split(";")
                where = f"matrix[{i}][{j}] (row {lineno}, column {j + 2})"
                if len(parts) != 3:
                    raise ParseError(f"cell must be 'mu;eta;nu', got {cell!r}", location=where)
                cells.append([_csv_number(v, where) for v in parts])
            matrix.append(cells)
    if weights is None:
        raise ParseError("missing '#weights' row", location="CSV")
    doc = {
        "alternatives": alternatives,
        "criteria": [{"name": n, "type": t.lower()} for n, t in zip(names, types)],
        "weights": weights,
        "matrix": matrix,
    }
    return problem_from_dict(doc)


def _csv_number(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"expected a number, got {text!r}", location=where) from None


def parse_problem(path: PathLike) -> DecisionProblem:
    """Read a ``.json`` or ``.csv`` problem file."""
    text = _read_text(path)
    if str(path).lower().endswith(".csv"):
        return loads_problem_csv(text)
    return loads_problem(text)


def parse_grid(spec: Any, what: str = "grid") -> List[float]:
    """Turn ``"a:b:step"``, ``"1,2,3"``, a list or a start/stop/step object into points."""
    if isinstance(spec, dict):
        try:
            bounds = [_number(spec[key], f"{what}.{key}") for key in ("start", "stop", "step")]
        except KeyError as exc:
            raise ParseError(f"missing {exc.args[0]!r}", location=what) from None
        return inclusive_grid(*bounds)
    if isinstance(spec, (list, tuple)):
        return [_number(v, f"{what}[{k}]") for k, v in enumerate(spec)]
    text = str(spec).strip()
    if not text:
        raise ParseError("grid is empty", location=what)
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise ParseError(f"expected start:stop:step, got {text!r}", location=what)
        return inclusive_grid(*(_csv_number(v, what) for v in pieces))
    return [_csv_number(v, what) for v in text.split(",") if v.strip()]


def sweep_grids(path: PathLike) -> Dict[str, List[float]]:
    """Grids from the optional ``sweep`` section of a JSON problem file."""
    if str(path).lower().endswith(".csv"):
        return {}
    doc = _decode(_read_text(path))
    section = doc.get("sweep") if isinstance(doc, dict) else None
    if section is None:
        return {}
    if not isinstance(section, dict):
        raise ParseError("'sweep' must be an object", location="sweep")
    return {key: parse_grid(section[key], f"sweep.{key}") for key in ("p", "q", "gamma") if key in section}


@dataclass
class ReportTable:
    """Labeled rows rendered as aligned text or as CSV.

    Text output shows floats to 4 decimals; CSV output uses ``repr`` so every
    float round-trips exactly and identical inputs give identical bytes.
    """

    columns: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    title: Optional[str] = None

    @staticmethod
    def _text(v) -> str:
        if v is None:
            return ""
        if isinstance(v, float):
            return "inf" if math.isinf(v) else f"{v:.4f}"
        return str(v)

    @staticmethod
    def _csv(v) -> str:
        if v is None:
            return ""
        if isinstance(v, float):
            return repr(v)
        return str(v)

    def to_text(self) -> str:
        cells = [list(self.columns)] + [[self._text(v) for v in row] for row in self.rows]
        widths = [max(len(r[k]) for r in cells) for k in range(len(self.columns))]
        lines = [self.title] if self.title else []
        for n, r in enumerate(cells):
            lines.append("  ".join(c.ljust(w) if k == 0 else c.rjust(w) for k, (c, w) in enumerate(zip(r, widths))).rstrip())
            if n == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = _stdio.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([self._csv(v) for v in row])
        return buf.getvalue()

    def render(self, fmt: str = "text") -> str:
        return self.to_csv() if fmt == "csv" else self.to_text()


def ranking_table(result: RankingResult, title: Optional[str] = None) -> ReportTable:
    table = ReportTable(["alternative", "mu", "eta", "nu", "score", "rank"], title=title)
    for i, name in enumerate(result.alternatives):
        r = result.aggregated[i]
        table.rows.append([name, r.mu, r.eta, r.nu, result.scores[i], result.ranks[i]])
    return table


SWEEP_COLUMNS = ("family", "gamma", "p", "q", "alternative", "score", "rank", "note")


def sweep_table(result: SweepResult) -> ReportTable:
    table = ReportTable(list(SWEEP_COLUMNS))
    for r in result.rows:
        table.rows.append([r.family, r.gamma, r.p, r.q, r.alternative, r.score, r.rank, r.note])
    return table
