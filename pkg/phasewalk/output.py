"""
Tables produced by the commands and their CSV / JSON serialization.

CSV layout::

    # phasewalk 0.1.0
    # command=simulate
    # tau1=1/2
    ...
    # summary total_probability=1.0
    n,re_left,im_left,re_right,im_right,prob
    -100,0.0,...

Floats are written with repr(), the shortest string that reads back to the
same double, so a re-read table reproduces sums to the last bit.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO, Union

from .version import __version__

log = logging.getLogger(__name__)

AMPLITUDE_COLUMNS = ["n", "re_left", "im_left", "re_right", "im_right", "prob"]


@dataclass
class Table:
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)

    def add(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"row has {len(values)} values, table has {len(self.columns)} columns")
        self.rows.append(list(values))

    def column(self, name: str) -> List[Any]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def _format(value: Any) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def _open(target: Union[str, Path, TextIO, None]):
    if target is None or hasattr(target, "write"):
        return None
    return open(target, "w", encoding="utf-8", newline="")


def write_csv(table: Table, target: Union[str, Path, TextIO]) -> None:
    handle = _open(target)
    stream = handle or target
    try:
        stream.write(f"# phasewalk {__version__}\n")
        for key, value in table.config.items():
            stream.write(f"# {key}={_format(value)}\n")
        for key, value in table.summary.items():
            stream.write(f"# summary {key}={_format(value)}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_format(value) for value in row])
    finally:
        if handle is not None:
            handle.close()
    log.debug("wrote %d csv rows", len(table.rows))


def _jsonable(value: Any) -> Any:
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    # numpy scalars
    if hasattr(value, "item"):
        return _jsonable(value.item())
    return str(value)


def write_json(table: Table, target: Union[str, Path, TextIO]) -> None:
    document = {
        "phasewalk": __version__,
        "config": _jsonable(table.config),
        "columns": list(table.columns),
        "rows": _jsonable(table.rows),
        "summary": _jsonable(table.summary),
    }
    handle = _open(target)
    stream = handle or target
    try:
        json.dump(document, stream, indent=1, allow_nan=False)
        stream.write("\n")
    finally:
        if handle is not None:
            handle.close()


def write_table(table: Table, target: Union[str, Path, TextIO], fmt: str = "csv") -> None:
    if fmt == "json":
        write_json(table, target)
    else:
        write_csv(table, target)


def _number(text: str) -> Union[int, float, str]:
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    return text


def read_csv(source: Union[str, Path, TextIO]) -> Table:
    """Read a table written by :func:`write_csv`; numeric cells come back as int or float."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    config: Dict[str, Any] = {}
    summary: Dict[str, Any] = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            entry = line[1:].strip()
            if entry.startswith("summary "):
                key, _, value = entry[len("summary "):].partition("=")
                summary[key] = _number(value)
            elif "=" in entry:
                key, _, value = entry.partition("=")
                config[key] = value
        elif line.strip():
            body.append(line)
    reader = csv.reader(io.StringIO("\n".join(body)))
    columns = next(reader)
    rows = [[_number(cell) for cell in row] for row in reader]
    return Table(columns=columns, rows=rows, summary=summary, config=config)


def amplitude_row(n: int, left: complex, right: complex, extra: Optional[Sequence[Any]] = None) -> List[Any]:
    row = [
        int(n),
        float(left.real),
        float(left.imag),
        float(right.real),
        float(right.imag),
        float(abs(left) ** 2 + abs(right) ** 2),
    ]
    if extra:
        row.extend(extra)
    return row
