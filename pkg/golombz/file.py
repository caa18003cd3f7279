'''
Reading and writing results: JSON records for rulers, codes, certificates and
spectra, the CSV layout of the table harness, and an append-only result cache.
'''

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime

import csv as csv_module
import hashlib
import io
import json
import logging
import os
import threading

from .core import Ruler

log = logging.getLogger(__name__)

CSV_COLUMNS = ("v", "k", "status", "residues", "length")


class InputFormatError(ValueError):
    '''Malformed input file; carries the position of the first problem.'''

    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = path or "<input>"
        if line is not None:
            where = f"{where}:{line}:{column}"
        super().__init__(f"{where}: {message}")


def emit_json(obj) -> str:
    '''Serialize a result object (anything with to_dict) or plain data.'''
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, indent=2)


def parse_json(text: str, path: str | None = None):
    '''
    Parse a JSON document.

    Raises:
        InputFormatError: with line and column of the syntax error.
    '''
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(e.msg, path, e.lineno, e.colno) from e


def load_json(path: str):
    with open(path, "r") as f:
        return parse_json(f.read(), path)


def ruler_to_json(r: Ruler) -> str:
    '''The fixed-order record {"v", "k", "residues"}.'''
    return json.dumps(r.to_dict())


def ruler_from_json(text: str, path: str | None = None) -> Ruler:
    data = parse_json(text, path)
    try:
        return Ruler.from_dict(data)
    except ValueError as e:
        raise InputFormatError(str(e), path) from e


def load_record(path: str, cls):
    '''Load a file and build cls.from_dict from it, reporting the file on failure.'''
    data = load_json(path)
    try:
        return cls.from_dict(data)
    except ValueError as e:
        raise InputFormatError(str(e), path) from e


def table_csv(rows) -> str:
    '''
    Render table rows as CSV.

    Args:
        rows (iterable): dicts with the keys of CSV_COLUMNS; residues is a
            sequence or None.

    Returns:
        str: header plus one line per row, residues space-separated.
    '''
    buf = io.StringIO()
    writer = csv_module.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        residues = row.get("residues")
        writer.writerow([
            row["v"], row["k"], row["status"],
            " ".join(map(str, residues)) if residues else "",
            "" if row.get("length") is None else row["length"],
        ])
    return buf.getvalue()


def export_into_file(obj, path=None, csv=False):
    '''
    Write a result to a JSON file, or table rows to a CSV file.

    Without a path the file is named "golombz_export_{date}_{time}.json" (or .csv)
    in the current directory.

    Returns:
        str: the path written.
    '''
    if not path:
        stamp = datetime.now().strftime("%H-%M-%S")
        path = f"golombz_export_{date.today()}_{stamp}.{'csv' if csv else 'json'}"
    text = table_csv(obj) if csv else emit_json(obj) + "\n"
    with open(path, "w", newline="") as f:
        f.write(text)
    log.info("exported %s", path)
    return path


@dataclass(frozen=True)
class CacheRecord:
    '''
    One cached result.

    Attributes:
        key (str): instance key such as "search:21:5:first".
        digest (str): sha256 of the canonical payload JSON.
        payload (dict): the outcome document (witness or proof summary).
        version (str): tool version that produced it.
    '''
    key: str
    digest: str
    payload: dict
    version: str

    @classmethod
    def make(cls, key, payload, version):
        return cls(key, payload_digest(payload), payload, version)

    def to_dict(self):
        return {"key": self.key, "digest": self.digest, "payload": self.payload, "version": self.version}


def payload_digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def cache_key(kind, *params) -> str:
    return ":".join([kind, *map(str, params)])


_write_lock = threading.Lock()


def cache_put(path: str, record: CacheRecord) -> CacheRecord:
    '''Append a record to the line-delimited cache file.'''
    line = json.dumps(record.to_dict(), sort_keys=True)
    with _write_lock:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "a") as f:
            f.write(line + "\n")
    return record


def cache_get(path: str, key: str, version: str) -> CacheRecord | None:
    '''
    Latest record for key written by the given version, or None.

    Lines that do not parse, lack a field or fail their digest are skipped
    with a warning.
    '''
    if not path or not os.path.exists(path):
        return None
    hit = None
    with open(path, "r") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                rec = CacheRecord(data["key"], data["digest"], data["payload"], data["version"])
            except (json.JSONDecodeError, KeyError, TypeError):
                log.warning("%s:%d: skipping corrupt cache line", path, lineno)
                continue
            if rec.digest != payload_digest(rec.payload):
                log.warning("%s:%d: skipping cache line with a bad digest", path, lineno)
                continue
            if rec.key == key and rec.version == version:
                hit = rec
    if hit is not None:
        log.info("cache hit for %s", key)
    return hit
