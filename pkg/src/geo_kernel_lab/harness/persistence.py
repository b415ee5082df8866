"""
Persistence Module

Result files of experiments:
1. Plot data: comma-separated eigenvalue table, one row per eigenvalue
   of every analyzed Gram matrix
2. Result document: sorted-key JSON mirroring ExperimentResult
3. Distance-matrix input: whitespace-separated square matrix

Both output formats are UTF-8 with line-feed line endings, and writes
to one path are serialized.

Dependencies:
    - numpy: text matrix parsing
"""

import csv
import json
import os
import threading
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Tuple

import numpy as np

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.config.logging_config import LoggingConfig

logger = LoggingConfig.get_logger(__name__)

CSV_HEADER = ("space", "variant", "q", "lambda", "eig_index", "eigenvalue")

PlotRow = Tuple[str, str, float, float, int, float]

# absolute path -> (lock, number of writers holding or waiting on it)
_path_locks: Dict[str, Tuple[threading.Lock, int]] = {}
_registry_lock = threading.Lock()


@contextmanager
def _lock_for(path: str) -> Iterator[None]:
    """Serialize writes to one path; the entry is dropped with its last writer."""
    key = os.path.abspath(path)
    with _registry_lock:
        lock, users = _path_locks.get(key, (threading.Lock(), 0))
        _path_locks[key] = (lock, users + 1)
    try:
        with lock:
            yield
    finally:
        with _registry_lock:
            lock, users = _path_locks[key]
            if users == 1:
                del _path_locks[key]
            else:
                _path_locks[key] = (lock, users - 1)


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def write_plot_data(rows: List[PlotRow], path: str) -> str:
    """Write eigenvalue rows under the fixed header and return the path."""
    _ensure_parent(path)
    with _lock_for(path):
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for space, variant, q, lam, index, value in rows:
                writer.writerow([space, variant, repr(float(q)), repr(float(lam)),
                                 int(index), repr(float(value))])
    logger.debug("Wrote %d plot rows to %s", len(rows), path)
    return path


def read_plot_data(path: str) -> List[PlotRow]:
    """
    Parse a plot-data file.

    Raises:
        ValidationError: wrong header or malformed row
    """
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if tuple(header or ()) != CSV_HEADER:
            raise ValidationError(f"{path}: unexpected plot-data header {header}")
        rows: List[PlotRow] = []
        for line_number, record in enumerate(reader, start=2):
            try:
                space, variant, q, lam, index, value = record
                rows.append((space, variant, float(q), float(lam), int(index), float(value)))
            except ValueError:
                raise ValidationError(f"{path}:{line_number}: malformed row {record}") from None
    return rows


def write_result_document(document: Dict[str, Any], path: str) -> str:
    """Write a JSON document with sorted keys and a trailing newline."""
    _ensure_parent(path)
    text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    with _lock_for(path):
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    logger.debug("Wrote result document %s", path)
    return path


def read_result_document(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise ValidationError(f"{path}: not a result document ({e})") from None


def load_distance_matrix(path: str) -> DistanceMatrix:
    """
    Read a whitespace-separated square matrix and validate it.

    Raises:
        OSError: the file cannot be read
        ValidationError: undecodable, ragged, non-numeric or invalid
            distance matrix
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            lines = [line.split() for line in handle if line.strip()]
        except UnicodeDecodeError as e:
            raise ValidationError(f"{path}: not a UTF-8 text matrix ({e.reason})") from None
    if not lines:
        raise ValidationError(f"{path}: empty distance-matrix file")
    if any(len(line) != len(lines) for line in lines):
        raise ValidationError(
            f"{path}: expected a square matrix of {len(lines)} columns per row")
    try:
        entries = np.array([[float(v) for v in line] for line in lines])
    except ValueError:
        raise ValidationError(f"{path}: non-numeric entry in distance matrix") from None
    return DistanceMatrix(entries)


def save_distance_matrix(distances: DistanceMatrix, path: str) -> str:
    _ensure_parent(path)
    with _lock_for(path):
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            for row in distances.entries:
                handle.write(" ".join(repr(float(v)) for v in row) + "\n")
    return path
