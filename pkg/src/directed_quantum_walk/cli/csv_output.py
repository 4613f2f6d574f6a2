"""CSV writers for position distributions, sweep records and distribution grids.

Files use LF line endings and print floats as the shortest decimal that reads back to the same 64-bit value.
"""
import csv
from pathlib import Path
from typing import Sequence

from directed_quantum_walk.walk_analysis.Sweep_Record import Sweep_Record
from directed_quantum_walk.walk_engine.Position_Distribution import Position_Distribution

DISTRIBUTION_HEADER = ["position", "probability"]
SWEEP_HEADER = ["n", "t", "mode", "pairing", "seed", "mean", "variance", "interval_lo", "interval_hi", "tail_mass"]


def format_float(value: float | None) -> str:
    """
    :param value: A float or None.
    :return: Shortest round-trip decimal without a trailing ".0", or an empty field for None.
    """
    if value is None:
        return ""
    text = repr(float(value))
    if text.endswith(".0"):
        text = text[:-2]
    return text


def _optional(value) -> str:
    if value is None:
        return ""
    return str(value)


def distribution_rows(distribution: Position_Distribution) -> list[list[str]]:
    """
    :param distribution: A position distribution.
    :return: Rows of position and probability in ascending position order.
    """
    return [[str(position), format_float(probability)] for position, probability in enumerate(distribution)]


def sweep_row(record: Sweep_Record) -> list[str]:
    """
    :param record: A sweep record.
    :return: The record's fields in sweep header order. Fields that do not apply are empty.
    """
    return [str(record.n), str(record.t), str(record.mode), _optional(record.pairing), _optional(record.seed),
            format_float(record.mean), format_float(record.variance),
            format_float(record.interval_lo), format_float(record.interval_hi), format_float(record.tail_mass)]


def _write_rows(path: Path, header: list[str], rows: list[list[str]]):
    with open(path, "w", encoding="ascii", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_distribution_csv(path: str | Path, distribution: Position_Distribution):
    """
    :param path: File to write.
    :param distribution: Distribution to write with header position,probability.
    """
    _write_rows(Path(path), DISTRIBUTION_HEADER, distribution_rows(distribution))


def write_sweep_csv(path: str | Path, records: Sequence[Sweep_Record]):
    """
    :param path: File to write.
    :param records: Records to write in the given order.
    """
    _write_rows(Path(path), SWEEP_HEADER, [sweep_row(record) for record in records])


def write_distribution_grid_csv(path: str | Path, records: Sequence[Sweep_Record]):
    """
    Writes one column of probabilities per record, the data behind a position by coin dimension heat map.
    :param path: File to write.
    :param records: Records carrying distributions of the same length.
    """
    distributions = [record.distribution for record in records]
    assert all(d is not None for d in distributions), "Grid records must carry their distributions"
    length = max((len(d) for d in distributions), default=0)
    header = ["position"] + [str(record.n) for record in records]
    rows = [[str(position)] + [format_float(d[position]) if position < len(d) else "" for d in distributions]
            for position in range(length)]
    _write_rows(Path(path), header, rows)
