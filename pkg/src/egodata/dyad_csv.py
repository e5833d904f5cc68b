"""
Dyad CSV reader and writer

Header: ego_id,ego_outdegree,alter_id,contact_volume,alter_outdegree[,rank]
One row per ego-alter dyad. An empty alter_outdegree marks an unavailable alter.
"""

import io
import logging
import re
from typing import BinaryIO, Dict, List, Optional, TextIO, Tuple, Union

import pandas as pd

from src.config import DYAD_COLUMNS, RANK_COLUMN
from src.egodata.records import (
    AlterRecord,
    EgoDataset,
    EgoRecord,
    rank_alters,
    with_report,
)
from src.exceptions import ParseError, ValidationError

logger = logging.getLogger(__name__)

# One spare column so that rows with an extra field parse and can be reported
_MAX_FIELDS = len(DYAD_COLUMNS) + 2
_PANDAS_LINE = re.compile(r"line (\d+)")


def _read_text(stream: Union[BinaryIO, TextIO]) -> str:
    data = stream.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}") from e
    return data


def _parse_count(value: str, column: str, line: int) -> int:
    try:
        return int(value.strip())
    except ValueError:
        raise ParseError(f"{column} is not an integer: {value!r}", line) from None


def parse_dyad_csv(stream: Union[BinaryIO, TextIO]) -> EgoDataset:
    """
    Parse a dyad CSV stream into an EgoDataset

    Rows of one ego need not be contiguous. Ranks are taken verbatim when the
    rank column is present, otherwise assigned by rank_alters.

    Args:
        stream: Binary (UTF-8) or text stream

    Returns:
        EgoDataset with a ValidationReport attached

    Raises:
        ParseError: malformed row, with its line number
        ValidationError: duplicate (ego_id, rank)
    """
    text = _read_text(stream)
    if not text.strip():
        raise ParseError("empty input, expected a header", 1)

    try:
        raw = pd.read_csv(
            io.StringIO(text),
            header=None,
            names=list(range(_MAX_FIELDS)),
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            engine="python",
        )
    except pd.errors.ParserError as e:
        match = _PANDAS_LINE.search(str(e))
        raise ParseError("too many fields", int(match.group(1)) if match else None) from e

    header = [str(v).strip() for v in raw.iloc[0].dropna()]
    if header == DYAD_COLUMNS:
        has_rank = False
    elif header == DYAD_COLUMNS + [RANK_COLUMN]:
        has_rank = True
    else:
        raise ParseError(f"unexpected header {','.join(header)!r}", 1)
    n_fields = len(header)

    # ego_id -> (outdegree, rows); dicts keep first-appearance order
    egos: Dict[str, Tuple[int, List[Tuple[str, int, Optional[int], Optional[int], int]]]] = {}
    extra_violations: List[Tuple[str, str]] = []

    for offset, row in enumerate(raw.iloc[1:].itertuples(index=False), start=2):
        # the python engine pads short rows with None; empty strings are real fields
        fields = [v for v in row if pd.notna(v)]
        if not any(str(v).strip() for v in fields):
            continue
        if len(fields) != n_fields:
            raise ParseError(f"expected {n_fields} fields, found {len(fields)}", offset)

        ego_id = fields[0].strip()
        alter_id = fields[2].strip()
        if not ego_id or not alter_id:
            raise ParseError("empty ego_id or alter_id", offset)
        ego_k = _parse_count(fields[1], "ego_outdegree", offset)
        volume = _parse_count(fields[3], "contact_volume", offset)
        alter_k = None if not fields[4].strip() else _parse_count(fields[4], "alter_outdegree", offset)
        rank = _parse_count(fields[5], "rank", offset) if has_rank else None

        if ego_id not in egos:
            egos[ego_id] = (ego_k, [])
        elif egos[ego_id][0] != ego_k:
            extra_violations.append(
                (ego_id, f"line {offset}: ego_outdegree {ego_k} differs from {egos[ego_id][0]}")
            )
        egos[ego_id][1].append((alter_id, volume, alter_k, rank, offset))

    records = []
    for ego_id, (ego_k, rows) in egos.items():
        if has_rank:
            seen: Dict[int, int] = {}
            alters = []
            for alter_id, volume, alter_k, rank, line in rows:
                if rank in seen:
                    raise ValidationError(
                        f"line {line}: duplicate rank {rank} for ego {ego_id} "
                        f"(first at line {seen[rank]})"
                    )
                seen[rank] = line
                alters.append(AlterRecord(alter_id, rank, volume, alter_k))
            alters.sort(key=lambda a: a.rank)
        else:
            alters = rank_alters([(alter_id, volume, alter_k) for alter_id, volume, alter_k, _, _ in rows])
        records.append(EgoRecord(ego_id=ego_id, outdegree=ego_k, alters=tuple(alters)))

    dataset = with_report(EgoDataset(egos=tuple(records)), extra_violations)
    logger.info("Parsed %d egos, %d dyads", dataset.report.n_egos, dataset.report.n_dyads)
    return dataset


def dyad_frame(dataset: EgoDataset) -> pd.DataFrame:
    """Dataset as the on-disk dyad table (rank column always present)"""
    dyads = [(ego, alter) for ego in dataset.egos for alter in ego.alters]
    return pd.DataFrame({
        "ego_id": pd.Series([ego.ego_id for ego, _ in dyads], dtype=object),
        "ego_outdegree": pd.array([ego.outdegree for ego, _ in dyads], dtype="Int64"),
        "alter_id": pd.Series([alter.alter_id for _, alter in dyads], dtype=object),
        "contact_volume": pd.array([alter.contact_volume for _, alter in dyads], dtype="Int64"),
        "alter_outdegree": pd.array([alter.outdegree for _, alter in dyads], dtype="Int64"),
        RANK_COLUMN: pd.array([alter.rank for _, alter in dyads], dtype="Int64"),
    })


def write_dyad_csv(dataset: EgoDataset, path_or_buf) -> None:
    """
    Write a dataset as dyad CSV, rows in ego order then rank

    Egos without alters have no dyads and are not written.
    """
    dyad_frame(dataset).to_csv(path_or_buf, index=False, lineterminator="\n")
