"""
Partition-Type Encoding Table
Static 9x9 table answering "does partition type t1 encode partition type t2"

Rows are the encoding type t1, columns the encoded type t2, both in the
order of PARTITION_ORDER. Symbols:
    Y  t1 is above t2
    ?  open; linked cells must share one answer
    N  t1 has a trivial side and t2 does not, so t1 cannot be above t2
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .system_types import PartitionType, WireKind


class EncodingVerdict(Enum):
    YES = "yes"
    UNKNOWN = "unknown"
    NO = "no"


@dataclass(frozen=True)
class EncodingCell:
    verdict: EncodingVerdict
    provenance: str
    link: Optional[str] = None


PARTITION_ORDER: Tuple[str, ...] = ("II", "IC", "IQ", "CI", "CC", "CQ", "QI", "QC", "QQ")

#            II IC IQ CI CC CQ QI QC QQ
_TABLE_ROWS: Dict[str, str] = {
    "II": "Y  Y  Y  Y  N  N  Y  N  N",  # bottom class
    "IC": "Y  Y  Y  Y  N  N  Y  N  N",  # bottom class
    "IQ": "Y  Y  Y  Y  N  N  Y  N  N",  # bottom class
    "CI": "Y  Y  Y  Y  N  N  Y  N  N",  # bottom class
    "CC": "Y  Y  Y  Y  Y  ?  Y  ?  ?",  # open above itself
    "CQ": "Y  Y  Y  Y  Y  Y  Y  ?  ?",  # embeds C->C
    "QI": "Y  Y  Y  Y  N  N  Y  N  N",  # bottom class
    "QC": "Y  Y  Y  Y  Y  Y  Y  Y  Y",  # top class
    "QQ": "Y  Y  Y  Y  Y  Y  Y  Y  Y",  # top class
}

# cells whose answers are tied together
_LINKS: Dict[Tuple[str, str], str] = {
    ("CC", "QC"): "cc-above-top",
    ("CC", "QQ"): "cc-above-top",
    ("CQ", "QC"): "cq-above-top",
    ("CQ", "QQ"): "cq-above-top",
}

_SYMBOLS = {"Y": EncodingVerdict.YES, "?": EncodingVerdict.UNKNOWN, "N": EncodingVerdict.NO}

BOTTOM_CLASS = frozenset({"II", "IC", "IQ", "CI", "QI"})
TOP_CLASS = frozenset({"QC", "QQ"})


def _key(t: PartitionType) -> str:
    return t.input.value + t.output.value


def _provenance(row: str, col: str, verdict: EncodingVerdict) -> str:
    if row == col:
        return "reflexive"
    if verdict is EncodingVerdict.UNKNOWN:
        return "open question"
    if verdict is EncodingVerdict.NO:
        return "a type with a trivial side only holds free resources"
    if col in BOTTOM_CLASS:
        return "every type encodes the bottom class"
    if row in TOP_CLASS:
        return "Q->C and Q->Q form the top class"
    return "embedding: classical wires are special quantum wires"


def _build_table() -> Dict[Tuple[str, str], EncodingCell]:
    table = {}
    for row in PARTITION_ORDER:
        symbols = _TABLE_ROWS[row].split()
        for col, symbol in zip(PARTITION_ORDER, symbols):
            verdict = _SYMBOLS[symbol]
            table[(row, col)] = EncodingCell(
                verdict=verdict,
                provenance=_provenance(row, col, verdict),
                link=_LINKS.get((row, col)),
            )
    return table


_TABLE = _build_table()


def all_partition_types() -> List[PartitionType]:
    """The nine partition types in table order"""
    return [PartitionType(WireKind(k[0]), WireKind(k[1])) for k in PARTITION_ORDER]


def encoding_cell(t1: PartitionType, t2: PartitionType) -> EncodingCell:
    return _TABLE[(_key(t1), _key(t2))]


def partition_encodes(t1: PartitionType, t2: PartitionType) -> EncodingVerdict:
    """
    Stored answer to "t1 encodes t2"

    Args:
        t1: Encoding partition type
        t2: Encoded partition type

    Returns:
        EncodingVerdict.YES, UNKNOWN, or NO
    """
    return encoding_cell(t1, t2).verdict


def encoding_table() -> Dict[Tuple[str, str], EncodingCell]:
    """All 81 cells keyed by (t1, t2) two-letter codes"""
    return dict(_TABLE)
