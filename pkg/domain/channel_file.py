"""
Channel and game files
Canonical JSON text: sorted keys, one Choi row per line, entries as
[re, im] pairs written with the shortest round-trip float repr
"""

import json
from typing import Any, Dict, List

import numpy as np

from .channel import Channel
from .constants import CHANNEL_FORMAT_VERSION
from .errors import FileFormatError
from .games import Game
from .system_types import GlobalType


def _row(row: np.ndarray) -> str:
    return json.dumps([[float(z.real), float(z.imag)] for z in row])


def _matrix_block(m: np.ndarray, indent: str) -> List[str]:
    """Lines of a {"dim", "entries"} block, one matrix row per line"""
    rows = [f"{indent}    {_row(r)}" for r in m]
    return [
        "{",
        f'{indent}  "dim": {m.shape[0]},',
        f'{indent}  "entries": [',
        ",\n".join(rows),
        f"{indent}  ]",
        f"{indent}}}",
    ]


def dumps_channel(ch: Channel) -> str:
    block = _matrix_block(ch.choi, "  ")
    lines = ['{', '  "choi": ' + block[0]] + block[1:-1] + [block[-1] + ","]
    lines += [
        f'  "format_version": {json.dumps(CHANNEL_FORMAT_VERSION)},',
        f'  "gtype": {json.dumps(ch.gtype.to_dict(), sort_keys=True)},',
        '  "kind": "channel",',
        f'  "metadata": {json.dumps(ch.metadata, sort_keys=True)}',
        "}",
    ]
    return "\n".join(lines) + "\n"


def _read_matrix(block: Dict[str, Any], expected_dim: int, label: str) -> np.ndarray:
    try:
        dim = int(block["dim"])
        entries = np.asarray(block["entries"], dtype=float)
    except (KeyError, TypeError, ValueError) as e:
        raise FileFormatError(f"Malformed {label} block: {e}")
    if dim != expected_dim:
        raise FileFormatError(f"{label} dim {dim} does not match the declared type (expected {expected_dim})")
    if entries.shape != (dim, dim, 2):
        raise FileFormatError(f"{label} needs {dim}x{dim} [re, im] entries, got shape {entries.shape}")
    return entries[..., 0] + 1j * entries[..., 1]


def _parse(text: str, kind: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"Not valid JSON: {e}")
    if not isinstance(data, dict) or data.get("kind") != kind:
        raise FileFormatError(f"Expected a {kind} file")
    if data.get("format_version") != CHANNEL_FORMAT_VERSION:
        raise FileFormatError(f"Unsupported format version {data.get('format_version')!r}")
    return data


def loads_channel(text: str, validate: bool = True) -> Channel:
    """
    Parse a channel file

    Raises:
        FileFormatError: If the text is not a well-formed channel file
        ChannelValidationError: If validate and the Choi matrix is invalid
    """
    data = _parse(text, "channel")
    gtype = GlobalType.from_dict(data.get("gtype", {}))
    choi = _read_matrix(data.get("choi", {}), gtype.choi_dim, "choi")
    return Channel(gtype, choi, data.get("metadata", {}), validate=validate)


def dumps_game(g: Game) -> str:
    data: Dict[str, Any] = {
        "format_version": CHANNEL_FORMAT_VERSION,
        "kind": "game",
        "name": g.name,
        "gtype": g.gtype.to_dict(),
        "form": g.form,
    }
    if g.witness is not None:
        data["witness"] = {
            "dim": g.witness.shape[0],
            "entries": [[[float(z.real), float(z.imag)] for z in row] for row in g.witness],
        }
    else:
        data["input_dist"] = g.input_dist.tolist()
        data["payoff"] = g.payoff.tolist()
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def loads_game(text: str) -> Game:
    data = _parse(text, "game")
    gtype = GlobalType.from_dict(data.get("gtype", {}))
    name = data.get("name", "game")
    form = data.get("form")
    if form == "witness":
        return Game(gtype, witness=_read_matrix(data.get("witness", {}), gtype.choi_dim, "witness"), name=name)
    if form == "payoff":
        if "payoff" not in data:
            raise FileFormatError("Payoff game without a payoff table")
        return Game(gtype, input_dist=data.get("input_dist"), payoff=data["payoff"], name=name)
    raise FileFormatError(f"Unknown game form {form!r}. Valid forms: payoff, witness")


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()
