"""Text formats: ``.code``, ``.sts``, permutation lists and Mollard descriptors."""

from __future__ import annotations

import json
import os
from collections.abc import Iterable
from pathlib import Path

from .bitcode import BinaryCode, ExplicitCode, MAX_EXPLICIT, from_str, to_str
from .design import TripleSystem
from .errors import CorruptDesign, InvalidInput
from .mollard import MollardCode
from .perm import Permutation

LAYOUT = "r*(m+1)+s"


def _content_lines(text: str) -> tuple[int, list[str]]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise InvalidInput("missing 'n=<int>' header")
    try:
        n = int(lines[0].replace(" ", "")[2:])
    except ValueError as exc:
        raise InvalidInput(f"bad header {lines[0]!r}") from exc
    if n < 1:
        raise InvalidInput("length must be positive")
    return n, lines[1:]


def parse_code(text: str) -> ExplicitCode:
    n, lines = _content_lines(text)
    words = []
    for line in lines:
        if len(line) != n or set(line) - {"0", "1"}:
            raise InvalidInput(f"bad codeword line {line!r} for n={n}")
        words.append(from_str(line))
    if not words:
        raise InvalidInput("code file has no words")
    return ExplicitCode(n, words)


def format_code(code: BinaryCode) -> str:
    if code.size > MAX_EXPLICIT:
        raise InvalidInput(f"{code.size} words is too many for a .code file")
    return f"n={code.n}\n" + "".join(to_str(w, code.n) + "\n" for w in sorted(code.words()))


def parse_sts(text: str) -> TripleSystem:
    n, lines = _content_lines(text)
    triples = []
    for line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise InvalidInput(f"bad triple line {line!r}")
        try:
            triples.append(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise InvalidInput(f"bad triple line {line!r}") from exc
    try:
        return TripleSystem(n, triples)
    except CorruptDesign as exc:
        raise InvalidInput(str(exc)) from exc


def format_sts(ts: TripleSystem) -> str:
    return f"n={ts.n}\n" + "".join(f"{a} {b} {c}\n" for a, b, c in sorted(ts.triples))


def parse_perms(text: str) -> list[Permutation]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            try:
                out.append(Permutation([int(x) for x in line.split()]))
            except ValueError as exc:
                raise InvalidInput(f"bad permutation line {line!r}") from exc
    return out


def format_perms(perms: Iterable[Permutation]) -> str:
    return "".join(" ".join(map(str, p.images)) + "\n" for p in perms)


def mollard_descriptor(M: MollardCode, c_file: str, d_file: str) -> dict:
    return {"t": M.t, "m": M.m, "C-file": c_file, "D-file": d_file, "layout": LAYOUT}


def load_descriptor(data: dict, base: str | os.PathLike = ".") -> MollardCode:
    if data.get("layout") != LAYOUT:
        raise InvalidInput(f"unsupported layout {data.get('layout')!r}")
    root = Path(base)
    try:
        C = read_code(root / data["C-file"])
        D = read_code(root / data["D-file"])
        lengths = (data["t"], data["m"])
    except KeyError as exc:
        raise InvalidInput(f"descriptor is missing {exc}") from exc
    if (C.n, D.n) != lengths:
        raise InvalidInput("descriptor lengths do not match the component files")
    return MollardCode(C, D)


def read_code(path: str | os.PathLike) -> BinaryCode:
    """A ``.code`` file, or a JSON Mollard descriptor (paths relative to it)."""
    p = Path(path)
    text = p.read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"bad JSON in {p}: {exc}") from exc
        return load_descriptor(data, p.parent)
    return parse_code(text)


def read_sts(path: str | os.PathLike) -> TripleSystem:
    return parse_sts(Path(path).read_text())


def sniff(path: str | os.PathLike) -> str:
    """'sts' when the first data line holds three integers, else 'code'."""
    p = Path(path)
    if p.suffix == ".sts":
        return "sts"
    if p.suffix in (".code", ".json"):
        return "code"
    text = p.read_text()
    if text.lstrip().startswith("{"):
        return "code"
    _, lines = _content_lines(text)
    return "sts" if lines and len(lines[0].split()) == 3 else "code"
