"""Plain-text code files.

Layout::

    # optional comment lines anywhere
    q n w count
    s s s ... s      (count lines, n symbols each)

``w`` is ``-`` when the words do not share a weight.  The file must end with
a newline.  Manifests are ``key=value`` lines written next to artifacts.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .errors import InvariantViolation, ParseError
from .space import Code, WordSet


def format_code(c: WordSet, comments: list[str] | None = None) -> str:
    lines = [f"# {line}" for line in comments or []]
    w = "-" if c.weight is None else str(c.weight)
    lines.append(f"{c.q} {c.n} {w} {len(c)}")
    lines.extend(" ".join(map(str, x)) for x in c.words)
    return "\n".join(lines) + "\n"


def parse_code_text(text: str, cls=Code) -> WordSet:
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline")
    header = None
    words = []
    for lineno, raw in enumerate(text.split("\n")[:-1], start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            raise ParseError("blank line", lineno)
        fields = line.split()
        if header is None:
            if len(fields) != 4:
                raise ParseError("header must be 'q n w count'", lineno)
            try:
                q, n = int(fields[0]), int(fields[1])
                w = None if fields[2] == "-" else int(fields[2])
                count = int(fields[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if q < 2 or n < 1 or count < 0:
                raise ParseError(f"header values out of range: {line!r}", lineno)
            header = (q, n, w, count)
            continue
        try:
            word = tuple(int(s) for s in fields)
        except ValueError:
            raise ParseError(f"non-integer symbol in {line!r}", lineno) from None
        if len(word) != header[1]:
            raise ParseError(f"expected {header[1]} symbols, got {len(word)}", lineno)
        if any(s < 0 or s >= header[0] for s in word):
            raise InvariantViolation(f"word {word} (line {lineno}) has a symbol outside 0..{header[0] - 1}")
        words.append(word)
    if header is None:
        raise ParseError("no header line")
    q, n, w, count = header
    if len(words) != count:
        raise ParseError(f"header announces {count} words, body has {len(words)}")
    return cls(words, q=q, n=n, weight=w)


def parse_code_file(path, cls=Code) -> WordSet:
    return parse_code_text(Path(path).read_text(), cls=cls)


def atomic_write(path, text: str) -> None:
    """Write through a temp file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_code_file(path, c: WordSet, comments: list[str] | None = None) -> None:
    atomic_write(path, format_code(c, comments))


def format_manifest(entries: dict) -> str:
    return "".join(f"{k}={v}\n" for k, v in entries.items())


def parse_manifest(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        if line and not line.startswith("#"):
            key, _, value = line.partition("=")
            out[key] = value
    return out
