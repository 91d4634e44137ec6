"""Text formats: facet lists, colorings, permutations, and the run log.

Facet files look like::

    # optional comments
    name=torus7
    [[1,2,4],
     [1,2,6],
     ...]

The ``identifier=[[...]]`` form of published triangulation libraries is also
accepted, the identifier becoming the name. Whitespace is insignificant inside
the list. Colorings are ``vertex<TAB>color``
lines under a ``# k=.. s=.. name=..`` header. Permutations are written as
``T: [t0, t1, ...]`` in one-line image notation with a comment naming the domain.
"""

from __future__ import annotations

import hashlib
import os
import re
import time
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import quote, unquote

from .coloring import Coloring
from .complex import SimplicialComplex, build_complex
from .perm import Permutation


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


_NAME = re.compile(r"\s*name\s*=\s*(\S+)")
# library style: manifold_lex_d2_n7_o1_g1=[[1,2,3],...]
_INLINE_NAME = re.compile(r"\s*([^\s=\[\]]+)\s*=(?=\s*\[)")


def parse_facets(text: str) -> tuple[list[list[int]], str | None]:
    """Parse the nested-list body; returns the raw facet rows and the optional name."""
    # blank out comment lines so offsets stay valid for error positions
    lines = text.split("\n")
    body = "\n".join(" " * len(l) if l.lstrip().startswith("#") else l for l in lines)
    name = None
    pos = 0
    m = _INLINE_NAME.match(body) or _NAME.match(body)
    if m:
        name = m.group(1)
        pos = m.end()
    n = len(body)

    def skip(i):
        while i < n and body[i].isspace():
            i += 1
        return i

    def expect(i, ch):
        i = skip(i)
        if i >= n or body[i] != ch:
            found = body[i] if i < n else "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", *_position(body, i))
        return i + 1

    i = expect(pos, "[")
    rows: list[list[int]] = []
    i = skip(i)
    if i < n and body[i] == "]":
        raise ParseError("empty facet list", *_position(body, i))
    while True:
        i = expect(i, "[")
        row = []
        while True:
            i = skip(i)
            j = i
            while j < n and body[j].isdigit():
                j += 1
            if j == i:
                found = body[i] if i < n else "end of input"
                raise ParseError(f"expected a vertex label, found {found!r}", *_position(body, i))
            v = int(body[i:j])
            if v < 1:
                raise ParseError("vertex labels must be positive", *_position(body, i))
            row.append(v)
            i = skip(j)
            if i < n and body[i] == ",":
                i += 1
                continue
            i = expect(i, "]")
            break
        rows.append(row)
        i = skip(i)
        if i < n and body[i] == ",":
            i += 1
            continue
        i = expect(i, "]")
        break
    i = skip(i)
    if i < n:
        raise ParseError(f"trailing text {body[i]!r}", *_position(body, i))
    return rows, name


def split_library(text: str) -> list[str]:
    """Cut a multi-entry library file into one ``identifier=[[...]]`` chunk per entry."""
    starts = [m.start() for m in re.finditer(r"^[^\s=\[\]#][^\s=\[\]]*\s*=\s*\[", text, flags=re.M)]
    return [text[a:b].strip() for a, b in zip(starts, starts[1:] + [len(text)])]


def read_complex_text(text: str, name: str | None = None) -> SimplicialComplex:
    rows, found = parse_facets(text)
    return build_complex(rows, name=found or name)


def read_complex(path: str | Path) -> SimplicialComplex:
    p = Path(path)
    return read_complex_text(p.read_text(), name=p.stem)


def format_complex(K: SimplicialComplex, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or []]
    if K.name:
        out.append(f"name={K.name}")
    rows = ["[" + ",".join(map(str, f)) + "]" for f in sorted(K.facets)]
    out.append("[" + ",\n ".join(rows) + "]")
    return "\n".join(out) + "\n"


def write_complex(K: SimplicialComplex, path: str | Path, comments: list[str] | None = None) -> None:
    Path(path).write_text(format_complex(K, comments))


def format_coloring(c: Coloring, s: int = 2, name: str | None = None) -> str:
    lines = [f"# k={c.k} s={s} name={name or ''}"]
    lines += [f"{v}\t{c.assignment[v]}" for v in sorted(c.assignment)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    k = None
    out = {}
    for ln, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            m = re.search(r"k=(\d+)", s)
            if m:
                k = int(m.group(1))
            continue
        parts = s.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("expected 'vertex<TAB>color'", ln, 1)
        out[int(parts[0])] = int(parts[1])
    if not out:
        raise ParseError("no colored vertices", 1, 1)
    return Coloring(out, k if k is not None else max(out.values()))


def format_permutation(T: Permutation, domain: str) -> str:
    return f"# domain: {domain}\nT: [{', '.join(map(str, T.images))}]\n"


def parse_permutation(text: str) -> Permutation:
    for ln, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        m = re.fullmatch(r"T:\s*\[([\d,\s]*)\]", s)
        if not m:
            raise ParseError("expected 'T: [t0, t1, ...]'", ln, 1)
        try:
            return Permutation(int(x) for x in m.group(1).split(",") if x.strip())
        except ValueError as exc:
            raise ParseError(str(exc), ln, 1) from exc
    raise ParseError("no permutation found", 1, 1)


# Run log: one tab-separated record per search command.
RUNLOG_ENV = "CHROMSURF_RUNLOG"
RUNLOG_FIELDS = ("timestamp", "command", "input_sha256", "params", "outcome", "nodes", "wall_seconds")


@dataclass(frozen=True)
class RunRecord:
    timestamp: str
    command: str
    input_sha256: str
    params: str
    outcome: str
    nodes: int
    wall_seconds: float

    def to_line(self) -> str:
        return "\t".join([self.timestamp, quote(self.command, safe=""), self.input_sha256, self.params,
                          self.outcome, str(self.nodes), f"{self.wall_seconds:.6f}"])

    @staticmethod
    def from_line(line: str) -> "RunRecord":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != len(RUNLOG_FIELDS):
            raise ValueError(f"run log record has {len(parts)} fields, expected {len(RUNLOG_FIELDS)}")
        ts, cmd, dig, params, outcome, nodes, wall = parts
        return RunRecord(ts, unquote(cmd), dig, params, outcome, int(nodes), float(wall))


def digest(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


def runlog_path(explicit: str | None = None) -> Path:
    return Path(explicit or os.environ.get(RUNLOG_ENV) or "chromsurf_runs.log")


def append_run(record: RunRecord, path: str | Path | None = None) -> None:
    p = runlog_path(str(path) if path else None)
    with open(p, "a", encoding="utf-8") as fh:
        fh.write(record.to_line() + "\n")


def read_runs(path: str | Path) -> list[RunRecord]:
    return [RunRecord.from_line(l) for l in Path(path).read_text().splitlines() if l.strip()]


def now_stamp() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%S%z")
