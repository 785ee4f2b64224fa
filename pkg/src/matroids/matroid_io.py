"""
Matroid Text Format

Line-oriented UTF-8 files; '#' starts a comment and blank lines are ignored.

    matroid <name>
    elements <n>
    type bases|linear|graphic|uniform
    ...type-specific body...

Bodies:
- bases:   `rank <r>`, then one basis per line as `0,1,3` (`-` for the empty basis)
- linear:  `field <p>`, `rows <r>`, then r lines of n space-separated residues
- graphic: `vertices <v>`, then one `edge <u> <v>` line per element in index order
- uniform: `rank <r>`

format_matroid() writes exactly this layout, so parse/format round-trips.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from matroids.element_set import iter_bits, mask_of
from matroids.errors import MatroidInputError
from matroids.matroid import Matroid
from matroids.representations import BasesRep, GraphicRep, LinearRep, UniformRep

logger = logging.getLogger(__name__)

EMPTY_BASIS = "-"
COMMENT = "#"


class _Lines:
    """Cursor over the meaningful lines of a file, keeping line numbers for errors."""

    def __init__(self, text: str):
        self._items: List[Tuple[int, str]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split(COMMENT, 1)[0].strip()
            if line:
                self._items.append((number, line))
        self._pos = 0

    def next(self, what: str) -> Tuple[int, str]:
        if self._pos >= len(self._items):
            raise MatroidInputError(f"unexpected end of file, expected {what}")
        item = self._items[self._pos]
        self._pos += 1
        return item

    def keyword(self, key: str) -> str:
        """Value of a `key value` line."""
        number, line = self.next(f"'{key}'")
        head, _, value = line.partition(" ")
        if head != key:
            raise MatroidInputError(f"line {number}: expected '{key}', got '{head}'")
        return value.strip()

    def keyword_int(self, key: str) -> int:
        value = self.keyword(key)
        try:
            return int(value)
        except ValueError:
            raise MatroidInputError(f"'{key}' needs an integer, got '{value}'") from None

    def remaining(self) -> Iterator[Tuple[int, str]]:
        while self._pos < len(self._items):
            yield self.next("more lines")


def _parse_int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatroidInputError(f"line {number}: '{token}' is not an integer") from None


def parse_matroid(text: str) -> Matroid:
    """
    Parse the text format.

    Raises:
        MatroidInputError: On any malformed line or invalid matroid data
    """
    lines = _Lines(text)
    name = lines.keyword("matroid")
    n = lines.keyword_int("elements")
    if n < 0:
        raise MatroidInputError(f"negative element count {n}")
    kind = lines.keyword("type")

    if kind == "uniform":
        rep = UniformRep(lines.keyword_int("rank"), n)

    elif kind == "bases":
        r = lines.keyword_int("rank")
        masks = []
        for number, line in lines.remaining():
            if line == EMPTY_BASIS:
                masks.append(0)
                continue
            indices = [_parse_int(tok.strip(), number) for tok in line.split(",")]
            if any(not 0 <= i < n for i in indices):
                raise MatroidInputError(f"line {number}: element outside 0..{n - 1}")
            if len(indices) != r:
                raise MatroidInputError(f"line {number}: basis has {len(indices)} elements, rank is {r}")
            masks.append(mask_of(indices))
        return Matroid.from_bases(n, masks, name=name)

    elif kind == "linear":
        p = lines.keyword_int("field")
        r = lines.keyword_int("rows")
        rows = []
        for _ in range(r):
            number, line = lines.next("matrix row")
            row = tuple(_parse_int(tok, number) for tok in line.split())
            if len(row) != n:
                raise MatroidInputError(f"line {number}: row has {len(row)} entries, expected {n}")
            rows.append(row)
        rep = LinearRep(p, tuple(rows))

    elif kind == "graphic":
        v = lines.keyword_int("vertices")
        edges = []
        for _ in range(n):
            number, line = lines.next("edge")
            parts = line.split()
            if len(parts) != 3 or parts[0] != "edge":
                raise MatroidInputError(f"line {number}: expected 'edge <u> <v>'")
            edges.append((_parse_int(parts[1], number), _parse_int(parts[2], number)))
        rep = GraphicRep(v, tuple(edges))

    else:
        raise MatroidInputError(f"unknown matroid type '{kind}'")

    extra = list(lines.remaining())
    if extra:
        raise MatroidInputError(f"line {extra[0][0]}: unexpected trailing content")
    return Matroid(n, rep, name)


def format_matroid(M: Matroid) -> str:
    """
    Serialize M in the text format (newline-terminated).

    Raises:
        MatroidInputError: If the name cannot be written on one line unchanged
    """
    if COMMENT in M.name or M.name != " ".join(M.name.split()):
        raise MatroidInputError(f"matroid name '{M.name}' must be one line without '{COMMENT}' or extra spaces")
    out = [f"matroid {M.name}".rstrip(), f"elements {M.n}", f"type {M.rep.kind}"]
    rep = M.rep
    if isinstance(rep, UniformRep):
        out.append(f"rank {rep.rank}")
    elif isinstance(rep, BasesRep):
        out.append(f"rank {rep.rank}")
        for b in rep.bases:
            out.append(",".join(str(i) for i in iter_bits(b)) if b else EMPTY_BASIS)
    elif isinstance(rep, LinearRep):
        out.append(f"field {rep.p}")
        out.append(f"rows {len(rep.rows)}")
        out.extend(" ".join(str(x) for x in row) for row in rep.rows)
    elif isinstance(rep, GraphicRep):
        out.append(f"vertices {rep.vertices}")
        out.extend(f"edge {u} {v}" for u, v in rep.edges)
    return "\n".join(out) + "\n"


def read_matroid(path: Union[str, Path]) -> Matroid:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read matroid file {path}: {e}")
        raise MatroidInputError(f"cannot read {path}: {e}") from e
    return parse_matroid(text)


def write_matroid(M: Matroid, path: Union[str, Path]) -> None:
    Path(path).write_text(format_matroid(M), encoding="utf-8")
    logger.info(f"Wrote {M.rep.kind} matroid with {M.n} elements to {path}")
