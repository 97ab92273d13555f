"""Plain-text matrix files.

Format: a header line ``rows cols`` followed by ``rows`` lines of ``cols``
whitespace-separated integers.  Generators are the columns; with
``transpose=True`` each text row is read as one generator.  ``#`` starts a
comment.
"""

import json
from typing import Iterable, TextIO

from .errors import MatrixParseError
from .matrix import IntMatrix, Matrix


def _tokens(text: str) -> Iterable[str]:
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        yield from line.split()


def parse_matrix(text: str, transpose: bool = False) -> IntMatrix:
    toks = list(_tokens(text))
    if len(toks) < 2:
        raise MatrixParseError("missing 'rows cols' header")
    try:
        nums = [int(t) for t in toks]
    except ValueError as exc:
        raise MatrixParseError("not an integer: %s" % exc) from None
    r, c = nums[0], nums[1]
    if r < 1 or c < 0:
        raise MatrixParseError("bad header %d %d" % (r, c))
    body = nums[2:]
    if len(body) != r * c:
        raise MatrixParseError("header says %dx%d = %d entries, found %d" % (r, c, r * c, len(body)))
    M = IntMatrix([body[i * c:(i + 1) * c] for i in range(r)], ncols=c)
    return M.T if transpose else M


def format_matrix(M: Matrix) -> str:
    lines = ["%d %d" % M.shape]
    lines += [" ".join(str(v) for v in row) for row in M.rows]
    return "\n".join(lines) + "\n"


def read_matrix(fh: TextIO, transpose: bool = False) -> IntMatrix:
    return parse_matrix(fh.read(), transpose=transpose)


def matrix_to_json(M: Matrix):
    """Rows of decimal strings, so values beyond 64 bits survive any JSON reader."""
    return [[str(v) for v in row] for row in M.rows]


def matrix_from_json(rows, ncols=None) -> IntMatrix:
    return IntMatrix([[int(v) for v in row] for row in rows], ncols=ncols)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
