"""
OEIS b-file reader: one `index value` pair per line, `#` starts a comment,
blank lines are skipped. Indices must be consecutive.
"""
import logging
from typing import Dict, Iterable

from logic.errors import BFileFormatError

logger = logging.getLogger(__name__)


def parse_bfile(lines: Iterable[str]) -> Dict[int, int]:
    values: Dict[int, int] = {}
    previous = None
    for line_number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileFormatError(f"expected 'index value', got {raw.strip()!r}", line_number)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileFormatError(f"non-integer field in {raw.strip()!r}", line_number)
        if previous is not None and index != previous + 1:
            raise BFileFormatError(f"index {index} does not follow {previous}", line_number)
        values[index] = value
        previous = index
    logger.debug("Parsed %d b-file rows", len(values))
    return values


def parse_bfile_text(text: str) -> Dict[int, int]:
    return parse_bfile(text.splitlines())

