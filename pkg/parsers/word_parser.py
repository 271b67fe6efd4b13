"""
Text form of weighted Dyck words.

    word   := couple*
    couple := '(' INT word ')'

INT is the couple weight in decimal. Whitespace between tokens is ignored on
input; output (logic.dyck.render_text) separates tokens by one space, and the
empty word is the empty string. Errors report the byte offset where parsing
stopped.
"""
import logging
from typing import List, Optional

from logic.dyck import Token, WeightedDyckWord, down, render_text, up, validate
from logic.errors import WordSyntaxError

logger = logging.getLogger(__name__)


class WordParser:
    """Recursive-descent parser for the couple grammar"""

    def __init__(self, debug: bool = False):
        self.debug = debug
        self.parsing_stats = {
            'total_attempts': 0,
            'successful_parses': 0,
            'failed_parses': 0,
        }

    def parse(self, text: str) -> WeightedDyckWord:
        self.parsing_stats['total_attempts'] += 1
        try:
            word = self._parse(text)
        except WordSyntaxError as e:
            self.parsing_stats['failed_parses'] += 1
            if self.debug:
                logger.debug("Failed to parse %r: %s", text, e)
            raise
        self.parsing_stats['successful_parses'] += 1
        return word

    def _parse(self, text: str) -> WeightedDyckWord:
        self._text = text
        self._pos = 0
        tokens: List[Token] = []
        self._word(tokens)
        self._skip_space()
        if self._pos < len(text):
            raise self._error(f"unexpected {text[self._pos]!r}")
        # the grammar already pairs every ')' with its '(' weight
        return validate(tokens)

    def _offset(self, position: Optional[int] = None) -> int:
        position = self._pos if position is None else position
        return len(self._text[:position].encode("utf-8"))

    def _error(self, message: str, position: Optional[int] = None) -> WordSyntaxError:
        return WordSyntaxError(message, self._offset(position))

    def _skip_space(self) -> None:
        while self._pos < len(self._text) and self._text[self._pos].isspace():
            self._pos += 1

    def _word(self, tokens: List[Token]) -> None:
        while True:
            self._skip_space()
            if self._pos >= len(self._text) or self._text[self._pos] != "(":
                return
            self._couple(tokens)

    def _couple(self, tokens: List[Token]) -> None:
        self._pos += 1  # '('
        self._skip_space()
        weight = self._integer()
        tokens.append(up(weight))
        self._word(tokens)
        self._skip_space()
        if self._pos >= len(self._text):
            raise self._error("expected ')' before end of input")
        if self._text[self._pos] != ")":
            raise self._error(f"expected ')' but found {self._text[self._pos]!r}")
        self._pos += 1
        tokens.append(down(weight))

    def _integer(self) -> int:
        start = self._pos
        while self._pos < len(self._text) and self._text[self._pos] in "0123456789":
            self._pos += 1
        if start == self._pos:
            if self._pos >= len(self._text):
                raise self._error("expected a couple weight before end of input")
            raise self._error(f"expected a couple weight but found {self._text[self._pos]!r}")
        weight = int(self._text[start:self._pos])
        if weight < 1:
            raise self._error(f"couple weight must be positive, got {weight}", start)
        return weight


def parse_text(s: str) -> WeightedDyckWord:
    return WordParser().parse(s)


__all__ = ["WordParser", "parse_text", "render_text"]
