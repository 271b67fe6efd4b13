"""
Weighted Dyck words over the alphabet {x_i, y_i}.

A word is stored as a tuple of tokens. Up tokens are the letters x_i, Down
tokens the letters y_i. The coupled Down of an Up is found with a depth
counter: walk right until the depth first returns to the Up's level.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    CoupleWeightMismatch, DyckWordError, EmptyWord, PrefixViolation, UnbalancedWord
)
from .utils import binomial

logger = logging.getLogger(__name__)


class Step(Enum):
    UP = "x"
    DOWN = "y"


@dataclass(frozen=True)
class Token:
    kind: Step
    weight: int

    def __post_init__(self):
        if self.weight < 1:
            raise DyckWordError(f"Token weight must be positive, got {self.weight}")

    @property
    def sort_key(self) -> Tuple[int, int]:
        # Up sorts before Down, then by weight
        return (0 if self.kind is Step.UP else 1, self.weight)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.weight}"


def up(weight: int) -> Token:
    return Token(Step.UP, weight)


def down(weight: int) -> Token:
    return Token(Step.DOWN, weight)


@dataclass(frozen=True)
class WeightedDyckWord:
    """
    A validated weighted Dyck word. Build through validate(), compose() or the
    text parser; the constructor itself trusts its input.
    """
    tokens: Tuple[Token, ...] = ()

    @property
    def weight(self) -> int:
        return sum(token.weight for token in self.tokens if token.kind is Step.UP)

    @property
    def edge_count(self) -> int:
        return len(self.tokens) // 2

    @property
    def is_empty(self) -> bool:
        return not self.tokens

    @property
    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """Length first, then lexicographic token order"""
        return (len(self.tokens), tuple(token.sort_key for token in self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __str__(self) -> str:
        return render_text(self)


EMPTY_WORD = WeightedDyckWord(())


def validate(tokens: Iterable[Token]) -> WeightedDyckWord:
    """Check the Dyck condition and couple weights, reporting the first violation"""
    tokens = tuple(tokens)
    open_stack: List[int] = []
    for position, token in enumerate(tokens):
        if token.kind is Step.UP:
            open_stack.append(position)
            continue
        if not open_stack:
            raise PrefixViolation(position)
        opening = open_stack.pop()
        if tokens[opening].weight != token.weight:
            raise CoupleWeightMismatch(opening, position, tokens[opening].weight, token.weight)
    if open_stack:
        ups = sum(1 for token in tokens if token.kind is Step.UP)
        raise UnbalancedWord(ups, len(tokens) - ups)
    return WeightedDyckWord(tokens)


def couple_match(w: WeightedDyckWord) -> Tuple[Tuple[int, int], ...]:
    """Pairs (up position, down position) for every couple, ordered by the up position"""
    pairs: Dict[int, int] = {}
    open_stack: List[int] = []
    for position, token in enumerate(w.tokens):
        if token.kind is Step.UP:
            open_stack.append(position)
        else:
            pairs[open_stack.pop()] = position
    return tuple(sorted(pairs.items()))


def _first_return(tokens: Sequence[Token]) -> int:
    depth = 0
    for position, token in enumerate(tokens):
        depth += 1 if token.kind is Step.UP else -1
        if depth == 0:
            return position
    raise UnbalancedWord(depth, 0)


def decompose(w: WeightedDyckWord) -> Tuple[int, WeightedDyckWord, WeightedDyckWord]:
    """The unique factorisation w = x_i u y_i v"""
    if w.is_empty:
        raise EmptyWord()
    close = _first_return(w.tokens)
    return (
        w.tokens[0].weight,
        WeightedDyckWord(w.tokens[1:close]),
        WeightedDyckWord(w.tokens[close + 1:]),
    )


def compose(i: int, u: WeightedDyckWord, v: WeightedDyckWord) -> WeightedDyckWord:
    """Build x_i u y_i v"""
    if i < 1:
        raise DyckWordError(f"Couple weight must be positive, got {i}")
    return WeightedDyckWord((up(i),) + u.tokens + (down(i),) + v.tokens)


def heights(w: WeightedDyckWord) -> Tuple[int, ...]:
    """The Dyck path: height before the first step and after every step"""
    path = [0]
    for token in w.tokens:
        path.append(path[-1] + (1 if token.kind is Step.UP else -1))
    return tuple(path)


def underlying_word(w: WeightedDyckWord) -> WeightedDyckWord:
    """The word of the topological tree: every couple gets weight 1"""
    return WeightedDyckWord(tuple(Token(token.kind, 1) for token in w.tokens))


def render_text(w: WeightedDyckWord) -> str:
    """Each couple as '(i' ... ')' with single spaces; the empty word is ''"""
    return " ".join(f"({token.weight}" if token.kind is Step.UP else ")" for token in w.tokens)


class WordEnumerator:
    """
    Deterministic enumeration of all weighted Dyck words of a given weight,
    following D(n) = x_i D(k) y_i D(n-i-k). Order: root weight ascending,
    then the weight k of u ascending, then u, then v, recursively.

    With memoize=False sub-lists are regenerated on demand, which keeps the
    memory bounded by the recursion depth.
    """

    def __init__(self, memoize: bool = False):
        self.memoize = memoize
        self._cache: Dict[int, List[WeightedDyckWord]] = {}

    def words(self, n: int) -> Iterator[WeightedDyckWord]:
        if n < 0:
            raise DyckWordError(f"Weight must be non-negative, got {n}")
        if self.memoize:
            return iter(self._cached(n))
        return self._generate(n)

    def _cached(self, n: int) -> List[WeightedDyckWord]:
        if n not in self._cache:
            self._cache[n] = list(self._generate(n))
            logger.debug("Cached %d words of weight %d", len(self._cache[n]), n)
        return self._cache[n]

    def _sub(self, n: int) -> Iterable[WeightedDyckWord]:
        return self._cached(n) if self.memoize else self._generate(n)

    def _generate(self, n: int) -> Iterator[WeightedDyckWord]:
        if n == 0:
            yield EMPTY_WORD
            return
        for i in range(1, n + 1):
            for k in range(0, n - i + 1):
                for u in self._sub(k):
                    for v in self._sub(n - i - k):
                        yield compose(i, u, v)

    def words_with_edges(self, n: int, m: int) -> Iterator[WeightedDyckWord]:
        """Words of weight n with m couples, in the same order as words(n)"""
        if n < 0 or m < 0:
            raise DyckWordError(f"Weight and edge count must be non-negative, got ({n}, {m})")
        return self._generate_with_edges(n, m)

    def _generate_with_edges(self, n: int, m: int) -> Iterator[WeightedDyckWord]:
        if n == 0 or m == 0:
            if n == 0 and m == 0:
                yield EMPTY_WORD
            return
        if m > n:
            return
        for i in range(1, n + 1):
            for k in range(0, n - i + 1):
                for u in self._sub(k):
                    rest = m - 1 - u.edge_count
                    if rest < 0:
                        continue
                    for v in self._generate_with_edges(n - i - k, rest):
                        yield compose(i, u, v)


def enumerate_words(n: int, memoize: bool = False) -> Iterator[WeightedDyckWord]:
    return WordEnumerator(memoize=memoize).words(n)


def enumerate_words_with_edges(n: int, m: int, memoize: bool = False) -> Iterator[WeightedDyckWord]:
    return WordEnumerator(memoize=memoize).words_with_edges(n, m)


def compositions(n: int, m: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ways to write n as m positive parts, lexicographic"""
    if m == 0:
        if n == 0:
            yield ()
        return
    if m == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - m + 2):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest


def composition_count(n: int, m: int) -> int:
    if m == 0:
        return 1 if n == 0 else 0
    return binomial(n - 1, m - 1)


def assign_weights(w: WeightedDyckWord, composition: Sequence[int]) -> WeightedDyckWord:
    """
    Weight the couples of a topological word: the j-th couple, counted by its
    opening letter, receives composition[j].
    """
    if any(token.weight != 1 for token in w.tokens):
        raise DyckWordError("assign_weights expects a word with all couple weights equal to 1")
    if len(composition) != w.edge_count:
        raise DyckWordError(
            f"Composition has {len(composition)} parts but the word has {w.edge_count} couples"
        )
    tokens: List[Optional[Token]] = [None] * len(w.tokens)
    for index, (opening, closing) in enumerate(couple_match(w)):
        weight = composition[index]
        tokens[opening] = up(weight)
        tokens[closing] = down(weight)
    return WeightedDyckWord(tuple(tokens))


def enumerate_words_by_assignment(n: int, m: int) -> Iterator[WeightedDyckWord]:
    """
    The b_{m,n} words of weight n with m couples, built as a topological word
    with m edges times a composition of n into m parts.
    """
    if m < 1 or m > n:
        return
    parts = list(compositions(n, m))
    for shape in enumerate_words_with_edges(m, m):
        for composition in parts:
            yield assign_weights(shape, composition)
