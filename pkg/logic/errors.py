from typing import Optional


class WtCensusError(Exception):
    """Base class for every error raised by the census engine"""


class ConfigurationError(WtCensusError, ValueError):
    """Invalid value in the environment or .env file"""


class PartitionError(WtCensusError, ValueError):
    """Invalid partition parts or text"""


class PassportMismatch(WtCensusError, ValueError):
    """The two halves of a passport do not sum to the same weight"""


class DyckWordError(WtCensusError, ValueError):
    """A token sequence is not a weighted Dyck word"""


class UnbalancedWord(DyckWordError):
    def __init__(self, open_count: int, close_count: int):
        self.open_count = open_count
        self.close_count = close_count
        super().__init__(f"Unbalanced word: {open_count} up steps, {close_count} down steps")


class PrefixViolation(DyckWordError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"Prefix dips below zero at position {position}")


class CoupleWeightMismatch(DyckWordError):
    def __init__(self, open_position: int, close_position: int, open_weight: int, close_weight: int):
        self.open_position = open_position
        self.close_position = close_position
        super().__init__(
            f"Couple ({open_position}, {close_position}) has weights {open_weight} and {close_weight}"
        )


class EmptyWord(DyckWordError):
    def __init__(self):
        super().__init__("The empty word has no first-return decomposition")


class WordSyntaxError(DyckWordError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"syntax error at offset {offset}: {message}")


class TreeError(WtCensusError, ValueError):
    """Operation not defined for this tree (usually the single-vertex tree)"""


class SeriesError(WtCensusError, ArithmeticError):
    """Truncated series arithmetic failure"""


class DivisionByNonUnit(SeriesError):
    def __init__(self):
        super().__init__("Divisor has zero constant term")


class NonSquareConstantTerm(SeriesError):
    def __init__(self, constant):
        self.constant = constant
        super().__init__(f"Constant term {constant} is not a perfect square")


class InvariantViolation(WtCensusError, AssertionError):
    """An internal identity failed; indicates an implementation bug"""


class BoundExceeded(WtCensusError, ValueError):
    def __init__(self, what: str, value: int, bound: int):
        self.value = value
        self.bound = bound
        super().__init__(f"{what} {value} exceeds the configured bound {bound}")


class BFileFormatError(WtCensusError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Malformed b-file{where}: {message}")


class FixtureExhausted(WtCensusError, LookupError):
    def __init__(self, last_index: int):
        self.last_index = last_index
        if last_index < 0:
            super().__init__("fixture has no a(0)")
        else:
            super().__init__(f"fixture exhausted at {last_index}")
