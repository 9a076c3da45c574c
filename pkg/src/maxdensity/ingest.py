"""Parsers for the three input formats.

``pairs``  one ``a<TAB>w`` record per line (``w`` defaults to 1), ``#`` comments.
``fasta``  nucleotide FASTA; G/C/S score 1, everything else 0, width 1.
``rle``    one ``a<TAB>end`` run per line, ``end`` strictly increasing.

Decimal values (at most six fractional digits) are scaled to integers. The
scale is chosen per column for the whole file: 1 if every value in the column
is integral, ``10**6`` otherwise.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from .core import (MAX_ABS_VALUE, MAX_LENGTH, MAX_WIDTH, NoFeasibleSegment,
                   NumberPair, ProblemInstance)
from .sparse import RunLengthSequence

DECIMAL_SCALE = 10**6
_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)\Z")

_GC = frozenset("GCS")
_AT = frozenset("ATUW")
_AMBIGUOUS = frozenset("RYKMBDHVN")


class InputFormat(str, enum.Enum):
    PAIRS = "pairs"
    FASTA = "fasta"
    RLE = "rle"


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class FastaRecord:
    name: str
    start: int   # 1-based index of the first base in the concatenated sequence
    end: int


@dataclass
class ParsedSequence:
    a: list
    w: list
    a_scale: int = 1
    w_scale: int = 1
    records: list = field(default_factory=list)
    ambiguous: int = 0

    @property
    def pairs(self) -> list:
        return [NumberPair(a, w) for a, w in zip(self.a, self.w)]

    def __len__(self):
        return len(self.a)

    def instance(self, w_min, w_max=None) -> ProblemInstance:
        """Instance with bounds given in the file's original width units.

        Raises NoFeasibleSegment when no integer scaled width lies between the
        rounded bounds.
        """
        lo, hi = scale_bounds(w_min, w_max, self.w_scale)
        if hi is not None and hi < lo:
            raise NoFeasibleSegment(f"no width lies in [{w_min}, {w_max}]")
        return ProblemInstance(self.a, self.w, lo, hi)


def scale_bounds(w_min, w_max, w_scale):
    """Integer bounds in scaled units; ``w_min`` rounds up, ``w_max`` down."""
    lo = math.ceil(Fraction(str(w_min)) * w_scale)
    hi = None if w_max is None else math.floor(Fraction(str(w_max)) * w_scale)
    return max(lo, 1), hi


def _decimal(token, line, column=None):
    if not _NUMBER.match(token):
        raise ParseError(f"not a number: {token!r}", line, column)
    d = Decimal(token)
    frac_digits = -d.as_tuple().exponent if d.as_tuple().exponent < 0 else 0
    if frac_digits > 6:
        raise ParseError(f"more than 6 fractional digits: {token!r}", line, column)
    return d


def _scale_column(values, scale, limit, what):
    out = []
    for line, d in values:
        v = d * scale
        if v != v.to_integral_value():
            raise ParseError(f"{what} {d} is not representable at scale {scale}", line)
        v = int(v)
        if abs(v) > limit:
            raise ParseError(f"{what} {d} outside the supported range", line)
        out.append(v)
    return out


def _column_scale(values):
    return 1 if all(d == d.to_integral_value() for _, d in values) else DECIMAL_SCALE


def _records(text):
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def parse_pairs(text: str) -> ParsedSequence:
    """Parse ``a<TAB>w`` lines into scaled integer pairs."""
    a_vals = []
    w_vals = []
    for line_no, line in _records(text):
        fields = line.split()
        if len(fields) > 2:
            raise ParseError(f"expected 'a<TAB>w', got {len(fields)} fields", line_no)
        a_vals.append((line_no, _decimal(fields[0], line_no, 1)))
        w = _decimal(fields[1], line_no, 2) if len(fields) == 2 else Decimal(1)
        if w <= 0:
            raise ParseError(f"width must be positive, got {fields[1]}", line_no, 2)
        w_vals.append((line_no, w))
    if len(a_vals) > MAX_LENGTH:
        raise ParseError(f"more than {MAX_LENGTH} records")
    a_scale = _column_scale(a_vals)
    w_scale = _column_scale(w_vals)
    return ParsedSequence(_scale_column(a_vals, a_scale, MAX_ABS_VALUE, "value"),
                          _scale_column(w_vals, w_scale, MAX_WIDTH, "width"),
                          a_scale, w_scale)


def iter_pairs(lines, a_scale=DECIMAL_SCALE, w_scale=DECIMAL_SCALE):
    """Yield scaled ``(a, w)`` from an iterable of lines using fixed scales.

    A single pass cannot pick the scale from the data, so streaming callers
    fix it up front.
    """
    for line_no, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) > 2:
            raise ParseError(f"expected 'a<TAB>w', got {len(fields)} fields", line_no)
        a = _scale_column([(line_no, _decimal(fields[0], line_no, 1))], a_scale,
                          MAX_ABS_VALUE, "value")[0]
        w = (_scale_column([(line_no, _decimal(fields[1], line_no, 2))], w_scale,
                           MAX_WIDTH, "width")[0]
             if len(fields) == 2 else w_scale)
        if w <= 0:
            raise ParseError(f"width must be positive, got {fields[1]}", line_no, 2)
        yield a, w


class _FastaScanner:
    def __init__(self):
        self.records = []
        self.ambiguous = 0
        self.count = 0
        self._name = None

    def line(self, line_no, raw):
        """Return the scores for one input line."""
        line = raw.strip()
        if not line or line.startswith(";"):
            return []
        if line.startswith(">"):
            self._close()
            self._name = line[1:].strip()
            self._start = self.count + 1
            return []
        if self._name is None:
            raise ParseError("sequence data before the first '>' header", line_no, 1)
        out = []
        for col, ch in enumerate(raw.rstrip("\r\n"), 1):
            if ch.isspace():
                continue
            base = ch.upper()
            if base in _GC:
                out.append(1)
            elif base in _AT:
                out.append(0)
            elif base in _AMBIGUOUS:
                self.ambiguous += 1
                out.append(0)
            else:
                raise ParseError(f"invalid nucleotide code {ch!r}", line_no, col)
        self.count += len(out)
        return out

    def _close(self):
        if self._name is not None:
            self.records.append(FastaRecord(self._name, self._start, self.count))

    def finish(self):
        self._close()
        self._name = None


def parse_fasta_gc(text: str) -> ParsedSequence:
    """GC indicator sequence of all records concatenated in file order."""
    scan = _FastaScanner()
    a_vals = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        a_vals.extend(scan.line(line_no, raw))
    scan.finish()
    return ParsedSequence(a_vals, [1] * len(a_vals), 1, 1, scan.records, scan.ambiguous)


def iter_fasta_gc(lines):
    """Yield ``(a, 1)`` per base from an iterable of FASTA lines."""
    scan = _FastaScanner()
    for line_no, raw in enumerate(lines, 1):
        for a in scan.line(line_no, raw):
            yield a, 1


def _rle_record(line_no, line, prev):
    fields = line.split()
    if len(fields) != 2:
        raise ParseError(f"expected 'a<TAB>end', got {len(fields)} fields", line_no)
    value = _decimal(fields[0], line_no, 1)
    if not fields[1].isdigit():
        raise ParseError(f"end index must be a positive integer: {fields[1]!r}",
                         line_no, 2)
    end = int(fields[1])
    if end <= prev:
        raise ParseError(f"end index {end} does not exceed previous end {prev}",
                         line_no, 2)
    if end > MAX_LENGTH:
        raise ParseError(f"end index {end} exceeds {MAX_LENGTH}", line_no, 2)
    return value, end


def parse_rle(text: str) -> RunLengthSequence:
    """Parse ``a<TAB>end`` run lines."""
    vals = []
    ends = []
    prev = 0
    for line_no, line in _records(text):
        value, prev = _rle_record(line_no, line, prev)
        vals.append((line_no, value))
        ends.append(prev)
    if not ends:
        raise ParseError("no runs")
    scale = _column_scale(vals)
    scaled = _scale_column(vals, scale, MAX_ABS_VALUE, "value")
    return RunLengthSequence(tuple(zip(scaled, ends)), scale)


def iter_rle(lines, a_scale=DECIMAL_SCALE):
    """Yield the expanded ``(a, 1)`` elements of run lines, with a fixed scale."""
    prev = 0
    for line_no, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        value, end = _rle_record(line_no, line, prev)
        a = _scale_column([(line_no, value)], a_scale, MAX_ABS_VALUE, "value")[0]
        for _ in range(end - prev):
            yield a, 1
        prev = end


def read_input(text: str, fmt) -> object:
    fmt = InputFormat(fmt)
    if fmt is InputFormat.PAIRS:
        return parse_pairs(text)
    if fmt is InputFormat.FASTA:
        return parse_fasta_gc(text)
    return parse_rle(text)
