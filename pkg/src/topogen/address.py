"""Eventually periodic digit sequences ``u w w w ...``.

Text form is ``"011(10)"``: preperiod ``011``, period ``10``.  Digits above 9
are written in brackets, e.g. ``"[12]0(3)"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

Word = Tuple[int, ...]

_TOKEN = re.compile(r"\[(\d+)\]|(\d)")


def _primitive_root(w: Word) -> Word:
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def canonicalize(preperiod: Sequence[int], period: Sequence[int]) -> Tuple[Word, Word]:
    pre, per = tuple(preperiod), _primitive_root(tuple(period))
    if not per:
        raise ValueError("period must be nonempty")
    while pre and pre[-1] == per[-1]:
        pre, per = pre[:-1], (per[-1],) + per[:-1]
    return pre, per


@dataclass(frozen=True, order=True)
class Address:
    """The infinite sequence preperiod . period . period ... in canonical form."""

    preperiod: Word
    period: Word

    def __init__(self, preperiod: Sequence[int] = (), period: Sequence[int] = (0,)):
        pre, per = canonicalize(preperiod, period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text: str) -> "Address":
        text = text.strip()
        m = re.fullmatch(r"([^()]*)\(([^()]+)\)", text)
        if not m:
            raise ValueError(f"bad address {text!r}; expected form like 011(10)")
        return cls(_digits(m.group(1)), _digits(m.group(2)))

    def __str__(self) -> str:
        return f"{_fmt(self.preperiod)}({_fmt(self.period)})"

    def __repr__(self) -> str:
        return f"Address('{self}')"

    def __getitem__(self, n: int) -> int:
        p = len(self.preperiod)
        if n < p:
            return self.preperiod[n]
        return self.period[(n - p) % len(self.period)]

    def __iter__(self) -> Iterator[int]:
        yield from self.preperiod
        while True:
            yield from self.period

    def prefix(self, n: int) -> Word:
        return tuple(self[k] for k in range(n))

    def phase(self, n: int) -> int:
        """Position n folded onto the lasso (two positions with equal phase have equal tails)."""
        p = len(self.preperiod)
        return n if n < p else p + (n - p) % len(self.period)

    @property
    def lasso_size(self) -> int:
        return len(self.preperiod) + len(self.period)

    def is_periodic(self) -> bool:
        return not self.preperiod

    def prepend(self, word: Sequence[int]) -> "Address":
        return Address(tuple(word) + self.preperiod, self.period)

    def shift(self, n: int = 1) -> "Address":
        p = len(self.preperiod)
        if n <= p:
            return Address(self.preperiod[n:], self.period)
        k = (n - p) % len(self.period)
        return Address((), self.period[k:] + self.period[:k])

    def max_digit(self) -> int:
        return max(self.preperiod + self.period)


def _digits(s: str) -> Word:
    out, pos = [], 0
    for m in _TOKEN.finditer(s):
        if m.start() != pos:
            raise ValueError(f"bad digit string {s!r}")
        out.append(int(m.group(1) or m.group(2)))
        pos = m.end()
    if pos != len(s):
        raise ValueError(f"bad digit string {s!r}")
    return tuple(out)


def _fmt(w: Word) -> str:
    return "".join(str(d) if d < 10 else f"[{d}]" for d in w)


def format_word(w: Sequence[int]) -> str:
    return _fmt(tuple(w))


def parse_word(s: str) -> Word:
    return _digits(s.strip())
