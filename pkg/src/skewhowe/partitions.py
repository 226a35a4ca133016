"""Partitions, box complements, conjugates, and per-series coordinates.

A Partition is a weakly decreasing tuple of nonnegative integers with
trailing zeros trimmed.  TypeDWeight allows a signed last entry (the
type D dominance condition).  Partitions carry no box context: the box
dimensions (n, k) are passed explicitly wherever a complement is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .exact import HalfInt


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part: {parts}")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def of(parts) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        return Partition(tuple(parts))

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse comma-separated parts; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return Partition()
        return Partition(tuple(int(p) for p in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """1-based part with zero padding beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self} to length {length}")
        return self.parts + (0,) * (length - len(self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def weighted_size(self) -> int:
        """sum over rows of (i-1) * parts[i], rows counted from 1."""
        return sum(i * p for i, p in enumerate(self.parts))

    def fits_in_box(self, n: int, k: int) -> bool:
        return len(self.parts) <= n and (not self.parts or self.parts[0] <= k)

    def conjugate(self) -> "Partition":
        """Transpose: column lengths of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def complement(self, n: int, k: int) -> "Partition":
        """Complement inside the n x k box: row i maps to k - parts[n+1-i]."""
        if not self.fits_in_box(n, k):
            raise ValueError(f"{self} does not fit in a {n}x{k} box")
        padded = self.padded(n)
        return Partition(tuple(k - padded[n - 1 - i] for i in range(n)))

    def contains(self, other: "Partition") -> bool:
        other = Partition.of(other)
        return all(other.part(i + 1) <= self.part(i + 1)
                   for i in range(len(other.parts)))

    def addable_corners(self, n: int, k: int) -> list[int]:
        """1-based rows where a box can be added while staying in k^n."""
        out = []
        for i in range(1, n + 1):
            cap = k if i == 1 else min(k, self.part(i - 1))
            if self.part(i) < cap:
                out.append(i)
        return out

    def removable_corners(self) -> list[int]:
        """1-based rows where a box can be removed leaving a partition."""
        return [i for i in range(1, len(self.parts) + 1)
                if self.part(i) > self.part(i + 1)]

    def with_row(self, i: int, value: int) -> "Partition":
        """Copy with 1-based row i set to value (length grows as needed)."""
        length = max(len(self.parts), i)
        rows = list(self.padded(length))
        rows[i - 1] = value
        return Partition(tuple(rows))


def conjugate(lam) -> Partition:
    return Partition.of(lam).conjugate()


def complement(lam, n: int, k: int) -> Partition:
    return Partition.of(lam).complement(n, k)


def weighted_size(lam) -> int:
    return Partition.of(lam).weighted_size


def enumerate_in_box(n: int, k: int) -> Iterator[Partition]:
    """All partitions contained in the n x k box, binomial(n+k, n) of them."""
    if n < 0 or k < 0:
        raise ValueError("box dimensions must be nonnegative")

    def rec(rows_left: int, cap: int, acc: tuple[int, ...]):
        yield Partition(acc)
        if rows_left == 0:
            return
        for nxt in range(cap, 0, -1):
            yield from rec(rows_left - 1, nxt, acc + (nxt,))

    return rec(n, k, ())


@dataclass(frozen=True, order=True)
class TypeDWeight:
    """Integer weight with parts[0] >= ... >= parts[-2] >= |parts[-1]|."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("type D weight needs an explicit rank")
        for a, b in zip(parts[:-2], parts[1:-1]):
            if a < b:
                raise ValueError(f"not dominant: {parts}")
        if len(parts) >= 2 and parts[-2] < abs(parts[-1]):
            raise ValueError(f"not dominant: {parts}")
        if len(parts) >= 2 and parts[-2] < 0:
            raise ValueError(f"not dominant: {parts}")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def of(value, rank: int | None = None) -> "TypeDWeight":
        if isinstance(value, TypeDWeight):
            return value
        parts = tuple(value.parts) if isinstance(value, Partition) else tuple(value)
        if rank is not None:
            parts = parts + (0,) * (rank - len(parts))
        return TypeDWeight(parts)

    @staticmethod
    def parse(text: str, rank: int) -> "TypeDWeight":
        """Comma-separated entries; a minus sign is allowed on the last."""
        text = text.strip()
        parts = tuple(int(p) for p in text.split(",")) if text else ()
        return TypeDWeight.of(parts, rank)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @property
    def rank(self) -> int:
        return len(self.parts)

    def abs_partition(self) -> Partition:
        """Partition obtained by flipping the sign of a negative last entry."""
        parts = self.parts[:-1] + (abs(self.parts[-1]),)
        return Partition(parts)

    def sign_flipped(self) -> "TypeDWeight":
        return TypeDWeight(self.parts[:-1] + (-self.parts[-1],))


# -- coordinate systems -------------------------------------------------

SERIES_A = "A"
SERIES_BC = "BC"
SERIES_D = "D"
SERIES_SO_ODD_MEASURE = "SO_odd_measure"
SERIES_SP_MEASURE = "Sp_measure"
SERIES_SO_EVEN_MEASURE = "SO_even_measure"

_SERIES = {SERIES_A, SERIES_BC, SERIES_D,
           SERIES_SO_ODD_MEASURE, SERIES_SP_MEASURE, SERIES_SO_EVEN_MEASURE}


@dataclass(frozen=True)
class SeriesCoords:
    series: str
    values: tuple[HalfInt, ...]

    def __post_init__(self):
        for a, b in zip(self.values, self.values[1:]):
            if not a > b:
                raise ValueError(f"coordinates not strictly decreasing: {self.values}")

    def as_fractions(self):
        return tuple(v.as_fraction() for v in self.values)

    def as_ints(self):
        return tuple(v.as_int() for v in self.values)


def coordinates(lam, series: str, n: int, p: int = 0) -> SeriesCoords:
    """Shifted coordinates a_i used by the formulas and measures.

    A:  a_i = lambda_i + n - i
    BC: a_i = lambda_i + n - i + (p+1)/2
    D:  a_i = lambda_i + n - i + p/2
    SO_odd_measure:  a_i = 2(lambda_i + l - i) + 1     (l = n)
    Sp_measure:      a_i = lambda_i + l - i + 1
    SO_even_measure: a_i = 2 lambda_i + 2(l - i)
    """
    if series not in _SERIES:
        raise ValueError(f"unknown series {series!r}")
    if isinstance(lam, TypeDWeight):
        parts = lam.parts + (0,) * (n - lam.rank)
    else:
        parts = Partition.of(lam).padded(n)
    vals = []
    for i in range(1, n + 1):
        li = parts[i - 1]
        if series == SERIES_A:
            a = HalfInt.of(li + n - i)
        elif series == SERIES_BC:
            a = HalfInt(2 * (li + n - i) + p + 1)
        elif series == SERIES_D:
            a = HalfInt(2 * (li + n - i) + p)
        elif series == SERIES_SO_ODD_MEASURE:
            a = HalfInt.of(2 * (li + n - i) + 1)
        elif series == SERIES_SP_MEASURE:
            a = HalfInt.of(li + n - i + 1)
        else:
            a = HalfInt.of(2 * li + 2 * (n - i))
        vals.append(a)
    return SeriesCoords(series, tuple(vals))
