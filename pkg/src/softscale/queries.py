"""Logical queries over description-function datatypes.

A query is a comparison of a named description function against a
constant, possibly combined with and/or/not.  Queries are evaluated
against single datums, and their denotations (the sets of datums they
accept) support exact containment checks: numeric and date comparisons
are handled symbolically with an integer interval algebra, while string
domains fall back to enumeration over the declared value set.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from typing import Union

from .errors import SoftscaleError

ORDERS = ("less", "less-equal", "greater", "greater-equal", "equal",
          "not-equal")

_NO_MAX = None  # open upper interval bound


class QueryTypeError(SoftscaleError, TypeError):
    """Query and datatype disagree (wrong constant or datum type)."""


class UnresolvedDateError(SoftscaleError, ValueError):
    """A relative date was evaluated without a reference date."""


# ---------------------------------------------------------------------------
# datatypes


@dataclass(frozen=True)
class NaturalType:
    """Nonnegative integers."""

    name = "natural"


@dataclass(frozen=True)
class DateType:
    """Calendar dates; compared by day."""

    name = "date"


@dataclass(frozen=True)
class StringType:
    """Strings, optionally with a declared finite value set."""

    values: tuple[str, ...] | None = None
    name = "string"


Datatype = Union[NaturalType, DateType, StringType]


@dataclass(frozen=True)
class RelativeYears:
    """A date constant meaning "the reference date minus N years"."""

    years: int

    def resolve(self, reference: date) -> date:
        try:
            return reference.replace(year=reference.year - self.years)
        except ValueError:  # Feb 29 on a non-leap target year
            return reference.replace(year=reference.year - self.years,
                                     day=28)

    def __str__(self) -> str:
        return f"-P{self.years}Y"


# ---------------------------------------------------------------------------
# AST


_ORDER_SYMBOLS = {"less": "<", "less-equal": "<=", "greater": ">",
                  "greater-equal": ">=", "equal": "=", "not-equal": "/="}


@dataclass(frozen=True)
class Comparison:
    """One comparison of a description function against a constant."""

    function: str
    order: str
    constant: object

    def __post_init__(self):
        if self.order not in ORDERS:
            raise QueryTypeError(f"unsupported order keyword "
                                 f"{self.order!r}; expected one of {ORDERS}")

    def __str__(self) -> str:
        return f"{self.function} {_ORDER_SYMBOLS[self.order]} " \
               f"{self.constant}"


@dataclass(frozen=True)
class And:
    parts: tuple["Query", ...]

    def __str__(self) -> str:
        return " and ".join(f"({p})" if isinstance(p, Or) else str(p)
                            for p in self.parts)


@dataclass(frozen=True)
class Or:
    parts: tuple["Query", ...]

    def __str__(self) -> str:
        return " or ".join(f"({p})" if isinstance(p, And) else str(p)
                           for p in self.parts)


@dataclass(frozen=True)
class Not:
    part: "Query"

    def __str__(self) -> str:
        return f"not ({self.part})"


Query = Union[Comparison, And, Or, Not]

_ORDER_TESTS = {
    "less": lambda d, c: d < c,
    "less-equal": lambda d, c: d <= c,
    "greater": lambda d, c: d > c,
    "greater-equal": lambda d, c: d >= c,
    "equal": lambda d, c: d == c,
    "not-equal": lambda d, c: d != c,
}


def resolve_dates(query: Query, reference: date) -> Query:
    """Replace relative date constants with absolute ones."""
    if isinstance(query, Comparison):
        if isinstance(query.constant, RelativeYears):
            return Comparison(query.function, query.order,
                              query.constant.resolve(reference))
        return query
    if isinstance(query, And):
        return And(tuple(resolve_dates(p, reference) for p in query.parts))
    if isinstance(query, Or):
        return Or(tuple(resolve_dates(p, reference) for p in query.parts))
    if isinstance(query, Not):
        return Not(resolve_dates(query.part, reference))
    raise QueryTypeError(f"not a query: {query!r}")


def evaluate(query: Query, datum) -> bool:
    """Truth of the query on one non-null datum."""
    if isinstance(query, Comparison):
        c = query.constant
        if isinstance(c, RelativeYears):
            raise UnresolvedDateError(
                "relative date must be resolved against a reference date "
                "before evaluation")
        if isinstance(c, bool) or isinstance(datum, bool):
            raise QueryTypeError("boolean constants are not comparable")
        if isinstance(c, int) != isinstance(datum, int) or \
                isinstance(c, date) != isinstance(datum, date) or \
                isinstance(c, str) != isinstance(datum, str):
            raise QueryTypeError(
                f"cannot compare datum {datum!r} with constant {c!r}")
        if isinstance(c, str) and query.order not in ("equal", "not-equal"):
            raise QueryTypeError(
                f"order {query.order!r} is not defined on strings")
        return _ORDER_TESTS[query.order](datum, c)
    if isinstance(query, And):
        return all(evaluate(p, datum) for p in query.parts)
    if isinstance(query, Or):
        return any(evaluate(p, datum) for p in query.parts)
    if isinstance(query, Not):
        return not evaluate(query.part, datum)
    raise QueryTypeError(f"not a query: {query!r}")


def check_types(query: Query, dtype: Datatype) -> None:
    """Raise unless every comparison constant inhabits the datatype."""
    if isinstance(query, Comparison):
        c = query.constant
        ok = (isinstance(dtype, NaturalType) and isinstance(c, int)
              and not isinstance(c, bool)) \
            or (isinstance(dtype, DateType)
                and isinstance(c, (date, RelativeYears))) \
            or (isinstance(dtype, StringType) and isinstance(c, str))
        if not ok:
            raise QueryTypeError(
                f"constant {c!r} does not inhabit datatype {dtype.name}")
        if isinstance(dtype, StringType):
            if query.order not in ("equal", "not-equal"):
                raise QueryTypeError(
                    f"order {query.order!r} is not defined on strings")
            if dtype.values is not None and c not in dtype.values:
                raise QueryTypeError(
                    f"constant {c!r} is outside the declared values "
                    f"{dtype.values}")
        return
    if isinstance(query, (And, Or)):
        for p in query.parts:
            check_types(p, dtype)
        return
    if isinstance(query, Not):
        check_types(query.part, dtype)
        return
    raise QueryTypeError(f"not a query: {query!r}")


def functions_used(query: Query) -> set[str]:
    if isinstance(query, Comparison):
        return {query.function}
    if isinstance(query, (And, Or)):
        out = set()
        for p in query.parts:
            out |= functions_used(p)
        return out
    if isinstance(query, Not):
        return functions_used(query.part)
    raise QueryTypeError(f"not a query: {query!r}")


# ---------------------------------------------------------------------------
# denotations
#
# Natural-number and date comparisons denote sets of integers (dates via
# their ordinal).  An IntSet is a finite union of disjoint closed
# integer ranges, where the upper end may be open (None = unbounded).
# The natural domain is [0, inf); dates use the full calendar range.


@dataclass(frozen=True)
class IntSet:
    """Union of disjoint, sorted integer ranges [lo, hi] (hi None = inf)."""

    ranges: tuple[tuple[int, int | None], ...]

    @classmethod
    def empty(cls) -> "IntSet":
        return cls(())

    @classmethod
    def from_range(cls, lo: int, hi: int | None) -> "IntSet":
        if hi is not None and hi < lo:
            return cls.empty()
        return cls(((lo, hi),))

    def is_empty(self) -> bool:
        return not self.ranges

    def union(self, other: "IntSet") -> "IntSet":
        spans = sorted(self.ranges + other.ranges, key=lambda r: r[0])
        out: list[tuple[int, int | None]] = []
        for lo, hi in spans:
            if out:
                plo, phi = out[-1]
                if phi is None or lo <= phi + 1:
                    if phi is not None:
                        out[-1] = (plo, None if hi is None else max(phi, hi))
                    continue
            out.append((lo, hi))
        return IntSet(tuple(out))

    def intersect(self, other: "IntSet") -> "IntSet":
        out: list[tuple[int, int | None]] = []
        for lo1, hi1 in self.ranges:
            for lo2, hi2 in other.ranges:
                lo = max(lo1, lo2)
                if hi1 is None:
                    hi = hi2
                elif hi2 is None:
                    hi = hi1
                else:
                    hi = min(hi1, hi2)
                if hi is None or lo <= hi:
                    out.append((lo, hi))
        result = IntSet.empty()
        for lo, hi in out:
            result = result.union(IntSet.from_range(lo, hi))
        return result

    def complement(self, domain_lo: int) -> "IntSet":
        """Complement within [domain_lo, inf)."""
        out: list[tuple[int, int | None]] = []
        cursor = domain_lo
        for lo, hi in self.ranges:
            if lo > cursor:
                out.append((cursor, lo - 1))
            if hi is None:
                return IntSet(tuple(out))
            cursor = max(cursor, hi + 1)
        out.append((cursor, None))
        return IntSet(tuple(out))

    def contains(self, n: int) -> bool:
        return any(lo <= n and (hi is None or n <= hi)
                   for lo, hi in self.ranges)

    def subset_of(self, other: "IntSet") -> bool:
        # ranges are maximal after union/intersect, so each range must
        # fit inside a single range of the other side
        for lo, hi in self.ranges:
            covered = False
            for lo2, hi2 in other.ranges:
                if lo2 <= lo and (hi2 is None or (hi is not None
                                                  and hi <= hi2)):
                    covered = True
                    break
            if not covered:
                return False
        return True


def _comparison_intset(order: str, c: int, domain_lo: int) -> IntSet:
    if order == "less":
        return IntSet.from_range(domain_lo, c - 1)
    if order == "less-equal":
        return IntSet.from_range(domain_lo, c)
    if order == "greater":
        return IntSet.from_range(max(domain_lo, c + 1), _NO_MAX)
    if order == "greater-equal":
        return IntSet.from_range(max(domain_lo, c), _NO_MAX)
    if order == "equal":
        if c < domain_lo:
            return IntSet.empty()
        return IntSet.from_range(c, c)
    if order == "not-equal":
        return IntSet.from_range(c, c).complement(domain_lo)
    raise QueryTypeError(f"unsupported order keyword {order!r}")


def denotation(query: Query, dtype: Datatype,
               reference: date | None = None):
    """The set of datums accepted by the query.

    Returns an IntSet for natural and date datatypes and a frozenset of
    strings for string datatypes with a declared value set.
    """
    check_types(query, dtype)
    if isinstance(dtype, NaturalType):
        return _denote_int(query, 0, lambda c: c)
    if isinstance(dtype, DateType):
        if reference is not None:
            query = resolve_dates(query, reference)
        return _denote_int(query, date.min.toordinal(),
                           _date_ordinal)
    if isinstance(dtype, StringType):
        if dtype.values is None:
            raise QueryTypeError(
                "string containment checks need a declared finite "
                "value set")
        universe = frozenset(dtype.values)
        return _denote_enum(query, universe)
    raise QueryTypeError(f"unknown datatype {dtype!r}")


def _date_ordinal(c) -> int:
    if isinstance(c, RelativeYears):
        raise UnresolvedDateError(
            "relative date must be resolved against a reference date "
            "before computing denotations")
    return c.toordinal()


def _denote_int(query: Query, domain_lo: int, to_int) -> IntSet:
    if isinstance(query, Comparison):
        return _comparison_intset(query.order, to_int(query.constant),
                                  domain_lo)
    if isinstance(query, And):
        out = IntSet.from_range(domain_lo, _NO_MAX)
        for p in query.parts:
            out = out.intersect(_denote_int(p, domain_lo, to_int))
        return out
    if isinstance(query, Or):
        out = IntSet.empty()
        for p in query.parts:
            out = out.union(_denote_int(p, domain_lo, to_int))
        return out
    if isinstance(query, Not):
        return _denote_int(query.part, domain_lo, to_int) \
            .complement(domain_lo)
    raise QueryTypeError(f"not a query: {query!r}")


def _denote_enum(query: Query, universe: frozenset) -> frozenset:
    return frozenset(x for x in universe if evaluate(query, x))
