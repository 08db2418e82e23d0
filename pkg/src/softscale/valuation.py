"""Truth-value algebras.

A valuation is a commutative monoidal preorder whose composition has a
right adjoint (an implication), i.e. the algebra of generalized truth
values that every enriched structure in this package is parameterized by.
Three instances are provided:

* ``boolean`` -- {0, 1} with the usual order, logical and, material
  implication; unit 1.
* ``fuzzy``   -- [0, 1] with the usual order, minimum, Goedel
  implication (1 if a <= b else b); unit 1.
* ``real``    -- [0, inf] with the *downward* order (a precedes b when
  a >= b numerically), sum, truncated difference; unit 0.  This is the
  algebra of generalized metric spaces.

Values are plain floats (booleans are 0.0/1.0, infinity is
``math.inf``).  Comparisons on the fuzzy and real carriers use an
absolute tolerance of ``EPSILON``.  All operations are pure and the
valuation objects are stateless, so they are safe to share freely.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .errors import CarrierError, ValuationMismatchError

EPSILON = 1e-9
INFINITY = math.inf

VValue = float


class Valuation:
    """Base truth-value algebra; concrete carriers subclass this."""

    kind: str = ""
    unit: VValue = 1.0
    top: VValue = 1.0
    bottom: VValue = 0.0

    # -- carrier ------------------------------------------------------

    def contains(self, a) -> bool:
        raise NotImplementedError

    def check(self, a) -> VValue:
        """Normalize ``a`` to a float carrier element or raise CarrierError."""
        try:
            v = float(a)
        except (TypeError, ValueError):
            raise CarrierError(
                f"{a!r} is not a {self.kind} truth value") from None
        if not self.contains(v):
            raise CarrierError(f"{a!r} is outside the {self.kind} carrier")
        return v

    def check_array(self, arr: np.ndarray) -> np.ndarray:
        """Validate every entry of ``arr``; returns a float64 copy."""
        out = np.asarray(arr, dtype=float)
        if out.size and not self._all_in_carrier(out):
            raise CarrierError(
                f"array contains entries outside the {self.kind} carrier")
        return out

    def _all_in_carrier(self, arr: np.ndarray) -> bool:
        raise NotImplementedError

    # -- order and equality -------------------------------------------

    def leq(self, a, b) -> bool:
        """True when ``a`` precedes ``b`` in the valuation order."""
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return self.leq(a, b) and self.leq(b, a)

    # -- monoidal structure -------------------------------------------

    def tensor(self, a, b) -> VValue:
        raise NotImplementedError

    def implies(self, a, b) -> VValue:
        """Right adjoint of tensor: largest c with c (x) a below b."""
        raise NotImplementedError

    def join(self, xs: Iterable) -> VValue:
        """Least upper bound of a finite family; empty family gives bottom."""
        xs = [self.check(x) for x in xs]
        if not xs:
            return self.bottom
        out = xs[0]
        for x in xs[1:]:
            out = self._join2(out, x)
        return out

    def meet(self, xs: Iterable) -> VValue:
        """Greatest lower bound of a finite family; empty family gives top."""
        xs = [self.check(x) for x in xs]
        if not xs:
            return self.top
        out = xs[0]
        for x in xs[1:]:
            out = self._meet2(out, x)
        return out

    def _join2(self, a: float, b: float) -> float:
        raise NotImplementedError

    def _meet2(self, a: float, b: float) -> float:
        raise NotImplementedError

    # -- vectorized forms (operate on validated float arrays) ---------

    def leq_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def leq_all(self, a: np.ndarray, b: np.ndarray) -> bool:
        return bool(np.all(self.leq_arr(np.asarray(a, float),
                                        np.asarray(b, float))))

    def tensor_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def implies_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def join_arr(self, a: np.ndarray, axis: int) -> np.ndarray:
        """Fold join along ``axis``; empty axes give bottom."""
        a = np.asarray(a, float)
        if a.shape[axis] == 0:
            shape = list(a.shape)
            del shape[axis]
            return np.full(shape, self.bottom)
        return self._join_reduce(a, axis)

    def meet_arr(self, a: np.ndarray, axis: int) -> np.ndarray:
        a = np.asarray(a, float)
        if a.shape[axis] == 0:
            shape = list(a.shape)
            del shape[axis]
            return np.full(shape, self.top)
        return self._meet_reduce(a, axis)

    def _join_reduce(self, a: np.ndarray, axis: int) -> np.ndarray:
        raise NotImplementedError

    def _meet_reduce(self, a: np.ndarray, axis: int) -> np.ndarray:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{self.kind} valuation>"


class BooleanValuation(Valuation):
    """Two truth values with and/implies; the hard, classical case."""

    kind = "boolean"
    unit = 1.0
    top = 1.0
    bottom = 0.0

    def contains(self, a) -> bool:
        return a == 0.0 or a == 1.0

    def _all_in_carrier(self, arr):
        return bool(np.all((arr == 0.0) | (arr == 1.0)))

    def leq(self, a, b) -> bool:
        return self.check(a) <= self.check(b)

    def tensor(self, a, b) -> VValue:
        return min(self.check(a), self.check(b))

    def implies(self, a, b) -> VValue:
        a, b = self.check(a), self.check(b)
        return 1.0 if a <= b else 0.0

    def _join2(self, a, b):
        return max(a, b)

    def _meet2(self, a, b):
        return min(a, b)

    def leq_arr(self, a, b):
        return a <= b

    def tensor_arr(self, a, b):
        return np.minimum(a, b)

    def implies_arr(self, a, b):
        return np.where(a <= b, 1.0, 0.0)

    def _join_reduce(self, a, axis):
        return np.max(a, axis=axis)

    def _meet_reduce(self, a, axis):
        return np.min(a, axis=axis)


class FuzzyValuation(Valuation):
    """Graded truth on [0, 1]: minimum for and, Goedel implication."""

    kind = "fuzzy"
    unit = 1.0
    top = 1.0
    bottom = 0.0

    def contains(self, a) -> bool:
        return -EPSILON <= a <= 1.0 + EPSILON

    def _all_in_carrier(self, arr):
        return bool(np.all((arr >= -EPSILON) & (arr <= 1.0 + EPSILON)))

    def leq(self, a, b) -> bool:
        return self.check(a) <= self.check(b) + EPSILON

    def tensor(self, a, b) -> VValue:
        return min(self.check(a), self.check(b))

    def implies(self, a, b) -> VValue:
        a, b = self.check(a), self.check(b)
        return 1.0 if a <= b + EPSILON else b

    def _join2(self, a, b):
        return max(a, b)

    def _meet2(self, a, b):
        return min(a, b)

    def leq_arr(self, a, b):
        return a <= b + EPSILON

    def tensor_arr(self, a, b):
        return np.minimum(a, b)

    def implies_arr(self, a, b):
        return np.where(a <= b + EPSILON, 1.0, b)

    def _join_reduce(self, a, axis):
        return np.max(a, axis=axis)

    def _meet_reduce(self, a, axis):
        return np.min(a, axis=axis)


class RealValuation(Valuation):
    """Extended nonnegative reals [0, inf], ordered downward.

    Smaller numbers are *truer*: the unit (and top) is 0, bottom is
    infinity, composition is addition, and implication is the truncated
    difference ``implies(a, b) = max(0, b - a)``, so that
    ``a + b >= c  iff  a >= c - b`` realizes the adjunction in the
    downward order.
    """

    kind = "real"
    unit = 0.0
    top = 0.0
    bottom = INFINITY

    def contains(self, a) -> bool:
        return a >= -EPSILON  # inf allowed

    def _all_in_carrier(self, arr):
        return bool(np.all(arr >= -EPSILON))

    def leq(self, a, b) -> bool:
        return self.check(a) >= self.check(b) - EPSILON

    def tensor(self, a, b) -> VValue:
        return self.check(a) + self.check(b)

    def implies(self, a, b) -> VValue:
        a, b = self.check(a), self.check(b)
        if a >= b - EPSILON:
            return 0.0
        return b - a

    def _join2(self, a, b):
        return min(a, b)  # numeric min is the downward-order supremum

    def _meet2(self, a, b):
        return max(a, b)

    def leq_arr(self, a, b):
        return a >= b - EPSILON

    def tensor_arr(self, a, b):
        return a + b

    def implies_arr(self, a, b):
        with np.errstate(invalid="ignore"):
            diff = b - a
        return np.where(a >= b - EPSILON, 0.0, diff)

    def _join_reduce(self, a, axis):
        return np.min(a, axis=axis)

    def _meet_reduce(self, a, axis):
        return np.max(a, axis=axis)


BOOLEAN = BooleanValuation()
FUZZY = FuzzyValuation()
REAL = RealValuation()

VALUATIONS = {"boolean": BOOLEAN, "fuzzy": FUZZY, "real": REAL}


def valuation(kind: str) -> Valuation:
    """Look up a valuation by its configuration name."""
    try:
        return VALUATIONS[kind]
    except KeyError:
        raise CarrierError(
            f"unknown valuation kind {kind!r}; expected one of "
            f"{sorted(VALUATIONS)}") from None


def require_same(a: Valuation, b: Valuation) -> Valuation:
    """Raise unless both structures share one valuation."""
    if a.kind != b.kind:
        raise ValuationMismatchError(
            f"cannot mix {a.kind} and {b.kind} valuations")
    return a
