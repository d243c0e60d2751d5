"""Semirings with a partial star, over exact carriers.

Five instances are provided: :data:`BOOLEAN`, :data:`NATURAL`,
:data:`RATIONAL`, :data:`TROPICAL` (min-plus on the closed half-ray
``[0, +inf]``) and :data:`NAT_INF` (naturals extended with ``+inf``).

Matrices and polynomials store raw payloads and call the semiring
methods directly; :class:`SemiringValue` wraps a payload together with
its semiring for the scalar-level API, where mixing semirings is an error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

__all__ = [
    "BOOLEAN",
    "NATURAL",
    "NAT_INF",
    "RATIONAL",
    "SEMIRINGS",
    "TROPICAL",
    "INF",
    "NotStationary",
    "Semiring",
    "SemiringMismatchError",
    "SemiringValue",
    "UNDEFINED",
    "Undefined",
    "add",
    "eq",
    "get_semiring",
    "is_undefined",
    "mul",
    "star_scalar",
]

INF = math.inf


class SemiringMismatchError(ValueError):
    """Operands belong to different semirings (or different contexts)."""


@dataclass(frozen=True)
class Undefined:
    """A star (or closure) that does not exist in the carrier.

    This is an ordinary return value, not an error. It is falsy so that
    ``if result:`` reads naturally at call sites.
    """

    reason: str = "star undefined"

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class NotStationary(Undefined):
    """Partial sums of matrix powers did not stabilise within the budget."""

    iterations: int = 0


UNDEFINED = Undefined()


def is_undefined(x: Any) -> bool:
    return isinstance(x, Undefined)


class Semiring:
    """Base class: ``(k, add, mul, zero, one)`` plus a partial ``star``.

    Subclasses work on raw payloads. ``star`` returns a payload or an
    :class:`Undefined` instance.
    """

    id: str = ""
    is_ring: bool = False
    is_field: bool = False
    is_commutative: bool = True
    is_idempotent: bool = False
    zero: Any = None
    one: Any = None

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def star(self, x):
        raise NotImplementedError

    def neg(self, x):
        raise TypeError(f"semiring {self.id!r} has no additive inverse")

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def coerce(self, x):
        """Turn a Python number (or payload) into a canonical payload."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero

    def __call__(self, x) -> "SemiringValue":
        return SemiringValue(self, self.coerce(x))

    def __repr__(self) -> str:
        return f"<semiring {self.id}>"

    def __reduce__(self):
        return (get_semiring, (self.id,))


def _parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty numeric literal")
    return Fraction(text)


def _format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _format_decimal(x: Fraction) -> str:
    """Exact decimal rendering when the denominator is 2^a 5^b, else p/q."""
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return _format_fraction(x)
    digits = max(twos, fives)
    scaled = x * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


class BooleanSemiring(Semiring):
    id = "bool"
    is_idempotent = True
    zero = False
    one = True

    def add(self, x, y):
        return x or y

    def mul(self, x, y):
        return x and y

    def star(self, x):
        return True

    def coerce(self, x):
        if isinstance(x, bool):
            return x
        if isinstance(x, (int, Fraction)) and x in (0, 1):
            return bool(x)
        if isinstance(x, str):
            return self.parse(x)
        raise ValueError(f"not a boolean: {x!r}")

    def parse(self, text):
        t = str(text).strip().lower()
        if t in ("0", "false"):
            return False
        if t in ("1", "true"):
            return True
        raise ValueError(f"not a boolean literal: {text!r}")

    def format(self, x):
        return "1" if x else "0"


class NaturalSemiring(Semiring):
    id = "nat"
    zero = 0
    one = 1

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def star(self, x):
        # y = x*y + 1 has a natural solution only for x = 0
        if x == 0:
            return 1
        return Undefined(f"{x} has no star in nat")

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            x = x.numerator
        if isinstance(x, int) and x >= 0:
            return x
        raise ValueError(f"not a natural number: {x!r}")

    def parse(self, text):
        t = str(text).strip()
        if not t.isdigit():
            raise ValueError(f"not a natural literal: {text!r}")
        return int(t)

    def format(self, x):
        return str(x)


class RationalSemiring(Semiring):
    id = "rational"
    is_ring = True
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def star(self, x):
        if x == 1:
            return Undefined("1 has no star in a ring")
        return 1 / (1 - x)

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float) and not math.isfinite(x):
            raise ValueError(f"not a rational number: {x!r}")
        if isinstance(x, (int, float, Fraction)):
            return Fraction(x)
        raise ValueError(f"not a rational number: {x!r}")

    def parse(self, text):
        return _parse_fraction(str(text))

    def format(self, x):
        return _format_fraction(x)


class TropicalSemiring(Semiring):
    """min-plus on ``[0, +inf]``; zero is ``+inf`` and one is ``0``."""

    id = "tropical"
    is_idempotent = True
    zero = INF
    one = Fraction(0)

    def add(self, x, y):
        return x if x <= y else y

    def mul(self, x, y):
        if x == INF or y == INF:
            return INF
        return x + y

    def star(self, x):
        # min(x + y, 0) = y forces y = 0 on the half-ray
        return self.one

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float) and x == INF:
            return INF
        if isinstance(x, (int, float, Fraction)) and not isinstance(x, bool):
            v = Fraction(x)
            if v < 0:
                raise ValueError(f"tropical values live in [0, inf]: {x!r}")
            return v
        raise ValueError(f"not a tropical value: {x!r}")

    def parse(self, text):
        t = str(text).strip().lower()
        if t in ("inf", "+inf", "infinity"):
            return INF
        v = _parse_fraction(t)
        if v < 0:
            raise ValueError(f"tropical values live in [0, inf]: {text!r}")
        return v

    def format(self, x):
        if x == INF:
            return "inf"
        return _format_decimal(x)


class NatInfSemiring(Semiring):
    id = "nat_inf"
    zero = 0
    one = 1

    def add(self, x, y):
        if x == INF or y == INF:
            return INF
        return x + y

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if x == INF or y == INF:
            return INF
        return x * y

    def star(self, x):
        # y = x*y + 1: y = 1 for x = 0, otherwise only y = inf works
        return 1 if x == 0 else INF

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float) and x == INF:
            return INF
        if isinstance(x, Fraction) and x.denominator == 1:
            x = x.numerator
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int) and x >= 0:
            return x
        raise ValueError(f"not an extended natural: {x!r}")

    def parse(self, text):
        t = str(text).strip().lower()
        if t in ("inf", "+inf", "infinity"):
            return INF
        if not t.isdigit():
            raise ValueError(f"not an extended natural literal: {text!r}")
        return int(t)

    def format(self, x):
        return "inf" if x == INF else str(x)


BOOLEAN = BooleanSemiring()
NATURAL = NaturalSemiring()
RATIONAL = RationalSemiring()
TROPICAL = TropicalSemiring()
NAT_INF = NatInfSemiring()

SEMIRINGS = {s.id: s for s in (BOOLEAN, NATURAL, RATIONAL, TROPICAL, NAT_INF)}


def get_semiring(semiring: Union[str, Semiring]) -> Semiring:
    if isinstance(semiring, Semiring):
        return semiring
    try:
        return SEMIRINGS[semiring]
    except KeyError:
        raise ValueError(
            f"unknown semiring {semiring!r}; expected one of {sorted(SEMIRINGS)}"
        ) from None


@dataclass(frozen=True)
class SemiringValue:
    """A payload tagged with its semiring."""

    semiring: Semiring
    payload: Any

    def _check(self, other: "SemiringValue") -> None:
        if not isinstance(other, SemiringValue):
            raise TypeError(f"expected SemiringValue, got {type(other).__name__}")
        if other.semiring is not self.semiring:
            raise SemiringMismatchError(
                f"cannot combine {self.semiring.id} with {other.semiring.id}"
            )

    def __add__(self, other):
        self._check(other)
        return SemiringValue(self.semiring, self.semiring.add(self.payload, other.payload))

    def __mul__(self, other):
        self._check(other)
        return SemiringValue(self.semiring, self.semiring.mul(self.payload, other.payload))

    def __eq__(self, other):
        if not isinstance(other, SemiringValue):
            return NotImplemented
        self._check(other)
        return self.payload == other.payload

    def __hash__(self):
        return hash((self.semiring.id, self.payload))

    def star(self):
        y = self.semiring.star(self.payload)
        if is_undefined(y):
            return y
        return SemiringValue(self.semiring, y)

    def __str__(self):
        return self.semiring.format(self.payload)

    def __repr__(self):
        return f"{self.semiring.id}({self})"


def add(x: SemiringValue, y: SemiringValue) -> SemiringValue:
    return x + y


def mul(x: SemiringValue, y: SemiringValue) -> SemiringValue:
    return x * y


def star_scalar(x: SemiringValue):
    """Two-sided star of ``x``, or :class:`Undefined` if none exists."""
    return x.star()


def eq(x: SemiringValue, y: SemiringValue) -> bool:
    return x == y
