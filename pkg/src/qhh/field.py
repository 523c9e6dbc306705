"""Exact scalar fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """A field descriptor.

    ``Field()`` is Q with elements stored as ``gmpy2.mpq`` (falling back to
    :class:`fractions.Fraction` when gmpy2 is missing);
    ``Field(p)`` is F_p with elements stored as ints in ``range(p)``.
    Elements are plain Python numbers, so arithmetic uses the usual
    operators followed by :meth:`norm`.
    """

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValidationError(f"field characteristic {p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``q``/``rationals`` or ``fp:<p>``."""
        s = text.strip().lower()
        if s in ("q", "qq", "rationals", "0"):
            return cls()
        if s.startswith("fp:"):
            try:
                return cls(int(s[3:]))
            except ValueError:
                pass
        raise ValidationError(f"unknown field {text!r}; use 'q' or 'fp:<prime>'")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0 if self.p else _rational(0)

    @property
    def one(self):
        return 1 if self.p else _rational(1)

    def __call__(self, x):
        if self.p:
            d = int(x.denominator)
            if d != 1:
                return int(x.numerator) * pow(d, -1, self.p) % self.p
            return int(x) % self.p
        return _rational(x)

    def norm(self, x):
        return x % self.p if self.p else x

    def inv(self, x):
        if self.p:
            return pow(x, -1, self.p)
        return 1 / x

    def to_str(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if not self.p else f"Field(F_{self.p})"

    def describe(self) -> str:
        return "rationals" if not self.p else f"fp:{self.p}"


QQ = Field()
