"""Exact scalars: the field Q(i) of Gaussian rationals.

Components are `fractions.Fraction`, which already enforces the canonical
form (positive denominator, gcd-reduced), so equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_COERCIBLE = (int, Fraction)


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i). Immutable and hashable."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GR_ONE / self) ** (-k)
        out, base = GR_ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        return GR_ONE / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = f"{self.im}i" if abs(self.im) != 1 else ("i" if self.im > 0 else "-i")
        if not self.re:
            return im
        return f"{self.re}+{im}" if self.im > 0 else f"{self.re}{im}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, _COERCIBLE):
        return GaussianRational(Fraction(value))
    return NotImplemented


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor accepting ints, Fractions, or 'p/q' strings."""
    return GaussianRational(Fraction(re), Fraction(im))


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


def _fraction(text: str) -> Fraction:
    if not _RAT.match(text):
        raise ParseError(f"bad rational literal: {text!r}")
    return Fraction(text)


def parse_scalar(text) -> GaussianRational:
    """Parse a scalar from the object form or the shorthand string form.

    Accepted: {"re": "1/2", "im": "-3"} (either key optional), "a/b+c/d i",
    plain rationals "-3/2", bare "i"/"-i", or ints. The imaginary
    coefficient is whatever immediately precedes the trailing "i"; a real
    part must be separated from it by an explicit sign.
    """
    if isinstance(text, GaussianRational):
        return text
    if isinstance(text, int):
        return gr(text)
    if isinstance(text, dict):
        extra = set(text) - {"re", "im"}
        if extra:
            raise ParseError(f"unknown scalar keys: {sorted(extra)}")
        return gr(_fraction(str(text.get("re", 0))), _fraction(str(text.get("im", 0))))
    if not isinstance(text, str):
        raise ParseError(f"cannot parse scalar from {type(text).__name__}")
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty scalar literal")
    if not s.endswith("i"):
        return gr(_fraction(s))
    # Locate the sign separating the real part from the imaginary term.
    split = -1
    for idx in range(1, len(s) - 1):
        if s[idx] in "+-" and s[idx - 1] not in "/+-":
            split = idx
    re_text = s[:split] if split != -1 else ""
    im_text = s[split:-1] if split != -1 else s[:-1]
    if im_text in ("", "+"):
        im_part = Fraction(1)
    elif im_text == "-":
        im_part = Fraction(-1)
    else:
        im_part = _fraction(im_text)
    return gr(_fraction(re_text) if re_text else Fraction(0), im_part)


def scalar_to_json(x: GaussianRational) -> dict:
    """Object form; "/1" omitted by Fraction's own formatting."""
    return {"re": str(x.re), "im": str(x.im)}
